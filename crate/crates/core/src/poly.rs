//! Commutative polynomials over the rationals in the variables `x_{ij}`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Rational;

/// Exponent vector.
pub type Monomial = Vec<u32>;

/// Index of `x_{ij}` (one-based `i <= n`, `j <= m`) among the `n·m`
/// variables: columns are contiguous.
pub fn var_index(n: usize, i: usize, j: usize) -> usize {
    (j - 1) * n + (i - 1)
}

pub fn degree(mono: &[u32]) -> u32 {
    mono.iter().sum()
}

/// Whether `a` divides `b`.
pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn lcm(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// All monomials of total degree `d` in `nvars` variables.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(left: u32, idx: usize, cur: &mut Monomial, out: &mut Vec<Monomial>) {
        if idx + 1 == cur.len() {
            cur[idx] = left;
            out.push(cur.clone());
            cur[idx] = 0;
            return;
        }
        for a in 0..=left {
            cur[idx] = a;
            rec(left - a, idx + 1, cur, out);
        }
        cur[idx] = 0;
    }
    if nvars == 0 {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    rec(d, 0, &mut vec![0; nvars], &mut out);
    out
}

/// Sparse polynomial with rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct CommPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl CommPoly {
    pub fn zero(nvars: usize) -> Self {
        CommPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::from_terms(nvars, [(vec![0; nvars], c)])
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    /// The variable with index `idx`.
    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut e = vec![0; nvars];
        e[idx] = 1;
        Self::from_terms(nvars, [(e, Rational::one())])
    }

    pub fn monomial(mono: Monomial, c: Rational) -> Self {
        Self::from_terms(mono.len(), [(mono, c)])
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut out = Self::zero(nvars);
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    pub(crate) fn add_term(&mut self, e: Monomial, c: Rational) {
        debug_assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest total degree of a term, `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| degree(e)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| degree(e));
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms.iter().map(|(e, x)| (e.clone(), x * c)),
        )
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.iter().zip(b).map(|(p, q)| p + q).collect(), x * y);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.nvars), |acc, _| {
            acc.mul(self).expect("same ring")
        })
    }

    /// Partial derivative in the variable with index `idx`.
    pub fn derivative(&self, idx: usize) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms.iter().filter(|(e, _)| e[idx] > 0).map(|(e, c)| {
                let mut f = e.clone();
                f[idx] -= 1;
                (f, c * Rational::from_integer(BigInt::from(e[idx])))
            }),
        )
    }

    /// Substitutes polynomials (all in one target ring) for the variables.
    pub fn substitute(&self, images: &[CommPoly]) -> Result<Self> {
        if images.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: images.len(),
            });
        }
        let target = images.first().map_or(0, CommPoly::nvars);
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut term = Self::constant(target, c.clone());
            for (v, &a) in e.iter().enumerate() {
                if a > 0 {
                    term = term.mul(&images[v].pow(a))?;
                }
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Exact quotient by `divisor`, or `None` if it does not divide.
    pub fn divide_exact(&self, divisor: &Self) -> Option<Self> {
        let order =
            |e: &Monomial| -> (u32, Vec<u32>) { (degree(e), e.iter().rev().copied().collect()) };
        let (lead_d, lead_c) = divisor.terms.iter().max_by_key(|(e, _)| order(e))?;
        let mut rest = self.clone();
        let mut quotient = Self::zero(self.nvars);
        while let Some((e, c)) = rest
            .terms
            .iter()
            .max_by_key(|(e, _)| order(e))
            .map(|(e, c)| (e.clone(), c.clone()))
        {
            if !divides(lead_d, &e) {
                return None;
            }
            let q = Self::monomial(
                e.iter().zip(lead_d).map(|(a, b)| a - b).collect(),
                c / lead_c,
            );
            rest = rest.sub(&q.mul(divisor).ok()?).ok()?;
            quotient = quotient.add(&q).ok()?;
        }
        Some(quotient)
    }
}

impl fmt::Debug for CommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (v, &a) in e.iter().enumerate() {
                match a {
                    0 => {}
                    1 => write!(f, "*v{v}")?,
                    _ => write!(f, "*v{v}^{a}")?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(k: i64) -> Rational {
        Rational::from_integer(BigInt::from(k))
    }

    #[test]
    fn columns_are_contiguous() {
        assert_eq!(var_index(2, 1, 1), 0);
        assert_eq!(var_index(2, 2, 1), 1);
        assert_eq!(var_index(2, 1, 2), 2);
        assert_eq!(var_index(3, 2, 2), 4);
    }

    #[test]
    fn product_and_derivative() {
        let x = CommPoly::var(2, 0);
        let y = CommPoly::var(2, 1);
        let p = x.add(&y).unwrap().pow(2);
        assert_eq!(p.terms().len(), 3);
        assert_eq!(p.derivative(0), x.add(&y).unwrap().scale(&int(2)));
        assert!(p.is_homogeneous());
    }

    #[test]
    fn substitution_composes() {
        let x = CommPoly::var(1, 0);
        let p = x.pow(2).add(&x).unwrap();
        let image = CommPoly::var(2, 0).sub(&CommPoly::var(2, 1)).unwrap();
        let q = p.substitute(&[image.clone()]).unwrap();
        assert_eq!(q, image.pow(2).add(&image).unwrap());
    }

    #[test]
    fn exact_division() {
        let x = CommPoly::var(2, 0);
        let y = CommPoly::var(2, 1);
        let d = x.sub(&y).unwrap();
        let p = d.mul(&x.add(&y).unwrap()).unwrap();
        assert_eq!(p.divide_exact(&d), Some(x.add(&y).unwrap()));
        assert_eq!(x.divide_exact(&d), None);
    }

    #[test]
    fn monomial_enumeration_counts() {
        assert_eq!(monomials_of_degree(4, 2).len(), 10);
        assert_eq!(monomials_of_degree(6, 8).len(), 1287);
    }
}
