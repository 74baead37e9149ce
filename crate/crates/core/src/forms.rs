//! Polynomial differential forms on `C^n` and their `m`-fold tensor
//! powers, stored as polynomials in `x_{ij}` times wedge monomials in
//! `dx_{ij}`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::free_algebra::MultiDegree;
use crate::linalg::{rank, Arithmetic, Rational, SparseVector};
use crate::poly::{monomials_of_degree, var_index, CommPoly, Monomial};

/// Sign of `dx_A ∧ dx_B` relative to `dx_{A ∪ B}`, or zero if they overlap.
fn wedge_sign(a: u64, b: u64) -> i32 {
    if a & b != 0 {
        return 0;
    }
    let mut swaps = 0;
    let mut rest = b;
    while rest != 0 {
        let q = rest.trailing_zeros();
        swaps += (a >> q).count_ones();
        rest &= rest - 1;
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

fn int(k: i64) -> Rational {
    Rational::from_integer(BigInt::from(k))
}

/// Element of `O_mn ⊗ Λ^{mn}`. Wedge monomials are bitmasks over the
/// `dx_{ij}`, indexed like the variables (column `j` occupies bits
/// `(j-1)n .. jn`).
#[derive(Clone, PartialEq, Eq)]
pub struct PolyForm {
    n: usize,
    m: usize,
    terms: BTreeMap<(Monomial, u64), Rational>,
}

impl PolyForm {
    pub fn zero(n: usize, m: usize) -> Self {
        assert!(n * m <= 64, "at most 64 differentials are supported");
        PolyForm {
            n,
            m,
            terms: BTreeMap::new(),
        }
    }

    /// `c · x^mono · dx_mask`.
    pub fn term(n: usize, m: usize, mono: Monomial, mask: u64, c: Rational) -> Self {
        let mut out = Self::zero(n, m);
        out.add_term(mono, mask, c);
        out
    }

    pub fn from_poly(n: usize, m: usize, p: &CommPoly) -> Self {
        let mut out = Self::zero(n, m);
        for (e, c) in p.terms() {
            out.add_term(e.clone(), 0, c.clone());
        }
        out
    }

    /// The coordinate function `x_{ij}`.
    pub fn x(n: usize, m: usize, i: usize, j: usize) -> Self {
        Self::from_poly(n, m, &CommPoly::var(n * m, var_index(n, i, j)))
    }

    /// The one-form `dx_{ij}`.
    pub fn dx(n: usize, m: usize, i: usize, j: usize) -> Self {
        Self::term(
            n,
            m,
            vec![0; n * m],
            1 << var_index(n, i, j),
            Rational::one(),
        )
    }

    pub fn one(n: usize, m: usize) -> Self {
        Self::term(n, m, vec![0; n * m], 0, Rational::one())
    }

    fn add_term(&mut self, mono: Monomial, mask: u64, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((mono, mask)) {
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

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn terms(&self) -> &BTreeMap<(Monomial, u64), Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn factor_mask(&self, j: usize) -> u64 {
        ((1u64 << self.n) - 1) << ((j - 1) * self.n)
    }

    /// Exterior degree of each factor of one wedge monomial.
    pub fn factor_ranks(&self, mask: u64) -> Vec<u32> {
        (1..=self.m)
            .map(|j| (mask & self.factor_mask(j)).count_ones())
            .collect()
    }

    /// Ranks occurring among the terms.
    pub fn ranks(&self) -> Vec<u32> {
        let mut r: Vec<u32> = self
            .terms
            .keys()
            .map(|(_, mask)| mask.count_ones())
            .collect();
        r.sort_unstable();
        r.dedup();
        r
    }

    /// Whether every term has even exterior degree in every factor.
    pub fn is_even(&self) -> bool {
        self.terms
            .keys()
            .all(|(_, mask)| self.factor_ranks(*mask).iter().all(|r| r % 2 == 0))
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.m != other.m {
            return Err(Error::ShapeMismatch(self.n, self.m, other.n, other.m));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for ((e, mask), c) in &other.terms {
            out.add_term(e.clone(), *mask, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&int(-1)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.n, self.m);
        for ((e, mask), x) in &self.terms {
            out.add_term(e.clone(), *mask, x * c);
        }
        out
    }

    /// Multiplication by a function in `O_mn`.
    pub fn mul_poly(&self, p: &CommPoly) -> Result<Self> {
        if p.nvars() != self.n * self.m {
            return Err(Error::DimensionMismatch {
                expected: self.n * self.m,
                found: p.nvars(),
            });
        }
        self.wedge(&Self::from_poly(self.n, self.m, p))
    }

    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = Self::zero(self.n, self.m);
        for ((ea, ma), x) in &self.terms {
            for ((eb, mb), y) in &other.terms {
                let sign = wedge_sign(*ma, *mb);
                if sign == 0 {
                    continue;
                }
                let mono = ea.iter().zip(eb).map(|(p, q)| p + q).collect();
                out.add_term(mono, ma | mb, x * y * int(sign as i64));
            }
        }
        Ok(out)
    }

    /// Exterior derivative in the variables of one tensor factor.
    pub fn exterior_d(&self, factor: usize) -> Result<Self> {
        if factor == 0 || factor > self.m {
            return Err(Error::FactorOutOfRange { factor, m: self.m });
        }
        let mut out = Self::zero(self.n, self.m);
        for ((e, mask), c) in &self.terms {
            for i in 1..=self.n {
                let g = var_index(self.n, i, factor);
                if e[g] == 0 || mask & (1 << g) != 0 {
                    continue;
                }
                let sign = if (mask & ((1u64 << g) - 1)).count_ones() % 2 == 0 {
                    1
                } else {
                    -1
                };
                let mut f = e.clone();
                f[g] -= 1;
                out.add_term(f, mask | (1 << g), c * int(sign * e[g] as i64));
            }
        }
        Ok(out)
    }

    /// Total exterior derivative, summed over all factors.
    pub fn total_d(&self) -> Self {
        (1..=self.m).fold(Self::zero(self.n, self.m), |acc, j| {
            acc.add(&self.exterior_d(j).expect("factor in range"))
                .expect("same shape")
        })
    }

    /// `ω_1 ⊗ ... ⊗ ω_m` for single-factor forms, the `j`-th placed in the
    /// variables of column `j`.
    pub fn tensor(factors: &[PolyForm]) -> Result<Self> {
        let m = factors.len();
        let n = factors.first().map_or(0, |f| f.n);
        let mut acc = Self::one(n, m);
        for (j, f) in factors.iter().enumerate() {
            if f.m != 1 || f.n != n {
                return Err(Error::ShapeMismatch(n, 1, f.n, f.m));
            }
            let mut placed = Self::zero(n, m);
            for ((e, mask), c) in &f.terms {
                let mut mono = vec![0; n * m];
                mono[j * n..(j + 1) * n].copy_from_slice(e);
                placed.add_term(mono, mask << (j * n), c.clone());
            }
            acc = acc.wedge(&placed)?;
        }
        Ok(acc)
    }

    /// Restriction to the diagonal: `x_{ij} ↦ x_i`, `dx_{ij} ↦ dx_i`.
    pub fn merge(&self) -> Self {
        let n = self.n;
        let mut out = Self::zero(n, 1);
        'terms: for ((e, mask), c) in &self.terms {
            let mut mono = vec![0; n];
            for (v, &a) in e.iter().enumerate() {
                mono[v % n] += a;
            }
            let mut merged = 0u64;
            let mut sign = 1i64;
            let mut rest = *mask;
            while rest != 0 {
                let g = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let bit = 1u64 << (g % n);
                let s = wedge_sign(merged, bit);
                if s == 0 {
                    continue 'terms;
                }
                sign *= s as i64;
                merged |= bit;
            }
            out.add_term(mono, merged, c * int(sign));
        }
        out
    }

    /// Drops every term of total exterior degree above `r`.
    pub fn rank_truncate(&self, r: u32) -> Self {
        let mut out = Self::zero(self.n, self.m);
        for ((e, mask), c) in &self.terms {
            if mask.count_ones() <= r {
                out.add_term(e.clone(), *mask, c.clone());
            }
        }
        out
    }
}

impl fmt::Debug for PolyForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PolyForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let name = |v: usize| -> String {
            if self.m == 1 {
                format!("{}", v + 1)
            } else {
                format!("{}{}", v % self.n + 1, v / self.n + 1)
            }
        };
        for (k, ((e, mask), c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (v, &a) in e.iter().enumerate() {
                match a {
                    0 => {}
                    1 => write!(f, " x{}", name(v))?,
                    _ => write!(f, " x{}^{a}", name(v))?,
                }
            }
            for g in 0..64 {
                if mask & (1 << g) != 0 {
                    write!(f, " dx{}", name(g))?;
                }
            }
        }
        Ok(())
    }
}

/// `φ(ω_1 ⊗ ω_2) = dω_1 ∧ dω_2` restricted to the diagonal, for a form on
/// two tensor factors whose terms are even in each factor.
pub fn phi_tensor(eta: &PolyForm) -> Result<PolyForm> {
    if eta.m != 2 {
        return Err(Error::ShapeMismatch(eta.n, 2, eta.n, eta.m));
    }
    if let Some(r) = eta
        .terms
        .keys()
        .flat_map(|(_, mask)| eta.factor_ranks(*mask))
        .find(|r| r % 2 == 1)
    {
        return Err(Error::OddRank { rank: r as usize });
    }
    Ok(eta.exterior_d(2)?.exterior_d(1)?.merge())
}

/// `φ(ω_1 ⊗ ω_2)` for two even single-factor forms.
pub fn phi(omega1: &PolyForm, omega2: &PolyForm) -> Result<PolyForm> {
    for w in [omega1, omega2] {
        if let Some(r) = w.ranks().into_iter().find(|r| r % 2 == 1) {
            return Err(Error::OddRank { rank: r as usize });
        }
    }
    phi_tensor(&PolyForm::tensor(&[omega1.clone(), omega2.clone()])?)
}

/// The vector field `f ∂/∂y_i` with `f ∈ C[y_1, ..., y_n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorField {
    pub component: usize,
    pub coefficient: CommPoly,
}

impl VectorField {
    pub fn new(component: usize, coefficient: CommPoly) -> Result<Self> {
        let n = coefficient.nvars();
        if component == 0 || component > n {
            return Err(Error::IndexOutOfRange {
                index: component,
                dim: n,
            });
        }
        Ok(VectorField {
            component,
            coefficient,
        })
    }

    /// `f_j`: the coefficient with `y_l` replaced by `x_{lj}`.
    pub fn coefficient_in_column(&self, m: usize, j: usize) -> CommPoly {
        let n = self.coefficient.nvars();
        let images: Vec<CommPoly> = (1..=n)
            .map(|l| CommPoly::var(n * m, var_index(n, l, j)))
            .collect();
        self.coefficient
            .substitute(&images)
            .expect("one image per variable")
    }
}

/// Diagonal action of `f ∂/∂y_i` on `O_mn`: the derivation with
/// `x_{i'j} ↦ δ_{i i'} f_j`.
pub fn act_vector_field(v: &VectorField, p: &CommPoly, m: usize) -> Result<CommPoly> {
    let n = v.coefficient.nvars();
    if p.nvars() != n * m {
        return Err(Error::DimensionMismatch {
            expected: n * m,
            found: p.nvars(),
        });
    }
    (1..=m).try_fold(CommPoly::zero(n * m), |acc, j| {
        let partial = p.derivative(var_index(n, v.component, j));
        acc.add(&partial.mul(&v.coefficient_in_column(m, j))?)
    })
}

fn check_generator_indices(
    m: usize,
    n: usize,
    k: usize,
    i_list: &[usize],
    j_list: &[usize],
) -> Result<()> {
    if k < 2 || k > m {
        return Err(Error::InvalidArgument(format!(
            "need 2 <= k <= m, got k={k}, m={m}"
        )));
    }
    for list in [i_list, j_list] {
        if list.len() != k - 1 {
            return Err(Error::DimensionMismatch {
                expected: k - 1,
                found: list.len(),
            });
        }
        if let Some(&bad) = list.iter().find(|&&i| i == 0 || i > n) {
            return Err(Error::IndexOutOfRange { index: bad, dim: n });
        }
    }
    Ok(())
}

fn column_difference(n: usize, m: usize, i: usize, s: usize, k: usize) -> CommPoly {
    CommPoly::var(n * m, var_index(n, i, s))
        .sub(&CommPoly::var(n * m, var_index(n, i, k)))
        .expect("same ring")
}

/// `Π_{s<k} (x_{i_s s} - x_{i_s k})(x_{j_s s} - x_{j_s k})`.
pub fn ideal_generators(
    m: usize,
    n: usize,
    k: usize,
    i_list: &[usize],
    j_list: &[usize],
) -> Result<CommPoly> {
    check_generator_indices(m, n, k, i_list, j_list)?;
    let mut acc = CommPoly::one(n * m);
    for s in 1..k {
        acc = acc.mul(&column_difference(n, m, i_list[s - 1], s, k))?;
        acc = acc.mul(&column_difference(n, m, j_list[s - 1], s, k))?;
    }
    Ok(acc)
}

/// The action on a generator expanded factor by factor with the Leibniz
/// rule: each factor `x_{i_s s} - x_{i_s k}` is replaced by `f_s - f_k`
/// when `i_s` is the field's component.
pub fn act_on_generator_by_leibniz(
    v: &VectorField,
    m: usize,
    k: usize,
    i_list: &[usize],
    j_list: &[usize],
) -> Result<CommPoly> {
    let n = v.coefficient.nvars();
    let g = ideal_generators(m, n, k, i_list, j_list)?;
    let f_k = v.coefficient_in_column(m, k);
    let mut acc = CommPoly::zero(n * m);
    for s in 1..k {
        let shift = v.coefficient_in_column(m, s).sub(&f_k)?;
        for idx in [i_list[s - 1], j_list[s - 1]] {
            if idx != v.component {
                continue;
            }
            let factor = column_difference(n, m, idx, s, k);
            let cofactor = g
                .divide_exact(&factor)
                .ok_or_else(|| Error::InvalidArgument("generator factor does not divide".into()))?;
            acc = acc.add(&shift.mul(&cofactor)?)?;
        }
    }
    Ok(acc)
}

/// Random even single-factor form on `C^n` with coefficient degree at most
/// `max_poly_degree` and exterior degree at most `max_rank`.
pub fn random_even_form<R: Rng>(
    n: usize,
    max_poly_degree: u32,
    max_rank: u32,
    rng: &mut R,
) -> PolyForm {
    let mut out = PolyForm::zero(n, 1);
    let num_terms = rng.gen_range(1..=3);
    let ranks: Vec<u32> = (0..=max_rank.min(n as u32)).step_by(2).collect();
    for _ in 0..num_terms {
        let r = ranks[rng.gen_range(0..ranks.len())];
        let mut mask = 0u64;
        while mask.count_ones() < r {
            mask |= 1 << rng.gen_range(0..n);
        }
        let d = rng.gen_range(0..=max_poly_degree);
        let monos = monomials_of_degree(n, d);
        let mono = monos[rng.gen_range(0..monos.len())].clone();
        let mut c = 0;
        while c == 0 {
            c = rng.gen_range(-3i64..=3);
        }
        out.add_term(mono, mask, int(c));
    }
    out
}

/// Random even form whose terms all have exterior degree exactly `rank`.
pub fn random_form_of_rank<R: Rng>(
    n: usize,
    max_poly_degree: u32,
    rank: u32,
    rng: &mut R,
) -> PolyForm {
    let mut out = PolyForm::zero(n, 1);
    while out.is_zero() {
        for _ in 0..rng.gen_range(1..=3) {
            let mut mask = 0u64;
            while mask.count_ones() < rank {
                mask |= 1 << rng.gen_range(0..n);
            }
            let d = rng.gen_range(0..=max_poly_degree);
            let monos = monomials_of_degree(n, d);
            let mono = monos[rng.gen_range(0..monos.len())].clone();
            out.add_term(mono, mask, int(rng.gen_range(1i64..=3)));
        }
    }
    out
}

/// Basis of the `k`-forms of one multidegree: pairs of a coefficient
/// monomial and a wedge mask with `x^a dx_S` of weight `a + 1_S`.
fn forms_basis(n: usize, k: u32, md: &MultiDegree) -> Vec<(Monomial, u64)> {
    (0u64..1 << n)
        .filter(|mask| mask.count_ones() == k)
        .filter_map(|mask| {
            let mono: Option<Monomial> = (0..n)
                .map(|i| {
                    let used = ((mask >> i) & 1) as usize;
                    md.0[i].checked_sub(used).map(|a| a as u32)
                })
                .collect();
            mono.map(|mono| (mono, mask))
        })
        .collect()
}

/// Dimensions of closed polynomial `k`-forms on `C^n` by multidegree,
/// computed as the kernel of `d`.
pub fn closed_form_dims(n: usize, k: u32, deg_max: usize) -> Result<BTreeMap<MultiDegree, usize>> {
    let mut out = BTreeMap::new();
    for md in MultiDegree::all_up_to(n, deg_max) {
        let source = forms_basis(n, k, &md);
        if source.is_empty() {
            continue;
        }
        let target = forms_basis(n, k + 1, &md);
        let index: BTreeMap<(Monomial, u64), usize> = target
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, key)| (key, i))
            .collect();
        let images: Vec<SparseVector> = source
            .iter()
            .map(|(mono, mask)| {
                let form = PolyForm::term(n, 1, mono.clone(), *mask, Rational::one());
                let df = form.exterior_d(1).expect("single factor");
                SparseVector::new(
                    target.len(),
                    df.terms().iter().map(|(key, c)| (index[key], c.clone())),
                )
            })
            .collect::<Result<_>>()?;
        let r = rank(&images, target.len(), Arithmetic::Rational)?;
        if source.len() > r {
            out.insert(md, source.len() - r);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn x1(n: usize, i: usize) -> PolyForm {
        PolyForm::x(n, 1, i, 1)
    }

    fn dx1(n: usize, i: usize) -> PolyForm {
        PolyForm::dx(n, 1, i, 1)
    }

    #[test]
    fn wedge_signs() {
        let a = dx1(2, 1).wedge(&dx1(2, 2)).unwrap();
        let b = dx1(2, 2).wedge(&dx1(2, 1)).unwrap();
        assert_eq!(a, b.scale(&int(-1)));
        assert!(dx1(2, 1).wedge(&dx1(2, 1)).unwrap().is_zero());
        let c = x1(2, 1)
            .wedge(&dx1(2, 2))
            .unwrap()
            .wedge(&dx1(2, 1))
            .unwrap();
        assert_eq!(c, x1(2, 1).wedge(&a).unwrap().scale(&int(-1)));
    }

    #[test]
    fn derivative_examples() {
        let f = x1(2, 1).wedge(&x1(2, 2)).unwrap();
        let expected = x1(2, 2)
            .wedge(&dx1(2, 1))
            .unwrap()
            .add(&x1(2, 1).wedge(&dx1(2, 2)).unwrap())
            .unwrap();
        assert_eq!(f.exterior_d(1).unwrap(), expected);
        assert!(dx1(2, 1).exterior_d(1).unwrap().is_zero());
        let g = x1(2, 1).wedge(&dx1(2, 2)).unwrap();
        assert_eq!(
            g.exterior_d(1).unwrap(),
            dx1(2, 1).wedge(&dx1(2, 2)).unwrap()
        );
        assert_eq!(
            f.exterior_d(2),
            Err(Error::FactorOutOfRange { factor: 2, m: 1 })
        );
    }

    #[test]
    fn shape_mismatch() {
        assert!(dx1(2, 1).wedge(&dx1(3, 1)).is_err());
    }

    #[test]
    fn phi_of_coordinates() {
        let p = phi(&x1(2, 1), &x1(2, 2)).unwrap();
        assert_eq!(p, dx1(2, 1).wedge(&dx1(2, 2)).unwrap());
        assert_eq!(phi(&dx1(2, 1), &x1(2, 1)), Err(Error::OddRank { rank: 1 }));
    }

    #[test]
    fn vector_field_examples() {
        let y1 = CommPoly::var(2, 0);
        let v = VectorField::new(1, y1.pow(2)).unwrap();
        let x11 = CommPoly::var(2, 0);
        assert_eq!(act_vector_field(&v, &x11, 1).unwrap(), x11.pow(2));
        let w = VectorField::new(1, CommPoly::var(2, 1)).unwrap();
        let x12 = CommPoly::var(4, var_index(2, 1, 2));
        let x22 = CommPoly::var(4, var_index(2, 2, 2));
        assert_eq!(act_vector_field(&w, &x12, 2).unwrap(), x22);
        assert!(VectorField::new(3, CommPoly::var(2, 0)).is_err());
    }

    #[test]
    fn generator_examples() {
        let g = ideal_generators(2, 2, 2, &[1], &[2]).unwrap();
        let a = column_difference(2, 2, 1, 1, 2);
        let b = column_difference(2, 2, 2, 1, 2);
        assert_eq!(g, a.mul(&b).unwrap());
        assert_eq!(ideal_generators(2, 2, 2, &[1], &[1]).unwrap(), a.pow(2));
        assert_eq!(
            ideal_generators(3, 2, 3, &[1, 2], &[1, 1])
                .unwrap()
                .total_degree(),
            Some(4)
        );
        assert!(ideal_generators(2, 2, 3, &[1, 1], &[1, 1]).is_err());
        assert!(ideal_generators(2, 2, 2, &[3], &[1]).is_err());
    }

    #[test]
    fn leibniz_expansion_matches_action() {
        let n = 2;
        let m = 3;
        for f in [
            CommPoly::var(n, 1),
            CommPoly::var(n, 0).pow(2),
            CommPoly::one(n),
        ] {
            for comp in 1..=n {
                let v = VectorField::new(comp, f.clone()).unwrap();
                let (i_list, j_list) = ([1, 2], [2, 2]);
                let g = ideal_generators(m, n, 3, &i_list, &j_list).unwrap();
                let direct = act_vector_field(&v, &g, m).unwrap();
                let expanded = act_on_generator_by_leibniz(&v, m, 3, &i_list, &j_list).unwrap();
                assert_eq!(direct, expanded);
            }
        }
    }

    #[test]
    fn merge_identifies_columns() {
        let eta = PolyForm::x(2, 2, 1, 2)
            .wedge(&PolyForm::dx(2, 2, 2, 1))
            .unwrap();
        assert_eq!(eta.merge(), x1(2, 1).wedge(&dx1(2, 2)).unwrap());
        let clash = PolyForm::dx(2, 2, 1, 1)
            .wedge(&PolyForm::dx(2, 2, 1, 2))
            .unwrap();
        assert!(clash.merge().is_zero());
    }

    #[test]
    fn rank_truncation() {
        let top =
            PolyForm::tensor(&[dx1(2, 1).wedge(&dx1(2, 2)).unwrap(), PolyForm::one(2, 1)]).unwrap();
        assert!(top.rank_truncate(0).is_zero());
        assert_eq!(top.rank_truncate(2), top);
    }

    #[test]
    fn closed_forms_match_de_rham_recursion() {
        use crate::characters::closed_forms_character;
        for n in 1..=3 {
            for k in 0..=n as u32 {
                let direct = closed_form_dims(n, k, 6).unwrap();
                let chi = closed_forms_character(n, k as usize, 6);
                let from_char: BTreeMap<MultiDegree, usize> = chi
                    .coefficients()
                    .iter()
                    .map(|(e, c)| (e.clone(), c.to_integer().try_into().unwrap()))
                    .collect();
                assert_eq!(direct, from_char, "n={n}, k={k}");
            }
        }
    }

    #[test]
    fn d_squared_vanishes() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 2..=4 {
            for _ in 0..20 {
                let a = random_even_form(n, 3, n as u32, &mut rng);
                let b = random_even_form(n, 3, n as u32, &mut rng);
                let t = PolyForm::tensor(&[a.clone(), b]).unwrap();
                for j in 1..=2 {
                    for l in 1..=2 {
                        assert!(t
                            .exterior_d(j)
                            .unwrap()
                            .exterior_d(l)
                            .unwrap()
                            .add(&t.exterior_d(l).unwrap().exterior_d(j).unwrap())
                            .unwrap()
                            .is_zero());
                    }
                }
                assert!(a.exterior_d(1).unwrap().exterior_d(1).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn graded_commutativity() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let a = random_even_form(3, 2, 2, &mut rng).exterior_d(1).unwrap();
            let b = random_even_form(3, 2, 2, &mut rng);
            let c = random_even_form(3, 2, 2, &mut rng).exterior_d(1).unwrap();
            assert_eq!(a.wedge(&b).unwrap(), b.wedge(&a).unwrap());
            assert_eq!(a.wedge(&c).unwrap(), c.wedge(&a).unwrap().scale(&int(-1)));
        }
    }

    #[test]
    fn phi_raises_rank_by_two() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..30 {
            let a = random_form_of_rank(4, 2, 2, &mut rng);
            let b = random_form_of_rank(4, 2, 0, &mut rng);
            let p = phi(&a, &b).unwrap();
            if !p.is_zero() {
                assert_eq!(p.ranks(), vec![4]);
            }
        }
    }
}
