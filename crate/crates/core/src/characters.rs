//! Truncated torus characters and their decomposition into the
//! tensor-field modules `F_D`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::free_algebra::MultiDegree;
use crate::lcs::BQuotientCharacter;
use crate::linalg::Rational;

/// A Young diagram as a weakly decreasing list of row lengths. Trailing
/// zeros are dropped on construction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::InvalidArgument(format!(
                "partition parts must be weakly decreasing: {parts:?}"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero rows.
    pub fn rows(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// A single column of `k` boxes.
    pub fn is_one_column(&self) -> bool {
        !self.0.is_empty() && self.0[0] == 1
    }

    /// Row lengths padded with zeros to `n` entries.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        let mut v = self.0.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    /// All partitions of `size` with at most `max_rows` rows, in reverse
    /// lexicographic order.
    pub fn all(size: usize, max_rows: usize) -> Vec<Partition> {
        fn rec(
            left: usize,
            cap: usize,
            rows: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if left == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if rows == 0 {
                return;
            }
            for p in (1..=cap.min(left)).rev() {
                cur.push(p);
                rec(left - p, p, rows - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(size, size, max_rows, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

fn int(k: i64) -> Rational {
    Rational::from_integer(BigInt::from(k))
}

/// Formal power series in `t_1, ..., t_n` with rational coefficients,
/// truncated above total degree `deg_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    num_vars: usize,
    deg_max: usize,
    coefficients: BTreeMap<MultiDegree, Rational>,
}

impl Character {
    pub fn zero(num_vars: usize, deg_max: usize) -> Self {
        Character {
            num_vars,
            deg_max,
            coefficients: BTreeMap::new(),
        }
    }

    pub fn one(num_vars: usize, deg_max: usize) -> Self {
        Self::monomial(
            num_vars,
            deg_max,
            MultiDegree::zero(num_vars),
            Rational::one(),
        )
    }

    pub fn monomial(num_vars: usize, deg_max: usize, exponent: MultiDegree, c: Rational) -> Self {
        let mut out = Self::zero(num_vars, deg_max);
        out.add_term(exponent, c);
        out
    }

    pub fn from_terms(
        num_vars: usize,
        deg_max: usize,
        terms: impl IntoIterator<Item = (MultiDegree, Rational)>,
    ) -> Self {
        let mut out = Self::zero(num_vars, deg_max);
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, e: MultiDegree, c: Rational) {
        debug_assert_eq!(e.num_vars(), self.num_vars);
        if e.total() > self.deg_max || c.is_zero() {
            return;
        }
        match self.coefficients.entry(e) {
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

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn deg_max(&self) -> usize {
        self.deg_max
    }

    pub fn coefficients(&self) -> &BTreeMap<MultiDegree, Rational> {
        &self.coefficients
    }

    pub fn coefficient(&self, e: &MultiDegree) -> Rational {
        self.coefficients
            .get(e)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Same series with a smaller truncation degree.
    pub fn truncate(&self, deg_max: usize) -> Self {
        Self::from_terms(
            self.num_vars,
            deg_max.min(self.deg_max),
            self.coefficients
                .iter()
                .map(|(e, c)| (e.clone(), c.clone())),
        )
    }

    /// The homogeneous component of total degree `d`.
    pub fn slice(&self, d: usize) -> Self {
        Self::from_terms(
            self.num_vars,
            self.deg_max,
            self.coefficients
                .iter()
                .filter(|(e, _)| e.total() == d)
                .map(|(e, c)| (e.clone(), c.clone())),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(
            self.num_vars,
            self.deg_max,
            self.coefficients.iter().map(|(e, x)| (e.clone(), x * c)),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars, other.num_vars, "variable count mismatch");
        let mut out = self.truncate(self.deg_max.min(other.deg_max));
        for (e, c) in &other.coefficients {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&int(-1)))
    }

    /// Truncated product.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars, other.num_vars, "variable count mismatch");
        let deg_max = self.deg_max.min(other.deg_max);
        let mut acc: BTreeMap<MultiDegree, Rational> = BTreeMap::new();
        for (a, x) in &self.coefficients {
            for (b, y) in &other.coefficients {
                if a.total() + b.total() > deg_max {
                    continue;
                }
                *acc.entry(a.add(b)).or_insert_with(Rational::zero) += x * y;
            }
        }
        Self::from_terms(self.num_vars, deg_max, acc)
    }

    /// Invariance under every permutation of the variables.
    pub fn is_symmetric(&self) -> bool {
        self.coefficients.iter().all(|(e, c)| {
            let mut swapped = e.0.clone();
            (0..self.num_vars.saturating_sub(1)).all(|i| {
                swapped.swap(i, i + 1);
                let ok = self.coefficient(&MultiDegree(swapped.clone())) == *c;
                swapped.swap(i, i + 1);
                ok
            })
        })
    }

    /// Coefficients after setting every `t_i = t`.
    pub fn specialize(&self) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.deg_max + 1];
        for (e, c) in &self.coefficients {
            out[e.total()] += c;
        }
        out
    }

    /// `Π 1/(1 - t_i)`, the character of the polynomial ring.
    pub fn polynomial_ring(num_vars: usize, deg_max: usize) -> Self {
        Self::from_terms(
            num_vars,
            deg_max,
            MultiDegree::all_up_to(num_vars, deg_max)
                .into_iter()
                .map(|e| (e, Rational::one())),
        )
    }

    /// Elementary symmetric polynomial `e_j`.
    pub fn elementary(num_vars: usize, j: usize, deg_max: usize) -> Self {
        Self::from_terms(
            num_vars,
            deg_max,
            MultiDegree::all_of_total(num_vars, j)
                .into_iter()
                .filter(|e| e.0.iter().all(|&a| a <= 1))
                .map(|e| (e, Rational::one())),
        )
    }

    /// Complete homogeneous symmetric polynomial `h_j`.
    pub fn complete(num_vars: usize, j: usize, deg_max: usize) -> Self {
        Self::from_terms(
            num_vars,
            deg_max,
            MultiDegree::all_of_total(num_vars, j)
                .into_iter()
                .map(|e| (e, Rational::one())),
        )
    }
}

impl From<&BQuotientCharacter> for Character {
    fn from(b: &BQuotientCharacter) -> Self {
        Character::from_terms(
            b.n,
            b.deg_max,
            b.coefficients
                .iter()
                .map(|(e, &c)| (e.clone(), Rational::from_integer(BigInt::from(c)))),
        )
    }
}

fn check_rows(d: &Partition, n: usize) -> Result<()> {
    if d.rows() > n {
        return Err(Error::TooManyRows {
            parts: d.parts().to_vec(),
            n,
        });
    }
    Ok(())
}

/// Schur polynomial `s_D(t_1, ..., t_n)` by semistandard tableaux.
pub fn schur(d: &Partition, n: usize, deg_max: usize) -> Result<Character> {
    check_rows(d, n)?;
    let shape = d.parts();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut filling: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut acc: BTreeMap<MultiDegree, Rational> = BTreeMap::new();
    let mut content = vec![0usize; n];
    fn fill(
        idx: usize,
        cells: &[(usize, usize)],
        n: usize,
        filling: &mut Vec<Vec<usize>>,
        content: &mut Vec<usize>,
        acc: &mut BTreeMap<MultiDegree, Rational>,
    ) {
        if idx == cells.len() {
            *acc.entry(MultiDegree(content.clone()))
                .or_insert_with(Rational::zero) += Rational::one();
            return;
        }
        let (r, c) = cells[idx];
        let lo_row = if c > 0 { filling[r][c - 1] } else { 0 };
        let lo_col = if r > 0 { filling[r - 1][c] + 1 } else { 0 };
        for v in lo_row.max(lo_col)..n {
            filling[r][c] = v;
            content[v] += 1;
            fill(idx + 1, cells, n, filling, content, acc);
            content[v] -= 1;
        }
    }
    fill(0, &cells, n, &mut filling, &mut content, &mut acc);
    Ok(Character::from_terms(n, deg_max, acc))
}

/// Schur polynomial by the Jacobi–Trudi determinant `det(h_{D_i - i + j})`.
pub fn schur_jacobi_trudi(d: &Partition, n: usize, deg_max: usize) -> Result<Character> {
    check_rows(d, n)?;
    let len = d.rows();
    if len == 0 {
        return Ok(Character::one(n, deg_max));
    }
    let entry = |i: usize, j: usize| -> Character {
        let k = d.parts()[i] as isize - i as isize + j as isize;
        if k < 0 {
            Character::zero(n, deg_max)
        } else {
            Character::complete(n, k as usize, deg_max)
        }
    };
    let matrix: Vec<Vec<Character>> = (0..len)
        .map(|i| (0..len).map(|j| entry(i, j)).collect())
        .collect();
    fn det(m: &[Vec<Character>], cols: &[usize], n: usize, deg_max: usize) -> Character {
        if m.is_empty() {
            return Character::one(n, deg_max);
        }
        let mut acc = Character::zero(n, deg_max);
        for (pos, &c) in cols.iter().enumerate() {
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let minor = det(&m[1..], &rest, n, deg_max);
            let term = m[0][c].mul(&minor);
            acc = if pos % 2 == 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
        }
        acc
    }
    Ok(det(&matrix, &(0..len).collect::<Vec<_>>(), n, deg_max))
}

/// Character of the polynomial `j`-forms on `C^n`: `e_j · Π 1/(1 - t_i)`.
pub fn forms_character(n: usize, j: usize, deg_max: usize) -> Character {
    Character::elementary(n, j, deg_max).mul(&Character::polynomial_ring(n, deg_max))
}

/// Character of the closed polynomial `k`-forms on `C^n`.
pub fn closed_forms_character(n: usize, k: usize, deg_max: usize) -> Character {
    let mut closed = Character::one(n, deg_max);
    for j in 1..=k {
        closed = forms_character(n, j - 1, deg_max).sub(&closed);
    }
    closed
}

/// Character of exact forms of positive even rank. Exact `k`-forms are
/// exactly the closed ones for `k >= 1`.
pub fn exact_even_positive_character(n: usize, deg_max: usize) -> Character {
    (2..=n)
        .step_by(2)
        .fold(Character::zero(n, deg_max), |acc, k| {
            acc.add(&closed_forms_character(n, k, deg_max))
        })
}

/// Character of all even forms modulo exact even forms.
pub fn even_mod_exact_character(n: usize, deg_max: usize) -> Character {
    (0..=n)
        .step_by(2)
        .fold(Character::zero(n, deg_max), |acc, k| {
            let quotient = if k == 0 {
                forms_character(n, 0, deg_max)
            } else {
                forms_character(n, k, deg_max).sub(&closed_forms_character(n, k, deg_max))
            };
            acc.add(&quotient)
        })
}

/// Character of `F_D`: all tensor fields of type `D` when `D` has more
/// than one column, closed `k`-forms when `D` is a column of `k` boxes.
pub fn char_tensor_field(d: &Partition, n: usize, deg_max: usize) -> Result<Character> {
    if d.is_empty() {
        return Err(Error::ZeroDiagram);
    }
    check_rows(d, n)?;
    if d.is_one_column() {
        Ok(closed_forms_character(n, d.rows(), deg_max))
    } else {
        Ok(schur(d, n, deg_max)?.mul(&Character::polynomial_ring(n, deg_max)))
    }
}

/// `F_D` character, with the empty diagram standing for the constants.
fn module_character(d: &Partition, n: usize, deg_max: usize) -> Result<Character> {
    if d.is_empty() {
        Ok(Character::one(n, deg_max))
    } else {
        char_tensor_field(d, n, deg_max)
    }
}

/// Expands the degree-`d` slice of a symmetric character in Schur
/// polynomials by peeling off lexicographically leading monomials.
pub fn schur_expand(chi: &Character, d: usize) -> Result<BTreeMap<Partition, Rational>> {
    let n = chi.num_vars();
    let mut rest = chi.slice(d);
    if !rest.is_symmetric() {
        return Err(Error::NotSymmetric { degree: d });
    }
    let mut out = BTreeMap::new();
    while let Some((lead, c)) = rest
        .coefficients()
        .iter()
        .next_back()
        .map(|(e, c)| (e.clone(), c.clone()))
    {
        let shape =
            Partition::new(lead.0.clone()).map_err(|_| Error::NotSymmetric { degree: d })?;
        let s = schur(&shape, n, chi.deg_max())?;
        rest = rest.sub(&s.scale(&c));
        out.insert(shape, c);
    }
    Ok(out)
}

/// Multiplicities of `F_D` in a character, extracted degree by degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub multiplicities: BTreeMap<Partition, u64>,
    pub remainder: Character,
    pub deg_reliable: usize,
}

impl Decomposition {
    pub fn is_complete(&self) -> bool {
        self.remainder.truncate(self.deg_reliable).is_zero()
    }

    /// Largest `|D|` with positive multiplicity.
    pub fn max_size(&self) -> Option<usize> {
        self.multiplicities.keys().map(Partition::size).max()
    }

    /// `Σ mult(D) · char F_D`.
    pub fn recombine(&self) -> Result<Character> {
        let n = self.remainder.num_vars();
        let deg_max = self.remainder.deg_max();
        self.multiplicities
            .iter()
            .try_fold(Character::zero(n, deg_max), |acc, (d, &mult)| {
                let c = module_character(d, n, deg_max)?;
                Ok(acc.add(&c.scale(&Rational::from_integer(BigInt::from(mult)))))
            })
    }
}

/// Greedy decomposition of `chi` into `F_D` characters through total
/// degree `deg_reliable`.
pub fn decompose(chi: &Character, deg_reliable: usize) -> Result<Decomposition> {
    let n = chi.num_vars();
    let deg_max = chi.deg_max();
    let top = deg_reliable.min(deg_max);
    let mut remainder = chi.clone();
    let mut multiplicities = BTreeMap::new();
    for d in 0..=top {
        for (shape, c) in schur_expand(&remainder, d)? {
            if c.is_negative() || !c.is_integer() {
                return Err(Error::NegativeMultiplicity {
                    degree: d,
                    shape: shape.padded(n),
                    coefficient: c.to_string(),
                });
            }
            let mult: u64 = c.to_integer().try_into().map_err(|_| {
                Error::InvalidArgument(format!("multiplicity {c} does not fit in u64"))
            })?;
            let f = module_character(&shape, n, deg_max)?;
            remainder = remainder.sub(&f.scale(&c));
            *multiplicities.entry(shape).or_insert(0) += mult;
        }
    }
    Ok(Decomposition {
        multiplicities,
        remainder,
        deg_reliable: top,
    })
}

/// `(m - 1)^2 + 2 floor((n - 2) / 2) (m - 1)`.
pub fn bound(m: usize, n: usize) -> Result<usize> {
    if m < 3 || n < 2 {
        return Err(Error::OutOfHypothesis { m, n });
    }
    Ok((m - 1) * (m - 1) + 2 * ((n - 2) / 2) * (m - 1))
}

/// One diagram checked against the size bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub diagram: Vec<usize>,
    pub size: usize,
    pub bound: usize,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub m: usize,
    pub n: usize,
    pub bound: usize,
    pub entries: Vec<BoundEntry>,
    pub pass: bool,
}

impl BoundReport {
    pub fn violations(&self) -> impl Iterator<Item = &BoundEntry> {
        self.entries.iter().filter(|e| !e.ok)
    }
}

/// Checks every diagram of a decomposition against [`bound`].
pub fn check_bound(dec: &Decomposition, m: usize, n: usize) -> Result<BoundReport> {
    let b = bound(m, n)?;
    let entries: Vec<BoundEntry> = dec
        .multiplicities
        .iter()
        .filter(|(_, &mult)| mult > 0)
        .map(|(d, _)| BoundEntry {
            diagram: d.padded(n),
            size: d.size(),
            bound: b,
            ok: d.size() <= b,
        })
        .collect();
    let pass = entries.iter().all(|e| e.ok);
    Ok(BoundReport {
        m,
        n,
        bound: b,
        entries,
        pass,
    })
}
