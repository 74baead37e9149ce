//! Lower central series `L_1 = A`, `L_m = [A, L_{m-1}]` of the free
//! algebra, computed block by block over multidegrees.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::free_algebra::{word_count, FreeAlgebraElement, MultiDegree, Word, WordBlock};
use crate::linalg::{
    subspace_span, Arithmetic, GradedSubspace, RankEngine, Rational, SparseVector,
};

/// Largest graded piece `n^deg_max` accepted by default.
pub const DEFAULT_RESOURCE_CAP: u128 = 1 << 24;

/// Knobs shared by the table builders.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LcsOptions {
    pub arithmetic: Arithmetic,
    pub resource_cap: u128,
}

impl Default for LcsOptions {
    fn default() -> Self {
        LcsOptions {
            arithmetic: Arithmetic::Rational,
            resource_cap: DEFAULT_RESOURCE_CAP,
        }
    }
}

fn check_resources(n: usize, deg_max: usize, cap: u128) -> Result<()> {
    let dim = if n <= 1 {
        1
    } else if (deg_max as f64) * (n as f64).log2() > 120.0 {
        u128::MAX
    } else {
        word_count(n, deg_max)
    };
    if dim > cap {
        return Err(Error::ResourceLimit { dim, cap });
    }
    Ok(())
}

type SparseRow = Vec<(u32, i64)>;

/// One multigraded piece of one level: its dimension and independent
/// integer generators.
#[derive(Debug, Clone)]
struct LevelBlock {
    dim: usize,
    spanning: Vec<SparseRow>,
}

/// Word lookup for one multidegree.
struct IndexedBlock {
    block: WordBlock,
    index: HashMap<Vec<u8>, u32>,
}

impl IndexedBlock {
    fn new(md: MultiDegree) -> Self {
        let block = WordBlock::new(md);
        let index = block
            .words()
            .iter()
            .enumerate()
            .map(|(i, w)| (w.0.clone(), i as u32))
            .collect();
        IndexedBlock { block, index }
    }

    fn position(&self, w: &[u8]) -> u32 {
        self.index[w]
    }
}

/// Bases of `L_m(A_n)` in every multidegree of total degree at most
/// `deg_max`, for `1 <= m <= m_max + 1`.
#[derive(Debug, Clone)]
pub struct LcsTable {
    n: usize,
    m_max: usize,
    deg_max: usize,
    arithmetic: Arithmetic,
    levels: Vec<BTreeMap<MultiDegree, LevelBlock>>,
}

/// Builds the table in exact rational arithmetic with the default cap.
pub fn build_lcs_table(n: usize, m_max: usize, deg_max: usize) -> Result<LcsTable> {
    build_lcs_table_with(n, m_max, deg_max, LcsOptions::default())
}

pub fn build_lcs_table_with(
    n: usize,
    m_max: usize,
    deg_max: usize,
    options: LcsOptions,
) -> Result<LcsTable> {
    if n == 0 || m_max == 0 || deg_max == 0 {
        return Err(Error::InvalidArgument(format!(
            "n, m_max and deg_max must be positive (got n={n}, m_max={m_max}, deg_max={deg_max})"
        )));
    }
    check_resources(n, deg_max, options.resource_cap)?;
    let degrees = MultiDegree::all_up_to(n, deg_max);
    let blocks: HashMap<MultiDegree, IndexedBlock> = degrees
        .par_iter()
        .map(|md| (md.clone(), IndexedBlock::new(md.clone())))
        .collect();
    let first = degrees
        .iter()
        .map(|md| {
            let dim = blocks[md].block.dim();
            (
                md.clone(),
                LevelBlock {
                    dim,
                    spanning: Vec::new(),
                },
            )
        })
        .collect();
    let mut levels: Vec<BTreeMap<MultiDegree, LevelBlock>> = vec![first];
    for m in 2..=m_max + 1 {
        let prev = &levels[m - 2];
        let next: BTreeMap<MultiDegree, LevelBlock> = degrees
            .par_iter()
            .map(|md| {
                let block = next_level_block(m, md, prev, &blocks, options.arithmetic);
                (md.clone(), block)
            })
            .collect();
        levels.push(next);
    }
    Ok(LcsTable {
        n,
        m_max,
        deg_max,
        arithmetic: options.arithmetic,
        levels,
    })
}

/// Computes `L_m[md]` from the generators of `L_{m-1}`.
fn next_level_block(
    m: usize,
    md: &MultiDegree,
    prev: &BTreeMap<MultiDegree, LevelBlock>,
    blocks: &HashMap<MultiDegree, IndexedBlock>,
    arithmetic: Arithmetic,
) -> LevelBlock {
    let target = &blocks[md];
    let dim = target.block.dim();
    let ceiling = prev[md].dim;
    let mut engine = RankEngine::new(dim, arithmetic);
    let mut spanning = Vec::new();
    let mut dense = vec![0i64; dim];
    let mut parts: Vec<MultiDegree> = md
        .sub_degrees()
        .into_iter()
        .filter(|e| e.total() >= 1 && e.total() < md.total())
        .collect();
    parts.sort_by_key(MultiDegree::total);
    'outer: for e in parts {
        // [A, A] is spanned by brackets with single letters.
        if m == 2 && e.total() > 1 {
            continue;
        }
        let rest = md.checked_sub(&e).expect("sub-degree");
        let inner = &prev[&rest];
        if inner.dim == 0 {
            continue;
        }
        let rest_block = &blocks[&rest].block;
        let units;
        let inner_rows: &[SparseRow] = if m == 2 {
            units = (0..rest_block.dim() as u32)
                .map(|i| vec![(i, 1)])
                .collect::<Vec<_>>();
            &units
        } else {
            &inner.spanning
        };
        for w in blocks[&e].block.words() {
            for u in inner_rows {
                let mut row: SparseRow = Vec::with_capacity(2 * u.len());
                for &(j, c) in u {
                    let v = &rest_block.words()[j as usize].0;
                    let mut left = Vec::with_capacity(md.total());
                    left.extend_from_slice(&w.0);
                    left.extend_from_slice(v);
                    let mut right = Vec::with_capacity(md.total());
                    right.extend_from_slice(v);
                    right.extend_from_slice(&w.0);
                    row.push((target.position(&left), c));
                    row.push((target.position(&right), -c));
                }
                for &(i, c) in &row {
                    dense[i as usize] += c;
                }
                if dense.iter().any(|&x| x != 0) && engine.insert_i64(&dense) {
                    spanning.push(
                        dense
                            .iter()
                            .enumerate()
                            .filter(|(_, &x)| x != 0)
                            .map(|(i, &x)| (i as u32, x))
                            .collect(),
                    );
                }
                for &(i, _) in &row {
                    dense[i as usize] = 0;
                }
                if engine.rank() == ceiling {
                    break 'outer;
                }
            }
        }
    }
    LevelBlock {
        dim: engine.rank(),
        spanning,
    }
}

impl LcsTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m_max(&self) -> usize {
        self.m_max
    }

    pub fn deg_max(&self) -> usize {
        self.deg_max
    }

    pub fn arithmetic(&self) -> Arithmetic {
        self.arithmetic
    }

    /// Multidegrees covered by the table, by total degree.
    pub fn multidegrees(&self) -> impl Iterator<Item = &MultiDegree> {
        self.levels[0].keys()
    }

    fn level(&self, m: usize) -> Result<&BTreeMap<MultiDegree, LevelBlock>> {
        if m == 0 || m > self.m_max + 1 {
            return Err(Error::LevelOutOfRange {
                m,
                max: self.m_max + 1,
            });
        }
        Ok(&self.levels[m - 1])
    }

    fn block(&self, m: usize, md: &MultiDegree) -> Result<&LevelBlock> {
        self.level(m)?
            .get(md)
            .ok_or_else(|| Error::InvalidArgument(format!("multidegree {md} is outside the table")))
    }

    /// `dim L_m[md]`.
    pub fn dim(&self, m: usize, md: &MultiDegree) -> Result<usize> {
        Ok(self.block(m, md)?.dim)
    }

    /// `dim L_m[d]` for `0 <= d <= deg_max`.
    pub fn total_dims(&self, m: usize) -> Result<Vec<usize>> {
        let mut out = vec![0; self.deg_max + 1];
        for (md, b) in self.level(m)? {
            out[md.total()] += b.dim;
        }
        Ok(out)
    }

    /// The exact subspace `L_m[md]` in the lexicographic word basis.
    pub fn subspace(&self, m: usize, md: &MultiDegree) -> Result<GradedSubspace> {
        let block = self.block(m, md)?;
        let ambient = self.block(1, md)?.dim;
        if m == 1 {
            let units: Vec<SparseVector> = (0..ambient)
                .map(|i| SparseVector::from_integers(ambient, [(i, 1)]).expect("unit vector"))
                .collect();
            return subspace_span(&units, ambient);
        }
        let rows: Vec<SparseVector> = block
            .spanning
            .iter()
            .map(|r| {
                SparseVector::from_integers(ambient, r.iter().map(|&(i, c)| (i as usize, c)))
                    .expect("stored generators are in range")
            })
            .collect();
        subspace_span(&rows, ambient)
    }
}

/// Torus character of `B_m(A_n)` truncated at `deg_max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BQuotientCharacter {
    pub m: usize,
    pub n: usize,
    pub deg_max: usize,
    pub coefficients: BTreeMap<MultiDegree, u64>,
}

impl BQuotientCharacter {
    /// Single-variable specialization `t_i = t`: coefficients by total degree.
    pub fn total_degree_series(&self) -> Vec<u64> {
        let mut out = vec![0; self.deg_max + 1];
        for (md, c) in &self.coefficients {
            out[md.total()] += c;
        }
        out
    }

    pub fn coefficient(&self, md: &MultiDegree) -> u64 {
        self.coefficients.get(md).copied().unwrap_or(0)
    }
}

/// Per-multidegree `dim L_m - dim L_{m+1}`.
pub fn b_character(table: &LcsTable, m: usize) -> Result<BQuotientCharacter> {
    if m == 0 || m > table.m_max {
        return Err(Error::LevelOutOfRange {
            m,
            max: table.m_max,
        });
    }
    let upper = table.level(m)?;
    let lower = table.level(m + 1)?;
    let coefficients = upper
        .iter()
        .map(|(md, b)| (md.clone(), (b.dim - lower[md].dim) as u64))
        .filter(|(_, c)| *c > 0)
        .collect();
    Ok(BQuotientCharacter {
        m,
        n: table.n,
        deg_max: table.deg_max,
        coefficients,
    })
}

/// Cyclic words of one multidegree, indexed by their least rotation in
/// lexicographic order. They form a basis of `(A/[A,A])[md]`.
#[derive(Debug, Clone)]
pub struct NecklaceBlock {
    reps: Vec<Word>,
    index: HashMap<Word, usize>,
}

impl NecklaceBlock {
    pub fn new(md: &MultiDegree) -> Self {
        let mut reps: Vec<Word> = WordBlock::new(md.clone())
            .words()
            .iter()
            .map(Word::necklace_rep)
            .collect();
        reps.sort();
        reps.dedup();
        let index = reps
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect();
        NecklaceBlock { reps, index }
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn representatives(&self) -> &[Word] {
        &self.reps
    }

    /// Index of the necklace of `w`.
    pub fn class_of(&self, w: &Word) -> usize {
        self.index[&w.necklace_rep()]
    }

    /// Image of an element of `A` in the cyclic-word basis.
    pub fn project(&self, a: &FreeAlgebraElement, md: &MultiDegree) -> SparseVector {
        let n = a.num_generators();
        let entries = a
            .terms()
            .iter()
            .filter(|(w, _)| &w.multidegree(n) == md)
            .map(|(w, c)| (self.class_of(w), c.clone()));
        SparseVector::new(self.dim(), entries).expect("necklace index in range")
    }
}

/// Image of `A[[A,A],A]A` in `A/[A,A]`, per multidegree of total degree at
/// most `deg_max`, in necklace coordinates.
///
/// Modulo commutators `w1 X w5` equals `X w5 w1`, and `[A,A]` is spanned by
/// `[x_i, u]`, so the generators `[[x_i, u], w] y` suffice.
pub fn z_subspace(n: usize, deg_max: usize) -> Result<BTreeMap<MultiDegree, GradedSubspace>> {
    z_subspace_with(n, deg_max, DEFAULT_RESOURCE_CAP)
}

pub fn z_subspace_with(
    n: usize,
    deg_max: usize,
    resource_cap: u128,
) -> Result<BTreeMap<MultiDegree, GradedSubspace>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    check_resources(n, deg_max, resource_cap)?;
    MultiDegree::all_up_to(n, deg_max)
        .into_par_iter()
        .map(|md| {
            let space = z_block(n, &md)?;
            Ok((md, space))
        })
        .collect()
}

fn z_block(n: usize, md: &MultiDegree) -> Result<GradedSubspace> {
    let necklaces = NecklaceBlock::new(md);
    let dim = necklaces.dim();
    let d = md.total();
    let mut engine = RankEngine::new(dim, Arithmetic::Rational);
    let mut spanning: Vec<Vec<i64>> = Vec::new();
    let mut dense = vec![0i64; dim];
    'outer: for letter in 0..n {
        if md.0[letter] == 0 {
            continue;
        }
        let mut x = vec![0; n];
        x[letter] = 1;
        let after_x = md.checked_sub(&MultiDegree(x)).expect("letter present");
        for eu in after_x.sub_degrees() {
            if eu.total() == 0 {
                continue;
            }
            let rest = after_x.checked_sub(&eu).expect("sub-degree");
            for ew in rest.sub_degrees() {
                if ew.total() == 0 {
                    continue;
                }
                let ey = rest.checked_sub(&ew).expect("sub-degree");
                let ublock = WordBlock::new(eu.clone());
                let wblock = WordBlock::new(ew.clone());
                let yblock = WordBlock::new(ey);
                for u in ublock.words() {
                    for w in wblock.words() {
                        for y in yblock.words() {
                            let mut row = Vec::with_capacity(8);
                            // [[x,u],w] y = (xuw - uxw - wxu + wux) y
                            for (sign, order) in [
                                (1i64, [0, 1, 2]),
                                (-1, [1, 0, 2]),
                                (-1, [2, 0, 1]),
                                (1, [2, 1, 0]),
                            ] {
                                let mut word = Vec::with_capacity(d);
                                for piece in order {
                                    match piece {
                                        0 => word.push(letter as u8),
                                        1 => word.extend_from_slice(&u.0),
                                        _ => word.extend_from_slice(&w.0),
                                    }
                                }
                                word.extend_from_slice(&y.0);
                                row.push((necklaces.class_of(&Word(word)), sign));
                            }
                            for &(i, c) in &row {
                                dense[i] += c;
                            }
                            if dense.iter().any(|&c| c != 0) && engine.insert_i64(&dense) {
                                spanning.push(dense.clone());
                            }
                            for &(i, _) in &row {
                                dense[i] = 0;
                            }
                            if engine.rank() == dim {
                                break 'outer;
                            }
                        }
                    }
                }
            }
        }
    }
    let rows: Vec<SparseVector> = spanning
        .iter()
        .map(|r| SparseVector::from_dense(r))
        .collect();
    subspace_span(&rows, dim)
}

/// Torus character of `B̄_1 = (A/[A,A])/Z`.
pub fn bbar1_character(n: usize, deg_max: usize) -> Result<BQuotientCharacter> {
    let z = z_subspace(n, deg_max)?;
    let coefficients = z
        .iter()
        .map(|(md, space)| (md.clone(), (space.ambient_dim() - space.rank()) as u64))
        .filter(|(_, c)| *c > 0)
        .collect();
    Ok(BQuotientCharacter {
        m: 1,
        n,
        deg_max,
        coefficients,
    })
}

/// Expresses `[[b_1, b_2], ..., b_m]` as a combination of left-normed
/// brackets beginning with `b_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RearrangementCertificate {
    pub m: usize,
    pub k: usize,
    /// Each entry lists the remaining indices `l_1, ..., l_{m-1}` (one-based)
    /// and the coefficient of `[[b_k, b_{l_1}], ..., b_{l_{m-1}}]`.
    pub terms: Vec<(Vec<usize>, i64)>,
}

#[derive(Debug, Clone)]
enum Item {
    Leaf(usize),
    Pair(Box<Item>, Box<Item>),
}

/// Left-normed bracket of leaves, `[[a_1, a_2], ..., a_s]`.
fn left_normed(n: usize, leaves: &[usize]) -> FreeAlgebraElement {
    let mut acc = FreeAlgebraElement::generator(n, leaves[0] + 1).expect("leaf in range");
    for &l in &leaves[1..] {
        let x = FreeAlgebraElement::generator(n, l + 1).expect("leaf in range");
        acc = acc.bracket(&x).expect("same algebra");
    }
    acc
}

fn flatten_front(items: &[Item], sign: i64, out: &mut BTreeMap<Vec<usize>, i64>) {
    match &items[0] {
        Item::Leaf(_) => {
            let leaves = items
                .iter()
                .map(|it| match it {
                    Item::Leaf(l) => *l,
                    Item::Pair(..) => unreachable!("only the target is ever paired"),
                })
                .collect();
            *out.entry(leaves).or_insert(0) += sign;
        }
        // [[a, t], rest] = -[[t, a], rest] = -T(t, a, rest)
        Item::Pair(a, t) => {
            let mut next = Vec::with_capacity(items.len() + 1);
            next.push((**t).clone());
            next.push((**a).clone());
            next.extend_from_slice(&items[1..]);
            flatten_front(&next, -sign, out);
        }
    }
}

fn express(items: Vec<Item>, pos: usize, sign: i64, out: &mut BTreeMap<Vec<usize>, i64>) {
    match pos {
        0 => flatten_front(&items, sign, out),
        1 => {
            let mut swapped = items;
            swapped.swap(0, 1);
            express(swapped, 0, -sign, out);
        }
        _ => {
            // [[X, a], t] = [[X, t], a] + [X, [a, t]]
            let mut swapped = items.clone();
            swapped.swap(pos - 1, pos);
            express(swapped, pos - 1, sign, out);
            let mut merged = items;
            let t = merged.remove(pos);
            let a = merged.remove(pos - 1);
            merged.insert(pos - 1, Item::Pair(Box::new(a), Box::new(t)));
            express(merged, pos - 1, sign, out);
        }
    }
}

/// Runs the Jacobi rewriting that moves `b_k` to the front of
/// `[[b_1, b_2], ..., b_m]`.
pub fn rearrangement(m: usize, k: usize) -> Result<RearrangementCertificate> {
    if m < 2 || k == 0 || k > m {
        return Err(Error::InvalidArgument(format!(
            "rearrangement needs m >= 2 and 1 <= k <= m (got m={m}, k={k})"
        )));
    }
    let items = (0..m).map(Item::Leaf).collect();
    let mut acc = BTreeMap::new();
    express(items, k - 1, 1, &mut acc);
    let terms = acc
        .into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|(leaves, c)| {
            debug_assert_eq!(leaves[0], k - 1);
            (leaves[1..].iter().map(|l| l + 1).collect(), c)
        })
        .collect();
    Ok(RearrangementCertificate { m, k, terms })
}

impl RearrangementCertificate {
    /// Expands both sides in the free algebra on `m` generators and
    /// returns the difference, which is zero for a valid certificate.
    pub fn residual(&self) -> FreeAlgebraElement {
        let m = self.m;
        let original: Vec<usize> = (0..m).collect();
        let mut acc = -&left_normed(m, &original);
        for (rest, c) in &self.terms {
            let mut leaves = vec![self.k - 1];
            leaves.extend(rest.iter().map(|l| l - 1));
            let coeff = Rational::from_integer(BigInt::from(*c));
            acc = &acc + &left_normed(m, &leaves).scale(&coeff);
        }
        acc
    }

    pub fn verify(&self) -> bool {
        let well_formed = self.terms.iter().all(|(rest, _)| {
            let mut seen: Vec<usize> = rest.clone();
            seen.push(self.k);
            seen.sort_unstable();
            seen == (1..=self.m).collect::<Vec<_>>()
        });
        well_formed && self.residual().is_zero()
    }
}

/// Number of necklaces of length `d` over `n` letters.
pub fn necklace_count(n: usize, d: usize) -> u128 {
    if d == 0 {
        return 1;
    }
    fn phi(mut k: usize) -> u128 {
        let mut out = k as u128;
        let mut p = 2;
        while p * p <= k {
            if k % p == 0 {
                while k % p == 0 {
                    k /= p;
                }
                out = out / p as u128 * (p as u128 - 1);
            }
            p += 1;
        }
        if k > 1 {
            out = out / k as u128 * (k as u128 - 1);
        }
        out
    }
    let total: u128 = (1..=d)
        .filter(|e| d % e == 0)
        .map(|e| phi(e) * word_count(n, d / e))
        .sum();
    total / d as u128
}

#[cfg(test)]
mod tests {
    use super::*;

    fn md(v: &[usize]) -> MultiDegree {
        MultiDegree(v.to_vec())
    }

    #[test]
    fn commutator_block_of_two_letters() {
        let t = build_lcs_table(2, 1, 3).unwrap();
        assert_eq!(t.dim(2, &md(&[1, 1])).unwrap(), 1);
        assert_eq!(t.dim(2, &md(&[2, 0])).unwrap(), 0);
        let b1 = b_character(&t, 1).unwrap();
        assert_eq!(b1.total_degree_series(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn b3_of_three_generators_in_degree_three() {
        let t = build_lcs_table(3, 3, 3).unwrap();
        assert_eq!(b_character(&t, 3).unwrap().total_degree_series()[3], 8);
        assert_eq!(t.total_dims(4).unwrap()[3], 0);
    }

    #[test]
    fn b1_matches_necklace_counts() {
        let t = build_lcs_table(3, 1, 5).unwrap();
        let b1 = b_character(&t, 1).unwrap().total_degree_series();
        for d in 0..=5 {
            assert_eq!(b1[d] as u128, necklace_count(3, d));
        }
    }

    #[test]
    fn levels_are_nested() {
        let t = build_lcs_table(2, 3, 5).unwrap();
        for m in 1..=3 {
            for d in t.multidegrees().cloned().collect::<Vec<_>>() {
                let upper = t.subspace(m, &d).unwrap();
                let lower = t.subspace(m + 1, &d).unwrap();
                assert!(lower.is_subspace_of(&upper).unwrap());
                assert_eq!(upper.rank(), t.dim(m, &d).unwrap());
            }
        }
    }

    #[test]
    fn level_out_of_range() {
        let t = build_lcs_table(2, 2, 3).unwrap();
        assert_eq!(
            b_character(&t, 3),
            Err(Error::LevelOutOfRange { m: 3, max: 2 })
        );
        assert!(t.dim(4, &md(&[1, 1])).is_err());
    }

    #[test]
    fn resource_cap_is_enforced() {
        let options = LcsOptions {
            resource_cap: 100,
            ..LcsOptions::default()
        };
        assert!(matches!(
            build_lcs_table_with(2, 2, 7, options),
            Err(Error::ResourceLimit { dim: 128, cap: 100 })
        ));
    }

    #[test]
    fn prime_field_mode_agrees() {
        let exact = build_lcs_table(2, 3, 6).unwrap();
        let options = LcsOptions {
            arithmetic: Arithmetic::PrimeField,
            ..LcsOptions::default()
        };
        let fast = build_lcs_table_with(2, 3, 6, options).unwrap();
        for m in 1..=3 {
            assert_eq!(b_character(&exact, m), b_character(&fast, m));
        }
    }

    #[test]
    fn central_image_in_low_degree() {
        let z = z_subspace(2, 4).unwrap();
        assert_eq!(z[&md(&[1, 1])].rank(), 0);
        assert_eq!(z[&md(&[2, 1])].rank(), 0);
        assert_eq!(z[&md(&[2, 2])].rank(), 1);
        let z1 = z_subspace(1, 6).unwrap();
        assert!(z1.values().all(|s| s.rank() == 0));
    }

    #[test]
    fn bbar1_of_one_generator_is_polynomials() {
        let c = bbar1_character(1, 6).unwrap();
        assert_eq!(c.total_degree_series(), vec![1; 7]);
    }

    #[test]
    fn antisymmetry_certificate() {
        let c = rearrangement(2, 2).unwrap();
        assert_eq!(c.terms, vec![(vec![1], -1)]);
        assert!(c.verify());
    }

    #[test]
    fn jacobi_certificate() {
        let c = rearrangement(3, 3).unwrap();
        assert_eq!(c.terms, vec![(vec![1, 2], -1), (vec![2, 1], 1)]);
        assert!(c.verify());
    }

    #[test]
    fn identity_certificate() {
        let c = rearrangement(4, 1).unwrap();
        assert_eq!(c.terms, vec![(vec![2, 3, 4], 1)]);
        assert!(c.verify());
    }

    #[test]
    fn tampered_certificate_fails() {
        let mut c = rearrangement(4, 3).unwrap();
        assert!(c.verify());
        c.terms[0].1 += 1;
        assert!(!c.verify());
    }

    #[test]
    fn rearrangement_rejects_bad_indices() {
        assert!(rearrangement(1, 1).is_err());
        assert!(rearrangement(3, 0).is_err());
        assert!(rearrangement(3, 4).is_err());
    }
}
