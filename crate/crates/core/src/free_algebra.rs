//! Words and elements of the free associative algebra `A_n`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Rational, SparseVector};

/// Exponent vector of a torus weight: `counts[i]` is the number of
/// occurrences of the `(i + 1)`-th generator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiDegree(pub Vec<usize>);

impl MultiDegree {
    pub fn zero(n: usize) -> Self {
        MultiDegree(vec![0; n])
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    /// Componentwise difference, if `other <= self`.
    pub fn checked_sub(&self, other: &MultiDegree) -> Option<MultiDegree> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(MultiDegree)
    }

    pub fn add(&self, other: &MultiDegree) -> MultiDegree {
        MultiDegree(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Weakly decreasing rearrangement.
    pub fn sorted_desc(&self) -> Vec<usize> {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    /// All multidegrees in `n` variables of the given total degree, in
    /// lexicographic order.
    pub fn all_of_total(n: usize, total: usize) -> Vec<MultiDegree> {
        fn rec(n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<MultiDegree>) {
            if cur.len() + 1 == n {
                cur.push(left);
                out.push(MultiDegree(cur.clone()));
                cur.pop();
                return;
            }
            for a in 0..=left {
                cur.push(a);
                rec(n, left - a, cur, out);
                cur.pop();
            }
        }
        if n == 0 {
            return if total == 0 {
                vec![MultiDegree(Vec::new())]
            } else {
                Vec::new()
            };
        }
        let mut out = Vec::new();
        rec(n, total, &mut Vec::with_capacity(n), &mut out);
        out
    }

    /// All multidegrees with total degree at most `deg_max`, by total degree.
    pub fn all_up_to(n: usize, deg_max: usize) -> Vec<MultiDegree> {
        (0..=deg_max)
            .flat_map(|d| Self::all_of_total(n, d))
            .collect()
    }

    /// All `e <= self` componentwise.
    pub fn sub_degrees(&self) -> Vec<MultiDegree> {
        let mut out = vec![Vec::new()];
        for &c in &self.0 {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<usize>| {
                    (0..=c).map(move |a| {
                        let mut p = prefix.clone();
                        p.push(a);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(MultiDegree).collect()
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A word in the generators; letters are stored zero-based.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word from one-based letters, as in `x1 x2 = [1, 2]`.
    pub fn from_letters(letters: &[usize], n: usize) -> Result<Self> {
        letters
            .iter()
            .map(|&l| {
                if l == 0 || l > n {
                    Err(Error::LetterOutOfRange { letter: l, n })
                } else {
                    Ok((l - 1) as u8)
                }
            })
            .collect::<Result<Vec<u8>>>()
            .map(Word)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn multidegree(&self, n: usize) -> MultiDegree {
        let mut counts = vec![0; n];
        for &l in &self.0 {
            counts[l as usize] += 1;
        }
        MultiDegree(counts)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Lexicographically least rotation.
    pub fn necklace_rep(&self) -> Word {
        let len = self.0.len();
        (0..len.max(1))
            .map(|r| {
                let mut v = self.0[r.min(len)..].to_vec();
                v.extend_from_slice(&self.0[..r.min(len)]);
                Word(v)
            })
            .min()
            .unwrap_or_else(Word::empty)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for l in &self.0 {
            write!(f, "x{}", l + 1)?;
        }
        Ok(())
    }
}

/// Number of all words of length `d` over `n` letters.
pub fn word_count(n: usize, d: usize) -> u128 {
    (n as u128).pow(d as u32)
}

const MAX_FACTORIAL: usize = 33;

fn factorial(k: usize) -> u128 {
    assert!(
        k <= MAX_FACTORIAL,
        "degree {k} too large for exact word ranking"
    );
    (1..=k as u128).product()
}

/// Number of words with the given letter histogram.
pub fn multinomial(counts: &[usize]) -> u128 {
    let total: usize = counts.iter().sum();
    counts
        .iter()
        .fold(factorial(total), |acc, &c| acc / factorial(c))
}

/// The words of one multidegree in lexicographic order, with ranking.
#[derive(Debug, Clone)]
pub struct WordBlock {
    multidegree: MultiDegree,
    words: Vec<Word>,
}

impl WordBlock {
    pub fn new(multidegree: MultiDegree) -> Self {
        fn rec(counts: &mut [usize], cur: &mut Vec<u8>, left: usize, out: &mut Vec<Word>) {
            if left == 0 {
                out.push(Word(cur.clone()));
                return;
            }
            for l in 0..counts.len() {
                if counts[l] > 0 {
                    counts[l] -= 1;
                    cur.push(l as u8);
                    rec(counts, cur, left - 1, out);
                    cur.pop();
                    counts[l] += 1;
                }
            }
        }
        let mut counts = multidegree.0.clone();
        let mut words = Vec::with_capacity(multinomial(&counts) as usize);
        rec(
            &mut counts,
            &mut Vec::new(),
            multidegree.total(),
            &mut words,
        );
        WordBlock { multidegree, words }
    }

    pub fn multidegree(&self) -> &MultiDegree {
        &self.multidegree
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    /// Position of `word` in the block; the word must have this multidegree.
    pub fn index_of(&self, word: &[u8]) -> usize {
        rank_word(word, &self.multidegree.0)
    }
}

/// Lexicographic rank of `word` among the words with histogram `counts`.
pub fn rank_word(word: &[u8], counts: &[usize]) -> usize {
    let mut left = counts.to_vec();
    let mut rank = 0u128;
    for &l in word {
        for smaller in 0..l as usize {
            if left[smaller] > 0 {
                left[smaller] -= 1;
                rank += multinomial(&left);
                left[smaller] += 1;
            }
        }
        left[l as usize] -= 1;
    }
    rank as usize
}

/// Sparse element of `A_n` with exact rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct FreeAlgebraElement {
    n: usize,
    terms: BTreeMap<Word, Rational>,
}

impl fmt::Debug for FreeAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FreeAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "({c}){w}")?;
            }
        }
        Ok(())
    }
}

impl FreeAlgebraElement {
    pub fn zero(n: usize) -> Self {
        FreeAlgebraElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::from_word(n, Word::empty())
    }

    pub fn from_word(n: usize, word: Word) -> Self {
        Self::from_terms(n, [(word, Rational::one())])
    }

    /// The generator `x_i`, one-based.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        Ok(Self::from_word(n, Word::from_letters(&[i], n)?))
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Word, Rational)>) -> Self {
        let mut out = Self::zero(n);
        for (w, c) in terms {
            debug_assert!(w.0.iter().all(|&l| (l as usize) < n));
            out.add_term(w, c);
        }
        out
    }

    fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn num_generators(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Word, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    /// Whether every term has the same total degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Word::degree);
        match degrees.next() {
            Some(d) => degrees.all(|e| e == d),
            None => true,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.n, self.terms.iter().map(|(w, x)| (w.clone(), x * c)))
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::GeneratorMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = Self::zero(self.n);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.concat(b), x * y);
            }
        }
        Ok(out)
    }

    /// The commutator `ab - ba`.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        let ab = self.multiply(other)?;
        let ba = other.multiply(self)?;
        Ok(&ab - &ba)
    }

    /// Coordinates of the `degree_filter` component in the lexicographic
    /// word basis of that multigraded piece.
    pub fn coordinates(&self, degree_filter: &MultiDegree) -> SparseVector {
        let block = WordBlock::new(degree_filter.clone());
        let entries = self
            .terms
            .iter()
            .filter(|(w, _)| &w.multidegree(self.n) == degree_filter)
            .map(|(w, c)| (block.index_of(&w.0), c.clone()));
        SparseVector::new(block.dim(), entries).expect("block indices are in range")
    }
}

impl Add for &FreeAlgebraElement {
    type Output = FreeAlgebraElement;

    fn add(self, rhs: &FreeAlgebraElement) -> FreeAlgebraElement {
        assert_eq!(self.n, rhs.n, "generator count mismatch");
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &FreeAlgebraElement {
    type Output = FreeAlgebraElement;

    fn sub(self, rhs: &FreeAlgebraElement) -> FreeAlgebraElement {
        self + &(-rhs)
    }
}

impl Neg for &FreeAlgebraElement {
    type Output = FreeAlgebraElement;

    fn neg(self) -> FreeAlgebraElement {
        self.scale(&-Rational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn x(n: usize, i: usize) -> FreeAlgebraElement {
        FreeAlgebraElement::generator(n, i).unwrap()
    }

    fn word(letters: &[usize]) -> Word {
        Word::from_letters(letters, 3).unwrap()
    }

    fn int(k: i64) -> Rational {
        Rational::from_integer(BigInt::from(k))
    }

    #[test]
    fn product_of_generators_is_concatenation() {
        let p = x(2, 1).multiply(&x(2, 2)).unwrap();
        assert_eq!(
            p,
            FreeAlgebraElement::from_word(2, Word::from_letters(&[1, 2], 2).unwrap())
        );
    }

    #[test]
    fn product_distributes() {
        let s = &x(2, 1) + &x(2, 2);
        let p = s.multiply(&x(2, 1)).unwrap();
        let expected = FreeAlgebraElement::from_terms(
            2,
            [
                (Word::from_letters(&[1, 1], 2).unwrap(), int(1)),
                (Word::from_letters(&[2, 1], 2).unwrap(), int(1)),
            ],
        );
        assert_eq!(p, expected);
    }

    #[test]
    fn empty_word_is_the_unit() {
        let a = &x(3, 2) + &x(3, 3).multiply(&x(3, 1)).unwrap();
        assert_eq!(FreeAlgebraElement::one(3).multiply(&a).unwrap(), a);
        assert_eq!(a.multiply(&FreeAlgebraElement::one(3)).unwrap(), a);
    }

    #[test]
    fn commutator_expansions() {
        let c = x(2, 1).bracket(&x(2, 2)).unwrap();
        assert_eq!(c.to_string(), "x1x2 + (-1)x2x1");
        let cc = x(2, 1).bracket(&c).unwrap();
        let expected = FreeAlgebraElement::from_terms(
            2,
            [
                (Word::from_letters(&[1, 1, 2], 2).unwrap(), int(1)),
                (Word::from_letters(&[1, 2, 1], 2).unwrap(), int(-2)),
                (Word::from_letters(&[2, 1, 1], 2).unwrap(), int(1)),
            ],
        );
        assert_eq!(cc, expected);
        assert!(c.bracket(&c).unwrap().is_zero());
    }

    #[test]
    fn constants_bracket_to_zero() {
        let a = &x(2, 1).multiply(&x(2, 2)).unwrap() + &x(2, 2);
        assert!(FreeAlgebraElement::one(2)
            .scale(&int(5))
            .bracket(&a)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn mismatched_generator_counts_are_rejected() {
        assert_eq!(
            x(2, 1).multiply(&x(3, 1)),
            Err(Error::GeneratorMismatch { left: 2, right: 3 })
        );
        assert!(x(2, 1).bracket(&x(3, 1)).is_err());
    }

    #[test]
    fn coordinates_in_multidegree_blocks() {
        let md = MultiDegree(vec![1, 1]);
        let c = x(2, 1).bracket(&x(2, 2)).unwrap();
        assert_eq!(c.coordinates(&md), SparseVector::from_dense(&[1, -1]));
        let sq = x(2, 1).multiply(&x(2, 1)).unwrap();
        assert!(sq.coordinates(&md).is_zero());
        let anti = &x(2, 1).multiply(&x(2, 2)).unwrap() + &x(2, 2).multiply(&x(2, 1)).unwrap();
        assert_eq!(anti.coordinates(&md), SparseVector::from_dense(&[1, 1]));
    }

    #[test]
    fn block_ranking_matches_enumeration() {
        for md in MultiDegree::all_up_to(3, 5) {
            let block = WordBlock::new(md.clone());
            assert_eq!(block.dim() as u128, multinomial(md.counts()));
            for (i, w) in block.words().iter().enumerate() {
                assert_eq!(block.index_of(&w.0), i);
            }
            assert!(block.words().windows(2).all(|p| p[0] < p[1]));
        }
    }

    #[test]
    fn words_per_degree_is_a_power() {
        for n in 1..=3 {
            for d in 0..=5 {
                let total: u128 = MultiDegree::all_of_total(n, d)
                    .iter()
                    .map(|md| multinomial(md.counts()))
                    .sum();
                assert_eq!(total, word_count(n, d));
            }
        }
    }

    #[test]
    fn necklace_representative_is_least_rotation() {
        assert_eq!(word(&[2, 1, 3]).necklace_rep(), word(&[1, 3, 2]));
        assert_eq!(Word::empty().necklace_rep(), Word::empty());
    }

    #[test]
    fn letters_are_validated() {
        assert!(Word::from_letters(&[0], 2).is_err());
        assert!(Word::from_letters(&[3], 2).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn element() -> impl Strategy<Value = FreeAlgebraElement> {
            prop::collection::vec((prop::collection::vec(1usize..=3, 0..=3), -3i64..=3), 0..=4)
                .prop_map(|terms| {
                    FreeAlgebraElement::from_terms(
                        3,
                        terms
                            .into_iter()
                            .map(|(w, c)| (Word::from_letters(&w, 3).unwrap(), int(c))),
                    )
                })
        }

        proptest! {
            #[test]
            fn multiplication_is_associative(a in element(), b in element(), c in element()) {
                let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
                let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
                prop_assert_eq!(left, right);
            }

            #[test]
            fn bracket_satisfies_jacobi(a in element(), b in element(), c in element()) {
                let t1 = a.bracket(&b.bracket(&c).unwrap()).unwrap();
                let t2 = b.bracket(&c.bracket(&a).unwrap()).unwrap();
                let t3 = c.bracket(&a.bracket(&b).unwrap()).unwrap();
                prop_assert!((&(&t1 + &t2) + &t3).is_zero());
            }

            #[test]
            fn bracket_is_antisymmetric(a in element(), b in element()) {
                prop_assert_eq!(a.bracket(&b).unwrap(), -&b.bracket(&a).unwrap());
            }

            #[test]
            fn multidegrees_add_under_concatenation(
                u in prop::collection::vec(1usize..=3, 0..=5),
                v in prop::collection::vec(1usize..=3, 0..=5),
            ) {
                let u = Word::from_letters(&u, 3).unwrap();
                let v = Word::from_letters(&v, 3).unwrap();
                prop_assert_eq!(u.concat(&v).multidegree(3), u.multidegree(3).add(&v.multidegree(3)));
            }
        }
    }
}
