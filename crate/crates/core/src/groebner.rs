//! Buchberger completion in `O_mn = C[x_{ij}]`, standard monomials and
//! Hilbert series of `O_mn / I`.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::characters::Character;
use crate::error::{Error, Result};
use crate::forms::ideal_generators;
use crate::free_algebra::MultiDegree;
use crate::linalg::Rational;
use crate::poly::{degree, divides, lcm, monomials_of_degree, var_index};
pub use crate::poly::{CommPoly, Monomial};

/// Default degree cap for S-pair processing.
pub const DEFAULT_DEG_CAP: usize = 10;

/// Monomial orders on `x_{ij}`. Both rank `x_{ij} > x_{kl}` iff `j > l`,
/// or `j = l` and `i > k`; that is, a larger variable index is larger.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MonomialOrder {
    #[default]
    Lex,
    GrLex,
}

impl MonomialOrder {
    /// Sort key whose natural order is this monomial order.
    fn key(self, mono: &[u32]) -> Vec<u32> {
        let rev = mono.iter().rev().copied();
        match self {
            MonomialOrder::Lex => rev.collect(),
            MonomialOrder::GrLex => std::iter::once(degree(mono)).chain(rev).collect(),
        }
    }

    fn decode(self, key: &[u32]) -> Monomial {
        let body = match self {
            MonomialOrder::Lex => key,
            MonomialOrder::GrLex => &key[1..],
        };
        body.iter().rev().copied().collect()
    }

    pub fn cmp(self, a: &[u32], b: &[u32]) -> std::cmp::Ordering {
        self.key(a).cmp(&self.key(b))
    }
}

/// A polynomial keyed in a fixed order, for fast leading terms.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Ordered {
    order: MonomialOrder,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl Ordered {
    fn from_poly(p: &CommPoly, order: MonomialOrder) -> Self {
        Ordered {
            order,
            terms: p
                .terms()
                .iter()
                .map(|(e, c)| (order.key(e), c.clone()))
                .collect(),
        }
    }

    fn to_poly(&self, nvars: usize) -> CommPoly {
        CommPoly::from_terms(
            nvars,
            self.terms
                .iter()
                .map(|(k, c)| (self.order.decode(k), c.clone())),
        )
    }

    fn leading(&self) -> Option<(Monomial, &Rational)> {
        self.terms
            .iter()
            .next_back()
            .map(|(k, c)| (self.order.decode(k), c))
    }

    fn make_monic(&mut self) {
        if let Some((_, c)) = self.leading() {
            let inv = c.recip();
            for v in self.terms.values_mut() {
                *v *= &inv;
            }
        }
    }

    /// `self -= c · x^shift · g`.
    fn sub_multiple(&mut self, c: &Rational, shift: &[u32], g: &Ordered) {
        for (k, x) in &g.terms {
            let mono: Monomial = self
                .order
                .decode(k)
                .iter()
                .zip(shift)
                .map(|(a, b)| a + b)
                .collect();
            match self.terms.entry(self.order.key(&mono)) {
                Entry::Vacant(v) => {
                    v.insert(-(c * x));
                }
                Entry::Occupied(mut o) => {
                    *o.get_mut() -= c * x;
                    if o.get().is_zero() {
                        o.remove();
                    }
                }
            }
        }
    }
}

fn quotient(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Full normal form of `p` modulo monic polynomials with leading
/// monomials `leads`.
fn normal_form(p: &Ordered, basis: &[Ordered], leads: &[Monomial]) -> Ordered {
    let order = p.order;
    let mut rest = p.clone();
    let mut remainder = Ordered {
        order,
        terms: BTreeMap::new(),
    };
    while let Some((key, c)) = rest.terms.pop_last() {
        let mono = order.decode(&key);
        match leads.iter().position(|l| divides(l, &mono)) {
            Some(idx) => {
                let shift = quotient(&mono, &leads[idx]);
                rest.terms.insert(key, c.clone());
                rest.sub_multiple(&c, &shift, &basis[idx]);
            }
            None => {
                remainder.terms.insert(key, c);
            }
        }
    }
    remainder
}

/// Gröbner basis, possibly truncated at a degree cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub polys: Vec<CommPoly>,
    pub order: MonomialOrder,
    nvars: usize,
    leads: Vec<Monomial>,
    complete_through: Option<usize>,
}

impl GroebnerBasis {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Leading monomials, generating the initial ideal.
    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leads
    }

    pub fn is_partial(&self) -> bool {
        self.complete_through.is_some()
    }

    /// Degree through which the basis is known complete; `None` means
    /// complete in every degree.
    pub fn complete_through(&self) -> Option<usize> {
        self.complete_through
    }

    fn check_degree(&self, degree: usize) -> Result<()> {
        match self.complete_through {
            Some(c) if degree > c => Err(Error::PartialBasis {
                degree,
                complete_through: c,
            }),
            _ => Ok(()),
        }
    }

    pub fn in_initial_ideal(&self, mono: &[u32]) -> bool {
        self.leads.iter().any(|l| divides(l, mono))
    }
}

/// Buchberger's algorithm with the normal selection strategy and the
/// product and chain criteria. S-pairs whose lcm has degree above
/// `deg_cap` are not processed; for homogeneous input the result is then
/// a Gröbner basis through degree `deg_cap`.
pub fn buchberger(
    generators: &[CommPoly],
    order: MonomialOrder,
    deg_cap: usize,
) -> Result<GroebnerBasis> {
    let nvars = generators
        .first()
        .map(CommPoly::nvars)
        .ok_or_else(|| Error::InvalidArgument("no generators".into()))?;
    if generators.iter().any(|g| g.is_zero() || g.nvars() != nvars) {
        return Err(Error::InvalidArgument(
            "generators must be nonzero and share one ring".into(),
        ));
    }
    let mut basis: Vec<Ordered> = Vec::new();
    let mut leads: Vec<Monomial> = Vec::new();
    let mut pairs: BTreeSet<(u32, Vec<u32>, usize, usize)> = BTreeSet::new();
    let mut truncated = false;

    let add = |g: Ordered,
               basis: &mut Vec<Ordered>,
               leads: &mut Vec<Monomial>,
               pairs: &mut BTreeSet<(u32, Vec<u32>, usize, usize)>| {
        let lead = g.leading().expect("nonzero").0;
        let new = basis.len();
        for (i, l) in leads.iter().enumerate() {
            let m = lcm(l, &lead);
            pairs.insert((degree(&m), order.key(&m), i, new));
        }
        basis.push(g);
        leads.push(lead);
    };

    for g in generators {
        let mut p = normal_form(&Ordered::from_poly(g, order), &basis, &leads);
        if !p.terms.is_empty() {
            p.make_monic();
            add(p, &mut basis, &mut leads, &mut pairs);
        }
    }

    while let Some((deg, _, i, j)) = pairs.pop_first() {
        if deg as usize > deg_cap {
            truncated = true;
            break;
        }
        let l = lcm(&leads[i], &leads[j]);
        let coprime = leads[i]
            .iter()
            .zip(&leads[j])
            .all(|(a, b)| *a == 0 || *b == 0);
        if coprime {
            continue;
        }
        let pending = |a: usize, b: usize| {
            let (a, b) = (a.min(b), a.max(b));
            let m = lcm(&leads[a], &leads[b]);
            pairs.contains(&(degree(&m), order.key(&m), a, b))
        };
        let chain = (0..leads.len()).any(|k| {
            k != i && k != j && divides(&leads[k], &l) && !pending(i, k) && !pending(j, k)
        });
        if chain {
            continue;
        }
        let mut s = Ordered {
            order,
            terms: BTreeMap::new(),
        };
        s.sub_multiple(&-Rational::one(), &quotient(&l, &leads[i]), &basis[i]);
        s.sub_multiple(&Rational::one(), &quotient(&l, &leads[j]), &basis[j]);
        let mut r = normal_form(&s, &basis, &leads);
        if !r.terms.is_empty() {
            r.make_monic();
            add(r, &mut basis, &mut leads, &mut pairs);
        }
    }

    // Interreduce.
    let keep: Vec<usize> = (0..basis.len())
        .filter(|&i| {
            !(0..basis.len())
                .any(|k| k != i && divides(&leads[k], &leads[i]) && (leads[k] != leads[i] || k < i))
        })
        .collect();
    let kept: Vec<Ordered> = keep.iter().map(|&i| basis[i].clone()).collect();
    let kept_leads: Vec<Monomial> = keep.iter().map(|&i| leads[i].clone()).collect();
    let mut reduced = Vec::with_capacity(kept.len());
    for (idx, g) in kept.iter().enumerate() {
        let (lead_key, lead_c) = g
            .terms
            .last_key_value()
            .map(|(k, c)| (k.clone(), c.clone()))
            .unwrap();
        let mut tail = g.clone();
        tail.terms.remove(&lead_key);
        let others: Vec<Ordered> = kept
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != idx)
            .map(|(_, p)| p.clone())
            .collect();
        let other_leads: Vec<Monomial> = kept_leads
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != idx)
            .map(|(_, l)| l.clone())
            .collect();
        let mut r = normal_form(&tail, &others, &other_leads);
        r.terms.insert(lead_key, lead_c);
        r.make_monic();
        reduced.push(r);
    }
    let mut polys: Vec<(Monomial, CommPoly)> = reduced
        .iter()
        .map(|p| (p.leading().unwrap().0, p.to_poly(nvars)))
        .collect();
    polys.sort_by(|a, b| order.cmp(&a.0, &b.0));
    Ok(GroebnerBasis {
        leads: polys.iter().map(|(l, _)| l.clone()).collect(),
        polys: polys.into_iter().map(|(_, p)| p).collect(),
        order,
        nvars,
        complete_through: truncated.then_some(deg_cap),
    })
}

/// Normal form of `p`; zero exactly when `p` lies in the ideal.
pub fn reduce_mod(gb: &GroebnerBasis, p: &CommPoly) -> Result<CommPoly> {
    if p.nvars() != gb.nvars {
        return Err(Error::DimensionMismatch {
            expected: gb.nvars,
            found: p.nvars(),
        });
    }
    gb.check_degree(p.total_degree().unwrap_or(0) as usize)?;
    let basis: Vec<Ordered> = gb
        .polys
        .iter()
        .map(|g| Ordered::from_poly(g, gb.order))
        .collect();
    let r = normal_form(&Ordered::from_poly(p, gb.order), &basis, &gb.leads);
    Ok(r.to_poly(gb.nvars))
}

/// Number of degree-`degree` monomials outside the initial ideal.
pub fn standard_monomial_count(gb: &GroebnerBasis, degree: usize) -> Result<u64> {
    gb.check_degree(degree)?;
    Ok(monomials_of_degree(gb.nvars, degree as u32)
        .iter()
        .filter(|mono| !gb.in_initial_ideal(mono))
        .count() as u64)
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `(1-t)^{-n} · Π_{k=2}^{m} Σ_{a=0}^{2k-3} C(a+n-1, n-1) t^a`, truncated.
pub fn hilbert_series_product_formula(m: usize, n: usize, deg_max: usize) -> Character {
    let one_var = |coeffs: Vec<u64>| {
        Character::from_terms(
            1,
            deg_max,
            coeffs.into_iter().enumerate().map(|(d, c)| {
                (
                    MultiDegree(vec![d]),
                    Rational::from_integer(BigInt::from(c)),
                )
            }),
        )
    };
    let mut acc = one_var(
        (0..=deg_max)
            .map(|d| binomial((d + n - 1) as u64, (n - 1) as u64))
            .collect(),
    );
    for k in 2..=m {
        let factor = one_var(
            (0..=2 * k - 3)
                .map(|a| binomial((a + n - 1) as u64, (n - 1) as u64))
                .collect(),
        );
        acc = acc.mul(&factor);
    }
    acc
}

/// The same product with `C(a+n-1, n)` in place of `C(a+n-1, n-1)`.
pub fn hilbert_series_as_printed(m: usize, n: usize, deg_max: usize) -> Vec<u64> {
    let mut acc: Vec<u64> = (0..=deg_max)
        .map(|d| binomial((d + n - 1) as u64, (n - 1) as u64))
        .collect();
    for k in 2..=m {
        let factor: Vec<u64> = (0..=2 * k - 3)
            .map(|a| binomial((a + n - 1) as u64, n as u64))
            .collect();
        let mut next = vec![0u64; deg_max + 1];
        for (i, x) in acc.iter().enumerate() {
            for (a, y) in factor.iter().enumerate() {
                if i + a <= deg_max {
                    next[i + a] += x * y;
                }
            }
        }
        acc = next;
    }
    acc
}

/// Multiplies a single-variable series by `(1-t)^n`.
pub fn times_one_minus_t_pow(series: &[i128], n: usize) -> Vec<i128> {
    let mut s = series.to_vec();
    for _ in 0..n {
        for i in (1..s.len()).rev() {
            s[i] -= s[i - 1];
        }
    }
    s
}

/// Index data `(k, i_list, j_list)` of the generators of `I`, with
/// `i_s <= j_s` to drop repeats.
pub fn ideal_generator_indices(m: usize, n: usize) -> Vec<(usize, Vec<usize>, Vec<usize>)> {
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i..=n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for k in 2..=m {
        let mut choice = vec![0usize; k - 1];
        loop {
            out.push((
                k,
                choice.iter().map(|&c| pairs[c].0).collect(),
                choice.iter().map(|&c| pairs[c].1).collect(),
            ));
            let mut pos = 0;
            while pos < choice.len() && choice[pos] + 1 == pairs.len() {
                choice[pos] = 0;
                pos += 1;
            }
            if pos == choice.len() {
                break;
            }
            choice[pos] += 1;
        }
    }
    out
}

/// All products `Π_{s<k} (x_{i_s s} - x_{i_s k})(x_{j_s s} - x_{j_s k})`
/// for `2 <= k <= m`, without repeats.
pub fn ideal_generator_family(m: usize, n: usize) -> Vec<CommPoly> {
    let mut out: Vec<CommPoly> = Vec::new();
    for (k, i_list, j_list) in ideal_generator_indices(m, n) {
        let g = ideal_generators(m, n, k, &i_list, &j_list).expect("indices in range");
        if !out.contains(&g) {
            out.push(g);
        }
    }
    out
}

/// For each column `k >= 2`, whether every monomial of degree `2k-2` in the
/// variables `x_{1k}, ..., x_{nk}` lies in the initial ideal.
pub fn column_initial_check(gb: &GroebnerBasis, m: usize, n: usize) -> Vec<(usize, bool)> {
    (2..=m)
        .map(|k| {
            let ok = monomials_of_degree(n, (2 * k - 2) as u32)
                .iter()
                .all(|local| {
                    let mut mono = vec![0; n * m];
                    for (i, &a) in local.iter().enumerate() {
                        mono[var_index(n, i + 1, k)] = a;
                    }
                    gb.in_initial_ideal(&mono)
                });
            (k, ok)
        })
        .collect()
}

/// Whether the leading monomials of `generators` already generate the
/// initial ideal of `gb`.
pub fn generators_are_groebner(generators: &[CommPoly], gb: &GroebnerBasis) -> bool {
    let gen_leads: Vec<Monomial> = generators
        .iter()
        .filter_map(|g| Ordered::from_poly(g, gb.order).leading().map(|(l, _)| l))
        .collect();
    gb.leads
        .iter()
        .all(|l| gen_leads.iter().any(|g| divides(g, l)))
}
