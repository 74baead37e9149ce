//! End-to-end verification of the size bound and the supporting identities.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::characters::{
    bound, char_tensor_field, check_bound, decompose, exact_even_positive_character, BoundReport,
    Character, Decomposition, Partition,
};
use crate::error::{Error, Result};
use crate::forms::{
    act_on_generator_by_leibniz, act_vector_field, ideal_generators, phi_tensor, random_even_form,
    random_form_of_rank, PolyForm, VectorField,
};
use crate::groebner::{
    buchberger, column_initial_check, generators_are_groebner, hilbert_series_product_formula,
    ideal_generator_family, ideal_generator_indices, reduce_mod, standard_monomial_count,
    times_one_minus_t_pow, MonomialOrder, DEFAULT_DEG_CAP,
};
use crate::lcs::{
    b_character, build_lcs_table_with, rearrangement, BQuotientCharacter, LcsOptions,
};
use crate::linalg::Rational;
use crate::poly::{monomials_of_degree, var_index, CommPoly};

/// Instances run by `verify --suite default`, as `(m, n, deg_max)`.
pub const DEFAULT_INSTANCES: [(usize, usize, usize); 5] =
    [(2, 2, 8), (3, 2, 8), (2, 3, 7), (3, 3, 7), (4, 2, 9)];

/// Seed used by the randomized suites unless one is given.
pub const DEFAULT_SEED: u64 = 20_240_601;

/// Random pairs per `n` in the kernel suite.
pub const PHI_TRIALS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub status: Status,
    pub details: String,
}

impl CheckResult {
    pub fn pass(details: impl Into<String>) -> Self {
        CheckResult {
            status: Status::Pass,
            details: details.into(),
        }
    }

    pub fn fail(details: impl Into<String>) -> Self {
        CheckResult {
            status: Status::Fail,
            details: details.into(),
        }
    }

    pub fn skipped(details: impl Into<String>) -> Self {
        CheckResult {
            status: Status::Skipped,
            details: details.into(),
        }
    }

    fn from_bool(ok: bool, details: impl Into<String>) -> Self {
        if ok {
            Self::pass(details)
        } else {
            Self::fail(details)
        }
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub m: usize,
    pub n: usize,
    pub deg_max: usize,
}

/// Everything computed for one `(m, n, deg_max)`.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub instance: Instance,
    pub b_character: BQuotientCharacter,
    /// `None` when the greedy decomposition hit a negative coefficient.
    pub decomposition: Option<Decomposition>,
    pub bound_value: Option<usize>,
    pub bound_report: Option<BoundReport>,
    pub domination_ok: bool,
    pub lemma_results: BTreeMap<String, CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.lemma_results.values().all(|c| !c.is_fail())
    }

    /// `dim B_m(A_n)[ℓ]` for `ℓ = 0..=deg_max`.
    pub fn dims(&self) -> Vec<u64> {
        self.b_character.total_degree_series()
    }
}

fn to_u64(c: &Rational) -> u64 {
    c.to_integer()
        .to_u64()
        .expect("nonnegative integer coefficient")
}

fn series_u64(chi: &Character) -> Vec<u64> {
    chi.specialize().iter().map(to_u64).collect()
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

/// `2 floor((n - 2) / 2) (m - 1)`, the largest total exterior rank that
/// survives in the quotient.
pub fn exterior_rank_cap(m: usize, n: usize) -> usize {
    2 * (n.saturating_sub(2) / 2) * (m - 1)
}

/// `Σ Π_l C(n, q_l) t^{Σ q_l}` over `m` even ranks `q_l` with total at
/// most `r`, truncated at `deg_max`.
pub fn exterior_truncation_series(m: usize, n: usize, r: usize, deg_max: usize) -> Vec<u64> {
    let mut acc = vec![0u64; deg_max + 1];
    acc[0] = 1;
    for _ in 0..m {
        let mut next = vec![0u64; deg_max + 1];
        for (d, &c) in acc.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for q in (0..=n).step_by(2) {
                if d + q <= deg_max.min(r) {
                    next[d + q] += c * binomial(n, q);
                }
            }
        }
        acc = next;
    }
    acc
}

fn convolve(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len()];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            if i + j < out.len() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// `dim (O_mn / I)_d` for `d = 0..=deg_max`, read off a Gröbner basis of
/// the generators.
pub fn quotient_series(m: usize, n: usize, deg_max: usize) -> Result<Vec<u64>> {
    if m == 1 {
        return Ok((0..=deg_max).map(|d| binomial(d + n - 1, n - 1)).collect());
    }
    let gens = ideal_generator_family(m, n);
    let gb = buchberger(&gens, MonomialOrder::Lex, deg_max.max(DEFAULT_DEG_CAP))?;
    (0..=deg_max)
        .map(|d| standard_monomial_count(&gb, d))
        .collect()
}

/// Coefficientwise `lhs <= rhs`, with the first violation if any.
fn dominated(lhs: &[u64], rhs: &[u64]) -> std::result::Result<(), usize> {
    match lhs.iter().zip(rhs).position(|(a, b)| a > b) {
        Some(l) => Err(l),
        None => Ok(()),
    }
}

fn domination_check(b_dims: &[u64], m: usize, n: usize, deg_max: usize) -> Result<CheckResult> {
    let r = exterior_rank_cap(m, n);
    let lambda = exterior_truncation_series(m, n, r, deg_max);
    let computed = convolve(&quotient_series(m, n, deg_max)?, &lambda);
    let formula = convolve(
        &series_u64(&hilbert_series_product_formula(m, n, deg_max)),
        &lambda,
    );
    let details = format!("r={r}; B={b_dims:?}; computed quotient bound={computed:?}; product formula bound={formula:?}");
    Ok(
        match (dominated(b_dims, &computed), dominated(b_dims, &formula)) {
            (Ok(()), Ok(())) => CheckResult::pass(details),
            (Err(l), _) | (_, Err(l)) => {
                CheckResult::fail(format!("violated at degree {l}; {details}"))
            }
        },
    )
}

/// Runs the full pipeline for one instance.
pub fn verify_instance(m: usize, n: usize, deg_max: usize) -> Result<VerificationReport> {
    verify_instance_with(m, n, deg_max, LcsOptions::default())
}

pub fn verify_instance_with(
    m: usize,
    n: usize,
    deg_max: usize,
    options: LcsOptions,
) -> Result<VerificationReport> {
    if m == 0 || n == 0 || deg_max == 0 {
        return Err(Error::InvalidArgument(format!(
            "need m, n, deg_max >= 1, got ({m}, {n}, {deg_max})"
        )));
    }
    let table = build_lcs_table_with(n, m, deg_max, options)?;
    let b = b_character(&table, m)?;
    let chi = Character::from(&b);
    let b_dims = b.total_degree_series();
    let mut checks = BTreeMap::new();

    let decomposition = match decompose(&chi, deg_max) {
        Ok(dec) => {
            let shapes: Vec<String> = dec
                .multiplicities
                .iter()
                .map(|(d, k)| format!("{d}:{k}"))
                .collect();
            checks.insert(
                "decomposition".to_string(),
                CheckResult::from_bool(
                    dec.is_complete(),
                    format!("through degree {}: {}", dec.deg_reliable, shapes.join(", ")),
                ),
            );
            Some(dec)
        }
        Err(e) => {
            checks.insert(
                "decomposition".to_string(),
                CheckResult::fail(e.to_string()),
            );
            None
        }
    };

    let bound_value = bound(m, n).ok();
    let bound_report = match (&decomposition, bound_value) {
        (Some(dec), Some(_)) => {
            let report = check_bound(dec, m, n)?;
            let worst = dec.max_size().unwrap_or(0);
            checks.insert(
                "bound".to_string(),
                CheckResult::from_bool(
                    report.pass,
                    format!("max |D| = {worst}, bound = {}", report.bound),
                ),
            );
            Some(report)
        }
        (None, Some(b)) => {
            checks.insert(
                "bound".to_string(),
                CheckResult::fail(format!("no decomposition to compare with bound {b}")),
            );
            None
        }
        (_, None) => {
            checks.insert(
                "bound".to_string(),
                CheckResult::skipped(format!(
                    "out of hypothesis: the bound needs m >= 3 and n >= 2, got m={m}, n={n}"
                )),
            );
            None
        }
    };

    let domination = domination_check(&b_dims, m, n, deg_max)?;
    let domination_ok = !domination.is_fail();
    checks.insert("domination".to_string(), domination);

    if let Some(dec) = &decomposition {
        let recombined = series_u64(&dec.recombine()?);
        let upto = dec.deg_reliable + 1;
        checks.insert(
            "finite_length".to_string(),
            CheckResult::from_bool(
                recombined[..upto] == b_dims[..upto],
                format!("Σ ν(D) dim F_D[ℓ] = {:?}", &recombined[..upto]),
            ),
        );
    }

    if m == 2 {
        let exact = exact_even_positive_character(n, deg_max);
        checks.insert(
            "de_rham".to_string(),
            CheckResult::from_bool(
                exact == chi,
                "multigraded character against closed even forms of positive degree",
            ),
        );
    }

    if (m, n) == (3, 3) {
        let shape = Partition::new(vec![2, 1, 0])?;
        let expected: BTreeMap<Partition, u64> = [(shape.clone(), 1)].into();
        let ok = decomposition
            .as_ref()
            .is_some_and(|d| d.multiplicities == expected)
            && char_tensor_field(&shape, 3, deg_max)? == chi;
        checks.insert(
            "single_module".to_string(),
            CheckResult::from_bool(ok, "character against F_(2,1,0)"),
        );
    }

    Ok(VerificationReport {
        instance: Instance { m, n, deg_max },
        b_character: b,
        decomposition,
        bound_value,
        bound_report,
        domination_ok,
        lemma_results: checks,
    })
}

/// Verifies several instances in parallel, keeping input order.
pub fn verify_instances(
    instances: &[(usize, usize, usize)],
    options: LcsOptions,
) -> Result<Vec<VerificationReport>> {
    instances
        .par_iter()
        .map(|&(m, n, d)| verify_instance_with(m, n, d, options))
        .collect()
}

/// Names of the property suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Lemma {
    PhiKernel,
    Rearrangement,
    IdealInvariance,
    RankVanishing,
    StandardMonomials,
}

impl Lemma {
    pub const ALL: [Lemma; 5] = [
        Lemma::PhiKernel,
        Lemma::Rearrangement,
        Lemma::IdealInvariance,
        Lemma::RankVanishing,
        Lemma::StandardMonomials,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Lemma::PhiKernel => "phi_kernel",
            Lemma::Rearrangement => "rearrangement",
            Lemma::IdealInvariance => "ideal_invariance",
            Lemma::RankVanishing => "rank_vanishing",
            Lemma::StandardMonomials => "standard_monomials",
        }
    }

    pub fn alias(self) -> &'static str {
        match self {
            Lemma::PhiKernel => "3.1",
            Lemma::Rearrangement => "3.2",
            Lemma::IdealInvariance => "3.3",
            Lemma::RankVanishing => "3.4",
            Lemma::StandardMonomials => "3.5",
        }
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Lemma {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Lemma::ALL
            .into_iter()
            .find(|l| l.name() == s || l.alias() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown lemma {s:?}")))
    }
}

fn column_difference(n: usize, i: usize) -> CommPoly {
    CommPoly::var(2 * n, var_index(n, i, 1))
        .sub(&CommPoly::var(2 * n, var_index(n, i, 2)))
        .expect("same ring")
}

/// `φ` kills `(x_{i1} - x_{i2})(x_{j1} - x_{j2}) ω_1 ⊗ ω_2`, and
/// `φ((x_{i1} - x_{i2}) ω_1 ⊗ ω_2) = dx_i ∧ d(ω_1 ∧ ω_2)`, on `trials`
/// random pairs of even forms.
pub fn phi_kernel_suite(n: usize, trials: usize, seed: u64) -> Result<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ n as u64);
    let max_rank = n.saturating_sub(1) as u32;
    let mut evaluations = 0usize;
    for trial in 0..trials {
        let w1 = random_even_form(n, 3, max_rank, &mut rng);
        let w2 = random_even_form(n, 3, max_rank, &mut rng);
        let eta = PolyForm::tensor(&[w1.clone(), w2.clone()])?;
        let d_wedge = w1.wedge(&w2)?.total_d();
        for i in 1..=n {
            let lhs = phi_tensor(&eta.mul_poly(&column_difference(n, i))?)?;
            let rhs = PolyForm::dx(n, 1, i, 1).wedge(&d_wedge)?;
            if lhs != rhs {
                return Ok(CheckResult::fail(format!(
                    "n={n}, trial {trial}, i={i}: single difference gives {lhs} instead of {rhs}"
                )));
            }
            for j in 1..=n {
                let p = column_difference(n, i).mul(&column_difference(n, j))?;
                let image = phi_tensor(&eta.mul_poly(&p)?)?;
                evaluations += 1;
                if !image.is_zero() {
                    return Ok(CheckResult::fail(format!(
                        "n={n}, trial {trial}, i={i}, j={j}: image {image} is nonzero"
                    )));
                }
            }
        }
    }
    Ok(CheckResult::pass(format!(
        "n={n}: {trials} random pairs, {evaluations} products vanish, single differences match dx_i ∧ d(ω1 ∧ ω2)"
    )))
}

/// Every rearrangement certificate with `2 <= m <= m_max` expands to zero.
pub fn rearrangement_suite(m_max: usize) -> Result<CheckResult> {
    let mut count = 0;
    for m in 2..=m_max {
        for k in 1..=m {
            let cert = rearrangement(m, k)?;
            if !cert.verify() {
                return Ok(CheckResult::fail(format!(
                    "m={m}, k={k}: residual {}",
                    cert.residual()
                )));
            }
            count += 1;
        }
    }
    Ok(CheckResult::pass(format!(
        "{count} certificates for m <= {m_max} expand to zero"
    )))
}

/// `f ∂/∂y_i` maps every generator of `I` into `I`, for all monomials `f`
/// of degree at most `f_degree_max`.
pub fn ideal_invariance_suite(m: usize, n: usize, f_degree_max: u32) -> Result<CheckResult> {
    if m < 2 {
        return Ok(CheckResult::skipped(format!("m={m}: the ideal is zero")));
    }
    let gens = ideal_generator_family(m, n);
    let indices = ideal_generator_indices(m, n);
    let top = gens
        .iter()
        .filter_map(CommPoly::total_degree)
        .max()
        .unwrap_or(0) as usize;
    let gb = buchberger(
        &gens,
        MonomialOrder::Lex,
        (top + f_degree_max as usize).max(DEFAULT_DEG_CAP),
    )?;
    let fields: Vec<VectorField> = (0..=f_degree_max)
        .flat_map(|d| monomials_of_degree(n, d))
        .flat_map(|mono| {
            let f = CommPoly::monomial(mono, Rational::one());
            (1..=n).map(move |i| VectorField::new(i, f.clone()).expect("component in range"))
        })
        .collect();
    let mut checked = 0usize;
    for (k, i_list, j_list) in &indices {
        let g = ideal_generators(m, n, *k, i_list, j_list)?;
        for v in &fields {
            let image = act_vector_field(v, &g, m)?;
            if image != act_on_generator_by_leibniz(v, m, *k, i_list, j_list)? {
                return Ok(CheckResult::fail(format!(
                    "(m,n)=({m},{n}): Leibniz expansion disagrees for k={k}, i={i_list:?}, j={j_list:?}, component {}",
                    v.component
                )));
            }
            let r = reduce_mod(&gb, &image)?;
            if !r.is_zero() {
                return Ok(CheckResult::fail(format!(
                    "(m,n)=({m},{n}): generator k={k}, i={i_list:?}, j={j_list:?} under field component {} leaves remainder {r}",
                    v.component
                )));
            }
            checked += 1;
        }
    }
    Ok(CheckResult::pass(format!(
        "(m,n)=({m},{n}): {} generators, {} fields, {checked} images reduce to zero",
        gens.len(),
        fields.len()
    )))
}

/// Rank vanishing: every tuple of even ranks with total above the cap has
/// a pair whose differentials wedge to zero for dimension reasons, and
/// such wedges vanish on random forms.
pub fn rank_vanishing_suite(m: usize, n: usize, trials: usize, seed: u64) -> Result<CheckResult> {
    if m < 2 {
        return Ok(CheckResult::skipped(format!("m={m}: no brackets")));
    }
    let r = exterior_rank_cap(m, n);
    let evens: Vec<usize> = (0..=n).step_by(2).collect();
    let mut tuple = vec![0usize; m];
    let mut tuples = 0usize;
    loop {
        let q: Vec<usize> = tuple.iter().map(|&t| evens[t]).collect();
        if q.iter().sum::<usize>() > r {
            let k = (0..m).max_by_key(|&l| q[l]).expect("m >= 2");
            if let Some(l) = (0..m).find(|&l| l != k && q[k] + q[l] + 2 <= n) {
                return Ok(CheckResult::fail(format!(
                    "(m,n)=({m},{n}): ranks {q:?} exceed {r} but ranks {} and {} fit",
                    q[k], q[l]
                )));
            }
            tuples += 1;
        }
        let mut pos = 0;
        while pos < m && tuple[pos] + 1 == evens.len() {
            tuple[pos] = 0;
            pos += 1;
        }
        if pos == m {
            break;
        }
        tuple[pos] += 1;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((m as u64) << 8) ^ n as u64);
    let mut vanishing = 0usize;
    let mut surviving = 0usize;
    for &qa in &evens {
        for &qb in &evens {
            for _ in 0..trials {
                let a = random_form_of_rank(n, 2, qa as u32, &mut rng).total_d();
                let b = random_form_of_rank(n, 2, qb as u32, &mut rng).total_d();
                let w = a.wedge(&b)?;
                if qa + qb + 2 > n {
                    if !w.is_zero() {
                        return Ok(CheckResult::fail(format!(
                            "(m,n)=({m},{n}): ranks {qa}+{qb} give nonzero {w}"
                        )));
                    }
                    vanishing += 1;
                } else if !w.is_zero() {
                    surviving += 1;
                }
            }
        }
    }
    Ok(CheckResult::pass(format!(
        "(m,n)=({m},{n}), r={r}: {tuples} rank tuples above the cap, {vanishing} random wedges vanish, {surviving} below the cap survive"
    )))
}

/// Standard-monomial counts of `I` against the product formula, and the
/// degree of the Hilbert numerator `(1-t)^n · char(O_mn/I)`.
pub fn standard_monomial_suite(m: usize, n: usize, deg_max: usize) -> Result<CheckResult> {
    if m < 2 {
        return Ok(CheckResult::skipped(format!("m={m}: the ideal is zero")));
    }
    let gens = ideal_generator_family(m, n);
    let gb = buchberger(&gens, MonomialOrder::Lex, deg_max.max(DEFAULT_DEG_CAP))?;
    let counts: Vec<u64> = (0..=deg_max)
        .map(|d| standard_monomial_count(&gb, d))
        .collect::<Result<_>>()?;
    let formula = series_u64(&hilbert_series_product_formula(m, n, deg_max));
    let series: Vec<i128> = counts.iter().map(|&c| c as i128).collect();
    let numerator = times_one_minus_t_pow(&series, n);
    let expected_degree = (m - 1) * (m - 1);
    let numerator_degree = numerator.iter().rposition(|c| !c.is_zero());
    let settled = deg_max > expected_degree + 1;
    let degree_ok = settled && numerator_degree == Some(expected_degree);
    let columns_ok = column_initial_check(&gb, m, n).iter().all(|(_, ok)| *ok);
    let gens_gb = generators_are_groebner(&gens, &gb);
    let details = format!(
        "(m,n)=({m},{n}): counts {counts:?}, product formula {formula:?}, numerator {numerator:?} (degree {numerator_degree:?}, expected {expected_degree}), column monomials in initial ideal: {columns_ok}, generators already a Gröbner basis: {gens_gb}, {} basis elements",
        gb.polys.len()
    );
    if let Some(l) = counts.iter().zip(&formula).position(|(a, b)| a != b) {
        return Ok(CheckResult::fail(format!(
            "count differs from the product formula first at degree {l}; {details}"
        )));
    }
    Ok(CheckResult::from_bool(degree_ok && columns_ok, details))
}

/// Runs one suite over the relevant instances drawn from `n_list` and
/// `m_list`.
pub fn verify_lemma(
    lemma: Lemma,
    n_list: &[usize],
    m_list: &[usize],
    seed: u64,
) -> Result<BTreeMap<String, CheckResult>> {
    let mut out = BTreeMap::new();
    let pairs = || {
        m_list
            .iter()
            .flat_map(|&m| n_list.iter().map(move |&n| (m, n)))
    };
    match lemma {
        Lemma::PhiKernel => {
            for &n in n_list {
                out.insert(
                    format!("{lemma}[n={n}]"),
                    phi_kernel_suite(n, PHI_TRIALS, seed)?,
                );
            }
        }
        Lemma::Rearrangement => {
            let m_max = m_list.iter().copied().max().unwrap_or(2).max(2);
            out.insert(format!("{lemma}[m<={m_max}]"), rearrangement_suite(m_max)?);
        }
        Lemma::IdealInvariance => {
            for (m, n) in pairs() {
                out.insert(
                    format!("{lemma}[m={m},n={n}]"),
                    ideal_invariance_suite(m, n, 3)?,
                );
            }
        }
        Lemma::RankVanishing => {
            for (m, n) in pairs() {
                out.insert(
                    format!("{lemma}[m={m},n={n}]"),
                    rank_vanishing_suite(m, n, 5, seed)?,
                );
            }
        }
        Lemma::StandardMonomials => {
            for (m, n) in pairs() {
                out.insert(
                    format!("{lemma}[m={m},n={n}]"),
                    standard_monomial_suite(m, n, 8)?,
                );
            }
        }
    }
    Ok(out)
}

/// All suites, in parallel.
pub fn verify_lemmas(
    n_list: &[usize],
    m_list: &[usize],
    seed: u64,
) -> Result<BTreeMap<String, CheckResult>> {
    let parts: Vec<BTreeMap<String, CheckResult>> = Lemma::ALL
        .par_iter()
        .map(|&l| verify_lemma(l, n_list, m_list, seed))
        .collect::<Result<_>>()?;
    Ok(parts.into_iter().flatten().collect())
}

/// `(m, n)` pairs for the ideal suites in the default run.
pub const DEFAULT_IDEAL_PAIRS: [(usize, usize); 3] = [(2, 2), (3, 2), (2, 3)];

/// The suites run by `verify --suite default`.
pub fn default_lemma_checks(seed: u64) -> Result<BTreeMap<String, CheckResult>> {
    type Job = (Lemma, Vec<usize>, Vec<usize>);
    let mut jobs: Vec<Job> = vec![
        (Lemma::PhiKernel, vec![2, 3, 4], vec![2]),
        (Lemma::Rearrangement, vec![], vec![5]),
        (Lemma::RankVanishing, vec![2, 3, 4, 5], vec![2, 3, 4, 5]),
    ];
    for (m, n) in DEFAULT_IDEAL_PAIRS {
        jobs.push((Lemma::IdealInvariance, vec![n], vec![m]));
        jobs.push((Lemma::StandardMonomials, vec![n], vec![m]));
    }
    let parts: Vec<BTreeMap<String, CheckResult>> = jobs
        .par_iter()
        .map(|(l, n_list, m_list)| verify_lemma(*l, n_list, m_list, seed))
        .collect::<Result<_>>()?;
    Ok(parts.into_iter().flatten().collect())
}
