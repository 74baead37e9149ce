//! Prints one PASS or FAIL line per acceptance criterion and exits nonzero
//! if any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;

use lcsq_core::characters::{
    char_tensor_field, even_mod_exact_character, exact_even_positive_character,
};
use lcsq_core::lcs::bbar1_character;
use lcsq_core::verify::{
    ideal_invariance_suite, phi_kernel_suite, rearrangement_suite, standard_monomial_suite,
    verify_instances, CheckResult, VerificationReport, DEFAULT_IDEAL_PAIRS, DEFAULT_INSTANCES,
    DEFAULT_SEED, PHI_TRIALS,
};
use lcsq_core::{
    b_character, bound, build_lcs_table, Arithmetic, Character, LcsOptions, Partition, Result,
};

struct Outcome {
    ok: bool,
    details: String,
}

fn outcome(ok: bool, details: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        details: details.into(),
    }
}

fn from_checks(checks: &[(String, CheckResult)]) -> Outcome {
    let ok = checks.iter().all(|(_, c)| !c.is_fail());
    let details = checks
        .iter()
        .map(|(name, c)| {
            if c.is_fail() {
                format!("{name} {}: {}", c.status, c.details)
            } else {
                format!("{name} {}", c.status)
            }
        })
        .collect::<Vec<_>>()
        .join("; ");
    outcome(ok, details)
}

fn report<'a>(reports: &'a [VerificationReport], m: usize, n: usize) -> &'a VerificationReport {
    reports
        .iter()
        .find(|r| r.instance.m == m && r.instance.n == n)
        .expect("default instance")
}

fn single_module(reports: &[VerificationReport]) -> Result<Outcome> {
    let r = report(reports, 3, 3);
    let shape = Partition::new(vec![2, 1, 0])?;
    let chi = Character::from(&r.b_character);
    let same_character = chi == char_tensor_field(&shape, 3, r.instance.deg_max)?;
    let dec = r.decomposition.as_ref();
    let expected = BTreeMap::from([(shape, 1u64)]);
    let exact = dec.is_some_and(|d| d.multiplicities == expected && d.is_complete());
    Ok(outcome(
        same_character && exact,
        format!(
            "multigraded character equals F_(2,1,0) through degree {}: {same_character}; decomposition {}",
            r.instance.deg_max,
            dec.map_or("none".to_string(), |d| d
                .multiplicities
                .iter()
                .map(|(p, k)| format!("{p}:{k}"))
                .collect::<Vec<_>>()
                .join(", "))
        ),
    ))
}

fn size_bound(reports: &[VerificationReport]) -> Result<Outcome> {
    let mut ok = true;
    let mut parts = Vec::new();
    for (m, n, expected) in [(3, 2, 4), (3, 3, 4), (4, 2, 9)] {
        let r = report(reports, m, n);
        let b = bound(m, n)?;
        let worst = r.decomposition.as_ref().and_then(|d| d.max_size());
        let pass = b == expected && r.bound_report.as_ref().is_some_and(|b| b.pass);
        ok &= pass;
        parts.push(format!("({m},{n}) max |D| {worst:?} <= {b}: {pass}"));
    }
    Ok(outcome(ok, parts.join("; ")))
}

fn second_quotient() -> Result<Outcome> {
    let dims = b_character(&build_lcs_table(2, 2, 8)?, 2)?.total_degree_series();
    let linear = (2..=8).all(|l| dims[l] == l as u64 - 1);
    let chi = Character::from(&b_character(&build_lcs_table(3, 2, 7)?, 2)?);
    let de_rham = chi == exact_even_positive_character(3, 7);
    Ok(outcome(
        linear && de_rham,
        format!(
            "dim B_2(A_2) = {:?}; B_2(A_3) against exact even forms: {de_rham}",
            &dims[2..]
        ),
    ))
}

fn first_quotient() -> Result<Outcome> {
    let chi = Character::from(&bbar1_character(2, 8)?);
    let ok = chi == even_mod_exact_character(2, 8);
    Ok(outcome(
        ok,
        format!(
            "series {:?}",
            chi.specialize()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
        ),
    ))
}

fn phi_kernel() -> Result<Outcome> {
    let checks = [2, 3, 4]
        .into_iter()
        .map(|n| {
            Ok((
                format!("n={n}"),
                phi_kernel_suite(n, PHI_TRIALS, DEFAULT_SEED)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(from_checks(&checks))
}

fn rearrangements() -> Result<Outcome> {
    Ok(from_checks(&[(
        "m<=5".to_string(),
        rearrangement_suite(5)?,
    )]))
}

fn ideal_invariance() -> Result<Outcome> {
    let checks = DEFAULT_IDEAL_PAIRS
        .into_iter()
        .map(|(m, n)| Ok((format!("({m},{n})"), ideal_invariance_suite(m, n, 3)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(from_checks(&checks))
}

fn standard_monomials() -> Result<Outcome> {
    let checks = DEFAULT_IDEAL_PAIRS
        .into_iter()
        .map(|(m, n)| Ok((format!("({m},{n})"), standard_monomial_suite(m, n, 8)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(from_checks(&checks))
}

fn domination(reports: &[VerificationReport]) -> Outcome {
    let ok = reports.iter().all(|r| r.domination_ok);
    let parts: Vec<String> = reports
        .iter()
        .map(|r| {
            let i = r.instance;
            format!("({},{},{}) {}", i.m, i.n, i.deg_max, r.domination_ok)
        })
        .collect();
    outcome(ok, parts.join("; "))
}

fn oracle(reports: &[VerificationReport], modular: &[VerificationReport]) -> Result<Outcome> {
    let mut ok = true;
    let mut parts = Vec::new();
    for (r, p) in reports.iter().zip(modular) {
        let i = r.instance;
        let dense = lcsq_oracle::b_dims(i.n, i.m, i.deg_max)
            .map_err(|e| lcsq_core::Error::InvalidArgument(e.to_string()))?;
        let expected: Vec<u64> = dense[i.m - 1].iter().map(|&x| x as u64).collect();
        let agree = r.dims() == expected;
        let prime = p.b_character == r.b_character;
        ok &= agree && prime;
        parts.push(format!(
            "({},{},{}) oracle {agree}, prime field {prime}",
            i.m, i.n, i.deg_max
        ));
    }
    Ok(outcome(ok, parts.join("; ")))
}

fn run() -> Result<Vec<(usize, &'static str, Outcome)>> {
    let reports = verify_instances(&DEFAULT_INSTANCES, LcsOptions::default())?;
    let modular = verify_instances(
        &DEFAULT_INSTANCES,
        LcsOptions {
            arithmetic: Arithmetic::PrimeField,
            ..LcsOptions::default()
        },
    )?;
    Ok(vec![
        (
            1,
            "B_3(A_3) is the single module F_(2,1,0)",
            single_module(&reports)?,
        ),
        (
            2,
            "every diagram obeys the size bound",
            size_bound(&reports)?,
        ),
        (3, "B_2 matches exact even forms", second_quotient()?),
        (
            4,
            "first reduced quotient matches even forms modulo exact",
            first_quotient()?,
        ),
        (
            5,
            "kernel identities for phi on random forms",
            phi_kernel()?,
        ),
        (
            6,
            "rearrangement certificates expand to zero",
            rearrangements()?,
        ),
        (7, "vector fields preserve the ideal", ideal_invariance()?),
        (
            8,
            "standard monomials match the product formula",
            standard_monomials()?,
        ),
        (
            9,
            "B_m is dominated by the quotient times truncated forms",
            domination(&reports),
        ),
        (
            10,
            "optimized pipeline agrees with the dense oracle",
            oracle(&reports, &modular)?,
        ),
    ])
}

fn main() -> ExitCode {
    let results = match run() {
        Ok(r) => r,
        Err(e) => {
            println!("FAIL acceptance run aborted: {e}");
            return ExitCode::FAILURE;
        }
    };
    for (id, title, o) in &results {
        println!(
            "{} {id:>2} {title}: {}",
            if o.ok { "PASS" } else { "FAIL" },
            o.details
        );
    }
    let failed = results.iter().filter(|(_, _, o)| !o.ok).count();
    println!(
        "{} of {} criteria pass",
        results.len() - failed,
        results.len()
    );
    if failed > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
