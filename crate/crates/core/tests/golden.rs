use std::collections::BTreeMap;
use std::path::PathBuf;

use lcsq_core::lcs::{bbar1_character, z_subspace};
use lcsq_core::verify::DEFAULT_INSTANCES;
use lcsq_core::{
    b_character, build_lcs_table, build_lcs_table_with, decompose, Arithmetic, Character,
    LcsOptions, MultiDegree,
};
use serde_json::Value;

fn fixture(m: usize, n: usize, d: usize) -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(format!("b_m{m}_n{n}_d{d}.json"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn as_u64s(v: &Value) -> Vec<u64> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect()
}

#[test]
fn pipeline_matches_golden_files() {
    for (m, n, d) in DEFAULT_INSTANCES {
        let golden = fixture(m, n, d);
        assert_eq!(golden["schema_version"], 1);
        let table = build_lcs_table(n, m, d).unwrap();
        let b = b_character(&table, m).unwrap();
        assert_eq!(
            b.total_degree_series()[1..],
            as_u64s(&golden["dims"])[..],
            "({m},{n},{d})"
        );

        let multigraded: BTreeMap<MultiDegree, u64> = golden["multigraded"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| {
                let md = as_u64s(&e["multidegree"])
                    .into_iter()
                    .map(|x| x as usize)
                    .collect();
                (MultiDegree(md), e["dim"].as_u64().unwrap())
            })
            .collect();
        assert_eq!(b.coefficients, multigraded, "({m},{n},{d})");

        let dec = decompose(&Character::from(&b), d).unwrap();
        let shapes: BTreeMap<String, u64> = dec
            .multiplicities
            .iter()
            .map(|(p, k)| {
                let parts: Vec<String> = p.padded(n).iter().map(usize::to_string).collect();
                (format!("[{}]", parts.join(",")), *k)
            })
            .collect();
        let golden_shapes: BTreeMap<String, u64> = golden["decomposition"]
            .as_object()
            .unwrap()
            .iter()
            .map(|(k, v)| (k.clone(), v.as_u64().unwrap()))
            .collect();
        assert_eq!(shapes, golden_shapes, "({m},{n},{d})");
    }
}

#[test]
fn golden_dims_come_from_the_oracle() {
    for (m, n, d) in DEFAULT_INSTANCES {
        let oracle = lcsq_oracle::b_dims(n, m, d).unwrap();
        let dims: Vec<u64> = oracle[m - 1][1..].iter().map(|&x| x as u64).collect();
        assert_eq!(dims, as_u64s(&fixture(m, n, d)["dims"]), "({m},{n},{d})");
    }
}

#[test]
fn every_level_matches_the_oracle() {
    for (n, m_max, d) in [(2, 5, 8), (3, 3, 6), (4, 2, 5)] {
        let table = build_lcs_table(n, m_max, d).unwrap();
        let oracle = lcsq_oracle::b_dims(n, m_max, d).unwrap();
        for m in 1..=m_max {
            let ours: Vec<u64> = b_character(&table, m).unwrap().total_degree_series();
            let theirs: Vec<u64> = oracle[m - 1].iter().map(|&x| x as u64).collect();
            assert_eq!(ours, theirs, "n={n}, m={m}");
        }
    }
}

#[test]
fn prime_field_agrees_on_default_instances() {
    let fast = LcsOptions {
        arithmetic: Arithmetic::PrimeField,
        ..LcsOptions::default()
    };
    for (m, n, d) in DEFAULT_INSTANCES {
        let exact = b_character(&build_lcs_table(n, m, d).unwrap(), m).unwrap();
        let modular = b_character(&build_lcs_table_with(n, m, d, fast).unwrap(), m).unwrap();
        assert_eq!(exact, modular, "({m},{n},{d})");
    }
}

#[test]
fn central_image_matches_the_oracle() {
    for (n, d) in [(2, 8), (3, 5)] {
        let z = z_subspace(n, d).unwrap();
        let mut dims = vec![0usize; d + 1];
        for (md, s) in &z {
            dims[md.total()] += s.rank();
        }
        assert_eq!(dims, lcsq_oracle::z_dims(n, d).unwrap(), "n={n}");
    }
}

#[test]
fn bbar1_is_necklaces_minus_central_image() {
    let b = bbar1_character(2, 8).unwrap().total_degree_series();
    let z = lcsq_oracle::z_dims(2, 8).unwrap();
    let necklaces = lcsq_oracle::b_dims(2, 1, 8).unwrap();
    for l in 0..=8 {
        assert_eq!(b[l] as usize, necklaces[0][l] - z[l], "degree {l}");
    }
}
