use std::collections::BTreeSet;

use num_bigint::BigInt;

use qhecke::fock;
use qhecke::grdim::{self, ResidueWord};
use qhecke::reptype;
use qhecke::young;
use qhecke::{CartanDatum, RootSum};

/// Oracle pairs are quadratic in the number of live words; keep them small.
const ORACLE_HEIGHT: usize = 4;

pub struct Report {
    pub lines: Vec<String>,
    pub failures: usize,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.failures == 0
    }

    fn record(&mut self, name: &str, result: Result<String, String>) {
        match result {
            Ok(detail) => self.lines.push(format!("PASS {name}: {detail}")),
            Err(detail) => {
                self.failures += 1;
                self.lines.push(format!("FAIL {name}: {detail}"));
            }
        }
    }
}

pub fn run_suites(c: &CartanDatum, n: usize) -> Report {
    let mut report = Report { lines: Vec::new(), failures: 0 };
    report.record("factorial", factorial_suite(c, n));
    report.record("deg+codeg=defect", defect_suite(c, n));
    report.record("oracle", oracle_suite(c, n.min(ORACLE_HEIGHT)));
    report.record("weyl", weyl_suite(c, n));
    report
}

fn factorial_suite(c: &CartanDatum, n: usize) -> Result<String, String> {
    let mut fact = BigInt::from(1);
    for m in 0..=n {
        if m > 0 {
            fact *= m;
        }
        let dim = grdim::graded_dim_n(c, m).eval_at_one();
        if dim != fact {
            return Err(format!("dim R({m}) = {dim}, expected {fact}"));
        }
    }
    Ok(format!("dim R(m) = m! for m <= {n}"))
}

fn defect_suite(c: &CartanDatum, n: usize) -> Result<String, String> {
    let ell = c.ell();
    let mut checked = 0usize;
    for m in 0..=n {
        for p in young::partitions(m) {
            let def = c
                .defect_integer(&young::content(&p, ell))
                .ok_or_else(|| format!("defect of {p} is not an integer"))?;
            for t in young::standard_tableaux(&p) {
                let sum = young::deg(c, &t) + young::codeg(c, &t);
                if sum != def {
                    return Err(format!("shape {p}: deg + codeg = {sum}, defect = {def}"));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} tableaux"))
}

fn live_words(c: &CartanDatum, beta: &RootSum) -> Vec<ResidueWord> {
    let mut seen = BTreeSet::new();
    for p in grdim::partitions_with_content(beta, c.ell()) {
        for t in young::standard_tableaux(&p) {
            seen.insert(t.residue_sequence(c.ell()));
        }
    }
    seen.into_iter()
        .map(|w| ResidueWord::new(w, c.ell()).expect("residues lie in I"))
        .collect()
}

fn oracle_suite(c: &CartanDatum, n: usize) -> Result<String, String> {
    let mut checked = 0usize;
    for m in 0..=n as u64 {
        for beta in RootSum::all_of_height(c.rank(), m) {
            let words = live_words(c, &beta);
            for a in &words {
                for b in &words {
                    let lhs = grdim::graded_dim(c, &beta, a, b).map_err(|e| e.to_string())?;
                    let rhs = grdim::oracle_graded_dim(c, &beta, a, b).map_err(|e| e.to_string())?;
                    if lhs != rhs {
                        return Err(format!(
                            "beta={beta} nu={:?} nu'={:?}: tableaux {lhs}, Fock space {rhs}",
                            a.seq(),
                            b.seq()
                        ));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} word pairs with |beta| <= {n}"))
}

fn weyl_suite(c: &CartanDatum, n: usize) -> Result<String, String> {
    let crystal = fock::generate_highest_weight_crystal(c, n);
    let mut checked = 0usize;
    for m in 0..=n as u64 {
        for beta in RootSum::all_of_height(c.rank(), m) {
            for i in 0..c.rank() {
                let Ok(image) = reptype::weyl_orbit_probe(c, &beta, i) else { continue };
                let tag = |b: &RootSum| reptype::classify(c, b).map(|r| r.tag).map_err(|e| e.to_string());
                if tag(&beta)? != tag(&image)? {
                    return Err(format!("r_{i}: classify({beta}) differs from classify({image})"));
                }
                if let (Some(x), Some(y)) =
                    (grdim::simple_count_in(&crystal, &beta), grdim::simple_count_in(&crystal, &image))
                {
                    if x != y {
                        return Err(format!("r_{i}: {x} simples at {beta}, {y} at {image}"));
                    }
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} reflections with |beta| <= {n}"))
}
