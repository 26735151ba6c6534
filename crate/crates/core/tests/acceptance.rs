//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use qhecke::fock::{self, CrystalVertex};
use qhecke::grdim::{self, ResidueWord};
use qhecke::reptype::{self, RepType};
use qhecke::young::{self, Partition};
use qhecke::{CartanDatum, QLaurent, RootSum};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn datum(ell: usize) -> CartanDatum {
    CartanDatum::new(ell).expect("ell >= 2")
}

fn part(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition")
}

fn word(seq: &[usize], ell: usize) -> ResidueWord {
    ResidueWord::new(seq.to_vec(), ell).expect("residues in range")
}

fn padded(ell: usize, head: &[u64]) -> RootSum {
    let mut k = vec![0; ell + 1];
    k[..head.len()].copy_from_slice(head);
    RootSum(k)
}

fn factorial_identity() -> Check {
    for ell in 2..=4 {
        let c = datum(ell);
        let mut fact = BigInt::from(1);
        for n in 0..=8usize {
            if n > 0 {
                fact *= n;
            }
            let dim = grdim::graded_dim_n(&c, n).eval_at_one();
            ensure(dim == fact, || format!("ell={ell} n={n}: {dim} != {fact}"))?;
        }
    }
    Ok("dim R(n) = n! for n <= 8, ell in 2..4".into())
}

fn small_graded_dimensions() -> Check {
    let expected = QLaurent::one() + QLaurent::q_pow(2);
    for ell in 2..=4 {
        let c = datum(ell);
        let nu = word(&[0, 1], ell);
        let got = grdim::graded_dim(&c, &padded(ell, &[1, 1]), &nu, &nu).map_err(|e| e.to_string())?;
        ensure(got == expected, || format!("ell={ell}: {got}"))?;
    }
    Ok("e(01)R(a0+a1)e(01) = 1 + q^2".into())
}

fn delta_block() -> Check {
    let c = datum(2);
    let nu = word(&[0, 1, 2, 1], 2);
    let block = grdim::graded_dim(&c, &c.null_root_sum(), &nu, &nu).map_err(|e| e.to_string())?;
    ensure(block.eval_at_one() == 4.into(), || format!("e(0121)R(delta)e(0121) = {block}"))?;
    let smaller = grdim::graded_dim_beta(&c, &RootSum(vec![1, 1, 1])).map_err(|e| e.to_string())?;
    ensure(smaller.eval_at_one() == 2.into(), || format!("R(delta - a1) = {smaller}"))?;
    Ok(format!("dims 4 and 2 ({block}; {smaller})"))
}

fn deg_codeg_defect() -> Check {
    let mut count = 0usize;
    for ell in 2..=4 {
        let c = datum(ell);
        for n in 0..=8 {
            for p in young::partitions(n) {
                let def = c.defect_integer(&young::content(&p, ell)).ok_or(format!("defect of {p}"))?;
                for t in young::standard_tableaux(&p) {
                    let sum = young::deg(&c, &t) + young::codeg(&c, &t);
                    ensure(sum == def, || format!("ell={ell} shape {p}: {sum} != {def}"))?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} tableaux"))
}

fn compare_oracle(c: &CartanDatum, beta: &RootSum, a: &ResidueWord, b: &ResidueWord) -> Result<(), String> {
    let lhs = grdim::graded_dim(c, beta, a, b).map_err(|e| e.to_string())?;
    let rhs = grdim::oracle_graded_dim(c, beta, a, b).map_err(|e| e.to_string())?;
    ensure(lhs == rhs, || {
        format!("ell={} beta={beta} nu={:?} nu'={:?}: {lhs} vs {rhs}", c.ell(), a.seq(), b.seq())
    })
}

fn oracle_equivalence() -> Check {
    let mut exhaustive = 0usize;
    for ell in 2..=4 {
        let c = datum(ell);
        for n in 0..=5 {
            let groups = grdim::words_by_beta(n, ell);
            let counts: Vec<usize> = groups
                .par_iter()
                .map(|(beta, words)| -> Result<usize, String> {
                    for a in words {
                        for b in words {
                            compare_oracle(&c, beta, a, b)?;
                        }
                    }
                    Ok(words.len() * words.len())
                })
                .collect::<Result<_, _>>()?;
            exhaustive += counts.iter().sum::<usize>();
        }
    }

    // words read off two tableaux of one shape give a nonzero block
    let mut rng = StdRng::seed_from_u64(0x5eed_0005);
    let mut nonzero = 0usize;
    for k in 0..100 {
        let ell = rng.gen_range(2..=4);
        let c = datum(ell);
        let n = rng.gen_range(6..=7);
        let (a, b) = if k % 2 == 0 {
            let shapes = young::partitions(n);
            let p = shapes.choose(&mut rng).unwrap();
            let tabs: Vec<_> = young::standard_tableaux(p).collect();
            let q = tabs.choose(&mut rng).unwrap().residue_sequence(ell);
            let r = tabs.choose(&mut rng).unwrap().residue_sequence(ell);
            (q, r)
        } else {
            let q: Vec<usize> = (0..n).map(|_| rng.gen_range(0..=ell)).collect();
            let mut r = q.clone();
            r.shuffle(&mut rng);
            (q, r)
        };
        let (a, b) = (word(&a, ell), word(&b, ell));
        let beta = a.beta().clone();
        compare_oracle(&c, &beta, &a, &b)?;
        let live = !grdim::graded_dim(&c, &beta, &a, &b).unwrap().is_zero();
        ensure(live || k % 2 == 1, || format!("tableau words {:?}, {:?} give zero", a.seq(), b.seq()))?;
        nonzero += live as usize;
    }
    Ok(format!("{exhaustive} exhaustive triples, 100 random ({nonzero} nonzero)"))
}

fn crystal_at_beta0() -> Check {
    let c = datum(4);
    let crystal = fock::generate_highest_weight_crystal(&c, 8);
    let beta0 = RootSum(vec![2, 3, 2, 1, 0]);
    let space: BTreeSet<_> = crystal.weight_space(&beta0).iter().cloned().collect();
    let expected: BTreeSet<_> = [part(&[3, 2, 2, 1]), part(&[2, 2, 2, 2])].into_iter().collect();
    ensure(space == expected, || format!("weight space {space:?}"))?;

    let support = |v: &CrystalVertex| -> Vec<usize> {
        v.eps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i).collect()
    };
    let b1 = crystal.vertex(&part(&[3, 2, 2, 1])).ok_or("b1 missing")?;
    let b2 = crystal.vertex(&part(&[2, 2, 2, 2])).ok_or("b2 missing")?;
    ensure(b1.eps == vec![0, 1, 0, 1, 0], || format!("eps(b1) = {:?}", b1.eps))?;
    ensure(b2.eps == vec![0, 0, 1, 0, 0], || format!("eps(b2) = {:?}", b2.eps))?;
    Ok(format!("b1=(3,2,2,1) eps on {:?}, b2=(2,2,2,2) eps on {:?}", support(b1), support(b2)))
}

fn simples_at_delta() -> Check {
    for ell in 2..=5 {
        let c = datum(ell);
        let n = grdim::simple_count(&c, &c.null_root_sum()).map_err(|e| e.to_string())?;
        ensure(n == ell, || format!("ell={ell}: {n} simples"))?;
    }
    Ok("simple_count(delta) = ell for ell in 2..5".into())
}

fn maximal_weights() -> Check {
    for ell in 2..=6 {
        let c = datum(ell);
        let found = reptype::max_dominant_weights(&c).map_err(|e| e.to_string())?;
        let idx: Vec<usize> = found.iter().map(|m| m.i).collect();
        let expected: Vec<usize> = (0..=ell).filter(|i| i % 2 == 0).collect();
        ensure(idx == expected, || format!("ell={ell}: indices {idx:?}"))?;
        for m in &found {
            let i = m.i;
            let target = c.lambda0() + c.varpi(i).unwrap() - c.null_root().scale_int(i as i64 / 2);
            ensure(m.weight == target, || format!("ell={ell} i={i}: {}", m.weight))?;
            ensure(c.is_dominant(&m.weight), || format!("ell={ell} i={i}: not dominant"))?;
            let staircase = Partition::new(vec![i; i / 2]).unwrap();
            let wt = c.deficit_weight(&young::content(&staircase, ell));
            ensure(wt == m.weight, || format!("ell={ell} i={i}: wt(lambda(i)) = {wt}"))?;
        }
    }
    Ok("Lambda0 + varpi_i - (i/2)delta for even i, ell <= 6".into())
}

fn classification_table() -> Check {
    let tag = |c: &CartanDatum, b: &RootSum| reptype::classify(c, b).map(|r| r.tag).map_err(|e| e.to_string());
    let mut checked = 0usize;
    for ell in 2..=6 {
        let c = datum(ell);
        let delta = c.null_root_sum();
        let two_delta = &delta + &delta;
        let mut cases = vec![
            (RootSum::zero(ell + 1), RepType::Simple),
            (padded(ell, &[1, 1]), RepType::Finite),
            (delta.clone(), if ell == 2 { RepType::Tame } else { RepType::Wild }),
            (two_delta.clone(), RepType::Wild),
        ];
        if ell == 2 {
            cases.push((RootSum(vec![2, 3, 1]), RepType::Wild));
        }
        if ell == 4 {
            cases.push((RootSum(vec![2, 3, 2, 1, 0]), RepType::Wild));
        }
        for (b, want) in cases {
            let got = tag(&c, &b)?;
            ensure(got == want, || format!("ell={ell} beta={b}: {got}, expected {want}"))?;
            checked += 1;
        }

        // k*delta - varpi_i over every even i and k >= i/2 with |beta| <= 20
        for i in (0..=ell).step_by(2) {
            for k in (i / 2)..=20 {
                let w = c.lambda0() + c.varpi(i).unwrap() - c.null_root().scale_int(k as i64);
                let Some(b) = c.deficit_of(&w) else { continue };
                if b.height() > 20 {
                    break;
                }
                let want = RepType::from_invariants(i, k as u64, ell);
                let known = match (i, k) {
                    (0, 0) => RepType::Simple,
                    (2, 1) => RepType::Finite,
                    (0, 1) if ell == 2 => RepType::Tame,
                    _ => RepType::Wild,
                };
                ensure(want == known, || format!("table entry ({i},{k})"))?;
                let got = reptype::classify(&c, &b).map_err(|e| e.to_string())?;
                ensure(got.tag == known && got.i == Some(i) && got.k == Some(k as u64), || {
                    format!("ell={ell} i={i} k={k} beta={b}: {:?}", got)
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} cases"))
}

fn random_root_sum(rng: &mut StdRng, ell: usize) -> RootSum {
    let n = rng.gen_range(0..=8);
    if rng.gen_bool(0.5) {
        let shapes = young::partitions(n);
        young::content(shapes.choose(rng).unwrap(), ell)
    } else {
        let mut k = vec![0u64; ell + 1];
        for _ in 0..n {
            k[rng.gen_range(0..=ell)] += 1;
        }
        RootSum(k)
    }
}

fn weyl_invariance() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed_0010);
    let mut samples = Vec::new();
    while samples.len() < 200 {
        let ell = rng.gen_range(2..=4);
        let c = datum(ell);
        let beta = random_root_sum(&mut rng, ell);
        let i = rng.gen_range(0..=ell);
        if let Ok(image) = reptype::weyl_orbit_probe(&c, &beta, i) {
            samples.push((ell, beta, i, image));
        }
    }
    let mut moved = 0usize;
    for ell in 2..=4 {
        let c = datum(ell);
        let mine: Vec<_> = samples.iter().filter(|s| s.0 == ell).collect();
        let depth = mine.iter().map(|s| s.1.height().max(s.3.height())).max().unwrap_or(0) as usize;
        let crystal = fock::generate_highest_weight_crystal(&c, depth);
        for (_, beta, i, image) in mine {
            let x = grdim::simple_count_in(&crystal, beta).unwrap();
            let y = grdim::simple_count_in(&crystal, image).unwrap();
            ensure(x == y, || format!("ell={ell} r_{i}: {x} simples at {beta}, {y} at {image}"))?;
            let s = reptype::classify(&c, beta).map_err(|e| e.to_string())?;
            let t = reptype::classify(&c, image).map_err(|e| e.to_string())?;
            ensure((s.tag, s.i, s.k) == (t.tag, t.i, t.k), || {
                format!("ell={ell} r_{i}: {beta} -> {:?}, {image} -> {:?}", s.tag, t.tag)
            })?;
            if beta != image {
                moved += 1;
            }
        }
    }
    Ok(format!("200 reflections ({moved} non-trivial)"))
}

fn negative_controls() -> Check {
    for ell in 2..=4 {
        let c = datum(ell);
        let a1 = padded(ell, &[0, 1]);
        let dim = grdim::graded_dim_beta(&c, &a1).map_err(|e| e.to_string())?;
        ensure(dim.is_zero(), || format!("ell={ell}: dim R(a1) = {dim}"))?;
        let d = reptype::weight_decompose(&c, &a1).map_err(|e| e.to_string())?;
        ensure(d.is_none(), || format!("ell={ell}: weight_decompose(a1) = {d:?}"))?;
        ensure(!grdim::idempotent_nonzero(&word(&[1], ell), ell), || format!("ell={ell}: e(1) != 0"))?;
    }
    Ok("R(a1) = 0, no decomposition, e(1) = 0".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("factorial identity", factorial_identity),
        ("small graded dimensions", small_graded_dimensions),
        ("delta block data at ell=2", delta_block),
        ("deg + codeg = defect", deg_codeg_defect),
        ("oracle equivalence", oracle_equivalence),
        ("crystal at 2delta - varpi_4", crystal_at_beta0),
        ("simple count at delta", simples_at_delta),
        ("maximal weights", maximal_weights),
        ("classification table", classification_table),
        ("Weyl-orbit invariance", weyl_invariance),
        ("negative controls", negative_controls),
    ];

    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{secs:.2}s]", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} [{secs:.2}s]", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
