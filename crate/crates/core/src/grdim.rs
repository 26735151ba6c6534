//! Graded dimensions of R^{Λ₀}(β) from standard tableaux.
//!
//! dim_q e(ν)R(β)e(ν′) = Σ_λ K_q(λ,ν)·K_q(λ,ν′), the sum running over
//! partitions λ of |β| with content β. The same quantity is available through
//! the Fock space as q^{def(β)} times the ∅-coefficient of e_ν f_ν′ ∅; the two
//! routes share no code beyond the node statistics.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cartan::{CartanDatum, RootSum};
use crate::error::{Error, Result};
use crate::fock::{self, Crystal};
use crate::qpoly::QLaurent;
use crate::young::{self, Partition};

/// Largest |β| the command-line front end accepts.
pub const MAX_HEIGHT: u64 = 25;

/// A residue word ν together with the β it lies over (ν ∈ I^β).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ResidueWord {
    seq: Vec<usize>,
    beta: RootSum,
}

impl ResidueWord {
    pub fn new(seq: Vec<usize>, ell: usize) -> Result<Self> {
        let mut k = vec![0u64; ell + 1];
        for &i in &seq {
            if i > ell {
                return Err(Error::IndexOutOfRange { index: i, ell });
            }
            k[i] += 1;
        }
        Ok(ResidueWord { seq, beta: RootSum(k) })
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    pub fn beta(&self) -> &RootSum {
        &self.beta
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn in_beta(&self, beta: &RootSum) -> bool {
        &self.beta == beta
    }
}

fn check_word(word: &ResidueWord, beta: &RootSum) -> Result<()> {
    if word.in_beta(beta) {
        Ok(())
    } else {
        Err(Error::NotInIBeta { word: word.seq.clone(), beta: beta.0.clone() })
    }
}

/// Graded tableau count Σ q^{deg T}, optionally restricted to res(T) = ν.
///
/// deg is additive along the chain of shapes, so the sum factors through the
/// subshape reached after k entries. Memoized over subshapes, working down
/// from λ; a subshape μ only keeps removable nodes whose residue matches the
/// entry |μ| of ν, which prunes every branch with a wrong residue.
fn graded_count(cartan: &CartanDatum, p: &Partition, nu: Option<&[usize]>) -> QLaurent {
    fn go(
        cartan: &CartanDatum,
        mu: &Partition,
        nu: Option<&[usize]>,
        memo: &mut HashMap<Partition, QLaurent>,
    ) -> QLaurent {
        if mu.is_empty() {
            return QLaurent::one();
        }
        if let Some(v) = memo.get(mu) {
            return v.clone();
        }
        let ell = cartan.ell();
        let k = mu.size();
        let mut total = QLaurent::zero();
        for b in mu.removable() {
            if let Some(w) = nu {
                if young::residue(b, ell) != w[k - 1] {
                    continue;
                }
            }
            let rest = go(cartan, &mu.without_node(b), nu, memo);
            if rest.is_zero() {
                continue;
            }
            let step = young::d_below(cartan, mu, b).expect("removable node");
            total += rest.shift(step);
        }
        memo.insert(mu.clone(), total.clone());
        total
    }
    go(cartan, p, nu, &mut HashMap::new())
}

/// K_q(λ, ν) = Σ_{T ∈ ST(λ), res(T) = ν} q^{deg T}.
pub fn kostka_q(cartan: &CartanDatum, p: &Partition, nu: &ResidueWord) -> Result<QLaurent> {
    if p.size() != nu.len() {
        return Err(Error::SizeMismatch { shape: p.size(), word: nu.len() });
    }
    Ok(graded_count(cartan, p, Some(nu.seq())))
}

/// K_q(λ) = Σ_{T ∈ ST(λ)} q^{deg T}.
pub fn kostka_q_total(cartan: &CartanDatum, p: &Partition) -> QLaurent {
    graded_count(cartan, p, None)
}

/// Partitions λ ⊢ |β| with wt(λ) = Λ₀ − β.
pub fn partitions_with_content(beta: &RootSum, ell: usize) -> Vec<Partition> {
    young::partitions(beta.height() as usize)
        .into_iter()
        .filter(|p| &young::content(p, ell) == beta)
        .collect()
}

fn par_sum(terms: Vec<QLaurent>) -> QLaurent {
    terms.into_iter().sum()
}

/// dim_q e(ν) R^{Λ₀}(β) e(ν′).
pub fn graded_dim(
    cartan: &CartanDatum,
    beta: &RootSum,
    nu: &ResidueWord,
    nu2: &ResidueWord,
) -> Result<QLaurent> {
    cartan.check_root_sum(beta)?;
    check_word(nu, beta)?;
    check_word(nu2, beta)?;
    let shapes = partitions_with_content(beta, cartan.ell());
    let terms: Vec<QLaurent> = shapes
        .par_iter()
        .map(|p| {
            let a = graded_count(cartan, p, Some(nu.seq()));
            if a.is_zero() {
                return a;
            }
            let b = if nu == nu2 { a.clone() } else { graded_count(cartan, p, Some(nu2.seq())) };
            &a * &b
        })
        .collect();
    Ok(par_sum(terms))
}

/// dim_q R^{Λ₀}(β) = Σ K_q(λ)², zero when Λ₀ − β is not a weight.
pub fn graded_dim_beta(cartan: &CartanDatum, beta: &RootSum) -> Result<QLaurent> {
    cartan.check_root_sum(beta)?;
    let shapes = partitions_with_content(beta, cartan.ell());
    let terms: Vec<QLaurent> = shapes
        .par_iter()
        .map(|p| {
            let k = kostka_q_total(cartan, p);
            &k * &k
        })
        .collect();
    Ok(par_sum(terms))
}

/// dim_q R^{Λ₀}(n) = Σ_{λ ⊢ n} K_q(λ)².
pub fn graded_dim_n(cartan: &CartanDatum, n: usize) -> QLaurent {
    let terms: Vec<QLaurent> = young::partitions(n)
        .par_iter()
        .map(|p| {
            let k = kostka_q_total(cartan, p);
            &k * &k
        })
        .collect();
    par_sum(terms)
}

/// e(ν) ≠ 0 iff ν is the residue sequence of some standard tableau.
pub fn idempotent_nonzero(nu: &ResidueWord, ell: usize) -> bool {
    let mut shapes: BTreeSet<Partition> = BTreeSet::from([Partition::empty()]);
    for &i in nu.seq() {
        shapes = shapes
            .iter()
            .flat_map(|p| young::addable_nodes(p, i, ell).into_iter().map(move |b| p.with_node(b)))
            .collect();
        if shapes.is_empty() {
            return false;
        }
    }
    true
}

/// q^{def(β)} · ⟨∅, e_ν f_ν′ ∅⟩, computed in the Fock space.
pub fn oracle_graded_dim(
    cartan: &CartanDatum,
    beta: &RootSum,
    nu: &ResidueWord,
    nu2: &ResidueWord,
) -> Result<QLaurent> {
    cartan.check_root_sum(beta)?;
    check_word(nu, beta)?;
    check_word(nu2, beta)?;
    let coeff = fock::apply_word_f_then_e(cartan, nu.seq(), nu2.seq())?;
    let def = cartan.defect(beta);
    if !def.is_integer() {
        return Err(Error::InvariantViolation(format!("half-integral defect {def} for {beta:?}")));
    }
    let shift: i64 = def.to_integer().try_into().expect("defect fits in i64");
    Ok(coeff.shift(shift))
}

/// Number of simple R^{Λ₀}(β)-modules: |B(Λ₀)_{Λ₀−β}|.
pub fn simple_count(cartan: &CartanDatum, beta: &RootSum) -> Result<usize> {
    cartan.check_root_sum(beta)?;
    let crystal = fock::generate_highest_weight_crystal(cartan, beta.height() as usize);
    Ok(crystal.count_at(beta))
}

/// Same as [`simple_count`] against a pre-generated crystal.
pub fn simple_count_in(crystal: &Crystal, beta: &RootSum) -> Option<usize> {
    if beta.height() as usize > crystal.depth() {
        None
    } else {
        Some(crystal.count_at(beta))
    }
}

/// All words of length n over I, grouped by the β they lie over.
pub fn words_by_beta(n: usize, ell: usize) -> HashMap<RootSum, Vec<ResidueWord>> {
    let mut out: HashMap<RootSum, Vec<ResidueWord>> = HashMap::new();
    let rank = ell + 1;
    let total = rank.pow(n as u32);
    for code in 0..total {
        let mut c = code;
        let seq: Vec<usize> = (0..n)
            .map(|_| {
                let d = c % rank;
                c /= rank;
                d
            })
            .collect();
        let w = ResidueWord::new(seq, ell).expect("digits are indices");
        out.entry(w.beta().clone()).or_default().push(w);
    }
    out
}
