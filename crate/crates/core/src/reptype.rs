//! Maximal weights of V(Λ₀) and the representation type of R^{Λ₀}(β).
//!
//! The dominant maximal weights are Λ₀ + ϖ_i − (i/2)δ for even i. A weight
//! Λ₀ − β of V(Λ₀) is walked into the dominant chamber by simple reflections;
//! the result is Λ₀ + ϖ_i − kδ for a unique even i and k ≥ i/2, and (i, k, ℓ)
//! determines the representation type.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::cartan::{CartanDatum, RootSum, Weight};
use crate::error::{Error, Result};
use crate::grdim;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxWeightDatum {
    pub i: usize,
    pub weight: Weight,
}

impl MaxWeightDatum {
    /// β = (i/2)δ − ϖ_i, so that the weight is Λ₀ − β.
    pub fn deficit(&self, cartan: &CartanDatum) -> RootSum {
        cartan.deficit_of(&self.weight).expect("maximal weights lie below Λ₀")
    }
}

/// Λ₀ + ϖ_i − (i/2)δ for every even i ∈ I, each checked dominant and maximal.
pub fn max_dominant_weights(cartan: &CartanDatum) -> Result<Vec<MaxWeightDatum>> {
    let delta = cartan.null_root();
    let mut out = Vec::new();
    for i in (0..=cartan.ell()).step_by(2) {
        let weight = cartan.lambda0() + cartan.varpi(i)? - delta.scale_int(i as i64 / 2);
        if !cartan.is_dominant(&weight) {
            return Err(Error::InvariantViolation(format!("{weight} is not dominant")));
        }
        let beta = cartan.deficit_of(&weight).ok_or_else(|| {
            Error::InvariantViolation(format!("{weight} is not of the form Λ₀ − β"))
        })?;
        if grdim::graded_dim_beta(cartan, &beta)?.is_zero() {
            return Err(Error::InvariantViolation(format!("{weight} is not a weight")));
        }
        // weight + δ is not a weight: either it leaves Λ₀ − Q⁺ or its algebra vanishes
        if let Some(up) = beta.checked_sub(&cartan.null_root_sum()) {
            if !grdim::graded_dim_beta(cartan, &up)?.is_zero() {
                return Err(Error::InvariantViolation(format!("{weight} is not maximal")));
            }
        }
        out.push(MaxWeightDatum { i, weight });
    }
    Ok(out)
}

/// Reflects at the smallest index with a negative pairing until none is left.
/// Returns the dominant weight and the indices in the order applied.
pub fn dominantize(cartan: &CartanDatum, w: &Weight) -> Result<(Weight, Vec<usize>)> {
    if w.c0 != 1 {
        return Err(Error::NotLevelOne(w.to_string()));
    }
    let height: BigInt = w
        .alpha
        .iter()
        .map(|c| c.abs().ceil().to_integer())
        .sum();
    let height = height.to_usize().unwrap_or(usize::MAX / 64);
    let bound = 10 * (height + cartan.ell()).pow(2);

    let mut cur = w.clone();
    let mut word = Vec::new();
    loop {
        let neg = (0..cartan.rank()).find(|&i| cartan.pairing(i, &cur).expect("in range").is_negative());
        let Some(i) = neg else {
            return Ok((cur, word));
        };
        if word.len() >= bound {
            return Err(Error::DominantizeAbort { steps: bound });
        }
        cur = cartan.reflect(i, &cur)?;
        word.push(i);
    }
}

/// Where Λ₀ − β sits relative to the dominant maximal weights.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDecomposition {
    /// Even index of the dominant maximal weight Λ₀ + ϖ_i − (i/2)δ.
    pub i: usize,
    /// The dominant representative is Λ₀ + ϖ_i − kδ, k ≥ i/2.
    pub k: u64,
    pub dominant: Weight,
    pub word: Vec<usize>,
}

/// Decomposes Λ₀ − β as w(Λ₀ + ϖ_i − kδ); `None` when Λ₀ − β is not a
/// weight of V(Λ₀).
pub fn weight_decompose(cartan: &CartanDatum, beta: &RootSum) -> Result<Option<WeightDecomposition>> {
    cartan.check_root_sum(beta)?;
    let (dominant, word) = dominantize(cartan, &cartan.deficit_weight(beta))?;

    let mut i = 0;
    for j in 1..=cartan.ell() {
        let p = cartan.pairing(j, &dominant)?;
        if p.is_zero() {
            continue;
        }
        if i != 0 || p != BigRational::from_integer(1.into()) {
            return Ok(None);
        }
        i = j;
    }
    if i % 2 == 1 {
        return Ok(None);
    }

    // the remainder must be an exact multiple of δ; its α₀-coefficient fixes it
    let rest = dominant.clone() - cartan.lambda0() - cartan.varpi(i)?;
    let t = rest.alpha[0].clone();
    if rest != cartan.null_root().scale(&t) {
        return Ok(None);
    }
    let k = -t;
    if !k.is_integer() {
        return Err(Error::InvariantViolation(format!("non-integral δ-shift {k} for {beta:?}")));
    }
    let k = k.to_integer();
    if k < BigInt::from(i / 2) {
        return Ok(None);
    }
    let k = k.to_u64().expect("δ-shift fits in u64");
    Ok(Some(WeightDecomposition { i, k, dominant, word }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RepType {
    /// R^{Λ₀}(β) = 0.
    Zero,
    Simple,
    Finite,
    Tame,
    Wild,
}

impl RepType {
    pub fn as_str(&self) -> &'static str {
        match self {
            RepType::Zero => "zero",
            RepType::Simple => "simple",
            RepType::Finite => "finite",
            RepType::Tame => "tame",
            RepType::Wild => "wild",
        }
    }

    /// The type of R^{Λ₀}(β) when Λ₀ − β is W-conjugate to Λ₀ + ϖ_i − kδ.
    pub fn from_invariants(i: usize, k: u64, ell: usize) -> RepType {
        match (i, k) {
            (0, 0) => RepType::Simple,
            (2, 1) => RepType::Finite,
            (0, 1) if ell == 2 => RepType::Tame,
            _ => RepType::Wild,
        }
    }
}

impl std::fmt::Display for RepType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub tag: RepType,
    pub i: Option<usize>,
    pub k: Option<u64>,
    pub dominant_word: Vec<usize>,
}

pub fn classify(cartan: &CartanDatum, beta: &RootSum) -> Result<Classification> {
    Ok(match weight_decompose(cartan, beta)? {
        None => Classification { tag: RepType::Zero, i: None, k: None, dominant_word: Vec::new() },
        Some(d) => Classification {
            tag: RepType::from_invariants(d.i, d.k, cartan.ell()),
            i: Some(d.i),
            k: Some(d.k),
            dominant_word: d.word,
        },
    })
}

/// β′ with Λ₀ − β′ = r_i(Λ₀ − β).
pub fn weyl_orbit_probe(cartan: &CartanDatum, beta: &RootSum, i: usize) -> Result<RootSum> {
    cartan.check_root_sum(beta)?;
    let w = cartan.reflect(i, &cartan.deficit_weight(beta))?;
    cartan.deficit_of(&w).ok_or_else(|| Error::LeavesPositiveCone {
        index: i,
        coeffs: w.alpha.iter().map(|c| (-c).to_string()).collect(),
    })
}
