//! Cartan datum of affine type C_ℓ^(1).
//!
//! Weights are kept in the coordinates `c0·Λ₀ + Σ alpha[i]·α_i` with exact
//! rational coefficients. Every weight the engine touches lies in
//! `Λ₀·Z + Q·Π`, so the scaling element of the full weight lattice is never
//! needed and a δ-shift is plain coefficient arithmetic.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// The Cartan matrix and symmetrizer of C_ℓ^(1), ℓ ≥ 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanDatum {
    ell: usize,
    a: Vec<Vec<i64>>,
    d: Vec<i64>,
}

impl CartanDatum {
    pub fn new(ell: usize) -> Result<Self> {
        if ell < 2 {
            return Err(Error::RankTooSmall(ell));
        }
        let n = ell + 1;
        let mut a = vec![vec![0i64; n]; n];
        for i in 0..n {
            a[i][i] = 2;
            if i + 1 < n {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
        }
        a[1][0] = -2;
        a[ell - 1][ell] = -2;

        let mut d = vec![1i64; n];
        d[0] = 2;
        d[ell] = 2;
        Ok(CartanDatum { ell, a, d })
    }

    /// Replaces one entry of the symmetrizer. Only meant for negative
    /// controls in self-tests: the resulting datum is no longer symmetrizable.
    #[doc(hidden)]
    pub fn with_symmetrizer_override(mut self, i: usize, value: i64) -> Self {
        self.d[i] = value;
        self
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Size of the index set I = {0, …, ℓ}.
    pub fn rank(&self) -> usize {
        self.ell + 1
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.a
    }

    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    /// The symmetrizer entry d_i, (2,1,…,1,2) for an untouched datum.
    pub fn d(&self, i: usize) -> i64 {
        self.d[i]
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.d
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i > self.ell {
            Err(Error::IndexOutOfRange { index: i, ell: self.ell })
        } else {
            Ok(())
        }
    }

    pub fn check_root_sum(&self, b: &RootSum) -> Result<()> {
        if b.len() != self.rank() {
            Err(Error::RootSumLength { got: b.len(), expected: self.rank() })
        } else {
            Ok(())
        }
    }

    fn check_weight(&self, w: &Weight) {
        assert_eq!(
            w.alpha.len(),
            self.rank(),
            "weight has {} alpha coefficients, datum has rank {}",
            w.alpha.len(),
            self.rank()
        );
    }

    /// ⟨h_i, L⟩.
    pub fn pairing(&self, i: usize, w: &Weight) -> Result<BigRational> {
        self.check_index(i)?;
        self.check_weight(w);
        let mut acc = if i == 0 { rat(w.c0) } else { BigRational::zero() };
        for (j, c) in w.alpha.iter().enumerate() {
            let aij = self.a[i][j];
            if aij != 0 && !c.is_zero() {
                acc += c * rat(aij);
            }
        }
        Ok(acc)
    }

    /// (α_i | L) = d_i ⟨h_i, L⟩.
    pub fn bilinear_root_weight(&self, i: usize, w: &Weight) -> Result<BigRational> {
        Ok(self.pairing(i, w)? * rat(self.d[i]))
    }

    /// (β₁ | β₂) on the positive root cone, via (α_i|α_j) = d_i a_ij.
    pub fn bilinear_roots(&self, b1: &RootSum, b2: &RootSum) -> BigRational {
        assert_eq!(b1.len(), self.rank(), "root sum length mismatch");
        assert_eq!(b2.len(), self.rank(), "root sum length mismatch");
        let mut acc: i128 = 0;
        for i in 0..self.rank() {
            if b1.0[i] == 0 {
                continue;
            }
            for j in 0..self.rank() {
                let aij = self.a[i][j];
                if aij != 0 && b2.0[j] != 0 {
                    acc += b1.0[i] as i128 * b2.0[j] as i128 * (self.d[i] * aij) as i128;
                }
            }
        }
        BigRational::from_integer(BigInt::from(acc))
    }

    /// r_i L = L − ⟨h_i, L⟩ α_i.
    pub fn reflect(&self, i: usize, w: &Weight) -> Result<Weight> {
        let p = self.pairing(i, w)?;
        let mut out = w.clone();
        out.alpha[i] -= p;
        Ok(out)
    }

    /// def(Λ₀, β) = (β|Λ₀) − ½(β|β).
    pub fn defect(&self, b: &RootSum) -> BigRational {
        let with_lambda0 = rat(self.d[0]) * rat(b.0[0] as i64);
        with_lambda0 - self.bilinear_roots(b, b) / rat(2)
    }

    /// The defect as an integer, or `None` when it is half-integral.
    pub fn defect_integer(&self, b: &RootSum) -> Option<i64> {
        let v = self.defect(b);
        if v.is_integer() {
            v.to_integer().to_i64()
        } else {
            None
        }
    }

    /// Checks def(β−α_i) + (Λ₀−β | α_i) = def(β) − d_i.
    pub fn defect_step_identity_check(&self, b: &RootSum, i: usize) -> Result<bool> {
        self.check_index(i)?;
        self.check_root_sum(b)?;
        let smaller = b.checked_remove(i)?;
        let lhs = self.defect(&smaller)
            + self.bilinear_root_weight(i, &self.deficit_weight(b))?;
        let rhs = self.defect(b) - rat(self.d[i]);
        Ok(lhs == rhs)
    }

    pub fn lambda0(&self) -> Weight {
        Weight { c0: 1, alpha: vec![BigRational::zero(); self.rank()] }
    }

    pub fn zero_weight(&self) -> Weight {
        Weight { c0: 0, alpha: vec![BigRational::zero(); self.rank()] }
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        let mut w = self.zero_weight();
        w.alpha[i] = BigRational::one();
        w
    }

    /// δ = α₀ + 2α₁ + ⋯ + 2α_{ℓ−1} + α_ℓ.
    pub fn null_root_sum(&self) -> RootSum {
        let mut k = vec![2u64; self.rank()];
        k[0] = 1;
        k[self.ell] = 1;
        RootSum(k)
    }

    pub fn null_root(&self) -> Weight {
        self.root_sum_weight(&self.null_root_sum())
    }

    /// ϖ_i = α₁ + 2α₂ + ⋯ + (i−1)α_{i−1} + i(α_i + ⋯ + α_{ℓ−1} + ½α_ℓ), ϖ₀ = 0.
    pub fn varpi(&self, i: usize) -> Result<Weight> {
        self.check_index(i)?;
        let mut w = self.zero_weight();
        if i == 0 {
            return Ok(w);
        }
        for j in 1..self.ell {
            w.alpha[j] = rat(j.min(i) as i64);
        }
        w.alpha[self.ell] = BigRational::new(BigInt::from(i), BigInt::from(2));
        Ok(w)
    }

    /// β viewed as a level-zero weight.
    pub fn root_sum_weight(&self, b: &RootSum) -> Weight {
        Weight {
            c0: 0,
            alpha: b.0.iter().map(|&k| rat(k as i64)).collect(),
        }
    }

    /// Λ₀ − β.
    pub fn deficit_weight(&self, b: &RootSum) -> Weight {
        self.lambda0() - self.root_sum_weight(b)
    }

    /// Inverse of [`deficit_weight`](Self::deficit_weight): returns β when the
    /// weight is Λ₀ − β with β in the positive cone.
    pub fn deficit_of(&self, w: &Weight) -> Option<RootSum> {
        if w.c0 != 1 || w.alpha.len() != self.rank() {
            return None;
        }
        let mut k = Vec::with_capacity(self.rank());
        for c in &w.alpha {
            if !c.is_integer() || c.is_positive() {
                return None;
            }
            k.push((-c).to_integer().to_u64()?);
        }
        Some(RootSum(k))
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        (0..self.rank()).all(|i| !self.pairing(i, w).expect("index in range").is_negative())
    }
}

/// An element c0·Λ₀ + Σ alpha[i]·α_i of the weight lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub c0: i64,
    pub alpha: Vec<BigRational>,
}

impl Weight {
    pub fn new(c0: i64, alpha: Vec<BigRational>) -> Self {
        Weight { c0, alpha }
    }

    pub fn from_integers(c0: i64, alpha: &[i64]) -> Self {
        Weight { c0, alpha: alpha.iter().map(|&a| rat(a)).collect() }
    }

    pub fn scale(&self, s: &BigRational) -> Weight {
        Weight {
            c0: (rat(self.c0) * s)
                .to_integer()
                .to_i64()
                .expect("Λ₀ coefficient fits in i64"),
            alpha: self.alpha.iter().map(|c| c * s).collect(),
        }
    }

    pub fn scale_int(&self, s: i64) -> Weight {
        self.scale(&rat(s))
    }

    /// Largest denominator among the α-coefficients.
    pub fn max_denominator(&self) -> BigInt {
        self.alpha
            .iter()
            .map(|c| c.denom().clone())
            .max()
            .unwrap_or_else(BigInt::one)
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(mut self, rhs: Weight) -> Weight {
        assert_eq!(self.alpha.len(), rhs.alpha.len());
        self.c0 += rhs.c0;
        for (a, b) in self.alpha.iter_mut().zip(rhs.alpha) {
            *a += b;
        }
        self
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        self + (-rhs)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight { c0: -self.c0, alpha: self.alpha.into_iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        if self.c0 != 0 {
            match self.c0 {
                1 => write!(f, "L0")?,
                -1 => write!(f, "-L0")?,
                c => write!(f, "{c}*L0")?,
            }
            wrote = true;
        }
        for (i, c) in self.alpha.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if wrote {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            if mag.is_one() {
                write!(f, "a{i}")?;
            } else {
                write!(f, "{mag}*a{i}")?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct WeightRepr {
    c0: i64,
    alpha: Vec<String>,
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = WeightRepr {
            c0: self.c0,
            alpha: self
                .alpha
                .iter()
                .map(|c| format!("{}/{}", c.numer(), c.denom()))
                .collect(),
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = WeightRepr::deserialize(d)?;
        let alpha = repr
            .alpha
            .iter()
            .map(|s| parse_rational(s).map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Weight { c0: repr.c0, alpha })
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

/// β = Σ k[i]·α_i in the positive cone of the root lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootSum(pub Vec<u64>);

impl RootSum {
    pub fn new(k: Vec<u64>) -> Self {
        RootSum(k)
    }

    pub fn zero(rank: usize) -> Self {
        RootSum(vec![0; rank])
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut k = vec![0; rank];
        k[i] = 1;
        RootSum(k)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u64 {
        self.0[i]
    }

    /// |β| = Σ k[i].
    pub fn height(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&k| k == 0)
    }

    pub fn add_simple(&self, i: usize) -> RootSum {
        let mut k = self.0.clone();
        k[i] += 1;
        RootSum(k)
    }

    /// β − α_i, failing when k[i] = 0.
    pub fn checked_remove(&self, i: usize) -> Result<RootSum> {
        if self.0[i] == 0 {
            return Err(Error::EmptyRootCoefficient(i));
        }
        let mut k = self.0.clone();
        k[i] -= 1;
        Ok(RootSum(k))
    }

    /// Every β with `rank` coefficients and |β| = n, in lexicographic order.
    pub fn all_of_height(rank: usize, n: u64) -> Vec<RootSum> {
        fn go(k: &mut Vec<u64>, left: u64, rank: usize, out: &mut Vec<RootSum>) {
            if k.len() + 1 == rank {
                k.push(left);
                out.push(RootSum(k.clone()));
                k.pop();
                return;
            }
            for c in 0..=left {
                k.push(c);
                go(k, left - c, rank, out);
                k.pop();
            }
        }
        let mut out = Vec::new();
        if rank > 0 {
            go(&mut Vec::with_capacity(rank), n, rank, &mut out);
        }
        out
    }

    pub fn checked_sub(&self, other: &RootSum) -> Option<RootSum> {
        if self.len() != other.len() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(RootSum)
    }
}

impl Add for &RootSum {
    type Output = RootSum;
    fn add(self, rhs: &RootSum) -> RootSum {
        assert_eq!(self.len(), rhs.len());
        RootSum(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for RootSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_sums_of_height() {
        assert_eq!(RootSum::all_of_height(3, 0), vec![RootSum(vec![0, 0, 0])]);
        let two = RootSum::all_of_height(3, 2);
        assert_eq!(two.len(), 6);
        assert_eq!(two[0], RootSum(vec![0, 0, 2]));
        assert!(two.windows(2).all(|w| w[0] < w[1]));
        assert!(two.iter().all(|b| b.height() == 2));
        // C(n + r - 1, r - 1)
        assert_eq!(RootSum::all_of_height(5, 8).len(), 495);
    }
    use proptest::prelude::*;

    fn r(n: i64) -> BigRational {
        rat(n)
    }

    #[test]
    fn rejects_rank_one() {
        assert_eq!(CartanDatum::new(1), Err(Error::RankTooSmall(1)));
        assert!(CartanDatum::new(0).is_err());
    }

    #[test]
    fn matrix_shape() {
        for ell in 2..=7 {
            let c = CartanDatum::new(ell).unwrap();
            let n = ell + 1;
            for i in 0..n {
                assert_eq!(c.a(i, i), 2);
                for j in 0..n {
                    if i != j {
                        assert!(c.a(i, j) <= 0);
                    }
                    assert_eq!(c.d(i) * c.a(i, j), c.d(j) * c.a(j, i));
                }
            }
            assert_eq!(c.a(0, 1), -1);
            assert_eq!(c.a(1, 0), -2);
            assert_eq!(c.a(ell - 1, ell), -2);
            assert_eq!(c.a(ell, ell - 1), -1);
            let mut d = vec![1; n];
            d[0] = 2;
            d[ell] = 2;
            assert_eq!(c.symmetrizer(), &d[..]);
        }
    }

    #[test]
    fn rank_two_matrix() {
        let c = CartanDatum::new(2).unwrap();
        assert_eq!(c.matrix(), &[vec![2, -1, 0], vec![-2, 2, -2], vec![0, -1, 2]]);
    }

    #[test]
    fn pairing_examples() {
        let c = CartanDatum::new(3).unwrap();
        for i in 0..=3 {
            assert_eq!(c.pairing(i, &c.null_root()).unwrap(), r(0));
        }
        assert_eq!(c.pairing(0, &c.lambda0()).unwrap(), r(1));

        let c = CartanDatum::new(4).unwrap();
        let v2 = c.varpi(2).unwrap();
        assert_eq!(c.pairing(0, &v2).unwrap(), r(-1));
        assert_eq!(c.pairing(2, &v2).unwrap(), r(1));
        assert_eq!(c.pairing(1, &v2).unwrap(), r(0));
        assert!(matches!(c.pairing(5, &v2), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn varpi_pairing_table() {
        for ell in 2..=7 {
            let c = CartanDatum::new(ell).unwrap();
            for i in 1..=ell {
                let v = c.varpi(i).unwrap();
                for j in 0..=ell {
                    let expect = if j == 0 { -1 } else if j == i { 1 } else { 0 };
                    assert_eq!(c.pairing(j, &v).unwrap(), r(expect), "ell={ell} i={i} j={j}");
                }
            }
            assert_eq!(c.varpi(0).unwrap(), c.zero_weight());
        }
    }

    #[test]
    fn bilinear_examples() {
        let c = CartanDatum::new(2).unwrap();
        assert_eq!(c.bilinear_root_weight(0, &c.lambda0()).unwrap(), r(2));
        assert_eq!(c.bilinear_root_weight(1, &c.lambda0()).unwrap(), r(0));
        assert_eq!(c.bilinear_root_weight(2, &c.null_root()).unwrap(), r(0));

        let a0 = RootSum::simple(3, 0);
        let a1 = RootSum::simple(3, 1);
        assert_eq!(c.bilinear_roots(&a0, &a0), r(4));
        assert_eq!(c.bilinear_roots(&a0, &a1), r(-2));
        // diagonal terms give 16, off-diagonal terms -16
        let delta = c.null_root_sum();
        assert_eq!(delta, RootSum(vec![1, 2, 1]));
        assert_eq!(c.bilinear_roots(&delta, &delta), r(0));
    }

    #[test]
    fn reflect_examples() {
        let c = CartanDatum::new(3).unwrap();
        for i in 0..=3 {
            assert_eq!(c.reflect(i, &c.null_root()).unwrap(), c.null_root());
        }
        assert_eq!(
            c.reflect(0, &c.lambda0()).unwrap(),
            c.lambda0() - c.simple_root(0)
        );
        assert_eq!(c.reflect(1, &c.lambda0()).unwrap(), c.lambda0());
    }

    #[test]
    fn defect_examples() {
        let c = CartanDatum::new(2).unwrap();
        assert_eq!(c.defect(&RootSum::zero(3)), r(0));
        assert_eq!(c.defect(&RootSum(vec![1, 0, 0])), r(0));
        assert_eq!(c.defect(&RootSum(vec![1, 1, 0])), r(1));
        assert_eq!(c.defect_integer(&RootSum(vec![1, 1, 0])), Some(1));
    }

    #[test]
    fn defect_identity_examples() {
        for ell in 2..=5 {
            let c = CartanDatum::new(ell).unwrap();
            let mut a0 = RootSum::zero(ell + 1);
            a0.0[0] = 1;
            assert!(c.defect_step_identity_check(&a0, 0).unwrap());
            let a01 = a0.add_simple(1);
            assert!(c.defect_step_identity_check(&a01, 1).unwrap());
            assert!(c.defect_step_identity_check(&c.null_root_sum(), ell).unwrap());
            assert_eq!(
                c.defect_step_identity_check(&a0, 1),
                Err(Error::EmptyRootCoefficient(1))
            );
        }
    }

    #[test]
    fn deficit_round_trip() {
        let c = CartanDatum::new(3).unwrap();
        let b = RootSum(vec![2, 3, 1, 0]);
        assert_eq!(c.deficit_of(&c.deficit_weight(&b)), Some(b));
        assert_eq!(c.deficit_of(&(c.lambda0() + c.simple_root(1))), None);
        assert_eq!(c.deficit_of(&c.null_root()), None);
    }

    #[test]
    fn weight_json_form() {
        let c = CartanDatum::new(2).unwrap();
        let w = c.lambda0() + c.varpi(1).unwrap();
        let js = serde_json::to_string(&w).unwrap();
        assert_eq!(js, r#"{"c0":1,"alpha":["0/1","1/1","1/2"]}"#);
        let back: Weight = serde_json::from_str(&js).unwrap();
        assert_eq!(back, w);
        let plain: Weight = serde_json::from_str(r#"{"c0":1,"alpha":["0","-3","4/8"]}"#).unwrap();
        assert_eq!(plain.alpha[2], BigRational::new(1.into(), 2.into()));
        assert!(serde_json::from_str::<Weight>(r#"{"c0":1,"alpha":["1/0"]}"#).is_err());

        let b = RootSum(vec![1, 2, 1]);
        assert_eq!(serde_json::to_string(&b).unwrap(), "[1,2,1]");
    }

    #[test]
    fn display() {
        let c = CartanDatum::new(2).unwrap();
        let w = c.lambda0() - c.simple_root(0) + c.varpi(1).unwrap();
        assert_eq!(w.to_string(), "L0 - a0 + a1 + 1/2*a2");
        assert_eq!(c.zero_weight().to_string(), "0");
    }

    fn root_sum_strategy(ell: usize, max: u64) -> impl Strategy<Value = RootSum> {
        proptest::collection::vec(0..=max, ell + 1).prop_map(RootSum)
    }

    fn weight_strategy(ell: usize) -> impl Strategy<Value = Weight> {
        (
            -3i64..=3,
            proptest::collection::vec((-12i64..=12, 1i64..=2), ell + 1),
        )
            .prop_map(|(c0, coeffs)| {
                Weight::new(
                    c0,
                    coeffs
                        .into_iter()
                        .map(|(n, d)| BigRational::new(n.into(), d.into()))
                        .collect(),
                )
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn defect_step_identity_holds(
            (ell, b, i) in (2usize..=6).prop_flat_map(|ell| {
                (Just(ell), root_sum_strategy(ell, 2), 0..=ell)
            }),
        ) {
            let c = CartanDatum::new(ell).unwrap();
            let b = b.add_simple(i);
            prop_assume!(b.height() <= 12);
            prop_assert!(c.defect_step_identity_check(&b, i).unwrap());
        }
    }

    proptest! {
        #[test]
        fn bilinear_symmetric_and_consistent(ell in 2usize..=6, seed in 0u64..1000) {
            let c = CartanDatum::new(ell).unwrap();
            let rank = ell + 1;
            let b1 = RootSum((0..rank).map(|i| (seed >> i) % 4).collect());
            let b2 = RootSum((0..rank).map(|i| ((seed / 7) >> i) % 3).collect());
            prop_assert_eq!(c.bilinear_roots(&b1, &b2), c.bilinear_roots(&b2, &b1));
            for i in 0..rank {
                for j in 0..rank {
                    let ai = RootSum::simple(rank, i);
                    let aj = RootSum::simple(rank, j);
                    prop_assert_eq!(
                        c.bilinear_roots(&ai, &aj),
                        c.bilinear_root_weight(i, &c.simple_root(j)).unwrap()
                    );
                }
            }
        }

        #[test]
        fn reflection_negates_pairing(ell in 2usize..=6, w in weight_strategy(6), i in 0usize..=6) {
            prop_assume!(i <= ell);
            let c = CartanDatum::new(ell).unwrap();
            let w = Weight::new(w.c0, w.alpha[..=ell].to_vec());
            let rw = c.reflect(i, &w).unwrap();
            prop_assert_eq!(c.pairing(i, &rw).unwrap(), -c.pairing(i, &w).unwrap());
            prop_assert_eq!(c.reflect(i, &rw).unwrap(), w);
        }

        #[test]
        fn defect_is_integral(
            (ell, b) in (2usize..=6).prop_flat_map(|ell| (Just(ell), root_sum_strategy(ell, 5))),
        ) {
            let c = CartanDatum::new(ell).unwrap();
            prop_assert!(c.defect_integer(&b).is_some());
        }
    }
}
