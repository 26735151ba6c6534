//! The q-deformed Fock space of type C_ℓ^(1) and its crystal.
//!
//! Basis vectors are Young diagrams. `e_i` removes an i-node b with weight
//! q^{d_b(λ)}, `f_i` adds one with weight q^{−d^b(λ)}. The crystal operators
//! come from the i-signature read top to bottom.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cartan::{CartanDatum, RootSum, Weight};
use crate::error::{Error, Result};
use crate::qpoly::QLaurent;
use crate::young::{self, Node, Partition};

/// A finite formal sum of partitions with Laurent coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FockVector {
    coeffs: BTreeMap<Partition, QLaurent>,
}

impl FockVector {
    pub fn zero() -> Self {
        FockVector { coeffs: BTreeMap::new() }
    }

    pub fn basis(p: Partition) -> Self {
        let mut v = Self::zero();
        v.add_term(p, QLaurent::one());
        v
    }

    /// The empty diagram, the highest weight vector of V(Λ₀).
    pub fn vacuum() -> Self {
        Self::basis(Partition::empty())
    }

    pub fn add_term(&mut self, p: Partition, c: QLaurent) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(p) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coefficient(&self, p: &Partition) -> QLaurent {
        self.coeffs.get(p).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &QLaurent)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> BTreeSet<Partition> {
        self.coeffs.keys().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (p, c) in &other.coeffs {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &QLaurent) -> FockVector {
        let mut out = FockVector::zero();
        for (p, c) in &self.coeffs {
            out.add_term(p.clone(), c * s);
        }
        out
    }
}

/// e_i λ = Σ_b q^{d_b(λ)} λ↗b over removable i-nodes b, extended linearly.
pub fn apply_e(cartan: &CartanDatum, i: usize, v: &FockVector) -> Result<FockVector> {
    cartan.check_index(i)?;
    let ell = cartan.ell();
    let mut out = FockVector::zero();
    for (p, c) in v.terms() {
        for b in young::removable_nodes(p, i, ell) {
            let e = young::d_below(cartan, p, b)?;
            out.add_term(p.without_node(b), c.shift(e));
        }
    }
    Ok(out)
}

/// f_i λ = Σ_b q^{−d^b(λ)} λ↙b over addable i-nodes b, extended linearly.
pub fn apply_f(cartan: &CartanDatum, i: usize, v: &FockVector) -> Result<FockVector> {
    cartan.check_index(i)?;
    let ell = cartan.ell();
    let mut out = FockVector::zero();
    for (p, c) in v.terms() {
        for b in young::addable_nodes(p, i, ell) {
            let e = young::d_above(cartan, p, b)?;
            out.add_term(p.with_node(b), c.shift(-e));
        }
    }
    Ok(out)
}

/// Coefficient of ∅ in e_{ν₁}⋯e_{νₙ} f_{ν′ₙ}⋯f_{ν′₁} ∅, applying the operators
/// one at a time from the right.
pub fn apply_word_f_then_e(cartan: &CartanDatum, nu: &[usize], nu_prime: &[usize]) -> Result<QLaurent> {
    if nu.len() != nu_prime.len() {
        return Err(Error::LengthMismatch(nu.len(), nu_prime.len()));
    }
    let mut v = FockVector::vacuum();
    for &i in nu_prime {
        v = apply_f(cartan, i, &v)?;
        if v.is_zero() {
            return Ok(QLaurent::zero());
        }
    }
    for &i in nu.iter().rev() {
        v = apply_e(cartan, i, &v)?;
        if v.is_zero() {
            return Ok(QLaurent::zero());
        }
    }
    Ok(v.coefficient(&Partition::empty()))
}

/// The reduced i-signature: surviving addable (+) and removable (−) nodes,
/// each top to bottom. The reduced word reads `+^a −^b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    pub plus: Vec<Node>,
    pub minus: Vec<Node>,
}

impl Signature {
    /// φ_i.
    pub fn phi(&self) -> usize {
        self.plus.len()
    }

    /// ε_i.
    pub fn epsilon(&self) -> usize {
        self.minus.len()
    }
}

/// Cancels (−,+) pairs in the top-to-bottom i-signature of `p`.
pub fn signature_reduce(p: &Partition, i: usize, ell: usize) -> Signature {
    let mut signed: Vec<(Node, bool)> = young::addable_nodes(p, i, ell)
        .into_iter()
        .map(|b| (b, true))
        .chain(young::removable_nodes(p, i, ell).into_iter().map(|b| (b, false)))
        .collect();
    signed.sort_by_key(|(b, _)| b.row);

    let mut plus = Vec::new();
    let mut minus: Vec<Node> = Vec::new();
    for (b, is_plus) in signed {
        if is_plus {
            // a + cancels the nearest unmatched − above it
            if minus.pop().is_none() {
                plus.push(b);
            }
        } else {
            minus.push(b);
        }
    }
    Signature { plus, minus }
}

/// f̃_i: add the node of the right-most surviving +.
pub fn crystal_f(p: &Partition, i: usize, ell: usize) -> Option<Partition> {
    signature_reduce(p, i, ell).plus.last().map(|&b| p.with_node(b))
}

/// ẽ_i: remove the node of the left-most surviving −.
pub fn crystal_e(p: &Partition, i: usize, ell: usize) -> Option<Partition> {
    signature_reduce(p, i, ell).minus.first().map(|&b| p.without_node(b))
}

/// A vertex of the crystal of the Fock space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrystalVertex {
    pub partition: Partition,
    pub weight: Weight,
    pub eps: Vec<usize>,
    pub phi: Vec<usize>,
}

impl CrystalVertex {
    pub fn new(cartan: &CartanDatum, p: Partition) -> Self {
        let ell = cartan.ell();
        let sigs: Vec<Signature> = (0..=ell).map(|i| signature_reduce(&p, i, ell)).collect();
        CrystalVertex {
            weight: cartan.deficit_weight(&young::content(&p, ell)),
            eps: sigs.iter().map(Signature::epsilon).collect(),
            phi: sigs.iter().map(Signature::phi).collect(),
            partition: p,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CrystalEdge {
    pub from: Partition,
    pub to: Partition,
    pub i: usize,
}

fn size_lex(p: &Partition) -> (usize, Partition) {
    (p.size(), p.clone())
}

/// The connected component of ∅ in the Fock crystal, truncated at a depth.
#[derive(Debug, Clone)]
pub struct Crystal {
    ell: usize,
    depth: usize,
    vertices: BTreeMap<Partition, CrystalVertex>,
    /// f̃-edges out of each vertex: (i, target).
    adjacency: BTreeMap<Partition, Vec<(usize, Partition)>>,
    by_content: BTreeMap<RootSum, Vec<Partition>>,
}

/// All vertices reachable from ∅ by f̃-words of length ≤ `depth`.
pub fn generate_highest_weight_crystal(cartan: &CartanDatum, depth: usize) -> Crystal {
    let ell = cartan.ell();
    let mut vertices = BTreeMap::new();
    let mut adjacency: BTreeMap<Partition, Vec<(usize, Partition)>> = BTreeMap::new();
    let mut by_content: BTreeMap<RootSum, Vec<Partition>> = BTreeMap::new();

    // f̃_i adds exactly one node, so level k holds the diagrams of size k.
    let mut level: BTreeSet<Partition> = BTreeSet::from([Partition::empty()]);
    for k in 0..=depth {
        let expand = k < depth;
        let expanded: Vec<(Partition, Vec<(usize, Partition)>)> = level
            .par_iter()
            .map(|p| {
                let out = if expand {
                    (0..=ell)
                        .filter_map(|i| crystal_f(p, i, ell).map(|q| (i, q)))
                        .collect()
                } else {
                    Vec::new()
                };
                (p.clone(), out)
            })
            .collect();
        let mut next = BTreeSet::new();
        for (p, out) in expanded {
            next.extend(out.iter().map(|(_, q)| q.clone()));
            by_content.entry(young::content(&p, ell)).or_default().push(p.clone());
            vertices.insert(p.clone(), CrystalVertex::new(cartan, p.clone()));
            adjacency.insert(p, out);
        }
        level = next;
    }
    Crystal { ell, depth, vertices, adjacency, by_content }
}

impl Crystal {
    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, p: &Partition) -> bool {
        self.vertices.contains_key(p)
    }

    pub fn vertex(&self, p: &Partition) -> Option<&CrystalVertex> {
        self.vertices.get(p)
    }

    /// Vertices ordered by (size, lexicographic).
    pub fn vertices(&self) -> Vec<&CrystalVertex> {
        let mut v: Vec<&CrystalVertex> = self.vertices.values().collect();
        v.sort_by_key(|x| size_lex(&x.partition));
        v
    }

    /// Edges ordered by source (size, lex), then label.
    pub fn edges(&self) -> Vec<CrystalEdge> {
        let mut out: Vec<CrystalEdge> = self
            .adjacency
            .iter()
            .flat_map(|(p, outs)| {
                outs.iter().map(move |(i, q)| CrystalEdge { from: p.clone(), to: q.clone(), i: *i })
            })
            .collect();
        out.sort_by(|a, b| {
            size_lex(&a.from)
                .cmp(&size_lex(&b.from))
                .then(a.i.cmp(&b.i))
                .then(a.to.cmp(&b.to))
        });
        out
    }

    /// The vertices of weight Λ₀ − β, in lexicographic order.
    pub fn weight_space(&self, beta: &RootSum) -> &[Partition] {
        self.by_content.get(beta).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Number of vertices of weight Λ₀ − β. Only meaningful for |β| ≤ depth.
    pub fn count_at(&self, beta: &RootSum) -> usize {
        self.weight_space(beta).len()
    }

    pub fn weight_spaces(&self) -> impl Iterator<Item = (&RootSum, &Vec<Partition>)> {
        self.by_content.iter()
    }

    /// Restriction to the vertices of weight Λ₀ − β, with edges among them.
    pub fn filter_weight(&self, beta: &RootSum) -> Crystal {
        let keep: BTreeSet<&Partition> = self.weight_space(beta).iter().collect();
        let vertices = self
            .vertices
            .iter()
            .filter(|(p, _)| keep.contains(p))
            .map(|(p, v)| (p.clone(), v.clone()))
            .collect();
        let adjacency = self
            .adjacency
            .iter()
            .filter(|(p, _)| keep.contains(p))
            .map(|(p, outs)| {
                (p.clone(), outs.iter().filter(|(_, q)| keep.contains(q)).cloned().collect())
            })
            .collect();
        let mut by_content = BTreeMap::new();
        if !keep.is_empty() {
            by_content.insert(beta.clone(), self.weight_space(beta).to_vec());
        }
        Crystal { ell: self.ell, depth: self.depth, vertices, adjacency, by_content }
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Export<'a> {
            vertices: Vec<&'a CrystalVertex>,
            edges: Vec<CrystalEdge>,
        }
        serde_json::to_value(Export { vertices: self.vertices(), edges: self.edges() })
            .expect("crystal serializes")
    }

    pub fn to_dot(&self) -> String {
        let id = |p: &Partition| format!("\"{p}\"");
        let mut s = String::new();
        writeln!(s, "digraph crystal {{").unwrap();
        writeln!(s, "  // B(Lambda_0), type C_{}^(1), depth {}", self.ell, self.depth).unwrap();
        writeln!(s, "  node [shape=box];").unwrap();
        for v in self.vertices() {
            writeln!(
                s,
                "  {} [label=\"{}\\n{}\"];",
                id(&v.partition),
                v.partition,
                v.weight
            )
            .unwrap();
        }
        for e in self.edges() {
            writeln!(s, "  {} -> {} [label=\"{}\"];", id(&e.from), id(&e.to), e.i).unwrap();
        }
        writeln!(s, "}}").unwrap();
        s
    }
}
