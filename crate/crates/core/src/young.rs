//! Young diagrams with the C_ℓ^(1) residue pattern, standard tableaux and the
//! deg/codeg statistics.
//!
//! English convention: row 1 is at the top, "below" means a larger row index.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cartan::{CartanDatum, RootSum};
use crate::error::{Error, Result};

/// A box of a Young diagram, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1);
        Node { row, col }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Residue of a node: the pattern 0,1,…,ℓ−1,ℓ,ℓ−1,…,1 repeated along each
/// row and shifted one step right per row.
pub fn residue(node: Node, ell: usize) -> usize {
    let period = 2 * ell as i64;
    let j = (node.col as i64 - node.row as i64).rem_euclid(period) as usize;
    if j <= ell {
        j
    } else {
        2 * ell - j
    }
}

/// A weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if !ok {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// |λ|.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `r` (1-based); zero past the last row.
    pub fn row_len(&self, r: usize) -> usize {
        if r == 0 {
            return usize::MAX;
        }
        self.parts.get(r - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, b: Node) -> bool {
        b.col <= self.row_len(b.row)
    }

    pub fn is_addable(&self, b: Node) -> bool {
        b.col == self.row_len(b.row) + 1 && self.row_len(b.row - 1) >= b.col
    }

    pub fn is_removable(&self, b: Node) -> bool {
        b.col >= 1 && b.col == self.row_len(b.row) && self.row_len(b.row + 1) < b.col
    }

    /// λ ↙ b. The caller guarantees `b` is addable.
    pub fn with_node(&self, b: Node) -> Partition {
        debug_assert!(self.is_addable(b), "{b} not addable to {self}");
        let mut parts = self.parts.clone();
        if b.row > parts.len() {
            parts.push(1);
        } else {
            parts[b.row - 1] += 1;
        }
        Partition { parts }
    }

    /// λ ↗ b. The caller guarantees `b` is removable.
    pub fn without_node(&self, b: Node) -> Partition {
        debug_assert!(self.is_removable(b), "{b} not removable from {self}");
        let mut parts = self.parts.clone();
        parts[b.row - 1] -= 1;
        if parts[b.row - 1] == 0 {
            parts.pop();
        }
        Partition { parts }
    }

    /// All addable nodes, top to bottom.
    pub fn addable(&self) -> Vec<Node> {
        (1..=self.parts.len() + 1)
            .filter(|&r| r == 1 || self.row_len(r - 1) > self.row_len(r))
            .map(|r| Node::new(r, self.row_len(r) + 1))
            .collect()
    }

    /// All removable nodes, top to bottom.
    pub fn removable(&self) -> Vec<Node> {
        (1..=self.parts.len())
            .filter(|&r| self.row_len(r) > self.row_len(r + 1))
            .map(|r| Node::new(r, self.row_len(r)))
            .collect()
    }

    /// All nodes in row-major order.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Node::new(r + 1, c)))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        let s: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the comma list form, e.g. `12,10,4,2`; `""` and `∅` are empty.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(D::Error::custom)
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            cur.push(p);
            go(remaining - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Addable i-nodes of `p`, top to bottom.
pub fn addable_nodes(p: &Partition, i: usize, ell: usize) -> Vec<Node> {
    p.addable().into_iter().filter(|&b| residue(b, ell) == i).collect()
}

/// Removable i-nodes of `p`, top to bottom.
pub fn removable_nodes(p: &Partition, i: usize, ell: usize) -> Vec<Node> {
    p.removable().into_iter().filter(|&b| residue(b, ell) == i).collect()
}

fn check_node(p: &Partition, b: Node) -> Result<()> {
    if p.is_addable(b) || p.is_removable(b) {
        Ok(())
    } else {
        Err(Error::NotAddableOrRemovable { row: b.row, col: b.col })
    }
}

fn signed_count(p: &Partition, i: usize, ell: usize, keep: impl Fn(usize) -> bool) -> i64 {
    let add = p
        .addable()
        .into_iter()
        .filter(|&n| keep(n.row) && residue(n, ell) == i)
        .count() as i64;
    let rem = p
        .removable()
        .into_iter()
        .filter(|&n| keep(n.row) && residue(n, ell) == i)
        .count() as i64;
    add - rem
}

/// d_b(λ): d_i times (addable − removable) i-nodes strictly below `b`.
pub fn d_below(cartan: &CartanDatum, p: &Partition, b: Node) -> Result<i64> {
    check_node(p, b)?;
    let ell = cartan.ell();
    let i = residue(b, ell);
    Ok(cartan.d(i) * signed_count(p, i, ell, |r| r > b.row))
}

/// d^b(λ): d_i times (addable − removable) i-nodes strictly above `b`.
pub fn d_above(cartan: &CartanDatum, p: &Partition, b: Node) -> Result<i64> {
    check_node(p, b)?;
    let ell = cartan.ell();
    let i = residue(b, ell);
    Ok(cartan.d(i) * signed_count(p, i, ell, |r| r < b.row))
}

/// d_i(λ) = #addable i-nodes − #removable i-nodes, unscaled.
pub fn d_total(p: &Partition, i: usize, ell: usize) -> i64 {
    signed_count(p, i, ell, |_| true)
}

/// β with wt(λ) = Λ₀ − β: k[i] counts the nodes of residue i.
pub fn content(p: &Partition, ell: usize) -> RootSum {
    let mut k = vec![0u64; ell + 1];
    for b in p.nodes() {
        k[residue(b, ell)] += 1;
    }
    RootSum(k)
}

/// A standard tableau, stored as the node holding each entry 1, …, n.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: Partition,
    path: Vec<Node>,
}

impl StandardTableau {
    /// Builds a tableau from the sequence of nodes holding 1, 2, …, n. Every
    /// prefix must be a partition.
    pub fn from_path(path: Vec<Node>) -> Result<Self> {
        let mut shape = Partition::empty();
        for &b in &path {
            if !shape.is_addable(b) {
                return Err(Error::Parse(format!("entry at {b} does not extend {shape}")));
            }
            shape = shape.with_node(b);
        }
        Ok(StandardTableau { shape, path })
    }

    /// Builds a tableau from row-major entry arrays.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut path = vec![None; n];
        for (r, row) in rows.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                if e == 0 || e > n || path[e - 1].is_some() {
                    return Err(Error::Parse(format!("bad tableau entry {e}")));
                }
                path[e - 1] = Some(Node::new(r + 1, c + 1));
            }
        }
        let path: Vec<Node> = path.into_iter().map(|b| b.expect("all entries present")).collect();
        let t = Self::from_path(path)?;
        if t.shape.parts() != rows.iter().map(Vec::len).collect::<Vec<_>>() {
            return Err(Error::Parse("rows do not form the tableau shape".into()));
        }
        Ok(t)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.path.len()
    }

    /// Nodes holding 1, …, n in order.
    pub fn path(&self) -> &[Node] {
        &self.path
    }

    /// Entries in row-major layout.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        let mut rows: Vec<Vec<usize>> =
            self.shape.parts().iter().map(|&len| vec![0; len]).collect();
        for (k, b) in self.path.iter().enumerate() {
            rows[b.row - 1][b.col - 1] = k + 1;
        }
        rows
    }

    pub fn residue_sequence(&self, ell: usize) -> Vec<usize> {
        self.path.iter().map(|&b| residue(b, ell)).collect()
    }
}

impl Serialize for StandardTableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for StandardTableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<usize>>::deserialize(d)?;
        StandardTableau::from_rows(&rows).map_err(D::Error::custom)
    }
}

/// deg(T) = deg(T_{<n}) + d_b(λ), b the node of n.
pub fn deg(cartan: &CartanDatum, t: &StandardTableau) -> i64 {
    let mut shape = Partition::empty();
    let mut total = 0;
    for &b in &t.path {
        shape = shape.with_node(b);
        total += d_below(cartan, &shape, b).expect("b is removable from the grown shape");
    }
    total
}

/// codeg(T) = codeg(T_{<n}) + d^b(λ ↗ b), b the node of n.
pub fn codeg(cartan: &CartanDatum, t: &StandardTableau) -> i64 {
    let mut shape = Partition::empty();
    let mut total = 0;
    for &b in &t.path {
        total += d_above(cartan, &shape, b).expect("b is addable to the current shape");
        shape = shape.with_node(b);
    }
    total
}

/// Depth-first stream of standard tableaux of one shape.
///
/// Entries are placed one at a time in an addable corner; corners are tried
/// top to bottom, so tableaux come out in lexicographic order of their node
/// sequences. With a residue word the corner for entry k must have residue
/// `word[k-1]`, and branches die as soon as no corner matches.
pub struct StandardTableaux {
    shape: Partition,
    word: Option<(Vec<usize>, usize)>,
    current: Partition,
    path: Vec<Node>,
    stack: Vec<(Vec<Node>, usize)>,
    started: bool,
    done: bool,
}

impl StandardTableaux {
    fn new(shape: Partition, word: Option<(Vec<usize>, usize)>) -> Self {
        StandardTableaux {
            shape,
            word,
            current: Partition::empty(),
            path: Vec::new(),
            stack: Vec::new(),
            started: false,
            done: false,
        }
    }

    fn candidates(&self) -> Vec<Node> {
        let k = self.path.len();
        self.current
            .addable()
            .into_iter()
            .filter(|&b| self.shape.contains(b))
            .filter(|&b| match &self.word {
                Some((w, ell)) => residue(b, *ell) == w[k],
                None => true,
            })
            .collect()
    }

    fn push(&mut self, b: Node) {
        self.current = self.current.with_node(b);
        self.path.push(b);
    }

    fn pop(&mut self) {
        let b = self.path.pop().expect("non-empty path");
        self.current = self.current.without_node(b);
    }

    /// Extends the current prefix greedily; false on a dead end.
    fn descend(&mut self) -> bool {
        let n = self.shape.size();
        while self.path.len() < n {
            let cands = self.candidates();
            match cands.first() {
                Some(&b) => {
                    self.push(b);
                    self.stack.push((cands, 0));
                }
                None => return false,
            }
        }
        true
    }

    /// Moves to the next sibling branch; false when the search is exhausted.
    fn advance(&mut self) -> bool {
        while let Some((cands, idx)) = self.stack.pop() {
            self.pop();
            if idx + 1 < cands.len() {
                let b = cands[idx + 1];
                self.push(b);
                self.stack.push((cands, idx + 1));
                return true;
            }
        }
        false
    }
}

impl Iterator for StandardTableaux {
    type Item = StandardTableau;

    fn next(&mut self) -> Option<StandardTableau> {
        if self.done {
            return None;
        }
        let mut ok = if self.started {
            self.advance()
        } else {
            self.started = true;
            true
        };
        loop {
            if !ok {
                self.done = true;
                return None;
            }
            if self.descend() {
                if self.shape.is_empty() {
                    self.done = true;
                }
                return Some(StandardTableau { shape: self.shape.clone(), path: self.path.clone() });
            }
            ok = self.advance();
        }
    }
}

/// Every standard tableau of shape `p` exactly once, in lexicographic order
/// of node sequences.
pub fn standard_tableaux(p: &Partition) -> StandardTableaux {
    StandardTableaux::new(p.clone(), None)
}

/// Standard tableaux of shape `p` whose residue sequence equals `word`.
pub fn standard_tableaux_with_residues(
    p: &Partition,
    word: &[usize],
    ell: usize,
) -> Result<StandardTableaux> {
    if word.len() != p.size() {
        return Err(Error::SizeMismatch { shape: p.size(), word: word.len() });
    }
    Ok(StandardTableaux::new(p.clone(), Some((word.to_vec(), ell))))
}

/// |ST(λ)|, memoized over subshapes.
pub fn count_standard_tableaux(p: &Partition) -> BigInt {
    fn go(p: &Partition, memo: &mut HashMap<Partition, BigInt>) -> BigInt {
        if p.is_empty() {
            return BigInt::one();
        }
        if let Some(v) = memo.get(p) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for b in p.removable() {
            total += go(&p.without_node(b), memo);
        }
        memo.insert(p.clone(), total.clone());
        total
    }
    go(p, &mut HashMap::new())
}
