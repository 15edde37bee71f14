//! Hypergraphs as immutable values: vertices `1..=n` plus a set of
//! hyperedges, with the symmetric-difference sum, the two vertex
//! deletions, vertex covers, connectivity and isomorphism search.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Hyperedges are stored as 64-bit masks, so hypergraphs carry at most
/// 64 vertices. State construction has a far lower ceiling; see
/// [`crate::state::MAX_QUBITS`].
pub const MAX_VERTICES: u32 = 64;

/// A hyperedge: any subset of the vertices, including the empty set Φ.
///
/// Bit `k - 1` of the mask is vertex `k`. Edges order by cardinality
/// first and then lexicographically on the ascending vertex list, which
/// is the canonical serialization order.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Hyperedge {
    mask: u64,
}

impl Hyperedge {
    /// The empty hyperedge Φ.
    pub const EMPTY: Hyperedge = Hyperedge { mask: 0 };

    pub fn from_vertices<I: IntoIterator<Item = u32>>(vertices: I) -> Result<Self> {
        let mut mask = 0u64;
        for v in vertices {
            if v == 0 || v > MAX_VERTICES {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: MAX_VERTICES,
                });
            }
            mask |= 1 << (v - 1);
        }
        Ok(Hyperedge { mask })
    }

    pub fn singleton(v: u32) -> Result<Self> {
        Self::from_vertices([v])
    }

    pub(crate) fn from_mask(mask: u64) -> Self {
        Hyperedge { mask }
    }

    pub(crate) fn mask(&self) -> u64 {
        self.mask
    }

    pub fn len(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, v: u32) -> bool {
        v >= 1 && v <= MAX_VERTICES && self.mask >> (v - 1) & 1 == 1
    }

    /// The vertices of the edge, ascending.
    pub fn vertices(&self) -> impl Iterator<Item = u32> + '_ {
        (1..=MAX_VERTICES).filter(|&v| self.contains(v))
    }

    /// e − {v}.
    pub fn without(&self, v: u32) -> Hyperedge {
        debug_assert!(v >= 1 && v <= MAX_VERTICES);
        Hyperedge {
            mask: self.mask & !(1 << (v - 1)),
        }
    }

    pub fn max_vertex(&self) -> Option<u32> {
        if self.mask == 0 {
            None
        } else {
            Some(64 - self.mask.leading_zeros())
        }
    }

    pub fn fits(&self, n: u32) -> bool {
        self.max_vertex().map_or(true, |m| m <= n)
    }

    /// Renumbers the vertices after deleting vertex `k`: labels above `k`
    /// shift down by one. The edge must not contain `k`.
    fn reindex_after_delete(&self, k: u32) -> Hyperedge {
        debug_assert!(!self.contains(k));
        let low = self.mask & ((1u64 << (k - 1)) - 1);
        let high = (self.mask >> 1) & !((1u64 << (k - 1)) - 1);
        Hyperedge { mask: low | high }
    }

    fn relabeled(&self, p: &VertexPermutation) -> Hyperedge {
        let mut mask = 0u64;
        for v in self.vertices() {
            mask |= 1 << (p.image(v) - 1);
        }
        Hyperedge { mask }
    }

    fn shifted(&self, offset: u32) -> Hyperedge {
        Hyperedge {
            mask: self.mask << offset,
        }
    }
}

impl Ord for Hyperedge {
    fn cmp(&self, other: &Self) -> Ordering {
        // Cardinality first; ties break lexicographically on the ascending
        // vertex lists. Reversing the bit pattern turns that list order
        // into a plain integer comparison (descending).
        self.len()
            .cmp(&other.len())
            .then_with(|| other.mask.reverse_bits().cmp(&self.mask.reverse_bits()))
    }
}

impl PartialOrd for Hyperedge {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Hyperedge {
    /// Compact form: `0` for Φ, otherwise the ascending vertex list,
    /// e.g. `1,2,3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for v in self.vertices() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Hyperedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

/// Which of the two vertex deletions to apply. `Plus` drops every
/// incident hyperedge; `Minus` replaces each incident `e` by `e − {k}`,
/// cancelling repeats (a symmetric difference).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DeletionMode {
    Plus,
    Minus,
}

/// Vertex-cover semantics: may the deletion mode be chosen per vertex
/// (`Exists`) or must every assignment of modes flatten the hypergraph
/// (`ForAll`)?
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoverSemantics {
    Exists,
    ForAll,
}

/// A bijection on the vertices `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPermutation {
    images: Vec<u32>,
}

impl VertexPermutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len() as u32;
        let mut seen = vec![false; images.len()];
        for &v in &images {
            if v == 0 || v > n || seen[(v - 1) as usize] {
                return Err(Error::NotAPermutation);
            }
            seen[(v - 1) as usize] = true;
        }
        Ok(VertexPermutation { images })
    }

    pub fn identity(n: u32) -> Self {
        VertexPermutation {
            images: (1..=n).collect(),
        }
    }

    pub fn transposition(n: u32, a: u32, b: u32) -> Result<Self> {
        for v in [a, b] {
            if v == 0 || v > n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        let mut images: Vec<u32> = (1..=n).collect();
        images.swap((a - 1) as usize, (b - 1) as usize);
        Ok(VertexPermutation { images })
    }

    pub fn arity(&self) -> u32 {
        self.images.len() as u32
    }

    /// P(v).
    pub fn image(&self, v: u32) -> u32 {
        self.images[(v - 1) as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u32; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[(v - 1) as usize] = i as u32 + 1;
        }
        VertexPermutation { images }
    }
}

/// An immutable hypergraph `(V, E)` with `V = {1..n}`.
///
/// Equality is structural, and serialization is canonical (edges sorted by
/// size, then lexicographically), so two hypergraphs are equal exactly when
/// their compact strings are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: u32,
    edges: BTreeSet<Hyperedge>,
}

impl Hypergraph {
    /// The empty hypergraph on `n` vertices.
    pub fn empty(n: u32) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Hypergraph {
            n,
            edges: BTreeSet::new(),
        })
    }

    /// Builds a hypergraph, rejecting edges outside `1..=n` and duplicate
    /// edges (the edge collection is a set).
    pub fn new<I: IntoIterator<Item = Hyperedge>>(n: u32, edges: I) -> Result<Self> {
        let mut g = Hypergraph::empty(n)?;
        for e in edges {
            if !e.fits(n) {
                return Err(Error::VertexOutOfRange {
                    vertex: e.max_vertex().unwrap(),
                    n,
                });
            }
            if !g.edges.insert(e) {
                return Err(Error::DuplicateEdge(e));
            }
        }
        Ok(g)
    }

    /// Decodes a hypergraph from its enumeration index: bit `m` of `index`
    /// is set exactly when the edge whose vertex mask is `m` is present.
    /// Supports `n <= 5` so the index fits in a `u64`.
    pub fn from_index(n: u32, index: u64) -> Result<Self> {
        if n > 5 {
            return Err(Error::TooManyVertices { n, max: 5 });
        }
        let edge_space = 1u64 << (1 << n);
        if index >= edge_space {
            return Err(Error::Parse(format!(
                "index {index} outside the {edge_space} hypergraphs on {n} vertices"
            )));
        }
        let edges = (0..1u64 << n)
            .filter(|m| index >> m & 1 == 1)
            .map(Hyperedge::from_mask);
        Hypergraph::new(n, edges)
    }

    /// Iterates over all `2^(2^n)` hypergraphs on `n` vertices in
    /// enumeration-index order. Supports `n <= 4`.
    pub fn enumerate_all(n: u32) -> Result<impl Iterator<Item = Hypergraph>> {
        if n > 4 {
            return Err(Error::TooManyVertices { n, max: 4 });
        }
        let count = 1u64 << (1u64 << n);
        Ok((0..count).map(move |i| Hypergraph::from_index(n, i).unwrap()))
    }

    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = &Hyperedge> {
        self.edges.iter()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_edge(&self, e: &Hyperedge) -> bool {
        self.edges.contains(e)
    }

    /// g Δ g′: symmetric difference of the edge sets over the same
    /// vertex set. The disjoint-vertex case is [`Self::disjoint_union`].
    pub fn sum(&self, other: &Hypergraph) -> Result<Hypergraph> {
        if self.n != other.n {
            return Err(Error::VertexCountMismatch(self.n, other.n));
        }
        Ok(Hypergraph {
            n: self.n,
            edges: self
                .edges
                .symmetric_difference(&other.edges)
                .copied()
                .collect(),
        })
    }

    /// g + F ≡ (V, E Δ F): toggles every edge of `F`.
    pub fn add_edges<I: IntoIterator<Item = Hyperedge>>(&self, f: I) -> Result<Hypergraph> {
        let mut seen = BTreeSet::new();
        let mut edges = self.edges.clone();
        for e in f {
            if !e.fits(self.n) {
                return Err(Error::VertexOutOfRange {
                    vertex: e.max_vertex().unwrap(),
                    n: self.n,
                });
            }
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(e));
            }
            if !edges.remove(&e) {
                edges.insert(e);
            }
        }
        Ok(Hypergraph { n: self.n, edges })
    }

    /// Deletes vertex `k`, renumbering the survivors to `1..=n-1` in order.
    /// [`Self::deletion_labels`] recovers the original labels.
    pub fn delete(&self, k: u32, mode: DeletionMode) -> Result<Hypergraph> {
        self.check_vertex(k)?;
        let mut edges: BTreeSet<Hyperedge> = self
            .edges
            .iter()
            .filter(|e| !e.contains(k))
            .copied()
            .collect();
        if mode == DeletionMode::Minus {
            // Toggling e − {k} for every incident e performs the
            // "delete all repeated hyperedges" cancellation.
            for e in self.edges.iter().filter(|e| e.contains(k)) {
                let r = e.without(k);
                if !edges.remove(&r) {
                    edges.insert(r);
                }
            }
        }
        Ok(Hypergraph {
            n: self.n - 1,
            edges: edges.iter().map(|e| e.reindex_after_delete(k)).collect(),
        })
    }

    /// g −₊ {k}: drops every hyperedge incident with `k`.
    pub fn delete_plus(&self, k: u32) -> Result<Hypergraph> {
        self.delete(k, DeletionMode::Plus)
    }

    /// g −₋ {k}: truncates each incident hyperedge to `e − {k}`, with
    /// symmetric-difference cancellation.
    pub fn delete_minus(&self, k: u32) -> Result<Hypergraph> {
        self.delete(k, DeletionMode::Minus)
    }

    /// Original labels of the vertices surviving `delete(k, _)`, in the
    /// new vertex order.
    pub fn deletion_labels(&self, k: u32) -> Result<Vec<u32>> {
        self.check_vertex(k)?;
        Ok((1..=self.n).filter(|&v| v != k).collect())
    }

    /// Maximum hyperedge cardinality; 0 when there is no edge larger
    /// than Φ.
    pub fn rank(&self) -> u32 {
        self.edges.iter().map(Hyperedge::len).max().unwrap_or(0)
    }

    /// True when every hyperedge has cardinality at most one (only Φ and
    /// loops).
    pub fn is_trivial(&self) -> bool {
        self.rank() <= 1
    }

    /// The partition of `1..=n` into path-connected classes. Hyperedges of
    /// size ≥ 2 connect their vertices; loops and Φ connect nothing.
    /// Classes are sorted by least member.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let mut parent: Vec<u32> = (0..self.n).collect();
        fn find(parent: &mut [u32], a: u32) -> u32 {
            let mut a = a;
            while parent[a as usize] != a {
                parent[a as usize] = parent[parent[a as usize] as usize];
                a = parent[a as usize];
            }
            a
        }
        for e in &self.edges {
            let mut vs = e.vertices();
            if let Some(first) = vs.next() {
                for v in vs {
                    let (ra, rb) = (find(&mut parent, first - 1), find(&mut parent, v - 1));
                    if ra != rb {
                        parent[rb as usize] = ra;
                    }
                }
            }
        }
        let mut classes: Vec<Vec<u32>> = Vec::new();
        let mut root_to_class = vec![usize::MAX; self.n as usize];
        for v in 1..=self.n {
            let r = find(&mut parent, v - 1) as usize;
            if root_to_class[r] == usize::MAX {
                root_to_class[r] = classes.len();
                classes.push(Vec::new());
            }
            classes[root_to_class[r]].push(v);
        }
        classes
    }

    /// con(g): the number of connected components.
    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// True when `con(g) <= 1` (vacuously true for `n = 0`).
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Applies a vertex relabeling: every edge `e` becomes `P(e)`.
    pub fn relabel(&self, p: &VertexPermutation) -> Result<Hypergraph> {
        if p.arity() != self.n {
            return Err(Error::ArityMismatch {
                expected: self.n,
                found: p.arity(),
            });
        }
        Ok(Hypergraph {
            n: self.n,
            edges: self.edges.iter().map(|e| e.relabeled(p)).collect(),
        })
    }

    /// Searches for a permutation `P` with `E′ = {P(e) | e ∈ E}`.
    /// Brute force over all `n!` candidates with a cheap multiset prefilter;
    /// intended for desk scale (`n <= 8`). The witness is the first match
    /// in lexicographic order.
    pub fn isomorphism(&self, other: &Hypergraph) -> Option<VertexPermutation> {
        if self.n != other.n || self.edges.len() != other.edges.len() {
            return None;
        }
        let sizes = |g: &Hypergraph| {
            let mut v: Vec<u32> = g.edges.iter().map(Hyperedge::len).collect();
            v.sort_unstable();
            v
        };
        if sizes(self) != sizes(other) {
            return None;
        }
        for images in (1..=self.n).permutations(self.n as usize) {
            let p = VertexPermutation { images };
            if self.relabel(&p).unwrap() == *other {
                return Some(p);
            }
        }
        None
    }

    /// Is `s` a vertex cover: does deleting all its vertices leave a
    /// trivial hypergraph? With [`CoverSemantics::Exists`] some assignment
    /// of deletion modes must succeed; with [`CoverSemantics::ForAll`]
    /// every assignment must. Runs through all `2^|s|` assignments.
    pub fn is_vertex_cover_with(&self, s: &[u32], semantics: CoverSemantics) -> Result<bool> {
        let mut set = BTreeSet::new();
        for &v in s {
            self.check_vertex(v)?;
            set.insert(v);
        }
        // Deleting in descending label order keeps the remaining targets'
        // labels stable across re-indexing.
        let order: Vec<u32> = set.into_iter().rev().collect();
        for assignment in 0u64..1 << order.len() {
            let mut g = self.clone();
            for (i, &v) in order.iter().enumerate() {
                let mode = if assignment >> i & 1 == 0 {
                    DeletionMode::Plus
                } else {
                    DeletionMode::Minus
                };
                g = g.delete(v, mode)?;
            }
            match (g.is_trivial(), semantics) {
                (true, CoverSemantics::Exists) => return Ok(true),
                (false, CoverSemantics::ForAll) => return Ok(false),
                _ => {}
            }
        }
        Ok(semantics == CoverSemantics::ForAll)
    }

    /// [`Self::is_vertex_cover_with`] under the primary exists-semantics.
    pub fn is_vertex_cover(&self, s: &[u32]) -> Result<bool> {
        self.is_vertex_cover_with(s, CoverSemantics::Exists)
    }

    /// Smallest vertex cover under the given semantics, searching subsets
    /// by increasing cardinality and breaking ties lexicographically.
    /// Always succeeds: deleting every vertex leaves a trivial hypergraph.
    pub fn min_vertex_cover_with(&self, semantics: CoverSemantics) -> Vec<u32> {
        for size in 0..=self.n as usize {
            for s in (1..=self.n).combinations(size) {
                if self.is_vertex_cover_with(&s, semantics).unwrap() {
                    return s;
                }
            }
        }
        unreachable!("the full vertex set is always a cover");
    }

    /// Smallest vertex cover under the primary exists-semantics.
    pub fn min_vertex_cover(&self) -> Vec<u32> {
        self.min_vertex_cover_with(CoverSemantics::Exists)
    }

    /// Places `other`'s vertices after `self`'s and unions the edge sets.
    pub fn disjoint_union(&self, other: &Hypergraph) -> Result<Hypergraph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut edges = self.edges.clone();
        for e in &other.edges {
            let shifted = e.shifted(self.n);
            if !edges.insert(shifted) {
                // Only Φ can collide across disjoint vertex sets.
                return Err(Error::DuplicateEdge(shifted));
            }
        }
        Ok(Hypergraph { n, edges })
    }

    fn check_vertex(&self, k: u32) -> Result<()> {
        if k == 0 || k > self.n {
            return Err(Error::VertexOutOfRange {
                vertex: k,
                n: self.n,
            });
        }
        Ok(())
    }
}

impl fmt::Display for Hypergraph {
    /// Canonical compact form `<n>:<edge>;<edge>;...` with `0` for Φ,
    /// e.g. `4:1;2,3;3,4;1,2,3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.n)?;
        let mut first = true;
        for e in &self.edges {
            if !first {
                write!(f, ";")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph({self})")
    }
}

impl FromStr for Hypergraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, body) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("missing ':' in {s:?}")))?;
        let n: u32 = head
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex count {head:?}")))?;
        let mut edges = Vec::new();
        if !body.is_empty() {
            for token in body.split(';') {
                edges.push(parse_edge(token)?);
            }
        }
        Hypergraph::new(n, edges)
    }
}

fn parse_edge(token: &str) -> Result<Hyperedge> {
    if token == "0" {
        return Ok(Hyperedge::EMPTY);
    }
    let mut vertices = Vec::new();
    for part in token.split(',') {
        let v: u32 = part
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex {part:?} in edge {token:?}")))?;
        if v == 0 {
            return Err(Error::Parse(format!("vertex 0 in edge {token:?}")));
        }
        if let Some(&last) = vertices.last() {
            if v <= last {
                return Err(Error::Parse(format!(
                    "edge {token:?} is not strictly ascending"
                )));
            }
        }
        vertices.push(v);
    }
    Hyperedge::from_vertices(vertices)
}

#[derive(Serialize, Deserialize)]
struct RawHypergraph {
    n: u32,
    edges: Vec<Vec<u32>>,
}

impl Serialize for Hypergraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RawHypergraph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .map(|e| e.vertices().collect())
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Hypergraph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawHypergraph::deserialize(deserializer)?;
        let mut edges = Vec::new();
        for list in &raw.edges {
            for w in list.windows(2) {
                if w[1] <= w[0] {
                    return Err(D::Error::custom(format!(
                        "edge {list:?} is not strictly ascending"
                    )));
                }
            }
            edges.push(Hyperedge::from_vertices(list.iter().copied()).map_err(D::Error::custom)?);
        }
        Hypergraph::new(raw.n, edges).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge(vs: &[u32]) -> Hyperedge {
        Hyperedge::from_vertices(vs.iter().copied()).unwrap()
    }

    fn ga() -> Hypergraph {
        "4:1;2,3;3,4;1,2,3".parse().unwrap()
    }

    #[test]
    fn canonical_order_is_graded_lexicographic() {
        let g: Hypergraph = "4:1,2,3;3,4;1;2,3".parse().unwrap();
        assert_eq!(g.to_string(), "4:1;2,3;3,4;1,2,3");
        let g: Hypergraph = "4:1,2,3;1;3,4;0".parse().unwrap();
        assert_eq!(g.to_string(), "4:0;1;3,4;1,2,3");
    }

    #[test]
    fn sum_matches_symmetric_difference() {
        let g = ga();
        let h: Hypergraph = "4:0;2,3".parse().unwrap();
        assert_eq!(g.sum(&h).unwrap().to_string(), "4:0;1;3,4;1,2,3");
        assert_eq!(g.sum(&g).unwrap(), Hypergraph::empty(4).unwrap());
        assert_eq!(g.sum(&Hypergraph::empty(4).unwrap()).unwrap(), g);
        assert_eq!(
            g.sum(&Hypergraph::empty(3).unwrap()),
            Err(Error::VertexCountMismatch(4, 3))
        );
    }

    #[test]
    fn add_edges_toggles() {
        let g = ga();
        let f = [Hyperedge::EMPTY, edge(&[2, 3])];
        assert_eq!(g.add_edges(f).unwrap().to_string(), "4:0;1;3,4;1,2,3");
        assert_eq!(g.add_edges([]).unwrap(), g);
        let once = g.add_edges([edge(&[1, 4])]).unwrap();
        assert_eq!(once.add_edges([edge(&[1, 4])]).unwrap(), g);
        assert!(matches!(
            g.add_edges([edge(&[5])]),
            Err(Error::VertexOutOfRange { vertex: 5, n: 4 })
        ));
        assert!(matches!(
            g.add_edges([edge(&[2]), edge(&[2])]),
            Err(Error::DuplicateEdge(_))
        ));
    }

    #[test]
    fn deletions_match_fig1() {
        let g = ga();
        assert_eq!(g.delete_plus(1).unwrap().to_string(), "3:1,2;2,3");
        assert_eq!(g.delete_minus(1).unwrap().to_string(), "3:0;2,3");
        assert_eq!(g.deletion_labels(1).unwrap(), vec![2, 3, 4]);
        assert!(g.delete_plus(5).is_err());
    }

    #[test]
    fn delete_minus_cancels_repeats() {
        let g: Hypergraph = "2:1,2;2".parse().unwrap();
        assert_eq!(g.delete_minus(1).unwrap(), Hypergraph::empty(1).unwrap());
        let e = Hypergraph::empty(3).unwrap();
        assert_eq!(e.delete_minus(2).unwrap(), Hypergraph::empty(2).unwrap());
        assert_eq!(e.delete_plus(2).unwrap(), Hypergraph::empty(2).unwrap());
        let g: Hypergraph = "2:1,2".parse().unwrap();
        assert_eq!(g.delete_plus(2).unwrap(), Hypergraph::empty(1).unwrap());
    }

    #[test]
    fn rank_and_triviality() {
        assert_eq!(ga().rank(), 3);
        assert_eq!(Hypergraph::empty(4).unwrap().rank(), 0);
        assert_eq!("4:0".parse::<Hypergraph>().unwrap().rank(), 0);
        assert_eq!("3:1,2;2,3".parse::<Hypergraph>().unwrap().rank(), 2);
        assert!("3:0;2".parse::<Hypergraph>().unwrap().is_trivial());
        assert!(!ga().is_trivial());
        assert!(Hypergraph::empty(0).unwrap().is_trivial());
    }

    #[test]
    fn components_and_connectivity() {
        assert_eq!(ga().components(), vec![vec![1, 2, 3, 4]]);
        assert!(ga().is_connected());
        let g: Hypergraph = "4:1,2;3,4".parse().unwrap();
        assert_eq!(g.components(), vec![vec![1, 2], vec![3, 4]]);
        assert_eq!(g.component_count(), 2);
        let e = Hypergraph::empty(3).unwrap();
        assert_eq!(e.components(), vec![vec![1], vec![2], vec![3]]);
        // Loops and Φ never connect vertices.
        let g: Hypergraph = "3:0;1;2;3".parse().unwrap();
        assert_eq!(g.component_count(), 3);
    }

    #[test]
    fn isomorphism_finds_witnesses() {
        let a: Hypergraph = "2:1".parse().unwrap();
        let b: Hypergraph = "2:2".parse().unwrap();
        let p = a.isomorphism(&b).unwrap();
        assert_eq!(p.images(), &[2, 1]);
        assert_eq!(
            ga().isomorphism(&ga()).unwrap(),
            VertexPermutation::identity(4)
        );
        let c: Hypergraph = "2:1,2".parse().unwrap();
        assert!(a.isomorphism(&c).is_none());
    }

    #[test]
    fn vertex_covers_follow_exists_semantics() {
        let g = ga();
        assert!(g.is_vertex_cover(&[3]).unwrap());
        assert!(g.is_vertex_cover(&[1, 4]).unwrap());
        assert!(!g.is_vertex_cover(&[]).unwrap());
        assert!(g.is_vertex_cover(&[1, 2, 3, 4]).unwrap());
        // Both of the accepted covers fail the universal reading.
        assert!(!g.is_vertex_cover_with(&[3], CoverSemantics::ForAll).unwrap());
        assert!(!g
            .is_vertex_cover_with(&[1, 4], CoverSemantics::ForAll)
            .unwrap());
        assert!(g
            .is_vertex_cover_with(&[1, 3], CoverSemantics::ForAll)
            .unwrap());
    }

    #[test]
    fn minimum_covers() {
        assert_eq!(ga().min_vertex_cover(), vec![3]);
        assert_eq!(
            ga().min_vertex_cover_with(CoverSemantics::ForAll),
            vec![1, 3]
        );
        assert_eq!("3:0;2".parse::<Hypergraph>().unwrap().min_vertex_cover(), Vec::<u32>::new());
        assert_eq!("3:1,2,3".parse::<Hypergraph>().unwrap().min_vertex_cover(), vec![1]);
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert!("".parse::<Hypergraph>().is_err());
        assert!("4".parse::<Hypergraph>().is_err());
        assert!("x:1".parse::<Hypergraph>().is_err());
        assert!("4:2,1".parse::<Hypergraph>().unwrap_err().is_parse());
        assert!("4:1,1".parse::<Hypergraph>().unwrap_err().is_parse());
        // Semantic failures are not parse failures.
        assert!(!"4:5".parse::<Hypergraph>().unwrap_err().is_parse());
        assert!(!"4:1;1".parse::<Hypergraph>().unwrap_err().is_parse());
        assert_eq!("2:".parse::<Hypergraph>().unwrap(), Hypergraph::empty(2).unwrap());
    }

    #[test]
    fn json_round_trip_is_canonical() {
        let g = ga();
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, r#"{"n":4,"edges":[[1],[2,3],[3,4],[1,2,3]]}"#);
        let back: Hypergraph = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
        let phi: Hypergraph = serde_json::from_str(r#"{"n":1,"edges":[[]]}"#).unwrap();
        assert_eq!(phi.to_string(), "1:0");
        assert!(serde_json::from_str::<Hypergraph>(r#"{"n":2,"edges":[[2,1]]}"#).is_err());
    }

    #[test]
    fn disjoint_union_shifts_labels() {
        let a: Hypergraph = "2:1,2".parse().unwrap();
        let b: Hypergraph = "1:1".parse().unwrap();
        assert_eq!(a.disjoint_union(&b).unwrap().to_string(), "3:3;1,2");
    }

    #[test]
    fn enumeration_covers_the_index_space() {
        assert_eq!(Hypergraph::enumerate_all(2).unwrap().count(), 16);
        let g = Hypergraph::from_index(2, 0b1000).unwrap();
        assert_eq!(g.to_string(), "2:1,2");
        assert!(Hypergraph::from_index(2, 16).is_err());
    }
}
