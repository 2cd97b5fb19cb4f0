//! Labeled graphs as involutive dart structures.
//!
//! A graph stores each unoriented edge as a pair of opposite darts: dart
//! `2i` runs tail -> head carrying a signed letter, and dart `2i ^ 1` runs
//! head -> tail carrying the inverse letter. The involution `d ^ 1` is
//! fixed-point-free by construction, and a loop contributes both of its darts
//! to the degree of its vertex.
//!
//! Graphs are built once through [`LabeledGraph::add_vertex`] /
//! [`LabeledGraph::add_edge`] and then treated as immutable values: folding,
//! coring and the other operations return new graphs.

use std::collections::VecDeque;

use crate::alphabet::{Alphabet, Letter, SignedLetter};
use crate::error::{Error, Result};
use crate::word::Word;

pub type Vertex = u32;
pub type Dart = u32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub(crate) alphabet: Alphabet,
    /// Head vertex of each dart; dart `d`'s reverse is `d ^ 1`.
    pub(crate) head: Vec<Vertex>,
    pub(crate) label: Vec<SignedLetter>,
    /// Outgoing darts per vertex, in insertion order.
    pub(crate) out: Vec<Vec<Dart>>,
    pub(crate) basepoint: Option<Vertex>,
}

impl LabeledGraph {
    pub fn new(alphabet: Alphabet) -> LabeledGraph {
        LabeledGraph::with_vertices(alphabet, 0)
    }

    pub fn with_vertices(alphabet: Alphabet, vertices: usize) -> LabeledGraph {
        LabeledGraph {
            alphabet,
            head: Vec::new(),
            label: Vec::new(),
            out: vec![Vec::new(); vertices],
            basepoint: None,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    /// Number of unoriented edges.
    pub fn edge_count(&self) -> usize {
        self.head.len() / 2
    }

    pub fn dart_count(&self) -> usize {
        self.head.len()
    }

    pub fn basepoint(&self) -> Option<Vertex> {
        self.basepoint
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        0..self.out.len() as Vertex
    }

    /// All positively labeled darts, one per unoriented edge with a positive
    /// side. (Every edge added through [`add_edge`](Self::add_edge) has one.)
    pub fn positive_darts(&self) -> impl Iterator<Item = Dart> + '_ {
        (0..self.head.len() as Dart).filter(|&d| self.label(d).is_positive())
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.out.push(Vec::new());
        (self.out.len() - 1) as Vertex
    }

    /// Adds an unoriented edge as a dart pair and returns the positive dart.
    pub fn add_edge(&mut self, tail: Vertex, head: Vertex, letter: Letter) -> Dart {
        self.add_dart_pair(tail, head, letter.positive())
    }

    /// Adds an edge whose forward dart carries `label` (of either sign).
    pub fn add_dart_pair(&mut self, tail: Vertex, head: Vertex, label: SignedLetter) -> Dart {
        debug_assert!((tail as usize) < self.out.len() && (head as usize) < self.out.len());
        let d = self.head.len() as Dart;
        self.head.push(head);
        self.label.push(label);
        self.head.push(tail);
        self.label.push(label.inverse());
        self.out[tail as usize].push(d);
        self.out[head as usize].push(d ^ 1);
        d
    }

    pub fn set_basepoint(&mut self, basepoint: Option<Vertex>) {
        debug_assert!(basepoint.map_or(true, |b| (b as usize) < self.out.len()));
        self.basepoint = basepoint;
    }

    pub fn head(&self, d: Dart) -> Vertex {
        self.head[d as usize]
    }

    pub fn tail(&self, d: Dart) -> Vertex {
        self.head[(d ^ 1) as usize]
    }

    pub fn label(&self, d: Dart) -> SignedLetter {
        self.label[d as usize]
    }

    /// The reversed dart. `inverse` is an involution without fixed points.
    pub fn inverse(&self, d: Dart) -> Dart {
        d ^ 1
    }

    /// Outgoing darts of `v` in insertion order.
    pub fn darts_from(&self, v: Vertex) -> &[Dart] {
        &self.out[v as usize]
    }

    /// Degree counts darts, so a loop at `v` contributes 2.
    pub fn degree(&self, v: Vertex) -> usize {
        self.out[v as usize].len()
    }

    /// The unique outgoing dart at `v` labeled `s` in a folded graph; in an
    /// unfolded graph, the first one by dart id.
    pub fn dart_from(&self, v: Vertex, s: SignedLetter) -> Option<Dart> {
        self.out[v as usize]
            .iter()
            .copied()
            .filter(|&d| self.label(d) == s)
            .min()
    }

    /// Follows `word` letter by letter from `v`; `None` once a letter has no
    /// dart to ride.
    pub fn trace(&self, v: Vertex, word: &Word) -> Option<Vertex> {
        let mut at = v;
        for &s in word.letters() {
            at = self.head(self.dart_from(at, s)?);
        }
        Some(at)
    }

    /// `|V| - |E|`; each dart pair counts as one edge.
    pub fn euler_characteristic(&self) -> i64 {
        self.out.len() as i64 - (self.head.len() / 2) as i64
    }

    pub fn is_folded(&self) -> bool {
        let mut labels = Vec::new();
        for v in 0..self.out.len() {
            labels.clear();
            labels.extend(self.out[v].iter().map(|&d| self.label(d)));
            labels.sort_unstable();
            if labels.windows(2).any(|w| w[0] == w[1]) {
                return false;
            }
        }
        true
    }

    /// Structural soundness: dart pairing, label involution, out-list
    /// consistency, and range checks. Cheap enough to run after every
    /// operation in debug and test builds.
    pub fn validate(&self) -> Result<()> {
        if self.head.len() % 2 != 0 || self.head.len() != self.label.len() {
            return Err(Error::Corrupt("dart arrays are not paired".into()));
        }
        let n = self.out.len() as u32;
        for (d, &h) in self.head.iter().enumerate() {
            if h >= n {
                return Err(Error::Corrupt(format!("dart {d} points past the vertex set")));
            }
            let s = self.label[d];
            if s.letter().index() >= self.alphabet.len() {
                return Err(Error::Corrupt(format!("dart {d} carries a foreign label")));
            }
            if self.label[d ^ 1] != s.inverse() {
                return Err(Error::Corrupt(format!(
                    "darts {d} and {} do not carry inverse labels",
                    d ^ 1
                )));
            }
        }
        let mut placed = vec![0u8; self.head.len()];
        for v in 0..self.out.len() {
            for &d in &self.out[v] {
                if d as usize >= self.head.len() {
                    return Err(Error::Corrupt(format!("vertex {v} lists a missing dart")));
                }
                if self.head[(d ^ 1) as usize] != v as u32 {
                    return Err(Error::Corrupt(format!("dart {d} is filed under the wrong tail")));
                }
                placed[d as usize] += 1;
            }
        }
        if placed.iter().any(|&c| c != 1) {
            return Err(Error::Corrupt("some dart is filed zero or several times".into()));
        }
        if let Some(b) = self.basepoint {
            if b >= n {
                return Err(Error::InvalidVertex(b));
            }
        }
        Ok(())
    }

    /// Component id per vertex plus the component count. Components are
    /// numbered in order of their least vertex, so the labeling is
    /// deterministic.
    pub fn component_partition(&self) -> (Vec<u32>, usize) {
        let n = self.out.len();
        let mut comp = vec![u32::MAX; n];
        let mut count = 0u32;
        let mut queue = VecDeque::new();
        for start in 0..n {
            if comp[start] != u32::MAX {
                continue;
            }
            comp[start] = count;
            queue.push_back(start as Vertex);
            while let Some(v) = queue.pop_front() {
                for &d in &self.out[v as usize] {
                    let w = self.head(d);
                    if comp[w as usize] == u32::MAX {
                        comp[w as usize] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count as usize)
    }

    pub fn is_connected(&self) -> bool {
        self.out.len() <= 1 || self.component_partition().1 == 1
    }

    /// Connected components as separate graphs, ordered by least contained
    /// vertex. The basepoint survives into its component; other components
    /// have none.
    pub fn connected_components(&self) -> Vec<LabeledGraph> {
        let (comp, count) = self.component_partition();
        (0..count)
            .map(|c| {
                let keep: Vec<bool> = (0..self.out.len()).map(|v| comp[v] == c as u32).collect();
                self.retain_vertices(&keep).0
            })
            .collect()
    }

    /// The subgraph induced on the kept vertices, along with the old id of
    /// each new vertex. Edges with a dropped endpoint are dropped; the
    /// basepoint survives only if kept.
    pub(crate) fn retain_vertices(&self, keep: &[bool]) -> (LabeledGraph, Vec<Vertex>) {
        debug_assert_eq!(keep.len(), self.out.len());
        let mut old_of_new = Vec::new();
        let mut new_of_old = vec![u32::MAX; self.out.len()];
        for v in 0..self.out.len() {
            if keep[v] {
                new_of_old[v] = old_of_new.len() as u32;
                old_of_new.push(v as Vertex);
            }
        }
        let mut g = LabeledGraph::with_vertices(self.alphabet.clone(), old_of_new.len());
        for d in self.positive_darts() {
            let (t, h) = (self.tail(d), self.head(d));
            if keep[t as usize] && keep[h as usize] {
                g.add_dart_pair(new_of_old[t as usize], new_of_old[h as usize], self.label(d));
            }
        }
        g.basepoint = self
            .basepoint
            .filter(|&b| keep[b as usize])
            .map(|b| new_of_old[b as usize]);
        debug_assert!(g.validate().is_ok());
        (g, old_of_new)
    }

    /// First Betti number `1 - chi` of a connected graph.
    pub fn rank(&self) -> Result<u64> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok((1 - self.euler_characteristic()) as u64)
    }

    /// Reduced rank `max(rank - 1, 0) = max(-chi, 0)` of a connected graph.
    pub fn reduced_rank(&self) -> Result<u64> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok((-self.euler_characteristic()).max(0) as u64)
    }

    /// Breadth-first tree from `root`, expanding the darts at each vertex in
    /// canonical label order, so the tree depends only on the graph value.
    pub(crate) fn bfs_tree(&self, root: Vertex) -> BfsTree {
        let mut parent = vec![None; self.out.len()];
        let mut seen = vec![false; self.out.len()];
        let mut order = vec![root];
        seen[root as usize] = true;
        let mut at = 0;
        while at < order.len() {
            let v = order[at];
            at += 1;
            let mut darts = self.out[v as usize].clone();
            darts.sort_by_key(|&d| (self.label(d), d));
            for d in darts {
                let w = self.head(d);
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    parent[w as usize] = Some(d);
                    order.push(w);
                }
            }
        }
        BfsTree { parent }
    }
}

/// A rooted spanning forest fragment: the BFS tree of the root's component.
pub(crate) struct BfsTree {
    /// The dart that discovered each vertex (None for the root and for
    /// vertices in other components).
    pub parent: Vec<Option<Dart>>,
}

impl BfsTree {
    /// Label of the tree path root -> v.
    pub fn word_to(&self, graph: &LabeledGraph, v: Vertex) -> Word {
        let mut signed = Vec::new();
        let mut at = v;
        while let Some(d) = self.parent[at as usize] {
            signed.push(graph.label(d));
            at = graph.tail(d);
        }
        signed.reverse();
        Word::from_letters(signed)
    }

    /// Whether the dart is one of the tree darts (in either direction).
    pub fn uses(&self, graph: &LabeledGraph, d: Dart) -> bool {
        self.parent[graph.head(d) as usize] == Some(d)
            || self.parent[graph.tail(d) as usize] == Some(d ^ 1)
    }
}
