//! Canonical forms for folded graphs.
//!
//! The rooted form breadth-first traverses from the root, trying the darts
//! at each vertex in canonical signed-letter order and numbering vertices in
//! discovery order; the encoding then lists, for every vertex in discovery
//! order and every signed letter, the discovered id of the neighbour (or 0).
//! Two connected folded rooted graphs over one alphabet are isomorphic by a
//! root- and label-preserving isomorphism exactly when their encodings are
//! equal, and the encoding is invariant under renaming vertices.
//!
//! The unrooted form is the minimum of the rooted encodings over all root
//! choices (the basepoint, if any, plays no role).

use crate::error::{Error, Result};
use crate::graph::{LabeledGraph, Vertex};

/// An encoding vector; compare with `==` / `Ord`. Encodings are only
/// meaningful to compare between graphs sharing an alphabet.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u32>);

impl CanonicalForm {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

impl LabeledGraph {
    /// Canonical form rooted at the basepoint. Errors when the graph is
    /// unfolded, disconnected, or has no basepoint.
    pub fn rooted_canonical(&self) -> Result<CanonicalForm> {
        let base = self.basepoint().ok_or(Error::MissingBasepoint)?;
        self.canonical_checks()?;
        Ok(CanonicalForm(self.encode_from(base)))
    }

    /// Minimum of the rooted encodings over all roots.
    pub fn unrooted_canonical(&self) -> Result<CanonicalForm> {
        self.canonical_checks()?;
        if self.vertex_count() == 0 {
            return Ok(CanonicalForm(vec![self.alphabet().len() as u32, 0]));
        }
        // The encoding starts with the root's own row, which is computable
        // locally; only roots with the minimal first row can reach the
        // global minimum.
        let width = 2 * self.alphabet().len();
        let mut scratch = RowScratch::new(self.vertex_count(), width);
        let mut best_row: Option<Vec<u32>> = None;
        let mut candidates = Vec::new();
        for v in self.vertices() {
            let row = scratch.local_row(self, v);
            match best_row.as_deref() {
                Some(best) if row.as_slice() > best => {}
                Some(best) if row.as_slice() == best => candidates.push(v),
                _ => {
                    best_row = Some(row.clone());
                    candidates.clear();
                    candidates.push(v);
                }
            }
        }
        let best = candidates
            .into_iter()
            .map(|v| self.encode_from(v))
            .min()
            .expect("nonempty graph has a candidate root");
        Ok(CanonicalForm(best))
    }

    fn canonical_checks(&self) -> Result<()> {
        if !self.is_folded() {
            return Err(Error::NotFolded);
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(())
    }

    fn encode_from(&self, root: Vertex) -> Vec<u32> {
        let n = self.vertex_count();
        let width = 2 * self.alphabet().len();
        let mut scratch = RowScratch::new(n, width);
        let mut id = vec![u32::MAX; n];
        let mut order = Vec::with_capacity(n);
        id[root as usize] = 0;
        order.push(root);
        let mut enc = Vec::with_capacity(2 + n * width);
        enc.push(self.alphabet().len() as u32);
        enc.push(n as u32);
        let mut at = 0;
        while at < order.len() {
            let v = order[at];
            at += 1;
            scratch.load(self, v);
            for s in 0..width {
                match scratch.get(s) {
                    None => enc.push(0),
                    Some(h) => {
                        if id[h as usize] == u32::MAX {
                            id[h as usize] = order.len() as u32;
                            order.push(h);
                        }
                        enc.push(id[h as usize] + 1);
                    }
                }
            }
        }
        enc
    }
}

/// Reusable signed-letter-indexed view of one vertex's out-darts.
struct RowScratch {
    head_by_label: Vec<Vertex>,
    stamp: Vec<u32>,
    epoch: u32,
    row: Vec<u32>,
}

impl RowScratch {
    fn new(_vertices: usize, width: usize) -> RowScratch {
        RowScratch {
            head_by_label: vec![0; width],
            stamp: vec![0; width],
            epoch: 0,
            row: vec![0; width],
        }
    }

    fn load(&mut self, g: &LabeledGraph, v: Vertex) {
        self.epoch += 1;
        for &d in g.darts_from(v) {
            let i = g.label(d).index();
            // In a folded graph each label occurs once; `load` is only used
            // on folded graphs.
            self.head_by_label[i] = g.head(d);
            self.stamp[i] = self.epoch;
        }
    }

    fn get(&self, label_index: usize) -> Option<Vertex> {
        (self.stamp[label_index] == self.epoch).then(|| self.head_by_label[label_index])
    }

    /// The root row the encoding would start with if `v` were the root:
    /// neighbour ids as they would be discovered, label by label.
    fn local_row(&mut self, g: &LabeledGraph, v: Vertex) -> &Vec<u32> {
        self.load(g, v);
        let width = self.row.len();
        // Discovery ids local to this row: v itself is 0, previously unseen
        // heads get 1, 2, ... in label order. Re-scanning the row suffices
        // to decide whether a head was already numbered; degrees are tiny.
        let mut assigned: Vec<(Vertex, u32)> = Vec::new();
        let mut next = 1;
        for s in 0..width {
            self.row[s] = match self.get(s) {
                None => 0,
                Some(h) => {
                    let known = if h == v {
                        Some(0)
                    } else {
                        assigned.iter().find(|&&(w, _)| w == h).map(|&(_, i)| i)
                    };
                    let i = known.unwrap_or_else(|| {
                        assigned.push((h, next));
                        next += 1;
                        next - 1
                    });
                    i + 1
                }
            };
        }
        &self.row
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;

    fn ab() -> Alphabet {
        Alphabet::from_chars("ab").unwrap()
    }

    /// The same two-vertex graph built with its vertices in either order.
    fn two_cycle(flip: bool) -> LabeledGraph {
        let al = ab();
        let a = al.get("a").unwrap();
        let b = al.get("b").unwrap();
        let mut g = LabeledGraph::with_vertices(al, 2);
        let (x, y) = if flip { (1, 0) } else { (0, 1) };
        g.add_edge(x, y, a);
        g.add_edge(y, x, b);
        g.set_basepoint(Some(x));
        g
    }

    #[test]
    fn rooted_form_ignores_vertex_numbering() {
        assert_eq!(
            two_cycle(false).rooted_canonical().unwrap(),
            two_cycle(true).rooted_canonical().unwrap()
        );
    }

    #[test]
    fn rooted_form_distinguishes_roots() {
        let al = ab();
        let a = al.get("a").unwrap();
        let mut g = LabeledGraph::with_vertices(al.clone(), 2);
        g.add_edge(0, 1, a);
        g.set_basepoint(Some(0));
        let from_tail = g.rooted_canonical().unwrap();
        g.set_basepoint(Some(1));
        let from_head = g.rooted_canonical().unwrap();
        assert_ne!(from_tail, from_head);
        // But unrooted forms agree, basepoint notwithstanding.
        let u1 = g.unrooted_canonical().unwrap();
        g.set_basepoint(None);
        assert_eq!(g.unrooted_canonical().unwrap(), u1);
    }

    #[test]
    fn unfolded_graphs_are_rejected() {
        let al = ab();
        let a = al.get("a").unwrap();
        let mut g = LabeledGraph::with_vertices(al, 3);
        g.add_edge(0, 1, a);
        g.add_edge(0, 2, a);
        g.set_basepoint(Some(0));
        assert_eq!(g.rooted_canonical(), Err(Error::NotFolded));
        assert_eq!(g.unrooted_canonical(), Err(Error::NotFolded));
    }

    #[test]
    fn disconnected_graphs_are_rejected() {
        let al = ab();
        let mut g = LabeledGraph::with_vertices(al, 2);
        g.set_basepoint(Some(0));
        assert_eq!(g.rooted_canonical(), Err(Error::Disconnected));
    }

    #[test]
    fn missing_basepoint_is_an_error_for_rooted_only() {
        let al = ab();
        let a = al.get("a").unwrap();
        let mut g = LabeledGraph::with_vertices(al, 1);
        g.add_edge(0, 0, a);
        assert_eq!(g.rooted_canonical(), Err(Error::MissingBasepoint));
        assert!(g.unrooted_canonical().is_ok());
    }

    #[test]
    fn unrooted_form_separates_label_structure() {
        let al = ab();
        let a = al.get("a").unwrap();
        let b = al.get("b").unwrap();
        let mut loop_a = LabeledGraph::with_vertices(al.clone(), 1);
        loop_a.add_edge(0, 0, a);
        let mut loop_b = LabeledGraph::with_vertices(al.clone(), 1);
        loop_b.add_edge(0, 0, b);
        assert_ne!(
            loop_a.unrooted_canonical().unwrap(),
            loop_b.unrooted_canonical().unwrap()
        );
    }
}
