//! Folding and coring.
//!
//! Folding repeatedly identifies the heads of two equally labeled darts
//! leaving one vertex (deleting one of the duplicate edges) until no vertex
//! carries a duplicate label. The result is independent of the order in
//! which duplicates are processed, up to renaming of darts; vertices are
//! renumbered by least merged original vertex, so the deterministic
//! [`LabeledGraph::fold`] is a pure function of the graph value.
//!
//! Coring peels vertices of degree <= 1 (iteratively, optionally protecting
//! one vertex) and keeps what remains.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Dart, LabeledGraph, Vertex};

impl LabeledGraph {
    /// The folded quotient, processing vertices in a fixed order.
    pub fn fold(&self) -> LabeledGraph {
        self.fold_impl(None)
    }

    /// The folded quotient, processing vertices and duplicate darts in a
    /// seed-derived order. Folding is confluent, so for every seed the result
    /// has the same rooted canonical form as `fold()`; this entry point
    /// exists to let tests exercise that confluence.
    pub fn fold_seeded(&self, seed: u64) -> LabeledGraph {
        self.fold_impl(Some(ChaCha8Rng::seed_from_u64(seed)))
    }

    fn fold_impl(&self, mut rng: Option<ChaCha8Rng>) -> LabeledGraph {
        let n = self.out.len();
        let mut parent: Vec<u32> = (0..n as u32).collect();
        let mut lists: Vec<Vec<Dart>> = self.out.clone();
        let mut dead = vec![false; self.head.len()];

        fn find(parent: &mut [u32], v: u32) -> u32 {
            let mut root = v;
            while parent[root as usize] != root {
                root = parent[root as usize];
            }
            let mut at = v;
            while parent[at as usize] != root {
                let next = parent[at as usize];
                parent[at as usize] = root;
                at = next;
            }
            root
        }

        let mut worklist: Vec<u32> = (0..n as u32).collect();
        if let Some(rng) = rng.as_mut() {
            worklist.shuffle(rng);
        }
        // Scratch map from signed-letter index to the first dart seen with
        // that label at the vertex under inspection.
        let mut first = vec![u32::MAX; 2 * self.alphabet.len()];
        let mut touched: Vec<usize> = Vec::new();

        while let Some(v) = pop(&mut worklist, rng.as_mut()) {
            let mut v = find(&mut parent, v);
            'rescan: loop {
                if let Some(rng) = rng.as_mut() {
                    lists[v as usize].shuffle(rng);
                }
                for slot in 0..lists[v as usize].len() {
                    let d = lists[v as usize][slot];
                    if dead[d as usize] {
                        continue;
                    }
                    let li = self.label[d as usize].index();
                    if first[li] == u32::MAX {
                        first[li] = d;
                        touched.push(li);
                        continue;
                    }
                    // Duplicate label: keep `first[li]`, retire `d`, and
                    // merge the two heads.
                    let keep = first[li];
                    dead[d as usize] = true;
                    dead[(d ^ 1) as usize] = true;
                    let h1 = find(&mut parent, self.head[keep as usize]);
                    let h2 = find(&mut parent, self.head[d as usize]);
                    if h1 != h2 {
                        let (big, small) = if lists[h1 as usize].len() >= lists[h2 as usize].len()
                        {
                            (h1, h2)
                        } else {
                            (h2, h1)
                        };
                        let moved = std::mem::take(&mut lists[small as usize]);
                        lists[big as usize].extend(moved);
                        parent[small as usize] = big;
                        worklist.push(big);
                        if v == small {
                            v = big;
                        }
                    }
                    for &li in &touched {
                        first[li] = u32::MAX;
                    }
                    touched.clear();
                    continue 'rescan;
                }
                for &li in &touched {
                    first[li] = u32::MAX;
                }
                touched.clear();
                break;
            }
        }

        // Renumber classes by least original member; this makes the vertex
        // set of the result independent of the processing order.
        let mut new_of_class = vec![u32::MAX; n];
        let mut class_count = 0u32;
        for v in 0..n as u32 {
            let c = find(&mut parent, v);
            if new_of_class[c as usize] == u32::MAX {
                new_of_class[c as usize] = class_count;
                class_count += 1;
            }
        }
        let mut g = LabeledGraph::with_vertices(self.alphabet.clone(), class_count as usize);
        for d in self.positive_darts() {
            if dead[d as usize] {
                continue;
            }
            let t = new_of_class[find(&mut parent, self.tail(d)) as usize];
            let h = new_of_class[find(&mut parent, self.head(d)) as usize];
            g.add_dart_pair(t, h, self.label(d));
        }
        g.set_basepoint(
            self.basepoint
                .map(|b| new_of_class[find(&mut parent, b) as usize]),
        );
        debug_assert!(g.validate().is_ok());
        debug_assert!(g.is_folded());
        g
    }

    /// Iteratively deletes vertices of degree <= 1 except `base`; the result
    /// is the core rooted at `base` (possibly `base` alone).
    pub fn core_at(&self, base: Vertex) -> LabeledGraph {
        self.core_at_mapped(base).0
    }

    /// Like [`core_at`](Self::core_at), also returning the old id of every
    /// surviving vertex.
    pub(crate) fn core_at_mapped(&self, base: Vertex) -> (LabeledGraph, Vec<Vertex>) {
        let keep = self.peel(Some(base));
        let (mut g, old_of_new) = self.retain_vertices(&keep);
        let new_base = old_of_new.binary_search(&base).expect("base survives coring");
        g.set_basepoint(Some(new_base as Vertex));
        (g, old_of_new)
    }

    /// The maximal subgraph in which every vertex has degree >= 2 (possibly
    /// empty); no vertex is protected.
    pub fn cyclic_core(&self) -> LabeledGraph {
        self.cyclic_core_mapped().0
    }

    pub(crate) fn cyclic_core_mapped(&self) -> (LabeledGraph, Vec<Vertex>) {
        let keep = self.peel(None);
        self.retain_vertices(&keep)
    }

    /// Keep-mask after iterated deletion of degree <= 1 vertices, sparing
    /// `protect`.
    fn peel(&self, protect: Option<Vertex>) -> Vec<bool> {
        let n = self.out.len();
        let mut degree: Vec<usize> = (0..n).map(|v| self.out[v].len()).collect();
        let mut removed = vec![false; n];
        let mut edge_dead = vec![false; self.head.len() / 2];
        let mut queue: Vec<Vertex> = (0..n as Vertex)
            .filter(|&v| degree[v as usize] <= 1 && Some(v) != protect)
            .collect();
        while let Some(v) = queue.pop() {
            if removed[v as usize] {
                continue;
            }
            removed[v as usize] = true;
            for &d in &self.out[v as usize] {
                if edge_dead[(d >> 1) as usize] {
                    continue;
                }
                edge_dead[(d >> 1) as usize] = true;
                let w = self.head(d);
                if !removed[w as usize] {
                    degree[w as usize] -= 1;
                    if degree[w as usize] <= 1 && Some(w) != protect {
                        queue.push(w);
                    }
                }
            }
        }
        removed.iter().map(|&r| !r).collect()
    }
}

fn pop(worklist: &mut Vec<u32>, rng: Option<&mut ChaCha8Rng>) -> Option<u32> {
    match rng {
        None => worklist.pop(),
        Some(rng) => {
            if worklist.is_empty() {
                None
            } else {
                let i = rng.gen_range(0..worklist.len());
                Some(worklist.swap_remove(i))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::word::Word;

    fn wedge(alphabet: &Alphabet, words: &[&str]) -> LabeledGraph {
        let mut g = LabeledGraph::with_vertices(alphabet.clone(), 1);
        g.set_basepoint(Some(0));
        for text in words {
            let w = Word::parse(alphabet, text).unwrap();
            let mut at = 0;
            for (i, &s) in w.letters().iter().enumerate() {
                let next = if i + 1 == w.len() { 0 } else { g.add_vertex() };
                g.add_dart_pair(at, next, s);
                at = next;
            }
        }
        g
    }

    #[test]
    fn folding_two_equal_loops_leaves_one() {
        let al = Alphabet::from_chars("a").unwrap();
        let g = wedge(&al, &["a", "a"]).fold();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 1);
        assert!(g.is_folded());
    }

    #[test]
    fn folding_is_idempotent_on_folded_graphs() {
        let al = Alphabet::from_chars("ab").unwrap();
        let g = wedge(&al, &["ab", "ba"]).fold();
        let again = g.fold();
        assert_eq!(g.rooted_canonical().unwrap(), again.rooted_canonical().unwrap());
        assert_eq!(g.vertex_count(), again.vertex_count());
    }

    /// Hand-folding the wedge of {b, daD, ecE}: the two d-darts leaving the
    /// base merge the a-loop's endpoints (likewise on the e side), giving a
    /// base vertex with a b-loop, one d-edge to an a-loop vertex and one
    /// e-edge to a c-loop vertex: 3 vertices, 5 edges, chi = -2.
    #[test]
    fn folding_the_three_loop_wedge() {
        let al = Alphabet::from_chars("abcde").unwrap();
        let g = wedge(&al, &["b", "daD", "ecE"]).fold();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.euler_characteristic(), -2);
        assert_eq!(g.degree(g.basepoint().unwrap()), 4);
        assert!(g.is_folded());
    }

    #[test]
    fn chi_never_decreases_under_folding() {
        let al = Alphabet::from_chars("ab").unwrap();
        for words in [&["abab", "aBAb"][..], &["aa", "ab", "ba"][..], &["abA", "abA"][..]] {
            let raw = wedge(&al, words);
            assert!(raw.fold().euler_characteristic() >= raw.euler_characteristic());
        }
    }

    #[test]
    fn seeded_folds_agree_with_the_deterministic_fold() {
        let al = Alphabet::from_chars("ab").unwrap();
        let raw = wedge(&al, &["abAB", "aabb", "abba"]);
        let reference = raw.fold().rooted_canonical().unwrap();
        for seed in 0..20 {
            let folded = raw.fold_seeded(seed);
            assert!(folded.is_folded());
            assert_eq!(folded.rooted_canonical().unwrap(), reference, "seed {seed}");
        }
    }

    #[test]
    fn core_keeps_protected_base_even_at_degree_one() {
        // <abA>: folding glues the two a-darts at the base into a single
        // a-edge to a vertex carrying the b-loop; the base has degree 1 but
        // is protected.
        let al = Alphabet::from_chars("ab").unwrap();
        let folded = wedge(&al, &["abA"]).fold();
        let cored = folded.core_at(folded.basepoint().unwrap());
        assert_eq!(cored.vertex_count(), 2);
        assert_eq!(cored.edge_count(), 2);
        assert_eq!(cored.basepoint(), Some(0));
        assert_eq!(cored.degree(0), 1);
    }

    #[test]
    fn cyclic_core_erases_trees_entirely() {
        let al = Alphabet::from_chars("ab").unwrap();
        let mut g = LabeledGraph::with_vertices(al.clone(), 4);
        let a = al.get("a").unwrap();
        g.add_edge(0, 1, a);
        g.add_edge(1, 2, a);
        g.add_edge(2, 3, a);
        assert_eq!(g.cyclic_core().vertex_count(), 0);

        // A cycle with a pendant path keeps exactly the cycle.
        let mut h = LabeledGraph::with_vertices(al.clone(), 4);
        let b = al.get("b").unwrap();
        h.add_edge(0, 1, a);
        h.add_edge(1, 0, a);
        h.add_edge(1, 2, b);
        h.add_edge(2, 3, b);
        let core = h.cyclic_core();
        assert_eq!(core.vertex_count(), 2);
        assert_eq!(core.edge_count(), 2);
    }

    #[test]
    fn coring_removes_isolated_vertices() {
        let al = Alphabet::from_chars("a").unwrap();
        let mut g = LabeledGraph::with_vertices(al.clone(), 3);
        let a = al.get("a").unwrap();
        g.add_edge(0, 0, a);
        let cored = g.core_at(0);
        assert_eq!(cored.vertex_count(), 1);
        assert_eq!(cored.edge_count(), 1);
    }
}
