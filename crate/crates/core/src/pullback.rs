//! Fiber products of subgroup graphs: intersections and double cosets.
//!
//! The pullback of two based labeled graphs has a vertex for every pair of
//! vertices and an edge for every pair of equally labeled edges. Its
//! basepoint component computes the intersection of the two subgroups;
//! its other components enumerate the double cosets whose conjugated
//! intersections are nontrivial, which is the shape of the strengthened
//! Hanna Neumann bound.

use crate::error::Result;
use crate::graph::{LabeledGraph, Vertex};
use crate::subgroup::Subgroup;
use crate::word::Word;

/// The full fiber product of two subgroup graphs, with the pair of
/// basepoints as basepoint. Vertices cover *all* pairs, so the graph is
/// generally disconnected and not cored.
#[derive(Debug, Clone)]
pub struct Pullback {
    graph: LabeledGraph,
    pairs: Vec<(Vertex, Vertex)>,
}

impl Pullback {
    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    /// The pair of factor vertices behind each pullback vertex, indexed by
    /// pullback vertex id.
    pub fn pairs(&self) -> &[(Vertex, Vertex)] {
        &self.pairs
    }

    pub fn pair(&self, v: Vertex) -> (Vertex, Vertex) {
        self.pairs[v as usize]
    }
}

/// One double coset `H1 s H2` whose conjugated intersection
/// `H1 ∩ s H2 s^-1` has a cycle.
#[derive(Debug, Clone)]
pub struct CosetComponent {
    /// A representative `s`; the empty word for the identity coset.
    pub representative: Word,
    /// `H1 ∩ s H2 s^-1`.
    pub intersection: Subgroup,
    /// Reduced rank of that intersection (at least 1).
    pub reduced_rank: u64,
}

/// All double cosets with nontrivial conjugated intersection, and the sum
/// of their reduced ranks.
#[derive(Debug, Clone)]
pub struct DoubleCosetReport {
    /// Identity coset first when it survives, then in order of discovery.
    pub components: Vec<CosetComponent>,
    /// Sum of the component reduced ranks.
    pub total: u64,
}

/// Builds the fiber product of the two subgroup graphs.
pub fn pullback(h1: &Subgroup, h2: &Subgroup) -> Result<Pullback> {
    h1.alphabet().expect_same(h2.alphabet())?;
    let g1 = h1.graph();
    let g2 = h2.graph();
    let n2 = g2.vertex_count() as Vertex;
    let pairs: Vec<(Vertex, Vertex)> = (0..g1.vertex_count() as Vertex)
        .flat_map(|u| (0..n2).map(move |v| (u, v)))
        .collect();
    let mut g = LabeledGraph::with_vertices(g1.alphabet().clone(), pairs.len());

    // One dart per edge carries the positively oriented label; match those.
    let mut by_letter: Vec<Vec<u32>> = vec![Vec::new(); g2.alphabet().len()];
    for d in 0..g2.dart_count() as u32 {
        let s = g2.label(d);
        if s.is_positive() {
            by_letter[s.letter().index()].push(d);
        }
    }
    for d1 in 0..g1.dart_count() as u32 {
        let s = g1.label(d1);
        if !s.is_positive() {
            continue;
        }
        for &d2 in &by_letter[s.letter().index()] {
            g.add_dart_pair(
                g1.tail(d1) * n2 + g2.tail(d2),
                g1.head(d1) * n2 + g2.head(d2),
                s,
            );
        }
    }
    g.set_basepoint(Some(h1.basepoint() * n2 + h2.basepoint()));
    debug_assert!(g.is_folded());
    Ok(Pullback { graph: g, pairs })
}

/// The intersection `H1 ∩ H2`: the basepoint component of the pullback,
/// cored at the basepoint.
pub fn intersect(h1: &Subgroup, h2: &Subgroup) -> Result<Subgroup> {
    let pb = pullback(h1, h2)?;
    Subgroup::from_graph(pb.graph())
}

/// Decomposes the pullback into double cosets: one component per coset
/// `H1 s H2` with `rr(H1 ∩ s H2 s^-1) >= 1`, with representatives read off
/// breadth-first tree paths in the two factors.
pub fn double_cosets(h1: &Subgroup, h2: &Subgroup) -> Result<DoubleCosetReport> {
    let pb = pullback(h1, h2)?;
    let g = pb.graph();
    let base = g.basepoint().expect("pullbacks are based");
    let (comp, count) = g.component_partition();
    let base_comp = comp[base as usize];

    // Forest components have trivial loop groups everywhere; skip them
    // without materializing.
    let mut vertices = vec![0u64; count];
    let mut darts = vec![0u64; count];
    for v in g.vertices() {
        vertices[comp[v as usize] as usize] += 1;
        darts[comp[v as usize] as usize] += g.degree(v) as u64;
    }

    let tree1 = h1.graph().bfs_tree(h1.basepoint());
    let tree2 = h2.graph().bfs_tree(h2.basepoint());
    let mut tagged: Vec<(u32, CosetComponent)> = Vec::new();
    for c in 0..count as u32 {
        if darts[c as usize] / 2 < vertices[c as usize] {
            continue;
        }
        let keep: Vec<bool> = (0..g.vertex_count()).map(|v| comp[v] == c).collect();
        let (mut sub, old_of_new) = g.retain_vertices(&keep);
        let (representative, intersection) = if c == base_comp {
            (Word::empty(), Subgroup::from_graph(&sub)?)
        } else {
            // Root the component at its least pullback vertex inside the
            // cyclic core, so the choice is independent of traversal order.
            let (_, core_map) = sub.cyclic_core_mapped();
            let root = core_map[0];
            let (u, v) = pb.pair(old_of_new[root as usize]);
            let w1 = tree1.word_to(h1.graph(), u);
            let w2 = tree2.word_to(h2.graph(), v);
            let s = w1.concat(&w2.inverse());
            debug_assert!(!s.is_empty(), "non-identity coset has a nonempty representative");
            sub.set_basepoint(Some(root));
            (s, Subgroup::from_graph(&sub)?.conjugate(&w1))
        };
        let reduced_rank = intersection.reduced_rank();
        if reduced_rank == 0 {
            continue;
        }
        tagged.push((
            c,
            CosetComponent {
                representative,
                intersection,
                reduced_rank,
            },
        ));
    }
    tagged.sort_by_key(|&(c, _)| (c != base_comp, c));
    let components: Vec<CosetComponent> = tagged.into_iter().map(|(_, cc)| cc).collect();
    let total = components.iter().map(|cc| cc.reduced_rank).sum();
    Ok(DoubleCosetReport { components, total })
}
