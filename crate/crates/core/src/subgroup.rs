//! Finitely generated subgroups as based core graphs.
//!
//! A [`Subgroup`] wraps a folded, connected graph, cored at its basepoint:
//! the subgroup is the set of labels of reduced closed paths at the
//! basepoint. This representative is unique up to basepoint-preserving
//! labeled isomorphism, so equality of subgroups is equality of rooted
//! canonical forms.

use std::collections::HashMap;
use std::fmt;

use crate::alphabet::{Alphabet, SignedLetter};
use crate::canon::CanonicalForm;
use crate::error::{Error, Result};
use crate::graph::{Dart, LabeledGraph, Vertex};
use crate::word::Word;

/// Cap on quotient-group closure size in
/// [`kernel_of_finite_quotient`].
pub const DEFAULT_ELEMENT_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone)]
pub struct Subgroup {
    graph: LabeledGraph,
}

impl Subgroup {
    /// The trivial subgroup: a lone basepoint.
    pub fn trivial(alphabet: Alphabet) -> Subgroup {
        let mut g = LabeledGraph::with_vertices(alphabet, 1);
        g.set_basepoint(Some(0));
        Subgroup::from_core_graph(g)
    }

    /// The whole free group: a rose with one loop per letter.
    pub fn full(alphabet: Alphabet) -> Subgroup {
        let mut g = LabeledGraph::with_vertices(alphabet.clone(), 1);
        for letter in alphabet.letters() {
            g.add_edge(0, 0, letter);
        }
        g.set_basepoint(Some(0));
        Subgroup::from_core_graph(g)
    }

    /// The subgroup generated by `generators`: a wedge of word loops, folded
    /// and cored.
    pub fn from_generators(alphabet: Alphabet, generators: &[Word]) -> Subgroup {
        let mut g = LabeledGraph::with_vertices(alphabet, 1);
        g.set_basepoint(Some(0));
        for word in generators {
            attach_loop(&mut g, 0, word);
        }
        Subgroup::normalized(g).expect("wedge has a basepoint")
    }

    /// Interprets an arbitrary based graph as a subgroup: folds it, keeps
    /// the basepoint's component, and cores at the basepoint. Errors only
    /// when the graph has no basepoint.
    pub fn from_graph(graph: &LabeledGraph) -> Result<Subgroup> {
        Subgroup::normalized(graph.clone())
    }

    fn normalized(graph: LabeledGraph) -> Result<Subgroup> {
        if graph.basepoint().is_none() {
            return Err(Error::MissingBasepoint);
        }
        let folded = graph.fold();
        let base = folded.basepoint().expect("fold keeps the basepoint");
        let (comp, _) = folded.component_partition();
        let keep: Vec<bool> = (0..folded.vertex_count())
            .map(|v| comp[v] == comp[base as usize])
            .collect();
        let (based, _) = folded.retain_vertices(&keep);
        let base = based.basepoint().expect("basepoint kept its component");
        Ok(Subgroup::from_core_graph(based.core_at(base)))
    }

    /// Wraps a graph that is already folded, connected and cored at its
    /// basepoint (checked in debug builds).
    pub(crate) fn from_core_graph(graph: LabeledGraph) -> Subgroup {
        debug_assert!(graph.validate().is_ok());
        debug_assert!(graph.basepoint().is_some());
        debug_assert!(graph.is_folded());
        debug_assert!(graph.is_connected());
        Subgroup { graph }
    }

    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.graph.alphabet()
    }

    pub fn basepoint(&self) -> Vertex {
        self.graph.basepoint().expect("subgroup graphs are based")
    }

    /// Membership: does the reduced word trace a closed path at the
    /// basepoint?
    pub fn contains(&self, word: &Word) -> bool {
        self.graph.trace(self.basepoint(), word) == Some(self.basepoint())
    }

    /// Free rank of the subgroup; 0 means trivial.
    pub fn rank(&self) -> u64 {
        self.graph.rank().expect("subgroup graphs are connected")
    }

    /// Reduced rank `max(rank - 1, 0)`.
    pub fn reduced_rank(&self) -> u64 {
        self.graph.reduced_rank().expect("subgroup graphs are connected")
    }

    /// The subgroup generated by `self` and `other` together.
    pub fn join(&self, other: &Subgroup) -> Result<Subgroup> {
        self.alphabet().expect_same(other.alphabet())?;
        let mut g = self.graph.clone();
        let offset = g.vertex_count() as Vertex;
        for _ in 0..other.graph.vertex_count() {
            g.add_vertex();
        }
        for d in other.graph.positive_darts() {
            g.add_dart_pair(
                offset + other.graph.tail(d),
                offset + other.graph.head(d),
                other.graph.label(d),
            );
        }
        // Identify the two basepoints with an auxiliary merge: route the
        // fold through a doubled dart. Simpler: rebuild with the other
        // basepoint collapsed onto ours up front.
        let merged = merge_vertices(&g, self.basepoint(), offset + other.basepoint());
        Subgroup::normalized(merged)
    }

    /// The conjugate `w * self * w^-1`.
    pub fn conjugate(&self, w: &Word) -> Subgroup {
        let mut g = self.graph.clone();
        let old_base = self.basepoint();
        let new_base = g.add_vertex();
        let mut at = new_base;
        for (i, &s) in w.letters().iter().enumerate() {
            let next = if i + 1 == w.len() { old_base } else { g.add_vertex() };
            g.add_dart_pair(at, next, s);
            at = next;
        }
        if w.is_empty() {
            return self.clone();
        }
        g.set_basepoint(Some(new_base));
        Subgroup::normalized(g).expect("spur graph has a basepoint")
    }

    /// `Some(index)` when the subgroup has finite index in the whole free
    /// group, i.e. when the graph is a covering of the rose.
    pub fn finite_index(&self) -> Option<u64> {
        let full = 2 * self.alphabet().len();
        self.graph
            .vertices()
            .all(|v| self.graph.degree(v) == full)
            .then(|| self.graph.vertex_count() as u64)
    }

    /// A free basis, one word per non-tree edge of a breadth-first spanning
    /// tree, in dart order.
    pub fn basis(&self) -> Vec<Word> {
        let tree = self.graph.bfs_tree(self.basepoint());
        self.graph
            .positive_darts()
            .filter(|&d| !tree.uses(&self.graph, d))
            .map(|d| {
                let mut w = tree.word_to(&self.graph, self.graph.tail(d));
                w.push(self.graph.label(d));
                w.concat(&tree.word_to(&self.graph, self.graph.head(d)).inverse())
            })
            .collect()
    }

    /// Whether `self` is contained in `other`.
    pub fn le(&self, other: &Subgroup) -> Result<bool> {
        self.alphabet().expect_same(other.alphabet())?;
        Ok(self.basis().iter().all(|w| other.contains(w)))
    }

    /// `Some(index)` when `self` has finite index inside `sup` (which must
    /// contain it). Works by rewriting a basis of `self` over a basis of
    /// `sup` — the Schreier rewriting along `sup`'s spanning tree — and
    /// testing covering-completeness there.
    pub fn index_in(&self, sup: &Subgroup) -> Result<Option<u64>> {
        if !self.le(sup)? {
            return Err(Error::NotASubgroup);
        }
        let tree = sup.graph.bfs_tree(sup.basepoint());
        let free_darts: Vec<Dart> = sup
            .graph
            .positive_darts()
            .filter(|&d| !tree.uses(&sup.graph, d))
            .collect();
        let basis_alphabet =
            Alphabet::new(free_darts.iter().enumerate().map(|(i, _)| format!("g{i}")))?;
        let mut emit: HashMap<Dart, SignedLetter> = HashMap::new();
        for (i, &d) in free_darts.iter().enumerate() {
            let letter = basis_alphabet.letter(i).expect("letter per free dart");
            emit.insert(d, letter.positive());
            emit.insert(d ^ 1, letter.inverse());
        }
        let rewritten: Vec<Word> = self
            .basis()
            .iter()
            .map(|w| {
                let mut at = sup.basepoint();
                let mut out = Word::empty();
                for &s in w.letters() {
                    let d = sup
                        .graph
                        .dart_from(at, s)
                        .expect("basis words of a subgroup trace in the supergroup");
                    if let Some(&x) = emit.get(&d) {
                        out.push(x);
                    }
                    at = sup.graph.head(d);
                }
                debug_assert_eq!(at, sup.basepoint());
                out
            })
            .collect();
        Ok(Subgroup::from_generators(basis_alphabet, &rewritten).finite_index())
    }

    /// The same subgroup viewed inside a free group with more letters;
    /// `larger` must extend this subgroup's alphabet.
    pub fn extend_alphabet(&self, larger: &Alphabet) -> Result<Subgroup> {
        if !self.alphabet().prefix_of(larger) {
            return Err(Error::AlphabetMismatch(
                self.alphabet().to_string(),
                larger.to_string(),
            ));
        }
        let mut g = LabeledGraph::with_vertices(larger.clone(), self.graph.vertex_count());
        for d in self.graph.positive_darts() {
            g.add_dart_pair(self.graph.tail(d), self.graph.head(d), self.graph.label(d));
        }
        g.set_basepoint(self.graph.basepoint());
        Ok(Subgroup::from_core_graph(g))
    }

    /// Rooted canonical form of the underlying graph.
    pub fn canonical(&self) -> CanonicalForm {
        self.graph.rooted_canonical().expect("subgroup graphs are canonicalizable")
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Subgroup) -> bool {
        self.alphabet().same_as(other.alphabet()) && self.canonical() == other.canonical()
    }
}

impl Eq for Subgroup {}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "subgroup of rank {} ({} vertices, {} edges)",
            self.rank(),
            self.graph.vertex_count(),
            self.graph.edge_count()
        )
    }
}

/// Attaches a loop at `at` spelling `word` through fresh vertices.
fn attach_loop(g: &mut LabeledGraph, at: Vertex, word: &Word) {
    let mut from = at;
    for (i, &s) in word.letters().iter().enumerate() {
        let to = if i + 1 == word.len() { at } else { g.add_vertex() };
        g.add_dart_pair(from, to, s);
        from = to;
    }
}

/// A copy of `g` with vertex `b` collapsed onto vertex `a`.
fn merge_vertices(g: &LabeledGraph, a: Vertex, b: Vertex) -> LabeledGraph {
    let map = |v: Vertex| {
        if v == b {
            a
        } else if v > b {
            v - 1
        } else {
            v
        }
    };
    let mut out = LabeledGraph::with_vertices(g.alphabet().clone(), g.vertex_count() - 1);
    for d in g.positive_darts() {
        out.add_dart_pair(map(g.tail(d)), map(g.head(d)), g.label(d));
    }
    out.set_basepoint(g.basepoint().map(map));
    out
}

/// A permutation of `{0, ..., n-1}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i as usize >= n || seen[i as usize] {
                return Err(Error::InvalidParams(format!(
                    "{images:?} is not a permutation of 0..{n}"
                )));
            }
            seen[i as usize] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation((0..n as u32).collect())
    }

    /// The cycle `(0 1 2 ... n-1)`.
    pub fn cycle(n: usize) -> Permutation {
        Permutation((0..n as u32).map(|i| (i + 1) % n as u32).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: u32) -> u32 {
        self.0[i as usize]
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&i| next.0[i as usize]).collect())
    }
}

/// The kernel of the homomorphism sending each letter to the given
/// permutation: the Cayley-graph subgroup of the generated permutation
/// group, whose index is the group's order.
///
/// `images` must list one permutation per letter, all of one degree. The
/// closure enumeration fails cleanly once it would exceed
/// [`DEFAULT_ELEMENT_BUDGET`] elements.
pub fn kernel_of_finite_quotient(alphabet: &Alphabet, images: &[Permutation]) -> Result<Subgroup> {
    kernel_of_finite_quotient_with_budget(alphabet, images, DEFAULT_ELEMENT_BUDGET)
}

pub fn kernel_of_finite_quotient_with_budget(
    alphabet: &Alphabet,
    images: &[Permutation],
    budget: usize,
) -> Result<Subgroup> {
    if images.len() != alphabet.len() {
        return Err(Error::InvalidParams(format!(
            "{} images for {} letters",
            images.len(),
            alphabet.len()
        )));
    }
    let degree = images.first().map_or(1, Permutation::degree);
    if images.iter().any(|p| p.degree() != degree) {
        return Err(Error::InvalidParams("images have mixed degrees".into()));
    }

    let mut elements = vec![Permutation::identity(degree)];
    let mut index_of: HashMap<Permutation, u32> = HashMap::new();
    index_of.insert(elements[0].clone(), 0);
    let mut edges: Vec<(u32, u32, usize)> = Vec::new();
    let mut at = 0;
    while at < elements.len() {
        for (li, image) in images.iter().enumerate() {
            let next = elements[at].then(image);
            let to = match index_of.get(&next) {
                Some(&i) => i,
                None => {
                    if elements.len() >= budget {
                        return Err(Error::BudgetExceeded(budget));
                    }
                    let i = elements.len() as u32;
                    index_of.insert(next.clone(), i);
                    elements.push(next);
                    i
                }
            };
            edges.push((at as u32, to, li));
        }
        at += 1;
    }

    let mut g = LabeledGraph::with_vertices(alphabet.clone(), elements.len());
    for (from, to, li) in edges {
        let letter = alphabet.letter(li).expect("image per letter");
        g.add_edge(from, to, letter);
    }
    g.set_basepoint(Some(0));
    debug_assert!(g.is_folded());
    Ok(Subgroup::from_core_graph(g))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::from_chars("ab").unwrap()
    }

    fn gens(alphabet: &Alphabet, words: &[&str]) -> Subgroup {
        let parsed: Vec<Word> = words
            .iter()
            .map(|w| Word::parse(alphabet, w).unwrap())
            .collect();
        Subgroup::from_generators(alphabet.clone(), &parsed)
    }

    #[test]
    fn trivial_and_full() {
        let al = ab();
        let trivial = Subgroup::trivial(al.clone());
        assert_eq!(trivial.rank(), 0);
        assert_eq!(trivial.reduced_rank(), 0);
        assert!(trivial.contains(&Word::empty()));
        assert!(!trivial.contains(&Word::parse(&al, "a").unwrap()));

        let full = Subgroup::full(al.clone());
        assert_eq!(full.rank(), 2);
        assert_eq!(full.reduced_rank(), 1);
        assert_eq!(full.finite_index(), Some(1));
        assert!(full.contains(&Word::parse(&al, "abAB").unwrap()));
    }

    #[test]
    fn generators_are_members() {
        let al = Alphabet::from_chars("abcde").unwrap();
        let h = gens(&al, &["b", "daD", "ecE"]);
        assert_eq!(h.rank(), 3);
        assert_eq!(h.reduced_rank(), 2);
        assert_eq!(h.graph().vertex_count(), 3);
        assert_eq!(h.graph().edge_count(), 5);
        for w in ["b", "daD", "ecE", "bdaDecEB"] {
            assert!(h.contains(&Word::parse(&al, w).unwrap()), "{w}");
        }
        for w in ["a", "d", "da", "adA"] {
            assert!(!h.contains(&Word::parse(&al, w).unwrap()), "{w}");
        }
    }

    #[test]
    fn membership_is_conjugation_sensitive() {
        let al = ab();
        let h = gens(&al, &["aba"]);
        assert!(h.contains(&Word::parse(&al, "aba").unwrap()));
        assert!(!h.contains(&Word::parse(&al, "bab").unwrap()));
        assert!(h.contains(&Word::parse(&al, "abaaba").unwrap()));
    }

    #[test]
    fn join_of_two_letters_is_everything() {
        let al = ab();
        let a = gens(&al, &["a"]);
        let b = gens(&al, &["b"]);
        let join = a.join(&b).unwrap();
        assert_eq!(join, Subgroup::full(al.clone()));
        assert_eq!(join.reduced_rank(), 1);
    }

    #[test]
    fn join_with_trivial_changes_nothing() {
        let al = ab();
        let h = gens(&al, &["ab", "ba"]);
        let j = h.join(&Subgroup::trivial(al)).unwrap();
        assert_eq!(j, h);
    }

    #[test]
    fn join_rejects_mismatched_alphabets() {
        let h1 = gens(&ab(), &["a"]);
        let h2 = gens(&Alphabet::from_chars("xy").unwrap(), &["x"]);
        assert!(matches!(h1.join(&h2), Err(Error::AlphabetMismatch(_, _))));
    }

    #[test]
    fn conjugates_relocate_membership() {
        let al = ab();
        let h = gens(&al, &["a"]);
        let c = h.conjugate(&Word::parse(&al, "b").unwrap());
        assert!(c.contains(&Word::parse(&al, "baB").unwrap()));
        assert!(!c.contains(&Word::parse(&al, "a").unwrap()));
        assert_eq!(c.reduced_rank(), h.reduced_rank());
        let back = c.conjugate(&Word::parse(&al, "B").unwrap());
        assert_eq!(back, h);
    }

    #[test]
    fn conjugating_the_trivial_subgroup_stays_trivial() {
        let al = ab();
        let t = Subgroup::trivial(al.clone()).conjugate(&Word::parse(&al, "abA").unwrap());
        assert_eq!(t, Subgroup::trivial(al));
    }

    #[test]
    fn finite_index_detects_coverings() {
        let al = ab();
        assert_eq!(Subgroup::full(al.clone()).finite_index(), Some(1));
        assert_eq!(gens(&al, &["a"]).finite_index(), None);
        // Index-2 kernel of the total-exponent parity map.
        let parity = kernel_of_finite_quotient(
            &al,
            &[Permutation::cycle(2), Permutation::cycle(2)],
        )
        .unwrap();
        assert_eq!(parity.finite_index(), Some(2));
        assert_eq!(parity.reduced_rank(), 2);
        assert_eq!(parity.rank(), 3);
    }

    #[test]
    fn kernel_of_identity_quotient_is_everything() {
        let al = ab();
        let k = kernel_of_finite_quotient(
            &al,
            &[Permutation::identity(1), Permutation::identity(1)],
        )
        .unwrap();
        assert_eq!(k, Subgroup::full(al));
    }

    #[test]
    fn kernel_respects_the_element_budget() {
        let al = ab();
        let images = [Permutation::cycle(5), Permutation::cycle(5)];
        assert_eq!(
            kernel_of_finite_quotient_with_budget(&al, &images, 3),
            Err(Error::BudgetExceeded(3))
        );
        assert!(kernel_of_finite_quotient_with_budget(&al, &images, 5).is_ok());
    }

    /// Kernels of the cyclic total-exponent quotients witness the index
    /// formula: reduced rank = index * (letters - 1).
    #[test]
    fn kernel_ranks_follow_the_index_law() {
        let al = ab();
        for k in 2..=6 {
            let h = kernel_of_finite_quotient(
                &al,
                &[Permutation::cycle(k), Permutation::cycle(k)],
            )
            .unwrap();
            assert_eq!(h.finite_index(), Some(k as u64), "index {k}");
            assert_eq!(h.reduced_rank(), k as u64, "reduced rank {k}");
            assert_eq!(h.rank(), k as u64 + 1, "rank {k}");
        }
    }

    #[test]
    fn basis_regenerates_the_subgroup() {
        let al = Alphabet::from_chars("abcde").unwrap();
        let h = gens(&al, &["b", "daD", "ecE"]);
        let basis = h.basis();
        assert_eq!(basis.len() as u64, h.rank());
        let again = Subgroup::from_generators(al, &basis);
        assert_eq!(again, h);
    }

    #[test]
    fn basis_of_the_rose_is_the_letter_set() {
        let al = ab();
        let basis = Subgroup::full(al.clone()).basis();
        let rendered: Vec<String> = basis.iter().map(|w| w.render(&al).unwrap()).collect();
        assert_eq!(rendered, vec!["a", "b"]);
    }

    #[test]
    fn containment_of_subgroups() {
        let al = ab();
        let squares = gens(&al, &["aa"]);
        let a = gens(&al, &["a"]);
        assert!(squares.le(&a).unwrap());
        assert!(!a.le(&squares).unwrap());
        assert!(a.le(&Subgroup::full(al.clone())).unwrap());
        assert!(Subgroup::trivial(al).le(&squares).unwrap());
    }

    #[test]
    fn index_inside_a_supergroup() {
        let al = ab();
        let a = gens(&al, &["a"]);
        let cubes = gens(&al, &["aaa"]);
        assert_eq!(cubes.index_in(&a).unwrap(), Some(3));
        assert_eq!(a.index_in(&a).unwrap(), Some(1));
        assert_eq!(a.index_in(&Subgroup::full(al.clone())).unwrap(), None);
        assert_eq!(a.index_in(&cubes), Err(Error::NotASubgroup));

        // Relative index agrees with absolute index over the full group.
        let k4 = kernel_of_finite_quotient(
            &al,
            &[Permutation::cycle(4), Permutation::cycle(4)],
        )
        .unwrap();
        let k2 = kernel_of_finite_quotient(
            &al,
            &[Permutation::cycle(2), Permutation::cycle(2)],
        )
        .unwrap();
        assert_eq!(k4.index_in(&Subgroup::full(al)).unwrap(), Some(4));
        assert_eq!(k4.index_in(&k2).unwrap(), Some(2));
        // Reduced rank is multiplicative over the relative index.
        assert_eq!(k4.reduced_rank(), 2 * k2.reduced_rank());
    }

    #[test]
    fn alphabet_extension_preserves_structure() {
        let al = ab();
        let abc = Alphabet::from_chars("abc").unwrap();
        let h = gens(&al, &["ab"]);
        let lifted = h.extend_alphabet(&abc).unwrap();
        assert_eq!(lifted.rank(), 1);
        assert!(lifted.contains(&Word::parse(&abc, "ab").unwrap()));
        assert!(!lifted.contains(&Word::parse(&abc, "c").unwrap()));
        assert!(h.extend_alphabet(&Alphabet::from_chars("ba").unwrap()).is_err());
    }
}
