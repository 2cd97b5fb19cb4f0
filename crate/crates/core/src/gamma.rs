//! Cycle-family graphs and the join/intersection counterexample.
//!
//! `gamma(k, l, m, n)` is the based graph with an `a`-cycle of length
//! `k*l`, a `b`-cycle of length `k*m` (carrying the basepoint) and a
//! `c`-cycle of length `k*n`, wired together by `l` edges labeled `d`
//! (from the `b`-cycle into the `a`-cycle) and `n` edges labeled `e`
//! (from the `b`-cycle into the `c`-cycle). All attachment points sit at
//! positions divisible by `k`, so every closed path has all of its `a`,
//! `b` and `c` exponent sums divisible by `k`.
//!
//! Two such graphs with coprime scales intersect in another cycle-family
//! graph whose scale is the product, while their join collapses to the
//! fixed rank-3 graph [`gamma_base`]. Scales 7 and 11 make the product of
//! the intersection and join reduced ranks exceed the product of the
//! subgroup reduced ranks, refuting the Imrich-Mueller product
//! inequality; [`verify_theorem`] replays the whole argument and checks
//! every number.

use std::collections::HashMap;
use std::fmt;

use crate::alphabet::{Alphabet, Letter, SignedLetter};
use crate::error::{Error, Result};
use crate::graph::{LabeledGraph, Vertex};
use crate::pullback::{double_cosets, intersect, pullback};
use crate::subgroup::Subgroup;

/// Largest graph `build_gamma` will lay out.
const MAX_GAMMA_VERTICES: u64 = u32::MAX as u64;

/// Parameters of a cycle-family graph: the scale `k`, the three cycle
/// lengths in units of `k`, and the attachment phases of the `d`- and
/// `e`-edges along the `b`-cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaParams {
    k: u64,
    l: u64,
    m: u64,
    n: u64,
    d_attach: Vec<u64>,
    e_attach: Vec<u64>,
}

impl GammaParams {
    /// General constructor. The `i`-th `d`-edge runs from the
    /// `d_attach[i] * k`-th vertex of the `b`-cycle to the `i * k`-th
    /// vertex of the `a`-cycle, and the `e`-edges run analogously into
    /// the `c`-cycle, so `d_attach` needs `l` distinct phases below `m`
    /// and `e_attach` needs `n` of them.
    pub fn new(
        k: u64,
        l: u64,
        m: u64,
        n: u64,
        d_attach: Vec<u64>,
        e_attach: Vec<u64>,
    ) -> Result<GammaParams> {
        if k == 0 || l == 0 || m == 0 || n == 0 {
            return Err(Error::InvalidParams(
                "all of k, l, m, n must be positive".into(),
            ));
        }
        let vertices = l
            .checked_add(m)
            .and_then(|s| s.checked_add(n))
            .and_then(|s| s.checked_mul(k));
        match vertices {
            Some(v) if v <= MAX_GAMMA_VERTICES => {}
            _ => {
                return Err(Error::InvalidParams(format!(
                    "k * (l + m + n) must stay below {MAX_GAMMA_VERTICES}"
                )))
            }
        }
        for (name, list, want) in [("d", &d_attach, l), ("e", &e_attach, n)] {
            if list.len() as u64 != want {
                return Err(Error::InvalidParams(format!(
                    "need {want} {name}-attachments, got {}",
                    list.len()
                )));
            }
            if list.iter().any(|&p| p >= m) {
                return Err(Error::InvalidParams(format!(
                    "{name}-attachment phases must lie below m = {m}"
                )));
            }
            let mut sorted = list.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidParams(format!(
                    "{name}-attachment phases must be distinct"
                )));
            }
        }
        Ok(GammaParams {
            k,
            l,
            m,
            n,
            d_attach,
            e_attach,
        })
    }

    /// The trivalent wiring: `d` at phases `0..l`, `e` at phases
    /// `l..l+n`, which keeps every vertex at degree 3 or less and needs
    /// `l + n <= m`.
    pub fn degree3(k: u64, l: u64, m: u64, n: u64) -> Result<GammaParams> {
        if !matches!(l.checked_add(n), Some(s) if s <= m) {
            return Err(Error::InvalidParams(
                "trivalent wiring needs l + n <= m".into(),
            ));
        }
        GammaParams::new(k, l, m, n, (0..l).collect(), (l..l + n).collect())
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn d_attach(&self) -> &[u64] {
        &self.d_attach
    }

    pub fn e_attach(&self) -> &[u64] {
        &self.e_attach
    }

    /// Whether no vertex carries two attachments, i.e. maximum degree 3.
    pub fn is_degree3(&self) -> bool {
        self.d_attach
            .iter()
            .all(|p| !self.e_attach.contains(p))
    }
}

impl fmt::Display for GammaParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "gamma({}, {}, {}, {}; d = {:?}, e = {:?})",
            self.k, self.l, self.m, self.n, self.d_attach, self.e_attach
        )
    }
}

/// The five-letter alphabet `a..e` every cycle-family graph lives over.
pub fn gamma_alphabet() -> Alphabet {
    Alphabet::from_chars("abcde").expect("fixed alphabet is valid")
}

/// Lays out the cycle-family graph for `params`. The result is folded and
/// cored by construction; the basepoint is the `b`-cycle origin.
pub fn build_gamma(params: &GammaParams) -> Subgroup {
    let al = gamma_alphabet();
    let [la, lb, lc, ld, le] =
        ["a", "b", "c", "d", "e"].map(|name| al.get(name).expect("cycle alphabet letter"));
    let k = params.k;
    let (len_b, len_a, len_c) = (
        (params.m * k) as Vertex,
        (params.l * k) as Vertex,
        (params.n * k) as Vertex,
    );
    let (a0, c0) = (len_b, len_b + len_a);
    let mut g = LabeledGraph::with_vertices(al, (len_b + len_a + len_c) as usize);
    for i in 0..len_b {
        g.add_edge(i, (i + 1) % len_b, lb);
    }
    for i in 0..len_a {
        g.add_edge(a0 + i, a0 + (i + 1) % len_a, la);
    }
    for i in 0..len_c {
        g.add_edge(c0 + i, c0 + (i + 1) % len_c, lc);
    }
    for (i, &p) in params.d_attach.iter().enumerate() {
        g.add_edge((p * k) as Vertex, a0 + i as Vertex * k as Vertex, ld);
    }
    for (j, &p) in params.e_attach.iter().enumerate() {
        g.add_edge((p * k) as Vertex, c0 + j as Vertex * k as Vertex, le);
    }
    g.set_basepoint(Some(0));
    Subgroup::from_core_graph(g)
}

/// The scale-1 graph: one `b`-loop at the basepoint, a `d`-edge to an
/// `a`-loop and an `e`-edge to a `c`-loop. This is the join of every
/// coprime pair of cycle-family graphs, freely generated by `b`, `dad^-1`
/// and `ece^-1`.
pub fn gamma_base() -> Subgroup {
    let params = GammaParams::new(1, 1, 1, 1, vec![0], vec![0]).expect("base parameters");
    build_gamma(&params)
}

/// The counterexample pair: trivalent graphs at coprime scales 7 and 11.
pub fn theorem_pair() -> (Subgroup, Subgroup) {
    let p1 = GammaParams::degree3(7, 1, 3, 2).expect("first parameters");
    let p2 = GammaParams::degree3(11, 2, 5, 3).expect("second parameters");
    (build_gamma(&p1), build_gamma(&p2))
}

/// Follows the unique outgoing `letter`-edge from `start` until the walk
/// closes. Succeeds only when those edges form one cycle through `start`
/// covering every `letter`-edge of the graph.
fn cycle_from(g: &LabeledGraph, start: Vertex, letter: Letter) -> Option<Vec<Vertex>> {
    let total = (0..g.dart_count() as u32)
        .filter(|&d| g.label(d) == letter.positive())
        .count();
    if total == 0 {
        return None;
    }
    let mut seq = vec![start];
    let mut cur = start;
    loop {
        let d = g.dart_from(cur, letter.positive())?;
        cur = g.head(d);
        if cur == start {
            break;
        }
        if seq.len() >= total {
            return None;
        }
        seq.push(cur);
    }
    (seq.len() == total).then_some(seq)
}

/// Rotates the attachment list so the target cycle's origin makes it
/// lexicographically least; `edges` holds `(tail phase, head phase)`
/// pairs in absolute coordinates.
fn normalize_attach(edges: &[(u64, u64)], cycle_len: u64, k: u64) -> Vec<u64> {
    let mut best: Option<Vec<u64>> = None;
    for &(_, origin) in edges {
        let mut out = vec![0u64; edges.len()];
        for &(t, h) in edges {
            let idx = ((h + cycle_len - origin) % cycle_len) / k;
            out[idx as usize] = t / k;
        }
        if best.as_ref().map_or(true, |b| out < *b) {
            best = Some(out);
        }
    }
    best.expect("at least one attachment edge")
}

/// Recognizes a subgroup graph as a cycle-family graph and extracts its
/// parameters, with attachment lists rotated to their least form. Returns
/// `None` for anything that is not exactly such a graph based at its
/// `b`-cycle origin.
pub fn recognize_gamma(h: &Subgroup) -> Option<GammaParams> {
    let g = h.graph();
    let al = gamma_alphabet();
    if !g.alphabet().same_as(&al) {
        return None;
    }
    let letter = |name: &str| al.get(name).expect("cycle alphabet letter");

    let b_cycle = cycle_from(g, h.basepoint(), letter("b"))?;
    let first_tail = |x: Letter| -> Option<Vertex> {
        (0..g.dart_count() as u32)
            .find(|&d| g.label(d) == x.positive())
            .map(|d| g.tail(d))
    };
    let a_cycle = cycle_from(g, first_tail(letter("a"))?, letter("a"))?;
    let c_cycle = cycle_from(g, first_tail(letter("c"))?, letter("c"))?;
    if b_cycle.len() + a_cycle.len() + c_cycle.len() != g.vertex_count() {
        return None;
    }
    // Phase of each vertex on its (unique) cycle: 0 = b, 1 = a, 2 = c.
    let mut phase: Vec<Option<(u8, u64)>> = vec![None; g.vertex_count()];
    for (which, cycle) in [(0u8, &b_cycle), (1, &a_cycle), (2, &c_cycle)] {
        for (i, &v) in cycle.iter().enumerate() {
            if phase[v as usize].is_some() {
                return None;
            }
            phase[v as usize] = Some((which, i as u64));
        }
    }

    // Attachment edges, as (tail phase on b, head phase on target cycle).
    let attach = |x: Letter, target: u8| -> Option<Vec<(u64, u64)>> {
        let mut out = Vec::new();
        for d in 0..g.dart_count() as u32 {
            if g.label(d) != x.positive() {
                continue;
            }
            match (phase[g.tail(d) as usize], phase[g.head(d) as usize]) {
                (Some((0, t)), Some((w, h))) if w == target => out.push((t, h)),
                _ => return None,
            }
        }
        (!out.is_empty()).then_some(out)
    };
    let d_edges = attach(letter("d"), 1)?;
    let e_edges = attach(letter("e"), 2)?;

    let (len_a, len_b, len_c) = (
        a_cycle.len() as u64,
        b_cycle.len() as u64,
        c_cycle.len() as u64,
    );
    let (l, n) = (d_edges.len() as u64, e_edges.len() as u64);
    if len_a % l != 0 {
        return None;
    }
    let k = len_a / l;
    if len_b % k != 0 || len_c != k * n {
        return None;
    }
    let m = len_b / k;

    // Tails sit at multiples of k; heads are equally spaced at k.
    for (edges, len) in [(&d_edges, len_a), (&e_edges, len_c)] {
        if edges.iter().any(|&(t, _)| t % k != 0) {
            return None;
        }
        let r = edges[0].1 % k;
        if edges.iter().any(|&(_, h)| h % k != r) {
            return None;
        }
        let mut heads: Vec<u64> = edges.iter().map(|&(_, h)| h).collect();
        heads.sort_unstable();
        heads.dedup();
        if heads.len() != edges.len() || heads.last() >= Some(&len) {
            return None;
        }
    }

    let d_attach = normalize_attach(&d_edges, len_a, k);
    let e_attach = normalize_attach(&e_edges, len_c, k);
    GammaParams::new(k, l, m, n, d_attach, e_attach).ok()
}

/// Which factor of a pullback a witness talks about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    First,
    Second,
}

/// A degree-3 vertex of one factor together with a degree-3 preimage in
/// the cored pullback, given by its pair of factor vertices.
#[derive(Debug, Clone)]
pub struct Witness {
    pub side: Side,
    pub vertex: Vertex,
    pub preimage: (Vertex, Vertex),
}

/// The degree-transfer certificate: every degree-3 vertex of either
/// factor must admit a degree-3 preimage in the cored pullback.
#[derive(Debug, Clone)]
pub struct CertificateC1 {
    pub witnesses: Vec<Witness>,
    /// Degree-3 factor vertices with no degree-3 preimage.
    pub missing: Vec<(Side, Vertex)>,
    pub holds: bool,
}

pub fn certificate_c1(h1: &Subgroup, h2: &Subgroup) -> Result<CertificateC1> {
    let pb = pullback(h1, h2)?;
    let g = pb.graph();
    let base = g.basepoint().expect("pullbacks are based");
    let (comp, _) = g.component_partition();
    let keep: Vec<bool> = (0..g.vertex_count())
        .map(|v| comp[v] == comp[base as usize])
        .collect();
    let (based, old_of_new) = g.retain_vertices(&keep);
    let based_root = based.basepoint().expect("basepoint kept its component");
    let (core, core_map) = based.core_at_mapped(based_root);

    let mut found: HashMap<(u8, Vertex), (Vertex, Vertex)> = HashMap::new();
    for w in core.vertices() {
        if core.degree(w) != 3 {
            continue;
        }
        let (u, v) = pb.pair(old_of_new[core_map[w as usize] as usize]);
        found.entry((0, u)).or_insert((u, v));
        found.entry((1, v)).or_insert((u, v));
    }

    let mut witnesses = Vec::new();
    let mut missing = Vec::new();
    for (tag, side, h) in [(0u8, Side::First, h1), (1u8, Side::Second, h2)] {
        for v in h.graph().vertices() {
            if h.graph().degree(v) != 3 {
                continue;
            }
            match found.get(&(tag, v)) {
                Some(&preimage) => witnesses.push(Witness {
                    side,
                    vertex: v,
                    preimage,
                }),
                None => missing.push((side, v)),
            }
        }
    }
    let holds = missing.is_empty();
    Ok(CertificateC1 {
        witnesses,
        missing,
        holds,
    })
}

/// The congruence certificate: for each factor, the `a`, `b` and `c`
/// exponent sums of every closed path vanish modulo that factor's scale,
/// and the join of the two factors is exactly [`gamma_base`].
#[derive(Debug, Clone)]
pub struct CertificateC2 {
    pub m1: u64,
    pub m2: u64,
    /// Existence of the exponent potential for `a`, `b`, `c` modulo `m1`.
    pub potentials1: [bool; 3],
    /// The same modulo `m2` on the second factor.
    pub potentials2: [bool; 3],
    pub join_identified: bool,
}

impl CertificateC2 {
    /// All congruences hold with nontrivial moduli and the join is the
    /// base graph.
    pub fn certified(&self) -> bool {
        self.m1 > 1
            && self.m2 > 1
            && self.potentials1.iter().all(|&p| p)
            && self.potentials2.iter().all(|&p| p)
            && self.join_identified
    }
}

/// Does every closed path have `letter`-exponent sum divisible by
/// `modulus`? Decided by propagating a potential over a spanning tree and
/// checking every chord.
fn potential_exists(g: &LabeledGraph, root: Vertex, letter: Letter, modulus: u64) -> bool {
    let m = modulus as i64;
    let inc = |s: SignedLetter| -> i64 {
        if s.letter() != letter {
            0
        } else if s.is_positive() {
            1
        } else {
            -1
        }
    };
    let mut pot = vec![0i64; g.vertex_count()];
    let mut seen = vec![false; g.vertex_count()];
    seen[root as usize] = true;
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &d in g.darts_from(v) {
            let h = g.head(d);
            if !seen[h as usize] {
                seen[h as usize] = true;
                pot[h as usize] = (pot[v as usize] + inc(g.label(d))).rem_euclid(m);
                queue.push_back(h);
            }
        }
    }
    (0..g.dart_count() as u32).all(|d| {
        let (t, h) = (g.tail(d), g.head(d));
        pot[h as usize] == (pot[t as usize] + inc(g.label(d))).rem_euclid(m)
    })
}

pub fn certificate_c2(h1: &Subgroup, h2: &Subgroup, m1: u64, m2: u64) -> Result<CertificateC2> {
    if m1 == 0 || m2 == 0 {
        return Err(Error::ZeroModulus);
    }
    let al = gamma_alphabet();
    h1.alphabet().expect_same(&al)?;
    h2.alphabet().expect_same(&al)?;
    let cycle_letters =
        ["a", "b", "c"].map(|name| al.get(name).expect("cycle alphabet letter"));
    let potentials1 =
        cycle_letters.map(|x| potential_exists(h1.graph(), h1.basepoint(), x, m1));
    let potentials2 =
        cycle_letters.map(|x| potential_exists(h2.graph(), h2.basepoint(), x, m2));
    let join_identified = h1.join(h2)? == gamma_base();
    Ok(CertificateC2 {
        m1,
        m2,
        potentials1,
        potentials2,
        join_identified,
    })
}

/// Everything [`verify_theorem`] checked, with the headline numbers.
#[derive(Debug, Clone)]
pub struct TheoremReport {
    pub r1: u64,
    pub r2: u64,
    pub r_meet: u64,
    pub r_join: u64,
    /// `r_meet * r_join`.
    pub lhs: u64,
    /// `r1 * r2`.
    pub rhs: u64,
    /// Recognized shape of the intersection.
    pub meet_params: GammaParams,
    pub coset_count: usize,
    pub c1: CertificateC1,
    pub c2: CertificateC2,
}

fn expect_eq(name: &str, want: u64, got: u64) -> Result<()> {
    if want == got {
        Ok(())
    } else {
        Err(Error::Verification(format!(
            "{name}: expected {want}, got {got}"
        )))
    }
}

/// Rebuilds the counterexample pair from scratch and checks every claimed
/// quantity: the four reduced ranks, the recognized shape of the
/// intersection, the failed product inequality 16 > 15, the single double
/// coset, and both certificates.
pub fn verify_theorem() -> Result<TheoremReport> {
    let (h1, h2) = theorem_pair();
    let r1 = h1.reduced_rank();
    let r2 = h2.reduced_rank();
    expect_eq("reduced rank of the first factor", 3, r1)?;
    expect_eq("reduced rank of the second factor", 5, r2)?;

    let meet = intersect(&h1, &h2)?;
    let r_meet = meet.reduced_rank();
    expect_eq("reduced rank of the intersection", 8, r_meet)?;
    let meet_params = recognize_gamma(&meet).ok_or_else(|| {
        Error::Verification("intersection is not a cycle-family graph".into())
    })?;
    expect_eq("intersection scale k", 77, meet_params.k())?;
    expect_eq("intersection a-length l", 2, meet_params.l())?;
    expect_eq("intersection b-length m", 15, meet_params.m())?;
    expect_eq("intersection c-length n", 6, meet_params.n())?;
    if !meet_params.is_degree3() {
        return Err(Error::Verification(
            "intersection attachments overlap".into(),
        ));
    }

    let join = h1.join(&h2)?;
    let r_join = join.reduced_rank();
    expect_eq("reduced rank of the join", 2, r_join)?;

    let (lhs, rhs) = (r_meet * r_join, r1 * r2);
    if lhs <= rhs {
        return Err(Error::Verification(format!(
            "product inequality unexpectedly holds: {lhs} <= {rhs}"
        )));
    }

    let cosets = double_cosets(&h1, &h2)?;
    expect_eq("double coset count", 1, cosets.components.len() as u64)?;
    expect_eq("double coset rank total", 8, cosets.total)?;
    if !cosets.components[0].representative.is_empty() {
        return Err(Error::Verification(
            "the single double coset is not the identity coset".into(),
        ));
    }

    let c1 = certificate_c1(&h1, &h2)?;
    if !c1.holds {
        return Err(Error::Verification(format!(
            "degree-transfer certificate fails at {} vertices",
            c1.missing.len()
        )));
    }
    let c2 = certificate_c2(&h1, &h2, 7, 11)?;
    if !c2.certified() {
        return Err(Error::Verification(
            "congruence certificate fails".into(),
        ));
    }

    Ok(TheoremReport {
        r1,
        r2,
        r_meet,
        r_join,
        lhs,
        rhs,
        meet_params,
        coset_count: cosets.components.len(),
        c1,
        c2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;

    #[test]
    fn base_graph_is_the_three_loop_wedge() {
        let base = gamma_base();
        assert_eq!(base.graph().vertex_count(), 3);
        assert_eq!(base.graph().edge_count(), 5);
        assert_eq!(base.rank(), 3);
        assert_eq!(base.reduced_rank(), 2);
        let al = gamma_alphabet();
        let gens: Vec<Word> = ["b", "daD", "ecE"]
            .iter()
            .map(|w| Word::parse(&al, w).unwrap())
            .collect();
        assert_eq!(Subgroup::from_generators(al, &gens), base);
    }

    #[test]
    fn parameter_validation() {
        assert!(GammaParams::new(0, 1, 1, 1, vec![0], vec![0]).is_err());
        assert!(GammaParams::new(1, 1, 1, 1, vec![0], vec![]).is_err());
        assert!(GammaParams::new(1, 1, 1, 1, vec![1], vec![0]).is_err());
        assert!(GammaParams::new(1, 2, 3, 1, vec![1, 1], vec![0]).is_err());
        assert!(GammaParams::degree3(1, 1, 1, 1).is_err());
        assert!(GammaParams::degree3(7, 1, 3, 2).is_ok());
    }

    #[test]
    fn theorem_pair_shapes() {
        let (h1, h2) = theorem_pair();
        assert_eq!(h1.graph().vertex_count(), 7 * (1 + 3 + 2));
        assert_eq!(h2.graph().vertex_count(), 11 * (2 + 5 + 3));
        assert_eq!(h1.reduced_rank(), 3);
        assert_eq!(h2.reduced_rank(), 5);
        let trivalent = |h: &Subgroup| {
            h.graph()
                .vertices()
                .filter(|&v| h.graph().degree(v) == 3)
                .count()
        };
        assert!(h1.graph().vertices().all(|v| h1.graph().degree(v) <= 3));
        assert_eq!(trivalent(&h1), 6);
        assert_eq!(trivalent(&h2), 10);
    }

    #[test]
    fn recognizer_roundtrips_parameters() {
        for params in [
            GammaParams::new(1, 1, 1, 1, vec![0], vec![0]).unwrap(),
            GammaParams::degree3(7, 1, 3, 2).unwrap(),
            GammaParams::degree3(11, 2, 5, 3).unwrap(),
            GammaParams::new(5, 2, 4, 3, vec![1, 3], vec![0, 2, 1]).unwrap(),
        ] {
            let h = build_gamma(&params);
            assert_eq!(recognize_gamma(&h), Some(params));
        }
    }

    #[test]
    fn recognizer_rejects_other_graphs() {
        let al = gamma_alphabet();
        assert_eq!(recognize_gamma(&Subgroup::full(al.clone())), None);
        let h = Subgroup::from_generators(
            al.clone(),
            &[Word::parse(&al, "ab").unwrap()],
        );
        assert_eq!(recognize_gamma(&h), None);
        let two_base = Alphabet::from_chars("ab").unwrap();
        let h = Subgroup::full(two_base);
        assert_eq!(recognize_gamma(&h), None);
    }

    #[test]
    fn congruence_certificate_is_modulus_sensitive() {
        let (h1, h2) = theorem_pair();
        let good = certificate_c2(&h1, &h2, 7, 11).unwrap();
        assert!(good.certified());
        assert!(good.join_identified);

        // 14 does not divide the a-cycle exponent 7 of the first factor.
        let bad = certificate_c2(&h1, &h2, 14, 11).unwrap();
        assert!(!bad.potentials1[0]);
        assert!(!bad.certified());

        let trivial = certificate_c2(&h1, &h2, 1, 11).unwrap();
        assert!(trivial.potentials1.iter().all(|&p| p));
        assert!(!trivial.certified());

        assert!(matches!(
            certificate_c2(&h1, &h2, 0, 11),
            Err(Error::ZeroModulus)
        ));
    }

    #[test]
    fn degree_transfer_certificate_holds_with_full_witness_list() {
        let (h1, h2) = theorem_pair();
        let c1 = certificate_c1(&h1, &h2).unwrap();
        assert!(c1.holds);
        assert!(c1.missing.is_empty());
        assert_eq!(c1.witnesses.len(), 16);
        assert_eq!(
            c1.witnesses.iter().filter(|w| w.side == Side::First).count(),
            6
        );
    }

    #[test]
    fn full_verification_passes_and_pins_the_numbers() {
        let report = verify_theorem().unwrap();
        assert_eq!(
            (report.r1, report.r2, report.r_meet, report.r_join),
            (3, 5, 8, 2)
        );
        assert_eq!((report.lhs, report.rhs), (16, 15));
        assert_eq!(report.coset_count, 1);
        assert!(report.c2.certified());

        let mut d = report.meet_params.d_attach().to_vec();
        let mut e = report.meet_params.e_attach().to_vec();
        d.sort_unstable();
        e.sort_unstable();
        assert_eq!(d, vec![0, 3]);
        assert_eq!(e, vec![1, 2, 4, 7, 11, 14]);
    }
}
