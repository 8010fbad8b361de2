//! The constructive coloring algorithm.
//!
//! Per connected component the chooser either runs an exact routine for
//! maximum degree at most 2, colors an oversized-list complete component
//! greedily, or — the main machinery — trims every list to the component's
//! maximum degree d, peels sub-d vertices off, and colors the remaining
//! d-regular core by walking a maximal path into a cycle. A non-Hamiltonian
//! cycle is handled by recursively coloring the rest of the graph first and
//! then sweeping the cycle from an anchor vertex whose color is picked so
//! that the final cycle vertex keeps a free color (the Eq. (1) rule); a
//! Hamiltonian cycle is swept in the σ order ending at the middle vertex of
//! a non-adjacent triple, whose two pre-colored ends jointly block at most
//! one of its colors (the Eq. (2) rule).
//!
//! Every tie-break is smallest-first, so identical inputs yield identical
//! colorings. The non-Hamiltonian case recurses on the graph minus the
//! cycle; each level removes at least four vertices, so the depth is at
//! most n/4 (callers coloring very large regular graphs should provide a
//! worker thread with a generous stack).

use crate::coloring::{Color, ListAssignment, NaReason, OddCycleWitness, Outcome, PartialColoring};
use crate::graph::{Graph, SubMap, VertexSet};

/// Per-branch hit counters, kept across the recursion for coverage-based
/// acceptance checks.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TraceCounters {
    pub peel: u64,
    pub small_degree: u64,
    pub special_case: u64,
    pub hamiltonian: u64,
    pub eq1_case_a: u64,
    pub eq1_case_b: u64,
    pub eq1_case_c: u64,
    pub eq2_case_common: u64,
    pub eq2_case_left: u64,
    pub eq2_case_right: u64,
}

impl TraceCounters {
    pub fn merge(&mut self, other: &TraceCounters) {
        self.peel += other.peel;
        self.small_degree += other.small_degree;
        self.special_case += other.special_case;
        self.hamiltonian += other.hamiltonian;
        self.eq1_case_a += other.eq1_case_a;
        self.eq1_case_b += other.eq1_case_b;
        self.eq1_case_c += other.eq1_case_c;
        self.eq2_case_common += other.eq2_case_common;
        self.eq2_case_left += other.eq2_case_left;
        self.eq2_case_right += other.eq2_case_right;
    }

    fn entries(&self) -> [(&'static str, u64); 10] {
        [
            ("peel", self.peel),
            ("small_degree", self.small_degree),
            ("special_case", self.special_case),
            ("hamiltonian", self.hamiltonian),
            ("eq1_case_a", self.eq1_case_a),
            ("eq1_case_b", self.eq1_case_b),
            ("eq1_case_c", self.eq1_case_c),
            ("eq2_case_common", self.eq2_case_common),
            ("eq2_case_left", self.eq2_case_left),
            ("eq2_case_right", self.eq2_case_right),
        ]
    }

    /// `branch=count` lines in a fixed order.
    pub fn lines(&self) -> Vec<String> {
        self.entries()
            .iter()
            .map(|(name, value)| format!("{name}={value}"))
            .collect()
    }

    /// Branches never hit; empty means full coverage.
    pub fn missing_branches(&self) -> Vec<&'static str> {
        self.entries()
            .iter()
            .filter(|(_, value)| *value == 0)
            .map(|(name, _)| *name)
            .collect()
    }
}

/// Deliberate rule breakers for harness-sensitivity runs. A chooser mutated
/// this way must be caught by the fuzz harness (verifier, oracle agreement
/// or a runtime assertion).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutation {
    /// In the Eq. (1) anchor rule, return the smallest color of L(v) in the
    /// disjoint case instead of a color outside L(u).
    Eq1CaseC,
}

/// A sequence of distinct vertices in which consecutive entries are
/// adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathOrder {
    vertices: Vec<usize>,
}

impl PathOrder {
    /// Validates distinctness and consecutive adjacency.
    pub fn new(h: &Graph, vertices: Vec<usize>) -> PathOrder {
        assert!(!vertices.is_empty(), "a path needs at least one vertex");
        let mut seen = vec![false; h.vertex_count()];
        for &v in &vertices {
            assert!(!seen[v], "path repeats vertex {v}");
            seen[v] = true;
        }
        for pair in vertices.windows(2) {
            assert!(
                h.has_edge(pair[0], pair[1]),
                "path entries {} and {} are not adjacent",
                pair[0],
                pair[1]
            );
        }
        PathOrder { vertices }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().expect("nonempty path")
    }
}

/// The coloring order of the Hamiltonian branch: a permutation of the
/// component that ends at the triple's middle vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaOrder {
    order: Vec<usize>,
}

impl SigmaOrder {
    fn new(n: usize, order: Vec<usize>) -> SigmaOrder {
        debug_assert_eq!(order.len(), n);
        let mut seen = vec![false; n];
        for &v in &order {
            debug_assert!(!seen[v], "sigma repeats vertex {v}");
            seen[v] = true;
        }
        SigmaOrder { order }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.order
    }
}

/// Colors `g` from `lists` where the guarantee applies.
///
/// Per connected component H with d the maximum degree of H:
/// 1. d <= 2: exact routine (`Success` or `Infeasible`, with a
///    `ListTooShort` gate for undersized lists);
/// 2. H complete on d+1 vertices with d >= 3: greedy when every list
///    exceeds d colors, otherwise `NotApplicable(CompleteComponent)`;
/// 3. some list shorter than d: `NotApplicable(ListTooShort)`;
/// 4. otherwise lists are trimmed to their d smallest colors and the
///    peel / regular-core machinery runs; success is guaranteed.
///
/// The first component that fails aborts the run (components are visited
/// in order of their smallest vertex). On success the coloring is total,
/// proper and list-respecting.
pub fn list_color(g: &Graph, lists: &ListAssignment) -> (Outcome, TraceCounters) {
    list_color_with(g, lists, None)
}

/// [`list_color`] with an optional harness mutation.
pub fn list_color_with(
    g: &Graph,
    lists: &ListAssignment,
    mutation: Option<Mutation>,
) -> (Outcome, TraceCounters) {
    assert_eq!(
        lists.vertex_count(),
        g.vertex_count(),
        "lists must cover every vertex"
    );
    let mut counters = TraceCounters::default();
    let mut f = PartialColoring::new(g.vertex_count());
    for comp in g.connected_components() {
        let (sub, map) = g.induced_subgraph(&comp);
        let sub_lists = lists.restrict(map.orig_ids());
        match color_component(&sub, &sub_lists, &map, &comp, &mut counters, mutation) {
            Ok(sub_f) => {
                for v in 0..sub.vertex_count() {
                    f.set(map.to_orig(v), sub_f.get(v).expect("component coloring total"));
                }
            }
            Err(outcome) => return (outcome, counters),
        }
    }
    debug_assert!(f.is_total());
    (Outcome::Success(f), counters)
}

/// Dispatches one connected component; `map`/`comp` translate failures back
/// into original ids.
fn color_component(
    h: &Graph,
    lists: &ListAssignment,
    map: &SubMap,
    comp: &VertexSet,
    counters: &mut TraceCounters,
    mutation: Option<Mutation>,
) -> Result<PartialColoring, Outcome> {
    let n = h.vertex_count();
    let d = h.max_degree();
    if d <= 2 {
        counters.small_degree += 1;
        return match small_degree_impl(h, lists) {
            SmallOutcome::Colored(f) => Ok(f),
            SmallOutcome::OddCycle { cycle, pair } => Err(Outcome::Infeasible {
                witness: OddCycleWitness {
                    cycle: cycle.iter().map(|&v| map.to_orig(v)).collect(),
                    colors: pair,
                },
            }),
            SmallOutcome::ShortList => Err(Outcome::NotApplicable {
                reason: NaReason::ListTooShort,
                component: comp.clone(),
            }),
        };
    }
    if n == d + 1 && h.is_complete(&VertexSet::full(n)) {
        return if (0..n).all(|v| lists.list(v).len() > d) {
            let mut f = PartialColoring::new(n);
            let order: Vec<usize> = (0..n).collect();
            greedy_color_sequence(&order, h, lists, &mut f);
            Ok(f)
        } else {
            Err(Outcome::NotApplicable {
                reason: NaReason::CompleteComponent,
                component: comp.clone(),
            })
        };
    }
    if (0..n).any(|v| lists.list(v).len() < d) {
        return Err(Outcome::NotApplicable {
            reason: NaReason::ListTooShort,
            component: comp.clone(),
        });
    }
    let trimmed = trim_lists(lists, d, &VertexSet::full(n));
    let (stack, core) = peel(h, d);
    counters.peel += stack.len() as u64;
    let mut f = PartialColoring::new(n);
    if !core.is_empty() {
        // h is connected, so the core is empty or all of h; the loop keeps
        // the code honest about peel's general contract anyway.
        let (core_sub, core_map) = h.induced_subgraph(&core);
        for core_comp in core_sub.connected_components() {
            let (reg, reg_map) = core_sub.induced_subgraph(&core_comp);
            let orig_ids: Vec<usize> = reg_map
                .orig_ids()
                .iter()
                .map(|&v| core_map.to_orig(v))
                .collect();
            let reg_lists = trimmed.restrict(&orig_ids);
            let reg_f = color_regular_core_impl(&reg, &reg_lists, d, counters, mutation);
            for (v, &orig) in orig_ids.iter().enumerate() {
                f.set(orig, reg_f.get(v).expect("core coloring total"));
            }
        }
    }
    unwind_peel(&stack, &mut f, &trimmed);
    debug_assert!(f.is_total());
    Ok(f)
}

/// Replaces the list of every vertex in `s` by its `d` smallest colors;
/// other lists are untouched. Every trimmed list must have at least `d`
/// colors.
pub fn trim_lists(lists: &ListAssignment, d: usize, s: &VertexSet) -> ListAssignment {
    let mut out = lists.clone();
    for &v in s.ids() {
        let list = lists.list(v);
        assert!(
            list.len() >= d,
            "cannot trim vertex {v}: list has {} < {d} colors",
            list.len()
        );
        out.set_list(v, list[..d].to_vec());
    }
    out
}

/// One peeled vertex together with the neighbors it still had at removal
/// time (always fewer than d of them).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeelRecord {
    pub vertex: usize,
    pub neighbors: Vec<usize>,
}

/// Repeatedly removes vertices of current degree < d, in first-in
/// first-out waves seeded ascending, recording each vertex's surviving
/// neighbor set. What remains is the d-regular core (possibly empty).
pub fn peel(g: &Graph, d: usize) -> (Vec<PeelRecord>, VertexSet) {
    let n = g.vertex_count();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut queue: std::collections::VecDeque<usize> = (0..n).filter(|&v| deg[v] < d).collect();
    let mut stack = Vec::new();
    while let Some(v) = queue.pop_front() {
        removed[v] = true;
        let neighbors: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| !removed[w])
            .collect();
        for &w in &neighbors {
            deg[w] -= 1;
            if deg[w] == d - 1 {
                queue.push_back(w);
            }
        }
        debug_assert!(neighbors.len() < d);
        stack.push(PeelRecord { vertex: v, neighbors });
    }
    let core = VertexSet::new((0..n).filter(|&v| !removed[v]).collect());
    for &v in core.ids() {
        assert_eq!(deg[v], d, "peel core must be d-regular at vertex {v}");
    }
    (stack, core)
}

/// Pops the peel stack in reverse removal order, giving each vertex the
/// smallest list color unused by its recorded neighbors. With lists trimmed
/// to the peel's d this always succeeds.
pub fn unwind_peel(stack: &[PeelRecord], f: &mut PartialColoring, lists: &ListAssignment) {
    for rec in stack.iter().rev() {
        let used: Vec<Color> = rec.neighbors.iter().filter_map(|&w| f.get(w)).collect();
        debug_assert_eq!(used.len(), rec.neighbors.len(), "recorded neighbors must be colored");
        let color = lists
            .list(rec.vertex)
            .iter()
            .copied()
            .find(|c| !used.contains(c))
            .unwrap_or_else(|| {
                panic!(
                    "unwind starvation at vertex {}: {} recorded neighbors exhaust a {}-color list",
                    rec.vertex,
                    rec.neighbors.len(),
                    lists.list(rec.vertex).len()
                )
            });
        f.set(rec.vertex, color);
    }
}

/// Finds `(v1, v2, v3)` with `v1 v2` and `v2 v3` edges but no `v1 v3` edge:
/// `v2` is the smallest vertex with two non-adjacent neighbors and
/// `(v1, v3)` its lexicographically smallest such neighbor pair. Panics if
/// the graph is complete.
pub fn find_triple(h: &Graph) -> (usize, usize, usize) {
    for v2 in 0..h.vertex_count() {
        let nbrs = h.neighbors(v2);
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if !h.has_edge(a, b) {
                    return (a, v2, b);
                }
            }
        }
    }
    panic!("no triple exists: every neighborhood is a clique (complete graph)");
}

/// Extends the seed path by repeatedly appending the smallest neighbor of
/// the current last vertex not yet on the path. The result is maximal: the
/// last vertex has all its neighbors on the path.
pub fn extend_to_maximal_path(h: &Graph, seed: &[usize]) -> PathOrder {
    let mut on_path = vec![false; h.vertex_count()];
    let mut path = PathOrder::new(h, seed.to_vec()).vertices;
    for &v in &path {
        on_path[v] = true;
    }
    loop {
        let last = *path.last().expect("nonempty path");
        match h.neighbors(last).iter().copied().find(|&w| !on_path[w]) {
            Some(next) => {
                on_path[next] = true;
                path.push(next);
            }
            None => break,
        }
    }
    PathOrder { vertices: path }
}

/// For a maximal path, takes the neighbor of the last vertex farthest back
/// along the path (smallest index i) and returns the sub-path from i to the
/// end. That sub-path is a cycle containing every neighbor of the last
/// vertex.
pub fn farthest_neighbor_cycle(h: &Graph, p: &PathOrder) -> PathOrder {
    let vs = p.as_slice();
    let last = p.last();
    let mut on_path = vec![false; h.vertex_count()];
    for &v in vs {
        on_path[v] = true;
    }
    assert!(
        h.neighbors(last).iter().all(|&w| on_path[w]),
        "path is not maximal: vertex {last} has a neighbor off the path"
    );
    let i = vs
        .iter()
        .position(|&x| h.has_edge(x, last))
        .expect("last vertex of a nontrivial path has a neighbor on it");
    PathOrder {
        vertices: vs[i..].to_vec(),
    }
}

/// Which Eq. (1) anchor case fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Eq1Case {
    A,
    B,
    C,
}

fn anchor_eq1(lu: &[Color], lv: &[Color], fw: Color, mutation: Option<Mutation>) -> (Color, Eq1Case) {
    debug_assert_eq!(lu.len(), lv.len());
    let in_lu = |c: Color| lu.binary_search(&c).is_ok();
    if !in_lu(fw) {
        (lv[0], Eq1Case::A)
    } else if lv.binary_search(&fw).is_ok() {
        (fw, Eq1Case::B)
    } else {
        let color = if mutation == Some(Mutation::Eq1CaseC) {
            lv[0]
        } else {
            lv.iter()
                .copied()
                .find(|&c| !in_lu(c))
                .expect("equal-size lists that differ leave a color outside L(u)")
        };
        (color, Eq1Case::C)
    }
}

/// Picks the anchor color f(v) of the non-Hamiltonian case so that
/// `|L(u) ∩ {f(v), f(w)}| <= 1`:
/// (a) `f(w) ∉ L(u)`: smallest of L(v);
/// (b) `f(w) ∈ L(u) ∩ L(v)`: f(w) itself;
/// (c) `f(w) ∈ L(u) \ L(v)`: smallest color of L(v) \ L(u).
pub fn choose_anchor_eq1(lu: &[Color], lv: &[Color], fw: Color) -> Color {
    anchor_eq1(lu, lv, fw, None).0
}

/// Which Eq. (2) anchor case fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Eq2Case {
    Common,
    Left,
    Right,
}

fn anchor_eq2(l1: &[Color], l2: &[Color], l3: &[Color]) -> (Color, Color, Eq2Case) {
    debug_assert!(l1.len() == l2.len() && l2.len() == l3.len());
    if let Some(c) = l1.iter().copied().find(|c| l3.binary_search(c).is_ok()) {
        return (c, c, Eq2Case::Common);
    }
    if let Some(f1) = l1
        .iter()
        .copied()
        .find(|c| l2.binary_search(c).is_err())
    {
        return (f1, l3[0], Eq2Case::Left);
    }
    // L1 ⊆ L2 with equal sizes forces L1 = L2, and L1 ∩ L3 = ∅ then puts
    // all of L3 outside L2.
    (l1[0], l3[0], Eq2Case::Right)
}

/// Picks the anchor colors (f(v1), f(v3)) of the Hamiltonian case so that
/// `|L(v2) ∩ {f(v1), f(v3)}| <= 1`:
/// (a) L1 and L3 share a color: both take the smallest shared one;
/// (b) otherwise, if L1 has a color outside L2: f1 takes the smallest such,
///     f3 the smallest of L3;
/// (c) otherwise L1 = L2 and L3 is disjoint from it: both take their
///     smallest.
pub fn choose_anchor_eq2(l1: &[Color], l2: &[Color], l3: &[Color]) -> (Color, Color) {
    let (f1, f3, _) = anchor_eq2(l1, l2, l3);
    (f1, f3)
}

fn distinct_hits(list: &[Color], a: Color, b: Color) -> usize {
    let mut hits = 0;
    if list.binary_search(&a).is_ok() {
        hits += 1;
    }
    if b != a && list.binary_search(&b).is_ok() {
        hits += 1;
    }
    hits
}

/// Colors a connected d-regular non-complete component (d >= 3, all lists
/// exactly d colors): builds the triple, the maximal path and the farthest
/// neighbor cycle, then dispatches to the special (non-Hamiltonian) or
/// Hamiltonian branch.
pub fn color_regular_core(
    h: &Graph,
    lists: &ListAssignment,
    d: usize,
    counters: &mut TraceCounters,
) -> PartialColoring {
    color_regular_core_impl(h, lists, d, counters, None)
}

fn color_regular_core_impl(
    h: &Graph,
    lists: &ListAssignment,
    d: usize,
    counters: &mut TraceCounters,
    mutation: Option<Mutation>,
) -> PartialColoring {
    let n = h.vertex_count();
    debug_assert!(d >= 3);
    debug_assert!((0..n).all(|v| h.degree(v) == d), "core must be d-regular");
    assert!(
        !(n == d + 1 && h.is_complete(&VertexSet::full(n))),
        "regular core must not be the complete graph"
    );
    assert!(
        (0..n).all(|v| lists.list(v).len() == d),
        "core lists must have exactly d colors"
    );
    let (v1, v2, v3) = find_triple(h);
    let path = extend_to_maximal_path(h, &[v1, v2, v3]);
    let cycle = farthest_neighbor_cycle(h, &path);
    if cycle.len() < n {
        counters.special_case += 1;
        handle_special_case_impl(h, lists, &cycle, counters, mutation)
    } else {
        counters.hamiltonian += 1;
        handle_hamiltonian_impl(h, lists, &cycle, counters)
    }
}

/// Non-Hamiltonian branch: the cycle C is shorter than the component and
/// its last vertex has no neighbors outside C. Colors the components of
/// h − V(C) recursively, then anchors and sweeps the cycle.
pub fn handle_special_case(
    h: &Graph,
    lists: &ListAssignment,
    cycle: &PathOrder,
    counters: &mut TraceCounters,
) -> PartialColoring {
    handle_special_case_impl(h, lists, cycle, counters, None)
}

fn handle_special_case_impl(
    h: &Graph,
    lists: &ListAssignment,
    cycle: &PathOrder,
    counters: &mut TraceCounters,
    mutation: Option<Mutation>,
) -> PartialColoring {
    let n = h.vertex_count();
    let cyc = cycle.as_slice();
    let k = cyc.len();
    assert!(k < n, "special case requires a non-Hamiltonian cycle");
    let last = cycle.last();
    let mut on_cycle = vec![false; n];
    for &v in cyc {
        on_cycle[v] = true;
    }
    assert!(h.has_edge(last, cyc[0]), "cycle entries must close up");
    assert!(
        h.neighbors(last).iter().all(|&w| on_cycle[w]),
        "every neighbor of the cycle's last vertex must lie on the cycle"
    );

    // Walk the cycle from its last vertex in ascending cycle order; u is
    // the first vertex with a neighbor outside the cycle, v its
    // predecessor (all of whose neighbors are inside), w the smallest
    // outside neighbor of u.
    let walk: Vec<usize> = std::iter::once(last)
        .chain(cyc[..k - 1].iter().copied())
        .collect();
    let t = walk
        .iter()
        .position(|&x| h.neighbors(x).iter().any(|&w| !on_cycle[w]))
        .expect("a shorter-than-n cycle in a connected graph touches the outside");
    assert!(t >= 1, "the cycle's last vertex cannot have outside neighbors");
    let u = walk[t];
    let v = walk[t - 1];
    let w = *h
        .neighbors(u)
        .iter()
        .find(|&&x| !on_cycle[x])
        .expect("u was chosen for its outside neighbor");

    // Color h − V(C) through the top-level entry; the theorem's
    // preconditions hold again there, so this must succeed.
    let outside = VertexSet::new((0..n).filter(|&x| !on_cycle[x]).collect());
    let (out_sub, out_map) = h.induced_subgraph(&outside);
    let out_lists = lists.restrict(out_map.orig_ids());
    let (outcome, sub_counters) = list_color_with(&out_sub, &out_lists, mutation);
    counters.merge(&sub_counters);
    let mut f = PartialColoring::new(n);
    match outcome {
        Outcome::Success(sub_f) => {
            for sv in 0..out_sub.vertex_count() {
                f.set(out_map.to_orig(sv), sub_f.get(sv).expect("total"));
            }
        }
        other => panic!("recursive coloring of the cycle remainder failed: {other:?}"),
    }

    let fw = f.get(w).expect("w was colored by the recursion");
    let (fv, case) = anchor_eq1(lists.list(u), lists.list(v), fw, mutation);
    match case {
        Eq1Case::A => counters.eq1_case_a += 1,
        Eq1Case::B => counters.eq1_case_b += 1,
        Eq1Case::C => counters.eq1_case_c += 1,
    }
    let hits = distinct_hits(lists.list(u), fv, fw);
    assert!(
        hits <= 1,
        "Eq. (1) violated at anchor: |L(u) ∩ {{f(v), f(w)}}| = {hits} for u={u}, v={v}, w={w}"
    );
    f.set(v, fv);

    // Enumerate the cycle from v to u the long way around and color
    // greedily; u keeps a free color by Eq. (1).
    let enumeration: Vec<usize> = (0..k).map(|s| walk[(t - 1 + k - s) % k]).collect();
    debug_assert_eq!(enumeration[0], v);
    debug_assert_eq!(enumeration[k - 1], u);
    greedy_color_sequence(&enumeration[1..], h, lists, &mut f);
    debug_assert!(f.is_total());
    f
}

/// Hamiltonian branch: the cycle covers the whole component, its first
/// three vertices are the triple (v1 v3 non-adjacent). Anchors v1 and v3 by
/// the Eq. (2) rule and colors everything else greedily in the σ order,
/// ending at v2.
pub fn handle_hamiltonian(
    h: &Graph,
    lists: &ListAssignment,
    cycle: &PathOrder,
    counters: &mut TraceCounters,
) -> PartialColoring {
    handle_hamiltonian_impl(h, lists, cycle, counters)
}

fn handle_hamiltonian_impl(
    h: &Graph,
    lists: &ListAssignment,
    cycle: &PathOrder,
    counters: &mut TraceCounters,
) -> PartialColoring {
    let n = h.vertex_count();
    let c = cycle.as_slice();
    assert_eq!(c.len(), n, "Hamiltonian branch requires a spanning cycle");
    assert!(h.has_edge(c[n - 1], c[0]), "cycle entries must close up");
    let (v1, v2, v3) = (c[0], c[1], c[2]);
    assert!(
        !h.has_edge(v1, v3),
        "triple endpoints v1={v1}, v3={v3} must be non-adjacent"
    );

    // Smallest j >= 4 (1-based) with v_j a neighbor of v2; it exists
    // because v2 has degree >= 3.
    let jz = (3..n)
        .find(|&j| h.has_edge(c[j], v2))
        .expect("degree >= 3 gives v2 a neighbor besides v1 and v3");

    // σ = (v1, v3, ..., v_{j-1}, v_n, v_{n-1}, ..., v_j, v2)
    let mut order = Vec::with_capacity(n);
    order.push(c[0]);
    order.extend_from_slice(&c[2..jz]);
    order.extend(c[jz..].iter().rev().copied());
    order.push(c[1]);
    let sigma = SigmaOrder::new(n, order);
    let sig = sigma.as_slice();

    // Every vertex except the final v2 must see a neighbor later in σ.
    let mut pos = vec![0usize; n];
    for (i, &x) in sig.iter().enumerate() {
        pos[x] = i;
    }
    for (i, &x) in sig[..n - 1].iter().enumerate() {
        assert!(
            h.neighbors(x).iter().any(|&nb| pos[nb] > i),
            "σ invariant violated: vertex {x} has no later neighbor"
        );
    }

    let (f1, f3, case) = anchor_eq2(lists.list(v1), lists.list(v2), lists.list(v3));
    match case {
        Eq2Case::Common => counters.eq2_case_common += 1,
        Eq2Case::Left => counters.eq2_case_left += 1,
        Eq2Case::Right => counters.eq2_case_right += 1,
    }
    let hits = distinct_hits(lists.list(v2), f1, f3);
    assert!(
        hits <= 1,
        "Eq. (2) violated at anchor: |L(v2) ∩ {{f(v1), f(v3)}}| = {hits} for v1={v1}, v2={v2}, v3={v3}"
    );
    let mut f = PartialColoring::new(n);
    f.set(v1, f1);
    f.set(v3, f3);
    debug_assert_eq!(sig[0], v1);
    debug_assert_eq!(sig[1], v3);
    greedy_color_sequence(&sig[2..], h, lists, &mut f);
    debug_assert!(f.is_total());
    f
}

/// Gives each vertex in `order` the smallest color of its list unused by
/// its currently-colored neighbors. Panics with a diagnostic if a vertex
/// finds every list color taken (an internal invariant violation, never
/// expected on inputs meeting the branch preconditions).
pub fn greedy_color_sequence(
    order: &[usize],
    h: &Graph,
    lists: &ListAssignment,
    f: &mut PartialColoring,
) {
    for &v in order {
        debug_assert!(f.get(v).is_none(), "vertex {v} already colored");
        let color = lists
            .list(v)
            .iter()
            .copied()
            .find(|&c| h.neighbors(v).iter().all(|&w| f.get(w) != Some(c)))
            .unwrap_or_else(|| {
                panic!(
                    "greedy starvation at vertex {v}: all {} list colors used by colored neighbors",
                    lists.list(v).len()
                )
            });
        f.set(v, color);
    }
}

/// Exact routine for a connected component of maximum degree <= 2 (isolated
/// vertex, path, or cycle).
///
/// Paths and cycles need 2-color lists everywhere, except that one path
/// endpoint may carry a 1-list (the sweep starts there); otherwise
/// `NotApplicable(ListTooShort)`. Cycles break at a >= 3-list vertex, then
/// at an unequal-list edge; all-identical 2-lists alternate on even cycles
/// and are exactly infeasible on odd ones.
pub fn color_small_degree(h: &Graph, lists: &ListAssignment) -> Outcome {
    match small_degree_impl(h, lists) {
        SmallOutcome::Colored(f) => Outcome::Success(f),
        SmallOutcome::OddCycle { cycle, pair } => Outcome::Infeasible {
            witness: OddCycleWitness {
                cycle,
                colors: pair,
            },
        },
        SmallOutcome::ShortList => Outcome::NotApplicable {
            reason: NaReason::ListTooShort,
            component: VertexSet::full(h.vertex_count()),
        },
    }
}

enum SmallOutcome {
    Colored(PartialColoring),
    OddCycle { cycle: Vec<usize>, pair: [Color; 2] },
    ShortList,
}

fn small_degree_impl(h: &Graph, lists: &ListAssignment) -> SmallOutcome {
    let n = h.vertex_count();
    debug_assert!(h.max_degree() <= 2);
    debug_assert_eq!(h.connected_components().len(), 1);
    if n == 1 {
        let mut f = PartialColoring::new(1);
        f.set(0, lists.list(0)[0]);
        return SmallOutcome::Colored(f);
    }
    let short: Vec<usize> = (0..n).filter(|&v| lists.list(v).len() < 2).collect();
    if (0..n).all(|v| h.degree(v) == 2) {
        // cycle component
        if !short.is_empty() {
            return SmallOutcome::ShortList;
        }
        let ring = ring_order(h);
        if let Some(big) = (0..n).find(|&v| lists.list(v).len() >= 3) {
            // sweep around the ring ending at the big-list vertex
            let t = ring.iter().position(|&x| x == big).expect("on ring");
            let order: Vec<usize> = (1..n).map(|s| ring[(t + s) % n]).chain([big]).collect();
            let mut f = PartialColoring::new(n);
            greedy_color_sequence(&order, h, lists, &mut f);
            return SmallOutcome::Colored(f);
        }
        if let Some(e) = (0..n).find(|&e| lists.list(ring[e]) != lists.list(ring[(e + 1) % n])) {
            // break at the unequal-list edge: x's color is invisible to y
            let x = ring[e];
            let y = ring[(e + 1) % n];
            let fx = *lists
                .list(x)
                .iter()
                .find(|c| lists.list(y).binary_search(c).is_err())
                .expect("different equal-size lists");
            let mut f = PartialColoring::new(n);
            f.set(x, fx);
            let order: Vec<usize> = (1..n).map(|s| ring[(e + n - s) % n]).collect();
            debug_assert_eq!(*order.last().unwrap(), y);
            greedy_color_sequence(&order, h, lists, &mut f);
            return SmallOutcome::Colored(f);
        }
        // all lists identical with exactly two colors
        let pair = [lists.list(ring[0])[0], lists.list(ring[0])[1]];
        if n.is_multiple_of(2) {
            let mut f = PartialColoring::new(n);
            for (i, &v) in ring.iter().enumerate() {
                f.set(v, pair[i % 2]);
            }
            SmallOutcome::Colored(f)
        } else {
            SmallOutcome::OddCycle { cycle: ring, pair }
        }
    } else {
        // path component
        let endpoints: Vec<usize> = (0..n).filter(|&v| h.degree(v) == 1).collect();
        debug_assert_eq!(endpoints.len(), 2);
        let start = match short.as_slice() {
            [] => endpoints[0],
            [lone] if endpoints.contains(lone) => *lone,
            _ => return SmallOutcome::ShortList,
        };
        let mut order = Vec::with_capacity(n);
        order.push(start);
        let mut prev = start;
        let mut cur = h.neighbors(start)[0];
        loop {
            order.push(cur);
            match h.neighbors(cur).iter().copied().find(|&w| w != prev) {
                Some(next) => {
                    prev = cur;
                    cur = next;
                }
                None => break,
            }
        }
        debug_assert_eq!(order.len(), n);
        let mut f = PartialColoring::new(n);
        greedy_color_sequence(&order, h, lists, &mut f);
        SmallOutcome::Colored(f)
    }
}

/// Cyclic order of a cycle component: starts at vertex 0, moves toward its
/// smaller neighbor.
fn ring_order(h: &Graph) -> Vec<usize> {
    let n = h.vertex_count();
    let mut order = Vec::with_capacity(n);
    order.push(0);
    let mut prev = 0;
    let mut cur = h.neighbors(0)[0];
    while cur != 0 {
        order.push(cur);
        let next = h
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| w != prev)
            .expect("cycle vertices have two neighbors");
        prev = cur;
        cur = next;
    }
    debug_assert_eq!(order.len(), n);
    order
}
