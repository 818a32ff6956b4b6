//! Graphs, weighted oriented graphs, their ideals, even-connection
//! machinery for edge-ideal power colons, and stability upper bounds.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring::{Monomial, Ring};

/// A finite simple graph whose vertices are the variables of a ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    ring: Ring,
    /// Normalized edges (i < j), sorted and distinct.
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new<S: Into<String>>(vertices: Vec<S>, edges: &[(usize, usize)]) -> Result<Graph> {
        let ring = Ring::new(vertices)?;
        Graph::from_edge_indices(ring, edges)
    }

    pub fn from_edge_indices(ring: Ring, edges: &[(usize, usize)]) -> Result<Graph> {
        let n = ring.arity();
        let mut normalized = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            assert!(a < n && b < n, "edge endpoint out of range");
            if a == b {
                return Err(Error::InvalidGraph("loop edge"));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        let before = normalized.len();
        normalized.dedup();
        if normalized.len() != before {
            return Err(Error::InvalidGraph("duplicate edge"));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(a, b) in &normalized {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Ok(Graph {
            ring,
            edges: normalized,
            adjacency,
        })
    }

    /// Path on `n` vertices x1 - x2 - ... - xn.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::from_edge_indices(Ring::with_arity(n), &edges).expect("valid path")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Graph::from_edge_indices(Ring::with_arity(n), &edges).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Graph::from_edge_indices(Ring::with_arity(n), &edges).expect("valid complete graph")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..a {
            for j in 0..b {
                edges.push((i, a + j));
            }
        }
        Graph::from_edge_indices(Ring::with_arity(a + b), &edges).expect("valid biclique")
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn vertex_count(&self) -> usize {
        self.ring.arity()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    /// Proper 2-coloring (per component, deterministic start), or `None`
    /// when an odd cycle obstructs.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.vertex_count();
        let mut color = vec![None; n];
        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(0u8);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let c = color[v].unwrap();
                for &w in self.neighbors(v) {
                    match color[w] {
                        None => {
                            color[w] = Some(1 - c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return None,
                        _ => {}
                    }
                }
            }
        }
        let x = (0..n).filter(|&v| color[v] == Some(0)).collect();
        let y = (0..n).filter(|&v| color[v] == Some(1)).collect();
        Some((x, y))
    }

    pub fn profile(&self) -> GraphProfile {
        graph_profile(self)
    }
}

/// Exact-match shape classification used by the stability bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycleShape {
    None,
    Path,
    EvenCycle,
    OddCycle,
}

impl CycleShape {
    pub fn tag(&self) -> &'static str {
        match self {
            CycleShape::None => "none",
            CycleShape::Path => "path",
            CycleShape::EvenCycle => "even-cycle",
            CycleShape::OddCycle => "odd-cycle",
        }
    }
}

#[derive(Clone, Debug)]
pub struct GraphProfile {
    pub edge_count: usize,
    pub connected: bool,
    pub bipartition: Option<(Vec<usize>, Vec<usize>)>,
    pub degrees: Vec<usize>,
    pub cycle_shape: CycleShape,
}

pub fn graph_profile(graph: &Graph) -> GraphProfile {
    let n = graph.vertex_count();
    let m = graph.edge_count();
    let degrees: Vec<usize> = (0..n).map(|v| graph.degree(v)).collect();
    let connected = graph.is_connected();
    let ones = degrees.iter().filter(|&&d| d == 1).count();
    let twos = degrees.iter().filter(|&&d| d == 2).count();
    let cycle_shape = if connected && n >= 3 && m == n && twos == n {
        if n.is_multiple_of(2) {
            CycleShape::EvenCycle
        } else {
            CycleShape::OddCycle
        }
    } else if connected && (n == 1 || (m + 1 == n && ones == 2 && twos == n - 2)) {
        CycleShape::Path
    } else {
        CycleShape::None
    };
    GraphProfile {
        edge_count: m,
        connected,
        bipartition: graph.bipartition(),
        degrees,
        cycle_shape,
    }
}

/// Edge ideal I(G), generated by the degree-2 products over the edges.
pub fn edge_ideal(graph: &Graph) -> Result<MonomialIdeal> {
    if graph.edge_count() == 0 {
        return Err(Error::EmptyEdgeSet);
    }
    let ring = graph.ring();
    let gens = graph
        .edges()
        .iter()
        .map(|&(a, b)| ring.var(a).mul(&ring.var(b)))
        .collect();
    Ok(MonomialIdeal::new(ring.clone(), gens))
}

/// Cover ideal J(G), generated by the minimal vertex covers. Computed as
/// the intersection of the edge primes, whose minimal generators are
/// exactly the minimal covers.
pub fn cover_ideal(graph: &Graph) -> Result<MonomialIdeal> {
    if graph.edge_count() == 0 {
        return Err(Error::EmptyEdgeSet);
    }
    let ring = graph.ring();
    let mut acc = MonomialIdeal::unit(ring.clone());
    for &(a, b) in graph.edges() {
        let edge_prime = MonomialIdeal::new(ring.clone(), vec![ring.var(a), ring.var(b)]);
        acc = acc.intersect(&edge_prime);
    }
    Ok(acc)
}

/// t-path ideal: generated by the vertex products of simple paths on `t`
/// vertices. Returns the zero ideal when no t-path exists.
pub fn path_ideal(graph: &Graph, t: usize) -> Result<MonomialIdeal> {
    if t < 2 || t > graph.vertex_count() {
        return Err(Error::InvalidPathLength);
    }
    let ring = graph.ring();
    let mut gens = Vec::new();
    let mut visited = vec![false; graph.vertex_count()];
    let mut path = Vec::with_capacity(t);
    for start in 0..graph.vertex_count() {
        path.push(start);
        visited[start] = true;
        collect_paths(graph, t, &mut path, &mut visited, &mut gens);
        visited[start] = false;
        path.pop();
    }
    Ok(MonomialIdeal::new(ring.clone(), gens))
}

fn collect_paths(
    graph: &Graph,
    t: usize,
    path: &mut Vec<usize>,
    visited: &mut Vec<bool>,
    gens: &mut Vec<Monomial>,
) {
    if path.len() == t {
        // Reversals revisit the same vertex set; emit only one orientation.
        if path[0] < path[t - 1] {
            let ring = graph.ring();
            let m = path
                .iter()
                .fold(ring.one(), |acc, &v| acc.mul(&ring.var(v)));
            gens.push(m);
        }
        return;
    }
    let last = *path.last().unwrap();
    for &w in graph.neighbors(last) {
        if !visited[w] {
            visited[w] = true;
            path.push(w);
            collect_paths(graph, t, path, visited, gens);
            path.pop();
            visited[w] = false;
        }
    }
}

/// A weighted oriented graph over a simple underlying graph.
#[derive(Clone, Debug)]
pub struct WeightedOrientedGraph {
    underlying: Graph,
    /// Directed edges (source, target); the unordered pair is always an
    /// edge of the underlying graph.
    arcs: Vec<(usize, usize)>,
    weights: Vec<u32>,
}

impl WeightedOrientedGraph {
    pub fn new(underlying: Graph, arcs: Vec<(usize, usize)>, weights: Vec<u32>) -> Result<Self> {
        if weights.len() != underlying.vertex_count() || weights.iter().any(|&w| w < 1) {
            return Err(Error::InvalidGraph("weights must cover every vertex with values >= 1"));
        }
        let mut seen = HashSet::new();
        for &(a, b) in &arcs {
            if !underlying.has_edge(a, b) {
                return Err(Error::InvalidGraph("arc is not an edge of the underlying graph"));
            }
            if !seen.insert((a, b)) {
                return Err(Error::InvalidGraph("duplicate arc"));
            }
        }
        Ok(WeightedOrientedGraph {
            underlying,
            arcs,
            weights,
        })
    }

    pub fn underlying(&self) -> &Graph {
        &self.underlying
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn weight(&self, v: usize) -> u32 {
        self.weights[v]
    }
}

/// Edge ideal of a weighted oriented graph: `x_i * x_j^{w(x_j)}` per arc
/// (x_i, x_j). Coincides with the plain edge ideal iff all target weights
/// are 1.
pub fn weighted_oriented_edge_ideal(d: &WeightedOrientedGraph) -> Result<MonomialIdeal> {
    if d.arcs.is_empty() {
        return Err(Error::NoDirectedEdges);
    }
    let ring = d.underlying.ring();
    let gens = d
        .arcs
        .iter()
        .map(|&(a, b)| ring.var(a).mul(&ring.var_pow(b, d.weight(b))))
        .collect();
    Ok(MonomialIdeal::new(ring.clone(), gens))
}

fn normalize_multiset(graph: &Graph, multiset: &[(usize, usize)]) -> Result<Vec<((usize, usize), u32)>> {
    if multiset.is_empty() {
        return Err(Error::InvalidEdgeMultiset);
    }
    let mut counts: HashMap<(usize, usize), u32> = HashMap::new();
    for &(a, b) in multiset {
        if !graph.has_edge(a, b) {
            return Err(Error::InvalidEdgeMultiset);
        }
        *counts.entry((a.min(b), a.max(b))).or_insert(0) += 1;
    }
    let mut list: Vec<((usize, usize), u32)> = counts.into_iter().collect();
    list.sort_unstable();
    Ok(list)
}

/// All pairs (u, v), u = v allowed, even-connected with respect to the
/// given edge multiset: joined by a walk u, z1, z1', z2, z2', ..., v whose
/// even-position edges are drawn from the multiset within multiplicity and
/// whose every step is an edge of the graph. At least one multiset edge
/// must be traversed; walks consuming a single edge already arise in the
/// colon identity this notion characterizes.
pub fn even_connected_pairs(
    graph: &Graph,
    multiset: &[(usize, usize)],
) -> Result<Vec<(usize, usize)>> {
    let edges = normalize_multiset(graph, multiset)?;
    let mut pairs: HashSet<(usize, usize)> = HashSet::new();
    for u in 0..graph.vertex_count() {
        // States (w, usage): a walk from u ends just after a multiset edge
        // at vertex w having consumed `usage` of the multiset.
        let mut seen: HashSet<(usize, Vec<u32>)> = HashSet::new();
        let mut queue: VecDeque<(usize, Vec<u32>)> = VecDeque::new();
        let start_usage = vec![0u32; edges.len()];
        let push = |state: (usize, Vec<u32>),
                        seen: &mut HashSet<(usize, Vec<u32>)>,
                        queue: &mut VecDeque<(usize, Vec<u32>)>| {
            if seen.insert(state.clone()) {
                queue.push_back(state);
            }
        };
        for &z in graph.neighbors(u) {
            for (i, &((a, b), _)) in edges.iter().enumerate() {
                if z == a || z == b {
                    let other = if z == a { b } else { a };
                    let mut usage = start_usage.clone();
                    usage[i] = 1;
                    push((other, usage), &mut seen, &mut queue);
                }
            }
        }
        while let Some((w, usage)) = queue.pop_front() {
            for &v in graph.neighbors(w) {
                pairs.insert((u.min(v), u.max(v)));
            }
            for &z in graph.neighbors(w) {
                for (i, &((a, b), mult)) in edges.iter().enumerate() {
                    if usage[i] < mult && (z == a || z == b) {
                        let other = if z == a { b } else { a };
                        let mut next = usage.clone();
                        next[i] += 1;
                        push((other, next), &mut seen, &mut queue);
                    }
                }
            }
        }
    }
    let mut out: Vec<(usize, usize)> = pairs.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

/// The colon `(I(G)^{s+1} : e_1 ... e_s)` computed combinatorially:
/// the edge ideal plus the products of even-connected pairs.
pub fn edge_power_colon(graph: &Graph, multiset: &[(usize, usize)]) -> Result<MonomialIdeal> {
    let pairs = even_connected_pairs(graph, multiset)?;
    let ideal = edge_ideal(graph)?;
    let ring = graph.ring();
    let mut gens = ideal.gens().to_vec();
    for (u, v) in pairs {
        gens.push(ring.var(u).mul(&ring.var(v)));
    }
    Ok(MonomialIdeal::new(ring.clone(), gens))
}

/// Provenance of a stability upper bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundSource {
    /// m + 1 for any connected graph with m edges.
    ConnectedEdges,
    /// min{|Y|+1-max deg X, |X|+1-max deg Y} for connected bipartite graphs.
    BipartiteFormula,
    /// floor(n/2) for odd cycles.
    OddCycle,
    /// floor(n/2) - 1 for paths and even cycles.
    PathOrEvenCycle,
}

impl BoundSource {
    pub fn tag(&self) -> &'static str {
        match self {
            BoundSource::ConnectedEdges => "connected-m+1",
            BoundSource::BipartiteFormula => "bipartite-formula",
            BoundSource::OddCycle => "odd-cycle",
            BoundSource::PathOrEvenCycle => "path-or-even-cycle",
        }
    }
}

/// A guaranteed index t with v(I(G)^k) = 2k - 1 for all k >= t.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabBound {
    pub bound: u32,
    pub source: BoundSource,
    pub slope: u32,
    pub intercept: i64,
}

/// Minimum over the theorem-backed stability bounds that apply to the
/// graph; requires connectivity. Ties prefer the most specific source.
pub fn v_stab_upper_bound(graph: &Graph) -> Result<StabBound> {
    if graph.edge_count() == 0 {
        return Err(Error::EmptyEdgeSet);
    }
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let profile = graph.profile();
    let n = graph.vertex_count() as u32;
    // (priority, bound, source): lower priority wins ties.
    let mut candidates: Vec<(u8, u32, BoundSource)> = vec![(
        3,
        graph.edge_count() as u32 + 1,
        BoundSource::ConnectedEdges,
    )];
    if let Some((x, y)) = &profile.bipartition {
        if !x.is_empty() && !y.is_empty() {
            let max_deg = |side: &[usize]| side.iter().map(|&v| graph.degree(v)).max().unwrap();
            let via_x = y.len() + 1 - max_deg(x);
            let via_y = x.len() + 1 - max_deg(y);
            candidates.push((
                2,
                via_x.min(via_y).max(1) as u32,
                BoundSource::BipartiteFormula,
            ));
        }
    }
    match profile.cycle_shape {
        CycleShape::Path | CycleShape::EvenCycle => {
            candidates.push((0, (n / 2).saturating_sub(1).max(1), BoundSource::PathOrEvenCycle));
        }
        CycleShape::OddCycle => {
            candidates.push((1, (n / 2).max(1), BoundSource::OddCycle));
        }
        CycleShape::None => {}
    }
    let &(_, bound, source) = candidates
        .iter()
        .min_by_key(|&&(prio, bound, _)| (bound, prio))
        .unwrap();
    Ok(StabBound {
        bound,
        source,
        slope: 2,
        intercept: -1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::limits::Limits;

    fn ideal(ring: &Ring, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(
            ring.clone(),
            gens.iter().map(|e| ring.monomial(e)).collect(),
        )
    }

    #[test]
    fn edge_ideal_examples() {
        let p3 = Graph::path(3);
        let i = edge_ideal(&p3).unwrap();
        assert_eq!(i, ideal(p3.ring(), &[&[1, 1, 0], &[0, 1, 1]]));
        assert!(i.is_squarefree() && i.is_equigenerated());
        assert_eq!(i.alpha(), Some(2));

        let c8 = Graph::cycle(8);
        let i8 = edge_ideal(&c8).unwrap();
        assert_eq!(i8.num_generators(), 8);
        let wrap = c8.ring().var(7).mul(&c8.ring().var(0));
        assert!(i8.gens().contains(&wrap));

        let two_paths = Graph::new(
            vec!["x1", "x2", "x3", "x4", "x5", "x6"],
            &[(0, 1), (1, 2), (3, 4), (4, 5)],
        )
        .unwrap();
        assert_eq!(edge_ideal(&two_paths).unwrap().num_generators(), 4);

        let edgeless = Graph::new(vec!["a"], &[]).unwrap();
        assert_eq!(edge_ideal(&edgeless).unwrap_err(), Error::EmptyEdgeSet);
    }

    /// Brute-force minimal vertex covers by subset enumeration.
    fn covers_brute(graph: &Graph) -> Vec<Vec<usize>> {
        let n = graph.vertex_count();
        let mut covers: Vec<u32> = (0u32..1 << n)
            .filter(|mask| {
                graph
                    .edges()
                    .iter()
                    .all(|&(a, b)| mask & (1 << a) != 0 || mask & (1 << b) != 0)
            })
            .collect();
        let all = covers.clone();
        covers.retain(|&m| !all.iter().any(|&o| o != m && o & m == o));
        let mut out: Vec<Vec<usize>> = covers
            .iter()
            .map(|&m| (0..n).filter(|&v| m & (1 << v) != 0).collect())
            .collect();
        out.sort();
        out
    }

    #[test]
    fn cover_ideal_examples() {
        let single = Graph::new(vec!["x", "y"], &[(0, 1)]).unwrap();
        assert_eq!(
            cover_ideal(&single).unwrap(),
            ideal(single.ring(), &[&[1, 0], &[0, 1]])
        );

        for graph in [Graph::cycle(3), Graph::path(3), Graph::path(5), Graph::cycle(5)] {
            let j = cover_ideal(&graph).unwrap();
            let mut from_ideal: Vec<Vec<usize>> = j
                .gens()
                .iter()
                .map(|g| g.support().collect())
                .collect();
            from_ideal.sort();
            assert_eq!(from_ideal, covers_brute(&graph), "covers of {graph:?}");
            assert!(j.is_squarefree());
        }
        // C3: all 2-subsets; P3: x2 and x1x3.
        assert_eq!(cover_ideal(&Graph::cycle(3)).unwrap().num_generators(), 3);
        let p3 = Graph::path(3);
        assert_eq!(
            cover_ideal(&p3).unwrap(),
            ideal(p3.ring(), &[&[0, 1, 0], &[1, 0, 1]])
        );
    }

    #[test]
    fn path_ideal_examples() {
        let p7 = Graph::path(7);
        let i3 = path_ideal(&p7, 3).unwrap();
        assert_eq!(i3.num_generators(), 5);
        assert!(i3.gens().contains(&p7.ring().monomial(&[1, 1, 1, 0, 0, 0, 0])));
        assert!(i3.gens().contains(&p7.ring().monomial(&[0, 0, 0, 0, 1, 1, 1])));

        // t = 2 recovers the edge ideal.
        let c5 = Graph::cycle(5);
        assert_eq!(path_ideal(&c5, 2).unwrap(), edge_ideal(&c5).unwrap());

        // No t-path: the zero ideal.
        let two_edges = Graph::new(vec!["a", "b", "c", "d"], &[(0, 1), (2, 3)]).unwrap();
        assert!(path_ideal(&two_edges, 3).unwrap().is_zero());

        assert_eq!(path_ideal(&c5, 6).unwrap_err(), Error::InvalidPathLength);

        // I_t(P_n) has n - t + 1 generators and (I : x2...xt) = <x1, x_{t+1}>.
        for (n, t) in [(6usize, 4usize), (7, 4), (8, 4), (7, 5)] {
            let pn = Graph::path(n);
            let it = path_ideal(&pn, t).unwrap();
            assert_eq!(it.num_generators(), n - t + 1);
            let ring = pn.ring();
            let mut f = ring.one();
            for v in 1..t {
                f = f.mul(&ring.var(v));
            }
            let colon = it.colon_monomial(&f);
            assert_eq!(
                colon,
                MonomialIdeal::new(ring.clone(), vec![ring.var(0), ring.var(t)])
            );
        }
    }

    #[test]
    fn weighted_oriented_examples() {
        // Single arc (x, y) with w(y) = 2.
        let g = Graph::new(vec!["x", "y"], &[(0, 1)]).unwrap();
        let d = WeightedOrientedGraph::new(g.clone(), vec![(0, 1)], vec![1, 2]).unwrap();
        let i = weighted_oriented_edge_ideal(&d).unwrap();
        assert_eq!(i, ideal(d.underlying().ring(), &[&[1, 2]]));

        // All weights 1 recovers the edge ideal.
        let d1 = WeightedOrientedGraph::new(g.clone(), vec![(0, 1)], vec![1, 1]).unwrap();
        assert_eq!(
            weighted_oriented_edge_ideal(&d1).unwrap(),
            edge_ideal(&g).unwrap()
        );

        // Star with all edges oriented into the center, center weight w:
        // I(D) = c^w * <x_1, ..., x_t> and I(D)^k = c^{kw} <x_1,...,x_t>^k.
        let star = Graph::new(vec!["c", "u", "v", "w"], &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let d = WeightedOrientedGraph::new(
            star.clone(),
            vec![(1, 0), (2, 0), (3, 0)],
            vec![3, 1, 1, 1],
        )
        .unwrap();
        let i = weighted_oriented_edge_ideal(&d).unwrap();
        let ring = star.ring();
        assert_eq!(
            i,
            ideal(ring, &[&[3, 1, 0, 0], &[3, 0, 1, 0], &[3, 0, 0, 1]])
        );
        // v(I(D)^k) = alpha*k - 1 for the oriented star with linear resolution.
        let report = crate::vnumber::v_function(&i, 3, false, &Limits::DEFAULT).unwrap();
        for row in &report.rows {
            assert_eq!(row.v(), 4 * row.k - 1);
        }
        for k in 1..=3u32 {
            let leaves = MonomialIdeal::new(
                ring.clone(),
                vec![ring.var(1), ring.var(2), ring.var(3)],
            );
            let shifted = MonomialIdeal::new(
                ring.clone(),
                leaves
                    .power(k)
                    .unwrap()
                    .gens()
                    .iter()
                    .map(|m| m.mul(&ring.var_pow(0, 3 * k)))
                    .collect(),
            );
            assert_eq!(i.power(k).unwrap(), shifted);
        }
    }

    #[test]
    fn even_connection_examples() {
        // C5 with es = {x1x2}: (x3, x5) is the one new pair.
        let c5 = Graph::cycle(5);
        let pairs = even_connected_pairs(&c5, &[(0, 1)]).unwrap();
        assert!(pairs.contains(&(2, 4)));
        let colon = edge_power_colon(&c5, &[(0, 1)]).unwrap();
        let mut expected = edge_ideal(&c5).unwrap().gens().to_vec();
        expected.push(c5.ring().monomial(&[0, 0, 1, 0, 1]));
        assert_eq!(colon, MonomialIdeal::new(c5.ring().clone(), expected));

        // C3 with es = {x1x2}: x3 is even-connected to itself.
        let c3 = Graph::cycle(3);
        let pairs = even_connected_pairs(&c3, &[(0, 1)]).unwrap();
        assert!(pairs.contains(&(2, 2)));
        let sq = edge_ideal(&c3).unwrap().power(2).unwrap();
        let direct = sq.colon_monomial(&c3.ring().monomial(&[1, 1, 0]));
        assert!(direct.contains(&c3.ring().monomial(&[0, 0, 2])));
        assert_eq!(edge_power_colon(&c3, &[(0, 1)]).unwrap(), direct);

        // P4 with es = {x2x3}: endpoints become even-connected.
        let p4 = Graph::path(4);
        let pairs = even_connected_pairs(&p4, &[(1, 2)]).unwrap();
        assert!(pairs.contains(&(0, 3)));
    }

    #[test]
    fn edge_power_colon_matches_direct_colon() {
        let cases: Vec<(Graph, Vec<(usize, usize)>)> = vec![
            (Graph::cycle(5), vec![(0, 1)]),
            (Graph::cycle(5), vec![(0, 1), (0, 1)]),
            (Graph::cycle(3), vec![(0, 1), (1, 2)]),
            (Graph::path(6), vec![(1, 2), (3, 4)]),
            (Graph::complete(4), vec![(0, 1), (2, 3)]),
        ];
        for (graph, es) in cases {
            let i = edge_ideal(&graph).unwrap();
            let s = es.len() as u32;
            let power = i.power(s + 1).unwrap();
            let product = es.iter().fold(graph.ring().one(), |acc, &(a, b)| {
                acc.mul(&graph.ring().var(a)).mul(&graph.ring().var(b))
            });
            let direct = power.colon_monomial(&product);
            let combinatorial = edge_power_colon(&graph, &es).unwrap();
            assert_eq!(combinatorial, direct, "mismatch on {graph:?} with {es:?}");
        }
    }

    #[test]
    fn full_edge_multiset_colon_by_vertex_is_prime() {
        // With every edge in the multiset, coloning the result by a single
        // vertex yields a variable-generated prime.
        for graph in [Graph::cycle(5), Graph::path(4), Graph::complete(4), Graph::cycle(7)] {
            let colon = edge_power_colon(&graph, graph.edges()).unwrap();
            let q = colon.colon_monomial(&graph.ring().var(0));
            assert!(
                q.gens().iter().all(|g| g.degree() == 1),
                "colon by x1 not prime for {graph:?}: {q:?}"
            );
        }
    }

    #[test]
    fn repeated_edges_collapse_in_colon() {
        // (I^{m+1+s} : e1^{s+1} e2 ... em) = (I^{m+1} : e1 ... em).
        let c3 = Graph::cycle(3);
        let all: Vec<(usize, usize)> = c3.edges().to_vec();
        let base = edge_power_colon(&c3, &all).unwrap();
        for s in 1..=2 {
            let mut repeated = all.clone();
            for _ in 0..s {
                repeated.push(all[0]);
            }
            assert_eq!(edge_power_colon(&c3, &repeated).unwrap(), base);
        }
    }

    #[test]
    fn graph_profile_examples() {
        let p8 = Graph::path(8);
        let prof = p8.profile();
        assert!(prof.connected);
        assert_eq!(prof.cycle_shape, CycleShape::Path);
        let (x, y) = prof.bipartition.unwrap();
        assert_eq!((x.len(), y.len()), (4, 4));

        let c7 = Graph::cycle(7);
        let prof = c7.profile();
        assert!(prof.connected);
        assert!(prof.bipartition.is_none());
        assert_eq!(prof.cycle_shape, CycleShape::OddCycle);

        let two_paths = Graph::new(
            vec!["x1", "x2", "x3", "x4", "x5", "x6"],
            &[(0, 1), (1, 2), (3, 4), (4, 5)],
        )
        .unwrap();
        assert!(!two_paths.profile().connected);
    }

    #[test]
    fn stability_bounds() {
        for (graph, bound, source) in [
            (Graph::path(8), 3, BoundSource::PathOrEvenCycle),
            (Graph::cycle(8), 3, BoundSource::PathOrEvenCycle),
            (Graph::cycle(7), 3, BoundSource::OddCycle),
            (Graph::cycle(3), 1, BoundSource::OddCycle),
        ] {
            let b = v_stab_upper_bound(&graph).unwrap();
            assert_eq!((b.bound, b.source), (bound, source), "graph {graph:?}");
            assert_eq!((b.slope, b.intercept), (2, -1));
        }
        let disconnected = Graph::new(vec!["a", "b", "c", "d"], &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            v_stab_upper_bound(&disconnected).unwrap_err(),
            Error::Disconnected
        );
    }

    #[test]
    fn bound_validity_on_small_graphs() {
        // v(I^k) = 2k - 1 at k = bound for a few connected graphs.
        let limits = Limits::DEFAULT;
        for graph in [Graph::path(4), Graph::path(5), Graph::cycle(4), Graph::cycle(5)] {
            let b = v_stab_upper_bound(&graph).unwrap();
            let i = edge_ideal(&graph).unwrap();
            let power = i.power(b.bound).unwrap();
            let v = crate::vnumber::v_number(&power, &limits).unwrap().degree;
            assert_eq!(v as i64, 2 * b.bound as i64 - 1, "bound not tight enough on {graph:?}");
        }
    }
}
