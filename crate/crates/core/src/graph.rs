//! Simple graphs, chordality, and the edge-sequence ideals `I_{G,a,b}`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::decomposition::{height, is_height_unmixed, standard_primary_decomposition};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::ring::AmbientRing;

/// Undirected graph without loops or multiple edges. Vertex labels double as
/// the variable names of the rings built from the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    vertices: AmbientRing,
    adj: Vec<BTreeSet<usize>>,
}

impl SimpleGraph {
    pub fn new(vertices: AmbientRing) -> Self {
        let n = vertices.len();
        SimpleGraph { vertices, adj: vec![BTreeSet::new(); n] }
    }

    /// Graph on `x1, ..., xn`.
    pub fn indexed(n: usize) -> Result<Self> {
        Ok(Self::new(AmbientRing::indexed("x", n)?))
    }

    pub fn from_edges(vertices: AmbientRing, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(vertices);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.len();
        if u >= n || v >= n {
            return Err(Error::domain(format!("edge {{{u}, {v}}} leaves the vertex set")));
        }
        if u == v {
            return Err(Error::domain("loops are not allowed"));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> &AmbientRing {
        &self.vertices
    }

    pub fn label(&self, v: usize) -> &str {
        self.vertices.name(v)
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.len()).flat_map(|u| self.adj[u].iter().filter(move |&&v| v > u).map(move |&v| (u, v))).collect()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn complement(&self) -> SimpleGraph {
        let n = self.len();
        let adj = (0..n).map(|u| (0..n).filter(|&v| v != u && !self.adj[u].contains(&v)).collect()).collect();
        SimpleGraph { vertices: self.vertices.clone(), adj }
    }

    /// Maximum cardinality search; returns vertices in visiting order.
    /// Ties go to the smallest index.
    pub fn maximum_cardinality_search(&self) -> Vec<usize> {
        let n = self.len();
        let mut weight = vec![0usize; n];
        let mut visited = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !visited[v])
                .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
                .expect("an unvisited vertex remains");
            visited[v] = true;
            order.push(v);
            for &w in &self.adj[v] {
                if !visited[w] {
                    weight[w] += 1;
                }
            }
        }
        order
    }

    /// Checks that every vertex's later neighbours in `order` form a clique.
    pub fn is_perfect_elimination_ordering(&self, order: &[usize]) -> bool {
        let n = self.len();
        if order.len() != n {
            return false;
        }
        let mut pos = vec![usize::MAX; n];
        for (p, &v) in order.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return false;
            }
            pos[v] = p;
        }
        order.iter().enumerate().all(|(p, &v)| {
            let later: Vec<usize> = self.adj[v].iter().copied().filter(|&w| pos[w] > p).collect();
            later.iter().enumerate().all(|(k, &a)| later[k + 1..].iter().all(|&b| self.has_edge(a, b)))
        })
    }

    /// Chordality with a certificate: a perfect elimination ordering, or an
    /// induced cycle of length at least four.
    pub fn chordality(&self) -> Chordality {
        let mut peo = self.maximum_cardinality_search();
        peo.reverse();
        if self.peo_parent_check(&peo) {
            debug_assert!(self.is_perfect_elimination_ordering(&peo));
            return Chordality::Chordal { peo };
        }
        let cycle = self.find_induced_cycle().expect("a graph failing the elimination check has a chordless cycle");
        Chordality::NotChordal { cycle }
    }

    pub fn is_chordal(&self) -> bool {
        self.chordality().is_chordal()
    }

    pub fn is_cochordal(&self) -> bool {
        self.complement().is_chordal()
    }

    // Linear-time test: each vertex's later neighbours, minus the earliest of
    // them, must be adjacent to that earliest one.
    fn peo_parent_check(&self, order: &[usize]) -> bool {
        let n = self.len();
        let mut pos = vec![0; n];
        for (p, &v) in order.iter().enumerate() {
            pos[v] = p;
        }
        for (p, &v) in order.iter().enumerate() {
            let later: Vec<usize> = self.adj[v].iter().copied().filter(|&w| pos[w] > p).collect();
            if let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) {
                if later.iter().any(|&w| w != parent && !self.has_edge(parent, w)) {
                    return false;
                }
            }
        }
        true
    }

    /// Some chordless cycle of length ≥ 4, if there is one. For every vertex
    /// `v` and non-adjacent neighbours `u`, `w`, a shortest `u`–`w` path
    /// avoiding the rest of `N[v]` closes such a cycle.
    pub fn find_induced_cycle(&self) -> Option<Vec<usize>> {
        let n = self.len();
        for v in 0..n {
            let nbrs: Vec<usize> = self.adj[v].iter().copied().collect();
            for (k, &u) in nbrs.iter().enumerate() {
                for &w in &nbrs[k + 1..] {
                    if self.has_edge(u, w) {
                        continue;
                    }
                    let mut blocked = vec![false; n];
                    blocked[v] = true;
                    for &x in &nbrs {
                        blocked[x] = x != u && x != w;
                    }
                    if let Some(path) = self.shortest_path(u, w, &blocked) {
                        let mut cycle = vec![v];
                        cycle.extend(path);
                        return Some(cycle);
                    }
                }
            }
        }
        None
    }

    fn shortest_path(&self, from: usize, to: usize, blocked: &[bool]) -> Option<Vec<usize>> {
        let n = self.len();
        let mut prev = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([from]);
        seen[from] = true;
        while let Some(x) = queue.pop_front() {
            if x == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for &y in &self.adj[x] {
                if !seen[y] && !blocked[y] {
                    seen[y] = true;
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        None
    }

    /// Checks that `cycle` is an induced cycle of length ≥ 4.
    pub fn is_induced_cycle(&self, cycle: &[usize]) -> bool {
        let k = cycle.len();
        if k < 4 || cycle.iter().collect::<BTreeSet<_>>().len() != k {
            return false;
        }
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if self.has_edge(cycle[i], cycle[j]) != consecutive {
                    return false;
                }
            }
        }
        true
    }

    /// Graphviz rendering.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.len() {
            let _ = writeln!(out, "  \"{}\";", self.label(v));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  \"{}\" -- \"{}\";", self.label(u), self.label(v));
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chordality {
    Chordal { peo: Vec<usize> },
    NotChordal { cycle: Vec<usize> },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }
}

/// Squarefree ideal generated by `x_u x_v` over the edges.
pub fn edge_ideal(graph: &SimpleGraph) -> MonomialIdeal {
    let n = graph.len();
    let gens = graph.edges().into_iter().map(|(u, v)| Monomial::from_support(n, [u, v])).collect();
    MonomialIdeal::new(graph.vertices(), gens).expect("edge monomials match the vertex ring")
}

/// A graph with an ordering of its edges `{x_{i_l}, x_{j_l}}`, each oriented,
/// and exponent sequences `a`, `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeSequenceData {
    graph: SimpleGraph,
    edges: Vec<(usize, usize)>,
    a: Vec<u32>,
    b: Vec<u32>,
}

impl EdgeSequenceData {
    /// Builds the data on `vertices`; the graph is spanned by `edges`.
    pub fn new(vertices: AmbientRing, edges: Vec<(usize, usize)>, a: Vec<u32>, b: Vec<u32>) -> Result<Self> {
        if a.len() != edges.len() || b.len() != edges.len() {
            return Err(Error::domain("sequences a and b need one entry per edge"));
        }
        if a.iter().chain(&b).any(|&e| e == 0) {
            return Err(Error::domain("entries of a and b must be positive"));
        }
        let mut seen = BTreeSet::new();
        for &(i, j) in &edges {
            if !seen.insert((i.min(j), i.max(j))) {
                return Err(Error::domain(format!("duplicate edge {{{}, {}}}", i + 1, j + 1)));
            }
        }
        let graph = SimpleGraph::from_edges(vertices, &edges)?;
        Ok(EdgeSequenceData { graph, edges, a, b })
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn a(&self) -> &[u32] {
        &self.a
    }

    pub fn b(&self) -> &[u32] {
        &self.b
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// `I_{G,a,b} = ⋂_l (x_{i_l}^{a_l}, x_{j_l}^{b_l})`.
    pub fn build_ideal(&self) -> MonomialIdeal {
        let ring = self.graph.vertices();
        let n = ring.len();
        let mut ideal = MonomialIdeal::unit(ring);
        for (l, &(i, j)) in self.edges.iter().enumerate() {
            let q =
                MonomialIdeal::new(ring, vec![Monomial::var_pow(n, i, self.a[l]), Monomial::var_pow(n, j, self.b[l])])
                    .expect("same ring");
            ideal = ideal.intersect(&q).expect("same ring");
        }
        ideal
    }

    /// `G(a,b)`: for each edge a complete bipartite block between copies
    /// `1..=a_l` of `x_{i_l}` and copies `1..=b_l` of `x_{j_l}`. Only copies
    /// occurring in some block become vertices, named `<label>_<copy>`.
    pub fn intersection_graph(&self) -> Result<SimpleGraph> {
        let mut copies = BTreeSet::new();
        for (l, &(i, j)) in self.edges.iter().enumerate() {
            copies.extend((1..=self.a[l]).map(|p| (i, p)));
            copies.extend((1..=self.b[l]).map(|q| (j, q)));
        }
        let copies: Vec<(usize, u32)> = copies.into_iter().collect();
        let index = |v: (usize, u32)| copies.binary_search(&v).expect("copy was registered");
        let names = copies.iter().map(|&(i, p)| format!("{}_{}", self.graph.label(i), p));
        let mut g = SimpleGraph::new(AmbientRing::new(names)?);
        for (l, &(i, j)) in self.edges.iter().enumerate() {
            for p in 1..=self.a[l] {
                for q in 1..=self.b[l] {
                    g.add_edge(index((i, p)), index((j, q)))?;
                }
            }
        }
        Ok(g)
    }
}

/// Why an unmixed height-two ideal is not of the form `I_{G,a,b}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecoveryObstruction {
    pub radical: Vec<usize>,
    pub component: MonomialIdeal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recovery {
    Data(EdgeSequenceData),
    Obstructed(RecoveryObstruction),
}

/// Reads `(G, a, b)` off the standard primary decomposition. Each radical
/// `{x_i, x_j}` is oriented with `i < j`.
pub fn recover_data(ideal: &MonomialIdeal) -> Result<Recovery> {
    if height(ideal)? != 2 {
        return Err(Error::domain(format!("{ideal} does not have height two")));
    }
    if !is_height_unmixed(ideal)? {
        return Err(Error::domain(format!("{ideal} has embedded or higher-height primes")));
    }
    let spd = standard_primary_decomposition(ideal)?;
    let mut edges = Vec::new();
    let mut a = Vec::new();
    let mut b = Vec::new();
    for comp in &spd.components {
        let vars: Vec<usize> = comp.radical.iter().copied().collect();
        let gens = comp.ideal.gens();
        let pure = gens.len() == 2 && gens.iter().all(|g| g.pure_power_var().is_some());
        if !pure {
            return Ok(Recovery::Obstructed(RecoveryObstruction { radical: vars, component: comp.ideal.clone() }));
        }
        let (i, j) = (vars[0], vars[1]);
        let exp = |v: usize| gens.iter().map(|g| g.exponent(v)).max().unwrap_or(0);
        edges.push((i, j));
        a.push(exp(i));
        b.push(exp(j));
    }
    Ok(Recovery::Data(EdgeSequenceData::new(ideal.ring().clone(), edges, a, b)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> SimpleGraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimpleGraph::from_edges(AmbientRing::indexed("x", n).unwrap(), &edges).unwrap()
    }

    fn path3() -> EdgeSequenceData {
        EdgeSequenceData::new(AmbientRing::indexed("x", 3).unwrap(), vec![(0, 1), (1, 2)], vec![1, 1], vec![1, 1])
            .unwrap()
    }

    #[test]
    fn complement_examples() {
        let c4 = cycle(4);
        let co = c4.complement();
        assert_eq!(co.edges(), vec![(0, 2), (1, 3)]);
        assert_eq!(co.complement(), c4);
        let k3 = cycle(3);
        assert_eq!(k3.complement().num_edges(), 0);
    }

    #[test]
    fn chordality_examples() {
        match cycle(4).chordality() {
            Chordality::NotChordal { cycle: c } => {
                assert_eq!(c.len(), 4);
                assert!(cycle(4).is_induced_cycle(&c));
            }
            other => panic!("C4 reported chordal: {other:?}"),
        }
        let tree =
            SimpleGraph::from_edges(AmbientRing::indexed("x", 5).unwrap(), &[(0, 1), (0, 2), (2, 3), (2, 4)]).unwrap();
        assert!(tree.is_chordal());
        let mut c4_chord = cycle(4);
        c4_chord.add_edge(0, 2).unwrap();
        match c4_chord.chordality() {
            Chordality::Chordal { peo } => assert!(c4_chord.is_perfect_elimination_ordering(&peo)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn cochordality_examples() {
        assert!(cycle(4).is_cochordal());
        assert!(!cycle(5).is_cochordal());
        let p3 = path3();
        assert!(p3.graph().is_cochordal());
    }

    #[test]
    fn build_ideal_examples() {
        assert_eq!(path3().build_ideal().generator_strings(), ["x2", "x1*x3"]);
        let r = AmbientRing::indexed("x", 2).unwrap();
        let e = EdgeSequenceData::new(r.clone(), vec![(0, 1)], vec![2], vec![1]).unwrap();
        assert_eq!(e.build_ideal().generator_strings(), ["x2", "x1^2"]);
        let e = EdgeSequenceData::new(r, vec![(0, 1)], vec![2], vec![3]).unwrap();
        assert_eq!(e.build_ideal().generator_strings(), ["x1^2", "x2^3"]);
    }

    #[test]
    fn rejects_bad_sequences() {
        let r = AmbientRing::indexed("x", 2).unwrap();
        assert!(EdgeSequenceData::new(r.clone(), vec![(0, 1), (1, 0)], vec![1, 1], vec![1, 1]).is_err());
        assert!(EdgeSequenceData::new(r.clone(), vec![(0, 1)], vec![0], vec![1]).is_err());
        assert!(EdgeSequenceData::new(r, vec![(0, 0)], vec![1], vec![1]).is_err());
    }

    #[test]
    fn intersection_graph_examples() {
        let r = AmbientRing::indexed("x", 2).unwrap();
        let e = EdgeSequenceData::new(r, vec![(0, 1)], vec![2], vec![1]).unwrap();
        let g = e.intersection_graph().unwrap();
        assert_eq!(g.vertices().names(), ["x1_1", "x1_2", "x2_1"]);
        assert_eq!(g.edges(), vec![(0, 2), (1, 2)]);

        let g = path3().intersection_graph().unwrap();
        assert_eq!(g.vertices().names(), ["x1_1", "x2_1", "x3_1"]);
        assert_eq!(g.edges(), path3().graph().edges());

        let e =
            EdgeSequenceData::new(AmbientRing::indexed("x", 3).unwrap(), vec![(0, 1), (1, 2)], vec![1, 1], vec![2, 1])
                .unwrap();
        let g = e.intersection_graph().unwrap();
        let named: Vec<(String, String)> =
            g.edges().into_iter().map(|(u, v)| (g.label(u).to_string(), g.label(v).to_string())).collect();
        let expect = [("x1_1", "x2_1"), ("x1_1", "x2_2"), ("x2_1", "x3_1")];
        assert_eq!(named.len(), 3);
        for (u, v) in expect {
            assert!(named.contains(&(u.to_string(), v.to_string())), "missing {u}-{v}");
        }
    }

    #[test]
    fn recover_examples() {
        let r3 = AmbientRing::indexed("x", 3).unwrap();
        let i = MonomialIdeal::from_exponents(&r3, &[&[0, 1, 0], &[1, 0, 1]]).unwrap();
        match recover_data(&i).unwrap() {
            Recovery::Data(d) => {
                assert_eq!(d.edges(), &[(0, 1), (1, 2)]);
                assert_eq!(d.a(), &[1, 1]);
                assert_eq!(d.b(), &[1, 1]);
                assert_eq!(d.build_ideal(), i);
            }
            other => panic!("{other:?}"),
        }
        let r2 = AmbientRing::new(["x", "y"]).unwrap();
        let m2 = MonomialIdeal::from_exponents(&r2, &[&[2, 0], &[1, 1], &[0, 2]]).unwrap();
        match recover_data(&m2).unwrap() {
            Recovery::Obstructed(o) => assert_eq!(o.component, m2),
            other => panic!("{other:?}"),
        }
        let r = AmbientRing::indexed("x", 2).unwrap();
        let ci = MonomialIdeal::from_exponents(&r, &[&[2, 0], &[0, 1]]).unwrap();
        match recover_data(&ci).unwrap() {
            Recovery::Data(d) => assert_eq!((d.a(), d.b()), (&[2][..], &[1][..])),
            other => panic!("{other:?}"),
        }
        let h1 = MonomialIdeal::from_exponents(&r, &[&[2, 0], &[1, 1]]).unwrap();
        assert!(recover_data(&h1).is_err());
    }

    #[test]
    fn edge_ideal_examples() {
        let g = SimpleGraph::from_edges(AmbientRing::indexed("x", 2).unwrap(), &[(0, 1)]).unwrap();
        assert_eq!(edge_ideal(&g).generator_strings(), ["x1*x2"]);
        assert_eq!(edge_ideal(&cycle(4)).num_gens(), 4);
        assert!(edge_ideal(&SimpleGraph::indexed(3).unwrap()).is_zero());
    }

    #[test]
    fn dot_output() {
        let dot = cycle(3).to_dot();
        assert!(dot.starts_with("graph G {"));
        assert!(dot.contains("\"x1\" -- \"x2\";"));
    }
}
