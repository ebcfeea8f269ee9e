//! k-uniform hypergraphs: canonical storage, the HGF text format,
//! degree and connectivity queries, core-vertex edge deletion, and
//! power hypergraphs.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A k-uniform hypergraph on vertices `0..n`.
///
/// Canonical form: every edge is a sorted k-subset and the edge list is
/// sorted lexicographically with no duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    k: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
}

/// Vertex degrees of a hypergraph. The entries always sum to `k * m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence(pub Vec<u64>);

/// Result of deleting an edge together with its core vertices.
///
/// The paper silently identifies `V(H-e)` with a subset of `V(H)`; here
/// the renumbering is explicit. `new_to_old[v]` is the original label of
/// the surviving vertex `v`, and `old_to_new[u]` is `None` exactly for
/// the deleted core vertices.
#[derive(Debug, Clone)]
pub struct EdgeDeletion {
    pub sub: Hypergraph,
    pub new_to_old: Vec<usize>,
    pub old_to_new: Vec<Option<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HypergraphError {
    /// Edge arity differs from k (line number when parsing, 0 otherwise).
    WrongArity { line: usize },
    /// A vertex index is outside `0..n`.
    VertexOutOfRange { line: usize, vertex: usize },
    /// The same vertex occurs twice within one edge.
    DuplicateVertexInEdge { line: usize },
    /// The same edge occurs twice.
    DuplicateEdge { line: usize },
    /// Malformed HGF input.
    Parse { line: usize, msg: String },
    /// The edge passed to a deletion operation is not in the hypergraph.
    NoSuchEdge,
    /// A power hypergraph was requested from a non-2-uniform input.
    NotTwoUniform,
    InvalidK,
}

impl fmt::Display for HypergraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::WrongArity { line } => write!(f, "line {line}: edge arity differs from k"),
            Self::VertexOutOfRange { line, vertex } => {
                write!(f, "line {line}: vertex {} out of range", vertex + 1)
            }
            Self::DuplicateVertexInEdge { line } => {
                write!(f, "line {line}: duplicate vertex within an edge")
            }
            Self::DuplicateEdge { line } => write!(f, "line {line}: duplicate edge"),
            Self::Parse { line, msg } => write!(f, "line {line}: {msg}"),
            Self::NoSuchEdge => write!(f, "edge is not in the hypergraph"),
            Self::NotTwoUniform => write!(f, "input hypergraph must be 2-uniform"),
            Self::InvalidK => write!(f, "edge cardinality k must be at least 2"),
        }
    }
}

impl core::error::Error for HypergraphError {}

impl Hypergraph {
    /// Builds a hypergraph in canonical form, validating every edge.
    pub fn new(k: usize, n: usize, edges: Vec<Vec<usize>>) -> Result<Self, HypergraphError> {
        Self::new_at(k, n, edges, 0)
    }

    fn new_at(
        k: usize,
        n: usize,
        edges: Vec<Vec<usize>>,
        line0: usize,
    ) -> Result<Self, HypergraphError> {
        if k < 2 {
            return Err(HypergraphError::InvalidK);
        }
        let mut canon: Vec<Vec<usize>> = Vec::with_capacity(edges.len());
        for (i, e) in edges.into_iter().enumerate() {
            let line = line0 + i;
            if e.len() != k {
                return Err(HypergraphError::WrongArity { line });
            }
            let mut e = e;
            e.sort_unstable();
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(HypergraphError::DuplicateVertexInEdge { line });
            }
            if let Some(&v) = e.last() {
                if v >= n {
                    return Err(HypergraphError::VertexOutOfRange { line, vertex: v });
                }
            }
            canon.push(e);
        }
        canon.sort();
        if canon.windows(2).any(|w| w[0] == w[1]) {
            return Err(HypergraphError::DuplicateEdge { line: line0 });
        }
        Ok(Self { k, n, edges: canon })
    }

    /// Parses the HGF text format: line 1 is `k n m`, each of the next
    /// `m` lines lists the k 1-based vertices of one edge. Lines starting
    /// with `#` are ignored.
    pub fn parse_hgf(text: &str) -> Result<Self, HypergraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(HypergraphError::Parse {
            line: 1,
            msg: String::from("empty input"),
        })?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        if parts.len() != 3 {
            return Err(HypergraphError::Parse {
                line: hline,
                msg: String::from("header must be `k n m`"),
            });
        }
        let parse_num = |s: &str, line: usize| -> Result<usize, HypergraphError> {
            s.parse().map_err(|_| HypergraphError::Parse {
                line,
                msg: format!("invalid number `{s}`"),
            })
        };
        let k = parse_num(parts[0], hline)?;
        let n = parse_num(parts[1], hline)?;
        let m = parse_num(parts[2], hline)?;
        let mut edges = Vec::with_capacity(m);
        let mut last_line = hline;
        for _ in 0..m {
            let (line, l) = lines.next().ok_or(HypergraphError::Parse {
                line: last_line,
                msg: format!("expected {m} edge lines"),
            })?;
            last_line = line;
            let mut edge = Vec::with_capacity(k);
            for tok in l.split_whitespace() {
                let v = parse_num(tok, line)?;
                if v == 0 {
                    return Err(HypergraphError::VertexOutOfRange { line, vertex: n });
                }
                edge.push(v - 1);
            }
            if edge.len() != k {
                return Err(HypergraphError::WrongArity { line });
            }
            if edge.iter().any(|&v| v >= n) {
                let v = *edge.iter().find(|&&v| v >= n).unwrap();
                return Err(HypergraphError::VertexOutOfRange { line, vertex: v });
            }
            let mut sorted = edge.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(HypergraphError::DuplicateVertexInEdge { line });
            }
            edges.push(edge);
        }
        if let Some((line, _)) = lines.next() {
            return Err(HypergraphError::Parse {
                line,
                msg: String::from("trailing content after last edge"),
            });
        }
        Self::new_at(k, n, edges, hline + 1)
    }

    /// Serializes to HGF (canonical form, 1-based labels).
    pub fn to_hgf(&self) -> String {
        let mut out = format!("{} {} {}\n", self.k, self.n, self.edges.len());
        for e in &self.edges {
            let labels: Vec<String> = e.iter().map(|v| format!("{}", v + 1)).collect();
            out.push_str(&labels.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn has_edge(&self, e: &[usize]) -> bool {
        let mut e = e.to_vec();
        e.sort_unstable();
        self.edges.binary_search(&e).is_ok()
    }

    /// Degree of every vertex.
    pub fn degrees(&self) -> DegreeSequence {
        let mut d = vec![0u64; self.n];
        for e in &self.edges {
            for &v in e {
                d[v] += 1;
            }
        }
        DegreeSequence(d)
    }

    /// Exact power sum of the degree sequence, `sum_i d_i^s`.
    pub fn degree_power_sum(&self, s: u32) -> num_bigint::BigInt {
        use num_bigint::BigInt;
        let mut acc = BigInt::from(0);
        for &d in &self.degrees().0 {
            acc += BigInt::from(d).pow(s);
        }
        acc
    }

    /// True iff the vertex-edge incidence graph is connected on all n
    /// vertices. The empty hypergraph on a single vertex is connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let comp = self.component_labels();
        comp.iter().all(|&c| c == 0)
    }

    /// Component index per vertex, numbered by first occurrence.
    pub fn component_labels(&self) -> Vec<usize> {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (ei, e) in self.edges.iter().enumerate() {
            for &v in e {
                adj[v].push(ei);
            }
        }
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp[start] = next;
            while let Some(v) = stack.pop() {
                for &ei in &adj[v] {
                    for &u in &self.edges[ei] {
                        if comp[u] == usize::MAX {
                            comp[u] = next;
                            stack.push(u);
                        }
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// Vertex-induced sub-hypergraphs, one per connected component,
    /// each with its renumbering back to the original labels.
    pub fn components(&self) -> Vec<(Hypergraph, Vec<usize>)> {
        let comp = self.component_labels();
        let ncomp = comp.iter().copied().max().map_or(0, |c| c + 1);
        let mut out = Vec::with_capacity(ncomp);
        for c in 0..ncomp {
            let new_to_old: Vec<usize> = (0..self.n).filter(|&v| comp[v] == c).collect();
            let mut old_to_new = vec![usize::MAX; self.n];
            for (nv, &ov) in new_to_old.iter().enumerate() {
                old_to_new[ov] = nv;
            }
            let edges: Vec<Vec<usize>> = self
                .edges
                .iter()
                .filter(|e| comp[e[0]] == c)
                .map(|e| e.iter().map(|&v| old_to_new[v]).collect())
                .collect();
            let sub = Hypergraph::new(self.k, new_to_old.len(), edges)
                .expect("component of a valid hypergraph is valid");
            out.push((sub, new_to_old));
        }
        out
    }

    /// Vertices of degree one.
    pub fn core_vertices(&self) -> Vec<usize> {
        self.degrees()
            .0
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d == 1)
            .map(|(v, _)| v)
            .collect()
    }

    /// Deletes edge `e` together with all core vertices it contains;
    /// surviving vertices are renumbered consecutively.
    pub fn remove_edge_with_cores(&self, e: &[usize]) -> Result<EdgeDeletion, HypergraphError> {
        let mut target = e.to_vec();
        target.sort_unstable();
        let pos = self
            .edges
            .binary_search(&target)
            .map_err(|_| HypergraphError::NoSuchEdge)?;
        let degs = self.degrees().0;
        let deleted: Vec<usize> = target.iter().copied().filter(|&v| degs[v] == 1).collect();
        let mut old_to_new = vec![None; self.n];
        let mut new_to_old = Vec::with_capacity(self.n - deleted.len());
        for v in 0..self.n {
            if deleted.binary_search(&v).is_err() {
                old_to_new[v] = Some(new_to_old.len());
                new_to_old.push(v);
            }
        }
        let edges: Vec<Vec<usize>> = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != pos)
            .map(|(_, e)| e.iter().map(|&v| old_to_new[v].unwrap()).collect())
            .collect();
        let sub = Hypergraph::new(self.k, new_to_old.len(), edges)?;
        Ok(EdgeDeletion {
            sub,
            new_to_old,
            old_to_new,
        })
    }

    /// The k-th power of a graph: each edge `{i, j}` is padded with
    /// `k - 2` fresh core vertices. New vertices are numbered `n`,
    /// `n + 1`, ... in lexicographic edge order, so core vertex `t` of
    /// edge index `ei` is `n + ei * (k - 2) + t`.
    pub fn power(&self, k_target: usize) -> Result<Hypergraph, HypergraphError> {
        if self.k != 2 {
            return Err(HypergraphError::NotTwoUniform);
        }
        if k_target < 3 {
            return Err(HypergraphError::InvalidK);
        }
        let pad = k_target - 2;
        let mut edges = Vec::with_capacity(self.edges.len());
        for (ei, e) in self.edges.iter().enumerate() {
            let mut big = e.clone();
            for t in 0..pad {
                big.push(self.n + ei * pad + t);
            }
            edges.push(big);
        }
        Hypergraph::new(k_target, self.n + pad * self.edges.len(), edges)
    }

    // Small named graphs, used by tests and the CLI corpus.

    /// Path on n vertices (2-uniform).
    pub fn path(n: usize) -> Hypergraph {
        let edges = (0..n.saturating_sub(1)).map(|i| vec![i, i + 1]).collect();
        Hypergraph::new(2, n, edges).unwrap()
    }

    /// Cycle on n >= 3 vertices (2-uniform).
    pub fn cycle(n: usize) -> Hypergraph {
        assert!(n >= 3);
        let edges = (0..n).map(|i| vec![i, (i + 1) % n]).collect();
        Hypergraph::new(2, n, edges).unwrap()
    }

    /// Star on n vertices: center 0 (2-uniform).
    pub fn star(n: usize) -> Hypergraph {
        assert!(n >= 2);
        let edges = (1..n).map(|i| vec![0, i]).collect();
        Hypergraph::new(2, n, edges).unwrap()
    }

    /// Complete k-uniform hypergraph on n vertices (all k-subsets).
    pub fn complete(k: usize, n: usize) -> Hypergraph {
        let mut edges = Vec::new();
        let mut cur: Vec<usize> = (0..k).collect();
        if k <= n {
            loop {
                edges.push(cur.clone());
                // next combination
                let mut i = k;
                loop {
                    if i == 0 {
                        return Hypergraph::new(k, n, edges).unwrap();
                    }
                    i -= 1;
                    if cur[i] < n - (k - i) {
                        cur[i] += 1;
                        for j in i + 1..k {
                            cur[j] = cur[j - 1] + 1;
                        }
                        break;
                    }
                }
            }
        }
        Hypergraph::new(k, n, edges).unwrap()
    }

    /// Single k-edge on k vertices.
    pub fn single_edge(k: usize) -> Hypergraph {
        Hypergraph::new(k, k, vec![(0..k).collect()]).unwrap()
    }
}

impl DegreeSequence {
    pub fn is_regular(&self) -> Option<u64> {
        let first = *self.0.first()?;
        self.0.iter().all(|&d| d == first).then_some(first)
    }

    pub fn max(&self) -> u64 {
        self.0.iter().copied().max().unwrap_or(0)
    }
}
