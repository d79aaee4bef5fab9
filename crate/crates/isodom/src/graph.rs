//! Immutable simple undirected graphs with contiguous 0-based vertex ids,
//! plus the text/JSON formats and the deterministic instance generators the
//! rest of the crate is built on.
//!
//! # Edge-list text format
//!
//! ```text
//! # comments start with '#'; blank lines are ignored
//! n m
//! u v        (m lines, 0 <= u,v < n, u != v, each unordered pair at most once)
//! ```
//!
//! [`serialize_edge_list`] emits the canonical form: header line, then edges
//! as `u v` with `u < v`, sorted lexicographically, no trailing newline.
//!
//! # Random generation scheme (version 1)
//!
//! All random generators draw from `ChaCha8Rng::seed_from_u64(seed)` and
//! consume exactly one `f64` per candidate pair, in a documented order
//! (see each generator); a pair becomes an edge iff the draw is `< p`.
//! The same seed therefore reproduces the same instance on any platform.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum GraphError {
    #[error("line {line}: expected '{expected}'")]
    Malformed { line: usize, expected: &'static str },
    #[error("line {line}: vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge ({u}, {v})")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: expected {expected} edges, found {found}")]
    EdgeCountMismatch {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("invalid {family} size: {reason}")]
    InvalidSize {
        family: &'static str,
        reason: String,
    },
    #[error("probability {value} outside [0, 1]")]
    InvalidProbability { value: f64 },
    #[error("invalid bipartition: {reason}")]
    InvalidBipartition { reason: String },
    #[error("invalid split partition: {reason}")]
    InvalidSplitPartition { reason: String },
    #[error("invalid graph json: {0}")]
    Json(String),
}

/// A sorted, duplicate-free set of vertex ids; the common currency of the
/// checkers and solvers. Serializes as a plain JSON array.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn from_unsorted(mut items: Vec<usize>) -> Self {
        items.sort_unstable();
        items.dedup();
        VertexSet(items)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: usize) {
        if let Err(pos) = self.0.binary_search(&v) {
            self.0.insert(pos, v);
        }
    }

    pub fn remove(&mut self, v: usize) {
        if let Ok(pos) = self.0.binary_search(&v) {
            self.0.remove(pos);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// The set with `out` replaced by `in_` (the defender swap).
    pub fn swap(&self, out: usize, in_: usize) -> VertexSet {
        let mut s = self.clone();
        s.remove(out);
        s.insert(in_);
        s
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut items = self.0.clone();
        items.extend_from_slice(&other.0);
        VertexSet::from_unsorted(items)
    }

    /// Parse a comma-separated id list such as `1,3,5`. Empty input is the
    /// empty set.
    pub fn parse_csv(text: &str) -> Result<VertexSet, String> {
        let mut items = Vec::new();
        for part in text.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let v: usize = part
                .parse()
                .map_err(|_| format!("invalid vertex id '{part}'"))?;
            items.push(v);
        }
        Ok(VertexSet::from_unsorted(items))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet::from_unsorted(iter.into_iter().collect())
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(items: Vec<usize>) -> Self {
        VertexSet::from_unsorted(items)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, usize>>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// Finite simple undirected graph. Vertices are `0..n`; adjacency lists are
/// sorted; no self-loops or parallel edges. Immutable after construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Build a graph from an edge list, rejecting self-loops, duplicate
    /// edges and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph {
            n,
            m: 0,
            adj: vec![Vec::new(); n],
        };
        let mut seen = BTreeSet::new();
        for (idx, &(u, v)) in edges.iter().enumerate() {
            // line numbers for programmatic construction count from the
            // edge index; the text parser passes real line numbers instead
            g.add_edge_checked(u, v, idx + 1, &mut seen)?;
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    fn add_edge_checked(
        &mut self,
        u: usize,
        v: usize,
        line: usize,
        seen: &mut BTreeSet<(usize, usize)>,
    ) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange {
                line,
                vertex: u,
                n: self.n,
            });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange {
                line,
                vertex: v,
                n: self.n,
            });
        }
        if u == v {
            return Err(GraphError::SelfLoop { line, vertex: u });
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(GraphError::DuplicateEdge { line, u, v });
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.m += 1;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Sorted open neighborhood of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }
}

/// Machine-readable JSON form: `{"n": ..., "edges": [[u, v], ...]}` with the
/// canonical edge order.
#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "n": self.n, "edges": self.edges().collect::<Vec<_>>() })
    }

    pub fn from_json(text: &str) -> Result<Graph, GraphError> {
        let parsed: GraphJson =
            serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
        Graph::from_edges(parsed.n, &parsed.edges)
    }
}

/// Parse the edge-list text format. `#` starts a comment line; blank lines
/// are skipped; the first significant line is `n m`.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut graph: Option<Graph> = None;
    let mut expected_edges = 0;
    let mut found_edges = 0;
    let mut seen = BTreeSet::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_ascii_whitespace();
        match graph {
            None => {
                let n: usize = fields
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or(GraphError::Malformed {
                        line: line_no,
                        expected: "n m",
                    })?;
                let m: usize = fields
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or(GraphError::Malformed {
                        line: line_no,
                        expected: "n m",
                    })?;
                if fields.next().is_some() {
                    return Err(GraphError::Malformed {
                        line: line_no,
                        expected: "n m",
                    });
                }
                expected_edges = m;
                graph = Some(Graph {
                    n,
                    m: 0,
                    adj: vec![Vec::new(); n],
                });
            }
            Some(ref mut g) => {
                let parse2 = |f: &mut std::str::SplitAsciiWhitespace| -> Option<(usize, usize)> {
                    let u = f.next()?.parse().ok()?;
                    let v = f.next()?.parse().ok()?;
                    Some((u, v))
                };
                let (u, v) = parse2(&mut fields).ok_or(GraphError::Malformed {
                    line: line_no,
                    expected: "u v",
                })?;
                if fields.next().is_some() {
                    return Err(GraphError::Malformed {
                        line: line_no,
                        expected: "u v",
                    });
                }
                if found_edges == expected_edges {
                    return Err(GraphError::EdgeCountMismatch {
                        line: line_no,
                        expected: expected_edges,
                        found: found_edges + 1,
                    });
                }
                g.add_edge_checked(u, v, line_no, &mut seen)?;
                found_edges += 1;
            }
        }
    }

    let mut g = graph.ok_or(GraphError::Malformed {
        line: last_line + 1,
        expected: "n m",
    })?;
    if found_edges != expected_edges {
        return Err(GraphError::EdgeCountMismatch {
            line: last_line + 1,
            expected: expected_edges,
            found: found_edges,
        });
    }
    for list in &mut g.adj {
        list.sort_unstable();
    }
    Ok(g)
}

/// Canonical edge-list serialization; round-trips through
/// [`parse_edge_list`].
pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("\n{u} {v}"));
    }
    out
}

/// A two-sided partition of the vertex set with every edge crossing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    pub left: VertexSet,
    pub right: VertexSet,
}

impl Bipartition {
    pub fn validate(&self, g: &Graph) -> Result<(), GraphError> {
        let err = |reason: String| GraphError::InvalidBipartition { reason };
        check_partition(g, &self.left, &self.right).map_err(err)?;
        for (u, v) in g.edges() {
            if self.left.contains(u) == self.left.contains(v) {
                return Err(err(format!("edge ({u}, {v}) does not cross the parts")));
            }
        }
        Ok(())
    }
}

/// A clique / independent-set partition of the vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitPartition {
    pub clique: VertexSet,
    pub independent: VertexSet,
}

impl SplitPartition {
    pub fn validate(&self, g: &Graph) -> Result<(), GraphError> {
        let err = |reason: String| GraphError::InvalidSplitPartition { reason };
        check_partition(g, &self.clique, &self.independent).map_err(err)?;
        let clique: Vec<usize> = self.clique.iter().collect();
        for (i, &u) in clique.iter().enumerate() {
            for &v in &clique[i + 1..] {
                if !g.has_edge(u, v) {
                    return Err(err(format!("clique pair ({u}, {v}) is not adjacent")));
                }
            }
        }
        let ind: Vec<usize> = self.independent.iter().collect();
        for (i, &u) in ind.iter().enumerate() {
            for &v in &ind[i + 1..] {
                if g.has_edge(u, v) {
                    return Err(err(format!("independent pair ({u}, {v}) is adjacent")));
                }
            }
        }
        Ok(())
    }
}

fn check_partition(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<(), String> {
    if a.len() + b.len() != g.n() {
        return Err(format!(
            "parts cover {} vertices, graph has {}",
            a.len() + b.len(),
            g.n()
        ));
    }
    for v in a.iter() {
        if v >= g.n() {
            return Err(format!("vertex {v} out of range"));
        }
        if b.contains(v) {
            return Err(format!("vertex {v} appears in both parts"));
        }
    }
    for v in b.iter() {
        if v >= g.n() {
            return Err(format!("vertex {v} out of range"));
        }
    }
    Ok(())
}

/// Named deterministic graph families with canonical vertex numbering.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Path `0 - 1 - ... - n-1`.
    Path { n: usize },
    /// Cycle `0 - 1 - ... - n-1 - 0`.
    Cycle { n: usize },
    Complete { n: usize },
    /// Left side `0..m`, right side `m..m+n`.
    CompleteBipartite { m: usize, n: usize },
    /// Center `0`, leaves `1..=leaves`.
    Star { leaves: usize },
}

pub fn gen_family(family: Family) -> Result<Graph, GraphError> {
    let size_err = |family: &'static str, reason: &str| GraphError::InvalidSize {
        family,
        reason: reason.to_string(),
    };
    match family {
        Family::Path { n } => {
            if n < 1 {
                return Err(size_err("path", "n must be at least 1"));
            }
            let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
            Graph::from_edges(n, &edges)
        }
        Family::Cycle { n } => {
            if n < 3 {
                return Err(size_err("cycle", "n must be at least 3"));
            }
            let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            edges.push((0, n - 1));
            Graph::from_edges(n, &edges)
        }
        Family::Complete { n } => {
            if n < 1 {
                return Err(size_err("complete", "n must be at least 1"));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(n, &edges)
        }
        Family::CompleteBipartite { m, n } => {
            if m < 1 || n < 1 {
                return Err(size_err("complete_bipartite", "both sides must be nonempty"));
            }
            let mut edges = Vec::new();
            for u in 0..m {
                for v in m..m + n {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(m + n, &edges)
        }
        Family::Star { leaves } => {
            if leaves < 1 {
                return Err(size_err("star", "need at least one leaf"));
            }
            let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
            Graph::from_edges(leaves + 1, &edges)
        }
    }
}

fn check_probability(p: f64) -> Result<(), GraphError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GraphError::InvalidProbability { value: p })
    }
}

/// Random bipartite graph on sides `0..m` and `m..m+n`. Cross pairs are
/// visited as `(i, j)` for `i` in the left side then `j` in the right side,
/// both ascending; each becomes an edge independently with probability `p`.
pub fn gen_random_bipartite(
    m: usize,
    n: usize,
    p: f64,
    seed: u64,
) -> Result<(Graph, Bipartition), GraphError> {
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..m {
        for j in m..m + n {
            if rng.random::<f64>() < p {
                edges.push((i, j));
            }
        }
    }
    let g = Graph::from_edges(m + n, &edges)?;
    let bp = Bipartition {
        left: (0..m).collect(),
        right: (m..m + n).collect(),
    };
    Ok((g, bp))
}

/// Random split graph: clique `0..c` (all pairs present), independent side
/// `c..c+i`. Clique-to-independent pairs are visited as `(u, w)` for `u` in
/// the clique then `w` in the independent side, both ascending.
pub fn gen_random_split(
    c: usize,
    i: usize,
    p: f64,
    seed: u64,
) -> Result<(Graph, SplitPartition), GraphError> {
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..c {
        for v in u + 1..c {
            edges.push((u, v));
        }
    }
    for u in 0..c {
        for w in c..c + i {
            if rng.random::<f64>() < p {
                edges.push((u, w));
            }
        }
    }
    let g = Graph::from_edges(c + i, &edges)?;
    let sp = SplitPartition {
        clique: (0..c).collect(),
        independent: (c..c + i).collect(),
    };
    Ok((g, sp))
}

/// Erdős–Rényi style random graph; pairs `(u, v)` with `u < v` are visited
/// in lexicographic order.
pub fn gen_random_graph(n: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Two-color the graph if possible. Components are explored from their
/// lowest-id vertex, which is colored `left`; the edgeless graph therefore
/// comes back with every vertex in `left`.
pub fn is_bipartite(g: &Graph) -> Option<Bipartition> {
    let mut color = vec![None; g.n()];
    for start in 0..g.n() {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for &v in g.neighbors(u) {
                match color[v] {
                    None => {
                        color[v] = Some(!cu);
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let left = (0..g.n()).filter(|&v| color[v] == Some(false)).collect();
    let right = (0..g.n()).filter(|&v| color[v] == Some(true)).collect();
    Some(Bipartition { left, right })
}

/// Keep each edge independently with probability `q`; edges are visited in
/// the canonical `(u, v)` order. The vertex set is unchanged.
pub fn random_spanning_subgraph(g: &Graph, q: f64, seed: u64) -> Result<Graph, GraphError> {
    check_probability(q)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<_> = g
        .edges()
        .filter(|_| rng.random::<f64>() < q)
        .collect();
    Graph::from_edges(g.n(), &edges)
}

/// Greedy split-partition detection on the degree-descending order (ties by
/// ascending id): take the longest prefix that can form the clique, check
/// the degree identity, then validate the result. Returns `None` when the
/// graph is not split.
pub fn detect_split_partition(g: &Graph) -> Option<SplitPartition> {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let degs: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let mut h = 0;
    for i in 0..n {
        if degs[i] >= i {
            h = i + 1;
        }
    }
    let lhs: usize = degs[..h].iter().sum();
    let rhs: usize = h * (h.saturating_sub(1)) + degs[h..].iter().sum::<usize>();
    if lhs != rhs {
        return None;
    }
    let sp = SplitPartition {
        clique: order[..h].iter().copied().collect(),
        independent: order[h..].iter().copied().collect(),
    };
    sp.validate(g).ok()?;
    Some(sp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_p3() {
        let g = parse_edge_list("3 2\n0 1\n1 2").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn parse_rejects_self_loop() {
        assert_eq!(
            parse_edge_list("2 1\n0 0"),
            Err(GraphError::SelfLoop { line: 2, vertex: 0 })
        );
    }

    #[test]
    fn parse_rejects_duplicate_edge() {
        assert_eq!(
            parse_edge_list("2 2\n0 1\n1 0"),
            Err(GraphError::DuplicateEdge { line: 3, u: 1, v: 0 })
        );
    }

    #[test]
    fn parse_rejects_count_mismatch_and_range() {
        assert!(matches!(
            parse_edge_list("3 2\n0 1"),
            Err(GraphError::EdgeCountMismatch { expected: 2, found: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 1\n1 2"),
            Err(GraphError::EdgeCountMismatch { line: 3, .. })
        ));
        assert!(matches!(
            parse_edge_list("2 1\n0 5"),
            Err(GraphError::VertexOutOfRange { vertex: 5, .. })
        ));
    }

    #[test]
    fn parse_skips_comments_and_blank_lines() {
        let g = parse_edge_list("# path on three vertices\n\n3 2\n0 1\n# middle\n1 2").unwrap();
        assert_eq!(g.m(), 2);
    }

    #[test]
    fn serialize_matches_golden_forms() {
        let p3 = gen_family(Family::Path { n: 3 }).unwrap();
        assert_eq!(serialize_edge_list(&p3), "3 2\n0 1\n1 2");
        let k1 = gen_family(Family::Complete { n: 1 }).unwrap();
        assert_eq!(serialize_edge_list(&k1), "1 0");
    }

    #[test]
    fn family_sizes() {
        let p7 = gen_family(Family::Path { n: 7 }).unwrap();
        assert_eq!((p7.n(), p7.m()), (7, 6));
        let k23 = gen_family(Family::CompleteBipartite { m: 2, n: 3 }).unwrap();
        assert_eq!((k23.n(), k23.m()), (5, 6));
        let c3 = gen_family(Family::Cycle { n: 3 }).unwrap();
        let k3 = gen_family(Family::Complete { n: 3 }).unwrap();
        assert_eq!(c3, k3);
        assert!(gen_family(Family::Cycle { n: 2 }).is_err());
    }

    #[test]
    fn random_bipartite_extremes_and_determinism() {
        let (full, bp) = gen_random_bipartite(3, 3, 1.0, 42).unwrap();
        assert_eq!(full.m(), 9);
        bp.validate(&full).unwrap();
        let (empty, _) = gen_random_bipartite(3, 3, 0.0, 42).unwrap();
        assert_eq!(empty.m(), 0);
        let (a, _) = gen_random_bipartite(5, 5, 0.4, 7).unwrap();
        let (b, _) = gen_random_bipartite(5, 5, 0.4, 7).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn random_split_shape() {
        let (k3, _) = gen_random_split(3, 0, 0.5, 1).unwrap();
        assert_eq!(k3, gen_family(Family::Complete { n: 3 }).unwrap());
        let (g, sp) = gen_random_split(2, 2, 1.0, 1).unwrap();
        sp.validate(&g).unwrap();
        assert!(g.has_edge(0, 2) && g.has_edge(0, 3) && g.has_edge(1, 2) && g.has_edge(1, 3));
        for seed in 0..20 {
            let (g, sp) = gen_random_split(4, 4, 0.5, seed).unwrap();
            sp.validate(&g).unwrap();
        }
    }

    #[test]
    fn bipartite_detection() {
        let c4 = gen_family(Family::Cycle { n: 4 }).unwrap();
        let bp = is_bipartite(&c4).unwrap();
        assert_eq!(bp.left, VertexSet::from(vec![0, 2]));
        assert_eq!(bp.right, VertexSet::from(vec![1, 3]));
        let c5 = gen_family(Family::Cycle { n: 5 }).unwrap();
        assert!(is_bipartite(&c5).is_none());
        let edgeless = Graph::from_edges(3, &[]).unwrap();
        let bp = is_bipartite(&edgeless).unwrap();
        assert_eq!(bp.left.len(), 3);
    }

    #[test]
    fn spanning_subgraph_extremes() {
        let c6 = gen_family(Family::Cycle { n: 6 }).unwrap();
        assert_eq!(random_spanning_subgraph(&c6, 1.0, 3).unwrap(), c6);
        let none = random_spanning_subgraph(&c6, 0.0, 3).unwrap();
        assert_eq!((none.n(), none.m()), (6, 0));
    }

    #[test]
    fn path_is_cycle_minus_closing_edge() {
        for n in 4..10 {
            let p = gen_family(Family::Path { n }).unwrap();
            let c = gen_family(Family::Cycle { n }).unwrap();
            let trimmed: Vec<_> = c.edges().filter(|&e| e != (0, n - 1)).collect();
            assert_eq!(Graph::from_edges(n, &trimmed).unwrap(), p);
        }
    }

    #[test]
    fn split_detection_examples() {
        let (g, sp) = gen_random_split(3, 3, 0.6, 11).unwrap();
        let detected = detect_split_partition(&g).expect("split graph detected");
        detected.validate(&g).unwrap();
        assert_eq!(sp.clique.len() + sp.independent.len(), g.n());
        let c4 = gen_family(Family::Cycle { n: 4 }).unwrap();
        assert!(detect_split_partition(&c4).is_none());
        let c5 = gen_family(Family::Cycle { n: 5 }).unwrap();
        assert!(detect_split_partition(&c5).is_none());
    }

    #[test]
    fn json_roundtrip() {
        let g = gen_family(Family::CompleteBipartite { m: 2, n: 3 }).unwrap();
        let text = g.to_json().to_string();
        assert_eq!(Graph::from_json(&text).unwrap(), g);
        assert!(Graph::from_json("{\"n\":2,\"edges\":[[0,0]]}").is_err());
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..10).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            let len = pairs.len();
            proptest::collection::vec(proptest::bool::ANY, len).prop_map(move |mask| {
                let edges: Vec<_> = pairs
                    .iter()
                    .zip(&mask)
                    .filter(|(_, &keep)| keep)
                    .map(|(&e, _)| e)
                    .collect();
                Graph::from_edges(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn edge_list_roundtrip(g in arb_graph()) {
            let text = serialize_edge_list(&g);
            prop_assert_eq!(parse_edge_list(&text).unwrap(), g);
        }

        #[test]
        fn adjacency_symmetric_and_degree_sum(g in arb_graph()) {
            let mut total = 0;
            for u in g.vertices() {
                for &v in g.neighbors(u) {
                    prop_assert!(g.has_edge(v, u));
                    prop_assert_ne!(u, v);
                }
                total += g.degree(u);
            }
            prop_assert_eq!(total, 2 * g.m());
        }

        #[test]
        fn spanning_subgraph_edges_are_subset(g in arb_graph(), q in 0.0f64..=1.0, seed in 0u64..100) {
            let sub = random_spanning_subgraph(&g, q, seed).unwrap();
            prop_assert_eq!(sub.n(), g.n());
            for (u, v) in sub.edges() {
                prop_assert!(g.has_edge(u, v));
            }
        }
    }
}
