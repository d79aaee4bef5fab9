//! Exact minimization for the four domination variants: ordered brute force
//! (the reference oracle, canonical witnesses) and branch-and-bound (the
//! workhorse, no vertex cap).

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::bits::Bits;
use crate::certify::{self, CheckReport};
use crate::graph::{Graph, VertexSet};

/// Brute-force enumeration refuses graphs above this vertex count unless a
/// caller raises the limit explicitly.
pub const DEFAULT_ORACLE_LIMIT: usize = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph has {n} vertices, brute-force oracle limit is {limit}")]
    OracleLimitExceeded { n: usize, limit: usize },
}

/// The four set properties being minimized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ProblemKind {
    Ds,
    Sds,
    Ids,
    Isds,
}

impl ProblemKind {
    pub const ALL: [ProblemKind; 4] = [
        ProblemKind::Ds,
        ProblemKind::Sds,
        ProblemKind::Ids,
        ProblemKind::Isds,
    ];

    /// `(secure, isolate)` requirements of the kind.
    fn flags(self) -> (bool, bool) {
        match self {
            ProblemKind::Ds => (false, false),
            ProblemKind::Sds => (true, false),
            ProblemKind::Ids => (false, true),
            ProblemKind::Isds => (true, true),
        }
    }

    /// The checker this kind binds to.
    pub fn check(self, g: &Graph, s: &VertexSet) -> CheckReport {
        match self {
            ProblemKind::Ds => certify::is_dominating(g, s),
            ProblemKind::Sds => certify::is_secure_dominating_naive(g, s),
            ProblemKind::Ids => certify::is_isolate_dominating(g, s),
            ProblemKind::Isds => certify::is_isolate_secure_dominating(g, s),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ProblemKind::Ds => "ds",
            ProblemKind::Sds => "sds",
            ProblemKind::Ids => "ids",
            ProblemKind::Isds => "isds",
        }
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for ProblemKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ds" => Ok(ProblemKind::Ds),
            "sds" => Ok(ProblemKind::Sds),
            "ids" => Ok(ProblemKind::Ids),
            "isds" => Ok(ProblemKind::Isds),
            other => Err(format!("unknown problem kind '{other}'")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveStatus {
    Optimal,
    Infeasible,
    /// Only produced by [`solve_bnb`] when an upper bound was supplied:
    /// nothing within the bound, feasibility above it undecided.
    NoSolutionWithinBound,
}

#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct SolveStats {
    /// Subsets tested (brute) or search nodes visited (branch-and-bound).
    pub nodes: u64,
}

#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

/// Outcome of an exact solve. Deterministic fields live at the top level
/// and under `stats`; wall-clock time is quarantined under `timing` so
/// golden outputs can ignore it.
#[derive(Clone, Debug, Serialize)]
pub struct SolveResult {
    pub kind: ProblemKind,
    pub status: SolveStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<CheckReport>,
    pub stats: SolveStats,
    pub timing: Timing,
}

impl SolveResult {
    fn optimal(
        g: &Graph,
        kind: ProblemKind,
        witness: VertexSet,
        nodes: u64,
        started: Instant,
    ) -> SolveResult {
        let report = kind.check(g, &witness);
        debug_assert!(report.verdict);
        SolveResult {
            kind,
            status: SolveStatus::Optimal,
            value: Some(witness.len()),
            witness: Some(witness),
            report: Some(report),
            stats: SolveStats { nodes },
            timing: Timing {
                elapsed_ms: started.elapsed().as_secs_f64() * 1e3,
            },
        }
    }

    fn settled(kind: ProblemKind, status: SolveStatus, nodes: u64, started: Instant) -> SolveResult {
        SolveResult {
            kind,
            status,
            value: None,
            witness: None,
            report: None,
            stats: SolveStats { nodes },
            timing: Timing {
                elapsed_ms: started.elapsed().as_secs_f64() * 1e3,
            },
        }
    }
}

/// Visit all `k`-subsets of `0..n` in lexicographic order until `f` returns
/// `true`; reports whether it did.
fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    if k > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return true;
        }
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Exhaustive minimization in (cardinality, lexicographic) order. The first
/// feasible subset found is the canonical witness; infeasibility means all
/// `2^n` subsets were rejected.
pub fn solve_brute_with_limit(
    g: &Graph,
    kind: ProblemKind,
    limit: usize,
) -> Result<SolveResult, SolveError> {
    if g.n() > limit {
        return Err(SolveError::OracleLimitExceeded { n: g.n(), limit });
    }
    let started = Instant::now();
    let ctx = certify::CheckCtx::new(g);
    let (secure, isolate) = kind.flags();
    let n = g.n();
    let mut nodes = 0u64;
    let mut found: Option<VertexSet> = None;
    for k in 0..=n {
        let hit = for_each_combination(n, k, |s| {
            nodes += 1;
            let s_bits = Bits::from_slice(n, s);
            if certify::kind_feasible(&ctx, s, &s_bits, secure, isolate) {
                found = Some(s.to_vec().into());
                true
            } else {
                false
            }
        });
        if hit {
            break;
        }
    }
    Ok(match found {
        Some(witness) => SolveResult::optimal(g, kind, witness, nodes, started),
        None => SolveResult::settled(kind, SolveStatus::Infeasible, nodes, started),
    })
}

pub fn solve_brute(g: &Graph, kind: ProblemKind) -> Result<SolveResult, SolveError> {
    solve_brute_with_limit(g, kind, DEFAULT_ORACLE_LIMIT)
}

struct BnbSearch<'g> {
    ctx: certify::CheckCtx<'g>,
    secure: bool,
    isolate: bool,
    nodes: u64,
    found: Option<Vec<usize>>,
}

impl BnbSearch<'_> {
    /// Admissible lower bound on the vertices still needed: a greedy
    /// packing of pairwise-disjoint closed neighborhoods of undominated
    /// vertices, each of which requires its own distinct new dominator.
    fn packing_bound(&self, dominated: &Bits) -> usize {
        let n = self.ctx.g.n();
        let mut blocked = Bits::empty(n);
        let mut count = 0;
        for u in 0..n {
            if !dominated.contains(u) && self.ctx.closed[u].is_disjoint(&blocked) {
                count += 1;
                blocked.union_with(&self.ctx.closed[u]);
            }
        }
        count
    }

    /// Depth-first search for a feasible set of size at most `budget`.
    /// While undominated vertices remain, branching covers the least one;
    /// once dominating, any remaining vertex may be added to repair
    /// isolation or security. Branch-skipped vertices go into `forbidden`
    /// so no subset is generated twice.
    fn run(
        &mut self,
        partial: &mut Vec<usize>,
        p_bits: &mut Bits,
        forbidden: &mut Bits,
        dominated: &Bits,
        budget: usize,
    ) -> bool {
        self.nodes += 1;
        let n = self.ctx.g.n();
        let complete = self.ctx.full.first_missing_from(dominated).is_none();
        if complete {
            let mut sorted = partial.clone();
            sorted.sort_unstable();
            if certify::kind_feasible(&self.ctx, &sorted, p_bits, self.secure, self.isolate) {
                self.found = Some(sorted);
                return true;
            }
        }
        if partial.len() == budget {
            return false;
        }
        if partial.len() + self.packing_bound(dominated) > budget {
            return false;
        }

        let candidates: Vec<usize> = if let Some(u) = self.ctx.full.first_missing_from(dominated) {
            self.ctx.closed[u]
                .iter()
                .filter(|&v| !forbidden.contains(v))
                .collect()
        } else {
            (0..n)
                .filter(|&v| !p_bits.contains(v) && !forbidden.contains(v))
                .collect()
        };

        let mut newly_forbidden = Vec::new();
        let mut hit = false;
        for &v in &candidates {
            partial.push(v);
            p_bits.insert(v);
            let mut next_dominated = dominated.clone();
            next_dominated.union_with(&self.ctx.closed[v]);
            hit = self.run(partial, p_bits, forbidden, &next_dominated, budget);
            partial.pop();
            p_bits.remove(v);
            if hit {
                break;
            }
            forbidden.insert(v);
            newly_forbidden.push(v);
        }
        for v in newly_forbidden {
            forbidden.remove(v);
        }
        hit
    }
}

/// Branch-and-bound exact solve. Agrees with [`solve_brute`] in value and
/// status on every instance both can handle; the witness passes the kind's
/// checker but is not required to be the canonical one. With `upper_bound`
/// set, failure within the bound is reported as
/// [`SolveStatus::NoSolutionWithinBound`] rather than infeasibility, unless
/// the bound already covers every subset.
pub fn solve_bnb(g: &Graph, kind: ProblemKind, upper_bound: Option<usize>) -> SolveResult {
    let started = Instant::now();
    let (secure, isolate) = kind.flags();
    let n = g.n();
    let mut search = BnbSearch {
        ctx: certify::CheckCtx::new(g),
        secure,
        isolate,
        nodes: 0,
        found: None,
    };
    let cap = upper_bound.unwrap_or(n).min(n);
    for budget in 0..=cap {
        let mut partial = Vec::new();
        let mut p_bits = Bits::empty(n);
        let mut forbidden = Bits::empty(n);
        let dominated = Bits::empty(n);
        if search.run(&mut partial, &mut p_bits, &mut forbidden, &dominated, budget) {
            let witness: VertexSet = search.found.take().unwrap().into();
            return SolveResult::optimal(g, kind, witness, search.nodes, started);
        }
    }
    let status = if cap >= n {
        SolveStatus::Infeasible
    } else {
        SolveStatus::NoSolutionWithinBound
    };
    SolveResult::settled(kind, status, search.nodes, started)
}

/// The four optima of a graph, by brute force.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DominationChain {
    pub ds: usize,
    pub sds: usize,
    pub ids: usize,
    /// `None` when no isolate secure dominating set exists.
    pub isds: Option<usize>,
}

/// Solve all four kinds and check the chain inequalities
/// `γ ≤ γ_s ≤ γ_0s` and `γ ≤ γ_0 ≤ γ_0s` on the feasible entries.
pub fn domination_chain(g: &Graph) -> Result<DominationChain, SolveError> {
    domination_chain_with_limit(g, DEFAULT_ORACLE_LIMIT)
}

pub fn domination_chain_with_limit(g: &Graph, limit: usize) -> Result<DominationChain, SolveError> {
    let value = |kind: ProblemKind| -> Result<Option<usize>, SolveError> {
        Ok(solve_brute_with_limit(g, kind, limit)?.value)
    };
    let ds = value(ProblemKind::Ds)?.expect("every graph has a dominating set");
    let sds = value(ProblemKind::Sds)?.expect("the full vertex set is securely dominating");
    let ids = value(ProblemKind::Ids)?;
    let isds = value(ProblemKind::Isds)?;
    let ids = ids.expect("every nonempty graph has a maximal independent set");
    assert!(ds <= sds && ds <= ids, "domination chain violated");
    if let Some(isds) = isds {
        assert!(sds <= isds && ids <= isds, "domination chain violated");
    }
    Ok(DominationChain { ds, sds, ids, isds })
}

/// Per-kind optima keyed by kind name; used by the bench tables.
pub fn chain_as_map(chain: &DominationChain) -> BTreeMap<&'static str, Option<usize>> {
    BTreeMap::from([
        ("ds", Some(chain.ds)),
        ("sds", Some(chain.sds)),
        ("ids", Some(chain.ids)),
        ("isds", chain.isds),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_family, gen_random_graph, Family};

    fn vs(items: &[usize]) -> VertexSet {
        items.to_vec().into()
    }

    #[test]
    fn combinations_are_size_then_lex() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |s| {
            seen.push(s.to_vec());
            false
        });
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn brute_isds_path7() {
        let g = gen_family(Family::Path { n: 7 }).unwrap();
        let r = solve_brute(&g, ProblemKind::Isds).unwrap();
        assert_eq!(r.status, SolveStatus::Optimal);
        assert_eq!(r.value, Some(3));
        assert_eq!(r.witness, Some(vs(&[1, 3, 5])));
        assert!(r.report.unwrap().verdict);
    }

    #[test]
    fn brute_isds_complete_bipartite_infeasible() {
        let g = gen_family(Family::CompleteBipartite { m: 2, n: 3 }).unwrap();
        let r = solve_brute(&g, ProblemKind::Isds).unwrap();
        assert_eq!(r.status, SolveStatus::Infeasible);
        assert_eq!(r.stats.nodes, 32);
    }

    #[test]
    fn brute_small_edges() {
        let k1 = gen_family(Family::Complete { n: 1 }).unwrap();
        let r = solve_brute(&k1, ProblemKind::Isds).unwrap();
        assert_eq!((r.value, r.witness), (Some(1), Some(vs(&[0]))));
        let p4 = gen_family(Family::Path { n: 4 }).unwrap();
        assert_eq!(solve_brute(&p4, ProblemKind::Sds).unwrap().value, Some(2));
    }

    #[test]
    fn brute_respects_limit() {
        let g = gen_family(Family::Path { n: 21 }).unwrap();
        assert_eq!(
            solve_brute(&g, ProblemKind::Ds).unwrap_err(),
            SolveError::OracleLimitExceeded { n: 21, limit: 20 }
        );
        assert!(solve_brute_with_limit(&g, ProblemKind::Ds, 21).is_ok());
    }

    #[test]
    fn bnb_known_values() {
        let c9 = gen_family(Family::Cycle { n: 9 }).unwrap();
        assert_eq!(solve_bnb(&c9, ProblemKind::Isds, None).value, Some(4));
        let k6 = gen_family(Family::Complete { n: 6 }).unwrap();
        assert_eq!(solve_bnb(&k6, ProblemKind::Isds, None).value, Some(1));
    }

    #[test]
    fn bnb_bound_vs_infeasible() {
        let c9 = gen_family(Family::Cycle { n: 9 }).unwrap();
        let r = solve_bnb(&c9, ProblemKind::Isds, Some(3));
        assert_eq!(r.status, SolveStatus::NoSolutionWithinBound);
        let k23 = gen_family(Family::CompleteBipartite { m: 2, n: 3 }).unwrap();
        assert_eq!(
            solve_bnb(&k23, ProblemKind::Isds, None).status,
            SolveStatus::Infeasible
        );
        assert_eq!(
            solve_bnb(&k23, ProblemKind::Isds, Some(5)).status,
            SolveStatus::Infeasible
        );
        assert_eq!(
            solve_bnb(&k23, ProblemKind::Isds, Some(2)).status,
            SolveStatus::NoSolutionWithinBound
        );
    }

    #[test]
    fn bnb_agrees_with_brute_on_random_graphs() {
        for seed in 0..50 {
            let n = 3 + (seed as usize % 7);
            let g = gen_random_graph(n, 0.35, 500 + seed).unwrap();
            for kind in ProblemKind::ALL {
                let brute = solve_brute(&g, kind).unwrap();
                let bnb = solve_bnb(&g, kind, None);
                assert_eq!(brute.status, bnb.status, "seed {seed} kind {kind}");
                assert_eq!(brute.value, bnb.value, "seed {seed} kind {kind}");
                if let Some(w) = &bnb.witness {
                    assert!(kind.check(&g, w).verdict);
                }
            }
        }
    }

    #[test]
    fn chain_examples() {
        let p7 = gen_family(Family::Path { n: 7 }).unwrap();
        assert_eq!(
            domination_chain(&p7).unwrap(),
            DominationChain { ds: 3, sds: 3, ids: 3, isds: Some(3) }
        );
        let k5 = gen_family(Family::Complete { n: 5 }).unwrap();
        assert_eq!(
            domination_chain(&k5).unwrap(),
            DominationChain { ds: 1, sds: 1, ids: 1, isds: Some(1) }
        );
        let k23 = gen_family(Family::CompleteBipartite { m: 2, n: 3 }).unwrap();
        assert_eq!(
            domination_chain(&k23).unwrap(),
            DominationChain { ds: 2, sds: 2, ids: 2, isds: None }
        );
    }

    #[test]
    fn empty_graph_degenerates_gracefully() {
        let g = crate::graph::Graph::from_edges(0, &[]).unwrap();
        let r = solve_brute(&g, ProblemKind::Ds).unwrap();
        assert_eq!((r.status, r.value), (SolveStatus::Optimal, Some(0)));
        let r = solve_brute(&g, ProblemKind::Ids).unwrap();
        assert_eq!(r.status, SolveStatus::Infeasible);
        assert_eq!(solve_bnb(&g, ProblemKind::Ds, None).value, Some(0));
        assert_eq!(
            solve_bnb(&g, ProblemKind::Isds, None).status,
            SolveStatus::Infeasible
        );
    }

    #[test]
    fn optimal_isds_swaps_stay_isolate_dominating() {
        for seed in 0..20 {
            let g = gen_random_graph(6, 0.45, 900 + seed).unwrap();
            let r = solve_brute(&g, ProblemKind::Isds).unwrap();
            if r.status != SolveStatus::Optimal {
                continue;
            }
            let s = r.witness.unwrap();
            for (&u, &v) in &r.report.unwrap().defenders {
                assert!(crate::certify::is_isolate_dominating(&g, &s.swap(v, u)).verdict);
            }
        }
    }

    #[test]
    fn result_json_separates_timing() {
        let g = gen_family(Family::Path { n: 5 }).unwrap();
        let r = solve_brute(&g, ProblemKind::Ds).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["kind"], "ds");
        assert_eq!(json["status"], "optimal");
        assert_eq!(json["value"], 2);
        assert!(json["stats"]["nodes"].is_u64());
        assert!(json["timing"]["elapsed_ms"].is_number());
    }
}
