//! Boolean checkers with certificates for the four domination properties,
//! external private neighbors, and the epn-completeness characterization of
//! secure domination.
//!
//! Every checker returns a [`CheckReport`]: on success the certificate
//! fields (per-outside-vertex defenders, isolated-vertex witness) replay
//! through the primitive checkers; on failure the violation names a
//! concrete witness of the breakage. Defender choices are always the
//! least-numbered valid defender, so reports are deterministic.
//!
//! Checkers expect `s ⊆ V` and panic otherwise; command-line entry points
//! validate sets before calling.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::bits::Bits;
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CertifyError {
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {vertex} is not in the set")]
    NotInSet { vertex: usize },
}

/// Why a candidate defender fails for some outside vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DefenseFailure {
    SwapNotDominating { undominated: usize },
    SwapNoIsolatedVertex,
    EpnNotComplete { missing: (usize, usize) },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RejectedDefender {
    pub defender: usize,
    pub reason: DefenseFailure,
}

/// Structured reason a check failed. The decomposition variants belong to
/// the tree-decomposition validator, which shares this report type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    Undominated { vertex: usize },
    NoIsolatedVertex,
    Undefendable { vertex: usize, rejected: Vec<RejectedDefender> },
    VertexNotInAnyBag { vertex: usize },
    EdgeNotInAnyBag { u: usize, v: usize },
    BagsNotConnected { vertex: usize, components: Vec<Vec<usize>> },
    MalformedTree { reason: String },
}

/// Verdict plus the evidence for it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub verdict: bool,
    /// For secure variants: each outside vertex mapped to its least valid
    /// defender.
    pub defenders: BTreeMap<usize, usize>,
    /// For isolate variants: the least vertex isolated in `G[S]`.
    pub isolate_witness: Option<usize>,
    pub violation: Option<Violation>,
}

impl CheckReport {
    fn pass() -> Self {
        CheckReport {
            verdict: true,
            defenders: BTreeMap::new(),
            isolate_witness: None,
            violation: None,
        }
    }

    fn fail(violation: Violation) -> Self {
        CheckReport {
            verdict: false,
            defenders: BTreeMap::new(),
            isolate_witness: None,
            violation: Some(violation),
        }
    }
}

/// Per-graph scratch state shared by the checkers and the solvers: closed
/// and open neighborhoods as bitsets.
pub(crate) struct CheckCtx<'g> {
    pub g: &'g Graph,
    pub full: Bits,
    pub closed: Vec<Bits>,
    pub open: Vec<Bits>,
}

impl<'g> CheckCtx<'g> {
    pub fn new(g: &'g Graph) -> Self {
        let n = g.n();
        let mut closed = Vec::with_capacity(n);
        let mut open = Vec::with_capacity(n);
        for v in 0..n {
            let o = Bits::from_slice(n, g.neighbors(v));
            let mut c = o.clone();
            c.insert(v);
            open.push(o);
            closed.push(c);
        }
        CheckCtx {
            g,
            full: Bits::full(n),
            closed,
            open,
        }
    }

    fn guard(&self, s: &VertexSet) {
        for v in s.iter() {
            assert!(v < self.g.n(), "set vertex {v} out of range (n = {})", self.g.n());
        }
    }

    pub fn bits_of(&self, s: &VertexSet) -> Bits {
        Bits::from_slice(self.g.n(), s.as_slice())
    }

    /// Least vertex not dominated by `s`, if any.
    pub fn first_undominated(&self, s: &[usize]) -> Option<usize> {
        let mut acc = Bits::empty(self.g.n());
        for &v in s {
            acc.union_with(&self.closed[v]);
        }
        self.full.first_missing_from(&acc)
    }

    /// Least member of `members` with no neighbor inside `s_bits`.
    pub fn isolated_in(&self, members: &[usize], s_bits: &Bits) -> Option<usize> {
        members
            .iter()
            .copied()
            .find(|&v| self.open[v].is_disjoint(s_bits))
    }

    /// Closed-neighborhood unions of `s` with one member left out, indexed
    /// like `s`.
    fn unions_without(&self, s: &[usize]) -> Vec<Bits> {
        let n = self.g.n();
        let k = s.len();
        let mut prefix = vec![Bits::empty(n); k + 1];
        for i in 0..k {
            let mut acc = prefix[i].clone();
            acc.union_with(&self.closed[s[i]]);
            prefix[i + 1] = acc;
        }
        let mut suffix = vec![Bits::empty(n); k + 1];
        for i in (0..k).rev() {
            let mut acc = suffix[i + 1].clone();
            acc.union_with(&self.closed[s[i]]);
            suffix[i] = acc;
        }
        (0..k)
            .map(|i| {
                let mut acc = prefix[i].clone();
                acc.union_with(&suffix[i + 1]);
                acc
            })
            .collect()
    }
}

/// `N[v]`.
pub fn closed_neighborhood(g: &Graph, v: usize) -> Result<VertexSet, CertifyError> {
    if v >= g.n() {
        return Err(CertifyError::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let mut set: VertexSet = g.neighbors(v).iter().copied().collect();
    set.insert(v);
    Ok(set)
}

/// `N[S] = V`?
pub fn is_dominating(g: &Graph, s: &VertexSet) -> CheckReport {
    let ctx = CheckCtx::new(g);
    ctx.guard(s);
    match ctx.first_undominated(s.as_slice()) {
        Some(vertex) => CheckReport::fail(Violation::Undominated { vertex }),
        None => CheckReport::pass(),
    }
}

/// Dominating and `G[S]` has an isolated vertex.
pub fn is_isolate_dominating(g: &Graph, s: &VertexSet) -> CheckReport {
    let ctx = CheckCtx::new(g);
    ctx.guard(s);
    isolate_dominating_with(&ctx, s)
}

fn isolate_dominating_with(ctx: &CheckCtx, s: &VertexSet) -> CheckReport {
    if let Some(vertex) = ctx.first_undominated(s.as_slice()) {
        return CheckReport::fail(Violation::Undominated { vertex });
    }
    let s_bits = ctx.bits_of(s);
    match ctx.isolated_in(s.as_slice(), &s_bits) {
        Some(w) => CheckReport {
            isolate_witness: Some(w),
            ..CheckReport::pass()
        },
        None => CheckReport::fail(Violation::NoIsolatedVertex),
    }
}

/// `{ w ∈ V∖S : N[w] ∩ S = {v} }`.
pub fn external_private_neighbors(
    g: &Graph,
    v: usize,
    s: &VertexSet,
) -> Result<VertexSet, CertifyError> {
    if v >= g.n() {
        return Err(CertifyError::VertexOutOfRange { vertex: v, n: g.n() });
    }
    if !s.contains(v) {
        return Err(CertifyError::NotInSet { vertex: v });
    }
    let ctx = CheckCtx::new(g);
    ctx.guard(s);
    let s_bits = ctx.bits_of(s);
    Ok((0..g.n())
        .filter(|&w| !s_bits.contains(w) && ctx.closed[w].and_equals_bit(&s_bits, v))
        .collect())
}

/// Least valid defender of `u`, or the per-candidate failure reasons.
/// `without[i]` must be the closed-neighborhood union of `s` minus its
/// `i`-th member.
fn defender_for(
    ctx: &CheckCtx,
    s_slice: &[usize],
    s_bits: &Bits,
    without: &[Bits],
    u: usize,
    isolate: bool,
) -> Result<usize, Vec<RejectedDefender>> {
    let mut rejected = Vec::new();
    for &v in ctx.g.neighbors(u) {
        if !s_bits.contains(v) {
            continue;
        }
        let idx = s_slice.binary_search(&v).unwrap();
        let mut dominated = without[idx].clone();
        dominated.union_with(&ctx.closed[u]);
        if let Some(missing) = ctx.full.first_missing_from(&dominated) {
            rejected.push(RejectedDefender {
                defender: v,
                reason: DefenseFailure::SwapNotDominating { undominated: missing },
            });
            continue;
        }
        if isolate {
            let mut swap_bits = s_bits.clone();
            swap_bits.remove(v);
            swap_bits.insert(u);
            let isolated = ctx.open[u].is_disjoint(&swap_bits)
                || s_slice
                    .iter()
                    .any(|&w| w != v && ctx.open[w].is_disjoint(&swap_bits));
            if !isolated {
                rejected.push(RejectedDefender {
                    defender: v,
                    reason: DefenseFailure::SwapNoIsolatedVertex,
                });
                continue;
            }
        }
        return Ok(v);
    }
    Err(rejected)
}

/// Bare verdict for the property selected by the `(secure, isolate)` pair,
/// sharing the defender logic with the report-building checkers. Used by
/// the solvers on their enumeration hot path.
pub(crate) fn kind_feasible(
    ctx: &CheckCtx,
    s_slice: &[usize],
    s_bits: &Bits,
    secure: bool,
    isolate: bool,
) -> bool {
    if ctx.first_undominated(s_slice).is_some() {
        return false;
    }
    if isolate && ctx.isolated_in(s_slice, s_bits).is_none() {
        return false;
    }
    if !secure {
        return true;
    }
    let without = ctx.unions_without(s_slice);
    (0..ctx.g.n())
        .filter(|&u| !s_bits.contains(u))
        .all(|u| defender_for(ctx, s_slice, s_bits, &without, u, isolate).is_ok())
}

fn secure_check(ctx: &CheckCtx, s: &VertexSet, isolate: bool) -> CheckReport {
    if let Some(vertex) = ctx.first_undominated(s.as_slice()) {
        return CheckReport::fail(Violation::Undominated { vertex });
    }
    let s_slice = s.as_slice();
    let s_bits = ctx.bits_of(s);
    let base_witness = if isolate {
        match ctx.isolated_in(s_slice, &s_bits) {
            Some(w) => Some(w),
            None => return CheckReport::fail(Violation::NoIsolatedVertex),
        }
    } else {
        None
    };

    let without = ctx.unions_without(s_slice);
    let mut defenders = BTreeMap::new();
    for u in 0..ctx.g.n() {
        if s_bits.contains(u) {
            continue;
        }
        match defender_for(ctx, s_slice, &s_bits, &without, u, isolate) {
            Ok(v) => {
                defenders.insert(u, v);
            }
            Err(rejected) => {
                return CheckReport::fail(Violation::Undefendable { vertex: u, rejected });
            }
        }
    }
    CheckReport {
        verdict: true,
        defenders,
        isolate_witness: base_witness,
        violation: None,
    }
}

/// Secure domination by direct swap checking: every outside vertex `u` has
/// a neighbor `v ∈ S` with `(S∖{v})∪{u}` dominating.
pub fn is_secure_dominating_naive(g: &Graph, s: &VertexSet) -> CheckReport {
    let ctx = CheckCtx::new(g);
    ctx.guard(s);
    secure_check(&ctx, s, false)
}

/// Secure domination via the epn criterion: every outside vertex `u` has a
/// defender `v ∈ S` with `G[epn(v,S) ∪ {u,v}]` complete. Agrees with the
/// naive checker on every dominating set.
pub fn is_secure_dominating_epn(g: &Graph, s: &VertexSet) -> CheckReport {
    let ctx = CheckCtx::new(g);
    ctx.guard(s);
    if let Some(vertex) = ctx.first_undominated(s.as_slice()) {
        return CheckReport::fail(Violation::Undominated { vertex });
    }
    let s_bits = ctx.bits_of(s);
    let n = ctx.g.n();

    // epn lists per set member, keyed by vertex id
    let mut epn: BTreeMap<usize, Vec<usize>> = s.iter().map(|v| (v, Vec::new())).collect();
    for w in 0..n {
        if s_bits.contains(w) {
            continue;
        }
        for v in s.iter() {
            if ctx.closed[w].and_equals_bit(&s_bits, v) {
                epn.get_mut(&v).unwrap().push(w);
                break;
            }
        }
    }

    let mut defenders = BTreeMap::new();
    for u in 0..n {
        if s_bits.contains(u) {
            continue;
        }
        let mut rejected = Vec::new();
        let mut chosen = None;
        for &v in ctx.g.neighbors(u) {
            if !s_bits.contains(v) {
                continue;
            }
            let mut members: Vec<usize> = epn[&v].clone();
            if !members.contains(&u) {
                members.push(u);
            }
            members.push(v);
            members.sort_unstable();
            match first_missing_pair(&ctx, &members) {
                None => {
                    chosen = Some(v);
                    break;
                }
                Some(missing) => rejected.push(RejectedDefender {
                    defender: v,
                    reason: DefenseFailure::EpnNotComplete { missing },
                }),
            }
        }
        match chosen {
            Some(v) => {
                defenders.insert(u, v);
            }
            None => {
                return CheckReport::fail(Violation::Undefendable { vertex: u, rejected });
            }
        }
    }
    CheckReport {
        verdict: true,
        defenders,
        isolate_witness: None,
        violation: None,
    }
}

fn first_missing_pair(ctx: &CheckCtx, members: &[usize]) -> Option<(usize, usize)> {
    for (i, &x) in members.iter().enumerate() {
        for &y in &members[i + 1..] {
            if !ctx.g.has_edge(x, y) {
                return Some((x, y));
            }
        }
    }
    None
}

/// Isolate secure domination: `S` is an IDS and every outside vertex has a
/// neighboring defender whose swap is again an IDS.
pub fn is_isolate_secure_dominating(g: &Graph, s: &VertexSet) -> CheckReport {
    let ctx = CheckCtx::new(g);
    ctx.guard(s);
    secure_check(&ctx, s, true)
}
