//! Exact solvers, certificate checkers, hardness-reduction gadgets and
//! treewidth dynamic programs for isolate secure domination and its
//! relatives (domination, secure domination, isolate domination).
//!
//! A set `S` dominates when `N[S] = V`; it is *isolate* dominating when
//! `G[S]` additionally has an isolated vertex, *secure* dominating when
//! every outside vertex `u` has a neighbor `v` in `S` whose swap
//! `(S∖{v})∪{u}` still dominates, and *isolate secure* dominating when the
//! swaps are again isolate dominating. The minimum sizes are `γ`, `γ_0`,
//! `γ_s` and `γ_0s`; the last may not exist.

mod bits;

pub mod certify;
pub mod families;
pub mod graph;
pub mod solve;

pub use certify::{CheckReport, Violation};
pub use graph::{Bipartition, Graph, SplitPartition, VertexSet};
pub use solve::{ProblemKind, SolveResult, SolveStatus};
