//! Closed-form isolate secure domination numbers for named graph families,
//! and the explicit witness construction for paths.

use serde::Serialize;
use thiserror::Error;

use crate::graph::VertexSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamiliesError {
    #[error("{family}: {reason}")]
    OutOfDomain { family: &'static str, reason: String },
}

/// A named family instance whose optimum is known in closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyQuery {
    /// `n >= 4`.
    Path { n: usize },
    /// `n >= 4`; the cycle on 3 vertices is complete and follows the
    /// complete-graph rule instead.
    Cycle { n: usize },
    /// `n >= 1`.
    Complete { n: usize },
    /// Both sides nonempty and `(m, n) != (1, 1)`, which is the complete
    /// graph on two vertices.
    CompleteBipartite { m: usize, n: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "status", content = "value")]
pub enum ClosedForm {
    Optimal(usize),
    Infeasible,
}

fn ceil_3n_over_7(n: usize) -> usize {
    (3 * n).div_ceil(7)
}

/// The closed-form isolate secure domination number of the queried family.
pub fn closed_form_isds_number(q: FamilyQuery) -> Result<ClosedForm, FamiliesError> {
    let domain = |family: &'static str, reason: String| FamiliesError::OutOfDomain { family, reason };
    match q {
        FamilyQuery::Path { n } => {
            if n < 4 {
                return Err(domain("path", format!("n = {n} below 4")));
            }
            Ok(ClosedForm::Optimal(ceil_3n_over_7(n)))
        }
        FamilyQuery::Cycle { n } => {
            if n < 4 {
                return Err(domain("cycle", format!("n = {n} below 4")));
            }
            Ok(ClosedForm::Optimal(ceil_3n_over_7(n)))
        }
        FamilyQuery::Complete { n } => {
            if n < 1 {
                return Err(domain("complete", "n must be at least 1".into()));
            }
            Ok(ClosedForm::Optimal(1))
        }
        FamilyQuery::CompleteBipartite { m, n } => {
            if m < 1 || n < 1 {
                return Err(domain("complete_bipartite", "both sides must be nonempty".into()));
            }
            if (m, n) == (1, 1) {
                return Err(domain(
                    "complete_bipartite",
                    "K_{1,1} is the complete graph on two vertices".into(),
                ));
            }
            Ok(ClosedForm::Infeasible)
        }
    }
}

/// An isolate secure dominating set of the path `0 - 1 - ... - n-1` of the
/// optimal size `⌈3n/7⌉`, for `n >= 4`.
///
/// Writing `n = 7m + r`, the set is `{7i+1, 7i+3, 7i+5 : i < m}` together
/// with a tail that picks every other vertex from the first `r` leftovers.
/// At `n = 4` the pattern `{0, 2}` leaves vertex 1 undefendable (both swaps
/// pair up adjacent vertices, so neither leaves an isolated vertex), and
/// `{0, 3}` is the witness instead.
pub fn path_isds_construction(n: usize) -> Result<VertexSet, FamiliesError> {
    if n < 4 {
        return Err(FamiliesError::OutOfDomain {
            family: "path",
            reason: format!("n = {n} below 4"),
        });
    }
    if n == 4 {
        return Ok(vec![0, 3].into());
    }
    let m = n / 7;
    let r = n % 7;
    let mut set: Vec<usize> = (0..m)
        .flat_map(|i| [7 * i + 1, 7 * i + 3, 7 * i + 5])
        .collect();
    let tail = match r {
        0 => 0,
        1 | 2 => 1,
        3 | 4 => 2,
        _ => 3,
    };
    set.extend((0..tail).map(|j| 7 * m + 2 * j));
    Ok(set.into())
}
