//! Constructions of small induced path factors.
//!
//! Every routine here verifies what it returns: the edge set is checked to
//! be an induced path factor of the input graph and its size against the
//! bound the construction promises. A failed check is reported as an error
//! rather than a panic so the census can count it.

pub mod badness;
pub mod blocktree;
pub mod cubic;
pub mod ham23;
pub mod lift;
pub mod small;
pub mod twofactor;

pub use badness::{is_bad, is_triangle_ring, recognize_bad, BadnessReport};
pub use blocktree::ipf_blocktree;
pub use cubic::{ipf_cubic, Certificate, CubicBound};
pub use ham23::ipf_ham23;
pub use lift::{lift, standardise};
pub use small::ipf_small_ham;
pub use twofactor::ipf_23_with_2factor;

use crate::graph::surgery::SurgeryError;
use crate::graph::{Edge, Graph, Vertex};
use crate::ipf::{Ipf, IpfError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{step}: result is not an induced path factor: {source}")]
    Invalid {
        step: &'static str,
        #[source]
        source: IpfError,
    },
    #[error("{step}: {got} paths exceeds the bound {bound}")]
    Bound {
        step: &'static str,
        got: usize,
        bound: usize,
    },
    #[error("{step}: {what}")]
    Postcondition { step: &'static str, what: String },
    #[error("surgery failed: {0}")]
    Surgery(#[from] SurgeryError),
}

/// Names of the reduction steps taken, in the order they were entered.
#[derive(Debug, Clone, Default)]
pub struct Trace {
    pub steps: Vec<String>,
}

impl Trace {
    pub fn push(&mut self, step: impl Into<String>) {
        self.steps.push(step.into());
    }
}

pub(crate) fn checked(g: &Graph, edges: Vec<Edge>, step: &'static str) -> Result<Ipf, ConstructError> {
    Ipf::new(g, edges).map_err(|source| ConstructError::Invalid { step, source })
}

pub(crate) fn within(ipf: &Ipf, bound: usize, step: &'static str) -> Result<(), ConstructError> {
    if ipf.path_count > bound {
        return Err(ConstructError::Bound {
            step,
            got: ipf.path_count,
            bound,
        });
    }
    Ok(())
}

/// Edges of an IPF of a subgraph, renamed into the host through `to_host`.
pub(crate) fn to_host<'a>(ipf: &'a Ipf, to_host: &'a [Vertex]) -> impl Iterator<Item = Edge> + 'a {
    ipf.edges
        .iter()
        .map(move |&Edge(u, v)| Edge::new(to_host[u], to_host[v]))
}

/// The component of `g - cut` containing `start`, sorted.
pub(crate) fn side_of(g: &Graph, cut: &[Edge], start: Vertex) -> Vec<Vertex> {
    let mut seen = vec![false; g.n()];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if !seen[w] && !cut.contains(&Edge::new(v, w)) {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    (0..g.n()).filter(|&v| seen[v]).collect()
}

pub(crate) fn in_triangle(g: &Graph, v: Vertex) -> Option<(Vertex, Vertex)> {
    let nb = g.neighbors(v);
    for i in 0..nb.len() {
        for j in i + 1..nb.len() {
            if g.has_edge(nb[i], nb[j]) {
                return Some((nb[i].min(nb[j]), nb[i].max(nb[j])));
            }
        }
    }
    None
}

pub(crate) fn position(map: &[Vertex], v: Vertex) -> Vertex {
    map.iter()
        .position(|&w| w == v)
        .expect("vertex is in the subgraph")
}

/// An induced subgraph together with the host index of each of its vertices.
pub(crate) struct Sub {
    pub g: Graph,
    pub map: Vec<Vertex>,
}

impl Sub {
    pub fn of(g: &Graph, keep: &[Vertex]) -> Sub {
        let (h, map) = g.induced_subgraph(keep);
        Sub { g: h, map }
    }

    pub fn without(g: &Graph, drop: &[Vertex]) -> Sub {
        let keep: Vec<Vertex> = g.vertices().filter(|v| !drop.contains(v)).collect();
        Sub::of(g, &keep)
    }

    pub fn local(&self, v: Vertex) -> Vertex {
        position(&self.map, v)
    }

    pub fn host_edges(&self, p: &Ipf) -> Vec<Edge> {
        to_host(p, &self.map).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Cubic,
    Ham23,
    Blocktree,
    TwoFactor,
    /// The first of the above whose hypotheses hold.
    Auto,
}

impl std::str::FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> Result<Method, String> {
        Ok(match s {
            "cubic" => Method::Cubic,
            "ham23" => Method::Ham23,
            "blocktree" => Method::Blocktree,
            "2factor" => Method::TwoFactor,
            "auto" => Method::Auto,
            _ => return Err(format!("unknown method {s:?}")),
        })
    }
}

/// Run one construction and package its result with the bound it meets.
pub fn construct(g: &Graph, method: Method) -> Result<Certificate, ConstructError> {
    use crate::graph::{hamilton_cycle, two_factor_search};
    let mut trace = Trace::default();
    let method = match method {
        Method::Auto if g.is_cubic() && g.is_connected() => Method::Cubic,
        Method::Auto if blocktree::check_hypotheses(g).is_ok() => Method::Blocktree,
        Method::Auto if g.n() >= 6 && g.is_23_graph() && hamilton_cycle(g).is_some() => Method::Ham23,
        Method::Auto => Method::TwoFactor,
        m => m,
    };
    let n = g.n();
    let (ipf, bound) = match method {
        Method::Cubic => {
            if !g.is_cubic() || !g.is_connected() {
                return Err(ConstructError::Precondition("needs a connected cubic graph".into()));
            }
            (cubic::cubic(g, &mut trace)?, CubicBound::for_order(n))
        }
        Method::Ham23 => (ham23::ham23(g, &mut trace)?, generic_bound(g)),
        Method::Blocktree => (blocktree::blocktree(g, &mut trace)?, generic_bound(g)),
        Method::TwoFactor => {
            if !g.is_23_graph() {
                return Err(ConstructError::Precondition("needs a {2,3}-graph".into()));
            }
            let f = two_factor_search(g, 5, true)
                .map_err(|e| ConstructError::Precondition(e.to_string()))?
                .ok_or_else(|| ConstructError::Precondition("no 2-factor with all cycles of length at least 5".into()))?;
            (twofactor::with_2factor(g, &f, &mut trace)?, generic_bound(g))
        }
        Method::Auto => unreachable!("resolved above"),
    };
    Ok(Certificate::new(g, bound, ipf, trace))
}

fn generic_bound(g: &Graph) -> CubicBound {
    if g.n() >= 7 && !is_bad(g) {
        CubicBound::NMinusOneThirds
    } else {
        CubicBound::NThirds
    }
}
