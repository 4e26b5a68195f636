//! Closed-form palette bounds and counts.
//!
//! For trees of maximum degree d, the optimal distance-t palette sizes have
//! closed forms built from the geometric sum
//! `iota(k, d) = 1 + (d−1) + … + (d−1)^{k−1} = ((d−1)^k − 1)/(d−2)`,
//! the number of edges of the internally d-regular tree of height k:
//!
//! * edges: `tau_edge(t, d)` = `(2(d−1)^{t/2+1} − d)/(d−2)` for even t and
//!   `(d(d−1)^{(t+1)/2} − d)/(d−2)` for odd t;
//! * vertices: `tau_vertex(t, d)` = `(d(d−1)^{t/2} − 2)/(d−2)` for even t and
//!   `(2(d−1)^{(t+1)/2} − 2)/(d−2)` for odd t.
//!
//! All arithmetic is exact: intermediate values use checked u128 and the
//! divisions by d−2 are asserted to leave no remainder. `d = 2` is handled
//! by the same sums evaluated directly (every term of the geometric sum
//! is 1).
//!
//! [`girth_thresholds`] returns the girth above which the tree bounds extend
//! to planar multigraphs of the given parity, and [`construction_counts`]
//! evaluates the closed-form vertex/edge counts of the extremal construction
//! families.

use serde::Serialize;

use crate::constructions::{Family, ParamError, Params};

/// Parity of the distance parameter t.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of(t: u64) -> Parity {
        if t % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// The pair of tree bounds at a given (t, d).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundsRecord {
    pub t: u64,
    pub d: u64,
    pub tau_edge: u64,
    pub tau_vertex: u64,
    pub parity: Parity,
}

impl BoundsRecord {
    pub fn new(t: u64, d: u64) -> BoundsRecord {
        BoundsRecord {
            t,
            d,
            tau_edge: tau_edge(t, d),
            tau_vertex: tau_vertex(t, d),
            parity: Parity::of(t),
        }
    }
}

/// Girth thresholds above which the tree bounds hold for planar multigraphs.
/// The edge thresholds exist for odd t ≥ 3 (the trade-off variant needs
/// d ≥ t + 2), the vertex threshold for even t ≥ 2; the other parities have
/// no threshold and are reported as absent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GirthThresholds {
    pub t: u64,
    /// `6(t² + 2t − 1)` for odd t ≥ 3 (requires d ≥ 4).
    pub edge_main: Option<u64>,
    /// `30t − 6` for odd t ≥ 3, valid when the degree is at least `t + 2`.
    pub edge_tradeoff: Option<EdgeTradeoff>,
    /// `6(t² + t − 2)` for even t ≥ 2 (requires d ≥ 4).
    pub vertex_main: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EdgeTradeoff {
    pub girth: u64,
    pub min_degree: u64,
}

fn pow_u128(base: u64, exp: u64) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc
            .checked_mul(base as u128)
            .expect("overflow in closed-form bound evaluation");
    }
    acc
}

fn exact_div(numerator: u128, denominator: u128) -> u64 {
    assert!(denominator > 0, "division by zero in closed form");
    assert_eq!(
        numerator % denominator,
        0,
        "closed form is not an integer: {numerator} / {denominator}"
    );
    to_u64(numerator / denominator)
}

fn to_u64(x: u128) -> u64 {
    u64::try_from(x).expect("closed-form value exceeds u64")
}

/// `iota(k, d) = 1 + (d−1) + … + (d−1)^{k−1}`, the number of edges of the
/// internally d-regular tree of height k rooted at a leaf endpoint.
/// Requires d ≥ 2; `iota(0, d) = 0`.
pub fn iota(k: u64, d: u64) -> u64 {
    assert!(d >= 2, "iota requires d >= 2");
    if d == 2 {
        return k;
    }
    exact_div(pow_u128(d - 1, k) - 1, (d - 2) as u128)
}

/// Optimal distance-t edge palette size for trees of maximum degree d ≥ 3.
pub fn tau_edge(t: u64, d: u64) -> u64 {
    assert!(t >= 1, "tau_edge requires t >= 1");
    assert!(d >= 3, "tau_edge requires d >= 3");
    if t % 2 == 0 {
        // 1 + 2(d−1)·iota(t/2, d)
        exact_div(
            2 * pow_u128(d - 1, t / 2 + 1) - d as u128,
            (d - 2) as u128,
        )
    } else {
        // d·iota((t+1)/2, d)
        exact_div(
            d as u128 * pow_u128(d - 1, (t + 1) / 2) - d as u128,
            (d - 2) as u128,
        )
    }
}

/// Optimal distance-t vertex palette size for trees of maximum degree d ≥ 3.
pub fn tau_vertex(t: u64, d: u64) -> u64 {
    assert!(t >= 1, "tau_vertex requires t >= 1");
    assert!(d >= 3, "tau_vertex requires d >= 3");
    if t % 2 == 0 {
        exact_div(
            d as u128 * pow_u128(d - 1, t / 2) - 2,
            (d - 2) as u128,
        )
    } else {
        exact_div(2 * pow_u128(d - 1, (t + 1) / 2) - 2, (d - 2) as u128)
    }
}

/// Girth thresholds for the given t (see [`GirthThresholds`]).
pub fn girth_thresholds(t: u64) -> GirthThresholds {
    assert!(t >= 1, "girth_thresholds requires t >= 1");
    let odd = t % 2 == 1;
    GirthThresholds {
        t,
        edge_main: (odd && t >= 3).then(|| 6 * (t * t + 2 * t - 1)),
        edge_tradeoff: (odd && t >= 3).then(|| EdgeTradeoff {
            girth: 30 * t - 6,
            min_degree: t + 2,
        }),
        vertex_main: (!odd && t >= 2).then(|| 6 * (t * t + t - 2)),
    }
}

/// Closed-form vertex and edge counts `(vertices, edges)` of the extremal
/// construction families, as published.
///
/// For the octahedron families the published closed forms are not attainable
/// by any graph of the family's shape (a degree-sum argument: 6 core
/// vertices of degree exactly d plus 3(d−4) pendant leaves force
/// (9d−12)/2 edges, 3 fewer than the published 9d/2 − 3); the generators in
/// [`crate::constructions`] therefore realise slightly different counts,
/// and their descriptors predict the realised values. This function keeps
/// the published forms, which are what the ratio tables quote.
pub fn construction_counts(family: Family, params: &Params) -> Result<(u64, u64), ParamError> {
    params.validate(family)?;
    let p = params;
    Ok(match family {
        Family::TreeT => {
            let (k, d) = (p.k(), p.d());
            (iota(k, d) + 1, iota(k, d))
        }
        Family::ExtremalTreeEdge => {
            let e = tau_edge(p.t(), p.d());
            (e + 1, e)
        }
        Family::ExtremalTreeVertex => {
            let v = tau_vertex(p.t(), p.d());
            (v, v - 1)
        }
        Family::Shannon => (3, 3 * p.d() / 2),
        Family::Octahedron => (3 * p.d() - 6, 9 * p.d() / 2 - 3),
        Family::ShannonHierarchy => {
            let (k, d) = (p.k(), p.d());
            let growth = pow_u128(d - 1, k);
            let half = (3 * d / 2) as u128;
            (to_u64(half * growth + 3), to_u64(half * (growth + 1)))
        }
        Family::OctahedronHierarchy => {
            let (k, d) = (p.k(), p.d());
            let scale = (9 * d / 2 - 15) as u128;
            let growth = pow_u128(d - 1, k) - 1;
            (
                to_u64(scale * growth + (9 * d / 2 - 9) as u128),
                to_u64(scale * growth + (6 * (d - 1)) as u128),
            )
        }
        Family::OddCycleEdgeCert => {
            let (t, d) = (p.t(), p.d());
            let ell = crate::constructions::edge_cert_cycle_length(t, d);
            let e = ell * (1 + (d - 2) * iota(t / 2, d));
            (e, e)
        }
        Family::OddCycleVertexCert => {
            let (t, d, ell) = (p.t(), p.d(), p.ell());
            let per_vertex = if t == 1 {
                // Height-0 trees degenerate to pendant edges here.
                d - 2
            } else {
                (d - 2) * iota((t - 1) / 2, d)
            };
            let e = ell * (1 + per_vertex);
            (e, e)
        }
        Family::Path => (p.n(), p.n() - 1),
        Family::Cycle => (p.n(), p.n()),
    })
}
