//! Distance colouring toolkit for bounded-degree multigraphs.
//!
//! A distance-t edge colouring assigns colours to edges so that any two
//! distinct edges within distance t of each other in the line graph receive
//! different colours; a distance-t vertex colouring does the same for
//! vertices in the graph metric. Equivalently these are proper colourings of
//! the t-th power of the line graph, respectively of the graph itself.
//!
//! The crate provides:
//!
//! * [`graph`] — a small multigraph/simple-graph core with the handful of
//!   operations the rest of the crate is built on: line graphs, graph powers,
//!   BFS distances in both the vertex and the edge metric, girth, matchings,
//!   contraction, degeneracy orders.
//! * [`bounds`] — closed-form palette bounds for trees (`tau_edge`,
//!   `tau_vertex`), the geometric sums behind them (`iota`), girth thresholds
//!   under which the tree bounds extend to planar graphs, and closed-form
//!   vertex/edge counts for the extremal construction families.
//! * [`constructions`] — deterministic generators for every extremal family
//!   (internally d-regular trees, Shannon triangles, octahedron-based
//!   families, their subdivided hierarchies, odd-cycle non-colourability
//!   certificates, paths and cycles), each wrapped in a descriptor carrying
//!   machine-checkable claims.
//! * [`colouring`] — greedy and exact colouring: BFS-ordered greedy tree
//!   colouring meeting the tree bounds, a DSATUR branch-and-bound exact
//!   solver with deterministic reports, a contraction pipeline reducing
//!   distance-t edge colouring to distance-(t−1) vertex colouring, colouring
//!   verification, and the 9d/2 edge-bound checker for graphs whose strong
//!   line-graph square is complete.
//! * [`io`] — JSON and DOT serialisation of graphs, colourings and reports.
//!
//! With the default `parallel` feature the data-parallel inner loops
//! (per-source BFS in `power`, per-edge search in `girth`, per-entity scans
//! in colouring verification) run on rayon; disabling the feature compiles
//! the sequential fallback. Results are identical either way, and the exact
//! solver is sequential by construction so its reports do not depend on
//! thread count.

#![forbid(unsafe_code)]

pub mod bounds;
pub mod colouring;
pub mod constructions;
pub mod graph;
pub mod io;

mod parallel;
