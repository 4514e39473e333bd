//! Circulant graphs and their complements: distance vectors, distance
//! spectra, routings and forwarding indices, seventeen distance-based
//! topological indices, and closed-form predictions for the complements of
//! double loop networks `C_n(1, a)` and multiplicative circulants
//! `C_{m^h}(1, m, ..., m^{h-1})` checked against brute force.

pub mod circulant;
pub mod error;
pub mod exact;
pub mod formulas;
pub mod graph;
pub mod indices;
pub mod metrics;
pub mod routing;
pub mod spectral;
pub mod verify;

pub use circulant::{build_circulant, complement_spec, normalize_jumps, CirculantSpec};
pub use error::{Error, Result};
pub use exact::Rational;
pub use graph::{parse_graph_fixture, GenericGraph, GraphFixture, Indexing};
pub use indices::{circulant_report, full_report, Index, IndexReport, IndexValue};
pub use metrics::{distance_vector, DistanceMatrix, DistanceVector, MetricsSummary};
pub use routing::{LoadProfile, RotationRouting, Routing};
pub use spectral::{circulant_spectrum, spectral_radius_exact, Spectrum};
