//! 1-plane drawings as combinatorial objects: validation, face invariants,
//! clique-free extremal constructions, and certification against the known
//! edge bounds for K_k-free 1-planar graphs.

pub mod certify;
pub mod cliques;
pub mod constructions;
pub mod drawing;
pub mod geometry;
pub mod invariants;
pub mod opg;
pub mod planarity;
pub mod search;

pub use certify::{certify, maxe_bound, BoundEntry, Certificate, Tightness};
pub use cliques::{find_clique, has_clique, turan_graph, turan_size, AbstractGraph};
pub use constructions::{
    gen_cube_g8, gen_k4_extremal, gen_k5_optimal, gen_ladder_h, gen_turan_drawing, load_fixture,
    q4_addition, ConstructionError, Family,
};
pub use drawing::{DrawingError, OnePlaneDrawing, Orientation, RawDrawing};
pub use invariants::{compute_invariants, InvariantReport};
pub use search::{drawing_search, SearchError, SearchLimits};
