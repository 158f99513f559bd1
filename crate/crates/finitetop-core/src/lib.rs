//! Combinatorial core for finite Alexandroff topology.
//!
//! Finite T0 Alexandroff spaces are stored as posets over opaque string
//! ids, with the dictionary open = down-set fixed once and used
//! everywhere: the minimal neighborhood of `x` is its down-set and the
//! closure of `x` is its up-set. On top of that carrier the crate builds
//!
//! - hyperspaces of nonempty finite subsets of a discrete ground set,
//!   ordered by inclusion (materialized for finite grounds, lazy for a
//!   countable one), together with their one-point extension;
//! - inverse systems of the finite stages with truncation-level
//!   verification of the limit description;
//! - abstract simplicial complexes, barycentric subdivision, nerves and
//!   Vietoris-Rips complexes;
//! - the order-complex / face-poset functors and the simplicial
//!   neighborhood category;
//! - integer simplicial homology through Smith normal form;
//! - an epsilon-filtration pipeline reporting Betti numbers and
//!   transition ranks for finite metric spaces.
//!
//! The crate is `no_std` (alloc required). All values are immutable
//! after construction and all operations are pure, so everything can be
//! shared freely across threads.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod bitmat;
pub mod error;
pub mod guards;
pub mod homology;
pub mod hyperspace;
pub mod invlimit;
pub mod label;
pub mod mccord;
pub mod metric;
pub mod poset;
pub mod shape;
pub mod simcomplex;

pub use error::{Error, ErrorKind, Result};
pub use homology::{
    chain_complex, homology, homology_of_chain_complex, smith_normal_form, ChainComplexData,
    HomologyResult, SmithNormalForm,
};
pub use invlimit::{
    bonding, bonding_seq, openness_certificate, thread_of, verify_h_bijection, DirectedIndex,
    HBijectionReport, InverseSystem, Thread, ThreadSource,
};
pub use mccord::{
    embed_weak, face_poset, functor_x_on_map, functor_y, functor_y_on_map, is_full_subneighborhood,
    is_hypersimplicial, is_locally_finite_neighborhood, is_simplicial_neighborhood,
    neighborhood_dimension, order_complex, rho_embedding, rho_with_injection,
    singleton_map_continuity, NeighborhoodMap, RhoImage, SimplicialNeighborhood,
};
pub use metric::FiniteMetricSpace;
pub use shape::{
    mccord_stage, shape_scan, transition_rank, u_epsilon_f, verify_rips_correspondence,
    ShapeReport,
};
pub use simcomplex::{nerve, vietoris_rips, AbstractComplex, SimplicialMap};

pub use hyperspace::{build_power_finite, alexandroff_extension, hyperspace_of_finite_space, ExtPoint, ExtendedHyperspace, FiniteSubset, LazyHyperspace, MaterializedHyperspace, UpDegree};
pub use poset::{FinitePreorder, PointMap};


