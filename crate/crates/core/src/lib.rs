//! Piecewise-linear combinatorics of reduced words for the longest element
//! of the symmetric group: Lusztig cones, chamber diagrams, partial quivers,
//! rectangle calculus and the domains of linearity of the piecewise-linear
//! reparametrization maps.

pub mod chambers;
pub mod error;
pub mod lusztig;
pub mod polyhedra;
pub mod quivers;
pub mod rectangles;
pub mod regions;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use weyl::{
    apply_move, class_graph, class_representative, commutation_classes, detour_move_path, enumerate_reduced_words,
    find_move_path, is_reduced, positive_root_order, shortest_move_path, standard_words, ClassGraph,
    CommutationClass, Move, MoveKind, PositiveRoot, ReducedWord, Reducedness,
};
