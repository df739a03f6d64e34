//! Tensor product multiplicities of `su(r+1)` as lattice points of
//! Berenstein-Zelevinsky polytopes.
//!
//! Three-point multiplicities are nested sums over the linear coefficients
//! of BZ triangles; four-point multiplicities are nested sums over glued
//! pairs of triangles; higher-point multiplicities fold string-like channels
//! of three-point couplings. A Littlewood-Richardson decomposition is
//! provided as an independent check.
//!
//! ```
//! use bzpoly_core::{multiplicity3, multiplicity4, Weight};
//!
//! let adj = Weight::new(vec![1, 1]).unwrap();
//! assert_eq!(multiplicity3(&adj, &adj, &adj).unwrap(), 2);
//! assert_eq!(multiplicity4(&adj, &adj, &adj, &adj).unwrap(), 8);
//! ```

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(feature = "std")]
extern crate std;

pub mod bounds;
pub mod diagram;
pub mod error;
pub mod evaluator;
pub mod four_point;
pub mod linalg;
pub mod n_point;
pub mod oracle;
pub mod search;
pub mod three_point;
pub mod triangle;
pub mod weights;

pub use diagram::{
    gluing_root, initial_diagram, is_true_diagram, reconstruct_diagram, CoefficientVector4,
    GluedDiagram, Gluing,
};
pub use error::{Error, ParseError, Result};
pub use evaluator::Evaluator;
pub use four_point::{
    channel_decompose4, cone_su2, cone_su3, enumerate4, multiplicity4, multiplicity4_su2,
    multiplicity4_su3, multiplicity4_su4, ChannelDecomposition, ChannelTerm, ConeReport,
};
pub use n_point::{diagram_count_n, multiplicity_n, CouplingQuery};
pub use oracle::{dim, lr_decompose, singlet_count, Decomposition};
pub use three_point::{enumerate3, multiplicity3, tensor_coefficient};
pub use triangle::{
    initial_triangle, is_true_triangle, reconstruct_triangle, virtual_triangle, BZTriangle,
    CoefficientVector3, Corner, Face,
};
pub use weights::{
    coupling_params, parse_weight_list, root_lattice_check, CouplingParams, DualLabels, Weight,
};
