//! The representation ring as a polynomial ring on fundamental generators, its quotient
//! `S(G) = R(G)/I^2`, the module `V(G) = S(G)/Z`, Adams matrices, types and cyclic generators.

mod cyclic;
mod fundpoly;
mod index;
mod vclass;

pub use cyclic::{
    lambda_columns,
    adams_matrix_on_v, cyclic_matrix, exterior_model, lambda_column_from_adams, type_of, type_from_adams_matrix,
    CyclicMatrix, ExteriorModel, Route, TypeOf,
};
pub use fundpoly::{s_reduce, to_fund_poly, v_class, FundPoly, FundPolyBuilder, SClass, VVector};
pub use index::IndexEngine;
pub use vclass::VEngine;
pub(crate) use cyclic::generator_dims;
