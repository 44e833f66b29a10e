//! Fibonacci and semi-infinite monomials in the modes `e_i`, their action on
//! extremal vectors and the exact rank checks behind the basis theorem.

mod apply;
mod checks;
mod monomial;
mod semi_infinite;

pub use apply::{
    apply_indices_in, apply_monomial, apply_monomial_in, leading_vector, leading_vector_in, leading_vector_of,
};
pub use checks::{
    independence_check, nonempty_cells, spanning_check, spanning_report, IndependenceReport, SpanningReport,
};
pub use monomial::{
    enumerate_fibonacci, enumerate_unrestricted, gap_sequences, reflected_lex_compare, BidegreeCell,
    FibonacciMonomial,
};
pub use semi_infinite::{
    character_degree, enumerate_semi_infinite, global_basis_check, GlobalCell, GlobalReport, SemiInfiniteMonomial,
};

pub(crate) fn serialize_bigint<S: serde::Serializer>(c: &num_bigint::BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&c.to_string())
}
