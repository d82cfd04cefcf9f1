//! Finite commutative semirings, their ideals and modules, and the
//! annihilator, residual, and content constructions compiled down to
//! labeled functions over ideal semigroups.

pub mod act;
mod graphs;
mod module;
mod semiring;

pub use act::{act_ann_instance, act_ann_graph, PointedAct};
pub use graphs::{
    ann_instance, content_instance, gamma_ann, gamma_content, gamma_residual, ideal_semigroup,
    residual_instance, IdealOp,
};
pub use module::{
    annihilator, annihilator_pair_law, content, content_map, content_onto_all_ideals,
    has_annihilator_condition, is_content_semimodule, nilpotent_maximal_ideal, residual,
    submodules, FiniteModule, Submodule,
};
pub(crate) use module::residual_set;
pub use semiring::{
    ideal_intersection, ideal_product, ideals, maximal_ideals, FiniteSemiring, Ideal,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("a semiring needs at least one element")]
    EmptyOrder,
    #[error("{table} table must be {order}x{order}")]
    BadShape { table: &'static str, order: usize },
    #[error("{table}[{a}][{b}] = {value} out of range for order {order}")]
    EntryOutOfRange {
        table: &'static str,
        a: usize,
        b: usize,
        value: usize,
        order: usize,
    },
    #[error("designated element {value} out of range for order {order}")]
    ElementOutOfRange { value: usize, order: usize },
    #[error("addition is not commutative at ({a}, {b})")]
    AddNotCommutative { a: usize, b: usize },
    #[error("addition is not associative at ({a}, {b}, {c})")]
    AddNotAssociative { a: usize, b: usize, c: usize },
    #[error("zero is not an additive identity on {a}")]
    ZeroNotAddIdentity { a: usize },
    #[error("multiplication is not commutative at ({a}, {b})")]
    MulNotCommutative { a: usize, b: usize },
    #[error("multiplication is not associative at ({a}, {b}, {c})")]
    MulNotAssociative { a: usize, b: usize, c: usize },
    #[error("one is not a multiplicative identity on {a}")]
    OneNotMulIdentity { a: usize },
    #[error("zero does not absorb {a} multiplicatively")]
    ZeroNotMulAbsorbing { a: usize },
    #[error("distributivity fails at ({a}, {b}, {c})")]
    NotDistributive { a: usize, b: usize, c: usize },
    #[error("expected {order} labels, got {count}")]
    BadLabelCount { order: usize, count: usize },
    #[error("values belong to different owners")]
    OwnerMismatch,
    #[error("subset must be nonempty")]
    EmptySubset,
    #[error("ideal must contain zero")]
    IdealMissingZero,
    #[error("ideal not closed under addition at ({a}, {b})")]
    IdealNotAddClosed { a: usize, b: usize },
    #[error("ideal not closed under multiplication by {s} at {a}")]
    IdealNotMulClosed { s: usize, a: usize },
    #[error("module action fails s(m+n) = sm+sn at (s={s}, m={m}, n={n})")]
    ActionNotAddLinear { s: usize, m: usize, n: usize },
    #[error("module action fails (s+t)m = sm+tm at (s={s}, t={t}, m={m})")]
    ActionNotScalarLinear { s: usize, t: usize, m: usize },
    #[error("module action fails (st)m = s(tm) at (s={s}, t={t}, m={m})")]
    ActionNotAssociative { s: usize, t: usize, m: usize },
    #[error("one does not act as identity on {m}")]
    OneNotActingIdentity { m: usize },
    #[error("zero scalar does not send {m} to zero")]
    ZeroScalarNotAbsorbing { m: usize },
    #[error("scalar {s} does not fix the zero element")]
    ZeroElementNotFixed { s: usize },
    #[error("submodule must contain zero")]
    SubmoduleMissingZero,
    #[error("submodule not closed under addition at ({a}, {b})")]
    SubmoduleNotAddClosed { a: usize, b: usize },
    #[error("submodule not closed under the action of {s} on {m}")]
    SubmoduleNotActionClosed { s: usize, m: usize },
    #[error("modules have different scalar semirings")]
    ScalarMismatch,
    #[error("{what} {value} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("act axiom fails: {0}")]
    ActAxiom(String),
    #[error("family member {index} is empty")]
    EmptyFamilyMember { index: usize },
    #[error("family is not closed under union of members {p} and {q}")]
    FamilyNotUnionClosed { p: usize, q: usize },
    #[error("semigroup error: {0}")]
    Semigroup(#[from] crate::semigroup::SemigroupError),
    #[error("instance error: {0}")]
    Instance(#[from] crate::gamma::InstanceError),
}
