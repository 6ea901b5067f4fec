pub mod converge;
pub mod integrate;
pub mod invariants;
pub mod tableau;
pub mod validate;
