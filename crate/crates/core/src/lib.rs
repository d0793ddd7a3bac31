//! Token machines for closed call-by-name evaluation: the interaction machine
//! (λIAM), its jumping and pointer variants (λJAM, λPAM), the Krivine machine,
//! the hopping machine entangling λJAM and KAM, and the sequence-type machine
//! walking a type derivation. Checkers relate their runs to each other and to
//! the weights of sequence type derivations.

pub mod syntax;
pub mod plist;
pub mod tokens;
pub mod machine;
pub mod liam;
pub mod ljam;
pub mod kam;
pub mod ham;
pub mod lpam;
pub mod multitypes;
pub mod siam;
pub mod equivalence;
pub mod harness;
