//! The reduction chain, one module per link. Every forward map returns the
//! target instance plus whatever context its back-map needs; every back-map
//! turns a verified target solution into a source solution.
//!
//! Forward maps are pure and deterministic. Back-maps validate the parts of
//! their input they depend on and report impossible configurations (ones no
//! verified solution can produce) as internal-consistency errors.

mod conhalv;
mod otucker;
mod path_cycle;
mod schrijver;

pub use conhalv::{conhalv_backmap, conhalv_to_fsplitp, DiscretizationContext};
pub use otucker::{
    fsplitc_to_otucker, otucker_backmap_to_fsplitc, otucker_backmap_to_schrijver,
    schrijver_to_otucker,
};
pub use path_cycle::{
    fisc_backmap_to_fsplitp, fisc_to_fsplitc, fsplitc_backmap_to_fisc, fsplitc_backmap_to_fsplitp,
    fsplitp_to_fisc, fsplitp_to_fsplitc,
};
pub use schrijver::{fisc_to_schrijver, schrijver_backmap_to_fisc};
