//! Concrete lattices given by Gram matrices.

mod design;
mod enumerate;
mod gram;
mod sublattice;

pub use design::{
    moment_profile, pair_distribution, verify_design, verify_design_on, DesignCertificate,
    MomentCheck, MomentProfile, PairBudget, ProfileMoment, DEFAULT_PAIR_BUDGET,
};
pub use enumerate::{
    minimal_vectors, minimal_vectors_with_budget, short_vectors, ShortVectorSet,
    DEFAULT_NODE_BUDGET,
};
pub use gram::GramMatrix;
pub use sublattice::even_sublattice;

/// Bundled Gram matrices; each file carries its provenance in `#` comments.
pub mod fixtures {
    use super::GramMatrix;

    pub const Z2: &str = include_str!("../../fixtures/z2.gram");
    pub const D4: &str = include_str!("../../fixtures/d4.gram");
    pub const E8: &str = include_str!("../../fixtures/e8.gram");
    pub const BW16: &str = include_str!("../../fixtures/bw16.gram");
    pub const LEECH: &str = include_str!("../../fixtures/leech.gram");

    fn load(text: &str) -> GramMatrix {
        GramMatrix::parse(text).expect("bundled fixture parses")
    }

    pub fn z2() -> GramMatrix {
        load(Z2)
    }

    pub fn d4() -> GramMatrix {
        load(D4)
    }

    pub fn e8() -> GramMatrix {
        load(E8)
    }

    pub fn barnes_wall() -> GramMatrix {
        load(BW16)
    }

    pub fn leech() -> GramMatrix {
        load(LEECH)
    }

    /// Name, Gram text pairs for every fixture.
    pub fn all() -> [(&'static str, &'static str); 5] {
        [
            ("z2", Z2),
            ("d4", D4),
            ("e8", E8),
            ("bw16", BW16),
            ("leech", LEECH),
        ]
    }
}
