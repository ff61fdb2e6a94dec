//! Adapted points, compression cones, boundary degenerations and admissibility.

pub mod adapted;
pub mod admissible;
pub mod analysis;
pub mod degeneration;
pub mod word;

pub use adapted::{adaptedness, check_adapted, has_open_p_orbit, is_adapted, recover_q, LeviData};
pub use admissible::{
    find_admissible, is_admissible, nt_fallback, AdmissibilityReport, AdmissibleMethod, AdmissibleSearch, ChamberReport,
    NtFamily,
};
pub use analysis::{SphericalAnalysis, SupportItem};
pub use degeneration::{boundary_degeneration, compression_cone_from_limits, m_conjugate, DegenerationData};
pub use word::{translate, BasePoint, RootTerm, WordEntry};
