//! Doubly infinite sequences, their Lagrange numbers and the spectrum below `4/√3`.

pub mod admissible;
pub mod biword;
pub mod closed_form;
pub mod lagrange;
pub mod necklace;

pub use admissible::{is_admissible_candidate, AdmissibilityReport, Violation, FORBIDDEN_FACTORS};
pub use biword::BiWord;
pub use closed_form::{delta_k_sq, spectrum_below, spectrum_witness, SpectrumEntry};
pub use lagrange::{
    lagrange_biinfinite, lagrange_biinfinite_with, lagrange_periodic_sq, lagrange_periodic_sq_any, lagrange_section,
    section_value, sixteen_thirds, square_rat, LagrangeReport, SectionValue, DEFAULT_WINDOW,
};
pub use necklace::{
    enumerate_periodic_spectrum, enumerate_periodic_spectrum_with, lyndon_words, periodic_table,
    predicted_spectrum_words, NecklaceValue, MAX_PERIOD,
};
