use super::{AlgebraFile, InstanceError};

/// Identifiers of the shipped fixtures.
pub const FIXTURES: &[&str] = &["klr-2-2-2"];

const KLR_2_2_2: &str = include_str!("../../fixtures/klr-2-2-2.json");

/// A shipped fixture, re-verified on load. klr-2-2-2 is the cyclotomic
/// KLR algebra R^Λ_2 for e = 2, p = 2, ρ = (0), over ℤ[ε₂] read in ℚ(ε₂).
pub fn klr_fixture(id: &str) -> Result<AlgebraFile, InstanceError> {
    match id {
        "klr-2-2-2" => AlgebraFile::from_json(KLR_2_2_2),
        _ => Err(InstanceError::UnknownFixture(id.to_string())),
    }
}

/// The raw JSON text of a fixture.
pub fn fixture_text(id: &str) -> Option<&'static str> {
    match id {
        "klr-2-2-2" => Some(KLR_2_2_2),
        _ => None,
    }
}
