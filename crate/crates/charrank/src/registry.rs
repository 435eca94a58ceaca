//! The witness registry file.

use std::path::Path;

use stiefel_core::wu::WitnessRecord;

use crate::CliError;

const BUILTIN: &str = include_str!("../data/witnesses.json");

pub fn parse(json: &str) -> Result<Vec<WitnessRecord>, CliError> {
    Ok(serde_json::from_str(json)?)
}

/// The registry shipped with the crate.
pub fn builtin() -> Vec<WitnessRecord> {
    parse(BUILTIN).expect("bundled witness registry parses")
}

pub fn load(path: &Path) -> Result<Vec<WitnessRecord>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use stiefel_core::wu::KPattern;
    use stiefel_core::Field;

    #[test]
    fn builtin_registry_has_four_entries() {
        let w = builtin();
        let ids: Vec<_> = w.iter().map(|w| w.id.as_str()).collect();
        assert_eq!(
            ids,
            ["so-n-line-bundle", "euler-two-plane-bundle", "grassmann-pullback", "unitary-line-bundle"]
        );
        assert_eq!(w[0].k, KPattern::NMinus(1));
        assert_eq!(w[3].field, Field::Complex);
        assert!(w[2].applies(Field::Real, 6, 2));
        assert!(!w[2].applies(Field::Real, 7, 2));
    }

    #[test]
    fn malformed_registry_is_rejected() {
        assert!(parse("[{\"id\": 3}]").is_err());
        assert!(load(Path::new("/nonexistent/witnesses.json")).is_err());
    }
}
