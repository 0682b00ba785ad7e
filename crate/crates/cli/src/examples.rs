//! Problem files shipped with the binary.

use crate::error::CliError;
use crate::schema::ProblemSpec;

const BUNDLED: &[(&str, &str)] = &[
    ("bch-degree-3", include_str!("../data/bch-degree-3.json")),
    ("boolean-n2-k1", include_str!("../data/boolean-n2-k1.json")),
    ("braid-b4-k1", include_str!("../data/braid-b4-k1.json")),
    ("commutator-word", include_str!("../data/commutator-word.json")),
    ("generic-n3-l2-k1", include_str!("../data/generic-n3-l2-k1.json")),
    ("generic-n3-l2-quillen", include_str!("../data/generic-n3-l2-quillen.json")),
    ("hopf-3-link-k1", include_str!("../data/hopf-3-link-k1.json")),
    ("hopf-link-derivation", include_str!("../data/hopf-link-derivation.json")),
    ("lcs-free-2", include_str!("../data/lcs-free-2.json")),
    ("rebracket-m3", include_str!("../data/rebracket-m3.json")),
    ("surface-g2-holonomy", include_str!("../data/surface-g2-holonomy.json")),
    ("surface-g2-k1", include_str!("../data/surface-g2-k1.json")),
    ("torus-n2-k1", include_str!("../data/torus-n2-k1.json")),
    ("unlink-2-k1", include_str!("../data/unlink-2-k1.json")),
    ("wedge-n2-k1", include_str!("../data/wedge-n2-k1.json")),
    ("wedge-n3-k2", include_str!("../data/wedge-n3-k2.json")),
];

/// Names and raw JSON of every bundled problem, sorted by name.
pub fn bundled_examples() -> &'static [(&'static str, &'static str)] {
    BUNDLED
}

pub fn bundled(name: &str) -> Result<ProblemSpec, CliError> {
    let (_, text) = BUNDLED
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| CliError::schema(format!("no bundled example named {name:?}")))?;
    serde_json::from_str(text).map_err(|e| CliError::schema(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_example_parses_and_names_a_command() {
        for (name, _) in bundled_examples() {
            let spec = bundled(name).unwrap();
            let cmd = spec.command.unwrap();
            assert!(crate::commands::COMMANDS.contains(&cmd.as_str()), "{name}: {cmd}");
            assert!(spec.description.is_some(), "{name}");
        }
        assert!(bundled("nope").is_err());
    }
}
