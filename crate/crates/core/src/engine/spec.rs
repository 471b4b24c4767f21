use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// How P5/P7 decide `u = ⌜A⌝` and `u = ⟨⌜n⌝, a⟩`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IdentityMode {
    /// Exact match against the declared term.
    #[default]
    Structural,
    /// The defined identity ∀u(a ∈ u → b ∈ u), relativized to the fragment.
    Leibniz,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Budget {
    pub max_steps_per_block: usize,
    pub max_blocks: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_steps_per_block: 256,
            max_blocks: 8,
        }
    }
}

/// A registered sentence code: `term` stands in for ⌜formula⌝.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegistryEntry {
    pub term: String,
    pub formula: String,
}

/// The on-disk description of a fragment. Expressions may be written in
/// presentable, bare or austere form.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FragmentSpec {
    pub terms: Vec<String>,
    pub formulas: Vec<String>,
    pub registry: Vec<RegistryEntry>,
    pub enum_prefix_size: usize,
    pub euro_enabled: bool,
    pub identity_mode: IdentityMode,
    pub budget: Budget,
}

impl FragmentSpec {
    pub fn from_json(text: &str) -> Result<FragmentSpec> {
        serde_json::from_str(text).map_err(|e| Error::Invalid(format!("fragment file: {e}")))
    }

    pub fn load(path: &Path) -> Result<FragmentSpec> {
        let text = std::fs::read_to_string(path)
            .map_err(|_| Error::FileNotFound(path.display().to_string()))?;
        FragmentSpec::from_json(&text)
    }
}
