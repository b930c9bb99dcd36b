//! The TOML input document read by the command line tool and the tests.
//!
//! ```toml
//! name = "cremona"
//! variables = ["t1", "t2", "t3"]   # optional, this is the default
//! components = ["t2*t3", "t1*t3", "t1*t2"]
//!
//! [metadata]                       # optional, free-form
//! source = "quadratic involution"
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::map::RationalMap;
use crate::poly::{parse_poly_in, Vars};

/// Largest accepted document, in bytes.
pub const MAX_DOCUMENT_BYTES: usize = 1 << 20;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(default)]
    pub name: Option<String>,
    #[serde(default = "standard_names")]
    pub variables: Vec<String>,
    pub components: Vec<String>,
    #[serde(default)]
    pub metadata: Option<toml::Table>,
}

fn standard_names() -> Vec<String> {
    Vars::standard().names().to_vec()
}

fn valid_symbol(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl InputDocument {
    pub fn from_toml(text: &str) -> Result<Self> {
        if text.len() > MAX_DOCUMENT_BYTES {
            return Err(Error::Document(format!("document exceeds {MAX_DOCUMENT_BYTES} bytes")));
        }
        let doc: InputDocument = toml::from_str(text).map_err(|e| Error::Document(e.message().to_string()))?;
        doc.validate()?;
        Ok(doc)
    }

    fn validate(&self) -> Result<()> {
        if self.variables.len() != 3 {
            return Err(Error::Document(format!("expected 3 variables, got {}", self.variables.len())));
        }
        if let Some(bad) = self.variables.iter().find(|v| !valid_symbol(v)) {
            return Err(Error::Document(format!("invalid variable name {bad:?}")));
        }
        let mut names = self.variables.clone();
        names.sort();
        names.dedup();
        if names.len() != 3 {
            return Err(Error::Document("variable names must be distinct".into()));
        }
        if !(3..=4).contains(&self.components.len()) {
            return Err(Error::Document(format!("expected 3 or 4 components, got {}", self.components.len())));
        }
        Ok(())
    }

    /// Parse the components and rename the variables to `t1, t2, t3`.
    /// Fails unless the components are coprime forms of one degree.
    pub fn to_map(&self) -> Result<RationalMap> {
        let vars = Vars::new(&self.variables);
        let std = Vars::standard();
        let polys = self
            .components
            .iter()
            .map(|c| parse_poly_in(c, &vars).and_then(|p| p.rename(&std)))
            .collect::<Result<Vec<_>>>()?;
        RationalMap::new(polys)
    }

    pub fn display_name(&self) -> &str {
        self.name.as_deref().unwrap_or("unnamed")
    }
}

/// Parse a TOML document straight to a validated map.
pub fn parse_document(text: &str) -> Result<RationalMap> {
    InputDocument::from_toml(text)?.to_map()
}
