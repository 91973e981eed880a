use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;

/// Whether homogeneity is measured by weighted total degree or by the full
/// exponent vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Grading {
    Single,
    Multi,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingSpec {
    pub field: Field,
    pub vars: Vec<String>,
    pub weights: Vec<u32>,
    pub grading: Grading,
}

/// A polynomial ring k[x_1..x_n] with positive variable weights. Cheap to clone.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring(Arc<RingSpec>);

impl Ring {
    pub fn new(field: Field, vars: &[&str], weights: &[u32], grading: Grading) -> Result<Ring> {
        if vars.len() != weights.len() {
            return Err(Error::DimensionMismatch("one weight per variable".into()));
        }
        if weights.contains(&0) {
            return Err(Error::Precondition("variable weights must be ≥ 1".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::Precondition(format!("bad variable name {v:?}")));
            }
            if vars[..i].contains(v) {
                return Err(Error::Precondition(format!("duplicate variable {v}")));
            }
        }
        Ok(Ring(Arc::new(RingSpec {
            field,
            vars: vars.iter().map(|s| s.to_string()).collect(),
            weights: weights.to_vec(),
            grading,
        })))
    }

    /// Standard grading, every variable of weight 1.
    pub fn standard(field: Field, vars: &[&str]) -> Ring {
        Ring::new(field, vars, &vec![1; vars.len()], Grading::Single).expect("valid ring")
    }

    pub fn multigraded(field: Field, vars: &[&str]) -> Ring {
        Ring::new(field, vars, &vec![1; vars.len()], Grading::Multi).expect("valid ring")
    }

    /// Same field and grading, all variables of weight `w`, named `prefix1..prefixN`.
    pub fn numbered(field: Field, prefix: &str, n: usize, w: u32) -> Ring {
        let names: Vec<String> = (1..=n).map(|i| format!("{prefix}{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        Ring::new(field, &refs, &vec![w; n], Grading::Single).expect("valid ring")
    }

    /// This ring with extra variables appended after the existing ones.
    pub fn extend(&self, names: &[&str], weights: &[u32]) -> Ring {
        let mut vars: Vec<&str> = self.0.vars.iter().map(String::as_str).collect();
        let mut fresh = Vec::new();
        for n in names {
            let mut name = n.to_string();
            while vars.contains(&name.as_str()) || fresh.contains(&name) {
                name.push('_');
            }
            fresh.push(name);
        }
        vars.extend(fresh.iter().map(String::as_str));
        let mut w = self.0.weights.clone();
        w.extend_from_slice(weights);
        Ring::new(self.0.field, &vars, &w, self.0.grading).expect("valid extension")
    }

    pub fn spec(&self) -> &RingSpec {
        &self.0
    }

    pub fn field(&self) -> Field {
        self.0.field
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn weights(&self) -> &[u32] {
        &self.0.weights
    }

    pub fn grading(&self) -> Grading {
        self.0.grading
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.0.field, self.0.vars.join(","))
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_')
}
