use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// An ordered list of distinct variable names. The coefficient field is always ℚ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    variables: Vec<String>,
}

impl Ring {
    pub fn new<I, S>(variables: I) -> Result<Arc<Ring>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let variables: Vec<String> = variables.into_iter().map(Into::into).collect();
        for (i, name) in variables.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::InvalidRing("empty variable name".into()));
            }
            if variables[..i].contains(name) {
                return Err(Error::InvalidRing(format!("duplicate variable `{name}`")));
            }
        }
        Ok(Arc::new(Ring { variables }))
    }

    pub fn len(&self) -> usize {
        self.variables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.variables.is_empty()
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn name(&self, index: usize) -> &str {
        &self.variables[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    /// A new ring with `name` inserted at `position`.
    pub fn with_variable_at(&self, name: &str, position: usize) -> Result<Arc<Ring>> {
        if self.index_of(name).is_some() {
            return Err(Error::NameCollision(name.to_string()));
        }
        if position > self.len() {
            return Err(Error::IndexOutOfRange { index: position, len: self.len() + 1 });
        }
        let mut vars = self.variables.clone();
        vars.insert(position, name.to_string());
        Ring::new(vars)
    }

    /// A new ring with `names` appended after the existing variables.
    pub fn extended<S: AsRef<str>>(&self, names: &[S]) -> Result<Arc<Ring>> {
        let mut vars = self.variables.clone();
        for name in names {
            let name = name.as_ref();
            if vars.iter().any(|v| v == name) {
                return Err(Error::NameCollision(name.to_string()));
            }
            vars.push(name.to_string());
        }
        Ring::new(vars)
    }

    /// A new ring without the variable at `index`.
    pub fn without(&self, index: usize) -> Result<Arc<Ring>> {
        if index >= self.len() {
            return Err(Error::IndexOutOfRange { index, len: self.len() });
        }
        let mut vars = self.variables.clone();
        vars.remove(index);
        Ring::new(vars)
    }

    /// The ring of the trailing variables starting at `start`.
    pub fn tail(&self, start: usize) -> Result<Arc<Ring>> {
        if start > self.len() {
            return Err(Error::IndexOutOfRange { index: start, len: self.len() });
        }
        Ring::new(self.variables[start..].iter().cloned())
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QQ[{}]", self.variables.join(", "))
    }
}

pub(crate) fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

pub(crate) fn check_same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> Result<()> {
    if same_ring(a, b) {
        Ok(())
    } else {
        Err(Error::RingMismatch(format!("{a} vs {b}")))
    }
}
