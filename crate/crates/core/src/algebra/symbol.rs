//! Interned variable names.
//!
//! Variable identity is by name; the interner just makes comparisons and
//! monomial keys cheap. Ids are assigned in first-use order, so everything
//! derived from them is deterministic within a process. Code that needs a
//! name-based order (printing, classification tables) sorts explicitly.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

/// An interned variable name.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(u32);

struct Interner {
    names: Vec<String>,
    ids: HashMap<String, u32>,
}

fn interner() -> &'static RwLock<Interner> {
    static INTERNER: OnceLock<RwLock<Interner>> = OnceLock::new();
    INTERNER.get_or_init(|| {
        RwLock::new(Interner {
            names: Vec::new(),
            ids: HashMap::new(),
        })
    })
}

impl Symbol {
    /// Intern a variable name.
    pub fn new(name: &str) -> Symbol {
        {
            let guard = interner().read().unwrap();
            if let Some(&id) = guard.ids.get(name) {
                return Symbol(id);
            }
        }
        let mut guard = interner().write().unwrap();
        if let Some(&id) = guard.ids.get(name) {
            return Symbol(id);
        }
        let id = guard.names.len() as u32;
        guard.names.push(name.to_string());
        guard.ids.insert(name.to_string(), id);
        Symbol(id)
    }

    /// The interned name.
    pub fn name(&self) -> String {
        interner().read().unwrap().names[self.0 as usize].clone()
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl From<&str> for Symbol {
    fn from(name: &str) -> Symbol {
        Symbol::new(name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interning_is_stable() {
        let a = Symbol::new("x");
        let b = Symbol::new("x");
        assert_eq!(a, b);
        assert_eq!(a.name(), "x");
        assert_ne!(Symbol::new("y"), a);
    }
}
