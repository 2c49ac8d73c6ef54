//! Global append-only registry of named variables.
//!
//! Every indeterminate used anywhere in the crate (initial cluster variables,
//! symbolic matrix entries, variables created by mutation) is interned here.
//! Ids are dense and allocated in registration order; names are unique, so
//! registering the same name twice returns the same id. Registration is
//! internally synchronised and lookups never block correctness of concurrent
//! writers.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

/// Index of a named variable in the global registry.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VarId(pub u32);

struct Registry {
    names: Vec<String>,
    index: HashMap<String, VarId>,
}

fn registry() -> &'static RwLock<Registry> {
    static REG: OnceLock<RwLock<Registry>> = OnceLock::new();
    REG.get_or_init(|| {
        RwLock::new(Registry {
            names: Vec::new(),
            index: HashMap::new(),
        })
    })
}

/// Interns `name`, returning its id. Idempotent.
pub fn var(name: &str) -> VarId {
    {
        let reg = registry().read().unwrap();
        if let Some(&id) = reg.index.get(name) {
            return id;
        }
    }
    let mut reg = registry().write().unwrap();
    if let Some(&id) = reg.index.get(name) {
        return id;
    }
    let id = VarId(reg.names.len() as u32);
    reg.names.push(name.to_string());
    reg.index.insert(name.to_string(), id);
    id
}

/// Looks up an already-registered name.
pub fn lookup(name: &str) -> Option<VarId> {
    registry().read().unwrap().index.get(name).copied()
}

/// The name a variable was registered under.
///
/// Panics if `id` was never allocated by [`var`]; ids are only obtainable
/// from the registry, so this cannot happen for well-formed callers.
pub fn name(id: VarId) -> String {
    registry().read().unwrap().names[id.0 as usize].clone()
}

impl std::fmt::Display for VarId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", name(*self))
    }
}
