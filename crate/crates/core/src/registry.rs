// Copyright 2026 The rabisim Authors
// SPDX-License-Identifier: Apache-2.0

//! Name → strategy lookup shared by the model, element, spectral-density and
//! readout families.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::{Error, Result};

pub struct Registry<T: ?Sized> {
    kind: &'static str,
    entries: BTreeMap<String, Arc<T>>,
}

impl<T: ?Sized> Registry<T> {
    pub fn new(kind: &'static str) -> Self {
        Self {
            kind,
            entries: BTreeMap::new(),
        }
    }

    /// Registers under `name`, replacing any previous entry.
    pub fn register(&mut self, name: &str, strategy: Arc<T>) -> &mut Self {
        self.entries.insert(name.to_owned(), strategy);
        self
    }

    pub fn get(&self, name: &str) -> Result<Arc<T>> {
        self.entries
            .get(name)
            .cloned()
            .ok_or_else(|| Error::UnknownStrategy {
                kind: self.kind,
                name: name.to_owned(),
                available: self.names().join(", "),
            })
    }

    pub fn names(&self) -> Vec<&str> {
        self.entries.keys().map(String::as_str).collect()
    }
}
