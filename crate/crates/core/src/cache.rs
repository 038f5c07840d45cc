use std::collections::HashMap;
use std::hash::Hash;
use std::sync::Arc;

use parking_lot::RwLock;

/// Concurrent memo table: many readers, at most one insertion per key.
/// Values are computed outside the lock; if two threads race on the same key
/// the first insertion wins and both observe it.
pub struct Memo<K, V> {
    map: RwLock<HashMap<K, Arc<V>>>,
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub fn new() -> Self {
        Memo {
            map: RwLock::new(HashMap::new()),
        }
    }

    pub fn get_or_insert_with(&self, key: &K, f: impl FnOnce() -> V) -> Arc<V> {
        if let Some(v) = self.map.read().get(key) {
            return Arc::clone(v);
        }
        let v = Arc::new(f());
        Arc::clone(self.map.write().entry(key.clone()).or_insert(v))
    }

    pub fn get_or_try_insert_with<E>(
        &self,
        key: &K,
        f: impl FnOnce() -> Result<V, E>,
    ) -> Result<Arc<V>, E> {
        if let Some(v) = self.map.read().get(key) {
            return Ok(Arc::clone(v));
        }
        let v = Arc::new(f()?);
        Ok(Arc::clone(self.map.write().entry(key.clone()).or_insert(v)))
    }

    pub fn len(&self) -> usize {
        self.map.read().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl<K: Eq + Hash + Clone, V> Default for Memo<K, V> {
    fn default() -> Self {
        Self::new()
    }
}
