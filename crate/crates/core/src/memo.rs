use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex, OnceLock};

/// A process-wide memo table. Values are computed outside the lock, so a
/// computation may itself consult the same table.
pub(crate) struct Memo<K, V> {
    map: OnceLock<Mutex<HashMap<K, Arc<V>>>>,
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub(crate) const fn new() -> Self {
        Memo { map: OnceLock::new() }
    }

    fn table(&self) -> &Mutex<HashMap<K, Arc<V>>> {
        self.map.get_or_init(Default::default)
    }

    pub(crate) fn get_or_insert_with(&self, key: &K, compute: impl FnOnce() -> V) -> Arc<V> {
        if let Some(v) = self.table().lock().expect("memo poisoned").get(key) {
            return Arc::clone(v);
        }
        let value = Arc::new(compute());
        let mut guard = self.table().lock().expect("memo poisoned");
        Arc::clone(guard.entry(key.clone()).or_insert(value))
    }

    pub(crate) fn get_or_try_insert_with<E>(
        &self,
        key: &K,
        compute: impl FnOnce() -> Result<V, E>,
    ) -> Result<Arc<V>, E> {
        if let Some(v) = self.table().lock().expect("memo poisoned").get(key) {
            return Ok(Arc::clone(v));
        }
        let value = Arc::new(compute()?);
        let mut guard = self.table().lock().expect("memo poisoned");
        Ok(Arc::clone(guard.entry(key.clone()).or_insert(value)))
    }
}
