//! Irreducible characters of `S_n` via the Murnaghan-Nakayama recursion.
//!
//! `chi` removes one rim hook per recursion step, always for the largest
//! remaining weight part; memoization keys on (remaining shape, remaining
//! weight sorted into a partition), which is sound because character values
//! depend on the cycle type only. The cache is a synchronized map so sweep
//! drivers may share it across worker threads.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::partitions::{enumerate_partitions, r_core, Composition, Partition};
use crate::{Error, Result};

/// Shared memo table for [`chi`]. Unbounded by default; with a cap set, the
/// whole table is cleared whenever an insert would exceed it.
pub struct CharCache {
    map: Mutex<HashMap<(Partition, Partition), BigInt>>,
    cap: Option<usize>,
}

impl CharCache {
    pub fn new() -> Self {
        CharCache {
            map: Mutex::new(HashMap::new()),
            cap: None,
        }
    }

    pub fn with_cap(cap: Option<usize>) -> Self {
        CharCache {
            map: Mutex::new(HashMap::new()),
            cap,
        }
    }

    pub fn len(&self) -> usize {
        self.map.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `chi_shape(w_class)`, the irreducible character of `S_n` indexed by
    /// `shape` at the class whose cycle type is `class` (order-insensitive).
    pub fn chi(&self, shape: &Partition, class: &Composition) -> Result<BigInt> {
        if shape.size() != class.size() {
            return Err(Error::SizeMismatch {
                context: "chi",
                left: shape.size(),
                right: class.size(),
            });
        }
        Ok(self.chi_sorted(shape, &class.sorted()))
    }

    fn chi_sorted(&self, shape: &Partition, weight: &Partition) -> BigInt {
        if weight.is_empty() {
            return BigInt::one();
        }
        let key = (shape.clone(), weight.clone());
        if let Some(hit) = self.map.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let largest = weight.parts()[0];
        let rest = Partition::new(weight.parts()[1..].to_vec()).expect("still sorted");
        let mut value = BigInt::zero();
        for removal in shape.removable_rim_hooks(largest) {
            let sub = self.chi_sorted(&removal.after, &rest);
            if removal.height % 2 == 0 {
                value += sub;
            } else {
                value -= sub;
            }
        }
        let mut map = self.map.lock().unwrap();
        map.insert(key, value.clone());
        if let Some(cap) = self.cap {
            if map.len() > cap {
                map.clear();
            }
        }
        value
    }
}

impl Default for CharCache {
    fn default() -> Self {
        CharCache::new()
    }
}

/// One-shot [`CharCache::chi`] with a throwaway cache.
pub fn chi(shape: &Partition, class: &Composition) -> Result<BigInt> {
    CharCache::new().chi(shape, class)
}

/// `sign_r`: the common height parity of every full peeling of `lambda` by
/// strips of length `r`. Defined exactly on partitions of a multiple of `r`
/// with empty r-core; equals the sign of `chi_lambda(w_eta)` for
/// `eta = (r, ..., r)`.
pub fn sign_r(lambda: &Partition, r: usize) -> Result<i32> {
    if r < 2 {
        return Err(Error::InvalidInput(format!("sign_r needs r >= 2, got {r}")));
    }
    if !lambda.size().is_multiple_of(r) {
        return Err(Error::InvalidInput(format!(
            "sign_{r} needs |lambda| divisible by {r}, got |{lambda}| = {}",
            lambda.size()
        )));
    }
    if !r_core(lambda, r).is_empty() {
        return Err(Error::NonEmptyCore {
            shape: lambda.to_string(),
            r,
        });
    }
    let mut current = lambda.clone();
    let mut parity = 0usize;
    while !current.is_empty() {
        let removal = current
            .removable_rim_hooks(r)
            .into_iter()
            .next()
            .expect("empty r-core guarantees a removable r-hook");
        parity += removal.height;
        current = removal.after;
    }
    Ok(if parity.is_multiple_of(2) { 1 } else { -1 })
}

/// The centralizer order `z_mu = prod_i i^{m_i} m_i!`.
pub fn centralizer_order(class: &Partition) -> BigUint {
    let mut z = BigUint::one();
    let mut run = 0usize;
    let parts = class.parts();
    for (idx, &part) in parts.iter().enumerate() {
        run += 1;
        z *= BigUint::from(part);
        if idx + 1 == parts.len() || parts[idx + 1] != part {
            for k in 1..=run {
                z *= BigUint::from(k);
            }
            run = 0;
        }
    }
    z
}

/// Conjugacy class size `n! / z_mu`.
pub fn class_size(class: &Partition) -> BigUint {
    let mut numerator = BigUint::one();
    for k in 1..=class.size() {
        numerator *= BigUint::from(k);
    }
    numerator / centralizer_order(class)
}

/// The full character table of `S_n`: rows indexed by shapes, columns by
/// class cycle types, both in enumeration order.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub n: usize,
    /// Row labels, as partition literals.
    pub shapes: Vec<String>,
    /// Column labels, as partition literals.
    pub classes: Vec<String>,
    /// Entry (row, col) is chi at (shapes\[row\], classes\[col\]).
    pub values: Vec<Vec<BigInt>>,
}

impl Serialize for CharacterTable {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let values: Vec<Vec<serde_json::Number>> = self
            .values
            .iter()
            .map(|row| row.iter().map(crate::cyclotomic::bigint_number).collect())
            .collect();
        let mut state = serializer.serialize_struct("CharacterTable", 4)?;
        state.serialize_field("n", &self.n)?;
        state.serialize_field("shapes", &self.shapes)?;
        state.serialize_field("classes", &self.classes)?;
        state.serialize_field("values", &values)?;
        state.end()
    }
}

/// Computes the character table of `S_n`.
pub fn character_table(n: usize, cache: &CharCache) -> Result<CharacterTable> {
    if n == 0 {
        return Err(Error::InvalidInput("character_table needs n >= 1".into()));
    }
    let shapes = enumerate_partitions(n);
    let classes = shapes.clone();
    let mut values = Vec::with_capacity(shapes.len());
    for shape in &shapes {
        let mut row = Vec::with_capacity(classes.len());
        for class in &classes {
            row.push(cache.chi(shape, &Composition::from(class))?);
        }
        values.push(row);
    }
    Ok(CharacterTable {
        n,
        shapes: shapes.iter().map(Partition::to_string).collect(),
        classes: classes.iter().map(Partition::to_string).collect(),
        values,
    })
}
