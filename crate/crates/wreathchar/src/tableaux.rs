//! Border-strip tableau enumeration for straight and r-partite shapes.
//!
//! A tableau of shape `lambda` and weight `mu = (mu_1, ..., mu_t)` is built
//! by peeling rim hooks of sizes `mu_t, ..., mu_1` (in that order) off the
//! shape until nothing is left; step `i` records which component lost the
//! strip, the strip's length `mu_i` and its height. Enumeration streams
//! through a depth-first peeling and never materializes the tableau set
//! unless asked to; branches are keyed on (component, boundary position), so
//! no duplicates arise.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::partitions::{Composition, Partition, RPartitePartition};
use crate::{Error, Result};

/// One peeling step of a border-strip tableau.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BstStep {
    /// Component index `f_T(i)`; always 0 for straight shapes.
    pub component: usize,
    /// Strip length `mu_i`.
    pub length: usize,
    /// Rows spanned by the strip, minus one.
    pub height: usize,
    /// Boundary-word index of the `1` this strip swaps; together with the
    /// component this pins the step down exactly.
    pub position: usize,
}

/// A full peeling record; the 1-indexed step `i` is `steps()[i-1]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BorderStripTableau {
    steps: Vec<BstStep>,
}

impl BorderStripTableau {
    pub fn steps(&self) -> &[BstStep] {
        &self.steps
    }

    /// Total height `ht(T)`.
    pub fn total_height(&self) -> usize {
        self.steps.iter().map(|s| s.height).sum()
    }

    /// The weight this tableau was built for.
    pub fn weight(&self) -> Composition {
        Composition::new(self.steps.iter().map(|s| s.length).collect())
            .expect("step lengths are positive")
    }
}

/// Runs `visit` on the step list of every border-strip tableau of the given
/// (componentwise) shape and weight.
pub(crate) fn for_each_bst<F: FnMut(&[BstStep])>(
    components: &[Partition],
    weight: &Composition,
    mut visit: F,
) {
    let mut shapes = components.to_vec();
    let mut steps: Vec<BstStep> = weight
        .parts()
        .iter()
        .map(|&length| BstStep {
            component: 0,
            length,
            height: 0,
            position: 0,
        })
        .collect();
    peel(&mut shapes, weight.parts(), &mut steps, &mut visit);
}

fn peel<F: FnMut(&[BstStep])>(
    shapes: &mut Vec<Partition>,
    weight: &[usize],
    steps: &mut Vec<BstStep>,
    visit: &mut F,
) {
    let Some((&length, remaining)) = weight.split_last() else {
        visit(steps);
        return;
    };
    let index = weight.len() - 1;
    for component in 0..shapes.len() {
        if shapes[component].size() < length {
            continue;
        }
        for removal in shapes[component].removable_rim_hooks(length) {
            steps[index] = BstStep {
                component,
                length,
                height: removal.height,
                position: removal.position,
            };
            shapes[component] = removal.after.clone();
            peel(shapes, remaining, steps, visit);
            shapes[component] = removal.before.clone();
        }
    }
}

fn check_sizes(total: usize, weight: &Composition, context: &'static str) -> Result<()> {
    if total != weight.size() {
        return Err(Error::SizeMismatch {
            context,
            left: total,
            right: weight.size(),
        });
    }
    Ok(())
}

/// All border-strip tableaux of a straight shape.
pub fn enumerate_bst(shape: &Partition, weight: &Composition) -> Result<Vec<BorderStripTableau>> {
    check_sizes(shape.size(), weight, "enumerate_bst")?;
    let mut out = Vec::new();
    for_each_bst(std::slice::from_ref(shape), weight, |steps| {
        out.push(BorderStripTableau {
            steps: steps.to_vec(),
        });
    });
    Ok(out)
}

/// All border-strip tableaux of an r-partite shape.
pub fn enumerate_bst_rpartite(
    shape: &RPartitePartition,
    weight: &Composition,
) -> Result<Vec<BorderStripTableau>> {
    check_sizes(shape.total(), weight, "enumerate_bst_rpartite")?;
    let mut out = Vec::new();
    for_each_bst(shape.components(), weight, |steps| {
        out.push(BorderStripTableau {
            steps: steps.to_vec(),
        });
    });
    Ok(out)
}

/// `|BST(shape, weight)|` without materializing tableaux.
pub fn count_bst(shape: &Partition, weight: &Composition) -> Result<BigUint> {
    check_sizes(shape.size(), weight, "count_bst")?;
    let mut count = BigUint::zero();
    for_each_bst(std::slice::from_ref(shape), weight, |_| {
        count += BigUint::one();
    });
    Ok(count)
}

/// `|BST(shape, weight)|` for an r-partite shape.
pub fn count_bst_rpartite(shape: &RPartitePartition, weight: &Composition) -> Result<BigUint> {
    check_sizes(shape.total(), weight, "count_bst_rpartite")?;
    let mut count = BigUint::zero();
    for_each_bst(shape.components(), weight, |_| {
        count += BigUint::one();
    });
    Ok(count)
}

/// `sum over T of (-1)^{ht(T)}`; for straight shapes this is the classical
/// Murnaghan-Nakayama value of the character at the class of `weight`.
pub fn signed_sum(shape: &Partition, weight: &Composition) -> Result<BigInt> {
    check_sizes(shape.size(), weight, "signed_sum")?;
    Ok(signed_sum_over(std::slice::from_ref(shape), weight))
}

/// Signed tableau sum over an r-partite shape.
pub fn signed_sum_rpartite(shape: &RPartitePartition, weight: &Composition) -> Result<BigInt> {
    check_sizes(shape.total(), weight, "signed_sum_rpartite")?;
    Ok(signed_sum_over(shape.components(), weight))
}

fn signed_sum_over(components: &[Partition], weight: &Composition) -> BigInt {
    let mut sum = BigInt::zero();
    for_each_bst(components, weight, |steps| {
        let height: usize = steps.iter().map(|s| s.height).sum();
        if height.is_multiple_of(2) {
            sum += 1;
        } else {
            sum -= 1;
        }
    });
    sum
}
