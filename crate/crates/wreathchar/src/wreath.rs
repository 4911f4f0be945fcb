//! Colored permutations, conjugacy types and irreducible characters of
//! `G wr S_n` via Stembridge's Murnaghan-Nakayama rule.
//!
//! `psi` folds the per-tableau product `prod_i (-1)^{ht_T(i)}
//! chi_{f_T(i)}(g_i(x))` while the border-strip enumeration streams; every
//! character value of an abelian (or quotient-linear) model is a single root
//! of unity, so the fold only tracks an exponent sum and a height parity per
//! tableau and assembles one cyclotomic integer at the end.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::cyclotomic::CyclotomicInt;
use crate::groups::{AbelianGroup, ConstantColorChars};
use crate::partitions::{Composition, Partition, RPartitePartition};
use crate::tableaux::for_each_bst;
use crate::{Error, Result};

/// A permutation of `{0, ..., n-1}`, stored as its image vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n || seen[img] {
                return Err(Error::InvalidInput(format!(
                    "not a permutation of 0..{n}: {images:?}"
                )));
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation of `0..n` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for window in 0..cycle.len() {
                let from = cycle[window];
                let to = cycle[(window + 1) % cycle.len()];
                if from >= n || to >= n {
                    return Err(Error::InvalidInput(format!(
                        "cycle entry out of range 0..{n}: {cycle:?}"
                    )));
                }
                images[from] = to;
            }
        }
        Permutation::new(images)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self . other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Permutation { images }
    }

    /// Disjoint cycles, each starting at its smallest element, ordered by
    /// that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut next = self.images[start];
            while next != start {
                seen[next] = true;
                cycle.push(next);
                next = self.images[next];
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn cycle_type(&self) -> Partition {
        let mut lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(lengths).expect("cycle lengths are positive")
    }

    /// All permutations of `0..n`, lexicographic by image vector.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        let mut free: Vec<usize> = (0..n).collect();
        gen_perms(&mut prefix, &mut free, &mut out);
        out
    }
}

fn gen_perms(prefix: &mut Vec<usize>, free: &mut Vec<usize>, out: &mut Vec<Permutation>) {
    if free.is_empty() {
        out.push(Permutation {
            images: prefix.clone(),
        });
        return;
    }
    for idx in 0..free.len() {
        let value = free.remove(idx);
        prefix.push(value);
        gen_perms(prefix, free, out);
        prefix.pop();
        free.insert(idx, value);
    }
}

/// An element `(g_1, ..., g_n, pi)` of `G wr S_n` over an abelian model.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColoredPermutation {
    colors: Vec<Vec<u64>>,
    perm: Permutation,
}

impl ColoredPermutation {
    pub fn new(colors: Vec<Vec<u64>>, perm: Permutation) -> Result<Self> {
        if colors.len() != perm.n() {
            return Err(Error::SizeMismatch {
                context: "colors vs permutation degree",
                left: colors.len(),
                right: perm.n(),
            });
        }
        Ok(ColoredPermutation { colors, perm })
    }

    /// `(a, ..., a, pi)`.
    pub fn constant(group: &AbelianGroup, color: &[u64], perm: Permutation) -> Result<Self> {
        let color = group.element(color.to_vec())?;
        ColoredPermutation::new(vec![color; perm.n()], perm)
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    pub fn colors(&self) -> &[Vec<u64>] {
        &self.colors
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }
}

/// Product in `G wr S_n`: `(g, pi)(h, sigma) = (g * pi(h), pi sigma)` where
/// `pi(h)_i = h_{pi^{-1}(i)}`.
pub fn wreath_mul(
    group: &AbelianGroup,
    x: &ColoredPermutation,
    y: &ColoredPermutation,
) -> ColoredPermutation {
    let n = x.n();
    debug_assert_eq!(n, y.n());
    let pi_inv = x.perm.inverse();
    let colors = (0..n)
        .map(|i| group.mul(&x.colors[i], &y.colors[pi_inv.apply(i)]))
        .collect();
    ColoredPermutation {
        colors,
        perm: x.perm.compose(&y.perm),
    }
}

/// Inverse in `G wr S_n`: `(g, pi)^{-1} = (pi^{-1}(g^{-1}), pi^{-1})`.
pub fn wreath_inverse(group: &AbelianGroup, x: &ColoredPermutation) -> ColoredPermutation {
    let n = x.n();
    let colors = (0..n)
        .map(|i| group.inverse(&x.colors[x.perm.apply(i)]))
        .collect();
    ColoredPermutation {
        colors,
        perm: x.perm.inverse(),
    }
}

/// `y x y^{-1}`.
pub fn conjugate(
    group: &AbelianGroup,
    x: &ColoredPermutation,
    y: &ColoredPermutation,
) -> ColoredPermutation {
    wreath_mul(group, &wreath_mul(group, y, x), &wreath_inverse(group, y))
}

/// Cycle products: for each cycle `(i_1, ..., i_t)` of the underlying
/// permutation (smallest element first), the color product
/// `g_{i_t} g_{i_{t-1}} ... g_{i_1}`. Ordered by smallest cycle element.
pub fn cycle_products(group: &AbelianGroup, x: &ColoredPermutation) -> Vec<(usize, Vec<u64>)> {
    x.perm
        .cycles()
        .into_iter()
        .map(|cycle| {
            let mut product = group.identity();
            for &i in cycle.iter().rev() {
                product = group.mul(&product, &x.colors[i]);
            }
            (cycle.len(), product)
        })
        .collect()
}

/// The conjugacy invariant of `G wr S_n` for abelian `G`: each group element
/// maps to the cycle type of the cycles whose product it is. Absent elements
/// stand for the empty partition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConjugacyType {
    classes: BTreeMap<Vec<u64>, Partition>,
}

impl ConjugacyType {
    pub fn classes(&self) -> &BTreeMap<Vec<u64>, Partition> {
        &self.classes
    }

    /// Total size `||rho||`.
    pub fn norm(&self) -> usize {
        self.classes.values().map(Partition::size).sum()
    }
}

/// `ty(x)`.
pub fn ty(group: &AbelianGroup, x: &ColoredPermutation) -> ConjugacyType {
    let mut lengths: BTreeMap<Vec<u64>, Vec<usize>> = BTreeMap::new();
    for (len, product) in cycle_products(group, x) {
        lengths.entry(product).or_default().push(len);
    }
    let classes = lengths
        .into_iter()
        .map(|(g, mut ls)| {
            ls.sort_unstable_by(|a, b| b.cmp(a));
            (g, Partition::new(ls).expect("positive lengths"))
        })
        .collect();
    ConjugacyType { classes }
}

/// `psi_lambda(x)` by Stembridge's rule, for an abelian model.
pub fn psi(
    lambda: &RPartitePartition,
    group: &AbelianGroup,
    x: &ColoredPermutation,
) -> Result<CyclotomicInt> {
    if lambda.arity() != group.char_count() {
        return Err(Error::SizeMismatch {
            context: "shape arity vs character count",
            left: lambda.arity(),
            right: group.char_count(),
        });
    }
    if lambda.total() != x.n() {
        return Err(Error::SizeMismatch {
            context: "shape size vs permutation degree",
            left: lambda.total(),
            right: x.n(),
        });
    }
    let level = group.exponent();
    let products = cycle_products(group, x);
    let weight = Composition::new(products.iter().map(|(len, _)| *len).collect())?;
    let arity = lambda.arity();
    let exponents: Vec<Vec<usize>> = products
        .iter()
        .map(|(_, g)| {
            (0..arity)
                .map(|j| group.char_exponent(j, g, level))
                .collect()
        })
        .collect();
    Ok(fold_mn_sum(lambda, &weight, level, |i, j| exponents[i][j]))
}

/// `psi_lambda(a, ..., a, w_mu)` for any constant-color model; this is the
/// same full per-tableau product as [`psi`], just without materializing a
/// permutation.
pub fn psi_constant_color(
    lambda: &RPartitePartition,
    model: &impl ConstantColorChars,
    class: &Composition,
) -> Result<CyclotomicInt> {
    model.check_shape(lambda)?;
    if lambda.total() != class.size() {
        return Err(Error::SizeMismatch {
            context: "shape size vs class size",
            left: lambda.total(),
            right: class.size(),
        });
    }
    let level = model.level();
    let arity = lambda.arity();
    // Only supported components can ever host a strip; leave the rest unset.
    let mut exponents = vec![vec![None; arity]; class.len()];
    for &j in &lambda.support() {
        for (i, &part) in class.parts().iter().enumerate() {
            exponents[i][j] = Some(model.char_exponent_at_power(j, part)?);
        }
    }
    Ok(fold_mn_sum(lambda, class, level, |i, j| {
        exponents[i][j].expect("strips only land in supported components")
    }))
}

fn fold_mn_sum(
    lambda: &RPartitePartition,
    weight: &Composition,
    level: usize,
    exponent: impl Fn(usize, usize) -> usize,
) -> CyclotomicInt {
    let mut counts = vec![BigInt::zero(); level];
    for_each_bst(lambda.components(), weight, |steps| {
        let mut root_exp = 0usize;
        let mut parity = 0usize;
        for (i, step) in steps.iter().enumerate() {
            root_exp = (root_exp + exponent(i, step.component)) % level;
            parity += step.height;
        }
        if parity.is_multiple_of(2) {
            counts[root_exp] += 1;
        } else {
            counts[root_exp] -= 1;
        }
    });
    CyclotomicInt::from_coeffs(level, counts)
}

/// Degree of `psi_lambda`: `n!/(prod n_i!) * prod f^{lambda^i}` for abelian
/// color groups (all character degrees 1).
pub fn degree_rpartite(lambda: &RPartitePartition) -> BigUint {
    let mut value = factorial(lambda.total());
    for component in lambda.components() {
        value /= factorial(component.size());
        value *= component.degree();
    }
    value
}

fn factorial(n: usize) -> BigUint {
    let mut out = BigUint::one();
    for k in 1..=n {
        out *= BigUint::from(k);
    }
    out
}
