//! Brute-force oracles, independent of the library's computation paths.
//!
//! Everything here recomputes its answer from first principles (cell-level
//! searches, exhaustive enumeration, floating-point embeddings) so that the
//! differential tests genuinely cross-check two unrelated routes.

#![allow(dead_code)]

use std::collections::BTreeSet;

use wreathchar::cyclotomic::CyclotomicInt;
use wreathchar::Partition;

/// Number of standard Young tableaux, by brute force: the largest entry must
/// sit in a removable corner; recurse over all corners.
pub fn count_syt(shape: &Partition) -> u64 {
    if shape.is_empty() {
        return 1;
    }
    let parts = shape.parts();
    let mut total = 0;
    for i in 0..parts.len() {
        let is_corner = parts[i] >= 1 && (i + 1 == parts.len() || parts[i + 1] < parts[i]);
        if !is_corner {
            continue;
        }
        let mut rest = parts.to_vec();
        rest[i] -= 1;
        rest.retain(|&p| p > 0);
        total += count_syt(&Partition::new(rest).unwrap());
    }
    total
}

/// All length-`k` rim-hook removals found by cell-level search: every
/// sub-partition `nu` with `|lambda/nu| = k` whose skew cells are
/// edge-connected and contain no 2x2 square. Returns (after, height) pairs,
/// sorted.
pub fn removals_by_cells(lambda: &Partition, k: usize) -> Vec<(Partition, usize)> {
    let mut results = Vec::new();
    if lambda.size() < k {
        return results;
    }
    let target = lambda.size() - k;
    for nu in subpartitions_of_size(lambda, target) {
        let cells = skew_cells(lambda, &nu);
        if cells.len() == k && is_border_strip(&cells) {
            let rows: BTreeSet<usize> = cells.iter().map(|&(i, _)| i).collect();
            results.push((nu, rows.len() - 1));
        }
    }
    results.sort();
    results
}

fn subpartitions_of_size(lambda: &Partition, size: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    gen_subpartitions(lambda, 0, size, usize::MAX, &mut prefix, &mut out);
    out
}

fn gen_subpartitions(
    lambda: &Partition,
    row: usize,
    remaining: usize,
    max_part: usize,
    prefix: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition::new(prefix.clone()).unwrap());
        return;
    }
    if row >= lambda.len() {
        return;
    }
    let cap = lambda.part(row).min(max_part).min(remaining);
    for part in (1..=cap).rev() {
        prefix.push(part);
        gen_subpartitions(lambda, row + 1, remaining - part, part, prefix, out);
        prefix.pop();
    }
}

fn skew_cells(lambda: &Partition, nu: &Partition) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    for i in 0..lambda.len() {
        for j in nu.part(i)..lambda.part(i) {
            cells.push((i, j));
        }
    }
    cells
}

fn is_border_strip(cells: &[(usize, usize)]) -> bool {
    if cells.is_empty() {
        return false;
    }
    let set: BTreeSet<(usize, usize)> = cells.iter().copied().collect();
    // No 2x2 square.
    for &(i, j) in cells {
        if set.contains(&(i + 1, j)) && set.contains(&(i, j + 1)) && set.contains(&(i + 1, j + 1)) {
            return false;
        }
    }
    // Edge-connected.
    let mut seen = BTreeSet::new();
    let mut stack = vec![cells[0]];
    seen.insert(cells[0]);
    while let Some((i, j)) = stack.pop() {
        let mut neighbors = vec![(i + 1, j), (i, j + 1)];
        if i > 0 {
            neighbors.push((i - 1, j));
        }
        if j > 0 {
            neighbors.push((i, j - 1));
        }
        for nb in neighbors {
            if set.contains(&nb) && seen.insert(nb) {
                stack.push(nb);
            }
        }
    }
    seen.len() == cells.len()
}

/// Every shape a maximal greedy `r`-peeling can end at, by exhaustive DFS
/// over removal orders.
pub fn terminal_shapes(lambda: &Partition, r: usize) -> BTreeSet<Partition> {
    let mut terminals = BTreeSet::new();
    let mut visited = BTreeSet::new();
    explore(lambda, r, &mut visited, &mut terminals);
    terminals
}

fn explore(
    shape: &Partition,
    r: usize,
    visited: &mut BTreeSet<Partition>,
    terminals: &mut BTreeSet<Partition>,
) {
    if !visited.insert(shape.clone()) {
        return;
    }
    let removals = removals_by_cells(shape, r);
    if removals.is_empty() {
        terminals.insert(shape.clone());
        return;
    }
    for (after, _) in removals {
        explore(&after, r, visited, terminals);
    }
}

/// Numeric embedding of a cyclotomic integer at `zeta_L = exp(2 pi i / L)`.
/// Sanity checks only; float evidence is never authoritative.
pub fn embed(value: &CyclotomicInt) -> (f64, f64) {
    let level = value.level() as f64;
    let mut re = 0.0;
    let mut im = 0.0;
    for (k, c) in value.coeffs().iter().enumerate() {
        let c: f64 = c.to_string().parse().unwrap();
        let angle = 2.0 * std::f64::consts::PI * (k as f64) / level;
        re += c * angle.cos();
        im += c * angle.sin();
    }
    (re, im)
}
