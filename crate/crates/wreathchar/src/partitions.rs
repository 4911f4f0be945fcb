//! Integer partitions and the combinatorics behind core/quotient surgery.
//!
//! Conventions used throughout:
//! - A partition is a weakly decreasing sequence of positive parts; the empty
//!   sequence is the unique partition of 0.
//! - The boundary word of a partition walks its southeast boundary from the
//!   southwest corner to the northeast corner, writing `1` for a horizontal
//!   step (a column) and `0` for a vertical step (a row). A nonempty
//!   partition's word starts with `1` and ends with `0`.
//! - A beta-set with `N` beads is `{lambda_i + N - i : 1 <= i <= N}`; bead
//!   value `v` sits on abacus runner `v mod r` at level `v div r`. All
//!   core/quotient/hat operations fix the total bead count to a multiple of
//!   `r`, which pins down the quotient component labelling.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::{Error, Result};

/// A partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, rejecting non-monotone or zero parts.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidInput(format!(
                "partition parts must be positive: {parts:?}"
            )));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput(format!(
                "partition parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    // Sorted positive parts, monotonicity already established by the caller.
    fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), or 0 past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition::from_parts_unchecked(parts)
    }

    /// Number of standard Young tableaux of this shape (hook length formula).
    pub fn degree(&self) -> BigUint {
        let conj = self.conjugate();
        let mut numerator = BigUint::one();
        for k in 1..=self.size() {
            numerator *= BigUint::from(k);
        }
        let mut hooks = BigUint::one();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 1..=row {
                let hook = row - j + conj.part(j - 1) - (i + 1) + 1;
                hooks *= BigUint::from(hook);
            }
        }
        numerator / hooks
    }

    /// Southeast boundary walk: `1` per column step, `0` per row step.
    pub fn boundary_word(&self) -> Vec<u8> {
        let mut word = Vec::with_capacity(self.len() + self.part(0));
        for i in (0..self.parts.len()).rev() {
            let ones = self.parts[i] - self.part(i + 1);
            word.extend(std::iter::repeat_n(1, ones));
            word.push(0);
        }
        word
    }

    /// Inverse of [`Partition::boundary_word`]. Leading `0`s and trailing
    /// `1`s are tolerated; they encode empty rows and empty columns.
    pub fn from_boundary_word(word: &[u8]) -> Partition {
        let mut parts = Vec::new();
        let mut columns = 0usize;
        for &step in word {
            match step {
                1 => columns += 1,
                0 => parts.push(columns),
                other => panic!("boundary word may contain only 0 and 1, got {other}"),
            }
        }
        parts.retain(|&p| p > 0);
        parts.reverse();
        Partition::from_parts_unchecked(parts)
    }

    /// All ways to remove a rim hook of `length` cells, ordered by position
    /// of the removed hook's head along the boundary.
    pub fn removable_rim_hooks(&self, length: usize) -> Vec<RimHookRemoval> {
        assert!(length >= 1, "rim hook length must be positive");
        let word = self.boundary_word();
        let mut removals = Vec::new();
        for j in 0..word.len().saturating_sub(length) {
            if word[j] == 1 && word[j + length] == 0 {
                let mut swapped = word.clone();
                swapped[j] = 0;
                swapped[j + length] = 1;
                let after = Partition::from_boundary_word(&swapped);
                let height = word[j + 1..j + length].iter().filter(|&&s| s == 0).count();
                let cells = removed_cells(self, &after);
                debug_assert_eq!(self.size() - after.size(), length);
                debug_assert_eq!(height + 1, rows_spanned(&cells));
                removals.push(RimHookRemoval {
                    before: self.clone(),
                    after,
                    length,
                    height,
                    cells,
                    position: j,
                });
            }
        }
        removals
    }
}

fn removed_cells(before: &Partition, after: &Partition) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    for i in 0..before.len() {
        for j in after.part(i)..before.part(i) {
            cells.push((i, j));
        }
    }
    cells
}

fn rows_spanned(cells: &[(usize, usize)]) -> usize {
    let mut rows: Vec<usize> = cells.iter().map(|&(i, _)| i).collect();
    rows.dedup();
    rows.len()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        let text = self
            .parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "{text}")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

fn is_empty_literal(text: &str) -> bool {
    matches!(text, "" | "0" | "∅" | "-")
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"3,1,1"`; `""`, `"0"`, `"∅"` and `"-"` all denote the empty
    /// partition.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if is_empty_literal(text) {
            return Ok(Partition::empty());
        }
        let parts = parse_parts(text)?;
        Partition::new(parts)
    }
}

fn parse_parts(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|piece| {
            piece
                .trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad partition part {piece:?} in {text:?}")))
        })
        .collect()
}

/// An ordered sequence of positive parts; the weight of a peeling.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidInput(format!(
                "composition parts must be positive: {parts:?}"
            )));
        }
        Ok(Composition { parts })
    }

    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The parts sorted into a partition.
    pub fn sorted(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_parts_unchecked(parts)
    }

    /// Each part multiplied by `factor`.
    pub fn scaled(&self, factor: usize) -> Composition {
        assert!(factor >= 1);
        Composition {
            parts: self.parts.iter().map(|p| p * factor).collect(),
        }
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition {
            parts: p.parts().to_vec(),
        }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        let text = self
            .parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "{text}")
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if is_empty_literal(text) {
            return Ok(Composition::empty());
        }
        Composition::new(parse_parts(text)?)
    }
}

/// An ordered tuple of partitions; indexes `Irr(G wr S_n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RPartitePartition {
    components: Vec<Partition>,
}

impl RPartitePartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidInput(
                "an r-partite partition needs arity >= 1".into(),
            ));
        }
        Ok(RPartitePartition { components })
    }

    /// `arity` empty components.
    pub fn empty(arity: usize) -> Result<Self> {
        RPartitePartition::new(vec![Partition::empty(); arity])
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, j: usize) -> &Partition {
        &self.components[j]
    }

    pub fn arity(&self) -> usize {
        self.components.len()
    }

    /// Total size over all components.
    pub fn total(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    /// Component sizes `(n_0, ..., n_{r-1})`.
    pub fn component_sizes(&self) -> Vec<usize> {
        self.components.iter().map(Partition::size).collect()
    }

    /// Indices of nonempty components.
    pub fn support(&self) -> Vec<usize> {
        self.components
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_empty())
            .map(|(j, _)| j)
            .collect()
    }

    /// Reinterprets at `arity` components by appending or dropping empty
    /// ones; dropping a nonempty component is an error.
    pub fn padded(&self, arity: usize) -> Result<RPartitePartition> {
        if arity == 0 {
            return Err(Error::InvalidInput("arity must be >= 1".into()));
        }
        if self.components.len() > arity {
            if self.components[arity..].iter().any(|c| !c.is_empty()) {
                return Err(Error::InvalidInput(format!(
                    "cannot reduce {self} to arity {arity}: nonempty component beyond it"
                )));
            }
            return RPartitePartition::new(self.components[..arity].to_vec());
        }
        let mut components = self.components.clone();
        components.resize(arity, Partition::empty());
        RPartitePartition::new(components)
    }
}

impl fmt::Display for RPartitePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self
            .components
            .iter()
            .map(Partition::to_string)
            .collect::<Vec<_>>()
            .join("|");
        write!(f, "[{body}]")
    }
}

impl fmt::Debug for RPartitePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RPartite({self})")
    }
}

impl FromStr for RPartitePartition {
    type Err = Error;

    /// Parses `"[3,1|∅|2]"`; `∅`, `-`, `0` or nothing denote an empty
    /// component. The surrounding brackets are optional.
    fn from_str(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|rest| rest.strip_suffix(']'))
            .unwrap_or(trimmed);
        let components = inner
            .split('|')
            .map(Partition::from_str)
            .collect::<Result<Vec<_>>>()?;
        RPartitePartition::new(components)
    }
}

/// One rim-hook removal step: the shapes before and after, the hook's length,
/// its height (rows spanned minus one) and the removed cells.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RimHookRemoval {
    pub before: Partition,
    pub after: Partition,
    pub length: usize,
    pub height: usize,
    pub cells: Vec<(usize, usize)>,
    /// Index of the `1` in `before`'s boundary word that the removal swaps
    /// with the `0` a `length` further on; distinct removals of the same
    /// length differ exactly here.
    pub position: usize,
}

/// Bead levels per abacus runner.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BetaConfiguration {
    runner_count: usize,
    /// `runners[j]` holds the ascending levels occupied on runner `j`.
    runners: Vec<Vec<usize>>,
}

impl BetaConfiguration {
    pub fn runner_count(&self) -> usize {
        self.runner_count
    }

    pub fn runner(&self, j: usize) -> &[usize] {
        &self.runners[j]
    }

    pub fn total_beads(&self) -> usize {
        self.runners.iter().map(Vec::len).sum()
    }

    /// Reassembles bead values `j + r*level` and decodes them as a beta-set.
    pub fn decode(&self) -> Partition {
        let r = self.runner_count;
        let mut values: Vec<usize> = self
            .runners
            .iter()
            .enumerate()
            .flat_map(|(j, levels)| levels.iter().map(move |&level| j + r * level))
            .collect();
        values.sort_unstable_by(|a, b| b.cmp(a));
        decode_beta_values(&values)
    }

    /// Decodes runner `j`'s levels as a beta-set of its own.
    pub fn decode_runner(&self, j: usize) -> Partition {
        let mut values = self.runners[j].clone();
        values.sort_unstable_by(|a, b| b.cmp(a));
        decode_beta_values(&values)
    }

    /// Slides every bead to the lowest free levels of its runner.
    pub fn collapsed(&self) -> BetaConfiguration {
        BetaConfiguration {
            runner_count: self.runner_count,
            runners: self
                .runners
                .iter()
                .map(|levels| (0..levels.len()).collect())
                .collect(),
        }
    }
}

// `values` strictly decreasing; entry i (0-based) contributes part value
// values[i] - (N - 1 - i) where N is the bead count.
fn decode_beta_values(values: &[usize]) -> Partition {
    let n = values.len();
    let parts: Vec<usize> = values
        .iter()
        .enumerate()
        .map(|(i, &v)| v - (n - 1 - i))
        .filter(|&p| p > 0)
        .collect();
    Partition::from_parts_unchecked(parts)
}

/// Canonical beta/abacus encoding of `lambda` on `r` runners: the bead count
/// is the smallest multiple of `r` that is at least `max(len(lambda), r)`.
pub fn to_beta(lambda: &Partition, r: usize) -> BetaConfiguration {
    assert!(r >= 1, "runner count must be positive");
    let needed = lambda.len().max(r);
    let beads = needed.div_ceil(r) * r;
    to_beta_with_beads(lambda, r, beads).expect("canonical bead count is admissible")
}

/// Beta encoding with an explicit bead count; any multiple of `r` that is at
/// least `len(lambda)` yields the same core and the same quotient labelling
/// as the canonical minimal choice.
pub fn to_beta_with_beads(lambda: &Partition, r: usize, beads: usize) -> Result<BetaConfiguration> {
    if r < 1 {
        return Err(Error::InvalidInput("runner count must be positive".into()));
    }
    if !beads.is_multiple_of(r) || beads < lambda.len() || beads == 0 {
        return Err(Error::InvalidInput(format!(
            "bead count {beads} must be a positive multiple of {r} covering {} rows",
            lambda.len()
        )));
    }
    let mut runners = vec![Vec::new(); r];
    for i in 1..=beads {
        let value = lambda.part(i - 1) + beads - i;
        runners[value % r].push(value / r);
    }
    for levels in &mut runners {
        levels.sort_unstable();
    }
    Ok(BetaConfiguration {
        runner_count: r,
        runners,
    })
}

/// The r-core: what greedy removal of all length-`r` rim hooks leaves.
pub fn r_core(lambda: &Partition, r: usize) -> Partition {
    assert!(r >= 2, "core needs r >= 2");
    to_beta(lambda, r).collapsed().decode()
}

/// The r-quotient, component `j` read off runner `j`.
pub fn r_quotient(lambda: &Partition, r: usize) -> RPartitePartition {
    assert!(r >= 2, "quotient needs r >= 2");
    let beta = to_beta(lambda, r);
    let components = (0..r).map(|j| beta.decode_runner(j)).collect();
    RPartitePartition::new(components).expect("r >= 2 components")
}

/// The hat map: the unique partition of `r*n` with empty r-core whose
/// r-quotient is `lambda`.
pub fn hat(lambda: &RPartitePartition) -> Result<Partition> {
    let r = lambda.arity();
    if r < 2 {
        return Err(Error::InvalidInput(format!(
            "hat needs arity >= 2, got {r}"
        )));
    }
    let q = lambda
        .components()
        .iter()
        .map(Partition::len)
        .max()
        .unwrap_or(0)
        .max(1);
    let mut values = Vec::with_capacity(r * q);
    for (j, component) in lambda.components().iter().enumerate() {
        for i in 1..=q {
            values.push(j + r * (component.part(i - 1) + q - i));
        }
    }
    values.sort_unstable_by(|a, b| b.cmp(a));
    Ok(decode_beta_values(&values))
}

/// All partitions of `n`, in descending lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    gen_partitions(n, n, &mut prefix, &mut out);
    out
}

fn gen_partitions(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition::from_parts_unchecked(prefix.clone()));
        return;
    }
    for first in (1..=n.min(max)).rev() {
        prefix.push(first);
        gen_partitions(n - first, first, prefix, out);
        prefix.pop();
    }
}

/// All r-partite partitions of `n` with the given arity, component sizes
/// enumerated largest-first.
pub fn enumerate_rpartite(n: usize, arity: usize) -> Vec<RPartitePartition> {
    assert!(arity >= 1);
    let per_size: Vec<Vec<Partition>> = (0..=n).map(enumerate_partitions).collect();
    let mut out = Vec::new();
    let mut prefix: Vec<Partition> = Vec::new();
    gen_rpartite(n, arity, &per_size, &mut prefix, &mut out);
    out
}

fn gen_rpartite(
    n: usize,
    remaining: usize,
    per_size: &[Vec<Partition>],
    prefix: &mut Vec<Partition>,
    out: &mut Vec<RPartitePartition>,
) {
    if remaining == 0 {
        if n == 0 {
            out.push(RPartitePartition::new(prefix.clone()).expect("arity >= 1"));
        }
        return;
    }
    if remaining == 1 {
        for p in &per_size[n] {
            prefix.push(p.clone());
            gen_rpartite(0, 0, per_size, prefix, out);
            prefix.pop();
        }
        return;
    }
    for size in (0..=n).rev() {
        for p in &per_size[size] {
            prefix.push(p.clone());
            gen_rpartite(n - size, remaining - 1, per_size, prefix, out);
            prefix.pop();
        }
    }
}
