//! Models of the color group `G` that supply exact character evaluations.
//!
//! Two models ship. [`AbelianGroup`] is the full model: `G` given by its
//! invariant factors, elements as coordinate tuples, all `|G|` irreducible
//! characters evaluable anywhere. [`QuotientLinearModel`] covers an arbitrary
//! finite `G` through its abelianization: only the `s = [G:G']` linear
//! characters exist, and only on powers of one distinguished element, which
//! is exactly the surface the linear-support character identities need.
//!
//! The character labelling is a fixed, serialized convention: for invariant
//! factors `(m_1, ..., m_k)`, character `j` carries the tuple `(j_1, ..., j_k)`
//! (lexicographic order) and sends `g` to `prod_t zeta_{m_t}^{j_t g_t}`.

use num_integer::Integer;
use serde_json::json;

use crate::cyclotomic::CyclotomicInt;
use crate::partitions::RPartitePartition;
use crate::{Error, Result};

/// A finite abelian group presented by invariant factors (empty = trivial).
/// Elements are coordinate tuples `(a_1, ..., a_k)` with `0 <= a_t < m_t`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AbelianGroup {
    factors: Vec<u64>,
}

impl AbelianGroup {
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        if factors.iter().any(|&m| m < 2) {
            return Err(Error::InvalidInput(format!(
                "invariant factors must all be >= 2: {factors:?}"
            )));
        }
        Ok(AbelianGroup { factors })
    }

    /// Parses `"Z6"`, `"Z2xZ2"`, `"Z4xZ2"`; `"Z1"` is the trivial group.
    pub fn from_spec(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        let mut factors = Vec::new();
        for piece in spec.split('x') {
            let rest = piece
                .strip_prefix('Z')
                .ok_or_else(|| Error::Parse(format!("bad group spec {spec:?}")))?;
            let m: u64 = rest
                .parse()
                .map_err(|_| Error::Parse(format!("bad group spec {spec:?}")))?;
            if m == 0 {
                return Err(Error::Parse(format!("bad group spec {spec:?}")));
            }
            if m > 1 {
                factors.push(m);
            }
        }
        AbelianGroup::new(factors)
    }

    pub fn spec_string(&self) -> String {
        if self.factors.is_empty() {
            return "Z1".into();
        }
        self.factors
            .iter()
            .map(|m| format!("Z{m}"))
            .collect::<Vec<_>>()
            .join("x")
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    /// `|G|`.
    pub fn order(&self) -> usize {
        self.factors.iter().map(|&m| m as usize).product()
    }

    /// Exponent of the group: lcm of the invariant factors.
    pub fn exponent(&self) -> usize {
        self.factors
            .iter()
            .fold(1usize, |acc, &m| acc.lcm(&(m as usize)))
    }

    /// Number of irreducible characters (= order, abelian case).
    pub fn char_count(&self) -> usize {
        self.order()
    }

    pub fn identity(&self) -> Vec<u64> {
        vec![0; self.factors.len()]
    }

    /// Validates coordinates against the factor moduli.
    pub fn element(&self, coords: Vec<u64>) -> Result<Vec<u64>> {
        if coords.len() != self.factors.len() {
            return Err(Error::InvalidInput(format!(
                "element {coords:?} has {} coordinates, group {} needs {}",
                coords.len(),
                self.spec_string(),
                self.factors.len()
            )));
        }
        Ok(coords
            .iter()
            .zip(&self.factors)
            .map(|(&a, &m)| a % m)
            .collect())
    }

    /// Parses `"5"` or `"1,1"`; `"e"` (or nothing) is the identity.
    pub fn parse_element(&self, text: &str) -> Result<Vec<u64>> {
        let text = text.trim();
        if text.is_empty() || text == "e" {
            return Ok(self.identity());
        }
        let coords = text
            .split(',')
            .map(|piece| {
                piece
                    .trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad group element {text:?}")))
            })
            .collect::<Result<Vec<u64>>>()?;
        self.element(coords)
    }

    pub fn element_literal(&self, g: &[u64]) -> String {
        if g.is_empty() {
            return "e".into();
        }
        g.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(b)
            .zip(&self.factors)
            .map(|((&x, &y), &m)| (x + y) % m)
            .collect()
    }

    pub fn inverse(&self, a: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(&self.factors)
            .map(|(&x, &m)| (m - x) % m)
            .collect()
    }

    pub fn pow(&self, a: &[u64], k: usize) -> Vec<u64> {
        a.iter()
            .zip(&self.factors)
            .map(|(&x, &m)| ((x as u128 * k as u128) % m as u128) as u64)
            .collect()
    }

    /// Order of an element.
    pub fn element_order(&self, a: &[u64]) -> usize {
        a.iter()
            .zip(&self.factors)
            .map(|(&x, &m)| (m / m.gcd(&x)) as usize)
            .fold(1usize, |acc, o| acc.lcm(&o))
    }

    /// All elements, tuples in lexicographic order.
    pub fn elements(&self) -> Vec<Vec<u64>> {
        let mut out = Vec::with_capacity(self.order());
        let mut current = self.identity();
        loop {
            out.push(current.clone());
            // Mixed-radix increment, least significant coordinate last.
            let mut idx = self.factors.len();
            loop {
                if idx == 0 {
                    return out;
                }
                idx -= 1;
                current[idx] += 1;
                if current[idx] < self.factors[idx] {
                    break;
                }
                current[idx] = 0;
            }
        }
    }

    /// The tuple labelling character `j`: lexicographic rank `j` among
    /// tuples, first coordinate most significant.
    pub fn char_label(&self, j: usize) -> Vec<u64> {
        assert!(j < self.char_count());
        let mut digits = vec![0u64; self.factors.len()];
        let mut rest = j;
        for idx in (0..self.factors.len()).rev() {
            let m = self.factors[idx] as usize;
            digits[idx] = (rest % m) as u64;
            rest /= m;
        }
        digits
    }

    /// Exponent `e` with `chi_j(g) = zeta_level^e`; `level` must be a
    /// multiple of the group exponent.
    pub fn char_exponent(&self, j: usize, g: &[u64], level: usize) -> usize {
        debug_assert_eq!(level % self.exponent(), 0);
        let label = self.char_label(j);
        let mut total: u128 = 0;
        for ((&jt, &gt), &m) in label.iter().zip(g).zip(&self.factors) {
            let scale = (level as u128) / (m as u128);
            total = (total + scale * jt as u128 * gt as u128) % level as u128;
        }
        total as usize
    }

    /// `chi_j(g)` at the group's exponent level.
    pub fn eval_char(&self, j: usize, g: &[u64]) -> CyclotomicInt {
        let level = self.exponent();
        CyclotomicInt::zeta(level, self.char_exponent(j, g, level))
    }

    /// The serialized labelling convention.
    pub fn labelling_json(&self) -> serde_json::Value {
        let characters: Vec<Vec<u64>> =
            (0..self.char_count()).map(|j| self.char_label(j)).collect();
        json!({
            "invariant_factors": self.factors,
            "characters": characters,
        })
    }
}

/// Character fibers over a distinguished element `a`: fiber `k` holds the
/// indices of the (linear) characters whose restriction to `<a>` sends `a`
/// to `zeta_r^k`, where `r = |a|`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiberPartition {
    element_order: usize,
    fibers: Vec<Vec<usize>>,
}

impl FiberPartition {
    /// `r`, the order of the distinguished element.
    pub fn order(&self) -> usize {
        self.element_order
    }

    pub fn fibers(&self) -> &[Vec<usize>] {
        &self.fibers
    }

    pub fn fiber(&self, k: usize) -> &[usize] {
        &self.fibers[k]
    }
}

/// Fibers of all `|G|` characters of an abelian group over `a`.
pub fn fiber_partition(group: &AbelianGroup, a: &[u64]) -> FiberPartition {
    let r = group.element_order(a);
    let level = group.exponent();
    let mut fibers = vec![Vec::new(); r];
    for j in 0..group.char_count() {
        let e = group.char_exponent(j, a, level);
        debug_assert_eq!((e * r) % level, 0);
        fibers[e * r / level].push(j);
    }
    FiberPartition {
        element_order: r,
        fibers,
    }
}

/// The exponent `alpha = sum_k sum_{j in fiber k} k * n_j  (mod r)` from the
/// constant-color evaluation: component sizes `n_j` are read off `lambda`,
/// indices beyond its arity count as empty.
pub fn alpha(lambda: &RPartitePartition, fibers: &FiberPartition) -> usize {
    let r = fibers.order();
    let sizes = lambda.component_sizes();
    let mut total = 0usize;
    for (k, fiber) in fibers.fibers().iter().enumerate() {
        for &j in fiber {
            let n_j = sizes.get(j).copied().unwrap_or(0);
            total = (total + k * (n_j % r)) % r;
        }
    }
    total
}

/// Linear-characters-only model of an arbitrary finite group `G`: the
/// abelianization `G/G'` carries the first `s = [G:G']` characters, and the
/// image of one distinguished element `a` is all the model can evaluate at.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuotientLinearModel {
    group_order: usize,
    abelianization: AbelianGroup,
    distinguished: Vec<u64>,
}

impl QuotientLinearModel {
    pub fn new(
        group_order: usize,
        abelianization: AbelianGroup,
        distinguished: Vec<u64>,
    ) -> Result<Self> {
        let s = abelianization.order();
        if group_order == 0 || !group_order.is_multiple_of(s) {
            return Err(Error::InvalidInput(format!(
                "commutator index {s} must divide the group order {group_order}"
            )));
        }
        let distinguished = abelianization.element(distinguished)?;
        Ok(QuotientLinearModel {
            group_order,
            abelianization,
            distinguished,
        })
    }

    /// `S_3`: order 6, abelianization `Z2`, distinguished image the odd coset.
    pub fn s3() -> Self {
        QuotientLinearModel::new(6, AbelianGroup::new(vec![2]).unwrap(), vec![1])
            .expect("preset is valid")
    }

    /// Parses `"quot:d=6,s=2,ab=Z2,a=1"`.
    pub fn from_spec(spec: &str) -> Result<Self> {
        let body = spec
            .trim()
            .strip_prefix("quot:")
            .ok_or_else(|| Error::Parse(format!("bad quotient spec {spec:?}")))?;
        let mut d = None;
        let mut s = None;
        let mut ab = None;
        let mut a = None;
        for field in body.split(',') {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad quotient field {field:?}")))?;
            match key.trim() {
                "d" => {
                    d = Some(
                        value
                            .trim()
                            .parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad d in {spec:?}")))?,
                    )
                }
                "s" => {
                    s = Some(
                        value
                            .trim()
                            .parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad s in {spec:?}")))?,
                    )
                }
                "ab" => ab = Some(AbelianGroup::from_spec(value)?),
                "a" => a = Some(value.trim().to_string()),
                other => {
                    return Err(Error::Parse(format!(
                        "unknown quotient field {other:?} in {spec:?}"
                    )))
                }
            }
        }
        let d = d.ok_or_else(|| Error::Parse(format!("quotient spec {spec:?} misses d")))?;
        let ab = ab.ok_or_else(|| Error::Parse(format!("quotient spec {spec:?} misses ab")))?;
        if let Some(s) = s {
            if s != ab.order() {
                return Err(Error::Parse(format!(
                    "quotient spec {spec:?}: s={s} contradicts |{}|={}",
                    ab.spec_string(),
                    ab.order()
                )));
            }
        }
        let a = match a {
            Some(text) => ab.parse_element(&text)?,
            None => ab.identity(),
        };
        QuotientLinearModel::new(d, ab, a)
    }

    pub fn spec_string(&self) -> String {
        format!(
            "quot:d={},s={},ab={},a={}",
            self.group_order,
            self.abelianization.order(),
            self.abelianization.spec_string(),
            self.abelianization.element_literal(&self.distinguished)
        )
    }

    /// `|G| = d`; the hat construction runs at this arity.
    pub fn group_order(&self) -> usize {
        self.group_order
    }

    /// `s = [G:G']`, the number of linear characters.
    pub fn linear_count(&self) -> usize {
        self.abelianization.order()
    }

    pub fn abelianization(&self) -> &AbelianGroup {
        &self.abelianization
    }

    /// The image `aG'` of the distinguished element.
    pub fn distinguished(&self) -> &[u64] {
        &self.distinguished
    }

    /// Same model with another distinguished image.
    pub fn with_distinguished(&self, coords: Vec<u64>) -> Result<Self> {
        QuotientLinearModel::new(self.group_order, self.abelianization.clone(), coords)
    }

    /// `chi_j(a^power)` for a linear character `j < s`.
    pub fn eval_char(&self, j: usize, power: usize) -> Result<CyclotomicInt> {
        if j >= self.linear_count() {
            return Err(Error::UnsupportedEvaluation(format!(
                "character {j} is not linear (s = {}); the quotient model cannot evaluate it",
                self.linear_count()
            )));
        }
        let g = self.abelianization.pow(&self.distinguished, power);
        Ok(self.abelianization.eval_char(j, &g))
    }

    /// Fibers of the `s` linear characters over the distinguished image.
    pub fn fiber_partition(&self) -> FiberPartition {
        fiber_partition(&self.abelianization, &self.distinguished)
    }

    pub fn labelling_json(&self) -> serde_json::Value {
        let linear: Vec<Vec<u64>> = (0..self.linear_count())
            .map(|j| self.abelianization.char_label(j))
            .collect();
        json!({
            "group_order": self.group_order,
            "commutator_index": self.linear_count(),
            "abelianization": self.abelianization.factors(),
            "linear_characters": linear,
            "distinguished_image": self.abelianization.element_literal(&self.distinguished),
        })
    }
}

/// Character data for constant-color elements `(a, ..., a, pi)`: everything
/// Stembridge's rule needs is `chi_j` at powers of `a`.
pub trait ConstantColorChars {
    /// Ambient cyclotomic level of all values.
    fn level(&self) -> usize;
    /// Rejects shapes whose support the model cannot evaluate.
    fn check_shape(&self, shape: &RPartitePartition) -> Result<()>;
    /// Exponent `e` with `chi_j(a^k) = zeta_level^e`.
    fn char_exponent_at_power(&self, j: usize, k: usize) -> Result<usize>;
}

/// An abelian group together with a constant color.
pub struct ConstantColor<'a> {
    group: &'a AbelianGroup,
    color: Vec<u64>,
}

impl<'a> ConstantColor<'a> {
    pub fn new(group: &'a AbelianGroup, color: Vec<u64>) -> Result<Self> {
        let color = group.element(color)?;
        Ok(ConstantColor { group, color })
    }

    pub fn color(&self) -> &[u64] {
        &self.color
    }
}

impl ConstantColorChars for ConstantColor<'_> {
    fn level(&self) -> usize {
        self.group.exponent()
    }

    fn check_shape(&self, shape: &RPartitePartition) -> Result<()> {
        if shape.arity() != self.group.char_count() {
            return Err(Error::SizeMismatch {
                context: "shape arity vs character count",
                left: shape.arity(),
                right: self.group.char_count(),
            });
        }
        Ok(())
    }

    fn char_exponent_at_power(&self, j: usize, k: usize) -> Result<usize> {
        let g = self.group.pow(&self.color, k);
        Ok(self.group.char_exponent(j, &g, self.level()))
    }
}

impl ConstantColorChars for QuotientLinearModel {
    fn level(&self) -> usize {
        self.abelianization.exponent()
    }

    fn check_shape(&self, shape: &RPartitePartition) -> Result<()> {
        let s = self.linear_count();
        if let Some(&bad) = shape.support().iter().find(|&&j| j >= s) {
            return Err(Error::UnsupportedEvaluation(format!(
                "component {bad} of {shape} is outside the linear support 0..{s}"
            )));
        }
        Ok(())
    }

    fn char_exponent_at_power(&self, j: usize, k: usize) -> Result<usize> {
        if j >= self.linear_count() {
            return Err(Error::UnsupportedEvaluation(format!(
                "character {j} is not linear (s = {})",
                self.linear_count()
            )));
        }
        let g = self.abelianization.pow(&self.distinguished, k);
        Ok(self.abelianization.char_exponent(j, &g, self.level()))
    }
}

/// Either color-group model, as selected by a CLI group spec.
pub enum GroupModel {
    Abelian(AbelianGroup),
    QuotientLinear(QuotientLinearModel),
}

impl GroupModel {
    /// `"S3"` and `"quot:..."` select the quotient model, anything else is
    /// parsed as an abelian spec.
    pub fn from_spec(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        if spec == "S3" {
            return Ok(GroupModel::QuotientLinear(QuotientLinearModel::s3()));
        }
        if spec.starts_with("quot:") {
            return Ok(GroupModel::QuotientLinear(QuotientLinearModel::from_spec(
                spec,
            )?));
        }
        Ok(GroupModel::Abelian(AbelianGroup::from_spec(spec)?))
    }
}
