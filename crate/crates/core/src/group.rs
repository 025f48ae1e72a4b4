//! Finite Abelian groups presented as direct products of cyclic factors.
//!
//! Elements are residue tuples, canonicalized componentwise on construction,
//! so equality is structural. All operations are pure; a group value never
//! changes after it is built.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Largest group order accepted by [`AbelianGroup::new`]. Everything downstream
/// is exhaustive search at desk scale, so this is a safety rail, not a tuning knob.
pub const DEFAULT_ORDER_CAP: u64 = 256;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("a group needs at least one cyclic factor")]
    NoFactors,
    #[error("cyclic factor {0} is smaller than 2")]
    FactorTooSmall(u64),
    #[error("group order {order} exceeds the configured cap of {cap}")]
    OrderCap { order: u64, cap: u64 },
    #[error("element has {got} residues but the group has {expected} factors")]
    ShapeMismatch { expected: usize, got: usize },
    #[error("malformed group literal {0:?} (expected e.g. \"Z6\" or \"Z2xZ4\")")]
    BadGroupLiteral(String),
    #[error("malformed element literal {0:?}")]
    BadElementLiteral(String),
}

/// A finite Abelian group `Z_{f1} x Z_{f2} x ... x Z_{fk}`.
///
/// The factor list is kept exactly as given (no normal form); use
/// [`AbelianGroup::invariant_factors`] to compare groups up to isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    factors: Vec<u64>,
    order: u64,
}

/// An element of an [`AbelianGroup`]: one residue per factor, each reduced
/// into `[0, factor)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement {
    residues: Vec<u64>,
}

impl AbelianGroup {
    /// Builds a group from its cyclic factors, enforcing [`DEFAULT_ORDER_CAP`].
    pub fn new(factors: Vec<u64>) -> Result<Self, GroupError> {
        Self::with_order_cap(factors, DEFAULT_ORDER_CAP)
    }

    /// Same as [`AbelianGroup::new`] with an explicit order cap.
    pub fn with_order_cap(factors: Vec<u64>, cap: u64) -> Result<Self, GroupError> {
        if factors.is_empty() {
            return Err(GroupError::NoFactors);
        }
        if let Some(&bad) = factors.iter().find(|&&f| f < 2) {
            return Err(GroupError::FactorTooSmall(bad));
        }
        let mut order: u64 = 1;
        for &f in &factors {
            order = order
                .checked_mul(f)
                .ok_or(GroupError::OrderCap { order: u64::MAX, cap })?;
            if order > cap {
                return Err(GroupError::OrderCap { order, cap });
            }
        }
        Ok(Self { factors, order })
    }

    /// The cyclic group `Z_n`.
    pub fn cyclic(n: u64) -> Result<Self, GroupError> {
        Self::new(vec![n])
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// A direct product of cyclic groups is cyclic iff its factors are
    /// pairwise coprime, i.e. lcm(factors) = product(factors).
    pub fn is_cyclic(&self) -> bool {
        let lcm_all = self.factors.iter().fold(1u64, |acc, &f| lcm(acc, f));
        lcm_all == self.order
    }

    /// The all-zeros tuple.
    pub fn identity(&self) -> GroupElement {
        GroupElement {
            residues: vec![0; self.factors.len()],
        }
    }

    /// Canonicalizes a residue tuple into this group. Negative inputs wrap.
    pub fn element(&self, residues: &[i64]) -> Result<GroupElement, GroupError> {
        if residues.len() != self.factors.len() {
            return Err(GroupError::ShapeMismatch {
                expected: self.factors.len(),
                got: residues.len(),
            });
        }
        let residues = residues
            .iter()
            .zip(&self.factors)
            .map(|(&r, &f)| r.rem_euclid(f as i64) as u64)
            .collect();
        Ok(GroupElement { residues })
    }

    /// Iterates all elements in canonical (lexicographic tuple) order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order).map(move |i| self.element_at(i as usize))
    }

    /// Position of an element in the canonical enumeration; the inverse of
    /// [`AbelianGroup::element_at`].
    pub fn index_of(&self, g: &GroupElement) -> usize {
        debug_assert_eq!(g.residues.len(), self.factors.len());
        let mut index = 0u64;
        for (&r, &f) in g.residues.iter().zip(&self.factors) {
            index = index * f + r;
        }
        index as usize
    }

    pub fn element_at(&self, mut index: usize) -> GroupElement {
        debug_assert!((index as u64) < self.order);
        let mut residues = vec![0u64; self.factors.len()];
        for pos in (0..self.factors.len()).rev() {
            let f = self.factors[pos] as usize;
            residues[pos] = (index % f) as u64;
            index /= f;
        }
        GroupElement { residues }
    }

    /// Componentwise sum mod factors.
    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement, GroupError> {
        self.check_shape(a)?;
        self.check_shape(b)?;
        let residues = a
            .residues
            .iter()
            .zip(&b.residues)
            .zip(&self.factors)
            .map(|((&x, &y), &f)| (x + y) % f)
            .collect();
        Ok(GroupElement { residues })
    }

    /// The element `h` with `g + h = e`.
    pub fn inverse(&self, g: &GroupElement) -> GroupElement {
        assert_eq!(g.residues.len(), self.factors.len(), "foreign element");
        let residues = g
            .residues
            .iter()
            .zip(&self.factors)
            .map(|(&r, &f)| if r == 0 { 0 } else { f - r })
            .collect();
        GroupElement { residues }
    }

    /// Smallest `t >= 1` with `t * g = e`: the lcm over components of
    /// `factor_i / gcd(residue_i, factor_i)`.
    pub fn element_order(&self, g: &GroupElement) -> u64 {
        assert_eq!(g.residues.len(), self.factors.len(), "foreign element");
        g.residues
            .iter()
            .zip(&self.factors)
            .map(|(&r, &f)| f / gcd(r, f))
            .fold(1u64, lcm)
    }

    /// Closure of `S ∪ {e}` under addition, returned as a sorted set.
    pub fn subgroup_generated(&self, generators: &[GroupElement]) -> Vec<GroupElement> {
        let mut member = vec![false; self.order as usize];
        member[self.index_of(&self.identity())] = true;
        let mut frontier: Vec<GroupElement> = vec![self.identity()];
        while let Some(g) = frontier.pop() {
            for s in generators {
                let next = self.add(&g, s).expect("generators share the group shape");
                let idx = self.index_of(&next);
                if !member[idx] {
                    member[idx] = true;
                    frontier.push(next);
                }
            }
        }
        member
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| self.element_at(i))
            .collect()
    }

    pub fn is_generating(&self, set: &[GroupElement]) -> bool {
        if set.is_empty() {
            return self.order == 1;
        }
        self.subgroup_generated(set).len() as u64 == self.order
    }

    pub fn is_inverse_closed(&self, set: &[GroupElement]) -> bool {
        set.iter().all(|g| {
            let inv = self.inverse(g);
            set.contains(&inv)
        })
    }

    /// Invariant-factor signature `d1 | d2 | ... | dk` (ascending divisibility),
    /// equal for two groups iff they are isomorphic.
    pub fn invariant_factors(&self) -> Vec<u64> {
        use std::collections::BTreeMap;
        // Per prime, the multiset of exponents across factors, largest first.
        let mut exps: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &f in &self.factors {
            let mut rest = f;
            let mut p = 2u64;
            while p * p <= rest {
                if rest % p == 0 {
                    let mut e = 0u32;
                    while rest % p == 0 {
                        rest /= p;
                        e += 1;
                    }
                    exps.entry(p).or_default().push(e);
                }
                p += 1;
            }
            if rest > 1 {
                exps.entry(rest).or_default().push(1);
            }
        }
        let mut slots = 0usize;
        for list in exps.values_mut() {
            list.sort_unstable_by(|a, b| b.cmp(a));
            slots = slots.max(list.len());
        }
        let mut invariants = vec![1u64; slots];
        for (p, list) in &exps {
            for (slot, &e) in list.iter().enumerate() {
                invariants[slot] *= p.pow(e);
            }
        }
        invariants.reverse(); // ascending divisibility chain
        invariants
    }

    /// Renders an element the way the CLI reads it: `5` over a single factor,
    /// `(1,3)` over a product.
    pub fn format_element(&self, g: &GroupElement) -> String {
        if self.factors.len() == 1 {
            g.residues[0].to_string()
        } else {
            let parts: Vec<String> = g.residues.iter().map(u64::to_string).collect();
            format!("({})", parts.join(","))
        }
    }

    /// Parses `"5"`, `"-1"`, or `"(1,3)"` into an element of this group.
    pub fn parse_element(&self, literal: &str) -> Result<GroupElement, GroupError> {
        let s = literal.trim();
        let inner = if s.starts_with('(') && s.ends_with(')') {
            &s[1..s.len() - 1]
        } else {
            s
        };
        let residues: Result<Vec<i64>, _> = inner
            .split(',')
            .map(|part| part.trim().parse::<i64>())
            .collect();
        let residues = residues.map_err(|_| GroupError::BadElementLiteral(literal.to_string()))?;
        self.element(&residues)
    }

    fn check_shape(&self, g: &GroupElement) -> Result<(), GroupError> {
        if g.residues.len() != self.factors.len() {
            return Err(GroupError::ShapeMismatch {
                expected: self.factors.len(),
                got: g.residues.len(),
            });
        }
        Ok(())
    }
}

impl GroupElement {
    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    pub fn is_identity(&self) -> bool {
        self.residues.iter().all(|&r| r == 0)
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|m| format!("Z{m}")).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl FromStr for AbelianGroup {
    type Err = GroupError;

    /// Accepts `"Z6"`, `"z2xZ4"`, `"Z2xZ2xZ2"` (case-insensitive, `x` separator).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GroupError::BadGroupLiteral(s.to_string());
        let mut factors = Vec::new();
        for part in s.trim().split(['x', 'X']) {
            let part = part.trim();
            let digits = part
                .strip_prefix('Z')
                .or_else(|| part.strip_prefix('z'))
                .ok_or_else(bad)?;
            let f: u64 = digits.parse().map_err(|_| bad())?;
            factors.push(f);
        }
        if factors.is_empty() {
            return Err(bad());
        }
        AbelianGroup::new(factors)
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}
