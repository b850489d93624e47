//! Closed/open intervals and normalized finite unions of them.
//!
//! `IntervalSet` is the concrete representation for every set-valued object
//! in this crate: proximal mappings, subdifferential values, resolvent
//! values. The normal form keeps intervals sorted, pairwise disjoint, and
//! non-adjacent, with isolated points stored as degenerate closed intervals,
//! so structural equality is meaningful and set predicates are cheap.

use crate::ext::{ExtReal, Finite, NegInf, PosInf};
use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IntervalError {
    #[error("interval endpoints out of order")]
    EndpointsOutOfOrder,
    #[error("degenerate interval must be a finite closed point")]
    BadDegenerate,
    #[error("endpoint is NaN")]
    NaN,
}

/// One interval with endpoint closedness flags. Infinite endpoints are
/// always open; a degenerate interval (`lo == hi`) is always closed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Interval<F: Scalar> {
    lo: ExtReal<F>,
    hi: ExtReal<F>,
    lo_closed: bool,
    hi_closed: bool,
}

impl<F: Scalar> Interval<F> {
    pub fn new(
        lo: ExtReal<F>,
        hi: ExtReal<F>,
        lo_closed: bool,
        hi_closed: bool,
    ) -> Result<Self, IntervalError> {
        if let (Finite(a), Finite(b)) = (lo, hi) {
            if a.is_nan() || b.is_nan() {
                return Err(IntervalError::NaN);
            }
        }
        if lo > hi {
            return Err(IntervalError::EndpointsOutOfOrder);
        }
        if lo == hi {
            if !lo.is_finite() {
                return Err(IntervalError::BadDegenerate);
            }
            return Ok(Interval {
                lo,
                hi,
                lo_closed: true,
                hi_closed: true,
            });
        }
        Ok(Interval {
            lo,
            hi,
            lo_closed: lo_closed && lo.is_finite(),
            hi_closed: hi_closed && hi.is_finite(),
        })
    }

    pub fn point(x: F) -> Self {
        Self::new(Finite(x), Finite(x), true, true).expect("finite point")
    }

    pub fn closed(lo: F, hi: F) -> Self {
        Self::new(Finite(lo), Finite(hi), true, true).expect("ordered endpoints")
    }

    /// `[lo, +inf)`.
    pub fn at_least(lo: F) -> Self {
        Self::new(Finite(lo), PosInf, true, false).expect("ordered endpoints")
    }

    /// `(-inf, hi]`.
    pub fn at_most(hi: F) -> Self {
        Self::new(NegInf, Finite(hi), false, true).expect("ordered endpoints")
    }

    pub fn whole_line() -> Self {
        Self::new(NegInf, PosInf, false, false).expect("ordered endpoints")
    }

    pub fn lo(&self) -> ExtReal<F> {
        self.lo
    }

    pub fn hi(&self) -> ExtReal<F> {
        self.hi
    }

    pub fn lo_closed(&self) -> bool {
        self.lo_closed
    }

    pub fn hi_closed(&self) -> bool {
        self.hi_closed
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    /// Membership honoring endpoint openness.
    pub fn contains_exact(&self, t: F) -> bool {
        let t = Finite(t);
        let above = t > self.lo || (t == self.lo && self.lo_closed);
        let below = t < self.hi || (t == self.hi && self.hi_closed);
        above && below
    }

    /// Distance from `t` to the closure of the interval.
    pub fn dist(&self, t: F) -> F {
        match (Finite(t) < self.lo, Finite(t) > self.hi) {
            (true, _) => self.lo.to_float() - t,
            (_, true) => t - self.hi.to_float(),
            _ => F::zero(),
        }
    }
}

/// Normalized finite union of intervals, possibly empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntervalSet<F: Scalar> {
    intervals: Vec<Interval<F>>,
}

impl<F: Scalar> IntervalSet<F> {
    pub fn empty() -> Self {
        IntervalSet { intervals: vec![] }
    }

    pub fn singleton(x: F) -> Self {
        IntervalSet {
            intervals: vec![Interval::point(x)],
        }
    }

    pub fn whole_line() -> Self {
        IntervalSet {
            intervals: vec![Interval::whole_line()],
        }
    }

    pub fn from_points(points: &[F]) -> Self {
        Self::new(points.iter().map(|&p| Interval::point(p)).collect())
    }

    pub fn new(intervals: Vec<Interval<F>>) -> Self {
        let mut v = intervals;
        v.sort_by(|a, b| {
            a.lo.cmp(&b.lo)
                .then_with(|| b.lo_closed.cmp(&a.lo_closed))
                .then_with(|| a.hi.cmp(&b.hi))
        });
        let mut out: Vec<Interval<F>> = Vec::with_capacity(v.len());
        for iv in v {
            match out.last_mut() {
                Some(last) if Self::mergeable(last, &iv) => {
                    if iv.hi > last.hi {
                        last.hi = iv.hi;
                        last.hi_closed = iv.hi_closed;
                    } else if iv.hi == last.hi {
                        last.hi_closed = last.hi_closed || iv.hi_closed;
                    }
                }
                _ => out.push(iv),
            }
        }
        IntervalSet { intervals: out }
    }

    fn mergeable(a: &Interval<F>, b: &Interval<F>) -> bool {
        // a.lo <= b.lo by the sort; overlap, or adjacency with no gap point.
        b.lo < a.hi || (b.lo == a.hi && (a.hi_closed || b.lo_closed))
    }

    pub fn intervals(&self) -> &[Interval<F>] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn is_bounded(&self) -> bool {
        self.intervals
            .iter()
            .all(|iv| iv.lo.is_finite() && iv.hi.is_finite())
    }

    pub fn inf(&self) -> Option<ExtReal<F>> {
        self.intervals.first().map(|iv| iv.lo)
    }

    pub fn sup(&self) -> Option<ExtReal<F>> {
        self.intervals.last().map(|iv| iv.hi)
    }

    /// Distance from `t` to the closure of the set; `+inf` for the empty set.
    pub fn dist(&self, t: F) -> ExtReal<F> {
        self.intervals
            .iter()
            .map(|iv| Finite(iv.dist(t)))
            .min()
            .unwrap_or(PosInf)
    }

    /// `dist(t, S) <= slack`. With `slack = 0` this tests membership in the
    /// closure; use [`contains_exact`](Self::contains_exact) to honor open
    /// endpoints.
    pub fn contains(&self, t: F, slack: F) -> bool {
        self.dist(t) <= Finite(slack)
    }

    pub fn contains_exact(&self, t: F) -> bool {
        self.intervals.iter().any(|iv| iv.contains_exact(t))
    }

    fn unbounded_below(&self) -> bool {
        matches!(self.inf(), Some(NegInf))
    }

    fn unbounded_above(&self) -> bool {
        matches!(self.sup(), Some(PosInf))
    }

    /// Hausdorff distance. `0` when both sets are empty, `+inf` when exactly
    /// one is empty or the sets disagree about boundedness on either side.
    pub fn hausdorff_distance(&self, other: &Self) -> ExtReal<F> {
        match (self.is_empty(), other.is_empty()) {
            (true, true) => return Finite(F::zero()),
            (true, false) | (false, true) => return PosInf,
            _ => {}
        }
        if self.unbounded_below() != other.unbounded_below()
            || self.unbounded_above() != other.unbounded_above()
        {
            return PosInf;
        }
        let d1 = self.directed_sup_dist(other);
        let d2 = other.directed_sup_dist(self);
        d1.max(d2)
    }

    /// `sup_{p in self} dist(p, other)`; both sets nonempty with matching
    /// boundedness. The sup over each interval of a piecewise-linear distance
    /// is attained at a finite endpoint of `self` or at a gap midpoint of
    /// `other` lying inside `self`.
    fn directed_sup_dist(&self, other: &Self) -> ExtReal<F> {
        let mut worst = F::zero();
        let mut push = |t: F| {
            if let Finite(d) = other.dist(t) {
                if d > worst {
                    worst = d;
                }
            }
        };
        for iv in &self.intervals {
            if let Finite(a) = iv.lo {
                push(a);
            }
            if let Finite(b) = iv.hi {
                push(b);
            }
        }
        let two = F::one() + F::one();
        for gap in other.intervals.windows(2) {
            if let (Finite(a), Finite(b)) = (gap[0].hi, gap[1].lo) {
                let mid = (a + b) / two;
                if self.contains(mid, F::zero()) {
                    push(mid);
                }
            }
        }
        Finite(worst)
    }

    /// Every point of `self` within `slack` of `other`. The empty set is a
    /// subset of everything.
    pub fn is_subset_of(&self, other: &Self, slack: F) -> bool {
        if self.is_empty() {
            return true;
        }
        let inflated = other.inflate(slack);
        self.intervals.iter().all(|iv| {
            inflated.intervals.iter().any(|c| {
                let lo_ok = c.lo < iv.lo
                    || (c.lo == iv.lo && (c.lo_closed || !iv.lo_closed || !c.lo.is_finite()));
                let hi_ok = c.hi > iv.hi
                    || (c.hi == iv.hi && (c.hi_closed || !iv.hi_closed || !c.hi.is_finite()));
                lo_ok && hi_ok
            })
        })
    }

    /// Enlarges every interval by `slack` on both sides (no-op on infinite
    /// endpoints), re-normalizing.
    pub fn inflate(&self, slack: F) -> Self {
        if slack <= F::zero() {
            return self.clone();
        }
        Self::new(
            self.intervals
                .iter()
                .map(|iv| {
                    let lo = match iv.lo {
                        Finite(a) => Finite(a - slack),
                        e => e,
                    };
                    let hi = match iv.hi {
                        Finite(b) => Finite(b + slack),
                        e => e,
                    };
                    Interval::new(lo, hi, true, true).expect("inflation keeps order")
                })
                .collect(),
        )
    }

    /// Minkowski sum; empty if either operand is empty.
    pub fn minkowski_sum(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.intervals.len() * other.intervals.len());
        for a in &self.intervals {
            for b in &other.intervals {
                let lo = match (a.lo, b.lo) {
                    (Finite(x), Finite(y)) => Finite(x + y),
                    _ => NegInf,
                };
                let hi = match (a.hi, b.hi) {
                    (Finite(x), Finite(y)) => Finite(x + y),
                    _ => PosInf,
                };
                out.push(
                    Interval::new(lo, hi, a.lo_closed && b.lo_closed, a.hi_closed && b.hi_closed)
                        .expect("sum keeps order"),
                );
            }
        }
        Self::new(out)
    }

    /// Translation by a constant.
    pub fn translate(&self, dx: F) -> Self {
        Self::new(
            self.intervals
                .iter()
                .map(|iv| {
                    let lo = match iv.lo {
                        Finite(a) => Finite(a + dx),
                        e => e,
                    };
                    let hi = match iv.hi {
                        Finite(b) => Finite(b + dx),
                        e => e,
                    };
                    Interval::new(lo, hi, iv.lo_closed, iv.hi_closed).expect("translation")
                })
                .collect(),
        )
    }

    /// Intersection with the closed interval `[lo, hi]`.
    pub fn clip(&self, lo: F, hi: F) -> Self {
        if lo > hi {
            return Self::empty();
        }
        let mut out = Vec::new();
        for iv in &self.intervals {
            let new_lo = iv.lo.max(Finite(lo));
            let new_hi = iv.hi.min(Finite(hi));
            if new_lo > new_hi {
                continue;
            }
            let lo_closed = if new_lo == iv.lo { iv.lo_closed } else { true };
            let hi_closed = if new_hi == iv.hi { iv.hi_closed } else { true };
            if new_lo == new_hi && !(lo_closed && hi_closed) {
                continue;
            }
            out.push(Interval::new(new_lo, new_hi, lo_closed, hi_closed).expect("clip"));
        }
        Self::new(out)
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut v = self.intervals.clone();
        v.extend(other.intervals.iter().cloned());
        Self::new(v)
    }
}

impl<F: Scalar> From<Interval<F>> for IntervalSet<F> {
    fn from(iv: Interval<F>) -> Self {
        IntervalSet::new(vec![iv])
    }
}

#[derive(Deserialize)]
struct IntervalWire<F: Scalar> {
    lo: ExtReal<F>,
    hi: ExtReal<F>,
    lo_closed: bool,
    hi_closed: bool,
}

#[derive(Deserialize)]
struct IntervalSetWire<F: Scalar> {
    intervals: Vec<IntervalWire<F>>,
}

impl<'de, F: Scalar> Deserialize<'de> for IntervalSet<F> {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = IntervalSetWire::deserialize(deserializer)?;
        let mut intervals = Vec::with_capacity(wire.intervals.len());
        for iv in wire.intervals {
            intervals.push(
                Interval::new(iv.lo, iv.hi, iv.lo_closed, iv.hi_closed)
                    .map_err(serde::de::Error::custom)?,
            );
        }
        Ok(IntervalSet::new(intervals))
    }
}
