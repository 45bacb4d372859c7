//! Closed arcs on the real projective line.

use std::cmp::Ordering;
use std::fmt;

use crate::exactnum::{isolate_real_roots, sample_points, AlgReal, RatPoly};

use super::{delta_of, fibre_empty_raw};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArcEnd {
    Finite(AlgReal),
    Infinity,
}

impl ArcEnd {
    pub fn to_exact_string(&self) -> String {
        match self {
            ArcEnd::Finite(x) => x.to_exact_string(),
            ArcEnd::Infinity => "inf".to_string(),
        }
    }

    /// Order with infinity first, as the start of `(-inf, r]`.
    fn start_cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ArcEnd::Infinity, ArcEnd::Infinity) => Ordering::Equal,
            (ArcEnd::Infinity, _) => Ordering::Less,
            (_, ArcEnd::Infinity) => Ordering::Greater,
            (ArcEnd::Finite(a), ArcEnd::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for ArcEnd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_exact_string())
    }
}

/// Arc traversed in the increasing direction from `start` to `end`; it
/// passes through infinity when `start` is not below `end`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arc {
    pub start: ArcEnd,
    pub end: ArcEnd,
}

impl Arc {
    pub fn wraps(&self) -> bool {
        match (&self.start, &self.end) {
            (ArcEnd::Finite(a), ArcEnd::Finite(b)) => a >= b,
            _ => false,
        }
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.start, self.end)
    }
}

/// Maximal pairwise disjoint closed arcs, sorted by start point.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ArcSet {
    arcs: Vec<Arc>,
    full: bool,
}

impl ArcSet {
    pub fn full_circle() -> Self {
        ArcSet {
            arcs: Vec::new(),
            full: true,
        }
    }

    /// Closure of the union of the open regions flagged `true`; region `i`
    /// lies between `breaks[i-1]` and `breaks[i]`, the first and last being
    /// unbounded.
    pub fn from_regions(breaks: &[AlgReal], nonempty: &[bool]) -> Self {
        assert_eq!(breaks.len() + 1, nonempty.len());
        if nonempty.iter().all(|&x| x) {
            return Self::full_circle();
        }
        let k = breaks.len();
        let left = |i: usize| {
            if i == 0 {
                ArcEnd::Infinity
            } else {
                ArcEnd::Finite(breaks[i - 1].clone())
            }
        };
        let right = |j: usize| {
            if j == k {
                ArcEnd::Infinity
            } else {
                ArcEnd::Finite(breaks[j].clone())
            }
        };
        let first_empty = nonempty.iter().position(|&x| !x).unwrap();
        let mut arcs = Vec::new();
        let mut run_start: Option<usize> = None;
        for step in 1..=k + 1 {
            let i = (first_empty + step) % (k + 1);
            match (nonempty[i], run_start) {
                (true, None) => run_start = Some(i),
                (false, Some(s)) => {
                    let j = (i + k) % (k + 1);
                    arcs.push(Arc {
                        start: left(s),
                        end: right(j),
                    });
                    run_start = None;
                }
                _ => {}
            }
        }
        arcs.sort_by(|a, b| a.start.start_cmp(&b.start));
        ArcSet { arcs, full: false }
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Number of connected components; the full circle counts as one.
    pub fn len(&self) -> usize {
        if self.full {
            1
        } else {
            self.arcs.len()
        }
    }

    pub fn is_empty(&self) -> bool {
        !self.full && self.arcs.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.full
    }

    pub fn contains_infinity(&self) -> bool {
        self.full
            || self
                .arcs
                .iter()
                .any(|a| a.wraps() || a.start == ArcEnd::Infinity || a.end == ArcEnd::Infinity)
    }

    /// Endpoint pairs as exact strings.
    pub fn to_strings(&self) -> Vec<[String; 2]> {
        self.arcs
            .iter()
            .map(|a| [a.start.to_exact_string(), a.end.to_exact_string()])
            .collect()
    }
}

impl fmt::Display for ArcSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.full {
            return f.write_str("P1(R)");
        }
        if self.arcs.is_empty() {
            return f.write_str("{}");
        }
        let parts: Vec<String> = self.arcs.iter().map(|a| a.to_string()).collect();
        f.write_str(&parts.join(" u "))
    }
}

/// Closure of the set of `t` whose fibre has a real point, for affine data
/// that need not be validated.
pub fn arcs_of(a: &RatPoly, b: &RatPoly, c: &RatPoly, h: &RatPoly) -> ArcSet {
    let delta = delta_of(a, b, c);
    let critical = &delta * h;
    if critical.is_zero() {
        return ArcSet::full_circle();
    }
    let breaks = isolate_real_roots(&critical).expect("nonzero polynomial");
    let nonempty: Vec<bool> = sample_points(&breaks)
        .iter()
        .map(|s| !fibre_empty_raw(a, b, c, h, s))
        .collect();
    ArcSet::from_regions(&breaks, &nonempty)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, AlgReal};

    fn pts(v: &[i64]) -> Vec<AlgReal> {
        v.iter().map(|&x| AlgReal::from_int(x)).collect()
    }

    #[test]
    fn regions_to_arcs() {
        let b = pts(&[0, 2, 3]);
        let s = ArcSet::from_regions(&b, &[false, true, false, true]);
        assert_eq!(s.to_string(), "[0, 2] u [3, inf]");
        let s = ArcSet::from_regions(&b, &[true, false, true, true]);
        assert_eq!(s.to_string(), "[2, 0]");
        assert!(s.arcs()[0].wraps());
        assert!(s.contains_infinity());
        let s = ArcSet::from_regions(&b, &[false, true, true, false]);
        assert_eq!(s.to_string(), "[0, 3]");
        assert!(!s.contains_infinity());
        assert!(ArcSet::from_regions(&b, &[true; 4]).is_full());
        assert!(ArcSet::from_regions(&[], &[false]).is_empty());
        let s = ArcSet::from_regions(&b, &[true, false, false, false]);
        assert_eq!(s.arcs()[0].start, ArcEnd::Infinity);
        assert_eq!(s.arcs()[0].end, ArcEnd::Finite(AlgReal::from_rat(rat(0))));
    }
}
