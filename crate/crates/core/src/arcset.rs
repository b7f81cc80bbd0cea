//! Closed circular arcs and normalized finite unions of them.
//!
//! An [`Arc`] is the closed set `[start, start + length]` mod 1; `length = 1`
//! denotes the full circle. An [`ArcSet`] is a finite union of closed arcs in
//! normal form: components sorted by start, pairwise disjoint (touching arcs
//! are merged), at most one component crossing 0, the full circle stored as a
//! single arc with start 0. Degenerate (single-point) components are allowed
//! inside an `ArcSet` because exact solution sets of `F^n(x) = x + k` contain
//! isolated points; the public `Arc::new` constructor still insists on
//! positive length.
//!
//! All set operations are exact. Complement is the closure of the set
//! complement, so `measure(complement(A)) = 1 - measure(A)` and the
//! complement of a single point is the full circle.

use std::fmt;

use crate::circle::CirclePoint;
use crate::error::{Error, Result};
use crate::rational::{format_rational, rat, Rational};

/// A closed arc of the circle.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arc {
    start: CirclePoint,
    length: Rational,
}

impl Arc {
    /// Non-degenerate arc: `0 < length <= 1`.
    pub fn new(start: CirclePoint, length: Rational) -> Result<Self> {
        if length <= rat(0) || length > rat(1) {
            return Err(Error::DegenerateInput(format!(
                "arc length must be in (0, 1], got {}",
                format_rational(&length)
            )));
        }
        Ok(Arc { start, length })
    }

    /// Arc from two rational endpoints, running counterclockwise from `a` to
    /// `b`; `a == b` yields the degenerate point arc.
    pub fn from_endpoints(a: &Rational, b: &Rational) -> Self {
        let start = CirclePoint::new(a.clone());
        let mut len = crate::rational::mod1(&(b - a));
        if len == rat(0) && a != b {
            // endpoints differ by a whole number of turns: full circle
            len = rat(1);
        }
        Arc { start, length: len }
    }

    /// Single-point arc.
    pub fn point(p: CirclePoint) -> Self {
        Arc {
            start: p,
            length: rat(0),
        }
    }

    /// The whole circle.
    pub fn full() -> Self {
        Arc {
            start: CirclePoint::new(rat(0)),
            length: rat(1),
        }
    }

    pub fn start(&self) -> &CirclePoint {
        &self.start
    }

    pub fn length(&self) -> &Rational {
        &self.length
    }

    /// End point (start + length, reduced mod 1).
    pub fn end(&self) -> CirclePoint {
        self.start.translate(&self.length)
    }

    pub fn is_full(&self) -> bool {
        self.length == rat(1)
    }

    pub fn is_degenerate(&self) -> bool {
        self.length == rat(0)
    }

    /// Midpoint of the arc.
    pub fn midpoint(&self) -> CirclePoint {
        self.start.translate(&(&self.length / rat(2)))
    }

    pub fn contains(&self, p: &CirclePoint) -> bool {
        if self.is_full() {
            return true;
        }
        let s = self.start.position();
        let x = p.position();
        let end = s + &self.length;
        (x >= s && *x <= end) || (x + rat(1) <= end)
    }

    /// The arc as closed intervals of `[0, 1]` (two when it crosses 0).
    fn line_spans(&self) -> Vec<(Rational, Rational)> {
        let s = self.start.position().clone();
        let e = &s + &self.length;
        if self.is_full() {
            vec![(rat(0), rat(1))]
        } else if e <= rat(1) {
            vec![(s, e)]
        } else {
            vec![(rat(0), e - rat(1)), (s, rat(1))]
        }
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_full() {
            write!(f, "[full circle]")
        } else if self.is_degenerate() {
            write!(f, "{{{}}}", self.start)
        } else {
            write!(
                f,
                "[{}, {}]",
                self.start,
                format_rational(&(self.start.position() + &self.length))
            )
        }
    }
}

/// Normalized finite union of closed arcs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ArcSet {
    arcs: Vec<Arc>,
}

impl ArcSet {
    pub fn empty() -> Self {
        ArcSet { arcs: Vec::new() }
    }

    pub fn full() -> Self {
        ArcSet {
            arcs: vec![Arc::full()],
        }
    }

    pub fn from_arc(arc: Arc) -> Self {
        ArcSet::from_arcs(vec![arc])
    }

    pub fn from_point(p: CirclePoint) -> Self {
        ArcSet::from_arc(Arc::point(p))
    }

    pub fn from_arcs(arcs: Vec<Arc>) -> Self {
        let mut spans = Vec::new();
        for a in &arcs {
            spans.extend(a.line_spans());
        }
        ArcSet::from_line_spans(spans)
    }

    /// Builds the normal form from closed sub-intervals of `[0, 1]`
    /// (0 and 1 identified). Degenerate spans are kept as point components.
    pub(crate) fn from_line_spans(mut spans: Vec<(Rational, Rational)>) -> Self {
        spans.retain(|(lo, hi)| lo <= hi);
        if spans.is_empty() {
            return ArcSet::empty();
        }
        spans.sort();
        // merge overlapping or touching spans on the cut-open line
        let mut merged: Vec<(Rational, Rational)> = Vec::with_capacity(spans.len());
        for (lo, hi) in spans {
            match merged.last_mut() {
                Some((_, mhi)) if lo <= *mhi => {
                    if hi > *mhi {
                        *mhi = hi;
                    }
                }
                _ => merged.push((lo, hi)),
            }
        }
        // glue across the cut at 0 == 1
        if merged.len() == 1 && merged[0].0 == rat(0) && merged[0].1 == rat(1) {
            return ArcSet::full();
        }
        let mut wrap: Option<Arc> = None;
        if merged.len() >= 2 {
            let first_starts_at_zero = merged.first().unwrap().0 == rat(0);
            let last_ends_at_one = merged.last().unwrap().1 == rat(1);
            if first_starts_at_zero && last_ends_at_one {
                let (_, fhi) = merged.remove(0);
                let (llo, _) = merged.pop().unwrap();
                let len = rat(1) - &llo + &fhi;
                if len >= rat(1) {
                    return ArcSet::full();
                }
                wrap = Some(Arc {
                    start: CirclePoint::new(llo),
                    length: len,
                });
            }
        }
        let mut arcs: Vec<Arc> = merged
            .into_iter()
            .map(|(lo, hi)| Arc {
                length: &hi - &lo,
                start: CirclePoint::new(lo),
            })
            .collect();
        if let Some(w) = wrap {
            arcs.push(w);
        }
        arcs.sort_by(|a, b| a.start.cmp(&b.start));
        ArcSet { arcs }
    }

    pub(crate) fn line_spans(&self) -> Vec<(Rational, Rational)> {
        let mut spans = Vec::new();
        for a in &self.arcs {
            spans.extend(a.line_spans());
        }
        spans.sort();
        spans
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.arcs.len() == 1 && self.arcs[0].is_full()
    }

    pub fn measure(&self) -> Rational {
        self.arcs.iter().fold(rat(0), |acc, a| acc + &a.length)
    }

    pub fn contains(&self, p: &CirclePoint) -> bool {
        self.arcs.iter().any(|a| a.contains(p))
    }

    pub fn union(&self, other: &ArcSet) -> ArcSet {
        let mut spans = self.line_spans();
        spans.extend(other.line_spans());
        ArcSet::from_line_spans(spans)
    }

    pub fn intersect(&self, other: &ArcSet) -> ArcSet {
        if self.is_full() {
            return other.clone();
        }
        if other.is_full() {
            return self.clone();
        }
        // the cut point 0 == 1 appears as 0 in one list and 1 in the other;
        // saturate both lists so the scan sees both representations
        let saturate = |mut spans: Vec<(Rational, Rational)>| {
            let touches_zero = spans.iter().any(|(lo, _)| *lo == rat(0));
            let touches_one = spans.iter().any(|(_, hi)| *hi == rat(1));
            if touches_zero && !touches_one {
                spans.push((rat(1), rat(1)));
            }
            if touches_one && !touches_zero {
                spans.insert(0, (rat(0), rat(0)));
            }
            spans
        };
        let a = saturate(self.line_spans());
        let b = saturate(other.line_spans());
        let mut out = Vec::new();
        // merge-scan over the two sorted span lists
        let (mut i, mut j) = (0usize, 0usize);
        while i < a.len() && j < b.len() {
            let lo = a[i].0.clone().max(b[j].0.clone());
            let hi = a[i].1.clone().min(b[j].1.clone());
            if lo <= hi {
                out.push((lo, hi));
            }
            if a[i].1 <= b[j].1 {
                i += 1;
            } else {
                j += 1;
            }
        }
        ArcSet::from_line_spans(out)
    }

    /// Closure of the set complement.
    pub fn complement(&self) -> ArcSet {
        if self.is_empty() {
            return ArcSet::full();
        }
        if self.is_full() {
            return ArcSet::empty();
        }
        if self.arcs.len() == 1 && self.arcs[0].is_degenerate() {
            return ArcSet::full();
        }
        let n = self.arcs.len();
        let mut gaps = Vec::with_capacity(n);
        for i in 0..n {
            let cur = &self.arcs[i];
            let next = &self.arcs[(i + 1) % n];
            let end = cur.start.position() + &cur.length; // lifted end of cur
            let mut next_start = next.start.position().clone();
            while next_start < end {
                next_start += rat(1);
            }
            // normal form guarantees distinct components have positive gaps
            let gap_len = &next_start - &end;
            if gap_len > rat(0) {
                gaps.push(Arc {
                    start: CirclePoint::new(end),
                    length: gap_len,
                });
            }
        }
        ArcSet::from_arcs(gaps)
    }

    /// Grows every component by `delta` on both sides.
    pub fn fatten(&self, delta: &Rational) -> ArcSet {
        if delta <= &rat(0) {
            return self.clone();
        }
        let arcs = self
            .arcs
            .iter()
            .map(|a| {
                let len = &a.length + rat(2) * delta;
                if len >= rat(1) {
                    Arc::full()
                } else {
                    Arc {
                        start: CirclePoint::new(a.start.position() - delta),
                        length: len,
                    }
                }
            })
            .collect();
        ArcSet::from_arcs(arcs)
    }

    /// Some point of `self \ other`, or `None` when `self` is covered by
    /// `other`. Exact: closed components leave either a positive-length gap
    /// or an uncovered component endpoint, both of which are found.
    pub fn difference_witness(&self, other: &ArcSet) -> Option<CirclePoint> {
        for a in &self.arcs {
            let lo = a.start.position().clone();
            let hi = &lo + &a.length;
            // other's spans lifted into the window [lo, hi]
            let mut covered: Vec<(Rational, Rational)> = Vec::new();
            for b in &other.arcs {
                if b.is_full() {
                    covered.push((lo.clone(), hi.clone()));
                    continue;
                }
                let bs = b.start.position();
                let be = bs + &b.length;
                let mut k = (&lo - &be).floor();
                loop {
                    let s = bs + &k;
                    let e = &be + &k;
                    if s > hi {
                        break;
                    }
                    let clo = s.max(lo.clone());
                    let chi = e.min(hi.clone());
                    if clo <= chi {
                        covered.push((clo, chi));
                    }
                    k += rat(1);
                }
            }
            covered.sort();
            let mut cursor = lo.clone();
            let mut gap: Option<Rational> = None;
            for (clo, chi) in &covered {
                if *clo > cursor {
                    gap = Some((&cursor + clo) / rat(2));
                    break;
                }
                if *chi > cursor {
                    cursor = chi.clone();
                }
            }
            if gap.is_none() && cursor < hi {
                gap = Some((&cursor + &hi) / rat(2));
            }
            if gap.is_none() && covered.is_empty() {
                gap = Some(a.midpoint().into_position());
            }
            if let Some(g) = gap {
                return Some(CirclePoint::new(g));
            }
        }
        None
    }

    pub fn is_subset_of(&self, other: &ArcSet) -> bool {
        self.difference_witness(other).is_none()
    }

    /// Midpoint of the component with the smallest start (deterministic
    /// witness choice).
    pub fn first_witness(&self) -> Option<CirclePoint> {
        self.arcs.first().map(|a| a.midpoint())
    }
}

impl fmt::Display for ArcSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "(empty)");
        }
        let parts: Vec<String> = self.arcs.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", parts.join(" ∪ "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn pt(n: i64, d: i64) -> CirclePoint {
        CirclePoint::new(frac(n, d))
    }

    fn arc(s: (i64, i64), len: (i64, i64)) -> Arc {
        Arc::new(pt(s.0, s.1), frac(len.0, len.1)).unwrap()
    }

    #[test]
    fn intersect_basic() {
        let a = ArcSet::from_arc(arc((0, 1), (1, 2)));
        let b = ArcSet::from_arc(arc((1, 4), (1, 2)));
        let c = a.intersect(&b);
        assert_eq!(c, ArcSet::from_arc(arc((1, 4), (1, 4))));
    }

    #[test]
    fn complement_of_full_is_empty() {
        assert!(ArcSet::full().complement().is_empty());
        assert!(ArcSet::empty().complement().is_full());
    }

    #[test]
    fn wrap_around_measure() {
        // [7/8, 9/8] crossing zero
        let a = ArcSet::from_arc(arc((7, 8), (1, 4)));
        assert_eq!(a.measure(), frac(1, 4));
        assert!(a.contains(&pt(0, 1)));
        assert!(a.contains(&pt(1, 16)));
        assert!(!a.contains(&pt(1, 2)));
        let c = a.complement();
        assert_eq!(c.measure(), frac(3, 4));
        assert_eq!(c, ArcSet::from_arc(arc((1, 8), (3, 4))));
    }

    #[test]
    fn touching_arcs_merge() {
        let u = ArcSet::from_arcs(vec![arc((0, 1), (1, 2)), arc((1, 2), (1, 2))]);
        assert!(u.is_full());
        let v = ArcSet::from_arcs(vec![arc((0, 1), (1, 4)), arc((1, 4), (1, 4))]);
        assert_eq!(v, ArcSet::from_arc(arc((0, 1), (1, 2))));
        assert_eq!(v.arcs().len(), 1);
    }

    #[test]
    fn glue_across_zero() {
        let u = ArcSet::from_arcs(vec![arc((3, 4), (1, 4)), arc((0, 1), (1, 8))]);
        assert_eq!(u.arcs().len(), 1);
        assert_eq!(u.measure(), frac(3, 8));
        assert_eq!(u.arcs()[0].start(), &pt(3, 4));
    }

    #[test]
    fn point_components() {
        let p = ArcSet::from_point(pt(1, 2));
        assert_eq!(p.measure(), rat(0));
        assert!(p.contains(&pt(1, 2)));
        assert!(p.complement().is_full());
        let a = ArcSet::from_arc(arc((0, 1), (1, 2)));
        let b = ArcSet::from_arc(arc((1, 2), (1, 2)));
        let c = a.intersect(&b);
        // closed arcs share exactly the two touching endpoints
        assert_eq!(c.measure(), rat(0));
        assert!(c.contains(&pt(1, 2)));
        assert!(c.contains(&pt(0, 1)));
    }

    #[test]
    fn difference_witness_finds_gaps() {
        let a = ArcSet::from_arc(arc((0, 1), (1, 2)));
        let b = ArcSet::from_arcs(vec![arc((0, 1), (1, 8)), arc((1, 4), (1, 4))]);
        let w = a.difference_witness(&b).unwrap();
        assert!(a.contains(&w));
        assert!(!b.contains(&w));
        assert!(a.is_subset_of(&a.union(&b)));
        assert!(!a.is_subset_of(&b));
        assert!(b.is_subset_of(&a));
    }

    #[test]
    fn union_with_wrap_becomes_full() {
        let u = ArcSet::from_arcs(vec![arc((1, 4), (1, 2)), arc((3, 4), (1, 2))]);
        assert!(u.is_full());
    }
}
