//! Points on the circle, the circle metric, and circular ordering.
//!
//! The circle is realized as `[0, 1)` mod 1; a point is a reduced rational in
//! that range. No trigonometric realization is ever evaluated.

use std::fmt;

use num::Signed;

use crate::error::{Error, Result};
use crate::rational::{format_rational, frac, mod1, Rational};

/// A point of the circle, stored as its unique representative in `[0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CirclePoint(Rational);

impl CirclePoint {
    /// Projects any rational to the circle (reduces mod 1).
    pub fn new(x: Rational) -> Self {
        CirclePoint(mod1(&x))
    }

    pub fn position(&self) -> &Rational {
        &self.0
    }

    pub fn into_position(self) -> Rational {
        self.0
    }

    /// Translates by a rational offset, staying on the circle.
    pub fn translate(&self, offset: &Rational) -> Self {
        CirclePoint::new(&self.0 + offset)
    }
}

impl fmt::Display for CirclePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_rational(&self.0))
    }
}

/// Arc-length metric on the circle: `|a-b|` when that is at most `1/2`,
/// otherwise `1 - |a-b|`. The result is always in `[0, 1/2]`.
pub fn circle_metric(a: &CirclePoint, b: &CirclePoint) -> Rational {
    let d = (a.position() - b.position()).abs();
    let half = frac(1, 2);
    if d <= half {
        d
    } else {
        Rational::from_integer(1.into()) - d
    }
}

/// Circular ordering of `points` as seen from `base`: lifts every point into
/// `[base, base + 1)` and sorts. Returns the permutation as 0-based indices
/// into `points`, listed in circular order.
///
/// Errors with `DegenerateInput` when two points coincide or a point equals
/// the base (the ordering is then ill-defined).
pub fn circular_order(base: &CirclePoint, points: &[CirclePoint]) -> Result<Vec<usize>> {
    let mut lifted: Vec<(Rational, usize)> = Vec::with_capacity(points.len());
    for (i, p) in points.iter().enumerate() {
        if p == base {
            return Err(Error::DegenerateInput(format!(
                "point {i} coincides with the base"
            )));
        }
        // lift of p into [base, base+1)
        let mut x = p.position().clone();
        if x < *base.position() {
            x += Rational::from_integer(1.into());
        }
        lifted.push((x, i));
    }
    lifted.sort();
    for w in lifted.windows(2) {
        if w[0].0 == w[1].0 {
            return Err(Error::DegenerateInput(format!(
                "points {} and {} coincide",
                w[0].1, w[1].1
            )));
        }
    }
    Ok(lifted.into_iter().map(|(_, i)| i).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn pt(n: i64, d: i64) -> CirclePoint {
        CirclePoint::new(frac(n, d))
    }

    #[test]
    fn metric_formula_cases() {
        assert_eq!(circle_metric(&pt(1, 10), &pt(9, 10)), frac(1, 5));
        let x = pt(3, 7);
        assert_eq!(circle_metric(&x, &x), rat(0));
        assert_eq!(circle_metric(&pt(0, 1), &pt(1, 2)), frac(1, 2));
    }

    #[test]
    fn point_reduces_mod_one() {
        assert_eq!(pt(5, 4), pt(1, 4));
        assert_eq!(pt(-1, 4), pt(3, 4));
    }

    #[test]
    fn order_direct_sort() {
        let base = pt(0, 1);
        let pts = [pt(1, 4), pt(3, 4), pt(1, 2)];
        assert_eq!(circular_order(&base, &pts).unwrap(), vec![0, 2, 1]);
    }

    #[test]
    fn order_wraps_around_base() {
        let base = pt(1, 2);
        let pts = [pt(1, 4), pt(3, 4)];
        assert_eq!(circular_order(&base, &pts).unwrap(), vec![1, 0]);
    }

    #[test]
    fn order_singleton_and_degenerate() {
        let base = pt(0, 1);
        assert_eq!(circular_order(&base, &[pt(1, 3)]).unwrap(), vec![0]);
        assert!(circular_order(&base, &[pt(0, 1)]).is_err());
        assert!(circular_order(&base, &[pt(1, 3), pt(1, 3)]).is_err());
    }
}
