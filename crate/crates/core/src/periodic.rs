//! Exact periodic points, Sharkovsky-order utilities, the `P(f) = kS(n)`
//! structure check, the invariant-interval construction, and the
//! lifted-periodic correspondence.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num::One;

use crate::arcset::{Arc, ArcSet};
use crate::budget::Budget;
use crate::circle::CirclePoint;
use crate::error::{Error, Result};
use crate::pl_lifting::{is_extensible, CircleMapPL, Extensibility, PLLifting};
use crate::rational::{format_rational, rat, Rational};

/// Solution set of `F^n(x) = x + k` over all integers `k`, as a subset of the
/// circle. Slope-one pieces contribute segments, all other pieces isolated
/// points; both are kept exactly.
pub fn periodic_points(f: &CircleMapPL, n: u32, budget: &Budget) -> Result<ArcSet> {
    let g = f.lifting().iterate(n, budget)?;
    let mut spans: Vec<(Rational, Rational)> = Vec::new();
    for w in g.breakpoints().windows(2) {
        let (u0, v0) = &w[0];
        let (u1, v1) = &w[1];
        // h(u) = G(u) - u, linear on the piece
        let h0 = v0 - u0;
        let h1 = v1 - u1;
        if h0 == h1 {
            if h0.denom().is_one() {
                spans.push((u0.clone(), u1.clone()));
            }
            continue;
        }
        let (hmin, hmax) = if h0 < h1 { (&h0, &h1) } else { (&h1, &h0) };
        let mut k = hmin.ceil();
        while k <= hmax.floor() {
            // solve h(u) = k
            let u = u0 + (&k - &h0) * (u1 - u0) / (&h1 - &h0);
            if u >= *u0 && u <= *u1 {
                spans.push((u.clone(), u));
            }
            k += rat(1);
        }
    }
    Ok(ArcSet::from_line_spans(spans))
}

/// Minimal periods realized up to `max_period`, exactly: the solution set of
/// `f^n` minus the solution sets of all proper divisors must be non-empty.
pub fn period_set(f: &CircleMapPL, max_period: u32, budget: &Budget) -> Result<BTreeSet<u32>> {
    let mut sols: Vec<ArcSet> = Vec::with_capacity(max_period as usize + 1);
    sols.push(ArcSet::empty()); // index 0 unused
    let mut out = BTreeSet::new();
    for n in 1..=max_period {
        let sol = periodic_points(f, n, budget)?;
        let mut divisor_union = ArcSet::empty();
        for d in 1..n {
            if n % d == 0 {
                divisor_union = divisor_union.union(&sols[d as usize]);
            }
        }
        if sol.difference_witness(&divisor_union).is_some() {
            out.insert(n);
        }
        sols.push(sol);
    }
    Ok(out)
}

/// An element of the Sharkovsky-ordered set `N ∪ {2^∞}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SharkovskyNumber {
    Finite(u64),
    TwoInfinity,
}

impl SharkovskyNumber {
    fn decompose(m: u64) -> (u32, u64) {
        debug_assert!(m >= 1);
        let a = m.trailing_zeros();
        (a, m >> a)
    }
}

impl std::fmt::Display for SharkovskyNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SharkovskyNumber::Finite(m) => write!(f, "{m}"),
            SharkovskyNumber::TwoInfinity => write!(f, "2^inf"),
        }
    }
}

/// Comparison in the Sharkovsky order; `Greater` means "stronger", i.e.
/// earlier in `3 ≻ 5 ≻ ... ≻ 2·3 ≻ ... ≻ 2^∞ ≻ ... ≻ 4 ≻ 2 ≻ 1`.
pub fn sharkovsky_cmp(a: &SharkovskyNumber, b: &SharkovskyNumber) -> Ordering {
    use SharkovskyNumber::*;
    match (a, b) {
        (TwoInfinity, TwoInfinity) => Ordering::Equal,
        (Finite(x), Finite(y)) => {
            let (ax, bx) = SharkovskyNumber::decompose(*x);
            let (ay, by) = SharkovskyNumber::decompose(*y);
            match (bx > 1, by > 1) {
                (true, true) => {
                    // both have an odd part > 1: smaller power then smaller
                    // odd part is stronger
                    ay.cmp(&ax).then(by.cmp(&bx))
                }
                (true, false) => Ordering::Greater,
                (false, true) => Ordering::Less,
                (false, false) => ax.cmp(&ay), // pure powers of two
            }
        }
        (TwoInfinity, Finite(y)) => {
            let (_, by) = SharkovskyNumber::decompose(*y);
            if by > 1 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        }
        (Finite(_), TwoInfinity) => sharkovsky_cmp(b, a).reverse(),
    }
}

/// `a ⪰ b` in the Sharkovsky order.
pub fn sharkovsky_geq(a: &SharkovskyNumber, b: &SharkovskyNumber) -> bool {
    sharkovsky_cmp(a, b) != Ordering::Less
}

/// `m ∈ S(a) = {m : a ⪰ m}`.
pub fn tail_contains(a: &SharkovskyNumber, m: &SharkovskyNumber) -> bool {
    sharkovsky_geq(a, m)
}

/// Result of fitting the observed period set against `P(f) = k·S(n)` with
/// `n` a power of two or `2^∞`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PeriodFit {
    /// No periodic points up to the bound.
    Empty,
    /// The observed set matches `{k·m : m ∈ S(n)}` within the bound. `n` is
    /// reported as `2^∞` when the doubling ladder fills the whole horizon;
    /// that is finite evidence for an infinite pattern, not a proof.
    Fit { k: u32, n: SharkovskyNumber },
    /// The observed set is not of the form `k·S(n)`.
    NoFit,
}

#[derive(Debug, Clone)]
pub struct PeriodStructureReport {
    pub observed: BTreeSet<u32>,
    pub fit: PeriodFit,
    /// Set when `|deg| > 1`, where the structure theorem does not apply.
    pub degree_warning: bool,
}

/// Fits the period set below `max_period` against the `k·S(n)` structure.
pub fn check_period_structure(
    f: &CircleMapPL,
    max_period: u32,
    budget: &Budget,
) -> Result<PeriodStructureReport> {
    let observed = period_set(f, max_period, budget)?;
    let degree_warning = f.degree().abs() > 1;
    if observed.is_empty() {
        return Ok(PeriodStructureReport {
            observed,
            fit: PeriodFit::Empty,
            degree_warning,
        });
    }
    let k = *observed.iter().next().unwrap();
    // expected ladder k, 2k, 4k, ... within the bound
    let mut ladder = BTreeSet::new();
    let mut m = k as u64;
    while m <= max_period as u64 {
        ladder.insert(m as u32);
        m *= 2;
    }
    let observed_u: BTreeSet<u32> = observed.clone();
    // the observed set must be a prefix of the ladder
    let mut j = 0u32;
    let mut expected = BTreeSet::new();
    let mut fit = PeriodFit::NoFit;
    loop {
        expected.insert(k << j);
        if observed_u == expected {
            let next = (k as u64) << (j + 1);
            let n = if next > max_period as u64 {
                SharkovskyNumber::TwoInfinity
            } else {
                SharkovskyNumber::Finite(1u64 << j)
            };
            fit = PeriodFit::Fit { k, n };
            break;
        }
        let next = (k as u64) << (j + 1);
        if next > max_period as u64 || !observed_u.contains(&(next as u32)) {
            break;
        }
        j += 1;
    }
    Ok(PeriodStructureReport {
        observed,
        fit,
        degree_warning,
    })
}

/// Degree case of the invariant-interval construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeCase {
    Deg0,
    Deg1,
    DegMinus1,
}

/// A lifting `F` and interval `I = [a, b]`, `1 <= b - a < 2`, with
/// `F(I) ⊆ I`, satisfying the per-degree case conditions (verified exactly
/// at construction).
#[derive(Debug, Clone)]
pub struct InvariantInterval {
    pub lifting: PLLifting,
    pub a: Rational,
    pub b: Rational,
    pub case: DegreeCase,
}

fn check_contained(
    f: &PLLifting,
    from: (&Rational, &Rational),
    into: (&Rational, &Rational),
    what: &str,
) -> Result<()> {
    let (lo, hi) = f.image_interval(from.0, from.1);
    if &lo >= into.0 && &hi <= into.1 {
        Ok(())
    } else {
        Err(Error::VerificationFailed(format!(
            "{what}: image [{}, {}] not inside [{}, {}]",
            format_rational(&lo),
            format_rational(&hi),
            format_rational(into.0),
            format_rational(into.1)
        )))
    }
}

/// Builds the invariant interval of the zero-entropy construction.
///
/// Preconditions checked: `|deg| <= 1`, non-extensible up to `horizon`, and
/// (for `deg = ±1`) a fixed point of the circle map. The returned data is
/// self-verified: every case inclusion is re-checked with exact image
/// computations before returning.
pub fn invariant_interval(
    f: &CircleMapPL,
    horizon: u32,
    budget: &Budget,
) -> Result<InvariantInterval> {
    let deg = f.degree();
    if deg.abs() > 1 {
        return Err(Error::WrongDegree {
            expected: 1,
            found: deg,
        });
    }
    match is_extensible(f.lifting(), horizon, budget)? {
        Extensibility::Witness { n, r, .. } => {
            return Err(Error::Extensible {
                n,
                r: format_rational(&r),
            })
        }
        Extensibility::NotExtensibleUpTo(_) => {}
    }
    match deg {
        0 => {
            let a = f
                .lifting()
                .breakpoints()
                .iter()
                .map(|(_, y)| y.clone())
                .min()
                .unwrap();
            let b = &a + rat(1);
            let lifting = f.lifting().clone();
            check_contained(&lifting, (&a, &b), (&a, &b), "deg-0 invariance")?;
            let (lo, hi) = lifting.image_interval(&a, &b);
            if &hi - &lo >= rat(1) {
                return Err(Error::VerificationFailed(
                    "deg-0 case needs |F([a,b])| < 1".into(),
                ));
            }
            Ok(InvariantInterval {
                lifting,
                a,
                b,
                case: DegreeCase::Deg0,
            })
        }
        1 | -1 => {
            // fixed point of the circle map: smallest solution of F(x) = x + k
            let fixes = periodic_points(f, 1, budget)?;
            let x = fixes
                .arcs()
                .first()
                .map(|arc| arc.start().position().clone())
                .ok_or(Error::NoFixedPoint)?;
            let k = f.lifting().eval(&x) - &x;
            let k_int = crate::rational::as_integer(&k).expect("fixed point shift is integral");
            use num::ToPrimitive;
            let mut lifting = f.lifting().shift(-k_int.to_i64().unwrap());
            if deg == -1 {
                lifting = lifting.shift(1);
            }
            // iterate J = [x, x+1] to its stabilized hull
            let mut lo = x.clone();
            let mut hi = &x + rat(1);
            let mut stabilized = false;
            for _ in 0..budget.max_stabilize_iters {
                let (nlo, nhi) = lifting.image_interval(&lo, &hi);
                let nlo = nlo.min(lo.clone());
                let nhi = nhi.max(hi.clone());
                if &nhi - &nlo > rat(2) {
                    return Err(Error::VerificationFailed(
                        "interval hull grew beyond length 2 (extensible beyond horizon?)".into(),
                    ));
                }
                if nlo == lo && nhi == hi {
                    stabilized = true;
                    break;
                }
                lo = nlo;
                hi = nhi;
            }
            if !stabilized {
                return Err(Error::NonStabilizing {
                    budget: budget.max_stabilize_iters,
                });
            }
            let (a, mut b) = (lo, hi);
            if deg == 1 {
                if &b - &a == rat(2) {
                    b = &a + rat(1);
                }
                check_contained(&lifting, (&a, &b), (&a, &b), "deg-1 invariance")?;
                let bm1 = &b - rat(1);
                let ap1 = &a + rat(1);
                if bm1 >= a {
                    check_contained(&lifting, (&a, &bm1), (&a, &bm1), "deg-1 left sub-interval")?;
                    check_contained(&lifting, (&ap1, &b), (&ap1, &b), "deg-1 right sub-interval")?;
                }
                Ok(InvariantInterval {
                    lifting,
                    a,
                    b,
                    case: DegreeCase::Deg1,
                })
            } else {
                if &b - &a == rat(2) {
                    lifting = lifting.shift(-1);
                    b = &a + rat(1);
                }
                check_contained(&lifting, (&a, &b), (&a, &b), "deg-(-1) invariance")?;
                let bm1 = &b - rat(1);
                let ap1 = &a + rat(1);
                check_contained(
                    &lifting,
                    (&a, &bm1),
                    (&ap1, &b),
                    "deg-(-1) left-to-right crossing",
                )?;
                check_contained(
                    &lifting,
                    (&ap1, &b),
                    (&a, &bm1),
                    "deg-(-1) right-to-left crossing",
                )?;
                Ok(InvariantInterval {
                    lifting,
                    a,
                    b,
                    case: DegreeCase::DegMinus1,
                })
            }
        }
        _ => unreachable!(),
    }
}

/// Periodic points of the restricted lifting `F|_[a,b]` up to period
/// `max_period`, as line intervals/points inside `[a, b]`.
fn line_periodic_points(
    lifting: &PLLifting,
    a: &Rational,
    b: &Rational,
    max_period: u32,
    budget: &Budget,
) -> Result<Vec<(Rational, Rational)>> {
    let mut out: Vec<(Rational, Rational)> = Vec::new();
    for n in 1..=max_period {
        let g = lifting.iterate(n, budget)?;
        // pieces of g covering [a, b]: kinks plus endpoints
        let mut xs = vec![a.clone()];
        for (x, _) in g.breakpoints()[..g.breakpoints().len() - 1].iter() {
            let mut k = (a - x).floor();
            loop {
                let pos = x + &k;
                if pos >= *b {
                    break;
                }
                if pos > *a {
                    xs.push(pos.clone());
                }
                k += rat(1);
            }
        }
        xs.push(b.clone());
        xs.sort();
        xs.dedup();
        for w in xs.windows(2) {
            let (u0, u1) = (&w[0], &w[1]);
            let v0 = g.eval(u0);
            let v1 = g.eval(u1);
            let h0 = &v0 - u0;
            let h1 = &v1 - u1;
            if h0 == h1 {
                if h0 == rat(0) {
                    out.push((u0.clone(), u1.clone()));
                }
                continue;
            }
            let (hmin, hmax) = if h0 < h1 { (&h0, &h1) } else { (&h1, &h0) };
            if *hmin <= rat(0) && rat(0) <= *hmax {
                let u = u0 + (rat(0) - &h0) * (u1 - u0) / (&h1 - &h0);
                if u >= *u0 && u <= *u1 {
                    out.push((u.clone(), u));
                }
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct CorrespondenceReport {
    pub max_period: u32,
    pub circle_side: ArcSet,
    pub projected_line_side: ArcSet,
    pub equal: bool,
    /// A point witnessing the discrepancy, with the side it is missing from.
    pub counterexample: Option<(String, CirclePoint)>,
}

/// Verifies `e(Per(F|_I)) = Per(f)` for periods up to `max_period`, exactly.
pub fn lifted_periodic_correspondence(
    f: &CircleMapPL,
    inv: &InvariantInterval,
    max_period: u32,
    budget: &Budget,
) -> Result<CorrespondenceReport> {
    let mut circle_side = ArcSet::empty();
    for n in 1..=max_period {
        circle_side = circle_side.union(&periodic_points(f, n, budget)?);
    }
    let line = line_periodic_points(&inv.lifting, &inv.a, &inv.b, max_period, budget)?;
    let mut projected = ArcSet::empty();
    for (lo, hi) in line {
        let arc = if &hi - &lo >= rat(1) {
            Arc::full()
        } else if hi == lo {
            Arc::point(CirclePoint::new(lo))
        } else {
            Arc::from_endpoints(&lo, &hi)
        };
        projected = projected.union(&ArcSet::from_arc(arc));
    }
    let missing_from_line = circle_side.difference_witness(&projected);
    let missing_from_circle = projected.difference_witness(&circle_side);
    let (equal, counterexample) = match (missing_from_line, missing_from_circle) {
        (None, None) => (true, None),
        (Some(w), _) => (false, Some(("projected line side".to_string(), w))),
        (None, Some(w)) => (false, Some(("circle side".to_string(), w))),
    };
    Ok(CorrespondenceReport {
        max_period,
        circle_side,
        projected_line_side: projected,
        equal,
        counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models;
    use crate::rational::frac;

    #[test]
    fn periodic_points_rotation_and_doubling() {
        let b = Budget::default();
        let r3 = models::rotation(frac(1, 3));
        assert!(periodic_points(&r3, 3, &b).unwrap().is_full());
        assert!(periodic_points(&r3, 1, &b).unwrap().is_empty());
        let d = models::doubling();
        let p3 = periodic_points(&d, 3, &b).unwrap();
        assert_eq!(p3.arcs().len(), 7);
        for k in 0..7 {
            assert!(p3.contains(&CirclePoint::new(frac(k, 7))));
        }
    }

    #[test]
    fn period_sets() {
        let b = Budget::default();
        let r3 = models::rotation(frac(1, 3));
        assert_eq!(
            period_set(&r3, 10, &b).unwrap().into_iter().collect::<Vec<_>>(),
            vec![3]
        );
        let id = models::identity();
        assert_eq!(
            period_set(&id, 5, &b).unwrap().into_iter().collect::<Vec<_>>(),
            vec![1]
        );
        let d = models::doubling();
        assert_eq!(
            period_set(&d, 4, &b).unwrap().into_iter().collect::<Vec<_>>(),
            vec![1, 2, 3, 4]
        );
    }

    #[test]
    fn sharkovsky_order_cases() {
        use SharkovskyNumber::*;
        assert!(sharkovsky_geq(&Finite(3), &TwoInfinity));
        // 6 = 2·3 precedes 12 = 4·3 in the order
        assert!(sharkovsky_geq(&Finite(6), &Finite(12)));
        assert!(!tail_contains(&Finite(12), &Finite(6)));
        assert!(tail_contains(&Finite(6), &Finite(12)));
        assert!(sharkovsky_geq(&Finite(2), &Finite(1)));
        assert!(sharkovsky_geq(&TwoInfinity, &Finite(64)));
        assert!(sharkovsky_geq(&Finite(2 * 7), &Finite(4 * 3)));
        assert!(sharkovsky_geq(&Finite(3), &Finite(5)));
        assert!(sharkovsky_geq(&Finite(5), &Finite(7)));
        assert!(!sharkovsky_geq(&Finite(5), &Finite(3)));
    }

    #[test]
    fn period_structure_fits() {
        let b = Budget::default();
        let r3 = models::rotation(frac(1, 3));
        let rep = check_period_structure(&r3, 10, &b).unwrap();
        assert_eq!(
            rep.fit,
            PeriodFit::Fit {
                k: 3,
                n: SharkovskyNumber::Finite(1)
            }
        );
        let id = models::identity();
        let rep = check_period_structure(&id, 5, &b).unwrap();
        assert_eq!(
            rep.fit,
            PeriodFit::Fit {
                k: 1,
                n: SharkovskyNumber::Finite(1)
            }
        );
    }

    #[test]
    fn invariant_interval_deg0() {
        let b = Budget::default();
        let f = models::deg0_bump();
        let inv = invariant_interval(&f, 6, &b).unwrap();
        assert_eq!(inv.case, DegreeCase::Deg0);
        assert_eq!(&inv.b - &inv.a, rat(1));
        assert_eq!(inv.a, frac(1, 8));
        let (lo, hi) = inv.lifting.image_interval(&inv.a, &inv.b);
        assert!(&hi - &lo < rat(1));
        assert_eq!(&hi - &lo, frac(3, 4));
    }

    #[test]
    fn invariant_interval_deg1() {
        let b = Budget::default();
        let f = models::deg1_fixed_example();
        let inv = invariant_interval(&f, 6, &b).unwrap();
        assert_eq!(inv.case, DegreeCase::Deg1);
        assert_eq!(inv.a, rat(0));
        assert_eq!(inv.b, frac(5, 4));
    }

    #[test]
    fn invariant_interval_deg_minus1() {
        let b = Budget::default();
        let f = models::reflection();
        let inv = invariant_interval(&f, 6, &b).unwrap();
        assert_eq!(inv.case, DegreeCase::DegMinus1);
        assert_eq!(&inv.b - &inv.a, rat(1));
    }

    #[test]
    fn invariant_interval_refuses_extensible() {
        let b = Budget::default();
        let f = models::tall_bump();
        assert!(matches!(
            invariant_interval(&f, 3, &b),
            Err(Error::Extensible { .. })
        ));
    }

    #[test]
    fn correspondence_identity() {
        let b = Budget::default();
        let f = models::identity();
        let inv = invariant_interval(&f, 3, &b).unwrap();
        let rep = lifted_periodic_correspondence(&f, &inv, 3, &b).unwrap();
        assert!(rep.equal);
        assert!(rep.circle_side.is_full());
    }
}
