//! Named example maps used by tests, the CLI demos, and the bindings.
//!
//! Every constructor returns exact rational data; the deeper constructions
//! (the period-doubling model) are laid out on a /1024 grid so that all the
//! cycle verifications come out exact.

use crate::circle::CirclePoint;
use crate::pl_lifting::{CircleMapPL, PLLifting};
use crate::rational::{frac, rat, Rational};

fn lifting(points: &[(Rational, Rational)]) -> PLLifting {
    PLLifting::new(points.to_vec()).expect("model lifting is valid")
}

pub fn identity() -> CircleMapPL {
    CircleMapPL::new(lifting(&[(rat(0), rat(0)), (rat(1), rat(1))]))
}

/// Rigid rotation `x -> x + alpha`.
pub fn rotation(alpha: Rational) -> CircleMapPL {
    CircleMapPL::new(lifting(&[
        (rat(0), alpha.clone()),
        (rat(1), alpha + rat(1)),
    ]))
}

/// The doubling map `x -> 2x`.
pub fn doubling() -> CircleMapPL {
    CircleMapPL::new(lifting(&[(rat(0), rat(0)), (rat(1), rat(2))]))
}

/// Degree-0 tent bump of height 1 (non-extensible boundary case).
pub fn tent_bump() -> CircleMapPL {
    CircleMapPL::new(lifting(&[
        (rat(0), rat(0)),
        (frac(1, 2), rat(1)),
        (rat(1), rat(0)),
    ]))
}

/// Degree-0 bump of height 3/2: extensible, carries a horseshoe.
pub fn tall_bump() -> CircleMapPL {
    CircleMapPL::new(lifting(&[
        (rat(0), rat(0)),
        (frac(1, 2), frac(3, 2)),
        (rat(1), rat(0)),
    ]))
}

/// Degree-0 bump with `max F - min F = 3/4`: the deg-0 invariant-interval
/// case.
pub fn deg0_bump() -> CircleMapPL {
    CircleMapPL::new(lifting(&[
        (rat(0), frac(1, 8)),
        (frac(1, 2), frac(7, 8)),
        (rat(1), frac(1, 8)),
    ]))
}

/// Degree-1 map with fixed point 0 whose unit interval stabilizes at
/// `[0, 5/4]`: the deg-1 invariant-interval case.
pub fn deg1_fixed_example() -> CircleMapPL {
    CircleMapPL::new(lifting(&[
        (rat(0), rat(0)),
        (frac(1, 4), frac(1, 8)),
        (frac(3, 4), frac(5, 4)),
        (rat(1), rat(1)),
    ]))
}

/// The reflection `x -> -x`: the deg-(-1) invariant-interval case.
pub fn reflection() -> CircleMapPL {
    CircleMapPL::new(lifting(&[(rat(0), rat(0)), (rat(1), rat(-1))]))
}

/// Degree-0 map with one repelling fixed point (1/2) and the
/// super-attracting 2-cycle {1/4, 3/4}; period set {1, 2}.
pub fn deg0_two_cycle() -> CircleMapPL {
    CircleMapPL::new(lifting(&[
        (rat(0), frac(1, 2)),
        (frac(1, 8), frac(3, 4)),
        (frac(3, 8), frac(3, 4)),
        (frac(5, 8), frac(1, 4)),
        (frac(7, 8), frac(1, 4)),
        (rat(1), frac(1, 2)),
    ]))
}

/// Monotone degree-1 homeomorphism with the exact period-2 orbit
/// {1/4, 3/4}; rotation number 1/2.
pub fn monotone_period2() -> CircleMapPL {
    CircleMapPL::new(lifting(&[
        (rat(0), frac(3, 8)),
        (frac(1, 4), frac(3, 4)),
        (frac(3, 4), frac(5, 4)),
        (rat(1), frac(11, 8)),
    ]))
}

/// Two-slope monotone degree-1 homeomorphism with no short-period points
/// (the rotation number is bracketed but never certified rational at desk
/// horizons).
pub fn two_slope() -> CircleMapPL {
    CircleMapPL::new(lifting(&[
        (rat(0), frac(1, 4)),
        (frac(1, 3), frac(11, 12)),
        (rat(1), frac(5, 4)),
    ]))
}

/// The depth-3 period-doubling model: a degree-0 circle map with exact
/// nested interval cycles of periods 2, 4, 8 and a super-attracting
/// period-16 core orbit.
///
/// Structure (coordinates in 1024ths):
/// - level 1: E0 = [64, 448] <-> E1 = [512, 896], exact period-2 cycle;
/// - level 2: D0 = [128, 192] -> D1 -> D2 -> D3, exact period-4 cycle;
/// - level 3: K0 = [140, 148] -> ... -> K7, exact period-8 cycle whose
///   return map folds with plateaus, swapping the endpoints x = 140/1024
///   and y = 148/1024 (a period-16 pair) around the repelling period-8
///   point w = 144/1024.
pub fn period_doubling_model() -> CircleMapPL {
    let p = |n: i64| frac(n, 1024);
    CircleMapPL::new(lifting(&[
        (rat(0), p(512)),
        (p(64), p(512)),
        (p(448), p(896)),
        (p(512), p(64)),
        (p(576), p(320)),
        (p(640), p(384)),
        (p(768), p(128)),
        (p(776), p(168)),
        (p(792), p(184)),
        (p(808), p(140)),
        (p(810), p(148)),
        (p(814), p(148)),
        (p(818), p(140)),
        (p(824), p(140)),
        (p(832), p(192)),
        (p(896), p(448)),
        (rat(1), p(512)),
    ]))
}

/// Distinguished points of the period-doubling model.
pub mod pd_model {
    use super::*;

    /// The candidate non-separable pair: the period-16 endpoints of the
    /// deepest core, swapped by `f^8`.
    pub fn ns_pair() -> (CirclePoint, CirclePoint) {
        (
            CirclePoint::new(frac(140, 1024)),
            CirclePoint::new(frac(148, 1024)),
        )
    }

    /// A deliberately separable pair: the exact period-2 orbit split by the
    /// level-1 interval cycle.
    pub fn separable_pair() -> (CirclePoint, CirclePoint) {
        (
            CirclePoint::new(frac(256, 1024)),
            CirclePoint::new(frac(704, 1024)),
        )
    }

    /// The repelling period-8 point inside the deepest core.
    pub fn core_fixed_point() -> CirclePoint {
        CirclePoint::new(frac(144, 1024))
    }

    /// Nested level arcs (base intervals of the period 2, 4, 8 cycles).
    pub fn level_arcs() -> [(Rational, Rational); 3] {
        [
            (frac(64, 1024), frac(448, 1024)),
            (frac(128, 1024), frac(192, 1024)),
            (frac(140, 1024), frac(148, 1024)),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arcset::{Arc, ArcSet};
    use crate::budget::Budget;
    use crate::rational::mod1;

    #[test]
    fn model_degrees() {
        assert_eq!(identity().degree(), 1);
        assert_eq!(rotation(frac(1, 3)).degree(), 1);
        assert_eq!(doubling().degree(), 2);
        assert_eq!(deg0_bump().degree(), 0);
        assert_eq!(deg1_fixed_example().degree(), 1);
        assert_eq!(reflection().degree(), -1);
        assert_eq!(period_doubling_model().degree(), 0);
        assert_eq!(two_slope().degree(), 1);
        assert!(two_slope().lifting().is_monotone_nondecreasing());
    }

    #[test]
    fn pd_model_cycles_are_exact() {
        let b = Budget::default();
        let f = period_doubling_model();
        let arcs = pd_model::level_arcs();
        for (level, (lo, hi)) in arcs.iter().enumerate() {
            let period = 1u32 << (level + 1); // 2, 4, 8
            let g = f.iterate_map(period, &b).unwrap();
            let arc = ArcSet::from_arc(Arc::from_endpoints(lo, hi));
            let img = g.image_arcset(&arc);
            assert_eq!(img, arc, "level {} cycle must return exactly", level + 1);
            // iterates pairwise disjoint
            let mut iterates = vec![arc.clone()];
            let mut cur = arc.clone();
            for _ in 1..period {
                cur = f.image_arcset(&cur);
                iterates.push(cur.clone());
            }
            for i in 0..iterates.len() {
                for j in 0..i {
                    assert!(
                        iterates[i].intersect(&iterates[j]).is_empty(),
                        "iterates {i} and {j} of level {} overlap",
                        level + 1
                    );
                }
            }
        }
        // nesting
        for w in arcs.windows(2) {
            let outer = ArcSet::from_arc(Arc::from_endpoints(&w[0].0, &w[0].1));
            let inner = ArcSet::from_arc(Arc::from_endpoints(&w[1].0, &w[1].1));
            assert!(inner.is_subset_of(&outer));
        }
    }

    #[test]
    fn pd_model_core_orbit() {
        let b = Budget::default();
        let f = period_doubling_model();
        let (x, y) = pd_model::ns_pair();
        let w = pd_model::core_fixed_point();
        let f8 = f.iterate_map(8, &b).unwrap();
        assert_eq!(f8.eval_point(&x), y);
        assert_eq!(f8.eval_point(&y), x);
        assert_eq!(f8.eval_point(&w), w);
        // the separable pair is an exact 2-cycle
        let (p, q) = pd_model::separable_pair();
        assert_eq!(f.eval_point(&p), q);
        assert_eq!(f.eval_point(&q), p);
    }

    #[test]
    fn pd_model_unique_fixed_point() {
        let b = Budget::default();
        let f = period_doubling_model();
        let fixes = crate::periodic::periodic_points(&f, 1, &b).unwrap();
        assert_eq!(fixes.arcs().len(), 1);
        assert_eq!(
            fixes.arcs()[0].start().position().clone(),
            frac(480, 1024)
        );
        assert_eq!(mod1(&frac(480, 1024)), frac(15, 32));
    }
}
