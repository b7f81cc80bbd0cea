//! Piecewise-linear liftings of circle maps.
//!
//! A lifting is a continuous PL function `F: R -> R` given by breakpoints on
//! `[0, 1]` and extended by `F(x + 1) = F(x) + degree`. The circle map it
//! covers is `f(e(x)) = e(F(x))`. Everything here is exact: evaluation,
//! composition, images, preimages, the extensibility test, and horseshoe
//! certificates.

use num::bigint::BigInt;
use num::{One, Zero};

use crate::arcset::{Arc, ArcSet};
use crate::budget::Budget;
use crate::circle::CirclePoint;
use crate::error::{Error, Result};
use crate::rational::{format_rational, rat, Rational};

/// PL lifting with breakpoints `(x_i, y_i)`, `x_0 = 0 < x_1 < ... < x_k = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PLLifting {
    breakpoints: Vec<(Rational, Rational)>,
    degree: i64,
}

impl PLLifting {
    pub fn new(breakpoints: Vec<(Rational, Rational)>) -> Result<Self> {
        if breakpoints.len() < 2 {
            return Err(Error::InvalidLifting(
                "need at least the two endpoint breakpoints".into(),
            ));
        }
        if breakpoints[0].0 != rat(0) {
            return Err(Error::InvalidLifting("first breakpoint must have x = 0".into()));
        }
        if breakpoints.last().unwrap().0 != rat(1) {
            return Err(Error::InvalidLifting("last breakpoint must have x = 1".into()));
        }
        for w in breakpoints.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(Error::InvalidLifting(format!(
                    "breakpoint x values must be strictly increasing ({} then {})",
                    format_rational(&w[0].0),
                    format_rational(&w[1].0)
                )));
            }
        }
        let d = &breakpoints.last().unwrap().1 - &breakpoints[0].1;
        let degree = match crate::rational::as_integer(&d) {
            Some(n) => {
                use num::ToPrimitive;
                n.to_i64().ok_or_else(|| {
                    Error::InvalidLifting("degree out of i64 range".into())
                })?
            }
            None => {
                return Err(Error::InvalidLifting(format!(
                    "y_k - y_0 = {} is not an integer",
                    format_rational(&d)
                )))
            }
        };
        let mut lifting = PLLifting { breakpoints, degree };
        lifting.simplify();
        Ok(lifting)
    }

    /// Drops interior breakpoints where adjacent segments are collinear.
    fn simplify(&mut self) {
        if self.breakpoints.len() <= 2 {
            return;
        }
        let mut out: Vec<(Rational, Rational)> = Vec::with_capacity(self.breakpoints.len());
        out.push(self.breakpoints[0].clone());
        for i in 1..self.breakpoints.len() - 1 {
            let (x0, y0) = out.last().unwrap().clone();
            let (x1, y1) = self.breakpoints[i].clone();
            let (x2, y2) = self.breakpoints[i + 1].clone();
            // collinear iff (y1-y0)*(x2-x1) == (y2-y1)*(x1-x0)
            let lhs = (&y1 - &y0) * (&x2 - &x1);
            let rhs = (&y2 - &y1) * (&x1 - &x0);
            if lhs != rhs {
                out.push((x1, y1));
            }
        }
        out.push(self.breakpoints.last().unwrap().clone());
        self.breakpoints = out;
    }

    pub fn breakpoints(&self) -> &[(Rational, Rational)] {
        &self.breakpoints
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// The lifting `F + k`.
    pub fn shift(&self, k: i64) -> PLLifting {
        let kr = rat(k);
        PLLifting {
            breakpoints: self
                .breakpoints
                .iter()
                .map(|(x, y)| (x.clone(), y + &kr))
                .collect(),
            degree: self.degree,
        }
    }

    /// Exact evaluation anywhere on the line via the extension rule.
    pub fn eval(&self, x: &Rational) -> Rational {
        let n = x.floor().to_integer();
        let t = x - Rational::from_integer(n.clone());
        let base = self.eval_unit(&t);
        base + Rational::from_integer(n * BigInt::from(self.degree))
    }

    /// Evaluation for `t` in `[0, 1]`.
    fn eval_unit(&self, t: &Rational) -> Rational {
        debug_assert!(*t >= rat(0) && *t <= rat(1));
        // binary search for the piece containing t
        let bps = &self.breakpoints;
        let mut lo = 0usize;
        let mut hi = bps.len() - 1;
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if bps[mid].0 <= *t {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let (x0, y0) = &bps[lo];
        let (x1, y1) = &bps[lo + 1];
        if t == x0 {
            return y0.clone();
        }
        if t == x1 {
            return y1.clone();
        }
        y0 + (t - x0) * (y1 - y0) / (x1 - x0)
    }

    /// Non-decreasing on all of R?
    pub fn is_monotone_nondecreasing(&self) -> bool {
        self.breakpoints.windows(2).all(|w| w[0].1 <= w[1].1)
    }

    /// Composition `self ∘ other`, exact, with collinear simplification.
    pub fn compose(&self, other: &PLLifting, budget: &Budget) -> Result<PLLifting> {
        // cut points: other's breakpoints plus other-preimages of self's kinks
        let mut cuts: Vec<Rational> = other.breakpoints.iter().map(|(x, _)| x.clone()).collect();
        let kink_xs: Vec<Rational> = self.breakpoints[..self.breakpoints.len() - 1]
            .iter()
            .map(|(x, _)| x.clone())
            .collect();
        for w in other.breakpoints.windows(2) {
            let (u0, v0) = &w[0];
            let (u1, v1) = &w[1];
            if v0 == v1 {
                continue; // constant piece never crosses a kink transversally
            }
            let slope = (v1 - v0) / (u1 - u0);
            let (vmin, vmax) = if v0 < v1 { (v0, v1) } else { (v1, v0) };
            for xb in &kink_xs {
                // all xb + k strictly inside (vmin, vmax)
                let mut k = (vmin - xb).floor();
                loop {
                    let target = xb + &k;
                    if target > *vmax {
                        break;
                    }
                    if target > *vmin && target < *vmax {
                        let u = u0 + (&target - v0) / &slope;
                        if u > *u0 && u < *u1 {
                            cuts.push(u);
                        }
                    }
                    k += rat(1);
                }
            }
            if cuts.len() > budget.max_breakpoints {
                return Err(Error::ComplexityBudgetExceeded {
                    what: format!("composition breakpoints ({})", cuts.len()),
                    limit: budget.max_breakpoints,
                });
            }
        }
        cuts.sort();
        cuts.dedup();
        let breakpoints: Vec<(Rational, Rational)> = cuts
            .into_iter()
            .map(|u| {
                let v = other.eval(&u);
                let y = self.eval(&v);
                (u, y)
            })
            .collect();
        let mut out = PLLifting {
            breakpoints,
            degree: self.degree * other.degree,
        };
        out.simplify();
        Ok(out)
    }

    /// `F^n` by repeated composition.
    pub fn iterate(&self, n: u32, budget: &Budget) -> Result<PLLifting> {
        if n == 0 {
            return PLLifting::new(vec![(rat(0), rat(0)), (rat(1), rat(1))]);
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = self.compose(&acc, budget)?;
        }
        Ok(acc)
    }

    /// Kink positions `x_i + k` strictly inside `(lo, hi)`.
    fn kinks_within(&self, lo: &Rational, hi: &Rational) -> Vec<Rational> {
        let mut out = Vec::new();
        for (x, _) in &self.breakpoints[..self.breakpoints.len() - 1] {
            let mut k = (lo - x).floor();
            loop {
                let pos = x + &k;
                if pos >= *hi {
                    break;
                }
                if pos > *lo {
                    out.push(pos.clone());
                }
                k += rat(1);
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Exact image `[min F([a,b]), max F([a,b])]`; extrema occur at endpoints
    /// or kinks.
    pub fn image_interval(&self, a: &Rational, b: &Rational) -> (Rational, Rational) {
        assert!(a <= b, "image_interval needs a <= b");
        let mut lo = self.eval(a);
        let mut hi = lo.clone();
        let vb = self.eval(b);
        if vb < lo {
            lo = vb.clone();
        }
        if vb > hi {
            hi = vb;
        }
        for kx in self.kinks_within(a, b) {
            let v = self.eval(&kx);
            if v < lo {
                lo = v.clone();
            }
            if v > hi {
                hi = v;
            }
        }
        (lo, hi)
    }

    /// Maximal monotone runs of the lifting on `[lo, hi]` (plateaus merge
    /// into the current run).
    fn monotone_runs(&self, lo: &Rational, hi: &Rational) -> Vec<(Rational, Rational)> {
        let mut xs = vec![lo.clone()];
        xs.extend(self.kinks_within(lo, hi));
        xs.push(hi.clone());
        let mut runs: Vec<(Rational, Rational)> = Vec::new();
        let mut run_start = xs[0].clone();
        let mut dir: i8 = 0;
        for i in 0..xs.len() - 1 {
            let y0 = self.eval(&xs[i]);
            let y1 = self.eval(&xs[i + 1]);
            let seg_dir: i8 = if y1 > y0 {
                1
            } else if y1 < y0 {
                -1
            } else {
                0
            };
            if seg_dir != 0 && dir != 0 && seg_dir != dir {
                runs.push((run_start.clone(), xs[i].clone()));
                run_start = xs[i].clone();
                dir = seg_dir;
            } else if dir == 0 {
                dir = seg_dir;
            }
        }
        runs.push((run_start, xs.last().unwrap().clone()));
        runs
    }

    /// Inverse of the lifting within a monotone run: the unique `u` in
    /// `[u0, u1]` with `F(u) = target`. `None` if the target is outside the
    /// run's image.
    fn invert_in_run(&self, u0: &Rational, u1: &Rational, target: &Rational) -> Option<Rational> {
        let v0 = self.eval(u0);
        let v1 = self.eval(u1);
        let (wlo, whi) = if v0 <= v1 { (&v0, &v1) } else { (&v1, &v0) };
        if target < wlo || target > whi {
            return None;
        }
        // walk the pieces of the run
        let mut xs = vec![u0.clone()];
        xs.extend(self.kinks_within(u0, u1));
        xs.push(u1.clone());
        for w in xs.windows(2) {
            let a = &w[0];
            let b = &w[1];
            let ya = self.eval(a);
            let yb = self.eval(b);
            let (plo, phi) = if ya <= yb { (&ya, &yb) } else { (&yb, &ya) };
            if target >= plo && target <= phi {
                if ya == yb {
                    return Some(a.clone());
                }
                let u = a + (target - &ya) * (b - a) / (&yb - &ya);
                return Some(u);
            }
        }
        None
    }
}

/// A circle map represented by a PL lifting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircleMapPL {
    lifting: PLLifting,
}

impl CircleMapPL {
    pub fn new(lifting: PLLifting) -> Self {
        CircleMapPL { lifting }
    }

    pub fn lifting(&self) -> &PLLifting {
        &self.lifting
    }

    pub fn degree(&self) -> i64 {
        self.lifting.degree()
    }

    pub fn eval_point(&self, p: &CirclePoint) -> CirclePoint {
        CirclePoint::new(self.lifting.eval(p.position()))
    }

    /// The circle map `f^n`.
    pub fn iterate_map(&self, n: u32, budget: &Budget) -> Result<CircleMapPL> {
        Ok(CircleMapPL::new(self.lifting.iterate(n, budget)?))
    }

    /// Exact image `f(A)` as an `ArcSet` (componentwise interval images).
    pub fn image_arcset(&self, a: &ArcSet) -> ArcSet {
        let mut arcs = Vec::new();
        for arc in a.arcs() {
            let s = arc.start().position().clone();
            let e = &s + arc.length();
            let (lo, hi) = self.lifting.image_interval(&s, &e);
            let len = &hi - &lo;
            if len >= rat(1) {
                arcs.push(Arc::full());
            } else if len.is_zero() {
                arcs.push(Arc::point(CirclePoint::new(lo)));
            } else {
                arcs.push(Arc::from_endpoints(&lo, &hi));
            }
        }
        let mut out = ArcSet::empty();
        for arc in arcs {
            out = out.union(&ArcSet::from_arc(arc));
        }
        out
    }

    /// Exact preimage `f^{-1}(A)`: each linear piece of the lifting is solved
    /// against every component of `A` and all relevant integer translates.
    pub fn preimage_arcset(&self, a: &ArcSet) -> ArcSet {
        if a.is_empty() {
            return ArcSet::empty();
        }
        if a.is_full() {
            return ArcSet::full();
        }
        let spans = a.line_spans();
        let mut out_spans: Vec<(Rational, Rational)> = Vec::new();
        let bps = self.lifting.breakpoints();
        for w in bps.windows(2) {
            let (u0, v0) = &w[0];
            let (u1, v1) = &w[1];
            let (vmin, vmax) = if v0 <= v1 {
                (v0.clone(), v1.clone())
            } else {
                (v1.clone(), v0.clone())
            };
            for (slo, shi) in &spans {
                // translates [slo + k, shi + k] meeting [vmin, vmax]
                let mut k = (&vmin - shi).floor();
                loop {
                    let tlo = slo + &k;
                    let thi = shi + &k;
                    if tlo > vmax {
                        break;
                    }
                    if thi >= vmin {
                        if v0 == v1 {
                            if *v0 >= tlo && *v0 <= thi {
                                out_spans.push((u0.clone(), u1.clone()));
                            }
                        } else {
                            let slope = (v1 - v0) / (u1 - u0);
                            let mut ua = u0 + (&tlo.clone().max(vmin.clone()) - v0) / &slope;
                            let mut ub = u0 + (&thi.clone().min(vmax.clone()) - v0) / &slope;
                            if ua > ub {
                                std::mem::swap(&mut ua, &mut ub);
                            }
                            let ua = ua.max(u0.clone());
                            let ub = ub.min(u1.clone());
                            if ua <= ub {
                                out_spans.push((ua, ub));
                            }
                        }
                    }
                    k += rat(1);
                }
            }
        }
        ArcSet::from_line_spans(out_spans)
    }

    /// `f^{-t}(A)` by repeated exact preimage.
    pub fn preimage_power(&self, a: &ArcSet, t: u64) -> ArcSet {
        let mut cur = a.clone();
        for _ in 0..t {
            cur = self.preimage_arcset(&cur);
        }
        cur
    }
}

/// Verdict of the horizon-bounded extensibility test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Extensibility {
    /// `|F^n([r, r+1])| >= |deg| + 1` with the exact image as certificate.
    Witness {
        n: u32,
        r: Rational,
        image: (Rational, Rational),
    },
    NotExtensibleUpTo(u32),
}

impl Extensibility {
    pub fn is_extensible(&self) -> bool {
        matches!(self, Extensibility::Witness { .. })
    }
}

/// Tests `|F^n([r, r+1])| >= |deg(f)| + 1` for all `n <= horizon`.
///
/// For each `n` the sup over `r` is attained at a breakpoint of `F^n`:
/// between consecutive kink events the window max and min are max/min of
/// finitely many linear functions of `r`, so their difference is convex and
/// peaks at the event endpoints.
pub fn is_extensible(f: &PLLifting, horizon: u32, budget: &Budget) -> Result<Extensibility> {
    let threshold = rat(f.degree().abs() + 1);
    let mut power = f.clone();
    for n in 1..=horizon {
        if n > 1 {
            power = f.compose(&power, budget)?;
        }
        for (x, _) in power.breakpoints() {
            let hi = x + rat(1);
            let (lo_v, hi_v) = power.image_interval(x, &hi);
            if &hi_v - &lo_v >= threshold {
                return Ok(Extensibility::Witness {
                    n,
                    r: x.clone(),
                    image: (lo_v, hi_v),
                });
            }
        }
    }
    Ok(Extensibility::NotExtensibleUpTo(horizon))
}

/// Exact horseshoe certificate: `f^n(sub[i][j]) = k[j]` with `k[0]`, `k[1]`
/// closed arcs with disjoint interiors.
#[derive(Debug, Clone)]
pub struct Horseshoe {
    pub n: u32,
    pub k: [Arc; 2],
    pub sub: [[Arc; 2]; 2],
}

impl Horseshoe {
    /// Re-verifies the certificate from scratch.
    pub fn verify(&self, f: &CircleMapPL, budget: &Budget) -> Result<()> {
        let g = f.lifting().iterate(self.n, budget)?;
        for i in 0..2 {
            for j in 0..2 {
                let sub = &self.sub[i][j];
                if !arc_subset(sub, &self.k[i]) {
                    return Err(Error::VerificationFailed(format!(
                        "sub-arc {i}{j} not inside K{}",
                        i + 1
                    )));
                }
                if !maps_exactly_onto(&g, sub, &self.k[j]) {
                    return Err(Error::VerificationFailed(format!(
                        "image of sub-arc {i}{j} is not exactly K{}",
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

fn arc_subset(inner: &Arc, outer: &Arc) -> bool {
    ArcSet::from_arc(inner.clone()).is_subset_of(&ArcSet::from_arc(outer.clone()))
}

/// Does the lifted image of `arc` equal some lift of `target` exactly?
fn maps_exactly_onto(g: &PLLifting, arc: &Arc, target: &Arc) -> bool {
    let s = arc.start().position().clone();
    let e = &s + arc.length();
    let (lo, hi) = g.image_interval(&s, &e);
    let tlo = target.start().position().clone();
    let thi = &tlo + target.length();
    let shiftn = &lo - &tlo;
    if !shiftn.denom().is_one() {
        return false;
    }
    lo == &tlo + &shiftn && hi == &thi + &shiftn
}

/// Searches for a horseshoe of `f^n`, `n <= horizon`.
///
/// Candidates are complementary arc pairs `K1 = [p, q]`, `K2 = [q, p+1]`
/// with endpoints among: breakpoints of `F^n`, exact periodic points of
/// period 1 and 2, and their `F^n`-preimages (the endpoints any exact
/// certificate can use). Each found pair is verified exactly; absence up to
/// the horizon is not a proof of zero entropy.
pub fn find_horseshoe(
    f: &CircleMapPL,
    horizon: u32,
    budget: &Budget,
) -> Result<Option<Horseshoe>> {
    let per = {
        let mut p = crate::periodic::periodic_points(f, 1, budget)?;
        p = p.union(&crate::periodic::periodic_points(f, 2, budget)?);
        p
    };
    let mut power = f.lifting().clone();
    for n in 1..=horizon {
        if n > 1 {
            power = f.lifting().compose(&power, budget)?;
        }
        let mut pts: Vec<Rational> = Vec::new();
        for (x, _) in power.breakpoints() {
            pts.push(crate::rational::mod1(x));
        }
        for arc in per.arcs() {
            pts.push(arc.start().position().clone());
            pts.push(arc.end().position().clone());
        }
        // preimages under F^n of the collected points
        let base: Vec<Rational> = {
            let mut b = pts.clone();
            b.sort();
            b.dedup();
            b
        };
        let power_map = CircleMapPL::new(power.clone());
        let mut cand = base.clone();
        for p in &base {
            let target = ArcSet::from_point(CirclePoint::new(p.clone()));
            let pre = power_map.preimage_arcset(&target);
            for arc in pre.arcs() {
                cand.push(arc.start().position().clone());
                cand.push(arc.end().position().clone());
            }
        }
        cand.sort();
        cand.dedup();
        if cand.len() * cand.len() > budget.max_candidates {
            return Err(Error::ComplexityBudgetExceeded {
                what: format!("horseshoe candidate pairs ({}^2)", cand.len()),
                limit: budget.max_candidates,
            });
        }
        for i in 0..cand.len() {
            for j in 0..cand.len() {
                if i == j {
                    continue;
                }
                let p = &cand[i];
                let q = &cand[j];
                let k1 = Arc::from_endpoints(p, q);
                let k2 = Arc::from_endpoints(q, p);
                if k1.is_degenerate() || k2.is_degenerate() {
                    continue;
                }
                if let Some(hs) = try_horseshoe_pair(&power, n, &k1, &k2) {
                    return Ok(Some(hs));
                }
            }
        }
    }
    Ok(None)
}

/// Attempts to realize `(k1, k2)` as a horseshoe of the lifting `g = F^n`.
fn try_horseshoe_pair(g: &PLLifting, n: u32, k1: &Arc, k2: &Arc) -> Option<Horseshoe> {
    let mut sub = [[None, None], [None, None]];
    for (i, ki) in [k1, k2].iter().enumerate() {
        let s = ki.start().position().clone();
        let e = &s + ki.length();
        let runs = g.monotone_runs(&s, &e);
        for (j, kj) in [k1, k2].iter().enumerate() {
            'runs: for (u0, u1) in &runs {
                let v0 = g.eval(u0);
                let v1 = g.eval(u1);
                let (wlo, whi) = if v0 <= v1 { (v0, v1) } else { (v1, v0) };
                let tlo = kj.start().position().clone();
                let thi = &tlo + kj.length();
                // lift of kj inside [wlo, whi]
                let mut k = (&wlo - &thi).floor();
                loop {
                    let a = &tlo + &k;
                    let b = &thi + &k;
                    if a > whi {
                        break;
                    }
                    if a >= wlo && b <= whi {
                        let inv = g
                            .invert_in_run(u0, u1, &a)
                            .zip(g.invert_in_run(u0, u1, &b));
                        if let Some((ua, ub)) = inv {
                            let (lo, hi) = if ua <= ub { (ua, ub) } else { (ub, ua) };
                            // plateau inverses can overshoot; verify the
                            // image directly before accepting
                            let (ilo, ihi) = g.image_interval(&lo, &hi);
                            if &ihi - &ilo == kj.length().clone()
                                && crate::rational::mod1(&ilo) == *kj.start().position()
                            {
                                sub[i][j] = Some(Arc::from_endpoints(&lo, &hi));
                                break 'runs;
                            }
                        }
                    }
                    k += rat(1);
                }
            }
            sub[i][j].as_ref()?;
        }
    }
    let hs = Horseshoe {
        n,
        k: [k1.clone(), k2.clone()],
        sub: [
            [sub[0][0].clone().unwrap(), sub[0][1].clone().unwrap()],
            [sub[1][0].clone().unwrap(), sub[1][1].clone().unwrap()],
        ],
    };
    Some(hs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn doubling() -> PLLifting {
        PLLifting::new(vec![(rat(0), rat(0)), (rat(1), rat(2))]).unwrap()
    }

    fn rotation(p: i64, q: i64) -> PLLifting {
        PLLifting::new(vec![(rat(0), frac(p, q)), (rat(1), frac(p, q) + rat(1))]).unwrap()
    }

    fn tent_bump() -> PLLifting {
        // degree 0, peak 1 at x = 1/2
        PLLifting::new(vec![(rat(0), rat(0)), (frac(1, 2), rat(1)), (rat(1), rat(0))]).unwrap()
    }

    #[test]
    fn eval_cases() {
        let f = doubling();
        assert_eq!(f.eval(&frac(3, 4)), frac(3, 2));
        let r = rotation(1, 3);
        assert_eq!(r.eval(&frac(5, 6)), frac(7, 6));
        let t = tent_bump();
        assert_eq!(t.eval(&frac(1, 2)), rat(1));
        assert_eq!(t.eval(&frac(5, 2)), rat(1));
    }

    #[test]
    fn degree_cases() {
        assert_eq!(doubling().degree(), 2);
        assert_eq!(rotation(1, 3).degree(), 1);
        let c = PLLifting::new(vec![(rat(0), frac(1, 2)), (rat(1), frac(1, 2))]).unwrap();
        assert_eq!(c.degree(), 0);
        assert!(PLLifting::new(vec![(rat(0), rat(0)), (rat(1), frac(1, 2))]).is_err());
    }

    #[test]
    fn compose_cases() {
        let b = Budget::default();
        let d = doubling();
        let d2 = d.compose(&d, &b).unwrap();
        assert_eq!(d2.degree(), 4);
        assert_eq!(d2.eval(&frac(1, 4)), rat(1));
        let r = rotation(1, 3);
        let r2 = r.compose(&r, &b).unwrap();
        assert_eq!(r2.eval(&rat(0)), frac(2, 3));
        let id = PLLifting::new(vec![(rat(0), rat(0)), (rat(1), rat(1))]).unwrap();
        assert_eq!(d.compose(&id, &b).unwrap(), d);
        // eval coherence through a kinked composition
        let t = tent_bump();
        let td = t.compose(&d, &b).unwrap();
        for x in [frac(1, 8), frac(3, 8), frac(17, 16), frac(-3, 16)] {
            assert_eq!(td.eval(&x), t.eval(&d.eval(&x)));
        }
    }

    #[test]
    fn image_interval_cases() {
        let d = doubling();
        assert_eq!(d.image_interval(&rat(0), &frac(1, 2)), (rat(0), rat(1)));
        let t = tent_bump();
        assert_eq!(t.image_interval(&rat(0), &rat(1)), (rat(0), rat(1)));
        let r = rotation(1, 3);
        assert_eq!(
            r.image_interval(&rat(0), &frac(1, 3)),
            (frac(1, 3), frac(2, 3))
        );
    }

    #[test]
    fn preimage_cases() {
        let d = CircleMapPL::new(doubling());
        let a = ArcSet::from_arc(
            Arc::new(CirclePoint::new(rat(0)), frac(1, 2)).unwrap(),
        );
        let pre = d.preimage_arcset(&a);
        assert_eq!(pre.measure(), frac(1, 2));
        assert!(pre.contains(&CirclePoint::new(frac(1, 8))));
        assert!(pre.contains(&CirclePoint::new(frac(5, 8))));
        assert!(!pre.contains(&CirclePoint::new(frac(3, 8))));

        let r = CircleMapPL::new(rotation(1, 3));
        let a = ArcSet::from_arc(Arc::new(CirclePoint::new(rat(0)), frac(1, 4)).unwrap());
        let pre = r.preimage_arcset(&a);
        assert_eq!(
            pre,
            ArcSet::from_arc(Arc::new(CirclePoint::new(frac(2, 3)), frac(1, 4)).unwrap())
        );

        assert!(d.preimage_arcset(&ArcSet::full()).is_full());
    }

    #[test]
    fn extensibility_cases() {
        let b = Budget::default();
        // doubling: |F([0,1])| = 2 < 3, |F^2([0,1])| = 4 >= 3
        match is_extensible(&doubling(), 2, &b).unwrap() {
            Extensibility::Witness { n, .. } => assert_eq!(n, 2),
            v => panic!("expected witness, got {v:?}"),
        }
        match is_extensible(&rotation(1, 3), 6, &b).unwrap() {
            Extensibility::NotExtensibleUpTo(6) => {}
            v => panic!("expected not-extensible, got {v:?}"),
        }
        // degree-0 bump of height 3/2: threshold is 1
        let tall = PLLifting::new(vec![
            (rat(0), rat(0)),
            (frac(1, 2), frac(3, 2)),
            (rat(1), rat(0)),
        ])
        .unwrap();
        match is_extensible(&tall, 1, &b).unwrap() {
            Extensibility::Witness { n: 1, .. } => {}
            v => panic!("expected witness at n=1, got {v:?}"),
        }
    }

    #[test]
    fn horseshoe_doubling() {
        let b = Budget::default();
        let f = CircleMapPL::new(doubling());
        let hs = find_horseshoe(&f, 2, &b).unwrap().expect("horseshoe");
        assert_eq!(hs.n, 1);
        hs.verify(&f, &b).unwrap();
    }

    #[test]
    fn horseshoe_absent_for_rotation() {
        let b = Budget::default();
        let f = CircleMapPL::new(rotation(1, 3));
        assert!(find_horseshoe(&f, 3, &b).unwrap().is_none());
    }

    #[test]
    fn horseshoe_deg0_bump() {
        let b = Budget::default();
        let tall = PLLifting::new(vec![
            (rat(0), rat(0)),
            (frac(1, 2), frac(3, 2)),
            (rat(1), rat(0)),
        ])
        .unwrap();
        let f = CircleMapPL::new(tall);
        let hs = find_horseshoe(&f, 1, &b).unwrap().expect("horseshoe");
        assert_eq!(hs.n, 1);
        hs.verify(&f, &b).unwrap();
    }
}
