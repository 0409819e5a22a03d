//! α-cuts, α–β cut rectangles, strong cuts and level reconstruction.
//!
//! Both components are cut with the same shoulder-shrinking affine form
//! `[q1 + (q2 − q1)·t, q4 − (q4 − q3)·t]`, which for normal trapezoids is the
//! superlevel set `{x : f(x) >= t}`.

use num_traits::{One, Zero};

use crate::dense::DenseSequence;
use crate::error::Error;
use crate::number::{Ifn, TrapFn};
use crate::scalar::{to_exact_string, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
    pub open_lo: bool,
    pub open_hi: bool,
}

impl Interval {
    pub fn closed(lo: Rational, hi: Rational) -> Self {
        Interval { lo, hi, open_lo: false, open_hi: false }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let above = if self.open_lo { *x > self.lo } else { *x >= self.lo };
        let below = if self.open_hi { *x < self.hi } else { *x <= self.hi };
        above && below
    }

    /// True when no open neighbourhood fits inside.
    pub fn empty_interior(&self) -> bool {
        self.lo >= self.hi
    }

    /// Set inclusion, honouring openness at shared endpoints.
    pub fn is_subset_of(&self, other: &Interval) -> bool {
        let lo_ok = self.lo > other.lo || (self.lo == other.lo && (self.open_lo || !other.open_lo));
        let hi_ok = self.hi < other.hi || (self.hi == other.hi && (self.open_hi || !other.open_hi));
        lo_ok && hi_ok
    }
}

/// Cut of an IFN at levels `(alpha, beta)`: `([a,b], [c,d])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutRect {
    pub alpha: Rational,
    pub beta: Rational,
    pub mu: Interval,
    pub nu: Interval,
}

impl CutRect {
    /// `(a, b, c, d)`.
    pub fn corners(&self) -> [&Rational; 4] {
        [&self.mu.lo, &self.mu.hi, &self.nu.lo, &self.nu.hi]
    }
}

fn level_in(level: &Rational, what: &'static str, strong: bool) -> Result<(), Error> {
    let ok = if strong {
        *level >= Rational::zero() && *level < Rational::one()
    } else {
        *level > Rational::zero() && *level <= Rational::one()
    };
    if ok {
        Ok(())
    } else {
        let range = if strong { "[0,1)" } else { "(0,1]" };
        Err(Error::Domain { what, range, value: to_exact_string(level) })
    }
}

fn affine_cut(f: &TrapFn, t: &Rational) -> (Rational, Rational) {
    let [q1, q2, q3, q4] = f.knots();
    (q1 + (q2 - q1) * t, q4 - (q4 - q3) * t)
}

pub fn alpha_cut(f: &TrapFn, alpha: &Rational) -> Result<Interval, Error> {
    level_in(alpha, "alpha", false)?;
    let (lo, hi) = affine_cut(f, alpha);
    Ok(Interval::closed(lo, hi))
}

pub fn cut(ifn: &Ifn, alpha: &Rational, beta: &Rational) -> Result<CutRect, Error> {
    level_in(beta, "beta", false)?;
    Ok(CutRect {
        alpha: alpha.clone(),
        beta: beta.clone(),
        mu: alpha_cut(ifn.mu(), alpha)?,
        nu: alpha_cut(ifn.nu(), beta)?,
    })
}

/// `{x : f(x) > t}` for `t` in `[0,1)`. A sloped leg leaves its side open;
/// a vertical leg jumps straight to 1 and keeps it closed.
pub fn strong_alpha_cut(f: &TrapFn, t: &Rational) -> Result<Interval, Error> {
    level_in(t, "alpha", true)?;
    let (lo, hi) = affine_cut(f, t);
    Ok(Interval { lo, hi, open_lo: !f.left_vertical(), open_hi: !f.right_vertical() })
}

pub fn strong_cut(ifn: &Ifn, alpha: &Rational, beta: &Rational) -> Result<CutRect, Error> {
    level_in(beta, "beta", true)?;
    Ok(CutRect {
        alpha: alpha.clone(),
        beta: beta.clone(),
        mu: strong_alpha_cut(ifn.mu(), alpha)?,
        nu: strong_alpha_cut(ifn.nu(), beta)?,
    })
}

/// Degrees attained by one component over `[0,1]`: `[lo, hi]`, and whether
/// only the two ends are attained (vertical legs).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttainedRange {
    pub lo: Rational,
    pub hi: Rational,
    pub discrete: bool,
}

fn attained(f: &TrapFn) -> AttainedRange {
    let [q1, q2, q3, q4] = f.knots();
    let reaches_zero = *q1 > Rational::zero() || q1 < q2 || *q4 < Rational::one() || q3 < q4;
    AttainedRange {
        lo: if reaches_zero { Rational::zero() } else { Rational::one() },
        hi: Rational::one(),
        discrete: f.is_flat(),
    }
}

pub fn level_range(ifn: &Ifn) -> (AttainedRange, AttainedRange) {
    (attained(ifn.mu()), attained(ifn.nu()))
}

/// Largest level among `levels` whose cut of `f` contains `x`, or 0.
pub fn sup_level<'a>(f: &TrapFn, levels: impl IntoIterator<Item = &'a Rational>, x: &Rational) -> Rational {
    levels
        .into_iter()
        .filter(|t| {
            let (lo, hi) = affine_cut(f, t);
            lo <= *x && *x <= hi
        })
        .max()
        .cloned()
        .unwrap_or_else(Rational::zero)
}

/// The special-set union over the first `n` level pairs, evaluated at `x`:
/// `(max α_i with x in the α_i-cut of μ, max β_i with x in the β_i-cut of ν)`.
pub fn reconstruct(ifn: &Ifn, seq: &DenseSequence, n: u64, x: &Rational) -> Result<(Rational, Rational), Error> {
    let mut alphas = Vec::with_capacity(n as usize);
    let mut betas = Vec::with_capacity(n as usize);
    for i in 1..=n {
        let (a, b) = seq.pair(i)?;
        alphas.push(a);
        betas.push(b);
    }
    Ok((sup_level(ifn.mu(), &alphas, x), sup_level(ifn.nu(), &betas, x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::unit_grid;
    use crate::scalar::{parse_rational, ratio};

    fn r(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn trap(k: [&str; 4]) -> TrapFn {
        TrapFn::new(k.map(r)).unwrap()
    }

    fn example_a() -> Ifn {
        Ifn::trapezoidal(["0.17", "0.3", "0.47", "0.56"].map(r), ["0.05", "0.13", "0.16", "0.23"].map(r)).unwrap()
    }

    #[test]
    fn alpha_cuts() {
        let c = alpha_cut(&trap(["0.17", "0.3", "0.47", "0.56"]), &r("1")).unwrap();
        assert_eq!((c.lo, c.hi), (r("0.3"), r("0.47")));
        let c = alpha_cut(&trap(["0.2", "0.2", "0.4", "0.4"]), &ratio(1, 7)).unwrap();
        assert_eq!((c.lo, c.hi), (r("0.2"), r("0.4")));
        let c = alpha_cut(&trap(["0.2", "0.3", "0.3", "0.5"]), &r("0.5")).unwrap();
        assert_eq!((c.lo, c.hi), (r("0.25"), r("0.4")));
        for bad in ["0", "-0.5", "1.5"] {
            assert!(matches!(alpha_cut(&trap(["0", "0", "1", "1"]), &r(bad)), Err(Error::Domain { .. })));
        }
    }

    #[test]
    fn rectangles() {
        let c = cut(&example_a(), &r("1"), &r("1")).unwrap();
        assert_eq!(c.corners(), [&r("0.3"), &r("0.47"), &r("0.13"), &r("0.16")]);
        let b = Ifn::trapezoidal(["0.35", "0.35", "0.4", "0.6"].map(r), ["0.1", "0.2", "0.3", "0.35"].map(r)).unwrap();
        let c = cut(&b, &r("1"), &r("1")).unwrap();
        assert_eq!(c.corners(), [&r("0.35"), &r("0.4"), &r("0.2"), &r("0.3")]);
        let p = Ifn::if_value(r("0.2"), r("0.4")).unwrap();
        let c = cut(&p, &ratio(2, 3), &ratio(1, 5)).unwrap();
        assert_eq!(c.corners(), [&r("0.2"), &r("0.2"), &r("0.4"), &r("0.4")]);
        assert!(cut(&p, &r("1"), &r("0")).is_err());
    }

    #[test]
    fn strong_cuts() {
        let s = strong_cut(&example_a(), &r("0"), &r("0")).unwrap();
        assert_eq!(s.corners(), [&r("0.17"), &r("0.56"), &r("0.05"), &r("0.23")]);
        assert!(s.mu.open_lo && s.mu.open_hi && s.nu.open_lo && s.nu.open_hi);
        assert!(!s.mu.contains(&r("0.17")) && s.mu.contains(&r("0.18")));

        let p = strong_cut(&Ifn::if_value(r("0.2"), r("0.4")).unwrap(), &r("0"), &r("0")).unwrap();
        assert!(p.mu.empty_interior() && p.nu.empty_interior());
        assert!(p.mu.contains(&r("0.2")));
        assert!(strong_cut(&example_a(), &r("1"), &r("0")).is_err());
    }

    #[test]
    fn strong_cut_inside_plain_cut() {
        let a = example_a();
        for t in unit_grid(16).into_iter().skip(1).take(15) {
            let s = strong_cut(&a, &t, &t).unwrap();
            let c = cut(&a, &t, &t).unwrap();
            assert!(s.mu.is_subset_of(&c.mu) && s.nu.is_subset_of(&c.nu));
            for x in unit_grid(100) {
                assert_eq!(s.mu.contains(&x), a.membership_at(&x) > t, "x={x} t={t}");
            }
        }
    }

    #[test]
    fn nested_cuts() {
        let a = example_a();
        let grid = unit_grid(32);
        for w in grid[1..].windows(2) {
            let (lo, hi) = (cut(&a, &w[1], &w[1]).unwrap(), cut(&a, &w[0], &w[0]).unwrap());
            assert!(lo.mu.is_subset_of(&hi.mu) && lo.nu.is_subset_of(&hi.nu));
        }
    }

    #[test]
    fn level_ranges() {
        let (m, n) = level_range(&example_a());
        assert_eq!((m.lo, m.hi, m.discrete), (r("0"), r("1"), false));
        assert!(!n.discrete);
        let (m, _) = level_range(&Ifn::if_value(r("0.2"), r("0.4")).unwrap());
        assert_eq!((m.lo, m.hi, m.discrete), (r("0"), r("1"), true));
        let (m, _) = level_range(&Ifn::ivif([r("0"), r("1")], [r("0"), r("0")]).unwrap());
        assert_eq!(m.lo, r("1"));
    }

    #[test]
    fn reconstruction() {
        let a = example_a();
        let seq = DenseSequence::default();
        assert_eq!(reconstruct(&a, &seq, 1, &r("0.3")).unwrap().0, r("1"));
        // mu(x) = 2/3 on the left leg at x = 0.17 + 0.13 * 2/3
        let x = r("0.17") + r("0.13") * ratio(2, 3);
        assert_eq!(a.membership_at(&x), ratio(2, 3));
        assert_eq!(reconstruct(&a, &seq, 3, &x).unwrap().0, ratio(1, 2));
        assert_eq!(reconstruct(&a, &seq, 4, &x).unwrap().0, ratio(2, 3));
        let short = DenseSequence::paired(vec![(r("1"), r("1"))]).unwrap();
        assert!(matches!(reconstruct(&a, &short, 2, &x), Err(Error::Index { .. })));
    }
}
