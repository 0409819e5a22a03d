//! Sampling membership and nonmembership for plotting.

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::number::{Ifn, TrapFn};
use crate::scalar::Rational;

const LABELS: [&str; 4] = ["q1", "q2", "q3", "q4"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveRow {
    pub x: Rational,
    pub mu: Rational,
    pub nu: Rational,
    /// Knots sitting at `x`, as `mu.q1` .. `nu.q4`.
    pub knots: Vec<String>,
}

/// Vertices of one component: `(q1,0) (q2,1) (q3,1) (q4,0)`.
pub fn polyline(f: &TrapFn) -> Vec<(Rational, Rational)> {
    let [q1, q2, q3, q4] = f.knots().clone();
    vec![(q1, Rational::zero()), (q2, Rational::one()), (q3, Rational::one()), (q4, Rational::zero())]
}

/// A component collapsed to one point, drawn as a zero-width trapezoid.
pub fn is_spike(f: &TrapFn) -> bool {
    f.is_point()
}

/// Rows at every multiple of `step` in `[0,1]` and at every knot, sorted by
/// `x` without duplicates. Values use closed-hat evaluation.
pub fn curve_rows(ifn: &Ifn, step: &Rational) -> Result<Vec<CurveRow>, Error> {
    if !step.is_positive() || *step > Rational::one() {
        return Err(Error::Domain { what: "curve step", range: "(0,1]", value: crate::scalar::to_exact_string(step) });
    }
    let mut xs = Vec::new();
    let mut x = Rational::zero();
    while x <= Rational::one() {
        xs.push(x.clone());
        x += step;
    }
    for f in [ifn.mu(), ifn.nu()] {
        xs.extend(f.knots().iter().cloned());
    }
    xs.sort();
    xs.dedup();
    Ok(xs
        .into_iter()
        .map(|x| {
            let mut knots = Vec::new();
            for (name, f) in [("mu", ifn.mu()), ("nu", ifn.nu())] {
                for (label, q) in LABELS.iter().zip(f.knots()) {
                    if *q == x {
                        knots.push(format!("{name}.{label}"));
                    }
                }
            }
            CurveRow { mu: ifn.membership_at(&x), nu: ifn.nonmembership_at(&x), x, knots }
        })
        .collect())
}
