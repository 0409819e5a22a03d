//! Trapezoidal fuzzy numbers and intuitionistic fuzzy numbers built from them.
//!
//! Every supported shape (IF value, interval-valued IF number, triangle,
//! trapezoid) is stored in one normal form: a pair of trapezoids on the
//! universe `[0,1]`. The [`IfnKind`] tag records how a value was written and
//! never changes how it is evaluated, cut, scored or compared.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::scalar::{in_unit_interval, ratio, to_exact_string, Rational};

/// Trapezoid `(q1, q2, q3, q4)`: left foot, left shoulder, right shoulder, right foot.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TrapFn {
    knots: [Rational; 4],
}

impl TrapFn {
    pub fn new(knots: [Rational; 4]) -> Result<Self, Error> {
        Self::named(knots, "trapezoid")
    }

    fn named(knots: [Rational; 4], component: &'static str) -> Result<Self, Error> {
        let sorted = knots.windows(2).all(|w| w[0] <= w[1]);
        if !sorted || !knots.iter().all(in_unit_interval) {
            return Err(Error::KnotOrder { component, knots: join(&knots) });
        }
        Ok(TrapFn { knots })
    }

    pub fn point(v: Rational) -> Result<Self, Error> {
        Self::new([v.clone(), v.clone(), v.clone(), v])
    }

    pub fn knots(&self) -> &[Rational; 4] {
        &self.knots
    }

    pub fn is_point(&self) -> bool {
        self.knots[0] == self.knots[3]
    }

    /// Both legs vertical: a crisp interval `[q1, q4]`.
    pub fn is_flat(&self) -> bool {
        self.knots[0] == self.knots[1] && self.knots[2] == self.knots[3]
    }

    pub fn is_triangular(&self) -> bool {
        self.knots[1] == self.knots[2]
    }

    pub fn left_vertical(&self) -> bool {
        self.knots[0] == self.knots[1]
    }

    pub fn right_vertical(&self) -> bool {
        self.knots[2] == self.knots[3]
    }

    /// The piecewise-linear hat: 1 on `[q2,q3]`, 0 outside `[q1,q4]`, linear on the legs.
    pub fn eval(&self, x: &Rational) -> Rational {
        let [q1, q2, q3, q4] = &self.knots;
        if x < q1 || x > q4 {
            Rational::zero()
        } else if x >= q2 && x <= q3 {
            Rational::one()
        } else if x < q2 {
            (x - q1) / (q2 - q1)
        } else {
            (q4 - x) / (q4 - q3)
        }
    }

    /// Value of the affine piece covering the open interval `(lo, hi)`,
    /// extended to `at`. The interval must not contain a knot.
    fn piece_value(&self, lo: &Rational, hi: &Rational, at: &Rational) -> Rational {
        let mid = (lo + hi) / Rational::from_integer(2.into());
        let [q1, q2, q3, q4] = &self.knots;
        if mid < *q1 || mid > *q4 {
            Rational::zero()
        } else if mid >= *q2 && mid <= *q3 {
            Rational::one()
        } else if mid < *q2 {
            (at - q1) / (q2 - q1)
        } else {
            (q4 - at) / (q4 - q3)
        }
    }
}

impl fmt::Display for TrapFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.knots))
    }
}

fn join(knots: &[Rational]) -> String {
    knots.iter().map(to_exact_string).collect::<Vec<_>>().join(",")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IfnKind {
    IfValue,
    Ivif,
    Triangular,
    Trapezoidal,
}

impl IfnKind {
    pub fn name(self) -> &'static str {
        match self {
            IfnKind::IfValue => "if-value",
            IfnKind::Ivif => "ivif",
            IfnKind::Triangular => "triangular",
            IfnKind::Trapezoidal => "trapezoidal",
        }
    }

    /// Most specific kind consistent with the knots.
    pub fn infer(mu: &TrapFn, nu: &TrapFn) -> IfnKind {
        if mu.is_point() && nu.is_point() {
            IfnKind::IfValue
        } else if mu.is_flat() && nu.is_flat() {
            IfnKind::Ivif
        } else if mu.is_triangular() && nu.is_triangular() {
            IfnKind::Triangular
        } else {
            IfnKind::Trapezoidal
        }
    }

    fn fits(self, mu: &TrapFn, nu: &TrapFn) -> bool {
        match self {
            IfnKind::IfValue => mu.is_point() && nu.is_point(),
            IfnKind::Ivif => mu.is_flat() && nu.is_flat(),
            IfnKind::Triangular => mu.is_triangular() && nu.is_triangular(),
            IfnKind::Trapezoidal => true,
        }
    }
}

/// Which arrangement of supports satisfies the leg condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LegBranch {
    /// `e >= b2` and `f1 >= c`: nonmembership sits to the right.
    NuRight,
    /// `f2 <= a` and `g <= b1`: nonmembership sits to the left.
    NuLeft,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Validation {
    #[default]
    Strict,
    /// Leg-condition and pointwise failures become warnings; knot order is
    /// still enforced.
    Lenient,
}

/// An intuitionistic fuzzy number: trapezoidal membership and nonmembership.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ifn {
    mu: TrapFn,
    nu: TrapFn,
    kind: IfnKind,
}

impl Ifn {
    pub fn trapezoidal(mu: [Rational; 4], nu: [Rational; 4]) -> Result<Ifn, Error> {
        let mu = TrapFn::named(mu, "membership")?;
        let nu = TrapFn::named(nu, "nonmembership")?;
        let kind = IfnKind::infer(&mu, &nu);
        Self::checked(mu, nu, kind)
    }

    pub fn if_value(m: Rational, n: Rational) -> Result<Ifn, Error> {
        let mu = TrapFn::named([m.clone(), m.clone(), m.clone(), m], "membership")?;
        let nu = TrapFn::named([n.clone(), n.clone(), n.clone(), n], "nonmembership")?;
        Self::checked(mu, nu, IfnKind::IfValue)
    }

    pub fn ivif(mu: [Rational; 2], nu: [Rational; 2]) -> Result<Ifn, Error> {
        let [a, b] = mu;
        let [c, d] = nu;
        let mu = TrapFn::named([a.clone(), a, b.clone(), b], "membership")?;
        let nu = TrapFn::named([c.clone(), c, d.clone(), d], "nonmembership")?;
        Self::checked(mu, nu, IfnKind::Ivif)
    }

    pub fn triangular(mu: [Rational; 3], nu: [Rational; 3]) -> Result<Ifn, Error> {
        let [a, b, c] = mu;
        let [e, f, g] = nu;
        let mu = TrapFn::named([a, b.clone(), b, c], "membership")?;
        let nu = TrapFn::named([e, f.clone(), f, g], "nonmembership")?;
        Self::checked(mu, nu, IfnKind::Triangular)
    }

    /// Builds with an explicit kind and policy. Under [`Validation::Lenient`]
    /// structural failures are returned alongside the value.
    pub fn with_policy(
        mu: TrapFn,
        nu: TrapFn,
        kind: Option<IfnKind>,
        policy: Validation,
    ) -> Result<(Ifn, Vec<Error>), Error> {
        let kind = kind.unwrap_or_else(|| IfnKind::infer(&mu, &nu));
        if !kind.fits(&mu, &nu) {
            return Err(Error::KnotOrder {
                component: "kind",
                knots: format!("{} does not fit mu={mu} nu={nu}", kind.name()),
            });
        }
        let mut problems = structural_problems(&mu, &nu, policy == Validation::Strict);
        if policy == Validation::Strict && !problems.is_empty() {
            return Err(problems.swap_remove(0));
        }
        Ok((Ifn { mu, nu, kind }, problems))
    }

    fn checked(mu: TrapFn, nu: TrapFn, kind: IfnKind) -> Result<Ifn, Error> {
        Self::with_policy(mu, nu, Some(kind), Validation::Strict).map(|(ifn, _)| ifn)
    }

    pub fn mu(&self) -> &TrapFn {
        &self.mu
    }

    pub fn nu(&self) -> &TrapFn {
        &self.nu
    }

    pub fn kind(&self) -> IfnKind {
        self.kind
    }

    /// Same knots, regardless of kind tag.
    pub fn same_knots(&self, other: &Ifn) -> bool {
        self.mu == other.mu && self.nu == other.nu
    }

    pub fn leg_branches(&self) -> Vec<LegBranch> {
        leg_branches(&self.mu, &self.nu)
    }

    pub fn membership_at(&self, x: &Rational) -> Rational {
        self.mu.eval(x)
    }

    pub fn nonmembership_at(&self, x: &Rational) -> Rational {
        self.nu.eval(x)
    }

    pub fn hesitancy_at(&self, x: &Rational) -> Rational {
        Rational::one() - self.membership_at(x) - self.nonmembership_at(x)
    }

    /// Points where both components jump (a vertical leg or a point spike).
    /// Closed-hat evaluation can exceed 1 there for values whose cores touch.
    pub fn is_shared_jump(&self, x: &Rational) -> bool {
        jumps_at(&self.mu, x) && jumps_at(&self.nu, x)
    }
}

impl fmt::Display for Ifn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, {}>", self.mu, self.nu)
    }
}

fn jumps_at(t: &TrapFn, x: &Rational) -> bool {
    let [q1, _, _, q4] = t.knots();
    (t.left_vertical() && x == q1) || (t.right_vertical() && x == q4)
}

fn leg_branches(mu: &TrapFn, nu: &TrapFn) -> Vec<LegBranch> {
    let [a, b1, b2, c] = mu.knots();
    let [e, f1, f2, g] = nu.knots();
    let mut out = Vec::new();
    if e >= b2 && f1 >= c {
        out.push(LegBranch::NuRight);
    }
    if f2 <= a && g <= b1 {
        out.push(LegBranch::NuLeft);
    }
    out
}

/// Leg condition first, then pointwise consistency.
///
/// Pointwise consistency is checked on every open interval between
/// consecutive breakpoints (0, 1 and the eight knots), where both components
/// are affine, by testing the one-sided limits at its ends. Values at isolated
/// jump points are not constrained, except that two coincident point spikes
/// `<m, m>` must satisfy `m + m <= 1`.
fn structural_problems(mu: &TrapFn, nu: &TrapFn, first_only: bool) -> Vec<Error> {
    let mut out = Vec::new();
    if leg_branches(mu, nu).is_empty() {
        out.push(Error::LegCondition { mu: join(mu.knots()), nu: join(nu.knots()) });
        if first_only {
            return out;
        }
    }
    if let Some((x, sum)) = pointwise_violation(mu, nu) {
        out.push(Error::Pointwise { x: to_exact_string(&x), sum: to_exact_string(&sum) });
    }
    out
}

pub(crate) fn pointwise_violation(mu: &TrapFn, nu: &TrapFn) -> Option<(Rational, Rational)> {
    let one = Rational::one();
    if mu.is_point() && nu.is_point() && mu == nu {
        let m = &mu.knots()[0];
        let sum = m + m;
        return (sum > one).then(|| (m.clone(), sum));
    }
    let mut breaks: Vec<Rational> = vec![Rational::zero(), one.clone()];
    breaks.extend(mu.knots().iter().cloned());
    breaks.extend(nu.knots().iter().cloned());
    breaks.sort();
    breaks.dedup();
    for w in breaks.windows(2) {
        let (lo, hi) = (&w[0], &w[1]);
        for end in [lo, hi] {
            let sum = mu.piece_value(lo, hi, end) + nu.piece_value(lo, hi, end);
            if sum > one {
                return Some((end.clone(), sum));
            }
        }
    }
    None
}

/// Grid `0, 1/steps, ..., 1`.
pub fn unit_grid(steps: i64) -> Vec<Rational> {
    (0..=steps).map(|k| ratio(k, steps)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::parse_rational;

    fn r(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn k4(s: &str) -> [Rational; 4] {
        let v: Vec<Rational> = s.split_whitespace().map(r).collect();
        v.try_into().unwrap()
    }

    fn example_a() -> Ifn {
        Ifn::trapezoidal(k4("0.17 0.3 0.47 0.56"), k4("0.05 0.13 0.16 0.23")).unwrap()
    }

    #[test]
    fn cut_example_number_takes_left_branch() {
        let a = example_a();
        assert_eq!(a.kind(), IfnKind::Trapezoidal);
        assert_eq!(a.leg_branches(), vec![LegBranch::NuLeft]);
    }

    #[test]
    fn right_branch_cell() {
        let a = Ifn::trapezoidal(k4("0.2 0.2 0.3 0.3"), k4("0.4 0.6 0.7 0.8")).unwrap();
        assert_eq!(a.leg_branches(), vec![LegBranch::NuRight]);
    }

    #[test]
    fn interleaved_supports_fail_leg_condition() {
        let err = Ifn::trapezoidal(k4("0.1 0.3 0.5 0.7"), k4("0.2 0.4 0.6 0.8")).unwrap_err();
        assert!(matches!(err, Error::LegCondition { .. }), "{err}");
    }

    #[test]
    fn full_core_with_spike_at_the_edge_is_accepted() {
        // The spike at 1 touches the core only at a shared jump point.
        let a = Ifn::trapezoidal(k4("0 0 1 1"), k4("1 1 1 1")).unwrap();
        assert_eq!(a.leg_branches(), vec![LegBranch::NuRight]);
        assert!(a.is_shared_jump(&r("1")));
        assert_eq!(a.hesitancy_at(&r("1")), r("-1"));
    }

    #[test]
    fn overlapping_cores_fail_pointwise() {
        let (ifn, warnings) = Ifn::with_policy(
            TrapFn::new(k4("0 0 0.5 0.5")).unwrap(),
            TrapFn::new(k4("0.2 0.2 0.3 0.3")).unwrap(),
            None,
            Validation::Lenient,
        )
        .unwrap();
        assert_eq!(ifn.kind(), IfnKind::Ivif);
        assert!(warnings.iter().any(|w| matches!(w, Error::LegCondition { .. })));
        assert!(warnings.iter().any(|w| matches!(w, Error::Pointwise { .. })));
    }

    #[test]
    fn knot_order_and_range_are_enforced() {
        assert!(matches!(TrapFn::new(k4("0.3 0.2 0.4 0.5")), Err(Error::KnotOrder { .. })));
        assert!(matches!(TrapFn::new(k4("0 0 1 1.5")), Err(Error::KnotOrder { .. })));
        assert!(matches!(
            Ifn::if_value(r("-0.1"), r("0.2")),
            Err(Error::KnotOrder { component: "membership", .. })
        ));
    }

    #[test]
    fn embeddings_reproduce_their_inputs() {
        let v = Ifn::if_value(r("0.2"), r("0.4")).unwrap();
        assert_eq!(v.mu().knots(), &k4("0.2 0.2 0.2 0.2"));
        assert_eq!(v.nu().knots(), &k4("0.4 0.4 0.4 0.4"));
        assert_eq!(v.kind(), IfnKind::IfValue);

        let iv = Ifn::ivif([r("0"), r("0.2")], [r("0.2"), r("0.3")]).unwrap();
        assert_eq!(iv.mu().knots(), &k4("0 0 0.2 0.2"));
        assert_eq!(iv.nu().knots(), &k4("0.2 0.2 0.3 0.3"));
        assert_eq!(iv.kind(), IfnKind::Ivif);

        let t = Ifn::triangular([r("0.2"), r("0.3"), r("0.5")], [r("0.35"), r("0.55"), r("0.65")]).unwrap();
        assert_eq!(t.mu().knots(), &k4("0.2 0.3 0.3 0.5"));
        assert_eq!(t.nu().knots(), &k4("0.35 0.55 0.55 0.65"));
        assert_eq!(t.leg_branches(), vec![LegBranch::NuRight]);
    }

    #[test]
    fn trivial_embeddings() {
        assert!(Ifn::if_value(r("0"), r("1")).is_ok());
        assert!(Ifn::if_value(r("1"), r("0")).is_ok());
        assert!(Ifn::if_value(r("0.4"), r("0.4")).is_ok());
        assert!(matches!(Ifn::if_value(r("0.6"), r("0.6")), Err(Error::Pointwise { .. })));
        assert!(Ifn::ivif([r("0.2"), r("0.4")], [r("0.4"), r("0.6")]).is_ok());
        assert!(Ifn::ivif([r("0.5"), r("0.5")], [r("0.5"), r("0.5")]).is_ok());
        let m = Ifn::triangular([r("0"), r("0.2"), r("0.4")], [r("0.4"), r("0.45"), r("0.5")]).unwrap();
        assert_eq!(m.leg_branches(), vec![LegBranch::NuRight]);
        assert!(Ifn::triangular([r("0.3"), r("0.3"), r("0.3")], [r("0.3"), r("0.3"), r("0.3")]).is_ok());
    }

    #[test]
    fn membership_evaluation() {
        let a = example_a();
        assert_eq!(a.membership_at(&r("0.3")), r("1"));
        assert_eq!(a.membership_at(&r("0.17")), r("0"));
        assert_eq!(a.nonmembership_at(&r("0.17")), ratio(6, 7));
        assert_eq!(a.hesitancy_at(&r("0.17")), ratio(1, 7));
        assert_eq!(a.membership_at(&r("0.6")), r("0"));
    }

    #[test]
    fn kind_inference() {
        let t = |m: &str, n: &str| IfnKind::infer(&TrapFn::new(k4(m)).unwrap(), &TrapFn::new(k4(n)).unwrap());
        assert_eq!(t("0.2 0.2 0.2 0.2", "0.4 0.4 0.4 0.4"), IfnKind::IfValue);
        assert_eq!(t("0.2 0.2 0.4 0.4", "0.6 0.6 0.6 0.6"), IfnKind::Ivif);
        assert_eq!(t("0.1 0.2 0.2 0.4", "0.5 0.6 0.6 0.7"), IfnKind::Triangular);
        assert_eq!(t("0.1 0.2 0.3 0.4", "0.5 0.6 0.6 0.7"), IfnKind::Trapezoidal);
    }

    #[test]
    fn mismatched_kind_tag_is_rejected() {
        let mu = TrapFn::new(k4("0.1 0.2 0.3 0.4")).unwrap();
        let nu = TrapFn::new(k4("0.5 0.6 0.7 0.8")).unwrap();
        assert!(Ifn::with_policy(mu, nu, Some(IfnKind::IfValue), Validation::Strict).is_err());
    }
}
