//! Earlier single-number ranking scores, each of which ties some pair of
//! distinct inputs. Kept as a bench against the score stream.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::number::Ifn;
use crate::scalar::{format_fixed, ratio, to_exact_string, to_f64, Rational};
use crate::scores::triangular_scores;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LegacyMethod {
    XuS,
    XuH,
    YuS,
    YeM,
    /// `δ` in `[0,1]`.
    LakshmanaGeethaLG(Rational),
    ChenTanS,
    HongChoiH,
    LiuS,
    /// `(α, β)` with `α + β <= 1`.
    ZhouWuS(Rational, Rational),
    LinS,
    WangS,
    LLinS,
    YeSY,
    ZhangYuKminus,
    ZhangYuKplus,
    TriangularT,
    TriangularNT,
    TriangularNTc,
}

enum Shape {
    Interval,
    Point,
    Triangle,
}

impl LegacyMethod {
    pub const NAMES: [&'static str; 18] = [
        "xu-s", "xu-h", "yu-s", "ye-m", "lg", "chen-tan", "hong-choi", "liu", "zhou-wu", "lin", "wang", "l-lin",
        "ye-sy", "zhang-yu-minus", "zhang-yu-plus", "tri-t", "tri-nt", "tri-ntc",
    ];

    /// Every method with default parameters (`δ = 1/2`, `α = β = 1/2`).
    pub fn all() -> Vec<LegacyMethod> {
        Self::NAMES.iter().map(|n| Self::from_name(n).expect("known name")).collect()
    }

    /// Parses a method name; `lg:<δ>` and `zhou-wu:<α>,<β>` set parameters.
    pub fn from_name(text: &str) -> Result<LegacyMethod, Error> {
        let (name, params) = text.split_once(':').unwrap_or((text, ""));
        let half = ratio(1, 2);
        let m = match name {
            "xu-s" => LegacyMethod::XuS,
            "xu-h" => LegacyMethod::XuH,
            "yu-s" => LegacyMethod::YuS,
            "ye-m" => LegacyMethod::YeM,
            "lg" if params.is_empty() => LegacyMethod::LakshmanaGeethaLG(half),
            "lg" => LegacyMethod::LakshmanaGeethaLG(crate::scalar::parse_rational(params)?),
            "chen-tan" => LegacyMethod::ChenTanS,
            "hong-choi" => LegacyMethod::HongChoiH,
            "liu" => LegacyMethod::LiuS,
            "zhou-wu" if params.is_empty() => LegacyMethod::ZhouWuS(half.clone(), half),
            "zhou-wu" => {
                let (a, b) = params
                    .split_once(',')
                    .ok_or_else(|| Error::Parse(format!("zhou-wu parameters must be \"alpha,beta\", got {params:?}")))?;
                LegacyMethod::ZhouWuS(crate::scalar::parse_rational(a)?, crate::scalar::parse_rational(b)?)
            }
            "lin" => LegacyMethod::LinS,
            "wang" => LegacyMethod::WangS,
            "l-lin" => LegacyMethod::LLinS,
            "ye-sy" => LegacyMethod::YeSY,
            "zhang-yu-minus" => LegacyMethod::ZhangYuKminus,
            "zhang-yu-plus" => LegacyMethod::ZhangYuKplus,
            "tri-t" => LegacyMethod::TriangularT,
            "tri-nt" => LegacyMethod::TriangularNT,
            "tri-ntc" => LegacyMethod::TriangularNTc,
            _ => return Err(Error::Parse(format!("unknown score method {text:?}"))),
        };
        m.check_params()?;
        Ok(m)
    }

    pub fn name(&self) -> String {
        match self {
            LegacyMethod::LakshmanaGeethaLG(d) => format!("lg:{}", to_exact_string(d)),
            LegacyMethod::ZhouWuS(a, b) => format!("zhou-wu:{},{}", to_exact_string(a), to_exact_string(b)),
            other => {
                let i = LegacyMethod::all_tags().iter().position(|t| std::mem::discriminant(t) == std::mem::discriminant(other));
                Self::NAMES[i.expect("tag listed")].to_string()
            }
        }
    }

    fn all_tags() -> [LegacyMethod; 18] {
        let z = Rational::zero;
        [
            LegacyMethod::XuS,
            LegacyMethod::XuH,
            LegacyMethod::YuS,
            LegacyMethod::YeM,
            LegacyMethod::LakshmanaGeethaLG(z()),
            LegacyMethod::ChenTanS,
            LegacyMethod::HongChoiH,
            LegacyMethod::LiuS,
            LegacyMethod::ZhouWuS(z(), z()),
            LegacyMethod::LinS,
            LegacyMethod::WangS,
            LegacyMethod::LLinS,
            LegacyMethod::YeSY,
            LegacyMethod::ZhangYuKminus,
            LegacyMethod::ZhangYuKplus,
            LegacyMethod::TriangularT,
            LegacyMethod::TriangularNT,
            LegacyMethod::TriangularNTc,
        ]
    }

    fn check_params(&self) -> Result<(), Error> {
        let unit = |v: &Rational, what| {
            if *v < Rational::zero() || *v > Rational::one() {
                Err(Error::Domain { what, range: "[0,1]", value: to_exact_string(v) })
            } else {
                Ok(())
            }
        };
        match self {
            LegacyMethod::LakshmanaGeethaLG(d) => unit(d, "delta"),
            LegacyMethod::ZhouWuS(a, b) => {
                unit(a, "alpha")?;
                unit(b, "beta")?;
                if a + b > Rational::one() {
                    return Err(Error::Domain { what: "alpha + beta", range: "[0,1]", value: to_exact_string(&(a + b)) });
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    fn shape(&self) -> Shape {
        use LegacyMethod::*;
        match self {
            XuS | XuH | YuS | YeM | LakshmanaGeethaLG(_) | ZhangYuKminus | ZhangYuKplus => Shape::Interval,
            TriangularT | TriangularNT | TriangularNTc => Shape::Triangle,
            _ => Shape::Point,
        }
    }

    /// Whether `ifn` has the shape this method reads.
    pub fn accepts(&self, ifn: &Ifn) -> bool {
        let (mu, nu) = (ifn.mu(), ifn.nu());
        match self.shape() {
            Shape::Interval => mu.is_flat() && nu.is_flat(),
            Shape::Point => mu.is_point() && nu.is_point(),
            Shape::Triangle => mu.is_triangular() && nu.is_triangular(),
        }
    }
}

/// A legacy score. Zhang–Yu distances involve a square root and are kept
/// exactly as their squares.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LegacyScore {
    Exact(Rational),
    SqrtOf(Rational),
}

impl LegacyScore {
    pub fn to_f64(&self) -> f64 {
        match self {
            LegacyScore::Exact(v) => to_f64(v),
            LegacyScore::SqrtOf(v) => to_f64(v).sqrt(),
        }
    }

    pub fn render(&self, places: usize) -> String {
        match self {
            LegacyScore::Exact(v) => format_fixed(v, places),
            LegacyScore::SqrtOf(v) => format!("sqrt({})", format_fixed(v, places)),
        }
    }
}

impl fmt::Display for LegacyScore {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LegacyScore::Exact(v) => write!(f, "{}", to_exact_string(v)),
            LegacyScore::SqrtOf(v) => write!(f, "sqrt({})", to_exact_string(v)),
        }
    }
}

/// Squared Zhang–Yu closeness to `A- = ([0,0],[1,1])` and `A+ = ([1,1],[0,0])`.
pub fn zhang_yu_squared(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> Result<(Rational, Rational), Error> {
    let norm = a * a + b * b + c * c + d * d;
    if norm.is_zero() {
        return Err(Error::DivisionByZero("Zhang-Yu closeness of ([0,0],[0,0])"));
    }
    let two = Rational::from_integer(2.into());
    let minus = (c + d) * (c + d) / (&two * &norm);
    let plus = (a + b) * (a + b) / (&two * &norm);
    Ok((minus, plus))
}

pub fn legacy_score(method: &LegacyMethod, ifn: &Ifn) -> Result<LegacyScore, Error> {
    method.check_params()?;
    if !method.accepts(ifn) {
        let expected = match method.shape() {
            Shape::Interval => "interval-valued",
            Shape::Point => "single-value",
            Shape::Triangle => "triangular",
        };
        return Err(Error::KindMismatch { method: method.name(), expected });
    }
    let one = Rational::one();
    let two = Rational::from_integer(2.into());
    let half = ratio(1, 2);
    let [a, _, _, b] = ifn.mu().knots();
    let [c, _, _, d] = ifn.nu().knots();
    // single-value methods read (mu, nu) = (a, c)
    let (m, n) = (a, c);
    let pi = &one - m - n;
    use LegacyMethod::*;
    let v = match method {
        XuS => (a + b - c - d) * &half,
        XuH => (a + b + c + d) * &half,
        YuS => (&two + a + b - c - d) * &half,
        YeM => a + b - &one + (c + d) * &half,
        LakshmanaGeethaLG(delta) => (a + b + delta * (&two - a - b - c - d)) * &half,
        ChenTanS => m - n,
        HongChoiH => m + n,
        LiuS => m + m * &pi,
        ZhouWuS(al, be) => m - n + (al - be) * &pi,
        LinS => &two * m + n - &one,
        WangS => m - n - &pi * &half,
        LLinS => m * &half + ratio(3, 2) * (m + n) - &one,
        YeSY => m * (&two - m - n) + &pi * &pi,
        ZhangYuKminus => return Ok(LegacyScore::SqrtOf(zhang_yu_squared(a, b, c, d)?.0)),
        ZhangYuKplus => return Ok(LegacyScore::SqrtOf(zhang_yu_squared(a, b, c, d)?.1)),
        TriangularT => triangular_scores(ifn)?.t,
        TriangularNT => triangular_scores(ifn)?.nt,
        TriangularNTc => triangular_scores(ifn)?.ntc,
    };
    Ok(LegacyScore::Exact(v))
}
