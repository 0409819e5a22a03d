//! Score values read off cut rectangles, and the older ranking scores kept
//! for comparison in [`legacy`].

pub mod legacy;

use num_traits::One;

use crate::cuts::{cut, CutRect};
use crate::dense::DenseSequence;
use crate::error::Error;
use crate::number::Ifn;
use crate::scalar::{ratio, Rational};

/// The four stream values at one level pair, `C_{4i-3} .. C_{4i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoreQuad {
    pub c1: Rational,
    pub c2: Rational,
    pub c3: Rational,
    pub c4: Rational,
}

impl ScoreQuad {
    pub fn from_corners(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> Self {
        let half = ratio(1, 2);
        let (ac, bd) = (a * c, b * d);
        ScoreQuad {
            c1: (a + b - c - d + &ac + &bd) * &half,
            c2: (a + b - c - d - &ac - &bd) * &half,
            c3: (a - b - c + d + &ac + &bd) * &half,
            c4: (a - b + c - d + &ac - &bd) * &half,
        }
    }

    /// Component `r` in `1..=4`.
    pub fn get(&self, r: usize) -> &Rational {
        match r {
            1 => &self.c1,
            2 => &self.c2,
            3 => &self.c3,
            4 => &self.c4,
            _ => panic!("quad component {r} out of 1..=4"),
        }
    }

    pub fn to_array(&self) -> [Rational; 4] {
        [self.c1.clone(), self.c2.clone(), self.c3.clone(), self.c4.clone()]
    }
}

pub fn score_quad(rect: &CutRect) -> ScoreQuad {
    let [a, b, c, d] = rect.corners();
    ScoreQuad::from_corners(a, b, c, d)
}

/// Quad at the `i`-th level pair of `seq`.
pub fn quad_at(ifn: &Ifn, seq: &DenseSequence, i: u64) -> Result<ScoreQuad, Error> {
    let (alpha, beta) = seq.pair(i)?;
    Ok(score_quad(&cut(ifn, &alpha, &beta)?))
}

/// `C_j`, `j >= 1`.
pub fn c_value(ifn: &Ifn, seq: &DenseSequence, j: u64) -> Result<Rational, Error> {
    if j == 0 {
        return Err(Error::Domain { what: "score index", range: ">= 1", value: "0".into() });
    }
    let i = j.div_ceil(4);
    let r = (j - 4 * (i - 1)) as usize;
    Ok(quad_at(ifn, seq, i)?.get(r).clone())
}

/// Membership, nonmembership, vague and imprecise scores of `([a,b],[c,d])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IvifScores {
    pub l: Rational,
    pub lg: Rational,
    pub p: Rational,
    pub ip: Rational,
}

pub fn ivif_scores(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> IvifScores {
    let half = ratio(1, 2);
    let (ac, bd) = (a * c, b * d);
    IvifScores {
        l: (a + b - c - d + &ac + &bd) * &half,
        lg: (-a - b + c + d + &ac + &bd) * &half,
        p: (a - b - c + d + &ac + &bd) * &half,
        ip: (-a + b - c + d - &ac + &bd) * &half,
    }
}

/// Scores of a triangular IFN `<(a,b,c),(e,f,g)>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangularScores {
    pub l: Rational,
    pub r: Rational,
    pub t: Rational,
    pub nl: Rational,
    pub nr: Rational,
    pub nt: Rational,
    pub ntc: Rational,
}

pub fn triangular_scores(ifn: &Ifn) -> Result<TriangularScores, Error> {
    if !(ifn.mu().is_triangular() && ifn.nu().is_triangular()) {
        return Err(Error::KindMismatch { method: "triangular score".into(), expected: "triangular" });
    }
    let one = Rational::one();
    let half = ratio(1, 2);
    let [a, b, _, c] = ifn.mu().knots();
    let [e, f, _, g] = ifn.nu().knots();
    // every denominator is at least 1 for ordered knots in [0,1]
    let l = (&one - a) / (&one + b - a);
    let r = c / (&one + c - b);
    let nl = e / (&one + e - f);
    let nr = (&one - g) / (&one + f - g);
    let t = (&one + &r - &l) * &half;
    let nt = (&one + &nl - &nr) * &half;
    let ntc = &one - &nt;
    Ok(TriangularScores { l, r, t, nl, nr, nt, ntc })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::unit_grid;
    use crate::scalar::{int, matches_published, parse_rational};

    fn r(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn ivif(a: &str, b: &str, c: &str, d: &str) -> Ifn {
        Ifn::ivif([r(a), r(b)], [r(c), r(d)]).unwrap()
    }

    #[test]
    fn quads() {
        let q = ScoreQuad::from_corners(&r("0.35"), &r("0.4"), &r("0.2"), &r("0.3"));
        assert_eq!(q.c1, r("0.22"));
        let q = ScoreQuad::from_corners(&int(1), &int(1), &int(0), &int(0));
        assert_eq!(q.to_array(), [int(1), int(1), int(0), int(0)]);
        let q = ScoreQuad::from_corners(&r("0.325"), &r("0.45"), &r("0.15"), &r("0.275"));
        assert_eq!(q.c1, r("0.26125"));
    }

    #[test]
    fn stream_indexing() {
        let seq = DenseSequence::default();
        let b = Ifn::triangular(["0.17", "0.32", "0.58"].map(r), ["0.37", "0.63", "0.73"].map(r)).unwrap();
        assert_eq!(c_value(&b, &seq, 1).unwrap(), r("-0.1084"));
        let a = Ifn::triangular(["0.2", "0.3", "0.5"].map(r), ["0.35", "0.55", "0.65"].map(r)).unwrap();
        assert_eq!(c_value(&a, &seq, 1).unwrap(), r("-0.085"));
        let q2 = quad_at(&b, &seq, 2).unwrap();
        for k in 1..=4 {
            assert_eq!(&c_value(&b, &seq, 4 + k).unwrap(), q2.get(k as usize));
        }
        assert!(c_value(&b, &seq, 0).is_err());
    }

    #[test]
    fn ivif_identities() {
        let s = ivif_scores(&r("0"), &r("0.3"), &r("0.35"), &r("0.65"));
        assert_eq!(s.l, r("-0.2525"));
        assert_eq!(ivif_scores(&r("0.2"), &r("0.25"), &r("0.4"), &r("0.45")).l, r("-0.10375"));
        let s = ivif_scores(&int(1), &int(1), &int(0), &int(0));
        assert_eq!((s.l, s.lg), (int(1), int(-1)));

        let g = unit_grid(4);
        for a in &g {
            for b in g.iter().filter(|b| *b >= a) {
                for c in &g {
                    for d in g.iter().filter(|d| *d >= c) {
                        let s = ivif_scores(a, b, c, d);
                        let q = ScoreQuad::from_corners(a, b, c, d);
                        assert_eq!((&q.c1, -&q.c2, &q.c3, -&q.c4), (&s.l, s.lg.clone(), &s.p, s.ip.clone()));
                        assert_eq!(&q.c1 - &q.c2, a * c + b * d);
                    }
                }
            }
        }
    }

    #[test]
    fn quad_values_stay_in_range_for_valid_intervals() {
        let g = unit_grid(8);
        let one = int(1);
        for a in &g {
            for b in g.iter().filter(|b| *b >= a) {
                for c in &g {
                    for d in g.iter().filter(|d| *d >= c) {
                        if Ifn::ivif([a.clone(), b.clone()], [c.clone(), d.clone()]).is_err() {
                            continue;
                        }
                        for v in ScoreQuad::from_corners(a, b, c, d).to_array() {
                            assert!(v >= -one.clone() && v <= one, "{a} {b} {c} {d}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn c1_increases_along_the_if_diagonal() {
        let g = unit_grid(64);
        let c1 = |x: &Rational| ScoreQuad::from_corners(x, x, &(int(1) - x), &(int(1) - x)).c1;
        for w in g.windows(2) {
            assert!(c1(&w[0]) < c1(&w[1]));
        }
        assert_eq!(c1(&r("0.25")), int(-1) + r("0.75") - r("0.0625"));
    }

    #[test]
    fn triangular() {
        let m = Ifn::triangular(["0", "0.2", "0.4"].map(r), ["0.4", "0.45", "0.5"].map(r)).unwrap();
        let s = triangular_scores(&m).unwrap();
        assert_eq!(s.t, r("0.25"));
        assert_eq!(s.ntc, ratio(21, 38));
        assert!(matches_published(&s.l, "0.8333").unwrap());
        assert!(matches_published(&s.nl, "0.421053").unwrap());
        assert!(matches_published(&s.nr, "0.526316").unwrap());
        assert!(matches_published(&s.nt, "0.447368").unwrap());
        let n = Ifn::triangular(["0.25", "0.25", "0.25"].map(r), ["0.4", "0.45", "0.5"].map(r)).unwrap();
        let sn = triangular_scores(&n).unwrap();
        assert_eq!((sn.t, sn.ntc), (s.t, s.ntc));
        let top = Ifn::triangular(["1", "1", "1"].map(r), ["0", "0", "0"].map(r)).unwrap();
        let s = triangular_scores(&top).unwrap();
        assert_eq!((s.l, s.r, s.t), (int(0), int(1), int(1)));
        assert!(triangular_scores(&ivif("0.1", "0.2", "0.3", "0.4")).is_err());
    }
}
