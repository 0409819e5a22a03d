//! Upper dense sequences in `(0,1]` and the level pairs they feed to cuts.
//!
//! Sequences are index rules (1-based): asking for term `i` twice returns the
//! same value and nothing is cached between calls.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::scalar::{parse_rational, ratio, to_exact_string, Rational};

pub type LevelPair = (Rational, Rational);

#[derive(Clone)]
pub enum DenseSequence {
    /// `1, 1/2, 1/3, 2/3, 1/4, 3/4, 1/5, …`: every rational in `(0,1]` once, on the diagonal.
    DistinctReduced,
    /// `i/k − (k−1)/2` with repeats (`1, 1/2, 1, 1/3, 2/3, 1, …`), on the diagonal.
    WithRepeats,
    /// A finite explicit list.
    Paired(Vec<LevelPair>),
    /// An explicit list followed by [`DenseSequence::DistinctReduced`].
    Prefixed(Vec<LevelPair>),
    /// Two index rules for α and β.
    Custom { alpha: fn(u64) -> Rational, beta: fn(u64) -> Rational },
}

impl Default for DenseSequence {
    fn default() -> Self {
        DenseSequence::DistinctReduced
    }
}

impl fmt::Debug for DenseSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl DenseSequence {
    /// `(1/2,1/2)` first, then the distinct reduced diagonal.
    pub fn half_first() -> Self {
        DenseSequence::Prefixed(vec![(ratio(1, 2), ratio(1, 2))])
    }

    pub fn paired(list: Vec<LevelPair>) -> Result<Self, Error> {
        check_list(&list)?;
        Ok(DenseSequence::Paired(list))
    }

    pub fn prefixed(list: Vec<LevelPair>) -> Result<Self, Error> {
        check_list(&list)?;
        Ok(DenseSequence::Prefixed(list))
    }

    /// `distinct`, `repeats`, `half-first`, or an inline list `pairs:1,1;1/2,1/2`.
    /// File-backed lists are read by the caller and passed to [`DenseSequence::paired`].
    pub fn from_name(name: &str) -> Result<Self, Error> {
        match name {
            "distinct" => Ok(DenseSequence::DistinctReduced),
            "repeats" => Ok(DenseSequence::WithRepeats),
            "half-first" => Ok(DenseSequence::half_first()),
            other => match other.strip_prefix("pairs:") {
                Some(list) => DenseSequence::paired(parse_pairs(&list.replace(';', "\n"))?),
                None => Err(Error::Parse(format!(
                    "unknown sequence {other:?}; expected distinct, repeats, half-first, pairs:<list> or file:<path>"
                ))),
            },
        }
    }

    pub fn name(&self) -> String {
        match self {
            DenseSequence::DistinctReduced => "distinct".into(),
            DenseSequence::WithRepeats => "repeats".into(),
            DenseSequence::Paired(list) => format!("pairs:{}", show(list)),
            DenseSequence::Prefixed(list) if list.len() == 1 && list[0] == (ratio(1, 2), ratio(1, 2)) => {
                "half-first".into()
            }
            DenseSequence::Prefixed(list) => format!("prefixed:{}", show(list)),
            DenseSequence::Custom { .. } => "custom".into(),
        }
    }

    /// Whether every term has `α = β`. Custom rules are not inspected and count as not diagonal.
    pub fn is_diagonal(&self) -> bool {
        match self {
            DenseSequence::DistinctReduced | DenseSequence::WithRepeats => true,
            DenseSequence::Paired(list) | DenseSequence::Prefixed(list) => list.iter().all(|(a, b)| a == b),
            DenseSequence::Custom { .. } => false,
        }
    }

    /// Number of terms, or `None` when unbounded.
    pub fn len(&self) -> Option<usize> {
        match self {
            DenseSequence::Paired(list) => Some(list.len()),
            _ => None,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == Some(0)
    }

    /// The `i`-th level pair, `i >= 1`.
    pub fn pair(&self, i: u64) -> Result<LevelPair, Error> {
        if i == 0 {
            return Err(Error::Domain { what: "sequence index", range: ">= 1", value: "0".into() });
        }
        let p = match self {
            DenseSequence::DistinctReduced => {
                let t = distinct_term(i);
                (t.clone(), t)
            }
            DenseSequence::WithRepeats => {
                let t = term_with_repeats(i);
                (t.clone(), t)
            }
            DenseSequence::Paired(list) => list
                .get((i - 1) as usize)
                .cloned()
                .ok_or(Error::Index { index: i, len: list.len() })?,
            DenseSequence::Prefixed(list) => match list.get((i - 1) as usize) {
                Some(p) => p.clone(),
                None => {
                    let t = distinct_term(i - list.len() as u64);
                    (t.clone(), t)
                }
            },
            DenseSequence::Custom { alpha, beta } => {
                let p = (alpha(i), beta(i));
                check_level(&p.0)?;
                check_level(&p.1)?;
                p
            }
        };
        Ok(p)
    }
}

fn show(list: &[LevelPair]) -> String {
    list.iter()
        .map(|(a, b)| format!("{},{}", to_exact_string(a), to_exact_string(b)))
        .collect::<Vec<_>>()
        .join(";")
}

pub fn check_level(level: &Rational) -> Result<(), Error> {
    if *level <= Rational::zero() || *level > Rational::one() {
        return Err(Error::Domain { what: "sequence level", range: "(0,1]", value: to_exact_string(level) });
    }
    Ok(())
}

fn check_list(list: &[LevelPair]) -> Result<(), Error> {
    if list.is_empty() {
        return Err(Error::Parse("empty level list".into()));
    }
    list.iter().try_for_each(|(a, b)| check_level(a).and(check_level(b)))
}

/// One `α,β` pair per line; blank lines and `#` comments are skipped.
pub fn parse_pairs(text: &str) -> Result<Vec<LevelPair>, Error> {
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (a, b) = line
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("line {}: expected \"alpha,beta\", got {line:?}", n + 1)))?;
        let pair = (parse_rational(a)?, parse_rational(b)?);
        check_level(&pair.0)?;
        check_level(&pair.1)?;
        out.push(pair);
    }
    check_list(&out)?;
    Ok(out)
}

/// Unreduced `(numerator, denominator)` of the closed-form term with repeats:
/// with `k` the smallest integer such that `k(k+1)/2 >= i`, the term is
/// `(i − k(k−1)/2) / k`.
pub fn term_with_repeats_parts(i: u64) -> (u64, u64) {
    assert!(i >= 1, "sequence index starts at 1");
    // k = ceil(sqrt(2i + 1/4) - 1/2), computed without floating point
    let mut k = ((2.0 * i as f64).sqrt() as u64).max(1);
    while k * (k + 1) / 2 < i {
        k += 1;
    }
    while k > 1 && (k - 1) * k / 2 >= i {
        k -= 1;
    }
    (i - k * (k - 1) / 2, k)
}

pub fn term_with_repeats(i: u64) -> Rational {
    let (j, k) = term_with_repeats_parts(i);
    ratio(j as i64, k as i64)
}

/// `1`, then for `k = 2, 3, …` the reduced fractions `j/k` in increasing `j`.
pub fn distinct_terms() -> impl Iterator<Item = Rational> {
    std::iter::once(Rational::one()).chain(
        (2u64..).flat_map(|k| (1..k).filter(move |j| j.gcd(&k) == 1).map(move |j| ratio(j as i64, k as i64))),
    )
}

pub fn distinct_term(i: u64) -> Rational {
    assert!(i >= 1, "sequence index starts at 1");
    distinct_terms().nth((i - 1) as usize).expect("infinite sequence")
}
