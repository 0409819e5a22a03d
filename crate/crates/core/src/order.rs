//! Lexicographic comparison of score streams, the early equality
//! certificate, and sorting into tie groups.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::dense::DenseSequence;
use crate::error::Error;
use crate::number::Ifn;
use crate::scalar::Rational;
use crate::scores::quad_at;

pub const DEFAULT_DEPTH: u64 = 100;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// `C_j(A) < C_j(B)` at the first differing index `j`.
    Less { j: u64, a: Rational, b: Rational },
    Greater { j: u64, a: Rational, b: Rational },
    /// Streams agree everywhere. `certified` is set when the certificate
    /// proved it rather than identical knots on an exhausted finite list.
    Equivalent { certified: bool },
    /// Every value up to `depth` level pairs agreed and nothing proves the rest do.
    Indistinguishable { depth: u64 },
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Less { .. } => "Less",
            Verdict::Greater { .. } => "Greater",
            Verdict::Equivalent { .. } => "Equivalent",
            Verdict::Indistinguishable { .. } => "Indistinguishable",
        }
    }

    /// `Equal` for both equivalence and indistinguishability.
    pub fn ordering(&self) -> Ordering {
        match self {
            Verdict::Less { .. } => Ordering::Less,
            Verdict::Greater { .. } => Ordering::Greater,
            _ => Ordering::Equal,
        }
    }

    pub fn index(&self) -> Option<u64> {
        match self {
            Verdict::Less { j, .. } | Verdict::Greater { j, .. } => Some(*j),
            _ => None,
        }
    }

    pub fn reversed(self) -> Verdict {
        match self {
            Verdict::Less { j, a, b } => Verdict::Greater { j, a: b, b: a },
            Verdict::Greater { j, a, b } => Verdict::Less { j, a: b, b: a },
            other => other,
        }
    }
}

/// Distinct levels seen while scanning a diagonal sequence; `None` otherwise.
struct DiagonalLevels(Option<BTreeSet<Rational>>);

impl DiagonalLevels {
    fn new(seq: &DenseSequence) -> Self {
        DiagonalLevels(seq.is_diagonal().then(BTreeSet::new))
    }

    fn see(&mut self, alpha: &Rational) {
        if let Some(set) = &mut self.0 {
            set.insert(alpha.clone());
        }
    }

    /// Each stream value at a diagonal level `t` is a polynomial of degree at
    /// most 2 in `t`, so agreement at three distinct levels is agreement everywhere.
    fn settled(&self) -> bool {
        self.0.as_ref().is_some_and(|s| s.len() >= 3)
    }
}

fn exhausted(seq: &DenseSequence, i: u64) -> bool {
    seq.len().is_some_and(|n| i > n as u64)
}

pub fn compare(a: &Ifn, b: &Ifn, seq: &DenseSequence, max_depth: u64) -> Result<Verdict, Error> {
    let mut levels = DiagonalLevels::new(seq);
    let mut scanned = 0;
    for i in 1..=max_depth.max(1) {
        if exhausted(seq, i) {
            break;
        }
        let (alpha, _) = seq.pair(i)?;
        let (qa, qb) = (quad_at(a, seq, i)?, quad_at(b, seq, i)?);
        for r in 1..=4 {
            let (x, y) = (qa.get(r), qb.get(r));
            let j = 4 * (i - 1) + r as u64;
            match x.cmp(y) {
                Ordering::Less => return Ok(Verdict::Less { j, a: x.clone(), b: y.clone() }),
                Ordering::Greater => return Ok(Verdict::Greater { j, a: x.clone(), b: y.clone() }),
                Ordering::Equal => {}
            }
        }
        scanned = i;
        levels.see(&alpha);
        if levels.settled() {
            return Ok(Verdict::Equivalent { certified: true });
        }
    }
    if a.same_knots(b) {
        return Ok(Verdict::Equivalent { certified: false });
    }
    Ok(Verdict::Indistinguishable { depth: scanned })
}

/// True when every stream value over the first three distinct diagonal
/// levels agrees, which forces the whole streams to agree.
pub fn equality_certificate(a: &Ifn, b: &Ifn, seq: &DenseSequence) -> Result<bool, Error> {
    let mut levels = DiagonalLevels::new(seq);
    if levels.0.is_none() {
        return Err(Error::CertificateInapplicable("the sequence is not diagonal".into()));
    }
    let mut equal = true;
    let mut i = 1;
    while !levels.settled() {
        if exhausted(seq, i) {
            return Err(Error::CertificateInapplicable(format!(
                "sequence ends before three distinct levels ({} terms)",
                i - 1
            )));
        }
        let (alpha, _) = seq.pair(i)?;
        levels.see(&alpha);
        equal &= quad_at(a, seq, i)? == quad_at(b, seq, i)?;
        i += 1;
    }
    Ok(equal)
}

/// First `n` stream values, materialized.
pub fn c_prefix(ifn: &Ifn, seq: &DenseSequence, n: u64) -> Result<Vec<Rational>, Error> {
    let mut out = Vec::with_capacity(n as usize);
    for i in 1..=n.div_ceil(4) {
        out.extend(quad_at(ifn, seq, i)?.to_array());
    }
    out.truncate(n as usize);
    Ok(out)
}

/// Items sorted ascending, grouped where the comparator found no difference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortGroup {
    /// Input positions, in input order.
    pub members: Vec<usize>,
    /// Some pair in the group was only indistinguishable to the scan depth.
    pub indistinguishable: bool,
}

/// Ascending order. Each item is placed by how many items are strictly below
/// it, so the result never depends on comparison order.
pub fn sort(items: &[Ifn], seq: &DenseSequence, max_depth: u64) -> Result<Vec<SortGroup>, Error> {
    let n = items.len();
    let mut below = vec![0usize; n];
    let mut shaky = vec![false; n];
    for i in 0..n {
        for k in i + 1..n {
            let v = compare(&items[i], &items[k], seq, max_depth)?;
            match v.ordering() {
                Ordering::Less => below[k] += 1,
                Ordering::Greater => below[i] += 1,
                Ordering::Equal => {
                    if matches!(v, Verdict::Indistinguishable { .. }) {
                        shaky[i] = true;
                        shaky[k] = true;
                    }
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (below[i], i));
    let mut groups: Vec<SortGroup> = Vec::new();
    for i in order {
        match groups.last_mut() {
            Some(g) if below[g.members[0]] == below[i] => {
                g.members.push(i);
                g.indistinguishable |= shaky[i];
            }
            _ => groups.push(SortGroup { members: vec![i], indistinguishable: shaky[i] }),
        }
    }
    Ok(groups)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{parse_rational, ratio};

    fn r(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn trap(mu: [&str; 4], nu: [&str; 4]) -> Ifn {
        Ifn::trapezoidal(mu.map(r), nu.map(r)).unwrap()
    }

    fn example_4_2() -> (Ifn, Ifn) {
        (
            trap(["0.35", "0.35", "0.4", "0.6"], ["0.1", "0.2", "0.3", "0.35"]),
            trap(["0.35", "0.35", "0.45", "0.55"], ["0", "0.3", "0.3", "0.35"]),
        )
    }

    fn example_4_3() -> (Ifn, Ifn) {
        (
            trap(["0.3", "0.35", "0.4", "0.5"], ["0.1", "0.2", "0.25", "0.3"]),
            trap(["0.35", "0.35", "0.4", "0.55"], ["0", "0.2", "0.25", "0.35"]),
        )
    }

    #[test]
    fn worked_examples() {
        let seq = DenseSequence::default();
        let (a, b) = example_4_2();
        assert_eq!(
            compare(&a, &b, &seq, DEFAULT_DEPTH).unwrap(),
            Verdict::Greater { j: 2, a: r("0.03"), b: r("-0.02") }
        );
        let (a, b) = example_4_3();
        let v = compare(&a, &b, &seq, DEFAULT_DEPTH).unwrap();
        assert_eq!(v, Verdict::Less { j: 5, a: r("0.26125"), b: r("0.30125") });
        assert_eq!(compare(&b, &a, &seq, DEFAULT_DEPTH).unwrap(), v.reversed());
        let prefix = c_prefix(&a, &seq, 4).unwrap();
        assert_eq!(prefix, c_prefix(&b, &seq, 4).unwrap());
        assert_eq!(prefix, [r("0.235"), r("0.065"), r("0.085"), r("-0.065")]);
    }

    #[test]
    fn self_comparison_is_certified() {
        let (a, _) = example_4_3();
        for seq in [DenseSequence::default(), DenseSequence::WithRepeats, DenseSequence::half_first()] {
            assert_eq!(compare(&a, &a, &seq, DEFAULT_DEPTH).unwrap(), Verdict::Equivalent { certified: true });
            assert!(equality_certificate(&a, &a, &seq).unwrap());
        }
        let (a, b) = example_4_3();
        assert!(!equality_certificate(&a, &b, &DenseSequence::default()).unwrap());
    }

    #[test]
    fn short_or_skewed_sequences() {
        let (a, b) = example_4_3();
        let one = DenseSequence::paired(vec![(r("1"), r("1"))]).unwrap();
        assert_eq!(compare(&a, &b, &one, DEFAULT_DEPTH).unwrap(), Verdict::Indistinguishable { depth: 1 });
        assert_eq!(compare(&a, &a, &one, DEFAULT_DEPTH).unwrap(), Verdict::Equivalent { certified: false });
        assert!(matches!(equality_certificate(&a, &a, &one), Err(Error::CertificateInapplicable(_))));
        let skew = DenseSequence::paired(vec![(r("1"), r("1")), (r("1"), r("0.5")), (r("0.5"), r("0.5"))]).unwrap();
        assert!(matches!(equality_certificate(&a, &a, &skew), Err(Error::CertificateInapplicable(_))));
        assert_eq!(compare(&a, &b, &DenseSequence::default(), 1).unwrap(), Verdict::Indistinguishable { depth: 1 });
    }

    #[test]
    fn sorting_example_4_1() {
        let tri = |m: [&str; 3], n: [&str; 3]| Ifn::triangular(m.map(r), n.map(r)).unwrap();
        let a = tri(["0.2", "0.3", "0.5"], ["0.35", "0.55", "0.65"]);
        let b = tri(["0.17", "0.32", "0.58"], ["0.37", "0.63", "0.73"]);
        let c = tri(["0.25", "0.4", "0.7"], ["0.45", "0.75", "0.85"]);
        let seq = DenseSequence::default();
        let groups = sort(&[a.clone(), b.clone(), c], &seq, DEFAULT_DEPTH).unwrap();
        let order: Vec<usize> = groups.iter().flat_map(|g| g.members.clone()).collect();
        assert_eq!(order, [1, 0, 2]);

        let groups = sort(&[a.clone(), b.clone(), a.clone()], &seq, DEFAULT_DEPTH).unwrap();
        assert_eq!(groups[0].members, [1]);
        assert_eq!(groups[1].members, [0, 2]);
        assert!(!groups[1].indistinguishable);
        assert_eq!(sort(&[a], &seq, DEFAULT_DEPTH).unwrap().len(), 1);
    }

    #[test]
    fn real_order_spot_check() {
        let e = |x: Rational| Ifn::if_value(x.clone(), ratio(1, 1) - x).unwrap();
        let v = compare(&e(ratio(1, 3)), &e(ratio(1, 2)), &DenseSequence::default(), DEFAULT_DEPTH).unwrap();
        assert!(matches!(v, Verdict::Less { j: 1, .. }));
    }
}
