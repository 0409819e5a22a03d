#![allow(dead_code)]

use std::cmp::Ordering;

use ifn_order::order::c_prefix;
use ifn_order::scores::c_value;
use ifn_order::scalar::ratio;
use ifn_order::{DenseSequence, Ifn, Rational};
use rand::seq::SliceRandom;
use rand::Rng;

/// A valid trapezoidal IFN with every knot on the `1/steps` grid.
pub fn random_trifn<R: Rng>(rng: &mut R, steps: i64) -> Ifn {
    loop {
        let mut v: Vec<i64> = (0..8).map(|_| rng.gen_range(0..=steps)).collect();
        // pull some knots together so vertical legs and triangles show up
        for k in 1..8 {
            if rng.gen_bool(0.15) {
                v[k] = v[k - 1];
            }
        }
        v.sort_unstable();
        let mut tail = [v[3], v[4]];
        tail.shuffle(rng);
        let (c, e) = (tail[0], tail[1]);
        let mu = [v[0], v[1], v[2], c];
        let nu = [e, v[5], v[6], v[7]];
        let (mu, nu) = if rng.gen_bool(0.5) {
            (mu, nu)
        } else {
            // mirror x -> 1 - x, which swaps the two leg arrangements
            (mu.map(|k| steps - k), nu.map(|k| steps - k))
        };
        let sort = |mut a: [i64; 4]| {
            a.sort_unstable();
            a.map(|k| ratio(k, steps))
        };
        if let Ok(ifn) = Ifn::trapezoidal(sort(mu), sort(nu)) {
            return ifn;
        }
    }
}

/// Lexicographic comparison of the first `n` stream values, one `C_j` at a time.
pub fn oracle(a: &Ifn, b: &Ifn, seq: &DenseSequence, n: u64) -> (Ordering, Option<u64>) {
    for j in 1..=n {
        match c_value(a, seq, j).unwrap().cmp(&c_value(b, seq, j).unwrap()) {
            Ordering::Equal => {}
            other => return (other, Some(j)),
        }
    }
    (Ordering::Equal, None)
}

/// A second valid TrIFN with the same cores as `a` (so the same first four
/// stream values) and freshly drawn supports, when one exists.
pub fn same_cores<R: Rng>(rng: &mut R, a: &Ifn, steps: i64) -> Option<Ifn> {
    let grid = |k: i64| ratio(k, steps);
    let at = |q: &Rational| (q * ratio(steps, 1)).to_integer().try_into().unwrap_or(0i64);
    for _ in 0..50 {
        let [_, m2, m3, _] = a.mu().knots().clone();
        let [_, n2, n3, _] = a.nu().knots().clone();
        let (lo_m, hi_m, lo_n, hi_n) = (at(&m2), at(&m3), at(&n2), at(&n3));
        let mu = [grid(rng.gen_range(0..=lo_m)), m2, m3, grid(rng.gen_range(hi_m..=steps))];
        let nu = [grid(rng.gen_range(0..=lo_n)), n2, n3, grid(rng.gen_range(hi_n..=steps))];
        if let Ok(b) = Ifn::trapezoidal(mu, nu) {
            if !b.same_knots(a) {
                return Some(b);
            }
        }
    }
    None
}

/// The stream values compared first by the certificate: three diagonal levels.
pub fn certificate_signature(ifn: &Ifn, seq: &DenseSequence) -> Vec<Rational> {
    c_prefix(ifn, seq, 12).unwrap()
}
