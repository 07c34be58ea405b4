//! Weak compositions and partitions, stored as plain `Vec<u32>` exponent vectors.

use crate::perm::Permutation;
use crate::poly::Polynomial;
use crate::Error;

pub type Composition = Vec<u32>;

pub fn size(a: &[u32]) -> u32 {
    a.iter().sum()
}

pub fn is_partition(a: &[u32]) -> bool {
    a.windows(2).all(|w| w[0] >= w[1])
}

pub fn sort_desc(a: &[u32]) -> Composition {
    let mut v = a.to_vec();
    v.sort_unstable_by(|x, y| y.cmp(x));
    v
}

pub fn reverse(a: &[u32]) -> Composition {
    a.iter().rev().copied().collect()
}

/// The minimal-length permutation with `a[i] == sort_desc(a)[omega(i) - 1]`:
/// position i goes to the rank of a[i] under a stable descending sort.
pub fn omega(a: &[u32]) -> Permutation {
    let mut order: Vec<usize> = (0..a.len()).collect();
    order.sort_by(|&i, &j| a[j].cmp(&a[i]).then(i.cmp(&j)));
    let mut images = vec![0; a.len()];
    for (rank, &i) in order.iter().enumerate() {
        images[i] = rank + 1;
    }
    Permutation::new(images).expect("rank map is a bijection")
}

/// `beta >= alpha` in the composition order: omega_beta <= omega_alpha in Bruhat order.
/// Only defined within one rearrangement class.
pub fn comp_geq(beta: &[u32], alpha: &[u32]) -> Result<bool, Error> {
    if beta.len() != alpha.len() || sort_desc(beta) != sort_desc(alpha) {
        return Err(Error::IncomparableShapes(fmt_comp(beta), fmt_comp(alpha)));
    }
    Ok(omega(beta).bruhat_leq(&omega(alpha)))
}

pub fn monomial(a: &[u32]) -> Polynomial {
    Polynomial::monomial(a)
}

/// Pad with zeros (or keep) to length n.
pub fn padded(a: &[u32], n: usize) -> Composition {
    let mut v = a.to_vec();
    if v.len() < n {
        v.resize(n, 0);
    }
    v
}

/// All weak compositions of `total` with exactly `len` parts, in lexicographic order.
pub fn compositions(len: usize, total: u32) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut cur = vec![0; len];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for v in (0..=left).rev() {
            cur[i] = v;
            rec(i + 1, left - v, cur, out);
        }
    }
    if len == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, total, &mut cur, &mut out);
    out.reverse();
    out
}

/// All weak compositions with `len` parts, each at most `max_part`.
pub fn bounded_compositions(len: usize, max_part: u32) -> Vec<Composition> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v: Composition| {
                (0..=max_part).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Partitions of `total` padded to exactly `len` parts.
pub fn partitions(len: usize, total: u32) -> Vec<Composition> {
    compositions(len, total).into_iter().filter(|a| is_partition(a)).collect()
}

/// Distinct rearrangements of `a`, lexicographically.
pub fn rearrangements(a: &[u32]) -> Vec<Composition> {
    let mut cur = a.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    let n = cur.len();
    while let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) {
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
    out
}

/// "(1,0,3)"
pub fn fmt_comp(a: &[u32]) -> String {
    let parts: Vec<String> = a.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Accepts "(1,0,3)", "1,0,3" or "(103)" style input; the compact form needs single digits.
pub fn parse_comp(s: &str) -> Result<Composition, Error> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
    let bad = || Error::Parse(format!("composition {s:?}"));
    if t.is_empty() {
        return Ok(Vec::new());
    }
    if t.contains(',') {
        t.split(',').map(|x| x.trim().parse::<u32>().map_err(|_| bad())).collect()
    } else if t.contains(char::is_whitespace) {
        t.split_whitespace().map(|x| x.parse::<u32>().map_err(|_| bad())).collect()
    } else {
        t.chars().map(|c| c.to_digit(10).ok_or_else(bad)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega(&[1, 0, 3]), perm("231"));
        assert_eq!(omega(&[3, 0, 1]), perm("132"));
        assert!(omega(&[4, 2, 2, 0]).is_identity());
        assert_eq!(sort_desc(&[1, 0, 3]), vec![3, 1, 0]);
        assert_eq!(reverse(&[1, 0, 3]), vec![3, 0, 1]);
    }

    #[test]
    fn omega_is_minimal() {
        for len in 1..=4 {
            for total in 0..=6 {
                for a in compositions(len, total) {
                    let lam = sort_desc(&a);
                    let valid: Vec<Permutation> = Permutation::all(len)
                        .into_iter()
                        .filter(|w| (0..len).all(|i| a[i] == lam[w.apply(i + 1) - 1]))
                        .collect();
                    let best = valid.iter().map(|w| w.length()).min().unwrap();
                    let om = omega(&a);
                    assert!(valid.contains(&om));
                    assert_eq!(om.length(), best);
                    assert_eq!(valid.iter().filter(|w| w.length() == best).count(), 1);
                }
            }
        }
    }

    #[test]
    fn order_examples() {
        assert!(comp_geq(&[3, 1, 0], &[1, 0, 3]).unwrap());
        assert!(!comp_geq(&[1, 0, 3], &[3, 1, 0]).unwrap());
        assert!(comp_geq(&[1, 0, 3], &[1, 0, 3]).unwrap());
        assert!(comp_geq(&[1, 0, 3], &[2, 0, 2]).is_err());
    }

    #[test]
    fn order_is_partial_order_per_class() {
        for len in 1..=4 {
            for total in 0..=6 {
                for lam in partitions(len, total) {
                    let class = rearrangements(&lam);
                    for a in &class {
                        assert!(comp_geq(&lam, a).unwrap());
                        for b in &class {
                            let ab = comp_geq(a, b).unwrap();
                            if ab && comp_geq(b, a).unwrap() {
                                assert_eq!(a, b);
                            }
                            for c in &class {
                                if ab && comp_geq(b, c).unwrap() {
                                    assert!(comp_geq(a, c).unwrap());
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        // 210 compositions with at most 4 parts and size at most 6, padded to 4
        let n: usize = (0..=6).map(|t| compositions(4, t).len()).sum();
        assert_eq!(n, 210);
        assert_eq!(rearrangements(&[2, 1, 1]).len(), 3);
        assert_eq!(bounded_compositions(3, 3).len(), 64);
    }

    #[test]
    fn text_roundtrip() {
        assert_eq!(parse_comp("(1,0,3)").unwrap(), vec![1, 0, 3]);
        assert_eq!(parse_comp("103").unwrap(), vec![1, 0, 3]);
        assert_eq!(fmt_comp(&[1, 0, 3]), "(1,0,3)");
        assert!(parse_comp("(1,x)").is_err());
    }
}
