//! Permutations in one-line notation, reduced words and Bruhat order.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::Error;

/// Largest n for which exhaustive reduced-word and interval enumeration is allowed.
pub const ENUM_LIMIT: usize = 7;

/// A bijection of {1..n}, stored by its images.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, Error> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// The reversed identity n, n-1, ..., 1.
    pub fn longest(n: usize) -> Self {
        Permutation { images: (1..=n).rev().collect() }
    }

    /// The simple transposition s_i in S_n (requires 1 <= i < n).
    pub fn simple(i: usize, n: usize) -> Self {
        let mut p = Self::identity(n.max(i + 1));
        p.images.swap(i - 1, i);
        p
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// p(j) for 1-based j; fixed point beyond n.
    pub fn apply(&self, j: usize) -> usize {
        if j <= self.n() {
            self.images[j - 1]
        } else {
            j
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Extend by fixed points up to size n (never shrinks).
    pub fn padded(&self, n: usize) -> Self {
        let mut images = self.images.clone();
        for j in images.len() + 1..=n {
            images.push(j);
        }
        Permutation { images }
    }

    /// (self * q)(j) = self(q(j)).
    pub fn compose(&self, q: &Permutation) -> Permutation {
        let n = self.n().max(q.n());
        Permutation { images: (1..=n).map(|j| self.apply(q.apply(j))).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    pub fn inversions(&self) -> usize {
        let p = &self.images;
        let mut count = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn length(&self) -> usize {
        self.inversions()
    }

    /// Evaluate s_{w_1} s_{w_2} ... s_{w_k} in S_n (n grows to fit the letters).
    pub fn from_word(word: &[usize], n: usize) -> Permutation {
        let n = word.iter().map(|&i| i + 1).max().unwrap_or(0).max(n);
        let mut p = Permutation::identity(n);
        for &i in word {
            // right multiplication by s_i swaps positions i and i+1
            p.images.swap(i - 1, i);
        }
        p
    }

    /// Bubble-sort reduced word: sort p to the identity by adjacent position swaps,
    /// then read the swaps backwards.
    pub fn some_reduced_word(&self) -> Vec<usize> {
        let mut p = self.images.clone();
        let mut swaps = Vec::with_capacity(self.length());
        for v in 1..=p.len() {
            let mut pos = p.iter().position(|&x| x == v).unwrap();
            while pos > v - 1 {
                p.swap(pos - 1, pos);
                swaps.push(pos);
                pos -= 1;
            }
        }
        swaps.reverse();
        swaps
    }

    /// Every reduced word, found by closing one word under braid and commutation moves.
    pub fn all_reduced_words(&self) -> Result<BTreeSet<Vec<usize>>, Error> {
        if self.n() > ENUM_LIMIT {
            return Err(Error::TooLarge { what: "all_reduced_words", n: self.n(), limit: ENUM_LIMIT });
        }
        let start = self.some_reduced_word();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start.clone());
        queue.push_back(start);
        while let Some(w) = queue.pop_front() {
            for k in 0..w.len() {
                if k + 1 < w.len() && w[k].abs_diff(w[k + 1]) >= 2 {
                    let mut v = w.clone();
                    v.swap(k, k + 1);
                    if seen.insert(v.clone()) {
                        queue.push_back(v);
                    }
                }
                if k + 2 < w.len() && w[k] == w[k + 2] && w[k].abs_diff(w[k + 1]) == 1 {
                    let mut v = w.clone();
                    v[k] = w[k + 1];
                    v[k + 1] = w[k];
                    v[k + 2] = w[k + 1];
                    if seen.insert(v.clone()) {
                        queue.push_back(v);
                    }
                }
            }
        }
        Ok(seen)
    }

    /// Strong Bruhat order via the tableau criterion: for every k, the sorted
    /// first k images of u are entrywise <= those of v.
    pub fn bruhat_leq(&self, v: &Permutation) -> bool {
        let n = self.n().max(v.n());
        let u = self.padded(n);
        let v = v.padded(n);
        let mut a: Vec<usize> = Vec::with_capacity(n);
        let mut b: Vec<usize> = Vec::with_capacity(n);
        for k in 0..n {
            let x = u.images[k];
            let y = v.images[k];
            a.insert(a.partition_point(|&t| t < x), x);
            b.insert(b.partition_point(|&t| t < y), y);
            if a.iter().zip(&b).any(|(s, t)| s > t) {
                return false;
            }
        }
        true
    }

    /// All u with u <= self, grown downward from self by removing one letter of a
    /// reduced word at a time (every element of the interval is reached this way).
    pub fn lower_interval(&self) -> Result<Vec<Permutation>, Error> {
        if self.n() > ENUM_LIMIT {
            return Err(Error::TooLarge { what: "lower_interval", n: self.n(), limit: ENUM_LIMIT });
        }
        let word = self.some_reduced_word();
        let mut found: HashSet<Permutation> = HashSet::new();
        // subword property with one fixed reduced word
        let k = word.len();
        for mask in 0u32..(1u32 << k) {
            let sub: Vec<usize> = (0..k).filter(|&i| mask & (1 << i) != 0).map(|i| word[i]).collect();
            let p = Permutation::from_word(&sub, self.n());
            if p.length() == sub.len() {
                found.insert(p);
            }
        }
        let mut out: Vec<Permutation> = found.into_iter().collect();
        out.sort_by(|a, b| a.length().cmp(&b.length()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// All permutations of S_n in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation { images: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.images {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::Parse(format!("permutation {s:?}"));
        let images: Vec<usize> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse().map_err(|_| bad())).collect::<Result<_, _>>()?
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect::<Result<_, _>>()?
        };
        Permutation::new(images)
    }
}
