//! Oracles and generators shared by the integration tests. Nothing here calls the
//! library's own expansion or extraction code.

#![allow(dead_code)]

use std::collections::BTreeMap;

use demazure::insertion::{self, SegWord};
use demazure::poly::Polynomial;
use demazure::ssaf::Ssaf;
use rand::Rng;

/// s_λ(x_1..x_n) as the sum of x^T over semistandard Young tableaux T of shape λ
/// with entries <= n, filled cell by cell in row-major order.
pub fn ssyt_schur(lam: &[u32], n: usize) -> Polynomial {
    let shape: Vec<usize> = lam.iter().map(|&r| r as usize).filter(|&r| r > 0).collect();
    let cells: Vec<(usize, usize)> =
        shape.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<u32>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut out = Polynomial::zero(n);
    fill(&cells, 0, &mut grid, n as u32, &mut out);
    out
}

fn fill(cells: &[(usize, usize)], i: usize, grid: &mut Vec<Vec<u32>>, n: u32, out: &mut Polynomial) {
    if i == cells.len() {
        let mut e = vec![0u32; n as usize];
        for row in grid.iter() {
            for &v in row {
                e[v as usize - 1] += 1;
            }
        }
        out.add_term(e, 1);
        return;
    }
    let (r, c) = cells[i];
    let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
    let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
    for v in lo_row.max(lo_col)..=n {
        grid[r][c] = v;
        fill(cells, i + 1, grid, n, out);
    }
    grid[r][c] = 0;
}

/// A random polynomial in `nvars` variables: up to `terms` monomials of total
/// degree <= `max_deg` with coefficients in -3..=3.
pub fn random_poly(rng: &mut impl Rng, nvars: usize, max_deg: u32, terms: usize) -> Polynomial {
    let mut p = Polynomial::zero(nvars);
    for _ in 0..rng.gen_range(1..=terms) {
        let deg = rng.gen_range(0..=max_deg);
        let mut e = vec![0u32; nvars];
        for _ in 0..deg {
            e[rng.gen_range(0..nvars)] += 1;
        }
        p.add_term(e, rng.gen_range(-3..=3));
    }
    p
}

/// A random column word with letters in 1..=max_letter and at most `max_len`
/// letters. Segments are built from the last one back, so each tail-aligned
/// letter is chosen strictly below its right neighbour.
pub fn random_column_word(rng: &mut impl Rng, max_letter: u32, max_len: usize) -> SegWord {
    'retry: loop {
        let k = rng.gen_range(1..=max_letter.min(max_len as u32) as usize);
        let mut lengths = vec![0usize; k];
        let mut budget = max_len;
        // lengths weakly decrease, chosen from the front
        for i in 0..k {
            let cap = if i == 0 { budget - (k - 1) } else { lengths[i - 1].min(budget - (k - 1 - i)) };
            if cap == 0 {
                continue 'retry;
            }
            lengths[i] = rng.gen_range(1..=cap);
            budget -= lengths[i];
        }
        let mut segs: Vec<Vec<u32>> = vec![Vec::new(); k];
        for i in (0..k).rev() {
            // tail position t = 0 is the last letter; letters weakly increase with t
            let mut seg_rev: Vec<u32> = Vec::with_capacity(lengths[i]);
            for t in 0..lengths[i] {
                let lo = seg_rev.last().copied().unwrap_or(1);
                let hi = if i + 1 < k && t < lengths[i + 1] {
                    let next = &segs[i + 1];
                    next[next.len() - 1 - t] - 1
                } else {
                    max_letter
                };
                if lo > hi {
                    continue 'retry;
                }
                seg_rev.push(rng.gen_range(lo..=hi));
            }
            seg_rev.reverse();
            segs[i] = seg_rev;
        }
        let w = SegWord::new(segs);
        assert!(insertion::is_column_word(&w), "generator produced {w}");
        return w;
    }
}

/// Every column word with letters in 1..=max_letter, at most `max_segs` segments
/// and at most `max_letters` letters in total.
pub fn all_column_words(max_letter: u32, max_segs: usize, max_letters: usize) -> Vec<SegWord> {
    // weakly decreasing sequences of a fixed length
    fn decreasing(len: usize, top: u32, out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let hi = cur.last().copied().unwrap_or(top);
        for v in 1..=hi {
            cur.push(v);
            decreasing(len, top, out, cur);
            cur.pop();
        }
    }
    let mut by_len: Vec<Vec<Vec<u32>>> = vec![Vec::new(); max_letters + 1];
    for (len, slot) in by_len.iter_mut().enumerate().skip(1) {
        decreasing(len, max_letter, slot, &mut Vec::new());
    }
    let mut out = Vec::new();
    let mut stack: Vec<Vec<Vec<u32>>> = vec![Vec::new()];
    while let Some(segs) = stack.pop() {
        if !segs.is_empty() {
            out.push(SegWord::new(segs.clone()));
        }
        if segs.len() == max_segs {
            continue;
        }
        let used: usize = segs.iter().map(Vec::len).sum();
        let max_next = segs.last().map_or(max_letters, Vec::len).min(max_letters - used);
        for len in 1..=max_next {
            for s in &by_len[len] {
                let ok = segs.last().is_none_or(|a: &Vec<u32>| (0..len).all(|j| s[len - 1 - j] > a[a.len() - 1 - j]));
                if ok {
                    let mut next = segs.clone();
                    next.push(s.clone());
                    stack.push(next);
                }
            }
        }
    }
    out.sort_by_key(|w| w.to_string());
    out
}

pub type Tableau = BTreeMap<(usize, usize), u32>;

fn as_tableau(rec: &insertion::RecordingTableau) -> Tableau {
    rec.iter().map(|(c, &v)| ((c.column, c.row), v)).collect()
}

/// Brute force of the determination property: over every U = dominant(λ) and
/// every column word w, group by the recording tableau L of U <- W and collect
/// the recording tableaux R of U <- W̃. Returns (cases, groups holding more than
/// one word, violations).
pub fn recording_determination(partitions: &[Vec<u32>], words: &[SegWord]) -> (usize, usize, Vec<String>) {
    let mut cases = 0;
    let mut shared = 0;
    let mut bad = Vec::new();
    for lam in partitions {
        let u = Ssaf::dominant(lam);
        let n = lam.len();
        let mut seen: BTreeMap<Tableau, (Tableau, String, usize)> = BTreeMap::new();
        for w in words {
            let (_, l) = insertion::insert_with_recording(&u, &insertion::column_biword(w)).unwrap();
            let v = insertion::filling_of(&w.letters(), n).unwrap();
            let rows = insertion::row_word(&v);
            let (_, r) = insertion::insert_with_recording(&u, &insertion::row_biword(&rows)).unwrap();
            let (l, r) = (as_tableau(&l), as_tableau(&r));
            cases += 1;
            match seen.get_mut(&l) {
                Some((r0, w0, _)) if *r0 != r => bad.push(format!("U={lam:?}: {w0} and {w} share L but not R")),
                Some((_, _, count)) => *count += 1,
                None => {
                    seen.insert(l, (r, w.to_string(), 1));
                }
            }
        }
        shared += seen.values().filter(|v| v.2 > 1).count();
    }
    (cases, shared, bad)
}
