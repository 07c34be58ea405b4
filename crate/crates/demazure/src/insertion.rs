//! Insertion into augmented fillings, column and row words, twisted Knuth moves.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::perm::Permutation;
use crate::ssaf::{reading_order, Cell, Ssaf};
use crate::Error;

/// A word cut into segments, written "886531|97643|9764|5|6".
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SegWord {
    segments: Vec<Vec<u32>>,
}

impl SegWord {
    pub fn new(segments: Vec<Vec<u32>>) -> Self {
        SegWord { segments }
    }

    pub fn segments(&self) -> &[Vec<u32>] {
        &self.segments
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.segments.iter().map(Vec::len).collect()
    }

    pub fn letters(&self) -> Vec<u32> {
        self.segments.concat()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.iter().all(Vec::is_empty)
    }
}

impl fmt::Display for SegWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.segments.iter().flatten().any(|&c| c > 9);
        let segs: Vec<String> = self
            .segments
            .iter()
            .map(|s| {
                let parts: Vec<String> = s.iter().map(u32::to_string).collect();
                parts.join(if wide { "," } else { "" })
            })
            .collect();
        write!(f, "{}", segs.join("|"))
    }
}

impl FromStr for SegWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("word {s:?}"));
        let s = s.trim();
        if s.is_empty() {
            return Ok(SegWord::default());
        }
        let segments = s
            .split('|')
            .map(|seg| {
                let seg = seg.trim();
                if seg.contains(',') {
                    seg.split(',').map(|t| t.trim().parse::<u32>().map_err(|_| bad())).collect()
                } else {
                    seg.chars().map(|c| c.to_digit(10).ok_or_else(bad)).collect()
                }
            })
            .collect::<Result<Vec<Vec<u32>>, Error>>()?;
        if segments.iter().flatten().any(|&c| c == 0) {
            return Err(bad());
        }
        Ok(SegWord { segments })
    }
}

/// Weakly decreasing segments of weakly decreasing lengths, with tail-aligned
/// letters strictly increasing from one segment to the next.
pub fn is_column_word(w: &SegWord) -> bool {
    let segs = &w.segments;
    if segs.iter().any(Vec::is_empty) {
        return false;
    }
    if !segs.iter().all(|s| s.windows(2).all(|p| p[0] >= p[1])) {
        return false;
    }
    segs.windows(2).all(|p| {
        let (a, b) = (&p[0], &p[1]);
        b.len() <= a.len() && (0..b.len()).all(|j| b[b.len() - 1 - j] > a[a.len() - 1 - j])
    })
}

/// Strictly increasing segments of weakly decreasing lengths, with tail-aligned
/// letters weakly decreasing from one segment to the next.
pub fn is_row_word(w: &SegWord) -> bool {
    let segs = &w.segments;
    if segs.iter().any(Vec::is_empty) {
        return false;
    }
    if !segs.iter().all(|s| s.windows(2).all(|p| p[0] < p[1])) {
        return false;
    }
    segs.windows(2).all(|p| {
        let (a, b) = (&p[0], &p[1]);
        b.len() <= a.len() && (0..b.len()).all(|j| b[b.len() - 1 - j] <= a[a.len() - 1 - j])
    })
}

/// Insert c into F. Returns the new filling and the cell that was created.
pub fn insert(f: &Ssaf, c: u32) -> Result<(Ssaf, Cell), Error> {
    let k = f.width();
    if c == 0 || c as usize > k {
        return Err(Error::LetterOutOfRange { letter: c, max: k });
    }
    let mut g = f.clone();
    let order = reading_order(&g.shape());
    let mut c = c;
    let mut start = 0;
    loop {
        let mut hit = None;
        for (idx, &cell) in order.iter().enumerate().skip(start) {
            let above = g.get(Cell::new(cell.column, cell.row + 1)).unwrap_or(0);
            let here = g.get(cell).unwrap();
            if above < c && c <= here {
                hit = Some((idx, cell));
                break;
            }
        }
        // the basement always offers a landing spot for c <= k
        let (idx, cell) = hit.expect("insertion found no cell");
        let col = &mut g.columns_mut()[cell.column];
        if cell.row == col.len() {
            col.push(c);
            return Ok((g, Cell::new(cell.column, cell.row + 1)));
        }
        std::mem::swap(&mut col[cell.row], &mut c);
        start = idx + 1;
    }
}

/// Insert the letters of w from left to right.
pub fn insert_word(f: &Ssaf, w: &[u32]) -> Result<Ssaf, Error> {
    let mut g = f.clone();
    for &c in w {
        g = insert(&g, c)?.0;
    }
    Ok(g)
}

/// F(w): w inserted into the empty filling over ε_n.
pub fn filling_of(w: &[u32], n: usize) -> Result<Ssaf, Error> {
    insert_word(&Ssaf::empty(Permutation::identity(n)), w)
}

pub fn row_word(f: &Ssaf) -> SegWord {
    SegWord::new(f.rows())
}

/// One twisted Knuth move on the window starting at `position` (0-based).
/// Variant 1: bac <-> bca when c <= b < a. Variant 2: acb <-> cab when c < b <= a.
pub fn twisted_knuth_step(w: &[u32], position: usize, variant: u8) -> Result<Vec<u32>, Error> {
    let miss = Error::PatternMismatch { position, variant };
    if position + 3 > w.len() {
        return Err(miss);
    }
    let (x, y, z) = (w[position], w[position + 1], w[position + 2]);
    let swapped = match variant {
        // bac -> bca, or bca -> bac
        1 if (z <= x && x < y) || (y <= x && x < z) => [x, z, y],
        // acb -> cab, or cab -> acb
        2 if (y < z && z <= x) || (x < z && z <= y) => [y, x, z],
        _ => return Err(miss),
    };
    let mut out = w.to_vec();
    out[position..position + 3].copy_from_slice(&swapped);
    Ok(out)
}

/// Every (position, variant) at which a move applies.
pub fn applicable_moves(w: &[u32]) -> Vec<(usize, u8)> {
    let mut out = Vec::new();
    for p in 0..w.len().saturating_sub(2) {
        for v in [1, 2] {
            if twisted_knuth_step(w, p, v).is_ok() {
                out.push((p, v));
            }
        }
    }
    out
}

/// Move the first letter of the last segment leftward through the others:
/// passing a weakly decreasing segment a, the carried letter b replaces a_t for
/// the first t with b > a_t, and a_t is carried on.
fn carry_left(segs: &mut [Vec<u32>]) -> Result<u32, Error> {
    let m = segs.len();
    let mut carry = segs[m - 1].remove(0);
    for j in (0..m - 1).rev() {
        let seg = &mut segs[j];
        let t = seg
            .iter()
            .position(|&a| carry > a)
            .ok_or_else(|| Error::NotColumnWord(format!("letter {carry} cannot pass {seg:?}")))?;
        std::mem::swap(&mut seg[t], &mut carry);
    }
    Ok(carry)
}

/// One extraction stage: the first row b_k1 < ... < b_11 of F(w), and what is
/// left of each segment (`tails[i]` is b_{i+1,2} ... b_{i+1,c_{i+1}}).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extraction {
    pub row: Vec<u32>,
    pub tails: Vec<Vec<u32>>,
}

impl Extraction {
    /// The residual column word, empty segments dropped.
    pub fn residual(&self) -> SegWord {
        SegWord::new(self.tails.iter().filter(|s| !s.is_empty()).cloned().collect())
    }

    /// "b_k1 ... b_21 | b_11 b_12 ... b_1c1 | b_22 ... | ...", the rewritten word
    /// with the first letters gathered in front.
    pub fn rewritten(&self) -> SegWord {
        let (b11, prefix) = self.row.split_last().expect("row is nonempty");
        let mut segs = Vec::new();
        if !prefix.is_empty() {
            segs.push(prefix.to_vec());
        }
        let mut first = vec![*b11];
        first.extend_from_slice(&self.tails[0]);
        segs.push(first);
        segs.extend(self.tails[1..].iter().filter(|s| !s.is_empty()).cloned());
        SegWord::new(segs)
    }

    /// "row | residual".
    pub fn staged(&self) -> SegWord {
        let mut segs = vec![self.row.clone()];
        segs.extend(self.residual().segments.iter().cloned());
        SegWord::new(segs)
    }
}

/// Pull the first row of F(w) out of a column word w.
pub fn extract_first_row(w: &SegWord) -> Result<Extraction, Error> {
    if !is_column_word(w) {
        return Err(Error::NotColumnWord(w.to_string()));
    }
    let mut work: Vec<Vec<u32>> = w.segments.clone();
    let k = work.len();
    let mut tails: Vec<Vec<u32>> = Vec::with_capacity(k);
    let mut row = Vec::with_capacity(k);
    for m in (1..=k).rev() {
        row.push(carry_left(&mut work[..m])?);
        tails.push(work.pop().unwrap());
    }
    tails.reverse();
    Ok(Extraction { row, tails })
}

/// Every extraction stage until the word is used up.
pub fn column_to_row_stages(w: &SegWord) -> Result<Vec<Extraction>, Error> {
    let mut out = Vec::new();
    let mut cur = w.clone();
    while !cur.is_empty() {
        let e = extract_first_row(&cur)?;
        cur = e.residual();
        out.push(e);
    }
    Ok(out)
}

/// The row word of F(w), computed by repeated extraction.
pub fn column_to_row(w: &SegWord) -> Result<SegWord, Error> {
    Ok(SegWord::new(column_to_row_stages(w)?.into_iter().map(|e| e.row).collect()))
}

/// Labels on the cells created during a biword insertion.
pub type RecordingTableau = BTreeMap<Cell, u32>;

/// Insert the lower letters of a biword and label each created cell with the
/// matching upper letter.
pub fn insert_with_recording(u: &Ssaf, biword: &[(u32, u32)]) -> Result<(Ssaf, RecordingTableau), Error> {
    let mut g = u.clone();
    let mut rec = RecordingTableau::new();
    for &(label, c) in biword {
        let (h, cell) = insert(&g, c)?;
        rec.insert(cell, label);
        g = h;
    }
    Ok((g, rec))
}

/// The biword W of a column word: segment i (1-based) gets upper label k + 1 - i.
pub fn column_biword(w: &SegWord) -> Vec<(u32, u32)> {
    let k = w.segments.len() as u32;
    w.segments.iter().enumerate().flat_map(|(i, s)| s.iter().map(move |&c| (k - i as u32, c))).collect()
}

/// The biword of a row word: row r (1-based, bottom up) gets upper label r.
pub fn row_biword(rows: &SegWord) -> Vec<(u32, u32)> {
    rows.segments.iter().enumerate().flat_map(|(r, s)| s.iter().map(move |&c| (r as u32 + 1, c))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> SegWord {
        s.parse().unwrap()
    }

    const EX7: &str = "886531|97643|9764|5|6";

    #[test]
    fn example_seven_insertion() {
        let f = filling_of(&w(EX7).letters(), 9).unwrap();
        assert!(f.validate());
        assert_eq!(f.shape(), vec![1, 0, 1, 0, 0, 4, 0, 6, 5]);
        assert_eq!(row_word(&f).to_string(), "13689|589|467|357|46|6");
    }

    #[test]
    fn example_eighteen_shape() {
        let u = Ssaf::dominant(&[4, 3, 3, 2, 2, 2, 1, 0, 0]);
        let word = w(EX7);
        let (f, rec) = insert_with_recording(&u, &column_biword(&word)).unwrap();
        assert_eq!(f.shape(), vec![5, 3, 5, 2, 4, 6, 1, 6, 2]);
        assert_eq!(rec.len(), 17);
        assert!(rec.keys().all(|c| c.row as u32 > [4, 3, 3, 2, 2, 2, 1, 0, 0][c.column]));
    }

    #[test]
    fn single_letters() {
        let (f, cell) = insert(&Ssaf::empty(Permutation::identity(9)), 8).unwrap();
        assert_eq!(cell, Cell::new(7, 1));
        assert_eq!(f.columns()[7], vec![8]);
        assert!(insert(&f, 10).is_err());
        assert!(row_word(&Ssaf::empty(Permutation::identity(3))).is_empty());
        let g = filling_of(&[5, 3, 1], 5).unwrap();
        assert_eq!(row_word(&g).to_string(), "5|3|1");
    }

    #[test]
    fn word_predicates() {
        assert!(is_column_word(&w(EX7)));
        assert!(is_column_word(&w("987543|9654|766")));
        assert!(!is_column_word(&w("12|3")));
        assert!(is_row_word(&w("13689|589|467|357|46|6")));
    }

    #[test]
    fn extraction_goldens() {
        let stages = column_to_row_stages(&w(EX7)).unwrap();
        assert_eq!(stages[0].rewritten().to_string(), "1368|987543|9654|766");
        assert_eq!(stages[0].residual().to_string(), "87543|9654|766");
        let later: Vec<String> = stages[2..].iter().map(|e| e.staged().to_string()).collect();
        assert_eq!(later, ["467|753|64|6", "357|64|6", "46|6", "6"]);
        assert_eq!(stages[1].staged().to_string(), "589|7643|754|66");
        assert_eq!(column_to_row(&w(EX7)).unwrap().to_string(), "13689|589|467|357|46|6");
        assert!(column_to_row(&w("12|3")).is_err());
    }

    #[test]
    fn knuth_moves() {
        assert_eq!(twisted_knuth_step(&[2, 3, 1], 0, 1).unwrap(), vec![2, 1, 3]);
        assert_eq!(twisted_knuth_step(&[2, 1, 3], 0, 1).unwrap(), vec![2, 3, 1]);
        assert_eq!(twisted_knuth_step(&[3, 1, 2], 0, 2).unwrap(), vec![1, 3, 2]);
        assert!(twisted_knuth_step(&[2, 3, 1], 0, 2).is_err());
        assert!(twisted_knuth_step(&[1, 2], 0, 1).is_err());
    }

    #[test]
    fn text_form() {
        assert_eq!(w(EX7).to_string(), EX7);
        assert_eq!(SegWord::new(vec![vec![12, 3], vec![4]]).to_string(), "12,3|4");
        assert_eq!(w("12,3|4").segments(), &[vec![12, 3], vec![4]]);
    }
}
