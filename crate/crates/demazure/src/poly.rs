//! Sparse integer polynomials and the operators ∂_i, π_i, θ_i, s_i.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::perm::Permutation;
use crate::Error;

/// Finitely supported map from exponent vectors (all of length `nvars`) to nonzero
/// integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OperatorKind {
    Partial,
    Pi,
    Theta,
    Swap,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::term(&vec![0; nvars], 1)
    }

    /// x^a in `a.len()` variables.
    pub fn monomial(a: &[u32]) -> Self {
        Self::term(a, 1)
    }

    pub fn term(a: &[u32], c: i64) -> Self {
        let mut p = Polynomial::zero(a.len());
        if c != 0 {
            p.terms.insert(a.to_vec(), c);
        }
        p
    }

    /// The variable x_j (1-based) in max(nvars, j) variables.
    pub fn var(j: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars.max(j)];
        e[j - 1] = 1;
        Self::monomial(&e)
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, i64)>>(nvars: usize, terms: I) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, i64)> + '_ {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn coeff(&self, e: &[u32]) -> i64 {
        if e.len() == self.nvars {
            self.terms.get(e).copied().unwrap_or(0)
        } else {
            let mut k = e.to_vec();
            k.resize(self.nvars, 0);
            if e.len() > self.nvars && e[self.nvars..].iter().any(|&x| x != 0) {
                return 0;
            }
            self.terms.get(&k).copied().unwrap_or(0)
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn min_coeff(&self) -> Option<i64> {
        self.terms.values().copied().min()
    }

    /// Add c·x^e, growing nvars if e is longer.
    pub fn add_term(&mut self, mut e: Vec<u32>, c: i64) {
        if c == 0 {
            return;
        }
        if e.len() > self.nvars {
            self.grow(e.len());
        }
        e.resize(self.nvars, 0);
        let v = {
            let slot = self.terms.entry(e.clone()).or_insert(0);
            *slot += c;
            *slot
        };
        if v == 0 {
            self.terms.remove(&e);
        }
    }

    fn grow(&mut self, n: usize) {
        if n <= self.nvars {
            return;
        }
        let old = std::mem::take(&mut self.terms);
        self.terms = old
            .into_iter()
            .map(|(mut e, c)| {
                e.resize(n, 0);
                (e, c)
            })
            .collect();
        self.nvars = n;
    }

    /// Change the ambient variable count. Shrinking is allowed only when the dropped
    /// variables do not occur.
    pub fn with_nvars(&self, n: usize) -> Self {
        let mut p = self.clone();
        if n >= self.nvars {
            p.grow(n);
            return p;
        }
        assert!(self.terms.keys().all(|e| e[n..].iter().all(|&x| x == 0)), "cannot drop variables that occur");
        p.terms = self.terms.iter().map(|(e, &c)| (e[..n].to_vec(), c)).collect();
        p.nvars = n;
        p
    }

    /// Smallest nvars that still holds every term.
    pub fn used_vars(&self) -> usize {
        self.terms.keys().map(|e| e.iter().rposition(|&x| x != 0).map_or(0, |i| i + 1)).max().unwrap_or(0)
    }

    pub fn add(&self, g: &Polynomial) -> Polynomial {
        self.add_scaled(g, 1)
    }

    pub fn sub(&self, g: &Polynomial) -> Polynomial {
        self.add_scaled(g, -1)
    }

    /// self + c·g
    pub fn add_scaled(&self, g: &Polynomial, c: i64) -> Polynomial {
        let n = self.nvars.max(g.nvars);
        let mut out = self.with_nvars(n);
        if c == 0 {
            return out;
        }
        for (e, &v) in &g.terms {
            let mut e = e.clone();
            e.resize(n, 0);
            let slot = out.terms.entry(e.clone()).or_insert(0);
            *slot += c * v;
            if *slot == 0 {
                out.terms.remove(&e);
            }
        }
        out
    }

    pub fn scale(&self, c: i64) -> Polynomial {
        if c == 0 {
            return Polynomial::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(e, &v)| (e.clone(), v * c)).collect() }
    }

    pub fn mul(&self, g: &Polynomial) -> Polynomial {
        let n = self.nvars.max(g.nvars);
        let mut acc: std::collections::HashMap<Vec<u32>, i64> = std::collections::HashMap::new();
        for (a, &c) in &self.terms {
            for (b, &d) in &g.terms {
                let e: Vec<u32> =
                    (0..n).map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)).collect();
                *acc.entry(e).or_insert(0) += c * d;
            }
        }
        Polynomial { nvars: n, terms: acc.into_iter().filter(|&(_, c)| c != 0).collect() }
    }

    /// Multiply by x^a.
    pub fn shift(&self, a: &[u32]) -> Polynomial {
        let n = self.nvars.max(a.len());
        let p = self.with_nvars(n);
        let terms = p
            .terms
            .into_iter()
            .map(|(mut e, c)| {
                for (x, y) in e.iter_mut().zip(a) {
                    *x += y;
                }
                (e, c)
            })
            .collect();
        Polynomial { nvars: n, terms }
    }

    fn map_terms<F>(&self, nvars: usize, mut f: F) -> Polynomial
    where
        F: FnMut(&[u32], i64, &mut dyn FnMut(Vec<u32>, i64)),
    {
        let p = self.with_nvars(nvars);
        let mut acc: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
        for (e, &c) in &p.terms {
            f(e, c, &mut |e2, c2| *acc.entry(e2).or_insert(0) += c2);
        }
        acc.retain(|_, c| *c != 0);
        Polynomial { nvars: p.nvars, terms: acc }
    }

    /// s_i: exchange the exponents of x_i and x_{i+1}.
    pub fn swap(&self, i: usize) -> Polynomial {
        self.map_terms(self.nvars.max(i + 1), |e, c, emit| {
            let mut e = e.to_vec();
            e.swap(i - 1, i);
            emit(e, c)
        })
    }

    /// ∂_i = (1 - s_i)/(x_i - x_{i+1}), termwise on x_i^a x_{i+1}^b.
    pub fn partial(&self, i: usize) -> Polynomial {
        self.map_terms(self.nvars.max(i + 1), |e, c, emit| {
            let (a, b) = (e[i - 1], e[i]);
            let (hi, lo, sign) = if a > b { (a, b, 1) } else { (b, a, -1) };
            for t in 0..hi.saturating_sub(lo) {
                let mut f = e.to_vec();
                f[i - 1] = hi - 1 - t;
                f[i] = lo + t;
                emit(f, sign * c);
            }
        })
    }

    /// π_i = ∂_i x_i
    pub fn pi(&self, i: usize) -> Polynomial {
        let n = self.nvars.max(i + 1);
        let mut e = vec![0; n];
        e[i - 1] = 1;
        self.shift(&e).partial(i)
    }

    /// θ_i = x_{i+1} ∂_i
    pub fn theta(&self, i: usize) -> Polynomial {
        let n = self.nvars.max(i + 1);
        let mut e = vec![0; n];
        e[i] = 1;
        self.partial(i).shift(&e)
    }

    pub fn apply(&self, kind: OperatorKind, i: usize) -> Polynomial {
        match kind {
            OperatorKind::Partial => self.partial(i),
            OperatorKind::Pi => self.pi(i),
            OperatorKind::Theta => self.theta(i),
            OperatorKind::Swap => self.swap(i),
        }
    }

    /// Apply the word i_1 i_2 ... i_k as the operator product O_{i_1} ... O_{i_k},
    /// so the rightmost letter acts first.
    pub fn apply_word(&self, kind: OperatorKind, word: &[usize]) -> Polynomial {
        let mut f = self.clone();
        for &i in word.iter().rev() {
            f = f.apply(kind, i);
        }
        f
    }

    /// O_p for a permutation p, through its bubble-sort reduced word.
    pub fn apply_perm(&self, kind: OperatorKind, p: &Permutation) -> Polynomial {
        self.apply_word(kind, &p.some_reduced_word())
    }
}

fn fmt_monomial(e: &[u32]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &x)| x > 0)
        .map(|(i, &x)| if x == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, x) })
        .collect();
    parts.join("*")
}

impl Polynomial {
    /// Terms in display order: higher degree first, then lexicographically larger
    /// exponent vectors first.
    pub fn sorted_terms(&self) -> Vec<(&Vec<u32>, i64)> {
        let mut v: Vec<(&Vec<u32>, i64)> = self.terms().collect();
        v.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        v
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let mono = fmt_monomial(e);
            let mag = c.unsigned_abs();
            let body = match (mono.is_empty(), mag) {
                (true, _) => mag.to_string(),
                (false, 1) => mono,
                (false, _) => format!("{mag}*{mono}"),
            };
            match (k, c < 0) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    /// Parses the display form, e.g. "x1^2*x2 - 3*x3 + 1". Implicit products
    /// ("x1x2") are accepted too.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = |why: &str| Error::Parse(format!("polynomial {s:?}: {why}"));
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(bad("empty"));
        }
        let mut p = Polynomial::zero(0);
        let mut pos = 0;
        let number = |pos: &mut usize| -> Option<u64> {
            let start = *pos;
            while *pos < chars.len() && chars[*pos].is_ascii_digit() {
                *pos += 1;
            }
            (start < *pos).then(|| chars[start..*pos].iter().collect::<String>().parse().ok()).flatten()
        };
        while pos < chars.len() {
            let mut sign = 1i64;
            while pos < chars.len() && (chars[pos] == '+' || chars[pos] == '-') {
                if chars[pos] == '-' {
                    sign = -sign;
                }
                pos += 1;
            }
            let mut coeff = sign;
            let mut e: Vec<u32> = Vec::new();
            let mut any = false;
            loop {
                if pos < chars.len() && chars[pos].is_ascii_digit() {
                    let v = number(&mut pos).ok_or_else(|| bad("number"))?;
                    coeff *= v as i64;
                    any = true;
                } else if pos < chars.len() && chars[pos] == 'x' {
                    pos += 1;
                    let j = number(&mut pos).ok_or_else(|| bad("variable index"))? as usize;
                    if j == 0 {
                        return Err(bad("variables are 1-based"));
                    }
                    let mut pow = 1u32;
                    if pos < chars.len() && chars[pos] == '^' {
                        pos += 1;
                        pow = number(&mut pos).ok_or_else(|| bad("exponent"))? as u32;
                    }
                    if e.len() < j {
                        e.resize(j, 0);
                    }
                    e[j - 1] += pow;
                    any = true;
                } else {
                    break;
                }
                if pos < chars.len() && chars[pos] == '*' {
                    pos += 1;
                }
            }
            if !any {
                return Err(bad("expected a term"));
            }
            p.add_term(e, coeff);
            if pos < chars.len() && chars[pos] != '+' && chars[pos] != '-' {
                return Err(bad("unexpected character"));
            }
        }
        Ok(p)
    }
}
