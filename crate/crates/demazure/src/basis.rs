//! Expansion in the atom and key bases.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::poly::Polynomial;
use crate::shape::{self, Composition};
use crate::ssaf;

type Cache = RwLock<HashMap<Composition, Arc<Polynomial>>>;

fn cached(cache: &'static OnceLock<Cache>, key: &[u32], make: impl FnOnce() -> Polynomial) -> Arc<Polynomial> {
    let cache = cache.get_or_init(Default::default);
    if let Some(p) = cache.read().unwrap().get(key) {
        return p.clone();
    }
    let p = Arc::new(make());
    cache.write().unwrap().entry(key.to_vec()).or_insert(p).clone()
}

/// A_α in `alpha.len()` variables (operator route, memoised).
pub fn atom(alpha: &[u32]) -> Arc<Polynomial> {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    cached(&CACHE, alpha, || ssaf::atom_by_operators(alpha))
}

/// κ_γ in `gamma.len()` variables (operator route, memoised).
pub fn key(gamma: &[u32]) -> Arc<Polynomial> {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    cached(&CACHE, gamma, || ssaf::key_by_operators(gamma))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Atom,
    Key,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Atom => "atom",
            Basis::Key => "key",
        })
    }
}

/// Integer coefficients on atoms A_β or keys κ_γ, indexed by compositions of
/// length `nvars`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub basis: Basis,
    pub nvars: usize,
    pub coeffs: BTreeMap<Composition, i64>,
}

impl Expansion {
    fn new(basis: Basis, nvars: usize) -> Self {
        Expansion { basis, nvars, coeffs: BTreeMap::new() }
    }

    fn add(&mut self, beta: Composition, c: i64) {
        let v = {
            let slot = self.coeffs.entry(beta.clone()).or_insert(0);
            *slot += c;
            *slot
        };
        if v == 0 {
            self.coeffs.remove(&beta);
        }
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }

    /// Smallest coefficient, 0 for the empty expansion.
    pub fn min_coeff(&self) -> i64 {
        self.coeffs.values().copied().min().unwrap_or(0)
    }

    /// Σ c_β · (A_β or κ_β).
    pub fn reconstruct(&self) -> Polynomial {
        let mut p = Polynomial::zero(self.nvars);
        for (b, &c) in &self.coeffs {
            let q = match self.basis {
                Basis::Atom => atom(b),
                Basis::Key => key(b),
            };
            p = p.add_scaled(&q, c);
        }
        p
    }
}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let letter = match self.basis {
            Basis::Atom => "A",
            Basis::Key => "K",
        };
        for (i, (b, &c)) in self.coeffs.iter().enumerate() {
            let body = if c.abs() == 1 {
                format!("{letter}{}", shape::fmt_comp(b))
            } else {
                format!("{}*{letter}{}", c.abs(), shape::fmt_comp(b))
            };
            match (i, c < 0) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

/// Greedy peeling: the largest degree, then the lexicographically largest sorted
/// exponent, picks a monomial x^β whose coefficient is exactly that of A_β.
/// Falls back to the linear solve if the loop ever runs away.
pub fn expand_atoms(f: &Polynomial, nvars: usize) -> Expansion {
    let mut rest = f.with_nvars(nvars);
    let mut out = Expansion::new(Basis::Atom, nvars);
    let cap = 1_000_000;
    let mut steps = 0;
    while !rest.is_zero() {
        steps += 1;
        if steps > cap {
            return expand_atoms_solve(f, nvars);
        }
        let (beta, c) = rest
            .terms()
            .max_by(|(a, _), (b, _)| {
                let (da, db) = (shape::size(a), shape::size(b));
                da.cmp(&db).then_with(|| shape::sort_desc(a).cmp(&shape::sort_desc(b))).then_with(|| a.cmp(b))
            })
            .map(|(e, c)| (e.clone(), c))
            .unwrap();
        rest = rest.add_scaled(&atom(&beta), -c);
        out.add(beta, c);
    }
    out
}

/// Exact expansion by solving, per degree, the square system of monomial
/// coefficients against all atoms of that degree.
pub fn expand_atoms_solve(f: &Polynomial, nvars: usize) -> Expansion {
    let f = f.with_nvars(nvars);
    let mut out = Expansion::new(Basis::Atom, nvars);
    let mut degrees: Vec<u32> = f.terms().map(|(e, _)| shape::size(e)).collect();
    degrees.sort_unstable();
    degrees.dedup();
    for d in degrees {
        let monos = shape::compositions(nvars, d);
        let index: HashMap<&Composition, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let n = monos.len();
        // augmented matrix: row = monomial, column = atom
        let mut m: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); n + 1]; n];
        for (j, b) in monos.iter().enumerate() {
            for (e, c) in atom(b).terms() {
                m[index[e]][j] = BigRational::from_integer(BigInt::from(c));
            }
        }
        for (i, e) in monos.iter().enumerate() {
            m[i][n] = BigRational::from_integer(BigInt::from(f.coeff(e)));
        }
        let x = gauss_solve(m);
        for (j, v) in x.into_iter().enumerate() {
            assert!(v.is_integer(), "atom coefficients are integers");
            let c = v.to_integer().to_i64().expect("coefficient fits in i64");
            if c != 0 {
                out.add(monos[j].clone(), c);
            }
        }
    }
    out
}

fn gauss_solve(mut m: Vec<Vec<BigRational>>) -> Vec<BigRational> {
    let n = m.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero()).expect("atoms form a basis");
        m.swap(col, piv);
        let inv = BigRational::one() / m[col][col].clone();
        for v in m[col].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (v, p) in m[r].iter_mut().zip(&pivot_row).skip(col) {
                    *v = v.clone() - p.clone() * factor.clone();
                }
            }
        }
    }
    m.into_iter().map(|row| row[n].clone()).collect()
}

/// {β in the rearrangement class of γ : ω_β <= ω_γ}, so that κ_γ = Σ A_β.
pub fn key_atom_support(gamma: &[u32]) -> Vec<Composition> {
    let top = shape::omega(gamma);
    shape::rearrangements(gamma).into_iter().filter(|b| shape::omega(b).bruhat_leq(&top)).collect()
}

/// Invert κ_γ = Σ_{β in support(γ)} A_β class by class, peeling the atom whose ω
/// is longest.
pub fn atoms_to_keys(e: &Expansion) -> Expansion {
    assert_eq!(e.basis, Basis::Atom);
    let mut rest = e.coeffs.clone();
    let mut out = Expansion::new(Basis::Key, e.nvars);
    while let Some(beta) = rest.keys().max_by_key(|b| (shape::omega(b).length(), (*b).clone())).cloned() {
        let c = rest[&beta];
        for b in key_atom_support(&beta) {
            let v = {
                let slot = rest.entry(b.clone()).or_insert(0);
                *slot -= c;
                *slot
            };
            if v == 0 {
                rest.remove(&b);
            }
        }
        out.add(beta, c);
    }
    out
}

pub fn expand_keys(f: &Polynomial, nvars: usize) -> Expansion {
    atoms_to_keys(&expand_atoms(f, nvars))
}

pub fn is_atom_positive(f: &Polynomial, nvars: usize) -> bool {
    expand_atoms(f, nvars).is_positive()
}

pub fn is_key_positive(f: &Polynomial, nvars: usize) -> bool {
    expand_keys(f, nvars).is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comps(v: &[&[u32]]) -> Vec<Composition> {
        v.iter().map(|c| c.to_vec()).collect()
    }

    #[test]
    fn expansion_examples() {
        let e = expand_atoms(&Polynomial::monomial(&[3, 1, 0]), 3);
        assert_eq!(e.coeffs, BTreeMap::from([(vec![3, 1, 0], 1)]));
        let e = expand_atoms(&key(&[3, 0, 1]), 3);
        assert_eq!(e.coeffs, BTreeMap::from([(vec![3, 1, 0], 1), (vec![3, 0, 1], 1)]));
        assert!(expand_atoms(&Polynomial::zero(3), 3).coeffs.is_empty());
        assert_eq!(expand_atoms_solve(&key(&[3, 0, 1]), 3), expand_atoms(&key(&[3, 0, 1]), 3));
    }

    #[test]
    fn support_examples() {
        assert_eq!(key_atom_support(&[3, 1, 0]), comps(&[&[3, 1, 0]]));
        let mut s = key_atom_support(&[3, 0, 1]);
        s.sort();
        assert_eq!(s, comps(&[&[3, 0, 1], &[3, 1, 0]]));
        assert_eq!(key_atom_support(&[0, 1, 3]).len(), 6);
    }

    #[test]
    fn atom_to_key() {
        let e = expand_keys(&atom(&[0, 1]), 2);
        assert_eq!(e.coeffs, BTreeMap::from([(vec![0, 1], 1), (vec![1, 0], -1)]));
        assert_eq!(e.to_string(), "K(0,1) - K(1,0)");
        let e = expand_keys(&atom(&[2, 1, 0]), 3);
        assert_eq!(e.coeffs, BTreeMap::from([(vec![2, 1, 0], 1)]));
    }

    #[test]
    fn keys_are_sums_of_atoms() {
        for total in 0..=4 {
            for g in shape::compositions(3, total) {
                let mut sum = Polynomial::zero(3);
                for b in key_atom_support(&g) {
                    sum = sum.add(&atom(&b));
                }
                assert_eq!(sum, *key(&g), "gamma = {g:?}");
            }
        }
    }
}
