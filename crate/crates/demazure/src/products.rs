//! Products of atoms and keys, θ-decompositions in three variables, the closed
//! product formulas and the positivity sweeps.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::basis::{self, Basis, Expansion};
use crate::exec::Exec;
use crate::perm::Permutation;
use crate::poly::{OperatorKind, Polynomial};
use crate::shape::{self, Composition};
use crate::Error;

pub fn product_expand(f: &Polynomial, g: &Polynomial, target: Basis, nvars: usize) -> Expansion {
    let p = f.mul(g);
    match target {
        Basis::Atom => basis::expand_atoms(&p, nvars),
        Basis::Key => basis::expand_keys(&p, nvars),
    }
}

/// Elements of S_3 named by a reduced word; θ_I applies the rightmost letter first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ThetaIndex {
    Id,
    S1,
    S2,
    S12,
    S21,
    S121,
}

impl ThetaIndex {
    pub const ALL: [ThetaIndex; 6] =
        [ThetaIndex::Id, ThetaIndex::S1, ThetaIndex::S2, ThetaIndex::S12, ThetaIndex::S21, ThetaIndex::S121];

    pub fn word(self) -> &'static [usize] {
        match self {
            ThetaIndex::Id => &[],
            ThetaIndex::S1 => &[1],
            ThetaIndex::S2 => &[2],
            ThetaIndex::S12 => &[1, 2],
            ThetaIndex::S21 => &[2, 1],
            ThetaIndex::S121 => &[1, 2, 1],
        }
    }

    pub fn perm(self) -> Permutation {
        Permutation::from_word(self.word(), 3)
    }

    /// Works for either reduced word of the longest element.
    pub fn of_perm(p: &Permutation) -> Option<ThetaIndex> {
        let p = p.padded(3);
        ThetaIndex::ALL.into_iter().find(|t| t.perm() == p)
    }

    /// θ_I f
    pub fn apply(self, f: &Polynomial) -> Polynomial {
        f.apply_word(OperatorKind::Theta, self.word())
    }
}

impl fmt::Display for ThetaIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: String = self.word().iter().map(|i| i.to_string()).collect();
        if w.is_empty() {
            f.write_str("id")
        } else {
            f.write_str(&w)
        }
    }
}

/// f = Σ_I θ_I(component_I), every component supported on partitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaDecomposition {
    pub components: BTreeMap<ThetaIndex, Polynomial>,
}

impl ThetaDecomposition {
    pub fn component(&self, i: ThetaIndex) -> Polynomial {
        self.components.get(&i).cloned().unwrap_or_else(|| Polynomial::zero(3))
    }

    pub fn reconstruct(&self) -> Polynomial {
        let mut p = Polynomial::zero(3);
        for (i, c) in &self.components {
            p = p.add(&i.apply(c));
        }
        p
    }
}

/// Regroup the atom expansion: A_β = θ_{ω_β^{-1}} x^{sort(β)} contributes to the
/// component of ω_β^{-1}.
pub fn theta_decompose(f: &Polynomial) -> Result<ThetaDecomposition, Error> {
    if f.used_vars() > 3 {
        return Err(Error::WrongVariableCount { expected: 3, got: f.used_vars() });
    }
    let e = basis::expand_atoms(f, 3);
    let mut components: BTreeMap<ThetaIndex, Polynomial> = BTreeMap::new();
    for (b, c) in e.coeffs {
        let idx = ThetaIndex::of_perm(&shape::omega(&b).inverse()).expect("S_3 element");
        components.entry(idx).or_insert_with(|| Polynomial::zero(3)).add_term(shape::sort_desc(&b), c);
    }
    components.retain(|_, p| !p.is_zero());
    Ok(ThetaDecomposition { components })
}

/// s_λ in `nvars` variables, as the key of the reversed partition.
pub fn schur(lam: &[u32], nvars: usize) -> Polynomial {
    let lam = shape::padded(lam, nvars);
    (*basis::key(&shape::reverse(&lam))).clone()
}

pub fn key_times_schur(gamma: &[u32], lam: &[u32]) -> Expansion {
    let n = gamma.len();
    product_expand(&basis::key(gamma), &schur(lam, n), Basis::Key, n)
}

/// Exponent parameters of x1^m x2^n and x1^k x2^l.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ClosedFormParams {
    pub m: u32,
    pub n: u32,
    pub k: u32,
    pub l: u32,
}

impl ClosedFormParams {
    pub fn new(m: u32, n: u32, k: u32, l: u32) -> Result<Self, Error> {
        if m < n || k < l {
            return Err(Error::BadParams { m, n, k, l });
        }
        Ok(ClosedFormParams { m, n, k, l })
    }

    /// Every tuple with 0 <= n <= m <= max and 0 <= l <= k <= max.
    pub fn grid(max: u32) -> Vec<ClosedFormParams> {
        let mut out = Vec::new();
        for m in 0..=max {
            for n in 0..=m {
                for k in 0..=max {
                    for l in 0..=k {
                        out.push(ClosedFormParams { m, n, k, l });
                    }
                }
            }
        }
        out
    }

    fn mu(&self) -> Polynomial {
        Polynomial::monomial(&[self.m, self.n, 0])
    }

    fn lam(&self) -> Polynomial {
        Polynomial::monomial(&[self.k, self.l, 0])
    }
}

impl fmt::Display for ClosedFormParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.m, self.n, self.k, self.l)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ClosedForm {
    /// π_1(x1^m x2^n) · π_2(x1^k x2^l)
    Pi1Pi2,
    /// π_1(x1^m x2^n) · π_21(x1^k x2^l)
    Pi1Pi21,
    /// π_2(x1^m x2^n) · π_12(x1^k x2^l)
    Pi2Pi12,
    /// π_12(x1^m x2^n) · π_21(x1^k x2^l)
    Pi12Pi21,
}

impl ClosedForm {
    pub const ALL: [ClosedForm; 4] =
        [ClosedForm::Pi1Pi2, ClosedForm::Pi1Pi21, ClosedForm::Pi2Pi12, ClosedForm::Pi12Pi21];

    fn words(self) -> (&'static [usize], &'static [usize]) {
        match self {
            ClosedForm::Pi1Pi2 => (&[1], &[2]),
            ClosedForm::Pi1Pi21 => (&[1], &[2, 1]),
            ClosedForm::Pi2Pi12 => (&[2], &[1, 2]),
            ClosedForm::Pi12Pi21 => (&[1, 2], &[2, 1]),
        }
    }

    /// The product computed directly with the operators.
    pub fn oracle(self, p: ClosedFormParams) -> Polynomial {
        let (a, b) = self.words();
        let f = p.mu().apply_word(OperatorKind::Pi, a).with_nvars(3);
        let g = p.lam().apply_word(OperatorKind::Pi, b).with_nvars(3);
        f.mul(&g)
    }

    pub fn evaluate(self, p: ClosedFormParams) -> Polynomial {
        match self {
            ClosedForm::Pi1Pi2 => closed_form_pi1_pi2(p),
            ClosedForm::Pi1Pi21 => closed_form_pi1_pi21(p),
            ClosedForm::Pi2Pi12 => closed_form_pi2_pi12(p),
            ClosedForm::Pi12Pi21 => closed_form_pi12_pi21(p),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ClosedForm::Pi1Pi2 => "pi1*pi2",
            ClosedForm::Pi1Pi21 => "pi1*pi21",
            ClosedForm::Pi2Pi12 => "pi2*pi12",
            ClosedForm::Pi12Pi21 => "pi12*pi21",
        }
    }
}

fn x3(a: i64, b: i64, c: i64) -> Polynomial {
    assert!(a >= 0 && b >= 0 && c >= 0, "negative exponent ({a},{b},{c})");
    Polynomial::monomial(&[a as u32, b as u32, c as u32])
}

fn th(i: ThetaIndex, f: &Polynomial) -> Polynomial {
    i.apply(f).with_nvars(3)
}

/// Keep only the terms with partition exponents.
fn dominant_part(f: &Polynomial) -> Polynomial {
    Polynomial::from_terms(3, f.terms().filter(|(e, _)| shape::is_partition(e)).map(|(e, c)| (e.clone(), c)))
}

fn upper_decomposition(p: ClosedFormParams) -> ThetaDecomposition {
    let key = p.lam().apply_word(OperatorKind::Pi, &[1, 2, 1]).with_nvars(3);
    theta_decompose(&p.mu().with_nvars(3).mul(&key)).expect("three variables")
}

pub fn closed_form_pi1_pi2(p: ClosedFormParams) -> Polynomial {
    let (m, n, k, l) = (p.m as i64, p.n as i64, p.k as i64, p.l as i64);
    let mut out = Polynomial::zero(3);
    for s in 0..=(m - n).min(k) {
        for t in 0.max(s - (k - l))..=l.min(s + n) {
            out = out.add(&x3(m + k - s, n + l + s - t, t));
        }
    }
    if m - n > k - l {
        for t in 0..=l.min((m - n) - (k - l)) {
            out = out.add(&th(ThetaIndex::S1, &x3(m + l - t, k + n, t)));
        }
    }
    if l > n {
        for s in 0..=(l - n).min(m - n) {
            out = out.add(&th(ThetaIndex::S2, &x3(m + k - s, l, n + s)));
        }
    }
    out
}

/// The θ_1 and θ_12 sums run over partition exponents only.
pub fn closed_form_pi1_pi21(p: ClosedFormParams) -> Polynomial {
    let (m, n, k, l) = (p.m as i64, p.n as i64, p.k as i64, p.l as i64);
    let a = upper_decomposition(p);
    let mut out = a
        .component(ThetaIndex::Id)
        .add(&th(ThetaIndex::S2, &a.component(ThetaIndex::S2)))
        .add(&th(ThetaIndex::S21, &a.component(ThetaIndex::S21)));
    let mut s1 = Polynomial::zero(3);
    for r in 0..=m.min(k) {
        for s in 0.max(r - (n + l))..=r.min(m - n).min(k - l) {
            s1 = s1.add(&x3(m + k - r, n + l + s, r - s));
        }
    }
    out = out.add(&th(ThetaIndex::S1, &dominant_part(&s1)));
    if m.min(k) >= n + l {
        let mut s12 = Polynomial::zero(3);
        for r in n + l + 1..=m.min(k) {
            s12 = s12.add(&x3(m + k - r, r, n + l));
        }
        out = out.add(&th(ThetaIndex::S12, &dominant_part(&s12)));
    }
    if k > m && m > n + l {
        out = out.add(&th(ThetaIndex::S121, &x3(k, m, n + l)));
    }
    out
}

pub fn closed_form_pi2_pi12(p: ClosedFormParams) -> Polynomial {
    let (m, n, k, l) = (p.m as i64, p.n as i64, p.k as i64, p.l as i64);
    let a = upper_decomposition(p);
    let mut out = a
        .component(ThetaIndex::Id)
        .add(&th(ThetaIndex::S1, &a.component(ThetaIndex::S1)))
        .add(&th(ThetaIndex::S12, &a.component(ThetaIndex::S12)));
    for r in 0..=m.min(k) {
        let lo = l.max(n).max(r).max(n + l - r);
        for s in lo..=(n + l).min(m + k - r) {
            out = out.add(&th(ThetaIndex::S2, &x3(m + k + n + l - s - r, s, r)));
        }
    }
    if n + l >= m.max(k) {
        for r in m + k - n - l..=m.min(k) {
            out = out.add(&th(ThetaIndex::S21, &x3(n + l, m + k - r, r)));
        }
    }
    if n + l > k && k > m {
        out = out.add(&th(ThetaIndex::S121, &x3(n + l, k, m)));
    }
    out
}

/// A_0 and A_1 come from x^μ·π_121 x^λ, A_2 from the swapped product x^λ·π_121 x^μ,
/// and the θ_121 sum is gated by 1{k+n > m > l}.
pub fn closed_form_pi12_pi21(p: ClosedFormParams) -> Polynomial {
    let (m, n, k, l) = (p.m as i64, p.n as i64, p.k as i64, p.l as i64);
    let a = upper_decomposition(p);
    let swapped = upper_decomposition(ClosedFormParams { m: p.k, n: p.l, k: p.m, l: p.n });
    let a0 = a.component(ThetaIndex::Id);
    let mut out = a0
        .add(&th(ThetaIndex::S1, &a0))
        .add(&th(ThetaIndex::S2, &a0))
        .add(&th(ThetaIndex::S21, &a.component(ThetaIndex::S1)))
        .add(&th(ThetaIndex::S12, &swapped.component(ThetaIndex::S2)));
    if k + n > m && m > l {
        let mut s = Polynomial::zero(3);
        for t in 0..=(k - l).min(n) {
            s = s.add(&x3(k + n - t, m, l + t));
        }
        out = out.add(&th(ThetaIndex::S121, &dominant_part(&s)));
    }
    out
}

/// Split off common rows: (r, α - (r,r,r)) with r the smallest part.
pub fn reduce_common_rows(alpha: &[u32]) -> (u32, Composition) {
    let r = alpha.iter().copied().min().unwrap_or(0);
    (r, alpha.iter().map(|&a| a - r).collect())
}

/// One line of a sweep run record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseRecord {
    pub params: String,
    pub basis: String,
    pub min_coeff: i64,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub kind: String,
    pub total_cases: usize,
    pub counterexamples: Vec<String>,
    #[serde(skip)]
    pub cases: Vec<CaseRecord>,
}

impl SweepReport {
    fn from_cases(kind: &str, cases: Vec<CaseRecord>) -> Self {
        let counterexamples = cases.iter().filter(|c| !c.ok).map(|c| c.params.clone()).collect();
        SweepReport { kind: kind.to_string(), total_cases: cases.len(), counterexamples, cases }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

fn record(params: String, e: &Expansion) -> CaseRecord {
    CaseRecord { params, basis: e.basis.to_string(), min_coeff: e.min_coeff(), ok: e.is_positive() }
}

fn partitions_upto(len: usize, max: u32) -> Vec<Composition> {
    (0..=max).flat_map(|t| shape::partitions(len, t)).collect()
}

fn compositions_upto(len: usize, max: u32) -> Vec<Composition> {
    (0..=max).flat_map(|t| shape::compositions(len, t)).collect()
}

/// x^λ · A_α atom-positive, λ and α with three parts and size <= max.
pub fn sweep_thm413(max: u32, exec: Exec) -> SweepReport {
    let cases: Vec<(Composition, Composition)> = partitions_upto(3, max)
        .into_iter()
        .flat_map(|l| compositions_upto(3, max).into_iter().map(move |a| (l.clone(), a)))
        .collect();
    let out = exec.map(&cases, |(lam, alpha)| {
        let e = basis::expand_atoms(&basis::atom(alpha).shift(lam), 3);
        record(format!("x^{} * A{}", shape::fmt_comp(lam), shape::fmt_comp(alpha)), &e)
    });
    SweepReport::from_cases("thm413", out)
}

/// x^λ · κ_γ key-positive on the same grid.
pub fn sweep_thm415(max: u32, exec: Exec) -> SweepReport {
    let cases: Vec<(Composition, Composition)> = partitions_upto(3, max)
        .into_iter()
        .flat_map(|l| compositions_upto(3, max).into_iter().map(move |g| (l.clone(), g)))
        .collect();
    let out = exec.map(&cases, |(lam, gamma)| {
        let e = basis::expand_keys(&basis::key(gamma).shift(lam), 3);
        record(format!("x^{} * K{}", shape::fmt_comp(lam), shape::fmt_comp(gamma)), &e)
    });
    SweepReport::from_cases("thm415", out)
}

/// κ_γ · s_λ key-positive, |γ| <= max_gamma, |λ| <= max_lambda, three variables.
pub fn sweep_thm418(max_gamma: u32, max_lambda: u32, exec: Exec) -> SweepReport {
    let cases: Vec<(Composition, Composition)> = compositions_upto(3, max_gamma)
        .into_iter()
        .flat_map(|g| partitions_upto(3, max_lambda).into_iter().map(move |l| (g.clone(), l)))
        .collect();
    let out = exec.map(&cases, |(gamma, lam)| {
        let e = key_times_schur(gamma, lam);
        record(format!("K{} * s{}", shape::fmt_comp(gamma), shape::fmt_comp(lam)), &e)
    });
    SweepReport::from_cases("thm418", out)
}

/// κ_γ · κ_δ atom-positive for all length-3 γ, δ with parts <= max_part. Common
/// rows are split off first (they only shift every atom), and the product is
/// symmetric, so each unordered reduced pair is expanded once.
pub fn sweep_conjecture(max_part: u32, exec: Exec) -> SweepReport {
    let reduced: BTreeSet<Composition> =
        shape::bounded_compositions(3, max_part).iter().map(|g| reduce_common_rows(g).1).collect();
    let reduced: Vec<Composition> = reduced.into_iter().collect();
    let mut pairs = Vec::new();
    for (i, g) in reduced.iter().enumerate() {
        for d in &reduced[i..] {
            pairs.push((g.clone(), d.clone()));
        }
    }
    let out = exec.map(&pairs, |(g, d)| {
        let e = product_expand(&basis::key(g), &basis::key(d), Basis::Atom, 3);
        record(format!("K{} * K{}", shape::fmt_comp(g), shape::fmt_comp(d)), &e)
    });
    SweepReport::from_cases("conjecture", out)
}

/// Each closed form against its operator product on the full parameter grid.
pub fn sweep_closed_forms(max: u32, exec: Exec) -> SweepReport {
    let cases: Vec<(ClosedForm, ClosedFormParams)> = ClosedForm::ALL
        .into_iter()
        .flat_map(|f| ClosedFormParams::grid(max).into_iter().map(move |p| (f, p)))
        .collect();
    let out = exec.map(&cases, |&(form, p)| {
        let ok = form.evaluate(p) == form.oracle(p);
        CaseRecord { params: format!("{} {}", form.name(), p), basis: "monomial".into(), min_coeff: 0, ok }
    });
    SweepReport::from_cases("closedforms", out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_decompose_examples() {
        let d = theta_decompose(&Polynomial::monomial(&[2, 1, 0])).unwrap();
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.component(ThetaIndex::Id), Polynomial::monomial(&[2, 1, 0]));
        let d = theta_decompose(&basis::key(&[3, 0, 1])).unwrap();
        assert_eq!(d.component(ThetaIndex::Id), Polynomial::monomial(&[3, 1, 0]));
        assert_eq!(d.component(ThetaIndex::S2), Polynomial::monomial(&[3, 1, 0]));
        assert_eq!(d.components.len(), 2);
        assert!(theta_decompose(&Polynomial::monomial(&[0, 0, 0, 1])).is_err());
    }

    #[test]
    fn longest_word_lands_in_one_bucket() {
        let w0 = Permutation::longest(3);
        assert_eq!(ThetaIndex::of_perm(&Permutation::from_word(&[2, 1, 2], 3)), Some(ThetaIndex::S121));
        assert_eq!(ThetaIndex::of_perm(&w0), Some(ThetaIndex::S121));
        let d = theta_decompose(&basis::key(&[0, 1, 2])).unwrap();
        assert_eq!(d.components.len(), 6);
    }

    #[test]
    fn closed_forms_trivial_tuple() {
        let p = ClosedFormParams::new(0, 0, 0, 0).unwrap();
        for f in ClosedForm::ALL {
            assert_eq!(f.evaluate(p), Polynomial::one(3));
        }
        assert!(ClosedFormParams::new(0, 1, 0, 0).is_err());
    }

    #[test]
    fn closed_form_pi1_pi2_first_case_is_plain_double_sum() {
        // m - n <= k - l and l <= n: no θ terms
        let p = ClosedFormParams::new(2, 1, 3, 1).unwrap();
        assert_eq!(closed_form_pi1_pi2(p), ClosedForm::Pi1Pi2.oracle(p));
    }

    #[test]
    fn reduction() {
        assert_eq!(reduce_common_rows(&[2, 3, 2]), (2, vec![0, 1, 0]));
        assert_eq!(reduce_common_rows(&[4, 2, 1]), (1, vec![3, 1, 0]));
        for g in compositions_upto(3, 4) {
            for r in 0..=2 {
                let shifted: Vec<u32> = g.iter().map(|x| x + r).collect();
                assert_eq!(*basis::atom(&shifted), basis::atom(&g).shift(&[r, r, r]));
            }
        }
    }

    #[test]
    fn schur_small() {
        assert_eq!(schur(&[1], 3), "x1 + x2 + x3".parse::<Polynomial>().unwrap());
        assert_eq!(schur(&[1, 1], 3), "x1*x2 + x1*x3 + x2*x3".parse::<Polynomial>().unwrap());
    }

    #[test]
    fn key_times_schur_trivial() {
        let e = key_times_schur(&[2, 1, 0], &[0]);
        assert_eq!(e.coeffs, BTreeMap::from([(vec![2, 1, 0], 1)]));
        let e = product_expand(&basis::key(&[0, 2]), &basis::key(&[0, 1]), Basis::Key, 2);
        assert!(e.is_positive());
    }
}
