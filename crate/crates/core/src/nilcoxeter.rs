//! The affine nilCoxeter algebra, its cyclically decreasing elements and the
//! non-commutative k-Schur functions.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use rayon::prelude::*;

use crate::affine_weyl::{check_rank, AffinePermutation};
use crate::error::{Error, Result};
use crate::shapes::{self, Partition};

/// A finite integer combination of basis elements `A_w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilCoxElem {
    n: usize,
    terms: BTreeMap<AffinePermutation, i64>,
}

fn add_checked(map: &mut BTreeMap<AffinePermutation, i64>, w: AffinePermutation, c: i64) -> Result<()> {
    let entry = map.entry(w).or_insert(0);
    *entry = entry.checked_add(c).ok_or(Error::Overflow)?;
    Ok(())
}

/// Product size above which multiplication is split across threads.
const PARALLEL_THRESHOLD: usize = 1 << 14;

impl NilCoxElem {
    pub fn zero(n: usize) -> Result<Self> {
        check_rank(n)?;
        Ok(NilCoxElem {
            n,
            terms: BTreeMap::new(),
        })
    }

    pub fn one(n: usize) -> Result<Self> {
        Self::basis(&AffinePermutation::identity(n)?)
    }

    pub fn basis(w: &AffinePermutation) -> Result<Self> {
        Self::from_terms(w.rank(), [(w.clone(), 1)])
    }

    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (AffinePermutation, i64)>,
    ) -> Result<Self> {
        let mut out = Self::zero(n)?;
        for (w, c) in terms {
            if w.rank() != n {
                return Err(Error::RankMismatch { left: n, right: w.rank() });
            }
            add_checked(&mut out.terms, w, c)?;
        }
        out.prune();
        Ok(out)
    }

    /// `A_{i_1} ... A_{i_l}`: the basis element of the word if it is reduced,
    /// zero otherwise.
    pub fn from_letters(n: usize, letters: &[usize]) -> Result<Self> {
        let w = AffinePermutation::from_letters(n, letters)?;
        if w.length() as usize == letters.len() {
            Self::basis(&w)
        } else {
            Self::zero(n)
        }
    }

    fn prune(&mut self) {
        self.terms.retain(|_, c| *c != 0);
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<AffinePermutation, i64> {
        &self.terms
    }

    pub fn coeff(&self, w: &AffinePermutation) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common length of all terms, if the element is homogeneous.
    pub fn degree(&self) -> Option<u64> {
        let mut lengths = self.terms.keys().map(|w| w.length());
        let first = lengths.next()?;
        lengths.all(|l| l == first).then_some(first)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::RankMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (w, &c) in &other.terms {
            add_checked(&mut out.terms, w.clone(), c)?;
        }
        out.prune();
        Ok(out)
    }

    pub fn scale(&self, c: i64) -> Result<Self> {
        let mut out = Self::zero(self.n)?;
        for (w, &a) in &self.terms {
            out.terms.insert(w.clone(), a.checked_mul(c).ok_or(Error::Overflow)?);
        }
        out.prune();
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-1)?)
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.multiply_impl(other, false)
    }

    /// The Grassmannian terms of `self * other`. When `w = xy` is length
    /// additive and `w` is Grassmannian then so is `y`, so only the
    /// Grassmannian terms of `other` take part.
    pub fn multiply_grassmannian(&self, other: &Self) -> Result<Self> {
        self.multiply_impl(&other.grassmannian_part(), true)
    }

    fn multiply_impl(&self, other: &Self, grassmannian_only: bool) -> Result<Self> {
        self.check_same(other)?;
        let right: Vec<(&AffinePermutation, i64, u64)> =
            other.terms.iter().map(|(w, &c)| (w, c, w.length())).collect();
        let left: Vec<(&AffinePermutation, i64, u64)> =
            self.terms.iter().map(|(w, &c)| (w, c, w.length())).collect();
        let work = |chunk: &[(&AffinePermutation, i64, u64)]| -> Result<BTreeMap<AffinePermutation, i64>> {
            let mut acc = BTreeMap::new();
            for &(x, a, lx) in chunk {
                for &(y, b, ly) in &right {
                    let z = x.multiply(y)?;
                    if grassmannian_only && !z.is_grassmannian() {
                        continue;
                    }
                    if z.length() != lx + ly {
                        continue;
                    }
                    add_checked(&mut acc, z, a.checked_mul(b).ok_or(Error::Overflow)?)?;
                }
            }
            Ok(acc)
        };
        let mut terms = if left.len() * right.len() > PARALLEL_THRESHOLD {
            let chunk = (left.len() / (4 * rayon::current_num_threads())).max(1);
            let parts: Vec<_> = left.par_chunks(chunk).map(work).collect::<Result<_>>()?;
            let mut merged = BTreeMap::new();
            for part in parts {
                for (w, c) in part {
                    add_checked(&mut merged, w, c)?;
                }
            }
            merged
        } else {
            work(&left)?
        };
        terms.retain(|_, c| *c != 0);
        Ok(NilCoxElem { n: self.n, terms })
    }

    /// Terms indexed by Grassmannian elements.
    pub fn grassmannian_part(&self) -> Self {
        NilCoxElem {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.is_grassmannian())
                .map(|(w, &c)| (w.clone(), c))
                .collect(),
        }
    }

    pub fn commutes_with(&self, other: &Self) -> Result<bool> {
        Ok(self.multiply(other)? == other.multiply(self)?)
    }
}

impl fmt::Display for NilCoxElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut rows: Vec<(u64, String, i64)> = self
            .terms
            .iter()
            .map(|(w, &c)| (w.length(), w.reduced_word().subscript(), c))
            .collect();
        rows.sort();
        for (idx, (_, word, c)) in rows.iter().enumerate() {
            let basis = if word.is_empty() { "1".to_string() } else { format!("A_{{{word}}}") };
            let mag = c.unsigned_abs();
            let body = if mag == 1 { basis } else { format!("{mag}*{basis}") };
            match (idx, *c < 0) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

/// Letters of the cyclically decreasing word on `subset` (a proper subset of
/// `Z/n`): whenever `i` and `i+1` both occur, `i+1` comes first.
pub fn cyclically_decreasing_word(n: usize, subset: &[usize]) -> Vec<usize> {
    let gap = (0..n).find(|i| !subset.contains(i)).expect("proper subset");
    (1..n)
        .map(|d| (gap + n - d) % n)
        .filter(|i| subset.contains(i))
        .collect()
}

fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, r, &mut Vec::new(), &mut out);
    out
}

fn cyclic_sum(n: usize, r: usize, increasing: bool) -> Result<NilCoxElem> {
    check_rank(n)?;
    if r >= n {
        return Err(Error::DegreeOutOfRange { r, n });
    }
    let mut terms = Vec::new();
    for subset in subsets(n, r) {
        let mut word = cyclically_decreasing_word(n, &subset);
        if increasing {
            word.reverse();
        }
        terms.push((AffinePermutation::from_letters(n, &word)?, 1));
    }
    NilCoxElem::from_terms(n, terms)
}

/// Sum of the cyclically decreasing elements of length `r`.
pub fn htilde(n: usize, r: usize) -> Result<NilCoxElem> {
    cyclic_sum(n, r, false)
}

/// Sum of the cyclically increasing elements of length `r`.
pub fn etilde(n: usize, r: usize) -> Result<NilCoxElem> {
    cyclic_sum(n, r, true)
}

/// A polynomial in the complete homogeneous generators `h_1, ..., h_{n-1}`.
/// Monomials are stored as weakly decreasing index lists.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HPolynomial {
    terms: BTreeMap<Vec<usize>, i64>,
}

impl HPolynomial {
    pub fn one() -> Self {
        HPolynomial {
            terms: BTreeMap::from([(Vec::new(), 1)]),
        }
    }

    pub fn monomial(mut factors: Vec<usize>, c: i64) -> Self {
        factors.sort_unstable_by(|a, b| b.cmp(a));
        let mut p = HPolynomial::default();
        if c != 0 {
            p.terms.insert(factors, c);
        }
        p
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_scaled(&mut self, other: &HPolynomial, c: i64) -> Result<()> {
        for (k, &v) in &other.terms {
            let add = v.checked_mul(c).ok_or(Error::Overflow)?;
            let e = self.terms.entry(k.clone()).or_insert(0);
            *e = e.checked_add(add).ok_or(Error::Overflow)?;
        }
        self.terms.retain(|_, v| *v != 0);
        Ok(())
    }

    pub fn mul_h(&self, r: usize) -> HPolynomial {
        if r == 0 {
            return self.clone();
        }
        let terms = self
            .terms
            .iter()
            .map(|(k, &v)| {
                let mut k = k.clone();
                let pos = k.iter().position(|&x| x < r).unwrap_or(k.len());
                k.insert(pos, r);
                (k, v)
            })
            .collect();
        HPolynomial { terms }
    }

    pub fn multiply(&self, other: &HPolynomial) -> Result<HPolynomial> {
        let mut out = HPolynomial::default();
        for (k, &v) in &other.terms {
            let mut part = self.clone();
            for &r in k {
                part = part.mul_h(r);
            }
            out.add_scaled(&part, v)?;
        }
        Ok(out)
    }
}

fn format_monomial(factors: &[usize]) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < factors.len() {
        let mut j = i;
        while j < factors.len() && factors[j] == factors[i] {
            j += 1;
        }
        let e = j - i;
        parts.push(if e == 1 {
            format!("h{}", factors[i])
        } else {
            format!("h{}^{e}", factors[i])
        });
        i = j;
    }
    parts.join("*")
}

fn format_sum(terms: &BTreeMap<Vec<usize>, i64>) -> String {
    let mut out = String::new();
    for (idx, (k, &c)) in terms.iter().enumerate() {
        let mono = format_monomial(k);
        let mag = c.unsigned_abs();
        let body = match (mono.is_empty(), mag) {
            (true, _) => mag.to_string(),
            (false, 1) => mono,
            (false, _) => format!("{mag}*{mono}"),
        };
        let sign = match (idx, c < 0) {
            (0, false) => "",
            (0, true) => "-",
            (_, false) => " + ",
            (_, true) => " - ",
        };
        out.push_str(sign);
        out.push_str(&body);
    }
    out
}

/// Prints with the largest common monomial factored out, e.g.
/// `h4*h3*(h1^2 - h2)`.
impl fmt::Display for HPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        if self.terms.len() == 1 {
            return write!(f, "{}", format_sum(&self.terms));
        }
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        let first = self.terms.keys().next().unwrap();
        for &r in first {
            *counts.entry(r).or_default() += 1;
        }
        for k in self.terms.keys() {
            for (r, c) in counts.iter_mut() {
                *c = (*c).min(k.iter().filter(|&&x| x == *r).count());
            }
        }
        let common: Vec<usize> = counts
            .iter()
            .rev()
            .flat_map(|(&r, &c)| std::iter::repeat_n(r, c))
            .collect();
        if common.is_empty() {
            return write!(f, "{}", format_sum(&self.terms));
        }
        let rest: BTreeMap<Vec<usize>, i64> = self
            .terms
            .iter()
            .map(|(k, &c)| {
                let mut k = k.clone();
                for r in &common {
                    let pos = k.iter().position(|x| x == r).unwrap();
                    k.remove(pos);
                }
                (k, c)
            })
            .collect();
        write!(f, "{}*({})", format_monomial(&common), format_sum(&rest))
    }
}

/// The `(n-1)`-bounded partitions `nu` with `nu / lambda` a horizontal
/// `r`-strip whose k-conjugates differ by a vertical `r`-strip.
pub fn weak_pieri(n: usize, r: usize, lambda: &Partition) -> Result<Vec<Partition>> {
    check_rank(n)?;
    let k = n - 1;
    let lam_conj = shapes::kconjugate(n, lambda)?;
    let mut out = Vec::new();
    let len = lambda.len();
    let mut cur = vec![0usize; len + 1];
    fn rec(
        i: usize,
        left: usize,
        k: usize,
        lambda: &Partition,
        cur: &mut Vec<usize>,
        found: &mut Vec<Partition>,
    ) {
        if i == cur.len() {
            if left == 0 {
                found.push(Partition::new(cur.clone()).unwrap());
            }
            return;
        }
        let lo = lambda.part(i);
        let hi = if i == 0 { k } else { lambda.part(i - 1) };
        for v in lo..=hi {
            if v - lo > left {
                break;
            }
            cur[i] = v;
            rec(i + 1, left - (v - lo), k, lambda, cur, found);
        }
    }
    let mut strips = Vec::new();
    if lambda.part(0) <= k {
        rec(0, r, k, lambda, &mut cur, &mut strips);
    }
    for nu in strips {
        let nu_conj = shapes::kconjugate(n, &nu)?;
        if nu_conj.is_vertical_strip_over(&lam_conj) {
            out.push(nu);
        }
    }
    out.sort();
    Ok(out)
}

type KSchurMemo = RwLock<HashMap<(usize, Partition), HPolynomial>>;

fn kschur_memo() -> &'static KSchurMemo {
    static MEMO: OnceLock<KSchurMemo> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The k-Schur function of an `(n-1)`-bounded partition as a polynomial in
/// the `h_r`, from `h_{lambda_1} s_{rest} = s_lambda + (other weak Pieri terms)`.
pub fn kschur_h_poly(n: usize, lambda: &Partition) -> Result<HPolynomial> {
    check_rank(n)?;
    if lambda.part(0) >= n {
        return Err(Error::PartTooLarge { part: lambda.part(0), bound: n - 1 });
    }
    kschur_rec(n, lambda, lambda.size() * n + 1)
}

fn kschur_rec(n: usize, lambda: &Partition, budget: usize) -> Result<HPolynomial> {
    if lambda.is_empty() {
        return Ok(HPolynomial::one());
    }
    let key = (n, lambda.clone());
    if let Some(p) = kschur_memo().read().expect("memo lock").get(&key) {
        return Ok(p.clone());
    }
    if budget == 0 {
        return Err(Error::KSchurRecursion(lambda.parts().to_vec()));
    }
    let head = lambda.part(0);
    let rest = Partition::new(lambda.parts()[1..].to_vec())?;
    let mut poly = kschur_rec(n, &rest, budget - 1)?.mul_h(head);
    let pieri = weak_pieri(n, head, &rest)?;
    if !pieri.contains(lambda) {
        return Err(Error::KSchurRecursion(lambda.parts().to_vec()));
    }
    for nu in pieri.iter().filter(|nu| *nu != lambda) {
        poly.add_scaled(&kschur_rec(n, nu, budget - 1)?, -1)?;
    }
    kschur_memo()
        .write()
        .expect("memo lock")
        .insert(key, poly.clone());
    Ok(poly)
}

/// `sum_monomials c * htilde_{a_1} ... htilde_{a_p} * base`, evaluated by
/// grouping monomials on their leading factor. With `grassmannian_only` every
/// intermediate product keeps only its Grassmannian terms.
pub fn apply_h_poly(
    n: usize,
    poly: &HPolynomial,
    base: &NilCoxElem,
    grassmannian_only: bool,
) -> Result<NilCoxElem> {
    let monos: Vec<(&[usize], i64)> = poly.terms.iter().map(|(k, &c)| (k.as_slice(), c)).collect();
    let gens: Vec<NilCoxElem> = (0..n)
        .map(|r| if r == 0 { NilCoxElem::one(n) } else { htilde(n, r) })
        .collect::<Result<_>>()?;
    apply_rec(&monos, base, &gens, grassmannian_only)
}

fn apply_rec(
    monos: &[(&[usize], i64)],
    base: &NilCoxElem,
    gens: &[NilCoxElem],
    grassmannian_only: bool,
) -> Result<NilCoxElem> {
    let mut out = NilCoxElem::zero(base.rank())?;
    let mut groups: BTreeMap<usize, Vec<(&[usize], i64)>> = BTreeMap::new();
    for &(k, c) in monos {
        match k.split_first() {
            None => out = out.add(&base.scale(c)?)?,
            Some((&r, rest)) => groups.entry(r).or_default().push((rest, c)),
        }
    }
    for (r, sub) in groups {
        let inner = apply_rec(&sub, base, gens, grassmannian_only)?;
        let g = gens.get(r).ok_or(Error::DegreeOutOfRange { r, n: base.rank() })?;
        let prod = if grassmannian_only {
            g.multiply_grassmannian(&inner)?
        } else {
            g.multiply(&inner)?
        };
        out = out.add(&prod)?;
    }
    Ok(out)
}

/// The non-commutative k-Schur function: `kschur_h_poly` evaluated at the
/// cyclically decreasing sums.
pub fn noncomm_kschur(n: usize, lambda: &Partition) -> Result<NilCoxElem> {
    let poly = kschur_h_poly(n, lambda)?;
    apply_h_poly(n, &poly, &NilCoxElem::one(n)?, false)
}

/// Expansion in the basis `j_w = noncomm_kschur(lambda(w))`. The coefficients
/// are read off the Grassmannian terms and then checked by reconstruction.
pub fn j_expand(elem: &NilCoxElem) -> Result<BTreeMap<AffinePermutation, i64>> {
    let n = elem.rank();
    let coeffs: BTreeMap<AffinePermutation, i64> = elem.grassmannian_part().terms;
    let mut rebuilt = NilCoxElem::zero(n)?;
    for (w, &c) in &coeffs {
        let lambda = shapes::grassmannian_to_kbounded(w)?;
        rebuilt = rebuilt.add(&noncomm_kschur(n, &lambda)?.scale(c)?)?;
    }
    if rebuilt != *elem {
        return Err(Error::NotInFominStanley);
    }
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn a(n: usize, words: &[&[usize]]) -> NilCoxElem {
        let mut out = NilCoxElem::zero(n).unwrap();
        for w in words {
            out = out.add(&NilCoxElem::from_letters(n, w).unwrap()).unwrap();
        }
        out
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn square_of_generator_sum() {
        let s = a(3, &[&[0], &[1], &[2]]);
        let expected = a(3, &[&[0, 1], &[0, 2], &[1, 0], &[1, 2], &[2, 0], &[2, 1]]);
        assert_eq!(s.multiply(&s).unwrap(), expected);
        assert!(NilCoxElem::from_letters(3, &[1, 1]).unwrap().is_zero());
        assert!(NilCoxElem::from_letters(3, &[1, 2, 1, 2]).unwrap().is_zero());
    }

    #[test]
    fn cyclic_sums() {
        assert_eq!(
            htilde(4, 2).unwrap(),
            a(4, &[&[1, 0], &[2, 1], &[3, 2], &[0, 3], &[2, 0], &[3, 1]])
        );
        assert_eq!(
            htilde(4, 3).unwrap(),
            a(4, &[&[2, 1, 0], &[3, 2, 1], &[0, 3, 2], &[1, 0, 3]])
        );
        assert_eq!(
            htilde(4, 3).unwrap().to_string(),
            "A_{032} + A_{103} + A_{210} + A_{321}"
        );
        assert_eq!(etilde(3, 2).unwrap(), a(3, &[&[0, 1], &[1, 2], &[2, 0]]));
        assert!(htilde(3, 3).is_err());
    }

    #[test]
    fn cyclic_counts_and_commutation() {
        for n in 2..=6 {
            for r in 1..n {
                let h = htilde(n, r).unwrap();
                let e = etilde(n, r).unwrap();
                let binom = subsets(n, r).len();
                assert_eq!(h.len(), binom);
                assert_eq!(e.len(), binom);
                assert!(h.terms().keys().all(|w| w.length() == r as u64));
            }
        }
        for n in 3..=5 {
            for r in 1..n {
                for s in 1..n {
                    let hr = htilde(n, r).unwrap();
                    let hs = htilde(n, s).unwrap();
                    assert!(hr.commutes_with(&hs).unwrap(), "n={n} h{r} h{s}");
                }
            }
        }
    }

    #[test]
    fn weak_pieri_examples() {
        assert_eq!(weak_pieri(5, 1, &p(&[1])).unwrap(), vec![p(&[1, 1]), p(&[2])]);
        assert_eq!(weak_pieri(5, 3, &p(&[1, 1])).unwrap(), vec![p(&[3, 1, 1])]);
    }

    #[test]
    fn kschur_examples() {
        let s11 = kschur_h_poly(5, &p(&[1, 1])).unwrap();
        let mut expected = HPolynomial::monomial(vec![1, 1], 1);
        expected.add_scaled(&HPolynomial::monomial(vec![2], 1), -1).unwrap();
        assert_eq!(s11, expected);
        assert_eq!(s11.to_string(), "h1^2 - h2");
        let s311 = kschur_h_poly(5, &p(&[3, 1, 1])).unwrap();
        assert_eq!(s311, expected.mul_h(3));
        let s4311 = kschur_h_poly(5, &p(&[4, 3, 1, 1])).unwrap();
        assert_eq!(s4311, expected.mul_h(3).mul_h(4));
        assert_eq!(s4311.to_string(), "h4*h3*(h1^2 - h2)");
        assert_eq!(kschur_h_poly(5, &p(&[2])).unwrap().to_string(), "h2");
    }

    /// For `|lambda| < n` the k-Schur function is the Schur function, whose
    /// h-expansion is the Jacobi-Trudi determinant.
    fn jacobi_trudi(lambda: &Partition) -> HPolynomial {
        let l = lambda.len();
        let mut out = HPolynomial::default();
        let mut perm: Vec<usize> = (0..l).collect();
        fn permutations(k: usize, perm: &mut Vec<usize>, f: &mut dyn FnMut(&[usize], i64)) {
            if k == perm.len() {
                let mut sign = 1;
                for i in 0..perm.len() {
                    for j in i + 1..perm.len() {
                        if perm[i] > perm[j] {
                            sign = -sign;
                        }
                    }
                }
                f(perm, sign);
                return;
            }
            for i in k..perm.len() {
                perm.swap(k, i);
                permutations(k + 1, perm, f);
                perm.swap(k, i);
            }
        }
        permutations(0, &mut perm, &mut |pi, sign| {
            let mut idx = Vec::new();
            for i in 0..l {
                let v = lambda.part(i) as i64 + pi[i] as i64 - i as i64;
                if v < 0 {
                    return;
                }
                if v > 0 {
                    idx.push(v as usize);
                }
            }
            out.add_scaled(&HPolynomial::monomial(idx, sign), 1).unwrap();
        });
        out
    }

    #[test]
    fn kschur_is_schur_in_the_stable_range() {
        for n in 3..=7 {
            for size in 0..n {
                for lam in Partition::all_of_size(size, n - 1) {
                    assert_eq!(kschur_h_poly(n, &lam).unwrap(), jacobi_trudi(&lam), "n={n} {lam}");
                }
            }
        }
    }

    #[test]
    fn noncomm_kschur_example() {
        let s = noncomm_kschur(5, &p(&[1, 1])).unwrap();
        let expected = a(
            5,
            &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[4, 0], &[0, 2], &[0, 3], &[1, 3], &[1, 4], &[2, 4]],
        );
        assert_eq!(s, expected);
    }

    #[test]
    fn unique_grassmannian_term() {
        for n in 2..=4 {
            for w in oracle::grassmannian_elements(n, 6) {
                let lam = shapes::grassmannian_to_kbounded(&w).unwrap();
                let j = noncomm_kschur(n, &lam).unwrap();
                assert_eq!(j.grassmannian_part(), NilCoxElem::basis(&w).unwrap(), "{w}");
            }
        }
    }

    #[test]
    fn j_products_rank_three() {
        let j = |letters: &[usize]| {
            let w = AffinePermutation::from_letters(3, letters).unwrap();
            noncomm_kschur(3, &shapes::grassmannian_to_kbounded(&w).unwrap()).unwrap()
        };
        let b = |letters: &[usize]| NilCoxElem::basis(&AffinePermutation::from_letters(3, letters).unwrap()).unwrap();
        let exp = |e: &NilCoxElem| NilCoxElem::from_terms(3, j_expand(e).unwrap()).unwrap();
        assert_eq!(exp(&j(&[2, 0]).multiply(&j(&[2, 0])).unwrap()), b(&[0, 1, 2, 0]));
        assert_eq!(exp(&j(&[2, 0]).multiply(&j(&[0])).unwrap()), b(&[1, 2, 0]));
        assert_eq!(
            exp(&j(&[0]).multiply(&j(&[0])).unwrap()),
            b(&[1, 0]).add(&b(&[2, 0])).unwrap()
        );
        assert_eq!(j(&[0]), htilde(3, 1).unwrap());
        assert_eq!(j(&[2, 0]), etilde(3, 2).unwrap());
    }

    #[test]
    fn j_expand_rejects_outside_span() {
        let x = NilCoxElem::from_letters(3, &[1]).unwrap();
        assert_eq!(j_expand(&x), Err(Error::NotInFominStanley));
    }

    #[test]
    fn truncated_products_agree() {
        for n in 3..=4 {
            for w in oracle::grassmannian_elements(n, 4) {
                let y = NilCoxElem::basis(&w).unwrap();
                for r in 1..n {
                    let h = htilde(n, r).unwrap();
                    assert_eq!(
                        h.multiply(&y).unwrap().grassmannian_part(),
                        h.multiply_grassmannian(&y).unwrap()
                    );
                }
            }
        }
    }
}
