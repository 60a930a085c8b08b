//! Quantum cohomology of the Grassmannian `Gr(m, n)`, localised at `q`.
//!
//! Classes are finite sums `c q^d sigma_lambda` with `lambda` in the
//! `m x (n-m)` box and `d` any integer.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{rim_hook_removals, BoxShape, Partition};

/// The ring `QH*(Gr(m, n))[q^{-1}]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Grassmannian {
    m: usize,
    n: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QClass {
    ring: Grassmannian,
    terms: BTreeMap<(i64, Partition), i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QTerm {
    pub shape: Vec<usize>,
    pub qdeg: i64,
    pub coeff: i64,
}

impl Grassmannian {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if n < 2 || m == 0 || m >= n {
            return Err(Error::CutOutOfRange { m, n });
        }
        Ok(Grassmannian { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn width(&self) -> usize {
        self.n - self.m
    }

    /// The ring of `Gr(n - m, n)`.
    pub fn dual(&self) -> Grassmannian {
        Grassmannian { m: self.n - self.m, n: self.n }
    }

    pub fn shapes(&self) -> Vec<Partition> {
        Partition::all_in_box(self.m, self.width())
    }

    pub fn zero(&self) -> QClass {
        QClass { ring: *self, terms: BTreeMap::new() }
    }

    pub fn q_power(&self, d: i64) -> QClass {
        let mut c = self.zero();
        c.terms.insert((d, Partition::empty()), 1);
        c
    }

    pub fn one(&self) -> QClass {
        self.q_power(0)
    }

    pub fn schubert(&self, shape: &Partition) -> Result<QClass> {
        BoxShape::new(self.m, self.n, shape.clone())?;
        let mut c = self.zero();
        c.terms.insert((0, shape.clone()), 1);
        Ok(c)
    }

    /// `sigma_r * sigma_lambda`: horizontal strips inside the box, plus `q`
    /// times every shape obtained from a strip with `m + 1` rows by removing
    /// an `n`-rim hook.
    pub fn qpieri(&self, r: usize, lambda: &Partition) -> Result<QClass> {
        BoxShape::new(self.m, self.n, lambda.clone())?;
        if r > self.width() {
            return Err(Error::DegreeOutOfRange { r, n: self.n });
        }
        let mut out = self.zero();
        let mut cur = vec![0usize; self.m + 1];
        let mut strips = Vec::new();
        self.strips(0, r, lambda, &mut cur, &mut strips);
        for mu in strips {
            if mu.len() <= self.m {
                out.add_term(0, mu, 1)?;
            } else {
                for (nu, _) in rim_hook_removals(self.n, &mu) {
                    if nu.len() <= self.m && nu.part(0) <= self.width() {
                        out.add_term(1, nu, 1)?;
                    }
                }
            }
        }
        Ok(out)
    }

    fn strips(&self, i: usize, left: usize, lambda: &Partition, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == cur.len() {
            if left == 0 {
                out.push(Partition::new(cur.clone()).expect("strip is a partition"));
            }
            return;
        }
        let lo = lambda.part(i);
        let hi = if i == 0 { self.width() } else { lambda.part(i - 1) };
        for v in lo..=hi.max(lo) {
            if v - lo > left {
                break;
            }
            cur[i] = v;
            self.strips(i + 1, left - (v - lo), lambda, cur, out);
        }
    }

    /// Jacobi-Trudi expansion `sigma_lambda = det(sigma_{lambda_i + j - i})`
    /// as signed products of row classes; `sigma_a = 0` outside `0..=n-m`.
    pub fn giambelli(&self, lambda: &Partition) -> BTreeMap<Vec<usize>, i64> {
        let l = lambda.len();
        let mut out: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
        let mut perm: Vec<usize> = (0..l).collect();
        let width = self.width() as i64;
        permute(0, &mut perm, 1, &mut |pi, sign| {
            let mut rows = Vec::with_capacity(l);
            for (i, &j) in pi.iter().enumerate() {
                let a = lambda.part(i) as i64 + j as i64 - i as i64;
                if a < 0 || a > width {
                    return;
                }
                if a > 0 {
                    rows.push(a as usize);
                }
            }
            rows.sort_unstable_by(|x, y| y.cmp(x));
            *out.entry(rows).or_insert(0) += sign;
        });
        out.retain(|_, c| *c != 0);
        out
    }

    /// `sigma_r * x`, extended linearly.
    pub fn pieri_apply(&self, r: usize, x: &QClass) -> Result<QClass> {
        self.check(x)?;
        let mut out = self.zero();
        for (&(d, ref lambda), &c) in &x.terms {
            let p = self.qpieri(r, lambda)?;
            out.add_scaled(&p.shift_q(d), c)?;
        }
        Ok(out)
    }

    pub fn qproduct(&self, a: &QClass, b: &QClass) -> Result<QClass> {
        self.check(a)?;
        self.check(b)?;
        let mut cache: HashMap<Vec<usize>, QClass> = HashMap::new();
        cache.insert(Vec::new(), b.clone());
        let mut out = self.zero();
        for (&(d, ref lambda), &c) in &a.terms {
            for (rows, sign) in self.giambelli(lambda) {
                let prod = self.monomial_times(&rows, &mut cache)?;
                let coeff = c.checked_mul(sign).ok_or(Error::Overflow)?;
                out.add_scaled(&prod.shift_q(d), coeff)?;
            }
        }
        if a.is_nonnegative() && b.is_nonnegative() {
            if let Some((&(qdeg, ref shape), &coeff)) = out.terms.iter().find(|(_, &c)| c < 0) {
                return Err(Error::NegativeStructureConstant {
                    shape: shape.parts().to_vec(),
                    qdeg,
                    coeff,
                });
            }
        }
        Ok(out)
    }

    fn monomial_times(&self, rows: &[usize], cache: &mut HashMap<Vec<usize>, QClass>) -> Result<QClass> {
        if let Some(x) = cache.get(rows) {
            return Ok(x.clone());
        }
        let inner = self.monomial_times(&rows[1..], cache)?;
        let x = self.pieri_apply(rows[0], &inner)?;
        cache.insert(rows.to_vec(), x.clone());
        Ok(x)
    }

    /// `sigma_lambda * sigma_mu`.
    pub fn schubert_product(&self, lambda: &Partition, mu: &Partition) -> Result<QClass> {
        self.qproduct(&self.schubert(lambda)?, &self.schubert(mu)?)
    }

    fn check(&self, x: &QClass) -> Result<()> {
        if x.ring != *self {
            return Err(Error::RingMismatch {
                m1: self.m,
                n1: self.n,
                m2: x.ring.m,
                n2: x.ring.n,
            });
        }
        Ok(())
    }
}

fn permute(k: usize, perm: &mut Vec<usize>, sign: i64, f: &mut dyn FnMut(&[usize], i64)) {
    if k == perm.len() {
        f(perm, sign);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(k + 1, perm, if i == k { sign } else { -sign }, f);
        perm.swap(k, i);
    }
}

impl QClass {
    pub fn ring(&self) -> Grassmannian {
        self.ring
    }

    /// Terms keyed by `(q-degree, shape)`.
    pub fn terms(&self) -> &BTreeMap<(i64, Partition), i64> {
        &self.terms
    }

    pub fn coeff(&self, qdeg: i64, shape: &Partition) -> i64 {
        self.terms.get(&(qdeg, shape.clone())).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c >= 0)
    }

    pub fn add_term(&mut self, qdeg: i64, shape: Partition, c: i64) -> Result<()> {
        BoxShape::new(self.ring.m, self.ring.n, shape.clone())?;
        let e = self.terms.entry((qdeg, shape)).or_insert(0);
        *e = e.checked_add(c).ok_or(Error::Overflow)?;
        self.terms.retain(|_, v| *v != 0);
        Ok(())
    }

    pub fn add_scaled(&mut self, other: &QClass, c: i64) -> Result<()> {
        self.ring.check(other)?;
        for (k, &v) in &other.terms {
            let add = v.checked_mul(c).ok_or(Error::Overflow)?;
            let e = self.terms.entry(k.clone()).or_insert(0);
            *e = e.checked_add(add).ok_or(Error::Overflow)?;
        }
        self.terms.retain(|_, v| *v != 0);
        Ok(())
    }

    pub fn add(&self, other: &QClass) -> Result<QClass> {
        let mut out = self.clone();
        out.add_scaled(other, 1)?;
        Ok(out)
    }

    /// Multiplies by `q^d`.
    pub fn shift_q(&self, d: i64) -> QClass {
        QClass {
            ring: self.ring,
            terms: self.terms.iter().map(|((e, s), &c)| ((e + d, s.clone()), c)).collect(),
        }
    }

    /// `sigma_lambda -> sigma_{lambda^T}` into `Gr(n - m, n)`.
    pub fn dual_transpose(&self) -> QClass {
        QClass {
            ring: self.ring.dual(),
            terms: self
                .terms
                .iter()
                .map(|((d, s), &c)| ((*d, s.transpose()), c))
                .collect(),
        }
    }

    /// `sigma_lambda -> sigma_{lambda^vee}`.
    pub fn dual_complement(&self) -> QClass {
        let (m, n) = (self.ring.m, self.ring.n);
        QClass {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|((d, s), &c)| {
                    let b = BoxShape::new(m, n, s.clone()).expect("class shapes fit");
                    ((*d, b.complement().into_shape()), c)
                })
                .collect(),
        }
    }

    /// `q^d sigma_lambda -> q^{-d - diag(lambda)} sigma_{lambda*}`.
    pub fn strange_duality(&self) -> QClass {
        let (m, n) = (self.ring.m, self.ring.n);
        QClass {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|((d, s), &c)| {
                    let b = BoxShape::new(m, n, s.clone()).expect("class shapes fit");
                    let (dual, diag) = b.strange_dual();
                    ((-d - diag as i64, dual.into_shape()), c)
                })
                .collect(),
        }
    }

    pub fn to_terms(&self) -> Vec<QTerm> {
        self.terms
            .iter()
            .map(|((d, s), &c)| QTerm {
                shape: s.parts().to_vec(),
                qdeg: *d,
                coeff: c,
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_terms()).expect("plain data serialises")
    }

    pub fn from_terms(ring: Grassmannian, terms: &[QTerm]) -> Result<QClass> {
        let mut out = ring.zero();
        for t in terms {
            out.add_term(t.qdeg, Partition::new(t.shape.clone())?, t.coeff)?;
        }
        Ok(out)
    }

    pub fn from_json(ring: Grassmannian, s: &str) -> Result<QClass> {
        let terms: Vec<QTerm> = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_terms(ring, &terms)
    }
}

/// Renders e.g. `q*s[1]`, `q^2`, `s[2,1] + q^-1*s[1]`.
impl fmt::Display for QClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, ((d, s), &c)) in self.terms.iter().enumerate() {
            let mut factors = Vec::new();
            let mag = c.unsigned_abs();
            if mag != 1 {
                factors.push(mag.to_string());
            }
            match *d {
                0 => {}
                1 => factors.push("q".to_string()),
                d => factors.push(format!("q^{d}")),
            }
            if !s.is_empty() {
                factors.push(format!("s[{s}]"));
            }
            if factors.is_empty() {
                factors.push("1".to_string());
            }
            let body = factors.join("*");
            match (idx, c < 0) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn class(g: Grassmannian, terms: &[(i64, &[usize], i64)]) -> QClass {
        let mut c = g.zero();
        for &(d, s, k) in terms {
            c.add_term(d, p(s), k).unwrap();
        }
        c
    }

    #[test]
    fn gr13_table() {
        let g = Grassmannian::new(1, 3).unwrap();
        assert_eq!(g.schubert_product(&p(&[1]), &p(&[1])).unwrap(), class(g, &[(0, &[2], 1)]));
        assert_eq!(g.schubert_product(&p(&[1]), &p(&[2])).unwrap(), class(g, &[(1, &[], 1)]));
        assert_eq!(g.schubert_product(&p(&[2]), &p(&[2])).unwrap(), class(g, &[(1, &[1], 1)]));
        assert_eq!(g.schubert_product(&p(&[2]), &p(&[2])).unwrap().to_string(), "q*s[1]");
    }

    #[test]
    fn gr24_table() {
        let g = Grassmannian::new(2, 4).unwrap();
        let prod = |a: &[usize], b: &[usize]| g.schubert_product(&p(a), &p(b)).unwrap();
        assert_eq!(prod(&[2, 2], &[2, 2]), class(g, &[(2, &[], 1)]));
        assert_eq!(prod(&[2, 2], &[2, 2]).to_string(), "q^2");
        assert_eq!(g.qpieri(1, &p(&[2, 2])).unwrap(), class(g, &[(1, &[1], 1)]));
        assert_eq!(prod(&[1], &[1]), class(g, &[(0, &[1, 1], 1), (0, &[2], 1)]));
        assert_eq!(prod(&[1], &[2, 1]), class(g, &[(0, &[2, 2], 1), (1, &[], 1)]));
        assert_eq!(prod(&[2], &[1, 1]), class(g, &[(1, &[], 1)]));
        assert_eq!(prod(&[1, 1], &[1, 1]), class(g, &[(0, &[2, 2], 1)]));
        assert_eq!(prod(&[2, 1], &[2, 1]), class(g, &[(1, &[1, 1], 1), (1, &[2], 1)]));
        assert_eq!(prod(&[2, 1], &[2, 2]), class(g, &[(1, &[2, 1], 1)]));
        assert_eq!(prod(&[], &[2, 1]).to_string(), "s[2,1]");
    }

    #[test]
    fn quantum_pieri_terms_have_full_height() {
        for n in 2..=7 {
            for m in 1..n {
                let g = Grassmannian::new(m, n).unwrap();
                for lam in g.shapes() {
                    for r in 1..=n - m {
                        let x = g.qpieri(r, &lam).unwrap();
                        for ((d, nu), &c) in x.terms() {
                            assert_eq!(c, 1);
                            assert!(*d == 0 || *d == 1);
                            assert_eq!(lam.size() + r, nu.size() + n * (*d as usize));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn json_round_trip_and_format() {
        let g = Grassmannian::new(2, 4).unwrap();
        let x = class(g, &[(-1, &[1], 2), (0, &[2, 1], -1), (3, &[], 1)]);
        assert_eq!(QClass::from_json(g, &x.to_json()).unwrap(), x);
        assert_eq!(x.to_string(), "2*q^-1*s[1] - s[2,1] + q^3");
        assert_eq!(g.zero().to_string(), "0");
        assert_eq!(g.one().to_string(), "1");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Grassmannian::new(0, 3).is_err());
        let g = Grassmannian::new(2, 4).unwrap();
        assert!(g.schubert(&p(&[3])).is_err());
        assert!(g.qpieri(3, &p(&[1])).is_err());
        let h = Grassmannian::new(1, 4).unwrap();
        assert!(matches!(g.qproduct(&g.one(), &h.one()), Err(Error::RingMismatch { .. })));
    }

    fn arb_ring_and_shapes() -> impl Strategy<Value = (Grassmannian, Partition, Partition, Partition)> {
        (2usize..7)
            .prop_flat_map(|n| (Just(n), 1..n))
            .prop_flat_map(|(n, m)| {
                let g = Grassmannian::new(m, n).unwrap();
                let shapes = g.shapes();
                let k = shapes.len();
                (Just(g), Just(shapes), 0..k, 0..k, 0..k)
            })
            .prop_map(|(g, s, a, b, c)| (g, s[a].clone(), s[b].clone(), s[c].clone()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn ring_axioms((g, a, b, c) in arb_ring_and_shapes()) {
            let (x, y, z) = (g.schubert(&a).unwrap(), g.schubert(&b).unwrap(), g.schubert(&c).unwrap());
            let xy = g.qproduct(&x, &y).unwrap();
            prop_assert_eq!(&xy, &g.qproduct(&y, &x).unwrap());
            prop_assert_eq!(
                g.qproduct(&xy, &z).unwrap(),
                g.qproduct(&x, &g.qproduct(&y, &z).unwrap()).unwrap()
            );
            prop_assert_eq!(g.qproduct(&x, &g.one()).unwrap(), x.clone());
            for ((d, nu), &k) in xy.terms() {
                prop_assert!(k > 0);
                prop_assert_eq!(a.size() + b.size(), nu.size() + g.n() * (*d as usize));
            }
        }

        #[test]
        fn dualities_respect_products((g, a, b, _c) in arb_ring_and_shapes()) {
            let (x, y) = (g.schubert(&a).unwrap(), g.schubert(&b).unwrap());
            let xy = g.qproduct(&x, &y).unwrap();
            let t = g.dual();
            prop_assert_eq!(xy.dual_transpose(), t.qproduct(&x.dual_transpose(), &y.dual_transpose()).unwrap());
            prop_assert_eq!(xy.strange_duality(), g.qproduct(&x.strange_duality(), &y.strange_duality()).unwrap());
            prop_assert_eq!(x.strange_duality().strange_duality(), x.clone());
            prop_assert_eq!(x.dual_transpose().dual_transpose(), x.clone());
            prop_assert_eq!(x.dual_complement().dual_complement(), x.clone());
        }
    }
}
