//! The parabolic Peterson map from the affine Fomin-Stanley algebra, modulo
//! the ideal spanned by `j_w` with `w` outside `S~_n^P`, to the quantum
//! cohomology of `Gr(m, n)` localised at `q`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::affine_weyl::AffinePermutation;
use crate::error::{Error, Result};
use crate::nilcoxeter::{self, etilde, htilde, NilCoxElem};
use crate::quantum::{Grassmannian, QClass, QTerm};
use crate::rootsys::is_in_parabolic;
use crate::shapes::{self, BoxShape, Partition};

#[derive(Clone, Debug)]
pub struct PetersonContext {
    m: usize,
    n: usize,
    u: AffinePermutation,
    ring: Grassmannian,
}

/// `w = v u^r` with `w` Grassmannian and `v` the permutation of `shape`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lift {
    pub shape: Partition,
    pub v: AffinePermutation,
    pub r: u32,
    pub w: AffinePermutation,
}

/// One stage of a product computation, emitted as a JSON line.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "stage", rename_all = "snake_case")]
pub enum TraceEvent {
    Lift {
        shape: Vec<usize>,
        v: Vec<i64>,
        r: u32,
        w: Vec<i64>,
        word: String,
        kbounded: Vec<usize>,
    },
    KSchur {
        kbounded: Vec<usize>,
        h_poly: String,
    },
    JTerm {
        word: String,
        coeff: i64,
        in_parabolic: bool,
    },
    Factor {
        word: String,
        v: Vec<i64>,
        r: u32,
        shape: Vec<usize>,
    },
    Result {
        terms: Vec<QTerm>,
    },
}

/// Outcome of one generator check.
#[derive(Clone, Debug)]
pub struct CheckEntry {
    pub label: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

impl CheckEntry {
    pub fn compare(label: impl Into<String>, expected: &QClass, actual: &QClass) -> Self {
        CheckEntry {
            label: label.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            passed: expected == actual,
        }
    }
}

impl PetersonContext {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        let ring = Grassmannian::new(m, n)?;
        let u = AffinePermutation::u_element(n, m)?;
        Ok(PetersonContext { m, n, u, ring })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn u(&self) -> &AffinePermutation {
        &self.u
    }

    pub fn ring(&self) -> Grassmannian {
        self.ring
    }

    /// The smallest `r` with `v u^r` Grassmannian.
    pub fn lift(&self, shape: &Partition) -> Result<Lift> {
        let v = BoxShape::new(self.m, self.n, shape.clone())?.to_perm();
        let mut w = v.clone();
        let cap = self.m * (self.n - self.m) + self.n;
        for r in 0..=cap as u32 {
            if w.is_grassmannian() {
                return Ok(Lift { shape: shape.clone(), v, r, w });
            }
            w = w.multiply(&self.u)?;
        }
        Err(Error::FactorizationFailed(format!("no Grassmannian lift of {shape}")))
    }

    /// Images of `j`-basis coefficients: `j_{v u^r} -> q^{-r} sigma_v` for
    /// `v u^r` in `S~_n^P`, zero otherwise. Requires a single length.
    pub fn psi_from_j(&self, coeffs: &BTreeMap<AffinePermutation, i64>) -> Result<QClass> {
        self.psi_traced(coeffs, None)
    }

    fn psi_traced(
        &self,
        coeffs: &BTreeMap<AffinePermutation, i64>,
        mut trace: Option<&mut Vec<TraceEvent>>,
    ) -> Result<QClass> {
        let mut lengths = coeffs.keys().map(|w| w.length());
        if let Some(first) = lengths.next() {
            if lengths.any(|l| l != first) {
                return Err(Error::NonHomogeneous);
            }
        }
        let mut out = self.ring.zero();
        for (w, &c) in coeffs {
            if !w.is_grassmannian() {
                return Err(Error::NotGrassmannian);
            }
            let keep = is_in_parabolic(w, self.m);
            if let Some(t) = trace.as_deref_mut() {
                t.push(TraceEvent::JTerm {
                    word: w.reduced_word().to_string(),
                    coeff: c,
                    in_parabolic: keep,
                });
            }
            if !keep {
                continue;
            }
            let (v, r) = w.factor_vur(self.m)?;
            let shape = BoxShape::from_perm(self.m, &v)?.into_shape();
            if let Some(t) = trace.as_deref_mut() {
                t.push(TraceEvent::Factor {
                    word: w.reduced_word().to_string(),
                    v: v.window().to_vec(),
                    r,
                    shape: shape.parts().to_vec(),
                });
            }
            out.add_term(-(r as i64), shape, c)?;
        }
        Ok(out)
    }

    /// The Peterson map on an element of the affine Fomin-Stanley algebra.
    pub fn psi(&self, elem: &NilCoxElem) -> Result<QClass> {
        if elem.rank() != self.n {
            return Err(Error::RankMismatch { left: self.n, right: elem.rank() });
        }
        if elem.degree().is_none() && !elem.is_zero() {
            return Err(Error::NonHomogeneous);
        }
        self.psi_from_j(&nilcoxeter::j_expand(elem)?)
    }

    /// `sigma_lambda * sigma_mu` computed on the affine side: lift both
    /// classes, multiply the non-commutative k-Schur functions, map back and
    /// multiply by `q^{r_1 + r_2}`.
    ///
    /// Only Grassmannian coefficients of the product are needed, so the
    /// shorter factor is expanded through its h-polynomial acting on the
    /// basis element of the longer one, discarding non-Grassmannian terms at
    /// each step.
    pub fn peterson_product(&self, lambda: &Partition, mu: &Partition) -> Result<QClass> {
        self.product_impl(lambda, mu, None)
    }

    pub fn peterson_product_traced(
        &self,
        lambda: &Partition,
        mu: &Partition,
    ) -> Result<(QClass, Vec<TraceEvent>)> {
        let mut trace = Vec::new();
        let out = self.product_impl(lambda, mu, Some(&mut trace))?;
        Ok((out, trace))
    }

    fn product_impl(
        &self,
        lambda: &Partition,
        mu: &Partition,
        mut trace: Option<&mut Vec<TraceEvent>>,
    ) -> Result<QClass> {
        let a = self.lift(lambda)?;
        let b = self.lift(mu)?;
        let (short, long) = if a.w.length() <= b.w.length() { (&a, &b) } else { (&b, &a) };
        let kb = shapes::grassmannian_to_kbounded(&short.w)?;
        let poly = nilcoxeter::kschur_h_poly(self.n, &kb)?;
        if let Some(t) = trace.as_deref_mut() {
            for l in [&a, &b] {
                t.push(TraceEvent::Lift {
                    shape: l.shape.parts().to_vec(),
                    v: l.v.window().to_vec(),
                    r: l.r,
                    w: l.w.window().to_vec(),
                    word: l.w.reduced_word().to_string(),
                    kbounded: shapes::grassmannian_to_kbounded(&l.w)?.parts().to_vec(),
                });
            }
            t.push(TraceEvent::KSchur {
                kbounded: kb.parts().to_vec(),
                h_poly: poly.to_string(),
            });
        }
        let base = NilCoxElem::basis(&long.w)?;
        let prod = nilcoxeter::apply_h_poly(self.n, &poly, &base, true)?;
        let out = self
            .psi_traced(prod.terms(), trace.as_deref_mut())?
            .shift_q((a.r + b.r) as i64);
        self.check_effective(&out)?;
        if let Some(t) = trace {
            t.push(TraceEvent::Result { terms: out.to_terms() });
        }
        Ok(out)
    }

    /// The same product through full non-commutative k-Schur functions and a
    /// verified j-expansion. Only practical for small ranks.
    pub fn peterson_product_full(&self, lambda: &Partition, mu: &Partition) -> Result<QClass> {
        let a = self.lift(lambda)?;
        let b = self.lift(mu)?;
        let ja = nilcoxeter::noncomm_kschur(self.n, &shapes::grassmannian_to_kbounded(&a.w)?)?;
        let jb = nilcoxeter::noncomm_kschur(self.n, &shapes::grassmannian_to_kbounded(&b.w)?)?;
        let out = self.psi(&ja.multiply(&jb)?)?.shift_q((a.r + b.r) as i64);
        self.check_effective(&out)?;
        Ok(out)
    }

    fn check_effective(&self, x: &QClass) -> Result<()> {
        for ((d, s), &c) in x.terms() {
            if c < 0 || *d < 0 {
                return Err(Error::NegativeStructureConstant {
                    shape: s.parts().to_vec(),
                    qdeg: *d,
                    coeff: c,
                });
            }
        }
        Ok(())
    }

    /// `T . iota . psi` on a generator, landing in `Gr(n - m, n)`.
    pub fn twisted_image(&self, elem: &NilCoxElem) -> Result<QClass> {
        Ok(self.psi(elem)?.strange_duality().dual_transpose())
    }

    /// Checks `htilde_r -> sigma_(r)`, `etilde_r -> sigma_(1^r)` (zero past the
    /// box) and `etilde_{n-m} htilde_m -> q` under `T . iota . psi`.
    pub fn modpet_check(&self) -> Result<Vec<CheckEntry>> {
        let target = self.ring.dual();
        let mut out = Vec::new();
        for r in 1..self.n {
            let row = Partition::new(vec![r])?;
            let col = Partition::new(vec![1; r])?;
            let expected_h = if r <= self.m { target.schubert(&row)? } else { target.zero() };
            let expected_e = if r <= self.n - self.m { target.schubert(&col)? } else { target.zero() };
            out.push(CheckEntry::compare(
                format!("h{r}"),
                &expected_h,
                &self.twisted_image(&htilde(self.n, r)?)?,
            ));
            out.push(CheckEntry::compare(
                format!("e{r}"),
                &expected_e,
                &self.twisted_image(&etilde(self.n, r)?)?,
            ));
        }
        let z = etilde(self.n, self.n - self.m)?.multiply(&htilde(self.n, self.m)?)?;
        out.push(CheckEntry::compare(
            format!("z{}", self.n - self.m),
            &target.q_power(1),
            &self.twisted_image(&z)?,
        ));
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn w(n: usize, letters: &[usize]) -> AffinePermutation {
        AffinePermutation::from_letters(n, letters).unwrap()
    }

    #[test]
    fn lifts_in_gr13() {
        let ctx = PetersonContext::new(1, 3).unwrap();
        let l0 = ctx.lift(&Partition::empty()).unwrap();
        assert_eq!((l0.w, l0.r), (AffinePermutation::identity(3).unwrap(), 0));
        let l1 = ctx.lift(&p(&[1])).unwrap();
        assert_eq!((l1.w, l1.r), (w(3, &[2, 0]), 1));
        let l2 = ctx.lift(&p(&[2])).unwrap();
        assert_eq!((l2.w, l2.r), (w(3, &[0]), 1));
    }

    #[test]
    fn u_lift_and_hook() {
        let u = AffinePermutation::u_element(8, 3).unwrap();
        assert_eq!(shapes::grassmannian_to_kbounded(&u).unwrap(), p(&[3, 1, 1, 1, 1, 1]));
        for n in 2..=7 {
            for m in 1..n {
                let u = AffinePermutation::u_element(n, m).unwrap();
                let mut hook = vec![m];
                hook.extend(std::iter::repeat_n(1, n - m));
                assert_eq!(shapes::grassmannian_to_kbounded(&u).unwrap(), p(&hook));
                assert!(is_in_parabolic(&u, m));
            }
        }
    }

    #[test]
    fn psi_examples() {
        let ctx = PetersonContext::new(1, 3).unwrap();
        let g = ctx.ring();
        let mut expected = g.zero();
        expected.add_term(-1, p(&[2]), 1).unwrap();
        assert_eq!(ctx.psi(&htilde(3, 1).unwrap()).unwrap(), expected);
        assert!(ctx.psi(&htilde(3, 2).unwrap()).unwrap().is_zero());
        assert!(!ctx.psi(&etilde(3, 2).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn psi_rejects_bad_input() {
        let ctx = PetersonContext::new(1, 3).unwrap();
        let mixed = htilde(3, 1).unwrap().add(&htilde(3, 2).unwrap()).unwrap();
        assert_eq!(ctx.psi(&mixed), Err(Error::NonHomogeneous));
        let stray = NilCoxElem::from_letters(3, &[1]).unwrap();
        assert_eq!(ctx.psi(&stray), Err(Error::NotInFominStanley));
        assert!(ctx.psi(&htilde(4, 1).unwrap()).is_err());
    }

    #[test]
    fn products_in_gr13() {
        let ctx = PetersonContext::new(1, 3).unwrap();
        let g = ctx.ring();
        for a in g.shapes() {
            for b in g.shapes() {
                let expected = g.schubert_product(&a, &b).unwrap();
                assert_eq!(ctx.peterson_product(&a, &b).unwrap(), expected);
                assert_eq!(ctx.peterson_product_full(&a, &b).unwrap(), expected);
            }
        }
    }

    #[test]
    fn engines_agree_small_ranks() {
        for n in 2..=4 {
            for m in 1..n {
                let ctx = PetersonContext::new(m, n).unwrap();
                let shapes = ctx.ring().shapes();
                for a in &shapes {
                    for b in &shapes {
                        assert_eq!(
                            ctx.peterson_product(a, b).unwrap(),
                            ctx.peterson_product_full(a, b).unwrap(),
                            "Gr({m},{n}) {a} * {b}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn lifts_land_in_parabolic_and_factor_back() {
        for n in 2..=6 {
            for m in 1..n {
                let ctx = PetersonContext::new(m, n).unwrap();
                for lam in ctx.ring().shapes() {
                    let l = ctx.lift(&lam).unwrap();
                    assert!(is_in_parabolic(&l.w, m));
                    assert_eq!(l.w.factor_vur(m).unwrap(), (l.v.clone(), l.r));
                    assert!(l.r as usize <= lam.durfee().max(1));
                }
            }
        }
    }

    #[test]
    fn modpet_gr13() {
        let ctx = PetersonContext::new(1, 3).unwrap();
        for e in ctx.modpet_check().unwrap() {
            assert!(e.passed, "{}: {} vs {}", e.label, e.expected, e.actual);
        }
        let ctx = PetersonContext::new(1, 2).unwrap();
        assert!(ctx.modpet_check().unwrap().iter().all(|e| e.passed));
    }

    #[test]
    fn trace_has_all_stages() {
        let ctx = PetersonContext::new(2, 4).unwrap();
        let (out, trace) = ctx.peterson_product_traced(&p(&[2, 1]), &p(&[1])).unwrap();
        assert_eq!(out, ctx.ring().schubert_product(&p(&[2, 1]), &p(&[1])).unwrap());
        let json: Vec<String> = trace.iter().map(|e| serde_json::to_string(e).unwrap()).collect();
        assert!(json[0].contains("\"stage\":\"lift\""));
        assert!(json.iter().any(|l| l.contains("\"stage\":\"factor\"")));
        assert!(json.last().unwrap().contains("\"stage\":\"result\""));
    }
}
