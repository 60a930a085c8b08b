//! The acceptance suite: nine end-to-end checks shared by the `acceptance`
//! test target and the command line `verify` command.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::affine_weyl::AffinePermutation;
use crate::error::Result;
use crate::nilcoxeter::{self, etilde, htilde, NilCoxElem};
use crate::niltl::{self, etilde_n, htilde_n, z_element};
use crate::oracle;
use crate::peterson::PetersonContext;
use crate::quantum::{Grassmannian, QClass};
use crate::rootsys::{is_in_parabolic, supports_braid};
use crate::shapes::{self, BoxShape, Partition};

/// Size limits for each criterion. `Limits::default()` is the full suite.
#[derive(Clone, Debug)]
pub struct Limits {
    pub cross_route_n: usize,
    pub sampled_n: usize,
    pub samples_per_m: usize,
    pub seed: u64,
    pub jbasis_n: usize,
    pub jbasis_len: usize,
    pub eheq_n: usize,
    pub commute_n: usize,
    pub threshold_n: usize,
    pub braid_parabolic_n: usize,
    pub braid_parabolic_len: usize,
    pub strange_n: usize,
    pub kconj_n: usize,
    pub kconj_size: usize,
    pub dual_products_n: usize,
    pub modpet_n: usize,
    pub bfs_n: usize,
    pub bfs_len: usize,
    pub braid_search_len: usize,
    pub bijection_n: usize,
    pub bijection_len: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits::depth(5)
    }
}

impl Limits {
    /// All rank limits shifted so that the exhaustive cross-route sweep runs
    /// up to rank `d`; `depth(5)` is the full suite.
    pub fn depth(d: usize) -> Self {
        let d = d.max(2);
        Limits {
            cross_route_n: d,
            sampled_n: d + 1,
            samples_per_m: 50,
            seed: 0x5eed,
            jbasis_n: d,
            jbasis_len: 10,
            eheq_n: d,
            commute_n: d + 1,
            threshold_n: d + 1,
            braid_parabolic_n: d,
            braid_parabolic_len: 8,
            strange_n: d + 2,
            kconj_n: d + 1,
            kconj_size: 10,
            dual_products_n: d,
            modpet_n: d + 1,
            bfs_n: d,
            bfs_len: 8,
            braid_search_len: 10,
            bijection_n: d + 1,
            bijection_len: 8,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} criterion {}: {} ({:.2}s) {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

pub const CRITERIA: [(u8, &str); 9] = [
    (1, "Gr(1,3) golden table"),
    (2, "cross-route equality"),
    (3, "j-basis structure"),
    (4, "worked examples"),
    (5, "e/h identities in the nilTemperley-Lieb algebra"),
    (6, "psi thresholds on h and e generators"),
    (7, "braids lie outside S~_n^P"),
    (8, "involutions and isomorphisms"),
    (9, "infrastructure oracles"),
];

/// Collected failures of one criterion.
#[derive(Default)]
struct Failures {
    checked: usize,
    failed: Vec<String>,
}

impl Failures {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed.push(what());
        }
    }

    fn merge(&mut self, other: Failures) {
        self.checked += other.checked;
        self.failed.extend(other.failed);
    }

    fn summary(&self) -> (bool, String) {
        if self.failed.is_empty() {
            (true, format!("{} checks", self.checked))
        } else {
            let shown: Vec<&str> = self.failed.iter().take(5).map(|s| s.as_str()).collect();
            (
                false,
                format!("{} of {} checks failed: {}", self.failed.len(), self.checked, shown.join("; ")),
            )
        }
    }
}

pub fn run_criterion(id: u8, limits: &Limits) -> CriterionResult {
    let start = Instant::now();
    let name = CRITERIA
        .iter()
        .find(|(i, _)| *i == id)
        .map(|(_, n)| *n)
        .unwrap_or("unknown");
    let outcome = match id {
        1 => golden_table(),
        2 => cross_route(limits),
        3 => jbasis_structure(limits),
        4 => worked_examples(),
        5 => eh_identities(limits),
        6 => psi_thresholds(limits),
        7 => braid_outside_parabolic(limits),
        8 => involutions(limits),
        9 => infrastructure(limits),
        _ => Ok(Failures {
            checked: 1,
            failed: vec![format!("no criterion {id}")],
        }),
    };
    let (passed, detail) = match outcome {
        Ok(f) => f.summary(),
        Err(e) => (false, format!("error: {e}")),
    };
    CriterionResult {
        id,
        name,
        passed,
        detail,
        elapsed: start.elapsed(),
    }
}

pub fn run_all(limits: &Limits) -> Vec<CriterionResult> {
    CRITERIA.iter().map(|(id, _)| run_criterion(*id, limits)).collect()
}

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("literal partition")
}

fn word(n: usize, letters: &[usize]) -> AffinePermutation {
    AffinePermutation::from_letters(n, letters).expect("literal word")
}

fn class(g: Grassmannian, terms: &[(i64, &[usize], i64)]) -> Result<QClass> {
    let mut c = g.zero();
    for &(d, s, k) in terms {
        c.add_term(d, p(s), k)?;
    }
    Ok(c)
}

fn golden_table() -> Result<Failures> {
    let mut f = Failures::default();
    let ctx = PetersonContext::new(1, 3)?;
    let g = ctx.ring();
    let table: [(&[usize], &[usize], QClass); 3] = [
        (&[1], &[1], class(g, &[(0, &[2], 1)])?),
        (&[1], &[2], class(g, &[(1, &[], 1)])?),
        (&[2], &[2], class(g, &[(1, &[1], 1)])?),
    ];
    for (a, b, expected) in table {
        let q = g.schubert_product(&p(a), &p(b))?;
        let pet = ctx.peterson_product(&p(a), &p(b))?;
        f.check(q == expected, || format!("qproduct {a:?}*{b:?} = {q}"));
        f.check(pet == expected, || format!("peterson {a:?}*{b:?} = {pet}"));
    }
    Ok(f)
}

fn cross_route_jobs(limits: &Limits) -> Vec<(usize, usize, Partition, Partition)> {
    let mut jobs = Vec::new();
    for n in 2..=limits.cross_route_n {
        for m in 1..n {
            let shapes = Partition::all_in_box(m, n - m);
            for (i, a) in shapes.iter().enumerate() {
                for b in &shapes[i..] {
                    jobs.push((m, n, a.clone(), b.clone()));
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(limits.seed);
    let n = limits.sampled_n;
    if n > limits.cross_route_n {
        for m in 1..n {
            let shapes = Partition::all_in_box(m, n - m);
            for _ in 0..limits.samples_per_m {
                let a = shapes.choose(&mut rng).expect("nonempty").clone();
                let b = shapes.choose(&mut rng).expect("nonempty").clone();
                jobs.push((m, n, a, b));
            }
        }
    }
    jobs
}

fn cross_route(limits: &Limits) -> Result<Failures> {
    let jobs = cross_route_jobs(limits);
    let results: Vec<Result<Option<String>>> = jobs
        .par_iter()
        .map(|(m, n, a, b)| {
            let ctx = PetersonContext::new(*m, *n)?;
            let q = ctx.ring().schubert_product(a, b)?;
            let pet = ctx.peterson_product(a, b)?;
            Ok((q != pet).then(|| format!("Gr({m},{n}) {a}*{b}: {q} vs {pet}")))
        })
        .collect();
    let mut f = Failures::default();
    for r in results {
        let mismatch = r?;
        f.check(mismatch.is_none(), || mismatch.unwrap_or_default());
    }
    Ok(f)
}

/// Grassmannian elements of length at most `len`, via bounded partitions.
fn grassmannian_upto(n: usize, len: usize) -> Result<Vec<AffinePermutation>> {
    let mut out = Vec::new();
    for size in 0..=len {
        for lam in Partition::all_of_size(size, n - 1) {
            out.push(shapes::kbounded_to_grassmannian(n, &lam)?);
        }
    }
    Ok(out)
}

fn jbasis_structure(limits: &Limits) -> Result<Failures> {
    let mut f = Failures::default();
    for n in 2..=limits.jbasis_n {
        let elems = grassmannian_upto(n, limits.jbasis_len)?;
        let parts: Vec<Result<Failures>> = elems
            .par_iter()
            .map(|w| {
                let mut g = Failures::default();
                let lam = shapes::grassmannian_to_kbounded(w)?;
                let j = nilcoxeter::noncomm_kschur(n, &lam)?;
                g.check(j.grassmannian_part() == NilCoxElem::basis(w)?, || {
                    format!("n={n} {lam}: grassmannian part {}", j.grassmannian_part())
                });
                g.check(j.degree() == Some(w.length()), || format!("n={n} {lam}: not homogeneous"));
                Ok(g)
            })
            .collect();
        for part in parts {
            f.merge(part?);
        }
        // The bounded-partition enumeration covers every Grassmannian element.
        if limits.jbasis_len <= 8 || n <= 4 {
            let found: BTreeSet<AffinePermutation> = elems.into_iter().collect();
            let brute: BTreeSet<AffinePermutation> =
                oracle::grassmannian_elements(n, limits.jbasis_len.min(8)).into_iter().collect();
            f.check(brute.is_subset(&found), || format!("n={n}: enumeration misses elements"));
        }
    }
    Ok(f)
}

fn worked_examples() -> Result<Failures> {
    let mut f = Failures::default();

    let core = shapes::kbounded_to_core(4, &p(&[2, 1, 1]))?;
    let w = shapes::core_to_word(&core);
    f.check(core.shape() == &p(&[3, 1, 1]), || format!("core {}", core.shape()));
    f.check(w.letters() == [2, 1, 3, 0], || format!("word {w}"));
    f.check(shapes::core_to_kbounded(&shapes::word_to_core(&w)?) == p(&[2, 1, 1]), || "chain back".into());

    let conj = shapes::kconjugate(5, &p(&[4, 3, 2, 2]))?;
    f.check(conj == p(&[2, 2, 1, 1, 1, 1, 1, 1, 1]), || format!("4-conjugate {conj}"));

    for (lam, text) in [
        (p(&[1, 1]), "h1^2 - h2"),
        (p(&[3, 1, 1]), "h3*(h1^2 - h2)"),
        (p(&[4, 3, 1, 1]), "h4*h3*(h1^2 - h2)"),
    ] {
        let poly = nilcoxeter::kschur_h_poly(5, &lam)?;
        f.check(poly.to_string() == text, || format!("k-Schur {lam}: {poly}"));
    }

    let sum = |n: usize, words: &[&[usize]]| -> Result<NilCoxElem> {
        NilCoxElem::from_terms(n, words.iter().map(|l| (word(n, l), 1)))
    };
    let h2 = sum(4, &[&[1, 0], &[2, 1], &[3, 2], &[0, 3], &[2, 0], &[3, 1]])?;
    let h3 = sum(4, &[&[2, 1, 0], &[3, 2, 1], &[0, 3, 2], &[1, 0, 3]])?;
    f.check(htilde(4, 2)? == h2, || "htilde(4,2)".into());
    f.check(htilde(4, 3)? == h3, || "htilde(4,3)".into());

    let nk = sum(
        5,
        &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[4, 0], &[0, 2], &[0, 3], &[1, 3], &[1, 4], &[2, 4]],
    )?;
    f.check(nilcoxeter::noncomm_kschur(5, &p(&[1, 1]))? == nk, || "noncomm k-Schur (1,1)".into());

    let j = |letters: &[usize]| -> Result<NilCoxElem> {
        nilcoxeter::noncomm_kschur(3, &shapes::grassmannian_to_kbounded(&word(3, letters))?)
    };
    let expand = |x: NilCoxElem| -> Result<NilCoxElem> { NilCoxElem::from_terms(3, nilcoxeter::j_expand(&x)?) };
    f.check(expand(j(&[2, 0])?.multiply(&j(&[2, 0])?)?)? == sum(3, &[&[0, 1, 2, 0]])?, || "j20^2".into());
    f.check(expand(j(&[2, 0])?.multiply(&j(&[0])?)?)? == sum(3, &[&[1, 2, 0]])?, || "j20 j0".into());
    f.check(expand(j(&[0])?.multiply(&j(&[0])?)?)? == sum(3, &[&[1, 0], &[2, 0]])?, || "j0^2".into());

    f.check(AffinePermutation::u_element(3, 1)? == word(3, &[1, 2, 0]), || "u(3,1)".into());
    let u8 = AffinePermutation::u_element(8, 3)?;
    f.check(u8 == word(8, &[3, 4, 5, 6, 7, 2, 1, 0]), || "u(8,3)".into());
    f.check(shapes::grassmannian_to_kbounded(&u8)? == p(&[3, 1, 1, 1, 1, 1]), || "u(8,3) shape".into());
    let u8sq = shapes::grassmannian_to_kbounded(&u8.multiply(&u8)?)?;
    f.check(u8sq == p(&[3, 3, 2, 2, 2, 2, 2]), || format!("u(8,3)^2 shape {u8sq}"));

    f.check(!is_in_parabolic(&word(3, &[1, 0]), 1), || "s10 in S~^P".into());
    let members: Vec<AffinePermutation> = [
        &[0][..],
        &[2, 0],
        &[1, 2, 0],
        &[0, 1, 2, 0],
        &[2, 0, 1, 2, 0],
        &[1, 2, 0, 1, 2, 0],
    ]
    .iter()
    .map(|l| word(3, l))
    .collect();
    for w in &members {
        f.check(is_in_parabolic(w, 1), || format!("{w} not in S~^P"));
    }
    let found: Vec<AffinePermutation> = oracle::grassmannian_elements(3, 6)
        .into_iter()
        .filter(|w| !w.is_identity() && is_in_parabolic(w, 1))
        .collect();
    f.check(found.len() == members.len(), || format!("{} members of length <= 6", found.len()));

    let b = BoxShape::new(5, 9, p(&[3, 2, 2, 1, 1]))?;
    let g = Grassmannian::new(5, 9)?;
    let image = g.schubert(b.shape())?.strange_duality();
    f.check(image == class(g, &[(-2, &[4, 3, 1, 1], 1)])?, || format!("strange dual {image}"));
    f.check(
        b.to_perm().window() == [2, 3, 5, 6, 8, 1, 4, 7, 9],
        || "Gr(5,9) permutation".into(),
    );
    Ok(f)
}

fn eh_identities(limits: &Limits) -> Result<Failures> {
    let mut f = Failures::default();
    for n in 3..=limits.eheq_n {
        f.check(niltl::verify_eheq(n)?, || format!("eheq fails at n={n}"));
    }
    for n in 2..=limits.commute_n {
        let mut gens = Vec::new();
        for r in 1..n {
            gens.push((format!("h{r}"), htilde_n(n, r)?));
            gens.push((format!("e{r}"), etilde_n(n, r)?));
        }
        for i in 1..n {
            for j in 1..n {
                if i + j > n {
                    let prod = etilde_n(n, i)?.multiply(&htilde_n(n, j)?)?;
                    f.check(prod.is_zero(), || format!("n={n}: e{i} h{j} != 0"));
                }
            }
            let z = z_element(n, i)?;
            for (label, g) in &gens {
                f.check(z.commutes_with(g)?, || format!("n={n}: z{i} vs {label}"));
            }
        }
        for (a, ga) in &gens {
            for (b, gb) in &gens {
                f.check(ga.commutes_with(gb)?, || format!("n={n}: {a} vs {b}"));
            }
        }
    }
    Ok(f)
}

fn psi_thresholds(limits: &Limits) -> Result<Failures> {
    let mut f = Failures::default();
    for n in 2..=limits.threshold_n {
        for m in 1..n {
            let ctx = PetersonContext::new(m, n)?;
            for r in 1..n {
                let h = ctx.psi(&htilde(n, r)?)?;
                let e = ctx.psi(&etilde(n, r)?)?;
                f.check(h.is_zero() == (r > m), || format!("Gr({m},{n}) psi(h{r}) = {h}"));
                f.check(e.is_zero() == (r > n - m), || format!("Gr({m},{n}) psi(e{r}) = {e}"));
            }
        }
    }
    Ok(f)
}

fn braid_outside_parabolic(limits: &Limits) -> Result<Failures> {
    let mut f = Failures::default();
    for n in 2..=limits.braid_parabolic_n {
        for w in grassmannian_upto(n, limits.braid_parabolic_len)? {
            let braid = supports_braid(&w);
            let lam = shapes::grassmannian_to_kbounded(&w)?;
            let killed = niltl::project(&nilcoxeter::noncomm_kschur(n, &lam)?).is_zero();
            for m in 1..n {
                let inside = is_in_parabolic(&w, m);
                f.check(!(braid && inside), || format!("n={n} m={m} {w}: braid inside S~^P"));
                f.check(!(killed && inside), || format!("n={n} m={m} {w}: killed by projection"));
            }
        }
    }
    Ok(f)
}

fn involutions(limits: &Limits) -> Result<Failures> {
    let mut f = Failures::default();
    for n in 2..=limits.strange_n {
        for m in 1..n {
            let g = Grassmannian::new(m, n)?;
            for lam in g.shapes() {
                let x = g.schubert(&lam)?;
                f.check(x.strange_duality().strange_duality() == x, || format!("Gr({m},{n}) iota^2 {lam}"));
            }
        }
    }
    for n in 2..=limits.kconj_n {
        for size in 0..=limits.kconj_size {
            for lam in Partition::all_of_size(size, n - 1) {
                let back = shapes::kconjugate(n, &shapes::kconjugate(n, &lam)?)?;
                f.check(back == lam, || format!("n={n} kconj^2 {lam}"));
            }
        }
    }
    for n in 2..=limits.dual_products_n {
        for m in 1..n {
            let g = Grassmannian::new(m, n)?;
            let t = g.dual();
            let shapes = g.shapes();
            for (i, a) in shapes.iter().enumerate() {
                for b in &shapes[i..] {
                    let (x, y) = (g.schubert(a)?, g.schubert(b)?);
                    let xy = g.qproduct(&x, &y)?;
                    let tx = t.qproduct(&x.dual_transpose(), &y.dual_transpose())?;
                    f.check(xy.dual_transpose() == tx, || format!("Gr({m},{n}) T({a}*{b})"));
                    let ix = g.qproduct(&x.strange_duality(), &y.strange_duality())?;
                    f.check(xy.strange_duality() == ix, || format!("Gr({m},{n}) iota({a}*{b})"));
                }
            }
        }
    }
    let mut jobs = Vec::new();
    for n in 2..=limits.modpet_n {
        for m in 1..n {
            jobs.push((m, n));
        }
    }
    let reports: Vec<Result<Failures>> = jobs
        .par_iter()
        .map(|&(m, n)| {
            let mut g = Failures::default();
            for e in PetersonContext::new(m, n)?.modpet_check()? {
                g.check(e.passed, || format!("modpet Gr({m},{n}) {}: {} vs {}", e.label, e.expected, e.actual));
            }
            for e in niltl::postnikov_generator_check(m, n)? {
                g.check(e.passed, || format!("postnikov Gr({m},{n}) {}: {} vs {}", e.label, e.expected, e.actual));
            }
            Ok(g)
        })
        .collect();
    for r in reports {
        f.merge(r?);
    }
    Ok(f)
}

fn infrastructure(limits: &Limits) -> Result<Failures> {
    let mut f = Failures::default();
    for n in 2..=limits.bfs_n {
        let dist = oracle::bfs_lengths(n, limits.bfs_len.max(limits.braid_search_len));
        let mut memo = HashMap::new();
        for (w, &d) in &dist {
            if d <= limits.bfs_len {
                f.check(w.length() == d as u64, || format!("n={n} {w}: length {} vs {d}", w.length()));
                let rw = w.reduced_word();
                f.check(
                    rw.len() == d && AffinePermutation::from_word(&rw)? == *w,
                    || format!("n={n} {w}: reduced word {rw}"),
                );
            }
            if d <= limits.braid_search_len {
                let brute = oracle::has_braid_factor(w, &dist, &mut memo);
                f.check(supports_braid(w) == brute, || format!("n={n} {w}: braid {brute}"));
            }
        }
    }
    for n in 2..=limits.bijection_n {
        for w in grassmannian_upto(n, limits.bijection_len)? {
            let lam = shapes::grassmannian_to_kbounded(&w)?;
            let core = shapes::kbounded_to_core(n, &lam)?;
            let rw = shapes::core_to_word(&core);
            f.check(shapes::core_to_kbounded(&core) == lam, || format!("n={n} {lam}: core round trip"));
            f.check(shapes::word_to_core(&rw)? == core, || format!("n={n} {lam}: word round trip"));
            f.check(AffinePermutation::from_word(&rw)? == w, || format!("n={n} {lam}: element"));
            f.check(rw == w.reduced_word(), || format!("n={n} {lam}: reduced word"));
            f.check(core.shape().is_core(n) && lam.size() == w.length() as usize, || format!("n={n} {lam}: sizes"));
        }
        for m in 1..n {
            let ctx = PetersonContext::new(m, n)?;
            for lam in ctx.ring().shapes() {
                let b = BoxShape::new(m, n, lam.clone())?;
                let v = b.to_perm();
                f.check(BoxShape::from_perm(m, &v)? == b, || format!("Gr({m},{n}) {lam}: perm"));
                f.check(
                    BoxShape::from_zero_one_word(&b.zero_one_word())? == b,
                    || format!("Gr({m},{n}) {lam}: 01-word"),
                );
                let lift = ctx.lift(&lam)?;
                f.check(lift.w.factor_vur(m)? == (v, lift.r), || format!("Gr({m},{n}) {lam}: factor"));
            }
        }
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_depth_suite_passes() {
        let limits = Limits {
            jbasis_len: 6,
            braid_parabolic_len: 6,
            kconj_size: 6,
            bfs_len: 5,
            braid_search_len: 6,
            bijection_len: 5,
            samples_per_m: 5,
            ..Limits::depth(3)
        };
        for r in run_all(&limits) {
            assert!(r.passed, "{r}");
        }
    }
}
