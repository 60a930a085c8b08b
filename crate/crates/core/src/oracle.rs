//! Brute-force reference computations used to cross-check the fast paths.
//!
//! Everything here is derived from the group structure alone (breadth-first
//! search over the Cayley graph, literal generator actions) and avoids the
//! closed formulas used elsewhere in the crate.

use std::collections::{HashMap, VecDeque};

use crate::affine_weyl::AffinePermutation;

/// Word length of every element of length at most `max_len`, by BFS.
pub fn bfs_lengths(n: usize, max_len: usize) -> HashMap<AffinePermutation, usize> {
    let id = AffinePermutation::identity(n).expect("valid rank");
    let mut dist = HashMap::new();
    dist.insert(id.clone(), 0);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        let d = dist[&x];
        if d == max_len {
            continue;
        }
        for i in 0..n {
            let y = x.mul_generator(i).expect("small values");
            if !dist.contains_key(&y) {
                dist.insert(y.clone(), d + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}

/// All reduced words of `x`, read off the BFS distance table.
pub fn reduced_words(
    x: &AffinePermutation,
    dist: &HashMap<AffinePermutation, usize>,
) -> Vec<Vec<usize>> {
    let d = dist[x];
    if d == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..x.rank() {
        let y = x.mul_generator(i).expect("small values");
        if dist.get(&y) == Some(&(d - 1)) {
            for mut word in reduced_words(&y, dist) {
                word.push(i);
                out.push(word);
            }
        }
    }
    out
}

/// Whether some reduced word of `x` contains a factor `i, i+1, i` or
/// `i+1, i, i+1` (indices mod `n`). Needs `dist` to cover `x`.
pub fn has_braid_factor(
    x: &AffinePermutation,
    dist: &HashMap<AffinePermutation, usize>,
    memo: &mut HashMap<AffinePermutation, bool>,
) -> bool {
    let n = x.rank();
    if n < 3 {
        return false;
    }
    if let Some(&b) = memo.get(x) {
        return b;
    }
    let d = dist[x];
    let mut found = false;
    for i in 0..n {
        let y = x.mul_generator(i).expect("small values");
        if dist.get(&y) != Some(&(d.wrapping_sub(1))) || d == 0 {
            continue;
        }
        for j in [(i + 1) % n, (i + n - 1) % n] {
            let z = y
                .mul_generator(j)
                .and_then(|z| z.mul_generator(i))
                .expect("small values");
            if d >= 3 && dist.get(&z) == Some(&(d - 3)) {
                found = true;
            }
        }
        if found || has_braid_factor(&y, dist, memo) {
            found = true;
            break;
        }
    }
    memo.insert(x.clone(), found);
    found
}

/// Grassmannian elements of length at most `max_len`, characterised by every
/// right multiplication other than `s_0` increasing the BFS length.
pub fn grassmannian_elements(n: usize, max_len: usize) -> Vec<AffinePermutation> {
    let dist = bfs_lengths(n, max_len + 1);
    let mut out: Vec<AffinePermutation> = dist
        .iter()
        .filter(|(x, &d)| {
            d <= max_len
                && (1..n).all(|i| dist.get(&x.mul_generator(i).unwrap()) == Some(&(d + 1)))
        })
        .map(|(x, _)| x.clone())
        .collect();
    out.sort();
    out
}

/// An affine root `alpha + p delta` with `alpha` a vector in `Z^n`, acted on by
/// the affine reflections of the fundamental alcove.
#[derive(Clone, Debug, PartialEq, Eq)]
struct RootVector {
    alpha: Vec<i64>,
    p: i64,
}

impl RootVector {
    fn apply_generator(&mut self, i: usize) {
        let n = self.alpha.len();
        if i == 0 {
            let pairing = self.alpha[0] - self.alpha[n - 1];
            self.alpha[0] -= pairing;
            self.alpha[n - 1] += pairing;
            self.p += pairing;
        } else {
            self.alpha.swap(i - 1, i);
        }
    }

    fn is_positive(&self) -> bool {
        if self.p != 0 {
            return self.p > 0;
        }
        let i = self.alpha.iter().position(|&x| x == 1).unwrap();
        let j = self.alpha.iter().position(|&x| x == -1).unwrap();
        i < j
    }
}

/// Membership in `S~_n^P` straight from the definition: `w` sends every
/// positive affine root of the parabolic subsystem to a positive root.
pub fn in_parabolic_by_definition(w: &AffinePermutation, m: usize) -> bool {
    let n = w.rank();
    let word = w.reduced_word();
    let bound = 2 * word.len() as i64 + 2;
    let same_block = |i: usize, j: usize| (i < m) == (j < m);
    for i in 0..n {
        for j in 0..n {
            if i == j || !same_block(i, j) {
                continue;
            }
            let start = if i < j { 0 } else { 1 };
            for p in start..=bound {
                let mut alpha = vec![0; n];
                alpha[i] = 1;
                alpha[j] = -1;
                let mut root = RootVector { alpha, p };
                for &l in word.letters().iter().rev() {
                    root.apply_generator(l);
                }
                if !root.is_positive() {
                    return false;
                }
            }
        }
    }
    true
}
