//! Real affine roots of type A and the level-zero action of affine permutations.
//!
//! The root `e_i - e_j + p delta` is modelled as `eps_i - eps_{j + p n}` where
//! `eps_{x + n} = eps_x - delta`. An affine permutation acts by
//! `w . eps_x = eps_{w(x)}`; in this model the simple root `alpha_i` is
//! `eps_i - eps_{i+1}` for every `i`, including `alpha_0 = delta - theta`.

use std::fmt;

use crate::affine_weyl::AffinePermutation;
use crate::error::{Error, Result};

/// `e_i - e_j + p delta` with `1 <= i, j <= n`, `i != j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineRoot {
    pub i: usize,
    pub j: usize,
    pub p: i64,
}

impl AffineRoot {
    pub fn new(n: usize, i: usize, j: usize, p: i64) -> Result<Self> {
        if i == j || i == 0 || j == 0 || i > n || j > n {
            return Err(Error::InvalidWindow(format!("no root e{i}-e{j} in rank {n}")));
        }
        Ok(AffineRoot { i, j, p })
    }

    pub fn simple(n: usize, i: usize) -> Self {
        if i == 0 {
            AffineRoot { i: n, j: 1, p: 1 }
        } else {
            AffineRoot { i, j: i + 1, p: 0 }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.p > 0 || (self.p == 0 && self.i < self.j)
    }

    pub fn negate(&self) -> Self {
        AffineRoot {
            i: self.j,
            j: self.i,
            p: -self.p,
        }
    }

    pub fn shift(&self, dp: i64) -> Self {
        AffineRoot {
            p: self.p + dp,
            ..*self
        }
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.p {
            0 => write!(f, "e{}-e{}", self.i, self.j),
            1 => write!(f, "e{}-e{}+d", self.i, self.j),
            p => write!(f, "e{}-e{}+{}d", self.i, self.j, p),
        }
    }
}

fn split(x: i64, n: i64) -> (usize, i64) {
    let k = (x - 1).div_euclid(n);
    ((x - k * n) as usize, k)
}

pub fn act(w: &AffinePermutation, root: &AffineRoot) -> Result<AffineRoot> {
    let n = w.rank() as i64;
    let a = w.value(root.i as i64)?;
    let b = w
        .value(root.j as i64)?
        .checked_add(root.p.checked_mul(n).ok_or(Error::Overflow)?)
        .ok_or(Error::Overflow)?;
    let (i, ka) = split(a, n);
    let (j, kb) = split(b, n);
    Ok(AffineRoot { i, j, p: kb - ka })
}

/// Positive roots sent to negative roots by `w`.
pub fn inversions(w: &AffinePermutation) -> Vec<AffineRoot> {
    let n = w.rank() as i64;
    let reach = w
        .window()
        .iter()
        .enumerate()
        .map(|(i, &x)| (x - i as i64 - 1).abs())
        .max()
        .unwrap_or(0);
    let mut out = Vec::new();
    for a in 1..=n {
        let wa = w.value(a).expect("small values");
        for b in a + 1..=a + 2 * reach + n {
            if (b - a) % n == 0 {
                continue;
            }
            if wa > w.value(b).expect("small values") {
                let (j, k) = split(b, n);
                out.push(AffineRoot { i: a as usize, j, p: k });
            }
        }
    }
    out.sort();
    out
}

/// Membership in `S~_n^P` for the cut `m`: every positive root of the Levi
/// subsystem lands in `R^+` or in `R^- + delta`.
pub fn is_in_parabolic(w: &AffinePermutation, m: usize) -> bool {
    let n = w.rank();
    for i in 1..=n {
        for j in i + 1..=n {
            if (i <= m) != (j <= m) {
                continue;
            }
            let image = act(w, &AffineRoot { i, j, p: 0 }).expect("small values");
            let ok = (image.p == 0 && image.i < image.j) || (image.p == 1 && image.i > image.j);
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Whether some reduced word contains a braid factor `i, i+1, i`. For rank at
/// least 3 this is the existence of an affine 321-pattern `a < b < c` with
/// `w(a) > w(b) > w(c)`.
pub fn supports_braid(w: &AffinePermutation) -> bool {
    let n = w.rank() as i64;
    if n < 3 {
        return false;
    }
    let reach = w
        .window()
        .iter()
        .enumerate()
        .map(|(i, &x)| (x - i as i64 - 1).abs())
        .max()
        .unwrap_or(0);
    let span = 2 * reach + n;
    (1..=n).any(|b| {
        let wb = w.value(b).expect("small values");
        let left = (b - span..b).any(|a| w.value(a).expect("small values") > wb);
        let right = (b + 1..=b + span).any(|c| w.value(c).expect("small values") < wb);
        left && right
    })
}

/// `<lambda, alpha_i> >= 0` for `1 <= i < n`.
pub fn is_dominant(lambda: &[i64]) -> bool {
    lambda.windows(2).all(|p| p[0] >= p[1])
}

/// `<lambda, alpha_i> <= 0` for `1 <= i < n`.
pub fn is_antidominant(lambda: &[i64]) -> bool {
    lambda.windows(2).all(|p| p[0] <= p[1])
}
