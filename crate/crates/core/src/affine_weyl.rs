//! Affine permutations of type A in window notation.
//!
//! An affine permutation `w` of rank `n` is a bijection of the integers with
//! `w(i + n) = w(i) + n` and `w(1) + ... + w(n) = n(n+1)/2`. It is stored by its
//! window `[w(1), ..., w(n)]`. The generator `s_i` exchanges the values `i` and
//! `i + 1` modulo `n`; products compose as functions, `(uv)(x) = u(v(x))`, so
//! right multiplication by `s_i` swaps window positions `i` and `i + 1`.

use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Window = SmallVec<[i64; 8]>;

/// A word in the generators `s_0, ..., s_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    n: usize,
    letters: Vec<usize>,
}

impl Word {
    pub fn new(n: usize, letters: Vec<usize>) -> Result<Self> {
        check_rank(n)?;
        if let Some(&bad) = letters.iter().find(|&&l| l >= n) {
            return Err(Error::InvalidLetter { letter: bad, n });
        }
        Ok(Word { n, letters })
    }

    /// Parses `"1,2,0"`, `"1 2 0"` or, for `n <= 10`, the compact form `"120"`.
    /// The empty string and `"e"` give the empty word.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "e" {
            return Word::new(n, Vec::new());
        }
        let has_sep = s.contains(',') || s.contains(char::is_whitespace);
        let letters: std::result::Result<Vec<usize>, _> = if has_sep {
            s.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>())
                .collect()
        } else if n <= 10 {
            s.chars().map(|c| c.to_string().parse::<usize>()).collect()
        } else {
            s.parse::<usize>().map(|x| vec![x])
        };
        let letters = letters.map_err(|_| Error::Parse(format!("bad word {s:?}")))?;
        Word::new(n, letters)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Subscript form used in `A_{...}` and `s_{...}` notation.
    pub fn subscript(&self) -> String {
        let sep = if self.n > 10 { "," } else { "" };
        self.letters
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(sep)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

pub(crate) fn check_rank(n: usize) -> Result<()> {
    if n < 2 || n > i64::MAX as usize / 4 {
        Err(Error::InvalidRank(n))
    } else {
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePermutation {
    window: Window,
}

impl AffinePermutation {
    pub fn identity(n: usize) -> Result<Self> {
        check_rank(n)?;
        Ok(AffinePermutation {
            window: (1..=n as i64).collect(),
        })
    }

    pub fn from_window(window: &[i64]) -> Result<Self> {
        let n = window.len();
        check_rank(n)?;
        let ni = n as i64;
        let mut seen = vec![false; n];
        let mut sum: i64 = 0;
        for &x in window {
            let r = x.rem_euclid(ni) as usize;
            if seen[r] {
                return Err(Error::InvalidWindow(format!(
                    "{window:?}: residues are not distinct mod {n}"
                )));
            }
            seen[r] = true;
            sum = sum.checked_add(x).ok_or(Error::Overflow)?;
        }
        let expected = ni * (ni + 1) / 2;
        if sum != expected {
            return Err(Error::InvalidWindow(format!(
                "{window:?}: entries sum to {sum}, expected {expected}"
            )));
        }
        Ok(AffinePermutation {
            window: window.iter().copied().collect(),
        })
    }

    /// Parses `"[-2,2,6]"` (brackets optional).
    pub fn parse_window(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let entries: std::result::Result<Vec<i64>, _> = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i64>())
            .collect();
        let entries = entries.map_err(|_| Error::Parse(format!("bad window {s:?}")))?;
        Self::from_window(&entries)
    }

    pub fn generator(n: usize, i: usize) -> Result<Self> {
        Self::identity(n)?.mul_generator(i)
    }

    pub fn from_word(word: &Word) -> Result<Self> {
        let mut w = Self::identity(word.rank())?;
        for &l in word.letters() {
            w = w.mul_generator(l)?;
        }
        Ok(w)
    }

    pub fn from_letters(n: usize, letters: &[usize]) -> Result<Self> {
        Self::from_word(&Word::new(n, letters.to_vec())?)
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &x)| x == i as i64 + 1)
    }

    /// `w(x)` for any integer `x`.
    pub fn value(&self, x: i64) -> Result<i64> {
        let n = self.rank() as i64;
        let r = (x - 1).rem_euclid(n);
        let k = (x - 1 - r) / n;
        k.checked_mul(n)
            .and_then(|s| self.window[r as usize].checked_add(s))
            .ok_or(Error::Overflow)
    }

    /// `w^{-1}(y)` for any integer `y`.
    pub fn inverse_value(&self, y: i64) -> Result<i64> {
        let n = self.rank() as i64;
        for (p, &x) in self.window.iter().enumerate() {
            let d = x.checked_sub(y).ok_or(Error::Overflow)?;
            if d.rem_euclid(n) == 0 {
                return (p as i64 + 1).checked_sub(d).ok_or(Error::Overflow);
            }
        }
        unreachable!("window residues form a complete system")
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        let window = other
            .window
            .iter()
            .map(|&x| self.value(x))
            .collect::<Result<Window>>()?;
        Ok(AffinePermutation { window })
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.rank();
        let window = (1..=n as i64)
            .map(|y| self.inverse_value(y))
            .collect::<Result<Window>>()?;
        Ok(AffinePermutation { window })
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::identity(self.rank())?;
        for _ in 0..e.unsigned_abs() {
            acc = acc.multiply(&base)?;
        }
        Ok(acc)
    }

    /// `w * s_i`.
    pub fn mul_generator(&self, i: usize) -> Result<Self> {
        let n = self.rank();
        if i >= n {
            return Err(Error::InvalidLetter { letter: i, n });
        }
        let mut window = self.window.clone();
        if i == 0 {
            let ni = n as i64;
            let first = window[0];
            window[0] = window[n - 1].checked_sub(ni).ok_or(Error::Overflow)?;
            window[n - 1] = first.checked_add(ni).ok_or(Error::Overflow)?;
        } else {
            window.swap(i - 1, i);
        }
        Ok(AffinePermutation { window })
    }

    /// `s_i * w`.
    pub fn left_mul_generator(&self, i: usize) -> Result<Self> {
        let n = self.rank();
        if i >= n {
            return Err(Error::InvalidLetter { letter: i, n });
        }
        let ni = n as i64;
        let lo = i as i64;
        let hi = (i as i64 + 1) % ni;
        let window = self
            .window
            .iter()
            .map(|&x| {
                let r = x.rem_euclid(ni);
                if r == lo {
                    x.checked_add(1).ok_or(Error::Overflow)
                } else if r == hi {
                    x.checked_sub(1).ok_or(Error::Overflow)
                } else {
                    Ok(x)
                }
            })
            .collect::<Result<Window>>()?;
        Ok(AffinePermutation { window })
    }

    pub fn length(&self) -> u64 {
        let n = self.rank() as i64;
        let w = &self.window;
        let mut total = 0u64;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                total += (w[j] - w[i]).div_euclid(n).unsigned_abs();
            }
        }
        total
    }

    pub fn has_right_descent(&self, i: usize) -> bool {
        let n = self.rank();
        if i == 0 {
            self.window[n - 1] - n as i64 > self.window[0]
        } else {
            self.window[i - 1] > self.window[i]
        }
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.has_right_descent(i)).collect()
    }

    pub fn has_left_descent(&self, i: usize) -> bool {
        let a = self.inverse_value(i as i64).expect("small values");
        let b = self.inverse_value(i as i64 + 1).expect("small values");
        a > b
    }

    pub fn left_descents(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.has_left_descent(i)).collect()
    }

    /// The lexicographically least reduced word.
    pub fn reduced_word(&self) -> Word {
        let n = self.rank();
        let mut letters = Vec::with_capacity(self.length() as usize);
        let mut w = self.clone();
        while !w.is_identity() {
            let i = (0..n)
                .find(|&i| w.has_left_descent(i))
                .expect("non-identity element has a left descent");
            letters.push(i);
            w = w.left_mul_generator(i).expect("descending keeps values small");
        }
        Word { n, letters }
    }

    /// Minimal length representative of its coset in `S~_n / S_n`: the only
    /// possible right descent is `s_0`.
    pub fn is_grassmannian(&self) -> bool {
        self.window.windows(2).all(|p| p[0] < p[1])
    }

    /// True when the window is a permutation of `1..=n`.
    pub fn is_finite(&self) -> bool {
        let n = self.rank() as i64;
        self.window.iter().all(|&x| (1..=n).contains(&x))
    }

    /// Finite and increasing on positions `1..=m` and `m+1..=n`.
    pub fn is_coset_min(&self, m: usize) -> bool {
        m <= self.rank()
            && self.is_finite()
            && self.window[..m].windows(2).all(|p| p[0] < p[1])
            && self.window[m..].windows(2).all(|p| p[0] < p[1])
    }

    /// The translation `t_lambda` with window `i + n * lambda_i`.
    pub fn translation(n: usize, lambda: &[i64]) -> Result<Self> {
        check_rank(n)?;
        if lambda.len() != n {
            return Err(Error::RankMismatch {
                left: n,
                right: lambda.len(),
            });
        }
        let mut total: i64 = 0;
        for &x in lambda {
            total = total.checked_add(x).ok_or(Error::Overflow)?;
        }
        if total != 0 {
            return Err(Error::NotInRootLattice(lambda.to_vec()));
        }
        let ni = n as i64;
        let window = lambda
            .iter()
            .enumerate()
            .map(|(i, &l)| {
                l.checked_mul(ni)
                    .and_then(|x| x.checked_add(i as i64 + 1))
                    .ok_or(Error::Overflow)
            })
            .collect::<Result<Window>>()?;
        Ok(AffinePermutation { window })
    }

    /// The element `u = s_{m, m+1, ..., n-1, m-1, ..., 1, 0}` for the cut `m`.
    pub fn u_element(n: usize, m: usize) -> Result<Self> {
        check_rank(n)?;
        if m == 0 || m >= n {
            return Err(Error::CutOutOfRange { m, n });
        }
        let letters: Vec<usize> = (m..n).chain((0..m).rev()).collect();
        Self::from_letters(n, &letters)
    }

    /// Writes `w = v * u^r` with `v` a finite permutation that is a minimal
    /// coset representative for the cut `m`.
    pub fn factor_vur(&self, m: usize) -> Result<(Self, u32)> {
        let n = self.rank();
        let u_inv = Self::u_element(n, m)?.inverse()?;
        let mut cur = self.clone();
        for r in 0..=self.length() + 1 {
            if cur.is_coset_min(m) {
                return Ok((cur, r as u32));
            }
            cur = cur.multiply(&u_inv)?;
        }
        Err(Error::FactorizationFailed(format!(
            "{self} with cut {m}"
        )))
    }
}

impl fmt::Display for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}
