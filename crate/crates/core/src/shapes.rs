//! Partitions, n-cores, k-bounded partitions and shapes in a box.

use std::fmt;

use crate::affine_weyl::{check_rank, AffinePermutation, Word};
use crate::error::{Error, Result};

/// A partition stored as its weakly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Accepts a weakly decreasing sequence; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|p| p[0] < p[1]) || parts.contains(&0) {
            return Err(Error::NotPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Parses `"3,1,1"`; `""`, `"0"` and `"empty"` give the empty partition.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if s.is_empty() || s == "0" || s.eq_ignore_ascii_case("empty") {
            return Ok(Self::empty());
        }
        let parts: std::result::Result<Vec<usize>, _> = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>())
            .collect();
        Self::new(parts.map_err(|_| Error::Parse(format!("bad partition {s:?}")))?)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn transpose(&self) -> Self {
        let width = self.part(0);
        Partition((0..width).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// Hook length of the cell in row `i`, column `j` (0-based).
    pub fn hook(&self, i: usize, j: usize) -> usize {
        let leg = self.0[i + 1..].iter().filter(|&&p| p > j).count();
        self.0[i] - j + leg
    }

    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        (0..self.len())
            .map(|i| (0..self.0[i]).map(|j| self.hook(i, j)).collect())
            .collect()
    }

    /// Side of the Durfee square.
    pub fn durfee(&self) -> usize {
        self.0.iter().enumerate().take_while(|&(i, &p)| p > i).count()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// `self / smaller` has at most one cell per column.
    pub fn is_horizontal_strip_over(&self, smaller: &Partition) -> bool {
        self.contains(smaller) && (0..self.len()).all(|i| i == 0 || self.0[i] <= smaller.part(i - 1))
    }

    /// `self / smaller` has at most one cell per row.
    pub fn is_vertical_strip_over(&self, smaller: &Partition) -> bool {
        self.contains(smaller) && (0..self.len()).all(|i| self.0[i] <= smaller.part(i) + 1)
    }

    pub fn is_core(&self, n: usize) -> bool {
        (0..self.len()).all(|i| (0..self.0[i]).all(|j| !self.hook(i, j).is_multiple_of(n)))
    }

    fn addable_rows(&self) -> impl Iterator<Item = usize> + '_ {
        (0..=self.len()).filter(move |&i| i == 0 || self.part(i - 1) > self.part(i))
    }

    fn removable_rows(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| self.part(i) > self.part(i + 1))
    }

    /// All partitions fitting in a `rows x cols` rectangle, in lexicographic order.
    pub fn all_in_box(rows: usize, cols: usize) -> Vec<Partition> {
        fn rec(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition::new(cur.clone()).unwrap());
            if cur.len() == rows {
                return;
            }
            for p in 1..=max {
                cur.push(p);
                rec(rows, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(rows, cols, &mut Vec::new(), &mut out);
        out.sort();
        out.dedup();
        out
    }

    /// All partitions of `size` with parts at most `max_part`.
    pub fn all_of_size(size: usize, max_part: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=max.min(rest)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(size, max_part, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Residue of the cell in row `i`, column `j` (0-based).
fn residue(i: usize, j: usize, n: usize) -> usize {
    (j + n * (i / n + 1) - i) % n
}

/// An `n`-core: no hook length divisible by `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Core {
    n: usize,
    shape: Partition,
}

impl Core {
    pub fn new(n: usize, shape: Partition) -> Result<Self> {
        check_rank(n)?;
        if !shape.is_core(n) {
            return Err(Error::NotCore {
                shape: shape.0,
                n,
            });
        }
        Ok(Core { n, shape })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }
}

fn check_bounded(n: usize, lambda: &Partition) -> Result<()> {
    check_rank(n)?;
    match lambda.0.first() {
        Some(&p) if p >= n => Err(Error::PartTooLarge { part: p, bound: n - 1 }),
        _ => Ok(()),
    }
}

/// The `n`-core of an `(n-1)`-bounded partition: rows are placed from the
/// bottom up, each shifted right just enough that its cells have hook length
/// below `n`.
pub fn kbounded_to_core(n: usize, lambda: &Partition) -> Result<Core> {
    check_bounded(n, lambda)?;
    let k = n - 1;
    let len = lambda.len();
    let mut rows = vec![0usize; len];
    for i in (0..len).rev() {
        let part = lambda.0[i];
        let mut shift = 0;
        loop {
            let leg = rows[i + 1..].iter().filter(|&&c| c > shift).count();
            if part + leg <= k {
                break;
            }
            shift += 1;
        }
        rows[i] = part + shift;
    }
    Core::new(n, Partition::new(rows)?)
}

/// Counts, row by row, the cells of hook length below `n`.
pub fn core_to_kbounded(core: &Core) -> Partition {
    let shape = &core.shape;
    let parts = (0..shape.len())
        .map(|i| (0..shape.0[i]).filter(|&j| shape.hook(i, j) < core.n).count())
        .collect();
    Partition::new(parts).expect("bounded cells form a partition")
}

/// The lexicographically least reduced word of the Grassmannian element
/// attached to `core`, found by repeatedly stripping all removable cells of
/// the smallest available residue.
pub fn core_to_word(core: &Core) -> Word {
    let n = core.n;
    let mut rows = core.shape.0.clone();
    let mut letters = Vec::new();
    loop {
        let shape = Partition(rows.clone());
        let best = shape
            .removable_rows()
            .map(|i| residue(i, rows[i] - 1, n))
            .min();
        let Some(r) = best else { break };
        let strip: Vec<usize> = shape
            .removable_rows()
            .filter(|&i| residue(i, rows[i] - 1, n) == r)
            .collect();
        for i in strip {
            rows[i] -= 1;
        }
        while rows.last() == Some(&0) {
            rows.pop();
        }
        letters.push(r);
    }
    Word::new(n, letters).expect("residues are below n")
}

/// Builds the core by applying the letters right to left, each adding every
/// addable cell of its residue.
pub fn word_to_core(word: &Word) -> Result<Core> {
    let n = word.rank();
    let mut rows: Vec<usize> = Vec::new();
    for &r in word.letters().iter().rev() {
        let shape = Partition(rows.clone());
        if shape.removable_rows().any(|i| residue(i, rows[i] - 1, n) == r) {
            return Err(Error::NotGrassmannianWord(word.to_string()));
        }
        let add: Vec<usize> = shape
            .addable_rows()
            .filter(|&i| residue(i, shape.part(i), n) == r)
            .collect();
        if add.is_empty() {
            return Err(Error::NotGrassmannianWord(word.to_string()));
        }
        for i in add {
            if i == rows.len() {
                rows.push(1);
            } else {
                rows[i] += 1;
            }
        }
    }
    Core::new(n, Partition::new(rows)?)
}

/// The k-conjugate: transpose the core and read back the bounded partition.
pub fn kconjugate(n: usize, lambda: &Partition) -> Result<Partition> {
    let core = kbounded_to_core(n, lambda)?;
    let flipped = Core::new(n, core.shape.transpose())?;
    Ok(core_to_kbounded(&flipped))
}

pub fn grassmannian_to_core(w: &AffinePermutation) -> Result<Core> {
    if !w.is_grassmannian() {
        return Err(Error::NotGrassmannian);
    }
    word_to_core(&w.reduced_word())
}

pub fn grassmannian_to_kbounded(w: &AffinePermutation) -> Result<Partition> {
    Ok(core_to_kbounded(&grassmannian_to_core(w)?))
}

pub fn kbounded_to_grassmannian(n: usize, lambda: &Partition) -> Result<AffinePermutation> {
    AffinePermutation::from_word(&core_to_word(&kbounded_to_core(n, lambda)?))
}

/// Every way of removing an `n`-rim hook, with the hook's height (number of
/// rows it meets, minus one).
pub fn rim_hook_removals(n: usize, shape: &Partition) -> Vec<(Partition, usize)> {
    let len = shape.len();
    let beta: Vec<usize> = (0..len).map(|i| shape.0[i] + len - 1 - i).collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < n || beta.contains(&(b - n)) {
            continue;
        }
        let height = beta.iter().filter(|&&c| c > b - n && c < b).count();
        let mut moved = beta.clone();
        moved[idx] = b - n;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts = moved
            .iter()
            .enumerate()
            .map(|(i, &c)| c + i + 1 - len)
            .collect();
        out.push((Partition::new(parts).expect("beta set gives a partition"), height));
    }
    out.sort();
    out
}

/// A partition inside the `m x (n - m)` rectangle, indexing a Schubert class
/// of `Gr(m, n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoxShape {
    m: usize,
    n: usize,
    shape: Partition,
}

impl BoxShape {
    pub fn new(m: usize, n: usize, shape: Partition) -> Result<Self> {
        if m == 0 || m >= n {
            return Err(Error::CutOutOfRange { m, n });
        }
        if shape.len() > m || shape.part(0) > n - m {
            return Err(Error::ShapeOutOfBox {
                shape: shape.0,
                rows: m,
                cols: n - m,
            });
        }
        Ok(BoxShape { m, n, shape })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn into_shape(self) -> Partition {
        self.shape
    }

    /// Bit `j` is 1 when the value `j + 1` lies in the first block of the
    /// associated permutation. Read from the bottom-left corner, 0 steps right
    /// and 1 steps up along the boundary of the diagram.
    pub fn zero_one_word(&self) -> Vec<u8> {
        let mut bits = vec![0u8; self.n];
        for j in 0..self.m {
            let v = self.shape.part(self.m - 1 - j) + j;
            bits[v] = 1;
        }
        bits
    }

    pub fn from_zero_one_word(bits: &[u8]) -> Result<Self> {
        let n = bits.len();
        let ones: Vec<usize> = (0..n).filter(|&j| bits[j] == 1).collect();
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::Parse(format!("not a 01-word: {bits:?}")));
        }
        let m = ones.len();
        let parts = (0..m).map(|i| ones[m - 1 - i] - (m - 1 - i)).collect();
        BoxShape::new(m, n, Partition::new(parts)?)
    }

    /// The minimal length coset representative in `S_n / (S_m x S_{n-m})`.
    pub fn to_perm(&self) -> AffinePermutation {
        let bits = self.zero_one_word();
        let first = (0..self.n).filter(|&j| bits[j] == 1);
        let second = (0..self.n).filter(|&j| bits[j] == 0);
        let window: Vec<i64> = first.chain(second).map(|j| j as i64 + 1).collect();
        AffinePermutation::from_window(&window).expect("permutation window")
    }

    pub fn from_perm(m: usize, v: &AffinePermutation) -> Result<Self> {
        let n = v.rank();
        if m == 0 || m >= n {
            return Err(Error::CutOutOfRange { m, n });
        }
        if !v.is_coset_min(m) {
            return Err(Error::NotCosetRepresentative(m));
        }
        let mut bits = vec![0u8; n];
        for &x in &v.window()[..m] {
            bits[x as usize - 1] = 1;
        }
        Self::from_zero_one_word(&bits)
    }

    pub fn transpose(&self) -> BoxShape {
        BoxShape::new(self.n - self.m, self.n, self.shape.transpose()).expect("fits")
    }

    /// `(n-m-lambda_m, ..., n-m-lambda_1)`.
    pub fn complement(&self) -> BoxShape {
        let w = self.n - self.m;
        let parts = (0..self.m).rev().map(|i| w - self.shape.part(i)).collect();
        BoxShape::new(self.m, self.n, Partition::new(parts).expect("complement")).expect("fits")
    }

    pub fn diag(&self) -> usize {
        self.shape.durfee()
    }

    /// The strange dual shape together with the Durfee size of `self`.
    /// Reverses the first `m` and the last `n - m` letters of the 01-word.
    pub fn strange_dual(&self) -> (BoxShape, usize) {
        let bits = self.zero_one_word();
        let mut out: Vec<u8> = bits[..self.m].iter().rev().copied().collect();
        out.extend(bits[self.m..].iter().rev());
        (Self::from_zero_one_word(&out).expect("same content"), self.diag())
    }
}

impl fmt::Display for BoxShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.shape)
    }
}
