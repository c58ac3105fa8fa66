//! Brute-force finite-field oracle: inside `GL_n(F_p)` with the
//! upper-triangular Borel, every Bruhat cell `BwB` decomposes into exactly
//! `p^{l(w)}` cosets of `B`. This is checked by enumerating the whole flag
//! variety through canonical column-reduced representatives and classifying
//! each one with a rank-profile algorithm, providing a desk-scale ground
//! truth for the `q^{l(w)}` coset counts used symbolically elsewhere.

use std::collections::BTreeMap;

use crate::{Error, Result};

fn check_window(n: usize, p: u32) -> Result<()> {
    if !(n == 2 || n == 3) {
        return Err(Error::Config(format!("matrix oracle supports n in {{2, 3}}, got {n}")));
    }
    if !(p == 2 || p == 3 || p == 5) {
        return Err(Error::Config(format!(
            "matrix oracle supports p in {{2, 3, 5}}, got {p}"
        )));
    }
    Ok(())
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // Fermat inverse; p is a small prime and a is nonzero mod p.
    let mut result = 1u64;
    let mut base = (a % p) as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

fn rank_mod_p(mut rows: Vec<Vec<u32>>, p: u32) -> usize {
    let mut rank = 0;
    let cols = rows.first().map_or(0, |r| r.len());
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(found) = (pivot_row..rows.len()).find(|&r| rows[r][col] % p != 0) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let inv = inv_mod(rows[pivot_row][col], p);
        for r in 0..rows.len() {
            if r != pivot_row && rows[r][col] % p != 0 {
                let factor = rows[r][col] as u64 * inv as u64 % p as u64;
                for c in col..cols {
                    let sub = factor * rows[pivot_row][c] as u64 % p as u64;
                    rows[r][c] = ((rows[r][c] as u64 + p as u64 - sub) % p as u64) as u32;
                }
            }
        }
        rank += 1;
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rank
}

/// An invertible square matrix over `F_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMatrix {
    n: usize,
    p: u32,
    entries: Vec<u32>,
}

impl FiniteMatrix {
    /// Builds a matrix from row-major entries, reduced mod `p`. Rejects
    /// out-of-window sizes and singular matrices.
    pub fn new(n: usize, p: u32, entries: Vec<u32>) -> Result<Self> {
        check_window(n, p)?;
        if entries.len() != n * n {
            return Err(Error::Config(format!(
                "expected {} entries for a {n}x{n} matrix, got {}",
                n * n,
                entries.len()
            )));
        }
        let entries: Vec<u32> = entries.into_iter().map(|e| e % p).collect();
        let m = Self { n, p, entries };
        if m.rank() != n {
            return Err(Error::Domain("matrix is singular mod p".into()));
        }
        Ok(m)
    }

    pub fn identity(n: usize, p: u32) -> Result<Self> {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Self::new(n, p, entries)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    fn rows(&self) -> Vec<Vec<u32>> {
        (0..self.n)
            .map(|i| self.entries[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    pub fn rank(&self) -> usize {
        rank_mod_p(self.rows(), self.p)
    }

    pub fn mul(&self, other: &FiniteMatrix) -> Result<FiniteMatrix> {
        if self.n != other.n || self.p != other.p {
            return Err(Error::Domain("matrix dimension or modulus mismatch".into()));
        }
        let n = self.n;
        let p = self.p as u64;
        let mut entries = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u64;
                for k in 0..n {
                    acc = (acc + self.get(i, k) as u64 * other.get(k, j) as u64) % p;
                }
                entries[i * n + j] = acc as u32;
            }
        }
        FiniteMatrix::new(n, self.p, entries)
    }

    /// Gauss-Jordan inverse mod `p`.
    pub fn inverse(&self) -> FiniteMatrix {
        let n = self.n;
        let p = self.p as u64;
        let mut aug: Vec<Vec<u64>> = (0..n)
            .map(|i| {
                let mut row: Vec<u64> = (0..n).map(|j| self.get(i, j) as u64).collect();
                row.extend((0..n).map(|j| u64::from(i == j)));
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| aug[r][col] % p != 0)
                .expect("invertible by construction");
            aug.swap(col, pivot);
            let inv = inv_mod(aug[col][col] as u32, self.p) as u64;
            for c in 0..2 * n {
                aug[col][c] = aug[col][c] * inv % p;
            }
            for r in 0..n {
                if r != col && aug[r][col] != 0 {
                    let factor = aug[r][col];
                    for c in 0..2 * n {
                        let sub = factor * aug[col][c] % p;
                        aug[r][c] = (aug[r][c] + p - sub) % p;
                    }
                }
            }
        }
        let entries: Vec<u32> = (0..n)
            .flat_map(|i| (n..2 * n).map(move |j| (i, j)))
            .map(|(i, j)| aug[i][j] as u32)
            .collect();
        FiniteMatrix {
            n,
            p: self.p,
            entries,
        }
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == 0))
    }

    /// Rank of the lower-left block: rows `i..n`, columns `0..=j`.
    fn lower_left_rank(&self, i: usize, j: usize) -> usize {
        let rows: Vec<Vec<u32>> = (i..self.n)
            .map(|r| (0..=j).map(|c| self.get(r, c)).collect())
            .collect();
        rank_mod_p(rows, self.p)
    }
}

/// A permutation of `{0, ..., n-1}`, as the image sequence `map[j] = sigma(j)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            map: (0..n).collect(),
        }
    }

    pub fn from_map(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &v in &map {
            if v >= n || seen[v] {
                return Err(Error::Domain(format!("{map:?} is not a permutation")));
            }
            seen[v] = true;
        }
        Ok(Self { map })
    }

    pub fn size(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, j: usize) -> usize {
        self.map[j]
    }

    /// The adjacent transposition swapping `i` and `i + 1` (0-based).
    pub fn adjacent_transposition(n: usize, i: usize) -> Result<Self> {
        if i + 1 >= n {
            return Err(Error::Domain(format!(
                "transposition index {i} out of range for S_{n}"
            )));
        }
        let mut map: Vec<usize> = (0..n).collect();
        map.swap(i, i + 1);
        Ok(Self { map })
    }

    /// Function composition: `(self . other)(j) = self(other(j))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            map: other.map.iter().map(|&j| self.map[j]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut map = vec![0; self.map.len()];
        for (j, &v) in self.map.iter().enumerate() {
            map[v] = j;
        }
        Permutation { map }
    }

    /// Coxeter length: the inversion count of the image sequence.
    pub fn length(&self) -> usize {
        let n = self.map.len();
        (0..n)
            .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.map[a] > self.map[b])
            .count()
    }

    /// Builds the product `s_{w1} ... s_{wk}` from a 0-based word.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Permutation> {
        let mut acc = Permutation::identity(n);
        for &i in word {
            acc = acc.compose(&Permutation::adjacent_transposition(n, i)?);
        }
        Ok(acc)
    }

    /// Canonical reduced word (0-based), by peeling the smallest right
    /// descent; matches the canonical word of the corresponding Weyl element.
    pub fn reduced_word(&self) -> Vec<usize> {
        let n = self.map.len();
        let mut current = self.clone();
        let mut peeled = Vec::new();
        loop {
            let Some(i) = (0..n.saturating_sub(1)).find(|&i| current.map[i] > current.map[i + 1])
            else {
                break;
            };
            peeled.push(i);
            current.map.swap(i, i + 1);
        }
        peeled.reverse();
        peeled
    }

    /// Display key used in census reports: `"e"` for the identity, else the
    /// 1-based comma-separated canonical reduced word.
    pub fn word_string(&self) -> String {
        let word = self.reduced_word();
        if word.is_empty() {
            "e".to_string()
        } else {
            word.iter()
                .map(|i| (i + 1).to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    /// All of `S_n` in lexicographic image order.
    pub fn all(n: usize) -> Vec<Permutation> {
        fn extend(prefix: Vec<usize>, remaining: Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if remaining.is_empty() {
                out.push(prefix);
                return;
            }
            for (k, &v) in remaining.iter().enumerate() {
                let mut prefix = prefix.clone();
                prefix.push(v);
                let mut rest = remaining.clone();
                rest.remove(k);
                extend(prefix, rest, out);
            }
        }
        let mut maps = Vec::new();
        extend(Vec::new(), (0..n).collect(), &mut maps);
        maps.sort();
        maps.into_iter().map(|map| Permutation { map }).collect()
    }

    /// The permutation matrix with a 1 at `(sigma(j), j)` for each column.
    pub fn matrix(&self, p: u32) -> Result<FiniteMatrix> {
        let n = self.map.len();
        let mut entries = vec![0; n * n];
        for (j, &i) in self.map.iter().enumerate() {
            entries[i * n + j] = 1;
        }
        FiniteMatrix::new(n, p, entries)
    }
}

/// Bruhat position of an invertible matrix with respect to the
/// upper-triangular Borel on both sides, via rank jumps of lower-left
/// blocks: `sigma(j)` is the unique row where the block rank profile jumps
/// in column `j`. Constant on `B`-double-cosets.
pub fn bruhat_cell_of(m: &FiniteMatrix) -> Result<Permutation> {
    let n = m.n();
    // r[i][j] = rank of rows i.., cols ..=j, with sentinel row n.
    let mut r = vec![vec![0usize; n]; n + 1];
    for i in 0..n {
        for j in 0..n {
            r[i][j] = m.lower_left_rank(i, j);
        }
    }
    let mut map = vec![usize::MAX; n];
    for j in 0..n {
        for i in 0..n {
            let prev_col = if j == 0 { 0 } else { r[i][j - 1] };
            let prev_col_below = if j == 0 { 0 } else { r[i + 1][j - 1] };
            if r[i][j] + prev_col_below == r[i + 1][j] + prev_col + 1 {
                if map[j] != usize::MAX {
                    return Err(Error::Domain("ambiguous rank profile".into()));
                }
                map[j] = i;
            }
        }
        if map[j] == usize::MAX {
            return Err(Error::Domain("no pivot found; matrix not invertible".into()));
        }
    }
    Permutation::from_map(map)
}

/// Census of the full flag variety of `GL_n(F_p)` by Bruhat cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellCensus {
    pub n: usize,
    pub p: u32,
    pub counts: BTreeMap<Permutation, u64>,
}

impl CellCensus {
    /// The predicted counts `p^{l(w)}`.
    pub fn expected_counts(&self) -> BTreeMap<Permutation, u64> {
        Permutation::all(self.n)
            .into_iter()
            .map(|s| {
                let count = (self.p as u64).pow(s.length() as u32);
                (s, count)
            })
            .collect()
    }

    pub fn matches_expected(&self) -> bool {
        self.counts == self.expected_counts()
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Counts keyed by canonical word strings, for reports.
    pub fn counts_by_word(&self) -> BTreeMap<String, u64> {
        self.counts
            .iter()
            .map(|(s, &c)| (s.word_string(), c))
            .collect()
    }
}

/// `prod_{k=1}^{n-1} (1 + p + ... + p^k)`: the number of complete flags,
/// computed independently of any cell decomposition.
pub fn flag_count(n: usize, p: u32) -> u64 {
    (1..n)
        .map(|k| (0..=k).map(|e| (p as u64).pow(e as u32)).sum::<u64>())
        .product()
}

/// Positions `(row, col)` that are free in the canonical column-reduced
/// representative of a coset in the cell of `sigma`: above the pivot of the
/// column and not on an earlier pivot row. There are exactly
/// `l(sigma)` of them.
fn free_positions(sigma: &Permutation) -> Vec<(usize, usize)> {
    let n = sigma.size();
    let mut out = Vec::new();
    for j in 0..n {
        let pivot_row = sigma.apply(j);
        let earlier: Vec<usize> = (0..j).map(|k| sigma.apply(k)).collect();
        for i in 0..pivot_row {
            if !earlier.contains(&i) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Enumerates every point of the flag variety exactly once (as canonical
/// column-reduced matrices) and classifies each by `bruhat_cell_of`. The
/// resulting counts are the coset census per cell.
pub fn enumerate_cell_census(n: usize, p: u32) -> Result<CellCensus> {
    check_window(n, p)?;
    let mut counts: BTreeMap<Permutation, u64> = BTreeMap::new();
    for sigma in Permutation::all(n) {
        let free = free_positions(&sigma);
        debug_assert_eq!(free.len(), sigma.length());
        let total = (p as u64).pow(free.len() as u32);
        for assignment in 0..total {
            let mut entries = vec![0u32; n * n];
            for (j, &i) in sigma.map.iter().enumerate() {
                entries[i * n + j] = 1;
            }
            let mut rem = assignment;
            for &(i, j) in &free {
                entries[i * n + j] = (rem % p as u64) as u32;
                rem /= p as u64;
            }
            let m = FiniteMatrix::new(n, p, entries)?;
            let cell = bruhat_cell_of(&m)?;
            *counts.entry(cell).or_insert(0) += 1;
        }
    }
    Ok(CellCensus { n, p, counts })
}

/// Builds the `p^{l(sigma)}` representatives
/// `prod_{(i,j)} (I + t_{ij} E_{ij}) * P_sigma` over the inversion pairs
/// `(i, j)` of `sigma`, and checks that each lies in the cell of `sigma`
/// and that they are pairwise in distinct right `B`-cosets.
pub fn verify_coset_representatives(sigma: &Permutation, p: u32) -> Result<bool> {
    let n = sigma.size();
    check_window(n, p)?;
    let inv = sigma.inverse();
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .filter(|&(i, j)| inv.apply(i) > inv.apply(j))
        .collect();
    pairs.sort();
    if pairs.len() != sigma.length() {
        return Ok(false);
    }
    let base = sigma.matrix(p)?;
    let count = (p as u64).pow(pairs.len() as u32);
    let mut reps = Vec::with_capacity(count as usize);
    for assignment in 0..count {
        let mut m = FiniteMatrix::identity(n, p)?;
        let mut rem = assignment;
        for &(i, j) in &pairs {
            let t = (rem % p as u64) as u32;
            rem /= p as u64;
            let mut entries = vec![0u32; n * n];
            for d in 0..n {
                entries[d * n + d] = 1;
            }
            entries[i * n + j] = t;
            m = m.mul(&FiniteMatrix::new(n, p, entries)?)?;
        }
        let rep = m.mul(&base)?;
        if bruhat_cell_of(&rep)? != *sigma {
            return Ok(false);
        }
        reps.push(rep);
    }
    for a in 0..reps.len() {
        for b in (a + 1)..reps.len() {
            let quotient = reps[a].inverse().mul(&reps[b])?;
            if quotient.is_upper_triangular() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke;
    use crate::root_system::{CartanType, Family, RootSystem};

    #[test]
    fn window_is_enforced() {
        assert!(FiniteMatrix::new(4, 2, vec![0; 16]).is_err());
        assert!(FiniteMatrix::new(2, 7, vec![1, 0, 0, 1]).is_err());
        assert!(enumerate_cell_census(4, 2).is_err());
        assert!(enumerate_cell_census(3, 7).is_err());
    }

    #[test]
    fn singular_matrices_rejected() {
        assert!(FiniteMatrix::new(2, 3, vec![1, 2, 2, 4]).is_err());
        assert!(FiniteMatrix::new(2, 2, vec![1, 1, 1, 1]).is_err());
    }

    #[test]
    fn matrix_inverse_round_trips() {
        let m = FiniteMatrix::new(3, 5, vec![1, 2, 3, 0, 1, 4, 2, 0, 1]).unwrap();
        let id = m.mul(&m.inverse()).unwrap();
        assert_eq!(id, FiniteMatrix::identity(3, 5).unwrap());
    }

    #[test]
    fn permutation_basics() {
        let s = Permutation::adjacent_transposition(3, 0).unwrap();
        assert_eq!(s.length(), 1);
        assert_eq!(s.word_string(), "1");
        assert_eq!(Permutation::identity(3).word_string(), "e");
        let w0 = Permutation::from_map(vec![2, 1, 0]).unwrap();
        assert_eq!(w0.length(), 3);
        assert_eq!(w0.word_string(), "1,2,1");
        assert_eq!(Permutation::from_word(3, &w0.reduced_word()).unwrap(), w0);
        assert_eq!(Permutation::all(3).len(), 6);
        assert!(Permutation::from_map(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn permutation_words_match_weyl_words() {
        let rs = RootSystem::new(CartanType::new(Family::A, 2).unwrap()).unwrap();
        for sigma in Permutation::all(3) {
            let w = rs.from_word(&sigma.reduced_word()).unwrap();
            assert_eq!(w.length(), sigma.length());
            assert_eq!(rs.reduced_word(&w), sigma.reduced_word());
        }
    }

    #[test]
    fn bruhat_cell_examples() {
        let id3 = FiniteMatrix::identity(3, 2).unwrap();
        assert_eq!(bruhat_cell_of(&id3).unwrap(), Permutation::identity(3));
        for p in [2, 3, 5] {
            for sigma in Permutation::all(3) {
                let m = sigma.matrix(p).unwrap();
                assert_eq!(bruhat_cell_of(&m).unwrap(), sigma);
            }
        }
        let antidiag = FiniteMatrix::new(3, 3, vec![0, 0, 1, 0, 1, 0, 1, 0, 0]).unwrap();
        assert_eq!(
            bruhat_cell_of(&antidiag).unwrap(),
            Permutation::from_map(vec![2, 1, 0]).unwrap()
        );
    }

    #[test]
    fn cell_is_invariant_under_borel_multiplication() {
        // Deterministic pseudo-random upper-triangular multiplications.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for p in [2, 3, 5] {
            for sigma in Permutation::all(3) {
                let m = sigma.matrix(p).unwrap();
                for _ in 0..20 {
                    let mut upper = |_k: usize| -> FiniteMatrix {
                        loop {
                            let mut entries = vec![0u32; 9];
                            for i in 0..3 {
                                for j in i..3 {
                                    let r = (next() % p as u64) as u32;
                                    entries[i * 3 + j] = if i == j && r == 0 { 1 } else { r };
                                }
                            }
                            if let Ok(b) = FiniteMatrix::new(3, p, entries) {
                                return b;
                            }
                        }
                    };
                    let b1 = upper(0);
                    let b2 = upper(1);
                    let moved = b1.mul(&m).unwrap().mul(&b2).unwrap();
                    assert_eq!(bruhat_cell_of(&moved).unwrap(), sigma);
                }
            }
        }
    }

    #[test]
    fn census_smallest_case() {
        let census = enumerate_cell_census(2, 2).unwrap();
        assert_eq!(census.total(), 3);
        assert!(census.matches_expected());
        let by_word = census.counts_by_word();
        assert_eq!(by_word["e"], 1);
        assert_eq!(by_word["1"], 2);
    }

    #[test]
    fn census_n3_p2_matches_hecke_poincare() {
        let census = enumerate_cell_census(3, 2).unwrap();
        assert!(census.matches_expected());
        assert_eq!(census.total(), 21);
        let mut per_length: Vec<u64> = census.counts.values().copied().collect();
        per_length.sort();
        assert_eq!(per_length, vec![1, 2, 2, 4, 4, 8]);
        let rs = RootSystem::new(CartanType::new(Family::A, 2).unwrap()).unwrap();
        assert_eq!(
            hecke::poincare_polynomial(&rs).eval(2).unwrap() as u64,
            census.total()
        );
        assert_eq!(census.total(), flag_count(3, 2));
    }

    #[test]
    fn census_whole_window() {
        for n in [2, 3] {
            for p in [2, 3, 5] {
                let census = enumerate_cell_census(n, p).unwrap();
                assert!(census.matches_expected(), "n={n} p={p}");
                assert_eq!(census.total(), flag_count(n, p), "n={n} p={p}");
            }
        }
        let c33 = enumerate_cell_census(3, 3).unwrap();
        let w0 = Permutation::from_map(vec![2, 1, 0]).unwrap();
        assert_eq!(c33.counts[&w0], 27);
    }

    #[test]
    fn census_counts_match_hecke_coset_counts_per_cell() {
        let rs = RootSystem::new(CartanType::new(Family::A, 2).unwrap()).unwrap();
        for p in [2, 3] {
            let census = enumerate_cell_census(3, p).unwrap();
            for (sigma, &count) in &census.counts {
                let w = rs.from_word(&sigma.reduced_word()).unwrap();
                let predicted = hecke::coset_count(&w).eval(p as i64).unwrap() as u64;
                assert_eq!(count, predicted, "p={p} sigma={sigma:?}");
            }
        }
    }

    #[test]
    fn coset_representatives_examples() {
        assert!(verify_coset_representatives(&Permutation::identity(2), 3).unwrap());
        let s1 = Permutation::adjacent_transposition(3, 0).unwrap();
        assert!(verify_coset_representatives(&s1, 2).unwrap());
        let w0 = Permutation::from_map(vec![2, 1, 0]).unwrap();
        assert!(verify_coset_representatives(&w0, 3).unwrap());
    }

    #[test]
    fn coset_representatives_whole_window() {
        for n in [2, 3] {
            for p in [2, 3, 5] {
                for sigma in Permutation::all(n) {
                    assert!(
                        verify_coset_representatives(&sigma, p).unwrap(),
                        "n={n} p={p} sigma={sigma:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn free_positions_count_is_length() {
        for n in [2, 3] {
            for sigma in Permutation::all(n) {
                assert_eq!(free_positions(&sigma).len(), sigma.length());
            }
        }
    }
}
