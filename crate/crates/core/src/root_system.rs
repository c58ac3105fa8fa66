//! Finite crystallographic root systems of rank at most 4, their Weyl
//! groups, and integral (co)weight combinatorics.
//!
//! Roots are stored exactly as integer coordinate vectors in the basis of
//! simple roots. Coweights are stored in the basis of fundamental coweights,
//! so the canonical pairing of a root with a coweight is a dot product of
//! coordinate vectors. The convention for the Cartan matrix is
//! `a[i][j] = <alpha_j, alpha_i^vee>`, so the simple reflection acts by
//! `s_i(alpha_j) = alpha_j - a[i][j] * alpha_i`.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use crate::{Error, Result};

/// Simple Lie type families supported by this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// A Cartan type inside the supported window: A1..A4, B2..B3, C2..C3, D4, G2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => (1..=4).contains(&rank),
            Family::B | Family::C => (2..=3).contains(&rank),
            Family::D => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(Error::Config(format!(
                "unsupported Cartan type {family}{rank}"
            )))
        }
    }

    /// Parses strings like `"A2"`, `"G2"`, `"D4"`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next() {
            Some('A') | Some('a') => Family::A,
            Some('B') | Some('b') => Family::B,
            Some('C') | Some('c') => Family::C,
            Some('D') | Some('d') => Family::D,
            Some('G') | Some('g') => Family::G,
            _ => return Err(Error::Config(format!("unrecognized Cartan type {s:?}"))),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Config(format!("unrecognized Cartan type {s:?}")))?;
        Self::new(family, rank)
    }

    /// Every type in the supported window, in a fixed order.
    pub fn all_supported() -> Vec<CartanType> {
        let mut out = Vec::new();
        for r in 1..=4 {
            out.push(Self::new(Family::A, r).unwrap());
        }
        for r in 2..=3 {
            out.push(Self::new(Family::B, r).unwrap());
        }
        for r in 2..=3 {
            out.push(Self::new(Family::C, r).unwrap());
        }
        out.push(Self::new(Family::D, 4).unwrap());
        out.push(Self::new(Family::G, 2).unwrap());
        out
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The Cartan matrix in the convention `a[i][j] = <alpha_j, alpha_i^vee>`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let chain = |a: &mut Vec<Vec<i64>>| {
            for i in 0..n.saturating_sub(1) {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
        };
        match self.family {
            Family::A => chain(&mut a),
            Family::B => {
                chain(&mut a);
                a[n - 1][n - 2] = -2;
            }
            Family::C => {
                chain(&mut a);
                a[n - 2][n - 1] = -2;
            }
            Family::D => {
                // Rank 4 only: node 1 (0-based) is the trivalent center.
                for j in [0, 2, 3] {
                    a[1][j] = -1;
                    a[j][1] = -1;
                }
            }
            Family::G => {
                a[0][1] = -3;
                a[1][0] = -1;
            }
        }
        a
    }

    /// Order of the Weyl group, from the classical product formulas.
    pub fn weyl_order(&self) -> u64 {
        let n = self.rank as u64;
        let fact = |k: u64| (1..=k).product::<u64>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u64 << n) * fact(n),
            Family::D => (1u64 << (n - 1)) * fact(n),
            Family::G => 12,
        }
    }

    /// Number of positive roots, from the classical count.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::G => 6,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A root, as integer coordinates in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    coords: Vec<i64>,
}

impl Root {
    pub fn new(coords: Vec<i64>) -> Self {
        Self { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// A root of a finite system has all coordinates of one sign; positive
    /// means all nonnegative (and not all zero).
    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0) && self.coords.iter().any(|&c| c != 0)
    }

    pub fn is_negative(&self) -> bool {
        self.coords.iter().all(|&c| c <= 0) && self.coords.iter().any(|&c| c != 0)
    }

    pub fn negated(&self) -> Root {
        Root {
            coords: self.coords.iter().map(|&c| -c).collect(),
        }
    }

    /// Height: the sum of simple-root coordinates.
    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// An integral coweight, as coordinates in the fundamental-coweight basis:
/// `coords[i] = <alpha_i, lambda>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coweight {
    coords: Vec<i64>,
}

impl Coweight {
    pub fn new(coords: Vec<i64>) -> Self {
        Self { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Self {
            coords: vec![0; rank],
        }
    }

    /// The i-th fundamental coweight (0-based).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[i] = 1;
        Self { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn add(&self, other: &Coweight) -> Coweight {
        Coweight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Coweight) -> Coweight {
        Coweight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn negated(&self) -> Coweight {
        Coweight {
            coords: self.coords.iter().map(|&c| -c).collect(),
        }
    }

    /// Parses a comma-separated integer vector of the expected rank.
    pub fn parse(s: &str, rank: usize) -> Result<Self> {
        let coords: Vec<i64> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Usage(format!("invalid coweight coordinate {t:?}")))
            })
            .collect::<Result<_>>()?;
        if coords.len() != rank {
            return Err(Error::Usage(format!(
                "coweight has {} coordinates, expected {rank}",
                coords.len()
            )));
        }
        Ok(Self { coords })
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A Weyl group element, represented by the images of the simple roots.
/// This representation is canonical: two elements are equal exactly when
/// the underlying isometries agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    images: Vec<Root>,
    length: u32,
}

impl WeylElement {
    /// Coxeter length, equal to the number of positive roots sent negative.
    pub fn length(&self) -> usize {
        self.length as usize
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    pub fn simple_root_images(&self) -> &[Root] {
        &self.images
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WeylElement {
    /// Orders by length first, then lexicographically by images; this is the
    /// enumeration and serialization order used everywhere.
    fn cmp(&self, other: &Self) -> Ordering {
        self.length
            .cmp(&other.length)
            .then_with(|| self.images.cmp(&other.images))
    }
}

/// Precomputed multiplication tables for one Weyl group, built lazily and
/// reused by the Hecke-algebra layer.
pub struct WeylTable {
    elements: Vec<WeylElement>,
    index: HashMap<Vec<Root>, usize>,
    /// `left_mul[i][k]` is the index of `s_i * elements[k]`.
    left_mul: Vec<Vec<usize>>,
    longest: usize,
}

impl WeylTable {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, idx: usize) -> &WeylElement {
        &self.elements[idx]
    }

    pub fn index_of(&self, w: &WeylElement) -> usize {
        self.index[&w.images]
    }

    pub fn left_mul(&self, i: usize, idx: usize) -> usize {
        self.left_mul[i][idx]
    }

    pub fn longest_index(&self) -> usize {
        self.longest
    }
}

/// A root system together with its Weyl group machinery.
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    roots: Vec<Root>,
    positive: Vec<Root>,
    root_set: HashSet<Vec<i64>>,
    two_rho: Root,
    weyl: OnceLock<WeylTable>,
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> Result<Self> {
        let cartan = cartan_type.cartan_matrix();
        let rank = cartan_type.rank();

        // Close the simple roots under all simple reflections.
        let mut root_set: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..rank {
            let mut coords = vec![0i64; rank];
            coords[i] = 1;
            root_set.insert(coords.clone());
            queue.push_back(coords);
        }
        while let Some(coords) = queue.pop_front() {
            for i in 0..rank {
                let mut next = coords.clone();
                let pairing: i64 = (0..rank).map(|j| cartan[i][j] * coords[j]).sum();
                next[i] -= pairing;
                if root_set.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }

        let mut roots: Vec<Root> = root_set.iter().cloned().map(Root::new).collect();
        roots.sort();
        let mut positive: Vec<Root> = roots.iter().filter(|r| r.is_positive()).cloned().collect();
        positive.sort();

        if positive.len() != cartan_type.positive_root_count()
            || roots.len() != 2 * positive.len()
        {
            return Err(Error::Config(format!(
                "root closure for {cartan_type} produced {} roots, expected {}",
                roots.len(),
                2 * cartan_type.positive_root_count()
            )));
        }

        let mut two_rho = vec![0i64; rank];
        for r in &positive {
            for (t, c) in two_rho.iter_mut().zip(r.coords()) {
                *t += c;
            }
        }

        Ok(Self {
            cartan_type,
            cartan,
            roots,
            positive,
            root_set,
            two_rho: Root::new(two_rho),
            weyl: OnceLock::new(),
        })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// All roots, sorted.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    /// All positive roots, sorted.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn simple_root(&self, i: usize) -> Result<Root> {
        if i >= self.rank() {
            return Err(Error::Domain(format!(
                "simple root index {i} out of range for {}",
                self.cartan_type
            )));
        }
        let mut coords = vec![0i64; self.rank()];
        coords[i] = 1;
        Ok(Root::new(coords))
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.root_set.contains(r.coords())
    }

    /// The sum of all positive roots (an element of the root lattice).
    pub fn two_rho(&self) -> &Root {
        &self.two_rho
    }

    /// `<r, cw>`: the canonical pairing of a root-lattice element with a
    /// coweight. A dot product in the chosen bases.
    pub fn pairing(&self, r: &Root, cw: &Coweight) -> i64 {
        assert_eq!(r.coords().len(), cw.rank(), "rank mismatch in pairing");
        r.coords()
            .iter()
            .zip(cw.coords())
            .map(|(a, b)| a * b)
            .sum()
    }

    fn reflect_simple_coords(&self, i: usize, coords: &[i64]) -> Vec<i64> {
        let pairing: i64 = (0..self.rank()).map(|j| self.cartan[i][j] * coords[j]).sum();
        let mut out = coords.to_vec();
        out[i] -= pairing;
        out
    }

    fn element_from_images(&self, images: Vec<Root>) -> WeylElement {
        let length = self
            .positive
            .iter()
            .filter(|r| self.apply_images(&images, r).is_negative())
            .count() as u32;
        WeylElement { images, length }
    }

    fn apply_images(&self, images: &[Root], r: &Root) -> Root {
        let mut out = vec![0i64; self.rank()];
        for (c, img) in r.coords().iter().zip(images) {
            if *c != 0 {
                for (o, ic) in out.iter_mut().zip(img.coords()) {
                    *o += c * ic;
                }
            }
        }
        Root::new(out)
    }

    pub fn identity(&self) -> WeylElement {
        let images = (0..self.rank()).map(|i| self.simple_root(i).unwrap()).collect();
        WeylElement { images, length: 0 }
    }

    pub fn simple_reflection(&self, i: usize) -> Result<WeylElement> {
        if i >= self.rank() {
            return Err(Error::Domain(format!(
                "simple reflection index {i} out of range for {}",
                self.cartan_type
            )));
        }
        let images: Vec<Root> = (0..self.rank())
            .map(|j| {
                let alpha_j = self.simple_root(j).unwrap();
                Root::new(self.reflect_simple_coords(i, alpha_j.coords()))
            })
            .collect();
        Ok(WeylElement { images, length: 1 })
    }

    /// Applies `w` to any root.
    pub fn act_on_root(&self, w: &WeylElement, r: &Root) -> Result<Root> {
        if !self.is_root(r) {
            return Err(Error::Domain(format!("{r} is not a root of {}", self.cartan_type)));
        }
        let out = self.apply_images(&w.images, r);
        debug_assert!(self.is_root(&out));
        Ok(out)
    }

    /// Group law: `compose(a, b)` is the element acting as `a` after `b`.
    pub fn compose(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        let images: Vec<Root> = b.images.iter().map(|r| self.apply_images(&a.images, r)).collect();
        self.element_from_images(images)
    }

    /// A canonical reduced word (0-based generator indices), obtained by
    /// repeatedly peeling the smallest right descent.
    pub fn reduced_word(&self, w: &WeylElement) -> Vec<usize> {
        let mut current = w.clone();
        let mut peeled = Vec::with_capacity(current.length());
        while current.length > 0 {
            let i = (0..self.rank())
                .find(|&i| current.images[i].is_negative())
                .expect("a nonidentity element has a right descent");
            peeled.push(i);
            let s = self.simple_reflection(i).unwrap();
            current = self.compose(&current, &s);
        }
        peeled.reverse();
        peeled
    }

    /// Builds the product of simple reflections named by a 0-based word.
    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let mut acc = self.identity();
        for &i in word {
            let s = self.simple_reflection(i)?;
            acc = self.compose(&acc, &s);
        }
        Ok(acc)
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let mut word = self.reduced_word(w);
        word.reverse();
        self.from_word(&word).unwrap()
    }

    /// `{beta > 0 : w^{-1}(beta) < 0}`, computed without forming the inverse:
    /// these are exactly `-w(gamma)` over positive `gamma` sent negative.
    pub fn inversion_set(&self, w: &WeylElement) -> Vec<Root> {
        let mut out: Vec<Root> = self
            .positive
            .iter()
            .filter_map(|gamma| {
                let img = self.apply_images(&w.images, gamma);
                if img.is_negative() {
                    Some(img.negated())
                } else {
                    None
                }
            })
            .collect();
        out.sort();
        out
    }

    /// The longest element, by greedy length ascent.
    pub fn longest_element(&self) -> WeylElement {
        let mut w = self.identity();
        loop {
            match (0..self.rank()).find(|&i| w.images[i].is_positive()) {
                Some(i) => {
                    let s = self.simple_reflection(i).unwrap();
                    w = self.compose(&w, &s);
                }
                None => return w,
            }
        }
    }

    /// The full Weyl group with multiplication tables, built on first use.
    pub fn weyl_table(&self) -> &WeylTable {
        self.weyl.get_or_init(|| {
            let mut seen: HashMap<Vec<Root>, WeylElement> = HashMap::new();
            let mut queue = VecDeque::new();
            let id = self.identity();
            seen.insert(id.images.clone(), id.clone());
            queue.push_back(id);
            let gens: Vec<WeylElement> =
                (0..self.rank()).map(|i| self.simple_reflection(i).unwrap()).collect();
            while let Some(w) = queue.pop_front() {
                for s in &gens {
                    let next = self.compose(&w, s);
                    if !seen.contains_key(&next.images) {
                        seen.insert(next.images.clone(), next.clone());
                        queue.push_back(next);
                    }
                }
            }
            let mut elements: Vec<WeylElement> = seen.into_values().collect();
            elements.sort();
            let index: HashMap<Vec<Root>, usize> = elements
                .iter()
                .enumerate()
                .map(|(k, w)| (w.images.clone(), k))
                .collect();
            let left_mul: Vec<Vec<usize>> = gens
                .iter()
                .map(|s| {
                    elements
                        .iter()
                        .map(|w| index[&self.compose(s, w).images])
                        .collect()
                })
                .collect();
            let longest = index[&self.longest_element().images];
            WeylTable {
                elements,
                index,
                left_mul,
                longest,
            }
        })
    }

    /// All Weyl group elements in canonical order (length, then images).
    pub fn weyl_elements(&self) -> &[WeylElement] {
        self.weyl_table().elements()
    }

    /// The natural action on coweights: coordinate `i` of `w(lambda)` is
    /// `<w^{-1}(alpha_i), lambda>`.
    pub fn act_on_coweight(&self, w: &WeylElement, cw: &Coweight) -> Coweight {
        assert_eq!(cw.rank(), self.rank(), "rank mismatch in coweight action");
        let winv = self.inverse(w);
        let coords = (0..self.rank())
            .map(|i| {
                let alpha_i = self.simple_root(i).unwrap();
                let pre = self.apply_images(&winv.images, &alpha_i);
                self.pairing(&pre, cw)
            })
            .collect();
        Coweight::new(coords)
    }

    /// Parses a Weyl word in the user-facing grammar: comma-separated
    /// 1-based generator indices, with the empty string for the identity.
    pub fn parse_weyl_word(&self, s: &str) -> Result<WeylElement> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(self.identity());
        }
        let mut word = Vec::new();
        for tok in s.split(',') {
            let k: usize = tok
                .trim()
                .parse()
                .map_err(|_| Error::Usage(format!("invalid Weyl word letter {tok:?}")))?;
            if k == 0 || k > self.rank() {
                return Err(Error::Usage(format!(
                    "Weyl word letter {k} out of range 1..={}",
                    self.rank()
                )));
            }
            word.push(k - 1);
        }
        self.from_word(&word)
    }

    /// Formats an element as its canonical reduced word in the same grammar.
    pub fn weyl_word_string(&self, w: &WeylElement) -> String {
        self.reduced_word(w)
            .iter()
            .map(|i| (i + 1).to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// 1-based canonical reduced word, the form used in serialized output.
    pub fn weyl_word(&self, w: &WeylElement) -> Vec<usize> {
        self.reduced_word(w).iter().map(|i| i + 1).collect()
    }
}
