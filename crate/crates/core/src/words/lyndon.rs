use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::magnus::TruncatedSeries;
use crate::error::{Error, Result};
use crate::exactlin::IntMatrix;

/// A bracket expression in the free Lie algebra on `x_1..x_n` (0-based
/// generator indices internally).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LieTree {
    Generator(usize),
    Bracket(Box<LieTree>, Box<LieTree>),
}

impl LieTree {
    pub fn bracket(a: LieTree, b: LieTree) -> LieTree {
        LieTree::Bracket(Box::new(a), Box::new(b))
    }

    pub fn degree(&self) -> usize {
        match self {
            LieTree::Generator(_) => 1,
            LieTree::Bracket(a, b) => a.degree() + b.degree(),
        }
    }

    /// Expansion `[a, b] = ab - ba` into the tensor algebra, keyed by word.
    pub fn expand(&self) -> BTreeMap<Vec<usize>, i64> {
        match self {
            LieTree::Generator(i) => BTreeMap::from([(vec![*i], 1)]),
            LieTree::Bracket(a, b) => {
                let (ea, eb) = (a.expand(), b.expand());
                let mut out: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
                for (wa, ca) in &ea {
                    for (wb, cb) in &eb {
                        let mut ab = wa.clone();
                        ab.extend(wb);
                        *out.entry(ab).or_default() += ca * cb;
                        let mut ba = wb.clone();
                        ba.extend(wa);
                        *out.entry(ba).or_default() -= ca * cb;
                    }
                }
                out.retain(|_, c| *c != 0);
                out
            }
        }
    }

    /// Dense tensor coordinates over `n` letters (see [`TruncatedSeries`]).
    pub fn tensor(&self, n: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); n.pow(self.degree() as u32)];
        for (w, c) in self.expand() {
            v[word_index(&w, n)] += c;
        }
        v
    }
}

impl fmt::Display for LieTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieTree::Generator(i) => write!(f, "x{}", i + 1),
            LieTree::Bracket(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

pub fn word_index(w: &[usize], n: usize) -> usize {
    w.iter().fold(0, |acc, &a| acc * n + a)
}

fn index_word(mut idx: usize, n: usize, len: usize) -> Vec<usize> {
    let mut w = vec![0; len];
    for k in (0..len).rev() {
        w[k] = idx % n;
        idx /= n;
    }
    w
}

/// Strictly smaller than each of its proper rotations.
pub fn is_lyndon(w: &[usize]) -> bool {
    !w.is_empty() && (1..w.len()).all(|k| {
        let mut rot = w[k..].to_vec();
        rot.extend_from_slice(&w[..k]);
        w < rot.as_slice()
    })
}

/// Standard bracketing: split off the longest proper Lyndon suffix.
pub fn standard_bracketing(w: &[usize]) -> LieTree {
    if w.len() == 1 {
        return LieTree::Generator(w[0]);
    }
    let split = (1..w.len()).find(|&k| is_lyndon(&w[k..])).expect("a single letter is Lyndon");
    LieTree::bracket(standard_bracketing(&w[..split]), standard_bracketing(&w[split..]))
}

/// Witt's dimension formula for the degree-`k` part of the free Lie
/// algebra on `n` generators.
pub fn witt_dimension(n: usize, k: usize) -> usize {
    fn mobius(mut m: usize) -> i64 {
        let mut sign = 1;
        let mut p = 2;
        while p * p <= m {
            if m % p == 0 {
                m /= p;
                if m % p == 0 {
                    return 0;
                }
                sign = -sign;
            }
            p += 1;
        }
        if m > 1 {
            sign = -sign;
        }
        sign
    }
    let total: i64 = (1..=k)
        .filter(|d| k % d == 0)
        .map(|d| mobius(d) * (n as i64).pow((k / d) as u32))
        .sum();
    (total / k as i64) as usize
}

/// The Lyndon basis of the degree-`d` part of the free Lie algebra, each
/// word carrying its standard bracketing.
#[derive(Clone, Debug)]
pub struct LieBasis {
    n: usize,
    degree: usize,
    words: Vec<Vec<usize>>,
    brackets: Vec<LieTree>,
    expansions: Vec<Vec<(usize, BigInt)>>,
    position: HashMap<usize, usize>,
}

impl LieBasis {
    pub fn new(n: usize, degree: usize) -> Self {
        let words: Vec<Vec<usize>> = (0..n.pow(degree as u32))
            .map(|i| index_word(i, n, degree))
            .filter(|w| is_lyndon(w))
            .collect();
        let brackets: Vec<LieTree> = words.iter().map(|w| standard_bracketing(w)).collect();
        let expansions = brackets
            .iter()
            .map(|b| {
                b.expand()
                    .into_iter()
                    .map(|(w, c)| (word_index(&w, n), BigInt::from(c)))
                    .collect()
            })
            .collect();
        let position = words.iter().enumerate().map(|(k, w)| (word_index(w, n), k)).collect();
        LieBasis {
            n,
            degree,
            words,
            brackets,
            expansions,
            position,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dimension(&self) -> usize {
        self.words.len()
    }

    /// Lyndon words with 0-based letters.
    pub fn words(&self) -> &[Vec<usize>] {
        &self.words
    }

    pub fn brackets(&self) -> &[LieTree] {
        &self.brackets
    }

    pub fn index_of(&self, word: &[usize]) -> Option<usize> {
        self.position.get(&word_index(word, self.n)).copied()
    }

    /// Lyndon coordinates of a homogeneous tensor of this degree. Each
    /// standard bracket is its own Lyndon word plus lexicographically
    /// larger words, so one ascending sweep solves the triangular system.
    pub fn coordinates_of_tensor(&self, tensor: &[BigInt]) -> Result<Vec<BigInt>> {
        if tensor.len() != self.n.pow(self.degree as u32) {
            return Err(Error::Dimension(format!(
                "tensor of length {} in degree {} over {} letters",
                tensor.len(),
                self.degree,
                self.n
            )));
        }
        let mut residue = tensor.to_vec();
        let mut coords = vec![BigInt::zero(); self.dimension()];
        for idx in 0..residue.len() {
            if residue[idx].is_zero() {
                continue;
            }
            let k = *self.position.get(&idx).ok_or(Error::NotLie)?;
            let c = residue[idx].clone();
            for (j, e) in &self.expansions[k] {
                residue[*j] -= &c * e;
            }
            coords[k] = c;
        }
        Ok(coords)
    }

    /// Tensor expansion of a coordinate vector.
    pub fn tensor_of_coordinates(&self, coords: &[BigInt]) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.n.pow(self.degree as u32)];
        for (c, exp) in coords.iter().zip(&self.expansions) {
            if c.is_zero() {
                continue;
            }
            for (j, e) in exp {
                v[*j] += c * e;
            }
        }
        v
    }
}

/// Lyndon coordinates of the lowest component of a Magnus series, which
/// must sit in degree `degree`.
pub fn lie_coords(s: &TruncatedSeries, degree: usize, basis: &LieBasis) -> Result<Vec<BigInt>> {
    if basis.degree() != degree || basis.n() != s.n() {
        return Err(Error::Dimension("basis does not match series".into()));
    }
    for d in 1..degree {
        if s.component(d).iter().any(|x| !x.is_zero()) {
            return Err(Error::NotInLowerCentralTerm(degree));
        }
    }
    basis.coordinates_of_tensor(s.component(degree))
}

/// Index of `[x_i, x_j]`, `i < j`, in the degree-2 Lyndon basis; the same
/// ordering indexes `Λ²H` by `x_i ∧ x_j`.
pub fn pair_index(i: usize, j: usize, n: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// The bracket map `c : H ⊗ L_2 -> L_3`, `x ⊗ f ↦ [x, f]`, as a matrix
/// with row index `m * dim L_2 + pair_index(i, j)` for `x_m ⊗ [x_i, x_j]`.
pub fn bracket_h_l2(basis3: &LieBasis) -> IntMatrix {
    let n = basis3.n();
    let l2 = n * (n - 1) / 2;
    let mut rows = vec![Vec::new(); n * l2];
    for m in 0..n {
        for i in 0..n {
            for j in i + 1..n {
                let tree = LieTree::bracket(
                    LieTree::Generator(m),
                    LieTree::bracket(LieTree::Generator(i), LieTree::Generator(j)),
                );
                rows[m * l2 + pair_index(i, j, n)] = basis3
                    .coordinates_of_tensor(&tree.tensor(n))
                    .expect("brackets are Lie elements");
            }
        }
    }
    IntMatrix::from_rows(basis3.dimension(), rows)
}
