//! Quantum antisymmetrizers and graded dimensions of the Nichols algebra.
//!
//! The braiding acts on words by `c_k(… w_k w_{k+1} …) = b_{w_k w_{k+1}} ·
//! (… w_{k+1} w_k …)`, so the braid-group representation on `V^{⊗n}` maps
//! basis words to scaled basis words. The antisymmetrizer `S_n` is the sum
//! of the positive (sign-free) braid lifts of all permutations; its rank is
//! the degree-n dimension of `B(V)`. Since `S_n` preserves multidegree, the
//! computation block-decomposes over multisets of letters, and each block
//! rank is an exact computation over ℤ\[ζ_L\].
//!
//! `S_n` is assembled recursively: with `γ_k` the lift of `s_1 s_2 ⋯ s_k`
//! (which moves the letter at position k+1 to the front),
//! `S_n = (1 ⊗ S_{n−1}) ∘ (Σ_k γ_k)`. The permutation-by-permutation lift
//! stays available as the definitional oracle.

use alloc::collections::BTreeMap;
use alloc::rc::Rc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::arith::permutations;
use crate::braiding::{BraidingMatrix, CartanTypeResult};
use crate::cartan::top_degree;
use crate::cyclotomic::{cyc_rank, CyclotomicInt, RootOfUnity};
use crate::{Error, Result};

/// Maximum number of basis words per multidegree block.
pub const BLOCK_GUARD: usize = 20_000;

/// Default degree cap for [`total_dimension`].
pub const DEFAULT_DEGREE_CAP: u64 = 12;

/// Applies the braid generator at 1-based position `k` (swapping positions
/// k and k+1) and returns the new word with the scalar `b_{w_k, w_{k+1}}`.
pub fn braid_generator_action(
    b: &BraidingMatrix,
    word: &[u8],
    k: usize,
) -> Result<(Vec<u8>, RootOfUnity)> {
    if k == 0 || k >= word.len() {
        return Err(Error::OutOfRange(
            "braid position must satisfy 1 ≤ k < n".into(),
        ));
    }
    let (i, j) = (word[k - 1] as usize, word[k] as usize);
    let mut out = word.to_vec();
    out.swap(k - 1, k);
    Ok((out, b.entry(i, j)))
}

/// A permutation of `{0, …, n−1}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidInput("not a permutation".into()));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// The adjacent transposition of 1-based positions k, k+1.
    pub fn transposition(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::OutOfRange("transposition out of range".into()));
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(k - 1, k);
        Ok(Permutation { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// All n! permutations.
    pub fn all(n: usize) -> Vec<Permutation> {
        permutations(n)
            .into_iter()
            .map(|images| Permutation { images })
            .collect()
    }

    /// A reduced word in adjacent transpositions (1-based positions),
    /// obtained by repeatedly removing the leftmost descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.images.clone();
        let mut letters = Vec::new();
        loop {
            let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) else {
                break;
            };
            w.swap(i, i + 1);
            letters.push(i + 1);
        }
        letters.reverse();
        letters
    }
}

/// Applies a word of braid letters as a composition, rightmost letter first.
fn apply_braid_word(
    b: &BraidingMatrix,
    letters: &[usize],
    word: &[u8],
) -> Result<(Vec<u8>, RootOfUnity)> {
    let mut w = word.to_vec();
    let mut scalar = RootOfUnity::ONE;
    for &l in letters.iter().rev() {
        let (next, s) = braid_generator_action(b, &w, l)?;
        w = next;
        scalar = scalar * s;
    }
    Ok((w, scalar))
}

/// The positive braid lift of a permutation along a reduced word. The braid
/// relation makes the result independent of the reduced word chosen.
pub fn lift_permutation(
    b: &BraidingMatrix,
    w: &Permutation,
    word: &[u8],
) -> Result<(Vec<u8>, RootOfUnity)> {
    if w.n() != word.len() {
        return Err(Error::LengthMismatch {
            expected: word.len(),
            got: w.n(),
        });
    }
    apply_braid_word(b, &w.reduced_word(), word)
}

type ActionMap = BTreeMap<Vec<u8>, CyclotomicInt>;

/// Action of the antisymmetrizer on one basis word, memoized on suffixes:
/// `S_n(u) = Σ_k (1 ⊗ S_{n−1})(γ_k · u)` with `γ_k` bringing the letter at
/// position k+1 to the front.
fn symmetrizer_action(
    b: &BraidingMatrix,
    level: u64,
    word: &[u8],
    memo: &mut BTreeMap<Vec<u8>, Rc<ActionMap>>,
) -> Rc<ActionMap> {
    if let Some(hit) = memo.get(word) {
        return hit.clone();
    }
    let n = word.len();
    let mut result: ActionMap = BTreeMap::new();
    if n <= 1 {
        result.insert(word.to_vec(), CyclotomicInt::one(level));
    } else {
        for k in 0..n {
            // γ_k = c_1 ∘ c_2 ∘ ⋯ ∘ c_k, applied innermost-first
            let mut w = word.to_vec();
            let mut scalar = RootOfUnity::ONE;
            for pos in (1..=k).rev() {
                let (i, j) = (w[pos - 1] as usize, w[pos] as usize);
                scalar = scalar * b.entry(i, j);
                w.swap(pos - 1, pos);
            }
            let head = w[0];
            let tail = symmetrizer_action(b, level, &w[1..], memo);
            let scalar =
                CyclotomicInt::from_root(level, &scalar).expect("entry orders divide the level");
            for (t, c) in tail.iter() {
                let mut out = Vec::with_capacity(n);
                out.push(head);
                out.extend_from_slice(t);
                let add = c * &scalar;
                match result.entry(out) {
                    alloc::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(add);
                    }
                    alloc::collections::btree_map::Entry::Occupied(mut e) => {
                        let sum = &*e.get() + &add;
                        if sum.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = sum;
                        }
                    }
                }
            }
        }
    }
    let rc = Rc::new(result);
    memo.insert(word.to_vec(), rc.clone());
    rc
}

/// One multidegree block of the antisymmetrizer: the multiset of letters,
/// the ordered basis of its arrangements, and the matrix of `S_n`.
#[derive(Debug, Clone)]
pub struct MultidegreeBlock {
    pub letters: Vec<u8>,
    pub basis: Vec<Vec<u8>>,
    pub matrix: Vec<Vec<CyclotomicInt>>,
}

fn arrangements(sorted: &[u8]) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = sorted.to_vec();
    loop {
        out.push(cur.clone());
        // next_permutation
        let n = cur.len();
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| cur[i] < cur[i + 1])
        else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
        if out.len() > BLOCK_GUARD {
            break;
        }
    }
    out
}

fn block_size(counts: &[usize]) -> Option<usize> {
    // multinomial coefficient, bailing out beyond the guard
    let mut result: u128 = 1;
    let mut placed = 0usize;
    for &c in counts {
        for k in 1..=c {
            placed += 1;
            result = result * placed as u128 / k as u128;
            if result > BLOCK_GUARD as u128 {
                return None;
            }
        }
    }
    Some(result as usize)
}

fn multisets(theta: usize, n: usize) -> Vec<Vec<usize>> {
    // counts per letter summing to n, lexicographic
    let mut out = Vec::new();
    let mut cur = vec![0usize; theta];
    fn rec(cur: &mut Vec<usize>, slot: usize, left: usize, out: &mut Vec<Vec<usize>>) {
        if slot + 1 == cur.len() {
            cur[slot] = left;
            out.push(cur.clone());
            return;
        }
        for take in 0..=left {
            cur[slot] = take;
            rec(cur, slot + 1, left - take, out);
        }
    }
    rec(&mut cur, 0, n, &mut out);
    out
}

/// Builds the antisymmetrizer block for the multiset given by letter counts.
pub fn multidegree_block(b: &BraidingMatrix, counts: &[usize]) -> Result<MultidegreeBlock> {
    if counts.len() != b.theta() {
        return Err(Error::LengthMismatch {
            expected: b.theta(),
            got: counts.len(),
        });
    }
    if block_size(counts).is_none() {
        return Err(Error::ResourceGuard(alloc::format!(
            "block {counts:?} exceeds {BLOCK_GUARD} basis words"
        )));
    }
    let mut letters = Vec::new();
    for (l, &c) in counts.iter().enumerate() {
        letters.extend(core::iter::repeat(l as u8).take(c));
    }
    let basis = arrangements(&letters);
    let index: BTreeMap<&[u8], usize> = basis
        .iter()
        .enumerate()
        .map(|(i, w)| (w.as_slice(), i))
        .collect();
    let level = b.level();
    let mut memo = BTreeMap::new();
    let mut matrix = vec![vec![CyclotomicInt::zero(level); basis.len()]; basis.len()];
    for (col, u) in basis.iter().enumerate() {
        let action = symmetrizer_action(b, level, u, &mut memo);
        for (w, c) in action.iter() {
            let row = index[w.as_slice()];
            matrix[row][col] = c.clone();
        }
    }
    Ok(MultidegreeBlock {
        letters,
        basis,
        matrix,
    })
}

/// `dim B(V)(n) = rank S_n`, summed over multidegree blocks.
pub fn antisymmetrizer_rank(b: &BraidingMatrix, n: usize) -> Result<usize> {
    let sets = multisets(b.theta(), n);
    // refuse before building anything if some block is out of scale
    for counts in &sets {
        if block_size(counts).is_none() {
            return Err(Error::ResourceGuard(alloc::format!(
                "block {counts:?} exceeds {BLOCK_GUARD} basis words"
            )));
        }
    }
    let mut rank = 0;
    for counts in &sets {
        let block = multidegree_block(b, counts)?;
        rank += cyc_rank(&block.matrix)?;
    }
    Ok(rank)
}

/// Graded dimensions computed by the antisymmetrizer oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedDims {
    /// `dim B(V)(n)` for n = 0, 1, …, up to the top degree or the cap.
    pub ranks: Vec<usize>,
    /// Total dimension when the full range was computed; `None` if capped.
    pub total: Option<BigUint>,
    pub capped: bool,
    /// Degree past which all ranks vanish, from the root-system data.
    pub top_degree: u64,
}

/// Sums antisymmetrizer ranks up to the predicted top degree (requires
/// finite type). If the top degree exceeds `cap`, ranks are reported up to
/// `cap` and the total is left open. For uncapped runs the ranks at the two
/// degrees past the top are verified to vanish.
pub fn total_dimension(b: &BraidingMatrix, ct: &CartanTypeResult, cap: u64) -> Result<GradedDims> {
    let top = top_degree(b, ct)?;
    if top > cap {
        let mut ranks = Vec::new();
        for n in 0..=cap {
            ranks.push(antisymmetrizer_rank(b, n as usize)?);
        }
        return Ok(GradedDims {
            ranks,
            total: None,
            capped: true,
            top_degree: top,
        });
    }
    let mut ranks = Vec::new();
    let mut total = BigUint::zero();
    for n in 0..=top {
        let r = antisymmetrizer_rank(b, n as usize)?;
        total += BigUint::from(r);
        ranks.push(r);
    }
    for past in [top + 1, top + 2] {
        let r = antisymmetrizer_rank(b, past as usize)?;
        assert_eq!(r, 0, "rank must vanish past the top degree");
    }
    Ok(GradedDims {
        ranks,
        total: Some(total),
        capped: false,
        top_degree: top,
    })
}
