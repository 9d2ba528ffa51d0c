//! The free braided algebra T(V) of diagonal type, with the braided
//! coproduct, the braided adjoint, quantum Serre elements, and exact
//! primitivity checking; plus Gaussian binomial arithmetic in ℤ[q, q⁻¹].
//!
//! Words over the letters `0..θ` are kept in free (unrewritten) form; the
//! only structure is the braiding scalar picked up when words cross in the
//! tensor square, `(u ⊗ v)(w ⊗ z) = (∏ b_{v_a w_b}) · uw ⊗ vz`. Coefficients
//! live in ℤ\[ζ_L\] for L the lcm of the braiding entry orders, so primitivity
//! is an exact zero test.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::braiding::BraidingMatrix;
use crate::cyclotomic::{CyclotomicInt, RootOfUnity};
use crate::{Error, Result};

/// Expansion guard for symbolic operations (number of stored terms).
const TERM_GUARD: usize = 1_000_000;

// ---------------------------------------------------------------------------
// Laurent polynomials in one variable q over ℤ.
// ---------------------------------------------------------------------------

/// Element of ℤ[q, q⁻¹]; no zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(exp: i64, coeff: BigInt) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        QPoly { coeffs }
    }

    /// The quantum integer `(n)_q = 1 + q + … + q^{n−1}`.
    pub fn q_number(n: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        for e in 0..n {
            coeffs.insert(e as i64, BigInt::one());
        }
        QPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &BTreeMap<i64, BigInt> {
        &self.coeffs
    }

    fn insert(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    /// Substitutes `q ↦ q^m` (m ≠ 0).
    pub fn subst_power(&self, m: i64) -> Self {
        assert!(m != 0);
        QPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (e * m, c.clone()))
                .collect(),
        }
    }

    /// Evaluates at a root of unity inside the cyclotomic integers at `level`.
    pub fn eval_root(&self, level: u64, q: &RootOfUnity) -> Result<CyclotomicInt> {
        let mut acc = CyclotomicInt::zero(level);
        for (&e, c) in &self.coeffs {
            let root = CyclotomicInt::from_root(level, &q.pow(e))?;
            acc = &acc + &root.scale(c);
        }
        Ok(acc)
    }
}

impl core::ops::Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.insert(e, c.clone());
        }
        out
    }
}

impl core::ops::Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.insert(e, -c.clone());
        }
        out
    }
}

impl core::ops::Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &rhs.coeffs {
                out.insert(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl core::ops::Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

/// Gaussian binomial coefficient, built from the Pascal-style recurrence
/// `binom(n+1, h) = q^h·binom(n, h) + binom(n, h−1)`.
///
/// Panics if `k > n`.
pub fn qbinom(n: u32, k: u32) -> QPoly {
    assert!(k <= n, "q-binomial index out of range: ({n}, {k})");
    let mut row: Vec<QPoly> = vec![QPoly::one()];
    for m in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(QPoly::one());
        for h in 1..=m {
            let shifted = &QPoly::monomial(h as i64, BigInt::one()) * &row[h as usize];
            next.push(&shifted + &row[h as usize - 1]);
        }
        next.push(QPoly::one());
        row = next;
    }
    row[k as usize].clone()
}

/// Balanced-bracket q-binomial `[n over k]`, expressed through the ordinary
/// one by `binom(n,k)_{q²} = q^{k(n−k)}·[n over k]_q`.
fn qbinom_bracket(n: u32, k: u32) -> QPoly {
    let shift = -(k as i64) * (n as i64 - k as i64);
    &QPoly::monomial(shift, BigInt::one()) * &qbinom(n, k).subst_power(2)
}

/// Identity that failed in [`qbinom_identity_suite`], with its parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityFailure {
    pub identity: &'static str,
    pub n: u32,
}

/// Two-variable normal-ordered polynomials with `x·y = q·y·x`, used to check
/// the quantum binomial formula symbolically.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
struct QPlanePoly {
    // (y-degree, x-degree) -> coefficient
    terms: BTreeMap<(u32, u32), QPoly>,
}

impl QPlanePoly {
    fn term(y: u32, x: u32, c: QPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((y, x), c);
        }
        QPlanePoly { terms }
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            let entry = out.terms.entry(k).or_default();
            *entry = &*entry + c;
            if entry.is_zero() {
                out.terms.remove(&k);
            }
        }
        out
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut out = QPlanePoly::default();
        for (&(a, b), c1) in &self.terms {
            for (&(y, x), c2) in &rhs.terms {
                // x^b · y^y = q^{b·y} y^y x^b
                let scalar = QPoly::monomial(b as i64 * y as i64, BigInt::one());
                let coeff = &(&scalar * c1) * c2;
                let entry = out.terms.entry((a + y, b + x)).or_default();
                *entry = &*entry + &coeff;
                if entry.is_zero() {
                    out.terms.remove(&(a + y, b + x));
                }
            }
        }
        out
    }
}

/// Verifies the Gaussian-binomial identities symbolically for all
/// `1 ≤ n ≤ n_max`: the two recurrence forms, the quantum binomial formula
/// in the q-plane, the quantum-integer addition rule, and the three
/// alternating-sum identities (bracket and ordinary forms).
pub fn qbinom_identity_suite(n_max: u32) -> core::result::Result<(), IdentityFailure> {
    let fail = |identity, n| Err(IdentityFailure { identity, n });
    for n in 1..=n_max {
        // both forms of the Pascal recurrence
        for h in 1..=n {
            let target = qbinom(n + 1, h);
            let left =
                &(&QPoly::monomial(h as i64, BigInt::one()) * &qbinom(n, h)) + &qbinom(n, h - 1);
            if left != target {
                return fail("recurrence (q^h form)", n);
            }
            let right = &qbinom(n, h)
                + &(&QPoly::monomial((n + 1 - h) as i64, BigInt::one()) * &qbinom(n, h - 1));
            if right != target {
                return fail("recurrence (q^{n+1-h} form)", n);
            }
        }

        // quantum binomial formula: (x+y)^n = Σ binom(n,i) y^i x^{n-i}
        let x_plus_y =
            QPlanePoly::term(0, 1, QPoly::one()).add(&QPlanePoly::term(1, 0, QPoly::one()));
        let mut power = QPlanePoly::term(0, 0, QPoly::one());
        for _ in 0..n {
            power = power.mul(&x_plus_y);
        }
        let mut expansion = QPlanePoly::default();
        for i in 0..=n {
            expansion = expansion.add(&QPlanePoly::term(i, n - i, qbinom(n, i)));
        }
        if power != expansion {
            return fail("quantum binomial formula", n);
        }

        // (r)_q + q^r (s)_q = (r+s)_q
        for r in 0..=n {
            let s = n - r;
            let sum = &QPoly::q_number(r)
                + &(&QPoly::monomial(r as i64, BigInt::one()) * &QPoly::q_number(s));
            if sum != QPoly::q_number(n) {
                return fail("quantum integer addition", n);
            }
        }

        // Σ (−1)^i q^{i(1−n)} [n over i] = 0 (bracket form)
        let mut alt_bracket = QPoly::zero();
        for i in 0..=n {
            let sign = if i % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            let m = &QPoly::monomial(i as i64 * (1 - n as i64), sign) * &qbinom_bracket(n, i);
            alt_bracket = &alt_bracket + &m;
        }
        if !alt_bracket.is_zero() {
            return fail("alternating sum (bracket form)", n);
        }

        // Σ (−1)^i q^{(i²+i)/2 − ni} binom(n,i) = 0
        let mut alt_a5 = QPoly::zero();
        for i in 0..=n as i64 {
            let sign = if i % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            let m = &QPoly::monomial((i * i + i) / 2 - n as i64 * i, sign) * &qbinom(n, i as u32);
            alt_a5 = &alt_a5 + &m;
        }
        if !alt_a5.is_zero() {
            return fail("alternating sum (triangular form)", n);
        }

        // Σ (−1)^h q^{(h²−h)/2} binom(n,h) = 0
        let mut alt_a6 = QPoly::zero();
        for h in 0..=n as i64 {
            let sign = if h % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            let m = &QPoly::monomial((h * h - h) / 2, sign) * &qbinom(n, h as u32);
            alt_a6 = &alt_a6 + &m;
        }
        if !alt_a6.is_zero() {
            return fail("alternating sum (Gauss form)", n);
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Free braided polynomials.
// ---------------------------------------------------------------------------

/// An element of T(V) for a fixed diagonal braiding: a finite sum of words
/// over the letters `0..θ` with coefficients in ℤ\[ζ_L\].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidedPoly {
    braiding: BraidingMatrix,
    level: u64,
    terms: BTreeMap<Vec<u8>, CyclotomicInt>,
}

fn insert_term(terms: &mut BTreeMap<Vec<u8>, CyclotomicInt>, word: Vec<u8>, c: CyclotomicInt) {
    if c.is_zero() {
        return;
    }
    match terms.entry(word) {
        alloc::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        alloc::collections::btree_map::Entry::Occupied(mut e) => {
            let sum = &*e.get() + &c;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

impl BraidedPoly {
    pub fn zero(braiding: &BraidingMatrix) -> Self {
        BraidedPoly {
            braiding: braiding.clone(),
            level: braiding.level(),
            terms: BTreeMap::new(),
        }
    }

    /// The generator `x_i` (0-based letter).
    pub fn generator(braiding: &BraidingMatrix, i: usize) -> Result<Self> {
        if i >= braiding.theta() {
            return Err(Error::OutOfRange("generator index exceeds rank".into()));
        }
        let mut p = Self::zero(braiding);
        p.terms.insert(vec![i as u8], CyclotomicInt::one(p.level));
        Ok(p)
    }

    pub fn braiding(&self) -> &BraidingMatrix {
        &self.braiding
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u8>, CyclotomicInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, word: &[u8]) -> CyclotomicInt {
        self.terms
            .get(word)
            .cloned()
            .unwrap_or_else(|| CyclotomicInt::zero(self.level))
    }

    fn check_context(&self, rhs: &Self) -> Result<()> {
        if self.braiding != rhs.braiding {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_context(rhs)?;
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            insert_term(&mut out.terms, w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        BraidedPoly {
            braiding: self.braiding.clone(),
            level: self.level,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &CyclotomicInt) -> Self {
        let mut out = Self::zero(&self.braiding);
        for (w, x) in &self.terms {
            insert_term(&mut out.terms, w.clone(), x * c);
        }
        out
    }

    pub fn scale_root(&self, r: &RootOfUnity) -> Self {
        let c = CyclotomicInt::from_root(self.level, r).expect("entry orders divide the level");
        self.scale(&c)
    }

    /// Multidegree over the letters, defined when every word shares it.
    pub fn multidegree(&self) -> Result<Vec<u32>> {
        let theta = self.braiding.theta();
        let mut iter = self.terms.keys();
        let Some(first) = iter.next() else {
            return Ok(vec![0; theta]);
        };
        let degree_of = |w: &[u8]| {
            let mut d = vec![0u32; theta];
            for &l in w {
                d[l as usize] += 1;
            }
            d
        };
        let d = degree_of(first);
        for w in iter {
            if degree_of(w) != d {
                return Err(Error::InvalidInput(
                    "polynomial is not multihomogeneous".into(),
                ));
            }
        }
        Ok(d)
    }
}

/// Bilinear extension of word concatenation.
pub fn multiply(a: &BraidedPoly, b: &BraidedPoly) -> Result<BraidedPoly> {
    a.check_context(b)?;
    let mut out = BraidedPoly::zero(&a.braiding);
    for (u, cu) in &a.terms {
        for (v, cv) in &b.terms {
            let mut w = u.clone();
            w.extend_from_slice(v);
            insert_term(&mut out.terms, w, cu * cv);
        }
    }
    if out.terms.len() > TERM_GUARD {
        return Err(Error::ResourceGuard("braided product too large".into()));
    }
    Ok(out)
}

/// Braiding scalar picked up when the word `v` crosses the word `w`:
/// `∏_{a ∈ v, b ∈ w} b_{ab}`.
fn crossing(braiding: &BraidingMatrix, v: &[u8], w: &[u8]) -> RootOfUnity {
    let mut s = RootOfUnity::ONE;
    for &a in v {
        for &b in w {
            s = s * braiding.entry(a as usize, b as usize);
        }
    }
    s
}

/// An element of T(V) ⊗ T(V) with the braided tensor multiplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidedPolyTensor {
    braiding: BraidingMatrix,
    level: u64,
    terms: BTreeMap<(Vec<u8>, Vec<u8>), CyclotomicInt>,
}

impl BraidedPolyTensor {
    pub fn zero(braiding: &BraidingMatrix) -> Self {
        BraidedPolyTensor {
            braiding: braiding.clone(),
            level: braiding.level(),
            terms: BTreeMap::new(),
        }
    }

    pub fn terms(&self) -> &BTreeMap<(Vec<u8>, Vec<u8>), CyclotomicInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(&mut self, key: (Vec<u8>, Vec<u8>), c: CyclotomicInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = &*e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        if self.braiding != rhs.braiding {
            return Err(Error::ContextMismatch);
        }
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert(k.clone(), -c);
        }
        Ok(out)
    }

    /// `(u ⊗ v)(w ⊗ z) = crossing(v, w) · uw ⊗ vz`, bilinearly.
    pub fn multiply(&self, rhs: &Self) -> Result<Self> {
        if self.braiding != rhs.braiding {
            return Err(Error::ContextMismatch);
        }
        let mut out = Self::zero(&self.braiding);
        for ((u, v), c1) in &self.terms {
            for ((w, z), c2) in &rhs.terms {
                let scalar = crossing(&self.braiding, v, w);
                let mut left = u.clone();
                left.extend_from_slice(w);
                let mut right = v.clone();
                right.extend_from_slice(z);
                let c = &(c1 * c2)
                    * &CyclotomicInt::from_root(self.level, &scalar)
                        .expect("entry orders divide the level");
                out.insert((left, right), c);
            }
        }
        if out.terms.len() > TERM_GUARD {
            return Err(Error::ResourceGuard("tensor product too large".into()));
        }
        Ok(out)
    }
}

/// The algebra-map coproduct determined by `Δ(x_i) = x_i ⊗ 1 + 1 ⊗ x_i`.
pub fn coproduct(a: &BraidedPoly) -> BraidedPolyTensor {
    let mut out = BraidedPolyTensor::zero(&a.braiding);
    for (word, c) in &a.terms {
        // expand Δ(x_{i1})···Δ(x_{in}) in the braided tensor square
        let mut acc: BTreeMap<(Vec<u8>, Vec<u8>), CyclotomicInt> = BTreeMap::new();
        acc.insert((Vec::new(), Vec::new()), CyclotomicInt::one(a.level));
        for &l in word {
            let mut next: BTreeMap<(Vec<u8>, Vec<u8>), CyclotomicInt> = BTreeMap::new();
            for ((u, v), coeff) in &acc {
                // (u ⊗ v)(x_l ⊗ 1): v crosses x_l
                let scalar = crossing(&a.braiding, v, &[l]);
                let mut left = u.clone();
                left.push(l);
                let c1 = coeff
                    * &CyclotomicInt::from_root(a.level, &scalar)
                        .expect("entry orders divide the level");
                insert_term_pair(&mut next, (left, v.clone()), c1);
                // (u ⊗ v)(1 ⊗ x_l): no crossing
                let mut right = v.clone();
                right.push(l);
                insert_term_pair(&mut next, (u.clone(), right), coeff.clone());
            }
            acc = next;
        }
        for (k, coeff) in acc {
            out.insert(k, &coeff * c);
        }
    }
    out
}

fn insert_term_pair(
    terms: &mut BTreeMap<(Vec<u8>, Vec<u8>), CyclotomicInt>,
    key: (Vec<u8>, Vec<u8>),
    c: CyclotomicInt,
) {
    if c.is_zero() {
        return;
    }
    match terms.entry(key) {
        alloc::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        alloc::collections::btree_map::Entry::Occupied(mut e) => {
            let sum = &*e.get() + &c;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

/// Braided adjoint of the letter `x_i` on a multihomogeneous element:
/// `ad_c(x_i)(v) = x_i·v − χ_v(g_i)·v·x_i` with
/// `χ_v(g_i) = ∏_k b_{i, v_k}`.
pub fn ad_c(i: usize, v: &BraidedPoly) -> Result<BraidedPoly> {
    let deg = v.multidegree()?;
    let mut scalar = RootOfUnity::ONE;
    for (l, &d) in deg.iter().enumerate() {
        scalar = scalar * v.braiding.entry(i, l).pow(d as i64);
    }
    let xi = BraidedPoly::generator(&v.braiding, i)?;
    let left = multiply(&xi, v)?;
    let right = multiply(v, &xi)?.scale_root(&scalar);
    left.sub(&right)
}

/// The quantum Serre element `z_ij = (ad_c x_i)^{1−a_ij}(x_j)`.
pub fn serre_element(b: &BraidingMatrix, i: usize, j: usize, a_ij: i64) -> Result<BraidedPoly> {
    if i == j || a_ij > 0 {
        return Err(Error::InvalidInput("need i ≠ j and a_ij ≤ 0".into()));
    }
    let r = 1 - a_ij;
    let mut z = BraidedPoly::generator(b, j)?;
    for _ in 0..r {
        z = ad_c(i, &z)?;
    }
    Ok(z)
}

/// The closed form of the Serre element:
/// `z_r = Σ_k (−1)^k binom(r,k)_{χ} χ^{k(k−1)/2} η^k · x_i^{r−k} x_j x_i^k`
/// with `χ = b_ii` and `η = b_ij`.
pub fn serre_closed_form(b: &BraidingMatrix, i: usize, j: usize, a_ij: i64) -> Result<BraidedPoly> {
    if i == j || a_ij > 0 {
        return Err(Error::InvalidInput("need i ≠ j and a_ij ≤ 0".into()));
    }
    let r = (1 - a_ij) as u32;
    let chi = b.entry(i, i);
    let eta = b.entry(i, j);
    let mut out = BraidedPoly::zero(b);
    let level = out.level;
    for k in 0..=r {
        let binom = qbinom(r, k).eval_root(level, &chi)?;
        let root = chi.pow((k as i64 * (k as i64 - 1)) / 2) * eta.pow(k as i64);
        let mut c = &binom * &CyclotomicInt::from_root(level, &root)?;
        if k % 2 == 1 {
            c = -&c;
        }
        let mut word = vec![i as u8; (r - k) as usize];
        word.push(j as u8);
        word.extend(core::iter::repeat(i as u8).take(k as usize));
        insert_term(&mut out.terms, word, c);
    }
    Ok(out)
}

/// The scalar `η(g)·χ(t)·χ(g)^{r−1} = b_ij·b_ji·b_ii^{−a_ij}` controlling
/// primitivity of the Serre element.
pub fn serre_primitivity_scalar(b: &BraidingMatrix, i: usize, j: usize, a_ij: i64) -> RootOfUnity {
    b.entry(i, j) * b.entry(j, i) * b.entry(i, i).pow(-a_ij)
}

/// Exact primitivity test: `Δ(z) − z⊗1 − 1⊗z = 0`.
pub fn is_primitive(z: &BraidedPoly) -> bool {
    let mut delta = coproduct(z);
    for (w, c) in &z.terms {
        delta.insert((w.clone(), Vec::new()), -c);
        delta.insert((Vec::new(), w.clone()), -c);
    }
    delta.is_zero()
}
