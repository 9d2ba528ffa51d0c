//! Exact arithmetic for roots of unity and cyclotomic integers.
//!
//! A [`RootOfUnity`] is an element of ℚ/ℤ: the reduced fraction `num/den`
//! stands for `e^{2πi·num/den}`. Multiplying roots adds exponents, so all
//! arithmetic is exact rational arithmetic mod 1 and equality is equality of
//! canonical fractions.
//!
//! A [`CyclotomicInt`] is an element of ℤ\[ζ_N\] in the power basis
//! `1, ζ, …, ζ^{φ(N)−1}` of `ℤ[x]/Φ_N`. Products are reduced modulo the N-th
//! cyclotomic polynomial, whose coefficient table is computed once per level
//! (and, with the `std` feature, cached process-wide).
//!
//! [`cyc_rank`] computes matrix rank over the fraction field ℚ(ζ_N) by
//! fraction-free Bareiss elimination: intermediates stay in ℤ\[ζ_N\], and the
//! division by the previous pivot promotes to rational coordinates only to
//! compute the pivot inverse, with an exactness check on the way back.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{divisors, euler_phi, gcd_u64, lcm_u64, mod_inverse};
use crate::{Error, Result};

/// A root of unity, stored as its exponent in ℚ/ℤ.
///
/// Canonical form: `0 ≤ num < den` and `gcd(num, den) = 1`; the value is
/// `e^{2πi·num/den}`. The unit is `0/1` and `order()` is the denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootOfUnity {
    num: u64,
    den: u64,
}

impl RootOfUnity {
    /// The unit root `0/1`.
    pub const ONE: RootOfUnity = RootOfUnity { num: 0, den: 1 };

    /// Builds `e^{2πi·num/den}` in canonical form. Panics if `den == 0`.
    pub fn new(num: i64, den: u64) -> Self {
        assert!(den > 0, "denominator must be positive");
        let r = num.rem_euclid(den as i64) as u64;
        let g = gcd_u64(r, den);
        RootOfUnity {
            num: r / g,
            den: den / g,
        }
    }

    pub fn numerator(&self) -> u64 {
        self.num
    }

    pub fn denominator(&self) -> u64 {
        self.den
    }

    /// Multiplicative order; 1 for the unit.
    pub fn order(&self) -> u64 {
        self.den
    }

    pub fn is_one(&self) -> bool {
        self.num == 0
    }

    pub fn has_odd_order(&self) -> bool {
        self.den % 2 == 1
    }

    pub fn inverse(&self) -> Self {
        if self.num == 0 {
            *self
        } else {
            RootOfUnity {
                num: self.den - self.num,
                den: self.den,
            }
        }
    }

    /// `k`-th power, `k` may be negative.
    pub fn pow(&self, k: i64) -> Self {
        let den = self.den as i128;
        let e = (self.num as i128 * k as i128).rem_euclid(den);
        let g = gcd_u64(e as u64, self.den);
        RootOfUnity {
            num: e as u64 / g,
            den: self.den / g,
        }
    }

    /// The unique square root of odd order, when this root has odd order.
    ///
    /// For order `m` odd, `x^{(m+1)/2}` squares back to `x` and again has
    /// odd order; the other square root differs by −1 and has even order.
    pub fn odd_sqrt(&self) -> Option<Self> {
        if self.den % 2 == 0 {
            return None;
        }
        Some(self.pow(((self.den + 1) / 2) as i64))
    }
}

impl core::ops::Mul for RootOfUnity {
    type Output = RootOfUnity;

    fn mul(self, rhs: RootOfUnity) -> RootOfUnity {
        let l = lcm_u64(self.den, rhs.den);
        let a = self.num as u128 * (l / self.den) as u128;
        let b = rhs.num as u128 * (l / rhs.den) as u128;
        let e = ((a + b) % l as u128) as u64;
        let g = gcd_u64(e, l);
        RootOfUnity {
            num: e / g,
            den: l / g,
        }
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for RootOfUnity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (num, den) = s
            .split_once('/')
            .ok_or_else(|| Error::InvalidInput(alloc::format!("expected num/den, got {s:?}")))?;
        let num: i64 = num
            .trim()
            .parse()
            .map_err(|_| Error::InvalidInput(alloc::format!("bad numerator in {s:?}")))?;
        let den: u64 = den
            .trim()
            .parse()
            .map_err(|_| Error::InvalidInput(alloc::format!("bad denominator in {s:?}")))?;
        if den == 0 {
            return Err(Error::InvalidInput(alloc::format!(
                "zero denominator in {s:?}"
            )));
        }
        Ok(RootOfUnity::new(num, den))
    }
}

/// Solves `base^k = target` for the unique `k` in `(lo, hi]`.
///
/// Returns `Ok(None)` when no such exponent exists, and an error when the
/// window is wider than the base order and several exponents match.
pub fn discrete_log(
    base: RootOfUnity,
    target: RootOfUnity,
    lo: i64,
    hi: i64,
) -> Result<Option<i64>> {
    if base.is_one() {
        return Err(Error::InvalidInput(
            "discrete log base must not be 1".into(),
        ));
    }
    if lo >= hi {
        return Err(Error::OutOfRange("discrete log window is empty".into()));
    }
    let m = base.den;
    if m % target.den != 0 {
        return Ok(None); // powers of base have order dividing ord(base)
    }
    // base^k = target  ⟺  k·num ≡ target.num·(m/ord target) (mod m)
    let inv = mod_inverse(base.num as i64, m).expect("canonical form is coprime");
    let t = target.num as u128 * (m / target.den) as u128 % m as u128;
    let k0 = (inv as u128 * t % m as u128) as i64;
    let m = m as i128;
    let count = (hi as i128 - k0 as i128).div_euclid(m) - (lo as i128 - k0 as i128).div_euclid(m);
    match count {
        0 => Ok(None),
        1 => {
            let k = k0 as i128 + (hi as i128 - k0 as i128).div_euclid(m) * m;
            Ok(Some(k as i64))
        }
        _ => Err(Error::AmbiguousDiscreteLog),
    }
}

// ---------------------------------------------------------------------------
// Integer polynomial helpers (little-endian coefficient vectors).
// ---------------------------------------------------------------------------

fn poly_trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            out[i + j] += ai * bj;
        }
    }
    poly_trim(&mut out);
    out
}

/// Exact division by a monic polynomial; panics if the remainder is nonzero.
fn poly_exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(den.last().is_some_and(One::is_one), "divisor must be monic");
    let mut rem: Vec<BigInt> = num.to_vec();
    poly_trim(&mut rem);
    let d = den.len() - 1;
    if rem.len() <= d {
        assert!(rem.is_empty(), "inexact polynomial division");
        return Vec::new();
    }
    let mut quot = vec![BigInt::zero(); rem.len() - d];
    while rem.len() > d {
        let k = rem.len() - 1 - d;
        let c = rem.last().unwrap().clone();
        quot[k] = c.clone();
        for (i, di) in den.iter().enumerate() {
            let v = &c * di;
            rem[k + i] -= v;
        }
        poly_trim(&mut rem);
        if rem.is_empty() {
            break;
        }
    }
    assert!(rem.is_empty(), "inexact polynomial division");
    poly_trim(&mut quot);
    quot
}

fn compute_cyclotomic_poly(n: u64) -> Vec<BigInt> {
    // Φ_n = (x^n − 1) / ∏_{d|n, d<n} Φ_d
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in divisors(n) {
        if d < n {
            let phi_d = cyclotomic_poly(d);
            num = poly_exact_div_monic(&num, &phi_d);
        }
    }
    num
}

/// Monic coefficient vector of Φ_n, length φ(n)+1.
///
/// With the `std` feature the table is cached process-wide; concurrent
/// population is idempotent. Without it the table is recomputed per call.
#[cfg(feature = "std")]
fn cyclotomic_poly(n: u64) -> Arc<Vec<BigInt>> {
    use std::collections::BTreeMap;
    use std::sync::{Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<BTreeMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    // Compute outside the lock: the recursion re-enters this function.
    let fresh = Arc::new(compute_cyclotomic_poly(n));
    cache.lock().unwrap().entry(n).or_insert(fresh).clone()
}

#[cfg(not(feature = "std"))]
fn cyclotomic_poly(n: u64) -> Arc<Vec<BigInt>> {
    Arc::new(compute_cyclotomic_poly(n))
}

// ---------------------------------------------------------------------------
// Cyclotomic integers.
// ---------------------------------------------------------------------------

/// An element of ℤ\[ζ_N\] in the power basis `1, ζ, …, ζ^{φ(N)−1}`.
///
/// The representation after reduction mod Φ_N is unique, so equality is
/// coefficient equality at equal level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicInt {
    level: u64,
    coeffs: Vec<BigInt>,
}

impl CyclotomicInt {
    pub fn zero(level: u64) -> Self {
        assert!(level > 0);
        CyclotomicInt {
            level,
            coeffs: vec![BigInt::zero(); euler_phi(level) as usize],
        }
    }

    pub fn one(level: u64) -> Self {
        Self::from_int(level, BigInt::one())
    }

    pub fn from_int(level: u64, n: BigInt) -> Self {
        let mut out = Self::zero(level);
        if !out.coeffs.is_empty() {
            out.coeffs[0] = n;
        } else {
            // level 1: φ(1) = 1, never empty; keep the guard for clarity
            out.coeffs = vec![n];
        }
        out
    }

    /// Embeds a root of unity whose order divides the level.
    pub fn from_root(level: u64, r: &RootOfUnity) -> Result<Self> {
        if level % r.den != 0 {
            return Err(Error::LevelMismatch {
                left: level,
                right: r.den,
            });
        }
        let e = (r.num * (level / r.den)) as usize;
        let mut poly = vec![BigInt::zero(); e + 1];
        poly[e] = BigInt::one();
        Ok(CyclotomicInt {
            level,
            coeffs: reduce_mod_phi(level, poly),
        })
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| if i == 0 { c.is_one() } else { c.is_zero() })
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        CyclotomicInt {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    fn assert_level(&self, rhs: &Self) {
        assert_eq!(
            self.level, rhs.level,
            "cyclotomic integers at different levels"
        );
    }
}

fn reduce_mod_phi(level: u64, mut poly: Vec<BigInt>) -> Vec<BigInt> {
    let phi = cyclotomic_poly(level);
    let deg = phi.len() - 1;
    poly_trim(&mut poly);
    while poly.len() > deg {
        let k = poly.len() - 1 - deg;
        let c = poly.last().unwrap().clone();
        for (i, pi) in phi.iter().enumerate() {
            let v = &c * pi;
            poly[k + i] -= v;
        }
        poly_trim(&mut poly);
    }
    poly.resize(deg, BigInt::zero());
    poly
}

impl core::ops::Add for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn add(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        self.assert_level(rhs);
        CyclotomicInt {
            level: self.level,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl core::ops::Sub for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn sub(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        self.assert_level(rhs);
        CyclotomicInt {
            level: self.level,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl core::ops::Neg for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn neg(self) -> CyclotomicInt {
        CyclotomicInt {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl core::ops::Mul for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn mul(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        self.assert_level(rhs);
        CyclotomicInt {
            level: self.level,
            coeffs: reduce_mod_phi(self.level, poly_mul(&self.coeffs, &rhs.coeffs)),
        }
    }
}

// ---------------------------------------------------------------------------
// Exact rank over ℚ(ζ_N).
// ---------------------------------------------------------------------------

/// Inverse data for a nonzero pivot: `u·b ≡ denom (mod Φ)` with integer `u`
/// and a positive integer `denom`, obtained from the rational extended
/// Euclidean algorithm with denominators cleared.
struct PivotInverse {
    u: Vec<BigInt>,
    denom: BigInt,
}

fn rational_poly_divmod(
    num: &[BigRational],
    den: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = den.last().unwrap();
    let mut quot = vec![BigRational::zero(); rem.len().saturating_sub(dd)];
    while rem.len() > dd {
        let k = rem.len() - 1 - dd;
        let c = rem.last().unwrap() / lead;
        quot[k] = c.clone();
        for (i, di) in den.iter().enumerate() {
            let v = &c * di;
            rem[k + i] -= v;
        }
        while rem.last().is_some_and(Zero::is_zero) {
            rem.pop();
        }
    }
    (quot, rem)
}

fn pivot_inverse(b: &CyclotomicInt) -> PivotInverse {
    debug_assert!(!b.is_zero());
    let phi = cyclotomic_poly(b.level);
    let to_rat = |p: &[BigInt]| -> Vec<BigRational> {
        let mut v: Vec<BigRational> = p.iter().map(|c| BigRational::from(c.clone())).collect();
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        v
    };
    // Extended Euclid over ℚ[x]; Φ_N is irreducible, so the gcd is a nonzero
    // constant and u satisfies u·b ≡ gcd (mod Φ).
    let mut r0 = to_rat(&phi);
    let mut r1 = to_rat(&b.coeffs);
    let mut u0: Vec<BigRational> = Vec::new();
    let mut u1: Vec<BigRational> = vec![BigRational::one()];
    while r1.len() > 1 {
        let (q, rem) = rational_poly_divmod(&r0, &r1);
        let qu1 = rat_poly_mul(&q, &u1);
        let next_u = rat_poly_sub(&u0, &qu1);
        r0 = r1;
        r1 = rem;
        u0 = u1;
        u1 = next_u;
    }
    assert!(
        r1.len() == 1 && !r1[0].is_zero(),
        "pivot shares a factor with the cyclotomic polynomial"
    );
    let c = r1[0].clone();
    // Clear denominators of u and of c in one stroke.
    let mut scale = c.denom().clone();
    for coeff in &u1 {
        scale = num_integer::Integer::lcm(&scale, coeff.denom());
    }
    let scale_rat = BigRational::from(scale.clone());
    let u: Vec<BigInt> = u1.iter().map(|x| (x * &scale_rat).to_integer()).collect();
    let mut denom = (&c * &scale_rat).to_integer();
    let mut u = u;
    if denom.is_negative() {
        denom = -denom;
        for x in &mut u {
            *x = -x.clone();
        }
    }
    PivotInverse { u, denom }
}

fn rat_poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    while out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

fn rat_poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), BigRational::zero());
    }
    for (i, bi) in b.iter().enumerate() {
        out[i] -= bi;
    }
    while out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

/// Divides `a` by the pivot described by `inv`, exactly.
fn exact_div(a: &CyclotomicInt, inv: &PivotInverse) -> CyclotomicInt {
    let prod = reduce_mod_phi(a.level, poly_mul(&a.coeffs, &inv.u));
    let coeffs = prod
        .iter()
        .map(|c| {
            let (q, r) = num_integer::Integer::div_rem(c, &inv.denom);
            assert!(r.is_zero(), "Bareiss division left a remainder");
            q
        })
        .collect();
    CyclotomicInt {
        level: a.level,
        coeffs,
    }
}

/// Rank of a matrix over ℚ(ζ_N), computed by fraction-free Bareiss
/// elimination with full pivoting. All entries must share one level.
pub fn cyc_rank(matrix: &[Vec<CyclotomicInt>]) -> Result<usize> {
    let rows = matrix.len();
    if rows == 0 {
        return Ok(0);
    }
    let cols = matrix[0].len();
    if cols == 0 {
        return Ok(0);
    }
    let level = matrix[0][0].level;
    for row in matrix {
        if row.len() != cols {
            return Err(Error::InvalidInput("ragged matrix".into()));
        }
        for e in row {
            if e.level != level {
                return Err(Error::LevelMismatch {
                    left: level,
                    right: e.level,
                });
            }
        }
    }

    let mut m: Vec<Vec<CyclotomicInt>> = matrix.to_vec();
    let mut rank = 0;
    let steps = rows.min(cols);
    let mut prev: Option<PivotInverse> = None;
    for k in 0..steps {
        // Full pivoting: any nonzero entry of the trailing submatrix works.
        let pivot = (k..rows)
            .flat_map(|i| (k..cols).map(move |j| (i, j)))
            .find(|&(i, j)| !m[i][j].is_zero());
        let Some((pi, pj)) = pivot else { break };
        m.swap(k, pi);
        if pj != k {
            for row in &mut m {
                row.swap(k, pj);
            }
        }
        rank += 1;
        if k + 1 == steps {
            break;
        }
        for i in k + 1..rows {
            for j in k + 1..cols {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = match &prev {
                    None => num,
                    Some(inv) => exact_div(&num, inv),
                };
            }
            m[i][k] = CyclotomicInt::zero(level);
        }
        prev = Some(pivot_inverse(&m[k][k]));
    }
    Ok(rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::SplitMix64;

    fn r(num: i64, den: u64) -> RootOfUnity {
        RootOfUnity::new(num, den)
    }

    #[test]
    fn mul_adds_exponents() {
        assert_eq!(r(1, 3) * r(1, 3), r(2, 3));
        assert_eq!(r(1, 2) * r(1, 2), RootOfUnity::ONE);
        assert_eq!(r(1, 3) * r(1, 6), r(1, 2));
    }

    #[test]
    fn pow_examples() {
        assert_eq!(r(1, 5).pow(-1), r(4, 5));
        assert_eq!(r(1, 3).pow(3), RootOfUnity::ONE);
        assert_eq!(r(2, 7).pow(4), r(1, 7));
    }

    #[test]
    fn pow_respects_order() {
        let mut rng = SplitMix64::new(7);
        for _ in 0..200 {
            let den = 1 + rng.below(40);
            let x = r(rng.below(1000) as i64, den);
            let n = x.order();
            assert!(x.pow(n as i64).is_one());
            let k = rng.below(10_000) as i64 - 5000;
            assert_eq!(x.pow(k), x.pow(k.rem_euclid(n as i64)));
        }
    }

    #[test]
    fn order_of_product_divides_lcm() {
        let mut rng = SplitMix64::new(11);
        for _ in 0..200 {
            let a = r(rng.below(100) as i64, 1 + rng.below(30));
            let b = r(rng.below(100) as i64, 1 + rng.below(30));
            let l = lcm_u64(a.order(), b.order());
            assert_eq!(l % (a * b).order(), 0);
        }
    }

    #[test]
    fn parse_and_display() {
        let x: RootOfUnity = "3/9".parse().unwrap();
        assert_eq!(x, r(1, 3));
        assert_eq!(alloc::format!("{x}"), "1/3");
        assert!("1".parse::<RootOfUnity>().is_err());
        assert!("1/0".parse::<RootOfUnity>().is_err());
    }

    #[test]
    fn discrete_log_in_window() {
        // (1/5)^(−2) = −2/5 ≡ 3/5
        assert_eq!(discrete_log(r(1, 5), r(3, 5), -5, 0).unwrap(), Some(-2));
        // the unit target: k = 0 is the unique exponent in (−3, 0]
        assert_eq!(
            discrete_log(r(1, 3), RootOfUnity::ONE, -3, 0).unwrap(),
            Some(0)
        );
        assert_eq!(
            discrete_log(r(1, 3), RootOfUnity::ONE, -4, -1).unwrap(),
            Some(-3)
        );
        // incompatible orders
        assert_eq!(discrete_log(r(1, 3), r(1, 2), -3, 0).unwrap(), None);
    }

    #[test]
    fn discrete_log_ambiguity() {
        assert_eq!(
            discrete_log(r(1, 3), r(1, 3), 0, 7),
            Err(Error::AmbiguousDiscreteLog)
        );
        assert!(discrete_log(RootOfUnity::ONE, r(1, 3), 0, 3).is_err());
    }

    #[test]
    fn phi_tables() {
        let as_i64 = |n: u64| -> Vec<i64> {
            cyclotomic_poly(n)
                .iter()
                .map(|c| i64::try_from(c).unwrap())
                .collect()
        };
        assert_eq!(as_i64(1), vec![-1, 1]);
        assert_eq!(as_i64(2), vec![1, 1]);
        assert_eq!(as_i64(3), vec![1, 1, 1]);
        assert_eq!(as_i64(6), vec![1, -1, 1]);
        assert_eq!(as_i64(12), vec![1, 0, -1, 0, 1]);
    }

    fn cyc(level: u64, root: RootOfUnity) -> CyclotomicInt {
        CyclotomicInt::from_root(level, &root).unwrap()
    }

    #[test]
    fn root_embedding_round_trips() {
        let mut rng = SplitMix64::new(3);
        for _ in 0..100 {
            let level = [3, 5, 9, 12, 15][rng.below(5) as usize];
            let a = r(rng.below(50) as i64, *divisors_pick(&mut rng, level));
            let b = r(rng.below(50) as i64, *divisors_pick(&mut rng, level));
            let prod = cyc(level, a * b);
            assert_eq!(&cyc(level, a) * &cyc(level, b), prod);
        }
    }

    fn divisors_pick(rng: &mut SplitMix64, n: u64) -> &'static u64 {
        // small fixed divisors so orders always divide the level
        static DIVS: [u64; 4] = [1, 3, 5, 15];
        let mut candidates: Vec<&'static u64> = DIVS.iter().filter(|d| n % **d == 0).collect();
        if candidates.is_empty() {
            candidates.push(&DIVS[0]);
        }
        candidates[rng.below(candidates.len() as u64) as usize]
    }

    #[test]
    fn cyclotomic_mul_commutes_and_associates() {
        let mut rng = SplitMix64::new(5);
        for _ in 0..50 {
            let level = 1 + rng.below(15);
            let rand_elt = |rng: &mut SplitMix64| {
                let mut x = CyclotomicInt::zero(level);
                for c in &mut x.coeffs {
                    *c = BigInt::from(rng.below(21) as i64 - 10);
                }
                x
            };
            let a = rand_elt(&mut rng);
            let b = rand_elt(&mut rng);
            let c = rand_elt(&mut rng);
            assert_eq!(&a * &b, &b * &a);
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }
    }

    #[test]
    fn rank_of_identity() {
        let level = 6;
        let id: Vec<Vec<CyclotomicInt>> = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| {
                        if i == j {
                            CyclotomicInt::one(level)
                        } else {
                            CyclotomicInt::zero(level)
                        }
                    })
                    .collect()
            })
            .collect();
        assert_eq!(cyc_rank(&id).unwrap(), 3);
    }

    #[test]
    fn rank_detects_singular_cyclotomic_matrix() {
        // [[1, ζ3], [ζ3², 1]] has determinant 1 − ζ3·ζ3² = 0.
        let level = 3;
        let m = vec![
            vec![CyclotomicInt::one(level), cyc(level, r(1, 3))],
            vec![cyc(level, r(2, 3)), CyclotomicInt::one(level)],
        ];
        assert_eq!(cyc_rank(&m).unwrap(), 1);
    }

    #[test]
    fn rank_uses_phi_relation() {
        // 1 + ζ3 + ζ3² = 0, so the corner entry vanishes.
        let level = 3;
        let corner = &(&CyclotomicInt::one(level) + &cyc(level, r(1, 3))) + &cyc(level, r(2, 3));
        assert!(corner.is_zero());
        let m = vec![
            vec![corner, CyclotomicInt::zero(level)],
            vec![CyclotomicInt::zero(level), CyclotomicInt::one(level)],
        ];
        assert_eq!(cyc_rank(&m).unwrap(), 1);
    }

    #[test]
    fn rank_invariant_under_permutation_and_unit_scaling() {
        let level = 5;
        let mut rng = SplitMix64::new(17);
        for _ in 0..20 {
            let n = 3 + rng.below(2) as usize;
            let mat: Vec<Vec<CyclotomicInt>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            let mut x = CyclotomicInt::zero(level);
                            for c in &mut x.coeffs {
                                *c = BigInt::from(rng.below(7) as i64 - 3);
                            }
                            x
                        })
                        .collect()
                })
                .collect();
            let base = cyc_rank(&mat).unwrap();

            let mut permuted = mat.clone();
            permuted.swap(0, n - 1);
            for row in &mut permuted {
                row.swap(0, 1);
            }
            assert_eq!(cyc_rank(&permuted).unwrap(), base);

            let mut scaled = mat.clone();
            let unit = cyc(level, r(rng.below(5) as i64, 5));
            for e in &mut scaled[1] {
                *e = &*e * &unit;
            }
            assert_eq!(cyc_rank(&scaled).unwrap(), base);
        }
    }

    #[test]
    fn bareiss_agrees_with_integer_rank_on_rationals() {
        // Level 1 embeds plain integers; sanity-check a known-rank matrix.
        let level = 1;
        let e = |n: i64| CyclotomicInt::from_int(level, BigInt::from(n));
        let m = vec![
            vec![e(1), e(2), e(3)],
            vec![e(2), e(4), e(6)],
            vec![e(1), e(0), e(1)],
        ];
        assert_eq!(cyc_rank(&m).unwrap(), 2);
    }
}
