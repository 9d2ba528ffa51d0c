//! Braiding matrices of diagonal type and their Cartan-type data.
//!
//! A braiding is a θ×θ matrix of roots of unity `b_ij`. It is of Cartan type
//! when `b_ii ≠ 1` and every product `b_ij·b_ji` is a power of `b_ii`; the
//! exponents, normalized into `(−ord b_ii, 0]`, form a generalized Cartan
//! matrix. On top of that sit the FL-type decision procedures: an exhaustive
//! witness search over a finite candidate set of roots, and the rank-2
//! arithmetic criterion kept as an independent fast path.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{gcd_u64, lcm_u64, mod_inverse};
use crate::cartan::{symmetrizer, GeneralizedCartanMatrix};
use crate::cyclotomic::{discrete_log, RootOfUnity};
use crate::{Error, Result};

/// A θ×θ matrix of roots of unity; indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidingMatrix {
    entries: Vec<Vec<RootOfUnity>>,
}

impl BraidingMatrix {
    pub fn new(entries: Vec<Vec<RootOfUnity>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::InvalidInput("braiding must have rank ≥ 1".into()));
        }
        if entries.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidInput("braiding matrix is not square".into()));
        }
        Ok(BraidingMatrix { entries })
    }

    /// Builds `b_ij = e^{2πi·exps[i][j]/den}`.
    pub fn from_exponents(den: u64, exps: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            exps.iter()
                .map(|row| row.iter().map(|&e| RootOfUnity::new(e, den)).collect())
                .collect(),
        )
    }

    pub fn theta(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> RootOfUnity {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<RootOfUnity>] {
        &self.entries
    }

    pub fn all_odd_order(&self) -> bool {
        self.entries
            .iter()
            .all(|row| row.iter().all(RootOfUnity::has_odd_order))
    }

    /// lcm of the orders of all entries.
    pub fn level(&self) -> u64 {
        self.entries
            .iter()
            .flatten()
            .fold(1, |l, e| lcm_u64(l, e.order()))
    }

    pub fn principal_submatrix(&self, indices: &[usize]) -> Self {
        BraidingMatrix {
            entries: indices
                .iter()
                .map(|&i| indices.iter().map(|&j| self.entries[i][j]).collect())
                .collect(),
        }
    }
}

/// `b_ij = b_ji` for all i, j.
pub fn is_symmetric(b: &BraidingMatrix) -> bool {
    let n = b.theta();
    (0..n).all(|i| (i + 1..n).all(|j| b.entry(i, j) == b.entry(j, i)))
}

/// Cartan data extracted from a braiding: the generalized Cartan matrix and
/// the orders `N_i = ord b_ii`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanTypeResult {
    gcm: GeneralizedCartanMatrix,
    diagonal_orders: Vec<u64>,
}

impl CartanTypeResult {
    pub fn gcm(&self) -> &GeneralizedCartanMatrix {
        &self.gcm
    }

    pub fn diagonal_orders(&self) -> &[u64] {
        &self.diagonal_orders
    }
}

/// Extracts the Cartan matrix, or `None` when the braiding is not of Cartan
/// type (some `b_ii = 1`, or some product `b_ij·b_ji` is not a power of
/// `b_ii`). The exponent `a_ij` is the unique one in `(−ord b_ii, 0]`.
pub fn cartan_type(b: &BraidingMatrix) -> Option<CartanTypeResult> {
    let n = b.theta();
    let orders: Vec<u64> = (0..n).map(|i| b.entry(i, i).order()).collect();
    if orders.iter().any(|&o| o == 1) {
        return None;
    }
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        a[i][i] = 2;
        for j in 0..n {
            if i == j {
                continue;
            }
            let product = b.entry(i, j) * b.entry(j, i);
            let lo = -(orders[i] as i64);
            match discrete_log(b.entry(i, i), product, lo, 0) {
                Ok(Some(k)) => a[i][j] = k,
                Ok(None) => return None,
                Err(_) => unreachable!("window equals the base order"),
            }
        }
    }
    // b_ij·b_ji is symmetric in (i, j), so zeros must pair up.
    for i in 0..n {
        for j in 0..n {
            assert_eq!(a[i][j] == 0, a[j][i] == 0, "zero pattern must be symmetric");
        }
    }
    let gcm = GeneralizedCartanMatrix::new(a).expect("extraction yields a valid GCM");
    Some(CartanTypeResult {
        gcm,
        diagonal_orders: orders,
    })
}

/// Finest partition of `{0, …, θ−1}` in which `i` and `j` share a block iff
/// they are linked by a chain of pairs with `b_kl·b_lk ≠ 1`. Blocks are
/// sorted by least element.
pub fn connected_components(b: &BraidingMatrix) -> Vec<Vec<usize>> {
    let n = b.theta();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if !seen[j] && i != j && !(b.entry(i, j) * b.entry(j, i)).is_one() {
                    seen[j] = true;
                    comp.push(j);
                    stack.push(j);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// An FL-type witness: positive coprime `d` and a root `q` with
/// `b_ij = q^{d_i·a_ij}` for all i, j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlWitness {
    pub d: Vec<u64>,
    pub q: RootOfUnity,
}

/// Outcome of the FL-type decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FlVerdict {
    Witness(FlWitness),
    /// The Cartan matrix is not symmetrizable, so no `d` exists at all.
    NotSymmetrizable,
    /// Symmetrizable, but no root of unity satisfies the witness equations
    /// (this includes cross-component entries different from 1).
    NoWitness,
}

impl FlVerdict {
    pub fn is_witness(&self) -> bool {
        matches!(self, FlVerdict::Witness(_))
    }
}

/// Solutions of `a·t ≡ c (mod m)` as an arithmetic progression
/// `t0 + k·step`, `k = 0 .. count`.
fn linear_congruence(a: u64, c: u64, m: u64) -> Option<(u64, u64, u64)> {
    let g = gcd_u64(a % m, m);
    if g == 0 {
        // a ≡ 0 (mod m): solvable iff c ≡ 0, every t works
        return if c % m == 0 { Some((0, 1, m)) } else { None };
    }
    if c % g != 0 {
        return None;
    }
    let m1 = m / g;
    let inv = mod_inverse((a / g % m1) as i64, m1)?;
    let t0 = (c / g % m1) as u128 * inv as u128 % m1 as u128;
    Some((t0 as u64, m1, g))
}

fn root_pow_matches(q: RootOfUnity, d: u64, a: i64, target: RootOfUnity) -> bool {
    q.pow(d as i64 * a) == target
}

/// Searches for an FL witness.
///
/// Per connected component the symmetrizer fixes `d` up to scale, and any
/// witness root for the component has order dividing `lcm_i(2·d_i·N_i)`; the
/// search runs over that finite set (pruned to the arithmetic progression
/// allowed by the first diagonal equation). Components are then combined
/// with a common root, rescaling `d` per component. Entries joining distinct
/// components must equal 1 exactly, since the witness form forces
/// `b_ij = q^0` there.
///
/// Entries of even order are refused.
pub fn fl_witness(b: &BraidingMatrix, ct: &CartanTypeResult) -> Result<FlVerdict> {
    if !b.all_odd_order() {
        return Err(Error::EvenOrder);
    }
    let n = b.theta();
    let Some(d_full) = symmetrizer(ct.gcm()) else {
        return Ok(FlVerdict::NotSymmetrizable);
    };
    let comps = connected_components(b);
    // Cross-component entries must be exactly 1.
    for (ci, comp_i) in comps.iter().enumerate() {
        for comp_j in comps.iter().skip(ci + 1) {
            for &i in comp_i {
                for &j in comp_j {
                    if !b.entry(i, j).is_one() || !b.entry(j, i).is_one() {
                        return Ok(FlVerdict::NoWitness);
                    }
                }
            }
        }
    }

    let mut picks: Vec<(Vec<u64>, RootOfUnity)> = Vec::new();
    for comp in &comps {
        let mut d_sub: Vec<u64> = comp.iter().map(|&i| d_full[i]).collect();
        let g = d_sub.iter().fold(0, |acc, &x| gcd_u64(acc, x));
        for x in &mut d_sub {
            *x /= g;
        }
        let l = comp.iter().zip(&d_sub).fold(1u64, |acc, (&i, &di)| {
            lcm_u64(acc, 2 * di * ct.diagonal_orders()[i])
        });
        // Candidates q = t/l must satisfy q^{2·d_0} = b_{i0,i0}; walk that
        // progression and check the full system on each survivor.
        let i0 = comp[0];
        let b0 = b.entry(i0, i0);
        let c0 = b0.numerator() * (l / b0.order());
        let Some((t0, step, count)) = linear_congruence(2 * d_sub[0] % l, c0 % l, l) else {
            return Ok(FlVerdict::NoWitness);
        };
        let mut found = None;
        'candidates: for k in 0..count {
            let t = t0 + k * step;
            let q = RootOfUnity::new(t as i64, l);
            for (li, &i) in comp.iter().enumerate() {
                for (lj, &j) in comp.iter().enumerate() {
                    let a = ct.gcm().entry(i, j);
                    let _ = lj;
                    if !root_pow_matches(q, d_sub[li], a, b.entry(i, j)) {
                        continue 'candidates;
                    }
                }
            }
            found = Some(q);
            break;
        }
        let Some(q) = found else {
            return Ok(FlVerdict::NoWitness);
        };
        picks.push((d_sub, q));
    }

    // Combine components through a common root of order lcm(ord q_c).
    let m = picks
        .iter()
        .fold(1u64, |acc, (_, q)| lcm_u64(acc, q.order()));
    let mut d_global = vec![0u64; n];
    for (comp, (d_sub, q)) in comps.iter().zip(&picks) {
        let k_c = q.numerator() * (m / q.order());
        debug_assert!(k_c >= 1, "component witness cannot be the unit");
        for (local, &i) in comp.iter().enumerate() {
            d_global[i] = k_c * d_sub[local];
        }
    }
    let g = d_global.iter().fold(0, |acc, &x| gcd_u64(acc, x));
    for x in &mut d_global {
        *x /= g;
    }
    let q = RootOfUnity::new(g as i64, m);
    for i in 0..n {
        for j in 0..n {
            assert!(
                root_pow_matches(q, d_global[i], ct.gcm().entry(i, j), b.entry(i, j)),
                "witness replay failed"
            );
        }
    }
    Ok(FlVerdict::Witness(FlWitness { d: d_global, q }))
}

/// The rank-2 arithmetic criterion: with coprime `d`, `r = lcm(d_i·N_i)`,
/// `e_i = r/(d_i·N_i)`, `s = r/(d_1·d_2)` and `b_ii = ξ^{e_i·d_i·k_i}` for a
/// fixed root ξ of order r, FL-type is equivalent to
/// `e_1·k_1 ≡ e_2·k_2 (mod s)`.
///
/// Preconditions: θ = 2, connected, symmetric, all entries of odd order.
pub fn fl_rank2_criterion(b: &BraidingMatrix, ct: &CartanTypeResult) -> Result<bool> {
    if b.theta() != 2 {
        return Err(Error::OutOfRange("rank-2 criterion needs θ = 2".into()));
    }
    if ct.gcm().entry(0, 1) == 0 {
        return Err(Error::InvalidInput(
            "rank-2 criterion needs a connected braiding".into(),
        ));
    }
    if !is_symmetric(b) {
        return Err(Error::InvalidInput(
            "rank-2 criterion needs b_12 = b_21".into(),
        ));
    }
    if !b.all_odd_order() {
        return Err(Error::EvenOrder);
    }
    let d = symmetrizer(ct.gcm()).expect("rank 2 connected is always symmetrizable");
    let n1 = ct.diagonal_orders()[0];
    let n2 = ct.diagonal_orders()[1];
    let r = lcm_u64(d[0] * n1, d[1] * n2);
    let e1 = r / (d[0] * n1);
    let e2 = r / (d[1] * n2);
    let s = r / (d[0] * d[1]);
    // ξ = 1/r, so ξ^{e_i·d_i} has order N_i and k_i is the numerator of b_ii.
    let k1 = b.entry(0, 0).numerator();
    let k2 = b.entry(1, 1).numerator();
    let lhs = (e1 as u128 * k1 as u128) % s as u128;
    let rhs = (e2 as u128 * k2 as u128) % s as u128;
    Ok(lhs == rhs)
}

/// The symmetric 2×2 braiding attached to the pair `{i, j}`: for symmetric
/// input the plain submatrix; otherwise the off-diagonal entry is the unique
/// odd-order square root of `b_ij·b_ji`, which is what the symmetrization
/// twist produces on that pair (the diagonal and the products are twisting
/// invariants).
fn symmetric_pair(b: &BraidingMatrix, i: usize, j: usize) -> Result<BraidingMatrix> {
    let off = if b.entry(i, j) == b.entry(j, i) {
        b.entry(i, j)
    } else {
        (b.entry(i, j) * b.entry(j, i))
            .odd_sqrt()
            .ok_or(Error::EvenOrder)?
    };
    BraidingMatrix::new(vec![vec![b.entry(i, i), off], vec![off, b.entry(j, j)]])
}

/// Whether every principal 2×2 submatrix is of FL-type (after passing to its
/// symmetrized form when the pair is not symmetric). Entries must have odd
/// order.
pub fn is_locally_fl(b: &BraidingMatrix, ct: &CartanTypeResult) -> Result<bool> {
    if !b.all_odd_order() {
        return Err(Error::EvenOrder);
    }
    let n = b.theta();
    for i in 0..n {
        for j in i + 1..n {
            let pair = symmetric_pair(b, i, j)?;
            let pair_ct = cartan_type(&pair).expect("pair of a Cartan-type braiding");
            debug_assert_eq!(pair_ct.gcm().entry(0, 1), ct.gcm().entry(i, j));
            debug_assert_eq!(pair_ct.gcm().entry(1, 0), ct.gcm().entry(j, i));
            if !fl_witness(&pair, &pair_ct)?.is_witness() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::SplitMix64;

    fn r(num: i64, den: u64) -> RootOfUnity {
        RootOfUnity::new(num, den)
    }

    /// A rank-3 braiding that is locally of FL-type but whose Cartan
    /// matrix is not symmetrizable: b_ij = q^{d_i·a_ij} with q of order 5
    /// and d = (1,2,3), giving exponents [[2,2,2],[2,4,4],[2,4,1]].
    pub(crate) fn nonsymmetrizable_rank3() -> BraidingMatrix {
        BraidingMatrix::from_exponents(5, &[vec![2, 2, 2], vec![2, 4, 4], vec![2, 4, 1]]).unwrap()
    }

    /// A symmetrizable rank-2 braiding of square order that admits no FL
    /// witness: N1 = N2 = 9, a12 = a21 = −3, diagonal exponents 1 and 4,
    /// with the odd square root in the corner.
    pub(crate) fn square_order_non_fl() -> BraidingMatrix {
        let q = r(1, 9);
        let off = q.pow(-3).odd_sqrt().unwrap();
        assert_eq!(off, r(1, 3));
        BraidingMatrix::new(vec![vec![q, off], vec![off, q.pow(4)]]).unwrap()
    }

    #[test]
    fn rank_one_cartan() {
        let b = BraidingMatrix::new(vec![vec![r(1, 3)]]).unwrap();
        let ct = cartan_type(&b).unwrap();
        assert_eq!(ct.gcm().rows(), &[vec![2]]);
        assert_eq!(ct.diagonal_orders(), &[3]);
    }

    #[test]
    fn nonsymmetrizable_rank3_cartan_matrix() {
        let ct = cartan_type(&nonsymmetrizable_rank3()).unwrap();
        assert_eq!(
            ct.gcm().rows(),
            &[vec![2, -3, -3], vec![-4, 2, -3], vec![-1, -2, 2]]
        );
        assert_eq!(ct.diagonal_orders(), &[5, 5, 5]);
    }

    #[test]
    fn cartan_type_absent_and_exponent_normalization() {
        // unit product: a_12 = 0
        let b = BraidingMatrix::new(vec![vec![r(1, 3), r(1, 2)], vec![r(1, 2), r(1, 3)]]).unwrap();
        let ct = cartan_type(&b).unwrap();
        assert_eq!(ct.gcm().entry(0, 1), 0);

        // product 2/3 = (1/3)^{-1}: the unique exponent in (−3, 0] is −1
        let b = BraidingMatrix::new(vec![vec![r(1, 3), r(1, 2)], vec![r(1, 6), r(1, 3)]]).unwrap();
        let ct = cartan_type(&b).unwrap();
        assert_eq!(ct.gcm().entry(0, 1), -1);

        // product 1/2 is not a power of 1/3
        let b = BraidingMatrix::new(vec![vec![r(1, 3), r(1, 2)], vec![r(0, 1), r(1, 3)]]).unwrap();
        assert!(cartan_type(&b).is_none());

        // diagonal 1 disqualifies
        let b = BraidingMatrix::new(vec![vec![r(0, 1)]]).unwrap();
        assert!(cartan_type(&b).is_none());
    }

    #[test]
    fn components_split_and_join() {
        let plane =
            BraidingMatrix::new(vec![vec![r(1, 3), r(1, 3)], vec![r(2, 3), r(1, 3)]]).unwrap();
        assert_eq!(connected_components(&plane), vec![vec![0], vec![1]]);

        let joined =
            BraidingMatrix::new(vec![vec![r(1, 3), r(1, 3)], vec![r(1, 3), r(1, 3)]]).unwrap();
        assert_eq!(connected_components(&joined), vec![vec![0, 1]]);
    }

    #[test]
    fn symmetry_check() {
        let diag =
            BraidingMatrix::new(vec![vec![r(1, 3), r(0, 1)], vec![r(0, 1), r(1, 5)]]).unwrap();
        assert!(is_symmetric(&diag));
        // the asymmetric A2 family member at p = 7
        let a2 = BraidingMatrix::from_exponents(7, &[vec![1, 4], vec![2, 1]]).unwrap();
        assert!(!is_symmetric(&a2));
    }

    #[test]
    fn fl_witness_g2_example() {
        // b = (q^{d_i a_ij}) for d = (1,3), a = [[2,-3],[-1,2]], q = 1/7
        let b = BraidingMatrix::from_exponents(7, &[vec![2, 4], vec![4, 6]]).unwrap();
        let ct = cartan_type(&b).unwrap();
        assert_eq!(ct.gcm().rows(), &[vec![2, -3], vec![-1, 2]]);
        match fl_witness(&b, &ct).unwrap() {
            FlVerdict::Witness(w) => {
                assert_eq!(w.d, vec![1, 3]);
                assert_eq!(w.q, r(1, 7));
            }
            other => panic!("expected witness, got {other:?}"),
        }
    }

    #[test]
    fn fl_witness_absent_for_square_orders() {
        let b = square_order_non_fl();
        let ct = cartan_type(&b).unwrap();
        assert_eq!(ct.gcm().rows(), &[vec![2, -3], vec![-3, 2]]);
        assert_eq!(fl_witness(&b, &ct).unwrap(), FlVerdict::NoWitness);
        assert!(!fl_rank2_criterion(&b, &ct).unwrap());
    }

    #[test]
    fn fl_witness_not_symmetrizable_is_distinct() {
        let b = nonsymmetrizable_rank3();
        let ct = cartan_type(&b).unwrap();
        assert_eq!(fl_witness(&b, &ct).unwrap(), FlVerdict::NotSymmetrizable);
    }

    #[test]
    fn fl_witness_rejects_even_orders() {
        let b = BraidingMatrix::new(vec![vec![r(1, 6), r(0, 1)], vec![r(0, 1), r(1, 3)]]).unwrap();
        let ct = cartan_type(&b).unwrap();
        assert_eq!(fl_witness(&b, &ct), Err(Error::EvenOrder));
    }

    #[test]
    fn fl_witness_disconnected_pair() {
        // Disconnected with literal 1 off-diagonal: witness exists with
        // rescaled component multipliers.
        let b = BraidingMatrix::new(vec![vec![r(1, 9), r(0, 1)], vec![r(0, 1), r(1, 3)]]).unwrap();
        let ct = cartan_type(&b).unwrap();
        let verdict = fl_witness(&b, &ct).unwrap();
        assert!(verdict.is_witness(), "got {verdict:?}");

        // Disconnected with nontrivial entries of product 1: never FL.
        let b2 = BraidingMatrix::new(vec![vec![r(1, 9), r(1, 3)], vec![r(2, 3), r(1, 3)]]).unwrap();
        let ct2 = cartan_type(&b2).unwrap();
        assert_eq!(fl_witness(&b2, &ct2).unwrap(), FlVerdict::NoWitness);
    }

    #[test]
    fn rank2_criterion_trivial_cases() {
        // d1 = d2 = 1 with equal diagonals: k1 = k2
        let b = BraidingMatrix::from_exponents(3, &[vec![1, 1], vec![1, 1]]).unwrap();
        let ct = cartan_type(&b).unwrap();
        assert!(fl_rank2_criterion(&b, &ct).unwrap());
        assert!(fl_witness(&b, &ct).unwrap().is_witness());
    }

    #[test]
    fn rank2_criterion_matches_witness_search() {
        // exhaustive over symmetric connected rank-2 Cartan braidings with
        // diagonal orders in {3, 5, 9}
        let orders = [3u64, 5, 9];
        let mut checked = 0u32;
        for &n1 in &orders {
            for &n2 in &orders {
                let l = lcm_u64(n1, n2);
                for m1 in 1..n1 {
                    if gcd_u64(m1, n1) != 1 {
                        continue;
                    }
                    for m2 in 1..n2 {
                        if gcd_u64(m2, n2) != 1 {
                            continue;
                        }
                        for t in 0..l {
                            let b = BraidingMatrix::new(vec![
                                vec![r(m1 as i64, n1), r(t as i64, l)],
                                vec![r(t as i64, l), r(m2 as i64, n2)],
                            ])
                            .unwrap();
                            let Some(ct) = cartan_type(&b) else { continue };
                            if ct.gcm().entry(0, 1) == 0 || !b.all_odd_order() {
                                continue;
                            }
                            let criterion = fl_rank2_criterion(&b, &ct).unwrap();
                            let witness = fl_witness(&b, &ct).unwrap().is_witness();
                            assert_eq!(criterion, witness, "disagree on {b:?}");
                            checked += 1;
                        }
                    }
                }
            }
        }
        assert!(checked > 100, "enumeration too small: {checked}");
    }

    #[test]
    fn single_arrow_with_odd_back_arrow_is_fl() {
        // a_12 = −1 with a_21 odd forces FL-type.
        let orders = [3u64, 5, 7, 9];
        let mut hit = 0u32;
        for &m in &orders {
            for s_num in 1..m {
                if gcd_u64(s_num, m) != 1 {
                    continue;
                }
                let s = r(s_num as i64, m);
                let b11 = s.pow(-2);
                for &m2 in &orders {
                    for x_num in 1..m2 {
                        if gcd_u64(x_num, m2) != 1 {
                            continue;
                        }
                        let x = r(x_num as i64, m2);
                        let b = BraidingMatrix::new(vec![vec![b11, s], vec![s, x]]).unwrap();
                        let Some(ct) = cartan_type(&b) else { continue };
                        if ct.gcm().entry(0, 1) != -1 {
                            continue;
                        }
                        if ct.gcm().entry(1, 0).rem_euclid(2) == 0 {
                            continue;
                        }
                        assert!(
                            fl_witness(&b, &ct).unwrap().is_witness(),
                            "a_12 = −1 with odd a_21 must be FL: {b:?} gcm {:?}",
                            ct.gcm().rows()
                        );
                        hit += 1;
                    }
                }
            }
        }
        assert!(hit > 20, "too few odd-shape instances: {hit}");
    }

    #[test]
    fn locally_fl_nonsymmetrizable_rank3() {
        let b = nonsymmetrizable_rank3();
        let ct = cartan_type(&b).unwrap();
        assert!(is_locally_fl(&b, &ct).unwrap());
    }

    #[test]
    fn locally_fl_fails_with_embedded_bad_block() {
        // the square-order non-FL block extended by a disconnected index
        let bad = square_order_non_fl();
        let one = r(0, 1);
        let b = BraidingMatrix::new(vec![
            vec![bad.entry(0, 0), bad.entry(0, 1), one],
            vec![bad.entry(1, 0), bad.entry(1, 1), one],
            vec![one, one, r(1, 3)],
        ])
        .unwrap();
        let ct = cartan_type(&b).unwrap();
        assert!(!is_locally_fl(&b, &ct).unwrap());
    }

    #[test]
    fn global_witness_restricts_to_pairs() {
        // any FL-type braiding is locally FL
        let b = BraidingMatrix::from_exponents(7, &[vec![2, 4], vec![4, 6]]).unwrap();
        let ct = cartan_type(&b).unwrap();
        assert!(fl_witness(&b, &ct).unwrap().is_witness());
        assert!(is_locally_fl(&b, &ct).unwrap());
    }

    /// Relative primeness forces FL-type and equal diagonal orders
    /// (randomized over symmetric connected Cartan braidings of odd order).
    #[test]
    fn relative_primeness_implies_fl() {
        let mut rng = SplitMix64::new(23);
        let levels = [3u64, 5, 7, 9, 15];
        let mut accepted = 0;
        let mut attempts = 0;
        while accepted < 50 && attempts < 200_000 {
            attempts += 1;
            let e = levels[rng.below(levels.len() as u64) as usize];
            let n = 2 + rng.below(2) as usize;
            let mut exps = vec![vec![0i64; n]; n];
            for i in 0..n {
                exps[i][i] = 1 + rng.below(e - 1) as i64;
                for j in 0..i {
                    let v = rng.below(e) as i64;
                    exps[i][j] = v;
                    exps[j][i] = v;
                }
            }
            let b = BraidingMatrix::from_exponents(e, &exps).unwrap();
            let Some(ct) = cartan_type(&b) else { continue };
            if connected_components(&b).len() != 1 {
                continue;
            }
            if symmetrizer(ct.gcm()).is_none() {
                continue;
            }
            let relatively_prime = (0..n).all(|i| {
                (0..n).all(|j| {
                    let a = ct.gcm().entry(i, j);
                    i == j || a == 0 || gcd_u64(a.unsigned_abs(), ct.diagonal_orders()[i]) == 1
                })
            });
            if !relatively_prime {
                continue;
            }
            accepted += 1;
            assert!(
                fl_witness(&b, &ct).unwrap().is_witness(),
                "relative primeness should force FL: {b:?}"
            );
            // with some a_ij ≠ 0, all diagonal orders coincide
            if (0..n).any(|i| (0..n).any(|j| i != j && ct.gcm().entry(i, j) != 0)) {
                let first = ct.diagonal_orders()[0];
                assert!(ct.diagonal_orders().iter().all(|&o| o == first));
            }
        }
        assert_eq!(accepted, 50, "generator starved after {attempts} attempts");
    }
}
