//! Drinfeld twisting at the level of exponent matrices.
//!
//! Over a finite abelian group `Γ = ⊕⟨y(ℓ)⟩` with invariant factors
//! `E_1 | E_2 | … | E_M`, characters and group elements are exponent vectors
//! and every braiding entry is a power of one fixed root `q` of order `E_M`.
//! A 2-cocycle is encoded by a strictly upper-triangular integer matrix
//! `c_ij ∈ [0, E_i)`; twisting by its cocycle transforms the exponent matrix
//! `α` while fixing the diagonal and all sums `α_ij + α_ji`. The
//! symmetrization construction solves for a cocycle that makes the twisted
//! matrix symmetric, which is possible whenever all entry orders are odd.
//!
//! Throughout, `b_ij = ⟨χ(j), g(i)⟩`: the pairing takes the character of the
//! second index against the group element of the first.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{lcm_u64, mod_inverse, smallest_prime_factor, SplitMix64};
use crate::braiding::{cartan_type, BraidingMatrix};
use crate::cyclotomic::RootOfUnity;
use crate::{Error, Result};

/// A finite abelian group presented by invariant factors
/// `E_1 | E_2 | … | E_M`, each at least 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupData {
    factors: Vec<u64>,
}

impl GroupData {
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidInput(
                "group needs at least one factor".into(),
            ));
        }
        for w in factors.windows(2) {
            if w[1] % w[0] != 0 {
                return Err(Error::InvalidInput(
                    "invariant factors must form a divisibility chain".into(),
                ));
            }
        }
        if factors.iter().any(|&e| e < 2) {
            return Err(Error::InvalidInput("invariant factors must be ≥ 2".into()));
        }
        Ok(GroupData { factors })
    }

    /// Cyclic group of order `n`.
    pub fn cyclic(n: u64) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// The exponent `E_M` of the group.
    pub fn exponent(&self) -> u64 {
        *self.factors.last().unwrap()
    }

    /// `D_ℓ = E_M / E_ℓ`, so that `q_ℓ = q^{D_ℓ}` has order `E_ℓ`.
    pub fn cofactor(&self, l: usize) -> u64 {
        self.exponent() / self.factors[l]
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    fn check_len(&self, v: &[i64]) -> Result<()> {
        if v.len() != self.rank() {
            return Err(Error::LengthMismatch {
                expected: self.rank(),
                got: v.len(),
            });
        }
        Ok(())
    }

    /// `⟨χ, g⟩ = q^{Σ_h D_h·χ_h·g_h}` for a character and a group element in
    /// exponent coordinates.
    pub fn pairing(&self, chi: &[i64], g: &[i64]) -> Result<RootOfUnity> {
        self.check_len(chi)?;
        self.check_len(g)?;
        let e = self.exponent();
        let mut acc: i128 = 0;
        for h in 0..self.rank() {
            let term = self.cofactor(h) as i128 * chi[h] as i128 % e as i128 * g[h] as i128;
            acc = (acc + term).rem_euclid(e as i128);
        }
        Ok(RootOfUnity::new(acc as i64, e))
    }

    /// Normalizes an exponent vector componentwise into `[0, E_h)`.
    pub fn reduce_vector(&self, v: &[i64]) -> Result<Vec<i64>> {
        self.check_len(v)?;
        Ok(v.iter()
            .zip(&self.factors)
            .map(|(&x, &e)| x.rem_euclid(e as i64))
            .collect())
    }

    /// All characters as exponent vectors, in lexicographic order.
    pub fn characters(&self) -> impl Iterator<Item = Vec<i64>> + '_ {
        let total: u64 = self.order();
        (0..total).map(move |mut k| {
            let mut v = Vec::with_capacity(self.rank());
            for &e in &self.factors {
                v.push((k % e) as i64);
                k /= e;
            }
            v
        })
    }
}

/// A 2-cocycle datum: strictly upper-triangular integers `0 ≤ c_ij < E_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocycleData {
    group: GroupData,
    c: Vec<Vec<u64>>,
}

impl CocycleData {
    pub fn new(group: GroupData, c: Vec<Vec<u64>>) -> Result<Self> {
        let m = group.rank();
        if c.len() != m || c.iter().any(|row| row.len() != m) {
            return Err(Error::InvalidInput("cocycle matrix must be M×M".into()));
        }
        for i in 0..m {
            for j in 0..m {
                if j <= i && c[i][j] != 0 {
                    return Err(Error::InvalidInput(
                        "cocycle matrix must be strictly upper triangular".into(),
                    ));
                }
                if j > i && c[i][j] >= group.factors()[i] {
                    return Err(Error::InvalidInput("cocycle entry out of range".into()));
                }
            }
        }
        Ok(CocycleData { group, c })
    }

    pub fn trivial(group: GroupData) -> Self {
        let m = group.rank();
        CocycleData {
            group,
            c: vec![vec![0; m]; m],
        }
    }

    pub fn group(&self) -> &GroupData {
        &self.group
    }

    pub fn entries(&self) -> &[Vec<u64>] {
        &self.c
    }
}

/// `ω(τ, χ) = q^{Σ_{i<j} D_i·c_ij·τ_j·χ_i}`.
pub fn omega(c: &CocycleData, tau: &[i64], chi: &[i64]) -> Result<RootOfUnity> {
    let group = &c.group;
    group.check_len(tau)?;
    group.check_len(chi)?;
    let e = group.exponent();
    let mut acc: i128 = 0;
    for i in 0..group.rank() {
        for j in i + 1..group.rank() {
            let term = group.cofactor(i) as i128 * c.c[i][j] as i128 % e as i128 * tau[j] as i128
                % e as i128
                * chi[i] as i128;
            acc = (acc + term).rem_euclid(e as i128);
        }
    }
    Ok(RootOfUnity::new(acc as i64, e))
}

/// Verifies the cocycle identity and its skew consequence for an arbitrary
/// bicharacter-like map on at most `max_triples` character triples
/// (exhaustive when the group is small enough).
pub fn cocycle_identities_hold<F>(group: &GroupData, omega_fn: F, max_triples: usize) -> bool
where
    F: Fn(&[i64], &[i64]) -> RootOfUnity,
{
    let chars: Vec<Vec<i64>> = group.characters().collect();
    let unit = vec![0i64; group.rank()];
    if !omega_fn(&unit, &unit).is_one() {
        return false;
    }
    let total = chars.len().saturating_pow(3);
    let mut triples: Vec<(usize, usize, usize)> = Vec::new();
    if total <= max_triples {
        for a in 0..chars.len() {
            for b in 0..chars.len() {
                for c in 0..chars.len() {
                    triples.push((a, b, c));
                }
            }
        }
    } else {
        let mut rng = SplitMix64::new(0x5eed);
        for _ in 0..max_triples {
            triples.push((
                rng.below(chars.len() as u64) as usize,
                rng.below(chars.len() as u64) as usize,
                rng.below(chars.len() as u64) as usize,
            ));
        }
    }
    let mul = |a: &[i64], b: &[i64]| -> Vec<i64> {
        group
            .reduce_vector(&a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>())
            .unwrap()
    };
    for &(ai, bi, ci) in &triples {
        let (tau, zeta, eta) = (&chars[ai], &chars[bi], &chars[ci]);
        // normalization ω(τ,1) = ω(1,τ) = 1
        if !omega_fn(tau, &unit).is_one() || !omega_fn(&unit, tau).is_one() {
            return false;
        }
        // ω(τ,ζ)·ω(τζ,η) = ω(τ,ζη)·ω(ζ,η)
        let lhs = omega_fn(tau, zeta) * omega_fn(&mul(tau, zeta), eta);
        let rhs = omega_fn(tau, &mul(zeta, eta)) * omega_fn(zeta, eta);
        if lhs != rhs {
            return false;
        }
        // skew form: the commutator-like ratio is multiplicative in the
        // first argument
        let skew = |a: &[i64], b: &[i64]| omega_fn(a, b) * omega_fn(b, a).inverse();
        if skew(&mul(tau, zeta), eta) != skew(tau, eta) * skew(zeta, eta) {
            return false;
        }
    }
    true
}

/// Checks the identities for the cocycle attached to `c`.
pub fn cocycle_identity_check(c: &CocycleData, max_triples: usize) -> bool {
    cocycle_identities_hold(&c.group, |t, x| omega(c, t, x).unwrap(), max_triples)
}

/// A braiding presented over a group: exponent vectors for the `g(i)` and
/// `χ(j)`, plus the derived matrix `α` with `b_ij = q^{α_ij}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentMatrix {
    group: GroupData,
    alpha: Vec<Vec<u64>>,
    chi: Vec<Vec<i64>>,
    g: Vec<Vec<i64>>,
}

impl ExponentMatrix {
    /// `α` is always derived from the realization, never supplied.
    pub fn new(group: GroupData, chi: Vec<Vec<i64>>, g: Vec<Vec<i64>>) -> Result<Self> {
        if chi.len() != g.len() || chi.is_empty() {
            return Err(Error::InvalidInput(
                "need equally many characters and group elements".into(),
            ));
        }
        let chi: Vec<Vec<i64>> = chi
            .iter()
            .map(|v| group.reduce_vector(v))
            .collect::<Result<_>>()?;
        let g: Vec<Vec<i64>> = g
            .iter()
            .map(|v| group.reduce_vector(v))
            .collect::<Result<_>>()?;
        let theta = chi.len();
        let e = group.exponent();
        let mut alpha = vec![vec![0u64; theta]; theta];
        for i in 0..theta {
            for j in 0..theta {
                let b = group.pairing(&chi[j], &g[i])?;
                alpha[i][j] = b.numerator() * (e / b.order());
            }
        }
        Ok(ExponentMatrix {
            group,
            alpha,
            chi,
            g,
        })
    }

    pub fn theta(&self) -> usize {
        self.chi.len()
    }

    pub fn group(&self) -> &GroupData {
        &self.group
    }

    pub fn alpha(&self) -> &[Vec<u64>] {
        &self.alpha
    }

    pub fn chi(&self) -> &[Vec<i64>] {
        &self.chi
    }

    pub fn g_vectors(&self) -> &[Vec<i64>] {
        &self.g
    }

    /// The braiding `b_ij = q^{α_ij}` with `q` of order `E_M`.
    pub fn braiding(&self) -> BraidingMatrix {
        let e = self.group.exponent();
        BraidingMatrix::new(
            self.alpha
                .iter()
                .map(|row| row.iter().map(|&a| RootOfUnity::new(a as i64, e)).collect())
                .collect(),
        )
        .expect("θ ≥ 1")
    }
}

/// Twists the realization by the cocycle: `χ` is unchanged and each `g(i)`
/// is replaced by its twisted group-like
/// `ψ(g(i))_h = Σ_{t<h} (E_h/E_t)·c_th·χ(i)_t + g(i)_h − Σ_{h<u} c_hu·χ(i)_u`.
pub fn twist_exponents(m: &ExponentMatrix, c: &CocycleData) -> Result<ExponentMatrix> {
    if c.group != m.group {
        return Err(Error::InvalidInput(
            "cocycle group differs from realization".into(),
        ));
    }
    let rank = m.group.rank();
    let mut new_g = Vec::with_capacity(m.theta());
    for i in 0..m.theta() {
        let chi_i = &m.chi[i];
        let mut v = Vec::with_capacity(rank);
        for h in 0..rank {
            let e_h = m.group.factors()[h] as i128;
            let mut acc = m.g[i][h] as i128;
            for t in 0..h {
                let ratio = (m.group.factors()[h] / m.group.factors()[t]) as i128;
                acc += ratio * c.c[t][h] as i128 % e_h * chi_i[t] as i128;
            }
            for u in h + 1..rank {
                acc -= c.c[h][u] as i128 * chi_i[u] as i128;
            }
            v.push(acc.rem_euclid(e_h) as i64);
        }
        new_g.push(v);
    }
    ExponentMatrix::new(m.group.clone(), m.chi.clone(), new_g)
}

/// Realizes an arbitrary braiding over a finite abelian group: `Γ` has one
/// cyclic factor per index with `E_j` the lcm of the entry orders in the
/// first j columns, `χ(j)` is the j-th coordinate character, and `g(i)` is
/// solved from `b_ij = q_j^{g(i)_j}`.
pub fn realize_over_group(b: &BraidingMatrix) -> Result<ExponentMatrix> {
    let n = b.theta();
    let mut raw = Vec::with_capacity(n);
    let mut acc = 1u64;
    for j in 0..n {
        for i in 0..n {
            acc = lcm_u64(acc, b.entry(i, j).order());
        }
        raw.push(acc);
    }
    let total = *raw.last().unwrap();
    if total == 1 {
        return Err(Error::InvalidInput(
            "trivial braiding admits no faithful group realization".into(),
        ));
    }
    // Columns of all-unit entries would produce trivial invariant factors;
    // pad them with the smallest prime dividing the first nontrivial factor.
    let pad = smallest_prime_factor(*raw.iter().find(|&&e| e > 1).unwrap());
    let factors: Vec<u64> = raw.iter().map(|&e| if e > 1 { e } else { pad }).collect();
    let group = GroupData::new(factors.clone())?;
    let chi: Vec<Vec<i64>> = (0..n)
        .map(|j| {
            let mut v = vec![0i64; n];
            v[j] = 1;
            v
        })
        .collect();
    let g: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let e = b.entry(i, j);
                    (e.numerator() * (factors[j] / e.order())) as i64
                })
                .collect()
        })
        .collect();
    let m = ExponentMatrix::new(group, chi, g)?;
    debug_assert_eq!(m.braiding(), *b, "realization must reproduce the braiding");
    Ok(m)
}

/// Symmetrization by twisting: a realization of `b` and a cocycle whose
/// twist makes the exponent matrix symmetric while preserving the diagonal
/// and the Cartan matrix.
///
/// Requires Cartan type and odd entry orders (the construction divides by 2
/// modulo the odd invariant factors).
pub fn symmetrize(b: &BraidingMatrix) -> Result<(ExponentMatrix, CocycleData)> {
    if !b.all_odd_order() {
        return Err(Error::EvenOrder);
    }
    let ct = cartan_type(b).ok_or(Error::NotCartanType)?;
    let m = realize_over_group(b)?;
    let rank = m.group.rank();
    let mut c = vec![vec![0u64; rank]; rank];
    for i in 0..rank {
        let e_i = m.group.factors()[i];
        let inv2 = mod_inverse(2, e_i).expect("odd invariant factor") as i128;
        for j in i + 1..rank {
            // Solve 2·c_ij ≡ 2·g(j)_i − a_ij·g(i)_i (mod E_i).
            let tilde = (2 * m.g[j][i] as i128 - ct.gcm().entry(i, j) as i128 * m.g[i][i] as i128)
                .rem_euclid(e_i as i128);
            c[i][j] = (inv2 * tilde).rem_euclid(e_i as i128) as u64;
        }
    }
    let cocycle = CocycleData::new(m.group.clone(), c)?;
    Ok((m, cocycle))
}
