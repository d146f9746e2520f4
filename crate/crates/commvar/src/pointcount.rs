//! Exhaustive point counting over small prime fields: an independent
//! enumeration oracle for dimensions. Counts are exact; the slope of
//! log count against log q is compared against the expected dimension
//! with a generous tolerance, since low-order terms and component
//! multiplicities perturb small-field counts.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::lie::{span_basis, LieError, MixedSpec, SquareMatrix, VarietyKind, VarietySpec};
use crate::ring::{Coeff, CoefficientField};

#[derive(Debug, Error)]
pub enum CountError {
    #[error("q = {0} is not prime")]
    NotPrime(u64),
    #[error("estimated work {estimate} exceeds budget {budget}; refusing to start")]
    Budget { estimate: u128, budget: u128 },
    #[error("enumeration passed the work budget {0} mid-run")]
    BudgetMidRun(u128),
    #[error("point counting supports matrix size 3 for nonlinear loci, got {0}")]
    UnsupportedSize(usize),
    #[error(transparent)]
    Lie(#[from] LieError),
}

#[derive(Clone, Debug)]
pub struct CountConfig {
    /// Upper bound on enumerated candidate points across the whole run.
    pub work_budget: u128,
}

impl Default for CountConfig {
    fn default() -> Self {
        CountConfig {
            work_budget: 500_000_000,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CountResult {
    pub spec: MixedSpec,
    pub q: u64,
    pub count: u128,
    pub wall_time: Duration,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_inv(a: u64, q: u64) -> u64 {
    // Fermat: a^(q-2) mod q
    let mut base = a % q;
    let mut exp = q - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % q as u128) as u64;
        }
        base = (base as u128 * base as u128 % q as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Kernel basis of a rows x cols matrix over F_q, one vector per free
/// column, in column order.
fn kernel_mod_q(mut rows: Vec<Vec<u64>>, cols: usize, q: u64) -> Vec<Vec<u64>> {
    let mut pivot_cols = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        let mut pivot = None;
        for i in r..rows.len() {
            if rows[i][c] != 0 {
                pivot = Some(i);
                break;
            }
        }
        let Some(p) = pivot else { continue };
        rows.swap(r, p);
        let inv = mod_inv(rows[r][c], q);
        for x in rows[r].iter_mut() {
            *x = (*x as u128 * inv as u128 % q as u128) as u64;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for k in 0..cols {
                    let sub = (rows[r][k] as u128 * f as u128 % q as u128) as u64;
                    rows[i][k] = (rows[i][k] + q - sub) % q;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for (ri, &pc) in pivot_cols.iter().enumerate() {
            let coeff = rows[ri][free];
            if coeff != 0 {
                v[pc] = q - coeff;
            }
        }
        basis.push(v);
    }
    basis
}

fn mat_mul(n: usize, a: &[u64], b: &[u64], q: u64) -> Vec<u64> {
    let mut out = vec![0u64; n * n];
    for r in 0..n {
        for k in 0..n {
            let av = a[r * n + k];
            if av == 0 {
                continue;
            }
            for c in 0..n {
                out[r * n + c] = ((out[r * n + c] as u128
                    + av as u128 * b[k * n + c] as u128)
                    % q as u128) as u64;
            }
        }
    }
    out
}

fn commutator_flat(n: usize, a: &[u64], b: &[u64], q: u64) -> Vec<u64> {
    let ab = mat_mul(n, a, b, q);
    let ba = mat_mul(n, b, a, q);
    ab.iter().zip(&ba).map(|(x, y)| (x + q - y) % q).collect()
}

fn trace_flat(n: usize, a: &[u64], q: u64) -> u64 {
    (0..n).fold(0u64, |acc, i| (acc + a[i * n + i]) % q)
}

fn char2_flat(n: usize, a: &[u64], q: u64) -> u64 {
    let mut acc = 0u128;
    let qq = q as u128;
    for i in 0..n {
        for j in (i + 1)..n {
            let d = a[i * n + i] as u128 * a[j * n + j] as u128 % qq;
            let o = a[i * n + j] as u128 * a[j * n + i] as u128 % qq;
            acc = (acc + d + qq - o) % qq;
        }
    }
    (acc % qq) as u64
}

fn det3_flat(a: &[u64], q: u64) -> u64 {
    let qq = q as u128;
    let m = |r: usize, c: usize| a[r * 3 + c] as u128;
    let pos = (m(0, 0) * m(1, 1) % qq * m(2, 2)
        + m(0, 1) * m(1, 2) % qq * m(2, 0)
        + m(0, 2) * m(1, 0) % qq * m(2, 1))
        % qq;
    let neg = (m(0, 2) * m(1, 1) % qq * m(2, 0)
        + m(0, 0) * m(1, 2) % qq * m(2, 1)
        + m(0, 1) * m(1, 0) % qq * m(2, 2))
        % qq;
    ((pos + qq - neg) % qq) as u64
}

/// A locus over F_q: a linear span of flattened matrices plus an optional
/// nonlinear cut, possibly conjugated by a permutation matrix.
struct Locus {
    n: usize,
    basis: Vec<Vec<u64>>,
    filter: Option<VarietyKind>,
    dim_hint: i64,
}

fn permutation_conjugate(n: usize, flat: &[u64], perm: &[usize]) -> Vec<u64> {
    // (P X P^-1)_{rc} = X_{perm[r], perm[c]}
    let mut out = vec![0u64; n * n];
    for r in 0..n {
        for c in 0..n {
            out[r * n + c] = flat[perm[r] * n + perm[c]];
        }
    }
    out
}

fn permutation_unconjugate(n: usize, flat: &[u64], perm: &[usize]) -> Vec<u64> {
    let mut out = vec![0u64; n * n];
    for r in 0..n {
        for c in 0..n {
            out[perm[r] * n + perm[c]] = flat[r * n + c];
        }
    }
    out
}

fn coeff_to_u64(c: &Coeff) -> u64 {
    match c {
        Coeff::Fp(v) => *v,
        Coeff::Rat(_) => unreachable!("prime-field coefficients expected"),
    }
}

fn linear_span_u64(spec: &VarietySpec, q: u64) -> Result<Vec<Vec<u64>>, CountError> {
    let field = CoefficientField::prime(q).map_err(|_| CountError::NotPrime(q))?;
    let basis = span_basis(spec, &field)?
        .expect("caller ensures a linear kind");
    Ok(basis
        .into_iter()
        .map(|v| v.iter().map(coeff_to_u64).collect())
        .collect())
}

fn build_locus(
    spec: &VarietySpec,
    q: u64,
    perm: Option<&[usize]>,
) -> Result<Locus, CountError> {
    let n = spec.n;
    let (mut basis, filter) = if spec.is_linear() {
        (linear_span_u64(spec, q)?, None)
    } else {
        match spec.kind {
            VarietyKind::NilpotentCone | VarietyKind::SubregClosure => {
                if n != 3 {
                    return Err(CountError::UnsupportedSize(n));
                }
                let ambient = VarietySpec::new(VarietyKind::FullSl, n);
                (linear_span_u64(&ambient, q)?, Some(spec.kind))
            }
            VarietyKind::ZSubCapOsub => {
                if n != 3 {
                    return Err(CountError::UnsupportedSize(n));
                }
                // span of the two planes: entries (2,1), (3,1), (1,3),
                // cut by the product of the last two
                let mut b = Vec::new();
                for idx in [1 * 3, 2 * 3, 0 * 3 + 2] {
                    let mut v = vec![0u64; 9];
                    v[idx] = 1;
                    b.push(v);
                }
                (b, Some(spec.kind))
            }
            _ => unreachable!("linear kinds handled above"),
        }
    };
    if let Some(p) = perm {
        for v in basis.iter_mut() {
            *v = permutation_conjugate(n, v, p);
        }
    }
    Ok(Locus {
        n,
        basis,
        filter,
        dim_hint: spec.dim(),
    })
}

fn passes_filter(locus: &Locus, flat: &[u64], q: u64, perm: Option<&[usize]>) -> bool {
    let Some(kind) = locus.filter else { return true };
    let n = locus.n;
    let rep: Vec<u64>;
    let x = match perm {
        Some(p) => {
            rep = permutation_unconjugate(n, flat, p);
            &rep[..]
        }
        None => flat,
    };
    match kind {
        VarietyKind::NilpotentCone => {
            char2_flat(n, x, q) == 0 && det3_flat(x, q) == 0 && trace_flat(n, x, q) == 0
        }
        VarietyKind::SubregClosure => {
            trace_flat(n, x, q) == 0 && mat_mul(n, x, x, q).iter().all(|&v| v == 0)
        }
        VarietyKind::ZSubCapOsub => (x[2 * 3] as u128 * x[2] as u128) % q as u128 == 0,
        _ => true,
    }
}

/// Raw membership of a scalar matrix in a subvariety over a prime field.
pub fn membership(x: &SquareMatrix, spec: &VarietySpec) -> Result<bool, CountError> {
    let n = x.size();
    if n != spec.n {
        return Err(CountError::UnsupportedSize(n));
    }
    let q = x.ring().field().characteristic();
    if q == 0 || !is_prime(q) {
        return Err(CountError::NotPrime(q));
    }
    let flat: Vec<u64> = x
        .scalar_entries()?
        .iter()
        .map(coeff_to_u64)
        .collect();
    let locus = build_locus(spec, q, None)?;
    if !passes_filter(&locus, &flat, q, None) {
        return Ok(false);
    }
    // span check: solve basis^T c = flat
    let cols = locus.basis.len();
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(n * n);
    for e in 0..(n * n) {
        let mut row: Vec<u64> = locus.basis.iter().map(|b| b[e]).collect();
        row.push(flat[e]);
        rows.push(row);
    }
    // consistent iff no pivot lands in the last column
    let kernel = kernel_mod_q(rows.clone(), cols + 1, q);
    Ok(kernel.iter().any(|v| v[cols] != 0))
}

/// Basis of the sub-span commuting with every matrix in `fixed`.
fn restrict_basis(
    n: usize,
    basis: &[Vec<u64>],
    fixed: &[Vec<u64>],
    q: u64,
) -> Vec<Vec<u64>> {
    let cols = basis.len();
    let mut rows = Vec::with_capacity(fixed.len() * n * n);
    let comms: Vec<Vec<Vec<u64>>> = fixed
        .iter()
        .map(|v| basis.iter().map(|b| commutator_flat(n, b, v, q)).collect())
        .collect();
    for comm in &comms {
        for e in 0..(n * n) {
            let row: Vec<u64> = comm.iter().map(|c| c[e]).collect();
            if row.iter().any(|&v| v != 0) {
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return basis.to_vec();
    }
    kernel_mod_q(rows, cols, q)
        .into_iter()
        .map(|coeffs| {
            let mut flat = vec![0u64; n * n];
            for (c, b) in coeffs.iter().zip(basis) {
                if *c == 0 {
                    continue;
                }
                for (f, bv) in flat.iter_mut().zip(b) {
                    *f = ((*f as u128 + *c as u128 * *bv as u128) % q as u128) as u64;
                }
            }
            flat
        })
        .collect()
}

struct Enumerator<'a> {
    perm: Option<&'a [usize]>,
    q: u64,
    work: u128,
    budget: u128,
}

impl Enumerator<'_> {
    fn count_rec(
        &mut self,
        loci: &[Locus],
        bases: &[Vec<Vec<u64>>],
        fixed: &mut Vec<Vec<u64>>,
    ) -> Result<u128, CountError> {
        let Some(locus) = loci.first() else {
            return Ok(1);
        };
        let basis = if fixed.is_empty() {
            bases[0].clone()
        } else {
            restrict_basis(locus.n, &bases[0], fixed, self.q)
        };
        let d = basis.len();
        let n2 = locus.n * locus.n;
        let mut digits = vec![0u64; d];
        let mut total = 0u128;
        loop {
            self.work += 1;
            if self.work > self.budget {
                return Err(CountError::BudgetMidRun(self.budget));
            }
            let mut flat = vec![0u64; n2];
            for (c, b) in digits.iter().zip(&basis) {
                if *c == 0 {
                    continue;
                }
                for (f, bv) in flat.iter_mut().zip(b) {
                    *f = ((*f as u128 + *c as u128 * *bv as u128) % self.q as u128) as u64;
                }
            }
            if passes_filter(locus, &flat, self.q, self.perm) {
                fixed.push(flat);
                total += self.count_rec(&loci[1..], &bases[1..], fixed)?;
                fixed.pop();
            }
            // odometer
            let mut pos = 0usize;
            loop {
                if pos == d {
                    return Ok(total);
                }
                digits[pos] += 1;
                if digits[pos] < self.q {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
        }
    }
}

fn count_points_impl(
    spec: &MixedSpec,
    q: u64,
    config: &CountConfig,
    perm: Option<&[usize]>,
) -> Result<CountResult, CountError> {
    if !is_prime(q) {
        return Err(CountError::NotPrime(q));
    }
    if let Some(p) = perm {
        assert_eq!(p.len(), spec.n(), "permutation length must match matrix size");
    }
    let mut factors: Vec<VarietySpec> = spec.factors().to_vec();
    // smallest locus outermost; commuting is symmetric so the count is
    // order-independent
    factors.sort_by_key(|f| f.dim());
    let loci: Vec<Locus> = factors
        .iter()
        .map(|f| build_locus(f, q, perm))
        .collect::<Result<_, _>>()?;
    // work estimate: full outer sweep, then generic centralizer cost per
    // later factor, plus the all-zero chain which re-sweeps each locus
    let mut estimate: u128 = 1;
    let mut zero_chain: u128 = 1;
    for (k, locus) in loci.iter().enumerate() {
        let sweep = (q as u128).pow(locus.basis.len() as u32);
        if k == 0 {
            estimate = sweep;
        } else {
            estimate = estimate.saturating_mul((q as u128).pow(locus.dim_hint.min(4) as u32));
            zero_chain = zero_chain.saturating_mul(sweep);
        }
    }
    estimate = estimate.saturating_add(zero_chain);
    if estimate > config.work_budget {
        return Err(CountError::Budget {
            estimate,
            budget: config.work_budget,
        });
    }
    let bases: Vec<Vec<Vec<u64>>> = loci.iter().map(|l| l.basis.clone()).collect();
    let start = Instant::now();
    let mut enumerator = Enumerator {
        perm,
        q,
        work: 0,
        budget: config.work_budget,
    };
    let mut fixed = Vec::new();
    let count = enumerator.count_rec(&loci, &bases, &mut fixed)?;
    Ok(CountResult {
        spec: spec.clone(),
        q,
        count,
        wall_time: start.elapsed(),
    })
}

pub fn count_points(
    spec: &MixedSpec,
    q: u64,
    config: &CountConfig,
) -> Result<CountResult, CountError> {
    count_points_impl(spec, q, config, None)
}

/// Count with every factor's fixed data conjugated by the permutation
/// matrix sending basis vector i to perm[i]; orbit loci are
/// conjugation-invariant, so this must match `count_points`.
pub fn count_points_conjugated(
    spec: &MixedSpec,
    q: u64,
    config: &CountConfig,
    perm: &[usize],
) -> Result<CountResult, CountError> {
    count_points_impl(spec, q, config, Some(perm))
}

/// Least-squares slope of log count against log q.
pub fn dimension_slope(counts: &[(u64, u128)]) -> f64 {
    assert!(counts.len() >= 2, "need at least two primes");
    let pts: Vec<(f64, f64)> = counts
        .iter()
        .map(|&(q, c)| ((q as f64).ln(), (c as f64).ln()))
        .collect();
    let n = pts.len() as f64;
    let sx: f64 = pts.iter().map(|p| p.0).sum();
    let sy: f64 = pts.iter().map(|p| p.1).sum();
    let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{jordan_nilpotent, scalar_ring};

    fn cfg() -> CountConfig {
        CountConfig::default()
    }

    #[test]
    fn linear_space_counts() {
        let spec = MixedSpec::uniform(VarietyKind::FullSl, 3, 1).unwrap();
        assert_eq!(count_points(&spec, 2, &cfg()).unwrap().count, 256);
        let gl = MixedSpec::uniform(VarietyKind::FullGl, 3, 1).unwrap();
        assert_eq!(count_points(&gl, 2, &cfg()).unwrap().count, 512);
        let zsub = MixedSpec::uniform(VarietyKind::ZSub, 3, 1).unwrap();
        assert_eq!(count_points(&zsub, 3, &cfg()).unwrap().count, 81);
    }

    #[test]
    fn nilpotent_count_is_q_to_the_six() {
        let spec = MixedSpec::uniform(VarietyKind::NilpotentCone, 3, 1).unwrap();
        assert_eq!(count_points(&spec, 3, &cfg()).unwrap().count, 729);
        assert_eq!(count_points(&spec, 2, &cfg()).unwrap().count, 64);
    }

    #[test]
    fn membership_examples() {
        let field = CoefficientField::prime(5).unwrap();
        let ring = scalar_ring(field);
        let zero = SquareMatrix::zero(&ring, 3);
        for kind in [
            VarietyKind::FullSl,
            VarietyKind::NilpotentCone,
            VarietyKind::SubregClosure,
            VarietyKind::ZSub,
            VarietyKind::ZSubCapOsub,
        ] {
            assert!(
                membership(&zero, &VarietySpec::new(kind, 3)).unwrap(),
                "zero not in {kind}"
            );
        }
        let reg = jordan_nilpotent(&[3], &ring).unwrap();
        let sub = jordan_nilpotent(&[2, 1], &ring).unwrap();
        let subreg = VarietySpec::new(VarietyKind::SubregClosure, 3);
        assert!(!membership(&reg, &subreg).unwrap());
        assert!(membership(&sub, &subreg).unwrap());
        assert!(membership(&reg, &VarietySpec::new(VarietyKind::NilpotentCone, 3)).unwrap());
    }

    #[test]
    fn slope_of_linear_space_is_exact() {
        let spec = MixedSpec::uniform(VarietyKind::FullSl, 3, 1).unwrap();
        let counts: Vec<(u64, u128)> = [2u64, 3]
            .iter()
            .map(|&q| (q, count_points(&spec, q, &cfg()).unwrap().count))
            .collect();
        let slope = dimension_slope(&counts);
        assert!((slope - 8.0).abs() < 1e-9, "slope {slope}");
    }

    #[test]
    fn centralizer_pair_has_product_structure() {
        // the pair count splits as (rank <= 1 locus of 3 x r matrices) x q^r
        for q in [2u64, 5] {
            let spec = MixedSpec::uniform(VarietyKind::ZSub, 3, 2).unwrap();
            let count = count_points(&spec, q, &cfg()).unwrap().count;
            let mut rank_le_1 = 0u128;
            let total = q.pow(6);
            for code in 0..total {
                let mut m = [[0u64; 2]; 3];
                let mut v = code;
                for r in 0..3 {
                    for c in 0..2 {
                        m[r][c] = v % q;
                        v /= q;
                    }
                }
                let mut ok = true;
                for r1 in 0..3 {
                    for r2 in (r1 + 1)..3 {
                        if (m[r1][0] * m[r2][1]) % q != (m[r1][1] * m[r2][0]) % q {
                            ok = false;
                        }
                    }
                }
                if ok {
                    rank_le_1 += 1;
                }
            }
            if q == 2 {
                assert_eq!(rank_le_1, 22);
            }
            assert_eq!(count, rank_le_1 * (q as u128).pow(2), "q = {q}");
        }
    }

    #[test]
    fn conjugation_invariance() {
        let spec = MixedSpec::new(vec![
            VarietySpec::new(VarietyKind::SubregClosure, 3),
            VarietySpec::new(VarietyKind::ZSub, 3),
        ])
        .unwrap();
        let plain = count_points(&spec, 3, &cfg()).unwrap().count;
        let twisted = count_points_conjugated(&spec, 3, &cfg(), &[2, 0, 1])
            .unwrap()
            .count;
        assert_eq!(plain, twisted);
    }

    #[test]
    fn zero_factor_lower_bound() {
        let pair = MixedSpec::uniform(VarietyKind::NilpotentCone, 3, 2).unwrap();
        let single = MixedSpec::uniform(VarietyKind::NilpotentCone, 3, 1).unwrap();
        let q = 3;
        assert!(
            count_points(&pair, q, &cfg()).unwrap().count
                >= count_points(&single, q, &cfg()).unwrap().count
        );
    }

    #[test]
    fn budget_refusal_is_loud() {
        let spec = MixedSpec::uniform(VarietyKind::FullSl, 3, 3).unwrap();
        let tight = CountConfig { work_budget: 1000 };
        match count_points(&spec, 5, &tight) {
            Err(CountError::Budget { estimate, budget }) => {
                assert!(estimate > budget);
            }
            other => panic!("expected budget refusal, got {other:?}"),
        }
    }
}
