//! Buchberger's algorithm, multivariate reduction, and Krull dimension of
//! a variety via independent variable sets of the initial ideal.

use std::collections::HashSet;

use thiserror::Error;

use crate::ring::{Polynomial, Ring, RingError};

#[derive(Debug, Error)]
pub enum GroebnerError {
    #[error("pair reduction budget of {limit} exceeded")]
    BudgetExceeded { limit: u64 },
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Resource limits for a Buchberger run. The default allows 200k pair
/// reductions; exceeding it is a loud error, never a wrong answer.
#[derive(Clone, Copy, Debug)]
pub struct GroebnerConfig {
    pub pair_budget: u64,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig {
            pair_budget: 200_000,
        }
    }
}

/// A finite generating set for an ideal. Zero generators are pruned and
/// duplicates removed on construction.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: Ring, generators: Vec<Polynomial>) -> Result<Self, RingError> {
        let mut gens = Vec::new();
        for g in generators {
            if g.ring() != &ring {
                return Err(RingError::RingMismatch);
            }
            if !g.is_zero() && !gens.contains(&g) {
                gens.push(g);
            }
        }
        Ok(Ideal {
            ring,
            generators: gens,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }
}

/// A reduced Groebner basis: monic, inter-reduced, sorted by leading
/// monomial descending. Canonical for a fixed ring and order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    basis: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn contains_unit(&self) -> bool {
        self.basis.iter().any(|g| g.is_constant() && !g.is_zero())
    }

    /// Krull dimension of the variety of the ideal: the maximum size of a
    /// variable set S such that no leading monomial is supported entirely
    /// inside S. Empty variety gives -1; the zero ideal gives the full
    /// ambient dimension.
    pub fn dimension(&self) -> i64 {
        let nvars = self.ring.num_vars();
        if self.basis.is_empty() {
            return nvars as i64;
        }
        if self.contains_unit() {
            return -1;
        }
        let mut supports: Vec<u64> = self
            .basis
            .iter()
            .map(|g| g.leading_monomial().expect("basis has no zeros").support_mask())
            .collect();
        supports.sort();
        supports.dedup();
        // keep only minimal supports; a superset imposes no new constraint
        let minimal: Vec<u64> = supports
            .iter()
            .copied()
            .filter(|&s| {
                !supports
                    .iter()
                    .any(|&t| t != s && (t & s) == t)
            })
            .collect();
        let hit = min_hitting_set(&minimal, nvars as u32, nvars as u32);
        nvars as i64 - hit as i64
    }
}

/// Smallest set of variables meeting every support mask, by branch and
/// bound on the sparsest uncovered support.
fn min_hitting_set(supports: &[u64], nvars: u32, best_known: u32) -> u32 {
    if supports.is_empty() {
        return 0;
    }
    if best_known == 0 {
        return u32::MAX;
    }
    let target = supports
        .iter()
        .copied()
        .min_by_key(|s| s.count_ones())
        .expect("nonempty");
    let mut best = best_known;
    for v in 0..nvars {
        if target & (1 << v) == 0 {
            continue;
        }
        let remaining: Vec<u64> = supports
            .iter()
            .copied()
            .filter(|s| s & (1 << v) == 0)
            .collect();
        let sub = min_hitting_set(&remaining, nvars, best.saturating_sub(1));
        if sub != u32::MAX && sub + 1 < best {
            best = sub + 1;
        }
    }
    best
}

/// Full normal form of `f` modulo `basis`: repeatedly cancels the leading
/// term by the first basis element whose leading term divides it.
pub fn reduce(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let ring = f.ring().clone();
    let field = ring.field().clone();
    let mut remainder = ring.zero();
    let mut work = f.clone();
    'outer: while !work.is_zero() {
        let (lm, lc) = {
            let (m, c) = work.leading_term().expect("nonzero");
            (m.clone(), c.clone())
        };
        for g in basis {
            if g.is_zero() {
                continue;
            }
            let (gm, gc) = g.leading_term().expect("nonzero");
            if let Some(q) = lm.try_div(gm) {
                let factor = field.div(&lc, gc).expect("leading coefficient nonzero");
                work = work.sub(&g.mul_term(&q, &factor));
                continue 'outer;
            }
        }
        // leading term irreducible: move it to the remainder
        let lt = Polynomial::from_terms(&ring, vec![(lm, lc)]);
        remainder = remainder.add(&lt);
        work = work.sub(&lt);
    }
    remainder
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let field = f.ring().field().clone();
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let lcm = fm.lcm(gm);
    let qf = lcm.try_div(fm).expect("lcm divisible");
    let qg = lcm.try_div(gm).expect("lcm divisible");
    let inv_fc = field.inv(fc).expect("nonzero");
    let inv_gc = field.inv(gc).expect("nonzero");
    f.mul_term(&qf, &inv_fc).sub(&g.mul_term(&qg, &inv_gc))
}

/// Buchberger's algorithm with the coprime and chain criteria and
/// minimal-lcm pair selection, followed by reduction to the canonical
/// reduced basis.
pub fn buchberger(ideal: &Ideal, config: &GroebnerConfig) -> Result<GroebnerBasis, GroebnerError> {
    let ring = ideal.ring().clone();
    let mut basis: Vec<Polynomial> = ideal.generators().to_vec();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push((i, j));
            pending.insert((i, j));
        }
    }
    let mut reductions: u64 = 0;
    while !pairs.is_empty() {
        // normal selection: smallest lcm under the ring order, then indices
        let mut pick = 0usize;
        for k in 1..pairs.len() {
            let (ai, aj) = pairs[k];
            let (bi, bj) = pairs[pick];
            let la = basis[ai]
                .leading_monomial()
                .unwrap()
                .lcm(basis[aj].leading_monomial().unwrap());
            let lb = basis[bi]
                .leading_monomial()
                .unwrap()
                .lcm(basis[bj].leading_monomial().unwrap());
            match ring.cmp_monomials(&la, &lb) {
                std::cmp::Ordering::Less => pick = k,
                std::cmp::Ordering::Equal => {
                    if (ai, aj) < (bi, bj) {
                        pick = k;
                    }
                }
                std::cmp::Ordering::Greater => {}
            }
        }
        let (i, j) = pairs.swap_remove(pick);
        pending.remove(&(i, j));

        let lmi = basis[i].leading_monomial().unwrap().clone();
        let lmj = basis[j].leading_monomial().unwrap().clone();
        if lmi.is_coprime_with(&lmj) {
            continue;
        }
        let lcm = lmi.lcm(&lmj);
        // chain criterion: some k whose leading monomial divides the lcm
        // and whose pairs with i and j were both already handled
        let chain = (0..basis.len()).any(|k| {
            if k == i || k == j {
                return false;
            }
            let pk_i = (k.min(i), k.max(i));
            let pk_j = (k.min(j), k.max(j));
            basis[k].leading_monomial().unwrap().divides(&lcm)
                && !pending.contains(&pk_i)
                && !pending.contains(&pk_j)
        });
        if chain {
            continue;
        }

        reductions += 1;
        if reductions > config.pair_budget {
            return Err(GroebnerError::BudgetExceeded {
                limit: config.pair_budget,
            });
        }
        let s = s_polynomial(&basis[i], &basis[j]);
        let r = reduce(&s, &basis);
        if !r.is_zero() {
            let new_idx = basis.len();
            basis.push(r);
            for k in 0..new_idx {
                pairs.push((k, new_idx));
                pending.insert((k, new_idx));
            }
        }
    }

    Ok(GroebnerBasis {
        ring,
        basis: reduce_basis(basis),
    })
}

/// Minimize and inter-reduce a Groebner basis, returning the canonical
/// reduced form: monic elements, none of whose terms is divisible by
/// another element's leading term, sorted descending by leading monomial.
fn reduce_basis(mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    basis.retain(|g| !g.is_zero());
    if basis.is_empty() {
        return basis;
    }
    let ring = basis[0].ring().clone();
    // minimize: drop any element whose leading term another divides
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let lmi = basis[i].leading_monomial().unwrap().clone();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let lmj = basis[j].leading_monomial().unwrap();
            if lmj.divides(&lmi) && (lmj != &lmi || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<Polynomial> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| if k { Some(g) } else { None })
        .collect();
    // inter-reduce tails
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, g)| if j != i { Some(g.clone()) } else { None })
            .collect();
        let r = reduce(&minimal[i], &others);
        if !r.is_zero() {
            reduced.push(r.monic().expect("nonzero"));
        }
    }
    reduced.sort_by(|a, b| {
        ring.cmp_monomials(
            b.leading_monomial().unwrap(),
            a.leading_monomial().unwrap(),
        )
    });
    reduced
}

/// Krull dimension of V(ideal). See `GroebnerBasis::dimension` for the
/// conventions (-1 for the empty variety, ambient dimension for the zero
/// ideal).
pub fn krull_dimension(ideal: &Ideal, config: &GroebnerConfig) -> Result<i64, GroebnerError> {
    if ideal.is_zero_ideal() {
        return Ok(ideal.ring().num_vars() as i64);
    }
    Ok(buchberger(ideal, config)?.dimension())
}

/// Ideal membership via normal form against the reduced basis.
pub fn is_member(
    f: &Polynomial,
    ideal: &Ideal,
    config: &GroebnerConfig,
) -> Result<bool, GroebnerError> {
    let gb = buchberger(ideal, config)?;
    Ok(reduce(f, gb.basis()).is_zero())
}

/// Membership of every generator of `sub` in `sup`, using one basis
/// computation.
pub fn contains_ideal(
    sup: &Ideal,
    sub: &Ideal,
    config: &GroebnerConfig,
) -> Result<bool, GroebnerError> {
    let gb = buchberger(sup, config)?;
    Ok(sub
        .generators()
        .iter()
        .all(|g| reduce(g, gb.basis()).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{CoefficientField, MonomialOrder};

    fn ring_q(vars: &[&str], order: MonomialOrder) -> Ring {
        Ring::new(vars.to_vec(), order, CoefficientField::rationals()).unwrap()
    }

    fn cfg() -> GroebnerConfig {
        GroebnerConfig::default()
    }

    #[test]
    fn reduce_examples() {
        let r = ring_q(&["x", "y"], MonomialOrder::Grevlex);
        let x = r.var("x").unwrap();
        let y = r.var("y").unwrap();
        assert!(reduce(&x.pow(2), &[x.clone()]).is_zero());
        assert_eq!(reduce(&x.mul(&y).add(&r.one()), &[x.clone()]), r.one());
        // x^2 y - y mod (xy - 1) leaves x - y
        let f = x.pow(2).mul(&y).sub(&y);
        let g = x.mul(&y).sub(&r.one());
        assert_eq!(reduce(&f, &[g]), x.sub(&y));
    }

    #[test]
    fn already_reduced_basis() {
        let r = ring_q(&["x", "y"], MonomialOrder::Grevlex);
        let x = r.var("x").unwrap();
        let y = r.var("y").unwrap();
        let ideal = Ideal::new(r.clone(), vec![x.clone(), y.clone()]).unwrap();
        let gb = buchberger(&ideal, &cfg()).unwrap();
        assert_eq!(gb.basis(), &[x, y]);
    }

    #[test]
    fn linear_elimination_lex() {
        let r = ring_q(&["x", "y", "z"], MonomialOrder::Lex);
        let x = r.var("x").unwrap();
        let y = r.var("y").unwrap();
        let z = r.var("z").unwrap();
        let ideal = Ideal::new(r.clone(), vec![x.sub(&y), y.sub(&z)]).unwrap();
        let gb = buchberger(&ideal, &cfg()).unwrap();
        assert_eq!(gb.basis(), &[x.sub(&z), y.sub(&z)]);
    }

    #[test]
    fn generic_2x3_minors_are_reduced_basis() {
        // the three 2x2 minors of a generic 2x3 matrix already form the
        // reduced grevlex basis
        let r = ring_q(
            &["a", "b", "c", "d", "e", "f"],
            MonomialOrder::Grevlex,
        );
        let v = |n: &str| r.var(n).unwrap();
        let m12 = v("a").mul(&v("e")).sub(&v("b").mul(&v("d")));
        let m13 = v("a").mul(&v("f")).sub(&v("c").mul(&v("d")));
        let m23 = v("b").mul(&v("f")).sub(&v("c").mul(&v("e")));
        let ideal = Ideal::new(r.clone(), vec![m12.clone(), m13.clone(), m23.clone()]).unwrap();
        let gb = buchberger(&ideal, &cfg()).unwrap();
        assert_eq!(gb.basis().len(), 3);
        for m in [&m12, &m13, &m23] {
            assert!(reduce(m, gb.basis()).is_zero());
        }
    }

    #[test]
    fn dimension_conventions() {
        let r = ring_q(&["x", "y", "z"], MonomialOrder::Grevlex);
        let zero = Ideal::new(r.clone(), vec![]).unwrap();
        assert_eq!(krull_dimension(&zero, &cfg()).unwrap(), 3);
        let unit = Ideal::new(r.clone(), vec![r.one()]).unwrap();
        assert_eq!(krull_dimension(&unit, &cfg()).unwrap(), -1);
    }

    #[test]
    fn membership() {
        let r = ring_q(&["x"], MonomialOrder::Grevlex);
        let x = r.var("x").unwrap();
        let ideal = Ideal::new(r.clone(), vec![x.clone()]).unwrap();
        assert!(is_member(&x.pow(2), &ideal, &cfg()).unwrap());
        assert!(!is_member(&x.add(&r.one()), &ideal, &cfg()).unwrap());
    }

    #[test]
    fn budget_is_loud() {
        let r = ring_q(&["x", "y", "z"], MonomialOrder::Lex);
        let v = |n: &str| r.var(n).unwrap();
        // cyclic-3-ish system that needs at least a few reductions
        let g1 = v("x").add(&v("y")).add(&v("z"));
        let g2 = v("x").mul(&v("y")).add(&v("y").mul(&v("z"))).add(&v("z").mul(&v("x")));
        let g3 = v("x").mul(&v("y")).mul(&v("z")).sub(&r.one());
        let ideal = Ideal::new(r.clone(), vec![g1, g2, g3]).unwrap();
        let tight = GroebnerConfig { pair_budget: 1 };
        assert!(matches!(
            buchberger(&ideal, &tight),
            Err(GroebnerError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn basis_invariant_under_generator_permutation() {
        let r = ring_q(&["x", "y", "z"], MonomialOrder::Grevlex);
        let v = |n: &str| r.var(n).unwrap();
        let gens = vec![
            v("x").pow(2).sub(&v("y")),
            v("y").pow(2).sub(&v("z")),
            v("x").mul(&v("z")).sub(&v("y").mul(&v("y"))),
        ];
        let mut permuted = gens.clone();
        permuted.reverse();
        let b1 = buchberger(&Ideal::new(r.clone(), gens).unwrap(), &cfg()).unwrap();
        let b2 = buchberger(&Ideal::new(r.clone(), permuted).unwrap(), &cfg()).unwrap();
        assert_eq!(b1.basis(), b2.basis());
    }

    #[test]
    fn redundant_generator_keeps_dimension() {
        let r = ring_q(&["x", "y", "z"], MonomialOrder::Grevlex);
        let v = |n: &str| r.var(n).unwrap();
        let base = vec![v("x").mul(&v("y"))];
        let d1 = krull_dimension(&Ideal::new(r.clone(), base.clone()).unwrap(), &cfg()).unwrap();
        let mut padded = base;
        padded.push(v("x").pow(2).mul(&v("y"))); // in the ideal already
        let d2 = krull_dimension(&Ideal::new(r.clone(), padded).unwrap(), &cfg()).unwrap();
        assert_eq!(d1, d2);
        assert_eq!(d1, 2);
    }
}
