use std::collections::{BTreeMap, HashMap};
use std::fmt;

use super::{Coeff, Monomial, Ring, RingError};

/// The three checked arithmetic operations of `poly_arith`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// A sparse multivariate polynomial. Terms are kept sorted descending
/// under the ring's monomial order with no zero coefficients, so equal
/// polynomials have identical term lists.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Coeff)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    /// Build from arbitrary (monomial, coefficient) pairs: like terms are
    /// combined, zeros dropped, and the result sorted.
    pub fn from_terms(ring: &Ring, pairs: Vec<(Monomial, Coeff)>) -> Self {
        let field = ring.field().clone();
        let mut map: HashMap<Monomial, Coeff> = HashMap::with_capacity(pairs.len());
        for (m, c) in pairs {
            debug_assert_eq!(m.nvars(), ring.num_vars());
            match map.entry(m) {
                std::collections::hash_map::Entry::Occupied(mut e) => {
                    let sum = field.add(e.get(), &c);
                    if field.is_zero(&sum) {
                        e.remove();
                    } else {
                        *e.get_mut() = sum;
                    }
                }
                std::collections::hash_map::Entry::Vacant(e) => {
                    if !field.is_zero(&c) {
                        e.insert(c);
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, Coeff)> = map.into_iter().collect();
        terms.sort_by(|a, b| ring.cmp_monomials(&b.0, &a.0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// The maximal term under the ring's monomial order. Errors on zero.
    pub fn leading_term(&self) -> Result<(&Monomial, &Coeff), RingError> {
        self.terms
            .first()
            .map(|(m, c)| (m, c))
            .ok_or(RingError::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Result<&Monomial, RingError> {
        Ok(self.leading_term()?.0)
    }

    fn assert_same_ring(&self, other: &Polynomial) {
        assert!(
            self.ring == other.ring,
            "polynomials belong to different rings"
        );
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        let mut pairs = self.terms.clone();
        pairs.extend(other.terms.iter().cloned());
        Polynomial::from_terms(&self.ring, pairs)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        let field = self.ring.field().clone();
        let mut map: HashMap<Monomial, Coeff> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = field.mul(ca, cb);
                match map.entry(m) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let sum = field.add(e.get(), &c);
                        if field.is_zero(&sum) {
                            e.remove();
                        } else {
                            *e.get_mut() = sum;
                        }
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        if !field.is_zero(&c) {
                            e.insert(c);
                        }
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, Coeff)> = map.into_iter().collect();
        terms.sort_by(|a, b| self.ring.cmp_monomials(&b.0, &a.0));
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// Multiply by a single term.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        let field = self.ring.field();
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), field.mul(cc, c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        self.mul_term(&Monomial::one(self.ring.num_vars()), c)
    }

    pub fn pow(&self, mut exp: u32) -> Polynomial {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Divide every coefficient by the leading coefficient.
    pub fn monic(&self) -> Result<Polynomial, RingError> {
        let (_, lc) = self.leading_term()?;
        let inv = self.ring.field().inv(lc)?;
        Ok(self.scale(&inv))
    }

    /// Ring homomorphism determined by a partial variable assignment.
    /// Unassigned variables map to the variable of the same name in the
    /// target ring.
    pub fn substitute(
        &self,
        assignment: &BTreeMap<String, Polynomial>,
        target: &Ring,
    ) -> Result<Polynomial, RingError> {
        for image in assignment.values() {
            if image.ring() != target {
                return Err(RingError::RingMismatch);
            }
        }
        // image of each source variable, computed once
        let mut images: Vec<Option<Polynomial>> = vec![None; self.ring.num_vars()];
        let names = self.ring.var_names();
        let mut result = target.zero();
        for (m, c) in &self.terms {
            let mut term = target.constant(c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if images[i].is_none() {
                    let img = match assignment.get(&names[i]) {
                        Some(p) => p.clone(),
                        None => target.var(&names[i])?,
                    };
                    images[i] = Some(img);
                }
                term = term.mul(&images[i].as_ref().unwrap().pow(e));
            }
            result = result.add(&term);
        }
        Ok(result)
    }
}

/// Checked arithmetic entry point: verifies the operands share a ring.
pub fn poly_arith(a: &Polynomial, b: &Polynomial, op: ArithOp) -> Result<Polynomial, RingError> {
    if a.ring() != b.ring() {
        return Err(RingError::RingMismatch);
    }
    Ok(match op {
        ArithOp::Add => a.add(b),
        ArithOp::Sub => a.sub(b),
        ArithOp::Mul => a.mul(b),
    })
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        let names = self.ring.var_names();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = field.is_negative_display(c);
            let mag = if neg {
                field.format(&field.neg(c))
            } else {
                field.format(c)
            };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (vi, &e) in m.exps().iter().enumerate() {
                if e == 1 {
                    factors.push(names[vi].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", names[vi], e));
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::{CoefficientField, MonomialOrder};
    use super::*;

    fn ring_q() -> Ring {
        Ring::new(
            vec!["x", "y", "z"],
            MonomialOrder::Grevlex,
            CoefficientField::rationals(),
        )
        .unwrap()
    }

    #[test]
    fn cancellation() {
        let r = ring_q();
        let x = r.var("x").unwrap();
        let y = r.var("y").unwrap();
        // (x+y) + (x-y) = 2x
        let s = x.add(&y).add(&x.sub(&y));
        assert_eq!(s, x.scale(&r.field().from_i64(2)));
    }

    #[test]
    fn absorbing_zero() {
        let r = ring_q();
        let x = r.var("x").unwrap();
        assert!(x.mul(&r.zero()).is_zero());
    }

    #[test]
    fn freshman_dream_char_3() {
        let r = Ring::new(
            vec!["x"],
            MonomialOrder::Grevlex,
            CoefficientField::prime(3).unwrap(),
        )
        .unwrap();
        let x = r.var("x").unwrap();
        let lhs = x.add(&r.one()).pow(3);
        let rhs = x.pow(3).add(&r.one());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn leading_term_grevlex() {
        let r = ring_q();
        let x = r.var("x").unwrap();
        let y = r.var("y").unwrap();
        // x^2 y + x^3: both degree 3, x^3 leads under grevlex
        let f = x.pow(2).mul(&y).add(&x.pow(3));
        let (m, c) = f.leading_term().unwrap();
        assert_eq!(m.exps(), &[3, 0, 0]);
        assert!(r.field().is_one(c));
    }

    #[test]
    fn leading_term_lex() {
        let r = Ring::new(
            vec!["x", "y"],
            MonomialOrder::Lex,
            CoefficientField::rationals(),
        )
        .unwrap();
        let x = r.var("x").unwrap();
        let y = r.var("y").unwrap();
        let f = y.pow(5).add(&x);
        let (m, _) = f.leading_term().unwrap();
        assert_eq!(m.exps(), &[1, 0]);
    }

    #[test]
    fn leading_term_of_constant_and_zero() {
        let r = ring_q();
        let seven = r.from_int(7);
        let (m, c) = seven.leading_term().unwrap();
        assert!(m.is_one());
        assert_eq!(r.field().format(c), "7");
        assert!(r.zero().leading_term().is_err());
    }

    #[test]
    fn substitute_examples() {
        let r = ring_q();
        let x = r.var("x").unwrap();
        let y = r.var("y").unwrap();
        let z = r.var("z").unwrap();

        // xy - z with x -> 0 gives -z
        let f = x.mul(&y).sub(&z);
        let mut map = BTreeMap::new();
        map.insert("x".to_string(), r.zero());
        assert_eq!(f.substitute(&map, &r).unwrap(), z.neg());

        // x^2 with x -> x+1 gives x^2 + 2x + 1
        let mut map = BTreeMap::new();
        map.insert("x".to_string(), x.add(&r.one()));
        let g = x.pow(2).substitute(&map, &r).unwrap();
        let expect = x.pow(2).add(&x.scale(&r.field().from_i64(2))).add(&r.one());
        assert_eq!(g, expect);
    }

    #[test]
    fn substitute_char_2_collapse() {
        let r2 = Ring::new(
            vec!["x", "y", "t"],
            MonomialOrder::Grevlex,
            CoefficientField::prime(2).unwrap(),
        )
        .unwrap();
        let x = r2.var("x").unwrap();
        let y = r2.var("y").unwrap();
        let t = r2.var("t").unwrap();
        let f = x.pow(2).add(&y.pow(2));
        let mut map = BTreeMap::new();
        map.insert("x".to_string(), t.clone());
        map.insert("y".to_string(), t);
        assert!(f.substitute(&map, &r2).unwrap().is_zero());
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let r = ring_q();
        let other = Ring::new(
            vec!["a"],
            MonomialOrder::Grevlex,
            CoefficientField::rationals(),
        )
        .unwrap();
        let e = poly_arith(&r.var("x").unwrap(), &other.var("a").unwrap(), ArithOp::Add);
        assert!(e.is_err());
    }
}
