//! Exponent vectors and monomial orders.

use std::cmp::Ordering;

/// A power product, stored as an exponent vector of fixed length
/// (one slot per ring variable).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Monomial { exps }
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Componentwise quotient, or `None` if `other` does not divide `self`.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            if a < b {
                return None;
            }
            exps.push(a - b);
        }
        Some(Monomial { exps })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bitmask of variables with positive exponent. Rings here never
    /// exceed 64 variables.
    pub fn support_mask(&self) -> u64 {
        let mut mask = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }
}

/// Total monomial orders compatible with multiplication.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic: compare total degree first; on ties
    /// the monomial with the smaller exponent in the last differing
    /// variable is larger.
    Grevlex,
    /// Pure lexicographic with earlier-declared variables larger.
    Lex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self {
            MonomialOrder::Grevlex => {
                let da = a.degree();
                let db = b.degree();
                if da != db {
                    return da.cmp(&db);
                }
                for (x, y) in a.exps.iter().zip(&b.exps).rev() {
                    if x != y {
                        // smaller trailing exponent wins
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Lex => {
                for (x, y) in a.exps.iter().zip(&b.exps) {
                    if x != y {
                        return x.cmp(y);
                    }
                }
                Ordering::Equal
            }
        }
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "grevlex" => Ok(MonomialOrder::Grevlex),
            "lex" => Ok(MonomialOrder::Lex),
            other => Err(format!("unknown monomial order `{other}`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exps(e.to_vec())
    }

    #[test]
    fn grevlex_degree_first() {
        let o = MonomialOrder::Grevlex;
        // x^3 vs x^2 y: same degree, x^3 has smaller last exponent
        assert_eq!(o.cmp(&m(&[3, 0]), &m(&[2, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1]), &m(&[3, 0])), Ordering::Less);
    }

    #[test]
    fn lex_ignores_degree() {
        let o = MonomialOrder::Lex;
        // x > y^5 under lex with x declared first
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
    }

    #[test]
    fn unit_is_minimal() {
        for o in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
            assert_eq!(o.cmp(&m(&[0, 0]), &m(&[0, 1])), Ordering::Less);
            assert_eq!(o.cmp(&m(&[0, 0]), &m(&[1, 0])), Ordering::Less);
        }
    }

    #[test]
    fn division() {
        assert_eq!(m(&[2, 1]).try_div(&m(&[1, 0])), Some(m(&[1, 1])));
        assert_eq!(m(&[1, 0]).try_div(&m(&[0, 1])), None);
        assert_eq!(m(&[2, 1]).lcm(&m(&[1, 3])), m(&[2, 3]));
    }
}
