//! Exact sparse multivariate polynomial arithmetic over F_p or Q with
//! pluggable monomial orders.
//!
//! Rings and polynomials are immutable values; everything here is safe to
//! share across threads.

mod coeff;
mod monomial;
mod parse;
mod poly;

pub use coeff::{Coeff, CoefficientField};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{poly_arith, ArithOp, Polynomial};

use std::collections::HashMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RingError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("division by zero coefficient")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Debug)]
struct RingData {
    vars: Vec<String>,
    index: HashMap<String, usize>,
    order: MonomialOrder,
    field: CoefficientField,
}

/// A polynomial ring descriptor: named variables in declaration order, a
/// monomial order, and a coefficient field. Cheap to clone.
#[derive(Clone, Debug)]
pub struct Ring {
    data: Arc<RingData>,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data)
            || (self.data.vars == other.data.vars
                && self.data.order == other.data.order
                && self.data.field == other.data.field)
    }
}

impl Eq for Ring {}

impl Ring {
    pub fn new<S: Into<String>>(
        vars: Vec<S>,
        order: MonomialOrder,
        field: CoefficientField,
    ) -> Result<Self, RingError> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        let mut index = HashMap::new();
        for (i, v) in vars.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(RingError::DuplicateVariable(v.clone()));
            }
        }
        Ok(Ring {
            data: Arc::new(RingData {
                vars,
                index,
                order,
                field,
            }),
        })
    }

    pub fn num_vars(&self) -> usize {
        self.data.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.data.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.data.order
    }

    pub fn field(&self) -> &CoefficientField {
        &self.data.field
    }

    pub fn var_index(&self, name: &str) -> Result<usize, RingError> {
        self.data
            .index
            .get(name)
            .copied()
            .ok_or_else(|| RingError::UnknownVariable(name.to_string()))
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
        self.data.order.cmp(a, b)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self)
    }

    pub fn one(&self) -> Polynomial {
        self.constant(self.field().one())
    }

    pub fn constant(&self, c: Coeff) -> Polynomial {
        Polynomial::from_terms(self, vec![(Monomial::one(self.num_vars()), c)])
    }

    pub fn from_int(&self, v: i64) -> Polynomial {
        self.constant(self.field().from_i64(v))
    }

    /// The variable with the given name, as a polynomial.
    pub fn var(&self, name: &str) -> Result<Polynomial, RingError> {
        let i = self.var_index(name)?;
        Ok(self.var_by_index(i))
    }

    pub fn var_by_index(&self, i: usize) -> Polynomial {
        Polynomial::from_terms(
            self,
            vec![(Monomial::var(self.num_vars(), i), self.field().one())],
        )
    }

    /// Parse the text form produced by `Polynomial::to_string`.
    pub fn parse(&self, input: &str) -> Result<Polynomial, RingError> {
        parse::parse_polynomial(self, input)
    }
}
