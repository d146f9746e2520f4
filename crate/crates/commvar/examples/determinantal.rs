//! Rank loci of generic matrices: the ideal of t x t minors has
//! dimension (t-1)(m+n-t+1), confirmed by Groebner computation.

use commvar::detvar::{detvar_dim_formula, minors_ideal, GenericMatrix};
use commvar::groebner::{krull_dimension, GroebnerConfig};
use commvar::ring::{CoefficientField, MonomialOrder};

fn main() {
    let field = CoefficientField::prime(32003).unwrap();
    let config = GroebnerConfig::default();

    println!("{:>8} {:>3} {:>12} {:>8}", "matrix", "t", "groebner dim", "formula");
    for (m, n) in [(2, 2), (2, 3), (3, 3), (3, 4)] {
        for t in 1..=m.min(n) {
            let matrix = GenericMatrix::generic(m, n, MonomialOrder::Grevlex, field.clone()).unwrap();
            let ideal = minors_ideal(&matrix, t).unwrap();
            let dim = krull_dimension(&ideal, &config).unwrap();
            let formula = detvar_dim_formula(m, n, t).unwrap();
            println!("{:>5}x{:<2} {:>3} {:>12} {:>8}", m, n, t, dim, formula);
        }
    }

    let matrix = GenericMatrix::generic(2, 3, MonomialOrder::Grevlex, field).unwrap();
    println!("\ngenerators of the rank <= 1 locus of a 2x3 matrix:");
    for g in minors_ideal(&matrix, 2).unwrap().generators() {
        println!("  {g}");
    }
}
