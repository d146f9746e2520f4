//! Parse an ideal from text, compute a reduced Groebner basis, and read
//! off the Krull dimension of its zero set.

use commvar::groebner::{buchberger, is_member, krull_dimension, GroebnerConfig, Ideal};
use commvar::ring::{CoefficientField, MonomialOrder, Ring};

fn main() {
    let ring = Ring::new(
        vec!["x", "y", "z"],
        MonomialOrder::Grevlex,
        CoefficientField::rationals(),
    )
    .unwrap();

    let gens = ["x^2 + y^2 + z^2 - 1", "x - y", "y - z"]
        .iter()
        .map(|s| ring.parse(s).unwrap())
        .collect();
    let ideal = Ideal::new(ring.clone(), gens).unwrap();

    let config = GroebnerConfig::default();
    let gb = buchberger(&ideal, &config).unwrap();
    println!("reduced basis:");
    for g in gb.basis() {
        println!("  {g}");
    }
    println!("dimension: {}", krull_dimension(&ideal, &config).unwrap());

    let probe = ring.parse("3*x^2 - 1").unwrap();
    println!(
        "is 3*x^2 - 1 in the ideal? {}",
        is_member(&probe, &ideal, &config).unwrap()
    );

    // a lex basis eliminates variables
    let lex = Ring::new(
        vec!["x", "y", "z"],
        MonomialOrder::Lex,
        CoefficientField::rationals(),
    )
    .unwrap();
    let gens = ["x + y + z", "x*y + y*z + x*z", "x*y*z - 1"]
        .iter()
        .map(|s| lex.parse(s).unwrap())
        .collect();
    let ideal = Ideal::new(lex, gens).unwrap();
    println!("lex elimination of the elementary symmetric system:");
    for g in buchberger(&ideal, &config).unwrap().basis() {
        println!("  {g}");
    }
}
