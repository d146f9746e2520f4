//! Staircase matrices: block-structured matrices of indeterminates with
//! zero lower-left blocks. The rank <= 1 locus decomposes into one
//! component per band, and its dimension is the component maximum.

use commvar::detvar::{minors_ideal, StaircaseShape};
use commvar::groebner::{krull_dimension, GroebnerConfig};
use commvar::ring::{CoefficientField, MonomialOrder};

fn main() {
    let field = CoefficientField::prime(32003).unwrap();
    let config = GroebnerConfig::default();

    let shape = StaircaseShape::three_band(1, 1, 1);
    println!("three-band shape {shape} with {} variables", shape.num_vars());
    for (label, dim) in shape.components() {
        println!("  component {label} of dim {dim}");
    }
    let matrix = shape.matrix(MonomialOrder::Grevlex, field.clone()).unwrap();
    let groebner = krull_dimension(&minors_ideal(&matrix, 2).unwrap(), &config).unwrap();
    println!("component max {} vs groebner {groebner}", shape.dim());

    println!();
    for shape in [
        StaircaseShape::new(vec![2, 3], vec![1, 3]).unwrap(),
        StaircaseShape::new(vec![1, 4], vec![3, 4]).unwrap(),
        StaircaseShape::new(vec![0, 2], vec![1, 2]).unwrap(),
    ] {
        let matrix = shape.matrix(MonomialOrder::Grevlex, field.clone()).unwrap();
        let groebner = krull_dimension(&minors_ideal(&matrix, 2).unwrap(), &config).unwrap();
        println!(
            "shape {shape}: component max {}, groebner {groebner}, printed closed form {}",
            shape.dim(),
            shape.closed_form_dim()
        );
    }
}
