//! The centralizer of a subregular nilpotent and its commuting-tuple
//! varieties. The defining ideal collapses in small characteristic, and
//! the dimension jumps from (n-1)r + 2 to nr + 1.

use commvar::formulas::dim_cr_zsub;
use commvar::groebner::{krull_dimension, GroebnerConfig};
use commvar::lie::{
    centralizer_basis, commuting_ideal, jordan_nilpotent, scalar_ring, Ambient, MixedSpec,
    VarietyKind,
};
use commvar::ring::{CoefficientField, MonomialOrder};

fn main() {
    let config = GroebnerConfig::default();

    let ring = scalar_ring(CoefficientField::prime(7).unwrap());
    let e = jordan_nilpotent(&[2, 1], &ring).unwrap();
    println!("subregular nilpotent:\n{e}");
    let basis = centralizer_basis(&e, Ambient::Sl).unwrap();
    println!("its centralizer in sl3 has dimension {}", basis.len());

    for p in [7u64, 3] {
        let field = CoefficientField::prime(p).unwrap();
        let spec = MixedSpec::uniform(VarietyKind::ZSub, 3, 2).unwrap();
        let ideal = commuting_ideal(&spec, field, MonomialOrder::Grevlex).unwrap();
        println!("\ncommuting ideal of a pair over F_{p}:");
        for g in ideal.generators() {
            println!("  {g}");
        }
        let dim = krull_dimension(&ideal, &config).unwrap();
        let expected = dim_cr_zsub(3, 2, p == 3).unwrap();
        println!("dimension {dim} (closed form {expected})");
    }
}
