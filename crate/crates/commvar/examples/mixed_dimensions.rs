//! Closed-form dimensions of the mixed commuting varieties: i factors
//! from the subregular orbit closure, j from the nilpotent cone, m from
//! all of sl3, with the recursive decomposition for i >= 1.

use commvar::formulas::{decompose_cijm, dim_cijm, is_irreducible_cijm, n_value};

fn main() {
    println!("{:>10} {:>5} {:>12} {:>11}", "(i,j,m)", "dim", "irreducible", "rank bound");
    for (i, j, m) in [
        (0, 0, 2),
        (0, 2, 0),
        (2, 0, 0),
        (0, 1, 1),
        (1, 1, 0),
        (1, 1, 1),
        (3, 2, 1),
    ] {
        println!(
            "{:>10} {:>5} {:>12} {:>11}",
            format!("({i},{j},{m})"),
            dim_cijm(i, j, m),
            is_irreducible_cijm(i, j, m),
            n_value(i, j, m)
        );
    }

    println!("\ndecomposition of (2,1,0):");
    for piece in decompose_cijm(2, 1, 0).unwrap() {
        println!("  {} of dim {}", piece.label, piece.dim);
    }
    println!("decomposition of (3,0,0):");
    for piece in decompose_cijm(3, 0, 0).unwrap() {
        println!("  {} of dim {}", piece.label, piece.dim);
    }
}
