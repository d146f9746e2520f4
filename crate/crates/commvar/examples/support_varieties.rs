//! Support varieties over Frobenius kernels of SL3: decompose a dominant
//! weight into base-p digits, classify each digit as p-regular or
//! p-singular, and read off dimension and irreducibility.

use commvar::support::{decompose_digits, is_p_regular, support_variety, WeightA2};

fn main() {
    let p = 7u64;

    let lambda = WeightA2::new(48, 6);
    let digits = decompose_digits(lambda, p, 2).unwrap();
    println!("digits of {lambda} base {p}:");
    for d in &digits.digits {
        println!(
            "  {d} ({})",
            if is_p_regular(*d, p) { "regular" } else { "singular" }
        );
    }

    println!();
    for (lambda, r) in [
        (WeightA2::new(0, 0), 2),
        (WeightA2::new(6, 0), 1),
        (WeightA2::new(6, 0), 3),
        (WeightA2::new(48, 6), 2),
    ] {
        let report = support_variety(lambda, p, r).unwrap();
        println!(
            "lambda = {lambda}, r = {r}: {} singular + {} regular digits, dim {}, {}",
            report.a,
            report.b,
            report.dim,
            if report.irreducible { "irreducible" } else { "reducible" }
        );
    }
}
