//! Exact point counts over small prime fields as an independent check:
//! the count of a d-dimensional variety grows roughly like q^d, so the
//! log-log slope should land near the formula dimension.

use commvar::lie::{MixedSpec, VarietyKind};
use commvar::pointcount::{count_points, dimension_slope, CountConfig};

fn main() {
    let config = CountConfig::default();
    for (spec, expected) in [
        (MixedSpec::uniform(VarietyKind::NilpotentCone, 3, 1).unwrap(), 6),
        (MixedSpec::uniform(VarietyKind::SubregClosure, 3, 2).unwrap(), 6),
        (MixedSpec::uniform(VarietyKind::NilpotentCone, 3, 2).unwrap(), 8),
        (MixedSpec::uniform(VarietyKind::ZSub, 3, 2).unwrap(), 6),
    ] {
        let mut counts = Vec::new();
        for q in [2u64, 3, 5] {
            let result = count_points(&spec, q, &config).unwrap();
            println!("{spec} over F_{q}: {} points", result.count);
            counts.push((q, result.count));
        }
        let slope = dimension_slope(&counts);
        println!("  slope {slope:.3}, formula dimension {expected}\n");
    }
}
