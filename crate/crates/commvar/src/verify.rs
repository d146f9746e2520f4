//! Cross-track verification suites: each check runs one family of
//! dimension computations two or three independent ways and reports
//! structured records plus a single pass/fail verdict. The CLI and the
//! test harness both drive these.

use thiserror::Error;

use crate::detvar::{detvar_dim_formula, minors_ideal, DetvarError, GenericMatrix, StaircaseShape};
use crate::formulas::{
    check_rank_inequality, decompose_cijm, dim_baselines, dim_cijm, dim_cr_zsub,
    is_irreducible_cijm, n_value, BaselineKind, FormulaError,
};
use crate::groebner::{
    contains_ideal, krull_dimension, GroebnerConfig, GroebnerError, Ideal,
};
use crate::lie::{
    commuting_ideal, verify_intersections, LieError, MixedSpec, VarietyKind, VarietySpec,
};
use crate::pointcount::{count_points, dimension_slope, CountConfig, CountError};
use crate::report::{Cache, Record, ReportError};
use crate::ring::{CoefficientField, MonomialOrder, Polynomial, Ring, RingError};
use crate::support::{case_display_dim, support_variety, WeightA2};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Count(#[from] CountError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Detvar(#[from] DetvarError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Report(#[from] ReportError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Support(#[from] crate::support::SupportError),
}

impl VerifyError {
    /// True for resource refusals, which map to their own exit status.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            VerifyError::Groebner(GroebnerError::BudgetExceeded { .. })
                | VerifyError::Count(CountError::Budget { .. })
                | VerifyError::Count(CountError::BudgetMidRun(..))
        )
    }
}

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub pass: bool,
    pub records: Vec<Record>,
}

impl CheckOutcome {
    fn new(name: &'static str) -> Self {
        CheckOutcome {
            name,
            pass: true,
            records: Vec::new(),
        }
    }

    fn note(&mut self, record: Record, ok: bool) {
        self.records
            .push(record.push("status", if ok { "ok" } else { "mismatch" }));
        self.pass &= ok;
    }
}

fn default_field() -> CoefficientField {
    CoefficientField::prime(32003).expect("32003 is prime")
}

/// Rank loci of fully generic matrices: Groebner dimension against the
/// closed form (t-1)(m+n-t+1).
pub fn check_detvar_grid(gb: &GroebnerConfig) -> Result<CheckOutcome, VerifyError> {
    let mut out = CheckOutcome::new("determinantal-grid");
    for m in 1..=4usize {
        for n in 1..=4usize {
            if m.min(n) > 3 {
                continue;
            }
            for t in 1..=m.min(n) {
                let matrix = GenericMatrix::generic(m, n, MonomialOrder::Grevlex, default_field())?;
                let ideal = minors_ideal(&matrix, t)?;
                let got = krull_dimension(&ideal, gb)?;
                let expected = detvar_dim_formula(m, n, t)?;
                out.note(
                    Record::new()
                        .push("check", "determinantal-grid")
                        .push("spec", format!("minors{t}of{m}x{n}"))
                        .push("track", "groebner")
                        .push("dim", got)
                        .push("expected", expected),
                    got == expected,
                );
            }
        }
    }
    Ok(out)
}

/// Three-band staircases over the full small grid: the Groebner dimension
/// of the 2x2-minor ideal must equal the rank bound.
pub fn check_staircase_grid(gb: &GroebnerConfig) -> Result<CheckOutcome, VerifyError> {
    let mut out = CheckOutcome::new("staircase-grid");
    for i in 0..=5usize {
        for j in 0..=(5 - i) {
            for m in 0..=(5 - i - j) {
                if i + j + m == 0 {
                    continue;
                }
                let shape = StaircaseShape::three_band(i, j, m);
                let matrix = shape.matrix(MonomialOrder::Grevlex, default_field())?;
                let ideal = minors_ideal(&matrix, 2)?;
                let got = krull_dimension(&ideal, gb)?;
                let expected = n_value(i as u32, j as u32, m as u32);
                out.note(
                    Record::new()
                        .push("check", "staircase-grid")
                        .push("spec", format!("band{i},{j},{m}"))
                        .push("track", "groebner")
                        .push("dim", got)
                        .push("expected", expected),
                    got == expected,
                );
            }
        }
    }
    Ok(out)
}

/// General staircase shapes beyond the three-band family: component-max
/// dimension against Groebner, with the printed closed form logged for
/// comparison only.
pub fn check_staircase_general(gb: &GroebnerConfig) -> Result<CheckOutcome, VerifyError> {
    let shapes: Vec<StaircaseShape> = vec![
        StaircaseShape::new(vec![1], vec![1]).unwrap(),
        StaircaseShape::new(vec![2], vec![2]).unwrap(),
        StaircaseShape::new(vec![3], vec![2]).unwrap(),
        StaircaseShape::new(vec![4], vec![3]).unwrap(),
        StaircaseShape::new(vec![1, 2], vec![1, 2]).unwrap(),
        StaircaseShape::new(vec![2, 3], vec![1, 3]).unwrap(),
        StaircaseShape::new(vec![1, 3], vec![2, 3]).unwrap(),
        StaircaseShape::new(vec![2, 2], vec![1, 2]).unwrap(),
        StaircaseShape::new(vec![0, 2], vec![1, 2]).unwrap(),
        StaircaseShape::new(vec![1, 2, 3], vec![1, 2, 3]).unwrap(),
        StaircaseShape::new(vec![2, 4], vec![2, 3]).unwrap(),
        StaircaseShape::new(vec![3, 4], vec![1, 2]).unwrap(),
        StaircaseShape::new(vec![1, 4], vec![3, 4]).unwrap(),
    ];
    let mut out = CheckOutcome::new("staircase-general");
    for shape in shapes {
        assert!(shape.num_vars() <= 16, "shape {shape} too large");
        let matrix = shape.matrix(MonomialOrder::Grevlex, default_field())?;
        let ideal = minors_ideal(&matrix, 2)?;
        let got = krull_dimension(&ideal, gb)?;
        let expected = shape.dim();
        let printed = shape.closed_form_dim();
        out.note(
            Record::new()
                .push("check", "staircase-general")
                .push("spec", shape.to_string())
                .push("track", "groebner")
                .push("dim", got)
                .push("expected", expected)
                .push("printed_formula", printed)
                .push("printed_deviation", printed - expected),
            got == expected,
        );
    }
    Ok(out)
}

fn minor_comparison_ideal(joint: &Ring, r: usize) -> Result<Ideal, VerifyError> {
    // 2x2 minors of the 3xr matrix whose k-th column is (x_k, z_k, t_k)
    let mut cols = Vec::with_capacity(r);
    for k in 1..=r {
        cols.push([
            joint.var(&format!("x{k}"))?,
            joint.var(&format!("z{k}"))?,
            joint.var(&format!("t{k}"))?,
        ]);
    }
    let mut gens: Vec<Polynomial> = Vec::new();
    for a in 0..r {
        for b in (a + 1)..r {
            for p in 0..3 {
                for q in (p + 1)..3 {
                    gens.push(
                        cols[a][p]
                            .mul(&cols[b][q])
                            .sub(&cols[a][q].mul(&cols[b][p])),
                    );
                }
            }
        }
    }
    Ok(Ideal::new(joint.clone(), gens)?)
}

/// The centralizer-tuple family: both characteristic branches of the
/// dimension formula, plus the product structure of the defining ideal in
/// the coprime case.
pub fn check_zsub_branches(gb: &GroebnerConfig) -> Result<CheckOutcome, VerifyError> {
    let mut out = CheckOutcome::new("centralizer-branches");
    let f7 = CoefficientField::prime(7).unwrap();
    let f3 = CoefficientField::prime(3).unwrap();
    for r in 1..=3usize {
        for (field, divides) in [(f7.clone(), false), (f3.clone(), true)] {
            let spec = MixedSpec::uniform(VarietyKind::ZSub, 3, r)?;
            let ideal = commuting_ideal(&spec, field.clone(), MonomialOrder::Grevlex)?;
            let got = krull_dimension(&ideal, gb)?;
            let expected = dim_cr_zsub(3, r as u32, divides)?;
            out.note(
                Record::new()
                    .push("check", "centralizer-branches")
                    .push("spec", format!("zsub^{r}:n3"))
                    .push("track", "groebner")
                    .push("branch", if divides { "divides" } else { "coprime" })
                    .push("dim", got)
                    .push("expected", expected),
                got == expected,
            );
        }
    }
    {
        let spec = MixedSpec::uniform(VarietyKind::ZSub, 4, 2)?;
        let ideal = commuting_ideal(&spec, f7.clone(), MonomialOrder::Grevlex)?;
        let got = krull_dimension(&ideal, gb)?;
        let expected = dim_cr_zsub(4, 2, false)?;
        out.note(
            Record::new()
                .push("check", "centralizer-branches")
                .push("spec", "zsub^2:n4")
                .push("track", "groebner")
                .push("branch", "coprime")
                .push("dim", got)
                .push("expected", expected),
            got == expected,
        );
    }
    // product structure: over F7 the commuting ideal equals the 2x2-minor
    // ideal of the 3xr matrix of non-free coordinates
    for r in 2..=3usize {
        let spec = MixedSpec::uniform(VarietyKind::ZSub, 3, r)?;
        let ideal = commuting_ideal(&spec, f7.clone(), MonomialOrder::Grevlex)?;
        let minors = minor_comparison_ideal(ideal.ring(), r)?;
        let forward = contains_ideal(&minors, &ideal, gb)?;
        let backward = contains_ideal(&ideal, &minors, gb)?;
        out.note(
            Record::new()
                .push("check", "centralizer-branches")
                .push("spec", format!("zsub^{r}:n3"))
                .push("track", "product-structure")
                .push("forward", forward)
                .push("backward", backward),
            forward && backward,
        );
    }
    Ok(out)
}

/// The three symbolic intersection identities at n = 3.
pub fn check_intersections() -> Result<CheckOutcome, VerifyError> {
    let mut out = CheckOutcome::new("intersections");
    let report = verify_intersections(CoefficientField::rationals())?;
    for (name, ok) in [
        ("nilpotent-slice", report.nilpotent_slice_ok),
        ("square-zero-slice", report.square_zero_slice_ok),
        ("plane-dichotomy", report.dichotomy_ok),
    ] {
        out.note(
            Record::new()
                .push("check", "intersections")
                .push("spec", name)
                .push("track", "symbolic"),
            ok,
        );
    }
    Ok(out)
}

/// Groebner dimension of the sliced tuple variety behind the recursive
/// decomposition: (i-1) plane factors, j nilpotent-slice factors, m full
/// slice factors, maximized over the two plane branches.
pub fn sliced_dimension(
    i: u32,
    j: u32,
    m: u32,
    gb: &GroebnerConfig,
) -> Result<i64, VerifyError> {
    assert!(i >= 1, "the sliced family needs at least one plane-family factor");
    let planes = (i - 1) as usize;
    if planes == 0 && j == 0 && m == 0 {
        return Ok(0); // the empty tuple: a single point
    }
    let branches: &[VarietyKind] = if planes == 0 {
        &[VarietyKind::V1]
    } else {
        &[VarietyKind::V1, VarietyKind::V2]
    };
    let mut best = i64::MIN;
    for &plane in branches {
        let mut factors = vec![VarietySpec::new(plane, 3); planes];
        factors.extend(vec![VarietySpec::new(VarietyKind::ZSubCapN, 3); j as usize]);
        factors.extend(vec![VarietySpec::new(VarietyKind::ZSub, 3); m as usize]);
        let spec = MixedSpec::new(factors)?;
        let ideal = commuting_ideal(&spec, default_field(), MonomialOrder::Grevlex)?;
        best = best.max(krull_dimension(&ideal, gb)?);
    }
    Ok(best)
}

/// The recursion step: sliced Groebner dimension against the rank bound,
/// and the closed form against the component maximum.
pub fn check_sliced(gb: &GroebnerConfig) -> Result<CheckOutcome, VerifyError> {
    let mut out = CheckOutcome::new("sliced-decomposition");
    for i in 1..=4u32 {
        for j in 0..=(4 - i) {
            for m in 0..=(4 - i - j) {
                let r = (i + j + m) as i64;
                let slice_dim = sliced_dimension(i, j, m, gb)?;
                let slice_expected = (r - 1) + n_value(i - 1, j, m);
                let formula = dim_cijm(i, j, m);
                let recursed = (4 + slice_dim).max(dim_cijm(i - 1, j, m));
                out.note(
                    Record::new()
                        .push("check", "sliced-decomposition")
                        .push("spec", format!("cijm{i},{j},{m}"))
                        .push("track", "groebner")
                        .push("slice_dim", slice_dim)
                        .push("slice_expected", slice_expected)
                        .push("dim", recursed)
                        .push("expected", formula),
                    slice_dim == slice_expected && recursed == formula,
                );
            }
        }
    }
    Ok(out)
}

/// Pure closed-form consistency: seam values, the uniform baselines, the
/// rank inequality, decomposition maxima, and the irreducibility grid.
pub fn check_formulas() -> Result<CheckOutcome, VerifyError> {
    let mut out = CheckOutcome::new("formula-seams");
    let mut seams_ok = true;
    for k in 1..=6u32 {
        seams_ok &= dim_cijm(0, 0, k) == dim_baselines(BaselineKind::CrSl3, k)?;
        seams_ok &= dim_cijm(0, k, 0) == dim_baselines(BaselineKind::CrN, k)?;
        seams_ok &= dim_cijm(k, 0, 0) == dim_baselines(BaselineKind::CrOsub, k)?;
    }
    for j in 1..=6u32 {
        for m in 1..=6u32 {
            seams_ok &= dim_cijm(0, j, m) == dim_baselines(BaselineKind::CrN, j + m)?;
        }
    }
    out.note(
        Record::new()
            .push("check", "formula-seams")
            .push("spec", "baseline-seams")
            .push("track", "formula"),
        seams_ok,
    );

    let mut ineq_ok = true;
    for r in 2..=10u32 {
        ineq_ok &= check_rank_inequality(r)?;
    }
    out.note(
        Record::new()
            .push("check", "formula-seams")
            .push("spec", "rank-inequality")
            .push("track", "formula"),
        ineq_ok,
    );

    let mut grid_ok = true;
    for i in 0..=6u32 {
        for j in 0..=6u32 {
            for m in 0..=6u32 {
                if i + j + m == 0 {
                    continue;
                }
                let expected =
                    (i == 0 && j == 0) || (i == 0 && m == 0) || (i == 1 && j == 0 && m == 0);
                grid_ok &= is_irreducible_cijm(i, j, m) == expected;
                if i >= 1 {
                    let pieces = decompose_cijm(i, j, m)?;
                    grid_ok &= pieces.iter().map(|c| c.dim).max() == Some(dim_cijm(i, j, m));
                }
            }
        }
    }
    out.note(
        Record::new()
            .push("check", "formula-seams")
            .push("spec", "irreducibility-grid")
            .push("track", "formula"),
        grid_ok,
    );
    Ok(out)
}

/// Exact point counts over q in {2, 3, 5} for the three pair families,
/// with log-log slopes compared against the formula dimensions.
pub fn check_pointcount(
    config: &CountConfig,
    cache: Option<&Cache>,
) -> Result<CheckOutcome, VerifyError> {
    let mut out = CheckOutcome::new("point-counts");
    let cases: [(MixedSpec, i64); 3] = [
        (MixedSpec::uniform(VarietyKind::NilpotentCone, 3, 2)?, 8),
        (MixedSpec::uniform(VarietyKind::SubregClosure, 3, 2)?, 6),
        (MixedSpec::uniform(VarietyKind::ZSub, 3, 2)?, 6),
    ];
    for (spec, expected) in cases {
        let mut counts = Vec::new();
        for q in [2u64, 3, 5] {
            let key = format!("count|{spec}|q={q}|budget={}|v1", config.work_budget);
            let cached = cache
                .and_then(|c| c.lookup(&key))
                .and_then(|rec| rec.get("count").and_then(|v| v.parse::<u128>().ok()));
            let count = match cached {
                Some(c) => c,
                None => {
                    let result = count_points(&spec, q, config)?;
                    if let Some(c) = cache {
                        c.store(&key, &Record::new().push("count", result.count))?;
                    }
                    result.count
                }
            };
            let branch = if q == 3 { "divides" } else { "coprime" };
            out.records.push(
                Record::new()
                    .push("check", "point-counts")
                    .push("spec", spec.to_string())
                    .push("track", "pointcount")
                    .push("q", q)
                    .push("count", count)
                    .push("branch", branch)
                    .push("status", "ok"),
            );
            counts.push((q, count));
        }
        let slope = dimension_slope(&counts);
        let ok = (slope - expected as f64).abs() <= 0.75;
        out.note(
            Record::new()
                .push("check", "point-counts")
                .push("spec", spec.to_string())
                .push("track", "slope")
                .push("slope", format!("{slope:.4}"))
                .push("expected", expected),
            ok,
        );
    }
    Ok(out)
}

/// The digit-pattern handoff: support dimensions against the mixed
/// formulas for every classification pattern with r <= 8, plus the flat
/// case display and the irreducibility criterion.
pub fn check_support() -> Result<CheckOutcome, VerifyError> {
    let mut out = CheckOutcome::new("support-varieties");
    let p = 7u64;
    let singular = WeightA2::new(6, 0);
    let regular = WeightA2::new(1, 1);
    for r in 1..=8usize {
        for a in 0..=r {
            let b = r - a;
            // concrete weight: a singular digits in the low positions,
            // then b regular ones
            let (mut c1, mut c2) = (0u64, 0u64);
            for k in 0..r {
                let d = if k < a { singular } else { regular };
                c1 += d.c1 * p.pow(k as u32);
                c2 += d.c2 * p.pow(k as u32);
            }
            let report = support_variety(WeightA2::new(c1, c2), p, r)?;
            let handoff = dim_cijm(a as u32, b as u32, 0);
            let display = case_display_dim(a, b);
            let display_ok = if (a, b) == (1, 0) {
                display == 5 && report.dim == 4
            } else {
                display == report.dim
            };
            let irr_expected = if r == 1 { true } else { a == 0 };
            out.note(
                Record::new()
                    .push("check", "support-varieties")
                    .push("spec", format!("a{a}b{b}"))
                    .push("track", "formula")
                    .push("a", report.a)
                    .push("b", report.b)
                    .push("dim", report.dim)
                    .push("irreducible", report.irreducible),
                report.a == a
                    && report.b == b
                    && report.dim == handoff
                    && display_ok
                    && report.irreducible == irr_expected,
            );
        }
    }
    Ok(out)
}
