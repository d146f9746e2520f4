//! Closed-form dimension and irreducibility engine for the commuting and
//! mixed commuting varieties, plus the recursive component
//! decomposition.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormulaError {
    #[error("parameters out of range: {0}")]
    Range(String),
}

/// Factor counts of a mixed variety: `i` subregular-closure factors, `j`
/// nilpotent-cone factors, `m` full sl3 factors, in that order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MixedParams {
    pub i: u32,
    pub j: u32,
    pub m: u32,
}

impl MixedParams {
    pub fn new(i: u32, j: u32, m: u32) -> Self {
        MixedParams { i, j, m }
    }

    pub fn r(&self) -> u32 {
        self.i + self.j + self.m
    }
}

impl fmt::Display for MixedParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C[{},{},{}]", self.i, self.j, self.m)
    }
}

/// Dimension of the variety of r-tuples of commuting elements of the
/// subregular centralizer in sl_n: (n-1)r + 2 when the characteristic
/// does not divide n, nr + 1 when it does.
pub fn dim_cr_zsub(n: u32, r: u32, p_divides_n: bool) -> Result<i64, FormulaError> {
    if n < 3 || r < 1 {
        return Err(FormulaError::Range(format!("need n >= 3, r >= 1; got n = {n}, r = {r}")));
    }
    let (n, r) = (n as i64, r as i64);
    Ok(if p_divides_n { n * r + 1 } else { (n - 1) * r + 2 })
}

/// The uniform and nearly-uniform tuple families with linear dimension
/// formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaselineKind {
    /// r-tuples of commuting elements of sl3.
    CrSl3,
    /// r-tuples of commuting nilpotent elements of sl3.
    CrN,
    /// r-tuples of commuting elements of the subregular orbit closure.
    CrOsub,
    /// (r-1)-tuples of sl3 elements commuting with one nilpotent.
    CNSlMixed,
    /// r-tuples of commuting elements of gl3.
    CrGl3,
}

impl fmt::Display for BaselineKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BaselineKind::CrSl3 => "C_r(sl3)",
            BaselineKind::CrN => "C_r(N)",
            BaselineKind::CrOsub => "C_r(Osub)",
            BaselineKind::CNSlMixed => "C(N, sl3^(r-1))",
            BaselineKind::CrGl3 => "C_r(gl3)",
        };
        write!(f, "{s}")
    }
}

pub fn dim_baselines(kind: BaselineKind, r: u32) -> Result<i64, FormulaError> {
    let min_r = match kind {
        BaselineKind::CrGl3 | BaselineKind::CNSlMixed => 2,
        _ => 1,
    };
    if r < min_r {
        return Err(FormulaError::Range(format!("{kind} needs r >= {min_r}; got {r}")));
    }
    let r = r as i64;
    Ok(match kind {
        BaselineKind::CrSl3 => 2 * r + 6,
        BaselineKind::CrN => 2 * r + 4,
        BaselineKind::CrOsub => 2 * r + 2,
        BaselineKind::CNSlMixed => 2 * r + 4,
        BaselineKind::CrGl3 => 3 * r + 6,
    })
}

/// Rank bound driving the sliced decomposition: the largest of the
/// candidate terms m+2, j+m+1, i+j+m, each counted only when the factor
/// family it measures is present. All three absent gives 0.
pub fn n_value(i: u32, j: u32, m: u32) -> i64 {
    let (i, j, m) = (i as i64, j as i64, m as i64);
    let mut best = 0i64;
    if m > 0 {
        best = best.max(m + 2);
    }
    if j > 0 {
        best = best.max(j + m + 1);
    }
    if i > 0 {
        best = best.max(i + j + m);
    }
    best
}

/// Dimension of the mixed commuting variety with factor counts (i, j, m).
/// The empty tuple (0, 0, 0) is the single point 0.
pub fn dim_cijm(i: u32, j: u32, m: u32) -> i64 {
    let r = (i + j + m) as i64;
    if r == 0 {
        return 0;
    }
    if i == 0 {
        if j == 0 {
            return 2 * (m as i64) + 6;
        }
        if m == 0 {
            return 2 * (j as i64) + 4;
        }
        return 2 * (j as i64 + m as i64) + 4;
    }
    if j == 0 && m == 0 {
        return 2 * (i as i64) + 2;
    }
    n_value(i - 1, j, m) + r + 3
}

/// One piece of the recursive decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub label: String,
    pub dim: i64,
}

/// Two-piece decomposition for i >= 1: the saturated orbit piece over the
/// sliced family, and the piece with a zero first factor. The pure case
/// j = m = 0 with i >= 2 instead splits into the two plane-orbit
/// closures, which share one dimension.
pub fn decompose_cijm(i: u32, j: u32, m: u32) -> Result<Vec<Component>, FormulaError> {
    if i == 0 {
        return Err(FormulaError::Range(
            "decomposition needs i >= 1; the i = 0 family is handled by the uniform formulas"
                .into(),
        ));
    }
    if j == 0 && m == 0 && i >= 2 {
        let d = 2 * (i as i64) + 2;
        return Ok(vec![
            Component {
                label: format!("orbit closure of (v, V1^{})", i - 1),
                dim: d,
            },
            Component {
                label: format!("orbit closure of (v, V2^{})", i - 1),
                dim: d,
            },
        ]);
    }
    let r = (i + j + m) as i64;
    Ok(vec![
        Component {
            label: format!("orbit piece over D[{},{},{}]", i - 1, j, m),
            dim: 4 + (r - 1) + n_value(i - 1, j, m),
        },
        Component {
            label: format!("0 x C[{},{},{}]", i - 1, j, m),
            dim: dim_cijm(i - 1, j, m),
        },
    ])
}

/// The mixed commuting variety is irreducible exactly when no subregular
/// factor forces a split: pure sl3 tuples, pure nilpotent tuples, or a
/// single subregular factor alone.
pub fn is_irreducible_cijm(i: u32, j: u32, m: u32) -> bool {
    (i == 0 && j == 0) || (i == 0 && m == 0) || (i == 1 && j == 0 && m == 0)
}

/// The rank-bound inequality relating the full commuting variety to the
/// nilpotent-anchored mixed family: dim C_r(sl3) <= dim C(N, sl3^(r-1)) + 2.
pub fn check_rank_inequality(r: u32) -> Result<bool, FormulaError> {
    if r < 2 {
        return Err(FormulaError::Range(format!("inequality needs r >= 2; got {r}")));
    }
    Ok(dim_baselines(BaselineKind::CrSl3, r)? <= dim_baselines(BaselineKind::CNSlMixed, r)? + 2)
}

/// Advisory lower bound for characteristic 3, where no exact dimension is
/// known: dim C_r(sl3) >= 3r + 2, with reducibility once r > 4.
pub fn char3_lower_bound(r: u32) -> i64 {
    3 * (r as i64) + 2
}

/// Cross-track summary for one variety: the formula value plus whatever
/// independent computations were run, and whether they agree.
#[derive(Clone, Debug)]
pub struct DimensionReport {
    pub label: String,
    pub formula_dim: i64,
    pub groebner_dim: Option<i64>,
    pub pointcount_slopes: Vec<f64>,
    pub irreducible: Option<bool>,
    pub components: Vec<Component>,
    pub slope_tolerance: f64,
}

impl DimensionReport {
    pub fn new(label: impl Into<String>, formula_dim: i64) -> Self {
        DimensionReport {
            label: label.into(),
            formula_dim,
            groebner_dim: None,
            pointcount_slopes: Vec::new(),
            irreducible: None,
            components: Vec::new(),
            slope_tolerance: 0.75,
        }
    }

    pub fn groebner_agrees(&self) -> Option<bool> {
        self.groebner_dim.map(|d| d == self.formula_dim)
    }

    pub fn slopes_agree(&self) -> Option<bool> {
        if self.pointcount_slopes.is_empty() {
            None
        } else {
            Some(self.pointcount_slopes.iter().all(|s| {
                (s - self.formula_dim as f64).abs() <= self.slope_tolerance
            }))
        }
    }

    pub fn all_agree(&self) -> bool {
        self.groebner_agrees().unwrap_or(true) && self.slopes_agree().unwrap_or(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zsub_family() {
        assert_eq!(dim_cr_zsub(3, 4, false).unwrap(), 10);
        assert_eq!(dim_cr_zsub(3, 2, true).unwrap(), 7);
        assert_eq!(dim_cr_zsub(4, 1, false).unwrap(), 5);
        assert!(dim_cr_zsub(2, 1, false).is_err());
        assert!(dim_cr_zsub(3, 0, false).is_err());
    }

    #[test]
    fn baseline_values() {
        assert_eq!(dim_baselines(BaselineKind::CrSl3, 4).unwrap(), 14);
        assert_eq!(dim_baselines(BaselineKind::CrN, 2).unwrap(), 8);
        assert_eq!(dim_baselines(BaselineKind::CrGl3, 2).unwrap(), 12);
        assert_eq!(dim_baselines(BaselineKind::CrOsub, 3).unwrap(), 8);
        assert_eq!(dim_baselines(BaselineKind::CNSlMixed, 5).unwrap(), 14);
        assert!(dim_baselines(BaselineKind::CrGl3, 1).is_err());
    }

    #[test]
    fn rank_bound_values() {
        assert_eq!(n_value(0, 1, 1), 3);
        assert_eq!(n_value(5, 0, 0), 5);
        for m in 1..6 {
            assert_eq!(n_value(0, 0, m), m as i64 + 2);
        }
        assert_eq!(n_value(0, 0, 0), 0);
        assert_eq!(n_value(1, 0, 0), 1);
        assert_eq!(n_value(0, 1, 0), 2);
    }

    #[test]
    fn mixed_dimension_values() {
        assert_eq!(dim_cijm(1, 1, 1), 9);
        assert_eq!(dim_cijm(0, 2, 3), 14);
        for i in 2..7 {
            assert_eq!(dim_cijm(i, 0, 0), 2 * i as i64 + 2);
        }
        assert_eq!(dim_cijm(1, 0, 0), 4);
        assert_eq!(dim_cijm(0, 1, 0), 6);
        assert_eq!(dim_cijm(0, 0, 1), 8);
    }

    #[test]
    fn seams_and_monotonicity() {
        for k in 1..7u32 {
            assert_eq!(dim_cijm(0, 0, k), 2 * k as i64 + 6);
            assert_eq!(dim_cijm(0, k, 0), 2 * k as i64 + 4);
            assert_eq!(dim_cijm(k, 0, 0), 2 * k as i64 + 2);
        }
        for j in 1..7u32 {
            for m in 1..7u32 {
                assert_eq!(
                    dim_cijm(0, j, m),
                    dim_baselines(BaselineKind::CrN, j + m).unwrap()
                );
            }
        }
        for i in 0..=6u32 {
            for j in 0..=6u32 {
                for m in 0..=6u32 {
                    let d = dim_cijm(i, j, m);
                    if i > 0 {
                        assert!(d >= dim_cijm(i - 1, j, m), "drop at ({i},{j},{m}) in i");
                    }
                    if j > 0 {
                        assert!(d >= dim_cijm(i, j - 1, m), "drop at ({i},{j},{m}) in j");
                    }
                    if m > 0 {
                        assert!(d >= dim_cijm(i, j, m - 1), "drop at ({i},{j},{m}) in m");
                    }
                }
            }
        }
    }

    #[test]
    fn decomposition_pieces() {
        let one = decompose_cijm(1, 0, 0).unwrap();
        assert_eq!(one.iter().map(|c| c.dim).collect::<Vec<_>>(), vec![4, 0]);

        let two = decompose_cijm(2, 0, 0).unwrap();
        assert_eq!(two.iter().map(|c| c.dim).collect::<Vec<_>>(), vec![6, 6]);

        let mixed = decompose_cijm(1, 1, 0).unwrap();
        assert_eq!(mixed.iter().map(|c| c.dim).collect::<Vec<_>>(), vec![7, 6]);

        assert!(decompose_cijm(0, 1, 1).is_err());
    }

    #[test]
    fn decomposition_max_matches_formula() {
        for i in 1..=6u32 {
            for j in 0..=6u32 {
                for m in 0..=6u32 {
                    let pieces = decompose_cijm(i, j, m).unwrap();
                    let max = pieces.iter().map(|c| c.dim).max().unwrap();
                    assert_eq!(max, dim_cijm(i, j, m), "mismatch at ({i},{j},{m})");
                }
            }
        }
    }

    #[test]
    fn irreducibility_conditions() {
        assert!(is_irreducible_cijm(0, 0, 5));
        assert!(is_irreducible_cijm(0, 3, 0));
        assert!(is_irreducible_cijm(1, 0, 0));
        assert!(!is_irreducible_cijm(0, 1, 1));
        assert!(!is_irreducible_cijm(2, 0, 0));
        assert!(!is_irreducible_cijm(1, 1, 0));
    }

    #[test]
    fn rank_inequality_holds() {
        for r in 2..=10u32 {
            assert!(check_rank_inequality(r).unwrap());
        }
        // equality exactly at the tightest point
        assert_eq!(
            dim_baselines(BaselineKind::CrSl3, 3).unwrap(),
            dim_baselines(BaselineKind::CNSlMixed, 3).unwrap() + 2
        );
        assert!(check_rank_inequality(1).is_err());
    }

    #[test]
    fn report_agreement() {
        let mut rep = DimensionReport::new("demo", 6);
        assert!(rep.all_agree());
        rep.groebner_dim = Some(6);
        rep.pointcount_slopes = vec![5.8, 6.3];
        assert_eq!(rep.groebner_agrees(), Some(true));
        assert_eq!(rep.slopes_agree(), Some(true));
        rep.pointcount_slopes.push(7.0);
        assert!(!rep.all_agree());
    }
}
