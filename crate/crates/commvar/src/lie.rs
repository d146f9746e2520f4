//! Symbolic sl_n/gl_n layer: Jordan nilpotents, centralizers, generic
//! elements of the subvarieties under study, commutators, and the
//! commuting ideal of a mixed specification.

use std::fmt;

use thiserror::Error;

use crate::groebner::Ideal;
use crate::linalg::FieldMatrix;
use crate::ring::{Coeff, CoefficientField, MonomialOrder, Polynomial, Ring, RingError};

#[derive(Debug, Error)]
pub enum LieError {
    #[error("matrix size mismatch")]
    SizeMismatch,
    #[error("invalid partition {0:?} for size {1}")]
    BadPartition(Vec<usize>, usize),
    #[error("matrix entries must be field constants")]
    NotScalar,
    #[error("unsupported variety ({kind}, n = {n})")]
    UnsupportedSpec { kind: VarietyKind, n: usize },
    #[error("mixed specification factors must share one matrix size")]
    MixedSizeMismatch,
    #[error("mixed specification needs at least one factor")]
    EmptyMixedSpec,
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// A square matrix with polynomial entries, all in one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareMatrix {
    n: usize,
    ring: Ring,
    entries: Vec<Polynomial>, // row-major
}

impl SquareMatrix {
    pub fn zero(ring: &Ring, n: usize) -> Self {
        SquareMatrix {
            n,
            ring: ring.clone(),
            entries: vec![ring.zero(); n * n],
        }
    }

    pub fn from_entries(ring: &Ring, n: usize, entries: Vec<Polynomial>) -> Result<Self, LieError> {
        if entries.len() != n * n {
            return Err(LieError::SizeMismatch);
        }
        for e in &entries {
            if e.ring() != ring {
                return Err(LieError::Ring(RingError::RingMismatch));
            }
        }
        Ok(SquareMatrix {
            n,
            ring: ring.clone(),
            entries,
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn entry(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.n + c]
    }

    pub fn set_entry(&mut self, r: usize, c: usize, v: Polynomial) {
        self.entries[r * self.n + c] = v;
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn add(&self, other: &SquareMatrix) -> Result<SquareMatrix, LieError> {
        if self.n != other.n {
            return Err(LieError::SizeMismatch);
        }
        Ok(SquareMatrix {
            n: self.n,
            ring: self.ring.clone(),
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &SquareMatrix) -> Result<SquareMatrix, LieError> {
        if self.n != other.n {
            return Err(LieError::SizeMismatch);
        }
        Ok(SquareMatrix {
            n: self.n,
            ring: self.ring.clone(),
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.sub(b))
                .collect(),
        })
    }

    pub fn mul(&self, other: &SquareMatrix) -> Result<SquareMatrix, LieError> {
        if self.n != other.n {
            return Err(LieError::SizeMismatch);
        }
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = self.ring.zero();
                for k in 0..n {
                    acc = acc.add(&self.entry(r, k).mul(other.entry(k, c)));
                }
                entries.push(acc);
            }
        }
        Ok(SquareMatrix {
            n,
            ring: self.ring.clone(),
            entries,
        })
    }

    pub fn trace(&self) -> Polynomial {
        let mut acc = self.ring.zero();
        for i in 0..self.n {
            acc = acc.add(self.entry(i, i));
        }
        acc
    }

    /// Determinant by Laplace expansion along the first row.
    pub fn det(&self) -> Polynomial {
        let idx: Vec<usize> = (0..self.n).collect();
        self.det_on(&idx, &idx)
    }

    fn det_on(&self, rows: &[usize], cols: &[usize]) -> Polynomial {
        if rows.is_empty() {
            return self.ring.one();
        }
        let r = rows[0];
        let rest = &rows[1..];
        let mut acc = self.ring.zero();
        for (k, &c) in cols.iter().enumerate() {
            let e = self.entry(r, c);
            if e.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols
                .iter()
                .enumerate()
                .filter_map(|(i, &cc)| if i != k { Some(cc) } else { None })
                .collect();
            let term = e.mul(&self.det_on(rest, &sub_cols));
            if k % 2 == 0 {
                acc = acc.add(&term);
            } else {
                acc = acc.sub(&term);
            }
        }
        acc
    }

    /// Degree-2 characteristic coefficient: the sum of principal 2x2
    /// minors.
    pub fn char_coeff_2(&self) -> Polynomial {
        let mut acc = self.ring.zero();
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                let m = self
                    .entry(i, i)
                    .mul(self.entry(j, j))
                    .sub(&self.entry(i, j).mul(self.entry(j, i)));
                acc = acc.add(&m);
            }
        }
        acc
    }

    /// Extract the constant value of every entry; errors if any entry is
    /// not a field constant.
    pub fn scalar_entries(&self) -> Result<Vec<Coeff>, LieError> {
        let field = self.ring.field();
        self.entries
            .iter()
            .map(|e| {
                if e.is_zero() {
                    Ok(field.zero())
                } else if e.is_constant() {
                    Ok(e.terms()[0].1.clone())
                } else {
                    Err(LieError::NotScalar)
                }
            })
            .collect()
    }
}

impl fmt::Display for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.n {
            write!(f, "[")?;
            for c in 0..self.n {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entry(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// AB - BA with fully expanded entries.
pub fn commutator(a: &SquareMatrix, b: &SquareMatrix) -> Result<SquareMatrix, LieError> {
    a.mul(b)?.sub(&b.mul(a)?)
}

/// Block-diagonal nilpotent with ones on the subdiagonal of each Jordan
/// block (lower-triangular convention), over a variable-free ring.
pub fn jordan_nilpotent(partition: &[usize], ring: &Ring) -> Result<SquareMatrix, LieError> {
    let n: usize = partition.iter().sum();
    if partition.is_empty() || partition.iter().any(|&p| p == 0) {
        return Err(LieError::BadPartition(partition.to_vec(), n));
    }
    let mut m = SquareMatrix::zero(ring, n);
    let mut offset = 0usize;
    for &block in partition {
        for i in 1..block {
            m.set_entry(offset + i, offset + i - 1, ring.one());
        }
        offset += block;
    }
    Ok(m)
}

/// A ring with no variables, for matrices of plain field scalars.
pub fn scalar_ring(field: CoefficientField) -> Ring {
    Ring::new(Vec::<String>::new(), MonomialOrder::Grevlex, field).expect("no duplicate names")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ambient {
    Sl,
    Gl,
}

/// Basis of {X : Xe = eX} (intersected with trace zero for `Sl`),
/// computed as the kernel of X -> Xe - eX by exact elimination. `e` must
/// have scalar entries.
pub fn centralizer_basis(
    e: &SquareMatrix,
    ambient: Ambient,
) -> Result<Vec<SquareMatrix>, LieError> {
    let n = e.size();
    let field = e.ring().field().clone();
    let ev = e.scalar_entries()?;
    let at = |r: usize, c: usize| ev[r * n + c].clone();
    let nn = n * n;
    let extra = if ambient == Ambient::Sl { 1 } else { 0 };
    let mut rows = Vec::with_capacity(nn + extra);
    for k in 0..n {
        for l in 0..n {
            // (Xe - eX)_{kl} as a linear form in the unknowns x_{ij}
            let mut row = vec![field.zero(); nn];
            for j in 0..n {
                // + x_{kj} e_{jl}
                let idx = k * n + j;
                row[idx] = field.add(&row[idx], &at(j, l));
                // - e_{kj} x_{jl}
                let idx = j * n + l;
                row[idx] = field.sub(&row[idx], &at(k, j));
            }
            rows.push(row);
        }
    }
    if ambient == Ambient::Sl {
        let mut row = vec![field.zero(); nn];
        for i in 0..n {
            row[i * n + i] = field.one();
        }
        rows.push(row);
    }
    let system = FieldMatrix::from_rows(field.clone(), rows);
    let kernel = system.kernel_basis();
    let ring = e.ring().clone();
    kernel
        .into_iter()
        .map(|v| {
            let entries = v.into_iter().map(|c| ring.constant(c)).collect();
            SquareMatrix::from_entries(&ring, n, entries)
        })
        .collect()
}

/// The subvarieties of sl_n tracked by the workbench.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VarietyKind {
    /// All of sl_n (trace zero).
    FullSl,
    /// All of gl_n.
    FullGl,
    /// Nilpotent matrices (n = 3): vanishing nonconstant characteristic
    /// coefficients.
    NilpotentCone,
    /// Closure of the subregular orbit (n = 3): trace-zero X with X^2 = 0.
    SubregClosure,
    /// Centralizer of the Jordan nilpotent of partition [n-1, 1].
    ZSub,
    /// Nilpotent part of that centralizer (n = 3).
    ZSubCapN,
    /// Intersection with the subregular closure (n = 3), the union of the
    /// two planes below.
    ZSubCapOsub,
    V1,
    V2,
}

impl fmt::Display for VarietyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            VarietyKind::FullSl => "sl",
            VarietyKind::FullGl => "gl",
            VarietyKind::NilpotentCone => "nilcone",
            VarietyKind::SubregClosure => "subreg",
            VarietyKind::ZSub => "zsub",
            VarietyKind::ZSubCapN => "zsub_nil",
            VarietyKind::ZSubCapOsub => "zsub_subreg",
            VarietyKind::V1 => "v1",
            VarietyKind::V2 => "v2",
        };
        write!(f, "{s}")
    }
}

impl std::str::FromStr for VarietyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "sl" | "full_sl" => VarietyKind::FullSl,
            "gl" | "full_gl" => VarietyKind::FullGl,
            "nilcone" | "N" | "nilpotent_cone" => VarietyKind::NilpotentCone,
            "subreg" | "Osub" | "subreg_closure" => VarietyKind::SubregClosure,
            "zsub" | "z_sub" => VarietyKind::ZSub,
            "zsub_nil" | "z_sub_cap_N" => VarietyKind::ZSubCapN,
            "zsub_subreg" | "z_sub_cap_Osub" => VarietyKind::ZSubCapOsub,
            "v1" | "V1" => VarietyKind::V1,
            "v2" | "V2" => VarietyKind::V2,
            other => return Err(format!("unknown variety kind `{other}`")),
        })
    }
}

/// One factor of a mixed specification: a subvariety of sl_n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VarietySpec {
    pub kind: VarietyKind,
    pub n: usize,
}

impl VarietySpec {
    pub fn new(kind: VarietyKind, n: usize) -> Self {
        VarietySpec { kind, n }
    }

    /// Dimension of the subvariety itself, used to order enumeration.
    pub fn dim(&self) -> i64 {
        let n = self.n as i64;
        match self.kind {
            VarietyKind::FullSl => n * n - 1,
            VarietyKind::FullGl => n * n,
            VarietyKind::NilpotentCone => n * n - n, // 6 for n = 3
            VarietyKind::SubregClosure => 4,
            VarietyKind::ZSub => n + 1,
            VarietyKind::ZSubCapN => 3,
            VarietyKind::ZSubCapOsub => 2,
            VarietyKind::V1 | VarietyKind::V2 => 2,
        }
    }

    pub fn is_linear(&self) -> bool {
        matches!(
            self.kind,
            VarietyKind::FullSl
                | VarietyKind::FullGl
                | VarietyKind::ZSub
                | VarietyKind::ZSubCapN
                | VarietyKind::V1
                | VarietyKind::V2
        )
    }
}

/// An ordered list of factors sharing one matrix size; encodes the
/// variety of pairwise-commuting tuples drawn factor-wise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedSpec {
    factors: Vec<VarietySpec>,
}

impl MixedSpec {
    pub fn new(factors: Vec<VarietySpec>) -> Result<Self, LieError> {
        if factors.is_empty() {
            return Err(LieError::EmptyMixedSpec);
        }
        let n = factors[0].n;
        if factors.iter().any(|f| f.n != n) {
            return Err(LieError::MixedSizeMismatch);
        }
        Ok(MixedSpec { factors })
    }

    pub fn uniform(kind: VarietyKind, n: usize, r: usize) -> Result<Self, LieError> {
        MixedSpec::new(vec![VarietySpec::new(kind, n); r])
    }

    pub fn factors(&self) -> &[VarietySpec] {
        &self.factors
    }

    pub fn r(&self) -> usize {
        self.factors.len()
    }

    pub fn n(&self) -> usize {
        self.factors[0].n
    }
}

impl fmt::Display for MixedSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|s| s.kind.to_string()).collect();
        write!(f, "{}:n{}", parts.join("+"), self.n())
    }
}

/// Variable names for one factor, in declaration order.
pub fn factor_vars(kind: VarietyKind, n: usize, tag: &str) -> Result<Vec<String>, LieError> {
    let mut names = Vec::new();
    match kind {
        VarietyKind::FullSl | VarietyKind::NilpotentCone | VarietyKind::SubregClosure => {
            if matches!(kind, VarietyKind::NilpotentCone | VarietyKind::SubregClosure) && n != 3 {
                return Err(LieError::UnsupportedSpec { kind, n });
            }
            for r in 1..=n {
                for c in 1..=n {
                    if r == n && c == n {
                        continue; // trace constraint fixes the last diagonal entry
                    }
                    names.push(format!("a{r}{c}{tag}"));
                }
            }
        }
        VarietyKind::FullGl => {
            for r in 1..=n {
                for c in 1..=n {
                    names.push(format!("a{r}{c}{tag}"));
                }
            }
        }
        VarietyKind::ZSub => {
            if n < 3 {
                return Err(LieError::UnsupportedSpec { kind, n });
            }
            names.push(format!("x{tag}"));
            for j in 2..n {
                if n == 3 {
                    names.push(format!("y{tag}"));
                } else {
                    names.push(format!("y{j}{tag}"));
                }
            }
            names.push(format!("z{tag}"));
            names.push(format!("t{tag}"));
        }
        VarietyKind::ZSubCapN => {
            if n != 3 {
                return Err(LieError::UnsupportedSpec { kind, n });
            }
            names.push(format!("y{tag}"));
            names.push(format!("z{tag}"));
            names.push(format!("t{tag}"));
        }
        VarietyKind::V1 => {
            if n != 3 {
                return Err(LieError::UnsupportedSpec { kind, n });
            }
            names.push(format!("y{tag}"));
            names.push(format!("z{tag}"));
        }
        VarietyKind::V2 => {
            if n != 3 {
                return Err(LieError::UnsupportedSpec { kind, n });
            }
            names.push(format!("y{tag}"));
            names.push(format!("t{tag}"));
        }
        VarietyKind::ZSubCapOsub => {
            // a union of two planes, not a single parametrized matrix
            return Err(LieError::UnsupportedSpec { kind, n });
        }
    }
    Ok(names)
}

/// Realize one factor inside `ring` (which must contain the factor's
/// variables): the parametrized matrix plus its constraint polynomials.
pub fn realize_factor(
    kind: VarietyKind,
    n: usize,
    ring: &Ring,
    tag: &str,
) -> Result<(SquareMatrix, Vec<Polynomial>), LieError> {
    let mut m = SquareMatrix::zero(ring, n);
    match kind {
        VarietyKind::FullSl | VarietyKind::NilpotentCone | VarietyKind::SubregClosure => {
            let mut diag_sum = ring.zero();
            for r in 1..=n {
                for c in 1..=n {
                    if r == n && c == n {
                        continue;
                    }
                    let v = ring.var(&format!("a{r}{c}{tag}"))?;
                    if r == c {
                        diag_sum = diag_sum.add(&v);
                    }
                    m.set_entry(r - 1, c - 1, v);
                }
            }
            m.set_entry(n - 1, n - 1, diag_sum.neg());
            let constraints = match kind {
                VarietyKind::NilpotentCone => vec![m.char_coeff_2(), m.det()],
                VarietyKind::SubregClosure => {
                    let sq = m.mul(&m)?;
                    sq.entries().iter().filter(|e| !e.is_zero()).cloned().collect()
                }
                _ => vec![],
            };
            Ok((m, constraints))
        }
        VarietyKind::FullGl => {
            for r in 1..=n {
                for c in 1..=n {
                    m.set_entry(r - 1, c - 1, ring.var(&format!("a{r}{c}{tag}"))?);
                }
            }
            Ok((m, vec![]))
        }
        VarietyKind::ZSub => {
            let x = ring.var(&format!("x{tag}"))?;
            let mut toeplitz = vec![x.clone()];
            for j in 2..n {
                let name = if n == 3 {
                    format!("y{tag}")
                } else {
                    format!("y{j}{tag}")
                };
                toeplitz.push(ring.var(&name)?);
            }
            for i in 0..(n - 1) {
                for j in 0..=i {
                    m.set_entry(i, j, toeplitz[i - j].clone());
                }
            }
            m.set_entry(n - 2, n - 1, ring.var(&format!("t{tag}"))?);
            m.set_entry(n - 1, 0, ring.var(&format!("z{tag}"))?);
            m.set_entry(n - 1, n - 1, x.scale(&ring.field().from_i64(1 - n as i64)));
            Ok((m, vec![]))
        }
        VarietyKind::ZSubCapN => {
            m.set_entry(1, 0, ring.var(&format!("y{tag}"))?);
            m.set_entry(1, 2, ring.var(&format!("t{tag}"))?);
            m.set_entry(2, 0, ring.var(&format!("z{tag}"))?);
            Ok((m, vec![]))
        }
        VarietyKind::V1 => {
            m.set_entry(1, 0, ring.var(&format!("y{tag}"))?);
            m.set_entry(2, 0, ring.var(&format!("z{tag}"))?);
            Ok((m, vec![]))
        }
        VarietyKind::V2 => {
            m.set_entry(1, 0, ring.var(&format!("y{tag}"))?);
            m.set_entry(1, 2, ring.var(&format!("t{tag}"))?);
            Ok((m, vec![]))
        }
        VarietyKind::ZSubCapOsub => Err(LieError::UnsupportedSpec { kind, n }),
    }
}

/// Generic element of a subvariety in a fresh ring: a matrix of
/// indeterminates named with the tag, plus the constraint ideal.
pub fn generic_element(
    spec: &VarietySpec,
    tag: &str,
    field: CoefficientField,
    order: MonomialOrder,
) -> Result<(SquareMatrix, Ideal), LieError> {
    let names = factor_vars(spec.kind, spec.n, tag)?;
    let ring = Ring::new(names, order, field)?;
    let (m, constraints) = realize_factor(spec.kind, spec.n, &ring, tag)?;
    Ok((m, Ideal::new(ring, constraints)?))
}

/// For linear subvarieties, a basis of the span as flattened n x n scalar
/// matrices; `None` for the nonlinear kinds.
pub fn span_basis(
    spec: &VarietySpec,
    field: &CoefficientField,
) -> Result<Option<Vec<Vec<Coeff>>>, LieError> {
    if !spec.is_linear() {
        return Ok(None);
    }
    let (m, _) = generic_element(spec, "", field.clone(), MonomialOrder::Grevlex)?;
    let ring = m.ring().clone();
    let nvars = ring.num_vars();
    let mut basis = Vec::with_capacity(nvars);
    for v in 0..nvars {
        let mut flat = Vec::with_capacity(spec.n * spec.n);
        for r in 0..spec.n {
            for c in 0..spec.n {
                // coefficient of variable v in the (linear) entry
                let mut coeff = field.zero();
                for (mon, co) in m.entry(r, c).terms() {
                    if mon.exps()[v] == 1 && mon.degree() == 1 {
                        coeff = field.add(&coeff, co);
                    }
                }
                flat.push(coeff);
            }
        }
        basis.push(flat);
    }
    Ok(Some(basis))
}

/// The commuting ideal of a mixed specification, in the joint ring of all
/// factors' indeterminates (factor 1's variables first): each factor's
/// constraints plus every entry of every pairwise commutator.
pub fn commuting_ideal(
    spec: &MixedSpec,
    field: CoefficientField,
    order: MonomialOrder,
) -> Result<Ideal, LieError> {
    let n = spec.n();
    let mut names = Vec::new();
    for (k, f) in spec.factors().iter().enumerate() {
        names.extend(factor_vars(f.kind, n, &format!("{}", k + 1))?);
    }
    let ring = Ring::new(names, order, field)?;
    let mut matrices = Vec::with_capacity(spec.r());
    let mut gens = Vec::new();
    for (k, f) in spec.factors().iter().enumerate() {
        let (m, constraints) = realize_factor(f.kind, n, &ring, &format!("{}", k + 1))?;
        gens.extend(constraints);
        matrices.push(m);
    }
    for i in 0..matrices.len() {
        for j in (i + 1)..matrices.len() {
            let c = commutator(&matrices[i], &matrices[j])?;
            for e in c.entries() {
                if !e.is_zero() {
                    gens.push(e.clone());
                }
            }
        }
    }
    Ok(Ideal::new(ring, gens)?)
}

/// Outcome of the symbolic intersection checks for n = 3.
#[derive(Clone, Debug)]
pub struct IntersectionReport {
    /// Substituting the centralizer slice into the nilpotency constraints
    /// cuts out exactly the hyperplane x = 0.
    pub nilpotent_slice_ok: bool,
    /// Adding the square-zero constraints to the nilpotent slice cuts out
    /// exactly z t = 0, the union of the two planes.
    pub square_zero_slice_ok: bool,
    /// Elements of the two planes commute within each plane, and the
    /// cross commutator is a nonzero polynomial matrix.
    pub dichotomy_ok: bool,
    pub details: Vec<String>,
}

impl IntersectionReport {
    pub fn all_ok(&self) -> bool {
        self.nilpotent_slice_ok && self.square_zero_slice_ok && self.dichotomy_ok
    }
}

/// Symbolic verification of the three structural identities that drive
/// the slice decomposition at n = 3.
pub fn verify_intersections(field: CoefficientField) -> Result<IntersectionReport, LieError> {
    use crate::groebner::{is_member, reduce, GroebnerConfig};
    let cfg = GroebnerConfig::default();
    let mut details = Vec::new();

    // (i) the nilpotency constraints on the centralizer slice cut out x = 0
    let (zsub, _) = generic_element(
        &VarietySpec::new(VarietyKind::ZSub, 3),
        "",
        field.clone(),
        MonomialOrder::Grevlex,
    )?;
    let ring = zsub.ring().clone();
    let x = ring.var("x")?;
    let nil_gens: Vec<Polynomial> = [zsub.char_coeff_2(), zsub.det()]
        .into_iter()
        .filter(|p| !p.is_zero())
        .collect();
    let nil_ideal = Ideal::new(ring.clone(), nil_gens.clone())?;
    let contained = nil_gens.iter().all(|g| reduce(g, &[x.clone()]).is_zero());
    let mut some_power = false;
    for k in 1..=4 {
        if is_member(&x.pow(k), &nil_ideal, &cfg).map_err(|_| RingError::Parse("budget".into()))? {
            some_power = true;
            break;
        }
    }
    let nilpotent_slice_ok = contained && some_power;
    details.push(format!(
        "nilpotency constraints on the slice: {:?} (locus x = 0: {})",
        nil_gens.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        nilpotent_slice_ok
    ));

    // (ii) the square-zero constraints on the nilpotent slice cut out z t = 0
    let (znil, _) = generic_element(
        &VarietySpec::new(VarietyKind::ZSubCapN, 3),
        "",
        field.clone(),
        MonomialOrder::Grevlex,
    )?;
    let ring2 = znil.ring().clone();
    let zt = ring2.var("z")?.mul(&ring2.var("t")?);
    let sq = znil.mul(&znil)?;
    let sq_gens: Vec<Polynomial> = sq.entries().iter().filter(|e| !e.is_zero()).cloned().collect();
    let sq_ideal = Ideal::new(ring2.clone(), sq_gens.clone())?;
    let contained = sq_gens.iter().all(|g| reduce(g, &[zt.clone()]).is_zero());
    let mut some_power = false;
    for k in 1..=2 {
        if is_member(&zt.pow(k), &sq_ideal, &cfg).map_err(|_| RingError::Parse("budget".into()))? {
            some_power = true;
            break;
        }
    }
    let square_zero_slice_ok = contained && some_power;
    details.push(format!(
        "square-zero constraints on the nilpotent slice: {:?} (locus z*t = 0: {})",
        sq_gens.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        square_zero_slice_ok
    ));

    // (iii) commutation dichotomy between the two planes
    let pair = |a: VarietyKind, b: VarietyKind| -> Result<SquareMatrix, LieError> {
        let spec = MixedSpec::new(vec![VarietySpec::new(a, 3), VarietySpec::new(b, 3)])?;
        let n = spec.n();
        let mut names = Vec::new();
        for (k, f) in spec.factors().iter().enumerate() {
            names.extend(factor_vars(f.kind, n, &format!("{}", k + 1))?);
        }
        let r = Ring::new(names, MonomialOrder::Grevlex, field.clone())?;
        let (m1, _) = realize_factor(a, n, &r, "1")?;
        let (m2, _) = realize_factor(b, n, &r, "2")?;
        commutator(&m1, &m2)
    };
    let within_v1 = pair(VarietyKind::V1, VarietyKind::V1)?;
    let within_v2 = pair(VarietyKind::V2, VarietyKind::V2)?;
    let across = pair(VarietyKind::V1, VarietyKind::V2)?;
    let dichotomy_ok = within_v1.is_zero() && within_v2.is_zero() && !across.is_zero();
    let witness: Vec<String> = across
        .entries()
        .iter()
        .filter(|e| !e.is_zero())
        .map(|e| e.to_string())
        .collect();
    details.push(format!(
        "within-plane commutators vanish: {}, {}; cross commutator entries: {:?}",
        within_v1.is_zero(),
        within_v2.is_zero(),
        witness
    ));

    Ok(IntersectionReport {
        nilpotent_slice_ok,
        square_zero_slice_ok,
        dichotomy_ok,
        details,
    })
}
