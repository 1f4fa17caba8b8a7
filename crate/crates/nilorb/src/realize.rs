//! Exact matrix realizations of sl₂-triples and invariant forms, and the exact
//! dimension of the centralizer of a triple inside the real form.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::exactlin::{
    congruence_signature, nullspace_dim_real, rank, ExactLinError, ExactMatrix, Quaternion, Rational, ScalarField,
};
use crate::orbit_enum::{OrbitClass, RealForm};
use crate::partition::Partition;
use crate::signed_diagram::{SignMatrix, SignedDiagram};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizeError {
    #[error("{0} preserves no form; realize the triple alone")]
    NoFormForThisAlgebra(String),
    #[error("realization does not match {form}: {reason}")]
    FormMismatch { form: String, reason: String },
    #[error("cannot build the multiplicity form of part {d} with t = {t}, p = {p} for {form}")]
    PreconditionViolated { form: String, d: usize, t: usize, p: usize },
    #[error(transparent)]
    Linear(#[from] ExactLinError),
}

/// The symmetry type of an `ε`-`σ` Hermitian form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormKind {
    Symmetric,
    Symplectic,
    Hermitian,
    SkewHermitian,
}

impl FormKind {
    /// `ε` in `σ(G)ᵗ = ε·G`.
    pub fn epsilon(self) -> i64 {
        match self {
            FormKind::Symmetric | FormKind::Hermitian => 1,
            FormKind::Symplectic | FormKind::SkewHermitian => -1,
        }
    }

    /// The form preserved by the real form, if any.
    pub fn of(form: &RealForm) -> Option<FormKind> {
        match form {
            RealForm::SlR { .. } | RealForm::SlH { .. } => None,
            RealForm::SU { .. } | RealForm::SpPQ { .. } => Some(FormKind::Hermitian),
            RealForm::SO { .. } => Some(FormKind::Symmetric),
            RealForm::SpR { .. } => Some(FormKind::Symplectic),
            RealForm::SOStar { .. } => Some(FormKind::SkewHermitian),
        }
    }
}

impl fmt::Display for FormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormKind::Symmetric => "symmetric",
            FormKind::Symplectic => "symplectic",
            FormKind::Hermitian => "hermitian",
            FormKind::SkewHermitian => "skew_hermitian",
        })
    }
}

/// An sl₂-triple on `D^n`, optionally with the Gram matrix `G` of an invariant form.
///
/// Basis vectors are labelled `(d, j, l)` for the vector `X^l v^d_j`, ordered by
/// ascending `d`, then `j`, then `l`. The form is `⟨u, v⟩ = σ(u)ᵗ G v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixRealization {
    pub field: ScalarField,
    pub n: usize,
    pub partition: Partition,
    pub x: ExactMatrix,
    pub h: ExactMatrix,
    pub y: ExactMatrix,
    pub g: Option<ExactMatrix>,
    /// `(d, j, l)` with `1 ≤ j ≤ t_d` and `0 ≤ l ≤ d − 1`.
    pub basis_index: Vec<(usize, usize, usize)>,
    pub form_kind: Option<FormKind>,
    /// The signature `(p, q)` of the signed diagram, when the form has one.
    pub diagram_signature: Option<(usize, usize)>,
}

/// The standard triple of the partition over `field`.
pub fn build_triple(field: ScalarField, partition: &Partition) -> MatrixRealization {
    let basis_index: Vec<(usize, usize, usize)> = partition
        .parts()
        .iter()
        .flat_map(|&(d, t)| (1..=t).flat_map(move |j| (0..d).map(move |l| (d, j, l))))
        .collect();
    let n = basis_index.len();
    let mut x = ExactMatrix::zeros(field, n, n);
    let mut h = ExactMatrix::zeros(field, n, n);
    let mut y = ExactMatrix::zeros(field, n, n);
    for (i, &(d, _, l)) in basis_index.iter().enumerate() {
        h.set(i, i, Quaternion::from_int(2 * l as i64 + 1 - d as i64));
        if l + 1 < d {
            x.set(i + 1, i, Quaternion::one());
        }
        if l > 0 {
            y.set(i - 1, i, Quaternion::from_int((l * (d - l)) as i64));
        }
    }
    MatrixRealization {
        field,
        n,
        partition: partition.clone(),
        x,
        h,
        y,
        g: None,
        basis_index,
        form_kind: None,
        diagram_signature: None,
    }
}

/// The `t × t` matrix `B[j][j'] = ⟨v_j, X^{d−1} v_{j'}⟩` on the lowest-weight vectors of one part.
fn multiplicity_form(form: &RealForm, m: &SignMatrix) -> Result<Vec<Vec<Quaternion>>, RealizeError> {
    let (d, t, p) = (m.d(), m.t(), m.p());
    let bad = || RealizeError::PreconditionViolated { form: form.to_string(), d, t, p };
    let mut b = vec![vec![Quaternion::zero(); t]; t];
    let sign = |j: usize| Quaternion::from_int(if j < p { 1 } else { -1 });
    let odd = d % 2 == 1;
    match form {
        RealForm::SlR { .. } | RealForm::SlH { .. } => {
            return Err(RealizeError::NoFormForThisAlgebra(form.to_string()))
        }
        RealForm::SU { .. } => {
            for (j, row) in b.iter_mut().enumerate() {
                row[j] = if odd { sign(j) } else { Quaternion::i().scale(&-sign(j).a.clone()) };
            }
        }
        RealForm::SO { .. } if odd => (0..t).for_each(|j| b[j][j] = sign(j)),
        RealForm::SO { .. } => {
            if t % 2 == 1 || p != t {
                return Err(bad());
            }
            for j in (0..t).step_by(2) {
                b[j][j + 1] = Quaternion::one();
                b[j + 1][j] = -Quaternion::one();
            }
        }
        RealForm::SpR { .. } if odd => {
            if t % 2 == 1 {
                return Err(bad());
            }
            for j in 0..t / 2 {
                b[j][t / 2 + j] = Quaternion::one();
                b[t / 2 + j][j] = -Quaternion::one();
            }
        }
        RealForm::SpR { .. } => (0..t).for_each(|j| b[j][j] = sign(j)),
        RealForm::SpPQ { .. } if odd => (0..t).for_each(|j| b[j][j] = sign(j)),
        RealForm::SOStar { .. } if !odd => (0..t).for_each(|j| b[j][j] = sign(j)),
        RealForm::SpPQ { .. } | RealForm::SOStar { .. } => {
            if p != t {
                return Err(bad());
            }
            (0..t).for_each(|j| b[j][j] = Quaternion::j());
        }
    }
    Ok(b)
}

/// Writes `G[(d,j,l),(d,j',l')] = (−1)^l B[j][j']` for `l + l' = d − 1` into `g` at `offset`.
fn place_isotypic(g: &mut ExactMatrix, offset: usize, d: usize, b: &[Vec<Quaternion>]) {
    let t = b.len();
    for j in 0..t {
        for jp in 0..t {
            if b[j][jp].is_zero() {
                continue;
            }
            for l in 0..d {
                let lp = d - 1 - l;
                let v = if l % 2 == 0 { b[j][jp].clone() } else { -b[j][jp].clone() };
                g.set(offset + j * d + l, offset + jp * d + lp, v);
            }
        }
    }
}

/// The Gram matrix of the invariant form restricted to the isotypic block of one part,
/// in the basis `(j, l)` ordered by `j` then `l`.
pub fn part_gram(form: &RealForm, m: &SignMatrix) -> Result<ExactMatrix, RealizeError> {
    let b = multiplicity_form(form, m)?;
    let size = m.d() * m.t();
    let mut g = ExactMatrix::zeros(form.field(), size, size);
    place_isotypic(&mut g, 0, m.d(), &b);
    Ok(g)
}

/// The triple of the orbit together with the Gram matrix of the invariant form.
///
/// The matrices represent the first member of the orbit's fiber.
pub fn build_gram(orbit: &OrbitClass) -> Result<MatrixRealization, RealizeError> {
    let kind = FormKind::of(&orbit.form).ok_or_else(|| RealizeError::NoFormForThisAlgebra(orbit.form.to_string()))?;
    let diagram: &SignedDiagram = orbit.signed().expect("forms with an invariant form use signed diagrams");
    let mut r = build_triple(orbit.form.field(), diagram.partition());
    let mut g = ExactMatrix::zeros(r.field, r.n, r.n);
    let mut offset = 0;
    for m in diagram.signs() {
        let b = multiplicity_form(&orbit.form, m)?;
        place_isotypic(&mut g, offset, m.d(), &b);
        offset += m.d() * m.t();
    }
    r.g = Some(g);
    r.form_kind = Some(kind);
    r.diagram_signature = (kind.epsilon() == 1).then(|| diagram.signature());
    Ok(r)
}

/// The realization used for an orbit: with a Gram matrix when the real form preserves one.
pub fn realize(orbit: &OrbitClass) -> Result<MatrixRealization, RealizeError> {
    match FormKind::of(&orbit.form) {
        Some(_) => build_gram(orbit),
        None => Ok(build_triple(orbit.form.field(), orbit.partition())),
    }
}

/// Real dimension of `{Z ∈ g : [Z,X] = [Z,H] = [Z,Y] = 0}` by exact elimination.
pub fn centralizer_dim(r: &MatrixRealization, form: &RealForm) -> Result<usize, RealizeError> {
    let mismatch = |reason: String| RealizeError::FormMismatch { form: form.to_string(), reason };
    if r.field != form.field() {
        return Err(mismatch(format!("field {} differs from {}", r.field, form.field())));
    }
    if r.n != form.matrix_size() {
        return Err(mismatch(format!("size {} differs from {}", r.n, form.matrix_size())));
    }
    let g = match (FormKind::of(form), &r.g) {
        (Some(_), None) => return Err(mismatch("the Gram matrix is missing".into())),
        (Some(_), Some(g)) => Some(g),
        (None, _) => None,
    };
    let n = r.n;
    let units = r.field.units();
    let unknowns = n * n * units.len();
    let mut blocks: Vec<Box<dyn Fn(usize, usize, &Quaternion, &mut [Vec<Quaternion>]) + '_>> = Vec::new();
    for t in [&r.x, &r.h, &r.y] {
        blocks.push(Box::new(move |a, b, u, m| {
            for (row, out) in m.iter_mut().enumerate() {
                out[b] += &(t.get(row, a) * u);
            }
            for (c, out) in m[a].iter_mut().enumerate() {
                *out -= &(u * t.get(b, c));
            }
        }));
    }
    if let Some(g) = g {
        blocks.push(Box::new(move |a, b, u, m| {
            let su = u.conj();
            for (c, out) in m[b].iter_mut().enumerate() {
                *out += &(&su * g.get(a, c));
            }
            for (row, out) in m.iter_mut().enumerate() {
                out[b] += &(g.get(row, a) * u);
            }
        }));
    }
    let trace_components: &[usize] = match form {
        RealForm::SlR { .. } | RealForm::SlH { .. } => &[0],
        RealForm::SU { .. } => &[0, 1],
        _ => &[],
    };
    let rows_per_block = n * n * 4;
    let total_rows = blocks.len() * rows_per_block + trace_components.len();
    let mut columns: Vec<Vec<Rational>> = Vec::with_capacity(unknowns);
    let mut image = vec![vec![Quaternion::zero(); n]; n];
    for a in 0..n {
        for b in 0..n {
            for u in &units {
                let mut col = vec![Rational::zero(); total_rows];
                for (k, block) in blocks.iter().enumerate() {
                    image.iter_mut().flatten().for_each(|e| *e = Quaternion::zero());
                    block(a, b, u, &mut image);
                    for (idx, e) in image.iter().flatten().enumerate() {
                        for (comp, value) in e.components().into_iter().enumerate() {
                            col[k * rows_per_block + idx * 4 + comp] = value.clone();
                        }
                    }
                }
                if a == b {
                    for (i, &comp) in trace_components.iter().enumerate() {
                        col[blocks.len() * rows_per_block + i] = u.components()[comp].clone();
                    }
                }
                columns.push(col);
            }
        }
    }
    let rows: Vec<Vec<Quaternion>> = (0..total_rows)
        .filter(|&i| columns.iter().any(|c| !c[i].is_zero()))
        .map(|i| columns.iter().map(|c| Quaternion::from_rational(c[i].clone())).collect())
        .collect();
    let system = if rows.is_empty() {
        ExactMatrix::zeros(ScalarField::R, 0, unknowns)
    } else {
        ExactMatrix::from_rows(ScalarField::R, rows)?
    };
    Ok(nullspace_dim_real(&system))
}

/// One named check of [`verify_realization`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of every invariant check on a realization.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(&mut self, name: &'static str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name, passed, detail: detail.into() });
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
        }
        Ok(())
    }
}

/// `rank(X^k) = Σ_d max(d − k, 0)·t_d`.
pub fn jordan_rank(partition: &Partition, k: usize) -> usize {
    partition.parts().iter().map(|&(d, t)| d.saturating_sub(k) * t).sum()
}

/// Checks the triple relations, the Jordan type of `X`, and, when `G` is present,
/// its `ε`-`σ` symmetry, the invariance of `X`, `H`, `Y` and the signature.
pub fn verify_realization(r: &MatrixRealization) -> VerificationReport {
    let mut report = VerificationReport::default();
    let relation = |name: &'static str,
                    lhs: Result<ExactMatrix, ExactLinError>,
                    rhs: ExactMatrix,
                    report: &mut VerificationReport| {
        match lhs {
            Ok(l) => {
                let ok = l == rhs;
                report.push(name, ok, if ok { "holds exactly".to_string() } else { "differs".to_string() });
            }
            Err(e) => report.push(name, false, e.to_string()),
        }
    };
    let two = Quaternion::from_int(2);
    relation("[H,X] = 2X", r.h.commutator(&r.x), r.x.scale(&two), &mut report);
    relation("[H,Y] = -2Y", r.h.commutator(&r.y), r.y.scale(&-two.clone()), &mut report);
    relation("[X,Y] = H", r.x.commutator(&r.y), r.h.clone(), &mut report);

    let largest = r.partition.largest();
    let mut profile_ok = r.x.is_square() && r.x.rows() == r.partition.n();
    let mut detail = String::from("rank(X^k) matches the partition");
    if profile_ok {
        for k in 1..=largest {
            let got = r.x.pow(k).map(|m| rank(&m)).unwrap_or(usize::MAX);
            let want = jordan_rank(&r.partition, k);
            if got != want {
                profile_ok = false;
                detail = format!("rank(X^{k}) = {got}, expected {want}");
                break;
            }
        }
    } else {
        detail = "X has the wrong size".into();
    }
    report.push("Jordan type of X", profile_ok, detail);

    let (Some(g), Some(kind)) = (&r.g, r.form_kind) else {
        return report;
    };
    let eps = Quaternion::from_int(kind.epsilon());
    let sym = g.sigma_transpose() == g.scale(&eps);
    report.push("sigma(G)^t = eps G", sym, format!("{kind} form, eps = {}", kind.epsilon()));
    for (name, z) in [("X preserves the form", &r.x), ("H preserves the form", &r.h), ("Y preserves the form", &r.y)] {
        let lhs = z.sigma_transpose().try_mul(g).and_then(|a| g.try_mul(z).and_then(|b| a.try_add(&b)));
        match lhs {
            Ok(m) => report.push(name, m.is_zero(), if m.is_zero() { "sigma(Z)^t G + G Z = 0" } else { "nonzero" }),
            Err(e) => report.push(name, false, e.to_string()),
        }
    }
    if let Some(want) = r.diagram_signature {
        match congruence_signature(g) {
            Ok(got) => report.push("signature of G", got == want, format!("got {got:?}, diagram {want:?}")),
            Err(e) => report.push("signature of G", false, e.to_string()),
        }
    }
    report
}
