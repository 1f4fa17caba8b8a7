//! Closed-form dimensions of the first and second real de Rham cohomology of
//! nilpotent orbits.

use std::collections::BTreeSet;
use std::fmt;

use crate::orbit_enum::{OrbitClass, RealForm};
use crate::partition::{classify, Partition};
use crate::signed_diagram::SignedDiagram;

/// Whether the case analysis determines the value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Determined,
    /// The diagram is in the parameter set but matches none of the listed cases.
    PaperGap,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Determined => "determined",
            Status::PaperGap => "paper_gap",
        })
    }
}

/// The outcome of one case analysis, with a human-readable account of the case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evaluation {
    Determined { value: usize, case: String },
    PaperGap { reason: String },
}

impl Evaluation {
    fn det(value: usize, case: impl Into<String>) -> Self {
        Evaluation::Determined { value, case: case.into() }
    }

    pub fn value(&self) -> Option<usize> {
        match self {
            Evaluation::Determined { value, .. } => Some(*value),
            Evaluation::PaperGap { .. } => None,
        }
    }

    /// The case description or gap reason.
    pub fn explanation(&self) -> &str {
        match self {
            Evaluation::Determined { case, .. } => case,
            Evaluation::PaperGap { reason } => reason,
        }
    }
}

/// Both cohomology dimensions of an orbit. Under `PaperGap` both values are unset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyResult {
    pub h1: Option<usize>,
    pub h2: Option<usize>,
    pub status: Status,
    pub h1_case: String,
    pub h2_case: String,
}

pub fn cohomology(orbit: &OrbitClass) -> CohomologyResult {
    let e1 = h1(orbit);
    let e2 = h2(orbit);
    let gap = matches!(e1, Evaluation::PaperGap { .. }) || matches!(e2, Evaluation::PaperGap { .. });
    CohomologyResult {
        h1: if gap { None } else { e1.value() },
        h2: if gap { None } else { e2.value() },
        status: if gap { Status::PaperGap } else { Status::Determined },
        h1_case: e1.explanation().to_string(),
        h2_case: e2.explanation().to_string(),
    }
}

/// `l = #{d : p_d ≠ 0} + #{d : q_d ≠ 0}` for a diagram of su(p,q).
pub fn su_l(diagram: &SignedDiagram) -> usize {
    diagram.signs().iter().map(|m| usize::from(m.p() != 0) + usize::from(m.q() != 0)).sum()
}

/// Odd parts on which the induced form is definite.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DefiniteSets {
    /// Odd parts with `q_θ = 0` (positive definite).
    pub o_plus: BTreeSet<usize>,
    /// Odd parts with `p_θ = 0` (negative definite).
    pub o_minus: BTreeSet<usize>,
}

pub fn definite_sets(diagram: &SignedDiagram) -> DefiniteSets {
    let mut s = DefiniteSets::default();
    for m in diagram.signs().iter().filter(|m| m.d() % 2 == 1) {
        if m.q() == 0 {
            s.o_plus.insert(m.d());
        }
        if m.p() == 0 {
            s.o_minus.insert(m.d());
        }
    }
    s
}

/// The four non-zero orbit shapes of so(p,2) with p > 2, and their mirrors in so(2,q).
///
/// On the `(p,2)` side the "major" sign is `+`; on the `(2,q)` side it is `−` for
/// the rows of odd length. Rows of length 2 always start `+`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SoSmallShape {
    /// `[1^{m−1}, 3]`, every odd row starting with the major sign.
    ThreeMajor,
    /// `[1^{m−1}, 3]`, the 3-row and one 1-row starting with the minor sign.
    ThreeMinor,
    /// `[1^{m−3}, 5]`, every row starting with the major sign.
    Five,
    /// `[1^{m−2}, 2²]`, 1-rows starting with the major sign.
    TwoSquared,
}

/// Which of the two indices equals 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SoSmallSide {
    /// `q = 2`, `p > 2`.
    QIsTwo,
    /// `p = 2`, `q > 2`.
    PIsTwo,
}

/// Structural match of a nonzero so(p,q) diagram with `p = 2` xor `q = 2`
/// (and `p + q > 4`) against the four closed-form shapes.
pub fn so_small_shape(p: usize, q: usize, diagram: &SignedDiagram) -> Option<(SoSmallSide, SoSmallShape)> {
    let (side, m) = match (p, q) {
        (p, 2) if p > 2 => (SoSmallSide::QIsTwo, p),
        (2, q) if q > 2 => (SoSmallSide::PIsTwo, q),
        _ => return None,
    };
    let major = |d: usize| {
        diagram.part(d).map_or(0, |s| match side {
            SoSmallSide::QIsTwo => s.p(),
            SoSmallSide::PIsTwo => s.q(),
        })
    };
    let shape_is = |rows: &[(usize, usize)]| {
        let parts: Vec<(usize, usize)> = rows.iter().copied().filter(|&(_, t)| t > 0).collect();
        Partition::new(parts).is_ok_and(|want| &want == diagram.partition())
    };
    if shape_is(&[(1, m - 1), (3, 1)]) {
        if major(1) == m - 1 && major(3) == 1 {
            return Some((side, SoSmallShape::ThreeMajor));
        }
        if major(1) == m - 2 && major(3) == 0 {
            return Some((side, SoSmallShape::ThreeMinor));
        }
    }
    if shape_is(&[(1, m - 3), (5, 1)]) && major(1) == m - 3 && major(5) == 1 {
        return Some((side, SoSmallShape::Five));
    }
    if shape_is(&[(1, m - 2), (2, 2)]) && major(1) == m - 2 {
        return Some((side, SoSmallShape::TwoSquared));
    }
    None
}

fn describe_shape(side: SoSmallSide, shape: SoSmallShape) -> &'static str {
    match (side, shape) {
        (SoSmallSide::QIsTwo, SoSmallShape::ThreeMajor) => "[1^(p-1),3] with all rows starting +",
        (SoSmallSide::QIsTwo, SoSmallShape::ThreeMinor) => "[1^(p-1),3] with the 3-row and one 1-row starting -",
        (SoSmallSide::QIsTwo, SoSmallShape::Five) => "[1^(p-3),5] with all rows starting +",
        (SoSmallSide::QIsTwo, SoSmallShape::TwoSquared) => "[1^(p-2),2^2] with all rows starting +",
        (SoSmallSide::PIsTwo, SoSmallShape::ThreeMajor) => "[1^(q-1),3] with all rows starting -",
        (SoSmallSide::PIsTwo, SoSmallShape::ThreeMinor) => "[1^(q-1),3] with the 3-row and one 1-row starting +",
        (SoSmallSide::PIsTwo, SoSmallShape::Five) => "[1^(q-3),5] with all rows starting -",
        (SoSmallSide::PIsTwo, SoSmallShape::TwoSquared) => "[1^(q-2),2^2] with 1-rows starting - and 2-rows +",
    }
}

fn signed(orbit: &OrbitClass) -> &SignedDiagram {
    orbit.signed().expect("signed forms carry signed diagrams")
}

fn so_gap(p: usize, q: usize, orbit: &OrbitClass) -> Evaluation {
    Evaluation::PaperGap {
        reason: format!(
            "so({p},{q}): diagram {} lies in the parameter set but matches none of the four closed-form shapes",
            orbit.diagram
        ),
    }
}

/// `dim H²(O, R)`.
pub fn h2(orbit: &OrbitClass) -> Evaluation {
    if orbit.is_zero {
        return Evaluation::det(0, "zero orbit (a point)");
    }
    let classes = classify(orbit.partition());
    let n_e = classes.e_d.len();
    let n_o = classes.o_d.len();
    match orbit.form {
        RealForm::SlR { n } => {
            if n == 2 {
                Evaluation::det(0, "sl_2(R)")
            } else if n_o == 1 && orbit.partition().multiplicity(*classes.o_d.first().expect("one odd part")) == 2 {
                Evaluation::det(1, "sl_n(R), n >= 3: exactly one odd part, of multiplicity 2")
            } else {
                Evaluation::det(0, "sl_n(R), n >= 3: not (one odd part of multiplicity 2)")
            }
        }
        RealForm::SlH { .. } => Evaluation::det(0, "sl_n(H): always 0"),
        RealForm::SU { .. } => {
            let l = su_l(signed(orbit));
            if n_o == 0 {
                Evaluation::det(l - 1, format!("su(p,q): all parts even, h2 = l - 1 with l = {l}"))
            } else if l == 1 {
                Evaluation::det(0, "su(p,q): all parts odd and l = 1")
            } else {
                Evaluation::det(l - 2, format!("su(p,q): an odd part present, h2 = l - 2 with l = {l}"))
            }
        }
        RealForm::SO { p, q } => {
            if (p, q) == (2, 1) || (p, q) == (1, 2) {
                return Evaluation::det(0, format!("so({p},{q}): always 0"));
            }
            if p == 2 || q == 2 {
                let Some((side, shape)) = so_small_shape(p, q, signed(orbit)) else {
                    return so_gap(p, q, orbit);
                };
                let m = p.max(q);
                let v = match shape {
                    SoSmallShape::ThreeMinor | SoSmallShape::TwoSquared => usize::from(m == 4),
                    SoSmallShape::ThreeMajor | SoSmallShape::Five => 0,
                };
                return Evaluation::det(v, format!("so({p},{q}): {}", describe_shape(side, shape)));
            }
            let d = signed(orbit);
            let sets = definite_sets(d);
            let not_minus: Vec<usize> = classes.o_d.iter().copied().filter(|t| !sets.o_minus.contains(t)).collect();
            let not_plus: Vec<usize> = classes.o_d.iter().copied().filter(|t| !sets.o_plus.contains(t)).collect();
            let cond_p = not_minus.len() == 1 && d.part(not_minus[0]).is_some_and(|m| m.p() == 2);
            let cond_q = not_plus.len() == 1 && d.part(not_plus[0]).is_some_and(|m| m.q() == 2);
            match (cond_p, cond_q) {
                (true, true) => Evaluation::det(
                    n_e + 2,
                    "so(p,q): one odd part with p_theta >= 1, having p_theta = 2, and one with q_theta >= 1, having q_theta = 2; h2 = #E + 2",
                ),
                (true, false) | (false, true) => Evaluation::det(
                    n_e + 1,
                    "so(p,q): exactly one of the conditions (unique odd part with p_theta >= 1 has p_theta = 2) and (unique odd part with q_theta >= 1 has q_theta = 2) holds; h2 = #E + 1",
                ),
                (false, false) => Evaluation::det(n_e, "so(p,q): neither definite-part condition holds; h2 = #E"),
            }
        }
        RealForm::SOStar { .. } | RealForm::SpR { .. } => {
            let name = orbit.form.generic_name();
            if n_o == 0 {
                Evaluation::det(0, format!("{name}: no odd parts"))
            } else {
                Evaluation::det(n_o - 1, format!("{name}: h2 = #O - 1 with #O = {n_o}"))
            }
        }
        RealForm::SpPQ { .. } => Evaluation::det(n_e, format!("sp(p,q): h2 = #E = {n_e}")),
    }
}

/// `dim H¹(O, R)`.
pub fn h1(orbit: &OrbitClass) -> Evaluation {
    if orbit.is_zero {
        return Evaluation::det(0, "zero orbit (a point)");
    }
    let classes = classify(orbit.partition());
    let n_o = classes.o_d.len();
    match orbit.form {
        RealForm::SlH { .. } => Evaluation::det(0, "sl_n(H): always 0"),
        RealForm::SpPQ { .. } => Evaluation::det(0, "sp(p,q): always 0"),
        RealForm::SlR { n } => {
            if n == 2 {
                Evaluation::det(1, "sl_2(R): nonzero orbit")
            } else {
                Evaluation::det(0, "sl_n(R), n >= 3")
            }
        }
        RealForm::SU { .. } => {
            let l = su_l(signed(orbit));
            if n_o == 0 {
                Evaluation::det(1, "su(p,q): all parts even")
            } else if l == 1 {
                Evaluation::det(1, "su(p,q): all parts odd and l = 1")
            } else {
                Evaluation::det(0, format!("su(p,q): an odd part present and l = {l} >= 2"))
            }
        }
        RealForm::SO { p, q } => {
            if (p, q) == (2, 1) || (p, q) == (1, 2) {
                return Evaluation::det(1, format!("so({p},{q}): nonzero orbit"));
            }
            if p == 2 || q == 2 {
                let Some((side, shape)) = so_small_shape(p, q, signed(orbit)) else {
                    return so_gap(p, q, orbit);
                };
                let v = usize::from(shape != SoSmallShape::TwoSquared);
                return Evaluation::det(v, format!("so({p},{q}): {}", describe_shape(side, shape)));
            }
            Evaluation::det(0, "so(p,q) with p, q != 2: always 0")
        }
        RealForm::SOStar { .. } | RealForm::SpR { .. } => {
            let name = orbit.form.generic_name();
            if n_o == 0 {
                Evaluation::det(1, format!("{name}: no odd parts"))
            } else {
                Evaluation::det(0, format!("{name}: an odd part present"))
            }
        }
    }
}
