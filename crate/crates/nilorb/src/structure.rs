//! The reductive centralizer of an sl₂-triple and its maximal compact subgroup,
//! described by factor lists with closed-form real dimensions.

use std::fmt;

use crate::orbit_enum::{OrbitClass, RealForm};
use crate::signed_diagram::SignMatrix;

/// A classical group, with sizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupKind {
    /// `GL(t, R)`.
    GlR { t: usize },
    /// `GL(t, H)`.
    GlH { t: usize },
    /// `U(p, q)`.
    Upq { p: usize, q: usize },
    /// `O(p, q)`.
    Opq { p: usize, q: usize },
    /// The symplectic group of a real symplectic space of dimension `t` (even).
    SpR { t: usize },
    /// `Sp(p, q)`.
    Sppq { p: usize, q: usize },
    /// `SO*(2t)`.
    SOStar { t: usize },
    /// Compact `U(t)`.
    U { t: usize },
    /// Compact `Sp(t)`.
    SpCpt { t: usize },
    /// Compact `O(t)`.
    O { t: usize },
}

impl GroupKind {
    /// Real dimension.
    pub fn dim(&self) -> usize {
        match *self {
            GroupKind::GlR { t } => t * t,
            GroupKind::GlH { t } => 4 * t * t,
            GroupKind::Upq { p, q } => (p + q) * (p + q),
            GroupKind::Opq { p, q } => (p + q) * (p + q).saturating_sub(1) / 2,
            GroupKind::SpR { t } => t * (t + 1) / 2,
            GroupKind::Sppq { p, q } => (p + q) * (2 * (p + q) + 1),
            GroupKind::SOStar { t } => t * (2 * t).saturating_sub(1),
            GroupKind::U { t } => t * t,
            GroupKind::SpCpt { t } => t * (2 * t + 1),
            GroupKind::O { t } => t * t.saturating_sub(1) / 2,
        }
    }

    /// Dimension of the center of the Lie algebra.
    pub fn center_dim(&self) -> usize {
        match *self {
            GroupKind::U { t } => usize::from(t >= 1),
            GroupKind::O { t } => usize::from(t == 2),
            _ => 0,
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupKind::GlR { t } => write!(f, "GL({t},R)"),
            GroupKind::GlH { t } => write!(f, "GL({t},H)"),
            GroupKind::Upq { p, q } => write!(f, "U({p},{q})"),
            GroupKind::Opq { p, q } => write!(f, "O({p},{q})"),
            GroupKind::SpR { t } => write!(f, "Sp({},R)", t / 2),
            GroupKind::Sppq { p, q } => write!(f, "Sp({p},{q})"),
            GroupKind::SOStar { t } => write!(f, "SO*({})", 2 * t),
            GroupKind::U { t } => write!(f, "U({t})"),
            GroupKind::SpCpt { t } => write!(f, "Sp({t})"),
            GroupKind::O { t } => write!(f, "O({t})"),
        }
    }
}

/// A group embedded diagonally into the `d` copies of the multiplicity space of part `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupFactor {
    pub kind: GroupKind,
    pub part: usize,
}

impl GroupFactor {
    pub fn dim(&self) -> usize {
        self.kind.dim()
    }
}

impl fmt::Display for GroupFactor {
    /// E.g. `U(1,0)^Δ2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^Δ{}", self.kind, self.part)
    }
}

fn render(factors: &[GroupFactor], cut: bool) -> String {
    let body = if factors.is_empty() {
        "1".to_string()
    } else {
        factors.iter().map(ToString::to_string).collect::<Vec<_>>().join(" × ")
    };
    if cut {
        format!("S({body})")
    } else {
        body
    }
}

/// The reductive centralizer `Z(X,H,Y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductiveStructure {
    /// Factors in ascending part order.
    pub factors: Vec<GroupFactor>,
    /// Whether a determinant condition removes one real dimension.
    pub det_constraint_cuts_dim: bool,
    pub dim: usize,
}

impl fmt::Display for ReductiveStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.factors, self.det_constraint_cuts_dim))
    }
}

/// A maximal compact subgroup `K` of `Z(X,H,Y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactStructure {
    /// Factors in ascending part order; trivial factors are omitted.
    pub factors: Vec<GroupFactor>,
    /// Whether a determinant condition removes a continuous direction.
    pub det_constraint_cuts_dim: bool,
    pub dim: usize,
    /// Dimension of the center of the Lie algebra of `K`.
    pub dim_z: usize,
}

impl fmt::Display for CompactStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.factors, self.det_constraint_cuts_dim))
    }
}

fn signs(orbit: &OrbitClass) -> &[SignMatrix] {
    orbit.signed().expect("signed forms carry signed diagrams").signs()
}

/// `Z(X,H,Y)` for the orbit.
pub fn centralizer_structure(orbit: &OrbitClass) -> ReductiveStructure {
    let (factors, cut): (Vec<GroupFactor>, bool) = match orbit.form {
        RealForm::SlR { .. } => {
            let f = orbit.partition().parts().iter().map(|&(d, t)| GroupFactor { kind: GroupKind::GlR { t }, part: d });
            (f.collect(), true)
        }
        RealForm::SlH { .. } => {
            let f = orbit.partition().parts().iter().map(|&(d, t)| GroupFactor { kind: GroupKind::GlH { t }, part: d });
            (f.collect(), true)
        }
        RealForm::SU { .. } => {
            let f =
                signs(orbit).iter().map(|m| GroupFactor { kind: GroupKind::Upq { p: m.p(), q: m.q() }, part: m.d() });
            (f.collect(), true)
        }
        RealForm::SO { .. } => {
            let f = signs(orbit).iter().map(|m| {
                let kind = if m.d() % 2 == 1 { GroupKind::Opq { p: m.p(), q: m.q() } } else { symplectic(m) };
                GroupFactor { kind, part: m.d() }
            });
            (f.collect(), false)
        }
        RealForm::SpR { .. } => {
            let f = signs(orbit).iter().map(|m| {
                let kind = if m.d() % 2 == 1 { symplectic(m) } else { GroupKind::Opq { p: m.p(), q: m.q() } };
                GroupFactor { kind, part: m.d() }
            });
            (f.collect(), false)
        }
        RealForm::SpPQ { .. } => {
            let f = signs(orbit).iter().map(|m| {
                let kind = if m.d() % 2 == 1 {
                    GroupKind::Sppq { p: m.p(), q: m.q() }
                } else {
                    GroupKind::SOStar { t: m.t() }
                };
                GroupFactor { kind, part: m.d() }
            });
            (f.collect(), false)
        }
        RealForm::SOStar { .. } => {
            let f = signs(orbit).iter().map(|m| {
                let kind = if m.d() % 2 == 1 {
                    GroupKind::SOStar { t: m.t() }
                } else {
                    GroupKind::Sppq { p: m.p(), q: m.q() }
                };
                GroupFactor { kind, part: m.d() }
            });
            (f.collect(), false)
        }
    };
    let dim = factors.iter().map(GroupFactor::dim).sum::<usize>() - usize::from(cut);
    ReductiveStructure { factors, det_constraint_cuts_dim: cut, dim }
}

fn symplectic(m: &SignMatrix) -> GroupKind {
    assert!(m.t() % 2 == 0, "part {} carries a symplectic form on an odd-dimensional space (t = {})", m.d(), m.t());
    GroupKind::SpR { t: m.t() }
}

/// A maximal compact subgroup of `Z(X,H,Y)` for the orbit.
pub fn maximal_compact_structure(orbit: &OrbitClass) -> CompactStructure {
    let mut factors = Vec::new();
    let mut push = |kind: GroupKind, part: usize| {
        if kind.dim() > 0 || matches!(kind, GroupKind::O { t: 1 }) {
            factors.push(GroupFactor { kind, part });
        }
    };
    let cut = match orbit.form {
        RealForm::SlR { .. } => {
            for &(d, t) in orbit.partition().parts() {
                push(GroupKind::O { t }, d);
            }
            true
        }
        RealForm::SlH { .. } => {
            for &(d, t) in orbit.partition().parts() {
                push(GroupKind::SpCpt { t }, d);
            }
            false
        }
        RealForm::SU { .. } => {
            for m in signs(orbit) {
                push(GroupKind::U { t: m.p() }, m.d());
                push(GroupKind::U { t: m.q() }, m.d());
            }
            true
        }
        RealForm::SO { .. } => {
            for m in signs(orbit) {
                if m.d() % 2 == 0 {
                    push(GroupKind::U { t: m.t() / 2 }, m.d());
                } else {
                    push(GroupKind::O { t: m.p() }, m.d());
                    push(GroupKind::O { t: m.q() }, m.d());
                }
            }
            false
        }
        RealForm::SOStar { .. } => {
            for m in signs(orbit) {
                if m.d() % 2 == 0 {
                    push(GroupKind::SpCpt { t: m.p() }, m.d());
                    push(GroupKind::SpCpt { t: m.q() }, m.d());
                } else {
                    push(GroupKind::U { t: m.t() }, m.d());
                }
            }
            false
        }
        RealForm::SpR { .. } => {
            for m in signs(orbit) {
                if m.d() % 2 == 0 {
                    push(GroupKind::O { t: m.p() }, m.d());
                    push(GroupKind::O { t: m.q() }, m.d());
                } else {
                    push(GroupKind::U { t: m.t() / 2 }, m.d());
                }
            }
            false
        }
        RealForm::SpPQ { .. } => {
            for m in signs(orbit) {
                if m.d() % 2 == 0 {
                    push(GroupKind::U { t: m.t() }, m.d());
                } else {
                    push(GroupKind::SpCpt { t: m.p() }, m.d());
                    push(GroupKind::SpCpt { t: m.q() }, m.d());
                }
            }
            false
        }
    };
    let cuts_continuous = cut && matches!(orbit.form, RealForm::SU { .. });
    let dim = factors.iter().map(GroupFactor::dim).sum::<usize>() - usize::from(cuts_continuous);
    let dim_z = factors.iter().map(|f| f.kind.center_dim()).sum::<usize>() - usize::from(cuts_continuous);
    CompactStructure { factors, det_constraint_cuts_dim: cut, dim, dim_z }
}
