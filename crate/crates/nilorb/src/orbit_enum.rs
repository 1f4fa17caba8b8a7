//! The seven families of non-compact classical real simple Lie algebras and the
//! enumeration of their nilpotent orbits.
//!
//! Each orbit is labelled by a (signed) Young diagram together with an index into
//! the fiber of the parametrization map over that diagram.

use std::fmt;

use thiserror::Error;

use crate::exactlin::ScalarField;
use crate::partition::{enumerate_partitions, predicates, Partition};
use crate::signed_diagram::{check_membership, enumerate_set, in_s_prime, DiagramSet, SetParams, SignedDiagram};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbitError {
    #[error("{0}")]
    InvalidForm(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not in the parameter set: {0}")]
    NotInParamSet(String),
    #[error("fiber index {index} out of range 1..={size}")]
    BadFiberIndex { index: usize, size: usize },
}

/// A real form, with the parameters naming it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RealForm {
    /// sl_n(R)
    SlR { n: usize },
    /// sl_n(H)
    SlH { n: usize },
    /// su(p,q)
    SU { p: usize, q: usize },
    /// so(p,q)
    SO { p: usize, q: usize },
    /// so*(2n)
    SOStar { n: usize },
    /// sp(n,R)
    SpR { n: usize },
    /// sp(p,q)
    SpPQ { p: usize, q: usize },
}

impl RealForm {
    /// Checks the simplicity and non-compactness restrictions.
    pub fn validate(&self) -> Result<(), OrbitError> {
        let bad = |msg: String| Err(OrbitError::InvalidForm(msg));
        match *self {
            RealForm::SlR { n } | RealForm::SlH { n } if n < 2 => bad(format!("{self} requires n >= 2")),
            RealForm::SU { p, q } | RealForm::SO { p, q } | RealForm::SpPQ { p, q } if p == 0 || q == 0 => {
                bad(format!("{self} is compact; p >= 1 and q >= 1 are required"))
            }
            RealForm::SO { p, q } if (p, q) == (1, 1) || (p, q) == (2, 2) => bad(format!("{self} is not simple")),
            RealForm::SOStar { n } if n < 3 => bad(format!("{self} requires n >= 3")),
            RealForm::SpR { n: 0 } => bad(format!("{self} requires n >= 1")),
            _ => Ok(()),
        }
    }

    /// The family name used on the command line.
    pub fn family(&self) -> &'static str {
        match self {
            RealForm::SlR { .. } => "sl_r",
            RealForm::SlH { .. } => "sl_h",
            RealForm::SU { .. } => "su",
            RealForm::SO { .. } => "so",
            RealForm::SOStar { .. } => "so_star",
            RealForm::SpR { .. } => "sp_r",
            RealForm::SpPQ { .. } => "sp_pq",
        }
    }

    /// The family written generically, e.g. `so(p,q)`.
    pub fn generic_name(&self) -> &'static str {
        match self {
            RealForm::SlR { .. } => "sl_n(R)",
            RealForm::SlH { .. } => "sl_n(H)",
            RealForm::SU { .. } => "su(p,q)",
            RealForm::SO { .. } => "so(p,q)",
            RealForm::SOStar { .. } => "so*(2n)",
            RealForm::SpR { .. } => "sp(n,R)",
            RealForm::SpPQ { .. } => "sp(p,q)",
        }
    }

    /// The division algebra of the defining representation.
    pub fn field(&self) -> ScalarField {
        match self {
            RealForm::SlR { .. } | RealForm::SO { .. } | RealForm::SpR { .. } => ScalarField::R,
            RealForm::SU { .. } => ScalarField::C,
            RealForm::SlH { .. } | RealForm::SOStar { .. } | RealForm::SpPQ { .. } => ScalarField::H,
        }
    }

    /// Dimension over the field of the defining representation.
    pub fn matrix_size(&self) -> usize {
        match *self {
            RealForm::SlR { n } | RealForm::SlH { n } | RealForm::SOStar { n } => n,
            RealForm::SpR { n } => 2 * n,
            RealForm::SU { p, q } | RealForm::SO { p, q } | RealForm::SpPQ { p, q } => p + q,
        }
    }

    /// Whether orbits carry signs (every family except sl_n(R) and sl_n(H)).
    pub fn is_signed(&self) -> bool {
        self.diagram_set().is_some()
    }

    /// The diagram set parametrizing the orbits, `None` for bare partitions.
    pub fn diagram_set(&self) -> Option<(DiagramSet, SetParams)> {
        match *self {
            RealForm::SlR { .. } | RealForm::SlH { .. } => None,
            RealForm::SU { p, q } => Some((DiagramSet::Y, SetParams::Signature { p, q })),
            RealForm::SO { p, q } => Some((DiagramSet::YEven1, SetParams::Signature { p, q })),
            RealForm::SpPQ { p, q } => Some((DiagramSet::YEven, SetParams::Signature { p, q })),
            RealForm::SOStar { n } => Some((DiagramSet::YOdd, SetParams::Size { n })),
            RealForm::SpR { n } => Some((DiagramSet::YOddMinus1, SetParams::Size { n: 2 * n })),
        }
    }
}

impl fmt::Display for RealForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RealForm::SlR { n } => write!(f, "sl_{n}(R)"),
            RealForm::SlH { n } => write!(f, "sl_{n}(H)"),
            RealForm::SU { p, q } => write!(f, "su({p},{q})"),
            RealForm::SO { p, q } => write!(f, "so({p},{q})"),
            RealForm::SOStar { n } => write!(f, "so*({})", 2 * n),
            RealForm::SpR { n } => write!(f, "sp({n},R)"),
            RealForm::SpPQ { p, q } => write!(f, "sp({p},{q})"),
        }
    }
}

/// The combinatorial label of an orbit: a bare partition or a signed diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrbitDiagram {
    Unsigned(Partition),
    Signed(SignedDiagram),
}

impl OrbitDiagram {
    pub fn partition(&self) -> &Partition {
        match self {
            OrbitDiagram::Unsigned(p) => p,
            OrbitDiagram::Signed(d) => d.partition(),
        }
    }

    pub fn signed(&self) -> Option<&SignedDiagram> {
        match self {
            OrbitDiagram::Unsigned(_) => None,
            OrbitDiagram::Signed(d) => Some(d),
        }
    }
}

impl fmt::Display for OrbitDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitDiagram::Unsigned(p) => p.fmt(f),
            OrbitDiagram::Signed(d) => d.fmt(f),
        }
    }
}

/// One nilpotent orbit: its diagram and its position in the fiber over it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrbitClass {
    pub form: RealForm,
    pub diagram: OrbitDiagram,
    pub fiber_index: usize,
    pub fiber_size: usize,
    pub is_zero: bool,
}

impl OrbitClass {
    pub fn partition(&self) -> &Partition {
        self.diagram.partition()
    }

    pub fn signed(&self) -> Option<&SignedDiagram> {
        self.diagram.signed()
    }
}

/// Number of orbits sharing the diagram.
///
/// sl_n(R): 2 over even partitions. so(p,q): 4 over very even partitions, 2 over
/// the remaining partitions in P₁ whose diagram lies in S′, otherwise 1. Every
/// other family has fibers of size 1.
pub fn fiber_size(form: &RealForm, diagram: &OrbitDiagram) -> usize {
    let flags = predicates(diagram.partition());
    match (form, diagram) {
        (RealForm::SlR { .. }, _) if flags.is_even => 2,
        (RealForm::SO { .. }, OrbitDiagram::Signed(d)) => {
            if flags.is_very_even {
                4
            } else if flags.in_p1 && in_s_prime(d).unwrap_or(false) {
                2
            } else {
                1
            }
        }
        _ => 1,
    }
}

/// All orbit classes of a form, ordered by partition, then by the `p_d` tuple,
/// then by fiber index.
pub fn enumerate_orbits(form: &RealForm) -> Result<Vec<OrbitClass>, OrbitError> {
    form.validate()?;
    let diagrams: Vec<OrbitDiagram> = match form.diagram_set() {
        None => enumerate_partitions(form.matrix_size())
            .map_err(|e| OrbitError::InvalidForm(e.to_string()))?
            .into_iter()
            .map(OrbitDiagram::Unsigned)
            .collect(),
        Some((kind, params)) => enumerate_set(kind, params)
            .map_err(|e| OrbitError::InvalidForm(e.to_string()))?
            .into_iter()
            .map(OrbitDiagram::Signed)
            .collect(),
    };
    let mut out = Vec::new();
    for diagram in diagrams {
        let size = fiber_size(form, &diagram);
        let is_zero = diagram.partition().is_trivial();
        for fiber_index in 1..=size {
            out.push(OrbitClass { form: *form, diagram: diagram.clone(), fiber_index, fiber_size: size, is_zero });
        }
    }
    Ok(out)
}

/// Parses a diagram (or, for sl_n(R) and sl_n(H), a partition) and selects the
/// orbit with the given fiber index.
pub fn parse_orbit(form: &RealForm, text: &str, fiber_index: usize) -> Result<OrbitClass, OrbitError> {
    form.validate()?;
    let diagram = match form.diagram_set() {
        None => {
            let p: Partition =
                text.parse().map_err(|e: crate::partition::PartitionError| OrbitError::Parse(e.to_string()))?;
            if p.n() != form.matrix_size() {
                return Err(OrbitError::NotInParamSet(format!(
                    "partition of {} is not a partition of {} for {}",
                    p.n(),
                    form.matrix_size(),
                    form.generic_name()
                )));
            }
            OrbitDiagram::Unsigned(p)
        }
        Some((kind, params)) => {
            let d: SignedDiagram =
                text.parse().map_err(|e: crate::signed_diagram::DiagramError| OrbitError::Parse(e.to_string()))?;
            check_membership(kind, params, &d)
                .map_err(|rule| OrbitError::NotInParamSet(format!("{rule} for {}", form.generic_name())))?;
            OrbitDiagram::Signed(d)
        }
    };
    let size = fiber_size(form, &diagram);
    if fiber_index == 0 || fiber_index > size {
        return Err(OrbitError::BadFiberIndex { index: fiber_index, size });
    }
    let is_zero = diagram.partition().is_trivial();
    Ok(OrbitClass { form: *form, diagram, fiber_index, fiber_size: size, is_zero })
}

/// Parses `diagram[:fiber]`, the fiber index defaulting to 1.
pub fn parse_orbit_spec(form: &RealForm, spec: &str) -> Result<OrbitClass, OrbitError> {
    let (text, fiber) = match spec.rsplit_once(':') {
        Some((text, k)) => {
            let k = k.trim().parse::<usize>().map_err(|_| OrbitError::Parse(format!("bad fiber index {k:?}")))?;
            (text, k)
        }
        None => (spec, 1),
    };
    parse_orbit(form, text, fiber)
}
