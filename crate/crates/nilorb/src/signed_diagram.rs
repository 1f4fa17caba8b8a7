//! Sign matrices, signed Young diagrams and the diagram sets that parametrize
//! nilpotent orbits of the unitary-type real forms.
//!
//! A part `d` with multiplicity `t_d` carries a `t_d × d` matrix of signs. Its first
//! column has `p_d` leading `+1` entries followed by `q_d = t_d − p_d` entries `−1`,
//! and signs alternate along each row, except that rows of length `d ≡ 3 (mod 4)`
//! end with the sign opposite to their first entry.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::partition::{enumerate_partitions, predicates, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("row {row} out of range 1..={rows}")]
    IndexOutOfRange { row: usize, rows: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("cannot parse diagram {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

/// The sign matrix of one part, stored losslessly as `(d, t_d, p_d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignMatrix {
    d: usize,
    t: usize,
    p: usize,
}

impl SignMatrix {
    pub fn new(d: usize, t: usize, p: usize) -> Result<Self, DiagramError> {
        if d == 0 || t == 0 {
            return Err(DiagramError::InvalidInput(format!("part {d} with multiplicity {t}")));
        }
        if p > t {
            return Err(DiagramError::InvalidInput(format!("p_d = {p} exceeds t_d = {t}")));
        }
        Ok(SignMatrix { d, t, p })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Number of rows starting with `+1`.
    pub fn p(&self) -> usize {
        self.p
    }

    /// Number of rows starting with `−1`.
    pub fn q(&self) -> usize {
        self.t - self.p
    }

    /// The entry `m(i, j)` for `1 ≤ i ≤ t_d`, `1 ≤ j ≤ d`.
    ///
    /// # Panics
    /// Panics when the index is out of range.
    pub fn entry(&self, i: usize, j: usize) -> i8 {
        assert!((1..=self.t).contains(&i) && (1..=self.d).contains(&j), "entry ({i},{j}) out of range");
        let first: i8 = if i <= self.p { 1 } else { -1 };
        if self.d % 4 == 3 && j == self.d {
            return -first;
        }
        if j % 2 == 1 {
            first
        } else {
            -first
        }
    }

    /// Total numbers of `+1` and `−1` entries, by the closed forms.
    pub fn sign_counts(&self) -> (usize, usize) {
        let (d, t, p, q) = (self.d, self.t, self.p, self.q());
        if d % 2 == 0 {
            (t * d / 2, t * d / 2)
        } else if d % 4 == 1 {
            (p * (d + 1) / 2 + q * (d - 1) / 2, p * (d - 1) / 2 + q * (d + 1) / 2)
        } else {
            (p * (d - 1) / 2 + q * (d + 1) / 2, p * (d + 1) / 2 + q * (d - 1) / 2)
        }
    }

    /// Numbers `(l⁺, l⁻)` of `+1` and `−1` entries in row `i` (1-based).
    pub fn row_parities(&self, i: usize) -> Result<(usize, usize), DiagramError> {
        if !(1..=self.t).contains(&i) {
            return Err(DiagramError::IndexOutOfRange { row: i, rows: self.t });
        }
        let plus = (1..=self.d).filter(|&j| self.entry(i, j) == 1).count();
        Ok((plus, self.d - plus))
    }
}

/// A signed Young diagram: a partition with one sign matrix per part.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedDiagram {
    partition: Partition,
    signs: Vec<SignMatrix>,
}

impl SignedDiagram {
    /// Builds a diagram from sign matrices of distinct parts, in any order.
    pub fn new(mut signs: Vec<SignMatrix>) -> Result<Self, DiagramError> {
        signs.sort_unstable_by_key(SignMatrix::d);
        let partition = Partition::new(signs.iter().map(|m| (m.d, m.t)).collect())
            .map_err(|e| DiagramError::InvalidInput(e.to_string()))?;
        Ok(SignedDiagram { partition, signs })
    }

    /// Builds a diagram from `(d, t_d, p_d)` triples.
    pub fn from_triples(triples: &[(usize, usize, usize)]) -> Result<Self, DiagramError> {
        let signs = triples.iter().map(|&(d, t, p)| SignMatrix::new(d, t, p)).collect::<Result<_, _>>()?;
        SignedDiagram::new(signs)
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    /// Sign matrices in ascending part order.
    pub fn signs(&self) -> &[SignMatrix] {
        &self.signs
    }

    /// The sign matrix of part `d`, if present.
    pub fn part(&self, d: usize) -> Option<&SignMatrix> {
        self.signs.iter().find(|m| m.d == d)
    }

    /// The `(d, t_d, p_d)` triples in ascending part order.
    pub fn triples(&self) -> Vec<(usize, usize, usize)> {
        self.signs.iter().map(|m| (m.d, m.t, m.p)).collect()
    }

    /// Total signature `(sgn₊, sgn₋)`.
    pub fn signature(&self) -> (usize, usize) {
        self.signs.iter().fold((0, 0), |(a, b), m| {
            let (x, y) = m.sign_counts();
            (a + x, b + y)
        })
    }

    pub fn n(&self) -> usize {
        self.partition.n()
    }

    /// Whether every even part has all rows starting with `+1`.
    pub fn in_s_even(&self) -> bool {
        self.signs.iter().filter(|m| m.d % 2 == 0).all(|m| m.p == m.t)
    }

    /// Whether every odd part has all rows starting with `+1`.
    pub fn in_s_odd(&self) -> bool {
        self.signs.iter().filter(|m| m.d % 2 == 1).all(|m| m.p == m.t)
    }

    /// Row strings for display, longest rows first, `+` rows before `−` rows.
    pub fn render_rows(&self) -> Vec<String> {
        let mut rows = Vec::new();
        for m in self.signs.iter().rev() {
            for i in 1..=m.t {
                rows.push((1..=m.d).map(|j| if m.entry(i, j) == 1 { '+' } else { '-' }).collect());
            }
        }
        rows
    }

    /// JSON rendering `{"parts":[{"d":3,"t":1,"p":1}]}` in ascending part order.
    pub fn to_json(&self) -> String {
        let parts: Vec<String> =
            self.signs.iter().map(|m| format!("{{\"d\":{},\"t\":{},\"p\":{}}}", m.d, m.t, m.p)).collect();
        format!("{{\"parts\":[{}]}}", parts.join(","))
    }
}

impl fmt::Display for SignedDiagram {
    /// Tokens `d+^count` / `d-^count` in descending `d`, e.g. `3+^1,1+^2,1-^1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut tokens = Vec::new();
        for m in self.signs.iter().rev() {
            if m.p > 0 {
                tokens.push(format!("{}+^{}", m.d, m.p));
            }
            if m.q() > 0 {
                tokens.push(format!("{}-^{}", m.d, m.q()));
            }
        }
        f.write_str(&tokens.join(","))
    }
}

impl FromStr for SignedDiagram {
    type Err = DiagramError;

    /// Parses comma-separated `d+^count` / `d-^count` tokens in any order. A token
    /// without `^count` means count 1. Zero counts and repeated tokens are rejected.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let err = |reason: String| DiagramError::Parse { text: text.to_string(), reason };
        let mut counts: Vec<(usize, usize, usize)> = Vec::new();
        for token in text.split(',') {
            let token = token.trim();
            let (head, count) = match token.split_once('^') {
                Some((h, c)) => (h, c.trim().parse::<usize>().map_err(|_| err(format!("bad count in {token:?}")))?),
                None => (token, 1),
            };
            if count == 0 {
                return Err(err(format!("zero count in {token:?}")));
            }
            let (d, plus) = match head.trim().strip_suffix('+') {
                Some(d) => (d, true),
                None => match head.trim().strip_suffix('-') {
                    Some(d) => (d, false),
                    None => return Err(err(format!("token {token:?} lacks a + or - sign"))),
                },
            };
            let d: usize = d.parse().map_err(|_| err(format!("bad part in {token:?}")))?;
            if d == 0 {
                return Err(err("part 0 is not allowed".into()));
            }
            let entry = match counts.iter_mut().find(|(e, _, _)| *e == d) {
                Some(e) => e,
                None => {
                    counts.push((d, 0, 0));
                    counts.last_mut().expect("just pushed")
                }
            };
            let slot = if plus { &mut entry.1 } else { &mut entry.2 };
            if *slot != 0 {
                return Err(err(format!("token {token:?} repeated")));
            }
            *slot = count;
        }
        let triples: Vec<(usize, usize, usize)> = counts.into_iter().map(|(d, p, q)| (d, p + q, p)).collect();
        SignedDiagram::from_triples(&triples).map_err(|e| err(e.to_string()))
    }
}

/// Whether the diagram lies in S′: either every row of every odd part has an even
/// number of `+1` entries, or every such row has an even number of `−1` entries.
///
/// Requires the diagram to lie in S^even (all even-part rows start with `+1`).
pub fn in_s_prime(diagram: &SignedDiagram) -> Result<bool, DiagramError> {
    if !diagram.in_s_even() {
        return Err(DiagramError::PreconditionViolated(format!(
            "diagram {diagram} has an even part with a row starting -1"
        )));
    }
    let mut rows = Vec::new();
    for m in diagram.signs().iter().filter(|m| m.d() % 2 == 1) {
        for i in 1..=m.t() {
            rows.push(m.row_parities(i)?);
        }
    }
    let plus_even = rows.iter().all(|&(lp, _)| lp % 2 == 0);
    let minus_even = rows.iter().all(|&(_, lm)| lm % 2 == 0);
    Ok(plus_even || minus_even)
}

/// The named diagram sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiagramSet {
    /// All diagrams of signature `(p, q)`.
    Y,
    /// Signature `(p, q)`, even parts start `+1`.
    YEven,
    /// `YEven` with every even part of even multiplicity.
    YEven1,
    /// Diagrams of size `n` whose odd parts start `+1`; no signature constraint.
    YOdd,
    /// `YOdd` restricted to partitions whose odd parts have even multiplicity.
    /// Its size parameter is the (even) diagram size `2n`.
    YOddMinus1,
}

/// Parameters of a diagram set: a signature, or the size of the diagrams.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SetParams {
    Signature { p: usize, q: usize },
    Size { n: usize },
}

impl DiagramSet {
    fn expects_signature(self) -> bool {
        matches!(self, DiagramSet::Y | DiagramSet::YEven | DiagramSet::YEven1)
    }

    /// Size of the diagrams in the set.
    fn diagram_size(self, params: SetParams) -> Result<usize, DiagramError> {
        let n = match (self.expects_signature(), params) {
            (true, SetParams::Signature { p, q }) => p + q,
            (false, SetParams::Size { n }) if self == DiagramSet::YOddMinus1 && n % 2 == 1 => {
                return Err(DiagramError::InvalidInput(format!("{self:?} needs an even size, got {n}")));
            }
            (false, SetParams::Size { n }) => n,
            _ => return Err(DiagramError::InvalidInput(format!("{self:?} does not take {params:?}"))),
        };
        if n == 0 {
            return Err(DiagramError::InvalidInput("diagrams must have positive size".into()));
        }
        Ok(n)
    }
}

/// Checks membership of `diagram` in the set, naming the first violated rule.
pub fn check_membership(kind: DiagramSet, params: SetParams, diagram: &SignedDiagram) -> Result<(), String> {
    let size = kind.diagram_size(params).map_err(|e| e.to_string())?;
    if diagram.n() != size {
        return Err(format!("diagram has size {}, expected {size}", diagram.n()));
    }
    let flags = predicates(diagram.partition());
    match kind {
        DiagramSet::YEven1 if !flags.in_p1 => {
            let (d, t) = bad_multiplicity(diagram.partition(), 0);
            return Err(format!("even part {d} has odd multiplicity {t}"));
        }
        DiagramSet::YOddMinus1 if !flags.in_p_minus1 => {
            let (d, t) = bad_multiplicity(diagram.partition(), 1);
            return Err(format!("odd part {d} has odd multiplicity {t}"));
        }
        _ => {}
    }
    match kind {
        DiagramSet::YEven | DiagramSet::YEven1 if !diagram.in_s_even() => {
            return Err("even part must start +1".into());
        }
        DiagramSet::YOdd | DiagramSet::YOddMinus1 if !diagram.in_s_odd() => {
            return Err("odd part must start +1".into());
        }
        _ => {}
    }
    if let SetParams::Signature { p, q } = params {
        let sig = diagram.signature();
        if sig != (p, q) {
            return Err(format!("diagram signature ({},{}) differs from ({p},{q})", sig.0, sig.1));
        }
    }
    Ok(())
}

fn bad_multiplicity(p: &Partition, parity: usize) -> (usize, usize) {
    *p.parts().iter().find(|&&(d, t)| d % 2 == parity && t % 2 == 1).expect("a violating part exists")
}

/// All diagrams of the named set, ordered by partition (lexicographic) and then by
/// the tuple of `p_d` values (lexicographic, ascending parts).
pub fn enumerate_set(kind: DiagramSet, params: SetParams) -> Result<Vec<SignedDiagram>, DiagramError> {
    let size = kind.diagram_size(params)?;
    let mut out = Vec::new();
    for partition in enumerate_partitions(size).map_err(|e| DiagramError::InvalidInput(e.to_string()))? {
        let flags = predicates(&partition);
        if (kind == DiagramSet::YEven1 && !flags.in_p1) || (kind == DiagramSet::YOddMinus1 && !flags.in_p_minus1) {
            continue;
        }
        let choices: Vec<Vec<usize>> = partition
            .parts()
            .iter()
            .map(|&(d, t)| {
                let fixed = match kind {
                    DiagramSet::YEven | DiagramSet::YEven1 => d % 2 == 0,
                    DiagramSet::YOdd | DiagramSet::YOddMinus1 => d % 2 == 1,
                    DiagramSet::Y => false,
                };
                if fixed {
                    vec![t]
                } else {
                    (0..=t).collect()
                }
            })
            .collect();
        for ps in cartesian(&choices) {
            let triples: Vec<(usize, usize, usize)> =
                partition.parts().iter().zip(&ps).map(|(&(d, t), &p)| (d, t, p)).collect();
            let diagram = SignedDiagram::from_triples(&triples)?;
            if let SetParams::Signature { p, q } = params {
                if diagram.signature() != (p, q) {
                    continue;
                }
            }
            out.push(diagram);
        }
    }
    Ok(out)
}

/// Lexicographic cartesian product of the choice lists.
fn cartesian(choices: &[Vec<usize>]) -> Vec<Vec<usize>> {
    choices.iter().fold(vec![Vec::new()], |acc, opts| {
        acc.iter()
            .flat_map(|prefix| {
                opts.iter().map(move |&x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect()
    })
}
