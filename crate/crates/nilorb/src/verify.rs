//! Self-checking suites run by `nilorb verify`: enumeration against direct search,
//! the cohomology tables, the matrix realizations and the centralizer oracle.

use std::fmt;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::cohomology::{cohomology, su_l, Status};
use crate::exactlin::{congruence_signature, ScalarField};
use crate::orbit_enum::{enumerate_orbits, OrbitClass, RealForm};
use crate::partition::{classify, enumerate_partitions, predicates};
use crate::realize::{build_triple, centralizer_dim, part_gram, realize, verify_realization};
use crate::signed_diagram::{check_membership, enumerate_set, in_s_prime, SignMatrix, SignedDiagram};
use crate::structure::{centralizer_structure, maximal_compact_structure, GroupKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Largest matrix size swept; symplectic sp(n,R) is swept up to `2n ≤ max_n + 1`.
    pub max_n: usize,
    /// Corrupts one expected value so that the suite must report a failure.
    pub inject_fault: bool,
}

/// Outcome of one suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {}/{} passed in {:.3}s",
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.cases - self.failures.len(),
            self.cases,
            self.elapsed.as_secs_f64()
        )
    }
}

struct Suite {
    name: &'static str,
    cases: usize,
    failures: Vec<String>,
    start: Instant,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Suite { name, cases: 0, failures: Vec::new(), start: Instant::now() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn finish(self) -> SuiteReport {
        SuiteReport { name: self.name, cases: self.cases, failures: self.failures, elapsed: self.start.elapsed() }
    }
}

/// Every valid real form whose matrices have size at most `size`, plus sp(n,R) with `2n ≤ size + 1`.
pub fn forms_up_to(size: usize) -> Vec<RealForm> {
    let mut forms = Vec::new();
    for n in 2..=size {
        forms.push(RealForm::SlR { n });
        forms.push(RealForm::SlH { n });
    }
    for n in 3..=size {
        forms.push(RealForm::SOStar { n });
    }
    for n in 1..=size.div_ceil(2) {
        forms.push(RealForm::SpR { n });
    }
    for m in 2..=size {
        for p in 1..m {
            let q = m - p;
            for form in [RealForm::SU { p, q }, RealForm::SO { p, q }, RealForm::SpPQ { p, q }] {
                if form.validate().is_ok() {
                    forms.push(form);
                }
            }
        }
    }
    forms
}

/// Runs every suite.
pub fn run_all(opts: VerifyOptions) -> Result<Vec<SuiteReport>, VerifyError> {
    if opts.max_n < 2 {
        return Err(VerifyError::InvalidInput(format!("--max-n must be at least 2, got {}", opts.max_n)));
    }
    Ok(vec![
        enumeration_suite(opts.max_n),
        isomorphism_suite(),
        cohomology_table_suite(opts.max_n, opts.inject_fault),
        triple_suite(opts.max_n),
        gram_suite(opts.max_n),
        signature_law_suite(),
        centralizer_suite(opts.max_n),
        compact_center_suite(opts.max_n),
    ])
}

/// Diagram counts against direct search over all `p_d` tuples, and fiber sizes against the predicates.
pub fn enumeration_suite(max_n: usize) -> SuiteReport {
    let mut s = Suite::new("enumeration");
    for form in forms_up_to(max_n) {
        let orbits = enumerate_orbits(&form).expect("valid form");
        let zeros = orbits.iter().filter(|o| o.is_zero).count();
        s.check(zeros == 1, || format!("{form}: {zeros} zero orbits"));
        let Some((kind, params)) = form.diagram_set() else {
            let parts = enumerate_partitions(form.matrix_size()).expect("positive size");
            let want: usize = parts
                .iter()
                .map(|p| if matches!(form, RealForm::SlR { .. }) && predicates(p).is_even { 2 } else { 1 })
                .sum();
            s.check(orbits.len() == want, || format!("{form}: {} orbits, expected {want}", orbits.len()));
            continue;
        };
        let listed = enumerate_set(kind, params).expect("valid parameters");
        let mut searched = Vec::new();
        for partition in enumerate_partitions(form.matrix_size()).expect("positive size") {
            let parts = partition.parts().to_vec();
            let mut choice = vec![0usize; parts.len()];
            loop {
                let triples: Vec<_> = parts.iter().zip(&choice).map(|(&(d, t), &p)| (d, t, p)).collect();
                let diagram = SignedDiagram::from_triples(&triples).expect("valid triples");
                if check_membership(kind, params, &diagram).is_ok() {
                    searched.push(diagram);
                }
                let Some(i) = (0..parts.len()).rev().find(|&i| choice[i] < parts[i].1) else { break };
                choice[i] += 1;
                choice[i + 1..].iter_mut().for_each(|c| *c = 0);
            }
        }
        s.check(listed == searched, || {
            format!("{form}: enumerated {} diagrams, direct search {}", listed.len(), searched.len())
        });
        if let RealForm::SU { p, q } | RealForm::SO { p, q } | RealForm::SpPQ { p, q } = form {
            for d in &listed {
                let literal = literal_signature(d);
                s.check(literal == (p, q), || format!("{form} {d}: literal sign count {literal:?}"));
            }
        }
        let fibers: usize = listed
            .iter()
            .map(|d| {
                let f = predicates(d.partition());
                match form {
                    RealForm::SO { .. } if f.is_very_even => 4,
                    RealForm::SO { .. } if f.in_p1 && in_s_prime(d).unwrap_or(false) => 2,
                    _ => 1,
                }
            })
            .sum();
        s.check(orbits.len() == fibers, || format!("{form}: {} orbits, expected {fibers}", orbits.len()));
    }
    s.finish()
}

fn literal_signature(d: &SignedDiagram) -> (usize, usize) {
    let mut counts = (0, 0);
    for m in d.signs() {
        for i in 1..=m.t() {
            for j in 1..=m.d() {
                if m.entry(i, j) > 0 {
                    counts.0 += 1;
                } else {
                    counts.1 += 1;
                }
            }
        }
    }
    counts
}

fn multisets(form: RealForm) -> (usize, Vec<usize>, Vec<usize>) {
    let orbits = enumerate_orbits(&form).expect("valid form");
    let mut h1: Vec<usize> = Vec::new();
    let mut h2: Vec<usize> = Vec::new();
    for o in &orbits {
        let r = cohomology(o);
        h1.push(r.h1.unwrap_or(usize::MAX));
        h2.push(r.h2.unwrap_or(usize::MAX));
    }
    h1.sort_unstable();
    h2.sort_unstable();
    (orbits.len(), h1, h2)
}

/// Orbit counts and cohomology multisets agree across isomorphic pairs of small real forms.
pub fn isomorphism_suite() -> SuiteReport {
    let mut s = Suite::new("isomorphic pairs");
    let groups: [&[RealForm]; 4] = [
        &[RealForm::SO { p: 3, q: 2 }, RealForm::SpR { n: 2 }],
        &[RealForm::SO { p: 4, q: 1 }, RealForm::SpPQ { p: 1, q: 1 }],
        &[RealForm::SO { p: 3, q: 3 }, RealForm::SlR { n: 4 }],
        &[RealForm::SU { p: 1, q: 1 }, RealForm::SpR { n: 1 }, RealForm::SO { p: 2, q: 1 }],
    ];
    for group in groups {
        let first = multisets(group[0]);
        for &other in &group[1..] {
            let m = multisets(other);
            s.check(m == first, || format!("{} {:?} vs {} {:?}", group[0], first, other, m));
        }
    }
    s.finish()
}

/// The quaternionic and symplectic tables: sl_n(H), sp(p,q), so*(2n), sp(n,R).
pub fn cohomology_table_suite(max_n: usize, inject_fault: bool) -> SuiteReport {
    let mut s = Suite::new("cohomology tables");
    let mut fault = inject_fault;
    for form in forms_up_to(max_n + 1) {
        if matches!(form, RealForm::SlR { .. } | RealForm::SU { .. } | RealForm::SO { .. }) {
            continue;
        }
        for o in enumerate_orbits(&form).expect("valid form") {
            let c = classify(o.partition());
            let (n_e, n_o) = (c.e_d.len(), c.o_d.len());
            let (mut h1, mut h2) = match form {
                RealForm::SlH { .. } => (0, 0),
                RealForm::SpPQ { .. } => (0, n_e),
                _ => (usize::from(n_o == 0), n_o.saturating_sub(1)),
            };
            if o.is_zero {
                (h1, h2) = (0, 0);
            }
            if std::mem::take(&mut fault) {
                h2 += 1;
            }
            let r = cohomology(&o);
            s.check(r.h1 == Some(h1) && r.h2 == Some(h2), || {
                format!("{form} {}: got ({:?},{:?}), expected ({h1},{h2})", o.diagram, r.h1, r.h2)
            });
        }
    }
    for form in forms_up_to(max_n + 3) {
        let RealForm::SU { .. } = form else { continue };
        for o in enumerate_orbits(&form).expect("valid form") {
            let d = o.signed().expect("signed");
            let c = classify(o.partition());
            let l = su_l(d);
            let cases = [c.o_d.is_empty(), l == 1 && c.e_d.is_empty(), l >= 2 && !c.o_d.is_empty()];
            let fired = cases.iter().filter(|&&b| b).count();
            s.check(fired == 1, || format!("{form} {d}: {fired} cases apply"));
        }
    }
    for form in forms_up_to(max_n + 1) {
        let RealForm::SO { p, q } = form else { continue };
        for o in enumerate_orbits(&form).expect("valid form") {
            let r = cohomology(&o);
            let gap_possible = p == 2 || q == 2;
            s.check(r.status == Status::Determined || gap_possible, || format!("{form} {}: unexpected gap", o.diagram));
        }
    }
    s.finish()
}

/// Triple relations and Jordan type for every partition over R, C and H.
pub fn triple_suite(max_n: usize) -> SuiteReport {
    let mut s = Suite::new("sl2-triples");
    for n in 1..=max_n + 3 {
        for partition in enumerate_partitions(n).expect("positive size") {
            for field in [ScalarField::R, ScalarField::C, ScalarField::H] {
                let report = verify_realization(&build_triple(field, &partition));
                s.check(report.all_passed(), || format!("{field} {partition}: {report}"));
            }
        }
    }
    s.finish()
}

/// Gram matrices: symmetry, invariance and signature for every signed diagram.
pub fn gram_suite(max_n: usize) -> SuiteReport {
    let mut s = Suite::new("invariant forms");
    for form in forms_up_to(max_n + 1) {
        if !form.is_signed() {
            continue;
        }
        for o in enumerate_orbits(&form).expect("valid form").into_iter().filter(|o| o.fiber_index == 1) {
            match realize(&o) {
                Ok(r) => {
                    let report = verify_realization(&r);
                    s.check(report.all_passed(), || format!("{form} {}: {report}", o.diagram));
                }
                Err(e) => s.check(false, || format!("{form} {}: {e}", o.diagram)),
            }
        }
    }
    s.finish()
}

/// The signature of `⟨·,·⟩` on the isotypic block of one part, from the signature `(p, q)`
/// of the multiplicity form: balanced for even parts, `((dt+p−q)/2, (dt+q−p)/2)` for
/// parts `≡ 1 mod 4`, and the same with `p` and `q` exchanged for parts `≡ 3 mod 4`.
pub fn isotypic_signature(d: usize, t: usize, p: usize) -> (usize, usize) {
    let q = t - p;
    let dim = d * t;
    match d % 4 {
        0 | 2 => (dim / 2, dim / 2),
        1 => ((dim + p - q) / 2, (dim + q - p) / 2),
        _ => ((dim + q - p) / 2, (dim + p - q) / 2),
    }
}

/// Isotypic blocks for `d ≤ 7`, `t ≤ 2` over su, so and sp(p,q).
pub fn signature_law_suite() -> SuiteReport {
    let mut s = Suite::new("signature law");
    let forms = [RealForm::SU { p: 1, q: 1 }, RealForm::SO { p: 3, q: 3 }, RealForm::SpPQ { p: 1, q: 1 }];
    for form in forms {
        for d in 1..=7 {
            for t in 1..=2 {
                for p in 0..=t {
                    if !block_applies(&form, d, t, p) {
                        continue;
                    }
                    let m = SignMatrix::new(d, t, p).expect("valid block");
                    let want = isotypic_signature(d, t, p);
                    let got = part_gram(&form, &m)
                        .map_err(|e| e.to_string())
                        .and_then(|g| congruence_signature(&g).map_err(|e| e.to_string()));
                    s.check(got.as_ref() == Ok(&want), || {
                        format!("{form} d={d} t={t} p={p}: {got:?}, expected {want:?}")
                    });
                    s.check(m.sign_counts() == want, || {
                        format!("d={d} t={t} p={p}: sign counts {:?}", m.sign_counts())
                    });
                }
            }
        }
    }
    s.finish()
}

/// Whether a single block `(d, t, p)` can occur for the form.
pub fn block_applies(form: &RealForm, d: usize, t: usize, p: usize) -> bool {
    match form {
        RealForm::SO { .. } if d % 2 == 0 => t % 2 == 0 && p == t,
        RealForm::SpPQ { .. } if d % 2 == 0 => p == t,
        _ => true,
    }
}

/// Exact centralizer dimension against the closed-form structure.
pub fn centralizer_suite(max_n: usize) -> SuiteReport {
    let mut s = Suite::new("centralizer oracle");
    for form in forms_up_to(max_n) {
        for o in enumerate_orbits(&form).expect("valid form").into_iter().filter(|o| o.fiber_index == 1) {
            let want = centralizer_structure(&o).dim;
            let got = realize(&o)
                .map_err(|e| e.to_string())
                .and_then(|r| centralizer_dim(&r, &form).map_err(|e| e.to_string()));
            s.check(got == Ok(want), || format!("{form} {}: exact {got:?}, structure {want}", o.diagram));
        }
    }
    s.finish()
}

fn unitary_factors(o: &OrbitClass) -> usize {
    maximal_compact_structure(o).factors.iter().filter(|f| matches!(f.kind, GroupKind::U { .. })).count()
}

/// `h2` against the center of the maximal compact subgroup where the two are tied.
pub fn compact_center_suite(max_n: usize) -> SuiteReport {
    let mut s = Suite::new("compact centers");
    for form in forms_up_to(max_n + 1) {
        for o in enumerate_orbits(&form).expect("valid form") {
            let k = maximal_compact_structure(&o);
            let h2 = cohomology(&o).h2;
            let c = classify(o.partition());
            match form {
                RealForm::SpPQ { .. } => {
                    s.check(h2 == Some(k.dim_z), || format!("{form} {}: h2 {h2:?}, dim z(k) {}", o.diagram, k.dim_z))
                }
                RealForm::SOStar { .. } | RealForm::SpR { .. } if !o.is_zero => {
                    let want = if c.o_d.is_empty() { 0 } else { unitary_factors(&o) - 1 };
                    s.check(h2 == Some(want), || {
                        format!("{form} {}: h2 {h2:?}, from unitary factors {want}", o.diagram)
                    });
                }
                RealForm::SU { .. } => {
                    let l = su_l(o.signed().expect("signed"));
                    s.check(k.dim_z + 1 == l, || format!("{form} {}: dim z(k) {}, l {l}", o.diagram, k.dim_z));
                    if !o.is_zero {
                        let want = if c.o_d.is_empty() {
                            Some(k.dim_z)
                        } else if l >= 2 {
                            Some(k.dim_z - 1)
                        } else {
                            h2
                        };
                        s.check(h2 == want, || format!("{form} {}: h2 {h2:?} vs dim z(k) {}", o.diagram, k.dim_z));
                    }
                }
                _ => {}
            }
        }
    }
    s.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_passes() {
        let reports = run_all(VerifyOptions { max_n: 3, inject_fault: false }).unwrap();
        for r in &reports {
            assert!(r.passed(), "{r}: {:?}", r.failures);
            assert!(r.cases > 0, "{r}");
        }
    }

    #[test]
    fn injected_fault_is_reported() {
        let reports = run_all(VerifyOptions { max_n: 2, inject_fault: true }).unwrap();
        assert!(reports.iter().any(|r| !r.passed()));
    }

    #[test]
    fn rejects_tiny_sweeps() {
        assert!(run_all(VerifyOptions { max_n: 1, inject_fault: false }).is_err());
    }

    #[test]
    fn isotypic_signature_examples() {
        assert_eq!(isotypic_signature(3, 1, 1), (1, 2));
        assert_eq!(isotypic_signature(5, 1, 1), (3, 2));
        assert_eq!(isotypic_signature(2, 2, 1), (2, 2));
        assert_eq!(isotypic_signature(1, 2, 1), (1, 1));
    }

    #[test]
    fn form_list_sizes() {
        let forms = forms_up_to(5);
        assert!(forms.contains(&RealForm::SpR { n: 3 }));
        assert!(!forms.contains(&RealForm::SO { p: 2, q: 2 }));
        assert!(forms.iter().all(|f| f.validate().is_ok()));
    }
}
