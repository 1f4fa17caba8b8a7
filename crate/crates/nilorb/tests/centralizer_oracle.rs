use std::time::Instant;

use nilorb::orbit_enum::{enumerate_orbits, RealForm};
use nilorb::realize::{centralizer_dim, realize, verify_realization};
use nilorb::structure::centralizer_structure;

fn forms_up_to(size: usize) -> Vec<RealForm> {
    let mut forms = Vec::new();
    for n in 2..=size {
        forms.push(RealForm::SlR { n });
        forms.push(RealForm::SlH { n });
    }
    for n in 3..=size {
        forms.push(RealForm::SOStar { n });
    }
    for n in 1..=3 {
        forms.push(RealForm::SpR { n });
    }
    for p in 1..size {
        for q in 1..=size - p {
            forms.push(RealForm::SU { p, q });
            forms.push(RealForm::SpPQ { p, q });
            if (RealForm::SO { p, q }).validate().is_ok() {
                forms.push(RealForm::SO { p, q });
            }
        }
    }
    forms
}

#[test]
fn exact_centralizer_matches_structure() {
    let start = Instant::now();
    let mut checked = 0;
    for form in forms_up_to(5) {
        for orbit in enumerate_orbits(&form).unwrap() {
            if orbit.fiber_index != 1 {
                continue;
            }
            let r = realize(&orbit).unwrap();
            assert!(verify_realization(&r).all_passed(), "{form} {}", orbit.diagram);
            let exact = centralizer_dim(&r, &form).unwrap();
            let s = centralizer_structure(&orbit);
            assert_eq!(exact, s.dim, "{form} {} ({s})", orbit.diagram);
            checked += 1;
        }
    }
    eprintln!("{checked} orbits in {:?}", start.elapsed());
}
