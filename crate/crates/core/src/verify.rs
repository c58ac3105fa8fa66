//! Batched self-check suites over a whole root system: every identity the
//! library promises, swept across the full Weyl group and coordinate boxes
//! of coweights. Shared by the CLI `verify` command and the acceptance
//! tests so both report from the same code path.

use crate::dominance::{
    self, coweight_box, dominance_shift, is_dominant, left_descent_mask,
};
use crate::hecke::{self, HeckeCharacter};
use crate::root_system::{Coweight, RootSystem};
use crate::whittaker::{self, eval_whittaker};

/// Outcome of one suite: how many individual checks ran and which failed.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: String,
    pub checked: u64,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        Self {
            name: name.to_string(),
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, context: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(context());
        }
    }

    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Structural checks: root counts, Weyl group closure, reduced words,
/// inverses, descents, and the longest element.
pub fn root_system_suite(rs: &RootSystem) -> SuiteReport {
    let mut report = SuiteReport::new("root_system");
    let ct = rs.cartan_type();
    report.check(
        rs.positive_roots().len() == ct.positive_root_count(),
        || format!("{ct}: positive root count mismatch"),
    );
    report.check(rs.weyl_elements().len() as u64 == ct.weyl_order(), || {
        format!("{ct}: Weyl group order mismatch")
    });
    let w0 = rs.longest_element();
    report.check(w0.length() == rs.positive_roots().len(), || {
        format!("{ct}: longest element length != number of positive roots")
    });
    report.check(rs.compose(&w0, &w0).is_identity(), || {
        format!("{ct}: longest element is not an involution")
    });
    let mut w0_inversions = rs.inversion_set(&w0);
    w0_inversions.sort();
    let mut positives = rs.positive_roots().to_vec();
    positives.sort();
    report.check(w0_inversions == positives, || {
        format!("{ct}: longest element does not invert every positive root")
    });
    let probe = Coweight::new((0..rs.rank()).map(|i| i as i64 + 1).collect());
    for w in rs.weyl_elements() {
        let word = rs.reduced_word(w);
        let round = rs.from_word(&word).map_or(false, |v| &v == w);
        report.check(word.len() == w.length() && round, || {
            format!("{ct}: reduced word round-trip failed at {w:?}")
        });
        let inv = rs.inverse(w);
        report.check(inv.length() == w.length(), || {
            format!("{ct}: inverse changed length at {w:?}")
        });
        report.check(rs.compose(w, &inv).is_identity(), || {
            format!("{ct}: w * w^-1 != e at {w:?}")
        });
        report.check(rs.inversion_set(w).len() == w.length(), || {
            format!("{ct}: inversion set size != length at {w:?}")
        });
        let mask = left_descent_mask(rs, w);
        for i in 0..rs.rank() {
            let s = rs.simple_reflection(i).expect("valid index");
            let shorter = rs.compose(&s, w).length() < w.length();
            report.check(mask[i] == shorter, || {
                format!("{ct}: descent mask disagrees with lengths at {w:?}, i={i}")
            });
        }
        let round_trip = rs.act_on_coweight(w, &rs.act_on_coweight(&inv, &probe));
        report.check(round_trip == probe, || {
            format!("{ct}: coweight action of w * w^-1 is not trivial at {w:?}")
        });
    }
    report
}

/// Twisted-dominance checks: the shift coweights, their defining
/// equivalence on a radius-2 box, and the longest-element shift identity.
pub fn dominance_suite(rs: &RootSystem) -> SuiteReport {
    let mut report = SuiteReport::new("dominance");
    let ct = rs.cartan_type();
    report.check(
        dominance_shift(rs, &rs.identity()) == Coweight::zero(rs.rank()),
        || format!("{ct}: identity shift is nonzero"),
    );
    let box2 = coweight_box(rs.rank(), 2);
    for w in rs.weyl_elements() {
        report.check(dominance::verify_longest_shift_identity(rs, w), || {
            format!("{ct}: longest-element shift identity failed at {w:?}")
        });
        for lambda in &box2 {
            report.check(dominance::verify_shifted_dominance(rs, w, lambda), || {
                format!("{ct}: shifted dominance mismatch at {w:?}, {lambda}")
            });
        }
    }
    report
}

/// Hecke algebra checks: quadratic and braid relations, character
/// multiplicativity on all basis pairs, and the eigen equations read off
/// at the identity coefficient.
pub fn hecke_suite(rs: &RootSystem) -> SuiteReport {
    let mut report = SuiteReport::new("hecke");
    let ct = rs.cartan_type();
    for i in 0..rs.rank() {
        report.check(hecke::verify_quadratic_relation(rs, i), || {
            format!("{ct}: quadratic relation failed at i={i}")
        });
        for j in (i + 1)..rs.rank() {
            report.check(hecke::verify_braid_relation(rs, i, j), || {
                format!("{ct}: braid relation failed at (i={i}, j={j})")
            });
        }
    }
    for ch in [HeckeCharacter::Sign, HeckeCharacter::Trivial] {
        report.check(hecke::verify_character_multiplicative(rs, ch), || {
            format!("{ct}: character {ch:?} not multiplicative")
        });
        for w in rs.weyl_elements() {
            report.check(hecke::verify_eigen_equation_at_identity(rs, ch, w), || {
                format!("{ct}: eigen equation failed for {ch:?} at {w:?}")
            });
        }
    }
    let at_one = hecke::poincare_polynomial(rs).eval(1).unwrap_or(-1);
    report.check(at_one == rs.weyl_elements().len() as i64, || {
        format!("{ct}: Poincare polynomial at 1 != |W|")
    });
    report
}

/// Closed-formula checks: length scaling on dominant coweights, the
/// translation identity everywhere (radius-2 box), support on a radius-3
/// box, normalization, and the parahoric vanishing witnesses.
pub fn whittaker_suite(rs: &RootSystem) -> SuiteReport {
    let mut report = SuiteReport::new("whittaker");
    let ct = rs.cartan_type();
    report.check(
        eval_whittaker(rs, &Coweight::zero(rs.rank()), &rs.identity())
            == whittaker::WhittakerValue::one(rs.rank()),
        || format!("{ct}: value at the origin is not 1"),
    );
    let box2 = coweight_box(rs.rank(), 2);
    let box3 = coweight_box(rs.rank(), 3);
    for w in rs.weyl_elements() {
        for lambda in &box2 {
            report.check(whittaker::verify_translation_identity(rs, lambda, w), || {
                format!("{ct}: translation identity failed at {w:?}, {lambda}")
            });
            if is_dominant(lambda) {
                let ok = whittaker::verify_length_scaling(rs, lambda, w).unwrap_or(false);
                report.check(ok, || {
                    format!("{ct}: length scaling failed at {w:?}, {lambda}")
                });
            }
        }
        for lambda in &box3 {
            report.check(whittaker::support_check(rs, lambda, w), || {
                format!("{ct}: support mismatch at {w:?}, {lambda}")
            });
        }
    }
    for i in 0..rs.rank() {
        let (on_cell, at_identity) =
            whittaker::parahoric_vanishing_witness(rs, i).expect("valid index");
        report.check(!on_cell.is_zero() && at_identity.is_zero(), || {
            format!("{ct}: parahoric vanishing witness failed at i={i}")
        });
    }
    report
}

/// All four suites in order.
pub fn all_suites(rs: &RootSystem) -> Vec<SuiteReport> {
    vec![
        root_system_suite(rs),
        dominance_suite(rs),
        hecke_suite(rs),
        whittaker_suite(rs),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{CartanType, Family};

    #[test]
    fn suites_pass_on_small_types() {
        for ct in [
            CartanType::new(Family::A, 1).unwrap(),
            CartanType::new(Family::A, 2).unwrap(),
            CartanType::new(Family::B, 2).unwrap(),
            CartanType::new(Family::G, 2).unwrap(),
        ] {
            let rs = RootSystem::new(ct).unwrap();
            for report in all_suites(&rs) {
                assert!(
                    report.pass(),
                    "{} failed on {ct}: {:?}",
                    report.name,
                    report.failures.first()
                );
                assert!(report.checked > 0);
            }
        }
    }

    #[test]
    fn reports_carry_context_on_failure() {
        let mut r = SuiteReport::new("demo");
        r.check(false, || "broken".to_string());
        assert!(!r.pass());
        assert_eq!(r.failures, vec!["broken".to_string()]);
    }
}
