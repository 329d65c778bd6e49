//! Sphere, torus and four-tube relation checks.
//!
//! These are the closed-surface identities a label-decorated algebra must
//! satisfy for the cube construction to be homotopy-invariant. The sphere
//! evaluates to `eta(1, 1)`, the labelled torus to `eps(m(Delta(1)))`, and
//! the four-tube relation is checked in two configurations: four caps with a
//! tube joining one pair (maps out of the ground field), and four parallel
//! strands with a tube joining one pair (maps on the fourfold tensor power).

use super::axioms::{Check, CheckReport, MAX_CHECK_DIM};
use super::{Algebra, AlgebraError, BasisGen, Element, Label};
use std::collections::BTreeSet;

/// An element of the fourfold tensor power.
pub type Tensor4 = BTreeSet<[BasisGen; 4]>;

fn t4_add(set: &mut Tensor4, item: [BasisGen; 4]) {
    if !set.remove(&item) {
        set.insert(item);
    }
}

/// The cap configuration of the four-tube relation: four unit caps, with a
/// tube joining the indicated pair of caps. A tube between two caps emits
/// `Delta_{0,0}(1)` at those positions and the unit elsewhere. Returns
/// `(tube(1,2) + tube(3,4), tube(1,3) + tube(2,4))`; the relation asserts
/// the two sums are equal.
pub fn four_tube_cap_instance(alg: &Algebra) -> Result<(Tensor4, Tensor4), AlgebraError> {
    let zero = Label::zero(alg.k());
    let delta_unit = alg.comult_apply(zero, zero, &Element::single(alg.unit()))?;
    let unit = alg.unit();
    let tube = |i: usize, j: usize| -> Tensor4 {
        let mut out = Tensor4::new();
        for (s, t) in delta_unit.pairs() {
            let mut slots = [unit; 4];
            slots[i] = *s;
            slots[j] = *t;
            t4_add(&mut out, slots);
        }
        out
    };
    let mut left = tube(0, 1);
    for item in tube(2, 3) {
        t4_add(&mut left, item);
    }
    let mut right = tube(0, 2);
    for item in tube(1, 3) {
        t4_add(&mut right, item);
    }
    Ok((left, right))
}

/// The strand configuration: four parallel circles all labelled `gamma`; a
/// tube between two of them composes multiplication with comultiplication on
/// those factors. Checks the four-tube identity on every basis input.
fn four_tube_strands(alg: &Algebra, gamma: Label) -> Result<Option<String>, AlgebraError> {
    let comp = alg.component_basis(gamma);
    let table = alg.comultiplication(gamma, gamma)?;
    // tube on factors (i, j) applied to a basis 4-tuple
    let tube = |input: &[BasisGen; 4], i: usize, j: usize| -> Tensor4 {
        let mut out = Tensor4::new();
        let prod = alg.mult_gens(input[i], input[j]);
        for g in prod.terms() {
            for (s, t) in table[g].pairs() {
                let mut slots = *input;
                slots[i] = *s;
                slots[j] = *t;
                t4_add(&mut out, slots);
            }
        }
        out
    };
    for &a in &comp {
        for &b in &comp {
            for &c in &comp {
                for &d in &comp {
                    let input = [a, b, c, d];
                    let mut left = tube(&input, 0, 1);
                    for item in tube(&input, 2, 3) {
                        t4_add(&mut left, item);
                    }
                    let mut right = tube(&input, 0, 2);
                    for item in tube(&input, 1, 3) {
                        t4_add(&mut right, item);
                    }
                    if left != right {
                        return Ok(Some(format!(
                            "strand instance fails on {a} (x) {b} (x) {c} (x) {d} (label {gamma})"
                        )));
                    }
                }
            }
        }
    }
    Ok(None)
}

pub(super) fn check_relations(alg: &Algebra) -> Result<CheckReport, AlgebraError> {
    if alg.k() > MAX_CHECK_DIM {
        return Err(AlgebraError::CheckCapExceeded {
            got: alg.k(),
            max: MAX_CHECK_DIM,
        });
    }
    let mut report = CheckReport::default();
    let unit = Element::single(alg.unit());

    // sphere: a unit capped off by the counit
    let sphere = alg.eta(&unit, &unit);
    report.checks.push(if sphere {
        Check {
            name: "sphere relation".into(),
            passed: false,
            witness: Some("eta(1, 1) = 1, sphere does not vanish".into()),
        }
    } else {
        Check {
            name: "sphere relation".into(),
            passed: true,
            witness: None,
        }
    });

    // torus with label alpha: eps(m(Delta_{alpha,alpha}(1)))
    let mut torus_failure = None;
    for alpha in alg.all_labels() {
        let split = alg.comult_apply(alpha, alpha, &unit)?;
        let mut merged = Element::zero();
        for (s, t) in split.pairs() {
            merged.add(&alg.mult_gens(*s, *t));
        }
        if alg.counit(&merged) {
            torus_failure = Some(format!("torus labelled {alpha} evaluates to 1"));
            break;
        }
    }
    report.checks.push(Check {
        name: "torus relation (every label)".into(),
        passed: torus_failure.is_none(),
        witness: torus_failure,
    });

    // four-tube, cap configuration
    let (left, right) = four_tube_cap_instance(alg)?;
    report.checks.push(Check {
        name: "four-tube relation (cap configuration)".into(),
        passed: left == right,
        witness: (left != right).then(|| format!("{left:?} != {right:?}")),
    });

    // four-tube, strand configuration, per label
    let mut strand_failure = None;
    for gamma in alg.all_labels() {
        if let Some(w) = four_tube_strands(alg, gamma)? {
            strand_failure = Some(w);
            break;
        }
    }
    report.checks.push(Check {
        name: "four-tube relation (strand configuration, every label)".into(),
        passed: strand_failure.is_none(),
        witness: strand_failure,
    });

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::super::{Algebra, AlgebraName, BasisGen, GenName, Label};
    use super::*;

    #[test]
    fn builtins_satisfy_all_relations() {
        for name in [AlgebraName::L, AlgebraName::LPrime, AlgebraName::LDoublePrime] {
            for k in [1u8, 2] {
                let alg = Algebra::builtin(name, k).unwrap();
                let report = alg.check_bar_natan_relations().unwrap();
                assert!(
                    report.all_passed(),
                    "{name} (k = {k}) fails: {:?}",
                    report.failures().collect::<Vec<_>>()
                );
            }
        }
    }

    #[test]
    fn cap_instance_matches_hand_expansion() {
        // tube(1,2) + tube(3,4) expands to the four tensors with a single x;
        // so does tube(1,3) + tube(2,4)
        let alg = Algebra::builtin(AlgebraName::L, 1).unwrap();
        let one = BasisGen::new(Label::zero(1), GenName::One);
        let x = BasisGen::new(Label::zero(1), GenName::X);
        let (left, right) = four_tube_cap_instance(&alg).unwrap();
        let expected: Tensor4 = [
            [one, one, one, x],
            [one, one, x, one],
            [one, x, one, one],
            [x, one, one, one],
        ]
        .into_iter()
        .collect();
        assert_eq!(left, expected);
        assert_eq!(right, expected);
    }
}
