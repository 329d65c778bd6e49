//! Structure-constant tables for the three built-in algebras.
//!
//! All three share the same inner product and have `theta = 0`,
//! `phi = Phi = id`; they differ only in the multiplication:
//!
//! * `L` — products of generators with distinct nonzero labels are
//!   `y + z` in the summed component; it detects label interaction.
//! * `Lprime` — those products vanish instead; its homology extends
//!   Khovanov homology over F2 and carries the secondary grading.
//! * `Ldoubleprime` — a deformation with `x * x = 1`; its homology extends
//!   Lee homology over F2.

use super::{Algebra, AlgebraError, AlgebraName, BasisGen, Element, GenName, Label};
use std::collections::{BTreeMap, BTreeSet};

/// Table-based algebras materialize all `(2 * 2^k)^2` products, so the label
/// dimension is capped.
pub const MAX_TABLE_DIM: u8 = 8;

pub(super) fn build(name: AlgebraName, k: u8) -> Result<Algebra, AlgebraError> {
    if k > MAX_TABLE_DIM {
        return Err(AlgebraError::LabelDimTooLarge(k, MAX_TABLE_DIM));
    }
    assert!(
        name != AlgebraName::Custom,
        "custom algebras are built from files, not tables"
    );
    let mut mult = BTreeMap::new();
    let mut eta = BTreeSet::new();
    let gens: Vec<BasisGen> = Label::all(k)
        .flat_map(|l| {
            if l.is_zero() {
                [
                    BasisGen::new(l, GenName::One),
                    BasisGen::new(l, GenName::X),
                ]
            } else {
                [BasisGen::new(l, GenName::Y), BasisGen::new(l, GenName::Z)]
            }
        })
        .collect();
    for &a in &gens {
        for &b in &gens {
            mult.insert((a, b), product(name, k, a, b));
            if pairing(a, b) {
                eta.insert((a, b));
            }
        }
    }
    Algebra::from_parts(
        k,
        name,
        mult,
        eta,
        BTreeMap::new(),
        BTreeMap::new(),
        None,
    )
}

/// The shared inner product: `eta(1, x) = eta(x, 1) = 1` on the zero
/// component and `eta(y, z) = eta(z, y) = 1` on every nonzero component.
fn pairing(a: BasisGen, b: BasisGen) -> bool {
    if a.label != b.label {
        return false;
    }
    matches!(
        (a.name, b.name),
        (GenName::One, GenName::X)
            | (GenName::X, GenName::One)
            | (GenName::Y, GenName::Z)
            | (GenName::Z, GenName::Y)
    )
}

fn product(name: AlgebraName, k: u8, a: BasisGen, b: BasisGen) -> Element {
    use GenName::*;
    let zero = Label::zero(k);
    let one = BasisGen::new(zero, One);
    let x = BasisGen::new(zero, X);
    // unit law, common to all three algebras
    if a.name == One {
        return Element::single(b);
    }
    if b.name == One {
        return Element::single(a);
    }
    match name {
        AlgebraName::L => match (a.name, b.name) {
            (X, X) => Element::zero(),
            (X, _) | (_, X) => Element::zero(),
            _ if a.label == b.label => match (a.name, b.name) {
                (Y, Z) | (Z, Y) => Element::single(x),
                _ => Element::zero(),
            },
            // distinct nonzero labels: every product is y + z in the sum
            _ => {
                let sum = a.label.xor(&b.label);
                Element::from_terms([
                    BasisGen::new(sum, Y),
                    BasisGen::new(sum, Z),
                ])
            }
        },
        AlgebraName::LPrime => match (a.name, b.name) {
            (X, _) | (_, X) => Element::zero(),
            _ if a.label == b.label => match (a.name, b.name) {
                (Y, Z) | (Z, Y) => Element::single(x),
                _ => Element::zero(),
            },
            _ => Element::zero(),
        },
        AlgebraName::LDoublePrime => match (a.name, b.name) {
            (X, X) => Element::single(one),
            (X, Y) | (Y, X) => Element::single(BasisGen::new(a.label.xor(&b.label), Y)),
            (X, Z) | (Z, X) => Element::single(BasisGen::new(a.label.xor(&b.label), Z)),
            _ if a.label == b.label => match (a.name, b.name) {
                (Y, Z) | (Z, Y) => Element::from_terms([x, one]),
                _ => Element::zero(),
            },
            _ => Element::zero(),
        },
        AlgebraName::Custom => unreachable!(),
    }
}
