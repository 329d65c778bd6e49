//! Exhaustive axiom verification for label-graded algebras.
//!
//! Every check enumerates all labels in `F2^k` and all basis elements of the
//! relevant components, so the label dimension is capped at 3 (eight labels,
//! sixteen generators). Each check reports pass/fail together with a witness
//! describing the first violated instance.

use super::{Algebra, AlgebraError, BasisGen, Element, Label, TensorElement};
use crate::f2::{F2Matrix, F2Vector};
use std::collections::{BTreeMap, BTreeSet};

/// Hard cap for exhaustive axiom enumeration.
pub const MAX_CHECK_DIM: u8 = 3;

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

impl Check {
    fn pass(name: &str) -> Self {
        Check {
            name: name.to_string(),
            passed: true,
            witness: None,
        }
    }

    fn fail(name: &str, witness: String) -> Self {
        Check {
            name: name.to_string(),
            passed: false,
            witness: Some(witness),
        }
    }

    fn from_result(name: &str, result: Result<(), String>) -> Self {
        match result {
            Ok(()) => Self::pass(name),
            Err(w) => Self::fail(name, w),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(&mut self, check: Check) {
        self.checks.push(check);
    }
}

/// An element of the threefold tensor product, used by coassociativity.
type Tensor3 = BTreeSet<(BasisGen, BasisGen, BasisGen)>;

fn t3_add(set: &mut Tensor3, item: (BasisGen, BasisGen, BasisGen)) {
    if !set.remove(&item) {
        set.insert(item);
    }
}

/// Derives the full comultiplication table, one entry per ordered label pair.
pub(super) fn full_comultiplication(
    alg: &Algebra,
) -> Result<BTreeMap<(Label, Label), BTreeMap<BasisGen, TensorElement>>, AlgebraError> {
    let mut out = BTreeMap::new();
    for a in alg.all_labels() {
        for b in alg.all_labels() {
            out.insert((a, b), alg.comultiplication(a, b)?);
        }
    }
    Ok(out)
}

pub(super) fn check_axioms(alg: &Algebra) -> Result<CheckReport, AlgebraError> {
    if alg.k() > MAX_CHECK_DIM {
        return Err(AlgebraError::CheckCapExceeded {
            got: alg.k(),
            max: MAX_CHECK_DIM,
        });
    }
    let basis = alg.all_basis();
    let labels: Vec<Label> = alg.all_labels().collect();
    let mut report = CheckReport::default();

    report.push(Check::from_result("grading: products respect labels", {
        let mut r = Ok(());
        'outer: for &a in &basis {
            for &b in &basis {
                let expect = a.label.xor(&b.label);
                if alg.mult_gens(a, b).terms().any(|t| t.label != expect) {
                    r = Err(format!("m({a}, {b}) leaves component {expect}"));
                    break 'outer;
                }
            }
        }
        r
    }));

    report.push(Check::from_result("associativity", {
        let mut r = Ok(());
        'outer: for &a in &basis {
            for &b in &basis {
                for &c in &basis {
                    let left = alg.multiply(&alg.mult_gens(a, b), &Element::single(c));
                    let right = alg.multiply(&Element::single(a), &alg.mult_gens(b, c));
                    if left != right {
                        r = Err(format!(
                            "(({a})({b}))({c}) = {left} but ({a})(({b})({c})) = {right}"
                        ));
                        break 'outer;
                    }
                }
            }
        }
        r
    }));

    report.push(Check::from_result("unit law", {
        let mut r = Ok(());
        let unit = Element::single(alg.unit());
        for &v in &basis {
            let ev = Element::single(v);
            if alg.multiply(&unit, &ev) != ev || alg.multiply(&ev, &unit) != ev {
                r = Err(format!("unit law fails on {v}"));
                break;
            }
        }
        r
    }));

    report.push(Check::from_result("eta: vanishes across distinct components", {
        let mut r = Ok(());
        'outer: for &a in &basis {
            for &b in &basis {
                if !a.label.xor(&b.label).is_zero() && alg.eta_gens(a, b) {
                    r = Err(format!("eta({a}, {b}) = 1 across labels"));
                    break 'outer;
                }
            }
        }
        r
    }));

    report.push(Check::from_result("eta: non-degenerate on each component", {
        let mut r = Ok(());
        for &l in &labels {
            let comp = alg.component_basis(l);
            let mut gram = F2Matrix::zeros(2, 2);
            for (i, &a) in comp.iter().enumerate() {
                for (j, &b) in comp.iter().enumerate() {
                    if alg.eta_gens(a, b) {
                        gram.set(i, j, true);
                    }
                }
            }
            if gram.rank() != 2 {
                r = Err(format!("Gram matrix on component {l} has rank {}", gram.rank()));
                break;
            }
        }
        r
    }));

    report.push(Check::from_result("frobenius: eta(ab, c) = eta(a, bc)", {
        let mut r = Ok(());
        'outer: for &a in &basis {
            for &b in &basis {
                for &c in &basis {
                    let left = alg.eta(&alg.mult_gens(a, b), &Element::single(c));
                    let right = alg.eta(&Element::single(a), &alg.mult_gens(b, c));
                    if left != right {
                        r = Err(format!("eta(({a})({b}), {c}) != eta({a}, ({b})({c}))"));
                        break 'outer;
                    }
                }
            }
        }
        r
    }));

    report.push(Check::from_result("phi: group homomorphism", {
        let mut r = Ok(());
        // phi_0 = id
        for &v in &basis {
            let ev = Element::single(v);
            if alg.apply_phi(Label::zero(alg.k()), &ev) != ev {
                r = Err(format!("phi_0 moves {v}"));
                break;
            }
        }
        if r.is_ok() {
            'outer: for &a in &labels {
                for &b in &labels {
                    for &v in &basis {
                        let ev = Element::single(v);
                        let composed = alg.apply_phi(a, &alg.apply_phi(b, &ev));
                        let direct = alg.apply_phi(a.xor(&b), &ev);
                        if composed != direct {
                            r = Err(format!("phi_{a} . phi_{b} != phi_{} on {v}", a.xor(&b)));
                            break 'outer;
                        }
                    }
                }
            }
        }
        r
    }));

    report.push(Check::from_result(
        "phi: eta-preserving algebra automorphism fixing components",
        {
            let mut r = Ok(());
            'outer: for &beta in &labels {
                for &a in &basis {
                    let ea = Element::single(a);
                    let fa = alg.apply_phi(beta, &ea);
                    // components are preserved (the label group is abelian)
                    if fa.terms().any(|t| t.label != a.label) {
                        r = Err(format!("phi_{beta}({a}) leaves component {}", a.label));
                        break 'outer;
                    }
                    for &b in &basis {
                        let eb = Element::single(b);
                        let fb = alg.apply_phi(beta, &eb);
                        if alg.apply_phi(beta, &alg.mult_gens(a, b)) != alg.multiply(&fa, &fb) {
                            r = Err(format!("phi_{beta} is not multiplicative on ({a}, {b})"));
                            break 'outer;
                        }
                        if alg.eta(&fa, &fb) != alg.eta(&ea, &eb) {
                            r = Err(format!("phi_{beta} does not preserve eta on ({a}, {b})"));
                            break 'outer;
                        }
                    }
                }
            }
            r
        },
    ));

    report.push(Check::from_result("phi: identity on its own component", {
        let mut r = Ok(());
        'outer: for &a in &labels {
            for &v in &basis {
                if v.label != a {
                    continue;
                }
                let ev = Element::single(v);
                if alg.apply_phi(a, &ev) != ev {
                    r = Err(format!("phi_{a} moves {v} inside its own component"));
                    break 'outer;
                }
            }
        }
        r
    }));

    report.push(Check::from_result("phi: phi_beta(a) b = b a", {
        let mut r = Ok(());
        'outer: for &a in &basis {
            for &b in &basis {
                let fa = alg.apply_phi(b.label, &Element::single(a));
                let left = alg.multiply(&fa, &Element::single(b));
                let right = alg.mult_gens(b, a);
                if left != right {
                    r = Err(format!("phi_{}({a}) {b} != {b} {a}", b.label));
                    break 'outer;
                }
            }
        }
        r
    }));

    report.push(Check::from_result("trace axiom", {
        // Tr(c phi_beta : comp_alpha) = Tr(phi_alpha c : comp_beta)
        // with an abelian label group the commutator label is always zero,
        // so c ranges over the zero component
        let mut r = Ok(());
        let trace = |f: &dyn Fn(&Element) -> Element, l: Label| -> bool {
            let comp = alg.component_basis(l);
            let mut tr = false;
            for (i, &g) in comp.iter().enumerate() {
                let img = f(&Element::single(g));
                if img.contains(&comp[i]) {
                    tr = !tr;
                }
            }
            tr
        };
        'outer: for &alpha in &labels {
            for &beta in &labels {
                for c in alg.component_basis(Label::zero(alg.k())) {
                    let ec = Element::single(c);
                    let left = trace(
                        &|v| alg.multiply(&ec, &alg.apply_phi(beta, v)),
                        alpha,
                    );
                    let right = trace(
                        &|v| alg.apply_phi(alpha, &alg.multiply(&ec, v)),
                        beta,
                    );
                    if left != right {
                        r = Err(format!(
                            "trace mismatch for c = {c}, alpha = {alpha}, beta = {beta}"
                        ));
                        break 'outer;
                    }
                }
            }
        }
        r
    }));

    report.push(Check::from_result("Phi: involution preserving components", {
        let mut r = Ok(());
        for &v in &basis {
            let ev = Element::single(v);
            let fv = alg.apply_cap_phi(&ev);
            if fv.terms().any(|t| t.label != v.label) {
                r = Err(format!("Phi({v}) leaves component {}", v.label));
                break;
            }
            if alg.apply_cap_phi(&fv) != ev {
                r = Err(format!("Phi^2 moves {v}"));
                break;
            }
        }
        r
    }));

    report.push(Check::from_result("Phi: antihomomorphism fixing the unit", {
        let mut r = Ok(());
        let unit = Element::single(alg.unit());
        if alg.apply_cap_phi(&unit) != unit {
            r = Err("Phi moves the unit".to_string());
        }
        if r.is_ok() {
            'outer: for &a in &basis {
                for &b in &basis {
                    let left = alg.apply_cap_phi(&alg.mult_gens(a, b));
                    let right = alg.multiply(
                        &alg.apply_cap_phi(&Element::single(b)),
                        &alg.apply_cap_phi(&Element::single(a)),
                    );
                    if left != right {
                        r = Err(format!("Phi(({a})({b})) != Phi({b}) Phi({a})"));
                        break 'outer;
                    }
                }
            }
        }
        r
    }));

    report.push(Check::from_result("Phi: preserves eta", {
        let mut r = Ok(());
        'outer: for &a in &basis {
            for &b in &basis {
                let fa = alg.apply_cap_phi(&Element::single(a));
                let fb = alg.apply_cap_phi(&Element::single(b));
                if alg.eta(&fa, &fb) != alg.eta_gens(a, b) {
                    r = Err(format!("eta(Phi({a}), Phi({b})) != eta({a}, {b})"));
                    break 'outer;
                }
            }
        }
        r
    }));

    report.push(Check::from_result("Phi: commutes with phi", {
        let mut r = Ok(());
        'outer: for &beta in &labels {
            for &v in &basis {
                let ev = Element::single(v);
                let left = alg.apply_cap_phi(&alg.apply_phi(beta, &ev));
                let right = alg.apply_phi(beta, &alg.apply_cap_phi(&ev));
                if left != right {
                    r = Err(format!("Phi . phi_{beta} != phi_{beta} . Phi on {v}"));
                    break 'outer;
                }
            }
        }
        r
    }));

    // everything beyond this point needs the derived comultiplication
    let comult = match full_comultiplication(alg) {
        Ok(c) => {
            report.push(Check::pass("comultiplication: unique solution for every label pair"));
            c
        }
        Err(e) => {
            report.push(Check::fail(
                "comultiplication: unique solution for every label pair",
                e.to_string(),
            ));
            return Ok(report);
        }
    };
    let delta = |a: Label, b: Label, v: &Element| -> TensorElement {
        let table = &comult[&(a, b)];
        let mut out = TensorElement::zero();
        for g in v.terms() {
            out.add(&table[g]);
        }
        out
    };

    report.push(Check::from_result("comultiplication: defining relation", {
        // (id (x) eta) o (Delta_{a,b} (x) id) = m on every component pair
        let mut r = Ok(());
        'outer: for &a in &labels {
            for &b in &labels {
                for v in alg.component_basis(a.xor(&b)) {
                    for w in alg.component_basis(b) {
                        let mut contracted = Element::zero();
                        for (s, t) in delta(a, b, &Element::single(v)).pairs() {
                            if alg.eta_gens(*t, w) {
                                contracted.add_term(*s);
                            }
                        }
                        if contracted != alg.mult_gens(v, w) {
                            r = Err(format!(
                                "relation fails for Delta_{{{a},{b}}}({v}) against {w}"
                            ));
                            break 'outer;
                        }
                    }
                }
            }
        }
        r
    }));

    report.push(Check::from_result("twisted comultiplication identities", {
        // m o (Phi (x) phi_c) o Delta_{a,b}(v) = phi_c(theta_{a+c} theta_c v)
        // m o (phi_c (x) Phi) o Delta_{a,b}(v) = phi_c(theta_{b+c} theta_c v)
        let mut r = Ok(());
        'outer: for &a in &labels {
            for &b in &labels {
                for &c in &labels {
                    for v in alg.component_basis(a.xor(&b)) {
                        let ev = Element::single(v);
                        let dv = delta(a, b, &ev);
                        let mut left1 = Element::zero();
                        let mut left2 = Element::zero();
                        for (s, t) in dv.pairs() {
                            left1.add(&alg.multiply(
                                &alg.apply_cap_phi(&Element::single(*s)),
                                &alg.apply_phi(c, &Element::single(*t)),
                            ));
                            left2.add(&alg.multiply(
                                &alg.apply_phi(c, &Element::single(*s)),
                                &alg.apply_cap_phi(&Element::single(*t)),
                            ));
                        }
                        let right = |first: Label| {
                            alg.apply_phi(
                                c,
                                &alg.multiply(
                                    &alg.theta(first.xor(&c)),
                                    &alg.multiply(&alg.theta(c), &ev),
                                ),
                            )
                        };
                        if left1 != right(a) || left2 != right(b) {
                            r = Err(format!(
                                "twisted identity fails for (a, b, c) = ({a}, {b}, {c}), v = {v}"
                            ));
                            break 'outer;
                        }
                    }
                }
            }
        }
        r
    }));

    report.push(Check::from_result("theta: Phi(theta_b v) twists by phi", {
        // Phi(theta_b v) = phi_{b+a}(theta_{b+a} v) for v in component a
        let mut r = Ok(());
        'outer: for &b in &labels {
            for &v in &basis {
                let a = v.label;
                let ev = Element::single(v);
                let left = alg.apply_cap_phi(&alg.multiply(&alg.theta(b), &ev));
                let ba = b.xor(&a);
                let right = alg.apply_phi(ba, &alg.multiply(&alg.theta(ba), &ev));
                if left != right {
                    r = Err(format!("fails for theta_{b} and v = {v}"));
                    break 'outer;
                }
            }
        }
        r
    }));

    report.push(Check::from_result("theta: fixed by Phi and by every phi", {
        let mut r = Ok(());
        for &a in &labels {
            let th = alg.theta(a);
            if alg.apply_cap_phi(&th) != th {
                r = Err(format!("Phi moves theta_{a}"));
                break;
            }
            for &b in &labels {
                if alg.apply_phi(b, &th) != th {
                    r = Err(format!("phi_{b} moves theta_{a}"));
                    break;
                }
            }
        }
        r
    }));

    report.push(Check::from_result("theta: triple product equals q(1) theta", {
        let mut r = Ok(());
        'outer: for &a in &labels {
            for &b in &labels {
                for &c in &labels {
                    let q1 = match twisted_copairing_product(alg, a.xor(&b), b.xor(&c)) {
                        Ok(q) => q,
                        Err(e) => {
                            r = Err(format!("q(1) for ({a}, {b}, {c}): {e}"));
                            break 'outer;
                        }
                    };
                    let left = alg.multiply(
                        &alg.multiply(&alg.theta(a), &alg.theta(b)),
                        &alg.theta(c),
                    );
                    let right = alg.multiply(&q1, &alg.theta(a.xor(&b).xor(&c)));
                    if left != right {
                        r = Err(format!(
                            "theta_{a} theta_{b} theta_{c} != q(1) theta_{} (q(1) = {q1})",
                            a.xor(&b).xor(&c)
                        ));
                        break 'outer;
                    }
                }
            }
        }
        r
    }));

    report.push(Check::from_result("comultiplication: coassociativity", {
        let mut r = Ok(());
        'outer: for &a in &labels {
            for &b in &labels {
                for &c in &labels {
                    let whole = a.xor(&b).xor(&c);
                    for v in alg.component_basis(whole) {
                        let ev = Element::single(v);
                        let mut left = Tensor3::new();
                        for (p, q) in delta(a.xor(&b), c, &ev).pairs() {
                            for (s, t) in delta(a, b, &Element::single(*p)).pairs() {
                                t3_add(&mut left, (*s, *t, *q));
                            }
                        }
                        let mut right = Tensor3::new();
                        for (s, p) in delta(a, b.xor(&c), &ev).pairs() {
                            for (t, u) in delta(b, c, &Element::single(*p)).pairs() {
                                t3_add(&mut right, (*s, *t, *u));
                            }
                        }
                        if left != right {
                            r = Err(format!(
                                "coassociativity fails for ({a}, {b}, {c}) on {v}"
                            ));
                            break 'outer;
                        }
                    }
                }
            }
        }
        r
    }));

    report.push(Check::from_result("counit law", {
        // (eps (x) id) o Delta_{0,a} = id and (id (x) eps) o Delta_{a,0} = id
        let mut r = Ok(());
        let zero = Label::zero(alg.k());
        'outer: for &a in &labels {
            for v in alg.component_basis(a) {
                let ev = Element::single(v);
                let mut left = Element::zero();
                for (s, t) in delta(zero, a, &ev).pairs() {
                    if alg.counit(&Element::single(*s)) {
                        left.add_term(*t);
                    }
                }
                let mut right = Element::zero();
                for (s, t) in delta(a, zero, &ev).pairs() {
                    if alg.counit(&Element::single(*t)) {
                        right.add_term(*s);
                    }
                }
                if left != ev || right != ev {
                    r = Err(format!("counit law fails on {v}"));
                    break 'outer;
                }
            }
        }
        r
    }));

    report.push(Check::from_result(
        "frobenius compatibility: (id (x) m)(Delta (x) id) = Delta m",
        {
            let mut r = Ok(());
            'outer: for &a in &labels {
                for &b in &labels {
                    for &c in &labels {
                        for v in alg.component_basis(a.xor(&b)) {
                            for w in alg.component_basis(c) {
                                let mut left = TensorElement::zero();
                                for (s, t) in delta(a, b, &Element::single(v)).pairs() {
                                    for u in alg.mult_gens(*t, w).terms() {
                                        left.add_term((*s, *u));
                                    }
                                }
                                let right = delta(a, b.xor(&c), &alg.mult_gens(v, w));
                                if left != right {
                                    r = Err(format!(
                                        "compatibility fails for ({a}, {b}, {c}) on ({v}, {w})"
                                    ));
                                    break 'outer;
                                }
                            }
                        }
                    }
                }
            }
            r
        },
    ));

    Ok(report)
}

/// Solves for the copairing twisted by `phi_twist` on the given component
/// and returns the product of its two legs: with `sum_i a_i (x) b_i`
/// satisfying `sum_i eta(b_i, v) a_i = phi_twist(v)` for all `v`, the result
/// is `sum_i a_i b_i`.
fn twisted_copairing_product(
    alg: &Algebra,
    component: Label,
    twist: Label,
) -> Result<Element, String> {
    let comp = alg.component_basis(component);
    // unknowns c_{s,t} for e_s (x) e_t; equations indexed by (v, output coord)
    let mut system = F2Matrix::zeros(4, 4);
    let mut rhs = F2Vector::zeros(4);
    for (vi, &v) in comp.iter().enumerate() {
        let img = alg.apply_phi(twist, &Element::single(v));
        for (ui, &u) in comp.iter().enumerate() {
            for s in 0..2 {
                for t in 0..2 {
                    if s == ui && alg.eta_gens(comp[t], v) {
                        system.flip(vi * 2 + ui, s * 2 + t);
                    }
                }
            }
            if img.contains(&u) {
                rhs.set(vi * 2 + ui, true);
            }
        }
    }
    if !system.kernel_basis().is_empty() {
        return Err("copairing is not unique (eta is degenerate)".to_string());
    }
    let solution = system
        .solve(&rhs)
        .ok_or_else(|| "copairing equation has no solution".to_string())?;
    let mut out = Element::zero();
    for s in 0..2 {
        for t in 0..2 {
            if solution.get(s * 2 + t) {
                out.add(&alg.mult_gens(comp[s], comp[t]));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::{Algebra, AlgebraName, BasisGen, Element, GenName, Label};

    #[test]
    fn builtins_pass_all_axioms_k1() {
        for name in [AlgebraName::L, AlgebraName::LPrime, AlgebraName::LDoublePrime] {
            let alg = Algebra::builtin(name, 1).unwrap();
            let report = alg.check_axioms().unwrap();
            assert!(
                report.all_passed(),
                "{name} fails: {:?}",
                report.failures().collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn l_passes_all_axioms_k2() {
        let alg = Algebra::builtin(AlgebraName::L, 2).unwrap();
        let report = alg.check_axioms().unwrap();
        assert!(
            report.all_passed(),
            "failures: {:?}",
            report.failures().collect::<Vec<_>>()
        );
    }

    #[test]
    fn mutated_multiplication_is_caught_with_witness() {
        let alg = Algebra::builtin(AlgebraName::L, 1).unwrap();
        let x = BasisGen::new(Label::zero(1), GenName::X);
        let broken = alg.with_mult_entry(x, x, Element::single(x)).unwrap();
        let report = broken.check_axioms().unwrap();
        assert!(!report.all_passed());
        let failure = report.failures().next().unwrap();
        assert!(failure.witness.is_some(), "failure carries no witness");
    }

    #[test]
    fn cap_is_enforced() {
        let alg = Algebra::builtin(AlgebraName::L, 4).unwrap();
        assert!(alg.check_axioms().is_err());
    }
}
