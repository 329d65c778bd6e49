//! Label-graded Frobenius-type algebras over F2, given by structure-constant
//! tables.
//!
//! The label group is `F2^k`. Every label component is two-dimensional: the
//! zero component has basis `{1, x}`, every nonzero component has basis
//! `{y, z}`. An algebra bundles a multiplication table, an inner product
//! `eta`, a family `theta` of elements of the zero component, label-indexed
//! automorphisms `phi` and a global involution `Phi`; for all three built-in
//! algebras `theta` is zero and `phi`, `Phi` are the identity. The
//! comultiplication is not stored: it is derived from `eta` and the
//! multiplication by solving the defining linear relation per component pair.

mod axioms;
mod builtin;
mod file;
mod relations;

pub use axioms::{Check, CheckReport, MAX_CHECK_DIM};
pub use builtin::MAX_TABLE_DIM;
pub use file::{algebra_from_json, algebra_from_json_with_dim};
pub use relations::{four_tube_cap_instance, Tensor4};

use crate::f2::{F2Matrix, F2Vector};
use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("label dimension {0} exceeds the supported maximum {1}")]
    LabelDimTooLarge(u8, u8),
    #[error("axiom checking is capped at label dimension {max}, got {got}")]
    CheckCapExceeded { got: u8, max: u8 },
    #[error("generator {0} is not valid for label dimension {1}")]
    BadGenerator(String, u8),
    #[error("product of {a} and {b} contains a term outside component {expect}")]
    GradingViolation { a: String, b: String, expect: String },
    #[error("eta pairs generators of mismatched labels: {0}, {1}")]
    EtaAcrossLabels(String, String),
    #[error("algebra is inconsistent: {0}")]
    Inconsistent(String),
    #[error("algebra file is malformed: {0}")]
    Malformed(String),
}

/// An element of `F2^k`: the first-homology class carried by an arc or
/// circle. At most 32 coordinates.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label {
    bits: u32,
    dim: u8,
}

impl Label {
    pub const MAX_DIM: u8 = 32;

    pub fn zero(dim: u8) -> Self {
        assert!(dim <= Self::MAX_DIM, "label dimension too large");
        Self { bits: 0, dim }
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        assert!(bits.len() <= Self::MAX_DIM as usize, "label dimension too large");
        let mut packed = 0u32;
        for (i, &b) in bits.iter().enumerate() {
            assert!(b <= 1, "label entry {b} is not an F2 value");
            packed |= u32::from(b) << i;
        }
        Self {
            bits: packed,
            dim: bits.len() as u8,
        }
    }

    pub fn dim(&self) -> u8 {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Coordinatewise sum; labels form an F2-vector space, so `a + a = 0`.
    pub fn xor(&self, other: &Label) -> Label {
        assert_eq!(self.dim, other.dim, "label dimension mismatch");
        Label {
            bits: self.bits ^ other.bits,
            dim: self.dim,
        }
    }

    pub fn bit(&self, i: usize) -> bool {
        assert!((i as u8) < self.dim);
        (self.bits >> i) & 1 == 1
    }

    pub fn bits_vec(&self) -> Vec<u8> {
        (0..self.dim as usize).map(|i| u8::from(self.bit(i))).collect()
    }

    /// All `2^dim` labels in ascending order.
    pub fn all(dim: u8) -> impl Iterator<Item = Label> {
        assert!(dim < 31, "label enumeration overflows");
        (0u32..1 << dim).map(move |bits| Label { bits, dim })
    }

    /// Parses a bitstring such as `"10"`; the empty string is the unique
    /// label of dimension zero.
    pub fn parse(s: &str, dim: u8) -> Result<Label, AlgebraError> {
        if s.len() != dim as usize {
            return Err(AlgebraError::Malformed(format!(
                "label '{s}' should have {dim} bits"
            )));
        }
        let mut bits = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                '0' => bits.push(0),
                '1' => bits.push(1),
                _ => {
                    return Err(AlgebraError::Malformed(format!(
                        "label '{s}' contains a non-binary character"
                    )))
                }
            }
        }
        Ok(Label::from_bits(&bits))
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim as usize {
            write!(f, "{}", u8::from(self.bit(i)))?;
        }
        Ok(())
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Basis generator names. `One` and `X` span the zero component, `Y` and `Z`
/// span every nonzero component.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GenName {
    One,
    X,
    Y,
    Z,
}

/// A basis generator of the algebra: a label together with a generator name
/// valid for that label.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisGen {
    pub label: Label,
    pub name: GenName,
}

impl BasisGen {
    pub fn new(label: Label, name: GenName) -> Self {
        let ok = match name {
            GenName::One | GenName::X => label.is_zero(),
            GenName::Y | GenName::Z => !label.is_zero(),
        };
        assert!(ok, "generator {name:?} is invalid for label {label}");
        Self { label, name }
    }

    pub fn unit(dim: u8) -> Self {
        Self::new(Label::zero(dim), GenName::One)
    }

    /// Parses a generator token: `1`, `x`, `y:<bits>` or `z:<bits>`.
    pub fn parse(token: &str, dim: u8) -> Result<Self, AlgebraError> {
        match token {
            "1" => Ok(Self::new(Label::zero(dim), GenName::One)),
            "x" => Ok(Self::new(Label::zero(dim), GenName::X)),
            _ => {
                let (name, rest) = match token.split_once(':') {
                    Some(("y", rest)) => (GenName::Y, rest),
                    Some(("z", rest)) => (GenName::Z, rest),
                    _ => {
                        return Err(AlgebraError::BadGenerator(token.to_string(), dim));
                    }
                };
                let label = Label::parse(rest, dim)?;
                if label.is_zero() {
                    return Err(AlgebraError::BadGenerator(token.to_string(), dim));
                }
                Ok(Self::new(label, name))
            }
        }
    }
}

impl fmt::Debug for BasisGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.name {
            GenName::One => write!(f, "1"),
            GenName::X => write!(f, "x"),
            GenName::Y => write!(f, "y:{}", self.label),
            GenName::Z => write!(f, "z:{}", self.label),
        }
    }
}

impl fmt::Display for BasisGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// An algebra element: a set of basis generators with coefficient one.
/// Addition is symmetric difference.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Element {
    terms: BTreeSet<BasisGen>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(g: BasisGen) -> Self {
        let mut terms = BTreeSet::new();
        terms.insert(g);
        Self { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = BasisGen>>(iter: I) -> Self {
        let mut e = Self::zero();
        for g in iter {
            e.add_term(g);
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &BasisGen> {
        self.terms.iter()
    }

    pub fn contains(&self, g: &BasisGen) -> bool {
        self.terms.contains(g)
    }

    /// XOR-inserts a term (F2 coefficients: a repeated term cancels).
    pub fn add_term(&mut self, g: BasisGen) {
        if !self.terms.remove(&g) {
            self.terms.insert(g);
        }
    }

    pub fn add(&mut self, other: &Element) {
        for &g in &other.terms {
            self.add_term(g);
        }
    }

    pub fn sum(mut self, other: &Element) -> Element {
        self.add(other);
        self
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for g in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{g}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// An element of the twofold tensor product, as a set of generator pairs.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TensorElement {
    terms: BTreeSet<(BasisGen, BasisGen)>,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (BasisGen, BasisGen)>>(iter: I) -> Self {
        let mut t = Self::zero();
        for p in iter {
            t.add_term(p);
        }
        t
    }

    pub fn add_term(&mut self, pair: (BasisGen, BasisGen)) {
        if !self.terms.remove(&pair) {
            self.terms.insert(pair);
        }
    }

    pub fn add(&mut self, other: &TensorElement) {
        for &p in &other.terms {
            self.add_term(p);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn pairs(&self) -> impl Iterator<Item = &(BasisGen, BasisGen)> {
        self.terms.iter()
    }

    /// Swaps the two tensor factors.
    pub fn permuted(&self) -> TensorElement {
        TensorElement::from_pairs(self.terms.iter().map(|&(a, b)| (b, a)))
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (a, b) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{a}(x){b}")?;
            first = false;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AlgebraName {
    L,
    LPrime,
    LDoublePrime,
    Custom,
}

impl fmt::Display for AlgebraName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraName::L => write!(f, "L"),
            AlgebraName::LPrime => write!(f, "Lprime"),
            AlgebraName::LDoublePrime => write!(f, "Ldoubleprime"),
            AlgebraName::Custom => write!(f, "custom"),
        }
    }
}

impl AlgebraName {
    pub fn parse_builtin(s: &str) -> Option<AlgebraName> {
        match s {
            "L" => Some(AlgebraName::L),
            "Lprime" => Some(AlgebraName::LPrime),
            "Ldoubleprime" => Some(AlgebraName::LDoublePrime),
            _ => None,
        }
    }
}

pub type LinearMap = BTreeMap<BasisGen, Element>;

/// An algebra over F2 graded by labels in `F2^k`, presented by tables.
///
/// Immutable after construction; all operations are pure.
#[derive(Clone)]
pub struct Algebra {
    k: u8,
    name: AlgebraName,
    mult: BTreeMap<(BasisGen, BasisGen), Element>,
    eta: BTreeSet<(BasisGen, BasisGen)>,
    theta: BTreeMap<Label, Element>,
    phi: BTreeMap<Label, LinearMap>,
    cap_phi: Option<LinearMap>,
}

impl Algebra {
    /// Builds an algebra from explicit tables, validating the structural
    /// invariants: products respect the label grading and `eta` only pairs
    /// generators of equal label. Unlisted products are zero; `theta`
    /// defaults to zero and `phi`, `Phi` to the identity.
    pub fn from_parts(
        k: u8,
        name: AlgebraName,
        mult: BTreeMap<(BasisGen, BasisGen), Element>,
        eta: BTreeSet<(BasisGen, BasisGen)>,
        theta: BTreeMap<Label, Element>,
        phi: BTreeMap<Label, LinearMap>,
        cap_phi: Option<LinearMap>,
    ) -> Result<Algebra, AlgebraError> {
        if k > MAX_TABLE_DIM {
            return Err(AlgebraError::LabelDimTooLarge(k, MAX_TABLE_DIM));
        }
        for ((a, b), out) in &mult {
            let expect = a.label.xor(&b.label);
            if out.terms().any(|t| t.label != expect) {
                return Err(AlgebraError::GradingViolation {
                    a: a.to_string(),
                    b: b.to_string(),
                    expect: expect.to_string(),
                });
            }
        }
        for (a, b) in &eta {
            // eta vanishes across distinct components: labels must cancel
            if !a.label.xor(&b.label).is_zero() {
                return Err(AlgebraError::EtaAcrossLabels(a.to_string(), b.to_string()));
            }
        }
        for (label, e) in &theta {
            if e.terms().any(|t| !t.label.is_zero()) {
                return Err(AlgebraError::Inconsistent(format!(
                    "theta_{label} has a term outside the zero component"
                )));
            }
        }
        Ok(Algebra {
            k,
            name,
            mult,
            eta,
            theta,
            phi,
            cap_phi,
        })
    }

    /// The built-in algebra of the given name over labels `F2^k`.
    pub fn builtin(name: AlgebraName, k: u8) -> Result<Algebra, AlgebraError> {
        builtin::build(name, k)
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    pub fn name(&self) -> AlgebraName {
        self.name
    }

    pub fn unit(&self) -> BasisGen {
        BasisGen::unit(self.k)
    }

    /// The two basis generators of the component with the given label,
    /// in canonical order (`1 < x`, `y < z`).
    pub fn component_basis(&self, label: Label) -> [BasisGen; 2] {
        assert_eq!(label.dim(), self.k, "label dimension mismatch");
        if label.is_zero() {
            [
                BasisGen::new(label, GenName::One),
                BasisGen::new(label, GenName::X),
            ]
        } else {
            [
                BasisGen::new(label, GenName::Y),
                BasisGen::new(label, GenName::Z),
            ]
        }
    }

    pub fn all_labels(&self) -> impl Iterator<Item = Label> {
        Label::all(self.k)
    }

    pub fn all_basis(&self) -> Vec<BasisGen> {
        self.all_labels()
            .flat_map(|l| self.component_basis(l))
            .collect()
    }

    pub fn theta(&self, label: Label) -> Element {
        self.theta.get(&label).cloned().unwrap_or_default()
    }

    /// Product of two basis generators, from the table.
    pub fn mult_gens(&self, a: BasisGen, b: BasisGen) -> Element {
        self.mult.get(&(a, b)).cloned().unwrap_or_default()
    }

    /// Bilinear extension of the multiplication table.
    pub fn multiply(&self, a: &Element, b: &Element) -> Element {
        let mut out = Element::zero();
        for &ga in a.terms() {
            for &gb in b.terms() {
                out.add(&self.mult_gens(ga, gb));
            }
        }
        out
    }

    pub fn eta_gens(&self, a: BasisGen, b: BasisGen) -> bool {
        self.eta.contains(&(a, b))
    }

    /// Bilinear extension of the inner product.
    pub fn eta(&self, a: &Element, b: &Element) -> bool {
        let mut acc = false;
        for &ga in a.terms() {
            for &gb in b.terms() {
                acc ^= self.eta_gens(ga, gb);
            }
        }
        acc
    }

    /// The counit, derived as `eps(v) = eta(1 (x) v)`.
    pub fn counit(&self, v: &Element) -> bool {
        self.eta(&Element::single(self.unit()), v)
    }

    pub fn apply_phi(&self, beta: Label, v: &Element) -> Element {
        match self.phi.get(&beta) {
            None => v.clone(),
            Some(map) => {
                let mut out = Element::zero();
                for g in v.terms() {
                    match map.get(g) {
                        Some(img) => out.add(img),
                        None => out.add_term(*g),
                    }
                }
                out
            }
        }
    }

    pub fn apply_cap_phi(&self, v: &Element) -> Element {
        match &self.cap_phi {
            None => v.clone(),
            Some(map) => {
                let mut out = Element::zero();
                for g in v.terms() {
                    match map.get(g) {
                        Some(img) => out.add(img),
                        None => out.add_term(*g),
                    }
                }
                out
            }
        }
    }

    /// Derives the comultiplication component mapping the `(alpha + beta)`
    /// component into `alpha (x) beta`, as the unique solution of
    /// `(id (x) eta) o (Delta (x) id) = m`. Returns the images of the two
    /// component basis generators.
    ///
    /// Fails with an inconsistency error when the induced linear system has
    /// no solution or more than one, which signals a malformed algebra
    /// (degenerate `eta`).
    pub fn comultiplication(
        &self,
        alpha: Label,
        beta: Label,
    ) -> Result<BTreeMap<BasisGen, TensorElement>, AlgebraError> {
        let src = self.component_basis(alpha.xor(&beta));
        let left = self.component_basis(alpha);
        let right = self.component_basis(beta);
        // unknowns: coefficients of left[s] (x) right[t], indexed s*2 + t
        // equations: for w in basis(beta), u in basis(alpha):
        //   sum_{s,t} c_{s,t} [left[s] = u] eta(right[t], w) = <u> m(v, w)
        let mut system = F2Matrix::zeros(4, 4);
        for (wi, &w) in right.iter().enumerate() {
            for (ui, _) in left.iter().enumerate() {
                for s in 0..2 {
                    for t in 0..2 {
                        if s == ui && self.eta_gens(right[t], w) {
                            system.flip(wi * 2 + ui, s * 2 + t);
                        }
                    }
                }
            }
        }
        if !system.kernel_basis().is_empty() {
            return Err(AlgebraError::Inconsistent(format!(
                "comultiplication into {alpha} (x) {beta} is not unique (eta is degenerate)"
            )));
        }
        let mut out = BTreeMap::new();
        for &v in &src {
            let mut rhs = F2Vector::zeros(4);
            for (wi, &w) in right.iter().enumerate() {
                let prod = self.mult_gens(v, w);
                for (ui, &u) in left.iter().enumerate() {
                    if prod.contains(&u) {
                        rhs.set(wi * 2 + ui, true);
                    }
                }
            }
            let solution = system.solve(&rhs).ok_or_else(|| {
                AlgebraError::Inconsistent(format!(
                    "comultiplication of {v} into {alpha} (x) {beta} has no solution"
                ))
            })?;
            let mut te = TensorElement::zero();
            for s in 0..2 {
                for t in 0..2 {
                    if solution.get(s * 2 + t) {
                        te.add_term((left[s], right[t]));
                    }
                }
            }
            out.insert(v, te);
        }
        Ok(out)
    }

    /// Applies the derived comultiplication to an element of the
    /// `(alpha + beta)` component.
    pub fn comult_apply(
        &self,
        alpha: Label,
        beta: Label,
        v: &Element,
    ) -> Result<TensorElement, AlgebraError> {
        let table = self.comultiplication(alpha, beta)?;
        let mut out = TensorElement::zero();
        for g in v.terms() {
            let te = table.get(g).ok_or_else(|| {
                AlgebraError::Inconsistent(format!(
                    "element term {g} lies outside component {}",
                    alpha.xor(&beta)
                ))
            })?;
            out.add(te);
        }
        Ok(out)
    }

    /// The integer degree of a basis generator for the secondary grading:
    /// `deg(1) = 1`, `deg(x) = -1`, `deg(y) = t`, `deg(z) = -t`.
    pub fn degree(&self, g: &BasisGen, t: i64) -> i64 {
        match g.name {
            GenName::One => 1,
            GenName::X => -1,
            GenName::Y => t,
            GenName::Z => -t,
        }
    }

    /// Runs the full axiom suite by exhaustive enumeration over all labels
    /// and basis elements. Capped at `k <= 3`.
    pub fn check_axioms(&self) -> Result<CheckReport, AlgebraError> {
        axioms::check_axioms(self)
    }

    /// Checks the sphere, torus and four-tube relations.
    pub fn check_bar_natan_relations(&self) -> Result<CheckReport, AlgebraError> {
        relations::check_relations(self)
    }

    /// Returns a copy with one multiplication table entry replaced. Intended
    /// for negative controls in tests; the result still passes structural
    /// validation.
    pub fn with_mult_entry(
        &self,
        a: BasisGen,
        b: BasisGen,
        out: Element,
    ) -> Result<Algebra, AlgebraError> {
        let mut mult = self.mult.clone();
        mult.insert((a, b), out);
        Algebra::from_parts(
            self.k,
            AlgebraName::Custom,
            mult,
            self.eta.clone(),
            self.theta.clone(),
            self.phi.clone(),
            self.cap_phi.clone(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(alg: &Algebra, token: &str) -> BasisGen {
        BasisGen::parse(token, alg.k()).unwrap()
    }

    fn elem(alg: &Algebra, tokens: &[&str]) -> Element {
        Element::from_terms(tokens.iter().map(|t| gen(alg, t)))
    }

    #[test]
    fn label_arithmetic() {
        let a = Label::from_bits(&[1, 0]);
        let b = Label::from_bits(&[0, 1]);
        assert_eq!(a.xor(&b), Label::from_bits(&[1, 1]));
        assert!(a.xor(&a).is_zero());
        assert_eq!(Label::all(2).count(), 4);
        assert_eq!(a.to_string(), "10");
    }

    #[test]
    fn generator_tokens_round_trip() {
        for token in ["1", "x", "y:10", "z:01"] {
            let g = BasisGen::parse(token, 2).unwrap();
            assert_eq!(g.to_string(), token);
        }
        assert!(BasisGen::parse("y:00", 2).is_err());
        assert!(BasisGen::parse("w:10", 2).is_err());
        assert!(BasisGen::parse("y:1", 2).is_err());
    }

    #[test]
    fn element_addition_cancels() {
        let alg = Algebra::builtin(AlgebraName::L, 1).unwrap();
        let mut e = elem(&alg, &["1", "x"]);
        e.add(&elem(&alg, &["x"]));
        assert_eq!(e, elem(&alg, &["1"]));
        e.add(&elem(&alg, &["1"]));
        assert!(e.is_zero());
    }

    #[test]
    fn multiplication_lands_in_summed_label() {
        let alg = Algebra::builtin(AlgebraName::L, 2).unwrap();
        for a in alg.all_basis() {
            for b in alg.all_basis() {
                let expect = a.label.xor(&b.label);
                for t in alg.mult_gens(a, b).terms() {
                    assert_eq!(t.label, expect);
                }
            }
        }
    }

    #[test]
    fn builtin_l_table_entries() {
        let alg = Algebra::builtin(AlgebraName::L, 1).unwrap();
        let y = gen(&alg, "y:1");
        let z = gen(&alg, "z:1");
        assert_eq!(alg.mult_gens(y, z), elem(&alg, &["x"]));
        assert_eq!(alg.mult_gens(z, y), elem(&alg, &["x"]));
        assert_eq!(alg.mult_gens(y, y), Element::zero());
        // unit law on every basis generator
        for v in alg.all_basis() {
            assert_eq!(alg.mult_gens(alg.unit(), v), Element::single(v));
            assert_eq!(alg.mult_gens(v, alg.unit()), Element::single(v));
        }
    }

    #[test]
    fn builtin_l_distinct_nonzero_labels() {
        let alg = Algebra::builtin(AlgebraName::L, 2).unwrap();
        let ya = gen(&alg, "y:10");
        let yb = gen(&alg, "y:01");
        assert_eq!(alg.mult_gens(ya, yb), elem(&alg, &["y:11", "z:11"]));
    }

    #[test]
    fn builtin_lprime_kills_distinct_nonzero_products() {
        let alg = Algebra::builtin(AlgebraName::LPrime, 2).unwrap();
        let ya = gen(&alg, "y:10");
        let yb = gen(&alg, "y:01");
        let za = gen(&alg, "z:10");
        let zb = gen(&alg, "z:01");
        assert!(alg.mult_gens(ya, yb).is_zero());
        assert!(alg.mult_gens(za, zb).is_zero());
        assert!(alg.mult_gens(ya, zb).is_zero());
    }

    #[test]
    fn builtin_ldoubleprime_table_entries() {
        let alg = Algebra::builtin(AlgebraName::LDoublePrime, 1).unwrap();
        let x = gen(&alg, "x");
        let y = gen(&alg, "y:1");
        let z = gen(&alg, "z:1");
        assert_eq!(alg.mult_gens(x, x), elem(&alg, &["1"]));
        assert_eq!(alg.mult_gens(x, y), elem(&alg, &["y:1"]));
        assert_eq!(alg.mult_gens(z, x), elem(&alg, &["z:1"]));
        assert_eq!(alg.mult_gens(y, z), elem(&alg, &["x", "1"]));
    }

    #[test]
    fn eta_table_entries() {
        let alg = Algebra::builtin(AlgebraName::L, 1).unwrap();
        let one = gen(&alg, "1");
        let x = gen(&alg, "x");
        let y = gen(&alg, "y:1");
        let z = gen(&alg, "z:1");
        assert!(alg.eta_gens(one, x));
        assert!(alg.eta_gens(x, one));
        assert!(!alg.eta_gens(one, one));
        assert!(!alg.eta_gens(x, x));
        assert!(alg.eta_gens(y, z));
        assert!(!alg.eta_gens(y, y));
        assert!(!alg.eta_gens(z, z));
    }

    #[test]
    fn counit_matches_table() {
        for name in [AlgebraName::L, AlgebraName::LPrime, AlgebraName::LDoublePrime] {
            let alg = Algebra::builtin(name, 1).unwrap();
            assert!(!alg.counit(&elem(&alg, &["1"])));
            assert!(alg.counit(&elem(&alg, &["x"])));
        }
    }

    #[test]
    fn comultiplication_zero_component_l() {
        let alg = Algebra::builtin(AlgebraName::L, 1).unwrap();
        let zero = Label::zero(1);
        let table = alg.comultiplication(zero, zero).unwrap();
        let one = gen(&alg, "1");
        let x = gen(&alg, "x");
        assert_eq!(
            table[&one],
            TensorElement::from_pairs([(one, x), (x, one)])
        );
        assert_eq!(table[&x], TensorElement::from_pairs([(x, x)]));
    }

    #[test]
    fn comultiplication_nonzero_pair_l() {
        let alg = Algebra::builtin(AlgebraName::L, 1).unwrap();
        let a = Label::from_bits(&[1]);
        let table = alg.comultiplication(a, a).unwrap();
        let one = gen(&alg, "1");
        let x = gen(&alg, "x");
        let y = gen(&alg, "y:1");
        let z = gen(&alg, "z:1");
        assert_eq!(table[&one], TensorElement::from_pairs([(y, z), (z, y)]));
        assert!(table[&x].is_zero());
    }

    #[test]
    fn comultiplication_ldoubleprime_mixed_pair() {
        // the defining relation forces (1 + x) (x) v here, because
        // m''(y (x) z) = x + 1 while m''(y (x) y) = 0
        let alg = Algebra::builtin(AlgebraName::LDoublePrime, 1).unwrap();
        let zero = Label::zero(1);
        let a = Label::from_bits(&[1]);
        let table = alg.comultiplication(zero, a).unwrap();
        let one = gen(&alg, "1");
        let x = gen(&alg, "x");
        let y = gen(&alg, "y:1");
        let z = gen(&alg, "z:1");
        assert_eq!(
            table[&y],
            TensorElement::from_pairs([(one, y), (x, y)])
        );
        assert_eq!(
            table[&z],
            TensorElement::from_pairs([(one, z), (x, z)])
        );
        // and Delta''_{0,0}(x) gains the 1 (x) 1 term
        let table00 = alg.comultiplication(zero, zero).unwrap();
        assert_eq!(
            table00[&x],
            TensorElement::from_pairs([(x, x), (one, one)])
        );
    }

    #[test]
    fn comultiplication_fails_for_degenerate_eta() {
        let alg = Algebra::builtin(AlgebraName::L, 1).unwrap();
        // erase eta on the zero component
        let mut eta = alg.eta.clone();
        let one = gen(&alg, "1");
        let x = gen(&alg, "x");
        eta.remove(&(one, x));
        eta.remove(&(x, one));
        let broken = Algebra::from_parts(
            1,
            AlgebraName::Custom,
            alg.mult.clone(),
            eta,
            BTreeMap::new(),
            BTreeMap::new(),
            None,
        )
        .unwrap();
        let zero = Label::zero(1);
        assert!(matches!(
            broken.comultiplication(zero, zero),
            Err(AlgebraError::Inconsistent(_))
        ));
    }

    #[test]
    fn grading_violation_rejected_at_construction() {
        let alg = Algebra::builtin(AlgebraName::L, 1).unwrap();
        let x = gen(&alg, "x");
        let y = gen(&alg, "y:1");
        // x * x may not land in a nonzero component
        assert!(matches!(
            alg.with_mult_entry(x, x, Element::single(y)),
            Err(AlgebraError::GradingViolation { .. })
        ));
    }
}
