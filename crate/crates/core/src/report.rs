//! Structured verdicts.
//!
//! Every check returns a [`CheckReport`]: a verdict, the identity that was
//! tested, and on failure the basis tuples where it fails together with the
//! exact residual (left side minus right side). Composite checks nest their
//! parts as children. Basis labels in witnesses are 1-based, matching the
//! `e1, e2, ...` naming used everywhere in output.

use std::fmt;

use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::tensor::{format_rational, Matrix, Rational, Tensor3, Vector};

/// Witnesses kept per report; further failures are only counted.
pub const WITNESS_LIMIT: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Condition {
    // algebra
    HomLie,
    Skew,
    TwistMultiplicative,
    HomJacobi,
    WeaklyInvolutive,
    InvariantForm,
    FormBracketInvariance,
    FormTwistSymmetry,
    FormEquivalence,
    // representations
    Representation,
    RepTwistAxiom,
    RepBracketAxiom,
    WeaklyInvolutiveRep,
    HomDualTwistCondition,
    HomDualBracketCondition,
    DoubleDual,
    BetaSquaredAction,
    SemidirectCriteria,
    RepEquivalence,
    ActionIntertwining,
    TwistIntertwining,
    // bialgebras
    MatchedPair,
    MatchedPairCompatLeft,
    MatchedPairCompatRight,
    DoubleCriteria,
    Subalgebra,
    Isotropic,
    ManinTriple,
    Bialgebra,
    Compatibility,
    TripleEquivalence,
    BracketHomomorphism,
    CobracketIntertwining,
    BialgebraHomomorphism,
    // r-matrices
    TwistCompatibility,
    SymmetricPartInvariance,
    AdPhiRSquare,
    Chybe,
    Coboundary,
    CoboundaryHomomorphism,
    CoboundaryInvolutivity,
    CoboundaryCompatibility,
    JacobiatorIdentity,
    DualBracketRoutes,
    SharpIdentity,
    CyclicCocycle,
    HomDouble,
    // operators
    OOperator,
    OOperatorTwist,
    OOperatorDefect,
    HomLeftSymmetric,
    PsiMultiplicative,
    AssociatorSymmetry,
    LeftMultWeaklyInvolutive,
    PsiSquaredLeftInvariance,
    DefectExpansion,
    CobracketsCoincide,
    Hypothesis,
    /// Two independently computed verdicts or values must coincide.
    Agreement,
}

impl Condition {
    pub fn name(self) -> String {
        serde_json::to_value(self)
            .ok()
            .and_then(|v| v.as_str().map(str::to_owned))
            .unwrap_or_else(|| format!("{self:?}"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Residual {
    Scalar(Rational),
    Vector(Vector),
    Matrix(Matrix),
    Tensor(Tensor3),
    /// Disagreeing boolean verdicts (left, right).
    Verdicts(bool, bool),
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residual::Scalar(r) => write!(f, "{}", format_rational(r)),
            Residual::Vector(v) => write!(f, "{v}"),
            Residual::Matrix(m) => write!(f, "{m}"),
            Residual::Tensor(t) => write!(f, "{t}"),
            Residual::Verdicts(a, b) => write!(f, "{a} vs {b}"),
        }
    }
}

impl Serialize for Residual {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Tagged<'a, T: Serialize> {
            kind: &'static str,
            value: &'a T,
        }
        match self {
            Residual::Scalar(r) => Tagged { kind: "scalar", value: &format_rational(r) }.serialize(s),
            Residual::Vector(v) => Tagged { kind: "vector", value: &RationalSeq(v.entries()) }.serialize(s),
            Residual::Matrix(m) => Tagged { kind: "matrix", value: &MatrixRows(m) }.serialize(s),
            Residual::Tensor(t) => Tagged { kind: "tensor", value: &TensorRows(t) }.serialize(s),
            Residual::Verdicts(a, b) => Tagged { kind: "verdicts", value: &[*a, *b] }.serialize(s),
        }
    }
}

pub(crate) struct RationalSeq<'a>(pub &'a [Rational]);

impl Serialize for RationalSeq<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for r in self.0 {
            seq.serialize_element(&format_rational(r))?;
        }
        seq.end()
    }
}

pub(crate) struct MatrixRows<'a>(pub &'a Matrix);

impl Serialize for MatrixRows<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows = self.0.to_rows();
        let mut seq = s.serialize_seq(Some(rows.len()))?;
        for row in &rows {
            seq.serialize_element(&RationalSeq(row))?;
        }
        seq.end()
    }
}

pub(crate) struct TensorRows<'a>(pub &'a Tensor3);

impl Serialize for TensorRows<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let d1 = self.0.dims().0;
        let mut seq = s.serialize_seq(Some(d1))?;
        for i in 0..d1 {
            seq.serialize_element(&MatrixRows(&self.0.slice(i)))?;
        }
        seq.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub condition: Condition,
    /// 1-based basis labels of the failing tuple.
    pub basis: Vec<usize>,
    pub residual: Residual,
}

impl Witness {
    /// Builds a witness from 0-based loop indices.
    pub fn at(condition: Condition, indices: &[usize], residual: Residual) -> Self {
        Witness { condition, basis: indices.iter().map(|i| i + 1).collect(), residual }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Flag {
    pub name: String,
    pub value: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub condition: Condition,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "is_zero_usize")]
    pub omitted_witnesses: usize,
    /// Informational properties that do not affect the verdict.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub flags: Vec<Flag>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<CheckReport>,
}

fn is_zero_usize(n: &usize) -> bool {
    *n == 0
}

impl CheckReport {
    /// A passing report with nothing recorded yet.
    pub fn new(condition: Condition) -> Self {
        CheckReport {
            condition,
            label: None,
            passed: true,
            witnesses: Vec::new(),
            omitted_witnesses: 0,
            flags: Vec::new(),
            notes: Vec::new(),
            children: Vec::new(),
        }
    }

    pub fn labelled(condition: Condition, label: impl Into<String>) -> Self {
        let mut r = Self::new(condition);
        r.label = Some(label.into());
        r
    }

    /// A report whose verdict is the conjunction of its children.
    pub fn all_of(condition: Condition, children: Vec<CheckReport>) -> Self {
        let mut r = Self::new(condition);
        for c in children {
            r.absorb(c);
        }
        r
    }

    /// Verdict-only report with no witness structure.
    pub fn verdict(condition: Condition, label: impl Into<String>, passed: bool) -> Self {
        let mut r = Self::labelled(condition, label);
        r.passed = passed;
        r
    }

    /// Checks that two independently obtained verdicts agree.
    pub fn agreement(label: impl Into<String>, left: bool, right: bool) -> Self {
        let mut r = Self::labelled(Condition::Agreement, label);
        if left != right {
            r.fail(Witness {
                condition: Condition::Agreement,
                basis: Vec::new(),
                residual: Residual::Verdicts(left, right),
            });
        }
        r
    }

    pub fn fail(&mut self, witness: Witness) {
        self.passed = false;
        if self.witnesses.len() < WITNESS_LIMIT {
            self.witnesses.push(witness);
        } else {
            self.omitted_witnesses += 1;
        }
    }

    /// Records a witness when `residual` is nonzero.
    pub fn expect_zero_vector(&mut self, condition: Condition, indices: &[usize], residual: Vector) {
        if !residual.is_zero() {
            self.fail(Witness::at(condition, indices, Residual::Vector(residual)));
        }
    }

    pub fn expect_zero_matrix(&mut self, condition: Condition, indices: &[usize], residual: Matrix) {
        if !residual.is_zero() {
            self.fail(Witness::at(condition, indices, Residual::Matrix(residual)));
        }
    }

    pub fn expect_zero_tensor(&mut self, condition: Condition, indices: &[usize], residual: Tensor3) {
        if !residual.is_zero() {
            self.fail(Witness::at(condition, indices, Residual::Tensor(residual)));
        }
    }

    pub fn expect_zero_scalar(&mut self, condition: Condition, indices: &[usize], residual: Rational) {
        if residual != Rational::default() {
            self.fail(Witness::at(condition, indices, Residual::Scalar(residual)));
        }
    }

    /// Adds a child; the parent fails if the child fails.
    pub fn absorb(&mut self, child: CheckReport) {
        self.passed &= child.passed;
        self.children.push(child);
    }

    /// Adds a child without letting it affect the verdict.
    pub fn attach(&mut self, child: CheckReport) {
        self.children.push(child);
    }

    pub fn flag(&mut self, name: impl Into<String>, value: bool) {
        self.flags.push(Flag { name: name.into(), value });
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn get_flag(&self, name: &str) -> Option<bool> {
        self.flags.iter().find(|f| f.name == name).map(|f| f.value)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// First witness in depth-first order.
    pub fn first_witness(&self) -> Option<&Witness> {
        self.witnesses.first().or_else(|| self.children.iter().find_map(CheckReport::first_witness))
    }

    /// All witnesses in depth-first order.
    pub fn all_witnesses(&self) -> Vec<&Witness> {
        let mut out: Vec<&Witness> = self.witnesses.iter().collect();
        for c in &self.children {
            out.extend(c.all_witnesses());
        }
        out
    }

    /// Finds a descendant (or self) by condition.
    pub fn find(&self, condition: Condition) -> Option<&CheckReport> {
        if self.condition == condition {
            return Some(self);
        }
        self.children.iter().find_map(|c| c.find(condition))
    }

    pub fn find_labelled(&self, label: &str) -> Option<&CheckReport> {
        if self.label.as_deref() == Some(label) {
            return Some(self);
        }
        self.children.iter().find_map(|c| c.find_labelled(label))
    }

    fn write_tree(&self, f: &mut fmt::Formatter<'_>, depth: usize) -> fmt::Result {
        let pad = "  ".repeat(depth);
        let mark = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{pad}[{mark}] {}", self.condition.name())?;
        if let Some(label) = &self.label {
            write!(f, " ({label})")?;
        }
        writeln!(f)?;
        for flag in &self.flags {
            writeln!(f, "{pad}    {} = {}", flag.name, flag.value)?;
        }
        for note in &self.notes {
            writeln!(f, "{pad}    note: {note}")?;
        }
        const SHOWN: usize = 5;
        for w in self.witnesses.iter().take(SHOWN) {
            let tuple: Vec<String> = w.basis.iter().map(usize::to_string).collect();
            writeln!(f, "{pad}    {} at ({}): residual {}", w.condition.name(), tuple.join(","), w.residual)?;
        }
        let hidden = self.witnesses.len().saturating_sub(SHOWN) + self.omitted_witnesses;
        if hidden > 0 {
            writeln!(f, "{pad}    ... {hidden} more witnesses")?;
        }
        for c in &self.children {
            c.write_tree(f, depth + 1)?;
        }
        Ok(())
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_tree(f, 0)
    }
}
