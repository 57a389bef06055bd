//! Group words, their expansion into the truncated trace algebra, and the
//! collection algorithm that produces canonical exponent vectors over the
//! ordered commutator basis.
//!
//! The expansion sends a generator x to 1 + X and is multiplicative over
//! concatenation, so it is injective on the class-m quotient: collection
//! peels basis powers degree by degree until the series is exactly 1, and
//! the peeled exponents are the canonical form.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::commutators::{BasisElement, CommTree, MaltsevBasis};
use crate::error::{Error, Result};
use crate::graph::{CommutationGraph, Vertex};
use crate::lie::SegmentSolver;
use crate::trace::TruncatedSeries;

/// A word in the group generators: a sequence of `vertex^exponent`
/// syllables with nonzero exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupWord {
    syllables: Vec<(Vertex, BigInt)>,
}

impl GroupWord {
    pub fn identity() -> Self {
        GroupWord {
            syllables: Vec::new(),
        }
    }

    pub fn new(syllables: Vec<(Vertex, BigInt)>) -> Result<Self> {
        for (_, e) in &syllables {
            if e.is_zero() {
                return Err(Error::WordSyntax {
                    position: 0,
                    message: "zero exponent in syllable".to_string(),
                });
            }
        }
        Ok(GroupWord { syllables })
    }

    pub fn generator(v: Vertex) -> Self {
        GroupWord {
            syllables: vec![(v, BigInt::one())],
        }
    }

    pub fn syllables(&self) -> &[(Vertex, BigInt)] {
        &self.syllables
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut syllables = self.syllables.clone();
        syllables.extend_from_slice(&other.syllables);
        GroupWord { syllables }
    }

    /// The reversed-negated word.
    pub fn inverse(&self) -> Self {
        GroupWord {
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|(v, e)| (*v, -e.clone()))
                .collect(),
        }
    }

    /// Syntactic power: a single syllable scales its exponent, anything
    /// longer is repeated (inverted first when negative).
    pub fn pow(&self, e: i64) -> Self {
        if e == 0 || self.syllables.is_empty() {
            return GroupWord::identity();
        }
        if self.syllables.len() == 1 {
            let (v, k) = &self.syllables[0];
            return GroupWord {
                syllables: vec![(*v, k * BigInt::from(e))],
            };
        }
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = GroupWord::identity();
        for _ in 0..e.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Rendering with adjacent equal-vertex syllables merged; cancelled
    /// syllables disappear, and the empty word prints as `1`.
    pub fn format(&self, g: &CommutationGraph) -> String {
        let mut merged: Vec<(Vertex, BigInt)> = Vec::new();
        for (v, e) in &self.syllables {
            match merged.last_mut() {
                Some((lv, le)) if lv == v => {
                    *le += e;
                    if le.is_zero() {
                        merged.pop();
                    }
                }
                _ => merged.push((*v, e.clone())),
            }
        }
        if merged.is_empty() {
            return "1".to_string();
        }
        merged
            .iter()
            .map(|(v, e)| {
                if e.is_one() {
                    g.symbol(*v).to_string()
                } else {
                    format!("{}^{}", g.symbol(*v), e)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// The four-syllable expansion of a bracketed tree: a leaf is its
/// generator, a node `(u,v)` becomes `u^-1 v^-1 u v`.
pub fn commutator_word(t: &CommTree) -> GroupWord {
    match t {
        CommTree::Leaf(v) => GroupWord::generator(*v),
        CommTree::Node(l, r) => {
            let u = commutator_word(l);
            let v = commutator_word(r);
            u.inverse()
                .concat(&v.inverse())
                .concat(&u)
                .concat(&v)
        }
    }
}

/// Parses the word grammar
/// `expr := term+ ; term := atom ('^' int)? ; atom := generator | '(' expr ')' | '[' expr ',' expr ']'`
/// with whitespace between terms. `[u,v]` expands to `u^-1 v^-1 u v`, and
/// `^` binds immediately to its atom. Exponents must be nonzero.
pub fn parse_word(g: &CommutationGraph, text: &str) -> Result<GroupWord> {
    let mut parser = Parser {
        g,
        text: text.as_bytes(),
        pos: 0,
    };
    parser.skip_ws();
    let word = parser.parse_expr()?;
    parser.skip_ws();
    if parser.pos < parser.text.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(word)
}

struct Parser<'a> {
    g: &'a CommutationGraph,
    text: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: &str) -> Error {
        Error::WordSyntax {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.text.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", b as char)))
        }
    }

    fn parse_expr(&mut self) -> Result<GroupWord> {
        let mut out = GroupWord::identity();
        let mut terms = 0;
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some(b')') | Some(b']') | Some(b',') => break,
                _ => {
                    out = out.concat(&self.parse_term()?);
                    terms += 1;
                }
            }
        }
        if terms == 0 {
            return Err(self.error("expected a term"));
        }
        Ok(out)
    }

    fn parse_term(&mut self) -> Result<GroupWord> {
        let atom = self.parse_atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let int_pos = self.pos;
            let e = self.parse_int()?;
            if e == 0 {
                return Err(Error::WordSyntax {
                    position: int_pos,
                    message: "zero exponent".to_string(),
                });
            }
            return Ok(atom.pow(e));
        }
        Ok(atom)
    }

    fn parse_atom(&mut self) -> Result<GroupWord> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.parse_expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b'[') => {
                self.pos += 1;
                let u = self.parse_expr()?;
                self.expect(b',')?;
                let v = self.parse_expr()?;
                self.expect(b']')?;
                Ok(u.inverse().concat(&v.inverse()).concat(&u).concat(&v))
            }
            Some(b) if b.is_ascii_alphabetic() => {
                let start = self.pos;
                while self
                    .peek()
                    .is_some_and(|b| b.is_ascii_alphanumeric() || b == b'_')
                {
                    self.pos += 1;
                }
                let symbol = std::str::from_utf8(&self.text[start..self.pos]).unwrap();
                match self.g.vertex(symbol) {
                    Ok(v) => Ok(GroupWord::generator(v)),
                    Err(_) => Err(Error::WordSyntax {
                        position: start,
                        message: format!("unknown generator `{symbol}`"),
                    }),
                }
            }
            _ => Err(self.error("expected a generator, '(' or '['")),
        }
    }

    fn parse_int(&mut self) -> Result<i64> {
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits = std::str::from_utf8(&self.text[start..self.pos]).unwrap();
        digits.parse::<i64>().map_err(|_| Error::WordSyntax {
            position: start,
            message: "expected an integer exponent".to_string(),
        })
    }
}

/// The multiplicative expansion of a word: each syllable `v^e`
/// contributes `(1 + X_v)^e`, truncated at degree `class`.
pub fn magnus(g: &CommutationGraph, w: &GroupWord, class: usize) -> Result<TruncatedSeries> {
    if class == 0 {
        return Err(Error::ClassTooSmall);
    }
    let mut s = TruncatedSeries::one(class);
    for (v, e) in w.syllables() {
        let gen = TruncatedSeries::one_plus_generator(class, *v);
        s = s.mul(&gen.int_power(e, g)?, g)?;
    }
    Ok(s)
}

/// Canonical exponent vector over a basis, in basis order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    basis: Arc<MaltsevBasis>,
    exponents: Vec<BigInt>,
}

impl NormalForm {
    pub fn basis(&self) -> &MaltsevBasis {
        &self.basis
    }

    pub fn exponents(&self) -> &[BigInt] {
        &self.exponents
    }

    pub fn is_identity(&self) -> bool {
        self.exponents.iter().all(Zero::is_zero)
    }

    /// Basis elements with nonzero exponents, in basis order.
    pub fn nonzero_terms(&self) -> impl Iterator<Item = (&BasisElement, &BigInt)> {
        self.basis
            .elements()
            .iter()
            .zip(&self.exponents)
            .filter(|(_, e)| !e.is_zero())
    }

    /// `commutator:exponent` pairs joined by commas; `1` for the identity.
    pub fn format(&self) -> String {
        let g = self.basis.graph();
        let parts: Vec<String> = self
            .nonzero_terms()
            .map(|(b, e)| format!("{}:{}", b.tree.format(g), e))
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(", ")
        }
    }
}

/// Collection context for one basis: cached per-degree solvers and the
/// expansion of every basis element.
pub struct Collector {
    basis: Arc<MaltsevBasis>,
    solvers: Vec<SegmentSolver>,
    element_series: Vec<TruncatedSeries>,
}

impl Collector {
    pub fn new(basis: MaltsevBasis) -> Result<Self> {
        let basis = Arc::new(basis);
        let g = basis.graph();
        let m = basis.class();
        let solvers = (1..=m)
            .map(|k| SegmentSolver::new(g, k, basis.segment(k)))
            .collect::<Result<Vec<_>>>()?;
        let element_series = basis
            .elements()
            .iter()
            .map(|e| magnus(g, &commutator_word(&e.tree), m))
            .collect::<Result<Vec<_>>>()?;
        Ok(Collector {
            basis,
            solvers,
            element_series,
        })
    }

    pub fn basis(&self) -> &MaltsevBasis {
        &self.basis
    }

    pub fn graph(&self) -> &CommutationGraph {
        self.basis.graph()
    }

    pub fn class(&self) -> usize {
        self.basis.class()
    }

    pub fn identity(&self) -> NormalForm {
        NormalForm {
            basis: self.basis.clone(),
            exponents: vec![BigInt::zero(); self.basis.len()],
        }
    }

    pub fn from_exponents(&self, exponents: Vec<BigInt>) -> Result<NormalForm> {
        if exponents.len() != self.basis.len() {
            return Err(Error::BasisMismatch);
        }
        Ok(NormalForm {
            basis: self.basis.clone(),
            exponents,
        })
    }

    fn check(&self, nf: &NormalForm) -> Result<()> {
        if Arc::ptr_eq(&self.basis, &nf.basis) || *self.basis == *nf.basis {
            Ok(())
        } else {
            Err(Error::BasisMismatch)
        }
    }

    pub fn collect(&self, w: &GroupWord) -> Result<NormalForm> {
        let s = magnus(self.graph(), w, self.class())?;
        self.collect_series(&s)
    }

    /// Peels basis powers off an expansion degree by degree. After stage
    /// k the series must be 1 through degree k, and exactly 1 at the end;
    /// both are internal invariants of the basis.
    pub fn collect_series(&self, s: &TruncatedSeries) -> Result<NormalForm> {
        let m = self.class();
        let g = self.graph();
        if s.bound() != m {
            return Err(Error::BoundMismatch(s.bound(), m));
        }
        if !s.constant_term().is_one() {
            return Err(Error::NonUnitConstantTerm);
        }
        let mut s = s.clone();
        let mut exponents = vec![BigInt::zero(); self.basis.len()];
        for k in 1..=m {
            let t = self.solvers[k - 1].solve(&s.homogeneous(k))?;
            let range = self.basis.segment_range(k);
            // left-multiply by the inverse of the weight-k prefix: the
            // reversed product of c^{-t_c}
            for (offset, tc) in t.iter().enumerate() {
                if tc.is_zero() {
                    continue;
                }
                let correction =
                    self.element_series[range.start + offset].int_power(&(-tc), g)?;
                s = correction.mul(&s, g)?;
            }
            exponents[range].clone_from_slice(&t);
            for j in 1..=k {
                if !s.homogeneous(j).is_zero() {
                    return Err(Error::Internal(format!(
                        "degree-{j} residue after collection stage {k}"
                    )));
                }
            }
        }
        if !s.is_one() {
            return Err(Error::Internal(
                "nontrivial residue after the final collection stage".to_string(),
            ));
        }
        Ok(NormalForm {
            basis: self.basis.clone(),
            exponents,
        })
    }

    /// The product word of the normal form: basis powers in basis order,
    /// brackets expanded through the commutator identity.
    pub fn reconstruct(&self, nf: &NormalForm) -> Result<GroupWord> {
        self.check(nf)?;
        let mut out = GroupWord::identity();
        for (elem, e) in self.basis.elements().iter().zip(nf.exponents()) {
            if e.is_zero() {
                continue;
            }
            match &elem.tree {
                CommTree::Leaf(v) => {
                    out = out.concat(&GroupWord::new(vec![(*v, e.clone())])?);
                }
                node => {
                    let reps = i64::try_from(e.magnitude().clone()).map_err(|_| {
                        Error::Internal("exponent too large to expand syntactically".to_string())
                    })?;
                    let base = commutator_word(node);
                    let base = if e.is_negative() { base.inverse() } else { base };
                    for _ in 0..reps {
                        out = out.concat(&base);
                    }
                }
            }
        }
        Ok(out)
    }

    /// The expansion a normal form would have: the product of the cached
    /// basis expansions with the stored exponents, in basis order.
    pub fn series_of(&self, nf: &NormalForm) -> Result<TruncatedSeries> {
        self.check(nf)?;
        let g = self.graph();
        let mut s = TruncatedSeries::one(self.class());
        for (series, e) in self.element_series.iter().zip(nf.exponents()) {
            if e.is_zero() {
                continue;
            }
            s = s.mul(&series.int_power(e, g)?, g)?;
        }
        Ok(s)
    }

    pub fn nf_mul(&self, a: &NormalForm, b: &NormalForm) -> Result<NormalForm> {
        let s = self.series_of(a)?.mul(&self.series_of(b)?, self.graph())?;
        self.collect_series(&s)
    }

    pub fn nf_inv(&self, a: &NormalForm) -> Result<NormalForm> {
        let s = self.series_of(a)?.geom_inverse(self.graph())?;
        self.collect_series(&s)
    }

    pub fn nf_comm(&self, a: &NormalForm, b: &NormalForm) -> Result<NormalForm> {
        let g = self.graph();
        let sa = self.series_of(a)?;
        let sb = self.series_of(b)?;
        let s = sa
            .geom_inverse(g)?
            .mul(&sb.geom_inverse(g)?, g)?
            .mul(&sa, g)?
            .mul(&sb, g)?;
        self.collect_series(&s)
    }

    pub fn nf_pow(&self, a: &NormalForm, e: &BigInt) -> Result<NormalForm> {
        let s = self.series_of(a)?.int_power(e, self.graph())?;
        self.collect_series(&s)
    }
}
