//! The associative algebra of the trace monoid, truncated at a fixed
//! degree bound.
//!
//! Monomials are words modulo swaps of adjacent commuting letters; the
//! stored representative is the lexicographically least word in the class
//! under the ascending base order. Series are finitely supported integer
//! combinations of monomials of degree at most the bound; products drop
//! everything above it, which makes the algebra a quotient ring.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{CommutationGraph, Vertex};
use crate::words::Word;

/// A normalized trace-monoid element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    // invariant: lexicographically least representative of its class
    letters: Word,
}

impl Monomial {
    /// Normalizes an arbitrary word: repeatedly emit the smallest letter
    /// that commutes with everything still ahead of it.
    pub fn normalize(g: &CommutationGraph, letters: &[Vertex]) -> Self {
        let mut remaining = letters.to_vec();
        let mut out = Vec::with_capacity(remaining.len());
        while !remaining.is_empty() {
            let mut best = 0usize;
            'candidate: for i in 1..remaining.len() {
                for j in 0..i {
                    if !g.adjacent(remaining[j], remaining[i]) {
                        continue 'candidate;
                    }
                }
                if remaining[i] < remaining[best] {
                    best = i;
                }
            }
            out.push(remaining.remove(best));
        }
        Monomial { letters: out }
    }

    pub fn unit() -> Self {
        Monomial {
            letters: Vec::new(),
        }
    }

    pub fn generator(v: Vertex) -> Self {
        Monomial { letters: vec![v] }
    }

    pub fn degree(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[Vertex] {
        &self.letters
    }

    pub fn format(&self, g: &CommutationGraph) -> String {
        crate::words::format_word(g, &self.letters)
    }
}

/// An integer series supported on monomials of degree at most `bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    bound: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl TruncatedSeries {
    pub fn zero(bound: usize) -> Self {
        TruncatedSeries {
            bound,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(bound: usize) -> Self {
        let mut s = Self::zero(bound);
        s.add_term(Monomial::unit(), BigInt::one());
        s
    }

    /// The series `1 + x_v`.
    pub fn one_plus_generator(bound: usize, v: Vertex) -> Self {
        let mut s = Self::one(bound);
        s.add_term(Monomial::generator(v), BigInt::one());
        s
    }

    pub fn from_term(bound: usize, m: Monomial, c: BigInt) -> Self {
        let mut s = Self::zero(bound);
        s.add_term(m, c);
        s
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&Monomial::unit())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    /// Smallest degree carrying a nonzero coefficient.
    pub fn min_support_degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).min()
    }

    /// Accumulates one term, dropping it if it exceeds the bound and
    /// erasing the key if the coefficient cancels.
    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() || m.degree() > self.bound {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_bound(&self, rhs: &Self) -> Result<()> {
        if self.bound != rhs.bound {
            return Err(Error::BoundMismatch(self.bound, rhs.bound));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_bound(rhs)?;
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.check_bound(rhs)?;
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.bound);
        }
        let mut out = Self::zero(self.bound);
        for (m, a) in &self.terms {
            out.terms.insert(m.clone(), a * c);
        }
        out
    }

    pub fn negate(&self) -> Self {
        self.scale(&BigInt::from(-1))
    }

    pub fn mul(&self, rhs: &Self, g: &CommutationGraph) -> Result<Self> {
        self.check_bound(rhs)?;
        let mut out = Self::zero(self.bound);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                if ma.degree() + mb.degree() > self.bound {
                    continue;
                }
                let mut letters = ma.letters.clone();
                letters.extend_from_slice(&mb.letters);
                out.add_term(Monomial::normalize(g, &letters), ca * cb);
            }
        }
        Ok(out)
    }

    /// The terms of degree exactly `k`, as a series with the same bound.
    pub fn homogeneous(&self, k: usize) -> Self {
        let mut out = Self::zero(self.bound);
        for (m, c) in &self.terms {
            if m.degree() == k {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// Multiplicative inverse of a series with constant term 1, via the
    /// geometric series in `self - 1`.
    pub fn geom_inverse(&self, g: &CommutationGraph) -> Result<Self> {
        if !self.constant_term().is_one() {
            return Err(Error::NonUnitConstantTerm);
        }
        let minus_n = Self::one(self.bound).sub(self)?;
        let mut acc = Self::one(self.bound);
        let mut power = Self::one(self.bound);
        for _ in 1..=self.bound {
            power = power.mul(&minus_n, g)?;
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power)?;
        }
        Ok(acc)
    }

    /// Integer power by binary exponentiation; negative exponents invert
    /// first, which requires constant term 1.
    pub fn int_power(&self, e: &BigInt, g: &CommutationGraph) -> Result<Self> {
        if e.is_negative() {
            return self.geom_inverse(g)?.int_power(&-e, g);
        }
        let mut acc = Self::one(self.bound);
        let mag = e.magnitude();
        let bits = mag.bits();
        for i in (0..bits).rev() {
            acc = acc.mul(&acc, g)?;
            if mag.bit(i) {
                acc = acc.mul(self, g)?;
            }
        }
        Ok(acc)
    }
}
