//! The Lie reading of bracketed trees inside the truncated trace algebra,
//! exact linear expression of homogeneous elements in a basis segment, and
//! the brute-force rank oracle used by the verification suite.
//!
//! Trees are expanded associatively, `(u,v)` becoming `uv - vu`, so
//! antisymmetry, Jacobi, and the edge relations hold by construction and
//! linear algebra happens in free monomial coordinates. Solving is exact
//! over the rationals with a final integrality assertion: the basis
//! segments are integer bases of their graded pieces, so a fractional
//! coordinate signals a bug rather than a legitimate answer.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::commutators::{standard_bracketing, BasisElement, CommTree};
use crate::error::{Error, Result};
use crate::graph::CommutationGraph;
use crate::trace::{Monomial, TruncatedSeries};
use crate::words::generate_als;

/// Expands a tree to its homogeneous associative image of degree
/// `weight(t)`: leaves become generators, nodes become `uv - vu`.
pub fn lie_expand(
    g: &CommutationGraph,
    t: &CommTree,
    bound: usize,
) -> Result<TruncatedSeries> {
    if t.weight() > bound {
        return Err(Error::WeightExceedsBound {
            weight: t.weight(),
            bound,
        });
    }
    expand(g, t, bound)
}

fn expand(g: &CommutationGraph, t: &CommTree, bound: usize) -> Result<TruncatedSeries> {
    match t {
        CommTree::Leaf(v) => Ok(TruncatedSeries::from_term(
            bound,
            Monomial::generator(*v),
            BigInt::one(),
        )),
        CommTree::Node(l, r) => {
            let a = expand(g, l, bound)?;
            let b = expand(g, r, bound)?;
            a.mul(&b, g)?.sub(&b.mul(&a, g)?)
        }
    }
}

type SparseVec = BTreeMap<Monomial, BigRational>;

struct Row {
    // invariant: the pivot monomial (the key in pivot_index) is the least
    // monomial of the support and carries coefficient 1
    vec: SparseVec,
    combo: Vec<BigRational>,
}

/// Incremental exact echelon form with bookkeeping of how each row was
/// formed from the inserted vectors.
struct Echelon {
    dim: usize,
    rows: Vec<Row>,
    pivot_index: BTreeMap<Monomial, usize>,
}

impl Echelon {
    fn new(dim: usize) -> Self {
        Echelon {
            dim,
            rows: Vec::new(),
            pivot_index: BTreeMap::new(),
        }
    }

    fn rationalize(v: &BTreeMap<Monomial, BigInt>) -> SparseVec {
        v.iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m.clone(), BigRational::from_integer(c.clone())))
            .collect()
    }

    fn subtract_scaled(target: &mut SparseVec, c: &BigRational, source: &SparseVec) {
        for (m, a) in source {
            let delta = c * a;
            match target.entry(m.clone()) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    if !delta.is_zero() {
                        e.insert(-delta);
                    }
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() -= delta;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
            }
        }
    }

    /// Inserts the vector of the `index`-th generator. Returns false when
    /// it is linearly dependent on the rows already present.
    fn insert(&mut self, v: &BTreeMap<Monomial, BigInt>, index: usize) -> bool {
        let mut vec = Self::rationalize(v);
        let mut combo = vec![BigRational::zero(); self.dim];
        combo[index] = BigRational::one();
        loop {
            let Some(pivot) = vec.keys().next().cloned() else {
                return false;
            };
            match self.pivot_index.get(&pivot) {
                Some(&i) => {
                    let c = vec.get(&pivot).unwrap().clone();
                    let row = &self.rows[i];
                    Self::subtract_scaled(&mut vec, &c, &row.vec);
                    for (t, r) in combo.iter_mut().zip(&row.combo) {
                        *t -= &c * r;
                    }
                }
                None => {
                    let lead = vec.get(&pivot).unwrap().clone();
                    for c in vec.values_mut() {
                        *c /= &lead;
                    }
                    for c in combo.iter_mut() {
                        *c /= &lead;
                    }
                    self.pivot_index.insert(pivot, self.rows.len());
                    self.rows.push(Row { vec, combo });
                    return true;
                }
            }
        }
    }

    /// Writes `rhs` as a combination of the inserted vectors, or reports
    /// the least monomial that cannot be eliminated.
    fn reduce(&self, rhs: &BTreeMap<Monomial, BigInt>) -> Result<Vec<BigRational>> {
        let mut vec = Self::rationalize(rhs);
        let mut acc = vec![BigRational::zero(); self.dim];
        while let Some(pivot) = vec.keys().next().cloned() {
            let Some(&i) = self.pivot_index.get(&pivot) else {
                return Err(Error::NotInSpan);
            };
            let c = vec.get(&pivot).unwrap().clone();
            let row = &self.rows[i];
            Self::subtract_scaled(&mut vec, &c, &row.vec);
            for (t, r) in acc.iter_mut().zip(&row.combo) {
                *t += &c * r;
            }
        }
        Ok(acc)
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// Cached exact solver for one weight segment of a basis.
pub struct SegmentSolver {
    degree: usize,
    echelon: Echelon,
}

impl SegmentSolver {
    /// Builds the echelon form of the segment's expanded images. The
    /// images of a well-formed segment are independent; a dependence is
    /// reported as an internal error.
    pub fn new(g: &CommutationGraph, degree: usize, segment: &[BasisElement]) -> Result<Self> {
        let mut echelon = Echelon::new(segment.len());
        for (i, e) in segment.iter().enumerate() {
            let image = lie_expand(g, &e.tree, degree)?;
            let map: BTreeMap<Monomial, BigInt> =
                image.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
            if !echelon.insert(&map, i) {
                return Err(Error::Internal(format!(
                    "dependent basis images in degree {degree}"
                )));
            }
        }
        Ok(SegmentSolver { degree, echelon })
    }

    /// Solves `sum t_i * image_i = e` for integer coordinates.
    pub fn solve(&self, e: &TruncatedSeries) -> Result<Vec<BigInt>> {
        let mut map = BTreeMap::new();
        for (m, c) in e.terms() {
            if m.degree() != self.degree {
                return Err(Error::Internal(format!(
                    "inhomogeneous input to the degree-{} solver",
                    self.degree
                )));
            }
            map.insert(m.clone(), c.clone());
        }
        let coords = self.echelon.reduce(&map)?;
        coords
            .into_iter()
            .map(|c| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NonIntegerSolution)
                }
            })
            .collect()
    }
}

/// Integer coordinates of a homogeneous degree-k element over the weight-k
/// basis segment.
pub fn express_in_basis(
    g: &CommutationGraph,
    degree: usize,
    e: &TruncatedSeries,
    segment: &[BasisElement],
) -> Result<Vec<BigInt>> {
    SegmentSolver::new(g, degree, segment)?.solve(e)
}

/// Rank over the rationals of the images of ALL standard commutators of
/// the given weight, with no graph filtering.
pub fn rank_of_degree(g: &CommutationGraph, degree: usize) -> Result<usize> {
    assert!(degree >= 1);
    let words = generate_als(g, degree).pop().unwrap();
    let mut echelon = Echelon::new(words.len());
    for (i, w) in words.iter().enumerate() {
        let tree = standard_bracketing(w)?;
        let image = lie_expand(g, &tree, degree)?;
        let map: BTreeMap<Monomial, BigInt> =
            image.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        echelon.insert(&map, i);
    }
    Ok(echelon.rank())
}
