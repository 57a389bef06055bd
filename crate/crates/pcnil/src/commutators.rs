//! Bracketed commutators, standard bracketings of ALS words, the
//! graph-admissibility filter, and the ordered basis built from them.
//!
//! A tree is *standard* when its foliage is ALS, both subtrees are
//! standard with left foliage greater than right foliage, and a left
//! subtree `(u1,u2)` additionally satisfies `foliage(right) >= foliage(u2)`.
//! Every ALS word has exactly one standard bracketing; the constructor
//! searches all split points and asserts that uniqueness.
//!
//! A standard tree survives the graph filter when, at every node, some
//! letter of the left foliage's support fails to commute with the first
//! letter of the right foliage (a letter never commutes with itself).

use crate::error::{Error, Result};
use crate::graph::{CommutationGraph, Vertex};
use crate::words::{generate_als, is_als, support, word_cmp, Word};
use std::cmp::Ordering;
use std::ops::Range;

/// A binary bracketing over vertices; leaves are generators, nodes are
/// commutators `(left, right)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CommTree {
    Leaf(Vertex),
    Node(Box<CommTree>, Box<CommTree>),
}

impl CommTree {
    pub fn pair(left: CommTree, right: CommTree) -> Self {
        CommTree::Node(Box::new(left), Box::new(right))
    }

    /// The underlying word: all brackets erased, leaves left to right.
    pub fn foliage(&self) -> Word {
        let mut out = Vec::with_capacity(self.weight());
        self.push_foliage(&mut out);
        out
    }

    fn push_foliage(&self, out: &mut Word) {
        match self {
            CommTree::Leaf(v) => out.push(*v),
            CommTree::Node(l, r) => {
                l.push_foliage(out);
                r.push_foliage(out);
            }
        }
    }

    /// Number of leaves.
    pub fn weight(&self) -> usize {
        match self {
            CommTree::Leaf(_) => 1,
            CommTree::Node(l, r) => l.weight() + r.weight(),
        }
    }

    /// Nested-parenthesis rendering, e.g. `((x1,x3),x2)`.
    pub fn format(&self, g: &CommutationGraph) -> String {
        match self {
            CommTree::Leaf(v) => g.symbol(*v).to_string(),
            CommTree::Node(l, r) => format!("({},{})", l.format(g), r.format(g)),
        }
    }
}

/// Checks the standardness conditions on an arbitrary tree.
pub fn is_standard(t: &CommTree) -> bool {
    match t {
        CommTree::Leaf(_) => true,
        CommTree::Node(u, v) => {
            let fu = u.foliage();
            let fv = v.foliage();
            if !is_als(&t.foliage()).unwrap_or(false) {
                return false;
            }
            if !is_standard(u) || !is_standard(v) {
                return false;
            }
            if word_cmp(&fu, &fv) != Ordering::Greater {
                return false;
            }
            match &**u {
                CommTree::Node(_, u2) => word_cmp(&fv, &u2.foliage()) != Ordering::Less,
                CommTree::Leaf(_) => true,
            }
        }
    }
}

/// The unique standard bracketing of an ALS word. All split points are
/// tried; finding none or more than one standard split is an internal
/// invariant failure.
pub fn standard_bracketing(w: &[Vertex]) -> Result<CommTree> {
    if !is_als(w)? {
        return Err(Error::NotLyndonShirshov(format!("{w:?}")));
    }
    standard_split(w)
}

fn standard_split(w: &[Vertex]) -> Result<CommTree> {
    if w.len() == 1 {
        return Ok(CommTree::Leaf(w[0]));
    }
    let mut found: Option<CommTree> = None;
    for split in 1..w.len() {
        let (u, v) = w.split_at(split);
        if !is_als(u)? || !is_als(v)? {
            continue;
        }
        if word_cmp(u, v) != Ordering::Greater {
            continue;
        }
        let tu = standard_split(u)?;
        if let CommTree::Node(_, u2) = &tu {
            if word_cmp(v, &u2.foliage()) == Ordering::Less {
                continue;
            }
        }
        let tv = standard_split(v)?;
        let candidate = CommTree::pair(tu, tv);
        if found.is_some() {
            return Err(Error::Internal(format!(
                "multiple standard bracketings for {w:?}"
            )));
        }
        found = Some(candidate);
    }
    found.ok_or_else(|| Error::Internal(format!("no standard bracketing for {w:?}")))
}

/// The graph filter: at every node some support letter of the left
/// foliage must be non-adjacent to the first letter of the right foliage.
pub fn is_pc_admissible(g: &CommutationGraph, t: &CommTree) -> bool {
    match t {
        CommTree::Leaf(_) => true,
        CommTree::Node(l, r) => {
            if !is_pc_admissible(g, l) || !is_pc_admissible(g, r) {
                return false;
            }
            let first = r.foliage()[0];
            support(&l.foliage()).iter().any(|&a| !g.adjacent(a, first))
        }
    }
}

/// One basis element: a standard admissible tree with its cached foliage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub tree: CommTree,
    pub foliage: Word,
    pub weight: usize,
}

/// The ordered basis for a graph and nilpotency class: all standard
/// admissible commutators of weight 1..=class, weights ascending, and
/// within one weight foliages descending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaltsevBasis {
    graph: CommutationGraph,
    class: usize,
    elements: Vec<BasisElement>,
    weight_start: Vec<usize>,
}

impl MaltsevBasis {
    pub fn construct(g: &CommutationGraph, class: usize) -> Result<Self> {
        if class == 0 {
            return Err(Error::ClassTooSmall);
        }
        let als = generate_als(g, class);
        let mut elements = Vec::new();
        let mut weight_start = vec![0usize];
        for words in &als {
            for w in words {
                let tree = standard_bracketing(w)?;
                if is_pc_admissible(g, &tree) {
                    elements.push(BasisElement {
                        foliage: w.clone(),
                        weight: w.len(),
                        tree,
                    });
                }
            }
            weight_start.push(elements.len());
        }
        Ok(MaltsevBasis {
            graph: g.clone(),
            class,
            elements,
            weight_start,
        })
    }

    pub fn graph(&self) -> &CommutationGraph {
        &self.graph
    }

    pub fn class(&self) -> usize {
        self.class
    }

    pub fn elements(&self) -> &[BasisElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Index range of the weight-k segment.
    pub fn segment_range(&self, k: usize) -> Range<usize> {
        assert!(k >= 1 && k <= self.class);
        self.weight_start[k - 1]..self.weight_start[k]
    }

    /// The weight-k elements, largest foliage first.
    pub fn segment(&self, k: usize) -> &[BasisElement] {
        &self.elements[self.segment_range(k)]
    }

    /// Sizes of the weight segments for weights 1..=class.
    pub fn weight_profile(&self) -> Vec<usize> {
        (1..=self.class)
            .map(|k| self.segment_range(k).len())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::{complete, edgeless, example_graph, word};

    fn tree(g: &CommutationGraph, foliage: &str) -> CommTree {
        standard_bracketing(&word(g, foliage)).unwrap()
    }

    #[test]
    fn foliage_erases_brackets() {
        let g = example_graph();
        let t = tree(&g, "x1 x3 x2");
        assert_eq!(t.format(&g), "((x1,x3),x2)");
        assert_eq!(t.foliage(), word(&g, "x1 x3 x2"));
        assert_eq!(t.weight(), 3);
    }

    #[test]
    fn standardness_examples() {
        let g = example_graph();
        assert!(is_standard(&tree(&g, "x1 x3 x3")));
        let x1 = g.vertex("x1").unwrap();
        let x2 = g.vertex("x2").unwrap();
        let x3 = g.vertex("x3").unwrap();
        // foliage "x3 x1" is not ALS
        let bad = CommTree::pair(CommTree::Leaf(x3), CommTree::Leaf(x1));
        assert!(!is_standard(&bad));
        // foliage "x1 x2 x3" is ALS but this bracketing fails the
        // left-node condition: x3 < x2
        let bad = CommTree::pair(
            CommTree::pair(CommTree::Leaf(x1), CommTree::Leaf(x2)),
            CommTree::Leaf(x3),
        );
        assert!(!is_standard(&bad));
        assert!(is_standard(&CommTree::Leaf(x2)));
    }

    #[test]
    fn bracketings_of_the_weight_three_words() {
        let g = example_graph();
        let cases = [
            ("x1 x1 x2", "(x1,(x1,x2))"),
            ("x1 x1 x3", "(x1,(x1,x3))"),
            ("x1 x2 x2", "((x1,x2),x2)"),
            ("x1 x2 x3", "(x1,(x2,x3))"),
            ("x1 x3 x2", "((x1,x3),x2)"),
            ("x1 x3 x3", "((x1,x3),x3)"),
            ("x2 x2 x3", "(x2,(x2,x3))"),
            ("x2 x3 x3", "((x2,x3),x3)"),
        ];
        for (w, expected) in cases {
            assert_eq!(tree(&g, w).format(&g), expected);
        }
    }

    #[test]
    fn non_als_words_are_rejected() {
        let g = example_graph();
        let w = word(&g, "x3 x1");
        assert!(matches!(
            standard_bracketing(&w),
            Err(Error::NotLyndonShirshov(_))
        ));
        assert!(matches!(standard_bracketing(&[]), Err(Error::EmptyWord)));
    }

    /// Every binary tree over the given leaf word.
    fn all_trees(w: &[Vertex]) -> Vec<CommTree> {
        if w.len() == 1 {
            return vec![CommTree::Leaf(w[0])];
        }
        let mut out = Vec::new();
        for split in 1..w.len() {
            for l in all_trees(&w[..split]) {
                for r in all_trees(&w[split..]) {
                    out.push(CommTree::pair(l.clone(), r));
                }
            }
        }
        out
    }

    #[test]
    fn exactly_one_standard_tree_per_als_word() {
        let names = ["v0", "v1", "v2", "v3"];
        let g = edgeless(&names);
        for words in generate_als(&g, 5) {
            for w in words {
                let standard: Vec<CommTree> = all_trees(&w)
                    .into_iter()
                    .filter(is_standard)
                    .collect();
                assert_eq!(standard.len(), 1, "word {w:?}");
                assert_eq!(standard[0], standard_bracketing(&w).unwrap());
                assert_eq!(standard[0].foliage(), w);
            }
        }
    }

    #[test]
    fn admissibility_examples() {
        let g = example_graph();
        // x1 commutes with the first letter x2, and is the whole support
        assert!(!is_pc_admissible(&g, &tree(&g, "x1 x2 x3")));
        // a letter never commutes with itself
        assert!(is_pc_admissible(&g, &tree(&g, "x2 x2 x3")));
        // x3 rescues the pair even though x1 commutes with x2
        assert!(is_pc_admissible(&g, &tree(&g, "x1 x3 x2")));
        // inadmissible subtree poisons the whole tree
        assert!(!is_pc_admissible(&g, &tree(&g, "x1 x2 x2")));
    }

    #[test]
    fn example_basis_listing() {
        let g = example_graph();
        let basis = MaltsevBasis::construct(&g, 3).unwrap();
        let listing: Vec<String> = basis.elements().iter().map(|e| e.tree.format(&g)).collect();
        assert_eq!(
            listing,
            vec![
                "x1",
                "x2",
                "x3",
                "(x1,x3)",
                "(x2,x3)",
                "(x1,(x1,x3))",
                "((x1,x3),x2)",
                "((x1,x3),x3)",
                "(x2,(x2,x3))",
                "((x2,x3),x3)",
            ]
        );
        assert_eq!(basis.weight_profile(), vec![3, 2, 5]);
        assert_eq!(basis.segment(2).len(), 2);
        assert_eq!(basis.segment_range(3), 5..10);
    }

    #[test]
    fn complete_graph_keeps_only_generators() {
        let g = complete(&["a", "b", "c"]);
        let basis = MaltsevBasis::construct(&g, 4).unwrap();
        assert_eq!(basis.weight_profile(), vec![3, 0, 0, 0]);
        assert!(basis.elements().iter().all(|e| e.weight == 1));
    }

    #[test]
    fn edgeless_pair_basis() {
        let g = edgeless(&["a", "b"]);
        let basis = MaltsevBasis::construct(&g, 3).unwrap();
        let listing: Vec<String> = basis.elements().iter().map(|e| e.tree.format(&g)).collect();
        assert_eq!(
            listing,
            vec!["b", "a", "(b,a)", "(b,(b,a))", "((b,a),a)"]
        );
        assert_eq!(basis.weight_profile(), vec![2, 1, 2]);
    }

    #[test]
    fn class_must_be_positive() {
        let g = example_graph();
        assert!(matches!(
            MaltsevBasis::construct(&g, 0),
            Err(Error::ClassTooSmall)
        ));
    }

    #[test]
    fn basis_is_closed_under_subtrees() {
        let graphs = vec![
            example_graph(),
            edgeless(&["a", "b", "c"]),
            CommutationGraph::parse(
                r#"{"vertices":["p","q","r","s"],"edges":[["p","q"],["q","r"],["r","s"]]}"#,
            )
            .unwrap(),
        ];
        for g in graphs {
            let basis = MaltsevBasis::construct(&g, 4).unwrap();
            for e in basis.elements() {
                if let CommTree::Node(l, r) = &e.tree {
                    for sub in [l.as_ref(), r.as_ref()] {
                        let w = sub.weight();
                        assert!(
                            basis.segment(w).iter().any(|b| &b.tree == sub),
                            "subtree {} of {} missing from weight {w}",
                            sub.format(&g),
                            e.tree.format(&g)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn adding_edges_only_shrinks_the_basis() {
        let sparse = edgeless(&["x3", "x2", "x1"]);
        let dense = example_graph();
        let sparse_basis = MaltsevBasis::construct(&sparse, 4).unwrap();
        let dense_basis = MaltsevBasis::construct(&dense, 4).unwrap();
        for e in dense_basis.elements() {
            assert!(
                sparse_basis.elements().iter().any(|s| s.tree == e.tree),
                "{} should survive edge removal",
                e.tree.format(&dense)
            );
        }
        assert!(dense_basis.len() <= sparse_basis.len());
    }

    #[test]
    fn order_is_weights_ascending_then_foliage_descending() {
        let g = CommutationGraph::parse(
            r#"{"vertices":["a","b","c","d"],"edges":[["a","b"],["c","d"]]}"#,
        )
        .unwrap();
        let basis = MaltsevBasis::construct(&g, 4).unwrap();
        for pair in basis.elements().windows(2) {
            assert!(pair[0].weight <= pair[1].weight);
            if pair[0].weight == pair[1].weight {
                assert_eq!(
                    crate::words::word_cmp(&pair[0].foliage, &pair[1].foliage),
                    std::cmp::Ordering::Greater
                );
            }
        }
    }
}
