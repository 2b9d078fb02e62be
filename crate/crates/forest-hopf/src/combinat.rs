//! Planar rooted trees, planar forests and planar binary trees.
//!
//! Forests are ordered sequences of trees and trees are ordered sequences of
//! child subtrees; planarity means the order matters everywhere. The bracket
//! string is the single interchange format: a tree is `[` forest `]`, a
//! forest is the concatenation of its trees, and the empty string is the
//! unit forest.
//!
//! The canonical total order on forests is graded by weight; inside a weight
//! slice it is lexicographic on the bracket string with `]` ranked before
//! `[`. All enumerations, map iterations and serialized outputs use it.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;

/// A planar rooted tree: a root with an ordered (possibly empty) sequence of
/// child subtrees.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tree {
    children: Vec<Tree>,
}

/// A planar rooted forest: an ordered sequence of trees. The empty sequence
/// is the unit forest `1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Forest {
    trees: Vec<Tree>,
}

impl Tree {
    pub fn new(children: Vec<Tree>) -> Self {
        Tree { children }
    }

    /// The single-vertex tree.
    pub fn leaf() -> Self {
        Tree { children: Vec::new() }
    }

    pub fn children(&self) -> &[Tree] {
        &self.children
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    /// Number of vertices.
    pub fn weight(&self) -> usize {
        1 + self.children.iter().map(Tree::weight).sum::<usize>()
    }

    /// The forest of child subtrees (the inverse of [`b_plus`]).
    pub fn child_forest(&self) -> Forest {
        Forest { trees: self.children.clone() }
    }

    fn push_tokens(&self, out: &mut Vec<u8>) {
        // `]` must rank below `[`, so open is the larger token.
        out.push(1);
        for c in &self.children {
            c.push_tokens(out);
        }
        out.push(0);
    }
}

impl Forest {
    pub fn new(trees: Vec<Tree>) -> Self {
        Forest { trees }
    }

    /// The unit forest `1` (no trees, weight 0).
    pub fn unit() -> Self {
        Forest { trees: Vec::new() }
    }

    pub fn single(tree: Tree) -> Self {
        Forest { trees: vec![tree] }
    }

    pub fn trees(&self) -> &[Tree] {
        &self.trees
    }

    pub fn into_trees(self) -> Vec<Tree> {
        self.trees
    }

    pub fn is_unit(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    /// Number of vertices.
    pub fn weight(&self) -> usize {
        self.trees.iter().map(Tree::weight).sum()
    }

    /// Concatenation of forests (the product `m` on basis elements).
    pub fn concat(&self, other: &Forest) -> Forest {
        let mut trees = self.trees.clone();
        trees.extend(other.trees.iter().cloned());
        Forest { trees }
    }

    /// The underlying single tree, if the forest has exactly one.
    pub fn as_single_tree(&self) -> Option<&Tree> {
        match self.trees.as_slice() {
            [t] => Some(t),
            _ => None,
        }
    }

    /// Bracket string; empty for the unit forest.
    pub fn bracket_string(&self) -> String {
        self.to_string()
    }

    /// Display label used in element and tensor terms: `1` for the unit
    /// forest, the bracket string otherwise.
    pub fn label(&self) -> String {
        if self.is_unit() {
            "1".to_string()
        } else {
            self.to_string()
        }
    }

    fn token_key(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(2 * self.weight());
        for t in &self.trees {
            t.push_tokens(&mut out);
        }
        out
    }
}

impl Ord for Forest {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.token_key().cmp(&other.token_key()))
    }
}

impl PartialOrd for Forest {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Tree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight().cmp(&other.weight()).then_with(|| {
            let mut a = Vec::with_capacity(2 * self.weight());
            let mut b = Vec::with_capacity(2 * other.weight());
            self.push_tokens(&mut a);
            other.push_tokens(&mut b);
            a.cmp(&b)
        })
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for c in &self.children {
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.trees {
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Parse a canonical bracket string. Grammar: `forest := tree*`,
/// `tree := '[' forest ']'`. Errors carry the byte offset of the offending
/// character (or of the end of input for an unclosed `[`).
pub fn parse_forest(text: &str) -> Result<Forest> {
    let mut stack: Vec<Vec<Tree>> = vec![Vec::new()];
    for (i, b) in text.bytes().enumerate() {
        match b {
            b'[' => stack.push(Vec::new()),
            b']' => {
                let children = stack.pop().expect("stack never empty");
                if stack.is_empty() {
                    return Err(Error::Parse {
                        offset: i,
                        message: "unbalanced ']'".to_string(),
                    });
                }
                stack.last_mut().unwrap().push(Tree::new(children));
            }
            other => {
                return Err(Error::Parse {
                    offset: i,
                    message: format!("unexpected character {:?}", other as char),
                })
            }
        }
    }
    if stack.len() > 1 {
        return Err(Error::Parse {
            offset: text.len(),
            message: "unbalanced '['".to_string(),
        });
    }
    Ok(Forest::new(stack.pop().unwrap()))
}

/// Grafts the roots of the trees of `f` on a new common root (the operator
/// written `B⁺` in the literature).
pub fn b_plus(f: &Forest) -> Tree {
    Tree::new(f.trees.clone())
}

/// Inverse of [`b_plus`] on single trees: the child forest of the root.
/// Errors when the forest does not consist of exactly one tree.
pub fn b_minus(f: &Forest) -> Result<Forest> {
    match f.as_single_tree() {
        Some(t) => Ok(t.child_forest()),
        None => Err(Error::NotATree { trees: f.len() }),
    }
}

/// Deletes the first tree when it is the single vertex; `None` encodes the
/// zero of the ambient vector space (distinct from `Some(unit)`, which is
/// the nonzero basis element `1`).
pub fn gamma(f: &Forest) -> Option<Forest> {
    match f.trees.split_first() {
        Some((first, rest)) if first.is_leaf() => Some(Forest::new(rest.to_vec())),
        _ => None,
    }
}

/// The ladder `l_n`: the chain with `n` vertices.
pub fn ladder(n: usize) -> Result<Tree> {
    if n == 0 {
        return Err(Error::ZeroWeight { what: "ladder" });
    }
    let mut t = Tree::leaf();
    for _ in 1..n {
        t = Tree::new(vec![t]);
    }
    Ok(t)
}

/// The corolla `c_n`: a root with `n - 1` leaf children.
pub fn corolla(n: usize) -> Result<Tree> {
    if n == 0 {
        return Err(Error::ZeroWeight { what: "corolla" });
    }
    Ok(Tree::new(vec![Tree::leaf(); n - 1]))
}

/// Writes a tree uniquely as the left-nested root-grafting of a ladder on a
/// tail of trees: `t = (..((• ↘ t₂) ↘ t₃)..) ↘ t_k`. Returns `(k, tail)`
/// with `tail = [t₂, .., t_k]`.
pub fn ladder_decomposition(t: &Tree) -> (usize, Vec<Tree>) {
    if t.is_leaf() {
        return (1, Vec::new());
    }
    let (first, rest) = t.children.split_first().expect("non-leaf");
    let last = Tree::new(rest.to_vec());
    let (k, mut tail) = ladder_decomposition(first);
    tail.push(last);
    (k + 1, tail)
}

/// n-th Catalan number (n ≤ 33 fits in u64).
pub fn catalan(n: usize) -> u64 {
    let mut c: u128 = 1;
    for i in 0..n as u128 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c as u64
}

/// All planar forests of weight `0..=n`, indexed by weight, each slice in
/// canonical order.
pub fn forests_by_weight(n: usize) -> Vec<Vec<Forest>> {
    let mut forests: Vec<Vec<Forest>> = vec![vec![Forest::unit()]];
    let mut trees: Vec<Vec<Tree>> = vec![Vec::new()];
    for w in 1..=n {
        let mut tw: Vec<Tree> = forests[w - 1].iter().map(b_plus).collect();
        tw.sort();
        trees.push(tw);
        let mut fw: Vec<Forest> = Vec::new();
        for k in 1..=w {
            for t in &trees[k] {
                for rest in &forests[w - k] {
                    let mut ts = Vec::with_capacity(1 + rest.len());
                    ts.push(t.clone());
                    ts.extend(rest.trees.iter().cloned());
                    fw.push(Forest::new(ts));
                }
            }
        }
        fw.sort();
        forests.push(fw);
    }
    forests
}

/// All planar forests of weight `n` in canonical order. For `n >= 1` the
/// count is the n-th Catalan number.
pub fn forests(n: usize) -> Vec<Forest> {
    forests_by_weight(n).pop().unwrap()
}

/// All planar trees of weight `n` in canonical order; Catalan(n−1) of them.
pub fn trees(n: usize) -> Vec<Tree> {
    if n == 0 {
        return Vec::new();
    }
    let mut out: Vec<Tree> = forests(n - 1).iter().map(b_plus).collect();
    out.sort();
    out
}

/// A planar binary tree: every internal vertex has exactly two children.
/// Sizes are counted by leaves; the single leaf has one.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum BinaryTree {
    Leaf,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    pub fn node(left: BinaryTree, right: BinaryTree) -> Self {
        BinaryTree::Node(Box::new(left), Box::new(right))
    }

    pub fn leaves(&self) -> usize {
        match self {
            BinaryTree::Leaf => 1,
            BinaryTree::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    pub fn as_node(&self) -> Option<(&BinaryTree, &BinaryTree)> {
        match self {
            BinaryTree::Leaf => None,
            BinaryTree::Node(l, r) => Some((l, r)),
        }
    }

    fn cmp_structure(&self, other: &Self) -> Ordering {
        match (self, other) {
            (BinaryTree::Leaf, BinaryTree::Leaf) => Ordering::Equal,
            (BinaryTree::Leaf, BinaryTree::Node(..)) => Ordering::Less,
            (BinaryTree::Node(..), BinaryTree::Leaf) => Ordering::Greater,
            (BinaryTree::Node(a, b), BinaryTree::Node(c, d)) => {
                a.cmp_structure(c).then_with(|| b.cmp_structure(d))
            }
        }
    }
}

impl Ord for BinaryTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.leaves()
            .cmp(&other.leaves())
            .then_with(|| self.cmp_structure(other))
    }
}

impl PartialOrd for BinaryTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryTree::Leaf => write!(f, "o"),
            BinaryTree::Node(l, r) => write!(f, "({l}{r})"),
        }
    }
}

/// Parse the binary-tree grammar `b := 'o' | '(' b b ')'`.
pub fn parse_binary_tree(text: &str) -> Result<BinaryTree> {
    fn node(bytes: &[u8], pos: usize) -> Result<(BinaryTree, usize)> {
        match bytes.get(pos) {
            Some(b'o') => Ok((BinaryTree::Leaf, pos + 1)),
            Some(b'(') => {
                let (l, pos) = node(bytes, pos + 1)?;
                let (r, pos) = node(bytes, pos)?;
                match bytes.get(pos) {
                    Some(b')') => Ok((BinaryTree::node(l, r), pos + 1)),
                    _ => Err(Error::Parse {
                        offset: pos,
                        message: "expected ')'".to_string(),
                    }),
                }
            }
            Some(&other) => Err(Error::Parse {
                offset: pos,
                message: format!("unexpected character {:?}", other as char),
            }),
            None => Err(Error::Parse {
                offset: pos,
                message: "unexpected end of input".to_string(),
            }),
        }
    }
    let bytes = text.as_bytes();
    let (b, end) = node(bytes, 0)?;
    if end != bytes.len() {
        return Err(Error::Parse {
            offset: end,
            message: "trailing input".to_string(),
        });
    }
    Ok(b)
}

/// All planar binary trees with `k` leaves in canonical order; Catalan(k−1)
/// of them.
pub fn binary_trees(k: usize) -> Vec<BinaryTree> {
    if k == 0 {
        return Vec::new();
    }
    let mut by_leaves: Vec<Vec<BinaryTree>> = vec![Vec::new(), vec![BinaryTree::Leaf]];
    for m in 2..=k {
        let mut out = Vec::new();
        for i in 1..m {
            for l in &by_leaves[i] {
                for r in &by_leaves[m - i] {
                    out.push(BinaryTree::node(l.clone(), r.clone()));
                }
            }
        }
        out.sort();
        by_leaves.push(out);
    }
    by_leaves.pop().unwrap()
}

fn graft_tree_on_root(grafted: &Tree, host: &Tree) -> Tree {
    let mut children = vec![grafted.clone()];
    children.extend(host.children.iter().cloned());
    Tree::new(children)
}

/// The bijection from planar binary trees to planar trees defined by
/// `κ(leaf) = •` and `κ(l ∨ r) = κ(r) ↘ κ(l)`; `weight(κ(b)) = leaves(b)`.
pub fn kappa(b: &BinaryTree) -> Tree {
    match b {
        BinaryTree::Leaf => Tree::leaf(),
        BinaryTree::Node(l, r) => graft_tree_on_root(&kappa(r), &kappa(l)),
    }
}

/// Inverse of [`kappa`]: peels the first child subtree off the root.
pub fn kappa_inv(t: &Tree) -> BinaryTree {
    if t.is_leaf() {
        return BinaryTree::Leaf;
    }
    let (first, rest) = t.children.split_first().expect("non-leaf");
    BinaryTree::node(kappa_inv(&Tree::new(rest.to_vec())), kappa_inv(first))
}

/// Identifies one vertex of a forest: the index of its tree and the child
/// indices along the path from that tree's root.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct VertexId {
    pub tree: usize,
    pub path: Vec<usize>,
}

impl VertexId {
    pub fn new(tree: usize, path: Vec<usize>) -> Self {
        VertexId { tree, path }
    }

    /// Parent vertex and child index, or `None` for a tree root.
    pub fn parent_edge(&self) -> Option<(VertexId, usize)> {
        let (&last, init) = self.path.split_last()?;
        Some((VertexId::new(self.tree, init.to_vec()), last))
    }

    pub fn is_ancestor_of(&self, other: &VertexId) -> bool {
        self.tree == other.tree
            && self.path.len() <= other.path.len()
            && other.path[..self.path.len()] == self.path[..]
    }
}

impl Forest {
    /// All vertices, tree by tree in preorder.
    pub fn vertices(&self) -> Vec<VertexId> {
        fn walk(t: &Tree, tree: usize, path: &mut Vec<usize>, out: &mut Vec<VertexId>) {
            out.push(VertexId::new(tree, path.clone()));
            for (i, c) in t.children.iter().enumerate() {
                path.push(i);
                walk(c, tree, path, out);
                path.pop();
            }
        }
        let mut out = Vec::with_capacity(self.weight());
        for (i, t) in self.trees.iter().enumerate() {
            walk(t, i, &mut Vec::new(), &mut out);
        }
        out
    }

    /// Subtree rooted at a vertex, when the vertex exists.
    pub fn subtree(&self, v: &VertexId) -> Option<&Tree> {
        let mut t = self.trees.get(v.tree)?;
        for &i in &v.path {
            t = t.children.get(i)?;
        }
        Some(t)
    }

    pub fn has_vertex(&self, v: &VertexId) -> bool {
        self.subtree(v).is_some()
    }
}

/// Outcome of comparing two vertices under one of the partial orders.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Comparison {
    Greater,
    Less,
    Equal,
    Incomparable,
}

pub(crate) fn cmp_high_unchecked(v: &VertexId, w: &VertexId) -> Comparison {
    if v == w {
        Comparison::Equal
    } else if w.is_ancestor_of(v) {
        // Edges are oriented from roots to leaves, so the deeper vertex is
        // the greater one.
        Comparison::Greater
    } else if v.is_ancestor_of(w) {
        Comparison::Less
    } else {
        Comparison::Incomparable
    }
}

pub(crate) fn cmp_left_unchecked(v: &VertexId, w: &VertexId) -> Comparison {
    if v == w {
        return Comparison::Equal;
    }
    if cmp_high_unchecked(v, w) != Comparison::Incomparable {
        return Comparison::Incomparable;
    }
    if v.tree != w.tree {
        return if v.tree < w.tree {
            Comparison::Greater
        } else {
            Comparison::Less
        };
    }
    // Same tree, neither an ancestor of the other: deleting the shared part
    // of the paths reduces to the earlier-tree rule at the first divergence.
    for (a, b) in v.path.iter().zip(w.path.iter()) {
        match a.cmp(b) {
            Ordering::Less => return Comparison::Greater,
            Ordering::Greater => return Comparison::Less,
            Ordering::Equal => {}
        }
    }
    unreachable!("non-ancestral paths diverge")
}

fn check_vertices(f: &Forest, v: &VertexId, w: &VertexId) -> Result<()> {
    if f.has_vertex(v) && f.has_vertex(w) {
        Ok(())
    } else {
        Err(Error::VertexNotFound)
    }
}

/// Ancestry order toward the leaves: `v > w` when `w` lies on the path from
/// the root to `v`.
pub fn compare_high(f: &Forest, v: &VertexId, w: &VertexId) -> Result<Comparison> {
    check_vertices(f, v, w)?;
    Ok(cmp_high_unchecked(v, w))
}

/// Left order on ancestry-incomparable vertices: earlier trees are greater,
/// and inside one tree the recursion deletes the root.
pub fn compare_left(f: &Forest, v: &VertexId, w: &VertexId) -> Result<Comparison> {
    check_vertices(f, v, w)?;
    Ok(cmp_left_unchecked(v, w))
}

/// The union of the two partial orders, a total order on the vertices.
pub fn compare_hl(f: &Forest, v: &VertexId, w: &VertexId) -> Result<Ordering> {
    check_vertices(f, v, w)?;
    let by_high = cmp_high_unchecked(v, w);
    Ok(match by_high {
        Comparison::Equal => Ordering::Equal,
        Comparison::Greater => Ordering::Greater,
        Comparison::Less => Ordering::Less,
        Comparison::Incomparable => match cmp_left_unchecked(v, w) {
            Comparison::Greater => Ordering::Greater,
            Comparison::Less => Ordering::Less,
            _ => unreachable!("high-incomparable vertices are left-comparable"),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn f(s: &str) -> Forest {
        parse_forest(s).unwrap()
    }

    fn t(s: &str) -> Tree {
        f(s).as_single_tree().unwrap().clone()
    }

    #[test]
    fn parse_basics() {
        assert_eq!(f(""), Forest::unit());
        assert_eq!(f("[]"), Forest::single(Tree::leaf()));
        // the corolla c3 is B+ of two vertices
        assert_eq!(t("[[][]]"), b_plus(&f("[][]")));
        assert_eq!(f("[[][]][]").len(), 2);
        assert_eq!(f("[[][]][]").weight(), 4);
    }

    #[test]
    fn parse_errors_carry_offsets() {
        match parse_forest("[]]") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_forest("[[]") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_forest("[x]") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn render_named_trees() {
        assert_eq!(Forest::unit().to_string(), "");
        assert_eq!(Forest::single(ladder(3).unwrap()).to_string(), "[[[]]]");
        assert_eq!(
            Forest::single(corolla(3).unwrap()).concat(&f("[]")).to_string(),
            "[[][]][]"
        );
        assert_eq!(corolla(1).unwrap(), ladder(1).unwrap());
        assert!(ladder(0).is_err());
        assert!(corolla(0).is_err());
    }

    #[test]
    fn canonical_order_weight2_and_weight3() {
        // acceptance order for the Gram basis: •• before l2
        assert!(f("[][]") < f("[[]]"));
        let w3 = forests(3);
        let names: Vec<String> = w3.iter().map(|x| x.to_string()).collect();
        assert_eq!(
            names,
            vec!["[][][]", "[][[]]", "[[]][]", "[[][]]", "[[[]]]"]
        );
    }

    #[test]
    fn enumeration_counts_match_catalan() {
        for n in 1..=8 {
            assert_eq!(forests(n).len() as u64, catalan(n), "forests({n})");
            assert_eq!(trees(n).len() as u64, catalan(n - 1), "trees({n})");
            assert_eq!(binary_trees(n + 1).len() as u64, catalan(n), "binary({})", n + 1);
        }
        assert_eq!(forests(0), vec![Forest::unit()]);
        assert_eq!(trees(2), vec![ladder(2).unwrap()]);
        assert_eq!(binary_trees(3).len(), 2);
    }

    #[test]
    fn bplus_examples() {
        // B+(c3 •) is the paper's five-vertex tree with child forest c3 •
        let arg = Forest::new(vec![corolla(3).unwrap(), Tree::leaf()]);
        assert_eq!(b_plus(&arg).to_string(), "[[[][]][]]");
        assert_eq!(b_minus(&Forest::single(b_plus(&arg))).unwrap(), arg);
        assert!(b_minus(&f("[][]")).is_err());
        assert!(b_minus(&Forest::unit()).is_err());
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma(&f("[][[]]")), Some(f("[[]]")));
        assert_eq!(gamma(&f("[[]][]")), None);
        assert_eq!(gamma(&f("[]")), Some(Forest::unit()));
        assert_eq!(gamma(&Forest::unit()), None);
    }

    #[test]
    fn ladder_decomposition_examples() {
        assert_eq!(ladder_decomposition(&Tree::leaf()), (1, vec![]));
        assert_eq!(
            ladder_decomposition(&corolla(3).unwrap()),
            (2, vec![ladder(2).unwrap()])
        );
        // the worked example: ((• ↘ l3) ↘ l2) ↘ c3
        let tree = t("[[[[][[]]][]][][]]");
        assert_eq!(
            ladder_decomposition(&tree),
            (4, vec![ladder(3).unwrap(), ladder(2).unwrap(), corolla(3).unwrap()])
        );
    }

    #[test]
    fn kappa_small_cases() {
        let b2 = BinaryTree::node(BinaryTree::Leaf, BinaryTree::Leaf);
        assert_eq!(kappa(&b2), ladder(2).unwrap());
        let left_comb = BinaryTree::node(b2.clone(), BinaryTree::Leaf);
        let right_comb = BinaryTree::node(BinaryTree::Leaf, b2.clone());
        assert_eq!(kappa(&left_comb), corolla(3).unwrap());
        assert_eq!(kappa(&right_comb), ladder(3).unwrap());
        // 4-leaf slice hits every weight-4 tree exactly once
        let image: std::collections::BTreeSet<Tree> =
            binary_trees(4).iter().map(kappa).collect();
        let all: std::collections::BTreeSet<Tree> = trees(4).into_iter().collect();
        assert_eq!(image, all);
    }

    #[test]
    fn binary_tree_parse_and_render() {
        for s in ["o", "(oo)", "((oo)o)", "(o(oo))"] {
            assert_eq!(parse_binary_tree(s).unwrap().to_string(), s);
        }
        assert!(parse_binary_tree("(oo").is_err());
        assert!(parse_binary_tree("(oo))").is_err());
        assert!(parse_binary_tree("x").is_err());
        assert!(parse_binary_tree("").is_err());
    }

    #[test]
    fn vertex_orders_follow_the_planar_reading() {
        // in l2 the leaf is above the root
        let l2 = f("[[]]");
        let root = VertexId::new(0, vec![]);
        let leaf = VertexId::new(0, vec![0]);
        assert_eq!(compare_high(&l2, &leaf, &root).unwrap(), Comparison::Greater);
        assert_eq!(compare_left(&l2, &leaf, &root).unwrap(), Comparison::Incomparable);

        // in •• the first root is left-greater
        let ff = f("[][]");
        let r0 = VertexId::new(0, vec![]);
        let r1 = VertexId::new(1, vec![]);
        assert_eq!(compare_left(&ff, &r0, &r1).unwrap(), Comparison::Greater);
        assert_eq!(compare_hl(&ff, &r0, &r0).unwrap(), Ordering::Equal);

        // sibling subtrees inside one tree: earlier child is left-greater
        let c3 = f("[[][]]");
        let x = VertexId::new(0, vec![0]);
        let y = VertexId::new(0, vec![1]);
        assert_eq!(compare_left(&c3, &x, &y).unwrap(), Comparison::Greater);
        assert_eq!(compare_hl(&c3, &y, &x).unwrap(), Ordering::Less);

        let stray = VertexId::new(2, vec![]);
        assert!(compare_high(&ff, &r0, &stray).is_err());
    }

    #[test]
    fn hl_is_a_total_order_on_small_forests() {
        for n in 1..=6 {
            for forest in forests(n) {
                let vs = forest.vertices();
                assert_eq!(vs.len(), n);
                for v in &vs {
                    for w in &vs {
                        let c = compare_hl(&forest, v, w).unwrap();
                        let c_rev = compare_hl(&forest, w, v).unwrap();
                        assert_eq!(c, c_rev.reverse(), "antisymmetry in {forest}");
                        if v == w {
                            assert_eq!(c, Ordering::Equal);
                        } else {
                            assert_ne!(c, Ordering::Equal, "totality in {forest}");
                        }
                        for u in &vs {
                            let ab = compare_hl(&forest, v, w).unwrap();
                            let bc = compare_hl(&forest, w, u).unwrap();
                            if ab == Ordering::Greater && bc == Ordering::Greater {
                                assert_eq!(
                                    compare_hl(&forest, v, u).unwrap(),
                                    Ordering::Greater,
                                    "transitivity in {forest}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    fn arb_tree() -> impl Strategy<Value = Tree> {
        Just(Tree::leaf()).prop_recursive(4, 12, 3, |inner| {
            prop::collection::vec(inner, 0..3).prop_map(Tree::new)
        })
    }

    fn arb_forest() -> impl Strategy<Value = Forest> {
        prop::collection::vec(arb_tree(), 0..4).prop_map(Forest::new)
    }

    fn arb_binary() -> impl Strategy<Value = BinaryTree> {
        Just(BinaryTree::Leaf).prop_recursive(5, 16, 2, |inner| {
            (inner.clone(), inner).prop_map(|(l, r)| BinaryTree::node(l, r))
        })
    }

    proptest! {
        #[test]
        fn parse_render_roundtrip(forest in arb_forest()) {
            prop_assert_eq!(parse_forest(&forest.to_string()).unwrap(), forest);
        }

        #[test]
        fn bplus_bminus_roundtrip(forest in arb_forest()) {
            let tree = b_plus(&forest);
            prop_assert_eq!(b_minus(&Forest::single(tree)).unwrap(), forest);
        }

        #[test]
        fn kappa_roundtrip(b in arb_binary()) {
            let tree = kappa(&b);
            prop_assert_eq!(tree.weight(), b.leaves());
            prop_assert_eq!(kappa_inv(&tree), b);
        }
    }
}
