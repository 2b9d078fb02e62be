//! Left-admissible cuts, the cut coproduct Δ and the deconcatenation
//! coproduct Δ↗, their reduced and iterated forms, and the antipodes.
//!
//! Δ is computed from explicitly enumerated cuts rather than by induction on
//! `B⁺`, so the cut enumerator is testable on its own against the coproduct
//! tables. A cut selects whole trees and a per-tree antichain of edges; it
//! is left-admissible when the branch is upward closed for the left order.

use crate::algebra::{Element, Scalar, Tensor};
use crate::combinat::{
    cmp_left_unchecked, Comparison, Forest, Tree, VertexId,
};
use crate::error::{Error, Result};
use crate::operad::{act, Flavor};
use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::{LazyLock, Mutex};

/// A nonempty admissible cut of a host forest. `cut_trees` lists trees cut
/// entirely; `cut_edges` lists, for each cut edge, the vertex just above it.
/// No cut edge lies in a cut tree or above another cut edge.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cut {
    host: Forest,
    cut_trees: BTreeSet<usize>,
    cut_edges: BTreeSet<VertexId>,
}

impl Cut {
    pub fn host(&self) -> &Forest {
        &self.host
    }

    pub fn cut_trees(&self) -> impl Iterator<Item = usize> + '_ {
        self.cut_trees.iter().copied()
    }

    /// Cut edges as (parent vertex, child index) pairs.
    pub fn cut_edges(&self) -> impl Iterator<Item = (VertexId, usize)> + '_ {
        self.cut_edges.iter().map(|v| v.parent_edge().expect("cut edges are below a root"))
    }

    /// The total cut removes every tree whole.
    pub fn is_total(&self) -> bool {
        self.cut_edges.is_empty() && self.cut_trees.len() == self.host.len()
    }

    fn branch_roots(&self) -> BTreeSet<VertexId> {
        let mut roots: BTreeSet<VertexId> = self
            .cut_trees
            .iter()
            .map(|&i| VertexId::new(i, Vec::new()))
            .collect();
        roots.extend(self.cut_edges.iter().cloned());
        roots
    }

    /// The branch `P`: subtrees above the cuts, in planar order.
    pub fn branch(&self) -> Forest {
        let trees: Vec<Tree> = self
            .branch_roots()
            .iter()
            .map(|v| self.host.subtree(v).expect("valid cut").clone())
            .collect();
        Forest::new(trees)
    }

    /// The trunk `R`: what is left of the non-cut trees.
    pub fn trunk(&self) -> Forest {
        fn prune(t: &Tree, prefix: &mut Vec<usize>, cuts: &BTreeSet<VertexId>, tree: usize) -> Tree {
            let mut children = Vec::new();
            for (i, c) in t.children().iter().enumerate() {
                prefix.push(i);
                let id = VertexId::new(tree, prefix.clone());
                if !cuts.contains(&id) {
                    children.push(prune(c, prefix, cuts, tree));
                }
                prefix.pop();
            }
            Tree::new(children)
        }
        let mut trees = Vec::new();
        for (i, t) in self.host.trees().iter().enumerate() {
            if !self.cut_trees.contains(&i) {
                trees.push(prune(t, &mut Vec::new(), &self.cut_edges, i));
            }
        }
        Forest::new(trees)
    }

    fn branch_vertex_set(&self) -> HashSet<VertexId> {
        let mut set = HashSet::new();
        let roots = self.branch_roots();
        for v in self.host.vertices() {
            if roots.iter().any(|r| r.is_ancestor_of(&v)) {
                set.insert(v);
            }
        }
        set
    }

    fn is_left_admissible(&self) -> bool {
        let branch = self.branch_vertex_set();
        if branch.is_empty() {
            return false;
        }
        for y in self.host.vertices() {
            if branch.contains(&y) {
                continue;
            }
            for x in &branch {
                if cmp_left_unchecked(&y, x) == Comparison::Greater {
                    return false;
                }
            }
        }
        true
    }
}

/// Edge antichains of one tree: every set of vertices (as paths) with no
/// ancestry relation, each marking the edge above it. Includes the empty
/// set.
fn edge_antichains(t: &Tree) -> Vec<BTreeSet<Vec<usize>>> {
    // options(c, p) = antichains of the subtree at path p, allowing the
    // edge above p itself to be cut
    fn options(c: &Tree, p: &[usize]) -> Vec<BTreeSet<Vec<usize>>> {
        let mut cut_here = BTreeSet::new();
        cut_here.insert(p.to_vec());
        let mut all = vec![cut_here];
        all.extend(below(c, p));
        all
    }
    // below(c, p) = antichains strictly inside the subtree at path p
    fn below(c: &Tree, p: &[usize]) -> Vec<BTreeSet<Vec<usize>>> {
        let mut acc: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new()];
        for (i, child) in c.children().iter().enumerate() {
            let mut p2 = p.to_vec();
            p2.push(i);
            let opts = options(child, &p2);
            let mut next = Vec::with_capacity(acc.len() * opts.len());
            for a in &acc {
                for o in &opts {
                    let mut merged = a.clone();
                    merged.extend(o.iter().cloned());
                    next.push(merged);
                }
            }
            acc = next;
        }
        acc
    }
    below(t, &[])
}

/// All nonempty left-admissible cuts of a non-unit forest, total cut
/// included, in a deterministic order.
pub fn left_admissible_cuts(f: &Forest) -> Result<Vec<Cut>> {
    if f.is_unit() {
        return Err(Error::UnitOperand { op: "cut enumeration" });
    }
    // per tree: cut it whole (None) or choose an edge antichain (Some)
    let per_tree: Vec<Vec<Option<BTreeSet<Vec<usize>>>>> = f
        .trees()
        .iter()
        .map(|t| {
            let mut opts: Vec<Option<BTreeSet<Vec<usize>>>> = vec![None];
            opts.extend(edge_antichains(t).into_iter().map(Some));
            opts
        })
        .collect();
    let mut cuts = Vec::new();
    let mut choice = vec![0usize; f.len()];
    loop {
        let mut cut_trees = BTreeSet::new();
        let mut cut_edges = BTreeSet::new();
        let mut nonempty = false;
        for (i, &c) in choice.iter().enumerate() {
            match &per_tree[i][c] {
                None => {
                    cut_trees.insert(i);
                    nonempty = true;
                }
                Some(edges) => {
                    for p in edges {
                        cut_edges.insert(VertexId::new(i, p.clone()));
                        nonempty = true;
                    }
                }
            }
        }
        if nonempty {
            let cut = Cut { host: f.clone(), cut_trees, cut_edges };
            if cut.is_left_admissible() {
                cuts.push(cut);
            }
        }
        // advance the mixed-radix counter
        let mut k = 0;
        loop {
            if k == choice.len() {
                return Ok(cuts);
            }
            choice[k] += 1;
            if choice[k] < per_tree[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

static REDUCED_PAIRS: LazyLock<Mutex<HashMap<Forest, std::sync::Arc<Vec<(Forest, Forest)>>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Branch/trunk pairs of the non-total left-admissible cuts (the terms of
/// the reduced coproduct of a basis forest). Memoized per forest.
pub(crate) fn reduced_cut_pairs(f: &Forest) -> std::sync::Arc<Vec<(Forest, Forest)>> {
    if let Some(hit) = REDUCED_PAIRS.lock().unwrap().get(f) {
        return hit.clone();
    }
    let pairs: Vec<(Forest, Forest)> = left_admissible_cuts(f)
        .expect("non-unit forest")
        .iter()
        .filter(|c| !c.is_total())
        .map(|c| (c.branch(), c.trunk()))
        .collect();
    let pairs = std::sync::Arc::new(pairs);
    REDUCED_PAIRS
        .lock()
        .unwrap()
        .entry(f.clone())
        .or_insert(pairs)
        .clone()
}

/// Which of the two coproducts an iterated or reduced operation uses.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoproductKind {
    /// The left-admissible-cut coproduct Δ.
    Cut,
    /// The deconcatenation coproduct Δ↗.
    Deconcat,
}

/// The full cut coproduct Δ, linearly extended. `Δ(1) = 1⊗1`.
pub fn delta(x: &Element) -> Tensor {
    let mut out = Tensor::zero(2);
    for (f, c) in x.terms() {
        if f.is_unit() {
            out.add_term(vec![Forest::unit(), Forest::unit()], c.clone());
            continue;
        }
        out.add_term(vec![f.clone(), Forest::unit()], c.clone());
        out.add_term(vec![Forest::unit(), f.clone()], c.clone());
        for (p, r) in reduced_cut_pairs(f).iter() {
            out.add_term(vec![p.clone(), r.clone()], c.clone());
        }
    }
    out
}

/// The reduced coproduct Δ̃ = Δ − id⊗1 − 1⊗id, defined on the augmentation
/// ideal.
pub fn delta_red(x: &Element) -> Result<Tensor> {
    let mut out = Tensor::zero(2);
    for (f, c) in x.terms() {
        if f.is_unit() {
            return Err(Error::UnitOperand { op: "reduced coproduct" });
        }
        for (p, r) in reduced_cut_pairs(f).iter() {
            out.add_term(vec![p.clone(), r.clone()], c.clone());
        }
    }
    Ok(out)
}

/// The deconcatenation coproduct Δ↗, all splits included; `Δ↗(1) = 1⊗1`.
pub fn delta_ne(x: &Element) -> Tensor {
    let mut out = Tensor::zero(2);
    for (f, c) in x.terms() {
        let trees = f.trees();
        for k in 0..=trees.len() {
            out.add_term(
                vec![Forest::new(trees[..k].to_vec()), Forest::new(trees[k..].to_vec())],
                c.clone(),
            );
        }
    }
    out
}

/// The reduced deconcatenation coproduct Δ̃↗ (proper splits only), defined
/// on the augmentation ideal. Single trees are primitive.
pub fn delta_ne_red(x: &Element) -> Result<Tensor> {
    let mut out = Tensor::zero(2);
    for (f, c) in x.terms() {
        if f.is_unit() {
            return Err(Error::UnitOperand { op: "reduced deconcatenation" });
        }
        let trees = f.trees();
        for k in 1..trees.len() {
            out.add_term(
                vec![Forest::new(trees[..k].to_vec()), Forest::new(trees[k..].to_vec())],
                c.clone(),
            );
        }
    }
    Ok(out)
}

fn reduced(kind: CoproductKind, x: &Element) -> Result<Tensor> {
    match kind {
        CoproductKind::Cut => delta_red(x),
        CoproductKind::Deconcat => delta_ne_red(x),
    }
}

/// Apply the reduced coproduct of the given kind to factor `idx` of a
/// tensor, raising the rank by one.
pub fn tensor_apply_red(kind: CoproductKind, t: &Tensor, idx: usize) -> Result<Tensor> {
    assert!(idx < t.rank());
    let mut out = Tensor::zero(t.rank() + 1);
    for (factors, c) in t.terms() {
        let inner = reduced(kind, &Element::from_forest(factors[idx].clone()))?;
        for (pair, ci) in inner.terms() {
            let mut fs = Vec::with_capacity(t.rank() + 1);
            fs.extend(factors[..idx].iter().cloned());
            fs.extend(pair.iter().cloned());
            fs.extend(factors[idx + 1..].iter().cloned());
            out.add_term(fs, c * ci);
        }
    }
    Ok(out)
}

/// Left-iterated reduced coproduct: rank `n + 1` for `n >= 1`, with
/// `Δ̃¹ = Δ̃` and `Δ̃ⁿ = (Δ̃ ⊗ id^{n-1}) ∘ Δ̃ⁿ⁻¹`. Vanishes as soon as `n`
/// reaches the weight, by the grading.
pub fn iterate_red(kind: CoproductKind, n: usize, x: &Element) -> Result<Tensor> {
    assert!(n >= 1, "iterated coproducts start at n = 1");
    let mut t = reduced(kind, x)?;
    for k in 2..=n {
        if t.is_zero() {
            return Ok(Tensor::zero(n + 1));
        }
        t = tensor_apply_red(kind, &t, 0)?;
        debug_assert_eq!(t.rank(), k + 1);
    }
    Ok(t)
}

/// The alternating ladder sums `p_n`: `p_1 = •` and, for `n >= 2`,
/// `p_n = Σ (−1)^k l_{a₁}…l_{a_k}` over the compositions `a₁+…+a_k = n`.
/// `p_n` is the antipode of the ladder `l_n`.
pub fn ladder_antipode(n: usize) -> Result<Element> {
    if n == 0 {
        return Err(Error::ZeroWeight { what: "ladder antipode" });
    }
    if n == 1 {
        return Ok(Element::from_tree(Tree::leaf()));
    }
    let mut out = Element::zero();
    // compositions of n correspond to subsets of the n-1 inner gaps
    for mask in 0u32..(1 << (n - 1)) {
        let mut parts = Vec::new();
        let mut run = 1usize;
        for gap in 0..n - 1 {
            if mask & (1 << gap) != 0 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        let sign = if parts.len() % 2 == 0 { 1 } else { -1 };
        let trees: Vec<Tree> = parts
            .iter()
            .map(|&a| crate::combinat::ladder(a).expect("positive part"))
            .collect();
        out.add_term(Forest::new(trees), Scalar::from(sign));
    }
    Ok(out)
}

/// The antipode S of the cut bialgebra, in closed form: `S(1) = 1`, a tree
/// decomposed as `l_k` acting on `(•, tail)` maps to `p_k` acting on the
/// same arguments, and every basis forest with two or more trees maps
/// to zero.
pub fn antipode(x: &Element) -> Element {
    let mut out = Element::zero();
    for (f, c) in x.terms() {
        if f.is_unit() {
            out.add_term(Forest::unit(), c.clone());
            continue;
        }
        let Some(tree) = f.as_single_tree() else { continue };
        let (k, tail) = crate::combinat::ladder_decomposition(tree);
        let p = ladder_antipode(k).expect("k >= 1");
        let mut args = Vec::with_capacity(k);
        args.push(Element::from_tree(Tree::leaf()));
        args.extend(tail.into_iter().map(Element::from_tree));
        let value = act(Flavor::Root, &p, &args).expect("ladder antipode acts on trees");
        out = out.add(&value.scale(c));
    }
    out
}

fn series_antipode(
    kind: CoproductKind,
    x: &Element,
    product: impl Fn(&Forest, &Forest) -> Forest,
) -> Result<Element> {
    if x.has_unit_term() {
        return Err(Error::UnitOperand { op: "antipode series" });
    }
    let mut acc = x.neg();
    if x.is_zero() {
        return Ok(acc);
    }
    let mut t = reduced(kind, x)?;
    let mut i = 1usize;
    while !t.is_zero() {
        let folded = t.fold_product(&product);
        // sign (−1)^{i+1}
        let signed = if i % 2 == 1 { folded } else { folded.neg() };
        acc = acc.add(&signed);
        t = tensor_apply_red(kind, &t, 0)?;
        i += 1;
    }
    Ok(acc)
}

/// The antipode of the graft bialgebra (M, ↗, Δ̃):
/// `S↗(a) = Σ_{i≥0} (−1)^{i+1} a⁽¹⁾ ↗ … ↗ a⁽ⁱ⁺¹⁾` over iterated Δ̃.
/// `−S↗` projects onto Ker Δ̃ along M↗M.
pub fn graft_antipode(x: &Element) -> Result<Element> {
    series_antipode(CoproductKind::Cut, x, |a, b| {
        crate::algebra::graft_leaf_forests(a, b)
    })
}

/// The antipode of the deconcatenation bialgebra (M, m, Δ̃↗):
/// `S^↗(a) = Σ_{i≥0} (−1)^{i+1} a⁽¹⁾_↗ … a⁽ⁱ⁺¹⁾_↗` over iterated Δ̃↗.
/// `−S^↗` projects onto Ker Δ̃↗ along M·M.
pub fn deconcat_antipode(x: &Element) -> Result<Element> {
    series_antipode(CoproductKind::Deconcat, x, |a, b| a.concat(b))
}

/// The eulerian idempotent `S↗ ∘ S^↗`, the projection onto
/// `Ker Δ̃ ∩ Ker Δ̃↗ = Vect(•)` along `M·M + M↗M`.
pub fn eulerian(x: &Element) -> Result<Element> {
    graft_antipode(&deconcat_antipode(x)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::parse_forest;

    fn f(s: &str) -> Forest {
        parse_forest(s).unwrap()
    }

    fn e(s: &str) -> Element {
        Element::from_forest(f(s))
    }

    fn t2(pairs: &[(&str, &str, i64)]) -> Tensor {
        let mut t = Tensor::zero(2);
        for (a, b, c) in pairs {
            t.add_term(vec![f(a), f(b)], Scalar::from(*c));
        }
        t
    }

    fn delta_f(s: &str) -> Tensor {
        delta(&e(s))
    }

    #[test]
    fn cuts_of_small_forests() {
        let cuts = left_admissible_cuts(&f("[]")).unwrap();
        assert_eq!(cuts.len(), 1);
        assert!(cuts[0].is_total());
        assert_eq!(cuts[0].branch(), f("[]"));
        assert_eq!(cuts[0].trunk(), Forest::unit());

        let cuts = left_admissible_cuts(&f("[[]]")).unwrap();
        assert_eq!(cuts.len(), 2);
        let proper: Vec<_> = cuts.iter().filter(|c| !c.is_total()).collect();
        assert_eq!(proper.len(), 1);
        assert_eq!(proper[0].branch(), f("[]"));
        assert_eq!(proper[0].trunk(), f("[]"));

        // c3: three cuts, branch⊗trunk in {c3⊗1, ••⊗•, •⊗l2}
        let cuts = left_admissible_cuts(&f("[[][]]")).unwrap();
        let pairs: BTreeSet<(Forest, Forest)> =
            cuts.iter().map(|c| (c.branch(), c.trunk())).collect();
        let expected: BTreeSet<(Forest, Forest)> = [
            (f("[[][]]"), Forest::unit()),
            (f("[][]"), f("[]")),
            (f("[]"), f("[[]]")),
        ]
        .into_iter()
        .collect();
        assert_eq!(pairs, expected);

        assert!(left_admissible_cuts(&Forest::unit()).is_err());
    }

    #[test]
    fn coproduct_examples_weight_le_3() {
        assert_eq!(delta_f("[]"), t2(&[("[]", "", 1), ("", "[]", 1)]));
        assert_eq!(
            delta_f("[][]"),
            t2(&[("[][]", "", 1), ("", "[][]", 1), ("[]", "[]", 1)])
        );
        assert_eq!(
            delta_f("[[]]"),
            t2(&[("[[]]", "", 1), ("", "[[]]", 1), ("[]", "[]", 1)])
        );
        assert_eq!(
            delta_f("[[]][]"),
            t2(&[
                ("[[]][]", "", 1),
                ("", "[[]][]", 1),
                ("[]", "[][]", 1),
                ("[[]]", "[]", 1),
            ])
        );
        assert_eq!(
            delta_f("[[][]]"),
            t2(&[
                ("[[][]]", "", 1),
                ("", "[[][]]", 1),
                ("[][]", "[]", 1),
                ("[]", "[[]]", 1),
            ])
        );
        assert_eq!(
            delta_f("[[[]]]"),
            t2(&[
                ("[[[]]]", "", 1),
                ("", "[[[]]]", 1),
                ("[[]]", "[]", 1),
                ("[]", "[[]]", 1),
            ])
        );
        assert_eq!(delta(&Element::one()), t2(&[("", "", 1)]));
    }

    #[test]
    fn reduced_coproduct_examples() {
        assert_eq!(delta_red(&e("[[]]")).unwrap(), t2(&[("[]", "[]", 1)]));
        assert_eq!(
            delta_red(&e("[[]][]")).unwrap(),
            t2(&[("[]", "[][]", 1), ("[[]]", "[]", 1)])
        );
        assert_eq!(
            delta_red(&e("[[]][[]]")).unwrap(),
            t2(&[("[]", "[][[]]", 1), ("[[]]", "[[]]", 1), ("[[]][]", "[]", 1)])
        );
        assert!(delta_red(&Element::one()).is_err());
        assert!(delta_red(&e("[]")).unwrap().is_zero());
    }

    #[test]
    fn deconcatenation_examples() {
        // single trees are primitive
        for s in ["[]", "[[]]", "[[][]]"] {
            assert!(delta_ne_red(&e(s)).unwrap().is_zero());
        }
        assert_eq!(
            delta_ne_red(&e("[][[]][]")).unwrap(),
            t2(&[("[]", "[[]][]", 1), ("[][[]]", "[]", 1)])
        );
        assert_eq!(delta_ne_red(&e("[][]")).unwrap(), t2(&[("[]", "[]", 1)]));
        assert_eq!(
            delta_ne(&e("[][]")),
            t2(&[("[][]", "", 1), ("", "[][]", 1), ("[]", "[]", 1)])
        );
        assert_eq!(delta_ne(&Element::one()), t2(&[("", "", 1)]));
        assert!(delta_ne_red(&Element::one()).is_err());
    }

    #[test]
    fn iterated_coproducts() {
        let mut expected = Tensor::zero(3);
        expected.add_term(vec![f("[]"), f("[]"), f("[]")], Scalar::from(1));
        assert_eq!(
            iterate_red(CoproductKind::Cut, 2, &e("[[[]]]")).unwrap(),
            expected
        );
        assert_eq!(
            iterate_red(CoproductKind::Deconcat, 2, &e("[][][]")).unwrap(),
            expected
        );
        // grading: n-fold reduced coproduct kills weight <= n
        for s in ["[]", "[][]", "[[]]"] {
            let x = e(s);
            let n = f(s).weight();
            assert!(iterate_red(CoproductKind::Cut, n, &x).unwrap().is_zero());
            assert!(iterate_red(CoproductKind::Deconcat, n, &x).unwrap().is_zero());
        }
    }

    #[test]
    fn ladder_antipode_small_cases() {
        assert_eq!(ladder_antipode(1).unwrap(), e("[]"));
        assert_eq!(ladder_antipode(2).unwrap(), e("[][]").sub(&e("[[]]")));
        let p3 = e("[[[]]]")
            .neg()
            .add(&e("[[]][]"))
            .add(&e("[][[]]"))
            .sub(&e("[][][]"));
        assert_eq!(ladder_antipode(3).unwrap(), p3);
        let p4 = e("[[[[]]]]")
            .neg()
            .add(&e("[[[]]][]"))
            .add(&e("[[]][[]]"))
            .add(&e("[][[[]]]"))
            .sub(&e("[[]][][]"))
            .sub(&e("[][[]][]"))
            .sub(&e("[][][[]]"))
            .add(&e("[][][][]"));
        assert_eq!(ladder_antipode(4).unwrap(), p4);
        assert!(ladder_antipode(0).is_err());
    }

    #[test]
    fn antipode_closed_form() {
        assert_eq!(antipode(&Element::one()), Element::one());
        assert_eq!(antipode(&e("[][]")), Element::zero());
        assert_eq!(antipode(&e("[[]]")), ladder_antipode(2).unwrap());
        assert_eq!(antipode(&e("[[[]]]")), ladder_antipode(3).unwrap());
        // S(c3) = -c3 + • l2
        assert_eq!(antipode(&e("[[][]]")), e("[][[]]").sub(&e("[[][]]")));
        // antipode output of a tree is primitive
        for n in 1..=5 {
            for tree in crate::combinat::trees(n) {
                let s = antipode(&Element::from_tree(tree.clone()));
                assert!(
                    delta_red(&s).unwrap().is_zero(),
                    "S of {} not primitive",
                    tree
                );
            }
        }
    }

    #[test]
    fn series_antipodes_small_cases() {
        // S^↗ negates trees and kills products
        assert_eq!(deconcat_antipode(&e("[[][]]")).unwrap(), e("[[][]]").neg());
        assert!(deconcat_antipode(&e("[][]")).unwrap().is_zero());
        // S↗(••) = -•• + l2, S↗(l2) = 0
        assert_eq!(
            graft_antipode(&e("[][]")).unwrap(),
            e("[[]]").sub(&e("[][]"))
        );
        assert!(graft_antipode(&e("[[]]")).unwrap().is_zero());
        // eulerian projects onto the span of the single vertex
        assert_eq!(eulerian(&e("[]")).unwrap(), e("[]"));
        for s in ["[][]", "[[]]", "[[][]]", "[[]][]", "[][][]"] {
            assert!(eulerian(&e(s)).unwrap().is_zero(), "eulerian({s})");
        }
        assert!(graft_antipode(&Element::one()).is_err());
        assert!(deconcat_antipode(&Element::one()).is_err());
    }

    #[test]
    fn cut_count_matches_term_count() {
        // every coproduct term except 1⊗F comes from exactly one cut
        for n in 1..=5 {
            for forest in crate::combinat::forests(n) {
                let cuts = left_admissible_cuts(&forest).unwrap().len();
                let terms = delta(&Element::from_forest(forest.clone())).num_terms();
                assert_eq!(cuts + 1, terms, "cut/term count for {forest}");
            }
        }
    }
}
