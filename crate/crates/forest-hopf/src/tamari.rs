//! The partial order on planar forests generated by promoting a leftmost
//! child, its Hasse diagram and Möbius function, the change of basis
//! between the binary-tree primitives and the dual basis, and the
//! order-isomorphism with the rotation order on binary trees.
//!
//! One admissible transformation promotes the leftmost child `s` of a
//! vertex `u`: if `u` has a parent, the subtree at `s` moves just before
//! `u` among the parent's children; if `u` is a tree root, the subtree at
//! `s` becomes a new tree just before `u`'s tree. Transformations increase
//! the order.

use crate::algebra::{Element, Scalar};
use crate::combinat::{binary_trees, forests, kappa, trees, BinaryTree, Forest, Tree};
use crate::error::{Error, Result};
use crate::operad::p_basis;
use crate::pairing::{dual_basis, pair};
use crate::report::CheckReport;
use num_traits::{One, Zero};
use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, LazyLock, Mutex};

/// All single admissible transformations of a forest, one per vertex with
/// at least one child, in host preorder (tree roots first).
pub fn transformations(f: &Forest) -> Vec<Forest> {
    fn first_kind(t: &Tree, path: &[usize]) -> Tree {
        if path.len() == 1 {
            let j = path[0];
            let u = &t.children()[j];
            let s = u.children()[0].clone();
            let new_u = Tree::new(u.children()[1..].to_vec());
            let mut children = t.children().to_vec();
            children[j] = new_u;
            children.insert(j, s);
            Tree::new(children)
        } else {
            let mut children = t.children().to_vec();
            children[path[0]] = first_kind(&children[path[0]], &path[1..]);
            Tree::new(children)
        }
    }
    fn internal_vertices(t: &Tree, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for (i, c) in t.children().iter().enumerate() {
            prefix.push(i);
            if !c.children().is_empty() {
                out.push(prefix.clone());
            }
            internal_vertices(c, prefix, out);
            prefix.pop();
        }
    }

    let mut out = Vec::new();
    for (i, tree) in f.trees().iter().enumerate() {
        if !tree.children().is_empty() {
            // second kind: u is the root of tree i
            let s = tree.children()[0].clone();
            let rest = Tree::new(tree.children()[1..].to_vec());
            let mut ts = f.trees().to_vec();
            ts[i] = rest;
            ts.insert(i, s);
            out.push(Forest::new(ts));
        }
        // first kind: u is a non-root vertex of tree i with children
        let mut paths = Vec::new();
        internal_vertices(tree, &mut Vec::new(), &mut paths);
        for path in paths {
            let mut ts = f.trees().to_vec();
            ts[i] = first_kind(tree, &path);
            out.push(Forest::new(ts));
        }
    }
    out
}

/// One weight slice of the forest order: elements in canonical order, the
/// order relation, its covers, and the Möbius matrix.
#[derive(Clone, Debug)]
pub struct PosetSlice {
    weight: usize,
    elements: Vec<Forest>,
    index: HashMap<Forest, usize>,
    leq: Vec<Vec<bool>>,
    covers: Vec<(usize, usize)>,
    mobius: Vec<Vec<Scalar>>,
    generated_noncovers: usize,
}

impl PosetSlice {
    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn elements(&self) -> &[Forest] {
        &self.elements
    }

    pub fn index_of(&self, f: &Forest) -> Result<usize> {
        self.index.get(f).copied().ok_or(Error::VertexNotFound)
    }

    pub fn leq_idx(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn leq(&self, a: &Forest, b: &Forest) -> Result<bool> {
        Ok(self.leq[self.index_of(a)?][self.index_of(b)?])
    }

    pub fn mobius(&self, a: &Forest, b: &Forest) -> Result<Scalar> {
        Ok(self.mobius[self.index_of(a)?][self.index_of(b)?].clone())
    }

    pub fn mobius_idx(&self, i: usize, j: usize) -> &Scalar {
        &self.mobius[i][j]
    }

    /// Cover pairs (lower, upper) of the transitive reduction.
    pub fn covers(&self) -> impl Iterator<Item = (&Forest, &Forest)> {
        self.covers
            .iter()
            .map(|&(i, j)| (&self.elements[i], &self.elements[j]))
    }

    /// Transformation results that were already implied by other chains;
    /// observational only.
    pub fn generated_noncovers(&self) -> usize {
        self.generated_noncovers
    }

    /// Minimal and maximal elements.
    pub fn extremes(&self) -> (Vec<&Forest>, Vec<&Forest>) {
        let n = self.elements.len();
        let minimal = (0..n)
            .filter(|&i| (0..n).all(|j| j == i || !self.leq[j][i]))
            .map(|i| &self.elements[i])
            .collect();
        let maximal = (0..n)
            .filter(|&i| (0..n).all(|j| j == i || !self.leq[i][j]))
            .map(|i| &self.elements[i])
            .collect();
        (minimal, maximal)
    }

    /// Hasse diagram in DOT format, nodes labeled by bracket strings.
    pub fn hasse_dot(&self) -> String {
        let mut out = String::from("digraph hasse {\n");
        for f in &self.elements {
            out.push_str(&format!("  \"{}\";\n", f.bracket_string()));
        }
        for (a, b) in self.covers() {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\";\n",
                a.bracket_string(),
                b.bracket_string()
            ));
        }
        out.push_str("}\n");
        out
    }

    /// Cover edges as CSV.
    pub fn covers_csv(&self) -> String {
        let mut out = String::from("lower,upper\n");
        for (a, b) in self.covers() {
            out.push_str(&format!("{},{}\n", a.bracket_string(), b.bracket_string()));
        }
        out
    }

    /// Full Möbius matrix as CSV with bracket-string headers.
    pub fn mobius_csv(&self) -> String {
        let mut out = String::from("forest");
        for f in &self.elements {
            out.push(',');
            out.push_str(&f.bracket_string());
        }
        out.push('\n');
        for (i, f) in self.elements.iter().enumerate() {
            out.push_str(&f.bracket_string());
            for j in 0..self.elements.len() {
                out.push(',');
                out.push_str(&self.mobius[i][j].to_string());
            }
            out.push('\n');
        }
        out
    }
}

fn closure_and_reduction(
    n: usize,
    edges: &[BTreeSet<usize>],
) -> (Vec<Vec<bool>>, Vec<(usize, usize)>) {
    let mut leq = vec![vec![false; n]; n];
    for (i, row) in leq.iter_mut().enumerate() {
        row[i] = true;
    }
    // DFS closure from each node
    for start in 0..n {
        let mut stack: Vec<usize> = edges[start].iter().copied().collect();
        while let Some(v) = stack.pop() {
            if !leq[start][v] {
                leq[start][v] = true;
                stack.extend(edges[v].iter().copied());
            }
        }
    }
    let mut covers = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && leq[i][j] {
                let has_mid = (0..n).any(|k| k != i && k != j && leq[i][k] && leq[k][j]);
                if !has_mid {
                    covers.push((i, j));
                }
            }
        }
    }
    (leq, covers)
}

fn mobius_matrix(leq: &[Vec<bool>]) -> Vec<Vec<Scalar>> {
    let n = leq.len();
    let mut mob: Vec<Vec<Option<Scalar>>> = vec![vec![None; n]; n];
    fn mu(i: usize, j: usize, leq: &[Vec<bool>], mob: &mut Vec<Vec<Option<Scalar>>>) -> Scalar {
        if i == j {
            return Scalar::one();
        }
        if !leq[i][j] {
            return Scalar::zero();
        }
        if let Some(v) = &mob[i][j] {
            return v.clone();
        }
        let mut acc = Scalar::zero();
        for k in 0..leq.len() {
            if k != j && leq[i][k] && leq[k][j] {
                acc += mu(i, k, leq, mob);
            }
        }
        let v = -acc;
        mob[i][j] = Some(v.clone());
        v
    }
    let mut out = vec![vec![Scalar::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            out[i][j] = mu(i, j, leq, &mut mob);
        }
    }
    out
}

/// Build the weight-`n` slice of the forest order: the reflexive-transitive
/// closure of the admissible transformations, its transitive reduction, and
/// the Möbius matrix.
pub fn poset(n: usize) -> PosetSlice {
    let elements = forests(n);
    let index: HashMap<Forest, usize> = elements
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, f)| (f, i))
        .collect();
    let mut edges: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); elements.len()];
    let mut generated: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (i, f) in elements.iter().enumerate() {
        for g in transformations(f) {
            let j = index[&g];
            edges[i].insert(j);
            generated.insert((i, j));
        }
    }
    let (leq, covers) = closure_and_reduction(elements.len(), &edges);
    let cover_set: BTreeSet<(usize, usize)> = covers.iter().copied().collect();
    let generated_noncovers = generated.difference(&cover_set).count();
    let mobius = mobius_matrix(&leq);
    PosetSlice {
        weight: n,
        elements,
        index,
        leq,
        covers,
        mobius,
        generated_noncovers,
    }
}

static POSET_CACHE: LazyLock<Mutex<HashMap<usize, Arc<PosetSlice>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Shared immutable slice, built once per weight.
pub fn poset_cached(n: usize) -> Arc<PosetSlice> {
    if let Some(hit) = POSET_CACHE.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let slice = Arc::new(poset(n));
    POSET_CACHE
        .lock()
        .unwrap()
        .entry(n)
        .or_insert(slice)
        .clone()
}

/// Expand the binary-tree primitive `p_b` in the dual basis. The expansion
/// must have all coefficients in {0,1}; the support is returned and checked
/// against the down-set of `κ(b)` among trees.
pub fn expand_primitive_in_dual(b: &BinaryTree) -> Result<BTreeSet<Tree>> {
    let n = b.leaves();
    let p = p_basis(b);
    let slice = poset_cached(n);
    let mut support = BTreeSet::new();
    let mut reconstruction = Element::zero();
    for s in trees(n) {
        let coeff = pair(&p, &Element::from_tree(s.clone()));
        if coeff.is_zero() {
            continue;
        }
        if !coeff.is_one() {
            return Err(Error::Invariant(format!(
                "coefficient of f_{{{s}}} in p_{{{b}}} is {coeff}, expected 0 or 1"
            )));
        }
        reconstruction = reconstruction.add(&dual_basis(&Forest::single(s.clone())));
        support.insert(s);
    }
    if reconstruction != p {
        return Err(Error::Invariant(format!(
            "dual-basis expansion of p_{{{b}}} does not reconstruct it"
        )));
    }
    let target = Forest::single(kappa(b));
    let mut downset = BTreeSet::new();
    for s in trees(n) {
        if slice.leq(&Forest::single(s.clone()), &target)? {
            downset.insert(s);
        }
    }
    if downset != support {
        return Err(Error::Invariant(format!(
            "support of p_{{{b}}} differs from the order down-set of {}",
            target.bracket_string()
        )));
    }
    Ok(support)
}

/// Reconstruct the dual-basis element of a tree by Möbius inversion over
/// the binary-tree primitives; verified against [`dual_basis`].
pub fn reconstruct_dual_by_mobius(s: &Tree) -> Result<Element> {
    let n = s.weight();
    let slice = poset_cached(n);
    let target = Forest::single(s.clone());
    let mut acc = Element::zero();
    for b in binary_trees(n) {
        let kb = Forest::single(kappa(&b));
        if slice.leq(&kb, &target)? {
            let mu = slice.mobius(&kb, &target)?;
            acc = acc.add(&p_basis(&b).scale(&mu));
        }
    }
    let expected = dual_basis(&target);
    if acc != expected {
        return Err(Error::Invariant(format!(
            "Möbius reconstruction of f_{{{s}}} gives {acc}, expected {expected}"
        )));
    }
    Ok(acc)
}

fn rotation_successors(b: &BinaryTree) -> Vec<BinaryTree> {
    let mut out = Vec::new();
    if let Some((l, r)) = b.as_node() {
        // right rotation at the root: (a ∨ b) ∨ c → a ∨ (b ∨ c)
        if let Some((a, m)) = l.as_node() {
            out.push(BinaryTree::node(
                a.clone(),
                BinaryTree::node(m.clone(), r.clone()),
            ));
        }
        for lr in rotation_successors(l) {
            out.push(BinaryTree::node(lr, r.clone()));
        }
        for rr in rotation_successors(r) {
            out.push(BinaryTree::node(l.clone(), rr));
        }
    }
    out
}

fn refine_classes(leq: &[Vec<bool>]) -> Vec<u64> {
    let n = leq.len();
    let mut class: Vec<u64> = (0..n)
        .map(|i| {
            let down = (0..n).filter(|&j| leq[j][i]).count() as u64;
            let up = (0..n).filter(|&j| leq[i][j]).count() as u64;
            down << 32 | up
        })
        .collect();
    loop {
        // signature: own class plus the multiset of related classes
        let mut sigs: Vec<(u64, Vec<u64>, Vec<u64>)> = Vec::with_capacity(n);
        for i in 0..n {
            let mut ups: Vec<u64> = (0..n).filter(|&j| i != j && leq[i][j]).map(|j| class[j]).collect();
            let mut downs: Vec<u64> = (0..n).filter(|&j| i != j && leq[j][i]).map(|j| class[j]).collect();
            ups.sort_unstable();
            downs.sort_unstable();
            sigs.push((class[i], ups, downs));
        }
        let mut uniq: Vec<&(u64, Vec<u64>, Vec<u64>)> = sigs.iter().collect();
        uniq.sort();
        uniq.dedup();
        let new_class: Vec<u64> = sigs
            .iter()
            .map(|s| uniq.binary_search(&s).unwrap() as u64)
            .collect();
        if new_class == class {
            return class;
        }
        class = new_class;
    }
}

fn find_order_isomorphism(leq_a: &[Vec<bool>], leq_b: &[Vec<bool>]) -> Option<Vec<usize>> {
    let n = leq_a.len();
    if leq_b.len() != n {
        return None;
    }
    let ca = refine_classes(leq_a);
    let cb = refine_classes(leq_b);
    let mut ma = ca.clone();
    let mut mb = cb.clone();
    ma.sort_unstable();
    mb.sort_unstable();
    if ma != mb {
        return None;
    }
    // assign the most constrained vertices first
    let mut order: Vec<usize> = (0..n).collect();
    let count = |c: u64| ca.iter().filter(|&&x| x == c).count();
    order.sort_by_key(|&i| count(ca[i]));
    let mut image: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; n];
    fn backtrack(
        k: usize,
        order: &[usize],
        ca: &[u64],
        cb: &[u64],
        leq_a: &[Vec<bool>],
        leq_b: &[Vec<bool>],
        image: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let i = order[k];
        for j in 0..cb.len() {
            if used[j] || cb[j] != ca[i] {
                continue;
            }
            let ok = order[..k].iter().all(|&prev| {
                let pj = image[prev].unwrap();
                leq_a[i][prev] == leq_b[j][pj] && leq_a[prev][i] == leq_b[pj][j]
            });
            if ok {
                image[i] = Some(j);
                used[j] = true;
                if backtrack(k + 1, order, ca, cb, leq_a, leq_b, image, used) {
                    return true;
                }
                image[i] = None;
                used[j] = false;
            }
        }
        false
    }
    if backtrack(0, &order, &ca, &cb, leq_a, leq_b, &mut image, &mut used) {
        Some(image.into_iter().map(Option::unwrap).collect())
    } else {
        None
    }
}

/// Check that the weight-`n` forest order is order-isomorphic to the
/// right-rotation order on binary trees with `n` internal vertices, built
/// here as an independent oracle.
pub fn rotation_isomorphism_check(n: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("tamari-isomorphism[{n}]"));
    let slice = poset_cached(n);
    let bts = binary_trees(n + 1);
    report.push(
        format!("element counts at weight {n}"),
        bts.len() == slice.elements().len(),
        format!("{} forests, {} binary trees", slice.elements().len(), bts.len()),
    );
    let bt_index: HashMap<BinaryTree, usize> = bts
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, b)| (b, i))
        .collect();
    let mut edges: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); bts.len()];
    for (i, b) in bts.iter().enumerate() {
        for succ in rotation_successors(b) {
            edges[i].insert(bt_index[&succ]);
        }
    }
    let (leq_b, _) = closure_and_reduction(bts.len(), &edges);
    let iso = find_order_isomorphism(&slice.leq, &leq_b);
    report.push(
        format!("order isomorphism with the rotation order at weight {n}"),
        iso.is_some(),
        match &iso {
            Some(_) => "isomorphism found".to_string(),
            None => "no order isomorphism exists".to_string(),
        },
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{parse_binary_tree, parse_forest};

    fn f(s: &str) -> Forest {
        parse_forest(s).unwrap()
    }

    fn tr(s: &str) -> Tree {
        f(s).as_single_tree().unwrap().clone()
    }

    fn b(s: &str) -> BinaryTree {
        parse_binary_tree(s).unwrap()
    }

    #[test]
    fn transformation_examples() {
        assert_eq!(transformations(&f("[[]]")), vec![f("[][]")]);
        let l3_results: BTreeSet<Forest> = transformations(&f("[[[]]]")).into_iter().collect();
        let expected: BTreeSet<Forest> = [f("[[][]]"), f("[[]][]")].into_iter().collect();
        assert_eq!(l3_results, expected);
        assert!(transformations(&f("[][]")).is_empty());
        // weight preserved, no fixed points
        for n in 1..=5 {
            for forest in forests(n) {
                for g in transformations(&forest) {
                    assert_eq!(g.weight(), n);
                    assert_ne!(g, forest);
                }
            }
        }
    }

    #[test]
    fn poset_weight_2_and_3() {
        let p2 = poset(2);
        assert!(p2.leq(&f("[[]]"), &f("[][]")).unwrap());
        assert!(!p2.leq(&f("[][]"), &f("[[]]")).unwrap());
        assert_eq!(p2.mobius(&f("[[]]"), &f("[][]")).unwrap(), Scalar::from(-1));
        assert_eq!(p2.covers().count(), 1);

        let p3 = poset(3);
        assert!(p3.leq(&f("[[[]]]"), &f("[[][]]")).unwrap());
        assert_eq!(p3.mobius(&f("[[[]]]"), &f("[[][]]")).unwrap(), Scalar::from(-1));
        // the interval between them is exactly the two endpoints
        let between: Vec<&Forest> = p3
            .elements()
            .iter()
            .filter(|z| {
                p3.leq(&f("[[[]]]"), z).unwrap() && p3.leq(z, &f("[[][]]")).unwrap()
            })
            .collect();
        assert_eq!(between.len(), 2);
        for forest in p3.elements() {
            assert_eq!(p3.mobius(forest, forest).unwrap(), Scalar::one());
        }
    }

    #[test]
    fn poset_extremes() {
        for n in 1..=5 {
            let p = poset(n);
            let (mins, maxs) = p.extremes();
            assert_eq!(mins, vec![&Forest::single(crate::combinat::ladder(n).unwrap())]);
            assert_eq!(maxs, vec![&Forest::new(vec![Tree::leaf(); n])]);
        }
    }

    #[test]
    fn zeta_times_mobius_is_identity() {
        for n in 1..=5 {
            let p = poset(n);
            let m = p.elements().len();
            for i in 0..m {
                for j in 0..m {
                    let mut acc = Scalar::zero();
                    for k in 0..m {
                        if p.leq_idx(i, k) {
                            acc += p.mobius_idx(k, j);
                        }
                    }
                    let expected = if i == j { Scalar::one() } else { Scalar::zero() };
                    assert_eq!(acc, expected, "zeta*mobius at weight {n} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn expansion_examples() {
        let set = expand_primitive_in_dual(&b("(oo)")).unwrap();
        assert_eq!(set, [tr("[[]]")].into_iter().collect());
        let set = expand_primitive_in_dual(&b("((oo)o)")).unwrap();
        assert_eq!(set, [tr("[[][]]"), tr("[[[]]]")].into_iter().collect());
        let set = expand_primitive_in_dual(&b("(o(oo))")).unwrap();
        assert_eq!(set, [tr("[[[]]]")].into_iter().collect());
    }

    #[test]
    fn mobius_reconstruction_examples() {
        assert_eq!(reconstruct_dual_by_mobius(&Tree::leaf()).unwrap(), Element::from_tree(Tree::leaf()));
        let f_l2 = Element::from_forest(f("[][]")).sub(&Element::from_forest(f("[[]]")));
        assert_eq!(reconstruct_dual_by_mobius(&tr("[[]]")).unwrap(), f_l2);
        // the corolla row: f = -c3 + • l2
        let f_c3 = Element::from_forest(f("[][[]]")).sub(&Element::from_forest(f("[[][]]")));
        assert_eq!(reconstruct_dual_by_mobius(&tr("[[][]]")).unwrap(), f_c3);
    }

    #[test]
    fn rotation_isomorphism_small() {
        for n in 2..=4 {
            assert!(rotation_isomorphism_check(n).passed(), "weight {n}");
        }
    }
}
