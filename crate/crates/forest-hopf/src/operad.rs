//! The two operads carried by planar forests, realized directly on the
//! weight-graded basis: a forest of weight `n` is an `n`-ary operation, the
//! action on unit-free elements is defined by one recursion (single vertex
//! = identity, `B⁺` peels one grafting, concatenation splits the argument
//! list), and composition is the same recursion applied to forests.

use crate::algebra::{graft_leaf_forests, graft_root_forests, Element, Scalar};
use crate::coalgebra::{delta_ne_red, delta_red};
use crate::combinat::{binary_trees, catalan, corolla, forests, trees, BinaryTree, Forest, Tree};
use crate::error::{Error, Result};
use crate::linalg;
use crate::pairing::dual_basis;
use crate::report::CheckReport;
use num_traits::Zero;
use std::fmt;

/// Which grafting the operad structure uses.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Flavor {
    /// Root grafting `↘`.
    Root,
    /// Left-leaf grafting `↗`.
    Leaf,
}

impl Flavor {
    pub fn graft(self, a: &Forest, b: &Forest) -> Result<Forest> {
        match self {
            Flavor::Root => graft_root_forests(a, b),
            Flavor::Leaf => Ok(graft_leaf_forests(a, b)),
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Flavor::Root => write!(f, "root"),
            Flavor::Leaf => write!(f, "leaf"),
        }
    }
}

impl std::str::FromStr for Flavor {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "root" => Ok(Flavor::Root),
            "leaf" => Ok(Flavor::Leaf),
            other => Err(format!("unknown flavor {other:?}, expected root or leaf")),
        }
    }
}

/// An element of one of the forest operads: a homogeneous combination of
/// forests whose common weight is the arity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OperadElement {
    flavor: Flavor,
    arity: usize,
    value: Element,
}

impl OperadElement {
    /// Wrap a homogeneous element. The zero element is allowed at any
    /// arity; a nonzero element must be homogeneous of weight `arity`.
    pub fn new(flavor: Flavor, arity: usize, value: Element) -> Result<Self> {
        if arity == 0 {
            return Err(Error::ZeroWeight { what: "operad arity" });
        }
        for (f, _) in value.terms() {
            if f.weight() != arity {
                return Err(Error::Inhomogeneous { arity, got: f.weight() });
            }
        }
        Ok(OperadElement { flavor, arity, value })
    }

    pub fn from_forest(flavor: Flavor, f: Forest) -> Result<Self> {
        let arity = f.weight();
        OperadElement::new(flavor, arity, Element::from_forest(f))
    }

    /// The operad unit: the single vertex in arity 1.
    pub fn identity(flavor: Flavor) -> Self {
        OperadElement {
            flavor,
            arity: 1,
            value: Element::from_tree(Tree::leaf()),
        }
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn value(&self) -> &Element {
        &self.value
    }

    pub fn into_value(self) -> Element {
        self.value
    }
}

fn basis_act(flavor: Flavor, p: &Forest, args: &[&Forest]) -> Result<Forest> {
    debug_assert_eq!(p.weight(), args.len());
    if let Some(t) = p.as_single_tree() {
        if t.is_leaf() {
            return Ok(args[0].clone());
        }
        let inner = basis_act(flavor, &t.child_forest(), &args[..args.len() - 1])?;
        return flavor.graft(&inner, args[args.len() - 1]);
    }
    // several trees: split the argument list by their weights
    let mut pieces = Vec::with_capacity(p.len());
    let mut at = 0usize;
    for t in p.trees() {
        let w = t.weight();
        pieces.push(basis_act(
            flavor,
            &Forest::single(t.clone()),
            &args[at..at + w],
        )?);
        at += w;
    }
    let mut out = pieces[0].clone();
    for piece in &pieces[1..] {
        out = out.concat(piece);
    }
    Ok(out)
}

/// The operad action on the augmentation ideal, multilinear in the
/// operation and in every argument. Arguments must be unit-free; the
/// operation must be homogeneous of weight equal to the argument count.
pub fn act(flavor: Flavor, p: &Element, args: &[Element]) -> Result<Element> {
    let n = args.len();
    if n == 0 {
        return Err(Error::ZeroWeight { what: "operad action" });
    }
    for (f, _) in p.terms() {
        if f.weight() != n {
            return Err(Error::ArityMismatch { expected: f.weight(), got: n });
        }
    }
    for a in args {
        if a.has_unit_term() {
            return Err(Error::UnitOperand { op: "operad action argument" });
        }
    }
    let lists: Vec<Vec<(&Forest, &Scalar)>> = args.iter().map(|a| a.terms().collect()).collect();
    if lists.iter().any(Vec::is_empty) {
        return Ok(Element::zero());
    }
    let mut out = Element::zero();
    for (pf, pc) in p.terms() {
        let mut idx = vec![0usize; n];
        loop {
            let chosen: Vec<&Forest> = idx.iter().enumerate().map(|(i, &j)| lists[i][j].0).collect();
            let mut coeff = pc.clone();
            for (i, &j) in idx.iter().enumerate() {
                coeff *= lists[i][j].1;
            }
            if !coeff.is_zero() {
                out.add_term(basis_act(flavor, pf, &chosen)?, coeff);
            }
            let mut k = 0;
            loop {
                if k == n {
                    break;
                }
                idx[k] += 1;
                if idx[k] < lists[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == n {
                break;
            }
        }
    }
    Ok(out)
}

/// Operad composition, sharing the action's recursion through the weight
/// identification: the result has arity equal to the sum of the argument
/// arities.
pub fn compose(p: &OperadElement, args: &[OperadElement]) -> Result<OperadElement> {
    if args.iter().any(|a| a.flavor != p.flavor) {
        return Err(Error::FlavorMismatch);
    }
    if args.len() != p.arity {
        return Err(Error::ArityMismatch { expected: p.arity, got: args.len() });
    }
    let values: Vec<Element> = args.iter().map(|a| a.value.clone()).collect();
    let value = act(p.flavor, &p.value, &values)?;
    let arity = args.iter().map(|a| a.arity).sum();
    OperadElement::new(p.flavor, arity, value)
}

/// The operad morphism from planar binary trees that realizes the free
/// suboperad of graft-coproduct primitives: the generator is `•• − l₂`.
pub fn theta(b: &BinaryTree) -> OperadElement {
    OperadElement {
        flavor: Flavor::Leaf,
        arity: b.leaves(),
        value: p_basis(b),
    }
}

/// The primitive basis element `p_b` indexed by a binary tree:
/// `p_leaf = •`, `p_{l∨r} = p_l p_r − p_l ↗ p_r`.
pub fn p_basis(b: &BinaryTree) -> Element {
    match b.as_node() {
        None => Element::from_tree(Tree::leaf()),
        Some((l, r)) => {
            let pl = p_basis(l);
            let pr = p_basis(r);
            pl.mul(&pr).sub(&pl.graft_leaf(&pr))
        }
    }
}

fn forest_elem(f: &Forest) -> Element {
    Element::from_forest(f.clone())
}

/// Verify the defining relations of the chosen operad presentation on all
/// basis-forest argument triples of total weight at most `max_weight`,
/// and the same relations as identities between composed arity-3 elements.
pub fn check_presentation(flavor: Flavor, max_weight: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("presentation[{flavor}]"));

    // the relations at the level of P(3), composing the generators
    let m2 = OperadElement::from_forest(flavor, Forest::new(vec![Tree::leaf(); 2])).unwrap();
    let g2 = OperadElement::from_forest(flavor, Forest::single(crate::combinat::ladder(2).unwrap())).unwrap();
    let i = OperadElement::identity(flavor);
    let pairs = [
        ("m∘(g,I) = g∘(I,m)", compose(&m2, &[g2.clone(), i.clone()]), compose(&g2, &[i.clone(), m2.clone()])),
        ("m∘(m,I) = m∘(I,m)", compose(&m2, &[m2.clone(), i.clone()]), compose(&m2, &[i.clone(), m2.clone()])),
        match flavor {
            Flavor::Root => ("g∘(m,I) = g∘(I,g)", compose(&g2, &[m2.clone(), i.clone()]), compose(&g2, &[i.clone(), g2.clone()])),
            Flavor::Leaf => ("g∘(g,I) = g∘(I,g)", compose(&g2, &[g2.clone(), i.clone()]), compose(&g2, &[i.clone(), g2.clone()])),
        },
    ];
    for (id, lhs, rhs) in pairs {
        let lhs = lhs.unwrap();
        let rhs = rhs.unwrap();
        report.push(
            format!("composed arity-3 relation: {id}"),
            lhs.value() == rhs.value(),
            format!("lhs = {}", lhs.value()),
        );
    }

    // the relations evaluated on every basis triple
    let slices = crate::combinat::forests_by_weight(max_weight.saturating_sub(2));
    let mut counterexample: Option<String> = None;
    let mut instances = 0usize;
    'outer: for a in 1..=max_weight.saturating_sub(2) {
        for b in 1..=max_weight.saturating_sub(a + 1) {
            for c in 1..=max_weight.saturating_sub(a + b) {
                for x in &slices[a] {
                    for y in &slices[b] {
                        for z in &slices[c] {
                            instances += 1;
                            let (ex, ey, ez) = (forest_elem(x), forest_elem(y), forest_elem(z));
                            let graft = |u: &Element, v: &Element| match flavor {
                                Flavor::Root => u.graft_root(v).unwrap(),
                                Flavor::Leaf => u.graft_leaf(v),
                            };
                            // m∘(g,I) = g∘(I,m)
                            let r1 = graft(&ex, &ey).mul(&ez) == graft(&ex, &ey.mul(&ez));
                            // m-associativity
                            let r2 = ex.mul(&ey).mul(&ez) == ex.mul(&ey.mul(&ez));
                            // flavor-specific third relation
                            let r3 = match flavor {
                                Flavor::Root => ex.mul(&ey).graft_root(&ez).unwrap()
                                    == ex.graft_root(&ey.graft_root(&ez).unwrap()).unwrap(),
                                Flavor::Leaf => graft(&graft(&ex, &ey), &ez) == graft(&ex, &graft(&ey, &ez)),
                            };
                            if !(r1 && r2 && r3) {
                                counterexample =
                                    Some(format!("triple ({x}, {y}, {z}): r1={r1} r2={r2} r3={r3}"));
                                break 'outer;
                            }
                        }
                    }
                }
            }
        }
    }
    report.push_outcome(
        format!("defining relations on basis triples, total weight <= {max_weight}"),
        counterexample,
        format!("{instances} instances"),
    );
    report
}

fn element_coords(x: &Element, basis_index: &std::collections::HashMap<Forest, usize>) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); basis_index.len()];
    for (f, c) in x.terms() {
        v[basis_index[f]] = c.clone();
    }
    v
}

fn weight_basis_index(n: usize) -> (Vec<Forest>, std::collections::HashMap<Forest, usize>) {
    let basis = forests(n);
    let index = basis.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
    (basis, index)
}

/// The free primitive suboperad in the leaf flavor: checks that the family
/// `p_b` over binary trees with `n` leaves consists of coproduct
/// primitives, is linearly independent, and spans the same space as the
/// dual-basis elements of trees of weight `n`.
pub fn check_primitives_graft_free(n: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("primitive-free[{n}]"));
    let bs = binary_trees(n);
    report.push(
        format!("family size at {n} leaves"),
        bs.len() as u64 == catalan(n.saturating_sub(1)),
        format!("{} elements", bs.len()),
    );
    let ps: Vec<Element> = bs.iter().map(p_basis).collect();
    let mut bad = None;
    for (b, p) in bs.iter().zip(&ps) {
        if !delta_red(p).unwrap().is_zero() {
            bad = Some(format!("p_{b} is not primitive"));
            break;
        }
    }
    report.push_outcome("every p_b is primitive for the cut coproduct", bad, format!("{} elements", ps.len()));

    let (_, index) = weight_basis_index(n);
    let p_rows: Vec<Vec<Scalar>> = ps.iter().map(|p| element_coords(p, &index)).collect();
    let p_rank = linalg::rank(p_rows.clone());
    report.push(
        "p_b family is linearly independent",
        p_rank == ps.len(),
        format!("rank {p_rank} of {}", ps.len()),
    );

    let f_rows: Vec<Vec<Scalar>> = trees(n)
        .iter()
        .map(|t| element_coords(&dual_basis(&Forest::single(t.clone())), &index))
        .collect();
    let f_rank = linalg::rank(f_rows.clone());
    let mut stacked = p_rows;
    stacked.extend(f_rows);
    let joint = linalg::rank(stacked);
    report.push(
        "span of p_b equals span of tree dual-basis elements",
        joint == p_rank && f_rank == p_rank,
        format!("ranks p={p_rank} f={f_rank} joint={joint}"),
    );
    report
}

/// The corolla suboperad of deconcatenation primitives: kernel description
/// in weight `n`, the corolla exchange relations, and reachability of every
/// tree of weight at most `n` by corolla composites.
pub fn check_primitives_corolla(n: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("primitive-corolla[{n}]"));

    // Ker of the reduced deconcatenation in weight n is spanned by trees
    let (basis, _) = weight_basis_index(n);
    let mut split_index: std::collections::HashMap<Vec<Forest>, usize> = std::collections::HashMap::new();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for f in &basis {
        let t = delta_ne_red(&forest_elem(f)).unwrap();
        let mut row = vec![Scalar::zero(); split_index.len()];
        for (factors, c) in t.terms() {
            let next = split_index.len();
            let j = *split_index.entry(factors.clone()).or_insert(next);
            if j >= row.len() {
                row.resize(j + 1, Scalar::zero());
            }
            row[j] = c.clone();
        }
        rows.push(row);
    }
    let cols = split_index.len();
    for row in &mut rows {
        row.resize(cols, Scalar::zero());
    }
    let tree_count = trees(n).len();
    let rank = linalg::rank(rows);
    report.push(
        format!("kernel of reduced deconcatenation in weight {n} is the span of trees"),
        rank == basis.len() - tree_count,
        format!("rank {rank}, expected {}", basis.len() - tree_count),
    );

    // corolla exchange relations
    let mut bad = None;
    'rel: for k in 2..=5usize {
        for l in 2..=5usize {
            let ck = OperadElement::from_forest(Flavor::Leaf, Forest::single(corolla(k).unwrap())).unwrap();
            let cl = OperadElement::from_forest(Flavor::Leaf, Forest::single(corolla(l).unwrap())).unwrap();
            let i = OperadElement::identity(Flavor::Leaf);
            let mut lhs_args = vec![cl.clone()];
            lhs_args.extend(std::iter::repeat_n(i.clone(), k - 1));
            let mut rhs_args = vec![i.clone(); l - 1];
            rhs_args.push(ck.clone());
            let lhs = compose(&ck, &lhs_args).unwrap();
            let rhs = compose(&cl, &rhs_args).unwrap();
            if lhs.value() != rhs.value() {
                bad = Some(format!("c_{k} and c_{l}: {} vs {}", lhs.value(), rhs.value()));
                break 'rel;
            }
        }
    }
    report.push_outcome("corolla exchange relations for 2 <= k,l <= 5", bad, "16 instances");

    // every tree decomposes through a corolla acting on its child subtrees
    let mut bad = None;
    'reach: for w in 2..=n {
        for t in trees(w) {
            let k = t.children().len();
            let ck = OperadElement::from_forest(Flavor::Leaf, Forest::single(corolla(k + 1).unwrap())).unwrap();
            let mut args: Vec<OperadElement> = t
                .children()
                .iter()
                .map(|c| OperadElement::from_forest(Flavor::Leaf, Forest::single(c.clone())).unwrap())
                .collect();
            args.push(OperadElement::identity(Flavor::Leaf));
            let composed = compose(&ck, &args).unwrap();
            if composed.value() != &Element::from_tree(t.clone()) {
                bad = Some(format!("corolla composite missed {t}"));
                break 'reach;
            }
        }
    }
    report.push_outcome(
        format!("every tree of weight <= {n} is a corolla composite"),
        bad,
        "by the one-step decomposition at each root",
    );
    report
}

/// The free primitive suboperad in the root flavor: the single binary
/// generator realizes a bijection from binary trees with `n` leaves onto
/// planar trees of weight `n`.
pub fn check_primitives_root(n: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("primitive-root[{n}]"));
    fn phi(b: &BinaryTree) -> Forest {
        match b.as_node() {
            None => Forest::single(Tree::leaf()),
            Some((l, r)) => graft_root_forests(&phi(l), &phi(r)).expect("trees are unit-free"),
        }
    }
    let bs = binary_trees(n);
    let images: Vec<Forest> = bs.iter().map(phi).collect();
    let all_trees = images.iter().all(|f| f.as_single_tree().is_some());
    report.push(
        "images of the root-graft recursion are single trees",
        all_trees,
        format!("{} binary trees", bs.len()),
    );
    let distinct: std::collections::BTreeSet<Forest> = images.iter().cloned().collect();
    let target: std::collections::BTreeSet<Forest> = trees(n)
        .into_iter()
        .map(Forest::single)
        .collect();
    report.push(
        format!("bijection onto trees of weight {n}"),
        distinct.len() == images.len() && distinct == target,
        format!("{} distinct images", distinct.len()),
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

    fn e(s: &str) -> Element {
        Element::from_forest(f(s))
    }

    fn b(s: &str) -> BinaryTree {
        parse_binary_tree(s).unwrap()
    }

    #[test]
    fn action_matches_the_inductive_description() {
        let args = [e("[[]]"), e("[][]"), e("[[][]]")];
        // •• ∘ (F1,F2) = F1 F2
        assert_eq!(
            act(Flavor::Leaf, &e("[][]"), &args[..2]).unwrap(),
            e("[[]][][]")
        );
        // l3 ∘ (F1,F2,F3) = (F1 ↘ F2) ↘ F3
        assert_eq!(
            act(Flavor::Root, &e("[[[]]]"), &args).unwrap(),
            args[0]
                .graft_root(&args[1])
                .unwrap()
                .graft_root(&args[2])
                .unwrap()
        );
        // c3 ∘ (F1,F2,F3) = (F1 F2) ↗ F3
        assert_eq!(
            act(Flavor::Leaf, &e("[[][]]"), &args).unwrap(),
            args[0].mul(&args[1]).graft_leaf(&args[2])
        );
    }

    #[test]
    fn action_validates_inputs() {
        assert!(matches!(
            act(Flavor::Leaf, &e("[][]"), &[e("[]")]),
            Err(Error::ArityMismatch { .. })
        ));
        assert!(matches!(
            act(Flavor::Leaf, &e("[]"), &[Element::one()]),
            Err(Error::UnitOperand { .. })
        ));
        assert!(act(Flavor::Leaf, &e("[]"), &[]).is_err());
    }

    #[test]
    fn compose_small_cases() {
        let l2 = OperadElement::from_forest(Flavor::Root, f("[[]]")).unwrap();
        let dot = OperadElement::from_forest(Flavor::Root, f("[]")).unwrap();
        let ff = OperadElement::from_forest(Flavor::Root, f("[[][]][]")).unwrap();
        // g ∘ (F, •) = B+(F)
        let composed = compose(&l2, &[ff.clone(), dot.clone()]).unwrap();
        assert_eq!(composed.value(), &e("[[[][]][]]"));
        assert_eq!(composed.arity(), 5);
        // identity laws
        let ident = OperadElement::identity(Flavor::Root);
        assert_eq!(compose(&ident, &[ff.clone()]).unwrap().value(), ff.value());
        assert_eq!(
            compose(&ff, &[ident.clone(), ident.clone(), ident.clone(), ident.clone()])
                .unwrap()
                .value(),
            ff.value()
        );
        // m ∘ (l2, •) = l2 • in the leaf flavor
        let m = OperadElement::from_forest(Flavor::Leaf, f("[][]")).unwrap();
        let l2l = OperadElement::from_forest(Flavor::Leaf, f("[[]]")).unwrap();
        let dotl = OperadElement::identity(Flavor::Leaf);
        assert_eq!(compose(&m, &[l2l, dotl]).unwrap().value(), &e("[[]][]"));

        let rooty = OperadElement::from_forest(Flavor::Root, f("[]")).unwrap();
        let leafy = OperadElement::from_forest(Flavor::Leaf, f("[]")).unwrap();
        assert!(matches!(compose(&rooty, &[leafy]), Err(Error::FlavorMismatch)));
    }

    #[test]
    fn operad_element_validation() {
        let mixed = e("[]").add(&e("[][]"));
        assert!(OperadElement::new(Flavor::Leaf, 2, mixed).is_err());
        assert!(OperadElement::new(Flavor::Leaf, 0, Element::zero()).is_err());
        assert!(OperadElement::new(Flavor::Leaf, 3, Element::zero()).is_ok());
    }

    #[test]
    fn theta_small_cases() {
        assert_eq!(p_basis(&b("o")), e("[]"));
        assert_eq!(p_basis(&b("(oo)")), e("[][]").sub(&e("[[]]")));
        let p3 = e("[][][]")
            .sub(&e("[[]][]"))
            .sub(&e("[[][]]"))
            .add(&e("[[[]]]"));
        assert_eq!(p_basis(&b("((oo)o)")), p3);
        assert_eq!(theta(&b("((oo)o)")).arity(), 3);
    }

    #[test]
    fn theta_is_an_operad_morphism_on_samples() {
        // Θ(b ∘ (b1, b2)) = Θ(b) ∘ (Θ(b1), Θ(b2)) for grafting at the leaves
        fn graft_binary(host: &BinaryTree, subs: &mut Vec<BinaryTree>) -> BinaryTree {
            match host.as_node() {
                None => subs.remove(0),
                Some((l, r)) => {
                    let gl = graft_binary(l, subs);
                    let gr = graft_binary(r, subs);
                    BinaryTree::node(gl, gr)
                }
            }
        }
        for host in binary_trees(2) {
            for b1 in binary_trees(2) {
                for b2 in binary_trees(1) {
                    let mut subs = vec![b1.clone(), b2.clone()];
                    let composite = graft_binary(&host, &mut subs);
                    let lhs = theta(&composite);
                    let rhs = compose(&theta(&host), &[theta(&b1), theta(&b2)]).unwrap();
                    assert_eq!(lhs.value(), rhs.value());
                }
            }
        }
    }

    #[test]
    fn presentation_reports_pass_at_small_weight() {
        assert!(check_presentation(Flavor::Root, 4).passed());
        assert!(check_presentation(Flavor::Leaf, 4).passed());
    }

    #[test]
    fn primitive_suboperad_reports_pass_at_small_weight() {
        for n in 1..=4 {
            assert!(check_primitives_graft_free(n).passed(), "free at {n}");
            assert!(check_primitives_root(n).passed(), "root at {n}");
        }
        assert!(check_primitives_corolla(4).passed());
    }

    #[test]
    fn root_phi_examples() {
        // • ↘ • = l2, and the two 3-leaf shapes give c3 and l3
        let images: std::collections::BTreeSet<String> = binary_trees(3)
            .iter()
            .map(|bt| check_phi(bt).to_string())
            .collect();
        fn check_phi(bt: &BinaryTree) -> Forest {
            match bt.as_node() {
                None => f("[]"),
                Some((l, r)) => graft_root_forests(&check_phi(l), &check_phi(r)).unwrap(),
            }
        }
        assert_eq!(check_phi(&b("(oo)")), f("[[]]"));
        let expected: std::collections::BTreeSet<String> =
            ["[[][]]".to_string(), "[[[]]]".to_string()].into_iter().collect();
        assert_eq!(images, expected);
    }
}
