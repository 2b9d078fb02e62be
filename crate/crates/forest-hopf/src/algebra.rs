//! The algebra of planar forests over exact integers: formal sums of
//! forests, the concatenation product, and the two grafting products.
//!
//! `↘` (root grafting) puts its left operand in front of the children of
//! the first root of its right operand; it is only defined on the
//! augmentation ideal, so unit operands are rejected. `↗` (left-leaf
//! grafting) hangs its left operand below the leftmost leaf of its right
//! operand and is defined everywhere, with `1` as a two-sided unit.

use crate::combinat::{b_plus, Forest, Tree};
use crate::error::{Error, Result};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Exact coefficient ring: arbitrary-precision signed integers.
pub type Scalar = num_bigint::BigInt;

/// A finite integer combination of planar forests. Zero coefficients are
/// never stored; iteration is in canonical forest order.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Element {
    terms: BTreeMap<Forest, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    /// The unit forest with coefficient 1.
    pub fn one() -> Self {
        Element::from_forest(Forest::unit())
    }

    pub fn from_forest(f: Forest) -> Self {
        Element::term(f, 1)
    }

    pub fn from_tree(t: Tree) -> Self {
        Element::from_forest(Forest::single(t))
    }

    pub fn term(f: Forest, coeff: impl Into<Scalar>) -> Self {
        let mut e = Element::zero();
        e.add_term(f, coeff.into());
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Forest, &Scalar)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Forest> {
        self.terms.keys()
    }

    pub fn coeff(&self, f: &Forest) -> Scalar {
        self.terms.get(f).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Accumulate one term in place, dropping it if the total vanishes.
    pub fn add_term(&mut self, f: Forest, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(f) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (f, c) in &other.terms {
            out.add_term(f.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        Element {
            terms: self.terms.iter().map(|(f, c)| (f.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self.terms.iter().map(|(f, k)| (f.clone(), k * c)).collect(),
        }
    }

    /// Coefficient of the unit forest (the counit ε).
    pub fn counit(&self) -> Scalar {
        self.coeff(&Forest::unit())
    }

    /// True when some term has a unit-forest component, i.e. the element is
    /// not in the augmentation ideal.
    pub fn has_unit_term(&self) -> bool {
        !self.counit().is_zero()
    }

    /// Concatenation product, the bilinear extension of forest
    /// concatenation. Unit element: the unit forest.
    pub fn mul(&self, other: &Element) -> Element {
        let mut out = Element::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.concat(b), ca * cb);
            }
        }
        out
    }

    /// Root grafting `↘`, defined on the augmentation ideal only.
    pub fn graft_root(&self, other: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(graft_root_forests(a, b)?, ca * cb);
            }
        }
        Ok(out)
    }

    /// Left-leaf grafting `↗`, defined on all of the algebra; `1` is a
    /// two-sided unit.
    pub fn graft_leaf(&self, other: &Element) -> Element {
        let mut out = Element::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(graft_leaf_forests(a, b), ca * cb);
            }
        }
        out
    }

    /// `Some(w)` when every term has weight `w`; `None` for zero or mixed
    /// weights.
    pub fn homogeneous_weight(&self) -> Option<usize> {
        let mut it = self.terms.keys();
        let w = it.next()?.weight();
        it.all(|f| f.weight() == w).then_some(w)
    }

    /// Largest weight appearing in the support (0 for the zero element).
    pub fn max_weight(&self) -> usize {
        self.terms.keys().map(Forest::weight).max().unwrap_or(0)
    }

    /// The part of the element of homogeneous weight `w`.
    pub fn weight_slice(&self, w: usize) -> Element {
        Element {
            terms: self
                .terms
                .iter()
                .filter(|(f, _)| f.weight() == w)
                .map(|(f, c)| (f.clone(), c.clone()))
                .collect(),
        }
    }

    /// Linear extension of `B⁺`: every basis forest is rooted under a new
    /// common vertex.
    pub fn apply_b_plus(&self) -> Element {
        Element {
            terms: self
                .terms
                .iter()
                .map(|(f, c)| (Forest::single(b_plus(f)), c.clone()))
                .collect(),
        }
    }

    /// Linear extension of `γ`: terms whose first tree is not the single
    /// vertex are sent to zero.
    pub fn apply_gamma(&self) -> Element {
        let mut out = Element::zero();
        for (f, c) in &self.terms {
            if let Some(rest) = crate::combinat::gamma(f) {
                out.add_term(rest, c.clone());
            }
        }
        out
    }
}

/// Root grafting on basis forests: `F ↘ (B⁺(G₁) t₂…t_n) = B⁺(F G₁) t₂…t_n`.
/// Both operands must be non-unit.
pub fn graft_root_forests(a: &Forest, b: &Forest) -> Result<Forest> {
    if a.is_unit() || b.is_unit() {
        return Err(Error::UnitOperand { op: "root grafting" });
    }
    let (first, rest) = b.trees().split_first().expect("non-unit");
    let mut children = a.trees().to_vec();
    children.extend(first.children().iter().cloned());
    let mut trees = vec![Tree::new(children)];
    trees.extend(rest.iter().cloned());
    Ok(Forest::new(trees))
}

/// Left-leaf grafting on basis forests: `a` is hung below the leftmost leaf
/// of `b`; total, with the unit forest absorbing on either side.
pub fn graft_leaf_forests(a: &Forest, b: &Forest) -> Forest {
    if b.is_unit() {
        return a.clone();
    }
    let (first, rest) = b.trees().split_first().expect("non-unit");
    let grafted = Tree::new(graft_leaf_forests(a, &first.child_forest()).into_trees());
    let mut trees = vec![grafted];
    trees.extend(rest.iter().cloned());
    Forest::new(trees)
}

/// The unique factorization `F = (•F₁) ↗ … ↗ (•F_n)` of a non-unit forest;
/// returns `[F₁, …, F_n]`.
pub fn left_factorization(f: &Forest) -> Result<Vec<Forest>> {
    if f.is_unit() {
        return Err(Error::UnitOperand { op: "left factorization" });
    }
    let (first, rest) = f.trees().split_first().expect("non-unit");
    let tail = Forest::new(rest.to_vec());
    if first.is_leaf() {
        return Ok(vec![tail]);
    }
    let mut factors = left_factorization(&first.child_forest())?;
    factors.push(tail);
    Ok(factors)
}

fn write_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I, label: impl Fn(usize) -> String) -> fmt::Result
where
    I: Iterator<Item = &'a Scalar>,
{
    for (i, c) in terms.enumerate() {
        if i == 0 {
            write!(f, "{}*{}", c, label(i))?;
        } else if c.is_negative() {
            write!(f, " - {}*{}", -c, label(i))?;
        } else {
            write!(f, " + {}*{}", c, label(i))?;
        }
    }
    Ok(())
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let labels: Vec<String> = self.terms.keys().map(Forest::label).collect();
        write_terms(f, self.terms.values(), |i| labels[i].clone())
    }
}

/// A finite integer combination of k-tuples of forests (k ≥ 2), the value
/// space of the coproducts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor {
    rank: usize,
    terms: BTreeMap<Vec<Forest>, Scalar>,
}

impl Tensor {
    pub fn zero(rank: usize) -> Self {
        assert!(rank >= 2, "tensors have rank at least 2");
        Tensor { rank, terms: BTreeMap::new() }
    }

    pub fn term(factors: Vec<Forest>, coeff: impl Into<Scalar>) -> Self {
        let mut t = Tensor::zero(factors.len());
        t.add_term(factors, coeff.into());
        t
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Forest>, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, factors: &[Forest]) -> Scalar {
        self.terms.get(factors).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, factors: Vec<Forest>, coeff: Scalar) {
        assert_eq!(factors.len(), self.rank, "tensor rank mismatch");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(factors) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.rank, other.rank, "tensor rank mismatch");
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> Tensor {
        if c.is_zero() {
            return Tensor::zero(self.rank);
        }
        Tensor {
            rank: self.rank,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Replace factor `idx` of every term through a linear map on basis
    /// forests, expanding the resulting combinations.
    pub fn map_factor(&self, idx: usize, map: impl Fn(&Forest) -> Element) -> Tensor {
        assert!(idx < self.rank);
        let mut out = Tensor::zero(self.rank);
        for (factors, c) in &self.terms {
            for (g, cg) in map(&factors[idx]).terms() {
                let mut fs = factors.clone();
                fs[idx] = g.clone();
                out.add_term(fs, c * cg);
            }
        }
        out
    }

    /// Contract the tensor back into the algebra by folding `op` over the
    /// factors of each term, left to right.
    pub fn fold_product(&self, op: impl Fn(&Forest, &Forest) -> Forest) -> Element {
        let mut out = Element::zero();
        for (factors, c) in &self.terms {
            let mut acc = factors[0].clone();
            for g in &factors[1..] {
                acc = op(&acc, g);
            }
            out.add_term(acc, c.clone());
        }
        out
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let labels: Vec<String> = self
            .terms
            .keys()
            .map(|fs| fs.iter().map(Forest::label).collect::<Vec<_>>().join("⊗"))
            .collect();
        write_terms(f, self.terms.values(), |i| labels[i].clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::parse_forest;
    use proptest::prelude::*;

    fn f(s: &str) -> Forest {
        parse_forest(s).unwrap()
    }

    fn e(s: &str) -> Element {
        Element::from_forest(f(s))
    }

    #[test]
    fn add_scale_counit() {
        assert_eq!(Element::one().counit(), Scalar::from(1));
        assert_eq!(e("[]").counit(), Scalar::from(0));
        let x = e("[[]]");
        assert!(x.add(&x.scale(&Scalar::from(-1))).is_zero());
        assert_eq!(x.add(&x).coeff(&f("[[]]")), Scalar::from(2));
    }

    #[test]
    fn concatenation_product() {
        assert_eq!(e("[]").mul(&e("[[]]")), e("[][[]]"));
        assert_eq!(Element::one().mul(&e("[[]][]")), e("[[]][]"));
        assert_eq!(e("[[]][]").mul(&e("[]")), e("[[]][][]"));
        // bilinearity over a two-term element
        let x = e("[]").add(&e("[[]]"));
        assert_eq!(x.mul(&e("[]")), e("[][]").add(&e("[[]][]")));
    }

    #[test]
    fn graft_root_table_rows() {
        // rows of the root-grafting example table
        assert_eq!(graft_root_forests(&f("[[]]"), &f("[][][]")).unwrap(), f("[[[]]][][]"));
        assert_eq!(graft_root_forests(&f("[][]"), &f("[][][]")).unwrap(), f("[[][]][][]"));
        assert_eq!(graft_root_forests(&f("[[][]]"), &f("[][]")).unwrap(), f("[[[][]]][]"));
        // F ↘ • = B⁺(F)
        assert_eq!(graft_root_forests(&f("[][]"), &f("[]")).unwrap(), f("[[][]]"));
        assert!(e("[]").graft_root(&Element::one()).is_err());
        assert!(Element::one().graft_root(&e("[]")).is_err());
    }

    #[test]
    fn graft_leaf_table_rows() {
        assert_eq!(graft_leaf_forests(&f("[][][]"), &f("[][]")), f("[[][][]][]"));
        assert_eq!(graft_leaf_forests(&f("[[[]]]"), &f("[[]]")), f("[[[[[]]]]]"));
        assert_eq!(graft_leaf_forests(&f("[[]][]"), &f("[[]]")), f("[[[[]][]]]"));
        // unit absorbs on both sides
        assert_eq!(e("[[]][]").graft_leaf(&Element::one()), e("[[]][]"));
        assert_eq!(Element::one().graft_leaf(&e("[[]][]")), e("[[]][]"));
    }

    #[test]
    fn left_factorization_examples() {
        assert_eq!(left_factorization(&f("[]")).unwrap(), vec![Forest::unit()]);
        assert_eq!(
            left_factorization(&f("[[]]")).unwrap(),
            vec![Forest::unit(), Forest::unit()]
        );
        // B⁺(c₃•) l₂ • factors as (••) ↗ (••) ↗ (• l₂ •)
        assert_eq!(
            left_factorization(&f("[[[][]][]][[]][]")).unwrap(),
            vec![f("[]"), f("[]"), f("[[]][]")]
        );
        assert!(left_factorization(&Forest::unit()).is_err());
    }

    #[test]
    fn left_factorization_recombines() {
        for n in 1..=6 {
            for forest in crate::combinat::forests(n) {
                let factors = left_factorization(&forest).unwrap();
                let mut acc = Element::one();
                for fi in &factors {
                    let piece = Element::from_forest(Forest::single(Tree::leaf()).concat(fi));
                    acc = acc.graft_leaf(&piece);
                }
                assert_eq!(acc, Element::from_forest(forest.clone()), "recombining {forest}");
            }
        }
    }

    #[test]
    fn display_formats() {
        assert_eq!(Element::zero().to_string(), "0");
        assert_eq!(Element::one().to_string(), "1*1");
        let p2 = e("[[]]").neg().add(&e("[][]"));
        assert_eq!(p2.to_string(), "1*[][] - 1*[[]]");
        let mixed = Element::one().sub(&e("[]"));
        assert_eq!(mixed.to_string(), "1*1 - 1*[]");
        let t = Tensor::term(vec![f("[]"), Forest::unit()], 1)
            .add(&Tensor::term(vec![Forest::unit(), f("[]")], 1));
        assert_eq!(t.to_string(), "1*1⊗[] + 1*[]⊗1");
    }

    #[test]
    fn tensor_accumulates_and_cancels() {
        let mut t = Tensor::zero(2);
        t.add_term(vec![f("[]"), f("[]")], Scalar::from(2));
        t.add_term(vec![f("[]"), f("[]")], Scalar::from(-2));
        assert!(t.is_zero());
    }

    fn arb_tree() -> impl Strategy<Value = Tree> {
        Just(Tree::leaf()).prop_recursive(3, 8, 3, |inner| {
            prop::collection::vec(inner, 0..3).prop_map(Tree::new)
        })
    }

    fn arb_nonunit_forest() -> impl Strategy<Value = Forest> {
        prop::collection::vec(arb_tree(), 1..3).prop_map(Forest::new)
    }

    proptest! {
        #[test]
        fn grafts_add_weights(a in arb_nonunit_forest(), b in arb_nonunit_forest()) {
            let wa = a.weight();
            let wb = b.weight();
            prop_assert_eq!(a.concat(&b).weight(), wa + wb);
            prop_assert_eq!(graft_root_forests(&a, &b).unwrap().weight(), wa + wb);
            prop_assert_eq!(graft_leaf_forests(&a, &b).weight(), wa + wb);
        }

        #[test]
        fn factorization_shape(a in arb_nonunit_forest()) {
            let factors = left_factorization(&a).unwrap();
            let total: usize = factors.iter().map(Forest::weight).sum();
            prop_assert_eq!(total + factors.len(), a.weight());
        }
    }
}
