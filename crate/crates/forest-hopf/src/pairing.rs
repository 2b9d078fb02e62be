//! The Hopf pairing on the forest algebra, its Gram matrices, the inverse
//! of γ on primitives, and the inductively computed dual basis.
//!
//! The pairing is evaluated by a terminating recursion on its three
//! defining axioms: the unit pairs by the counit, peeling the first tree of
//! the left argument trades it for the coproduct of the right argument, and
//! `B⁺` on the left trades for γ on the right. The dual basis is built
//! constructively from the grafting products and never consults that
//! recursion, so the duality identity `⟨f_F, G⟩ = δ_{F,G}` is a genuine
//! two-route check.

use crate::algebra::{Element, Scalar};
use crate::coalgebra::reduced_cut_pairs;
use crate::combinat::{forests, gamma, trees, Forest, Tree};
use crate::linalg;
use crate::operad::{act, Flavor};
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::{LazyLock, Mutex};

static PAIR_MEMO: LazyLock<Mutex<HashMap<(Forest, Forest), Scalar>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// The pairing of two basis forests, memoized on ordered pairs.
pub fn pair_forests(x: &Forest, y: &Forest) -> Scalar {
    if x.is_unit() {
        // ⟨1, y⟩ = ε(y)
        return if y.is_unit() { Scalar::one() } else { Scalar::zero() };
    }
    let key = (x.clone(), y.clone());
    if let Some(hit) = PAIR_MEMO.lock().unwrap().get(&key) {
        return hit.clone();
    }
    let value = if let Some(tree) = x.as_single_tree() {
        // ⟨B⁺(x'), y⟩ = ⟨x', γ(y)⟩
        match gamma(y) {
            None => Scalar::zero(),
            Some(rest) => pair_forests(&tree.child_forest(), &rest),
        }
    } else {
        // ⟨t·x', y⟩ = Σ ⟨x', y⁽¹⁾⟩ ⟨t, y⁽²⁾⟩ over the full coproduct of y
        let (first, rest) = x.trees().split_first().expect("non-unit");
        let t = Forest::single(first.clone());
        let x_rest = Forest::new(rest.to_vec());
        if y.is_unit() {
            // Δ(1) = 1 ⊗ 1
            pair_forests(&x_rest, y) * pair_forests(&t, y)
        } else {
            let mut acc = pair_forests(&x_rest, y) * pair_forests(&t, &Forest::unit())
                + pair_forests(&x_rest, &Forest::unit()) * pair_forests(&t, y);
            for (p, r) in reduced_cut_pairs(y).iter() {
                acc += pair_forests(&x_rest, p) * pair_forests(&t, r);
            }
            acc
        }
    };
    PAIR_MEMO.lock().unwrap().insert(key, value.clone());
    value
}

/// Bilinear extension of the pairing to elements.
pub fn pair(x: &Element, y: &Element) -> Scalar {
    let mut acc = Scalar::zero();
    for (fx, cx) in x.terms() {
        for (fy, cy) in y.terms() {
            let p = pair_forests(fx, fy);
            if !p.is_zero() {
                acc += cx * cy * p;
            }
        }
    }
    acc
}

/// The pairing restricted to one weight slice, evaluated on the canonical
/// basis.
#[derive(Clone, Debug)]
pub struct GramSlice {
    pub weight: usize,
    pub basis: Vec<Forest>,
    pub matrix: Vec<Vec<Scalar>>,
}

impl GramSlice {
    pub fn is_symmetric(&self) -> bool {
        let n = self.basis.len();
        (0..n).all(|i| (0..i).all(|j| self.matrix[i][j] == self.matrix[j][i]))
    }

    /// Determinant by fraction-free elimination.
    pub fn det(&self) -> Scalar {
        linalg::det(self.matrix.clone())
    }

    /// CSV with bracket-string row and column headers.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str("forest");
        for f in &self.basis {
            out.push(',');
            out.push_str(&f.bracket_string());
        }
        out.push('\n');
        for (i, f) in self.basis.iter().enumerate() {
            out.push_str(&f.bracket_string());
            for v in &self.matrix[i] {
                out.push(',');
                out.push_str(&v.to_string());
            }
            out.push('\n');
        }
        out
    }
}

/// The full Gram matrix of the weight-`n` slice in canonical order.
pub fn gram(n: usize) -> GramSlice {
    let basis = forests(n);
    let matrix = basis
        .iter()
        .map(|x| basis.iter().map(|y| pair_forests(x, y)).collect())
        .collect();
    GramSlice { weight: n, basis, matrix }
}

/// The alternating sequence `q_n` used to invert γ on primitives:
/// `q₁ = •` and `q_{n+1} = q_n • − B⁺(q_n)`.
pub fn q_sequence(n: usize) -> Element {
    assert!(n >= 1, "q is indexed from 1");
    let dot = Element::from_tree(Tree::leaf());
    let mut q = dot.clone();
    for _ in 1..n {
        q = q.mul(&dot).sub(&q.apply_b_plus());
    }
    q
}

/// Preimage under γ landing in the primitives of the cut coproduct: on a
/// basis forest `t₁…t_k` this is `q_{k+1}` acting through the root-graft
/// operad on `(•, t₁, …, t_k)`; extended linearly.
pub fn gamma_inv_prim(x: &Element) -> Element {
    let mut out = Element::zero();
    for (f, c) in x.terms() {
        let k = f.len();
        let q = q_sequence(k + 1);
        let mut args = Vec::with_capacity(k + 1);
        args.push(Element::from_tree(Tree::leaf()));
        args.extend(f.trees().iter().map(|t| Element::from_tree(t.clone())));
        let value = act(Flavor::Root, &q, &args).expect("tree arguments are unit-free");
        out = out.add(&value.scale(c));
    }
    out
}

static DUAL_MEMO: LazyLock<Mutex<HashMap<Forest, Element>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// The dual basis element `f_F` for the pairing, computed inductively:
/// `f_1 = 1`, a multi-tree forest is the reversed leaf-graft product of its
/// trees' elements, and `f_{B⁺(F)}` is the γ-preimage of `f_F` in the
/// primitives. Memoized.
pub fn dual_basis(f: &Forest) -> Element {
    if f.is_unit() {
        return Element::one();
    }
    if let Some(hit) = DUAL_MEMO.lock().unwrap().get(f) {
        return hit.clone();
    }
    let value = if let Some(tree) = f.as_single_tree() {
        gamma_inv_prim(&dual_basis(&tree.child_forest()))
    } else {
        // f_{t₁…t_k} = f_{t_k} ↗ … ↗ f_{t₁}
        let mut acc: Option<Element> = None;
        for t in f.trees().iter().rev() {
            let ft = dual_basis(&Forest::single(t.clone()));
            acc = Some(match acc {
                None => ft,
                Some(prev) => prev.graft_leaf(&ft),
            });
        }
        acc.expect("non-unit forest")
    };
    DUAL_MEMO
        .lock()
        .unwrap()
        .entry(f.clone())
        .or_insert(value)
        .clone()
}

/// The dual-basis elements of all trees of weight `n`: a basis of the
/// weight-`n` primitives of the cut coproduct.
pub fn primitive_basis(n: usize) -> Vec<Element> {
    trees(n)
        .iter()
        .map(|t| dual_basis(&Forest::single(t.clone())))
        .collect()
}
