//! Exhaustive property suites over weight-bounded slices of the basis.
//!
//! Each check verifies one identity or structural statement on every
//! instance up to a weight bound and reports the first counterexample if
//! any. The suites are what the `check` subcommand and the acceptance
//! tests run. Weight bounds follow the caller except where an operation
//! carries a hard precondition (poset slices up to weight 7, the rotation
//! isomorphism up to 5).

use crate::algebra::{left_factorization, Element, Scalar, Tensor};
use crate::coalgebra::{
    antipode, deconcat_antipode, delta, delta_ne_red, delta_red, eulerian, graft_antipode,
    ladder_antipode, left_admissible_cuts, tensor_apply_red, CoproductKind,
};
use crate::combinat::{
    b_minus, b_plus, binary_trees, catalan, forests, forests_by_weight, kappa, kappa_inv, ladder,
    ladder_decomposition, parse_forest, trees, BinaryTree, Forest, Tree,
};
use crate::operad::{
    act, check_presentation, check_primitives_corolla, check_primitives_graft_free,
    check_primitives_root, compose, theta, Flavor, OperadElement,
};
use crate::pairing::{dual_basis, gram, pair, pair_forests, q_sequence};
use crate::report::CheckReport;
use crate::tamari::{
    expand_primitive_in_dual, poset_cached, reconstruct_dual_by_mobius,
    rotation_isomorphism_check, transformations,
};
use num_traits::{One, Zero};
use rayon::prelude::*;

fn elem(f: &Forest) -> Element {
    Element::from_forest(f.clone())
}

fn first_fail(mut fails: Vec<String>) -> Option<String> {
    if fails.is_empty() {
        None
    } else {
        Some(fails.remove(0))
    }
}

/// All basis pairs (x, y) with weight(x) + weight(y) <= w, both unit-free.
fn basis_pairs(w: usize) -> Vec<(Forest, Forest)> {
    let slices = forests_by_weight(w.saturating_sub(1));
    let mut out = Vec::new();
    for a in 1..w {
        for b in 1..=w - a {
            for x in &slices[a] {
                for y in &slices[b] {
                    out.push((x.clone(), y.clone()));
                }
            }
        }
    }
    out
}

/// All basis triples with total weight <= w, unit-free.
fn basis_triples(w: usize) -> Vec<(Forest, Forest, Forest)> {
    let slices = forests_by_weight(w.saturating_sub(2));
    let mut out = Vec::new();
    for a in 1..=w.saturating_sub(2) {
        for b in 1..=w.saturating_sub(a + 1) {
            for c in 1..=w - a - b {
                for x in &slices[a] {
                    for y in &slices[b] {
                        for z in &slices[c] {
                            out.push((x.clone(), y.clone(), z.clone()));
                        }
                    }
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------- combinat

/// Slice sizes against the Catalan numbers, plus order and uniqueness of
/// the enumerations.
pub fn check_dimensions(max_n: usize) -> CheckReport {
    let mut report = CheckReport::new("dimensions");
    let mut bad = None;
    for n in 1..=max_n {
        let fs = forests(n);
        let ts = trees(n);
        let bs = binary_trees(n + 1);
        if fs.len() as u64 != catalan(n) {
            bad = Some(format!("|forests({n})| = {}", fs.len()));
            break;
        }
        if ts.len() as u64 != catalan(n - 1) || bs.len() as u64 != catalan(n) {
            bad = Some(format!("tree/binary counts at {n}"));
            break;
        }
        if !fs.windows(2).all(|p| p[0] < p[1]) {
            bad = Some(format!("forests({n}) not strictly sorted"));
            break;
        }
    }
    report.push_outcome(
        format!("slice sizes are Catalan numbers for n <= {max_n}"),
        bad,
        "forests, trees and binary trees",
    );
    report
}

/// Bracket-string round trip on every forest up to the bound.
pub fn check_parse_render(w: usize) -> CheckReport {
    let mut report = CheckReport::new("parse-render");
    let mut bad = None;
    'outer: for n in 0..=w {
        for f in forests(n) {
            if parse_forest(&f.bracket_string()) != Ok(f.clone()) {
                bad = Some(format!("round trip failed on {f}"));
                break 'outer;
            }
        }
    }
    report.push_outcome(format!("parse/render round trip, weight <= {w}"), bad, "");
    report
}

/// Inversion pairs: B⁺/B⁻, κ/κ⁻¹, and the ladder decomposition against the
/// root-graft action.
pub fn check_structure_roundtrips(w: usize) -> CheckReport {
    let mut report = CheckReport::new("structure-roundtrips");

    let mut bad = None;
    'a: for n in 0..=w.saturating_sub(1) {
        for f in forests(n) {
            let t = b_plus(&f);
            if b_minus(&Forest::single(t)) != Ok(f.clone()) {
                bad = Some(format!("B⁻B⁺ failed on {f}"));
                break 'a;
            }
        }
    }
    report.push_outcome(format!("B⁻ ∘ B⁺ = id on forests of weight < {w}"), bad, "");

    let mut bad = None;
    'b: for n in 1..=w {
        for t in trees(n) {
            if kappa(&kappa_inv(&t)) != t {
                bad = Some(format!("κ ∘ κ⁻¹ failed on {t}"));
                break 'b;
            }
        }
        for b in binary_trees(n) {
            if kappa_inv(&kappa(&b)) != b {
                bad = Some(format!("κ⁻¹ ∘ κ failed on {b}"));
                break 'b;
            }
        }
    }
    report.push_outcome(format!("κ and κ⁻¹ invert each other up to weight {w}"), bad, "");

    let mut bad = None;
    'c: for n in 1..=w {
        for t in trees(n) {
            let (k, tail) = ladder_decomposition(&t);
            let l = ladder(k).expect("k >= 1");
            let mut args = Vec::with_capacity(k);
            args.push(Element::from_tree(Tree::leaf()));
            args.extend(tail.into_iter().map(Element::from_tree));
            let back = act(Flavor::Root, &Element::from_tree(l), &args).expect("tree arguments");
            if back != Element::from_tree(t.clone()) {
                bad = Some(format!("ladder decomposition of {t} does not recombine"));
                break 'c;
            }
        }
    }
    report.push_outcome(
        format!("ladder decomposition recombines under the root action, weight <= {w}"),
        bad,
        "",
    );
    report
}

/// Antisymmetry, transitivity and totality of the combined vertex order on
/// every forest up to the bound.
pub fn check_vertex_order(w: usize) -> CheckReport {
    use crate::combinat::compare_hl;
    use std::cmp::Ordering;
    let mut report = CheckReport::new("vertex-order");
    let fails: Vec<String> = (1..=w)
        .flat_map(forests)
        .par_bridge()
        .filter_map(|f| {
            let vs = f.vertices();
            for v in &vs {
                for u in &vs {
                    let c = compare_hl(&f, v, u).unwrap();
                    if c != compare_hl(&f, u, v).unwrap().reverse() {
                        return Some(format!("antisymmetry fails in {f}"));
                    }
                    if (v == u) != (c == Ordering::Equal) {
                        return Some(format!("totality fails in {f}"));
                    }
                    for z in &vs {
                        if c == Ordering::Greater
                            && compare_hl(&f, u, z).unwrap() == Ordering::Greater
                            && compare_hl(&f, v, z).unwrap() != Ordering::Greater
                        {
                            return Some(format!("transitivity fails in {f}"));
                        }
                    }
                }
            }
            None
        })
        .collect();
    report.push_outcome(
        format!("combined vertex order is total, weight <= {w}"),
        first_fail(fails),
        "",
    );
    report
}

// ---------------------------------------------------------------- algebra

/// The mixed product relations between concatenation and the two grafts,
/// associativity, units, and weight additivity, on all basis triples.
pub fn check_graft_relations(w: usize) -> CheckReport {
    let mut report = CheckReport::new("graft-relations");
    let triples = basis_triples(w);
    let fails: Vec<String> = triples
        .par_iter()
        .filter_map(|(x, y, z)| {
            let (ex, ey, ez) = (elem(x), elem(y), elem(z));
            // x ↘ (y z) = (x ↘ y) z
            if ex.graft_root(&ey.mul(&ez)).unwrap() != ex.graft_root(&ey).unwrap().mul(&ez) {
                return Some(format!("root graft vs concatenation fails on ({x}, {y}, {z})"));
            }
            // x ↘ (y ↘ z) = (x y) ↘ z
            if ex.graft_root(&ey.graft_root(&ez).unwrap()).unwrap()
                != ex.mul(&ey).graft_root(&ez).unwrap()
            {
                return Some(format!("root graft exchange fails on ({x}, {y}, {z})"));
            }
            // x ↗ (y z) = (x ↗ y) z for y in the ideal
            if ex.graft_leaf(&ey.mul(&ez)) != ex.graft_leaf(&ey).mul(&ez) {
                return Some(format!("leaf graft vs concatenation fails on ({x}, {y}, {z})"));
            }
            // associativity of m and of ↗
            if ex.mul(&ey).mul(&ez) != ex.mul(&ey.mul(&ez)) {
                return Some(format!("concatenation associativity fails on ({x}, {y}, {z})"));
            }
            if ex.graft_leaf(&ey).graft_leaf(&ez) != ex.graft_leaf(&ey.graft_leaf(&ez)) {
                return Some(format!("leaf graft associativity fails on ({x}, {y}, {z})"));
            }
            None
        })
        .collect();
    report.push_outcome(
        format!("product compatibilities on basis triples, total weight <= {w}"),
        first_fail(fails),
        format!("{} triples", triples.len()),
    );

    let mut bad = None;
    'units: for n in 1..=w.min(4) {
        for f in forests(n) {
            let x = elem(&f);
            if Element::one().mul(&x) != x
                || x.mul(&Element::one()) != x
                || Element::one().graft_leaf(&x) != x
                || x.graft_leaf(&Element::one()) != x
            {
                bad = Some(format!("unit law fails on {f}"));
                break 'units;
            }
        }
    }
    report.push_outcome("unit forest is a two-sided unit for m and ↗", bad, "");

    let pairs = basis_pairs(w);
    let mut bad = None;
    for (x, y) in &pairs {
        let wsum = x.weight() + y.weight();
        let ok = x.concat(y).weight() == wsum
            && crate::algebra::graft_root_forests(x, y).unwrap().weight() == wsum
            && crate::algebra::graft_leaf_forests(x, y).weight() == wsum;
        if !ok {
            bad = Some(format!("weight additivity fails on ({x}, {y})"));
            break;
        }
    }
    report.push_outcome("products add weights", bad, format!("{} pairs", pairs.len()));
    report
}

/// Uniqueness and recombination of the factorization into leaf-graft
/// factors of the shape `•F`.
pub fn check_left_factorization(w_recombine: usize, w_unique: usize) -> CheckReport {
    let mut report = CheckReport::new("left-factorization");

    let mut bad = None;
    'rec: for n in 1..=w_recombine {
        for f in forests(n) {
            let factors = left_factorization(&f).unwrap();
            let mut acc: Option<Element> = None;
            for fi in &factors {
                let piece = elem(&Forest::single(Tree::leaf()).concat(fi));
                acc = Some(match acc {
                    None => piece,
                    Some(prev) => prev.graft_leaf(&piece),
                });
            }
            if acc.unwrap() != elem(&f) {
                bad = Some(format!("factorization of {f} does not recombine"));
                break 'rec;
            }
        }
    }
    report.push_outcome(
        format!("factorization recombines, weight <= {w_recombine}"),
        bad,
        "",
    );

    // uniqueness by exhaustion: no other factor sequence of the same shape
    // lands on the same forest
    let slices = forests_by_weight(w_unique.saturating_sub(1));
    let mut bad = None;
    'uni: for n in 1..=w_unique {
        // all sequences (G1..Gk) of forests with sum(weight(Gi) + 1) = n
        let mut sequences: Vec<Vec<Forest>> = Vec::new();
        fn extend(
            remaining: usize,
            prefix: &mut Vec<Forest>,
            slices: &[Vec<Forest>],
            out: &mut Vec<Vec<Forest>>,
        ) {
            if remaining == 0 {
                if !prefix.is_empty() {
                    out.push(prefix.clone());
                }
                return;
            }
            for part in 1..=remaining {
                for g in &slices[part - 1] {
                    prefix.push(g.clone());
                    extend(remaining - part, prefix, slices, out);
                    prefix.pop();
                }
            }
        }
        extend(n, &mut Vec::new(), &slices, &mut sequences);
        let mut hits: std::collections::HashMap<Forest, usize> = std::collections::HashMap::new();
        for seq in &sequences {
            let mut acc: Option<Element> = None;
            for g in seq {
                let piece = elem(&Forest::single(Tree::leaf()).concat(g));
                acc = Some(match acc {
                    None => piece,
                    Some(prev) => prev.graft_leaf(&piece),
                });
            }
            let value = acc.unwrap();
            let (f, c) = value.terms().next().expect("basis product");
            debug_assert!(c.is_one() && value.num_terms() == 1);
            *hits.entry(f.clone()).or_insert(0) += 1;
        }
        for f in forests(n) {
            if hits.get(&f) != Some(&1) {
                bad = Some(format!(
                    "{} factor sequences recombine to {f}",
                    hits.get(&f).copied().unwrap_or(0)
                ));
                break 'uni;
            }
        }
    }
    report.push_outcome(
        format!("factorization is unique by exhaustion, weight <= {w_unique}"),
        bad,
        "",
    );
    report
}

// -------------------------------------------------------------- coalgebra

/// Coassociativity of both reduced coproducts and the mixed law.
pub fn check_coassociativity(w: usize) -> CheckReport {
    let mut report = CheckReport::new("coassociativity");
    let all: Vec<Forest> = (1..=w).flat_map(forests).collect();
    let fails: Vec<String> = all
        .par_iter()
        .filter_map(|f| {
            let x = elem(f);
            for kind in [CoproductKind::Cut, CoproductKind::Deconcat] {
                let d = crate::coalgebra::iterate_red(kind, 1, &x).unwrap();
                let left = tensor_apply_red(kind, &d, 0).unwrap();
                let right = tensor_apply_red(kind, &d, 1).unwrap();
                if left != right {
                    return Some(format!("coassociativity ({kind:?}) fails on {f}"));
                }
            }
            // (Δ̃ ⊗ id) Δ̃↗ = (id ⊗ Δ̃↗) Δ̃
            let dne = delta_ne_red(&x).unwrap();
            let lhs = tensor_apply_red(CoproductKind::Cut, &dne, 0).unwrap();
            let d = delta_red(&x).unwrap();
            let rhs = tensor_apply_red(CoproductKind::Deconcat, &d, 1).unwrap();
            if lhs != rhs {
                return Some(format!("mixed coassociativity fails on {f}"));
            }
            None
        })
        .collect();
    report.push_outcome(
        format!("coassociativity and the mixed law, weight <= {w}"),
        first_fail(fails),
        format!("{} basis forests", all.len()),
    );
    report
}

fn tensor_map_left(t: &Tensor, op: impl Fn(&Forest) -> Forest) -> Tensor {
    t.map_factor(0, |a| Element::from_forest(op(a)))
}

fn tensor_map_right(t: &Tensor, op: impl Fn(&Forest) -> Forest) -> Tensor {
    t.map_factor(1, |b| Element::from_forest(op(b)))
}

/// The five compatibilities between the three products and the two reduced
/// coproducts, on all unit-free basis pairs.
pub fn check_infinitesimal_compat(w: usize) -> CheckReport {
    let mut report = CheckReport::new("infinitesimal-compatibilities");
    let pairs = basis_pairs(w);
    let fails: Vec<String> = pairs
        .par_iter()
        .filter_map(|(x, y)| {
            let (ex, ey) = (elem(x), elem(y));
            let dx = delta_red(&ex).unwrap();
            let dy = delta_red(&ey).unwrap();
            let dnx = delta_ne_red(&ex).unwrap();
            let dny = delta_ne_red(&ey).unwrap();
            let xy_term = Tensor::term(vec![x.clone(), y.clone()], 1);

            // Δ̃(xy) = (x⊗1)Δ̃(y) + Δ̃(x)(1⊗y) + x⊗y
            let lhs = delta_red(&ex.mul(&ey)).unwrap();
            let rhs = tensor_map_left(&dy, |a| x.concat(a))
                .add(&tensor_map_right(&dx, |b| b.concat(y)))
                .add(&xy_term);
            if lhs != rhs {
                return Some(format!("concat/cut compatibility fails on ({x}, {y})"));
            }

            // Δ̃(x↗y) = (x⊗1)↗Δ̃(y) + Δ̃(x)↗(1⊗y) + x⊗y
            let lhs = delta_red(&ex.graft_leaf(&ey)).unwrap();
            let rhs = tensor_map_left(&dy, |a| crate::algebra::graft_leaf_forests(x, a))
                .add(&tensor_map_right(&dx, |b| {
                    crate::algebra::graft_leaf_forests(b, y)
                }))
                .add(&xy_term);
            if lhs != rhs {
                return Some(format!("leaf graft/cut compatibility fails on ({x}, {y})"));
            }

            // Δ̃↗(xy) = (x⊗1)Δ̃↗(y) + Δ̃↗(x)(1⊗y) + x⊗y
            let lhs = delta_ne_red(&ex.mul(&ey)).unwrap();
            let rhs = tensor_map_left(&dny, |a| x.concat(a))
                .add(&tensor_map_right(&dnx, |b| b.concat(y)))
                .add(&xy_term);
            if lhs != rhs {
                return Some(format!("concat/deconcat compatibility fails on ({x}, {y})"));
            }

            // Δ̃↗(x↗y) = (x⊗1)↗Δ̃↗(y)
            let lhs = delta_ne_red(&ex.graft_leaf(&ey)).unwrap();
            let rhs = tensor_map_left(&dny, |a| crate::algebra::graft_leaf_forests(x, a));
            if lhs != rhs {
                return Some(format!("leaf graft/deconcat compatibility fails on ({x}, {y})"));
            }

            // Δ̃↗(x↘y) = (x⊗1)↘Δ̃↗(y)
            let lhs = delta_ne_red(&ex.graft_root(&ey).unwrap()).unwrap();
            let rhs = tensor_map_left(&dny, |a| {
                crate::algebra::graft_root_forests(x, a).unwrap()
            });
            if lhs != rhs {
                return Some(format!("root graft/deconcat compatibility fails on ({x}, {y})"));
            }
            None
        })
        .collect();
    report.push_outcome(
        format!("five product/coproduct compatibilities, total weight <= {w}"),
        first_fail(fails),
        format!("{} pairs", pairs.len()),
    );
    report
}

/// The closed description of the full cut coproduct of a root graft onto a
/// tree.
pub fn check_root_graft_coproduct(w: usize) -> CheckReport {
    let mut report = CheckReport::new("root-graft-coproduct");
    let mut instances = Vec::new();
    for a in 1..w {
        for f in forests(a) {
            for b in 1..=w - a {
                for t in trees(b) {
                    instances.push((f.clone(), t));
                }
            }
        }
    }
    let fails: Vec<String> = instances
        .par_iter()
        .filter_map(|(f, t)| {
            let ef = elem(f);
            let et = Element::from_tree(t.clone());
            let grafted = ef.graft_root(&et).unwrap();
            let lhs = delta(&grafted);
            let mut rhs = Tensor::zero(2);
            for (g, c) in grafted.terms() {
                rhs.add_term(vec![g.clone(), Forest::unit()], c.clone());
                rhs.add_term(vec![Forest::unit(), g.clone()], c.clone());
            }
            rhs = rhs.add(&tensor_map_right(&delta_red(&ef).unwrap(), |b| {
                crate::algebra::graft_root_forests(b, &Forest::single(t.clone())).unwrap()
            }));
            rhs = rhs.add(&tensor_map_left(&delta_red(&et).unwrap(), |a| f.concat(a)));
            rhs.add_term(vec![f.clone(), Forest::single(t.clone())], Scalar::one());
            if lhs != rhs {
                return Some(format!("coproduct of {f} ↘ {t} has the wrong shape"));
            }
            None
        })
        .collect();
    report.push_outcome(
        format!("cut coproduct of root grafts onto trees, total weight <= {w}"),
        first_fail(fails),
        format!("{} instances", instances.len()),
    );
    report
}

/// Every coproduct term of a basis forest has coefficient one and comes
/// from exactly one left-admissible cut (plus the 1⊗F term).
pub fn check_cut_counts(w: usize) -> CheckReport {
    let mut report = CheckReport::new("cut-counts");
    let mut bad = None;
    'outer: for n in 1..=w {
        for f in forests(n) {
            let cuts = left_admissible_cuts(&f).unwrap().len();
            let d = delta(&elem(&f));
            if d.terms().any(|(_, c)| !c.is_one()) {
                bad = Some(format!("coproduct of {f} has a coefficient other than 1"));
                break 'outer;
            }
            if cuts + 1 != d.num_terms() {
                bad = Some(format!(
                    "{f}: {cuts} cuts but {} coproduct terms",
                    d.num_terms()
                ));
                break 'outer;
            }
        }
    }
    report.push_outcome(
        format!("cut count matches coproduct term count, weight <= {w}"),
        bad,
        "",
    );
    report
}

/// Closed-form antipode: trees map to primitives, proper products vanish,
/// ladders map to the alternating ladder sums.
pub fn check_antipode(w: usize) -> CheckReport {
    let mut report = CheckReport::new("antipode");

    let all_trees: Vec<Tree> = (1..=w).flat_map(trees).collect();
    let fails: Vec<String> = all_trees
        .par_iter()
        .filter_map(|t| {
            let s = antipode(&Element::from_tree(t.clone()));
            if !delta_red(&s).unwrap().is_zero() {
                return Some(format!("S({t}) is not primitive"));
            }
            None
        })
        .collect();
    report.push_outcome(
        format!("antipode of a tree is primitive, weight <= {w}"),
        first_fail(fails),
        format!("{} trees", all_trees.len()),
    );

    let mut bad = None;
    'prod: for n in 2..=w {
        for f in forests(n) {
            if f.len() >= 2 && !antipode(&elem(&f)).is_zero() {
                bad = Some(format!("S({f}) is nonzero on a proper product"));
                break 'prod;
            }
        }
    }
    report.push_outcome(
        format!("antipode vanishes on non-tree proper forests, weight <= {w}"),
        bad,
        "",
    );

    let mut bad = None;
    for n in 1..=w {
        let l = Element::from_tree(ladder(n).unwrap());
        if antipode(&l) != ladder_antipode(n).unwrap() {
            bad = Some(format!("S(l_{n}) differs from p_{n}"));
            break;
        }
    }
    report.push_outcome(format!("S(l_n) = p_n for n <= {w}"), bad, "");
    report.push(
        "S fixes the unit",
        antipode(&Element::one()) == Element::one(),
        "",
    );
    report
}

/// Projector identities for the two series antipodes and the eulerian
/// idempotent, weight slice by weight slice.
pub fn check_projectors(w: usize) -> CheckReport {
    let mut report = CheckReport::new("projectors");
    let all: Vec<Forest> = (1..=w).flat_map(forests).collect();

    let fails: Vec<String> = all
        .par_iter()
        .filter_map(|f| {
            let x = elem(f);
            // -S^↗ projects onto Ker Δ̃↗ along M·M
            let p2 = deconcat_antipode(&x).unwrap().neg();
            if !delta_ne_red(&p2).unwrap().is_zero() {
                return Some(format!("-S^↗({f}) is not deconcatenation-primitive"));
            }
            if deconcat_antipode(&p2).unwrap().neg() != p2 {
                return Some(format!("-S^↗ is not idempotent at {f}"));
            }
            if x.sub(&p2).support().any(|g| g.len() < 2) {
                return Some(format!("id + S^↗ at {f} leaves the concatenation square"));
            }
            // -S↗ projects onto Ker Δ̃ along M↗M
            let p1 = graft_antipode(&x).unwrap().neg();
            if !delta_red(&p1).unwrap().is_zero() {
                return Some(format!("-S↗({f}) is not cut-primitive"));
            }
            if graft_antipode(&p1).unwrap().neg() != p1 {
                return Some(format!("-S↗ is not idempotent at {f}"));
            }
            // the leaf-graft square is spanned by forests whose first tree
            // is not the single vertex (factorization length >= 2)
            if x.sub(&p1)
                .support()
                .any(|g| left_factorization(g).unwrap().len() < 2)
            {
                return Some(format!("id + S↗ at {f} leaves the leaf-graft square"));
            }
            // eulerian idempotent
            let eu = eulerian(&x).unwrap();
            if eulerian(&eu).unwrap() != eu {
                return Some(format!("eulerian is not idempotent at {f}"));
            }
            let expected = if f.weight() == 1 { x.clone() } else { Element::zero() };
            if eu != expected {
                return Some(format!("eulerian image wrong at {f}"));
            }
            None
        })
        .collect();
    report.push_outcome(
        format!("projector identities on basis forests, weight <= {w}"),
        first_fail(fails),
        format!("{} basis forests", all.len()),
    );

    let pairs = basis_pairs(w);
    let fails: Vec<String> = pairs
        .par_iter()
        .filter_map(|(x, y)| {
            let (ex, ey) = (elem(x), elem(y));
            if !deconcat_antipode(&ex.mul(&ey)).unwrap().is_zero() {
                return Some(format!("S^↗ does not kill {x}·{y}"));
            }
            if !graft_antipode(&ex.graft_leaf(&ey)).unwrap().is_zero() {
                return Some(format!("S↗ does not kill {x}↗{y}"));
            }
            None
        })
        .collect();
    report.push_outcome(
        format!("series antipodes kill their product images, total weight <= {w}"),
        first_fail(fails),
        format!("{} pairs", pairs.len()),
    );
    report
}

// ---------------------------------------------------------------- pairing

/// Gram slices: symmetry, nonzero determinant, and the pinned low-weight
/// values.
pub fn check_gram(w: usize) -> CheckReport {
    let mut report = CheckReport::new("gram");
    let mut bad = None;
    for n in 1..=w {
        let g = gram(n);
        if !g.is_symmetric() {
            bad = Some(format!("Gram({n}) is not symmetric"));
            break;
        }
        if g.det().is_zero() {
            bad = Some(format!("Gram({n}) is singular"));
            break;
        }
    }
    report.push_outcome(
        format!("Gram slices symmetric and non-degenerate, n <= {w}"),
        bad,
        "fraction-free determinants",
    );
    let g1 = gram(1);
    report.push(
        "Gram(1) = [1]",
        g1.matrix == vec![vec![Scalar::one()]],
        "",
    );
    let g2 = gram(2);
    let expected = vec![
        vec![Scalar::one(), Scalar::one()],
        vec![Scalar::one(), Scalar::zero()],
    ];
    report.push(
        "Gram(2) = [[1,1],[1,0]] in canonical order",
        g2.matrix == expected && g2.basis == forests(2),
        "",
    );
    report
}

/// The dual basis against the pairing: the full Kronecker identity per
/// weight slice.
pub fn check_duality(w: usize) -> CheckReport {
    let mut report = CheckReport::new("duality");
    let mut bad = None;
    let mut total_pairs = 0usize;
    for n in 1..=w {
        let basis = forests(n);
        let g = gram(n);
        let rows: Vec<Vec<Scalar>> = basis
            .par_iter()
            .map(|f| {
                let fe = dual_basis(f);
                basis.iter().map(|b| fe.coeff(b)).collect()
            })
            .collect();
        // (dual coefficients) · Gram = identity
        let m = basis.len();
        total_pairs += m * m;
        'slice: for i in 0..m {
            for j in 0..m {
                let mut acc = Scalar::zero();
                for k in 0..m {
                    if !rows[i][k].is_zero() {
                        acc += &rows[i][k] * &g.matrix[k][j];
                    }
                }
                let expected = if i == j { Scalar::one() } else { Scalar::zero() };
                if acc != expected {
                    bad = Some(format!("⟨f_{}, {}⟩ = {}", basis[i], basis[j], acc));
                    break 'slice;
                }
            }
        }
        if bad.is_some() {
            break;
        }
        // dual elements stay in their weight slice
        for f in &basis {
            if dual_basis(f).homogeneous_weight() != Some(n) {
                bad = Some(format!("f_{f} is not homogeneous of weight {n}"));
                break;
            }
        }
        if bad.is_some() {
            break;
        }
    }
    report.push_outcome(
        format!("⟨f_F, G⟩ = δ on all same-weight pairs, weight <= {w}"),
        bad,
        format!("{total_pairs} pairs"),
    );
    report
}

/// Homogeneous elements of different weights pair to zero.
pub fn check_pairing_grading(w: usize) -> CheckReport {
    let mut report = CheckReport::new("pairing-grading");
    let mut bad = None;
    'outer: for (x, y) in basis_pairs(w) {
        if x.weight() != y.weight() && !pair_forests(&x, &y).is_zero() {
            bad = Some(format!("⟨{x}, {y}⟩ is nonzero across weights"));
            break 'outer;
        }
        if pair_forests(&x, &y) != pair_forests(&y, &x) {
            bad = Some(format!("pairing asymmetric on ({x}, {y})"));
            break 'outer;
        }
    }
    report.push_outcome(
        format!("grading and symmetry of the pairing, total weight <= {w}"),
        bad,
        "",
    );
    report
}

/// Self-adjointness of the antipode for the pairing.
pub fn check_antipode_adjoint(w: usize) -> CheckReport {
    let mut report = CheckReport::new("antipode-adjoint");
    let mut instances = Vec::new();
    for a in 1..=w {
        for b in 1..=w {
            if a + b > 2 * w {
                continue;
            }
            for x in forests(a) {
                for y in forests(b) {
                    if a == b || a + b <= w {
                        instances.push((x.clone(), y.clone()));
                    }
                }
            }
        }
    }
    let fails: Vec<String> = instances
        .par_iter()
        .filter_map(|(x, y)| {
            let sx = antipode(&elem(x));
            let sy = antipode(&elem(y));
            if pair(&sx, &elem(y)) != pair(&elem(x), &sy) {
                return Some(format!("⟨S({x}), {y}⟩ ≠ ⟨{x}, S({y})⟩"));
            }
            None
        })
        .collect();
    report.push_outcome(
        format!("antipode self-adjointness, weight <= {w}"),
        first_fail(fails),
        format!("{} pairs", instances.len()),
    );
    report
}

/// The deconcatenation coproduct is adjoint to the opposite leaf graft.
pub fn check_deconcat_adjunction(w: usize) -> CheckReport {
    let mut report = CheckReport::new("deconcat-adjunction");
    let mut instances = Vec::new();
    for (y, z) in basis_pairs(w) {
        for a in 1..=w {
            for x in forests(a) {
                instances.push((x, y.clone(), z.clone()));
            }
        }
    }
    let fails: Vec<String> = instances
        .par_iter()
        .filter_map(|(x, y, z)| {
            // ⟨Δ↗(x), y ⊗ z⟩ with the full coproduct
            let mut lhs = Scalar::zero();
            let ts = x.trees();
            for k in 0..=ts.len() {
                let x1 = Forest::new(ts[..k].to_vec());
                let x2 = Forest::new(ts[k..].to_vec());
                let a = pair_forests(&x1, y);
                if !a.is_zero() {
                    lhs += a * pair_forests(&x2, z);
                }
            }
            let rhs = pair_forests(x, &crate::algebra::graft_leaf_forests(z, y));
            if lhs != rhs {
                return Some(format!("adjunction fails on ({x}; {y} ⊗ {z})"));
            }
            None
        })
        .collect();
    report.push_outcome(
        format!("⟨Δ↗(x), y⊗z⟩ = ⟨x, z↗y⟩, arguments of weight <= {w}"),
        first_fail(fails),
        format!("{} instances", instances.len()),
    );
    report
}

/// γ-preimages land in the primitives and invert γ.
pub fn check_gamma_inverse(w: usize) -> CheckReport {
    let mut report = CheckReport::new("gamma-inverse");
    let all: Vec<Forest> = (0..w).flat_map(forests).collect();
    let fails: Vec<String> = all
        .par_iter()
        .filter_map(|f| {
            let x = elem(f);
            let y = crate::pairing::gamma_inv_prim(&x);
            if !delta_red(&y).unwrap().is_zero() {
                return Some(format!("γ-preimage of {} is not primitive", f.label()));
            }
            if y.apply_gamma() != x {
                return Some(format!("γ-preimage of {} does not invert γ", f.label()));
            }
            None
        })
        .collect();
    report.push_outcome(
        format!("γ-preimages are primitive and section γ, weight < {w}"),
        first_fail(fails),
        format!("{} forests", all.len()),
    );
    report
}

/// The dual basis element of any block split is the reversed leaf-graft
/// product of the blocks' elements.
pub fn check_dual_product_splits(w: usize) -> CheckReport {
    let mut report = CheckReport::new("dual-product-splits");
    let mut bad = None;
    'outer: for n in 1..=w {
        for f in forests(n) {
            let ts = f.trees();
            let m = ts.len();
            // consecutive nonempty blocks via gap subsets
            for mask in 0u32..(1 << m.saturating_sub(1)) {
                let mut blocks: Vec<Forest> = Vec::new();
                let mut start = 0usize;
                for gap in 0..m.saturating_sub(1) {
                    if mask & (1 << gap) != 0 {
                        blocks.push(Forest::new(ts[start..=gap].to_vec()));
                        start = gap + 1;
                    }
                }
                blocks.push(Forest::new(ts[start..].to_vec()));
                let mut acc: Option<Element> = None;
                for block in blocks.iter().rev() {
                    let fb = dual_basis(block);
                    acc = Some(match acc {
                        None => fb,
                        Some(prev) => prev.graft_leaf(&fb),
                    });
                }
                if acc.unwrap() != dual_basis(&f) {
                    bad = Some(format!("split product fails on {f} with {} blocks", blocks.len()));
                    break 'outer;
                }
            }
        }
    }
    report.push_outcome(
        format!("dual basis of block splits is the reversed graft product, weight <= {w}"),
        bad,
        "",
    );
    report
}

// ----------------------------------------------------------------- operad

/// Operad unit laws, the nested associativity axiom on small instances, and
/// multilinearity of the action.
pub fn check_operad_axioms(w: usize) -> CheckReport {
    let mut report = CheckReport::new("operad-axioms");

    let mut bad = None;
    'units: for flavor in [Flavor::Root, Flavor::Leaf] {
        let ident = OperadElement::identity(flavor);
        for n in 1..=w.min(4) {
            for f in forests(n) {
                let p = OperadElement::from_forest(flavor, f.clone()).unwrap();
                if compose(&ident, &[p.clone()]).unwrap().value() != p.value() {
                    bad = Some(format!("left unit law fails on {f}"));
                    break 'units;
                }
                let idents = vec![ident.clone(); n];
                if compose(&p, &idents).unwrap().value() != p.value() {
                    bad = Some(format!("right unit law fails on {f}"));
                    break 'units;
                }
            }
        }
    }
    report.push_outcome("operad unit laws", bad, "both flavors");

    // nested associativity on all small shapes: weights of the outer
    // operation and of every inner operation at most 2
    let mut bad = None;
    'assoc: for flavor in [Flavor::Root, Flavor::Leaf] {
        let small: Vec<Forest> = (1..=2).flat_map(forests).collect();
        for p in &small {
            let n = p.weight();
            let mut mids = vec![small.clone(); n];
            let mid_choices = cartesian(&mut mids);
            for mid in mid_choices {
                let total_mid: usize = mid.iter().map(Forest::weight).sum();
                if p.weight() + total_mid > w {
                    continue;
                }
                let mut inners = vec![small.clone(); total_mid];
                for inner in cartesian(&mut inners) {
                    let total: usize = inner.iter().map(Forest::weight).sum();
                    if total + total_mid + p.weight() > w + 2 {
                        continue;
                    }
                    let pe = OperadElement::from_forest(flavor, p.clone()).unwrap();
                    let mides: Vec<OperadElement> = mid
                        .iter()
                        .map(|f| OperadElement::from_forest(flavor, f.clone()).unwrap())
                        .collect();
                    let inneres: Vec<OperadElement> = inner
                        .iter()
                        .map(|f| OperadElement::from_forest(flavor, f.clone()).unwrap())
                        .collect();
                    let lhs = compose(&compose(&pe, &mides).unwrap(), &inneres).unwrap();
                    let mut nested = Vec::new();
                    let mut at = 0usize;
                    for m in &mides {
                        let take = m.arity();
                        nested.push(compose(m, &inneres[at..at + take]).unwrap());
                        at += take;
                    }
                    let rhs = compose(&pe, &nested).unwrap();
                    if lhs.value() != rhs.value() {
                        bad = Some(format!("associativity fails at outer {p}"));
                        break 'assoc;
                    }
                }
            }
        }
    }
    report.push_outcome(
        format!("nested composition associativity on small shapes, bound {w}"),
        bad,
        "",
    );

    // multilinearity of the action in the operation and in one argument
    let x = Element::from_forest(parse_forest("[]").unwrap());
    let y = Element::from_forest(parse_forest("[[]]").unwrap());
    let p1 = Element::from_forest(parse_forest("[][]").unwrap());
    let p2 = Element::from_forest(parse_forest("[[]]").unwrap());
    let psum = p1.add(&p2.scale(&Scalar::from(3)));
    let args = [x.clone(), y.clone()];
    let lin_op = act(Flavor::Leaf, &psum, &args).unwrap()
        == act(Flavor::Leaf, &p1, &args)
            .unwrap()
            .add(&act(Flavor::Leaf, &p2, &args).unwrap().scale(&Scalar::from(3)));
    let arg_sum = [x.add(&y.scale(&Scalar::from(-2))), y.clone()];
    let lin_arg = act(Flavor::Leaf, &p1, &arg_sum).unwrap()
        == act(Flavor::Leaf, &p1, &[x.clone(), y.clone()])
            .unwrap()
            .add(&act(Flavor::Leaf, &p1, &[y.clone(), y.clone()]).unwrap().scale(&Scalar::from(-2)));
    report.push("action is multilinear", lin_op && lin_arg, "spot instances");
    report
}

fn cartesian(space: &mut Vec<Vec<Forest>>) -> Vec<Vec<Forest>> {
    let mut out: Vec<Vec<Forest>> = vec![Vec::new()];
    for options in space.iter() {
        let mut next = Vec::with_capacity(out.len() * options.len());
        for prefix in &out {
            for o in options {
                let mut p = prefix.clone();
                p.push(o.clone());
                next.push(p);
            }
        }
        out = next;
    }
    out
}

/// The binary-tree morphism into the leaf operad respects leaf grafting.
pub fn check_theta_morphism(max_leaves: usize) -> CheckReport {
    let mut report = CheckReport::new("theta-morphism");
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
    let mut bad = None;
    'outer: for host_leaves in 1..=max_leaves.saturating_sub(1) {
        for host in binary_trees(host_leaves) {
            let mut arg_space: Vec<Vec<BinaryTree>> = vec![
                (1..=max_leaves)
                    .flat_map(binary_trees)
                    .collect();
                host_leaves
            ];
            for args in cartesian_bt(&mut arg_space) {
                let total: usize = args.iter().map(BinaryTree::leaves).sum();
                if total > max_leaves {
                    continue;
                }
                let mut subs = args.clone();
                let composite = graft_binary(&host, &mut subs);
                let lhs = theta(&composite);
                let thetas: Vec<OperadElement> = args.iter().map(theta).collect();
                let rhs = compose(&theta(&host), &thetas).unwrap();
                if lhs.value() != rhs.value() {
                    bad = Some(format!("morphism fails at host {host}"));
                    break 'outer;
                }
            }
        }
    }
    report.push_outcome(
        format!("theta respects grafting composites, total leaves <= {max_leaves}"),
        bad,
        "",
    );
    report
}

fn cartesian_bt(space: &mut Vec<Vec<BinaryTree>>) -> Vec<Vec<BinaryTree>> {
    let mut out: Vec<Vec<BinaryTree>> = vec![Vec::new()];
    for options in space.iter() {
        let mut next = Vec::with_capacity(out.len() * options.len());
        for prefix in &out {
            for o in options {
                let mut p = prefix.clone();
                p.push(o.clone());
                next.push(p);
            }
        }
        out = next;
    }
    out
}

/// The alternating sequence is a composite of its predecessor in both
/// flavors and is primitive for the cut coproduct.
pub fn check_q_composites(w: usize) -> CheckReport {
    let mut report = CheckReport::new("q-sequence");
    let generator = Element::from_forest(parse_forest("[][]").unwrap())
        .sub(&Element::from_forest(parse_forest("[[]]").unwrap()));
    let dot = Element::from_tree(Tree::leaf());
    let mut bad = None;
    for n in 2..=w {
        let expected = q_sequence(n);
        for flavor in [Flavor::Root, Flavor::Leaf] {
            let composed = act(flavor, &generator, &[q_sequence(n - 1), dot.clone()]).unwrap();
            if composed != expected {
                bad = Some(format!("q_{n} composite fails in the {flavor} flavor"));
                break;
            }
        }
        if !delta_red(&expected).unwrap().is_zero() {
            bad = Some(format!("q_{n} is not primitive"));
        }
        if bad.is_some() {
            break;
        }
    }
    report.push_outcome(
        format!("q_n is the generator composite and primitive, n <= {w}"),
        bad,
        "",
    );
    report
}

// ----------------------------------------------------------------- tamari

/// Admissible transformations preserve weight and move the forest.
pub fn check_transformations(w: usize) -> CheckReport {
    let mut report = CheckReport::new("transformations");
    let mut bad = None;
    'outer: for n in 1..=w {
        for f in forests(n) {
            for g in transformations(&f) {
                if g.weight() != n {
                    bad = Some(format!("transformation of {f} changed the weight"));
                    break 'outer;
                }
                if g == f {
                    bad = Some(format!("transformation fixed {f}"));
                    break 'outer;
                }
            }
        }
    }
    report.push_outcome(
        format!("transformations preserve weight and move the forest, weight <= {w}"),
        bad,
        "",
    );
    report
}

/// Zeta–Möbius inversion and the observed extremes of each slice.
pub fn check_poset(w: usize) -> CheckReport {
    let mut report = CheckReport::new("poset");
    let bound = w.min(7);
    let mut bad = None;
    let mut noncovers = Vec::new();
    for n in 1..=bound {
        let p = poset_cached(n);
        let m = p.elements().len();
        'inv: for i in 0..m {
            for j in 0..m {
                let mut acc = Scalar::zero();
                for k in 0..m {
                    if p.leq_idx(i, k) {
                        acc += p.mobius_idx(k, j);
                    }
                }
                let expected = if i == j { Scalar::one() } else { Scalar::zero() };
                if acc != expected {
                    bad = Some(format!("zeta·mobius fails at weight {n}"));
                    break 'inv;
                }
            }
        }
        if bad.is_some() {
            break;
        }
        let (mins, maxs) = p.extremes();
        let lad = Forest::single(ladder(n).unwrap());
        let dots = Forest::new(vec![Tree::leaf(); n]);
        if mins != vec![&lad] || maxs != vec![&dots] {
            bad = Some(format!("extremes at weight {n} are not the ladder and the dots"));
            break;
        }
        noncovers.push(format!("w{n}: {}", p.generated_noncovers()));
    }
    report.push_outcome(
        format!("zeta·mobius = id and observed extremes, weight <= {bound}"),
        bad,
        "",
    );
    report.push(
        "generated non-cover relation counts (observational)",
        true,
        noncovers.join(", "),
    );
    report
}

/// Expansion of every binary-tree primitive in the dual basis, with {0,1}
/// coefficients matching the order down-set.
pub fn check_dual_expansion(max_leaves: usize) -> CheckReport {
    let mut report = CheckReport::new("dual-expansion");
    let bound = max_leaves.min(7);
    let all: Vec<BinaryTree> = (1..=bound).flat_map(binary_trees).collect();
    let fails: Vec<String> = all
        .par_iter()
        .filter_map(|b| expand_primitive_in_dual(b).err().map(|e| format!("{b}: {e}")))
        .collect();
    report.push_outcome(
        format!("primitive expansion matches the order down-set, leaves <= {bound}"),
        first_fail(fails),
        format!("{} binary trees", all.len()),
    );
    report
}

/// Möbius reconstruction of the dual basis of every tree up to the bound.
pub fn check_mobius_reconstruction(w: usize) -> CheckReport {
    let mut report = CheckReport::new("mobius-reconstruction");
    let bound = w.min(7);
    let all: Vec<Tree> = (1..=bound).flat_map(trees).collect();
    let fails: Vec<String> = all
        .par_iter()
        .filter_map(|t| reconstruct_dual_by_mobius(t).err().map(|e| format!("{t}: {e}")))
        .collect();
    report.push_outcome(
        format!("Möbius inversion reconstructs the dual basis, weight <= {bound}"),
        first_fail(fails),
        format!("{} trees", all.len()),
    );
    report
}

// ----------------------------------------------------------------- suites

pub fn combinat_suite(w: usize) -> CheckReport {
    let mut r = CheckReport::new("combinat");
    r.merge(check_dimensions(8));
    r.merge(check_parse_render(w.min(8)));
    r.merge(check_structure_roundtrips(w.min(7)));
    r.merge(check_vertex_order(w.min(6)));
    r
}

pub fn algebra_suite(w: usize) -> CheckReport {
    let mut r = CheckReport::new("algebra");
    r.merge(check_graft_relations(w));
    r.merge(check_left_factorization(w, w.min(5)));
    r
}

pub fn coalgebra_suite(w: usize) -> CheckReport {
    let mut r = CheckReport::new("coalgebra");
    r.merge(check_coassociativity(w));
    r.merge(check_infinitesimal_compat(w));
    r.merge(check_root_graft_coproduct(w));
    r.merge(check_cut_counts(w));
    r.merge(check_antipode(w));
    r.merge(check_projectors(w));
    r
}

pub fn pairing_suite(w: usize) -> CheckReport {
    let mut r = CheckReport::new("pairing");
    r.merge(check_gram(w));
    r.merge(check_duality(w));
    r.merge(check_pairing_grading(w));
    r.merge(check_antipode_adjoint(w.min(5)));
    r.merge(check_deconcat_adjunction(w.min(5)));
    r.merge(check_gamma_inverse(w.min(5)));
    r.merge(check_dual_product_splits(w.min(5)));
    r
}

pub fn operad_suite(w: usize) -> CheckReport {
    let mut r = CheckReport::new("operad");
    r.merge(check_presentation(Flavor::Root, w));
    r.merge(check_presentation(Flavor::Leaf, w));
    r.merge(check_operad_axioms(w.min(5)));
    r.merge(check_theta_morphism(w.min(5)));
    r.merge(check_q_composites(w));
    for n in 1..=w.min(7) {
        r.merge(check_primitives_graft_free(n));
        r.merge(check_primitives_root(n));
    }
    r.merge(check_primitives_corolla(w.min(7)));
    r
}

pub fn tamari_suite(w: usize) -> CheckReport {
    let mut r = CheckReport::new("tamari");
    r.merge(check_transformations(w));
    r.merge(check_poset(w));
    r.merge(check_dual_expansion(w));
    r.merge(check_mobius_reconstruction(w.min(6)));
    for n in 2..=w.min(5) {
        r.merge(rotation_isomorphism_check(n));
    }
    r
}

/// Every suite, merged under one report.
pub fn all_suites(w: usize) -> CheckReport {
    let mut r = CheckReport::new("all");
    r.merge(combinat_suite(w));
    r.merge(algebra_suite(w));
    r.merge(coalgebra_suite(w));
    r.merge(pairing_suite(w));
    r.merge(operad_suite(w));
    r.merge(tamari_suite(w));
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_at_weight_4() {
        let report = all_suites(4);
        assert!(report.passed(), "{report}");
    }
}
