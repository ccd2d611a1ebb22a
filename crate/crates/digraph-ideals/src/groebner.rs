//! Buchberger's algorithm and everything built directly on it: reduction to
//! normal form, reduced Groebner bases, elimination ideals, saturation, and
//! ideal membership.
//!
//! Key operations:
//! - [`s_polynomial`]: S(f, g) = (lcm/LT(f))·f − (lcm/LT(g))·g.
//! - [`reduce`]: full multivariate division; the remainder contains no
//!   monomial divisible by a basis leading monomial.
//! - [`IdealBasis::buchberger`]: normal pair-selection strategy (smallest lcm
//!   degree first) with the coprime-leading-term skip.
//! - [`IdealBasis::reduce_basis`]: the unique reduced basis of the ideal,
//!   independent of how the generators were presented.
//! - [`IdealBasis::eliminate`] / [`IdealBasis::saturate`]: block-order
//!   elimination and the `w·f − 1` saturation trick.
//!
//! All functions are pure; bases are immutable and cheap to clone.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::sync::Arc;

use num::One;

use crate::error::{Error, Result};
use crate::poly::order::TermOrder;
use crate::poly::{same_table, Monomial, Polynomial, Scalar, VarTable};

/// How far a generator list has been processed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum BasisStatus {
    /// As supplied by the caller.
    Raw,
    /// Every S-polynomial of generator pairs reduces to zero.
    Groebner,
    /// Additionally monic, mutually reduced, and sorted: the unique reduced
    /// basis of the ideal under its order.
    Reduced,
}

/// Strategy for computing elimination ideals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElimStrategy {
    /// Block order: dropped variables in a grevlex front block. Fast default.
    Block,
    /// Pure lexicographic order with dropped variables most significant.
    /// Slower; matches the elimination orders used in hand computations.
    Lex,
}

/// A generating set of an ideal, together with its ring and term order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealBasis {
    vars: Arc<VarTable>,
    order: TermOrder,
    generators: Vec<Polynomial>,
    status: BasisStatus,
}

/// The S-polynomial of two nonzero polynomials; the construction cancels the
/// leading terms, exposing the next obstruction to being a Groebner basis.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: &TermOrder) -> Result<Polynomial> {
    let (fc, fm) = f.leading_term(ord)?;
    let (gc, gm) = g.leading_term(ord)?;
    let lcm = fm.lcm(gm);
    let f_shift = lcm.try_div(fm).expect("lcm divisible by its factor");
    let g_shift = lcm.try_div(gm).expect("lcm divisible by its factor");
    let left = f.mul_term(&(Scalar::one() / fc.clone()), &f_shift);
    let right = g.mul_term(&(Scalar::one() / gc.clone()), &g_shift);
    left.sub(&right)
}

/// Fully reduces `f` modulo `basis`: repeatedly cancels the current leading
/// term against the first basis element (in list order) whose leading monomial
/// divides it, moving irreducible leading terms to the remainder.
pub fn reduce(f: &Polynomial, basis: &[Polynomial], ord: &TermOrder) -> Result<Polynomial> {
    let mut lts = Vec::with_capacity(basis.len());
    for g in basis {
        let (c, m) = g.leading_term(ord)?;
        lts.push((c.clone(), m.clone()));
    }
    let mut work = f.clone();
    let mut remainder: Vec<(Scalar, Monomial)> = Vec::new();
    'strip: while !work.is_zero() {
        let (c, m) = {
            let (c, m) = work.leading_term(ord)?;
            (c.clone(), m.clone())
        };
        for (g, (glc, glm)) in basis.iter().zip(&lts) {
            if let Some(shift) = m.try_div(glm) {
                let factor = &c / glc;
                work = work.sub_mul_term(&factor, &shift, g)?;
                continue 'strip;
            }
        }
        remainder.push((c.clone(), m.clone()));
        work = work.sub(&Polynomial::from_terms(
            work.vars().clone(),
            [(c, m)],
        ))?;
    }
    Ok(Polynomial::from_terms(f.vars().clone(), remainder))
}

/// Candidate S-pair, ordered so the heap pops the smallest lcm degree first
/// (normal selection strategy), ties broken by generator indices.
#[derive(PartialEq, Eq)]
struct Pair {
    lcm_degree: u32,
    i: usize,
    j: usize,
}

impl Ord for Pair {
    fn cmp(&self, other: &Self) -> Ordering {
        // Reversed: BinaryHeap is a max-heap and we want the minimum.
        (other.lcm_degree, other.i, other.j).cmp(&(self.lcm_degree, self.i, self.j))
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Normalizes an unordered index pair to the `(low, high)` form used as the
/// pending-pair set key.
fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

impl IdealBasis {
    /// Wraps raw generators. Zero polynomials are dropped; the zero ideal is
    /// represented by an empty generator list.
    pub fn new(
        vars: Arc<VarTable>,
        order: TermOrder,
        generators: Vec<Polynomial>,
    ) -> Result<Self> {
        if order.n_vars() != vars.len() {
            return Err(Error::Usage(format!(
                "order covers {} variables, table has {}",
                order.n_vars(),
                vars.len()
            )));
        }
        let mut kept = Vec::with_capacity(generators.len());
        for g in generators {
            if !same_table(g.vars(), &vars) {
                return Err(Error::VarTableMismatch(
                    "generator built over a different variable table".into(),
                ));
            }
            if !g.is_zero() {
                kept.push(g);
            }
        }
        Ok(IdealBasis { vars, order, generators: kept, status: BasisStatus::Raw })
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn status(&self) -> BasisStatus {
        self.status
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    fn with(&self, generators: Vec<Polynomial>, status: BasisStatus) -> Self {
        IdealBasis { vars: self.vars.clone(), order: self.order.clone(), generators, status }
    }

    /// Completes the generators to a Groebner basis.
    ///
    /// Normal selection strategy (smallest lcm degree first). A pair is
    /// discarded without reduction when its leading monomials are coprime
    /// (Buchberger's first criterion) or when a third generator divides the
    /// pair's lcm and both connecting pairs have already been treated (chain
    /// criterion); both preserve the result and cut most reductions.
    pub fn buchberger(&self) -> Result<Self> {
        if self.status >= BasisStatus::Groebner {
            return Ok(self.clone());
        }
        let ord = &self.order;
        let mut basis: Vec<Polynomial> = Vec::new();
        for g in &self.generators {
            let monic = g.monic(ord)?;
            if !basis.contains(&monic) {
                basis.push(monic);
            }
        }
        let mut lms: Vec<Monomial> = basis
            .iter()
            .map(|g| g.leading_term(ord).map(|(_, m)| m.clone()))
            .collect::<Result<_>>()?;
        let mut heap = BinaryHeap::new();
        let mut pending: std::collections::HashSet<(usize, usize)> =
            std::collections::HashSet::new();
        for j in 1..basis.len() {
            for i in 0..j {
                heap.push(Pair { lcm_degree: lms[i].lcm(&lms[j]).total_degree(), i, j });
                pending.insert((i, j));
            }
        }
        while let Some(Pair { i, j, .. }) = heap.pop() {
            pending.remove(&(i, j));
            if lms[i].coprime(&lms[j]) {
                continue;
            }
            let lcm = lms[i].lcm(&lms[j]);
            let chain_skip = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && lms[k].divides(&lcm)
                    && !pending.contains(&key(i, k))
                    && !pending.contains(&key(j, k))
            });
            if chain_skip {
                continue;
            }
            let s = s_polynomial(&basis[i], &basis[j], ord)?;
            let h = reduce(&s, &basis, ord)?;
            if h.is_zero() {
                continue;
            }
            let h = h.monic(ord)?;
            let hm = h.leading_term(ord)?.1.clone();
            let t = basis.len();
            for (idx, lm) in lms.iter().enumerate() {
                heap.push(Pair { lcm_degree: lm.lcm(&hm).total_degree(), i: idx, j: t });
                pending.insert((idx, t));
            }
            basis.push(h);
            lms.push(hm);
        }
        Ok(self.with(basis, BasisStatus::Groebner))
    }

    /// Interreduces a Groebner basis into the unique reduced basis: monic
    /// generators, none of whose monomials is divisible by another generator's
    /// leading monomial, sorted descending by leading monomial.
    pub fn reduce_basis(&self) -> Result<Self> {
        if self.status == BasisStatus::Reduced {
            return Ok(self.clone());
        }
        if self.status < BasisStatus::Groebner {
            return Err(Error::BasisNotGroebner(
                "reduce_basis requires a Groebner basis; run buchberger first".into(),
            ));
        }
        let ord = &self.order;
        let mut monic: Vec<Polynomial> = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            monic.push(g.monic(ord)?);
        }
        // Minimalize: drop any generator whose leading monomial is divisible
        // by another kept generator's leading monomial (duplicates drop the
        // later copy).
        let lms: Vec<Monomial> =
            monic.iter().map(|g| g.leading_term(ord).map(|(_, m)| m.clone())).collect::<Result<_>>()?;
        let mut keep = vec![true; monic.len()];
        for i in 0..monic.len() {
            for j in 0..monic.len() {
                if i == j || !keep[j] {
                    continue;
                }
                if lms[j].divides(&lms[i]) && (lms[j] != lms[i] || j < i) {
                    keep[i] = false;
                    break;
                }
            }
        }
        let mut minimal: Vec<Polynomial> = monic
            .into_iter()
            .zip(keep)
            .filter_map(|(g, k)| k.then_some(g))
            .collect();
        // Tail-reduce each against the others until nothing changes.
        loop {
            let mut changed = false;
            for i in 0..minimal.len() {
                let others: Vec<Polynomial> = minimal
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, g)| g.clone())
                    .collect();
                let reduced = reduce(&minimal[i], &others, ord)?.monic(ord)?;
                if reduced != minimal[i] {
                    minimal[i] = reduced;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        minimal.sort_by(|a, b| {
            let am = a.leading_term(ord).expect("nonzero").1;
            let bm = b.leading_term(ord).expect("nonzero").1;
            ord.compare(bm, am)
        });
        Ok(self.with(minimal, BasisStatus::Reduced))
    }

    /// Convenience: Groebner basis followed by interreduction.
    pub fn reduced_groebner(&self) -> Result<Self> {
        self.buchberger()?.reduce_basis()
    }

    /// The elimination ideal I ∩ K[vars ∖ drop], returned over the restricted
    /// variable table with the induced order, already in reduced form.
    pub fn eliminate(&self, drop: &[bool], strategy: ElimStrategy) -> Result<Self> {
        if drop.len() != self.vars.len() {
            return Err(Error::Usage("drop mask length != variable count".into()));
        }
        let elim_order = match strategy {
            ElimStrategy::Block => self.order.eliminating(drop)?,
            ElimStrategy::Lex => {
                let mut priority: Vec<usize> =
                    (0..self.vars.len()).filter(|&v| drop[v]).collect();
                priority.extend(self.order.priority().iter().copied().filter(|&v| !drop[v]));
                TermOrder::lex_with(priority)?
            }
        };
        let extended = IdealBasis {
            vars: self.vars.clone(),
            order: elim_order,
            generators: self.generators.clone(),
            status: BasisStatus::Raw,
        };
        let reduced = extended.reduced_groebner()?;
        let keep: Vec<bool> = drop.iter().map(|&d| !d).collect();
        let (small_table, remap) = self.vars.restricted(&keep)?;
        let mut survivors = Vec::new();
        for g in reduced.generators() {
            let touches_dropped = g
                .terms()
                .iter()
                .flat_map(|(_, m)| m.support())
                .any(|v| drop[v]);
            if !touches_dropped {
                survivors.push(g.transfer(&small_table)?);
            }
        }
        // The drop-free members of a reduced basis under an elimination order
        // are exactly the reduced basis of the intersection ideal.
        Ok(IdealBasis {
            vars: small_table,
            order: reduced.order.restricted(&remap),
            generators: survivors,
            status: BasisStatus::Reduced,
        })
    }

    /// The saturation I : f^∞, computed by adjoining a fresh variable w with
    /// the relation w·f − 1 and eliminating w. Result uses this basis's own
    /// variable table and order.
    pub fn saturate(&self, f: &Polynomial) -> Result<Self> {
        if !same_table(f.vars(), &self.vars) {
            return Err(Error::VarTableMismatch(
                "saturation witness built over a different variable table".into(),
            ));
        }
        let w_name = self.vars.fresh_name("w");
        let big_table = self.vars.extended(vec![w_name.clone()])?;
        let w_index = big_table.index_of(&w_name).expect("just added");
        let mut gens: Vec<Polynomial> = Vec::with_capacity(self.generators.len() + 1);
        for g in &self.generators {
            gens.push(g.transfer(&big_table)?);
        }
        let wf = Polynomial::var(big_table.clone(), w_index)
            .mul(&f.transfer(&big_table)?)?
            .sub(&Polynomial::one(big_table.clone()))?;
        gens.push(wf);
        let mut priority: Vec<usize> = self.order.priority().to_vec();
        priority.push(w_index);
        let big_order = TermOrder::grevlex_with(priority)?;
        let big = IdealBasis::new(big_table, big_order, gens)?;
        let mut drop = vec![false; self.vars.len() + 1];
        drop[w_index] = true;
        let eliminated = big.eliminate(&drop, ElimStrategy::Block)?;
        // Rebuild over the original table and order (content-identical table,
        // possibly different order kind).
        let gens: Vec<Polynomial> = eliminated
            .generators()
            .iter()
            .map(|g| g.transfer(&self.vars))
            .collect::<Result<_>>()?;
        if eliminated.order() == &self.order {
            return Ok(self.with(gens, BasisStatus::Reduced));
        }
        IdealBasis::new(self.vars.clone(), self.order.clone(), gens)?.reduced_groebner()
    }

    /// Ideal membership: the normal form of `f` against a Groebner basis of
    /// the ideal is zero exactly when `f` is a member.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if !same_table(f.vars(), &self.vars) {
            return Err(Error::VarTableMismatch(
                "membership query over a different variable table".into(),
            ));
        }
        let gb = if self.status >= BasisStatus::Groebner {
            self.clone()
        } else {
            self.buchberger()?
        };
        Ok(reduce(f, gb.generators(), &gb.order)?.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MulStyle;

    fn vars3() -> Arc<VarTable> {
        VarTable::new(vec!["x", "y", "z"]).unwrap()
    }

    fn edge_vars() -> Arc<VarTable> {
        VarTable::new(vec!["e1", "e2", "e3", "e4", "e5", "e6"]).unwrap()
    }

    /// Lex order e3 > e1 > e4 > e2 > e5 > e6 on the D1 edge variables.
    fn sigma1(vars: &VarTable) -> TermOrder {
        let priority = ["e3", "e1", "e4", "e2", "e5", "e6"]
            .iter()
            .map(|n| vars.index_of(n).unwrap())
            .collect();
        TermOrder::lex_with(priority).unwrap()
    }

    fn p(vars: &Arc<VarTable>, text: &str) -> Polynomial {
        Polynomial::parse(text, vars).unwrap()
    }

    fn basis(vars: &Arc<VarTable>, ord: &TermOrder, gens: &[&str]) -> IdealBasis {
        let polys = gens.iter().map(|t| p(vars, t)).collect();
        IdealBasis::new(vars.clone(), ord.clone(), polys).unwrap()
    }

    fn gen_set(b: &IdealBasis) -> Vec<String> {
        let mut set: Vec<String> =
            b.generators().iter().map(|g| g.to_text(b.order(), MulStyle::Implicit)).collect();
        set.sort();
        set
    }

    // ---- s_polynomial -----------------------------------------------------

    #[test]
    fn s_polynomial_cancels_leading_terms() {
        let vars = edge_vars();
        let ord = sigma1(&vars);
        let s = s_polynomial(&p(&vars, "e1e2e3 - 1"), &p(&vars, "e3e4 - e5"), &ord).unwrap();
        assert_eq!(s, p(&vars, "e1e2e5 - e4"));
    }

    #[test]
    fn s_polynomial_of_identical_inputs_is_zero() {
        let vars = vars3();
        let ord = TermOrder::grevlex(3);
        let f = p(&vars, "x^2y - z");
        assert!(s_polynomial(&f, &f, &ord).unwrap().is_zero());
    }

    #[test]
    fn s_polynomial_with_coprime_leads() {
        let vars = vars3();
        let ord = TermOrder::lex(3);
        let s = s_polynomial(&p(&vars, "x - 1"), &p(&vars, "y - 1"), &ord).unwrap();
        assert_eq!(s, p(&vars, "x - y"));
    }

    #[test]
    fn s_polynomial_rejects_zero() {
        let vars = vars3();
        let ord = TermOrder::lex(3);
        let zero = Polynomial::zero(vars.clone());
        assert!(s_polynomial(&zero, &p(&vars, "x"), &ord).is_err());
    }

    // ---- reduce -----------------------------------------------------------

    #[test]
    fn reduce_examples() {
        let vars = edge_vars();
        let ord = sigma1(&vars);
        let gb = vec![p(&vars, "e1e2e3 - 1")];
        assert_eq!(reduce(&p(&vars, "e1e2e3"), &gb, &ord).unwrap(), p(&vars, "1"));
        let gb2 = vec![p(&vars, "e3e4 - e5")];
        assert_eq!(reduce(&p(&vars, "e3e4e6"), &gb2, &ord).unwrap(), p(&vars, "e5e6"));
    }

    #[test]
    fn reduce_against_empty_basis_is_identity() {
        let vars = vars3();
        let ord = TermOrder::grevlex(3);
        let f = p(&vars, "x^3 - 2y + 1/4");
        assert_eq!(reduce(&f, &[], &ord).unwrap(), f);
    }

    #[test]
    fn reduce_rejects_zero_divisor() {
        let vars = vars3();
        let ord = TermOrder::grevlex(3);
        let gb = vec![Polynomial::zero(vars.clone())];
        assert!(matches!(reduce(&p(&vars, "x"), &gb, &ord), Err(Error::ZeroLeadingTerm)));
    }

    #[test]
    fn remainder_is_irreducible() {
        let vars = vars3();
        let ord = TermOrder::lex(3);
        let gb = vec![p(&vars, "x^2 - y"), p(&vars, "xy - z")];
        let r = reduce(&p(&vars, "x^3y^2 + x^2 + y"), &gb, &ord).unwrap();
        for (_, m) in r.terms() {
            for g in &gb {
                let (_, lm) = g.leading_term(&ord).unwrap();
                assert!(!lm.divides(m), "remainder term still divisible");
            }
        }
        // Idempotence.
        assert_eq!(reduce(&r, &gb, &ord).unwrap(), r);
    }

    // ---- buchberger -------------------------------------------------------

    #[test]
    fn buchberger_completes_the_d1_pair() {
        let vars = edge_vars();
        let ord = sigma1(&vars);
        let gb = basis(&vars, &ord, &["e1e2e3 - 1", "e3e4 - e5"]).buchberger().unwrap();
        assert_eq!(gb.status(), BasisStatus::Groebner);
        assert!(gb.generators().contains(&p(&vars, "e1e2e5 - e4")));
    }

    #[test]
    fn buchberger_on_singleton_and_empty() {
        let vars = vars3();
        let ord = TermOrder::grevlex(3);
        let single = basis(&vars, &ord, &["3x^2 - y"]).buchberger().unwrap();
        assert_eq!(single.generators(), &[p(&vars, "x^2 - 1/3y")]);
        let empty = basis(&vars, &ord, &[]).buchberger().unwrap();
        assert!(empty.is_zero_ideal());
    }

    #[test]
    fn twisted_cubic_reduced_basis() {
        let vars = vars3();
        let ord = TermOrder::grevlex(3);
        let rgb = basis(&vars, &ord, &["x^2 - y", "x^3 - z"]).reduced_groebner().unwrap();
        assert_eq!(
            gen_set(&rgb),
            vec!["x^2 - y".to_string(), "xy - z".to_string(), "y^2 - xz".to_string()]
        );
    }

    #[test]
    fn every_s_pair_reduces_to_zero() {
        let vars = vars3();
        let ord = TermOrder::lex(3);
        let gb = basis(&vars, &ord, &["x^2 + y", "xy - z", "yz - x + 1"]).buchberger().unwrap();
        let gens = gb.generators();
        for i in 0..gens.len() {
            for j in (i + 1)..gens.len() {
                let s = s_polynomial(&gens[i], &gens[j], &ord).unwrap();
                assert!(reduce(&s, gens, &ord).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn ideal_is_preserved() {
        let vars = vars3();
        let ord = TermOrder::grevlex(3);
        let raw = basis(&vars, &ord, &["x^2 - y", "x^3 - z", "xy + z^2"]);
        let rgb = raw.reduced_groebner().unwrap();
        for g in raw.generators() {
            assert!(rgb.contains(g).unwrap());
        }
        for g in rgb.generators() {
            assert!(raw.contains(g).unwrap());
        }
    }

    // ---- reduce_basis -----------------------------------------------------

    #[test]
    fn d1_generators_already_reduced_under_sigma1() {
        let vars = edge_vars();
        let ord = sigma1(&vars);
        let rgb = basis(&vars, &ord, &["e1e2e3 - 1", "e3e4 - e5", "e1e2e5 - e4"])
            .reduced_groebner()
            .unwrap();
        assert_eq!(gen_set(&rgb), vec!["e1e2e3 - 1", "e1e2e5 - e4", "e3e4 - e5"]);
    }

    #[test]
    fn reduce_basis_trims_x_plus_y() {
        let vars = vars3();
        let ord = TermOrder::lex(3);
        let rgb = basis(&vars, &ord, &["x", "x + y"]).reduced_groebner().unwrap();
        assert_eq!(gen_set(&rgb), vec!["x", "y"]);
    }

    #[test]
    fn reduce_basis_requires_groebner_status() {
        let vars = vars3();
        let ord = TermOrder::lex(3);
        let raw = basis(&vars, &ord, &["x + y"]);
        assert!(matches!(raw.reduce_basis(), Err(Error::BasisNotGroebner(_))));
    }

    #[test]
    fn reduced_basis_is_permutation_invariant() {
        let vars = vars3();
        let ord = TermOrder::grevlex(3);
        let gens = ["x^2 - y", "xy - z", "y^3 + z - 1", "xz - y^2"];
        let reference = basis(&vars, &ord, &gens).reduced_groebner().unwrap();
        let mut rotated = gens;
        rotated.rotate_left(2);
        rotated.swap(0, 1);
        let other = basis(&vars, &ord, &rotated).reduced_groebner().unwrap();
        assert_eq!(gen_set(&reference), gen_set(&other));
    }

    // ---- eliminate --------------------------------------------------------

    #[test]
    fn eliminate_projects_out_variables() {
        let vars = vars3();
        let ord = TermOrder::grevlex(3);
        // x = y^2, y = z: intersection with K[x, z] is (x - z^2). The reduced
        // generator is presented under the induced order: grevlex puts z^2 in
        // front, the lex strategy puts x in front.
        for (strategy, expected) in
            [(ElimStrategy::Block, "z^2 - x"), (ElimStrategy::Lex, "x - z^2")]
        {
            let out = basis(&vars, &ord, &["x - y^2", "y - z"])
                .eliminate(&[false, true, false], strategy)
                .unwrap();
            assert_eq!(out.vars().names().collect::<Vec<_>>(), vec!["x", "z"]);
            assert_eq!(gen_set(&out), vec![expected]);
            assert!(out.contains(&p(&out.vars().clone(), "x - z^2")).unwrap());
        }
    }

    #[test]
    fn eliminate_nothing_is_a_no_op_on_the_ideal() {
        let vars = vars3();
        let ord = TermOrder::lex(3);
        let out = basis(&vars, &ord, &["x - y"])
            .eliminate(&[false, false, false], ElimStrategy::Block)
            .unwrap();
        assert_eq!(gen_set(&out), vec!["x - y"]);
        assert_eq!(out.vars().len(), 3);
    }

    #[test]
    fn eliminate_output_never_mentions_dropped_vars() {
        let vars = vars3();
        let ord = TermOrder::grevlex(3);
        let out = basis(&vars, &ord, &["x^2 - yz", "xy - 1", "z^3 - x - y"])
            .eliminate(&[true, false, false], ElimStrategy::Block)
            .unwrap();
        for g in out.generators() {
            assert!(g.vars().index_of("x").is_none());
        }
    }

    // ---- saturate ---------------------------------------------------------

    #[test]
    fn saturate_strips_a_cofactor() {
        let vars = edge_vars();
        let ord = TermOrder::grevlex(6);
        let raw = basis(&vars, &ord, &["e1^2e2 - e1e3"]); // e1 * (e1e2 - e3)
        let sat = raw.saturate(&p(&vars, "e1")).unwrap();
        assert_eq!(gen_set(&sat), vec!["e1e2 - e3"]);
        // I ⊆ I : f^∞
        for g in raw.generators() {
            assert!(sat.contains(g).unwrap());
        }
    }

    #[test]
    fn saturate_x_squared_by_x_is_everything() {
        let vars = vars3();
        let ord = TermOrder::grevlex(3);
        let sat = basis(&vars, &ord, &["x^2"]).saturate(&p(&vars, "x")).unwrap();
        assert_eq!(gen_set(&sat), vec!["1"]);
    }

    #[test]
    fn saturate_by_one_is_identity() {
        let vars = vars3();
        let ord = TermOrder::grevlex(3);
        let rgb = basis(&vars, &ord, &["x^2 - y", "xy - z"]).reduced_groebner().unwrap();
        let sat = rgb.saturate(&Polynomial::one(vars.clone())).unwrap();
        assert_eq!(gen_set(&sat), gen_set(&rgb));
    }

    #[test]
    fn saturate_recovers_cofactor_members() {
        // For g with f·g ∈ I: g ∈ I : f^∞.
        let vars = vars3();
        let ord = TermOrder::grevlex(3);
        let ideal = basis(&vars, &ord, &["x^2y - x^2z"]);
        let f = p(&vars, "x^2");
        let sat = ideal.saturate(&f).unwrap();
        let g = p(&vars, "y - z");
        assert!(ideal.contains(&f.mul(&g).unwrap()).unwrap());
        assert!(sat.contains(&g).unwrap());
    }

    // ---- contains ---------------------------------------------------------

    #[test]
    fn membership_by_normal_form() {
        let vars = edge_vars();
        let ord = sigma1(&vars);
        let ideal = basis(&vars, &ord, &["e1e2e3 - 1", "e3e4 - e5", "e1e2e5 - e4"]);
        assert!(ideal.contains(&p(&vars, "e1e2e3 - 1")).unwrap());
        assert!(!ideal.contains(&p(&vars, "e1 - 1")).unwrap());
        assert!(ideal.contains(&Polynomial::zero(vars.clone())).unwrap());
    }

    // ---- properties -------------------------------------------------------

    mod properties {
        use super::*;
        use num::BigInt;
        use num::BigRational;
        use proptest::prelude::*;

        fn arb_poly() -> impl Strategy<Value = Polynomial> {
            let term = (-4i64..=4, proptest::collection::vec(0u32..3, 3));
            proptest::collection::vec(term, 0..5).prop_map(|terms| {
                let vars = vars3();
                Polynomial::from_terms(
                    vars,
                    terms.into_iter().map(|(c, exps)| {
                        (
                            BigRational::from_integer(BigInt::from(c)),
                            crate::poly::Monomial::from_exps(exps.into_iter().enumerate()),
                        )
                    }),
                )
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn reduction_is_idempotent(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
                let ord = TermOrder::grevlex(3);
                let gb: Vec<Polynomial> = [g, h].into_iter().filter(|q| !q.is_zero()).collect();
                let once = reduce(&f, &gb, &ord).unwrap();
                let twice = reduce(&once, &gb, &ord).unwrap();
                prop_assert_eq!(once, twice);
            }

            #[test]
            fn difference_lies_in_the_ideal(f in arb_poly(), g in arb_poly()) {
                let ord = TermOrder::grevlex(3);
                prop_assume!(!g.is_zero());
                let vars = f.vars().clone();
                let ideal = IdealBasis::new(vars, ord.clone(), vec![g.clone()]).unwrap();
                let r = reduce(&f, &[g], &ord).unwrap();
                let diff = f.sub(&r).unwrap();
                prop_assert!(ideal.contains(&diff).unwrap());
            }
        }
    }
}
