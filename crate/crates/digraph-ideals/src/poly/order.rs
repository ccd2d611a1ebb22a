//! Term orders: lexicographic, graded reverse lexicographic, and block
//! elimination orders, all over an explicit variable priority.
//!
//! A priority is a permutation of the variable indices, most significant
//! first; "x > y > z" is `[0, 1, 2]` over the table `x, y, z`. Every order
//! here is a multiplicative well-order with 1 as the minimum, which is what
//! Buchberger's algorithm needs to terminate.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::poly::Monomial;

/// Which comparison rule the order applies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderKind {
    /// Pure lexicographic.
    Lex,
    /// Graded reverse lexicographic: total degree first, then reverse-lex.
    GrevLex,
    /// Elimination order: `front[v]` marks the block to eliminate. Monomials
    /// are compared grevlex on the front block first, then grevlex on the
    /// rest, so any monomial touching the front block beats any that does not.
    Block { front: Vec<bool> },
}

/// A total order on monomials over a fixed number of variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermOrder {
    kind: OrderKind,
    priority: Vec<usize>,
}

fn validate_priority(priority: &[usize]) -> Result<()> {
    let n = priority.len();
    let mut seen = vec![false; n];
    for &v in priority {
        if v >= n || seen[v] {
            return Err(Error::Usage(format!(
                "priority {priority:?} is not a permutation of 0..{n}"
            )));
        }
        seen[v] = true;
    }
    Ok(())
}

impl TermOrder {
    /// Lexicographic with table-index priority.
    pub fn lex(n_vars: usize) -> Self {
        TermOrder { kind: OrderKind::Lex, priority: (0..n_vars).collect() }
    }

    /// Graded reverse lexicographic with table-index priority.
    pub fn grevlex(n_vars: usize) -> Self {
        TermOrder { kind: OrderKind::GrevLex, priority: (0..n_vars).collect() }
    }

    /// Lexicographic with an explicit priority (most significant first).
    pub fn lex_with(priority: Vec<usize>) -> Result<Self> {
        validate_priority(&priority)?;
        Ok(TermOrder { kind: OrderKind::Lex, priority })
    }

    /// Graded reverse lexicographic with an explicit priority.
    pub fn grevlex_with(priority: Vec<usize>) -> Result<Self> {
        validate_priority(&priority)?;
        Ok(TermOrder { kind: OrderKind::GrevLex, priority })
    }

    /// Block elimination order whose front block is `front`; inherits this
    /// order's priority. Used to compute `I ∩ K[vars ∖ front]`.
    pub fn eliminating(&self, front: &[bool]) -> Result<Self> {
        if front.len() != self.n_vars() {
            return Err(Error::Usage("front mask length != variable count".into()));
        }
        Ok(TermOrder { kind: OrderKind::Block { front: front.to_vec() }, priority: self.priority.clone() })
    }

    pub fn n_vars(&self) -> usize {
        self.priority.len()
    }

    pub fn kind(&self) -> &OrderKind {
        &self.kind
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    /// Compares two monomials. Exponents of variables outside the priority
    /// range must not occur; polynomial-level callers guarantee this.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert!(a.max_var().is_none_or(|v| v < self.n_vars()));
        debug_assert!(b.max_var().is_none_or(|v| v < self.n_vars()));
        match &self.kind {
            OrderKind::Lex => self.lex_cmp(a, b),
            OrderKind::GrevLex => self.grevlex_cmp(a, b, None),
            OrderKind::Block { front } => {
                match self.grevlex_cmp(a, b, Some((front, true))) {
                    Ordering::Equal => self.grevlex_cmp(a, b, Some((front, false))),
                    unequal => unequal,
                }
            }
        }
    }

    /// Validating comparison for callers holding untrusted data.
    pub fn try_compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        for m in [a, b] {
            if let Some(v) = m.max_var() {
                if v >= self.n_vars() {
                    return Err(Error::VarTableMismatch(format!(
                        "monomial uses variable index {v}, but the order covers {} variables",
                        self.n_vars()
                    )));
                }
            }
        }
        Ok(self.compare(a, b))
    }

    fn lex_cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for &v in &self.priority {
            match a.degree_of(v).cmp(&b.degree_of(v)) {
                Ordering::Equal => {}
                unequal => return unequal,
            }
        }
        Ordering::Equal
    }

    /// Grevlex comparison, optionally restricted to the block where
    /// `front[v] == in_front`.
    fn grevlex_cmp(&self, a: &Monomial, b: &Monomial, block: Option<(&[bool], bool)>) -> Ordering {
        let included = |v: usize| match block {
            None => true,
            Some((front, in_front)) => front[v] == in_front,
        };
        let deg = |m: &Monomial| -> u64 {
            m.support()
                .filter(|&v| included(v))
                .map(|v| u64::from(m.degree_of(v)))
                .sum()
        };
        match deg(a).cmp(&deg(b)) {
            Ordering::Equal => {}
            unequal => return unequal,
        }
        // Reverse-lex tie-break: scan from the least significant variable;
        // at the first difference the smaller exponent wins.
        for &v in self.priority.iter().rev() {
            if !included(v) {
                continue;
            }
            match a.degree_of(v).cmp(&b.degree_of(v)) {
                Ordering::Equal => {}
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }

    /// The induced order on a restricted variable table. `remap[old]` gives
    /// the new index of each surviving variable. A block order whose front
    /// is entirely dropped degenerates to grevlex, which is exactly the order
    /// its back block was compared under.
    pub fn restricted(&self, remap: &[Option<usize>]) -> Self {
        assert_eq!(remap.len(), self.n_vars());
        let priority: Vec<usize> =
            self.priority.iter().filter_map(|&old| remap[old]).collect();
        let kind = match &self.kind {
            OrderKind::Lex => OrderKind::Lex,
            OrderKind::GrevLex => OrderKind::GrevLex,
            OrderKind::Block { front } => {
                let new_front: Vec<bool> = {
                    let mut nf = vec![false; priority.len()];
                    for (old, &new) in remap.iter().enumerate() {
                        if let Some(new) = new {
                            nf[new] = front[old];
                        }
                    }
                    nf
                };
                if new_front.iter().any(|&f| f) {
                    OrderKind::Block { front: new_front }
                } else {
                    OrderKind::GrevLex
                }
            }
        };
        TermOrder { kind, priority }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(pairs: &[(usize, u32)]) -> Monomial {
        Monomial::from_exps(pairs.iter().copied())
    }

    #[test]
    fn lex_compares_most_significant_first() {
        let ord = TermOrder::lex(2);
        assert_eq!(ord.compare(&m(&[(0, 1)]), &m(&[(1, 5)])), Ordering::Greater);
        assert_eq!(ord.compare(&Monomial::one(), &Monomial::one()), Ordering::Equal);
        assert_eq!(ord.compare(&m(&[(1, 1)]), &m(&[(0, 1)])), Ordering::Less);
    }

    #[test]
    fn grevlex_breaks_degree_ties_reverse_lex() {
        // x^2 vs x*y at equal degree: x^2 has the smaller exponent in the
        // least significant variable y, so it is greater.
        let ord = TermOrder::grevlex(2);
        assert_eq!(ord.compare(&m(&[(0, 2)]), &m(&[(0, 1), (1, 1)])), Ordering::Greater);
        assert_eq!(ord.compare(&m(&[(1, 3)]), &m(&[(0, 1), (1, 1)])), Ordering::Greater);
    }

    #[test]
    fn custom_priority_reorders_variables() {
        // Priority y > x: under lex, y beats x^4.
        let ord = TermOrder::lex_with(vec![1, 0]).unwrap();
        assert_eq!(ord.compare(&m(&[(1, 1)]), &m(&[(0, 4)])), Ordering::Greater);
    }

    #[test]
    fn bad_priorities_are_rejected() {
        assert!(TermOrder::lex_with(vec![0, 0]).is_err());
        assert!(TermOrder::grevlex_with(vec![0, 2]).is_err());
    }

    #[test]
    fn block_order_eliminates_front_variables() {
        // Front {t} over table t, x, y: any monomial containing t beats any
        // t-free monomial, regardless of degrees.
        let ord = TermOrder::grevlex(3).eliminating(&[true, false, false]).unwrap();
        assert_eq!(ord.compare(&m(&[(0, 1)]), &m(&[(1, 7), (2, 7)])), Ordering::Greater);
        assert_eq!(ord.compare(&m(&[(1, 1)]), &m(&[(2, 2)])), Ordering::Less);
    }

    #[test]
    fn one_is_minimal_under_every_kind() {
        let orders = [
            TermOrder::lex(3),
            TermOrder::grevlex(3),
            TermOrder::grevlex(3).eliminating(&[false, true, false]).unwrap(),
        ];
        for ord in &orders {
            for v in 0..3 {
                assert_eq!(ord.compare(&Monomial::var(v), &Monomial::one()), Ordering::Greater);
            }
        }
    }

    #[test]
    fn try_compare_rejects_out_of_range_indices() {
        let ord = TermOrder::lex(2);
        assert!(ord.try_compare(&m(&[(5, 1)]), &Monomial::one()).is_err());
    }

    #[test]
    fn restriction_of_block_order_is_grevlex_on_the_back() {
        let ord = TermOrder::grevlex(3).eliminating(&[true, false, false]).unwrap();
        let restricted = ord.restricted(&[None, Some(0), Some(1)]);
        assert_eq!(restricted, TermOrder::grevlex(2));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_monomial() -> impl Strategy<Value = Monomial> {
            proptest::collection::vec(0u32..4, 4)
                .prop_map(|exps| Monomial::from_exps(exps.into_iter().enumerate()))
        }

        fn arb_order() -> impl Strategy<Value = TermOrder> {
            prop_oneof![
                Just(TermOrder::lex(4)),
                Just(TermOrder::grevlex(4)),
                Just(TermOrder::grevlex(4).eliminating(&[true, true, false, false]).unwrap()),
                Just(TermOrder::lex_with(vec![2, 0, 3, 1]).unwrap()),
                Just(TermOrder::grevlex_with(vec![3, 1, 0, 2]).unwrap()),
            ]
        }

        proptest! {
            #[test]
            fn multiplicative(a in arb_monomial(), b in arb_monomial(), c in arb_monomial(), ord in arb_order()) {
                let before = ord.compare(&a, &b);
                let after = ord.compare(&a.mul(&c), &b.mul(&c));
                prop_assert_eq!(before, after);
            }

            #[test]
            fn one_is_minimum(a in arb_monomial(), ord in arb_order()) {
                prop_assert_ne!(ord.compare(&a, &Monomial::one()), Ordering::Less);
            }

            #[test]
            fn antisymmetric_and_total(a in arb_monomial(), b in arb_monomial(), ord in arb_order()) {
                let ab = ord.compare(&a, &b);
                let ba = ord.compare(&b, &a);
                prop_assert_eq!(ab, ba.reverse());
                if ab == Ordering::Equal {
                    prop_assert_eq!(&a, &b);
                }
            }

            #[test]
            fn transitive(a in arb_monomial(), b in arb_monomial(), c in arb_monomial(), ord in arb_order()) {
                let mut sorted = [a, b, c];
                sorted.sort_by(|x, y| ord.compare(x, y));
                prop_assert_ne!(ord.compare(&sorted[0], &sorted[2]), Ordering::Greater);
            }
        }
    }
}
