//! Exact multivariate polynomial arithmetic over the rationals.
//!
//! Everything downstream (Groebner bases, toric ideals, graph analysis) runs on
//! the types in this module:
//!
//! - [`VarTable`]: an immutable, ordered set of variable names. Indices are
//!   stable for the lifetime of the table and polynomials refer to variables
//!   only by index.
//! - [`Monomial`]: a sparse exponent vector (strictly positive exponents only).
//! - [`Polynomial`]: a sum of `(Scalar, Monomial)` terms with nonzero
//!   coefficients and pairwise distinct monomials, kept sorted descending under
//!   the canonical order so equality and hashing are structural.
//!
//! Coefficients are [`Scalar`] = arbitrary-precision rationals, so all
//! computation is exact; there is no floating point anywhere in the pipeline.
//!
//! Term orders live in [`order`], text parsing and rendering in [`parse`].

pub mod order;
pub mod parse;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};
use order::TermOrder;

/// Exact rational coefficient. Always in lowest terms with positive denominator.
pub type Scalar = BigRational;

/// Shorthand for an integer scalar.
pub fn scalar(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

// ---------------------------------------------------------------------------
// Variable tables
// ---------------------------------------------------------------------------

/// An ordered, immutable table of variable names.
///
/// Names must look like identifiers (letter first, then letters, digits, `_`)
/// so that rendered polynomials such as `e1e2e3 - 1` parse back unambiguously
/// via greedy longest-match tokenization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarTable {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VarTable {
    /// Builds a table from distinct identifier-shaped names.
    pub fn new<S: Into<String>>(names: Vec<S>) -> Result<Arc<Self>> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::Usage(format!(
                    "variable name {name:?} is not identifier-shaped"
                )));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::Usage(format!("duplicate variable name {name:?}")));
            }
        }
        Ok(Arc::new(VarTable { names, index }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Name of the variable with the given index. Panics on out-of-range.
    pub fn name(&self, var: usize) -> &str {
        &self.names[var]
    }

    /// Index of a name, if present.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(|s| s.as_str())
    }

    /// New table with extra names appended; existing indices are unchanged.
    pub fn extended<S: Into<String>>(&self, extra: Vec<S>) -> Result<Arc<Self>> {
        let mut names = self.names.clone();
        names.extend(extra.into_iter().map(Into::into));
        VarTable::new(names)
    }

    /// New table keeping exactly the variables where `keep[var]` holds,
    /// in their original order, plus the old-index -> new-index map.
    pub fn restricted(&self, keep: &[bool]) -> Result<(Arc<Self>, Vec<Option<usize>>)> {
        assert_eq!(keep.len(), self.len());
        let mut names = Vec::new();
        let mut remap = vec![None; self.len()];
        for (old, name) in self.names.iter().enumerate() {
            if keep[old] {
                remap[old] = Some(names.len());
                names.push(name.clone());
            }
        }
        Ok((VarTable::new(names)?, remap))
    }

    /// A name based on `stem` that does not collide with any table entry.
    pub fn fresh_name(&self, stem: &str) -> String {
        if self.index_of(stem).is_none() {
            return stem.to_string();
        }
        for k in 0.. {
            let candidate = format!("{stem}_{k}");
            if self.index_of(&candidate).is_none() {
                return candidate;
            }
        }
        unreachable!()
    }
}

/// True when two tables are interchangeable (same pointer or same names).
pub fn same_table(a: &Arc<VarTable>, b: &Arc<VarTable>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

// ---------------------------------------------------------------------------
// Monomials
// ---------------------------------------------------------------------------

/// A sparse monomial: exponents by variable index, ascending, all positive.
///
/// The derived `Ord` is the canonical order used for term storage: graded
/// reverse lexicographic with variables prioritized by table index. It is a
/// multiplicative well-order, so sorted term lists stay sorted under
/// term-by-monomial multiplication.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<(usize, u32)>,
}

impl Monomial {
    /// The empty product.
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    /// A single variable.
    pub fn var(var: usize) -> Self {
        Monomial { exps: vec![(var, 1)] }
    }

    /// From explicit (variable, exponent) pairs; zero exponents are dropped.
    pub fn from_exps(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut exps: Vec<(usize, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        exps.sort_unstable_by_key(|&(v, _)| v);
        for window in exps.windows(2) {
            assert_ne!(window[0].0, window[1].0, "duplicate variable in monomial");
        }
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    /// Exponent of one variable (0 when absent).
    pub fn degree_of(&self, var: usize) -> u32 {
        match self.exps.binary_search_by_key(&var, |&(v, _)| v) {
            Ok(i) => self.exps[i].1,
            Err(_) => 0,
        }
    }

    /// Variables with positive exponent, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    /// True when every exponent is exactly one.
    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&(_, e)| e == 1)
    }

    /// Largest variable index present, if any.
    pub fn max_var(&self) -> Option<usize> {
        self.exps.last().map(|&(v, _)| v)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (va, ea) = self.exps[i];
            let (vb, eb) = other.exps[j];
            match va.cmp(&vb) {
                Ordering::Less => {
                    exps.push((va, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push((vb, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    exps.push((va, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&self.exps[i..]);
        exps.extend_from_slice(&other.exps[j..]);
        Monomial { exps }
    }

    /// Exact quotient, or `None` when some exponent would go negative.
    pub fn try_div(&self, other: &Self) -> Option<Self> {
        let mut exps = Vec::with_capacity(self.exps.len());
        let mut i = 0;
        for &(vb, eb) in &other.exps {
            loop {
                if i >= self.exps.len() {
                    return None;
                }
                let (va, ea) = self.exps[i];
                if va < vb {
                    exps.push((va, ea));
                    i += 1;
                } else if va == vb {
                    if ea < eb {
                        return None;
                    }
                    if ea > eb {
                        exps.push((va, ea - eb));
                    }
                    i += 1;
                    break;
                } else {
                    return None;
                }
            }
        }
        exps.extend_from_slice(&self.exps[i..]);
        Some(Monomial { exps })
    }

    /// Divisibility without building the quotient.
    pub fn divides(&self, other: &Self) -> bool {
        let mut j = 0;
        'factors: for &(v, e) in &self.exps {
            while j < other.exps.len() {
                let (ov, oe) = other.exps[j];
                if ov < v {
                    j += 1;
                } else if ov == v && oe >= e {
                    j += 1;
                    continue 'factors;
                } else {
                    return false;
                }
            }
            return false;
        }
        true
    }

    /// Least common multiple (componentwise max).
    pub fn lcm(&self, other: &Self) -> Self {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (va, ea) = self.exps[i];
            let (vb, eb) = other.exps[j];
            match va.cmp(&vb) {
                Ordering::Less => {
                    exps.push((va, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push((vb, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    exps.push((va, ea.max(eb)));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&self.exps[i..]);
        exps.extend_from_slice(&other.exps[j..]);
        Monomial { exps }
    }

    /// True when the supports are disjoint (gcd is 1).
    pub fn coprime(&self, other: &Self) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            match self.exps[i].0.cmp(&other.exps[j].0) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }
}

impl Ord for Monomial {
    /// Canonical graded reverse lexicographic order (table-index priority).
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            unequal => return unequal,
        }
        // Equal degree: walk from the least significant variable (largest
        // index); at the first difference the smaller exponent wins.
        let mut a = self.exps.iter().rev();
        let mut b = other.exps.iter().rev();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Greater,
                (Some(_), None) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va > vb {
                        return Ordering::Less;
                    }
                    if va < vb {
                        return Ordering::Greater;
                    }
                    match ea.cmp(&eb) {
                        Ordering::Equal => {}
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                    }
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

/// One term of a polynomial.
pub type Term = (Scalar, Monomial);

/// A multivariate polynomial over the rationals.
///
/// Invariants: all coefficients nonzero, monomials pairwise distinct, terms
/// sorted descending under the canonical monomial order. The zero polynomial
/// has an empty term list.
#[derive(Debug, Clone)]
pub struct Polynomial {
    vars: Arc<VarTable>,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.vars, &other.vars) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        for (c, m) in &self.terms {
            c.hash(state);
            m.hash(state);
        }
    }
}

impl Polynomial {
    pub fn zero(vars: Arc<VarTable>) -> Self {
        Polynomial { vars, terms: Vec::new() }
    }

    pub fn one(vars: Arc<VarTable>) -> Self {
        Self::constant(vars, Scalar::one())
    }

    pub fn constant(vars: Arc<VarTable>, c: Scalar) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(c, Monomial::one())] };
        Polynomial { vars, terms }
    }

    /// The polynomial consisting of a single variable.
    pub fn var(vars: Arc<VarTable>, var: usize) -> Self {
        assert!(var < vars.len(), "variable index out of range");
        Polynomial { vars, terms: vec![(Scalar::one(), Monomial::var(var))] }
    }

    /// A single monomial with coefficient one.
    pub fn from_monomial(vars: Arc<VarTable>, m: Monomial) -> Self {
        if let Some(v) = m.max_var() {
            assert!(v < vars.len(), "variable index out of range");
        }
        Polynomial { vars, terms: vec![(Scalar::one(), m)] }
    }

    /// Normalizes arbitrary terms: combines equal monomials, drops zeros, sorts.
    pub fn from_terms(vars: Arc<VarTable>, terms: impl IntoIterator<Item = Term>) -> Self {
        let mut collected: Vec<Term> = terms.into_iter().collect();
        collected.sort_by(|a, b| b.1.cmp(&a.1));
        let mut out: Vec<Term> = Vec::with_capacity(collected.len());
        for (c, m) in collected {
            if let Some(v) = m.max_var() {
                assert!(v < vars.len(), "variable index out of range");
            }
            match out.last_mut() {
                Some((lc, lm)) if *lm == m => *lc += c,
                _ => {
                    out.push((c, m));
                    continue;
                }
            }
            if out.last().map(|(lc, _)| lc.is_zero()).unwrap_or(false) {
                out.pop();
            }
        }
        out.retain(|(c, _)| !c.is_zero());
        Polynomial { vars, terms: out }
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of a monomial (zero when absent).
    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms
            .iter()
            .find(|(_, tm)| tm == m)
            .map(|(c, _)| c.clone())
            .unwrap_or_else(Scalar::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(_, m)| m.total_degree()).max()
    }

    fn check_table(&self, other: &Self) -> Result<()> {
        if same_table(&self.vars, &other.vars) {
            Ok(())
        } else {
            Err(Error::VarTableMismatch(
                "operands were built over different variable tables".into(),
            ))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_table(other)?;
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ca, ma) = &self.terms[i];
            let (cb, mb) = &other.terms[j];
            match mb.cmp(ma) {
                Ordering::Less => {
                    terms.push((ca.clone(), ma.clone()));
                    i += 1;
                }
                Ordering::Greater => {
                    terms.push((cb.clone(), mb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca + cb;
                    if !c.is_zero() {
                        terms.push((c, ma.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        terms.extend_from_slice(&other.terms[j..]);
        Ok(Polynomial { vars: self.vars.clone(), terms })
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(c, m)| (-c, m.clone())).collect();
        Polynomial { vars: self.vars.clone(), terms }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Multiplies by the term `c * m` in one pass; sortedness is preserved
    /// because the canonical order is multiplicative.
    pub fn mul_term(&self, c: &Scalar, m: &Monomial) -> Self {
        if c.is_zero() {
            return Polynomial::zero(self.vars.clone());
        }
        let terms = self.terms.iter().map(|(tc, tm)| (tc * c, tm.mul(m))).collect();
        Polynomial { vars: self.vars.clone(), terms }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        self.mul_term(c, &Monomial::one())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_table(other)?;
        let mut acc = Polynomial::zero(self.vars.clone());
        for (c, m) in &other.terms {
            acc = acc.add(&self.mul_term(c, m))?;
        }
        Ok(acc)
    }

    /// `self - (c * m) * g`, the inner step of polynomial division.
    pub fn sub_mul_term(&self, c: &Scalar, m: &Monomial, g: &Self) -> Result<Self> {
        self.sub(&g.mul_term(c, m))
    }

    /// Leading term under the given order. Errors on the zero polynomial.
    pub fn leading_term(&self, ord: &TermOrder) -> Result<(&Scalar, &Monomial)> {
        let mut best: Option<&Term> = None;
        for term in &self.terms {
            best = match best {
                None => Some(term),
                Some(b) => {
                    if ord.compare(&term.1, &b.1) == Ordering::Greater {
                        Some(term)
                    } else {
                        Some(b)
                    }
                }
            };
        }
        best.map(|(c, m)| (c, m)).ok_or(Error::ZeroLeadingTerm)
    }

    /// Divides by the leading coefficient so the leading term has coefficient 1.
    pub fn monic(&self, ord: &TermOrder) -> Result<Self> {
        let (lc, _) = self.leading_term(ord)?;
        let inv = Scalar::one() / lc.clone();
        Ok(self.scale(&inv))
    }

    /// True when the polynomial is a difference of two monic monomials.
    pub fn is_pure_binomial(&self) -> bool {
        self.terms.len() == 2
            && self.terms.iter().any(|(c, _)| c.is_one())
            && self.terms.iter().any(|(c, _)| (-c).is_one())
    }

    /// Rebuilds this polynomial over another table, translating variables by name.
    /// Errors when a used variable has no counterpart in the target table.
    pub fn transfer(&self, target: &Arc<VarTable>) -> Result<Self> {
        let mut remap: Vec<Option<usize>> = vec![None; self.vars.len()];
        let mut terms = Vec::with_capacity(self.terms.len());
        for (c, m) in &self.terms {
            let mut exps = Vec::new();
            for v in m.support() {
                let new = match remap[v] {
                    Some(n) => n,
                    None => {
                        let name = self.vars.name(v);
                        let n = target.index_of(name).ok_or_else(|| {
                            Error::VarTableMismatch(format!(
                                "variable {name:?} is absent from the target table"
                            ))
                        })?;
                        remap[v] = Some(n);
                        n
                    }
                };
                exps.push((new, m.degree_of(v)));
            }
            terms.push((c.clone(), Monomial::from_exps(exps)));
        }
        Ok(Polynomial::from_terms(target.clone(), terms))
    }
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

/// How factors inside a monomial are joined in text output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MulStyle {
    /// `e1e2e3` (juxtaposition).
    Implicit,
    /// `e1*e2*e3`.
    Explicit,
}

fn format_monomial(m: &Monomial, vars: &VarTable, style: MulStyle) -> String {
    let sep = match style {
        MulStyle::Implicit => "",
        MulStyle::Explicit => "*",
    };
    let mut parts = Vec::new();
    for &(v, e) in &m.exps {
        if e == 1 {
            parts.push(vars.name(v).to_string());
        } else {
            parts.push(format!("{}^{}", vars.name(v), e));
        }
    }
    parts.join(sep)
}

impl Polynomial {
    /// Renders terms sorted descending under `ord`.
    pub fn to_text(&self, ord: &TermOrder, style: MulStyle) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut sorted: Vec<&Term> = self.terms.iter().collect();
        sorted.sort_by(|a, b| ord.compare(&b.1, &a.1));
        let mut out = String::new();
        for (i, (c, m)) in sorted.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    if matches!(style, MulStyle::Explicit) {
                        out.push('*');
                    }
                }
                out.push_str(&format_monomial(m, &self.vars, style));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    /// Canonical rendering: terms descending under the canonical order,
    /// implicit multiplication, e.g. `e1e2e3 - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (i, (c, m)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                }
                out.push_str(&format_monomial(m, &self.vars, MulStyle::Implicit));
            }
        }
        write!(f, "{out}")
    }
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------
