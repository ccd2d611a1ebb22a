//! Toric ideals of integer matrices, computed by two independent routes.
//!
//! A matrix M with n columns defines the monomial map π(X_j) = ∏_i t_i^{m_ij}
//! (columns index the X variables, rows the t variables; negative entries mean
//! inverse powers). Its toric ideal I_M = ker π is computed:
//!
//! - by **elimination**: adjoin t_i for every row and z_i = t_i^{-1} for rows
//!   with negative entries, write X_j − ∏ t^{+} z^{−} and t_i z_i − 1, then
//!   intersect with K[X] ([`toric_by_elimination`]);
//! - by **saturation**: start from the lattice ideal of a basis of the integer
//!   kernel of M and saturate at each variable in turn
//!   ([`toric_by_saturation`]).
//!
//! The two routes must agree generator-for-generator after reduction, which
//! the analysis layer exploits as a cross-check.
//!
//! The kernel basis comes from a column Hermite reduction with a tracked
//! unimodular transform, so it generates the *full* integer kernel
//! ker_Q(M) ∩ Z^n as a Z-module. A rational kernel basis scaled to integer
//! vectors is not enough: for M = [[2,1,1]] it spans an index-2 sublattice
//! and the saturation route would then compute the wrong ideal.

use std::sync::Arc;

use num::{BigInt, Integer, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::groebner::{ElimStrategy, IdealBasis};
use crate::poly::order::TermOrder;
use crate::poly::{Monomial, Polynomial, VarTable};

// ---------------------------------------------------------------------------
// Integer matrices
// ---------------------------------------------------------------------------

/// A dense integer matrix with exact (arbitrary-precision) entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Usage(format!(
                "matrix wants {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Usage("ragged rows in matrix".into()));
        }
        let entries = rows.into_iter().flatten().map(BigInt::from).collect();
        IntMatrix::new(r, c, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row * self.cols + col]
    }

    /// M·v for an integer vector of length `cols`.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.entry(r, c) * &v[c]).sum())
            .collect()
    }

    /// Rational rank, read off the kernel dimension.
    pub fn rank(&self) -> usize {
        self.cols - integer_kernel_basis(self).vectors().len()
    }
}

// ---------------------------------------------------------------------------
// Integer kernels
// ---------------------------------------------------------------------------

/// A Z-basis of a saturated integer lattice; vectors are primitive and
/// linearly independent over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeBasis {
    dim: usize,
    vectors: Vec<Vec<BigInt>>,
}

impl LatticeBasis {
    /// Wraps explicit vectors, checking length, primitivity, and independence.
    pub fn new(dim: usize, vectors: Vec<Vec<i64>>) -> Result<Self> {
        let vectors: Vec<Vec<BigInt>> = vectors
            .into_iter()
            .map(|v| v.into_iter().map(BigInt::from).collect())
            .collect();
        for v in &vectors {
            if v.len() != dim {
                return Err(Error::Usage("lattice vector of wrong length".into()));
            }
            if !is_primitive(v) {
                return Err(Error::Usage(format!("lattice vector {v:?} is not primitive")));
            }
        }
        if rational_rank(&vectors, dim) != vectors.len() {
            return Err(Error::Usage("lattice vectors are linearly dependent".into()));
        }
        Ok(LatticeBasis { dim, vectors })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vectors(&self) -> &[Vec<BigInt>] {
        &self.vectors
    }
}

fn is_primitive(v: &[BigInt]) -> bool {
    let mut g = BigInt::zero();
    for x in v {
        g = g.gcd(x);
    }
    g == BigInt::from(1)
}

/// Rank of a set of integer vectors via fraction-free row elimination.
fn rational_rank(vectors: &[Vec<BigInt>], dim: usize) -> usize {
    let mut m: Vec<Vec<BigInt>> = vectors.to_vec();
    let mut rank = 0;
    for col in 0..dim {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let pivot_row = m[rank].clone();
        let a = pivot_row[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let b = row[col].clone();
                for (entry, p) in row.iter_mut().zip(&pivot_row) {
                    *entry = &*entry * &a - p * &b;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// A Z-basis of {v ∈ Z^cols : M·v = 0}.
///
/// Column Hermite reduction: unimodular column operations drive M to column
/// echelon form while the same operations accumulate in a transform U; the
/// transform columns under the zero columns of the echelon form are exactly a
/// basis of the integer kernel. Vectors are sign-normalized (first nonzero
/// entry positive) and sorted for reproducible output.
pub fn integer_kernel_basis(m: &IntMatrix) -> LatticeBasis {
    let cols = m.cols;
    // work[j] = j-th column of the evolving matrix; trans[j] = j-th column of U.
    let mut work: Vec<Vec<BigInt>> = (0..cols)
        .map(|j| (0..m.rows).map(|r| m.entry(r, j).clone()).collect())
        .collect();
    let mut trans: Vec<Vec<BigInt>> = (0..cols)
        .map(|j| (0..cols).map(|i| BigInt::from(usize::from(i == j) as i64)).collect())
        .collect();
    let mut lead = 0;
    for r in 0..m.rows {
        loop {
            let nonzero: Vec<usize> =
                (lead..cols).filter(|&j| !work[j][r].is_zero()).collect();
            match nonzero.len() {
                0 => break,
                1 => {
                    let j = nonzero[0];
                    work.swap(lead, j);
                    trans.swap(lead, j);
                    lead += 1;
                    break;
                }
                _ => {
                    let jmin = nonzero
                        .iter()
                        .copied()
                        .min_by(|&a, &b| work[a][r].abs().cmp(&work[b][r].abs()))
                        .expect("nonempty");
                    let pivot_col = work[jmin].clone();
                    let pivot_trans = trans[jmin].clone();
                    for &j in &nonzero {
                        if j == jmin {
                            continue;
                        }
                        let q = work[j][r].div_floor(&pivot_col[r]);
                        if q.is_zero() {
                            continue;
                        }
                        for (entry, p) in work[j].iter_mut().zip(&pivot_col) {
                            *entry -= &q * p;
                        }
                        for (entry, p) in trans[j].iter_mut().zip(&pivot_trans) {
                            *entry -= &q * p;
                        }
                    }
                }
            }
        }
    }
    let mut vectors: Vec<Vec<BigInt>> = trans.split_off(lead);
    for v in &mut vectors {
        if let Some(first) = v.iter().find(|x| !x.is_zero()) {
            if first.is_negative() {
                for x in v.iter_mut() {
                    *x = -x.clone();
                }
            }
        }
        // A basis vector of a saturated lattice is automatically primitive.
        debug_assert!(is_primitive(v));
    }
    vectors.sort();
    for v in &vectors {
        debug_assert!(m.apply(v).iter().all(BigInt::is_zero));
    }
    LatticeBasis { dim: cols, vectors }
}

// ---------------------------------------------------------------------------
// Lattice and toric ideals
// ---------------------------------------------------------------------------

fn exponent(x: &BigInt) -> Result<u32> {
    x.to_u32().ok_or_else(|| Error::Structural(format!("kernel entry {x} exceeds exponent range")))
}

/// Splits a lattice vector u into the binomial X^{u+} − X^{u−}.
pub(crate) fn vector_binomial(u: &[BigInt], vars: &Arc<VarTable>) -> Result<Polynomial> {
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for (j, x) in u.iter().enumerate() {
        if x.is_positive() {
            plus.push((j, exponent(x)?));
        } else if x.is_negative() {
            minus.push((j, exponent(&-x)?));
        }
    }
    let pos = Polynomial::from_monomial(vars.clone(), Monomial::from_exps(plus));
    let neg = Polynomial::from_monomial(vars.clone(), Monomial::from_exps(minus));
    pos.sub(&neg)
}

/// The lattice ideal of a basis: one binomial X^{u+} − X^{u−} per vector.
pub fn lattice_ideal(
    basis: &LatticeBasis,
    vars: &Arc<VarTable>,
    ord: &TermOrder,
) -> Result<IdealBasis> {
    if basis.dim() != vars.len() {
        return Err(Error::Usage(format!(
            "lattice dimension {} != variable count {}",
            basis.dim(),
            vars.len()
        )));
    }
    let gens = basis
        .vectors()
        .iter()
        .map(|u| vector_binomial(u, vars))
        .collect::<Result<Vec<_>>>()?;
    IdealBasis::new(vars.clone(), ord.clone(), gens)
}

fn check_shape(m: &IntMatrix, vars: &Arc<VarTable>) -> Result<()> {
    if m.cols() == vars.len() {
        Ok(())
    } else {
        Err(Error::Usage(format!(
            "matrix has {} columns but the table names {} variables",
            m.cols(),
            vars.len()
        )))
    }
}

/// Unique name with the given stem against a running set of used names.
fn uniquify(stem: String, used: &mut Vec<String>) -> String {
    let mut name = stem.clone();
    let mut k = 0;
    while used.contains(&name) {
        name = format!("{stem}_{k}");
        k += 1;
    }
    used.push(name.clone());
    name
}

/// Toric ideal via the extended ring: reduced basis of
/// (X_j − ∏ t_i^{m+}·z_i^{m−}, t_i z_i − 1) ∩ K[X] under `ord`.
pub fn toric_by_elimination(
    m: &IntMatrix,
    vars: &Arc<VarTable>,
    ord: &TermOrder,
    strategy: ElimStrategy,
) -> Result<IdealBasis> {
    check_shape(m, vars)?;
    let mut names: Vec<String> = vars.names().map(str::to_string).collect();
    let t_vars: Vec<String> =
        (0..m.rows()).map(|i| uniquify(format!("t{}", i + 1), &mut names)).collect();
    // z_i = t_i^{-1}, adjoined only for rows that actually use a negative power.
    let z_vars: Vec<Option<String>> = (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .any(|j| m.entry(i, j).is_negative())
                .then(|| uniquify(format!("z{}", i + 1), &mut names))
        })
        .collect();
    let big_table = VarTable::new(names)?;
    let idx = |name: &str| big_table.index_of(name).expect("name registered");

    let mut gens: Vec<Polynomial> = Vec::new();
    for j in 0..m.cols() {
        let mut image = Vec::new();
        for i in 0..m.rows() {
            let e = m.entry(i, j);
            if e.is_positive() {
                image.push((idx(&t_vars[i]), exponent(e)?));
            } else if e.is_negative() {
                let z = z_vars[i].as_ref().expect("negative row has inverse");
                image.push((idx(z), exponent(&-e)?));
            }
        }
        let x_j = Polynomial::var(big_table.clone(), idx(vars.name(j)));
        let monomial = Polynomial::from_monomial(big_table.clone(), Monomial::from_exps(image));
        gens.push(x_j.sub(&monomial)?);
    }
    for (i, z) in z_vars.iter().enumerate() {
        if let Some(z) = z {
            let rel = Polynomial::var(big_table.clone(), idx(&t_vars[i]))
                .mul(&Polynomial::var(big_table.clone(), idx(z)))?
                .sub(&Polynomial::one(big_table.clone()))?;
            gens.push(rel);
        }
    }

    let mut priority: Vec<usize> =
        ord.priority().iter().map(|&j| idx(vars.name(j))).collect();
    priority.extend((vars.len()..big_table.len()).collect::<Vec<_>>());
    let big_order = TermOrder::grevlex_with(priority)?;
    let drop: Vec<bool> = (0..big_table.len()).map(|v| v >= vars.len()).collect();
    let extended = IdealBasis::new(big_table, big_order, gens)?;
    let eliminated = extended.eliminate(&drop, strategy)?;
    present_under(eliminated, vars, ord)
}

/// Toric ideal via the kernel lattice: saturate the lattice ideal at each
/// variable, ascending.
pub fn toric_by_saturation(
    m: &IntMatrix,
    vars: &Arc<VarTable>,
    ord: &TermOrder,
) -> Result<IdealBasis> {
    check_shape(m, vars)?;
    let kernel = integer_kernel_basis(m);
    let mut ideal = lattice_ideal(&kernel, vars, ord)?.reduced_groebner()?;
    for j in 0..vars.len() {
        ideal = ideal.saturate(&Polynomial::var(vars.clone(), j))?;
    }
    ideal.reduce_basis()
}

/// Rebuilds a basis over the caller's table and order (recomputing the
/// reduced basis when the order differs from the one the generators carry).
pub(crate) fn present_under(
    basis: IdealBasis,
    vars: &Arc<VarTable>,
    ord: &TermOrder,
) -> Result<IdealBasis> {
    let gens: Vec<Polynomial> = basis
        .generators()
        .iter()
        .map(|g| g.transfer(vars))
        .collect::<Result<_>>()?;
    if basis.order() == ord {
        let rebuilt = IdealBasis::new(vars.clone(), ord.clone(), gens)?;
        return rebuilt.buchberger()?.reduce_basis();
    }
    IdealBasis::new(vars.clone(), ord.clone(), gens)?.reduced_groebner()
}
