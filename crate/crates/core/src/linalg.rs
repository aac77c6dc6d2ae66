//! Exact integer matrix algorithms: Hermite and Smith normal forms, kernel
//! bases, lattice sums, quotient invariants and coordinate ideals.
//!
//! Entries are arbitrary-precision integers throughout; normal-form
//! intermediates can exceed machine words even for small inputs. Lattice
//! bases are always stored HNF-reduced, so two lattices are equal exactly
//! when their stored bases are equal.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense row-major matrix over the integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> IntMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        IntMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Convenience constructor from machine integers, mostly for tests.
    pub fn from_i64(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    /// Applies the matrix to a column vector.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// New matrix made of the selected rows.
    pub fn select_rows(&self, indices: &[usize]) -> IntMatrix {
        IntMatrix::from_rows(indices.iter().map(|&i| self.row(i).to_vec()).collect())
    }

    /// Drops all-zero rows; used after HNF reduction.
    pub fn drop_zero_rows(&self) -> IntMatrix {
        let rows: Vec<Vec<BigInt>> = (0..self.rows)
            .filter(|&i| self.row(i).iter().any(|x| !x.is_zero()))
            .map(|i| self.row(i).to_vec())
            .collect();
        if rows.is_empty() {
            IntMatrix::zeros(0, self.cols)
        } else {
            IntMatrix::from_rows(rows)
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -std::mem::take(&mut self[(i, j)]);
            self[(i, j)] = v;
        }
    }

    /// `row[to] -= q * row[from]`
    fn submul_row(&mut self, to: usize, from: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let d = q * &self[(from, j)];
            self[(to, j)] -= d;
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `col[to] -= q * col[from]`
    fn submul_col(&mut self, to: usize, from: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let d = q * &self[(i, from)];
            self[(i, to)] -= d;
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[(k, k)] * &m[(i, j)] - &m[(i, k)] * &m[(k, j)];
                    let (q, r) = num.div_rem(&prev);
                    debug_assert!(r.is_zero());
                    m[(i, j)] = q;
                }
                m[(i, k)] = BigInt::zero();
            }
            prev = m[(k, k)].clone();
        }
        sign * m[(n - 1, n - 1)].clone()
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(
                f,
                "  [{}]",
                self.row(i)
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )?;
        }
        Ok(())
    }
}

/// Row-style Hermite normal form `H` with a unimodular `U` such that
/// `U * A = H`.
///
/// Convention: row echelon with positive pivots, entries above each pivot
/// reduced into `[0, pivot)`. Zero rows sink to the bottom.
pub fn hnf(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = a.clone();
    let mut u = IntMatrix::identity(a.rows());
    let (m, n) = (a.rows(), a.cols());
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        loop {
            // smallest nonzero entry of column c at or below row r
            let Some(imin) = (r..m)
                .filter(|&i| !h[(i, c)].is_zero())
                .min_by_key(|&i| h[(i, c)].abs())
            else {
                break;
            };
            h.swap_rows(r, imin);
            u.swap_rows(r, imin);
            let mut done = true;
            for i in r + 1..m {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let q = &h[(i, c)] / &h[(r, c)];
                h.submul_row(i, r, &q);
                u.submul_row(i, r, &q);
                if !h[(i, c)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = h[(i, c)].div_floor(&h[(r, c)]);
            h.submul_row(i, r, &q);
            u.submul_row(i, r, &q);
        }
        r += 1;
    }
    (h, u)
}

/// Smith normal form `D = U * A * V` with unimodular transforms.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// The nonzero diagonal entries `d_1 | d_2 | …`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .filter(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Computes the Smith normal form. Diagonal entries are non-negative, each
/// divides the next, and zeros trail.
pub fn snf(a: &IntMatrix) -> SmithDecomposition {
    let mut d = a.clone();
    let mut u = IntMatrix::identity(a.rows());
    let mut v = IntMatrix::identity(a.cols());
    let (m, n) = (a.rows(), a.cols());
    let mut t = 0;
    'outer: while t < m.min(n) {
        // smallest nonzero entry of the trailing submatrix
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if d[(i, j)].is_zero() {
                    continue;
                }
                let better = match pivot {
                    None => true,
                    Some((pi, pj)) => d[(i, j)].abs() < d[(pi, pj)].abs(),
                };
                if better {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        // clear row and column t; each pass strictly shrinks |d[t][t]| when
        // a division is inexact, so this terminates
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = &d[(i, t)] / &d[(t, t)];
                d.submul_row(i, t, &q);
                u.submul_row(i, t, &q);
                if !d[(i, t)].is_zero() {
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..n {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = &d[(t, j)] / &d[(t, t)];
                d.submul_col(j, t, &q);
                v.submul_col(j, t, &q);
                if !d[(t, j)].is_zero() {
                    d.swap_cols(t, j);
                    v.swap_cols(t, j);
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
        }

        // divisibility fix-up: fold in any entry the pivot does not divide
        for i in t + 1..m {
            for j in t + 1..n {
                if !(&d[(i, j)] % &d[(t, t)]).is_zero() {
                    let one = BigInt::from(-1);
                    d.submul_row(t, i, &one);
                    u.submul_row(t, i, &one);
                    continue 'outer;
                }
            }
        }
        t += 1;
    }
    for i in 0..m.min(n) {
        if d[(i, i)].is_negative() {
            d.negate_row(i);
            u.negate_row(i);
        }
    }
    SmithDecomposition { d, u, v }
}

/// HNF-reduced basis of the integer kernel `{x : A xᵀ = 0}`, one basis vector
/// per row.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    // Row-reduce Aᵀ; rows of U opposite the zero rows of H kill A.
    let (h, u) = hnf(&a.transpose());
    let rows: Vec<Vec<BigInt>> = (0..h.rows())
        .filter(|&i| h.row(i).iter().all(Zero::is_zero))
        .map(|i| u.row(i).to_vec())
        .collect();
    if rows.is_empty() {
        return IntMatrix::zeros(0, a.cols());
    }
    let (reduced, _) = hnf(&IntMatrix::from_rows(rows));
    reduced.drop_zero_rows()
}

/// HNF basis of the subgroup of `Z^ambient_dim` generated by all rows of all
/// inputs.
pub fn lattice_sum(bases: &[&IntMatrix], ambient_dim: usize) -> Result<IntMatrix> {
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for b in bases {
        if b.cols() != ambient_dim && b.rows() > 0 {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                found: b.cols(),
            });
        }
        rows.extend(b.row_vecs());
    }
    if rows.is_empty() {
        return Ok(IntMatrix::zeros(0, ambient_dim));
    }
    let (h, _) = hnf(&IntMatrix::from_rows(rows));
    Ok(h.drop_zero_rows())
}

/// Expresses `target` as an integer combination of the rows of the HNF basis
/// `h`, returning the coefficients, or `None` if it is not in the lattice.
pub fn solve_in_span(h: &IntMatrix, target: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(h.cols(), target.len());
    let mut residue = target.to_vec();
    let mut coeffs = vec![BigInt::zero(); h.rows()];
    for i in 0..h.rows() {
        let Some(p) = h.row(i).iter().position(|x| !x.is_zero()) else {
            continue;
        };
        let (q, r) = residue[p].div_rem(&h[(i, p)]);
        if !r.is_zero() {
            return None;
        }
        for j in 0..h.cols() {
            let d = &q * &h[(i, j)];
            residue[j] -= d;
        }
        coeffs[i] = q;
    }
    residue.iter().all(Zero::is_zero).then_some(coeffs)
}

/// True iff `v` lies in the lattice spanned by the rows of the HNF basis `h`.
pub fn lattice_contains(h: &IntMatrix, v: &[BigInt]) -> bool {
    solve_in_span(h, v).is_some()
}

/// Invariants of a lattice quotient `L1/L2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientInvariants {
    /// Rank of the free part, `rank L1 - rank L2`.
    pub free_rank: usize,
    /// Torsion divisibility chain `d_1 | d_2 | …` with every `d_i > 1`.
    pub torsion: Vec<BigInt>,
}

impl QuotientInvariants {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

/// Invariants of `L1/L2` for `L2 ⊆ L1`, given by bases (rows).
///
/// Every row of `small` is written in coordinates relative to `big`; the SNF
/// of the coordinate matrix gives the torsion chain, factors of 1 dropped.
pub fn quotient_invariants(big: &IntMatrix, small: &IntMatrix) -> Result<QuotientInvariants> {
    if small.rows() > 0 && small.cols() != big.cols() {
        return Err(Error::DimensionMismatch {
            expected: big.cols(),
            found: small.cols(),
        });
    }
    let (h, _) = hnf(big);
    let h = h.drop_zero_rows();
    let rank_big = h.rows();
    if small.rows() == 0 {
        return Ok(QuotientInvariants {
            free_rank: rank_big,
            torsion: Vec::new(),
        });
    }
    let mut coords: Vec<Vec<BigInt>> = Vec::with_capacity(small.rows());
    for i in 0..small.rows() {
        let c = solve_in_span(&h, small.row(i)).ok_or(Error::NotSublattice)?;
        coords.push(c);
    }
    let coord_matrix = IntMatrix::from_rows(coords);
    let dec = snf(&coord_matrix);
    let torsion: Vec<BigInt> = dec
        .invariant_factors()
        .into_iter()
        .filter(|d| !d.is_one())
        .collect();
    Ok(QuotientInvariants {
        free_rank: rank_big - dec.rank(),
        torsion,
    })
}

/// The non-negative generator of the ideal `{x_coord : x ∈ rowspan(L)}` of
/// `Z`: a gcd of the column, 0 for a zero projection.
pub fn coordinate_ideal(basis: &IntMatrix, coord: usize) -> BigInt {
    assert!(coord < basis.cols());
    let mut g = BigInt::zero();
    for i in 0..basis.rows() {
        g = g.gcd(&basis[(i, coord)]);
    }
    g
}
