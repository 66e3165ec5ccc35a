//! Dense integer matrices and Smith normal form.
//!
//! The SNF here is the classical smallest-pivot algorithm with full row and
//! column reduction: `d = u · m · v` with `u`, `v` unimodular, `d` diagonal,
//! non-negative, and `d₁ | d₂ | …`. Entries are arbitrary-precision
//! (`BigInt`); intermediate growth over `Z` is unbounded, so machine words
//! are not an option.
//!
//! On top of SNF sit the two quotient constructions everything else uses:
//! [`cokernel`] reads off `Z^rows / im(m)`, and [`homology_of_pair`] computes
//! `ker b / im a` for a composable pair with `b·a = 0` — the workhorse of
//! the Koszul and Tor oracles.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ExtAb;

/// Dense row-major matrix over `Z`. Zero-sized shapes are allowed.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Scalar multiple of the identity.
    pub fn scalar(n: usize, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    /// Build from row-major `i64` data; panics if shapes disagree.
    pub fn from_rows(rows: usize, cols: usize, data: &[i64]) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows x cols");
        IntMatrix {
            rows,
            cols,
            entries: data.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
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
        assert_eq!(self.cols, other.rows, "inner dimensions must match");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = &self[(i, k)] * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    /// Kronecker product: `(a ⊗ b)[(i·br + k, j·bc + l)] = a[i,j]·b[k,l]`.
    pub fn kronecker(&self, other: &IntMatrix) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self[(i, j)].is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out[(i * other.rows + k, j * other.cols + l)] =
                            &self[(i, j)] * &other[(k, l)];
                    }
                }
            }
        }
        out
    }

    /// `[self | other]` side by side.
    pub fn hstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows, "row counts must match");
        let mut out = IntMatrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                out[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    /// `[self; other]` stacked.
    pub fn vstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.cols, "column counts must match");
        let mut out = IntMatrix::zeros(self.rows + other.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..self.cols {
                out[(self.rows + i, j)] = other[(i, j)].clone();
            }
        }
        out
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    /// Submatrix of the listed rows, in order.
    pub fn select_rows(&self, rows: &[usize]) -> IntMatrix {
        let mut out = IntMatrix::zeros(rows.len(), self.cols);
        for (ri, &r) in rows.iter().enumerate() {
            for j in 0..self.cols {
                out[(ri, j)] = self[(r, j)].clone();
            }
        }
        out
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant needs a square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let swap = (k + 1..n).find(|&i| !a[(i, k)].is_zero());
                match swap {
                    Some(i) => {
                        for j in 0..n {
                            a.entries.swap(k * n + j, i * n + j);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = num.div_floor(&prev);
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * a[(n - 1, n - 1)].clone()
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Result of [`smith_normal_form`]: `d = u·m·v` with tracked inverses,
/// so `m = u_inv·d·v_inv` as well.
#[derive(Clone, Debug)]
pub struct Snf {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

impl Snf {
    /// Number of nonzero diagonal entries; they occupy positions `0..rank`.
    pub fn rank(&self) -> usize {
        let n = self.d.rows().min(self.d.cols());
        (0..n).take_while(|&i| !self.d[(i, i)].is_zero()).count()
    }

    /// Nonzero diagonal entries `d₁ | d₂ | …`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank()).map(|i| self.d[(i, i)].clone()).collect()
    }
}

struct SnfWorker {
    b: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl SnfWorker {
    fn row_swap(&mut self, r1: usize, r2: usize) {
        if r1 == r2 {
            return;
        }
        for m in [&mut self.b, &mut self.u] {
            let cols = m.cols;
            for j in 0..cols {
                m.entries.swap(r1 * cols + j, r2 * cols + j);
            }
        }
        // (swap)⁻¹ = swap, applied to columns of u_inv
        let m = &mut self.u_inv;
        for i in 0..m.rows {
            m.entries.swap(i * m.cols + r1, i * m.cols + r2);
        }
    }

    fn col_swap(&mut self, c1: usize, c2: usize) {
        if c1 == c2 {
            return;
        }
        for i in 0..self.b.rows {
            self.b
                .entries
                .swap(i * self.b.cols + c1, i * self.b.cols + c2);
        }
        for i in 0..self.v.rows {
            self.v
                .entries
                .swap(i * self.v.cols + c1, i * self.v.cols + c2);
        }
        let m = &mut self.v_inv;
        let cols = m.cols;
        for j in 0..cols {
            m.entries.swap(c1 * cols + j, c2 * cols + j);
        }
    }

    /// row r1 += c · row r2
    fn row_addmul(&mut self, r1: usize, r2: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for m in [&mut self.b, &mut self.u] {
            for j in 0..m.cols {
                let add = c * &m.entries[r2 * m.cols + j];
                m.entries[r1 * m.cols + j] += add;
            }
        }
        // inverse op on u_inv columns: col r2 -= c · col r1
        let m = &mut self.u_inv;
        for i in 0..m.rows {
            let sub = c * &m.entries[i * m.cols + r1];
            m.entries[i * m.cols + r2] -= sub;
        }
    }

    /// col c1 += c · col c2
    fn col_addmul(&mut self, c1: usize, c2: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for i in 0..self.b.rows {
            let add = c * &self.b.entries[i * self.b.cols + c2];
            self.b.entries[i * self.b.cols + c1] += add;
        }
        for i in 0..self.v.rows {
            let add = c * &self.v.entries[i * self.v.cols + c2];
            self.v.entries[i * self.v.cols + c1] += add;
        }
        // inverse op on v_inv rows: row c2 -= c · row c1
        let m = &mut self.v_inv;
        for j in 0..m.cols {
            let sub = c * &m.entries[c1 * m.cols + j];
            m.entries[c2 * m.cols + j] -= sub;
        }
    }

    fn row_negate(&mut self, r: usize) {
        for m in [&mut self.b, &mut self.u] {
            for j in 0..m.cols {
                let e = &mut m.entries[r * m.cols + j];
                *e = -std::mem::take(e);
            }
        }
        let m = &mut self.u_inv;
        for i in 0..m.rows {
            let e = &mut m.entries[i * m.cols + r];
            *e = -std::mem::take(e);
        }
    }

    /// Smallest nonzero |entry| in the trailing submatrix starting at (k, k).
    fn min_pivot(&self, k: usize) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), BigInt)> = None;
        for i in k..self.b.rows {
            for j in k..self.b.cols {
                let a = self.b[(i, j)].abs();
                if a.is_zero() {
                    continue;
                }
                match &best {
                    Some((_, cur)) if *cur <= a => {}
                    _ => best = Some(((i, j), a)),
                }
            }
        }
        best.map(|(pos, _)| pos)
    }
}

/// Smith normal form with unimodular transforms and their inverses.
///
/// Pivot strategy: smallest nonzero absolute value, full row/column
/// reduction, then a divisibility sweep that folds any non-multiple of the
/// pivot back into its row. Termination: each re-entry strictly shrinks
/// the pivot's absolute value.
pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let mut w = SnfWorker {
        b: m.clone(),
        u: IntMatrix::identity(m.rows()),
        u_inv: IntMatrix::identity(m.rows()),
        v: IntMatrix::identity(m.cols()),
        v_inv: IntMatrix::identity(m.cols()),
    };
    let steps = m.rows().min(m.cols());

    'stage: for k in 0..steps {
        loop {
            let Some((pi, pj)) = w.min_pivot(k) else {
                break 'stage; // trailing submatrix is zero
            };
            w.row_swap(k, pi);
            w.col_swap(k, pj);

            let mut clean = true;
            for i in k + 1..w.b.rows {
                let q = w.b[(i, k)].div_rem(&w.b[(k, k)]).0;
                w.row_addmul(i, k, &-q);
                if !w.b[(i, k)].is_zero() {
                    clean = false;
                }
            }
            for j in k + 1..w.b.cols {
                let q = w.b[(k, j)].div_rem(&w.b[(k, k)]).0;
                w.col_addmul(j, k, &-q);
                if !w.b[(k, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue; // leftover residues are smaller than the pivot
            }

            // Divisibility sweep: the pivot must divide everything below-right.
            let pivot = w.b[(k, k)].clone();
            let offender = (k + 1..w.b.rows)
                .find(|&i| (k + 1..w.b.cols).any(|j| !w.b[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    w.row_addmul(k, i, &BigInt::one());
                    continue;
                }
                None => break,
            }
        }
        if w.b[(k, k)].is_negative() {
            w.row_negate(k);
        }
    }

    Snf {
        d: w.b,
        u: w.u,
        u_inv: w.u_inv,
        v: w.v,
        v_inv: w.v_inv,
    }
}

/// Isomorphism class of `Z^rows / im(m)` for `m : Z^cols → Z^rows`:
/// one `Z` per missing or zero diagonal entry, one `Z/d` per entry `d ≥ 2`.
pub fn cokernel(m: &IntMatrix) -> ExtAb {
    let snf = smith_normal_form(m);
    let mut torsion = Vec::new();
    for d in snf.invariant_factors() {
        let d = d.to_biguint().expect("SNF diagonal is non-negative");
        if !d.is_one() {
            torsion.push(d);
        }
    }
    let free = m.rows() - snf.rank();
    ExtAb::new(free, torsion, 0)
}

/// Homology `ker b / im a` of the composable pair
/// `Z^cols(a) --a--> Z^rows(a) --b--> Z^rows(b)` with `b·a = 0`.
///
/// The kernel of `b` is spanned by the columns of `v` past the SNF rank;
/// `v⁻¹·a` expresses `im a` in that basis, and the quotient is a cokernel.
pub fn homology_of_pair(a: &IntMatrix, b: &IntMatrix) -> ExtAb {
    assert_eq!(a.rows(), b.cols(), "pair is not composable");
    debug_assert!(b.mul(a).is_zero(), "b . a must vanish");

    let snf_b = smith_normal_form(b);
    let rank = snf_b.rank();
    let kernel_indices: Vec<usize> = (rank..b.cols()).collect();

    let coords = snf_b.v_inv.mul(a);
    // Rows at non-kernel indices vanish because b·a = 0.
    debug_assert!((0..rank).all(|i| (0..a.cols()).all(|j| coords[(i, j)].is_zero())));
    let in_kernel_basis = coords.select_rows(&kernel_indices);
    cokernel(&in_kernel_basis)
}
