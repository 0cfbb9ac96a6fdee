//! Sparse linear algebra behind the scheme: block systems over free dofs with
//! boundary lifting and zero-mean borders, a cached-symbolic LU direct solver
//! with iterative refinement, and LU-preconditioned GMRES for matrices that
//! drift slowly between solves.
//!
//! Everything runs sequentially and accumulates in a fixed order, so repeated
//! runs on the same input produce bit-identical results.

use faer::prelude::*;
use faer::sparse::linalg::solvers::{Llt, Lu, SymbolicLlt, SymbolicLu};
use faer::sparse::{SparseColMat, Triplet};
use faer::Side;
use std::sync::Once;

use crate::forms::Coo;
use crate::spaces::DofMap;

/// Default relative-residual target for all linear solves.
pub const DEFAULT_TOL: f64 = 1e-10;

static SEQ: Once = Once::new();

fn ensure_sequential() {
    SEQ.call_once(|| faer::set_global_parallelism(faer::Par::Seq));
}

pub(crate) fn norm2(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn vdot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn to_mat(v: &[f64]) -> Mat<f64> {
    Mat::from_fn(v.len(), 1, |i, _| v[i])
}

fn to_vec(m: &Mat<f64>) -> Vec<f64> {
    (0..m.nrows()).map(|i| m[(i, 0)]).collect()
}

/// Compressed sparse rows; used for residuals and Krylov matrix-vector
/// products where a plain deterministic `y = Ax` is all that is needed.
#[derive(Clone, Debug)]
pub struct Csr {
    pub nrows: usize,
    pub ncols: usize,
    row_ptr: Vec<usize>,
    cols: Vec<u32>,
    vals: Vec<f64>,
}

impl Csr {
    pub fn from_coo(coo: &Coo) -> Self {
        Self::build(coo.nrows, coo.ncols, coo.entries.iter().map(|&(i, j, v)| (i as usize, j as usize, v)))
    }

    pub fn from_triplets(nrows: usize, ncols: usize, trips: &[(usize, usize, f64)]) -> Self {
        Self::build(nrows, ncols, trips.iter().copied())
    }

    fn build(nrows: usize, ncols: usize, entries: impl Iterator<Item = (usize, usize, f64)>) -> Self {
        let mut sorted: Vec<(usize, usize, f64)> = entries.collect();
        sorted.sort_unstable_by_key(|&(i, j, _)| (i, j));
        let mut row_ptr = vec![0usize; nrows + 1];
        let mut cols = Vec::with_capacity(sorted.len());
        let mut vals: Vec<f64> = Vec::with_capacity(sorted.len());
        // Merge duplicates in one pass over the sorted triplets.
        let mut last: Option<(usize, usize)> = None;
        for &(i, j, v) in &sorted {
            if last == Some((i, j)) {
                *vals.last_mut().unwrap() += v;
            } else {
                cols.push(j as u32);
                vals.push(v);
                row_ptr[i + 1] += 1;
                last = Some((i, j));
            }
        }
        for i in 0..nrows {
            row_ptr[i + 1] += row_ptr[i];
        }
        Csr { nrows, ncols, row_ptr, cols, vals }
    }

    pub fn nnz(&self) -> usize {
        self.vals.len()
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        let mut y = vec![0.0; self.nrows];
        self.apply_into(x, &mut y);
        y
    }

    /// `y = A x`, overwriting `y`.
    pub fn apply_into(&self, x: &[f64], y: &mut [f64]) {
        assert_eq!(x.len(), self.ncols);
        for i in 0..self.nrows {
            let mut acc = 0.0;
            for p in self.row_ptr[i]..self.row_ptr[i + 1] {
                acc += self.vals[p] * x[self.cols[p] as usize];
            }
            y[i] = acc;
        }
    }

    /// `y += scale · A x`.
    pub fn apply_add(&self, x: &[f64], scale: f64, y: &mut [f64]) {
        assert_eq!(x.len(), self.ncols);
        for i in 0..self.nrows {
            let mut acc = 0.0;
            for p in self.row_ptr[i]..self.row_ptr[i + 1] {
                acc += self.vals[p] * x[self.cols[p] as usize];
            }
            y[i] += scale * acc;
        }
    }

    pub fn transposed(&self) -> Csr {
        let trips: Vec<(usize, usize, f64)> = self
            .iter_entries()
            .map(|(i, j, v)| (j, i, v))
            .collect();
        Csr::from_triplets(self.ncols, self.nrows, &trips)
    }

    /// Entries of one row as `(col, val)` pairs.
    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        (self.row_ptr[i]..self.row_ptr[i + 1]).map(move |p| (self.cols[p] as usize, self.vals[p]))
    }

    fn iter_entries(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..self.nrows).flat_map(move |i| {
            (self.row_ptr[i]..self.row_ptr[i + 1])
                .map(move |p| (i, self.cols[p] as usize, self.vals[p]))
        })
    }

    /// Diagonal entries (zero where the pattern has none).
    pub fn diagonal(&self) -> Vec<f64> {
        let mut d = vec![0.0; self.nrows];
        for (i, j, v) in self.iter_entries() {
            if i == j {
                d[i] += v;
            }
        }
        d
    }

    pub fn to_triplets(&self) -> Vec<(usize, usize, f64)> {
        self.iter_entries().collect()
    }
}

/// Sparse matrix product `A · B`, row by row with a dense accumulator.
pub fn spmm(a: &Csr, b: &Csr) -> Csr {
    assert_eq!(a.ncols, b.nrows);
    let (n, ncols) = (a.nrows, b.ncols);
    let mut acc = vec![0.0f64; ncols];
    let mut mark = vec![usize::MAX; ncols];
    let mut touched: Vec<usize> = Vec::new();
    let mut trips: Vec<(usize, usize, f64)> = Vec::new();
    for i in 0..n {
        for p in a.row_ptr[i]..a.row_ptr[i + 1] {
            let k = a.cols[p] as usize;
            let w = a.vals[p];
            for q in b.row_ptr[k]..b.row_ptr[k + 1] {
                let j = b.cols[q] as usize;
                if mark[j] != i {
                    mark[j] = i;
                    acc[j] = 0.0;
                    touched.push(j);
                }
                acc[j] += w * b.vals[q];
            }
        }
        touched.sort_unstable();
        for &j in &touched {
            trips.push((i, j, acc[j]));
        }
        touched.clear();
    }
    Csr::from_triplets(n, ncols, &trips)
}

/// Explicit sparse `B · diag(d) · Bᵀ`, row by row with a dense accumulator.
/// The result is symmetric with the sparsity of "rows of B sharing a column".
pub fn scaled_gram(b: &Csr, d: &[f64]) -> Csr {
    assert_eq!(d.len(), b.ncols);
    let bt = b.transposed();
    let n = b.nrows;
    let mut acc = vec![0.0f64; n];
    let mut mark = vec![usize::MAX; n];
    let mut touched: Vec<usize> = Vec::new();
    let mut trips: Vec<(usize, usize, f64)> = Vec::new();
    for i in 0..n {
        for p in b.row_ptr[i]..b.row_ptr[i + 1] {
            let k = b.cols[p] as usize;
            let w = b.vals[p] * d[k];
            for q in bt.row_ptr[k]..bt.row_ptr[k + 1] {
                let j = bt.cols[q] as usize;
                if mark[j] != i {
                    mark[j] = i;
                    acc[j] = 0.0;
                    touched.push(j);
                }
                acc[j] += w * bt.vals[q];
            }
        }
        touched.sort_unstable();
        for &j in &touched {
            trips.push((i, j, acc[j]));
        }
        touched.clear();
    }
    Csr::from_triplets(n, n, &trips)
}

struct MeanBorder {
    var_off: usize,
    n_free: usize,
    weights: Vec<f64>,
}

/// Assembles one square system over the free dofs of several fields stacked
/// at fixed offsets. Entries of a block whose trial dof is constrained are
/// recorded as *lift* entries: at solve time they turn prescribed boundary
/// values into right-hand-side corrections.
pub struct BlockSystem {
    pub n: usize,
    triplets: Vec<(usize, usize, f64)>,
    lifts: Vec<(u32, u8, u32, f64)>,
    borders: Vec<MeanBorder>,
}

impl BlockSystem {
    pub fn new(n: usize) -> Self {
        BlockSystem { n, triplets: Vec::new(), lifts: Vec::new(), borders: Vec::new() }
    }

    pub fn push(&mut self, row: usize, col: usize, val: f64) {
        debug_assert!(row < self.n && col < self.n);
        self.triplets.push((row, col, val));
    }

    /// Adds `scale · A` restricted to free test/trial dofs, rows at `row_off`
    /// and columns at `col_off`. Constrained trial columns become lift
    /// entries reading from prescribed-value slot `lift_slot` (full-length
    /// vectors); pass `None` when the trial space has homogeneous values.
    pub fn add_block(
        &mut self,
        a: &Coo,
        test: &DofMap,
        trial: &DofMap,
        row_off: usize,
        col_off: usize,
        scale: f64,
        lift_slot: Option<u8>,
    ) {
        for &(i, j, v) in &a.entries {
            let Some(fi) = test.free_index(i as usize) else { continue };
            match trial.free_index(j as usize) {
                Some(fj) => self.push(row_off + fi, col_off + fj, scale * v),
                None => {
                    if let Some(slot) = lift_slot {
                        self.lifts.push(((row_off + fi) as u32, slot, j, scale * v));
                    }
                }
            }
        }
    }

    /// Borders the block of `map` (whose dofs must all be free) with the
    /// symmetric zero-mean constraint `Σ w_j x_j = 0`, with the multiplier at
    /// row/column `mu_row`.
    pub fn add_mean_border(&mut self, map: &DofMap, var_off: usize, mu_row: usize) {
        let w = map.mean_weights.as_ref().expect("space carries no mean weights");
        assert_eq!(map.n_free, map.n_full, "mean border expects a fully free space");
        let mut weights = Vec::with_capacity(map.n_free);
        for jf in 0..map.n_free {
            let wj = w[map.full_index(jf)];
            self.push(mu_row, var_off + jf, wj);
            self.push(var_off + jf, mu_row, wj);
            weights.push(wj);
        }
        self.borders.push(MeanBorder { var_off, n_free: map.n_free, weights });
    }

    pub fn triplets(&self) -> &[(usize, usize, f64)] {
        &self.triplets
    }

    /// Drops the stored triplets once a factorization holds the matrix; the
    /// lift entries and mean borders stay usable.
    pub fn shrink_after_factor(&mut self) {
        self.triplets = Vec::new();
        self.triplets.shrink_to_fit();
    }

    /// Extends `rhs` with the boundary-lifting corrections
    /// `rhs[row] -= val · g[col]` for each recorded lift entry, where `g` is
    /// the prescribed full-length vector of the entry's slot.
    pub fn lift_rhs(&self, slots: &[&[f64]], rhs: &mut [f64]) {
        for &(row, slot, col, val) in &self.lifts {
            rhs[row as usize] -= val * slots[slot as usize][col as usize];
        }
    }

    /// Exactly zeroes the weighted mean of every bordered block. The border
    /// row enforces the constraint only to solver tolerance; subtracting the
    /// weighted mean afterwards is exact and leaves the other residuals
    /// untouched, because the bordered fields couple to the rest of the
    /// system through forms that vanish on constants.
    pub fn enforce_mean_zero(&self, x: &mut [f64]) {
        for b in &self.borders {
            let block = &x[b.var_off..b.var_off + b.n_free];
            let num = vdot(&b.weights, block);
            let den: f64 = b.weights.iter().sum();
            let shift = num / den;
            for xi in &mut x[b.var_off..b.var_off + b.n_free] {
                *xi -= shift;
            }
        }
    }
}

/// Appends `scale · A[free(test), free(trial)]` to a raw triplet list at the
/// given block offsets, skipping constrained rows and columns. Used for the
/// per-sweep blocks that extend a constant base system.
pub fn append_block(
    trips: &mut Vec<(usize, usize, f64)>,
    a: &Coo,
    test: &DofMap,
    trial: &DofMap,
    row_off: usize,
    col_off: usize,
    scale: f64,
) {
    for &(i, j, v) in &a.entries {
        let Some(fi) = test.free_index(i as usize) else { continue };
        let Some(fj) = trial.free_index(j as usize) else { continue };
        trips.push((row_off + fi, col_off + fj, scale * v));
    }
}

/// Raised when a solver cannot reach the requested relative residual.
#[derive(Debug, Clone, Copy)]
pub struct SolveFailure {
    pub rel_residual: f64,
    pub tol: f64,
}

impl std::fmt::Display for SolveFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "linear solve stalled at relative residual {:.3e} (target {:.1e})", self.rel_residual, self.tol)
    }
}

impl std::error::Error for SolveFailure {}

/// Sparse LU with a cached symbolic factorization. `refactor` replaces the
/// numeric values of a matrix with the *same* sparsity pattern and reuses the
/// symbolic analysis, which is most of the factorization setup cost.
pub struct LuSolver {
    n: usize,
    csr: Csr,
    symbolic: SymbolicLu<usize>,
    lu: Lu<usize, f64>,
}

const MAX_REFINE: usize = 5;

impl LuSolver {
    pub fn new(n: usize, trips: &[(usize, usize, f64)]) -> Self {
        ensure_sequential();
        let (a, csr) = Self::build(n, trips);
        let symbolic = SymbolicLu::try_new(a.symbolic()).expect("symbolic LU analysis failed");
        let lu = Lu::try_new_with_symbolic(symbolic.clone(), a.as_ref()).expect("LU factorization failed");
        LuSolver { n, csr, symbolic, lu }
    }

    fn build(n: usize, trips: &[(usize, usize, f64)]) -> (SparseColMat<usize, f64>, Csr) {
        let t: Vec<Triplet<usize, usize, f64>> =
            trips.iter().map(|&(i, j, v)| Triplet::new(i, j, v)).collect();
        let a = SparseColMat::try_new_from_triplets(n, n, &t).expect("malformed triplets");
        let csr = Csr::from_triplets(n, n, trips);
        (a, csr)
    }

    /// Refactorizes for new numeric values on the pattern this solver was
    /// created with.
    pub fn refactor(&mut self, trips: &[(usize, usize, f64)]) {
        let (a, csr) = Self::build(self.n, trips);
        assert_eq!(csr.nnz(), self.csr.nnz(), "sparsity pattern changed between refactorizations");
        self.lu = Lu::try_new_with_symbolic(self.symbolic.clone(), a.as_ref()).expect("LU refactorization failed");
        self.csr = csr;
    }

    /// One triangular solve, no residual control.
    pub fn apply_inverse(&self, b: &[f64]) -> Vec<f64> {
        to_vec(&self.lu.solve(to_mat(b)))
    }

    /// Solves to a relative residual of at most `tol`, applying iterative
    /// refinement as needed; errs if refinement stalls above the target.
    pub fn solve(&self, b: &[f64], tol: f64) -> Result<(Vec<f64>, f64), SolveFailure> {
        let bn = norm2(b);
        if bn == 0.0 {
            return Ok((vec![0.0; self.n], 0.0));
        }
        let mut x = self.apply_inverse(b);
        let mut r = vec![0.0; self.n];
        let mut relres = f64::INFINITY;
        for _ in 0..MAX_REFINE {
            self.csr.apply_into(&x, &mut r);
            for (ri, bi) in r.iter_mut().zip(b) {
                *ri = bi - *ri;
            }
            relres = norm2(&r) / bn;
            if relres <= tol {
                return Ok((x, relres));
            }
            let dx = self.apply_inverse(&r);
            for (xi, di) in x.iter_mut().zip(&dx) {
                *xi += di;
            }
        }
        Err(SolveFailure { rel_residual: relres, tol })
    }
}

/// Sparse Cholesky (LLᵀ) for symmetric positive definite matrices: about half
/// the memory and work of LU on the same pattern.
pub struct CholSolver {
    n: usize,
    csr: Csr,
    llt: Llt<usize, f64>,
}

impl CholSolver {
    pub fn new(n: usize, trips: &[(usize, usize, f64)]) -> Self {
        ensure_sequential();
        let t: Vec<Triplet<usize, usize, f64>> =
            trips.iter().map(|&(i, j, v)| Triplet::new(i, j, v)).collect();
        let a = SparseColMat::try_new_from_triplets(n, n, &t).expect("malformed triplets");
        let csr = Csr::from_triplets(n, n, trips);
        let symbolic =
            SymbolicLlt::try_new(a.symbolic(), Side::Lower).expect("symbolic Cholesky failed");
        let llt = Llt::try_new_with_symbolic(symbolic, a.as_ref(), Side::Lower)
            .expect("Cholesky factorization failed (matrix not positive definite?)");
        CholSolver { n, csr, llt }
    }

    pub fn apply_inverse(&self, b: &[f64]) -> Vec<f64> {
        to_vec(&self.llt.solve(to_mat(b)))
    }

    /// Solves to a relative residual of at most `tol` with iterative
    /// refinement, like [`LuSolver::solve`].
    pub fn solve(&self, b: &[f64], tol: f64) -> Result<(Vec<f64>, f64), SolveFailure> {
        let bn = norm2(b);
        if bn == 0.0 {
            return Ok((vec![0.0; self.n], 0.0));
        }
        let mut x = self.apply_inverse(b);
        let mut r = vec![0.0; self.n];
        let mut relres = f64::INFINITY;
        for _ in 0..MAX_REFINE {
            self.csr.apply_into(&x, &mut r);
            for (ri, bi) in r.iter_mut().zip(b) {
                *ri = bi - *ri;
            }
            relres = norm2(&r) / bn;
            if relres <= tol {
                return Ok((x, relres));
            }
            let dx = self.apply_inverse(&r);
            for (xi, di) in x.iter_mut().zip(&dx) {
                *xi += di;
            }
        }
        Err(SolveFailure { rel_residual: relres, tol })
    }
}

/// A square linear operator given by its action; lets the Krylov solvers run
/// matrix-free (e.g. on Schur complements that are never assembled).
pub trait LinOp {
    fn dim(&self) -> usize;
    fn apply_op(&self, x: &[f64], y: &mut [f64]);
}

impl LinOp for Csr {
    fn dim(&self) -> usize {
        debug_assert_eq!(self.nrows, self.ncols);
        self.nrows
    }

    fn apply_op(&self, x: &[f64], y: &mut [f64]) {
        self.apply_into(x, y);
    }
}

/// Application of an (approximate) inverse, used as a right preconditioner.
pub trait Precond {
    fn apply_inv(&self, b: &[f64]) -> Vec<f64>;
}

impl Precond for LuSolver {
    fn apply_inv(&self, b: &[f64]) -> Vec<f64> {
        self.apply_inverse(b)
    }
}

impl Precond for CholSolver {
    fn apply_inv(&self, b: &[f64]) -> Vec<f64> {
        self.apply_inverse(b)
    }
}

/// Jacobi preconditioner; stores the reciprocal diagonal.
pub struct Jacobi {
    inv_diag: Vec<f64>,
}

impl Jacobi {
    pub fn from_diagonal(diag: &[f64]) -> Self {
        Jacobi { inv_diag: diag.iter().map(|&d| 1.0 / d).collect() }
    }
}

impl Precond for Jacobi {
    fn apply_inv(&self, b: &[f64]) -> Vec<f64> {
        b.iter().zip(&self.inv_diag).map(|(x, d)| x * d).collect()
    }
}

/// Identity preconditioner (plain CG/GMRES).
pub struct NoPrecond;

impl Precond for NoPrecond {
    fn apply_inv(&self, b: &[f64]) -> Vec<f64> {
        b.to_vec()
    }
}

/// Preconditioned conjugate gradients for SPD (or consistent positive
/// semidefinite) systems. The recurrence residual triggers a true-residual
/// check before the result is accepted, so the reported residual is honest.
pub fn pcg(
    a: &dyn LinOp,
    m: &dyn Precond,
    b: &[f64],
    tol: f64,
    max_iter: usize,
) -> Result<(Vec<f64>, f64, usize), SolveFailure> {
    let n = b.len();
    assert_eq!(n, a.dim());
    let bn = norm2(b);
    if bn == 0.0 {
        return Ok((vec![0.0; n], 0.0, 0));
    }
    let mut x = vec![0.0; n];
    let mut r = b.to_vec();
    let mut z = m.apply_inv(&r);
    let mut p = z.clone();
    let mut rz = vdot(&r, &z);
    let mut ap = vec![0.0; n];
    let mut best = f64::INFINITY;
    for it in 1..=max_iter {
        a.apply_op(&p, &mut ap);
        let pap = vdot(&p, &ap);
        if pap <= 0.0 {
            break;
        }
        let alpha = rz / pap;
        for i in 0..n {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        if norm2(&r) / bn <= tol {
            a.apply_op(&x, &mut ap);
            let mut true_r = 0.0;
            for i in 0..n {
                let d = b[i] - ap[i];
                true_r += d * d;
            }
            let true_rel = true_r.sqrt() / bn;
            best = best.min(true_rel);
            if true_rel <= tol {
                return Ok((x, true_rel, it));
            }
        }
        z = m.apply_inv(&r);
        let rz_new = vdot(&r, &z);
        let beta = rz_new / rz;
        rz = rz_new;
        for i in 0..n {
            p[i] = z[i] + beta * p[i];
        }
    }
    Err(SolveFailure { rel_residual: best, tol })
}

/// Right-preconditioned GMRES on `A x = b`. Starts from `x₀ = M⁻¹ b`,
/// monitors the true residual before accepting, and never restarts (the
/// iteration counts involved are small).
pub fn gmres(
    a: &dyn LinOp,
    precond: &dyn Precond,
    b: &[f64],
    tol: f64,
    max_iter: usize,
) -> Result<(Vec<f64>, f64, usize), SolveFailure> {
    let n = b.len();
    assert_eq!(n, a.dim());
    let bn = norm2(b);
    if bn == 0.0 {
        return Ok((vec![0.0; n], 0.0, 0));
    }
    let apply = |x: &[f64]| {
        let mut y = vec![0.0; n];
        a.apply_op(x, &mut y);
        y
    };
    let x0 = precond.apply_inv(b);
    let mut r = apply(&x0);
    for (ri, bi) in r.iter_mut().zip(b) {
        *ri = bi - *ri;
    }
    let beta = norm2(&r);
    if beta / bn <= tol {
        return Ok((x0, beta / bn, 0));
    }

    let mut v: Vec<Vec<f64>> = vec![r.iter().map(|x| x / beta).collect()];
    let mut z: Vec<Vec<f64>> = Vec::new();
    let mut hcols: Vec<Vec<f64>> = Vec::new();
    let mut cs: Vec<f64> = Vec::new();
    let mut sn: Vec<f64> = Vec::new();
    let mut g = vec![beta];
    let mut best: Option<(Vec<f64>, f64)> = None;

    for j in 0..max_iter {
        let zj = precond.apply_inv(&v[j]);
        let mut w = apply(&zj);
        z.push(zj);
        let mut hcol = vec![0.0; j + 2];
        for (i, vi) in v.iter().enumerate() {
            let hij = vdot(vi, &w);
            for (wk, vk) in w.iter_mut().zip(vi) {
                *wk -= hij * vk;
            }
            hcol[i] = hij;
        }
        let wnorm = norm2(&w);
        hcol[j + 1] = wnorm;
        if wnorm > 0.0 {
            for wk in &mut w {
                *wk /= wnorm;
            }
        }
        v.push(w);
        for i in 0..j {
            let (hi, hi1) = (hcol[i], hcol[i + 1]);
            hcol[i] = cs[i] * hi + sn[i] * hi1;
            hcol[i + 1] = -sn[i] * hi + cs[i] * hi1;
        }
        let rr = hcol[j].hypot(hcol[j + 1]);
        let (c, s) = if rr == 0.0 { (1.0, 0.0) } else { (hcol[j] / rr, hcol[j + 1] / rr) };
        cs.push(c);
        sn.push(s);
        hcol[j] = rr;
        hcol[j + 1] = 0.0;
        let gj = g[j];
        g[j] = c * gj;
        g.push(-s * gj);
        hcols.push(hcol);

        let estimated = g[j + 1].abs() / bn;
        if estimated <= 0.5 * tol || j + 1 == max_iter || wnorm == 0.0 {
            // Assemble the current iterate and check the true residual.
            let k = j + 1;
            let mut y = vec![0.0; k];
            for i in (0..k).rev() {
                let mut s = g[i];
                for l in i + 1..k {
                    s -= hcols[l][i] * y[l];
                }
                y[i] = s / hcols[i][i];
            }
            let mut x = x0.clone();
            for (yi, zi) in y.iter().zip(&z) {
                for (xk, zk) in x.iter_mut().zip(zi) {
                    *xk += yi * zk;
                }
            }
            let mut res = apply(&x);
            for (ri, bi) in res.iter_mut().zip(b) {
                *ri = bi - *ri;
            }
            let relres = norm2(&res) / bn;
            if relres <= tol {
                return Ok((x, relres, k));
            }
            if best.as_ref().is_none_or(|(_, r)| relres < *r) {
                best = Some((x, relres));
            }
            if j + 1 == max_iter || wnorm == 0.0 {
                break;
            }
        }
    }
    let rel = best.map(|(_, r)| r).unwrap_or(f64::INFINITY);
    Err(SolveFailure { rel_residual: rel, tol })
}

/// Solver for a sequence of systems that share one sparsity pattern and drift
/// slowly: the cached LU preconditions GMRES, and when that stalls the matrix
/// is refactorized (same symbolic analysis) and solved directly. The policy
/// is deterministic: it depends only on the data of the current solve.
pub struct ReusableSolver {
    lu: LuSolver,
    n: usize,
    pub gmres_iterations: usize,
    pub refactorizations: usize,
}

impl ReusableSolver {
    pub fn new(n: usize, trips: &[(usize, usize, f64)]) -> Self {
        ReusableSolver { lu: LuSolver::new(n, trips), n, gmres_iterations: 0, refactorizations: 0 }
    }

    pub fn solve(
        &mut self,
        trips: &[(usize, usize, f64)],
        b: &[f64],
        tol: f64,
        max_iter: usize,
    ) -> Vec<f64> {
        let a = Csr::from_triplets(self.n, self.n, trips);
        match gmres(&a, &self.lu, b, tol, max_iter) {
            Ok((x, _, iters)) => {
                self.gmres_iterations += iters;
                x
            }
            Err(_) => {
                self.refactorizations += 1;
                self.lu.refactor(trips);
                let (x, _) = self.lu.solve(b, tol).expect("direct solve after refactorization failed");
                x
            }
        }
    }
}
