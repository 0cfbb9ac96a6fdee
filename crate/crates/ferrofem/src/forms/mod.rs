//! Weak-form assembly: bilinear forms into sparse triplets, linear forms into
//! full-length load vectors.
//!
//! All assemblers index rows and columns by *full* dof numbers of the test and
//! trial [`DofMap`]s; restriction to free dofs (and the boundary lifting that
//! restriction induces) happens later, in the system builder. Duplicate
//! triplets are implicitly summed by every consumer.
//!
//! Quadrature selection follows one rule per form family so that every
//! polynomial integrand is integrated exactly:
//!
//! * [`quadrature::TET_DEG_9`] for anything involving the MINI space (its mass
//!   integrand has degree 8) and for right-hand-side loads of smooth data;
//! * [`quadrature::TET_DEG_7`] for the lowest-order spaces, whose pairings and
//!   frozen-coefficient cross terms have degree ≤ 6.
//!
//! Exactness is what makes the discrete energy identities hold to rounding:
//! the skew pairings `(v × k, H)`, `(m × curl v, H)` and the `c`-form cancel
//! between equations because both sides are the *same* exactly computed
//! number.

pub mod quadrature;

use crate::mesh::{cross, dot, CubeMesh};
use crate::spaces::{CellKit, DofMap, FeFunction, SpaceKind};
use quadrature::TetRule;

/// Sparse matrix in coordinate (triplet) form over full dof indices.
/// Duplicates are additive.
#[derive(Clone, Debug)]
pub struct Coo {
    pub nrows: usize,
    pub ncols: usize,
    pub entries: Vec<(u32, u32, f64)>,
}

impl Coo {
    pub fn new(nrows: usize, ncols: usize) -> Self {
        Coo { nrows, ncols, entries: Vec::new() }
    }

    #[inline]
    pub fn push(&mut self, row: usize, col: usize, val: f64) {
        self.entries.push((row as u32, col as u32, val));
    }

    /// `y = A·x` with `x` a full-length vector. Triplet order is fixed, so the
    /// accumulation is deterministic.
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.ncols);
        let mut y = vec![0.0; self.nrows];
        for &(i, j, v) in &self.entries {
            y[i as usize] += v * x[j as usize];
        }
        y
    }

    /// Scales every entry in place and returns `self`.
    pub fn scaled(mut self, s: f64) -> Self {
        for e in &mut self.entries {
            e.2 *= s;
        }
        self
    }

    /// The transpose, as a new triplet list.
    pub fn transposed(&self) -> Coo {
        Coo {
            nrows: self.ncols,
            ncols: self.nrows,
            entries: self.entries.iter().map(|&(i, j, v)| (j, i, v)).collect(),
        }
    }
}

/// Barycentric coordinates and reference weights of a tetrahedral rule.
/// Weights sum to the reference volume 1/6; the physical Jacobian factor is
/// `6 · |K|` per cell.
pub(crate) struct QuadData {
    pub lambda: Vec<[f64; 4]>,
    pub weight: Vec<f64>,
}

pub(crate) fn quad_data(rule: &TetRule) -> QuadData {
    let mut lambda = Vec::with_capacity(rule.data.len());
    let mut weight = Vec::with_capacity(rule.data.len());
    for &[x, y, z, w] in rule.data {
        lambda.push([1.0 - x - y - z, x, y, z]);
        weight.push(w);
    }
    QuadData { lambda, weight }
}

/// Number of scalar shape functions behind a vector H¹ space.
fn h1_scalar_count(kind: SpaceKind) -> usize {
    match kind {
        SpaceKind::VelocityMini => 5,
        SpaceKind::AngularP1 | SpaceKind::PressureP1 => 4,
        _ => panic!("not an H1 space: {kind:?}"),
    }
}

#[inline]
fn h1_values(ns: usize, lambda: &[f64; 4]) -> [f64; 5] {
    let mut v = [lambda[0], lambda[1], lambda[2], lambda[3], 0.0];
    if ns == 5 {
        v[4] = CellKit::bubble(lambda);
    }
    v
}

#[inline]
fn h1_grads(kit: &CellKit, ns: usize, lambda: &[f64; 4]) -> [[f64; 3]; 5] {
    let g = &kit.geo.grad_lambda;
    let mut out = [g[0], g[1], g[2], g[3], [0.0; 3]];
    if ns == 5 {
        out[4] = kit.bubble_grad(lambda);
    }
    out
}

/// Assembly skeleton: applies `per_cell(c, kit, dofs)` over all cells.
fn for_each_cell(
    mesh: &CubeMesh,
    map: &DofMap,
    mut per_cell: impl FnMut(usize, &CellKit, &[u32]),
) {
    let mut dofs = Vec::with_capacity(map.dofs_per_cell());
    for c in 0..mesh.n_cells() {
        let kit = CellKit::new(mesh, c);
        dofs.clear();
        map.push_cell_dofs(mesh, c, &mut dofs);
        per_cell(c, &kit, &dofs);
    }
}

fn push_local(coo: &mut Coo, rows: &[u32], cols: &[u32], local: &[f64], nd_cols: usize) {
    for (i, &gi) in rows.iter().enumerate() {
        for (j, &gj) in cols.iter().enumerate() {
            coo.push(gi as usize, gj as usize, local[i * nd_cols + j]);
        }
    }
}

/// Mass matrix `(φ_j, φ_i)` of any space.
pub fn assemble_mass(mesh: &CubeMesh, map: &DofMap, rule: &TetRule) -> Coo {
    let qd = quad_data(rule);
    let mut coo = Coo::new(map.n_full, map.n_full);
    match map.kind {
        SpaceKind::VelocityMini | SpaceKind::AngularP1 => {
            let ns = h1_scalar_count(map.kind);
            let nd = 3 * ns;
            let mut local = vec![0.0; nd * nd];
            for_each_cell(mesh, map, |_c, kit, dofs| {
                let jac = 6.0 * kit.geo.volume;
                local.fill(0.0);
                for (q, lam) in qd.lambda.iter().enumerate() {
                    let jw = jac * qd.weight[q];
                    let val = h1_values(ns, lam);
                    for a in 0..ns {
                        for b in 0..ns {
                            let s = jw * val[a] * val[b];
                            for c in 0..3 {
                                local[(3 * a + c) * nd + 3 * b + c] += s;
                            }
                        }
                    }
                }
                push_local(&mut coo, dofs, dofs, &local, nd);
            });
        }
        SpaceKind::PressureP1 | SpaceKind::ConstP0 => {
            let scalar_p1 = map.kind == SpaceKind::PressureP1;
            let nd = if scalar_p1 { 4 } else { 1 };
            let mut local = vec![0.0; nd * nd];
            for_each_cell(mesh, map, |_c, kit, dofs| {
                let jac = 6.0 * kit.geo.volume;
                local.fill(0.0);
                for (q, lam) in qd.lambda.iter().enumerate() {
                    let jw = jac * qd.weight[q];
                    if scalar_p1 {
                        for a in 0..4 {
                            for b in 0..4 {
                                local[a * 4 + b] += jw * lam[a] * lam[b];
                            }
                        }
                    } else {
                        local[0] += jw;
                    }
                }
                push_local(&mut coo, dofs, dofs, &local, nd);
            });
        }
        SpaceKind::EdgeNe0 | SpaceKind::FaceRt0 => {
            let edge = map.kind == SpaceKind::EdgeNe0;
            let nd = if edge { 6 } else { 4 };
            let mut local = vec![0.0; nd * nd];
            let mut basis = [[0.0; 3]; 6];
            for_each_cell(mesh, map, |_c, kit, dofs| {
                let jac = 6.0 * kit.geo.volume;
                local.fill(0.0);
                for (q, lam) in qd.lambda.iter().enumerate() {
                    let jw = jac * qd.weight[q];
                    for s in 0..nd {
                        basis[s] = if edge { kit.ne0(s, lam) } else { kit.rt0(s, lam) };
                    }
                    for a in 0..nd {
                        for b in 0..nd {
                            local[a * nd + b] += jw * dot(basis[a], basis[b]);
                        }
                    }
                }
                push_local(&mut coo, dofs, dofs, &local, nd);
            });
        }
    }
    coo
}

/// Full-gradient stiffness `(∇φ_j, ∇φ_i)` of a vector H¹ space.
pub fn assemble_grad_grad(mesh: &CubeMesh, map: &DofMap, rule: &TetRule) -> Coo {
    let ns = h1_scalar_count(map.kind);
    let nd = 3 * ns;
    let qd = quad_data(rule);
    let mut coo = Coo::new(map.n_full, map.n_full);
    let mut local = vec![0.0; nd * nd];
    for_each_cell(mesh, map, |_c, kit, dofs| {
        let jac = 6.0 * kit.geo.volume;
        local.fill(0.0);
        for (q, lam) in qd.lambda.iter().enumerate() {
            let jw = jac * qd.weight[q];
            let grad = h1_grads(kit, ns, lam);
            for a in 0..ns {
                for b in 0..ns {
                    let s = jw * dot(grad[a], grad[b]);
                    for c in 0..3 {
                        local[(3 * a + c) * nd + 3 * b + c] += s;
                    }
                }
            }
        }
        push_local(&mut coo, dofs, dofs, &local, nd);
    });
    coo
}

/// Curl-curl matrix `(curl φ_j, curl φ_i)` of a vector H¹ space, via
/// `curl(N e_c) = ∇N × e_c` and the Lagrange identity.
pub fn assemble_curl_curl(mesh: &CubeMesh, map: &DofMap, rule: &TetRule) -> Coo {
    let ns = h1_scalar_count(map.kind);
    let nd = 3 * ns;
    let qd = quad_data(rule);
    let mut coo = Coo::new(map.n_full, map.n_full);
    let mut local = vec![0.0; nd * nd];
    for_each_cell(mesh, map, |_c, kit, dofs| {
        let jac = 6.0 * kit.geo.volume;
        local.fill(0.0);
        for (q, lam) in qd.lambda.iter().enumerate() {
            let jw = jac * qd.weight[q];
            let grad = h1_grads(kit, ns, lam);
            for a in 0..ns {
                for b in 0..ns {
                    let gg = dot(grad[a], grad[b]);
                    for c in 0..3 {
                        for cp in 0..3 {
                            let mut v = -grad[a][cp] * grad[b][c];
                            if c == cp {
                                v += gg;
                            }
                            local[(3 * a + c) * nd + 3 * b + cp] += jw * v;
                        }
                    }
                }
            }
        }
        push_local(&mut coo, dofs, dofs, &local, nd);
    });
    coo
}

/// Div-div matrix `(div φ_j, div φ_i)` of a vector H¹ space or of RT0.
pub fn assemble_div_div(mesh: &CubeMesh, map: &DofMap, rule: &TetRule) -> Coo {
    let qd = quad_data(rule);
    let mut coo = Coo::new(map.n_full, map.n_full);
    match map.kind {
        SpaceKind::VelocityMini | SpaceKind::AngularP1 => {
            let ns = h1_scalar_count(map.kind);
            let nd = 3 * ns;
            let mut local = vec![0.0; nd * nd];
            for_each_cell(mesh, map, |_c, kit, dofs| {
                let jac = 6.0 * kit.geo.volume;
                local.fill(0.0);
                for (q, lam) in qd.lambda.iter().enumerate() {
                    let jw = jac * qd.weight[q];
                    let grad = h1_grads(kit, ns, lam);
                    for a in 0..ns {
                        for b in 0..ns {
                            for c in 0..3 {
                                for cp in 0..3 {
                                    local[(3 * a + c) * nd + 3 * b + cp] +=
                                        jw * grad[a][c] * grad[b][cp];
                                }
                            }
                        }
                    }
                }
                push_local(&mut coo, dofs, dofs, &local, nd);
            });
        }
        SpaceKind::FaceRt0 => {
            let mut local = [0.0; 16];
            for_each_cell(mesh, map, |_c, kit, dofs| {
                let vol = kit.geo.volume;
                let div: Vec<f64> = (0..4).map(|s| kit.rt0_div(s)).collect();
                for a in 0..4 {
                    for b in 0..4 {
                        local[a * 4 + b] = vol * div[a] * div[b];
                    }
                }
                push_local(&mut coo, dofs, dofs, &local, 4);
            });
        }
        _ => panic!("div-div undefined for {:?}", map.kind),
    }
    coo
}

/// Divergence coupling `(div φ_j, ψ_i)`: rows over the scalar test space,
/// columns over the vector trial space. Supported pairs: P1 × MINI (the
/// pressure block) and P0 × RT0 (the magnetostatic block).
pub fn assemble_div_coupling(
    mesh: &CubeMesh,
    scalar: &DofMap,
    vector: &DofMap,
    rule: &TetRule,
) -> Coo {
    let qd = quad_data(rule);
    let mut coo = Coo::new(scalar.n_full, vector.n_full);
    match (scalar.kind, vector.kind) {
        (SpaceKind::PressureP1, SpaceKind::VelocityMini) => {
            let ns = 5;
            let nd = 15;
            let mut local = vec![0.0; 4 * nd];
            let mut vdofs = Vec::new();
            let mut sdofs = Vec::new();
            for c in 0..mesh.n_cells() {
                let kit = CellKit::new(mesh, c);
                let jac = 6.0 * kit.geo.volume;
                vdofs.clear();
                sdofs.clear();
                vector.push_cell_dofs(mesh, c, &mut vdofs);
                scalar.push_cell_dofs(mesh, c, &mut sdofs);
                local.fill(0.0);
                for (q, lam) in qd.lambda.iter().enumerate() {
                    let jw = jac * qd.weight[q];
                    let grad = h1_grads(&kit, ns, lam);
                    for i in 0..4 {
                        let wi = jw * lam[i];
                        for b in 0..ns {
                            for cc in 0..3 {
                                local[i * nd + 3 * b + cc] += wi * grad[b][cc];
                            }
                        }
                    }
                }
                push_local(&mut coo, &sdofs, &vdofs, &local, nd);
            }
        }
        (SpaceKind::ConstP0, SpaceKind::FaceRt0) => {
            let mut vdofs = Vec::new();
            let mut sdofs = Vec::new();
            for c in 0..mesh.n_cells() {
                let kit = CellKit::new(mesh, c);
                vdofs.clear();
                sdofs.clear();
                vector.push_cell_dofs(mesh, c, &mut vdofs);
                scalar.push_cell_dofs(mesh, c, &mut sdofs);
                for (t, &gj) in vdofs.iter().enumerate() {
                    coo.push(sdofs[0] as usize, gj as usize, kit.geo.volume * kit.rt0_div(t));
                }
            }
        }
        other => panic!("unsupported divergence coupling {other:?}"),
    }
    coo
}

/// Curl pairing `(curl Θ_j, F_i)`: rows over RT0 test functions, columns over
/// NE0 trial functions. Equals `M_RT0 · C` with `C` the curl incidence matrix,
/// since NE0 curls are constant multiples of RT0 cell restrictions.
pub fn assemble_curl_pairing(
    mesh: &CubeMesh,
    ne: &DofMap,
    rt: &DofMap,
    rule: &TetRule,
) -> Coo {
    assert_eq!(ne.kind, SpaceKind::EdgeNe0);
    assert_eq!(rt.kind, SpaceKind::FaceRt0);
    let qd = quad_data(rule);
    let mut coo = Coo::new(rt.n_full, ne.n_full);
    let mut local = [0.0; 4 * 6];
    let mut edofs = Vec::new();
    let mut fdofs = Vec::new();
    for c in 0..mesh.n_cells() {
        let kit = CellKit::new(mesh, c);
        let jac = 6.0 * kit.geo.volume;
        edofs.clear();
        fdofs.clear();
        ne.push_cell_dofs(mesh, c, &mut edofs);
        rt.push_cell_dofs(mesh, c, &mut fdofs);
        let curls: Vec<[f64; 3]> = (0..6).map(|s| kit.ne0_curl(s)).collect();
        local.fill(0.0);
        for (q, lam) in qd.lambda.iter().enumerate() {
            let jw = jac * qd.weight[q];
            for fs in 0..4 {
                let f = kit.rt0(fs, lam);
                for es in 0..6 {
                    local[fs * 6 + es] += jw * dot(curls[es], f);
                }
            }
        }
        push_local(&mut coo, &fdofs, &edofs, &local, 6);
    }
    coo
}

/// Skew-symmetrized convection `N(w)[i,j] = b_h(w, φ_j, φ_i)` with
/// `b_h(w,v,s) = ½((w·∇)v, s) − ½((w·∇)s, v)`, on the MINI or angular space.
/// The local matrix is `½(T − Tᵀ)` of `T[a,b] = ∫ N_a (w·∇N_b)` replicated per
/// component, so skewness holds exactly regardless of quadrature.
pub fn assemble_convection(
    mesh: &CubeMesh,
    w: &FeFunction,
    map: &DofMap,
    rule: &TetRule,
) -> Coo {
    assert_eq!(w.kind, SpaceKind::VelocityMini);
    let ns = h1_scalar_count(map.kind);
    let nd = 3 * ns;
    let qd = quad_data(rule);
    let mut coo = Coo::new(map.n_full, map.n_full);
    let mut t = [[0.0; 5]; 5];
    let mut local = vec![0.0; nd * nd];
    for_each_cell(mesh, map, |c, kit, dofs| {
        let jac = 6.0 * kit.geo.volume;
        for row in t.iter_mut() {
            row.fill(0.0);
        }
        for (q, lam) in qd.lambda.iter().enumerate() {
            let jw = jac * qd.weight[q];
            let val = h1_values(ns, lam);
            let grad = h1_grads(kit, ns, lam);
            let wq = w.eval_vec(mesh, kit, c, lam);
            for b in 0..ns {
                let adv = dot(wq, grad[b]);
                for a in 0..ns {
                    t[a][b] += jw * val[a] * adv;
                }
            }
        }
        local.fill(0.0);
        for a in 0..ns {
            for b in 0..ns {
                let s = 0.5 * (t[a][b] - t[b][a]);
                for cc in 0..3 {
                    local[(3 * a + cc) * nd + 3 * b + cc] = s;
                }
            }
        }
        push_local(&mut coo, dofs, dofs, &local, nd);
    });
    coo
}

/// Skew-symmetrized magnetization transport
/// `X(v)[i,j] = c_h(v, φ_j, φ_i) = ½(φ_j·v, div φ_i) − ½(φ_i·v, div φ_j)`
/// on RT0, with `v` a frozen MINI field.
pub fn assemble_c_form(
    mesh: &CubeMesh,
    v: &FeFunction,
    rt: &DofMap,
    rule: &TetRule,
) -> Coo {
    assert_eq!(v.kind, SpaceKind::VelocityMini);
    assert_eq!(rt.kind, SpaceKind::FaceRt0);
    let qd = quad_data(rule);
    let mut coo = Coo::new(rt.n_full, rt.n_full);
    let mut local = [0.0; 16];
    for_each_cell(mesh, rt, |c, kit, dofs| {
        let jac = 6.0 * kit.geo.volume;
        let div: Vec<f64> = (0..4).map(|s| kit.rt0_div(s)).collect();
        local.fill(0.0);
        for (q, lam) in qd.lambda.iter().enumerate() {
            let jw = jac * qd.weight[q];
            let vq = v.eval_vec(mesh, kit, c, lam);
            let mut vdot = [0.0; 4];
            for (s, vd) in vdot.iter_mut().enumerate() {
                *vd = dot(kit.rt0(s, lam), vq);
            }
            for i in 0..4 {
                for j in 0..4 {
                    local[i * 4 + j] += jw * 0.5 * (vdot[j] * div[i] - vdot[i] * div[j]);
                }
            }
        }
        push_local(&mut coo, dofs, dofs, &local, 4);
    });
    coo
}

/// Frozen-coefficient cross product matrix `A[i,j] = ((w × φ_j), ψ_i)` between
/// edge/face spaces, with `w` a frozen MINI field. Used for the `(u⁻ × k, F)`
/// and `(u⁻ × m, Λ)` blocks; `trial = test` gives the skew `(w × a, a)` form.
pub fn assemble_cross(
    mesh: &CubeMesh,
    w: &FeFunction,
    trial: &DofMap,
    test: &DofMap,
    rule: &TetRule,
) -> Coo {
    assert_eq!(w.kind, SpaceKind::VelocityMini);
    let edge_trial = match trial.kind {
        SpaceKind::EdgeNe0 => true,
        SpaceKind::FaceRt0 => false,
        k => panic!("unsupported cross trial space {k:?}"),
    };
    let edge_test = match test.kind {
        SpaceKind::EdgeNe0 => true,
        SpaceKind::FaceRt0 => false,
        k => panic!("unsupported cross test space {k:?}"),
    };
    let (ntr, nte) = (trial.dofs_per_cell(), test.dofs_per_cell());
    let qd = quad_data(rule);
    let mut coo = Coo::new(test.n_full, trial.n_full);
    let mut local = vec![0.0; nte * ntr];
    let mut tr_dofs = Vec::new();
    let mut te_dofs = Vec::new();
    for c in 0..mesh.n_cells() {
        let kit = CellKit::new(mesh, c);
        let jac = 6.0 * kit.geo.volume;
        tr_dofs.clear();
        te_dofs.clear();
        trial.push_cell_dofs(mesh, c, &mut tr_dofs);
        test.push_cell_dofs(mesh, c, &mut te_dofs);
        local.fill(0.0);
        for (q, lam) in qd.lambda.iter().enumerate() {
            let jw = jac * qd.weight[q];
            let wq = w.eval_vec(mesh, &kit, c, lam);
            for j in 0..ntr {
                let bt = if edge_trial { kit.ne0(j, lam) } else { kit.rt0(j, lam) };
                let wxb = cross(wq, bt);
                for i in 0..nte {
                    let bs = if edge_test { kit.ne0(i, lam) } else { kit.rt0(i, lam) };
                    local[i * ntr + j] += jw * dot(wxb, bs);
                }
            }
        }
        push_local(&mut coo, &te_dofs, &tr_dofs, &local, ntr);
    }
    coo
}

/// Vector load `(f, φ_i)` for any vector space. The closure receives the cell
/// index, its kit, the barycentric point and the physical point, so callers
/// can evaluate frozen finite element fields as well as closed-form data.
pub fn assemble_load_vec(
    mesh: &CubeMesh,
    map: &DofMap,
    rule: &TetRule,
    mut f: impl FnMut(usize, &CellKit, &[f64; 4], [f64; 3]) -> [f64; 3],
) -> Vec<f64> {
    let qd = quad_data(rule);
    let mut out = vec![0.0; map.n_full];
    let h1 = matches!(map.kind, SpaceKind::VelocityMini | SpaceKind::AngularP1);
    let ns = if h1 { h1_scalar_count(map.kind) } else { 0 };
    let edge = map.kind == SpaceKind::EdgeNe0;
    for_each_cell(mesh, map, |c, kit, dofs| {
        let jac = 6.0 * kit.geo.volume;
        for (q, lam) in qd.lambda.iter().enumerate() {
            let jw = jac * qd.weight[q];
            let fq = f(c, kit, lam, kit.point(lam));
            if h1 {
                let val = h1_values(ns, lam);
                for a in 0..ns {
                    for cc in 0..3 {
                        out[dofs[3 * a + cc] as usize] += jw * val[a] * fq[cc];
                    }
                }
            } else {
                for (s, &gd) in dofs.iter().enumerate() {
                    let b = if edge { kit.ne0(s, lam) } else { kit.rt0(s, lam) };
                    out[gd as usize] += jw * dot(fq, b);
                }
            }
        }
    });
    out
}

/// Scalar load `(g, ψ_i)` on P1 or P0.
pub fn assemble_load_scalar(
    mesh: &CubeMesh,
    map: &DofMap,
    rule: &TetRule,
    mut g: impl FnMut(usize, &CellKit, &[f64; 4], [f64; 3]) -> f64,
) -> Vec<f64> {
    assert!(matches!(map.kind, SpaceKind::PressureP1 | SpaceKind::ConstP0));
    let qd = quad_data(rule);
    let mut out = vec![0.0; map.n_full];
    let p1 = map.kind == SpaceKind::PressureP1;
    for_each_cell(mesh, map, |c, kit, dofs| {
        let jac = 6.0 * kit.geo.volume;
        for (q, lam) in qd.lambda.iter().enumerate() {
            let jw = jac * qd.weight[q];
            let gq = g(c, kit, lam, kit.point(lam));
            if p1 {
                for a in 0..4 {
                    out[dofs[a] as usize] += jw * lam[a] * gq;
                }
            } else {
                out[dofs[0] as usize] += jw * gq;
            }
        }
    });
    out
}

/// Curl load `(f, curl φ_i)` on a vector H¹ space, via `curl(N e_c) = ∇N × e_c`.
pub fn assemble_load_curl(
    mesh: &CubeMesh,
    map: &DofMap,
    rule: &TetRule,
    mut f: impl FnMut(usize, &CellKit, &[f64; 4], [f64; 3]) -> [f64; 3],
) -> Vec<f64> {
    let ns = h1_scalar_count(map.kind);
    let qd = quad_data(rule);
    let mut out = vec![0.0; map.n_full];
    const E: [[f64; 3]; 3] = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
    for_each_cell(mesh, map, |c, kit, dofs| {
        let jac = 6.0 * kit.geo.volume;
        for (q, lam) in qd.lambda.iter().enumerate() {
            let jw = jac * qd.weight[q];
            let fq = f(c, kit, lam, kit.point(lam));
            let grad = h1_grads(kit, ns, lam);
            for a in 0..ns {
                for cc in 0..3 {
                    out[dofs[3 * a + cc] as usize] += jw * dot(fq, cross(grad[a], E[cc]));
                }
            }
        }
    });
    out
}

/// Divergence load `(g, div F_i)` on RT0.
pub fn assemble_load_div(
    mesh: &CubeMesh,
    map: &DofMap,
    rule: &TetRule,
    mut g: impl FnMut(usize, &CellKit, &[f64; 4], [f64; 3]) -> f64,
) -> Vec<f64> {
    assert_eq!(map.kind, SpaceKind::FaceRt0);
    let qd = quad_data(rule);
    let mut out = vec![0.0; map.n_full];
    for_each_cell(mesh, map, |c, kit, dofs| {
        let jac = 6.0 * kit.geo.volume;
        let div: Vec<f64> = (0..4).map(|s| kit.rt0_div(s)).collect();
        for (q, lam) in qd.lambda.iter().enumerate() {
            let jw = jac * qd.weight[q];
            let gq = g(c, kit, lam, kit.point(lam));
            for (s, &gd) in dofs.iter().enumerate() {
                out[gd as usize] += jw * gq * div[s];
            }
        }
    });
    out
}

#[cfg(test)]
mod tests {
    use super::quadrature::{TET_DEG_11, TET_DEG_13, TET_DEG_7, TET_DEG_9};
    use super::*;
    use nalgebra::DMatrix;
    use proptest::prelude::*;

    fn dense(coo: &Coo) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(coo.nrows, coo.ncols);
        for &(i, j, v) in &coo.entries {
            m[(i as usize, j as usize)] += v;
        }
        m
    }

    fn quadratic(coo: &Coo, x: &[f64], y: &[f64]) -> f64 {
        let ay = coo.apply(y);
        x.iter().zip(&ay).map(|(a, b)| a * b).sum()
    }

    #[test]
    fn p0_mass_is_the_cell_volume_diagonal() {
        let mesh = CubeMesh::new(1);
        let map = DofMap::const_p0(&mesh);
        let m = dense(&assemble_mass(&mesh, &map, &TET_DEG_7));
        for i in 0..6 {
            for j in 0..6 {
                let want = if i == j { 1.0 / 6.0 } else { 0.0 };
                assert!((m[(i, j)] - want).abs() < 1e-15, "({i},{j}) = {}", m[(i, j)]);
            }
        }
    }

    #[test]
    fn masses_reproduce_global_l2_products_of_representable_fields() {
        let mesh = CubeMesh::new(2);
        // MINI and P1: u = (x, y, z), v = (1, 1, 1); ∫ u·v = 3/2.
        let u = FeFunction::interpolate_mini(&mesh, |p| p);
        let v = FeFunction::interpolate_mini(&mesh, |_| [1.0, 1.0, 1.0]);
        let map = DofMap::velocity_mini(&mesh);
        let m = assemble_mass(&mesh, &map, &TET_DEG_9);
        assert!((quadratic(&m, &u.coeffs, &v.coeffs) - 1.5).abs() < 1e-13);

        let map = DofMap::angular_p1(&mesh);
        let u = FeFunction::interpolate_p1_vec(&mesh, |p| p);
        let v = FeFunction::interpolate_p1_vec(&mesh, |_| [1.0, 1.0, 1.0]);
        let m = assemble_mass(&mesh, &map, &TET_DEG_7);
        assert!((quadratic(&m, &u.coeffs, &v.coeffs) - 1.5).abs() < 1e-13);

        // P1 scalar: ∫ x·y = 1/4.
        let map = DofMap::pressure_p1(&mesh);
        let p = FeFunction::interpolate_p1_scalar(&mesh, |x| x[0]);
        let q = FeFunction::interpolate_p1_scalar(&mesh, |x| x[1]);
        let m = assemble_mass(&mesh, &map, &TET_DEG_7);
        assert!((quadratic(&m, &p.coeffs, &q.coeffs) - 0.25).abs() < 1e-13);

        // NE0 and RT0 contain the constants: ∫ (1,2,3)·(4,5,6) = 32.
        let map = DofMap::edge_ne0(&mesh, true);
        let a = FeFunction::interpolate_ne0(&mesh, |_| [1.0, 2.0, 3.0]);
        let b = FeFunction::interpolate_ne0(&mesh, |_| [4.0, 5.0, 6.0]);
        let m = assemble_mass(&mesh, &map, &TET_DEG_7);
        assert!((quadratic(&m, &a.coeffs, &b.coeffs) - 32.0).abs() < 1e-12);

        let map = DofMap::face_rt0(&mesh, false);
        let a = FeFunction::interpolate_rt0(&mesh, |_| [1.0, 2.0, 3.0]);
        let b = FeFunction::interpolate_rt0(&mesh, |_| [4.0, 5.0, 6.0]);
        let m = assemble_mass(&mesh, &map, &TET_DEG_7);
        assert!((quadratic(&m, &a.coeffs, &b.coeffs) - 32.0).abs() < 1e-12);
    }

    #[test]
    fn stiffness_forms_match_closed_forms_for_a_linear_field() {
        // u = (x + y, 2z, −x): ∇u:∇u = 7, |curl u|² = 6, (div u)² = 1.
        let mesh = CubeMesh::new(2);
        let map = DofMap::angular_p1(&mesh);
        let u = FeFunction::interpolate_p1_vec(&mesh, |p| [p[0] + p[1], 2.0 * p[2], -p[0]]);
        let gg = assemble_grad_grad(&mesh, &map, &TET_DEG_7);
        let cc = assemble_curl_curl(&mesh, &map, &TET_DEG_7);
        let dd = assemble_div_div(&mesh, &map, &TET_DEG_7);
        assert!((quadratic(&gg, &u.coeffs, &u.coeffs) - 7.0).abs() < 1e-12);
        assert!((quadratic(&cc, &u.coeffs, &u.coeffs) - 6.0).abs() < 1e-12);
        assert!((quadratic(&dd, &u.coeffs, &u.coeffs) - 1.0).abs() < 1e-12);

        // Same field on MINI (bubble coefficients zero).
        let map = DofMap::velocity_mini(&mesh);
        let u = FeFunction::interpolate_mini(&mesh, |p| [p[0] + p[1], 2.0 * p[2], -p[0]]);
        let gg = assemble_grad_grad(&mesh, &map, &TET_DEG_9);
        let cc = assemble_curl_curl(&mesh, &map, &TET_DEG_9);
        assert!((quadratic(&gg, &u.coeffs, &u.coeffs) - 7.0).abs() < 1e-12);
        assert!((quadratic(&cc, &u.coeffs, &u.coeffs) - 6.0).abs() < 1e-12);

        // RT0: m = (x, 2y, 3z), div m = 6, ∫ (div m)² = 36.
        let map = DofMap::face_rt0(&mesh, false);
        let m = FeFunction::interpolate_rt0(&mesh, |p| [p[0], 2.0 * p[1], 3.0 * p[2]]);
        let dd = assemble_div_div(&mesh, &map, &TET_DEG_7);
        assert!((quadratic(&dd, &m.coeffs, &m.coeffs) - 36.0).abs() < 1e-11);
    }

    #[test]
    fn divergence_couplings_match_closed_forms() {
        let mesh = CubeMesh::new(2);
        // (div u, q) with u = (x,y,z), q = x: ∫ 3x = 3/2.
        let vmap = DofMap::velocity_mini(&mesh);
        let pmap = DofMap::pressure_p1(&mesh);
        let b = assemble_div_coupling(&mesh, &pmap, &vmap, &TET_DEG_9);
        let u = FeFunction::interpolate_mini(&mesh, |p| p);
        let q = FeFunction::interpolate_p1_scalar(&mesh, |p| p[0]);
        let bu = b.apply(&u.coeffs);
        let val: f64 = q.coeffs.iter().zip(&bu).map(|(a, c)| a * c).sum();
        assert!((val - 1.5).abs() < 1e-13);

        // (div m, r) with m = (x, 2y, 3z), r ≡ 1: ∫ 6 = 6.
        let fmap = DofMap::face_rt0(&mesh, false);
        let cmap = DofMap::const_p0(&mesh);
        let b0 = assemble_div_coupling(&mesh, &cmap, &fmap, &TET_DEG_7);
        let m = FeFunction::interpolate_rt0(&mesh, |p| [p[0], 2.0 * p[1], 3.0 * p[2]]);
        let val: f64 = b0.apply(&m.coeffs).iter().sum();
        assert!((val - 6.0).abs() < 1e-12);
    }

    #[test]
    fn curl_pairing_equals_rt0_mass_times_curl_incidence() {
        let mesh = CubeMesh::new(2);
        let ne = DofMap::edge_ne0(&mesh, true);
        let rt = DofMap::face_rt0(&mesh, false);
        let p = dense(&assemble_curl_pairing(&mesh, &ne, &rt, &TET_DEG_7));
        let m = dense(&assemble_mass(&mesh, &rt, &TET_DEG_7));
        let mut c = DMatrix::zeros(rt.n_full, ne.n_full);
        for (f, row) in mesh.curl_incidence().iter().enumerate() {
            for &(e, s) in row {
                c[(f, e as usize)] = s as f64;
            }
        }
        let mc = m * c;
        let err = (&p - &mc).abs().max();
        assert!(err < 1e-13, "max deviation {err}");
    }

    #[test]
    fn symmetric_forms_are_symmetric_to_rounding() {
        let mesh = CubeMesh::new(2);
        let checks: Vec<Coo> = vec![
            assemble_mass(&mesh, &DofMap::velocity_mini(&mesh), &TET_DEG_9),
            assemble_grad_grad(&mesh, &DofMap::velocity_mini(&mesh), &TET_DEG_9),
            assemble_curl_curl(&mesh, &DofMap::velocity_mini(&mesh), &TET_DEG_9),
            assemble_div_div(&mesh, &DofMap::angular_p1(&mesh), &TET_DEG_7),
            assemble_mass(&mesh, &DofMap::edge_ne0(&mesh, true), &TET_DEG_7),
            assemble_mass(&mesh, &DofMap::face_rt0(&mesh, true), &TET_DEG_7),
            assemble_div_div(&mesh, &DofMap::face_rt0(&mesh, true), &TET_DEG_7),
        ];
        for coo in &checks {
            let a = dense(coo);
            let scale = a.abs().max();
            let asym = (&a - a.transpose()).abs().max();
            assert!(asym <= 1e-14 * scale, "asymmetry {asym} at scale {scale}");
        }
    }

    #[test]
    fn convection_matches_the_analytic_trilinear_form() {
        // b(w, v, s) with w = (1,2,3), v = (5,7,11) constant, s = (x,y,z):
        // (w·∇)v = 0 and (w·∇)s = w, so b = −½ ∫ w·v = −26.
        let mesh = CubeMesh::new(1);
        let map = DofMap::velocity_mini(&mesh);
        let w = FeFunction::interpolate_mini(&mesh, |_| [1.0, 2.0, 3.0]);
        let v = FeFunction::interpolate_mini(&mesh, |_| [5.0, 7.0, 11.0]);
        let s = FeFunction::interpolate_mini(&mesh, |p| p);
        let n = assemble_convection(&mesh, &w, &map, &TET_DEG_9);
        let val = quadratic(&n, &s.coeffs, &v.coeffs);
        assert!((val + 26.0).abs() < 1e-12, "b = {val}");
    }

    #[test]
    fn c_form_matches_the_analytic_value_for_constant_magnetization() {
        // c(v, m, F) with v = (1,1,1), m = (1,2,3) (divergence-free),
        // F = (x,y,z): c = ½ (m·v, div F) = ½·6·3 = 9.
        let mesh = CubeMesh::new(1);
        let rt = DofMap::face_rt0(&mesh, false);
        let v = FeFunction::interpolate_mini(&mesh, |_| [1.0, 1.0, 1.0]);
        let m = FeFunction::interpolate_rt0(&mesh, |_| [1.0, 2.0, 3.0]);
        let f = FeFunction::interpolate_rt0(&mesh, |p| p);
        let x = assemble_c_form(&mesh, &v, &rt, &TET_DEG_7);
        let val = quadratic(&x, &f.coeffs, &m.coeffs);
        assert!((val - 9.0).abs() < 1e-12, "c = {val}");
    }

    #[test]
    fn cross_matrix_agrees_with_the_pointwise_cross_product() {
        // w = (1,0,0), a = (0,1,0): w × a = (0,0,1), so the matrix-vector
        // product must equal the load of the constant field (0,0,1).
        let mesh = CubeMesh::new(2);
        let rt = DofMap::face_rt0(&mesh, false);
        let w = FeFunction::interpolate_mini(&mesh, |_| [1.0, 0.0, 0.0]);
        let a = FeFunction::interpolate_rt0(&mesh, |_| [0.0, 1.0, 0.0]);
        let x = assemble_cross(&mesh, &w, &rt, &rt, &TET_DEG_7);
        let got = x.apply(&a.coeffs);
        let want = assemble_load_vec(&mesh, &rt, &TET_DEG_7, |_, _, _, _| [0.0, 0.0, 1.0]);
        for (g, w) in got.iter().zip(&want) {
            assert!((g - w).abs() < 1e-13);
        }
    }

    #[test]
    fn cross_pairings_are_negative_transposes_of_each_other() {
        let mesh = CubeMesh::new(2);
        let ne = DofMap::edge_ne0(&mesh, true);
        let rt = DofMap::face_rt0(&mesh, true);
        let w = FeFunction::interpolate_mini(&mesh, |p| {
            [p[1] * p[2], p[0] - p[2] * p[2], p[0] * p[1] + 1.0]
        });
        let xk = dense(&assemble_cross(&mesh, &w, &ne, &rt, &TET_DEG_7));
        let xm = dense(&assemble_cross(&mesh, &w, &rt, &ne, &TET_DEG_7));
        let err = (&xk + xm.transpose()).abs().max();
        assert!(err < 1e-13, "XK + XMᵀ deviates by {err}");
    }

    #[test]
    fn loads_are_stable_under_quadrature_refinement() {
        let mesh = CubeMesh::new(2);
        let pi = std::f64::consts::PI;
        let f = |x: [f64; 3]| {
            [
                (pi * x[0]).sin() * (pi * x[1]).sin(),
                x[1].exp() * x[2],
                x[0] * x[2] * x[2] + 0.5,
            ]
        };
        let g = |x: [f64; 3]| (pi * x[0]).cos() * x[1] + x[2];

        let rel = |a: &[f64], b: &[f64]| {
            let diff: f64 = a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum();
            let norm: f64 = b.iter().map(|x| x * x).sum();
            (diff / norm).sqrt()
        };

        let mini = DofMap::velocity_mini(&mesh);
        let ang = DofMap::angular_p1(&mesh);
        let ne = DofMap::edge_ne0(&mesh, true);
        let rt = DofMap::face_rt0(&mesh, false);
        let p1 = DofMap::pressure_p1(&mesh);
        let p0 = DofMap::const_p0(&mesh);

        // The MINI bubble gradient has degree 3, which costs two digits
        // against smooth data; loads tested against that space use the
        // degree-11 rule, everything else the degree-9 one.
        for (map, rule) in [(&mini, &TET_DEG_11), (&ang, &TET_DEG_9), (&ne, &TET_DEG_9), (&rt, &TET_DEG_9)]
        {
            let coarse = assemble_load_vec(&mesh, map, rule, |_, _, _, x| f(x));
            let fine = assemble_load_vec(&mesh, map, &TET_DEG_13, |_, _, _, x| f(x));
            assert!(rel(&coarse, &fine) < 1e-8, "{:?}", map.kind);
        }
        for (map, rule) in [(&mini, &TET_DEG_11), (&ang, &TET_DEG_9)] {
            let coarse = assemble_load_curl(&mesh, map, rule, |_, _, _, x| f(x));
            let fine = assemble_load_curl(&mesh, map, &TET_DEG_13, |_, _, _, x| f(x));
            assert!(rel(&coarse, &fine) < 1e-8, "curl {:?}", map.kind);
        }
        for map in [&p1, &p0] {
            let coarse = assemble_load_scalar(&mesh, map, &TET_DEG_9, |_, _, _, x| g(x));
            let fine = assemble_load_scalar(&mesh, map, &TET_DEG_13, |_, _, _, x| g(x));
            assert!(rel(&coarse, &fine) < 1e-8, "scalar {:?}", map.kind);
        }
        let coarse = assemble_load_div(&mesh, &rt, &TET_DEG_9, |_, _, _, x| g(x));
        let fine = assemble_load_div(&mesh, &rt, &TET_DEG_13, |_, _, _, x| g(x));
        assert!(rel(&coarse, &fine) < 1e-8, "div load");
    }

    #[test]
    fn matrices_are_stable_under_quadrature_refinement() {
        // All bilinear forms have polynomial integrands, so a degree bump
        // must reproduce them to rounding when paired with smooth
        // interpolated fields.
        let mesh = CubeMesh::new(2);
        let pi = std::f64::consts::PI;
        let smooth = |p: [f64; 3]| {
            [
                (pi * p[1]).sin() * p[2],
                p[0] * p[0] - p[2],
                (pi * p[0]).cos() + p[1] * p[2],
            ]
        };
        let mini = DofMap::velocity_mini(&mesh);
        let rt = DofMap::face_rt0(&mesh, false);
        let w = FeFunction::interpolate_mini(&mesh, smooth);
        let x = FeFunction::interpolate_mini(&mesh, |p| [p[0] * p[1], p[2], -p[0]]);
        let y = FeFunction::interpolate_mini(&mesh, |p| [p[2] * p[2], p[0], p[1] + 1.0]);
        let a = FeFunction::interpolate_rt0(&mesh, smooth);
        let b = FeFunction::interpolate_rt0(&mesh, |p| [p[1], p[2] * p[0], 1.0 - p[0]]);

        let pairs = [
            (
                assemble_convection(&mesh, &w, &mini, &TET_DEG_9),
                assemble_convection(&mesh, &w, &mini, &TET_DEG_11),
            ),
            (
                assemble_mass(&mesh, &mini, &TET_DEG_9),
                assemble_mass(&mesh, &mini, &TET_DEG_11),
            ),
        ];
        for (coarse, fine) in &pairs {
            let vc = quadratic(coarse, &x.coeffs, &y.coeffs);
            let vf = quadratic(fine, &x.coeffs, &y.coeffs);
            assert!((vc - vf).abs() <= 1e-12 * vf.abs().max(1.0), "{vc} vs {vf}");
        }
        let xc = assemble_c_form(&mesh, &w, &rt, &TET_DEG_7);
        let xf = assemble_c_form(&mesh, &w, &rt, &TET_DEG_9);
        let vc = quadratic(&xc, &a.coeffs, &b.coeffs);
        let vf = quadratic(&xf, &a.coeffs, &b.coeffs);
        assert!((vc - vf).abs() <= 1e-12 * vf.abs().max(1.0), "{vc} vs {vf}");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn convection_and_c_form_are_skew_for_random_coefficients(seed in 0u64..1u64 << 48) {
            // Splitmix-style generator: cheap, deterministic, good enough to
            // exercise arbitrary coefficient vectors.
            let mut state = seed.wrapping_add(0x9e3779b97f4a7c15);
            let mut next = move || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((state >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
            };
            let mesh = CubeMesh::new(2);
            let mini = DofMap::velocity_mini(&mesh);
            let rt = DofMap::face_rt0(&mesh, true);
            let ne = DofMap::edge_ne0(&mesh, true);
            let mut w = FeFunction::zeros(&mini);
            for c in w.coeffs.iter_mut() {
                *c = next();
            }

            let n = assemble_convection(&mesh, &w, &mini, &TET_DEG_9);
            let xv = assemble_c_form(&mesh, &w, &rt, &TET_DEG_7);
            let xr = assemble_cross(&mesh, &w, &rt, &rt, &TET_DEG_7);
            let xe = assemble_cross(&mesh, &w, &ne, &ne, &TET_DEG_7);
            for coo in [&n, &xv, &xr, &xe] {
                let x: Vec<f64> = (0..coo.ncols).map(|_| next()).collect();
                let scale: f64 = coo.entries.iter().map(|e| e.2.abs()).sum::<f64>().max(1e-30);
                let q = quadratic(coo, &x, &x);
                prop_assert!(q.abs() <= 1e-12 * scale, "xᵀAx = {q} at scale {scale}");
            }
        }
    }
}
