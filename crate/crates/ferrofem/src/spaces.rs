//! Finite element spaces, degree-of-freedom maps, and field evaluation.
//!
//! Six spaces cover the whole discretization (see the crate docs for which
//! field lives where):
//!
//! * [`SpaceKind::VelocityMini`] — vector P1 enriched with the quartic cell
//!   bubble `256·λ₀λ₁λ₂λ₃` per component; vertex dofs are nodal values,
//!   bubble dofs are bubble coefficients. Boundary vertex dofs constrained.
//! * [`SpaceKind::AngularP1`] — vector P1, boundary vertex dofs constrained.
//! * [`SpaceKind::PressureP1`] — scalar continuous P1, no essential
//!   constraints, zero mean imposed through a bordered multiplier row.
//! * [`SpaceKind::EdgeNe0`] — lowest-order Nédélec edge elements; the dof on
//!   edge `(a,b)`, `a<b`, is the circulation `∫_e v·dl` from `a` to `b`.
//!   Boundary edge dofs constrained (zero tangential trace).
//! * [`SpaceKind::FaceRt0`] — lowest-order Raviart-Thomas face elements; the
//!   dof on face `(a,b,c)` is the flux `∫_f v·n dA` through the global
//!   right-hand-rule normal. Boundary face dofs constrained when the space
//!   carries the zero-normal-trace condition.
//! * [`SpaceKind::ConstP0`] — piecewise constants, zero mean via multiplier.
//!
//! Every [`FeFunction`] stores a *full-length* coefficient vector, one entry
//! per dof including constrained ones; constrained entries hold their
//! prescribed values (zero except for the lifted velocity boundary data in
//! manufactured-solution runs). Assembly works on full indices and the
//! [`DofMap`] translates to free indices when a linear system is built.
//!
//! Whitney forms are evaluated directly in physical coordinates from the
//! barycentric gradients, using the *globally ascending* vertex order of each
//! edge/face, so shared entities get identical traces from both sides without
//! any sign bookkeeping.

use crate::forms::quadrature::{GAUSS_1D_DEG_7, TRI_DEG_7};
use crate::mesh::{cross, dot, scale, sub, CellGeometry, CubeMesh, LOCAL_EDGES, LOCAL_FACES};

/// Bubble normalization: value 1 at the barycenter.
pub const BUBBLE_SCALE: f64 = 256.0;

/// The finite element spaces used by the scheme.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpaceKind {
    VelocityMini,
    AngularP1,
    PressureP1,
    EdgeNe0,
    FaceRt0,
    ConstP0,
}

/// Degree-of-freedom map of one space on one mesh: full ↔ free index
/// translation, essential constraints, and mean-constraint weights.
pub struct DofMap {
    pub kind: SpaceKind,
    /// Total number of coefficients (including constrained dofs).
    pub n_full: usize,
    /// Number of unconstrained dofs.
    pub n_free: usize,
    free_of_full: Vec<u32>,
    full_of_free: Vec<u32>,
    /// `∫_Ω φ_i` per full dof for spaces with a zero-mean constraint.
    pub mean_weights: Option<Vec<f64>>,
}

const CONSTRAINED: u32 = u32::MAX;

impl DofMap {
    fn build(
        kind: SpaceKind,
        n_full: usize,
        mut constrained: impl FnMut(usize) -> bool,
        mean_weights: Option<Vec<f64>>,
    ) -> Self {
        let mut free_of_full = vec![CONSTRAINED; n_full];
        let mut full_of_free = Vec::new();
        for i in 0..n_full {
            if !constrained(i) {
                free_of_full[i] = full_of_free.len() as u32;
                full_of_free.push(i as u32);
            }
        }
        DofMap { kind, n_full, n_free: full_of_free.len(), free_of_full, full_of_free, mean_weights }
    }

    /// Vector MINI velocity space with zero boundary trace. Layout: vertex
    /// dofs `3v+d`, then bubble dofs `3V + 3c + d`.
    pub fn velocity_mini(mesh: &CubeMesh) -> Self {
        let nv = mesh.n_vertices();
        let n_full = 3 * (nv + mesh.n_cells());
        Self::build(
            SpaceKind::VelocityMini,
            n_full,
            |i| i < 3 * nv && mesh.boundary_vertex[i / 3],
            None,
        )
    }

    /// Vector P1 spin space with zero boundary trace. Layout: `3v+d`.
    pub fn angular_p1(mesh: &CubeMesh) -> Self {
        Self::build(SpaceKind::AngularP1, 3 * mesh.n_vertices(), |i| mesh.boundary_vertex[i / 3], None)
    }

    /// Scalar continuous P1 pressure space with a zero-mean constraint.
    pub fn pressure_p1(mesh: &CubeMesh) -> Self {
        let mut w = vec![0.0; mesh.n_vertices()];
        for c in 0..mesh.n_cells() {
            let quarter = mesh.cell_geometry(c).volume / 4.0;
            for v in mesh.cells[c] {
                w[v as usize] += quarter;
            }
        }
        Self::build(SpaceKind::PressureP1, mesh.n_vertices(), |_| false, Some(w))
    }

    /// Lowest-order Nédélec edge space; `zero_tangential_trace` constrains the
    /// boundary edge circulations. The auxiliary curl variable generally has a
    /// nonzero tangential boundary trace (only the magnetization's own traces
    /// vanish), so the solver uses the unconstrained variant for it.
    pub fn edge_ne0(mesh: &CubeMesh, zero_tangential_trace: bool) -> Self {
        Self::build(
            SpaceKind::EdgeNe0,
            mesh.n_edges(),
            |e| zero_tangential_trace && mesh.boundary_edge[e],
            None,
        )
    }

    /// Lowest-order Raviart-Thomas face space; `zero_normal_trace` constrains
    /// the boundary face fluxes (used for both `m` and, by default, `H`).
    pub fn face_rt0(mesh: &CubeMesh, zero_normal_trace: bool) -> Self {
        Self::build(
            SpaceKind::FaceRt0,
            mesh.n_faces(),
            |f| zero_normal_trace && mesh.boundary_face[f],
            None,
        )
    }

    /// Piecewise constant space with a zero-mean constraint.
    pub fn const_p0(mesh: &CubeMesh) -> Self {
        let w = (0..mesh.n_cells()).map(|c| mesh.cell_geometry(c).volume).collect();
        Self::build(SpaceKind::ConstP0, mesh.n_cells(), |_| false, Some(w))
    }

    /// Free index of a full dof, or `None` if constrained.
    #[inline]
    pub fn free_index(&self, full: usize) -> Option<usize> {
        let f = self.free_of_full[full];
        (f != CONSTRAINED).then_some(f as usize)
    }

    /// Full index of a free dof.
    #[inline]
    pub fn full_index(&self, free: usize) -> usize {
        self.full_of_free[free] as usize
    }

    /// Number of local dofs per cell.
    pub fn dofs_per_cell(&self) -> usize {
        match self.kind {
            SpaceKind::VelocityMini => 15,
            SpaceKind::AngularP1 => 12,
            SpaceKind::PressureP1 => 4,
            SpaceKind::EdgeNe0 => 6,
            SpaceKind::FaceRt0 => 4,
            SpaceKind::ConstP0 => 1,
        }
    }

    /// Appends the full dof indices of cell `c` in local order. Local order
    /// matches the basis order of [`CellKit`]: vertex-major with components
    /// fastest for the vector H¹ spaces, then bubbles; [`LOCAL_EDGES`] /
    /// [`LOCAL_FACES`] slot order for the edge/face spaces.
    pub fn push_cell_dofs(&self, mesh: &CubeMesh, c: usize, out: &mut Vec<u32>) {
        let cell = mesh.cells[c];
        match self.kind {
            SpaceKind::VelocityMini => {
                for v in cell {
                    for d in 0..3 {
                        out.push(3 * v + d);
                    }
                }
                let base = 3 * mesh.n_vertices() as u32;
                for d in 0..3 {
                    out.push(base + 3 * c as u32 + d);
                }
            }
            SpaceKind::AngularP1 => {
                for v in cell {
                    for d in 0..3 {
                        out.push(3 * v + d);
                    }
                }
            }
            SpaceKind::PressureP1 => out.extend_from_slice(&cell),
            SpaceKind::EdgeNe0 => out.extend_from_slice(&mesh.cell_edges[c]),
            SpaceKind::FaceRt0 => out.extend_from_slice(&mesh.cell_faces[c]),
            SpaceKind::ConstP0 => out.push(c as u32),
        }
    }
}

/// Per-cell evaluation kit: barycentric gradients, their pairwise cross
/// products, and the globally ascending vertex order of each edge and face.
pub struct CellKit {
    pub geo: CellGeometry,
    /// `cross_g[i][j] = ∇λ_i × ∇λ_j`.
    cross_g: [[[f64; 3]; 4]; 4],
    /// Local endpoints of each edge slot, ordered by ascending global id.
    asc_edge: [(usize, usize); 6],
    /// Local vertices of each face slot, ordered by ascending global id.
    asc_face: [(usize, usize, usize); 4],
}

impl CellKit {
    pub fn new(mesh: &CubeMesh, c: usize) -> Self {
        let geo = mesh.cell_geometry(c);
        let cell = mesh.cells[c];
        let mut cross_g = [[[0.0; 3]; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                cross_g[i][j] = cross(geo.grad_lambda[i], geo.grad_lambda[j]);
            }
        }
        let mut asc_edge = [(0, 0); 6];
        for (s, [a, b]) in LOCAL_EDGES.iter().enumerate() {
            asc_edge[s] = if cell[*a] < cell[*b] { (*a, *b) } else { (*b, *a) };
        }
        let mut asc_face = [(0, 0, 0); 4];
        for (s, f) in LOCAL_FACES.iter().enumerate() {
            let mut tri = *f;
            tri.sort_unstable_by_key(|&l| cell[l]);
            asc_face[s] = (tri[0], tri[1], tri[2]);
        }
        CellKit { geo, cross_g, asc_edge, asc_face }
    }

    /// Physical coordinates of a barycentric point.
    #[inline]
    pub fn point(&self, lambda: &[f64; 4]) -> [f64; 3] {
        self.geo.point(lambda)
    }

    /// Cell bubble value.
    #[inline]
    pub fn bubble(lambda: &[f64; 4]) -> f64 {
        BUBBLE_SCALE * lambda[0] * lambda[1] * lambda[2] * lambda[3]
    }

    /// Cell bubble gradient.
    #[inline]
    pub fn bubble_grad(&self, lambda: &[f64; 4]) -> [f64; 3] {
        let mut g = [0.0; 3];
        for i in 0..4 {
            let mut p = BUBBLE_SCALE;
            for j in 0..4 {
                if j != i {
                    p *= lambda[j];
                }
            }
            for d in 0..3 {
                g[d] += p * self.geo.grad_lambda[i][d];
            }
        }
        g
    }

    /// Whitney edge function of slot `s`: `λ_a ∇λ_b − λ_b ∇λ_a` with `(a,b)`
    /// the globally ascending endpoints; has unit circulation along its edge.
    #[inline]
    pub fn ne0(&self, s: usize, lambda: &[f64; 4]) -> [f64; 3] {
        let (a, b) = self.asc_edge[s];
        let (ga, gb) = (self.geo.grad_lambda[a], self.geo.grad_lambda[b]);
        [
            lambda[a] * gb[0] - lambda[b] * ga[0],
            lambda[a] * gb[1] - lambda[b] * ga[1],
            lambda[a] * gb[2] - lambda[b] * ga[2],
        ]
    }

    /// Curl of the Whitney edge function of slot `s` (constant).
    #[inline]
    pub fn ne0_curl(&self, s: usize) -> [f64; 3] {
        let (a, b) = self.asc_edge[s];
        scale(self.cross_g[a][b], 2.0)
    }

    /// Whitney face function of slot `s`, built on the globally ascending
    /// triple; has unit flux through its face's global normal.
    #[inline]
    pub fn rt0(&self, s: usize, lambda: &[f64; 4]) -> [f64; 3] {
        let (a, b, c) = self.asc_face[s];
        let (xbc, xca, xab) = (self.cross_g[b][c], self.cross_g[c][a], self.cross_g[a][b]);
        [
            2.0 * (lambda[a] * xbc[0] + lambda[b] * xca[0] + lambda[c] * xab[0]),
            2.0 * (lambda[a] * xbc[1] + lambda[b] * xca[1] + lambda[c] * xab[1]),
            2.0 * (lambda[a] * xbc[2] + lambda[b] * xca[2] + lambda[c] * xab[2]),
        ]
    }

    /// Divergence of the Whitney face function of slot `s` (constant,
    /// `±1/volume`).
    #[inline]
    pub fn rt0_div(&self, s: usize) -> f64 {
        let (a, b, c) = self.asc_face[s];
        6.0 * dot(self.geo.grad_lambda[a], self.cross_g[b][c])
    }
}

/// A finite element field: full-length coefficient vector over one space.
#[derive(Clone, Debug)]
pub struct FeFunction {
    pub kind: SpaceKind,
    pub coeffs: Vec<f64>,
}

impl FeFunction {
    /// The zero field.
    pub fn zeros(map: &DofMap) -> Self {
        FeFunction { kind: map.kind, coeffs: vec![0.0; map.n_full] }
    }

    /// Nodal interpolant into the MINI space: vertex values, zero bubbles.
    pub fn interpolate_mini(mesh: &CubeMesh, f: impl Fn([f64; 3]) -> [f64; 3]) -> Self {
        let nv = mesh.n_vertices();
        let mut coeffs = vec![0.0; 3 * (nv + mesh.n_cells())];
        for (v, &p) in mesh.vertices.iter().enumerate() {
            let val = f(p);
            coeffs[3 * v..3 * v + 3].copy_from_slice(&val);
        }
        FeFunction { kind: SpaceKind::VelocityMini, coeffs }
    }

    /// Nodal interpolant into vector P1.
    pub fn interpolate_p1_vec(mesh: &CubeMesh, f: impl Fn([f64; 3]) -> [f64; 3]) -> Self {
        let mut coeffs = vec![0.0; 3 * mesh.n_vertices()];
        for (v, &p) in mesh.vertices.iter().enumerate() {
            let val = f(p);
            coeffs[3 * v..3 * v + 3].copy_from_slice(&val);
        }
        FeFunction { kind: SpaceKind::AngularP1, coeffs }
    }

    /// Nodal interpolant into scalar P1.
    pub fn interpolate_p1_scalar(mesh: &CubeMesh, f: impl Fn([f64; 3]) -> f64) -> Self {
        let coeffs = mesh.vertices.iter().map(|&p| f(p)).collect();
        FeFunction { kind: SpaceKind::PressureP1, coeffs }
    }

    /// Classical face-flux interpolant into RT0: dof `f` is `∫_f v·n dA`,
    /// computed with a degree-7 triangle rule.
    pub fn interpolate_rt0(mesh: &CubeMesh, f: impl Fn([f64; 3]) -> [f64; 3]) -> Self {
        let mut coeffs = vec![0.0; mesh.n_faces()];
        for (fid, &[a, b, c]) in mesh.faces.iter().enumerate() {
            let pa = mesh.vertices[a as usize];
            let pb = mesh.vertices[b as usize];
            let pc = mesh.vertices[c as usize];
            let (e1, e2) = (sub(pb, pa), sub(pc, pa));
            // The raw normal e1×e2 has length 2·area, which is exactly the
            // parameterization Jacobian: ∫_f v·n dA = ∫_tri v·(e1×e2) dξdη.
            let n_raw = cross(e1, e2);
            let mut flux = 0.0;
            for &[x, y, w] in TRI_DEG_7.iter() {
                let p = [
                    pa[0] + x * e1[0] + y * e2[0],
                    pa[1] + x * e1[1] + y * e2[1],
                    pa[2] + x * e1[2] + y * e2[2],
                ];
                flux += w * dot(f(p), n_raw);
            }
            coeffs[fid] = flux;
        }
        FeFunction { kind: SpaceKind::FaceRt0, coeffs }
    }

    /// Classical edge-circulation interpolant into NE0: dof `e` is `∫_e v·dl`,
    /// computed with a degree-7 Gauss rule.
    pub fn interpolate_ne0(mesh: &CubeMesh, f: impl Fn([f64; 3]) -> [f64; 3]) -> Self {
        let mut coeffs = vec![0.0; mesh.n_edges()];
        for (eid, &[a, b]) in mesh.edges.iter().enumerate() {
            let pa = mesh.vertices[a as usize];
            let d = sub(mesh.vertices[b as usize], pa);
            let mut circ = 0.0;
            for &[t, w] in GAUSS_1D_DEG_7.iter() {
                let p = [pa[0] + t * d[0], pa[1] + t * d[1], pa[2] + t * d[2]];
                circ += w * dot(f(p), d);
            }
            coeffs[eid] = circ;
        }
        FeFunction { kind: SpaceKind::EdgeNe0, coeffs }
    }

    /// Vector value at a barycentric point of cell `c`.
    pub fn eval_vec(&self, mesh: &CubeMesh, kit: &CellKit, c: usize, lambda: &[f64; 4]) -> [f64; 3] {
        let cell = mesh.cells[c];
        let mut out = [0.0; 3];
        match self.kind {
            SpaceKind::VelocityMini => {
                for (l, v) in cell.iter().enumerate() {
                    let base = 3 * *v as usize;
                    for d in 0..3 {
                        out[d] += lambda[l] * self.coeffs[base + d];
                    }
                }
                let bub = CellKit::bubble(lambda);
                let base = 3 * (mesh.n_vertices() + c);
                for d in 0..3 {
                    out[d] += bub * self.coeffs[base + d];
                }
            }
            SpaceKind::AngularP1 => {
                for (l, v) in cell.iter().enumerate() {
                    let base = 3 * *v as usize;
                    for d in 0..3 {
                        out[d] += lambda[l] * self.coeffs[base + d];
                    }
                }
            }
            SpaceKind::EdgeNe0 => {
                for s in 0..6 {
                    let coeff = self.coeffs[mesh.cell_edges[c][s] as usize];
                    let w = kit.ne0(s, lambda);
                    for d in 0..3 {
                        out[d] += coeff * w[d];
                    }
                }
            }
            SpaceKind::FaceRt0 => {
                for s in 0..4 {
                    let coeff = self.coeffs[mesh.cell_faces[c][s] as usize];
                    let w = kit.rt0(s, lambda);
                    for d in 0..3 {
                        out[d] += coeff * w[d];
                    }
                }
            }
            _ => panic!("eval_vec on a scalar space"),
        }
        out
    }

    /// Scalar value at a barycentric point of cell `c`.
    pub fn eval_scalar(&self, mesh: &CubeMesh, c: usize, lambda: &[f64; 4]) -> f64 {
        match self.kind {
            SpaceKind::PressureP1 => {
                let cell = mesh.cells[c];
                (0..4).map(|l| lambda[l] * self.coeffs[cell[l] as usize]).sum()
            }
            SpaceKind::ConstP0 => self.coeffs[c],
            _ => panic!("eval_scalar on a vector space"),
        }
    }

    /// Jacobian `[i][j] = ∂uᵢ/∂xⱼ` at a barycentric point of cell `c`
    /// (vector H¹ spaces only).
    pub fn eval_grad_vec(
        &self,
        mesh: &CubeMesh,
        kit: &CellKit,
        c: usize,
        lambda: &[f64; 4],
    ) -> [[f64; 3]; 3] {
        let cell = mesh.cells[c];
        let mut out = [[0.0; 3]; 3];
        for (l, v) in cell.iter().enumerate() {
            let g = kit.geo.grad_lambda[l];
            let base = 3 * *v as usize;
            for i in 0..3 {
                let coeff = self.coeffs[base + i];
                for j in 0..3 {
                    out[i][j] += coeff * g[j];
                }
            }
        }
        if self.kind == SpaceKind::VelocityMini {
            let gb = kit.bubble_grad(lambda);
            let base = 3 * (mesh.n_vertices() + c);
            for i in 0..3 {
                let coeff = self.coeffs[base + i];
                for j in 0..3 {
                    out[i][j] += coeff * gb[j];
                }
            }
        } else {
            debug_assert_eq!(self.kind, SpaceKind::AngularP1);
        }
        out
    }

    /// Divergence at a barycentric point (constant per cell for RT0).
    pub fn eval_div(&self, mesh: &CubeMesh, kit: &CellKit, c: usize, lambda: &[f64; 4]) -> f64 {
        match self.kind {
            SpaceKind::FaceRt0 => (0..4)
                .map(|s| self.coeffs[mesh.cell_faces[c][s] as usize] * kit.rt0_div(s))
                .sum(),
            _ => {
                let g = self.eval_grad_vec(mesh, kit, c, lambda);
                g[0][0] + g[1][1] + g[2][2]
            }
        }
    }

    /// Curl at a barycentric point (constant per cell for NE0).
    pub fn eval_curl(&self, mesh: &CubeMesh, kit: &CellKit, c: usize, lambda: &[f64; 4]) -> [f64; 3] {
        match self.kind {
            SpaceKind::EdgeNe0 => {
                let mut out = [0.0; 3];
                for s in 0..6 {
                    let coeff = self.coeffs[mesh.cell_edges[c][s] as usize];
                    let w = kit.ne0_curl(s);
                    for d in 0..3 {
                        out[d] += coeff * w[d];
                    }
                }
                out
            }
            _ => {
                let g = self.eval_grad_vec(mesh, kit, c, lambda);
                [g[2][1] - g[1][2], g[0][2] - g[2][0], g[1][0] - g[0][1]]
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::quadrature::TET_DEG_5;

    #[test]
    fn free_dof_counts() {
        let mesh = CubeMesh::new(2);
        // 1 interior vertex and 48 cells: 3·(1+48) velocity dofs.
        assert_eq!(DofMap::velocity_mini(&mesh).n_free, 147);
        assert_eq!(DofMap::angular_p1(&mesh).n_free, 3);
        // 98 edges, 72 on the boundary.
        assert_eq!(DofMap::edge_ne0(&mesh, true).n_free, 26);
        // 120 faces, 48 on the boundary.
        assert_eq!(DofMap::face_rt0(&mesh, true).n_free, 72);
        assert_eq!(DofMap::face_rt0(&mesh, false).n_free, 120);
        assert_eq!(DofMap::pressure_p1(&mesh).n_free, 27);
        assert_eq!(DofMap::const_p0(&mesh).n_free, 48);
    }

    #[test]
    fn mean_weights_integrate_one() {
        let mesh = CubeMesh::new(3);
        for map in [DofMap::pressure_p1(&mesh), DofMap::const_p0(&mesh)] {
            let w = map.mean_weights.as_ref().unwrap();
            let total: f64 = w.iter().sum();
            assert!((total - 1.0).abs() < 1e-13, "{:?}", map.kind);
        }
    }

    #[test]
    fn free_full_roundtrip() {
        let mesh = CubeMesh::new(2);
        let map = DofMap::edge_ne0(&mesh, true);
        for free in 0..map.n_free {
            assert_eq!(map.free_index(map.full_index(free)), Some(free));
        }
        let n_constrained = (0..map.n_full).filter(|&i| map.free_index(i).is_none()).count();
        assert_eq!(n_constrained, map.n_full - map.n_free);
    }

    /// Circulation duality: `∫_e w_s·dl = δ_{se}` over the edges of each cell.
    #[test]
    fn ne0_circulations_are_kronecker() {
        let mesh = CubeMesh::new(2);
        for c in 0..mesh.n_cells() {
            let kit = CellKit::new(&mesh, c);
            let cell = mesh.cells[c];
            for s in 0..6 {
                for t in 0..6 {
                    let [ea, eb] = mesh.edges[mesh.cell_edges[c][t] as usize];
                    let pa = mesh.vertices[ea as usize];
                    let d = sub(mesh.vertices[eb as usize], pa);
                    let mut circ = 0.0;
                    for &[x, w] in GAUSS_1D_DEG_7.iter() {
                        let p = [pa[0] + x * d[0], pa[1] + x * d[1], pa[2] + x * d[2]];
                        // Barycentric coordinates of p in this cell.
                        let lambda = barycentric(&kit.geo, p);
                        circ += w * dot(kit.ne0(s, &lambda), d);
                    }
                    let expect = if s == t { 1.0 } else { 0.0 };
                    assert!(
                        (circ - expect).abs() < 1e-12,
                        "cell {c} slots {s},{t}: {circ} vs {expect} (cell {cell:?})"
                    );
                }
            }
        }
    }

    /// Flux duality: `∫_f w_s·n dA = δ_{sf}` with the global normal.
    #[test]
    fn rt0_fluxes_are_kronecker() {
        let mesh = CubeMesh::new(2);
        for c in 0..mesh.n_cells() {
            let kit = CellKit::new(&mesh, c);
            for s in 0..4 {
                for t in 0..4 {
                    let [fa, fb, fc] = mesh.faces[mesh.cell_faces[c][t] as usize];
                    let pa = mesh.vertices[fa as usize];
                    let e1 = sub(mesh.vertices[fb as usize], pa);
                    let e2 = sub(mesh.vertices[fc as usize], pa);
                    let n_raw = cross(e1, e2);
                    let mut flux = 0.0;
                    for &[x, y, w] in TRI_DEG_7.iter() {
                        let p = [
                            pa[0] + x * e1[0] + y * e2[0],
                            pa[1] + x * e1[1] + y * e2[1],
                            pa[2] + x * e1[2] + y * e2[2],
                        ];
                        let lambda = barycentric(&kit.geo, p);
                        flux += w * dot(kit.rt0(s, &lambda), n_raw);
                    }
                    let expect = if s == t { 1.0 } else { 0.0 };
                    assert!((flux - expect).abs() < 1e-12, "cell {c} slots {s},{t}: {flux}");
                }
            }
        }
    }

    /// `div w_s = D_{cs}/|K|`: the Whitney divergence matches the incidence sign.
    #[test]
    fn rt0_divergence_matches_incidence() {
        let mesh = CubeMesh::new(2);
        for c in 0..mesh.n_cells() {
            let kit = CellKit::new(&mesh, c);
            for s in 0..4 {
                let expect = mesh.cell_face_sign[c][s] as f64 / kit.geo.volume;
                assert!((kit.rt0_div(s) - expect).abs() < 1e-9 * expect.abs());
            }
        }
    }

    /// curl maps NE0 coefficients to RT0 coefficients through `C`: evaluating
    /// `curl v_h` pointwise agrees with the RT0 field with coefficients `C·v`.
    #[test]
    fn ne0_curl_is_incidence_applied() {
        let mesh = CubeMesh::new(2);
        // Deterministic pseudo-random edge coefficients.
        let coeffs: Vec<f64> =
            (0..mesh.n_edges()).map(|e| ((e * 2654435761) % 1000) as f64 / 500.0 - 1.0).collect();
        let v = FeFunction { kind: SpaceKind::EdgeNe0, coeffs: coeffs.clone() };
        let c_inc = mesh.curl_incidence();
        let mut rt_coeffs = vec![0.0; mesh.n_faces()];
        for (f, row) in c_inc.iter().enumerate() {
            for &(e, s) in row {
                rt_coeffs[f] += s as f64 * coeffs[e as usize];
            }
        }
        let curl_v = FeFunction { kind: SpaceKind::FaceRt0, coeffs: rt_coeffs };
        for c in 0..mesh.n_cells() {
            let kit = CellKit::new(&mesh, c);
            for &[x, y, z, _] in TET_DEG_5.data.iter() {
                let lambda = [1.0 - x - y - z, x, y, z];
                let a = v.eval_curl(&mesh, &kit, c, &lambda);
                let b = curl_v.eval_vec(&mesh, &kit, c, &lambda);
                for d in 0..3 {
                    assert!((a[d] - b[d]).abs() < 1e-10, "cell {c} comp {d}");
                }
            }
        }
    }

    /// Gradients of P1 land in NE0 with coefficients `G·q` (exact sequence).
    #[test]
    fn p1_gradient_is_incidence_applied() {
        let mesh = CubeMesh::new(2);
        let q = FeFunction::interpolate_p1_scalar(&mesh, |p| {
            1.5 * p[0] - 2.0 * p[1] * p[1] + p[2] * p[0]
        });
        let g_inc = mesh.grad_incidence();
        let mut ne_coeffs = vec![0.0; mesh.n_edges()];
        for (e, row) in g_inc.iter().enumerate() {
            for &(v, s) in row {
                ne_coeffs[e] += s as f64 * q.coeffs[v as usize];
            }
        }
        let grad_q = FeFunction { kind: SpaceKind::EdgeNe0, coeffs: ne_coeffs };
        for c in 0..mesh.n_cells() {
            let kit = CellKit::new(&mesh, c);
            let cell = mesh.cells[c];
            // ∇q_h is constant; reconstruct from vertex values.
            let mut grad = [0.0; 3];
            for l in 0..4 {
                let val = q.coeffs[cell[l] as usize];
                for d in 0..3 {
                    grad[d] += val * kit.geo.grad_lambda[l][d];
                }
            }
            let lambda = [0.25; 4];
            let w = grad_q.eval_vec(&mesh, &kit, c, &lambda);
            for d in 0..3 {
                assert!((w[d] - grad[d]).abs() < 1e-11);
            }
        }
    }

    /// RT0 fields built from the face interpolant have conforming normal
    /// traces: the P0 divergence of the interpolant of a smooth field equals
    /// the mean of the true divergence cellwise (commuting property).
    #[test]
    fn rt0_interpolant_commutes_with_divergence() {
        let mesh = CubeMesh::new(2);
        let f = |p: [f64; 3]| [p[0] * p[0], p[1] * p[2], -p[0] * p[1]];
        let div_f = |p: [f64; 3]| 2.0 * p[0] + p[2] - 0.0;
        let mh = FeFunction::interpolate_rt0(&mesh, f);
        for c in 0..mesh.n_cells() {
            let kit = CellKit::new(&mesh, c);
            let lambda = [0.25; 4];
            let dh = mh.eval_div(&mesh, &kit, c, &lambda);
            // Mean of div f over the cell by quadrature.
            let mut mean = 0.0;
            for &[x, y, z, w] in TET_DEG_5.data.iter() {
                let p = kit.point(&[1.0 - x - y - z, x, y, z]);
                mean += 6.0 * w * div_f(p);
            }
            assert!((dh - mean).abs() < 1e-9, "cell {c}: {dh} vs {mean}");
        }
    }

    /// Nodal interpolation reproduces linear fields exactly, including through
    /// gradient, curl, and divergence evaluation.
    #[test]
    fn p1_interpolation_reproduces_linears()
    {
        let mesh = CubeMesh::new(2);
        let a = [[0.5, -1.0, 2.0], [1.0, 0.25, -0.75], [-2.0, 1.5, 0.5]];
        let b = [0.1, -0.2, 0.3];
        let f = |p: [f64; 3]| {
            [
                a[0][0] * p[0] + a[0][1] * p[1] + a[0][2] * p[2] + b[0],
                a[1][0] * p[0] + a[1][1] * p[1] + a[1][2] * p[2] + b[1],
                a[2][0] * p[0] + a[2][1] * p[1] + a[2][2] * p[2] + b[2],
            ]
        };
        let uh = FeFunction::interpolate_mini(&mesh, f);
        let wh = FeFunction::interpolate_p1_vec(&mesh, f);
        for c in [0usize, 17, 33] {
            let kit = CellKit::new(&mesh, c);
            let lambda = [0.3, 0.2, 0.4, 0.1];
            let p = kit.point(&lambda);
            for func in [&uh, &wh] {
                let v = func.eval_vec(&mesh, &kit, c, &lambda);
                let vf = f(p);
                for d in 0..3 {
                    assert!((v[d] - vf[d]).abs() < 1e-12);
                }
                let g = func.eval_grad_vec(&mesh, &kit, c, &lambda);
                for i in 0..3 {
                    for j in 0..3 {
                        assert!((g[i][j] - a[i][j]).abs() < 1e-11);
                    }
                }
                let div = func.eval_div(&mesh, &kit, c, &lambda);
                assert!((div - (a[0][0] + a[1][1] + a[2][2])).abs() < 1e-11);
                let curl = func.eval_curl(&mesh, &kit, c, &lambda);
                let expect = [a[2][1] - a[1][2], a[0][2] - a[2][0], a[1][0] - a[0][1]];
                for d in 0..3 {
                    assert!((curl[d] - expect[d]).abs() < 1e-11);
                }
            }
        }
    }

    /// Constants lie in RT0 and gradients interpolate to discretely curl-free
    /// NE0 fields: the classical interpolants reproduce both structures.
    #[test]
    fn interpolants_reproduce_constants_and_gradients() {
        let mesh = CubeMesh::new(2);

        let cst = [0.3, -1.25, 0.8];
        let ch = FeFunction::interpolate_rt0(&mesh, |_| cst);
        for cell in [0usize, 13, 29] {
            let kit = CellKit::new(&mesh, cell);
            for lambda in [[0.25; 4], [0.55, 0.15, 0.2, 0.1]] {
                let v = ch.eval_vec(&mesh, &kit, cell, &lambda);
                for d in 0..3 {
                    assert!((v[d] - cst[d]).abs() < 1e-12);
                }
            }
            assert!(ch.eval_div(&mesh, &kit, cell, &[0.25; 4]).abs() < 1e-11);
        }

        // ∇(xyz) has quadratic tangential components along straight edges, so
        // the two-point edge rule integrates the circulations exactly and the
        // discrete curl (the edge-curl incidence) annihilates them.
        let gh = FeFunction::interpolate_ne0(&mesh, |p| [p[1] * p[2], p[0] * p[2], p[0] * p[1]]);
        for (f, row) in mesh.curl_incidence().iter().enumerate() {
            let mut sum = 0.0;
            for &(e, s) in row {
                sum += s as f64 * gh.coeffs[e as usize];
            }
            assert!(sum.abs() < 1e-13, "face {f}: discrete curl {sum}");
        }
    }

    /// Discrete inf-sup condition for the velocity–pressure pair: the
    /// smallest nonzero generalized singular value of the divergence coupling
    /// (the inf-sup constant β with the H¹ velocity metric and L² pressure
    /// metric) stays above a regression floor, and the only degenerate mode
    /// is the constant pressure.
    #[test]
    fn velocity_pressure_pair_is_inf_sup_stable() {
        use crate::forms::quadrature::TET_DEG_7;
        use crate::forms::{assemble_div_coupling, assemble_grad_grad, assemble_mass};
        use nalgebra::DMatrix;

        for k in [1usize, 2] {
            let mesh = CubeMesh::new(k);
            let map_u = DofMap::velocity_mini(&mesh);
            let map_p = DofMap::pressure_p1(&mesh);
            let dense = |coo: &crate::forms::Coo, rows: &DofMap, cols: &DofMap| {
                let mut m = DMatrix::zeros(rows.n_free, cols.n_free);
                for &(i, j, v) in &coo.entries {
                    if let (Some(fi), Some(fj)) =
                        (rows.free_index(i as usize), cols.free_index(j as usize))
                    {
                        m[(fi, fj)] += v;
                    }
                }
                m
            };
            let a = dense(&assemble_grad_grad(&mesh, &map_u, &TET_DEG_7), &map_u, &map_u);
            let b = dense(&assemble_div_coupling(&mesh, &map_p, &map_u, &TET_DEG_7), &map_p, &map_u);
            let mp = dense(&assemble_mass(&mesh, &map_p, &TET_DEG_7), &map_p, &map_p);

            // β² values are the generalized eigenvalues of the Schur
            // complement B A⁻¹ Bᵀ against the pressure mass matrix.
            let chol_a = a.cholesky().expect("velocity stiffness is SPD on the free space");
            let schur = &b * chol_a.solve(&b.transpose());
            let lp = mp.cholesky().expect("pressure mass is SPD").l();
            // L⁻¹ S L⁻ᵀ by two triangular solves keeps the problem symmetric.
            let x: DMatrix<f64> =
                lp.solve_lower_triangular(&schur).expect("triangular solve");
            let xt: DMatrix<f64> = x.transpose();
            let t: DMatrix<f64> =
                lp.solve_lower_triangular(&xt).expect("triangular solve").transpose();
            let mut eigs: Vec<f64> = t.symmetric_eigen().eigenvalues.iter().copied().collect();
            eigs.sort_by(f64::total_cmp);
            // One null mode: constant pressures pair to zero with zero-trace
            // velocities. Everything else stays uniformly positive.
            assert!(eigs[0].abs() < 1e-10, "K={k}: constant mode {:.3e}", eigs[0]);
            let beta = eigs[1].max(0.0).sqrt();
            assert!(beta >= 1e-3, "K={k}: inf-sup constant {beta:.4}");
        }
    }

    /// Barycentric coordinates of a physical point.
    fn barycentric(geo: &CellGeometry, p: [f64; 3]) -> [f64; 4] {
        let mut lambda = [0.0; 4];
        for i in 0..4 {
            lambda[i] = 1.0 + dot(geo.grad_lambda[i], sub(p, geo.verts[i]));
        }
        lambda
    }
}
