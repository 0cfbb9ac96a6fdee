//! Uniform Kuhn (Freudenthal) tetrahedral meshes of the unit cube `(0,1)³`.
//!
//! The cube is divided into `K³` sub-cubes and each sub-cube into six
//! tetrahedra along the vertex paths `c → c+e_{π1} → c+e_{π1}+e_{π2} →
//! c+(1,1,1)`, one per permutation `π` of the axes. All cells contain the
//! sub-cube body diagonal, the mesh is conforming, every cell has volume
//! `1/(6K³)`, and the mesh size is `h = √3/K` (the body diagonal).
//!
//! Entity conventions, relied on throughout the crate:
//! * vertices are numbered lexicographically by integer coordinate `(i,j,k)`
//!   with `k` fastest;
//! * cells are stored with positive signed volume;
//! * edges and faces are identified by their *sorted* global vertex tuples and
//!   enumerated lexicographically, so entity numbering is independent of which
//!   cells produced them;
//! * an edge `(a,b)`, `a < b`, is oriented from `a` to `b`; a face `(a,b,c)`,
//!   `a < b < c`, carries the right-hand-rule normal of that vertex order.
//!
//! With these orientations the combinatorial incidence matrices `G`
//! (edge×vertex), `C` (face×edge), and `D` (cell×face) represent gradient,
//! curl, and divergence on the lowest-order spaces exactly, and satisfy
//! `C·G = 0` and `D·C = 0` in integer arithmetic.

/// Local vertex index pairs of the six edges of a tetrahedron.
pub const LOCAL_EDGES: [[usize; 2]; 6] = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]];

/// Local vertex index triples of the four faces; slot `f` is opposite vertex `f`.
pub const LOCAL_FACES: [[usize; 3]; 4] = [[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]];

/// Conforming tetrahedral mesh of the unit cube with `K` subdivisions per axis.
pub struct CubeMesh {
    /// Subdivisions per axis.
    pub k: usize,
    /// Vertex coordinates, lexicographic in `(i,j,k)`, `k` fastest.
    pub vertices: Vec<[f64; 3]>,
    /// Cell vertex ids, positively oriented.
    pub cells: Vec<[u32; 4]>,
    /// Edge vertex pairs, ascending, in lexicographic order.
    pub edges: Vec<[u32; 2]>,
    /// Face vertex triples, ascending, in lexicographic order.
    pub faces: Vec<[u32; 3]>,
    /// Edge ids per cell, slot order [`LOCAL_EDGES`].
    pub cell_edges: Vec<[u32; 6]>,
    /// Face ids per cell, slot order [`LOCAL_FACES`].
    pub cell_faces: Vec<[u32; 4]>,
    /// `+1` where the face's global normal points out of the cell, else `-1`.
    pub cell_face_sign: Vec<[i8; 4]>,
    /// Whether each vertex lies on `∂Ω`.
    pub boundary_vertex: Vec<bool>,
    /// Whether each edge lies on `∂Ω` (i.e. belongs to a boundary face).
    pub boundary_edge: Vec<bool>,
    /// Whether each face lies on `∂Ω` (i.e. is incident to exactly one cell).
    pub boundary_face: Vec<bool>,
}

/// Affine geometry of one tetrahedron.
#[derive(Clone, Copy, Debug)]
pub struct CellGeometry {
    /// Vertex coordinates in stored order.
    pub verts: [[f64; 3]; 4],
    /// Barycentric gradients `∇λ_i` (constant over the cell).
    pub grad_lambda: [[f64; 3]; 4],
    /// Cell volume.
    pub volume: f64,
}

impl CellGeometry {
    /// Physical coordinates of the barycentric point `λ` (with `λ₀` implied).
    pub fn point(&self, lambda: &[f64; 4]) -> [f64; 3] {
        let mut x = [0.0; 3];
        for (l, v) in lambda.iter().zip(self.verts.iter()) {
            for d in 0..3 {
                x[d] += l * v[d];
            }
        }
        x
    }
}

impl CubeMesh {
    /// Builds the mesh with `k ≥ 1` subdivisions per axis.
    pub fn new(k: usize) -> Self {
        assert!(k >= 1, "subdivision count must be positive");
        let kp = k + 1;
        let vid = |i: usize, j: usize, l: usize| -> u32 { ((i * kp + j) * kp + l) as u32 };

        let mut vertices = Vec::with_capacity(kp * kp * kp);
        for i in 0..kp {
            for j in 0..kp {
                for l in 0..kp {
                    vertices.push([i as f64 / k as f64, j as f64 / k as f64, l as f64 / k as f64]);
                }
            }
        }

        // The six axis permutations, in a fixed order, with their parity.
        const PERMS: [([usize; 3], bool); 6] = [
            ([0, 1, 2], true),
            ([0, 2, 1], false),
            ([1, 0, 2], false),
            ([1, 2, 0], true),
            ([2, 0, 1], true),
            ([2, 1, 0], false),
        ];

        let mut cells = Vec::with_capacity(6 * k * k * k);
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    for (perm, even) in PERMS {
                        let mut c = [i, j, l];
                        let mut path = [vid(c[0], c[1], c[2]); 4];
                        for (step, &axis) in perm.iter().enumerate() {
                            c[axis] += 1;
                            path[step + 1] = vid(c[0], c[1], c[2]);
                        }
                        // Path order has ascending vertex ids but alternating
                        // orientation; swap the middle pair on odd permutations
                        // so every stored cell has positive volume.
                        if !even {
                            path.swap(1, 2);
                        }
                        cells.push(path);
                    }
                }
            }
        }

        // Collect edges and faces as sorted tuples, then number them
        // lexicographically. Faces keep their incidence count so boundary
        // faces (count 1) can be told apart from interior ones (count 2).
        let mut edges: Vec<[u32; 2]> = Vec::with_capacity(cells.len() * 6);
        let mut faces: Vec<[u32; 3]> = Vec::with_capacity(cells.len() * 4);
        for cell in &cells {
            for [a, b] in LOCAL_EDGES {
                let (x, y) = (cell[a], cell[b]);
                edges.push(if x < y { [x, y] } else { [y, x] });
            }
            for [a, b, c] in LOCAL_FACES {
                let mut f = [cell[a], cell[b], cell[c]];
                f.sort_unstable();
                faces.push(f);
            }
        }
        edges.sort_unstable();
        edges.dedup();
        faces.sort_unstable();
        let mut face_count = Vec::new();
        {
            let mut unique = Vec::new();
            let mut it = faces.iter().peekable();
            while let Some(f) = it.next() {
                let mut n = 1u8;
                while it.peek() == Some(&f) {
                    it.next();
                    n += 1;
                }
                unique.push(*f);
                face_count.push(n);
            }
            faces = unique;
        }

        let edge_id = |a: u32, b: u32| -> u32 {
            let key = if a < b { [a, b] } else { [b, a] };
            edges.binary_search(&key).expect("edge must exist") as u32
        };
        let face_id = |mut f: [u32; 3]| -> u32 {
            f.sort_unstable();
            faces.binary_search(&f).expect("face must exist") as u32
        };

        let mut cell_edges = Vec::with_capacity(cells.len());
        let mut cell_faces = Vec::with_capacity(cells.len());
        let mut cell_face_sign = Vec::with_capacity(cells.len());
        for cell in &cells {
            let mut ce = [0u32; 6];
            for (s, [a, b]) in LOCAL_EDGES.iter().enumerate() {
                ce[s] = edge_id(cell[*a], cell[*b]);
            }
            cell_edges.push(ce);

            let mut cf = [0u32; 4];
            let mut sg = [0i8; 4];
            for (s, [a, b, c]) in LOCAL_FACES.iter().enumerate() {
                let fid = face_id([cell[*a], cell[*b], cell[*c]]);
                cf[s] = fid;
                let [fa, fb, fc] = faces[fid as usize];
                // Outward test: the global right-hand-rule normal of the sorted
                // triple points out of the cell iff it points away from the
                // opposite vertex.
                let pa = vertices[fa as usize];
                let pb = vertices[fb as usize];
                let pc = vertices[fc as usize];
                let po = vertices[cell[s] as usize];
                let u = sub(pb, pa);
                let v = sub(pc, pa);
                let n = cross(u, v);
                let d = dot(n, sub(pa, po));
                debug_assert!(d.abs() > 1e-14);
                sg[s] = if d > 0.0 { 1 } else { -1 };
            }
            cell_faces.push(cf);
            cell_face_sign.push(sg);
        }

        let boundary_face: Vec<bool> = face_count.iter().map(|&n| n == 1).collect();
        let mut boundary_edge = vec![false; edges.len()];
        let mut boundary_vertex = vec![false; vertices.len()];
        for (f, verts) in faces.iter().enumerate() {
            if boundary_face[f] {
                for &v in verts {
                    boundary_vertex[v as usize] = true;
                }
                for pair in [[verts[0], verts[1]], [verts[0], verts[2]], [verts[1], verts[2]]] {
                    boundary_edge[edge_id(pair[0], pair[1]) as usize] = true;
                }
            }
        }

        CubeMesh {
            k,
            vertices,
            cells,
            edges,
            faces,
            cell_edges,
            cell_faces,
            cell_face_sign,
            boundary_vertex,
            boundary_edge,
            boundary_face,
        }
    }

    /// Mesh size: the common diameter `√3/K` of all cells.
    pub fn h(&self) -> f64 {
        3f64.sqrt() / self.k as f64
    }

    /// Number of vertices.
    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Number of cells.
    pub fn n_cells(&self) -> usize {
        self.cells.len()
    }

    /// Number of edges.
    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    /// Number of faces.
    pub fn n_faces(&self) -> usize {
        self.faces.len()
    }

    /// Affine geometry of cell `c`.
    pub fn cell_geometry(&self, c: usize) -> CellGeometry {
        let ids = self.cells[c];
        let verts = ids.map(|v| self.vertices[v as usize]);
        // Columns of J span the cell from vertex 0; rows of J⁻ᵀ are the
        // barycentric gradients ∇λ₁..∇λ₃, and ∇λ₀ closes the partition of
        // unity. det J = 6·volume > 0 by the stored orientation.
        let j = [sub(verts[1], verts[0]), sub(verts[2], verts[0]), sub(verts[3], verts[0])];
        let det = dot(j[0], cross(j[1], j[2]));
        debug_assert!(det > 0.0, "cell {c} is negatively oriented");
        let inv_det = 1.0 / det;
        // J⁻¹ rows from cofactors: ∇λ_{i+1} = (J⁻¹ eᵢ expressed in physical frame).
        let c0 = cross(j[1], j[2]);
        let c1 = cross(j[2], j[0]);
        let c2 = cross(j[0], j[1]);
        let g1 = scale(c0, inv_det);
        let g2 = scale(c1, inv_det);
        let g3 = scale(c2, inv_det);
        let g0 = [-g1[0] - g2[0] - g3[0], -g1[1] - g2[1] - g3[1], -g1[2] - g2[2] - g3[2]];
        CellGeometry { verts, grad_lambda: [g0, g1, g2, g3], volume: det / 6.0 }
    }

    /// Area and unit normal (global orientation) of face `f`.
    pub fn face_area_normal(&self, f: usize) -> (f64, [f64; 3]) {
        let [a, b, c] = self.faces[f];
        let pa = self.vertices[a as usize];
        let n = cross(sub(self.vertices[b as usize], pa), sub(self.vertices[c as usize], pa));
        let len = dot(n, n).sqrt();
        (0.5 * len, scale(n, 1.0 / len))
    }

    /// Length of edge `e`.
    pub fn edge_length(&self, e: usize) -> f64 {
        let [a, b] = self.edges[e];
        let d = sub(self.vertices[b as usize], self.vertices[a as usize]);
        dot(d, d).sqrt()
    }

    /// Gradient incidence `G` (edge×vertex): row `e = (a,b)` is `-1` at `a`,
    /// `+1` at `b`.
    pub fn grad_incidence(&self) -> Vec<[(u32, i8); 2]> {
        self.edges.iter().map(|&[a, b]| [(a, -1), (b, 1)]).collect()
    }

    /// Curl incidence `C` (face×edge): row `f = (a,b,c)` is `+1` at edges
    /// `(a,b)` and `(b,c)`, `-1` at `(a,c)`.
    pub fn curl_incidence(&self) -> Vec<[(u32, i8); 3]> {
        let edge_id = |a: u32, b: u32| -> u32 {
            self.edges.binary_search(&[a, b]).expect("face edge must exist") as u32
        };
        self.faces
            .iter()
            .map(|&[a, b, c]| [(edge_id(a, b), 1), (edge_id(b, c), 1), (edge_id(a, c), -1)])
            .collect()
    }

    /// Divergence incidence `D` (cell×face): row `K` holds `±1` per face of
    /// `K`, positive where the global face normal points outward.
    pub fn div_incidence(&self) -> Vec<[(u32, i8); 4]> {
        self.cell_faces
            .iter()
            .zip(self.cell_face_sign.iter())
            .map(|(cf, sg)| {
                [(cf[0], sg[0]), (cf[1], sg[1]), (cf[2], sg[2]), (cf[3], sg[3])]
            })
            .collect()
    }
}

#[inline]
pub(crate) fn sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

#[inline]
pub(crate) fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

#[inline]
pub(crate) fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

#[inline]
pub(crate) fn scale(a: [f64; 3], s: f64) -> [f64; 3] {
    [a[0] * s, a[1] * s, a[2] * s]
}
