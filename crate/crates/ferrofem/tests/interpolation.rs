//! First-order interpolation accuracy of every discrete space on the smooth
//! manufactured fields: when the mesh is refined from K=4 to K=8, the L2
//! interpolation error of the lowest-order spaces (RT0, NE0, P0) halves, and
//! the nodal spaces (MINI, P1) improve at least that fast (their nodal
//! interpolants are second-order accurate in L2, so they quarter).

use ferrofem::forms::quadrature::TET_DEG_11;
use ferrofem::mesh::CubeMesh;
use ferrofem::mms::Mms;
use ferrofem::spaces::{CellKit, FeFunction};
use std::f64::consts::FRAC_PI_2;

/// Relative L2 distance between an interpolant and an exact vector field.
fn rel_l2_vec(
    mesh: &CubeMesh,
    fh: &FeFunction,
    exact: impl Fn([f64; 3]) -> [f64; 3],
) -> f64 {
    let mut num = 0.0;
    let mut den = 0.0;
    for c in 0..mesh.n_cells() {
        let kit = CellKit::new(mesh, c);
        let jac = 6.0 * kit.geo.volume;
        for &[x, y, z, w] in TET_DEG_11.data.iter() {
            let lambda = [1.0 - x - y - z, x, y, z];
            let p = kit.point(&lambda);
            let v = fh.eval_vec(mesh, &kit, c, &lambda);
            let e = exact(p);
            for d in 0..3 {
                num += jac * w * (v[d] - e[d]) * (v[d] - e[d]);
                den += jac * w * e[d] * e[d];
            }
        }
    }
    (num / den).sqrt()
}

fn rel_l2_scalar(
    mesh: &CubeMesh,
    fh: &FeFunction,
    exact: impl Fn([f64; 3]) -> f64,
) -> f64 {
    let mut num = 0.0;
    let mut den = 0.0;
    for c in 0..mesh.n_cells() {
        let kit = CellKit::new(mesh, c);
        let jac = 6.0 * kit.geo.volume;
        for &[x, y, z, w] in TET_DEG_11.data.iter() {
            let lambda = [1.0 - x - y - z, x, y, z];
            let p = kit.point(&lambda);
            let d = fh.eval_scalar(mesh, c, &lambda) - exact(p);
            num += jac * w * d * d;
            den += jac * w * exact(p) * exact(p);
        }
    }
    (num / den).sqrt()
}

/// Interpolation errors for all eight fields at the peak-amplitude time.
fn errors_at(k: usize) -> [f64; 8] {
    let mesh = CubeMesh::new(k);
    let mms = Mms::example(1);
    let t = FRAC_PI_2;

    let uh = FeFunction::interpolate_mini(&mesh, |x| mms.velocity(x, t));
    let ph = FeFunction::interpolate_p1_scalar(&mesh, |x| mms.pressure(x, t));
    let wh = FeFunction::interpolate_p1_vec(&mesh, |x| mms.angular(x, t));
    let mh = FeFunction::interpolate_rt0(&mesh, |x| mms.magnetization(x, t));
    let hh = FeFunction::interpolate_rt0(&mesh, |x| mms.field_h(x, t));
    let zh = FeFunction::interpolate_ne0(&mesh, |x| mms.aux_z(x, t));
    let kh = FeFunction::interpolate_ne0(&mesh, |x| mms.magnetization_curl(x, t));

    // P0: cell averages, computed with the same quadrature as the error norm.
    let mut phi_coeffs = vec![0.0; mesh.n_cells()];
    for c in 0..mesh.n_cells() {
        let kit = CellKit::new(&mesh, c);
        let mut avg = 0.0;
        for &[x, y, z, w] in TET_DEG_11.data.iter() {
            let lambda = [1.0 - x - y - z, x, y, z];
            avg += 6.0 * w * mms.potential(kit.point(&lambda), t);
        }
        phi_coeffs[c] = avg;
    }
    // P0 evaluation is just the cell coefficient.
    let mut num = 0.0;
    let mut den = 0.0;
    for c in 0..mesh.n_cells() {
        let kit = CellKit::new(&mesh, c);
        let jac = 6.0 * kit.geo.volume;
        for &[x, y, z, w] in TET_DEG_11.data.iter() {
            let lambda = [1.0 - x - y - z, x, y, z];
            let e = mms.potential(kit.point(&lambda), t);
            let d = phi_coeffs[c] - e;
            num += jac * w * d * d;
            den += jac * w * e * e;
        }
    }
    let phi_err = (num / den).sqrt();

    [
        rel_l2_vec(&mesh, &uh, |x| mms.velocity(x, t)),
        rel_l2_scalar(&mesh, &ph, |x| mms.pressure(x, t)),
        rel_l2_vec(&mesh, &wh, |x| mms.angular(x, t)),
        rel_l2_vec(&mesh, &mh, |x| mms.magnetization(x, t)),
        rel_l2_vec(&mesh, &hh, |x| mms.field_h(x, t)),
        rel_l2_vec(&mesh, &zh, |x| mms.aux_z(x, t)),
        rel_l2_vec(&mesh, &kh, |x| mms.magnetization_curl(x, t)),
        phi_err,
    ]
}

#[test]
fn interpolation_errors_halve_under_refinement() {
    let coarse = errors_at(4);
    let fine = errors_at(8);
    let names = ["u", "p", "omega", "m", "H", "z", "k", "phi"];
    // Nodal interpolation of u, p, ω is second-order in L2; the face, edge
    // and cell interpolants are first-order.
    let first_order = [false, false, false, true, true, true, true, true];
    for i in 0..8 {
        let ratio = fine[i] / coarse[i];
        println!("{:6} K=4 {:.4}  K=8 {:.4}  ratio {:.3}", names[i], coarse[i], fine[i], ratio);
        assert!(ratio <= 0.6, "{}: error only dropped by {ratio:.3}", names[i]);
        if first_order[i] {
            assert!(ratio >= 0.4, "{}: superconvergent drop {ratio:.3}", names[i]);
        }
    }
}
