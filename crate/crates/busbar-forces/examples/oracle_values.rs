// Scratch runner used while developing; regenerates the frozen oracle
// values quoted in the test suite.

use busbar_forces::kernels::Component;
use busbar_forces::model::{validate_adjacent, validate_non_adjacent, CrossSection, Layout};
use busbar_forces::quadrature::{integrate_reduced, QuadratureSpec};
use busbar_forces::MU0_OVER_2PI;

fn main() {
    let spec = QuadratureSpec {
        rel_tol: 1e-12,
        ..Default::default()
    };
    let sec = CrossSection::new(0.005, 0.05).unwrap();

    // V1: adjacent, d = 0.011.
    let l1 = Layout::from(validate_adjacent(sec, 0.011).unwrap());
    let g1 = integrate_reduced(&l1, Component::X, &spec).unwrap().value;
    println!("V1 adjacent d=0.011:      Gx = {g1:.17e}  Fx = {:.17e}", MU0_OVER_2PI * g1);

    // Compute example: adjacent, d = 0.02.
    let l2 = Layout::from(validate_adjacent(sec, 0.02).unwrap());
    let g2 = integrate_reduced(&l2, Component::X, &spec).unwrap().value;
    println!("adjacent d=0.02:          Gx = {g2:.17e}  Fx = {:.17e}", MU0_OVER_2PI * g2);

    // V2, V3: non-adjacent, d = 0.011, h = 0.11.
    let l3 = Layout::from(validate_non_adjacent(sec, 0.011, 0.11).unwrap());
    let g3x = integrate_reduced(&l3, Component::X, &spec).unwrap().value;
    let g3y = integrate_reduced(&l3, Component::Y, &spec).unwrap().value;
    println!("V2 non-adjacent Gx:       Gx = {g3x:.17e}  Fx = {:.17e}", MU0_OVER_2PI * g3x);
    println!("V3 non-adjacent Gy:       Gy = {g3y:.17e}  Fy = {:.17e}", MU0_OVER_2PI * g3y);

    // Thin-wire checks: far separations approach mu0 i1 i2 / (2 pi r).
    let sec_small = CrossSection::new(0.005, 0.005).unwrap();
    let far = Layout::from(validate_adjacent(sec_small, 1.0).unwrap());
    let gf = integrate_reduced(&far, Component::X, &spec).unwrap().value;
    println!("thin-wire d=1 h=0:        Fx = {:.12e} (expect ~2.0e-7, rel dev {:.2e})",
        MU0_OVER_2PI * gf, (gf - 1.0).abs());

    let diag = Layout::from(validate_non_adjacent(sec_small, 1.0, 1.0).unwrap());
    let gdx = integrate_reduced(&diag, Component::X, &spec).unwrap().value;
    let gdy = integrate_reduced(&diag, Component::Y, &spec).unwrap().value;
    println!("thin-wire d=h=1:          Gx = {gdx:.12e} Gy = {gdy:.12e} (expect ~0.5 each)");
    println!("  rel dev: {:.2e} {:.2e}", (gdx - 0.5).abs() / 0.5, (gdy - 0.5).abs() / 0.5);
}
