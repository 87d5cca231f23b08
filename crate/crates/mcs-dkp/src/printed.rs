//! Verbatim transcriptions of the momentum-dependent printed matrix
//! displays. These are fixtures for the errata comparator only; nothing
//! operational is built from them.

use crate::dkp::{lambda_matrix_literal, DkpBasis, ErratumReport};
use crate::error::Error;
use crate::matrix::MatrixC;
use crate::momentum::{spin_projectors_signed, w_matrix, Momentum3};
use crate::scalar::Cplx;
use crate::schroedinger::build_h;

fn c(re: f64, im: f64) -> Cplx {
    Cplx::new(re, im)
}

/// The printed display of the momentum-space equation matrix.
pub fn printed_lambda(p: &Momentum3) -> MatrixC {
    let i = c(0.0, 1.0);
    let [p1, p2, p3] = p.components();
    let mu = c(p.mass, 0.0);
    let o = c(0.0, 0.0);
    MatrixC::from_rows(&[
        vec![o, o, o, i * p2, i * p3, -i * mu],
        vec![o, o, o, -i * p1, i * mu, i * p3],
        vec![o, o, o, -i * mu, -i * p1, -i * p2],
        vec![i * p2, -i * p1, o, mu, o, o],
        vec![i * p3, o, -i * p1, o, mu, o],
        vec![o, i * p3, -i * p2, o, o, mu],
    ])
}

/// The printed display of the Pauli-Lubanski pseudoscalar.
pub fn printed_w(p: &Momentum3) -> MatrixC {
    let i = c(0.0, 1.0);
    let [p1, p2, p3] = p.components();
    let o = c(0.0, 0.0);
    MatrixC::from_rows(&[
        vec![o, -i * p3, i * p2, o, o, o],
        vec![i * p3, o, -i * p1, o, o, o],
        vec![-i * p2, i * p1, o, o, o, o],
        vec![o, o, o, o, i * p1, -i * p2],
        vec![o, o, o, -i * p1, o, i * p3],
        vec![o, o, o, i * p2, -i * p3, o],
    ])
}

/// The printed display of the spin projectors; `positive` picks the upper
/// sign of the +/- pattern.
pub fn printed_spin(p: &Momentum3, positive: bool) -> MatrixC {
    let s = if positive { 1.0 } else { -1.0 };
    let [p1, p2, p3] = p.components();
    let mu = c(p.mass, 0.0);
    let q = c(1.0 / (2.0 * p.mass * p.mass), 0.0);
    let o = c(0.0, 0.0);
    let rows = [
        vec![
            -p2 * p2 - p3 * p3,
            p1 * p2 - mu * p3 * s,
            p1 * p3 + mu * p2 * s,
            o,
            o,
            o,
        ],
        vec![
            p1 * p2 + mu * p3 * s,
            -p1 * p1 - p3 * p3,
            p2 * p3 - mu * p1 * s,
            o,
            o,
            o,
        ],
        vec![
            p1 * p3 - mu * p2 * s,
            p2 * p3 + mu * p1 * s,
            -p1 * p1 - p2 * p2,
            o,
            o,
            o,
        ],
        vec![
            o,
            o,
            o,
            -p1 * p1 - p2 * p2,
            p2 * p3 + mu * p1 * s,
            p1 * p3 - mu * p2 * s,
        ],
        vec![
            o,
            o,
            o,
            p2 * p3 - mu * p1 * s,
            -p1 * p1 - p3 * p3,
            p1 * p2 + mu * p3 * s,
        ],
        vec![
            o,
            o,
            o,
            p1 * p3 + mu * p2 * s,
            p1 * p2 - mu * p3 * s,
            -p2 * p2 - p3 * p3,
        ],
    ];
    MatrixC::from_rows(&rows).scale(q)
}

/// The printed display of the 5x5 momentum-space Hamiltonian.
pub fn printed_hamiltonian(p1: f64, p2: f64, mass: f64) -> MatrixC {
    let i = c(0.0, 1.0);
    let o = c(0.0, 0.0);
    let mu = c(mass, 0.0);
    let im = i / mu;
    MatrixC::from_rows(&[
        vec![o, o, -i * p1, -mu, o],
        vec![o, o, -i * p2, o, mu],
        vec![i * p1, i * p2, o, o, o],
        vec![o, o, o, -im * (p1 * p2), im * (p2 * p2 + mass * mass)],
        vec![o, o, o, -im * (p1 * p1 + mass * mass), im * (p1 * p2)],
    ])
}

/// Linear slot and orientation sign of a bivector pair in the 5-component
/// space (1, 2, 3, [31], [23]).
fn biv5_slot(mu: u8, nu: u8) -> Option<(usize, i64)> {
    match (mu, nu) {
        (3, 1) => Some((3, 1)),
        (1, 3) => Some((3, -1)),
        (2, 3) => Some((4, 1)),
        (3, 2) => Some((4, -1)),
        (m, n) if m == n => None,
        _ => panic!("pair [{mu}{nu}] does not label a 5-component slot"),
    }
}

fn add5_vec_biv(m: &mut MatrixC, row_mu: u8, col: (u8, u8), coeff: Cplx) {
    if let Some((slot, sign)) = biv5_slot(col.0, col.1) {
        m.add_at((row_mu - 1) as usize, slot, coeff * sign as f64);
    }
}

fn add5_biv_biv(m: &mut MatrixC, row: (u8, u8), col: (u8, u8), coeff: Cplx) {
    if let (Some((r, rs)), Some((cc, cs))) = (biv5_slot(row.0, row.1), biv5_slot(col.0, col.1)) {
        m.add_at(r, cc, coeff * (rs * cs) as f64);
    }
}

/// The printed operator form of the Hamiltonian with d_k -> i p_k, assembled
/// from the same matrix-unit sums as the display it must reproduce.
pub fn printed_hamiltonian_operator_image(p1: f64, p2: f64, mass: f64) -> MatrixC {
    let i = c(0.0, 1.0);
    let mu = c(mass, 0.0);
    let ip1 = i * p1;
    let ip2 = i * p2;
    let mut h = MatrixC::zeros(5);
    // mu [ unit(n, [n3]) + i (unit([31],[23]) - unit([23],[31])) ]
    for n in 1..=2u8 {
        add5_vec_biv(&mut h, n, (n, 3), mu);
    }
    add5_biv_biv(&mut h, (3, 1), (2, 3), i * mu);
    add5_biv_biv(&mut h, (2, 3), (3, 1), -i * mu);
    // d_1 (unit(3,1) - unit(1,3)) + d_2 (unit(3,2) - unit(2,3))
    h.add_at(2, 0, ip1);
    h.add_at(0, 2, -ip1);
    h.add_at(2, 1, ip2);
    h.add_at(1, 2, -ip2);
    // (i/mu) [ (unit([31],[31]) - unit([32],[32])) d1 d2
    //          - unit([31],[23]) d2^2 + unit([23],[31]) d1^2 ]
    let im = i / mu;
    let d1d2 = ip1 * ip2;
    add5_biv_biv(&mut h, (3, 1), (3, 1), im * d1d2);
    add5_biv_biv(&mut h, (3, 2), (3, 2), -im * d1d2);
    add5_biv_biv(&mut h, (3, 1), (2, 3), -im * (ip2 * ip2));
    add5_biv_biv(&mut h, (2, 3), (3, 1), im * (ip1 * ip1));
    h
}

// ---------------------------------------------------------------------------
// Comparator
// ---------------------------------------------------------------------------

fn fmt_c(z: Cplx) -> String {
    format!("{:.4}{:+.4}i", z.re + 0.0, z.im + 0.0)
}

/// Entries of `derived` and `printed` that differ at any probe momentum;
/// reported values come from the first probe that exposes the difference.
fn diff_displays(
    target: &str,
    note: &str,
    pairs: &[(MatrixC, MatrixC)],
    tol: f64,
) -> Vec<ErratumReport> {
    let dim = pairs[0].0.dim();
    let mut out = Vec::new();
    for r in 0..dim {
        for cidx in 0..dim {
            for (derived, printed) in pairs {
                let d = derived.get(r, cidx);
                let p = printed.get(r, cidx);
                if (d - p).norm() > tol {
                    out.push(ErratumReport {
                        target: target.to_string(),
                        position: (r + 1, cidx + 1),
                        derived: fmt_c(d),
                        printed: fmt_c(p),
                        note: note.to_string(),
                    });
                    break;
                }
            }
        }
    }
    out
}

/// Diffs every momentum-dependent printed display against its derivation.
pub fn printed_display_errata(basis: &DkpBasis) -> Result<Vec<ErratumReport>, Error> {
    let mut out = Vec::new();
    let probes = [
        Momentum3::on_shell(2.0, 2.0, basis.mass, true),
        Momentum3::on_shell(1.3, -0.7, basis.mass, true),
        Momentum3::on_shell(-1.0, 2.0, basis.mass, true),
    ];

    let lam: Vec<(MatrixC, MatrixC)> = probes
        .iter()
        .map(|p| (lambda_matrix_literal(basis, p), printed_lambda(p)))
        .collect();
    out.extend(diff_displays(
        "printed Lambda display",
        "literal defining-formula evaluation; the printed display matches a \
         fifth slot meaning [13] instead of [31]",
        &lam,
        1e-9,
    ));

    let w: Vec<(MatrixC, MatrixC)> = probes
        .iter()
        .map(|p| (w_matrix(basis, p), printed_w(p)))
        .collect();
    out.extend(diff_displays(
        "printed W display",
        "derived from the pseudovector generators",
        &w,
        1e-9,
    ));

    for (positive, label) in [(true, "printed S(+1) display"), (false, "printed S(-1) display")] {
        let s: Vec<(MatrixC, MatrixC)> = probes
            .iter()
            .map(|p| {
                let set = spin_projectors_signed(basis, p, basis.mass).expect("on-shell probe");
                let derived = if positive { set[0].clone() } else { set[1].clone() };
                (derived, printed_spin(p, positive))
            })
            .collect();
        out.extend(diff_displays(
            label,
            "derived from Sigma = -i W / mu",
            &s,
            1e-9,
        ));
    }

    let h_probes = [(2.0, 2.0), (1.3, -0.7), (-1.0, 2.0)];
    let h: Vec<(MatrixC, MatrixC)> = h_probes
        .iter()
        .map(|&(p1, p2)| {
            let derived = build_h(p1, p2, basis.mass).expect("positive mass").matrix;
            (derived, printed_hamiltonian(p1, p2, basis.mass))
        })
        .collect();
    out.extend(diff_displays(
        "printed Hamiltonian display",
        "Hamiltonian derived from the field equations; the printed \
         field-strength block carries the opposite sign of the \
         antisymmetric-tensor mass term",
        &h,
        1e-9,
    ));
    Ok(out)
}

/// The printed Hamiltonian display equals the d -> ip image of the printed
/// operator form, entrywise, as polynomials in (p1, p2): checked on six
/// probe points, enough to pin every quadratic coefficient.
pub fn printed_h_transcription_residual(mass: f64) -> f64 {
    let probes = [
        (0.0, 0.0),
        (1.0, 0.0),
        (0.0, 1.0),
        (1.0, 1.0),
        (2.0, 1.0),
        (1.0, 2.0),
    ];
    let mut worst = 0.0f64;
    for (p1, p2) in probes {
        let display = printed_hamiltonian(p1, p2, mass);
        let image = printed_hamiltonian_operator_image(p1, p2, mass);
        worst = worst.max((&display - &image).norm_max());
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dkp::build_dkp_basis;

    #[test]
    fn printed_operator_form_reproduces_printed_display() {
        assert!(printed_h_transcription_residual(1.0) < 1e-14);
        assert!(printed_h_transcription_residual(2.5) < 1e-14);
    }

    #[test]
    fn w_and_spin_displays_match_their_derivations() {
        let basis = build_dkp_basis(1.0).unwrap();
        let errata = printed_display_errata(&basis).unwrap();
        assert!(errata.iter().all(|e| !e.target.contains("W display")), "{errata:?}");
        assert!(errata.iter().all(|e| !e.target.contains("S(")), "{errata:?}");
    }

    #[test]
    fn lambda_display_conflicts_sit_in_the_fifth_slot() {
        let basis = build_dkp_basis(1.0).unwrap();
        let errata = printed_display_errata(&basis).unwrap();
        let lam: Vec<_> = errata
            .iter()
            .filter(|e| e.target == "printed Lambda display")
            .collect();
        assert_eq!(lam.len(), 5, "{lam:?}");
        assert!(lam.iter().all(|e| e.position.0 == 5 || e.position.1 == 5));
    }

    #[test]
    fn hamiltonian_display_conflicts_sit_in_the_strength_block() {
        let basis = build_dkp_basis(1.0).unwrap();
        let errata = printed_display_errata(&basis).unwrap();
        let h: Vec<_> = errata
            .iter()
            .filter(|e| e.target == "printed Hamiltonian display")
            .collect();
        assert_eq!(h.len(), 4, "{h:?}");
        assert!(h
            .iter()
            .all(|e| e.position.0 >= 4 && e.position.1 >= 4));
    }
}
