//! Dynamical reduction to the 5-component Schroedinger picture: the 5x5
//! momentum-space Hamiltonian, its annihilating polynomial and spectrum,
//! energy-sign projectors, and the cross-check that reduced solutions of the
//! 6-component equation are Hamiltonian eigenvectors.

use crate::dkp::{lambda_matrix, DkpBasis, WaveFunction6};
use crate::error::Error;
use crate::matrix::MatrixC;
use crate::momentum::{projector_set, rank_of, Momentum3};
use crate::report::{inputs, CheckReport};
use crate::rng::Rng;
use crate::scalar::Cplx;
use std::fmt::Write as _;

fn c(re: f64, im: f64) -> Cplx {
    Cplx::new(re, im)
}

/// 5-component wave function (mu A_1, mu A_2, mu A_3, F_31, F_23).
#[derive(Clone, Debug)]
pub struct Phi5 {
    pub components: [Cplx; 5],
}

impl Phi5 {
    pub fn norm(&self) -> f64 {
        self.components.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }
}

/// Momentum-space Hamiltonian of the dynamical components. Independent of
/// the frequency by construction (the equation is first order in time).
#[derive(Clone, Debug)]
pub struct Hamiltonian5 {
    pub matrix: MatrixC,
    pub p1: f64,
    pub p2: f64,
    pub mass: f64,
}

/// Builds the Hamiltonian from the field equations, the strength definition
/// and the Lorentz condition, with the non-dynamical strength component
/// eliminated through the third field equation.
pub fn build_h(p1: f64, p2: f64, mass: f64) -> Result<Hamiltonian5, Error> {
    if !(mass > 0.0) {
        return Err(Error::NonPositiveMass(mass));
    }
    let i = c(0.0, 1.0);
    let o = c(0.0, 0.0);
    let mu = c(mass, 0.0);
    let im = i / mu;
    let matrix = MatrixC::from_rows(&[
        vec![o, o, -i * p1, -mu, o],
        vec![o, o, -i * p2, o, mu],
        vec![i * p1, i * p2, o, o, o],
        vec![o, o, o, im * (p1 * p2), -im * (p2 * p2 + mass * mass)],
        vec![o, o, o, im * (p1 * p1 + mass * mass), -im * (p1 * p2)],
    ]);
    Ok(Hamiltonian5 { matrix, p1, p2, mass })
}

/// The same operator assembled from matrix-unit sums with d_k -> i p_k;
/// a second route used to pin the entrywise form.
pub(crate) fn h_operator_image(p1: f64, p2: f64, mass: f64) -> MatrixC {
    // Mirror of the printed operator form with the strength-block sign fixed
    // by the field equations.
    let printed = crate::printed::printed_hamiltonian_operator_image(p1, p2, mass);
    let mut h = printed;
    for r in 3..5 {
        for cc in 3..5 {
            let v = h.get(r, cc);
            h.set(r, cc, -v);
        }
    }
    h
}

impl Hamiltonian5 {
    pub fn spatial_sq(&self) -> f64 {
        self.p1 * self.p1 + self.p2 * self.p2
    }

    pub fn energy(&self) -> f64 {
        (self.spatial_sq() + self.mass * self.mass).sqrt()
    }

    /// Residual of H^2 (H^2 - p_n^2)(H^2 - p_n^2 - mu^2) and its scale.
    pub fn annihilating_residual(&self) -> (f64, f64) {
        let h = &self.matrix;
        let h2 = h * h;
        let pn2 = self.spatial_sq();
        let f1 = h2.shifted(c(pn2, 0.0));
        let f2 = h2.shifted(c(pn2 + self.mass * self.mass, 0.0));
        let res = (&(&h2 * &f1) * &f2).norm_max();
        (res, h.norm_max().max(1.0).powi(6))
    }

    /// Claimed eigenvalues with multiplicities: {0, +/-p_n, +/-E}; the zero
    /// mode is triple at vanishing spatial momentum.
    pub fn claimed_spectrum(&self) -> Vec<(f64, usize)> {
        let pn = self.spatial_sq().sqrt();
        let e = self.energy();
        if pn < 1e-12 {
            vec![(0.0, 3), (e, 1), (-e, 1)]
        } else {
            vec![(0.0, 1), (pn, 1), (-pn, 1), (e, 1), (-e, 1)]
        }
    }

    /// Measured algebraic multiplicity of an eigenvalue candidate, via the
    /// rank of H - lambda.
    pub fn multiplicity(&self, lambda: f64) -> usize {
        5 - rank_of(&self.matrix.shifted(c(lambda, 0.0)))
    }

    /// Degree of the smallest annihilating product over the claimed distinct
    /// eigenvalues (each factor taken once; the matrix is diagonalizable for
    /// separated spectra).
    pub fn minimal_poly_degree(&self) -> usize {
        let distinct: Vec<f64> = self.claimed_spectrum().iter().map(|&(l, _)| l).collect();
        let factors: Vec<MatrixC> = distinct
            .iter()
            .map(|&l| self.matrix.shifted(c(l, 0.0)))
            .collect();
        let refs: Vec<&MatrixC> = factors.iter().collect();
        let scale = self.matrix.norm_max().max(1.0).powi(refs.len() as i32);
        let full = crate::matrix::poly_residual(&refs).expect("same dim");
        if full > 1e-8 * scale {
            // not diagonalizable over the claimed values; fall back to the
            // full dimension as an upper bound
            return 5;
        }
        distinct.len()
    }

    /// Energy-sign projectors (H +/- E) H^2 (H^2 - p_n^2) / (2 mu^2 E^3).
    pub fn sigma_projectors(&self) -> (MatrixC, MatrixC) {
        let h = &self.matrix;
        let e = self.energy();
        let h2 = h * h;
        let core = &h2 * &h2.shifted(c(self.spatial_sq(), 0.0));
        let norm = 1.0 / (2.0 * self.mass * self.mass * e * e * e);
        let plus = (&h.shifted(c(-e, 0.0)) * &core).scale(c(norm, 0.0));
        let minus = (&h.shifted(c(e, 0.0)) * &core).scale(c(-norm, 0.0));
        (plus, minus)
    }
}

/// Physical state from a seed: Phi = Sigma_sign seed, normalized. Errors if
/// the seed lies in the projector kernel.
pub fn physical_state(
    h: &Hamiltonian5,
    positive: bool,
    seed: &[Cplx; 5],
) -> Result<(Phi5, f64), Error> {
    let (plus, minus) = h.sigma_projectors();
    let proj = if positive { plus } else { minus };
    let v = proj.mul_vec(seed);
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let seed_norm = seed.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if norm <= 1e-10 * seed_norm.max(1e-300) {
        return Err(Error::SeedInKernel);
    }
    let phi: Vec<Cplx> = v.iter().map(|z| z / norm).collect();
    let e = if positive { h.energy() } else { -h.energy() };
    let hv = h.matrix.mul_vec(&phi);
    let res = hv
        .iter()
        .zip(&phi)
        .map(|(a, b)| (a - b * e).norm())
        .fold(0.0, f64::max);
    Ok((
        Phi5 { components: [phi[0], phi[1], phi[2], phi[3], phi[4]] },
        res,
    ))
}

/// Reduction of an on-shell 6-component solution to the dynamical
/// components. Requires the input to solve the matrix equation and to obey
/// the Lorentz condition; verifies the eliminated strength component and the
/// Hamiltonian eigenvalue relation.
pub struct Reduction {
    pub phi: Phi5,
    /// max |H phi - p0 phi| / |phi|
    pub eigen_residual: f64,
    /// |F_12 - i(p_1 A_2 - p_2 A_1)| for the eliminated component
    pub strength_residual: f64,
}

pub fn reduce_from_rwe(
    basis: &DkpBasis,
    p: &Momentum3,
    psi: &WaveFunction6,
) -> Result<Reduction, Error> {
    let col = psi.column();
    let scale = psi.norm_max().max(1e-300);
    let lam_res = lambda_matrix(basis, p)
        .mul_vec(&col)
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max);
    if lam_res > 1e-9 * scale {
        return Err(Error::NotASolution { residual: lam_res / scale });
    }
    let pc = p.components();
    let lorentz: Cplx = (0..3).map(|k| pc[k] * col[k]).sum();
    let p_scale = pc.iter().map(|z| z.norm()).fold(1.0, f64::max);
    if lorentz.norm() > 1e-9 * scale * p_scale {
        return Err(Error::LorentzCondition { residual: lorentz.norm() / (scale * p_scale) });
    }
    // eliminated component: F_12 = i p_1 A_2 - i p_2 A_1 = (i/mu)(p_1 psi_2 - p_2 psi_1)
    let i = c(0.0, 1.0);
    let f12 = i * (pc[0] * col[1] - pc[1] * col[0]) / p.mass;
    let strength_residual = (col[3] - f12).norm();

    let h = build_h(p.p1, p.p2, p.mass)?;
    let phi = [col[0], col[1], col[2], col[4], col[5]];
    let hphi = h.matrix.mul_vec(&phi);
    let phi_norm = phi.iter().map(|z| z.norm()).fold(0.0, f64::max).max(1e-300);
    let eigen_residual = hphi
        .iter()
        .zip(&phi)
        .map(|(a, b)| (a - b * p.p0).norm())
        .fold(0.0, f64::max)
        / phi_norm;
    Ok(Reduction {
        phi: Phi5 { components: phi },
        eigen_residual,
        strength_residual,
    })
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

/// Entry pinning of the Hamiltonian: the two assembly routes agree, selected
/// entries take their closed forms, and the rest frame has the degenerate
/// spectrum {0, 0, 0, +/-mu}.
pub fn verify_h_build(mass: f64) -> CheckReport {
    let mut worst = 0.0f64;
    for (p1, p2) in [(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (1.0, 1.0), (2.0, 1.0), (1.0, 2.0)] {
        let h = build_h(p1, p2, mass).expect("positive mass").matrix;
        let image = h_operator_image(p1, p2, mass);
        worst = worst.max((&h - &image).norm_max());
    }
    let h = build_h(3.0, 4.0, mass).expect("positive mass");
    let m = &h.matrix;
    worst = worst.max((m.get(0, 2) - c(0.0, -3.0)).norm());
    worst = worst.max((m.get(0, 3) - c(-mass, 0.0)).norm());
    worst = worst.max((m.get(3, 4) - c(0.0, -(16.0 + mass * mass) / mass)).norm());
    let rest = build_h(0.0, 0.0, mass).expect("positive mass");
    let mults = [
        rest.multiplicity(0.0),
        rest.multiplicity(mass),
        rest.multiplicity(-mass),
    ];
    let rest_ok = mults == [3, 1, 1];
    let rejected = build_h(1.0, 1.0, 0.0).is_err();
    CheckReport::graded(
        "schroedinger/hamiltonian-build",
        "Eq. (63), (66)-(67)",
        if rest_ok && rejected { worst } else { 1.0 },
        1e-12,
        format!(
            "entrywise form matches the operator-sum route; rest-frame \
             multiplicities (0, +mu, -mu) = {mults:?}; zero mass rejected = {rejected}"
        ),
        inputs(&[("mass", mass.to_string())]),
    )
}

/// The printed display and printed operator form agree with each other
/// (transcription consistency, independent of the derived sign convention).
pub fn verify_printed_h_transcription(mass: f64) -> CheckReport {
    let worst = crate::printed::printed_h_transcription_residual(mass);
    CheckReport::graded(
        "schroedinger/printed-h-transcription",
        "Eq. (66) vs (67)",
        worst,
        1e-12,
        "printed Hamiltonian display equals the d -> ip image of the printed operator form",
        inputs(&[("mass", mass.to_string())]),
    )
}

/// Degree-six annihilating polynomial over random momenta and masses.
pub fn verify_h_annihilating(rng: &mut Rng, n: usize) -> CheckReport {
    let mut worst = 0.0f64;
    for _ in 0..n {
        let mass = rng.range(0.5, 2.0);
        let h = build_h(rng.range(-2.5, 2.5), rng.range(-2.5, 2.5), mass).expect("mass > 0");
        let (res, scale) = h.annihilating_residual();
        worst = worst.max(res / scale);
    }
    CheckReport::graded(
        "schroedinger/h-annihilating-poly",
        "Eq. (68)",
        worst,
        1e-9,
        "H^2 (H^2 - p_n^2)(H^2 - p_n^2 - mu^2) = 0 over random momenta and masses",
        inputs(&[("samples", n.to_string())]),
    )
}

/// The degree-six printed polynomial cannot be minimal for a 5x5 matrix; the
/// measured minimal degree is reported.
pub fn report_h_minimal_degree(mass: f64) -> CheckReport {
    let generic = build_h(2.0, 1.0, mass).expect("mass > 0");
    let rest = build_h(0.0, 0.0, mass).expect("mass > 0");
    let dg = generic.minimal_poly_degree();
    let dr = rest.minimal_poly_degree();
    CheckReport::graded(
        "schroedinger/h-minimal-degree",
        "Eq. (68)",
        if dg == 5 && dr == 3 { 0.0 } else { 1.0 },
        0.0,
        format!(
            "printed annihilating polynomial has degree 6 but the matrix is \
             5x5; measured minimal degree: {dg} generic, {dr} at rest"
        ),
        inputs(&[("mass", mass.to_string())]),
    )
}

/// Spectrum check by rank-measured multiplicities: exactly five eigenvalues
/// counted with multiplicity, located at {0, +/-p_n, +/-E}.
pub fn verify_h_spectrum(rng: &mut Rng, n: usize) -> CheckReport {
    let mut ok = true;
    let mut detail = String::new();
    for k in 0..n {
        let (p1, p2, mass) = if k == 0 {
            (3.0, 4.0, 12.0)
        } else if k == 1 {
            (0.0, 0.0, 1.0)
        } else {
            let sign = if rng.f64() < 0.5 { -1.0 } else { 1.0 };
            (sign * rng.range(0.4, 2.5), rng.range(0.4, 2.5), rng.range(0.5, 2.0))
        };
        let h = build_h(p1, p2, mass).expect("mass > 0");
        let mut total = 0;
        for (lambda, want) in h.claimed_spectrum() {
            let got = h.multiplicity(lambda);
            total += got;
            if got != want {
                ok = false;
                let _ = write!(
                    detail,
                    "({p1}, {p2}, {mass}): eigenvalue {lambda} multiplicity {got} != {want}; "
                );
            }
        }
        if total != 5 {
            ok = false;
            let _ = write!(detail, "({p1}, {p2}, {mass}): total multiplicity {total}; ");
        }
        if k == 0 {
            let _ = write!(
                detail,
                "(3, 4, 12): spectrum {{0, +/-5, +/-13}} confirmed by rank; "
            );
        }
    }
    CheckReport::graded(
        "schroedinger/h-spectrum",
        "Eq. (68)",
        if ok { 0.0 } else { 1.0 },
        0.0,
        format!("{detail}eigenvalue multiplicities measured via rank defects at tolerance 1e-8"),
        inputs(&[("samples", n.to_string())]),
    )
}

/// Energy-sign projectors: idempotent, mutually orthogonal, eigenoperator
/// relation, unit trace.
pub fn verify_sigma_projectors(rng: &mut Rng, n: usize) -> CheckReport {
    let mut worst = 0.0f64;
    let mut trace_note = String::new();
    for k in 0..n {
        let (p1, p2, mass) = if k == 0 {
            (2.0, 2.0, 1.0)
        } else {
            (rng.range(-2.5, 2.5), rng.range(-2.5, 2.5), rng.range(0.5, 2.0))
        };
        let h = build_h(p1, p2, mass).expect("mass > 0");
        let e = h.energy();
        let (plus, minus) = h.sigma_projectors();
        worst = worst.max((&(&plus * &plus) - &plus).norm_max());
        worst = worst.max((&(&minus * &minus) - &minus).norm_max());
        worst = worst.max((&plus * &minus).norm_max());
        let hp = &h.matrix * &plus;
        worst = worst.max((&hp - &plus.scale(c(e, 0.0))).norm_max());
        let hm = &h.matrix * &minus;
        worst = worst.max((&hm - &minus.scale(c(-e, 0.0))).norm_max());
        if k == 0 {
            let tp = plus.trace();
            let tm = minus.trace();
            let _ = write!(
                trace_note,
                "traces at (2,2,1): {:.6}{:+.6}i and {:.6}{:+.6}i; ",
                tp.re, tp.im, tm.re, tm.im
            );
            worst = worst.max((tp - c(1.0, 0.0)).norm());
            worst = worst.max((tm - c(1.0, 0.0)).norm());
        }
    }
    CheckReport::graded(
        "schroedinger/sigma-projectors",
        "Eq. (69)-(70)",
        worst,
        1e-9,
        format!(
            "{trace_note}idempotent, orthogonal, eigenoperator relation with \
             +/-sqrt(p_n^2+mu^2); the negative branch needs the normalization \
             -(p_n^2+mu^2)^(3/2) for idempotency"
        ),
        inputs(&[("samples", n.to_string())]),
    )
}

/// Seeded physical states: eigenvectors with the physical energies; a seed
/// in the kernel is rejected rather than guessed around.
pub fn verify_physical_state(rng: &mut Rng, n: usize) -> CheckReport {
    let mut worst = 0.0f64;
    let one = c(1.0, 0.0);
    let h = build_h(2.0, 2.0, 1.0).expect("mass > 0");
    let seed = [one; 5];
    let (_, res_plus) = physical_state(&h, true, &seed).expect("seed not in kernel");
    let (_, res_minus) = physical_state(&h, false, &seed).expect("seed not in kernel");
    worst = worst.max(res_plus).max(res_minus);
    let zero_seed = [c(0.0, 0.0); 5];
    let rejected = matches!(physical_state(&h, true, &zero_seed), Err(Error::SeedInKernel));
    for _ in 0..n {
        let h = build_h(rng.range(-2.5, 2.5), rng.range(-2.5, 2.5), rng.range(0.5, 2.0))
            .expect("mass > 0");
        let seed = [
            rng.cplx(-1.0, 1.0),
            rng.cplx(-1.0, 1.0),
            rng.cplx(-1.0, 1.0),
            rng.cplx(-1.0, 1.0),
            rng.cplx(-1.0, 1.0),
        ];
        for positive in [true, false] {
            if let Ok((_, res)) = physical_state(&h, positive, &seed) {
                worst = worst.max(res);
            }
        }
    }
    CheckReport::graded(
        "schroedinger/physical-states",
        "Eq. (71)",
        if rejected { worst } else { 1.0 },
        1e-9,
        "seeded projections are eigenvectors with the physical energies; \
         zero seed rejected",
        inputs(&[("samples", n.to_string())]),
    )
}

/// Cross-formalism consistency: a gauge-fixed physical column of the
/// 6-component state projector reduces to a Hamiltonian eigenvector with
/// eigenvalue p0, and the eliminated strength component obeys its defining
/// relation.
pub fn verify_reduction(basis: &DkpBasis, rng: &mut Rng, n: usize) -> CheckReport {
    let mut worst = 0.0f64;
    let mut rejected_gauge = false;
    for k in 0..n {
        let p = if k == 0 {
            Momentum3::on_shell(2.0, 2.0, basis.mass, true)
        } else {
            Momentum3::random_on_shell(rng, 2.5 * basis.mass, basis.mass)
        };
        let set = match projector_set(basis, &p) {
            Ok(s) => s,
            Err(_) => continue,
        };
        // pick the spin-projected physical column with the largest norm
        let mut best: Option<Vec<Cplx>> = None;
        let mut best_norm = 0.0;
        for d in [&set.delta[0], &set.delta[1]] {
            for col in 0..6 {
                let v = d.column(col);
                let norm = v.iter().map(|z| z.norm()).fold(0.0, f64::max);
                if norm > best_norm {
                    best_norm = norm;
                    best = Some(v);
                }
            }
        }
        let col = best.expect("a physical column exists");
        // project onto the Lorentz gauge by a pure-gauge shift
        let pc = p.components();
        let psq = Cplx::new(p.p_squared(), 0.0);
        let ell: Cplx = (0..3).map(|j| pc[j] * col[j]).sum();
        let coeff = ell / (psq * p.mass);
        let mut fixed = col.clone();
        for j in 0..3 {
            fixed[j] -= coeff * pc[j] * p.mass;
        }
        let psi = WaveFunction6::from_column(
            &[fixed[0], fixed[1], fixed[2], fixed[3], fixed[4], fixed[5]],
            basis.mass,
        );
        let red = reduce_from_rwe(basis, &p, &psi).expect("physical column reduces");
        worst = worst.max(red.eigen_residual);
        worst = worst.max(red.strength_residual / psi.norm_max().max(1e-300));

        if k == 0 {
            // a pure-gauge state violates the Lorentz condition at massive
            // on-shell momentum and must be rejected
            let gauge = WaveFunction6::from_column(
                &[
                    pc[0] * basis.mass,
                    pc[1] * basis.mass,
                    pc[2] * basis.mass,
                    c(0.0, 0.0),
                    c(0.0, 0.0),
                    c(0.0, 0.0),
                ],
                basis.mass,
            );
            rejected_gauge = matches!(
                reduce_from_rwe(basis, &p, &gauge),
                Err(Error::LorentzCondition { .. })
            );
        }
    }
    CheckReport::graded(
        "schroedinger/reduction-from-rwe",
        "Eq. (60)-(64)",
        if rejected_gauge { worst } else { 1.0 },
        1e-9,
        "gauge-fixed physical projector columns reduce to H eigenvectors with \
         eigenvalue p0; eliminated component satisfies its defining relation; \
         pure-gauge input rejected",
        inputs(&[("momenta", n.to_string())]),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dkp::build_dkp_basis;
    use crate::report::Status;

    #[test]
    fn textbook_spectrum_rows() {
        let h = build_h(3.0, 4.0, 12.0).unwrap();
        assert_eq!(h.multiplicity(0.0), 1);
        assert_eq!(h.multiplicity(5.0), 1);
        assert_eq!(h.multiplicity(-5.0), 1);
        assert_eq!(h.multiplicity(13.0), 1);
        assert_eq!(h.multiplicity(-13.0), 1);
        let (res, scale) = h.annihilating_residual();
        assert!(res / scale < 1e-12);
    }

    #[test]
    fn rest_frame_spectrum_is_degenerate() {
        let h = build_h(0.0, 0.0, 1.0).unwrap();
        assert_eq!(h.multiplicity(0.0), 3);
        assert_eq!(h.multiplicity(1.0), 1);
        assert_eq!(h.multiplicity(-1.0), 1);
    }

    #[test]
    fn seeded_states_land_on_the_physical_energies() {
        let h = build_h(2.0, 2.0, 1.0).unwrap();
        let one = Cplx::new(1.0, 0.0);
        let seed = [one; 5];
        let (phi, res) = physical_state(&h, true, &seed).unwrap();
        assert!(res < 1e-9, "positive-energy residual {res}");
        assert!((phi.norm() - 1.0).abs() < 1e-12);
        let (_, res) = physical_state(&h, false, &seed).unwrap();
        assert!(res < 1e-9, "negative-energy residual {res}");
        assert!(matches!(
            physical_state(&h, true, &[Cplx::new(0.0, 0.0); 5]),
            Err(Error::SeedInKernel)
        ));
    }

    #[test]
    fn negative_frequency_solutions_reduce_to_negative_eigenvectors() {
        let basis = build_dkp_basis(1.0).unwrap();
        let p = Momentum3::on_shell(2.0, 2.0, 1.0, false);
        assert!((p.p0 + 3.0).abs() < 1e-12);
        let set = projector_set(&basis, &p).unwrap();
        let mut best = (0.0, vec![]);
        for d in [&set.delta[0], &set.delta[1]] {
            for col in 0..6 {
                let v = d.column(col);
                let norm = v.iter().map(|z| z.norm()).fold(0.0, f64::max);
                if norm > best.0 {
                    best = (norm, v);
                }
            }
        }
        let col = best.1;
        let pc = p.components();
        let psq = Cplx::new(p.p_squared(), 0.0);
        let ell: Cplx = (0..3).map(|j| pc[j] * col[j]).sum();
        let coeff = ell / psq;
        let mut fixed = [Cplx::new(0.0, 0.0); 6];
        for (k, slot) in fixed.iter_mut().enumerate() {
            *slot = col[k];
            if k < 3 {
                *slot -= coeff * pc[k];
            }
        }
        let psi = WaveFunction6::from_column(&fixed, 1.0);
        let red = reduce_from_rwe(&basis, &p, &psi).unwrap();
        // the eigenvalue is p0 itself, here the negative branch -3
        assert!(red.eigen_residual < 1e-9, "residual {}", red.eigen_residual);
    }

    #[test]
    fn schroedinger_reports_pass() {
        let basis = build_dkp_basis(1.0).unwrap();
        let mut rng = Rng::for_check(42, "test/schroedinger");
        for rep in [
            verify_h_build(1.0),
            verify_printed_h_transcription(1.0),
            verify_h_annihilating(&mut rng, 10),
            report_h_minimal_degree(1.0),
            verify_h_spectrum(&mut rng, 6),
            verify_sigma_projectors(&mut rng, 6),
            verify_physical_state(&mut rng, 6),
            verify_reduction(&basis, &mut rng, 6),
        ] {
            assert_eq!(rep.status, Status::Pass, "{}: {}", rep.id, rep.detail);
        }
    }
}
