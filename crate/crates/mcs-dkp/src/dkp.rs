//! Constant operators of the first-order wave equation: the three beta
//! matrices, the mass-term projector P, the gauge projector P-bar, the
//! Lorentz generators, their pseudovector contractions and the
//! hermitianizing matrix eta — all assembled from the defining matrix-unit
//! sums and verified against the relations they are claimed to satisfy.

use crate::algebra::{
    add_unit_biv_biv, add_unit_biv_vec, add_unit_vec_biv, bivector_slot, levi_civita,
    vector_slot, EuclideanEps, DIM6,
};
use crate::error::Error;
use crate::matrix::{MatrixC, MatrixG};
use crate::momentum::{solution_amplitude, Momentum3};
use crate::report::{inputs, CheckReport};
use crate::rng::Rng;
use crate::scalar::{parse_gauss, Cplx, GaussInt};
use std::fmt::Write as _;
use std::path::Path;

/// The constant operator set of the 6-dimensional representation.
#[derive(Clone, Debug)]
pub struct DkpBasis {
    pub mass: f64,
    pub beta: [MatrixG; 3],
    /// Mass-term projector. The sign of its vector-bivector block is fixed by
    /// requiring the matrix equation to reproduce the field equations row by
    /// row; the as-printed sign fails that and is kept separately for the
    /// errata comparator.
    pub p: MatrixG,
    /// Gauge projector, identity on the vector block.
    pub p_bar: MatrixG,
    /// Lorentz generators for the index pairs (1,2), (1,3), (2,3).
    pub j: [MatrixG; 3],
    /// Pseudovector generators J_mu = (1/2) eps_{mu nu alpha} J_{nu alpha}.
    pub j_vec: [MatrixG; 3],
    /// Hermitianizing matrix.
    pub eta: MatrixG,
}

/// Assembles the full constant basis. Fails if the mass is not positive.
pub fn build_dkp_basis(mass: f64) -> Result<DkpBasis, Error> {
    if !(mass > 0.0) {
        return Err(Error::NonPositiveMass(mass));
    }
    let beta = [beta_matrix(1), beta_matrix(2), beta_matrix(3)];
    let j = [
        j_pair_matrix(1, 2),
        j_pair_matrix(1, 3),
        j_pair_matrix(2, 3),
    ];
    let j_vec = [j_vec_matrix(&j, 1), j_vec_matrix(&j, 2), j_vec_matrix(&j, 3)];
    Ok(DkpBasis {
        mass,
        beta,
        p: p_matrix(),
        p_bar: p_bar_matrix(),
        j,
        j_vec,
        eta: eta_matrix(),
    })
}

impl DkpBasis {
    /// Lorentz generator for an arbitrary ordered index pair.
    pub fn j_signed(&self, mu: u8, nu: u8) -> MatrixG {
        match (mu, nu) {
            (1, 2) => self.j[0].clone(),
            (2, 1) => -&self.j[0],
            (1, 3) => self.j[1].clone(),
            (3, 1) => -&self.j[1],
            (2, 3) => self.j[2].clone(),
            (3, 2) => -&self.j[2],
            (m, n) if m == n && (1..=3).contains(&m) => MatrixG::zeros(DIM6),
            _ => panic!("generator indices out of range: ({mu}, {nu})"),
        }
    }
}

fn halve_exact(m: &MatrixG) -> MatrixG {
    let mut out = MatrixG::zeros(m.dim());
    for r in 0..m.dim() {
        for c in 0..m.dim() {
            let z = m.get(r, c);
            assert!(z.re % 2 == 0 && z.im % 2 == 0, "entry not evenly divisible");
            out.set(r, c, GaussInt::new(z.re / 2, z.im / 2));
        }
    }
    out
}

/// beta_mu = unit(nu, [nu mu]) + unit([nu mu], nu), summed over nu.
fn beta_matrix(mu: u8) -> MatrixG {
    let mut m = MatrixG::zeros(DIM6);
    for nu in 1..=3u8 {
        add_unit_vec_biv(&mut m, nu, (nu, mu), GaussInt::ONE);
        add_unit_biv_vec(&mut m, (nu, mu), nu, GaussInt::ONE);
    }
    m
}

/// Literal evaluation of the defining sum for the mass-term projector:
/// (1/2) unit([nu mu], [nu mu]) + (1/2) eps_{nu sigma beta} unit(nu, [sigma beta]).
///
/// Kept for the errata comparator; see [`p_matrix`] for the operational sign.
pub(crate) fn p_matrix_literal() -> MatrixG {
    let mut doubled = MatrixG::zeros(DIM6);
    for nu in 1..=3u8 {
        for mu in 1..=3u8 {
            add_unit_biv_biv(&mut doubled, (nu, mu), (nu, mu), GaussInt::ONE);
        }
    }
    for nu in 1..=3u8 {
        for sigma in 1..=3u8 {
            for beta in 1..=3u8 {
                let eps = levi_civita::<EuclideanEps>(nu, sigma, beta);
                add_unit_vec_biv(&mut doubled, nu, (sigma, beta), eps);
            }
        }
    }
    halve_exact(&doubled)
}

/// Operational mass-term projector: the antisymmetric-tensor trace enters
/// with the opposite sign to the printed formula, which is what makes the
/// matrix equation rows proportional to the field-equation rows.
fn p_matrix() -> MatrixG {
    let mut doubled = MatrixG::zeros(DIM6);
    for nu in 1..=3u8 {
        for mu in 1..=3u8 {
            add_unit_biv_biv(&mut doubled, (nu, mu), (nu, mu), GaussInt::ONE);
        }
    }
    for nu in 1..=3u8 {
        for sigma in 1..=3u8 {
            for beta in 1..=3u8 {
                let eps = levi_civita::<EuclideanEps>(nu, sigma, beta);
                add_unit_vec_biv(&mut doubled, nu, (sigma, beta), -eps);
            }
        }
    }
    halve_exact(&doubled)
}

/// P-bar = unit(mu, mu): identity on the vector block.
fn p_bar_matrix() -> MatrixG {
    let mut m = MatrixG::zeros(DIM6);
    for mu in 1..=3u8 {
        m.add_at(vector_slot(mu), vector_slot(mu), GaussInt::ONE);
    }
    m
}

/// J_{mu nu} = unit(mu, nu) - unit(nu, mu)
///           + unit([lam mu], [lam nu]) - unit([lam nu], [lam mu]).
fn j_pair_matrix(mu: u8, nu: u8) -> MatrixG {
    let mut m = MatrixG::zeros(DIM6);
    m.add_at(vector_slot(mu), vector_slot(nu), GaussInt::ONE);
    m.add_at(vector_slot(nu), vector_slot(mu), -GaussInt::ONE);
    for lam in 1..=3u8 {
        add_unit_biv_biv(&mut m, (lam, mu), (lam, nu), GaussInt::ONE);
        add_unit_biv_biv(&mut m, (lam, nu), (lam, mu), -GaussInt::ONE);
    }
    m
}

/// J_mu = (1/2) eps_{mu nu alpha} J_{nu alpha} in the Euclidean convention.
fn j_vec_matrix(pairs: &[MatrixG; 3], mu: u8) -> MatrixG {
    let mut doubled = MatrixG::zeros(DIM6);
    for nu in 1..=3u8 {
        for alpha in 1..=3u8 {
            let eps = levi_civita::<EuclideanEps>(mu, nu, alpha);
            if eps.is_zero() {
                continue;
            }
            let j = match (nu, alpha) {
                (1, 2) => pairs[0].clone(),
                (2, 1) => -&pairs[0],
                (1, 3) => pairs[1].clone(),
                (3, 1) => -&pairs[1],
                (2, 3) => pairs[2].clone(),
                (3, 2) => -&pairs[2],
                _ => unreachable!(),
            };
            doubled = &doubled + &j.scale(eps);
        }
    }
    halve_exact(&doubled)
}

/// eta = unit(m, m) - unit(3, 3) + unit([m3], [m3]) - (1/2) unit([mn], [mn]),
/// with m, n running over 1, 2.
fn eta_matrix() -> MatrixG {
    let mut doubled = MatrixG::zeros(DIM6);
    let two = GaussInt::new(2, 0);
    for m in 1..=2u8 {
        doubled.add_at(vector_slot(m), vector_slot(m), two);
    }
    doubled.add_at(vector_slot(3), vector_slot(3), -two);
    for m in 1..=2u8 {
        add_unit_biv_biv(&mut doubled, (m, 3), (m, 3), two);
    }
    for m in 1..=2u8 {
        for n in 1..=2u8 {
            if m != n {
                add_unit_biv_biv(&mut doubled, (m, n), (m, n), -GaussInt::ONE);
            }
        }
    }
    halve_exact(&doubled)
}

/// 6-component wave function: (mu A_nu ; F_12, F_31, F_23).
#[derive(Clone, Debug)]
pub struct WaveFunction6 {
    /// mu * A_nu for nu = 1, 2, 3.
    pub vector: [Cplx; 3],
    /// F_12, F_31, F_23.
    pub bivector: [Cplx; 3],
    pub mass: f64,
}

impl WaveFunction6 {
    pub fn new(vector: [Cplx; 3], bivector: [Cplx; 3], mass: f64) -> Self {
        WaveFunction6 { vector, bivector, mass }
    }

    /// Momentum-space plane-wave state for a vector-potential amplitude:
    /// the field strength is F_{mu nu} = i (p_mu a_nu - p_nu a_mu).
    pub fn from_amplitude(p: &Momentum3, a: &[Cplx; 3]) -> Self {
        let pc = p.components();
        let i = Cplx::new(0.0, 1.0);
        let f = |m: usize, n: usize| i * (pc[m] * a[n] - pc[n] * a[m]);
        WaveFunction6 {
            vector: [a[0] * p.mass, a[1] * p.mass, a[2] * p.mass],
            bivector: [f(0, 1), f(2, 0), f(1, 2)],
            mass: p.mass,
        }
    }

    pub fn column(&self) -> [Cplx; 6] {
        [
            self.vector[0],
            self.vector[1],
            self.vector[2],
            self.bivector[0],
            self.bivector[1],
            self.bivector[2],
        ]
    }

    pub fn from_column(col: &[Cplx; 6], mass: f64) -> Self {
        WaveFunction6 {
            vector: [col[0], col[1], col[2]],
            bivector: [col[3], col[4], col[5]],
            mass,
        }
    }

    pub fn norm_max(&self) -> f64 {
        self.column().iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Reality pattern of a neutral field: A_1, A_2 real, A_3 pure imaginary,
    /// F_12 real, F_31 and F_23 pure imaginary. Implemented as a predicate so
    /// general complex test amplitudes stay usable.
    pub fn is_physically_real(&self, tol: f64) -> bool {
        self.vector[0].im.abs() <= tol
            && self.vector[1].im.abs() <= tol
            && self.vector[2].re.abs() <= tol
            && self.bivector[0].im.abs() <= tol
            && self.bivector[1].re.abs() <= tol
            && self.bivector[2].re.abs() <= tol
    }
}

/// Random wave function satisfying the neutral-field reality pattern.
pub fn random_physical(rng: &mut Rng, mass: f64) -> WaveFunction6 {
    let re = |r: &mut Rng| Cplx::new(r.range(-2.0, 2.0), 0.0);
    let im = |r: &mut Rng| Cplx::new(0.0, r.range(-2.0, 2.0));
    WaveFunction6 {
        vector: [re(rng), re(rng), im(rng)],
        bivector: [re(rng), im(rng), im(rng)],
        mass,
    }
}

/// Conjugated wave function as a row vector: psi^dagger eta.
pub fn conjugate(basis: &DkpBasis, psi: &WaveFunction6) -> [Cplx; 6] {
    let col = psi.column();
    let mut row = [Cplx::new(0.0, 0.0); 6];
    for (b, slot) in row.iter_mut().enumerate() {
        for (a, v) in col.iter().enumerate() {
            *slot += v.conj() * basis.eta.get(a, b).to_complex();
        }
    }
    row
}

/// Gauge transformation: psi -> psi + P-bar phi with phi = (mu grad, 0).
/// The bivector block is untouched because P-bar kills it.
pub fn gauge_shift(basis: &DkpBasis, psi: &WaveFunction6, grad: &[Cplx; 3]) -> WaveFunction6 {
    let mut out = psi.clone();
    for (k, g) in grad.iter().enumerate() {
        let phi_k = *g * basis.mass;
        // P-bar is the identity on the vector block.
        for m in 0..3 {
            out.vector[m] += basis.p_bar.get(m, k).to_complex() * phi_k;
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Relation checks
// ---------------------------------------------------------------------------

/// Trilinear algebra over all 27 index triples, plus idempotency of the
/// squared betas; exact integer arithmetic throughout.
pub fn verify_dkp_algebra(basis: &DkpBasis) -> CheckReport {
    let mut worst: i64 = 0;
    let b = &basis.beta;
    for mu in 0..3 {
        for nu in 0..3 {
            for al in 0..3 {
                let lhs = &(&(&b[mu] * &b[nu]) * &b[al]) + &(&(&b[al] * &b[nu]) * &b[mu]);
                let mut rhs = MatrixG::zeros(DIM6);
                if mu == nu {
                    rhs = &rhs + &b[al];
                }
                if al == nu {
                    rhs = &rhs + &b[mu];
                }
                worst = worst.max((&lhs - &rhs).max_abs());
            }
        }
    }
    let mut idem: i64 = 0;
    for bk in b {
        let b2 = bk * bk;
        idem = idem.max((&(&b2 * &b2) - &b2).max_abs());
    }
    CheckReport::graded(
        "dkp/algebra-triples",
        "Eq. (28)",
        worst.max(idem) as f64,
        0.0,
        "trilinear relation over all 27 triples; squared betas idempotent; exact integers",
        inputs(&[("triples", "27".into())]),
    )
}

/// Projector relations for P and P-bar, exact; also counts how the adjoint
/// of P differs from P (it is not Hermitian).
pub fn verify_projector_relations(basis: &DkpBasis) -> CheckReport {
    let p = &basis.p;
    let pb = &basis.p_bar;
    let mut worst = (&(p * p) - p).max_abs();
    worst = worst.max((&(pb * pb) - pb).max_abs());
    worst = worst.max((p * pb).max_abs());
    for b in &basis.beta {
        worst = worst.max((&b.anticommutator(pb) - b).max_abs());
    }
    let hermitian_diffs = p.diff(&p.adjoint()).len();
    CheckReport::graded(
        "dkp/projector-relations",
        "Eq. (30)-(31)",
        worst as f64,
        0.0,
        format!(
            "P and P-bar idempotent, P P-bar = 0, beta anticommutator closes; \
             P is not Hermitian (adjoint differs in {hermitian_diffs} entries)"
        ),
        inputs(&[]),
    )
}

/// Lorentz-generator relations: mixed commutator with the betas, the
/// generator commutation relations, the pseudovector commutators and
/// commutation with P; all exact.
pub fn verify_generator_relations(basis: &DkpBasis) -> CheckReport {
    let mut worst: i64 = 0;
    // beta_mu J_{al nu} - J_{al nu} beta_mu = d_{al mu} beta_nu - d_{nu mu} beta_al
    for mu in 1..=3u8 {
        for al in 1..=3u8 {
            for nu in 1..=3u8 {
                let j = basis.j_signed(al, nu);
                let lhs = basis.beta[(mu - 1) as usize].commutator(&j);
                let mut rhs = MatrixG::zeros(DIM6);
                if al == mu {
                    rhs = &rhs + &basis.beta[(nu - 1) as usize];
                }
                if nu == mu {
                    rhs = &rhs - &basis.beta[(al - 1) as usize];
                }
                worst = worst.max((&lhs - &rhs).max_abs());
            }
        }
    }
    // [J_{mu nu}, J_{al be}] closes on the generator set
    for mu in 1..=3u8 {
        for nu in 1..=3u8 {
            for al in 1..=3u8 {
                for be in 1..=3u8 {
                    let lhs = basis.j_signed(mu, nu).commutator(&basis.j_signed(al, be));
                    let d = |a: u8, b: u8| a == b;
                    let mut rhs = MatrixG::zeros(DIM6);
                    if d(nu, al) {
                        rhs = &rhs + &basis.j_signed(mu, be);
                    }
                    if d(mu, be) {
                        rhs = &rhs + &basis.j_signed(nu, al);
                    }
                    if d(nu, be) {
                        rhs = &rhs - &basis.j_signed(mu, al);
                    }
                    if d(mu, al) {
                        rhs = &rhs - &basis.j_signed(nu, be);
                    }
                    worst = worst.max((&lhs - &rhs).max_abs());
                }
            }
        }
    }
    // [J_mu, J_nu] = eps_{nu mu al} J_al
    for mu in 1..=3u8 {
        for nu in 1..=3u8 {
            let lhs = basis.j_vec[(mu - 1) as usize].commutator(&basis.j_vec[(nu - 1) as usize]);
            let mut rhs = MatrixG::zeros(DIM6);
            for al in 1..=3u8 {
                let eps = levi_civita::<EuclideanEps>(nu, mu, al);
                if !eps.is_zero() {
                    rhs = &rhs + &basis.j_vec[(al - 1) as usize].scale(eps);
                }
            }
            worst = worst.max((&lhs - &rhs).max_abs());
        }
    }
    // P commutes with every generator
    for mu in 1..=3u8 {
        for nu in 1..=3u8 {
            worst = worst.max(basis.p.commutator(&basis.j_signed(mu, nu)).max_abs());
        }
    }
    CheckReport::graded(
        "dkp/generator-relations",
        "Eq. (37), (40), (53)",
        worst as f64,
        0.0,
        "beta-generator commutators, generator algebra, pseudovector algebra, [P, J] = 0; exact",
        inputs(&[]),
    )
}

/// Hermitianizing-matrix relations, exact.
pub fn verify_eta_relations(basis: &DkpBasis) -> CheckReport {
    let eta = &basis.eta;
    let mut worst: i64 = 0;
    for (k, b) in basis.beta.iter().enumerate() {
        let rhs = &b.adjoint() * &eta.adjoint();
        let lhs = eta * b;
        let delta = if k < 2 { &lhs + &rhs } else { &lhs - &rhs };
        worst = worst.max(delta.max_abs());
    }
    worst = worst.max((&eta.adjoint() - eta).max_abs());
    worst = worst.max((&(eta * eta) - &MatrixG::identity(DIM6)).max_abs());
    worst = worst.max(eta.commutator(&basis.p).max_abs());
    CheckReport::graded(
        "dkp/eta-relations",
        "Eq. (41)-(43)",
        worst as f64,
        0.0,
        "eta anti/commutes with the betas as required, is Hermitian, squares to one, commutes with P",
        inputs(&[]),
    )
}

/// Conjugated wave function structure and the vanishing neutral current:
/// for physically real states, psi-bar = (mu A, -F) and psi-bar beta psi = 0.
pub fn verify_conjugate_structure(basis: &DkpBasis, rng: &mut Rng, samples: usize) -> CheckReport {
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let psi = random_physical(rng, basis.mass);
        let bar = conjugate(basis, &psi);
        let col = psi.column();
        for k in 0..3 {
            worst = worst.max((bar[k] - col[k]).norm());
            worst = worst.max((bar[k + 3] + col[k + 3]).norm());
        }
        for b in &basis.beta {
            let bc = b.to_complex();
            let bpsi = bc.mul_vec(&col);
            let current: Cplx = bar.iter().zip(&bpsi).map(|(l, r)| l * r).sum();
            worst = worst.max(current.norm());
        }
        // the adjoint of P is a different matrix, but sandwiched between the
        // conjugated and direct wave functions the two agree
        let p_c = basis.p.to_complex();
        let sandwich = |m: &MatrixC| -> Cplx {
            let v = m.mul_vec(&col);
            bar.iter().zip(&v).map(|(l, r)| l * r).sum()
        };
        worst = worst.max((sandwich(&p_c.adjoint()) - sandwich(&p_c)).norm());
    }
    CheckReport::graded(
        "dkp/conjugated-function",
        "Eq. (44)-(46)",
        worst,
        1e-14,
        "conjugated function equals (mu A, -F); the neutral current vanishes; \
         P and its adjoint agree inside the invariant sandwich",
        inputs(&[("samples", samples.to_string())]),
    )
}

/// Polynomial gauge families with exact derivative jets: the matrix equation
/// is insensitive to psi -> psi + P-bar phi.
pub fn verify_gauge_closure(basis: &DkpBasis, rng: &mut Rng) -> CheckReport {
    // Gauge functions Lambda(x) with analytic gradient and Hessian.
    type Grad = fn(&[f64; 3]) -> [f64; 3];
    type Hess = fn(&[f64; 3]) -> [[f64; 3]; 3];
    let families: [(&str, Grad, Hess); 3] = [
        ("x1", |_x| [1.0, 0.0, 0.0], |_x| [[0.0; 3]; 3]),
        (
            "x1*x2",
            |x| [x[1], x[0], 0.0],
            |_x| {
                let mut h = [[0.0; 3]; 3];
                h[0][1] = 1.0;
                h[1][0] = 1.0;
                h
            },
        ),
        (
            "x1^2 + x2^3",
            |x| [2.0 * x[0], 3.0 * x[1] * x[1], 0.0],
            |x| {
                let mut h = [[0.0; 3]; 3];
                h[0][0] = 2.0;
                h[1][1] = 6.0 * x[1];
                h
            },
        ),
    ];

    let mut worst = 0.0f64;
    let mut shift_worst = 0.0f64;
    for (_name, grad, hess) in &families {
        for _ in 0..20 {
            let x = [rng.range(-2.0, 2.0), rng.range(-2.0, 2.0), rng.range(-2.0, 2.0)];
            // (1 - P-bar) beta_mu d_mu phi with phi = (mu grad Lambda, 0):
            // d_mu phi_nu = mu * Hessian_{mu nu}.
            let h = hess(&x);
            let mut total = [Cplx::new(0.0, 0.0); 6];
            for m in 0..3 {
                let mut dphi_m = [Cplx::new(0.0, 0.0); 6];
                for n in 0..3 {
                    dphi_m[n] = Cplx::new(h[m][n] * basis.mass, 0.0);
                }
                let v = basis.beta[m].to_complex().mul_vec(&dphi_m);
                for (t, vk) in total.iter_mut().zip(&v) {
                    *t += vk;
                }
            }
            // (1 - P-bar) zeroes the vector block
            let residual = total[3..].iter().map(|z| z.norm()).fold(0.0, f64::max);
            worst = worst.max(residual);

            // the shift leaves the bivector block untouched
            let g = grad(&x);
            let gc = [
                Cplx::new(g[0], 0.0),
                Cplx::new(g[1], 0.0),
                Cplx::new(g[2], 0.0),
            ];
            let psi = random_physical(rng, basis.mass);
            let shifted = gauge_shift(basis, &psi, &gc);
            for k in 0..3 {
                shift_worst = shift_worst.max((shifted.bivector[k] - psi.bivector[k]).norm());
            }
        }
    }
    CheckReport::graded(
        "dkp/gauge-closure",
        "Eq. (29)-(32)",
        worst.max(shift_worst),
        1e-12,
        "gauge shift leaves the equation and the bivector block invariant for \
         polynomial gauge functions up to degree 3",
        inputs(&[("families", "3".into()), ("points", "20".into())]),
    )
}

/// The 6x6 matrix of the momentum-space equation: i beta.p + mu P.
pub fn lambda_matrix(basis: &DkpBasis, p: &Momentum3) -> MatrixC {
    let pc = p.components();
    let i = Cplx::new(0.0, 1.0);
    let mut m = MatrixC::zeros(DIM6);
    for (k, beta) in basis.beta.iter().enumerate() {
        m = &m + &beta.to_complex().scale(i * pc[k]);
    }
    &m + &basis.p.to_complex().scale(Cplx::new(p.mass, 0.0))
}

/// Same matrix built from the literal printed-sign projector; only the
/// errata comparator wants this.
pub(crate) fn lambda_matrix_literal(basis: &DkpBasis, p: &Momentum3) -> MatrixC {
    let pc = p.components();
    let i = Cplx::new(0.0, 1.0);
    let mut m = MatrixC::zeros(DIM6);
    for (k, beta) in basis.beta.iter().enumerate() {
        m = &m + &beta.to_complex().scale(i * pc[k]);
    }
    &m + &p_matrix_literal().to_complex().scale(Cplx::new(p.mass, 0.0))
}

/// Field-equation row for component nu as a linear form on the 6 components.
fn field_equation_row(p: &Momentum3, nu: u8) -> [Cplx; 6] {
    let pc = p.components();
    let i = Cplx::new(0.0, 1.0);
    let mut row = [Cplx::new(0.0, 0.0); 6];
    // i p_mu F_{mu nu}
    for mu in 1..=3u8 {
        if let Some((slot, sign)) = bivector_slot(mu, nu) {
            row[slot] += i * pc[(mu - 1) as usize] * (sign as f64);
        }
    }
    // (mu/2) eps_{nu sigma beta} F_{sigma beta}
    for sigma in 1..=3u8 {
        for beta in 1..=3u8 {
            if let Some((slot, sign)) = bivector_slot(sigma, beta) {
                let eps = levi_civita::<EuclideanEps>(nu, sigma, beta).to_complex();
                row[slot] += eps * (sign as f64) * (0.5 * p.mass);
            }
        }
    }
    row
}

/// Field-strength definition row for the canonical bivector pair (al, be),
/// scaled by mu: mu F_{al be} - i (p_al psi_be - p_be psi_al).
fn strength_definition_row(p: &Momentum3, al: u8, be: u8) -> [Cplx; 6] {
    let pc = p.components();
    let i = Cplx::new(0.0, 1.0);
    let mut row = [Cplx::new(0.0, 0.0); 6];
    let (slot, sign) = bivector_slot(al, be).expect("canonical pair");
    assert_eq!(sign, 1);
    row[slot] = Cplx::new(p.mass, 0.0);
    row[vector_slot(be)] -= i * pc[(al - 1) as usize];
    row[vector_slot(al)] += i * pc[(be - 1) as usize];
    row
}

/// Constructed solutions of the field equations are annihilated by the
/// matrix equation: relative residual over `n` random on-shell momenta.
pub fn verify_rwe_equivalence(
    basis: &DkpBasis,
    rng: &mut Rng,
    n: usize,
) -> Result<CheckReport, Error> {
    let mut worst = 0.0f64;
    let mut lam_max = 1.0f64;
    for _ in 0..n {
        let p = Momentum3::on_shell(
            rng.range(-7.0 * basis.mass, 7.0 * basis.mass),
            rng.range(-7.0 * basis.mass, 7.0 * basis.mass),
            basis.mass,
            true,
        );
        let a = solution_amplitude(&p, rng)?;
        let psi = WaveFunction6::from_amplitude(&p, &a);
        let lam = lambda_matrix(basis, &p);
        lam_max = lam_max.max(lam.norm_max());
        let res = lam.mul_vec(&psi.column());
        let res_norm = res.iter().map(|z| z.norm()).fold(0.0, f64::max);
        worst = worst.max(res_norm / psi.norm_max().max(1e-300));
    }
    // the stated tolerance, lifted by the rounding floor of products with
    // the operator once its entries grow past the default scale
    let lambda_tol = 1e-12f64.max(3e-15 * lam_max);
    Ok(CheckReport::graded(
        "dkp/rwe-annihilates-solutions",
        "Eq. (24)-(25) vs Eq. (2)",
        worst,
        lambda_tol,
        "matrix equation annihilates null-space-oracle solutions of the field equations",
        inputs(&[("momenta", n.to_string()), ("spatial_range", "7 mass".into())]),
    ))
}

/// Row-by-row equivalence: every row of the matrix equation is a fixed
/// nonzero multiple of the corresponding component equation; the constants
/// are an output of the check, not an assumption.
pub fn rwe_row_map(basis: &DkpBasis, p: &Momentum3) -> CheckReport {
    let lam = lambda_matrix(basis, p);
    let mut worst = 0.0f64;
    let mut constants = String::new();
    for row_idx in 0..DIM6 {
        let reference: [Cplx; 6] = if row_idx < 3 {
            field_equation_row(p, (row_idx + 1) as u8)
        } else {
            let (al, be) = [(1u8, 2u8), (3, 1), (2, 3)][row_idx - 3];
            strength_definition_row(p, al, be)
        };
        let lam_row: Vec<Cplx> = (0..DIM6).map(|c| lam.get(row_idx, c)).collect();
        // pick the largest reference entry to define the ratio
        let (k_max, _) = reference
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.norm().total_cmp(&b.1.norm()))
            .expect("nonempty row");
        let ratio = lam_row[k_max] / reference[k_max];
        let mut res = 0.0f64;
        for c in 0..DIM6 {
            res = res.max((lam_row[c] - ratio * reference[c]).norm());
        }
        worst = worst.max(res / reference[k_max].norm().max(1.0));
        let label = if row_idx < 3 {
            format!("field-eq row {}", row_idx + 1)
        } else {
            format!("strength-def row {}", row_idx + 1)
        };
        let _ = write!(
            constants,
            "{label}: c = {:+.3}{:+.3}i; ",
            ratio.re + 0.0,
            ratio.im + 0.0
        );
    }
    CheckReport::graded(
        "dkp/rwe-row-constants",
        "Eq. (24)-(25) vs Eq. (2)",
        worst,
        1e-12,
        format!("row-by-row constant multiples: {constants}"),
        inputs(&[
            ("p1", p.p1.to_string()),
            ("p2", p.p2.to_string()),
            ("p0", p.p0.to_string()),
        ]),
    )
}

// ---------------------------------------------------------------------------
// Printed-matrix comparison
// ---------------------------------------------------------------------------

/// A recorded discrepancy between a derived matrix entry and its printed
/// form. Positions are 1-based to match the printed displays.
#[derive(Clone, Debug)]
pub struct ErratumReport {
    pub target: String,
    pub position: (usize, usize),
    pub derived: String,
    pub printed: String,
    pub note: String,
}

fn diff_to_errata(target: &str, derived: &MatrixG, printed: &MatrixG, note: &str) -> Vec<ErratumReport> {
    derived
        .diff(printed)
        .into_iter()
        .map(|(r, c, d, p)| ErratumReport {
            target: target.to_string(),
            position: (r + 1, c + 1),
            derived: d.to_string(),
            printed: p.to_string(),
            note: note.to_string(),
        })
        .collect()
}

pub const FIXTURE_NAMES: [&str; 8] = [
    "eq27_beta1.mat",
    "eq27_beta2.mat",
    "eq27_beta3.mat",
    "eq27_p.mat",
    "eq39_j12.mat",
    "eq39_j13.mat",
    "eq39_j23.mat",
    "eq43_eta.mat",
];

/// Parses a fixture file: one row per line, comma-separated Gaussian integers.
pub fn parse_fixture(name: &str, text: &str) -> Result<MatrixG, Error> {
    let rows: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    if rows.len() != DIM6 {
        return Err(Error::FixtureParse {
            file: name.to_string(),
            line: rows.len(),
            msg: format!("expected {DIM6} rows, found {}", rows.len()),
        });
    }
    let mut m = MatrixG::zeros(DIM6);
    for (r, line) in rows.iter().enumerate() {
        let entries: Vec<&str> = line.split(',').collect();
        if entries.len() != DIM6 {
            return Err(Error::FixtureParse {
                file: name.to_string(),
                line: r + 1,
                msg: format!("expected {DIM6} entries, found {}", entries.len()),
            });
        }
        for (c, s) in entries.iter().enumerate() {
            let v = parse_gauss(s).ok_or_else(|| Error::FixtureParse {
                file: name.to_string(),
                line: r + 1,
                msg: format!("bad entry {s:?}"),
            })?;
            m.set(r, c, v);
        }
    }
    Ok(m)
}

fn compare_against(fixtures: &[(&str, MatrixG)]) -> Vec<ErratumReport> {
    let lookup = |name: &str| -> &MatrixG {
        &fixtures.iter().find(|(n, _)| *n == name).expect("fixture present").1
    };
    let mut out = Vec::new();
    let basis = build_dkp_basis(1.0).expect("unit mass");
    for (k, file) in ["eq27_beta1.mat", "eq27_beta2.mat", "eq27_beta3.mat"].iter().enumerate() {
        out.extend(diff_to_errata(
            &format!("printed beta_{}", k + 1),
            &basis.beta[k],
            lookup(file),
            "derived from the matrix-unit sum",
        ));
    }
    // The printed projector is compared against the literal evaluation of its
    // defining formula, so any conflict is a transcription statement about
    // the print, independent of the operational sign choice.
    out.extend(diff_to_errata(
        "printed P",
        &p_matrix_literal(),
        lookup("eq27_p.mat"),
        "literal evaluation of the defining sum with eps_123 = -i; the print \
         is consistent with the fifth slot meaning [13] instead of [31]",
    ));
    for (k, (file, label)) in [
        ("eq39_j12.mat", "J_12"),
        ("eq39_j13.mat", "J_13"),
        ("eq39_j23.mat", "J_23"),
    ]
    .iter()
    .enumerate()
    {
        out.extend(diff_to_errata(
            &format!("printed {label}"),
            &basis.j[k],
            lookup(file),
            "derived from the beta commutator",
        ));
    }
    out.extend(diff_to_errata(
        "printed eta",
        &basis.eta,
        lookup("eq43_eta.mat"),
        "derived from the matrix-unit sum",
    ));
    out
}

/// Compares derived constant matrices against fixture files in `dir`.
/// A missing or malformed file is an error; sign conflicts are reports.
pub fn compare_printed_dir(dir: &Path) -> Result<Vec<ErratumReport>, Error> {
    let mut fixtures = Vec::new();
    for name in FIXTURE_NAMES {
        let path = dir.join(name);
        let text = std::fs::read_to_string(&path).map_err(|_| Error::MissingFixture(path))?;
        fixtures.push((name, parse_fixture(name, &text)?));
    }
    Ok(compare_against(&fixtures))
}

/// Same comparison against the fixture copies embedded in the binary.
pub fn compare_printed_embedded() -> Vec<ErratumReport> {
    let texts: [(&str, &str); 8] = [
        ("eq27_beta1.mat", include_str!("../fixtures/eq27_beta1.mat")),
        ("eq27_beta2.mat", include_str!("../fixtures/eq27_beta2.mat")),
        ("eq27_beta3.mat", include_str!("../fixtures/eq27_beta3.mat")),
        ("eq27_p.mat", include_str!("../fixtures/eq27_p.mat")),
        ("eq39_j12.mat", include_str!("../fixtures/eq39_j12.mat")),
        ("eq39_j13.mat", include_str!("../fixtures/eq39_j13.mat")),
        ("eq39_j23.mat", include_str!("../fixtures/eq39_j23.mat")),
        ("eq43_eta.mat", include_str!("../fixtures/eq43_eta.mat")),
    ];
    let fixtures: Vec<(&str, MatrixG)> = texts
        .iter()
        .map(|(n, t)| (*n, parse_fixture(n, t).expect("embedded fixtures parse")))
        .collect();
    compare_against(&fixtures)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    fn c(re: f64, im: f64) -> Cplx {
        Cplx::new(re, im)
    }

    #[test]
    fn betas_match_their_commutator_generators() {
        let basis = build_dkp_basis(1.0).unwrap();
        let pairs = [(1usize, 2usize), (1, 3), (2, 3)];
        for (k, (m, n)) in pairs.into_iter().enumerate() {
            let comm = basis.beta[m - 1].commutator(&basis.beta[n - 1]);
            assert_eq!(comm, basis.j[k], "J from commutator vs matrix-unit sum");
        }
    }

    #[test]
    fn exact_relation_suite_is_exactly_zero() {
        let basis = build_dkp_basis(1.0).unwrap();
        for report in [
            verify_dkp_algebra(&basis),
            verify_projector_relations(&basis),
            verify_generator_relations(&basis),
            verify_eta_relations(&basis),
        ] {
            assert_eq!(report.residual, 0.0, "{}", report.id);
            assert_eq!(report.status, Status::Pass);
        }
    }

    #[test]
    fn beta_one_squared_is_the_expected_diagonal() {
        let basis = build_dkp_basis(1.0).unwrap();
        let b2 = &basis.beta[0] * &basis.beta[0];
        let mut expected = MatrixG::zeros(DIM6);
        for k in [1usize, 2, 3, 4] {
            expected.set(k, k, GaussInt::ONE);
        }
        assert_eq!(b2, expected);
    }

    #[test]
    fn betas_are_hermitian_and_p_is_not() {
        let basis = build_dkp_basis(1.0).unwrap();
        for b in &basis.beta {
            assert!(b.is_hermitian());
        }
        let diffs = basis.p.diff(&basis.p.adjoint());
        assert_eq!(diffs.len(), 6);
    }

    #[test]
    fn p_bar_is_the_vector_block_identity() {
        let basis = build_dkp_basis(1.0).unwrap();
        let mut expected = MatrixG::zeros(DIM6);
        for k in 0..3 {
            expected.set(k, k, GaussInt::ONE);
        }
        assert_eq!(basis.p_bar, expected);
    }

    #[test]
    fn eta_is_the_expected_signature() {
        let basis = build_dkp_basis(1.0).unwrap();
        let signs = [1i64, 1, -1, -1, 1, 1];
        for (k, s) in signs.iter().enumerate() {
            assert_eq!(basis.eta.get(k, k), GaussInt::new(*s, 0));
        }
    }

    #[test]
    fn mass_must_be_positive() {
        assert!(matches!(build_dkp_basis(0.0), Err(Error::NonPositiveMass(_))));
        assert!(matches!(build_dkp_basis(-1.0), Err(Error::NonPositiveMass(_))));
    }

    #[test]
    fn conjugate_of_unit_state() {
        let basis = build_dkp_basis(2.0).unwrap();
        // A = (1, 0, 0), F = 0 -> psi-bar = (mu, 0, 0, 0, 0, 0)
        let psi = WaveFunction6::new(
            [c(2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0); 3],
            2.0,
        );
        let bar = conjugate(&basis, &psi);
        assert!((bar[0] - c(2.0, 0.0)).norm() < 1e-15);
        for z in &bar[1..] {
            assert!(z.norm() < 1e-15);
        }
    }

    #[test]
    fn gauge_shift_moves_only_the_vector_block() {
        let basis = build_dkp_basis(1.5).unwrap();
        let psi = WaveFunction6::new([c(0.0, 0.0); 3], [c(0.0, 0.0); 3], 1.5);
        let shifted = gauge_shift(&basis, &psi, &[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        assert!((shifted.vector[0] - c(1.5, 0.0)).norm() < 1e-15);
        assert!(shifted.vector[1].norm() < 1e-15);
        for z in &shifted.bivector {
            assert!(z.norm() < 1e-15);
        }
    }

    #[test]
    fn rwe_equivalence_and_row_map_pass() {
        let basis = build_dkp_basis(1.0).unwrap();
        let mut rng = Rng::for_check(42, "test/rwe");
        let rep = verify_rwe_equivalence(&basis, &mut rng, 25).unwrap();
        assert_eq!(rep.status, Status::Pass, "{}", rep.detail);
        let p = Momentum3::new(2.0, 2.0, 3.0, 1.0);
        let rows = rwe_row_map(&basis, &p);
        assert_eq!(rows.status, Status::Pass, "{}", rows.detail);
        // vector rows carry constant -1, strength rows constant +1
        assert!(rows.detail.contains("field-eq row 1: c = -1.000+0.000i"));
        assert!(rows.detail.contains("strength-def row 4: c = +1.000+0.000i"));
    }

    #[test]
    fn literal_projector_sign_fails_on_solutions() {
        let basis = build_dkp_basis(1.0).unwrap();
        let mut rng = Rng::for_check(7, "test/literal");
        let p = Momentum3::on_shell(2.0, 2.0, 1.0, true);
        let a = solution_amplitude(&p, &mut rng).unwrap();
        let psi = WaveFunction6::from_amplitude(&p, &a);
        let lam = lambda_matrix_literal(&basis, &p);
        let res = lam.mul_vec(&psi.column());
        let res_norm = res.iter().map(|z| z.norm()).fold(0.0, f64::max);
        assert!(
            res_norm > 1e-3 * psi.norm_max(),
            "printed-sign projector should not annihilate field-equation solutions"
        );
    }

    #[test]
    fn printed_comparison_flags_only_the_projector_slot() {
        let errata = compare_printed_embedded();
        // betas, generators and eta match exactly; P differs at (2,5)
        assert_eq!(errata.len(), 1, "{errata:?}");
        assert_eq!(errata[0].target, "printed P");
        assert_eq!(errata[0].position, (2, 5));
        assert_eq!(errata[0].derived, "-1i");
        assert_eq!(errata[0].printed, "1i");
    }

    #[test]
    fn missing_fixture_directory_is_an_error() {
        let err = compare_printed_dir(Path::new("/nonexistent-fixture-dir")).unwrap_err();
        assert!(matches!(err, Error::MissingFixture(_)));
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(64))]

        /// A pure-gauge state (vector part proportional to the momentum,
        /// vanishing strength) lies in the kernel of the equation matrix at
        /// any momentum, on-shell or not.
        #[test]
        fn pure_gauge_states_are_annihilated(
            p1 in -5.0f64..5.0,
            p2 in -5.0f64..5.0,
            p0 in -5.0f64..5.0,
            scale_re in -2.0f64..2.0,
            scale_im in -2.0f64..2.0,
        ) {
            let basis = build_dkp_basis(1.0).unwrap();
            let p = Momentum3::new(p1, p2, p0, 1.0);
            let pc = p.components();
            let coeff = Cplx::new(scale_re, scale_im);
            let gauge = WaveFunction6::new(
                [pc[0] * coeff, pc[1] * coeff, pc[2] * coeff],
                [Cplx::new(0.0, 0.0); 3],
                1.0,
            );
            let res = lambda_matrix(&basis, &p).mul_vec(&gauge.column());
            let worst = res.iter().map(|z| z.norm()).fold(0.0, f64::max);
            proptest::prop_assert!(worst < 1e-12);
        }

        /// Conjugation of a physically real state flips exactly the
        /// bivector block.
        #[test]
        fn conjugation_flips_the_bivector_block(seed in proptest::num::u64::ANY) {
            let basis = build_dkp_basis(1.0).unwrap();
            let mut rng = Rng::new(seed);
            let psi = random_physical(&mut rng, 1.0);
            proptest::prop_assert!(psi.is_physically_real(1e-12));
            let bar = conjugate(&basis, &psi);
            let col = psi.column();
            for k in 0..3 {
                proptest::prop_assert!((bar[k] - col[k]).norm() < 1e-13);
                proptest::prop_assert!((bar[k + 3] + col[k + 3]).norm() < 1e-13);
            }
        }
    }

    #[test]
    fn fixture_dir_comparison_matches_embedded() {
        let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
        let from_dir = compare_printed_dir(&dir).unwrap();
        let embedded = compare_printed_embedded();
        assert_eq!(from_dir.len(), embedded.len());
    }
}
