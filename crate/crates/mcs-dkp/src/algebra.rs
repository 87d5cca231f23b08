//! Index conventions, Levi-Civita tensor, generalized Kronecker symbol and
//! the matrix-unit basis of the 6-dimensional representation space.
//!
//! The 6 components are ordered `(1, 2, 3, [12], [31], [23])`: three vector
//! slots followed by three bivector slots. Every tensor-to-linear-index
//! conversion goes through [`bivector_slot`], so the ordering convention
//! lives in exactly one place.

use crate::matrix::MatrixG;
use crate::scalar::GaussInt;

pub const DIM6: usize = 6;

/// One of the six canonical component labels.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum IndexB {
    /// Vector index, 1..=3.
    Vector(u8),
    /// Canonical bivector pair: (1,2), (3,1) or (2,3).
    Bivector(u8, u8),
}

/// The canonical linear order of the six components.
pub const CANONICAL: [IndexB; 6] = [
    IndexB::Vector(1),
    IndexB::Vector(2),
    IndexB::Vector(3),
    IndexB::Bivector(1, 2),
    IndexB::Bivector(3, 1),
    IndexB::Bivector(2, 3),
];

impl IndexB {
    /// Zero-based linear position in the canonical order.
    pub fn position(self) -> usize {
        match self {
            IndexB::Vector(m) => {
                assert!((1..=3).contains(&m), "vector index out of range");
                (m - 1) as usize
            }
            IndexB::Bivector(m, n) => {
                let (slot, sign) =
                    bivector_slot(m, n).expect("bivector index with repeated entries");
                assert_eq!(sign, 1, "non-canonical bivector label");
                slot
            }
        }
    }
}

/// Linear slot of a vector index (zero-based).
pub fn vector_slot(mu: u8) -> usize {
    assert!((1..=3).contains(&mu));
    (mu - 1) as usize
}

/// Linear slot and orientation sign of an ordered bivector pair.
///
/// Returns `None` when the two indices coincide (the component vanishes).
/// A pair printed in the opposite orientation of its canonical form carries
/// sign -1, e.g. `[21]` maps to the slot of `[12]` with sign -1.
pub fn bivector_slot(mu: u8, nu: u8) -> Option<(usize, i64)> {
    match (mu, nu) {
        (1, 2) => Some((3, 1)),
        (2, 1) => Some((3, -1)),
        (3, 1) => Some((4, 1)),
        (1, 3) => Some((4, -1)),
        (2, 3) => Some((5, 1)),
        (3, 2) => Some((5, -1)),
        (m, n) if m == n && (1..=3).contains(&m) => None,
        _ => panic!("bivector indices out of range: [{mu}{nu}]"),
    }
}

/// Generalized Kronecker symbol on two ordered index pairs:
/// `delta_{mu alpha} delta_{nu beta} - delta_{mu beta} delta_{nu alpha}`.
pub fn gen_kronecker(p: (u8, u8), q: (u8, u8)) -> i64 {
    let d = |a: u8, b: u8| i64::from(a == b);
    d(p.0, q.0) * d(p.1, q.1) - d(p.0, q.1) * d(p.1, q.0)
}

/// Sign of the permutation (i, j, k) of (1, 2, 3); zero on repeats.
pub fn perm_sign3(i: u8, j: u8, k: u8) -> i64 {
    assert!((1..=3).contains(&i) && (1..=3).contains(&j) && (1..=3).contains(&k));
    let (i, j, k) = (i as i64, j as i64, k as i64);
    (i - j) * (j - k) * (k - i) / 2
}

/// Convention tag for the totally antisymmetric tensor. The two conventions
/// are distinct types so they cannot be mixed silently.
pub trait EpsConvention {
    const NAME: &'static str;
    /// Value on (1, 2, 3).
    fn base() -> GaussInt;
}

/// The convention used by the wave-equation sector: value -i on (1, 2, 3).
pub struct EuclideanEps;

impl EpsConvention for EuclideanEps {
    const NAME: &'static str = "euclidean";
    fn base() -> GaussInt {
        GaussInt::new(0, -1)
    }
}

/// The real convention used by the momentum-space vector-potential matrix:
/// value +1 on (1, 2, 3). Equals i times the Euclidean convention.
pub struct RealEps;

impl EpsConvention for RealEps {
    const NAME: &'static str = "real";
    fn base() -> GaussInt {
        GaussInt::ONE
    }
}

/// Totally antisymmetric tensor in the chosen convention.
pub fn levi_civita<C: EpsConvention>(i: u8, j: u8, k: u8) -> GaussInt {
    C::base() * perm_sign3(i, j, k)
}

/// Matrix unit with 1 where row `m` and column `n` cross.
///
/// Satisfies the product rule: unit(M, A) * unit(B, N) = delta_{AB} unit(M, N).
pub fn basis_matrix(m: IndexB, n: IndexB) -> MatrixG {
    MatrixG::unit(DIM6, m.position(), n.position())
}

/// Signed matrix unit for possibly non-canonical labels; used when assembling
/// operators from sums over all orderings of tensor indices.
pub(crate) fn add_unit_vec_biv(m: &mut MatrixG, row_mu: u8, col: (u8, u8), coeff: GaussInt) {
    if let Some((slot, sign)) = bivector_slot(col.0, col.1) {
        m.add_at(vector_slot(row_mu), slot, coeff * sign);
    }
}

pub(crate) fn add_unit_biv_vec(m: &mut MatrixG, row: (u8, u8), col_mu: u8, coeff: GaussInt) {
    if let Some((slot, sign)) = bivector_slot(row.0, row.1) {
        m.add_at(slot, vector_slot(col_mu), coeff * sign);
    }
}

pub(crate) fn add_unit_biv_biv(m: &mut MatrixG, row: (u8, u8), col: (u8, u8), coeff: GaussInt) {
    if let (Some((rs, r_sign)), Some((cs, c_sign))) =
        (bivector_slot(row.0, row.1), bivector_slot(col.0, col.1))
    {
        m.add_at(rs, cs, coeff * (r_sign * c_sign));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::MatrixG;
    use proptest::prelude::*;

    #[test]
    fn canonical_positions_are_a_bijection() {
        for (k, idx) in CANONICAL.iter().enumerate() {
            assert_eq!(idx.position(), k);
        }
    }

    #[test]
    fn basis_matrix_places_single_one() {
        // (vector 1, bivector [23]) -> single 1 at row 1, column 6 (1-based)
        let m = basis_matrix(IndexB::Vector(1), IndexB::Bivector(2, 3));
        assert_eq!(m.get(0, 5), GaussInt::ONE);
        let mut others = 0;
        for r in 0..DIM6 {
            for c in 0..DIM6 {
                if (r, c) != (0, 5) && !m.get(r, c).is_zero() {
                    others += 1;
                }
            }
        }
        assert_eq!(others, 0);
    }

    #[test]
    fn basis_matrix_product_rule() {
        // unit(M, A) * unit(B, N) = delta_AB unit(M, N), exactly, all labels
        for &m in &CANONICAL {
            for &a in &CANONICAL {
                for &b in &CANONICAL {
                    for &n in &CANONICAL {
                        let lhs = &basis_matrix(m, a) * &basis_matrix(b, n);
                        let rhs = if a == b {
                            basis_matrix(m, n)
                        } else {
                            MatrixG::zeros(DIM6)
                        };
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn levi_civita_base_values() {
        assert_eq!(levi_civita::<EuclideanEps>(1, 2, 3), GaussInt::new(0, -1));
        assert_eq!(levi_civita::<EuclideanEps>(2, 3, 1), GaussInt::new(0, -1));
        assert_eq!(levi_civita::<EuclideanEps>(1, 1, 2), GaussInt::ZERO);
        assert_eq!(levi_civita::<RealEps>(1, 2, 3), GaussInt::ONE);
        // real convention = i * euclidean convention, entrywise
        for i in 1..=3u8 {
            for j in 1..=3u8 {
                for k in 1..=3u8 {
                    assert_eq!(
                        levi_civita::<RealEps>(i, j, k),
                        GaussInt::I * levi_civita::<EuclideanEps>(i, j, k)
                    );
                }
            }
        }
    }

    #[test]
    fn gen_kronecker_examples() {
        assert_eq!(gen_kronecker((1, 2), (1, 2)), 1);
        assert_eq!(gen_kronecker((1, 2), (2, 1)), -1);
        assert_eq!(gen_kronecker((1, 2), (3, 1)), 0);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn levi_civita_is_totally_antisymmetric(
            i in 1u8..=3, j in 1u8..=3, k in 1u8..=3,
        ) {
            let e = levi_civita::<EuclideanEps>(i, j, k);
            prop_assert_eq!(levi_civita::<EuclideanEps>(j, i, k), -e);
            prop_assert_eq!(levi_civita::<EuclideanEps>(i, k, j), -e);
            prop_assert_eq!(levi_civita::<EuclideanEps>(k, j, i), -e);
            prop_assert_eq!(levi_civita::<EuclideanEps>(j, k, i), e);
            prop_assert_eq!(levi_civita::<EuclideanEps>(k, i, j), e);
        }

        #[test]
        fn gen_kronecker_is_antisymmetric_in_each_pair(
            m in 1u8..=3, n in 1u8..=3, a in 1u8..=3, b in 1u8..=3,
        ) {
            let v = gen_kronecker((m, n), (a, b));
            prop_assert_eq!(gen_kronecker((n, m), (a, b)), -v);
            prop_assert_eq!(gen_kronecker((m, n), (b, a)), -v);
        }
    }
}
