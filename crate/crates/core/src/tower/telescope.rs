use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{GradedGroup, GroupSummand};
use crate::linalg::IntMatrix;
use crate::{Error, Result};

/// Classification of one diagonal entry of a certified triangular system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagClass {
    /// c^k with k ≥ 1: the direction is eventually divided by every prime
    /// (the admissible family is cofinal), contributing ℚ in the colimit.
    CPower(u64),
    /// Diagonal 1: an honest ℤ survives.
    Unit,
    /// Diagonal 0: the direction is absorbed into earlier basis vectors.
    Nilpotent,
}

impl DiagClass {
    fn value(&self, c: &BigInt) -> BigInt {
        match self {
            DiagClass::CPower(k) => c.pow(*k as u32),
            DiagClass::Unit => BigInt::one(),
            DiagClass::Nilpotent => BigInt::zero(),
        }
    }
}

/// Block-triangular structure certificate: the matrix is upper triangular
/// with the declared diagonal, entries being powers of the instantiated
/// parameter c.
#[derive(Clone, Debug)]
pub struct TriangularCertificate {
    pub c: BigInt,
    pub diag: Vec<DiagClass>,
}

/// One endomorphism of ℤ^r representing the whole admissible directed
/// family (the matrix is the instantiation at a concrete admissible c).
pub struct TelescopeSystem {
    pub matrix: IntMatrix,
    pub certificate: Option<TriangularCertificate>,
}

impl TelescopeSystem {
    pub fn uncertified(matrix: IntMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch("telescope matrix must be square".into()));
        }
        Ok(Self { matrix, certificate: None })
    }

    /// Attach a certificate, verifying it against the matrix.
    pub fn certified(matrix: IntMatrix, cert: TriangularCertificate) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch("telescope matrix must be square".into()));
        }
        if cert.diag.len() != matrix.rows() {
            return Err(Error::BadCertificate(format!(
                "{} diagonal classes for a {}x{} matrix",
                cert.diag.len(),
                matrix.rows(),
                matrix.rows()
            )));
        }
        if cert.c <= BigInt::one() {
            return Err(Error::BadCertificate("parameter c must exceed 1".into()));
        }
        if !matrix.is_upper_triangular() {
            return Err(Error::BadCertificate("matrix is not upper triangular".into()));
        }
        for (i, class) in cert.diag.iter().enumerate() {
            if matrix[(i, i)] != class.value(&cert.c) {
                return Err(Error::BadCertificate(format!(
                    "diagonal entry {} is {}, certificate says {:?}",
                    i,
                    matrix[(i, i)],
                    class
                )));
            }
        }
        Ok(Self { matrix, certificate: Some(cert) })
    }
}

/// Colimit of `ℤ^r → ℤ^r → …` along the system, degree 0 only.
///
/// With `invert_all_primes` the system runs over the full admissible
/// family, so every prime is eventually inverted on the c-power
/// directions: each `CPower` diagonal contributes ℚ, each `Unit` an honest
/// ℤ, and `Nilpotent` directions are absorbed. This exact ℤ-structure
/// requires a certificate. Without `invert_all_primes` only the rational
/// shadow is computed: ℚ-dimension = stable rank of the matrix
/// (rank of A^r), which needs no certificate.
pub fn telescope_colimit(sys: &TelescopeSystem, invert_all_primes: bool) -> Result<GradedGroup> {
    if !invert_all_primes {
        let r = sys.matrix.rows();
        let stable = sys.matrix.pow(r as u64)?.rank();
        return Ok(GradedGroup::new(
            GroupSummand::rational(stable),
            GroupSummand::zero(),
        ));
    }
    let Some(cert) = &sys.certificate else {
        return Err(Error::UncertifiedIntegralRequest);
    };
    let mut q = 0usize;
    let mut z = 0usize;
    for class in &cert.diag {
        match class {
            DiagClass::CPower(_) => q += 1,
            DiagClass::Unit => z += 1,
            DiagClass::Nilpotent => {}
        }
    }
    Ok(GradedGroup::new(GroupSummand::mixed(q, z), GroupSummand::zero()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_system() {
        let m = IntMatrix::identity(3);
        let cert = TriangularCertificate {
            c: BigInt::from(2),
            diag: vec![DiagClass::Unit; 3],
        };
        let sys = TelescopeSystem::certified(m, cert).unwrap();
        let g = telescope_colimit(&sys, true).unwrap();
        assert_eq!(g.deg0, GroupSummand::free(3));
        assert!(g.deg1.is_zero());
    }

    #[test]
    fn diag_c_one() {
        // diag(c, 1) at c = 2 over the full admissible family: Q ⊕ Z
        let m = IntMatrix::from_rows_i64(&[&[2, 0], &[0, 1]]);
        let cert = TriangularCertificate {
            c: BigInt::from(2),
            diag: vec![DiagClass::CPower(1), DiagClass::Unit],
        };
        let sys = TelescopeSystem::certified(m, cert).unwrap();
        let g = telescope_colimit(&sys, true).unwrap();
        assert_eq!(g.deg0, GroupSummand::mixed(1, 1));
    }

    #[test]
    fn uncertified_integral_request_fails() {
        let m = IntMatrix::from_rows_i64(&[&[2, 1], &[0, 1]]);
        let sys = TelescopeSystem::uncertified(m).unwrap();
        assert!(matches!(
            telescope_colimit(&sys, true),
            Err(Error::UncertifiedIntegralRequest)
        ));
        // rational shadow works without certificate
        let g = telescope_colimit(&sys, false).unwrap();
        assert_eq!(g.deg0, GroupSummand::rational(2));
    }

    #[test]
    fn nilpotent_directions_vanish() {
        let m = IntMatrix::from_rows_i64(&[&[4, 7, 3], &[0, 0, 2], &[0, 0, 1]]);
        let cert = TriangularCertificate {
            c: BigInt::from(2),
            diag: vec![DiagClass::CPower(2), DiagClass::Nilpotent, DiagClass::Unit],
        };
        let sys = TelescopeSystem::certified(m, cert).unwrap();
        let g = telescope_colimit(&sys, true).unwrap();
        assert_eq!(g.deg0, GroupSummand::mixed(1, 1));
        // rational shadow agrees on total dimension: rank(A^3) = 2
        let g2 = telescope_colimit(&TelescopeSystem::uncertified(sys.matrix.clone()).unwrap(), false)
            .unwrap();
        assert_eq!(g2.deg0.rational_rank(), 2);
    }

    #[test]
    fn bad_certificates_rejected() {
        let m = IntMatrix::from_rows_i64(&[&[2, 0], &[1, 1]]);
        let cert = TriangularCertificate {
            c: BigInt::from(2),
            diag: vec![DiagClass::CPower(1), DiagClass::Unit],
        };
        assert!(matches!(
            TelescopeSystem::certified(m, cert.clone()),
            Err(Error::BadCertificate(_))
        ));
        let m = IntMatrix::from_rows_i64(&[&[3, 0], &[0, 1]]);
        assert!(matches!(
            TelescopeSystem::certified(m, cert),
            Err(Error::BadCertificate(_))
        ));
    }
}
