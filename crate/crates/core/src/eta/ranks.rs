use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::field::Order;
use crate::linalg::IntMatrix;
use crate::poly::elementary_symmetric_from_traces;
use crate::{Error, Result};

/// Invariant dimensions of all exterior powers:
/// `d̂_k = (1/m) Σ_j trace(Λ^k Z^j)` for k = 0..n, via the averaged
/// elementary symmetric functions of the eigenvalues of Z^j.
pub fn invariant_dimensions(order: &Order) -> Result<Vec<u64>> {
    let n = order.degree();
    let m = order.root_order();
    let mut sums = vec![BigInt::zero(); n + 1];
    for j in 0..m {
        let e = elementary_symmetric_from_traces(order.z_power(j))?;
        for k in 0..=n {
            sums[k] += &e[k];
        }
    }
    let mb = BigInt::from(m);
    let mut out = Vec::with_capacity(n + 1);
    for (k, s) in sums.iter().enumerate() {
        let q = s / &mb;
        if &q * &mb != *s {
            return Err(Error::InvariantViolation(format!(
                "character average for k={k} is not integral"
            )));
        }
        let d = q.to_u64().ok_or_else(|| {
            Error::InvariantViolation(format!("invariant dimension for k={k} negative or huge"))
        })?;
        out.push(d);
    }
    Ok(out)
}

/// Rational ranks of the even-degree infinite part: `(k, d_k)` for even k,
/// with d_0 = 1. Only even degrees enter the K₀ model.
pub fn inf_ranks(order: &Order) -> Result<Vec<(u64, u64)>> {
    let dims = invariant_dimensions(order)?;
    if dims[0] != 1 {
        return Err(Error::InvariantViolation("d_0 must be 1".into()));
    }
    // the top invariant dimension matches the parity indicator
    let n = order.degree();
    if dims[n] != u64::from(delta(order)) {
        return Err(Error::InvariantViolation(
            "top exterior invariant must equal the parity indicator".into(),
        ));
    }
    Ok(dims
        .iter()
        .enumerate()
        .filter(|(k, _)| k % 2 == 0)
        .map(|(k, &d)| (k as u64, d))
        .collect())
}

/// δ = 1 iff the field degree is even (iff the power c⁰ occurs in the
/// infinite diagonal of η_c).
pub fn delta(order: &Order) -> u8 {
    if order.degree() % 2 == 0 {
        1
    } else {
        0
    }
}

/// Both sides of the Molien alternating identity:
/// `Σ_k (−1)^k d̂_k` and `(1/m) Σ_j det(1 − Z^j)`.
pub fn molien_alternating_sum(order: &Order) -> Result<(BigInt, BigInt)> {
    let dims = invariant_dimensions(order)?;
    let mut lhs = BigInt::zero();
    for (k, &d) in dims.iter().enumerate() {
        let t = BigInt::from(d);
        if k % 2 == 0 {
            lhs += t;
        } else {
            lhs -= t;
        }
    }
    let n = order.degree();
    let m = order.root_order();
    let mut det_sum = BigInt::zero();
    for j in 0..m {
        let diff = IntMatrix::identity(n).sub(order.z_power(j))?;
        det_sum += diff.det()?;
    }
    let mb = BigInt::from(m);
    let rhs = &det_sum / &mb;
    if &rhs * &mb != det_sum {
        return Err(Error::InvariantViolation(
            "determinant average is not integral".into(),
        ));
    }
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;
    use crate::field::load_field;

    #[test]
    fn gaussian_ranks() {
        let o = load_field(&builtin::gaussian()).unwrap();
        assert_eq!(inf_ranks(&o).unwrap(), vec![(0, 1), (2, 1)]);
        assert_eq!(delta(&o), 1);
    }

    #[test]
    fn rationals_ranks() {
        let o = load_field(&builtin::rationals()).unwrap();
        assert_eq!(inf_ranks(&o).unwrap(), vec![(0, 1)]);
        assert_eq!(delta(&o), 0);
    }

    #[test]
    fn eisenstein_and_sqrt2_ranks() {
        let o = load_field(&builtin::eisenstein()).unwrap();
        assert_eq!(inf_ranks(&o).unwrap(), vec![(0, 1), (2, 1)]);
        let o = load_field(&builtin::sqrt2()).unwrap();
        assert_eq!(inf_ranks(&o).unwrap(), vec![(0, 1), (2, 1)]);
    }

    #[test]
    fn cbrt2_and_zeta5_ranks() {
        let o = load_field(&builtin::cbrt2()).unwrap();
        // Z = -I on Z^3: invariant pairs in Λ² number C(3,2) = 3
        assert_eq!(inf_ranks(&o).unwrap(), vec![(0, 1), (2, 3)]);
        assert_eq!(delta(&o), 0);
        let o = load_field(&builtin::zeta5()).unwrap();
        assert_eq!(inf_ranks(&o).unwrap(), vec![(0, 1), (2, 2), (4, 1)]);
        assert_eq!(delta(&o), 1);
    }

    #[test]
    fn molien_identity_all_specs() {
        for spec in builtin::all() {
            let o = load_field(&spec).unwrap();
            let (lhs, rhs) = molien_alternating_sum(&o).unwrap();
            assert_eq!(lhs, rhs, "Molien identity for {}", spec.name);
        }
    }
}
