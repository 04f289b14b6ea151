use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use super::Order;
use crate::poly::{cyclotomic, euler_phi, is_prime};

/// Outcome of the root-of-unity maximality probe.
///
/// The group μ and its order are user assertions; deciding maximality
/// exactly would require factoring polynomials over the field. Instead we
/// run a fixed modular probe: a larger μ forces a primitive pm-th root of
/// unity for some prime p with φ(pm) | n, and such a root survives
/// reduction modulo every prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum MuMaximality {
    /// Every candidate prime p is excluded: either φ(pm) ∤ n, or Φ_pm has
    /// no root in R/qR for some probe prime q (hence no root in R).
    Verified,
    /// Some candidate could not be settled by the probe set; the caller's
    /// assertion stands and reports flag it.
    NecessaryConditionsPass,
    /// For some candidate p, Φ_pm acquired a root modulo every usable probe
    /// prime: strong evidence that μ is larger than asserted.
    Failed,
}

/// Probe set: the first 10 primes coprime to p·m·(basis denominator),
/// further restricted to q with q^n small enough to enumerate R/qR.
const PROBE_COUNT: usize = 10;
const PROBE_ENUM_CAP: u64 = 200_000;

pub fn verify_mu_maximality(order: &Order) -> MuMaximality {
    let n = order.degree() as u64;
    let m = order.root_order();
    let denom = order.basis_denominator();

    let mut undecided = false;
    let mut p = 2u64;
    while p <= n + 1 {
        if !is_prime(p) || n % euler_phi(p * m) != 0 {
            p += 1;
            continue;
        }
        // candidate: φ(pm) | n, so ζ_{pm} could live in the field
        let phi_pm = cyclotomic(p * m);
        let probes = probe_primes(p, m, denom, n);
        if probes.is_empty() {
            undecided = true;
            p += 1;
            continue;
        }
        let clean_probe = probes.iter().any(|&q| !has_root_mod(order, &phi_pm, q));
        if !clean_probe {
            // Φ_pm has a root modulo every usable probe prime
            return MuMaximality::Failed;
        }
        p += 1;
    }
    if undecided {
        MuMaximality::NecessaryConditionsPass
    } else {
        MuMaximality::Verified
    }
}

fn probe_primes(p: u64, m: u64, denom: &BigInt, n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 2u64;
    let denom_u = denom.abs().to_u64().unwrap_or(0);
    while out.len() < PROBE_COUNT && q < 1000 {
        if is_prime(q)
            && p % q != 0
            && m % q != 0
            && (denom_u == 0 || denom_u % q != 0)
        {
            // only keep probes whose quotient we can enumerate
            if let Some(sz) = q.checked_pow(n as u32) {
                if sz <= PROBE_ENUM_CAP {
                    out.push(q);
                }
            }
        }
        q += 1;
    }
    out
}

/// Does `phi` have a root in R/qR? Exhaustive evaluation over the
/// coordinate box with i64 arithmetic mod q.
fn has_root_mod(order: &Order, phi: &[BigInt], q: u64) -> bool {
    let n = order.degree();
    let qi = q as i64;
    // structure constants mod q
    let mut sc = vec![0i64; n * n * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                sc[(i * n + j) * n + k] =
                    order.struct_const(i, j, k).mod_floor(&BigInt::from(q)).to_i64().unwrap();
            }
        }
    }
    let coeffs: Vec<i64> = phi
        .iter()
        .map(|c| c.mod_floor(&BigInt::from(q)).to_i64().unwrap())
        .collect();
    let size = (q as u64).pow(n as u32);

    let mul = |a: &[i64], b: &[i64]| -> Vec<i64> {
        let mut out = vec![0i64; n];
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                if b[j] == 0 {
                    continue;
                }
                let p = (a[i] * b[j]) % qi;
                for k in 0..n {
                    let c = sc[(i * n + j) * n + k];
                    if c != 0 {
                        out[k] = (out[k] + p * c) % qi;
                    }
                }
            }
        }
        out
    };

    for idx in 0..size {
        // idx -> coordinates
        let mut x = vec![0i64; n];
        let mut t = idx;
        for k in 0..n {
            x[k] = (t % q) as i64;
            t /= q;
        }
        // Horner: acc = acc*x + c_k
        let mut acc = vec![0i64; n];
        for c in coeffs.iter().rev() {
            acc = mul(&acc, &x);
            acc[0] = (acc[0] + c) % qi;
        }
        if acc.iter().all(|&v| v == 0) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;
    use crate::field::load_field;

    #[test]
    fn gaussian_verified() {
        let o = load_field(&builtin::gaussian()).unwrap();
        assert_eq!(verify_mu_maximality(&o), MuMaximality::Verified);
    }

    #[test]
    fn rationals_verified() {
        let o = load_field(&builtin::rationals()).unwrap();
        assert_eq!(verify_mu_maximality(&o), MuMaximality::Verified);
    }

    #[test]
    fn eisenstein_with_understated_m_fails() {
        // f = x^2+x+1 really has zeta_6; asserting m = 2 must be caught
        let mut spec = builtin::eisenstein();
        spec.zeta = vec!["-1".into(), "0".into()];
        spec.m = 2;
        let o = load_field(&spec).unwrap();
        assert_eq!(verify_mu_maximality(&o), MuMaximality::Failed);
    }

    #[test]
    fn all_bundled_specs_verified() {
        for spec in builtin::all() {
            let o = load_field(&spec).unwrap();
            assert_eq!(
                verify_mu_maximality(&o),
                MuMaximality::Verified,
                "spec {}",
                spec.name
            );
        }
    }
}
