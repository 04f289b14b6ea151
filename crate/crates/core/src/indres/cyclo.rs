use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::poly::{cyclotomic, euler_phi, p_divrem, qpoly_from_ints, QPoly};

/// Exact element of ℚ(ζ_N), as a polynomial in ζ_N reduced mod Φ_N.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycNum {
    coeffs: Vec<BigRational>, // length φ(N)
}

/// Arithmetic context for ℚ(ζ_N).
pub struct CycField {
    n: u64,
    dim: usize,
    phi: QPoly,
}

impl CycField {
    pub fn new(n: u64) -> Self {
        let phi = qpoly_from_ints(&cyclotomic(n));
        Self { n, dim: euler_phi(n) as usize, phi }
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    pub fn zero(&self) -> CycNum {
        CycNum { coeffs: vec![BigRational::zero(); self.dim] }
    }

    pub fn from_rational(&self, q: BigRational) -> CycNum {
        let mut z = self.zero();
        z.coeffs[0] = q;
        z
    }

    pub fn from_integer(&self, k: i64) -> CycNum {
        self.from_rational(BigRational::from_integer(BigInt::from(k)))
    }

    /// ζ_N^k, reduced.
    pub fn root(&self, k: u64) -> CycNum {
        let k = (k % self.n) as usize;
        let mut poly = vec![BigRational::zero(); k + 1];
        poly[k] = BigRational::one();
        self.reduce(poly)
    }

    fn reduce(&self, poly: QPoly) -> CycNum {
        let (_, mut r) = p_divrem(&poly, &self.phi);
        r.resize(self.dim, BigRational::zero());
        CycNum { coeffs: r }
    }

    pub fn add(&self, a: &CycNum, b: &CycNum) -> CycNum {
        CycNum {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }

    pub fn sub(&self, a: &CycNum, b: &CycNum) -> CycNum {
        CycNum {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| x - y)
                .collect(),
        }
    }

    pub fn mul(&self, a: &CycNum, b: &CycNum) -> CycNum {
        let mut prod = vec![BigRational::zero(); 2 * self.dim];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                prod[i + j] += x * y;
            }
        }
        self.reduce(prod)
    }

    pub fn scale(&self, a: &CycNum, q: &BigRational) -> CycNum {
        CycNum { coeffs: a.coeffs.iter().map(|x| x * q).collect() }
    }

    /// Complex conjugation ζ ↦ ζ⁻¹.
    pub fn conj(&self, a: &CycNum) -> CycNum {
        let mut acc = self.zero();
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let inv = self.root(((self.n as usize - i) % self.n as usize) as u64);
            acc = self.add(&acc, &self.scale(&inv, x));
        }
        acc
    }

    /// Rational value, when the element lies in ℚ.
    pub fn as_rational(&self, a: &CycNum) -> Option<BigRational> {
        if a.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(a.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Dimension φ(N) of the ℚ-vector space.
    pub fn dimension(&self) -> usize {
        self.dim
    }

    /// Coefficient of ζ^idx in the power-basis expansion.
    pub fn coefficient(&self, a: &CycNum, idx: usize) -> BigRational {
        a.coeffs[idx].clone()
    }
}

impl CycNum {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}
