use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::field::{Order, OrderElement};
use crate::linalg::{snf, IntMatrix, SmithDecomposition};

/// The finite quotient `R / (1 − ζ^i)R`, presented through the Smith normal
/// form of the matrix `1 − Z^i`. Representatives are the diagonal box pulled
/// back along the unimodular transform; no coordinate-box system exists for
/// these non-rational moduli.
pub struct IdealQuotient {
    n: usize,
    smith: SmithDecomposition,
    diag: Vec<BigInt>,
    size: u64,
}

impl IdealQuotient {
    /// Quotient by (1 − ζ^i); requires ζ^i ≠ 1 (the action is free, so the
    /// matrix is nonsingular and the quotient finite).
    pub fn new(order: &Order, i: u64) -> Self {
        let m = order.root_order();
        assert!(i % m != 0, "1 - zeta^0 = 0 has no finite quotient");
        let a = IntMatrix::identity(order.degree())
            .sub(order.z_power(i))
            .expect("shape");
        let smith = snf(&a);
        let diag = smith.diagonal();
        let size = diag
            .iter()
            .fold(BigInt::one(), |acc, d| acc * d)
            .abs()
            .to_u64()
            .expect("finite quotient of desk-scale order");
        assert!(size > 0, "free action gives a nonsingular matrix");
        Self { n: order.degree(), smith, diag, size }
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    /// Canonical representative of `x + (1−ζ^i)R`: transform by U, reduce
    /// each coordinate mod the diagonal, pull back along U⁻¹.
    pub fn reduce(&self, x: &OrderElement) -> OrderElement {
        let w = self.smith.u.mul_vec(&x.coords).expect("shape");
        let reduced: Vec<BigInt> = w
            .iter()
            .zip(&self.diag)
            .map(|(v, d)| v.mod_floor(d))
            .collect();
        OrderElement {
            coords: self.smith.u_inv.mul_vec(&reduced).expect("shape"),
        }
    }

    /// All canonical representatives, in diagonal-box order.
    pub fn representatives(&self) -> Vec<OrderElement> {
        let mut out = Vec::with_capacity(self.size as usize);
        let mut counter = vec![BigInt::zero(); self.n];
        loop {
            out.push(OrderElement {
                coords: self.smith.u_inv.mul_vec(&counter).expect("shape"),
            });
            // increment the mixed-radix counter
            let mut k = 0;
            loop {
                if k == self.n {
                    return out;
                }
                counter[k] += 1;
                if counter[k] < self.diag[k] {
                    break;
                }
                counter[k] = BigInt::zero();
                k += 1;
            }
        }
    }

    pub fn is_zero_class(&self, x: &OrderElement) -> bool {
        let w = self.smith.u.mul_vec(&x.coords).expect("shape");
        w.iter()
            .zip(&self.diag)
            .all(|(v, d)| v.mod_floor(d).is_zero())
    }
}
