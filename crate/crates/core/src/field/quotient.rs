use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Order, OrderElement};
use crate::{Error, Result};

/// Cap on |R/cR| so permutation images stay enumerable in memory.
const MAX_QUOTIENT_SIZE: u64 = 1 << 23;

/// R/cR for a rational integer modulus `c > 1`, with the minimal
/// representative system realized as the coordinate box `[0,c)^n` and O(1)
/// index maps.
///
/// All quotient arithmetic runs in `i64`: the construction certifies, in
/// exact arithmetic, that no intermediate value in the reduction and
/// permutation formulas can leave the `i64` range, so the fast path is
/// exact, not a modular shortcut.
pub struct QuotientRing {
    c: i64,
    n: usize,
    size: usize,
    /// Z^j as row-major i64 entries, j = 0..m.
    z_powers: Vec<Vec<i64>>,
    m: u64,
}

impl QuotientRing {
    pub fn new(order: &Order, c: &BigInt) -> Result<Self> {
        if c <= &BigInt::one() {
            return Err(Error::SpecParse("modulus must exceed 1".into()));
        }
        let n = order.degree();
        let size_big = c.pow(n as u32);
        if size_big > BigInt::from(MAX_QUOTIENT_SIZE) {
            return Err(Error::QuotientTooLarge { size: size_big });
        }
        let c_i64 = c.to_i64().ok_or_else(|| Error::QuotientTooLarge {
            size: size_big.clone(),
        })?;
        let size = size_big.to_usize().expect("bounded above");

        let m = order.root_order();
        let mut z_powers = Vec::with_capacity(m as usize);
        let mut max_entry = BigInt::zero();
        for j in 0..m {
            let zj = order.z_power(j);
            let mut flat = Vec::with_capacity(n * n);
            for i in 0..n {
                for k in 0..n {
                    let e = &zj[(i, k)];
                    if e.abs() > max_entry {
                        max_entry = e.abs();
                    }
                    flat.push(e.to_i64().ok_or_else(|| Error::QuotientTooLarge {
                        size: size_big.clone(),
                    })?);
                }
            }
            z_powers.push(flat);
        }
        // certify the i64 fast path: the largest intermediate is bounded by
        // m · (n·maxZ)^2 · c · (2 + n·maxZ); demand plenty of headroom
        let nz = BigInt::from(n as u64) * &max_entry + BigInt::one();
        let bound = BigInt::from(m) * &nz * &nz * c * (BigInt::from(2) + &nz);
        if bound > BigInt::from(i64::MAX / 4) {
            return Err(Error::QuotientTooLarge { size: size_big });
        }

        Ok(Self { c: c_i64, n, size, z_powers, m })
    }

    pub fn modulus(&self) -> i64 {
        self.c
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// |R/cR| = c^n.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Coordinatewise reduction into [0, c).
    pub fn red_coords(&self, coords: &mut [i64]) {
        for x in coords.iter_mut() {
            *x = x.rem_euclid(self.c);
        }
    }

    pub fn red_element(&self, x: &OrderElement) -> Vec<i64> {
        use num_integer::Integer;
        let cb = BigInt::from(self.c);
        x.coords
            .iter()
            .map(|v| v.mod_floor(&cb).to_i64().expect("reduced coordinate fits"))
            .collect()
    }

    /// Mixed-radix index of a reduced coordinate vector.
    pub fn index(&self, coords: &[i64]) -> usize {
        let mut idx: usize = 0;
        for k in (0..self.n).rev() {
            idx = idx * self.c as usize + coords[k] as usize;
        }
        idx
    }

    /// Representative coordinates at a given index.
    pub fn rep(&self, idx: usize) -> Vec<i64> {
        let mut out = vec![0i64; self.n];
        self.rep_into(idx, &mut out);
        out
    }

    /// Allocation-free variant for hot loops.
    pub fn rep_into(&self, mut idx: usize, out: &mut [i64]) {
        for k in 0..self.n {
            out[k] = (idx % self.c as usize) as i64;
            idx /= self.c as usize;
        }
    }

    /// Advance a coordinate-box counter by one (mixed radix, coordinate 0
    /// least significant); false on wraparound.
    pub fn advance(&self, coords: &mut [i64]) -> bool {
        for k in 0..self.n {
            coords[k] += 1;
            if coords[k] < self.c {
                return true;
            }
            coords[k] = 0;
        }
        false
    }

    pub fn rep_element(&self, idx: usize) -> OrderElement {
        OrderElement::from_i64(&self.rep(idx))
    }

    /// Apply Z^j to a coordinate vector (no reduction).
    pub fn apply_z_power(&self, j: u64, coords: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; self.n];
        self.apply_z_power_into(j, coords, &mut out);
        out
    }

    /// Allocation-free variant for hot loops.
    pub fn apply_z_power_into(&self, j: u64, coords: &[i64], out: &mut [i64]) {
        let flat = &self.z_powers[(j % self.m) as usize];
        let n = self.n;
        for i in 0..n {
            let mut acc = 0i64;
            for k in 0..n {
                acc += flat[i * n + k] * coords[k];
            }
            out[i] = acc;
        }
    }

    /// All representatives, in index order.
    pub fn reps(&self) -> impl Iterator<Item = Vec<i64>> + '_ {
        (0..self.size).map(move |i| self.rep(i))
    }
}
