use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::field::{Order, OrderElement, QuotientRing};
use crate::{Error, Result};

/// The permutation `π(d) = red(ζ^{−i}(d − b))` of the representative box
/// `𝓡_c`, with its image array. Bijectivity is verified at construction.
pub struct AffinePermutation {
    pub quotient: QuotientRing,
    image: Vec<u32>,
    b_red: Vec<i64>,
    rot: u64,
}

impl AffinePermutation {
    pub fn rotation(&self) -> u64 {
        self.rot
    }

    pub fn apply(&self, idx: usize) -> usize {
        self.image[idx] as usize
    }

    pub fn size(&self) -> usize {
        self.image.len()
    }

    pub fn b_red(&self) -> &[i64] {
        &self.b_red
    }

    /// Cycles, each listed starting from its least index, ordered by that
    /// least index.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.image.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut cur = start;
            loop {
                seen[cur] = true;
                cyc.push(cur);
                cur = self.image[cur] as usize;
                if cur == start {
                    break;
                }
            }
            out.push(cyc);
        }
        out
    }

    /// Cycle census: length → number of cycles of that length.
    pub fn census(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for c in self.cycles() {
            *out.entry(c.len()).or_insert(0usize) += 1;
        }
        out
    }
}

/// Build the affine permutation for `(b, ζ^i)` on `𝓡_c`; `i = 0` is allowed
/// (pure translation) and admissibility of `c` is not required here.
pub fn affine_permutation(
    order: &Order,
    c: &BigInt,
    b: &OrderElement,
    i: u64,
) -> Result<AffinePermutation> {
    let quotient = QuotientRing::new(order, c)?;
    let m = order.root_order();
    let rot = i % m;
    let inv_rot = (m - rot) % m;
    let b_red = quotient.red_element(b);
    let size = quotient.size();
    let n = quotient.degree();

    let mut image = vec![0u32; size];
    let mut seen = vec![false; size];
    let mut d = vec![0i64; n];
    let mut work = vec![0i64; n];
    let mut w = vec![0i64; n];
    for idx in 0..size {
        for k in 0..n {
            work[k] = d[k] - b_red[k];
        }
        quotient.apply_z_power_into(inv_rot, &work, &mut w);
        quotient.red_coords(&mut w);
        let target = quotient.index(&w);
        image[idx] = target as u32;
        if seen[target] {
            return Err(Error::InvariantViolation(
                "affine map is not injective on the representative box".into(),
            ));
        }
        seen[target] = true;
        quotient.advance(&mut d);
    }
    Ok(AffinePermutation { quotient, image, b_red, rot })
}
