use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

/// One graded piece: `ℚ^q ⊕ ℤ^z ⊕ torsion`, torsion normalized to a
/// divisibility chain of invariant factors > 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSummand {
    pub q_rank: usize,
    pub z_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl GroupSummand {
    pub fn zero() -> Self {
        Self { q_rank: 0, z_rank: 0, torsion: vec![] }
    }

    pub fn free(z_rank: usize) -> Self {
        Self { q_rank: 0, z_rank, torsion: vec![] }
    }

    pub fn rational(q_rank: usize) -> Self {
        Self { q_rank, z_rank: 0, torsion: vec![] }
    }

    pub fn mixed(q_rank: usize, z_rank: usize) -> Self {
        Self { q_rank, z_rank, torsion: vec![] }
    }

    pub fn with_torsion(q_rank: usize, z_rank: usize, torsion: Vec<BigInt>) -> Self {
        Self { q_rank, z_rank, torsion: normalize_torsion(torsion) }
    }

    pub fn is_zero(&self) -> bool {
        self.q_rank == 0 && self.z_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Rank over ℚ (torsion invisible).
    pub fn rational_rank(&self) -> usize {
        self.q_rank + self.z_rank
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut torsion = self.torsion.clone();
        torsion.extend(other.torsion.iter().cloned());
        Self {
            q_rank: self.q_rank + other.q_rank,
            z_rank: self.z_rank + other.z_rank,
            torsion: normalize_torsion(torsion),
        }
    }

    pub fn display(&self) -> String {
        let mut parts = Vec::new();
        match self.q_rank {
            0 => {}
            1 => parts.push("Q".to_string()),
            q => parts.push(format!("Q^{q}")),
        }
        match self.z_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            z => parts.push(format!("Z^{z}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

/// ℤ/2-graded abelian group: degree 0 and degree 1 summands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedGroup {
    pub deg0: GroupSummand,
    pub deg1: GroupSummand,
}

impl GradedGroup {
    pub fn new(deg0: GroupSummand, deg1: GroupSummand) -> Self {
        Self { deg0, deg1 }
    }

    pub fn trivial() -> Self {
        Self { deg0: GroupSummand::zero(), deg1: GroupSummand::zero() }
    }

    pub fn is_torsion_free(&self) -> bool {
        self.deg0.is_torsion_free() && self.deg1.is_torsion_free()
    }

    pub fn display(&self) -> String {
        format!("({}, {})", self.deg0.display(), self.deg1.display())
    }
}

/// Canonical divisibility chain for a multiset of torsion orders: per prime
/// the exponents are aligned largest-first, then recombined so successive
/// factors divide. Factors ≤ 1 are dropped.
pub fn normalize_torsion(torsion: Vec<BigInt>) -> Vec<BigInt> {
    use std::collections::BTreeMap;
    let mut by_prime: BTreeMap<BigInt, Vec<u32>> = BTreeMap::new();
    for d in torsion {
        if d <= BigInt::one() {
            continue;
        }
        for (p, e) in factor(&d) {
            by_prime.entry(p).or_default().push(e);
        }
    }
    let mut slots: Vec<BigInt> = Vec::new();
    for (p, mut exps) in by_prime {
        exps.sort_unstable_by(|a, b| b.cmp(a));
        for (i, e) in exps.into_iter().enumerate() {
            if i == slots.len() {
                slots.push(BigInt::one());
            }
            slots[i] *= p.pow(e);
        }
    }
    // slots[0] is the largest invariant factor; present ascending
    slots.reverse();
    slots
}

fn factor(d: &BigInt) -> Vec<(BigInt, u32)> {
    let mut out = Vec::new();
    let mut rest = d.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let mut e = 0u32;
        while rest.mod_floor(&p) == BigInt::ZERO {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p.clone(), e));
        }
        p += 1;
    }
    if rest > BigInt::one() {
        out.push((rest, 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn torsion_normalization() {
        // Z/2 ⊕ Z/6 ⊕ Z/15 = Z/(2·3·5) ⊕ Z/(2·3) ⊕ Z/5-aligned…
        // prime 2: [1,1]; 3: [1,1]; 5: [1]: slots = [2·3·5, 2·3] -> [6, 30]
        assert_eq!(
            normalize_torsion(vec![b(2), b(6), b(15)]),
            vec![b(6), b(30)]
        );
        assert_eq!(normalize_torsion(vec![b(1), b(1)]), Vec::<BigInt>::new());
        assert_eq!(normalize_torsion(vec![b(4), b(2)]), vec![b(2), b(4)]);
    }

    #[test]
    fn display_forms() {
        let s = GroupSummand::with_torsion(1, 4, vec![b(3)]);
        assert_eq!(s.display(), "Q + Z^4 + Z/3");
        assert_eq!(GroupSummand::zero().display(), "0");
    }
}
