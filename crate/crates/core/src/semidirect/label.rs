use num_integer::Integer;

use super::{IdealQuotient, SemidirectElement};
use crate::field::{Order, OrderElement};
use crate::poly::divisors;
use crate::{Error, Result};

/// Conjugacy class of a finite cyclic subgroup `⟨(b, ζ^i)⟩` of `R ⋊ μ`.
///
/// The rotation index is normalized to the divisor `gcd(i, m)` of m, and
/// `rep` is the lexicographically least element of the μ-orbit of the class
/// of b in `R/(1−ζ^i)R`. Two labels are equal iff the subgroups are
/// conjugate. The class of μ itself is `(i = 1, rep = 0)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct FiniteSubgroupLabel {
    pub i: u64,
    pub rep: OrderElement,
}

impl FiniteSubgroupLabel {
    pub fn is_mu(&self) -> bool {
        self.i == 1 && self.rep.is_zero()
    }

    pub fn subgroup_order(&self, order: &Order) -> u64 {
        order.root_order() / self.i
    }

    /// The canonical generator `(rep, ζ^i)` of a representative subgroup.
    pub fn generator(&self, order: &Order) -> SemidirectElement {
        SemidirectElement::new(order, self.rep.clone(), self.i)
    }
}

pub(crate) fn modinv(a: u64, n: u64) -> u64 {
    // extended euclid; gcd(a, n) = 1 expected
    let (mut r0, mut r1) = (n as i64, (a % n) as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert_eq!(r0, 1, "modular inverse requires coprimality");
    t0.rem_euclid(n as i64) as u64
}

/// Σ_{k=0}^{terms−1} ζ^{rot·k}; equals (1−ζ^{rot·terms})/(1−ζ^{rot}).
pub(crate) fn geometric_sum(order: &Order, rot: u64, terms: u64) -> OrderElement {
    let mut acc = OrderElement::zero(order.degree());
    let one = OrderElement::one(order.degree());
    for k in 0..terms {
        acc = acc.add(&order.zeta_pow_mul(rot * k % order.root_order(), &one));
    }
    acc
}

/// Canonical conjugacy label of `⟨(b, ζ^i)⟩`; requires ζ^i ≠ 1.
pub fn conjugacy_label(order: &Order, b: &OrderElement, i: u64) -> Result<FiniteSubgroupLabel> {
    let m = order.root_order();
    let i = i % m;
    if i == 0 {
        return Err(Error::InfiniteOrderGenerator);
    }
    let g = i.gcd(&m);
    let o = m / g;
    // replace the generator by the power with rotation exactly ζ^g
    let u = modinv((i / g) % o, o);
    let gen = SemidirectElement::new(order, b.clone(), i).power(order, u);
    debug_assert_eq!(gen.i, g);
    Ok(canonical_at_divisor(order, &gen.b, g))
}

/// Orbit canonicalization at a rotation index that already divides m.
pub(crate) fn canonical_at_divisor(order: &Order, b: &OrderElement, i: u64) -> FiniteSubgroupLabel {
    let q = IdealQuotient::new(order, i);
    let start = q.reduce(b);
    let mut best = start.clone();
    let mut cur = start.clone();
    loop {
        cur = q.reduce(&order.zeta_pow_mul(1, &cur));
        if cur == start {
            break;
        }
        if cur < best {
            best = cur.clone();
        }
    }
    FiniteSubgroupLabel { i, rep: best }
}

/// Is the labeled subgroup maximal among finite subgroups?
///
/// `⟨(b, ζ^i)⟩` sits inside some `⟨(b', ζ^{i'})⟩` for a proper divisor
/// i' | i exactly when b is divisible by the geometric sum
/// (1−ζ^i)/(1−ζ^{i'}); divisibility is conjugation-invariant.
pub fn is_maximal(order: &Order, label: &FiniteSubgroupLabel) -> Result<bool> {
    for ip in divisors(label.i) {
        if ip == label.i {
            continue;
        }
        let sigma = geometric_sum(order, ip, label.i / ip);
        if order.ideal_membership(&label.rep, &sigma)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Complete, duplicate-free, deterministically ordered list 𝓜 of conjugacy
/// classes of maximal finite subgroups. Always contains the class of μ.
pub fn enumerate_maximal_classes(order: &Order) -> Result<Vec<FiniteSubgroupLabel>> {
    let m = order.root_order();
    let mut set = std::collections::BTreeSet::new();
    for i in divisors(m) {
        if i == m {
            continue;
        }
        let q = IdealQuotient::new(order, i);
        for rep in q.representatives() {
            let label = canonical_at_divisor(order, &rep, i);
            if is_maximal(order, &label)? {
                set.insert(label);
            }
        }
    }
    Ok(set.into_iter().collect())
}

/// Character indices of `ℤ/o` restricting to the index-`chi_sub` character
/// of the subgroup of index j (so of order o/j). There are exactly j of
/// them; summed over all chi_sub they partition the characters of `ℤ/o`.
pub fn characters_restricting_to(o: u64, j: u64, chi_sub: u64) -> Vec<u64> {
    assert!(j >= 1 && o % j == 0, "index must divide the group order");
    let sub_order = o / j;
    let target = chi_sub % sub_order;
    (0..o).filter(|t| t % sub_order == target).collect()
}
