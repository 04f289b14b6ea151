use num_integer::Integer;

use crate::field::{Order, OrderElement};

/// Element `(b, ζ^i)` of `R ⋊ μ`, with the rotation exponent stored mod m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemidirectElement {
    pub b: OrderElement,
    pub i: u64,
}

impl SemidirectElement {
    pub fn new(order: &Order, b: OrderElement, i: u64) -> Self {
        Self { b, i: i % order.root_order() }
    }

    pub fn identity(order: &Order) -> Self {
        Self { b: OrderElement::zero(order.degree()), i: 0 }
    }

    /// (b, ζ^i)(d, ζ^j) = (b + ζ^i d, ζ^{i+j}).
    pub fn multiply(&self, order: &Order, other: &Self) -> Self {
        Self {
            b: self.b.add(&order.zeta_pow_mul(self.i, &other.b)),
            i: (self.i + other.i) % order.root_order(),
        }
    }

    /// (b, ζ^i)^k = ((1 + ζ^i + … + ζ^{i(k−1)}) b, ζ^{ik}).
    pub fn power(&self, order: &Order, k: u64) -> Self {
        let mut acc = Self::identity(order);
        for _ in 0..k {
            acc = acc.multiply(order, self);
        }
        acc
    }

    pub fn inverse(&self, order: &Order) -> Self {
        let m = order.root_order();
        let inv_rot = (m - self.i % m) % m;
        Self {
            b: order.zeta_pow_mul(inv_rot, &self.b).neg(),
            i: inv_rot,
        }
    }

    /// x · self · x⁻¹; the translation becomes ζ^k b + (1 − ζ^i) d.
    pub fn conjugate_by(&self, order: &Order, x: &Self) -> Self {
        x.multiply(order, self).multiply(order, &x.inverse(order))
    }

    /// Order of the element; `None` for the infinite-order pure translations.
    /// For ζ^i ≠ 1 the geometric sum over a full period vanishes, so the
    /// order equals the order of ζ^i regardless of b.
    pub fn order(&self, order: &Order) -> Option<u64> {
        let m = order.root_order();
        if self.i % m == 0 {
            return if self.b.is_zero() { Some(1) } else { None };
        }
        Some(m / m.gcd(&self.i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;
    use crate::field::load_field;

    #[test]
    fn order_examples() {
        let o = load_field(&builtin::gaussian()).unwrap();
        let g = SemidirectElement::new(&o, OrderElement::from_i64(&[1, 0]), 1);
        assert_eq!(g.order(&o), Some(4));
        // (1+i+i²+i³)·1 = 0: the fourth power is the identity
        assert_eq!(g.power(&o, 4), SemidirectElement::identity(&o));
        assert_ne!(g.power(&o, 2), SemidirectElement::identity(&o));

        let t = SemidirectElement::new(&o, OrderElement::from_i64(&[3, 1]), 0);
        assert_eq!(t.order(&o), None);

        let zeta = SemidirectElement::new(&o, OrderElement::zero(2), 1);
        assert_eq!(zeta.order(&o), Some(4));
    }

    #[test]
    fn group_axioms_spot() {
        let o = load_field(&builtin::eisenstein()).unwrap();
        let g = SemidirectElement::new(&o, OrderElement::from_i64(&[2, -1]), 1);
        let h = SemidirectElement::new(&o, OrderElement::from_i64(&[0, 3]), 4);
        let k = SemidirectElement::new(&o, OrderElement::from_i64(&[-1, 1]), 3);
        // associativity
        let lhs = g.multiply(&o, &h).multiply(&o, &k);
        let rhs = g.multiply(&o, &h.multiply(&o, &k));
        assert_eq!(lhs, rhs);
        // inverses
        assert_eq!(
            g.multiply(&o, &g.inverse(&o)),
            SemidirectElement::identity(&o)
        );
        assert_eq!(
            g.inverse(&o).multiply(&o, &g),
            SemidirectElement::identity(&o)
        );
    }

    #[test]
    fn exhaustive_orders_over_lifts() {
        // every (b, ζ^i) with ζ^i ≠ 1 has order exactly ord(ζ^i), checked
        // over all lifts from R/(1−ζ^i)R
        for spec in [builtin::gaussian(), builtin::eisenstein(), builtin::sqrt2()] {
            let o = load_field(&spec).unwrap();
            let m = o.root_order();
            for i in 1..m {
                let q = crate::semidirect::IdealQuotient::new(&o, i);
                for rep in q.representatives() {
                    let g = SemidirectElement::new(&o, rep.clone(), i);
                    let expected = m / m.gcd(&i);
                    assert_eq!(g.order(&o), Some(expected));
                    assert_eq!(
                        g.power(&o, expected),
                        SemidirectElement::identity(&o),
                        "geometric sum must vanish at the full period"
                    );
                    for k in 1..expected {
                        assert_ne!(g.power(&o, k), SemidirectElement::identity(&o));
                    }
                }
            }
        }
    }
}
