//! Cross-checks of order arithmetic against independent routes: power-basis
//! polynomial multiplication, adjugate-based rational division, and the
//! multiplicativity of admissibility.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ringkt_core::builtin;
use ringkt_core::field::{load_field, FieldSpec, Order, OrderElement};
use ringkt_core::linalg::IntMatrix;

/// Multiply two elements through the power basis: lift to polynomials in a
/// root of f, multiply mod f, convert back. Independent of the structure
/// constants the order caches.
fn mul_via_power_basis(spec: &FieldSpec, a: &OrderElement, b: &OrderElement) -> OrderElement {
    let n = spec.degree;
    let basis = spec.basis_rational().unwrap();
    let f: Vec<BigRational> = spec
        .poly
        .iter()
        .map(|&c| BigRational::from_integer(BigInt::from(c)))
        .collect();
    let to_power = |x: &OrderElement| -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in x.coords.iter().enumerate() {
            for (j, w) in basis[i].iter().enumerate() {
                out[j] += w * BigRational::from_integer(c.clone());
            }
        }
        out
    };
    let pa = to_power(a);
    let pb = to_power(b);
    // multiply then reduce mod f
    let mut prod = vec![BigRational::zero(); 2 * n];
    for (i, x) in pa.iter().enumerate() {
        for (j, y) in pb.iter().enumerate() {
            let t = x * y;
            prod[i + j] += t;
        }
    }
    for top in (n..2 * n).rev() {
        if prod[top].is_zero() {
            continue;
        }
        let lead = prod[top].clone();
        for (k, c) in f.iter().enumerate().take(n) {
            let sub = c * &lead;
            prod[top - n + k] -= sub;
        }
        prod[top] = BigRational::zero();
    }
    // back to the omega basis: solve transpose(basis)·y = prod
    let bt: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| basis[j][i].clone()).collect())
        .collect();
    let y = qsolve(&bt, &prod[..n]);
    OrderElement {
        coords: y
            .iter()
            .map(|c| {
                assert!(c.is_integer(), "product must stay integral");
                c.to_integer()
            })
            .collect(),
    }
}

fn qsolve(m: &[Vec<BigRational>], v: &[BigRational]) -> Vec<BigRational> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .zip(v)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&i| !a[i][col].is_zero()).expect("nonsingular");
        a.swap(col, piv);
        let p = a[col][col].clone();
        for j in col..=n {
            a[col][j] = &a[col][j] / &p;
        }
        for i in 0..n {
            if i == col || a[i][col].is_zero() {
                continue;
            }
            let f = a[i][col].clone();
            for j in col..=n {
                let s = &a[col][j] * &f;
                a[i][j] -= s;
            }
        }
    }
    a.iter().map(|row| row[n].clone()).collect()
}

/// Adjugate-based divisibility: x ∈ aR iff adj(M_a)·x ≡ 0 mod det(M_a).
/// A different route from the engine's Smith-form lattice membership.
fn divides_via_adjugate(order: &Order, x: &OrderElement, a: &OrderElement) -> bool {
    let m = order.mult_matrix(a);
    let n = order.degree();
    let det = m.det().unwrap();
    assert!(!det.is_zero());
    // adjugate via cofactors
    let minor = |m: &IntMatrix, r: usize, c: usize| -> BigInt {
        let sub = IntMatrix::from_fn(n - 1, n - 1, |i, j| {
            let ii = if i < r { i } else { i + 1 };
            let jj = if j < c { j } else { j + 1 };
            m[(ii, jj)].clone()
        });
        sub.det().unwrap()
    };
    let adj = IntMatrix::from_fn(n, n, |i, j| {
        let sign = if (i + j) % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        sign * minor(&m, j, i)
    });
    let w = adj.mul_vec(&x.coords).unwrap();
    w.iter().all(|v| (v % &det).is_zero())
}

#[test]
fn structure_constants_match_power_basis() {
    for spec in builtin::all() {
        let order = load_field(&spec).unwrap();
        let n = order.degree();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..25 {
            let a = OrderElement {
                coords: (0..n).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect(),
            };
            let b = OrderElement {
                coords: (0..n).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect(),
            };
            assert_eq!(
                order.mul(&a, &b),
                mul_via_power_basis(&spec, &a, &b),
                "{}",
                spec.name
            );
        }
    }
}

#[test]
fn ideal_membership_matches_adjugate_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for spec in [builtin::gaussian(), builtin::eisenstein(), builtin::sqrt2(), builtin::cbrt2()] {
        let order = load_field(&spec).unwrap();
        let n = order.degree();
        let mut checked = 0;
        while checked < 100 {
            let a = OrderElement {
                coords: (0..n).map(|_| BigInt::from(rng.gen_range(-4i64..=4))).collect(),
            };
            if a.is_zero() {
                continue;
            }
            // keep |R/aR| modest so the oracle stays cheap
            if order.norm(&a).abs() > BigInt::from(10_000) {
                continue;
            }
            let x = OrderElement {
                coords: (0..n).map(|_| BigInt::from(rng.gen_range(-30i64..=30))).collect(),
            };
            let engine = order.ideal_membership(&x, &a).unwrap();
            let oracle = divides_via_adjugate(&order, &x, &a);
            assert_eq!(engine, oracle, "{}: x={x:?} a={a:?}", spec.name);
            checked += 1;
        }
    }
}

#[test]
fn admissibility_is_multiplicative() {
    for spec in builtin::all() {
        let order = load_field(&spec).unwrap();
        let mut admissible = Vec::new();
        for c in 2i64..200 {
            if order.is_admissible(&BigInt::from(c)).unwrap() {
                admissible.push(c);
            }
            if admissible.len() > 6 {
                break;
            }
        }
        for &c in &admissible {
            for &cp in &admissible {
                assert!(
                    order.is_admissible(&BigInt::from(c * cp)).unwrap(),
                    "{}: {c}·{cp}",
                    spec.name
                );
            }
        }
    }
}

#[test]
fn quotient_counts_and_examples() {
    let order = load_field(&builtin::gaussian()).unwrap();
    let q = order.quotient(&BigInt::from(4)).unwrap();
    assert_eq!(q.size(), 16);
    let order = load_field(&builtin::rationals()).unwrap();
    let q = order.quotient(&BigInt::from(2)).unwrap();
    assert_eq!(q.size(), 2);
}
