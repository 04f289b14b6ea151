//! Property suite for the exact linear algebra layer.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use ringkt_core::linalg::{
    cokernel, hnf, lattice_membership, saturate, snf, IntMatrix, Lattice,
};

fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec(-20i64..=20, rows * cols).prop_map(move |v| {
        IntMatrix::new(rows, cols, v.into_iter().map(BigInt::from).collect()).unwrap()
    })
}

fn any_shape_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=5, 1usize..=5)
        .prop_flat_map(|(r, c)| small_matrix(r, c))
}

/// Random unimodular matrix as a product of elementary operations.
fn unimodular(n: usize) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec((0usize..n, 0usize..n, -3i64..=3), 0..8).prop_map(move |ops| {
        let mut u = IntMatrix::identity(n);
        for (i, j, k) in ops {
            if i != j {
                u.add_row_mul_pub(i, j, &BigInt::from(k));
            }
        }
        u
    })
}

// test-only access to an elementary row operation
trait RowOp {
    fn add_row_mul_pub(&mut self, a: usize, b: usize, k: &BigInt);
}

impl RowOp for IntMatrix {
    fn add_row_mul_pub(&mut self, a: usize, b: usize, k: &BigInt) {
        let row: Vec<BigInt> = (0..self.cols()).map(|j| self[(b, j)].clone()).collect();
        for (j, v) in row.iter().enumerate() {
            let add = v * k;
            self[(a, j)] += add;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn snf_exact_relation(m in any_shape_matrix()) {
        let s = snf(&m);
        prop_assert_eq!(s.u.mul(&m).unwrap().mul(&s.v).unwrap(), s.d.clone());
        prop_assert_eq!(s.u.det().unwrap().abs(), BigInt::one());
        prop_assert_eq!(s.v.det().unwrap().abs(), BigInt::one());
        prop_assert!(s.u.mul(&s.u_inv).unwrap().is_identity());
        prop_assert!(s.v.mul(&s.v_inv).unwrap().is_identity());
        let diag = s.diagonal();
        for w in diag.windows(2) {
            prop_assert!(!w[0].is_negative());
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!(w[1].mod_floor(&w[0]).is_zero());
            }
        }
    }

    #[test]
    fn snf_invariant_under_unimodular(m in small_matrix(3, 3), u in unimodular(3), v in unimodular(3)) {
        let d1 = snf(&m).diagonal();
        let conj = u.mul(&m).unwrap().mul(&v).unwrap();
        let d2 = snf(&conj).diagonal();
        prop_assert_eq!(d1, d2);
    }

    #[test]
    fn hnf_exact_relation(m in any_shape_matrix()) {
        let (h, u) = hnf(&m);
        prop_assert_eq!(m.mul(&u).unwrap(), h);
        prop_assert_eq!(u.det().unwrap().abs(), BigInt::one());
    }

    #[test]
    fn saturation_idempotent_and_index(cols in proptest::collection::vec(-9i64..=9, 6)) {
        // lattice spanned by two columns in Z^3, keep only independent ones
        let m = IntMatrix::new(3, 2, cols.into_iter().map(BigInt::from).collect()).unwrap();
        if m.rank() != 2 { return Ok(()); }
        let l = Lattice::new(m).unwrap();
        let s = saturate(&l);
        // idempotent
        prop_assert!(saturate(&s).same_lattice(&s));
        // contains l: membership of every basis vector
        for j in 0..l.basis().cols() {
            let col = l.basis().col(j);
            prop_assert!(lattice_membership(&col, &s).unwrap().is_some());
        }
        // index equals the product of the nonzero invariant factors of the
        // inclusion matrix (basis of l in coordinates of s)
        let mut incl = IntMatrix::zero(s.rank(), l.rank());
        for j in 0..l.rank() {
            let col = l.basis().col(j);
            let coords = lattice_membership(&col, &s).unwrap().unwrap();
            for i in 0..s.rank() {
                incl[(i, j)] = coords[i].clone();
            }
        }
        let product: BigInt = snf(&incl)
            .diagonal()
            .iter()
            .filter(|d| !d.is_zero())
            .product();
        // saturation index is finite and positive
        prop_assert!(product.is_positive());
        // every saturated vector times the index lands in l
        for i in 0..s.rank() {
            let scaled: Vec<BigInt> = s.basis().col(i).iter().map(|x| x * &product).collect();
            prop_assert!(lattice_membership(&scaled, &l).unwrap().is_some());
        }
    }

    #[test]
    fn membership_reconstructs(entries in proptest::collection::vec(-9i64..=9, 9), x in proptest::collection::vec(-30i64..=30, 3)) {
        let m = IntMatrix::new(3, 3, entries.into_iter().map(BigInt::from).collect()).unwrap();
        if m.rank() != 3 { return Ok(()); }
        let l = Lattice::new(m).unwrap();
        let xv: Vec<BigInt> = x.into_iter().map(BigInt::from).collect();
        if let Some(coeffs) = lattice_membership(&xv, &l).unwrap() {
            prop_assert_eq!(l.basis().mul_vec(&coeffs).unwrap(), xv);
        }
    }

    #[test]
    fn cokernel_rank_nullity(m in any_shape_matrix()) {
        let g = cokernel(&m);
        prop_assert_eq!(g.free_rank(), m.rows() - m.rank());
    }
}

#[test]
fn snf_diag_from_gcd_of_minors() {
    // d1 = gcd of entries, d1·d2 = gcd of 2x2 minors (independent oracle)
    let m = IntMatrix::from_rows_i64(&[&[2, 4], &[6, 8]]);
    let d = snf(&m).diagonal();
    let entries_gcd = BigInt::from(2);
    let minors_gcd = m.det().unwrap().abs(); // only one 2x2 minor
    assert_eq!(d[0], entries_gcd);
    assert_eq!(&d[0] * &d[1], minors_gcd);
}
