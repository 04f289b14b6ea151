use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Hermite normal form, column convention: returns `(h, u)` with
/// `m · u = h`, `u` unimodular.
///
/// `h` is lower trapezoidal: scanning rows top to bottom, each nonzero
/// column acquires a positive pivot, pivot rows strictly increase with the
/// column index, all entries to the right of a pivot in its row vanish and
/// all entries to the left lie in `[0, pivot)`. Zero columns are pushed to
/// the end. This single orientation is used everywhere in the crate
/// (saturation and lattice comparison both consume it).
pub fn hnf(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.cols());
    let (rows, cols) = (m.rows(), m.cols());
    let mut cc = 0; // next pivot column
    for r in 0..rows {
        if cc == cols {
            break;
        }
        // gcd-reduce row r across columns cc..cols by column operations
        loop {
            // pick column with smallest nonzero |entry| in row r
            let mut best: Option<(usize, BigInt)> = None;
            for j in cc..cols {
                let v = h[(r, j)].abs();
                if v.is_zero() {
                    continue;
                }
                match &best {
                    Some((_, bv)) if *bv <= v => {}
                    _ => best = Some((j, v)),
                }
            }
            let Some((jmin, _)) = best else { break };
            h.swap_cols(cc, jmin);
            u.swap_cols(cc, jmin);
            let mut again = false;
            let piv = h[(r, cc)].clone();
            for j in cc + 1..cols {
                if h[(r, j)].is_zero() {
                    continue;
                }
                let q = -h[(r, j)].div_floor(&piv);
                h.add_col_mul(j, cc, &q);
                u.add_col_mul(j, cc, &q);
                if !h[(r, j)].is_zero() {
                    again = true;
                }
            }
            if !again {
                break;
            }
        }
        if h[(r, cc)].is_zero() {
            continue; // row r has no pivot; try next row in same column
        }
        if h[(r, cc)].is_negative() {
            h.negate_col(cc);
            u.negate_col(cc);
        }
        // reduce entries left of the pivot into [0, pivot)
        let piv = h[(r, cc)].clone();
        for j in 0..cc {
            let q = -h[(r, j)].div_floor(&piv);
            h.add_col_mul(j, cc, &q);
            u.add_col_mul(j, cc, &q);
        }
        cc += 1;
    }
    (h, u)
}

/// Smith normal form with tracked transforms and their inverses:
/// `u · m · v = d` with `u, v` unimodular, `d` diagonal, `d_i ≥ 0` and
/// `d_i | d_{i+1}`.
pub struct SmithDecomposition {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SmithDecomposition {
    /// Diagonal entries, padded with zeros up to `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

pub fn snf(m: &IntMatrix) -> SmithDecomposition {
    let mut d = m.clone();
    let (rows, cols) = (d.rows(), d.cols());
    let mut u = IntMatrix::identity(rows);
    let mut u_inv = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let mut v_inv = IntMatrix::identity(cols);

    // elementary operations, mirrored on the inverses
    macro_rules! row_swap {
        ($a:expr, $b:expr) => {{
            d.swap_rows($a, $b);
            u.swap_rows($a, $b);
            u_inv.swap_cols($a, $b);
        }};
    }
    macro_rules! col_swap {
        ($a:expr, $b:expr) => {{
            d.swap_cols($a, $b);
            v.swap_cols($a, $b);
            v_inv.swap_rows($a, $b);
        }};
    }
    macro_rules! row_add {
        ($a:expr, $b:expr, $k:expr) => {{
            let k = $k;
            d.add_row_mul($a, $b, &k);
            u.add_row_mul($a, $b, &k);
            u_inv.add_col_mul($b, $a, &(-k));
        }};
    }
    macro_rules! col_add {
        ($a:expr, $b:expr, $k:expr) => {{
            let k = $k;
            d.add_col_mul($a, $b, &k);
            v.add_col_mul($a, $b, &k);
            v_inv.add_row_mul($b, $a, &(-k));
        }};
    }

    let n = rows.min(cols);
    for k in 0..n {
        'pivot: loop {
            // smallest nonzero |entry| in the trailing submatrix
            let mut best: Option<(usize, usize, BigInt)> = None;
            for i in k..rows {
                for j in k..cols {
                    let val = d[(i, j)].abs();
                    if val.is_zero() {
                        continue;
                    }
                    match &best {
                        Some((_, _, bv)) if *bv <= val => {}
                        _ => best = Some((i, j, val)),
                    }
                }
            }
            let Some((pi, pj, _)) = best else { break 'pivot };
            row_swap!(k, pi);
            col_swap!(k, pj);

            // clear column k below the pivot
            let mut dirty = false;
            for i in k + 1..rows {
                if d[(i, k)].is_zero() {
                    continue;
                }
                let q = -d[(i, k)].div_floor(&d[(k, k)].clone());
                row_add!(i, k, q);
                if !d[(i, k)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue 'pivot;
            }
            // clear row k right of the pivot
            for j in k + 1..cols {
                if d[(k, j)].is_zero() {
                    continue;
                }
                let q = -d[(k, j)].div_floor(&d[(k, k)].clone());
                col_add!(j, k, q);
                if !d[(k, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue 'pivot;
            }
            // pivot must divide the remaining submatrix
            let piv = d[(k, k)].clone();
            for i in k + 1..rows {
                for j in k + 1..cols {
                    if !d[(i, j)].mod_floor(&piv).is_zero() {
                        row_add!(k, i, BigInt::from(1));
                        continue 'pivot;
                    }
                }
            }
            break 'pivot;
        }
        if d[(k, k)].is_negative() {
            d.negate_row(k);
            u.negate_row(k);
            u_inv.negate_col(k);
        }
    }

    SmithDecomposition { d, u, v, u_inv, v_inv }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn check_snf(m: &IntMatrix) -> SmithDecomposition {
        let s = snf(m);
        // exact relation
        let lhs = s.u.mul(m).unwrap().mul(&s.v).unwrap();
        assert_eq!(lhs, s.d, "u*m*v == d");
        // unimodularity via tracked inverses
        assert!(s.u.mul(&s.u_inv).unwrap().is_identity());
        assert!(s.v.mul(&s.v_inv).unwrap().is_identity());
        assert_eq!(s.u.det().unwrap().abs(), BigInt::one());
        assert_eq!(s.v.det().unwrap().abs(), BigInt::one());
        // divisibility chain, nonnegative, zeros trailing
        let diag = s.diagonal();
        for w in diag.windows(2) {
            assert!(!w[0].is_negative());
            if w[0].is_zero() {
                assert!(w[1].is_zero(), "zeros must trail");
            } else {
                assert!(w[1].mod_floor(&w[0]).is_zero(), "divisibility chain");
            }
        }
        s
    }

    #[test]
    fn snf_identity() {
        let m = IntMatrix::identity(3);
        let s = check_snf(&m);
        assert!(s.d.is_identity());
    }

    #[test]
    fn snf_examples() {
        // gcd of entries is 2, gcd of 2x2 minors is 8 => diag(2, 4)
        let m = IntMatrix::from_rows_i64(&[&[2, 4], &[6, 8]]);
        let s = check_snf(&m);
        assert_eq!(s.diagonal(), vec![BigInt::from(2), BigInt::from(4)]);

        let m = IntMatrix::from_rows_i64(&[&[6, 0], &[0, 10]]);
        let s = check_snf(&m);
        assert_eq!(s.diagonal(), vec![BigInt::from(2), BigInt::from(30)]);
    }

    #[test]
    fn snf_zero_and_rectangular() {
        let m = IntMatrix::from_rows_i64(&[&[0]]);
        let s = check_snf(&m);
        assert_eq!(s.diagonal(), vec![BigInt::zero()]);

        let m = IntMatrix::from_rows_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]);
        check_snf(&m);
        let m = IntMatrix::from_rows_i64(&[&[3, 0, -1], &[2, 8, 5]]);
        check_snf(&m);
    }

    #[test]
    fn hnf_examples() {
        let m = IntMatrix::from_rows_i64(&[&[2, 0], &[0, 3]]);
        let (h, u) = hnf(&m);
        assert_eq!(h, m);
        assert!(u.is_identity());

        let m = IntMatrix::from_rows_i64(&[&[0]]);
        let (h, u) = hnf(&m);
        assert!(h.is_zero());
        assert!(u.is_identity());

        let m = IntMatrix::from_rows_i64(&[&[4, 6], &[2, 4]]);
        let (h, u) = hnf(&m);
        assert_eq!(m.mul(&u).unwrap(), h);
        assert_eq!(u.det().unwrap().abs(), BigInt::one());
        assert_eq!(h.det().unwrap().abs(), BigInt::from(4));
    }
}
