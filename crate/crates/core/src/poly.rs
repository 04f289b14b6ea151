//! Small exact polynomial toolkit: rational polynomial arithmetic, the
//! Sylvester resultant, Sturm real-root counting, cyclotomic polynomials and
//! the handful of elementary number-theoretic helpers the field layer needs.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::linalg::IntMatrix;
use crate::{Error, Result};

/// Coefficients ascending: `p[i]` multiplies `x^i`. The zero polynomial is
/// the empty vector.
pub type QPoly = Vec<BigRational>;

pub fn qpoly_from_ints(c: &[BigInt]) -> QPoly {
    c.iter()
        .map(|x| BigRational::from_integer(x.clone()))
        .collect()
}

pub fn trim(p: &mut QPoly) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

pub fn degree(p: &QPoly) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

pub fn p_add(a: &QPoly, b: &QPoly) -> QPoly {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(&mut out);
    out
}

pub fn p_neg(a: &QPoly) -> QPoly {
    a.iter().map(|c| -c).collect()
}

pub fn p_mul(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Euclidean division `a = q·b + r` with `deg r < deg b`.
pub fn p_divrem(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = a.clone();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    if r.len() <= db {
        return (vec![], r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let c = r.last().unwrap() / &lb;
        q[dr - db] = c.clone();
        for i in 0..=db {
            let v = &b[i] * &c;
            r[dr - db + i] -= v;
        }
        trim(&mut r);
        if dr == db {
            break;
        }
    }
    trim(&mut q);
    (q, r)
}

pub fn p_derivative(a: &QPoly) -> QPoly {
    if a.len() <= 1 {
        return vec![];
    }
    let mut out = Vec::with_capacity(a.len() - 1);
    for (i, c) in a.iter().enumerate().skip(1) {
        out.push(c * BigRational::from_integer(BigInt::from(i)));
    }
    trim(&mut out);
    out
}

pub fn p_eval(a: &QPoly, x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in a.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Resultant of two integer polynomials via the Sylvester matrix
/// determinant (exact, Bareiss underneath).
pub fn resultant(a: &[BigInt], b: &[BigInt]) -> Result<BigInt> {
    let da = a.len().checked_sub(1).filter(|_| !a.is_empty());
    let db = b.len().checked_sub(1).filter(|_| !b.is_empty());
    let (Some(da), Some(db)) = (da, db) else {
        return Ok(BigInt::zero());
    };
    let n = da + db;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut m = IntMatrix::zero(n, n);
    for i in 0..db {
        for (k, c) in a.iter().rev().enumerate() {
            m[(i, i + k)] = c.clone();
        }
    }
    for i in 0..da {
        for (k, c) in b.iter().rev().enumerate() {
            m[(db + i, i + k)] = c.clone();
        }
    }
    m.det()
}

fn sign_changes(vals: &[BigRational]) -> usize {
    let signs: Vec<i8> = vals
        .iter()
        .filter(|v| !v.is_zero())
        .map(|v| if v.is_positive() { 1 } else { -1 })
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of a squarefree polynomial, by Sturm's
/// theorem evaluated at ±∞ through leading-coefficient signs.
pub fn count_real_roots(f: &[BigInt]) -> usize {
    let mut p0 = qpoly_from_ints(f);
    trim(&mut p0);
    if p0.len() <= 1 {
        return 0;
    }
    let mut chain = vec![p0.clone(), p_derivative(&p0)];
    loop {
        let last = &chain[chain.len() - 1];
        if last.is_empty() {
            chain.pop();
            break;
        }
        let prev = &chain[chain.len() - 2];
        let (_, r) = p_divrem(prev, last);
        if r.is_empty() {
            break;
        }
        chain.push(p_neg(&r));
    }
    // sign of p(x) as x -> ±∞ is the leading coefficient sign (times parity)
    let at_inf: Vec<BigRational> = chain
        .iter()
        .map(|p| p.last().cloned().unwrap_or_else(BigRational::zero))
        .collect();
    let at_neg_inf: Vec<BigRational> = chain
        .iter()
        .map(|p| {
            let lc = p.last().cloned().unwrap_or_else(BigRational::zero);
            if (p.len().max(1) - 1) % 2 == 0 {
                lc
            } else {
                -lc
            }
        })
        .collect();
    sign_changes(&at_neg_inf) - sign_changes(&at_inf)
}

/// Euler totient.
pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += 1;
    }
    true
}

/// Ascending list of divisors of `n`.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    out.sort_unstable();
    out
}

/// n-th cyclotomic polynomial with integer coefficients, ascending, via
/// exact division of `x^n - 1` by the lower cyclotomics.
pub fn cyclotomic(n: u64) -> Vec<BigInt> {
    assert!(n >= 1);
    let mut xn1 = vec![BigRational::zero(); n as usize + 1];
    xn1[0] = -BigRational::one();
    xn1[n as usize] = BigRational::one();
    let mut acc = xn1;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = qpoly_from_ints(&cyclotomic(d));
        let (q, r) = p_divrem(&acc, &phi_d);
        assert!(r.is_empty(), "cyclotomic division must be exact");
        acc = q;
    }
    acc.iter()
        .map(|c| {
            assert!(c.is_integer(), "cyclotomic coefficients are integers");
            c.to_integer()
        })
        .collect()
}

/// Characteristic polynomial coefficients `e_k` (signed elementary symmetric
/// functions of the eigenvalues): returns `e_0 = 1, e_1, …, e_n` with
/// `det(xI − A) = Σ (−1)^k e_k x^{n−k}`. Computed from power sums
/// (traces of `A^k`) by Newton's identities; divisions are exact.
pub fn elementary_symmetric_from_traces(a: &IntMatrix) -> Result<Vec<BigInt>> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch("charpoly of non-square".into()));
    }
    let n = a.rows();
    let mut powers = Vec::with_capacity(n + 1);
    powers.push(IntMatrix::identity(n));
    for k in 1..=n {
        powers.push(powers[k - 1].mul(a)?);
    }
    let trace = |m: &IntMatrix| -> BigInt { (0..n).map(|i| m[(i, i)].clone()).sum() };
    let p: Vec<BigInt> = (0..=n).map(|k| trace(&powers[k])).collect();
    let mut e = vec![BigInt::one()];
    for k in 1..=n {
        // k·e_k = Σ_{l=1..k} (−1)^{l−1} e_{k−l} p_l
        let mut acc = BigInt::zero();
        for l in 1..=k {
            let term = &e[k - l] * &p[l];
            if l % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        let kk = BigInt::from(k);
        let q = &acc / &kk;
        if &q * &kk != acc {
            return Err(Error::InvariantViolation(
                "Newton identity division not exact".into(),
            ));
        }
        e.push(q);
    }
    Ok(e)
}
