use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::FieldSpec;
use crate::linalg::{lattice_membership, IntMatrix, Lattice};
use crate::poly::{self, divisors};
use crate::{Error, Result};

/// Element of the ring of integers, as integer coordinates in the fixed
/// integral basis `ω_1, …, ω_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderElement {
    pub coords: Vec<BigInt>,
}

impl OrderElement {
    pub fn zero(n: usize) -> Self {
        Self { coords: vec![BigInt::zero(); n] }
    }

    pub fn one(n: usize) -> Self {
        let mut coords = vec![BigInt::zero(); n];
        coords[0] = BigInt::one();
        Self { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Self { coords: coords.iter().map(|&c| BigInt::from(c)).collect() }
    }

    pub fn from_integer(n: usize, k: &BigInt) -> Self {
        let mut coords = vec![BigInt::zero(); n];
        coords[0] = k.clone();
        Self { coords }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self { coords: self.coords.iter().map(|a| -a).collect() }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self { coords: self.coords.iter().map(|a| a * k).collect() }
    }
}

impl std::fmt::Debug for OrderElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The ring of integers with its multiplication table, the action of the
/// chosen root of unity, and the data needed by every later stage.
pub struct Order {
    name: String,
    n: usize,
    m: u64,
    poly: Vec<BigInt>,
    /// ω_i · ω_j = Σ_k struct_consts[i][j][k] ω_k, flattened `i·n² + j·n + k`.
    struct_consts: Vec<BigInt>,
    /// Multiplication-by-ω_i matrices: column j holds ω_i·ω_j.
    basis_mul: Vec<IntMatrix>,
    zeta: OrderElement,
    /// Z^0 … Z^{m−1}; Z is the multiplication-by-ζ matrix.
    z_powers: Vec<IntMatrix>,
    basis_denominator: BigInt,
}

impl Order {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn root_order(&self) -> u64 {
        self.m
    }

    pub fn poly(&self) -> &[BigInt] {
        &self.poly
    }

    pub fn zeta(&self) -> &OrderElement {
        &self.zeta
    }

    /// Multiplication-by-ζ matrix.
    pub fn z_matrix(&self) -> &IntMatrix {
        &self.z_powers[1 % self.z_powers.len()]
    }

    /// Z^j with j taken mod m.
    pub fn z_power(&self, j: u64) -> &IntMatrix {
        &self.z_powers[(j % self.m) as usize]
    }

    /// Least common multiple of the integral-basis denominators.
    pub fn basis_denominator(&self) -> &BigInt {
        &self.basis_denominator
    }

    pub fn struct_const(&self, i: usize, j: usize, k: usize) -> &BigInt {
        &self.struct_consts[(i * self.n + j) * self.n + k]
    }

    pub fn mul(&self, a: &OrderElement, b: &OrderElement) -> OrderElement {
        let n = self.n;
        let mut out = vec![BigInt::zero(); n];
        for i in 0..n {
            if a.coords[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if b.coords[j].is_zero() {
                    continue;
                }
                let p = &a.coords[i] * &b.coords[j];
                for k in 0..n {
                    let c = self.struct_const(i, j, k);
                    if !c.is_zero() {
                        out[k] += &p * c;
                    }
                }
            }
        }
        OrderElement { coords: out }
    }

    /// ζ^j · x.
    pub fn zeta_pow_mul(&self, j: u64, x: &OrderElement) -> OrderElement {
        OrderElement {
            coords: self.z_power(j).mul_vec(&x.coords).expect("dimension"),
        }
    }

    /// Matrix of multiplication by `a` (columns are `a·ω_j`).
    pub fn mult_matrix(&self, a: &OrderElement) -> IntMatrix {
        let mut acc = IntMatrix::zero(self.n, self.n);
        for i in 0..self.n {
            if a.coords[i].is_zero() {
                continue;
            }
            acc = acc.add(&self.basis_mul[i].scale(&a.coords[i])).expect("shape");
        }
        acc
    }

    /// Field norm of `a` (determinant of its multiplication matrix).
    pub fn norm(&self, a: &OrderElement) -> BigInt {
        self.mult_matrix(a).det().expect("square")
    }

    /// 1 − ζ^j as an element.
    pub fn one_minus_zeta_pow(&self, j: u64) -> OrderElement {
        OrderElement::one(self.n).sub(&self.zeta_pow_mul(j, &OrderElement::one(self.n)))
    }

    /// True iff x ∈ aR; errors when a = 0.
    pub fn ideal_membership(&self, x: &OrderElement, a: &OrderElement) -> Result<bool> {
        if a.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let lattice = Lattice::new(self.mult_matrix(a))?;
        Ok(lattice_membership(&x.coords, &lattice)?.is_some())
    }

    /// Solve a·y = x exactly in R, when possible.
    pub fn ideal_divide(&self, x: &OrderElement, a: &OrderElement) -> Result<Option<OrderElement>> {
        if a.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let lattice = Lattice::new(self.mult_matrix(a))?;
        Ok(lattice_membership(&x.coords, &lattice)?.map(|coords| OrderElement { coords }))
    }

    /// D = ∏_{i | m, 1 ≤ i < m} (1 − ζ^i); rational integers divisible by D
    /// in R form the admissible moduli.
    pub fn admissibility_modulus(&self) -> OrderElement {
        let mut d = OrderElement::one(self.n);
        for i in divisors(self.m) {
            if i == self.m {
                continue;
            }
            d = self.mul(&d, &self.one_minus_zeta_pow(i));
        }
        d
    }

    /// True iff `c > 1` and D divides c in R.
    pub fn is_admissible(&self, c: &BigInt) -> Result<bool> {
        if c <= &BigInt::one() {
            return Ok(false);
        }
        let d = self.admissibility_modulus();
        self.ideal_membership(&OrderElement::from_integer(self.n, c), &d)
    }

    /// Minimal representative system for R/cR as the coordinate box.
    pub fn quotient(&self, c: &BigInt) -> Result<super::QuotientRing> {
        super::QuotientRing::new(self, c)
    }
}

/// Validate a field spec and build the order.
pub fn load_field(spec: &FieldSpec) -> Result<Order> {
    let n = spec.degree;
    if n == 0 || spec.poly.len() != n + 1 {
        return Err(Error::SpecParse(format!(
            "degree {} needs {} polynomial coefficients, got {}",
            n,
            n + 1,
            spec.poly.len()
        )));
    }
    let poly = spec.poly_bigint();
    if poly[n] != BigInt::one() {
        return Err(Error::NotMonic);
    }
    let deriv: Vec<BigInt> = (1..=n).map(|i| &poly[i] * BigInt::from(i)).collect();
    if poly::resultant(&poly, &deriv)?.is_zero() {
        return Err(Error::NotSquarefree);
    }

    let basis = spec.basis_rational()?;
    if basis.len() != n || basis.iter().any(|r| r.len() != n) {
        return Err(Error::SpecParse("integral_basis must be n x n".into()));
    }
    // ω_1 = 1
    let one_ok = basis[0][0].is_one() && basis[0][1..].iter().all(|c| c.is_zero());
    if !one_ok {
        return Err(Error::BasisFirstNotOne);
    }

    let zeta_power = spec.zeta_rational()?;
    if zeta_power.len() != n {
        return Err(Error::SpecParse("zeta must have n coordinates".into()));
    }

    // transpose of the basis matrix: columns are ω_i in the power basis
    let bt: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| basis[j][i].clone()).collect())
        .collect();

    let to_omega = |v: &[BigRational]| -> Result<Vec<BigRational>> {
        qsolve(&bt, v).ok_or_else(|| Error::SpecParse("integral basis is singular".into()))
    };

    // structure constants via power-basis polynomial multiplication mod f
    let fq: Vec<BigRational> = poly
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    let mut struct_consts = vec![BigInt::zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            let prod = poly::p_mul(&basis[i], &basis[j]);
            let (_, red) = poly::p_divrem(&prod, &fq);
            let mut red = red;
            red.resize(n, BigRational::zero());
            let coords = to_omega(&red)?;
            for (k, c) in coords.iter().enumerate() {
                if !c.is_integer() {
                    return Err(Error::BasisNotClosed(format!(
                        "ω_{}·ω_{} has non-integral coordinate {}",
                        i + 1,
                        j + 1,
                        c
                    )));
                }
                struct_consts[(i * n + j) * n + k] = c.to_integer();
            }
        }
    }

    // associativity spot check on all basis triples (commutativity is
    // automatic from the construction, associativity guards the base change)
    let basis_mul: Vec<IntMatrix> = (0..n)
        .map(|i| {
            IntMatrix::from_fn(n, n, |k, j| struct_consts[(i * n + j) * n + k].clone())
        })
        .collect();
    {
        let tmp = Order {
            name: String::new(),
            n,
            m: 1,
            poly: poly.clone(),
            struct_consts: struct_consts.clone(),
            basis_mul: basis_mul.clone(),
            zeta: OrderElement::one(n),
            z_powers: vec![IntMatrix::identity(n)],
            basis_denominator: BigInt::one(),
        };
        let e = |i: usize| {
            let mut v = OrderElement::zero(n);
            v.coords[i] = BigInt::one();
            v
        };
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = tmp.mul(&tmp.mul(&e(i), &e(j)), &e(k));
                    let right = tmp.mul(&e(i), &tmp.mul(&e(j), &e(k)));
                    if left != right {
                        return Err(Error::BasisNotClosed(format!(
                            "associativity fails on (ω_{}, ω_{}, ω_{})",
                            i + 1,
                            j + 1,
                            k + 1
                        )));
                    }
                }
            }
        }
    }

    // ζ in ω-coordinates; must be integral
    let zeta_coords = to_omega(&zeta_power)?;
    if zeta_coords.iter().any(|c| !c.is_integer()) {
        return Err(Error::ZetaNotIntegral);
    }
    let zeta = OrderElement {
        coords: zeta_coords.iter().map(|c| c.to_integer()).collect(),
    };

    let m = spec.m;
    if m == 0 {
        return Err(Error::SpecParse("m must be positive".into()));
    }

    let mut stub = Order {
        name: spec.name.clone(),
        n,
        m,
        poly,
        struct_consts,
        basis_mul,
        zeta: zeta.clone(),
        z_powers: vec![IntMatrix::identity(n)],
        basis_denominator: basis_lcm_denominator(&basis),
    };
    let z = stub.mult_matrix(&zeta);

    // exact order m, with the powers cached along the way
    let mut z_powers = vec![IntMatrix::identity(n)];
    let mut acc = IntMatrix::identity(n);
    for k in 1..=m {
        acc = acc.mul(&z)?;
        if k < m {
            if acc.is_identity() {
                return Err(Error::ZetaOrderWrong);
            }
            z_powers.push(acc.clone());
        } else if !acc.is_identity() {
            return Err(Error::ZetaOrderWrong);
        }
    }

    // μ must act freely on R ∖ {0}: 1 − Z^i invertible over ℚ
    for (k, zp) in z_powers.iter().enumerate().skip(1) {
        let diff = IntMatrix::identity(n).sub(zp)?;
        if diff.det()?.is_zero() {
            return Err(Error::ZetaActionNotFree { power: k as u64 });
        }
    }

    stub.z_powers = z_powers;
    Ok(stub)
}

fn basis_lcm_denominator(basis: &[Vec<BigRational>]) -> BigInt {
    use num_integer::Integer;
    let mut l = BigInt::one();
    for row in basis {
        for c in row {
            l = l.lcm(&c.denom().abs());
        }
    }
    l
}

/// Solve M·y = v over ℚ by Gaussian elimination; None when singular.
pub(crate) fn qsolve(m: &[Vec<BigRational>], v: &[BigRational]) -> Option<Vec<BigRational>> {
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
        let piv = (col..n).find(|&i| !a[i][col].is_zero())?;
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
    Some(a.iter().map(|row| row[n].clone()).collect())
}
