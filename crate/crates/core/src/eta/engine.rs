use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{affine_permutation, inf_ranks, K0Label, K0Vector};
use crate::field::{Order, OrderElement};
use crate::linalg::IntMatrix;
use crate::semidirect::label::{canonical_at_divisor, geometric_sum, modinv};
use crate::semidirect::{
    characters_restricting_to, enumerate_maximal_classes, FiniteSubgroupLabel, SemidirectElement,
};
use crate::poly::divisors;
use crate::{Error, Result};

/// The η_c structure map as an exact block matrix: the finite block over
/// the `{[1]} ∪ Fin ∪ Mu` basis and the rational infinite diagonal carried
/// as a multiset of powers of c.
#[derive(Clone, Debug)]
pub struct EtaMatrix {
    pub c: BigInt,
    pub basis: Vec<K0Label>,
    pub finite_block: IntMatrix,
    /// Exponents of c on the infinite diagonal beyond the unit: d_k copies
    /// of n−k for each even k ≥ 2, in decreasing order. c⁰ occurs at most
    /// once, and only when n is even.
    pub inf_exponents: Vec<u64>,
}

impl EtaMatrix {
    pub fn inf_diagonal_strings(&self) -> Vec<String> {
        self.inf_exponents.iter().map(|e| format!("c^{e}")).collect()
    }

    /// Finite-block product, for the directed-system compatibility checks.
    pub fn compose_finite(&self, other: &EtaMatrix) -> Result<IntMatrix> {
        if self.basis != other.basis {
            return Err(Error::ShapeMismatch("eta bases differ".into()));
        }
        self.finite_block.mul(&other.finite_block)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "c": self.c.to_string(),
            "basis": self.basis.iter().map(|l| l.display()).collect::<Vec<_>>(),
            "finite_block": self.finite_block.to_string_rows(),
            "inf_diagonal": self.inf_diagonal_strings(),
        })
    }
}

/// Census check for one finite-class permutation.
#[derive(Clone, Debug)]
pub struct FinCensusReport {
    pub expected_length: u64,
    pub all_full: bool,
    pub cycle_count: u64,
    /// η-image coefficient on [1] (the cycle count) when all cycles are full.
    pub unit_coefficient: BigInt,
}

struct CycleData {
    rot: u64,
    gen_order: u64,
    full_cycles: u64,
    partial: Vec<(u64, OrderElement)>,
}

/// Engine context: an order together with its maximal-class list 𝓜 and the
/// induced deterministic K₀ basis.
pub struct EtaContext<'a> {
    order: &'a Order,
    classes: Vec<FiniteSubgroupLabel>,
}

impl<'a> EtaContext<'a> {
    pub fn new(order: &'a Order) -> Result<Self> {
        let classes = enumerate_maximal_classes(order)?;
        Ok(Self { order, classes })
    }

    pub fn order(&self) -> &Order {
        self.order
    }

    pub fn classes(&self) -> &[FiniteSubgroupLabel] {
        &self.classes
    }

    /// Finite-block basis: [1], then the nontrivial characters of each
    /// maximal class other than (μ), then the nontrivial characters of μ.
    pub fn basis(&self) -> Vec<K0Label> {
        let m = self.order.root_order();
        let mut out = vec![K0Label::Unit];
        for label in &self.classes {
            if label.is_mu() {
                continue;
            }
            let sub_order = m / label.i;
            for chi in 1..sub_order {
                out.push(K0Label::Fin { label: label.clone(), chi });
            }
        }
        for chi in 1..m {
            out.push(K0Label::Mu { chi });
        }
        out
    }

    /// Rank of the finite block plus the rational infinite multiplicities:
    /// the full K₀ rank of C*(R ⋊ μ).
    pub fn k0_rank(&self) -> Result<usize> {
        let inf: u64 = inf_ranks(self.order)?.iter().map(|(_, d)| d).sum();
        // the unit is counted in the inf part (k = 0)
        Ok(self.basis().len() - 1 + inf as usize)
    }

    /// Express the class `[p_{χ_s}(u^b s_{ζ^r})]` in the K₀ basis.
    ///
    /// A trivial character (s ≡ 0) is resolved through the identity
    /// `[p_{χ_0}(g)] = [1] − Σ_{χ≠0} [p_χ(g)]`. Otherwise the generator is
    /// powered to a divisor rotation, pushed into a maximal subgroup along
    /// geometric-sum divisibility (expanding the character each time), and
    /// finally conjugacy-canonicalized.
    pub fn normalize_class(&self, b: &OrderElement, r: u64, s: u64) -> Result<K0Vector> {
        let m = self.order.root_order();
        let r = r % m;
        if r == 0 {
            return Err(Error::InfiniteOrderGenerator);
        }
        let g = r.gcd(&m);
        let o = m / g;
        let s = s % o;
        if s == 0 {
            let mut v = K0Vector::single(K0Label::Unit, 1);
            for sp in 1..o {
                let t = self.normalize_class(b, r, sp)?;
                v.sub(&t);
            }
            return Ok(v);
        }
        // power the generator so its rotation is exactly ζ^g, reindexing
        // the character by the inverse power
        let u = modinv((r / g) % o, o);
        let gen = SemidirectElement::new(self.order, b.clone(), r).power(self.order, u);
        debug_assert_eq!(gen.i, g);
        let b0 = gen.b;
        let s0 = (s * u) % o;

        // embed into a larger finite subgroup when possible: b0 divisible by
        // (1−ζ^g)/(1−ζ^{g'}) means ⟨(b0, ζ^g)⟩ ⊆ ⟨(b', ζ^{g'})⟩
        for gp in divisors(g) {
            if gp == g {
                continue;
            }
            let sigma = geometric_sum(self.order, gp, g / gp);
            if let Some(bp) = self.order.ideal_divide(&b0, &sigma)? {
                let big_o = m / gp;
                let mut out = K0Vector::new();
                for t in characters_restricting_to(big_o, g / gp, s0) {
                    out.add(&self.normalize_class(&bp, gp, t)?);
                }
                return Ok(out);
            }
        }

        let label = canonical_at_divisor(self.order, &b0, g);
        if label.is_mu() {
            return Ok(K0Vector::single(K0Label::Mu { chi: s0 }, 1));
        }
        if !self.classes.contains(&label) {
            return Err(Error::InvariantViolation(format!(
                "non-maximal class {label:?} escaped the supergroup search"
            )));
        }
        Ok(K0Vector::single(K0Label::Fin { label, chi: s0 }, 1))
    }

    fn cycle_data(&self, c: &BigInt, b: &OrderElement, rot: u64) -> Result<CycleData> {
        let m = self.order.root_order();
        let rot = rot % m;
        if rot == 0 {
            return Err(Error::InfiniteOrderGenerator);
        }
        let gen_order = m / m.gcd(&rot);
        let perm = affine_permutation(self.order, c, b, rot)?;
        let q = &perm.quotient;
        let n = q.degree();
        let ci = q.modulus();
        let b_full: Vec<i64> = b
            .coords
            .iter()
            .map(|x| {
                x.to_i64()
                    .filter(|v| v.abs() < (1 << 31))
                    .ok_or(Error::TranslationTooLarge)
            })
            .collect::<Result<_>>()?;

        let mut full_cycles = 0u64;
        let mut partial = Vec::new();
        let mut seen = vec![false; perm.size()];
        let mut d = vec![0i64; n];
        let mut dn = vec![0i64; n];
        let mut zdn = vec![0i64; n];
        let mut num = vec![0i64; n];
        let mut contrib = vec![0i64; n];
        let mut btilde = vec![0i128; n];
        for start in 0..perm.size() {
            if seen[start] {
                continue;
            }
            // walk the cycle, accumulating b̃ = Σ_k ζ^{rot·k} e(d_k) where
            // e(d) = (−d + b + ζ^rot·π(d)) / c, an exact division
            btilde.iter_mut().for_each(|v| *v = 0);
            let mut cur = start;
            let mut k = 0u64;
            loop {
                seen[cur] = true;
                q.rep_into(cur, &mut d);
                let next = perm.apply(cur);
                q.rep_into(next, &mut dn);
                q.apply_z_power_into(rot, &dn, &mut zdn);
                for t in 0..n {
                    let v = -d[t] + b_full[t] + zdn[t];
                    if v % ci != 0 {
                        return Err(Error::InvariantViolation(
                            "edge translation not divisible by the modulus".into(),
                        ));
                    }
                    num[t] = v / ci;
                }
                q.apply_z_power_into(rot * k % m, &num, &mut contrib);
                for t in 0..n {
                    btilde[t] += contrib[t] as i128;
                }
                cur = next;
                k += 1;
                if cur == start {
                    break;
                }
            }
            let j = k;
            if j % gen_order == 0 {
                // full cycle: the accumulated translation must vanish
                if btilde.iter().any(|&v| v != 0) {
                    return Err(Error::InvariantViolation(
                        "full cycle with nonzero accumulated translation".into(),
                    ));
                }
                full_cycles += 1;
            } else {
                let coords = btilde.iter().map(|&v| BigInt::from(v)).collect();
                partial.push((j, OrderElement { coords }));
            }
        }
        Ok(CycleData { rot, gen_order, full_cycles, partial })
    }

    /// η_c-image of `[p_χ(u^b s_{ζ^i})]` by cycle decomposition: each full
    /// cycle contributes [1]; a cycle of length j < ord(ζ^i) contributes the
    /// normalized class of its diagonal entry with the restricted character.
    pub fn cycle_classes(
        &self,
        c: &BigInt,
        b: &OrderElement,
        i: u64,
        chi: u64,
    ) -> Result<K0Vector> {
        if !self.order.is_admissible(c)? {
            return Err(Error::NotAdmissible { c: c.clone() });
        }
        let data = self.cycle_data(c, b, i)?;
        self.assemble_column(&data, chi)
    }

    fn assemble_column(&self, data: &CycleData, chi: u64) -> Result<K0Vector> {
        let m = self.order.root_order();
        let o = data.gen_order;
        let chi = chi % o;
        let mut out = K0Vector::single(K0Label::Unit, data.full_cycles);
        for (j, btilde) in &data.partial {
            let rp = (data.rot * j) % m;
            let sp = chi % (o / j);
            out.add(&self.normalize_class(btilde, rp, sp)?);
        }
        Ok(out)
    }

    /// Assemble the full η_c matrix. Shape invariants are verified before
    /// returning: the unit column is exactly c^n·[1], finite-class columns
    /// are multiples of [1], and the μ-block diagonal is the identity.
    pub fn eta_matrix(&self, c: &BigInt) -> Result<EtaMatrix> {
        if !self.order.is_admissible(c)? {
            return Err(Error::NotAdmissible { c: c.clone() });
        }
        let m = self.order.root_order();
        let n = self.order.degree();
        let basis = self.basis();
        let index: std::collections::BTreeMap<&K0Label, usize> =
            basis.iter().enumerate().map(|(i, l)| (l, i)).collect();
        let nb = basis.len();
        let mut mat = IntMatrix::zero(nb, nb);
        let cn = c.pow(n as u32);

        let set_column = |mat: &mut IntMatrix, col: usize, v: &K0Vector| -> Result<()> {
            for (label, coeff) in v.iter() {
                let row = *index.get(label).ok_or_else(|| {
                    Error::InvariantViolation(format!(
                        "label {} outside the finite basis",
                        label.display()
                    ))
                })?;
                mat[(row, col)] = coeff.clone();
            }
            Ok(())
        };

        // unit column
        mat[(0, 0)] = cn.clone();

        // finite-class columns: all cycles are full, so each column is the
        // cycle count times [1]
        for label in &self.classes {
            if label.is_mu() {
                continue;
            }
            let data = self.cycle_data(c, &label.rep, label.i)?;
            if !data.partial.is_empty() {
                return Err(Error::InvariantViolation(
                    "admissible finite-class permutation has a short cycle".into(),
                ));
            }
            let expect = (&cn * BigInt::from(label.i)) / BigInt::from(m);
            if BigInt::from(data.full_cycles) != expect {
                return Err(Error::InvariantViolation(
                    "finite-class cycle count differs from c^n·i/m".into(),
                ));
            }
            let col_vec = K0Vector::single(K0Label::Unit, data.full_cycles);
            let sub_order = m / label.i;
            for chi in 1..sub_order {
                let col = index[&K0Label::Fin { label: label.clone(), chi }];
                set_column(&mut mat, col, &col_vec)?;
            }
        }

        // μ columns share one permutation; only the character varies
        let mu_data = self.cycle_data(c, &OrderElement::zero(n), 1)?;
        for chi in 1..m {
            let v = self.assemble_column(&mu_data, chi)?;
            // the μ-part must be exactly the input class
            let mu_part = v.mu_part();
            let expect = K0Vector::single(K0Label::Mu { chi }, 1);
            if mu_part != expect {
                return Err(Error::InvariantViolation(format!(
                    "μ column {chi} has μ-part {mu_part:?}"
                )));
            }
            let col = index[&K0Label::Mu { chi }];
            set_column(&mut mat, col, &v)?;
        }

        // rational infinite diagonal: d_k copies of c^{n−k} for even k ≥ 2
        let mut inf_exponents = Vec::new();
        for (k, d) in inf_ranks(self.order)? {
            if k == 0 {
                continue;
            }
            for _ in 0..d {
                inf_exponents.push(n as u64 - k);
            }
        }

        Ok(EtaMatrix { c: c.clone(), basis, finite_block: mat, inf_exponents })
    }

    /// Walk the affine permutation of one finite-class generator and verify
    /// the cycle-length lemma: for admissible c every cycle has length
    /// exactly ord(ζ^i), so the η-image is (c^n·i/m)·[1].
    pub fn fin_cycle_census(
        &self,
        c: &BigInt,
        label: &FiniteSubgroupLabel,
    ) -> Result<FinCensusReport> {
        if !self.order.is_admissible(c)? {
            return Err(Error::NotAdmissible { c: c.clone() });
        }
        let m = self.order.root_order();
        let expected = m / m.gcd(&label.i);
        let perm = affine_permutation(self.order, c, &label.rep, label.i)?;
        let mut seen = vec![false; perm.size()];
        let mut all_full = true;
        let mut count = 0u64;
        for start in 0..perm.size() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut cur = start;
            loop {
                seen[cur] = true;
                cur = perm.apply(cur);
                len += 1;
                if cur == start {
                    break;
                }
            }
            if len != expected {
                all_full = false;
            }
            count += 1;
        }
        Ok(FinCensusReport {
            expected_length: expected,
            all_full,
            cycle_count: count,
            unit_coefficient: BigInt::from(count),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;
    use crate::eta::delta;
    use crate::field::load_field;
    use num_traits::One;

    fn gaussian_ctx(order: &Order) -> EtaContext<'_> {
        EtaContext::new(order).unwrap()
    }

    #[test]
    fn basis_layout_gaussian() {
        let o = load_field(&builtin::gaussian()).unwrap();
        let ctx = gaussian_ctx(&o);
        let basis = ctx.basis();
        // [1]; 3 characters of the order-4 class; 1 of the order-2 class;
        // 3 μ characters
        assert_eq!(basis.len(), 8);
        assert_eq!(basis[0], K0Label::Unit);
        assert!(matches!(basis[1], K0Label::Fin { .. }));
        assert!(matches!(basis[7], K0Label::Mu { chi: 3 }));
        // K0 rank = 8 - 1 + (d_0 + d_2) = 9
        assert_eq!(ctx.k0_rank().unwrap(), 9);
    }

    #[test]
    fn gaussian_eta_c4_worked_matrix() {
        let o = load_field(&builtin::gaussian()).unwrap();
        let ctx = gaussian_ctx(&o);
        let eta = ctx.eta_matrix(&BigInt::from(4)).unwrap();
        let b = &eta.basis;
        assert_eq!(b.len(), 8);
        // label shortcuts
        let l1 = ctx.classes()[1].clone(); // order-4 class, b = 1
        let l2 = ctx.classes()[2].clone(); // order-2 class, b = i
        let col = |l: &K0Label| b.iter().position(|x| x == l).unwrap();
        let m = &eta.finite_block;
        let at = |r: &K0Label, c: &K0Label| m[(col(r), col(c))].clone();

        use K0Label::*;
        // unit column: c^n = 16
        assert_eq!(at(&Unit, &Unit), BigInt::from(16));
        // finite columns: multiples of [1] only: 16·i/m
        for chi in 1..4 {
            assert_eq!(at(&Unit, &Fin { label: l1.clone(), chi }), BigInt::from(4));
        }
        assert_eq!(at(&Unit, &Fin { label: l2.clone(), chi: 1 }), BigInt::from(8));
        // μ columns, frozen from the hand enumeration of the 16-point box:
        // η(μ_1) = μ_1 + fin(l1,1) + fin(l2,1) + 3·[1]
        assert_eq!(at(&Mu { chi: 1 }, &Mu { chi: 1 }), BigInt::one());
        assert_eq!(at(&Fin { label: l1.clone(), chi: 1 }, &Mu { chi: 1 }), BigInt::one());
        assert_eq!(at(&Fin { label: l2.clone(), chi: 1 }, &Mu { chi: 1 }), BigInt::one());
        assert_eq!(at(&Unit, &Mu { chi: 1 }), BigInt::from(3));
        // η(μ_2) = μ_2 + fin(l1,2) − fin(l2,1) + 4·[1]
        assert_eq!(at(&Mu { chi: 2 }, &Mu { chi: 2 }), BigInt::one());
        assert_eq!(at(&Fin { label: l1.clone(), chi: 2 }, &Mu { chi: 2 }), BigInt::one());
        assert_eq!(at(&Fin { label: l2.clone(), chi: 1 }, &Mu { chi: 2 }), BigInt::from(-1));
        assert_eq!(at(&Unit, &Mu { chi: 2 }), BigInt::from(4));
        // η(μ_3) = μ_3 + fin(l1,3) + fin(l2,1) + 3·[1]
        assert_eq!(at(&Fin { label: l1.clone(), chi: 3 }, &Mu { chi: 3 }), BigInt::one());
        assert_eq!(at(&Fin { label: l2.clone(), chi: 1 }, &Mu { chi: 3 }), BigInt::one());
        assert_eq!(at(&Unit, &Mu { chi: 3 }), BigInt::from(3));
        // triangular with diagonal (16, 0, 0, 0, 0, 1, 1, 1)
        assert!(m.is_upper_triangular());
        // infinite diagonal: d_2 = 1 copy of c^0 (n even: δ = 1)
        assert_eq!(eta.inf_exponents, vec![0]);
        assert_eq!(delta(&o), 1);
    }

    #[test]
    fn eta_rejects_inadmissible() {
        let o = load_field(&builtin::gaussian()).unwrap();
        let ctx = gaussian_ctx(&o);
        assert!(matches!(
            ctx.eta_matrix(&BigInt::from(6)),
            Err(Error::NotAdmissible { .. })
        ));
    }

    #[test]
    fn mu_fixed_sign_character_recovers_input() {
        // input (0, ζ^{m/2}) with the sign character: the μ-part of the
        // output equals the expansion of the input class exactly
        let o = load_field(&builtin::gaussian()).unwrap();
        let ctx = gaussian_ctx(&o);
        let out = ctx
            .cycle_classes(&BigInt::from(4), &OrderElement::zero(2), 2, 1)
            .unwrap();
        let mut expect = K0Vector::new();
        // characters of Z/4 restricting to the sign of Z/2: chi ∈ {1, 3}
        expect.add_label(K0Label::Mu { chi: 1 }, BigInt::one());
        expect.add_label(K0Label::Mu { chi: 3 }, BigInt::one());
        assert_eq!(out.mu_part(), expect);
    }

    #[test]
    fn eta_multiplicativity_gaussian() {
        let o = load_field(&builtin::gaussian()).unwrap();
        let ctx = gaussian_ctx(&o);
        let e4 = ctx.eta_matrix(&BigInt::from(4)).unwrap();
        let e8 = ctx.eta_matrix(&BigInt::from(8)).unwrap();
        let e32 = ctx.eta_matrix(&BigInt::from(32)).unwrap();
        let prod = e4.compose_finite(&e8).unwrap();
        assert_eq!(prod, e32.finite_block);
        let prod = e8.compose_finite(&e4).unwrap();
        assert_eq!(prod, e32.finite_block);
    }

    #[test]
    fn eta_multiplicativity_rationals() {
        let o = load_field(&builtin::rationals()).unwrap();
        let ctx = gaussian_ctx(&o);
        let a = ctx.eta_matrix(&BigInt::from(2)).unwrap();
        let b = ctx.eta_matrix(&BigInt::from(6)).unwrap();
        let ab = ctx.eta_matrix(&BigInt::from(12)).unwrap();
        assert_eq!(a.compose_finite(&b).unwrap(), ab.finite_block);
    }

    #[test]
    fn census_gaussian() {
        let o = load_field(&builtin::gaussian()).unwrap();
        let ctx = gaussian_ctx(&o);
        for label in ctx.classes().iter().filter(|l| !l.is_mu()).cloned().collect::<Vec<_>>() {
            let r = ctx.fin_cycle_census(&BigInt::from(4), &label).unwrap();
            assert!(r.all_full);
            let expect = BigInt::from(16u64 * label.i / 4);
            assert_eq!(r.unit_coefficient, expect);
        }
    }
}
