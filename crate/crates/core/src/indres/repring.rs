use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::{CharacterTable, CycNum, FiniteGroup};
use crate::{Error, Result};

/// Virtual representation: integer multiplicities over the irreducibles of
/// a fixed character table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepRingElement {
    pub multiplicities: Vec<BigInt>,
}

impl RepRingElement {
    pub fn irreducible(table: &CharacterTable, i: usize) -> Self {
        let mut m = vec![BigInt::zero(); table.irreducible_count()];
        m[i] = BigInt::from(1);
        Self { multiplicities: m }
    }

    pub fn trivial(table: &CharacterTable) -> Self {
        // the trivial character is degree 1 with all values 1; locate it
        let f = table.field();
        let one = f.from_integer(1);
        let pos = (0..table.irreducible_count())
            .find(|&i| {
                (0..table.class_reps().len()).all(|c| table.value(i, c) == &one)
            })
            .expect("trivial character present");
        Self::irreducible(table, pos)
    }

    /// Regular representation: each irreducible with multiplicity its degree.
    pub fn regular(table: &CharacterTable) -> Self {
        Self {
            multiplicities: table.degrees().iter().map(|&d| BigInt::from(d)).collect(),
        }
    }

    /// Class-function values at the table's class representatives.
    pub fn values(&self, table: &CharacterTable) -> Vec<CycNum> {
        let f = table.field();
        let k = table.class_reps().len();
        let mut out = Vec::with_capacity(k);
        for c in 0..k {
            let mut acc = f.zero();
            for (i, m) in self.multiplicities.iter().enumerate() {
                if m.is_zero() {
                    continue;
                }
                let scaled = f.scale(table.value(i, c), &BigRational::from_integer(m.clone()));
                acc = f.add(&acc, &scaled);
            }
            out.push(acc);
        }
        out
    }
}

/// A subgroup of a parent group, reindexed as a standalone group with its
/// own character table (values embedded in the parent's cyclotomic field).
pub struct SubgroupContext {
    pub elements: Vec<usize>,
    pub group: FiniteGroup,
    pub table: CharacterTable,
    pos: BTreeMap<usize, usize>,
}

impl SubgroupContext {
    pub fn new(parent: &FiniteGroup, elements: &[usize], conductor: u64) -> Result<Self> {
        let mut elems = elements.to_vec();
        elems.sort_unstable();
        elems.dedup();
        if !parent.is_subgroup(&elems) {
            return Err(Error::NotASubgroup);
        }
        let pos: BTreeMap<usize, usize> =
            elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let n = elems.len();
        let mut mul = vec![0usize; n * n];
        for (i, &a) in elems.iter().enumerate() {
            for (j, &b) in elems.iter().enumerate() {
                mul[i * n + j] = pos[&parent.mul(a, b)];
            }
        }
        let group = FiniteGroup::from_mul_table("sub", n, mul)?;
        let table = CharacterTable::with_conductor(&group, conductor)?;
        Ok(Self { elements: elems, group, table, pos })
    }

    pub fn local_index(&self, parent_elem: usize) -> Option<usize> {
        self.pos.get(&parent_elem).copied()
    }

    pub fn contains(&self, parent_elem: usize) -> bool {
        self.pos.contains_key(&parent_elem)
    }
}

/// Character restriction, decomposed into the subgroup's irreducibles.
pub fn restrict(
    parent: &FiniteGroup,
    parent_table: &CharacterTable,
    x: &RepRingElement,
    sub: &SubgroupContext,
) -> Result<RepRingElement> {
    let parent_values = x.values(parent_table);
    let mut sub_values = Vec::with_capacity(sub.table.class_reps().len());
    for &local_rep in sub.table.class_reps() {
        let parent_elem = sub.elements[local_rep];
        let pc = parent.class_of(parent_elem);
        sub_values.push(parent_values[pc].clone());
    }
    Ok(RepRingElement { multiplicities: sub.table.decompose(&sub_values)? })
}

/// Induction by the standard character formula, decomposed into the parent
/// group's irreducibles. Frobenius reciprocity against `restrict` holds.
pub fn induce(
    parent: &FiniteGroup,
    parent_table: &CharacterTable,
    sub: &SubgroupContext,
    x: &RepRingElement,
) -> Result<RepRingElement> {
    let f = parent_table.field();
    let sub_values = x.values(&sub.table);
    let h = BigRational::from_integer(BigInt::from(sub.elements.len()));
    let mut parent_values = Vec::with_capacity(parent_table.class_reps().len());
    for &xrep in parent_table.class_reps() {
        let mut acc = f.zero();
        for y in 0..parent.order() {
            let conj = parent.mul(parent.mul(parent.inv(y), xrep), y);
            if let Some(local) = sub.local_index(conj) {
                let lc = sub.group.class_of(local);
                acc = f.add(&acc, &sub_values[lc]);
            }
        }
        parent_values.push(f.scale(&acc, &h.recip()));
    }
    Ok(RepRingElement { multiplicities: parent_table.decompose(&parent_values)? })
}

// ---------------------------------------------------------------------
// Double coset formula. The check runs on raw value functions with integer
// cyclotomic coefficients (character values are algebraic integers, and
// the power basis of ζ_N is integral), so the exhaustive sweeps stay fast.
// ---------------------------------------------------------------------


/// Integer-coefficient value function on the classes of a subgroup.
fn integral_values(table: &CharacterTable, values: &[CycNum]) -> Result<Vec<Vec<i64>>> {
    let f = table.field();
    values
        .iter()
        .map(|v| {
            (0..f.dimension())
                .map(|c| {
                    let q = f.coefficient(v, c);
                    if !q.is_integer() {
                        return Err(Error::InvariantViolation(
                            "character value with non-integer coefficient".into(),
                        ));
                    }
                    q.to_integer()
                        .to_i64()
                        .ok_or_else(|| Error::InvariantViolation("coefficient overflow".into()))
                })
                .collect()
        })
        .collect()
}

fn vec_add(a: &mut [i64], b: &[i64]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
}

fn vec_div_exact(a: &mut [i64], d: i64) -> Result<()> {
    for x in a.iter_mut() {
        if *x % d != 0 {
            return Err(Error::InvariantViolation(
                "induced character value is not an algebraic integer".into(),
            ));
        }
        *x /= d;
    }
    Ok(())
}

/// Verify the double coset formula
/// `res_G^H ∘ ind_K^G = Σ_{HγK} ind ∘ c(γ) ∘ res` on every irreducible
/// character of K, comparing exact class-function values on H.
pub fn double_coset_check(g: &FiniteGroup, h: &[usize], k: &[usize]) -> Result<bool> {
    let n = g.exponent();
    let h_ctx = SubgroupContext::new(g, h, n)?;
    let k_ctx = SubgroupContext::new(g, k, n)?;
    double_coset_check_prepared(g, &h_ctx, &k_ctx)
}

/// Check every subgroup pair of a group, building each subgroup context
/// once. Returns `(|H|, |K|, ok)` per pair.
pub fn double_coset_check_all(g: &FiniteGroup) -> Result<Vec<(usize, usize, bool)>> {
    let n = g.exponent();
    let subs = g.subgroups();
    let ctxs: Vec<SubgroupContext> = subs
        .iter()
        .map(|s| SubgroupContext::new(g, s, n))
        .collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(ctxs.len() * ctxs.len());
    for hc in &ctxs {
        for kc in &ctxs {
            let ok = double_coset_check_prepared(g, hc, kc)?;
            out.push((hc.elements.len(), kc.elements.len(), ok));
        }
    }
    Ok(out)
}

fn double_coset_check_prepared(
    g: &FiniteGroup,
    h_ctx: &SubgroupContext,
    k_ctx: &SubgroupContext,
) -> Result<bool> {
    let dim = h_ctx.table.field().dimension();
    let h: &[usize] = &h_ctx.elements;
    let k: &[usize] = &k_ctx.elements;
    let h_set: std::collections::BTreeSet<usize> = h.iter().copied().collect();
    let k_set: std::collections::BTreeSet<usize> = k.iter().copied().collect();
    let gammas = g.double_cosets(h, k);

    // H-class representative elements (in parent indexing)
    let h_class_reps: Vec<usize> = h_ctx
        .table
        .class_reps()
        .iter()
        .map(|&lr| h_ctx.elements[lr])
        .collect();

    for irr in 0..k_ctx.table.irreducible_count() {
        // χ values per K-element (parent indexing), integer coefficients
        let class_vals = integral_values(
            &k_ctx.table,
            k_ctx.table.irreducible_values(irr),
        )?;
        let chi = |parent_elem: usize| -> &Vec<i64> {
            let local = k_ctx.local_index(parent_elem).expect("element of K");
            &class_vals[k_ctx.group.class_of(local)]
        };

        // LHS: ind_K^G then restrict to the H-class representatives
        let mut lhs: Vec<Vec<i64>> = Vec::with_capacity(h_class_reps.len());
        for &x in &h_class_reps {
            let mut acc = vec![0i64; dim];
            for y in 0..g.order() {
                let conj = g.mul(g.mul(g.inv(y), x), y);
                if k_set.contains(&conj) {
                    vec_add(&mut acc, chi(conj));
                }
            }
            vec_div_exact(&mut acc, k.len() as i64)?;
            lhs.push(acc);
        }

        // RHS: sum over double cosets
        let mut rhs: Vec<Vec<i64>> = vec![vec![0i64; dim]; h_class_reps.len()];
        for &gamma in &gammas {
            // L = K ∩ γ⁻¹Hγ, transported to γLγ⁻¹ ⊆ H
            let gi = g.inv(gamma);
            let l: Vec<usize> = k
                .iter()
                .copied()
                .filter(|&x| h_set.contains(&g.mul(g.mul(gamma, x), gi)))
                .collect();
            let lp: std::collections::BTreeSet<usize> =
                l.iter().map(|&x| g.mul(g.mul(gamma, x), gi)).collect();
            // value of the transported restriction at z ∈ γLγ⁻¹ is χ(γ⁻¹zγ)
            for (ci, &x) in h_class_reps.iter().enumerate() {
                let mut acc = vec![0i64; dim];
                for &y in h {
                    let conj = g.mul(g.mul(g.inv(y), x), y);
                    if lp.contains(&conj) {
                        let back = g.mul(g.mul(gi, conj), gamma);
                        vec_add(&mut acc, chi(back));
                    }
                }
                vec_div_exact(&mut acc, l.len() as i64)?;
                vec_add(&mut rhs[ci], &acc);
            }
        }

        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indres::catalog;

    fn s3_with_subs() -> (FiniteGroup, Vec<usize>, Vec<usize>) {
        let g = FiniteGroup::symmetric3().unwrap();
        let subs = g.subgroups();
        let a3 = subs.iter().find(|h| h.len() == 3).unwrap().clone();
        let c2 = subs.iter().find(|h| h.len() == 2).unwrap().clone();
        (g, a3, c2)
    }

    #[test]
    fn restriction_examples() {
        let (g, a3, _) = s3_with_subs();
        let n = g.exponent();
        let gt = CharacterTable::with_conductor(&g, n).unwrap();
        let sub = SubgroupContext::new(&g, &a3, n).unwrap();

        // trivial restricts to trivial
        let triv = RepRingElement::trivial(&gt);
        let r = restrict(&g, &gt, &triv, &sub).unwrap();
        assert_eq!(r, RepRingElement::trivial(&sub.table));

        // regular restricts to [G:H] copies of the regular representation
        let reg = RepRingElement::regular(&gt);
        let r = restrict(&g, &gt, &reg, &sub).unwrap();
        let expect = RepRingElement {
            multiplicities: RepRingElement::regular(&sub.table)
                .multiplicities
                .iter()
                .map(|m| m * BigInt::from(2))
                .collect(),
        };
        assert_eq!(r, expect);

        // the 2-dimensional irreducible of S3 restricts to the sum of the
        // two nontrivial characters of Z/3
        let two_dim = (0..gt.irreducible_count())
            .find(|&i| gt.degrees()[i] == 2)
            .unwrap();
        let r = restrict(&g, &gt, &RepRingElement::irreducible(&gt, two_dim), &sub).unwrap();
        let triv_pos = RepRingElement::trivial(&sub.table);
        let mut nontrivial_total = BigInt::zero();
        for (i, m) in r.multiplicities.iter().enumerate() {
            if triv_pos.multiplicities[i].is_zero() {
                assert_eq!(m, &BigInt::from(1), "each nontrivial character once");
                nontrivial_total += m;
            } else {
                assert!(m.is_zero(), "no trivial component");
            }
        }
        assert_eq!(nontrivial_total, BigInt::from(2));
    }

    #[test]
    fn induction_examples() {
        let (g, a3, _) = s3_with_subs();
        let n = g.exponent();
        let gt = CharacterTable::with_conductor(&g, n).unwrap();

        // trivial of {e} induces to the regular representation
        let e_sub = SubgroupContext::new(&g, &[0], n).unwrap();
        let ind = induce(&g, &gt, &e_sub, &RepRingElement::trivial(&e_sub.table)).unwrap();
        assert_eq!(ind, RepRingElement::regular(&gt));

        // trivial of A3 induces to trivial + sign
        let sub = SubgroupContext::new(&g, &a3, n).unwrap();
        let ind = induce(&g, &gt, &sub, &RepRingElement::trivial(&sub.table)).unwrap();
        let linear_positions: Vec<usize> = (0..gt.irreducible_count())
            .filter(|&i| gt.degrees()[i] == 1)
            .collect();
        assert_eq!(linear_positions.len(), 2);
        for i in 0..gt.irreducible_count() {
            let expect = if linear_positions.contains(&i) { 1 } else { 0 };
            assert_eq!(ind.multiplicities[i], BigInt::from(expect));
        }

        // a nontrivial character of A3 induces to the 2-dim irreducible
        let nontriv = (0..sub.table.irreducible_count())
            .find(|&i| {
                RepRingElement::trivial(&sub.table).multiplicities[i].is_zero()
            })
            .unwrap();
        let ind = induce(&g, &gt, &sub, &RepRingElement::irreducible(&sub.table, nontriv)).unwrap();
        let two_dim = (0..gt.irreducible_count())
            .find(|&i| gt.degrees()[i] == 2)
            .unwrap();
        for i in 0..gt.irreducible_count() {
            let expect = if i == two_dim { 1 } else { 0 };
            assert_eq!(ind.multiplicities[i], BigInt::from(expect));
        }
    }

    #[test]
    fn frobenius_reciprocity() {
        // ⟨ind x, y⟩_G = ⟨x, res y⟩_H over all irreducibles, catalog-wide
        for name in ["S3", "D4", "Q8", "A4", "C6"] {
            let g = catalog(name).unwrap();
            let n = g.exponent();
            let gt = CharacterTable::with_conductor(&g, n).unwrap();
            for h in g.subgroups() {
                let sub = SubgroupContext::new(&g, &h, n).unwrap();
                for i in 0..sub.table.irreducible_count() {
                    let x = RepRingElement::irreducible(&sub.table, i);
                    let ind = induce(&g, &gt, &sub, &x).unwrap();
                    for j in 0..gt.irreducible_count() {
                        let y = RepRingElement::irreducible(&gt, j);
                        let res = restrict(&g, &gt, &y, &sub).unwrap();
                        // pairing = multiplicity sums
                        assert_eq!(
                            ind.multiplicities[j], res.multiplicities[i],
                            "{name}, |H|={}",
                            h.len()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn double_coset_s3() {
        let (g, a3, c2) = s3_with_subs();
        assert!(double_coset_check(&g, &a3, &c2).unwrap());
        assert!(double_coset_check(&g, &c2, &a3).unwrap());
        // degenerate cases: H = G and K = {e}
        let all: Vec<usize> = (0..g.order()).collect();
        assert!(double_coset_check(&g, &all, &[0]).unwrap());
    }

    #[test]
    fn double_coset_d4_all_pairs() {
        let g = catalog("D4").unwrap();
        let subs = g.subgroups();
        for h in &subs {
            for k in &subs {
                assert!(double_coset_check(&g, h, k).unwrap());
            }
        }
    }

    #[test]
    fn inner_conjugation_is_identity_on_rep_ring() {
        // induction from H and from γHγ⁻¹ (with the transported character)
        // give the same element of R(G), for every subgroup and every γ
        let g = catalog("D4").unwrap();
        let n = g.exponent();
        let gt = CharacterTable::with_conductor(&g, n).unwrap();
        for h in g.subgroups() {
            let sub = SubgroupContext::new(&g, &h, n).unwrap();
            for gamma in 0..g.order() {
                let gi = g.inv(gamma);
                let conj_elems: Vec<usize> =
                    h.iter().map(|&x| g.mul(g.mul(gamma, x), gi)).collect();
                let csub = SubgroupContext::new(&g, &conj_elems, n).unwrap();
                for i in 0..sub.table.irreducible_count() {
                    let x = RepRingElement::irreducible(&sub.table, i);
                    // transported class function: value at γsγ⁻¹ is χ(s)
                    let vals = x.values(&sub.table);
                    let mut cvals = Vec::new();
                    for &lr in csub.table.class_reps() {
                        let parent = csub.elements[lr];
                        let back = g.mul(g.mul(gi, parent), gamma);
                        let local = sub.local_index(back).expect("conjugate element");
                        cvals.push(vals[sub.group.class_of(local)].clone());
                    }
                    let cx = RepRingElement {
                        multiplicities: csub.table.decompose(&cvals).unwrap(),
                    };
                    let ind_direct = induce(&g, &gt, &sub, &x).unwrap();
                    let ind_conj = induce(&g, &gt, &csub, &cx).unwrap();
                    assert_eq!(ind_direct, ind_conj, "gamma = {gamma}, |H| = {}", h.len());
                }
            }
        }
    }
}
