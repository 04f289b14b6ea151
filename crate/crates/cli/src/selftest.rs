//! Acceptance suite: every criterion runs at its stated tolerance with the
//! oracles written against independent code paths. `run_all` prints
//! nothing; callers render one line per criterion.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use ringkt_core::builtin;
use ringkt_core::eta::{affine_permutation, inf_ranks, molien_alternating_sum, EtaContext, K0Label};
use ringkt_core::field::{load_field, FieldSpec, Order};
use ringkt_core::indres::{catalog, catalog_names, double_coset_check_all, norm_annihilation_check, FiniteGroup};
use ringkt_core::linalg::IntMatrix;
use ringkt_core::tower::{
    pv_step, telescope_colimit, BlockAction, DiagClass, FinalFormula, GradedGroup,
    GroupSummand, PvAction, TelescopeSystem, TowerSpec, TriangularCertificate, ZAction,
};

pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

type Outcome = Result<String, String>;

pub fn run_all() -> Vec<CriterionResult> {
    run_all_with(|_| {})
}

/// Run every criterion, invoking the callback as each one finishes.
pub fn run_all_with(mut progress: impl FnMut(&CriterionResult)) -> Vec<CriterionResult> {
    let criteria: Vec<(usize, &'static str, fn() -> Outcome)> = vec![
        (1, "gaussian end-to-end", c01_gaussian_end_to_end),
        (2, "real-places case split", c02_case_split),
        (3, "cycle-census lemma sweep", c03_cycle_census),
        (4, "eta multiplicativity", c04_eta_multiplicativity),
        (5, "worked eta column vs oracle", c05_worked_column),
        (6, "telescope colimit vs oracle", c06_telescope_oracle),
        (7, "PV identity", c07_pv_identity),
        (8, "double coset formula", c08_double_coset),
        (9, "norm annihilation", c09_norm_annihilation),
        (10, "Molien identities", c10_molien),
        (11, "theorem-path consistency", c11_theorem_paths),
    ];
    criteria
        .into_iter()
        .map(|(id, name, f)| {
            let start = Instant::now();
            let outcome = f();
            let seconds = start.elapsed().as_secs_f64();
            let result = match outcome {
                Ok(detail) => CriterionResult { id, name, passed: true, detail, seconds },
                Err(detail) => CriterionResult { id, name, passed: false, detail, seconds },
            };
            progress(&result);
            result
        })
        .collect()
}

fn order_of(spec: &FieldSpec) -> Result<Order, String> {
    load_field(spec).map_err(|e| format!("load {}: {e}", spec.name))
}

fn err<T: std::fmt::Display>(e: T) -> String {
    e.to_string()
}

// criterion 1: Gaussian pipeline, exact values, < 5s
fn c01_gaussian_end_to_end() -> Outcome {
    let start = Instant::now();
    let o = order_of(&builtin::gaussian())?;
    let ranks = inf_ranks(&o).map_err(err)?;
    if ranks != vec![(0, 1), (2, 1)] {
        return Err(format!("inf ranks {ranks:?}, expected d = (1, 1)"));
    }
    if ringkt_core::eta::delta(&o) != 1 {
        return Err("delta must be 1".into());
    }
    let out = ringkt_core::tower::full_k_theory(
        &o,
        &TowerSpec { c: BigInt::from(4), truncation: 4 },
    )
    .map_err(err)?;
    let expect_sub = GradedGroup::new(GroupSummand::mixed(1, 4), GroupSummand::zero());
    if out.subalgebra != expect_sub {
        return Err(format!("subalgebra {}", out.subalgebra.display()));
    }
    let expect_pv = GradedGroup::new(GroupSummand::free(4), GroupSummand::free(4));
    if out.pv_first != expect_pv {
        return Err(format!("pv step {}", out.pv_first.display()));
    }
    if out.formula != (FinalFormula::TensorLambda { rank: 4 }) {
        return Err(format!("formula {}", out.formula.display()));
    }
    // depth j ≥ 1 has graded ranks 4·2^{j−1}; Γ_t carries j = t+1 generators
    for (t, tr) in out.truncations.iter().enumerate() {
        let j = t as u64 + 1;
        let want = 4u64 * (1 << (j - 1));
        if tr.deg0 != GroupSummand::free(want as usize)
            || tr.deg1 != GroupSummand::free(want as usize)
        {
            return Err(format!("truncation at depth {j}: {}", tr.display()));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if secs >= 5.0 {
        return Err(format!("took {secs:.2}s, limit 5s"));
    }
    Ok(format!("Z^4 (x) Lambda(Gamma), {secs:.2}s"))
}

// criterion 2: theorem-2 case split, each field < 1s
fn c02_case_split() -> Outcome {
    let cases: Vec<(FieldSpec, i64, FinalFormula)> = vec![
        (builtin::sqrt2(), 2, FinalFormula::TensorLambda { rank: 2 }),
        (builtin::cbrt2(), 2, FinalFormula::Lambda),
        (builtin::rationals(), 2, FinalFormula::Lambda),
    ];
    let mut details = Vec::new();
    for (spec, c, expect) in cases {
        let start = Instant::now();
        let o = order_of(&spec)?;
        let out = ringkt_core::tower::full_k_theory(
            &o,
            &TowerSpec { c: BigInt::from(c), truncation: 1 },
        )
        .map_err(err)?;
        if out.formula != expect {
            return Err(format!(
                "{}: got {}, expected {}",
                spec.name,
                out.formula.display(),
                expect.display()
            ));
        }
        let secs = start.elapsed().as_secs_f64();
        if secs >= 1.0 {
            return Err(format!("{}: took {secs:.2}s, limit 1s", spec.name));
        }
        details.push(format!("{} -> {}", spec.name, out.formula.display()));
    }
    Ok(details.join("; "))
}

/// Admissible rational integers form d₀ℤ; find the generator by scanning.
fn admissible_generator(order: &Order, bound: u64) -> Result<u64, String> {
    for c in 2..=bound {
        if order.is_admissible(&BigInt::from(c)).map_err(err)? {
            return Ok(c);
        }
    }
    Err("no admissible modulus within bound".into())
}

fn admissible_moduli(order: &Order, point_bound: u64) -> Result<Vec<u64>, String> {
    let n = order.degree() as u32;
    let mut bound = 2u64;
    while bound.pow(n) <= point_bound {
        bound += 1;
    }
    bound -= 1; // largest c with c^n ≤ point_bound
    if bound < 2 {
        return Ok(vec![]);
    }
    let d0 = admissible_generator(order, bound)?;
    Ok((1..=bound / d0).map(|k| k * d0).collect())
}

// criterion 3: every finite-class cycle has length m/i, image (c^n i/m)[1]
fn c03_cycle_census() -> Outcome {
    let mut total_checks = 0usize;
    for spec in builtin::all() {
        let o = order_of(&spec)?;
        let ctx = EtaContext::new(&o).map_err(err)?;
        let labels: Vec<_> = ctx.classes().iter().filter(|l| !l.is_mu()).cloned().collect();
        let moduli = admissible_moduli(&o, 100_000)?;
        let n = o.degree() as u32;
        let m = o.root_order();
        let failures: Vec<String> = moduli
            .par_iter()
            .flat_map(|&c| {
                let cb = BigInt::from(c);
                labels
                    .iter()
                    .filter_map(|label| {
                        let census = match ctx.fin_cycle_census(&cb, label) {
                            Ok(r) => r,
                            Err(e) => return Some(format!("{} c={c}: {e}", spec.name)),
                        };
                        let expect =
                            BigInt::from(c).pow(n) * BigInt::from(label.i) / BigInt::from(m);
                        if !census.all_full {
                            return Some(format!(
                                "{} c={c} i={}: short cycle (expected length {})",
                                spec.name, label.i, census.expected_length
                            ));
                        }
                        if census.unit_coefficient != expect {
                            return Some(format!(
                                "{} c={c} i={}: image {} != {}",
                                spec.name, label.i, census.unit_coefficient, expect
                            ));
                        }
                        None
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        if let Some(f) = failures.first() {
            return Err(f.clone());
        }
        total_checks += moduli.len() * labels.len();
    }
    Ok(format!("{total_checks} (spec, c, class) censuses, zero violations"))
}

// criterion 4: eta(c)·eta(c') = eta(cc') on finite blocks
fn c04_eta_multiplicativity() -> Outcome {
    let mut total_pairs = 0usize;
    for spec in builtin::all() {
        let o = order_of(&spec)?;
        let ctx = EtaContext::new(&o).map_err(err)?;
        let n = o.degree() as u32;
        let factors = admissible_moduli(&o, 100_000)?;
        // pairs with (cc')^n ≤ 1e5
        let mut pairs = Vec::new();
        let mut needed = std::collections::BTreeSet::new();
        for &c in &factors {
            for &cp in &factors {
                let prod = c as u128 * cp as u128;
                if prod.pow(n) <= 100_000 {
                    pairs.push((c, cp, (c * cp) as u64));
                    needed.insert(c);
                    needed.insert(cp);
                    needed.insert(c * cp);
                }
            }
        }
        if pairs.is_empty() {
            continue;
        }
        let needed: Vec<u64> = needed.into_iter().collect();
        let etas: BTreeMap<u64, ringkt_core::eta::EtaMatrix> = needed
            .par_iter()
            .map(|&c| {
                ctx.eta_matrix(&BigInt::from(c))
                    .map(|e| (c, e))
                    .map_err(|e| format!("{} c={c}: {e}", spec.name))
            })
            .collect::<Result<_, String>>()?;
        for (c, cp, prod) in &pairs {
            let left = etas[c]
                .compose_finite(&etas[cp])
                .map_err(|e| format!("{}: {e}", spec.name))?;
            if left != etas[prod].finite_block {
                return Err(format!("{}: eta({c})·eta({cp}) != eta({prod})", spec.name));
            }
            // the infinite diagonals multiply entrywise: exponent multisets
            // agree by construction, check they do
            if etas[c].inf_exponents != etas[prod].inf_exponents {
                return Err(format!("{}: inf diagonal shape changed", spec.name));
            }
        }
        total_pairs += pairs.len();
    }
    Ok(format!("{total_pairs} admissible pairs, all finite blocks compose"))
}

// ---------------------------------------------------------------------
// criterion 5: the worked Gaussian column against a brute-force
// enumerator written directly on (a + bi) pairs, independent of the
// Order/lattice machinery.
// ---------------------------------------------------------------------

type Gauss = (i64, i64);

fn gmul(x: Gauss, y: Gauss) -> Gauss {
    (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0)
}

fn gsub(x: Gauss, y: Gauss) -> Gauss {
    (x.0 - y.0, x.1 - y.1)
}

fn gadd(x: Gauss, y: Gauss) -> Gauss {
    (x.0 + y.0, x.1 + y.1)
}

/// Exact division by 1−i when possible: z(1+i)/2.
fn div_one_minus_i(z: Gauss) -> Option<Gauss> {
    let w = gmul(z, (1, 1));
    if w.0 % 2 == 0 && w.1 % 2 == 0 {
        Some((w.0 / 2, w.1 / 2))
    } else {
        None
    }
}

/// Exact division by 1+i when possible: z(1−i)/2.
fn div_one_plus_i(z: Gauss) -> Option<Gauss> {
    let w = gmul(z, (1, -1));
    if w.0 % 2 == 0 && w.1 % 2 == 0 {
        Some((w.0 / 2, w.1 / 2))
    } else {
        None
    }
}

/// Oracle labels: ("1" | "mu" | "fin4" | "fin2", chi).
type OracleVec = BTreeMap<(String, u64), i64>;

fn oracle_add(v: &mut OracleVec, key: (String, u64), c: i64) {
    let e = v.entry(key.clone()).or_insert(0);
    *e += c;
    if *e == 0 {
        v.remove(&key);
    }
}

/// Class of [p_{χ_s}(u^b s_{i})] for the oracle (rotation exactly i).
fn oracle_rot1_class(v: &mut OracleVec, b: Gauss, s: u64, coeff: i64) {
    if div_one_minus_i(b).is_some() {
        oracle_add(v, ("mu".into(), s), coeff);
    } else {
        oracle_add(v, ("fin4".into(), s), coeff);
    }
}

/// Class of [p_{χ_{s'}}(u^b s_{-1})] for the oracle (rotation ζ² = −1).
fn oracle_rot2_class(v: &mut OracleVec, b: Gauss, sp: u64, coeff: i64) {
    assert!(
        !(b.0 % 2 == 0 && b.1 % 2 == 0),
        "μ-compatible short cycle cannot occur away from d = 0"
    );
    if sp % 2 == 0 {
        // trivial restriction: [1] − [p_{χ_1}]
        oracle_add(v, ("1".into(), 0), coeff);
        oracle_rot2_class(v, b, 1, -coeff);
        return;
    }
    match div_one_plus_i(b) {
        Some(bp) => {
            // embeds into an order-4 subgroup: characters 1 and 3 restrict
            // to the sign character
            oracle_rot1_class(v, bp, 1, coeff);
            oracle_rot1_class(v, bp, 3, coeff);
        }
        None => oracle_add(v, ("fin2".into(), 1), coeff),
    }
}

/// Brute-force η-column of [p_{χ_s}(s_i)] at c = 4 over the 16-point box.
fn oracle_mu_column(c: i64, s: u64) -> (BTreeMap<usize, usize>, OracleVec) {
    let size = (c * c) as usize;
    let idx = |z: Gauss| -> usize { (z.1.rem_euclid(c) * c + z.0.rem_euclid(c)) as usize };
    let rep = |i: usize| -> Gauss { ((i as i64) % c, (i as i64) / c) };
    // π(d) = red(ζ^{-1} d) = red(−i·d)
    let pi = |d: Gauss| -> Gauss {
        let w = gmul((0, -1), d);
        (w.0.rem_euclid(c), w.1.rem_euclid(c))
    };
    let mut seen = vec![false; size];
    let mut census: BTreeMap<usize, usize> = BTreeMap::new();
    let mut out: OracleVec = BTreeMap::new();
    for start in 0..size {
        if seen[start] {
            continue;
        }
        // walk the cycle, accumulating b̃ = Σ ζ^k e(d_k),
        // e(d) = (−d + i·π(d))/c
        let mut cur = rep(start);
        let mut btilde: Gauss = (0, 0);
        let mut zeta_k: Gauss = (1, 0);
        let mut len = 0usize;
        loop {
            seen[idx(cur)] = true;
            let next = pi(cur);
            let e_num = gadd(gsub((0, 0), cur), gmul((0, 1), next));
            assert!(e_num.0 % c == 0 && e_num.1 % c == 0, "edge divisibility");
            let e = (e_num.0 / c, e_num.1 / c);
            btilde = gadd(btilde, gmul(zeta_k, e));
            zeta_k = gmul(zeta_k, (0, 1));
            len += 1;
            cur = next;
            if idx(cur) == start {
                break;
            }
        }
        *census.entry(len).or_insert(0) += 1;
        match len {
            4 => {
                assert_eq!(btilde, (0, 0), "full cycle translation");
                oracle_add(&mut out, ("1".into(), 0), 1);
            }
            1 => oracle_rot1_class(&mut out, btilde, s, 1),
            2 => oracle_rot2_class(&mut out, btilde, s % 2, 1),
            other => panic!("cycle length {other} impossible for rotation i"),
        }
    }
    (census, out)
}

fn engine_vec_to_oracle(v: &ringkt_core::eta::K0Vector) -> Result<OracleVec, String> {
    let mut out = OracleVec::new();
    for (label, coeff) in v.iter() {
        let c = coeff.to_i64().ok_or("coefficient out of range")?;
        let key = match label {
            K0Label::Unit => ("1".to_string(), 0),
            K0Label::Mu { chi } => ("mu".to_string(), *chi),
            K0Label::Fin { label, chi } => match label.i {
                1 => ("fin4".to_string(), *chi),
                2 => ("fin2".to_string(), *chi),
                other => return Err(format!("unexpected fin rotation {other}")),
            },
            K0Label::Inf { .. } => return Err("inf label in finite vector".into()),
        };
        oracle_add(&mut out, key, c);
    }
    Ok(out)
}

fn c05_worked_column() -> Outcome {
    let o = order_of(&builtin::gaussian())?;
    let ctx = EtaContext::new(&o).map_err(err)?;
    // census check, shared by all characters
    let perm = affine_permutation(
        &o,
        &BigInt::from(4),
        &ringkt_core::field::OrderElement::zero(2),
        1,
    )
    .map_err(err)?;
    let engine_census = perm.census();
    let expect_census: BTreeMap<usize, usize> = [(1, 2), (2, 1), (4, 3)].into_iter().collect();
    if engine_census != expect_census {
        return Err(format!("census {engine_census:?}"));
    }
    for s in 1..4u64 {
        let (oracle_census, oracle) = oracle_mu_column(4, s);
        if oracle_census != expect_census {
            return Err(format!("oracle census {oracle_census:?}"));
        }
        let engine = ctx
            .cycle_classes(
                &BigInt::from(4),
                &ringkt_core::field::OrderElement::zero(2),
                1,
                s,
            )
            .map_err(err)?;
        let engine = engine_vec_to_oracle(&engine)?;
        if engine != oracle {
            return Err(format!("chi={s}: engine {engine:?} vs oracle {oracle:?}"));
        }
    }
    Ok("census {1:2, 2:1, 4:3}; all three characters match the enumerator".into())
}

// criterion 6: certified telescope closed form vs rational oracle
fn c06_telescope_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0ec5_11b3);
    let r = 5usize;
    for trial in 0..200 {
        let classes: Vec<DiagClass> = (0..r)
            .map(|_| match rng.gen_range(0..3) {
                0 => DiagClass::Unit,
                1 => DiagClass::CPower(1),
                _ => DiagClass::CPower(2),
            })
            .collect();
        let upper: Vec<Vec<i64>> = (0..r)
            .map(|i| (0..r).map(|j| if j > i { rng.gen_range(-9..=9) } else { 0 }).collect())
            .collect();
        let unit_count = classes.iter().filter(|c| matches!(c, DiagClass::Unit)).count();

        let mut engine_answer = None;
        for c0 in [2i64, 3] {
            let mat = IntMatrix::from_fn(r, r, |i, j| {
                if i == j {
                    match classes[i] {
                        DiagClass::Unit => BigInt::one(),
                        DiagClass::CPower(k) => BigInt::from(c0).pow(k as u32),
                        DiagClass::Nilpotent => BigInt::zero(),
                    }
                } else {
                    BigInt::from(upper[i][j])
                }
            });
            let sys = TelescopeSystem::certified(
                mat.clone(),
                TriangularCertificate { c: BigInt::from(c0), diag: classes.clone() },
            )
            .map_err(err)?;
            let got = telescope_colimit(&sys, true).map_err(err)?;
            // oracle: rational stable rank and the saturated
            // eigenvalue-1 part computed from the instantiated matrix
            let stable = mat.pow(r as u64).map_err(err)?.rank();
            let shifted = mat.sub(&IntMatrix::identity(r)).map_err(err)?;
            let z_oracle = r - shifted.pow(r as u64).map_err(err)?.rank();
            if z_oracle != unit_count {
                return Err(format!(
                    "trial {trial}: oracle z {z_oracle} vs certificate {unit_count}"
                ));
            }
            let expect = GradedGroup::new(
                GroupSummand::mixed(stable - z_oracle, z_oracle),
                GroupSummand::zero(),
            );
            if got != expect {
                return Err(format!(
                    "trial {trial} c0={c0}: engine {} vs oracle {}",
                    got.display(),
                    expect.display()
                ));
            }
            if let Some(prev) = &engine_answer {
                if prev != &got {
                    return Err(format!("trial {trial}: instantiation-dependent answer"));
                }
            }
            engine_answer = Some(got);
        }
    }
    Ok("200 random certified 5x5 systems match the rational oracle at c = 2 and 3".into())
}

// criterion 7: PV on (Q^a ⊕ Z^m, 0) with the beta_c action gives (Z^m, Z^m)
fn c07_pv_identity() -> Outcome {
    for a in 0..=10usize {
        for m in 1..=12usize {
            let input = GradedGroup::new(GroupSummand::mixed(a, m), GroupSummand::zero());
            let act = PvAction {
                deg0: BlockAction {
                    q_exponents: (0..a).map(|i| (i as u64 % 4) + 1).collect(),
                    z_action: ZAction::Identity,
                },
                deg1: BlockAction::identity(),
            };
            let out = pv_step(&input, &act).map_err(err)?;
            let expect = GradedGroup::new(GroupSummand::free(m), GroupSummand::free(m));
            if out != expect {
                return Err(format!("a={a} m={m}: {}", out.display()));
            }
        }
    }
    Ok("all a ≤ 10, m ≤ 12".into())
}

// criterion 8: double coset formula over the whole catalog, < 10 s
fn c08_double_coset() -> Outcome {
    let start = Instant::now();
    let names = catalog_names();
    let results: Vec<Result<(String, usize), String>> = names
        .par_iter()
        .map(|name| {
            let g = catalog(name).map_err(err)?;
            let pairs = double_coset_check_all(&g).map_err(err)?;
            for (h, k, ok) in &pairs {
                if !ok {
                    return Err(format!("{name}: pair |H|={h}, |K|={k} fails"));
                }
            }
            Ok((name.clone(), pairs.len()))
        })
        .collect();
    let mut total = 0usize;
    for r in results {
        total += r?.1;
    }
    let secs = start.elapsed().as_secs_f64();
    if secs >= 10.0 {
        return Err(format!("took {secs:.2}s, limit 10s"));
    }
    Ok(format!("{total} subgroup pairs across {} groups, {secs:.2}s", names.len()))
}

// criterion 9: norm annihilation on random integer representations
fn c09_norm_annihilation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x9047_2200);
    let groups = [
        FiniteGroup::cyclic(2).map_err(err)?,
        FiniteGroup::cyclic(3).map_err(err)?,
        FiniteGroup::cyclic(4).map_err(err)?,
        FiniteGroup::symmetric3().map_err(err)?,
    ];
    let mut count = 0usize;
    for g in &groups {
        for _ in 0..25 {
            let r = rng.gen_range(1..=6usize);
            let action = random_integer_representation(g, r, &mut rng)?;
            let report = norm_annihilation_check(g, &action).map_err(err)?;
            if !report.both_ok() {
                return Err(format!(
                    "{}: r={r} kernel {:?} cokernel {:?}",
                    g.name, report.kernel_invariants, report.cokernel_invariants
                ));
            }
            count += 1;
        }
    }
    Ok(format!("{count} random representations, all bounds hold"))
}

/// Random integer representation: block sum of coset permutation actions,
/// conjugated by a random unimodular matrix.
fn random_integer_representation(
    g: &FiniteGroup,
    r: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<IntMatrix>, String> {
    let subs = g.subgroups();
    // choose blocks: coset actions with index ≤ remaining dimension
    let mut blocks: Vec<Vec<usize>> = Vec::new(); // each block: the subgroup
    let mut dim = 0usize;
    while dim < r {
        let candidates: Vec<&Vec<usize>> = subs
            .iter()
            .filter(|h| g.order() / h.len() <= r - dim)
            .collect();
        let pick = candidates[rng.gen_range(0..candidates.len())].clone();
        dim += g.order() / pick.len();
        blocks.push(pick);
    }
    // permutation action on cosets, per block
    let mut base: Vec<IntMatrix> = (0..g.order()).map(|_| IntMatrix::zero(r, r)).collect();
    let mut offset = 0usize;
    for h in &blocks {
        let hset: std::collections::BTreeSet<usize> = h.iter().copied().collect();
        // left cosets gH, with canonical minimal representatives
        let mut coset_of = vec![usize::MAX; g.order()];
        let mut reps = Vec::new();
        for x in 0..g.order() {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(x);
            for &s in &hset {
                coset_of[g.mul(x, s)] = c;
            }
        }
        let bdim = reps.len();
        for elem in 0..g.order() {
            for (c, &rep) in reps.iter().enumerate() {
                let target = coset_of[g.mul(elem, rep)];
                base[elem][(offset + target, offset + c)] = BigInt::one();
            }
        }
        offset += bdim;
    }
    // conjugate by a random unimodular matrix
    let mut u = IntMatrix::identity(r);
    let mut u_inv = IntMatrix::identity(r);
    for _ in 0..2 * r {
        let i = rng.gen_range(0..r);
        let mut j = rng.gen_range(0..r);
        if i == j {
            j = (j + 1) % r;
        }
        if r == 1 {
            break;
        }
        let k = BigInt::from(rng.gen_range(-2..=2i64));
        // u ← E·u, u_inv ← u_inv·E⁻¹ for E = I + k·e_{ij}
        let mut e = IntMatrix::identity(r);
        e[(i, j)] = k.clone();
        let mut e_inv = IntMatrix::identity(r);
        e_inv[(i, j)] = -k;
        u = e.mul(&u).map_err(err)?;
        u_inv = u_inv.mul(&e_inv).map_err(err)?;
    }
    base.into_iter()
        .map(|b| u.mul(&b).and_then(|ub| ub.mul(&u_inv)).map_err(err))
        .collect()
}

// criterion 10: Molien alternating identity per shipped spec
fn c10_molien() -> Outcome {
    let mut details = Vec::new();
    for spec in builtin::all() {
        let o = order_of(&spec)?;
        let (lhs, rhs) = molien_alternating_sum(&o).map_err(err)?;
        if lhs != rhs {
            return Err(format!("{}: {lhs} != {rhs}", spec.name));
        }
        let ranks = inf_ranks(&o).map_err(err)?;
        if ranks[0] != (0, 1) {
            return Err(format!("{}: d_0 != 1", spec.name));
        }
        details.push(format!("{}: {lhs}", spec.name));
    }
    Ok(details.join("; "))
}

// criterion 11: higher-roots path vs real-places path for m > 2
fn c11_theorem_paths() -> Outcome {
    let cases = [
        (builtin::gaussian(), 4i64),
        (builtin::eisenstein(), 6),
        (builtin::zeta5(), 10),
    ];
    let mut details = Vec::new();
    for (spec, c) in cases {
        let o = order_of(&spec)?;
        if o.root_order() <= 2 {
            continue;
        }
        let out = ringkt_core::tower::full_k_theory(
            &o,
            &TowerSpec { c: BigInt::from(c), truncation: 2 },
        )
        .map_err(err)?;
        match out.theorem1_agrees {
            Some(true) => details.push(format!("{} m={}", spec.name, o.root_order())),
            other => return Err(format!("{}: agreement flag {other:?}", spec.name)),
        }
    }
    Ok(details.join("; "))
}

