use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{CycField, CycNum, FiniteGroup};
use crate::{Error, Result};

/// Exact complex character table, values in ℚ(ζ_N) for N the group
/// exponent (or a multiple, when embedding into a parent's field).
///
/// Construction is eigenvalue-free: linear characters are enumerated as
/// homomorphisms into the roots of unity, every linear character of every
/// cyclic subgroup is induced up, and the resulting stock of genuine
/// characters is peeled by orthogonality (stripping known irreducible
/// constituents and keeping norm-1 remainders) with tensor-product
/// enrichment as a fallback. Row and column orthogonality are verified
/// before the table is returned.
pub struct CharacterTable {
    group_order: usize,
    class_reps: Vec<usize>,
    class_sizes: Vec<usize>,
    field: CycField,
    irreducibles: Vec<Vec<CycNum>>,
    degrees: Vec<usize>,
}

impl CharacterTable {
    pub fn new(g: &FiniteGroup) -> Result<Self> {
        Self::with_conductor(g, g.exponent())
    }

    /// Table with values living in ℚ(ζ_conductor); the conductor must be a
    /// multiple of the group exponent.
    pub fn with_conductor(g: &FiniteGroup, conductor: u64) -> Result<Self> {
        if g.order() > 24 {
            return Err(Error::GroupTooLarge { order: g.order() });
        }
        if conductor % g.exponent() != 0 {
            return Err(Error::CharacterTableIncomplete(
                "conductor must be a multiple of the exponent".into(),
            ));
        }
        let field = CycField::new(conductor);
        let class_reps: Vec<usize> = (0..g.class_count()).map(|c| g.class_rep(c)).collect();
        let class_sizes: Vec<usize> = (0..g.class_count()).map(|c| g.class_size(c)).collect();

        let mut table = Self {
            group_order: g.order(),
            class_reps,
            class_sizes,
            field,
            irreducibles: vec![],
            degrees: vec![],
        };
        table.build(g)?;
        table.verify()?;
        Ok(table)
    }

    fn build(&mut self, g: &FiniteGroup) -> Result<()> {
        let n = self.field.conductor();
        let mut pool: Vec<Vec<CycNum>> = Vec::new();

        // linear characters: homomorphisms G → ⟨ζ_N⟩, enumerated on a
        // generating set and validated on the full table
        for exps in linear_character_exponents(g, n) {
            let vals: Vec<CycNum> = self
                .class_reps
                .iter()
                .map(|&r| self.field.root(exps[r]))
                .collect();
            pool.push(vals);
        }

        // induced linear characters from every cyclic subgroup
        let mut seen_subgroups = std::collections::BTreeSet::new();
        for gen in 0..g.order() {
            let h: Vec<usize> = cyclic_subgroup(g, gen);
            if !seen_subgroups.insert(h.clone()) {
                continue;
            }
            let ord = h.len() as u64;
            for t in 0..ord {
                // λ_t(gen^a) = ζ_N^{t·a·N/ord}
                let mut exps = std::collections::BTreeMap::new();
                let mut x = g.identity();
                for a in 0..ord {
                    exps.insert(x, (t * a * (n / ord)) % n);
                    x = g.mul(x, gen);
                }
                let vals = self.induce_values(g, &h, &exps)?;
                pool.push(vals);
            }
        }

        // peel: strip known irreducibles, keep norm-1 remainders
        let target = self.class_reps.len();
        let mut enrich_rounds = 0;
        while self.irreducibles.len() < target {
            let mut progress = false;
            let mut next_pool = Vec::new();
            for vals in pool.drain(..) {
                let stripped = self.strip(&vals)?;
                if stripped.iter().all(|v| v.is_zero()) {
                    continue;
                }
                let norm = self.inner(&stripped, &stripped)?;
                if norm == BigRational::one() {
                    self.push_irreducible(stripped)?;
                    progress = true;
                } else {
                    next_pool.push(stripped);
                }
            }
            pool = dedup_value_fns(next_pool);
            if self.irreducibles.len() >= target {
                break;
            }
            if !progress {
                if enrich_rounds >= 3 {
                    return Err(Error::CharacterTableIncomplete(format!(
                        "found {} of {} irreducibles for {}",
                        self.irreducibles.len(),
                        target,
                        g.name
                    )));
                }
                enrich_rounds += 1;
                // tensor products of what we have against the pool
                let mut products = Vec::new();
                let stock: Vec<Vec<CycNum>> = self
                    .irreducibles
                    .iter()
                    .chain(pool.iter())
                    .cloned()
                    .collect();
                for a in &stock {
                    for b in &stock {
                        let prod: Vec<CycNum> = a
                            .iter()
                            .zip(b)
                            .map(|(x, y)| self.field.mul(x, y))
                            .collect();
                        products.push(prod);
                    }
                }
                pool.extend(products);
                pool = dedup_value_fns(pool);
            }
        }
        // canonical order: by degree, then by value vector
        let mut idx: Vec<usize> = (0..self.irreducibles.len()).collect();
        let keys: Vec<(usize, String)> = self
            .irreducibles
            .iter()
            .enumerate()
            .map(|(i, vals)| (self.degrees[i], format!("{vals:?}")))
            .collect();
        idx.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
        self.irreducibles = idx.iter().map(|&i| self.irreducibles[i].clone()).collect();
        self.degrees = idx.iter().map(|&i| self.degrees[i]).collect();
        Ok(())
    }

    /// Induction of a linear character given by exponents on a subgroup's
    /// elements: values at the class representatives.
    fn induce_values(
        &self,
        g: &FiniteGroup,
        h: &[usize],
        exps: &std::collections::BTreeMap<usize, u64>,
    ) -> Result<Vec<CycNum>> {
        let hset: std::collections::BTreeSet<usize> = h.iter().copied().collect();
        let mut out = Vec::with_capacity(self.class_reps.len());
        let hord = BigRational::from_integer(BigInt::from(h.len()));
        for &x in &self.class_reps {
            let mut acc = self.field.zero();
            for y in 0..g.order() {
                let conj = g.mul(g.mul(g.inv(y), x), y);
                if hset.contains(&conj) {
                    acc = self.field.add(&acc, &self.field.root(exps[&conj]));
                }
            }
            out.push(self.field.scale(&acc, &hord.recip()));
        }
        Ok(out)
    }

    /// Subtract every known irreducible constituent; the multiplicities of
    /// a genuine character are nonnegative integers.
    fn strip(&self, vals: &[CycNum]) -> Result<Vec<CycNum>> {
        let mut out = vals.to_vec();
        for irr in &self.irreducibles {
            let m = self.inner(&out, irr)?;
            if !m.is_integer() {
                return Err(Error::CharacterTableIncomplete(
                    "non-integral multiplicity while peeling".into(),
                ));
            }
            if m.is_zero() {
                continue;
            }
            for (o, i) in out.iter_mut().zip(irr) {
                let scaled = self.field.scale(i, &m);
                *o = self.field.sub(o, &scaled);
            }
        }
        Ok(out)
    }

    fn push_irreducible(&mut self, vals: Vec<CycNum>) -> Result<()> {
        let deg = self
            .field
            .as_rational(&vals[0])
            .ok_or_else(|| Error::CharacterTableIncomplete("irrational degree".into()))?;
        if !deg.is_integer() || !deg.is_positive() {
            return Err(Error::CharacterTableIncomplete(format!(
                "candidate irreducible with degree {deg}"
            )));
        }
        self.degrees.push(deg.to_integer().try_into().map_err(|_| {
            Error::CharacterTableIncomplete("degree out of range".into())
        })?);
        self.irreducibles.push(vals);
        Ok(())
    }

    /// ⟨a, b⟩ = (1/|G|) Σ_classes size·a(c)·conj(b(c)); must be rational.
    pub fn inner(&self, a: &[CycNum], b: &[CycNum]) -> Result<BigRational> {
        let mut acc = self.field.zero();
        for (i, (x, y)) in a.iter().zip(b).enumerate() {
            let term = self.field.mul(x, &self.field.conj(y));
            let sized = self.field.scale(
                &term,
                &BigRational::from_integer(BigInt::from(self.class_sizes[i])),
            );
            acc = self.field.add(&acc, &sized);
        }
        let scaled = self.field.scale(
            &acc,
            &BigRational::from_integer(BigInt::from(self.group_order)).recip(),
        );
        self.field.as_rational(&scaled).ok_or_else(|| {
            Error::InvariantViolation("character inner product is irrational".into())
        })
    }

    fn verify(&self) -> Result<()> {
        let k = self.class_reps.len();
        if self.irreducibles.len() != k {
            return Err(Error::CharacterTableIncomplete(format!(
                "{} irreducibles for {} classes",
                self.irreducibles.len(),
                k
            )));
        }
        let sum_sq: usize = self.degrees.iter().map(|d| d * d).sum();
        if sum_sq != self.group_order {
            return Err(Error::CharacterTableIncomplete(
                "degree squares do not sum to the group order".into(),
            ));
        }
        for i in 0..k {
            for j in 0..k {
                let expect = if i == j { BigRational::one() } else { BigRational::zero() };
                if self.inner(&self.irreducibles[i], &self.irreducibles[j])? != expect {
                    return Err(Error::CharacterTableIncomplete(
                        "row orthogonality fails".into(),
                    ));
                }
            }
        }
        // column orthogonality: Σ_χ χ(c) conj(χ(c')) = δ |G|/|c|
        for c in 0..k {
            for cp in 0..k {
                let mut acc = self.field.zero();
                for chi in &self.irreducibles {
                    let term = self.field.mul(&chi[c], &self.field.conj(&chi[cp]));
                    acc = self.field.add(&acc, &term);
                }
                let got = self.field.as_rational(&acc).ok_or_else(|| {
                    Error::InvariantViolation("column sum irrational".into())
                })?;
                let expect = if c == cp {
                    BigRational::from_integer(BigInt::from(self.group_order / self.class_sizes[c]))
                } else {
                    BigRational::zero()
                };
                if got != expect {
                    return Err(Error::CharacterTableIncomplete(
                        "column orthogonality fails".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn irreducible_count(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn field(&self) -> &CycField {
        &self.field
    }

    pub fn class_reps(&self) -> &[usize] {
        &self.class_reps
    }

    pub fn value(&self, irr: usize, class: usize) -> &CycNum {
        &self.irreducibles[irr][class]
    }

    pub fn irreducible_values(&self, irr: usize) -> &[CycNum] {
        &self.irreducibles[irr]
    }

    /// Integer multiplicities of a virtual character in the irreducibles;
    /// errors when a multiplicity is not an integer (not a virtual
    /// character) or when the values do not reassemble exactly.
    pub fn decompose(&self, values: &[CycNum]) -> Result<Vec<BigInt>> {
        let mut mults = Vec::with_capacity(self.irreducibles.len());
        for irr in &self.irreducibles {
            let m = self.inner(values, irr)?;
            if !m.is_integer() {
                return Err(Error::InvariantViolation(format!(
                    "non-integral multiplicity {m} in decomposition"
                )));
            }
            mults.push(m.to_integer());
        }
        // exactness: the combination must reproduce the values
        for (c, v) in values.iter().enumerate() {
            let mut acc = self.field.zero();
            for (i, m) in mults.iter().enumerate() {
                let scaled = self
                    .field
                    .scale(&self.irreducibles[i][c], &BigRational::from_integer(m.clone()));
                acc = self.field.add(&acc, &scaled);
            }
            if &acc != v {
                return Err(Error::InvariantViolation(
                    "decomposition does not reproduce the class function".into(),
                ));
            }
        }
        Ok(mults)
    }
}

fn dedup_value_fns(pool: Vec<Vec<CycNum>>) -> Vec<Vec<CycNum>> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for v in pool {
        let key = format!("{v:?}");
        if seen.insert(key) {
            out.push(v);
        }
    }
    out
}

/// All homomorphisms G → ℤ/N (as exponent assignments per element),
/// i.e. the linear characters of G with values in ⟨ζ_N⟩.
fn linear_character_exponents(g: &FiniteGroup, n: u64) -> Vec<Vec<u64>> {
    // greedy generating set
    let mut gens: Vec<usize> = Vec::new();
    let mut span = g.closure(&[]);
    for x in 0..g.order() {
        if span.binary_search(&x).is_err() {
            gens.push(x);
            let mut withx = gens.clone();
            withx.push(g.identity());
            span = g.closure(&withx);
            if span.len() == g.order() {
                break;
            }
        }
    }
    let mut out = Vec::new();
    let choices: Vec<Vec<u64>> = gens
        .iter()
        .map(|&x| {
            let o = g.element_order(x) as u64;
            (0..o).map(|t| t * (n / o)).collect()
        })
        .collect();
    let mut pick = vec![0usize; gens.len()];
    loop {
        // extend the assignment over the whole group by BFS; reject on conflict
        let mut exps: Vec<Option<u64>> = vec![None; g.order()];
        exps[g.identity()] = Some(0);
        let mut queue = vec![g.identity()];
        let mut ok = true;
        while let Some(x) = queue.pop() {
            let ex = exps[x].unwrap();
            for (gi, &gen) in gens.iter().enumerate() {
                let y = g.mul(x, gen);
                let ey = (ex + choices[gi][pick[gi]]) % n;
                match exps[y] {
                    None => {
                        exps[y] = Some(ey);
                        queue.push(y);
                    }
                    Some(prev) if prev != ey => {
                        ok = false;
                    }
                    _ => {}
                }
            }
            if !ok {
                break;
            }
        }
        if ok && exps.iter().all(|e| e.is_some()) {
            let exps: Vec<u64> = exps.into_iter().map(|e| e.unwrap()).collect();
            // final homomorphism check on all pairs
            let hom = (0..g.order()).all(|a| {
                (0..g.order()).all(|b| (exps[a] + exps[b]) % n == exps[g.mul(a, b)])
            });
            if hom {
                out.push(exps);
            }
        }
        // next assignment
        let mut k = 0;
        loop {
            if k == gens.len() {
                return out;
            }
            pick[k] += 1;
            if pick[k] < choices[k].len() {
                break;
            }
            pick[k] = 0;
            k += 1;
        }
    }
}

fn cyclic_subgroup(g: &FiniteGroup, gen: usize) -> Vec<usize> {
    let mut out = vec![];
    let mut x = g.identity();
    loop {
        out.push(x);
        x = g.mul(x, gen);
        if x == g.identity() {
            break;
        }
    }
    out.sort_unstable();
    out
}
