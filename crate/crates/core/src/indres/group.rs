use std::collections::BTreeSet;

use crate::{Error, Result};

/// Finite group given by an explicit multiplication table; group axioms are
/// verified at construction.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    pub name: String,
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    class_of: Vec<usize>,
    class_reps: Vec<usize>,
    class_sizes: Vec<usize>,
    elem_orders: Vec<usize>,
}

impl FiniteGroup {
    pub fn from_mul_table(name: &str, order: usize, mul: Vec<usize>) -> Result<Self> {
        if mul.len() != order * order || order == 0 {
            return Err(Error::NotARepresentation("bad multiplication table size".into()));
        }
        if mul.iter().any(|&x| x >= order) {
            return Err(Error::NotARepresentation("table entry out of range".into()));
        }
        let at = |a: usize, b: usize| mul[a * order + b];
        // identity
        let mut id = None;
        for e in 0..order {
            if (0..order).all(|x| at(e, x) == x && at(x, e) == x) {
                id = Some(e);
                break;
            }
        }
        let Some(id) = id else {
            return Err(Error::NotARepresentation("no identity element".into()));
        };
        if id != 0 {
            return Err(Error::NotARepresentation("identity must be element 0".into()));
        }
        // associativity
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(Error::NotARepresentation("associativity fails".into()));
                    }
                }
            }
        }
        // inverses
        let mut inv = vec![usize::MAX; order];
        for a in 0..order {
            match (0..order).find(|&b| at(a, b) == id && at(b, a) == id) {
                Some(b) => inv[a] = b,
                None => return Err(Error::NotARepresentation("missing inverse".into())),
            }
        }
        // element orders
        let mut elem_orders = vec![0usize; order];
        for a in 0..order {
            let mut x = a;
            let mut k = 1;
            while x != id {
                x = at(x, a);
                k += 1;
            }
            elem_orders[a] = k;
        }
        // conjugacy classes
        let mut class_of = vec![usize::MAX; order];
        let mut class_reps = Vec::new();
        let mut class_sizes = Vec::new();
        for a in 0..order {
            if class_of[a] != usize::MAX {
                continue;
            }
            let idx = class_reps.len();
            class_reps.push(a);
            let mut size = 0;
            for g in 0..order {
                let conj = at(at(g, a), inv[g]);
                if class_of[conj] == usize::MAX {
                    class_of[conj] = idx;
                    size += 1;
                }
            }
            class_sizes.push(size);
        }
        Ok(Self {
            name: name.to_string(),
            order,
            mul,
            inv,
            class_of,
            class_reps,
            class_sizes,
            elem_orders,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.elem_orders[a]
    }

    pub fn exponent(&self) -> u64 {
        let mut l = 1u64;
        for &o in &self.elem_orders {
            l = num_integer::lcm(l, o as u64);
        }
        l
    }

    pub fn conjugate(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn class_count(&self) -> usize {
        self.class_reps.len()
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    pub fn class_rep(&self, c: usize) -> usize {
        self.class_reps[c]
    }

    pub fn class_size(&self, c: usize) -> usize {
        self.class_sizes[c]
    }

    /// Closure of a subset under multiplication (subgroup generated by it).
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut set: BTreeSet<usize> = gens.iter().copied().collect();
        set.insert(0);
        loop {
            let mut new = Vec::new();
            for &a in &set {
                for &b in &set {
                    let p = self.mul(a, b);
                    if !set.contains(&p) {
                        new.push(p);
                    }
                }
            }
            if new.is_empty() {
                break;
            }
            set.extend(new);
        }
        set.into_iter().collect()
    }

    pub fn is_subgroup(&self, elems: &[usize]) -> bool {
        let set: BTreeSet<usize> = elems.iter().copied().collect();
        set.contains(&0)
            && set
                .iter()
                .all(|&a| set.iter().all(|&b| set.contains(&self.mul(a, b))))
    }

    /// All subgroups, as sorted element lists, smallest first.
    pub fn subgroups(&self) -> Vec<Vec<usize>> {
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        found.insert(vec![0]);
        let mut frontier: Vec<Vec<usize>> = vec![vec![0]];
        while let Some(h) = frontier.pop() {
            for g in 0..self.order {
                if h.binary_search(&g).is_ok() {
                    continue;
                }
                let mut gens = h.clone();
                gens.push(g);
                let closed = self.closure(&gens);
                if found.insert(closed.clone()) {
                    frontier.push(closed);
                }
            }
        }
        let mut out: Vec<Vec<usize>> = found.into_iter().collect();
        out.sort_by_key(|h| (h.len(), h.clone()));
        out
    }

    /// Double coset representatives for H\G/K (minimal element per coset).
    pub fn double_cosets(&self, h: &[usize], k: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        let mut reps = Vec::new();
        for g in 0..self.order {
            if seen[g] {
                continue;
            }
            reps.push(g);
            for &a in h {
                for &b in k {
                    seen[self.mul(self.mul(a, g), b)] = true;
                }
            }
        }
        reps
    }

    // --- catalog constructors ---

    pub fn cyclic(n: usize) -> Result<Self> {
        let mul = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        Self::from_mul_table(&format!("C{n}"), n, mul)
    }

    /// Dihedral group of order 2n (n ≥ 2); element r + n·s is rotation r
    /// with reflection flag s.
    pub fn dihedral(n: usize) -> Result<Self> {
        let order = 2 * n;
        let mut mul = vec![0usize; order * order];
        for r1 in 0..n {
            for s1 in 0..2 {
                for r2 in 0..n {
                    for s2 in 0..2 {
                        let a = r1 + n * s1;
                        let b = r2 + n * s2;
                        let r = if s1 == 0 { (r1 + r2) % n } else { (r1 + n - r2) % n };
                        let s = (s1 + s2) % 2;
                        mul[a * order + b] = r + n * s;
                    }
                }
            }
        }
        Self::from_mul_table(&format!("D{n}"), order, mul)
    }

    /// Symmetric group on 3 letters, via permutation composition.
    pub fn symmetric3() -> Result<Self> {
        Self::from_perms("S3", &all_perms(3))
    }

    /// Alternating group on 4 letters.
    pub fn alternating4() -> Result<Self> {
        let perms: Vec<Vec<usize>> = all_perms(4)
            .into_iter()
            .filter(|p| perm_sign(p) == 1)
            .collect();
        Self::from_perms("A4", &perms)
    }

    /// Quaternion group {±1, ±i, ±j, ±k}.
    pub fn quaternion8() -> Result<Self> {
        // encode q = sign·axis: idx = 2·axis + (sign<0), axes 1,i,j,k = 0..3
        fn qmul(a: usize, b: usize) -> usize {
            let (ax_a, neg_a) = (a / 2, a % 2 == 1);
            let (ax_b, neg_b) = (b / 2, b % 2 == 1);
            // axis table for 1,i,j,k: result axis and extra sign
            const AXIS: [[(usize, bool); 4]; 4] = [
                [(0, false), (1, false), (2, false), (3, false)],
                [(1, false), (0, true), (3, false), (2, true)],
                [(2, false), (3, true), (0, true), (1, false)],
                [(3, false), (2, false), (1, true), (0, true)],
            ];
            let (ax, mut neg) = AXIS[ax_a][ax_b];
            neg ^= neg_a ^ neg_b;
            2 * ax + usize::from(neg)
        }
        let mul = (0..64).map(|i| qmul(i / 8, i % 8)).collect();
        Self::from_mul_table("Q8", 8, mul)
    }

    fn from_perms(name: &str, perms: &[Vec<usize>]) -> Result<Self> {
        let n = perms.len();
        // put the identity first
        let mut perms = perms.to_vec();
        let id_pos = perms
            .iter()
            .position(|p| p.iter().enumerate().all(|(i, &x)| i == x))
            .expect("identity permutation present");
        perms.swap(0, id_pos);
        let index = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        let mut mul = vec![0usize; n * n];
        for (i, p) in perms.iter().enumerate() {
            for (j, q) in perms.iter().enumerate() {
                // composition: (p ∘ q)(x) = p(q(x))
                let comp: Vec<usize> = (0..p.len()).map(|x| p[q[x]]).collect();
                mul[i * n + j] = index(&comp);
            }
        }
        Self::from_mul_table(name, n, mul)
    }
}

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    permute(&mut cur, 0, &mut out);
    out.sort();
    out
}

fn permute(cur: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == cur.len() {
        out.push(cur.clone());
        return;
    }
    for i in k..cur.len() {
        cur.swap(k, i);
        permute(cur, k + 1, out);
        cur.swap(k, i);
    }
}

fn perm_sign(p: &[usize]) -> i32 {
    let mut sign = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Catalog names accepted by the CLI and the exhaustive checks.
pub fn catalog_names() -> Vec<String> {
    let mut names: Vec<String> = (1..=12).map(|n| format!("C{n}")).collect();
    names.extend((2..=6).map(|n| format!("D{n}")));
    names.extend(["S3".to_string(), "A4".to_string(), "Q8".to_string()]);
    names
}

/// Look up a catalog group by name.
pub fn catalog(name: &str) -> Result<FiniteGroup> {
    if let Some(n) = name.strip_prefix('C').and_then(|s| s.parse::<usize>().ok()) {
        if (1..=12).contains(&n) {
            return FiniteGroup::cyclic(n);
        }
    }
    if let Some(n) = name.strip_prefix('D').and_then(|s| s.parse::<usize>().ok()) {
        if (2..=6).contains(&n) {
            return FiniteGroup::dihedral(n);
        }
    }
    match name {
        "S3" => FiniteGroup::symmetric3(),
        "A4" => FiniteGroup::alternating4(),
        "Q8" => FiniteGroup::quaternion8(),
        _ => Err(Error::SpecParse(format!("unknown catalog group {name:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_constructs() {
        for name in catalog_names() {
            let g = catalog(&name).unwrap();
            assert!(g.order() <= 12, "{name}");
        }
    }

    #[test]
    fn s3_structure() {
        let g = FiniteGroup::symmetric3().unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.class_count(), 3);
        assert_eq!(g.exponent(), 6);
        // subgroups: 1, three C2, one C3, S3
        assert_eq!(g.subgroups().len(), 6);
    }

    #[test]
    fn a4_structure() {
        let g = FiniteGroup::alternating4().unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(g.class_count(), 4);
        // subgroups: 1, three C2, four C3, V4, A4
        assert_eq!(g.subgroups().len(), 10);
    }

    #[test]
    fn q8_structure() {
        let g = FiniteGroup::quaternion8().unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.class_count(), 5);
        // -1 is central of order 2
        assert_eq!(g.element_order(1), 2);
        assert_eq!(g.subgroups().len(), 6);
    }

    #[test]
    fn double_cosets_s3() {
        let g = FiniteGroup::symmetric3().unwrap();
        let subs = g.subgroups();
        let a3 = subs.iter().find(|h| h.len() == 3).unwrap().clone();
        let c2 = subs.iter().find(|h| h.len() == 2).unwrap().clone();
        // A3\S3/C2: |A3 γ C2| = 6 covers everything: one double coset
        assert_eq!(g.double_cosets(&a3, &c2).len(), 1);
        // C2\S3/C2 has two double cosets
        assert_eq!(g.double_cosets(&c2, &c2).len(), 2);
    }
}
