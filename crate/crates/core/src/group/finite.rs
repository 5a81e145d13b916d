use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use super::{Group, GroupError, GroupHom};

/// A finite group given by its Cayley table. Elements are indices
/// `0..order`; `labels` name them for configs and output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    identity: usize,
    labels: Vec<String>,
    // Degree and images (0-based) when the group was built from permutations.
    permutations: Option<(usize, Vec<Vec<usize>>)>,
}

impl FiniteGroup {
    /// Validates the table (closure, identity, inverses, associativity)
    /// exhaustively.
    pub fn from_table(rows: Vec<Vec<usize>>, labels: Vec<String>) -> Result<Self, GroupError> {
        let order = rows.len();
        if order == 0 {
            return Err(GroupError::NotAGroup("empty table".into()));
        }
        if labels.len() != order {
            return Err(GroupError::NotAGroup(format!(
                "{} labels for order {order}",
                labels.len()
            )));
        }
        let distinct: BTreeSet<&String> = labels.iter().collect();
        if distinct.len() != order {
            return Err(GroupError::NotAGroup("duplicate labels".into()));
        }
        let mut table = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::NotAGroup(format!("row {i} has length {}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= order) {
                return Err(GroupError::OutOfRange(bad, order));
            }
            table.extend_from_slice(row);
        }
        let at = |a: usize, b: usize| table[a * order + b];
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| GroupError::NotAGroup("no identity".into()))?;
        let mut inverse = Vec::with_capacity(order);
        for (x, label) in labels.iter().enumerate() {
            let inv = (0..order)
                .find(|&y| at(x, y) == identity && at(y, x) == identity)
                .ok_or_else(|| GroupError::NotAGroup(format!("{label} has no inverse")))?;
            inverse.push(inv);
        }
        for a in 0..order {
            for b in 0..order {
                let ab = at(a, b);
                for c in 0..order {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(GroupError::NotAGroup(format!(
                            "associativity fails at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        Ok(Self {
            order,
            table,
            inverse,
            identity,
            labels,
            permutations: None,
        })
    }

    /// Cyclic group C_m; element `k` is labelled by its residue.
    pub fn cyclic(m: usize) -> Result<Self, GroupError> {
        if m == 0 {
            return Err(GroupError::NotAGroup("C_0".into()));
        }
        let rows = (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect();
        Self::from_table(rows, (0..m).map(|k| k.to_string()).collect())
    }

    /// Dihedral group of order 2m, elements `s^f r^k` labelled `e`, `r{k}`,
    /// `s`, `sr{k}`.
    pub fn dihedral(m: usize) -> Result<Self, GroupError> {
        if m < 2 {
            return Err(GroupError::NotAGroup(format!("D_{m}")));
        }
        let index = |f: usize, k: usize| f * m + k;
        let mut rows = Vec::with_capacity(2 * m);
        for f1 in 0..2 {
            for k1 in 0..m {
                let mut row = Vec::with_capacity(2 * m);
                for f2 in 0..2 {
                    for k2 in 0..m {
                        row.push(if f2 == 0 {
                            index(f1, (k1 + k2) % m)
                        } else {
                            index((f1 + 1) % 2, (k2 + m - k1) % m)
                        });
                    }
                }
                rows.push(row);
            }
        }
        let labels = (0..2 * m)
            .map(|i| match (i / m, i % m) {
                (0, 0) => "e".to_string(),
                (0, k) => format!("r{k}"),
                (_, 0) => "s".to_string(),
                (_, k) => format!("sr{k}"),
            })
            .collect();
        Self::from_table(rows, labels)
    }

    /// Symmetric group on `n ≤ 6` letters, labelled in cycle notation with
    /// 1-based points (`e`, `(12)`, `(123)`, `(12)(34)`, ...). The product
    /// `g·h` is the composition "apply h, then g".
    pub fn symmetric(n: usize) -> Result<Self, GroupError> {
        if n == 0 || n > 6 {
            return Err(GroupError::NotAGroup(format!("S_{n} not supported")));
        }
        let mut perms = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        permutations(&mut current, 0, &mut perms);
        perms.sort();
        Self::from_permutations(n, perms)
    }

    /// Group of all permutations generated by `generators` (0-based images).
    pub fn generated_by_permutations(
        degree: usize,
        generators: &[Vec<usize>],
    ) -> Result<Self, GroupError> {
        for g in generators {
            let mut seen = g.clone();
            seen.sort();
            if g.len() != degree || seen != (0..degree).collect::<Vec<_>>() {
                return Err(GroupError::NotAGroup(format!("{g:?} is not a permutation")));
            }
        }
        let id: Vec<usize> = (0..degree).collect();
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = compose(g, &x);
                if found.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        Self::from_permutations(degree, found.into_iter().collect())
    }

    fn from_permutations(degree: usize, perms: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let index: HashMap<&Vec<usize>, usize> =
            perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut rows = Vec::with_capacity(perms.len());
        for g in &perms {
            let mut row = Vec::with_capacity(perms.len());
            for h in &perms {
                let gh = compose(g, h);
                let k = *index
                    .get(&gh)
                    .ok_or_else(|| GroupError::NotAGroup("permutations not closed".into()))?;
                row.push(k);
            }
            rows.push(row);
        }
        let labels = perms.iter().map(|p| cycle_notation(p)).collect();
        let mut group = Self::from_table(rows, labels)?;
        group.permutations = Some((degree, perms));
        Ok(group)
    }

    /// Quaternion group Q₈ with labels `1, -1, i, -i, j, -j, k, -k`.
    pub fn quaternion() -> Result<Self, GroupError> {
        // basis unit index 0..4 = 1, i, j, k; element = 2·unit + sign bit
        const UNIT_MUL: [[(usize, bool); 4]; 4] = [
            [(0, false), (1, false), (2, false), (3, false)],
            [(1, false), (0, true), (3, false), (2, true)],
            [(2, false), (3, true), (0, true), (1, false)],
            [(3, false), (2, false), (1, true), (0, true)],
        ];
        let rows = (0..8)
            .map(|a: usize| {
                (0..8)
                    .map(|b: usize| {
                        let (u, neg) = UNIT_MUL[a / 2][b / 2];
                        let sign = (a % 2 == 1) ^ (b % 2 == 1) ^ neg;
                        2 * u + sign as usize
                    })
                    .collect()
            })
            .collect();
        let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        Self::from_table(rows, labels)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn element(&self, label: &str) -> Result<usize, GroupError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| GroupError::UnknownLabel(label.to_string()))
    }

    pub fn check(&self, g: usize) -> Result<usize, GroupError> {
        if g < self.order {
            Ok(g)
        } else {
            Err(GroupError::OutOfRange(g, self.order))
        }
    }

    /// Permutation degree and 0-based images, for permutation groups.
    pub fn permutation(&self, g: usize) -> Option<(usize, &[usize])> {
        self.permutations
            .as_ref()
            .map(|(n, perms)| (*n, perms[g].as_slice()))
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(&self.mul(&g, &x), &self.inverse[g])
    }

    /// Least subgroup containing `generators`, by closure iteration.
    pub fn subgroup_generated<I: IntoIterator<Item = usize>>(&self, generators: I) -> BTreeSet<usize> {
        let gens: Vec<usize> = generators.into_iter().collect();
        let mut found = BTreeSet::from([self.identity]);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let y = self.mul(&g, &x);
                if found.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        found
    }

    /// Least normal subgroup containing `generators`.
    pub fn normal_closure<I: IntoIterator<Item = usize>>(&self, generators: I) -> BTreeSet<usize> {
        let conjugates: BTreeSet<usize> = generators
            .into_iter()
            .flat_map(|s| self.elements().map(move |g| (g, s)))
            .map(|(g, s)| self.conjugate(g, s))
            .collect();
        // the subgroup generated by a conjugation-stable set is normal
        self.subgroup_generated(conjugates)
    }

    pub fn is_subgroup(&self, set: &BTreeSet<usize>) -> bool {
        set.contains(&self.identity)
            && set.iter().all(|&a| set.iter().all(|&b| set.contains(&self.mul(&a, &b))))
    }

    pub fn is_normal(&self, set: &BTreeSet<usize>) -> bool {
        self.is_subgroup(set)
            && set
                .iter()
                .all(|&n| self.elements().all(|g| set.contains(&self.conjugate(g, n))))
    }

    /// The coset group G/N and the canonical projection. Cosets are
    /// labelled `[x]` by their smallest-index representative.
    pub fn quotient(&self, normal: &BTreeSet<usize>) -> Result<(FiniteGroup, GroupHom), GroupError> {
        if let Some(&bad) = normal.iter().find(|&&n| n >= self.order) {
            return Err(GroupError::OutOfRange(bad, self.order));
        }
        if !self.is_normal(normal) {
            return Err(GroupError::NotNormal);
        }
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for g in self.elements() {
            if coset_of[g] == usize::MAX {
                for &n in normal {
                    coset_of[self.mul(&g, &n)] = reps.len();
                }
                reps.push(g);
            }
        }
        let rows = reps
            .iter()
            .map(|&a| reps.iter().map(|&b| coset_of[self.mul(&a, &b)]).collect())
            .collect();
        let labels = reps.iter().map(|&r| format!("[{}]", self.labels[r])).collect();
        let quotient = FiniteGroup::from_table(rows, labels)?;
        let projection = GroupHom::new(self, &quotient, coset_of)?;
        Ok((quotient, projection))
    }

    /// Multiplication table rendered in the text exchange format.
    pub fn to_table_text(&self) -> String {
        let mut out = format!("{}\n", self.order);
        for a in self.elements() {
            let row: Vec<String> = self
                .elements()
                .map(|b| self.mul(&a, &b).to_string())
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// Count of elements of each order, keyed by order.
    pub fn order_statistics(&self) -> BTreeMap<usize, usize> {
        let mut stats = BTreeMap::new();
        for g in self.elements() {
            let mut k = 1;
            let mut x = g;
            while x != self.identity {
                x = self.mul(&x, &g);
                k += 1;
            }
            *stats.entry(k).or_insert(0) += 1;
        }
        stats
    }
}

impl Group for FiniteGroup {
    type Element = usize;

    fn identity(&self) -> usize {
        self.identity
    }

    fn mul(&self, a: &usize, b: &usize) -> usize {
        self.table[a * self.order + b]
    }

    fn inv(&self, a: &usize) -> usize {
        self.inverse[*a]
    }
}

/// Parses the Cayley-table text format: first non-empty line is the order,
/// followed by that many rows of whitespace-separated 0-based indices.
/// Elements are labelled `g0, g1, ...`.
pub fn parse_cayley_table(text: &str) -> Result<FiniteGroup, GroupError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let order: usize = lines
        .next()
        .ok_or_else(|| GroupError::Parse("missing order line".into()))?
        .parse()
        .map_err(|e| GroupError::Parse(format!("order: {e}")))?;
    let mut rows = Vec::with_capacity(order);
    for (i, line) in lines.enumerate() {
        let row = line
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| GroupError::Parse(format!("row {i}: {e}")))?;
        rows.push(row);
    }
    if rows.len() != order {
        return Err(GroupError::Parse(format!(
            "expected {order} rows, found {}",
            rows.len()
        )));
    }
    FiniteGroup::from_table(rows, (0..order).map(|i| format!("g{i}")).collect())
}

/// `(g ∘ h)(i) = g(h(i))`.
fn compose(g: &[usize], h: &[usize]) -> Vec<usize> {
    h.iter().map(|&i| g[i]).collect()
}

fn permutations(current: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == current.len() {
        out.push(current.clone());
        return;
    }
    for i in k..current.len() {
        current.swap(k, i);
        permutations(current, k + 1, out);
        current.swap(k, i);
    }
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            out.push_str(&(i + 1).to_string());
            i = p[i];
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".to_string()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(g: &FiniteGroup, labels: &[&str]) -> BTreeSet<usize> {
        labels.iter().map(|l| g.element(l).unwrap()).collect()
    }

    #[test]
    fn builtin_orders() {
        assert_eq!(FiniteGroup::cyclic(5).unwrap().order(), 5);
        assert_eq!(FiniteGroup::dihedral(4).unwrap().order(), 8);
        assert_eq!(FiniteGroup::symmetric(3).unwrap().order(), 6);
        assert_eq!(FiniteGroup::symmetric(4).unwrap().order(), 24);
        assert_eq!(FiniteGroup::quaternion().unwrap().order(), 8);
    }

    #[test]
    fn quaternion_relations() {
        let q = FiniteGroup::quaternion().unwrap();
        let e = |l| q.element(l).unwrap();
        assert_eq!(q.mul(&e("i"), &e("j")), e("k"));
        assert_eq!(q.mul(&e("j"), &e("i")), e("-k"));
        assert_eq!(q.mul(&e("i"), &e("i")), e("-1"));
        // Q8 has one involution and six elements of order 4
        assert_eq!(q.order_statistics(), BTreeMap::from([(1, 1), (2, 1), (4, 6)]));
        // D4 has five involutions, so the two are not isomorphic
        let d4 = FiniteGroup::dihedral(4).unwrap();
        assert_eq!(d4.order_statistics()[&2], 5);
    }

    #[test]
    fn s3_products_follow_composition() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let g = s3.mul(&s3.element("(23)").unwrap(), &s3.element("(12)").unwrap());
        // apply (12) first then (23): 1→2→3, 2→1, 3→2
        assert_eq!(s3.label(g), "(132)");
    }

    #[test]
    fn subgroup_closure() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(s3.subgroup_generated([]), BTreeSet::from([s3.identity()]));
        assert_eq!(s3.subgroup_generated(set(&s3, &["(12)", "(23)"])).len(), 6);
        assert_eq!(
            s3.subgroup_generated(set(&s3, &["(123)"])),
            set(&s3, &["e", "(123)", "(132)"])
        );
    }

    #[test]
    fn normal_closures() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(s3.normal_closure(set(&s3, &["e"])), set(&s3, &["e"]));
        assert_eq!(
            s3.normal_closure(set(&s3, &["(123)"])),
            set(&s3, &["e", "(123)", "(132)"])
        );
        assert_eq!(s3.normal_closure(set(&s3, &["(12)"])).len(), 6);
    }

    #[test]
    fn quotients() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let (q, proj) = s3.quotient(&set(&s3, &["e"])).unwrap();
        assert_eq!(q.order(), 6);
        assert_eq!(proj.images().iter().collect::<BTreeSet<_>>().len(), 6);

        let a3 = set(&s3, &["e", "(123)", "(132)"]);
        let (q, proj) = s3.quotient(&a3).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(proj.kernel(&q), a3);

        let c4 = FiniteGroup::cyclic(4).unwrap();
        let (q, _) = c4.quotient(&set(&c4, &["0", "2"])).unwrap();
        assert_eq!(q.order(), 2);

        let not_normal = set(&s3, &["e", "(12)"]);
        assert_eq!(s3.quotient(&not_normal).unwrap_err(), GroupError::NotNormal);
    }

    #[test]
    fn cayley_text_round_trip() {
        let d3 = FiniteGroup::dihedral(3).unwrap();
        let parsed = parse_cayley_table(&d3.to_table_text()).unwrap();
        assert_eq!(parsed.order(), 6);
        for a in d3.elements() {
            for b in d3.elements() {
                assert_eq!(parsed.mul(&a, &b), d3.mul(&a, &b));
            }
        }
    }

    #[test]
    fn rejects_non_groups() {
        assert!(parse_cayley_table("2\n0 1\n0 1\n").is_err());
        assert!(parse_cayley_table("2\n0 1\n").is_err());
        assert!(parse_cayley_table("x\n").is_err());
        // Latin square without associativity
        let text = "3\n0 1 2\n1 0 2\n2 2 0\n";
        assert!(parse_cayley_table(text).is_err());
    }

    #[test]
    fn generated_permutation_group() {
        let g = FiniteGroup::generated_by_permutations(4, &[vec![1, 2, 3, 0]]).unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.permutation(0).is_some());
    }
}
