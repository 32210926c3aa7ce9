use super::subgroup::Subgroup;
use super::table::GroupTable;

/// One conjugacy class; the representative is its least element index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    pub representative: usize,
    pub members: Vec<usize>,
}

impl ConjClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Conjugacy classes, the element-to-class map and the full power map.
///
/// Classes are sorted by (order of representative, class size, least member),
/// so the identity class is always class 0.
#[derive(Clone, Debug)]
pub struct ConjClassSet {
    classes: Vec<ConjClass>,
    class_of: Vec<usize>,
    exponent: usize,
    /// `power[c][k]` is the class of `g^k` for `g` in class `c`, `0 <= k < exponent`.
    power: Vec<Vec<usize>>,
}

impl ConjClassSet {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn class(&self, c: usize) -> &ConjClass {
        &self.classes[c]
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(ConjClass::size).collect()
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    /// Class of `g^k` for `g` in class `c`; any integer `k` (reduced mod the exponent).
    pub fn power_map(&self, c: usize, k: i64) -> usize {
        let e = self.exponent as i64;
        self.power[c][k.rem_euclid(e) as usize]
    }

    /// Class containing the inverses of class `c`.
    pub fn inverse_class(&self, c: usize) -> usize {
        self.power_map(c, -1)
    }
}

pub fn conjugacy_classes(g: &GroupTable) -> ConjClassSet {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut raw: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = raw.len();
        let mut orbit = vec![start];
        class_of[start] = id;
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for &h in g.generators() {
                let y = g.conj(x, h);
                if class_of[y] == usize::MAX {
                    class_of[y] = id;
                    orbit.push(y);
                }
            }
        }
        orbit.sort_unstable();
        raw.push(orbit);
    }
    raw.sort_by(|a, b| {
        (g.element_order(a[0]), a.len(), a[0]).cmp(&(g.element_order(b[0]), b.len(), b[0]))
    });
    let classes: Vec<ConjClass> = raw
        .into_iter()
        .map(|members| ConjClass {
            representative: members[0],
            members,
        })
        .collect();
    for (c, cl) in classes.iter().enumerate() {
        for &m in &cl.members {
            class_of[m] = c;
        }
    }
    let exponent = g.exponent();
    let power = classes
        .iter()
        .map(|cl| {
            let x = cl.representative;
            let mut row = Vec::with_capacity(exponent);
            let mut y = 0;
            for _ in 0..exponent {
                row.push(class_of[y]);
                y = g.mul(y, x);
            }
            row
        })
        .collect();
    ConjClassSet {
        classes,
        class_of,
        exponent,
        power,
    }
}

impl GroupTable {
    pub fn centralizer(&self, x: usize) -> Subgroup {
        let mask = (0..self.order()).map(|g| self.commute(g, x)).collect();
        Subgroup::from_mask(mask)
    }

    pub fn center(&self) -> Subgroup {
        let mask = (0..self.order())
            .map(|z| self.generators().iter().all(|&h| self.commute(z, h)))
            .collect();
        Subgroup::from_mask(mask)
    }

    /// Normal closure of the commutators of the generators.
    pub fn derived_subgroup(&self) -> Subgroup {
        let gens = self.generators();
        let mut comms = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                let c = self.commutator(a, b);
                if c != 0 {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms)
    }

    /// Smallest normal subgroup containing `set`.
    pub fn normal_closure(&self, set: &[usize]) -> Subgroup {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut orbit: Vec<usize> = Vec::new();
        for &s in set {
            if !seen[s] {
                seen[s] = true;
                orbit.push(s);
            }
        }
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for &h in self.generators() {
                let y = self.conj(x, h);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
        }
        orbit.sort_unstable();
        self.subgroup_generated_by_set(orbit)
    }

    /// `{g : g^-1 H g = H}`
    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let hg = self.subgroup_generators_of(h);
        let mask = (0..self.order())
            .map(|g| hg.iter().all(|&x| h.contains(self.conj(x, g))))
            .collect();
        Subgroup::from_mask(mask)
    }

    /// `g^-1 H g`
    pub fn conjugate_subgroup(&self, h: &Subgroup, g: usize) -> Subgroup {
        Subgroup::from_members(
            self.order(),
            h.members().iter().map(|&x| self.conj(x, g)).collect(),
        )
    }
}
