use crate::error::{invalid, Result};
use serde::{Deserialize, Serialize};

/// A finite group given by its multiplication table.
///
/// `table[a][b]` is the index of `a · b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl FiniteGroup {
    /// Builds a group, checking the group axioms.
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<FiniteGroup> {
        let n = names.len();
        if n == 0 {
            return invalid("a group needs at least one element");
        }
        if table.len() != n || table.iter().any(|row| row.len() != n || row.iter().any(|&c| c >= n)) {
            return invalid("multiplication table has the wrong shape");
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| crate::error::Error::Invalid("no identity element".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return invalid(format!("not associative at ({}, {}, {})", names[a], names[b], names[c]));
                    }
                }
            }
            if !(0..n).any(|b| table[a][b] == identity) {
                return invalid(format!("{} has no inverse", names[a]));
            }
        }
        Ok(FiniteGroup { names, table, identity })
    }

    /// The cyclic group `Z/n` with elements `0..n`.
    pub fn cyclic(n: usize) -> FiniteGroup {
        let names = (0..n).map(|a| a.to_string()).collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::new(names, table).expect("cyclic group")
    }

    /// The trivial group.
    pub fn trivial() -> FiniteGroup {
        FiniteGroup::cyclic(1)
    }

    /// The symmetric group on three letters; `a · b` applies `b` first.
    pub fn symmetric3() -> FiniteGroup {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let names = ["e", "(01)", "(12)", "(02)", "(012)", "(021)"].iter().map(|s| s.to_string()).collect();
        let table = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| {
                        let r = [p[q[0]], p[q[1]], p[q[2]]];
                        perms.iter().position(|s| *s == r).expect("closed")
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::new(names, table).expect("symmetric group")
    }

    /// The direct product, with elements named `(a|b)`.
    pub fn product(&self, other: &FiniteGroup) -> FiniteGroup {
        let m = other.order();
        let mut names = Vec::new();
        for a in &self.names {
            for b in &other.names {
                names.push(format!("({a}|{b})"));
            }
        }
        let n = self.order() * m;
        let table =
            (0..n).map(|x| (0..n).map(|y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m)).collect()).collect();
        FiniteGroup::new(names, table).expect("product group")
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.table[a][b] == self.identity).expect("group has inverses")
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// True when `map` is a homomorphism into `other`.
    pub fn is_hom(&self, map: &[usize], other: &FiniteGroup) -> bool {
        map.len() == self.order()
            && (0..self.order()).all(|a| (0..self.order()).all(|b| map[self.mul(a, b)] == other.mul(map[a], map[b])))
    }

    /// True when `map` is a bijective homomorphism onto `other`.
    pub fn is_iso(&self, map: &[usize], other: &FiniteGroup) -> bool {
        if self.order() != other.order() || !self.is_hom(map, other) {
            return false;
        }
        let mut seen = vec![false; other.order()];
        map.iter().all(|&b| !std::mem::replace(&mut seen[b], true))
    }

    /// Some isomorphism onto `other`, found by backtracking.
    pub fn find_isomorphism(&self, other: &FiniteGroup) -> Option<Vec<usize>> {
        if self.order() != other.order() {
            return None;
        }
        let n = self.order();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        map[self.identity] = other.identity;
        used[other.identity] = true;
        fn rec(g: &FiniteGroup, h: &FiniteGroup, a: usize, map: &mut [usize], used: &mut [bool]) -> bool {
            let n = g.order();
            if a == n {
                return g.is_hom(map, h);
            }
            if map[a] != usize::MAX {
                return rec(g, h, a + 1, map, used);
            }
            for b in 0..n {
                if used[b] {
                    continue;
                }
                map[a] = b;
                used[b] = true;
                let consistent = (0..a + 1).all(|x| {
                    (0..a + 1).all(|y| {
                        let xy = g.mul(x, y);
                        map[x] == usize::MAX
                            || map[y] == usize::MAX
                            || map[xy] == usize::MAX
                            || map[xy] == h.mul(map[x], map[y])
                    })
                });
                if consistent && rec(g, h, a + 1, map, used) {
                    return true;
                }
                map[a] = usize::MAX;
                used[b] = false;
            }
            false
        }
        if rec(self, other, 0, &mut map, &mut used) {
            Some(map)
        } else {
            None
        }
    }

    pub fn is_isomorphic(&self, other: &FiniteGroup) -> bool {
        self.find_isomorphism(other).is_some()
    }

    pub fn to_json(&self) -> GroupJson {
        GroupJson {
            format: 1,
            elements: self.names.clone(),
            mul: self.table.iter().map(|row| row.iter().map(|&c| self.names[c].clone()).collect()).collect(),
        }
    }

    pub fn from_json(j: &GroupJson) -> Result<FiniteGroup> {
        let idx = |s: &str| {
            j.elements
                .iter()
                .position(|e| e == s)
                .ok_or_else(|| crate::error::Error::Parse(format!("unknown element {s:?}")))
        };
        let table = j
            .mul
            .iter()
            .map(|row| row.iter().map(|s| idx(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        FiniteGroup::new(j.elements.clone(), table)
    }
}

/// Serialized form of a finite group: `mul[a][b]` names `a · b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupJson {
    pub format: u32,
    pub elements: Vec<String>,
    pub mul: Vec<Vec<String>>,
}
