//! Finite groups as multiplication tables, for constant supergroups.

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    /// table[a][b] = index of a·b
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("table is not square of size {0}")]
    Shape(usize),
    #[error("table entry out of range at ({0},{1})")]
    Range(usize, usize),
    #[error("no identity element")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("associativity fails at ({0},{1},{2})")]
    Associativity(usize, usize, usize),
    #[error("duplicate element name {0}")]
    DuplicateName(String),
    #[error("subset is not a subgroup")]
    NotSubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
}

impl FiniteGroup {
    pub fn from_table(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<FiniteGroup, GroupError> {
        let n = names.len();
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(GroupError::DuplicateName(name.clone()));
            }
        }
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(GroupError::Shape(n));
        }
        for (a, row) in table.iter().enumerate() {
            for (b, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::Range(a, b));
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or(GroupError::NoIdentity)?;
        let mut inverse = vec![0usize; n];
        for a in 0..n {
            inverse[a] = (0..n).find(|&b| table[a][b] == identity && table[b][a] == identity).ok_or(GroupError::NoInverse(a))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(GroupError::Associativity(a, b, c));
                    }
                }
            }
        }
        Ok(FiniteGroup { names, table, identity, inverse })
    }

    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n >= 1);
        let names = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::from_table(names, table).unwrap()
    }

    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let n = self.order();
        let m = other.order();
        let mut names = Vec::with_capacity(n * m);
        for a in 0..n {
            for b in 0..m {
                names.push(format!("{}{}", self.names[a], other.names[b]));
            }
        }
        let idx = |a: usize, b: usize| a * m + b;
        let mut table = vec![vec![0; n * m]; n * m];
        for a1 in 0..n {
            for b1 in 0..m {
                for a2 in 0..n {
                    for b2 in 0..m {
                        table[idx(a1, b1)][idx(a2, b2)] = idx(self.table[a1][a2], other.table[b1][b2]);
                    }
                }
            }
        }
        FiniteGroup::from_table(names, table).unwrap()
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

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn find(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_subgroup(&self, elems: &[usize]) -> bool {
        !elems.is_empty()
            && elems.contains(&self.identity)
            && elems.iter().all(|&a| {
                elems.contains(&self.inverse[a]) && elems.iter().all(|&b| elems.contains(&self.table[a][b]))
            })
    }

    pub fn is_normal(&self, elems: &[usize]) -> bool {
        self.is_subgroup(elems)
            && (0..self.order()).all(|g| {
                elems.iter().all(|&h| elems.contains(&self.table[self.table[g][h]][self.inverse[g]]))
            })
    }

    /// Quotient by a normal subgroup: returns the quotient group and the
    /// projection index map. Coset names list their members.
    pub fn quotient(&self, normal: &[usize]) -> Result<(FiniteGroup, Vec<usize>), GroupError> {
        if !self.is_subgroup(normal) {
            return Err(GroupError::NotSubgroup);
        }
        if !self.is_normal(normal) {
            return Err(GroupError::NotNormal);
        }
        let n = self.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let c = reps.len();
            for &h in normal {
                coset_of[self.table[g][h]] = c;
            }
            reps.push(g);
        }
        let q = reps.len();
        let mut table = vec![vec![0; q]; q];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                table[i][j] = coset_of[self.table[a][b]];
            }
        }
        let names = reps
            .iter()
            .map(|&r| {
                let mut members: Vec<&str> = (0..n).filter(|&g| coset_of[g] == coset_of[r]).map(|g| self.name(g)).collect();
                members.sort();
                format!("[{}]", members.join(","))
            })
            .collect();
        let quotient = FiniteGroup::from_table(names, table)?;
        Ok((quotient, coset_of))
    }
}
