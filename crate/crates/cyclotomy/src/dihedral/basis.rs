use crate::linalg::{Error, Result};
use crate::words::GroupElt;
use std::collections::HashMap;
use std::fmt;

/// The symbol I_{n_1..n_m}(g_1 : ... : g_{m+1}) indexing a basis vector of
/// the free ambient space before relations. The normalization g_{m+1} = e
/// (homogeneity) is baked in: only g_1..g_m are stored.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DihedralGenerator {
    /// (n_1, ..., n_m), n_i >= 1; the weight is their sum.
    pub exponents: Vec<u32>,
    /// (g_1, ..., g_m); g_{m+1} = e implicitly.
    pub args: Vec<GroupElt>,
}

impl DihedralGenerator {
    pub fn weight(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn depth(&self) -> u32 {
        self.exponents.len() as u32
    }
}

impl fmt::Display for DihedralGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I_{{")?;
        for (i, n) in self.exponents.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, "}}(")?;
        for g in &self.args {
            write!(f, "{g}:")?;
        }
        write!(f, "e)")
    }
}

/// Compositions of `total` into `parts` positive parts, lexicographic.
pub fn compositions(total: u32, parts: u32) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    if total < parts {
        return vec![];
    }
    fn rec(cur: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<Vec<u32>>) {
        let parts_left = cur.len() - pos;
        if parts_left == 1 {
            cur[pos] = remaining;
            out.push(cur.clone());
            return;
        }
        for v in 1..=remaining - (parts_left as u32 - 1) {
            cur[pos] = v;
            rec(cur, pos + 1, remaining - v, out);
        }
    }
    let mut out = Vec::new();
    let mut cur = vec![1u32; parts as usize];
    rec(&mut cur, 0, total, &mut out);
    out
}

/// The graded basis of the ambient space at (w, m, N): all symbols with
/// g_{m+1} = e, in a deterministic order (compositions lexicographic, then
/// argument tuples little-endian in the residues).
#[derive(Debug, Clone)]
pub struct GeneratorBasis {
    pub weight: u32,
    pub depth: u32,
    pub level: u32,
    comps: Vec<Vec<u32>>,
    comp_index: HashMap<Vec<u32>, usize>,
}

impl GeneratorBasis {
    pub fn new(weight: u32, depth: u32, level: u32) -> Result<Self> {
        if depth < 1 || level < 1 {
            return Err(Error::InvalidArgument(
                "depth and level must be >= 1".into(),
            ));
        }
        let comps = compositions(weight, depth);
        let comp_index = comps
            .iter()
            .enumerate()
            .map(|(i, c)| (c.clone(), i))
            .collect();
        Ok(GeneratorBasis {
            weight,
            depth,
            level,
            comps,
            comp_index,
        })
    }

    /// Number of generators: C(w-1, m-1) * N^m (0 when w < m).
    pub fn count(&self) -> usize {
        self.comps.len() * (self.level as usize).pow(self.depth)
    }

    pub fn compositions_list(&self) -> &[Vec<u32>] {
        &self.comps
    }

    fn radix(&self) -> usize {
        self.level as usize
    }

    pub fn index_of(&self, exponents: &[u32], args: &[GroupElt]) -> usize {
        debug_assert_eq!(exponents.len(), self.depth as usize);
        debug_assert_eq!(args.len(), self.depth as usize);
        let ci = *self
            .comp_index
            .get(exponents)
            .unwrap_or_else(|| panic!("composition {exponents:?} not in basis"));
        let mut a = 0usize;
        for g in args.iter().rev() {
            debug_assert_eq!(g.modulus(), self.level);
            a = a * self.radix() + g.residue() as usize;
        }
        ci * self.radix().pow(self.depth) + a
    }

    pub fn generator(&self, index: usize) -> DihedralGenerator {
        let radix = self.radix().pow(self.depth);
        let ci = index / radix;
        let mut a = index % radix;
        let mut args = Vec::with_capacity(self.depth as usize);
        for _ in 0..self.depth {
            args.push(GroupElt::new((a % self.radix()) as i64, self.level));
            a /= self.radix();
        }
        DihedralGenerator {
            exponents: self.comps[ci].clone(),
            args,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = DihedralGenerator> + '_ {
        (0..self.count()).map(|i| self.generator(i))
    }
}

/// All generators at (w, m, N) in the deterministic basis order.
pub fn enumerate_generators(weight: u32, depth: u32, level: u32) -> Result<GeneratorBasis> {
    GeneratorBasis::new(weight, depth, level)
}

/// All m-tuples over Z/N, little-endian order.
pub fn arg_tuples(depth: u32, level: u32) -> Vec<Vec<GroupElt>> {
    let total = (level as usize).pow(depth);
    let mut out = Vec::with_capacity(total);
    for mut a in 0..total {
        let mut tuple = Vec::with_capacity(depth as usize);
        for _ in 0..depth {
            tuple.push(GroupElt::new((a % level as usize) as i64, level));
            a /= level as usize;
        }
        out.push(tuple);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(3, 1), vec![vec![3]]);
        assert_eq!(compositions(4, 2), vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
        assert_eq!(compositions(2, 3), Vec::<Vec<u32>>::new());
    }

    #[test]
    fn basis_counts() {
        // (3,1,1) -> {I_3(e:e)}
        assert_eq!(GeneratorBasis::new(3, 1, 1).unwrap().count(), 1);
        // (4,2,1) -> three compositions
        assert_eq!(GeneratorBasis::new(4, 2, 1).unwrap().count(), 3);
        // (2,2,5) -> C(1,1) * 5^2
        assert_eq!(GeneratorBasis::new(2, 2, 5).unwrap().count(), 25);
        // empty when w < m
        assert_eq!(GeneratorBasis::new(1, 2, 1).unwrap().count(), 0);
    }

    #[test]
    fn index_roundtrip() {
        let b = GeneratorBasis::new(5, 2, 3).unwrap();
        for i in 0..b.count() {
            let g = b.generator(i);
            assert_eq!(b.index_of(&g.exponents, &g.args), i);
        }
    }
}
