//! Circulant graphs `C_n(S)` in canonical form.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::GenericGraph;

/// Folds raw jump values into `[1, n/2]`: each value is reduced modulo `n`,
/// zeros are dropped and `s` is identified with `n - s`.
pub fn normalize_jumps<I>(n: usize, raw: I) -> Result<Vec<usize>>
where
    I: IntoIterator<Item = i64>,
{
    if n < 2 {
        return Err(Error::OrderTooSmall(n));
    }
    let modulus = n as i64;
    let mut jumps: Vec<usize> = raw
        .into_iter()
        .map(|s| s.rem_euclid(modulus) as usize)
        .filter(|&s| s != 0)
        .map(|s| s.min(n - s))
        .collect();
    jumps.sort_unstable();
    jumps.dedup();
    if jumps.is_empty() {
        return Err(Error::EmptyJumpSet { n });
    }
    Ok(jumps)
}

/// Order plus canonical jump set of a circulant graph.
///
/// Two specs compare equal exactly when they describe the same graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CirculantSpec {
    n: usize,
    jumps: Vec<usize>,
}

impl CirculantSpec {
    pub fn new<I>(n: usize, raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = i64>,
    {
        Ok(Self {
            n,
            jumps: normalize_jumps(n, raw)?,
        })
    }

    /// Double loop network `C_n(1, a)`.
    pub fn double_loop(n: usize, a: usize) -> Result<Self> {
        Self::new(n, [1, a as i64])
    }

    /// Multiplicative circulant `C_{m^h}(1, m, ..., m^{h-1})`.
    ///
    /// # Panics
    /// If `m < 2`, `h == 0` or `m^h` overflows `usize`.
    pub fn multiplicative(m: usize, h: u32) -> Result<Self> {
        assert!(
            m >= 2 && h >= 1,
            "multiplicative circulant needs m >= 2, h >= 1"
        );
        let n = m.checked_pow(h).expect("m^h overflows usize");
        Self::new(n, (0..h).map(|i| m.pow(i) as i64))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn jumps(&self) -> &[usize] {
        &self.jumps
    }

    /// Whether the antipodal jump `n/2` is present.
    pub fn has_antipodal_jump(&self) -> bool {
        self.n.is_multiple_of(2) && self.jumps.last() == Some(&(self.n / 2))
    }

    /// Common vertex degree: `2k - 1` when `n/2` is a jump, else `2k`.
    pub fn degree(&self) -> usize {
        2 * self.jumps.len() - usize::from(self.has_antipodal_jump())
    }

    pub fn edge_count(&self) -> usize {
        self.n * self.degree() / 2
    }

    /// Membership table over residues: `mask[d]` is true iff `v ~ v + d`.
    pub fn offset_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.n];
        for &j in &self.jumps {
            mask[j] = true;
            mask[self.n - j] = true;
        }
        mask
    }

    /// All residues `d` with `0 ~ d`, ascending.
    pub fn offsets(&self) -> Vec<usize> {
        self.offset_mask()
            .iter()
            .enumerate()
            .filter_map(|(d, &on)| on.then_some(d))
            .collect()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        let d = (v + self.n - u) % self.n;
        let d = d.min(self.n - d);
        d != 0 && self.jumps.binary_search(&d).is_ok()
    }

    /// The complement circulant, whose jumps are `{1..n/2}` minus these.
    pub fn complement(&self) -> Result<Self> {
        let jumps: Vec<usize> = (1..=self.n / 2)
            .filter(|j| self.jumps.binary_search(j).is_err())
            .collect();
        if jumps.is_empty() {
            return Err(Error::EmptyComplement { n: self.n });
        }
        Ok(Self { n: self.n, jumps })
    }

    /// Materializes the graph: `v` is adjacent to `v ± j (mod n)` for every jump.
    pub fn build(&self) -> GenericGraph {
        let offsets = self.offsets();
        let n = self.n;
        let adjacency = (0..n)
            .map(|v| {
                let mut ns: Vec<usize> = offsets.iter().map(|&d| (v + d) % n).collect();
                ns.sort_unstable();
                ns
            })
            .collect();
        GenericGraph::from_sorted_adjacency(adjacency)
    }
}

impl fmt::Display for CirculantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C_{}(", self.n)?;
        for (i, j) in self.jumps.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{j}")?;
        }
        f.write_str(")")
    }
}

/// Free-function form of [`CirculantSpec::build`].
pub fn build_circulant(spec: &CirculantSpec) -> GenericGraph {
    spec.build()
}

/// Free-function form of [`CirculantSpec::complement`].
pub fn complement_spec(spec: &CirculantSpec) -> Result<CirculantSpec> {
    spec.complement()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn normalization_examples() {
        assert_eq!(normalize_jumps(16, [1, 3]).unwrap(), vec![1, 3]);
        assert_eq!(normalize_jumps(16, [13, 1]).unwrap(), vec![1, 3]);
        assert_eq!(normalize_jumps(8, [4, 12, 0]).unwrap(), vec![4]);
        assert_eq!(normalize_jumps(7, [-1, 6, 8]).unwrap(), vec![1]);
        assert_eq!(
            normalize_jumps(5, [0, 5, -10]),
            Err(Error::EmptyJumpSet { n: 5 })
        );
        assert_eq!(normalize_jumps(1, [1]), Err(Error::OrderTooSmall(1)));
    }

    #[test]
    fn degrees_follow_the_antipodal_rule() {
        let g = CirculantSpec::new(8, [1, 4]).unwrap().build();
        assert_eq!(g.order(), 8);
        assert_eq!(g.regularity(), Some(3));
        let g = CirculantSpec::new(16, [1, 3]).unwrap().build();
        assert_eq!(g.regularity(), Some(4));
        let k4 = CirculantSpec::new(4, [1, 2]).unwrap().build();
        assert_eq!(k4, GenericGraph::complete(4));
    }

    #[test]
    fn complement_examples() {
        let s = CirculantSpec::new(8, [1, 4]).unwrap();
        assert_eq!(s.complement().unwrap().jumps(), &[2, 3]);
        let s = CirculantSpec::new(8, [1, 3]).unwrap();
        assert_eq!(s.complement().unwrap().jumps(), &[2, 4]);
        let s = CirculantSpec::new(4, [1, 2]).unwrap();
        assert_eq!(s.complement(), Err(Error::EmptyComplement { n: 4 }));
    }

    #[test]
    fn generic_complement_matches_spec_complement() {
        let s = CirculantSpec::new(8, [1, 4]).unwrap();
        assert_eq!(s.build().complement(), s.complement().unwrap().build());
    }

    #[test]
    fn family_constructors() {
        let s = CirculantSpec::multiplicative(2, 3).unwrap();
        assert_eq!((s.order(), s.jumps()), (8, &[1, 2, 4][..]));
        assert_eq!(s.degree(), 5);
        let s = CirculantSpec::multiplicative(3, 2).unwrap();
        assert_eq!((s.order(), s.jumps()), (9, &[1, 3][..]));
        assert_eq!(CirculantSpec::double_loop(10, 3).unwrap().jumps(), &[1, 3]);
        assert_eq!(s.to_string(), "C_9(1,3)");
    }

    fn arb_spec() -> impl Strategy<Value = CirculantSpec> {
        (2usize..=512).prop_flat_map(|n| {
            proptest::collection::vec(-(n as i64) * 2..(n as i64) * 2, 1..8)
                .prop_filter_map("jumps vanish mod n", move |raw| {
                    CirculantSpec::new(n, raw).ok()
                })
        })
    }

    proptest! {
        #[test]
        fn normalization_is_idempotent(spec in arb_spec()) {
            let again = CirculantSpec::new(spec.order(), spec.jumps().iter().map(|&j| j as i64)).unwrap();
            prop_assert_eq!(&again, &spec);
            prop_assert!(spec.jumps().iter().all(|&j| 1 <= j && j <= spec.order() / 2));
        }

        #[test]
        fn degree_law(spec in arb_spec()) {
            let g = spec.build();
            let k = spec.jumps().len();
            let expected = if spec.order() % 2 == 0 && spec.jumps().contains(&(spec.order() / 2)) {
                2 * k - 1
            } else {
                2 * k
            };
            prop_assert_eq!(g.regularity(), Some(expected));
            prop_assert_eq!(g.edge_count(), spec.edge_count());
        }

        #[test]
        fn complement_is_an_involution(spec in arb_spec()) {
            if let Ok(c) = spec.complement() {
                prop_assert_eq!(c.complement().unwrap(), spec.clone());
                prop_assert_eq!(spec.build().complement(), c.build());
            }
        }

        #[test]
        fn adjacency_is_rotation_invariant(spec in arb_spec()) {
            let g = spec.build();
            let n = spec.order();
            for u in 0..n {
                for &v in g.neighbors(u) {
                    prop_assert!(g.has_edge((u + 1) % n, (v + 1) % n));
                    prop_assert!(spec.is_adjacent(u, v));
                }
            }
        }
    }
}
