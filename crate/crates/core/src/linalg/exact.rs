use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};

pub type Q = BigRational;

pub fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

/// Row-echelon form over the rationals, built one sparse row at a time.
/// Pivot rows are normalised to a leading `1`.
#[derive(Debug, Clone)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<BTreeMap<usize, Q>>,
    pivot_row: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Self { ncols, rows: Vec::new(), pivot_row: HashMap::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut row: BTreeMap<usize, Q>) -> BTreeMap<usize, Q> {
        let mut col = 0;
        loop {
            let next = row.range(col..).find(|(k, _)| self.pivot_row.contains_key(k)).map(|(k, v)| (*k, v.clone()));
            let Some((k, v)) = next else { break };
            for (c, pv) in &self.rows[self.pivot_row[&k]] {
                let e = row.entry(*c).or_insert_with(Q::zero);
                *e -= &v * pv;
                if e.is_zero() {
                    row.remove(c);
                }
            }
            col = k + 1;
        }
        row
    }

    /// Inserts a row; returns `true` when it raised the rank.
    pub fn insert(&mut self, row: impl IntoIterator<Item = (usize, Q)>) -> bool {
        let row: BTreeMap<usize, Q> = row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        assert!(row.keys().all(|&c| c < self.ncols), "column out of range");
        let row = self.reduce(row);
        let Some((&lead, lv)) = row.iter().next() else { return false };
        let inv = Q::one() / lv.clone();
        let row: BTreeMap<usize, Q> = row.into_iter().map(|(c, v)| (c, v * &inv)).collect();
        self.pivot_row.insert(lead, self.rows.len());
        self.rows.push(row);
        true
    }

    pub fn insert_dense(&mut self, row: &[Q]) -> bool {
        self.insert(row.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())))
    }

    /// Whether the row lies in the current row span.
    pub fn contains(&self, row: impl IntoIterator<Item = (usize, Q)>) -> bool {
        let row: BTreeMap<usize, Q> = row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        self.reduce(row).is_empty()
    }

    /// Basis of `{x : r·x = 0 for every inserted row r}`, one vector per free
    /// column.
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        let mut pivots: Vec<usize> = self.pivot_row.keys().copied().collect();
        pivots.sort_unstable();
        let mut reduced: BTreeMap<usize, BTreeMap<usize, Q>> = BTreeMap::new();
        for &p in pivots.iter().rev() {
            let mut row = self.rows[self.pivot_row[&p]].clone();
            let later: Vec<(usize, Q)> =
                row.iter().filter(|(c, _)| **c != p && reduced.contains_key(c)).map(|(c, v)| (*c, v.clone())).collect();
            for (c, v) in later {
                for (cc, rv) in &reduced[&c] {
                    let e = row.entry(*cc).or_insert_with(Q::zero);
                    *e -= &v * rv;
                    if e.is_zero() {
                        row.remove(cc);
                    }
                }
            }
            reduced.insert(p, row);
        }
        let free: Vec<usize> = (0..self.ncols).filter(|c| !self.pivot_row.contains_key(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Q::zero(); self.ncols];
                x[f] = Q::one();
                for (p, row) in &reduced {
                    if let Some(v) = row.get(&f) {
                        x[*p] = -v.clone();
                    }
                }
                x
            })
            .collect()
    }
}
