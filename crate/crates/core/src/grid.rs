//! Dense numbering of coordinate tuples in `[n]^k`.

use crate::error::{Error, Result};

/// Bijection between 1-based tuples in `X_1 x ... x X_k` (each `X_i = [n]`)
/// and vertex ids in `[0, n^k)`. Row-major: coordinate 1 is most significant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridIndexer {
    k: usize,
    n: usize,
    len: usize,
}

impl GridIndexer {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k == 0 || n == 0 {
            return Err(Error::InvalidParameter(format!(
                "grid needs k >= 1 and n >= 1 (got k={k}, n={n})"
            )));
        }
        let len = (0..k)
            .try_fold(1usize, |acc, _| acc.checked_mul(n))
            .filter(|&l| l <= u32::MAX as usize)
            .ok_or_else(|| Error::InvalidParameter(format!("grid {n}^{k} is too large")))?;
        Ok(Self { k, n, len })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of tuples, `n^k`.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn encode(&self, coords: &[u32]) -> Result<u32> {
        if coords.len() != self.k {
            return Err(Error::InvalidParameter(format!(
                "expected a {}-tuple, got {} coordinates",
                self.k,
                coords.len()
            )));
        }
        let mut id = 0usize;
        for &c in coords {
            if c == 0 || c as usize > self.n {
                return Err(Error::InvalidParameter(format!(
                    "coordinate {c} outside [1, {}]",
                    self.n
                )));
            }
            id = id * self.n + (c as usize - 1);
        }
        Ok(id as u32)
    }

    pub fn decode(&self, id: u32) -> Result<Vec<u32>> {
        if id as usize >= self.len {
            return Err(Error::VertexOutOfRange {
                vertex: id as u64,
                num_vertices: self.len,
            });
        }
        let mut coords = vec![0u32; self.k];
        let mut rest = id as usize;
        for slot in coords.iter_mut().rev() {
            *slot = (rest % self.n) as u32 + 1;
            rest /= self.n;
        }
        Ok(coords)
    }

    /// All tuples in id order.
    pub fn tuples(&self) -> impl Iterator<Item = Vec<u32>> + '_ {
        (0..self.len as u32).map(move |id| self.decode(id).expect("id in range"))
    }

    /// Coordinate labels for every vertex, index-aligned with ids.
    pub fn labels(&self) -> Vec<Vec<u32>> {
        self.tuples().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bijection_exhaustive_small() {
        for k in 1..=4 {
            for n in 1..=6 {
                let g = GridIndexer::new(k, n).unwrap();
                assert_eq!(g.len(), n.pow(k as u32));
                for id in 0..g.len() as u32 {
                    let t = g.decode(id).unwrap();
                    assert_eq!(g.encode(&t).unwrap(), id);
                }
            }
        }
    }

    #[test]
    fn row_major() {
        let g = GridIndexer::new(2, 3).unwrap();
        assert_eq!(g.encode(&[1, 1]).unwrap(), 0);
        assert_eq!(g.encode(&[1, 3]).unwrap(), 2);
        assert_eq!(g.encode(&[2, 1]).unwrap(), 3);
        assert_eq!(g.decode(8).unwrap(), vec![3, 3]);
    }

    #[test]
    fn rejects_bad_input() {
        let g = GridIndexer::new(2, 3).unwrap();
        assert!(g.encode(&[0, 1]).is_err());
        assert!(g.encode(&[4, 1]).is_err());
        assert!(g.encode(&[1]).is_err());
        assert!(g.decode(9).is_err());
        assert!(GridIndexer::new(0, 3).is_err());
    }
}
