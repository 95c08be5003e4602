//! Dense matrices over GF(2), rows packed into 64-bit words.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    words: usize,
    bits: Vec<u64>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64).max(1);
        F2Matrix {
            rows,
            cols,
            words,
            bits: vec![0; rows * words],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Rows given as 0/1 entries; any odd integer counts as 1.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.as_ref().len(), cols, "ragged rows");
            for (j, &x) in r.as_ref().iter().enumerate() {
                m.set(i, j, x % 2 == 1);
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, cols: &[Vec<bool>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, &x) in c.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        let w = &mut self.bits[i * self.words + j / 64];
        if v {
            *w |= 1 << (j % 64);
        } else {
            *w &= !(1 << (j % 64));
        }
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let w = self.words;
        for k in 0..w {
            let v = self.bits[src * w + k];
            self.bits[dst * w + k] ^= v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            let w = self.words;
            for k in 0..w {
                self.bits.swap(a * w + k, b * w + k);
            }
        }
    }

    pub fn column(&self, j: usize) -> Vec<bool> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) as u8).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    t.set(j, i, true);
                }
            }
        }
        t
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut m = self.clone();
        for (a, b) in m.bits.iter_mut().zip(&other.bits) {
            *a ^= b;
        }
        m
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut m = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.get(i, k) {
                    for w in 0..m.words {
                        m.bits[i * m.words + w] ^= other.bits[k * other.words + w];
                    }
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[bool]) -> Vec<bool> {
        (0..self.rows)
            .map(|i| (0..self.cols).filter(|&j| self.get(i, j) && v[j]).count() % 2 == 1)
            .collect()
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.mul(other) == other.mul(self)
    }

    pub fn kron(&self, other: &Self) -> Self {
        let mut m = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self.get(i, j) {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        if other.get(k, l) {
                            m.set(i * other.rows + k, j * other.cols + l, true);
                        }
                    }
                }
            }
        }
        m
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut m = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j));
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m.set(self.rows + i, self.cols + j, other.get(i, j));
            }
        }
        m
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut m = Self::zeros(self.rows + other.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j));
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m.set(self.rows + i, j, other.get(i, j));
            }
        }
        m
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c)) else {
                continue;
            };
            self.swap_rows(p, r);
            for i in 0..self.rows {
                if i != r && self.get(i, c) {
                    self.xor_row_into(r, i);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the null space, as column vectors.
    pub fn kernel(&self) -> Vec<Vec<bool>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![false; self.cols];
                v[f] = true;
                for (r, &p) in pivots.iter().enumerate() {
                    if m.get(r, f) {
                        v[p] = true;
                    }
                }
                v
            })
            .collect()
    }

    /// Basis of the column space.
    pub fn image(&self) -> Vec<Vec<bool>> {
        let pivots = self.clone().rref();
        pivots.iter().map(|&c| self.column(c)).collect()
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, true);
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j));
            }
        }
        Some(inv)
    }

    pub fn det(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Some `x` with `self * x = y`, if the system is consistent.
    pub fn solve(&self, y: &Self) -> Option<Self> {
        assert_eq!(self.rows, y.rows);
        let (n, k) = (self.cols, y.cols);
        let mut aug = Self::zeros(self.rows, n + k);
        for i in 0..self.rows {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            for j in 0..k {
                aug.set(i, n + j, y.get(i, j));
            }
        }
        let pivots = aug.rref();
        if pivots.iter().any(|&p| p >= n) {
            return None;
        }
        let mut x = Self::zeros(n, k);
        for (r, &p) in pivots.iter().enumerate() {
            for j in 0..k {
                x.set(p, j, aug.get(r, n + j));
            }
        }
        Some(x)
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let line: String = (0..self.cols)
                .map(|j| if self.get(i, j) { '1' } else { '0' })
                .collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_rank() {
        let m = F2Matrix::from_rows(&[[0, 0, 1], [0, 1, 0], [1, 0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), F2Matrix::identity(3));
        assert_eq!(
            inv.to_rows(),
            vec![vec![1, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]
        );
        let singular = F2Matrix::from_rows(&[[1, 1], [1, 1]]);
        assert!(singular.inverse().is_none());
        assert_eq!(singular.rank(), 1);
    }

    #[test]
    fn kernel_vectors_vanish() {
        let m = F2Matrix::from_rows(&[[1, 1, 0, 1], [0, 1, 1, 0]]);
        let ker = m.kernel();
        assert_eq!(ker.len(), 2);
        for v in ker {
            assert!(m.mul_vec(&v).iter().all(|&x| !x));
        }
    }

    #[test]
    fn wide_rows_cross_word_boundary() {
        let mut m = F2Matrix::zeros(2, 130);
        m.set(0, 129, true);
        m.set(1, 64, true);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.transpose().transpose(), m);
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = F2Matrix::from_rows(&[[1, 0], [1, 0]]);
        let y = F2Matrix::from_rows(&[[1], [1]]);
        let x = a.solve(&y).unwrap();
        assert_eq!(a.mul(&x), y);
        assert!(a.solve(&F2Matrix::from_rows(&[[1], [0]])).is_none());
    }
}
