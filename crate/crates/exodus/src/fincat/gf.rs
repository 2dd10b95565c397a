//! Arithmetic in the small finite fields F_q, q ∈ {2, 3, 4, 5}, and dense
//! matrices over them. Enough for the desk-scale linear-algebra categories.

use crate::error::{Error, Result};

/// F_4 is F_2[t]/(t²+t+1) with elements {0, 1, t, t+1} encoded as 0..4.
const GF4_MUL: [[u8; 4]; 4] = [
    [0, 0, 0, 0],
    [0, 1, 2, 3],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
];

/// A prime-power field of order q ≤ 5.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Field {
    pub q: u8,
}

impl Field {
    pub fn new(q: u8) -> Result<Field> {
        match q {
            2 | 3 | 4 | 5 => Ok(Field { q }),
            _ => Err(Error::input(format!("unsupported field order {q} (want 2, 3, 4 or 5)"))),
        }
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        match self.q {
            4 => a ^ b,
            q => (a + b) % q,
        }
    }

    pub fn neg(&self, a: u8) -> u8 {
        match self.q {
            4 => a,
            q => (q - a) % q,
        }
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        match self.q {
            4 => GF4_MUL[a as usize][b as usize],
            q => (a * b) % q,
        }
    }

    pub fn inv(&self, a: u8) -> Option<u8> {
        (1..self.q).find(|&b| self.mul(a, b) == 1)
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.q
    }
}

/// A rows×cols matrix over `Field`, row-major. A matrix `V → W` has
/// `cols = dim V` and `rows = dim W`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<u8>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, entries: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    pub fn at(&self, r: usize, c: usize) -> u8 {
        self.entries[r * self.cols + c]
    }

    /// `self ∘ other`: apply `other` first. Requires `other.rows == self.cols`.
    pub fn compose(&self, field: &Field, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix dimensions do not compose");
        let mut out = Matrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = 0;
                for k in 0..self.cols {
                    acc = field.add(acc, field.mul(self.at(r, k), other.at(k, c)));
                }
                out.entries[r * other.cols + c] = acc;
            }
        }
        out
    }

    pub fn sub(&self, field: &Field, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| field.sub(a, b))
            .collect();
        Matrix { rows: self.rows, cols: self.cols, entries }
    }

    /// Gaussian elimination; square matrices only. The empty 0×0 matrix is
    /// invertible (identity of the zero space).
    pub fn is_invertible(&self, field: &Field) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let n = self.rows;
        let mut m = self.clone();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| m.at(r, col) != 0) else {
                return false;
            };
            if pivot != col {
                for c in 0..n {
                    m.entries.swap(pivot * n + c, col * n + c);
                }
            }
            let inv = field.inv(m.at(col, col)).expect("nonzero pivot");
            for r in (col + 1)..n {
                let factor = field.mul(m.at(r, col), inv);
                if factor == 0 {
                    continue;
                }
                for c in col..n {
                    let delta = field.mul(factor, m.at(col, c));
                    m.entries[r * n + c] = field.sub(m.at(r, c), delta);
                }
            }
        }
        true
    }

    /// All rows×cols matrices over the field, in lexicographic entry order.
    pub fn enumerate(field: &Field, rows: usize, cols: usize) -> Vec<Matrix> {
        let len = rows * cols;
        let mut out = Vec::new();
        let mut entries = vec![0u8; len];
        loop {
            out.push(Matrix { rows, cols, entries: entries.clone() });
            let mut i = len;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                entries[i] += 1;
                if entries[i] < field.q {
                    break;
                }
                entries[i] = 0;
            }
        }
    }

    /// Row-major entries as a digit string, e.g. `"0110"`; `"-"` for empty.
    pub fn entry_digits(&self) -> String {
        if self.entries.is_empty() {
            return "-".into();
        }
        self.entries.iter().map(|e| char::from(b'0' + e)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_spot_checks() {
        for q in [2u8, 3, 4, 5] {
            let f = Field::new(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    let inv = f.inv(a).unwrap();
                    assert_eq!(f.mul(a, inv), 1);
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    }
                }
            }
        }
    }

    #[test]
    fn gf4_has_order_3_unit() {
        let f = Field::new(4).unwrap();
        // t³ = 1 and t ≠ 1: multiplicative group is cyclic of order 3
        let t = 2u8;
        assert_eq!(f.mul(f.mul(t, t), t), 1);
    }

    #[test]
    fn invertibility_0x0_and_singular() {
        let f = Field::new(2).unwrap();
        assert!(Matrix::identity(0).is_invertible(&f));
        assert!(Matrix::identity(2).is_invertible(&f));
        assert!(!Matrix::zero(1, 1).is_invertible(&f));
        let singular = Matrix { rows: 2, cols: 2, entries: vec![1, 1, 1, 1] };
        assert!(!singular.is_invertible(&f));
    }

    #[test]
    fn enumerate_counts() {
        let f = Field::new(3).unwrap();
        assert_eq!(Matrix::enumerate(&f, 2, 1).len(), 9);
        assert_eq!(Matrix::enumerate(&f, 0, 2).len(), 1);
    }

    #[test]
    fn invertible_count_gl2_f2() {
        let f = Field::new(2).unwrap();
        let count = Matrix::enumerate(&f, 2, 2)
            .into_iter()
            .filter(|m| m.is_invertible(&f))
            .count();
        assert_eq!(count, 6); // |GL_2(F_2)| = (4-1)(4-2)
    }
}
