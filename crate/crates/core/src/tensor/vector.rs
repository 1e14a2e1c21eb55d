use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_traits::Zero;

use super::rational::{format_coefficient, one, Rational};

/// Coordinates of a vector in a fixed basis (or of a covector in the dual basis).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    entries: Vec<Rational>,
}

impl Vector {
    pub fn new(entries: Vec<Rational>) -> Self {
        Vector { entries }
    }

    pub fn zeros(dim: usize) -> Self {
        Vector { entries: vec![Rational::zero(); dim] }
    }

    /// The basis vector `e_{index+1}` of a `dim`-dimensional space.
    pub fn basis(dim: usize, index: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.entries[index] = one();
        v
    }

    pub fn from_i64(values: &[i64]) -> Self {
        Vector { entries: values.iter().map(|&v| super::rat(v)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &Rational) -> Vector {
        Vector { entries: self.entries.iter().map(|x| x * s).collect() }
    }

    /// Indices (0-based) of nonzero coordinates.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.entries.iter().enumerate().filter(|(_, v)| !v.is_zero())
    }

    pub fn concat(&self, other: &Vector) -> Vector {
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Vector { entries }
    }
}

impl Index<usize> for Vector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.entries[i]
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        Vector { entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        Vector { entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector { entries: self.entries.iter().map(|a| -a).collect() }
    }
}

/// Prints as a linear combination of `e1, e2, ...`, e.g. `-e3` or `2e1 + 1/2e2`.
impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.support() {
            write!(f, "{}e{}", format_coefficient(c, first), i + 1)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_linear_combination() {
        assert_eq!(Vector::from_i64(&[0, 0, -1]).to_string(), "-e3");
        assert_eq!(Vector::from_i64(&[2, -1]).to_string(), "2e1 - e2");
        assert_eq!(Vector::zeros(2).to_string(), "0");
    }
}
