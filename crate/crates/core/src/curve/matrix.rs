use crate::poly::{Field, Polynomial, Ring};

use super::CurveError;

/// A dense matrix of polynomials over one ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix<F: Field> {
    ring: Ring<F>,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial<F>>,
}

impl<F: Field> PolyMatrix<F> {
    pub fn from_rows(ring: &Ring<F>, rows: Vec<Vec<Polynomial<F>>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        PolyMatrix {
            ring: ring.clone(),
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn zeros(ring: &Ring<F>, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![Polynomial::zero(ring); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial<F> {
        &self.entries[i * self.cols + j]
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, CurveError> {
        if self.cols != other.rows {
            return Err(CurveError::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols {
                    acc = &acc + &(self.get(i, k) * other.get(k, j));
                }
                entries.push(acc);
            }
        }
        Ok(PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Square with `M + M^T = 0` (so the diagonal vanishes).
    pub fn is_skew(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| (self.get(i, j) + self.get(j, i)).is_zero())
            })
    }

    /// Submatrix on the given rows and columns.
    pub fn minor_matrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix {
            ring: self.ring.clone(),
            rows: rows.len(),
            cols: cols.len(),
            entries,
        }
    }

    /// Determinant of a 2x2 matrix.
    pub fn det2(&self) -> Result<Polynomial<F>, CurveError> {
        if self.rows != 2 || self.cols != 2 {
            return Err(CurveError::Shape("det2 needs a 2x2 matrix".into()));
        }
        Ok(&(self.get(0, 0) * self.get(1, 1)) - &(self.get(0, 1) * self.get(1, 0)))
    }
}

/// Pfaffian of a skew-symmetric matrix of even size (Laplace expansion along
/// the first row). Size 0 gives 1.
pub fn pfaffian<F: Field>(m: &PolyMatrix<F>) -> Result<Polynomial<F>, CurveError> {
    if !m.is_skew() {
        return Err(CurveError::NotSkew);
    }
    if m.rows() % 2 == 1 {
        return Err(CurveError::Shape("pfaffian of an odd-size matrix".into()));
    }
    Ok(pfaffian_rec(m, &(0..m.rows()).collect::<Vec<_>>()))
}

fn pfaffian_rec<F: Field>(m: &PolyMatrix<F>, idx: &[usize]) -> Polynomial<F> {
    if idx.is_empty() {
        return Polynomial::one(&m.ring);
    }
    let mut acc = Polynomial::zero(&m.ring);
    let first = idx[0];
    for (pos, &j) in idx.iter().enumerate().skip(1) {
        let entry = m.get(first, j);
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx
            .iter()
            .copied()
            .filter(|&k| k != first && k != j)
            .collect();
        let term = entry * &pfaffian_rec(m, &rest);
        // sign (-1)^{pos+1} with pos counted from 1 for the second index
        acc = if pos % 2 == 1 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// The five order-4 Pfaffians of a 5x5 skew matrix: entry `i` is the
/// Pfaffian after deleting row and column `i`, with sign `(-1)^i`
/// (zero-based), so the vector annihilates the matrix.
pub fn pfaffians4<F: Field>(m: &PolyMatrix<F>) -> Result<Vec<Polynomial<F>>, CurveError> {
    if m.rows() != 5 || m.cols() != 5 {
        return Err(CurveError::Shape("pfaffians4 needs a 5x5 matrix".into()));
    }
    if !m.is_skew() {
        return Err(CurveError::NotSkew);
    }
    Ok((0..5)
        .map(|i| {
            let keep: Vec<usize> = (0..5).filter(|&k| k != i).collect();
            let p = pfaffian_rec(m, &keep);
            if i % 2 == 0 {
                p
            } else {
                -p
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse, Rationals, RingContext, TermOrder};

    fn ring() -> Ring<Rationals> {
        RingContext::new(Rationals, &["a", "b", "c", "d", "e", "f", "g", "h", "i", "j"], TermOrder::Grevlex)
            .unwrap()
    }

    fn skew(r: &Ring<Rationals>, upper: &[&str], n: usize) -> PolyMatrix<Rationals> {
        let mut rows = vec![vec![Polynomial::zero(r); n]; n];
        let mut it = upper.iter();
        for i in 0..n {
            for j in i + 1..n {
                let p = parse(it.next().unwrap(), r).unwrap();
                rows[j][i] = -&p;
                rows[i][j] = p;
            }
        }
        PolyMatrix::from_rows(r, rows)
    }

    #[test]
    fn pfaffian_base_case() {
        let r = ring();
        let m = skew(&r, &["a"], 2);
        assert_eq!(pfaffian(&m).unwrap(), parse("a", &r).unwrap());
    }

    #[test]
    fn pfaffian_four_by_four() {
        let r = ring();
        let m = skew(&r, &["a", "b", "c", "d", "e", "f"], 4);
        assert_eq!(pfaffian(&m).unwrap(), parse("a*f - b*e + c*d", &r).unwrap());
        // Pf^2 = det for 4x4: check via expansion of a known instance
        let m2 = skew(&r, &["1", "2", "3", "4", "5", "6"], 4);
        assert_eq!(pfaffian(&m2).unwrap(), parse("6 - 10 + 12", &r).unwrap());
    }

    #[test]
    fn pfaffians_of_zero_matrix() {
        let r = ring();
        let z = PolyMatrix::zeros(&r, 5, 5);
        let p = pfaffians4(&z).unwrap();
        assert_eq!(p.len(), 5);
        assert!(p.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn signed_pfaffians_annihilate_generic_skew() {
        let r = ring();
        let m = skew(&r, &["a", "b", "c", "d", "e", "f", "g", "h", "i", "j"], 5);
        let p = pfaffians4(&m).unwrap();
        let row = PolyMatrix::from_rows(&r, vec![p]);
        assert!(row.mul(&m).unwrap().is_zero());
    }

    #[test]
    fn non_skew_rejected() {
        let r = ring();
        let mut rows = vec![vec![Polynomial::zero(&r); 5]; 5];
        rows[0][1] = parse("a", &r).unwrap();
        let m = PolyMatrix::from_rows(&r, rows);
        assert!(matches!(pfaffians4(&m), Err(CurveError::NotSkew)));
    }
}
