//! Rank and kernel over ℚ by fraction-free elimination on primitive integer rows.
//!
//! Matrices are first split into connected components of their sparsity
//! pattern (rows and columns linked through nonzero entries); every component
//! is eliminated on its own. Action matrices of weight-graded operators are
//! block diagonal after permutation, so this is where most of the speed comes
//! from.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::Matrix;
use super::rational::{bit_length, common_denominator, Rational};

type IntRow = Vec<(usize, BigInt)>;

/// Rows and columns of one connected block of a sparse matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

/// Bipartite components: rows and columns linked by nonzero entries.
/// Zero rows and zero columns belong to no component.
pub fn components(m: &Matrix) -> Vec<Component> {
    let (r, c) = (m.rows(), m.cols());
    let mut uf = UnionFind::new(r + c);
    for (i, j, _) in m.triplets() {
        uf.union(i, r + j);
    }
    let mut groups: BTreeMap<usize, Component> = BTreeMap::new();
    for i in 0..r {
        if !m.row(i).is_empty() {
            let root = uf.find(i);
            groups
                .entry(root)
                .or_insert_with(|| Component { rows: vec![], cols: vec![] })
                .rows
                .push(i);
        }
    }
    for j in 0..c {
        let root = uf.find(r + j);
        if let Some(g) = groups.get_mut(&root) {
            g.cols.push(j);
        }
    }
    groups.into_values().collect()
}

/// Components of a square matrix where index `i` is a single node shared by
/// row `i` and column `i`. Every index lands in exactly one component.
pub fn square_components(m: &Matrix) -> Vec<Vec<usize>> {
    assert!(m.is_square());
    let n = m.rows();
    let mut uf = UnionFind::new(n);
    for (i, j, _) in m.triplets() {
        uf.union(i, j);
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        let root = uf.find(i);
        groups.entry(root).or_default().push(i);
    }
    groups.into_values().collect()
}

/// Clears denominators and divides out the content; leading entry positive.
fn primitive_row(row: &[(usize, Rational)]) -> IntRow {
    if row.is_empty() {
        return Vec::new();
    }
    let den = common_denominator(row.iter().map(|(_, v)| v));
    let out: IntRow = row
        .iter()
        .map(|(j, v)| (*j, v.numer() * (&den / v.denom())))
        .collect();
    make_primitive(out)
}

fn make_primitive(mut row: IntRow) -> IntRow {
    let Some((_, lead)) = row.first() else {
        return row;
    };
    let mut g = lead.abs();
    for (_, v) in &row[1..] {
        if g.is_one() {
            break;
        }
        g = g.gcd(v);
    }
    let negate = lead.is_negative();
    if !g.is_one() || negate {
        let g = if negate { -g } else { g };
        for (_, v) in &mut row {
            *v = &*v / &g;
        }
    }
    row
}

/// `pivot_lead · row − row_lead · pivot` divided by the gcd of the leads;
/// the shared leading column cancels.
fn eliminate(row: &IntRow, pivot: &IntRow) -> IntRow {
    let a = &row[0].1;
    let c = &pivot[0].1;
    let g = a.gcd(c);
    let fr = c / &g;
    let fp = a / &g;
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut k) = (1, 1);
    while i < row.len() || k < pivot.len() {
        let take_r = k >= pivot.len() || (i < row.len() && row[i].0 < pivot[k].0);
        let take_p = i >= row.len() || (k < pivot.len() && pivot[k].0 < row[i].0);
        if take_r {
            out.push((row[i].0, &row[i].1 * &fr));
            i += 1;
        } else if take_p {
            out.push((pivot[k].0, -(&pivot[k].1 * &fp)));
            k += 1;
        } else {
            let v = &row[i].1 * &fr - &pivot[k].1 * &fp;
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            k += 1;
        }
    }
    make_primitive(out)
}

/// Row echelon form keyed by leading column.
#[derive(Default)]
struct Echelon {
    pivots: BTreeMap<usize, IntRow>,
}

impl Echelon {
    /// Reduces `row` against the stored pivots; returns whether it was
    /// independent. On a leading-column clash the entry with the smaller bit
    /// length stays as pivot.
    fn insert(&mut self, mut row: IntRow) -> bool {
        loop {
            let Some((lead, _)) = row.first() else {
                return false;
            };
            let lead = *lead;
            match self.pivots.get_mut(&lead) {
                None => {
                    self.pivots.insert(lead, row);
                    return true;
                }
                Some(p) => {
                    if bit_length(&row[0].1) < bit_length(&p[0].1) {
                        std::mem::swap(p, &mut row);
                    }
                    row = eliminate(&row, p);
                }
            }
        }
    }
}

fn echelon_of(m: &Matrix, rows: &[usize], col_map: &dyn Fn(usize) -> usize) -> Echelon {
    let mut ech = Echelon::default();
    for &i in rows {
        let mut local: Vec<(usize, Rational)> = m
            .row(i)
            .iter()
            .map(|(j, v)| (col_map(*j), v.clone()))
            .collect();
        local.sort_by_key(|(j, _)| *j);
        ech.insert(primitive_row(&local));
    }
    ech
}

/// Rank over ℚ.
pub fn rank(m: &Matrix) -> usize {
    components(m)
        .iter()
        .map(|comp| echelon_of(m, &comp.rows, &|j| j).pivots.len())
        .sum()
}

/// Basis of the right null space. Each vector is scaled so that its first
/// nonzero entry is 1; vectors are ordered by the position of that entry.
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Rational>> {
    let n = m.cols();
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    let mut covered = vec![false; n];
    for comp in components(m) {
        for &j in &comp.cols {
            covered[j] = true;
        }
        // local column index = position in comp.cols (sorted)
        let mut local_of = vec![usize::MAX; n];
        for (p, &j) in comp.cols.iter().enumerate() {
            local_of[j] = p;
        }
        let ech = echelon_of(m, &comp.rows, &|j| local_of[j]);
        let width = comp.cols.len();
        let is_pivot: Vec<bool> = (0..width).map(|j| ech.pivots.contains_key(&j)).collect();
        for free in (0..width).filter(|&j| !is_pivot[j]) {
            let mut x = vec![Rational::zero(); width];
            x[free] = Rational::one();
            for (lead, row) in ech.pivots.iter().rev() {
                let s: Rational = row[1..]
                    .iter()
                    .map(|(j, v)| Rational::from_integer(v.clone()) * &x[*j])
                    .sum();
                if !s.is_zero() {
                    x[*lead] = -s / Rational::from_integer(row[0].1.clone());
                }
            }
            let mut full = vec![Rational::zero(); n];
            for (p, v) in x.into_iter().enumerate() {
                full[comp.cols[p]] = v;
            }
            basis.push(full);
        }
    }
    for (j, c) in covered.iter().enumerate() {
        if !c {
            let mut e = vec![Rational::zero(); n];
            e[j] = Rational::one();
            basis.push(e);
        }
    }
    for v in &mut basis {
        normalize_leading(v);
    }
    basis.sort_by_key(|v| v.iter().position(|x| !x.is_zero()));
    basis
}

fn normalize_leading(v: &mut [Rational]) {
    if let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() {
        if !lead.is_one() {
            for x in v.iter_mut() {
                *x = &*x / &lead;
            }
        }
    }
}

/// Basis of the column space, drawn from the columns themselves (the
/// independent ones, in order).
pub fn column_space_basis(m: &Matrix) -> Vec<Vec<Rational>> {
    let t = m.transpose();
    let mut chosen: Vec<usize> = Vec::new();
    for comp in components(&t) {
        let mut ech = Echelon::default();
        for &i in &comp.rows {
            if ech.insert(primitive_row(t.row(i))) {
                chosen.push(i);
            }
        }
    }
    chosen.sort_unstable();
    chosen.iter().map(|&j| m.column(j)).collect()
}

/// Whether `v` lies in the column space of `m`.
pub fn in_column_space(m: &Matrix, v: &[Rational]) -> bool {
    let extended = Matrix::hstack(&[m, &Matrix::from_columns(m.rows(), &[v.to_vec()])]);
    rank(&extended) == rank(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::{int, rat};

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Matrix::identity(3)), 3);
        assert_eq!(rank(&Matrix::zeros(4, 4)), 0);
        assert_eq!(rank(&Matrix::from_i64(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&Matrix::zeros(0, 3)), 0);
    }

    #[test]
    fn rank_with_fractions() {
        let m = Matrix::from_dense(&[
            vec![rat(1, 2), rat(1, 3), int(0)],
            vec![int(3), int(2), int(0)],
            vec![int(0), int(0), rat(-7, 5)],
        ]);
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&Matrix::identity(2)).is_empty());
        let k = kernel_basis(&Matrix::from_i64(&[&[1, 1]]));
        assert_eq!(k, vec![vec![int(1), int(-1)]]);
        // solve x + 2y = 0 by hand: (2, -1) up to scale, normalized to (1, -1/2)
        let k = kernel_basis(&Matrix::from_i64(&[&[1, 2], &[2, 4]]));
        assert_eq!(k, vec![vec![int(1), rat(-1, 2)]]);
    }

    #[test]
    fn kernel_includes_zero_columns() {
        let m = Matrix::from_i64(&[&[0, 1, 0]]);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 2);
        assert_eq!(k[0], vec![int(1), int(0), int(0)]);
        assert_eq!(k[1], vec![int(0), int(0), int(1)]);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = Matrix::from_i64(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 0, 1]]);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 4 - rank(&m));
        for v in &k {
            assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn column_space_picks_independent_columns() {
        let m = Matrix::from_i64(&[&[1, 2, 0], &[1, 2, 1]]);
        let basis = column_space_basis(&m);
        assert_eq!(basis, vec![vec![int(1), int(1)], vec![int(0), int(1)]]);
        assert!(in_column_space(&m, &[int(5), int(7)]));
    }

    #[test]
    fn components_split_block_diagonal() {
        let m = Matrix::from_i64(&[&[1, 0, 0], &[0, 0, 2], &[0, 0, 3]]);
        let comps = components(&m);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[1].rows, vec![1, 2]);
        assert_eq!(comps[1].cols, vec![2]);
        assert_eq!(square_components(&m), vec![vec![0], vec![1, 2]]);
    }
}
