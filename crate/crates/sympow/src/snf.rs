//! Dense integer matrices, Smith normal form, and finitely presented
//! abelian groups. Every SNF call verifies its own postconditions by
//! multiplication before returning.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq)]
pub struct IntMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Build from column vectors, each of length `rows`.
    pub fn from_columns(rows: usize, cols: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zero(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn from_rows(rows: &[Vec<BigInt>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zero(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row length mismatch");
            for (j, v) in r.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn mul(&self, o: &IntMat) -> IntMat {
        assert_eq!(self.cols, o.rows, "dimension mismatch in matrix product");
        let mut out = IntMat::zero(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let add = a * o.get(k, j);
                    if !add.is_zero() {
                        let cur = out.get(i, j) + add;
                        out.set(i, j, cur);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.get(i, j).is_one()
                    } else {
                        self.get(i, j).is_zero()
                    }
                })
            })
    }

    fn swap_rows(&mut self, i1: usize, i2: usize) {
        if i1 == i2 {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(i1 * self.cols + j, i2 * self.cols + j);
        }
    }

    fn swap_cols(&mut self, j1: usize, j2: usize) {
        if j1 == j2 {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + j1, i * self.cols + j2);
        }
    }

    fn neg_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }

    fn neg_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }

    /// row[dst] += k * row[src]
    fn row_add(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.get(dst, j) + k * self.get(src, j);
            self.set(dst, j, v);
        }
    }

    /// col[dst] += k * col[src]
    fn col_add(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self.get(i, dst) + k * self.get(i, src);
            self.set(i, dst, v);
        }
    }
}

impl std::fmt::Debug for IntMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Smith normal form D = U * A * V with unimodular U and V.
/// The inverses are tracked alongside, so unimodularity is certified by
/// the integral identities U * Uinv = I and V * Vinv = I.
pub struct Snf {
    pub d: IntMat,
    pub u: IntMat,
    pub u_inv: IntMat,
    pub v: IntMat,
    pub v_inv: IntMat,
}

impl Snf {
    pub fn diag(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }
}

/// Quotient with the remainder closest to zero; keeps pivot growth small.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_mod_floor(b);
    if &(&r * 2i32) > &b.abs() {
        q + 1
    } else {
        q
    }
}

pub fn smith_normal_form(a: &IntMat) -> Snf {
    let (rows, cols) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = IntMat::identity(rows);
    let mut u_inv = IntMat::identity(rows);
    let mut v = IntMat::identity(cols);
    let mut v_inv = IntMat::identity(cols);

    let find_pivot = |d: &IntMat, t: usize| -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if d.get(i, j).is_zero() {
                    continue;
                }
                match &best {
                    None => best = Some((i, j)),
                    Some((bi, bj)) => {
                        if d.get(i, j).abs() < d.get(*bi, *bj).abs() {
                            best = Some((i, j));
                        }
                    }
                }
            }
        }
        best
    };

    'outer: for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = find_pivot(&d, t) else {
                break 'outer;
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            u_inv.swap_cols(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
            v_inv.swap_rows(t, pj);

            let mut dirty = false;
            for i in t + 1..rows {
                if !d.get(i, t).is_zero() {
                    let q = div_round(d.get(i, t), d.get(t, t));
                    let k = -q;
                    d.row_add(i, t, &k);
                    u.row_add(i, t, &k);
                    u_inv.col_add(t, i, &(-k.clone()));
                    if !d.get(i, t).is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..cols {
                if !d.get(t, j).is_zero() {
                    let q = div_round(d.get(t, j), d.get(t, t));
                    let k = -q;
                    d.col_add(j, t, &k);
                    v.col_add(j, t, &k);
                    v_inv.row_add(t, j, &(-k.clone()));
                    if !d.get(t, j).is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // Pivot must divide everything that remains; a violating entry
            // is folded into row t and the loop repeats on a smaller pivot.
            let mut violator = None;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !d.get(i, j).mod_floor(d.get(t, t)).is_zero() {
                        violator = Some(i);
                        break 'scan;
                    }
                }
            }
            match violator {
                Some(i) => {
                    let one = BigInt::one();
                    d.row_add(t, i, &one);
                    u.row_add(t, i, &one);
                    u_inv.col_add(i, t, &-&one);
                }
                None => break,
            }
        }
    }

    for t in 0..rows.min(cols) {
        if d.get(t, t).is_negative() {
            d.neg_row(t);
            u.neg_row(t);
            u_inv.neg_col(t);
        }
    }

    let snf = Snf { d, u, u_inv, v, v_inv };
    verify_snf(a, &snf);
    snf
}

/// Postconditions: D = U*A*V, D diagonal and nonnegative with a
/// divisibility chain, and U, V certified unimodular by their inverses.
fn verify_snf(a: &IntMat, s: &Snf) {
    assert!(
        s.u.mul(&s.u_inv).is_identity(),
        "SNF postcondition failed: U not unimodular"
    );
    assert!(
        s.v.mul(&s.v_inv).is_identity(),
        "SNF postcondition failed: V not unimodular"
    );
    let prod = s.u.mul(a).mul(&s.v);
    assert!(
        prod == s.d,
        "SNF postcondition failed: U*A*V differs from D"
    );
    for i in 0..s.d.rows {
        for j in 0..s.d.cols {
            if i != j {
                assert!(
                    s.d.get(i, j).is_zero(),
                    "SNF postcondition failed: D not diagonal at ({i},{j})"
                );
            }
        }
    }
    let diag = s.diag();
    for w in diag.windows(2) {
        assert!(!w[0].is_negative() && !w[1].is_negative(), "negative invariant factor");
        if !w[1].is_zero() {
            assert!(
                !w[0].is_zero() && w[1].mod_floor(&w[0]).is_zero(),
                "SNF postcondition failed: divisibility chain broken"
            );
        }
    }
}

/// Solve A x = b over the integers; None when no integral solution exists.
pub fn solve(a: &IntMat, snf: &Snf, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(b.len(), a.rows);
    let ub = snf.u.mul_vec(b);
    let diag = snf.diag();
    let mut w = vec![BigInt::zero(); a.cols];
    for (i, ubi) in ub.iter().enumerate() {
        if i < diag.len() && !diag[i].is_zero() {
            let (q, r) = ubi.div_mod_floor(&diag[i]);
            if !r.is_zero() {
                return None;
            }
            w[i] = q;
        } else if !ubi.is_zero() {
            return None;
        }
    }
    Some(snf.v.mul_vec(&w))
}

/// Basis of the right kernel of A over the integers.
pub fn kernel_basis(a: &IntMat, snf: &Snf) -> Vec<Vec<BigInt>> {
    let diag = snf.diag();
    let mut out = Vec::new();
    for j in 0..a.cols {
        if j >= diag.len() || diag[j].is_zero() {
            out.push(snf.v.col(j));
        }
    }
    out
}

/// How an element sits in a finitely generated abelian group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ElementOrder {
    Infinite,
    Finite(BigInt),
}

/// Z^n modulo the column span of a relation matrix, with coordinates.
///
/// Writing D = U R V, the composite f = U x exposes the class of x: row i
/// of f is a torsion coordinate mod d_i when d_i > 1, dead when d_i = 1,
/// and a free coordinate when d_i = 0 or the row has no diagonal entry.
pub struct Quotient {
    pub n_gens: usize,
    snf: Snf,
    diag: Vec<BigInt>,
    pub free_rows: Vec<usize>,
    pub torsion_rows: Vec<(usize, BigInt)>,
}

impl Quotient {
    pub fn new(n_gens: usize, relations: &[Vec<BigInt>]) -> Self {
        let r = IntMat::from_columns(n_gens, relations);
        let snf = smith_normal_form(&r);
        let diag = snf.diag();
        let mut free_rows = Vec::new();
        let mut torsion_rows = Vec::new();
        for i in 0..n_gens {
            if i >= diag.len() || diag[i].is_zero() {
                free_rows.push(i);
            } else if diag[i] > BigInt::one() {
                torsion_rows.push((i, diag[i].clone()));
            }
        }
        Quotient {
            n_gens,
            snf,
            diag,
            free_rows,
            torsion_rows,
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rows.len()
    }

    /// Invariant factors greater than one, in the divisibility chain order.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.torsion_rows.iter().map(|(_, d)| d.clone()).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rows.is_empty() && self.torsion_rows.is_empty()
    }

    fn u_coords(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.n_gens);
        self.snf.u.mul_vec(x)
    }

    pub fn free_coords(&self, x: &[BigInt]) -> Vec<BigInt> {
        let f = self.u_coords(x);
        self.free_rows.iter().map(|&i| f[i].clone()).collect()
    }

    pub fn torsion_coords(&self, x: &[BigInt]) -> Vec<BigInt> {
        let f = self.u_coords(x);
        self.torsion_rows
            .iter()
            .map(|(i, d)| f[*i].mod_floor(d))
            .collect()
    }

    pub fn is_zero_class(&self, x: &[BigInt]) -> bool {
        self.free_coords(x).iter().all(|v| v.is_zero())
            && self.torsion_coords(x).iter().all(|v| v.is_zero())
    }

    pub fn classes_equal(&self, x: &[BigInt], y: &[BigInt]) -> bool {
        let d: Vec<BigInt> = x.iter().zip(y.iter()).map(|(a, b)| a - b).collect();
        self.is_zero_class(&d)
    }

    pub fn order_of(&self, x: &[BigInt]) -> ElementOrder {
        if self.free_coords(x).iter().any(|v| !v.is_zero()) {
            return ElementOrder::Infinite;
        }
        let f = self.u_coords(x);
        let mut ord = BigInt::one();
        for (i, d) in self.torsion_rows.iter() {
            let r = f[*i].mod_floor(d);
            if !r.is_zero() {
                let o = d / r.gcd(d);
                ord = ord.lcm(&o);
            }
        }
        ElementOrder::Finite(ord)
    }

    /// Representative in Z^n whose class has U-coordinate e_row.
    pub fn lift_unit(&self, row: usize) -> Vec<BigInt> {
        self.snf.u_inv.col(row)
    }

    pub fn diag_len(&self) -> usize {
        self.diag.len()
    }
}

/// Free rank and torsion invariant factors (> 1) of the abelian group with
/// `n_gens` generators and the given relation columns.
pub fn abelian_quotient(n_gens: usize, relations: &[Vec<BigInt>]) -> (usize, Vec<BigInt>) {
    let q = Quotient::new(n_gens, relations);
    (q.free_rank(), q.torsion())
}
