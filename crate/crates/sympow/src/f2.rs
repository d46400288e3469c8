//! Bit-packed linear algebra over Z/2.

/// A growable row space over F2 with combination tracking: every inserted
/// vector is remembered, and membership queries can report which inserted
/// vectors sum to the query.
#[derive(Clone, Debug)]
pub struct F2Span {
    cols: usize,
    words: usize,
    /// Reduced rows, each paired with its combination over inserted vectors.
    rows: Vec<(Vec<u64>, Vec<u64>)>,
    /// Pivot column of each reduced row.
    pivots: Vec<usize>,
    inserted: usize,
}

fn set_bit(row: &mut [u64], i: usize) {
    row[i / 64] |= 1 << (i % 64);
}

fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src.iter()) {
        *d ^= s;
    }
}

fn leading_bit(row: &[u64], cols: usize) -> Option<usize> {
    for (w, &word) in row.iter().enumerate() {
        if word != 0 {
            let i = w * 64 + word.trailing_zeros() as usize;
            if i < cols {
                return Some(i);
            }
        }
    }
    None
}

impl F2Span {
    pub fn new(cols: usize) -> Self {
        F2Span {
            cols,
            words: cols.div_ceil(64),
            rows: Vec::new(),
            pivots: Vec::new(),
            inserted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    fn pack(&self, v: &[bool]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let mut row = vec![0u64; self.words.max(1)];
        for (i, &b) in v.iter().enumerate() {
            if b {
                set_bit(&mut row, i);
            }
        }
        row
    }

    /// Reduce v against the current rows; returns (residual, combination).
    fn reduce(&self, mut row: Vec<u64>) -> (Vec<u64>, Vec<u64>) {
        let combo_words = (self.inserted + 1).div_ceil(64).max(1);
        let mut combo = vec![0u64; combo_words];
        loop {
            let Some(lead) = leading_bit(&row, self.cols) else {
                break;
            };
            let Ok(idx) = self.pivots.binary_search(&lead) else {
                break;
            };
            xor_into(&mut row, &self.rows[idx].0);
            let src = &self.rows[idx].1;
            for (i, &wd) in src.iter().enumerate() {
                if i < combo.len() {
                    combo[i] ^= wd;
                } else if wd != 0 {
                    combo.resize(i + 1, 0);
                    combo[i] ^= wd;
                }
            }
        }
        (row, combo)
    }

    /// Insert a vector; returns true when it enlarged the span.
    pub fn insert(&mut self, v: &[bool]) -> bool {
        let packed = self.pack(v);
        let (row, mut combo) = self.reduce(packed);
        let tag = self.inserted;
        self.inserted += 1;
        match leading_bit(&row, self.cols) {
            None => false,
            Some(lead) => {
                let needed = (tag / 64) + 1;
                if combo.len() < needed {
                    combo.resize(needed, 0);
                }
                combo[tag / 64] ^= 1 << (tag % 64);
                let idx = self.pivots.binary_search(&lead).unwrap_err();
                self.pivots.insert(idx, lead);
                self.rows.insert(idx, (row, combo));
                true
            }
        }
    }

    pub fn contains(&self, v: &[bool]) -> bool {
        let (row, _) = self.reduce(self.pack(v));
        leading_bit(&row, self.cols).is_none()
    }

    /// Indices of inserted vectors summing to v, when v lies in the span.
    pub fn express(&self, v: &[bool]) -> Option<Vec<usize>> {
        let (row, combo) = self.reduce(self.pack(v));
        if leading_bit(&row, self.cols).is_some() {
            return None;
        }
        let mut out = Vec::new();
        for (w, &word) in combo.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                out.push(w * 64 + b);
                bits &= bits - 1;
            }
        }
        Some(out)
    }
}

/// Rank of a dense F2 matrix given as rows.
pub fn rank(rows: &[Vec<bool>], cols: usize) -> usize {
    let mut span = F2Span::new(cols);
    for r in rows {
        span.insert(r);
    }
    span.rank()
}

/// Basis of the right kernel of the matrix (rows are equations in the
/// `cols` unknowns).
pub fn kernel_basis(rows: &[Vec<bool>], cols: usize) -> Vec<Vec<bool>> {
    let mut mat: Vec<Vec<bool>> = rows.to_vec();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(i) = (r..mat.len()).find(|&i| mat[i][c]) else {
            continue;
        };
        mat.swap(r, i);
        for i2 in 0..mat.len() {
            if i2 != r && mat[i2][c] {
                let (head, tail) = mat.split_at_mut(r.max(i2));
                let (src, dst) = if i2 > r {
                    (&head[r], &mut tail[0])
                } else {
                    (&tail[0], &mut head[i2])
                };
                for j in 0..cols {
                    dst[j] ^= src[j];
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    let mut kernel = Vec::new();
    for c in 0..cols {
        if pivot_cols.contains(&c) {
            continue;
        }
        let mut v = vec![false; cols];
        v[c] = true;
        for (ri, &p) in pivot_cols.iter().enumerate() {
            if mat[ri][c] {
                v[p] = true;
            }
        }
        kernel.push(v);
    }
    kernel
}
