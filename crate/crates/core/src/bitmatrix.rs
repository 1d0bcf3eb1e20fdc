//! Packed-bit matrices over GF(2). Columns are stored as `u64` word runs, so
//! the column operations used by elimination are word-wise XORs. The many
//! eliminations behind concept enumeration all hit this path when the field
//! is GF(2).

use crate::field::Gf2;
use crate::matrix::MatrixStore;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    wpc: usize, // words per column
    data: Vec<u64>,
}

impl BitMatrix {
    fn words_for(rows: usize) -> usize {
        rows.div_ceil(WORD)
    }

    #[inline]
    fn bit(&self, r: usize, c: usize) -> bool {
        (self.data[c * self.wpc + r / WORD] >> (r % WORD)) & 1 == 1
    }

    #[inline]
    fn set_bit(&mut self, r: usize, c: usize, v: bool) {
        let w = &mut self.data[c * self.wpc + r / WORD];
        if v {
            *w |= 1 << (r % WORD);
        } else {
            *w &= !(1 << (r % WORD));
        }
    }
}

impl MatrixStore<Gf2> for BitMatrix {
    fn zeros(_field: &Gf2, rows: usize, cols: usize) -> Self {
        let wpc = Self::words_for(rows);
        BitMatrix {
            rows,
            cols,
            wpc,
            data: vec![0; wpc * cols],
        }
    }

    fn identity(field: &Gf2, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set_bit(i, i, true);
        }
        m
    }

    fn rows(&self) -> usize {
        self.rows
    }
    fn cols(&self) -> usize {
        self.cols
    }

    fn get(&self, _field: &Gf2, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols);
        self.bit(r, c)
    }

    fn set(&mut self, _field: &Gf2, r: usize, c: usize, v: bool) {
        assert!(r < self.rows && c < self.cols);
        self.set_bit(r, c, v);
    }

    fn push_col(&mut self, _field: &Gf2, col: &[bool]) {
        assert_eq!(col.len(), self.rows);
        let base = self.data.len();
        self.data.resize(base + self.wpc, 0);
        for (r, &v) in col.iter().enumerate() {
            if v {
                self.data[base + r / WORD] |= 1 << (r % WORD);
            }
        }
        self.cols += 1;
    }

    fn col_swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        let (lo, hi) = (i.min(j), i.max(j));
        let (a, b) = self.data.split_at_mut(hi * self.wpc);
        a[lo * self.wpc..(lo + 1) * self.wpc].swap_with_slice(&mut b[..self.wpc]);
    }

    fn col_scale(&mut self, _field: &Gf2, _c: usize, k: &bool) {
        // the only nonzero scalar is 1
        assert!(*k, "scaling a column by zero during elimination");
    }

    fn col_addmul(&mut self, _field: &Gf2, dst: usize, src: usize, k: &bool) {
        assert_ne!(dst, src);
        if !*k {
            return;
        }
        let (s, d) = (src * self.wpc, dst * self.wpc);
        for w in 0..self.wpc {
            let v = self.data[s + w];
            self.data[d + w] ^= v;
        }
    }

    fn first_nonzero_in_row(&self, _field: &Gf2, r: usize, from_col: usize) -> Option<usize> {
        let (w, b) = (r / WORD, r % WORD);
        (from_col..self.cols).find(|&c| (self.data[c * self.wpc + w] >> b) & 1 == 1)
    }

    fn is_zero_col(&self, _field: &Gf2, c: usize) -> bool {
        self.data[c * self.wpc..(c + 1) * self.wpc]
            .iter()
            .all(|&w| w == 0)
    }

    fn mul(&self, field: &Gf2, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Self::zeros(field, self.rows, rhs.cols);
        for c in 0..rhs.cols {
            let base = c * out.wpc;
            for k in 0..self.cols {
                if rhs.bit(k, c) {
                    for w in 0..self.wpc {
                        out.data[base + w] ^= self.data[k * self.wpc + w];
                    }
                }
            }
        }
        out
    }
}
