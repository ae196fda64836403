//! Incremental Gaussian elimination over a prime field.
//!
//! [`Echelon`] accepts rows one at a time and maintains a row-echelon basis
//! of their span: each stored row has a unit leading entry in a column no
//! other stored row leads. Columns are eliminated in index order, so callers
//! encode their canonical column order (e.g. degrevlex largest-first) as
//! ascending indices and pivots come out as the canonical "lead" positions.
//!
//! Rows are stored sparse or dense depending on fill; insertion reduces the
//! incoming row in a dense `u64` scratch buffer. For p < 2^15 products are
//! accumulated lazily and reduced once per insertion, which keeps the hot
//! loop to a multiply and an add.

use crate::field::PrimeField;

#[derive(Clone, Debug)]
enum Row {
    /// Sorted (column, value) pairs, value nonzero, first entry is the pivot.
    Sparse(Vec<(u32, u32)>),
    /// Full width, pivot position implied by the pivot column table. Dense
    /// rows are only stored when p < 2^16, so entries fit in u16 and the
    /// elimination hot loop streams half the bytes.
    Dense(Vec<u16>),
}

impl Row {
    fn nnz(&self) -> usize {
        match self {
            Row::Sparse(v) => v.len(),
            Row::Dense(v) => v.iter().filter(|&&x| x != 0).count(),
        }
    }
}

/// Row-echelon accumulator over F_p.
#[derive(Clone)]
pub struct Echelon {
    field: PrimeField,
    width: usize,
    /// Lazy accumulation is safe when p < 2^16 (products stay below 2^32,
    /// leaving 2^30 headroom in the u64 scratch).
    fast: bool,
    rows: Vec<Row>,
    /// Pivot column of each stored row, parallel to `rows`.
    row_pivot: Vec<u32>,
    /// Pivot columns in ascending order, with owning row index.
    pivots: Vec<(u32, u32)>,
    /// col -> owning row index, u32::MAX when the column is free.
    col_owner: Vec<u32>,
    scratch: Vec<u64>,
    finalized: bool,
    /// After finalize: free columns in ascending order (the quotient basis)
    /// and col -> quotient index.
    free_cols: Vec<u32>,
    col_quotient: Vec<u32>,
}

const NO_ROW: u32 = u32::MAX;

/// See [`Echelon::unit_class`].
pub enum UnitClass<'a> {
    /// Free column: the class is the quotient basis vector at this index.
    Free(u32),
    /// Pivot column with a sparse stored row: e_col == -(sum of tail).
    PivotSparse(&'a [(u32, u32)]),
    /// Pivot column with a dense stored row, indexed by raw column.
    PivotDense(&'a [u16]),
}

impl Echelon {
    pub fn new(width: usize, field: PrimeField) -> Self {
        let fast = field.p() < (1 << 16);
        Self {
            field,
            width,
            fast,
            rows: Vec::new(),
            row_pivot: Vec::new(),
            pivots: Vec::new(),
            col_owner: vec![NO_ROW; width],
            scratch: vec![0u64; width],
            finalized: false,
            free_cols: Vec::new(),
            col_quotient: Vec::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn is_pivot(&self, col: u32) -> bool {
        self.col_owner[col as usize] != NO_ROW
    }

    /// Pivot columns in ascending index order.
    pub fn pivot_cols(&self) -> impl Iterator<Item = u32> + '_ {
        self.pivots.iter().map(|&(c, _)| c)
    }

    /// Insert a sparse row (unsorted, duplicate columns allowed and summed).
    /// Returns the new pivot column if the row enlarged the span.
    pub fn insert_sparse(&mut self, entries: &[(u32, u64)]) -> Option<u32> {
        debug_assert!(!self.finalized, "echelon is finalized");
        if entries.is_empty() {
            return None;
        }
        // Small-support rows get a worklist reduction that never scans the
        // full width; anything else goes through the dense scratch pass.
        if entries.len() <= self.width / 16 {
            self.insert_worklist(entries)
        } else {
            for &(c, v) in entries {
                self.scratch[c as usize] += v % self.field.p();
            }
            self.insert_scan(0)
        }
    }

    /// Insert a dense row of reduced values (length `width`).
    pub fn insert_dense(&mut self, values: &[u64]) -> Option<u32> {
        debug_assert!(!self.finalized, "echelon is finalized");
        debug_assert_eq!(values.len(), self.width);
        for (s, &v) in self.scratch.iter_mut().zip(values) {
            *s = v;
        }
        self.insert_scan(0)
    }

    /// Reduce the scratch buffer against all pivots with column >= from,
    /// claim the first remaining nonzero column as a new pivot, and store
    /// the row. Scratch is left zeroed.
    fn insert_scan(&mut self, from: u32) -> Option<u32> {
        let p = self.field.p();
        let start = self.pivots.partition_point(|&(c, _)| c < from);
        for k in start..self.pivots.len() {
            let (col, row_idx) = self.pivots[k];
            let v = self.field.reduce(self.scratch[col as usize]);
            self.scratch[col as usize] = v;
            if v != 0 {
                self.apply_row(row_idx as usize, p - v);
            }
        }
        // Everything at pivot columns is now zero (mod p); find the first
        // surviving free column.
        let mut pivot = None;
        for c in (from as usize)..self.width {
            let v = self.field.reduce(self.scratch[c]);
            self.scratch[c] = v;
            if v != 0 {
                debug_assert!(self.col_owner[c] == NO_ROW, "unreduced pivot column");
                pivot = Some(c as u32);
                break;
            }
        }
        let Some(pc) = pivot else {
            for c in (from as usize)..self.width {
                self.scratch[c] = 0;
            }
            return None;
        };
        self.store_from_scratch(pc)
    }

    /// Worklist insertion for rows with small support: only touched columns
    /// are ever visited.
    fn insert_worklist(&mut self, entries: &[(u32, u64)]) -> Option<u32> {
        use std::collections::BTreeSet;
        let p = self.field.p();
        let mut support: BTreeSet<u32> = BTreeSet::new();
        for &(c, v) in entries {
            self.scratch[c as usize] += v % p;
            support.insert(c);
        }
        while let Some(c) = support.pop_first() {
            let v = self.field.reduce(self.scratch[c as usize]);
            self.scratch[c as usize] = v;
            if v == 0 {
                continue;
            }
            let owner = self.col_owner[c as usize];
            if owner == NO_ROW {
                // New pivot: zero the rest of the support into the stored row.
                self.scratch[c as usize] = v;
                return self.store_from_scratch_support(c, &support);
            }
            let scale = p - v;
            match &self.rows[owner as usize] {
                Row::Sparse(_) => {
                    // Re-borrow dance: clone is cheap for genuinely sparse rows.
                    let row = match &self.rows[owner as usize] {
                        Row::Sparse(r) => r.clone(),
                        Row::Dense(_) => unreachable!(),
                    };
                    if self.fast {
                        for &(k, val) in &row {
                            self.scratch[k as usize] += scale * val as u64;
                            if k != c {
                                support.insert(k);
                            }
                        }
                    } else {
                        for &(k, val) in &row {
                            let s = self.scratch[k as usize] % p + self.field.mul(scale, val as u64);
                            self.scratch[k as usize] = self.field.reduce(s);
                            if k != c {
                                support.insert(k);
                            }
                        }
                    }
                    self.scratch[c as usize] = 0;
                }
                Row::Dense(_) => {
                    // A dense pivot row densifies the scratch; fall back to
                    // the scanning strategy for the remaining columns.
                    self.apply_row(owner as usize, scale);
                    self.scratch[c as usize] = 0;
                    return self.insert_scan(c + 1);
                }
            }
        }
        None
    }

    /// scratch -= implicit; actually scratch += scale * row (mod-lazy).
    fn apply_row(&mut self, row_idx: usize, scale: u64) {
        let p = self.field.p();
        match &self.rows[row_idx] {
            Row::Sparse(r) => {
                if self.fast {
                    for &(k, val) in r {
                        self.scratch[k as usize] += scale * val as u64;
                    }
                } else {
                    for &(k, val) in r {
                        let s = self.scratch[k as usize] % p + self.field.mul(scale, val as u64);
                        self.scratch[k as usize] = self.field.reduce(s);
                    }
                }
            }
            Row::Dense(r) => {
                debug_assert!(self.fast, "dense rows only exist for small primes");
                for (s, &val) in self.scratch.iter_mut().zip(r.iter()) {
                    *s += scale * val as u64;
                }
            }
        }
    }

    /// Store the (reduced) scratch content from pivot column `pc` on as a new
    /// row, normalizing the pivot to 1. Scratch is zeroed on the way out.
    fn store_from_scratch(&mut self, pc: u32) -> Option<u32> {
        let inv = self.field.inv(self.scratch[pc as usize]);
        let mut entries: Vec<(u32, u32)> = Vec::new();
        for c in (pc as usize)..self.width {
            let v = self.field.reduce(self.scratch[c]);
            self.scratch[c] = 0;
            if v != 0 {
                entries.push((c as u32, self.field.mul(v, inv) as u32));
            }
        }
        self.push_row(pc, entries)
    }

    fn store_from_scratch_support(
        &mut self,
        pc: u32,
        rest: &std::collections::BTreeSet<u32>,
    ) -> Option<u32> {
        let inv = self.field.inv(self.scratch[pc as usize]);
        let mut entries: Vec<(u32, u32)> = Vec::new();
        let v = self.field.reduce(self.scratch[pc as usize]);
        entries.push((pc, self.field.mul(v, inv) as u32));
        self.scratch[pc as usize] = 0;
        for &c in rest {
            let v = self.field.reduce(self.scratch[c as usize]);
            self.scratch[c as usize] = 0;
            if v != 0 {
                entries.push((c, self.field.mul(v, inv) as u32));
            }
        }
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        self.push_row(pc, entries)
    }

    fn push_row(&mut self, pc: u32, entries: Vec<(u32, u32)>) -> Option<u32> {
        debug_assert_eq!(entries.first().map(|e| e.0), Some(pc));
        debug_assert_eq!(entries[0].1, 1);
        let row = if entries.len() * 4 <= self.width || !self.fast {
            Row::Sparse(entries)
        } else {
            let mut dense = vec![0u16; self.width];
            for (c, v) in entries {
                dense[c as usize] = v as u16;
            }
            Row::Dense(dense)
        };
        let idx = self.rows.len() as u32;
        self.rows.push(row);
        self.row_pivot.push(pc);
        self.col_owner[pc as usize] = idx;
        let pos = self.pivots.partition_point(|&(c, _)| c < pc);
        self.pivots.insert(pos, (pc, idx));
        Some(pc)
    }

    /// Back-substitute to reduced row-echelon form and index the free
    /// columns. After this, every stored row is supported on its pivot
    /// column plus free columns only, and rows can no longer be inserted.
    pub fn finalize(&mut self) {
        if self.finalized {
            return;
        }
        let p = self.field.p();
        // Process pivots from the right; rows further right are already
        // fully reduced, so a single pass over each row suffices.
        for k in (0..self.pivots.len()).rev() {
            let (_, row_idx) = self.pivots[k];
            let row_idx = row_idx as usize;
            // Collect the entries of this row that sit at pivot columns of
            // later pivots.
            let needs: Vec<(u32, u64)> = {
                let row = &self.rows[row_idx];
                let mut v = Vec::new();
                match row {
                    Row::Sparse(r) => {
                        for &(c, val) in r.iter().skip(1) {
                            if self.col_owner[c as usize] != NO_ROW {
                                v.push((self.col_owner[c as usize], val as u64));
                            }
                        }
                    }
                    Row::Dense(r) => {
                        for &(c, ridx) in self.pivots.iter().skip(k + 1) {
                            let val = r[c as usize];
                            if val != 0 {
                                v.push((ridx, val as u64));
                            }
                        }
                    }
                }
                v
            };
            if needs.is_empty() {
                continue;
            }
            // scratch = row - sum coeff * later_row
            match &self.rows[row_idx] {
                Row::Sparse(r) => {
                    for &(c, val) in r.iter() {
                        self.scratch[c as usize] = val as u64;
                    }
                }
                Row::Dense(r) => {
                    for (s, &val) in self.scratch.iter_mut().zip(r.iter()) {
                        *s = val as u64;
                    }
                }
            }
            for (ridx, coeff) in needs {
                self.apply_row(ridx as usize, p - coeff);
            }
            let pc = self.row_pivot[row_idx];
            let mut entries: Vec<(u32, u32)> = Vec::new();
            for c in (pc as usize)..self.width {
                let v = self.field.reduce(self.scratch[c]);
                self.scratch[c] = 0;
                if v != 0 {
                    entries.push((c as u32, v as u32));
                }
            }
            debug_assert_eq!(entries.first().map(|e| e.0), Some(pc));
            self.rows[row_idx] = if entries.len() * 4 <= self.width || !self.fast {
                Row::Sparse(entries)
            } else {
                let mut dense = vec![0u16; self.width];
                for (c, v) in entries {
                    dense[c as usize] = v as u16;
                }
                Row::Dense(dense)
            };
        }
        self.free_cols = (0..self.width as u32).filter(|&c| !self.is_pivot(c)).collect();
        self.col_quotient = vec![u32::MAX; self.width];
        for (i, &c) in self.free_cols.iter().enumerate() {
            self.col_quotient[c as usize] = i as u32;
        }
        self.finalized = true;
    }

    /// Free (non-pivot) columns in ascending order; only after finalize.
    pub fn free_cols(&self) -> &[u32] {
        debug_assert!(self.finalized);
        &self.free_cols
    }

    /// Quotient index of a free column; only after finalize.
    pub fn quotient_index(&self, col: u32) -> u32 {
        debug_assert!(self.finalized);
        self.col_quotient[col as usize]
    }

    /// Class of the unit vector e_col modulo the span; only after finalize.
    /// For a pivot column the class is minus the returned tail (whose
    /// entries all sit at free columns).
    pub fn unit_class(&self, col: u32) -> UnitClass<'_> {
        debug_assert!(self.finalized);
        let owner = self.col_owner[col as usize];
        if owner == NO_ROW {
            UnitClass::Free(self.col_quotient[col as usize])
        } else {
            match &self.rows[owner as usize] {
                Row::Sparse(r) => UnitClass::PivotSparse(&r[1..]),
                Row::Dense(r) => UnitClass::PivotDense(r),
            }
        }
    }

    /// Add `scale` times the class of a sparse vector to `out`, which is
    /// indexed by the free columns. Only valid after finalize: every pivot
    /// row's tail touches free columns only, so one pass suffices.
    pub fn accumulate_class(&self, entries: &[(u32, u64)], scale: u64, out: &mut [u64]) {
        debug_assert!(self.finalized);
        debug_assert_eq!(out.len(), self.free_cols.len());
        let f = self.field;
        for &(c, v) in entries {
            let v = f.mul(v % f.p(), scale);
            if v == 0 {
                continue;
            }
            let owner = self.col_owner[c as usize];
            if owner == NO_ROW {
                let q = self.col_quotient[c as usize] as usize;
                out[q] = f.add(out[q], v);
            } else {
                // e_c == -(tail of the owning row) modulo the span.
                let neg = f.neg(v);
                match &self.rows[owner as usize] {
                    Row::Sparse(r) => {
                        for &(k, val) in r.iter().skip(1) {
                            let q = self.col_quotient[k as usize] as usize;
                            out[q] = f.add(out[q], f.mul(neg, val as u64));
                        }
                    }
                    Row::Dense(r) => {
                        for (q, &k) in self.free_cols.iter().enumerate() {
                            let val = r[k as usize];
                            if val != 0 {
                                out[q] = f.add(out[q], f.mul(neg, val as u64));
                            }
                        }
                    }
                }
            }
        }
    }

    /// Estimated resident bytes of the stored rows (resource guard support).
    pub fn approx_bytes(&self) -> usize {
        self.rows
            .iter()
            .map(|r| match r {
                Row::Sparse(v) => v.len() * 8 + 24,
                Row::Dense(v) => v.len() * 2 + 24,
            })
            .sum()
    }

    /// Average stored-row fill, for diagnostics.
    pub fn fill(&self) -> f64 {
        if self.rows.is_empty() {
            return 0.0;
        }
        let nnz: usize = self.rows.iter().map(Row::nnz).sum();
        nnz as f64 / (self.rows.len() * self.width.max(1)) as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ech(width: usize, p: u64) -> Echelon {
        Echelon::new(width, PrimeField::new(p))
    }

    #[test]
    fn rank_of_identity_like_rows() {
        let mut e = ech(4, 32003);
        assert_eq!(e.insert_sparse(&[(1, 5)]), Some(1));
        assert_eq!(e.insert_sparse(&[(1, 7), (3, 2)]), Some(3));
        assert_eq!(e.insert_sparse(&[(1, 1), (3, 9)]), None);
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn dense_and_sparse_agree() {
        // Deterministic pseudo-random matrix, rank computed both ways.
        let p = 32003u64;
        let mut x = 12345u64;
        let mut next = || {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (x >> 33) % p
        };
        let rows: Vec<Vec<u64>> = (0..12).map(|_| (0..8).map(|_| next()).collect()).collect();
        let mut e1 = ech(8, p);
        let mut e2 = ech(8, p);
        for r in &rows {
            let sparse: Vec<(u32, u64)> =
                r.iter().enumerate().map(|(i, &v)| (i as u32, v)).collect();
            e1.insert_sparse(&sparse);
            e2.insert_dense(r);
        }
        assert_eq!(e1.rank(), e2.rank());
        assert_eq!(e1.rank(), 8); // random 12x8 is full column rank w.h.p.
    }

    #[test]
    fn rank_with_large_prime_slow_path() {
        let p = 2147483647u64;
        let mut e = ech(3, p);
        e.insert_dense(&[1, 2, 3]);
        e.insert_dense(&[2, 4, 6]); // dependent
        e.insert_dense(&[0, 1, 1]);
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn pivots_prefer_low_columns() {
        let mut e = ech(4, 101);
        e.insert_sparse(&[(2, 1), (3, 5)]);
        e.insert_sparse(&[(0, 3), (2, 4)]);
        let pivots: Vec<u32> = e.pivot_cols().collect();
        assert_eq!(pivots, vec![0, 2]);
    }

    #[test]
    fn classes_reduce_against_the_span() {
        let p = 101u64;
        let f = PrimeField::new(p);
        let mut e = ech(3, p);
        // Row x0 + 2 x1; pivot col 0, so e_0 == -2 e_1 in the quotient and
        // the free columns are {1, 2}.
        e.insert_sparse(&[(0, 1), (1, 2)]);
        e.finalize();
        assert_eq!(e.free_cols(), &[1, 2]);
        let mut out = vec![0u64; 2];
        e.accumulate_class(&[(0, 1)], 1, &mut out);
        assert_eq!(out, vec![f.neg(2), 0]);
        let mut out = vec![0u64; 2];
        e.accumulate_class(&[(1, 4), (2, 9)], 1, &mut out);
        assert_eq!(out, vec![4, 9]);
    }

    #[test]
    fn finalize_makes_rows_mutually_reduced() {
        let p = 32003u64;
        let mut e = ech(4, p);
        e.insert_dense(&[1, 1, 1, 1]);
        e.insert_dense(&[0, 1, 2, 3]);
        e.insert_dense(&[0, 0, 1, 7]);
        e.finalize();
        // The class of any pivot unit vector must be supported on free
        // columns only; with three pivots among four columns the quotient is
        // one-dimensional.
        assert_eq!(e.free_cols().len(), 1);
        let mut out = vec![0u64; 1];
        e.accumulate_class(&[(0, 1), (1, 1), (2, 1), (3, 1)], 1, &mut out);
        // That vector is in the span, so its class is zero.
        assert_eq!(out, vec![0]);
    }
}
