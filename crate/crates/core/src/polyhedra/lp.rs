//! Exact feasibility of `A x ≥ b` over free rational `x`.
//!
//! Dictionary simplex: free variables are pivoted into the basis first and
//! never leave it; the remaining slack system is solved by a phase-one
//! auxiliary variable with Bland's rule. Arithmetic runs in checked
//! `Ratio<i128>` and restarts in `BigRational` on overflow.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, One, Signed, ToPrimitive, Zero};

trait Exact: Clone + Ord + Zero + One + Signed {
    fn c_add(&self, other: &Self) -> Option<Self>;
    fn c_mul(&self, other: &Self) -> Option<Self>;
    fn c_div(&self, other: &Self) -> Option<Self>;
    fn from_big(v: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigRational;
}

type Small = Ratio<i128>;

impl Exact for Small {
    fn c_add(&self, other: &Self) -> Option<Self> {
        self.checked_add(other)
    }
    fn c_mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(other)
    }
    fn c_div(&self, other: &Self) -> Option<Self> {
        self.checked_div(other)
    }
    fn from_big(v: &BigInt) -> Option<Self> {
        // Keep headroom so products of inputs cannot overflow immediately.
        v.to_i64().map(|x| Ratio::from_integer(x as i128))
    }
    fn to_big(&self) -> BigRational {
        BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
    }
}

impl Exact for BigRational {
    fn c_add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn c_mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn c_div(&self, other: &Self) -> Option<Self> {
        Some(self / other)
    }
    fn from_big(v: &BigInt) -> Option<Self> {
        Some(BigRational::from_integer(v.clone()))
    }
    fn to_big(&self) -> BigRational {
        self.clone()
    }
}

/// Returns a point `x` with `a_i · x ≥ b_i` for every row, or `None` when
/// the system is infeasible. All rows must have length `dim`.
pub fn feasible_point(dim: usize, rows: &[Vec<BigInt>], rhs: &[BigInt]) -> Option<Vec<BigRational>> {
    debug_assert_eq!(rows.len(), rhs.len());
    match solve::<Small>(dim, rows, rhs) {
        Ok(result) => result,
        Err(Overflow) => solve::<BigRational>(dim, rows, rhs).unwrap_or_else(|_| unreachable!()),
    }
}

struct Overflow;

fn ck<T>(v: Option<T>) -> Result<T, Overflow> {
    v.ok_or(Overflow)
}

/// Variable ids: `0..m` slacks, `m..m+n` structural, `m+n` auxiliary.
struct Dictionary<S> {
    /// `rows[r][c]` for `c < cols` is the coefficient of `nonbasic[c]`;
    /// `rows[r][cols]` is the constant.
    rows: Vec<Vec<S>>,
    basic: Vec<usize>,
    nonbasic: Vec<usize>,
}

impl<S: Exact> Dictionary<S> {
    fn cols(&self) -> usize {
        self.nonbasic.len()
    }

    /// Exchanges `basic[r]` and `nonbasic[c]`; `extra` rows (the objective)
    /// are updated alongside.
    fn pivot(&mut self, r: usize, c: usize, extra: &mut [Vec<S>]) -> Result<(), Overflow> {
        let cols = self.cols();
        let piv = self.rows[r][c].clone();
        let mut new_row = Vec::with_capacity(cols + 1);
        for k in 0..=cols {
            if k == c {
                new_row.push(ck(S::one().c_div(&piv))?);
            } else {
                new_row.push(ck(self.rows[r][k].c_div(&piv))?.neg());
            }
        }
        let update = |row: &mut Vec<S>| -> Result<(), Overflow> {
            let f = row[c].clone();
            if f.is_zero() {
                return Ok(());
            }
            for k in 0..=cols {
                if k == c {
                    row[k] = ck(f.c_mul(&new_row[k]))?;
                } else if !new_row[k].is_zero() {
                    row[k] = ck(row[k].c_add(&ck(f.c_mul(&new_row[k]))?))?;
                }
            }
            Ok(())
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                update(row)?;
            }
        }
        for row in extra.iter_mut() {
            update(row)?;
        }
        self.rows[r] = new_row;
        std::mem::swap(&mut self.basic[r], &mut self.nonbasic[c]);
        Ok(())
    }
}

fn solve<S: Exact>(dim: usize, rows: &[Vec<BigInt>], rhs: &[BigInt]) -> Result<Option<Vec<BigRational>>, Overflow> {
    let m = rows.len();
    let aux = m + dim;
    let is_slack = |v: usize| v < m;

    // s_i = a_i·x − b_i, with x nonbasic; the auxiliary column is appended.
    let mut dict_rows = Vec::with_capacity(m);
    for (a, b) in rows.iter().zip(rhs) {
        let mut row = Vec::with_capacity(dim + 2);
        for v in a {
            row.push(ck(S::from_big(v))?);
        }
        row.push(S::zero());
        row.push(ck(S::from_big(b))?.neg());
        dict_rows.push(row);
    }
    let mut nonbasic: Vec<usize> = (m..m + dim).collect();
    nonbasic.push(aux);
    let mut d = Dictionary { rows: dict_rows, basic: (0..m).collect(), nonbasic };

    // Pivot each structural variable into a slack row; those rows are then
    // frozen and ignored by the ratio test.
    let mut frozen = vec![false; m];
    for c in 0..dim {
        if let Some(r) = (0..m).find(|&r| !frozen[r] && !d.rows[r][c].is_zero()) {
            d.pivot(r, c, &mut [])?;
            frozen[r] = true;
        }
    }
    let active: Vec<usize> = (0..m).filter(|&r| !frozen[r]).collect();
    let aux_col = d.cols() - 1;
    let cols = d.cols();

    let worst = active.iter().copied().min_by(|&a, &b| d.rows[a][cols].cmp(&d.rows[b][cols]));
    if let Some(r) = worst.filter(|&r| d.rows[r][cols].is_negative()) {
        for &i in &active {
            d.rows[i][aux_col] = S::one();
        }
        // Objective: maximize −x_aux.
        let mut obj = vec![vec![S::zero(); cols + 1]];
        obj[0][aux_col] = S::one().neg();
        d.pivot(r, aux_col, &mut obj)?;
        loop {
            if obj[0][cols].is_zero() {
                break;
            }
            let entering = (0..cols)
                .filter(|&c| obj[0][c].is_positive() && (is_slack(d.nonbasic[c]) || d.nonbasic[c] == aux))
                .min_by_key(|&c| d.nonbasic[c]);
            let Some(c) = entering else { break };
            let mut best: Option<(S, usize)> = None;
            for &i in &active {
                let coef = &d.rows[i][c];
                if coef.is_negative() {
                    let ratio = ck(d.rows[i][cols].c_div(&coef.clone().neg()))?;
                    let better = match &best {
                        None => true,
                        Some((br, bi)) => ratio < *br || (ratio == *br && d.basic[i] < d.basic[*bi]),
                    };
                    if better {
                        best = Some((ratio, i));
                    }
                }
            }
            let (_, r) = best.expect("phase one objective is bounded");
            d.pivot(r, c, &mut obj)?;
        }
        if !obj[0][cols].is_zero() {
            return Ok(None);
        }
    }

    let mut x = vec![BigRational::zero(); dim];
    for (r, &v) in d.basic.iter().enumerate() {
        if (m..m + dim).contains(&v) {
            x[v - m] = d.rows[r][cols].to_big();
        }
    }
    Ok(Some(x))
}
