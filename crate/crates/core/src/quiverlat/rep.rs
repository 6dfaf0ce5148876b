use num::{One, Zero};

use crate::algebra::{RatMatrix, Rational};

/// An interval module `[p, q]` of the linearly oriented quiver
/// `1 -> 2 -> ... -> n`: one-dimensional on `p..=q`, identity maps inside.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntervalModule {
    pub p: usize,
    pub q: usize,
}

impl IntervalModule {
    pub fn contains(self, a: usize) -> bool {
        self.p <= a && a <= self.q
    }

    /// All intervals of `A_n`.
    pub fn all(n: usize) -> Vec<IntervalModule> {
        (1..=n)
            .flat_map(|p| (p..=n).map(move |q| IntervalModule { p, q }))
            .collect()
    }

    pub fn to_rep(self, n: usize) -> QuiverRep {
        let dims: Vec<usize> = (1..=n).map(|a| usize::from(self.contains(a))).collect();
        let maps = (1..n)
            .map(|a| {
                let mut m = RatMatrix::zeros(dims[a], dims[a - 1]);
                if self.contains(a) && self.contains(a + 1) {
                    m[(0, 0)] = Rational::one();
                }
                m
            })
            .collect();
        QuiverRep { dims, maps }
    }
}

/// A representation of `1 -> 2 -> ... -> n`: `maps[a]` goes from vertex
/// `a + 1` to vertex `a + 2` (one-based), as a `dims[a+1] x dims[a]` matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct QuiverRep {
    pub dims: Vec<usize>,
    pub maps: Vec<RatMatrix>,
}

impl QuiverRep {
    /// The map `(f_a)_a -> (V_a f_a - f_{a+1} U_a)_a` from
    /// `(+)_a Hom(U_a, V_a)` to `(+)_arrows Hom(U_a, V_{a+1})`, whose kernel is
    /// `Hom(U, V)` and whose cokernel is `Ext^1(U, V)`.
    pub fn hom_operator(u: &QuiverRep, v: &QuiverRep) -> RatMatrix {
        let n = u.dims.len();
        let mut src_off = vec![0; n + 1];
        for a in 0..n {
            src_off[a + 1] = src_off[a] + v.dims[a] * u.dims[a];
        }
        let mut tgt_off = vec![0; n];
        for a in 0..n.saturating_sub(1) {
            tgt_off[a + 1] = tgt_off[a] + v.dims[a + 1] * u.dims[a];
        }
        let rows = if n == 0 { 0 } else { tgt_off[n - 1] };
        let mut op = RatMatrix::zeros(rows, src_off[n]);
        // f_a[i][j] is unknown src_off[a] + i * u.dims[a] + j.
        for a in 0..n.saturating_sub(1) {
            let (ua, va1) = (u.dims[a], v.dims[a + 1]);
            for i in 0..va1 {
                for j in 0..ua {
                    let row = tgt_off[a] + i * ua + j;
                    // (V_a f_a)[i][j] = sum_t V[i][t] f_a[t][j]
                    for t in 0..v.dims[a] {
                        let c = &v.maps[a][(i, t)];
                        if !c.is_zero() {
                            op[(row, src_off[a] + t * ua + j)] += c;
                        }
                    }
                    // (f_{a+1} U_a)[i][j] = sum_t f_{a+1}[i][t] U[t][j]
                    for t in 0..u.dims[a + 1] {
                        let c = &u.maps[a][(t, j)];
                        if !c.is_zero() {
                            op[(row, src_off[a + 1] + i * u.dims[a + 1] + t)] -= c;
                        }
                    }
                }
            }
        }
        op
    }

    pub fn hom_dim(u: &QuiverRep, v: &QuiverRep) -> usize {
        let op = Self::hom_operator(u, v);
        op.cols() - op.rank()
    }

    pub fn ext1_dim(u: &QuiverRep, v: &QuiverRep) -> usize {
        let op = Self::hom_operator(u, v);
        op.rows() - op.rank()
    }
}

/// Brute-force `Hom` (`ext_degree = 0`) or `Ext^1` (`ext_degree = 1`)
/// between interval modules of `A_n`; higher degrees vanish.
pub fn interval_hom_dim(u: IntervalModule, v: IntervalModule, ext_degree: u32, n: usize) -> usize {
    let (ru, rv) = (u.to_rep(n), v.to_rep(n));
    match ext_degree {
        0 => QuiverRep::hom_dim(&ru, &rv),
        1 => QuiverRep::ext1_dim(&ru, &rv),
        _ => 0,
    }
}

/// Closed form: `Hom([p,q], [p',q']) = k` iff `p' <= p <= q' <= q`; `Ext^1`
/// then follows from the Euler form.
pub fn interval_hom_dim_closed(u: IntervalModule, v: IntervalModule, ext_degree: u32) -> usize {
    let hom = usize::from(v.p <= u.p && u.p <= v.q && v.q <= u.q);
    match ext_degree {
        0 => hom,
        1 => (hom as i64 - euler_form(u, v)) as usize,
        _ => 0,
    }
}

/// `<U, V> = sum_a u_a v_a - sum_{a -> a+1} u_a v_{a+1}`.
pub fn euler_form(u: IntervalModule, v: IntervalModule) -> i64 {
    let lo = u.p.max(v.p);
    let hi = u.q.min(v.q);
    let vertices = if lo <= hi { (hi - lo + 1) as i64 } else { 0 };
    let lo = u.p.max(v.p.saturating_sub(1));
    let hi = u.q.min(v.q - 1);
    let arrows = if lo <= hi && hi >= 1 { (hi - lo + 1) as i64 } else { 0 };
    vertices - arrows
}
