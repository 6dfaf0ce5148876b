use num::Zero;

use crate::algebra::{check_quasi_homogeneous, int, Poly, PolyMatrix, Rational, WeightSystem};
use crate::error::{Error, Result};

/// `a_+ + a_-[-1]` with `a_+ = (+)_i a{2k_i/h}` and `a_- = (+)_j a{2l_j/h}`.
/// Tag order indexes matrix rows and columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedObject {
    pub even: Vec<i64>,
    pub odd: Vec<i64>,
    pub weights: WeightSystem,
}

/// Which off-diagonal block of `Q` an entry lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QBlock {
    /// `Q_{+-}`: even summands to odd summands.
    PlusMinus,
    /// `Q_{-+}`: odd summands to even summands.
    MinusPlus,
}

/// A graded matrix factorization: `q_pm` is `odd x even`, `q_mp` is
/// `even x odd`, and `q_mp q_pm = f Id`, `q_pm q_mp = f Id`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedMF {
    obj: GradedObject,
    f: Poly,
    q_pm: PolyMatrix,
    q_mp: PolyMatrix,
}

impl GradedMF {
    /// Checks shapes and variable counts only; see [`verify_mf`] for the
    /// factorization and grading conditions.
    pub fn new(obj: GradedObject, f: Poly, q_pm: PolyMatrix, q_mp: PolyMatrix) -> Result<Self> {
        let (p, r) = (obj.even.len(), obj.odd.len());
        let n = obj.weights.nvars();
        if f.nvars() != n || q_pm.nvars() != n || q_mp.nvars() != n {
            return Err(Error::VariableMismatch {
                left: n,
                right: f.nvars(),
            });
        }
        if (q_pm.rows(), q_pm.cols()) != (r, p) {
            return Err(Error::Shape(format!(
                "q_pm is {}x{}, expected {r}x{p}",
                q_pm.rows(),
                q_pm.cols()
            )));
        }
        if (q_mp.rows(), q_mp.cols()) != (p, r) {
            return Err(Error::Shape(format!(
                "q_mp is {}x{}, expected {p}x{r}",
                q_mp.rows(),
                q_mp.cols()
            )));
        }
        Ok(GradedMF { obj, f, q_pm, q_mp })
    }

    /// The zero object over a given potential.
    pub fn zero(weights: WeightSystem, f: Poly) -> Self {
        let n = weights.nvars();
        GradedMF {
            obj: GradedObject {
                even: vec![],
                odd: vec![],
                weights,
            },
            f,
            q_pm: PolyMatrix::zeros(0, 0, n),
            q_mp: PolyMatrix::zeros(0, 0, n),
        }
    }

    pub fn object(&self) -> &GradedObject {
        &self.obj
    }

    pub fn even(&self) -> &[i64] {
        &self.obj.even
    }

    pub fn odd(&self) -> &[i64] {
        &self.obj.odd
    }

    pub fn weights(&self) -> &WeightSystem {
        &self.obj.weights
    }

    pub fn h(&self) -> u32 {
        self.obj.weights.h()
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn q_pm(&self) -> &PolyMatrix {
        &self.q_pm
    }

    pub fn q_mp(&self) -> &PolyMatrix {
        &self.q_mp
    }

    pub fn nvars(&self) -> usize {
        self.obj.weights.nvars()
    }

    pub fn is_zero_object(&self) -> bool {
        self.obj.even.is_empty() && self.obj.odd.is_empty()
    }

    /// Total rank `p + r` of the underlying graded module.
    pub fn dim(&self) -> usize {
        self.obj.even.len() + self.obj.odd.len()
    }

    /// The full odd endomorphism `Q = [[0, q_mp], [q_pm, 0]]` in the basis
    /// (even summands, odd summands).
    pub fn full_q(&self) -> PolyMatrix {
        let (p, r) = (self.obj.even.len(), self.obj.odd.len());
        let n = self.nvars();
        PolyMatrix::block2(
            &PolyMatrix::zeros(p, p, n),
            &self.q_mp,
            &self.q_pm,
            &PolyMatrix::zeros(r, r, n),
        )
    }

    /// Same potential and weight system, so the two can be summed or mapped.
    pub fn same_context(&self, other: &GradedMF) -> bool {
        self.obj.weights == other.obj.weights && self.f == other.f
    }

    /// `f = x^h` in one variable of weight 1; the setting of every
    /// homological computation here.
    pub fn is_univariate(&self) -> bool {
        self.obj.weights.is_univariate() && self.f == Poly::x_pow(self.h())
    }

    pub fn require_univariate(&self) -> Result<u32> {
        if !self.obj.weights.is_univariate() {
            return Err(Error::NotUnivariate(format!(
                "weights {:?} are not the single weight [1]",
                self.obj.weights.weights()
            )));
        }
        if self.f != Poly::x_pow(self.h()) {
            return Err(Error::NotUnivariate(format!(
                "potential {} is not x^{}",
                self.f,
                self.h()
            )));
        }
        Ok(self.h())
    }

    /// Required weighted degree of an entry of `block` at (`row`, `col`).
    pub fn entry_degree(&self, block: QBlock, row: usize, col: usize) -> Rational {
        let h = self.h() as i64;
        let two_over_h = Rational::new(2.into(), h.into());
        match block {
            QBlock::PlusMinus => int(self.obj.odd[row] - self.obj.even[col]) * two_over_h,
            QBlock::MinusPlus => {
                int(2) + int(self.obj.even[row] - self.obj.odd[col]) * two_over_h
            }
        }
    }

    /// Whether every entry of `Q` lies in the maximal ideal.
    pub fn is_reduced(&self) -> bool {
        let n = self.nvars();
        let zero = vec![0; n];
        [&self.q_pm, &self.q_mp].iter().all(|m| {
            (0..m.rows()).all(|i| (0..m.cols()).all(|j| m[(i, j)].coefficient(&zero).is_zero()))
        })
    }

    pub(crate) fn from_parts_unchecked(
        obj: GradedObject,
        f: Poly,
        q_pm: PolyMatrix,
        q_mp: PolyMatrix,
    ) -> Self {
        GradedMF { obj, f, q_pm, q_mp }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EntryProblem {
    NonHomogeneous,
    WrongDegree { found: Rational },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryFailure {
    pub block: QBlock,
    pub row: usize,
    pub col: usize,
    pub expected: Rational,
    pub problem: EntryProblem,
}

/// Outcome of [`verify_mf`]. Residuals are `q_mp q_pm - f Id` and
/// `q_pm q_mp - f Id`; both must vanish.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub square: bool,
    pub potential_quasi_homogeneous: bool,
    pub residual_even: PolyMatrix,
    pub residual_odd: PolyMatrix,
    pub entries_checked: usize,
    pub homogeneity_failures: Vec<EntryFailure>,
}

impl VerificationReport {
    pub fn maurer_cartan_ok(&self) -> bool {
        self.residual_even.is_zero() && self.residual_odd.is_zero()
    }

    pub fn ok(&self) -> bool {
        self.square
            && self.potential_quasi_homogeneous
            && self.maurer_cartan_ok()
            && self.homogeneity_failures.is_empty()
    }

    pub fn summary(&self) -> String {
        let mut parts = Vec::new();
        if !self.square {
            parts.push("not square".to_string());
        }
        if !self.potential_quasi_homogeneous {
            parts.push("potential is not quasi-homogeneous".to_string());
        }
        if !self.maurer_cartan_ok() {
            parts.push("Maurer-Cartan residual is nonzero".to_string());
        }
        if !self.homogeneity_failures.is_empty() {
            parts.push(format!(
                "{} entries violate homogeneity",
                self.homogeneity_failures.len()
            ));
        }
        if parts.is_empty() {
            "ok".into()
        } else {
            parts.join("; ")
        }
    }
}

pub fn verify_mf(m: &GradedMF) -> VerificationReport {
    let (p, r) = (m.even().len(), m.odd().len());
    let n = m.nvars();
    let f_p = PolyMatrix::scalar_identity(p, m.f());
    let f_r = PolyMatrix::scalar_identity(r, m.f());
    let (residual_even, residual_odd) = if p == r {
        (m.q_mp.mul(&m.q_pm).sub(&f_p), m.q_pm.mul(&m.q_mp).sub(&f_r))
    } else {
        (PolyMatrix::identity(p, n), PolyMatrix::identity(r, n))
    };
    let mut failures = Vec::new();
    let mut checked = 0;
    for (block, mat) in [(QBlock::PlusMinus, &m.q_pm), (QBlock::MinusPlus, &m.q_mp)] {
        for row in 0..mat.rows() {
            for col in 0..mat.cols() {
                checked += 1;
                let entry = &mat[(row, col)];
                if entry.is_zero() {
                    continue;
                }
                let expected = m.entry_degree(block, row, col);
                let problem = match entry.weighted_degree(m.weights()) {
                    Ok(d) if d == expected => None,
                    Ok(d) => Some(EntryProblem::WrongDegree { found: d }),
                    Err(_) => Some(EntryProblem::NonHomogeneous),
                };
                if let Some(problem) = problem {
                    failures.push(EntryFailure {
                        block,
                        row,
                        col,
                        expected,
                        problem,
                    });
                }
            }
        }
    }
    VerificationReport {
        square: p == r,
        potential_quasi_homogeneous: m.f.is_zero()
            || check_quasi_homogeneous(&m.f, m.weights()),
        residual_even,
        residual_odd,
        entries_checked: checked,
        homogeneity_failures: failures,
    }
}

/// Convenience for constructors: verify or fail with the report summary.
pub(crate) fn ensure_valid(m: GradedMF) -> Result<GradedMF> {
    let rep = verify_mf(&m);
    if rep.ok() {
        Ok(m)
    } else {
        Err(Error::NotAFactorization(rep.summary()))
    }
}
