use std::fmt;

use crate::algebra::{rat, Rational};
use crate::error::{Error, Result};

/// The pair `(l, i)` naming `M_{l,i}`. Labels are absolute: `M_{l,i+h}` is
/// `M_{l,i}[2]`, a different label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndecompLabel {
    pub l: i64,
    pub i: i64,
}

impl IndecompLabel {
    pub fn new(l: i64, i: i64, h: u32) -> Result<Self> {
        let max = h as i64 - 1;
        if l < 1 || l > max {
            return Err(Error::LabelOutOfRange { l, max });
        }
        Ok(IndecompLabel { l, i })
    }

    pub fn translate(self, t: i64) -> Self {
        IndecompLabel {
            l: self.l,
            i: self.i + t,
        }
    }

    /// `M_{l,i}[1] = M_{h-l, l+i}`, iterated `s` times (negative `s` inverts).
    pub fn shift(self, h: u32, s: i64) -> Self {
        let h = h as i64;
        let mut lab = self;
        for _ in 0..s.unsigned_abs() {
            lab = if s > 0 {
                IndecompLabel {
                    l: h - lab.l,
                    i: lab.l + lab.i,
                }
            } else {
                IndecompLabel {
                    l: h - lab.l,
                    i: lab.i - h + lab.l,
                }
            };
        }
        lab
    }

    /// `S(M_{l,i}) = M_{h-l, l+i-1}`.
    pub fn serre(self, h: u32) -> Self {
        self.shift(h, 1).translate(-1)
    }

    /// `(l + 2i)/h - 1/2`.
    pub fn phase(self, h: u32) -> Rational {
        rat(self.l + 2 * self.i, h as i64) - rat(1, 2)
    }
}

impl fmt::Display for IndecompLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({},{})", self.l, self.i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn label_arithmetic() {
        let m = IndecompLabel::new(1, 0, 4).unwrap();
        assert_eq!(m.shift(4, 1), IndecompLabel { l: 3, i: 1 });
        assert_eq!(m.shift(4, 2), m.translate(4));
        assert_eq!(m.shift(4, 1).shift(4, -1), m);
        assert_eq!(m.serre(4), IndecompLabel { l: 3, i: 0 });
        assert!(IndecompLabel::new(0, 0, 4).is_err());
        assert!(IndecompLabel::new(4, 0, 4).is_err());
    }

    #[test]
    fn serre_power_is_shift() {
        for h in 2..=12u32 {
            for l in 1..h as i64 {
                for i in -3..=3 {
                    let m = IndecompLabel { l, i };
                    let s = (0..h).fold(m, |acc, _| acc.serre(h));
                    assert_eq!(s, m.shift(h, h as i64 - 2));
                }
            }
        }
    }

    #[test]
    fn shift_adds_one_to_phase() {
        let m = IndecompLabel { l: 2, i: 1 };
        assert_eq!(m.phase(5), rat(3, 10));
        assert_eq!(m.shift(5, 1).phase(5), m.phase(5) + rat(1, 1));
    }
}
