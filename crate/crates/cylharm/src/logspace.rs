//! Sign + log-magnitude scalars for series whose individual factors
//! overflow or underflow f64 while their products stay representable.

#[derive(Debug, Clone, Copy)]
pub(crate) struct LogNum {
    /// −1.0, 0.0, or 1.0.
    pub sign: f64,
    /// ln of the magnitude; ignored when sign == 0.
    pub ln: f64,
}

impl LogNum {
    pub fn from_f64(x: f64) -> LogNum {
        if x == 0.0 {
            LogNum {
                sign: 0.0,
                ln: f64::NEG_INFINITY,
            }
        } else {
            LogNum {
                sign: x.signum(),
                ln: x.abs().ln(),
            }
        }
    }

    pub fn from_parts(sign: f64, ln: f64) -> LogNum {
        LogNum { sign, ln }
    }

    pub fn mul(self, other: LogNum) -> LogNum {
        if self.sign == 0.0 || other.sign == 0.0 {
            return LogNum {
                sign: 0.0,
                ln: f64::NEG_INFINITY,
            };
        }
        LogNum {
            sign: self.sign * other.sign,
            ln: self.ln + other.ln,
        }
    }

    pub fn to_f64(self) -> f64 {
        self.sign * self.ln.exp()
    }
}

/// Three-term recurrence carrier with periodic renormalization, yielding
/// sign/log values that never overflow. Used for Hermite-type sequences.
#[derive(Debug, Clone, Copy)]
pub(crate) struct ScaledPair {
    pub prev: f64,
    pub cur: f64,
    pub scale_ln: f64,
}

impl ScaledPair {
    pub fn new(v0: f64, v1: f64) -> ScaledPair {
        ScaledPair {
            prev: v0,
            cur: v1,
            scale_ln: 0.0,
        }
    }

    /// Advance with next = a·cur + b·prev.
    pub fn step(&mut self, a: f64, b: f64) {
        let next = a * self.cur + b * self.prev;
        self.prev = self.cur;
        self.cur = next;
        let m = self.prev.abs().max(self.cur.abs());
        if m > 1e120 {
            self.prev /= 1e120;
            self.cur /= 1e120;
            self.scale_ln += 1e120f64.ln();
        } else if m < 1e-120 && m > 0.0 {
            self.prev *= 1e120;
            self.cur *= 1e120;
            self.scale_ln -= 1e120f64.ln();
        }
    }

    pub fn cur_log(&self) -> LogNum {
        if self.cur == 0.0 {
            LogNum::from_parts(0.0, f64::NEG_INFINITY)
        } else {
            LogNum::from_parts(self.cur.signum(), self.cur.abs().ln() + self.scale_ln)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_product() {
        let a = LogNum::from_f64(-3.5);
        let b = LogNum::from_f64(2.0);
        assert!((a.mul(b).to_f64() + 7.0).abs() < 1e-12);
        assert_eq!(LogNum::from_f64(0.0).mul(a).to_f64(), 0.0);
    }

    #[test]
    fn scaled_recurrence_tracks_factorial_growth() {
        // next = (n+1)·cur: cur(n) = n!, which overflows f64 near n = 171.
        let mut s = ScaledPair::new(0.0, 1.0);
        for n in 1..=300usize {
            s.step(n as f64, 0.0);
        }
        // Stirling check of ln(300!).
        let n = 300.0f64;
        let stirling = n * n.ln() - n + 0.5 * (2.0 * std::f64::consts::PI * n).ln();
        let got = s.cur_log().ln;
        assert!((got - stirling).abs() < 1e-3, "{got} vs {stirling}");
    }
}
