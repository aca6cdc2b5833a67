//! Minimal double-double arithmetic for the extended-precision test
//! oracles (~31 significant digits).
//!
//! Only what the oracles need: field operations, `exp`, and `sin`/`cos`
//! with argument reduction. Error-free transforms follow Dekker/Knuth;
//! products use FMA so `two_prod` is exact.

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = a.mul_add(b, -p);
    (p, err)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };
    // ln 2 and 2π split into leading/trailing parts
    const LN2: Dd = Dd {
        hi: std::f64::consts::LN_2,
        lo: 2.319_046_813_846_299_6e-17,
    };
    pub const TWO_PI: Dd = Dd {
        hi: std::f64::consts::TAU,
        lo: 2.449_293_598_294_706_4e-16,
    };

    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    pub fn add(self, other: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, other.hi);
        let e = e + self.lo + other.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    pub fn sub(self, other: Dd) -> Dd {
        self.add(other.neg())
    }

    pub fn mul(self, other: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, other.hi);
        let e = e + self.hi * other.lo + self.lo * other.hi;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    pub fn mul_f64(self, other: f64) -> Dd {
        self.mul(Dd::from_f64(other))
    }

    pub fn div(self, other: Dd) -> Dd {
        let q1 = self.hi / other.hi;
        let r = self.sub(other.mul_f64(q1));
        let q2 = r.hi / other.hi;
        let r2 = r.sub(other.mul_f64(q2));
        let q3 = r2.hi / other.hi;
        let (s, e) = quick_two_sum(q1, q2);
        let (hi, lo) = quick_two_sum(s, e + q3);
        Dd { hi, lo }
    }

    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            self.neg()
        } else {
            self
        }
    }

    fn ldexp(self, k: i32) -> Dd {
        let scale = (k as f64).exp2();
        Dd {
            hi: self.hi * scale,
            lo: self.lo * scale,
        }
    }

    /// `e^x` via `x = k ln2 + r`, `|r| ≤ ln2/2`, Taylor on `r`.
    pub fn exp(self) -> Dd {
        let k = (self.hi / Dd::LN2.hi).round();
        let r = self.sub(Dd::LN2.mul_f64(k));
        let mut sum = Dd::ONE.add(r);
        let mut term = r;
        let mut n = 2.0f64;
        loop {
            term = term.mul(r).div(Dd::from_f64(n));
            sum = sum.add(term);
            if term.hi.abs() <= sum.hi.abs() * 1e-35 {
                break;
            }
            n += 1.0;
            assert!(n < 60.0, "exp series failed to converge");
        }
        sum.ldexp(k as i32)
    }

    fn reduce_two_pi(self) -> Dd {
        let k = (self.hi / Dd::TWO_PI.hi).round();
        self.sub(Dd::TWO_PI.mul_f64(k))
    }

    /// `sin x` by reduction modulo 2π and direct Taylor summation.
    pub fn sin(self) -> Dd {
        let r = self.reduce_two_pi();
        let r2 = r.mul(r);
        let mut term = r;
        let mut sum = r;
        let mut n = 1.0f64;
        loop {
            term = term.mul(r2).div(Dd::from_f64((n + 1.0) * (n + 2.0))).neg();
            sum = sum.add(term);
            if term.hi.abs() <= 1e-36 {
                break;
            }
            n += 2.0;
            assert!(n < 120.0, "sin series failed to converge");
        }
        sum
    }

    pub fn cos(self) -> Dd {
        let r = self.reduce_two_pi();
        let r2 = r.mul(r);
        let mut term = Dd::ONE;
        let mut sum = Dd::ONE;
        let mut n = 0.0f64;
        loop {
            term = term.mul(r2).div(Dd::from_f64((n + 1.0) * (n + 2.0))).neg();
            sum = sum.add(term);
            if term.hi.abs() <= 1e-36 {
                break;
            }
            n += 2.0;
            assert!(n < 120.0, "cos series failed to converge");
        }
        sum
    }
}

/// Complex number with double-double components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cdd {
    pub re: Dd,
    pub im: Dd,
}

impl Cdd {
    pub fn new(re: Dd, im: Dd) -> Cdd {
        Cdd { re, im }
    }

    pub fn from_f64(re: f64, im: f64) -> Cdd {
        Cdd::new(Dd::from_f64(re), Dd::from_f64(im))
    }

    pub fn real(x: Dd) -> Cdd {
        Cdd::new(x, Dd::ZERO)
    }

    pub fn add(self, other: Cdd) -> Cdd {
        Cdd::new(self.re.add(other.re), self.im.add(other.im))
    }

    pub fn sub(self, other: Cdd) -> Cdd {
        Cdd::new(self.re.sub(other.re), self.im.sub(other.im))
    }

    pub fn mul(self, other: Cdd) -> Cdd {
        Cdd::new(
            self.re.mul(other.re).sub(self.im.mul(other.im)),
            self.re.mul(other.im).add(self.im.mul(other.re)),
        )
    }

    pub fn div(self, other: Cdd) -> Cdd {
        let denom = other.re.mul(other.re).add(other.im.mul(other.im));
        let num = self.mul(Cdd::new(other.re, other.im.neg()));
        Cdd::new(num.re.div(denom), num.im.div(denom))
    }

    pub fn scale(self, s: Dd) -> Cdd {
        Cdd::new(self.re.mul(s), self.im.mul(s))
    }

    /// `e^z = e^{re} (cos im + i sin im)`.
    pub fn exp(self) -> Cdd {
        let mag = self.re.exp();
        Cdd::new(mag.mul(self.im.cos()), mag.mul(self.im.sin()))
    }

    pub fn to_complex(self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

#[cfg(test)]
mod self_checks {
    use super::*;

    #[test]
    fn arithmetic_against_known_values() {
        let third = Dd::ONE.div(Dd::from_f64(3.0));
        let one = third.mul_f64(3.0);
        assert!((one.hi - 1.0).abs() < 1e-30 && one.lo.abs() < 1e-16);

        // e computed by the series vs known digits (e = 2.718281828459045235360287...)
        let e = Dd::ONE.exp();
        assert!((e.hi - std::f64::consts::E).abs() < 1e-15);
        let e_lo_expect = 1.445_646_891_729_250_2e-16;
        assert!((e.lo - e_lo_expect).abs() < 1e-28, "e.lo = {:e}", e.lo);

        // sin(π/6) = 1/2 exactly
        let pi_over_6 = Dd::TWO_PI.div(Dd::from_f64(12.0));
        let s = pi_over_6.sin();
        assert!((s.hi - 0.5).abs() < 1e-30, "sin(pi/6) = {:?}", s);

        // large-argument reduction: cos(2π·1000.25) = cos(π/2) = 0
        let theta = Dd::TWO_PI.mul_f64(1000.25);
        assert!(theta.cos().hi.abs() < 1e-28);
    }
}
