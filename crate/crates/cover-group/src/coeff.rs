use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// An exact element of Z[√2, 1/2]: (a + b√2) / 2^k, stored in lowest terms
/// (k minimal). This is the coefficient ring for double-cover elements,
/// since generator images only introduce 1/√2 = √2/2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Sqrt2Dyadic {
    a: i128,
    b: i128,
    k: u32,
}

impl Sqrt2Dyadic {
    pub const ZERO: Sqrt2Dyadic = Sqrt2Dyadic { a: 0, b: 0, k: 0 };
    pub const ONE: Sqrt2Dyadic = Sqrt2Dyadic { a: 1, b: 0, k: 0 };

    pub fn new(a: i128, b: i128, k: u32) -> Self {
        Sqrt2Dyadic { a, b, k }.normalized()
    }

    /// 1/√2 = √2/2.
    pub fn inv_sqrt2() -> Self {
        Sqrt2Dyadic { a: 0, b: 1, k: 1 }
    }

    pub fn from_int(a: i128) -> Self {
        Sqrt2Dyadic { a, b: 0, k: 0 }
    }

    fn normalized(mut self) -> Self {
        if self.a == 0 && self.b == 0 {
            return Sqrt2Dyadic::ZERO;
        }
        while self.k > 0 && self.a % 2 == 0 && self.b % 2 == 0 {
            self.a /= 2;
            self.b /= 2;
            self.k -= 1;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Exact sign of a + b√2 (as a real number).
    pub fn signum(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        // compare a against -b√2 by comparing squares, tracking signs
        let (a, b) = (self.a, self.b);
        if a >= 0 && b >= 0 {
            1
        } else if a <= 0 && b <= 0 {
            -1
        } else {
            let a2 = a.checked_mul(a).expect("no overflow");
            let b2 = 2 * b.checked_mul(b).expect("no overflow");
            if a > 0 {
                if a2 > b2 {
                    1
                } else {
                    -1
                }
            } else if b2 > a2 {
                1
            } else {
                -1
            }
        }
    }

    /// The rational part as (numerator, 2^k); requires b = 0.
    pub fn rational_parts(&self) -> Option<(i128, u32)> {
        if self.b == 0 {
            Some((self.a, self.k))
        } else {
            None
        }
    }
}

impl Add for Sqrt2Dyadic {
    type Output = Sqrt2Dyadic;
    fn add(self, rhs: Sqrt2Dyadic) -> Sqrt2Dyadic {
        let k = self.k.max(rhs.k);
        let sa = self.a << (k - self.k);
        let sb = self.b << (k - self.k);
        let ra = rhs.a << (k - rhs.k);
        let rb = rhs.b << (k - rhs.k);
        Sqrt2Dyadic {
            a: sa + ra,
            b: sb + rb,
            k,
        }
        .normalized()
    }
}

impl AddAssign for Sqrt2Dyadic {
    fn add_assign(&mut self, rhs: Sqrt2Dyadic) {
        *self = *self + rhs;
    }
}

impl Sub for Sqrt2Dyadic {
    type Output = Sqrt2Dyadic;
    fn sub(self, rhs: Sqrt2Dyadic) -> Sqrt2Dyadic {
        self + (-rhs)
    }
}

impl Neg for Sqrt2Dyadic {
    type Output = Sqrt2Dyadic;
    fn neg(self) -> Sqrt2Dyadic {
        Sqrt2Dyadic {
            a: -self.a,
            b: -self.b,
            k: self.k,
        }
    }
}

impl Mul for Sqrt2Dyadic {
    type Output = Sqrt2Dyadic;
    fn mul(self, rhs: Sqrt2Dyadic) -> Sqrt2Dyadic {
        // (a1 + b1√2)(a2 + b2√2) = a1a2 + 2b1b2 + (a1b2 + a2b1)√2
        let a = self.a * rhs.a + 2 * self.b * rhs.b;
        let b = self.a * rhs.b + self.b * rhs.a;
        Sqrt2Dyadic {
            a,
            b,
            k: self.k + rhs.k,
        }
        .normalized()
    }
}

impl fmt::Display for Sqrt2Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 0 {
            if self.b == 0 {
                write!(f, "{}", self.a)
            } else if self.a == 0 {
                write!(f, "{}√2", self.b)
            } else {
                write!(f, "({}{:+}√2)", self.a, self.b)
            }
        } else if self.b == 0 {
            write!(f, "{}/2^{}", self.a, self.k)
        } else if self.a == 0 {
            write!(f, "{}√2/2^{}", self.b, self.k)
        } else {
            write!(f, "({}{:+}√2)/2^{}", self.a, self.b, self.k)
        }
    }
}
