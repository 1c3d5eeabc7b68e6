//! Fixtures shared by the integration and acceptance tests.

#![allow(dead_code)]

use std::ops::{Add, Mul, Neg, Sub};

use cogrowth_core::algebraic::{normalize, G_VARS};
use cogrowth_core::multipoly::IntMultiPoly;

/// Expression builder over `(G, z, Q)` so that printed equations can be
/// transcribed factor by factor.
#[derive(Clone)]
pub struct E(pub IntMultiPoly);

pub fn g() -> E {
    E(IntMultiPoly::int_var(&G_VARS, "G"))
}

pub fn z() -> E {
    E(IntMultiPoly::int_var(&G_VARS, "z"))
}

pub fn q() -> E {
    E(IntMultiPoly::int_var(&G_VARS, "Q"))
}

pub fn c(v: i64) -> E {
    E(IntMultiPoly::int(&G_VARS, v))
}

impl E {
    pub fn pow(&self, k: u32) -> E {
        E(self.0.pow(k, &IntMultiPoly::int(&G_VARS, 1)))
    }
}

impl Add for E {
    type Output = E;
    fn add(self, o: E) -> E {
        E(&self.0 + &o.0)
    }
}

impl Sub for E {
    type Output = E;
    fn sub(self, o: E) -> E {
        E(&self.0 - &o.0)
    }
}

impl Mul for E {
    type Output = E;
    fn mul(self, o: E) -> E {
        E(&self.0 * &o.0)
    }
}

impl Mul<E> for i64 {
    type Output = E;
    fn mul(self, o: E) -> E {
        E(o.0.scale_int(self))
    }
}

impl Neg for E {
    type Output = E;
    fn neg(self) -> E {
        E(-&self.0)
    }
}

/// Reference equations for `G(z;q)` in `BS(N,N)`, `N = 2..5`, transcribed in
/// factored form and normalised the same way as the constructor output.
pub fn printed_g_equation(n: u64) -> IntMultiPoly {
    let (gg, zz, qq) = (g(), z(), q());
    let e = match n {
        2 => {
            c(1) + 3 * zz.clone() * qq.clone() * gg.clone()
                - (c(1) - 4 * zz.pow(2) - zz.pow(2) * qq.pow(2)) * gg.pow(2)
                - zz.clone()
                    * qq.clone()
                    * (c(1) - zz.clone() * qq.clone() - 2 * zz.clone())
                    * (c(1) - zz.clone() * qq.clone() + 2 * zz.clone())
                    * gg.pow(3)
        }
        3 => {
            c(1) + 4 * zz.clone() * qq.clone() * gg.clone()
                + (6 * qq.pow(2) * zz.pow(2) - zz.pow(2) - c(1)) * gg.pow(2)
                + 2 * zz.clone()
                    * (qq.clone() * zz.clone() + c(1))
                    * (qq.pow(2) * zz.clone() - qq.clone() + 2 * zz.clone())
                    * gg.pow(3)
                + zz.pow(2)
                    * (c(1) - qq.clone())
                    * (c(1) + qq.clone())
                    * (qq.clone() * zz.clone() + 2 * zz.clone() - c(1))
                    * (qq.clone() * zz.clone() - 2 * zz.clone() - c(1))
                    * gg.pow(4)
        }
        4 => {
            c(1) + 5 * gg.clone() * qq.clone() * zz.clone()
                + (10 * qq.pow(2) * zz.pow(2) - 2 * zz.pow(2) - c(1)) * gg.pow(2)
                + zz.clone()
                    * (10 * qq.pow(3) * zz.pow(2) - 6 * qq.clone() * zz.pow(2) - 3 * qq.clone()
                        + 4 * zz.clone())
                    * gg.pow(3)
                + zz.pow(2)
                    * (3 * qq.pow(4) * zz.pow(2) + 2 * qq.pow(2) * zz.pow(2) - 3 * qq.pow(2)
                        + 8 * qq.clone() * zz.clone()
                        - 8 * zz.pow(2)
                        + c(2))
                    * gg.pow(4)
                - zz.pow(3)
                    * qq.clone()
                    * (qq.pow(2) - c(2))
                    * (qq.clone() * zz.clone() + 2 * zz.clone() - c(1))
                    * (qq.clone() * zz.clone() - 2 * zz.clone() - c(1))
                    * gg.pow(5)
        }
        5 => {
            c(1) + 6 * qq.clone() * zz.clone() * gg.clone()
                + (15 * qq.pow(2) * zz.pow(2) - 3 * zz.pow(2) - c(1)) * gg.pow(2)
                + 4 * (5 * qq.pow(3) * zz.pow(2) - 3 * qq.clone() * zz.pow(2) - qq.clone()
                    + zz.clone())
                    * zz.clone()
                    * gg.pow(3)
                + 3 * (5 * qq.pow(4) * zz.pow(2) - 6 * qq.pow(2) * zz.pow(2) - 2 * qq.pow(2)
                    + 4 * qq.clone() * zz.clone()
                    - zz.pow(2)
                    + c(1))
                    * zz.pow(2)
                    * gg.pow(4)
                + 2 * (2 * qq.pow(5) * zz.pow(2) - qq.pow(3) * zz.pow(2) - 2 * qq.pow(3)
                    + 6 * qq.pow(2) * zz.clone()
                    - 8 * qq.clone() * zz.pow(2)
                    + 3 * qq.clone()
                    - 4 * zz.clone())
                    * zz.pow(3)
                    * gg.pow(5)
                - (qq.pow(2) + qq.clone() - c(1))
                    * (qq.clone() * zz.clone() + 2 * zz.clone() - c(1))
                    * (qq.clone() * zz.clone() - 2 * zz.clone() - c(1))
                    * (qq.pow(2) - qq.clone() - c(1))
                    * zz.pow(4)
                    * gg.pow(6)
        }
        _ => panic!("no printed equation for N = {n}"),
    };
    normalize(&e.0)
}

/// Table of cogrowth rates `mu` and the paired `lambda`, indexed by `N - 1`.
pub const MU_TABLE: [f64; 6] = [
    4.0,
    3.792765039,
    3.647639445,
    3.569497357,
    3.525816111,
    3.500607636,
];
pub const LAMBDA_TABLE: [f64; 5] = [3.0, 2.668565568, 2.395062561, 2.215245886, 2.091305394];
