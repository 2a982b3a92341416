//! The Cl(0,3) multivector algebra behind the New Mean factorization.
//!
//! Basis slots 0..7: the scalar `e0`; generators `e1`, `e2`, `e3` squaring
//! to -1; bivectors `e4 = e1^e2`, `e5 = e2^e3`, `e6 = e3^e1`; and the
//! trivector `e7 = e1^e2^e3` with `e7^2 = +1`. Coefficients are complex:
//! a multivector built from a square decomposition carries its slot-7
//! coefficient on the imaginary axis, which turns the `+1` square of the
//! trivector back into a `+p7^2` contribution when the multivector is
//! multiplied by its conjugate.
//!
//! Internally every slot maps to a canonical blade, a bitmask over the
//! generators in ascending order. `e6` is the one reversed-order slot
//! (`e3 e1` instead of `e1 e3`), so its map carries a minus sign.

use core::ops::{Add, Mul, Sub};

use num_complex::Complex64;

/// Sign and destination slot of the product of two basis elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasisProduct {
    /// +1 or -1.
    pub sign: i8,
    /// Result basis slot, 0..8.
    pub index: usize,
}

// slot -> (generator bitmask, sign of the slot relative to the canonical
// ascending-order blade)
const SLOT_BLADES: [(u8, i8); 8] = [
    (0b000, 1),
    (0b001, 1),
    (0b010, 1),
    (0b100, 1),
    (0b011, 1),
    (0b110, 1),
    (0b101, -1), // e6 = e3 e1 = -(e1 e3)
    (0b111, 1),
];

const MASK_TO_SLOT: [usize; 8] = [0, 1, 2, 4, 3, 6, 5, 7];

// transpositions needed to merge two ascending generator lists
const fn reorder_sign(a: u8, b: u8) -> i8 {
    let mut rest = a >> 1;
    let mut swaps = 0;
    while rest != 0 {
        swaps += (rest & b).count_ones();
        rest >>= 1;
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Geometric product of two basis elements, by slot index.
pub const fn basis_product(a: usize, b: usize) -> BasisProduct {
    let (mask_a, sign_a) = SLOT_BLADES[a];
    let (mask_b, sign_b) = SLOT_BLADES[b];
    let mut sign = sign_a * sign_b * reorder_sign(mask_a, mask_b);
    // every shared generator squares to -1
    if (mask_a & mask_b).count_ones() % 2 == 1 {
        sign = -sign;
    }
    let index = MASK_TO_SLOT[(mask_a ^ mask_b) as usize];
    BasisProduct {
        sign: sign * SLOT_BLADES[index].1,
        index,
    }
}

const PRODUCT_TABLE: [[BasisProduct; 8]; 8] = {
    let mut table = [[BasisProduct { sign: 1, index: 0 }; 8]; 8];
    let mut a = 0;
    while a < 8 {
        let mut b = 0;
        while b < 8 {
            table[a][b] = basis_product(a, b);
            b += 1;
        }
        a += 1;
    }
    table
};

/// A Cl(0,3) element: one complex coefficient per basis slot.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Multivector {
    /// Coefficient of basis slot `k` at index `k`.
    pub coeffs: [Complex64; 8],
}

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

impl Multivector {
    pub fn zero() -> Self {
        Multivector { coeffs: [ZERO; 8] }
    }

    /// The multiplicative identity `e0`.
    pub fn unit() -> Self {
        let mut coeffs = [ZERO; 8];
        coeffs[0] = Complex64::new(1.0, 0.0);
        Multivector { coeffs }
    }

    pub fn from_coeffs(coeffs: [Complex64; 8]) -> Self {
        Multivector { coeffs }
    }

    /// Embed eight nonnegative integer coefficients.
    ///
    /// Slots 0..6 become real coefficients; slot 7 goes on the imaginary
    /// axis, so that multiplying by the conjugate yields `+p7^2` in the
    /// scalar slot despite `e7^2 = +1`.
    pub fn from_decomposition(coefficients: [u64; 8]) -> Self {
        let mut coeffs = [ZERO; 8];
        for k in 0..7 {
            coeffs[k] = Complex64::new(coefficients[k] as f64, 0.0);
        }
        coeffs[7] = Complex64::new(0.0, coefficients[7] as f64);
        Multivector { coeffs }
    }

    /// Negate every non-scalar slot. An involution; not claimed to reverse
    /// products.
    pub fn conjugate(&self) -> Self {
        let mut coeffs = self.coeffs;
        for c in coeffs.iter_mut().skip(1) {
            *c = -*c;
        }
        Multivector { coeffs }
    }

    /// The grade-0 coefficient.
    pub fn scalar_part(&self) -> Complex64 {
        self.coeffs[0]
    }

    /// Full geometric product, the bilinear extension of [`basis_product`].
    pub fn geometric_product(&self, rhs: &Self) -> Self {
        let mut out = [ZERO; 8];
        for (row, &left) in PRODUCT_TABLE.iter().zip(&self.coeffs) {
            if left == ZERO {
                continue;
            }
            for (&BasisProduct { sign, index }, &right) in row.iter().zip(&rhs.coeffs) {
                out[index] += f64::from(sign) * left * right;
            }
        }
        Multivector { coeffs: out }
    }

    /// Scale every coefficient by a real factor.
    pub fn scale(&self, factor: f64) -> Self {
        let mut coeffs = self.coeffs;
        for c in coeffs.iter_mut() {
            *c *= factor;
        }
        Multivector { coeffs }
    }
}

impl Add for Multivector {
    type Output = Multivector;

    fn add(self, rhs: Multivector) -> Multivector {
        let mut coeffs = self.coeffs;
        for (c, r) in coeffs.iter_mut().zip(rhs.coeffs) {
            *c += r;
        }
        Multivector { coeffs }
    }
}

impl Sub for Multivector {
    type Output = Multivector;

    fn sub(self, rhs: Multivector) -> Multivector {
        let mut coeffs = self.coeffs;
        for (c, r) in coeffs.iter_mut().zip(rhs.coeffs) {
            *c -= r;
        }
        Multivector { coeffs }
    }
}

impl Mul for Multivector {
    type Output = Multivector;

    fn mul(self, rhs: Multivector) -> Multivector {
        self.geometric_product(&rhs)
    }
}
