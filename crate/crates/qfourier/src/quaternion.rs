//! Hamilton quaternions over `f64`.
//!
//! A quaternion `q = w + xi + yj + zk` multiplies by the rules
//! `i² = j² = k² = -1`, `ij = -ji = k`, `jk = -kj = i`, `ki = -ik = j`.
//! Values are plain immutable data; constructors reject NaN and infinity so
//! that every downstream tolerance check is meaningful.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum QuaternionError {
    #[error("quaternion component is NaN or infinite")]
    NonFinite,
    #[error("division by the zero quaternion")]
    DivisionByZero,
    #[error("quaternion product overflowed to a non-finite value")]
    Overflow,
}

/// One element of the quaternion algebra: `w + xi + yj + zk`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// The two imaginary units that appear in transform kernels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ImaginaryAxis {
    I,
    J,
}

/// Basis elements of the algebra, in the fixed order used by the real
/// embedding of the transform.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    One,
    I,
    J,
    K,
}

impl Basis {
    pub const ALL: [Basis; 4] = [Basis::One, Basis::I, Basis::J, Basis::K];

    pub fn unit(self) -> Quaternion {
        match self {
            Basis::One => Quaternion::ONE,
            Basis::I => Quaternion::I,
            Basis::J => Quaternion::J,
            Basis::K => Quaternion::K,
        }
    }
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion { w: 0.0, x: 0.0, y: 0.0, z: 0.0 };
    pub const ONE: Quaternion = Quaternion { w: 1.0, x: 0.0, y: 0.0, z: 0.0 };
    pub const I: Quaternion = Quaternion { w: 0.0, x: 1.0, y: 0.0, z: 0.0 };
    pub const J: Quaternion = Quaternion { w: 0.0, x: 0.0, y: 1.0, z: 0.0 };
    pub const K: Quaternion = Quaternion { w: 0.0, x: 0.0, y: 0.0, z: 1.0 };

    /// Builds a quaternion from its four real components.
    ///
    /// Panics if any component is NaN or infinite; use [`Quaternion::try_new`]
    /// to get a recoverable error instead.
    pub fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self::try_new(w, x, y, z).expect("quaternion components must be finite")
    }

    pub fn try_new(w: f64, x: f64, y: f64, z: f64) -> Result<Self, QuaternionError> {
        let q = Quaternion { w, x, y, z };
        if q.is_finite() {
            Ok(q)
        } else {
            Err(QuaternionError::NonFinite)
        }
    }

    pub fn real(w: f64) -> Self {
        Self::new(w, 0.0, 0.0, 0.0)
    }

    pub fn is_finite(&self) -> bool {
        self.w.is_finite() && self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn is_zero(&self) -> bool {
        self.w == 0.0 && self.x == 0.0 && self.y == 0.0 && self.z == 0.0
    }

    /// `q̄ = w - xi - yj - zk`.
    pub fn conj(&self) -> Self {
        Quaternion { w: self.w, x: -self.x, y: -self.y, z: -self.z }
    }

    /// `|q|² = w² + x² + y² + z²`.
    pub fn modulus_sq(&self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    /// `|q| = √(q q̄)`.
    pub fn modulus(&self) -> f64 {
        self.modulus_sq().sqrt()
    }

    /// Componentwise scaling by a real factor.
    pub fn scale(&self, factor: f64) -> Self {
        Quaternion {
            w: self.w * factor,
            x: self.x * factor,
            y: self.y * factor,
            z: self.z * factor,
        }
    }

    /// `q⁻¹ = q̄ / |q|²`; the zero quaternion has no inverse.
    pub fn inverse(&self) -> Result<Self, QuaternionError> {
        let n = self.modulus_sq();
        if n == 0.0 {
            return Err(QuaternionError::DivisionByZero);
        }
        Ok(self.conj().scale(1.0 / n))
    }

    /// `cos θ + u·sin θ` for `u ∈ {i, j}`: the kernel factors of the
    /// two-sided transform. Unit modulus up to a few ulp.
    pub fn exp_unit(axis: ImaginaryAxis, angle: f64) -> Self {
        let (sin, cos) = angle.sin_cos();
        match axis {
            ImaginaryAxis::I => Quaternion { w: cos, x: sin, y: 0.0, z: 0.0 },
            ImaginaryAxis::J => Quaternion { w: cos, x: 0.0, y: sin, z: 0.0 },
        }
    }

    /// Hamilton product that reports overflow instead of returning infinity.
    pub fn checked_mul(&self, rhs: &Quaternion) -> Result<Self, QuaternionError> {
        let p = mul_components(self, rhs);
        if p.is_finite() {
            Ok(p)
        } else {
            Err(QuaternionError::Overflow)
        }
    }

    pub fn components(&self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    pub fn from_components(c: [f64; 4]) -> Result<Self, QuaternionError> {
        Self::try_new(c[0], c[1], c[2], c[3])
    }
}

#[inline]
fn mul_components(p: &Quaternion, q: &Quaternion) -> Quaternion {
    // pq = p₀q₀ + p·q + p₀q + q₀p + p×q, expanded per component.
    Quaternion {
        w: p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
        x: p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
        y: p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
        z: p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: Quaternion) -> Quaternion {
        Quaternion {
            w: self.w + rhs.w,
            x: self.x + rhs.x,
            y: self.y + rhs.y,
            z: self.z + rhs.z,
        }
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: Quaternion) -> Quaternion {
        Quaternion {
            w: self.w - rhs.w,
            x: self.x - rhs.x,
            y: self.y - rhs.y,
            z: self.z - rhs.z,
        }
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion { w: -self.w, x: -self.x, y: -self.y, z: -self.z }
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: Quaternion) -> Quaternion {
        mul_components(&self, &rhs)
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: f64) -> Quaternion {
        self.scale(rhs)
    }
}

/// Text form `w+xi+yj+zk`, e.g. `1-2i+0.5j+3e-7k`. Components print with
/// Rust's shortest round-trip float formatting, so parsing the string back
/// recovers the exact bits.
impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn signed(v: f64) -> String {
            if v.is_sign_negative() {
                format!("{v}")
            } else {
                format!("+{v}")
            }
        }
        write!(
            f,
            "{}{}i{}j{}k",
            self.w,
            signed(self.x),
            signed(self.y),
            signed(self.z)
        )
    }
}

impl FromStr for Quaternion {
    type Err = QuaternionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(QuaternionError::NonFinite);
        }
        // Split into sign-prefixed terms; a sign directly after 'e'/'E' is an
        // exponent, not a term boundary.
        let bytes = s.as_bytes();
        let mut terms = Vec::new();
        let mut start = 0;
        for idx in 1..bytes.len() {
            let b = bytes[idx];
            if (b == b'+' || b == b'-')
                && !matches!(bytes[idx - 1], b'e' | b'E')
            {
                terms.push(&s[start..idx]);
                start = idx;
            }
        }
        terms.push(&s[start..]);

        let mut comp = [0.0f64; 4];
        let mut seen = [false; 4];
        for term in terms {
            let term = term.trim();
            let (slot, num) = match term.as_bytes().last() {
                Some(b'i') => (1, &term[..term.len() - 1]),
                Some(b'j') => (2, &term[..term.len() - 1]),
                Some(b'k') => (3, &term[..term.len() - 1]),
                _ => (0, term),
            };
            if seen[slot] {
                return Err(QuaternionError::NonFinite);
            }
            // A bare sign before a unit ("+i", "-j") means ±1.
            let value = match num {
                "" | "+" => 1.0,
                "-" => -1.0,
                other => other.parse::<f64>().map_err(|_| QuaternionError::NonFinite)?,
            };
            comp[slot] = value;
            seen[slot] = true;
        }
        Self::try_new(comp[0], comp[1], comp[2], comp[3])
    }
}
