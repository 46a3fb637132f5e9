//! Complex linear-algebra kernel for small Hilbert spaces: Hermitian
//! operators, density operators, POVMs, Bloch-sphere conversions, tensor
//! products, and Born-rule traces.
//!
//! Everything is immutable after construction and every operation is a pure
//! function, so values can be shared freely across threads.

use num_complex::Complex;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{half, real, Real};
use crate::tol;

/// Dense complex square matrix, row-major storage.
///
/// Serializes as a flat row-major array of `[re, im]` pairs; the dimension is
/// recovered from the length.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix<T> {
    dim: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> ComplexMatrix<T> {
    pub fn new(dim: usize, data: Vec<Complex<T>>) -> Result<Self> {
        if dim == 0 || data.len() != dim * dim {
            return Err(Error::Validation(format!(
                "matrix data length {} does not match dimension {}",
                data.len(),
                dim
            )));
        }
        Ok(Self { dim, data })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let data = (0..dim * dim).map(|k| f(k / dim, k % dim)).collect();
        Self { dim, data }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Complex::new(T::zero(), T::zero()); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| {
            if i == j {
                Complex::new(T::one(), T::zero())
            } else {
                Complex::new(T::zero(), T::zero())
            }
        })
    }

    pub fn pauli_x() -> Self {
        let o = T::zero();
        let l = T::one();
        Self {
            dim: 2,
            data: vec![
                Complex::new(o, o),
                Complex::new(l, o),
                Complex::new(l, o),
                Complex::new(o, o),
            ],
        }
    }

    pub fn pauli_y() -> Self {
        let o = T::zero();
        let l = T::one();
        Self {
            dim: 2,
            data: vec![
                Complex::new(o, o),
                Complex::new(o, -l),
                Complex::new(o, l),
                Complex::new(o, o),
            ],
        }
    }

    pub fn pauli_z() -> Self {
        let o = T::zero();
        let l = T::one();
        Self {
            dim: 2,
            data: vec![
                Complex::new(l, o),
                Complex::new(o, o),
                Complex::new(o, o),
                Complex::new(-l, o),
            ],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex<T> {
        self.data[i * self.dim + j]
    }

    pub fn entries(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn scale_re(&self, s: T) -> Self {
        self.scale(Complex::new(s, T::zero()))
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.entry(j, i).conj())
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.dim).fold(Complex::new(T::zero(), T::zero()), |acc, i| {
            acc + self.entry(i, i)
        })
    }

    /// Kronecker product; the left factor indexes the slow blocks.
    pub fn kron(&self, other: &Self) -> Self {
        let (da, db) = (self.dim, other.dim);
        ComplexMatrix::from_fn(da * db, |i, j| {
            self.entry(i / db, j / db) * other.entry(i % db, j % db)
        })
    }

    /// Max entrywise deviation from the conjugate transpose.
    pub fn hermitian_deviation(&self) -> T {
        let mut dev = T::zero();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let d = (self.entry(i, j) - self.entry(j, i).conj()).norm();
                dev = dev.max(d);
            }
        }
        dev
    }

    /// Eigenvalues assuming the matrix is Hermitian, ascending.
    ///
    /// Computed on the real symmetric embedding; supported up to dimension 16.
    pub fn eigenvalues(&self) -> Result<Vec<T>> {
        if self.dim > 16 {
            return Err(Error::Validation(format!(
                "eigenvalues supported up to dimension 16, got {}",
                self.dim
            )));
        }
        let n = self.dim;
        let mut s = vec![T::zero(); 4 * n * n];
        let m = 2 * n;
        for i in 0..n {
            for j in 0..n {
                let z = self.entry(i, j);
                s[i * m + j] = z.re;
                s[i * m + (j + n)] = -z.im;
                s[(i + n) * m + j] = z.im;
                s[(i + n) * m + (j + n)] = z.re;
            }
        }
        let all = linalg::sym_eigenvalues(s, m);
        // Each eigenvalue of the Hermitian matrix appears twice in the
        // embedding; adjacent pairs of the sorted list collapse to one.
        Ok(all.into_iter().step_by(2).collect())
    }

    pub fn min_eigenvalue(&self) -> Result<T> {
        Ok(self.eigenvalues()?[0])
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        debug_assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .fold(T::zero(), |acc, (a, b)| acc.max((a - b).norm()))
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        self.dim == other.dim && self.max_abs_diff(other) <= tol
    }

    /// `(Re tr E, [Re tr(E sx), Re tr(E sy), Re tr(E sz)])` for a 2x2 operator.
    pub fn pauli_components(&self) -> Result<(T, [T; 3])> {
        if self.dim != 2 {
            return Err(Error::Dimension {
                expected: 2,
                actual: self.dim,
            });
        }
        let e00 = self.entry(0, 0);
        let e01 = self.entry(0, 1);
        let e10 = self.entry(1, 0);
        let e11 = self.entry(1, 1);
        let t = (e00 + e11).re;
        let wx = (e01 + e10).re;
        let wy = e10.im - e01.im;
        let wz = (e00 - e11).re;
        Ok((t, [wx, wy, wz]))
    }
}

impl<T: Real> std::ops::Add for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn add(self, rhs: Self) -> ComplexMatrix<T> {
        debug_assert_eq!(self.dim, rhs.dim);
        ComplexMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<T: Real> std::ops::Sub for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn sub(self, rhs: Self) -> ComplexMatrix<T> {
        debug_assert_eq!(self.dim, rhs.dim);
        ComplexMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl<T: Real> std::ops::Mul for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn mul(self, rhs: Self) -> ComplexMatrix<T> {
        debug_assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        ComplexMatrix::from_fn(n, |i, j| {
            (0..n).fold(Complex::new(T::zero(), T::zero()), |acc, k| {
                acc + self.entry(i, k) * rhs.entry(k, j)
            })
        })
    }
}

impl<T: Real + Serialize> Serialize for ComplexMatrix<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[T; 2]> = self.data.iter().map(|z| [z.re, z.im]).collect();
        pairs.serialize(serializer)
    }
}

impl<'de, T: Real + Deserialize<'de>> Deserialize<'de> for ComplexMatrix<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<[T; 2]> = Vec::deserialize(deserializer)?;
        let dim = (pairs.len() as f64).sqrt().round() as usize;
        if dim == 0 || dim * dim != pairs.len() {
            return Err(D::Error::custom(format!(
                "complex matrix length {} is not a positive square",
                pairs.len()
            )));
        }
        Ok(Self {
            dim,
            data: pairs
                .into_iter()
                .map(|[re, im]| Complex::new(re, im))
                .collect(),
        })
    }
}

/// Real 3-vector inside the unit Bloch ball.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector<T> {
    x: T,
    y: T,
    z: T,
}

impl<T: Real> BlochVector<T> {
    /// Any vector in the closed unit ball (norm at most `1 + 1e-10`).
    pub fn new(x: T, y: T, z: T) -> Result<Self> {
        let v = Self { x, y, z };
        if v.norm() > T::one() + real(tol::BLOCH) {
            return Err(Error::InvalidBloch {
                norm: v.norm().to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(v)
    }

    /// Unit vector (pure state direction); norm must be 1 within `1e-10`.
    pub fn pure(x: T, y: T, z: T) -> Result<Self> {
        let v = Self { x, y, z };
        if (v.norm() - T::one()).abs() > real(tol::BLOCH) {
            return Err(Error::InvalidBloch {
                norm: v.norm().to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(v)
    }

    pub fn zero() -> Self {
        Self {
            x: T::zero(),
            y: T::zero(),
            z: T::zero(),
        }
    }

    /// Unit vector in the XY-plane at angle `phi` from the X-axis.
    pub fn unit_xy(phi: T) -> Self {
        Self {
            x: phi.cos(),
            y: phi.sin(),
            z: T::zero(),
        }
    }

    pub fn x(&self) -> T {
        self.x
    }

    pub fn y(&self) -> T {
        self.y
    }

    pub fn z(&self) -> T {
        self.z
    }

    pub fn components(&self) -> [T; 3] {
        [self.x, self.y, self.z]
    }

    pub fn norm(&self) -> T {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    pub fn dot(&self, other: &Self) -> T {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn antipode(&self) -> Self {
        Self {
            x: -self.x,
            y: -self.y,
            z: -self.z,
        }
    }
}

/// Unit-trace positive semidefinite operator, validated at construction:
/// Hermitian within `1e-10`, eigenvalues at least `-1e-9`, trace 1 within
/// `1e-10`.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityOperator<T> {
    matrix: ComplexMatrix<T>,
}

impl<T: Real> DensityOperator<T> {
    pub fn new(matrix: ComplexMatrix<T>) -> Result<Self> {
        let dev = matrix.hermitian_deviation();
        if dev > real(tol::HERMITIAN) {
            return Err(Error::Validation(format!(
                "state not Hermitian: deviation {:e}",
                dev.to_f64().unwrap_or(f64::NAN)
            )));
        }
        let min = matrix.min_eigenvalue()?;
        if min < real(tol::EIG_FLOOR) {
            return Err(Error::Validation(format!(
                "state not positive semidefinite: eigenvalue {:e}",
                min.to_f64().unwrap_or(f64::NAN)
            )));
        }
        let tr = matrix.trace();
        let tr_dev = ((tr.re - T::one()).abs()).max(tr.im.abs());
        if tr_dev > real(tol::TRACE) {
            return Err(Error::Validation(format!(
                "state trace deviates from 1 by {:e}",
                tr_dev.to_f64().unwrap_or(f64::NAN)
            )));
        }
        Ok(Self { matrix })
    }

    /// For constructors whose output is valid by derivation (Bloch-ball
    /// states, tensor products of valid states).
    pub(crate) fn new_unchecked(matrix: ComplexMatrix<T>) -> Self {
        Self { matrix }
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// Tensor product of two states; valid because both factors are.
    pub fn tensor(&self, other: &Self) -> Self {
        Self::new_unchecked(self.matrix.kron(&other.matrix))
    }
}

/// Positive operator-valued measure: effects are Hermitian within `1e-10`
/// with eigenvalues at least `-1e-9`, and sum to the identity within
/// entrywise `1e-10`. Zero effects are allowed.
#[derive(Debug, Clone, PartialEq)]
pub struct Povm<T> {
    effects: Vec<ComplexMatrix<T>>,
}

impl<T: Real> Povm<T> {
    pub fn new(effects: Vec<ComplexMatrix<T>>) -> Result<Self> {
        let dim = match effects.first() {
            Some(e) => e.dim(),
            None => return Err(Error::Validation("POVM has no effects".into())),
        };
        for (k, e) in effects.iter().enumerate() {
            if e.dim() != dim {
                return Err(Error::Dimension {
                    expected: dim,
                    actual: e.dim(),
                });
            }
            let dev = e.hermitian_deviation();
            if dev > real(tol::HERMITIAN) {
                return Err(Error::Validation(format!(
                    "effect {} not Hermitian: deviation {:e}",
                    k,
                    dev.to_f64().unwrap_or(f64::NAN)
                )));
            }
            let min = e.min_eigenvalue()?;
            if min < real(tol::EIG_FLOOR) {
                return Err(Error::Validation(format!(
                    "effect {} not positive semidefinite: eigenvalue {:e}",
                    k,
                    min.to_f64().unwrap_or(f64::NAN)
                )));
            }
        }
        let mut sum = ComplexMatrix::zeros(dim);
        for e in &effects {
            sum = &sum + e;
        }
        let dev = sum.max_abs_diff(&ComplexMatrix::identity(dim));
        if dev > real(tol::TRACE) {
            return Err(Error::Validation(format!(
                "effects sum deviates from identity by {:e}",
                dev.to_f64().unwrap_or(f64::NAN)
            )));
        }
        Ok(Self { effects })
    }

    pub fn effects(&self) -> &[ComplexMatrix<T>] {
        &self.effects
    }

    pub fn outcomes(&self) -> usize {
        self.effects.len()
    }

    pub fn dim(&self) -> usize {
        self.effects[0].dim()
    }
}

/// `(1 + v.sigma)/2`; pure iff `|v| = 1`.
pub fn state_from_bloch<T: Real>(v: &BlochVector<T>) -> DensityOperator<T> {
    let h = half::<T>();
    let data = vec![
        Complex::new(h * (T::one() + v.z), T::zero()),
        Complex::new(h * v.x, -h * v.y),
        Complex::new(h * v.x, h * v.y),
        Complex::new(h * (T::one() - v.z), T::zero()),
    ];
    DensityOperator::new_unchecked(ComplexMatrix { dim: 2, data })
}

/// Inverse of [`state_from_bloch`]; qubit states only.
pub fn bloch_from_state<T: Real>(rho: &DensityOperator<T>) -> Result<BlochVector<T>> {
    let (_, [x, y, z]) = rho.matrix().pauli_components()?;
    BlochVector::new(x, y, z)
}

/// `weight * (1 + v.sigma)/2`: a rank-one effect of trace `weight`.
///
/// A zero weight yields the zero matrix and `v` is ignored; otherwise `v`
/// must be a unit vector.
pub fn effect_from_bloch<T: Real>(weight: T, v: &BlochVector<T>) -> Result<ComplexMatrix<T>> {
    let slack = real(1e-9);
    if weight < -slack || weight > T::one() + slack {
        return Err(Error::InvalidWeight {
            weight: weight.to_f64().unwrap_or(f64::NAN),
        });
    }
    let w = weight.max(T::zero()).min(T::one());
    if w == T::zero() {
        return Ok(ComplexMatrix::zeros(2));
    }
    if (v.norm() - T::one()).abs() > real(tol::BLOCH) {
        return Err(Error::InvalidBloch {
            norm: v.norm().to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(state_from_bloch(v).matrix().scale_re(w))
}

/// Kronecker product of two operators.
pub fn tensor<T: Real>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> ComplexMatrix<T> {
    a.kron(b)
}

/// `tr(effect * rho)`, clamped to `[0, 1]` when within `1e-10` of the
/// boundary. The effect is assumed positive semidefinite and below the
/// identity; only dimensions and realness are checked here.
pub fn born_prob<T: Real>(rho: &DensityOperator<T>, effect: &ComplexMatrix<T>) -> Result<T> {
    let d = rho.dim();
    if effect.dim() != d {
        return Err(Error::Dimension {
            expected: d,
            actual: effect.dim(),
        });
    }
    let mut tr = Complex::new(T::zero(), T::zero());
    for i in 0..d {
        for k in 0..d {
            tr = tr + effect.entry(i, k) * rho.matrix().entry(k, i);
        }
    }
    if tr.im.abs() > real(tol::IMAG) {
        return Err(Error::NumericConsistency {
            imag: tr.im.to_f64().unwrap_or(f64::NAN),
        });
    }
    let p = tr.re;
    let eps = real(tol::BLOCH);
    if p < T::zero() && p >= -eps {
        return Ok(T::zero());
    }
    if p > T::one() && p <= T::one() + eps {
        return Ok(T::one());
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type M = ComplexMatrix<f64>;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn state_from_zero_vector_is_maximally_mixed() {
        let rho = state_from_bloch(&BlochVector::<f64>::zero());
        assert!(rho.matrix().approx_eq(&M::identity(2).scale_re(0.5), 0.0));
    }

    #[test]
    fn state_from_plus_x_axis() {
        let rho = state_from_bloch(&BlochVector::pure(1.0, 0.0, 0.0).unwrap());
        let expected = M::new(2, vec![c(0.5, 0.0), c(0.5, 0.0), c(0.5, 0.0), c(0.5, 0.0)]).unwrap();
        assert!(rho.matrix().approx_eq(&expected, 1e-15));
    }

    #[test]
    fn state_from_diagonal_xy_direction() {
        // (1 + (x+y)/sqrt(2).sigma)/2 expanded by hand: off-diagonal
        // (0,1)-entry is exp(-i pi/4)/2.
        let s = std::f64::consts::FRAC_PI_4;
        let rho = state_from_bloch(&BlochVector::pure(s.cos(), s.sin(), 0.0).unwrap());
        let e01 = rho.matrix().entry(0, 1);
        assert!((e01.re - 0.5 * s.cos()).abs() < 1e-15);
        assert!((e01.im + 0.5 * s.sin()).abs() < 1e-15);
        assert!((e01.norm() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn bloch_from_state_trivial_cases() {
        let v = bloch_from_state(&state_from_bloch(&BlochVector::zero())).unwrap();
        assert_eq!(v.components(), [0.0, 0.0, 0.0]);

        // |+i><+i| = (1 + sy)/2
        let plus_i = M::new(2, vec![c(0.5, 0.0), c(0.0, -0.5), c(0.0, 0.5), c(0.5, 0.0)]).unwrap();
        let v = bloch_from_state(&DensityOperator::new(plus_i).unwrap()).unwrap();
        assert!((v.x()).abs() < 1e-15 && (v.y() - 1.0).abs() < 1e-15 && v.z().abs() < 1e-15);
    }

    #[test]
    fn bloch_from_phase_state() {
        // (|0> + e^{i pi/4}|1>)/sqrt(2) has Bloch vector (1/sqrt2, 1/sqrt2, 0).
        let p = std::f64::consts::FRAC_PI_4;
        let a = c(0.5, 0.0);
        let rho = M::new(
            2,
            vec![
                a,
                c(0.5 * p.cos(), -0.5 * p.sin()),
                c(0.5 * p.cos(), 0.5 * p.sin()),
                a,
            ],
        )
        .unwrap();
        let v = bloch_from_state(&DensityOperator::new(rho).unwrap()).unwrap();
        let s = 1.0 / 2.0f64.sqrt();
        assert!((v.x() - s).abs() < 1e-12 && (v.y() - s).abs() < 1e-12 && v.z().abs() < 1e-12);
    }

    #[test]
    fn bloch_from_state_requires_qubit() {
        let rho = DensityOperator::new(M::identity(4).scale_re(0.25)).unwrap();
        assert!(matches!(
            bloch_from_state(&rho),
            Err(Error::Dimension { expected: 2, actual: 4 })
        ));
    }

    #[test]
    fn effect_from_bloch_cases() {
        let plus = effect_from_bloch(1.0, &BlochVector::pure(1.0, 0.0, 0.0).unwrap()).unwrap();
        assert!(plus.approx_eq(state_from_bloch(&BlochVector::pure(1.0, 0.0, 0.0).unwrap()).matrix(), 0.0));

        let zero = effect_from_bloch(0.0, &BlochVector::zero()).unwrap();
        assert!(zero.approx_eq(&M::zeros(2), 0.0));

        // anti-trine-style effect: weight 2/3, direction at 2pi/3.
        let dir = BlochVector::unit_xy(2.0 * std::f64::consts::PI / 3.0);
        let e = effect_from_bloch(2.0 / 3.0, &dir).unwrap();
        assert!((e.trace().re - 2.0 / 3.0).abs() < 1e-15);
        assert!(e.trace().im.abs() < 1e-15);

        assert!(matches!(
            effect_from_bloch(1.5, &dir),
            Err(Error::InvalidWeight { .. })
        ));
    }

    #[test]
    fn tensor_cases() {
        assert!(tensor(&M::identity(2), &M::identity(2)).approx_eq(&M::identity(4), 0.0));

        let p0 = M::new(2, vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]).unwrap();
        let p1 = M::new(2, vec![c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
        let t = tensor(&p0, &p1);
        let expected = M::from_fn(4, |i, j| {
            if i == 1 && j == 1 {
                c(1.0, 0.0)
            } else {
                c(0.0, 0.0)
            }
        });
        assert!(t.approx_eq(&expected, 0.0));

        // product of two trine states: rank one, trace one.
        let t0 = state_from_bloch(&BlochVector::unit_xy(0.0));
        let t1 = state_from_bloch(&BlochVector::unit_xy(2.0 * std::f64::consts::PI / 3.0));
        let prod = tensor(t0.matrix(), t1.matrix());
        assert!((prod.trace().re - 1.0).abs() < 1e-14);
        let eigs = prod.eigenvalues().unwrap();
        assert!(eigs[..3].iter().all(|e| e.abs() < 1e-12));
        assert!((eigs[3] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn mixed_product_identity_on_random_inputs() {
        // (A (x) B)(C (x) D) = AC (x) BD
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let m: Vec<M> = (0..4)
                .map(|_| random::random_matrix(&mut rng, 2))
                .collect();
            let lhs = &m[0].kron(&m[1]) * &m[2].kron(&m[3]);
            let rhs = (&m[0] * &m[2]).kron(&(&m[1] * &m[3]));
            assert!(lhs.approx_eq(&rhs, 1e-12));
        }
    }

    #[test]
    fn born_prob_cases() {
        let mixed = state_from_bloch(&BlochVector::zero());
        assert_eq!(born_prob(&mixed, &M::identity(2)).unwrap(), 1.0);

        let plus = state_from_bloch(&BlochVector::pure(1.0, 0.0, 0.0).unwrap());
        let minus = effect_from_bloch(1.0, &BlochVector::pure(-1.0, 0.0, 0.0).unwrap()).unwrap();
        assert_eq!(born_prob(&plus, &minus).unwrap(), 0.0);

        // trine state 0 against anti-trine effect 1: probability 1/2.
        let psi0 = state_from_bloch(&BlochVector::unit_xy(0.0));
        let dir = BlochVector::unit_xy(2.0 * std::f64::consts::PI / 3.0 + std::f64::consts::PI);
        let pi1 = effect_from_bloch(2.0 / 3.0, &dir).unwrap();
        assert!((born_prob(&psi0, &pi1).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn born_prob_dimension_mismatch() {
        let mixed = state_from_bloch(&BlochVector::zero());
        assert!(matches!(
            born_prob(&mixed, &M::identity(4)),
            Err(Error::Dimension { .. })
        ));
    }

    #[test]
    fn povm_probabilities_sum_to_one_on_random_states() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let povm = random::random_qubit_povm(&mut rng, 3);
        for _ in 0..100 {
            let rho = random::random_density(&mut rng);
            let total: f64 = povm
                .effects()
                .iter()
                .map(|e| born_prob(&rho, e).unwrap())
                .sum();
            assert!((total - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn antipodal_projectors_sum_to_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..50 {
            let v = random::random_unit_bloch(&mut rng);
            let a = effect_from_bloch(1.0, &v).unwrap();
            let b = effect_from_bloch(1.0, &v.antipode()).unwrap();
            assert!((&a + &b).approx_eq(&M::identity(2), 1e-12));
        }
    }

    #[test]
    fn bloch_round_trip_on_random_unit_vectors() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..100 {
            let v = random::random_unit_bloch::<f64, _>(&mut rng);
            let rho = state_from_bloch(&v);
            let w = bloch_from_state(&rho).unwrap();
            let back = state_from_bloch(&w);
            assert!(rho.matrix().approx_eq(back.matrix(), 1e-12));
            assert!((v.x() - w.x()).abs() < 1e-12);
            assert!((v.y() - w.y()).abs() < 1e-12);
            assert!((v.z() - w.z()).abs() < 1e-12);
        }
    }

    #[test]
    fn analytic_born_rule_on_bloch_sphere() {
        // tr[(r(1+m.sigma)/2)((1+n.sigma)/2)] = r(1 + n.m)/2
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for _ in 0..100 {
            let n = random::random_unit_bloch::<f64, _>(&mut rng);
            let m = random::random_unit_bloch::<f64, _>(&mut rng);
            let r: f64 = rand::Rng::gen_range(&mut rng, 0.0..1.0);
            let p = born_prob(&state_from_bloch(&n), &effect_from_bloch(r, &m).unwrap()).unwrap();
            let analytic = r * (1.0 + n.dot(&m)) / 2.0;
            assert!((p - analytic).abs() < 1e-12);
        }
    }

    #[test]
    fn validation_rejects_bad_inputs() {
        // non-Hermitian
        let bad = M::new(2, vec![c(0.5, 0.0), c(0.5, 1e-6), c(0.5, 1e-6), c(0.5, 0.0)]).unwrap();
        assert!(DensityOperator::new(bad).is_err());
        // negative eigenvalue (Bloch norm 1.2)
        let outside = M::new(2, vec![c(0.5, 0.0), c(0.6, 0.0), c(0.6, 0.0), c(0.5, 0.0)]).unwrap();
        assert!(DensityOperator::new(outside).is_err());
        // wrong trace
        let scaled = M::identity(2).scale_re(0.6);
        assert!(DensityOperator::new(scaled).is_err());
        // incomplete POVM
        let half_id = M::identity(2).scale_re(0.5);
        assert!(Povm::new(vec![half_id.clone(), half_id.clone(), half_id]).is_err());
        // Bloch vector outside the ball
        assert!(BlochVector::new(1.0, 0.5, 0.0).is_err());
        assert!(BlochVector::pure(0.5, 0.0, 0.0).is_err());
    }
}
