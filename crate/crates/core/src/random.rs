//! Seeded random generators for states, measurements, and protocols, plus the
//! randomized consistency sweeps the reproduction suite reports on.
//!
//! All functions are deterministic given the RNG stream (ChaCha8 in the
//! callers that fix seeds).

use num_complex::Complex;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::qstate::{
    bloch_from_state, born_prob, state_from_bloch, BlochVector, ComplexMatrix, DensityOperator,
    Povm,
};
use crate::scalar::{real, Real};
use crate::tasks::{eval_access, eval_exclusion, Protocol, TaskKind, TaskSpec};

/// Matrix with independent uniform entries in `[-1, 1] + i[-1, 1]`.
pub fn random_matrix<T: Real, R: Rng>(rng: &mut R, dim: usize) -> ComplexMatrix<T> {
    ComplexMatrix::from_fn(dim, |_, _| {
        Complex::new(
            real(rng.gen_range(-1.0..1.0)),
            real(rng.gen_range(-1.0..1.0)),
        )
    })
}

/// Uniform direction on the unit sphere.
pub fn random_unit_bloch<T: Real, R: Rng>(rng: &mut R) -> BlochVector<T> {
    let z: f64 = rng.gen_range(-1.0..1.0);
    let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let r = (1.0 - z * z).sqrt();
    BlochVector::pure(real(r * phi.cos()), real(r * phi.sin()), real(z))
        .expect("sampled direction is unit length")
}

/// Uniform point in the closed unit ball.
pub fn random_ball_bloch<T: Real, R: Rng>(rng: &mut R) -> BlochVector<T> {
    let u: f64 = rng.gen_range(0.0..1.0);
    let s = real::<T>(u.cbrt());
    let dir = random_unit_bloch::<T, R>(rng);
    BlochVector::new(dir.x() * s, dir.y() * s, dir.z() * s).expect("scaled into the ball")
}

/// Random qubit state, mixed in general.
pub fn random_density<T: Real, R: Rng>(rng: &mut R) -> DensityOperator<T> {
    state_from_bloch(&random_ball_bloch(rng))
}

/// Random qubit POVM with the requested number of outcomes.
///
/// Raw rank-one effects are normalized by the inverse square root of their
/// sum, which keeps every effect positive semidefinite and restores
/// completeness exactly.
pub fn random_qubit_povm<T: Real, R: Rng>(rng: &mut R, outcomes: usize) -> Povm<T> {
    assert!(outcomes >= 2, "a POVM needs at least two outcomes");
    loop {
        let raw: Vec<ComplexMatrix<T>> = (0..outcomes)
            .map(|_| {
                let w: T = real(rng.gen_range(0.3..1.0));
                let dir = random_unit_bloch::<T, R>(rng);
                state_from_bloch(&dir).matrix().scale_re(w)
            })
            .collect();
        let mut sum = ComplexMatrix::zeros(2);
        for e in &raw {
            sum = &sum + e;
        }
        let (t, [wx, wy, wz]) = sum.pauli_components().expect("qubit operator");
        let half_t = t / real(2.0);
        let half_w = (wx * wx + wy * wy + wz * wz).sqrt() / real(2.0);
        if half_t - half_w < real(0.05) {
            continue; // nearly singular sum; resample
        }
        let c_plus = (half_t + half_w).powf(real(-0.5));
        let c_minus = (half_t - half_w).powf(real(-0.5));
        let inv_sqrt = if half_w < real(1e-12) {
            ComplexMatrix::identity(2).scale_re(half_t.powf(real(-0.5)))
        } else {
            let a = (c_plus + c_minus) / real(2.0);
            let b = (c_plus - c_minus) / (real::<T>(2.0) * real::<T>(2.0) * half_w);
            // a*I + b*(w . sigma), with w the unnormalized Pauli vector / 2.
            let bx = b * wx;
            let by = b * wy;
            let bz = b * wz;
            ComplexMatrix::new(
                2,
                vec![
                    Complex::new(a + bz, T::zero()),
                    Complex::new(bx, -by),
                    Complex::new(bx, by),
                    Complex::new(a - bz, T::zero()),
                ],
            )
            .expect("2x2 shape")
        };
        let effects: Vec<ComplexMatrix<T>> = raw.iter().map(|e| &(&inv_sqrt * e) * &inv_sqrt).collect();
        match Povm::new(effects) {
            Ok(p) => return p,
            Err(_) => continue,
        }
    }
}

/// Random qubit protocol on the given word shape (`d = 2`).
pub fn random_protocol<T: Real, R: Rng>(rng: &mut R, n: usize, m: usize) -> Protocol<T> {
    let task = TaskSpec::new(n, m, 2, TaskKind::Exclusion).expect("valid shape");
    let states = (0..task.word_count()).map(|_| random_density(rng)).collect();
    let decodings = (0..n).map(|_| random_qubit_povm(rng, m)).collect();
    Protocol::new(task, states, decodings).expect("sampled protocol is valid")
}

/// Max deviation of `exclusion + access` from 1 over random protocols of
/// mixed shapes.
pub fn complement_identity_max_dev<T: Real>(seed: u64, trials: usize) -> T {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shapes = [(1usize, 2usize), (1, 3), (2, 2), (2, 3)];
    let mut worst = T::zero();
    for t in 0..trials {
        let (n, m) = shapes[t % shapes.len()];
        let p = random_protocol::<T, _>(&mut rng, n, m);
        let dev = (eval_exclusion(&p) + eval_access(&p) - T::one()).abs();
        worst = worst.max(dev);
    }
    worst
}

/// Max round-trip deviation of Bloch <-> state over random unit vectors.
pub fn bloch_roundtrip_max_dev<T: Real>(seed: u64, trials: usize) -> T {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = T::zero();
    for _ in 0..trials {
        let v = random_unit_bloch::<T, _>(&mut rng);
        let rho = state_from_bloch(&v);
        let w = bloch_from_state(&rho).expect("qubit");
        let back = state_from_bloch(&w);
        worst = worst.max(rho.matrix().max_abs_diff(back.matrix()));
    }
    worst
}

/// Feeds `count` deliberately broken states and POVMs to the validating
/// constructors and returns how many were rejected. All of them should be.
pub fn count_rejected_mutants<T: Real>(seed: u64, count: usize) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rejected = 0;
    for case in 0..count {
        let bad = match case % 5 {
            0 => {
                // break Hermiticity of a valid state
                let rho = random_density::<T, _>(&mut rng);
                let m = ComplexMatrix::from_fn(2, |i, j| {
                    let z = rho.matrix().entry(i, j);
                    if (i, j) == (0, 1) {
                        z + Complex::new(T::zero(), real(1e-6))
                    } else {
                        z
                    }
                });
                DensityOperator::new(m).is_err()
            }
            1 => {
                // break the unit trace
                let rho = random_density::<T, _>(&mut rng);
                DensityOperator::new(rho.matrix().scale_re(real(1.001))).is_err()
            }
            2 => {
                // Bloch vector outside the ball: negative eigenvalue
                let scale: f64 = rng.gen_range(1.05..1.5);
                let dir = random_unit_bloch::<f64, _>(&mut rng);
                let h = 0.5;
                let m = ComplexMatrix::<T>::new(
                    2,
                    vec![
                        Complex::new(real(h * (1.0 + scale * dir.z())), T::zero()),
                        Complex::new(real(h * scale * dir.x()), real(-h * scale * dir.y())),
                        Complex::new(real(h * scale * dir.x()), real(h * scale * dir.y())),
                        Complex::new(real(h * (1.0 - scale * dir.z())), T::zero()),
                    ],
                )
                .expect("2x2 shape");
                DensityOperator::new(m).is_err()
            }
            3 => {
                // break POVM completeness
                let povm = random_qubit_povm::<T, _>(&mut rng, 3);
                let mut effects: Vec<_> = povm.effects().to_vec();
                effects[0] = &effects[0] + &ComplexMatrix::identity(2).scale_re(real(0.01));
                Povm::new(effects).is_err()
            }
            _ => {
                // make one effect negative while preserving the sum
                let povm = random_qubit_povm::<T, _>(&mut rng, 3);
                let mut effects: Vec<_> = povm.effects().to_vec();
                let shift = ComplexMatrix::identity(2).scale_re(real(0.1));
                effects[0] = &effects[0] - &shift;
                effects[1] = &effects[1] + &shift;
                Povm::new(effects).is_err()
            }
        };
        if bad {
            rejected += 1;
        }
    }
    rejected
}

/// Consistency sweep used by tests: total Born probability over a POVM.
pub fn total_born_probability<T: Real>(povm: &Povm<T>, rho: &DensityOperator<T>) -> Result<T, Error> {
    let mut total = T::zero();
    for e in povm.effects() {
        total = total + born_prob(rho, e)?;
    }
    Ok(total)
}
