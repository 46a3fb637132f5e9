//! Small dense real kernels: cyclic Jacobi eigenvalues for symmetric matrices
//! and one-sided Jacobi singular values. Plenty for the dimensions this crate
//! touches (Hermitian operators up to 16x16 via their real embedding, 9x9
//! communication matrices).

use crate::scalar::{real, Real};

const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a symmetric `n x n` matrix (row-major), ascending.
pub(crate) fn sym_eigenvalues<T: Real>(mut a: Vec<T>, n: usize) -> Vec<T> {
    debug_assert_eq!(a.len(), n * n);
    let eps = T::epsilon() * real::<T>(n as f64);
    for _ in 0..MAX_SWEEPS {
        let mut off = T::zero();
        let mut scale = T::zero();
        for p in 0..n {
            scale = scale + a[p * n + p].abs();
            for q in (p + 1)..n {
                off = off + a[p * n + q] * a[p * n + q];
            }
        }
        if off.sqrt() <= eps * scale.max(T::one()) {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.abs() <= T::epsilon() * scale {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (two_t::<T>() * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                // rotate rows and columns p, q
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eigs: Vec<T> = (0..n).map(|i| a[i * n + i]).collect();
    eigs.sort_by(|x, y| x.partial_cmp(y).expect("eigenvalues are finite"));
    eigs
}

/// Singular values of a `rows x cols` matrix (row-major), descending.
///
/// One-sided Jacobi on the columns; small singular values come out with high
/// relative accuracy, which the rank thresholds rely on.
pub(crate) fn singular_values<T: Real>(a: &[T], rows: usize, cols: usize) -> Vec<T> {
    debug_assert_eq!(a.len(), rows * cols);
    // Work with the tall orientation so columns are what we orthogonalize.
    let (r, c, mut m) = if rows >= cols {
        (rows, cols, a.to_vec())
    } else {
        let mut t = vec![T::zero(); rows * cols];
        for i in 0..rows {
            for j in 0..cols {
                t[j * rows + i] = a[i * cols + j];
            }
        }
        (cols, rows, t)
    };
    let col = |m: &[T], j: usize, i: usize| m[i * c + j];
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..c {
            for q in (p + 1)..c {
                let mut app = T::zero();
                let mut aqq = T::zero();
                let mut apq = T::zero();
                for i in 0..r {
                    let x = col(&m, p, i);
                    let y = col(&m, q, i);
                    app = app + x * x;
                    aqq = aqq + y * y;
                    apq = apq + x * y;
                }
                if apq.abs() <= T::epsilon() * (app * aqq).sqrt() || apq == T::zero() {
                    continue;
                }
                rotated = true;
                let zeta = (aqq - app) / (two_t::<T>() * apq);
                let t = zeta.signum() / (zeta.abs() + (T::one() + zeta * zeta).sqrt());
                let cs = T::one() / (T::one() + t * t).sqrt();
                let sn = cs * t;
                for i in 0..r {
                    let x = m[i * c + p];
                    let y = m[i * c + q];
                    m[i * c + p] = cs * x - sn * y;
                    m[i * c + q] = sn * x + cs * y;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut sv: Vec<T> = (0..c)
        .map(|j| {
            let mut s = T::zero();
            for i in 0..r {
                let x = m[i * c + j];
                s = s + x * x;
            }
            s.sqrt()
        })
        .collect();
    sv.sort_by(|x, y| y.partial_cmp(x).expect("singular values are finite"));
    sv
}

fn two_t<T: Real>() -> T {
    real(2.0)
}
