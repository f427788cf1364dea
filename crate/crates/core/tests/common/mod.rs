//! Independent oracles for the integration and acceptance tests.
//!
//! None of these call into the eigensolver or the closed forms they are
//! used to check.

#![allow(dead_code)]

use nmrsim_core::linalg::ComplexMatrix;
use num_complex::Complex64;

/// Strict positive definiteness of a Hermitian matrix by attempting a
/// Cholesky factorization.
pub fn is_positive_definite(m: &ComplexMatrix) -> bool {
    let n = m.rows();
    let mut l = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for j in 0..n {
        let d = m[(j, j)].re - l[j][..j].iter().map(|x| x.norm_sqr()).sum::<f64>();
        if d.is_nan() || d <= 0.0 {
            return false;
        }
        let ljj = d.sqrt();
        l[j][j] = Complex64::new(ljj, 0.0);
        for i in j + 1..n {
            let dot: Complex64 = l[i][..j].iter().zip(&l[j][..j]).map(|(a, b)| a * b.conj()).sum();
            l[i][j] = (m[(i, j)] - dot) / ljj;
        }
    }
    true
}

/// Partial transpose on the second qubit of a 4x4 matrix, written out via
/// explicit (a b, a' b') -> (a b', a' b) index swapping.
pub fn partial_transpose_b(m: &ComplexMatrix) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(4, 4);
    for a in 0..2 {
        for b in 0..2 {
            for ap in 0..2 {
                for bp in 0..2 {
                    out[(2 * a + bp, 2 * ap + b)] = m[(2 * a + b, 2 * ap + bp)];
                }
            }
        }
    }
    out
}

fn pseudo_pure_matrix(eps: f64, rho1: &ComplexMatrix) -> ComplexMatrix {
    let d = rho1.rows();
    let mut m = rho1.scale_real(eps);
    for i in 0..d {
        m[(i, i)] += Complex64::new((1.0 - eps) / d as f64, 0.0);
    }
    m
}

/// Whether the pseudo-pure 2-qubit state at `eps` has a positive definite
/// partial transpose.
pub fn ppt_at(eps: f64, rho1: &ComplexMatrix) -> bool {
    is_positive_definite(&partial_transpose_b(&pseudo_pure_matrix(eps, rho1)))
}

/// Largest ε in [0, 1] for which the pseudo-pure state stays PPT, by
/// bisection on the Cholesky test.
pub fn bisection_critical_epsilon(rho1: &ComplexMatrix) -> f64 {
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    if ppt_at(1.0, rho1) {
        return 1.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if ppt_at(mid, rho1) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Euclidean projection onto the probability simplex by enumerating every
/// support set and keeping the closest feasible candidate.
pub fn brute_force_simplex(u: &[f64]) -> Vec<f64> {
    let n = u.len();
    let mut best: Option<(f64, Vec<f64>)> = None;
    for mask in 1u32..(1 << n) {
        let support: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let sum: f64 = support.iter().map(|&i| u[i]).sum();
        let shift = (sum - 1.0) / support.len() as f64;
        let mut x = vec![0.0; n];
        let mut feasible = true;
        for &i in &support {
            x[i] = u[i] - shift;
            if x[i] < 0.0 {
                feasible = false;
            }
        }
        if !feasible {
            continue;
        }
        let dist: f64 = x.iter().zip(u).map(|(a, b)| (a - b).powi(2)).sum();
        if best.as_ref().map_or(true, |(d, _)| dist < *d) {
            best = Some((dist, x));
        }
    }
    best.expect("some support is always feasible").1
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &head) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Average of diag(p) over every permutation of the non-target indices.
pub fn permutation_average(p: &[f64], target: usize) -> Vec<f64> {
    let others: Vec<usize> = (0..p.len()).filter(|&i| i != target).collect();
    let perms = permutations(&others);
    let mut acc = vec![0.0; p.len()];
    for perm in &perms {
        acc[target] += p[target];
        for (slot, &src) in others.iter().zip(perm) {
            acc[*slot] += p[src];
        }
    }
    acc.iter().map(|x| x / perms.len() as f64).collect()
}

/// Exact `max |(U†U − I)_jk|` for a matrix whose entries are
/// `(re + i·im)/4` with integer re, im.
pub fn exact_quarter_unitarity_defect(entries: &[[(i64, i64); 4]; 4]) -> f64 {
    let mut worst = 0.0f64;
    for j in 0..4 {
        for k in 0..4 {
            // sum_i conj(u_ij) u_ik, scaled by 16
            let (mut re, mut im) = (0i64, 0i64);
            for row in entries {
                let (a, b) = row[j];
                let (c, d) = row[k];
                re += a * c + b * d;
                im += a * d - b * c;
            }
            if j == k {
                re -= 16;
            }
            let modulus = ((re * re + im * im) as f64).sqrt() / 16.0;
            worst = worst.max(modulus);
        }
    }
    worst
}

/// The step unitary in quarter units, with the (4,4) entry given.
pub fn step_unitary_quarters(entry_44: (i64, i64)) -> [[(i64, i64); 4]; 4] {
    let mut m = [[(-1, 1); 4]; 4];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = (3, 1);
        row[3] = (1, 1);
    }
    m[3][3] = entry_44;
    m
}
