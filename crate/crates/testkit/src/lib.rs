//! Reference computations for testing `citeweight`.
//!
//! Nothing here calls into `citeweight`: every oracle works from plain
//! `Vec<Vec<_>>` inputs through a separate code path (exact integer
//! arithmetic, textbook triple loops, or a general dense eigensolver).

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Cited×citing counts among eight biochemistry journals, 1977.
pub const PRICE_COUNTS: [[u64; 8]; 8] = [
    [9384, 6181, 2107, 3750, 609, 2335, 719, 2511],
    [2406, 7550, 865, 1757, 365, 1478, 408, 1120],
    [2770, 2184, 3995, 1946, 1470, 488, 1239, 1329],
    [2553, 2591, 1057, 3827, 299, 653, 601, 887],
    [1007, 1230, 1407, 837, 2963, 379, 603, 630],
    [1183, 1812, 326, 632, 201, 2464, 150, 528],
    [1109, 1136, 1251, 1347, 504, 216, 2545, 367],
    [1624, 1719, 695, 1040, 263, 564, 241, 1313],
];

pub const PRICE_CITED_TOTALS: [f64; 8] = [27596.0, 15949.0, 15421.0, 12468.0, 9056.0, 7296.0, 8475.0, 7459.0];
pub const PRICE_CITING_TOTALS: [f64; 8] = [22036.0, 24403.0, 11703.0, 15136.0, 6674.0, 8577.0, 6506.0, 8685.0];
pub const PRICE_GRAND_TOTAL: f64 = 103720.0;

/// Published normalized matrix, three decimals.
pub const PUBLISHED_NORMALIZED: [[f64; 8]; 8] = [
    [0.426, 0.280, 0.096, 0.170, 0.028, 0.106, 0.033, 0.114],
    [0.099, 0.309, 0.035, 0.072, 0.015, 0.061, 0.017, 0.046],
    [0.237, 0.187, 0.341, 0.166, 0.126, 0.042, 0.106, 0.114],
    [0.169, 0.171, 0.070, 0.253, 0.020, 0.043, 0.040, 0.059],
    [0.151, 0.184, 0.211, 0.125, 0.444, 0.057, 0.090, 0.094],
    [0.138, 0.211, 0.038, 0.074, 0.023, 0.287, 0.017, 0.062],
    [0.170, 0.175, 0.192, 0.207, 0.077, 0.033, 0.391, 0.056],
    [0.187, 0.198, 0.080, 0.120, 0.030, 0.065, 0.028, 0.151],
];
pub const PUBLISHED_NORMALIZED_ROW_SUMS: [f64; 8] = [1.252, 0.654, 1.318, 0.824, 1.357, 0.851, 1.303, 0.859];
pub const PUBLISHED_NORMALIZED_TOTAL: f64 = 8.416;

/// Published influence weights after seven cycles.
pub const PUBLISHED_IW_WITH: [f64; 8] = [0.1363, 0.0592, 0.1739, 0.0870, 0.1942, 0.0809, 0.1770, 0.0914];
pub const PUBLISHED_IW_WITHOUT: [f64; 8] = [0.1361, 0.0591, 0.1740, 0.0869, 0.1947, 0.0807, 0.1772, 0.0913];
pub const PUBLISHED_IW_PCT_CHANGE: [f64; 8] = [-0.14, -0.17, 0.04, -0.12, 0.21, -0.20, 0.11, -0.12];

pub fn price_rows() -> Vec<Vec<f64>> {
    PRICE_COUNTS
        .iter()
        .map(|r| r.iter().map(|&v| v as f64).collect())
        .collect()
}

/// Textbook `i, j, k` triple loop.
pub fn brute_force_matmul(a: &[Vec<f64>], b: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = a.len();
    let mut out = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = 0.0;
            for k in 0..n {
                acc += a[i][k] * b[k][j];
            }
            out[i][j] = acc;
        }
    }
    out
}

pub fn brute_force_power(a: &[Vec<f64>], k: u32) -> Vec<Vec<f64>> {
    let mut acc = a.to_vec();
    for _ in 1..k {
        acc = brute_force_matmul(&acc, a);
    }
    acc
}

fn exact_share_after(counts: &[Vec<BigInt>], k: usize) -> Vec<BigRational> {
    let n = counts.len();
    let mut v: Vec<BigInt> = vec![BigInt::from(1); n];
    for _ in 0..k {
        v = counts
            .iter()
            .map(|row| row.iter().zip(&v).map(|(a, b)| a * b).sum())
            .collect();
    }
    let total: BigInt = v.iter().sum();
    v.into_iter().map(|x| BigRational::new(x, total.clone())).collect()
}

/// Power-weakness ratio after `k` cycles in exact rational arithmetic.
///
/// Renormalizing every cycle only rescales the iterate, so the stochastic
/// vector after `k` cycles is `Z^k 1` divided by its sum. The same holds
/// for the transpose.
pub fn exact_power_weakness(counts: &[Vec<u64>], k: usize) -> Vec<f64> {
    let n = counts.len();
    let z: Vec<Vec<BigInt>> = counts
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let zt: Vec<Vec<BigInt>> = (0..n).map(|i| (0..n).map(|j| z[j][i].clone()).collect()).collect();
    let p = exact_share_after(&z, k);
    let q = exact_share_after(&zt, k);
    p.iter()
        .zip(&q)
        .map(|(a, b)| {
            assert!(!b.is_zero(), "zero weakness");
            (a / b).to_f64().expect("finite ratio")
        })
        .collect()
}

/// Row-normalized matrix `Z[i][j] / R_i` with `R_i` the column-`i` sum,
/// built directly from the definition.
pub fn reference_normalized(counts: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = counts.len();
    let refs: Vec<f64> = (0..n).map(|j| (0..n).map(|i| counts[i][j]).sum()).collect();
    (0..n)
        .map(|i| (0..n).map(|j| counts[i][j] / refs[i]).collect())
        .collect()
}

fn to_dmatrix(m: &[Vec<f64>]) -> DMatrix<f64> {
    let n = m.len();
    DMatrix::from_fn(n, n, |i, j| m[i][j])
}

/// Eigenvalue moduli sorted in decreasing order, from a Schur decomposition.
pub fn eigenvalue_moduli(m: &[Vec<f64>]) -> Vec<f64> {
    let mut moduli: Vec<f64> = to_dmatrix(m).complex_eigenvalues().iter().map(|c| c.norm()).collect();
    moduli.sort_by(|a, b| b.partial_cmp(a).unwrap());
    moduli
}

/// `|lambda_2| / |lambda_1|`.
pub fn subdominant_ratio(m: &[Vec<f64>]) -> f64 {
    let moduli = eigenvalue_moduli(m);
    moduli[1] / moduli[0]
}

/// Dominant eigenvector scaled to sum one.
///
/// The dominant eigenvalue is taken from the Schur eigenvalues; the vector
/// is the right singular vector of `M - lambda I` for its smallest singular
/// value.
pub fn dominant_eigenvector(m: &[Vec<f64>]) -> Vec<f64> {
    let a = to_dmatrix(m);
    let n = a.nrows();
    let lambda = a
        .complex_eigenvalues()
        .iter()
        .max_by(|x, y| x.norm().partial_cmp(&y.norm()).unwrap())
        .copied()
        .expect("non-empty matrix");
    assert!(lambda.im.abs() < 1e-9, "dominant eigenvalue is not real: {lambda}");
    let shifted = &a - DMatrix::identity(n, n) * lambda.re;
    let svd = shifted.svd(false, true);
    let v_t = svd.v_t.expect("requested right singular vectors");
    let (min_idx, _) = svd
        .singular_values
        .iter()
        .enumerate()
        .min_by(|x, y| x.1.partial_cmp(y.1).unwrap())
        .unwrap();
    let v: Vec<f64> = v_t.row(min_idx).iter().copied().collect();
    let total: f64 = v.iter().sum();
    v.iter().map(|x| x / total).collect()
}

/// Deterministic random matrix with integer entries in `lo..=hi`.
pub fn random_integer_matrix(rng: &mut StdRng, n: usize, lo: u64, hi: u64) -> Vec<Vec<u64>> {
    (0..n)
        .map(|_| (0..n).map(|_| rng.random_range(lo..=hi)).collect())
        .collect()
}

pub fn seeded(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn as_f64(m: &[Vec<u64>]) -> Vec<Vec<f64>> {
    m.iter().map(|r| r.iter().map(|&v| v as f64).collect()).collect()
}
