use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::realization::{assemble, normalized, trace_form, CMat, RootVector};
use crate::rootalg::{RootDecoratedAlgebra, Space};
use crate::{Result, SymmetricError};

const I: Complex64 = Complex64::new(0.0, 1.0);

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

#[derive(Clone, Copy, PartialEq)]
enum Field {
    Real,
    Complex,
    Quaternion,
}

impl Field {
    /// Units `1, i, j, k` available in the field, as quaternion coordinates.
    fn units(self) -> &'static [([f64; 4], &'static str)] {
        const ALL: [([f64; 4], &str); 4] =
            [([1.0, 0.0, 0.0, 0.0], ""), ([0.0, 1.0, 0.0, 0.0], "i"), ([0.0, 0.0, 1.0, 0.0], "j"), ([0.0, 0.0, 0.0, 1.0], "k")];
        match self {
            Field::Real => &ALL[..1],
            Field::Complex => &ALL[..2],
            Field::Quaternion => &ALL,
        }
    }

    /// Complex matrix of left multiplication by `q`: a scalar for R and C,
    /// `[[z, -conj(w)], [w, conj(z)]]` with `q = z + w j` for H.
    fn phi(self, q: [f64; 4]) -> CMat {
        let z = Complex64::new(q[0], q[1]);
        match self {
            Field::Real | Field::Complex => DMatrix::from_element(1, 1, z),
            Field::Quaternion => {
                let w = Complex64::new(q[2], -q[3]);
                DMatrix::from_row_slice(2, 2, &[z, -w.conj(), w, z.conj()])
            }
        }
    }
}

fn conj(q: [f64; 4]) -> [f64; 4] {
    [q[0], -q[1], -q[2], -q[3]]
}

fn kron(a: &CMat, r: &DMatrix<f64>) -> CMat {
    let (n, m) = r.shape();
    DMatrix::from_fn(a.nrows() * n, a.ncols() * m, |i, j| a[(i / n, j / m)] * r[(i % n, j % m)])
}

fn unit(n: usize, i: usize) -> DVector<f64> {
    DVector::from_fn(n, |k, _| if k == i { 1.0 } else { 0.0 })
}

fn omega_root(len: usize, terms: &[(usize, i32)]) -> Vec<i32> {
    let mut r = vec![0; len];
    for &(j, c) in terms {
        r[j] += c;
    }
    r
}

/// `so(p,q)`, `su(p,q)` and `sp(p,q)` as `{A : A M + M A* = 0}` with
/// `M = diag(I_p, -I_q)`; quaternionic matrices act on `C^(2(p+q))`.
///
/// Cartan vectors are `H_i = E_{i,p+i} + E_{p+i,i}`. With `f_i^(+-) =
/// e_i +- e_{p+i}` and `g_c = e_{2p+c}`, root vectors are
/// `u q v* M - v conj(q) u* M` for a unit `q` and
///
/// * `M_ij` (`omega_j - omega_i`): `u = f_j^+`, `v = f_i^-`,
/// * `P_ij` (`omega_j + omega_i`): `u = f_j^+`, `v = f_i^+`,
/// * `T_i` (`2 omega_i`, imaginary `q` only): `u = v = f_i^+`,
/// * `W_k.c` (`omega_k`): `u = f_k^+`, `v = g_c`; these span the block `C = E`.
///
/// Each vector is rescaled to the common norm; the unit is appended to the
/// tag (`W_1.2j`).
fn build_pq(field: Field, p: usize, q: usize) -> Result<RootDecoratedAlgebra> {
    if p < 1 || p > q {
        return Err(SymmetricError::InvalidParameters(format!("need 1 <= p <= q, got p = {p}, q = {q}")));
    }
    if p == 1 && q == 1 && field == Field::Real {
        return Err(SymmetricError::InvalidParameters("so(1,1) has no nilradical".into()));
    }
    let space = match field {
        Field::Real => Space::SoPq { p, q },
        Field::Complex => Space::SuPq { p, q },
        Field::Quaternion => Space::SpPq { p, q },
    };
    let n = p + q;
    let m = q - p;
    let metric = DMatrix::from_fn(n, n, |i, j| if i != j { 0.0 } else if i < p { 1.0 } else { -1.0 });
    let f_plus = |i: usize| unit(n, i) + unit(n, p + i);
    let f_minus = |i: usize| unit(n, i) - unit(n, p + i);
    let one = field.phi([1.0, 0.0, 0.0, 0.0]);

    let generator = |u: &DVector<f64>, qu: [f64; 4], v: &DVector<f64>| -> CMat {
        let first = u * (&metric * v).transpose();
        let second = v * (&metric * u).transpose();
        kron(&field.phi(qu), &first) - kron(&field.phi(conj(qu)), &second)
    };

    let cartan: Vec<(String, CMat)> = (0..p)
        .map(|i| {
            let h = DMatrix::from_fn(n, n, |r, s| if (r == i && s == p + i) || (r == p + i && s == i) { 1.0 } else { 0.0 });
            (format!("H_{}", i + 1), kron(&one, &h))
        })
        .collect();
    let kappa = trace_form(&cartan[0].1, &cartan[0].1);

    let mut vectors = Vec::new();
    let mut push = |tag: String, matrix: CMat, root: Vec<i32>| {
        vectors.push(RootVector { tag, matrix: normalized(matrix, kappa), root });
    };
    for k in 0..p {
        for col in 0..m {
            for &(qu, name) in field.units() {
                let x = generator(&f_plus(k), qu, &unit(n, 2 * p + col));
                push(format!("W_{}.{}{name}", k + 1, col + 1), x, omega_root(p, &[(k, 1)]));
            }
        }
    }
    for j in 0..p {
        for i in 0..j {
            for &(qu, name) in field.units() {
                let x = generator(&f_plus(j), qu, &f_minus(i));
                push(format!("M_{}{}{name}", i + 1, j + 1), x, omega_root(p, &[(j, 1), (i, -1)]));
            }
            for &(qu, name) in field.units() {
                let x = generator(&f_plus(j), qu, &f_plus(i));
                push(format!("P_{}{}{name}", i + 1, j + 1), x, omega_root(p, &[(j, 1), (i, 1)]));
            }
        }
    }
    for i in 0..p {
        for &(qu, name) in &field.units()[1..] {
            let x = generator(&f_plus(i), qu, &f_plus(i));
            push(format!("T_{}{name}", i + 1), x, omega_root(p, &[(i, 2)]));
        }
    }
    assemble(space, cartan, vectors, DMatrix::identity(p, p))
}

pub fn build_so_pq(p: usize, q: usize) -> Result<RootDecoratedAlgebra> {
    build_pq(Field::Real, p, q)
}

pub fn build_su_pq(p: usize, q: usize) -> Result<RootDecoratedAlgebra> {
    build_pq(Field::Complex, p, q)
}

pub fn build_sp_pq(p: usize, q: usize) -> Result<RootDecoratedAlgebra> {
    build_pq(Field::Quaternion, p, q)
}

/// `so(n, H)` in its `2n x 2n` complex form `[[X, Y], [-conj Y, conj X]]`,
/// with the Cartan vectors `H_j = (i/sqrt 2)(E_{2j-1,2j} - E_{n+2j-1,n+2j})`
/// and the root vectors `A+-_jk, B+-_jk, C+-_jk, D+-_jk` (roots
/// `omega_j +- omega_k`), `G_k` (`2 omega_k`) and, for odd `n`,
/// `X_k, Y_k, Z_k, W_k` (`omega_k`). `E_ab` is the skew elementary matrix.
pub fn build_so_nh(n: usize) -> Result<RootDecoratedAlgebra> {
    if n < 4 {
        return Err(SymmetricError::InvalidParameters(format!("so(n,H) needs n >= 4, got {n}")));
    }
    let big = 2 * n;
    let m = n / 2;
    // 1-based skew elementary matrix.
    let e = |a: usize, b: usize| -> CMat {
        let mut x = CMat::zeros(big, big);
        x[(a - 1, b - 1)] += c(1.0);
        x[(b - 1, a - 1)] -= c(1.0);
        x
    };
    let r2 = std::f64::consts::SQRT_2;
    let cartan: Vec<(String, CMat)> = (1..=m)
        .map(|j| (format!("H_{j}"), (e(2 * j - 1, 2 * j) - e(n + 2 * j - 1, n + 2 * j)) * (I / r2)))
        .collect();

    let mut vectors = Vec::new();
    let root = |terms: &[(usize, i32)]| omega_root(m, &terms.iter().map(|&(j, c)| (j - 1, c)).collect::<Vec<_>>());
    for j in 1..=m {
        for k in j + 1..=m {
            for (s, sign) in [(1.0, "+"), (-1.0, "-")] {
                let half = c(0.5);
                let a = (e(2 * j - 1, 2 * k - 1) - e(2 * j, 2 * k) * c(s) + e(n + 2 * j - 1, n + 2 * k - 1)
                    - e(n + 2 * j, n + 2 * k) * c(s)
                    + (e(2 * j - 1, 2 * k) * c(-s) - e(2 * j, 2 * k - 1) + e(n + 2 * j - 1, n + 2 * k) * c(s)
                        + e(n + 2 * j, n + 2 * k - 1))
                        * I)
                    * half;
                let b = (e(2 * j - 1, 2 * k) + e(2 * j, 2 * k - 1) * c(s) + e(n + 2 * j - 1, n + 2 * k)
                    + e(n + 2 * j, n + 2 * k - 1) * c(s)
                    + (e(2 * j - 1, 2 * k - 1) * c(s) - e(2 * j, 2 * k) - e(n + 2 * j - 1, n + 2 * k - 1) * c(s)
                        + e(n + 2 * j, n + 2 * k))
                        * I)
                    * half;
                let cc = (e(2 * j - 1, n + 2 * k) - e(2 * j, n + 2 * k - 1) * c(s) - e(2 * k - 1, n + 2 * j) * c(s)
                    + e(2 * k, n + 2 * j - 1)
                    + (e(2 * j - 1, n + 2 * k - 1) * c(-s) - e(2 * j, n + 2 * k)
                        + e(2 * k - 1, n + 2 * j - 1) * c(s)
                        + e(2 * k, n + 2 * j))
                        * I)
                    * half;
                let d = (e(2 * j - 1, n + 2 * k - 1)
                    + e(2 * k - 1, n + 2 * j - 1)
                    + e(2 * j, n + 2 * k) * c(s)
                    + e(2 * k, n + 2 * j) * c(s)
                    + (e(2 * j - 1, n + 2 * k) * c(s) - e(2 * j, n + 2 * k - 1) + e(2 * k - 1, n + 2 * j)
                        - e(2 * k, n + 2 * j - 1) * c(s))
                        * I)
                    * half;
                let r = root(&[(j, 1), (k, if s > 0.0 { 1 } else { -1 })]);
                for (name, matrix) in [("A", a), ("B", b), ("C", cc), ("D", d)] {
                    vectors.push((format!("{name}{sign}_{j}{k}"), matrix, r.clone()));
                }
            }
        }
    }
    // Within each pair, order A+, A-, B+, B-, ...
    let mut ordered: Vec<RootVector> = Vec::new();
    for chunk in vectors.chunks(8) {
        for letter in 0..4 {
            for sign in 0..2 {
                let (tag, matrix, root) = &chunk[sign * 4 + letter];
                ordered.push(RootVector { tag: tag.clone(), matrix: matrix.clone(), root: root.clone() });
            }
        }
    }
    for k in 1..=m {
        let g = (e(2 * k - 1, n + 2 * k - 1) + e(2 * k, n + 2 * k) + (e(2 * k - 1, n + 2 * k) - e(2 * k, n + 2 * k - 1)) * I)
            * c(1.0 / r2);
        ordered.push(RootVector { tag: format!("G_{k}"), matrix: g, root: root(&[(k, 2)]) });
    }
    if n % 2 == 1 {
        for k in 1..=m {
            let x = (e(2 * k, n) + e(n + 2 * k, big) + (e(2 * k - 1, n) - e(n + 2 * k - 1, big)) * I) * c(1.0 / r2);
            let y = (e(2 * k - 1, n) + e(n + 2 * k - 1, big) - (e(2 * k, n) - e(n + 2 * k, big)) * I) * c(1.0 / r2);
            let z = (e(2 * k, big) + e(n, n + 2 * k) + (e(2 * k - 1, big) - e(n, n + 2 * k - 1)) * I) * c(1.0 / r2);
            let w = (e(2 * k - 1, big) + e(n, n + 2 * k - 1) - (e(2 * k, big) - e(n, n + 2 * k)) * I) * c(1.0 / r2);
            for (name, matrix) in [("X", x), ("Y", y), ("Z", z), ("W", w)] {
                ordered.push(RootVector { tag: format!("{name}_{k}"), matrix, root: root(&[(k, 1)]) });
            }
        }
    }
    let omega = DMatrix::identity(m, m) / r2;
    assemble(Space::SoNH { n }, cartan, ordered, omega)
}

/// Orthonormal basis of the traceless diagonal vectors in `R^n`.
fn helmert(n: usize) -> Vec<DVector<f64>> {
    (1..n)
        .map(|a| {
            let scale = ((a * (a + 1)) as f64).sqrt();
            DVector::from_fn(n, |i, _| {
                if i < a {
                    1.0 / scale
                } else if i == a {
                    -(a as f64) / scale
                } else {
                    0.0
                }
            })
        })
        .collect()
}

fn helmert_omega(n: usize) -> DMatrix<f64> {
    let hs = helmert(n);
    DMatrix::from_fn(n, n - 1, |j, a| hs[a][j])
}

fn elementary(size: usize, a: usize, b: usize) -> CMat {
    let mut x = CMat::zeros(size, size);
    x[(a - 1, b - 1)] = c(1.0);
    x
}

/// `sl(n, H)` as `[[X, -conj Y], [Y, conj X]]` with `Re tr X = 0`.
/// `a` is `diag(d, d)` for traceless real `d` (Helmert basis, `H_1..H_{n-1}`),
/// and the root space of `omega_j - omega_k` is spanned by
/// `A_jk = i sqrt2 (F_jk - F_{n+j,n+k})`, `B_jk = i sqrt2 (F_{j,n+k} + F_{n+j,k})`,
/// `C_jk = sqrt2 (F_{j,n+k} - F_{n+j,k})`, `D_jk = sqrt2 (F_jk + F_{n+j,n+k})`.
pub fn build_sl_nh(n: usize) -> Result<RootDecoratedAlgebra> {
    if n < 2 {
        return Err(SymmetricError::InvalidParameters(format!("sl(n,H) needs n >= 2, got {n}")));
    }
    let big = 2 * n;
    let f = |a: usize, b: usize| elementary(big, a, b);
    let r2 = c(std::f64::consts::SQRT_2);
    let cartan = helmert(n)
        .iter()
        .enumerate()
        .map(|(a, h)| {
            let diag = DVector::from_fn(big, |i, _| c(h[i % n]));
            (format!("H_{}", a + 1), CMat::from_diagonal(&diag))
        })
        .collect();
    let mut vectors = Vec::new();
    for j in 1..=n {
        for k in j + 1..=n {
            let root = omega_root(n, &[(j - 1, 1), (k - 1, -1)]);
            let mats = [
                ("A", (f(j, k) - f(n + j, n + k)) * (I * r2)),
                ("B", (f(j, n + k) + f(n + j, k)) * (I * r2)),
                ("C", (f(j, n + k) - f(n + j, k)) * r2),
                ("D", (f(j, k) + f(n + j, n + k)) * r2),
            ];
            for (name, matrix) in mats {
                vectors.push(RootVector { tag: format!("{name}_{j}{k}"), matrix, root: root.clone() });
            }
        }
    }
    assemble(Space::SlNH { n }, cartan, vectors, helmert_omega(n))
}

fn build_sl_upper(n: usize, complex: bool) -> Result<RootDecoratedAlgebra> {
    let cartan = helmert(n)
        .iter()
        .enumerate()
        .map(|(a, h)| (format!("H_{}", a + 1), CMat::from_diagonal(&h.map(c))))
        .collect::<Vec<_>>();
    let kappa = trace_form(&cartan[0].1, &cartan[0].1);
    let mut vectors = Vec::new();
    for j in 1..=n {
        for k in j + 1..=n {
            let root = omega_root(n, &[(j - 1, 1), (k - 1, -1)]);
            let x = normalized(elementary(n, j, k), kappa);
            if complex {
                vectors.push(RootVector { tag: format!("X_{j}{k}"), matrix: x.clone(), root: root.clone() });
                vectors.push(RootVector { tag: format!("JX_{j}{k}"), matrix: x * I, root });
            } else {
                vectors.push(RootVector { tag: format!("E_{j}{k}"), matrix: x, root });
            }
        }
    }
    let space = if complex { Space::TypeIvSl { n } } else { Space::SlNR { n } };
    assemble(space, cartan, vectors, helmert_omega(n))
}

/// `sl(n, C)` as a real algebra (the symmetric space `SL(n,C)/SU(n)`):
/// `a` is real traceless diagonal, and each root `omega_j - omega_k` has the
/// pair `X_jk = sqrt2 F_jk`, `JX_jk = i X_jk`.
pub fn build_type_iv_sl(n: usize) -> Result<RootDecoratedAlgebra> {
    if n < 2 {
        return Err(SymmetricError::InvalidParameters(format!("sl(n,C) needs n >= 2, got {n}")));
    }
    build_sl_upper(n, true)
}

/// `sl(n, R)`, the normal real form, with root vectors `E_jk = sqrt2 F_jk`.
pub fn build_sl_nr(n: usize) -> Result<RootDecoratedAlgebra> {
    if n < 2 {
        return Err(SymmetricError::InvalidParameters(format!("sl(n,R) needs n >= 2, got {n}")));
    }
    build_sl_upper(n, false)
}
