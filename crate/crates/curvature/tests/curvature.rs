use nalgebra::{DMatrix, DVector};
use proptest::prelude::*;
use solvgeom_algebra::{Decoration, MetricLieAlgebra};
use solvgeom_curvature::{
    eigenvalue_type, einstein_verdict, mean_curvature, rank_one_reduction, ricci, sectional, u_map,
    CurvatureError,
};

fn e(n: usize, i: usize) -> DVector<f64> {
    let mut v = DVector::zeros(n);
    v[i] = 1.0;
    v
}

/// Levi-Civita connection of a left-invariant metric on left-invariant fields.
fn nabla(alg: &MetricLieAlgebra, x: &DVector<f64>, y: &DVector<f64>) -> DVector<f64> {
    let adx = alg.ad_matrix(x).unwrap();
    let ady = alg.ad_matrix(y).unwrap();
    let sx = alg.metric_adjoint(&adx).unwrap();
    let sy = alg.metric_adjoint(&ady).unwrap();
    (alg.bracket(x, y).unwrap() - sx * y - sy * x) * 0.5
}

fn riemann(alg: &MetricLieAlgebra, x: &DVector<f64>, y: &DVector<f64>, z: &DVector<f64>) -> DVector<f64> {
    let xy = alg.bracket(x, y).unwrap();
    nabla(alg, x, &nabla(alg, y, z)) - nabla(alg, y, &nabla(alg, x, z)) - nabla(alg, &xy, z)
}

fn koszul_ricci(alg: &MetricLieAlgebra) -> DMatrix<f64> {
    let n = alg.dim();
    let frame = alg.frame();
    DMatrix::from_fn(n, n, |i, j| {
        (0..n)
            .map(|a| {
                let f = frame.column(a).into_owned();
                alg.inner(&riemann(alg, &f, &e(n, i), &e(n, j)), &f)
            })
            .sum()
    })
}

fn koszul_sectional(alg: &MetricLieAlgebra, x: &DVector<f64>, y: &DVector<f64>) -> f64 {
    let area = alg.inner(x, x) * alg.inner(y, y) - alg.inner(x, y).powi(2);
    alg.inner(&riemann(alg, x, y, y), x) / area
}

/// Structure constants of the span of linearly independent matrices, assumed
/// closed under the commutator.
fn matrix_algebra(mats: &[DMatrix<f64>]) -> MetricLieAlgebra {
    let n = mats.len();
    let flat = DMatrix::from_columns(&mats.iter().map(|m| DVector::from_column_slice(m.as_slice())).collect::<Vec<_>>());
    let pinv = flat.clone().pseudo_inverse(1e-12).unwrap();
    let mut tensor = vec![0.0; n * n * n];
    for i in 0..n {
        for j in 0..n {
            let c = &mats[i] * &mats[j] - &mats[j] * &mats[i];
            let coords = &pinv * DVector::from_column_slice(c.as_slice());
            for k in 0..n {
                tensor[(i * n + j) * n + k] = coords[k];
            }
        }
    }
    MetricLieAlgebra::from_tensor(n, &tensor, 1e-9).unwrap()
}

fn unit(size: usize, r: usize, c: usize) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(size, size);
    m[(r, c)] = 1.0;
    m
}

/// Upper triangular 3x3 matrices, recombined by `p` and given gram `g`.
fn triangular_random(p: &DMatrix<f64>, g: DMatrix<f64>) -> MetricLieAlgebra {
    let base: Vec<_> = [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2), (0, 2)].iter().map(|&(r, c)| unit(3, r, c)).collect();
    let mats: Vec<_> = (0..6)
        .map(|a| (0..6).fold(DMatrix::zeros(3, 3), |acc, b| acc + &base[b] * p[(b, a)]))
        .collect();
    matrix_algebra(&mats).with_gram(g).unwrap()
}

fn sl2(g: DMatrix<f64>) -> MetricLieAlgebra {
    let h = DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, -1.0]);
    matrix_algebra(&[h, unit(2, 0, 1), unit(2, 1, 0)]).with_gram(g).unwrap()
}

fn real_hyperbolic(n: usize) -> MetricLieAlgebra {
    let quads: Vec<_> = (1..n).map(|i| (0, i, i, 1.0)).collect();
    MetricLieAlgebra::new(n, quads)
        .unwrap()
        .with_decoration(Decoration { a_indices: vec![0], n_indices: (1..n).collect(), roots: vec![vec![1.0]; n - 1] })
        .unwrap()
}

/// Complex hyperbolic plane: basis A, X1, X2, Z with [X1, X2] = Z.
fn complex_hyperbolic_plane() -> MetricLieAlgebra {
    MetricLieAlgebra::new(4, [(0, 1, 1, 0.5), (0, 2, 2, 0.5), (0, 3, 3, 1.0), (1, 2, 3, 1.0)])
        .unwrap()
        .with_decoration(Decoration {
            a_indices: vec![0],
            n_indices: vec![1, 2, 3],
            roots: vec![vec![0.5], vec![0.5], vec![1.0]],
        })
        .unwrap()
}

fn max_diff(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    (a - b).amax()
}

fn spd(seed: &[f64], n: usize) -> DMatrix<f64> {
    let a = DMatrix::from_row_slice(n, n, &seed[..n * n]);
    a.transpose() * &a + DMatrix::identity(n, n)
}

#[test]
fn real_hyperbolic_ricci_and_sectional() {
    for n in 2..6 {
        let alg = real_hyperbolic(n);
        let ric = ricci(&alg);
        assert!(max_diff(&ric, &(DMatrix::identity(n, n) * -((n - 1) as f64))) < 1e-12);
        let v = einstein_verdict(&alg, 1e-9);
        assert!(v.is_einstein);
        assert!((v.lambda + (n - 1) as f64).abs() < 1e-12);
        for i in 0..n {
            for j in 0..i {
                assert!((sectional(&alg, &e(n, i), &e(n, j)).unwrap() + 1.0).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn complex_hyperbolic_plane_is_einstein() {
    let alg = complex_hyperbolic_plane();
    let v = einstein_verdict(&alg, 1e-9);
    assert!(v.is_einstein);
    assert!((v.lambda + 1.5).abs() < 1e-12);
    // holomorphic sections have curvature -1, totally real ones -1/4
    assert!((sectional(&alg, &e(4, 1), &e(4, 2)).unwrap() + 1.0).abs() < 1e-12);
    assert!((sectional(&alg, &e(4, 0), &e(4, 3)).unwrap() + 1.0).abs() < 1e-12);
    assert!((sectional(&alg, &e(4, 0), &e(4, 1)).unwrap() + 0.25).abs() < 1e-12);
}

#[test]
fn mean_curvature_of_complex_hyperbolic_plane() {
    let alg = complex_hyperbolic_plane();
    assert!((mean_curvature(&alg) - e(4, 0) * 2.0).amax() < 1e-12);
    let x = e(4, 1);
    assert!((u_map(&alg, &x, &x).unwrap() - e(4, 0) * 0.5).amax() < 1e-12);
}

#[test]
fn mean_curvature_pairs_with_trace() {
    let p = DMatrix::from_fn(6, 6, |i, j| ((i * 7 + j * 3) % 5) as f64 - 2.0 + if i == j { 4.0 } else { 0.0 });
    let g = spd(&(0..36).map(|k| ((k * 13) % 7) as f64 / 7.0 - 0.4).collect::<Vec<_>>(), 6);
    let alg = triangular_random(&p, g);
    let h = mean_curvature(&alg);
    for i in 0..6 {
        let x = e(6, i);
        assert!((alg.inner(&h, &x) - alg.ad_matrix(&x).unwrap().trace()).abs() < 1e-9);
    }
}

#[test]
fn unimodular_algebra_has_zero_mean_curvature() {
    let alg = sl2(DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, 2.0, 3.0])));
    assert!(mean_curvature(&alg).amax() < 1e-12);
}

#[test]
fn abelian_ricci_vanishes() {
    let alg = MetricLieAlgebra::new(3, []).unwrap();
    let v = einstein_verdict(&alg, 1e-9);
    assert_eq!((v.is_einstein, v.lambda, v.residual), (true, 0.0, 0.0));
}

#[test]
fn heisenberg_is_not_einstein() {
    let alg = MetricLieAlgebra::new(3, [(0, 1, 2, 1.0)]).unwrap();
    let ric = ricci(&alg);
    let expected = DMatrix::from_diagonal(&DVector::from_vec(vec![-0.5, -0.5, 0.5]));
    assert!(max_diff(&ric, &expected) < 1e-12);
    assert!(!einstein_verdict(&alg, 1e-9).is_einstein);
}

#[test]
fn sectional_rejects_parallel_vectors() {
    let alg = real_hyperbolic(3);
    let x = DVector::from_vec(vec![1.0, 2.0, 0.0]);
    assert_eq!(sectional(&alg, &x, &(&x * -3.0)), Err(CurvatureError::Degenerate));
}

#[test]
fn eigenvalue_types() {
    let t = eigenvalue_type(&complex_hyperbolic_plane(), 1e-8).unwrap();
    assert_eq!(t.eigenvalues, vec![1, 2]);
    assert_eq!(t.multiplicities, vec![2, 1]);
    assert!((t.scale - 1.0).abs() < 1e-12);
    let t = eigenvalue_type(&real_hyperbolic(5), 1e-8).unwrap();
    assert_eq!((t.eigenvalues, t.multiplicities), (vec![1], vec![4]));
    assert!((t.scale - 0.25).abs() < 1e-12);
}

#[test]
fn irrational_eigenvalue_ratio_is_rejected() {
    let alg = MetricLieAlgebra::new(3, [(0, 1, 1, 1.0), (0, 2, 2, 2f64.sqrt())])
        .unwrap()
        .with_decoration(Decoration { a_indices: vec![0], n_indices: vec![1, 2], roots: vec![vec![1.0], vec![2f64.sqrt()]] })
        .unwrap();
    assert!(matches!(eigenvalue_type(&alg, 1e-8), Err(CurvatureError::IrrationalRatio(_))));
}

#[test]
fn complex_eigenvalues_are_rejected() {
    let alg = MetricLieAlgebra::new(3, [(0, 1, 1, 1.0), (0, 1, 2, 1.0), (0, 2, 2, 1.0), (0, 2, 1, -1.0)])
        .unwrap()
        .with_decoration(Decoration { a_indices: vec![0], n_indices: vec![1, 2], roots: vec![vec![1.0], vec![1.0]] })
        .unwrap();
    assert!(matches!(eigenvalue_type(&alg, 1e-8), Err(CurvatureError::NonRealEigenvalue { .. })));
}

#[test]
fn rank_one_reduction_of_product() {
    // RH^2 x RH^2 is Einstein with lambda = -1; its reduction is RH^3 scaled.
    let alg = MetricLieAlgebra::new(4, [(0, 2, 2, 1.0), (1, 3, 3, 1.0)])
        .unwrap()
        .with_decoration(Decoration {
            a_indices: vec![0, 1],
            n_indices: vec![2, 3],
            roots: vec![vec![1.0, 0.0], vec![0.0, 1.0]],
        })
        .unwrap();
    assert!(einstein_verdict(&alg, 1e-9).is_einstein);
    let red = rank_one_reduction(&alg).unwrap();
    assert_eq!(red.dim(), 3);
    let v = einstein_verdict(&red, 1e-9);
    assert!(v.is_einstein);
    assert!((v.lambda + 1.0).abs() < 1e-12);
    assert_eq!(red.labels()[0], "H");
    assert!((red.decoration().unwrap().roots[0][0] - 0.5f64.sqrt()).abs() < 1e-12);
}

#[test]
fn rank_one_reduction_needs_mean_curvature() {
    let alg = MetricLieAlgebra::new(2, [])
        .unwrap()
        .with_decoration(Decoration { a_indices: vec![0], n_indices: vec![1], roots: vec![vec![0.0]] })
        .unwrap();
    assert_eq!(rank_one_reduction(&alg), Err(CurvatureError::ZeroMeanCurvature));
}

#[test]
fn scaling_the_metric_scales_lambda() {
    let alg = complex_hyperbolic_plane();
    let v1 = einstein_verdict(&alg, 1e-9);
    let doubled = alg.clone().with_gram(alg.gram() * 2.0).unwrap();
    let v2 = einstein_verdict(&doubled, 1e-9);
    assert!(v2.is_einstein);
    assert!((v2.lambda - v1.lambda / 2.0).abs() < 1e-12);
    assert!(max_diff(&ricci(&alg), &ricci(&doubled)) < 1e-12);
}

fn vec_strategy(len: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-1.0..1.0f64, len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ricci_matches_connection_on_triangular(p in vec_strategy(36), g in vec_strategy(36)) {
        let p = DMatrix::from_row_slice(6, 6, &p) + DMatrix::identity(6, 6) * 3.0;
        prop_assume!(p.clone().determinant().abs() > 0.5);
        let alg = triangular_random(&p, spd(&g, 6));
        let ric = ricci(&alg);
        let oracle = koszul_ricci(&alg);
        prop_assert!(max_diff(&ric, &oracle) <= 1e-8 * oracle.amax().max(1.0));
    }

    #[test]
    fn ricci_matches_connection_on_sl2(g in vec_strategy(9)) {
        let alg = sl2(spd(&g, 3));
        let oracle = koszul_ricci(&alg);
        prop_assert!(max_diff(&ricci(&alg), &oracle) <= 1e-9 * oracle.amax().max(1.0));
    }

    #[test]
    fn sectional_matches_connection(p in vec_strategy(36), g in vec_strategy(36), x in vec_strategy(6), y in vec_strategy(6)) {
        let p = DMatrix::from_row_slice(6, 6, &p) + DMatrix::identity(6, 6) * 3.0;
        prop_assume!(p.clone().determinant().abs() > 0.5);
        let alg = triangular_random(&p, spd(&g, 6));
        let (x, y) = (DVector::from_vec(x), DVector::from_vec(y));
        let area = alg.inner(&x, &x) * alg.inner(&y, &y) - alg.inner(&x, &y).powi(2);
        prop_assume!(area > 1e-3);
        let k = sectional(&alg, &x, &y).unwrap();
        let oracle = koszul_sectional(&alg, &x, &y);
        prop_assert!((k - oracle).abs() <= 1e-8 * oracle.abs().max(1.0));
    }

    #[test]
    fn sectional_depends_only_on_the_plane(x in vec_strategy(4), y in vec_strategy(4), a in 0.2..2.0f64, b in -2.0..2.0f64, c in -2.0..2.0f64) {
        let alg = complex_hyperbolic_plane();
        let (x, y) = (DVector::from_vec(x), DVector::from_vec(y));
        let area = alg.inner(&x, &x) * alg.inner(&y, &y) - alg.inner(&x, &y).powi(2);
        prop_assume!(area > 1e-3);
        let d = 1.0 + c.abs();
        let (x2, y2) = (&x * a + &y * b, &y * d);
        let k1 = sectional(&alg, &x, &y).unwrap();
        let k2 = sectional(&alg, &x2, &y2).unwrap();
        prop_assert!((k1 - k2).abs() < 1e-9);
        prop_assert!((k1 - sectional(&alg, &y, &x).unwrap()).abs() < 1e-9);
        // pinched between -1 and -1/4
        prop_assert!(k1 <= -0.25 + 1e-9 && k1 >= -1.0 - 1e-9);
    }

    #[test]
    fn u_is_symmetric_bilinear(x in vec_strategy(4), y in vec_strategy(4), z in vec_strategy(4), s in -3.0..3.0f64) {
        let alg = complex_hyperbolic_plane().with_gram(spd(&[0.3, 0.1, 0.0, 0.2, -0.1, 0.4, 0.0, 0.1, 0.2, 0.0, 0.5, 0.1, 0.0, 0.3, 0.1, 0.2], 4)).unwrap();
        let (x, y, z) = (DVector::from_vec(x), DVector::from_vec(y), DVector::from_vec(z));
        let uxy = u_map(&alg, &x, &y).unwrap();
        prop_assert!((&uxy - u_map(&alg, &y, &x).unwrap()).amax() < 1e-12);
        let lin = u_map(&alg, &(&x * s + &z), &y).unwrap();
        prop_assert!((lin - (&uxy * s + u_map(&alg, &z, &y).unwrap())).amax() < 1e-10);
        let lhs = alg.inner(&uxy, &z);
        let rhs = 0.5 * alg.inner(&alg.bracket(&z, &x).unwrap(), &y) + 0.5 * alg.inner(&alg.bracket(&z, &y).unwrap(), &x);
        prop_assert!((lhs - rhs).abs() < 1e-10);
    }

    #[test]
    fn ricci_is_symmetric_and_basis_covariant(p in vec_strategy(36), g in vec_strategy(36)) {
        let p = DMatrix::from_row_slice(6, 6, &p) + DMatrix::identity(6, 6) * 3.0;
        prop_assume!(p.clone().determinant().abs() > 0.5);
        let alg = triangular_random(&p, spd(&g, 6));
        let ric = ricci(&alg);
        prop_assert!(max_diff(&ric, &ric.transpose()) < 1e-10);
        let v = einstein_verdict(&alg, 1e-9);
        prop_assert!(v.residual >= 0.0 && v.lambda.is_finite());
    }
}
