use curvkit::analysis::{is_semisymmetric, jacobi_check, primitive_decomposition, BlockTag};
use curvkit::bivector::{bivector_inner, bivector_of_skew, skew_of_bivector, Bivector};
use curvkit::curvature::{bianchi_map, project_to_curvature, CurvatureTensor};
use curvkit::exactnum::{
    all_roots_real, minimal_polynomial, rat, squarefree_rational_factors, sturm_real_root_count, Interval, Mat, Poly,
    Rational,
};
use curvkit::generators::{
    generate, random_isometry, random_unimodular, BlockSpec, Draw, GeneratorKind, GeneratorSpec,
};
use curvkit::holonomy::{act_algebra, act_group, common_kernel, h_span, invariant_subspace_split, lie_closure};
use curvkit::io::{parse_instance, serialize_instance};
use curvkit::report::report_for_input;
use curvkit::space::MetricSpace;
use proptest::prelude::*;

type Q = Rational;
type Product<'a> = dyn Fn(&[Q], &[Q]) -> Mat<Q> + 'a;

fn signature() -> impl Strategy<Value = (usize, usize)> {
    (2usize..=5).prop_flat_map(|n| (0..=n).prop_map(move |q| (n - q, q)))
}

fn space(p: usize, q: usize, d: &mut Draw) -> MetricSpace<Q> {
    let g = MetricSpace::<Q>::standard(p, q)
        .gram()
        .congruence(&random_unimodular(p + q, d));
    MetricSpace::new(g).unwrap()
}

fn matrix(n: usize, d: &mut Draw) -> Mat<Q> {
    Mat::from_fn(n, n, |_, _| d.rational(3))
}

fn projected(s: &MetricSpace<Q>, d: &mut Draw) -> CurvatureTensor<Q> {
    let n = s.bivectors().len();
    let sym = Mat::from_fn(n, n, |_, _| d.rational(2));
    let t = &sym + &sym.transpose();
    // Self-adjoint with respect to the bivector metric: T = G⁻¹·S.
    project_to_curvature(s, &(s.bivector_gram_inv() * &t))
}

/// Semi-symmetric specs of dimension at most 5.
fn semisymmetric_spec(seed: u64) -> GeneratorSpec {
    let mut d = Draw::new(seed);
    let l = d.nonzero_rational(3);
    let blocks = match seed % 5 {
        0 => vec![BlockSpec::Constant {
            positive: 2,
            negative: 1,
            lambda: l,
        }],
        1 => vec![
            BlockSpec::Isotropic {
                positive: 2,
                negative: 1,
            },
            BlockSpec::Flat {
                positive: 1,
                negative: 0,
            },
        ],
        2 => vec![
            BlockSpec::Constant {
                positive: 2,
                negative: 0,
                lambda: l,
            },
            BlockSpec::Flat {
                positive: 1,
                negative: 1,
            },
        ],
        3 => vec![
            BlockSpec::Constant {
                positive: 1,
                negative: 1,
                lambda: l.clone(),
            },
            BlockSpec::Constant {
                positive: 2,
                negative: 0,
                lambda: l * rat(2),
            },
        ],
        _ => vec![BlockSpec::Constant {
            positive: 2,
            negative: 2,
            lambda: l,
        }],
    };
    let mut spec = GeneratorSpec::new(seed, GeneratorKind::RandomSemisym, blocks);
    spec.conjugate = true;
    spec.change_basis = seed.is_multiple_of(2);
    spec
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn minimal_polynomial_annihilates(n in 1usize..=4, seed: u64) {
        let m = matrix(n, &mut Draw::new(seed));
        let chi = minimal_polynomial(&m);
        prop_assert!(chi.is_monic());
        prop_assert!(chi.eval_matrix(&m).is_zero());
    }

    #[test]
    fn squarefree_factors_reproduce(roots in prop::collection::vec((-4i64..=4, 1usize..=3), 1..4), quad in 0i64..3) {
        let mut p = Poly::<Q>::one();
        for (r, m) in &roots {
            p = p.mul(&Poly::linear(rat(*r)).pow(*m));
        }
        if quad > 0 {
            p = p.mul(&Poly::new(vec![rat(quad), rat(0), rat(1)]));
        }
        let p = p.scale(&rat(3));
        let back = squarefree_rational_factors(&p)
            .iter()
            .fold(Poly::one(), |acc, (f, m)| acc.mul(&f.pow(*m)));
        prop_assert_eq!(back, p.monic());
        prop_assert_eq!(all_roots_real(&p), quad == 0);
        let mut distinct: Vec<i64> = roots.iter().map(|(r, _)| *r).collect();
        distinct.sort();
        distinct.dedup();
        let real = sturm_real_root_count(&p.squarefree_part(), &Interval::real_line()).unwrap();
        prop_assert_eq!(real, distinct.len());
    }

    #[test]
    fn wedge_is_skew_and_products_are_bilinear((p, q) in signature(), seed: u64) {
        let mut d = Draw::new(seed);
        let s = space(p, q, &mut d);
        let n = p + q;
        let [u, u2, v, w, z] = [0; 5].map(|_| d.vector(n, 3));
        let (a, b) = (d.rational(3), d.rational(3));
        let wuv = s.wedge_endo(&u, &v);
        prop_assert_eq!(s.inner(&wuv.mul_vec(&w), &z) + s.inner(&w, &wuv.mul_vec(&z)), rat(0));
        let comb: Vec<Q> = u.iter().zip(&u2).map(|(x, y)| a.clone() * x + b.clone() * y).collect();
        let lin = |f: &Product<'_>| {
            f(&comb, &v) == &f(&u, &v).scale(&a) + &f(&u2, &v).scale(&b)
                && f(&v, &comb) == &f(&v, &u).scale(&a) + &f(&v, &u2).scale(&b)
        };
        prop_assert!(lin(&|x, y| s.wedge_endo(x, y)));
        prop_assert!(lin(&|x, y| s.vee_endo(x, y)));
    }

    #[test]
    fn congruence_preserves_signature((p, q) in signature(), seed: u64) {
        let mut d = Draw::new(seed);
        let n = p + q;
        let mut m = matrix(n, &mut d);
        while m.determinant() == rat(0) {
            m = matrix(n, &mut d);
        }
        let s = MetricSpace::new(MetricSpace::<Q>::standard(p, q).gram().congruence(&m)).unwrap();
        prop_assert_eq!((s.signature().positive, s.signature().negative), (p, q));
    }

    #[test]
    fn skew_bivector_identification((p, q) in signature(), seed: u64) {
        let mut d = Draw::new(seed);
        let s = space(p, q, &mut d);
        let (n, big) = (p + q, s.bivectors().len());
        let x = Bivector { coords: d.vector(big, 3) };
        let y = Bivector { coords: d.vector(big, 3) };
        let a = d.rational(3);
        let sum = Bivector { coords: x.coords.iter().zip(&y.coords).map(|(i, j)| a.clone() * i + j).collect() };
        let (sx, sy) = (skew_of_bivector(&s, &x), skew_of_bivector(&s, &y));
        prop_assert_eq!(skew_of_bivector(&s, &sum), &sx.scale(&a) + &sy);
        prop_assert!(s.is_metric_skew(&sx));
        prop_assert_eq!(bivector_of_skew(&s, &sx).unwrap(), x);
        prop_assert_eq!(skew_of_bivector(&s, &bivector_of_skew(&s, &sy).unwrap()), sy);
        let [u, v, w, t] = [0; 4].map(|_| d.vector(n, 3));
        let uv = Bivector::wedge(s.bivectors(), &u, &v);
        let wt = Bivector::wedge(s.bivectors(), &w, &t);
        let ip = |a: &[Q], b: &[Q]| s.inner(a, b);
        prop_assert_eq!(bivector_inner(&s, &uv, &wt), ip(&v, &w) * ip(&u, &t) - ip(&u, &w) * ip(&v, &t));
        prop_assert_eq!(s.wedge_endo(&u, &v), skew_of_bivector(&s, &uv));
    }

    #[test]
    fn projected_tensors_are_curvature_tensors((p, q) in signature(), seed: u64) {
        let mut d = Draw::new(seed);
        let s = space(p, q, &mut d);
        let k = projected(&s, &mut d);
        prop_assert!(bianchi_map(&s, k.matrix()).is_zero());
        prop_assert!(k.check_symmetries().all_hold());
        let rd = k.ricci();
        prop_assert!(rd.form.is_symmetric());
        prop_assert!(s.is_metric_symmetric(&rd.operator));
    }

    #[test]
    fn closure_is_skew_and_idempotent((p, q) in signature(), seed: u64) {
        let mut d = Draw::new(seed);
        let s = space(p, q, &mut d);
        let k = projected(&s, &mut d);
        let h = lie_closure(&h_span(&k)).unwrap();
        prop_assert!(h.basis().iter().all(|a| s.is_metric_skew(a)));
        let again = lie_closure(&h).unwrap();
        prop_assert_eq!(again.dim(), h.dim());
        prop_assert!(again.basis().iter().all(|a| h.contains(a)));
    }

    #[test]
    fn act_group_is_an_action((p, q) in signature(), seed: u64) {
        let mut d = Draw::new(seed);
        let s = space(p, q, &mut d);
        let k = projected(&s, &mut d);
        let (q1, q2) = (random_isometry(&s, &mut d), random_isometry(&s, &mut d));
        let lhs = act_group(&(&q1 * &q2), &k).unwrap();
        let rhs = act_group(&q1, &act_group(&q2, &k).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn semisymmetric_instances(seed: u64) {
        let spec = semisymmetric_spec(seed);
        let (s, k) = generate(&spec).unwrap();
        let text = serialize_instance(&k, None);
        prop_assert_eq!(&text, &serialize_instance(&generate(&spec).unwrap().1, None));
        prop_assert_eq!(parse_instance(&text).unwrap().tensor, k.clone());
        prop_assert!(is_semisymmetric(&k).holds);
        prop_assert!(jacobi_check(&k).unwrap().holds);

        let h = lie_closure(&h_span(&k)).unwrap();
        for a in h.basis() {
            prop_assert!(act_algebra(a, &k).unwrap().is_zero());
        }
        let split = invariant_subspace_split(&h);
        for w in split.components.iter().chain(&split.pieces) {
            prop_assert!(w.is_invariant_under(h.basis()));
        }
        let v0 = &primitive_decomposition(&k).unwrap().block(BlockTag::V0).unwrap().subspace.clone();
        let kernel = common_kernel(&s, h_span(&k).basis());
        prop_assert!(v0.contains_subspace(&kernel) && kernel.contains_subspace(v0));
    }

    #[test]
    fn adversarial_instances_fail_both_checks(seed: u64) {
        let mut spec = semisymmetric_spec(seed);
        spec.kind = GeneratorKind::Adversarial;
        let (_, k) = generate(&spec).unwrap();
        prop_assert!(!is_semisymmetric(&k).holds);
        prop_assert!(!jacobi_check(&k).unwrap().holds);
    }

    #[test]
    fn reports_are_stable(seed: u64) {
        let (_, k) = generate(&semisymmetric_spec(seed)).unwrap();
        let text = serialize_instance(&k, None);
        prop_assert_eq!(report_for_input(&text).unwrap(), report_for_input(&text).unwrap());
    }
}
