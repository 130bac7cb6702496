use std::sync::Arc;

use num_integer::Integer;
use num_traits::ToPrimitive;
use proptest::prelude::*;

use plval::codec::{complex_to_string, function_to_string, parse_complex, parse_function};
use plval::exact_math::{affine_extension, barycentric_coordinates, AffineFunctional, Point, Rational};
use plval::hats::decompose;
use plval::instance::{generate_instance, random_hyperplane, Instance, InstanceSpec, Preset};
use plval::pl_calculus::{
    common_linearization, lattice_op, linear_combination, signed_parts, split_by_hyperplane, LatticeOp, PLFunction,
};
use plval::simplicial::{SimplicialComplex, Subcomplex, VertexTag};
use plval::valuation::{alpha, alpha_plus, alpha_plus_recursive, check_axioms, AxiomSet, Sampler};
use rand_core::SeedableRng;

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..12).prop_map(|(p, q)| Rational::new(p, q))
}

fn preset() -> impl Strategy<Value = Preset> {
    prop_oneof![
        Just(Preset::Interval),
        Just(Preset::Square),
        Just(Preset::SquareWithHole),
        Just(Preset::TwoComponents),
    ]
}

fn instance(max_depth: usize, functions: usize) -> impl Strategy<Value = Instance> {
    (preset(), 0..=max_depth, any::<u64>())
        .prop_map(move |(p, depth, seed)| generate_instance(&InstanceSpec::new(p, depth, functions, seed)))
}

/// A rational point of `|K|` as a positive combination on a maximal simplex.
fn point_in(k: &SimplicialComplex, pick: usize, weights: &[u8]) -> Point {
    let s = &k.maximal_simplices()[pick % k.maximal_simplices().len()];
    let w: Vec<Rational> = s
        .vertices()
        .iter()
        .zip(weights.iter().cycle())
        .map(|(_, &w)| Rational::from_integer(w as i64 + 1))
        .collect();
    let total: Rational = w.iter().sum();
    let w: Vec<Rational> = w.iter().map(|x| x / &total).collect();
    Point::combination(
        k.ambient_dim(),
        w.iter().zip(s.vertices()).map(|(x, &v)| (x, k.vertex(v))),
    )
}

fn points_in(k: &SimplicialComplex, seeds: &[(usize, Vec<u8>)]) -> Vec<Point> {
    seeds.iter().map(|(p, w)| point_in(k, *p, w)).collect()
}

fn point_seeds() -> impl Strategy<Value = Vec<(usize, Vec<u8>)>> {
    prop::collection::vec((any::<usize>(), prop::collection::vec(0u8..9, 1..4)), 1..12)
}

fn one() -> Rational {
    Rational::one()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn arithmetic_stays_canonical(a in rational(), b in rational(), c in rational()) {
        for r in [&a + &b, &a - &c, &a * &b, &(&a * &c) + &b] {
            prop_assert!(r.is_canonical());
            prop_assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
        }
        if !b.is_zero() {
            let q = &a / &b;
            prop_assert!(q.is_canonical());
            prop_assert_eq!(&q * &b, a);
        }
    }

    #[test]
    fn barycentric_coordinates_recover_weights(raw in prop::collection::vec(1u8..20, 3)) {
        let vs: Vec<Point> = ["0,0", "3,1", "1,4"].iter().map(|p| p.parse().unwrap()).collect();
        let total: i64 = raw.iter().map(|&w| w as i64).sum();
        let lambda: Vec<Rational> = raw.iter().map(|&w| Rational::new(w as i64, total)).collect();
        let x = Point::combination(2, lambda.iter().zip(&vs));
        prop_assert_eq!(barycentric_coordinates(&vs, &x).unwrap().unwrap(), lambda);
    }

    #[test]
    fn affine_extension_reproduces_functionals(g0 in rational(), g1 in rational(), c in rational(),
                                              weights in prop::collection::vec(prop::collection::vec(0u8..9, 3), 100)) {
        let l = AffineFunctional::new(vec![g0, g1], c);
        let vs: Vec<Point> = ["0,0", "2,1", "1,3"].iter().map(|p| p.parse().unwrap()).collect();
        let values: Vec<Rational> = vs.iter().map(|v| l.eval(v)).collect();
        let e = affine_extension(&vs, &values).unwrap();
        let k = SimplicialComplex::from_maximal(2, vs, [plval::simplicial::Simplex::new(vec![0, 1, 2])]).unwrap();
        for w in &weights {
            let x = point_in(&k, 0, w);
            prop_assert_eq!(e.eval(&x), l.eval(&x));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn derived_complexes_preserve_chi(inst in instance(2, 0)) {
        let d = inst.complex.derived_complex();
        prop_assert!(d.complex.is_valid());
        prop_assert_eq!(d.complex.euler_characteristic(), inst.complex.euler_characteristic());
    }

    #[test]
    fn supplements_avoid_the_subcomplex(inst in instance(1, 1)) {
        let k = &inst.complex;
        let z = inst.functions[0].zero_set_subcomplex().unwrap();
        let s = k.supplement(&z).unwrap();
        prop_assert!(s.is_valid());
        let d = k.derived_complex();
        for (p, tag) in d.complex.vertices().iter().zip(&d.tags) {
            let excluded = z.contains(&match tag {
                VertexTag::Original(v) => plval::simplicial::Simplex::vertex(*v),
                VertexTag::Barycentre(s) => s.clone(),
            });
            prop_assert_eq!(s.vertex_index(p).is_some(), !excluded);
        }
        prop_assert_eq!(s.euler_characteristic(), k.supplement_euler_characteristic(&z).unwrap());
        prop_assert_eq!(k.supplement(&Subcomplex::full(k)).unwrap().is_empty(), true);
    }

    #[test]
    fn carriers_are_unique(inst in instance(2, 0), seeds in point_seeds()) {
        let k = &inst.complex;
        for x in points_in(k, &seeds) {
            let interior: Vec<_> = k
                .simplices()
                .iter()
                .filter(|s| {
                    matches!(barycentric_coordinates(&k.points_of(s), &x),
                             Ok(Some(l)) if l.iter().all(Rational::is_positive))
                })
                .collect();
            prop_assert_eq!(interior.len(), 1);
            prop_assert_eq!(interior[0], &k.carrier(&x).unwrap());
        }
    }

    #[test]
    fn hyperplane_splits_refine(inst in instance(1, 0), seed in any::<u64>()) {
        let mut rng = rand_xoshiro::Xoshiro256StarStar::seed_from_u64(seed);
        let l = random_hyperplane(&mut rng, &inst.complex);
        let s = split_by_hyperplane(&inst.complex, &l);
        prop_assert!(s.is_valid());
        prop_assert_eq!(s.euler_characteristic(), inst.complex.euler_characteristic());
        prop_assert!(s.refines(&inst.complex));
        for simplex in s.maximal_simplices() {
            let signs: Vec<i32> = simplex.vertices().iter().map(|&v| l.eval(s.vertex(v)).signum()).collect();
            prop_assert!(!(signs.contains(&1) && signs.contains(&-1)));
        }
    }

    #[test]
    fn lattice_ops_are_pointwise(inst in instance(1, 2), seeds in point_seeds(), a in rational()) {
        let (f, g) = (&inst.functions[0], &inst.functions[1]);
        let g = &linear_combination(&[(one(), g), (Rational::new(-1, 2), f)]).unwrap();
        let meet = lattice_op(LatticeOp::Meet, f, g).unwrap();
        let join = lattice_op(LatticeOp::Join, f, g).unwrap();
        let comb = linear_combination(&[(a.clone(), f), (one(), g)]).unwrap();
        for x in points_in(&inst.complex, &seeds) {
            let (fx, gx) = (f.evaluate(&x).unwrap(), g.evaluate(&x).unwrap());
            prop_assert_eq!(meet.evaluate(&x).unwrap(), fx.clone().min(gx.clone()));
            prop_assert_eq!(join.evaluate(&x).unwrap(), fx.clone().max(gx.clone()));
            prop_assert_eq!(comb.evaluate(&x).unwrap(), &(&a * &fx) + &gx);
        }
    }

    #[test]
    fn common_linearizations(inst in instance(1, 2), seed in any::<u64>()) {
        let mut rng = rand_xoshiro::Xoshiro256StarStar::seed_from_u64(seed);
        let other = split_by_hyperplane(&inst.complex, &random_hyperplane(&mut rng, &inst.complex));
        let f = &inst.functions[0];
        let g = &inst.functions[1].reexpress(&other).unwrap();
        let (f1, g1) = common_linearization(f, g).unwrap();
        prop_assert!(f1.complex().refines(f.complex()) && f1.complex().refines(g.complex()));
        prop_assert!(f1.equals(f).unwrap() && g1.equals(g).unwrap());
        for s in f1.complex().maximal_simplices() {
            let d: Vec<i32> = s.vertices().iter().map(|&v| (&f1.values()[v] - &g1.values()[v]).signum()).collect();
            prop_assert!(!(d.contains(&1) && d.contains(&-1)));
        }
    }

    #[test]
    fn lattice_laws(inst in instance(1, 3)) {
        let [f, g, h] = [&inst.functions[0], &inst.functions[1], &inst.functions[2]];
        let g = &linear_combination(&[(one(), g), (-one(), h)]).unwrap();
        let absorbed = lattice_op(LatticeOp::Join, f, &lattice_op(LatticeOp::Meet, f, g).unwrap()).unwrap();
        prop_assert!(absorbed.equals(f).unwrap());
        let lhs = linear_combination(&[(one(), f), (one(), &lattice_op(LatticeOp::Meet, g, h).unwrap())]).unwrap();
        let fg = linear_combination(&[(one(), f), (one(), g)]).unwrap();
        let fh = linear_combination(&[(one(), f), (one(), h)]).unwrap();
        prop_assert!(lhs.equals(&lattice_op(LatticeOp::Meet, &fg, &fh).unwrap()).unwrap());
    }

    #[test]
    fn signed_parts_recombine(inst in instance(1, 2)) {
        let f = linear_combination(&[(one(), &inst.functions[0]), (-one(), &inst.functions[1])]).unwrap();
        let (p, n) = signed_parts(&f);
        prop_assert!(p.is_nonnegative() && n.is_nonnegative());
        prop_assert!(linear_combination(&[(one(), &p), (-one(), &n)]).unwrap().equals(&f).unwrap());
        prop_assert!(lattice_op(LatticeOp::Meet, &p, &n).unwrap().is_zero());
    }

    #[test]
    fn decompositions_reconstruct(inst in instance(2, 1)) {
        let f = &inst.functions[0];
        let d = decompose(f);
        prop_assert!(d.terms.iter().all(|(a, _)| a.is_positive()));
        let hats = d.hats();
        let terms: Vec<(Rational, &PLFunction)> = d.terms.iter().map(|(a, _)| a.clone()).zip(&hats).collect();
        prop_assert!(linear_combination(&terms).unwrap().equals(f).unwrap());
    }

    #[test]
    fn alpha_is_triangulation_independent(inst in instance(2, 1), seed in any::<u64>()) {
        let f = &inst.functions[0];
        let mut rng = rand_xoshiro::Xoshiro256StarStar::seed_from_u64(seed);
        let base = alpha_plus(f).unwrap().value;
        let mut k = Arc::clone(f.complex());
        for _ in 0..2 {
            k = plval::instance::random_refinement(&mut rng, &k);
            prop_assert_eq!(alpha_plus(&f.reexpress(&k).unwrap()).unwrap().value, base);
        }
    }

    #[test]
    fn recursive_matches_topological(inst in instance(1, 1)) {
        let f = &inst.functions[0];
        prop_assert_eq!(alpha_plus_recursive(f).unwrap().value, alpha_plus(f).unwrap().value);
    }

    #[test]
    fn alpha_laws(inst in instance(1, 2), a in (1i64..9, 1i64..5)) {
        let a = Rational::new(a.0, a.1);
        let (f, g) = (&inst.functions[0], &inst.functions[1]);
        prop_assert_eq!(alpha(&PLFunction::one(Arc::clone(&inst.complex))).unwrap().value,
                        inst.complex.euler_characteristic());
        prop_assert_eq!(alpha(f).unwrap().value, alpha_plus(f).unwrap().value);
        prop_assert_eq!(alpha_plus(&f.scale(&a)).unwrap().value, alpha_plus(f).unwrap().value);
        let fag = linear_combination(&[(one(), f), (a, g)]).unwrap();
        let fg = linear_combination(&[(one(), f), (one(), g)]).unwrap();
        prop_assert_eq!(alpha_plus(&fag).unwrap().value, alpha_plus(&fg).unwrap().value);
        let x = linear_combination(&[(one(), f), (-one(), g)]).unwrap();
        let (p, n) = signed_parts(&x);
        prop_assert_eq!(alpha(&x).unwrap().value, alpha(&p).unwrap().value - alpha(&n).unwrap().value);
    }

    #[test]
    fn instances_round_trip(inst in instance(2, 2)) {
        prop_assert!(inst.complex.is_valid());
        let text = complex_to_string(&inst.complex);
        prop_assert_eq!(&parse_complex(&text).unwrap(), &*inst.complex);
        for f in &inst.functions {
            prop_assert!(f.is_nonnegative());
            let g = parse_function(&function_to_string(f), None).unwrap();
            prop_assert_eq!(g.values(), f.values());
            prop_assert_eq!(&**g.complex(), &**f.complex());
        }
    }
}

fn ceil_of_max(f: &PLFunction) -> plval::Result<i64> {
    let m = f.max_value();
    Ok(m.numer().div_ceil(&m.denom()).to_i64().unwrap())
}

#[test]
fn checker_rejects_wrong_valuations() {
    let s = Sampler::new(Preset::Square, 42);
    let zero = check_axioms(AxiomSet::Pc, &|_: &PLFunction| Ok(0), &s, 20);
    assert_eq!(zero.failed_laws(), vec!["hat"]);

    let chi_of_zero_set = |f: &PLFunction| -> plval::Result<i64> {
        let z = f.zero_set_subcomplex()?;
        Ok(z.euler_characteristic())
    };
    let r = check_axioms(AxiomSet::Pc, &chi_of_zero_set, &s, 20);
    assert!(!r.passed());
    assert!(r.failed_laws().contains(&"P1"));
    assert!(r.failed_laws().contains(&"hat"));
    assert!(!r.failed_laws().contains(&"P3"));

    let r = check_axioms(AxiomSet::Pc, &ceil_of_max, &s, 20);
    assert!(r.failed_laws().contains(&"P3"));
    let c = r.counterexamples.iter().find(|c| c.law == "P3").unwrap();
    assert_eq!(c.inputs.len(), 2);
    assert!(parse_function(&c.inputs[0], None).is_ok());
}
