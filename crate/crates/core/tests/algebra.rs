use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use umfb::{
    render, substitute, DerivSymbol, Factors, Format, FormulaPoly, InnerValues, MomentSequence, MultiIndex,
};

fn pool() -> Vec<DerivSymbol> {
    vec![
        DerivSymbol::Outer(MultiIndex::new(&[1, 0])),
        DerivSymbol::Outer(MultiIndex::new(&[0, 2])),
        DerivSymbol::inner(1, MultiIndex::new(&[1, 0])),
        DerivSymbol::inner(2, MultiIndex::new(&[1, 1])),
        DerivSymbol::Var(1),
    ]
}

fn poly() -> impl Strategy<Value = FormulaPoly> {
    let term = (-5i64..=5, prop::collection::vec((0usize..5, 1u32..=2), 0..=3));
    prop::collection::vec(term, 0..=4).prop_map(|terms| {
        let syms = pool();
        FormulaPoly::from_terms(
            2,
            2,
            terms
                .into_iter()
                .map(|(c, fs)| (BigInt::from(c), Factors::from_unsorted(fs.into_iter().map(|(k, e)| (syms[k].clone(), e)).collect())))
                .collect::<Vec<_>>(),
        )
    })
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn outer_values() -> MomentSequence {
    MomentSequence::numeric_multi([(MultiIndex::new(&[1, 0]), q(3)), (MultiIndex::new(&[0, 2]), q(-2))])
}

fn inner_values() -> InnerValues {
    InnerValues::Sequences(vec![
        MomentSequence::numeric_multi([(MultiIndex::new(&[1, 0]), BigRational::new(1.into(), 2.into()))]),
        MomentSequence::numeric_multi([(MultiIndex::new(&[1, 1]), q(5))]),
    ])
}

proptest! {
    #[test]
    fn addition_is_commutative_and_associative(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(p.add(&q).unwrap(), q.add(&p).unwrap());
        prop_assert_eq!(p.add(&q).unwrap().add(&r).unwrap(), p.add(&q.add(&r).unwrap()).unwrap());
        prop_assert!(p.sub(&p).unwrap().is_zero());
    }

    #[test]
    fn multiplication_is_commutative_and_associative(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(p.mul(&q).unwrap(), q.mul(&p).unwrap());
        prop_assert_eq!(p.mul(&q).unwrap().mul(&r).unwrap(), p.mul(&q.mul(&r).unwrap()).unwrap());
        prop_assert_eq!(p.mul(&FormulaPoly::unit(2, 2)).unwrap(), p.clone());
    }

    #[test]
    fn multiplication_distributes(p in poly(), q in poly(), r in poly()) {
        let lhs = p.mul(&q.add(&r).unwrap()).unwrap();
        let rhs = p.mul(&q).unwrap().add(&p.mul(&r).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn json_round_trip(p in poly()) {
        prop_assert_eq!(FormulaPoly::from_json(&p.to_json()).unwrap(), p.clone());
        prop_assert_eq!(FormulaPoly::from_json(&render(&p, Format::Json)).unwrap(), p);
    }

    #[test]
    fn canonical_terms_are_distinct_and_nonzero(p in poly()) {
        let terms = p.terms();
        prop_assert!(terms.iter().all(|t| t.coeff != BigInt::from(0)));
        prop_assert!(terms.windows(2).all(|w| w[0].factors < w[1].factors));
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(p in poly(), q in poly()) {
        let (o, i) = (outer_values(), inner_values());
        let s = |x: &FormulaPoly| substitute(x, &o, &i).unwrap();
        prop_assert_eq!(s(&p.mul(&q).unwrap()), s(&p).mul(&s(&q)).unwrap());
        prop_assert_eq!(s(&p.add(&q).unwrap()), s(&p).add(&s(&q)).unwrap());
    }
}

#[test]
fn dimension_mismatch_is_an_error() {
    let a = FormulaPoly::<BigInt>::unit(1, 1);
    let b = FormulaPoly::<BigInt>::unit(2, 1);
    assert!(a.add(&b).is_err());
    assert!(a.mul(&b).is_err());
}

#[test]
fn renders_text_and_latex() {
    let p = FormulaPoly::<BigInt>::from_terms(
        1,
        2,
        vec![
            (BigInt::from(-2), Factors::from_unsorted(vec![(DerivSymbol::inner(1, MultiIndex::new(&[0, 1])), 2)])),
            (BigInt::from(1), Factors::single(DerivSymbol::Outer(MultiIndex::new(&[1])), 1)),
        ],
    );
    assert_eq!(p.to_text(), "f[1] - 2*g1[0,1]^2");
    assert_eq!(p.to_latex(), "f_{1} - 2 (g^{(1)}_{0,1})^{2}");
    assert_eq!(FormulaPoly::<BigInt>::zero(1, 1).to_text(), "0");
}
