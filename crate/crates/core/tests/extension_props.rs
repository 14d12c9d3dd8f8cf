use nacyc::base::{BaseElem, BaseField};
use nacyc::extension::{CyclicExtension, ExtElem};
use nacyc::ffield::FqSpec;
use nacyc::literal::{parse_extension, parse_field};
use nacyc::Scalar;
use proptest::prelude::*;

const CASES: [(&str, &str, usize); 10] = [
    ("Qp:5", "sqrt:2", 2),
    ("Qp:5", "sqrt:5", 2),
    ("Qp:3", "unram:2", 2),
    ("Qp:7", "kummer:7", 3),
    ("Qp:7", "unram:3", 3),
    ("Qp:2", "sqrt:-1", 2),
    ("Qp:2", "sqrt:-3", 2),
    ("Laurent:2", "as:t^-3", 2),
    ("GF:3", "unram:2", 2),
    ("GF:2", "unram:3", 3),
];

fn ext(i: usize) -> CyclicExtension {
    let (f, e, m) = CASES[i];
    let base = parse_field(f, 12).unwrap();
    parse_extension(&base, e, Some(m)).unwrap()
}

fn base_elem(f: &BaseField, raw: &[u64], val: i64) -> BaseElem {
    match f {
        BaseField::Finite(s) => BaseElem::Fq(s.element(raw[0] % s.order())),
        BaseField::Local(s) => {
            let r: &FqSpec = s.residue();
            let q = r.order();
            if raw[0] % 5 == 0 {
                return f.zero();
            }
            let mut d: Vec<_> = raw.iter().map(|&x| r.element(x % q)).collect();
            d[0] = r.element(1 + raw[0] % (q - 1));
            BaseElem::Local(s.from_digits(val, &d).unwrap())
        }
    }
}

fn elem(k: &CyclicExtension, raw: &[Vec<u64>], vals: &[i64]) -> ExtElem {
    let c = (0..k.degree()).map(|i| base_elem(k.base(), &raw[i], vals[i])).collect();
    k.elem(c).unwrap()
}

fn case() -> impl Strategy<Value = (CyclicExtension, ExtElem, ExtElem)> {
    (
        0..CASES.len(),
        prop::collection::vec(prop::collection::vec(any::<u64>(), 12), 6),
        prop::collection::vec(-2i64..3, 6),
    )
        .prop_map(|(i, raw, vals)| {
            let k = ext(i);
            let m = k.degree();
            let x = elem(&k, &raw[..m], &vals[..m]);
            let y = elem(&k, &raw[3..3 + m], &vals[3..3 + m]);
            (k, x, y)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn sigma_is_an_automorphism_of_order_m((k, x, y) in case()) {
        let m = k.degree() as i64;
        prop_assert!(x.sigma(m).same(&x));
        prop_assert!(x.mul(&y).sigma(1).same(&x.sigma(1).mul(&y.sigma(1))));
        prop_assert!(x.add(&y).sigma(1).same(&x.sigma(1).add(&y.sigma(1))));
        prop_assert!(x.sigma(1).sigma(1).same(&x.sigma(2)));
    }

    #[test]
    fn norm_is_multiplicative((k, x, y) in case()) {
        prop_assume!(!x.is_zero() && !y.is_zero());
        let nxy = x.mul(&y).norm().unwrap();
        prop_assert!(nxy.same(&x.norm().unwrap().mul(&y.norm().unwrap())));
        let prod = (1..k.degree() as i64).fold(x.clone(), |acc, i| acc.mul(&x.sigma(i)));
        prop_assert!(prod.in_base());
        prop_assert!(prod.to_base().unwrap().same(&x.norm().unwrap()));
    }

    #[test]
    fn norms_are_norms((k, x, _y) in case()) {
        prop_assume!(!x.is_zero());
        prop_assert!(k.is_norm(&x.norm().unwrap()).unwrap());
    }

    #[test]
    fn inverse((_k, x, _y) in case()) {
        prop_assume!(!x.is_zero());
        prop_assert!(x.mul(&x.inv().unwrap()).same(&x.ext().one()));
    }
}
