use nacyc::ffield::{FqElem, FqSpec};
use nacyc::Scalar;
use proptest::prelude::*;

fn fields() -> Vec<FqSpec> {
    vec![
        FqSpec::prime(7).unwrap(),
        FqSpec::new(2, 3, None).unwrap(),
        FqSpec::new(3, 2, None).unwrap(),
        FqSpec::new(5, 2, None).unwrap(),
    ]
}

fn triple() -> impl Strategy<Value = (FqSpec, FqElem, FqElem, FqElem)> {
    (0..4usize, any::<u64>(), any::<u64>(), any::<u64>()).prop_map(|(i, a, b, c)| {
        let f = fields().swap_remove(i);
        let q = f.order();
        let (x, y, z) = (f.element(a % q), f.element(b % q), f.element(c % q));
        (f, x, y, z)
    })
}

proptest! {
    #[test]
    fn field_axioms((f, x, y, z) in triple()) {
        prop_assert_eq!(x.add(&y), y.add(&x));
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        prop_assert_eq!(x.add(&x.neg()), f.zero());
        if !x.is_zero() {
            prop_assert_eq!(x.mul(&x.inv().unwrap()), f.one());
        } else {
            prop_assert!(x.inv().is_err());
        }
    }

    #[test]
    fn frobenius_is_additive((f, x, y, _z) in triple()) {
        let p = f.p();
        prop_assert_eq!(x.add(&y).pow(p), x.pow(p).add(&y.pow(p)));
        prop_assert_eq!(x.pow(f.order()), x);
    }

    #[test]
    fn power_class_ignores_nth_powers((_f, x, y, _z) in triple(), n in 2u64..5) {
        prop_assume!(!x.is_zero() && !y.is_zero());
        let c = x.power_class(n).unwrap();
        prop_assert_eq!(x.mul(&y.pow(n)).power_class(n).unwrap(), c);
        prop_assert_eq!(c.is_nth_power, y.pow(n).mul(&x).power_class(n).unwrap().class_index == 0);
    }

    #[test]
    fn multiplicative_order_divides_group_order((f, x, _y, _z) in triple()) {
        prop_assume!(!x.is_zero());
        let k = x.mult_order().unwrap();
        prop_assert_eq!((f.order() - 1) % k, 0);
        prop_assert_eq!(x.pow(k), f.one());
    }
}
