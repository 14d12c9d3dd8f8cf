use nacyc::base::BaseField;
use nacyc::ffield::FqSpec;
use nacyc::literal::parse_base_elem;
use nacyc::localfield::{hensel_lift, LocalElem, LocalFieldSpec};
use nacyc::Scalar;
use proptest::prelude::*;

fn spec(i: usize) -> LocalFieldSpec {
    match i {
        0 => LocalFieldSpec::padic(3, 12).unwrap(),
        1 => LocalFieldSpec::padic(5, 12).unwrap(),
        2 => LocalFieldSpec::padic(7, 12).unwrap(),
        3 => LocalFieldSpec::padic(2, 12).unwrap(),
        _ => LocalFieldSpec::laurent(FqSpec::new(3, 2, None).unwrap(), 12).unwrap(),
    }
}

fn elem(s: &LocalFieldSpec, val: i64, raw: &[u64]) -> LocalElem {
    let q = s.q();
    let mut digits: Vec<_> = raw.iter().map(|&d| s.residue().element(d % q)).collect();
    digits[0] = s.residue().element(1 + raw[0] % (q - 1));
    s.from_digits(val, &digits).unwrap()
}

fn pair(odd: bool) -> impl Strategy<Value = (LocalFieldSpec, LocalElem, LocalElem)> {
    let fields = if odd { 0..3usize } else { 0..5usize };
    (fields, -3i64..4, -3i64..4, prop::collection::vec(any::<u64>(), 12), prop::collection::vec(any::<u64>(), 12))
        .prop_map(|(i, v, w, a, b)| {
            let s = spec(i);
            let x = elem(&s, v, &a);
            let y = elem(&s, w, &b);
            (s, x, y)
        })
}

proptest! {
    #[test]
    fn valuation_laws((_s, x, y) in pair(false)) {
        let (vx, vy) = (x.valuation().unwrap(), y.valuation().unwrap());
        prop_assert_eq!(x.mul(&y).valuation(), Some(vx + vy));
        prop_assert_eq!(x.mul(&y).precision(), 12);
        let sum = x.add(&y);
        if !sum.is_zero() {
            prop_assert!(sum.valuation().unwrap() >= vx.min(vy));
        }
        if vx != vy {
            prop_assert_eq!(sum.valuation(), Some(vx.min(vy)));
        }
        prop_assert!(x.mul(&x.inv().unwrap()).same(&x.spec().one()));
        prop_assert_eq!(x.inv().unwrap().valuation(), Some(-vx));
    }

    #[test]
    fn ring_laws((_s, x, y) in pair(false)) {
        prop_assert!(x.add(&y).sub(&y).same(&x));
        prop_assert!(x.mul(&y).div(&y).unwrap().same(&x));
        prop_assert!(x.add(&y).mul(&x).same(&x.mul(&x).add(&y.mul(&x))));
    }

    #[test]
    fn hensel_root_is_unique((s, x, _y) in pair(true)) {
        // the square root of x^2 congruent to the unit part of x
        let u = x.unit_part().unwrap();
        let c = u.mul(&u);
        let f = [c.neg(), s.zero(), s.one()];
        let start = s.lift(&u.leading_digit().unwrap());
        let r = hensel_lift(&f, &start, 12).unwrap();
        prop_assert!(r.same(&u));
        prop_assert!(r.mul(&r).same(&c));
    }

    #[test]
    fn teichmuller_is_multiplicative(i in 0usize..5, a in any::<u64>(), b in any::<u64>()) {
        let s = spec(i);
        let q = s.q();
        let (da, db) = (s.residue().element(1 + a % (q - 1)), s.residue().element(1 + b % (q - 1)));
        let ta = s.teichmuller(&da, 10).unwrap();
        let tb = s.teichmuller(&db, 10).unwrap();
        let tab = s.teichmuller(&da.mul(&db), 10).unwrap();
        prop_assert!(ta.mul(&tb).same(&tab));
        prop_assert!(ta.powi((q - 1) as i64).unwrap().same(&s.one()));
    }

    #[test]
    fn square_class_ignores_squares((_s, x, y) in pair(true)) {
        prop_assert_eq!(x.mul(&y.mul(&y)).square_class().unwrap(), x.square_class().unwrap());
    }

    #[test]
    fn literal_round_trip((s, x, _y) in pair(false), keep in 1usize..12) {
        let x = x.with_digits(keep);
        let f = BaseField::Local(s);
        let text = x.to_string();
        let back = parse_base_elem(&f, &text).unwrap();
        prop_assert_eq!(back.to_string(), text);
    }
}
