use proptest::prelude::*;

use super::*;
use crate::numtheory::euler_phi;

fn f16() -> FieldRef {
    Field::new(2, 1, 4).unwrap()
}

#[test]
fn default_moduli() {
    let f = f16();
    assert_eq!(f.modulus(), &[1, 1, 0, 0, 1]);
    assert_eq!(f.order(), 16);
    assert_eq!(f.descriptor(), "2^1^4:13");
    assert_eq!(f.generator(), Elem(2));

    let f2 = Field::new(2, 1, 1).unwrap();
    assert_eq!(f2.order(), 2);
    assert_eq!(f2.elements().count(), 2);
    assert_eq!(f2.mul(Elem::ONE, Elem::ONE), Elem::ONE);
    assert_eq!(f2.add(Elem::ONE, Elem::ONE), Elem::ZERO);

    let f81 = Field::new(3, 1, 4).unwrap();
    assert_eq!(f81.order(), 81);
    let distinct: std::collections::HashSet<_> = f81
        .nonzero_elements()
        .map(|x| f81.log(x).unwrap())
        .collect();
    assert_eq!(distinct.len(), 80);

    // F_7 = F_7[X]/(X - 3), 3 being the least primitive root mod 7
    let f7 = Field::new(7, 1, 1).unwrap();
    assert_eq!(f7.generator(), Elem(3));
    assert_eq!(f7.modulus(), &[4, 1]);
}

#[test]
fn construction_errors() {
    assert_eq!(
        Field::new(4, 1, 2).unwrap_err(),
        Error::NonPrimeCharacteristic(4)
    );
    assert!(matches!(
        Field::with_modulus(2, 1, 4, &[1, 0, 0, 0, 1]),
        Err(Error::ReducibleModulus(2))
    ));
    assert!(matches!(
        Field::with_modulus(2, 1, 4, &[1, 1, 1]),
        Err(Error::DegreeMismatch {
            expected: 4,
            got: 2
        })
    ));
    assert!(matches!(
        Field::new(2, 1, 40),
        Err(Error::FieldTooLarge { .. })
    ));
}

#[test]
fn frobenius_is_repeated_squaring() {
    let f = f16();
    for x in f.elements() {
        assert_eq!(f.frob(x, 0), x);
        assert_eq!(f.frob(x, 4), x);
        assert_eq!(f.frob(x, 1), f.mul_slow(x, x));
        assert_eq!(f.frob(x, -1), f.frob(x, 3));
        let mut y = x;
        for _ in 0..4 {
            y = f.frob(y, 1);
        }
        assert_eq!(y, x);
    }
}

#[test]
fn trace_of_generator() {
    let f = f16();
    let g = f.generator();
    let by_hand = [1u64, 2, 4, 8]
        .iter()
        .fold(Elem::ZERO, |acc, &e| f.add(acc, f.pow_slow(g, e)));
    assert_eq!(f.trace(g), by_hand);
    assert_eq!(f.trace(Elem::ZERO), Elem::ZERO);

    let f32 = Field::new(2, 1, 5).unwrap();
    for x in f32.elements() {
        assert!(f32.in_fq(f32.trace(x)));
        assert!(f32.in_fq(f32.norm(x)));
    }
}

#[test]
fn subfield_counts() {
    let f = f16();
    assert_eq!(f.elements().filter(|&x| f.in_subfield(x, 2)).count(), 4);
    assert_eq!(f.elements().filter(|&x| f.in_subfield(x, 3)).count(), 2);
    assert_eq!(f.elements().filter(|&x| f.in_subfield(x, 4)).count(), 16);
    for d in 1..10 {
        assert!(f.in_subfield(Elem::ZERO, d));
    }
    assert_eq!(f.fq_elements(), &[Elem(0), Elem(1)]);

    // q = 9 inside F_{3^4}
    let g = Field::new(3, 2, 2).unwrap();
    assert_eq!(g.q(), 9);
    assert_eq!(g.fq_elements().len(), 9);
    assert!(g.fq_elements().iter().all(|&x| g.in_fq(x)));
}

#[test]
fn coordinates_round_trip() {
    for (p, h, n) in [(2, 1, 4), (3, 1, 3), (2, 2, 3), (3, 2, 2)] {
        let f = Field::new(p, h, n).unwrap();
        for x in f.elements() {
            let c = f.fq_coords(x);
            assert_eq!(c.len(), n as usize);
            assert!(c.iter().all(|&a| f.in_fq(a)));
            assert_eq!(f.from_fq_coords(&c), x, "p={p} h={h} n={n}");
        }
    }
}

#[test]
fn table_free_arithmetic_matches_tables() {
    for (p, h, n) in [(2, 1, 4), (3, 1, 3), (2, 2, 2), (5, 1, 2)] {
        let a = Field::new(p, h, n).unwrap();
        let b = Field::with_options(
            p,
            h,
            n,
            FieldOptions {
                modulus: None,
                tables: false,
            },
        )
        .unwrap();
        assert!(a.has_tables() && !b.has_tables());
        assert_eq!(a.generator(), b.generator());
        for x in a.elements() {
            for e in 0..n as i64 {
                assert_eq!(a.frob(x, e), b.frob(x, e));
            }
            if !x.is_zero() {
                assert_eq!(a.inv(x), b.inv(x));
                assert_eq!(a.log(x), b.log(x));
            }
            for y in a.elements().step_by(3) {
                assert_eq!(a.mul(x, y), b.mul(x, y));
            }
        }
    }
}

#[test]
fn solve_pow_finds_roots() {
    let f = Field::new(2, 1, 6).unwrap();
    for t in f.nonzero_elements() {
        for e in [1u64, 3, 7, 9, 21] {
            let oracle = f.nonzero_elements().find(|&y| f.pow(y, e) == t);
            match f.solve_pow(t, e) {
                Some(y) => assert_eq!(f.pow(y, e), t),
                None => assert!(oracle.is_none(), "t={t} e={e}"),
            }
        }
    }
}

#[test]
fn parse_elements() {
    let f = f16();
    assert_eq!(f.parse_elem("g0").unwrap(), Elem::ONE);
    assert_eq!(f.parse_elem("g1").unwrap(), Elem(2));
    assert_eq!(f.parse_elem("g15").unwrap(), Elem::ONE);
    assert_eq!(f.parse_elem("0xb").unwrap(), Elem(11));
    assert_eq!(f.parse_elem("c").unwrap(), Elem(12));
    assert!(f.parse_elem("1f").is_err());
    assert!(f.parse_elem("gx").is_err());
}

/// Order of a root of X^2 + g X - c in F_{q^2}, found by brute force.
fn root_orders(p: u32, g: Elem, c: Elem) -> Vec<u64> {
    let big = Field::new(p, 1, 2).unwrap();
    big.nonzero_elements()
        .filter(|&x| {
            let v = big.add(big.mul(x, x), big.sub(big.mul(g, x), c));
            v.is_zero()
        })
        .map(|x| (1..).find(|&k| big.pow(x, k) == Elem::ONE).unwrap())
        .collect()
}

#[test]
fn primitive_quadratics_small() {
    let f2 = Field::new(2, 1, 1).unwrap();
    assert_eq!(primitive_quadratics(&f2), vec![(Elem::ONE, Elem::ONE)]);

    let f3 = Field::new(3, 1, 1).unwrap();
    let prim = primitive_quadratics(&f3);
    assert_eq!(prim.len(), 2);
    for &g in &f3.fq_elements()[1..] {
        for &c in &f3.fq_elements()[1..] {
            let orders = root_orders(3, g, c);
            let oracle = !orders.is_empty() && orders.iter().all(|&o| o == 8);
            assert_eq!(prim.contains(&(g, c)), oracle);
        }
    }
}

#[test]
fn primitive_quadratic_counts() {
    for (p, h) in [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (7, 1)] {
        let f = Field::new(p, h, 1).unwrap();
        let q = f.q();
        assert_eq!(
            primitive_quadratics(&f).len() as u64,
            euler_phi(q * q - 1) / 2
        );
    }
}

#[test]
fn trace_form_is_nondegenerate() {
    let f = Field::new(3, 1, 3).unwrap();
    for &b in f.fq_basis() {
        assert!(f.elements().any(|y| !f.trace(f.mul(b, y)).is_zero()));
    }
}

fn field_strategy() -> impl Strategy<Value = FieldRef> {
    prop_oneof![
        Just((2u32, 1u32, 4u32)),
        Just((2, 1, 5)),
        Just((3, 1, 3)),
        Just((2, 2, 2)),
        Just((5, 1, 2)),
    ]
    .prop_map(|(p, h, n)| Field::new(p, h, n).unwrap())
}

proptest! {
    #[test]
    fn field_axioms(f in field_strategy(), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let o = f.order() as u32;
        let (a, b, c) = (Elem(a % o), Elem(b % o), Elem(c % o));
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        prop_assert_eq!(f.mul_slow(a, b), f.mul(a, b));
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a)), Elem::ONE);
        }
        prop_assert_eq!(f.pow(a, f.order()), a);
    }

    #[test]
    fn frobenius_and_trace_linearity(f in field_strategy(), a in any::<u32>(), b in any::<u32>(),
                                     i in 0usize..100, j in 0usize..100, d in 1u32..12) {
        let o = f.order() as u32;
        let (x, y) = (Elem(a % o), Elem(b % o));
        let fq = f.fq_elements();
        let (s, t) = (fq[i % fq.len()], fq[j % fq.len()]);
        prop_assert_eq!(f.frob(f.add(x, y), 1), f.add(f.frob(x, 1), f.frob(y, 1)));
        prop_assert_eq!(f.frob(x, 1), f.pow(x, f.q()));
        let lhs = f.trace(f.add(f.mul(s, x), f.mul(t, y)));
        let rhs = f.add(f.mul(s, f.trace(x)), f.mul(t, f.trace(y)));
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(f.in_subfield(x, d), f.in_subfield(x, gcd(d, f.n())));
    }
}
