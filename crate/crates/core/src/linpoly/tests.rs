use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;

fn f16() -> FieldRef {
    Field::new(2, 1, 4).unwrap()
}

fn random_poly(field: &FieldRef, m: usize, rng: &mut ChaCha8Rng) -> LinPoly {
    let o = field.order() as u32;
    let grid = (0..m)
        .map(|_| (0..field.n()).map(|_| Elem(rng.gen_range(0..o))).collect())
        .collect();
    LinPoly::from_grid(field, grid).unwrap()
}

#[test]
fn evaluation_basics() {
    let f = f16();
    let zero = LinPoly::zero(&f, 2);
    let sq = LinPoly::monomial(&f, 1, 0, 1, Elem::ONE);
    for x in f.elements() {
        assert_eq!(zero.evaluate(&[x, x]).unwrap(), Elem::ZERO);
        assert_eq!(sq.evaluate(&[x]).unwrap(), f.mul(x, x));
    }
    assert!(matches!(
        sq.evaluate(&[Elem::ONE, Elem::ONE]),
        Err(Error::ArityMismatch {
            expected: 1,
            got: 2
        })
    ));
}

#[test]
fn evaluation_is_fq_linear() {
    let f = f16();
    // X_1 + X_2^q
    let p = LinPoly::var(&f, 2, 0)
        .add(&LinPoly::monomial(&f, 2, 1, 1, Elem::ONE))
        .unwrap();
    let fq = f.fq_elements();
    for u0 in f.elements() {
        for u1 in f.elements() {
            for w0 in f.elements().step_by(5) {
                for w1 in f.elements().step_by(3) {
                    for &a in fq {
                        for &b in fq {
                            let s = [
                                f.add(f.mul(a, u0), f.mul(b, w0)),
                                f.add(f.mul(a, u1), f.mul(b, w1)),
                            ];
                            let lhs = p.eval(&s);
                            let rhs =
                                f.add(f.mul(a, p.eval(&[u0, u1])), f.mul(b, p.eval(&[w0, w1])));
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn matrix_forms() {
    let f = f16();
    assert!(LinPoly::zero(&f, 1)
        .to_matrix()
        .iter()
        .flatten()
        .all(|x| x.is_zero()));
    assert_eq!(LinPoly::var(&f, 1, 0).to_matrix(), linalg::identity(4));

    // squaring modulo X^4 + X + 1, column by column: 1, x^2, x^4 = x + 1, x^6 = x^3 + x^2
    let sq = LinPoly::monomial(&f, 1, 0, 1, Elem::ONE).to_matrix();
    let expected_cols: [u32; 4] = [0b0001, 0b0100, 0b0011, 0b1100];
    for (c, &col) in expected_cols.iter().enumerate() {
        for (r, row) in sq.iter().enumerate() {
            assert_eq!(row[c], Elem((col >> r) & 1), "entry ({r},{c})");
        }
    }
}

#[test]
fn matrix_applies_to_coordinates() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (p, h, n, m) in [(2, 1, 4, 2), (3, 1, 3, 2), (2, 2, 2, 1)] {
        let field = Field::new(p, h, n).unwrap();
        let g = random_poly(&field, m, &mut rng);
        let mat = g.to_matrix();
        for _ in 0..20 {
            let v: Vec<Elem> = (0..m)
                .map(|_| Elem(rng.gen_range(0..field.order() as u32)))
                .collect();
            let coords: Vec<Elem> = v.iter().flat_map(|&x| field.fq_coords(x)).collect();
            let image: Vec<Elem> = mat
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(&coords)
                        .fold(Elem::ZERO, |acc, (&a, &b)| field.add(acc, field.mul(a, b)))
                })
                .collect();
            assert_eq!(image, field.fq_coords(g.eval(&v)));
        }
    }
}

#[test]
fn ranks() {
    let f = f16();
    assert_eq!(LinPoly::zero(&f, 1).rank(), 0);
    assert_eq!(LinPoly::var(&f, 1, 0).rank(), 4);
    let tr = LinPoly::trace_form(&f, Elem::ONE, &[Elem::ONE]);
    assert_eq!(tr.rank(), 1);
    assert_eq!(
        linalg::rank(&f, &tr.to_matrix()),
        1,
        "generic elimination agrees"
    );
}

#[test]
fn rank_one_recognition() {
    let f = f16();
    let tr = LinPoly::trace_form(&f, Elem::ONE, &[Elem::ONE]);
    assert_eq!(tr.rank_one_trace_form(), Some((Elem::ONE, vec![Elem::ONE])));
    assert_eq!(LinPoly::var(&f, 1, 0).rank_one_trace_form(), None);
    assert_eq!(LinPoly::zero(&f, 2).rank_one_trace_form(), None);

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let alpha = Elem(rng.gen_range(1..16));
        let v: Vec<Elem> = (0..2).map(|_| Elem(rng.gen_range(0..16))).collect();
        if v.iter().all(|x| x.is_zero()) {
            continue;
        }
        let g = LinPoly::trace_form(&f, alpha, &v);
        assert_eq!(g.rank(), 1);
        let (a2, v2) = g.rank_one_trace_form().expect("rank one");
        assert_eq!(LinPoly::trace_form(&f, a2, &v2), g);
    }
}

#[test]
fn rank_one_recognition_matches_rank() {
    let field = Field::new(3, 1, 2).unwrap();
    // every 1-variable grid over F_9
    for a in field.elements() {
        for b in field.elements() {
            let g = LinPoly::from_grid(&field, vec![vec![a, b]]).unwrap();
            assert_eq!(g.rank_one_trace_form().is_some(), g.rank() == 1, "{g}");
        }
    }
}

#[test]
fn star_form() {
    let f = f16();
    let x = LinPoly::var(&f, 1, 0);
    assert_eq!(x.star(&x).unwrap(), Elem::ONE);
    assert_eq!(x.star(&LinPoly::zero(&f, 1)).unwrap(), Elem::ZERO);
    assert!(x.star(&LinPoly::zero(&f, 2)).is_err());
}

#[test]
fn star_against_trace_forms_evaluates() {
    let field = Field::new(2, 1, 3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10 {
        let g = random_poly(&field, 2, &mut rng);
        for alpha in field.nonzero_elements() {
            for v0 in field.elements() {
                for v1 in field.elements() {
                    let t = LinPoly::trace_form(&field, alpha, &[v0, v1]);
                    assert_eq!(g.star(&t).unwrap(), field.mul(alpha, g.eval(&[v0, v1])));
                }
            }
        }
    }
}

#[test]
fn adjoint_trace_identity() {
    let f = f16();
    assert_eq!(
        LinPoly::var(&f, 1, 0).adjoint().unwrap(),
        LinPoly::var(&f, 1, 0)
    );
    let alpha = f.gen_pow(6);
    let g = LinPoly::monomial(&f, 1, 0, 1, alpha);
    let adj = g.adjoint().unwrap();
    assert_eq!(adj, LinPoly::monomial(&f, 1, 0, 3, f.frob(alpha, 3)));
    for x in f.elements() {
        for y in f.elements() {
            let lhs = f.trace(f.mul(x, g.eval(&[y])));
            let rhs = f.trace(f.mul(y, adj.eval(&[x])));
            assert_eq!(lhs, rhs);
        }
    }
    assert!(LinPoly::zero(&f, 2).adjoint().is_err());
}

#[test]
fn adjoint_involution_and_rank() {
    let field = Field::new(2, 1, 5).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..50 {
        let g = random_poly(&field, 1, &mut rng);
        let adj = g.adjoint().unwrap();
        assert_eq!(adj.adjoint().unwrap(), g);
        assert_eq!(adj.rank(), g.rank());
    }
}

#[test]
fn composition() {
    let f = f16();
    let x = LinPoly::var(&f, 1, 0);
    let xq = LinPoly::monomial(&f, 1, 0, 1, Elem::ONE);
    let xq2 = LinPoly::monomial(&f, 1, 0, 2, Elem::ONE);
    assert_eq!(x.compose(&xq).unwrap(), xq);
    assert_eq!(xq.compose(&xq).unwrap(), xq2);

    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..20 {
        let a = random_poly(&f, 1, &mut rng);
        let b = random_poly(&f, 1, &mut rng);
        let c = a.compose(&b).unwrap();
        for z in f.elements() {
            assert_eq!(c.eval(&[z]), a.eval(&[b.eval(&[z])]));
        }
    }
}

#[test]
fn evaluation_basis_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for (p, h, n, m) in [(2, 1, 4, 2), (3, 1, 3, 1), (2, 2, 2, 2)] {
        let field = Field::new(p, h, n).unwrap();
        for _ in 0..10 {
            let g = random_poly(&field, m, &mut rng);
            let back = LinPoly::from_ev_basis(&field, m, &g.ev_basis()).unwrap();
            assert_eq!(back, g);
        }
    }
}

#[test]
fn json_round_trip() {
    let f = f16();
    let g = LinPoly::var(&f, 2, 0)
        .add(&LinPoly::monomial(&f, 2, 1, 2, f.gen_pow(7)))
        .unwrap();
    let text = serde_json::to_string(&g.to_json()).unwrap();
    assert_eq!(
        text,
        r#"{"m":2,"n":4,"coeffs":[["1","0","0","0"],["0","0","b","0"]]}"#
    );
    let back: LinPolyJson = serde_json::from_str(&text).unwrap();
    assert_eq!(LinPoly::from_json(&f, &back).unwrap(), g);
}

#[test]
fn evaluation_map_is_injective_on_small_grids() {
    // All 8^3 univariate grids over F_8: distinct grids give distinct maps.
    let field = Field::new(2, 1, 3).unwrap();
    let mut seen = std::collections::HashSet::new();
    for a in field.elements() {
        for b in field.elements() {
            for c in field.elements() {
                let g = LinPoly::from_grid(&field, vec![vec![a, b, c]]).unwrap();
                let table: Vec<Elem> = field.elements().map(|x| g.eval(&[x])).collect();
                assert!(seen.insert(table));
            }
        }
    }
    assert_eq!(seen.len(), 512);
}

proptest! {
    #[test]
    fn star_is_symmetric_and_nondegenerate(seed in any::<u64>()) {
        let f = f16();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_poly(&f, 2, &mut rng);
        let b = random_poly(&f, 2, &mut rng);
        prop_assert_eq!(a.star(&b).unwrap(), b.star(&a).unwrap());
        if !a.is_zero() {
            let hits = (0..2).any(|i| (0..4).any(|j| {
                !a.star(&LinPoly::monomial(&f, 2, i, j, Elem::ONE)).unwrap().is_zero()
            }));
            prop_assert!(hits);
        }
    }

    #[test]
    fn matrix_map_is_linear(seed in any::<u64>()) {
        let f = f16();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_poly(&f, 2, &mut rng);
        let b = random_poly(&f, 2, &mut rng);
        let sum = a.add(&b).unwrap().to_matrix();
        let (ma, mb) = (a.to_matrix(), b.to_matrix());
        for r in 0..4 {
            for c in 0..8 {
                prop_assert_eq!(sum[r][c], f.add(ma[r][c], mb[r][c]));
            }
        }
        prop_assert!(a.rank() <= 4);
        prop_assert_eq!(a.rank() == 0, a.is_zero());
    }
}
