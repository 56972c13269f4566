use ces_orlicz::certify::solve_alpha;
use ces_orlicz::{luxemburg_norm, modular, parse_phi, parse_sequence, GeometricTail, OrliczFunction, PhiPiece, Sequence};
use proptest::prelude::*;

/// Valid convex piecewise functions: each piece starts with a slope at least
/// the left slope of the previous one.
fn arb_phi() -> impl Strategy<Value = OrliczFunction> {
    let piece = (0.05f64..1.0, 0.0f64..0.5, prop::bool::ANY, 0.0f64..2.0, prop::sample::select(vec![1.5, 2.0, 3.0]));
    (prop::bool::weighted(0.8), prop::collection::vec(piece, 1..5)).prop_map(|(zero_start, raw)| {
        let mut pieces = Vec::new();
        let (mut start, mut left_slope) = (0.0, 0.0);
        for (i, (width, jump, affine, coeff, exp)) in raw.into_iter().enumerate() {
            let slope = if i == 0 && zero_start { 0.0 } else { left_slope + jump };
            let coeff = if affine && i + 1 < 4 { 0.0 } else { coeff + 0.1 };
            let exp = if coeff == 0.0 { 1.0 } else { exp };
            pieces.push(PhiPiece::new(start, slope, coeff, exp));
            left_slope = slope + if coeff > 0.0 { coeff * exp * width.powf(exp - 1.0) } else { 0.0 };
            start += width;
        }
        let last = pieces.last_mut().unwrap();
        if last.coeff == 0.0 && last.slope == 0.0 {
            last.coeff = 1.0;
            last.exp = 2.0;
        }
        OrliczFunction::new(pieces).expect("generator builds valid functions")
    })
}

fn arb_sequence() -> impl Strategy<Value = Sequence> {
    (prop::collection::vec(-1.0f64..1.0, 1..6), prop::option::of((-1.0f64..1.0, 0.1f64..0.6))).prop_map(|(head, tail)| {
        Sequence::new(head, tail.map(|(c, gamma)| GeometricTail { c, gamma })).unwrap()
    })
}

fn nontrivial(phi: &OrliczFunction) -> bool {
    phi.first_piece().slope == 0.0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn phi_is_even_monotone_and_convex(phi in arb_phi(), u in 0.0f64..5.0, v in 0.0f64..5.0) {
        let (u, v) = (u.min(v), u.max(v));
        prop_assert_eq!(phi.eval(-u), phi.eval(u));
        prop_assert!(phi.eval(u) <= phi.eval(v) * (1.0 + 1e-12) + 1e-300);
        let mid = phi.eval(0.5 * (u + v));
        prop_assert!(mid <= 0.5 * (phi.eval(u) + phi.eval(v)) * (1.0 + 1e-12) + 1e-15);
    }

    #[test]
    fn derivative_matches_finite_difference(phi in arb_phi(), u in 0.0f64..4.0) {
        let h = 1e-7;
        let fd = (phi.eval(u + h) - phi.eval(u)) / h;
        let d = phi.right_derivative(u);
        // The right difference quotient lies between the right derivatives at u and u + h.
        prop_assert!(d <= fd + 1e-6 * (1.0 + d.abs()));
        prop_assert!(fd <= phi.right_derivative(u + h) + 1e-6 * (1.0 + d.abs()));
    }

    #[test]
    fn strict_convexity_agrees_with_midpoint_test(phi in arb_phi(), l in 0.0f64..3.0, w in 0.01f64..2.0) {
        let r = l + w;
        let flat = phi.sai_list().iter().find(|s| s.lo < r && s.hi > l);
        match flat {
            Some(s) => {
                // Affine stretch inside [l, r]: midpoints are exact averages.
                let (a, b) = (s.lo.max(l), s.hi.min(r));
                let (u, v) = (a + 0.25 * (b - a), a + 0.75 * (b - a));
                let defect = 0.5 * (phi.eval(u) + phi.eval(v)) - phi.eval(0.5 * (u + v));
                prop_assert!(defect.abs() <= 1e-12 * (1.0 + phi.eval(v)));
                prop_assert!(!phi.is_strictly_convex_on(l, r));
            }
            None => {
                prop_assert!(phi.is_strictly_convex_on(l, r));
                for i in 0..8 {
                    let u = l + w * i as f64 / 16.0;
                    let v = u + 0.5 * w;
                    let defect = 0.5 * (phi.eval(u) + phi.eval(v)) - phi.eval(0.5 * (u + v));
                    prop_assert!(defect > 0.0, "flat chord on [{u}, {v}]");
                }
            }
        }
    }

    #[test]
    fn delta2_constants_hold_on_samples(phi in arb_phi()) {
        let c = phi.delta2_at_zero();
        if c.holds() {
            let (k, a) = (c.constant("K").unwrap(), c.constant("a").unwrap());
            prop_assert!(phi.eval(a) > 0.0);
            for i in 1..=200 {
                let u = a * i as f64 / 200.0;
                prop_assert!(phi.eval(2.0 * u) <= k * phi.eval(u) * (1.0 + 1e-12));
            }
        } else {
            let u = c.constant("u").unwrap();
            prop_assert!(phi.eval(u) == 0.0 && phi.eval(2.0 * u) > 0.0);
        }
    }

    #[test]
    fn modular_is_solid(phi in arb_phi(), y in arb_sequence(), f in prop::collection::vec(-1.0f64..1.0, 6), g in -1.0f64..1.0) {
        prop_assume!(nontrivial(&phi));
        let head = y.head().iter().zip(&f).map(|(v, t)| v * t).collect();
        let x = Sequence::new(head, y.tail().map(|t| GeometricTail { c: t.c * g, gamma: t.gamma })).unwrap();
        let (rx, ry) = (modular(&phi, &x, 1e-8), modular(&phi, &y, 1e-8));
        prop_assert!(rx.lo() <= ry.hi(), "{} > {}", rx, ry);
        let (nx, ny) = (luxemburg_norm(&phi, &x, 1e-7).unwrap(), luxemburg_norm(&phi, &y, 1e-7).unwrap());
        prop_assert!(nx.lo() <= ny.hi());
    }

    #[test]
    fn norm_is_homogeneous(phi in arb_phi(), x in arb_sequence(), t in -4.0f64..4.0) {
        prop_assume!(nontrivial(&phi) && t.abs() > 1e-3);
        let n = luxemburg_norm(&phi, &x, 1e-8).unwrap();
        let nt = luxemburg_norm(&phi, &x.scaled(t), 1e-8).unwrap();
        let s = t.abs();
        prop_assert!(nt.lo() <= n.hi() * s * (1.0 + 1e-12) && n.lo() * s <= nt.hi() * (1.0 + 1e-12), "{} vs {} * {}", nt, n, s);
    }

    #[test]
    fn modular_is_superadditive_on_positive_parts(phi in arb_phi(), x in arb_sequence(), y in arb_sequence()) {
        prop_assume!(nontrivial(&phi));
        let abs = |s: &Sequence| Sequence::new(s.head().iter().map(|v| v.abs()).collect(), None).unwrap();
        let (x, y) = (abs(&x), abs(&y));
        let sum = x.combine(1.0, &y, 1.0).unwrap();
        let (rx, ry, rs) = (modular(&phi, &x, 1e-9), modular(&phi, &y, 1e-9), modular(&phi, &sum, 1e-9));
        prop_assert!(rs.hi() >= rx.lo() + ry.lo());
    }

    #[test]
    fn modular_is_convex_along_rays(phi in arb_phi(), x in arb_sequence(), t in 0.0f64..1.0) {
        prop_assume!(nontrivial(&phi));
        let (r, rt) = (modular(&phi, &x, 1e-9), modular(&phi, &x.scaled(t), 1e-9));
        prop_assert!(rt.lo() <= t * r.hi() + 1e-15);
    }

    #[test]
    fn alpha_scales_with_the_coefficient(c in 0.1f64..10.0, p in prop::sample::select(vec![1.5, 2.0, 3.0])) {
        let base = solve_alpha(&OrliczFunction::power(1.0, p).unwrap(), 1e-9).unwrap();
        let scaled = solve_alpha(&OrliczFunction::power(c, p).unwrap(), 1e-9).unwrap();
        let f = c.powf(-1.0 / p);
        let slack = 1e-12;
        prop_assert!(scaled.lo() <= base.hi() * f + slack && base.lo() * f <= scaled.hi() + slack, "{} vs {} * {}", scaled, base, f);
    }

    #[test]
    fn text_formats_round_trip(phi in arb_phi(), x in arb_sequence()) {
        prop_assert_eq!(parse_phi(&phi.to_spec_text()).unwrap(), phi);
        prop_assert_eq!(parse_sequence(&x.to_string()).unwrap(), x);
    }
}

#[test]
fn geometric_tail_modular_matches_long_truncation() {
    let phi = OrliczFunction::power(1.0, 2.0).unwrap();
    let x = Sequence::new(vec![0.3, -0.2], Some(GeometricTail { c: 0.5, gamma: 0.5 })).unwrap();
    let v = modular(&phi, &x, 1e-12);
    let mut s = 0.0;
    let mut sum = 0.0;
    for n in 1..=2_000_000usize {
        s += x.get(n).abs();
        sum += (s / n as f64).powi(2);
    }
    // Remaining terms: S^2 / n^2 for n > 2e6 with S the full sum.
    let total = x.total();
    sum += total * total / 2e6;
    assert!((v.mid() - sum).abs() <= 1e-10, "{v} vs {sum}");
}
