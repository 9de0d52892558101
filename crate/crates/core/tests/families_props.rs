//! Family-level invariants: the stated parameter grids all land on exact
//! half-relations, the Pell identities hold, and the ratio sequences
//! converge to 1 + sqrt(2).

use nonfree::families::{
    base_k_parse, f_check, geom_alternating, geom_block, half_pell_tuple, pell_tuple, PellTable,
};
use nonfree::halfrel::{half_relation_poly, is_half_relation};
use nonfree::rat::{Int, Rat};
use nonfree::roots::sqrt_bracket;

#[test]
fn geometric_grids_are_half_relations() {
    for k in 2..=10 {
        for s in 1..=8 {
            for t in s..=8 {
                let (q, tuple) = geom_block(k, s, t).unwrap();
                assert!(
                    is_half_relation(&tuple, &q).unwrap(),
                    "block family failed at (k,s,t) = ({k},{s},{t})"
                );
            }
        }
        for s in 2..=8 {
            for t in 1..=6 {
                let (q, tuple) = geom_alternating(k, s, t).unwrap();
                assert!(
                    is_half_relation(&tuple, &q).unwrap(),
                    "alternating family failed at (k,s,t) = ({k},{s},{t})"
                );
            }
        }
    }
}

#[test]
fn pell_vanishing_and_determinant_identities() {
    let mut table = PellTable::new();
    for n in 2..=50u32 {
        let (q, tuple) = pell_tuple(n).unwrap();
        assert!(
            f_check(&q, &tuple.entries()[1]).is_zero(),
            "f(q_{n}, x_{n}) != 0"
        );
        let (a, tuple) = half_pell_tuple(n).unwrap();
        assert!(
            f_check(&a, &tuple.entries()[1]).is_zero(),
            "f(a_{n}, y_{n}) != 0"
        );
    }
    for n in 1..=200u32 {
        let prev = table.state(n - 1);
        let cur = table.state(n);
        let next = table.state(n + 1);
        let sign = if n % 2 == 0 {
            Int::from(1)
        } else {
            Int::from(-1)
        };
        assert_eq!(&prev.p * &next.p - &cur.p * &cur.p, sign.clone());
        assert_eq!(&next.h * &prev.h - &cur.h * &cur.h, Int::from(-2) * sign);
    }
}

#[test]
fn ratios_converge_to_silver_mean() {
    // 10^-12-wide rational bracket of 1 + sqrt(2)
    let (lo, hi) = sqrt_bracket(&Int::from(2), 13);
    let target_lo = &Rat::one() + &lo;
    let target_hi = &Rat::one() + &hi;
    let tol = Rat::new(Int::from(1), Int::from(1_000_000)).unwrap();
    let mut table = PellTable::new();
    for n in 10..=60u32 {
        let q = Rat::new(table.state(n + 1).p, table.state(n).p).unwrap();
        let dist_lo = (&q - &target_lo).abs();
        let dist_hi = (&q - &target_hi).abs();
        assert!(dist_lo.max(dist_hi) < tol, "P ratio at n = {n} too far");
        let a = Rat::new(table.state(n + 1).h, table.state(n).h).unwrap();
        let dist_lo = (&a - &target_lo).abs();
        let dist_hi = (&a - &target_hi).abs();
        assert!(dist_lo.max(dist_hi) < tol, "H ratio at n = {n} too far");
    }
}

#[test]
fn ratio_distances_strictly_decrease() {
    // distance to 1 + sqrt(2) shrinks at every step through n = 30; the
    // bracket is taken far below the smallest distance involved so the
    // comparison is decisive
    let (lo, hi) = sqrt_bracket(&Int::from(2), 40);
    let target_lo = &Rat::one() + &lo;
    let target_hi = &Rat::one() + &hi;
    let dist_bounds = |q: &Rat| -> (Rat, Rat) {
        let a = (q - &target_lo).abs();
        let b = (q - &target_hi).abs();
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    };
    let mut table = PellTable::new();
    for seq in ["p", "h"] {
        let mut prev_lower: Option<Rat> = None;
        for n in 2..=30u32 {
            let (num, den) = match seq {
                "p" => (table.state(n + 1).p, table.state(n).p),
                _ => (table.state(n + 1).h, table.state(n).h),
            };
            let q = Rat::new(num, den).unwrap();
            let (lower, upper) = dist_bounds(&q);
            if let Some(prev) = &prev_lower {
                // decisive: the new distance's upper bound sits below the
                // previous distance's lower bound
                assert!(&upper < prev, "distance did not shrink at n = {n} ({seq})");
            }
            prev_lower = Some(lower);
        }
    }
}

#[test]
fn f_check_is_the_length_six_polynomial() {
    // phr((1, x, 1, -1, 1, -1)) evaluated at q equals f(q, x)
    let mut seed = 0x243f6a88u64;
    let mut next = move || {
        seed = seed
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        ((seed >> 33) as i64 % 30) - 15
    };
    let mut done = 0;
    while done < 100 {
        let x = next();
        let num = next();
        let den = next().rem_euclid(9) + 1;
        if x == 0 || num == 0 {
            continue;
        }
        let tuple = nonfree::halfrel::Tuple::from_i64s(&[1, x, 1, -1, 1, -1]).unwrap();
        let q = Rat::new(Int::from(num), Int::from(den)).unwrap();
        let via_poly = half_relation_poly(&tuple).unwrap().eval(&q);
        assert_eq!(via_poly, f_check(&q, &Int::from(x)));
        done += 1;
    }
}

#[test]
fn base_k_round_trips_family_values() {
    // (.222)_3 and the block family at (3,1,3) agree, likewise (.0202)_3
    // with the alternating family at (3,2,1)
    let (q, _) = geom_block(3, 1, 3).unwrap();
    assert_eq!(base_k_parse("0.222", 3).unwrap(), q);
    let (q, _) = geom_alternating(3, 2, 1).unwrap();
    assert_eq!(base_k_parse("0.0202", 3).unwrap(), q);
    let (q, _) = geom_block(8, 3, 3).unwrap();
    assert_eq!(base_k_parse("0.007", 8).unwrap(), q);
    let (q, _) = geom_alternating(7, 4, 1).unwrap();
    assert_eq!(base_k_parse("0.000606", 7).unwrap(), q);
}
