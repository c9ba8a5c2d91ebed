//! Values computed once by the interpolation and resultant oracles and
//! frozen here; the polarization formula and the torus count must keep
//! reproducing them.

use num_bigint::BigInt;
use toricount::{k_torus, mixed_volume, KCase, PointSet};

fn mv(sets: &[PointSet]) -> BigInt {
    mixed_volume(sets).unwrap().into_inner()
}

#[test]
fn rank_three_mixed_volume() {
    let sets = [
        PointSet::from_i64s(
            3,
            &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]],
        ),
        PointSet::from_i64s(3, &[&[0, 0, 0], &[2, 0, 0], &[0, 1, 1]]),
        PointSet::from_i64s(
            3,
            &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 0]],
        ),
    ];
    assert_eq!(mv(&sets), BigInt::from(7));
}

type Pair = (&'static [&'static [i64]], &'static [&'static [i64]], i64);

#[test]
fn plane_pairs() {
    let cases: [Pair; 3] = [
        (
            &[&[0, 0], &[3, 1], &[1, 3]],
            &[&[0, 0], &[2, 0], &[0, 2], &[1, 1]],
            8,
        ),
        (
            &[&[1, 0], &[-1, 1], &[0, -1]],
            &[&[0, 0], &[1, 1], &[-2, 1]],
            6,
        ),
        (
            &[&[0, 0], &[1, 0], &[0, 1], &[3, 3]],
            &[&[0, 0], &[2, 1], &[1, 2]],
            8,
        ),
    ];
    for (a, b, want) in cases {
        let sets = [PointSet::from_i64s(2, a), PointSet::from_i64s(2, b)];
        assert_eq!(mv(&sets), BigInt::from(want));
        let k = k_torus(&sets).unwrap();
        assert_eq!((k.value, k.case), (BigInt::from(want), KCase::ZeroDefect));
    }
}

#[test]
fn line_and_conic_in_three_space() {
    // both equations ignore x3: two lines {point} x C*
    let sets = [
        PointSet::from_i64s(3, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]),
        PointSet::from_i64s(3, &[&[0, 0, 0], &[2, 0, 0], &[0, 2, 0]]),
    ];
    let k = k_torus(&sets).unwrap();
    assert_eq!(k.value, BigInt::from(2));
    assert_eq!(k.j0, Some(vec![0, 1]));
}
