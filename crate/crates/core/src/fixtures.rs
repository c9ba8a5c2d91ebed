//! Small hand-checkable inputs with known answers.

use num_bigint::BigInt;

use crate::eqls::SystemDatum;
use crate::fan::{build_fan, Fan, FanOptions, SupportFunction};
use crate::intlin::LatticeVector;
use crate::polytope::PointSet;

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub fan: Fan,
    pub data: Vec<SystemDatum>,
    /// Component count obtained by elementary geometry.
    pub expected: u64,
}

fn rays(v: &[&[i64]]) -> Vec<LatticeVector> {
    v.iter().map(|c| LatticeVector::from_i64s(c)).collect()
}

fn fan(rank: usize, r: &[&[i64]], cones: &[&[usize]]) -> Fan {
    let cones: Vec<Vec<usize>> = cones.iter().map(|c| c.to_vec()).collect();
    build_fan(rank, &rays(r), &cones, FanOptions::default()).expect("fixture fan")
}

fn datum(f: &Fan, support: &[&[i64]], ray_values: &[i64]) -> SystemDatum {
    let vals: Vec<BigInt> = ray_values.iter().map(|&x| BigInt::from(x)).collect();
    let psi = SupportFunction::from_ray_values(f, &vals).expect("fixture divisor");
    SystemDatum::new(PointSet::from_i64s(f.rank(), support), psi).expect("fixture support")
}

/// P^1 with the one-element system `{0} + {∞}`: two points.
pub fn p1_fixed_divisor() -> Fixture {
    let f = fan(1, &[&[1], &[-1]], &[&[0], &[1]]);
    let data = vec![datum(&f, &[&[0]], &[1, 1])];
    Fixture {
        name: "p1-fixed-divisor",
        fan: f,
        data,
        expected: 2,
    }
}

/// P^2 with all lines: a general line is irreducible.
pub fn p2_hyperplane() -> Fixture {
    let f = fan(
        2,
        &[&[1, 0], &[0, 1], &[-1, -1]],
        &[&[0, 1], &[1, 2], &[0, 2]],
    );
    let data = vec![datum(&f, &[&[0, 0], &[1, 0], &[0, 1]], &[0, 0, 1])];
    Fixture {
        name: "p2-hyperplane",
        fan: f,
        data,
        expected: 1,
    }
}

/// A^2 with two systems of lines through the origin: they meet only there.
pub fn a2_two_lines() -> Fixture {
    let f = fan(2, &[&[1, 0], &[0, 1]], &[&[0, 1]]);
    let lines = datum(&f, &[&[1, 0], &[0, 1]], &[0, 0]);
    Fixture {
        name: "a2-two-lines",
        fan: f,
        data: vec![lines.clone(), lines],
        expected: 1,
    }
}

/// P^1 x P^1 with two fibres of the same ruling: disjoint.
pub fn p1xp1_fibers() -> Fixture {
    let f = fan(
        2,
        &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]],
        &[&[0, 2], &[2, 1], &[1, 3], &[3, 0]],
    );
    let fibre = datum(&f, &[&[0, 0], &[-1, 0]], &[1, 0, 0, 0]);
    Fixture {
        name: "p1xp1-fibers",
        fan: f,
        data: vec![fibre.clone(), fibre],
        expected: 0,
    }
}

/// Hirzebruch surface F_1 (P^2 blown up at a point). The first system is
/// the fixed curve over the ray `-e2`, the second the pencil of fibres; a
/// general fibre meets that curve once.
pub fn hirzebruch_f1() -> Fixture {
    let f = fan(
        2,
        &[&[1, 0], &[0, 1], &[-1, 1], &[0, -1]],
        &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]],
    );
    let fixed = datum(&f, &[&[0, 0]], &[0, 0, 0, 1]);
    let fibres = datum(&f, &[&[0, 0], &[-1, 0]], &[1, 0, 0, 0]);
    Fixture {
        name: "hirzebruch-f1",
        fan: f,
        data: vec![fixed, fibres],
        expected: 1,
    }
}

/// Two general conics in the torus `(C*)^2`: four points.
pub fn torus_conics() -> Fixture {
    let f = fan(2, &[], &[&[]]);
    let tri: &[&[i64]] = &[&[0, 0], &[1, 0], &[2, 0], &[0, 1], &[1, 1], &[0, 2]];
    let conic = datum(&f, tri, &[]);
    Fixture {
        name: "torus-conics",
        fan: f,
        data: vec![conic.clone(), conic],
        expected: 4,
    }
}

/// Every fixture, in a fixed order.
pub fn all() -> Vec<Fixture> {
    vec![
        p1_fixed_divisor(),
        p2_hyperplane(),
        a2_two_lines(),
        p1xp1_fibers(),
        hirzebruch_f1(),
        torus_conics(),
    ]
}
