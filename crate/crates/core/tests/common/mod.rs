#![allow(dead_code)]

use isotwist::{Field, Poly};
use proptest::prelude::*;

/// F_2, F_3, F_4, F_5, F_7, F_9.
pub const SMALL_FIELDS: [(u64, u32); 6] = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (3, 2)];

pub fn field(p: u64, l: u32) -> Field {
    Field::new(p, l).unwrap()
}

pub fn small_field() -> impl Strategy<Value = Field> {
    prop::sample::select(SMALL_FIELDS.to_vec()).prop_map(|(p, l)| field(p, l))
}

pub fn poly_in(f: &Field, max_deg: usize) -> impl Strategy<Value = Poly> {
    let f = f.clone();
    prop::collection::vec(0..f.order(), 0..=max_deg + 1)
        .prop_map(move |c| Poly::new(&f, c.into_iter().map(|i| f.elem(i).unwrap()).collect()))
}

pub fn field_and_polys(n: usize, max_deg: usize) -> impl Strategy<Value = (Field, Vec<Poly>)> {
    small_field().prop_flat_map(move |f| {
        let polys = prop::collection::vec(poly_in(&f, max_deg), n);
        (Just(f), polys)
    })
}

pub fn terms(f: &Field, t: &[(usize, i64)]) -> Poly {
    Poly::from_terms(f, t)
}
