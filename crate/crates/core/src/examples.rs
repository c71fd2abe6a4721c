//! Fixed reference codes over GF(3).

use crate::codes::LinearCode;
use crate::gf::FieldSpec;

/// The (9, 3) code whose degrevlex basis has 457 binomials.
pub fn ternary_9_3() -> LinearCode {
    LinearCode::from_generator(
        FieldSpec::prime(3).expect("3 is prime"),
        vec![vec![1, 0, 0, 0, 0, 1, 0, 2, 0], vec![0, 1, 0, 0, 1, 1, 1, 0, 1], vec![0, 0, 1, 1, 2, 2, 1, 1, 0]],
    )
    .expect("rows are independent")
}

/// The (8, 2) code with every nonzero word of weight 6.
pub fn ternary_8_2() -> LinearCode {
    LinearCode::from_generator(
        FieldSpec::prime(3).expect("3 is prime"),
        vec![vec![1, 1, 1, 2, 1, 2, 0, 0], vec![0, 0, 1, 1, 1, 1, 1, 1]],
    )
    .expect("rows are independent")
}
