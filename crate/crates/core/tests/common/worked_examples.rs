//! Polynomials printed in the worked examples, transcribed term by term.

use sympgroth::poly::{BetaInt, Monomial, MultiPoly};

/// `Σ c β^d x^e` from `(c, d, e)` triples.
pub fn poly(n: usize, terms: &[(i64, usize, &[i32])]) -> MultiPoly {
    let mut f = MultiPoly::zero(n);
    for &(c, d, e) in terms {
        f = &f + &MultiPoly::term(n, Monomial::new(e.to_vec()), BetaInt::monomial(c, d));
    }
    f
}

/// `𝔊_w` for `w ∈ S_3`.
pub fn s3_table() -> Vec<(&'static str, MultiPoly)> {
    vec![
        ("123", MultiPoly::one(3)),
        ("213", poly(3, &[(1, 0, &[1])])),
        ("132", poly(3, &[(1, 0, &[1]), (1, 0, &[0, 1]), (1, 1, &[1, 1])])),
        ("231", poly(3, &[(1, 0, &[1, 1])])),
        ("312", poly(3, &[(1, 0, &[2])])),
        ("321", poly(3, &[(1, 0, &[2, 1])])),
    ]
}

/// `𝔊ˢᵖ_z` for the three `z ∈ I^FPF_4`.
pub fn fpf4_table() -> Vec<(&'static str, MultiPoly)> {
    let top = poly(
        4,
        &[
            (1, 0, &[2]),
            (1, 0, &[1, 1]),
            (1, 0, &[1, 0, 1]),
            (1, 0, &[0, 1, 1]),
            (2, 1, &[1, 1, 1]),
            (1, 1, &[2, 1]),
            (1, 1, &[2, 0, 1]),
            (1, 2, &[2, 1, 1]),
        ],
    );
    vec![
        ("2143", MultiPoly::one(4)),
        ("3412", poly(4, &[(1, 0, &[1]), (1, 0, &[0, 1]), (1, 1, &[1, 1])])),
        ("4321", top),
    ]
}

/// `𝔊ˢᵖ_{351624}`.
pub fn sp_351624() -> MultiPoly {
    poly(
        6,
        &[
            (1, 0, &[2]),
            (2, 0, &[1, 1]),
            (1, 0, &[0, 2]),
            (1, 0, &[1, 0, 1]),
            (1, 0, &[0, 1, 1]),
            (1, 0, &[1, 0, 0, 1]),
            (1, 0, &[0, 1, 0, 1]),
            (2, 1, &[2, 1]),
            (2, 1, &[1, 2]),
            (1, 1, &[2, 0, 1]),
            (3, 1, &[1, 1, 1]),
            (1, 1, &[0, 2, 1]),
            (1, 1, &[2, 0, 0, 1]),
            (3, 1, &[1, 1, 0, 1]),
            (1, 1, &[0, 2, 0, 1]),
            (1, 1, &[1, 0, 1, 1]),
            (1, 1, &[0, 1, 1, 1]),
            (1, 2, &[2, 2]),
            (2, 2, &[2, 1, 1]),
            (2, 2, &[1, 2, 1]),
            (2, 2, &[2, 1, 0, 1]),
            (2, 2, &[1, 2, 0, 1]),
            (1, 2, &[2, 0, 1, 1]),
            (3, 2, &[1, 1, 1, 1]),
            (1, 2, &[0, 2, 1, 1]),
            (1, 3, &[2, 2, 1]),
            (1, 3, &[2, 2, 0, 1]),
            (2, 3, &[2, 1, 1, 1]),
            (2, 3, &[1, 2, 1, 1]),
            (1, 4, &[2, 2, 1, 1]),
        ],
    )
}
