//! Operator identities shared by the property tests and the acceptance suite.
#![allow(dead_code)]

pub mod worked_examples;

use num_traits::One;
use rand::rngs::StdRng;
use rand::Rng;
use sympgroth::coxeter::Permutation;
use sympgroth::poly::{BetaInt, Monomial, MultiPoly, OperatorKind};

pub const NVARS: usize = 5;

pub fn random_beta(rng: &mut StdRng) -> BetaInt {
    let len = rng.gen_range(1..=3);
    let coeffs: Vec<i64> = (0..len).map(|_| rng.gen_range(-3..=3)).collect();
    BetaInt::from_i64s(&coeffs)
}

/// Up to six terms in `x_1..x_4`, total degree at most 4; with `laurent`,
/// exponents may be `-1`.
pub fn random_poly(rng: &mut StdRng, laurent: bool) -> MultiPoly {
    let lo = if laurent { -1 } else { 0 };
    let mut f = MultiPoly::zero(NVARS);
    for _ in 0..rng.gen_range(1..=6) {
        let exps: Vec<i32> = (0..4).map(|_| rng.gen_range(lo..=2)).collect();
        let m = Monomial::new(exps);
        if m.degree() <= 4 {
            f.add_term(m, &random_beta(rng));
        }
    }
    f
}

fn x(i: usize, e: i32) -> MultiPoly {
    MultiPoly::term(NVARS, Monomial::var(i, e), BetaInt::one())
}

fn beta() -> BetaInt {
    BetaInt::beta()
}

pub fn dd_squared_vanishes(f: &MultiPoly, i: usize) -> bool {
    f.divided_diff(i).divided_diff(i).is_zero()
}

pub fn beta_dd_squared(f: &MultiPoly, i: usize) -> bool {
    let once = f.beta_divided_diff(i);
    once.beta_divided_diff(i) == once.scalar_mul(&-beta())
}

pub fn braid(kind: OperatorKind, f: &MultiPoly, i: usize) -> bool {
    f.apply_word(kind, &[i, i + 1, i]) == f.apply_word(kind, &[i + 1, i, i + 1])
}

pub fn commute(kind: OperatorKind, f: &MultiPoly, i: usize, j: usize) -> bool {
    f.apply_word(kind, &[i, j]) == f.apply_word(kind, &[j, i])
}

/// `∂^(β)_i(fg) = s_i f · (∂^(β)_i g + βg) + ∂^(β)_i f · g`.
pub fn leibniz(f: &MultiPoly, g: &MultiPoly, i: usize) -> bool {
    let lhs = (f * g).beta_divided_diff(i);
    let rhs = &(&f.act_si(i) * &(&g.beta_divided_diff(i) + &g.scalar_mul(&beta())))
        + &(&f.beta_divided_diff(i) * g);
    lhs == rhs
}

/// For `s_i`-invariant `h`: `∂^(β)_i(hg) = h ∂^(β)_i g` and `π_i(hg) = h π_i g`.
pub fn invariant_factor(f: &MultiPoly, g: &MultiPoly, i: usize) -> bool {
    let h = f + &f.act_si(i);
    (&h * g).beta_divided_diff(i) == &h * &g.beta_divided_diff(i)
        && (&h * g).isobaric(i) == &h * &g.isobaric(i)
        && h.isobaric(i) == h
}

pub fn pi_idempotent(f: &MultiPoly, i: usize) -> bool {
    let once = f.isobaric(i);
    once.isobaric(i) == once
}

/// `[b-1, b-2, ..., a]`, the word of `∂_{b↘a}`.
pub fn down_word(b: usize, a: usize) -> Vec<usize> {
    (a..b).rev().collect()
}

/// `∂^(β)_{b↘a}(x_a^e) = (-β)^{b-a-e}` for `0 ≤ e ≤ b-a`.
pub fn eee(a: usize, b: usize, e: usize) -> bool {
    let f = x(a, e as i32).apply_word(OperatorKind::Beta, &down_word(b, a));
    f == MultiPoly::constant(NVARS, (-beta()).pow(b - a - e))
}

/// Sum of `σ g` over all permutations `σ` of `x_{lo}..x_{hi}`.
pub fn symmetrize(g: &MultiPoly, lo: usize, hi: usize) -> MultiPoly {
    if hi <= lo {
        return g.clone();
    }
    let k = hi - lo + 1;
    let mut acc = MultiPoly::zero(g.nvars());
    for w in Permutation::all(k) {
        let word = w.reduced_word();
        let h = word.iter().fold(g.clone(), |h, &i| h.act_si(i + lo - 1));
        acc = &acc + &h;
    }
    acc
}

/// `π_{b↘a}(f) = ∂^(β)_{b↘a}(x_a^{b-a} f)` for `f` symmetric in `x_{a+1}..x_b`.
pub fn yyy(g: &MultiPoly, a: usize, b: usize) -> bool {
    let f = symmetrize(g, a + 1, b);
    let word = down_word(b, a);
    let lhs = f.apply_word(OperatorKind::Isobaric, &word);
    let rhs = (&x(a, (b - a) as i32) * &f).apply_word(OperatorKind::Beta, &word);
    lhs == rhs
}

pub fn delta_monomial(n: usize) -> Monomial {
    Monomial::new((1..=n).map(|i| (n - i) as i32).collect())
}

/// `π_{w_n} f = ∂^(β)_{w_n}(x^{δ_n} f)`.
pub fn vartheta(f: &MultiPoly, n: usize) -> bool {
    let word = Permutation::longest(n).reduced_word();
    f.apply_word(OperatorKind::Isobaric, &word)
        == f.monomial_mul(&delta_monomial(n)).apply_word(OperatorKind::Beta, &word)
}

/// `∂^(β)_{1^m × w_n} f = ∂_{1^m × w_n}(Δ f)` with `Δ = ∏_{j=2}^n (1 + βx_{m+j})^{j-1}`.
pub fn tech_first(f: &MultiPoly, m: usize, n: usize) -> bool {
    let word: Vec<usize> = Permutation::longest(n).reduced_word().iter().map(|i| i + m).collect();
    let delta = (2..=n).fold(MultiPoly::one(NVARS), |acc, j| {
        &acc * &MultiPoly::one_plus_beta_x(NVARS, m + j).pow(j - 1)
    });
    f.apply_word(OperatorKind::Beta, &word) == (&delta * f).apply_word(OperatorKind::Plain, &word)
}

/// Every reduced word of `w`.
pub fn reduced_words(w: &Permutation) -> Vec<Vec<usize>> {
    if w.is_identity() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in w.descents() {
        for mut word in reduced_words(&w.swap_positions(i, i + 1)) {
            word.push(i);
            out.push(word);
        }
    }
    out
}

pub fn word_independent(kind: OperatorKind, f: &MultiPoly, w: &Permutation) -> bool {
    let words = reduced_words(w);
    let first = f.apply_word(kind, &words[0]);
    words[1..].iter().all(|word| f.apply_word(kind, word) == first)
}

pub const KINDS: [OperatorKind; 3] = [OperatorKind::Plain, OperatorKind::Beta, OperatorKind::Isobaric];
