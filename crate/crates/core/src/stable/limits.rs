//! Stable limits `G_w` and `GPˢᵖ_z` at a window, and the isobaric-operator
//! formulas for `G_λ`, `GP_λ` and Grassmannian `𝔊ˢᵖ_z`.

use num_traits::One;

use super::Window;
use crate::coxeter::{is_fpf_grassmannian, FpfInvolution, Partition, Permutation, StrictPartition};
use crate::error::{precondition, Result};
use crate::grothendieck::{expand_in_grothendieck_basis_truncated, grothendieck, sp_grothendieck};
use crate::poly::{BetaInt, Monomial, MultiPoly, OperatorKind};

/// A reduced word for `w_n = n ... 321`.
fn longest_word(n: usize) -> Vec<usize> {
    Permutation::longest(n).reduced_word()
}

/// `π^(β)_{w_n} f`, truncated at `maxdeg` after every step (exact, since the
/// isobaric operators never lower degree).
fn pi_longest_truncated(f: &MultiPoly, n: usize, maxdeg: usize) -> MultiPoly {
    f.clone()
        .with_nvars(n)
        .apply_word_truncated(OperatorKind::Isobaric, &longest_word(n), maxdeg as i64)
}

/// `G_w(x_1, ..., x_nvars)` modulo degree `> maxdeg`, as
/// `r_nvars(π^(β)_{w_n} 𝔊_w)` with `n = max(nvars, support(w))`.
pub fn stable_groth_perm(w: &Permutation, win: &Window) -> MultiPoly {
    let n = win.nvars().max(w.support());
    let f = pi_longest_truncated(&grothendieck(w, Some(n)), n, win.maxdeg());
    f.restricted(win.nvars())
}

/// `GPˢᵖ_z` at the window, as the image of `𝔊ˢᵖ_z = Σ c_w 𝔊_w` under
/// `𝔊_w ↦ G_w`. Only the `c_w` with `ℓ(w) ≤ maxdeg` matter there, since `G_w`
/// starts in degree `ℓ(w)`.
pub fn gp_sp(z: &FpfInvolution, win: &Window) -> Result<MultiPoly> {
    let f = sp_grothendieck(z, None);
    let expansion = expand_in_grothendieck_basis_truncated(&f, win.maxdeg() as i64)?;
    Ok(expansion.evaluate(win.nvars(), |w| stable_groth_perm(w, win)))
}

/// `r_nvars(π^(β)_{w_N} 𝔊ˢᵖ_z)` modulo degree `> maxdeg` for increasing `N`,
/// starting at `nvars`, until two consecutive values agree; the value at
/// `N + 2` is required to agree as well. Returns the limit and the `N` where
/// agreement was first seen.
pub fn gp_sp_pi_route(z: &FpfInvolution, win: &Window) -> Result<(MultiPoly, usize)> {
    let f = sp_grothendieck(z, None);
    let at = |n: usize| pi_longest_truncated(&f, n, win.maxdeg()).restricted(win.nvars());
    let start = win.nvars().max(1);
    let limit = start + f.nvars() + 4;
    let mut prev = at(start);
    for n in start + 1..=limit {
        let next = at(n);
        if next == prev {
            if at(n + 1) != next {
                return Err(precondition(format!("π-route agreement at N = {} broke at N = {}", n - 1, n + 1)));
            }
            return Ok((next, n - 1));
        }
        prev = next;
    }
    Err(precondition(format!("π-route did not settle by N = {limit}")))
}

/// `π^(β)_{w_n}(x^λ)` in `n` variables.
pub fn g_via_pi_formula(lambda: &Partition, n: usize) -> Result<MultiPoly> {
    if lambda.len() > n {
        return Err(precondition(format!("{lambda} has more than {n} rows")));
    }
    let exps = lambda.parts().iter().map(|&p| p as i32).collect();
    let f = MultiPoly::term(n.max(1), Monomial::new(exps), BetaInt::one());
    Ok(f.apply_word(OperatorKind::Isobaric, &longest_word(n)))
}

/// `x^λ ∏_{i=1}^{r} ∏_{j=i+1}^{n} (x_i ⊕ x_j) / x_i`, a Laurent polynomial;
/// `parts` may end in a zero.
fn psi_times_monomial(parts: &[usize], n: usize) -> MultiPoly {
    let exps = parts.iter().map(|&p| p as i32).collect();
    let mut f = MultiPoly::term(n, Monomial::new(exps), BetaInt::one());
    for i in 1..=parts.len() {
        for j in i + 1..=n {
            let num = MultiPoly::var(n, i).oplus(&MultiPoly::var(n, j));
            f = (&f * &num).monomial_mul(&Monomial::var(i, -1));
        }
    }
    f
}

/// `π^(β)_{w_n}(x^λ ∏_{i=1}^{r} ∏_{j=i+1}^{n} (x_i ⊕ x_j) / x_i)` for a strict
/// `λ` with `r ≤ n` parts.
pub fn gp_via_pi_formula(lambda: &StrictPartition, n: usize) -> Result<MultiPoly> {
    if lambda.len() > n {
        return Err(precondition(format!("{lambda} has more than {n} parts")));
    }
    let f = psi_times_monomial(lambda.parts(), n.max(1));
    let out = f.apply_word(OperatorKind::Isobaric, &longest_word(n));
    assert!(out.is_polynomial(), "negative exponent survived π_(w_{n})");
    Ok(out)
}

/// `π^(β)_{φ_1↘1} ... π^(β)_{φ_r↘r}(x^λ ∏_{i=1}^{r} ∏_{j=i+1}^{n} (x_i ⊕ x_j) / x_i)`
/// for FPF-Grassmannian `z` with `dearc(z) = (φ_1,n+1)...(φ_r,n+r)` and
/// `λ_i = n - φ_i`, where `π^(β)_{b↘a} = π^(β)_{b-1} ... π^(β)_a`.
pub fn sp_grassmannian_formula(z: &FpfInvolution) -> Result<MultiPoly> {
    let witness = is_fpf_grassmannian(z)
        .ok_or_else(|| precondition(format!("{z} is not FPF-Grassmannian")))?;
    if z.is_theta() {
        return Err(precondition("the Grassmannian formula needs z ≠ Θ"));
    }
    let n = witness.n;
    let parts: Vec<usize> = witness.phi.iter().map(|&p| n - p).collect();
    let mut word = Vec::new();
    for (i, &phi) in witness.phi.iter().enumerate() {
        word.extend((i + 1..phi).rev());
    }
    let f = psi_times_monomial(&parts, n);
    let out = f.apply_word(OperatorKind::Isobaric, &word);
    assert!(out.is_polynomial(), "negative exponent survived the Grassmannian formula");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stable::{gp_partition, stable_groth_partition};

    fn win(n: usize, d: usize) -> Window {
        Window::new(n, d).unwrap()
    }

    #[test]
    fn single_box_everywhere() {
        let w = win(2, 3);
        let g1 = stable_groth_partition(&Partition::new(vec![1]).unwrap(), &w);
        assert_eq!(stable_groth_perm(&"21".parse().unwrap(), &w), g1);
        assert_eq!(g_via_pi_formula(&Partition::new(vec![1]).unwrap(), 2).unwrap(), g1);
        assert_eq!(gp_via_pi_formula(&StrictPartition::new(vec![1]).unwrap(), 2).unwrap(), g1);
        assert_eq!(gp_sp(&"3412".parse().unwrap(), &w).unwrap(), g1);
        assert_eq!(stable_groth_perm(&Permutation::identity(), &w), MultiPoly::one(2));
    }

    #[test]
    fn grassmannian_formula_small() {
        for s in ["3412", "4321", "351624", "47816523"] {
            let z: FpfInvolution = s.parse().unwrap();
            assert_eq!(sp_grassmannian_formula(&z).unwrap(), sp_grothendieck(&z, None), "{s}");
        }
        assert!(sp_grassmannian_formula(&FpfInvolution::theta()).is_err());
        assert!(sp_grassmannian_formula(&"465132".parse().unwrap()).is_err());
    }

    #[test]
    fn pi_route_matches_basis_route() {
        let w = win(3, 4);
        for s in ["4321", "351624", "2143"] {
            let z: FpfInvolution = s.parse().unwrap();
            let (pi, _) = gp_sp_pi_route(&z, &w).unwrap();
            assert_eq!(pi, gp_sp(&z, &w).unwrap(), "{s}");
        }
        let two = StrictPartition::new(vec![2]).unwrap();
        assert_eq!(gp_sp(&"4321".parse().unwrap(), &win(3, 5)).unwrap(), gp_partition(&two, &win(3, 5)));
    }
}
