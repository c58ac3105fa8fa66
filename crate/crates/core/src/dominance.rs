//! Dominance and twisted dominance for integral coweights.
//!
//! For a Weyl element `w`, a coweight `lambda` is called `w`-dominant when
//! its coordinate at each simple root is nonnegative, except that at the
//! simple roots sent negative by `w^{-1}` (the left descents of `w`) the
//! coordinate is allowed to dip to `-1`. These shifted cones are exactly
//! the supports of the Iwahori-fixed Whittaker functions computed in
//! [`crate::whittaker`].

use crate::root_system::{Coweight, RootSystem, WeylElement};

/// Ordinary dominance: every coordinate nonnegative.
pub fn is_dominant(cw: &Coweight) -> bool {
    cw.coords().iter().all(|&c| c >= 0)
}

/// `mask[i]` is true exactly when `w^{-1}(alpha_i)` is negative, i.e. when
/// `s_i` is a left descent of `w`. Computed without inverting `w`: those
/// `alpha_i` are the simple members of `{-w(gamma) : gamma > 0, w(gamma) < 0}`.
pub fn left_descent_mask(rs: &RootSystem, w: &WeylElement) -> Vec<bool> {
    let mut mask = vec![false; rs.rank()];
    for gamma in rs.positive_roots() {
        let img = rs.act_on_root(w, gamma).unwrap();
        if img.is_negative() {
            let neg = img.negated();
            let coords = neg.coords();
            if coords.iter().sum::<i64>() == 1 {
                if let Some(i) = coords.iter().position(|&c| c == 1) {
                    mask[i] = true;
                }
            }
        }
    }
    mask
}

/// Twisted dominance with respect to `w`: coordinate `i` must be `>= 0`
/// when `w^{-1}(alpha_i)` is positive and `>= -1` when it is negative.
pub fn is_w_dominant(rs: &RootSystem, cw: &Coweight, w: &WeylElement) -> bool {
    let mask = left_descent_mask(rs, w);
    cw.coords()
        .iter()
        .zip(&mask)
        .all(|(&c, &descent)| if descent { c >= -1 } else { c >= 0 })
}

/// The minimal `w`-dominant coweight: `-1` at each left descent of `w`,
/// `0` elsewhere. Subtracting it converts twisted dominance into ordinary
/// dominance.
pub fn dominance_shift(rs: &RootSystem, w: &WeylElement) -> Coweight {
    let coords = left_descent_mask(rs, w)
        .into_iter()
        .map(|descent| if descent { -1 } else { 0 })
        .collect();
    Coweight::new(coords)
}

/// Checks `is_w_dominant(lambda, w) <=> is_dominant(lambda - shift(w))`
/// at one point.
pub fn verify_shifted_dominance(rs: &RootSystem, w: &WeylElement, cw: &Coweight) -> bool {
    let shifted = cw.sub(&dominance_shift(rs, w));
    is_w_dominant(rs, cw, w) == is_dominant(&shifted)
}

/// Checks the shift cocycle at `w`: with `w0` the longest element,
/// `shift(w0 * w) = w0 . shift(w) + shift(w0)` where `.` is the coweight
/// action. Both sides are the minimal twisted-dominant coweight for
/// `w0 * w`.
pub fn verify_longest_shift_identity(rs: &RootSystem, w: &WeylElement) -> bool {
    let w0 = rs.longest_element();
    let lhs = dominance_shift(rs, &rs.compose(&w0, w));
    let rhs = rs
        .act_on_coweight(&w0, &dominance_shift(rs, w))
        .add(&dominance_shift(rs, &w0));
    lhs == rhs
}

/// Iterates over the integer box `[-radius, radius]^rank` in lexicographic
/// order of coordinate vectors.
pub fn coweight_box(rank: usize, radius: i64) -> Vec<Coweight> {
    let mut out: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (-radius..=radius).map(move |c| {
                    let mut v = v.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(Coweight::new).collect()
}
