//! Exact evaluation of the Iwahori-fixed Whittaker function attached to the
//! Steinberg representation of a split adjoint group, as a function on the
//! cells `(coweight, Weyl element)`.
//!
//! Values live in the Laurent ring `Z[q^{+-1}, z_1^{+-1}, ..., z_r^{+-1}]`,
//! where `q` is the residue cardinality and `z_i` are the values of the
//! unramified character on the fundamental coweights. The evaluation rule
//! is: zero unless the coweight is `w`-dominant, and otherwise
//! `chi_delta(lambda) * (-1)^{l(w)} * q^{-l(w)}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use serde::ser::{SerializeMap, SerializeSeq, Serializer};
use serde::Serialize;

use crate::dominance::{coweight_box, dominance_shift, is_dominant, is_w_dominant};
use crate::root_system::{Coweight, RootSystem, WeylElement};
use crate::{Error, Result};

pub type Rat = Ratio<i128>;

/// An element of `Z[q^{+-1}, z_1^{+-1}, ..., z_r^{+-1}]`, stored as a map
/// from `(q-exponent, z-exponent vector)` to a nonzero integer coefficient.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WhittakerValue {
    terms: BTreeMap<(i64, Vec<i64>), i64>,
}

impl WhittakerValue {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(1, 0, vec![0; rank])
    }

    pub fn monomial(coeff: i64, q_exp: i64, z_exps: Vec<i64>) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert((q_exp, z_exps), coeff);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order: ascending q-exponent, then lexicographic
    /// z-exponent vector.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &[i64], i64)> + '_ {
        self.terms.iter().map(|((q, z), &c)| (*q, z.as_slice(), c))
    }

    fn add_term(&mut self, key: (i64, Vec<i64>), coeff: i64) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    /// Numeric specialization at `q` and a total assignment of the `z_i`.
    /// All specialization points must be nonzero since exponents may be
    /// negative.
    pub fn specialize(&self, q: Rat, zs: &[Rat]) -> Result<Rat> {
        if q == Rat::from_integer(0) {
            return Err(Error::Domain("specialization requires q != 0".into()));
        }
        if zs.iter().any(|z| *z == Rat::from_integer(0)) {
            return Err(Error::Domain("specialization requires all z_i != 0".into()));
        }
        let mut total = Rat::from_integer(0);
        for ((qe, ze), &c) in &self.terms {
            if ze.len() != zs.len() {
                return Err(Error::Domain(format!(
                    "specialization has {} z-values, value has rank {}",
                    zs.len(),
                    ze.len()
                )));
            }
            let mut term = rat_pow(q, *qe)?;
            for (z, &e) in zs.iter().zip(ze) {
                term *= rat_pow(*z, e)?;
            }
            total += term * Rat::from_integer(c as i128);
        }
        Ok(total)
    }
}

/// Exact integer power of a nonzero rational, negative exponents allowed.
pub fn rat_pow(base: Rat, exp: i64) -> Result<Rat> {
    if base == Rat::from_integer(0) && exp <= 0 {
        return Err(Error::Domain("zero base with nonpositive exponent".into()));
    }
    if exp.unsigned_abs() > 10_000 {
        return Err(Error::Domain(format!("exponent {exp} out of supported range")));
    }
    let positive = exp.unsigned_abs() as u32;
    let powered = |x: i128| -> Result<i128> {
        x.checked_pow(positive)
            .ok_or_else(|| Error::Domain("overflow in rational power".into()))
    };
    let num = powered(*base.numer())?;
    let den = powered(*base.denom())?;
    Ok(if exp >= 0 {
        Rat::new(num, den)
    } else {
        Rat::new(den, num)
    })
}

impl Add for &WhittakerValue {
    type Output = WhittakerValue;
    fn add(self, rhs: &WhittakerValue) -> WhittakerValue {
        let mut out = self.clone();
        for (key, &c) in &rhs.terms {
            out.add_term(key.clone(), c);
        }
        out
    }
}

impl Sub for &WhittakerValue {
    type Output = WhittakerValue;
    fn sub(self, rhs: &WhittakerValue) -> WhittakerValue {
        let mut out = self.clone();
        for (key, &c) in &rhs.terms {
            out.add_term(key.clone(), -c);
        }
        out
    }
}

impl Neg for &WhittakerValue {
    type Output = WhittakerValue;
    fn neg(self) -> WhittakerValue {
        let mut out = WhittakerValue::zero();
        for (key, &c) in &self.terms {
            out.add_term(key.clone(), -c);
        }
        out
    }
}

impl Mul for &WhittakerValue {
    type Output = WhittakerValue;
    fn mul(self, rhs: &WhittakerValue) -> WhittakerValue {
        let mut out = WhittakerValue::zero();
        for ((q1, z1), &c1) in &self.terms {
            for ((q2, z2), &c2) in &rhs.terms {
                assert_eq!(z1.len(), z2.len(), "rank mismatch in product");
                let z: Vec<i64> = z1.iter().zip(z2).map(|(a, b)| a + b).collect();
                out.add_term((q1 + q2, z), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for WhittakerValue {
    /// Canonical symbolic form. Terms appear in canonical order; each term
    /// prints its `z` factors then its `q` factor joined by `*`, exponent
    /// `^e` omitted when `e = 1`, magnitude omitted when it is 1 and at
    /// least one variable factor is present. Zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut rendered = String::new();
        for (idx, ((qe, ze), &c)) in self.terms.iter().enumerate() {
            if idx == 0 {
                if c < 0 {
                    rendered.push('-');
                }
            } else {
                rendered.push(if c < 0 { '-' } else { '+' });
            }
            let mut factors: Vec<String> = Vec::new();
            let magnitude = c.unsigned_abs();
            for (i, &e) in ze.iter().enumerate() {
                if e == 1 {
                    factors.push(format!("z{}", i + 1));
                } else if e != 0 {
                    factors.push(format!("z{}^{}", i + 1, e));
                }
            }
            if *qe == 1 {
                factors.push("q".to_string());
            } else if *qe != 0 {
                factors.push(format!("q^{qe}"));
            }
            if factors.is_empty() || magnitude != 1 {
                factors.insert(0, magnitude.to_string());
            }
            rendered.push_str(&factors.join("*"));
        }
        write!(f, "{rendered}")
    }
}

impl Serialize for WhittakerValue {
    /// `{"terms": [{"q": int, "z": [ints], "c": int}, ...]}` in canonical
    /// term order.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Terms<'a>(&'a BTreeMap<(i64, Vec<i64>), i64>);
        impl Serialize for Terms<'_> {
            fn serialize<S: Serializer>(
                &self,
                serializer: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
                for ((q, z), c) in self.0 {
                    #[derive(Serialize)]
                    struct Term<'a> {
                        q: i64,
                        z: &'a [i64],
                        c: i64,
                    }
                    seq.serialize_element(&Term { q: *q, z, c: *c })?;
                }
                seq.end()
            }
        }
        let mut map = serializer.serialize_map(Some(1))?;
        map.serialize_entry("terms", &Terms(&self.terms))?;
        map.end()
    }
}

/// The weight `chi * delta` of the inducing character on the coweight
/// lattice: `prod_i z_i^{m_i} * q^{-<2rho, lambda>}` for
/// `lambda = sum m_i varpi_i^vee`. Multiplicative in `lambda`.
pub fn chi_delta(rs: &RootSystem, lambda: &Coweight) -> WhittakerValue {
    let q_exp = -rs.pairing(rs.two_rho(), lambda);
    WhittakerValue::monomial(1, q_exp, lambda.coords().to_vec())
}

/// The Whittaker value on the cell `(lambda, w)`: zero unless `lambda` is
/// `w`-dominant, otherwise `chi_delta(lambda) * (-1)^{l(w)} q^{-l(w)}`.
pub fn eval_whittaker(rs: &RootSystem, lambda: &Coweight, w: &WeylElement) -> WhittakerValue {
    if !is_w_dominant(rs, lambda, w) {
        return WhittakerValue::zero();
    }
    let l = w.length() as i64;
    let sign = if l % 2 == 0 { 1 } else { -1 };
    let cell_factor = WhittakerValue::monomial(sign, -l, vec![0; rs.rank()]);
    &chi_delta(rs, lambda) * &cell_factor
}

/// For dominant `lambda`, checks the cell recursion
/// `eval(lambda, w) = (-1)^{l(w)} q^{-l(w)} * eval(lambda, e)` exactly.
pub fn verify_length_scaling(
    rs: &RootSystem,
    lambda: &Coweight,
    w: &WeylElement,
) -> Result<bool> {
    if !is_dominant(lambda) {
        return Err(Error::Domain(format!(
            "length-scaling check requires a dominant coweight, got {lambda}"
        )));
    }
    let l = w.length() as i64;
    let sign = if l % 2 == 0 { 1 } else { -1 };
    let factor = WhittakerValue::monomial(sign, -l, vec![0; rs.rank()]);
    Ok(eval_whittaker(rs, lambda, w) == &factor * &eval_whittaker(rs, lambda, &rs.identity()))
}

/// Division-free form of the translation identity relating a cell value to
/// diagonal values: with `d = dominance_shift(w)`,
/// `(-1)^{l(w)} q^{l(w)} * eval(-d, e) * eval(lambda, w) = eval(lambda - d, e)`.
/// Holds for every `lambda` and `w`.
pub fn verify_translation_identity(rs: &RootSystem, lambda: &Coweight, w: &WeylElement) -> bool {
    let d = dominance_shift(rs, w);
    let l = w.length() as i64;
    let sign = if l % 2 == 0 { 1 } else { -1 };
    let factor = WhittakerValue::monomial(sign, l, vec![0; rs.rank()]);
    let lhs = &(&factor * &eval_whittaker(rs, &d.negated(), &rs.identity()))
        * &eval_whittaker(rs, lambda, w);
    let rhs = eval_whittaker(rs, &lambda.sub(&d), &rs.identity());
    lhs == rhs
}

/// Checks that the value is nonzero exactly on the twisted-dominant cone.
pub fn support_check(rs: &RootSystem, lambda: &Coweight, w: &WeylElement) -> bool {
    let nonzero = !eval_whittaker(rs, lambda, w).is_zero();
    nonzero == is_w_dominant(rs, lambda, w)
}

/// The witness pair showing the function is genuinely Iwahori-level and not
/// fixed by the larger parahoric at `i`: at the minimal `s_i`-dominant
/// coweight the value on the `s_i` cell is nonzero while the diagonal value
/// vanishes.
pub fn parahoric_vanishing_witness(
    rs: &RootSystem,
    i: usize,
) -> Result<(WhittakerValue, WhittakerValue)> {
    let s = rs.simple_reflection(i)?;
    let d = dominance_shift(rs, &s);
    let on_cell = eval_whittaker(rs, &d, &s);
    let at_identity = eval_whittaker(rs, &d, &rs.identity());
    Ok((on_cell, at_identity))
}

/// One row of the evaluation table.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct TableRow {
    pub coweight: Vec<i64>,
    pub weyl_word: Vec<usize>,
    pub value: WhittakerValue,
}

impl TableRow {
    /// CSV rendering of the three fields, each double-quoted.
    pub fn csv_line(&self) -> String {
        let coweight = self
            .coweight
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let word = self
            .weyl_word
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",");
        format!("\"{}\",\"{}\",\"{}\"", coweight, word, self.value)
    }
}

/// Evaluates every cell with coweight coordinates in `[-radius, radius]`:
/// coweights in lexicographic order crossed with Weyl elements in canonical
/// order.
pub fn whittaker_table(rs: &RootSystem, radius: i64) -> Result<Vec<TableRow>> {
    if radius < 0 {
        return Err(Error::Usage(format!("table radius must be >= 0, got {radius}")));
    }
    let mut rows = Vec::new();
    for cw in coweight_box(rs.rank(), radius) {
        for w in rs.weyl_elements() {
            rows.push(TableRow {
                coweight: cw.coords().to_vec(),
                weyl_word: rs.weyl_word(w),
                value: eval_whittaker(rs, &cw, w),
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::CartanType;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(CartanType::parse(s).unwrap()).unwrap()
    }

    fn rat(n: i128, d: i128) -> Rat {
        Rat::new(n, d)
    }

    #[test]
    fn chi_delta_at_zero_is_one() {
        for name in ["A1", "B2", "D4"] {
            let r = rs(name);
            assert_eq!(
                chi_delta(&r, &Coweight::zero(r.rank())),
                WhittakerValue::one(r.rank())
            );
        }
    }

    #[test]
    fn chi_delta_rank_one_powers() {
        let r = rs("A1");
        for m in -3..=3 {
            assert_eq!(
                chi_delta(&r, &Coweight::new(vec![m])),
                WhittakerValue::monomial(1, -m, vec![m])
            );
        }
    }

    #[test]
    fn chi_delta_a2_fundamental() {
        let r = rs("A2");
        let v = chi_delta(&r, &Coweight::fundamental(2, 0));
        assert_eq!(v, WhittakerValue::monomial(1, -2, vec![1, 0]));
        assert_eq!(v.to_string(), "z1*q^-2");
    }

    #[test]
    fn chi_delta_is_multiplicative() {
        let r = rs("B2");
        for a in coweight_box(2, 2) {
            for b in coweight_box(2, 2) {
                assert_eq!(
                    chi_delta(&r, &a.add(&b)),
                    &chi_delta(&r, &a) * &chi_delta(&r, &b)
                );
            }
        }
    }

    #[test]
    fn eval_examples() {
        let a1 = rs("A1");
        let e = a1.identity();
        let s = a1.simple_reflection(0).unwrap();
        assert_eq!(
            eval_whittaker(&a1, &Coweight::zero(1), &e),
            WhittakerValue::one(1)
        );
        assert_eq!(eval_whittaker(&a1, &Coweight::zero(1), &e).to_string(), "1");
        assert!(eval_whittaker(&a1, &Coweight::new(vec![-1]), &e).is_zero());
        for m in 0..4 {
            assert_eq!(
                eval_whittaker(&a1, &Coweight::new(vec![m]), &s),
                WhittakerValue::monomial(-1, -m - 1, vec![m])
            );
        }
        assert_eq!(
            eval_whittaker(&a1, &Coweight::new(vec![2]), &s).to_string(),
            "-z1^2*q^-3"
        );
        // The deepest supported cell on the reflection side.
        assert_eq!(
            eval_whittaker(&a1, &Coweight::new(vec![-1]), &s).to_string(),
            "-z1^-1"
        );
        assert!(eval_whittaker(&a1, &Coweight::new(vec![-2]), &s).is_zero());
    }

    #[test]
    fn length_scaling_examples_and_domain_error() {
        let a2 = rs("A2");
        let s1 = a2.simple_reflection(0).unwrap();
        assert!(verify_length_scaling(&a2, &Coweight::zero(2), &s1).unwrap());
        let w0 = a2.longest_element();
        let l = Coweight::fundamental(2, 0);
        assert!(verify_length_scaling(&a2, &l, &w0).unwrap());
        assert_eq!(
            eval_whittaker(&a2, &l, &w0),
            WhittakerValue::monomial(-1, -5, vec![1, 0])
        );
        let b2 = rs("B2");
        let s2 = b2.simple_reflection(1).unwrap();
        assert!(verify_length_scaling(&b2, &Coweight::new(vec![2, 1]), &s2).unwrap());
        assert!(verify_length_scaling(&a2, &Coweight::new(vec![-1, 0]), &s1).is_err());
    }

    #[test]
    fn length_scaling_sweep_radius_two() {
        for name in ["A1", "A2", "B2", "C2", "G2", "A3"] {
            let r = rs(name);
            for w in r.weyl_elements() {
                for cw in coweight_box(r.rank(), 2) {
                    if is_dominant(&cw) {
                        assert!(verify_length_scaling(&r, &cw, w).unwrap(), "{name}");
                    }
                }
            }
        }
    }

    #[test]
    fn translation_identity_examples() {
        let a2 = rs("A2");
        assert!(verify_translation_identity(
            &a2,
            &Coweight::zero(2),
            &a2.identity()
        ));
        let s1 = a2.simple_reflection(0).unwrap();
        let d = dominance_shift(&a2, &s1);
        assert!(verify_translation_identity(&a2, &d, &s1));
        // Outside the support both sides vanish.
        let far = Coweight::new(vec![-2, 0]);
        assert!(eval_whittaker(&a2, &far, &s1).is_zero());
        assert!(verify_translation_identity(&a2, &far, &s1));
    }

    #[test]
    fn translation_identity_sweep_radius_two() {
        for name in ["A1", "A2", "B2", "C2", "G2", "A3"] {
            let r = rs(name);
            for w in r.weyl_elements() {
                for cw in coweight_box(r.rank(), 2) {
                    assert!(verify_translation_identity(&r, &cw, w), "{name} {cw} {w:?}");
                }
            }
        }
    }

    #[test]
    fn translation_by_dominant_coweights_scales_by_chi_delta() {
        // Scaling by chi_delta under dominant translation holds on the
        // supported cone; a dominant shift can move an unsupported coweight
        // into support, so unsupported ones are excluded.
        let r = rs("B2");
        for w in r.weyl_elements() {
            for cw in coweight_box(2, 2) {
                if !is_w_dominant(&r, &cw, w) {
                    assert!(eval_whittaker(&r, &cw, w).is_zero());
                    continue;
                }
                for mu in coweight_box(2, 2) {
                    if !is_dominant(&mu) {
                        continue;
                    }
                    assert_eq!(
                        eval_whittaker(&r, &cw.add(&mu), w),
                        &chi_delta(&r, &mu) * &eval_whittaker(&r, &cw, w)
                    );
                }
            }
        }
    }

    #[test]
    fn support_examples_and_sweep() {
        let a2 = rs("A2");
        let w0 = a2.longest_element();
        assert!(support_check(&a2, &Coweight::zero(2), &w0));
        assert!(!eval_whittaker(&a2, &Coweight::zero(2), &w0).is_zero());
        let s1 = a2.simple_reflection(0).unwrap();
        let l = Coweight::new(vec![-1, -1]);
        assert!(support_check(&a2, &l, &s1));
        assert!(eval_whittaker(&a2, &l, &s1).is_zero());
        let d0 = dominance_shift(&a2, &w0);
        assert!(!eval_whittaker(&a2, &d0, &w0).is_zero());
        for name in ["A2", "B2", "G2"] {
            let r = rs(name);
            for w in r.weyl_elements() {
                for cw in coweight_box(r.rank(), 3) {
                    assert!(support_check(&r, &cw, w));
                }
            }
        }
    }

    #[test]
    fn nonvanishing_at_the_minimal_cell() {
        for name in ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2"] {
            let r = rs(name);
            for w in r.weyl_elements() {
                let d = dominance_shift(&r, w);
                assert!(!eval_whittaker(&r, &d, w).is_zero(), "{name}");
            }
        }
    }

    #[test]
    fn parahoric_witness_examples() {
        let a1 = rs("A1");
        let (on_cell, at_id) = parahoric_vanishing_witness(&a1, 0).unwrap();
        assert_eq!(on_cell, WhittakerValue::monomial(-1, 0, vec![-1]));
        assert_eq!(on_cell.to_string(), "-z1^-1");
        assert!(at_id.is_zero());
        for name in ["A2", "B2"] {
            let r = rs(name);
            for i in 0..r.rank() {
                let (on_cell, at_id) = parahoric_vanishing_witness(&r, i).unwrap();
                assert!(!on_cell.is_zero(), "{name} i={i}");
                assert!(at_id.is_zero(), "{name} i={i}");
            }
        }
        assert!(parahoric_vanishing_witness(&a1, 5).is_err());
    }

    #[test]
    fn table_shapes() {
        let a1 = rs("A1");
        assert_eq!(whittaker_table(&a1, 0).unwrap().len(), 2);
        let rows = whittaker_table(&a1, 1).unwrap();
        assert_eq!(rows.len(), 6);
        // Support: m >= 0 on the identity cell (m in {0, 1}) and m >= -1 on
        // the reflection cell (m in {-1, 0, 1}), so five nonzero rows.
        let nonzero = rows.iter().filter(|r| !r.value.is_zero()).count();
        assert_eq!(nonzero, 5);
        let a2 = rs("A2");
        assert_eq!(whittaker_table(&a2, 1).unwrap().len(), 54);
        assert!(whittaker_table(&a1, -1).is_err());
    }

    #[test]
    fn table_row_order_and_serialization() {
        let a1 = rs("A1");
        let rows = whittaker_table(&a1, 1).unwrap();
        assert_eq!(rows[0].coweight, vec![-1]);
        assert_eq!(rows[0].weyl_word, Vec::<usize>::new());
        assert!(rows[0].value.is_zero());
        assert_eq!(rows[1].weyl_word, vec![1]);
        let json = serde_json::to_string(&rows[1]).unwrap();
        assert_eq!(
            json,
            r#"{"coweight":[-1],"weyl_word":[1],"value":{"terms":[{"q":0,"z":[-1],"c":-1}]}}"#
        );
        let zero_json = serde_json::to_string(&rows[0].value).unwrap();
        assert_eq!(zero_json, r#"{"terms":[]}"#);
        assert_eq!(rows[1].csv_line(), "\"-1\",\"1\",\"-z1^-1\"");
    }

    #[test]
    fn specialization_matches_hand_values() {
        let a1 = rs("A1");
        let e = a1.identity();
        let s = a1.simple_reflection(0).unwrap();
        // m = 1 on the identity cell: z * q^{-1} -> (1/2) * (1/3) = 1/6.
        let v = eval_whittaker(&a1, &Coweight::new(vec![1]), &e);
        assert_eq!(
            v.specialize(rat(3, 1), &[rat(1, 2)]).unwrap(),
            rat(1, 6)
        );
        // m = 0 on the reflection cell: -q^{-1} -> -1/3.
        let v = eval_whittaker(&a1, &Coweight::new(vec![0]), &s);
        assert_eq!(
            v.specialize(rat(3, 1), &[rat(1, 2)]).unwrap(),
            rat(-1, 3)
        );
        assert!(v.specialize(rat(0, 1), &[rat(1, 2)]).is_err());
        assert!(v.specialize(rat(3, 1), &[rat(0, 1)]).is_err());
        assert!(v.specialize(rat(3, 1), &[]).is_err());
    }

    #[test]
    fn display_grammar() {
        assert_eq!(WhittakerValue::zero().to_string(), "0");
        assert_eq!(WhittakerValue::one(2).to_string(), "1");
        assert_eq!(WhittakerValue::monomial(-3, 0, vec![0]).to_string(), "-3");
        assert_eq!(
            WhittakerValue::monomial(1, 1, vec![2, -1]).to_string(),
            "z1^2*z2^-1*q"
        );
        assert_eq!(
            WhittakerValue::monomial(2, -1, vec![0, 1]).to_string(),
            "2*z2*q^-1"
        );
        let sum = &WhittakerValue::one(1) + &WhittakerValue::monomial(-1, 1, vec![0]);
        assert_eq!(sum.to_string(), "1-q");
        let sum2 = &WhittakerValue::monomial(-2, -2, vec![1]) + &WhittakerValue::one(1);
        assert_eq!(sum2.to_string(), "-2*z1*q^-2+1");
    }
}
