//! The Iwahori-Hecke algebra of a finite Weyl group over `Z[q, q^-1]`,
//! in the standard basis `{T_w}` with relations
//! `T_s * T_w = T_{sw}` when the length goes up and
//! `T_s * T_w = q * T_{sw} + (q-1) * T_w` when it goes down.
//!
//! Only the two one-dimensional characters matter here: the sign character
//! `T_s -> -1` and the trivial character `T_s -> q`, together with their
//! eigenvectors in the regular module normalized to have coefficient 1 at
//! the identity.

use std::collections::BTreeMap;

use crate::laurent::LaurentInt;
use crate::root_system::{RootSystem, WeylElement};

/// A finite `Z[q, q^-1]`-linear combination of standard basis elements.
/// Keys are indices into the ambient group's element table, so elements
/// only make sense relative to the `RootSystem` they were built from.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HeckeElement {
    terms: BTreeMap<usize, LaurentInt>,
}

impl HeckeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, idx: usize, c: LaurentInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(idx) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = &*e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        for (&idx, c) in &rhs.terms {
            out.add_term(idx, c.clone());
        }
        out
    }

    pub fn scaled(&self, c: &LaurentInt) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (&idx, coeff) in &self.terms {
            out.add_term(idx, coeff * c);
        }
        out
    }

    /// Coefficient of `T_w`.
    pub fn coefficient(&self, rs: &RootSystem, w: &WeylElement) -> LaurentInt {
        let idx = rs.weyl_table().index_of(w);
        self.terms.get(&idx).cloned().unwrap_or_else(LaurentInt::zero)
    }

    /// Support in canonical element order, with coefficients.
    pub fn support<'a>(&'a self, rs: &'a RootSystem) -> Vec<(&'a WeylElement, &'a LaurentInt)> {
        let table = rs.weyl_table();
        self.terms
            .iter()
            .map(|(&idx, c)| (table.element(idx), c))
            .collect()
    }
}

/// The basis element `T_w`.
pub fn basis_element(rs: &RootSystem, w: &WeylElement) -> HeckeElement {
    let mut h = HeckeElement::zero();
    h.add_term(rs.weyl_table().index_of(w), LaurentInt::one());
    h
}

/// Left multiplication by the generator `T_{s_i}`, the defining relation
/// applied termwise.
pub fn generator_left_product(rs: &RootSystem, i: usize, h: &HeckeElement) -> HeckeElement {
    let table = rs.weyl_table();
    let q = LaurentInt::q();
    let q_minus_one = &q - &LaurentInt::one();
    let mut out = HeckeElement::zero();
    for (&idx, c) in &h.terms {
        let sw = table.left_mul(i, idx);
        if table.element(sw).length() > table.element(idx).length() {
            out.add_term(sw, c.clone());
        } else {
            out.add_term(sw, &q * c);
            out.add_term(idx, &q_minus_one * c);
        }
    }
    out
}

/// The algebra product, computed by expanding the left factor into reduced
/// words and applying the generator relation.
pub fn multiply(rs: &RootSystem, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
    let table = rs.weyl_table();
    let mut out = HeckeElement::zero();
    for (&idx, c) in &a.terms {
        let word = rs.reduced_word(table.element(idx));
        let mut acc = b.clone();
        for &i in word.iter().rev() {
            acc = generator_left_product(rs, i, &acc);
        }
        out = out.add(&acc.scaled(c));
    }
    out
}

/// The two one-dimensional characters of the algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeckeCharacter {
    /// `T_s -> -1`, hence `T_w -> (-1)^{l(w)}`.
    Sign,
    /// `T_s -> q`, hence `T_w -> q^{l(w)}`.
    Trivial,
}

/// Value of the character on a basis element `T_w`.
pub fn character_value(ch: HeckeCharacter, w: &WeylElement) -> LaurentInt {
    let l = w.length() as i64;
    match ch {
        HeckeCharacter::Sign => LaurentInt::monomial(if l % 2 == 0 { 1 } else { -1 }, 0),
        HeckeCharacter::Trivial => LaurentInt::monomial(1, l),
    }
}

/// Extends the character linearly to an arbitrary element.
pub fn apply_character(rs: &RootSystem, ch: HeckeCharacter, h: &HeckeElement) -> LaurentInt {
    let table = rs.weyl_table();
    let mut out = LaurentInt::zero();
    for (&idx, c) in &h.terms {
        out = &out + &(c * &character_value(ch, table.element(idx)));
    }
    out
}

/// Checks multiplicativity of the character on one basis pair: the value on
/// the expanded product `T_a * T_b` must equal the product of values.
pub fn verify_character_multiplicative_pair(
    rs: &RootSystem,
    ch: HeckeCharacter,
    a: &WeylElement,
    b: &WeylElement,
) -> bool {
    let product = multiply(rs, &basis_element(rs, a), &basis_element(rs, b));
    apply_character(rs, ch, &product) == &character_value(ch, a) * &character_value(ch, b)
}

/// Checks multiplicativity on all `|W|^2` basis pairs. For each fixed right
/// factor the products `T_w T_b` are built incrementally down the weak
/// order (`T_w = T_{s_i} T_{s_i w}` for a left descent `s_i`), so the sweep
/// costs one generator application per pair instead of a full product.
pub fn verify_character_multiplicative(rs: &RootSystem, ch: HeckeCharacter) -> bool {
    let table = rs.weyl_table();
    let elements = rs.weyl_elements();
    let mut order: Vec<usize> = (0..elements.len()).collect();
    order.sort_by_key(|&k| elements[k].length());
    for b in elements {
        let t_b = basis_element(rs, b);
        let ch_b = character_value(ch, b);
        let mut products: Vec<Option<HeckeElement>> = vec![None; elements.len()];
        for &k in &order {
            let w = &elements[k];
            let product = if w.is_identity() {
                t_b.clone()
            } else {
                let i = (0..rs.rank())
                    .find(|&i| elements[table.left_mul(i, k)].length() < w.length())
                    .expect("non-identity Weyl element has a left descent");
                let parent = table.left_mul(i, k);
                generator_left_product(
                    rs,
                    i,
                    products[parent].as_ref().expect("parents precede children"),
                )
            };
            if apply_character(rs, ch, &product) != &character_value(ch, w) * &ch_b {
                return false;
            }
            products[k] = Some(product);
        }
    }
    true
}

/// Coefficient at `T_w` of the eigenvector for the character, normalized to
/// 1 at the identity: `(-q)^{-l(w)}` for the sign character, `1` for the
/// trivial one.
pub fn eigenvector_coefficient(ch: HeckeCharacter, w: &WeylElement) -> LaurentInt {
    let l = w.length() as i64;
    match ch {
        HeckeCharacter::Sign => LaurentInt::monomial(if l % 2 == 0 { 1 } else { -1 }, -l),
        HeckeCharacter::Trivial => LaurentInt::one(),
    }
}

/// The full coefficient map of the eigenvector, in canonical element order.
pub fn eigenvector_coefficients(
    rs: &RootSystem,
    ch: HeckeCharacter,
) -> BTreeMap<WeylElement, LaurentInt> {
    rs.weyl_elements()
        .iter()
        .map(|w| (w.clone(), eigenvector_coefficient(ch, w)))
        .collect()
}

/// Value at the identity of the convolution of the cell `JwJ` against the
/// indicator of the cell `Jw'J`: computed inside the algebra as the
/// `T_e`-coefficient of `T_w * T_{w'^{-1}}`, which equals `q^{l(w)}` when
/// `w = w'` and zero otherwise.
pub fn evaluation_at_identity(
    rs: &RootSystem,
    w: &WeylElement,
    w_prime: &WeylElement,
) -> LaurentInt {
    let product = multiply(
        rs,
        &basis_element(rs, w),
        &basis_element(rs, &rs.inverse(w_prime)),
    );
    product.coefficient(rs, &rs.identity())
}

/// Checks the evaluation-at-identity form of the eigenvector equation for
/// one `w`: summing `coeff(w') * <T_w acting on cell w' at identity>` over
/// all `w'` must give `character(w) * coeff(e)`. By bilinearity the sum is
/// the `T_e`-coefficient of `T_w` times the inverted-support eigenvector,
/// which is how it is computed.
pub fn verify_eigen_equation_at_identity(
    rs: &RootSystem,
    ch: HeckeCharacter,
    w: &WeylElement,
) -> bool {
    let mut flipped = HeckeElement::zero();
    let table = rs.weyl_table();
    for w_prime in rs.weyl_elements() {
        flipped.add_term(
            table.index_of(&rs.inverse(w_prime)),
            eigenvector_coefficient(ch, w_prime),
        );
    }
    let product = multiply(rs, &basis_element(rs, w), &flipped);
    let lhs = product.coefficient(rs, &rs.identity());
    let rhs = &character_value(ch, w) * &eigenvector_coefficient(ch, &rs.identity());
    lhs == rhs
}

/// Order of `s_i s_j` in the Weyl group, read off the Cartan matrix:
/// `a_ij * a_ji` in {0, 1, 2, 3} gives order 2, 3, 4, 6.
pub fn braid_order(rs: &RootSystem, i: usize, j: usize) -> usize {
    if i == j {
        return 1;
    }
    let a = rs.cartan_matrix();
    match a[i][j] * a[j][i] {
        0 => 2,
        1 => 3,
        2 => 4,
        3 => 6,
        other => panic!("off-diagonal Cartan product {other} outside crystallographic range"),
    }
}

/// Checks the quadratic relation `T_s * T_s = q * T_e + (q-1) * T_s`.
pub fn verify_quadratic_relation(rs: &RootSystem, i: usize) -> bool {
    let s = rs.simple_reflection(i).unwrap();
    let ts = basis_element(rs, &s);
    let lhs = multiply(rs, &ts, &ts);
    let expected = basis_element(rs, &rs.identity())
        .scaled(&LaurentInt::q())
        .add(&ts.scaled(&(&LaurentInt::q() - &LaurentInt::one())));
    lhs == expected
}

/// Checks the braid relation for the pair `(i, j)`: alternating generator
/// products of the braid length agree on both sides.
pub fn verify_braid_relation(rs: &RootSystem, i: usize, j: usize) -> bool {
    let m = braid_order(rs, i, j);
    let side = |first: usize, second: usize| {
        let mut acc = basis_element(rs, &rs.identity());
        for k in 0..m {
            let gen = if k % 2 == 0 { first } else { second };
            // Right-multiply by building the product anew; order matters.
            let t = basis_element(rs, &rs.simple_reflection(gen).unwrap());
            acc = multiply(rs, &acc, &t);
        }
        acc
    };
    side(i, j) == side(j, i)
}

/// `q^{l(w)}`: the number of Iwahori cosets in the double cell of `w`, as a
/// monomial in `q`.
pub fn coset_count(w: &WeylElement) -> LaurentInt {
    LaurentInt::monomial(1, w.length() as i64)
}

/// `sum_w q^{l(w)}`, the length generating polynomial of the Weyl group.
pub fn poincare_polynomial(rs: &RootSystem) -> LaurentInt {
    let mut out = LaurentInt::zero();
    for w in rs.weyl_elements() {
        out = &out + &coset_count(w);
    }
    out
}
