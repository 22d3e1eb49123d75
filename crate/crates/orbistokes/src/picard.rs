//! Picard group combinatorics of the weighted projective line of type `A`.
//!
//! The Picard group is the abelian group on generators `x1, x2, x3` modulo
//! the relations `a_i x_i = a_j x_j`; the common value is written `c`. Every
//! element has a unique normal form `n*c + m1*x1 + m2*x2 + m3*x3` with
//! `0 <= m_i < a_i`. Graded dimensions of the homogeneous coordinate ring,
//! Euler pairings and the Euler matrix of the canonical line-bundle
//! collection are all computed exactly from this normal form.

use crate::intmat::IntMat;
use crate::orbifold::OrbifoldType;
use num::rational::Rational64;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Normal form of a Picard group element: `n*c + sum m_i * x_i`,
/// `0 <= m_i < a_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PicElement {
    n: i64,
    m: [i64; 3],
}

impl PicElement {
    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn m(&self) -> [i64; 3] {
        self.m
    }
}

impl fmt::Display for PicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}c+({},{},{})", self.n, self.m[0], self.m[1], self.m[2])
    }
}

/// Normalize `shift*c + sum raw_i * x_i` to its unique normal form.
///
/// Each raw coefficient is reduced mod `a_i` by Euclidean division; the
/// quotients migrate into the `c` coefficient via `a_i x_i = c`.
pub fn pic_normalize(a: &OrbifoldType, raw: [i64; 3], shift: i64) -> PicElement {
    let w = a.weights();
    let mut n = shift;
    let mut m = [0i64; 3];
    for i in 0..3 {
        let q = raw[i].div_euclid(w[i]);
        m[i] = raw[i].rem_euclid(w[i]);
        n += q;
    }
    PicElement { n, m }
}

/// Zero element.
pub fn pic_zero(a: &OrbifoldType) -> PicElement {
    pic_normalize(a, [0, 0, 0], 0)
}

/// Sum of two normal forms.
pub fn pic_add(a: &OrbifoldType, x: &PicElement, y: &PicElement) -> PicElement {
    pic_normalize(
        a,
        [x.m[0] + y.m[0], x.m[1] + y.m[1], x.m[2] + y.m[2]],
        x.n + y.n,
    )
}

/// Negation of a normal form.
pub fn pic_neg(a: &OrbifoldType, x: &PicElement) -> PicElement {
    pic_normalize(a, [-x.m[0], -x.m[1], -x.m[2]], -x.n)
}

pub fn pic_sub(a: &OrbifoldType, x: &PicElement, y: &PicElement) -> PicElement {
    pic_add(a, x, &pic_neg(a, y))
}

/// The generator `x_i` (arm index 0-based).
pub fn pic_generator(a: &OrbifoldType, arm: usize) -> PicElement {
    let mut raw = [0i64; 3];
    raw[arm] = 1;
    pic_normalize(a, raw, 0)
}

/// `j * x_i`.
pub fn pic_arm_multiple(a: &OrbifoldType, arm: usize, j: i64) -> PicElement {
    let mut raw = [0i64; 3];
    raw[arm] = j;
    pic_normalize(a, raw, 0)
}

/// The degree-one element `c = a_i x_i`.
pub fn pic_c(a: &OrbifoldType) -> PicElement {
    pic_normalize(a, [0, 0, 0], 1)
}

/// The dualizing element `omega = c - x1 - x2 - x3` in normal form.
/// Its degree is exactly `-chi_A`.
pub fn canonical_element(a: &OrbifoldType) -> PicElement {
    pic_normalize(a, [-1, -1, -1], 1)
}

/// Degree `delta(l) = n + sum m_i / a_i`, independent of representative.
pub fn degree(a: &OrbifoldType, l: &PicElement) -> Rational64 {
    let w = a.weights();
    let mut d = Rational64::from_integer(l.n);
    for i in 0..3 {
        d += Rational64::new(l.m[i], w[i]);
    }
    d
}

/// Dimension of the graded piece of the coordinate ring at `l`.
///
/// In normal form this is `n + 1` for `n >= 0` and `0` otherwise: there are
/// `C(n+2,2)` monomials of degree `l` and the single defining relation
/// removes `C(n+1,2)` of them.
pub fn graded_dim(a: &OrbifoldType, l: &PicElement) -> i64 {
    let _ = a;
    if l.n >= 0 {
        l.n + 1
    } else {
        0
    }
}

/// Euler pairing `chi(O(x), O(y)) = hom - ext`.
///
/// `hom = dim (R_A)_{y-x}`; the ext term is computed by Serre duality with
/// the dualizing element, `ext = dim (R_A)_{x-y+omega}`.
pub fn euler_pairing(a: &OrbifoldType, x: &PicElement, y: &PicElement) -> i64 {
    let hom = graded_dim(a, &pic_sub(a, y, x));
    let ext = graded_dim(a, &pic_add(a, &pic_sub(a, x, y), &canonical_element(a)));
    hom - ext
}

/// Ordered list of line bundles in the canonical collection:
/// `O, O(x1), ..., O((a1-1)x1), O(x2), ..., O((a3-1)x3), O(c)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineBundleCollection {
    pub elements: Vec<PicElement>,
}

impl LineBundleCollection {
    pub fn canonical(a: &OrbifoldType) -> Self {
        let w = a.weights();
        let mut elements = vec![pic_zero(a)];
        for arm in 0..3 {
            for j in 1..w[arm] {
                elements.push(pic_arm_multiple(a, arm, j));
            }
        }
        elements.push(pic_c(a));
        debug_assert_eq!(elements.len(), a.mu());
        LineBundleCollection { elements }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Human-readable labels, e.g. `O`, `O(2x1)`, `O(c)`.
    pub fn labels(&self, a: &OrbifoldType) -> Vec<String> {
        let w = a.weights();
        self.elements
            .iter()
            .map(|e| {
                if *e == pic_zero(a) {
                    "O".to_string()
                } else if *e == pic_c(a) {
                    "O(c)".to_string()
                } else {
                    // arm multiples only, by construction
                    for arm in 0..3 {
                        for j in 1..w[arm] {
                            if *e == pic_arm_multiple(a, arm, j) {
                                return if j == 1 {
                                    format!("O(x{})", arm + 1)
                                } else {
                                    format!("O({}x{})", j, arm + 1)
                                };
                            }
                        }
                    }
                    format!("O({e})")
                }
            })
            .collect()
    }
}

/// Euler matrix of the canonical collection: entry `(i,j)` is
/// `chi(E_i, E_j)`. Upper triangular with unit diagonal and determinant one.
pub fn canonical_collection_euler_matrix(a: &OrbifoldType) -> (LineBundleCollection, IntMat) {
    let coll = LineBundleCollection::canonical(a);
    let mu = coll.len();
    let mut m = IntMat::zeros(mu);
    for i in 0..mu {
        for j in 0..mu {
            m.set(i, j, euler_pairing(a, &coll.elements[i], &coll.elements[j]));
        }
    }
    (coll, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::bigint::BigInt;
    use proptest::prelude::*;

    fn orb(a1: i64, a2: i64, a3: i64) -> OrbifoldType {
        OrbifoldType::new(a1, a2, a3).unwrap()
    }

    /// Brute-force membership test for the relation subgroup: a raw triple
    /// `d` lies in it iff `d = lam*(a1,-a2,0) + mu*(0,a2,-a3)`.
    fn in_relation_subgroup(a: &OrbifoldType, d: [i64; 3]) -> bool {
        let w = a.weights();
        if d[0] % w[0] != 0 || d[2] % w[2] != 0 {
            return false;
        }
        let lam = d[0] / w[0];
        let mu = -d[2] / w[2];
        d[1] == (mu - lam) * w[1]
    }

    /// Independent normalization oracle: search the unique `(n, m)` with
    /// `0 <= m_i < a_i` such that `raw + shift*c - (n*c + m)` is in the
    /// relation subgroup, where `c` is represented by `(a1, 0, 0)`.
    fn normalize_oracle(a: &OrbifoldType, raw: [i64; 3], shift: i64) -> (i64, [i64; 3]) {
        let w = a.weights();
        let mut found = None;
        for n in -60..=60 {
            for m1 in 0..w[0] {
                for m2 in 0..w[1] {
                    for m3 in 0..w[2] {
                        let d = [
                            raw[0] + (shift - n) * w[0] - m1,
                            raw[1] - m2,
                            raw[2] - m3,
                        ];
                        if in_relation_subgroup(a, d) {
                            assert!(found.is_none(), "normal form not unique");
                            found = Some((n, [m1, m2, m3]));
                        }
                    }
                }
            }
        }
        found.expect("no normal form found in search window")
    }

    /// Count monomials `X1^b1 X2^b2 X3^b3` of Picard degree `l`.
    pub(crate) fn monomial_count(a: &OrbifoldType, l: &PicElement) -> i64 {
        if l.n < 0 {
            return 0;
        }
        let w = a.weights();
        let mut count = 0;
        for b1 in 0..=(l.m[0] + w[0] * l.n) {
            for b2 in 0..=(l.m[1] + w[1] * l.n) {
                for b3 in 0..=(l.m[2] + w[2] * l.n) {
                    if pic_normalize(a, [b1, b2, b3], 0) == *l {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    /// Enumeration oracle for graded dimensions: monomials of degree `l`
    /// minus monomials of degree `l - c` (the relation ideal is principal
    /// and multiplication by the relation is injective).
    pub(crate) fn graded_dim_oracle(a: &OrbifoldType, l: &PicElement) -> i64 {
        let below = pic_sub(a, l, &pic_c(a));
        monomial_count(a, l) - monomial_count(a, &below)
    }

    #[test]
    fn normalize_examples() {
        let a = orb(2, 2, 2);
        assert_eq!(pic_normalize(&a, [2, 0, 0], 0), PicElement { n: 1, m: [0, 0, 0] });
        assert_eq!(pic_normalize(&a, [1, 1, 0], 0), PicElement { n: 0, m: [1, 1, 0] });
        // -x1: oracle over representatives
        let (n, m) = normalize_oracle(&a, [-1, 0, 0], 0);
        assert_eq!((n, m), (-1, [1, 0, 0]));
        assert_eq!(pic_normalize(&a, [-1, 0, 0], 0), PicElement { n, m });
    }

    #[test]
    fn normalize_matches_oracle() {
        for a in [orb(2, 2, 2), orb(1, 2, 3), orb(2, 3, 5), orb(1, 1, 1)] {
            for raw1 in -4..=4 {
                for raw2 in -3..=3 {
                    for raw3 in -3..=3 {
                        let got = pic_normalize(&a, [raw1, raw2, raw3], 0);
                        let (n, m) = normalize_oracle(&a, [raw1, raw2, raw3], 0);
                        assert_eq!((got.n, got.m), (n, m), "A={a} raw=({raw1},{raw2},{raw3})");
                    }
                }
            }
        }
    }

    #[test]
    fn canonical_element_examples() {
        let a = orb(2, 2, 2);
        assert_eq!(canonical_element(&a), PicElement { n: -2, m: [1, 1, 1] });
        let t = orb(1, 1, 1);
        assert_eq!(canonical_element(&t), PicElement { n: -2, m: [0, 0, 0] });
        for a in [orb(1, 1, 1), orb(2, 3, 5), orb(1, 2, 4), orb(2, 2, 3)] {
            assert_eq!(degree(&a, &canonical_element(&a)), -a.chi());
        }
    }

    #[test]
    fn graded_dim_examples() {
        let t = orb(1, 1, 1);
        let l = pic_normalize(&t, [0, 0, 0], 3);
        assert_eq!(graded_dim(&t, &l), 4);
        assert_eq!(graded_dim_oracle(&t, &l), 4);
        for a in [orb(1, 1, 1), orb(2, 2, 2), orb(2, 3, 5)] {
            assert_eq!(graded_dim(&a, &pic_zero(&a)), 1);
        }
        let a = orb(2, 2, 2);
        assert_eq!(graded_dim(&a, &pic_generator(&a, 0)), 1);
        assert_eq!(graded_dim_oracle(&a, &pic_generator(&a, 0)), 1);
    }

    #[test]
    fn euler_pairing_examples() {
        let t = orb(1, 1, 1);
        assert_eq!(euler_pairing(&t, &pic_zero(&t), &pic_c(&t)), 2);
        let a = orb(2, 2, 2);
        for l in [pic_zero(&a), pic_generator(&a, 1), pic_c(&a)] {
            assert_eq!(euler_pairing(&a, &l, &l), 1);
        }
        assert_eq!(euler_pairing(&a, &pic_generator(&a, 0), &pic_c(&a)), 1);
    }

    #[test]
    fn euler_matrix_small_cases() {
        let t = orb(1, 1, 1);
        let (coll, m) = canonical_collection_euler_matrix(&t);
        assert_eq!(coll.len(), 2);
        assert_eq!(m.rows(), &[vec![1, 2], vec![0, 1]]);

        let a = orb(2, 2, 2);
        let (coll, m) = canonical_collection_euler_matrix(&a);
        assert_eq!(coll.len(), 5);
        let expect = vec![
            vec![1, 1, 1, 1, 2],
            vec![0, 1, 0, 0, 1],
            vec![0, 0, 1, 0, 1],
            vec![0, 0, 0, 1, 1],
            vec![0, 0, 0, 0, 1],
        ];
        assert_eq!(m.rows(), &expect[..]);
    }

    #[test]
    fn euler_matrix_structure() {
        for a in [orb(1, 2, 3), orb(2, 3, 4), orb(2, 3, 5), orb(1, 3, 3)] {
            let (_, m) = canonical_collection_euler_matrix(&a);
            assert!(m.is_upper_triangular_unit_diagonal());
            assert_eq!(m.det(), BigInt::from(1));
            let sym = m.add(&m.transpose());
            for i in 0..m.n() {
                assert_eq!(sym.get(i, i), 2);
            }
        }
    }

    /// Star pattern of the canonical Euler matrix, checked against the
    /// enumeration oracle rather than the closed form.
    #[test]
    fn star_pattern_via_oracle() {
        let a = orb(2, 3, 4);
        let pairing_oracle = |x: &PicElement, y: &PicElement| -> i64 {
            let hom = graded_dim_oracle(&a, &pic_sub(&a, y, x));
            let ext =
                graded_dim_oracle(&a, &pic_add(&a, &pic_sub(&a, x, y), &canonical_element(&a)));
            hom - ext
        };
        let o = pic_zero(&a);
        let c = pic_c(&a);
        let w = a.weights();
        assert_eq!(pairing_oracle(&o, &c), 2);
        for arm in 0..3 {
            for j in 1..w[arm] {
                let e = pic_arm_multiple(&a, arm, j);
                assert_eq!(pairing_oracle(&o, &e), 1);
                assert_eq!(pairing_oracle(&e, &c), 1);
                for jp in j..w[arm] {
                    let ep = pic_arm_multiple(&a, arm, jp);
                    assert_eq!(pairing_oracle(&e, &ep), 1);
                }
                for arm2 in 0..3 {
                    if arm2 == arm {
                        continue;
                    }
                    for j2 in 1..w[arm2] {
                        let f = pic_arm_multiple(&a, arm2, j2);
                        assert_eq!(pairing_oracle(&e, &f), 0, "cross-arm must vanish");
                    }
                }
            }
        }
    }

    proptest! {
        /// Normalization is a group homomorphism.
        #[test]
        fn normalize_homomorphism(
            raw1 in [-20i64..20, -20i64..20, -20i64..20],
            raw2 in [-20i64..20, -20i64..20, -20i64..20],
            which in 0usize..4,
        ) {
            let cases = [orb(1, 1, 1), orb(2, 2, 2), orb(1, 2, 3), orb(2, 3, 5)];
            let a = cases[which];
            let u = pic_normalize(&a, raw1, 0);
            let v = pic_normalize(&a, raw2, 0);
            let direct = pic_normalize(
                &a,
                [raw1[0] + raw2[0], raw1[1] + raw2[1], raw1[2] + raw2[2]],
                0,
            );
            prop_assert_eq!(pic_add(&a, &u, &v), direct);
            let neg = pic_normalize(&a, [-raw1[0], -raw1[1], -raw1[2]], 0);
            prop_assert_eq!(pic_neg(&a, &u), neg);
        }
    }
}
