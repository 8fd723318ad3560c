//! Polynomial identities behind the closure, the trace condition and the
//! local structure at `s₁`, checked symbolically.
//!
//! Each check builds both sides as [`Polynomial`]s and compares them
//! exactly; nothing is sampled. The negative controls perturb one input and
//! must come out `false`.

use crate::algebra::{poly_equal, Matrix, Polynomial, Rational};

/// A named identity together with its checker.
#[derive(Clone, Copy, Debug)]
pub struct Identity {
    pub name: &'static str,
    pub statement: &'static str,
    pub check: fn() -> bool,
}

fn v(name: &str) -> Polynomial {
    Polynomial::var(name)
}

fn c(n: i64) -> Polynomial {
    Polynomial::constant(n)
}

fn mat(entries: [Polynomial; 4]) -> Matrix<Polynomial> {
    Matrix::new(2, 2, entries.to_vec()).expect("2x2")
}

/// `N = [[0, 1], [0, 0]]`.
fn std_nilpotent() -> Matrix<Polynomial> {
    mat([c(0), c(1), c(0), c(0)])
}

/// The ℙ¹×ℙ¹ image `(a', b', c', d', e')` scaled by `α⁺ − α⁻`, with `α⁻ = 1/α`
/// cleared: multiplied through by `α`.
fn p1p1_image() -> [Polynomial; 5] {
    let (s, t, u, w, al) = (v("S"), v("T"), v("U"), v("V"), v("al"));
    let al2 = al.pow(2);
    let su = &s * &u;
    let tv = &t * &w;
    [
        &su + &(&al2 * &tv),
        &(&al2 - &c(1)) * &(&s * &w),
        &(&al2 - &c(1)) * &(&t * &u),
        &(&al2 * &su) + &tv,
        &al * &(&su + &tv),
    ]
}

/// `α(a' + d') = (α² + 1)e'`: the image satisfies the trace condition.
pub fn verify_p1p1_trace() -> bool {
    let [a, _, _, d, e] = p1p1_image();
    let al = v("al");
    poly_equal(&(&al * &(&a + &d)), &(&(&al.pow(2) + &c(1)) * &e))
}

/// `a'd' − b'c' = e'²`: the image lies on the quadric.
pub fn verify_p1p1_closure() -> bool {
    let [a, b, cc, d, e] = p1p1_image();
    poly_equal(&(&(&a * &d) - &(&b * &cc)), &e.pow(2))
}

/// `A² − k·e·A + e²·I = (a + d − k·e)·A − (ad − bc − e²)·I` for a generic
/// block, so on the closure every `A` satisfies `A² = k·e·A − e²·I`. Also
/// the cone `(st, s², −t², −st)` squares to zero.
pub fn verify_cayley_hamilton() -> bool {
    let (a, b, cc, d, e, k) = (v("a"), v("b"), v("c"), v("d"), v("e"), v("k"));
    let m = mat([a.clone(), b.clone(), cc.clone(), d.clone()]);
    let id = Matrix::<Polynomial>::identity(2);
    let ke = &k * &e;
    let lhs = &(&(&m * &m) - &m.scale(&ke)) + &id.scale(&e.pow(2));
    let det_gap = &(&(&a * &d) - &(&b * &cc)) - &e.pow(2);
    let rhs = &m.scale(&(&(&a + &d) - &ke)) - &id.scale(&det_gap);
    let (s, t) = (v("s"), v("t"));
    let cone = mat([&s * &t, s.pow(2), -t.pow(2), -(&s * &t)]);
    matrices_equal(&lhs, &rhs) && (&cone * &cone).entries().iter().all(Polynomial::is_zero)
}

fn matrices_equal(x: &Matrix<Polynomial>, y: &Matrix<Polynomial>) -> bool {
    x.entries().iter().zip(y.entries()).all(|(p, q)| poly_equal(p, q))
}

/// The second factor in the normal form used for n = 4 and n = 5:
/// `A₂ = [[0, −e₂²], [c₂², k₂c₂e₂]]`, determinant `(c₂e₂)²`, trace `k₂c₂e₂`.
fn second_factor() -> Matrix<Polynomial> {
    let (c2, e2, k2) = (v("c2"), v("e2"), v("k2"));
    mat([c(0), -e2.pow(2), c2.pow(2), &(&k2 * &c2) * &e2])
}

fn generic_block(i: u32) -> Matrix<Polynomial> {
    mat([
        v(&format!("a{i}")),
        v(&format!("b{i}")),
        v(&format!("c{i}")),
        v(&format!("d{i}")),
    ])
}

/// `Tr(N·A₂·A₃) = c₂(c₂a₃ + k₂e₂c₃)`.
pub fn verify_n4_trace_reduction() -> bool {
    let a2 = second_factor();
    let (c2, e2, k2) = (v("c2"), v("e2"), v("k2"));
    let shape = poly_equal(&a2.det().expect("square"), &(&c2 * &e2).pow(2))
        && poly_equal(&a2.trace().expect("square"), &(&(&k2 * &c2) * &e2));
    let prod = &(&std_nilpotent() * &a2) * &generic_block(3);
    let rhs = &c2 * &n4_bracket(&v("a3"), &v("c3"));
    shape && poly_equal(&prod.trace().expect("square"), &rhs)
}

/// `c₂a₃ + k₂e₂c₃`.
fn n4_bracket(a3: &Polynomial, c3: &Polynomial) -> Polynomial {
    &(&v("c2") * a3) + &(&(&v("k2") * &v("e2")) * c3)
}

/// Along the ℙ¹×ℙ¹ section `a₃ = α⁻SU + α⁺TV`, `c₃ = (α⁺ − α⁻)TU` the
/// bracket becomes `B = c₂(α⁻SU + α⁺TV) + k₂(α⁺ − α⁻)e₂TU`, and
/// `α⁻·s₁ + α⁺·s₂ + k₂(α⁺ − α⁻)·s₃ = b₁c₂·B` with `s₁ = b₁c₂²SU`,
/// `s₂ = b₁c₂²TV`, `s₃ = b₁c₂e₂TU`. `α⁺` and `α⁻` are independent symbols.
pub fn verify_n4_section_relation() -> bool {
    n4_section_relation_with(&v("m"))
}

/// [`verify_n4_section_relation`] with `α⁻` on the left replaced by `m_left`.
pub fn n4_section_relation_with(m_left: &Polynomial) -> bool {
    let (p, m) = (v("p"), v("m"));
    let (s, t, u, w) = (v("S"), v("T"), v("U"), v("V"));
    let (b1, c2, e2, k2) = (v("b1"), v("c2"), v("e2"), v("k2"));
    let su = &s * &u;
    let tv = &t * &w;
    let tu = &t * &u;
    let a3 = &(&m * &su) + &(&p * &tv);
    let c3 = &(&p - &m) * &tu;
    let b = &(&c2 * &a3) + &(&(&(&k2 * &(&p - &m)) * &e2) * &tu);
    let substituted = poly_equal(&n4_bracket(&a3, &c3), &b);
    let b1c2sq = &b1 * &c2.pow(2);
    let s1 = &b1c2sq * &su;
    let s2 = &b1c2sq * &tv;
    let s3 = &(&(&b1 * &c2) * &e2) * &tu;
    let lhs = &(&(m_left * &s1) + &(&p * &s2)) + &(&(&k2 * &(&p - m_left)) * &s3);
    substituted && poly_equal(&lhs, &(&(&b1 * &c2) * &b))
}

/// Numeric instance of the section relation at `α⁺ = 2`, `α⁻ = 1/2`.
pub fn n4_section_spot_check() -> bool {
    let mut map = std::collections::BTreeMap::new();
    map.insert("p".to_string(), Polynomial::constant(2));
    map.insert("m".to_string(), Polynomial::constant(Rational::frac(1, 2)));
    let (s, t, u, w) = (v("S"), v("T"), v("U"), v("V"));
    let (b1, c2, e2, k2) = (v("b1"), v("c2"), v("e2"), v("k2"));
    let half = Polynomial::constant(Rational::frac(1, 2));
    let three_halves = Polynomial::constant(Rational::frac(3, 2));
    let b = &(&c2 * &(&(&half * &(&s * &u)) + &(&c(2) * &(&t * &w))))
        + &(&(&(&k2 * &three_halves) * &e2) * &(&t * &u));
    let b1c2sq = &b1 * &c2.pow(2);
    let lhs = &(&(&half * &(&b1c2sq * &(&s * &u))) + &(&c(2) * &(&b1c2sq * &(&t * &w))))
        + &(&(&k2 * &three_halves) * &(&(&(&b1 * &c2) * &e2) * &(&t * &u)));
    verify_n4_section_relation() && poly_equal(&lhs, &(&(&b1 * &c2) * &b))
}

/// `Tr(N·A₂·A₃·A₄) = c₂(c₂a₃a₄ + k₂e₂c₃a₄ + c₂b₃c₄ + k₂e₂d₃c₄)`.
pub fn verify_n5_trace_reduction() -> bool {
    let prod = &(&(&std_nilpotent() * &second_factor()) * &generic_block(3)) * &generic_block(4);
    let rhs = &v("c2") * &n5_bracket(&generic_block(3));
    poly_equal(&prod.trace().expect("square"), &rhs)
}

fn n5_bracket(a3: &Matrix<Polynomial>) -> Polynomial {
    let (c2, e2, k2) = (v("c2"), v("e2"), v("k2"));
    let (a4, c4) = (v("a4"), v("c4"));
    let ke = &k2 * &e2;
    let e = a3.entries();
    let (x, y, z, w) = (&e[0], &e[1], &e[2], &e[3]);
    &(&(&(&(&c2 * x) * &a4) + &(&(&ke * z) * &a4)) + &(&(&c2 * y) * &c4)) + &(&(&ke * w) * &c4)
}

/// With `A₃` on the nilpotent cone, `A₃ = (st, s², −t², −st)`, the bracket
/// factors as `(t·a₄ + s·c₄)(c₂s − k₂e₂t)` (up to sign).
pub fn verify_n5_factorization() -> bool {
    n5_factorization_with(&v("s").pow(2))
}

/// [`verify_n5_factorization`] with `b₃` replaced by `b3`.
pub fn n5_factorization_with(b3: &Polynomial) -> bool {
    let (s, t) = (v("s"), v("t"));
    let a3 = mat([&s * &t, b3.clone(), -t.pow(2), -(&s * &t)]);
    let lhs = n5_bracket(&a3);
    let (c2, e2, k2, a4, c4) = (v("c2"), v("e2"), v("k2"), v("a4"), v("c4"));
    let rhs = &(&(&t * &a4) + &(&s * &c4)) * &(&(&c2 * &s) - &(&(&k2 * &e2) * &t));
    poly_equal(&lhs, &rhs) || poly_equal(&lhs, &-rhs)
}

pub fn identities() -> Vec<Identity> {
    vec![
        Identity {
            name: "p1p1_trace",
            statement: "alpha*(a'+d') = (alpha^2+1)*e' on the P1xP1 image",
            check: verify_p1p1_trace,
        },
        Identity {
            name: "p1p1_closure",
            statement: "a'd' - b'c' = e'^2 on the P1xP1 image",
            check: verify_p1p1_closure,
        },
        Identity {
            name: "cayley_hamilton",
            statement: "A^2 - k e A + e^2 I = (a+d-ke)A - (ad-bc-e^2)I; nilpotent cone squares to 0",
            check: verify_cayley_hamilton,
        },
        Identity {
            name: "n4_trace_reduction",
            statement: "Tr(N A2 A3) = c2 (c2 a3 + k2 e2 c3)",
            check: verify_n4_trace_reduction,
        },
        Identity {
            name: "n4_section_relation",
            statement: "m s1 + p s2 + k2 (p-m) s3 = b1 c2 B along the P1xP1 section",
            check: n4_section_spot_check,
        },
        Identity {
            name: "n5_trace_reduction",
            statement: "Tr(N A2 A3 A4) = c2 (c2 a3 a4 + k2 e2 c3 a4 + c2 b3 c4 + k2 e2 d3 c4)",
            check: verify_n5_trace_reduction,
        },
        Identity {
            name: "n5_factorization",
            statement: "on the nilpotent cone the bracket is (t a4 + s c4)(c2 s - k2 e2 t)",
            check: verify_n5_factorization,
        },
    ]
}

/// Perturbed versions of two identities; each check must return `false`.
pub fn negative_controls() -> Vec<Identity> {
    fn n5_perturbed() -> bool {
        n5_factorization_with(&(&v("s").pow(2) + &c(1)))
    }
    fn n4_sign_flipped() -> bool {
        n4_section_relation_with(&-v("m"))
    }
    vec![
        Identity {
            name: "n5_factorization_perturbed",
            statement: "b3 = s^2 + 1 breaks the factorization",
            check: n5_perturbed,
        },
        Identity {
            name: "n4_section_relation_sign_flipped",
            statement: "replacing alpha^- by -alpha^- breaks the relation",
            check: n4_sign_flipped,
        },
    ]
}
