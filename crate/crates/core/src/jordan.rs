//! The rank-3 Jordan algebra of symmetric 3x3 matrices with the SL(3)
//! action `g.x = g x g^t`, its determinant, adjugate, cross product and
//! trilinear form, plus one-parameter subgroups and seeded SL(3) sampling.
//!
//! Normalizations: the trilinear form satisfies `f(x,x,x) = 6 det x` and
//! `f(x,y,z) = <x ⨯ y, z>` with `x ⨯ x = 2 n(x)` and `x n(x) = det(x) I`.

use crate::error::CoreError;
use crate::scalar::{Field, Ring};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Symmetric 3x3 matrix stored as its six independent entries.
#[derive(Clone, PartialEq, Debug)]
pub struct SymMat3<S> {
    pub d1: S,
    pub d2: S,
    pub d3: S,
    pub o12: S,
    pub o13: S,
    pub o23: S,
}

fn m<S: Ring>(a: &S, b: &S) -> S {
    a.clone() * b.clone()
}

impl<S: Ring> SymMat3<S> {
    pub fn new(d1: S, d2: S, d3: S, o12: S, o13: S, o23: S) -> Self {
        SymMat3 { d1, d2, d3, o12, o13, o23 }
    }

    pub fn zero() -> Self {
        let z = S::zero;
        SymMat3::new(z(), z(), z(), z(), z(), z())
    }

    /// The identity element e of the Jordan algebra.
    pub fn identity() -> Self {
        let z = S::zero;
        SymMat3::new(S::one(), S::one(), S::one(), z(), z(), z())
    }

    /// Diagonal idempotent e_k (k in 1..=3) of the standard Jordan frame.
    pub fn frame(k: usize) -> Self {
        let mut x = Self::zero();
        match k {
            1 => x.d1 = S::one(),
            2 => x.d2 = S::one(),
            3 => x.d3 = S::one(),
            _ => panic!("frame index must be 1..=3"),
        }
        x
    }

    /// Off-diagonal unit b_ij: ones at (i,j) and (j,i).
    pub fn offdiag(i: usize, j: usize) -> Self {
        let mut x = Self::zero();
        *x.entry_mut(i, j) = S::one();
        x
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> S) -> Self {
        SymMat3::new(f(1, 1), f(2, 2), f(3, 3), f(1, 2), f(1, 3), f(2, 3))
    }

    /// Entry (i,j), 1-based; the symmetric partner is read from the single
    /// stored value.
    pub fn entry(&self, i: usize, j: usize) -> &S {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        match (i, j) {
            (1, 1) => &self.d1,
            (2, 2) => &self.d2,
            (3, 3) => &self.d3,
            (1, 2) => &self.o12,
            (1, 3) => &self.o13,
            (2, 3) => &self.o23,
            _ => panic!("index out of range"),
        }
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut S {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        match (i, j) {
            (1, 1) => &mut self.d1,
            (2, 2) => &mut self.d2,
            (3, 3) => &mut self.d3,
            (1, 2) => &mut self.o12,
            (1, 3) => &mut self.o13,
            (2, 3) => &mut self.o23,
            _ => panic!("index out of range"),
        }
    }

    pub fn entries(&self) -> [&S; 6] {
        [&self.d1, &self.d2, &self.d3, &self.o12, &self.o13, &self.o23]
    }

    pub fn is_zero(&self) -> bool {
        self.entries().iter().all(|e| e.is_zero())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::from_fn(|i, j| self.entry(i, j).clone() + rhs.entry(i, j).clone())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::from_fn(|i, j| self.entry(i, j).clone() - rhs.entry(i, j).clone())
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_fn(|i, j| m(c, self.entry(i, j)))
    }

    pub fn map<T: Ring>(&self, mut f: impl FnMut(&S) -> T) -> SymMat3<T> {
        SymMat3::new(
            f(&self.d1),
            f(&self.d2),
            f(&self.d3),
            f(&self.o12),
            f(&self.o13),
            f(&self.o23),
        )
    }
}

/// Usual 3x3 determinant.
pub fn det3<S: Ring>(x: &SymMat3<S>) -> S {
    let minor1 = m(&x.d2, &x.d3) - m(&x.o23, &x.o23);
    let minor2 = m(&x.o12, &x.d3) - m(&x.o23, &x.o13);
    let minor3 = m(&x.o12, &x.o23) - m(&x.d2, &x.o13);
    m(&x.d1, &minor1) - m(&x.o12, &minor2) + m(&x.o13, &minor3)
}

/// Adjugate n(x): transpose of the cofactor matrix, computed by the six
/// explicit cofactor polynomials. Satisfies `x n(x) = det(x) I`.
pub fn adjugate<S: Ring>(x: &SymMat3<S>) -> SymMat3<S> {
    SymMat3::new(
        m(&x.d2, &x.d3) - m(&x.o23, &x.o23),
        m(&x.d1, &x.d3) - m(&x.o13, &x.o13),
        m(&x.d1, &x.d2) - m(&x.o12, &x.o12),
        m(&x.o13, &x.o23) - m(&x.o12, &x.d3),
        m(&x.o12, &x.o23) - m(&x.d2, &x.o13),
        m(&x.o12, &x.o13) - m(&x.d1, &x.o23),
    )
}

/// Symmetric bilinear cross product, the polarization of the adjugate:
/// `x ⨯ y = n(x+y) - n(x) - n(y)`, expanded entrywise so no intermediate
/// sums are formed.
pub fn cross<S: Ring>(x: &SymMat3<S>, y: &SymMat3<S>) -> SymMat3<S> {
    let two = || S::from_i64(2);
    SymMat3::new(
        m(&x.d2, &y.d3) + m(&x.d3, &y.d2) - two() * m(&x.o23, &y.o23),
        m(&x.d1, &y.d3) + m(&x.d3, &y.d1) - two() * m(&x.o13, &y.o13),
        m(&x.d1, &y.d2) + m(&x.d2, &y.d1) - two() * m(&x.o12, &y.o12),
        m(&x.o13, &y.o23) + m(&x.o23, &y.o13) - m(&x.o12, &y.d3) - m(&x.d3, &y.o12),
        m(&x.o12, &y.o23) + m(&x.o23, &y.o12) - m(&x.d2, &y.o13) - m(&x.o13, &y.d2),
        m(&x.o12, &y.o13) + m(&x.o13, &y.o12) - m(&x.d1, &y.o23) - m(&x.o23, &y.d1),
    )
}

/// Trace form `<x, y> = tr(xy)`.
pub fn trace_form<S: Ring>(x: &SymMat3<S>, y: &SymMat3<S>) -> S {
    let two = S::from_i64(2);
    m(&x.d1, &y.d1)
        + m(&x.d2, &y.d2)
        + m(&x.d3, &y.d3)
        + two * (m(&x.o12, &y.o12) + m(&x.o13, &y.o13) + m(&x.o23, &y.o23))
}

/// Fully symmetric trilinear form `f(x,y,z) = <x ⨯ y, z>`, normalized so
/// that `f(x,x,x) = 6 det x`.
pub fn trilinear_f<S: Ring>(x: &SymMat3<S>, y: &SymMat3<S>, z: &SymMat3<S>) -> S {
    trace_form(&cross(x, y), z)
}

/// Jordan product `x • y = (xy + yx) / 2`.
pub fn jordan_product<S: Field>(x: &SymMat3<S>, y: &SymMat3<S>) -> SymMat3<S> {
    // (x•y)_{ij} = (sum_k x_ik y_kj + y_ik x_kj) / 2, symmetric since x, y are.
    SymMat3::from_fn(|i, j| {
        let mut acc = S::zero();
        for k in 1..=3 {
            acc = acc + m(x.entry(i, k), y.entry(k, j)) + m(y.entry(i, k), x.entry(k, j));
        }
        acc.half()
    })
}

/// Element of SL(3): nine entries, determinant exactly 1.
#[derive(Clone, PartialEq, Debug)]
pub struct GroupElement<S> {
    // row-major
    pub a: [S; 9],
}

impl<S: Ring> GroupElement<S> {
    pub fn new(a: [S; 9]) -> Result<Self, CoreError> {
        let g = GroupElement { a };
        if g.det() != S::one() {
            return Err(CoreError::NotUnimodular);
        }
        Ok(g)
    }

    /// No determinant check; the nullcone lab works with approximate
    /// complex entries and audits `|det g - 1|` itself.
    pub fn new_unchecked(a: [S; 9]) -> Self {
        GroupElement { a }
    }

    pub fn identity() -> Self {
        let z = S::zero;
        GroupElement {
            a: [S::one(), z(), z(), z(), S::one(), z(), z(), z(), S::one()],
        }
    }

    /// I + c E_{ij}, i != j.
    pub fn elementary(i: usize, j: usize, c: S) -> Self {
        assert!(i != j && (1..=3).contains(&i) && (1..=3).contains(&j));
        let mut g = Self::identity();
        g.a[(i - 1) * 3 + (j - 1)] = c;
        g
    }

    pub fn at(&self, i: usize, j: usize) -> &S {
        &self.a[(i - 1) * 3 + (j - 1)]
    }

    pub fn det(&self) -> S {
        let a = &self.a;
        m(&a[0], &(m(&a[4], &a[8]) - m(&a[5], &a[7])))
            - m(&a[1], &(m(&a[3], &a[8]) - m(&a[5], &a[6])))
            + m(&a[2], &(m(&a[3], &a[7]) - m(&a[4], &a[6])))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = GroupElement {
            a: std::array::from_fn(|_| S::zero()),
        };
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = S::zero();
                for k in 0..3 {
                    acc = acc + m(&self.a[i * 3 + k], &rhs.a[k * 3 + j]);
                }
                out.a[i * 3 + j] = acc;
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let a = &self.a;
        GroupElement {
            a: [
                a[0].clone(),
                a[3].clone(),
                a[6].clone(),
                a[1].clone(),
                a[4].clone(),
                a[7].clone(),
                a[2].clone(),
                a[5].clone(),
                a[8].clone(),
            ],
        }
    }

    /// Adjugate of the 3x3 matrix; equals the inverse when det = 1.
    pub fn adjugate(&self) -> Self {
        let a = &self.a;
        let c = |p: usize, q: usize, r: usize, s: usize| m(&a[p], &a[q]) - m(&a[r], &a[s]);
        // cofactor matrix transposed, row-major
        GroupElement {
            a: [
                c(4, 8, 5, 7),
                c(2, 7, 1, 8),
                c(1, 5, 2, 4),
                c(5, 6, 3, 8),
                c(0, 8, 2, 6),
                c(2, 3, 0, 5),
                c(3, 7, 4, 6),
                c(1, 6, 0, 7),
                c(0, 4, 1, 3),
            ],
        }
    }

    pub fn map<T: Ring>(&self, mut f: impl FnMut(&S) -> T) -> GroupElement<T> {
        GroupElement {
            a: std::array::from_fn(|k| f(&self.a[k])),
        }
    }
}

/// Congruence action `g.x = g x g^t`. Preserves det3; group homomorphism.
pub fn act<S: Ring>(g: &GroupElement<S>, x: &SymMat3<S>) -> SymMat3<S> {
    // (g x g^t)_{ij} = row_i(g) . x . row_j(g)^t; computed for i <= j only.
    let row = |i: usize, k: usize| g.at(i, k);
    SymMat3::from_fn(|i, j| {
        let mut acc = S::zero();
        for k in 1..=3 {
            for l in 1..=3 {
                acc = acc + m(&m(row(i, k), x.entry(k, l)), row(j, l));
            }
        }
        acc
    })
}

/// Congruence by the elementary matrix I + c E_{ij}; realizes the Frobenius
/// transformations of the nilcone reduction. Preserves rank and det.
pub fn elementary_congruence<S: Ring>(i: usize, j: usize, c: &S, x: &SymMat3<S>) -> SymMat3<S> {
    act(&GroupElement::elementary(i, j, c.clone()), x)
}

/// `n(g.x) = (g^t)^{-1} n(x) ((g^t)^{-1})^t`, exactly. The adjoint of the
/// congruence by g under the trace form is the congruence by g^t, so the
/// equivariance of the adjugate realizes as congruence by (g^t)^{-1}.
pub fn check_adjugate_equivariance<S: Ring>(g: &GroupElement<S>, x: &SymMat3<S>) -> bool {
    let lhs = adjugate(&act(g, x));
    // det g = 1, so (g^t)^{-1} is the adjugate of g^t.
    let gti = g.transpose().adjugate();
    let rhs = act(&gti, &adjugate(x));
    lhs == rhs
}

/// Diagonal one-parameter subgroup exponents, n1 + n2 + n3 = 0.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OneParamSubgroup {
    pub n1: i64,
    pub n2: i64,
    pub n3: i64,
}

impl OneParamSubgroup {
    pub fn new(n1: i64, n2: i64, n3: i64) -> Result<Self, CoreError> {
        if n1 + n2 + n3 != 0 {
            return Err(CoreError::ExponentsDoNotSumToZero);
        }
        Ok(OneParamSubgroup { n1, n2, n3 })
    }

    pub fn exponent(&self, i: usize, j: usize) -> i64 {
        let n = [self.n1, self.n2, self.n3];
        n[i - 1] + n[j - 1]
    }

    pub fn scaled(&self, k: i64) -> Self {
        OneParamSubgroup {
            n1: self.n1 * k,
            n2: self.n2 * k,
            n3: self.n3 * k,
        }
    }
}

/// Entry (i,j) scaled by `t^(n_i + n_j)`. `t = 0` is a pole whenever a
/// negative exponent meets a nonzero entry; zero entries pass through.
pub fn one_param_act<S: Field>(
    lambda: &OneParamSubgroup,
    t: &S,
    x: &SymMat3<S>,
) -> Result<SymMat3<S>, CoreError> {
    let t_inv = t.inv();
    let pow = |e: i64, entry: &S| -> Result<S, CoreError> {
        if entry.is_zero() {
            return Ok(S::zero());
        }
        let (base, reps) = if e >= 0 {
            (Some(t.clone()), e as u64)
        } else {
            (t_inv.clone(), (-e) as u64)
        };
        let base = base.ok_or(CoreError::PoleAtZero)?;
        let mut acc = entry.clone();
        for _ in 0..reps {
            acc = acc * base.clone();
        }
        Ok(acc)
    };
    Ok(SymMat3::new(
        pow(lambda.exponent(1, 1), &x.d1)?,
        pow(lambda.exponent(2, 2), &x.d2)?,
        pow(lambda.exponent(3, 3), &x.d3)?,
        pow(lambda.exponent(1, 2), &x.o12)?,
        pow(lambda.exponent(1, 3), &x.o13)?,
        pow(lambda.exponent(2, 3), &x.o23)?,
    ))
}

/// Deterministic seeded SL(3) element: a product of `steps` elementary
/// matrices I + c E_{ij} with c drawn from [-3, 3], so det = 1 exactly and
/// entry growth stays bounded for downstream exact computations.
pub fn rand_sl3<S: Ring>(seed: u64, steps: u32) -> Result<GroupElement<S>, CoreError> {
    if steps < 1 {
        return Err(CoreError::InvalidParameter("rand_sl3 needs steps >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = GroupElement::<S>::identity();
    for _ in 0..steps {
        let i = rng.gen_range(1..=3usize);
        let j = loop {
            let j = rng.gen_range(1..=3usize);
            if j != i {
                break j;
            }
        };
        let c = rng.gen_range(-3i64..=3);
        g = g.mul(&GroupElement::elementary(i, j, S::from_i64(c)));
    }
    Ok(g)
}

/// Random symmetric matrix with integer entries in [-bound, bound], drawn
/// from the caller's generator.
pub fn rand_sym<S: Ring>(rng: &mut impl Rng, bound: i64) -> SymMat3<S> {
    SymMat3::from_fn(|_, _| S::from_i64(rng.gen_range(-bound..=bound)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, GaussRat, Int, Rat};
    use num::BigInt;

    fn e() -> SymMat3<Int> {
        SymMat3::identity()
    }
    fn e1() -> SymMat3<Int> {
        SymMat3::frame(1)
    }
    fn e2() -> SymMat3<Int> {
        SymMat3::frame(2)
    }
    fn e3() -> SymMat3<Int> {
        SymMat3::frame(3)
    }
    fn diag(a: i64, b: i64, c: i64) -> SymMat3<Int> {
        let mut x = SymMat3::zero();
        x.d1 = Int::from(a);
        x.d2 = Int::from(b);
        x.d3 = Int::from(c);
        x
    }
    fn int(n: i64) -> Int {
        BigInt::from(n)
    }

    /// Oracle: multiply out full 3x3 matrices.
    fn full_mul(x: &SymMat3<Int>, y: &SymMat3<Int>) -> [[Int; 3]; 3] {
        std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                (1..=3)
                    .map(|k| x.entry(i + 1, k).clone() * y.entry(k, j + 1).clone())
                    .sum()
            })
        })
    }

    #[test]
    fn jordan_product_examples() {
        let er: SymMat3<Rat> = e().map(|v| Rat::from_integer(v.clone()));
        assert_eq!(jordan_product(&er, &er), er);
        let e1r: SymMat3<Rat> = e1().map(|v| Rat::from_integer(v.clone()));
        assert_eq!(jordan_product(&e1r, &e1r), e1r);
        // b12 • b12 = e1 + e2, cross-checked against plain matrix multiplication
        let b12: SymMat3<Int> = SymMat3::offdiag(1, 2);
        let prod = full_mul(&b12, &b12);
        let expect = e1().add(&e2());
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(prod[i][j], *expect.entry(i + 1, j + 1));
            }
        }
        let b12r: SymMat3<Rat> = b12.map(|v| Rat::from_integer(v.clone()));
        let expect_r = expect.map(|v| Rat::from_integer(v.clone()));
        assert_eq!(jordan_product(&b12r, &b12r), expect_r);
    }

    #[test]
    fn trace_form_examples() {
        assert_eq!(trace_form(&e(), &e()), int(3));
        assert_eq!(trace_form(&e1(), &e2()), int(0));
        let b12: SymMat3<Int> = SymMat3::offdiag(1, 2);
        assert_eq!(trace_form(&b12, &b12), int(2));
    }

    #[test]
    fn det_examples() {
        assert_eq!(det3(&e()), int(1));
        assert_eq!(det3(&e1().add(&e2())), int(0));
        let ones = SymMat3::from_fn(|_, _| int(1));
        assert_eq!(det3(&ones), int(0));
        assert_eq!(det3(&diag(1, 2, 3)), int(6));
    }

    #[test]
    fn adjugate_examples() {
        assert_eq!(adjugate(&e()), e());
        // n(e1+e2) = e3
        assert_eq!(adjugate(&e1().add(&e2())), e3());
        assert_eq!(adjugate(&diag(1, 2, 3)), diag(6, 3, 2));
    }

    #[test]
    fn adjugate_law() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let x: SymMat3<Int> = rand_sym(&mut rng, 9);
            let n = adjugate(&x);
            let d = det3(&x);
            let prod = full_mul(&x, &n);
            for i in 0..3 {
                for j in 0..3 {
                    let want = if i == j { d.clone() } else { int(0) };
                    assert_eq!(prod[i][j], want);
                }
            }
        }
    }

    #[test]
    fn cross_examples() {
        assert_eq!(cross(&e1(), &e2()), e3());
        assert_eq!(cross(&e(), &e()), e().scale(&int(2)));
        assert_eq!(cross(&e(), &e1()), e2().add(&e3()));
    }

    #[test]
    fn cross_is_adjugate_polarization() {
        // dual route: explicit bilinear formulas vs n(x+y) - n(x) - n(y)
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..100 {
            let x: SymMat3<Int> = rand_sym(&mut rng, 9);
            let y: SymMat3<Int> = rand_sym(&mut rng, 9);
            let polar = adjugate(&x.add(&y)).sub(&adjugate(&x)).sub(&adjugate(&y));
            assert_eq!(cross(&x, &y), polar);
            assert_eq!(cross(&x, &x), adjugate(&x).scale(&int(2)));
        }
    }

    #[test]
    fn trilinear_examples() {
        assert_eq!(trilinear_f(&e(), &e(), &e()), int(6));
        assert_eq!(trilinear_f(&e1(), &e2(), &e3()), int(1));
        assert_eq!(trilinear_f(&e(), &e(), &e1()), int(2));
    }

    #[test]
    fn trilinear_symmetry_and_norm() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..50 {
            let x: SymMat3<Int> = rand_sym(&mut rng, 9);
            let y: SymMat3<Int> = rand_sym(&mut rng, 9);
            let z: SymMat3<Int> = rand_sym(&mut rng, 9);
            let base = trilinear_f(&x, &y, &z);
            assert_eq!(trilinear_f(&x, &z, &y), base);
            assert_eq!(trilinear_f(&y, &x, &z), base);
            assert_eq!(trilinear_f(&y, &z, &x), base);
            assert_eq!(trilinear_f(&z, &x, &y), base);
            assert_eq!(trilinear_f(&z, &y, &x), base);
            assert_eq!(trilinear_f(&x, &x, &x), int(6) * det3(&x));
        }
    }

    #[test]
    fn act_examples() {
        let g = GroupElement::<Int>::elementary(2, 1, int(1));
        let moved = act(&g, &e1());
        // e1 + e2 + b12
        let expect = e1().add(&e2()).add(&SymMat3::offdiag(1, 2));
        assert_eq!(moved, expect);
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for s in 0..20 {
            let g: GroupElement<Int> = rand_sl3(s, 4).unwrap();
            assert_eq!(det3(&act(&g, &diag(1, 2, 3))), int(6));
            let x: SymMat3<Int> = rand_sym(&mut rng, 9);
            assert_eq!(det3(&act(&g, &x)), det3(&x));
        }
    }

    #[test]
    fn act_is_homomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for s in 0..20 {
            let g: GroupElement<Int> = rand_sl3(1000 + s, 3).unwrap();
            let h: GroupElement<Int> = rand_sl3(2000 + s, 3).unwrap();
            let x: SymMat3<Int> = rand_sym(&mut rng, 9);
            assert_eq!(act(&g.mul(&h), &x), act(&g, &act(&h, &x)));
        }
    }

    #[test]
    fn adjugate_equivariance() {
        let x = e1();
        assert!(check_adjugate_equivariance(
            &GroupElement::<Int>::identity(),
            &x
        ));
        let g = GroupElement::<Int>::elementary(2, 1, int(1));
        assert!(check_adjugate_equivariance(&g, &e1()));
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for s in 0..100 {
            let g: GroupElement<Int> = rand_sl3(3000 + s, 4).unwrap();
            let x: SymMat3<Int> = rand_sym(&mut rng, 9);
            assert!(check_adjugate_equivariance(&g, &x));
        }
    }

    #[test]
    fn one_param_examples() {
        let x: SymMat3<Rat> = e1().map(|v| Rat::from_integer(v.clone()));
        let id = OneParamSubgroup::new(0, 0, 0).unwrap();
        let t = rat(5, 1);
        assert_eq!(one_param_act(&id, &t, &x).unwrap(), x);

        let lam = OneParamSubgroup::new(1, 1, -2).unwrap();
        let scaled = one_param_act(&lam, &t, &x).unwrap();
        assert_eq!(scaled, x.scale(&rat(25, 1)));

        let x3: SymMat3<Rat> = e3().map(|v| Rat::from_integer(v.clone()));
        let scaled3 = one_param_act(&lam, &t, &x3).unwrap();
        assert_eq!(scaled3, x3.scale(&rat(1, 625)));

        // pole at 0 only when a negative exponent meets a nonzero entry
        assert!(one_param_act(&lam, &rat(0, 1), &x3).is_err());
        assert!(one_param_act(&lam, &rat(0, 1), &x).is_ok());
    }

    #[test]
    fn exponents_must_sum_to_zero() {
        assert!(OneParamSubgroup::new(1, 1, -1).is_err());
    }

    #[test]
    fn rand_sl3_contract() {
        assert!(rand_sl3::<Int>(0, 0).is_err());
        let g: GroupElement<Int> = rand_sl3(42, 5).unwrap();
        let h: GroupElement<Int> = rand_sl3(42, 5).unwrap();
        assert_eq!(g, h);
        for s in 0..20 {
            let g: GroupElement<Int> = rand_sl3(s, 6).unwrap();
            assert_eq!(g.det(), int(1));
        }
    }

    #[test]
    fn frobenius_tau_on_rank_two() {
        // tau(u) with u = -(y23/y13) b12 realized as congruence by I + c E21
        // sends e1 + e2 to e1 + u when c^2 = -1; over the Gaussian rationals
        // take c = i (so y23 = -i y13, consistent with y23^2 = -y13^2).
        let i = GaussRat::new(rat(0, 1), rat(1, 1));
        let x: SymMat3<GaussRat> = SymMat3::identity();
        let mut x = x;
        x.d3 = crate::scalar::Ring::zero(); // e1 + e2
        let moved = elementary_congruence(2, 1, &i, &x);
        let mut expect: SymMat3<GaussRat> = SymMat3::frame(1);
        expect.o12 = i.clone();
        assert_eq!(moved, expect);
    }

    #[test]
    fn elementary_congruence_basics() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..50 {
            let x: SymMat3<Int> = rand_sym(&mut rng, 9);
            assert_eq!(elementary_congruence(1, 3, &int(0), &x), x);
            // det (and hence rank-3-ness) preserved
            let c = int(rng.gen_range(-3..=3));
            let moved = elementary_congruence(3, 1, &c, &x);
            assert_eq!(det3(&moved), det3(&x));
        }
    }

    #[test]
    fn jordan_identity_and_trace_associativity() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for _ in 0..50 {
            let x: SymMat3<Rat> = rand_sym(&mut rng, 9);
            let y: SymMat3<Rat> = rand_sym(&mut rng, 9);
            let z: SymMat3<Rat> = rand_sym(&mut rng, 9);
            let xx = jordan_product(&x, &x);
            let lhs = jordan_product(&jordan_product(&xx, &y), &x);
            let rhs = jordan_product(&xx, &jordan_product(&y, &x));
            assert_eq!(lhs, rhs);
            assert_eq!(
                trace_form(&jordan_product(&x, &z), &y),
                trace_form(&x, &jordan_product(&y, &z))
            );
        }
    }

    #[test]
    fn pencil_expansion_identity() {
        // det(ax + by) = a^3 det x + b^3 det y + a^2 b/2 f(x,x,y) + a b^2/2 f(x,y,y)
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        for _ in 0..20 {
            let x: SymMat3<Rat> = rand_sym(&mut rng, 9);
            let y: SymMat3<Rat> = rand_sym(&mut rng, 9);
            let fxxy = trilinear_f(&x, &x, &y);
            let fxyy = trilinear_f(&x, &y, &y);
            for (a, b) in [(1, 1), (2, 1), (1, 2), (3, -1), (-1, 3), (2, 5), (5, 2), (7, 1), (1, 7), (4, 3)] {
                let (ar, br) = (rat(a, 1), rat(b, 1));
                let pencil = x.scale(&ar).add(&y.scale(&br));
                let expect = ar.clone() * ar.clone() * ar.clone() * det3(&x)
                    + br.clone() * br.clone() * br.clone() * det3(&y)
                    + (ar.clone() * ar.clone() * br.clone() * fxxy.clone()).half()
                    + (ar * br.clone() * br * fxyy.clone()).half();
                assert_eq!(det3(&pencil), expect);
            }
        }
    }
}
