//! Exact graded dimensions of the invariant algebras: the dimension of the
//! degree-d (or multidegree) component is the joint kernel of the six sl(3)
//! root-operator derivations acting on the torus-weight-zero monomials,
//! computed over two independent word-sized prime fields, plus assembly of
//! the Poincaré series of the three-forms algebra.

use crate::error::CoreError;
use crate::expr::{Descriptor, ExprArena};
use crate::jordan::SymMat3;
use crate::poly::MPoly;
use crate::scalar::{Int, PrimeCtx, Ring, PRIME_A, PRIME_B, PRIME_C};
use serde::Serialize;
use std::collections::HashMap;

/// Entry order within one slot: (1,1),(2,2),(3,3),(1,2),(1,3),(2,3), the
/// same as SymMat3. Coordinate x^(s)_ij has torus weight eps_i + eps_j.
const ENTRY_WEIGHTS: [[u32; 3]; 6] = [
    [2, 0, 0],
    [0, 2, 0],
    [0, 0, 2],
    [1, 1, 0],
    [1, 0, 1],
    [0, 1, 1],
];

/// Exponent vector over the 6p coordinates, slot-major.
pub type Mono = Vec<u8>;

/// The torus-weight-zero monomials of one multidegree, canonically ordered.
#[derive(Clone, Debug)]
pub struct MonomialBlock {
    pub p: usize,
    pub multidegree: Vec<u32>,
    pub monomials: Vec<Mono>,
}

fn weight_of(mono: &Mono) -> [u32; 3] {
    let mut w = [0u32; 3];
    for (v, &e) in mono.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let wt = ENTRY_WEIGHTS[v % 6];
        for k in 0..3 {
            w[k] += wt[k] * u32::from(e);
        }
    }
    w
}

/// All degree-d exponent vectors over 6 variables, lexicographically.
fn slot_monomials(d: u32) -> Vec<[u8; 6]> {
    fn rec(pos: usize, left: u32, cur: &mut [u8; 6], out: &mut Vec<[u8; 6]>) {
        if pos == 5 {
            cur[5] = left as u8;
            out.push(*cur);
            return;
        }
        for e in (0..=left).rev() {
            cur[pos] = e as u8;
            rec(pos + 1, left - e, cur, out);
        }
        cur[pos] = 0;
    }
    let mut out = Vec::new();
    let mut cur = [0u8; 6];
    rec(0, d, &mut cur, &mut out);
    out
}

/// Exactly the weight-zero monomials of the given multidegree, sorted in a
/// canonical (graded-lex) order. Within a block all monomials share the
/// total degree, so the order is plain lex on exponent vectors.
pub fn weight_zero_monomials(p: usize, multidegree: &[u32]) -> MonomialBlock {
    fn rec(
        slot: usize,
        p: usize,
        k: u32,
        per_slot: &[Vec<[u8; 6]>],
        cur: &mut Mono,
        acc: [u32; 3],
        out: &mut Vec<Mono>,
    ) {
        if slot == p {
            if acc == [k, k, k] {
                out.push(cur.clone());
            }
            return;
        }
        for sm in &per_slot[slot] {
            let mut next = acc;
            for (v, &e) in sm.iter().enumerate() {
                let wt = ENTRY_WEIGHTS[v];
                for c in 0..3 {
                    next[c] += wt[c] * u32::from(e);
                }
            }
            if next.iter().any(|&w| w > k) {
                continue;
            }
            cur[slot * 6..slot * 6 + 6].copy_from_slice(sm);
            rec(slot + 1, p, k, per_slot, cur, next, out);
        }
        cur[slot * 6..slot * 6 + 6].fill(0);
    }

    assert_eq!(multidegree.len(), p, "multidegree must have p components");
    let total: u32 = multidegree.iter().sum();
    let mut monomials = Vec::new();
    // weight-zero needs total weight (k,k,k) with 3k = 2*total
    if (2 * total) % 3 == 0 {
        let k = 2 * total / 3;
        let per_slot: Vec<Vec<[u8; 6]>> =
            multidegree.iter().map(|&d| slot_monomials(d)).collect();
        let mut cur: Mono = vec![0; 6 * p];
        rec(0, p, k, &per_slot, &mut cur, [0, 0, 0], &mut monomials);
        monomials.sort();
    }
    MonomialBlock {
        p,
        multidegree: multidegree.to_vec(),
        monomials,
    }
}

/// Action of the root operator E_ab on one coordinate: x_ij picks up
/// delta_ia x_bj + delta_ja x_ib. Returns (entry index, coefficient) pairs
/// within the same slot.
fn root_action(a: usize, b: usize, entry: usize) -> Vec<(usize, i64)> {
    const IJ: [(usize, usize); 6] = [(1, 1), (2, 2), (3, 3), (1, 2), (1, 3), (2, 3)];
    let (i, j) = IJ[entry];
    let idx = |i: usize, j: usize| -> usize {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        IJ.iter().position(|&t| t == (i, j)).unwrap()
    };
    let mut out: Vec<(usize, i64)> = Vec::new();
    let mut push = |e: usize, c: i64| {
        if let Some(t) = out.iter_mut().find(|t| t.0 == e) {
            t.1 += c;
        } else {
            out.push((e, c));
        }
    };
    if i == a {
        push(idx(b, j), 1);
    }
    if j == a {
        push(idx(i, b), 1);
    }
    out
}

/// The six root operators as (a, b) pairs, a != b.
pub const ROOT_OPS: [(usize, usize); 6] = [(1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2)];

/// Derivation rule for operator (a,b) on coordinate ids (slot-major), as
/// used by the symbolic cross-check on polynomial expansions.
pub fn derivation_rule(a: usize, b: usize) -> impl Fn(u32) -> Vec<(u32, i64)> {
    move |v: u32| {
        let slot = v / 6;
        root_action(a, b, (v % 6) as usize)
            .into_iter()
            .map(|(e, c)| (slot * 6 + e as u32, c))
            .collect()
    }
}

/// Sparse rows over F_p of the six stacked derivation matrices on a block:
/// rows indexed by (operator, image monomial), columns by block monomials.
fn derivation_rows(block: &MonomialBlock, ctx: &PrimeCtx) -> Vec<Vec<(u32, u64)>> {
    let mut row_index: HashMap<(usize, Mono), usize> = HashMap::new();
    let mut rows: Vec<Vec<(u32, u64)>> = Vec::new();
    for (col, mono) in block.monomials.iter().enumerate() {
        for (op, &(a, b)) in ROOT_OPS.iter().enumerate() {
            for (v, &e) in mono.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let slot_base = v - v % 6;
                for (target, c) in root_action(a, b, v % 6) {
                    let mut img = mono.clone();
                    img[v] -= 1;
                    img[slot_base + target] += 1;
                    let coeff = ctx.from_i64(i64::from(e) * c);
                    if coeff == 0 {
                        continue;
                    }
                    let next = rows.len();
                    let r = *row_index.entry((op, img)).or_insert(next);
                    if r == rows.len() {
                        rows.push(Vec::new());
                    }
                    if let Some(t) = rows[r].iter_mut().find(|t| t.0 == col as u32) {
                        t.1 = ctx.add(t.1, coeff);
                    } else {
                        rows[r].push((col as u32, coeff));
                    }
                }
            }
        }
    }
    for r in &mut rows {
        r.retain(|&(_, v)| v != 0);
        r.sort_by_key(|&(c, _)| c);
    }
    rows.retain(|r| !r.is_empty());
    rows
}

/// Rank of a sparse matrix over F_p by Gaussian elimination with
/// Markowitz-style pivoting: each step picks the nonzero entry minimizing
/// (row_nnz - 1)(col_nnz - 1), ties broken by lowest column then lowest row
/// index, so the elimination is deterministic.
pub fn sparse_rank(mut rows: Vec<Vec<(u32, u64)>>, ctx: &PrimeCtx) -> usize {
    let mut rank = 0usize;
    let ncols = rows
        .iter()
        .flat_map(|r| r.iter().map(|&(c, _)| c as usize + 1))
        .max()
        .unwrap_or(0);
    let mut col_count = vec![0u32; ncols];
    let mut active: Vec<bool> = vec![true; rows.len()];
    for r in &rows {
        for &(c, _) in r {
            col_count[c as usize] += 1;
        }
    }
    loop {
        let mut best: Option<(u64, u32, usize)> = None; // (score, col, row)
        for (ri, r) in rows.iter().enumerate() {
            if !active[ri] || r.is_empty() {
                continue;
            }
            let rn = r.len() as u64 - 1;
            for &(c, _) in r {
                let score = rn * u64::from(col_count[c as usize] - 1);
                let cand = (score, c, ri);
                match best {
                    None => best = Some(cand),
                    Some(b) => {
                        if cand.0 < b.0 || (cand.0 == b.0 && (cand.1, cand.2) < (b.1, b.2)) {
                            best = Some(cand);
                        }
                    }
                }
            }
        }
        let Some((_, pcol, prow)) = best else { break };
        rank += 1;
        active[prow] = false;
        let pivot_row = std::mem::take(&mut rows[prow]);
        for &(c, _) in &pivot_row {
            col_count[c as usize] -= 1;
        }
        let pval = pivot_row
            .iter()
            .find(|&&(c, _)| c == pcol)
            .map(|&(_, v)| v)
            .unwrap();
        let pinv = ctx.inv(pval);
        for (ri, r) in rows.iter_mut().enumerate() {
            if !active[ri] {
                continue;
            }
            let Some(&(_, val)) = r.iter().find(|&&(c, _)| c == pcol) else {
                continue;
            };
            let factor = ctx.mul(val, pinv);
            // r -= factor * pivot_row, merging sorted sparse rows
            let mut out = Vec::with_capacity(r.len() + pivot_row.len());
            let (mut i, mut j) = (0, 0);
            while i < r.len() && j < pivot_row.len() {
                match r[i].0.cmp(&pivot_row[j].0) {
                    std::cmp::Ordering::Less => {
                        out.push(r[i]);
                        i += 1;
                    }
                    std::cmp::Ordering::Greater => {
                        let v = ctx.neg(ctx.mul(factor, pivot_row[j].1));
                        if v != 0 {
                            col_count[pivot_row[j].0 as usize] += 1;
                            out.push((pivot_row[j].0, v));
                        }
                        j += 1;
                    }
                    std::cmp::Ordering::Equal => {
                        let v = ctx.sub(r[i].1, ctx.mul(factor, pivot_row[j].1));
                        if v != 0 {
                            out.push((r[i].0, v));
                        } else {
                            col_count[r[i].0 as usize] -= 1;
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
            out.extend_from_slice(&r[i..]);
            for &(c, v) in &pivot_row[j..] {
                let nv = ctx.neg(ctx.mul(factor, v));
                if nv != 0 {
                    col_count[c as usize] += 1;
                    out.push((c, nv));
                }
            }
            *r = out;
        }
    }
    rank
}

/// Kernel dimension of the six stacked derivations on a weight-zero block.
pub fn block_kernel_dim(block: &MonomialBlock, ctx: &PrimeCtx) -> usize {
    let rows = derivation_rows(block, ctx);
    block.monomials.len() - sparse_rank(rows, ctx)
}

#[derive(Clone, Debug)]
pub enum DegreeSpec {
    Total(u32),
    Multi(Vec<u32>),
}

#[derive(Clone, Debug)]
pub struct DimOptions {
    pub primes: Vec<u64>,
    /// Per-total-degree ceiling; `None` picks the per-p default (9 for
    /// p <= 3, 6 for p = 4, 9 for p = 5 with per-multidegree specs only).
    pub ceiling: Option<u32>,
}

impl Default for DimOptions {
    fn default() -> Self {
        DimOptions {
            primes: vec![PRIME_A, PRIME_B],
            ceiling: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DimReport {
    pub p: usize,
    pub degree: u32,
    pub per_multidegree: Vec<(Vec<u32>, usize)>,
    pub total: usize,
    pub primes_used: Vec<u64>,
    /// Set when the first two primes disagreed somewhere and a third was
    /// consulted.
    pub disagreements: Vec<String>,
}

fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            out.push(cur.clone());
            return;
        }
        for e in (0..=left).rev() {
            cur[pos] = e;
            rec(pos + 1, left - e, cur, out);
        }
        cur[pos] = 0;
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; parts];
    if parts > 0 {
        rec(0, total, &mut cur, &mut out);
    }
    out
}

fn default_ceiling(p: usize) -> u32 {
    match p {
        0..=3 => 9,
        4 => 6,
        _ => 9,
    }
}

/// dim of the degree component of the invariant algebra, as the joint
/// kernel of the root derivations on weight-zero blocks, cross-checked over
/// two primes (a third on disagreement). Total-degree specs sum the
/// per-multidegree kernels over all compositions.
pub fn invariant_dimension(
    p: usize,
    spec: &DegreeSpec,
    opts: &DimOptions,
) -> Result<DimReport, CoreError> {
    let (total, mdegs) = match spec {
        DegreeSpec::Total(d) => (*d, compositions(*d, p)),
        DegreeSpec::Multi(md) => {
            if md.len() != p {
                return Err(CoreError::InvalidParameter(format!(
                    "multidegree has {} parts, p = {p}",
                    md.len()
                )));
            }
            (md.iter().sum(), vec![md.clone()])
        }
    };
    let ceiling = opts.ceiling.unwrap_or_else(|| default_ceiling(p));
    // the p = 5 default admits degree 9 only per-multidegree
    let effective = if p == 5 && matches!(spec, DegreeSpec::Total(_)) && opts.ceiling.is_none() {
        6
    } else {
        ceiling
    };
    if total > effective {
        return Err(CoreError::CeilingExceeded {
            requested: total,
            ceiling: effective,
        });
    }
    if opts.primes.len() < 2 {
        return Err(CoreError::InvalidParameter(
            "need at least two primes".into(),
        ));
    }
    let ctxs: Result<Vec<PrimeCtx>, String> =
        opts.primes.iter().map(|&q| PrimeCtx::new(q)).collect();
    let ctxs = ctxs.map_err(CoreError::InvalidParameter)?;
    let mut per_multidegree = Vec::new();
    let mut disagreements = Vec::new();
    let mut primes_used: Vec<u64> = opts.primes.clone();
    for md in mdegs {
        let block = weight_zero_monomials(p, &md);
        if block.monomials.is_empty() {
            per_multidegree.push((md, 0));
            continue;
        }
        let dims: Vec<usize> = ctxs.iter().map(|c| block_kernel_dim(&block, c)).collect();
        let dim = if dims.windows(2).all(|w| w[0] == w[1]) {
            dims[0]
        } else {
            // disagreement: consult the fixed third prime and take majority
            let third = PrimeCtx::new(PRIME_C).expect("fixed prime");
            let d3 = block_kernel_dim(&block, &third);
            disagreements.push(format!(
                "multidegree {md:?}: dims {dims:?} disagreed, third prime gives {d3}"
            ));
            if !primes_used.contains(&PRIME_C) {
                primes_used.push(PRIME_C);
            }
            if !dims.contains(&d3) {
                return Err(CoreError::PrimeDisagreement(format!(
                    "no two primes agree on multidegree {md:?}: {dims:?} vs {d3}"
                )));
            }
            d3
        };
        per_multidegree.push((md, dim));
    }
    let totald = per_multidegree.iter().map(|(_, d)| d).sum();
    Ok(DimReport {
        p,
        degree: total,
        per_multidegree,
        total: totald,
        primes_used,
        disagreements,
    })
}

/// Expand a descriptor into the explicit polynomial in the 6p coordinates.
pub fn expand_descriptor(arena: &ExprArena, d: &Descriptor) -> MPoly<Int> {
    let tuple: Vec<SymMat3<MPoly<Int>>> = (0..d.arity as u32)
        .map(|s| {
            SymMat3::new(
                MPoly::var(s * 6),
                MPoly::var(s * 6 + 1),
                MPoly::var(s * 6 + 2),
                MPoly::var(s * 6 + 3),
                MPoly::var(s * 6 + 4),
                MPoly::var(s * 6 + 5),
            )
        })
        .collect();
    d.evaluate(arena, &tuple)
}

/// Check that an expanded generator lies in the derivation kernel of its
/// block: every monomial of the expansion is weight-zero (hence sits in the
/// block), and the coefficient vector is killed by each derivation matrix
/// over the given prime. The symbolic derivation over the integers is
/// checked as well.
pub fn generator_in_kernel(
    arena: &ExprArena,
    d: &Descriptor,
    ctx: &PrimeCtx,
) -> Result<(), String> {
    let poly = expand_descriptor(arena, d);
    for &(a, b) in &ROOT_OPS {
        let der = poly.derive(derivation_rule(a, b));
        if !der.is_zero() {
            return Err(format!(
                "{}: derivation E_{a}{b} does not annihilate the expansion",
                d.name
            ));
        }
    }
    let block = weight_zero_monomials(d.arity as usize, &d.multidegree);
    let index: HashMap<&Mono, usize> = block
        .monomials
        .iter()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let mut vec_fp = vec![0u64; block.monomials.len()];
    for (mono, coeff) in &poly.terms {
        let mut dense: Mono = vec![0; 6 * d.arity as usize];
        for &(v, e) in &mono.0 {
            dense[v as usize] = e as u8;
        }
        let Some(&i) = index.get(&dense) else {
            return Err(format!(
                "{}: expansion monomial escapes the weight-zero block",
                d.name
            ));
        };
        vec_fp[i] = ctx.from_bigint(coeff);
    }
    if vec_fp.iter().all(|&v| v == 0) {
        return Err(format!("{}: expansion vanishes mod p", d.name));
    }
    let rows = derivation_rows(&block, ctx);
    for row in rows {
        let mut acc = 0u64;
        for &(c, v) in &row {
            acc = ctx.add(acc, ctx.mul(v, vec_fp[c as usize]));
        }
        if acc != 0 {
            return Err(format!(
                "{}: derivation matrix does not kill the vector",
                d.name
            ));
        }
    }
    Ok(())
}

/// Numerator coefficients (a0, a3, a6, a9, a12) of the Poincaré series of
/// the three-forms algebra over (1 - t^3)^10.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PoincareNumerator(pub [i64; 5]);

/// Solve for the numerator from the computed dimensions in degrees 3 and 6:
/// a3 = dim3 - 10 and a6 = dim6 - 10 a3 - 55 from the expansion of
/// (1 - t^3)^(-10), with a0 = a12 = 1 and a9 = a3 imposed (palindromic
/// numerator).
pub fn poincare_numerator_a3(dim3: usize, dim6: usize) -> Result<PoincareNumerator, CoreError> {
    let a3 = dim3 as i64 - 10;
    let a6 = dim6 as i64 - 10 * a3 - 55;
    if a3 < 0 || a6 < 0 {
        return Err(CoreError::InvalidParameter(format!(
            "dimensions ({dim3}, {dim6}) inconsistent with a palindromic numerator: a3 = {a3}, a6 = {a6}"
        )));
    }
    Ok(PoincareNumerator([1, a3, a6, a3, 1]))
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

impl PoincareNumerator {
    /// Taylor coefficient of the series at t^degree. Degrees that are not
    /// multiples of 3 carry no invariants; by convention the prediction is 0
    /// (the CLI surfaces a warning).
    pub fn predicted_dim(&self, degree: u32) -> u64 {
        if degree % 3 != 0 {
            return 0;
        }
        let m = u64::from(degree / 3);
        let mut acc = 0i64;
        for (j, &a) in self.0.iter().enumerate() {
            let j = j as u64;
            if m >= j {
                acc += a * binom(m - j + 9, 9) as i64;
            }
        }
        acc as u64
    }

    /// Numerator evaluated at t = 1: the rank of the invariant algebra as a
    /// free module over its ten cubic parameters.
    pub fn rank_at_one(&self) -> i64 {
        self.0.iter().sum()
    }
}

/// r = numerator at t = 1; the three-forms module is free of rank 3 with
/// basis (1, g, g^2) for the degree-6 generator g.
pub fn verify_rank_free_module(num: &PoincareNumerator) -> Result<i64, CoreError> {
    let r = num.rank_at_one();
    if r != 3 {
        return Err(CoreError::InvalidParameter(format!(
            "free-module rank is {r}, expected 3"
        )));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gens_a3;

    #[test]
    fn weight_zero_p1_degree3() {
        // frozen hand enumeration: x11 x22 x33, x11 x23^2, x22 x13^2,
        // x33 x12^2, x12 x13 x23
        let block = weight_zero_monomials(1, &[3]);
        assert_eq!(block.monomials.len(), 5);
        let mut expect: Vec<Mono> = vec![
            vec![1, 1, 1, 0, 0, 0],
            vec![1, 0, 0, 0, 0, 2],
            vec![0, 1, 0, 0, 2, 0],
            vec![0, 0, 1, 2, 0, 0],
            vec![0, 0, 0, 1, 1, 1],
        ];
        expect.sort();
        assert_eq!(block.monomials, expect);
    }

    #[test]
    fn weight_zero_degree1_empty() {
        let block = weight_zero_monomials(1, &[1]);
        assert!(block.monomials.is_empty());
    }

    #[test]
    fn weight_zero_111_matches_brute_force() {
        let block = weight_zero_monomials(3, &[1, 1, 1]);
        // brute force over all 6^3 products x^(1)_a y^(2)_b z^(3)_c
        let mut count = 0;
        for a in 0..6 {
            for b in 0..6 {
                for c in 0..6 {
                    let mut mono = vec![0u8; 18];
                    mono[a] += 1;
                    mono[6 + b] += 1;
                    mono[12 + c] += 1;
                    let w = weight_of(&mono);
                    if w[0] == w[1] && w[1] == w[2] {
                        count += 1;
                        assert!(block.monomials.contains(&mono));
                    }
                }
            }
        }
        assert_eq!(block.monomials.len(), count);
    }

    #[test]
    fn known_dimensions() {
        let opts = DimOptions::default();
        let d = invariant_dimension(1, &DegreeSpec::Total(3), &opts).unwrap();
        assert_eq!(d.total, 1); // det x alone
        let d = invariant_dimension(2, &DegreeSpec::Total(3), &opts).unwrap();
        assert_eq!(d.total, 4);
        let d = invariant_dimension(3, &DegreeSpec::Total(3), &opts).unwrap();
        assert_eq!(d.total, 10);
    }

    #[test]
    fn ceiling_guard() {
        let opts = DimOptions::default();
        assert!(matches!(
            invariant_dimension(3, &DegreeSpec::Total(12), &opts),
            Err(CoreError::CeilingExceeded { .. })
        ));
    }

    #[test]
    fn generators_lie_in_kernel() {
        let mut arena = ExprArena::new();
        let gens = gens_a3(&mut arena);
        let ctx = PrimeCtx::new(PRIME_A).unwrap();
        for d in gens.iter().take(10) {
            generator_in_kernel(&arena, d, &ctx).unwrap();
        }
    }

    #[test]
    fn f11_nonzero_in_222_kernel() {
        let mut arena = ExprArena::new();
        let gens = gens_a3(&mut arena);
        let ctx = PrimeCtx::new(PRIME_B).unwrap();
        generator_in_kernel(&arena, &gens[10], &ctx).unwrap();
    }

    #[test]
    fn poincare_assembly() {
        assert_eq!(binom(10, 1), 10);
        assert_eq!(binom(11, 2), 55);
        let num = poincare_numerator_a3(10, 56).unwrap();
        assert_eq!(num, PoincareNumerator([1, 0, 1, 0, 1]));
        assert_eq!(num.predicted_dim(0), 1);
        assert_eq!(num.predicted_dim(3), 10);
        assert_eq!(num.predicted_dim(6), 56);
        assert_eq!(num.predicted_dim(9), 230);
        assert_eq!(num.predicted_dim(4), 0);
        assert_eq!(verify_rank_free_module(&num).unwrap(), 3);
        // the free polynomial case would have numerator (1): rank 1
        assert_eq!(PoincareNumerator([1, 0, 0, 0, 0]).rank_at_one(), 1);
        assert!(poincare_numerator_a3(9, 0).is_err());
    }
}
