//! Generator invariants of the algebras A(1)..A(5): the four polynomials of
//! the two-forms theorem, the eleven of the three-forms theorem, and the
//! polarization families for four and five forms, together with exact
//! invariance and multihomogeneity testing and the Gordan pencil map.

use crate::error::CoreError;
use crate::expr::{eval, Descriptor, EvalCtx, ExprArena, NodeId};
use crate::jordan::{act, det3, rand_sl3, rand_sym, trilinear_f, SymMat3};
use crate::scalar::{Field, Fp, Int, Rat, Ring, PRIME_A};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

const SLOT_NAMES: [&str; 5] = ["x", "y", "z", "t", "u"];

/// det x, det y, f(x,x,y), f(x,y,y) -- multidegrees (3,0),(0,3),(2,1),(1,2).
pub fn gens_a2(arena: &mut ExprArena) -> Vec<Descriptor> {
    let x = arena.slot(0);
    let y = arena.slot(1);
    let dx = arena.det(x);
    let dy = arena.det(y);
    let fxxy = arena.trif(x, x, y);
    let fxyy = arena.trif(x, y, y);
    vec![
        Descriptor::new(arena, "det_x", 2, dx),
        Descriptor::new(arena, "det_y", 2, dy),
        Descriptor::new(arena, "f_xxy", 2, fxxy),
        Descriptor::new(arena, "f_xyy", 2, fxyy),
    ]
}

/// The eleven generators of the three-forms algebra, in the standard order:
/// f1 = det x, f2 = det y, f3 = det z, f4 = f(x,x,y), f5 = f(x,x,z),
/// f6 = f(y,y,x), f7 = f(y,y,z), f8 = f(z,z,x), f9 = f(z,z,y),
/// f10 = f(x,y,z), f11 = f(n(x), n(y), n(z)).
pub fn gens_a3(arena: &mut ExprArena) -> Vec<Descriptor> {
    let x = arena.slot(0);
    let y = arena.slot(1);
    let z = arena.slot(2);
    let roots = vec![
        arena.det(x),
        arena.det(y),
        arena.det(z),
        arena.trif(x, x, y),
        arena.trif(x, x, z),
        arena.trif(y, y, x),
        arena.trif(y, y, z),
        arena.trif(z, z, x),
        arena.trif(z, z, y),
        arena.trif(x, y, z),
        {
            let nx = arena.adj(x);
            let ny = arena.adj(y);
            let nz = arena.adj(z);
            arena.trif(nx, ny, nz)
        },
    ];
    roots
        .into_iter()
        .enumerate()
        .map(|(k, r)| Descriptor::new(arena, format!("f{}", k + 1), 3, r))
        .collect()
}

/// The degree-9 five-forms invariant f(n(x) x n(y), (x x z) x (y x t), u),
/// multidegree (3,3,1,1,1).
pub fn deg9_descriptor(arena: &mut ExprArena) -> Descriptor {
    let x = arena.slot(0);
    let y = arena.slot(1);
    let z = arena.slot(2);
    let t = arena.slot(3);
    let u = arena.slot(4);
    let nx = arena.adj(x);
    let ny = arena.adj(y);
    let a = arena.cross(nx, ny);
    let xz = arena.cross(x, z);
    let yt = arena.cross(y, t);
    let b = arena.cross(xz, yt);
    let root = arena.trif(a, b, u);
    Descriptor::new(arena, "deg9", 5, root)
}

/// Direct evaluation of the degree-9 invariant.
pub fn deg9<S: Ring>(
    x: &SymMat3<S>,
    y: &SymMat3<S>,
    z: &SymMat3<S>,
    t: &SymMat3<S>,
    u: &SymMat3<S>,
) -> S {
    use crate::jordan::{adjugate, cross};
    let a = cross(&adjugate(x), &adjugate(y));
    let b = cross(&cross(x, z), &cross(y, t));
    trilinear_f(&a, &b, u)
}

#[derive(Clone, Debug, Default)]
pub struct DedupReport {
    /// For each retained representative that absorbed duplicates: its name
    /// and the names it absorbed.
    pub merged: Vec<(String, Vec<String>)>,
    /// Family sizes before evaluation-hash dedup, keyed by family label.
    pub family_sizes: Vec<(String, usize)>,
}

/// The generating (possibly redundant) families:
/// p <= 2 the two-forms theorem set, p = 3 the eleven generators, p = 4 the
/// f-triples plus the cross family, p = 5 additionally the degree-9 double
/// cross family. Symmetry dedup happens structurally (canonical interning);
/// identical-evaluation duplicates are merged by randomized evaluation
/// hashing and reported.
pub fn enumerate_generators(
    arena: &mut ExprArena,
    p: usize,
) -> Result<(Vec<Descriptor>, DedupReport), CoreError> {
    if !(1..=5).contains(&p) {
        return Err(CoreError::InvalidParameter(format!(
            "p must be in 1..=5, got {p}"
        )));
    }
    let mut report = DedupReport::default();
    let mut descs: Vec<Descriptor> = Vec::new();
    match p {
        1 => {
            let x = arena.slot(0);
            let dx = arena.det(x);
            descs.push(Descriptor::new(arena, "det_x", 1, dx));
        }
        2 => descs = gens_a2(arena),
        3 => descs = gens_a3(arena),
        4 | 5 => {
            let slots: Vec<NodeId> = (0..p).map(|s| arena.slot(s as u8)).collect();
            let name_of = |ix: &[usize]| {
                ix.iter()
                    .map(|&i| SLOT_NAMES[i])
                    .collect::<Vec<_>>()
                    .join("")
            };
            // degree 3: f(x_i, x_j, x_k) over multisets
            let mut triples = Vec::new();
            for i in 0..p {
                for j in i..p {
                    for k in j..p {
                        let root = arena.trif(slots[i], slots[j], slots[k]);
                        triples.push(Descriptor::new(
                            arena,
                            format!("f_{}", name_of(&[i, j, k])),
                            p as u8,
                            root,
                        ));
                    }
                }
            }
            report
                .family_sizes
                .push(("deg3_triples".into(), triples.len()));

            // degree 6: f(x_i x x_j, x_k x x_l, x_m x x_n) over pair multisets
            let mut pairs = Vec::new();
            for i in 0..p {
                for j in i..p {
                    pairs.push((i, j));
                }
            }
            let cross_nodes: Vec<NodeId> = pairs
                .iter()
                .map(|&(i, j)| arena.cross(slots[i], slots[j]))
                .collect();
            let mut cross_family = Vec::new();
            for a in 0..pairs.len() {
                for b in a..pairs.len() {
                    for c in b..pairs.len() {
                        let root = arena.trif(cross_nodes[a], cross_nodes[b], cross_nodes[c]);
                        let nm = format!(
                            "f_{}x{}.{}x{}.{}x{}",
                            SLOT_NAMES[pairs[a].0],
                            SLOT_NAMES[pairs[a].1],
                            SLOT_NAMES[pairs[b].0],
                            SLOT_NAMES[pairs[b].1],
                            SLOT_NAMES[pairs[c].0],
                            SLOT_NAMES[pairs[c].1]
                        );
                        cross_family.push(Descriptor::new(arena, nm, p as u8, root));
                    }
                }
            }
            report
                .family_sizes
                .push(("deg6_crosses".into(), cross_family.len()));

            descs.extend(triples);
            descs.extend(cross_family);

            if p == 5 {
                // degree 9: f((x_i x x_j) x (x_k x x_l), (..) x (..), x_q)
                let mut dcs = Vec::new(); // double crosses as (pair idx, pair idx)
                for a in 0..pairs.len() {
                    for b in a..pairs.len() {
                        dcs.push((a, b));
                    }
                }
                let dc_nodes: Vec<NodeId> = dcs
                    .iter()
                    .map(|&(a, b)| arena.cross(cross_nodes[a], cross_nodes[b]))
                    .collect();
                let dc_name = |k: usize| {
                    let (a, b) = dcs[k];
                    format!(
                        "({}{}x{}{})",
                        SLOT_NAMES[pairs[a].0],
                        SLOT_NAMES[pairs[a].1],
                        SLOT_NAMES[pairs[b].0],
                        SLOT_NAMES[pairs[b].1]
                    )
                };
                let mut deg9_family = Vec::new();
                for d1 in 0..dcs.len() {
                    for d2 in d1..dcs.len() {
                        for q in 0..p {
                            let root = arena.trif(dc_nodes[d1], dc_nodes[d2], slots[q]);
                            let nm = format!(
                                "f_{}{}.{}",
                                dc_name(d1),
                                dc_name(d2),
                                SLOT_NAMES[q]
                            );
                            deg9_family.push(Descriptor::new(arena, nm, p as u8, root));
                        }
                    }
                }
                report
                    .family_sizes
                    .push(("deg9_double_crosses".into(), deg9_family.len()));
                descs.extend(deg9_family);
            }
        }
        _ => unreachable!(),
    }

    // Structural dedup: canonical interning can alias different index tuples
    // to the same root.
    let mut by_root: HashMap<NodeId, usize> = HashMap::new();
    let mut kept: Vec<Descriptor> = Vec::new();
    for d in descs {
        if let Some(&k) = by_root.get(&d.root) {
            report_merge(&mut report, &kept[k].name, d.name);
        } else {
            by_root.insert(d.root, kept.len());
            kept.push(d);
        }
    }

    // Evaluation-hash dedup over a fixed prime field at three fixed tuples.
    if p >= 4 {
        let mut rng = ChaCha8Rng::seed_from_u64(0xDED0_9A3u64);
        let tuples: Vec<Vec<SymMat3<Fp<PRIME_A>>>> = (0..3)
            .map(|_| (0..p).map(|_| rand_sym(&mut rng, 1 << 20)).collect())
            .collect();
        let mut ctxs: Vec<EvalCtx<Fp<PRIME_A>>> = (0..3).map(|_| EvalCtx::new()).collect();
        let mut seen: HashMap<(Vec<u32>, [u64; 3]), usize> = HashMap::new();
        let mut kept2: Vec<Descriptor> = Vec::new();
        for d in kept {
            let mut key = [0u64; 3];
            for (t, ctx) in ctxs.iter_mut().enumerate() {
                key[t] = eval(arena, d.root, &tuples[t], ctx).scalar().0;
            }
            match seen.get(&(d.multidegree.clone(), key)) {
                Some(&k) => report_merge(&mut report, &kept2[k].name, d.name),
                None => {
                    seen.insert((d.multidegree.clone(), key), kept2.len());
                    kept2.push(d);
                }
            }
        }
        kept = kept2;
    }

    Ok((kept, report))
}

fn report_merge(report: &mut DedupReport, kept: &str, merged: String) {
    if let Some(entry) = report.merged.iter_mut().find(|(k, _)| k == kept) {
        entry.1.push(merged);
    } else {
        report.merged.push((kept.to_string(), vec![merged]));
    }
}

#[derive(Clone, Debug)]
pub struct InvarianceReport {
    pub name: String,
    pub trials: Vec<bool>,
    pub pass: bool,
}

fn trial_rng(seed: u64, trial: u32) -> ChaCha8Rng {
    // per-trial seeds derived deterministically from the master seed
    ChaCha8Rng::seed_from_u64(seed ^ (0x9E37_79B9_7F4A_7C15u64.wrapping_mul(u64::from(trial) + 1)))
}

fn draw_trial(
    arity: usize,
    seed: u64,
    trial: u32,
) -> (Vec<SymMat3<Int>>, Vec<SymMat3<Int>>) {
    let mut rng = trial_rng(seed, trial);
    let tuple: Vec<SymMat3<Int>> = (0..arity).map(|_| rand_sym(&mut rng, 4)).collect();
    let g = rand_sl3::<Int>(rng.gen(), 3).expect("steps >= 1");
    let moved = tuple.iter().map(|x| act(&g, x)).collect();
    (tuple, moved)
}

/// Exact invariance test: draws a random integer tuple and a random
/// unimodular g per trial and compares the two evaluations. Failures are
/// recorded per trial, not raised.
pub fn check_invariance(
    arena: &ExprArena,
    desc: &Descriptor,
    trials: u32,
    seed: u64,
) -> InvarianceReport {
    let mut results = Vec::with_capacity(trials as usize);
    let mut ctx = EvalCtx::new();
    for t in 0..trials {
        let (tuple, moved) = draw_trial(desc.arity as usize, seed, t);
        ctx.reset();
        let base = eval(arena, desc.root, &tuple, &mut ctx).scalar();
        ctx.reset();
        let after = eval(arena, desc.root, &moved, &mut ctx).scalar();
        results.push(base == after);
    }
    InvarianceReport {
        name: desc.name.clone(),
        pass: results.iter().all(|&b| b),
        trials: results,
    }
}

/// Invariance for a whole family at once, sharing the per-tuple evaluation
/// cache across descriptors (the polarization families overlap heavily in
/// their cross subtrees). Returns per-descriptor pass flags.
pub fn batch_invariance(
    arena: &ExprArena,
    descs: &[Descriptor],
    trials: u32,
    seed: u64,
) -> Vec<bool> {
    if descs.is_empty() {
        return Vec::new();
    }
    let arity = descs[0].arity as usize;
    assert!(descs.iter().all(|d| d.arity as usize == arity));
    let mut pass = vec![true; descs.len()];
    let mut ctx_a = EvalCtx::new();
    let mut ctx_b = EvalCtx::new();
    for t in 0..trials {
        let (tuple, moved) = draw_trial(arity, seed, t);
        ctx_a.reset();
        ctx_b.reset();
        for (k, d) in descs.iter().enumerate() {
            let base = eval(arena, d.root, &tuple, &mut ctx_a).scalar();
            let after = eval(arena, d.root, &moved, &mut ctx_b).scalar();
            if base != after {
                pass[k] = false;
            }
        }
    }
    pass
}

/// Exact multihomogeneity: scaling slot i by an integer lambda_i scales the
/// value by prod lambda_i^(d_i).
pub fn check_multihomogeneous(arena: &ExprArena, desc: &Descriptor, seed: u64) -> bool {
    batch_multihomogeneous(arena, std::slice::from_ref(desc), seed)[0]
}

pub fn batch_multihomogeneous(arena: &ExprArena, descs: &[Descriptor], seed: u64) -> Vec<bool> {
    if descs.is_empty() {
        return Vec::new();
    }
    let arity = descs[0].arity as usize;
    assert!(descs.iter().all(|d| d.arity as usize == arity));
    let mut pass = vec![true; descs.len()];
    let mut ctx_a = EvalCtx::new();
    let mut ctx_b = EvalCtx::new();
    const LAMBDAS: [i64; 6] = [2, 3, 5, 7, 11, 13];
    for t in 0..3u32 {
        let mut rng = trial_rng(seed ^ 0x4d48, t);
        let tuple: Vec<SymMat3<Int>> = (0..arity).map(|_| rand_sym(&mut rng, 4)).collect();
        let lambdas: Vec<i64> = (0..arity)
            .map(|_| LAMBDAS[rng.gen_range(0..LAMBDAS.len())])
            .collect();
        let scaled: Vec<SymMat3<Int>> = tuple
            .iter()
            .zip(&lambdas)
            .map(|(x, &l)| x.scale(&Int::from(l)))
            .collect();
        ctx_a.reset();
        ctx_b.reset();
        for (k, d) in descs.iter().enumerate() {
            let base = eval(arena, d.root, &tuple, &mut ctx_a).scalar();
            let after = eval(arena, d.root, &scaled, &mut ctx_b).scalar();
            let mut factor = Int::from(1);
            for (i, &l) in lambdas.iter().enumerate() {
                for _ in 0..d.multidegree[i] {
                    factor *= Int::from(l);
                }
            }
            if after != base * factor {
                pass[k] = false;
            }
        }
    }
    pass
}

/// Coefficients (c30, c21, c12, c03) of det(ax + by):
/// c30 = det x, c21 = f(x,x,y)/2, c12 = f(x,y,y)/2, c03 = det y.
pub fn binary_cubic_of_pencil<S: Field>(x: &SymMat3<S>, y: &SymMat3<S>) -> (S, S, S, S) {
    (
        det3(x),
        trilinear_f(x, x, y).half(),
        trilinear_f(x, y, y).half(),
        det3(y),
    )
}

/// Constructive section of the pencil map on a factored cubic
/// `lambda * b^(3-N) * prod (a - alpha_i b)`: returns (x, y) with
/// x = e_1 + ... + e_N and y = -sum(alpha_i e_i) + e_(N+1) + ... + e_3,
/// together with the inherent scale factor 1/lambda such that
/// det(ax + by) = (1/lambda) * g(a, b).
pub fn pencil_from_factored_cubic(
    lambda: &Rat,
    roots: &[Rat],
) -> Result<(SymMat3<Rat>, SymMat3<Rat>, Rat), CoreError> {
    if lambda.is_zero() {
        return Err(CoreError::InvalidParameter(
            "leading scalar must be nonzero".into(),
        ));
    }
    let n = roots.len();
    if n > 3 {
        return Err(CoreError::InvalidParameter(format!(
            "a binary cubic has at most 3 roots, got {n}"
        )));
    }
    let mut x = SymMat3::<Rat>::zero();
    let mut y = SymMat3::<Rat>::zero();
    for i in 0..3 {
        if i < n {
            *x.entry_mut(i + 1, i + 1) = Rat::one();
            *y.entry_mut(i + 1, i + 1) = -roots[i].clone();
        } else {
            *y.entry_mut(i + 1, i + 1) = Rat::one();
        }
    }
    Ok((x, y, lambda.inv().expect("nonzero")))
}

/// Krull dimension d(p) = 6p - 8 of the invariant algebra, p >= 2.
pub fn krull_dim(p: u32) -> Result<u32, CoreError> {
    if p < 2 {
        return Err(CoreError::InvalidParameter(
            "krull_dim requires p >= 2".into(),
        ));
    }
    Ok(6 * p - 8)
}
