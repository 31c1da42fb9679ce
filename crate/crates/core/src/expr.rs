//! Evaluation trees for invariants: leaves are matrix slots, internal nodes
//! the Jordan-algebra primitives (det, adjugate, cross, trilinear form,
//! trace form). Trees are hash-consed into an arena with canonical argument
//! order, so symmetric variants (f arguments permuted, cross factors
//! swapped) intern to the same node and cached evaluation is shared across
//! descriptors.

use crate::error::CoreError;
use crate::jordan::{adjugate, cross, det3, trace_form, SymMat3};
use crate::scalar::Ring;
use serde_json::{json, Value as Json};
use std::collections::HashMap;

pub type NodeId = u32;

/// Entry index order matches the SymMat3 text form: d1 d2 d3 o12 o13 o23.
pub const ENTRY_NAMES: [&str; 6] = ["d1", "d2", "d3", "o12", "o13", "o23"];

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Node {
    /// Matrix leaf: the s-th matrix of the tuple.
    Slot(u8),
    /// Adjugate n(T).
    Adj(NodeId),
    /// Cross product T1 x T2 (factors canonically sorted).
    Cross(NodeId, NodeId),
    /// det T.
    Det(NodeId),
    /// Trilinear form f(T1,T2,T3) (arguments canonically sorted).
    TriF(NodeId, NodeId, NodeId),
    /// Trace form <T1, T2> (arguments canonically sorted).
    Trace(NodeId, NodeId),
    /// Raw entry probe (k in 0..6): deliberately NOT an invariant; exists so
    /// non-invariance is testable through the same machinery.
    Entry(u8, u8),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Kind {
    Mat,
    Scalar,
}

#[derive(Default)]
pub struct ExprArena {
    nodes: Vec<Node>,
    index: HashMap<Node, NodeId>,
}

impl ExprArena {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, id: NodeId) -> Node {
        self.nodes[id as usize]
    }

    fn intern(&mut self, n: Node) -> NodeId {
        if let Some(&id) = self.index.get(&n) {
            return id;
        }
        let id = self.nodes.len() as NodeId;
        self.nodes.push(n);
        self.index.insert(n, id);
        id
    }

    pub fn kind(&self, id: NodeId) -> Kind {
        match self.node(id) {
            Node::Slot(_) | Node::Adj(_) | Node::Cross(_, _) => Kind::Mat,
            Node::Det(_) | Node::TriF(_, _, _) | Node::Trace(_, _) | Node::Entry(_, _) => {
                Kind::Scalar
            }
        }
    }

    fn want_mat(&self, id: NodeId) {
        assert!(
            self.kind(id) == Kind::Mat,
            "matrix-valued subtree required"
        );
    }

    pub fn slot(&mut self, s: u8) -> NodeId {
        self.intern(Node::Slot(s))
    }

    pub fn adj(&mut self, t: NodeId) -> NodeId {
        self.want_mat(t);
        self.intern(Node::Adj(t))
    }

    pub fn cross(&mut self, a: NodeId, b: NodeId) -> NodeId {
        self.want_mat(a);
        self.want_mat(b);
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        self.intern(Node::Cross(a, b))
    }

    pub fn det(&mut self, t: NodeId) -> NodeId {
        self.want_mat(t);
        self.intern(Node::Det(t))
    }

    pub fn trif(&mut self, a: NodeId, b: NodeId, c: NodeId) -> NodeId {
        self.want_mat(a);
        self.want_mat(b);
        self.want_mat(c);
        let mut v = [a, b, c];
        v.sort_unstable();
        self.intern(Node::TriF(v[0], v[1], v[2]))
    }

    pub fn trace(&mut self, a: NodeId, b: NodeId) -> NodeId {
        self.want_mat(a);
        self.want_mat(b);
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        self.intern(Node::Trace(a, b))
    }

    pub fn entry(&mut self, s: u8, k: u8) -> NodeId {
        assert!(k < 6);
        self.intern(Node::Entry(s, k))
    }

    /// Multidegree of the subtree in slots 0..arity.
    pub fn multidegree(&self, id: NodeId, arity: usize) -> Vec<u32> {
        let mut md = vec![0u32; arity];
        self.accum_multidegree(id, 1, &mut md);
        md
    }

    fn accum_multidegree(&self, id: NodeId, mult: u32, md: &mut [u32]) {
        match self.node(id) {
            Node::Slot(s) | Node::Entry(s, _) => md[s as usize] += mult,
            Node::Adj(t) => self.accum_multidegree(t, 2 * mult, md),
            Node::Det(t) => self.accum_multidegree(t, 3 * mult, md),
            Node::Cross(a, b) | Node::Trace(a, b) => {
                self.accum_multidegree(a, mult, md);
                self.accum_multidegree(b, mult, md);
            }
            Node::TriF(a, b, c) => {
                self.accum_multidegree(a, mult, md);
                self.accum_multidegree(b, mult, md);
                self.accum_multidegree(c, mult, md);
            }
        }
    }
}

#[derive(Clone, Debug)]
pub enum Value<S> {
    Mat(SymMat3<S>),
    Sc(S),
}

impl<S> Value<S> {
    pub fn scalar(self) -> S {
        match self {
            Value::Sc(s) => s,
            Value::Mat(_) => panic!("expected scalar value"),
        }
    }

    fn mat(&self) -> &SymMat3<S> {
        match self {
            Value::Mat(m) => m,
            Value::Sc(_) => panic!("expected matrix value"),
        }
    }
}

/// Per-tuple evaluation cache. Reuse across the roots of one generator set
/// to share common subexpressions (the pairwise and iterated crosses of the
/// polarization families dominate); `reset` between tuples.
pub struct EvalCtx<S> {
    cache: Vec<Option<Value<S>>>,
    cross_of: HashMap<(NodeId, NodeId), SymMat3<S>>,
}

impl<S: Ring> EvalCtx<S> {
    pub fn new() -> Self {
        EvalCtx {
            cache: Vec::new(),
            cross_of: HashMap::new(),
        }
    }

    pub fn reset(&mut self) {
        self.cache.clear();
        self.cross_of.clear();
    }
}

impl<S: Ring> Default for EvalCtx<S> {
    fn default() -> Self {
        Self::new()
    }
}

pub fn eval<S: Ring>(
    arena: &ExprArena,
    id: NodeId,
    tuple: &[SymMat3<S>],
    ctx: &mut EvalCtx<S>,
) -> Value<S> {
    if ctx.cache.len() < arena.len() {
        ctx.cache.resize(arena.len(), None);
    }
    eval_inner(arena, id, tuple, ctx)
}

fn eval_inner<S: Ring>(
    arena: &ExprArena,
    id: NodeId,
    tuple: &[SymMat3<S>],
    ctx: &mut EvalCtx<S>,
) -> Value<S> {
    if let Some(v) = &ctx.cache[id as usize] {
        return v.clone();
    }
    let v = match arena.node(id) {
        Node::Slot(s) => Value::Mat(tuple[s as usize].clone()),
        Node::Adj(t) => {
            let m = eval_inner(arena, t, tuple, ctx);
            Value::Mat(adjugate(m.mat()))
        }
        Node::Cross(a, b) => Value::Mat(cross_cached(arena, a, b, tuple, ctx)),
        Node::Det(t) => {
            let m = eval_inner(arena, t, tuple, ctx);
            Value::Sc(det3(m.mat()))
        }
        Node::TriF(a, b, c) => {
            // f(A,B,C) = <A x B, C>; the cross is shared across the slots C
            let ab = cross_cached(arena, a, b, tuple, ctx);
            let cm = eval_inner(arena, c, tuple, ctx);
            Value::Sc(trace_form(&ab, cm.mat()))
        }
        Node::Trace(a, b) => {
            let am = eval_inner(arena, a, tuple, ctx);
            let bm = eval_inner(arena, b, tuple, ctx);
            Value::Sc(trace_form(am.mat(), bm.mat()))
        }
        Node::Entry(s, k) => {
            let m = &tuple[s as usize];
            Value::Sc(m.entries()[k as usize].clone())
        }
    };
    ctx.cache[id as usize] = Some(v.clone());
    v
}

fn cross_cached<S: Ring>(
    arena: &ExprArena,
    a: NodeId,
    b: NodeId,
    tuple: &[SymMat3<S>],
    ctx: &mut EvalCtx<S>,
) -> SymMat3<S> {
    if let Some(m) = ctx.cross_of.get(&(a, b)) {
        return m.clone();
    }
    let am = eval_inner(arena, a, tuple, ctx);
    let bm = eval_inner(arena, b, tuple, ctx);
    let m = cross(am.mat(), bm.mat());
    ctx.cross_of.insert((a, b), m.clone());
    m
}

/// One named multidegree-tagged invariant (or probe) over an arena.
#[derive(Clone, Debug)]
pub struct Descriptor {
    pub name: String,
    pub arity: u8,
    pub multidegree: Vec<u32>,
    pub root: NodeId,
}

impl Descriptor {
    /// The recorded multidegree always equals the multidegree computed from
    /// the tree; constructing a descriptor recomputes and checks it.
    pub fn new(arena: &ExprArena, name: impl Into<String>, arity: u8, root: NodeId) -> Self {
        assert!(
            arena.kind(root) == Kind::Scalar,
            "descriptors are scalar-valued"
        );
        let multidegree = arena.multidegree(root, arity as usize);
        Descriptor {
            name: name.into(),
            arity,
            multidegree,
            root,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.multidegree.iter().sum()
    }

    pub fn evaluate<S: Ring>(&self, arena: &ExprArena, tuple: &[SymMat3<S>]) -> S {
        assert_eq!(tuple.len(), self.arity as usize, "tuple arity mismatch");
        let mut ctx = EvalCtx::new();
        eval(arena, self.root, tuple, &mut ctx).scalar()
    }
}

fn tree_json(arena: &ExprArena, id: NodeId) -> Json {
    match arena.node(id) {
        Node::Slot(s) => json!(["slot", s]),
        Node::Adj(t) => json!(["adj", tree_json(arena, t)]),
        Node::Cross(a, b) => json!(["cross", tree_json(arena, a), tree_json(arena, b)]),
        Node::Det(t) => json!(["det", tree_json(arena, t)]),
        Node::TriF(a, b, c) => json!([
            "f",
            tree_json(arena, a),
            tree_json(arena, b),
            tree_json(arena, c)
        ]),
        Node::Trace(a, b) => json!(["dot", tree_json(arena, a), tree_json(arena, b)]),
        Node::Entry(s, k) => json!(["entry", s, ENTRY_NAMES[k as usize]]),
    }
}

/// Descriptor listing entry: `{name, arity, multidegree, tree}` with the
/// tree in nested prefix form.
pub fn descriptor_json(arena: &ExprArena, d: &Descriptor) -> Json {
    json!({
        "name": d.name,
        "arity": d.arity,
        "multidegree": d.multidegree,
        "tree": tree_json(arena, d.root),
    })
}

fn tree_from_json(arena: &mut ExprArena, v: &Json) -> Result<NodeId, CoreError> {
    let arr = v
        .as_array()
        .ok_or_else(|| CoreError::Parse("tree node must be an array".into()))?;
    let op = arr
        .first()
        .and_then(|x| x.as_str())
        .ok_or_else(|| CoreError::Parse("tree node missing operator".into()))?;
    let child = |arena: &mut ExprArena, k: usize| -> Result<NodeId, CoreError> {
        tree_from_json(
            arena,
            arr.get(k)
                .ok_or_else(|| CoreError::Parse(format!("operator {op} missing argument {k}")))?,
        )
    };
    match op {
        "slot" => {
            let s = arr
                .get(1)
                .and_then(|x| x.as_u64())
                .ok_or_else(|| CoreError::Parse("slot index must be an integer".into()))?;
            Ok(arena.slot(s as u8))
        }
        "adj" => {
            let t = child(arena, 1)?;
            Ok(arena.adj(t))
        }
        "det" => {
            let t = child(arena, 1)?;
            Ok(arena.det(t))
        }
        "cross" => {
            let a = child(arena, 1)?;
            let b = child(arena, 2)?;
            Ok(arena.cross(a, b))
        }
        "dot" => {
            let a = child(arena, 1)?;
            let b = child(arena, 2)?;
            Ok(arena.trace(a, b))
        }
        "f" => {
            let a = child(arena, 1)?;
            let b = child(arena, 2)?;
            let c = child(arena, 3)?;
            Ok(arena.trif(a, b, c))
        }
        "entry" => {
            let s = arr
                .get(1)
                .and_then(|x| x.as_u64())
                .ok_or_else(|| CoreError::Parse("entry slot must be an integer".into()))?;
            let name = arr
                .get(2)
                .and_then(|x| x.as_str())
                .ok_or_else(|| CoreError::Parse("entry name missing".into()))?;
            let k = ENTRY_NAMES
                .iter()
                .position(|&n| n == name)
                .ok_or_else(|| CoreError::Parse(format!("unknown entry {name:?}")))?;
            Ok(arena.entry(s as u8, k as u8))
        }
        other => Err(CoreError::Parse(format!("unknown tree operator {other:?}"))),
    }
}

pub fn descriptor_from_json(arena: &mut ExprArena, v: &Json) -> Result<Descriptor, CoreError> {
    let name = v["name"]
        .as_str()
        .ok_or_else(|| CoreError::Parse("descriptor missing name".into()))?;
    let arity = v["arity"]
        .as_u64()
        .ok_or_else(|| CoreError::Parse("descriptor missing arity".into()))? as u8;
    let root = tree_from_json(arena, &v["tree"])?;
    let d = Descriptor::new(arena, name, arity, root);
    if let Some(md) = v["multidegree"].as_array() {
        let md: Vec<u32> = md.iter().filter_map(|x| x.as_u64()).map(|x| x as u32).collect();
        if md != d.multidegree {
            return Err(CoreError::Parse(format!(
                "declared multidegree {:?} does not match tree multidegree {:?}",
                md, d.multidegree
            )));
        }
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Int;

    #[test]
    fn interning_canonicalizes_symmetry() {
        let mut a = ExprArena::new();
        let s0 = a.slot(0);
        let s1 = a.slot(1);
        let s2 = a.slot(2);
        let c01 = a.cross(s0, s1);
        let c10 = a.cross(s1, s0);
        assert_eq!(c01, c10);
        let f = a.trif(s2, s0, s1);
        let g = a.trif(s1, s2, s0);
        assert_eq!(f, g);
    }

    #[test]
    fn multidegree_from_tree() {
        let mut a = ExprArena::new();
        let s0 = a.slot(0);
        let s1 = a.slot(1);
        let n0 = a.adj(s0);
        let n1 = a.adj(s1);
        let c = a.cross(n0, n1);
        let d = a.det(c);
        assert_eq!(a.multidegree(d, 2), vec![6, 6]);
    }

    #[test]
    fn evaluate_det_descriptor() {
        let mut a = ExprArena::new();
        let s0 = a.slot(0);
        let root = a.det(s0);
        let d = Descriptor::new(&a, "det_x", 1, root);
        assert_eq!(d.multidegree, vec![3]);
        let x: SymMat3<Int> = SymMat3::identity();
        assert_eq!(d.evaluate(&a, &[x]), Int::from(1));
    }

    #[test]
    fn json_round_trip() {
        let mut a = ExprArena::new();
        let s0 = a.slot(0);
        let s1 = a.slot(1);
        let s2 = a.slot(2);
        let n0 = a.adj(s0);
        let n1 = a.adj(s1);
        let n2 = a.adj(s2);
        let root = a.trif(n0, n1, n2);
        let d = Descriptor::new(&a, "f11", 3, root);
        let j = descriptor_json(&a, &d);
        let mut b = ExprArena::new();
        let d2 = descriptor_from_json(&mut b, &j).unwrap();
        assert_eq!(d2.name, "f11");
        assert_eq!(d2.multidegree, vec![2, 2, 2]);
        // same value through both arenas
        let t: Vec<SymMat3<Int>> = vec![
            SymMat3::identity(),
            SymMat3::identity(),
            SymMat3::from_fn(|i, j| Int::from((i + j) as i64)),
        ];
        assert_eq!(d.evaluate(&a, &t), d2.evaluate(&b, &t));
    }
}
