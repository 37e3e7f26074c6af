//! Constructors for every graph in the classification: the parameterized
//! bases `T1..T8`, the thirty sporadic graphs `H1..H30`, and the eight
//! infinite families `G1..G8`, together with their expected `(a, b)` and a
//! classifier that maps an arbitrary graph back into the catalog.
//!
//! Base parameters count vertices along a route, ends included, so a route
//! with parameter `n` has `n - 1` edges and parameter 1 identifies its two
//! ends. Every cycle that hangs off a base is a triangle. Parameter order per
//! type:
//!
//! | type | parameters | minimums |
//! |------|------------|----------|
//! | T1 | `n, m, k` | all ≥ 1 |
//! | T2 | `k, l, n, m` | `k, l ≥ 1`, `n, m ≥ 2` |
//! | T3 | `n, m, k, l` | `n, m, k ≥ 2`, `l ≥ 1` |
//! | T4 | `k, p, q, n, m` | `k ≥ 1`, rest ≥ 2 |
//! | T5 | `n, m, k, p, q` | all ≥ 2 |
//! | T6 | `n, m, k, p` | all ≥ 2 |
//! | T7 | `n, m, k, l, p, q` | all ≥ 2 |
//! | T8 | `n, m, k, l, p, q` | all ≥ 2 |

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use crate::bases::BaseType;
use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Identifies a catalog member.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    /// `H_i`, `i` in `1..=30`.
    H(u8),
    /// `G_j` with its parameter vector.
    G { j: u8, params: Vec<usize> },
}

impl FamilyId {
    /// Family label without parameters, e.g. `H7` or `G2`.
    pub fn kind(&self) -> String {
        match self {
            FamilyId::H(i) => format!("H{i}"),
            FamilyId::G { j, .. } => format!("G{j}"),
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::H(i) => write!(f, "H{i}"),
            FamilyId::G { j, params } => {
                let names = family_parameter_names(*j).unwrap_or(&[]);
                let body: Vec<String> = names
                    .iter()
                    .zip(params)
                    .map(|(name, value)| format!("{name}={value}"))
                    .collect();
                write!(f, "G{j}({})", body.join(","))
            }
        }
    }
}

impl Serialize for FamilyId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Expected `(a, b)` for `H_1..H_30`.
pub const H_EXPECTED: [(i64, i64); 30] = [
    (1, 6),
    (1, 3),
    (2, 2),
    (1, 4),
    (2, 1),
    (1, 3),
    (3, 0),
    (2, 2),
    (2, 1),
    (1, 3),
    (3, 0),
    (1, 6),
    (0, 8),
    (2, 2),
    (1, 4),
    (2, 2),
    (1, 4),
    (1, 4),
    (0, 6),
    (3, -1),
    (2, 1),
    (2, 1),
    (1, 3),
    (2, 2),
    (1, 4),
    (0, 6),
    (3, -1),
    (2, 1),
    (1, 3),
    (2, 2),
];

/// Base topology of each `H_i`.
pub const H_BASE_TYPE: [u8; 30] = [
    1, 1, 2, 2, 2, 2, 3, 4, 4, 4, 6, 6, 6, 6, 6, 7, 7, 7, 7, 7, 7, 7, 7, 8, 8, 8, 8, 8, 8, 8,
];

/// Base topology of each `G_j`.
pub const G_BASE_TYPE: [u8; 8] = [2, 2, 4, 6, 7, 7, 8, 8];

/// Expected `(a, b)` of any member of `G_j`.
pub fn expected_ab(id: &FamilyId) -> Result<(i64, i64)> {
    match id {
        FamilyId::H(i) => H_EXPECTED
            .get((*i as usize).wrapping_sub(1))
            .copied()
            .ok_or(Error::IndexOutOfRange(*i as usize)),
        FamilyId::G { j, params } => match j {
            1 | 4 => Ok((2, 2)),
            2 | 3 | 5 | 6 | 8 => Ok((2, 1)),
            7 => {
                let b = *params.first().ok_or_else(|| invalid("G7", "missing b"))?;
                Ok((3, b as i64))
            }
            _ => Err(Error::IndexOutOfRange(*j as usize)),
        },
    }
}

pub fn family_parameter_names(j: u8) -> Option<&'static [&'static str]> {
    match j {
        1 | 4 => Some(&["l1"]),
        2 | 3 | 5 | 6 | 8 => Some(&["k1", "k2"]),
        7 => Some(&["b"]),
        _ => None,
    }
}

fn invalid(family: impl Into<String>, reason: impl Into<String>) -> Error {
    Error::InvalidParameters { family: family.into(), reason: reason.into() }
}

/// Graph under construction, with the routes of a base kept by name.
struct Sketch {
    n: usize,
    edges: Vec<(usize, usize)>,
    routes: BTreeMap<char, Vec<usize>>,
    label: String,
}

impl Sketch {
    fn new(label: impl Into<String>) -> Self {
        Sketch { n: 0, edges: Vec::new(), routes: BTreeMap::new(), label: label.into() }
    }

    fn vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    fn vertices<const K: usize>(&mut self) -> [usize; K] {
        std::array::from_fn(|_| self.vertex())
    }

    /// Route `name` with `count` vertices from `first` to `last` (either may
    /// be fresh). With `count == 1` both ends are the same vertex.
    fn route(&mut self, name: char, first: Option<usize>, last: Option<usize>, count: usize) -> Vec<usize> {
        let mut vs = Vec::with_capacity(count);
        if count == 1 {
            let v = first.or(last).unwrap_or_else(|| self.vertex());
            vs.push(v);
        } else {
            vs.push(first.unwrap_or_else(|| self.vertex()));
            for _ in 2..count {
                let v = self.vertex();
                vs.push(v);
            }
            let end = last.unwrap_or_else(|| self.vertex());
            vs.push(end);
            for w in vs.windows(2) {
                self.edges.push((w[0], w[1]));
            }
        }
        self.routes.insert(name, vs.clone());
        vs
    }

    fn triangle(&mut self, at: usize) {
        let [x, y] = self.vertices();
        self.edges.extend([(at, x), (x, y), (y, at)]);
    }

    fn pendants(&mut self, at: usize, count: usize) {
        for _ in 0..count {
            let x = self.vertex();
            self.edges.push((at, x));
        }
    }

    /// Interior vertices of a named route.
    fn interior(&self, name: char) -> Vec<usize> {
        let r = &self.routes[&name];
        if r.len() <= 2 {
            Vec::new()
        } else {
            r[1..r.len() - 1].to_vec()
        }
    }

    fn start(&self, name: char) -> usize {
        self.routes[&name][0]
    }

    fn finish(self) -> Result<Graph> {
        let g = Graph::from_edge_list(self.n, &self.edges)?;
        if g.size() != self.edges.len() {
            return Err(invalid(self.label, "parameters create a multiple edge"));
        }
        Ok(g)
    }
}

fn check_params(label: &str, params: &[usize], minimums: &[usize]) -> Result<()> {
    if params.len() != minimums.len() {
        return Err(invalid(label, format!("expected {} parameters, got {}", minimums.len(), params.len())));
    }
    for (i, (&p, &lo)) in params.iter().zip(minimums).enumerate() {
        if p < lo {
            return Err(invalid(label, format!("parameter {} must be at least {lo}", i + 1)));
        }
    }
    Ok(())
}

fn sketch_base(t: BaseType, params: &[usize]) -> Result<Sketch> {
    let label = t.to_string();
    let mut s = Sketch::new(label.clone());
    match t.tag() {
        1 => {
            check_params(&label, params, &[1, 1, 1])?;
            let c = s.vertex();
            for (name, &count) in ['u', 'v', 'w'].iter().zip(params) {
                let r = s.route(*name, None, Some(c), count);
                s.triangle(r[0]);
            }
        }
        2 => {
            check_params(&label, params, &[1, 1, 2, 2])?;
            let [k, l, n, m] = [params[0], params[1], params[2], params[3]];
            let [a, b] = s.vertices();
            let w = s.route('w', None, Some(a), k);
            let r = s.route('r', None, Some(b), l);
            s.route('u', Some(a), Some(b), n);
            s.route('v', Some(a), Some(b), m);
            s.triangle(w[0]);
            s.triangle(r[0]);
        }
        3 => {
            check_params(&label, params, &[2, 2, 2, 1])?;
            let [p, q] = s.vertices();
            s.route('u', Some(p), Some(q), params[0]);
            s.route('v', Some(p), Some(q), params[1]);
            s.route('w', Some(p), Some(q), params[2]);
            let r = s.route('r', None, Some(q), params[3]);
            s.triangle(r[0]);
        }
        4 => {
            check_params(&label, params, &[1, 2, 2, 2, 2])?;
            let [k, pp, qq, n, m] = [params[0], params[1], params[2], params[3], params[4]];
            let [p, q, r] = s.vertices();
            s.route('u', Some(p), Some(q), n);
            s.route('v', Some(p), Some(q), m);
            s.route('s', Some(p), Some(r), pp);
            s.route('t', Some(q), Some(r), qq);
            let w = s.route('w', None, Some(r), k);
            s.triangle(w[0]);
        }
        5 => {
            check_params(&label, params, &[2; 5])?;
            let [n, m, k, pp, qq] = [params[0], params[1], params[2], params[3], params[4]];
            let [p, q, r] = s.vertices();
            s.route('u', Some(p), Some(q), n);
            s.route('v', Some(p), Some(r), m);
            s.route('s', Some(p), Some(r), pp);
            s.route('w', Some(r), Some(q), k);
            s.route('t', Some(r), Some(q), qq);
        }
        6 => {
            check_params(&label, params, &[2; 4])?;
            let [p, q] = s.vertices();
            for (name, &count) in ['u', 'v', 'w', 's'].iter().zip(params) {
                s.route(*name, Some(p), Some(q), count);
            }
        }
        7 => {
            check_params(&label, params, &[2; 6])?;
            let [n, m, k, l, pp, qq] = [params[0], params[1], params[2], params[3], params[4], params[5]];
            let [a, b, c, d] = s.vertices();
            s.route('u', Some(a), Some(b), n);
            s.route('w', Some(a), Some(b), k);
            s.route('v', Some(c), Some(d), m);
            s.route('r', Some(c), Some(d), l);
            s.route('s', Some(a), Some(c), pp);
            s.route('t', Some(b), Some(d), qq);
        }
        8 => {
            check_params(&label, params, &[2; 6])?;
            let [n, m, k, l, pp, qq] = [params[0], params[1], params[2], params[3], params[4], params[5]];
            let [a, b, c, d] = s.vertices();
            s.route('u', Some(a), Some(b), n);
            s.route('v', Some(a), Some(c), m);
            s.route('w', Some(a), Some(d), k);
            s.route('t', Some(b), Some(c), qq);
            s.route('s', Some(d), Some(b), pp);
            s.route('r', Some(c), Some(d), l);
        }
        _ => unreachable!("BaseType holds 1..=8"),
    }
    Ok(s)
}

/// The base `T_i` with the given route parameters (see the module table).
pub fn build_base(t: BaseType, params: &[usize]) -> Result<Graph> {
    sketch_base(t, params)?.finish()
}

fn base(tag: u8, params: &[usize]) -> Sketch {
    sketch_base(BaseType::new(tag).unwrap(), params).expect("catalog parameters are valid")
}

/// `H_i` for `i` in `1..=30`.
pub fn build_h(i: usize) -> Result<Graph> {
    let mut s = match i {
        1 => base(1, &[1, 1, 1]),
        2 => base(1, &[4, 4, 4]),
        3 => base(2, &[1, 1, 2, 4]),
        4 => base(2, &[1, 1, 4, 4]),
        5 => base(2, &[2, 2, 4, 4]),
        6 => base(2, &[4, 4, 4, 4]),
        7 => {
            let mut s = base(3, &[3, 3, 3, 1]);
            // the triangle at q occupies the two vertices created last
            let (x1, x2) = (s.n - 2, s.n - 1);
            for v in [x1, x2] {
                s.pendants(v, 1);
            }
            for name in ['u', 'v', 'w'] {
                for v in s.interior(name) {
                    s.pendants(v, 1);
                }
            }
            s
        }
        8 => base(4, &[1, 2, 2, 3, 3]),
        9 => base(4, &[2, 4, 4, 4, 2]),
        10 => base(4, &[4, 4, 4, 4, 4]),
        11 => {
            let mut s = base(6, &[3, 3, 3, 3]);
            for name in ['u', 'v', 'w', 's'] {
                for v in s.interior(name) {
                    s.pendants(v, 1);
                }
            }
            s
        }
        12 => base(6, &[2, 3, 3, 3]),
        13 => base(6, &[3, 3, 3, 3]),
        14 => base(6, &[2, 4, 4, 4]),
        15 => base(6, &[4, 4, 4, 4]),
        16 => base(7, &[3, 3, 2, 2, 2, 2]),
        17 => base(7, &[3, 3, 2, 2, 3, 3]),
        18 => base(7, &[3, 3, 3, 3, 2, 2]),
        19 => base(7, &[3, 3, 3, 3, 3, 3]),
        20 => base(7, &[4, 4, 2, 2, 2, 2]),
        21 => base(7, &[4, 4, 2, 2, 4, 4]),
        22 => base(7, &[4, 4, 4, 4, 2, 2]),
        23 => base(7, &[4, 4, 4, 4, 4, 4]),
        24 => base(8, &[3, 2, 2, 3, 2, 2]),
        25 => base(8, &[3, 2, 3, 3, 2, 3]),
        26 => base(8, &[3, 3, 3, 3, 3, 3]),
        27 => base(8, &[4, 2, 2, 4, 2, 2]),
        28 => base(8, &[4, 2, 4, 4, 2, 4]),
        29 => base(8, &[4, 4, 4, 4, 4, 4]),
        30 => {
            let mut s = base(8, &[2, 2, 2, 3, 3, 3]);
            let a = s.start('u');
            s.pendants(a, 1);
            s
        }
        _ => return Err(Error::IndexOutOfRange(i)),
    };
    s.label = format!("H{i}");
    s.finish()
}

/// A member of `G_j`. Parameters (see [`family_parameter_names`]):
/// `l1 ≥ 1` for `G1`, `G4`; `b ≥ 1` for `G7`; `(k1, k2)` with
/// `max(k1, k2) ≥ 1` otherwise.
pub fn build_g_family(j: usize, params: &[usize]) -> Result<Graph> {
    let label = format!("G{j}");
    let names = family_parameter_names(j as u8).ok_or(Error::IndexOutOfRange(j))?;
    if params.len() != names.len() {
        return Err(invalid(&label, format!("expected {} parameters, got {}", names.len(), params.len())));
    }
    match names {
        ["k1", "k2"] if params[0].max(params[1]) < 1 => {
            return Err(invalid(&label, "max(k1, k2) must be at least 1"));
        }
        [_] if params[0] < 1 => {
            return Err(invalid(&label, format!("{} must be at least 1", names[0])));
        }
        _ => {}
    }
    let decorate = |s: &mut Sketch, routes: &[char], each: usize| {
        for &name in routes {
            for v in s.interior(name) {
                s.pendants(v, each);
            }
        }
    };
    let mut s = match j {
        1 => {
            let mut s = base(2, &[1, 1, 4, params[0] + 2]);
            decorate(&mut s, &['v'], 2);
            s
        }
        2 => {
            let mut s = base(2, &[params[0] + 2, params[1] + 2, 4, 4]);
            decorate(&mut s, &['w', 'r'], 1);
            s
        }
        3 => {
            let mut s = base(4, &[params[0] + 2, 4, 4, params[1] + 2, 4]);
            decorate(&mut s, &['w', 'u'], 1);
            s
        }
        4 => {
            let mut s = base(6, &[params[0] + 2, 4, 4, 4]);
            decorate(&mut s, &['u'], 2);
            s
        }
        5 => {
            let mut s = base(7, &[4, 4, 4, 4, params[0] + 2, params[1] + 2]);
            decorate(&mut s, &['s', 't'], 1);
            s
        }
        6 => {
            let mut s = base(7, &[4, 4, params[0] + 2, params[1] + 2, 4, 4]);
            decorate(&mut s, &['w', 'r'], 1);
            s
        }
        7 => {
            let mut s = base(8, &[2; 6]);
            for v in 0..4 {
                s.pendants(v, params[0]);
            }
            s
        }
        8 => {
            let mut s = base(8, &[4, 4, params[0] + 2, 4, 4, params[1] + 2]);
            decorate(&mut s, &['w', 't'], 1);
            s
        }
        _ => unreachable!(),
    };
    s.label = label;
    s.finish()
}

/// Builds any catalog member.
pub fn build(id: &FamilyId) -> Result<Graph> {
    match id {
        FamilyId::H(i) => build_h(*i as usize),
        FamilyId::G { j, params } => build_g_family(*j as usize, params),
    }
}

/// Every catalog member with at most `max_order` vertices, one entry per
/// parameter tuple (isomorphic duplicates included), in the fixed order:
/// `H1..H30`, then `G1..G8` with parameters ascending lexicographically.
pub fn catalog_sweep(max_order: usize) -> Vec<(FamilyId, Graph)> {
    let mut out = Vec::new();
    for i in 1..=30u8 {
        let g = build_h(i as usize).expect("H table is valid");
        if g.order() <= max_order {
            out.push((FamilyId::H(i), g));
        }
    }
    for j in 1..=8u8 {
        let arity = family_parameter_names(j).unwrap().len();
        let order_of = |params: &[usize]| build_g_family(j as usize, params).map(|g| g.order());
        if arity == 1 {
            for x in 1.. {
                let g = build_g_family(j as usize, &[x]).unwrap();
                if g.order() > max_order {
                    break;
                }
                out.push((FamilyId::G { j, params: vec![x] }, g));
            }
        } else {
            // order is increasing in each parameter; (0, 0) itself is excluded
            // but bounds the sweep from below
            for k1 in 0.. {
                if k1 > 0 && order_of(&[k1, 0]).unwrap() > max_order {
                    break;
                }
                if k1 == 0 && order_of(&[0, 1]).unwrap() > max_order {
                    break;
                }
                for k2 in 0.. {
                    if k1 == 0 && k2 == 0 {
                        continue;
                    }
                    let g = build_g_family(j as usize, &[k1, k2]).unwrap();
                    if g.order() > max_order {
                        break;
                    }
                    out.push((FamilyId::G { j, params: vec![k1, k2] }, g));
                }
            }
        }
    }
    out
}

/// Catalog members on exactly `n` vertices, deduplicated by isomorphism
/// (the first member in catalog order is kept).
pub fn family_members_of_order(n: usize) -> Vec<(FamilyId, Graph)> {
    let mut seen = std::collections::HashSet::new();
    catalog_sweep(n)
        .into_iter()
        .filter(|(_, g)| g.order() == n)
        .filter(|(_, g)| seen.insert(canonical_form(g)))
        .collect()
}

/// Lookup table from canonical form to the first catalog member with that
/// form, for all members up to a given order.
#[derive(Debug, Clone)]
pub struct Catalog {
    max_order: usize,
    by_form: HashMap<CanonicalForm, FamilyId>,
    /// Pairs `(kept, duplicate)` of distinct ids with isomorphic graphs.
    pub collisions: Vec<(FamilyId, FamilyId)>,
}

impl Catalog {
    pub fn up_to(max_order: usize) -> Self {
        let mut by_form: HashMap<CanonicalForm, FamilyId> = HashMap::new();
        let mut collisions = Vec::new();
        for (id, g) in catalog_sweep(max_order) {
            match by_form.entry(canonical_form(&g)) {
                std::collections::hash_map::Entry::Occupied(e) => {
                    collisions.push((e.get().clone(), id));
                }
                std::collections::hash_map::Entry::Vacant(e) => {
                    e.insert(id);
                }
            }
        }
        Catalog { max_order, by_form, collisions }
    }

    pub fn max_order(&self) -> usize {
        self.max_order
    }

    pub fn len(&self) -> usize {
        self.by_form.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_form.is_empty()
    }

    pub fn contains_form(&self, form: &CanonicalForm) -> bool {
        self.by_form.contains_key(form)
    }

    /// Canonical forms of members with exactly `n` vertices.
    pub fn forms_of_order(&self, n: usize) -> Vec<(&CanonicalForm, &FamilyId)> {
        let mut v: Vec<_> = self
            .by_form
            .iter()
            .filter(|(f, _)| crate::io::parse_graph6(f.as_graph6()).map(|g| g.order()) == Ok(n))
            .collect();
        v.sort_by(|a, b| a.1.cmp(b.1));
        v
    }

    pub fn classify_form(&self, form: &CanonicalForm) -> Option<FamilyId> {
        self.by_form.get(form).cloned()
    }

    /// Panics if `g` is larger than the table covers.
    pub fn classify(&self, g: &Graph) -> Option<FamilyId> {
        assert!(g.order() <= self.max_order, "graph order exceeds catalog bound");
        self.classify_form(&canonical_form(g))
    }
}

/// Catalog member isomorphic to `g`, if any.
pub fn classify(g: &Graph) -> Option<FamilyId> {
    if !g.is_tricyclic() {
        return None;
    }
    let form = canonical_form(g);
    family_members_of_order(g.order())
        .into_iter()
        .find(|(_, h)| canonical_form(h) == form)
        .map(|(id, _)| id)
}
