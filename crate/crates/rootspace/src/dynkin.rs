//! Dynkin diagrams of bases: construction from a root system, isomorphism
//! testing, classification labels, ASCII rendering, and a JSON form.

use num_traits::{Signed, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::rootsystem::{Base, RootSystem};
use crate::{rat, rint, Rational};

/// One edge between simple roots `a` and `b` with multiplicity p·q; the
/// arrow, present iff multiplicity ≥ 2, points from the longer root to the
/// shorter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DynkinEdge {
    pub a: usize,
    pub b: usize,
    pub mult: u8,
    pub arrow: Option<(usize, usize)>,
}

/// A Dynkin diagram: nodes carry squared lengths relative to the shortest
/// root of their connected component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinDiagram {
    pub nodes: Vec<Rational>,
    pub edges: Vec<DynkinEdge>,
    pub components: Vec<Vec<usize>>,
}

/// Builds the diagram of a base: edge multiplicities from the integer pair
/// (p, q) of the angle classification, arrows from longer to shorter.
/// Distinct simple roots at an acute angle are rejected.
pub fn build_diagram(rs: &RootSystem, base: &Base) -> Result<DynkinDiagram> {
    let simple: Vec<&[Rational]> = base
        .simple_roots
        .iter()
        .map(|&i| rs.roots[i].as_slice())
        .collect();
    let k = simple.len();
    let mut lengths: Vec<Rational> = simple.iter().map(|s| rs.inner(s, s)).collect();
    let mut edges = Vec::new();
    for i in 0..k {
        for j in (i + 1)..k {
            let ip = rs.inner(simple[i], simple[j]);
            if ip.is_positive() {
                return Err(Error::AcutePair(format!(
                    "simple roots {i} and {j} meet at an acute angle"
                )));
            }
            if ip.is_zero() {
                continue;
            }
            let p = rint(2) * &ip / &lengths[i];
            let q = rint(2) * &ip / &lengths[j];
            let mult = (&p * &q).to_integer();
            let mult = u8::try_from(&mult)
                .ok()
                .filter(|m| (1..=3).contains(m))
                .ok_or_else(|| {
                    Error::DiagramFailure(format!(
                        "simple-root pair {i},{j} has edge multiplicity {mult}"
                    ))
                })?;
            let arrow = if mult >= 2 {
                if lengths[i] > lengths[j] {
                    Some((i, j))
                } else {
                    Some((j, i))
                }
            } else {
                None
            };
            edges.push(DynkinEdge { a: i, b: j, mult, arrow });
        }
    }

    // Connected components, in node order.
    let mut comp_id: Vec<Option<usize>> = vec![None; k];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for start in 0..k {
        if comp_id[start].is_some() {
            continue;
        }
        let id = components.len();
        let mut stack = vec![start];
        let mut members = Vec::new();
        comp_id[start] = Some(id);
        while let Some(v) = stack.pop() {
            members.push(v);
            for e in &edges {
                for (x, y) in [(e.a, e.b), (e.b, e.a)] {
                    if x == v && comp_id[y].is_none() {
                        comp_id[y] = Some(id);
                        stack.push(y);
                    }
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }

    // Normalize lengths relative to each component's shortest root.
    for comp in &components {
        let shortest = comp
            .iter()
            .map(|&v| lengths[v].clone())
            .min()
            .expect("nonempty component");
        for &v in comp {
            lengths[v] = &lengths[v] / &shortest;
        }
    }

    Ok(DynkinDiagram {
        nodes: lengths,
        edges,
        components,
    })
}

// ---------------------------------------------------------------------------
// Isomorphism.

/// A single component in local coordinates: node lengths plus an edge map
/// keyed by ordered local index pairs. The i8 records the arrow: 0 none,
/// 1 from the smaller local index, −1 from the larger.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Component {
    len2: Vec<Rational>,
    edges: BTreeMap<(usize, usize), (u8, i8)>,
}

fn extract_component(d: &DynkinDiagram, comp: &[usize]) -> Component {
    let local: BTreeMap<usize, usize> = comp.iter().enumerate().map(|(l, &g)| (g, l)).collect();
    let mut edges = BTreeMap::new();
    for e in &d.edges {
        let (Some(&la), Some(&lb)) = (local.get(&e.a), local.get(&e.b)) else {
            continue;
        };
        let key = (la.min(lb), la.max(lb));
        let dir = match e.arrow {
            None => 0,
            Some((from, _)) => {
                let lf = local[&from];
                if lf == key.0 {
                    1
                } else {
                    -1
                }
            }
        };
        edges.insert(key, (e.mult, dir));
    }
    Component {
        len2: comp.iter().map(|&g| d.nodes[g].clone()).collect(),
        edges,
    }
}

fn edge_of(c: &Component, i: usize, j: usize) -> Option<(u8, i8)> {
    let key = (i.min(j), i.max(j));
    c.edges.get(&key).map(|&(m, dir)| {
        // Normalize direction to "from i": dir 1 means from key.0.
        let from_i = if dir == 0 {
            0
        } else if (dir == 1) == (i == key.0) {
            1
        } else {
            -1
        };
        (m, from_i)
    })
}

fn components_isomorphic(c1: &Component, c2: &Component) -> bool {
    let n = c1.len2.len();
    if n != c2.len2.len() || c1.edges.len() != c2.edges.len() {
        return false;
    }
    fn assign(c1: &Component, c2: &Component, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let i = map.len();
        if i == c1.len2.len() {
            return true;
        }
        for t in 0..c2.len2.len() {
            if used[t] || c1.len2[i] != c2.len2[t] {
                continue;
            }
            let consistent = (0..i).all(|j| {
                let e1 = edge_of(c1, i, j);
                let e2 = edge_of(c2, t, map[j]);
                e1 == e2
            });
            if consistent {
                map.push(t);
                used[t] = true;
                if assign(c1, c2, map, used) {
                    return true;
                }
                map.pop();
                used[t] = false;
            }
        }
        false
    }
    assign(c1, c2, &mut Vec::new(), &mut vec![false; n])
}

/// Diagram isomorphism: a bijection of nodes preserving squared lengths
/// (per-component normalized), edge multiplicities, and arrow directions.
pub fn isomorphic(d1: &DynkinDiagram, d2: &DynkinDiagram) -> bool {
    if d1.components.len() != d2.components.len() {
        return false;
    }
    let c1: Vec<Component> = d1
        .components
        .iter()
        .map(|c| extract_component(d1, c))
        .collect();
    let c2: Vec<Component> = d2
        .components
        .iter()
        .map(|c| extract_component(d2, c))
        .collect();
    fn match_components(c1: &[Component], c2: &[Component], used: &mut Vec<bool>, i: usize) -> bool {
        if i == c1.len() {
            return true;
        }
        for t in 0..c2.len() {
            if !used[t] && components_isomorphic(&c1[i], &c2[t]) {
                used[t] = true;
                if match_components(c1, c2, used, i + 1) {
                    return true;
                }
                used[t] = false;
            }
        }
        false
    }
    match_components(&c1, &c2, &mut vec![false; c2.len()], 0)
}

// ---------------------------------------------------------------------------
// Classification.

/// Edge description of a template: endpoints, multiplicity, and an
/// optional arrow given as (from, to).
type TemplateEdge = (usize, usize, u8, Option<(usize, usize)>);

/// Builds a one-component diagram from a template description.
fn template(len2: &[(i64, i64)], edges: &[TemplateEdge]) -> Component {
    let mut edge_map = BTreeMap::new();
    for &(a, b, mult, arrow) in edges {
        let key = (a.min(b), a.max(b));
        let dir = match arrow {
            None => 0,
            Some((from, _)) => {
                if from == key.0 {
                    1
                } else {
                    -1
                }
            }
        };
        edge_map.insert(key, (mult, dir));
    }
    Component {
        len2: len2.iter().map(|&(p, q)| rat(p, q)).collect(),
        edges: edge_map,
    }
}

fn path_edges(n: usize) -> Vec<TemplateEdge> {
    (0..n.saturating_sub(1)).map(|i| (i, i + 1, 1, None)).collect()
}

fn label_component(c: &Component) -> String {
    let k = c.len2.len();
    let ones = |k: usize| vec![(1i64, 1i64); k];

    // A_k: single-edge path, equal lengths.
    if components_isomorphic(c, &template(&ones(k), &path_edges(k))) {
        return format!("A{k}");
    }
    if k == 2 {
        // Rank-2 double edge: B₂ and C₂ coincide as diagrams.
        if components_isomorphic(c, &template(&[(2, 1), (1, 1)], &[(0, 1, 2, Some((0, 1)))])) {
            return "B2=C2".into();
        }
        if components_isomorphic(c, &template(&[(1, 1), (3, 1)], &[(0, 1, 3, Some((1, 0)))])) {
            return "G2".into();
        }
    }
    if k >= 3 {
        // B_k: long path ending in one short root, arrow into the end.
        let mut len2 = vec![(2, 1); k - 1];
        len2.push((1, 1));
        let mut edges = path_edges(k - 1);
        edges.push((k - 2, k - 1, 2, Some((k - 2, k - 1))));
        if components_isomorphic(c, &template(&len2, &edges)) {
            return format!("B{k}");
        }
        // C_k: short path ending in one long root, arrow out of the end.
        let mut len2 = vec![(1, 1); k - 1];
        len2.push((2, 1));
        let mut edges = path_edges(k - 1);
        edges.push((k - 2, k - 1, 2, Some((k - 1, k - 2))));
        if components_isomorphic(c, &template(&len2, &edges)) {
            return format!("C{k}");
        }
    }
    if k >= 4 {
        // D_k: path of k−2 nodes with two extra leaves at the last node.
        let mut edges = path_edges(k - 2);
        edges.push((k - 3, k - 2, 1, None));
        edges.push((k - 3, k - 1, 1, None));
        if components_isomorphic(c, &template(&ones(k), &edges)) {
            return format!("D{k}");
        }
    }
    if k == 4 {
        // F₄: two long, two short, double edge in the middle.
        let edges = [
            (0, 1, 1, None),
            (1, 2, 2, Some((1, 2))),
            (2, 3, 1, None),
        ];
        if components_isomorphic(c, &template(&[(2, 1), (2, 1), (1, 1), (1, 1)], &edges)) {
            return "F4".into();
        }
    }
    if (6..=8).contains(&k) {
        // E_k: path of k−1 nodes with a leaf at the third node.
        let mut edges = path_edges(k - 1);
        edges.push((2, k - 1, 1, None));
        if components_isomorphic(c, &template(&ones(k), &edges)) {
            return format!("E{k}");
        }
    }
    "unknown".into()
}

/// Classification labels, one per connected component in component order.
pub fn classification_label(d: &DynkinDiagram) -> Vec<String> {
    d.components
        .iter()
        .map(|comp| label_component(&extract_component(d, comp)))
        .collect()
}

// ---------------------------------------------------------------------------
// Rendering and JSON.

fn edge_string(mult: u8, arrow_forward: Option<bool>) -> String {
    let body = match mult {
        1 => "---",
        2 => "===",
        _ => "≡≡≡",
    };
    match arrow_forward {
        None => body.to_string(),
        Some(true) => format!("{}>", &body[..body.len() - body.chars().last().unwrap().len_utf8()]),
        Some(false) => {
            let mut s = String::from("<");
            s.push_str(&body[body.chars().next().unwrap().len_utf8()..]);
            s
        }
    }
}

/// ASCII rendering: each component's longest path on one line, remaining
/// nodes as branches below. Falls back to an edge list for non-tree shapes.
pub fn render(d: &DynkinDiagram) -> String {
    let mut out = String::new();
    for comp in &d.components {
        if !out.is_empty() {
            out.push('\n');
        }
        render_component(d, comp, &mut out);
    }
    out
}

fn render_component(d: &DynkinDiagram, comp: &[usize], out: &mut String) {
    if comp.len() == 1 {
        out.push_str("o\n");
        return;
    }
    let adj: Vec<(usize, usize)> = d
        .edges
        .iter()
        .filter(|e| comp.contains(&e.a))
        .map(|e| (e.a, e.b))
        .collect();
    // Tree check: edges = nodes − 1.
    if adj.len() != comp.len() - 1 {
        for e in d.edges.iter().filter(|e| comp.contains(&e.a)) {
            out.push_str(&format!("o{} {} o{}\n", e.a, edge_string(e.mult, None), e.b));
        }
        return;
    }
    let neighbors = |v: usize| -> Vec<usize> {
        adj.iter()
            .flat_map(|&(a, b)| [(a, b), (b, a)])
            .filter(|&(x, _)| x == v)
            .map(|(_, y)| y)
            .collect()
    };
    // Double-BFS for a diameter path.
    let bfs_far = |start: usize| -> (usize, BTreeMap<usize, usize>) {
        let mut prev = BTreeMap::new();
        let mut seen = vec![start];
        let mut queue = std::collections::VecDeque::from([start]);
        let mut last = start;
        while let Some(v) = queue.pop_front() {
            last = v;
            for w in neighbors(v) {
                if !seen.contains(&w) {
                    seen.push(w);
                    prev.insert(w, v);
                    queue.push_back(w);
                }
            }
        }
        (last, prev)
    };
    let (u, _) = bfs_far(comp[0]);
    let (v, prev) = bfs_far(u);
    let mut path = vec![v];
    while let Some(&p) = prev.get(path.last().unwrap()) {
        path.push(p);
    }
    path.reverse();

    // Off-path nodes must hang off a path node by a single edge.
    let mut branches: Vec<(usize, usize)> = Vec::new(); // (path position, node)
    for &node in comp {
        if path.contains(&node) {
            continue;
        }
        let ns = neighbors(node);
        let attach = ns
            .iter()
            .find_map(|&p| path.iter().position(|&x| x == p));
        match (ns.len(), attach) {
            (1, Some(pos)) => branches.push((pos, node)),
            _ => {
                for e in d.edges.iter().filter(|e| comp.contains(&e.a)) {
                    out.push_str(&format!(
                        "o{} {} o{}\n",
                        e.a,
                        edge_string(e.mult, None),
                        e.b
                    ));
                }
                return;
            }
        }
    }

    let mut line = String::new();
    let mut columns = Vec::new();
    for (i, &node) in path.iter().enumerate() {
        columns.push(line.chars().count());
        line.push('o');
        if i + 1 < path.len() {
            let (a, b) = (node, path[i + 1]);
            let e = d
                .edges
                .iter()
                .find(|e| (e.a, e.b) == (a, b) || (e.a, e.b) == (b, a))
                .expect("path edge");
            let forward = e.arrow.map(|(from, _)| from == a);
            line.push_str(&edge_string(e.mult, forward));
        }
    }
    out.push_str(&line);
    out.push('\n');
    if !branches.is_empty() {
        let width = columns[branches.iter().map(|&(p, _)| p).max().unwrap()] + 1;
        let mut bar = vec![' '; width];
        let mut leaf = vec![' '; width];
        for &(pos, _) in &branches {
            bar[columns[pos]] = '|';
            leaf[columns[pos]] = 'o';
        }
        out.push_str(bar.into_iter().collect::<String>().trim_end());
        out.push('\n');
        out.push_str(leaf.into_iter().collect::<String>().trim_end());
        out.push('\n');
    }
}

/// JSON form {nodes: [{len2}], edges: [{a, b, mult, arrow}]}.
pub fn to_json(d: &DynkinDiagram) -> Value {
    json!({
        "nodes": d.nodes.iter().map(|l| json!({ "len2": l.to_string() })).collect::<Vec<_>>(),
        "edges": d.edges.iter().map(|e| {
            json!({
                "a": e.a,
                "b": e.b,
                "mult": e.mult,
                "arrow": e.arrow.map(|(from, to)| json!({ "from": from, "to": to })),
            })
        }).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build, Family};
    use crate::decompose::decompose;
    use crate::rootsystem::rank2_catalog;

    fn diagram(family: Family, n: usize) -> DynkinDiagram {
        let alg = build(family, n).unwrap();
        let dec = decompose(&alg).unwrap();
        let rs = RootSystem::from_decomposition(&dec).unwrap();
        let base = rs.find_base().unwrap();
        build_diagram(&rs, &base).unwrap()
    }

    #[test]
    fn classical_labels() {
        assert_eq!(classification_label(&diagram(Family::SU, 4)), vec!["A3"]);
        assert_eq!(classification_label(&diagram(Family::SU, 2)), vec!["A1"]);
        assert_eq!(
            classification_label(&diagram(Family::SOOdd, 3)),
            vec!["B3"]
        );
        assert_eq!(classification_label(&diagram(Family::Sp, 3)), vec!["C3"]);
        assert_eq!(
            classification_label(&diagram(Family::SOEven, 4)),
            vec!["D4"]
        );
        assert_eq!(
            classification_label(&diagram(Family::SOEven, 2)),
            vec!["A1", "A1"]
        );
        assert_eq!(
            classification_label(&diagram(Family::SOEven, 3)),
            vec!["A3"]
        );
        assert_eq!(
            classification_label(&diagram(Family::SOOdd, 2)),
            vec!["B2=C2"]
        );
    }

    #[test]
    fn catalog_labels() {
        let labels: Vec<(String, Vec<String>)> = rank2_catalog()
            .iter()
            .map(|e| {
                let base = e.system.find_base().unwrap();
                let d = build_diagram(&e.system, &base).unwrap();
                (e.name.to_string(), classification_label(&d))
            })
            .collect();
        assert_eq!(
            labels,
            vec![
                ("A1xA1".to_string(), vec!["A1".to_string(), "A1".to_string()]),
                ("A2".to_string(), vec!["A2".to_string()]),
                ("B2".to_string(), vec!["B2=C2".to_string()]),
                ("C2".to_string(), vec!["B2=C2".to_string()]),
                ("G2".to_string(), vec!["G2".to_string()]),
            ]
        );
    }

    #[test]
    fn cross_family_isomorphisms() {
        assert!(isomorphic(&diagram(Family::SU, 4), &diagram(Family::SOEven, 3)));
        assert!(isomorphic(&diagram(Family::Sp, 2), &diagram(Family::SOOdd, 2)));
        assert!(!isomorphic(&diagram(Family::SOOdd, 3), &diagram(Family::Sp, 3)));
        assert!(!isomorphic(&diagram(Family::SU, 4), &diagram(Family::Sp, 3)));
        let empty = DynkinDiagram {
            nodes: vec![],
            edges: vec![],
            components: vec![],
        };
        assert!(isomorphic(&empty, &empty));
    }

    #[test]
    fn arrows_point_to_shorter() {
        let d = diagram(Family::SOOdd, 3);
        let arrow_edge = d.edges.iter().find(|e| e.mult == 2).unwrap();
        let (from, to) = arrow_edge.arrow.unwrap();
        assert!(d.nodes[from] > d.nodes[to]);
        // B: terminal short root, arrow into it. Lengths normalized to the
        // shortest = 1.
        assert_eq!(d.nodes[to], rint(1));
        assert_eq!(d.nodes[from], rint(2));

        let d = diagram(Family::Sp, 3);
        let arrow_edge = d.edges.iter().find(|e| e.mult == 2).unwrap();
        let (from, to) = arrow_edge.arrow.unwrap();
        assert_eq!(d.nodes[from], rint(2));
        assert_eq!(d.nodes[to], rint(1));
    }

    #[test]
    fn base_independence_over_weyl_translates() {
        let alg = build(Family::SOOdd, 2).unwrap();
        let dec = decompose(&alg).unwrap();
        let rs = RootSystem::from_decomposition(&dec).unwrap();
        let base = rs.find_base().unwrap();
        let reference = build_diagram(&rs, &base).unwrap();
        let group = rs.weyl_group(100).unwrap();
        for idx in [1, group.len() / 2, group.len() - 1] {
            let w = &group[idx];
            let translated: Vec<usize> = base
                .simple_roots
                .iter()
                .map(|&i| w.permutation[i])
                .collect();
            let tbase = rs.base_from_simple(&translated).unwrap();
            let d = build_diagram(&rs, &tbase).unwrap();
            assert!(isomorphic(&reference, &d));
        }
    }

    #[test]
    fn acute_pair_rejected() {
        let rs = rank2_catalog()
            .into_iter()
            .find(|e| e.name == "A2")
            .unwrap()
            .system;
        // (1,0) and (1,1) meet at 60°.
        let base = Base {
            simple_roots: vec![0, 2],
            expansion: vec![],
            sign: vec![],
        };
        assert!(matches!(
            build_diagram(&rs, &base),
            Err(Error::AcutePair(_))
        ));
    }

    #[test]
    fn rendering_shapes() {
        let a3 = render(&diagram(Family::SU, 4));
        assert_eq!(a3, "o---o---o\n");
        let b2 = render(&diagram(Family::SOOdd, 2));
        assert!(b2 == "o==>o\n" || b2 == "o<==o\n", "got {b2:?}");
        let c3 = render(&diagram(Family::Sp, 3));
        assert!(c3.contains("<==") || c3.contains("==>"), "got {c3:?}");
        let d4 = render(&diagram(Family::SOEven, 4));
        let lines: Vec<&str> = d4.lines().collect();
        assert_eq!(lines.len(), 3, "D4 renders with a branch: {d4:?}");
        assert!(lines[1].contains('|'));
        let a1a1 = render(&diagram(Family::SOEven, 2));
        assert_eq!(a1a1, "o\n\no\n");
    }

    #[test]
    fn exceptional_templates_recognized() {
        // Hand-built G₂-, F₄-, and E₆-shaped diagrams classify correctly.
        let f4 = DynkinDiagram {
            nodes: vec![rint(2), rint(2), rint(1), rint(1)],
            edges: vec![
                DynkinEdge { a: 0, b: 1, mult: 1, arrow: None },
                DynkinEdge { a: 1, b: 2, mult: 2, arrow: Some((1, 2)) },
                DynkinEdge { a: 2, b: 3, mult: 1, arrow: None },
            ],
            components: vec![vec![0, 1, 2, 3]],
        };
        assert_eq!(classification_label(&f4), vec!["F4"]);

        let e6 = DynkinDiagram {
            nodes: vec![rint(1); 6],
            edges: vec![
                DynkinEdge { a: 0, b: 1, mult: 1, arrow: None },
                DynkinEdge { a: 1, b: 2, mult: 1, arrow: None },
                DynkinEdge { a: 2, b: 3, mult: 1, arrow: None },
                DynkinEdge { a: 3, b: 4, mult: 1, arrow: None },
                DynkinEdge { a: 2, b: 5, mult: 1, arrow: None },
            ],
            components: vec![vec![0, 1, 2, 3, 4, 5]],
        };
        assert_eq!(classification_label(&e6), vec!["E6"]);

        // An unknown shape: triangle.
        let tri = DynkinDiagram {
            nodes: vec![rint(1); 3],
            edges: vec![
                DynkinEdge { a: 0, b: 1, mult: 1, arrow: None },
                DynkinEdge { a: 1, b: 2, mult: 1, arrow: None },
                DynkinEdge { a: 0, b: 2, mult: 1, arrow: None },
            ],
            components: vec![vec![0, 1, 2]],
        };
        assert_eq!(classification_label(&tri), vec!["unknown"]);
    }

    #[test]
    fn json_form() {
        let d = diagram(Family::SOOdd, 2);
        let doc = to_json(&d);
        assert_eq!(doc["nodes"].as_array().unwrap().len(), 2);
        let edge = &doc["edges"][0];
        assert_eq!(edge["mult"], 2);
        assert!(edge["arrow"].is_object());
    }
}
