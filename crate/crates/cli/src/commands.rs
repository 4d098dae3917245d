//! Implementations of the CLI verbs.

use num_traits::{One, Zero};
use serde_json::{json, Value};

use rootspace::algebra::{build, ClassicalAlgebra, Family};
use rootspace::complexify::{complex_root_spaces, rootsums_via_complexification};
use rootspace::decompose::{decompose, Decomposition};
use rootspace::dynkin::{build_diagram, classification_label, isomorphic, render, to_json as diagram_json, DynkinDiagram};
use rootspace::matrix::{bracket, inner_product};
use rootspace::rootsystem::{rank2_catalog, RootSystem, Sign};
use rootspace::{rat, rint, Rational};

use crate::render::{
    display_name, rat_str, render_coeffs, render_columns, render_element, render_grid,
    render_terms, su_diag, tuple_str, Term,
};

/// Failure with the process exit code it maps to (1 verification, 2 usage).
pub struct CmdError {
    pub code: i32,
    pub message: String,
}

pub fn usage(msg: impl Into<String>) -> CmdError {
    CmdError { code: 2, message: msg.into() }
}

pub fn failure(msg: impl Into<String>) -> CmdError {
    CmdError { code: 1, message: msg.into() }
}

type CmdResult = Result<String, CmdError>;

/// Resolves a family word and parameter to an algebra.  The orthogonal
/// family takes the matrix dimension: `so 7` is the 7x7 algebra, `so 16`
/// the 16x16 one.  so(2) is abelian (no roots) and rejected.
pub fn resolve_algebra(family: &str, n: usize) -> Result<ClassicalAlgebra, CmdError> {
    let (fam, param) = match family {
        "su" => (Family::SU, n),
        "sp" => (Family::Sp, n),
        "so" => {
            if n <= 2 {
                return Err(usage(format!(
                    "so takes the matrix dimension, at least 3; so({n}) has no root spaces"
                )));
            }
            if n.is_multiple_of(2) {
                (Family::SOEven, n / 2)
            } else {
                (Family::SOOdd, (n - 1) / 2)
            }
        }
        other => {
            return Err(usage(format!(
                "unknown family '{other}' (expected su, so, or sp)"
            )))
        }
    };
    build(fam, param).map_err(|e| usage(e.to_string()))
}

fn decompose_or_fail(alg: &ClassicalAlgebra) -> Result<Decomposition, CmdError> {
    decompose(alg).map_err(|e| failure(format!("decomposition failed: {e}")))
}

fn lib_err(e: rootspace::Error) -> CmdError {
    failure(e.to_string())
}

// ---------------------------------------------------------------- table ----

pub fn cmd_table(alg: &ClassicalAlgebra, as_json: bool) -> CmdResult {
    let names: Vec<String> = alg.basis.iter().map(|b| b.name.clone()).collect();
    let mut cells = Vec::with_capacity(alg.dim);
    for a in &alg.basis {
        let mut row = Vec::with_capacity(alg.dim);
        for b in &alg.basis {
            let br = bracket(&a.mat, &b.mat).map_err(lib_err)?;
            row.push(render_element(alg, &br).map_err(lib_err)?);
        }
        cells.push(row);
    }
    if as_json {
        let doc = json!({
            "algebra": display_name(alg),
            "basis": names,
            "table": cells,
        });
        return Ok(format!("{}\n", serde_json::to_string_pretty(&doc).unwrap()));
    }
    let mut out = format!(
        "{}  bracket table over the named basis ({} elements)\n",
        display_name(alg),
        alg.dim
    );
    out.push_str(&render_grid("[,]", &names, &names, &cells));
    Ok(out)
}

// ---------------------------------------------------------------- roots ----

pub fn cmd_roots(alg: &ClassicalAlgebra, as_json: bool) -> CmdResult {
    let dec = decompose_or_fail(alg)?;
    if as_json {
        let rs = RootSystem::from_decomposition(&dec).map_err(lib_err)?;
        return Ok(format!(
            "{}\n",
            serde_json::to_string_pretty(&rs.to_json()).unwrap()
        ));
    }
    let mut out = format!(
        "{}  rank {}  dim {}  root spaces {}\n",
        display_name(alg),
        alg.rank,
        alg.dim,
        dec.root_data.len()
    );
    out.push_str(&format!(
        "X = {}\n",
        render_coeffs(alg, &full_torus(alg, &dec.x_coords))
    ));
    let mut rows = Vec::new();
    let mut header = vec![
        "space".to_string(),
        "E".to_string(),
        "F".to_string(),
        "dual root".to_string(),
        "torus coords".to_string(),
        "functional".to_string(),
        "alpha(X)".to_string(),
    ];
    if alg.family == Family::SU {
        header.push("dual as diagonal".to_string());
    }
    rows.push(header);
    for (k, d) in dec.root_data.iter().enumerate() {
        let mut row = vec![
            format!("{}", k + 1),
            render_element(alg, &d.e).map_err(lib_err)?,
            render_element(alg, &d.f).map_err(lib_err)?,
            render_element(alg, &d.dual_root).map_err(lib_err)?,
            tuple_str(d.dual_coords()),
            tuple_str(&d.root_coords),
            rat_str(&d.value_at_x),
        ];
        if alg.family == Family::SU {
            row.push(su_diag(d.dual_coords()));
        }
        rows.push(row);
    }
    out.push_str(&render_columns(&rows));
    Ok(out)
}

fn full_torus(alg: &ClassicalAlgebra, torus_coords: &[Rational]) -> Vec<Rational> {
    let mut full = torus_coords.to_vec();
    full.resize(alg.dim, Rational::zero());
    full
}

// ----------------------------------------------------------------- weyl ----

/// Closed-form Weyl group order: the product formulas for the four families.
pub fn projected_weyl_order(alg: &ClassicalAlgebra) -> Rational {
    let mut order = Rational::one();
    let factorial = |k: usize| -> Rational {
        let mut f = Rational::one();
        for i in 2..=k {
            f *= rint(i as i64);
        }
        f
    };
    match alg.family {
        Family::SU => order *= factorial(alg.n),
        Family::SOEven => {
            order *= factorial(alg.n);
            for _ in 1..alg.n {
                order *= rint(2);
            }
        }
        Family::SOOdd | Family::Sp => {
            order *= factorial(alg.n);
            for _ in 0..alg.n {
                order *= rint(2);
            }
        }
    }
    order
}

pub fn cmd_weyl(
    alg: &ClassicalAlgebra,
    cap: usize,
    elements: bool,
    as_json: bool,
) -> CmdResult {
    let projected = projected_weyl_order(alg);
    if projected > rint(cap as i64) {
        return Err(failure(format!(
            "refusing to enumerate: projected Weyl group order {} exceeds cap {} (raise with --cap)",
            rat_str(&projected),
            cap
        )));
    }
    let dec = decompose_or_fail(alg)?;
    let rs = RootSystem::from_decomposition(&dec).map_err(lib_err)?;
    let group = rs.weyl_group(cap).map_err(lib_err)?;
    let generators = dec.root_data.len();
    if as_json {
        let mut doc = json!({
            "algebra": display_name(alg),
            "order": group.len(),
            "projected_order": rat_str(&projected),
            "generating_reflections": generators,
        });
        if elements {
            let perms: Vec<Vec<usize>> =
                group.iter().map(|w| w.permutation.clone()).collect();
            doc["elements"] = json!(perms);
        }
        return Ok(format!("{}\n", serde_json::to_string_pretty(&doc).unwrap()));
    }
    let mut out = format!(
        "{}  Weyl group order {}  ({} generating reflections)\n",
        display_name(alg),
        group.len(),
        generators
    );
    if elements {
        out.push_str("elements as permutations of the roots:\n");
        for w in &group {
            let images: Vec<String> = w.permutation.iter().map(usize::to_string).collect();
            out.push_str(&format!("({})\n", images.join(" ")));
        }
    }
    Ok(out)
}

// ----------------------------------------------------------------- base ----

pub fn cmd_base(alg: &ClassicalAlgebra, as_json: bool) -> CmdResult {
    let dec = decompose_or_fail(alg)?;
    let rs = RootSystem::from_decomposition(&dec).map_err(lib_err)?;
    let base = rs.find_base().map_err(lib_err)?;

    let root_str = |idx: usize| -> String {
        render_coeffs(alg, &full_torus(alg, &rs.roots[idx]))
    };
    let expansion_str = |coeffs: &[Rational]| -> String {
        let terms: Vec<Term> = coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| Term { coeff: c.clone(), label: format!("s{}", k + 1) })
            .collect();
        render_terms(&terms)
    };

    if as_json {
        let simple: Vec<Value> = base
            .simple_roots
            .iter()
            .enumerate()
            .map(|(k, &idx)| {
                json!({
                    "label": format!("s{}", k + 1),
                    "dual": root_str(idx),
                    "coords": rs.roots[idx].iter().map(rat_str).collect::<Vec<_>>(),
                })
            })
            .collect();
        let positive: Vec<Value> = (0..rs.roots.len())
            .filter(|&i| base.sign[i] == Sign::Positive)
            .map(|i| {
                json!({
                    "dual": root_str(i),
                    "coords": rs.roots[i].iter().map(rat_str).collect::<Vec<_>>(),
                    "expansion": base.expansion[i].iter().map(rat_str).collect::<Vec<_>>(),
                })
            })
            .collect();
        let doc = json!({
            "algebra": display_name(alg),
            "rank": rs.rank,
            "simple": simple,
            "positive": positive,
        });
        return Ok(format!("{}\n", serde_json::to_string_pretty(&doc).unwrap()));
    }

    let mut out = format!(
        "{}  base of {} simple roots\n",
        display_name(alg),
        base.simple_roots.len()
    );
    for (k, &idx) in base.simple_roots.iter().enumerate() {
        out.push_str(&format!("s{} = {}\n", k + 1, root_str(idx)));
    }
    out.push_str("positive roots as nonnegative integer sums:\n");
    let mut rows = Vec::new();
    for i in 0..rs.roots.len() {
        if base.sign[i] == Sign::Positive {
            rows.push(vec![
                root_str(i),
                "=".to_string(),
                expansion_str(&base.expansion[i]),
            ]);
        }
    }
    out.push_str(&render_columns(&rows));
    Ok(out)
}

// --------------------------------------------------------------- dynkin ----

pub struct DynkinSource {
    pub name: String,
    pub system: RootSystem,
}

pub fn source_from_family(family: &str, n: usize) -> Result<DynkinSource, CmdError> {
    let alg = resolve_algebra(family, n)?;
    let dec = decompose_or_fail(&alg)?;
    let system = RootSystem::from_decomposition(&dec).map_err(lib_err)?;
    Ok(DynkinSource { name: display_name(&alg), system })
}

pub fn source_from_file(path: &str) -> Result<DynkinSource, CmdError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {path}: {e}")))?;
    let doc: Value = serde_json::from_str(&text)
        .map_err(|e| usage(format!("parse error in {path}: {e}")))?;
    let system = RootSystem::from_json(&doc)
        .map_err(|e| usage(format!("invalid root system in {path}: {e}")))?;
    Ok(DynkinSource { name: path.to_string(), system })
}

fn diagram_of(src: &DynkinSource) -> Result<(DynkinDiagram, String), CmdError> {
    let base = src.system.find_base().map_err(lib_err)?;
    let d = build_diagram(&src.system, &base).map_err(lib_err)?;
    let label = classification_label(&d).join(" + ");
    Ok((d, label))
}

pub fn cmd_dynkin(
    primary: DynkinSource,
    compare: Option<DynkinSource>,
    as_json: bool,
) -> CmdResult {
    let (d1, label1) = diagram_of(&primary)?;
    match compare {
        None => {
            if as_json {
                let doc = json!({
                    "source": primary.name,
                    "classification": label1,
                    "diagram": diagram_json(&d1),
                });
                Ok(format!("{}\n", serde_json::to_string_pretty(&doc).unwrap()))
            } else {
                Ok(format!(
                    "{}  Dynkin diagram\n{}classification: {}\n",
                    primary.name,
                    render(&d1),
                    label1
                ))
            }
        }
        Some(other) => {
            let (d2, label2) = diagram_of(&other)?;
            let eq = isomorphic(&d1, &d2);
            if as_json {
                let doc = json!({
                    "first": {"source": primary.name, "classification": label1},
                    "second": {"source": other.name, "classification": label2},
                    "equivalent": eq,
                });
                return Ok(format!("{}\n", serde_json::to_string_pretty(&doc).unwrap()));
            }
            let verdict = if eq {
                format!("equivalent ({label1})")
            } else {
                format!("not equivalent ({label1} vs {label2})")
            };
            Ok(format!("{} vs {}: {}\n", primary.name, other.name, verdict))
        }
    }
}

// --------------------------------------------------------------- verify ----

struct Check {
    name: &'static str,
    outcome: Result<(), String>,
}

fn check_jacobi(alg: &ClassicalAlgebra) -> Result<(), String> {
    let err = |e: rootspace::Error| e.to_string();
    for i in 0..alg.dim {
        for j in (i + 1)..alg.dim {
            let ab = bracket(&alg.basis[i].mat, &alg.basis[j].mat).map_err(err)?;
            for k in (j + 1)..alg.dim {
                let a = &alg.basis[i].mat;
                let b = &alg.basis[j].mat;
                let c = &alg.basis[k].mat;
                let t1 = bracket(a, &bracket(b, c).map_err(err)?).map_err(err)?;
                let t2 = bracket(b, &bracket(c, a).map_err(err)?).map_err(err)?;
                let t3 = bracket(c, &ab).map_err(err)?;
                let total = t1.add(&t2).map_err(err)?.add(&t3).map_err(err)?;
                if !total.is_zero() {
                    return Err(format!(
                        "jacobi sum nonzero for {} {} {}",
                        alg.basis[i].name, alg.basis[j].name, alg.basis[k].name
                    ));
                }
            }
        }
    }
    Ok(())
}

fn check_invariance(alg: &ClassicalAlgebra) -> Result<(), String> {
    for i in 0..alg.dim {
        for j in 0..alg.dim {
            for k in j..alg.dim {
                let a = &alg.basis[i].mat;
                let b = &alg.basis[j].mat;
                let c = &alg.basis[k].mat;
                let lhs = inner_product(&bracket(a, b).map_err(|e| e.to_string())?, c)
                    .map_err(|e| e.to_string())?;
                let rhs = inner_product(b, &bracket(a, c).map_err(|e| e.to_string())?)
                    .map_err(|e| e.to_string())?;
                if lhs + rhs != Rational::zero() {
                    return Err(format!(
                        "inner product not ad-invariant at {} {} {}",
                        alg.basis[i].name, alg.basis[j].name, alg.basis[k].name
                    ));
                }
            }
        }
    }
    Ok(())
}

fn check_decomposition(dec: &Decomposition) -> Result<(), String> {
    for (k, d) in dec.root_data.iter().enumerate() {
        let c = &d.value_at_x;
        let xe = bracket(&dec.regular_x, &d.e).map_err(|e| e.to_string())?;
        if !xe.sub(&d.f.scale(c)).map_err(|e| e.to_string())?.is_zero() {
            return Err(format!("[X,E] != alpha(X) F in space {}", k + 1));
        }
        let xf = bracket(&dec.regular_x, &d.f).map_err(|e| e.to_string())?;
        if !xf.add(&d.e.scale(c)).map_err(|e| e.to_string())?.is_zero() {
            return Err(format!("[X,F] != -alpha(X) E in space {}", k + 1));
        }
        // ad_X^2 = -alpha(X)^2 on the space.
        let xxe = bracket(&dec.regular_x, &xe).map_err(|e| e.to_string())?;
        if !xxe.add(&d.e.scale(&(c * c))).map_err(|e| e.to_string())?.is_zero() {
            return Err(format!("ad_X^2 != -alpha(X)^2 on space {}", k + 1));
        }
    }
    Ok(())
}

fn check_axioms(rs: &RootSystem) -> Result<(), String> {
    let report = rs.verify_axioms();
    if report.ok {
        Ok(())
    } else {
        Err(report.violations.join("; "))
    }
}

fn check_rootsums(dec: &Decomposition) -> Result<(), String> {
    let m = dec.root_data.len();
    for i in 0..m {
        for j in (i + 1)..m {
            dec.verify_rootsums(i, j)
                .map_err(|e| format!("spaces {} and {}: {e}", i + 1, j + 1))?;
        }
    }
    Ok(())
}

fn check_complexification(dec: &Decomposition) -> Result<(), String> {
    complex_root_spaces(dec).map_err(|e| e.to_string())?;
    let m = dec.root_data.len();
    for i in 0..m {
        for j in (i + 1)..m {
            rootsums_via_complexification(dec, i, j)
                .map_err(|e| format!("spaces {} and {}: {e}", i + 1, j + 1))?;
        }
    }
    Ok(())
}

pub fn cmd_verify(alg: &ClassicalAlgebra, as_json: bool) -> Result<(String, i32), CmdError> {
    let dec = decompose_or_fail(alg)?;
    let rs = RootSystem::from_decomposition(&dec).map_err(lib_err)?;
    let checks = vec![
        Check { name: "jacobi identity over all basis triples", outcome: check_jacobi(alg) },
        Check { name: "inner product is ad-invariant", outcome: check_invariance(alg) },
        Check { name: "root-space decomposition relations", outcome: check_decomposition(&dec) },
        Check { name: "root system axioms", outcome: check_axioms(&rs) },
        Check { name: "root sums via bracket projection", outcome: check_rootsums(&dec) },
        Check { name: "root sums via complexification", outcome: check_complexification(&dec) },
    ];
    let failed = checks.iter().filter(|c| c.outcome.is_err()).count();
    let code = if failed == 0 { 0 } else { 1 };
    if as_json {
        let list: Vec<Value> = checks
            .iter()
            .map(|c| match &c.outcome {
                Ok(()) => json!({"name": c.name, "ok": true}),
                Err(msg) => json!({"name": c.name, "ok": false, "detail": msg}),
            })
            .collect();
        let doc = json!({
            "algebra": display_name(alg),
            "checks": list,
            "ok": failed == 0,
        });
        return Ok((format!("{}\n", serde_json::to_string_pretty(&doc).unwrap()), code));
    }
    let mut out = format!("verify {}\n", display_name(alg));
    for c in &checks {
        match &c.outcome {
            Ok(()) => out.push_str(&format!("  {}: ok\n", c.name)),
            Err(msg) => out.push_str(&format!("  {}: FAILED ({msg})\n", c.name)),
        }
    }
    if failed == 0 {
        out.push_str(&format!("all {} checks passed\n", checks.len()));
    } else {
        out.push_str(&format!("{failed} of {} checks failed\n", checks.len()));
    }
    Ok((out, code))
}

// ---------------------------------------------------------------- rank2 ----

pub fn cmd_rank2(as_json: bool) -> CmdResult {
    let catalog = rank2_catalog();
    let mut rows = vec![vec![
        "name".to_string(),
        "roots".to_string(),
        "Weyl order".to_string(),
        "diagram".to_string(),
    ]];
    let mut infos = Vec::new();
    for entry in &catalog {
        let report = entry.system.verify_axioms();
        if !report.ok {
            return Err(failure(format!(
                "catalog entry {} fails the axioms: {}",
                entry.name,
                report.violations.join("; ")
            )));
        }
        let order = entry.system.weyl_group(1000).map_err(lib_err)?.len();
        let base = entry.system.find_base().map_err(lib_err)?;
        let d = build_diagram(&entry.system, &base).map_err(lib_err)?;
        let label = classification_label(&d).join(" + ");
        rows.push(vec![
            entry.name.to_string(),
            entry.system.roots.len().to_string(),
            order.to_string(),
            label.clone(),
        ]);
        infos.push((entry.name, entry.system.roots.len(), order, label));
    }
    // Equivalence classes under root-system equivalence, in catalog order.
    let mut classes: Vec<Vec<usize>> = Vec::new();
    'outer: for i in 0..catalog.len() {
        for class in classes.iter_mut() {
            let rep = class[0];
            if catalog[rep]
                .system
                .equivalent(&catalog[i].system)
                .map_err(lib_err)?
            {
                class.push(i);
                continue 'outer;
            }
        }
        classes.push(vec![i]);
    }
    let class_names: Vec<Vec<&str>> = classes
        .iter()
        .map(|c| c.iter().map(|&i| catalog[i].name).collect())
        .collect();
    if as_json {
        let systems: Vec<Value> = infos
            .iter()
            .map(|(name, roots, order, label)| {
                json!({
                    "name": name,
                    "roots": roots,
                    "weyl_order": order,
                    "classification": label,
                })
            })
            .collect();
        let doc = json!({
            "systems": systems,
            "equivalence_classes": class_names,
        });
        return Ok(format!("{}\n", serde_json::to_string_pretty(&doc).unwrap()));
    }
    let mut out = String::from("rank-2 root systems\n");
    out.push_str(&render_columns(&rows));
    let class_strs: Vec<String> = class_names
        .iter()
        .map(|c| format!("{{{}}}", c.join(", ")))
        .collect();
    out.push_str(&format!("equivalence classes: {}\n", class_strs.join(" ")));
    Ok(out)
}

// ------------------------------------------------------------------ misc ---

/// Exists so the doc renderer sees typed rationals; used by integration tests.
pub fn format_rational(p: i64, q: i64) -> String {
    rat_str(&rat(p, q))
}
