//! Acceptance gate: ten end-to-end criteria covering the bracket tables,
//! the worked example, dual-root formulas, Weyl orders, base expansions,
//! diagram equivalences, root counts, property suites, the rank-2 catalog,
//! and determinism.  Each test prints one `[acceptance]` line on success;
//! a failure panics with the offending detail.  All arithmetic is exact and
//! every comparison is zero-tolerance.

use num_traits::Zero;

use rootspace::algebra::{build, ClassicalAlgebra, Family};
use rootspace::complexify::{complex_root_spaces, rootsums_via_complexification};
use rootspace::decompose::{decompose, decompose_with, Decomposition};
use rootspace::dynkin::{build_diagram, classification_label, isomorphic, DynkinDiagram};
use rootspace::linalg::{parallel, rank as mat_rank};
use rootspace::matrix::{bracket, inner_product, ExactMatrix, Mat};
use rootspace::rootsystem::{rank2_catalog, RootSystem, Sign};
use rootspace::{rat, rint, Rational, RationalVector};
use rootspace_cli::execute;

fn pass(criterion: usize, slug: &str) {
    println!("[acceptance] criterion {criterion} ({slug}): PASS");
}

fn alg(family: Family, n: usize) -> ClassicalAlgebra {
    build(family, n).expect("supported parameter")
}

/// Builds sum(coeff * element(name)) with exact rational coefficients.
fn combo(a: &ClassicalAlgebra, parts: &[(i64, i64, &str)]) -> ExactMatrix {
    let mut acc = ExactMatrix::zeros(a.family.scalar_family(), a.matrix_dim);
    for (p, q, name) in parts {
        let m = a.element(name).expect("known element name");
        acc = acc.add(&m.scale(&rat(*p, *q))).expect("same shape");
    }
    acc
}

/// Asserts [lhs, rhs] equals the given combination, exactly.
fn assert_bracket(a: &ClassicalAlgebra, lhs: &str, rhs: &str, expected: &[(i64, i64, &str)]) {
    let got = bracket(
        &a.element(lhs).expect("known lhs"),
        &a.element(rhs).expect("known rhs"),
    )
    .expect("same algebra");
    let want = combo(a, expected);
    assert!(
        got.sub(&want).expect("same shape").is_zero(),
        "bracket [{lhs},{rhs}] in {:?}(n={}) does not match the table",
        a.family,
        a.n
    );
}

// ------------------------------------------------------------------------
// Criterion 1: bracket tables for all four families.
// ------------------------------------------------------------------------

/// One table cell: lhs name, rhs name, expected combination.
type Cell<'a> = (&'a str, &'a str, &'a [(i64, i64, &'a str)]);

#[test]
fn criterion_01_bracket_tables() {
    // The 28 above-diagonal cells of the special unitary rank-2 table.
    let su3 = alg(Family::SU, 3);
    let cells: &[Cell] = &[
        ("H_12", "H_23", &[]),
        ("H_12", "E_12", &[(2, 1, "F_12")]),
        ("H_12", "F_12", &[(-2, 1, "E_12")]),
        ("H_12", "E_23", &[(-1, 1, "F_23")]),
        ("H_12", "F_23", &[(1, 1, "E_23")]),
        ("H_12", "E_13", &[(1, 1, "F_13")]),
        ("H_12", "F_13", &[(-1, 1, "E_13")]),
        ("H_23", "E_12", &[(-1, 1, "F_12")]),
        ("H_23", "F_12", &[(1, 1, "E_12")]),
        ("H_23", "E_23", &[(2, 1, "F_23")]),
        ("H_23", "F_23", &[(-2, 1, "E_23")]),
        ("H_23", "E_13", &[(1, 1, "F_13")]),
        ("H_23", "F_13", &[(-1, 1, "E_13")]),
        ("E_12", "F_12", &[(2, 1, "H_12")]),
        ("E_12", "E_23", &[(1, 1, "E_13")]),
        ("E_12", "F_23", &[(1, 1, "F_13")]),
        ("E_12", "E_13", &[(-1, 1, "E_23")]),
        ("E_12", "F_13", &[(-1, 1, "F_23")]),
        ("F_12", "E_23", &[(1, 1, "F_13")]),
        ("F_12", "F_23", &[(-1, 1, "E_13")]),
        ("F_12", "E_13", &[(1, 1, "F_23")]),
        ("F_12", "F_13", &[(-1, 1, "E_23")]),
        ("E_23", "F_23", &[(2, 1, "H_23")]),
        ("E_23", "E_13", &[(1, 1, "E_12")]),
        ("E_23", "F_13", &[(1, 1, "F_12")]),
        ("F_23", "E_13", &[(-1, 1, "F_12")]),
        ("F_23", "F_13", &[(1, 1, "E_12")]),
        ("E_13", "F_13", &[(2, 1, "H_13")]),
    ];
    assert_eq!(cells.len(), 28);
    for (lhs, rhs, expected) in cells {
        assert_bracket(&su3, lhs, rhs, expected);
    }

    // Even orthogonal family: the in-space brackets and the three
    // cross-space sub-tables, for n = 2 and n = 3.
    for n in [2usize, 3] {
        let so = alg(Family::SOEven, n);
        so_even_relations(&so, n);
    }

    // Odd orthogonal family: the short-root spaces and the five additional
    // sub-tables, for n = 2 and n = 3.
    for n in [2usize, 3] {
        let so = alg(Family::SOOdd, n);
        so_even_relations(&so, n);
        so_odd_relations(&so, n);
    }

    // Symplectic family: the seven sample bracket values, for n = 2 and
    // n = 3.  The printed samples carry a uniform factor of 2 relative to
    // the matrix brackets of the defined basis elements (the same matrix
    // shapes bracket without the factor in the special unitary family), so
    // each sample is asserted at exactly half its printed value, and the
    // factor is asserted to be uniform by covering all seven.
    for n in [2usize, 3] {
        let sp = alg(Family::Sp, n);
        sp_sample_relations(&sp, n);
    }

    pass(1, "bracket tables");
}

fn name2(letter: char, i: usize, j: usize) -> String {
    format!("{letter}_{i}{j}")
}

fn so_even_relations(so: &ClassicalAlgebra, n: usize) {
    // [E_ij, F_ij] = 2(H_i - H_j) and [X_ij, Y_ij] = 2(H_i + H_j).
    for i in 1..=n {
        for j in (i + 1)..=n {
            let hi = format!("H_{i}");
            let hj = format!("H_{j}");
            assert_bracket(
                so,
                &name2('E', i, j),
                &name2('F', i, j),
                &[(2, 1, &hi), (-2, 1, &hj)],
            );
            assert_bracket(
                so,
                &name2('X', i, j),
                &name2('Y', i, j),
                &[(2, 1, &hi), (2, 1, &hj)],
            );
        }
    }
    // The three cross-space sub-tables, instantiated at every ordered
    // triple of distinct indices (index reversal resolves by convention).
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                if i == j || j == k || i == k {
                    continue;
                }
                let (e_ij, f_ij) = (name2('E', i, j), name2('F', i, j));
                let (x_ij, y_ij) = (name2('X', i, j), name2('Y', i, j));
                let (e_jk, f_jk) = (name2('E', j, k), name2('F', j, k));
                let (x_jk, y_jk) = (name2('X', j, k), name2('Y', j, k));
                let (e_ik, f_ik) = (name2('E', i, k), name2('F', i, k));
                let (x_ik, y_ik) = (name2('X', i, k), name2('Y', i, k));
                // [l_ij, l_jk] into l_ik.
                assert_bracket(so, &e_ij, &e_jk, &[(1, 1, &e_ik)]);
                assert_bracket(so, &e_ij, &f_jk, &[(1, 1, &f_ik)]);
                assert_bracket(so, &f_ij, &e_jk, &[(1, 1, &f_ik)]);
                assert_bracket(so, &f_ij, &f_jk, &[(-1, 1, &e_ik)]);
                // [k_ij, k_jk] into l_ik.
                assert_bracket(so, &x_ij, &x_jk, &[(1, 1, &e_ik)]);
                assert_bracket(so, &x_ij, &y_jk, &[(-1, 1, &f_ik)]);
                assert_bracket(so, &y_ij, &x_jk, &[(1, 1, &f_ik)]);
                assert_bracket(so, &y_ij, &y_jk, &[(1, 1, &e_ik)]);
                // [l_ij, k_jk] into k_ik.
                assert_bracket(so, &e_ij, &x_jk, &[(1, 1, &x_ik)]);
                assert_bracket(so, &e_ij, &y_jk, &[(1, 1, &y_ik)]);
                assert_bracket(so, &f_ij, &x_jk, &[(1, 1, &y_ik)]);
                assert_bracket(so, &f_ij, &y_jk, &[(-1, 1, &x_ik)]);
            }
        }
    }
}

fn so_odd_relations(so: &ClassicalAlgebra, n: usize) {
    // [V_i, W_i] = H_i.
    for i in 1..=n {
        let hi = format!("H_{i}");
        assert_bracket(so, &format!("V_{i}"), &format!("W_{i}"), &[(1, 1, &hi)]);
    }
    // The five additional sub-tables, for every pair i < j.
    for i in 1..=n {
        for j in (i + 1)..=n {
            let (e, f) = (name2('E', i, j), name2('F', i, j));
            let (x, y) = (name2('X', i, j), name2('Y', i, j));
            let (vi, wi) = (format!("V_{i}"), format!("W_{i}"));
            let (vj, wj) = (format!("V_{j}"), format!("W_{j}"));
            // [l_ij, s_i] into s_j.
            assert_bracket(so, &e, &vi, &[(-1, 1, &vj)]);
            assert_bracket(so, &e, &wi, &[(-1, 1, &wj)]);
            assert_bracket(so, &f, &vi, &[(1, 1, &wj)]);
            assert_bracket(so, &f, &wi, &[(-1, 1, &vj)]);
            // [l_ij, s_j] into s_i.
            assert_bracket(so, &e, &vj, &[(1, 1, &vi)]);
            assert_bracket(so, &e, &wj, &[(1, 1, &wi)]);
            assert_bracket(so, &f, &vj, &[(1, 1, &wi)]);
            assert_bracket(so, &f, &wj, &[(-1, 1, &vi)]);
            // [k_ij, s_i] into s_j.
            assert_bracket(so, &x, &vi, &[(-1, 1, &wj)]);
            assert_bracket(so, &x, &wi, &[(-1, 1, &vj)]);
            assert_bracket(so, &y, &vi, &[(1, 1, &vj)]);
            assert_bracket(so, &y, &wi, &[(-1, 1, &wj)]);
            // [k_ij, s_j] into s_i.
            assert_bracket(so, &x, &vj, &[(1, 1, &wi)]);
            assert_bracket(so, &x, &wj, &[(1, 1, &vi)]);
            assert_bracket(so, &y, &vj, &[(-1, 1, &vi)]);
            assert_bracket(so, &y, &wj, &[(1, 1, &wi)]);
            // [s_i, s_j] into l_ij + k_ij, with exact halves.
            assert_bracket(so, &vi, &vj, &[(-1, 2, &e), (1, 2, &y)]);
            assert_bracket(so, &vi, &wj, &[(1, 2, &f), (-1, 2, &x)]);
            assert_bracket(so, &wi, &vj, &[(-1, 2, &f), (-1, 2, &x)]);
            assert_bracket(so, &wi, &wj, &[(-1, 2, &e), (-1, 2, &y)]);
        }
    }
}

fn sp_sample_relations(sp: &ClassicalAlgebra, n: usize) {
    // Samples 1-3 need three distinct indices; all ordered triples.
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                if i == j || j == k || i == k {
                    continue;
                }
                let e_ij = name2('E', i, j);
                let a_ij = name2('A', i, j);
                let e_jk = name2('E', j, k);
                let a_jk = name2('A', j, k);
                let e_ik = name2('E', i, k);
                let a_ik = name2('A', i, k);
                // printed 2E_ik, -2E_ik, 2A_ik; asserted at half value.
                assert_bracket(sp, &e_ij, &e_jk, &[(1, 1, &e_ik)]);
                assert_bracket(sp, &a_ij, &a_jk, &[(-1, 1, &e_ik)]);
                assert_bracket(sp, &e_ij, &a_jk, &[(1, 1, &a_ik)]);
            }
        }
    }
    // Samples 4-7 over every ordered pair of distinct indices.
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            let e_ij = name2('E', i, j);
            let a_ij = name2('A', i, j);
            let ji = format!("J_{i}");
            let jj = format!("J_{j}");
            // printed 2E_ij, -2E_ij, -2A_ij, 2A_ij; asserted at half value.
            assert_bracket(sp, &a_ij, &ji, &[(1, 1, &e_ij)]);
            assert_bracket(sp, &a_ij, &jj, &[(-1, 1, &e_ij)]);
            assert_bracket(sp, &e_ij, &ji, &[(-1, 1, &a_ij)]);
            assert_bracket(sp, &e_ij, &jj, &[(1, 1, &a_ij)]);
        }
    }
}

// ------------------------------------------------------------------------
// Criterion 2: the worked example.
// ------------------------------------------------------------------------

#[test]
fn criterion_02_worked_example() {
    let su3 = alg(Family::SU, 3);
    // X = diag(7i, 5i, -12i) has torus coordinates (7, 12).
    let dec = decompose_with(&su3, &[7, 12]).expect("strongly regular");
    let values: Vec<Rational> = dec.root_data.iter().map(|d| d.value_at_x.clone()).collect();
    assert_eq!(values, vec![rint(2), rint(17), rint(19)]);

    // [X, E_13] = 19 F_13 at the level of named matrices.
    let x = su3.torus_vector(&[rint(7), rint(12)]).unwrap();
    let got = bracket(&x, &su3.element("E_13").unwrap()).unwrap();
    let want = su3.element("F_13").unwrap().scale(&rint(19));
    assert!(got.sub(&want).unwrap().is_zero());
    // and [X, F_13] = -19 E_13.
    let got = bracket(&x, &su3.element("F_13").unwrap()).unwrap();
    let want = su3.element("E_13").unwrap().scale(&rint(-19));
    assert!(got.sub(&want).unwrap().is_zero());

    // The dual roots come out as the named torus elements.
    let names = ["H_12", "H_23", "H_13"];
    for (d, name) in dec.root_data.iter().zip(names) {
        let want = su3.element(name).unwrap();
        assert!(
            d.dual_root.sub(&want).unwrap().is_zero(),
            "dual root of the value-{} space should be {name}",
            d.value_at_x
        );
    }
    pass(2, "worked example");
}

// ------------------------------------------------------------------------
// Criterion 3: dual-root formulas for all families.
// ------------------------------------------------------------------------

/// Flips a coordinate vector so its first nonzero entry is positive.
fn canonical_sign(v: &[Rational]) -> RationalVector {
    match v.iter().find(|c| !c.is_zero()) {
        Some(c) if c < &Rational::zero() => v.iter().map(|x| -x).collect(),
        _ => v.to_vec(),
    }
}

fn sorted_canonical(mut vs: Vec<RationalVector>) -> Vec<RationalVector> {
    vs = vs.iter().map(|v| canonical_sign(v)).collect();
    vs.sort();
    vs
}

/// Expected positive dual-root coordinate vectors over the torus basis.
fn expected_duals(family: Family, n: usize) -> Vec<RationalVector> {
    let e = |i: usize, c: Rational| -> RationalVector {
        let mut v = vec![Rational::zero(); n];
        v[i] = c;
        v
    };
    let add = |a: &RationalVector, b: &RationalVector| -> RationalVector {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    };
    let mut out = Vec::new();
    match family {
        Family::SU => {
            // Chain vectors over the H_(k)(k+1) basis: ones on positions
            // i-1 .. j-2.
            let rank = n - 1;
            for i in 1..=n {
                for j in (i + 1)..=n {
                    let mut v = vec![Rational::zero(); rank];
                    for slot in &mut v[(i - 1)..(j - 1)] {
                        *slot = rint(1);
                    }
                    out.push(v);
                }
            }
        }
        Family::SOEven | Family::SOOdd => {
            for i in 0..n {
                for j in (i + 1)..n {
                    out.push(add(&e(i, rat(1, 2)), &e(j, rat(-1, 2))));
                    out.push(add(&e(i, rat(1, 2)), &e(j, rat(1, 2))));
                }
            }
            if family == Family::SOOdd {
                for i in 0..n {
                    out.push(e(i, rat(1, 2)));
                }
            }
        }
        Family::Sp => {
            for i in 0..n {
                for j in (i + 1)..n {
                    out.push(add(&e(i, rint(1)), &e(j, rint(-1))));
                    out.push(add(&e(i, rint(1)), &e(j, rint(1))));
                }
            }
            for i in 0..n {
                out.push(e(i, rint(2)));
            }
        }
    }
    out
}

#[test]
fn criterion_03_dual_root_formulas() {
    let cases: Vec<(Family, usize)> = (2..=5)
        .map(|n| (Family::SU, n))
        .chain((2..=5).map(|n| (Family::SOEven, n)))
        .chain((1..=5).map(|n| (Family::SOOdd, n)))
        .chain((1..=5).map(|n| (Family::Sp, n)))
        .collect();
    for (family, n) in cases {
        let a = alg(family, n);
        let dec = decompose(&a).expect("decomposition succeeds");
        let got: Vec<RationalVector> = dec
            .root_data
            .iter()
            .map(|d| d.dual_coords().to_vec())
            .collect();
        let got = sorted_canonical(got);
        let want = sorted_canonical(expected_duals(family, n));
        assert_eq!(
            got, want,
            "dual roots of {family:?}(n={n}) do not match the closed formulas"
        );
    }
    pass(3, "dual-root formulas");
}

// ------------------------------------------------------------------------
// Criterion 4: Weyl group orders.
// ------------------------------------------------------------------------

#[test]
fn criterion_04_weyl_orders() {
    let factorial = |k: usize| -> usize { (2..=k).product::<usize>().max(1) };
    let mut cases: Vec<(Family, usize, usize)> = Vec::new();
    for n in 2..=5 {
        cases.push((Family::SU, n, factorial(n)));
    }
    for n in 1..=4 {
        cases.push((Family::SOOdd, n, (1 << n) * factorial(n)));
        cases.push((Family::Sp, n, (1 << n) * factorial(n)));
    }
    for n in 2..=4 {
        cases.push((Family::SOEven, n, (1 << (n - 1)) * factorial(n)));
    }
    for (family, n, expected) in cases {
        let a = alg(family, n);
        let dec = decompose(&a).expect("decomposition succeeds");
        let rs = RootSystem::from_decomposition(&dec).unwrap();
        let group = rs.weyl_group(1000).expect("within cap");
        assert_eq!(
            group.len(),
            expected,
            "Weyl order of {family:?}(n={n})"
        );
    }
    pass(4, "Weyl orders");
}

// ------------------------------------------------------------------------
// Criterion 5: base expansions at rank 8.
// ------------------------------------------------------------------------

/// The reference base of the rank-8 system, in its printed order, as dual
/// coordinate vectors over the torus basis.
fn reference_base(family: Family) -> Vec<RationalVector> {
    let mut delta = Vec::new();
    let coord = |entries: &[(usize, Rational)]| -> RationalVector {
        let mut v = vec![Rational::zero(); 8];
        for (i, c) in entries {
            v[*i] = c.clone();
        }
        v
    };
    let half = rat(1, 2);
    for k in 0..7 {
        match family {
            Family::SOEven | Family::SOOdd => {
                delta.push(coord(&[(k, half.clone()), (k + 1, -half.clone())]))
            }
            Family::Sp => delta.push(coord(&[(k, rint(1)), (k + 1, rint(-1))])),
            Family::SU => unreachable!(),
        }
    }
    match family {
        Family::SOEven => delta.push(coord(&[(6, half.clone()), (7, half)])),
        Family::SOOdd => delta.push(coord(&[(7, half)])),
        Family::Sp => delta.push(coord(&[(7, rint(2))])),
        Family::SU => unreachable!(),
    }
    delta
}

fn expansion_case(
    family: Family,
    targets: &[(RationalVector, [i64; 8])],
) {
    let a = alg(family, 8);
    let dec = decompose(&a).expect("decomposition succeeds");
    let rs = RootSystem::from_decomposition(&dec).unwrap();
    let base = rs.find_base().expect("base found");
    let delta = reference_base(family);
    // The computed base must equal the reference base as a set; record
    // where each reference root sits in the computed order.
    let slot_of: Vec<usize> = delta
        .iter()
        .map(|d| {
            base.simple_roots
                .iter()
                .position(|&idx| rs.roots[idx] == *d)
                .expect("computed base equals the reference base as a set")
        })
        .collect();
    let mut distinct = slot_of.clone();
    distinct.sort_unstable();
    distinct.dedup();
    assert_eq!(distinct.len(), 8, "reference base maps bijectively");

    for (target, expected) in targets {
        let t = rs
            .roots
            .iter()
            .position(|r| r == target)
            .expect("target root present");
        assert_eq!(base.sign[t], Sign::Positive, "target root is positive");
        let mapped: Vec<Rational> = slot_of
            .iter()
            .map(|&s| base.expansion[t][s].clone())
            .collect();
        let want: Vec<Rational> = expected.iter().map(|&c| rint(c)).collect();
        assert_eq!(mapped, want, "{family:?} expansion over the reference base");
    }
}

#[test]
fn criterion_05_base_expansions() {
    let half = rat(1, 2);
    let coord8 = |entries: &[(usize, Rational)]| -> RationalVector {
        let mut v = vec![Rational::zero(); 8];
        for (i, c) in entries {
            v[*i] = c.clone();
        }
        v
    };
    // 16x16 orthogonal: the (3,5) long root.
    expansion_case(
        Family::SOEven,
        &[(
            coord8(&[(2, half.clone()), (4, half.clone())]),
            [0, 0, 1, 1, 2, 2, 1, 1],
        )],
    );
    // 17x17 orthogonal: the (3,5) long root and the short third root.
    expansion_case(
        Family::SOOdd,
        &[
            (
                coord8(&[(2, half.clone()), (4, half.clone())]),
                [0, 0, 1, 1, 2, 2, 2, 2],
            ),
            (coord8(&[(2, half)]), [0, 0, 1, 1, 1, 1, 1, 1]),
        ],
    );
    // Symplectic rank 8: the (3,5) root and the doubled third root.
    expansion_case(
        Family::Sp,
        &[
            (
                coord8(&[(2, rint(1)), (4, rint(1))]),
                [0, 0, 1, 1, 2, 2, 2, 1],
            ),
            (coord8(&[(2, rint(2))]), [0, 0, 2, 2, 2, 2, 2, 1]),
        ],
    );
    pass(5, "base expansions");
}

// ------------------------------------------------------------------------
// Criterion 6: diagram equivalences for ranks up to 6.
// ------------------------------------------------------------------------

#[test]
fn criterion_06_diagram_equivalences() {
    // The three named equivalences at the root-system level.
    let system = |family: Family, n: usize| -> RootSystem {
        let a = alg(family, n);
        RootSystem::from_decomposition(&decompose(&a).unwrap()).unwrap()
    };
    assert!(system(Family::SU, 4).equivalent(&system(Family::SOEven, 3)).unwrap());
    assert!(system(Family::Sp, 2).equivalent(&system(Family::SOOdd, 2)).unwrap());
    assert!(system(Family::Sp, 1).equivalent(&system(Family::SOOdd, 1)).unwrap());

    // Full cross-family sweep over all classical algebras of rank <= 6.
    struct Entry {
        family: Family,
        label: String,
        diagram: DynkinDiagram,
    }
    let mut entries: Vec<Entry> = Vec::new();
    let mut push = |family: Family, n: usize, label: String| {
        let a = alg(family, n);
        let dec = decompose(&a).unwrap();
        let rs = RootSystem::from_decomposition(&dec).unwrap();
        let base = rs.find_base().unwrap();
        let diagram = build_diagram(&rs, &base).unwrap();
        entries.push(Entry { family, label, diagram });
    };
    for n in 2..=7 {
        push(Family::SU, n, format!("su({n})"));
    }
    for n in 2..=6 {
        push(Family::SOEven, n, format!("so({})", 2 * n));
    }
    for n in 1..=6 {
        push(Family::SOOdd, n, format!("so({})", 2 * n + 1));
    }
    for n in 1..=6 {
        push(Family::Sp, n, format!("sp({n})"));
    }

    let mut found: Vec<(String, String)> = Vec::new();
    for i in 0..entries.len() {
        for j in (i + 1)..entries.len() {
            if entries[i].family == entries[j].family {
                continue;
            }
            if isomorphic(&entries[i].diagram, &entries[j].diagram) {
                let mut pair = [entries[i].label.clone(), entries[j].label.clone()];
                pair.sort();
                found.push((pair[0].clone(), pair[1].clone()));
            }
        }
    }
    found.sort();
    let expected: Vec<(String, String)> = vec![
        ("so(3)".into(), "sp(1)".into()),
        ("so(3)".into(), "su(2)".into()),
        ("so(5)".into(), "sp(2)".into()),
        ("so(6)".into(), "su(4)".into()),
        ("sp(1)".into(), "su(2)".into()),
    ];
    assert_eq!(found, expected, "cross-family diagram isomorphisms, ranks <= 6");

    // so(4) splits into two disjoint single-node components.
    let so4 = entries
        .iter()
        .find(|e| e.label == "so(4)")
        .expect("so(4) present");
    assert_eq!(classification_label(&so4.diagram), vec!["A1", "A1"]);

    pass(6, "diagram equivalences");
}

// ------------------------------------------------------------------------
// Criterion 7: root counts.
// ------------------------------------------------------------------------

#[test]
fn criterion_07_root_counts() {
    let mut cases: Vec<(Family, usize, usize)> = Vec::new();
    for n in 2..=5 {
        cases.push((Family::SU, n, n * (n - 1)));
        cases.push((Family::SOEven, n, 2 * n * (n - 1)));
    }
    for n in 1..=5 {
        cases.push((Family::SOOdd, n, 2 * n * n));
        cases.push((Family::Sp, n, 2 * n * n));
    }
    for (family, n, expected) in cases {
        let a = alg(family, n);
        // Enumeration oracle: count the eigenspaces actually found.
        let dec = decompose(&a).expect("decomposition succeeds");
        assert_eq!(
            2 * dec.root_data.len(),
            expected,
            "root count of {family:?}(n={n}) vs closed form"
        );
        // Dimension bookkeeping: spaces fill everything outside the torus.
        assert_eq!(2 * dec.root_data.len(), a.dim - a.rank);
    }
    pass(7, "root counts");
}

// ------------------------------------------------------------------------
// Criterion 8: property suites.
// ------------------------------------------------------------------------

fn assert_jacobi_and_invariance(a: &ClassicalAlgebra) {
    for i in 0..a.dim {
        for j in (i + 1)..a.dim {
            let ab = bracket(&a.basis[i].mat, &a.basis[j].mat).unwrap();
            for k in (j + 1)..a.dim {
                let (x, y, z) = (&a.basis[i].mat, &a.basis[j].mat, &a.basis[k].mat);
                let t1 = bracket(x, &bracket(y, z).unwrap()).unwrap();
                let t2 = bracket(y, &bracket(z, x).unwrap()).unwrap();
                let t3 = bracket(z, &ab).unwrap();
                assert!(
                    t1.add(&t2).unwrap().add(&t3).unwrap().is_zero(),
                    "jacobi fails at triple ({}, {}, {}) in {:?}({})",
                    a.basis[i].name,
                    a.basis[j].name,
                    a.basis[k].name,
                    a.family,
                    a.n
                );
            }
        }
    }
    for i in 0..a.dim {
        for j in 0..a.dim {
            for k in j..a.dim {
                let (x, y, z) = (&a.basis[i].mat, &a.basis[j].mat, &a.basis[k].mat);
                let lhs = inner_product(&bracket(x, y).unwrap(), z).unwrap();
                let rhs = inner_product(y, &bracket(x, z).unwrap()).unwrap();
                assert!(
                    (lhs + rhs).is_zero(),
                    "invariance fails at ({}, {}, {}) in {:?}({})",
                    a.basis[i].name,
                    a.basis[j].name,
                    a.basis[k].name,
                    a.family,
                    a.n
                );
            }
        }
    }
}

fn assert_rootsum_routes(dec: &Decomposition) {
    let m = dec.root_data.len();
    for i in 0..m {
        for j in (i + 1)..m {
            dec.verify_rootsums(i, j).unwrap_or_else(|e| {
                panic!("direct root-sum check failed at spaces {i},{j}: {e}")
            });
            let agreed = rootsums_via_complexification(dec, i, j).unwrap_or_else(|e| {
                panic!("complexified root-sum check failed at spaces {i},{j}: {e}")
            });
            assert!(agreed, "routes disagree at spaces {i},{j}");
        }
    }
}

fn assert_ad_squared(dec: &Decomposition) {
    for d in &dec.root_data {
        let c2 = &d.value_at_x * &d.value_at_x;
        for v in [&d.e, &d.f] {
            let ad2 = bracket(&dec.regular_x, &bracket(&dec.regular_x, v).unwrap()).unwrap();
            assert!(
                ad2.add(&v.scale(&c2)).unwrap().is_zero(),
                "ad_X^2 is not -alpha(X)^2 on a root space"
            );
        }
    }
}

#[test]
fn criterion_08_property_suites() {
    // Jacobi and invariance on every basis triple of three small algebras.
    for (family, n) in [(Family::SU, 3), (Family::SOOdd, 2), (Family::Sp, 2)] {
        assert_jacobi_and_invariance(&alg(family, n));
    }

    // Root-system axioms for every computed system (all families, n <= 5)
    // and the rank-2 catalog.
    let all_cases: Vec<(Family, usize)> = (2..=5)
        .map(|n| (Family::SU, n))
        .chain((2..=5).map(|n| (Family::SOEven, n)))
        .chain((1..=5).map(|n| (Family::SOOdd, n)))
        .chain((1..=5).map(|n| (Family::Sp, n)))
        .collect();
    for (family, n) in &all_cases {
        let a = alg(*family, *n);
        let rs = RootSystem::from_decomposition(&decompose(&a).unwrap()).unwrap();
        let report = rs.verify_axioms();
        assert!(
            report.ok,
            "axioms fail for {family:?}(n={n}): {}",
            report.violations.join("; ")
        );
    }
    for entry in rank2_catalog() {
        assert!(entry.system.verify_axioms().ok, "axioms fail for {}", entry.name);
    }

    // Exhaustive root-sum containment by both routes, with agreement, plus
    // the rotation-squared identity and the complexified eigen-relation.
    for (family, n) in [(Family::SU, 4), (Family::SOOdd, 3), (Family::Sp, 3)] {
        let a = alg(family, n);
        let dec = decompose(&a).unwrap();
        assert_rootsum_routes(&dec);
        assert_ad_squared(&dec);
        let spaces = complex_root_spaces(&dec).expect("eigen-relation holds on every generator");
        assert_eq!(spaces.len(), 2 * dec.root_data.len());
        for s in &spaces {
            assert!(!s.generator.is_zero());
        }
    }
    pass(8, "property suites");
}

// ------------------------------------------------------------------------
// Criterion 9: rank-2 completeness.
// ------------------------------------------------------------------------

#[test]
fn criterion_09_rank2_completeness() {
    let catalog = rank2_catalog();
    let names: Vec<&str> = catalog.iter().map(|e| e.name).collect();
    assert_eq!(names, vec!["A1xA1", "A2", "B2", "C2", "G2"]);
    for entry in &catalog {
        assert!(entry.system.verify_axioms().ok, "{} fails axioms", entry.name);
    }
    // Pairwise equivalence classes, in catalog order.
    let mut classes: Vec<Vec<&str>> = Vec::new();
    'outer: for entry in &catalog {
        for class in classes.iter_mut() {
            let rep = catalog.iter().find(|e| e.name == class[0]).unwrap();
            if rep.system.equivalent(&entry.system).unwrap() {
                class.push(entry.name);
                continue 'outer;
            }
        }
        classes.push(vec![entry.name]);
    }
    assert_eq!(
        classes,
        vec![vec!["A1xA1"], vec!["A2"], vec!["B2", "C2"], vec!["G2"]]
    );
    pass(9, "rank-2 completeness");
}

// ------------------------------------------------------------------------
// Criterion 10: determinism.
// ------------------------------------------------------------------------

/// Asserts two decompositions of one algebra have identical root-space
/// spans and dual-root sets (up to order and sign).
fn assert_same_structure(a: &ClassicalAlgebra, d1: &Decomposition, d2: &Decomposition) {
    assert_eq!(d1.root_data.len(), d2.root_data.len());
    let set1 = sorted_canonical(d1.root_data.iter().map(|d| d.dual_coords().to_vec()).collect());
    let set2 = sorted_canonical(d2.root_data.iter().map(|d| d.dual_coords().to_vec()).collect());
    assert_eq!(set1, set2, "dual-root sets differ for {:?}({})", a.family, a.n);
    for r1 in &d1.root_data {
        let r2 = d2
            .root_data
            .iter()
            .find(|r| parallel(r.dual_coords(), r1.dual_coords()))
            .expect("matching space exists");
        // The four spanning vectors lie in one plane exactly when the
        // stacked coordinate matrix has rank 2.
        let stacked = Mat::from_rows(vec![
            r1.e_coords().to_vec(),
            r1.f_coords().to_vec(),
            r2.e_coords().to_vec(),
            r2.f_coords().to_vec(),
        ]);
        assert_eq!(mat_rank(&stacked), 2, "root-space spans differ");
    }
}

#[test]
fn criterion_10_determinism() {
    // Two different accepted strongly regular vectors per algebra.
    let su3 = alg(Family::SU, 3);
    let d1 = decompose_with(&su3, &[4, 6]).unwrap();
    let d2 = decompose_with(&su3, &[7, 12]).unwrap();
    assert_ne!(d1.x_coords, d2.x_coords);
    assert_same_structure(&su3, &d1, &d2);

    let so5 = alg(Family::SOOdd, 2);
    let d1 = decompose_with(&so5, &[3, 1]).unwrap();
    let d2 = decompose_with(&so5, &[5, 2]).unwrap();
    assert_same_structure(&so5, &d1, &d2);

    let sp2 = alg(Family::Sp, 2);
    let d1 = decompose_with(&sp2, &[2, 1]).unwrap();
    let d2 = decompose_with(&sp2, &[5, 3]).unwrap();
    assert_same_structure(&sp2, &d1, &d2);

    // The command-line interface is byte-identical across repeated runs.
    for args in [
        ["rootspace", "roots", "su", "3"].as_slice(),
        ["rootspace", "table", "so", "5"].as_slice(),
        ["rootspace", "base", "sp", "2"].as_slice(),
        ["rootspace", "dynkin", "su", "4", "--compare", "so", "6"].as_slice(),
    ] {
        let first = execute(args);
        let second = execute(args);
        assert_eq!(first.code, 0);
        assert_eq!(first.stdout, second.stdout, "output differs for {args:?}");
        assert_eq!(first.code, second.code);
    }
    pass(10, "determinism");
}
