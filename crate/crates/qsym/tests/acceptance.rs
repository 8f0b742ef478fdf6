//! Acceptance suite: one test per acceptance criterion, each ending in a
//! single PASS line (visible with --nocapture). All checks are exact.

use std::collections::BTreeMap;

use qsym::action::{
    define_coaction, verify_e45_relations, Coaction, GroupAction, RkElem,
};
use qsym::classify::{self, ActionCatalogEntry};
use qsym::groups::MatGroup;
use qsym::hopf::{he_single, HopfAlg};
use qsym::invariants::{
    coinvariant_slice, invariant_slice, molien_series, reduced_denominator_degree,
    t_coinvariants_equal_u2q, GradedSubring,
};
use qsym::mckay::{self, QuiverType};
use qsym::ncalg::{series_divides, NcElement, PresentedAlgebra, SeriesDivision};
use qsym::scalar::CycScalar;

fn zeta(n: u64, k: i64) -> CycScalar {
    CycScalar::root_of_unity(n, k)
}

fn catalog_map() -> BTreeMap<String, ActionCatalogEntry> {
    classify::catalog()
        .into_iter()
        .map(|e| (e.label.clone(), e))
        .collect()
}

fn entry_subring(e: &ActionCatalogEntry, bound: u64) -> GradedSubring {
    match &e.group_action {
        Some(act) => GradedSubring::invariants(act, bound),
        None => GradedSubring::coinvariants(&e.coaction, bound),
    }
}

/// Does the monomial satisfy ρ(m) = m ⊗ 1?
fn monomial_coinvariant(rho: &Coaction, word: &[u8]) -> bool {
    let m = NcElement::monomial(word.to_vec(), CycScalar::one());
    let img = rho.coact(&m, true);
    let mut expect: RkElem = BTreeMap::new();
    for (k, c) in &rho.hopf.unit {
        expect.insert((word.to_vec(), *k), c.clone());
    }
    img == expect
}

/// The coinvariants of ρ agree with k[u^m, v^m] in every degree up to
/// `bound`: the slice dimension equals the count of monomials u^{ma}v^{mb}
/// and each of those monomials is itself coinvariant.
fn coinvariants_equal_power_algebra(rho: &Coaction, m: u64, bound: u64) -> bool {
    for d in 0..=bound {
        let slice = coinvariant_slice(rho, d);
        let mut expected = 0usize;
        if d % m == 0 {
            for a in 0..=(d / m) {
                let b = d / m - a;
                let mut word = vec![0u8; (m * a) as usize];
                word.extend(std::iter::repeat(1u8).take((m * b) as usize));
                if !monomial_coinvariant(rho, &word) {
                    return false;
                }
                expected += 1;
            }
        }
        if slice.len() != expected {
            return false;
        }
    }
    true
}

/// Exactly one relation, at the given degree, of the shape b² = a·c (up to
/// overall scaling) in a three-generator model named a, b, c.
fn single_relation_is_b2_eq_ac(rels: &[(u64, NcElement)], degree: u64) -> bool {
    if rels.len() != 1 || rels[0].0 != degree {
        return false;
    }
    let r = &rels[0].1;
    let lead = match r.terms.get(&vec![1u8, 1u8]) {
        Some(c) => c.clone(),
        None => return false,
    };
    let normalized = r.scale(&lead.inverse());
    let mut expect = NcElement::zero();
    expect.add_term(vec![1, 1], CycScalar::one());
    expect.add_term(vec![0, 2], -&CycScalar::one());
    normalized == expect
}

fn taft_plane_coaction(q: &CycScalar, alpha: u8, n: u64) -> Coaction {
    let t = HopfAlg::taft(q, alpha, n).unwrap();
    let r = PresentedAlgebra::quantum_plane(q);
    let u = NcElement::generator(0);
    let v = NcElement::generator(1);
    define_coaction(
        &r,
        &t,
        vec![
            vec![(u.clone(), t.labeled("g").unwrap())],
            vec![(v, t.labeled("g^-1").unwrap()), (u, t.labeled("x").unwrap())],
        ],
    )
    .unwrap()
}

fn tautological_action(g: &MatGroup) -> GroupAction {
    let plane = PresentedAlgebra::polynomial_ring(
        vec!["x".to_string(), "y".to_string()],
        vec![1, 1],
    );
    GroupAction::natural(&plane, g).unwrap()
}

// ---------------------------------------------------------------------

#[test]
fn criterion_01_hopf_axioms() {
    let mut names: Vec<String> = Vec::new();
    for n in 1..=12u64 {
        names.push(format!("kG:C:{}", n));
    }
    for n in 3..=8u64 {
        names.push(format!("kG:D:{}", 2 * n));
        names.push(format!("dual:kG:D:{}", 2 * n));
    }
    for g in ["2T", "2O", "2I"] {
        names.push(format!("kG:{}", g));
    }
    // Quantum doubles of group algebras of order at most 24.
    for g in ["C:2", "C:3", "BD:8", "D:6", "2T"] {
        names.push(format!("double:{}", g));
    }
    // Taft algebras with q of order 3, 4 and 6, valid (alpha, n).
    for t in [
        "taft:q=zeta:3:1,alpha=0,n=3",
        "taft:q=zeta:3:1,alpha=1,n=3",
        "taft:q=zeta:3:1,alpha=0,n=6",
        "taft:q=zeta:4:1,alpha=0,n=4",
        "taft:q=zeta:6:1,alpha=0,n=6",
    ] {
        names.push(t.to_string());
    }
    names.push("uq:zeta:3:1".to_string());
    names.push("uq:zeta:5:1".to_string());
    names.push("u2q:zeta:4:1".to_string());
    names.push("u2q:zeta:6:1".to_string());
    names.push("u2q8:zeta:4:1".to_string());
    for name in &names {
        let h = qsym::hopf::parse_hopf(name).unwrap_or_else(|e| panic!("{}: {}", name, e));
        h.check_axioms()
            .unwrap_or_else(|w| panic!("{}: axiom failure: {}", name, w));
    }
    println!("PASS criterion 1: Hopf axioms hold for all {} catalog algebras", names.len());
}

#[test]
fn criterion_02_dimensions() {
    for (q, n) in [(zeta(3, 1), 3u64), (zeta(3, 1), 6), (zeta(4, 1), 4), (zeta(6, 1), 6)] {
        let m = (&q * &q).order_of().unwrap();
        let t = HopfAlg::taft(&q, 0, n).unwrap();
        assert_eq!(t.dim as u64, m * n, "Taft dimension m·n");
    }
    assert_eq!(HopfAlg::uq_sl2_dual(&zeta(3, 1)).unwrap().dim, 27);
    assert_eq!(HopfAlg::u2q_sl2_dual(&zeta(4, 1)).unwrap().dim, 16);
    assert_eq!(HopfAlg::u2q_sl2_dual(&zeta(6, 1)).unwrap().dim, 54);
    assert_eq!(HopfAlg::eight_dim_quotient(&zeta(4, 1)).unwrap().dim, 8);
    println!("PASS criterion 2: quantum-group and Taft dimensions are as classified");
}

#[test]
fn criterion_03_taft_coinvariants() {
    // q of order 3: the coinvariants are exactly k[u³, v³] up to degree 12.
    let rho = taft_plane_coaction(&zeta(3, 1), 0, 3);
    assert!(coinvariants_equal_power_algebra(&rho, 3, 12));
    // q of order 4: three generators of degree 4, one relation b² = ac in
    // degree 8, and the hypersurface Hilbert series up to degree 16.
    let entries = catalog_map();
    let e = &entries["taft-l4"];
    let sub = entry_subring(e, 16);
    let gens = sub.minimal_generators();
    let degs: Vec<u64> = gens.iter().map(|g| g.degree).collect();
    assert_eq!(degs, vec![4, 4, 4]);
    for mono in [&[0u8; 4][..], &[0, 0, 1, 1], &[1; 4]] {
        assert!(monomial_coinvariant(&e.coaction, mono));
    }
    let (_, rels) = sub.find_relations(&gens, 8);
    assert!(single_relation_is_b2_eq_ac(&rels, 8));
    assert!(sub.verify_hypersurface(&[4, 4, 4], 8));
    println!("PASS criterion 3: Taft coinvariant rings match in degrees up to 16");
}

#[test]
fn criterion_04_taft_group_like_of_double_order() {
    // q of order 3, group-like of order n = 6: w = n/m = 2, generators of
    // degree 6 with the single relation a·c = b².
    let q = zeta(3, 1);
    let m = (&q * &q).order_of().unwrap();
    assert_eq!(6 / m, 2, "w = n/m");
    let rho = taft_plane_coaction(&q, 0, 6);
    let sub = GradedSubring::coinvariants(&rho, 12);
    let gens = sub.minimal_generators();
    let degs: Vec<u64> = gens.iter().map(|g| g.degree).collect();
    assert_eq!(degs, vec![6, 6, 6]);
    let (_, rels) = sub.find_relations(&gens, 12);
    assert!(single_relation_is_b2_eq_ac(&rels, 12));
    println!("PASS criterion 4: order-6 group-like Taft coinvariants have w = 2 and ac = b²");
}

#[test]
fn criterion_05_quantum_group_coinvariants() {
    let entries = catalog_map();
    // Odd case: coinvariants of the 27-dimensional quantum group are k[u³, v³].
    assert!(coinvariants_equal_power_algebra(&entries["uq-z3"].coaction, 3, 12));
    // Even case: k[u⁴, u²v², v⁴] with b² = ac, checked to degree 16.
    let e = &entries["u2q-z4"];
    let sub = entry_subring(e, 16);
    let gens = sub.minimal_generators();
    let degs: Vec<u64> = gens.iter().map(|g| g.degree).collect();
    assert_eq!(degs, vec![4, 4, 4]);
    for mono in [&[0u8; 4][..], &[0, 0, 1, 1], &[1; 4]] {
        assert!(monomial_coinvariant(&e.coaction, mono));
    }
    let (_, rels) = sub.find_relations(&gens, 8);
    assert!(single_relation_is_b2_eq_ac(&rels, 8));
    assert!(sub.verify_hypersurface(&[4, 4, 4], 8));
    println!("PASS criterion 5: quantum-group coinvariant rings match in degrees up to 16");
}

#[test]
fn criterion_06_eight_dimensional_quotient_agrees() {
    assert!(t_coinvariants_equal_u2q(&zeta(4, 1), 16).unwrap());
    println!("PASS criterion 6: eight-dimensional quotient coinvariants equal the full ones to degree 16");
}

#[test]
fn criterion_07_molien_cross_check() {
    // Tautological actions of the SL2 catalog groups on k[x, y].
    let mut groups = vec![];
    for n in 2..=6u64 {
        groups.push(MatGroup::cyclic(n));
    }
    for n in 2..=4u64 {
        groups.push(MatGroup::binary_dihedral(n));
    }
    groups.push(MatGroup::binary_tetrahedral());
    groups.push(MatGroup::binary_octahedral());
    groups.push(MatGroup::binary_icosahedral());
    for g in &groups {
        let act = tautological_action(g);
        let molien = molien_series(&act, 12);
        for d in 0..=12u64 {
            assert_eq!(
                invariant_slice(&act, d).len() as u64,
                molien[d as usize],
                "{} degree {}",
                g.name,
                d
            );
        }
    }
    // Classified finite-group actions on planes.
    let entries = catalog_map();
    for label in ["sign-on-kq", "sign-on-kJ", "reflection-on-anticomm", "diagonal-C3-on-kq"] {
        let act = entries[label].group_action.as_ref().unwrap();
        let molien = molien_series(act, 12);
        assert_eq!(GradedSubring::invariants(act, 12).dims(), molien, "{}", label);
    }
    println!("PASS criterion 7: Reynolds slice dimensions equal Molien coefficients to degree 12");
}

#[test]
fn criterion_08_codeterminant_triviality() {
    for e in classify::catalog() {
        assert_eq!(
            e.coaction.hcodet_trivial().unwrap(),
            true,
            "{} must have trivial codeterminant",
            e.label
        );
    }
    // Skewed witness: ρ(u) = u⊗g, ρ(v) = v⊗1 has codeterminant g⁻¹ ≠ 1.
    let q = zeta(3, 1);
    let plane = PresentedAlgebra::quantum_plane(&q);
    let c3 = MatGroup::cyclic(3);
    let k = HopfAlg::group_algebra(&c3);
    let rho = define_coaction(
        &plane,
        &k,
        vec![
            vec![(NcElement::generator(0), he_single(c3.gens[0]))],
            vec![(NcElement::generator(1), he_single(c3.id))],
        ],
    )
    .unwrap();
    assert_eq!(rho.hcodet_trivial().unwrap(), false);
    println!("PASS criterion 8: codeterminant trivial on the catalog, nontrivial on the skewed witness");
}

#[test]
fn criterion_09_inner_faithfulness() {
    let entries = catalog_map();
    for label in ["taft-l3", "taft-l4", "uq-z3", "u2q-z4", "u2q8-z4"] {
        let f = entries[label].coaction.inner_faithful();
        assert!(f.faithful, "{} must be inner faithful", label);
    }
    // Coaction avoiding the nilpotent generator factors through the
    // group-algebra part (dimension n = 3 of the 9-dimensional Taft algebra).
    let q = zeta(3, 1);
    let t = HopfAlg::taft(&q, 0, 3).unwrap();
    let plane = PresentedAlgebra::quantum_plane(&q);
    let rho = define_coaction(
        &plane,
        &t,
        vec![
            vec![(NcElement::generator(0), t.labeled("g").unwrap())],
            vec![(NcElement::generator(1), t.labeled("g^-1").unwrap())],
        ],
    )
    .unwrap();
    let f = rho.inner_faithful();
    assert!(!f.faithful);
    assert_eq!(f.sub_hopf_dim, 3);
    println!("PASS criterion 9: inner faithfulness verdicts match, including the degenerate witness");
}

#[test]
fn criterion_10_trivial_determinant_automorphism_groups() {
    // Jordan plane: {± identity} ≅ C_2, by the symbolic unipotent exclusion.
    let g = classify::enumerate_trivial_hdet_autos(&CycScalar::one(), &-&CycScalar::one(), 4)
        .unwrap();
    assert_eq!(g.matrices.len(), 2);
    assert_eq!(g.iso_type, "C_2");
    // Quantum plane at a fifth root of unity, tenth roots allowed: C_10,
    // all solutions diagonal.
    let g = classify::enumerate_trivial_hdet_autos(&zeta(5, 1), &CycScalar::zero(), 10).unwrap();
    assert_eq!(g.iso_type, "C_10");
    for m in &g.matrices {
        assert!(m[0][1].is_zero() && m[1][0].is_zero());
    }
    // q = −1 with sixth roots: dihedral of order 12.
    let g = classify::enumerate_trivial_hdet_autos(&-&CycScalar::one(), &CycScalar::zero(), 6)
        .unwrap();
    assert_eq!(g.iso_type, "D_12");
    // Group law and the literal fixed-relation test, element by element.
    let sys = classify::trivial_hdet_equations(&-&CycScalar::one(), &CycScalar::zero());
    let r = sys.relation();
    let n = g.matrices.len();
    for i in 0..n {
        assert_eq!(sys.apply(&g.matrices[i]), r, "element {} must fix the relation", i);
        let mut seen = vec![false; n];
        for j in 0..n {
            seen[g.table[i][j]] = true;
        }
        assert!(seen.iter().all(|&s| s), "row {} must be a permutation", i);
        assert_eq!(g.table[i][g.inverses[i]], g.identity);
    }
    println!("PASS criterion 10: trivial-determinant automorphism groups are C_2, C_10 and D_12");
}

#[test]
fn criterion_11_extension_uniqueness_table() {
    let odd_m = [3u64, 5, 7, 9, 15];
    for n in 1..=12u64 {
        let c = MatGroup::cyclic(n);
        for &m in &odd_m {
            let expect = num_integer::gcd(m, n) == 1;
            assert_eq!(classify::extension_unique(&c, m), expect, "C_{} m={}", n, m);
        }
    }
    for n in 1..=4u64 {
        let bd = MatGroup::binary_dihedral(n);
        for &m in &odd_m {
            assert!(classify::extension_unique(&bd, m), "BD_{} m={}", 4 * n, m);
        }
    }
    let tt = MatGroup::binary_tetrahedral();
    for &m in &odd_m {
        let expect = num_integer::gcd(m, 3) == 1;
        assert_eq!(classify::extension_unique(&tt, m), expect, "2T m={}", m);
    }
    for g in [MatGroup::binary_octahedral(), MatGroup::binary_icosahedral()] {
        for &m in &odd_m {
            assert!(classify::extension_unique(&g, m), "{} m={}", g.name, m);
        }
    }
    println!("PASS criterion 11: extension uniqueness matches the character-group arithmetic");
}

#[test]
fn criterion_12_mckay_quiver_types() {
    for n in 3..=8u64 {
        let q = mckay::tautological_quiver(&MatGroup::cyclic(n)).unwrap();
        assert_eq!(q.kind, QuiverType::A(n as usize - 1), "cyclic n = {}", n);
        assert_eq!(q.labels.len(), n as usize - 1);
    }
    let q = mckay::tautological_quiver(&MatGroup::cyclic(2)).unwrap();
    assert_eq!(q.kind, QuiverType::A(1));
    let q = mckay::tautological_quiver(&MatGroup::dihedral(4)).unwrap();
    assert_eq!(q.kind, QuiverType::D(4));
    let q = mckay::tautological_quiver(&MatGroup::dihedral(5)).unwrap();
    assert_eq!(q.kind, QuiverType::DL(3));
    assert_eq!(
        mckay::tautological_quiver(&MatGroup::binary_tetrahedral()).unwrap().kind,
        QuiverType::E6
    );
    assert_eq!(
        mckay::tautological_quiver(&MatGroup::binary_octahedral()).unwrap().kind,
        QuiverType::E7
    );
    assert_eq!(
        mckay::tautological_quiver(&MatGroup::binary_icosahedral()).unwrap().kind,
        QuiverType::E8
    );
    for n in 3..=4u64 {
        let q = mckay::dihedral_dual_quiver(n).unwrap();
        assert_eq!(q.kind, QuiverType::A(2 * n as usize - 1), "dual dihedral n = {}", n);
        assert_eq!(q.labels.len(), 2 * n as usize - 1);
    }
    println!("PASS criterion 12: McKay quiver types and vertex counts reproduce the classification table");
}

#[test]
fn criterion_13_matrix_coefficient_relations() {
    for (q, h) in [
        (zeta(3, 1), HopfAlg::uq_sl2_dual(&zeta(3, 1)).unwrap()),
        (zeta(4, 1), HopfAlg::u2q_sl2_dual(&zeta(4, 1)).unwrap()),
    ] {
        let p = -&q.inverse();
        for (name, ok) in verify_e45_relations(&h, &p) {
            assert!(ok, "{}: relation {} fails", h.name, name);
        }
        // Quantum determinant: e11·e22 + p·e21·e12 = 1.
        let e11 = h.labeled("e11").unwrap();
        let e12 = h.labeled("e12").unwrap();
        let e21 = h.labeled("e21").unwrap();
        let e22 = h.labeled("e22").unwrap();
        let mut det = h.mul(&e11, &e22);
        for (k, c) in h.mul(&e21, &e12) {
            det.push((k, &c * &p));
        }
        let det = qsym::hopf::he_normalize(det);
        assert_eq!(det, h.unit, "{}: quantum determinant must be 1", h.name);
    }
    println!("PASS criterion 13: matrix-coefficient relation suite holds with quantum determinant 1");
}

#[test]
fn criterion_14_series_divisibility() {
    let entries = catalog_map();
    // The ambient series divided by the subring series is a nonnegative
    // integer power series exactly when the ambient ring is a free graded
    // module over the subring. That holds when the subring is itself
    // regular (the k[u³,v³] coinvariants, and the minus cone instance);
    // every instance whose fixed subring is a proper hypersurface must
    // instead show an explicit negative coefficient by degree 12, which is
    // the series-level obstruction behind "the fixed subring of a
    // trivial-determinant action is never regular".
    let free_labels = ["taft-l3", "uq-z3", "cone-nu-minus"];
    for e in classify::catalog() {
        let ambient = e.coaction.algebra.hilbert_series(12);
        let sub = entry_subring(&e, 12).dims();
        let verdict = series_divides(&ambient, &sub);
        let expect_free = free_labels.contains(&e.label.as_str());
        match (&verdict, expect_free) {
            (SeriesDivision::FreeCompatible { .. }, true) => {}
            (SeriesDivision::NotFreeCompatible { .. }, false) => {}
            (SeriesDivision::FreeCompatible { .. }, false) => {
                panic!("{}: unexpectedly free-compatible", e.label)
            }
            (SeriesDivision::NotFreeCompatible { degree, value }, true) => {
                panic!("{}: quotient fails at degree {}: {}", e.label, degree, value)
            }
        }
    }
    // Matched closed forms: the reduced denominator degree of the subring
    // series strictly exceeds the plane's (which is 2).
    let closed_forms: [(&str, &[u64], Option<u64>); 8] = [
        ("sign-on-kq", &[2, 2, 2], Some(4)),
        ("sign-on-kJ", &[2, 2, 2], Some(4)),
        ("diagonal-C3-on-kq", &[2, 3, 3], Some(6)),
        ("dihedral-grading-n3", &[2, 6, 6], Some(12)),
        ("taft-l3", &[3, 3], None),
        ("uq-z3", &[3, 3], None),
        ("taft-l4", &[4, 4, 4], Some(8)),
        ("u2q-z4", &[4, 4, 4], Some(8)),
    ];
    for (label, gds, rel) in closed_forms {
        let e = &entries[label];
        let sub = entry_subring(e, e.bound);
        // The closed form reproduces the computed slices within the bound.
        match rel {
            Some(r) => assert!(sub.verify_hypersurface(gds, r), "{} closed form", label),
            None => assert!(
                sub.verify_hypersurface(gds, u64::MAX / 2),
                "{} closed form",
                label
            ),
        }
        let denom = reduced_denominator_degree(gds, rel);
        assert!(denom > 2, "{}: denominator degree {} must exceed 2", label, denom);
    }
    println!("PASS criterion 14: Hilbert-series divisibility and denominator-degree comparisons hold");
}
