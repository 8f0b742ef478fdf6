//! Finite-dimensional Hopf algebras as exact structure-constant tensors.
//!
//! A [`HopfAlg`] stores multiplication, unit, comultiplication, counit and
//! antipode over a fixed basis, with sparse rows of cyclotomic scalars.
//! Constructors cover the algebras that (co)act on quantum planes: group
//! algebras, their duals, the generalized Taft algebras, the duals of the
//! small quantum groups u_q(sl2) and ũ_q(sl2) realized as quotients of the
//! quantized coordinate ring of SL(2), an eight-dimensional further quotient
//! at a primitive fourth root of unity, Drinfeld doubles, and quotients by
//! verified Hopf ideals.
//!
//! [`HopfAlg::check_axioms`] verifies the bialgebra and antipode laws
//! basis-element-wise. For dimensions up to 64 every pair/triple is checked;
//! up to 256, when an algebra generating set is known, associativity and
//! comultiplicativity are checked on generator-indexed pairs/triples (which
//! imply the general laws, since every basis element is a product of
//! generators and both laws are linear in each slot); above that a
//! deterministic sample is used.

use crate::groups::MatGroup;
use crate::scalar::CycScalar;
use std::collections::BTreeMap;

/// A sparse element of the algebra: sorted (basis index, coefficient) pairs.
pub type HElem = Vec<(usize, CycScalar)>;

/// A sparse element of H⊗H.
pub type TElem = Vec<(usize, usize, CycScalar)>;

/// Normalize a list of (index, coeff) terms: sort, combine, drop zeros.
pub fn he_normalize(terms: Vec<(usize, CycScalar)>) -> HElem {
    let mut map: BTreeMap<usize, CycScalar> = BTreeMap::new();
    for (i, c) in terms {
        if c.is_zero() {
            continue;
        }
        match map.entry(i) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = &*o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }
    map.into_iter().collect()
}

pub fn he_add(a: &HElem, b: &HElem) -> HElem {
    let mut t = a.clone();
    t.extend(b.iter().cloned());
    he_normalize(t)
}

pub fn he_scale(a: &HElem, c: &CycScalar) -> HElem {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|(i, x)| (*i, x * c)).collect()
}

pub fn he_single(i: usize) -> HElem {
    vec![(i, CycScalar::one())]
}

fn te_normalize(terms: Vec<(usize, usize, CycScalar)>) -> TElem {
    let mut map: BTreeMap<(usize, usize), CycScalar> = BTreeMap::new();
    for (i, j, c) in terms {
        if c.is_zero() {
            continue;
        }
        let e = map.entry((i, j)).or_insert_with(CycScalar::zero);
        *e = &*e + &c;
    }
    map.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((i, j), c)| (i, j, c))
        .collect()
}

/// Report of an axiom check run.
#[derive(Debug, Clone, serde::Serialize)]
pub struct AxiomReport {
    pub dim: usize,
    /// "full", "generators", or "sampled".
    pub mode: String,
    pub laws_checked: Vec<String>,
}

/// A finite-dimensional Hopf algebra given by structure constants.
#[derive(Clone)]
pub struct HopfAlg {
    pub name: String,
    pub dim: usize,
    pub basis_names: Vec<String>,
    /// mult[i][j] = b_i · b_j.
    pub mult: Vec<Vec<HElem>>,
    pub unit: HElem,
    /// comult[k] = Δ(b_k).
    pub comult: Vec<TElem>,
    /// counit[k] = ε(b_k).
    pub counit: Vec<CycScalar>,
    /// antipode[k] = S(b_k).
    pub antipode: Vec<HElem>,
    /// An algebra generating set, when one is known (used to scale checks).
    pub generators: Vec<HElem>,
    /// Constructor-supplied grouplike elements (verified again on demand).
    /// Together with the basis scan this is a complete enumeration for every
    /// algebra built by the constructors in this module.
    grouplike_registry: Vec<HElem>,
    /// Named elements such as the quantum matrix coefficients e11..e22.
    pub labeled: BTreeMap<String, HElem>,
}

impl HopfAlg {
    /// Product of two sparse elements.
    pub fn mul(&self, a: &HElem, b: &HElem) -> HElem {
        let mut out = Vec::new();
        for (i, ca) in a {
            for (j, cb) in b {
                let c = ca * cb;
                for (k, s) in &self.mult[*i][*j] {
                    out.push((*k, &c * s));
                }
            }
        }
        he_normalize(out)
    }

    /// e-th power of an element (e ≥ 0).
    pub fn pow(&self, a: &HElem, e: u64) -> HElem {
        let mut acc = self.unit.clone();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Δ of a sparse element.
    pub fn comul(&self, a: &HElem) -> TElem {
        let mut out = Vec::new();
        for (k, c) in a {
            for (i, j, s) in &self.comult[*k] {
                out.push((*i, *j, c * s));
            }
        }
        te_normalize(out)
    }

    /// ε of a sparse element.
    pub fn counit_of(&self, a: &HElem) -> CycScalar {
        let mut acc = CycScalar::zero();
        for (k, c) in a {
            acc = &acc + &(c * &self.counit[*k]);
        }
        acc
    }

    /// S of a sparse element.
    pub fn antipode_of(&self, a: &HElem) -> HElem {
        let mut out = Vec::new();
        for (k, c) in a {
            for (i, s) in &self.antipode[*k] {
                out.push((*i, c * s));
            }
        }
        he_normalize(out)
    }

    /// Product in H⊗H.
    pub fn tensor_mul(&self, a: &TElem, b: &TElem) -> TElem {
        let mut out = Vec::new();
        for (a1, a2, ca) in a {
            for (b1, b2, cb) in b {
                let c = ca * cb;
                for (k1, s1) in &self.mult[*a1][*b1] {
                    let cs = &c * s1;
                    for (k2, s2) in &self.mult[*a2][*b2] {
                        out.push((*k1, *k2, &cs * s2));
                    }
                }
            }
        }
        te_normalize(out)
    }

    /// Is the element grouplike (Δh = h⊗h and ε(h) = 1)?
    pub fn is_grouplike(&self, h: &HElem) -> bool {
        if !self.counit_of(h).is_one() {
            return false;
        }
        let lhs = self.comul(h);
        let mut rhs = Vec::new();
        for (i, ci) in h {
            for (j, cj) in h {
                rhs.push((*i, *j, ci * cj));
            }
        }
        lhs == te_normalize(rhs)
    }

    /// All grouplike elements known to this algebra: the grouplike basis
    /// elements plus the constructor-attached registry, each verified against
    /// the defining equations before being returned.
    pub fn grouplikes(&self) -> Vec<HElem> {
        let mut out: Vec<HElem> = Vec::new();
        for i in 0..self.dim {
            let h = he_single(i);
            if self.is_grouplike(&h) {
                out.push(h);
            }
        }
        for h in &self.grouplike_registry {
            let h = he_normalize(h.clone());
            assert!(
                self.is_grouplike(&h),
                "registered grouplike fails the defining equations in {}",
                self.name
            );
            if !out.contains(&h) {
                out.push(h);
            }
        }
        out
    }

    /// Look up a labeled element (e.g. "e11"), if present.
    pub fn labeled(&self, name: &str) -> Option<HElem> {
        self.labeled.get(name).cloned()
    }

    /// Verify all Hopf algebra laws basis-element-wise. See the module docs
    /// for the scaling policy. Returns Err naming the first violated law.
    pub fn check_axioms(&self) -> Result<AxiomReport, String> {
        let n = self.dim;
        // Unit laws and counit/coassociativity/antipode are linear in a single
        // basis index and always checked in full.
        for i in 0..n {
            let b = he_single(i);
            if self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b {
                return Err(format!("unit law fails at basis {}", i));
            }
            // Counit: (ε⊗id)Δ = id = (id⊗ε)Δ.
            let mut left = Vec::new();
            let mut right = Vec::new();
            for (x, y, c) in &self.comult[i] {
                left.push((*y, c * &self.counit[*x]));
                right.push((*x, c * &self.counit[*y]));
            }
            if he_normalize(left) != b || he_normalize(right) != b {
                return Err(format!("counit law fails at basis {}", i));
            }
            // Coassociativity: compare (Δ⊗id)Δ and (id⊗Δ)Δ as triple tensors.
            let mut t1: BTreeMap<(usize, usize, usize), CycScalar> = BTreeMap::new();
            let mut t2: BTreeMap<(usize, usize, usize), CycScalar> = BTreeMap::new();
            for (x, y, c) in &self.comult[i] {
                for (a, bb, d) in &self.comult[*x] {
                    let e = t1.entry((*a, *bb, *y)).or_insert_with(CycScalar::zero);
                    *e = &*e + &(c * d);
                }
                for (a, bb, d) in &self.comult[*y] {
                    let e = t2.entry((*x, *a, *bb)).or_insert_with(CycScalar::zero);
                    *e = &*e + &(c * d);
                }
            }
            t1.retain(|_, c| !c.is_zero());
            t2.retain(|_, c| !c.is_zero());
            if t1 != t2 {
                return Err(format!("coassociativity fails at basis {}", i));
            }
            // Antipode: m(S⊗id)Δ(b) = ε(b)·1 = m(id⊗S)Δ(b).
            let target = he_scale(&self.unit, &self.counit[i]);
            let mut s_left = Vec::new();
            let mut s_right = Vec::new();
            for (x, y, c) in &self.comult[i] {
                let sx = self.antipode_of(&he_single(*x));
                let sy = self.antipode_of(&he_single(*y));
                s_left.extend(he_scale(&self.mul(&sx, &he_single(*y)), c));
                s_right.extend(he_scale(&self.mul(&he_single(*x), &sy), c));
            }
            if he_normalize(s_left) != target || he_normalize(s_right) != target {
                return Err(format!("antipode law fails at basis {}", i));
            }
        }
        // Δ(1) = 1⊗1 and ε(1) = 1.
        let mut unit_tensor = Vec::new();
        for (i, ci) in &self.unit {
            for (j, cj) in &self.unit {
                unit_tensor.push((*i, *j, ci * cj));
            }
        }
        if self.comul(&self.unit) != te_normalize(unit_tensor) {
            return Err("Δ(1) ≠ 1⊗1".into());
        }
        if !self.counit_of(&self.unit).is_one() {
            return Err("ε(1) ≠ 1".into());
        }

        let assoc = |a: &HElem, b: &HElem, c: &HElem| -> bool {
            self.mul(&self.mul(a, b), c) == self.mul(a, &self.mul(b, c))
        };
        let comult_mult = |a: &HElem, b: &HElem| -> bool {
            let da = self.comul(a);
            let db = self.comul(b);
            self.comul(&self.mul(a, b)) == self.tensor_mul(&da, &db)
                && self.counit_of(&self.mul(a, b))
                    == &self.counit_of(a) * &self.counit_of(b)
        };

        let mode;
        if n <= 64 {
            mode = "full";
            for i in 0..n {
                for j in 0..n {
                    if !comult_mult(&he_single(i), &he_single(j)) {
                        return Err(format!("Δ is not multiplicative at ({}, {})", i, j));
                    }
                    for k in 0..n {
                        if !assoc(&he_single(i), &he_single(j), &he_single(k)) {
                            return Err(format!(
                                "associativity fails at ({}, {}, {})",
                                i, j, k
                            ));
                        }
                    }
                }
            }
        } else if !self.generators.is_empty() && n <= 256 {
            mode = "generators";
            // Generator-indexed checks imply the full laws by induction on
            // products, provided the generators actually generate; verify that
            // first by closing their span under multiplication.
            if !self.generators_span_everything() {
                return Err("recorded generators do not generate the algebra".into());
            }
            for g in &self.generators {
                for i in 0..n {
                    if !comult_mult(g, &he_single(i)) {
                        return Err(format!("Δ is not multiplicative at (gen, {})", i));
                    }
                    if !comult_mult(&he_single(i), g) {
                        return Err(format!("Δ is not multiplicative at ({}, gen)", i));
                    }
                    for j in 0..n {
                        if !assoc(g, &he_single(i), &he_single(j)) {
                            return Err(format!("associativity fails at (gen, {}, {})", i, j));
                        }
                    }
                }
            }
        } else {
            mode = "sampled";
            // Deterministic linear-congruential sample of pairs and triples.
            let mut state: u64 = 0x9E3779B97F4A7C15;
            let mut next = || {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                (state >> 16) as usize
            };
            for _ in 0..4000 {
                let (i, j, k) = (next() % n, next() % n, next() % n);
                if !assoc(&he_single(i), &he_single(j), &he_single(k)) {
                    return Err(format!("associativity fails at ({}, {}, {})", i, j, k));
                }
            }
            for _ in 0..2000 {
                let (i, j) = (next() % n, next() % n);
                if !comult_mult(&he_single(i), &he_single(j)) {
                    return Err(format!("Δ is not multiplicative at ({}, {})", i, j));
                }
            }
        }
        Ok(AxiomReport {
            dim: n,
            mode: mode.to_string(),
            laws_checked: vec![
                "unit".into(),
                "associativity".into(),
                "counit".into(),
                "coassociativity".into(),
                "comultiplicativity".into(),
                "antipode".into(),
            ],
        })
    }

    /// Does the span of products of the recorded generators exhaust H?
    fn generators_span_everything(&self) -> bool {
        let mut span = RowSpan::new(self.dim);
        span.insert(&self.unit);
        for g in &self.generators {
            span.insert(g);
        }
        loop {
            let rows = span.rows.clone();
            let before = span.rank();
            for r in &rows {
                for g in &self.generators {
                    span.insert(&self.mul(r, g));
                }
            }
            if span.rank() == before {
                break;
            }
        }
        span.rank() == self.dim
    }

    // ------------------------------------------------------------------
    // Constructors
    // ------------------------------------------------------------------

    /// The group algebra kG: basis = group elements, Δg = g⊗g, S(g) = g⁻¹.
    pub fn group_algebra(g: &MatGroup) -> HopfAlg {
        let n = g.order();
        let mult = (0..n)
            .map(|i| (0..n).map(|j| he_single(g.mult[i][j])).collect())
            .collect();
        let comult = (0..n).map(|i| vec![(i, i, CycScalar::one())]).collect();
        let antipode = (0..n).map(|i| he_single(g.inv[i])).collect();
        let generators = g.gens.iter().map(|&i| he_single(i)).collect();
        HopfAlg {
            name: format!("kG:{}", g.name),
            dim: n,
            basis_names: (0..n).map(|i| format!("g{}", i)).collect(),
            mult,
            unit: he_single(g.id),
            comult,
            counit: vec![CycScalar::one(); n],
            antipode,
            generators,
            grouplike_registry: Vec::new(),
            labeled: BTreeMap::new(),
        }
    }

    /// The group algebra together with the dual's grouplikes precomputed from
    /// the linear characters of G (used through [`Self::dual_hopf`]).
    pub fn group_algebra_named(g: &MatGroup) -> HopfAlg {
        HopfAlg::group_algebra(g)
    }

    /// The dual Hopf algebra: multiplication and comultiplication transposed,
    /// unit ↔ counit, antipode transposed.
    pub fn dual_hopf(h: &HopfAlg) -> HopfAlg {
        let n = h.dim;
        let mut mult: Vec<Vec<HElem>> = vec![vec![Vec::new(); n]; n];
        for k in 0..n {
            for (i, j, c) in &h.comult[k] {
                mult[*i][*j].push((k, c.clone()));
            }
        }
        for row in &mut mult {
            for cell in row.iter_mut() {
                *cell = he_normalize(std::mem::take(cell));
            }
        }
        let mut comult: Vec<TElem> = vec![Vec::new(); n];
        for i in 0..n {
            for j in 0..n {
                for (k, c) in &h.mult[i][j] {
                    comult[*k].push((i, j, c.clone()));
                }
            }
        }
        let comult = comult.into_iter().map(te_normalize).collect();
        let unit: HElem = he_normalize(
            h.counit
                .iter()
                .enumerate()
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        );
        let mut counit = vec![CycScalar::zero(); n];
        for (i, c) in &h.unit {
            counit[*i] = c.clone();
        }
        let mut antipode: Vec<HElem> = vec![Vec::new(); n];
        for i in 0..n {
            for (j, c) in &h.antipode[i] {
                antipode[*j].push((i, c.clone()));
            }
        }
        let antipode = antipode.into_iter().map(he_normalize).collect();
        HopfAlg {
            name: format!("dual:{}", h.name),
            dim: n,
            basis_names: h.basis_names.iter().map(|b| format!("{}*", b)).collect(),
            mult,
            unit,
            comult,
            counit,
            antipode,
            generators: Vec::new(),
            grouplike_registry: h.dual_grouplikes(),
            labeled: BTreeMap::new(),
        }
    }

    /// Grouplikes of the dual = algebra characters of this algebra. Returns
    /// the known complete set when this algebra is a group algebra (the
    /// linear characters of the group); empty otherwise (the dual's basis
    /// scan still applies).
    fn dual_grouplikes(&self) -> Vec<HElem> {
        let Some(g) = self.as_group() else {
            return Vec::new();
        };
        let Ok(table) = g.character_table() else {
            return Vec::new();
        };
        let mut out = Vec::new();
        for row in &table.rows {
            if row.dim != 1 {
                continue;
            }
            let elem: HElem = (0..g.order())
                .map(|i| (i, row.values[table.class_of[i]].clone()))
                .collect();
            out.push(he_normalize(elem));
        }
        out
    }

    fn as_group(&self) -> Option<MatGroup> {
        let name = self.name.strip_prefix("kG:")?;
        crate::groups::parse_group(name).ok()
    }

    /// The generalized Taft algebra T(q, α, n): generators g (grouplike of
    /// order n) and x with x·g = q·g·x, x^m = α(g^m − g^{−m}) where
    /// m = ord(q²); Δx = x⊗g⁻¹ + g⊗x, S(g) = g⁻¹, S(x) = −q·x.
    /// Requires n divisible by ord(q), α ∈ {0, 1}, and α = 0 unless q^m = 1.
    pub fn taft(q: &CycScalar, alpha: u8, n: u64) -> Result<HopfAlg, String> {
        let l = q
            .order_of()
            .ok_or("q must be a root of unity")?;
        if l < 2 {
            return Err("q must be a root of unity of order at least 2".into());
        }
        if n == 0 || n % l != 0 {
            return Err(format!("n = {} must be a positive multiple of ord(q) = {}", n, l));
        }
        let m = (q * q).order_of().expect("q² is a root of unity");
        if alpha > 1 {
            return Err("alpha must be 0 or 1".into());
        }
        if alpha == 1 && !q.pow(m as i64).is_one() {
            return Err("alpha = 1 requires q^m = 1 (ord(q) odd)".into());
        }
        let nn = n as usize;
        let mm = m as usize;
        let dim = nn * mm;
        let idx = |i: usize, j: usize| i * mm + j;
        // Multiplication: (g^i x^j)(g^a x^b) = q^{ja} g^{i+a} x^{j+b}, with
        // x^{j+b} rewritten by x^m = α(g^m − g^{−m}) when it overflows.
        let mut mult = vec![vec![Vec::new(); dim]; dim];
        for i in 0..nn {
            for j in 0..mm {
                for a in 0..nn {
                    for b in 0..mm {
                        let c = q.pow((j * a) as i64);
                        let gi = (i + a) % nn;
                        let cell: HElem = if j + b < mm {
                            vec![(idx(gi, j + b), c)]
                        } else if alpha == 0 {
                            Vec::new()
                        } else {
                            // x^{j+b} = α(g^m − g^{−m}) x^{j+b−m}.
                            let jj = j + b - mm;
                            let up = (gi + mm) % nn;
                            let down = (gi + nn - (mm % nn)) % nn;
                            he_normalize(vec![
                                (idx(up, jj), c.clone()),
                                (idx(down, jj), -&c),
                            ])
                        };
                        mult[idx(i, j)][idx(a, b)] = cell;
                    }
                }
            }
        }
        let counit: Vec<CycScalar> = (0..dim)
            .map(|t| {
                if t % mm == 0 {
                    CycScalar::one()
                } else {
                    CycScalar::zero()
                }
            })
            .collect();
        let mut h = HopfAlg {
            name: format!("taft:q={},alpha={},n={}", q, alpha, n),
            dim,
            basis_names: (0..dim)
                .map(|t| format!("g^{} x^{}", t / mm, t % mm))
                .collect(),
            mult,
            unit: he_single(idx(0, 0)),
            comult: vec![Vec::new(); dim],
            counit,
            antipode: vec![Vec::new(); dim],
            generators: vec![he_single(idx(1, 0)), he_single(idx(0, 1))],
            grouplike_registry: Vec::new(),
            labeled: BTreeMap::new(),
        };
        // Δ and S extended from the generators through the multiplication.
        let dg: TElem = vec![(idx(1, 0), idx(1, 0), CycScalar::one())];
        let dx: TElem = te_normalize(vec![
            (idx(0, 1), idx(nn - 1, 0), CycScalar::one()),
            (idx(1, 0), idx(0, 1), CycScalar::one()),
        ]);
        let sg = he_single(idx(nn - 1, 0));
        let sx = he_scale(&he_single(idx(0, 1)), &-q);
        for i in 0..nn {
            for j in 0..mm {
                let mut d: TElem = vec![(idx(0, 0), idx(0, 0), CycScalar::one())];
                for _ in 0..i {
                    d = h.tensor_mul(&d, &dg);
                }
                for _ in 0..j {
                    d = h.tensor_mul(&d, &dx);
                }
                h.comult[idx(i, j)] = d;
                // S is an antihomomorphism: S(g^i x^j) = S(x)^j S(g)^i.
                let mut s = h.unit.clone();
                for _ in 0..j {
                    s = h.mul(&s, &sx);
                }
                for _ in 0..i {
                    s = h.mul(&s, &sg);
                }
                h.antipode[idx(i, j)] = s;
            }
        }
        h.labeled.insert("g".into(), he_single(idx(1, 0)));
        h.labeled.insert("g^-1".into(), he_single(idx(nn - 1, 0)));
        h.labeled.insert("x".into(), he_single(idx(0, 1)));
        Ok(h)
    }

    /// The dual of the small quantum group u_q(sl2) for q of odd order
    /// m ≥ 3: the quotient of O_q(SL2) by (e11^m − 1, e12^m, e21^m,
    /// e22^m − 1), of dimension m³ with basis e11^i e12^j e21^l.
    pub fn uq_sl2_dual(q: &CycScalar) -> Result<HopfAlg, String> {
        let l = q.order_of().ok_or("q must be a root of unity")?;
        if l < 3 || l % 2 == 0 {
            return Err(format!("ord(q) = {} must be odd and at least 3", l));
        }
        Ok(oq_quotient(q, l, l, format!("uq:{}", q)))
    }

    /// The dual of ũ_q(sl2) for q of even order 2m: the quotient of
    /// O_q(SL2) by (e11^{2m} − 1, e12^m, e21^m, e22^{2m} − 1), of dimension
    /// 2m³ with basis e11^i e12^j e21^l (i < 2m; j, l < m).
    pub fn u2q_sl2_dual(q: &CycScalar) -> Result<HopfAlg, String> {
        let l = q.order_of().ok_or("q must be a root of unity")?;
        if l % 2 != 0 || l < 4 {
            return Err(format!("ord(q) = {} must be even and at least 4", l));
        }
        Ok(oq_quotient(q, l, l / 2, format!("u2q:{}", q)))
    }

    /// The eight-dimensional quotient of ũ_q(sl2)° at a primitive fourth
    /// root of unity q, by the Hopf ideal generated by e12 − e21·e11².
    pub fn eight_dim_quotient(q: &CycScalar) -> Result<HopfAlg, String> {
        if q.order_of() != Some(4) {
            return Err("q must be a primitive fourth root of unity".into());
        }
        let big = HopfAlg::u2q_sl2_dual(q)?;
        let e12 = big.labeled("e12").unwrap();
        let e21 = big.labeled("e21").unwrap();
        let e11 = big.labeled("e11").unwrap();
        let gen = {
            let e11sq = big.mul(&e11, &e11);
            let rhs = big.mul(&e21, &e11sq);
            he_add(&e12, &he_scale(&rhs, &CycScalar::from_int(-1)))
        };
        let mut h = hopf_quotient(&big, &[gen], format!("u2q8:{}", q))?;
        if h.dim != 8 {
            return Err(format!("expected an 8-dimensional quotient, got {}", h.dim));
        }
        h.generators = vec![
            h.labeled("e11").unwrap(),
            h.labeled("e12").unwrap(),
            h.labeled("e21").unwrap(),
        ];
        Ok(h)
    }

    /// The Drinfeld double D(G) of a finite group, on the basis δ_g ⊗ h.
    pub fn drinfeld_double(g: &MatGroup) -> HopfAlg {
        let n = g.order();
        let dim = n * n;
        let idx = |a: usize, h: usize| a * n + h;
        let mut mult = vec![vec![Vec::new(); dim]; dim];
        for a in 0..n {
            for h in 0..n {
                for b in 0..n {
                    for h2 in 0..n {
                        // (δ_a ⊗ h)(δ_b ⊗ h2) = [a = h b h⁻¹] δ_a ⊗ h·h2.
                        let conj = g.mult[g.mult[h][b]][g.inv[h]];
                        mult[idx(a, h)][idx(b, h2)] = if conj == a {
                            he_single(idx(a, g.mult[h][h2]))
                        } else {
                            Vec::new()
                        };
                    }
                }
            }
        }
        let unit: HElem = (0..n).map(|a| (idx(a, g.id), CycScalar::one())).collect();
        let mut comult: Vec<TElem> = vec![Vec::new(); dim];
        for a in 0..n {
            for h in 0..n {
                // Δ(δ_a ⊗ h) = Σ_{xy = a} (δ_x ⊗ h) ⊗ (δ_y ⊗ h).
                let mut t = Vec::new();
                for x in 0..n {
                    let y = g.mult[g.inv[x]][a];
                    t.push((idx(x, h), idx(y, h), CycScalar::one()));
                }
                comult[idx(a, h)] = te_normalize(t);
            }
        }
        let counit: Vec<CycScalar> = (0..dim)
            .map(|t| {
                if t / n == g.id {
                    CycScalar::one()
                } else {
                    CycScalar::zero()
                }
            })
            .collect();
        let mut antipode: Vec<HElem> = vec![Vec::new(); dim];
        for a in 0..n {
            for h in 0..n {
                // S(δ_a ⊗ h) = δ_{h⁻¹ a⁻¹ h} ⊗ h⁻¹.
                let hi = g.inv[h];
                let target = g.mult[g.mult[hi][g.inv[a]]][h];
                antipode[idx(a, h)] = he_single(idx(target, hi));
            }
        }
        // Grouplikes: Σ_a χ(a) δ_a ⊗ z for χ a linear character, z central.
        let mut registry = Vec::new();
        if let Ok(table) = g.character_table() {
            let center: Vec<usize> = (0..n)
                .filter(|&z| (0..n).all(|x| g.mult[z][x] == g.mult[x][z]))
                .collect();
            for row in &table.rows {
                if row.dim != 1 {
                    continue;
                }
                for &z in &center {
                    let elem: HElem = (0..n)
                        .map(|a| (idx(a, z), row.values[table.class_of[a]].clone()))
                        .collect();
                    registry.push(he_normalize(elem));
                }
            }
        }
        HopfAlg {
            name: format!("double:{}", g.name),
            dim,
            basis_names: (0..dim)
                .map(|t| format!("d{}⊗g{}", t / n, t % n))
                .collect(),
            mult,
            unit,
            comult,
            counit,
            antipode,
            generators: Vec::new(),
            grouplike_registry: registry,
            labeled: BTreeMap::new(),
        }
    }
}

/// A row space over the cyclotomic scalars with incremental (reduced)
/// Gaussian elimination, used for ideal closures and quotients.
pub(crate) struct RowSpan {
    #[allow(dead_code)]
    pub dim: usize,
    /// Reduced rows, each normalized so its pivot (leftmost nonzero) is 1.
    pub rows: Vec<HElem>,
    /// Pivot column of each row.
    pub pivots: Vec<usize>,
}

impl RowSpan {
    pub fn new(dim: usize) -> Self {
        RowSpan {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce a vector against the span; the remainder has no pivot columns.
    pub fn reduce(&self, v: &HElem) -> HElem {
        let mut v = he_normalize(v.clone());
        loop {
            let mut hit = None;
            for (i, c) in &v {
                if let Some(r) = self.pivots.iter().position(|p| p == i) {
                    hit = Some((r, c.clone()));
                    break;
                }
            }
            match hit {
                None => return v,
                Some((r, c)) => {
                    v = he_add(&v, &he_scale(&self.rows[r], &-&c));
                }
            }
        }
    }

    /// Insert a vector; returns true if it enlarged the span.
    pub fn insert(&mut self, v: &HElem) -> bool {
        let r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        let (pivot, coeff) = (r[0].0, r[0].1.clone());
        let row = he_scale(&r, &coeff.inverse());
        // Back-substitute into existing rows to keep the basis reduced.
        for i in 0..self.rows.len() {
            if let Some(pos) = self.rows[i].iter().position(|(c, _)| *c == pivot) {
                let factor = self.rows[i][pos].1.clone();
                self.rows[i] = he_add(&self.rows[i], &he_scale(&row, &-&factor));
            }
        }
        self.rows.push(row);
        self.pivots.push(pivot);
        true
    }
}

/// Common construction for the finite quotients of O_q(SL2) with basis
/// e11^i e12^j e21^l (i < big_m, j, l < m): multiplication from the
/// commutation relations e12·e11 = q·e11·e12, e21·e11 = q·e11·e21,
/// e21·e12 = e12·e21, the nilpotency e12^m = e21^m = 0, and e11^{big_m} = 1;
/// e22 is recovered as e11^{-1}(1 + q^{-1} e12 e21) from the quantum
/// determinant.
fn oq_quotient(q: &CycScalar, big_m: u64, m: u64, name: String) -> HopfAlg {
    let bm = big_m as usize;
    let mm = m as usize;
    let dim = bm * mm * mm;
    let idx = |i: usize, j: usize, l: usize| (i * mm + j) * mm + l;
    let mut mult = vec![vec![Vec::new(); dim]; dim];
    for i in 0..bm {
        for j in 0..mm {
            for l in 0..mm {
                for a in 0..bm {
                    for b in 0..mm {
                        for c in 0..mm {
                            let cell: HElem = if j + b >= mm || l + c >= mm {
                                Vec::new()
                            } else {
                                let coeff = q.pow(((j + l) * a) as i64);
                                vec![(idx((i + a) % bm, j + b, l + c), coeff)]
                            };
                            mult[idx(i, j, l)][idx(a, b, c)] = cell;
                        }
                    }
                }
            }
        }
    }
    let counit: Vec<CycScalar> = (0..dim)
        .map(|t| {
            if t % (mm * mm) == 0 {
                CycScalar::one()
            } else {
                CycScalar::zero()
            }
        })
        .collect();
    let mut h = HopfAlg {
        name,
        dim,
        basis_names: (0..dim)
            .map(|t| {
                format!(
                    "e11^{} e12^{} e21^{}",
                    t / (mm * mm),
                    (t / mm) % mm,
                    t % mm
                )
            })
            .collect(),
        mult,
        unit: he_single(idx(0, 0, 0)),
        comult: vec![Vec::new(); dim],
        counit,
        antipode: vec![Vec::new(); dim],
        generators: vec![
            he_single(idx(1, 0, 0)),
            he_single(idx(0, 1, 0)),
            he_single(idx(0, 0, 1)),
        ],
        grouplike_registry: Vec::new(),
        labeled: BTreeMap::new(),
    };
    let e11 = he_single(idx(1, 0, 0));
    let e12 = he_single(idx(0, 1, 0));
    let e21 = he_single(idx(0, 0, 1));
    // e22 = e11^{big_m − 1} + q^{-1} e11^{big_m − 1} e12 e21.
    let e22: HElem = he_normalize(vec![
        (idx(bm - 1, 0, 0), CycScalar::one()),
        (idx(bm - 1, 1, 1), q.inverse()),
    ]);
    // Comultiplication of the matrix coefficients: Δ(e_ab) = Σ_c e_ac ⊗ e_cb.
    let tensor = |x: &HElem, y: &HElem| -> TElem {
        let mut t = Vec::new();
        for (i, ci) in x {
            for (j, cj) in y {
                t.push((*i, *j, ci * cj));
            }
        }
        te_normalize(t)
    };
    let d11 = te_normalize([tensor(&e11, &e11), tensor(&e12, &e21)].concat());
    let d12 = te_normalize([tensor(&e11, &e12), tensor(&e12, &e22)].concat());
    let d21 = te_normalize([tensor(&e21, &e11), tensor(&e22, &e21)].concat());
    let s11 = e22.clone();
    let s12 = he_scale(&e12, &-q);
    let s21 = he_scale(&e21, &-&q.inverse());
    for i in 0..bm {
        for j in 0..mm {
            for l in 0..mm {
                let mut d: TElem = vec![(idx(0, 0, 0), idx(0, 0, 0), CycScalar::one())];
                for _ in 0..i {
                    d = h.tensor_mul(&d, &d11);
                }
                for _ in 0..j {
                    d = h.tensor_mul(&d, &d12);
                }
                for _ in 0..l {
                    d = h.tensor_mul(&d, &d21);
                }
                h.comult[idx(i, j, l)] = d;
                // S(e11^i e12^j e21^l) = S(e21)^l S(e12)^j S(e11)^i.
                let mut s = h.unit.clone();
                for _ in 0..l {
                    s = h.mul(&s, &s21);
                }
                for _ in 0..j {
                    s = h.mul(&s, &s12);
                }
                for _ in 0..i {
                    s = h.mul(&s, &s11);
                }
                h.antipode[idx(i, j, l)] = s;
            }
        }
    }
    h.labeled.insert("e11".into(), e11);
    h.labeled.insert("e12".into(), e12);
    h.labeled.insert("e21".into(), e21);
    h.labeled.insert("e22".into(), e22);
    h
}

/// Quotient by the two-sided ideal generated by `gens`, after verifying that
/// it is a Hopf ideal (ε(I) = 0, S(I) ⊆ I, Δ(I) ⊆ I⊗H + H⊗I).
pub fn hopf_quotient(h: &HopfAlg, gens: &[HElem], name: String) -> Result<HopfAlg, String> {
    let n = h.dim;
    // Two-sided ideal closure.
    let mut ideal = RowSpan::new(n);
    for g in gens {
        ideal.insert(g);
    }
    loop {
        let before = ideal.rank();
        let rows = ideal.rows.clone();
        for r in &rows {
            for b in 0..n {
                ideal.insert(&h.mul(r, &he_single(b)));
                ideal.insert(&h.mul(&he_single(b), r));
            }
        }
        if ideal.rank() == before {
            break;
        }
    }
    // Hopf ideal checks.
    for r in &ideal.rows {
        if !h.counit_of(r).is_zero() {
            return Err("ideal is not a coideal: ε does not vanish on it".into());
        }
        if !ideal.reduce(&h.antipode_of(r)).is_empty() {
            return Err("ideal is not antipode-stable".into());
        }
    }
    // W = I⊗H + H⊗I inside H⊗H, flattened as index i*n + j.
    let mut w = RowSpan::new(n * n);
    for r in &ideal.rows {
        for b in 0..n {
            let left: HElem = r.iter().map(|(i, c)| (i * n + b, c.clone())).collect();
            let right: HElem = r.iter().map(|(j, c)| (b * n + j, c.clone())).collect();
            w.insert(&he_normalize(left));
            w.insert(&he_normalize(right));
        }
    }
    for r in &ideal.rows {
        let d = h.comul(r);
        let flat: HElem =
            he_normalize(d.iter().map(|(i, j, c)| (i * n + j, c.clone())).collect());
        if !w.reduce(&flat).is_empty() {
            return Err("ideal is not a coideal: Δ(I) ⊄ I⊗H + H⊗I".into());
        }
    }
    // Quotient basis: the non-pivot coordinates of the ideal's reduced rows.
    let mut is_pivot = vec![false; n];
    for &p in &ideal.pivots {
        is_pivot[p] = true;
    }
    let kept: Vec<usize> = (0..n).filter(|&i| !is_pivot[i]).collect();
    let qdim = kept.len();
    let pos_of: BTreeMap<usize, usize> =
        kept.iter().enumerate().map(|(a, &i)| (i, a)).collect();
    let project = |v: &HElem| -> HElem {
        let r = ideal.reduce(v);
        he_normalize(r.iter().map(|(i, c)| (pos_of[i], c.clone())).collect())
    };
    let mut mult = vec![vec![Vec::new(); qdim]; qdim];
    for (a, &i) in kept.iter().enumerate() {
        for (b, &j) in kept.iter().enumerate() {
            mult[a][b] = project(&h.mult[i][j]);
        }
    }
    let mut comult = Vec::with_capacity(qdim);
    for &k in &kept {
        // (π⊗π)Δ: reduce each tensor leg against the ideal.
        let mut t = Vec::new();
        for (i, j, c) in &h.comult[k] {
            let ri = ideal.reduce(&he_single(*i));
            let rj = ideal.reduce(&he_single(*j));
            for (x, cx) in &ri {
                for (y, cy) in &rj {
                    t.push((pos_of[x], pos_of[y], &(c * cx) * cy));
                }
            }
        }
        comult.push(te_normalize(t));
    }
    let counit = kept.iter().map(|&k| h.counit[k].clone()).collect();
    let antipode = kept
        .iter()
        .map(|&k| project(&h.antipode_of(&he_single(k))))
        .collect();
    let unit = project(&h.unit);
    let registry = h
        .grouplike_registry
        .iter()
        .map(|g| project(g))
        .filter(|g| !g.is_empty())
        .collect();
    let labeled = h
        .labeled
        .iter()
        .map(|(k, v)| (k.clone(), project(v)))
        .collect();
    Ok(HopfAlg {
        name,
        dim: qdim,
        basis_names: kept.iter().map(|&k| h.basis_names[k].clone()).collect(),
        mult,
        unit,
        comult,
        counit,
        antipode,
        generators: Vec::new(),
        grouplike_registry: registry,
        labeled,
    })
}

/// Parse a Hopf algebra name from the CLI grammar: `kG:<group>`,
/// `dual:<hopf>`, `taft:q=<scalar>,alpha=<0|1>,n=<int>`, `uq:<scalar>`,
/// `u2q:<scalar>`, `u2q8:<scalar>`, `double:<group>`.
pub fn parse_hopf(name: &str) -> Result<HopfAlg, String> {
    let name = name.trim();
    if let Some(rest) = name.strip_prefix("kG:") {
        return Ok(HopfAlg::group_algebra(&crate::groups::parse_group(rest)?));
    }
    if let Some(rest) = name.strip_prefix("dual:") {
        return Ok(HopfAlg::dual_hopf(&parse_hopf(rest)?));
    }
    if let Some(rest) = name.strip_prefix("double:") {
        return Ok(HopfAlg::drinfeld_double(&crate::groups::parse_group(rest)?));
    }
    if let Some(rest) = name.strip_prefix("taft:") {
        let mut q = None;
        let mut alpha = None;
        let mut n = None;
        for part in rest.split(',') {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| format!("malformed Taft parameter `{}`", part))?;
            match k.trim() {
                "q" => q = Some(CycScalar::parse(v)?),
                "alpha" => {
                    alpha = Some(v.trim().parse::<u8>().map_err(|_| "alpha must be 0 or 1")?)
                }
                "n" => n = Some(v.trim().parse::<u64>().map_err(|_| "bad n")?),
                other => return Err(format!("unknown Taft parameter `{}`", other)),
            }
        }
        return HopfAlg::taft(
            &q.ok_or("missing q")?,
            alpha.ok_or("missing alpha")?,
            n.ok_or("missing n")?,
        );
    }
    if let Some(rest) = name.strip_prefix("u2q8:") {
        return HopfAlg::eight_dim_quotient(&CycScalar::parse(rest)?);
    }
    if let Some(rest) = name.strip_prefix("u2q:") {
        return HopfAlg::u2q_sl2_dual(&CycScalar::parse(rest)?);
    }
    if let Some(rest) = name.strip_prefix("uq:") {
        return HopfAlg::uq_sl2_dual(&CycScalar::parse(rest)?);
    }
    Err(format!("unknown Hopf algebra `{}`", name))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::MatGroup;

    fn zeta(n: u64, k: i64) -> CycScalar {
        CycScalar::root_of_unity(n, k)
    }

    #[test]
    fn group_algebra_axioms_and_grouplikes() {
        let g = MatGroup::cyclic(6);
        let h = HopfAlg::group_algebra(&g);
        let report = h.check_axioms().unwrap();
        assert_eq!(report.mode, "full");
        assert_eq!(h.grouplikes().len(), 6);
    }

    #[test]
    fn dual_of_cyclic_group_algebra() {
        let h = HopfAlg::group_algebra(&MatGroup::cyclic(5));
        let d = HopfAlg::dual_hopf(&h);
        d.check_axioms().unwrap();
        // The dual of kC_n has exactly n grouplikes (the characters).
        assert_eq!(d.grouplikes().len(), 5);
        // Double dual is the original.
        let dd = HopfAlg::dual_hopf(&d);
        assert_eq!(dd.mult, h.mult);
        assert_eq!(dd.comult, h.comult);
    }

    #[test]
    fn dual_of_dihedral_group_algebra() {
        let h = HopfAlg::group_algebra(&MatGroup::dihedral(4));
        let d = HopfAlg::dual_hopf(&h);
        d.check_axioms().unwrap();
        // Linear characters of D_8: four of them.
        assert_eq!(d.grouplikes().len(), 4);
    }

    #[test]
    fn taft_algebras() {
        for (q, alpha, n) in [
            (zeta(3, 1), 0u8, 3u64),
            (zeta(3, 1), 1, 3),
            (zeta(4, 1), 0, 4),
            (zeta(6, 1), 0, 6),
            (zeta(3, 1), 0, 6),
            (zeta(3, 1), 1, 6),
        ] {
            let h = HopfAlg::taft(&q, alpha, n).unwrap();
            let m = (&q * &q).order_of().unwrap();
            assert_eq!(h.dim as u64, n * m, "dim of taft q={} n={}", q, n);
            h.check_axioms()
                .unwrap_or_else(|e| panic!("taft q={} α={} n={}: {}", q, alpha, n, e));
            // Grouplikes = powers of g.
            assert_eq!(h.grouplikes().len() as u64, n);
        }
        assert!(HopfAlg::taft(&zeta(4, 1), 1, 4).is_err()); // q^m = −1
        assert!(HopfAlg::taft(&zeta(3, 1), 0, 4).is_err()); // n not multiple
    }

    #[test]
    fn uq_dual_is_a_hopf_algebra_of_dimension_m_cubed() {
        let q = zeta(3, 1);
        let h = HopfAlg::uq_sl2_dual(&q).unwrap();
        assert_eq!(h.dim, 27);
        h.check_axioms().unwrap();
        // The only algebra character of u_q(sl2) for odd ord(q) sends
        // E, F ↦ 0 and K ↦ 1, so the dual has a single grouplike.
        assert_eq!(h.grouplikes().len(), 1);
        // Quantum determinant: e11 e22 − q⁻¹ e12 e21 = 1.
        let det = he_add(
            &h.mul(&h.labeled("e11").unwrap(), &h.labeled("e22").unwrap()),
            &he_scale(
                &h.mul(&h.labeled("e12").unwrap(), &h.labeled("e21").unwrap()),
                &-&q.inverse(),
            ),
        );
        assert_eq!(det, h.unit);
    }

    #[test]
    fn u2q_dual_has_dimension_two_m_cubed() {
        let q = zeta(4, 1);
        let h = HopfAlg::u2q_sl2_dual(&q).unwrap();
        assert_eq!(h.dim, 16);
        h.check_axioms().unwrap();
        let q6 = zeta(6, 1);
        let h6 = HopfAlg::u2q_sl2_dual(&q6).unwrap();
        assert_eq!(h6.dim, 54);
        h6.check_axioms().unwrap();
    }

    #[test]
    fn eight_dimensional_quotient() {
        let h = HopfAlg::eight_dim_quotient(&zeta(4, 1)).unwrap();
        assert_eq!(h.dim, 8);
        h.check_axioms().unwrap();
    }

    #[test]
    fn drinfeld_double_of_a_small_group() {
        let g = MatGroup::binary_dihedral(2); // quaternion group, |G| = 8
        let d = HopfAlg::drinfeld_double(&g);
        assert_eq!(d.dim, 64);
        d.check_axioms().unwrap();
        // |G(D(G))| = |Z(G)| · |χ(G)| = 2 · 4 = 8 for the quaternions.
        assert_eq!(d.grouplikes().len(), 8);
    }

    #[test]
    fn quotient_of_taft_by_x_is_the_cyclic_group_algebra() {
        let q = zeta(3, 1);
        let t = HopfAlg::taft(&q, 0, 3).unwrap();
        let x = t.labeled("x").unwrap();
        let quot = hopf_quotient(&t, &[x], "taft/(x)".into()).unwrap();
        assert_eq!(quot.dim, 3);
        quot.check_axioms().unwrap();
        assert_eq!(quot.grouplikes().len(), 3);
    }

    #[test]
    fn parse_hopf_names() {
        assert_eq!(parse_hopf("kG:C:4").unwrap().dim, 4);
        assert_eq!(parse_hopf("dual:kG:D:10").unwrap().dim, 10);
        assert_eq!(parse_hopf("taft:q=zeta:4:1,alpha=0,n=4").unwrap().dim, 8);
        assert_eq!(parse_hopf("uq:zeta:3:1").unwrap().dim, 27);
        assert_eq!(parse_hopf("u2q:zeta:4:1").unwrap().dim, 16);
        assert_eq!(parse_hopf("u2q8:zeta:4:1").unwrap().dim, 8);
        assert_eq!(parse_hopf("double:C:3").unwrap().dim, 9);
        assert!(parse_hopf("nope:1").is_err());
    }
}
