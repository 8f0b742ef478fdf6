//! Degree-truncated invariant and coinvariant subrings.
//!
//! Slices of R^{co K} are computed by solving ρ(f) = f⊗1 exactly on each
//! graded slice; slices of R^G by the Reynolds averaging projector. On top of
//! the slices: a Molien-series oracle (an independent route to the invariant
//! dimensions), minimal generator extraction, relation detection among the
//! generators, hypersurface-presentation verification, and iterated
//! ("two-step") coinvariants along a Hopf quotient, where a finite group acts
//! on the first-stage subring.

use crate::action::{define_group_action, nullspace, Coaction, GroupAction};
use crate::groups::MatGroup;
use crate::hopf::RowSpan;
use crate::ncalg::{NcElement, PresentedAlgebra, Word};
use crate::scalar::CycScalar;
use num_rational::BigRational;
use num_traits::Signed;
use std::collections::BTreeMap;

fn dense_to_sparse(v: &[CycScalar]) -> Vec<(usize, CycScalar)> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

/// Canonical (reduced-row-echelon) basis of the span of the given vectors.
fn canonical_span(vectors: &[Vec<CycScalar>], ncols: usize) -> Vec<Vec<CycScalar>> {
    let mut rows: Vec<Vec<CycScalar>> = vectors.to_vec();
    crate::action::rref(&mut rows);
    let _ = ncols;
    rows
}

/// Element of the ambient algebra from coordinates over a graded slice.
fn coords_to_elem(words: &[Word], coords: &[CycScalar]) -> NcElement {
    let mut e = NcElement::zero();
    for (w, c) in words.iter().zip(coords) {
        e.add_term(w.clone(), c.clone());
    }
    e
}

/// Coordinates of a homogeneous normal-form element over a graded slice.
fn elem_to_coords(words: &[Word], e: &NcElement) -> Vec<CycScalar> {
    let pos: BTreeMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut v = vec![CycScalar::zero(); words.len()];
    for (w, c) in &e.terms {
        let i = *pos
            .get(w)
            .expect("element must be supported on the graded slice");
        v[i] = c.clone();
    }
    v
}

/// Basis of the degree-d coinvariants (R_d)^{co K}: solutions of ρ(f) = f⊗1.
pub fn coinvariant_slice(rho: &Coaction, d: u64) -> Vec<Vec<CycScalar>> {
    let words = rho.algebra.graded_slice(d);
    let n = words.len();
    if n == 0 {
        return Vec::new();
    }
    // Row index per (word, Hopf basis index) pair appearing in any image.
    let mut row_of: BTreeMap<(Word, usize), usize> = BTreeMap::new();
    let mut cols: Vec<Vec<((Word, usize), CycScalar)>> = Vec::new();
    for w in &words {
        let mut img = rho.coact_word(w, true);
        // Subtract w ⊗ 1.
        for (k, c) in &rho.hopf.unit {
            let e = img.entry((w.clone(), *k)).or_insert_with(CycScalar::zero);
            *e = &*e - c;
        }
        let entries: Vec<_> = img
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        for (key, _) in &entries {
            let next = row_of.len();
            row_of.entry(key.clone()).or_insert(next);
        }
        cols.push(entries);
    }
    let mut rows = vec![vec![CycScalar::zero(); n]; row_of.len()];
    for (j, entries) in cols.into_iter().enumerate() {
        for (key, c) in entries {
            rows[row_of[&key]][j] = c;
        }
    }
    canonical_span(&nullspace(&rows, n), n)
}

/// Basis of the degree-d invariants (R_d)^G via the Reynolds projector.
pub fn invariant_slice(act: &GroupAction, d: u64) -> Vec<Vec<CycScalar>> {
    let words = act.algebra.graded_slice(d);
    let n = words.len();
    if n == 0 {
        return Vec::new();
    }
    let order = CycScalar::from_int(act.group.order() as i64);
    let inv_order = order.inverse();
    let mut p = vec![vec![CycScalar::zero(); n]; n];
    for e in 0..act.group.order() {
        let m = act.matrix_on_slice(e, d);
        for i in 0..n {
            for j in 0..n {
                p[i][j] = &p[i][j] + &m[i][j];
            }
        }
    }
    // Column space of the projector (1/|G|)Σσ.
    let columns: Vec<Vec<CycScalar>> = (0..n)
        .map(|j| (0..n).map(|i| &p[i][j] * &inv_order).collect())
        .collect();
    canonical_span(&columns, n)
}

/// Exact Molien series of a graded group action: coefficient d is
/// (1/|G|) Σ_σ tr(σ|R_d), an independent oracle for the invariant dimensions.
pub fn molien_series(act: &GroupAction, dmax: u64) -> Vec<u64> {
    let order = BigRational::from_integer((act.group.order() as i64).into());
    (0..=dmax)
        .map(|d| {
            let mut total = CycScalar::zero();
            for e in 0..act.group.order() {
                let m = act.matrix_on_slice(e, d);
                for (i, row) in m.iter().enumerate() {
                    total = &total + &row[i];
                }
            }
            let r = total
                .as_rational()
                .expect("Molien coefficient must be rational");
            let avg = r / order.clone();
            assert!(
                avg.is_integer() && !avg.is_negative(),
                "Molien coefficient must be a nonnegative integer"
            );
            avg.to_integer()
                .try_into()
                .expect("Molien coefficient fits in u64")
        })
        .collect()
}

/// A graded subspace of a presented algebra, held slice by slice.
#[derive(Clone)]
pub struct GradedSubring {
    pub ambient: PresentedAlgebra,
    pub bound: u64,
    /// slices[d] = canonical basis, coordinates over ambient.graded_slice(d).
    pub slices: Vec<Vec<Vec<CycScalar>>>,
}

/// A minimal generator of a graded subring.
#[derive(Clone)]
pub struct SubringGenerator {
    pub degree: u64,
    pub element: NcElement,
}

impl GradedSubring {
    pub fn coinvariants(rho: &Coaction, bound: u64) -> GradedSubring {
        GradedSubring {
            ambient: rho.algebra.clone(),
            bound,
            slices: (0..=bound).map(|d| coinvariant_slice(rho, d)).collect(),
        }
    }

    pub fn invariants(act: &GroupAction, bound: u64) -> GradedSubring {
        GradedSubring {
            ambient: act.algebra.clone(),
            bound,
            slices: (0..=bound).map(|d| invariant_slice(act, d)).collect(),
        }
    }

    /// Slice dimensions (the truncated Hilbert series).
    pub fn dims(&self) -> Vec<u64> {
        self.slices.iter().map(|s| s.len() as u64).collect()
    }

    /// Slice bases as algebra elements.
    pub fn slice_elements(&self, d: u64) -> Vec<NcElement> {
        let words = self.ambient.graded_slice(d);
        self.slices[d as usize]
            .iter()
            .map(|v| coords_to_elem(&words, v))
            .collect()
    }

    /// Products of retained slices stay in retained slices (subring check).
    pub fn is_multiplicatively_closed(&self) -> bool {
        for d1 in 1..=self.bound {
            for d2 in d1..=self.bound {
                if d1 + d2 > self.bound {
                    break;
                }
                let words = self.ambient.graded_slice(d1 + d2);
                let mut span = RowSpan::new(words.len());
                for v in &self.slices[(d1 + d2) as usize] {
                    span.insert(&dense_to_sparse(v));
                }
                for a in self.slice_elements(d1) {
                    for b in self.slice_elements(d2) {
                        let prod = self.ambient.multiply(&a, &b);
                        let coords = elem_to_coords(&words, &prod);
                        if !span.reduce(&dense_to_sparse(&coords)).is_empty() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Degree-by-degree complement of the decomposable span: elements of each
    /// slice not expressible as products of lower-degree slices. Ties inside
    /// a degree are broken by the canonical slice basis order.
    pub fn minimal_generators(&self) -> Vec<SubringGenerator> {
        let mut gens = Vec::new();
        for d in 1..=self.bound {
            let words = self.ambient.graded_slice(d);
            let mut span = RowSpan::new(words.len());
            for d1 in 1..d {
                let d2 = d - d1;
                if d2 < d1 {
                    break;
                }
                for a in self.slice_elements(d1) {
                    for b in self.slice_elements(d2) {
                        for (x, y) in [(&a, &b), (&b, &a)] {
                            let prod = self.ambient.multiply(x, y);
                            let coords = elem_to_coords(&words, &prod);
                            span.insert(&dense_to_sparse(&coords));
                        }
                    }
                }
            }
            for v in &self.slices[d as usize] {
                if span.insert(&dense_to_sparse(v)) {
                    gens.push(SubringGenerator {
                        degree: d,
                        element: coords_to_elem(&words, v),
                    });
                }
            }
        }
        gens
    }

    /// Kernel of the evaluation map from the polynomial (or free) algebra on
    /// the generators into the ambient ring, degree by degree up to `drel`,
    /// reduced modulo consequences of lower-degree relations. Returns the
    /// model algebra (generators named a, b, c, …) and the new relations.
    pub fn find_relations(
        &self,
        gens: &[SubringGenerator],
        drel: u64,
    ) -> (PresentedAlgebra, Vec<(u64, NcElement)>) {
        let images: Vec<NcElement> = gens.iter().map(|g| g.element.clone()).collect();
        let degrees: Vec<u64> = gens.iter().map(|g| g.degree).collect();
        let names: Vec<String> = (0..gens.len())
            .map(|i| ((b'a' + i as u8) as char).to_string())
            .collect();
        let commuting = images.iter().enumerate().all(|(i, a)| {
            images[i + 1..].iter().all(|b| {
                self.ambient.multiply(a, b) == self.ambient.multiply(b, a)
            })
        });
        let model = if commuting {
            PresentedAlgebra::polynomial_ring(names, degrees.clone())
        } else {
            PresentedAlgebra {
                names,
                degrees: degrees.clone(),
                rules: Vec::new(),
                relations: Vec::new(),
                commutative: false,
            }
        };
        let mut relations: Vec<(u64, NcElement)> = Vec::new();
        let min_deg = degrees.iter().copied().min().unwrap_or(1);
        for e in (2 * min_deg)..=drel {
            let monos = model.graded_slice(e);
            if monos.is_empty() {
                continue;
            }
            let ambient_words = self.ambient.graded_slice(e);
            // Evaluation matrix: ambient coordinates of each monomial image.
            let mut rows = vec![vec![CycScalar::zero(); monos.len()]; ambient_words.len()];
            for (j, mono) in monos.iter().enumerate() {
                let img = self.ambient.substitute(
                    &NcElement::monomial(mono.clone(), CycScalar::one()),
                    &images,
                );
                for (w, c) in &img.terms {
                    let i = ambient_words
                        .iter()
                        .position(|aw| aw == w)
                        .expect("image supported on the graded slice");
                    rows[i][j] = c.clone();
                }
            }
            let kernel = nullspace(&rows, monos.len());
            if kernel.is_empty() {
                continue;
            }
            // Consequences of lower relations: monomial · rel · monomial
            // (one-sided suffices in the commutative case).
            let mut span = RowSpan::new(monos.len());
            for (rd, rel) in &relations {
                if *rd >= e {
                    continue;
                }
                let rem = e - rd;
                let left_degrees: Vec<u64> = if model.commutative {
                    vec![0]
                } else {
                    (0..=rem).collect()
                };
                for i in left_degrees {
                    for lfac in model.graded_slice(i) {
                        let lhs = model.multiply(
                            &NcElement::monomial(lfac, CycScalar::one()),
                            rel,
                        );
                        for rfac in model.graded_slice(rem - i) {
                            let prod = model.multiply(
                                &lhs,
                                &NcElement::monomial(rfac, CycScalar::one()),
                            );
                            let coords = elem_to_coords(&monos, &prod);
                            span.insert(&dense_to_sparse(&coords));
                        }
                    }
                }
            }
            for v in kernel {
                if span.insert(&dense_to_sparse(&v)) {
                    relations.push((e, coords_to_elem(&monos, &v)));
                }
            }
        }
        (model, relations)
    }

    /// Do the slice dimensions match the hypersurface series
    /// (1 − t^relDegree)/∏(1 − t^{d_i}) up to the bound?
    pub fn verify_hypersurface(&self, gen_degrees: &[u64], rel_degree: u64) -> bool {
        let expect = hypersurface_coeffs(gen_degrees, rel_degree, self.bound);
        self.dims()
            .iter()
            .zip(&expect)
            .all(|(a, b)| (*a as i64) == *b)
    }
}

/// Coefficients of (1 − t^rel)/∏(1 − t^{d_i}) up to dmax (possibly negative
/// for a wrong guess — mismatches are data, not panics).
fn hypersurface_coeffs(gen_degrees: &[u64], rel_degree: u64, dmax: u64) -> Vec<i64> {
    let n = dmax as usize + 1;
    let mut s = vec![0i64; n];
    s[0] = 1;
    if (rel_degree as usize) < n {
        s[rel_degree as usize] -= 1;
    }
    for &d in gen_degrees {
        // Multiply by 1/(1 − t^d): stride-d prefix sums.
        for i in d as usize..n {
            s[i] += s[i - d as usize];
        }
    }
    s
}

/// Result of a two-step coinvariant computation: the first-stage subring,
/// its commutative model with the detected relations, and the invariants of
/// the finite group acting on the model.
pub struct TwoStepResult {
    pub stage1: GradedSubring,
    pub generators: Vec<SubringGenerator>,
    /// Model algebra of stage 1 (generators a, b, c, … with relations).
    pub model: PresentedAlgebra,
    pub relations: Vec<(u64, NcElement)>,
    /// Invariants of the stage-2 group action on the model.
    pub stage2: GradedSubring,
}

/// Iterated coinvariants: compute R^{co K} for the given coaction, present it
/// on its minimal generators, let the finite group act linearly on those
/// generators through `gen_mats` (one matrix per group generator), and take
/// invariants of the model. Errors if the model's Hilbert series disagrees
/// with the stage-1 slices or if the group action does not preserve the
/// relations (witness in the message).
pub fn two_step_coinvariants(
    rho: &Coaction,
    group: &MatGroup,
    gen_mats: Vec<Vec<Vec<CycScalar>>>,
    bound: u64,
) -> Result<TwoStepResult, String> {
    let stage1 = GradedSubring::coinvariants(rho, bound);
    let gens = stage1.minimal_generators();
    let maxdeg = gens.iter().map(|g| g.degree).max().unwrap_or(1);
    let (_, relations) = stage1.find_relations(&gens, 2 * maxdeg);
    let names: Vec<String> = (0..gens.len())
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect();
    let degrees: Vec<u64> = gens.iter().map(|g| g.degree).collect();
    let model = PresentedAlgebra::commutative_quotient(
        names,
        degrees,
        relations.iter().map(|(_, r)| r.clone()).collect(),
    );
    // The model must reproduce the stage-1 Hilbert series within the bound.
    let model_dims: Vec<u64> = model.hilbert_series(bound);
    if model_dims != stage1.dims() {
        return Err(format!(
            "stage-1 model Hilbert series {:?} does not match slices {:?}",
            model_dims,
            stage1.dims()
        ));
    }
    let act = define_group_action(&model, group, gen_mats)?;
    let stage2 = GradedSubring::invariants(&act, bound);
    Ok(TwoStepResult {
        stage1,
        generators: gens,
        model,
        relations,
        stage2,
    })
}

/// Slice-by-slice equality of the quantum-plane coinvariants under the
/// eight-dimensional quotient coaction and under the full 16-dimensional
/// quantum-group coaction, for q a primitive fourth root of unity.
/// Degree of the denominator of the closed-form Hilbert series
/// (1 - t^rel)/prod(1 - t^{d_i}) (numerator 1 when rel is None) after the
/// fraction is reduced to lowest terms.
pub fn reduced_denominator_degree(gen_degrees: &[u64], rel_degree: Option<u64>) -> u64 {
    use crate::scalar::QPoly;
    use num_rational::BigRational;
    use num_traits::{One, Zero};
    fn one_minus_t_pow(d: u64) -> QPoly {
        let mut v = vec![BigRational::zero(); d as usize + 1];
        v[0] = BigRational::one();
        v[d as usize] = -BigRational::one();
        QPoly(v)
    }
    fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
        let mut a = a.clone();
        let mut b = b.clone();
        while b.degree().is_some() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a
    }
    let mut den = QPoly::monomial(0, BigRational::one());
    for &d in gen_degrees {
        den = den.mul(&one_minus_t_pow(d));
    }
    let num = match rel_degree {
        Some(r) => one_minus_t_pow(r),
        None => QPoly::monomial(0, BigRational::one()),
    };
    let g = gcd(&den, &num);
    let (reduced, rem) = den.div_rem(&g);
    assert!(rem.degree().is_none(), "gcd must divide the denominator");
    reduced.degree().unwrap_or(0) as u64
}

pub fn t_coinvariants_equal_u2q(q: &CycScalar, bound: u64) -> Result<bool, String> {
    if q.order_of() != Some(4) {
        return Err("q must be a primitive fourth root of unity".into());
    }
    let big = crate::hopf::HopfAlg::u2q_sl2_dual(q)?;
    let small = crate::hopf::HopfAlg::eight_dim_quotient(q)?;
    let plane = PresentedAlgebra::quantum_plane(q);
    let mk = |h: &crate::hopf::HopfAlg| -> Result<Coaction, String> {
        let u = NcElement::generator(0);
        let v = NcElement::generator(1);
        crate::action::define_coaction(
            &plane,
            h,
            vec![
                vec![
                    (u.clone(), h.labeled("e11").unwrap()),
                    (v.clone(), h.labeled("e21").unwrap()),
                ],
                vec![
                    (u, h.labeled("e12").unwrap()),
                    (v, h.labeled("e22").unwrap()),
                ],
            ],
        )
    };
    let rho_big = mk(&big)?;
    let rho_small = mk(&small)?;
    for d in 0..=bound {
        if coinvariant_slice(&rho_big, d) != coinvariant_slice(&rho_small, d) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::define_coaction;
    use crate::hopf::HopfAlg;

    fn zeta(n: u64, k: i64) -> CycScalar {
        CycScalar::root_of_unity(n, k)
    }

    fn taft_coaction(q: &CycScalar, n: u64) -> Coaction {
        let t = HopfAlg::taft(q, 0, n).unwrap();
        let r = PresentedAlgebra::quantum_plane(q);
        let u = NcElement::generator(0);
        let v = NcElement::generator(1);
        define_coaction(
            &r,
            &t,
            vec![
                vec![(u.clone(), t.labeled("g").unwrap())],
                vec![
                    (v, t.labeled("g^-1").unwrap()),
                    (u, t.labeled("x").unwrap()),
                ],
            ],
        )
        .unwrap()
    }

    fn oq_coaction(q: &CycScalar, h: &HopfAlg) -> Coaction {
        let r = PresentedAlgebra::quantum_plane(q);
        let u = NcElement::generator(0);
        let v = NcElement::generator(1);
        define_coaction(
            &r,
            h,
            vec![
                vec![
                    (u.clone(), h.labeled("e11").unwrap()),
                    (v.clone(), h.labeled("e21").unwrap()),
                ],
                vec![
                    (u, h.labeled("e12").unwrap()),
                    (v, h.labeled("e22").unwrap()),
                ],
            ],
        )
        .unwrap()
    }

    #[test]
    fn taft_coinvariants_odd_order_give_power_polynomials() {
        let q = zeta(3, 1);
        let rho = taft_coaction(&q, 3);
        assert!(coinvariant_slice(&rho, 1).is_empty());
        assert_eq!(coinvariant_slice(&rho, 0).len(), 1);
        let s3 = coinvariant_slice(&rho, 3);
        assert_eq!(s3.len(), 2);
        let sub = GradedSubring::coinvariants(&rho, 12);
        assert_eq!(
            sub.dims(),
            vec![1, 0, 0, 2, 0, 0, 3, 0, 0, 4, 0, 0, 5],
            "k[u³, v³] dimensions"
        );
        assert!(sub.is_multiplicatively_closed());
        let gens = sub.minimal_generators();
        assert_eq!(
            gens.iter().map(|g| g.degree).collect::<Vec<_>>(),
            vec![3, 3]
        );
        let (_, rels) = sub.find_relations(&gens, 12);
        assert!(rels.is_empty(), "k[u³, v³] is a polynomial ring");
    }

    #[test]
    fn taft_coinvariants_even_order_give_a_hypersurface() {
        let q = zeta(4, 1);
        let rho = taft_coaction(&q, 4);
        let sub = GradedSubring::coinvariants(&rho, 12);
        assert_eq!(sub.dims(), vec![1, 0, 0, 0, 3, 0, 0, 0, 5, 0, 0, 0, 7]);
        let gens = sub.minimal_generators();
        assert_eq!(
            gens.iter().map(|g| g.degree).collect::<Vec<_>>(),
            vec![4, 4, 4],
            "generators u⁴, u²v², v⁴"
        );
        let (model, rels) = sub.find_relations(&gens, 8);
        assert_eq!(rels.len(), 1);
        assert_eq!(rels[0].0, 8);
        let rendered = rels[0].1.render(&model.names);
        assert!(rendered.contains("b"), "relation involves b²: {}", rendered);
        assert!(sub.verify_hypersurface(&[4, 4, 4], 8));
        // Not a hypersurface on the wrong data.
        assert!(!sub.verify_hypersurface(&[4, 4], 8));
    }

    #[test]
    fn quantum_group_coinvariants_match_power_polynomials() {
        // Odd case: coinvariants of the 27-dimensional quantum-group coaction
        // are k[u³, v³].
        let q = zeta(3, 1);
        let h = HopfAlg::uq_sl2_dual(&q).unwrap();
        let rho = oq_coaction(&q, &h);
        let sub = GradedSubring::coinvariants(&rho, 9);
        assert_eq!(sub.dims(), vec![1, 0, 0, 2, 0, 0, 3, 0, 0, 4]);
        let gens = sub.minimal_generators();
        assert_eq!(
            gens.iter().map(|g| g.degree).collect::<Vec<_>>(),
            vec![3, 3]
        );
    }

    #[test]
    fn invariants_and_molien_agree() {
        // {±I} on k[x, y].
        let poly =
            PresentedAlgebra::polynomial_ring(vec!["x".into(), "y".into()], vec![1, 1]);
        let g = MatGroup::cyclic(2);
        let act = GroupAction::natural(&poly, &g).unwrap();
        assert!(invariant_slice(&act, 1).is_empty());
        assert_eq!(invariant_slice(&act, 2).len(), 3);
        let molien = molien_series(&act, 6);
        assert_eq!(molien, vec![1, 0, 3, 0, 5, 0, 7]);
        let sub = GradedSubring::invariants(&act, 6);
        assert_eq!(sub.dims(), molien);
        assert!(sub.verify_hypersurface(&[2, 2, 2], 4));
        // C_3 diagonal on k_q: fixed monomials need i ≡ j mod 3.
        let q = zeta(5, 1);
        let kq = PresentedAlgebra::quantum_plane(&q);
        let c3 = MatGroup::cyclic(3);
        let act3 = GroupAction::natural(&kq, &c3).unwrap();
        let molien3 = molien_series(&act3, 8);
        let dims3: Vec<u64> = (0..=8).map(|d| invariant_slice(&act3, d).len() as u64).collect();
        assert_eq!(molien3, dims3);
        assert_eq!(invariant_slice(&act3, 3).len(), 2, "span{{u³, v³}}");
    }

    #[test]
    fn classical_veronese_relation() {
        let poly =
            PresentedAlgebra::polynomial_ring(vec!["x".into(), "y".into()], vec![1, 1]);
        let g = MatGroup::cyclic(2);
        let act = GroupAction::natural(&poly, &g).unwrap();
        let sub = GradedSubring::invariants(&act, 8);
        let gens = sub.minimal_generators();
        assert_eq!(
            gens.iter().map(|g| g.degree).collect::<Vec<_>>(),
            vec![2, 2, 2]
        );
        let (_, rels) = sub.find_relations(&gens, 4);
        assert_eq!(rels.len(), 1, "single quadric b² = ac");
        assert_eq!(rels[0].0, 4);
    }

    #[test]
    fn two_step_odd_case() {
        // Stage 1: k[u³, v³]; stage 2: −I acting by (−1)³ on both generators.
        let q = zeta(3, 1);
        let h = HopfAlg::uq_sl2_dual(&q).unwrap();
        let rho = oq_coaction(&q, &h);
        let g = MatGroup::cyclic(2);
        let minus = vec![vec![
            vec![CycScalar::from_int(-1), CycScalar::zero()],
            vec![CycScalar::zero(), CycScalar::from_int(-1)],
        ]];
        let out = two_step_coinvariants(&rho, &g, minus, 12).unwrap();
        assert_eq!(out.stage1.dims(), vec![1, 0, 0, 2, 0, 0, 3, 0, 0, 4, 0, 0, 5]);
        assert_eq!(
            out.stage2.dims(),
            vec![1, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 5],
            "invariants of ±I on two degree-3 variables"
        );
    }

    #[test]
    fn two_step_trivial_group_reduces_to_plain_coinvariants() {
        let q = zeta(4, 1);
        let h = HopfAlg::u2q_sl2_dual(&q).unwrap();
        let rho = oq_coaction(&q, &h);
        let triv = MatGroup::cyclic(1);
        let id3: Vec<Vec<Vec<CycScalar>>> = triv
            .gens
            .iter()
            .map(|_| {
                (0..3)
                    .map(|i| {
                        (0..3)
                            .map(|j| {
                                if i == j {
                                    CycScalar::one()
                                } else {
                                    CycScalar::zero()
                                }
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let out = two_step_coinvariants(&rho, &triv, id3, 12).unwrap();
        assert_eq!(out.stage2.dims(), out.stage1.dims());
        assert_eq!(out.relations.len(), 1);
        assert!(out.stage1.verify_hypersurface(&[4, 4, 4], 8));
    }

    #[test]
    fn eight_dimensional_and_full_coinvariants_agree() {
        let q = zeta(4, 1);
        assert!(t_coinvariants_equal_u2q(&q, 8).unwrap());
    }
}
