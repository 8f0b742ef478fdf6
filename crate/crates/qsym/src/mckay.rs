//! Fusion data for semisimple module categories and McKay quivers with
//! A/D/E/DL type recognition and DOT export.

use crate::groups::MatGroup;
use crate::scalar::CycScalar;

// ---------------------------------------------------------------------
// Fusion rings
// ---------------------------------------------------------------------

/// A based ring on a finite set of simple objects: tensor multiplicities
/// mult[x][y][z] = multiplicity of simple z in x ⊗ y.
#[derive(Clone)]
pub struct FusionRing {
    pub labels: Vec<String>,
    pub dims: Vec<u64>,
    pub unit: usize,
    pub mult: Vec<Vec<Vec<u64>>>,
}

impl FusionRing {
    /// Structural checks: unit laws, associativity, and the dimension
    /// homomorphism dim(x)·dim(y) = Σ_z mult[x][y][z]·dim(z).
    pub fn validate(&self) -> Result<(), String> {
        let n = self.labels.len();
        for x in 0..n {
            for z in 0..n {
                let left = self.mult[self.unit][x][z];
                let right = self.mult[x][self.unit][z];
                let expect = if x == z { 1 } else { 0 };
                if left != expect || right != expect {
                    return Err(format!("unit law fails at ({}, {})", x, z));
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                let total: u64 = (0..n).map(|z| self.mult[x][y][z] * self.dims[z]).sum();
                if total != self.dims[x] * self.dims[y] {
                    return Err(format!("dimension count fails at ({}, {})", x, y));
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for v in 0..n {
                        let a: u64 =
                            (0..n).map(|w| self.mult[x][y][w] * self.mult[w][z][v]).sum();
                        let b: u64 =
                            (0..n).map(|w| self.mult[y][z][w] * self.mult[x][w][v]).sum();
                        if a != b {
                            return Err(format!(
                                "associativity fails at ({}, {}, {}) -> {}",
                                x, y, z, v
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Fusion ring of the representations of a finite group, computed from its
/// character table: mult[x][y][z] = (1/|G|) Σ_c |c|·χx(c)·χy(c)·conj(χz(c)).
pub fn fusion_from_group(g: &MatGroup) -> Result<FusionRing, String> {
    let ct = g.character_table()?;
    let n = ct.rows.len();
    let labels: Vec<String> = (0..n).map(|i| format!("chi{}", i)).collect();
    let dims: Vec<u64> = ct.rows.iter().map(|r| r.dim).collect();
    let unit = ct
        .rows
        .iter()
        .position(|r| r.values.iter().all(|v| v.is_one()))
        .ok_or("missing trivial character")?;
    let order = CycScalar::from_int(ct.group_order as i64);
    let mut mult = vec![vec![vec![0u64; n]; n]; n];
    for x in 0..n {
        for y in 0..n {
            // Pointwise product character of x ⊗ y.
            let prod: Vec<CycScalar> = (0..ct.classes.len())
                .map(|c| &ct.rows[x].values[c] * &ct.rows[y].values[c])
                .collect();
            for z in 0..n {
                let mut acc = CycScalar::zero();
                for (c, cl) in ct.classes.iter().enumerate() {
                    let term = &(&prod[c] * &ct.rows[z].values[c].conj())
                        * &CycScalar::from_int(cl.size as i64);
                    acc = &acc + &term;
                }
                let m = &acc * &order.inverse();
                let as_int = m.as_integer().ok_or_else(|| {
                    format!("non-integer fusion multiplicity at ({}, {}, {})", x, y, z)
                })?;
                let v: i64 = as_int
                    .try_into()
                    .map_err(|_| "fusion multiplicity out of range".to_string())?;
                if v < 0 {
                    return Err(format!(
                        "negative fusion multiplicity at ({}, {}, {})",
                        x, y, z
                    ));
                }
                mult[x][y][z] = v as u64;
            }
        }
    }
    let f = FusionRing {
        labels,
        dims,
        unit,
        mult,
    };
    f.validate()?;
    Ok(f)
}

/// Fusion ring of the dual of a group algebra: the simples are the points
/// of the group and tensor is the group product.
pub fn fusion_from_dual_group(g: &MatGroup) -> FusionRing {
    let n = g.order();
    let labels: Vec<String> = (0..n).map(|i| format!("p{}", i)).collect();
    let mut mult = vec![vec![vec![0u64; n]; n]; n];
    for x in 0..n {
        for y in 0..n {
            mult[x][y][g.mult[x][y]] = 1;
        }
    }
    FusionRing {
        labels,
        dims: vec![1; n],
        unit: g.id,
        mult,
    }
}

/// Multiplicities of the irreducible characters in the 2-dimensional
/// representation whose character is the matrix trace (the defining
/// representation of an SL2 or dihedral matrix group).
pub fn tautological_multiplicities(g: &MatGroup) -> Result<Vec<u64>, String> {
    let ct = g.character_table()?;
    let traces: Vec<CycScalar> = ct.classes.iter().map(|c| c.trace.clone()).collect();
    ct.decompose(&traces)
}

// ---------------------------------------------------------------------
// McKay quivers
// ---------------------------------------------------------------------

/// Recognized shape of the undirected collapse of a McKay quiver.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub enum QuiverType {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
    /// Path with a single loop at one end vertex.
    DL(usize),
    Empty,
    Unknown,
}

impl std::fmt::Display for QuiverType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            QuiverType::A(n) => write!(f, "A_{}", n),
            QuiverType::D(n) => write!(f, "D_{}", n),
            QuiverType::E6 => write!(f, "E6"),
            QuiverType::E7 => write!(f, "E7"),
            QuiverType::E8 => write!(f, "E8"),
            QuiverType::DL(n) => write!(f, "DL_{}", n),
            QuiverType::Empty => write!(f, "empty"),
            QuiverType::Unknown => write!(f, "unknown"),
        }
    }
}

/// McKay quiver on the nontrivial simples: arrows[i][j] = multiplicity of
/// simple i in U ⊗ (simple j).
#[derive(Clone, serde::Serialize)]
pub struct McKayQuiver {
    pub labels: Vec<String>,
    pub dims: Vec<u64>,
    pub arrows: Vec<Vec<u64>>,
    pub kind: QuiverType,
}

/// Build the McKay quiver of a formal sum U of simples (given by its
/// multiplicity vector) of total dimension 2.
pub fn mckay_quiver(f: &FusionRing, u: &[u64]) -> Result<McKayQuiver, String> {
    let n = f.labels.len();
    if u.len() != n {
        return Err("multiplicity vector length must match the simples".into());
    }
    let total: u64 = (0..n).map(|c| u[c] * f.dims[c]).sum();
    if total != 2 {
        return Err(format!("U must have total dimension 2, got {}", total));
    }
    let vertices: Vec<usize> = (0..n).filter(|&i| i != f.unit).collect();
    let labels = vertices.iter().map(|&i| f.labels[i].clone()).collect();
    let dims = vertices.iter().map(|&i| f.dims[i]).collect();
    let mut arrows = vec![vec![0u64; vertices.len()]; vertices.len()];
    for (a, &i) in vertices.iter().enumerate() {
        for (b, &j) in vertices.iter().enumerate() {
            arrows[a][b] = (0..n).map(|c| u[c] * f.mult[c][j][i]).sum();
        }
    }
    let kind = classify_quiver_type(&arrows);
    Ok(McKayQuiver {
        labels,
        dims,
        arrows,
        kind,
    })
}

/// Recognize the undirected collapse of an arrow matrix as a classical
/// A/D/E diagram or a loop-ended path (DL).
pub fn classify_quiver_type(arrows: &[Vec<u64>]) -> QuiverType {
    let n = arrows.len();
    if n == 0 {
        return QuiverType::Empty;
    }
    // Undirected collapse.
    let adj: Vec<Vec<u64>> = (0..n)
        .map(|i| (0..n).map(|j| arrows[i][j].max(arrows[j][i])).collect())
        .collect();
    let loops: Vec<u64> = (0..n).map(|i| adj[i][i]).collect();
    // Connectivity.
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if j != i && adj[i][j] > 0 && !seen[j] {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    if !seen.iter().all(|&s| s) {
        return QuiverType::Unknown;
    }
    // All off-diagonal multiplicities must be 1 for the recognized types.
    for i in 0..n {
        for j in 0..n {
            if i != j && adj[i][j] > 1 {
                return QuiverType::Unknown;
            }
        }
    }
    let degree: Vec<usize> = (0..n)
        .map(|i| (0..n).filter(|&j| j != i && adj[i][j] > 0).count())
        .collect();
    let edge_count: usize = (0..n)
        .map(|i| (i + 1..n).filter(|&j| adj[i][j] > 0).count())
        .sum();
    let loop_count = loops.iter().filter(|&&l| l > 0).count();
    let is_path = degree.iter().all(|&d| d <= 2) && edge_count == n - 1;
    if loop_count == 0 {
        if is_path {
            return QuiverType::A(n);
        }
        // Tree with a single branch vertex of degree 3.
        if edge_count != n - 1 {
            return QuiverType::Unknown;
        }
        let centers: Vec<usize> = (0..n).filter(|&i| degree[i] == 3).collect();
        if centers.len() != 1 || degree.iter().any(|&d| d > 3) {
            return QuiverType::Unknown;
        }
        let center = centers[0];
        // Branch lengths from the center.
        let mut lens = Vec::new();
        for j in 0..n {
            if j == center || adj[center][j] == 0 {
                continue;
            }
            let mut len = 1;
            let mut prev = center;
            let mut cur = j;
            while let Some(next) =
                (0..n).find(|&k| k != prev && k != cur && adj[cur][k] > 0)
            {
                prev = cur;
                cur = next;
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable();
        return match lens.as_slice() {
            [1, 1, _] => QuiverType::D(n),
            [1, 2, 2] => QuiverType::E6,
            [1, 2, 3] => QuiverType::E7,
            [1, 2, 4] => QuiverType::E8,
            _ => QuiverType::Unknown,
        };
    }
    if loop_count == 1 {
        let v = (0..n).position(|i| loops[i] > 0).unwrap();
        if loops[v] == 1 && degree[v] <= 1 && is_path {
            // The loop must sit at an end of the path.
            return QuiverType::DL(n);
        }
    }
    QuiverType::Unknown
}

/// Deterministic DOT rendering of the quiver (undirected collapse; edge
/// multiplicities above 1 are shown as labels).
pub fn dot_export(q: &McKayQuiver) -> String {
    let mut out = String::from("graph mckay {\n");
    for (i, l) in q.labels.iter().enumerate() {
        out.push_str(&format!("  n{} [label=\"{}({})\"];\n", i, l, q.dims[i]));
    }
    let n = q.labels.len();
    for i in 0..n {
        for j in i..n {
            let w = if i == j {
                q.arrows[i][j]
            } else {
                q.arrows[i][j].max(q.arrows[j][i])
            };
            if w == 0 {
                continue;
            }
            if w == 1 {
                out.push_str(&format!("  n{} -- n{};\n", i, j));
            } else {
                out.push_str(&format!("  n{} -- n{} [label=\"{}\"];\n", i, j, w));
            }
        }
    }
    out.push_str(&format!("  // type: {}\n}}\n", q.kind));
    out
}

/// McKay quiver of a group algebra acting through its 2-dimensional
/// defining representation.
pub fn tautological_quiver(g: &MatGroup) -> Result<McKayQuiver, String> {
    let f = fusion_from_group(g)?;
    let u = tautological_multiplicities(g)?;
    mckay_quiver(&f, &u)
}

/// McKay quiver of the dual of a dihedral group algebra coacting through
/// the two reflection generators (the grading of the anticommutative
/// plane by those reflections).
pub fn dihedral_dual_quiver(n: u64) -> Result<McKayQuiver, String> {
    let dg = MatGroup::dihedral(n);
    let f = fusion_from_dual_group(&dg);
    let mut u = vec![0u64; dg.order()];
    let s = dg.gens[1];
    let rs = dg.mult[dg.gens[0]][s];
    u[s] += 1;
    u[rs] += 1;
    mckay_quiver(&f, &u)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_groups_give_type_a() {
        for n in 3..=8u64 {
            let q = tautological_quiver(&MatGroup::cyclic(n)).unwrap();
            assert_eq!(q.kind, QuiverType::A(n as usize - 1), "n = {}", n);
        }
        let q = tautological_quiver(&MatGroup::cyclic(2)).unwrap();
        assert_eq!(q.kind, QuiverType::A(1));
    }

    #[test]
    fn binary_polyhedral_groups_give_type_e() {
        assert_eq!(
            tautological_quiver(&MatGroup::binary_tetrahedral()).unwrap().kind,
            QuiverType::E6
        );
        assert_eq!(
            tautological_quiver(&MatGroup::binary_octahedral()).unwrap().kind,
            QuiverType::E7
        );
        assert_eq!(
            tautological_quiver(&MatGroup::binary_icosahedral()).unwrap().kind,
            QuiverType::E8
        );
    }

    #[test]
    fn binary_dihedral_groups_give_type_d() {
        for n in 2..=4u64 {
            let q = tautological_quiver(&MatGroup::binary_dihedral(n)).unwrap();
            assert_eq!(q.kind, QuiverType::D(n as usize + 2), "n = {}", n);
        }
    }

    #[test]
    fn dihedral_groups_give_d_or_loop_ended_path() {
        let q = tautological_quiver(&MatGroup::dihedral(4)).unwrap();
        assert_eq!(q.kind, QuiverType::D(4));
        let q = tautological_quiver(&MatGroup::dihedral(5)).unwrap();
        assert_eq!(q.kind, QuiverType::DL(3));
    }

    #[test]
    fn dual_dihedral_reflections_give_type_a() {
        for n in 3..=4u64 {
            let q = dihedral_dual_quiver(n).unwrap();
            assert_eq!(q.kind, QuiverType::A(2 * n as usize - 1), "n = {}", n);
        }
    }

    #[test]
    fn tautological_mckay_matrix_is_symmetric() {
        for g in [
            MatGroup::cyclic(5),
            MatGroup::binary_dihedral(3),
            MatGroup::binary_tetrahedral(),
        ] {
            let q = tautological_quiver(&g).unwrap();
            let n = q.labels.len();
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(q.arrows[i][j], q.arrows[j][i]);
                }
            }
        }
    }

    #[test]
    fn dual_group_fusion_validates_and_dot_is_deterministic() {
        let f = fusion_from_dual_group(&MatGroup::dihedral(3));
        f.validate().unwrap();
        let q = dihedral_dual_quiver(3).unwrap();
        let d1 = dot_export(&q);
        let d2 = dot_export(&dihedral_dual_quiver(3).unwrap());
        assert_eq!(d1, d2);
        assert!(d1.contains("graph mckay"));
        assert!(d1.contains("type: A_5"));
    }

    #[test]
    fn fusion_rejects_oversized_modules() {
        let f = fusion_from_group(&MatGroup::cyclic(3)).unwrap();
        // Three 1-dimensional simples has total dimension 3 ≠ 2.
        assert!(mckay_quiver(&f, &[1, 1, 1]).is_err());
    }
}
