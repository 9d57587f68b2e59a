use super::linalg::{independent_prefix_columns, is_zero, kernel, mul, Matrix};
use super::module::{GradedFreeModule, GradedMap};
use crate::error::{Error, Result};
use crate::groebner::QuotientRing;
use crate::polyring::{Field, Poly};

/// A homogeneous element of a graded free module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousElement<F: Field> {
    pub degree: i64,
    pub coords: Vec<Poly<F>>,
}

/// A minimal homogeneous generating set of `ker(d_out) / im(d_in)`, read
/// degree by degree over `degrees` (ascending).
///
/// In degree `j` the part already generated is
/// `U_j = B_j + Σ_v x_v Z_{j - w_v}`, and the new generators are the cycle
/// basis vectors independent of `U_j`.
pub fn minimal_generators<F: Field>(
    ring: &QuotientRing<F>,
    module: &GradedFreeModule,
    d_in: Option<&GradedMap<F>>,
    d_out: Option<&GradedMap<F>>,
    degrees: impl IntoIterator<Item = i64>,
) -> Result<Vec<HomogeneousElement<F>>> {
    let field = ring.field();
    let r = ring.ring();
    let weights = r.spec().weights.clone();
    let mut cycles: std::collections::HashMap<i64, Vec<Vec<F::Elem>>> = Default::default();
    let mut out = Vec::new();
    for j in degrees {
        let dim = module.dim(ring, j);
        let z: Vec<Vec<F::Elem>> = match d_out {
            Some(d) => kernel(field, &d.matrix_at_degree(ring, j)),
            None => (0..dim)
                .map(|k| {
                    let mut v = vec![field.zero(); dim];
                    v[k] = field.one();
                    v
                })
                .collect(),
        };
        let mut u: Vec<Vec<F::Elem>> = Vec::new();
        if let Some(b) = d_in {
            let m = b.matrix_at_degree(ring, j);
            if let Some(d) = d_out {
                let dm = d.matrix_at_degree(ring, j);
                if m.ncols > 0 && dm.nrows > 0 && !is_zero(field, &mul(field, &dm, &m)) {
                    return Err(Error::BoundariesNotCycles(j));
                }
            }
            u.extend((0..m.ncols).map(|c| m.column(c)));
        }
        for (v, &w) in weights.iter().enumerate() {
            let prev = j - w as i64;
            let Some(zs) = cycles.get(&prev) else { continue };
            for zc in zs {
                let polys = module.from_coords(ring, zc, prev);
                let shifted: Vec<Poly<F>> =
                    polys.iter().map(|p| ring.normal_form(&r.mul(p, &r.var(v)))).collect();
                u.push(module.coords(ring, &shifted, j));
            }
        }
        let nu = u.len();
        let mut all = u;
        all.extend(z.iter().cloned());
        for k in independent_prefix_columns(field, &all, dim) {
            if k >= nu {
                out.push(HomogeneousElement {
                    degree: j,
                    coords: module.from_coords(ring, &all[k], j),
                });
            }
        }
        cycles.insert(j, z);
    }
    Ok(out)
}

/// Checks that the columns of `elements` lie in `ker(d)`.
pub fn are_cycles<F: Field>(ring: &QuotientRing<F>, d: &GradedMap<F>, elements: &[Vec<Poly<F>>]) -> Option<usize> {
    elements.iter().position(|v| d.apply(ring, v).iter().any(|p| !p.is_zero()))
}

/// Dimension of the span of homogeneous elements of degree `j`.
pub fn span_dim<F: Field>(
    ring: &QuotientRing<F>,
    module: &GradedFreeModule,
    elements: &[Vec<Poly<F>>],
    j: i64,
) -> usize {
    let dim = module.dim(ring, j);
    let cols: Vec<_> = elements.iter().map(|v| module.coords(ring, v, j)).collect();
    if cols.is_empty() {
        return 0;
    }
    super::linalg::rank(ring.field(), &Matrix::from_columns(&cols, dim, ring.field().zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{PolyRing, PolyRingSpec, PrimeField};

    #[test]
    fn generators_of_a_free_module() {
        let r = PolyRing::new(PolyRingSpec::new(&["x", "y"]).unwrap(), PrimeField::new(32003).unwrap());
        let q = QuotientRing::new(r.clone(), &[r.parse("x^2").unwrap(), r.parse("y^2").unwrap()]).unwrap();
        let m = GradedFreeModule::new(vec![0, 1]);
        let gens = minimal_generators(&q, &m, None, None, 0..=3).unwrap();
        assert_eq!(gens.iter().map(|g| g.degree).collect::<Vec<_>>(), vec![0, 1]);
    }

    #[test]
    fn generators_of_a_kernel() {
        // ker(x, y): R(-1)^2 -> R over k[x,y] is generated by the Koszul relation
        let r = PolyRing::new(PolyRingSpec::new(&["x", "y"]).unwrap(), PrimeField::new(32003).unwrap());
        let q = QuotientRing::new(r.clone(), &[]).unwrap();
        let src = GradedFreeModule::new(vec![1, 1]);
        let d = GradedMap::new(&q, src.clone(), GradedFreeModule::new(vec![0]), vec![vec![r.var(0), r.var(1)]])
            .unwrap();
        let gens = minimal_generators(&q, &src, None, Some(&d), 0..=4).unwrap();
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0].degree, 2);
        assert_eq!(are_cycles(&q, &d, &[gens[0].coords.clone()]), None);
        assert_eq!(span_dim(&q, &src, &[gens[0].coords.clone()], 2), 1);
    }
}
