use crate::error::Result;
use crate::groebner::QuotientRing;
use crate::homalg::linalg::{rank, Matrix};
use crate::polyring::{Field, Poly};

/// A minimal homogeneous generating set of `I = (gens)` in `R`, chosen by
/// graded Nakayama: in ascending degree (stable within a degree) a generator
/// is kept iff it is not in the span of the kept ones times `R`.
pub fn minimalize_ideal_generators<F: Field>(ring: &QuotientRing<F>, gens: &[Poly<F>]) -> Result<Vec<Poly<F>>> {
    let r = ring.ring();
    let field = ring.field();
    let mut with_deg: Vec<(i64, Poly<F>)> = Vec::new();
    for g in gens {
        let nf = ring.normal_form(g);
        if let Some(d) = r.require_homogeneous(&nf)? {
            with_deg.push((d, nf));
        }
    }
    with_deg.sort_by_key(|(d, _)| *d);
    let mut kept: Vec<(i64, Poly<F>)> = Vec::new();
    for (d, g) in with_deg {
        let dim = ring.dim(d);
        let mut cols: Vec<Vec<F::Elem>> = Vec::new();
        for (e, k) in &kept {
            for m in &ring.std_monomials(d - e).monomials {
                let p = ring.normal_form(&r.mul_term(k, m, &field.one()));
                cols.push(ring.coords(&p, d));
            }
        }
        let before = if cols.is_empty() { 0 } else { rank(field, &Matrix::from_columns(&cols, dim, field.zero())) };
        cols.push(ring.coords(&g, d));
        let after = rank(field, &Matrix::from_columns(&cols, dim, field.zero()));
        if after > before {
            kept.push((d, g));
        }
    }
    Ok(kept.into_iter().map(|(_, g)| g).collect())
}
