use crate::error::Result;
use crate::field::DenseMatrix;
use crate::poly::{PolyMatrix, Polynomial};

use super::free::{cone, piece_basis, piece_matrix, FreeComplex};
use super::vector::{induced_rank, VecComplex};

/// Check exactness of the long exact sequence
/// … → H^n(X) →r H^n(X⟨d⟩) → H^n(X//r) → H^{n+1}(X) →r … 
/// in every internal degree of `box_` (inclusive bounds), by rank-nullity
/// bookkeeping of the induced maps.
pub fn koszul_les_check(x: &FreeComplex, r: &Polynomial, box_: (i64, i64)) -> Result<bool> {
    let f = x.multiplication_map(r)?;
    let xt = &f.target;
    let c = cone(&f)?;
    let ring = x.ring();
    let bounds: Vec<(i64, i64)> = [x.range(), c.range()].into_iter().flatten().collect();
    let Some(lo) = bounds.iter().map(|b| b.0).min() else {
        return Ok(true);
    };
    let hi = bounds.iter().map(|b| b.1).max().expect("nonempty");
    for deg in box_.0..=box_.1 {
        let px = x.graded_piece(deg);
        let pt = xt.graded_piece(deg);
        let pc = c.graded_piece(deg);
        // cochain maps on this piece
        let fm = |n: i64| -> DenseMatrix {
            let m = f
                .maps
                .get(&n)
                .cloned()
                .unwrap_or_else(|| PolyMatrix::zeros(ring, xt.rank(n), x.rank(n)));
            piece_matrix(
                &m,
                &piece_basis(ring, x.shifts(n), deg),
                &piece_basis(ring, xt.shifts(n), deg),
            )
        };
        let incl = |n: i64| -> DenseMatrix {
            let (a, b) = (pt.dim(n), pc.dim(n));
            let mut m = DenseMatrix::zeros(ring.field(), b, a);
            for i in 0..a {
                m[(i, i)] = ring.field().one();
            }
            m
        };
        let proj = |n: i64| -> DenseMatrix {
            let (a, b) = (pt.dim(n), pc.dim(n));
            let t = px.dim(n + 1);
            let mut m = DenseMatrix::zeros(ring.field(), t, b);
            for i in 0..t {
                m[(i, a + i)] = ring.field().one();
            }
            m
        };
        for n in lo - 1..=hi + 1 {
            let hf = induced_rank(&px, &pt, n, &fm(n));
            let hi_ = induced_rank(&pt, &pc, n, &incl(n));
            let hp = induced_rank_shifted(&pc, &px, n, &proj(n));
            let hf1 = induced_rank(&px, &pt, n + 1, &fm(n + 1));
            // exactness at H^n(X⟨d⟩), H^n(C), H^{n+1}(X)
            if hf + hi_ != pt.cohomology_dim(n)
                || hi_ + hp != pc.cohomology_dim(n)
                || hp + hf1 != px.cohomology_dim(n + 1)
            {
                return Ok(false);
            }
            // consecutive composites vanish in cohomology
            let gf = incl(n).mul(&fm(n)).expect("shapes");
            let fp = fm(n + 1).mul(&proj(n)).expect("shapes");
            if induced_rank(&px, &pc, n, &gf) != 0 || induced_rank_shifted(&pc, &pt, n, &fp) != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Rank of H^n(a) → H^{n+1}(b) induced by `f: a^n → b^{n+1}`.
fn induced_rank_shifted(a: &VecComplex, b: &VecComplex, n: i64, f: &DenseMatrix) -> usize {
    let shifted = VecComplex {
        field: b.field,
        lo: b.lo - 1,
        dims: b.dims.clone(),
        diffs: b.diffs.clone(),
    };
    induced_rank(a, &shifted, n, f)
}
