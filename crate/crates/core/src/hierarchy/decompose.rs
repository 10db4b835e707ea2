use serde::{Deserialize, Serialize};

use super::conjugate_pair_of;
use crate::arith::{Qudit, ScaledMatrix};
use crate::clifford::{
    clifford_from_matrix, m_gate, m_index_for_direction, mdp_normal_form, AffineSymplectic, CliffordGate,
    MDPForm,
};
use crate::diagonal::{build_diagonal, coset_split, from_values, solve_conjugation_diagonal, shift_power};
use crate::diagonal::{DiagonalGate, RankKPolynomial};
use crate::error::{Error, Result};
use crate::pauli::{line_through, pauli_decompose, LineFit, PhasePoint};

/// `G = C_1·D·C_2` with `C_1 ∈ 𝓜`, `D` diagonal and `C_2` Clifford.
#[derive(Clone, Debug)]
pub struct SemiCliffordDecomposition {
    pub m: Option<u32>,
    pub c1: CliffordGate,
    pub d: DiagonalGate,
    pub c2: CliffordGate,
}

impl SemiCliffordDecomposition {
    pub fn to_matrix(&self) -> ScaledMatrix {
        &(&self.c1.matrix * &self.d.matrix) * &self.c2.matrix
    }
}

/// `G = M·D·C` with `D` a nontrivial canonical coset representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MDCForm {
    pub m: Option<u32>,
    pub d: RankKPolynomial,
    pub c: AffineSymplectic,
}

impl MDCForm {
    /// A representative of the phase class.
    pub fn to_matrix(&self, qd: &Qudit) -> Result<ScaledMatrix> {
        let dg = build_diagonal(qd, &self.d)?;
        let c = CliffordGate::from_affine(qd, self.c)?;
        Ok(&(&m_gate(qd, self.m) * &dg.matrix) * &c.matrix)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "lowercase")]
pub enum NormalForm {
    Clifford { mdp: MDPForm, affine: AffineSymplectic },
    Mdc(MDCForm),
}

/// Direction shared by the supports of the conjugate pair, `None` when both
/// are singletons.
fn pair_direction(g: &ScaledMatrix) -> Result<Option<PhasePoint>> {
    let d = g.qudit().d();
    let pair = conjugate_pair_of(g)?;
    let fit = |m: &ScaledMatrix| -> Result<LineFit> { Ok(line_through(&pauli_decompose(m)?.support(), d)) };
    let (fu, fv) = (fit(&pair.u)?, fit(&pair.v)?);
    let bad = |what: &str| Error::NotSemiClifford(format!("support of {what} is not on a line"));
    match (fu, fv) {
        (LineFit::Underdetermined(_), LineFit::Underdetermined(_)) => Ok(None),
        (LineFit::Underdetermined(_), LineFit::Line(l)) | (LineFit::Line(l), LineFit::Underdetermined(_)) => {
            Ok(Some(l.direction))
        }
        (LineFit::Line(a), LineFit::Line(b)) if a.is_parallel(&b) => Ok(Some(a.direction)),
        (LineFit::Line(_), LineFit::Line(_)) => {
            Err(Error::NotSemiClifford("supports lie on non-parallel lines".into()))
        }
        (LineFit::NotCollinear | LineFit::Empty, _) => Err(bad("GZG†")),
        (_, _) => Err(bad("GXG†")),
    }
}

/// Writes `A = D'·X^q` when `A` is a diagonal times a shift.
fn split_shift(a: &ScaledMatrix) -> Option<(ScaledMatrix, u32)> {
    let qd = a.qudit();
    let d = qd.d() as usize;
    let images = a.monomial_pattern()?;
    let q = images[0];
    if (0..d).any(|j| images[j] != (j + q) % d) {
        return None;
    }
    let dprime = a.try_mul(&shift_power(qd, -(q as i64))).ok()?;
    Some((dprime, q as u32))
}

/// Multiplies a diagonal by the scalar that makes its determinant 1.
fn unit_determinant(dm: &ScaledMatrix) -> Result<ScaledMatrix> {
    let qd = dm.qudit();
    let d = qd.d();
    let mut det = qd.one();
    for z in 0..d as usize {
        det = &det * dm.get(z, z);
    }
    let e = det
        .root_of_unity_exponent()
        .ok_or_else(|| Error::InvalidDecomposition("determinant is not a root of unity".into()))?;
    if e % d != 0 {
        return Err(Error::InvalidDecomposition("determinant has no d-th root in the field".into()));
    }
    Ok(dm.mul_root(-((e / d) as i64)))
}

/// Semi-Clifford decomposition of a hierarchy gate.
///
/// Both conjugate-pair supports lie on lines of a common direction. `M ∈ 𝓜`
/// rotates that direction to the horizontal, after which `M†G` conjugates
/// `Z` or `X` to some `D'X^q` with `q ≠ 0`; solving `D' = D X^q D† X^{−q}`
/// recovers the diagonal, and the remainder `D†M†G` is Clifford.
pub fn semi_clifford_decompose(g: &ScaledMatrix) -> Result<SemiCliffordDecomposition> {
    let qd = g.qudit();
    let d = qd.d() as usize;
    let Some(dir) = pair_direction(g)? else {
        let c2 = clifford_from_matrix(g)?;
        let c1 = clifford_from_matrix(&ScaledMatrix::identity(qd, d))?;
        let dg = build_diagonal(qd, &RankKPolynomial::zero(qd.d()))?;
        return Ok(SemiCliffordDecomposition { m: None, c1, d: dg, c2 });
    };
    let m = m_index_for_direction(qd, dir);
    let mm = m_gate(qd, m);
    let rest = mm.adjoint().try_mul(g)?;
    let pair = conjugate_pair_of(&rest)?;
    let not_horizontal = || Error::NotSemiClifford("rotated pair is not diagonal times shift".into());
    let (du, qu) = split_shift(&pair.u).ok_or_else(not_horizontal)?;
    let (dv, qv) = split_shift(&pair.v).ok_or_else(not_horizontal)?;
    let (dprime, q) = if qu != 0 { (du, qu) } else { (dv, qv) };
    if q == 0 {
        return Err(Error::InvalidDecomposition("both shifts vanish".into()));
    }
    let dmat = solve_conjugation_diagonal(&unit_determinant(&dprime)?, q as i64)?;
    let values: Vec<_> = (0..d).map(|z| dmat.get(z, z).clone()).collect();
    let poly = from_values(qd, &values)?;
    let c = dmat.adjoint().try_mul(&rest)?;
    let c2 = clifford_from_matrix(&c).map_err(|_| Error::InvalidDecomposition("remainder is not Clifford".into()))?;
    let c1 = clifford_from_matrix(&mm)?;
    let out = SemiCliffordDecomposition { m, c1, d: DiagonalGate { poly, matrix: dmat }, c2 };
    if !out.to_matrix().same_phase_class(g) {
        return Err(Error::InvalidDecomposition("reconstruction differs from the input".into()));
    }
    Ok(out)
}

/// The Clifford normal form for `G ∈ C_2`, the `M·D·C` form otherwise.
pub fn mdc_normal_form(g: &ScaledMatrix, k: u32) -> Result<NormalForm> {
    let qd = g.qudit();
    let dec = semi_clifford_decompose(g)?;
    if dec.d.poly.level() <= 2 {
        // D is Clifford, so G is
        let c = clifford_from_matrix(g)?;
        return Ok(NormalForm::Clifford { mdp: mdp_normal_form(&c)?, affine: c.affine });
    }
    let (rep, delta) = coset_split(&dec.d.poly, k)?;
    // G = M·D_rep·(D_δ·C)
    let dd = build_diagonal(qd, &delta)?;
    let c = clifford_from_matrix(&dd.matrix.try_mul(&dec.c2.matrix)?)?;
    Ok(NormalForm::Mdc(MDCForm { m: dec.m, d: rep.reduced(), c: c.affine }))
}

impl NormalForm {
    pub fn to_matrix(&self, qd: &Qudit) -> Result<ScaledMatrix> {
        match self {
            NormalForm::Clifford { affine, .. } => Ok(CliffordGate::from_affine(qd, *affine)?.matrix),
            NormalForm::Mdc(f) => f.to_matrix(qd),
        }
    }

    pub fn is_clifford(&self) -> bool {
        matches!(self, NormalForm::Clifford { .. })
    }
}
