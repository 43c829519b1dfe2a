//! Contact (+1)/(-1)-surgery presentations and the classical invariants of
//! Legendrian links sitting in the surgered manifold.
//!
//! A diagram is a list of Legendrian unknot-or-otherwise surgery knots, each
//! carrying (tb, rot, sign) with sign the contact framing shift, plus a
//! symmetric off-diagonal linking grid. The generalized linking matrix M has
//! diagonal tb_j + sign_j. A link component L in the complement carries its
//! own (tb, rot) and its linking numbers with the surgery knots.
//!
//! For a component L the rational invariants are
//!   tb_Q(L)  = tb(L) + det(M_L) / det(M),
//!   rot_Q(L) = rot(L) - <rot_vec, M^{-1} lk>,
//! where M_L borders M by a zero corner and the linking vector of L. The
//! d3 invariant of the surgered contact manifold is
//!   d3 = (c^2 - 3*sigma - 2*chi)/4 + q,
//! with M x = rot_vec, c^2 = <x, rot_vec>, sigma the signature of M,
//! chi = 1 + n, and q the number of (+1)-surgeries. All of it requires
//! det(M) != 0, i.e. a rational homology sphere.

#![allow(clippy::needless_range_loop)]

use crate::linalg::{self, Int, IntMatrix, LinalgError, Rat};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("surgery coefficient sign must be +1 or -1, got {0}")]
    BadSign(i64),
    #[error("linking grid must be a symmetric {expected}x{expected} grid")]
    BadLinkingGrid { expected: usize },
    #[error("component links {got} knots but the diagram has {expected}")]
    BadLinksLength { expected: usize, got: usize },
    #[error("surgered manifold is not a rational homology sphere (det M = 0)")]
    NotRationalHomologySphere,
}

impl From<LinalgError> for DiagramError {
    fn from(e: LinalgError) -> Self {
        match e {
            LinalgError::Singular => DiagramError::NotRationalHomologySphere,
            // Linking matrices are symmetric by construction.
            LinalgError::NotSymmetric => unreachable!("linking matrix is symmetric"),
        }
    }
}

/// One surgery knot: Thurston-Bennequin number, rotation number, and the
/// contact surgery sign (+1 or -1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurgeryKnot {
    pub tb: i64,
    pub rot: i64,
    pub sign: i64,
}

impl SurgeryKnot {
    pub fn new(tb: i64, rot: i64, sign: i64) -> Self {
        SurgeryKnot { tb, rot, sign }
    }
}

/// A link component in the surgered manifold: classical invariants plus the
/// linking numbers with each surgery knot, in diagram order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkComponent {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub tb: i64,
    pub rot: i64,
    pub links: Vec<i64>,
}

impl LinkComponent {
    pub fn new(tb: i64, rot: i64, links: Vec<i64>) -> Self {
        LinkComponent {
            name: None,
            tb,
            rot,
            links,
        }
    }

    pub fn named(name: &str, tb: i64, rot: i64, links: Vec<i64>) -> Self {
        LinkComponent {
            name: Some(name.to_string()),
            tb,
            rot,
            links,
        }
    }
}

/// A validated surgery presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurgeryDiagram {
    knots: Vec<SurgeryKnot>,
    offdiag: Vec<Vec<i64>>,
}

impl SurgeryDiagram {
    /// Validates signs and the linking grid. The grid must be n x n and
    /// symmetric; its diagonal is ignored and stored as zero.
    pub fn new(knots: Vec<SurgeryKnot>, offdiag: Vec<Vec<i64>>) -> Result<Self, DiagramError> {
        let n = knots.len();
        for k in &knots {
            if k.sign != 1 && k.sign != -1 {
                return Err(DiagramError::BadSign(k.sign));
            }
        }
        if offdiag.len() != n || offdiag.iter().any(|row| row.len() != n) {
            return Err(DiagramError::BadLinkingGrid { expected: n });
        }
        for i in 0..n {
            for j in i + 1..n {
                if offdiag[i][j] != offdiag[j][i] {
                    return Err(DiagramError::BadLinkingGrid { expected: n });
                }
            }
        }
        let mut offdiag = offdiag;
        for (i, row) in offdiag.iter_mut().enumerate() {
            row[i] = 0;
        }
        Ok(SurgeryDiagram { knots, offdiag })
    }

    /// The empty presentation of the standard tight S^3.
    pub fn empty() -> Self {
        SurgeryDiagram {
            knots: Vec::new(),
            offdiag: Vec::new(),
        }
    }

    pub fn knots(&self) -> &[SurgeryKnot] {
        &self.knots
    }

    pub fn offdiag(&self) -> &[Vec<i64>] {
        &self.offdiag
    }

    pub fn len(&self) -> usize {
        self.knots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.knots.is_empty()
    }

    /// The generalized linking matrix: diagonal tb_j + sign_j, off-diagonal
    /// linking numbers. Empty diagram gives the 0x0 matrix.
    pub fn linking_matrix(&self) -> IntMatrix {
        let n = self.len();
        let mut m = IntMatrix::zero(n);
        for i in 0..n {
            m.set(i, i, Int::from(self.knots[i].tb + self.knots[i].sign));
            for j in 0..n {
                if i != j {
                    m.set(i, j, Int::from(self.offdiag[i][j]));
                }
            }
        }
        m
    }

    /// Borders the linking matrix with the linking vector of a component:
    /// a zero corner in the new first row and column, then lk(L, K_j).
    pub fn extended_matrix(&self, component: &LinkComponent) -> Result<IntMatrix, DiagramError> {
        let n = self.len();
        if component.links.len() != n {
            return Err(DiagramError::BadLinksLength {
                expected: n,
                got: component.links.len(),
            });
        }
        let m = self.linking_matrix();
        let mut ext = IntMatrix::zero(n + 1);
        for (j, lk) in component.links.iter().enumerate() {
            ext.set(0, j + 1, Int::from(*lk));
            ext.set(j + 1, 0, Int::from(*lk));
        }
        for i in 0..n {
            for j in 0..n {
                ext.set(i + 1, j + 1, m.get(i, j).clone());
            }
        }
        Ok(ext)
    }

    /// Order of the first homology of the surgered manifold, |det M|;
    /// 1 for the empty diagram. Errors when det M = 0.
    pub fn homology_order(&self) -> Result<Int, DiagramError> {
        let d = linalg::det(&self.linking_matrix());
        if d.is_zero() {
            return Err(DiagramError::NotRationalHomologySphere);
        }
        Ok(d.abs())
    }

    /// Rational Thurston-Bennequin invariant of a component.
    pub fn tb_rational(&self, component: &LinkComponent) -> Result<Rat, DiagramError> {
        let ext = self.extended_matrix(component)?;
        let d = linalg::det(&self.linking_matrix());
        if d.is_zero() {
            return Err(DiagramError::NotRationalHomologySphere);
        }
        Ok(Rat::from_integer(Int::from(component.tb)) + Rat::new(linalg::det(&ext), d))
    }

    /// Rational rotation number of a component.
    pub fn rot_rational(&self, component: &LinkComponent) -> Result<Rat, DiagramError> {
        let n = self.len();
        if component.links.len() != n {
            return Err(DiagramError::BadLinksLength {
                expected: n,
                got: component.links.len(),
            });
        }
        let m = self.linking_matrix();
        let lk: Vec<Rat> = component
            .links
            .iter()
            .map(|&v| Rat::from_integer(Int::from(v)))
            .collect();
        let x = linalg::solve(&m, &lk)?;
        let mut pairing = Rat::zero();
        for (knot, xi) in self.knots.iter().zip(&x) {
            pairing += Rat::from_integer(Int::from(knot.rot)) * xi;
        }
        Ok(Rat::from_integer(Int::from(component.rot)) - pairing)
    }

    /// The d3 invariant of the surgered contact manifold, with its terms.
    pub fn d3_invariant(&self) -> Result<D3Breakdown, DiagramError> {
        let m = self.linking_matrix();
        if self.is_empty() {
            return Ok(D3Breakdown {
                c_squared: Rat::zero(),
                sigma: 0,
                chi: 1,
                q: 0,
                d3: -Rat::new(Int::one(), Int::from(2)),
            });
        }
        let rot: Vec<Rat> = self
            .knots
            .iter()
            .map(|k| Rat::from_integer(Int::from(k.rot)))
            .collect();
        let x = linalg::solve(&m, &rot)?;
        let mut c_squared = Rat::zero();
        for (xi, ri) in x.iter().zip(&rot) {
            c_squared += xi * ri;
        }
        let sigma = linalg::signature(&m)?;
        let chi = 1 + self.len() as i64;
        let q = self.knots.iter().filter(|k| k.sign == 1).count() as i64;
        let d3 = (&c_squared
            - Rat::from_integer(Int::from(3 * sigma))
            - Rat::from_integer(Int::from(2 * chi)))
            / Rat::from_integer(Int::from(4))
            + Rat::from_integer(Int::from(q));
        Ok(D3Breakdown {
            c_squared,
            sigma,
            chi,
            q,
            d3,
        })
    }
}

/// The d3 computation split into its terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct D3Breakdown {
    pub c_squared: Rat,
    pub sigma: i64,
    pub chi: i64,
    pub q: i64,
    pub d3: Rat,
}

/// Incremental construction of a diagram, used by the family builders.
#[derive(Debug, Default, Clone)]
pub struct DiagramBuilder {
    knots: Vec<SurgeryKnot>,
    offdiag: Vec<Vec<i64>>,
}

impl DiagramBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a knot and returns its index.
    pub fn add_knot(&mut self, tb: i64, rot: i64, sign: i64) -> usize {
        let idx = self.knots.len();
        self.knots.push(SurgeryKnot::new(tb, rot, sign));
        for row in &mut self.offdiag {
            row.push(0);
        }
        self.offdiag.push(vec![0; idx + 1]);
        idx
    }

    /// Sets lk(K_i, K_j) symmetrically.
    pub fn set_link(&mut self, i: usize, j: usize, lk: i64) {
        assert_ne!(i, j, "diagonal linking entries are not stored");
        self.offdiag[i][j] = lk;
        self.offdiag[j][i] = lk;
    }

    pub fn build(self) -> SurgeryDiagram {
        SurgeryDiagram::new(self.knots, self.offdiag).expect("builder output is validated")
    }
}

/// On-disk form of a diagram plus the components of interest. JSON with all
/// integer entries; the linking grid is given in full and must be symmetric,
/// its diagonal is ignored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramFile {
    pub knots: Vec<SurgeryKnot>,
    pub offdiag: Vec<Vec<i64>>,
    pub components: Vec<LinkComponent>,
}

impl DiagramFile {
    /// Parses and validates the JSON form.
    pub fn from_json(text: &str) -> Result<Self, String> {
        let file: DiagramFile =
            serde_json::from_str(text).map_err(|e| format!("invalid diagram JSON: {e}"))?;
        let diagram = file.diagram().map_err(|e| e.to_string())?;
        for c in &file.components {
            if c.links.len() != diagram.len() {
                return Err(DiagramError::BadLinksLength {
                    expected: diagram.len(),
                    got: c.links.len(),
                }
                .to_string());
            }
        }
        Ok(file)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("diagram serialization cannot fail")
    }

    pub fn diagram(&self) -> Result<SurgeryDiagram, DiagramError> {
        SurgeryDiagram::new(self.knots.clone(), self.offdiag.clone())
    }
}
