//! Atlas of Legendrian Hopf links in L(p,1).
//!
//! For the oriented Hopf link L0 u L1 in L(p,1) with rational
//! Thurston-Bennequin invariants t_i + 1/p, this module lists every
//! Legendrian realization: the rational rotation numbers of both components,
//! the d3 invariant of the ambient contact structure, whether that ambient
//! structure is tight, and which components are loose. The lists are grouped
//! into cases by the signs of (t0, t1); their lengths agree with the
//! tight-count of the separating thickened torus computed in [`crate::slopes`].

use crate::linalg::{rat, rat_int, Rat};
use crate::slopes::{self, SlopeError};
use num_bigint::BigInt;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AtlasError {
    #[error("lens space order p must be at least 2, got {0}")]
    UnsupportedOrder(i64),
    #[error(transparent)]
    Slope(#[from] SlopeError),
}

/// Case label by the signs of the framing pair (t0, t1), up to swapping the
/// two components. The two e-cases are distinguished by whether the positive
/// side sits at t = 1 or at t > 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseTag {
    A,
    B,
    C1,
    C2,
    C3,
    D1,
    D2,
    D3,
    ET1Eq1,
    ET1Gt1,
}

impl CaseTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::A => "a",
            CaseTag::B => "b",
            CaseTag::C1 => "c1",
            CaseTag::C2 => "c2",
            CaseTag::C3 => "c3",
            CaseTag::D1 => "d1",
            CaseTag::D2 => "d2",
            CaseTag::D3 => "d3",
            CaseTag::ET1Eq1 => "e_t1eq1",
            CaseTag::ET1Gt1 => "e_t1gt1",
        }
    }

    pub fn all() -> [CaseTag; 10] {
        [
            CaseTag::A,
            CaseTag::B,
            CaseTag::C1,
            CaseTag::C2,
            CaseTag::C3,
            CaseTag::D1,
            CaseTag::D2,
            CaseTag::D3,
            CaseTag::ET1Eq1,
            CaseTag::ET1Gt1,
        ]
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CaseTag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "a" => Ok(CaseTag::A),
            "b" => Ok(CaseTag::B),
            "c1" => Ok(CaseTag::C1),
            "c2" => Ok(CaseTag::C2),
            "c3" => Ok(CaseTag::C3),
            "d1" => Ok(CaseTag::D1),
            "d2" => Ok(CaseTag::D2),
            "d3" => Ok(CaseTag::D3),
            "e1" | "e_t1eq1" => Ok(CaseTag::ET1Eq1),
            "e2" | "e_t1gt1" => Ok(CaseTag::ET1Gt1),
            other => Err(format!("unknown case tag '{other}'")),
        }
    }
}

/// Tightness of the ambient contact structure on L(p,1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ambient {
    Tight,
    Overtwisted,
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ambient::Tight => "tight",
            Ambient::Overtwisted => "overtwisted",
        })
    }
}

/// One Legendrian realization of the Hopf link with framing pair (t0, t1).
///
/// tbq_i = t_i + 1/p always. The optional integers r, r0, r1 record the
/// discrete parameters the realization came from, when the case has them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    pub case_tag: CaseTag,
    pub p: i64,
    pub t0: i64,
    pub t1: i64,
    pub tbq0: Rat,
    pub rotq0: Rat,
    pub tbq1: Rat,
    pub rotq1: Rat,
    pub d3: Rat,
    pub ambient: Ambient,
    pub loose0: bool,
    pub loose1: bool,
    pub r: Option<i64>,
    pub r0: Option<i64>,
    pub r1: Option<i64>,
}

impl Realization {
    /// The comparable invariant tuple (tbq0, rotq0, tbq1, rotq1, d3).
    pub fn tuple(&self) -> (Rat, Rat, Rat, Rat, Rat) {
        (
            self.tbq0.clone(),
            self.rotq0.clone(),
            self.tbq1.clone(),
            self.rotq1.clone(),
            self.d3.clone(),
        )
    }

    fn swapped(self) -> Realization {
        Realization {
            t0: self.t1,
            t1: self.t0,
            tbq0: self.tbq1,
            rotq0: self.rotq1,
            tbq1: self.tbq0,
            rotq1: self.rotq0,
            loose0: self.loose1,
            loose1: self.loose0,
            r0: self.r1,
            r1: self.r0,
            ..self
        }
    }
}

/// Inclusive step-2 integer range; empty when lo > hi.
pub(crate) fn step2(lo: i64, hi: i64) -> impl Iterator<Item = i64> {
    (lo..=hi).step_by(2)
}

/// Case of the pair (t0, t1) without swapping components, if it is in
/// canonical orientation.
fn case_of(t0: i64, t1: i64) -> Option<CaseTag> {
    if t0 < 0 && t1 < 0 {
        Some(CaseTag::A)
    } else if t0 == 0 && t1 <= 0 {
        Some(CaseTag::B)
    } else if t0 == 0 && t1 == 1 {
        Some(CaseTag::C1)
    } else if t0 == 0 && t1 == 2 {
        Some(CaseTag::C2)
    } else if t0 == 0 && t1 >= 3 {
        Some(CaseTag::C3)
    } else if t0 == 1 && t1 == 1 {
        Some(CaseTag::D1)
    } else if t0 == 1 && t1 >= 2 {
        Some(CaseTag::D2)
    } else if t0 >= 2 && t1 >= 2 {
        Some(CaseTag::D3)
    } else if t0 < 0 && t1 == 1 {
        Some(CaseTag::ET1Eq1)
    } else if t0 < 0 && t1 >= 2 {
        Some(CaseTag::ET1Gt1)
    } else {
        None
    }
}

/// The case of (t0, t1) together with whether the components had to be
/// swapped to reach canonical orientation.
pub fn case_and_orientation(t0: i64, t1: i64) -> (CaseTag, bool) {
    if let Some(tag) = case_of(t0, t1) {
        (tag, false)
    } else {
        let tag = case_of(t1, t0).expect("every framing pair lies in some case");
        (tag, true)
    }
}

struct Emitter {
    tag: CaseTag,
    p: i64,
    t0: i64,
    t1: i64,
    ambient: Ambient,
    loose0: bool,
    loose1: bool,
    out: Vec<Realization>,
}

impl Emitter {
    fn tbq(&self, t: i64) -> Rat {
        rat_int(t) + rat(1, self.p)
    }

    fn push(
        &mut self,
        rotq0: Rat,
        rotq1: Rat,
        d3: Rat,
        r: Option<i64>,
        r0: Option<i64>,
        r1: Option<i64>,
    ) {
        self.out.push(Realization {
            case_tag: self.tag,
            p: self.p,
            t0: self.t0,
            t1: self.t1,
            tbq0: self.tbq(self.t0),
            rotq0,
            tbq1: self.tbq(self.t1),
            rotq1,
            d3,
            ambient: self.ambient,
            loose0: self.loose0,
            loose1: self.loose1,
            r,
            r0,
            r1,
        });
    }
}

/// Lists all Legendrian realizations of the Hopf link in L(p,1) whose
/// components have framings t0 and t1. Requires p >= 2. The output order is
/// deterministic; its length equals [`slopes::closed_form_count`].
pub fn classify(p: i64, t0: i64, t1: i64) -> Result<Vec<Realization>, AtlasError> {
    if p < 2 {
        return Err(AtlasError::UnsupportedOrder(p));
    }
    let (tag, swap) = case_and_orientation(t0, t1);
    let (c0, c1) = if swap { (t1, t0) } else { (t0, t1) };
    let (ambient, loose0, loose1) = match tag {
        CaseTag::A => (Ambient::Tight, false, false),
        CaseTag::B => (Ambient::Overtwisted, false, true),
        CaseTag::C1 | CaseTag::C2 | CaseTag::C3 | CaseTag::D1 | CaseTag::D2 | CaseTag::D3 => {
            (Ambient::Overtwisted, true, true)
        }
        CaseTag::ET1Eq1 | CaseTag::ET1Gt1 => (Ambient::Overtwisted, true, false),
    };
    let mut em = Emitter {
        tag,
        p,
        t0: c0,
        t1: c1,
        ambient,
        loose0,
        loose1,
        out: Vec::new(),
    };
    // d3 of the two recurring overtwisted levels:
    //   high = (7 - p)/4, low = (3p - p^2 - 4)/4p.
    let d3_high = rat(7 - p, 4);
    let d3_low = rat(3 * p - p * p - 4, 4 * p);
    match tag {
        CaseTag::A => {
            // Tight case: one realization per choice of rotation numbers of
            // the two components and of the background structure on L(p,1).
            for r in step2(-p + 2, p - 2) {
                let d3 = -(rat_int(1) + rat(r * r, p)) / rat_int(4);
                for r0 in step2(c0 + 1, -c0 - 1) {
                    for r1 in step2(c1 + 1, -c1 - 1) {
                        em.push(
                            rat_int(r0) - rat(r, p),
                            rat_int(r1) - rat(r, p),
                            d3.clone(),
                            Some(r),
                            Some(r0),
                            Some(r1),
                        );
                    }
                }
            }
        }
        CaseTag::B => {
            let d3 = rat(3 - p, 4);
            for r1 in step2(c1, -c1) {
                em.push(rat_int(0), rat_int(r1), d3.clone(), None, None, Some(r1));
            }
        }
        CaseTag::C1 => {
            for e in [1, -1] {
                em.push(
                    rat(2 * e, p),
                    rat_int(e) + rat(2 * e, p),
                    d3_low.clone(),
                    None,
                    None,
                    None,
                );
            }
        }
        CaseTag::C2 => {
            for e in [1, -1] {
                em.push(
                    rat(2 * e, p),
                    rat_int(2 * e) + rat(2 * e, p),
                    d3_low.clone(),
                    None,
                    None,
                    None,
                );
            }
            em.push(rat_int(0), rat_int(0), d3_high.clone(), None, None, None);
        }
        CaseTag::C3 => {
            for e in [1, -1] {
                em.push(
                    rat_int(0),
                    rat_int(e * (c1 - 2)),
                    d3_high.clone(),
                    None,
                    None,
                    None,
                );
            }
            for e in [1, -1] {
                em.push(
                    rat(2 * e, p),
                    rat_int(e * c1) + rat(2 * e, p),
                    d3_low.clone(),
                    None,
                    None,
                    None,
                );
            }
        }
        CaseTag::D1 => {
            for r in step2(-p - 2, p + 2) {
                let d3 = rat(7 * p - r * r, 4 * p);
                em.push(rat(r, p), rat(r, p), d3, Some(r), None, None);
            }
        }
        CaseTag::D2 => {
            for r in step2(-p - 1, p + 1) {
                let d3 = rat(7 * p - 1 + 2 * r - r * r, 4 * p);
                for e in [1, -1] {
                    em.push(
                        rat(e * (1 - r), p),
                        rat_int(e * (c1 - 1)) + rat(e * (1 - r), p),
                        d3.clone(),
                        Some(r),
                        None,
                        None,
                    );
                }
            }
        }
        CaseTag::D3 => {
            for r in step2(-p, p) {
                let d3_row1 = rat(7 * p - 4 + 4 * r - r * r, 4 * p);
                let d3_row2 = rat(7 * p - r * r, 4 * p);
                for e in [1, -1] {
                    em.push(
                        rat_int(e * (c0 - 1)) + rat(e * (2 - r), p),
                        rat_int(e * (c1 - 1)) + rat(e * (2 - r), p),
                        d3_row1.clone(),
                        Some(r),
                        None,
                        None,
                    );
                }
                for e in [1, -1] {
                    em.push(
                        rat_int(e * (c0 - 1)) + rat(e * r, p),
                        -rat_int(e * (c1 - 1)) + rat(e * r, p),
                        d3_row2.clone(),
                        Some(r),
                        None,
                        None,
                    );
                }
            }
        }
        CaseTag::ET1Eq1 => {
            for r in step2(-p, p) {
                let d3 = (rat_int(3) - rat(r * r, p)) / rat_int(4);
                for r0 in step2(c0 + 1, -c0 - 1) {
                    em.push(
                        rat_int(r0) - rat(r, p),
                        -rat(r, p),
                        d3.clone(),
                        Some(r),
                        Some(r0),
                        None,
                    );
                }
            }
        }
        CaseTag::ET1Gt1 => {
            for r in step2(-p + 1, p - 1) {
                let d3 = (rat_int(3) - rat((r + 1) * (r + 1), p)) / rat_int(4);
                for r0 in step2(c0 + 1, -c0 - 1) {
                    for e in [1, -1] {
                        em.push(
                            rat_int(e * r0) + rat(e * (r + 1), p),
                            rat_int(e * (c1 - 1)) + rat(e * (r + 1), p),
                            d3.clone(),
                            Some(r),
                            Some(r0),
                            None,
                        );
                    }
                }
            }
        }
    }
    let list = em.out;
    if swap {
        Ok(list.into_iter().map(Realization::swapped).collect())
    } else {
        Ok(list)
    }
}

/// Rational rotation numbers realized by exceptional Legendrian unknots in
/// L(p,1) with tb_Q = t + 1/p, sorted ascending. Empty for t < 0: those
/// unknots are never exceptional.
pub fn exceptional_unknot_rots(p: i64, t: i64) -> Result<Vec<Rat>, AtlasError> {
    if p < 2 {
        return Err(AtlasError::UnsupportedOrder(p));
    }
    let mut rots = Vec::new();
    if t == 0 {
        rots.push(rat_int(0));
    } else if t == 1 {
        for k in 0..=p {
            rots.push(rat_int(-1) + rat(2 * k, p));
        }
    } else if t >= 2 {
        for k in 1..=p {
            let v = rat_int(t - 2) + rat(2 * k, p);
            rots.push(v.clone());
            rots.push(-v);
        }
    }
    rots.sort();
    Ok(rots)
}

/// Coarse looseness test for a single Hopf component, by membership of its
/// rotation number in the exceptional-unknot table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LoosenessHint {
    Loose,
    PossiblyExceptional,
}

impl fmt::Display for LoosenessHint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LoosenessHint::Loose => "loose",
            LoosenessHint::PossiblyExceptional => "possibly exceptional",
        })
    }
}

/// A component whose rotation number misses the exceptional-unknot table is
/// certainly loose; a hit is only necessary, not sufficient, hence a hint.
pub fn looseness_hint(p: i64, t: i64, rot: &Rat) -> Result<LoosenessHint, AtlasError> {
    let table = exceptional_unknot_rots(p, t)?;
    if table.iter().any(|v| v == rot) {
        Ok(LoosenessHint::PossiblyExceptional)
    } else {
        Ok(LoosenessHint::Loose)
    }
}

/// The three independent counts of realizations for one framing pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountComparison {
    pub atlas: BigInt,
    pub closed_form: BigInt,
    pub torus: BigInt,
}

impl CountComparison {
    pub fn consistent(&self) -> bool {
        self.atlas == self.closed_form && self.closed_form == self.torus
    }
}

/// Counts realizations three ways: atlas list length, sign-case closed form,
/// and the thickened-torus count.
pub fn verify_counts(p: i64, t0: i64, t1: i64) -> Result<CountComparison, AtlasError> {
    let atlas = BigInt::from(classify(p, t0, t1)?.len());
    let closed_form = slopes::closed_form_count(p, t0, t1)?;
    let torus = slopes::count_tight(p, t0, t1)?;
    Ok(CountComparison {
        atlas,
        closed_form,
        torus,
    })
}
