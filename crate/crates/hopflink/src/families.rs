//! Explicit surgery presentations realizing every entry of the Hopf link
//! atlas.
//!
//! Each builder takes the same discrete parameters that label the atlas rows
//! for its case (framings, a rotation parameter r, sometimes an extra sign or
//! row selector) and produces a surgery diagram plus the two Hopf components
//! L0 and L1. The computed rational invariants of the output must reproduce
//! the corresponding [`crate::atlas`] row exactly; sweeping a case's full
//! parameter range reproduces the whole case as a multiset. Case c1 has no
//! builder here: its two realizations are connect-sum constructions that do
//! not fit this diagram shape.

use crate::atlas::{step2, CaseTag};
use crate::linalg::{Int, Rat};
use crate::surgery::{D3Breakdown, DiagramBuilder, DiagramError, LinkComponent, SurgeryDiagram};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("lens space order p must be at least 2, got {0}")]
    UnsupportedOrder(i64),
    #[error("parameter out of range: {0}")]
    BadParameter(String),
    #[error("case {0} has no diagram builder")]
    NoConstructor(CaseTag),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), FamilyError> {
    if cond {
        Ok(())
    } else {
        Err(FamilyError::BadParameter(msg()))
    }
}

fn check_p(p: i64) -> Result<(), FamilyError> {
    if p < 2 {
        return Err(FamilyError::UnsupportedOrder(p));
    }
    Ok(())
}

fn check_sign(sign: i64) -> Result<(), FamilyError> {
    check(sign == 1 || sign == -1, || {
        format!("sign must be +1 or -1, got {sign}")
    })
}

/// Checks r lies in the inclusive step-2 range [lo, hi].
fn check_step2(name: &str, r: i64, lo: i64, hi: i64) -> Result<(), FamilyError> {
    check(lo <= r && r <= hi && (r - lo) % 2 == 0, || {
        format!("{name} must lie in {{{lo}, {}, ..., {hi}}}, got {r}", lo + 2)
    })
}

/// A built diagram for one atlas row.
#[derive(Debug, Clone)]
pub struct FamilyDiagram {
    pub case_tag: CaseTag,
    pub p: i64,
    pub t0: i64,
    pub t1: i64,
    /// The discrete parameters the row was built from, for display.
    pub params: Vec<(&'static str, i64)>,
    pub diagram: SurgeryDiagram,
    pub components: [LinkComponent; 2],
}

/// Computed invariants of a family diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyInvariants {
    pub tbq0: Rat,
    pub rotq0: Rat,
    pub tbq1: Rat,
    pub rotq1: Rat,
    pub d3: D3Breakdown,
    pub homology_order: Int,
}

impl FamilyInvariants {
    /// The comparable invariant tuple (tbq0, rotq0, tbq1, rotq1, d3).
    pub fn tuple(&self) -> (Rat, Rat, Rat, Rat, Rat) {
        (
            self.tbq0.clone(),
            self.rotq0.clone(),
            self.tbq1.clone(),
            self.rotq1.clone(),
            self.d3.d3.clone(),
        )
    }
}

impl FamilyDiagram {
    pub fn invariants(&self) -> Result<FamilyInvariants, DiagramError> {
        let d = &self.diagram;
        Ok(FamilyInvariants {
            tbq0: d.tb_rational(&self.components[0])?,
            rotq0: d.rot_rational(&self.components[0])?,
            tbq1: d.tb_rational(&self.components[1])?,
            rotq1: d.rot_rational(&self.components[1])?,
            d3: d.d3_invariant()?,
            homology_order: d.homology_order()?,
        })
    }
}

#[allow(clippy::too_many_arguments)]
fn family(
    case_tag: CaseTag,
    p: i64,
    t0: i64,
    t1: i64,
    params: Vec<(&'static str, i64)>,
    diagram: SurgeryDiagram,
    c0: LinkComponent,
    c1: LinkComponent,
) -> FamilyDiagram {
    FamilyDiagram {
        case_tag,
        p,
        t0,
        t1,
        params,
        diagram,
        components: [c0, c1],
    }
}

fn named(name: &str, tb: i64, rot: i64, links: Vec<i64>) -> LinkComponent {
    LinkComponent::named(name, tb, rot, links)
}

/// Case a (both framings negative, ambient tight): a single (-1)-surgery on
/// an unknot with tb = 1 - p whose rotation number r = l - k is set by its
/// cusp split k + l = p. Component L_i is an unknot with k_i + l_i cusps,
/// tb_i = 1 - k_i - l_i and rot_i = l_i - k_i, linking the surgery knot once.
pub fn build_case_a(
    p: i64,
    k: i64,
    l: i64,
    k0: i64,
    l0: i64,
    k1: i64,
    l1: i64,
) -> Result<FamilyDiagram, FamilyError> {
    check_p(p)?;
    check(k >= 1 && l >= 1 && k + l == p, || {
        format!("cusp split must satisfy k, l >= 1 and k + l = p, got k={k} l={l} p={p}")
    })?;
    for (ki, li, which) in [(k0, l0, "k0/l0"), (k1, l1, "k1/l1")] {
        check(ki >= 1 && li >= 1, || {
            format!("component cusp counts must be >= 1, got {which} = {ki}/{li}")
        })?;
    }
    let (t0, t1) = (1 - k0 - l0, 1 - k1 - l1);
    let mut b = DiagramBuilder::new();
    b.add_knot(1 - p, l - k, -1);
    let diagram = b.build();
    Ok(family(
        CaseTag::A,
        p,
        t0,
        t1,
        vec![
            ("k", k),
            ("l", l),
            ("k0", k0),
            ("l0", l0),
            ("k1", k1),
            ("l1", l1),
        ],
        diagram,
        named("L0", t0, l0 - k0, vec![-1]),
        named("L1", t1, l1 - k1, vec![-1]),
    ))
}

/// Case b (t0 = 0, t1 <= 0): p+1 mutually linked (+1)-surgeries on standard
/// unknots. L1 is stabilized k times negatively and l times positively, so
/// t1 = -(k + l) and rot = l - k.
pub fn build_case_b(p: i64, k: i64, l: i64) -> Result<FamilyDiagram, FamilyError> {
    check_p(p)?;
    check(k >= 0 && l >= 0, || {
        format!("stabilization counts must be >= 0, got k={k} l={l}")
    })?;
    let t1 = -(k + l);
    let n = (p + 1) as usize;
    let mut b = DiagramBuilder::new();
    for _ in 0..n {
        b.add_knot(-1, 0, 1);
    }
    for i in 0..n {
        for j in i + 1..n {
            b.set_link(i, j, -1);
        }
    }
    Ok(family(
        CaseTag::B,
        p,
        0,
        t1,
        vec![("k", k), ("l", l)],
        b.build(),
        named("L0", -1, 0, vec![-1; n]),
        named("L1", t1 - 1, l - k, vec![-1; n]),
    ))
}

/// The three realizations of case c2 (t0 = 0, t1 = 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum C2Variant {
    /// rot pair (+2/p, +(2 + 2/p)), the lower d3 value.
    LeftPlus,
    /// rot pair (-2/p, -(2 + 2/p)), the lower d3 value.
    LeftMinus,
    /// rot pair (0, 0), d3 = (7 - p)/4.
    Right,
}

impl C2Variant {
    pub fn all() -> [C2Variant; 3] {
        [C2Variant::LeftPlus, C2Variant::LeftMinus, C2Variant::Right]
    }
}

impl fmt::Display for C2Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            C2Variant::LeftPlus => "left+",
            C2Variant::LeftMinus => "left-",
            C2Variant::Right => "right",
        })
    }
}

impl FromStr for C2Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "left+" => Ok(C2Variant::LeftPlus),
            "left-" => Ok(C2Variant::LeftMinus),
            "right" => Ok(C2Variant::Right),
            other => Err(format!(
                "unknown c2 variant '{other}', expected left+, left- or right"
            )),
        }
    }
}

/// Case c2 (t0 = 0, t1 = 2): a tb = -3 unknot with a (+1)-surgery stacked
/// with p+2 standard (+1)-surgered unknots, all mutually linked once.
pub fn build_case_c2(p: i64, variant: C2Variant) -> Result<FamilyDiagram, FamilyError> {
    check_p(p)?;
    let (rot_top, rot_l1) = match variant {
        C2Variant::LeftPlus => (2, -2),
        C2Variant::LeftMinus => (-2, 2),
        C2Variant::Right => (0, 0),
    };
    let n = (p + 3) as usize;
    let mut b = DiagramBuilder::new();
    b.add_knot(-3, rot_top, 1);
    for _ in 1..n {
        b.add_knot(-1, 0, 1);
    }
    for i in 0..n {
        for j in i + 1..n {
            b.set_link(i, j, -1);
        }
    }
    let mut links1 = vec![1; n];
    links1[0] = 3;
    let variant_code = match variant {
        C2Variant::LeftPlus => 1,
        C2Variant::LeftMinus => -1,
        C2Variant::Right => 0,
    };
    Ok(family(
        CaseTag::C2,
        p,
        0,
        2,
        vec![("variant", variant_code)],
        b.build(),
        named("L0", -1, 0, vec![-1; n]),
        named("L1", -3, rot_l1, links1),
    ))
}

/// Case c3 (t0 = 0, t1 >= 3). `row` selects the atlas row: 1 for the
/// rot pair (0, sign*(t1-2)) with d3 = (7-p)/4, 2 for the pair
/// (sign*2/p, sign*(t1 + 2/p)) with the lower d3.
pub fn build_case_c3(p: i64, t1: i64, row: u8, sign: i64) -> Result<FamilyDiagram, FamilyError> {
    check_p(p)?;
    check(t1 >= 3, || format!("case c3 needs t1 >= 3, got {t1}"))?;
    check(row == 1 || row == 2, || {
        format!("row must be 1 or 2, got {row}")
    })?;
    check_sign(sign)?;
    // Orientation bookkeeping: the chain of t1 - 3 stabilized push-offs flips
    // the visible sign when its length is odd.
    let parity = if (t1 - 3) % 2 == 0 { 1 } else { -1 };
    let a = -sign * parity;
    let bb = if row == 1 { a * parity } else { -a * parity };
    let chain_len = (t1 - 1) as usize; // ka, t1-3 intermediates, ks
    let stack_len = (p + 2) as usize;
    let n = chain_len + stack_len;
    let mut b = DiagramBuilder::new();
    let ka = b.add_knot(-2, a, 1);
    for _ in 0..(t1 - 3) {
        b.add_knot(-1, 0, -1);
    }
    let ks = b.add_knot(-2, bb, -1);
    for _ in 0..stack_len {
        b.add_knot(-1, 0, 1);
    }
    for i in ka..ks {
        b.set_link(i, i + 1, -1);
    }
    for i in ks..n {
        for j in i + 1..n {
            b.set_link(i, j, -1);
        }
    }
    let mut links0 = vec![0; n];
    for link in links0.iter_mut().skip(ks) {
        *link = -1;
    }
    let mut links1 = vec![0; n];
    links1[ka] = -2 * parity;
    links1[ka + 1] = -parity;
    Ok(family(
        CaseTag::C3,
        p,
        0,
        t1,
        vec![("row", row as i64), ("sign", sign)],
        b.build(),
        named("L0", -1, 0, links0),
        named("L1", -2, a * parity, links1),
    ))
}

/// Case d1 (t0 = t1 = 1), parameter r in {-p-2, -p, ..., p+2}: the atlas row
/// with rot pair (r/p, r/p) and d3 = (7p - r^2)/4p.
pub fn build_case_d1(p: i64, r: i64) -> Result<FamilyDiagram, FamilyError> {
    check_p(p)?;
    check_step2("r", r, -p - 2, p + 2)?;
    let mut b = DiagramBuilder::new();
    let k1 = b.add_knot(-p - 3, -r, 1);
    let k2 = b.add_knot(-1, 0, 1);
    let k3 = b.add_knot(-1, 0, 1);
    b.set_link(k1, k2, 1);
    b.set_link(k1, k3, -1);
    b.set_link(k2, k3, 1);
    Ok(family(
        CaseTag::D1,
        p,
        1,
        1,
        vec![("r", r)],
        b.build(),
        named("L0", -1, 0, vec![1, -1, 1]),
        named("L1", -p - 3, -r, vec![-p - 3, 1, -1]),
    ))
}

/// Case d2 (t0 = 1, t1 >= 2), r in {-p-1, ..., p+1} step 2 and sign = +-1:
/// the row with rot pair sign*((1-r)/p, t1 - 1 + (1-r)/p) and
/// d3 = (7p - 1 + 2r - r^2)/4p.
pub fn build_case_d2(p: i64, t1: i64, r: i64, sign: i64) -> Result<FamilyDiagram, FamilyError> {
    check_p(p)?;
    check(t1 >= 2, || format!("case d2 needs t1 >= 2, got {t1}"))?;
    check_step2("r", r, -p - 1, p + 1)?;
    check_sign(sign)?;
    let a = -sign;
    let rot_kr = sign * r;
    let mut b = DiagramBuilder::new();
    let ka = b.add_knot(-2, a, 1);
    for _ in 0..(t1 - 2) {
        b.add_knot(-1, 0, -1);
    }
    let kr = b.add_knot(-p - 2, rot_kr, -1);
    let kc = b.add_knot(-1, 0, 1);
    let kd = b.add_knot(-1, 0, 1);
    for i in ka..kr {
        b.set_link(i, i + 1, 1);
    }
    b.set_link(kr, kc, 1);
    b.set_link(kr, kd, -1);
    b.set_link(kc, kd, 1);
    let n = kd + 1;
    let mut links0 = vec![0; n];
    links0[kc] = -1;
    links0[kr] = 1;
    links0[kd] = 1;
    let mut links1 = vec![0; n];
    links1[ka] = -2;
    links1[ka + 1] = 1;
    Ok(family(
        CaseTag::D2,
        p,
        1,
        t1,
        vec![("r", r), ("sign", sign)],
        b.build(),
        named("L0", -1, 0, links0),
        named("L1", -2, a, links1),
    ))
}

/// Case d3 (t0, t1 >= 2), r in {-p, ..., p} step 2, row 1 or 2, sign = +-1:
/// row 1 is the pair sign*(t0 - 1 + (2-r)/p, t1 - 1 + (2-r)/p) with
/// d3 = (7p - 4 + 4r - r^2)/4p, row 2 the pair
/// (sign*(t0 - 1 + r/p), -sign*(t1 - 1 - r/p)) with d3 = (7p - r^2)/4p.
pub fn build_case_d3(
    p: i64,
    t0: i64,
    t1: i64,
    row: u8,
    r: i64,
    sign: i64,
) -> Result<FamilyDiagram, FamilyError> {
    check_p(p)?;
    check(t0 >= 2 && t1 >= 2, || {
        format!("case d3 needs t0, t1 >= 2, got t0={t0} t1={t1}")
    })?;
    check(row == 1 || row == 2, || {
        format!("row must be 1 or 2, got {row}")
    })?;
    check_step2("r", r, -p, p)?;
    check_sign(sign)?;
    let (a, rot_kr) = if row == 1 {
        (-sign, sign * r)
    } else {
        (sign, -sign * r)
    };
    let dl = -sign;
    let mut b = DiagramBuilder::new();
    let ka = b.add_knot(-2, a, 1);
    for _ in 0..(t1 - 2) {
        b.add_knot(-1, 0, -1);
    }
    b.add_knot(-p - 1, rot_kr, -1);
    for _ in 0..(t0 - 2) {
        b.add_knot(-1, 0, -1);
    }
    let kd = b.add_knot(-2, dl, 1);
    for i in ka..kd {
        b.set_link(i, i + 1, 1);
    }
    let n = kd + 1;
    let mut links0 = vec![0; n];
    links0[kd] = -2;
    links0[kd - 1] = 1;
    let mut links1 = vec![0; n];
    links1[ka] = -2;
    links1[ka + 1] = 1;
    Ok(family(
        CaseTag::D3,
        p,
        t0,
        t1,
        vec![("row", row as i64), ("r", r), ("sign", sign)],
        b.build(),
        named("L0", -2, dl, links0),
        named("L1", -2, a, links1),
    ))
}

/// Case e with t1 = 1 (t0 < 0), r in {-p, ..., p} step 2 and r0 in
/// {t0+1, ..., -t0-1} step 2: the row with rot pair (r0 - r/p, -r/p) and
/// d3 = (3 - r^2/p)/4.
pub fn build_case_e1(p: i64, t0: i64, r: i64, r0: i64) -> Result<FamilyDiagram, FamilyError> {
    check_p(p)?;
    check(t0 <= -1, || format!("case e1 needs t0 < 0, got {t0}"))?;
    check_step2("r", r, -p, p)?;
    check_step2("r0", r0, t0 + 1, -t0 - 1)?;
    let mut b = DiagramBuilder::new();
    b.add_knot(-p - 1, r, 1);
    Ok(family(
        CaseTag::ET1Eq1,
        p,
        t0,
        1,
        vec![("r", r), ("r0", r0)],
        b.build(),
        named("L0", t0, r0, vec![-1]),
        named("L1", -p - 1, r, vec![-p - 1]),
    ))
}

/// Case e with t1 > 1 (t0 < 0), r in {-p+1, ..., p-1} step 2, r0 in
/// {t0+1, ..., -t0-1} step 2, sign = +-1: the row with rot pair
/// sign*(r0 + (r+1)/p, t1 - 1 + (r+1)/p) and d3 = (3 - (r+1)^2/p)/4.
pub fn build_case_e2(
    p: i64,
    t0: i64,
    t1: i64,
    r: i64,
    r0: i64,
    sign: i64,
) -> Result<FamilyDiagram, FamilyError> {
    check_p(p)?;
    check(t0 <= -1, || format!("case e2 needs t0 < 0, got {t0}"))?;
    check(t1 >= 2, || format!("case e2 needs t1 >= 2, got {t1}"))?;
    check_step2("r", r, -p + 1, p - 1)?;
    check_step2("r0", r0, t0 + 1, -t0 - 1)?;
    check_sign(sign)?;
    let parity = if (t1 - 2) % 2 == 0 { 1 } else { -1 };
    let s = -sign * parity;
    let rot_k1 = -r * parity;
    let mut b = DiagramBuilder::new();
    let k1 = b.add_knot(-p, rot_k1, -1);
    for _ in 0..(t1 - 2) {
        b.add_knot(-1, 0, -1);
    }
    let ka = b.add_knot(-2, 1, 1);
    for i in k1..ka {
        b.set_link(i, i + 1, -1);
    }
    let n = ka + 1;
    let mut links0 = vec![0; n];
    links0[k1] = s;
    let mut links1 = vec![0; n];
    links1[ka] = -2 * s * parity;
    links1[ka - 1] = -s * parity;
    Ok(family(
        CaseTag::ET1Gt1,
        p,
        t0,
        t1,
        vec![("r", r), ("r0", r0), ("sign", sign)],
        b.build(),
        named("L0", t0, r0 * s, links0),
        named("L1", -2, s * parity, links1),
    ))
}

/// Sweeps the full parameter range of a case at fixed framings, producing
/// one diagram per atlas row. The framings must match the case pattern in
/// canonical orientation (for example t0 = 0 for the b and c cases).
pub fn enumerate_case(
    tag: CaseTag,
    p: i64,
    t0: i64,
    t1: i64,
) -> Result<Vec<FamilyDiagram>, FamilyError> {
    check_p(p)?;
    let mut out = Vec::new();
    match tag {
        CaseTag::A => {
            check(t0 < 0 && t1 < 0, || {
                format!("case a needs t0, t1 < 0, got ({t0}, {t1})")
            })?;
            for k in 1..p {
                for k0 in 1..=-t0 {
                    for k1 in 1..=-t1 {
                        out.push(build_case_a(p, k, p - k, k0, 1 - t0 - k0, k1, 1 - t1 - k1)?);
                    }
                }
            }
        }
        CaseTag::B => {
            check(t0 == 0 && t1 <= 0, || {
                format!("case b needs t0 = 0 and t1 <= 0, got ({t0}, {t1})")
            })?;
            for k in 0..=-t1 {
                out.push(build_case_b(p, k, -t1 - k)?);
            }
        }
        CaseTag::C1 => return Err(FamilyError::NoConstructor(CaseTag::C1)),
        CaseTag::C2 => {
            check(t0 == 0 && t1 == 2, || {
                format!("case c2 needs (t0, t1) = (0, 2), got ({t0}, {t1})")
            })?;
            for variant in C2Variant::all() {
                out.push(build_case_c2(p, variant)?);
            }
        }
        CaseTag::C3 => {
            check(t0 == 0, || format!("case c3 needs t0 = 0, got {t0}"))?;
            for row in [1, 2] {
                for sign in [1, -1] {
                    out.push(build_case_c3(p, t1, row, sign)?);
                }
            }
        }
        CaseTag::D1 => {
            check(t0 == 1 && t1 == 1, || {
                format!("case d1 needs (t0, t1) = (1, 1), got ({t0}, {t1})")
            })?;
            for r in step2(-p - 2, p + 2) {
                out.push(build_case_d1(p, r)?);
            }
        }
        CaseTag::D2 => {
            check(t0 == 1, || format!("case d2 needs t0 = 1, got {t0}"))?;
            for r in step2(-p - 1, p + 1) {
                for sign in [1, -1] {
                    out.push(build_case_d2(p, t1, r, sign)?);
                }
            }
        }
        CaseTag::D3 => {
            for r in step2(-p, p) {
                for row in [1, 2] {
                    for sign in [1, -1] {
                        out.push(build_case_d3(p, t0, t1, row, r, sign)?);
                    }
                }
            }
        }
        CaseTag::ET1Eq1 => {
            check(t0 < 0 && t1 == 1, || {
                format!("case e1 needs t0 < 0 and t1 = 1, got ({t0}, {t1})")
            })?;
            for r in step2(-p, p) {
                for r0 in step2(t0 + 1, -t0 - 1) {
                    out.push(build_case_e1(p, t0, r, r0)?);
                }
            }
        }
        CaseTag::ET1Gt1 => {
            check(t0 < 0 && t1 >= 2, || {
                format!("case e2 needs t0 < 0 and t1 >= 2, got ({t0}, {t1})")
            })?;
            for r in step2(-p + 1, p - 1) {
                for r0 in step2(t0 + 1, -t0 - 1) {
                    for sign in [1, -1] {
                        out.push(build_case_e2(p, t0, t1, r, r0, sign)?);
                    }
                }
            }
        }
    }
    Ok(out)
}
