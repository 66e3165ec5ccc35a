//! The Atiyah-Hirzebruch spectral sequence for `BG₊ ∧ K(k)`:
//! `E²_{p,q} = H_p(BG; K_q(k)) ⟹ H_{p+q}(BG; K(k))`.
//!
//! The engine never assumes collapse from abstract splitting theorems.
//! [`analyze_differentials`] reports a differential as vanishing only when
//! its source or target entry is the zero group — the only argument the
//! degree bookkeeping can certify — and [`abutment`] refuses to assemble a
//! total degree until every differential in the window is so disposed of.
//! The surviving extension problems are solved by a whitelist of two
//! genuinely split cases and nothing else.

use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::abelian::ExtAb;
use crate::homology::{homology_with_coefficients, GroupDescriptor};
use crate::kfield::{quillen_k, FieldDescriptor};
use crate::{Error, Result};

/// A bigraded page `E_{p,q}` on the window `[0, P] × [0, Qmax]`.
///
/// Entries with `p` outside `[0, P]` are zero (the window is the full
/// support: homology vanishes above the rank of the group), and entries
/// with `q < 0` are zero by the connective convention on the coefficients.
/// On page `r` the differential has bidegree `(−r, r−1)`:
/// `d^r : E_{p,q} → E_{p−r, q+r−1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Page {
    r: u32,
    p_max: usize,
    q_max: usize,
    grid: Vec<ExtAb>,
}

impl Page {
    /// Build a page from an entry function over the window.
    pub fn from_fn(r: u32, p_max: usize, q_max: usize, f: impl Fn(usize, usize) -> ExtAb) -> Page {
        let mut grid = Vec::with_capacity((p_max + 1) * (q_max + 1));
        for p in 0..=p_max {
            for q in 0..=q_max {
                grid.push(f(p, q));
            }
        }
        Page {
            r,
            p_max,
            q_max,
            grid,
        }
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// Right edge of the window; also the support bound in `p`.
    pub fn p_max(&self) -> usize {
        self.p_max
    }

    pub fn q_max(&self) -> usize {
        self.q_max
    }

    /// Entry `E_{p,q}`, zero outside the support. Panics for `q > Qmax`:
    /// that part of the window was never computed.
    pub fn entry(&self, p: i64, q: i64) -> ExtAb {
        if q < 0 || p < 0 || p > self.p_max as i64 {
            return ExtAb::zero();
        }
        assert!(
            q <= self.q_max as i64,
            "entry ({p},{q}) is above the computed window Qmax = {}",
            self.q_max
        );
        self.grid[p as usize * (self.q_max + 1) + q as usize].clone()
    }

    fn entry_ref(&self, p: usize, q: usize) -> &ExtAb {
        &self.grid[p * (self.q_max + 1) + q]
    }
}

// JSON form: {"r":…, "P":…, "Qmax":…, "entries":[[p, q, ExtAb], …]},
// nonzero entries only, in (p, q)-lexicographic order.
impl Serialize for Page {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut entries: Vec<(usize, usize, &ExtAb)> = Vec::new();
        for p in 0..=self.p_max {
            for q in 0..=self.q_max {
                let e = self.entry_ref(p, q);
                if !e.is_zero() {
                    entries.push((p, q, e));
                }
            }
        }
        let mut st = serializer.serialize_struct("Page", 4)?;
        st.serialize_field("r", &self.r)?;
        st.serialize_field("P", &self.p_max)?;
        st.serialize_field("Qmax", &self.q_max)?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Page {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            r: u32,
            #[serde(rename = "P")]
            p_max: usize,
            #[serde(rename = "Qmax")]
            q_max: usize,
            entries: Vec<(usize, usize, ExtAb)>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let mut page = Page::from_fn(raw.r, raw.p_max, raw.q_max, |_, _| ExtAb::zero());
        for (p, q, e) in raw.entries {
            if p > raw.p_max || q > raw.q_max {
                return Err(D::Error::custom(format!(
                    "entry ({p},{q}) is outside the window [0,{}]x[0,{}]",
                    raw.p_max, raw.q_max
                )));
            }
            page.grid[p * (raw.q_max + 1) + q] = e;
        }
        Ok(page)
    }
}

/// The E² page for `G` and `F_q` up to total degree `total_degree`:
/// `E²_{p,q} = H_p(BG; K_q(F_q))` on the window `[0, a+b] × [0, total_degree]`.
pub fn build_e2(g: &GroupDescriptor, field: &FieldDescriptor, total_degree: usize) -> Page {
    Page::from_fn(2, g.rank(), total_degree, |p, q| {
        homology_with_coefficients(g, &quillen_k(field, q as i64), p as i64)
    })
}

/// Why a differential vanishes, if the engine can tell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DifferentialStatus {
    #[serde(rename = "VANISHES_SOURCE_ZERO")]
    VanishesSourceZero,
    #[serde(rename = "VANISHES_TARGET_ZERO")]
    VanishesTargetZero,
    #[serde(rename = "UNDETERMINED")]
    Undetermined,
}

/// One differential `d^r : E_{p,q} → E_{p−r, q+r−1}` and its status.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Differential {
    pub r: u32,
    pub p: usize,
    pub q: usize,
    pub status: DifferentialStatus,
}

/// Per-differential vanishing report over the whole window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DifferentialReport {
    pub differentials: Vec<Differential>,
}

impl DifferentialReport {
    pub fn undetermined(&self) -> impl Iterator<Item = &Differential> {
        self.differentials
            .iter()
            .filter(|d| d.status == DifferentialStatus::Undetermined)
    }

    /// All differentials vanish for degree reasons: E² = E∞.
    pub fn is_collapsed(&self) -> bool {
        self.undetermined().next().is_none()
    }
}

/// Enumerate every differential `d^r`, `2 ≤ r ≤ P+1`, whose source lies in
/// the window and whose target is either in the window or zero by the
/// support conventions, and report vanishing only when the source or the
/// target entry is the zero group. No other argument counts.
pub fn analyze_differentials(page: &Page) -> DifferentialReport {
    let mut differentials = Vec::new();
    for r in 2..=(page.p_max() as i64 + 1).max(2) {
        for p in 0..=page.p_max() as i64 {
            for q in 0..=page.q_max() as i64 {
                let (tp, tq) = (p - r, q + r - 1);
                if tq > page.q_max() as i64 && tp >= 0 {
                    // target above the computed window with unknown value:
                    // not part of the report
                    continue;
                }
                let status = if page.entry(p, q).is_zero() {
                    DifferentialStatus::VanishesSourceZero
                } else if tq > page.q_max() as i64 || page.entry(tp, tq).is_zero() {
                    DifferentialStatus::VanishesTargetZero
                } else {
                    DifferentialStatus::Undetermined
                };
                differentials.push(Differential {
                    r: r as u32,
                    p: p as usize,
                    q: q as usize,
                    status,
                });
            }
        }
    }
    DifferentialReport { differentials }
}

/// The two extension shapes the solver will split, and the audit record
/// of each application.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SplitRule {
    /// The quotient is free abelian, hence projective.
    #[serde(rename = "FREE_QUOTIENT")]
    FreeQuotient,
    /// The quotient is `Q^s` and the sub is finite: `Ext¹(Q^s, finite) = 0`
    /// by the multiplication-by-n trick.
    #[serde(rename = "RATIONAL_QUOTIENT_FINITE_SUB")]
    RationalQuotientFiniteSub,
}

/// Audit entry: which rule was applied to which filtration position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionRuleUse {
    pub rule: SplitRule,
    pub degree: usize,
    pub p: usize,
    pub q: usize,
}

/// Certify that `0 → sub → X → quotient → 0` splits, or decline.
pub(crate) fn certify_split(sub: &ExtAb, quotient: &ExtAb) -> Option<SplitRule> {
    if quotient.is_free() {
        Some(SplitRule::FreeQuotient)
    } else if quotient.is_rational_vector_space() && sub.is_finite() {
        Some(SplitRule::RationalQuotientFiniteSub)
    } else {
        None
    }
}

/// The abutment `H_n(BG; K(k))` from a collapsed page, with the audit
/// trail of extension-rule applications.
///
/// The filtration starts at `E_{0,n}` and its quotients ascend with `p`;
/// each step either has a zero piece, or splits by a whitelisted rule, or
/// the whole computation refuses with `EXTENSION_AMBIGUOUS`.
pub fn abutment_audited(page: &Page, n: usize) -> Result<(ExtAb, Vec<ExtensionRuleUse>)> {
    let report = analyze_differentials(page);
    let undetermined = report.undetermined().count();
    if undetermined > 0 {
        return Err(Error::NotCollapsed { undetermined });
    }
    assert!(
        n <= page.q_max(),
        "total degree {n} is above the computed window"
    );

    let mut acc = ExtAb::zero();
    let mut audit = Vec::new();
    for p in 0..=page.p_max().min(n) {
        let q = n - p;
        let piece = page.entry(p as i64, q as i64);
        if piece.is_zero() {
            continue;
        }
        if acc.is_zero() {
            acc = piece;
            continue;
        }
        match certify_split(&acc, &piece) {
            Some(rule) => {
                audit.push(ExtensionRuleUse {
                    rule,
                    degree: n,
                    p,
                    q,
                });
                acc = acc.direct_sum(&piece);
            }
            None => {
                return Err(Error::ExtensionAmbiguous {
                    sub: acc,
                    quotient: piece,
                    p,
                    q,
                })
            }
        }
    }
    Ok((acc, audit))
}

/// [`abutment_audited`] without the audit trail.
pub fn abutment(page: &Page, n: usize) -> Result<ExtAb> {
    abutment_audited(page, n).map(|(value, _)| value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> GroupDescriptor {
        GroupDescriptor::rationals()
    }

    fn f(order: u64) -> FieldDescriptor {
        FieldDescriptor::from_order(order).unwrap()
    }

    #[test]
    fn e2_entries_for_bq() {
        let page = build_e2(&q(), &f(2), 6);
        assert_eq!(page.entry(0, 0), ExtAb::free(1));
        assert_eq!(page.entry(1, 0), ExtAb::rational(1));
        assert_eq!(page.entry(0, 3), ExtAb::cyclic(3));
        assert_eq!(page.entry(0, 5), ExtAb::cyclic(7));
        assert_eq!(page.entry(1, 3), ExtAb::zero());
        for qd in 0..=6 {
            assert_eq!(page.entry(2, qd), ExtAb::zero());
        }
    }

    #[test]
    fn two_column_pages_collapse() {
        for g in [q(), GroupDescriptor::integers(), GroupDescriptor::trivial()] {
            for order in [2, 3, 4, 9, 25] {
                let page = build_e2(&g, &f(order), 6);
                let report = analyze_differentials(&page);
                assert!(report.is_collapsed(), "G = {g}, F_{order}");
            }
        }
    }

    #[test]
    fn honest_undetermined_on_three_columns() {
        // E²_{2,0} = K_0 = Z maps to E²_{0,1} = K_1(F_3) = Z/2: both nonzero
        let z2 = GroupDescriptor::new(2, 0);
        let page = build_e2(&z2, &f(3), 4);
        let report = analyze_differentials(&page);
        let und: Vec<_> = report.undetermined().collect();
        assert!(und.iter().any(|d| (d.r, d.p, d.q) == (2, 2, 0)));
    }

    #[test]
    fn z2_page_over_f2_vanishes_per_entry() {
        let page = build_e2(&GroupDescriptor::new(2, 0), &f(2), 6);
        let report = analyze_differentials(&page);
        // q = 0: source Z^... nonzero, target K_1(F_2) = 0
        let d = report
            .differentials
            .iter()
            .find(|d| (d.r, d.p, d.q) == (2, 2, 0))
            .unwrap();
        assert_eq!(d.status, DifferentialStatus::VanishesTargetZero);
        // q = 2: source H_2 ⊗ K_2 = 0
        let d = report
            .differentials
            .iter()
            .find(|d| (d.r, d.p, d.q) == (2, 2, 2))
            .unwrap();
        assert_eq!(d.status, DifferentialStatus::VanishesSourceZero);
        assert!(report.is_collapsed());
    }

    #[test]
    fn abutment_of_bq_page() {
        let page = build_e2(&q(), &f(2), 6);
        assert_eq!(abutment(&page, 0).unwrap(), ExtAb::free(1));
        assert_eq!(abutment(&page, 1).unwrap(), ExtAb::rational(1));
        assert_eq!(abutment(&page, 2).unwrap(), ExtAb::zero());
        assert_eq!(abutment(&page, 5).unwrap(), ExtAb::cyclic(7));
    }

    #[test]
    fn abutment_applies_free_quotient_rule() {
        // Bass-Heller-Swan check: K_1(F_3[t, 1/t]) = K_1(F_3) ⊕ K_0(F_3)
        let page = build_e2(&GroupDescriptor::integers(), &f(3), 4);
        let (value, audit) = abutment_audited(&page, 1).unwrap();
        assert_eq!(value, ExtAb::free(1).direct_sum(&ExtAb::cyclic(2)));
        assert_eq!(audit.len(), 1);
        assert_eq!(audit[0].rule, SplitRule::FreeQuotient);
        assert_eq!((audit[0].p, audit[0].q), (1, 0));
    }

    #[test]
    fn abutment_refuses_undetermined_pages() {
        let page = Page::from_fn(2, 2, 1, |p, q| match (p, q) {
            (2, 0) => ExtAb::free(1),
            (0, 1) => ExtAb::cyclic(2),
            _ => ExtAb::zero(),
        });
        assert!(matches!(
            abutment(&page, 2),
            Err(Error::NotCollapsed { undetermined: 1 })
        ));
    }

    #[test]
    fn abutment_refuses_ambiguous_extension() {
        // sub Z/2, quotient Z/2 on a two-column page: collapsed but unsolvable
        let page = Page::from_fn(2, 1, 1, |p, q| match (p, q) {
            (0, 1) => ExtAb::cyclic(2),
            (1, 0) => ExtAb::cyclic(2),
            _ => ExtAb::zero(),
        });
        assert!(analyze_differentials(&page).is_collapsed());
        match abutment(&page, 1) {
            Err(Error::ExtensionAmbiguous { sub, quotient, .. }) => {
                assert_eq!(sub, ExtAb::cyclic(2));
                assert_eq!(quotient, ExtAb::cyclic(2));
            }
            other => panic!("expected EXTENSION_AMBIGUOUS, got {other:?}"),
        }
    }

    #[test]
    fn window_enlargement_is_sound() {
        let small = build_e2(&q(), &f(2), 6);
        let large = build_e2(&q(), &f(2), 12);
        for n in 0..=6 {
            assert_eq!(abutment(&small, n).unwrap(), abutment(&large, n).unwrap());
        }
    }

    #[test]
    fn page_json_round_trip() {
        let page = build_e2(&q(), &f(2), 4);
        let json = serde_json::to_string(&page).unwrap();
        assert!(json.starts_with(r#"{"r":2,"P":1,"Qmax":4,"entries":"#));
        let back: Page = serde_json::from_str(&json).unwrap();
        assert_eq!(back, page);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }

    #[test]
    fn report_json_is_a_bare_array() {
        let report = analyze_differentials(&build_e2(&q(), &f(2), 2));
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.starts_with(r#"[{"r":2,"#), "{json}");
        assert!(json.contains(r#""status":"VANISHES_"#));
        let back: DifferentialReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
    }
}
