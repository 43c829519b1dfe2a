//! Randomized property tests: algebraic identities the exact arithmetic must
//! satisfy on arbitrary inputs, checked against the independent oracles in
//! `common` where one exists.

mod common;

use hopflink::atlas::classify;
use hopflink::linalg::{self, rat, Int, IntMatrix, Rat};
use hopflink::slopes::{
    count_tight, honda_count, hopf_boundary_slopes, ncf_eval, ncf_expand, normalize_slopes,
    closed_form_count, stabilizer_shift, Slope,
};
use hopflink::surgery::{DiagramFile, LinkComponent, SurgeryDiagram, SurgeryKnot};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn fixed_matrix(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec(proptest::collection::vec(lo..=hi, n), n)
        .prop_map(|rows| IntMatrix::from_i64_rows(&rows))
}

fn matrix(max_n: usize, lo: i64, hi: i64) -> impl Strategy<Value = IntMatrix> {
    (0..=max_n).prop_flat_map(move |n| fixed_matrix(n, lo, hi))
}

fn symmetric(max_n: usize, lo: i64, hi: i64) -> impl Strategy<Value = IntMatrix> {
    matrix(max_n, lo, hi).prop_map(|m| {
        let n = m.size();
        let mut out = IntMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                let v = if i <= j { m.get(i, j) } else { m.get(j, i) };
                out.set(i, j, v.clone());
            }
        }
        out
    })
}

/// Raw material for a random surgery diagram with one marked component:
/// knot data, a linking grid (upper triangle used), component data, a
/// permutation of the knots, and a knot index to orientation-flip.
type DiagramData = (
    Vec<(i64, i64, bool)>,
    Vec<Vec<i64>>,
    (i64, i64, Vec<i64>),
    Vec<usize>,
    usize,
);

fn diagram_data() -> impl Strategy<Value = DiagramData> {
    (1usize..=4).prop_flat_map(|n| {
        (
            proptest::collection::vec((-4i64..=2, -3i64..=3, any::<bool>()), n),
            proptest::collection::vec(proptest::collection::vec(-2i64..=2, n), n),
            (-3i64..=1, -3i64..=3, proptest::collection::vec(-2i64..=2, n)),
            Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
            0..n,
        )
    })
}

fn build_diagram(knots: &[(i64, i64, bool)], grid: &[Vec<i64>]) -> SurgeryDiagram {
    let ks: Vec<SurgeryKnot> = knots
        .iter()
        .map(|&(tb, rot, plus)| SurgeryKnot::new(tb, rot, if plus { 1 } else { -1 }))
        .collect();
    let n = ks.len();
    let mut off = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            off[i][j] = grid[i][j];
            off[j][i] = grid[i][j];
        }
    }
    SurgeryDiagram::new(ks, off).expect("grid is symmetric by construction")
}

proptest! {
    #[test]
    fn det_matches_cofactor_expansion(m in matrix(5, -4, 4)) {
        prop_assert_eq!(linalg::det(&m), common::det_cofactor(&m));
    }

    #[test]
    fn solve_matches_cramer_and_satisfies_system(
        (m, b) in (1usize..=4).prop_flat_map(|n| (
            fixed_matrix(n, -4, 4),
            proptest::collection::vec((-6i64..=6, 1i64..=4), n),
        ))
    ) {
        let b: Vec<Rat> = b.into_iter().map(|(num, den)| rat(num, den)).collect();
        match linalg::solve(&m, &b) {
            Ok(x) => {
                prop_assert_eq!(m.mul_vec(&x), b.clone());
                prop_assert_eq!(Some(x), common::solve_cramer(&m, &b));
            }
            Err(_) => prop_assert!(common::solve_cramer(&m, &b).is_none()),
        }
    }

    #[test]
    fn inertia_matches_sturm_oracle(m in symmetric(4, -4, 4)) {
        let got = linalg::inertia(&m).unwrap();
        let want = common::inertia_sturm(&m);
        prop_assert_eq!(got, want);
        // positives + negatives + nullity = n, so signature + nullity + 2*negatives = n.
        let n = m.size() as i64;
        prop_assert_eq!(
            got.signature() + got.nullity as i64 + 2 * got.negatives as i64,
            n
        );
    }

    #[test]
    fn inertia_is_a_congruence_invariant(m in symmetric(4, -3, 3), seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let u = common::random_unimodular(&mut rng, m.size());
        let transformed = common::congruence(&u, &m);
        prop_assert_eq!(
            linalg::inertia(&m).unwrap(),
            linalg::inertia(&transformed).unwrap()
        );
    }

    #[test]
    fn ncf_round_trips_and_coefficients_are_at_most_minus_two(
        num in -4000i64..=-1,
        den in 1i64..=50,
    ) {
        let q = rat(num, den);
        prop_assume!(q <= -Rat::one());
        let coeffs = ncf_expand(&q).unwrap();
        prop_assert!(coeffs.iter().all(|c| *c <= Int::from(-2)));
        prop_assert_eq!(ncf_eval(&coeffs), q);
    }

    #[test]
    fn honda_count_ignores_stabilizer_shifts(
        num in -300i64..=-1,
        den in 1i64..=24,
        n in -3i64..=3,
    ) {
        let q = rat(num, den);
        prop_assume!(q <= -Rat::one());
        let base = honda_count(&ncf_expand(&q).unwrap());
        let s = Slope::new(q.denom().clone(), q.numer().clone()).unwrap();
        let shifted = stabilizer_shift(&s, n);
        if let Some(value) = shifted.value() {
            if value <= -Rat::one() {
                prop_assert_eq!(honda_count(&ncf_expand(&value).unwrap()), base);
            }
        }
    }

    #[test]
    fn normalization_postconditions(
        (x0, y0, x1, y1) in (-6i64..=6, -6i64..=6, -6i64..=6, -6i64..=6),
    ) {
        prop_assume!((x0, y0) != (0, 0) && (x1, y1) != (0, 0));
        let s0 = Slope::from_i64(x0, y0).unwrap();
        let s1 = Slope::from_i64(x1, y1).unwrap();
        prop_assume!(s0 != s1);
        let Ok((a, value)) = normalize_slopes(&s0, &s1) else {
            // The stabilizer search is bounded; arbitrary pairs may fall outside.
            return Ok(());
        };
        prop_assert_eq!(a.det(), Int::one());
        prop_assert_eq!(a.apply(&s0), Slope::from_i64(-1, 1).unwrap());
        prop_assert!(value <= -Rat::one());
        prop_assert_eq!(a.apply(&s1).value(), Some(value));
    }

    #[test]
    fn boundary_slopes_always_normalize(p in 2i64..=20, t0 in -8i64..=8, t1 in -8i64..=8) {
        let (s0, s1) = hopf_boundary_slopes(p, t0, t1).unwrap();
        if s0 != s1 {
            let (a, value) = normalize_slopes(&s0, &s1).unwrap();
            prop_assert_eq!(a.apply(&s0), Slope::from_i64(-1, 1).unwrap());
            prop_assert!(value <= -Rat::one());
        }
    }

    #[test]
    fn count_matches_closed_form_off_the_small_grid(
        p in 2i64..=12,
        t0 in -6i64..=6,
        t1 in -6i64..=6,
    ) {
        prop_assert_eq!(count_tight(p, t0, t1).unwrap(), closed_form_count(p, t0, t1).unwrap());
    }

    #[test]
    fn classification_rows_are_structured(p in 2i64..=10, t0 in -5i64..=5, t1 in -5i64..=5) {
        let rows = classify(p, t0, t1).unwrap();
        prop_assert_eq!(Int::from(rows.len()), closed_form_count(p, t0, t1).unwrap());
        for r in &rows {
            prop_assert_eq!(r.tbq0.clone(), rat(t0 * p + 1, p));
            prop_assert_eq!(r.tbq1.clone(), rat(t1 * p + 1, p));
        }
        // Swapping the components swaps the framing pair.
        let swapped: Vec<_> = classify(p, t1, t0)
            .unwrap()
            .into_iter()
            .map(|r| (r.tbq1, r.rotq1, r.tbq0, r.rotq0, r.d3))
            .collect();
        let mut lhs: Vec<_> = rows.into_iter().map(|r| r.tuple()).collect();
        let mut rhs = swapped;
        lhs.sort();
        rhs.sort();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn diagram_invariants_survive_relabelling(data in diagram_data()) {
        let (knots, grid, (ctb, crot, links), perm, flip) = data;
        let d = build_diagram(&knots, &grid);
        let m = d.linking_matrix();
        prop_assume!(!linalg::det(&m).is_zero());
        let comp = LinkComponent::new(ctb, crot, links.clone());

        let tb = d.tb_rational(&comp).unwrap();
        let rot = d.rot_rational(&comp).unwrap();
        let d3 = d.d3_invariant().unwrap();
        let order = d.homology_order().unwrap();

        // d3 breakdown recombines to the reported value.
        let recombined = (&d3.c_squared
            - rat(3 * d3.sigma, 1)
            - rat(2 * d3.chi, 1))
            / rat(4, 1)
            + rat(d3.q, 1);
        prop_assert_eq!(recombined, d3.d3.clone());
        // Homology order is |det M|.
        prop_assert_eq!(order.clone(), linalg::det(&m).abs());

        // Relabelling the surgery knots changes nothing.
        let n = knots.len();
        let pknots: Vec<_> = perm.iter().map(|&i| knots[i]).collect();
        let mut pgrid = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let a = perm[i].min(perm[j]);
                let b = perm[i].max(perm[j]);
                if a != b {
                    pgrid[i][j] = grid[a][b];
                }
            }
        }
        let pd = build_diagram(&pknots, &pgrid);
        let plinks: Vec<i64> = perm.iter().map(|&i| links[i]).collect();
        let pcomp = LinkComponent::new(ctb, crot, plinks);
        prop_assert_eq!(pd.tb_rational(&pcomp).unwrap(), tb.clone());
        prop_assert_eq!(pd.rot_rational(&pcomp).unwrap(), rot.clone());
        prop_assert_eq!(pd.d3_invariant().unwrap().d3, d3.d3.clone());
        prop_assert_eq!(pd.homology_order().unwrap(), order);

        // Reversing the component orientation negates rot_Q and its linking
        // numbers, and fixes tb_Q.
        let rcomp = LinkComponent::new(ctb, -crot, links.iter().map(|v| -v).collect());
        prop_assert_eq!(d.tb_rational(&rcomp).unwrap(), tb.clone());
        prop_assert_eq!(d.rot_rational(&rcomp).unwrap(), -&rot);

        // Reversing one surgery knot negates its rot and its row and column
        // of linking numbers; every invariant is unchanged.
        let mut fknots = knots.clone();
        fknots[flip].1 = -fknots[flip].1;
        let mut fgrid = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let v = if i == flip || j == flip { -grid[i][j] } else { grid[i][j] };
                fgrid[i][j] = v;
                fgrid[j][i] = v;
            }
        }
        let fd = build_diagram(&fknots, &fgrid);
        let mut flinks = links.clone();
        flinks[flip] = -flinks[flip];
        let fcomp = LinkComponent::new(ctb, crot, flinks);
        prop_assert_eq!(fd.tb_rational(&fcomp).unwrap(), tb);
        prop_assert_eq!(fd.rot_rational(&fcomp).unwrap(), rot);
        prop_assert_eq!(fd.d3_invariant().unwrap().d3, d3.d3);
    }

    #[test]
    fn diagram_files_round_trip_through_json(data in diagram_data()) {
        let (knots, grid, (ctb, crot, links), _, _) = data;
        let d = build_diagram(&knots, &grid);
        let file = DiagramFile {
            knots: d.knots().to_vec(),
            offdiag: d.offdiag().to_vec(),
            components: vec![
                LinkComponent::named("L0", ctb, crot, links.clone()),
                LinkComponent::new(ctb, crot, links),
            ],
        };
        let parsed = DiagramFile::from_json(&file.to_json()).unwrap();
        prop_assert_eq!(parsed, file);
    }
}
