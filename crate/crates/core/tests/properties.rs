use proptest::prelude::*;

use nakarig::quiver::{Region, RegionKind};
use nakarig::{
    canonicalize, euclid_chain, ext_nonzero, gldim_end, omega, rd_closed_form, rd_of_set, rd_pair,
    region_contains, syzygy_shift, tau, AlgebraParams, Dim, GenCogenSet, Vertex,
};

/// `(n, m)` with `1 <= n <= m <= top`.
fn algebra(top: u32) -> impl Strategy<Value = AlgebraParams> {
    (1..=top)
        .prop_flat_map(move |n| (Just(n), n..=top))
        .prop_filter("needs a stable layer", |&(_, m)| m >= 2)
        .prop_map(|(n, m)| AlgebraParams::new(n, m).unwrap())
}

fn vertex_in(a: AlgebraParams) -> impl Strategy<Value = Vertex> {
    (-50i64..50, 1..a.m() as i64).prop_map(|(x, t)| Vertex::new(x, t))
}

fn algebra_and_vertex(top: u32) -> impl Strategy<Value = (AlgebraParams, Vertex)> {
    algebra(top).prop_flat_map(|a| (Just(a), vertex_in(a)))
}

/// Stable Hom count between uniserials, independent of the regions.
fn stable_hom(x: Vertex, y: Vertex, n: i64, m: i64) -> usize {
    let low = 1.max(x.t + y.t - m + 1);
    (low..=x.t.min(y.t))
        .filter(|&r| (x.x - y.x - y.t + r).rem_euclid(n) == 0)
        .count()
}

fn small_set() -> impl Strategy<Value = GenCogenSet> {
    prop_oneof![
        Just((2u32, 4u32)),
        Just((3, 4)),
        Just((2, 5)),
        Just((3, 5)),
        Just((4, 5))
    ]
    .prop_flat_map(|(n, m)| {
        let a = AlgebraParams::new(n, m).unwrap();
        (0..1u64 << a.stable_count()).prop_map(move |mask| GenCogenSet::from_mask(a, mask))
    })
}

proptest! {
    #[test]
    fn canonicalize_is_idempotent_and_tau_invariant((a, v) in algebra_and_vertex(30), k in -5i64..5) {
        let c = canonicalize(v, a).unwrap();
        prop_assert_eq!(canonicalize(c, a).unwrap(), c);
        prop_assert!((0..a.n() as i64).contains(&c.x));
        let shifted = Vertex::new(v.x + k * a.n() as i64, v.t);
        prop_assert_eq!(canonicalize(shifted, a).unwrap(), c);
        prop_assert_eq!(canonicalize(tau(v, a.n() as i64, a).unwrap(), a).unwrap(), c);
    }

    #[test]
    fn omega_returns_after_one_period((a, v) in algebra_and_vertex(30)) {
        let period = a.omega_period() as i64;
        let c = canonicalize(v, a).unwrap();
        let power = |k| canonicalize(omega(v, k, a).unwrap(), a).unwrap();
        prop_assert_eq!(power(period), c);
        // the orbit length divides the period
        let first = (1..=period).find(|&k| power(k) == c).unwrap();
        prop_assert_eq!(period % first, 0);
    }

    #[test]
    fn ext_predicate_matches_stable_homs(
        (a, x) in algebra_and_vertex(40),
        y_seed in (-50i64..50, 1i64..40),
        i in 1u64..12,
    ) {
        let (n, m) = (a.n() as i64, a.m() as i64);
        let y = Vertex::new(y_seed.0, 1 + (y_seed.1 - 1) % (m - 1));
        let mut z = x;
        for _ in 0..i {
            z = Vertex::new(z.x + z.t, m - z.t);
        }
        let want = stable_hom(z, y, n, m) > 0;
        prop_assert_eq!(ext_nonzero(i, &[x], &[y], a).unwrap(), want);
    }

    #[test]
    fn hammocks_are_dual((a, x) in algebra_and_vertex(25), y_seed in (-50i64..50, 1i64..25)) {
        // x ∈ H^-(y) exactly when y ∈ H^+(x): both say the stable Hom(x, y) is nonzero
        let y = Vertex::new(y_seed.0, 1 + (y_seed.1 - 1) % (a.m() as i64 - 1));
        let minus = region_contains(Region { anchor: y, kind: RegionKind::HMinus }, x, a).unwrap();
        let plus = region_contains(Region { anchor: x, kind: RegionKind::HPlus }, y, a).unwrap();
        prop_assert_eq!(minus, plus);
    }

    #[test]
    fn closed_form_matches_regions(a in algebra(200).prop_filter("n > 1", |a| a.n() > 1), t_seed in 1u32..200) {
        let t = 1 + (t_seed - 1) % (a.m() - 1);
        let v = [Vertex::new(0, t as i64)];
        prop_assert_eq!(Dim::Finite(rd_closed_form(t, a).unwrap()), rd_pair(&v, &v, a).unwrap());
    }

    #[test]
    fn chain_reconstructs_parameters(a in algebra(500)) {
        let chain = euclid_chain(a).unwrap();
        let g = num_integer::gcd(a.n() as u64, a.m() as u64);
        prop_assert_eq!(chain.gcd(), g);
        prop_assert_eq!(chain.fib(chain.d() + 1) * g, a.n() as u64);
    }

    #[test]
    fn json_round_trip(set in small_set()) {
        let text = set.to_json();
        prop_assert_eq!(GenCogenSet::from_json(&text).unwrap(), set.clone());
        prop_assert_eq!(GenCogenSet::from_json(&text).unwrap().to_json(), text);
    }

    #[test]
    fn rotation_preserves_invariants(set in small_set(), k in 0i64..6) {
        let turned = set.rotate(k);
        prop_assert_eq!(gldim_end(&turned), gldim_end(&set));
        prop_assert_eq!(rd_of_set(&turned), rd_of_set(&set));
    }

    #[test]
    fn rd_drops_when_members_are_added(set in small_set(), pick in 0usize..64) {
        let a = set.params();
        let v = a.vertex_at(pick % a.stable_count());
        let mut bigger = set.clone();
        bigger.insert(v);
        prop_assert!(rd_of_set(&bigger) <= rd_of_set(&set));
    }

    #[test]
    fn syzygy_shift_keeps_rd(set in small_set()) {
        prop_assert_eq!(rd_of_set(&syzygy_shift(&set)), rd_of_set(&set));
    }
}
