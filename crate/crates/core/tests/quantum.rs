use toda2_core::quantum::{build_lax, hamiltonians, monodromy, LaxKind, ModelParams, Preset};
use toda2_core::Scalar;

#[test]
fn local_lax_entries_at_distinct_sites_commute() {
    let p = ModelParams::generic(3);
    let (l1, l2) = (Scalar::var("lam1"), Scalar::var("lam2"));
    for n in 1..=3 {
        for m in (1..=3).filter(|&m| m != n) {
            let a = build_lax(LaxKind::LLoc, n, &l1, &p).unwrap();
            let b = build_lax(LaxKind::LLoc, m, &l2, &p).unwrap();
            for x in a.entries() {
                for y in b.entries() {
                    assert!(x.commutator(y).unwrap().is_zero(), "sites {n}, {m}");
                }
            }
        }
    }
}

#[test]
fn same_site_local_entries_do_not_all_commute() {
    let p = ModelParams::generic(2);
    let a = build_lax(LaxKind::LLoc, 1, &Scalar::var("lam1"), &p).unwrap();
    let b = build_lax(LaxKind::LLoc, 1, &Scalar::var("lam2"), &p).unwrap();
    let any = a.entries().iter().any(|x| {
        b.entries()
            .iter()
            .any(|y| !x.commutator(y).unwrap().is_zero())
    });
    assert!(any);
}

#[test]
fn oscillator_hamiltonians_come_from_the_oscillator_transfer_matrix() {
    for n in 1..=3u32 {
        let p = ModelParams::preset(Preset::QOsc, n);
        let lam = Scalar::var("lam");
        let t = monodromy(&p, |k| build_lax(LaxKind::LQOsc, k, &lam, &p))
            .unwrap()
            .trace()
            .unwrap()
            .0;
        let hs = hamiltonians(&p).unwrap();
        assert_eq!(hs.len(), n as usize + 1);
        for (j, h) in hs.iter().enumerate() {
            let mut c = t.coeff_of("lam", n as i32 - j as i32);
            if j % 2 == 1 {
                c = c.neg();
            }
            assert!(c.sub(h).unwrap().is_zero(), "N={n}, H_{j}");
        }
    }
}
