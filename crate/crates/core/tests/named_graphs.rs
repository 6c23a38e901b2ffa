use orelab_core::coloring::{is_4_colorable, is_5_critical, is_k_colorable};
use orelab_core::discharge::closing_inequalities;
use orelab_core::ore::OreRecognizer;
use orelab_core::potential::{p_ky, structure_lemma_audit, verify_main_theorem, TheoremCase};
use orelab_core::{families, Rat21, Rat84};

#[test]
fn witnesses_are_five_critical_and_not_ore() {
    let mut rec = OreRecognizer::new();
    for g in [families::c5_join_k2(), families::k1_join_groetzsch(), families::mycielski_groetzsch()] {
        assert!(is_5_critical(&g));
        assert!(p_ky(&g) <= 2);
        assert!(rec.recognize(&g).is_none());
        let report = verify_main_theorem(&g, &mut rec).unwrap();
        assert_eq!(report.case, TheoremCase::Other);
        assert_eq!(report.bound, Rat21::from_numerator(57));
        assert!(report.holds);
        let closing = closing_inequalities(&g).unwrap();
        assert!(closing.edge_bound_holds() && closing.cover_holds());
        assert!(closing.ledger.conserved());
    }
}

#[test]
fn triangle_free_witness() {
    let g = families::mycielski_groetzsch();
    assert_eq!((g.n(), g.edge_count()), (23, 71));
    assert!(g.is_triangle_free());
    assert!(!is_4_colorable(&g));
    assert!(is_k_colorable(&g, 5).is_some());
    let report = verify_main_theorem(&g, &mut OreRecognizer::new()).unwrap();
    // 84 * 71 - (190 * 23 - 105) = 5964 - 4265
    assert_eq!(report.triangle_free_slack, Some(Rat84::from_numerator(5964 - 4265)));
    let audit = structure_lemma_audit(&g, &mut OreRecognizer::new()).unwrap();
    assert!(audit.gems.ungemmed);
}
