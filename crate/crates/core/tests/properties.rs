mod common;

#[test]
fn field_axioms_hold() {
    common::field_axioms(1000).unwrap();
}

#[test]
fn galois_action_is_a_group_action_by_automorphisms() {
    common::galois_group_law(300).unwrap();
}

#[test]
fn norm_is_multiplicative() {
    common::norm_multiplicative(300).unwrap();
}

#[test]
fn parity_rule_matches_certified_signs() {
    assert_eq!(common::parity_sweep().unwrap(), 2 * 13 * 13);
}

#[test]
fn orbit_maximality_matches_log_oracle() {
    assert_eq!(common::orbit_max_oracle().unwrap(), 735);
}

#[test]
fn single_entry_mutants_are_caught() {
    assert!(common::mutants_caught().unwrap() >= 50);
}
