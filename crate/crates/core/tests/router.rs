mod common;

use std::path::PathBuf;

use qarrow::circuits::{teleport, toffoli_super};
use qarrow::density::DensityJson;
use qarrow::linear::hadamard;
use qarrow::textcircuit::{initial_density, parse_circuit, route, StageKind};
use qarrow::vector::{epr, q_false, q_ft, q_true};
use qarrow::{Basis, DensityMatrix, Superoperator};

fn circuit_file(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("circuits")
        .join(name)
}

fn routed(text: &str) -> qarrow::textcircuit::RoutedPipeline {
    route(&parse_circuit(text).unwrap()).unwrap()
}

#[test]
fn shipped_toffoli_matches_catalog() {
    let text = std::fs::read_to_string(circuit_file("toffoli.qc")).unwrap();
    let ir = parse_circuit(&text).unwrap();
    assert_eq!(ir.steps.len(), 7);
    let p = route(&ir).unwrap();
    let cmp = p
        .compose()
        .unwrap()
        .extensional_eq(&toffoli_super(), 1e-9)
        .unwrap();
    assert!(cmp.equal, "max diff {}", cmp.max_diff);

    let out = p.apply(&initial_density(&ir).unwrap()).unwrap();
    let ttt = DensityMatrix::pure(&q_true().tensor(&q_true()).tensor(&q_true()));
    assert!(out.max_abs_diff(&ttt).unwrap() <= 1e-9);
}

#[test]
fn shipped_teleport_matches_catalog() {
    let text = std::fs::read_to_string(circuit_file("teleport.qc")).unwrap();
    let ir = parse_circuit(&text).unwrap();
    let p = route(&ir).unwrap();
    assert_eq!(p.output_wires, vec!["eprR"]);
    let cmp = p
        .compose()
        .unwrap()
        .extensional_eq(&teleport(), 1e-9)
        .unwrap();
    assert!(cmp.equal, "max diff {}", cmp.max_diff);

    let out = p.apply(&initial_density(&ir).unwrap()).unwrap();
    assert!(out.max_abs_diff(&DensityMatrix::pure(&q_ft())).unwrap() <= 1e-9);
}

#[test]
fn single_wire_gate_needs_no_permutation() {
    let p = routed("wires q\ngate H q\n");
    assert_eq!(p.stages.len(), 1);
    assert!(!p
        .stages
        .iter()
        .any(|s| matches!(s.kind, StageKind::Permute { .. })));
    assert!(
        p.compose()
            .unwrap()
            .extensional_eq(&Superoperator::lift(&hadamard()), 1e-12)
            .unwrap()
            .equal
    );
}

#[test]
fn measuring_ft_decoheres() {
    let ir = parse_circuit("wires q\ninit q FT\nmeasure q\n").unwrap();
    let out = route(&ir)
        .unwrap()
        .apply(&initial_density(&ir).unwrap())
        .unwrap();
    let half = DensityMatrix::diagonal(&Basis::boolean(), &[0.5, 0.5]).unwrap();
    assert!(out.max_abs_diff(&half).unwrap() <= 1e-12);
}

#[test]
fn gate_order_matters() {
    let hx = routed("wires q\ngate H q\ngate X q\n").compose().unwrap();
    let xh = routed("wires q\ngate X q\ngate H q\n").compose().unwrap();
    let cmp = hx.extensional_eq(&xh, 1e-9).unwrap();
    assert!(!cmp.equal);
    assert!(cmp.max_diff > 0.1);
}

#[test]
fn router_agrees_with_hand_composition() {
    // cgate X c a on (a, b, c): bring (c, a) to the front, act, restore.
    let p = routed("wires a b c\ncgate X c a\n").compose().unwrap();
    let b3 = Basis::qubits(3).unwrap();
    let cnot = Superoperator::lift(&qarrow::linear::controlled(&qarrow::linear::qnot()).unwrap());
    let hand = Superoperator::permute(&b3, &[2, 0, 1])
        .unwrap()
        .then(&cnot.first(&Basis::boolean()))
        .unwrap()
        .then(&Superoperator::permute(&b3, &[1, 2, 0]).unwrap())
        .unwrap();
    assert!(p.extensional_eq(&hand, 1e-9).unwrap().equal);
    // And against the bit-level truth table: a ^= c.
    let table = Superoperator::arr(&b3, &b3, |i| i ^ ((i & 1) << 2)).unwrap();
    assert!(p.extensional_eq(&table, 1e-9).unwrap().equal);
}

#[test]
fn permutation_stages_are_unitary_channels() {
    let text = std::fs::read_to_string(circuit_file("toffoli.qc")).unwrap();
    let p = routed(&text);
    let mut seen = 0;
    for stage in p
        .stages
        .iter()
        .filter(|s| matches!(s.kind, StageKind::Permute { .. }))
    {
        seen += 1;
        let s = &stage.superop;
        let n = s.input().size();
        for a1 in 0..n {
            for a2 in 0..n {
                let block = s.block(a1, a2);
                let nonzero: Vec<_> = block.entries().iter().filter(|z| z.norm() != 0.0).collect();
                assert_eq!(nonzero.len(), 1);
                assert_eq!(*nonzero[0], qarrow::Amplitude::new(1.0, 0.0));
                if a1 == a2 {
                    assert_eq!(block.trace(), qarrow::Amplitude::new(1.0, 0.0));
                }
            }
        }
    }
    assert!(seen > 0);
}

#[test]
fn epr_across_non_adjacent_wires() {
    let ir = parse_circuit("wires a b c\ninit a c epr\ninit b T\n").unwrap();
    let d = initial_density(&ir).unwrap();
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut amps = vec![common::c(0.0, 0.0); 8];
    amps[0b010] = common::c(s, 0.0);
    amps[0b111] = common::c(s, 0.0);
    assert!(common::max_diff(&common::density_matrix(&d), &common::projector(&amps)) <= 1e-12);
}

#[test]
fn uninitialized_wires_start_false() {
    let ir = parse_circuit("wires a b\ninit b T\n").unwrap();
    let d = initial_density(&ir).unwrap();
    let expected = DensityMatrix::pure(&q_false().tensor(&q_true()));
    assert!(d.max_abs_diff(&expected).unwrap() <= 1e-15);
}

#[test]
fn discard_matches_partial_trace_of_epr() {
    let ir = parse_circuit("wires l r\ninit l r epr\ndiscard l\n").unwrap();
    let out = route(&ir)
        .unwrap()
        .apply(&initial_density(&ir).unwrap())
        .unwrap();
    let mixed = DensityMatrix::diagonal(&Basis::boolean(), &[0.5, 0.5]).unwrap();
    assert!(out.max_abs_diff(&mixed).unwrap() <= 1e-12);
    let direct = Superoperator::tr_l(&Basis::qubits(2).unwrap())
        .unwrap()
        .apply(&DensityMatrix::pure(&epr()))
        .unwrap();
    assert!(out.max_abs_diff(&direct).unwrap() <= 1e-12);
}

#[test]
fn json_round_trip_at_precision() {
    let ir = parse_circuit("wires a b\ninit a FT\ncgate PHASE a b\ngate H b\n").unwrap();
    let out = route(&ir)
        .unwrap()
        .apply(&initial_density(&ir).unwrap())
        .unwrap();
    for precision in [3, 6, 9] {
        let json = out.to_json(Some(precision));
        let text = serde_json::to_string(&json).unwrap();
        let back: DensityJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, json);
        let reparsed = DensityMatrix::from_json(&back).unwrap();
        assert_eq!(reparsed.to_json(Some(precision)), json);
    }
}
