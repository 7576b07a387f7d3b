use qtrig_core::circuit::{parse, serialize, to_qasm3};
use qtrig_core::nummat::max_abs_diff;
use qtrig_core::{circuit_unitary, trig_transform_circuit, SynthesisParams, TransformKind};

#[test]
fn text_format_preserves_unitaries() {
    for kind in TransformKind::ALL {
        for n in 1..=4 {
            let c = trig_transform_circuit(SynthesisParams::new(kind, n).unwrap()).unwrap();
            let text = serialize(&c);
            let back = parse(&text).unwrap();
            assert_eq!(back.name(), c.name());
            assert_eq!(back.len(), c.len());
            assert_eq!(serialize(&back), text);
            let err = max_abs_diff(
                &circuit_unitary(&back).unwrap(),
                &circuit_unitary(&c).unwrap(),
            )
            .unwrap();
            assert!(err <= 1e-14, "{kind} n={n}: {err:e}");
        }
    }
}

#[test]
fn header_names_the_transform() {
    let c =
        trig_transform_circuit(SynthesisParams::new("dct2".parse().unwrap(), 3).unwrap()).unwrap();
    assert!(serialize(&c).starts_with("QCIRC v1 qubits=4 name=dct2_n3\n"));
    let c =
        trig_transform_circuit(SynthesisParams::new("dst1".parse().unwrap(), 1).unwrap()).unwrap();
    assert_eq!(c.qubits(), 2);
}

#[test]
fn qasm_export_has_one_operation_per_gate() {
    let c =
        trig_transform_circuit(SynthesisParams::new("dst4".parse().unwrap(), 2).unwrap()).unwrap();
    let q = to_qasm3(&c);
    assert!(q.starts_with("OPENQASM 3.0;\n"));
    assert_eq!(q.lines().filter(|l| l.contains("U(")).count(), c.len());
}
