//! Line-oriented circuit text format.
//!
//! ```text
//! QCIRC v1 qubits=2 name=example
//! # comment
//! GATE H target=0 controls=[] u=[0.70710678118654757,0;0.70710678118654757,0;...]
//! GATE X target=1 controls=[0:1] u=[0,0;1,0;1,0;0,0]
//! ```
//!
//! Controls are `qubit:polarity` with polarity `1` (fires on 1) or `0` (fires
//! on 0). Numbers carry 17 significant digits, enough to reproduce every
//! `f64` exactly.

use std::fmt::Write as _;

use num_complex::Complex64;

use super::{Circuit, ControlSpec, Gate, GateLabel, Mat2, Polarity};
use crate::error::{Error, Result};

const MAGIC: &str = "QCIRC";
const VERSION: &str = "v1";

/// Formats like C's `%.17g`.
pub fn format_sig17(x: f64) -> String {
    if x == 0.0 {
        return if x.is_sign_negative() {
            "-0".into()
        } else {
            "0".into()
        };
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    if (-4..17).contains(&exp) {
        let decimals = (16 - exp) as usize;
        trim_fraction(&format!("{x:.decimals$}")).to_string()
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_fraction(mantissa), exp.abs())
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn serialize(c: &Circuit) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{MAGIC} {VERSION} qubits={} name={}",
        c.qubits(),
        c.name()
    )
    .unwrap();
    for g in c.gates() {
        let controls: Vec<String> = g
            .controls
            .iter()
            .map(|ctl| {
                let p = match ctl.polarity {
                    Polarity::One => 1,
                    Polarity::Zero => 0,
                };
                format!("{}:{p}", ctl.qubit)
            })
            .collect();
        let entries: Vec<String> = g
            .payload
            .0
            .iter()
            .map(|z| format!("{},{}", format_sig17(z.re), format_sig17(z.im)))
            .collect();
        writeln!(
            out,
            "GATE {} target={} controls=[{}] u=[{}]",
            g.label,
            g.target,
            controls.join(","),
            entries.join(";")
        )
        .unwrap();
    }
    out
}

pub fn parse(text: &str) -> Result<Circuit> {
    let mut circuit: Option<Circuit> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |reason: String| Error::Parse {
            line: line_no,
            reason,
        };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match circuit.as_mut() {
            None => circuit = Some(parse_header(line).map_err(err)?),
            Some(c) => {
                let gate = parse_gate(line).map_err(err)?;
                c.push(gate).map_err(|e| err(e.to_string()))?;
            }
        }
    }
    circuit.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        reason: "missing QCIRC header".into(),
    })
}

fn parse_header(line: &str) -> std::result::Result<Circuit, String> {
    let rest = line
        .strip_prefix(MAGIC)
        .ok_or_else(|| format!("expected `{MAGIC} {VERSION} qubits=<int> name=<string>`"))?
        .trim_start();
    let rest = rest
        .strip_prefix(VERSION)
        .ok_or_else(|| format!("unsupported version, expected `{VERSION}`"))?
        .trim_start();
    let (qubits_field, name_field) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
    let qubits: usize = field(qubits_field, "qubits")?
        .parse()
        .map_err(|e| format!("bad qubit count: {e}"))?;
    if qubits == 0 {
        return Err("qubit count must be positive".into());
    }
    let name = field(name_field.trim(), "name")?;
    Ok(Circuit::new(qubits, name))
}

fn field<'a>(token: &'a str, key: &str) -> std::result::Result<&'a str, String> {
    token
        .strip_prefix(key)
        .and_then(|r| r.strip_prefix('='))
        .ok_or_else(|| format!("expected `{key}=...`, found `{token}`"))
}

fn parse_gate(line: &str) -> std::result::Result<Gate, String> {
    let mut tokens = line.split_whitespace();
    if tokens.next() != Some("GATE") {
        return Err(format!("expected a GATE line, found `{line}`"));
    }
    let label: GateLabel = tokens.next().ok_or("missing gate label")?.parse()?;
    let target: usize = field(tokens.next().ok_or("missing target=")?, "target")?
        .parse()
        .map_err(|e| format!("bad target: {e}"))?;
    let controls = parse_controls(field(
        tokens.next().ok_or("missing controls=")?,
        "controls",
    )?)?;
    let payload = parse_payload(field(tokens.next().ok_or("missing u=")?, "u")?)?;
    if let Some(extra) = tokens.next() {
        return Err(format!("unexpected trailing token `{extra}`"));
    }
    Ok(Gate {
        target,
        controls,
        payload,
        label,
    })
}

fn brackets(s: &str) -> std::result::Result<&str, String> {
    s.strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| format!("expected `[...]`, found `{s}`"))
}

fn parse_controls(s: &str) -> std::result::Result<Vec<ControlSpec>, String> {
    let inner = brackets(s)?;
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|item| {
            let (q, p) = item
                .split_once(':')
                .ok_or_else(|| format!("control `{item}` is not `<qubit>:<0|1>`"))?;
            let qubit = q
                .parse()
                .map_err(|e| format!("bad control qubit `{q}`: {e}"))?;
            let polarity = match p {
                "1" => Polarity::One,
                "0" => Polarity::Zero,
                other => return Err(format!("bad control polarity `{other}`")),
            };
            Ok(ControlSpec { qubit, polarity })
        })
        .collect()
}

fn parse_payload(s: &str) -> std::result::Result<Mat2, String> {
    let inner = brackets(s)?;
    let entries: Vec<&str> = inner.split(';').collect();
    if entries.len() != 4 {
        return Err(format!("payload needs 4 entries, found {}", entries.len()));
    }
    let mut out = [Complex64::new(0.0, 0.0); 4];
    for (slot, entry) in out.iter_mut().zip(entries) {
        let (re, im) = entry
            .split_once(',')
            .ok_or_else(|| format!("entry `{entry}` is not `<re>,<im>`"))?;
        let num = |t: &str| {
            t.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| format!("bad number `{t}`"))
        };
        *slot = Complex64::new(num(re)?, num(im)?);
    }
    Ok(Mat2(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig17_formatting() {
        assert_eq!(
            format_sig17(std::f64::consts::FRAC_1_SQRT_2),
            "0.70710678118654757"
        );
        assert_eq!(format_sig17(0.7071067811865475), "0.70710678118654746");
        assert_eq!(format_sig17(1.0), "1");
        assert_eq!(format_sig17(-0.5), "-0.5");
        assert_eq!(format_sig17(0.0), "0");
        assert_eq!(format_sig17(1e-20), "9.9999999999999995e-21");
        assert_eq!(format_sig17(1.2345e-5), "1.2345e-05");
        assert_eq!(format_sig17(6.02e23), "6.02e+23");
        for x in [1.0 / 3.0, -2.0f64.sqrt(), 6.02e23, 1e-300, 123456.789] {
            assert_eq!(format_sig17(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn header_only() {
        let c = Circuit::new(3, "empty");
        let text = serialize(&c);
        assert_eq!(text, "QCIRC v1 qubits=3 name=empty\n");
        assert_eq!(parse(&text).unwrap(), c);
    }

    #[test]
    fn comments_and_blanks_are_ignored() {
        let text = "# leading\n\nQCIRC v1 qubits=2 name=x # trailing\n\nGATE X target=1 controls=[0:1] u=[0,0;1,0;1,0;0,0]\n";
        let c = parse(text).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.gates()[0].controls, vec![ControlSpec::on_one(0)]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let text = "QCIRC v1 qubits=4 name=x\nGATE H target=9 controls=[] u=[0.70710678118654757,0;0.70710678118654757,0;0.70710678118654757,0;-0.70710678118654757,0]\n";
        match parse(text) {
            Err(Error::Parse { line: 2, reason }) => {
                assert!(reason.contains("out of range"), "{reason}")
            }
            other => panic!("unexpected {other:?}"),
        }

        let cases = [
            ("QCIRC v2 qubits=1 name=x\n", 1),
            ("QCIRC v1 qubits=0 name=x\n", 1),
            (
                "QCIRC v1 qubits=1 name=x\nGATE H target=0 controls=[] u=[1,0;0,0]\n",
                2,
            ),
            (
                "QCIRC v1 qubits=2 name=x\n\nGATE X target=0 controls=[1:2] u=[0,0;1,0;1,0;0,0]\n",
                3,
            ),
            (
                "QCIRC v1 qubits=2 name=x\nGATE X target=0 controls=[] u=[1,0;1,0;0,0;1,0]\n",
                2,
            ),
            ("QCIRC v1 qubits=2 name=x\nMEASURE 0\n", 2),
            ("", 1),
        ];
        for (text, line) in cases {
            match parse(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text}"),
                other => panic!("expected parse error for {text:?}, got {other:?}"),
            }
        }
    }
}
