use std::fmt;

use super::{CircuitIr, Gate, Init, InitState, Step, GATES, INIT_STATES};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    EmptyCircuit,
    WiresNotFirst,
    WiresRedeclared,
    UnknownDirective(String),
    UnknownGate(String),
    UnknownWire(String),
    DuplicateWire(String),
    UseAfterDiscard(String),
    InitAfterGate,
    DuplicateInit(String),
    UnknownState(String),
    SameWire(String),
    NoLiveWires(String),
    Arity {
        directive: &'static str,
        usage: &'static str,
    },
}

/// A diagnostic tied to a 1-based source line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ParseErrorKind::*;
        write!(f, "line {}: ", self.line)?;
        match &self.kind {
            EmptyCircuit => write!(f, "empty circuit: expected `wires <name>+`"),
            WiresNotFirst => write!(f, "`wires` must be the first directive"),
            WiresRedeclared => write!(f, "`wires` may only appear once"),
            UnknownDirective(d) => write!(f, "unknown directive `{d}`"),
            UnknownGate(g) => write!(
                f,
                "unknown gate `{g}` (expected one of {})",
                GATES.join(", ")
            ),
            UnknownWire(w) => write!(f, "unknown wire `{w}`"),
            DuplicateWire(w) => write!(f, "duplicate wire `{w}`"),
            UseAfterDiscard(w) => write!(f, "wire `{w}` used after discard"),
            InitAfterGate => write!(f, "`init` after the first gate, measure or discard"),
            DuplicateInit(w) => write!(f, "wire `{w}` initialized twice"),
            UnknownState(s) => write!(
                f,
                "unknown state `{s}` (expected one of {}, or `epr` for two wires)",
                INIT_STATES.join(", ")
            ),
            SameWire(w) => write!(f, "wire `{w}` used twice in one directive"),
            NoLiveWires(w) => write!(f, "discarding `{w}` would leave no live wires"),
            Arity { directive, usage } => write!(f, "malformed `{directive}`; usage: {usage}"),
        }
    }
}

impl std::error::Error for ParseError {}

struct Parser {
    wires: Vec<String>,
    live: Vec<bool>,
    initialized: Vec<bool>,
    inits: Vec<Init>,
    steps: Vec<Step>,
}

impl Parser {
    fn wire(&self, name: &str, line: usize) -> Result<usize, ParseError> {
        let idx = self
            .wires
            .iter()
            .position(|w| w == name)
            .ok_or_else(|| err(line, ParseErrorKind::UnknownWire(name.to_string())))?;
        if !self.live[idx] {
            return Err(err(line, ParseErrorKind::UseAfterDiscard(name.to_string())));
        }
        Ok(idx)
    }

    fn distinct(&self, a: usize, b: usize, line: usize) -> Result<(), ParseError> {
        if a == b {
            Err(err(line, ParseErrorKind::SameWire(self.wires[a].clone())))
        } else {
            Ok(())
        }
    }

    fn init_wire(&mut self, w: usize, line: usize) -> Result<(), ParseError> {
        if std::mem::replace(&mut self.initialized[w], true) {
            return Err(err(
                line,
                ParseErrorKind::DuplicateInit(self.wires[w].clone()),
            ));
        }
        Ok(())
    }

    fn directive(&mut self, tokens: &[&str], line: usize) -> Result<(), ParseError> {
        use ParseErrorKind::*;
        let arity = |directive, usage| err(line, Arity { directive, usage });
        match tokens {
            ["wires", ..] => Err(err(line, WiresRedeclared)),
            ["init", rest @ ..] => {
                if !self.steps.is_empty() {
                    return Err(err(line, InitAfterGate));
                }
                match rest {
                    [a, b, "epr"] => {
                        let (l, r) = (self.wire(a, line)?, self.wire(b, line)?);
                        self.distinct(l, r, line)?;
                        self.init_wire(l, line)?;
                        self.init_wire(r, line)?;
                        self.inits.push(Init::Epr { left: l, right: r });
                    }
                    [w, state] => {
                        let wire = self.wire(w, line)?;
                        let state = InitState::parse(state)
                            .ok_or_else(|| err(line, UnknownState(state.to_string())))?;
                        self.init_wire(wire, line)?;
                        self.inits.push(Init::Single { wire, state });
                    }
                    [_, _, s] => return Err(err(line, UnknownState(s.to_string()))),
                    _ => {
                        return Err(arity(
                            "init",
                            "init <wire> <state> | init <wire> <wire> epr",
                        ))
                    }
                }
                Ok(())
            }
            ["gate", rest @ ..] => {
                let [g, w] = rest else {
                    return Err(arity("gate", "gate <G> <wire>"));
                };
                let gate = Gate::parse(g).ok_or_else(|| err(line, UnknownGate(g.to_string())))?;
                let wire = self.wire(w, line)?;
                self.steps.push(Step::Gate {
                    gate,
                    controlled: false,
                    operands: vec![wire],
                    line,
                });
                Ok(())
            }
            ["cgate", rest @ ..] => {
                let [g, c, t] = rest else {
                    return Err(arity("cgate", "cgate <G> <control> <target>"));
                };
                let gate = Gate::parse(g).ok_or_else(|| err(line, UnknownGate(g.to_string())))?;
                let (ctrl, tgt) = (self.wire(c, line)?, self.wire(t, line)?);
                self.distinct(ctrl, tgt, line)?;
                self.steps.push(Step::Gate {
                    gate,
                    controlled: true,
                    operands: vec![ctrl, tgt],
                    line,
                });
                Ok(())
            }
            ["measure", rest @ ..] => {
                let [w] = rest else {
                    return Err(arity("measure", "measure <wire>"));
                };
                let wire = self.wire(w, line)?;
                self.steps.push(Step::Measure { wire, line });
                Ok(())
            }
            ["discard", rest @ ..] => {
                let [w] = rest else {
                    return Err(arity("discard", "discard <wire>"));
                };
                let wire = self.wire(w, line)?;
                if self.live.iter().filter(|&&l| l).count() == 1 {
                    return Err(err(line, NoLiveWires(w.to_string())));
                }
                self.live[wire] = false;
                self.steps.push(Step::Discard { wire, line });
                Ok(())
            }
            [other, ..] => Err(err(line, UnknownDirective(other.to_string()))),
            [] => Ok(()),
        }
    }
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

/// Parse circuit text. Accepts LF or CRLF line endings; `#` starts a comment.
/// Wires without an `init` start in `F`.
pub fn parse_circuit(text: &str) -> Result<CircuitIr, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| {
            let code = raw.split('#').next().unwrap_or("");
            (i + 1, code.split_whitespace().collect::<Vec<_>>())
        })
        .filter(|(_, tokens)| !tokens.is_empty());

    let Some((first_line, header)) = lines.next() else {
        return Err(err(1, ParseErrorKind::EmptyCircuit));
    };
    let names = match header.as_slice() {
        ["wires", names @ ..] if !names.is_empty() => names,
        ["wires"] | [] => {
            return Err(err(
                first_line,
                ParseErrorKind::Arity {
                    directive: "wires",
                    usage: "wires <name>+",
                },
            ))
        }
        _ => return Err(err(first_line, ParseErrorKind::WiresNotFirst)),
    };
    let mut wires: Vec<String> = Vec::with_capacity(names.len());
    for n in names {
        if wires.iter().any(|w| w == n) {
            return Err(err(
                first_line,
                ParseErrorKind::DuplicateWire(n.to_string()),
            ));
        }
        wires.push(n.to_string());
    }

    let n = wires.len();
    let mut parser = Parser {
        wires,
        live: vec![true; n],
        initialized: vec![false; n],
        inits: Vec::new(),
        steps: Vec::new(),
    };
    for (line, tokens) in lines {
        parser.directive(&tokens, line)?;
    }
    Ok(CircuitIr {
        wires: parser.wires,
        inits: parser.inits,
        steps: parser.steps,
    })
}
