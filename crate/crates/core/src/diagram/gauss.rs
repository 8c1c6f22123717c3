use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{DiagramError, LinkDiagram, Passage, Sign, StrandRole};

/// Parses a signed Gauss code such as `O1+ U2+ ; U1+ O2+`.
///
/// Components are separated by `;` and passages by whitespace. A token is
/// `O` or `U`, a positive crossing id, then `+` or `-` (`−` is accepted).
/// An empty component is a free loop, so the empty string is the unknot.
pub fn parse_gauss(text: &str) -> Result<LinkDiagram, DiagramError> {
    let mut components: Vec<Vec<Passage>> = vec![Vec::new()];
    let mut line = 1;
    let mut column = 0;
    let mut chars = text.chars().peekable();

    let syntax = |line, column, message: &str| DiagramError::Syntax {
        line,
        column,
        message: message.into(),
    };

    while let Some(c) = chars.next() {
        column += 1;
        match c {
            '\n' => {
                line += 1;
                column = 0;
            }
            ';' => components.push(Vec::new()),
            c if c.is_whitespace() => {}
            'O' | 'o' | 'U' | 'u' => {
                let start = column;
                let role = if c.eq_ignore_ascii_case(&'O') {
                    StrandRole::Over
                } else {
                    StrandRole::Under
                };
                let mut id: u32 = 0;
                let mut digits = 0;
                while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                    chars.next();
                    column += 1;
                    digits += 1;
                    id = id
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(d))
                        .ok_or_else(|| syntax(line, start, "crossing id too large"))?;
                }
                if digits == 0 {
                    return Err(syntax(line, column + 1, "expected a crossing id"));
                }
                if id == 0 {
                    return Err(syntax(line, start, "crossing ids start at 1"));
                }
                let sign = match chars.next() {
                    Some('+') => Sign::Positive,
                    Some('-') | Some('−') => Sign::Negative,
                    Some(other) => {
                        return Err(syntax(
                            line,
                            column + 1,
                            &format!("expected '+' or '-', found {other:?}"),
                        ))
                    }
                    None => {
                        return Err(syntax(
                            line,
                            column + 1,
                            "expected '+' or '-', found end of input",
                        ))
                    }
                };
                column += 1;
                if let Some(&next) = chars.peek() {
                    if !(next.is_whitespace() || next == ';') {
                        return Err(syntax(
                            line,
                            column + 1,
                            "expected whitespace or ';' after a passage",
                        ));
                    }
                }
                components.last_mut().expect("never empty").push(Passage {
                    crossing: id,
                    role,
                    sign,
                });
            }
            other => {
                return Err(syntax(
                    line,
                    column,
                    &format!("unexpected character {other:?}"),
                ))
            }
        }
    }
    LinkDiagram::new(components)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn syntax_at(text: &str) -> (usize, usize) {
        match parse_gauss(text) {
            Err(DiagramError::Syntax { line, column, .. }) => (line, column),
            other => panic!("expected a syntax error, got {other:?}"),
        }
    }

    #[test]
    fn accepts_variants() {
        let a = parse_gauss("O1+ U2+ ; U1+ O2+").unwrap();
        let b = parse_gauss("o1+\tu2+;\n u1+ o2+\n").unwrap();
        assert_eq!(a, b);
        let neg = parse_gauss("O1− U1−").unwrap();
        assert_eq!(neg.crossings()[0].sign, Sign::Negative);
    }

    #[test]
    fn empty_is_unknot() {
        let d = parse_gauss("").unwrap();
        assert_eq!((d.component_count(), d.semiarc_count()), (1, 1));
        assert_eq!(parse_gauss("   ").unwrap(), d);
    }

    #[test]
    fn syntax_errors_have_positions() {
        assert_eq!(syntax_at("O1+ X2+"), (1, 5));
        assert_eq!(syntax_at("O1+\nU+"), (2, 2));
        assert_eq!(syntax_at("O1+ U1"), (1, 7));
        assert_eq!(syntax_at("O1+ U1+U2"), (1, 8));
        assert_eq!(syntax_at("O0+ U0+"), (1, 1));
    }

    #[test]
    fn pairing_errors() {
        assert_eq!(
            parse_gauss("O1+ U2+"),
            Err(DiagramError::Unpaired { id: 1, count: 1 })
        );
        assert_eq!(
            parse_gauss("O1+ U1-"),
            Err(DiagramError::SignMismatch { id: 1 })
        );
        assert_eq!(
            parse_gauss("O1+ O1+"),
            Err(DiagramError::DuplicateRole {
                id: 1,
                role: StrandRole::Over
            })
        );
        assert_eq!(
            parse_gauss("O1+ U1+ O1+"),
            Err(DiagramError::Unpaired { id: 1, count: 3 })
        );
    }
}
