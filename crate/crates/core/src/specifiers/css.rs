//! A deliberately small CSS reader: a stylesheet is a sequence of
//! `.class { declarations }` rules. Anything else is a syntax error.

use super::SpecifierError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CssRule {
    pub class_name: String,
    /// Raw declaration text between the braces, trimmed.
    pub declarations: String,
}

/// Declarations of the first rule for `.class_name`.
pub fn select_style_declarations(css: &str, class_name: &str) -> Result<String, SpecifierError> {
    parse_stylesheet(css)?
        .into_iter()
        .find(|rule| rule.class_name == class_name)
        .map(|rule| rule.declarations)
        .ok_or_else(|| SpecifierError::NotFound(class_name.to_owned()))
}

pub fn parse_stylesheet(css: &str) -> Result<Vec<CssRule>, SpecifierError> {
    let mut cursor = Cursor::new(css);
    let mut rules = Vec::new();
    loop {
        cursor.skip_trivia()?;
        match cursor.peek() {
            None => return Ok(rules),
            Some('.') => {
                cursor.bump();
                rules.push(cursor.rule_after_dot()?);
            }
            Some('@') => return Err(cursor.error("at-rules are not supported")),
            Some(_) => return Err(cursor.error("expected a class selector starting with \".\"")),
        }
    }
}

pub(crate) fn is_class_token(name: &str) -> bool {
    let mut chars = name.chars().peekable();
    if chars.peek() == Some(&'-') {
        chars.next();
    }
    match chars.next() {
        Some(c) if is_name_start(c) => chars.all(is_name_char),
        _ => false,
    }
}

fn is_name_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_' || !c.is_ascii()
}

fn is_name_char(c: char) -> bool {
    is_name_start(c) || c.is_ascii_digit() || c == '-'
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { chars: text.chars().peekable(), line: 1, column: 1 }
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn error(&self, message: &str) -> SpecifierError {
        SpecifierError::CssSyntax { line: self.line, column: self.column, message: message.to_owned() }
    }

    fn skip_trivia(&mut self) -> Result<(), SpecifierError> {
        loop {
            match self.peek() {
                Some(c) if c.is_whitespace() => {
                    self.bump();
                }
                Some('/') => {
                    let err = self.error("unterminated comment");
                    let mut probe = self.chars.clone();
                    probe.next();
                    if probe.next() != Some('*') {
                        return Ok(());
                    }
                    self.bump();
                    self.bump();
                    let mut star = false;
                    loop {
                        match self.bump() {
                            None => return Err(err),
                            Some('/') if star => break,
                            Some(c) => star = c == '*',
                        }
                    }
                }
                _ => return Ok(()),
            }
        }
    }

    fn rule_after_dot(&mut self) -> Result<CssRule, SpecifierError> {
        let mut name = String::new();
        while let Some(c) = self.peek() {
            if is_name_char(c) {
                name.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if !is_class_token(&name) {
            return Err(self.error("expected a class name"));
        }
        self.skip_trivia()?;
        match self.peek() {
            Some('{') => {
                self.bump();
            }
            Some(',') => return Err(self.error("selector lists are not supported")),
            Some(_) => return Err(self.error("only single class selectors are supported")),
            None => return Err(self.error("expected \"{\"")),
        }
        let mut body = String::new();
        let mut quote: Option<char> = None;
        loop {
            let Some(c) = self.peek() else {
                return Err(self.error("unterminated declaration block"));
            };
            match (quote, c) {
                (Some(q), c) if c == q => quote = None,
                (Some(_), '\\') => {
                    body.push(c);
                    self.bump();
                    if let Some(escaped) = self.peek() {
                        body.push(escaped);
                        self.bump();
                    }
                    continue;
                }
                (Some(_), _) => {}
                (None, '"' | '\'') => quote = Some(c),
                (None, '}') => {
                    self.bump();
                    break;
                }
                (None, '{') => return Err(self.error("nested blocks are not supported")),
                (None, _) => {}
            }
            body.push(c);
            self.bump();
        }
        Ok(CssRule { class_name: name, declarations: body.trim().to_owned() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn single_rule() {
        assert_eq!(
            select_style_declarations(".yellow { background: yellow }", "yellow").unwrap(),
            "background: yellow"
        );
    }

    #[test]
    fn empty_sheet_has_no_rules() {
        assert_eq!(
            select_style_declarations("", "yellow"),
            Err(SpecifierError::NotFound("yellow".into()))
        );
    }

    #[test]
    fn second_of_two_rules() {
        // Traced by hand: rule 1 = (a, "color:red"), rule 2 = (b, "color:blue").
        let rules = parse_stylesheet(".a{color:red}.b{color:blue}").unwrap();
        assert_eq!(
            rules,
            vec![
                CssRule { class_name: "a".into(), declarations: "color:red".into() },
                CssRule { class_name: "b".into(), declarations: "color:blue".into() },
            ]
        );
        assert_eq!(select_style_declarations(".a{color:red}.b{color:blue}", "b").unwrap(), "color:blue");
    }

    #[test]
    fn first_matching_rule_wins() {
        let css = ".x { color: red }\n.x { color: blue }";
        assert_eq!(select_style_declarations(css, "x").unwrap(), "color: red");
    }

    #[test]
    fn comma_lists_are_errors_with_position() {
        let err = select_style_declarations(".a, .b { color: red }", "a").unwrap_err();
        assert_eq!(
            err,
            SpecifierError::CssSyntax {
                line: 1,
                column: 3,
                message: "selector lists are not supported".into()
            }
        );
    }

    #[test]
    fn other_selectors_are_errors() {
        for css in ["div { x: y }", ".a .b { x: y }", ".a.b { x: y }", "@media print { }", ".a { b { } }", ".a { x: y", "#id { x: y }"] {
            assert!(
                matches!(parse_stylesheet(css), Err(SpecifierError::CssSyntax { .. })),
                "{css}"
            );
        }
    }

    #[test]
    fn error_line_numbers() {
        let err = parse_stylesheet(".a { x: y }\n\n  .b, .c { }").unwrap_err();
        assert!(matches!(err, SpecifierError::CssSyntax { line: 3, column: 5, .. }), "{err:?}");
    }

    #[test]
    fn comments_and_strings() {
        let css = "/* styles */ .q { content: \"}\"; /* inside */ }";
        assert_eq!(
            select_style_declarations(css, "q").unwrap(),
            "content: \"}\"; /* inside */"
        );
    }

    #[test]
    fn class_tokens() {
        assert!(is_class_token("yellow"));
        assert!(is_class_token("-x_1"));
        assert!(!is_class_token(".yellow"));
        assert!(!is_class_token("1a"));
        assert!(!is_class_token(""));
        assert!(!is_class_token("a b"));
    }

    proptest! {
        #[test]
        fn whitespace_between_rules_is_irrelevant(
            rules in proptest::collection::vec(("[a-c]", "[a-z]{1,5}:[a-z]{1,5}"), 1..5),
            gaps in proptest::collection::vec("[ \t\n]{0,3}", 6),
            query in "[a-c]",
        ) {
            let tight: String = rules.iter().map(|(c, d)| format!(".{c}{{{d}}}")).collect();
            let mut loose = gaps[0].clone();
            for (i, (c, d)) in rules.iter().enumerate() {
                loose.push_str(&format!(".{c}{{{d}}}"));
                loose.push_str(&gaps[i + 1]);
            }
            prop_assert_eq!(
                select_style_declarations(&tight, &query),
                select_style_declarations(&loose, &query)
            );
        }
    }
}
