use super::{Pos, SyntaxError};

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Tok {
    IriRef(String),
    PName { prefix: String, local: String },
    Blank(String),
    Str(String),
    LangTag(String),
    Integer(String),
    Decimal(String),
    Boolean(bool),
    A,
    PrefixDirective,
    DoubleCaret,
    Dot,
    Semicolon,
    Comma,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Eof,
}

pub(crate) fn tokenize(text: &str) -> Result<Vec<(Tok, Pos)>, SyntaxError> {
    let mut lexer = Lexer { chars: text.chars().collect(), idx: 0, line: 1, column: 1 };
    let mut out = Vec::new();
    loop {
        lexer.skip_trivia();
        let pos = lexer.pos();
        let Some(c) = lexer.peek(0) else {
            out.push((Tok::Eof, pos));
            return Ok(out);
        };
        let tok = match c {
            '<' => lexer.iri_ref()?,
            '"' | '\'' => lexer.string(c)?,
            '@' => lexer.at_word(out.last().map(|(t, _)| t))?,
            '^' => {
                if lexer.peek(1) == Some('^') {
                    lexer.bump();
                    lexer.bump();
                    Tok::DoubleCaret
                } else {
                    return Err(pos.error("expected \"^^\""));
                }
            }
            '_' if lexer.peek(1) == Some(':') => lexer.blank_label()?,
            '.' if lexer.peek(1).is_some_and(|d| d.is_ascii_digit()) => lexer.number()?,
            '.' => lexer.single(Tok::Dot),
            ';' => lexer.single(Tok::Semicolon),
            ',' => lexer.single(Tok::Comma),
            '[' => lexer.single(Tok::LBracket),
            ']' => lexer.single(Tok::RBracket),
            '(' => lexer.single(Tok::LParen),
            ')' => lexer.single(Tok::RParen),
            '+' | '-' | '0'..='9' => lexer.number()?,
            ':' => lexer.name_or_keyword()?,
            c if is_pn_chars_base(c) => lexer.name_or_keyword()?,
            other => return Err(pos.error(format!("unexpected character {other:?}"))),
        };
        out.push((tok, pos));
    }
}

fn is_pn_chars_base(c: char) -> bool {
    c.is_alphabetic()
}

fn is_pn_chars(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '-'
}

struct Lexer {
    chars: Vec<char>,
    idx: usize,
    line: usize,
    column: usize,
}

impl Lexer {
    fn pos(&self) -> Pos {
        Pos { line: self.line, column: self.column }
    }

    fn peek(&self, ahead: usize) -> Option<char> {
        self.chars.get(self.idx + ahead).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.get(self.idx).copied()?;
        self.idx += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn single(&mut self, tok: Tok) -> Tok {
        self.bump();
        tok
    }

    fn skip_trivia(&mut self) {
        while let Some(c) = self.peek(0) {
            if c.is_whitespace() {
                self.bump();
            } else if c == '#' {
                while self.peek(0).is_some_and(|c| c != '\n') {
                    self.bump();
                }
            } else {
                break;
            }
        }
    }

    fn iri_ref(&mut self) -> Result<Tok, SyntaxError> {
        let start = self.pos();
        self.bump();
        let mut value = String::new();
        loop {
            match self.peek(0) {
                None | Some('\n') => return Err(start.error("unterminated IRI")),
                Some('>') => {
                    self.bump();
                    return Ok(Tok::IriRef(value));
                }
                Some('\\') => {
                    let pos = self.pos();
                    self.bump();
                    match self.bump() {
                        Some('u') => value.push(self.hex_escape(4, pos)?),
                        Some('U') => value.push(self.hex_escape(8, pos)?),
                        _ => return Err(pos.error("invalid escape in IRI")),
                    }
                }
                Some(c) if c.is_whitespace() || matches!(c, '<' | '"' | '{' | '}' | '|' | '^' | '`') => {
                    return Err(self.pos().error(format!("character {c:?} is not allowed in an IRI")));
                }
                Some(c) => {
                    value.push(c);
                    self.bump();
                }
            }
        }
    }

    fn hex_escape(&mut self, digits: usize, pos: Pos) -> Result<char, SyntaxError> {
        let mut code = 0u32;
        for _ in 0..digits {
            let d = self
                .bump()
                .and_then(|c| c.to_digit(16))
                .ok_or_else(|| pos.error("invalid unicode escape"))?;
            code = code * 16 + d;
        }
        char::from_u32(code).ok_or_else(|| pos.error("escape is not a valid code point"))
    }

    fn string(&mut self, quote: char) -> Result<Tok, SyntaxError> {
        let start = self.pos();
        if self.peek(1) == Some(quote) && self.peek(2) == Some(quote) {
            return Err(start.error("long (triple-quoted) strings are not supported"));
        }
        self.bump();
        let mut value = String::new();
        loop {
            match self.peek(0) {
                None | Some('\n') | Some('\r') => {
                    return Err(start.error("unterminated string (strings must fit on one line)"))
                }
                Some(c) if c == quote => {
                    self.bump();
                    return Ok(Tok::Str(value));
                }
                Some('\\') => {
                    let pos = self.pos();
                    self.bump();
                    let escaped = match self.bump() {
                        Some('t') => '\t',
                        Some('b') => '\u{8}',
                        Some('n') => '\n',
                        Some('r') => '\r',
                        Some('f') => '\u{c}',
                        Some('"') => '"',
                        Some('\'') => '\'',
                        Some('\\') => '\\',
                        Some('u') => self.hex_escape(4, pos)?,
                        Some('U') => self.hex_escape(8, pos)?,
                        _ => return Err(pos.error("invalid escape sequence")),
                    };
                    value.push(escaped);
                }
                Some(c) => {
                    value.push(c);
                    self.bump();
                }
            }
        }
    }

    fn at_word(&mut self, previous: Option<&Tok>) -> Result<Tok, SyntaxError> {
        let pos = self.pos();
        self.bump();
        let mut word = String::new();
        while let Some(c) = self.peek(0) {
            if c.is_ascii_alphanumeric() || c == '-' {
                word.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if matches!(previous, Some(Tok::Str(_))) {
            if word.is_empty() {
                return Err(pos.error("empty language tag"));
            }
            return Ok(Tok::LangTag(word));
        }
        match word.as_str() {
            "prefix" => Ok(Tok::PrefixDirective),
            "base" => Err(pos.error("@base is not supported")),
            _ => Err(pos.error(format!("unknown directive @{word}"))),
        }
    }

    fn blank_label(&mut self) -> Result<Tok, SyntaxError> {
        let pos = self.pos();
        self.bump();
        self.bump();
        let label = self.name_chars(false);
        if label.is_empty() || !crate::model::is_blank_label(&label) {
            return Err(pos.error("invalid blank node label"));
        }
        Ok(Tok::Blank(label))
    }

    /// Reads `[pn_chars.]*`, never ending in `.`.
    fn name_chars(&mut self, allow_colon: bool) -> String {
        let mut end = self.idx;
        let mut last_good = self.idx;
        while let Some(&c) = self.chars.get(end) {
            let ok = is_pn_chars(c) || (c == '.' && end > self.idx) || (c == ':' && allow_colon);
            if !ok {
                break;
            }
            end += 1;
            if c != '.' {
                last_good = end;
            }
        }
        let mut out = String::new();
        while self.idx < last_good {
            out.push(self.bump().expect("in bounds"));
        }
        out
    }

    fn name_or_keyword(&mut self) -> Result<Tok, SyntaxError> {
        let pos = self.pos();
        let mut prefix = String::new();
        if self.peek(0) != Some(':') {
            while let Some(c) = self.peek(0) {
                let next_continues = self.peek(1).is_some_and(|n| is_pn_chars(n) || n == '.' || n == ':');
                if is_pn_chars(c) || (c == '.' && next_continues) {
                    prefix.push(c);
                    self.bump();
                } else {
                    break;
                }
            }
        }
        if self.peek(0) != Some(':') {
            return match prefix.as_str() {
                "a" => Ok(Tok::A),
                "true" => Ok(Tok::Boolean(true)),
                "false" => Ok(Tok::Boolean(false)),
                _ => Err(pos.error(format!("unexpected bare word {prefix:?}"))),
            };
        }
        self.bump();
        let local = self.name_chars(true);
        Ok(Tok::PName { prefix, local })
    }

    fn number(&mut self) -> Result<Tok, SyntaxError> {
        let pos = self.pos();
        let mut text = String::new();
        if let Some(sign @ ('+' | '-')) = self.peek(0) {
            text.push(sign);
            self.bump();
        }
        while let Some(d) = self.peek(0).filter(char::is_ascii_digit) {
            text.push(d);
            self.bump();
        }
        let mut decimal = false;
        if self.peek(0) == Some('.') && self.peek(1).is_some_and(|d| d.is_ascii_digit()) {
            decimal = true;
            text.push('.');
            self.bump();
            while let Some(d) = self.peek(0).filter(char::is_ascii_digit) {
                text.push(d);
                self.bump();
            }
        }
        if matches!(self.peek(0), Some('e' | 'E')) {
            return Err(self.pos().error("numeric exponents are not supported"));
        }
        if !text.chars().any(|c| c.is_ascii_digit()) {
            return Err(pos.error("expected a number"));
        }
        Ok(if decimal { Tok::Decimal(text) } else { Tok::Integer(text) })
    }
}
