//! Line-based N-Triples reader and writer, used for hand-written oracle
//! files. Shares no code with the Turtle reader.

use std::fmt::Write;

use thiserror::Error;

use crate::model::{BlankNode, Iri, NodeId};
use crate::rdf::{Graph, Literal, Term, Triple};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("N-Triples line {line}: {message}")]
pub struct NTriplesError {
    pub line: usize,
    pub message: String,
}

pub fn parse(text: &str) -> Result<Graph, NTriplesError> {
    let mut graph = Graph::new();
    for (idx, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let err = |message: &str| NTriplesError { line: idx + 1, message: message.to_owned() };
        let mut rest = trimmed;
        let subject = match read_term(&mut rest).map_err(|m| err(&m))? {
            Term::Iri(i) => NodeId::Iri(i),
            Term::Blank(b) => NodeId::Blank(b),
            Term::Literal(_) => return Err(err("literal in subject position")),
        };
        let predicate = match read_term(&mut rest).map_err(|m| err(&m))? {
            Term::Iri(i) => i,
            _ => return Err(err("predicate must be an IRI")),
        };
        let object = read_term(&mut rest).map_err(|m| err(&m))?;
        let rest = rest.trim_start();
        let rest = rest.strip_prefix('.').ok_or_else(|| err("missing final \".\""))?;
        let rest = rest.trim();
        if !(rest.is_empty() || rest.starts_with('#')) {
            return Err(err("trailing content"));
        }
        graph.insert(Triple::new(subject, predicate, object));
    }
    Ok(graph)
}

fn read_term(input: &mut &str) -> Result<Term, String> {
    *input = input.trim_start();
    let s = *input;
    if let Some(body) = s.strip_prefix('<') {
        let end = body.find('>').ok_or("unterminated IRI")?;
        let iri = Iri::new(&body[..end]).map_err(|e| e.to_string())?;
        *input = &body[end + 1..];
        return Ok(Term::Iri(iri));
    }
    if let Some(body) = s.strip_prefix("_:") {
        let end = body.find(|c: char| c.is_whitespace()).unwrap_or(body.len());
        let label = BlankNode::new(&body[..end]).map_err(|e| e.to_string())?;
        *input = &body[end..];
        return Ok(Term::Blank(label));
    }
    if let Some(body) = s.strip_prefix('"') {
        let mut value = String::new();
        let mut chars = body.char_indices();
        let close = loop {
            match chars.next() {
                None => return Err("unterminated literal".into()),
                Some((i, '"')) => break i,
                Some((_, '\\')) => match chars.next() {
                    Some((_, 'n')) => value.push('\n'),
                    Some((_, 'r')) => value.push('\r'),
                    Some((_, 't')) => value.push('\t'),
                    Some((_, '"')) => value.push('"'),
                    Some((_, '\\')) => value.push('\\'),
                    Some((_, 'u')) => {
                        let hex: String = (0..4).filter_map(|_| chars.next().map(|(_, c)| c)).collect();
                        let code = u32::from_str_radix(&hex, 16).map_err(|_| "bad \\u escape")?;
                        value.push(char::from_u32(code).ok_or("bad \\u escape")?);
                    }
                    _ => return Err("unknown escape".into()),
                },
                Some((_, c)) => value.push(c),
            }
        };
        let after = &body[close + 1..];
        if let Some(tagged) = after.strip_prefix('@') {
            let end = tagged.find(|c: char| c.is_whitespace()).unwrap_or(tagged.len());
            *input = &tagged[end..];
            return Literal::lang_tagged(value, &tagged[..end])
                .map(Term::Literal)
                .map_err(|e| e.to_string());
        }
        if let Some(typed) = after.strip_prefix("^^") {
            let mut rest = typed;
            let Term::Iri(dt) = read_term(&mut rest)? else {
                return Err("datatype must be an IRI".into());
            };
            *input = rest;
            return Ok(Term::Literal(Literal::typed(value, dt)));
        }
        *input = after;
        return Ok(Term::Literal(Literal::plain(value)));
    }
    Err(format!("unexpected input {:?}", s.chars().take(12).collect::<String>()))
}

/// One line per triple, lines sorted.
pub fn write(graph: &Graph) -> String {
    let mut lines: Vec<String> = graph.iter().map(Triple::to_string).collect();
    lines.sort();
    let mut out = String::new();
    for line in lines {
        let _ = writeln!(out, "{line}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_all_term_kinds() {
        let g = parse(
            "# oracle\n<urn:x:s> <urn:x:p> _:b1 .\n_:b1 <urn:x:q> \"a \\\"b\\\"\\n\"@en .\n_:b1 <urn:x:r> \"5\"^^<http://www.w3.org/2001/XMLSchema#integer> .\n",
        )
        .unwrap();
        assert_eq!(g.len(), 3);
        assert_eq!(parse(&write(&g)).unwrap(), g);
    }

    #[test]
    fn reports_line() {
        let err = parse("<urn:x:s> <urn:x:p> <urn:x:o> .\n<urn:x:s> <urn:x:p> <urn:x:o>\n").unwrap_err();
        assert_eq!(err.line, 2);
    }
}
