use std::collections::{BTreeMap, HashSet};

use super::lexer::{tokenize, Tok};
use super::{Pos, SyntaxError};
use crate::model::{BlankNode, Iri, NodeId};
use crate::rdf::{Graph, Literal, Term, Triple};
use crate::vocab::{rdf, xsd};

/// Parses Turtle-subset text into a graph. Triples keep document order.
pub fn parse_turtle(text: &str) -> Result<Graph, SyntaxError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens,
        idx: 0,
        prefixes: BTreeMap::new(),
        triples: Vec::new(),
        checked: 0,
        anon_count: 0,
        labels: HashSet::new(),
    };
    parser.document()?;
    Ok(parser.finish())
}

/// A term whose IRI has not been checked for absoluteness yet. The check is
/// deferred to emission so that grammar errors are reported first.
#[derive(Debug, Clone)]
enum Raw {
    Iri(String, Pos),
    Blank(Anon),
    Literal(Literal),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Anon {
    Labelled(String),
    Fresh(usize),
}

struct Parser {
    tokens: Vec<(Tok, Pos)>,
    idx: usize,
    prefixes: BTreeMap<String, String>,
    triples: Vec<(Raw, Raw, Raw)>,
    checked: usize,
    anon_count: usize,
    labels: HashSet<String>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.idx].0
    }

    fn pos(&self) -> Pos {
        self.tokens[self.idx].1
    }

    fn next(&mut self) -> (Tok, Pos) {
        let tok = self.tokens[self.idx].clone();
        if self.idx + 1 < self.tokens.len() {
            self.idx += 1;
        }
        tok
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), SyntaxError> {
        if *self.peek() == want {
            self.next();
            Ok(())
        } else {
            Err(self.pos().error(format!("expected {what}")))
        }
    }

    fn document(&mut self) -> Result<(), SyntaxError> {
        while *self.peek() != Tok::Eof {
            if *self.peek() == Tok::PrefixDirective {
                self.prefix_directive()?;
            } else {
                self.triples_statement()?;
                self.expect(Tok::Dot, "\".\" to end the statement")?;
            }
            self.flush()?;
        }
        Ok(())
    }

    fn prefix_directive(&mut self) -> Result<(), SyntaxError> {
        self.next();
        let (tok, pos) = self.next();
        let Tok::PName { prefix, local } = tok else {
            return Err(pos.error("expected a prefix name such as \"oa:\""));
        };
        if !local.is_empty() {
            return Err(pos.error("prefix declaration must end with \":\""));
        }
        let (tok, pos) = self.next();
        let Tok::IriRef(ns) = tok else {
            return Err(pos.error("expected a namespace IRI"));
        };
        if Iri::new(ns.clone()).is_err() {
            return Err(pos.error(format!("namespace <{ns}> is not an absolute IRI")));
        }
        self.expect(Tok::Dot, "\".\" after the prefix declaration")?;
        self.prefixes.insert(prefix, ns);
        Ok(())
    }

    fn fresh(&mut self) -> Raw {
        self.anon_count += 1;
        Raw::Blank(Anon::Fresh(self.anon_count))
    }

    fn triples_statement(&mut self) -> Result<(), SyntaxError> {
        let pos = self.pos();
        match self.peek() {
            Tok::LBracket => {
                let subject = self.blank_property_list()?;
                if !matches!(self.peek(), Tok::Dot) {
                    self.predicate_object_list(&subject)?;
                }
                Ok(())
            }
            _ => {
                let subject = match self.peek() {
                    Tok::LParen => self.collection()?,
                    _ => {
                        let (tok, pos) = self.next();
                        match tok {
                            Tok::IriRef(_) | Tok::PName { .. } => self.iri(tok, pos)?,
                            Tok::Blank(label) => self.labelled(label),
                            _ => return Err(pos.error("expected a subject")),
                        }
                    }
                };
                if *self.peek() == Tok::Dot {
                    return Err(pos.error("subject has no predicate"));
                }
                self.predicate_object_list(&subject)
            }
        }
    }

    fn labelled(&mut self, label: String) -> Raw {
        self.labels.insert(label.clone());
        Raw::Blank(Anon::Labelled(label))
    }

    fn iri(&self, tok: Tok, pos: Pos) -> Result<Raw, SyntaxError> {
        match tok {
            Tok::IriRef(value) => Ok(Raw::Iri(value, pos)),
            Tok::PName { prefix, local } => {
                let ns = self
                    .prefixes
                    .get(&prefix)
                    .ok_or_else(|| pos.error(format!("undeclared prefix \"{prefix}:\"")))?;
                Ok(Raw::Iri(format!("{ns}{local}"), pos))
            }
            _ => Err(pos.error("expected an IRI")),
        }
    }

    fn predicate_object_list(&mut self, subject: &Raw) -> Result<(), SyntaxError> {
        loop {
            let (tok, pos) = self.next();
            let predicate = match tok {
                Tok::A => Raw::Iri(rdf::TYPE.to_owned(), pos),
                Tok::IriRef(_) | Tok::PName { .. } => self.iri(tok, pos)?,
                _ => return Err(pos.error("expected a predicate")),
            };
            loop {
                let object = self.object()?;
                self.triples.push((subject.clone(), predicate.clone(), object));
                if *self.peek() == Tok::Comma {
                    self.next();
                } else {
                    break;
                }
            }
            if *self.peek() != Tok::Semicolon {
                return Ok(());
            }
            while *self.peek() == Tok::Semicolon {
                self.next();
            }
            if matches!(self.peek(), Tok::Dot | Tok::RBracket) {
                return Ok(());
            }
        }
    }

    fn object(&mut self) -> Result<Raw, SyntaxError> {
        match self.peek() {
            Tok::LBracket => return self.blank_property_list(),
            Tok::LParen => return self.collection(),
            _ => {}
        }
        let (tok, pos) = self.next();
        match tok {
            Tok::IriRef(_) | Tok::PName { .. } => self.iri(tok, pos),
            Tok::Blank(label) => Ok(self.labelled(label)),
            Tok::Integer(v) => Ok(Raw::Literal(Literal::typed(v, Iri::known(xsd::INTEGER)))),
            Tok::Decimal(v) => Ok(Raw::Literal(Literal::typed(v, Iri::known(xsd::DECIMAL)))),
            Tok::Boolean(b) => Ok(Raw::Literal(Literal::typed(
                b.to_string(),
                Iri::known(&format!("{}boolean", crate::vocab::XSD)),
            ))),
            Tok::Str(value) => match self.peek().clone() {
                Tok::LangTag(tag) => {
                    let tag_pos = self.pos();
                    self.next();
                    Literal::lang_tagged(value, tag)
                        .map(Raw::Literal)
                        .map_err(|e| tag_pos.error(e.to_string()))
                }
                Tok::DoubleCaret => {
                    self.next();
                    let (tok, pos) = self.next();
                    match self.iri(tok, pos)? {
                        Raw::Iri(dt, pos) => {
                            let dt = Iri::new(dt).map_err(|e| pos.error(e.to_string()))?;
                            Ok(Raw::Literal(Literal::typed(value, dt)))
                        }
                        _ => unreachable!("iri() only yields IRIs"),
                    }
                }
                _ => Ok(Raw::Literal(Literal::plain(value))),
            },
            _ => Err(pos.error("expected an object")),
        }
    }

    fn blank_property_list(&mut self) -> Result<Raw, SyntaxError> {
        self.expect(Tok::LBracket, "\"[\"")?;
        let node = self.fresh();
        if *self.peek() != Tok::RBracket {
            self.predicate_object_list(&node)?;
        }
        self.expect(Tok::RBracket, "\"]\"")?;
        Ok(node)
    }

    fn collection(&mut self) -> Result<Raw, SyntaxError> {
        let open = self.pos();
        self.expect(Tok::LParen, "\"(\"")?;
        let mut items = Vec::new();
        while *self.peek() != Tok::RParen {
            if *self.peek() == Tok::Eof {
                return Err(open.error("unterminated collection"));
            }
            items.push(self.object()?);
        }
        self.next();
        let nil = Raw::Iri(rdf::NIL.to_owned(), open);
        if items.is_empty() {
            return Ok(nil);
        }
        let cells: Vec<Raw> = items.iter().map(|_| self.fresh()).collect();
        for (i, item) in items.into_iter().enumerate() {
            let rest = cells.get(i + 1).cloned().unwrap_or_else(|| nil.clone());
            self.triples.push((cells[i].clone(), Raw::Iri(rdf::FIRST.to_owned(), open), item));
            self.triples.push((cells[i].clone(), Raw::Iri(rdf::REST.to_owned(), open), rest));
        }
        Ok(cells[0].clone())
    }

    /// Checks IRIs of the statement just parsed.
    fn flush(&mut self) -> Result<(), SyntaxError> {
        for (s, p, o) in &self.triples[self.checked..] {
            for raw in [s, p, o] {
                if let Raw::Iri(value, pos) = raw {
                    if Iri::new(value.clone()).is_err() {
                        return Err(pos.error(format!(
                            "<{value}> is not an absolute IRI (relative IRIs are not supported)"
                        )));
                    }
                }
            }
        }
        self.checked = self.triples.len();
        Ok(())
    }

    fn finish(self) -> Graph {
        let mut fresh_names = std::collections::HashMap::new();
        let mut counter = 0usize;
        let labels = self.labels;
        let mut name = |anon: &Anon| -> BlankNode {
            let label = match anon {
                Anon::Labelled(l) => l.clone(),
                Anon::Fresh(n) => fresh_names
                    .entry(*n)
                    .or_insert_with(|| loop {
                        counter += 1;
                        let candidate = format!("genid{counter}");
                        if !labels.contains(&candidate) {
                            break candidate;
                        }
                    })
                    .clone(),
            };
            BlankNode::new(label).expect("lexer only yields valid labels")
        };
        let mut graph = Graph::new();
        for (s, p, o) in self.triples {
            let subject = match s {
                Raw::Iri(v, _) => NodeId::Iri(Iri::known(&v)),
                Raw::Blank(a) => NodeId::Blank(name(&a)),
                Raw::Literal(_) => unreachable!(),
            };
            let Raw::Iri(p, _) = p else { unreachable!() };
            let object = match o {
                Raw::Iri(v, _) => Term::Iri(Iri::known(&v)),
                Raw::Blank(a) => Term::Blank(name(&a)),
                Raw::Literal(l) => Term::Literal(l),
            };
            graph.insert(Triple::new(subject, Iri::known(&p), object));
        }
        for (prefix, ns) in self.prefixes {
            graph.set_prefix(prefix, Iri::known(&ns));
        }
        graph
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vocab::oa;

    #[test]
    fn a_expands_to_rdf_type() {
        let g = parse_turtle("@prefix oa: <http://www.w3.org/ns/oa#> . <urn:x:a> a oa:Annotation .").unwrap();
        assert_eq!(g.len(), 1);
        let t = g.iter().next().unwrap();
        assert_eq!(t.predicate.as_str(), rdf::TYPE);
        assert_eq!(t.object, Term::Iri(Iri::new(oa::ANNOTATION).unwrap()));
    }

    #[test]
    fn missing_object_reports_dot_position() {
        let err = parse_turtle("<a> <b> .").unwrap_err();
        assert_eq!((err.line, err.column), (1, 9));
    }

    #[test]
    fn relative_iris_are_rejected_at_their_position() {
        let err = parse_turtle("<urn:x:s> <p> <urn:x:o> .").unwrap_err();
        assert_eq!((err.line, err.column), (1, 11));
    }

    #[test]
    fn continuations_and_anonymous_nodes() {
        let g = parse_turtle(
            "@prefix ex: <http://ex.org/> .\nex:s ex:p ex:a, ex:b ; ex:q [ ex:r 1 ] ; .\n[] ex:p \"x\"@en .",
        )
        .unwrap();
        assert_eq!(g.len(), 5);
        assert_eq!(g.blank_labels().len(), 2);
    }

    #[test]
    fn collections_expand_to_first_rest() {
        let g = parse_turtle("<urn:x:s> <urn:x:p> ( 1 2 ) .").unwrap();
        assert_eq!(g.len(), 5);
        let nil = g.iter().filter(|t| t.object == Term::Iri(Iri::new(rdf::NIL).unwrap())).count();
        assert_eq!(nil, 1);
        let g = parse_turtle("<urn:x:s> <urn:x:p> () .").unwrap();
        assert_eq!(g.len(), 1);
    }

    #[test]
    fn fresh_labels_avoid_written_labels() {
        let g = parse_turtle("[] <urn:x:p> _:genid1 .").unwrap();
        assert_eq!(g.blank_labels().len(), 2);
    }

    #[test]
    fn undeclared_prefix() {
        let err = parse_turtle("\n  ex:s <urn:x:p> 1 .").unwrap_err();
        assert_eq!((err.line, err.column), (2, 3));
    }

    #[test]
    fn literal_forms() {
        let g = parse_turtle("<urn:x:s> <urn:x:p> \"a\"^^<urn:x:dt>, 1.5, -3, true, 'q' .").unwrap();
        assert_eq!(g.len(), 5);
    }

    #[test]
    fn duplicate_triples_collapse() {
        let g = parse_turtle("<urn:x:s> <urn:x:p> 1, 1 . <urn:x:s> <urn:x:p> 1 .").unwrap();
        assert_eq!(g.len(), 1);
    }
}
