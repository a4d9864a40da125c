use std::collections::HashSet;

use super::{Iri, ModelError};
use crate::vocab;

/// A motivation concept and its broader generalizations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Motivation {
    pub iri: Iri,
    pub broader: Vec<Iri>,
}

impl Motivation {
    pub fn new(iri: Iri) -> Self {
        Motivation { iri, broader: Vec::new() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MotivationRegistry {
    entries: Vec<Motivation>,
}

const DEFAULT_REGISTRY: &str = include_str!("../../data/motivations.txt");

impl Default for MotivationRegistry {
    /// `oa:editing` and `oa:tagging`.
    fn default() -> Self {
        MotivationRegistry::parse(DEFAULT_REGISTRY).expect("bundled registry parses")
    }
}

impl MotivationRegistry {
    pub fn new(entries: Vec<Motivation>) -> Self {
        MotivationRegistry { entries }
    }

    /// Reads `motivation-iri [broader-iri ...]` lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, ModelError> {
        let mut entries: Vec<Motivation> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = crate::util::strip_line_comment(raw);
            let mut tokens = line.split_whitespace();
            let Some(head) = tokens.next() else { continue };
            let err = |message: String| ModelError::RegistrySyntax { line: idx + 1, message };
            let iri = parse_token(head).map_err(|e| err(e.to_string()))?;
            if entries.iter().any(|m| m.iri == iri) {
                return Err(err(format!("duplicate motivation {iri}")));
            }
            let broader = tokens
                .map(|t| parse_token(t).map_err(|e| err(e.to_string())))
                .collect::<Result<Vec<_>, _>>()?;
            entries.push(Motivation { iri, broader });
        }
        Ok(MotivationRegistry { entries })
    }

    pub fn entries(&self) -> &[Motivation] {
        &self.entries
    }

    pub fn get(&self, iri: &Iri) -> Option<&Motivation> {
        self.entries.iter().find(|m| &m.iri == iri)
    }

    pub fn contains(&self, iri: &Iri) -> bool {
        self.get(iri).is_some()
    }

    /// Looks up `iri` and returns it with its transitive broader closure, in
    /// depth-first discovery order. Unknown IRIs resolve to themselves with
    /// no broader concepts.
    pub fn resolve(&self, iri: &Iri) -> Result<Motivation, ModelError> {
        let mut closure = Vec::new();
        let mut seen = HashSet::new();
        let mut path = vec![iri.clone()];
        self.walk(iri, &mut path, &mut seen, &mut closure)?;
        Ok(Motivation { iri: iri.clone(), broader: closure })
    }

    fn walk(
        &self,
        node: &Iri,
        path: &mut Vec<Iri>,
        seen: &mut HashSet<Iri>,
        closure: &mut Vec<Iri>,
    ) -> Result<(), ModelError> {
        let Some(entry) = self.get(node) else { return Ok(()) };
        for broader in &entry.broader {
            if path.contains(broader) {
                return Err(ModelError::CycleDetected(broader.clone()));
            }
            if seen.insert(broader.clone()) {
                closure.push(broader.clone());
                path.push(broader.clone());
                self.walk(broader, path, seen, closure)?;
                path.pop();
            }
        }
        Ok(())
    }
}

fn parse_token(token: &str) -> Result<Iri, ModelError> {
    if let Some(inner) = token.strip_prefix('<').and_then(|t| t.strip_suffix('>')) {
        return Iri::new(inner);
    }
    match vocab::expand_curie(token) {
        Some(expanded) => Iri::new(expanded),
        None => Iri::new(token),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vocab::oa;

    fn iri(s: &str) -> Iri {
        Iri::new(s).unwrap()
    }

    #[test]
    fn default_registry_names_editing_and_tagging() {
        let reg = MotivationRegistry::default();
        assert_eq!(reg.entries().len(), 2);
        let editing = reg.resolve(&iri(oa::EDITING)).unwrap();
        assert!(editing.broader.is_empty());
        assert!(reg.contains(&iri(oa::EDITING)));
        assert!(reg.contains(&iri(oa::TAGGING)));
    }

    #[test]
    fn one_step_closure() {
        let text = "oa:editing\noa:tagging\n<http://ex.org/hashtagging> oa:tagging # custom\n";
        let reg = MotivationRegistry::parse(text).unwrap();
        let m = reg.resolve(&iri("http://ex.org/hashtagging")).unwrap();
        assert_eq!(m.broader, vec![iri(oa::TAGGING)]);
    }

    #[test]
    fn transitive_closure_and_idempotence() {
        let reg = MotivationRegistry::parse(
            "http://ex.org/a http://ex.org/b\nhttp://ex.org/b http://ex.org/c http://ex.org/d\nhttp://ex.org/c http://ex.org/d\n",
        )
        .unwrap();
        let m = reg.resolve(&iri("http://ex.org/a")).unwrap();
        assert_eq!(
            m.broader,
            vec![iri("http://ex.org/b"), iri("http://ex.org/c"), iri("http://ex.org/d")]
        );
        // Registering the closed motivation again changes nothing.
        let closed = MotivationRegistry::new(vec![m.clone()]);
        assert_eq!(closed.resolve(&m.iri).unwrap(), m);
    }

    #[test]
    fn unknown_motivation_resolves_to_itself() {
        let reg = MotivationRegistry::default();
        let m = reg.resolve(&iri("http://ex.org/other")).unwrap();
        assert_eq!(m, Motivation::new(iri("http://ex.org/other")));
    }

    #[test]
    fn cycles_are_detected() {
        let reg = MotivationRegistry::parse("http://ex.org/a http://ex.org/b\nhttp://ex.org/b http://ex.org/a\n")
            .unwrap();
        assert!(matches!(
            reg.resolve(&iri("http://ex.org/a")),
            Err(ModelError::CycleDetected(_))
        ));
    }

    #[test]
    fn syntax_errors_carry_line() {
        let err = MotivationRegistry::parse("# header\noa:editing\nnot-an-iri\n").unwrap_err();
        assert_eq!(err, ModelError::RegistrySyntax { line: 3, message: "invalid IRI \"not-an-iri\": expected an absolute IRI with a scheme".into() });
    }
}
