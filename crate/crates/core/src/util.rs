/// Cuts a `#` comment off a line of a line-oriented data file. A `#` only
/// starts a comment at the beginning of the line or after whitespace, and
/// never inside `<...>`, so IRIs like `http://ex.org/ns#term` survive.
pub(crate) fn strip_line_comment(raw: &str) -> &str {
    let mut in_iri = false;
    let mut prev_ws = true;
    for (i, c) in raw.char_indices() {
        match c {
            '<' => in_iri = true,
            '>' => in_iri = false,
            '#' if !in_iri && prev_ws => return &raw[..i],
            _ => {}
        }
        prev_ws = c.is_whitespace();
    }
    raw
}

#[cfg(test)]
mod tests {
    use super::strip_line_comment;

    #[test]
    fn comments() {
        assert_eq!(strip_line_comment("# all"), "");
        assert_eq!(strip_line_comment("a b # c"), "a b ");
        assert_eq!(strip_line_comment("http://x.org/ns#t y"), "http://x.org/ns#t y");
        assert_eq!(strip_line_comment("<http://x.org/ #t>"), "<http://x.org/ #t>");
    }
}
