//! Cycle notation and the group-file format.
//!
//! ```text
//! # comment
//! name: S3
//! degree: 3
//! gens: (1 2 3), (1 2)
//! ```
//!
//! Permutations after `gens:` are separated by commas or newlines; cycles of
//! one permutation are written next to each other. `()` is the identity.

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// A parsed group file.
#[derive(Debug, Clone)]
pub struct GroupSpecFile {
    pub name: Option<String>,
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl GroupSpecFile {
    pub fn to_group(&self) -> Result<PermGroup> {
        PermGroup::new(self.degree, self.generators.clone())
    }
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    line: usize,
    offset: usize,
    _src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str, line: usize, offset: usize) -> Self {
        Self {
            chars: src.char_indices().collect(),
            pos: 0,
            line,
            offset,
            _src: src,
        }
    }

    fn column(&self) -> usize {
        self.offset + self.pos + 1
    }

    fn error(&self, message: impl Into<String>) -> Error {
        parse_error(self.line, self.column(), message)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a point number"));
        }
        let text: String = self.chars[start..self.pos]
            .iter()
            .map(|&(_, c)| c)
            .collect();
        text.parse()
            .map_err(|_| parse_error(self.line, self.offset + start + 1, "point number too large"))
    }

    /// One permutation: a run of cycles up to a top-level comma or the end.
    fn permutation(&mut self, degree: usize) -> Result<Permutation> {
        let mut images: Vec<usize> = (1..=degree).collect();
        let mut used = vec![false; degree + 1];
        let mut any = false;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('(') => {
                    self.bump();
                    any = true;
                }
                None | Some(',') if any => break,
                _ => return Err(self.error("expected '('")),
            }
            let mut cycle = Vec::new();
            loop {
                self.skip_ws();
                match self.peek() {
                    Some(')') => {
                        self.bump();
                        break;
                    }
                    Some(',') if !cycle.is_empty() => {
                        self.bump();
                    }
                    Some(c) if c.is_ascii_digit() => {
                        let col = self.column();
                        let p = self.number()?;
                        if p == 0 || p > degree {
                            return Err(parse_error(
                                self.line,
                                col,
                                format!("point {p} outside 1..{degree}"),
                            ));
                        }
                        if used[p] {
                            return Err(parse_error(self.line, col, format!("point {p} repeated")));
                        }
                        used[p] = true;
                        cycle.push(p);
                    }
                    Some(_) => return Err(self.error("unexpected character in cycle")),
                    None => return Err(self.error("unclosed cycle")),
                }
            }
            for (i, &p) in cycle.iter().enumerate() {
                images[p - 1] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation::from_images(&images)
    }

    /// Comma-separated permutations up to the end of input.
    fn permutation_list(&mut self, degree: usize, out: &mut Vec<Permutation>) -> Result<()> {
        loop {
            self.skip_ws();
            if self.at_end() {
                return Ok(());
            }
            out.push(self.permutation(degree)?);
            self.skip_ws();
            match self.bump() {
                None => return Ok(()),
                Some(',') => continue,
                Some(_) => {
                    self.pos -= 1;
                    return Err(self.error("expected ',' between permutations"));
                }
            }
        }
    }
}

/// Parses a single permutation in cycle notation, e.g. `(1 2 3)(4 5)`.
pub fn parse_permutation(degree: usize, text: &str) -> Result<Permutation> {
    let mut cur = Cursor::new(text, 1, 0);
    let p = cur.permutation(degree)?;
    cur.skip_ws();
    if !cur.at_end() {
        return Err(cur.error("trailing input after permutation"));
    }
    Ok(p)
}

/// Parses comma-separated permutations, e.g. `(1 2), (1 2 3)`.
pub fn parse_permutations(degree: usize, text: &str) -> Result<Vec<Permutation>> {
    let mut out = Vec::new();
    Cursor::new(text, 1, 0).permutation_list(degree, &mut out)?;
    Ok(out)
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Parses the group-file format.
pub fn parse_group_spec(text: &str) -> Result<GroupSpecFile> {
    let mut name = None;
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    let mut in_gens = false;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = strip_comment(raw);
        let trimmed = line.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = line.len() - trimmed.len();
        let keyword = |key: &str| -> Option<(&str, usize)> {
            trimmed
                .strip_prefix(key)
                .map(|rest| (rest, indent + key.len()))
        };
        if let Some((rest, off)) = keyword("name:") {
            if degree.is_some() || in_gens {
                return Err(parse_error(line_no, indent + 1, "'name:' must come first"));
            }
            let value = rest.trim();
            if value.is_empty() {
                return Err(parse_error(line_no, off + 1, "empty name"));
            }
            name = Some(value.to_string());
        } else if let Some((rest, off)) = keyword("degree:") {
            if degree.is_some() {
                return Err(parse_error(line_no, indent + 1, "duplicate 'degree:'"));
            }
            let value = rest.trim();
            let col = off + rest.len() - rest.trim_start().len() + 1;
            let d: usize = value
                .parse()
                .map_err(|_| parse_error(line_no, col, format!("invalid degree {value:?}")))?;
            if d == 0 {
                return Err(parse_error(line_no, col, "degree must be positive"));
            }
            degree = Some(d);
        } else if let Some((rest, off)) = keyword("gens:") {
            let d = degree
                .ok_or_else(|| parse_error(line_no, indent + 1, "'gens:' before 'degree:'"))?;
            if in_gens {
                return Err(parse_error(line_no, indent + 1, "duplicate 'gens:'"));
            }
            in_gens = true;
            Cursor::new(rest, line_no, off).permutation_list(d, &mut gens)?;
        } else if in_gens {
            let d = degree.expect("checked when gens: was read");
            Cursor::new(line, line_no, 0).permutation_list(d, &mut gens)?;
        } else {
            return Err(parse_error(
                line_no,
                indent + 1,
                "expected 'name:', 'degree:' or 'gens:'",
            ));
        }
    }
    let degree = degree.ok_or_else(|| parse_error(1, 1, "missing 'degree:'"))?;
    if !in_gens {
        return Err(parse_error(1, 1, "missing 'gens:'"));
    }
    Ok(GroupSpecFile {
        name,
        degree,
        generators: gens,
    })
}

/// Parses a group file into a group.
pub fn parse_group_file(text: &str) -> Result<PermGroup> {
    parse_group_spec(text)?.to_group()
}

/// Renders a group in the file format, one generator per line.
pub fn print_group_file(name: Option<&str>, group: &PermGroup) -> String {
    let mut out = String::new();
    if let Some(name) = name {
        out.push_str(&format!("name: {name}\n"));
    }
    out.push_str(&format!("degree: {}\ngens:\n", group.degree()));
    for g in group.generators() {
        out.push_str(&format!("{g}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_permutations() {
        let p = parse_permutation(5, "(1 2 3)(4 5)").unwrap();
        assert_eq!(p.to_string(), "(1 2 3)(4 5)");
        assert!(parse_permutation(3, "()").unwrap().is_identity());
        assert_eq!(
            parse_permutation(4, " ( 1 ,2 )( 3 4 ) ")
                .unwrap()
                .to_string(),
            "(1 2)(3 4)"
        );
    }

    #[test]
    fn permutation_lists() {
        let ps = parse_permutations(4, "(1 2)(3 4), (1 2 3)").unwrap();
        assert_eq!(ps.len(), 2);
        assert_eq!(ps[1].to_string(), "(1 2 3)");
    }

    #[test]
    fn file_with_inline_gens() {
        let g = parse_group_file("degree: 3\ngens: (1 2 3), (1 2)\n").unwrap();
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn file_with_gens_on_lines() {
        let text =
            "# symmetric group\nname: S4\ndegree: 4\ngens:\n(1 2)   # transposition\n(1 2 3 4)\n";
        let spec = parse_group_spec(text).unwrap();
        assert_eq!(spec.name.as_deref(), Some("S4"));
        assert_eq!(spec.to_group().unwrap().order(), 24);
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_group_file("degree: 3\ngens: (1 2 4)\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 2,
                column: 12,
                message: "point 4 outside 1..3".into()
            }
        );
        let err = parse_group_file("degree: 3\ngens: (1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_group_file("gens: (1 2)\n").unwrap_err();
        assert!(matches!(
            err,
            Error::Parse {
                line: 1,
                column: 1,
                ..
            }
        ));
        let err = parse_group_file("degree: x\ngens:\n").unwrap_err();
        assert!(matches!(
            err,
            Error::Parse {
                line: 1,
                column: 9,
                ..
            }
        ));
        assert!(parse_permutation(3, "(1 1)").is_err());
        assert!(parse_permutation(3, "1 2").is_err());
    }

    #[test]
    fn round_trip() {
        let text = "name: X\ndegree: 5\ngens: (1 2 3 4 5), (1 2)(3 4)\n";
        let g = parse_group_file(text).unwrap();
        let printed = print_group_file(Some("X"), &g);
        let again = parse_group_file(&printed).unwrap();
        assert_eq!(again.generators(), g.generators());
        assert_eq!(again.order(), g.order());
    }
}
