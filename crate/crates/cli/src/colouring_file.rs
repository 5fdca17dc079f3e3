//! The colouring file format: a `# k=<k>` header followed by one
//! `<element-index> <label>` pair per line. Elements are node, edge, or face
//! indices depending on what was coloured; the file does not record which.

use chromatica::{Error, Result};

pub fn write_colouring(assignment: &[usize], k: usize) -> String {
    let mut out = format!("# k={k}\n");
    for (element, &label) in assignment.iter().enumerate() {
        out.push_str(&format!("{element} {label}\n"));
    }
    out
}

fn fail(line: usize, message: String) -> Error {
    Error::Parse {
        format: "colouring",
        line,
        message,
    }
}

/// Parse labels indexed by element. Blank lines and `#` comments are
/// skipped; the data lines may come in any order but must cover the element
/// indices `0..count` exactly once.
pub fn parse_colouring(text: &str) -> Result<Vec<usize>> {
    let mut pairs: Vec<(usize, usize, usize)> = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(fail(
                line,
                format!("expected '<element> <label>', found '{trimmed}'"),
            ));
        }
        let element: usize = fields[0]
            .parse()
            .map_err(|_| fail(line, format!("bad element index '{}'", fields[0])))?;
        let label: usize = fields[1]
            .parse()
            .map_err(|_| fail(line, format!("bad label '{}'", fields[1])))?;
        pairs.push((element, label, line));
    }
    let count = pairs.len();
    let mut labels = vec![usize::MAX; count];
    for (element, label, line) in pairs {
        if element >= count {
            return Err(fail(
                line,
                format!("element {element} out of range: the file lists {count} elements"),
            ));
        }
        if labels[element] != usize::MAX {
            return Err(fail(line, format!("element {element} is assigned twice")));
        }
        labels[element] = label;
    }
    Ok(labels)
}
