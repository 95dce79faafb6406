//! The `flagmap v1` text format:
//!
//! ```text
//! flags N
//! r0 <N images>
//! r1 <N images>
//! r2 <N images>
//! ```
//!
//! Images are 0-based; a fixed point encodes a boundary flag.

use super::{FlagMap, MapError};

pub fn write_flagmap(m: &FlagMap) -> String {
    let mut s = format!("flags {}\n", m.n_flags());
    for i in 0..3 {
        s.push_str(&format!("r{i}"));
        for x in m.r(i) {
            s.push(' ');
            s.push_str(&x.to_string());
        }
        s.push('\n');
    }
    s
}

pub fn parse_flagmap(text: &str) -> Result<FlagMap, MapError> {
    let err = |line: usize, msg: &str| MapError::Parse {
        line,
        msg: msg.to_string(),
    };
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());

    let (ln, header) = lines.next().ok_or_else(|| err(1, "empty input"))?;
    let mut words = header.split_whitespace();
    if words.next() != Some("flags") {
        return Err(err(ln + 1, "expected `flags N`"));
    }
    let n: usize = words
        .next()
        .and_then(|w| w.parse().ok())
        .ok_or_else(|| err(ln + 1, "bad flag count"))?;
    if words.next().is_some() {
        return Err(err(ln + 1, "trailing tokens after flag count"));
    }

    let mut arrays: [Vec<u32>; 3] = Default::default();
    for (i, array) in arrays.iter_mut().enumerate() {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| err(ln + 2 + i, "missing generator line"))?;
        let mut words = line.split_whitespace();
        if words.next() != Some(format!("r{i}").as_str()) {
            return Err(err(ln + 1, &format!("expected `r{i}`")));
        }
        *array = words
            .map(|w| w.parse::<u32>())
            .collect::<Result<_, _>>()
            .map_err(|_| err(ln + 1, "bad image"))?;
        if array.len() != n {
            return Err(err(
                ln + 1,
                &format!("r{i} has {} images, expected {n}", array.len()),
            ));
        }
    }
    if let Some((ln, _)) = lines.next() {
        return Err(err(ln + 1, "unexpected trailing line"));
    }
    let [r0, r1, r2] = arrays;
    Ok(FlagMap::new(r0, r1, r2)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flagmap::Violation;

    #[test]
    fn writes_and_parses_boundary_premap() {
        let m = FlagMap::new(vec![1, 0], vec![0, 1], vec![0, 1]).unwrap();
        let text = write_flagmap(&m);
        assert_eq!(text, "flags 2\nr0 1 0\nr1 0 1\nr2 0 1\n");
        assert_eq!(parse_flagmap(&text).unwrap(), m);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(parse_flagmap(""), Err(MapError::Parse { .. })));
        assert!(matches!(
            parse_flagmap("flags 2\nr0 1 0\nr1 0 1\n"),
            Err(MapError::Parse { .. })
        ));
        assert!(matches!(
            parse_flagmap("flags 2\nr0 1 0\nr2 0 1\nr1 0 1\n"),
            Err(MapError::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_flagmap("flags 2\nr0 1\nr1 0 1\nr2 0 1\n"),
            Err(MapError::Parse { line: 2, .. })
        ));
        assert_eq!(
            parse_flagmap("flags 2\nr0 1 1\nr1 0 1\nr2 0 1\n"),
            Err(MapError::Invalid(Violation::NotInvolution(0)))
        );
    }
}
