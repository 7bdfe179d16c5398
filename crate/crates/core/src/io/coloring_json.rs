//! Coloring files: `{"assignment": [c_0, c_1, ...]}` with classes numbered
//! contiguously from 0.

use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ColoringFile {
    assignment: Vec<usize>,
}

pub fn parse_coloring(text: &str) -> Result<Coloring> {
    let file: ColoringFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        offset: super::offset_of(text, e.line(), e.column()),
        message: e.to_string(),
    })?;
    if file.assignment.is_empty() {
        return Err(Error::MalformedColoring("the assignment is empty".into()));
    }
    Coloring::new(file.assignment)
}

pub fn write_coloring(c: &Coloring) -> String {
    let file = ColoringFile {
        assignment: c.assignment().to_vec(),
    };
    serde_json::to_string(&file).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let c = parse_coloring(r#"{"assignment":[0,1,0,2]}"#).unwrap();
        assert_eq!(c.class_count(), 3);
        assert_eq!(write_coloring(&c), r#"{"assignment":[0,1,0,2]}"#);
    }

    #[test]
    fn rejects_gaps_and_junk() {
        assert!(matches!(
            parse_coloring(r#"{"assignment":[0,2]}"#),
            Err(Error::MalformedColoring(_))
        ));
        assert!(matches!(parse_coloring("[0,1]"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_coloring(r#"{"assignment":[0],"x":1}"#),
            Err(Error::Parse { .. })
        ));
        assert!(parse_coloring(r#"{"assignment":[]}"#).is_err());
    }
}
