use serde::{Deserialize, Serialize};

use super::{TessError, Tessellation, VertexId, VertexStatus};

pub const FORMAT_NAME: &str = "combicurv-patch";
pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed patch file at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("unsupported format {found:?} (expected {FORMAT_NAME:?})")]
    WrongFormat { found: String },
    #[error("unsupported format version {found} (expected {FORMAT_VERSION})")]
    WrongVersion { found: u32 },
    #[error("{kind} ids must be 0..n in order; entry {index} has id {id}")]
    SparseIds { kind: &'static str, index: usize, id: usize },
    #[error(transparent)]
    Structure(#[from] TessError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexRecord {
    pub id: VertexId,
    pub status: VertexStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceRecord {
    pub id: usize,
    pub walk: Vec<VertexId>,
}

/// On-disk JSON form of a [`Tessellation`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatchFile {
    pub format: String,
    pub version: u32,
    pub closed: bool,
    pub vertices: Vec<VertexRecord>,
    pub faces: Vec<FaceRecord>,
}

impl PatchFile {
    pub fn from_tessellation(t: &Tessellation) -> PatchFile {
        PatchFile {
            format: FORMAT_NAME.to_string(),
            version: FORMAT_VERSION,
            closed: t.is_closed(),
            vertices: t.vertex_ids().map(|id| VertexRecord { id, status: t.status(id) }).collect(),
            faces: t
                .faces()
                .iter()
                .enumerate()
                .map(|(id, w)| FaceRecord { id, walk: w.clone() })
                .collect(),
        }
    }

    pub fn into_tessellation(self) -> Result<Tessellation, FormatError> {
        if self.format != FORMAT_NAME {
            return Err(FormatError::WrongFormat { found: self.format });
        }
        if self.version != FORMAT_VERSION {
            return Err(FormatError::WrongVersion { found: self.version });
        }
        for (index, v) in self.vertices.iter().enumerate() {
            if v.id != index {
                return Err(FormatError::SparseIds { kind: "vertex", index, id: v.id });
            }
        }
        for (index, f) in self.faces.iter().enumerate() {
            if f.id != index {
                return Err(FormatError::SparseIds { kind: "face", index, id: f.id });
            }
        }
        let statuses = self.vertices.into_iter().map(|v| v.status).collect();
        let faces = self.faces.into_iter().map(|f| f.walk).collect();
        Ok(Tessellation::new(self.closed, statuses, faces)?)
    }
}

impl Tessellation {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&PatchFile::from_tessellation(self))
            .expect("patch serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Tessellation, FormatError> {
        let file: PatchFile = serde_json::from_str(text).map_err(|e| FormatError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        file.into_tessellation()
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::cube;
    use super::*;

    #[test]
    fn round_trip() {
        let t = cube();
        let back = Tessellation::from_json(&t.to_json()).unwrap();
        assert_eq!(t, back);
    }

    #[test]
    fn syntax_error_has_position() {
        let err = Tessellation::from_json("{\n  \"format\": oops }").unwrap_err();
        match err {
            FormatError::Syntax { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn sparse_ids_rejected() {
        let mut f = PatchFile::from_tessellation(&cube());
        f.vertices[3].id = 9;
        assert!(matches!(f.into_tessellation(), Err(FormatError::SparseIds { index: 3, .. })));
    }
}
