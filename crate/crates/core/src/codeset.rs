//! Vertex subsets with provenance, and their JSON form.
//!
//! ```json
//! {"d":2,"n":3,"t":1,"theorem":"simple1","code":["001","011","100","110"]}
//! ```
//!
//! Words are listed in rank order. Cover sets add a `"kind"` field;
//! identifying codes omit it.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{GraphSpace, VertexSet};
use crate::words::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SetKind {
    Identifying,
    Dominating,
    Resolving,
    Determining,
}

/// Which construction produced a set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// Drop every word with `x₁ = x_n`.
    Simple1,
    /// Periodicity-based optimal 1-identifying code, `n ≥ 3`.
    Mpt10,
    /// Drop every word with `x₂ = x_n`, patched for odd `n`.
    TwoId,
    /// Periodicity-based optimal `t`-identifying code, `n ≥ 2t`.
    Main,
    /// Non-optimal `t`-identifying code for `n = 2t - 1`.
    Odd,
    /// Let the dispatcher pick.
    Auto,
    /// Found by exhaustive search.
    Search,
    DomExact,
    DomT,
    MetDim,
    DetNum,
}

impl Theorem {
    pub fn tag(self) -> &'static str {
        match self {
            Theorem::Simple1 => "simple1",
            Theorem::Mpt10 => "mpt10",
            Theorem::TwoId => "twoid",
            Theorem::Main => "main",
            Theorem::Odd => "odd",
            Theorem::Auto => "auto",
            Theorem::Search => "search",
            Theorem::DomExact => "domexact",
            Theorem::DomT => "tdom",
            Theorem::MetDim => "metdim",
            Theorem::DetNum => "detnum",
        }
    }

    const ALL: [Theorem; 11] = [
        Theorem::Simple1,
        Theorem::Mpt10,
        Theorem::TwoId,
        Theorem::Main,
        Theorem::Odd,
        Theorem::Auto,
        Theorem::Search,
        Theorem::DomExact,
        Theorem::DomT,
        Theorem::MetDim,
        Theorem::DetNum,
    ];
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.tag() == s)
            .ok_or_else(|| Error::Parse(format!("unknown theorem tag {s:?}")))
    }
}

/// A vertex subset of `B(d,n)`: a code, or a dominating, resolving or
/// determining set.
#[derive(Clone, PartialEq, Eq)]
pub struct CodeSet {
    pub kind: SetKind,
    /// Radius for identifying and dominating sets.
    pub radius: Option<u32>,
    pub theorem: Option<Theorem>,
    pub members: VertexSet,
}

impl CodeSet {
    pub fn new(kind: SetKind, radius: Option<u32>, theorem: Option<Theorem>, members: VertexSet) -> Self {
        Self {
            kind,
            radius,
            theorem,
            members,
        }
    }

    pub fn identifying(t: u32, theorem: Theorem, members: VertexSet) -> Self {
        Self::new(SetKind::Identifying, Some(t), Some(theorem), members)
    }

    /// An unlabelled set built from words, e.g. for verification.
    pub fn from_words<'a>(
        space: GraphSpace,
        kind: SetKind,
        radius: Option<u32>,
        words: impl IntoIterator<Item = &'a Word>,
    ) -> Result<Self> {
        Ok(Self::new(kind, radius, None, VertexSet::from_words(space, words)?))
    }

    /// Like [`from_words`](Self::from_words), parsing digit strings.
    pub fn parse_words(
        space: GraphSpace,
        kind: SetKind,
        radius: Option<u32>,
        words: &[&str],
    ) -> Result<Self> {
        let parsed = words
            .iter()
            .map(|s| Word::parse(s, space.d()))
            .collect::<Result<Vec<_>>>()?;
        Self::from_words(space, kind, radius, &parsed)
    }

    pub fn space(&self) -> GraphSpace {
        self.members.space()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.members.contains_word(w)
    }

    pub fn words(&self) -> Vec<Word> {
        self.members.words().collect()
    }

    pub fn word_strings(&self) -> Vec<String> {
        self.members.words().map(|w| w.to_string()).collect()
    }

    pub fn to_json(&self) -> CodeSetJson {
        let space = self.space();
        CodeSetJson {
            d: space.d(),
            n: space.n(),
            t: self.radius,
            kind: (self.kind != SetKind::Identifying).then_some(self.kind),
            theorem: self.theorem.map(|t| t.tag().to_string()),
            code: self.word_strings(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("plain data serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let raw: CodeSetJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        raw.into_code_set()
    }
}

impl fmt::Debug for CodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CodeSet")
            .field("space", &self.space())
            .field("kind", &self.kind)
            .field("radius", &self.radius)
            .field("theorem", &self.theorem)
            .field("members", &self.members)
            .finish()
    }
}

/// Wire form of a [`CodeSet`]. Field order is the serialized key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSetJson {
    pub d: u32,
    pub n: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<SetKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theorem: Option<String>,
    pub code: Vec<String>,
}

impl CodeSetJson {
    pub fn into_code_set(self) -> Result<CodeSet> {
        let space = GraphSpace::new(self.d, self.n)?;
        let theorem = self.theorem.as_deref().map(str::parse).transpose()?;
        let words = self
            .code
            .iter()
            .map(|s| Word::parse(s, self.d))
            .collect::<Result<Vec<_>>>()?;
        let members = VertexSet::from_words(space, &words)?;
        Ok(CodeSet::new(
            self.kind.unwrap_or(SetKind::Identifying),
            self.t,
            theorem,
            members,
        ))
    }
}
