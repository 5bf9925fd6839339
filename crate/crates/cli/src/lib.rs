//! Request handling for the `dbcodes` binary, kept apart from argument
//! parsing so it can be driven from tests.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use debruijn_codes::codes::CodeSpec;
use debruijn_codes::cover;
use debruijn_codes::verify::{
    self, decode_signature, min_identifying_search, IdentifyingSearch, SearchConfig,
};
use debruijn_codes::{CodeSet, Error, GraphSpace, SetKind, Signature, Theorem, Word};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Verb {
    /// Build a t-identifying code.
    Code,
    /// Build a t-dominating set.
    Dominate,
    /// Build a resolving set.
    Resolve,
    /// Build a determining set.
    Determine,
    /// Check a set read with --in.
    Verify,
    /// Search for a minimum t-identifying code.
    Min,
    /// Look for t-twins.
    Twins,
    /// Find the vertex with the --observed signature under the --in code.
    Decode,
    /// Write the graph, highlighting the --in set if given.
    Export,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Dot,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandRequest {
    pub verb: Verb,
    pub d: Option<u32>,
    pub n: Option<u32>,
    pub t: Option<u32>,
    pub theorem: Option<String>,
    pub input_path: Option<PathBuf>,
    pub output_path: Option<PathBuf>,
    pub format: Format,
    pub observed: Option<String>,
}

impl CommandRequest {
    pub fn new(verb: Verb) -> Self {
        Self {
            verb,
            d: None,
            n: None,
            t: None,
            theorem: None,
            input_path: None,
            output_path: None,
            format: Format::Json,
            observed: None,
        }
    }
}

/// Exit status plus whatever goes to standard output and standard error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_VALID: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// A finished command: the body to emit and whether it counts as valid.
struct Reply {
    body: String,
    valid: bool,
}

impl Reply {
    fn json(value: &impl Serialize, valid: bool) -> Self {
        Self {
            body: serde_json::to_string(value).expect("plain data serializes"),
            valid,
        }
    }
}

#[derive(Serialize)]
struct TwinsJson {
    identifiable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    twins: Option<[String; 2]>,
}

#[derive(Serialize)]
struct MinJson {
    minimum: Option<usize>,
    d: u32,
    n: u32,
    t: u32,
    lower_bound: u64,
    count: u64,
    levels: Vec<verify::LevelStat>,
    #[serde(skip_serializing_if = "Option::is_none")]
    code: Option<Vec<String>>,
}

#[derive(Serialize)]
struct DecodeJson {
    vertex: Option<String>,
    /// Two vertices sharing the observed signature: the code is invalid.
    #[serde(skip_serializing_if = "Option::is_none")]
    ambiguous: Option<[String; 2]>,
}

#[derive(Serialize)]
struct GraphJson {
    d: u32,
    n: u32,
    vertices: Vec<String>,
    edges: Vec<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    highlighted: Option<Vec<String>>,
}

pub fn run(request: &CommandRequest) -> Outcome {
    match dispatch(request).and_then(|reply| emit(request, reply)) {
        Ok(outcome) => outcome,
        Err(e) => Outcome {
            exit_code: EXIT_ERROR,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn emit(request: &CommandRequest, reply: Reply) -> Result<Outcome, Error> {
    let exit_code = if reply.valid { EXIT_VALID } else { EXIT_INVALID };
    let mut body = reply.body;
    if !body.ends_with('\n') {
        body.push('\n');
    }
    match &request.output_path {
        Some(path) => {
            fs::write(path, &body).map_err(|e| Error::Resource(format!("cannot write {}: {e}", path.display())))?;
            Ok(Outcome {
                exit_code,
                stdout: String::new(),
                stderr: String::new(),
            })
        }
        None => Ok(Outcome {
            exit_code,
            stdout: body,
            stderr: String::new(),
        }),
    }
}

fn require(value: Option<u32>, flag: &str, verb: Verb) -> Result<u32, Error> {
    value.ok_or_else(|| Error::Parse(format!("{verb:?} needs {flag}").to_lowercase()))
}

fn space_from_flags(request: &CommandRequest) -> Result<GraphSpace, Error> {
    GraphSpace::new(
        require(request.d, "-d", request.verb)?,
        require(request.n, "-n", request.verb)?,
    )
}

fn radius(request: &CommandRequest) -> u32 {
    request.t.unwrap_or(1)
}

fn theorem(request: &CommandRequest) -> Result<Option<Theorem>, Error> {
    request.theorem.as_deref().map(str::parse).transpose()
}

fn read_set(request: &CommandRequest) -> Result<CodeSet, Error> {
    let path = request
        .input_path
        .as_ref()
        .ok_or_else(|| Error::Parse(format!("{:?} needs --in FILE", request.verb).to_lowercase()))?;
    let text = fs::read_to_string(path).map_err(|e| Error::Resource(format!("cannot read {}: {e}", path.display())))?;
    let set = CodeSet::from_json_str(&text)?;
    let space = set.space();
    let mismatch = |flag: Option<u32>, actual: u32| flag.is_some_and(|f| f != actual);
    if mismatch(request.d, space.d()) || mismatch(request.n, space.n()) {
        return Err(Error::SpaceMismatch {
            expected_d: request.d.unwrap_or(space.d()),
            expected_n: request.n.unwrap_or(space.n()),
            got_d: space.d(),
            got_n: space.n(),
        });
    }
    Ok(set)
}

fn set_reply(set: &CodeSet, format: Format) -> Result<Reply, Error> {
    Ok(match format {
        Format::Json => Reply {
            body: set.to_json_string(),
            valid: true,
        },
        Format::Dot => Reply {
            body: highlighted_dot(set.space(), Some(set))?,
            valid: true,
        },
    })
}

fn twins_reply(twins: Option<(Word, Word)>) -> Reply {
    let identifiable = twins.is_none();
    Reply::json(
        &TwinsJson {
            identifiable,
            twins: twins.map(|(u, v)| [u.to_string(), v.to_string()]),
        },
        identifiable,
    )
}

fn dispatch(request: &CommandRequest) -> Result<Reply, Error> {
    match request.verb {
        Verb::Code => {
            let space = space_from_flags(request)?;
            let t = radius(request);
            let spec = CodeSpec::new(space, t, theorem(request)?.unwrap_or(Theorem::Auto))?;
            match spec.build() {
                Ok(code) => set_reply(&code, request.format),
                Err(Error::NotIdentifiable { twins, .. }) => Ok(twins_reply(Some(twins))),
                Err(e) => Err(e),
            }
        }
        Verb::Dominate => {
            let space = space_from_flags(request)?;
            let t = radius(request);
            let set = match theorem(request)? {
                None if t == 1 => cover::dominating_1(space)?,
                None | Some(Theorem::DomT) => cover::dominating_t(space, t)?,
                Some(Theorem::DomExact) if t == 1 => cover::dominating_1(space)?,
                Some(other) => {
                    return Err(Error::Parse(format!("theorem {other} does not build a {t}-dominating set")))
                }
            };
            set_reply(&set, request.format)
        }
        Verb::Resolve => set_reply(&cover::resolving_set(space_from_flags(request)?)?, request.format),
        Verb::Determine => set_reply(&cover::determining_set(space_from_flags(request)?)?, request.format),
        Verb::Verify => {
            let set = read_set(request)?;
            let t = request.t.or(set.radius).unwrap_or(1);
            let report = match set.kind {
                SetKind::Identifying => verify::verify_identifying(&set, t)?,
                SetKind::Dominating => verify::verify_dominating(&set, t)?,
                SetKind::Resolving => verify::verify_resolving(&set)?,
                SetKind::Determining => verify::verify_determining(&set)?,
            };
            let valid = report.valid;
            Ok(Reply::json(&report, valid))
        }
        Verb::Min => {
            let space = space_from_flags(request)?;
            let t = radius(request);
            let config = SearchConfig {
                max_witnesses: 1,
                ..SearchConfig::default()
            };
            let lower_bound = debruijn_codes::id_lower_bound(space)?;
            let json = |minimum, count, levels, code| MinJson {
                minimum,
                d: space.d(),
                n: space.n(),
                t,
                lower_bound,
                count,
                levels,
                code,
            };
            match min_identifying_search(space, t, &config)? {
                IdentifyingSearch::Found {
                    size,
                    codes,
                    count,
                    levels,
                } => Ok(Reply::json(
                    &json(Some(size), count, levels, codes.first().map(CodeSet::word_strings)),
                    true,
                )),
                IdentifyingSearch::Twins { u, v } => Ok(twins_reply(Some((u, v)))),
                IdentifyingSearch::Exhausted { levels, .. } => Ok(Reply::json(&json(None, 0, levels, None), false)),
            }
        }
        Verb::Twins => {
            let space = space_from_flags(request)?;
            let t = radius(request);
            let twins = if space.n() + 2 <= 2 * t {
                Some(debruijn_codes::twin_pair(space, t)?)
            } else {
                verify::find_twins(space, t)?
            };
            Ok(twins_reply(twins))
        }
        Verb::Decode => {
            let code = read_set(request)?;
            let t = request.t.or(code.radius).unwrap_or(1);
            let literal = request
                .observed
                .as_deref()
                .ok_or_else(|| Error::Parse("decode needs --observed".into()))?;
            let observed = Signature::parse(code.space(), literal)?;
            let reply = match decode_signature(&code, t, &observed) {
                Ok(vertex) => DecodeJson {
                    vertex: vertex.map(|w| w.to_string()),
                    ambiguous: None,
                },
                Err(Error::Ambiguous(u, v)) => DecodeJson {
                    vertex: None,
                    ambiguous: Some([u.to_string(), v.to_string()]),
                },
                Err(e) => return Err(e),
            };
            let found = reply.vertex.is_some();
            Ok(Reply::json(&reply, found))
        }
        Verb::Export => {
            let set = request.input_path.as_ref().map(|_| read_set(request)).transpose()?;
            let space = match &set {
                Some(set) => set.space(),
                None => space_from_flags(request)?,
            };
            match request.format {
                Format::Dot => Ok(Reply {
                    body: highlighted_dot(space, set.as_ref())?,
                    valid: true,
                }),
                Format::Json => graph_json(space, set.as_ref()),
            }
        }
    }
}

fn highlighted_dot(space: GraphSpace, set: Option<&CodeSet>) -> Result<String, Error> {
    let mut dot = space.to_dot()?;
    if let Some(set) = set {
        let closing = dot.rfind('}').expect("DOT ends with a brace");
        let mut styles = String::new();
        for w in set.words() {
            let _ = writeln!(styles, "  \"{w}\" [style=filled, fillcolor=black, fontcolor=white];");
        }
        dot.insert_str(closing, &styles);
    }
    Ok(dot)
}

fn graph_json(space: GraphSpace, set: Option<&CodeSet>) -> Result<Reply, Error> {
    // Same size limit as DOT: both list every edge.
    space.to_dot()?;
    let vertices: Vec<Word> = space.vertices()?.collect();
    let edges = (0..vertices.len() as u64)
        .flat_map(|u| space.successors(u).map(move |v| (u, v)))
        .map(|(u, v)| [vertices[u as usize].to_string(), vertices[v as usize].to_string()])
        .collect();
    Ok(Reply::json(
        &GraphJson {
            d: space.d(),
            n: space.n(),
            vertices: vertices.iter().map(Word::to_string).collect(),
            edges,
            highlighted: set.map(CodeSet::word_strings),
        },
        true,
    ))
}
