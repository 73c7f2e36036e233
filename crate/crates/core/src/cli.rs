//! Command-line front end. Parsing, dispatch and rendering live here so the
//! binary stays a one-liner and tests can drive [`run`] in-process.
//!
//! Wire formats: words are comma-separated integers (`3,5,-2`, the empty
//! string is the empty word), matrices are `a,b,c,d` row-major.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use crate::conjugacy::{are_conjugate, canonical_class, is_pure, proper_violation};
use crate::error::{Error, Result};
use crate::matrix::{continuant, quiddity_sign, Mat2, Word};
use crate::oracle::{enumerate_quiddity_cycles, oracle_conjugate, shortest_words, OracleVerdict, SearchBounds};
use crate::presentation::{minimal_presentation, reduce_word, staircase};

/// Parses `"3, 5,-2"`. Empty or all-blank input is the empty word; any empty
/// field after that is an error at its byte offset.
pub fn parse_word(text: &str) -> Result<Word> {
    if text.trim().is_empty() {
        return Ok(Word::new());
    }
    let mut out = Vec::new();
    let mut offset = 0;
    for field in text.split(',') {
        let lead = field.len() - field.trim_start().len();
        let tok = field.trim();
        if tok.is_empty() {
            return Err(Error::Parse { offset: offset + lead, message: "empty field".into() });
        }
        let v: BigInt = tok
            .parse()
            .map_err(|_| Error::Parse { offset: offset + lead, message: format!("not an integer: {tok:?}") })?;
        out.push(v);
        offset += field.len() + 1;
    }
    Ok(Word(out))
}

/// Parses `"a,b,c,d"`; the determinant must be exactly 1.
pub fn parse_matrix(text: &str) -> Result<Mat2> {
    let w = parse_word(text)?;
    if w.len() != 4 {
        return Err(Error::Parse { offset: 0, message: format!("expected 4 entries, got {}", w.len()) });
    }
    let [a, b, c, d]: [BigInt; 4] = w.0.try_into().expect("length checked");
    Mat2::new(a, b, c, d)
}

/// Exit status: 0 success, 1 domain error, 2 parse error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => 2,
        _ => 1,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Matrix,
    Word,
    ClassForm,
    Sign,
    Report,
}

impl Kind {
    fn as_str(self) -> &'static str {
        match self {
            Kind::Matrix => "matrix",
            Kind::Word => "word",
            Kind::ClassForm => "classform",
            Kind::Sign => "sign",
            Kind::Report => "report",
        }
    }
}

/// One line of output. In structured mode it renders as
/// `kind=...;payload=...;provenance=...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IoRecord {
    pub kind: Kind,
    pub payload: String,
    pub provenance: &'static str,
}

impl IoRecord {
    fn new(kind: Kind, payload: impl ToString, provenance: &'static str) -> Self {
        IoRecord { kind, payload: payload.to_string(), provenance }
    }

    pub fn render(&self, structured: bool) -> String {
        if structured {
            format!("kind={};payload={};provenance={}", self.kind.as_str(), self.payload, self.provenance)
        } else {
            self.payload.clone()
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "psl2z", version, about = "Presentations and conjugacy classes in PSL(2,Z)")]
pub struct Cli {
    /// one `kind=...;payload=...;provenance=...` record per line
    #[arg(long, global = true)]
    pub structured: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone, Copy)]
pub struct BoundArgs {
    #[arg(long, default_value_t = 4)]
    pub max_len: usize,
    #[arg(long, default_value_t = 5)]
    pub coeff_bound: i64,
    #[arg(long, default_value_t = 200_000)]
    pub max_nodes: usize,
}

impl From<BoundArgs> for SearchBounds {
    fn from(b: BoundArgs) -> Self {
        SearchBounds::new(b.max_len, b.coeff_bound, b.max_nodes)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Matrix of a word
    Eval {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Staircase word of a matrix
    Staircase {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Minimal presentation of a matrix
    Minimal {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Reduce a staircase word to its minimal presentation
    Reduce {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Sign of a quiddity cycle, or `none`
    Quiddity {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Properness of a cyclic word, with the first failed rule
    Proper {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Purity of a cyclic word
    Pure {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Canonical representative of the conjugacy class
    Canonical {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Whether two matrices are conjugate
    Conjugate {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Brute-force shortest words of a matrix
    OracleShortest {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// Brute-force quiddity cycles of a given length
    OracleCycles {
        n: usize,
        #[arg(long, default_value_t = 3)]
        coeff_bound: i64,
    },
    /// Brute-force search for a conjugating word
    OracleConjugate {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[command(flatten)]
        bounds: BoundArgs,
    },
}

/// Runs one command and returns its records.
pub fn execute(cmd: &Command) -> Result<Vec<IoRecord>> {
    use Command::*;
    let one = |r: IoRecord| Ok(vec![r]);
    match cmd {
        Eval { word } => one(IoRecord::new(Kind::Matrix, continuant(&parse_word(word)?), "eval")),
        Staircase { matrix } => {
            one(IoRecord::new(Kind::Word, staircase(&parse_matrix(matrix)?).word(), "staircase"))
        }
        Minimal { matrix } => one(IoRecord::new(
            Kind::Word,
            minimal_presentation(&parse_matrix(matrix)?),
            "minimal_presentation",
        )),
        Reduce { word } => one(IoRecord::new(Kind::Word, reduce_word(&parse_word(word)?)?, "reduce")),
        Quiddity { word } => {
            let payload = quiddity_sign(&parse_word(word)?).map_or_else(|| "none".to_string(), |s| s.to_string());
            one(IoRecord::new(Kind::Sign, payload, "quiddity_sign"))
        }
        Proper { word } => {
            let payload = match proper_violation(&parse_word(word)?) {
                None => "true".to_string(),
                Some(v) => format!("false: {v}"),
            };
            one(IoRecord::new(Kind::Report, payload, "is_proper"))
        }
        Pure { word } => one(IoRecord::new(Kind::Report, is_pure(&parse_word(word)?), "is_pure")),
        Canonical { matrix } => {
            one(IoRecord::new(Kind::ClassForm, canonical_class(&parse_matrix(matrix)?), "canonical_class"))
        }
        Conjugate { a, b } => {
            let (a, b) = (parse_matrix(a)?, parse_matrix(b)?);
            one(IoRecord::new(Kind::Report, are_conjugate(&a, &b), "are_conjugate"))
        }
        OracleShortest { matrix, bounds } => {
            let found = shortest_words(&parse_matrix(matrix)?, &(*bounds).into())?;
            if found.is_empty() {
                return one(IoRecord::new(Kind::Report, "none", "shortest_words"));
            }
            Ok(found.iter().map(|w| IoRecord::new(Kind::Word, w, "shortest_words")).collect())
        }
        OracleCycles { n, coeff_bound } => {
            if *n == 0 {
                return Err(Error::Domain("cycle length must be at least 1".into()));
            }
            Ok(enumerate_quiddity_cycles(*n, *coeff_bound)
                .into_iter()
                .map(|(w, s)| IoRecord::new(Kind::Report, format!("{w} {s}"), "enumerate_quiddity_cycles"))
                .collect())
        }
        OracleConjugate { a, b, bounds } => {
            let (a, b) = (parse_matrix(a)?, parse_matrix(b)?);
            let payload = match oracle_conjugate(&a, &b, &(*bounds).into()) {
                OracleVerdict::Yes(g) => format!("yes: {g}"),
                OracleVerdict::NoWithinBounds => "no-within-bounds".to_string(),
                OracleVerdict::Unresolved => "unresolved".to_string(),
            };
            one(IoRecord::new(Kind::Report, payload, "oracle_conjugate"))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Full command line in, exit status and captured streams out. The first
/// argument is the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli.command) {
        Ok(records) => {
            let mut stdout = String::new();
            for r in &records {
                let _ = writeln!(stdout, "{}", r.render(cli.structured));
            }
            Outcome { code: 0, stdout, stderr: String::new() }
        }
        Err(e) => Outcome { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_parsing() {
        assert_eq!(parse_word("3,5,-2").unwrap(), Word::from([3, 5, -2]));
        assert_eq!(parse_word("").unwrap(), Word::new());
        assert_eq!(parse_word(" 3 , 5 ").unwrap(), Word::from([3, 5]));
        assert!(matches!(parse_word("3, ,5"), Err(Error::Parse { offset: 3, .. })));
        assert!(matches!(parse_word("3,x"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse_word("3,"), Err(Error::Parse { offset: 2, .. })));
    }

    #[test]
    fn matrix_parsing() {
        assert_eq!(parse_matrix("17,12,7,5").unwrap(), Mat2::new(17, 12, 7, 5).unwrap());
        assert_eq!(parse_matrix("1,0,0,1").unwrap(), Mat2::identity());
        assert_eq!(parse_matrix("2,0,0,1"), Err(Error::Determinant { det: 2.into() }));
        assert!(matches!(parse_matrix("1,2,3"), Err(Error::Parse { .. })));
    }
}
