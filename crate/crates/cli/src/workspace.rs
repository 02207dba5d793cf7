//! The line-oriented workspace document: parsing, validation and printing.
//!
//! ```text
//! # comment
//! dim 2
//! multivector X = 1 + 2.5*e12 - e1
//! extensor t = [
//!   [2, 0],
//!   [0, 3]
//! ]
//! frame F = [e1, e1 + e2]
//! ```

use std::collections::HashMap;

use extensor_core::blade::{self, Mask};
use extensor_core::extensor::ComponentKind;
use extensor_core::{
    ComponentSet, ElementaryKExtensor, Error as CoreError, Family, Frame, GeneralExtensor,
    Multivector, PqExtensor, Variance, MAX_DIM,
};
use nalgebra::DMatrix;

use crate::error::{CliError, Result};
use crate::format;

const KEYWORDS: [&str; 9] = [
    "dim",
    "multivector",
    "extensor",
    "general",
    "elementary",
    "frame",
    "components",
    "in",
    "canonical",
];

#[derive(Debug, Clone, PartialEq)]
pub enum FrameRef {
    Canonical,
    Named(String),
}

impl FrameRef {
    fn text(&self) -> &str {
        match self {
            FrameRef::Canonical => "canonical",
            FrameRef::Named(n) => n,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Object {
    Multivector(Multivector),
    Extensor(PqExtensor),
    General(GeneralExtensor),
    Elementary(ElementaryKExtensor),
    Frame(Frame),
    Components { set: ComponentSet, frame: FrameRef },
}

impl Object {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Object::Multivector(_) => "multivector",
            Object::Extensor(_) => "extensor",
            Object::General(_) => "general extensor",
            Object::Elementary(_) => "elementary extensor",
            Object::Frame(_) => "frame",
            Object::Components { .. } => "component set",
        }
    }

    fn dim(&self) -> usize {
        match self {
            Object::Multivector(x) => x.dim(),
            Object::Extensor(t) => t.dim(),
            Object::General(t) => t.dim(),
            Object::Elementary(t) => t.dim(),
            Object::Frame(f) => f.dim(),
            Object::Components { set, .. } => set.frame.dim(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Decl {
    pub name: String,
    pub object: Object,
    pub comment: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Item {
    Blank,
    Comment(String),
    Dim { dim: usize, comment: Option<String> },
    Decl(Decl),
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Workspace {
    dim: Option<usize>,
    items: Vec<Item>,
    index: HashMap<String, usize>,
}

impl Workspace {
    /// An empty document declaring `dim`.
    pub fn new(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(Workspace {
            dim: Some(dim),
            items: vec![Item::Dim { dim, comment: None }],
            index: HashMap::new(),
        })
    }

    pub fn parse(src: &str) -> Result<Self> {
        Parser::new(lex(src)?).document()
    }

    pub fn dim(&self) -> Option<usize> {
        self.dim
    }

    pub fn items(&self) -> &[Item] {
        &self.items
    }

    pub fn get(&self, name: &str) -> Result<&Object> {
        match self.index.get(name) {
            Some(&i) => match &self.items[i] {
                Item::Decl(d) => Ok(&d.object),
                _ => unreachable!("index points at a declaration"),
            },
            None => Err(CliError::UnknownName(name.to_string())),
        }
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    /// Append a declaration; the name must be fresh and the object must
    /// live in the document's dimension.
    pub fn push(&mut self, name: &str, object: Object) -> Result<()> {
        check_name(name).map_err(CliError::Usage)?;
        if self.contains(name) {
            return Err(CliError::Usage(format!("duplicate name `{name}`")));
        }
        let dim = self
            .dim
            .ok_or_else(|| CliError::Usage("document has no dim".into()))?;
        if object.dim() != dim {
            return Err(CliError::Validation {
                name: name.to_string(),
                source: CoreError::DimensionMismatch {
                    expected: dim,
                    found: object.dim(),
                },
            });
        }
        self.index.insert(name.to_string(), self.items.len());
        self.items.push(Item::Decl(Decl {
            name: name.to_string(),
            object,
            comment: None,
        }));
        Ok(())
    }

    pub fn print(&self) -> String {
        let mut out = String::new();
        for item in &self.items {
            match item {
                Item::Blank => {}
                Item::Comment(c) => out.push_str(c),
                Item::Dim { dim, comment } => {
                    out.push_str(&format!("dim {dim}"));
                    push_comment(&mut out, comment);
                }
                Item::Decl(d) => {
                    out.push_str(&print_decl(d));
                    push_comment(&mut out, &d.comment);
                }
            }
            out.push('\n');
        }
        out
    }
}

fn push_comment(out: &mut String, comment: &Option<String>) {
    if let Some(c) = comment {
        out.push(' ');
        out.push_str(c);
    }
}

fn matrix_block(m: &DMatrix<f64>) -> String {
    let rows: Vec<String> = m
        .row_iter()
        .map(|r| format!("  {}", format::row(r.iter().copied())))
        .collect();
    format!("[\n{}\n]", rows.join(",\n"))
}

fn print_decl(d: &Decl) -> String {
    let name = &d.name;
    match &d.object {
        Object::Multivector(x) => format!("multivector {name} = {}", format::multivector(x)),
        Object::Extensor(t) => {
            let grades = if t.is_linear_operator() {
                String::new()
            } else {
                format!(" ({}, {})", t.p(), t.q())
            };
            format!("extensor {name}{grades} = {}", matrix_block(t.matrix()))
        }
        Object::General(t) => format!("general {name} = {}", matrix_block(t.matrix())),
        Object::Elementary(t) => format!(
            "elementary {name} ({}, {}) = {}",
            t.k(),
            t.q(),
            matrix_block(t.components_matrix())
        ),
        Object::Frame(f) => {
            let vs: Vec<String> = f.vectors().iter().map(format::multivector).collect();
            format!("frame {name} = [{}]", vs.join(", "))
        }
        Object::Components { set, frame } => {
            let params = match set.family {
                Family::Pq { p, q } => format!(" ({p}, {q})"),
                Family::Elementary { k, q } => format!(" ({k}, {q})"),
                Family::General => String::new(),
            };
            format!(
                "components {name} {}{params} in {} = {}",
                set.kind().name(),
                frame.text(),
                matrix_block(&set.values)
            )
        }
    }
}

fn check_dim(dim: usize) -> Result<()> {
    if (1..=MAX_DIM).contains(&dim) {
        Ok(())
    } else {
        Err(CliError::Validation {
            name: "dim".into(),
            source: CoreError::DimensionOutOfRange(dim),
        })
    }
}

fn is_blade_word(s: &str) -> bool {
    s.strip_prefix('e')
        .is_some_and(|rest| rest.chars().all(|c| c.is_ascii_digit()))
}

fn check_name(name: &str) -> std::result::Result<(), String> {
    let valid = name
        .chars()
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    if !valid {
        Err(format!("`{name}` is not a valid name"))
    } else if KEYWORDS.contains(&name) {
        Err(format!("`{name}` is a reserved word"))
    } else if is_blade_word(name) {
        Err(format!("`{name}` is a blade, not a name"))
    } else {
        Ok(())
    }
}

// ---- lexer ----

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Num(f64),
    LBracket,
    RBracket,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Plus,
    Minus,
    Star,
    Eq,
    Newline,
    Comment(String),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Num(x) => format!("number {x}"),
            Tok::Newline => "end of line".into(),
            Tok::Comment(_) => "comment".into(),
            Tok::Eof => "end of input".into(),
            other => {
                let s = match other {
                    Tok::LBracket => "[",
                    Tok::RBracket => "]",
                    Tok::LParen => "(",
                    Tok::RParen => ")",
                    Tok::LBrace => "{",
                    Tok::RBrace => "}",
                    Tok::Comma => ",",
                    Tok::Plus => "+",
                    Tok::Minus => "-",
                    Tok::Star => "*",
                    _ => "=",
                };
                format!("`{s}`")
            }
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn lex(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    for (li, line) in src.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        let lineno = li + 1;
        while i < chars.len() {
            let c = chars[i];
            let column = i + 1;
            let single = match c {
                '[' => Some(Tok::LBracket),
                ']' => Some(Tok::RBracket),
                '(' => Some(Tok::LParen),
                ')' => Some(Tok::RParen),
                '{' => Some(Tok::LBrace),
                '}' => Some(Tok::RBrace),
                ',' => Some(Tok::Comma),
                '+' => Some(Tok::Plus),
                '-' => Some(Tok::Minus),
                '*' => Some(Tok::Star),
                '=' => Some(Tok::Eq),
                _ => None,
            };
            if let Some(tok) = single {
                out.push(Token {
                    tok,
                    line: lineno,
                    column,
                });
                i += 1;
            } else if c == '#' {
                out.push(Token {
                    tok: Tok::Comment(chars[i..].iter().collect::<String>().trim_end().to_string()),
                    line: lineno,
                    column,
                });
                i = chars.len();
            } else if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit()
                || (c == '.' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit()))
            {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if i < chars.len() && chars[i] == '.' {
                    i += 1;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                    let mut j = i + 1;
                    if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
                        j += 1;
                    }
                    if j < chars.len() && chars[j].is_ascii_digit() {
                        while j < chars.len() && chars[j].is_ascii_digit() {
                            j += 1;
                        }
                        i = j;
                    }
                }
                let text: String = chars[start..i].iter().collect();
                let value: f64 = text
                    .parse()
                    .map_err(|_| parse_error(lineno, column, format!("bad number `{text}`")))?;
                if !value.is_finite() {
                    return Err(parse_error(
                        lineno,
                        column,
                        format!("number `{text}` overflows"),
                    ));
                }
                out.push(Token {
                    tok: Tok::Num(value),
                    line: lineno,
                    column,
                });
            } else if c.is_ascii_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token {
                    tok: Tok::Ident(chars[start..i].iter().collect()),
                    line: lineno,
                    column,
                });
            } else {
                return Err(parse_error(
                    lineno,
                    column,
                    format!("unexpected character `{c}`"),
                ));
            }
        }
        out.push(Token {
            tok: Tok::Newline,
            line: lineno,
            column: chars.len() + 1,
        });
    }
    let last = src.lines().count();
    out.push(Token {
        tok: Tok::Eof,
        line: last + 1,
        column: 1,
    });
    Ok(out)
}

// ---- parser ----

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    ws: Workspace,
}

impl Parser {
    fn new(tokens: Vec<Token>) -> Self {
        Parser {
            tokens,
            pos: 0,
            ws: Workspace::default(),
        }
    }

    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].tok
    }

    fn here(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T> {
        let t = self.here();
        Err(parse_error(t.line, t.column, message))
    }

    fn unexpected<T>(&self, wanted: &str) -> Result<T> {
        self.fail(format!(
            "expected {wanted}, found {}",
            self.peek().describe()
        ))
    }

    fn expect(&mut self, tok: Tok, wanted: &str) -> Result<Token> {
        if *self.peek() == tok {
            Ok(self.bump())
        } else {
            self.unexpected(wanted)
        }
    }

    fn skip_newlines(&mut self) {
        while *self.peek() == Tok::Newline {
            self.bump();
        }
    }

    fn ident(&mut self, wanted: &str) -> Result<(String, Token)> {
        match self.peek().clone() {
            Tok::Ident(s) => Ok((s, self.bump())),
            _ => self.unexpected(wanted),
        }
    }

    fn unsigned_int(&mut self, wanted: &str) -> Result<usize> {
        match *self.peek() {
            Tok::Num(x) if x >= 0.0 && x.fract() == 0.0 && x <= 1e9 => {
                self.bump();
                Ok(x as usize)
            }
            _ => self.unexpected(wanted),
        }
    }

    fn signed_number(&mut self) -> Result<f64> {
        let sign = match self.peek() {
            Tok::Minus => {
                self.bump();
                -1.0
            }
            Tok::Plus => {
                self.bump();
                1.0
            }
            _ => 1.0,
        };
        match *self.peek() {
            Tok::Num(x) => {
                self.bump();
                Ok(sign * x)
            }
            _ => self.unexpected("a number"),
        }
    }

    fn document(mut self) -> Result<Workspace> {
        loop {
            match self.peek().clone() {
                Tok::Eof => break,
                Tok::Newline => {
                    self.bump();
                    self.ws.items.push(Item::Blank);
                }
                Tok::Comment(c) => {
                    self.bump();
                    self.end_of_statement()?;
                    self.ws.items.push(Item::Comment(c));
                }
                _ => {
                    let item = self.statement()?;
                    let comment = match self.peek().clone() {
                        Tok::Comment(c) => {
                            self.bump();
                            Some(c)
                        }
                        _ => None,
                    };
                    self.end_of_statement()?;
                    self.ws.items.push(match item {
                        Item::Dim { dim, .. } => Item::Dim { dim, comment },
                        Item::Decl(mut d) => {
                            d.comment = comment;
                            self.ws.index.insert(d.name.clone(), self.ws.items.len());
                            Item::Decl(d)
                        }
                        other => other,
                    });
                }
            }
        }
        Ok(self.ws)
    }

    fn end_of_statement(&mut self) -> Result<()> {
        match self.peek() {
            Tok::Newline => {
                self.bump();
                Ok(())
            }
            Tok::Eof => Ok(()),
            _ => self.unexpected("end of line"),
        }
    }

    fn statement(&mut self) -> Result<Item> {
        let (keyword, at) = self.ident("a declaration")?;
        if keyword == "dim" {
            if self.ws.dim.is_some() {
                return Err(parse_error(at.line, at.column, "dim declared twice"));
            }
            let dim = self.unsigned_int("a dimension")?;
            check_dim(dim)?;
            self.ws.dim = Some(dim);
            return Ok(Item::Dim { dim, comment: None });
        }
        let Some(n) = self.ws.dim else {
            return Err(parse_error(
                at.line,
                at.column,
                "declarations must follow `dim`",
            ));
        };
        let (name, name_at) = self.ident("a name")?;
        if let Err(msg) = check_name(&name) {
            return Err(parse_error(name_at.line, name_at.column, msg));
        }
        if self.ws.contains(&name) {
            return Err(parse_error(
                name_at.line,
                name_at.column,
                format!("duplicate name `{name}`"),
            ));
        }
        let validation = |source: CoreError| CliError::Validation {
            name: name.clone(),
            source,
        };
        let object = match keyword.as_str() {
            "multivector" => {
                self.expect(Tok::Eq, "`=`")?;
                Object::Multivector(self.expression(n)?)
            }
            "extensor" => {
                let (p, q) = if *self.peek() == Tok::LParen {
                    self.pair()?
                } else {
                    (1, 1)
                };
                self.expect(Tok::Eq, "`=`")?;
                let m = self.matrix()?;
                Object::Extensor(PqExtensor::new(n, p, q, m).map_err(validation)?)
            }
            "general" => {
                self.expect(Tok::Eq, "`=`")?;
                let m = self.matrix()?;
                Object::General(GeneralExtensor::new(n, m).map_err(validation)?)
            }
            "elementary" => {
                let (k, q) = self.pair()?;
                self.expect(Tok::Eq, "`=`")?;
                let m = self.matrix()?;
                Object::Elementary(ElementaryKExtensor::new(n, k, q, m).map_err(validation)?)
            }
            "frame" => {
                self.expect(Tok::Eq, "`=`")?;
                let vectors = self.vector_list(n)?;
                Object::Frame(Frame::new(vectors).map_err(validation)?)
            }
            "components" => self.components(n, &name)?,
            _ => {
                return Err(parse_error(
                    at.line,
                    at.column,
                    format!("unknown declaration `{keyword}`"),
                ))
            }
        };
        Ok(Item::Decl(Decl {
            name,
            object,
            comment: None,
        }))
    }

    fn pair(&mut self) -> Result<(usize, usize)> {
        self.expect(Tok::LParen, "`(`")?;
        let a = self.unsigned_int("a grade")?;
        self.expect(Tok::Comma, "`,`")?;
        let b = self.unsigned_int("a grade")?;
        self.expect(Tok::RParen, "`)`")?;
        Ok((a, b))
    }

    fn components(&mut self, n: usize, name: &str) -> Result<Object> {
        let (kind_word, kind_at) = self.ident("a component kind")?;
        let Some(kind) = ComponentKind::ALL
            .iter()
            .copied()
            .find(|k| k.name() == kind_word)
        else {
            let names: Vec<&str> = ComponentKind::ALL.iter().map(|k| k.name()).collect();
            return Err(parse_error(
                kind_at.line,
                kind_at.column,
                format!(
                    "unknown component kind `{kind_word}`; one of {}",
                    names.join(", ")
                ),
            ));
        };
        use ComponentKind::*;
        let (family, variance) = match kind {
            PqCovariant | PqContravariant => {
                let (p, q) = self.pair()?;
                (Family::Pq { p, q }, variance_of(kind))
            }
            ElementaryCovariant | ElementaryContravariant => {
                let (k, q) = self.pair()?;
                (Family::Elementary { k, q }, variance_of(kind))
            }
            GeneralCovariant | GeneralContravariant => (Family::General, variance_of(kind)),
        };
        let (word, _) = self.ident("`in`")?;
        if word != "in" {
            return self.fail("expected `in`");
        }
        let (frame_name, frame_at) = self.ident("a frame name or `canonical`")?;
        let (frame, frame_ref) = if frame_name == "canonical" {
            (Frame::canonical(n), FrameRef::Canonical)
        } else {
            match self.ws.get(&frame_name) {
                Ok(Object::Frame(f)) => (f.clone(), FrameRef::Named(frame_name)),
                Ok(other) => {
                    return Err(parse_error(
                        frame_at.line,
                        frame_at.column,
                        format!("`{frame_name}` is a {}, not a frame", other.kind_name()),
                    ))
                }
                Err(_) => {
                    return Err(parse_error(
                        frame_at.line,
                        frame_at.column,
                        format!("unknown frame `{frame_name}`"),
                    ))
                }
            }
        };
        self.expect(Tok::Eq, "`=`")?;
        let values = self.matrix()?;
        let set = ComponentSet {
            family,
            variance,
            frame,
            values,
        };
        let validation = |source| CliError::Validation {
            name: name.to_string(),
            source,
        };
        let expected = set.expected_shape().map_err(validation)?;
        if set.values.shape() != expected {
            return Err(validation(CoreError::ShapeMismatch {
                expected,
                found: set.values.shape(),
            }));
        }
        Ok(Object::Components {
            set,
            frame: frame_ref,
        })
    }

    fn matrix(&mut self) -> Result<DMatrix<f64>> {
        self.expect(Tok::LBracket, "`[`")?;
        self.skip_newlines();
        let mut rows: Vec<Vec<f64>> = Vec::new();
        loop {
            let row_at = self.here().clone();
            self.expect(Tok::LBracket, "`[` starting a row")?;
            let mut row = Vec::new();
            self.skip_newlines();
            loop {
                row.push(self.signed_number()?);
                self.skip_newlines();
                match self.peek() {
                    Tok::Comma => {
                        self.bump();
                        self.skip_newlines();
                    }
                    Tok::RBracket => {
                        self.bump();
                        break;
                    }
                    _ => return self.unexpected("`,` or `]`"),
                }
            }
            if let Some(first) = rows.first() {
                if first.len() != row.len() {
                    return Err(parse_error(
                        row_at.line,
                        row_at.column,
                        format!("row has {} entries, expected {}", row.len(), first.len()),
                    ));
                }
            }
            rows.push(row);
            self.skip_newlines();
            match self.peek() {
                Tok::Comma => {
                    self.bump();
                    self.skip_newlines();
                }
                Tok::RBracket => {
                    self.bump();
                    break;
                }
                _ => return self.unexpected("`,` or `]`"),
            }
        }
        let cols = rows[0].len();
        Ok(DMatrix::from_fn(rows.len(), cols, |i, j| rows[i][j]))
    }

    fn vector_list(&mut self, n: usize) -> Result<Vec<Multivector>> {
        self.expect(Tok::LBracket, "`[`")?;
        self.skip_newlines();
        let mut out = Vec::new();
        loop {
            out.push(self.expression(n)?);
            self.skip_newlines();
            match self.peek() {
                Tok::Comma => {
                    self.bump();
                    self.skip_newlines();
                }
                Tok::RBracket => {
                    self.bump();
                    return Ok(out);
                }
                _ => return self.unexpected("`,` or `]`"),
            }
        }
    }

    /// `term (± term)*` with `term := number | number*blade | blade`.
    fn expression(&mut self, n: usize) -> Result<Multivector> {
        let mut acc = Multivector::zero(n);
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Tok::Plus => {
                    self.bump();
                    1.0
                }
                Tok::Minus => {
                    self.bump();
                    -1.0
                }
                _ if first => 1.0,
                _ => break,
            };
            first = false;
            let (coeff, mask, blade_sign) = match self.peek().clone() {
                Tok::Num(x) => {
                    self.bump();
                    if *self.peek() == Tok::Star {
                        self.bump();
                        let (m, s) = self.blade(n)?;
                        (x, m, s)
                    } else {
                        (x, 0, 1.0)
                    }
                }
                Tok::Ident(_) => {
                    let (m, s) = self.blade(n)?;
                    (1.0, m, s)
                }
                _ => return self.unexpected("a term"),
            };
            let value = acc.get(mask) + sign * blade_sign * coeff;
            acc.set(mask, value);
        }
        Ok(acc)
    }

    /// A blade word `e13` or `e{1,10}`; returns its mask and the sign of
    /// sorting its indices.
    fn blade(&mut self, n: usize) -> Result<(Mask, f64)> {
        let at = self.here().clone();
        let (word, _) = self.ident("a blade")?;
        if !is_blade_word(&word) {
            return Err(parse_error(
                at.line,
                at.column,
                format!("`{word}` is not a blade; write e.g. e1, e23 or e{{1,10}}"),
            ));
        }
        let indices: Vec<usize> = if word == "e" && *self.peek() == Tok::LBrace {
            self.bump();
            let mut v = vec![self.unsigned_int("an index")?];
            while *self.peek() == Tok::Comma {
                self.bump();
                v.push(self.unsigned_int("an index")?);
            }
            self.expect(Tok::RBrace, "`}`")?;
            v
        } else {
            word[1..]
                .chars()
                .map(|c| c.to_digit(10).expect("digit") as usize)
                .collect()
        };
        if indices.is_empty() {
            return Err(parse_error(
                at.line,
                at.column,
                "blade needs at least one index",
            ));
        }
        let mut mask: Mask = 0;
        for &i in &indices {
            if i == 0 || i > n {
                return Err(parse_error(
                    at.line,
                    at.column,
                    format!("blade index {i} outside 1..{n}"),
                ));
            }
            if mask & (1 << (i - 1)) != 0 {
                return Err(parse_error(
                    at.line,
                    at.column,
                    format!("blade repeats index {i}"),
                ));
            }
            mask |= 1 << (i - 1);
        }
        let inversions = (0..indices.len())
            .flat_map(|a| (a + 1..indices.len()).map(move |b| (a, b)))
            .filter(|&(a, b)| indices[a] > indices[b])
            .count();
        debug_assert_eq!(blade::indices_of(mask).len(), indices.len());
        Ok((mask, if inversions % 2 == 0 { 1.0 } else { -1.0 }))
    }
}

fn variance_of(kind: ComponentKind) -> Variance {
    use ComponentKind::*;
    match kind {
        PqCovariant | GeneralCovariant | ElementaryCovariant => Variance::Covariant,
        _ => Variance::Contravariant,
    }
}
