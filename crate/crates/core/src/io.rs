//! Text formats for instances and the JSON format for labelling sets.
//!
//! SETAFs use `arg(a).` and `att([a,b],c).`; ADFs use `s(a).` and
//! `ac(a, neg(b)).`. `%` starts a comment that runs to the end of the line.

use std::{collections::BTreeMap, fmt, str::FromStr};

use serde::{Deserialize, Serialize};

use crate::{
    adf::Adf,
    error::{Error, Result},
    formula::Formula,
    model::{ArgumentId, Attack, Domain, Labelling, LabellingSet, Semantics, Setaf, Value3},
};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Dot,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::LBracket => f.write_str("`[`"),
            Tok::RBracket => f.write_str("`]`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Dot => f.write_str("`.`"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pos {
    line: usize,
    column: usize,
}

fn parse_error(pos: Pos, code: &'static str, message: impl Into<String>) -> Error {
    Error::Parse {
        line: pos.line,
        column: pos.column,
        code,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>> {
    let mut tokens = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, column };
        let single = match c {
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            ',' => Some(Tok::Comma),
            '.' => Some(Tok::Dot),
            _ => None,
        };
        if let Some(tok) = single {
            chars.next();
            column += 1;
            tokens.push((tok, pos));
        } else if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
        } else if c.is_whitespace() {
            chars.next();
            column += 1;
        } else if c == '%' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                chars.next();
            }
        } else if c.is_ascii_alphanumeric() || c == '_' {
            let mut ident = String::new();
            while let Some(&c) = chars
                .peek()
                .filter(|c| c.is_ascii_alphanumeric() || **c == '_')
            {
                ident.push(c);
                chars.next();
                column += 1;
            }
            tokens.push((Tok::Ident(ident), pos));
        } else {
            return Err(parse_error(
                pos,
                "syntax",
                format!("unexpected character {c:?}"),
            ));
        }
    }
    Ok(tokens)
}

type Located = (ArgumentId, Pos);

struct Parser {
    tokens: Vec<(Tok, Pos)>,
    at: usize,
    end: Pos,
}

impl Parser {
    fn new(text: &str) -> Result<Self> {
        let tokens = lex(text)?;
        let lines = text.split('\n').collect::<Vec<_>>();
        let end = Pos {
            line: lines.len(),
            column: lines.last().map_or(0, |l| l.chars().count()) + 1,
        };
        Ok(Parser { tokens, at: 0, end })
    }

    fn done(&self) -> bool {
        self.at >= self.tokens.len()
    }

    fn pos(&self) -> Pos {
        self.tokens.get(self.at).map_or(self.end, |t| t.1)
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.at).map(|t| &t.0)
    }

    fn unexpected(&self, wanted: &str) -> Error {
        let found = self
            .peek()
            .map_or_else(|| "end of input".to_string(), |t| t.to_string());
        parse_error(
            self.pos(),
            "syntax",
            format!("expected {wanted}, found {found}"),
        )
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        if self.peek() == Some(&tok) {
            self.at += 1;
            Ok(())
        } else {
            Err(self.unexpected(&tok.to_string()))
        }
    }

    fn ident(&mut self) -> Result<(String, Pos)> {
        match self.tokens.get(self.at) {
            Some((Tok::Ident(s), pos)) => {
                let out = (s.clone(), *pos);
                self.at += 1;
                Ok(out)
            }
            _ => Err(self.unexpected("an identifier")),
        }
    }

    fn id(&mut self) -> Result<Located> {
        let (name, pos) = self.ident()?;
        let id = ArgumentId::new(name)
            .map_err(|e| parse_error(pos, "invalid-identifier", e.to_string()))?;
        Ok((id, pos))
    }

    fn id_list(&mut self) -> Result<Vec<Located>> {
        self.expect(Tok::LBracket)?;
        let mut out = Vec::new();
        if self.peek() == Some(&Tok::RBracket) {
            self.at += 1;
            return Ok(out);
        }
        loop {
            out.push(self.id()?);
            match self.peek() {
                Some(Tok::Comma) => self.at += 1,
                Some(Tok::RBracket) => {
                    self.at += 1;
                    return Ok(out);
                }
                _ => return Err(self.unexpected("`,` or `]`")),
            }
        }
    }

    fn formula(&mut self, atoms: &mut Vec<Located>) -> Result<Formula> {
        let (name, pos) = self.ident()?;
        if self.peek() != Some(&Tok::LParen) {
            let id = ArgumentId::new(name)
                .map_err(|e| parse_error(pos, "invalid-identifier", e.to_string()))?;
            atoms.push((id.clone(), pos));
            return Ok(Formula::atom(id));
        }
        self.at += 1;
        let formula = match name.as_str() {
            "c" => match self.ident()?.0.as_str() {
                "v" => Formula::Top,
                "f" => Formula::Bot,
                other => {
                    return Err(parse_error(
                        pos,
                        "syntax",
                        format!("unknown constant c({other}), expected c(v) or c(f)"),
                    ))
                }
            },
            "neg" => Formula::neg(self.formula(atoms)?),
            "and" | "or" => {
                let mut parts = vec![self.formula(atoms)?];
                while self.peek() == Some(&Tok::Comma) {
                    self.at += 1;
                    parts.push(self.formula(atoms)?);
                }
                if name == "and" {
                    Formula::And(parts)
                } else {
                    Formula::Or(parts)
                }
            }
            "imp" | "iff" => {
                let lhs = self.formula(atoms)?;
                self.expect(Tok::Comma)?;
                let rhs = self.formula(atoms)?;
                if name == "imp" {
                    Formula::imp(lhs, rhs)
                } else {
                    Formula::iff(lhs, rhs)
                }
            }
            other => {
                return Err(parse_error(
                    pos,
                    "syntax",
                    format!("unknown connective {other}"),
                ))
            }
        };
        self.expect(Tok::RParen)?;
        Ok(formula)
    }
}

/// Kind of an instance file.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InstanceKind {
    Setaf,
    Adf,
}

impl FromStr for InstanceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "setaf" => Ok(InstanceKind::Setaf),
            "adf" => Ok(InstanceKind::Adf),
            other => Err(Error::Precondition(format!(
                "unknown instance kind {other}, expected setaf or adf"
            ))),
        }
    }
}

impl fmt::Display for InstanceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InstanceKind::Setaf => "setaf",
            InstanceKind::Adf => "adf",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Setaf(Setaf),
    Adf(Adf),
}

/// A parsed instance file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceDocument {
    pub kind: InstanceKind,
    pub body: Instance,
    pub source_path: String,
}

/// Guesses the kind from the first statement keyword; an input without
/// statements counts as an (empty) SETAF.
pub fn detect_kind(text: &str) -> Result<InstanceKind> {
    let tokens = lex(text)?;
    match tokens.first() {
        None => Ok(InstanceKind::Setaf),
        Some((Tok::Ident(k), pos)) => match k.as_str() {
            "arg" | "att" => Ok(InstanceKind::Setaf),
            "s" | "ac" => Ok(InstanceKind::Adf),
            other => Err(parse_error(
                *pos,
                "syntax",
                format!("unknown statement {other}, expected arg, att, s or ac"),
            )),
        },
        Some((tok, pos)) => Err(parse_error(*pos, "syntax", format!("unexpected {tok}"))),
    }
}

pub fn parse_instance(
    text: &str,
    kind: Option<InstanceKind>,
    source_path: &str,
) -> Result<InstanceDocument> {
    let kind = match kind {
        Some(k) => k,
        None => detect_kind(text)?,
    };
    let body = match kind {
        InstanceKind::Setaf => Instance::Setaf(parse_setaf(text)?),
        InstanceKind::Adf => Instance::Adf(parse_adf(text)?),
    };
    Ok(InstanceDocument {
        kind,
        body,
        source_path: source_path.to_string(),
    })
}

pub fn parse_setaf(text: &str) -> Result<Setaf> {
    let mut p = Parser::new(text)?;
    let mut args: Vec<Located> = Vec::new();
    let mut attacks: Vec<(Vec<Located>, Located, Pos)> = Vec::new();
    while !p.done() {
        let (keyword, pos) = p.ident()?;
        p.expect(Tok::LParen)?;
        match keyword.as_str() {
            "arg" => args.push(p.id()?),
            "att" => {
                let attackers = if p.peek() == Some(&Tok::LBracket) {
                    p.id_list()?
                } else {
                    vec![p.id()?]
                };
                p.expect(Tok::Comma)?;
                let target = p.id()?;
                attacks.push((attackers, target, pos));
            }
            other => {
                return Err(parse_error(
                    pos,
                    "syntax",
                    format!("unknown statement {other} in a SETAF, expected arg or att"),
                ))
            }
        }
        p.expect(Tok::RParen)?;
        p.expect(Tok::Dot)?;
    }

    let mut declared = BTreeMap::new();
    for (a, pos) in &args {
        if declared.insert(a.clone(), *pos).is_some() {
            return Err(parse_error(
                *pos,
                "duplicate-argument",
                format!("argument {a} declared twice"),
            ));
        }
    }
    let mut seen = BTreeMap::new();
    for (attackers, (target, target_pos), pos) in &attacks {
        if attackers.is_empty() {
            return Err(parse_error(
                *pos,
                "empty-attacker-set",
                format!("attack on {target} has no attackers"),
            ));
        }
        for (a, apos) in attackers.iter().chain([&(target.clone(), *target_pos)]) {
            if !declared.contains_key(a) {
                return Err(parse_error(
                    *apos,
                    "undeclared-argument",
                    format!("argument {a} is not declared"),
                ));
            }
        }
        let attack = Attack::new(attackers.iter().map(|(a, _)| a.clone()), target.clone());
        if seen.insert(attack.clone(), *pos).is_some() {
            return Err(parse_error(
                *pos,
                "duplicate-attack",
                format!("attack {attack} declared twice"),
            ));
        }
    }
    Setaf::new(declared.into_keys(), seen.into_keys())
}

pub fn parse_adf(text: &str) -> Result<Adf> {
    let mut p = Parser::new(text)?;
    let mut statements: BTreeMap<ArgumentId, Pos> = BTreeMap::new();
    let mut conditions: BTreeMap<ArgumentId, (Formula, Pos)> = BTreeMap::new();
    let mut atoms: Vec<Located> = Vec::new();
    let mut targets: Vec<Located> = Vec::new();
    while !p.done() {
        let (keyword, pos) = p.ident()?;
        p.expect(Tok::LParen)?;
        match keyword.as_str() {
            "s" => {
                let (s, spos) = p.id()?;
                if statements.insert(s.clone(), spos).is_some() {
                    return Err(parse_error(
                        spos,
                        "duplicate-argument",
                        format!("statement {s} declared twice"),
                    ));
                }
            }
            "ac" => {
                let (s, spos) = p.id()?;
                p.expect(Tok::Comma)?;
                let phi = p.formula(&mut atoms)?;
                if conditions.insert(s.clone(), (phi, pos)).is_some() {
                    return Err(parse_error(
                        pos,
                        "duplicate-acceptance-condition",
                        format!("statement {s} has two acceptance conditions"),
                    ));
                }
                targets.push((s, spos));
            }
            other => {
                return Err(parse_error(
                    pos,
                    "syntax",
                    format!("unknown statement {other} in an ADF, expected s or ac"),
                ))
            }
        }
        p.expect(Tok::RParen)?;
        p.expect(Tok::Dot)?;
    }
    for (a, pos) in targets.iter().chain(&atoms) {
        if !statements.contains_key(a) {
            return Err(parse_error(
                *pos,
                "undeclared-argument",
                format!("statement {a} is not declared"),
            ));
        }
    }
    let mut pairs = Vec::new();
    for (s, pos) in &statements {
        match conditions.remove(s) {
            Some((phi, _)) => pairs.push((s.clone(), phi)),
            None => {
                return Err(parse_error(
                    *pos,
                    "missing-acceptance-condition",
                    format!("statement {s} has no acceptance condition"),
                ))
            }
        }
    }
    Adf::new(pairs)
}

/// Canonical SETAF text: arguments, then attacks, one statement per line.
pub fn write_setaf(f: &Setaf) -> String {
    let mut out = String::new();
    for a in f.arguments().iter() {
        out.push_str(&format!("arg({a}).\n"));
    }
    for att in f.attacks() {
        let attackers: Vec<&str> = att.attackers.iter().map(ArgumentId::as_str).collect();
        out.push_str(&format!("att([{}],{}).\n", attackers.join(","), att.target));
    }
    out
}

/// Canonical ADF text: statements, then acceptance conditions.
pub fn write_adf(d: &Adf) -> String {
    let mut out = String::new();
    for s in d.statements().iter() {
        out.push_str(&format!("s({s}).\n"));
    }
    for (s, phi) in d.conditions() {
        out.push_str(&format!("ac({s},{phi}).\n"));
    }
    out
}

/// One labelling as its three parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabellingTriple {
    #[serde(rename = "in")]
    pub in_part: Vec<ArgumentId>,
    #[serde(rename = "out")]
    pub out_part: Vec<ArgumentId>,
    #[serde(rename = "undec")]
    pub undec_part: Vec<ArgumentId>,
}

impl LabellingTriple {
    fn of(l: &Labelling) -> Self {
        LabellingTriple {
            in_part: l.part(Value3::In).into_iter().collect(),
            out_part: l.part(Value3::Out).into_iter().collect(),
            undec_part: l.part(Value3::Undec).into_iter().collect(),
        }
    }
}

/// JSON interchange format for labelling sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabellingDocument {
    pub arguments: Vec<ArgumentId>,
    pub labellings: Vec<LabellingTriple>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub semantics: Option<String>,
}

impl LabellingDocument {
    pub fn from_set(set: &LabellingSet, semantics: Option<Semantics>) -> Self {
        LabellingDocument {
            arguments: set.arguments().to_vec(),
            labellings: canonical_order(set)
                .into_iter()
                .map(LabellingTriple::of)
                .collect(),
            semantics: semantics.map(|s| s.name().to_string()),
        }
    }

    /// Every triple must partition `arguments`; duplicate labellings are
    /// rejected.
    pub fn to_set(&self) -> Result<LabellingSet> {
        let domain = Domain::new(self.arguments.iter().cloned())?;
        let members = self
            .labellings
            .iter()
            .map(|t| Labelling::from_parts_sets(&domain, &t.in_part, &t.out_part, &t.undec_part))
            .collect::<Result<Vec<_>>>()?;
        LabellingSet::new(domain, members)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            code: "json",
            message: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("labelling documents serialize")
    }
}

/// Members sorted by their in-, out- and undec-lists, compared
/// lexicographically. This is the order used for all printed output.
pub fn canonical_order(set: &LabellingSet) -> Vec<&Labelling> {
    let mut members: Vec<(&Labelling, LabellingTriple)> =
        set.iter().map(|l| (l, LabellingTriple::of(l))).collect();
    members.sort_by(|(_, x), (_, y)| {
        (&x.in_part, &x.out_part, &x.undec_part).cmp(&(&y.in_part, &y.out_part, &y.undec_part))
    });
    members.into_iter().map(|(l, _)| l).collect()
}

/// One `in:{..} out:{..} undec:{..}` line per member, in canonical order.
pub fn format_labellings(set: &LabellingSet) -> String {
    canonical_order(set)
        .into_iter()
        .map(|l| format!("{l}\n"))
        .collect()
}
