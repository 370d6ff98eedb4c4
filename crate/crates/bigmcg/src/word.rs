//! The free word calculus of mapping classes.
//!
//! Words are finite sequences of generator tokens with the functional
//! convention: the rightmost token acts first. Words stay symbolic; nothing
//! is evaluated on homology until asked, so partially defined handle shifts
//! only fail at evaluation time.
//!
//! Grammar (wire format of script files and the `eval` subcommand):
//!
//! ```text
//! word   := [ term (* term)* ]
//! term   := factor [ ^ integer ]
//! factor := atom | ( word ) | inv( word ) | conj( word , word )
//! atom   := A[i,j] | A'[i,j] | B[i,j] | C[i,j] | C0[i] | D[k]
//!         | rho1 | rho2 | tau1 | tau2 | h[i] | R | rho3 | rho4 | rho5
//!         | defined name (script files only)
//! ```
//!
//! `conj(x, f)` means `f x f^-1`. The derived rotations expand structurally:
//! `R = rho1*rho2`, `rho3 = R^3*rho1*R^-3`, `rho4 = R*rho1*inv(R)`,
//! `rho5 = R*rho2*inv(R)`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::WordError;
use crate::surface::CurveName;

/// One generator with an exponent sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GeneratorToken {
    pub kind: TokenKind,
    pub inverse: bool,
}

/// Alphabet of primitive generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TokenKind {
    /// Dehn twist about a named curve.
    Twist(CurveName),
    Rho1,
    Rho2,
    Tau1,
    Tau2,
    /// Handle shift between arms `i` and `i+1`.
    Shift(u32),
}

impl GeneratorToken {
    pub fn new(kind: TokenKind) -> Self {
        GeneratorToken { kind, inverse: false }
    }

    pub fn inverted(self) -> Self {
        GeneratorToken { kind: self.kind, inverse: !self.inverse }
    }

    fn atom_text(&self) -> String {
        match self.kind {
            TokenKind::Twist(c) => {
                let mut s = c.to_string();
                // Twist atoms are the upper-case forms of curve names.
                s.replace_range(0..1, &s[0..1].to_uppercase());
                s
            }
            TokenKind::Rho1 => "rho1".into(),
            TokenKind::Rho2 => "rho2".into(),
            TokenKind::Tau1 => "tau1".into(),
            TokenKind::Tau2 => "tau2".into(),
            TokenKind::Shift(i) => format!("h[{i}]"),
        }
    }
}

impl fmt::Display for GeneratorToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "inv({})", self.atom_text())
        } else {
            write!(f, "{}", self.atom_text())
        }
    }
}

/// A word in the generators; the empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MappingWord {
    tokens: Vec<GeneratorToken>,
}

impl MappingWord {
    pub fn empty() -> Self {
        MappingWord { tokens: Vec::new() }
    }

    pub fn from_tokens(tokens: Vec<GeneratorToken>) -> Self {
        MappingWord { tokens }
    }

    pub fn single(kind: TokenKind) -> Self {
        MappingWord { tokens: vec![GeneratorToken::new(kind)] }
    }

    pub fn tokens(&self) -> &[GeneratorToken] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// `self` followed by `v` in the functional convention: the tokens of `v`
    /// act first.
    pub fn compose(&self, v: &MappingWord) -> MappingWord {
        let mut tokens = self.tokens.clone();
        tokens.extend_from_slice(&v.tokens);
        MappingWord { tokens }
    }

    /// Reverse the order and flip every sign.
    pub fn invert(&self) -> MappingWord {
        MappingWord {
            tokens: self.tokens.iter().rev().map(|t| t.inverted()).collect(),
        }
    }

    /// `f * self * f^-1`.
    pub fn conjugate_by(&self, f: &MappingWord) -> MappingWord {
        f.compose(self).compose(&f.invert())
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, k: i64) -> MappingWord {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut tokens = Vec::with_capacity(base.tokens.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            tokens.extend_from_slice(&base.tokens);
        }
        MappingWord { tokens }
    }

    /// Cancel adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> MappingWord {
        let mut stack: Vec<GeneratorToken> = Vec::with_capacity(self.tokens.len());
        for &t in &self.tokens {
            match stack.last() {
                Some(&top) if top.kind == t.kind && top.inverse != t.inverse => {
                    stack.pop();
                }
                _ => stack.push(t),
            }
        }
        MappingWord { tokens: stack }
    }
}

impl fmt::Display for MappingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for t in &self.tokens {
            if !first {
                write!(f, "*")?;
            }
            write!(f, "{t}")?;
            first = false;
        }
        Ok(())
    }
}

/// Named words a script has already derived; atoms in later script words.
pub type WordEnv = BTreeMap<String, MappingWord>;

/// Parse a word of the fixed grammar.
pub fn parse_word(text: &str) -> Result<MappingWord, WordError> {
    Parser::new(text, None).parse_top()
}

/// Parse allowing additional named atoms from a script environment.
pub fn parse_word_in_env(text: &str, env: &WordEnv) -> Result<MappingWord, WordError> {
    Parser::new(text, Some(env)).parse_top()
}

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    env: Option<&'a WordEnv>,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, env: Option<&'a WordEnv>) -> Self {
        Parser { src, bytes: src.as_bytes(), pos: 0, env }
    }

    fn error(&self, msg: impl Into<String>) -> WordError {
        WordError::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), WordError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected `{}`", c as char)))
        }
    }

    fn parse_top(&mut self) -> Result<MappingWord, WordError> {
        self.skip_ws();
        if self.pos == self.bytes.len() {
            return Ok(MappingWord::empty());
        }
        let w = self.parse_seq()?;
        self.skip_ws();
        if self.pos != self.bytes.len() {
            return Err(self.error("trailing input"));
        }
        Ok(w)
    }

    fn parse_seq(&mut self) -> Result<MappingWord, WordError> {
        let mut acc = self.parse_term()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let next = self.parse_term()?;
            acc = acc.compose(&next);
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<MappingWord, WordError> {
        let base = self.parse_factor()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let k = self.parse_int()?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn parse_int(&mut self) -> Result<i64, WordError> {
        self.skip_ws();
        let start = self.pos;
        if self.bytes.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.src[start..self.pos]
            .parse::<i64>()
            .map_err(|_| WordError::Syntax { pos: start, msg: "expected integer".into() })
    }

    fn parse_factor(&mut self) -> Result<MappingWord, WordError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let w = self.parse_seq()?;
                self.expect(b')')?;
                Ok(w)
            }
            Some(c) if c.is_ascii_alphabetic() => self.parse_atom(),
            Some(c) => Err(self.error(format!("unexpected `{}`", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn parse_bracket_args(&mut self) -> Result<Vec<i64>, WordError> {
        self.expect(b'[')?;
        let mut args = vec![self.parse_int()?];
        while self.peek() == Some(b',') {
            self.pos += 1;
            args.push(self.parse_int()?);
        }
        self.expect(b']')?;
        Ok(args)
    }

    fn twist(&self, name: CurveName) -> MappingWord {
        MappingWord::single(TokenKind::Twist(name))
    }

    fn parse_atom(&mut self) -> Result<MappingWord, WordError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len()
            && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let mut ident = &self.src[start..self.pos];
        if self.bytes.get(self.pos) == Some(&b'\'') {
            self.pos += 1;
            ident = &self.src[start..self.pos];
        }
        let bracketed = self.bytes.get(self.pos) == Some(&b'(');
        match ident {
            "inv" if bracketed => {
                self.expect(b'(')?;
                let w = self.parse_seq()?;
                self.expect(b')')?;
                return Ok(w.invert());
            }
            "conj" if bracketed => {
                self.expect(b'(')?;
                let x = self.parse_seq()?;
                self.expect(b',')?;
                let f = self.parse_seq()?;
                self.expect(b')')?;
                return Ok(x.conjugate_by(&f));
            }
            _ => {}
        }

        let next_is_bracket = self.bytes.get(self.pos) == Some(&b'[');
        let arm_index = |args: &[i64], pos: usize| -> Result<(u32, u32), WordError> {
            if args.len() != 2 || args[0] < 1 || args[1] < 1 {
                return Err(WordError::Syntax {
                    pos,
                    msg: "expected [arm,index] with positive entries".into(),
                });
            }
            Ok((args[0] as u32, args[1] as u32))
        };
        if next_is_bracket {
            let at = self.pos;
            let args = self.parse_bracket_args()?;
            return match ident {
                "A" => {
                    let (arm, index) = arm_index(&args, at)?;
                    Ok(self.twist(CurveName::a(arm, index)))
                }
                "A'" => {
                    let (arm, index) = arm_index(&args, at)?;
                    Ok(self.twist(CurveName::a_primed(arm, index)))
                }
                "B" => {
                    let (arm, index) = arm_index(&args, at)?;
                    Ok(self.twist(CurveName::b(arm, index)))
                }
                "C" => {
                    let (arm, index) = arm_index(&args, at)?;
                    Ok(self.twist(CurveName::c(arm, index)))
                }
                "C0" => {
                    if args.len() != 1 || args[0] < 1 {
                        return Err(WordError::Syntax {
                            pos: at,
                            msg: "expected C0[arm]".into(),
                        });
                    }
                    Ok(self.twist(CurveName::c0(args[0] as u32)))
                }
                "D" => {
                    if args.len() != 1 || args[0] < 1 {
                        return Err(WordError::Syntax { pos: at, msg: "expected D[k]".into() });
                    }
                    Ok(self.twist(CurveName::d(args[0] as u32)))
                }
                "h" => {
                    if args.len() != 1 || args[0] < 1 {
                        return Err(WordError::Syntax {
                            pos: at,
                            msg: "expected h[i] with i >= 1".into(),
                        });
                    }
                    Ok(MappingWord::single(TokenKind::Shift(args[0] as u32)))
                }
                other => Err(WordError::UnknownName { name: other.into(), pos: start }),
            };
        }

        let rho1 = || MappingWord::single(TokenKind::Rho1);
        let rho2 = || MappingWord::single(TokenKind::Rho2);
        let rotation = || rho1().compose(&rho2());
        match ident {
            "rho1" => Ok(rho1()),
            "rho2" => Ok(rho2()),
            "tau1" => Ok(MappingWord::single(TokenKind::Tau1)),
            "tau2" => Ok(MappingWord::single(TokenKind::Tau2)),
            "R" => Ok(rotation()),
            "rho3" => Ok(rho1().conjugate_by(&rotation().pow(3))),
            "rho4" => Ok(rho1().conjugate_by(&rotation())),
            "rho5" => Ok(rho2().conjugate_by(&rotation())),
            other => {
                if let Some(env) = self.env {
                    if let Some(w) = env.get(other) {
                        return Ok(w.clone());
                    }
                }
                Err(WordError::UnknownName { name: other.into(), pos: start })
            }
        }
    }
}
