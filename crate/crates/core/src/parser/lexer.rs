//! Tokenizer shared by the agent, project and scenario parsers.
//!
//! The lexer never fails: unexpected characters become `Tok::Error` tokens
//! for the parser to report with a location.

#[derive(Debug, Clone, PartialEq)]
pub enum Tok {
    /// Lowercase-initial identifier.
    Ident(String),
    /// Uppercase or `_`-initial identifier.
    Var(String),
    Num(f64),
    Str(String),
    /// `.name`
    Internal(String),
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    Dot,
    Colon,
    Semi,
    Bang,
    Question,
    Plus,
    Minus,
    Star,
    Slash,
    Amp,
    At,
    Arrow,
    Lt,
    Le,
    Gt,
    Ge,
    EqEq,
    NotEq,
    Error(String),
    Eof,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
    /// Byte offsets into the source.
    pub start: usize,
    pub end: usize,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) | Tok::Var(s) => format!("`{}`", s),
            Tok::Num(n) => format!("number {}", n),
            Tok::Str(_) => "string".into(),
            Tok::Internal(s) => format!("`.{}`", s),
            Tok::Error(m) => m.clone(),
            Tok::Eof => "end of input".into(),
            other => format!("`{}`", other.symbol()),
        }
    }

    fn symbol(&self) -> &'static str {
        match self {
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::LBracket => "[",
            Tok::RBracket => "]",
            Tok::LBrace => "{",
            Tok::RBrace => "}",
            Tok::Comma => ",",
            Tok::Dot => ".",
            Tok::Colon => ":",
            Tok::Semi => ";",
            Tok::Bang => "!",
            Tok::Question => "?",
            Tok::Plus => "+",
            Tok::Minus => "-",
            Tok::Star => "*",
            Tok::Slash => "/",
            Tok::Amp => "&",
            Tok::At => "@",
            Tok::Arrow => "<-",
            Tok::Lt => "<",
            Tok::Le => "<=",
            Tok::Gt => ">",
            Tok::Ge => ">=",
            Tok::EqEq => "==",
            Tok::NotEq => "\\==",
            _ => "?",
        }
    }
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

pub fn tokenize(src: &str) -> Vec<Token> {
    let mut out = Vec::new();
    let bytes: Vec<(usize, char)> = src.char_indices().collect();
    let mut i = 0;
    let mut line = 1;
    let mut line_start = 0usize;
    let end_of = |k: usize| bytes.get(k).map(|b| b.0).unwrap_or(src.len());

    while i < bytes.len() {
        let (off, c) = bytes[i];
        let col = i - line_start + 1;
        if c == '\n' {
            line += 1;
            i += 1;
            line_start = i;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let peek = |k: usize| bytes.get(i + k).map(|b| b.1);
        if c == '/' && peek(1) == Some('/') {
            while i < bytes.len() && bytes[i].1 != '\n' {
                i += 1;
            }
            continue;
        }
        if c == '/' && peek(1) == Some('*') {
            i += 2;
            loop {
                match bytes.get(i) {
                    None => break,
                    Some((_, '*')) if peek_at(&bytes, i + 1) == Some('/') => {
                        i += 2;
                        break;
                    }
                    Some((_, '\n')) => {
                        line += 1;
                        i += 1;
                        line_start = i;
                    }
                    Some(_) => i += 1,
                }
            }
            continue;
        }

        let start_i = i;
        let tok = if c.is_ascii_digit() {
            let mut j = i;
            while j < bytes.len() && bytes[j].1.is_ascii_digit() {
                j += 1;
            }
            if peek_at(&bytes, j) == Some('.') && peek_at(&bytes, j + 1).is_some_and(|d| d.is_ascii_digit()) {
                j += 1;
                while j < bytes.len() && bytes[j].1.is_ascii_digit() {
                    j += 1;
                }
            }
            if matches!(peek_at(&bytes, j), Some('e' | 'E')) {
                let mut k = j + 1;
                if matches!(peek_at(&bytes, k), Some('+' | '-')) {
                    k += 1;
                }
                if peek_at(&bytes, k).is_some_and(|d| d.is_ascii_digit()) {
                    while k < bytes.len() && bytes[k].1.is_ascii_digit() {
                        k += 1;
                    }
                    j = k;
                }
            }
            let text = &src[off..end_of(j)];
            i = j;
            match text.parse::<f64>() {
                Ok(n) if n.is_finite() => Tok::Num(n),
                _ => Tok::Error(format!("number out of range `{}`", text)),
            }
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut j = i;
            while j < bytes.len() && is_ident_char(bytes[j].1) {
                j += 1;
            }
            let text = src[off..end_of(j)].to_string();
            i = j;
            if c.is_ascii_lowercase() {
                Tok::Ident(text)
            } else {
                Tok::Var(text)
            }
        } else if c == '"' {
            let mut j = i + 1;
            let mut s = String::new();
            let mut closed = false;
            while j < bytes.len() {
                match bytes[j].1 {
                    '"' => {
                        closed = true;
                        j += 1;
                        break;
                    }
                    '\\' => {
                        match peek_at(&bytes, j + 1) {
                            Some('n') => s.push('\n'),
                            Some('t') => s.push('\t'),
                            Some('r') => s.push('\r'),
                            Some('\n') | None => break,
                            Some(other) => s.push(other),
                        }
                        j += 2;
                    }
                    '\n' => break,
                    ch => {
                        s.push(ch);
                        j += 1;
                    }
                }
            }
            i = j;
            if closed {
                Tok::Str(s)
            } else {
                Tok::Error("unterminated string".into())
            }
        } else if c == '.' && peek(1).is_some_and(|d| d.is_ascii_lowercase()) {
            let mut j = i + 1;
            while j < bytes.len() && is_ident_char(bytes[j].1) {
                j += 1;
            }
            let name = src[end_of(i + 1)..end_of(j)].to_string();
            i = j;
            Tok::Internal(name)
        } else {
            let (t, n) = match (c, peek(1), peek(2)) {
                ('<', Some('-'), _) => (Tok::Arrow, 2),
                ('<', Some('='), _) => (Tok::Le, 2),
                ('>', Some('='), _) => (Tok::Ge, 2),
                ('=', Some('='), _) => (Tok::EqEq, 2),
                ('\\', Some('='), Some('=')) => (Tok::NotEq, 3),
                ('(', ..) => (Tok::LParen, 1),
                (')', ..) => (Tok::RParen, 1),
                ('[', ..) => (Tok::LBracket, 1),
                (']', ..) => (Tok::RBracket, 1),
                ('{', ..) => (Tok::LBrace, 1),
                ('}', ..) => (Tok::RBrace, 1),
                (',', ..) => (Tok::Comma, 1),
                ('.', ..) => (Tok::Dot, 1),
                (':', ..) => (Tok::Colon, 1),
                (';', ..) => (Tok::Semi, 1),
                ('!', ..) => (Tok::Bang, 1),
                ('?', ..) => (Tok::Question, 1),
                ('+', ..) => (Tok::Plus, 1),
                ('-', ..) => (Tok::Minus, 1),
                ('*', ..) => (Tok::Star, 1),
                ('/', ..) => (Tok::Slash, 1),
                ('&', ..) => (Tok::Amp, 1),
                ('@', ..) => (Tok::At, 1),
                ('<', ..) => (Tok::Lt, 1),
                ('>', ..) => (Tok::Gt, 1),
                (other, ..) => (Tok::Error(format!("unexpected character {:?}", other)), 1),
            };
            i += n;
            t
        };
        out.push(Token { tok, line, col, start: bytes[start_i].0, end: end_of(i) });
    }
    let col = bytes.len() - line_start + 1;
    out.push(Token { tok: Tok::Eof, line, col, start: src.len(), end: src.len() });
    out
}

fn peek_at(bytes: &[(usize, char)], k: usize) -> Option<char> {
    bytes.get(k).map(|b| b.1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(src: &str) -> Vec<Tok> {
        tokenize(src).into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn plan_tokens() {
        let toks = kinds("+!greet(X) : true <- .print(\"hi\"); -b.");
        assert_eq!(
            toks,
            vec![
                Tok::Plus,
                Tok::Bang,
                Tok::Ident("greet".into()),
                Tok::LParen,
                Tok::Var("X".into()),
                Tok::RParen,
                Tok::Colon,
                Tok::Ident("true".into()),
                Tok::Arrow,
                Tok::Internal("print".into()),
                Tok::LParen,
                Tok::Str("hi".into()),
                Tok::RParen,
                Tok::Semi,
                Tok::Minus,
                Tok::Ident("b".into()),
                Tok::Dot,
                Tok::Eof,
            ]
        );
    }

    #[test]
    fn numbers_and_trailing_dot() {
        assert_eq!(kinds("run 10."), vec![Tok::Ident("run".into()), Tok::Num(10.0), Tok::Dot, Tok::Eof]);
        assert_eq!(kinds("0.25 1e-3"), vec![Tok::Num(0.25), Tok::Num(0.001), Tok::Eof]);
    }

    #[test]
    fn comments_and_positions() {
        let toks = tokenize("// header\n  foo /* x\n y */ bar");
        assert_eq!((toks[0].line, toks[0].col), (2, 3));
        assert_eq!(toks[1].tok, Tok::Ident("bar".into()));
        assert_eq!(toks[1].line, 3);
    }

    #[test]
    fn bad_input_becomes_error_token() {
        let toks = kinds("a # \"open");
        assert!(matches!(toks[1], Tok::Error(_)));
        assert!(matches!(toks[2], Tok::Error(_)));
        assert_eq!(*toks.last().unwrap(), Tok::Eof);
    }

    #[test]
    fn column_counts_chars_not_bytes() {
        let toks = tokenize("é x");
        assert_eq!(toks[0].col, 1);
        assert!(matches!(toks[0].tok, Tok::Error(_)));
        assert_eq!(toks[1].col, 3);
    }
}
