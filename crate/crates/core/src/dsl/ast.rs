use super::Span;
use crate::vect::Q;

#[derive(Debug, Clone, PartialEq)]
pub struct Program {
    /// Comments and blank lines before the header.
    pub leading: Vec<Trivia>,
    pub instance: InstanceDecl,
    pub items: Vec<Item>,
    /// Comments after the last item.
    pub trailing: Vec<Trivia>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Trivia {
    Comment(String),
    Blank,
}

#[derive(Debug, Clone, PartialEq)]
pub struct InstanceDecl {
    pub name: String,
    pub q: Option<Q>,
    pub span: Span,
}

impl InstanceDecl {
    /// The string accepted by [`crate::dynamic::Instance::parse`].
    pub fn spec(&self) -> String {
        match &self.q {
            Some(q) => format!("{}(q={})", self.name, crate::vect::format_q(q)),
            None => self.name.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Item {
    pub trivia: Vec<Trivia>,
    pub kind: ItemKind,
    pub span: Span,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sort {
    Obj,
    Mor,
    Triple,
}

impl Sort {
    pub fn keyword(self) -> &'static str {
        match self {
            Sort::Obj => "obj",
            Sort::Mor => "mor",
            Sort::Triple => "triple",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ItemKind {
    Decl {
        sort: Sort,
        name: String,
        name_span: Span,
        /// `mor f : X -> Y = ...`
        annot: Option<(Expr, Expr)>,
        value: Expr,
    },
    Print(Expr),
    AssertEqual(Expr, Expr),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ExprKind {
    /// A bound name (`Gen` for morphisms).
    Name(String),
    /// The monoidal unit `I`.
    Unit,
    Number(Q),
    Matrix(Vec<Vec<Q>>),
    /// `graded{ -1: 2, 0: 1 }`
    Graded(Vec<(i64, usize)>),
    /// `pts{x,y}`
    Points(Vec<String>),
    /// `bord{ x->y : 3, loop: 2 }`
    Bord(Vec<BordEntry>),
    /// `iso{x->y}`
    Iso(Vec<(String, String)>),
    Call(Builtin, Vec<Expr>),
    /// `inner ; outer` is `outer ∘ inner`.
    Compose { outer: Box<Expr>, inner: Box<Expr> },
    Tensor(Box<Expr>, Box<Expr>),
}

#[derive(Debug, Clone, PartialEq)]
pub enum BordEntry {
    Through(String, String, Q),
    In(String, String, Q),
    Out(String, String, Q),
    Loop(Q),
}

macro_rules! builtins {
    ($( $variant:ident = $name:literal / $arity:literal ),* $(,)?) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
        pub enum Builtin { $( $variant ),* }

        impl Builtin {
            pub const ALL: &'static [Builtin] = &[$( Builtin::$variant ),*];

            pub fn name(self) -> &'static str {
                match self { $( Builtin::$variant => $name ),* }
            }

            pub fn arity(self) -> usize {
                match self { $( Builtin::$variant => $arity ),* }
            }

            pub fn lookup(name: &str) -> Option<Builtin> {
                match name { $( $name => Some(Builtin::$variant), )* _ => None }
            }
        }
    };
}

builtins! {
    Id = "id" / 1,
    S = "s" / 2,
    C = "c" / 2,
    CInv = "cinv" / 2,
    Theta = "theta" / 1,
    Ev = "ev" / 1,
    Coev = "coev" / 1,
    Dual = "dual" / 1,
    Vec = "vec" / 1,
    Super = "super" / 2,
    Dom = "dom" / 1,
    Cod = "cod" / 1,
    Add = "add" / 2,
    Neg = "neg" / 1,
    Trace = "trace" / 1,
    Triple = "triple" / 3,
    Canonical = "canonical" / 1,
    Cut = "cut" / 2,
    Thicken = "thicken" / 1,
    Pre = "pre" / 2,
    Post = "post" / 2,
    Psi = "psi" / 1,
    TraceHat = "trace_hat" / 1,
    Pairing = "pairing" / 2,
    Z = "z" / 1,
    T = "t" / 1,
    B = "b" / 1,
}
