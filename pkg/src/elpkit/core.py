"""Formulas, rules, programs and their text formats.

Formulas are immutable trees over ``Bot``, ``Atom``, ``And``, ``Or``,
``Implies`` and the modal operator ``K``.  Negation, ``top`` and ``M`` are
not primitive: they are desugared on construction (``Not(f)`` builds
``Implies(f, Bot())``).

Programs use the rule syntax ``a | b :- lit, ..., lit.`` where each literal
is objective (an atom or truth constant under at most two ``not``) or
subjective (``K`` applied to an objective literal, under at most two ``not``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Union


class ParseError(ValueError):
    """Lexical or syntax error; carries a 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class EnumerationCapError(ValueError):
    """Raised when a signature is too large for exhaustive enumeration."""


# ---------------------------------------------------------------------------
# Formulas


@dataclass(frozen=True, slots=True)
class Bot:
    pass


@dataclass(frozen=True, slots=True)
class Atom:
    name: str


@dataclass(frozen=True, slots=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True, slots=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True, slots=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True, slots=True)
class K:
    body: "Formula"


Formula = Union[Bot, Atom, And, Or, Implies, K]

BOT = Bot()
TOP = Implies(BOT, BOT)


def Not(f: Formula) -> Formula:
    return Implies(f, BOT)


def M(f: Formula) -> Formula:
    return Not(K(Not(f)))


def is_negation(f: Formula) -> bool:
    return isinstance(f, Implies) and isinstance(f.right, Bot)


def conjunction(parts: Iterable[Formula]) -> Formula:
    parts = list(parts)
    if not parts:
        return TOP
    out = parts[0]
    for p in parts[1:]:
        out = And(out, p)
    return out


def disjunction(parts: Iterable[Formula]) -> Formula:
    parts = list(parts)
    if not parts:
        return BOT
    out = parts[0]
    for p in parts[1:]:
        out = Or(out, p)
    return out


def subformulas(f: Formula) -> Iterator[Formula]:
    """Post-order traversal (children before parents)."""
    if isinstance(f, (And, Or, Implies)):
        yield from subformulas(f.left)
        yield from subformulas(f.right)
    elif isinstance(f, K):
        yield from subformulas(f.body)
    yield f


def is_objective(f: Formula) -> bool:
    return not any(isinstance(g, K) for g in subformulas(f))


def is_subjective(f: Formula) -> bool:
    """Every atom occurrence (at least one) lies in the scope of K."""

    def walk(g: Formula, under_k: bool) -> tuple[bool, bool]:
        # returns (has_atom, all_atoms_under_k)
        if isinstance(g, Atom):
            return True, under_k
        if isinstance(g, Bot):
            return False, True
        if isinstance(g, K):
            return walk(g.body, True)
        la, lk = walk(g.left, under_k)
        ra, rk = walk(g.right, under_k)
        return la or ra, lk and rk

    has_atom, ok = walk(f, False)
    return has_atom and ok


# ---------------------------------------------------------------------------
# Literals, rules, programs

CONSTANTS = ("top", "bot")
RESERVED = frozenset({"not", "K", "M", "top", "bot"})


@dataclass(frozen=True, slots=True)
class ObjectiveLiteral:
    base: str  # atom name, or "top"/"bot"
    negations: int = 0

    def __post_init__(self):
        if self.negations not in (0, 1, 2):
            raise ValueError(f"negation depth {self.negations} not in 0..2")

    @property
    def is_constant(self) -> bool:
        return self.base in CONSTANTS

    def atoms(self) -> frozenset[str]:
        return frozenset() if self.is_constant else frozenset((self.base,))

    def to_formula(self) -> Formula:
        if self.base == "top":
            f: Formula = TOP
        elif self.base == "bot":
            f = BOT
        else:
            f = Atom(self.base)
        for _ in range(self.negations):
            f = Not(f)
        return f

    def __str__(self) -> str:
        return "not " * self.negations + self.base


@dataclass(frozen=True, slots=True)
class SubjectiveLiteral:
    inner: ObjectiveLiteral
    negations: int = 0

    def __post_init__(self):
        if self.negations not in (0, 1, 2):
            raise ValueError(f"negation depth {self.negations} not in 0..2")

    def atoms(self) -> frozenset[str]:
        return self.inner.atoms()

    def to_formula(self) -> Formula:
        f: Formula = K(self.inner.to_formula())
        for _ in range(self.negations):
            f = Not(f)
        return f

    def __str__(self) -> str:
        return "not " * self.negations + "K " + str(self.inner)


Literal = Union[ObjectiveLiteral, SubjectiveLiteral]


def is_subjective_literal(lit: Literal) -> bool:
    return isinstance(lit, SubjectiveLiteral)


@dataclass(frozen=True, slots=True)
class Rule:
    head: tuple[str, ...] = ()
    body: tuple[Literal, ...] = ()

    def __post_init__(self):
        head = tuple(sorted(set(self.head)))
        object.__setattr__(self, "head", head)
        object.__setattr__(self, "body", tuple(self.body))
        for a in head:
            if a in RESERVED:
                raise ValueError(f"reserved word {a!r} used as head atom")

    @property
    def is_constraint(self) -> bool:
        return not self.head

    @property
    def is_fact(self) -> bool:
        return not self.body

    @property
    def is_objective(self) -> bool:
        return not any(is_subjective_literal(l) for l in self.body)

    # Body partitions.  A literal is positive when it carries no leading
    # (outer) default negation.
    def body_part(self, sign: str | None = None, kind: str | None = None) -> tuple[Literal, ...]:
        out = []
        for lit in self.body:
            if sign == "+" and lit.negations != 0:
                continue
            if sign == "-" and lit.negations == 0:
                continue
            if kind == "obj" and is_subjective_literal(lit):
                continue
            if kind == "sub" and not is_subjective_literal(lit):
                continue
            out.append(lit)
        return tuple(out)

    @property
    def body_pos(self) -> tuple[Literal, ...]:
        return self.body_part("+")

    @property
    def body_neg(self) -> tuple[Literal, ...]:
        return self.body_part("-")

    @property
    def body_obj(self) -> tuple[Literal, ...]:
        return self.body_part(kind="obj")

    @property
    def body_sub(self) -> tuple[Literal, ...]:
        return self.body_part(kind="sub")

    def atoms(self) -> frozenset[str]:
        return frozenset(self.head).union(*(l.atoms() for l in self.body))

    def __str__(self) -> str:
        return print_rule(self)


@dataclass(frozen=True, slots=True)
class Program:
    rules: tuple[Rule, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))

    def __iter__(self):
        return iter(self.rules)

    def __len__(self):
        return len(self.rules)

    @property
    def is_objective(self) -> bool:
        return all(r.is_objective for r in self.rules)

    @property
    def signature(self) -> "Signature":
        return Signature(atoms_of(self))

    def to_theory(self) -> "Theory":
        return Theory(tuple(rule_to_formula(r) for r in self.rules))

    def union(self, other: Iterable[Rule]) -> "Program":
        return Program(self.rules + tuple(other))

    def __str__(self) -> str:
        return print_program(self)


@dataclass(frozen=True, slots=True)
class Theory:
    formulas: tuple[Formula, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "formulas", tuple(self.formulas))

    def __iter__(self):
        return iter(self.formulas)

    def __len__(self):
        return len(self.formulas)

    @property
    def signature(self) -> "Signature":
        return Signature(atoms_of(self))

    def __str__(self) -> str:
        return "\n".join(print_formula(f) for f in self.formulas)


@dataclass(frozen=True)
class Signature:
    """Ordered set of atom names; order is always lexicographic."""

    atoms: tuple[str, ...] = ()
    _index: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        atoms = tuple(sorted(set(self.atoms)))
        object.__setattr__(self, "atoms", atoms)
        object.__setattr__(self, "_index", {a: i for i, a in enumerate(atoms)})

    def index(self, name: str) -> int:
        return self._index[name]

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __iter__(self):
        return iter(self.atoms)

    def __len__(self):
        return len(self.atoms)

    def widen(self, extra: Iterable[str]) -> "Signature":
        return Signature(self.atoms + tuple(extra))


def rule_to_formula(r: Rule) -> Formula:
    body = conjunction(l.to_formula() for l in r.body)
    head = disjunction(Atom(a) for a in r.head)
    return Implies(body, head)


TheoryLike = Union[Theory, Program, Iterable[Formula]]


def as_formulas(x: TheoryLike) -> tuple[Formula, ...]:
    if isinstance(x, Program):
        return x.to_theory().formulas
    if isinstance(x, Theory):
        return x.formulas
    if isinstance(x, (Bot, Atom, And, Or, Implies, K)):
        return (x,)
    if isinstance(x, Rule):
        return (rule_to_formula(x),)
    return tuple(rule_to_formula(f) if isinstance(f, Rule) else f for f in x)


def atoms_of(x) -> frozenset[str]:
    if isinstance(x, Atom):
        return frozenset((x.name,))
    if isinstance(x, (Bot, And, Or, Implies, K)):
        return frozenset(g.name for g in subformulas(x) if isinstance(g, Atom))
    if isinstance(x, (Rule, ObjectiveLiteral, SubjectiveLiteral)):
        return x.atoms()
    if isinstance(x, Program):
        return frozenset().union(*(r.atoms() for r in x.rules))
    return frozenset().union(*(atoms_of(f) for f in as_formulas(x)))


def sig_for(x: TheoryLike, sig=None) -> tuple[str, ...]:
    """Resolve an optional signature argument to a sorted tuple of names."""
    if sig is None:
        return tuple(sorted(atoms_of(x)))
    if isinstance(sig, Signature):
        names = sig.atoms
    else:
        names = tuple(sorted(set(sig)))
    missing = atoms_of(x) - set(names)
    if missing:
        raise ValueError(f"atoms {sorted(missing)} are not in the signature")
    return names


# ---------------------------------------------------------------------------
# Printing


_PREC = {Implies: 1, Or: 2, And: 3}


def print_formula(f: Formula) -> str:
    return _pf(f, 0)


def _pf(f: Formula, ctx: int) -> str:
    if isinstance(f, Bot):
        return "bot"
    if isinstance(f, Atom):
        return f.name
    if f == TOP:
        return "top"
    if is_negation(f):
        return "-" + _pf(f.left, 4)
    if isinstance(f, K):
        return "K " + _pf(f.body, 4)
    prec = _PREC[type(f)]
    sym = {Implies: " -> ", Or: " | ", And: " & "}[type(f)]
    if isinstance(f, Implies):
        # right associative
        text = _pf(f.left, prec + 1) + sym + _pf(f.right, prec)
    else:
        text = _pf(f.left, prec) + sym + _pf(f.right, prec + 1)
    return f"({text})" if prec < ctx or (prec == ctx and ctx == 4) else text


def print_rule(r: Rule) -> str:
    head = " | ".join(r.head)
    body = ", ".join(str(l) for l in r.body)
    if not r.body:
        return f"{head}." if r.head else ":- ."
    if not r.head:
        return f":- {body}."
    return f"{head} :- {body}."


def print_program(p: Program) -> str:
    return "\n".join(print_rule(r) for r in p.rules)


# ---------------------------------------------------------------------------
# Lexing

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<comment>%[^\n]*)
  | (?P<nl>\n)
  | (?P<if>:-)
  | (?P<arrow>->)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<sym>[|,.&()\-])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True, slots=True)
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Tok]:
    toks: list[_Tok] = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        col = pos - line_start + 1
        if kind == "nl":
            toks.append(_Tok("nl", "\n", line, col))
            line += 1
            line_start = m.end()
        elif kind == "ident":
            word = m.group()
            toks.append(_Tok(word if word in RESERVED else "ident", word, line, col))
        elif kind in ("if", "arrow", "sym"):
            toks.append(_Tok(m.group(), m.group(), line, col))
        pos = m.end()
    toks.append(_Tok("eof", "", line, pos - line_start + 1))
    return toks


class _Cursor:
    def __init__(self, toks: list[_Tok]):
        self.toks = toks
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def take(self, kind: str | None = None) -> _Tok:
        t = self.tok
        if kind is not None and t.kind != kind:
            expected = "end of input" if kind == "eof" else repr(kind)
            found = "end of input" if t.kind == "eof" else repr(t.text)
            raise ParseError(f"expected {expected}, found {found}", t.line, t.col)
        self.i += 1
        return t

    def accept(self, kind: str) -> bool:
        if self.tok.kind == kind:
            self.i += 1
            return True
        return False

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.tok.line, self.tok.col)


# ---------------------------------------------------------------------------
# Program parser


def _split_statements(toks: list[_Tok]) -> list[list[_Tok]]:
    """Statements end at '.' or at a newline; blank statements are dropped."""
    stmts, cur = [], []
    for t in toks:
        if t.kind in (".", "nl", "eof"):
            if cur:
                cur.append(_Tok("eof", "", t.line, t.col))
                stmts.append(cur)
            cur = []
        else:
            cur.append(t)
    return stmts


def parse_program(text: str) -> Program:
    rules = []
    for stmt in _split_statements(_tokenize(text)):
        cur = _Cursor(stmt)
        rules.append(_parse_rule(cur))
        cur.take("eof")
    return Program(tuple(rules))


def parse_rule(text: str) -> Rule:
    prog = parse_program(text)
    if len(prog) != 1:
        raise ValueError(f"expected exactly one rule, got {len(prog)}")
    return prog.rules[0]


def _parse_rule(cur: _Cursor) -> Rule:
    head: list[str] = []
    if cur.tok.kind != ":-":
        head.append(cur.take("ident").text)
        while cur.accept("|"):
            head.append(cur.take("ident").text)
    body: list[Literal] = []
    if cur.accept(":-") and cur.tok.kind != "eof":  # ":- ." is the empty constraint
        body.append(_parse_literal(cur))
        while cur.accept(","):
            body.append(_parse_literal(cur))
    return Rule(tuple(head), tuple(body))


def _count_nots(cur: _Cursor) -> int:
    n = 0
    while cur.accept("not"):
        n += 1
    return n


def _parse_objective(cur: _Cursor, negations: int, start: _Tok) -> ObjectiveLiteral:
    t = cur.tok
    if t.kind in ("ident", "top", "bot"):
        cur.take()
    else:
        raise cur.error(f"expected an atom or truth constant, found {t.text or 'end of input'!r}")
    if negations > 2:
        raise ParseError("negation depth greater than 2", start.line, start.col)
    return ObjectiveLiteral(t.text, negations)


def _complement(lit: ObjectiveLiteral) -> ObjectiveLiteral:
    # not not not l is equivalent to not l
    return ObjectiveLiteral(lit.base, {0: 1, 1: 2, 2: 1}[lit.negations])


def _parse_literal(cur: _Cursor) -> Literal:
    start = cur.tok
    outer = _count_nots(cur)
    if cur.tok.kind in ("K", "M"):
        op = cur.take().kind
        inner_start = cur.tok
        inner = _parse_objective(cur, _count_nots(cur), inner_start)
        if op == "M":
            inner = _complement(inner)
            outer += 1
        if outer > 2:
            raise ParseError("negation depth greater than 2", start.line, start.col)
        return SubjectiveLiteral(inner, outer)
    return _parse_objective(cur, outer, start)


# ---------------------------------------------------------------------------
# Theory / formula parser
#
#   formula := disj ( '->' formula )?
#   disj    := conj ( '|' conj )*
#   conj    := unary ( '&' unary )*
#   unary   := '-' unary | 'not' unary | 'K' unary | 'M' unary | primary
#   primary := atom | 'top' | 'bot' | '(' formula ')'


def parse_formula(text: str) -> Formula:
    toks = [t for t in _tokenize(text) if t.kind != "nl"]
    cur = _Cursor(toks)
    f = _parse_imp(cur)
    cur.accept(".")
    cur.take("eof")
    return f


def parse_theory(text: str) -> Theory:
    formulas = []
    toks = _tokenize(text)
    line: list[_Tok] = []
    for t in toks:
        if t.kind in ("nl", "eof"):
            if line:
                cur = _Cursor(line + [_Tok("eof", "", t.line, t.col)])
                formulas.append(_parse_imp(cur))
                cur.accept(".")
                cur.take("eof")
            line = []
        else:
            line.append(t)
    return Theory(tuple(formulas))


def _parse_imp(cur: _Cursor) -> Formula:
    left = _parse_disj(cur)
    if cur.accept("->"):
        return Implies(left, _parse_imp(cur))
    return left


def _parse_disj(cur: _Cursor) -> Formula:
    f = _parse_conj(cur)
    while cur.accept("|"):
        f = Or(f, _parse_conj(cur))
    return f


def _parse_conj(cur: _Cursor) -> Formula:
    f = _parse_unary(cur)
    while cur.accept("&"):
        f = And(f, _parse_unary(cur))
    return f


def _parse_unary(cur: _Cursor) -> Formula:
    if cur.accept("-") or cur.accept("not"):
        return Not(_parse_unary(cur))
    if cur.accept("K"):
        return K(_parse_unary(cur))
    if cur.accept("M"):
        return M(_parse_unary(cur))
    t = cur.tok
    if t.kind == "ident":
        cur.take()
        return Atom(t.text)
    if t.kind == "top":
        cur.take()
        return TOP
    if t.kind == "bot":
        cur.take()
        return BOT
    if cur.accept("("):
        f = _parse_imp(cur)
        cur.take(")")
        return f
    raise cur.error(f"unexpected {t.text or 'end of input'!r}")
