"""Formula AST over the one-sorted group signature, printer and syntactic helpers."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union


# -- terms -------------------------------------------------------------------

@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Param:
    name: str


@dataclass(frozen=True)
class Const:
    id: int


@dataclass(frozen=True)
class One:
    pass


@dataclass(frozen=True)
class Mul:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Inv:
    arg: "Term"


Term = Union[Var, Param, Const, One, Mul, Inv]


# -- formulas ----------------------------------------------------------------

@dataclass(frozen=True)
class Eq:
    left: Term
    right: Term


@dataclass(frozen=True)
class Not:
    arg: "Formula"


@dataclass(frozen=True)
class And:
    parts: tuple["Formula", ...]


@dataclass(frozen=True)
class Or:
    parts: tuple["Formula", ...]


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Forall:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"


Formula = Union[Eq, Not, And, Or, Implies, Forall, Exists]

ONE = One()
TRUE = Eq(ONE, ONE)
FALSE = Not(TRUE)


def conj(parts: Iterable[Formula]) -> Formula:
    parts = tuple(parts)
    if not parts:
        return TRUE
    return parts[0] if len(parts) == 1 else And(parts)


def disj(parts: Iterable[Formula]) -> Formula:
    parts = tuple(parts)
    if not parts:
        return FALSE
    return parts[0] if len(parts) == 1 else Or(parts)


def neq(a: Term, b: Term) -> Formula:
    return Not(Eq(a, b))


def mul(*terms: Term) -> Term:
    """Left-associated product; the empty product is 1."""
    if not terms:
        return ONE
    out = terms[0]
    for t in terms[1:]:
        out = Mul(out, t)
    return out


def exists_block(names: Iterable[str], body: Formula) -> Formula:
    for n in reversed(list(names)):
        body = Exists(n, body)
    return body


def forall_block(names: Iterable[str], body: Formula) -> Formula:
    for n in reversed(list(names)):
        body = Forall(n, body)
    return body


# -- printing ----------------------------------------------------------------

def term_to_str(t: Term) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Param):
        return "@" + t.name
    if isinstance(t, Const):
        return f"#{t.id}"
    if isinstance(t, One):
        return "1"
    if isinstance(t, Mul):
        return f"({term_to_str(t.left)} * {term_to_str(t.right)})"
    if isinstance(t, Inv):
        inner = term_to_str(t.arg)
        if isinstance(t.arg, Inv):
            inner = f"({inner})"
        return inner + "^-1"
    raise TypeError(f"not a term: {t!r}")


def to_str(f: Formula) -> str:
    """Fully parenthesised canonical form; parse_formula inverts it exactly."""
    out: list[str] = []
    _emit(f, out)
    return "".join(out)


def _emit(f: Formula, out: list[str]) -> None:
    # iterative over long And/Or chains, recursive in depth only
    if isinstance(f, Eq):
        out.append(f"({term_to_str(f.left)} = {term_to_str(f.right)})")
    elif isinstance(f, Not):
        out.append("!")
        _emit(f.arg, out)
    elif isinstance(f, (And, Or)):
        sep = " & " if isinstance(f, And) else " | "
        out.append("(")
        for idx, p in enumerate(f.parts):
            if idx:
                out.append(sep)
            _emit(p, out)
        out.append(")")
    elif isinstance(f, Implies):
        out.append("(")
        _emit(f.left, out)
        out.append(" -> ")
        _emit(f.right, out)
        out.append(")")
    elif isinstance(f, (Forall, Exists)):
        kw = "forall" if isinstance(f, Forall) else "exists"
        out.append(f"({kw} {f.var}. ")
        _emit(f.body, out)
        out.append(")")
    else:
        raise TypeError(f"not a formula: {f!r}")


# -- structural queries ------------------------------------------------------

def term_vars(t: Term) -> Iterator[str]:
    if isinstance(t, Var):
        yield t.name
    elif isinstance(t, Mul):
        yield from term_vars(t.left)
        yield from term_vars(t.right)
    elif isinstance(t, Inv):
        yield from term_vars(t.arg)


def term_params(t: Term) -> Iterator[str]:
    if isinstance(t, Param):
        yield t.name
    elif isinstance(t, Mul):
        yield from term_params(t.left)
        yield from term_params(t.right)
    elif isinstance(t, Inv):
        yield from term_params(t.arg)


def free_vars_ordered(f: Formula) -> list[str]:
    """Free variables in order of first occurrence."""
    seen: dict[str, None] = {}

    def walk(g, bound):
        if isinstance(g, Eq):
            for v in itertools.chain(term_vars(g.left), term_vars(g.right)):
                if v not in bound:
                    seen.setdefault(v)
        elif isinstance(g, Not):
            walk(g.arg, bound)
        elif isinstance(g, (And, Or)):
            for p in g.parts:
                walk(p, bound)
        elif isinstance(g, Implies):
            walk(g.left, bound)
            walk(g.right, bound)
        else:
            walk(g.body, bound | {g.var})

    walk(f, frozenset())
    return list(seen)


def free_vars(f: Formula) -> frozenset[str]:
    return frozenset(free_vars_ordered(f))


def all_var_names(f: Formula) -> set[str]:
    """Every variable name occurring free or bound."""
    names: set[str] = set()
    for g in subformulas(f):
        if isinstance(g, Eq):
            names.update(term_vars(g.left))
            names.update(term_vars(g.right))
        elif isinstance(g, (Forall, Exists)):
            names.add(g.var)
    return names


def params(f: Formula) -> set[str]:
    out: set[str] = set()
    for g in subformulas(f):
        if isinstance(g, Eq):
            out.update(term_params(g.left))
            out.update(term_params(g.right))
    return out


def subformulas(f: Formula) -> Iterator[Formula]:
    stack = [f]
    while stack:
        g = stack.pop()
        yield g
        if isinstance(g, Not):
            stack.append(g.arg)
        elif isinstance(g, (And, Or)):
            stack.extend(g.parts)
        elif isinstance(g, Implies):
            stack.extend((g.left, g.right))
        elif isinstance(g, (Forall, Exists)):
            stack.append(g.body)


def quantifier_rank(f: Formula) -> int:
    if isinstance(f, Eq):
        return 0
    if isinstance(f, Not):
        return quantifier_rank(f.arg)
    if isinstance(f, (And, Or)):
        return max((quantifier_rank(p) for p in f.parts), default=0)
    if isinstance(f, Implies):
        return max(quantifier_rank(f.left), quantifier_rank(f.right))
    return 1 + quantifier_rank(f.body)


def _term_size(t: Term) -> int:
    if isinstance(t, Mul):
        return 1 + _term_size(t.left) + _term_size(t.right)
    if isinstance(t, Inv):
        return 1 + _term_size(t.arg)
    return 1


def size(f: Formula) -> int:
    """Node count, terms included."""
    n = 0
    for g in subformulas(f):
        n += 1
        if isinstance(g, Eq):
            n += _term_size(g.left) + _term_size(g.right)
    return n


# -- substitution ------------------------------------------------------------

def fresh_name(base: str, taken: set[str]) -> str:
    for k in itertools.count(1):
        cand = f"{base}{k}"
        if cand not in taken:
            return cand
    raise AssertionError("unreachable")


def subst_term(t: Term, mapping: Mapping[str, Term]) -> Term:
    if isinstance(t, Var):
        return mapping.get(t.name, t)
    if isinstance(t, Mul):
        return Mul(subst_term(t.left, mapping), subst_term(t.right, mapping))
    if isinstance(t, Inv):
        return Inv(subst_term(t.arg, mapping))
    return t


def substitute(f: Formula, mapping: Mapping[str, Term]) -> Formula:
    """Capture-avoiding substitution of terms for free variables."""
    mapping = dict(mapping)
    if not mapping:
        return f
    incoming: set[str] = set()
    for t in mapping.values():
        incoming.update(term_vars(t))
    return _subst(f, mapping, incoming, None)


def _subst(f, mapping, incoming, taken):
    if isinstance(f, Eq):
        return Eq(subst_term(f.left, mapping), subst_term(f.right, mapping))
    if isinstance(f, Not):
        return Not(_subst(f.arg, mapping, incoming, taken))
    if isinstance(f, And):
        return And(tuple(_subst(p, mapping, incoming, taken) for p in f.parts))
    if isinstance(f, Or):
        return Or(tuple(_subst(p, mapping, incoming, taken) for p in f.parts))
    if isinstance(f, Implies):
        return Implies(_subst(f.left, mapping, incoming, taken),
                       _subst(f.right, mapping, incoming, taken))
    v = f.var
    inner = {k: t for k, t in mapping.items() if k != v}
    if not inner:
        return f
    body = f.body
    if v in incoming:
        if taken is None:
            taken = all_var_names(f) | incoming | set(mapping)
        new = fresh_name(v, taken)
        taken.add(new)
        inner[v] = Var(new)
        v = new
    return type(f)(v, _subst(body, inner, incoming, taken))


def substitute_params(f: Formula, values: Mapping[str, int]) -> Formula:
    """Replace @name parameters by #id literals; unknown names are left alone."""
    def st(t):
        if isinstance(t, Param) and t.name in values:
            return Const(values[t.name])
        if isinstance(t, Mul):
            return Mul(st(t.left), st(t.right))
        if isinstance(t, Inv):
            return Inv(st(t.arg))
        return t

    def sf(g):
        if isinstance(g, Eq):
            return Eq(st(g.left), st(g.right))
        if isinstance(g, Not):
            return Not(sf(g.arg))
        if isinstance(g, (And, Or)):
            return type(g)(tuple(sf(p) for p in g.parts))
        if isinstance(g, Implies):
            return Implies(sf(g.left), sf(g.right))
        return type(g)(g.var, sf(g.body))

    return sf(f)
