"""Recursive-descent parser for the formula DSL.

    formula := quant | impl ; quant := ("forall"|"exists") IDENT "." formula ;
    impl := disj ["->" formula] ; disj := conj {"|" conj} ; conj := neg {"&" neg} ;
    neg := "!" neg | atom ; atom := term "=" term | "(" formula ")" ;
    term := factor {"*" factor} ; factor := base ["^-1"] ;
    base := "1" | IDENT | "@" IDENT | "#" INT | "(" term ")" .

An opening parenthesis in ``atom`` is ambiguous between a bracketed term and a
bracketed formula; both are tried, with results memoised per position so the
parse stays linear.
"""

from __future__ import annotations

import re
import sys
from typing import Iterable

from ..errors import FormulaSyntaxError, UnboundVariable
from .ast import (
    And,
    Const,
    Eq,
    Exists,
    Forall,
    Formula,
    Implies,
    Inv,
    Mul,
    Not,
    One,
    Or,
    Param,
    Var,
    fresh_name,
    free_vars,
    all_var_names,
)

_TOKEN = re.compile(r"\s*(?:(->|\^-1|[()*=!&|.@#])|([A-Za-z_][A-Za-z0-9_]*)|(\d+))")
_KEYWORDS = {"forall", "exists"}


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(("op", m.group(1), start))
        elif m.group(2):
            word = m.group(2)
            toks.append(("kw" if word in _KEYWORDS else "id", word, start))
        else:
            toks.append(("int", m.group(3), start))
        pos = m.end()
    toks.append(("eof", "", n))
    return toks


class _Fail(Exception):
    def __init__(self, msg, pos):
        self.msg = msg
        self.pos = pos


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.memo: dict = {}
        self.furthest = (-1, "")

    def fail(self, i, msg):
        pos = self.toks[i][2]
        if pos > self.furthest[0]:
            self.furthest = (pos, msg)
        raise _Fail(msg, pos)

    def expect(self, i, value):
        if self.toks[i][0] != "op" or self.toks[i][1] != value:
            self.fail(i, f"expected {value!r}")
        return i + 1

    def memoised(self, rule, i):
        key = (rule, i)
        hit = self.memo.get(key)
        if hit is None:
            try:
                hit = getattr(self, rule)(i)
            except _Fail as exc:
                hit = exc
            self.memo[key] = hit
        if isinstance(hit, _Fail):
            raise hit
        return hit

    # formulas

    def formula(self, i):
        kind, val, _ = self.toks[i]
        if kind == "kw":
            if self.toks[i + 1][0] != "id":
                self.fail(i + 1, "expected variable name")
            name = self.toks[i + 1][1]
            j = self.expect(i + 2, ".")
            body, j = self.memoised("formula", j)
            return (Forall if val == "forall" else Exists)(name, body), j
        left, j = self.memoised("disj", i)
        if self.toks[j][1] == "->":
            right, j = self.memoised("formula", j + 1)
            return Implies(left, right), j
        return left, j

    def disj(self, i):
        parts = [None]
        parts[0], j = self.memoised("conj", i)
        while self.toks[j][1] == "|":
            p, j = self.memoised("conj", j + 1)
            parts.append(p)
        return (parts[0] if len(parts) == 1 else Or(tuple(parts))), j

    def conj(self, i):
        parts = [None]
        parts[0], j = self.memoised("neg", i)
        while self.toks[j][1] == "&":
            p, j = self.memoised("neg", j + 1)
            parts.append(p)
        return (parts[0] if len(parts) == 1 else And(tuple(parts))), j

    def neg(self, i):
        if self.toks[i][1] == "!" and self.toks[i][0] == "op":
            inner, j = self.memoised("neg", i + 1)
            return Not(inner), j
        return self.memoised("atom", i)

    def atom(self, i):
        try:
            left, j = self.memoised("term", i)
            j = self.expect(j, "=")
            right, j = self.memoised("term", j)
            return Eq(left, right), j
        except _Fail:
            if self.toks[i][1] != "(":
                raise
        inner, j = self.memoised("formula", i + 1)
        j = self.expect(j, ")")
        return inner, j

    # terms

    def term(self, i):
        t, j = self.memoised("factor", i)
        while self.toks[j][1] == "*":
            r, j = self.memoised("factor", j + 1)
            t = Mul(t, r)
        return t, j

    def factor(self, i):
        b, j = self.memoised("base", i)
        if self.toks[j][1] == "^-1":
            return Inv(b), j + 1
        return b, j

    def base(self, i):
        kind, val, _ = self.toks[i]
        if kind == "int":
            if val == "1":
                return One(), i + 1
            self.fail(i, "only the literal 1 is allowed; use #id for elements")
        if kind == "id":
            return Var(val), i + 1
        if val == "@":
            if self.toks[i + 1][0] != "id":
                self.fail(i + 1, "expected parameter name")
            return Param(self.toks[i + 1][1]), i + 2
        if val == "#":
            if self.toks[i + 1][0] != "int":
                self.fail(i + 1, "expected element id")
            return Const(int(self.toks[i + 1][1])), i + 2
        if val == "(":
            t, j = self.memoised("term", i + 1)
            return t, self.expect(j, ")")
        self.fail(i, "expected a term")


def parse_formula(text: str, allowed_free: Iterable[str] | None = None) -> Formula:
    """Parse DSL text.

    Bound variables that shadow an enclosing binder or reuse a free variable's
    name are renamed apart.  With ``allowed_free`` given, any other free
    variable raises UnboundVariable.
    """
    p = _Parser(text)
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 20000))
    try:
        try:
            f, j = p.memoised("formula", 0)
            if p.toks[j][0] != "eof":
                p.fail(j, "unexpected trailing input")
        except _Fail:
            pos, msg = p.furthest
            raise FormulaSyntaxError(msg, pos) from None
    finally:
        sys.setrecursionlimit(limit)
    f = rename_apart(f)
    if allowed_free is not None:
        extra = sorted(free_vars(f) - set(allowed_free))
        if extra:
            raise UnboundVariable(f"unbound variable(s): {', '.join(extra)}")
    return f


def rename_apart(f: Formula) -> Formula:
    """Rename binders so no name is bound twice on a path or both free and bound."""
    free = free_vars(f)
    taken = all_var_names(f)
    changed = [False]

    def term(t, ren):
        if isinstance(t, Var):
            return Var(ren.get(t.name, t.name))
        if isinstance(t, Mul):
            return Mul(term(t.left, ren), term(t.right, ren))
        if isinstance(t, Inv):
            return Inv(term(t.arg, ren))
        return t

    def walk(g, ren, bound):
        if isinstance(g, Eq):
            return Eq(term(g.left, ren), term(g.right, ren))
        if isinstance(g, Not):
            return Not(walk(g.arg, ren, bound))
        if isinstance(g, (And, Or)):
            return type(g)(tuple(walk(p, ren, bound) for p in g.parts))
        if isinstance(g, Implies):
            return Implies(walk(g.left, ren, bound), walk(g.right, ren, bound))
        v = g.var
        if v in bound or v in free:
            new = fresh_name(v, taken)
            taken.add(new)
            changed[0] = True
            ren = {**ren, v: new}
            v = new
        elif v in ren:
            ren = {k: x for k, x in ren.items() if k != v}
        return type(g)(v, walk(g.body, ren, bound | {v}))

    out = walk(f, {}, frozenset())
    return out if changed[0] else f
