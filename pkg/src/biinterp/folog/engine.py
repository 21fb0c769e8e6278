"""Exhaustive model checking of group formulas on finite structures.

A structure is anything with ``elements`` (iterable of ids), ``table`` (Cayley
table indexed by ids) and ``inverse``: a GroupTable or a Subgroup view, whose
quantifiers then range over the subgroup's members only.

Formulas are compiled to negation normal form with every bound variable given a
unique integer id.  Existential blocks are decided by a complete backtracking
search: equations with a single unknown occurrence are solved outright,
disjunctions are split, a variable that is the last open one of some goal is
enumerated, nested existentials in positive position are then pulled into the
current block, and only otherwise is the most shared variable enumerated.
Universal blocks are the negation of such a search, and closed quantifier
nodes are memoised on the values of their free variables.  Every branch is
either explored or refuted by a sound rule, so results are exact.
"""

from __future__ import annotations

import itertools
import os
import sys
from typing import Mapping, Sequence

from ..errors import ComplexityCap, UnboundParameter, UnboundVariable
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
    free_vars_ordered,
    quantifier_rank,
)

DEFAULT_BUDGET = 10**8


def default_budget() -> int:
    env = os.environ.get("BIINTERP_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


# node kinds
_EQ, _NE, _AND, _OR, _EX, _ALL = range(6)
# term tags (constants are plain ints)
_VAR, _MUL, _INV = range(3)


class _Node:
    __slots__ = ("kind", "lhs", "rhs", "parts", "vars", "body", "fv", "tvars")

    def __init__(self, kind, fv, lhs=None, rhs=None, parts=None, vars=None, body=None, tvars=None):
        self.kind = kind
        self.fv = fv
        self.lhs = lhs
        self.rhs = rhs
        self.parts = parts
        self.vars = vars
        self.body = body
        self.tvars = tvars


_TRUE = _Node(_AND, frozenset(), parts=())
_FALSE = _Node(_OR, frozenset(), parts=())


class _Compiler:
    def __init__(self, structure, env: Mapping[str, int]):
        self.env = env
        self.tab = structure.table
        self.inv = structure.inverse
        self.members = set(structure.elements)
        self.next_id = 0

    def fresh(self) -> int:
        self.next_id += 1
        return self.next_id - 1

    def term(self, t, scope):
        if isinstance(t, Var):
            try:
                return (_VAR, scope[t.name])
            except KeyError:
                raise UnboundVariable(f"variable {t.name!r} is not assigned") from None
        if isinstance(t, One):
            return 0
        if isinstance(t, Const):
            if t.id not in self.members:
                raise ValueError(f"literal #{t.id} is not an element of the structure")
            return t.id
        if isinstance(t, Param):
            if t.name not in self.env:
                raise UnboundParameter(f"parameter @{t.name} is not bound")
            v = self.env[t.name]
            if v not in self.members:
                raise ValueError(f"parameter @{t.name} = {v} is not an element of the structure")
            return v
        if isinstance(t, Mul):
            a = self.term(t.left, scope)
            b = self.term(t.right, scope)
            if type(a) is int and type(b) is int:
                return self.tab[a][b]
            return (_MUL, a, b)
        if isinstance(t, Inv):
            a = self.term(t.arg, scope)
            if type(a) is int:
                return self.inv[a]
            return (_INV, a)
        raise TypeError(f"not a term: {t!r}")

    def formula(self, f, scope, positive=True) -> _Node:
        if isinstance(f, Eq):
            a = self.term(f.left, scope)
            b = self.term(f.right, scope)
            if type(a) is int and type(b) is int:
                return _TRUE if (a == b) == positive else _FALSE
            tv = []
            _collect(a, tv)
            _collect(b, tv)
            return _Node(_EQ if positive else _NE, frozenset(tv), lhs=a, rhs=b, tvars=tuple(tv))
        if isinstance(f, Not):
            return self.formula(f.arg, scope, not positive)
        if isinstance(f, (And, Or)):
            is_and = isinstance(f, And) == positive
            return self.junction(is_and, [self.formula(p, scope, positive) for p in f.parts])
        if isinstance(f, Implies):
            if positive:
                return self.junction(False, [self.formula(f.left, scope, False),
                                             self.formula(f.right, scope, True)])
            return self.junction(True, [self.formula(f.left, scope, True),
                                        self.formula(f.right, scope, False)])
        if isinstance(f, (Forall, Exists)):
            # ALL nodes keep the *negated* body: forall v. B holds iff no v satisfies not-B
            universal = isinstance(f, Forall) == positive
            kind = _ALL if universal else _EX
            names = []
            body = f
            while isinstance(body, type(f)):
                names.append(body.var)
                body = body.body
            scope = dict(scope)
            ids = []
            for n in names:
                vid = self.fresh()
                scope[n] = vid
                ids.append(vid)
            inner = self.formula(body, scope, positive != universal)
            bound = set(ids)
            if not (inner.fv & bound):
                # vacuous block: structures are non-empty
                return _negate(inner) if universal else inner
            return _Node(kind, inner.fv - bound, vars=tuple(ids), body=inner)
        raise TypeError(f"not a formula: {f!r}")

    def junction(self, is_and: bool, parts: list[_Node]) -> _Node:
        kind = _AND if is_and else _OR
        absorbing = _FALSE if is_and else _TRUE
        out = []
        for p in parts:
            if p is absorbing:
                return absorbing
            if p.kind == kind:
                out.extend(p.parts)
            else:
                out.append(p)
        if len(out) == 1:
            return out[0]
        if not out:
            return _TRUE if is_and else _FALSE
        fv = frozenset().union(*(p.fv for p in out))
        return _Node(kind, fv, parts=tuple(out))


def _negate(node: _Node) -> _Node:
    k = node.kind
    if k == _EQ:
        return _Node(_NE, node.fv, lhs=node.lhs, rhs=node.rhs, tvars=node.tvars)
    if k == _NE:
        return _Node(_EQ, node.fv, lhs=node.lhs, rhs=node.rhs, tvars=node.tvars)
    if k == _AND:
        if not node.parts:
            return _FALSE
        return _Node(_OR, node.fv, parts=tuple(_negate(p) for p in node.parts))
    if k == _OR:
        if not node.parts:
            return _TRUE
        return _Node(_AND, node.fv, parts=tuple(_negate(p) for p in node.parts))
    # EX v. B  <->  negated: ALL v. (not not-B); ALL stores the negated body
    if k == _EX:
        return _Node(_ALL, node.fv, vars=node.vars, body=node.body)
    return _Node(_EX, node.fv, vars=node.vars, body=node.body)


def _collect(t, out: list) -> None:
    if type(t) is int:
        return
    if t[0] == _VAR:
        out.append(t[1])
    elif t[0] == _MUL:
        _collect(t[1], out)
        _collect(t[2], out)
    else:
        _collect(t[1], out)


class Engine:
    """Search state for one structure; counts work against a budget."""

    def __init__(self, structure, budget: int | None = None):
        self.structure = structure
        self.tab = structure.table
        self.inv = structure.inverse
        self.dom = tuple(structure.elements)
        self.budget = default_budget() if budget is None else budget
        self.work = 0
        # truth of closed quantifier nodes, keyed by node and free-variable values
        self.memo: dict = {}

    def _tick(self, n: int = 1) -> None:
        self.work += n
        if self.work > self.budget:
            raise ComplexityCap(
                f"enumeration count exceeded budget {self.budget}", estimate=self.work)

    # -- term evaluation --

    def value(self, t, asg):
        if type(t) is int:
            return t
        tag = t[0]
        if tag == _VAR:
            return asg.get(t[1])
        if tag == _MUL:
            a = self.value(t[1], asg)
            if a is None:
                return None
            b = self.value(t[2], asg)
            if b is None:
                return None
            return self.tab[a][b]
        a = self.value(t[1], asg)
        return None if a is None else self.inv[a]

    def _solve_for(self, t, target, asg):
        # t contains exactly one unknown occurrence; return (var, value)
        tab, inv = self.tab, self.inv
        while True:
            tag = t[0]
            if tag == _VAR:
                return t[1], target
            if tag == _INV:
                target = inv[target]
                t = t[1]
                continue
            left = self.value(t[1], asg)
            if left is None:
                right = self.value(t[2], asg)
                target = tab[target][inv[right]]
                t = t[1]
            else:
                target = tab[inv[left]][target]
                t = t[2]

    def _propagate(self, node, asg):
        unknown = None
        for v in node.tvars:
            if v not in asg:
                if unknown is not None:
                    return None
                unknown = v
        if unknown is None:
            return None
        a = self.value(node.lhs, asg)
        if a is None:
            b = self.value(node.rhs, asg)
            return self._solve_for(node.lhs, b, asg)
        return self._solve_for(node.rhs, a, asg)

    # -- formula evaluation --

    def holds(self, node: _Node, asg: dict) -> bool:
        k = node.kind
        if k == _EQ:
            return self.value(node.lhs, asg) == self.value(node.rhs, asg)
        if k == _NE:
            return self.value(node.lhs, asg) != self.value(node.rhs, asg)
        if k == _AND:
            for p in node.parts:
                if not self.holds(p, asg):
                    return False
            return True
        if k == _OR:
            for p in node.parts:
                if self.holds(p, asg):
                    return True
            return False
        key = (node, tuple([asg[v] for v in node.fv]))
        got = self.memo.get(key)
        if got is None:
            got = self.sat([node.body], asg)
            if k == _ALL:
                got = not got
            self.memo[key] = got
        return got

    def _simplify(self, goals, asg, pull: bool = False):
        """Evaluate closed goals and flatten conjunctions.

        Open existentials stay as single goals unless ``pull`` is set, so the
        variables they share with the rest get bound first.  Returns the
        pending open goals, or None if some goal is already false.
        """
        pending = []
        stack = list(goals)
        while stack:
            g = stack.pop()
            closed = True
            for v in g.fv:
                if v not in asg:
                    closed = False
                    break
            if closed:
                if not self.holds(g, asg):
                    return None
                continue
            k = g.kind
            if k == _AND:
                stack.extend(g.parts)
            elif k == _EX and pull:
                stack.append(g.body)
            else:
                pending.append(g)
        return pending

    def _open_vars(self, pending, asg):
        counts: dict[int, int] = {}
        for g in pending:
            for v in g.fv:
                if v not in asg:
                    counts[v] = counts.get(v, 0) + 1
        return counts

    def _closing_var(self, pending, asg, counts):
        """The most shared variable that is the last open one of some goal, if any."""
        best = None
        for g in pending:
            last = None
            for v in g.fv:
                if v not in asg:
                    if last is not None:
                        break
                    last = v
            else:
                if last is not None and (best is None or (counts[last], -last) > (counts[best], -best)):
                    best = last
        return best

    def _split(self, pending, asg):
        """Partition goals into groups that share no unassigned variable."""
        owner: dict[int, int] = {}
        parent = list(range(len(pending)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for i, g in enumerate(pending):
            for v in g.fv:
                if v in asg:
                    continue
                j = owner.setdefault(v, i)
                if j != i:
                    parent[find(i)] = find(j)
        groups: dict[int, list] = {}
        for i, g in enumerate(pending):
            groups.setdefault(find(i), []).append(g)
        return sorted(groups.values(), key=len)

    def sat(self, goals, asg) -> bool:
        """Is there an extension of asg to the open variables making all goals true?"""
        pending = self._simplify(goals, asg)
        if pending is None:
            return False
        if not pending:
            return True
        for g in pending:
            if g.kind == _EQ:
                r = self._propagate(g, asg)
                if r is not None:
                    v, val = r
                    asg[v] = val
                    try:
                        return self.sat(pending, asg)
                    finally:
                        del asg[v]
        if len(pending) > 1:
            parts = self._split(pending, asg)
            if len(parts) > 1:
                return all(self.sat(part, asg) for part in parts)
        best = None
        for g in pending:
            if g.kind == _OR and (best is None or len(g.parts) < len(best.parts)):
                best = g
        if best is not None:
            rest = [g for g in pending if g is not best]
            for p in best.parts:
                self._tick()
                rest.append(p)
                ok = self.sat(rest, asg)
                rest.pop()
                if ok:
                    return True
            return False
        counts = self._open_vars(pending, asg)
        v = self._closing_var(pending, asg, counts)
        if v is None:
            if any(g.kind == _EX for g in pending):
                return self.sat(self._simplify(pending, asg, pull=True), asg)
            v = max(counts, key=lambda x: (counts[x], -x))
        for val in self.dom:
            self._tick()
            asg[v] = val
            ok = self.sat(pending, asg)
            del asg[v]
            if ok:
                return True
        return False

    def solutions(self, goals, asg, free: Sequence[int], out: set) -> None:
        """Add every tuple of values for ``free`` extendable to a model of goals."""
        pending = self._simplify(goals, asg)
        if pending is None:
            return
        open_free = [v for v in free if v not in asg]
        if not open_free:
            if not pending or self.sat(pending, asg):
                out.add(tuple(asg[v] for v in free))
            return
        for g in pending:
            if g.kind == _EQ:
                r = self._propagate(g, asg)
                if r is not None:
                    v, val = r
                    asg[v] = val
                    try:
                        self.solutions(pending, asg, free, out)
                    finally:
                        del asg[v]
                    return
        best = None
        for g in pending:
            if g.kind == _OR and (best is None or len(g.parts) < len(best.parts)):
                best = g
        if best is not None:
            rest = [g for g in pending if g is not best]
            for p in best.parts:
                self._tick()
                rest.append(p)
                self.solutions(rest, asg, free, out)
                rest.pop()
            return
        counts = self._open_vars(pending, asg)
        if self._closing_var(pending, asg, counts) is None and any(g.kind == _EX for g in pending):
            self.solutions(self._simplify(pending, asg, pull=True), asg, free, out)
            return
        constrained = [v for v in open_free if v in counts]
        if not constrained:
            # remaining free variables are unconstrained
            if pending and not self.sat(pending, asg):
                return
            self._tick(len(self.dom) ** len(open_free))
            for vals in itertools.product(self.dom, repeat=len(open_free)):
                for v, x in zip(open_free, vals):
                    asg[v] = x
                out.add(tuple(asg[v] for v in free))
            for v in open_free:
                del asg[v]
            return
        v = max(constrained, key=lambda x: (counts[x], -x))
        for val in self.dom:
            self._tick()
            asg[v] = val
            self.solutions(pending, asg, free, out)
            del asg[v]


def _with_recursion(fn):
    limit = sys.getrecursionlimit()
    if limit < 20000:
        sys.setrecursionlimit(20000)
    try:
        return fn()
    finally:
        sys.setrecursionlimit(limit)


def compile_formula(structure, f: Formula, env: Mapping[str, int] | None, names: Sequence[str]):
    comp = _Compiler(structure, env or {})
    scope = {}
    for n in names:
        scope[n] = comp.fresh()
    node = comp.formula(f, scope)
    return node, [scope[n] for n in names]


def evaluate(M, f: Formula, env: Mapping[str, int] | None = None,
             assignment: Mapping[str, int] | None = None, budget: int | None = None) -> bool:
    """Truth of ``f`` in ``M`` under parameter environment and variable assignment."""
    assignment = dict(assignment or {})
    for n in free_vars_ordered(f):
        if n not in assignment:
            raise UnboundVariable(f"free variable {n!r} is not assigned")
    names = list(assignment)
    node, ids = compile_formula(M, f, env, names)
    members = set(M.elements)
    asg = {}
    for n, vid in zip(names, ids):
        val = assignment[n]
        if val not in members:
            raise ValueError(f"{n} = {val} is not an element of the structure")
        asg[vid] = val
    eng = Engine(M, budget)
    return _with_recursion(lambda: eng.holds(node, asg) if _closed(node, asg) else eng.sat([node], asg))


def formula_checker(M, f: Formula, names: Sequence[str], env: Mapping[str, int] | None = None,
                    budget: int | None = None):
    """Compile ``f`` once; return a function deciding ``M |= f`` at a tuple of values for ``names``.

    The work budget is shared across all calls of the returned function.
    """
    names = list(names)
    extra = [n for n in free_vars_ordered(f) if n not in names]
    if extra:
        raise UnboundVariable(f"free variable(s) not listed: {', '.join(extra)}")
    node, ids = compile_formula(M, f, env, names)
    eng = Engine(M, budget)

    def check(values) -> bool:
        asg = dict(zip(ids, values))
        return _with_recursion(lambda: eng.holds(node, asg) if _closed(node, asg) else eng.sat([node], asg))

    return check


def _closed(node, asg) -> bool:
    return all(v in asg for v in node.fv)


def definable_set(M, f: Formula, free: Sequence[str], env: Mapping[str, int] | None = None,
                  budget: int | None = None, fixed: Mapping[str, int] | None = None) -> set[tuple[int, ...]]:
    """All tuples over M (in the order of ``free``) satisfying ``f``.

    ``fixed`` pins further free variables to given values without reporting them.
    """
    free = list(free)
    fixed = dict(fixed or {})
    extra = [n for n in free_vars_ordered(f) if n not in free and n not in fixed]
    if extra:
        raise UnboundVariable(f"free variable(s) not listed: {', '.join(extra)}")
    names = free + list(fixed)
    node, ids = compile_formula(M, f, env, names)
    asg = {ids[len(free) + i]: fixed[n] for i, n in enumerate(fixed)}
    out: set = set()
    eng = Engine(M, budget)
    _with_recursion(lambda: eng.solutions([node], asg, ids[:len(free)], out))
    return out


def naive_estimate(M, f: Formula, extra_vars: int = 0) -> int:
    """Plain nested-loop enumeration count |M|^(rank + extra_vars)."""
    return len(tuple(M.elements)) ** (quantifier_rank(f) + extra_vars)
