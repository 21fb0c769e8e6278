"""Finite groups as Cayley tables, with subgroup and coset machinery.

Element ids are dense integers ``0..order-1`` and the identity is always 0.
Products follow ``table[a][b] == a*b``.  Permutations compose right to left:
``(p*q)(x) == p(q(x))``.
"""

from __future__ import annotations

import itertools
import json
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import (
    GroupTooLarge,
    NoIdentityAtZero,
    NotAPermutation,
    NotAssociative,
    NotLatinSquare,
)

DEFAULT_CAP = 5040


@dataclass(frozen=True, eq=False)
class GroupTable:
    """A validated finite group.  Build through :func:`validate_group` or a builder."""

    order: int
    table: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] | None = None
    inverse: tuple[int, ...] = field(default=(), repr=False)

    identity = 0

    @property
    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def name(self, a: int) -> str:
        return self.names[a] if self.names else str(a)

    def element_order(self, a: int) -> int:
        n, x = 1, a
        while x != 0:
            x = self.table[x][a]
            n += 1
        return n

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    def to_json(self) -> dict:
        out = {"format": "cayley", "order": self.order, "table": [list(r) for r in self.table]}
        if self.names:
            out["names"] = list(self.names)
        return out

    def __repr__(self) -> str:
        return f"GroupTable(order={self.order})"


def validate_group(table, names: Sequence[str] | None = None) -> GroupTable:
    """Check the group axioms on a raw square array and wrap it.

    Raises NotLatinSquare, NoIdentityAtZero or NotAssociative naming the first
    offending row/column, cell or triple (lexicographic order).
    """
    arr = np.asarray(table, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise NotLatinSquare(f"table must be a non-empty square array, got shape {arr.shape}")
    n = arr.shape[0]
    bad = np.argwhere((arr < 0) | (arr >= n))
    if len(bad):
        i, j = bad[0]
        raise NotLatinSquare(f"entry [{i}][{j}] = {arr[i, j]} out of range 0..{n - 1}")

    expected = np.arange(n)
    for i in range(n):
        if not np.array_equal(np.sort(arr[i]), expected):
            j = _first_repeat(arr[i])
            raise NotLatinSquare(f"row {i} is not a permutation (repeat at column {j})")
    for j in range(n):
        if not np.array_equal(np.sort(arr[:, j]), expected):
            i = _first_repeat(arr[:, j])
            raise NotLatinSquare(f"column {j} is not a permutation (repeat at row {i})")

    if not np.array_equal(arr[0], expected):
        j = int(np.argmax(arr[0] != expected))
        raise NoIdentityAtZero(f"row 0 is not the identity: [0][{j}] = {arr[0, j]}")
    if not np.array_equal(arr[:, 0], expected):
        i = int(np.argmax(arr[:, 0] != expected))
        raise NoIdentityAtZero(f"column 0 is not the identity: [{i}][0] = {arr[i, 0]}")

    # (a*b)*c == a*(b*c), one slab of a at a time to bound memory
    for a in range(n):
        left = arr[arr[a]]            # left[b, c] = (a*b)*c
        right = arr[a][arr]           # right[b, c] = a*(b*c)
        diff = np.argwhere(left != right)
        if len(diff):
            b, c = diff[0]
            raise NotAssociative(f"({a}*{b})*{c} != {a}*({b}*{c})")

    rows = tuple(tuple(int(x) for x in r) for r in arr)
    inverse = tuple(int(np.argmax(arr[a] == 0)) for a in range(n))
    return GroupTable(n, rows, tuple(names) if names is not None else None, inverse)


def _first_repeat(values) -> int:
    seen = set()
    for idx, v in enumerate(values):
        if int(v) in seen:
            return idx
        seen.add(int(v))
    return len(values)


def _trusted(rows: list[list[int]], names: Sequence[str] | None) -> GroupTable:
    # builders produce correct tables by construction; still validate below cap 200
    if len(rows) <= 200:
        return validate_group(rows, names)
    inverse = [0] * len(rows)
    for a, row in enumerate(rows):
        inverse[a] = row.index(0)
    return GroupTable(len(rows), tuple(tuple(r) for r in rows),
                      tuple(names) if names is not None else None, tuple(inverse))


# -- permutation groups ------------------------------------------------------

def _check_perm(p: Sequence[int], degree: int) -> tuple[int, ...]:
    p = tuple(int(x) for x in p)
    if len(p) != degree or sorted(p) != list(range(degree)):
        raise NotAPermutation(f"{list(p)} is not a permutation of 0..{degree - 1}")
    return p


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(p[x] for x in q)


def close_permutations(degree: int, generators: Iterable[Sequence[int]],
                       cap: int = DEFAULT_CAP) -> GroupTable:
    """Cayley table of the group generated by permutations of ``0..degree-1``.

    Id 0 is the identity; other ids follow breadth-first discovery (words in the
    generators by length), lexicographic order within each level.
    """
    gens = [_check_perm(g, degree) for g in generators]
    ident = tuple(range(degree))
    perms = [ident]
    index = {ident: 0}
    frontier = [ident]
    while frontier:
        level = set()
        for x in frontier:
            for g in gens:
                y = _compose(x, g)
                if y not in index:
                    level.add(y)
        frontier = sorted(level)
        for y in frontier:
            index[y] = len(perms)
            perms.append(y)
        if len(perms) > cap:
            raise GroupTooLarge(f"generated group exceeds cap {cap}")
    return _perm_table(perms, index)


def _perm_table(perms: list[tuple[int, ...]], index: dict) -> GroupTable:
    rows = [[index[_compose(p, q)] for q in perms] for p in perms]
    names = ["".join(map(str, p)) if len(p) <= 10 else str(list(p)) for p in perms]
    return _trusted(rows, names)


# -- builders ----------------------------------------------------------------

def _cap_check(order: int, cap: int) -> None:
    if order > cap:
        raise GroupTooLarge(f"order {order} exceeds cap {cap}")


def cyclic(n: int, cap: int = DEFAULT_CAP) -> GroupTable:
    """Id a is g^a."""
    if n < 1:
        raise ValueError("cyclic(n) needs n >= 1")
    _cap_check(n, cap)
    rows = [[(a + b) % n for b in range(n)] for a in range(n)]
    names = ["1", "g"] + [f"g^{a}" for a in range(2, n)]
    return _trusted(rows, names[:n])


def dihedral(n: int, cap: int = DEFAULT_CAP) -> GroupTable:
    """Dihedral group of order 2n: ids 0..n-1 are r^a, ids n..2n-1 are s r^a."""
    if n < 1:
        raise ValueError("dihedral(n) needs n >= 1")
    _cap_check(2 * n, cap)

    def mul(x: int, y: int) -> int:
        b, a = divmod(x, n)
        d, c = divmod(y, n)
        # s^b r^a s^d r^c = s^(b+d) r^((-1)^d a + c)
        rot = (-a if d else a) + c
        return ((b + d) % 2) * n + rot % n

    rows = [[mul(x, y) for y in range(2 * n)] for x in range(2 * n)]

    def rname(a: int) -> str:
        return "" if a == 0 else ("r" if a == 1 else f"r^{a}")

    names = [rname(a) or "1" for a in range(n)] + [("s " + rname(a)).strip() for a in range(n)]
    return _trusted(rows, names)


def symmetric(n: int, cap: int = DEFAULT_CAP) -> GroupTable:
    """All permutations of 0..n-1 in lexicographic order (id 0 is the identity)."""
    if n < 1:
        raise ValueError("symmetric(n) needs n >= 1")
    _cap_check(math.factorial(n), cap)
    perms = list(itertools.permutations(range(n)))
    return _perm_table(perms, {p: i for i, p in enumerate(perms)})


_QUAT_UNIT = {  # unit products among 1,i,j,k as (sign, unit)
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


def quaternion8() -> GroupTable:
    """Ids: 0=1, 1=-1, 2=i, 3=-i, 4=j, 5=-j, 6=k, 7=-k."""
    def mul(x: int, y: int) -> int:
        ux, sx = divmod(x, 2)
        uy, sy = divmod(y, 2)
        sign, unit = _QUAT_UNIT[ux, uy]
        neg = (sx + sy + (sign < 0)) % 2
        return 2 * unit + neg

    rows = [[mul(x, y) for y in range(8)] for x in range(8)]
    return _trusted(rows, ["1", "-1", "i", "-i", "j", "-j", "k", "-k"])


def direct_product(*factors: GroupTable, cap: int = DEFAULT_CAP) -> GroupTable:
    """Lexicographic tuples: id of (a, b) is a*|B| + b (nested for more factors)."""
    if not factors:
        return cyclic(1)
    result = factors[0]
    for B in factors[1:]:
        A = result
        _cap_check(A.order * B.order, cap)
        nb = B.order
        rows = [[A.table[a1][a2] * nb + B.table[b1][b2]
                 for a2 in range(A.order) for b2 in range(nb)]
                for a1 in range(A.order) for b1 in range(nb)]
        names = [f"({A.name(a)},{B.name(b)})" for a in range(A.order) for b in range(nb)]
        result = _trusted(rows, names)
    return result


# -- subgroups and cosets ----------------------------------------------------

@dataclass(frozen=True, eq=False)
class Subgroup:
    """A subgroup of ``parent``; members are parent ids, sorted."""

    parent: GroupTable
    members: tuple[int, ...]

    identity = 0

    @property
    def elements(self) -> tuple[int, ...]:
        return self.members

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def table(self):
        return self.parent.table

    @property
    def inverse(self):
        return self.parent.inverse

    def mul(self, a: int, b: int) -> int:
        return self.parent.table[a][b]

    def inv(self, a: int) -> int:
        return self.parent.inverse[a]

    def __post_init__(self):
        object.__setattr__(self, "_member_set", frozenset(self.members))

    def __contains__(self, g: int) -> bool:
        return g in self._member_set

    def as_table(self) -> tuple[GroupTable, dict[int, int]]:
        """Relabel as a standalone GroupTable; returns it with the parent->local id map."""
        local = {g: i for i, g in enumerate(self.members)}
        rows = [[local[self.parent.table[a][b]] for b in self.members] for a in self.members]
        names = [self.parent.name(g) for g in self.members]
        return validate_group(rows, names), local

    def __repr__(self) -> str:
        return f"Subgroup({list(self.members)})"


def make_subgroup(G: GroupTable, members: Iterable[int]) -> Subgroup:
    """Wrap a member set, checking closure; use :func:`subgroup_closure` to generate one."""
    ms = tuple(sorted(set(int(m) for m in members)))
    s = set(ms)
    if 0 not in s:
        raise ValueError("subgroup must contain the identity 0")
    for a in ms:
        if G.inverse[a] not in s:
            raise ValueError(f"not closed under inverse at {a}")
        for b in ms:
            if G.table[a][b] not in s:
                raise ValueError(f"not closed under product: {a}*{b}")
    return Subgroup(G, ms)


def subgroup_closure(G: GroupTable, gens: Iterable[int]) -> Subgroup:
    members = {0}
    frontier = [0]
    gens = sorted(set(gens))
    for g in gens:
        if not 0 <= g < G.order:
            raise ValueError(f"{g} is not an element of the group")
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.table[x][g]
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    return Subgroup(G, tuple(sorted(members)))


def is_normal(G: GroupTable, S: Subgroup) -> bool:
    t, inv = G.table, G.inverse
    return all(t[t[g][s]][inv[g]] in S for g in range(G.order) for s in S.members)


@dataclass(frozen=True, eq=False)
class CosetDecomposition:
    """Right cosets H*g, ordered by their minimum id; coset 0 is H itself."""

    subgroup: Subgroup
    cosets: tuple[tuple[int, ...], ...]
    coset_of: tuple[int, ...]

    @property
    def index(self) -> int:
        return len(self.cosets)


def coset_decomposition(G: GroupTable, H: Subgroup) -> CosetDecomposition:
    coset_of = [-1] * G.order
    cosets = []
    for g in range(G.order):
        if coset_of[g] >= 0:
            continue
        c = tuple(sorted(G.table[h][g] for h in H.members))
        for x in c:
            coset_of[x] = len(cosets)
        cosets.append(c)
    return CosetDecomposition(H, tuple(cosets), tuple(coset_of))


def canonical_transversal(dec: CosetDecomposition) -> list[int]:
    """Minimum id of each coset; the first is 0."""
    return [c[0] for c in dec.cosets]


# -- group files -------------------------------------------------------------

def group_from_json(data: dict, cap: int = DEFAULT_CAP) -> GroupTable:
    fmt = data.get("format")
    if fmt == "cayley":
        table = data["table"]
        if "order" in data and data["order"] != len(table):
            raise NotLatinSquare(f"declared order {data['order']} but table has {len(table)} rows")
        _cap_check(len(table), cap)
        return validate_group(table, data.get("names"))
    if fmt == "perm":
        return close_permutations(int(data["degree"]), data.get("generators", []), cap=cap)
    raise ValueError(f"unknown group file format {fmt!r}")


def load_group(path: str | Path, cap: int = DEFAULT_CAP) -> GroupTable:
    with open(path) as fh:
        return group_from_json(json.load(fh), cap=cap)
