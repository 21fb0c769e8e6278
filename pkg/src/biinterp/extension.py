"""Extension data of a group over a normal subgroup of finite index.

With the canonical transversal ``t_1 = 1, ..., t_m`` every element is uniquely
``h * t_i`` and

    t_i * t_j = c[i][j] * t_{k[i][j]}          sigma_i(h) = t_i h t_i^-1

Storage is 0-based throughout (``c[0][j]`` is the logical ``c_{1,j+1}``,
``k`` holds 0-based coset indices).  The accessors :meth:`ExtensionData.c_` and
:meth:`ExtensionData.k_` take and return 1-based indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .errors import NotNormal, TrivialH, TrivialIndex
from .groups import (
    CosetDecomposition,
    GroupTable,
    Subgroup,
    canonical_transversal,
    coset_decomposition,
    is_normal,
)
from .report import VerificationReport


@dataclass(frozen=True, eq=False)
class ExtensionData:
    G: GroupTable
    H: Subgroup
    transversal: tuple[int, ...]
    c: tuple[tuple[int, ...], ...]
    k: tuple[tuple[int, ...], ...]
    # sigma[i][p] is the parent id of sigma_i(H.members[p])
    sigma: tuple[tuple[int, ...], ...]
    dec: CosetDecomposition = field(repr=False)

    @property
    def m(self) -> int:
        return len(self.transversal)

    def c_(self, i: int, j: int) -> int:
        return self.c[i - 1][j - 1]

    def k_(self, i: int, j: int) -> int:
        return self.k[i - 1][j - 1] + 1

    def sigma_apply(self, i: int, h: int) -> int:
        """sigma_i(h) for 0-based i; h a parent id in H."""
        return self.sigma[i][self._pos[h]]

    def __post_init__(self):
        object.__setattr__(self, "_pos", {h: p for p, h in enumerate(self.H.members)})

    def decompose(self, g: int) -> tuple[int, int]:
        """Return (h, i) with g = h * t_i, i 0-based."""
        i = self.dec.coset_of[g]
        t = self.transversal[i]
        return self.G.table[g][self.G.inverse[t]], i

    def compose(self, h: int, i: int) -> int:
        return self.G.table[h][self.transversal[i]]

    def with_cocycle(self, i: int, j: int, value: int) -> ExtensionData:
        """Copy with c[i][j] (0-based) replaced; used for fault injection."""
        rows = [list(r) for r in self.c]
        rows[i][j] = value
        return replace(self, c=tuple(tuple(r) for r in rows))

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "transversal": list(self.transversal),
            "c": [list(r) for r in self.c],
            "k": [list(r) for r in self.k],
            "sigma": [list(r) for r in self.sigma],
        }


def extension_data(G: GroupTable, H: Subgroup) -> ExtensionData:
    if H.order < 2:
        raise TrivialH("H must be nontrivial")
    if not is_normal(G, H):
        raise NotNormal(f"{list(H.members)} is not normal")
    dec = coset_decomposition(G, H)
    if dec.index < 2:
        raise TrivialIndex("H = G: the identity bi-interpretation applies, no extension data")
    t = canonical_transversal(dec)
    tab, inv = G.table, G.inverse
    m = len(t)
    c, k = [], []
    for i in range(m):
        crow, krow = [], []
        for j in range(m):
            prod = tab[t[i]][t[j]]
            kk = dec.coset_of[prod]
            crow.append(tab[prod][inv[t[kk]]])
            krow.append(kk)
        c.append(tuple(crow))
        k.append(tuple(krow))
    sigma = tuple(tuple(tab[tab[t[i]][h]][inv[t[i]]] for h in H.members) for i in range(m))
    return ExtensionData(G, H, tuple(t), tuple(c), tuple(k), sigma, dec)


def verify_extension_identities(ext: ExtensionData, instance: str = "") -> VerificationReport:
    """Exhaustively check the identities forced by associativity of G.

    Counterexamples are reported with 1-based indices.
    """
    tab, inv = ext.G.table, ext.G.inverse
    m, t, c, k = ext.m, ext.transversal, ext.c, ext.k
    H = ext.H
    rep = VerificationReport(instance)
    r = range(m)

    def sig(i, h):
        if h not in H:
            return None
        return ext.sigma_apply(i, h)

    bad = next(((i + 1, j + 1) for i in r for j in r
                if tab[t[i]][t[j]] != tab[c[i][j]][t[k[i][j]]] or c[i][j] not in H), None)
    rep.add("defining", bad is None, counterexample=bad,
            detail="t_i*t_j = c_ij*t_k(i,j)")

    bad = next(((1, j + 1) for j in r if c[0][j] != 0 or k[0][j] != j), None)
    if bad is None:
        bad = next(((i + 1, 1) for i in r if c[i][0] != 0 or k[i][0] != i), None)
    if bad is None and t[0] != 0:
        bad = (1,)
    if bad is None:
        bad = next(((1, h) for h in H.members if sig(0, h) != h), None)
    rep.add("unit", bad is None, counterexample=bad,
            detail="t_1 = 1, c_1j = c_i1 = 1, k(1,j) = j, k(i,1) = i, sigma_1 = id")

    bad = next(((i + 1, h) for i in r for h in H.members if sig(i, h) not in H), None)
    if bad is None:
        bad = next(((i + 1, h) for i in r for h in H.members
                    if sig(i, h) != tab[tab[t[i]][h]][inv[t[i]]]), None)
    rep.add("normality", bad is None, counterexample=bad,
            detail="sigma_i(h) = t_i h t_i^-1 lies in H")

    bad = None
    for i in r:
        for j in r:
            for l in r:
                if k[k[i][j]][l] != k[i][k[j][l]]:
                    bad = (i + 1, j + 1, l + 1)
                    break
                s = sig(i, c[j][l])
                if s is None or tab[c[i][j]][c[k[i][j]][l]] != tab[s][c[i][k[j][l]]]:
                    bad = (i + 1, j + 1, l + 1)
                    break
            if bad:
                break
        if bad:
            break
    rep.add("associativity", bad is None, counterexample=bad,
            detail="k(k(i,j),l) = k(i,k(j,l)); c_ij c_k(i,j),l = sigma_i(c_jl) c_i,k(j,l)")

    bad = None
    for i in r:
        for j in r:
            cij = c[i][j]
            for h in H.members:
                lhs = sig(i, sig(j, h)) if sig(j, h) is not None else None
                inner = sig(k[i][j], h)
                rhs = None if inner is None else tab[tab[cij][inner]][inv[cij]]
                if lhs is None or lhs != rhs:
                    bad = (i + 1, j + 1, h)
                    break
            if bad:
                break
        if bad:
            break
    rep.add("sigma_composition", bad is None, counterexample=bad,
            detail="sigma_i o sigma_j = inn(c_ij) o sigma_k(i,j)")
    return rep
