"""Encoding of G as a set of tuples over H with a case-defined product.

Every g in G is uniquely ``h * t_i``.  A *pattern class* ``(i, 0)`` holds the
elements with h != 1 and ``(i, 1)`` the single element ``t_i``.  Each class has a
coordinate pattern: a tuple whose entries are fixed H elements, except for one
open slot (``None``) that carries h in the ``(i, 0)`` classes.

Standard mode (width m)::

    (i, 0):  slot i = h, all other coordinates 1
    (i, 1):  coordinate i = 1, all others xi

Star mode (width 3, only for m = 2)::

    (1, 0): (h, 1, 1)    (2, 0): (1, h, 1)    (2, 1): (xi, 1, xi)    (1, 1): (1, xi, xi)

Tuples hold parent (G) ids of H members; class indices are 0-based in code.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EncodingCollision, NotInGamma, TrivialH
from .extension import ExtensionData
from .groups import Subgroup

STANDARD = "standard"
STAR = "star"


def choose_xi(H: Subgroup) -> int:
    if H.order < 2:
        raise TrivialH("xi must be a non-identity element of H, but H = 1")
    return H.members[1]


@dataclass(frozen=True, eq=False)
class GammaCodec:
    ext: ExtensionData
    xi: int
    mode: str
    # patterns[(i, a)] -> tuple of fixed ids, None marking the open slot
    patterns: dict
    codes: tuple[tuple[int, ...], ...]      # codes[g] = encode(g)
    collisions: tuple[tuple[int, int, tuple[int, ...]], ...]

    @property
    def width(self) -> int:
        return len(self.codes[0])

    @property
    def gamma_domain(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.codes)

    @property
    def injective(self) -> bool:
        return not self.collisions

    def classes(self) -> list[tuple[int, int]]:
        """Pattern classes in a fixed order: (1,0), (1,1), (2,0), ... (0-based)."""
        return sorted(self.patterns)

    def slot(self, cls: tuple[int, int]) -> int | None:
        pat = self.patterns[cls]
        return pat.index(None) if None in pat else None

    def fill(self, cls: tuple[int, int], h: int | None = None) -> tuple[int, ...]:
        return tuple(h if x is None else x for x in self.patterns[cls])

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "xi": self.xi,
            "width": self.width,
            "gamma": [list(c) for c in self.codes],
        }


def _patterns(m: int, xi: int, mode: str) -> dict:
    if mode == STAR:
        return {
            (0, 0): (None, 0, 0),
            (1, 0): (0, None, 0),
            (1, 1): (xi, 0, xi),
            (0, 1): (0, xi, xi),
        }
    pats = {}
    for i in range(m):
        pats[i, 0] = tuple(None if j == i else 0 for j in range(m))
        pats[i, 1] = tuple(0 if j == i else xi for j in range(m))
    return pats


def build_codec(ext: ExtensionData, mode: str = "auto", strict: bool = True,
                xi: int | None = None) -> GammaCodec:
    """Encoding for ``ext``; ``mode`` is auto, standard or star.

    Auto picks star exactly when m = 2.  With ``strict`` a non-injective
    encoding raises EncodingCollision; otherwise the collisions are recorded
    on the codec for diagnosis.
    """
    if xi is None:
        xi = choose_xi(ext.H)
    elif xi == 0 or xi not in ext.H:
        raise TrivialH(f"xi = {xi} must be a non-identity element of H")
    if mode == "auto":
        mode = STAR if ext.m == 2 else STANDARD
    if mode not in (STANDARD, STAR):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == STAR and ext.m != 2:
        raise ValueError(f"star encoding needs index 2, got m = {ext.m}")
    pats = _patterns(ext.m, xi, mode)
    codes = []
    for g in range(ext.G.order):
        h, i = ext.decompose(g)
        if h != 0:
            codes.append(tuple(h if x is None else x for x in pats[i, 0]))
        else:
            codes.append(pats[i, 1])
    seen: dict = {}
    collisions = []
    for g, c in enumerate(codes):
        if c in seen:
            collisions.append((seen[c], g, c))
        else:
            seen[c] = g
    codec = GammaCodec(ext, xi, mode, pats, tuple(codes), tuple(collisions))
    if strict and collisions:
        g1, g2, c = collisions[0]
        raise EncodingCollision(
            f"encoding is not injective: gamma({g1}) = gamma({g2}) = {list(c)}", collisions)
    return codec


def encode(codec: GammaCodec, g: int) -> tuple[int, ...]:
    return codec.codes[g]


def classify(codec: GammaCodec, tup) -> tuple[int, int, int]:
    """Return (i, a, h) with tup in the pattern class (i, a) carrying h (h = 1 when a = 1)."""
    tup = tuple(tup)
    H = codec.ext.H
    if len(tup) != codec.width:
        raise NotInGamma(f"{list(tup)} has width {len(tup)}, expected {codec.width}")
    for cls in codec.classes():
        pat = codec.patterns[cls]
        h = 0
        for x, p in zip(tup, pat):
            if p is None:
                if x == 0 or x not in H:
                    break
                h = x
            elif x != p:
                break
        else:
            return cls[0], cls[1], h
    raise NotInGamma(f"{list(tup)} matches none of the patterns "
                     + ", ".join(_pattern_str(codec.patterns[c]) for c in codec.classes()))


def _pattern_str(pat) -> str:
    return "(" + ",".join("h" if p is None else str(p) for p in pat) + ")"


def decode(codec: GammaCodec, tup) -> int:
    i, _, h = classify(codec, tup)
    return codec.ext.compose(h, i)


def _result(codec: GammaCodec, l: int, p: int) -> tuple[int, ...]:
    return codec.fill((l, 0), p) if p != 0 else codec.fill((l, 1))


def gamma_op(codec: GammaCodec, a, b) -> tuple[int, ...]:
    """Product on Gamma by the explicit case rules.

    (i,0)h x (j,0)k -> h sigma_i(k) c_ij     (i,1) x (j,0)k -> sigma_i(k) c_ij
    (i,0)h x (j,1)  -> h c_ij                (i,1) x (j,1)  -> c_ij
    placed at index k(i,j); a product equal to 1 gives the class (k(i,j), 1).
    """
    ext = codec.ext
    tab = ext.G.table
    i, alpha, h = classify(codec, a)
    j, beta, kk = classify(codec, b)
    cij = ext.c[i][j]
    if beta == 0:
        right = tab[ext.sigma_apply(i, kk)][cij]
    else:
        right = cij
    p = tab[h][right] if alpha == 0 else right
    return _result(codec, ext.k[i][j], p)


def gamma_op_generic(codec: GammaCodec, a, b) -> tuple[int, ...]:
    """Product on Gamma by decoding, multiplying in G and re-encoding."""
    return codec.codes[codec.ext.G.table[decode(codec, a)][decode(codec, b)]]
