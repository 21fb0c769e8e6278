"""Finite axiomatisations of (group, generating tuple) pairs."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ArityMismatch, GroupTooLarge, NotGenerating
from ..groups import DEFAULT_CAP, GroupTable, subgroup_closure
from .ast import (
    And,
    Eq,
    Forall,
    Formula,
    Or,
    Var,
    conj,
    disj,
    mul,
    neq,
    term_vars,
)
from .engine import evaluate


@dataclass(frozen=True, eq=False)
class AxiomatizationCertificate:
    base: GroupTable | None
    tuple: tuple[int, ...]
    sentence: Formula
    words: tuple[tuple[int, ...], ...]   # words[g] = generator indices spelling g

    @property
    def arity(self) -> int:
        return len(self.tuple)

    @property
    def variables(self) -> list[str]:
        return tuple_vars(self.arity)


def tuple_vars(s: int) -> list[str]:
    return [f"y{i + 1}" for i in range(s)]


def shortest_words(H: GroupTable, gens: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Breadth-first words in the generators, shortest first, ties by generator index."""
    words: list[tuple[int, ...] | None] = [None] * H.order
    words[0] = ()
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for gi, g in enumerate(gens):
                y = H.table[x][g]
                if words[y] is None:
                    words[y] = words[x] + (gi,)
                    nxt.append(y)
        frontier = nxt
    return words


def _word_term(word: tuple[int, ...], names: list[str]):
    return mul(*(Var(names[i]) for i in word))


def axiomatize_with_tuple(H: GroupTable, tup, cap: int = DEFAULT_CAP) -> AxiomatizationCertificate:
    """Sentence in y1..ys true of (H2, t2) exactly when some isomorphism H -> H2 maps tup to t2.

    Conjuncts: every table entry as a word equation, each y_i equal to the word of
    its own element, pairwise distinctness of the element words, and
    ``forall x`` being one of the words.
    """
    tup = tuple(int(x) for x in tup)
    if H.order > cap:
        raise GroupTooLarge(f"order {H.order} exceeds cap {cap}")
    for x in tup:
        if not 0 <= x < H.order:
            raise NotGenerating(f"{x} is not an element")
    if subgroup_closure(H, tup).order != H.order:
        raise NotGenerating(f"{list(tup)} does not generate the group")
    words = shortest_words(H, tup)
    names = tuple_vars(len(tup))
    parts: list[Formula] = []
    n = H.order
    for a in range(n):
        for b in range(n):
            ab = H.table[a][b]
            if words[a] + words[b] != words[ab]:
                parts.append(Eq(_word_term(words[a] + words[b], names), _word_term(words[ab], names)))
    for i, h in enumerate(tup):
        if words[h] != (i,):
            parts.append(Eq(Var(names[i]), _word_term(words[h], names)))
    for a in range(n):
        for b in range(a + 1, n):
            parts.append(neq(_word_term(words[a], names), _word_term(words[b], names)))
    x = "x"
    parts.append(Forall(x, disj(Eq(Var(x), _word_term(words[g], names)) for g in range(n))))
    return AxiomatizationCertificate(H, tup, conj(parts), tuple(words))


def words_from_sentence(sentence: Formula, arity: int) -> tuple[tuple[int, ...], ...]:
    """Recover the element words from the final ``forall x`` clause of a certificate."""
    last = sentence.parts[-1] if isinstance(sentence, And) else sentence
    if not isinstance(last, Forall):
        raise ValueError("not a certificate sentence: last conjunct is not a forall clause")
    body = last.body
    cases = body.parts if isinstance(body, Or) else (body,)
    names = tuple_vars(arity)
    out = []
    for case in cases:
        if not isinstance(case, Eq):
            raise ValueError("not a certificate sentence: malformed surjectivity clause")
        out.append(tuple(names.index(v) for v in term_vars(case.right)))
    return tuple(out)


def check_axiomatization(cert: AxiomatizationCertificate, H2: GroupTable, tuple2):
    """Return (holds, isomorphism) with the isomorphism as a list g -> image, or None."""
    tuple2 = tuple(int(x) for x in tuple2)
    if len(tuple2) != cert.arity:
        raise ArityMismatch(f"certificate has arity {cert.arity}, got {len(tuple2)} elements")
    asg = dict(zip(cert.variables, tuple2))
    if not evaluate(H2, cert.sentence, assignment=asg):
        return False, None
    words = cert.words or words_from_sentence(cert.sentence, cert.arity)
    iso = []
    for w in words:
        v = 0
        for gi in w:
            v = H2.table[v][tuple2[gi]]
        iso.append(v)
    # independent confirmation of the witness
    if sorted(iso) != list(range(H2.order)) or len(iso) != H2.order:
        raise AssertionError("sentence held but word map is not a bijection")
    if cert.base is not None:
        T = cert.base.table
        for a in range(len(iso)):
            for b in range(len(iso)):
                if iso[T[a][b]] != H2.table[iso[a]][iso[b]]:
                    raise AssertionError("sentence held but word map is not multiplicative")
        if any(iso[h] != h2 for h, h2 in zip(cert.tuple, tuple2)):
            raise AssertionError("sentence held but word map does not send tuple to tuple2")
    return True, iso
