"""Seeded random sentences over the group signature, for soundness suites."""

from __future__ import annotations

import random

from .ast import And, Eq, Exists, Forall, Formula, Implies, Inv, Mul, Not, One, Or, Term, Var

_VAR_NAMES = ("a", "b", "c", "d")


def random_term(rng: random.Random, bound: list[str], depth: int) -> Term:
    r = rng.random()
    if depth <= 0 or r < 0.45:
        if bound and rng.random() < 0.85:
            return Var(rng.choice(bound))
        return One()
    if r < 0.8:
        return Mul(random_term(rng, bound, depth - 1), random_term(rng, bound, depth - 1))
    return Inv(random_term(rng, bound, depth - 1))


def random_formula(rng: random.Random, bound: list[str], rank: int, depth: int) -> Formula:
    r = rng.random()
    if rank > 0 and (r < 0.45 or not bound):
        name = _VAR_NAMES[len(bound)]
        body = random_formula(rng, bound + [name], rank - 1, depth)
        return (Forall if rng.random() < 0.5 else Exists)(name, body)
    if depth <= 0 or r < 0.65:
        return Eq(random_term(rng, bound, 2), random_term(rng, bound, 2))
    r = rng.random()
    if r < 0.25:
        return Not(random_formula(rng, bound, rank, depth - 1))
    left = random_formula(rng, bound, rank, depth - 1)
    right = random_formula(rng, bound, rank, depth - 1)
    if r < 0.55:
        return And((left, right))
    if r < 0.85:
        return Or((left, right))
    return Implies(left, right)


def random_sentence(rng: random.Random, max_rank: int = 2, depth: int = 3) -> Formula:
    """A closed formula of quantifier rank at most ``max_rank``."""
    return random_formula(rng, [], max_rank, depth)


def random_sentences(seed: int, count: int, max_rank: int = 2) -> list[Formula]:
    rng = random.Random(seed)
    return [random_sentence(rng, max_rank) for _ in range(count)]
