"""Interpretations between G and a definable normal subgroup H, and their checks.

Two interpretations are built:

* H inside G, one-dimensional, cut out by a defining formula ``kappa``;
* G inside H, on the tuple set of a :class:`~biinterp.gamma.GammaCodec`, with
  domain and product given by explicit pattern formulas.

:func:`translate` compiles formulas about the source structure into formulas
about the target, and :func:`verify_biinterpretation` runs the whole chain of
exhaustive checks for one instance.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .errors import (
    BiinterpError,
    ComplexityCap,
    FormulaExactnessFailure,
    GraphMismatch,
    KappaMismatch,
    NotAutomorphism,
)
from .extension import ExtensionData, extension_data, verify_extension_identities
from .folog.ast import (
    ONE,
    And,
    Const,
    Eq,
    Exists,
    Formula,
    Implies,
    Inv,
    Mul,
    Not,
    One,
    Or,
    Param,
    Var,
    all_var_names,
    conj,
    disj,
    exists_block,
    forall_block,
    free_vars_ordered,
    neq,
    quantifier_rank,
    substitute,
    substitute_params,
    to_str,
)
from .folog.engine import definable_set, formula_checker
from .folog.randgen import random_sentences
from .gamma import GammaCodec, build_codec, gamma_op, gamma_op_generic
from .groups import GroupTable, Subgroup, make_subgroup
from .report import VerificationReport


@dataclass(frozen=True, eq=False)
class Interpretation:
    """``source`` realised on tuples over ``target``.

    ``coord_map[g]`` is the target tuple of source element g (indexed by
    position in ``source.elements``).  ``domain_formula`` has free variables
    ``domain_vars``; ``mult_formula`` has ``mult_vars`` = x-block, y-block,
    z-block and defines the graph of the product.
    """

    source: object
    target: object
    dim: int
    domain_formula: Formula
    domain_vars: tuple[str, ...]
    mult_formula: Formula
    mult_vars: tuple[str, ...]
    coord_map: dict

    def block(self, g: int) -> tuple[int, ...]:
        return self.coord_map[g]

    def identity_block(self) -> tuple[int, ...]:
        return self.coord_map[0]

    def domain_at(self, names: Sequence[Formula]) -> Formula:
        return substitute(self.domain_formula, dict(zip(self.domain_vars, names)))

    def mult_at(self, a, b, c) -> Formula:
        return substitute(self.mult_formula, dict(zip(self.mult_vars, list(a) + list(b) + list(c))))

    def expected_domain(self) -> set[tuple[int, ...]]:
        return set(self.coord_map.values())

    def expected_graph(self) -> set[tuple[int, ...]]:
        tab = self.source.table
        cm = self.coord_map
        src = list(self.source.elements)
        return {cm[a] + cm[b] + cm[tab[a][b]] for a in src for b in src}


def _block_names(prefix: str, n: int) -> tuple[str, ...]:
    return tuple(f"{prefix}{j + 1}" for j in range(n))


def _lit(h: int):
    return ONE if h == 0 else Const(h)


# -- H interpreted in G ------------------------------------------------------

def interpret_H_in_G(G: GroupTable, H: Subgroup, kappa: Formula,
                     env: Mapping[str, int] | None = None, verify: bool = True) -> Interpretation:
    """One-dimensional interpretation of H in G by inclusion, domain ``kappa``."""
    kappa = substitute_params(kappa, env or {})
    fv = free_vars_ordered(kappa)
    if len(fv) != 1:
        raise ValueError(f"kappa must have exactly one free variable, has {fv}")
    defined = {t[0] for t in definable_set(G, kappa, fv)}
    members = set(H.members)
    if defined != members:
        raise KappaMismatch(
            f"kappa defines {sorted(defined)}, expected {sorted(members)}",
            sorted(members - defined), sorted(defined - members))
    dom = substitute(kappa, {fv[0]: Var("x1")})

    def k(v):
        return substitute(kappa, {fv[0]: Var(v)})

    mult = conj([k("x1"), k("y1"), k("z1"), Eq(Mul(Var("x1"), Var("y1")), Var("z1"))])
    interp = Interpretation(H, G, 1, dom, ("x1",), mult, ("x1", "y1", "z1"),
                            {h: (h,) for h in H.members})
    if verify:
        check_exactness(interp)
    return interp


def check_exactness(interp: Interpretation, mult_check: str = "exhaustive",
                    seed: int = 0, samples: int = 10_000, budget: int | None = None) -> None:
    """Raise FormulaExactnessFailure unless both defining formulas are exact.

    ``mult_check="candidate"`` evaluates the product formula on all triples of
    domain tuples plus ``samples`` seeded random non-members instead of the full
    power of the target.
    """
    T = interp.target
    n = interp.dim
    got = definable_set(T, interp.domain_formula, interp.domain_vars, budget=budget)
    want = interp.expected_domain()
    if got != want:
        bad = min(got ^ want)
        raise FormulaExactnessFailure(
            f"domain formula {'admits' if bad in got else 'misses'} {list(bad)}", list(bad))
    graph = interp.expected_graph()
    if mult_check == "exhaustive":
        got = definable_set(T, interp.mult_formula, interp.mult_vars, budget=budget)
        if got != graph:
            bad = min(got ^ graph)
            raise FormulaExactnessFailure(
                f"product formula {'admits' if bad in got else 'misses'} {list(bad)}", list(bad))
        return
    check = formula_checker(T, interp.mult_formula, interp.mult_vars, budget=budget)
    dom = sorted(want)
    for a in dom:
        for b in dom:
            for c in dom:
                tup = a + b + c
                if check(tup) != (tup in graph):
                    raise FormulaExactnessFailure(f"product formula wrong on {list(tup)}", list(tup))
    rng = random.Random(seed)
    elems = list(T.elements)
    done = 0
    while done < samples:
        tup = tuple(rng.choice(elems) for _ in range(3 * n))
        if tup in graph:
            continue
        done += 1
        if check(tup):
            raise FormulaExactnessFailure(f"product formula admits {list(tup)}", list(tup))


# -- automorphisms of H as formulas ------------------------------------------

def _as_mapping(H, sigma) -> dict[int, int]:
    members = list(H.elements)
    if isinstance(sigma, Mapping):
        return {int(a): int(b) for a, b in sigma.items()}
    sigma = list(sigma)
    if len(sigma) != len(members):
        raise NotAutomorphism(f"expected {len(members)} images, got {len(sigma)}")
    return dict(zip(members, (int(x) for x in sigma)))


def sigma_defining_formula(H, sigma) -> Formula:
    """Formula in x, y defining the graph of the automorphism ``sigma`` of H.

    Prefers ``y = #c * x * #c^-1`` for an inner witness c (smallest id); falls
    back to the disjunction over the graph, which uses parameters for every point.
    """
    members = list(H.elements)
    mset = set(members)
    smap = _as_mapping(H, sigma)
    tab, inv = H.table, H.inverse
    if set(smap) != mset or set(smap.values()) != mset:
        raise NotAutomorphism("sigma is not a bijection of H")
    for a in members:
        for b in members:
            if smap[tab[a][b]] != tab[smap[a]][smap[b]]:
                raise NotAutomorphism(f"sigma({a}*{b}) != sigma({a})*sigma({b})")
    x, y = Var("x"), Var("y")
    for c in members:
        if all(tab[tab[c][h]][inv[c]] == smap[h] for h in members):
            return Eq(y, Mul(Mul(Const(c), x), Inv(Const(c))))
    return disj(And((Eq(x, _lit(h)), Eq(y, _lit(smap[h])))) for h in members)


# -- G interpreted in H ------------------------------------------------------

def pattern_formula(codec: GammaCodec, cls, names: Sequence[str]) -> Formula:
    parts = []
    for v, p in zip(names, codec.patterns[cls]):
        if p is None:
            parts.append(neq(Var(v), ONE))
        else:
            parts.append(Eq(Var(v), _lit(p)))
    return conj(parts)


def _class_value(codec: GammaCodec, cls, names):
    s = codec.slot(cls)
    return None if s is None else Var(names[s])


def _landing(codec: GammaCodec, l: int, p, znames) -> Formula:
    """z-block encodes the element p * t_l, for a term p."""
    s = codec.slot((l, 0))
    if isinstance(p, int):
        if p == 0:
            return pattern_formula(codec, (l, 1), znames)
        return And((pattern_formula(codec, (l, 0), znames), Eq(Var(znames[s]), _lit(p))))
    return Or((
        And((pattern_formula(codec, (l, 0), znames), Eq(Var(znames[s]), p))),
        And((pattern_formula(codec, (l, 1), znames), Eq(p, ONE))),
    ))


def build_gamma_formulas(ext: ExtensionData, codec: GammaCodec):
    """(domain_formula, domain_vars, mult_formula, mult_vars) for the codec."""
    n = codec.width
    xs, ys, zs = _block_names("x", n), _block_names("y", n), _block_names("z", n)
    classes = codec.classes()
    domain = disj(pattern_formula(codec, cls, xs) for cls in classes)
    sigma_f = [sigma_defining_formula(ext.H, ext.sigma[i]) for i in range(ext.m)]
    outer = []
    for A in classes:
        i, alpha = A
        X = _class_value(codec, A, xs)
        inner = []
        for B in classes:
            j, beta = B
            Y = _class_value(codec, B, ys)
            cij = ext.c[i][j]
            l = ext.k[i][j]
            if beta == 0:
                w = Var("w")
                right = Mul(w, _lit(cij)) if cij else w
            else:
                right = cij
            if alpha == 0:
                p = Mul(X, right if not isinstance(right, int) else _lit(right)) \
                    if not (isinstance(right, int) and right == 0) else X
            else:
                p = right
            body = _landing(codec, l, p, zs)
            if beta == 0:
                chi = substitute(sigma_f[i], {"x": Y, "y": Var("w")})
                body = Exists("w", And((chi, body)))
            inner.append(And((pattern_formula(codec, B, ys), body)))
        outer.append(And((pattern_formula(codec, A, xs), disj(inner))))
    return domain, xs, disj(outer), xs + ys + zs


def interpret_G_in_H(ext: ExtensionData, codec: GammaCodec, verify: bool = True,
                     mult_check: str = "exhaustive", budget: int | None = None) -> Interpretation:
    dom, dvars, mult, mvars = build_gamma_formulas(ext, codec)
    interp = Interpretation(ext.G, ext.H, codec.width, dom, dvars, mult, mvars,
                            {g: codec.codes[g] for g in range(ext.G.order)})
    if verify:
        check_exactness(interp, mult_check=mult_check, budget=budget)
    return interp


# -- translation -------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class TranslationResult:
    phi: Formula
    psi: Formula
    interp: Interpretation
    source_vars: tuple[str, ...]        # free variables of phi, in order
    target_vars: tuple[str, ...]        # their blocks, concatenated

    @property
    def r(self) -> int:
        return len(self.source_vars)

    @property
    def s(self) -> int:
        return len(self.target_vars)

    def beta(self, values: Sequence[int]) -> tuple[int, ...]:
        out: tuple[int, ...] = ()
        for v in values:
            out += self.interp.coord_map[v]
        return out

    def estimate(self) -> int:
        """Enumeration count of the relativised source quantifiers over the target."""
        n = len(tuple(self.interp.target.elements))
        return n ** (self.interp.dim * (quantifier_rank(self.phi) + self.r))


class _Translator:
    def __init__(self, interp: Interpretation, env: Mapping[str, int], avoid: set[str]):
        self.interp = interp
        self.env = env
        self.avoid = avoid
        self.counter = 0

    def block(self, name: str) -> list[str]:
        return [f"{name}_{j + 1}" for j in range(self.interp.dim)]

    def fresh_block(self) -> list[str]:
        while True:
            name = f"v{self.counter}"
            self.counter += 1
            if name not in self.avoid:
                return self.block(name)

    def literal(self, g: int) -> list:
        if g not in self.interp.coord_map:
            raise ValueError(f"#{g} is not an element of the source structure")
        return [_lit(h) for h in self.interp.coord_map[g]]

    def term(self, t, bindings: list) -> list:
        if isinstance(t, Var):
            return [Var(n) for n in self.block(t.name)]
        if isinstance(t, One):
            return self.literal(0)
        if isinstance(t, Const):
            return self.literal(t.id)
        if isinstance(t, Param):
            if t.name not in self.env:
                from .errors import UnboundParameter
                raise UnboundParameter(f"parameter @{t.name} is not bound")
            return self.literal(self.env[t.name])
        if isinstance(t, Mul):
            a = self.term(t.left, bindings)
            b = self.term(t.right, bindings)
            v = self.fresh_block()
            bindings.append((v, self.interp.mult_at(a, b, [Var(n) for n in v])))
            return [Var(n) for n in v]
        if isinstance(t, Inv):
            a = self.term(t.arg, bindings)
            v = self.fresh_block()
            vs = [Var(n) for n in v]
            bindings.append((v, self.interp.mult_at(a, vs, self.literal(0))))
            return vs
        raise TypeError(f"not a term: {t!r}")

    def formula(self, f) -> Formula:
        if isinstance(f, Eq):
            bindings: list = []
            a = self.term(f.left, bindings)
            b = self.term(f.right, bindings)
            core = conj(Eq(x, y) for x, y in zip(a, b))
            if not bindings:
                return core
            names = [n for v, _ in bindings for n in v]
            return exists_block(names, conj([c for _, c in bindings] + [core]))
        if isinstance(f, Not):
            return Not(self.formula(f.arg))
        if isinstance(f, (And, Or)):
            return type(f)(tuple(self.formula(p) for p in f.parts))
        if isinstance(f, Implies):
            return Implies(self.formula(f.left), self.formula(f.right))
        names = self.block(f.var)
        guard = self.interp.domain_at([Var(n) for n in names])
        body = self.formula(f.body)
        if isinstance(f, Exists):
            return exists_block(names, And((guard, body)))
        return forall_block(names, Implies(guard, body))


def translate(phi: Formula, interp: Interpretation,
              env: Mapping[str, int] | None = None) -> TranslationResult:
    """Compile ``phi`` about the source into ``psi`` about the target.

    Source variable ``x`` becomes the block ``x_1..x_n``; products and
    inverses are flattened into existential blocks ``v0_*, v1_*, ...`` bound
    by the product formula, innermost-leftmost first; quantifiers are
    relativised to the domain formula; parameters and literals become the
    literal blocks of their coordinates.
    """
    avoid = {n.split("_")[0] for n in all_var_names(phi)} | all_var_names(phi)
    tr = _Translator(interp, env or {}, avoid)
    psi = tr.formula(phi)
    src = tuple(free_vars_ordered(phi))
    tgt = tuple(n for v in src for n in tr.block(v))
    return TranslationResult(phi, psi, interp, src, tgt)


def check_translation(tr: TranslationResult, env: Mapping[str, int] | None = None,
                      budget: int | None = None):
    """Exhaustively compare source |= phi(a) with target |= psi(beta(a)).

    Returns (ok, counterexample, truths) with truths a list of (source, target) pairs.  Raises ComplexityCap when the
    relativised enumeration estimate exceeds ``budget``.
    """
    from .folog.engine import default_budget
    limit = default_budget() if budget is None else budget
    est = tr.estimate()
    if est > limit:
        raise ComplexityCap(f"estimated {est} enumerations exceeds budget {limit}", estimate=est)
    src = tr.interp.source
    left_check = formula_checker(src, tr.phi, tr.source_vars, env=env, budget=budget)
    right_check = formula_checker(tr.interp.target, tr.psi, tr.target_vars, budget=budget)
    truths = []
    for vals in itertools.product(list(src.elements), repeat=tr.r):
        left = left_check(vals)
        right = right_check(tr.beta(vals))
        truths.append((left, right))
        if left != right:
            return False, list(vals), truths
    return True, None, truths


# -- composed self-maps and condition (a) ------------------------------------

def h_side_map_formula(codec: GammaCodec, hvar: str = "h", prefix: str = "z") -> tuple[Formula, tuple[str, ...]]:
    """Formula over H for h -> encode(h): coset-1 patterns with h in the open slot."""
    zs = _block_names(prefix, codec.width)
    s = codec.slot((0, 0))
    h = Var(hvar)
    f = Or((
        And((neq(h, ONE), pattern_formula(codec, (0, 0), zs), Eq(Var(zs[s]), h))),
        And((Eq(h, ONE), pattern_formula(codec, (0, 1), zs))),
    ))
    return f, (hvar,) + zs


def g_side_map_formula(ext: ExtensionData, codec: GammaCodec, kappa: Formula,
                       gvar: str = "g", prefix: str = "z") -> tuple[Formula, tuple[str, ...]]:
    """Formula over G for g -> encode(g), using the coset test kappa(g t_i^-1) & g != t_i."""
    kfv = free_vars_ordered(kappa)[0]
    zs = _block_names(prefix, codec.width)
    g = Var(gvar)
    cases = []
    for i, t in enumerate(ext.transversal):
        ti = _lit(t)
        h = g if t == 0 else Mul(g, Inv(ti))
        s = codec.slot((i, 0))
        cases.append(And((substitute(kappa, {kfv: h}), neq(g, ti),
                          pattern_formula(codec, (i, 0), zs), Eq(Var(zs[s]), h))))
        cases.append(And((Eq(g, ti), pattern_formula(codec, (i, 1), zs))))
    return disj(cases), (gvar,) + zs


def condition_a_from_b(interp: Interpretation, t: int, ext: ExtensionData,
                       codec: GammaCodec | None = None, budget: int | None = None) -> Formula:
    """Formula chi(x, y) over H defining a -> t^-1 a t, obtained through translation.

    Translates ``x * #t = #t * y`` along the G-in-H interpretation and pulls the
    result back along h -> encode(h).
    """
    if codec is None:
        codec = _codec_from_interp(interp, ext)
    phi = Eq(Mul(Var("a"), Const(t)), Mul(Const(t), Var("b")))
    tr = translate(phi, interp)
    n = interp.dim
    xa = [f"a_{j + 1}" for j in range(n)]
    xb = [f"b_{j + 1}" for j in range(n)]
    iota, ivars = h_side_map_formula(codec)
    ia = substitute(iota, dict(zip(ivars, [Var("x")] + [Var(v) for v in xa])))
    ib = substitute(iota, dict(zip(ivars, [Var("y")] + [Var(v) for v in xb])))
    chi = exists_block(xa + xb, conj([ia, ib, tr.psi]))
    H = ext.H
    got = definable_set(H, chi, ["x", "y"], budget=budget)
    tab, inv = ext.G.table, ext.G.inverse
    want = {(a, tab[tab[inv[t]][a]][t]) for a in H.members}
    if got != want:
        bad = min(got ^ want)
        raise GraphMismatch(f"chi {'admits' if bad in got else 'misses'} {list(bad)}", list(bad))
    return chi


def _codec_from_interp(interp: Interpretation, ext: ExtensionData) -> GammaCodec:
    mode = "star" if interp.dim == 3 and ext.m == 2 else "standard"
    return build_codec(ext, mode=mode)


# -- end-to-end --------------------------------------------------------------

FIXED_SENTENCES = (
    "forall x. forall y. x*y = y*x",
    "exists x. !(x = 1)",
    "forall x. x*x*x = 1",
    "exists x. x*x = 1 & !(x = 1)",
)


def verify_biinterpretation(G: GroupTable, kappa: Formula, env: Mapping[str, int] | None = None,
                            instance: str = "", mode: str = "auto", H: Subgroup | None = None,
                            suite_size: int = 0, seed: int = 0, budget: int | None = None,
                            mult_check: str = "auto",
                            tamper: Callable[[ExtensionData], ExtensionData] | None = None,
                            ) -> VerificationReport:
    """Run the six checks of the bi-interpretation for (G, kappa).

    Failures become report entries; later steps that depend on a failed one are
    recorded as not run.  ``tamper`` lets tests corrupt the extension data.
    """
    rep = VerificationReport(instance, success_verdict="bi-interpretable",
                             failure_verdict="not verified")
    env = dict(env or {})
    try:
        kappa_c = substitute_params(kappa, env)
        fv = free_vars_ordered(kappa_c)
        if len(fv) != 1:
            raise ValueError(f"kappa must have exactly one free variable, has {fv}")
        members = sorted(t[0] for t in definable_set(G, kappa_c, fv, budget=budget))
        if H is None:
            H = make_subgroup(G, members)
        ext = extension_data(G, H)
        interp_h = interpret_H_in_G(G, H, kappa_c, verify=False)
    except (BiinterpError, ValueError) as exc:
        rep.add("instance", False, detail=f"{type(exc).__name__}: {exc}")
        return rep
    if tamper is not None:
        ext = tamper(ext)

    ext_rep = verify_extension_identities(ext)
    bad = ext_rep.first_failure()
    rep.add("extension_identities", ext_rep.passed,
            counterexample=None if bad is None else {"identity": bad.name, "at": bad.counterexample},
            detail=f"m={ext.m}, |H|={H.order}")

    # step 2
    codec = None
    try:
        codec = build_codec(ext, mode=mode, strict=False)
        step2_bad = None
        if codec.collisions:
            g1, g2, c = codec.collisions[0]
            step2_bad = {"collision": [g1, g2], "tuple": list(c)}
        else:
            tab = G.table
            for a in range(G.order):
                for b in range(G.order):
                    ea, eb = codec.codes[a], codec.codes[b]
                    want = codec.codes[tab[a][b]]
                    if gamma_op(codec, ea, eb) != want or gamma_op_generic(codec, ea, eb) != want:
                        step2_bad = {"pair": [a, b]}
                        break
                if step2_bad:
                    break
        rep.add("gamma_isomorphism", step2_bad is None, counterexample=step2_bad,
                detail=f"mode={codec.mode}, width={codec.width}, xi={codec.xi}")
    except BiinterpError as exc:
        rep.add("gamma_isomorphism", False, detail=f"{type(exc).__name__}: {exc}")
        codec = None

    if codec is None or not rep.passed:
        for name in ("interpretation_exactness", "h_composed_map", "g_composed_map",
                     "condition_a_from_b"):
            rep.add(name, False, detail="not run: an earlier step failed")
        return rep

    # step 3
    interp_g = None
    if mult_check == "auto":
        mult_check = "exhaustive"
    try:
        check_exactness(interp_h, budget=budget)
        interp_g = interpret_G_in_H(ext, codec, mult_check=mult_check, budget=budget)
        rep.add("interpretation_exactness", True,
                witness_formula=[to_str(interp_h.domain_formula), to_str(interp_g.domain_formula),
                                 to_str(interp_g.mult_formula)],
                detail=f"dim={interp_g.dim}, product check={mult_check}")
    except (FormulaExactnessFailure, ComplexityCap) as exc:
        rep.add("interpretation_exactness", False,
                counterexample=getattr(exc, "counterexample", None), detail=str(exc))

    # step 4
    f, names = h_side_map_formula(codec)
    want = {(h,) + codec.codes[h] for h in H.members}
    explicit = {(h,) + _explicit_h_tuple(codec, h) for h in H.members}
    got = definable_set(H, f, names, budget=budget)
    bad = min(got ^ want, default=None) or min(want ^ explicit, default=None)
    rep.add("h_composed_map", bad is None, witness_formula=to_str(f),
            counterexample=None if bad is None else list(bad))

    # step 5
    f, names = g_side_map_formula(ext, codec, kappa_c)
    want = {(g,) + codec.codes[g] for g in range(G.order)}
    got = definable_set(G, f, names, budget=budget)
    bad = min(got ^ want, default=None)
    rep.add("g_composed_map", bad is None, witness_formula=to_str(f),
            counterexample=None if bad is None else list(bad))

    # step 6
    if interp_g is None:
        rep.add("condition_a_from_b", False, detail="not run: no exact interpretation")
    else:
        witnesses = []
        failure = None
        for t in ext.transversal:
            try:
                witnesses.append(to_str(condition_a_from_b(interp_g, t, ext, codec, budget=budget)))
            except (GraphMismatch, ComplexityCap) as exc:
                failure = {"t": t, "detail": str(exc)}
                break
        rep.add("condition_a_from_b", failure is None, witness_formula=witnesses,
                counterexample=failure, detail=f"transversal={list(ext.transversal)}")

    if suite_size and interp_g is not None:
        mism, skipped, total = run_translation_suite(interp_g, seed, suite_size, budget=budget)
        rep.add("translation_suite", not mism, counterexample=mism[0] if mism else None,
                detail=f"{total} sentences, {skipped} skipped over budget")
    return rep


def _explicit_h_tuple(codec: GammaCodec, h: int) -> tuple[int, ...]:
    """Image of h in H under H -> G -> Gamma as written out explicitly."""
    if codec.mode == "star":
        return (h, 0, 0) if h != 0 else (0, codec.xi, codec.xi)
    w = codec.width
    return (h,) + (0,) * (w - 1) if h != 0 else (0,) + (codec.xi,) * (w - 1)


def suite_sentences(seed: int, count: int) -> list[Formula]:
    from .folog.parser import parse_formula
    return [parse_formula(s) for s in FIXED_SENTENCES] + random_sentences(seed, count)


def run_translation_suite(interp: Interpretation, seed: int, count: int,
                          budget: int | None = None):
    """Returns (mismatches, skipped, total) over the fixed and random sentences."""
    mism = []
    skipped = 0
    sentences = suite_sentences(seed, count)
    for phi in sentences:
        tr = translate(phi, interp)
        try:
            ok, _, _ = check_translation(tr, budget=budget)
        except ComplexityCap:
            skipped += 1
            continue
        if not ok:
            mism.append(to_str(phi))
    return mism, skipped, len(sentences)
