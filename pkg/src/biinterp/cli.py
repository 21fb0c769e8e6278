"""Command-line front end.

    biinterp verify    --group G --kappa K [--param n=id ...] [--mode auto|standard|star] [--out FILE]
    biinterp translate --group G --kappa K PHI
    biinterp axiomatize --group G --tuple 1,2 [--out FILE]
    biinterp check-axiom CERT --group G --tuple 1,2
    biinterp corpus [--seed S] [--suite-size N] [--fault NAME] [--empty] [--out FILE]

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace

from .corpus import CORPUS, InstanceSpec, build_group
from .errors import BiinterpError, ComplexityCap
from .extension import extension_data
from .folog.ast import free_vars_ordered, substitute_params, to_str
from .folog.axioms import (
    AxiomatizationCertificate,
    axiomatize_with_tuple,
    check_axiomatization,
    words_from_sentence,
)
from .folog.engine import default_budget, definable_set
from .folog.parser import parse_formula
from .gamma import build_codec
from .groups import group_from_json, make_subgroup
from .interp import check_translation, interpret_G_in_H, translate, verify_biinterpretation
from .report import VerificationReport

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _params(items) -> dict[str, int]:
    out = {}
    for item in items or []:
        name, sep, value = item.partition("=")
        if not sep or not name or not value.strip().lstrip("-").isdigit():
            raise InputError(f"--param expects name=id, got {item!r}")
        out[name.strip()] = int(value)
    return out


def _tuple(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise InputError(f"--tuple expects comma-separated ids, got {text!r}") from None


def _write(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _load(spec: InstanceSpec):
    try:
        G = build_group(spec.group)
    except (BiinterpError, ValueError, OSError) as exc:
        raise InputError(f"group {spec.group!r}: {exc}") from None
    try:
        kappa = parse_formula(spec.kappa)
    except BiinterpError as exc:
        raise InputError(f"kappa: {exc}") from None
    for name, g in spec.params.items():
        if not 0 <= g < G.order:
            raise InputError(f"parameter @{name} = {g} is not an element of the group")
    return G, kappa


def run_instance(spec: InstanceSpec, seed: int = 0, suite_size: int = 0,
                 budget: int | None = None, fault: bool = False) -> VerificationReport:
    G, kappa = _load(spec)
    tamper = _cocycle_fault if fault else None
    return verify_biinterpretation(G, kappa, spec.params, instance=spec.name, mode=spec.mode,
                                   suite_size=suite_size, seed=seed, budget=budget, tamper=tamper)


def _cocycle_fault(ext):
    """Replace c_{2,2} by a different element of H."""
    i = min(1, ext.m - 1)
    old = ext.c[i][i]
    new = ext.H.members[1] if old == ext.H.members[0] else ext.H.members[0]
    return ext.with_cocycle(i, i, new)


def _spec_from_args(args) -> InstanceSpec:
    if not args.group or not args.kappa:
        raise InputError("--group and --kappa are required")
    return InstanceSpec(args.group, args.group, args.kappa, _params(args.param), args.mode)


def cmd_verify(args) -> int:
    try:
        spec = _spec_from_args(args)
        report = run_instance(spec, seed=args.seed, suite_size=args.suite_size, budget=args.budget)
    except InputError as exc:
        report = VerificationReport(args.group or "", success_verdict="bi-interpretable",
                                    failure_verdict="not verified")
        report.add("input", False, detail=str(exc))
        _write(report.dumps(), args.out)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _write(report.dumps(), args.out)
    if args.out:
        print(f"{spec.name}: {report.verdict}")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_translate(args) -> int:
    try:
        spec = _spec_from_args(args)
        G, kappa = _load(spec)
        phi = parse_formula(args.phi)
        kappa = substitute_params(kappa, spec.params)
        members = [t[0] for t in definable_set(G, kappa, free_vars_ordered(kappa))]
        ext = extension_data(G, make_subgroup(G, members))
        interp = interpret_G_in_H(ext, build_codec(ext, mode=spec.mode), verify=False)
        tr = translate(phi, interp, env=spec.params)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (BiinterpError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(f"psi: {to_str(tr.psi)}")
    print(f"r = {tr.r}, s = {tr.s}")
    try:
        ok, bad, truths = check_translation(tr, env=spec.params, budget=args.budget)
    except ComplexityCap as exc:
        print(f"error: ComplexityCap: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if tr.r == 0:
        left, right = truths[0]
        print(f"source: {str(left).lower()}, target: {str(right).lower()}")
    if ok:
        print(f"equivalence verified on {len(truths)} instantiation(s)")
        return EXIT_OK
    print(f"equivalence FAILS at {bad}")
    return EXIT_FAIL


def _cert_json(cert: AxiomatizationCertificate) -> dict:
    return {
        "sentence": to_str(cert.sentence),
        "tuple_arity": cert.arity,
        "tuple": list(cert.tuple),
        "base": cert.base.to_json() if cert.base is not None else None,
    }


def cmd_axiomatize(args) -> int:
    try:
        G = build_group(args.group)
        cert = axiomatize_with_tuple(G, _tuple(args.tuple))
    except (InputError, BiinterpError, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _write(json.dumps(_cert_json(cert), indent=2), args.out)
    return EXIT_OK


def load_certificate(path: str) -> AxiomatizationCertificate:
    with open(path) as fh:
        data = json.load(fh)
    sentence = parse_formula(data["sentence"])
    arity = int(data["tuple_arity"])
    base = group_from_json(data["base"]) if data.get("base") else None
    tup = tuple(data.get("tuple") or ())
    cert = AxiomatizationCertificate(base, tup, sentence, words_from_sentence(sentence, arity))
    if cert.arity != arity and tup:
        raise InputError("certificate tuple does not match its arity")
    if not tup:
        cert = replace(cert, tuple=tuple(range(arity)), base=None)
    return cert


def cmd_check_axiom(args) -> int:
    try:
        cert = load_certificate(args.cert)
        G = build_group(args.group)
        tup = _tuple(args.tuple)
        if any(not 0 <= x < G.order for x in tup):
            raise InputError("tuple element outside the group")
        holds, iso = check_axiomatization(cert, G, tup)
    except (InputError, BiinterpError, ValueError, OSError, KeyError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(json.dumps({"holds": holds, "isomorphism": iso}))
    return EXIT_OK if holds else EXIT_FAIL


def _corpus_job(job):
    spec, seed, suite, budget, fault = job
    return run_instance(spec, seed=seed, suite_size=suite, budget=budget, fault=fault).to_json()


def cmd_corpus(args) -> int:
    specs = [] if args.empty else list(CORPUS)
    names = {s.name for s in CORPUS}
    if args.fault and args.fault not in names:
        print(f"error: unknown instance {args.fault!r}", file=sys.stderr)
        return EXIT_INPUT
    jobs = [(s, args.seed, args.suite_size, args.budget, s.name == args.fault) for s in specs]
    if args.jobs > 1 and jobs:
        with ProcessPoolExecutor(args.jobs) as pool:
            reports = list(pool.map(_corpus_job, jobs))
    else:
        reports = [_corpus_job(j) for j in jobs]
    reports.sort(key=lambda r: r["instance"])
    doc = {"seed": args.seed, "suite_size": args.suite_size, "instances": reports}
    if args.out:
        _write(json.dumps(doc, indent=2), args.out)
    print(f"{'instance':<22} {'verdict':<18} first failure")
    failed = 0
    for r in reports:
        bad = next((s for s in r["steps"] if not s["pass"]), None)
        failed += bad is not None
        print(f"{r['instance']:<22} {r['verdict']:<18} {bad['name'] if bad else '-'}")
    print(f"{len(reports) - failed}/{len(reports)} instances pass")
    return EXIT_OK if failed == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="biinterp", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def instance_flags(sp, with_suite=True):
        sp.add_argument("--group", help="builder expression or group file")
        sp.add_argument("--kappa", help="formula in one free variable defining H")
        sp.add_argument("--param", action="append", default=[], metavar="NAME=ID")
        sp.add_argument("--mode", choices=["auto", "standard", "star"], default="auto")
        sp.add_argument("--budget", type=int, default=None)
        if with_suite:
            sp.add_argument("--seed", type=int, default=0)
            sp.add_argument("--suite-size", type=int, default=0)
        sp.add_argument("--out")

    sp = sub.add_parser("verify", help="run the bi-interpretation checks")
    instance_flags(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("translate", help="translate a formula about G into one about H")
    instance_flags(sp, with_suite=False)
    sp.add_argument("phi")
    sp.set_defaults(func=cmd_translate)

    sp = sub.add_parser("axiomatize", help="certificate sentence for (group, tuple)")
    sp.add_argument("--group", required=True)
    sp.add_argument("--tuple", required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_axiomatize)

    sp = sub.add_parser("check-axiom", help="check a certificate against (group, tuple)")
    sp.add_argument("cert")
    sp.add_argument("--group", required=True)
    sp.add_argument("--tuple", required=True)
    sp.set_defaults(func=cmd_check_axiom)

    sp = sub.add_parser("corpus", help="verify every bundled instance")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--suite-size", type=int, default=20)
    sp.add_argument("--budget", type=int, default=None)
    sp.add_argument("--fault", metavar="NAME", help="inject a cocycle fault into this instance")
    sp.add_argument("--empty", action="store_true", help="run an empty corpus")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_corpus)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if getattr(args, "budget", None) is None and hasattr(args, "budget"):
        args.budget = default_budget()
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
