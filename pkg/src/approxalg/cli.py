"""Command-line front end.

Subcommands: axioms, spec, vset, dset, is-prime, product, quotient,
topology, localize, radical, modules, nullstellensatz, scenario.  Output is
a structured report (``--format json`` or the default human table).  Exit
status: 0 success, 1 a checked verdict failed, 2 usage or precondition
error, 3 a resource guard tripped.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from .closures import (
    DEFAULT_SEED,
    check_axioms,
    closure_eval,
    closure_member,
)
from .errors import (
    ApproxAlgError,
    PreconditionError,
    ResourceLimitError,
)
from .grammar import parse_closure, parse_element, parse_generators, parse_ring
from .ideals import ApproxIdeal, approx_product, is_approx_prime, quotient_ring
from .localization import (
    check_ext_contr_bijection,
    check_iota_functorial,
    check_rad_eq_nil,
    check_rep_independence,
    check_transfer_axioms,
    localize,
    mult_set,
    radical,
)
from .modules import (
    GeneratedSubmoduleClosure,
    ModuleSetShiftClosure,
    SubmoduleShiftClosure,
    check_cm_axioms,
    finite_module,
    iso_first,
    iso_second,
    iso_third,
    module_quotient,
    scaling_hom,
)
from .nullstellensatz import (
    all_function_ring_ideals,
    check_ans,
    check_esep,
    check_pp,
    variety,
)
from .reports import Report, Verdict
from .rings import (
    PrincipalSubgroup,
    Z,
    ideal_generated,
    subgroup_generated,
)
from .spectrum import d_set, format_prime, spectrum, topology_check, v_set


def build_parser():
    parser = argparse.ArgumentParser(
        prog="approxalg",
        description="approximate commutative algebra workbench")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, closure=True):
        p.add_argument("--ring", required=True, help="ring spec")
        if closure:
            p.add_argument("--closure", required=True, help="closure spec")
        p.add_argument("--format", choices=["json", "table"], default="table")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--bound", type=int, default=None,
                       help="bound for integer enumerations")
        p.add_argument("--guard", type=int, default=64,
                       help="subgroup enumeration guard")
        p.add_argument("--mode",
                       choices=["auto", "exhaustive", "subgroups", "ideals",
                                "sampled"],
                       default="auto")

    p = sub.add_parser("axioms", help="closure axiom suite")
    common(p)

    p = sub.add_parser("spec", help="enumerate the approximate primes")
    common(p)

    p = sub.add_parser("vset", help="closed set V(I)")
    common(p)
    p.add_argument("--ideal", required=True)

    p = sub.add_parser("dset", help="basic open D(f)")
    common(p)
    p.add_argument("--ideal", required=True, help="the element f")

    p = sub.add_parser("is-prime", help="approximate primality of an ideal")
    common(p)
    p.add_argument("--ideal", required=True)

    p = sub.add_parser("product", help="approximate product of two ideals")
    common(p)
    p.add_argument("--ideal", action="append", required=True,
                   help="give twice: the two factors")

    p = sub.add_parser("quotient", help="quotient ring by an ideal")
    common(p)
    p.add_argument("--ideal", required=True)

    p = sub.add_parser("topology", help="Zariski topology checks")
    common(p)

    p = sub.add_parser("localize", help="localize at a multiplicative set")
    common(p)
    p.add_argument("--mult-set", required=True)

    p = sub.add_parser("radical", help="approximate radical of an ideal")
    common(p)
    p.add_argument("--ideal", required=True)

    p = sub.add_parser("modules", help="module checks from a JSON document")
    p.add_argument("--file", help="path to a JSON module/closure/check spec")
    p.add_argument("--spec", help="the same JSON document given inline")
    p.add_argument("--format", choices=["json", "table"], default="table")

    p = sub.add_parser("nullstellensatz",
                       help="ESEP, PP, and the radical identity")
    common(p)
    p.add_argument("--ideal", default=None)

    p = sub.add_parser("scenario", help="run a scenario suite")
    p.add_argument("path", help="path to a JSON suite, or 'paper-examples'")
    p.add_argument("--format", choices=["json", "table"], default="table")
    return parser


def _ideal_from(ring, cl, text):
    gens = parse_generators(ring, text)
    return ApproxIdeal(subgroup_generated(ring, gens), cl, check=False)


def cmd_axioms(args, report):
    ring = parse_ring(args.ring)
    cl = parse_closure(ring, args.closure)
    kwargs = {}
    if args.bound is not None:
        kwargs["gen_bound"] = args.bound
    rep = check_axioms(cl, mode=args.mode, seed=args.seed,
                       guard=args.guard, **kwargs)
    for name in rep.AXIOMS:
        if name in rep.verdicts:
            report.add_verdict(rep.verdicts[name])
    report.add_extra("mode", rep.mode)
    if rep.domain:
        report.add_extra("domain", rep.domain)


def cmd_spec(args, report):
    ring = parse_ring(args.ring)
    cl = parse_closure(ring, args.closure)
    sp = spectrum(ring, cl, guard=args.guard, z_bound=args.bound)
    report.add_extra("primes", sp.labels())
    report.add_extra("method", sp.method)


def cmd_vset(args, report):
    ring = parse_ring(args.ring)
    cl = parse_closure(ring, args.closure)
    sp = spectrum(ring, cl, guard=args.guard, z_bound=args.bound)
    gens = parse_generators(ring, args.ideal)
    closed = v_set(sp, ideal_generated(ring, gens))
    report.add_extra("vset", closed.labels(ring))


def cmd_dset(args, report):
    ring = parse_ring(args.ring)
    cl = parse_closure(ring, args.closure)
    sp = spectrum(ring, cl, guard=args.guard, z_bound=args.bound)
    f = parse_element(ring, args.ideal)
    opens = d_set(sp, f)
    report.add_extra("dset", [format_prime(ring, p) for p in opens])


def cmd_is_prime(args, report):
    ring = parse_ring(args.ring)
    cl = parse_closure(ring, args.closure)
    gens = parse_generators(ring, args.ideal)
    sub = subgroup_generated(ring, gens)
    verdict, ce = is_approx_prime(sub, cl)
    report.add_extra("prime", verdict)
    if ce is not None:
        report.add_extra("counterexample", ce)


def cmd_product(args, report):
    if len(args.ideal) != 2:
        raise PreconditionError("product needs exactly two --ideal arguments")
    ring = parse_ring(args.ring)
    cl = parse_closure(ring, args.closure)
    a = _ideal_from(ring, cl, args.ideal[0])
    b = _ideal_from(ring, cl, args.ideal[1])
    prod = approx_product(a, b)
    if isinstance(prod.canonical, PrincipalSubgroup):
        report.add_extra("product", f"({prod.canonical.d})")
    else:
        report.add_extra("product", format_prime(ring, prod.canonical))


def cmd_quotient(args, report):
    ring = parse_ring(args.ring)
    cl = parse_closure(ring, args.closure)
    ideal = _ideal_from(ring, cl, args.ideal)
    q = quotient_ring(ring, ideal)
    n = q.class_count()
    report.add_extra("classes", "infinite" if n is None else n)
    for v in q.verdicts:
        report.add_verdict(v)


def cmd_topology(args, report):
    ring = parse_ring(args.ring)
    cl = parse_closure(ring, args.closure)
    sp = spectrum(ring, cl, guard=args.guard, z_bound=args.bound)
    report.add_extra("primes", sp.labels())
    for v in topology_check(sp, z_ideal_bound=args.bound or 120):
        report.add_verdict(v)


def cmd_localize(args, report):
    ring = parse_ring(args.ring)
    cl = parse_closure(ring, args.closure)
    gens = parse_generators(ring, getattr(args, "mult_set"))
    loc = localize(ring, cl, mult_set(ring, gens))
    report.add_extra("classes", loc.class_count())
    for v in loc.verdicts:
        report.add_verdict(v)
    report.add_verdict(check_rep_independence(loc))
    for v in check_iota_functorial(loc):
        report.add_verdict(v)
    bij, matched = check_ext_contr_bijection(loc, z_bound=args.bound)
    report.add_verdict(bij)
    report.add_extra("matched-pairs", [
        f"{format_prime(ring, p)} <-> {format_prime(loc.model, e)}"
        for p, e in matched])
    rep = check_transfer_axioms(loc, mode=args.mode)
    for name in rep.AXIOMS:
        if name in rep.verdicts:
            v = rep.verdicts[name]
            report.add_verdict(Verdict(f"transfer-{name}", v.passed,
                                       v.counterexample, mode=rep.mode))


def cmd_radical(args, report):
    ring = parse_ring(args.ring)
    cl = parse_closure(ring, args.closure)
    ideal = _ideal_from(ring, cl, args.ideal)
    rad = radical(ring, cl, ideal)
    if isinstance(rad.canonical, PrincipalSubgroup):
        report.add_extra("radical", f"({rad.canonical.d})")
    else:
        report.add_extra("radical", format_prime(ring, rad.canonical))
    report.add_verdict(check_rad_eq_nil(ring, cl, z_bound=args.bound))


def _module_closure(mod, spec):
    name = spec.get("name", "gen")
    shift = [tuple(v) for v in spec.get("shift", [])]
    if name == "gen":
        return GeneratedSubmoduleClosure(mod)
    if name == "shift":
        return SubmoduleShiftClosure(mod, shift)
    if name == "setshift":
        return ModuleSetShiftClosure(mod, shift)
    raise PreconditionError(f"unknown module closure {name!r}")


def cmd_modules(args, report):
    if bool(args.file) == bool(args.spec):
        raise PreconditionError("give exactly one of --file or --spec")
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            doc = json.load(fh)
    else:
        doc = json.loads(args.spec)
    scal_text = doc["module"]["scalars"]
    scalars = Z if scal_text == "Z" else parse_ring(scal_text)
    mod = finite_module(scalars, doc["module"]["orders"])
    cl = _module_closure(mod, doc.get("closure", {}))
    check = doc.get("check", "cm-axioms")
    report.add_extra("module", mod.spec_string())
    report.add_extra("check", check)
    if check == "cm-axioms":
        rep = check_cm_axioms(mod, cl, mode=doc.get("mode", "auto"))
        for name in rep.AXIOMS:
            if name in rep.verdicts:
                report.add_verdict(rep.verdicts[name])
    elif check == "quotient":
        n_gens = [tuple(v) for v in doc["N"]]
        q = module_quotient(mod, mod.subgroup_closure(n_gens), cl)
        report.add_extra("classes", q.class_count())
        for v in q.verdicts:
            report.add_verdict(v)
    elif check in ("iso1", "iso2", "iso3"):
        if check == "iso1":
            hom = doc.get("hom", {})
            if "scale" not in hom:
                raise PreconditionError("iso1 needs a scaling hom")
            f = scaling_hom(mod, cl, hom["scale"])
            res = iso_first(f)
        else:
            n_gens = [tuple(v) for v in doc["N"]]
            k_gens = [tuple(v) for v in doc["K"]]
            fn = iso_second if check == "iso2" else iso_third
            res = fn(mod, cl, n_gens, k_gens)
        report.add_extra("left-size", res.left_size)
        report.add_extra("right-size", res.right_size)
        for v in res.verdicts:
            report.add_verdict(v)
        report.add_verdict(Verdict("class-counts-equal",
                                   res.left_size == res.right_size))
    else:
        raise PreconditionError(f"unknown module check {check!r}")


def cmd_nullstellensatz(args, report):
    ring = parse_ring(args.ring)
    cl = parse_closure(ring, args.closure)
    ideals = all_function_ring_ideals(ring)
    report.add_extra("ideal-count", len(ideals))
    if args.ideal:
        gens = parse_generators(ring, args.ideal)
        ideal = ideal_generated(ring, gens)
        v = variety(ring, ideal)
        report.add_extra("variety", [str(p) for p in v.sorted_points()])
    report.add_verdict(check_esep(cl, ideals))
    report.add_verdict(check_pp(cl))
    report.add_verdict(check_ans(cl, ideals))


# ---------------------------------------------------------------------------
# scenarios


def _run_scenario(sc):
    """One scenario: returns (ok, got) comparing to the expected outcome."""
    ring = parse_ring(sc["ring"])
    op = sc["operation"]
    params = sc.get("params", {})
    cl = parse_closure(ring, sc["closure"]) if "closure" in sc else None
    if op == "member":
        x = parse_element(ring, params["element"])
        gens = parse_generators(ring, params["generators"])
        got = closure_member(cl, x, gens)
    elif op == "elem-add":
        a = parse_element(ring, params["a"])
        b = parse_element(ring, params["b"])
        got = ring.format_element(ring.add(a, b))
    elif op == "elem-sub":
        a = parse_element(ring, params["a"])
        b = parse_element(ring, params["b"])
        got = ring.format_element(ring.sub(a, b))
    elif op == "is-prime":
        gens = parse_generators(ring, params["generators"])
        got, _ = is_approx_prime(subgroup_generated(ring, gens), cl)
    elif op == "spec":
        got = spectrum(ring, cl).labels()
    elif op == "vset":
        sp = spectrum(ring, cl)
        gens = parse_generators(ring, params["ideal"])
        got = v_set(sp, ideal_generated(ring, gens)).labels(ring)
    elif op == "radical":
        gens = parse_generators(ring, params["generators"])
        ideal = ApproxIdeal(subgroup_generated(ring, gens), cl, check=False)
        rad = radical(ring, cl, ideal)
        if isinstance(rad.canonical, PrincipalSubgroup):
            got = f"({rad.canonical.d})"
        else:
            got = format_prime(ring, rad.canonical)
    elif op == "closure-eval":
        gens = parse_generators(ring, params["generators"])
        out = closure_eval(cl, gens)
        if isinstance(out.canonical, PrincipalSubgroup):
            got = f"({out.canonical.d})"
        else:
            got = format_prime(ring, out.canonical)
    else:
        raise PreconditionError(f"unknown scenario operation {op!r}")
    expected = sc.get("expected")
    ok = expected is None or got == expected
    return ok, got


def cmd_scenario(args, report):
    if args.path == "paper-examples":
        text = resources.files("approxalg.data").joinpath(
            "paper_examples.json").read_text(encoding="utf-8")
    else:
        with open(args.path, encoding="utf-8") as fh:
            text = fh.read()
    suite = json.loads(text)
    errors = 0
    for sc in suite:
        name = sc.get("name", "?")
        try:
            ok, got = _run_scenario(sc)
        except ApproxAlgError as exc:
            errors += 1
            report.add_verdict(Verdict(name, False,
                                       {"error": str(exc)}))
            continue
        ce = None if ok else {"expected": sc.get("expected"), "got": got}
        report.add_verdict(Verdict(name, ok, ce))
    report.add_extra("scenario-count", len(suite))
    if errors:
        report.add_extra("errors", errors)
        raise PreconditionError(f"{errors} scenario(s) failed to run")


HANDLERS = {
    "axioms": cmd_axioms,
    "spec": cmd_spec,
    "vset": cmd_vset,
    "dset": cmd_dset,
    "is-prime": cmd_is_prime,
    "product": cmd_product,
    "quotient": cmd_quotient,
    "topology": cmd_topology,
    "localize": cmd_localize,
    "radical": cmd_radical,
    "modules": cmd_modules,
    "nullstellensatz": cmd_nullstellensatz,
    "scenario": cmd_scenario,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    report = Report(command=args.command)
    try:
        HANDLERS[args.command](args, report)
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3
    except ApproxAlgError as exc:
        _emit(report, args)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(report, args)
    return 0 if report.ok() else 1


def _emit(report, args):
    if getattr(args, "format", "table") == "json":
        sys.stdout.write(report.to_json())
    else:
        sys.stdout.write(report.to_table())


if __name__ == "__main__":
    sys.exit(main())