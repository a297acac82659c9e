"""Command-line front end: load JSON fixtures, run constructions and
verifications, emit deterministic reports.

Exit codes: 0 pass/success, 1 verification failure (witness in the report),
2 input error.  All randomness is seeded and the seed is printed in the
report header.  `--json` switches to machine-readable output.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io_json
from .complexes import TruncationTooLow, homology, verify_differential
from .rings import Ring
from .simplicial import DEFAULT_SEED


class InputError(Exception):
    pass


def _load_json(path: str) -> dict:
    try:
        return io_json.load(path)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}")


def _emit(report: dict, args) -> None:
    if args.json:
        text = json.dumps(report, indent=2, ensure_ascii=False, sort_keys=True)
    else:
        lines = [f"htwist {report['command']} (through={report['truncation']}, seed={report['seed']})"]
        for key, val in report["results"].items():
            lines.append(f"  {key}: {val}")
        for w in report.get("witnesses", []):
            lines.append(f"  witness: {w}")
        text = "\n".join(lines)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _report(command: str, args, results: dict, witnesses=None, payload=None) -> dict:
    rep = {
        "command": command,
        "inputs": [getattr(args, "input", None)],
        "truncation": args.through,
        "seed": args.seed,
        "results": results,
        "witnesses": witnesses or [],
    }
    if payload is not None:
        rep["payload"] = payload
    return rep


def _simplicial_from_spec(data: dict, N: int):
    from .simplicial import (
        ComplexSimplicialSet,
        boundary_delta2,
        cyclic_constant_group,
        minimal_circle,
        point_space,
    )

    kind = data.get("kind")
    if kind == "S1min":
        return minimal_circle(N)
    if kind == "point":
        return point_space(N)
    if kind == "boundary-delta2":
        return boundary_delta2(N)
    if kind == "constant-cyclic":
        return cyclic_constant_group(int(data["order"]), N)
    if kind == "complex":
        return ComplexSimplicialSet(N, [tuple(s) for s in data["simplices"]],
                                    name=data.get("name", "complex"))
    raise InputError(f"unknown simplicial kind {kind!r}")


def cmd_homology(args):
    X = io_json.complex_from_dict(_load_json(args.input))
    ok, wit = verify_differential(X)
    if not ok:
        return _report("homology", args, {"d-squared-zero": False}, [wit]), 1
    H = homology(X, min(args.through, X.truncation - 1))
    return _report("homology", args, {"homology": io_json.homology_to_dict(H)}), 0


def cmd_bar(args):
    from .barcobar import bar
    from .hopf import verify_algebra

    A = io_json.algebra_from_dict(_load_json(args.input))
    oka, wa = verify_algebra(A)
    if not oka:
        return _report("bar", args, {"input-algebra": False}, wa[:3]), 1
    B = bar(A, args.through)
    okd, wd = verify_differential(B.complex)
    rep = _report("bar", args, {"d-squared-zero": okd},
                  [wd] if wd else [], payload=io_json.coalgebra_to_dict(B))
    return rep, 0 if okd else 1


def cmd_cobar(args):
    from .barcobar import cobar
    from .hopf import verify_coalgebra

    C = io_json.coalgebra_from_dict(_load_json(args.input))
    okc, wc = verify_coalgebra(C)
    if not okc:
        return _report("cobar", args, {"input-coalgebra": False}, wc[:3]), 1
    O = cobar(C, args.through)
    okd, wd = verify_differential(O.complex)
    rep = _report("cobar", args, {"d-squared-zero": okd},
                  [wd] if wd else [], payload=io_json.algebra_to_dict(O, args.through))
    return rep, 0 if okd else 1


def cmd_check_twisting(args):
    from .twisting import TwistingCochain, verify_twisting_cochain

    data = _load_json(args.input)
    C = io_json.coalgebra_from_dict(data["source"])
    A = io_json.algebra_from_dict(data["target"])
    t = TwistingCochain(C, A)
    for entry in data["cochain"]["values"]:
        n, c = entry["from"]
        combo = {a: io_json._coeff_parse(A.ring, v) for a, v in entry["to"]}
        t.set_value(int(n), c, combo)
    ok, wit = verify_twisting_cochain(t, args.through)
    return _report("check-twisting", args, {"maurer-cartan": ok}, wit[:3]), 0 if ok else 1


def cmd_borel(args):
    from .barcobar import bar
    from .bundles import borel_quotient
    from .complexes import ChainMap

    data = _load_json(args.input)
    A = io_json.algebra_from_dict(data["source"])
    A2 = io_json.algebra_from_dict(data["target"])
    f = ChainMap(A.complex, A2.complex)
    for e in data["map"]:
        f.set_entry(int(e["degree"]), e["from"], e["to"],
                    io_json._coeff_parse(A.ring, e["coeff"]))
    q = borel_quotient(f, A, A2, args.through)
    okd, wd = verify_differential(q.bundle.total)
    H = homology(q.bundle.total, args.through - 1)
    rep = _report("borel", args,
                  {"d-squared-zero": okd, "homology": io_json.homology_to_dict(H)},
                  [wd] if wd else [])
    return rep, 0 if okd else 1


def cmd_np(args):
    from .bundles import nomura_puppe
    from .complexes import ChainMap

    data = _load_json(args.input)
    A = io_json.algebra_from_dict(data["source"])
    A2 = io_json.algebra_from_dict(data["target"])
    f = ChainMap(A.complex, A2.complex)
    for e in data["map"]:
        f.set_entry(int(e["degree"]), e["from"], e["to"],
                    io_json._coeff_parse(A.ring, e["coeff"]))
    np_ = nomura_puppe(f, A, A2, args.through)
    ok, rep = np_.verify(args.through - 1)
    return _report("np", args, {"nomura-puppe": rep}), 0 if ok else 1


def cmd_check_axioms(args):
    from .bundles import check_thc_axioms
    from .fixtures import (
        acyclic_extension_inclusion,
        coacyclic_collapse,
        exterior,
        sphere_coalgebra,
        truncated_polynomial,
        dual_truncated_polynomial,
    )
    from .rings import QQ

    N = args.through
    A1 = exterior(QQ, N + 1)
    A2 = truncated_polynomial(QQ, N + 1)
    C1 = sphere_coalgebra(QQ, N + 1, 2)
    C2 = dual_truncated_polynomial(QQ, N + 1)
    f1, AE1 = acyclic_extension_inclusion(A1, N + 1)
    g1, CF1 = coacyclic_collapse(C1, N + 1)
    fixtures = {
        "algebras": [A1, A2],
        "coalgebras": [C1, C2],
        "algebra_quasi_isos": [(f1, A1, AE1)],
        "coalgebra_quasi_isos": [(g1, CF1, C1)],
    }
    ok, rep = check_thc_axioms(fixtures, N)
    flat = {k: v for k, v in rep.items()}
    return _report("check-axioms", args, {"ok": ok, "detail": _stringify(flat)}), 0 if ok else 1


def _stringify(obj):
    if isinstance(obj, dict):
        return {str(k): _stringify(v) for k, v in obj.items()}
    return obj if isinstance(obj, (bool, int, str)) else str(obj)


def cmd_check_normal_pair(args):
    from .complexes import ChainMap
    from .fixtures import exterior, exterior_pair, truncated_polynomial
    from .normality import (
        abelian_normality,
        chcx_identity_certificate,
        chcx_unit_certificate,
        verify_normal_pair,
    )
    from .rings import QQ

    data = _load_json(args.input)
    builder = data.get("builder")
    N = args.through + 1
    if builder == "abelian-identity-exterior":
        A = exterior(QQ, N + 2)
        cert = abelian_normality(ChainMap.identity(A.complex), A, A, N)
    elif builder == "abelian-identity-poly":
        A = truncated_polynomial(QQ, N + 2)
        cert = abelian_normality(ChainMap.identity(A.complex), A, A, N)
    elif builder == "chcx-unit":
        cert = chcx_unit_certificate(exterior(QQ, N + 2), N)
    elif builder == "chcx-identity":
        cert = chcx_identity_certificate(exterior(QQ, N + 2), N)
    else:
        raise InputError(f"unknown certificate builder {builder!r}")
    ok, reports = verify_normal_pair(cert, args.through)
    results = {
        "pair": f"({cert.f_label}, {cert.g_label})",
        "verified": ok,
        "arrows": {k: v["ok"] for k, v in reports.items()},
        "notes": cert.notes,
    }
    witnesses = [
        {k: _stringify({kk: vv for kk, vv in v["detail"].items() if vv is not True})}
        for k, v in reports.items() if not v["ok"]
    ]
    return _report("check-normal-pair", args, results, witnesses), 0 if ok else 1


def cmd_loopgroup(args):
    from .simplicial import kan_loop_group, loop_group_pi0, universal_twisting_function, verify_twisting_function

    X = _simplicial_from_spec(_load_json(args.input), args.through + 2)
    G = kan_loop_group(X, args.through + 1)
    tau = universal_twisting_function(G)
    ok, wit = verify_twisting_function(tau, args.through, samples=args.samples, seed=args.seed)
    rank, torsion = loop_group_pi0(G)
    results = {
        "generators-level-0": len(G.generators(0)),
        "pi0": {"rank": rank, "torsion": torsion},
        "universal-twisting-function": ok,
    }
    return _report("loopgroup", args, results, [wit] if wit else []), 0 if ok else 1


def cmd_wbar(args):
    from .simplicial import (
        classifying_space,
        couniversal_twisting_function,
        verify_simplicial_identities,
        verify_twisting_function,
    )

    G = _simplicial_from_spec(_load_json(args.input), args.through + 1)
    W = classifying_space(G, args.through)
    ok1, w1 = verify_simplicial_identities(W, args.through, samples=args.samples, seed=args.seed)
    nu = couniversal_twisting_function(W)
    ok2, w2 = verify_twisting_function(nu, args.through - 1, samples=args.samples, seed=args.seed)
    results = {
        "levels": {str(n): len(W.elements(n)) if W.elements(n) is not None else "symbolic"
                   for n in range(args.through + 1)},
        "simplicial-identities": ok1,
        "couniversal-twisting-function": ok2,
    }
    ok = ok1 and ok2
    return _report("wbar", args, results, [w for w in (w1, w2) if w]), 0 if ok else 1


def cmd_tcp(args):
    from .simplicial import universal_bundle, verify_simplicial_identities

    G = _simplicial_from_spec(_load_json(args.input), args.through + 2)
    tcp, W, nu = universal_bundle(G, args.through)
    ok, wit = verify_simplicial_identities(tcp, args.through, samples=args.samples, seed=args.seed)
    return _report("tcp", args, {"simplicial-identities": ok}, [wit] if wit else []), 0 if ok else 1


def cmd_chains(args):
    from .chains import normalized_chains

    X = _simplicial_from_spec(_load_json(args.input), args.through)
    ring = Ring.from_tag(args.ring)
    C = normalized_chains(X, ring, args.through)
    okd, wd = verify_differential(C.complex)
    H = homology(C.complex, args.through - 1)
    results = {
        "d-squared-zero": okd,
        "one-connected": bool(getattr(C, "one_connected", False)),
        "homology": io_json.homology_to_dict(H),
    }
    return _report("chains", args, results, [wd] if wd else [],
                   payload=io_json.coalgebra_to_dict(C)), 0 if okd else 1


def cmd_wbar_homology(args):
    from .chains import acyclicity_of_universal_bundle, normalized_chains
    from .simplicial import classifying_space

    G = _simplicial_from_spec(_load_json(args.input), args.through + 2)
    ring = Ring.from_tag(args.ring)
    W = classifying_space(G, args.through + 1)
    CW = normalized_chains(W, ring, args.through + 1)
    H = homology(CW.complex, args.through - 1)
    acyc, HU = acyclicity_of_universal_bundle(G, ring, args.through)
    results = {
        "wbar-homology": io_json.homology_to_dict(H),
        "universal-bundle-acyclic": acyc,
        "universal-bundle-homology": io_json.homology_to_dict(HU),
    }
    return _report("wbar-homology", args, results), 0 if acyc else 1


COMMANDS = {
    "homology": (cmd_homology, "homology of a complex JSON through --through"),
    "bar": (cmd_bar, "bar construction of an algebra JSON"),
    "cobar": (cmd_cobar, "cobar construction of a coalgebra JSON"),
    "check-twisting": (cmd_check_twisting, "Maurer-Cartan check of a cochain JSON"),
    "borel": (cmd_borel, "Borel quotient of an algebra map JSON"),
    "np": (cmd_np, "Nomura-Puppe sequence verification"),
    "check-axioms": (cmd_check_axioms, "twisted-homotopical-category conditions on the standing fixtures"),
    "check-normal-pair": (cmd_check_normal_pair, "verify a normal-pair certificate description"),
    "loopgroup": (cmd_loopgroup, "Kan loop group of a reduced simplicial set"),
    "wbar": (cmd_wbar, "classifying space of a simplicial group"),
    "tcp": (cmd_tcp, "universal twisted cartesian product identities"),
    "chains": (cmd_chains, "normalized chains of a finite simplicial set"),
    "wbar-homology": (cmd_wbar_homology, "homology of the classifying space and universal bundle"),
}


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="htwist", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (fn, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        if name not in ("check-axioms",):
            p.add_argument("input", help="input JSON file")
        p.add_argument("--through", type=int, default=6, help="truncation degree (default 6)")
        p.add_argument("--ring", default="Z", help="Z | Q | Fp:<p> (default Z)")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="sampler seed")
        p.add_argument("--samples", type=int, default=1000, help="sample count for symbolic levels")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--out", default=None, help="write the report to a file")
        p.set_defaults(fn=fn)
    args = parser.parse_args(argv)
    try:
        report, code = args.fn(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except TruncationTooLow as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    _emit(report, args)
    return code


if __name__ == "__main__":
    sys.exit(main())
