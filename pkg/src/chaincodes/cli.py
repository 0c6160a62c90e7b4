"""Command-line front end.

Exit status: 0 on success, 1 on a mathematical negative (not an LCP, no
equivalence witness, a failed verification) when ``--strict`` is given,
2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .code import (
    DEFAULT_ENUM_BUDGET,
    EnumerationBudgetError,
    MixedCode,
    dual,
    enumerate_codewords,
    format_mixed_matrix,
    is_free,
    is_separable,
    is_weakly_free,
    min_distance,
    parity_check_weakly_free,
    standard_generator_matrix,
)
from .codefile import CodeFile, CodeFileError, dump_code_file, load_code_file
from .group import ideal_generated, is_group_code, verify_equivalence_theorem
from .lcp import is_lcp, lcp_search, security_parameter
from .oracle import OracleBudgetError
from .ring import ChainRingSpec
from .verify import run_suite

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


class Outcome:
    """Text and structured renderings of one command's result."""

    def __init__(self, text: str, data: dict, negative: bool = False):
        self.text = text
        self.data = data
        self.negative = negative


def _rows(rows) -> list[list[int]]:
    return [[int(x) for x in row] for row in np.asarray(rows).reshape(len(rows), -1)]


def _inputs(args, count: int) -> list[CodeFile]:
    paths = list(args.input or []) + list(args.paths or [])
    if len(paths) != count:
        raise InputError(f"{args.command_name} expects {count} code file(s), got {len(paths)}")
    out = []
    for path in paths:
        try:
            out.append(load_code_file(path))
        except CodeFileError as exc:
            raise InputError(f"{path}: {exc}") from None
    return out


def _enum_budget(args) -> int:
    return args.budget if args.budget is not None else DEFAULT_ENUM_BUDGET


# ---------------------------------------------------------------------------
# commands


def cmd_standard_form(args) -> Outcome:
    (cf,) = _inputs(args, 1)
    form, ctype = standard_generator_matrix(cf.code)
    rows = form.matrix.data
    perm = list(form.permutation)
    text = "\n".join(
        [format_mixed_matrix(rows, cf.code.alpha) or "(no rows)",
         "U: " + " ".join(map(str, perm)),
         f"type: {ctype}"]
    )
    data = {
        "rows": _rows(rows),
        "permutation": perm,
        "type": str(ctype),
        "ks": list(ctype.ks),
        "weakly_free": is_weakly_free(cf.code),
    }
    return Outcome(text, data)


def cmd_type(args) -> Outcome:
    (cf,) = _inputs(args, 1)
    C = cf.code
    data = {
        "type": str(C.code_type),
        "ks": list(C.code_type.ks),
        "dimension": C.dimension,
        "size": f"{C.spec.p}^{C.dimension}",
        "weakly_free": is_weakly_free(C),
        "free": is_free(C),
        "separable": is_separable(C),
    }
    text = "\n".join(f"{k}: {str(v).lower() if isinstance(v, bool) else v}" for k, v in data.items())
    return Outcome(text, data)


def _code_outcome(args, code: MixedCode, cf: CodeFile, comment: str) -> Outcome:
    text = dump_code_file(code, cf.H, cf.K, fmt="text", comment=comment).rstrip("\n")
    return Outcome(text, json.loads(dump_code_file(code, cf.H, cf.K, fmt="structured")))


def cmd_dual(args) -> Outcome:
    (cf,) = _inputs(args, 1)
    D = dual(cf.code)
    return _code_outcome(args, D, cf, f"dual code, type {D.code_type}")


def cmd_parity_check(args) -> Outcome:
    (cf,) = _inputs(args, 1)
    try:
        H = parity_check_weakly_free(cf.code)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return Outcome(format_mixed_matrix(H, cf.code.alpha), {"rows": _rows(H)})


def cmd_enumerate(args) -> Outcome:
    (cf,) = _inputs(args, 1)
    words = enumerate_codewords(cf.code, _enum_budget(args))
    return Outcome(format_mixed_matrix(words, cf.code.alpha), {"count": len(words), "codewords": _rows(words)})


def cmd_min_distance(args) -> Outcome:
    (cf,) = _inputs(args, 1)
    d = min_distance(cf.code, _enum_budget(args))
    return Outcome(f"min-distance: {d}", {"min_distance": d})


def cmd_lcp_check(args) -> Outcome:
    A, B = _inputs(args, 2)
    v = is_lcp(A.code, B.code)
    data = {"is_lcp": v.is_lcp, "reason": v.reason, "stacked_dim": v.stacked_dim, "ambient_dim": v.ambient_dim}
    text = f"verdict: {'LCP' if v.is_lcp else 'not LCP'}\nreason: {v.reason}"
    return Outcome(text, data, negative=not v.is_lcp)


def cmd_lcp_security(args) -> Outcome:
    A, B = _inputs(args, 2)
    v = is_lcp(A.code, B.code)
    if not v:
        return Outcome(
            f"security: undefined (not an LCP: {v.reason})",
            {"is_lcp": False, "reason": v.reason, "security": None},
            negative=True,
        )
    d = security_parameter(A.code, B.code, _enum_budget(args))
    return Outcome(f"security: {d}", {"is_lcp": True, "reason": v.reason, "security": d})


def cmd_lcp_search(args) -> Outcome:
    try:
        spec = ChainRingSpec(args.p, args.s, args.r)
    except (TypeError, ValueError) as exc:
        raise InputError(str(exc)) from None
    if args.alpha < 0 or args.beta < 0 or args.alpha + args.beta == 0:
        raise InputError("need alpha, beta >= 0 with alpha + beta > 0")
    tries = args.budget if args.budget is not None else 100
    seed = args.seed if args.seed is not None else 0
    results = lcp_search(spec, args.alpha, args.beta, tries, seed)
    lines = [f"# {len(results)} LCP pairs from {tries} samples over {spec}, seed {seed}"]
    items = []
    for i, res in enumerate(results, 1):
        C, D = res.code, res.partner
        lines += [
            f"pair {i}: security {res.security}, type C {C.code_type}, type D {D.code_type}",
            "C:", format_mixed_matrix(C.standard_rows, C.alpha),
            "D:", format_mixed_matrix(D.standard_rows, D.alpha),
        ]
        items.append({
            "security": res.security,
            "C": {"type": str(C.code_type), "rows": _rows(C.standard_rows)},
            "D": {"type": str(D.code_type), "rows": _rows(D.standard_rows)},
        })
    data = {
        "p": spec.p, "s": spec.s, "r": spec.r, "alpha": args.alpha, "beta": args.beta,
        "samples": tries, "seed": seed, "pairs": items,
    }
    return Outcome("\n".join(lines), data)


def cmd_group_ideal(args) -> Outcome:
    (cf,) = _inputs(args, 1)
    try:
        H, K = cf.groups
    except CodeFileError as exc:
        raise InputError(str(exc)) from None
    I = ideal_generated(cf.code, H, K)
    return _code_outcome(args, I, cf, f"ideal of R[{H}] x Rbar[{K}], type {I.code_type}")


def cmd_group_equivalence(args) -> Outcome:
    A, B = _inputs(args, 2)
    try:
        H, K = A.groups
    except CodeFileError as exc:
        raise InputError(str(exc)) from None
    if (B.H, B.K) not in ((None, None), (H, K)):
        raise InputError("the two files declare different groups")
    C, D = A.code, B.code
    for name, X in (("first", C), ("second", D)):
        if not is_group_code(X, H, K):
            msg = f"{name} code is not a group code"
            return Outcome(f"witness: none ({msg})", {"witness": None, "reason": msg}, negative=True)
    v = is_lcp(C, D)
    if not v:
        msg = f"not an LCP: {v.reason}"
        return Outcome(f"witness: none ({msg})", {"witness": None, "reason": msg}, negative=True)
    budget = args.budget if args.budget is not None else 10**6
    try:
        w = verify_equivalence_theorem(C, D, H, K, budget)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if w is None:
        msg = "no block permutation maps D-perp onto C"
        return Outcome(f"witness: none ({msg})", {"witness": None, "reason": msg}, negative=True)
    pr, pb = w
    text = "witness: " + " ".join(map(str, pr)) + " | " + " ".join(map(str, pb))
    return Outcome(text, {"witness": {"r": list(pr), "rbar": list(pb)}, "reason": "ok"})


def cmd_verify(args) -> Outcome:
    instances = args.budget if args.budget is not None else 20
    reports = run_suite(instances, args.seed if args.seed is not None else 0)
    data = {
        "reports": [
            {"checked": r.checked, "instances": r.instances, "failures": r.failures, "first_failure": r.first_failure}
            for r in reports
        ]
    }
    return Outcome("\n".join(r.line() for r in reports), data, negative=any(not r.passed for r in reports))


# ---------------------------------------------------------------------------


def _common(suppress: bool) -> argparse.ArgumentParser:
    """Shared flags; subparsers suppress defaults so top-level values survive."""
    p = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--format", choices=("text", "structured"), default=d("text"))
    p.add_argument("--budget", type=int, default=d(None), help="enumeration / sample budget")
    p.add_argument("--seed", type=int, default=d(None))
    p.add_argument("--strict", action="store_true", default=d(False),
                   help="exit 1 on a mathematical negative")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chaincodes",
        description="Mixed-alphabet codes over Z_{p^s} x Z_{p^r}.",
        parents=[_common(False)],
        allow_abbrev=False,
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common(True)

    def add(parent, name, func, nfiles, help_):
        sp = parent.add_parser(name, parents=[common], help=help_, allow_abbrev=False)
        if nfiles:
            sp.add_argument("paths", nargs="*", metavar="FILE")
            sp.add_argument("--input", action="append", metavar="FILE")
        sp.set_defaults(func=func, command_name=name)
        return sp

    add(sub, "standard-form", cmd_standard_form, 1, "standard generator matrix, U and type")
    add(sub, "type", cmd_type, 1, "type and structural flags")
    add(sub, "dual", cmd_dual, 1, "dual code as a code file")
    add(sub, "parity-check", cmd_parity_check, 1, "closed-form parity-check matrix (weakly-free)")
    add(sub, "enumerate", cmd_enumerate, 1, "list all codewords")
    add(sub, "min-distance", cmd_min_distance, 1, "minimum Hamming distance")
    add(sub, "verify", cmd_verify, 0, "run the oracle cross-check suite")

    lcp = sub.add_parser("lcp", help="linear complementary pairs", allow_abbrev=False).add_subparsers(dest="lcp_command", required=True)
    add(lcp, "check", cmd_lcp_check, 2, "decide whether two codes form an LCP")
    add(lcp, "security", cmd_lcp_security, 2, "security parameter of an LCP")
    search = add(lcp, "search", cmd_lcp_search, 0, "random search for LCPs")
    for name in ("p", "s", "r", "alpha", "beta"):
        search.add_argument(f"--{name}", type=int, required=True)

    group = sub.add_parser("group", help="product group codes", allow_abbrev=False).add_subparsers(dest="group_command", required=True)
    add(group, "ideal", cmd_group_ideal, 1, "ideal generated by the rows of a code file")
    add(group, "check-equivalence", cmd_group_equivalence, 2, "search a permutation taking D-perp to C")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        outcome = args.func(args)
    except (InputError, EnumerationBudgetError, OracleBudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.format == "structured":
        print(json.dumps(outcome.data, sort_keys=True))
    else:
        print(outcome.text)
    return EXIT_NEGATIVE if (outcome.negative and args.strict) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
