"""Command-line front end: ``vecpart poly|scalar|vector``.

Exit status is 0 on success, 1 when a ``--verify`` comparison fails and 2 on
bad input. Results go to stdout, errors to stderr.
"""

import argparse
import itertools
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import families
from .numeric import GaussianRational, format_rational, parse_gaussian
from .scalar import PartList, brute_count, evaluate_quasipoly, partition_quasipoly
from .series import compositions, monomials_upto
from .vector import (
    AlphaError,
    MatrixError,
    MatrixSpec,
    brute_vector_count,
    decompose,
    evaluate,
    partial_values,
)

FAMILIES = (
    "bernoulli",
    "eulerian",
    "higher-bernoulli",
    "higher-eulerian",
    "vector-bernoulli",
    "vector-eulerian",
)


class UsageError(Exception):
    pass


def parse_int_list(text):
    try:
        return tuple(int(v) for v in text.replace(" ", "").split(",") if v != "")
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def parse_rational_list(text):
    try:
        return tuple(Fraction(v.strip()) for v in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"expected comma-separated rationals, got {text!r}") from None


def parse_matrix(text):
    rows = [parse_int_list(r) for r in text.split(";")]
    if not rows or any(not r for r in rows):
        raise UsageError(f"cannot parse matrix {text!r}; use rows like '1,2,0;1,0,1'")
    if len({len(r) for r in rows}) != 1:
        raise UsageError("matrix rows have different lengths")
    return tuple(rows)


def parse_alpha(text):
    try:
        return tuple(parse_gaussian(v) for v in text.split(","))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


@dataclass
class CommandConfig:
    command: str
    json: bool = False
    verify: bool = False
    max_s: int = 50
    grid: int = 12
    cap: int = None
    parts: tuple = None
    matrix: tuple = None
    s: tuple = None
    alpha: tuple = None
    direction: tuple = None
    limit: bool = False

    @classmethod
    def from_namespace(cls, ns):
        cfg = cls(ns.command, json=ns.json, verify=ns.verify, max_s=ns.max_s, grid=ns.grid)
        cfg.cap = getattr(ns, "cap", None)
        if getattr(ns, "parts", None) is not None:
            cfg.parts = parse_int_list(ns.parts)
        if getattr(ns, "matrix", None) is not None:
            cfg.matrix = parse_matrix(ns.matrix)
        if getattr(ns, "s", None) is not None:
            cfg.s = parse_int_list(ns.s)
        if getattr(ns, "alpha", None) is not None:
            cfg.alpha = parse_alpha(ns.alpha)
        if getattr(ns, "direction", None) is not None:
            cfg.direction = parse_alpha(ns.direction)
        cfg.limit = getattr(ns, "limit", False)
        if cfg.max_s < 0 or cfg.grid < 0:
            raise UsageError("--max-s and --grid must be nonnegative")
        return cfg


def _dump(obj):
    print(json.dumps(obj, sort_keys=False))


# -- poly -------------------------------------------------------------------


def _poly_members(ns):
    fam = ns.family
    rho = parse_rational_list(ns.rho) if ns.rho is not None else None
    d = parse_int_list(ns.d) if ns.d is not None else None
    matrix = parse_matrix(ns.matrix) if ns.matrix is not None else None

    if fam in ("bernoulli", "eulerian", "higher-bernoulli", "higher-eulerian"):
        if ns.k is None and ns.cap is None:
            raise UsageError(f"{fam} needs --k (or --cap)")
        indices = [(ns.k,)] if ns.k is not None else [(k,) for k in range(ns.cap + 1)]
        if any(k < 0 for (k,) in indices):
            raise UsageError("--k must be nonnegative")
    else:
        if matrix is not None:
            l = len(matrix)
        elif ns.n is not None:
            l = len(parse_int_list(ns.n))
        else:
            raise UsageError(f"{fam} needs --n or --matrix with --cap")
        if ns.n is not None:
            indices = [parse_int_list(ns.n)]
            if len(indices[0]) != l:
                raise UsageError(f"--n must have {l} entries")
        elif ns.cap is not None:
            indices = list(monomials_upto(ns.cap, l))
        else:
            raise UsageError(f"{fam} needs --n (or --cap)")

    def build(idx):
        if fam == "bernoulli":
            return families.bernoulli_poly(idx[0])
        if fam == "eulerian":
            if rho is None or len(rho) != 1:
                raise UsageError("eulerian needs a single --rho")
            return families.eulerian_poly(idx[0], rho[0])
        if fam == "higher-bernoulli":
            return families.higher_order_bernoulli(idx[0], d or ())
        if fam == "higher-eulerian":
            if rho is None:
                raise UsageError("higher-eulerian needs --rho (one per parameter)")
            return families.higher_order_eulerian(idx[0], rho, d or ())
        if fam == "vector-bernoulli":
            if matrix is None:
                return families.vector_bernoulli(idx)
            return families.vector_higher_order_bernoulli(idx, matrix)
        if rho is None:
            raise UsageError("vector-eulerian needs --rho")
        if matrix is None:
            if len(rho) != 1:
                raise UsageError("vector-eulerian without --matrix takes a single --rho")
            return families.vector_eulerian(idx, rho[0])
        return families.vector_higher_order_eulerian(idx, rho, matrix)

    return [(idx, build(idx)) for idx in indices]


def cmd_poly(ns, cfg):
    members = _poly_members(ns)
    if cfg.json:
        if len(members) == 1:
            _dump(members[0][1].to_json())
        else:
            _dump([{"index": list(idx), "poly": p.to_json()} for idx, p in members])
    elif len(members) == 1:
        print(members[0][1].format())
    else:
        for idx, p in members:
            print(f"{','.join(map(str, idx))}: {p.format()}")
    return 0


# -- scalar ------------------------------------------------------------------


def cmd_scalar(cfg):
    if cfg.parts is None:
        raise UsageError("scalar needs --parts")
    try:
        parts = PartList(cfg.parts)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    q = partition_quasipoly(parts)
    status = 0
    if cfg.s is not None:
        if len(cfg.s) != 1:
            raise UsageError("--s takes a single integer for scalar partitions")
        s = cfg.s[0]
        if s < 0:
            raise UsageError("s must be nonnegative")
        value = evaluate_quasipoly(q, s)
        brute = brute_count(s, parts) if cfg.verify else None
        if brute is not None and brute != value:
            status = 1
        if cfg.json:
            _dump({"parts": list(parts.d), "s": s, "value": format_rational(value), "brute": brute})
        else:
            print(format_rational(value))
            if brute is not None:
                print(f"brute {brute} {'OK' if brute == value else 'MISMATCH'}")
        return status
    if cfg.verify:
        bad = [
            s for s in range(cfg.max_s + 1) if evaluate_quasipoly(q, s) != brute_count(s, parts)
        ]
        total = cfg.max_s + 1
        if cfg.json:
            _dump({"parts": list(parts.d), "checked": total, "matched": total - len(bad), "mismatches": bad})
        else:
            print(f"{'OK' if not bad else 'FAIL'} {total - len(bad)}/{total}")
        for s in bad:
            print(f"mismatch at s={s}", file=sys.stderr)
        return 1 if bad else 0
    _dump(q.to_json())
    return 0


# -- vector ------------------------------------------------------------------


def _alpha_json(alpha):
    return [a.to_json() for a in alpha]


def cmd_vector(cfg):
    if cfg.matrix is None:
        raise UsageError("vector needs --matrix")
    D = MatrixSpec(cfg.matrix)
    decomp = decompose(D)
    if cfg.s is not None and len(cfg.s) != D.l:
        raise UsageError(f"--s needs {D.l} components")
    if cfg.alpha is not None and len(cfg.alpha) != D.l:
        raise UsageError(f"--alpha needs {D.l} components")

    def value_at(s):
        return evaluate(decomp, s, cfg.alpha, limit=cfg.limit, direction=cfg.direction)

    if cfg.s is not None:
        if any(v < 0 for v in cfg.s) and cfg.verify:
            raise UsageError("--verify needs a nonnegative s")
        if cfg.alpha is None:
            values = partial_values(decomp, cfg.s)
            if cfg.json:
                _dump({"s": list(cfg.s), "partial": [
                    {"n": list(n), "value": format_rational(v)} for n, v in sorted(values.items())
                ]})
            else:
                for n, v in sorted(values.items()):
                    print(f"W^{','.join(map(str, n))} = {format_rational(v)}")
            return 0
        value = value_at(cfg.s)
        brute = brute_vector_count(cfg.s, D) if cfg.verify else None
        ok = brute is None or value == brute
        if cfg.json:
            _dump({"s": list(cfg.s), "alpha": _alpha_json(cfg.alpha), "value": value.to_json(), "brute": brute})
        else:
            print(f"value {value}")
            if brute is not None:
                print(f"brute {brute} {'OK' if ok else 'MISMATCH'}")
        return 0 if ok else 1

    if cfg.verify:
        if cfg.alpha is None:
            raise UsageError("--verify over the grid needs --alpha")
        matched, total, misses = 0, 0, []
        for s in itertools.product(range(cfg.grid + 1), repeat=D.l):
            total += 1
            v = value_at(s)
            if v == brute_vector_count(s, D):
                matched += 1
            else:
                misses.append(s)
        if cfg.json:
            _dump({"alpha": _alpha_json(cfg.alpha), "grid": cfg.grid, "checked": total,
                   "matched": matched, "mismatches": [list(s) for s in misses]})
        else:
            print(f"{'OK' if matched == total else 'FAIL'} {matched}/{total}")
        return 0 if matched == total else 1

    _dump(decomp.to_json())
    return 0


# -- entry point -------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--verify", action="store_true", help="compare against enumeration")
    common.add_argument("--max-s", type=int, default=50, help="scalar verification bound")
    common.add_argument("--grid", type=int, default=12, help="vector verification grid bound")

    parser = argparse.ArgumentParser(
        prog="vecpart",
        description="Partition functions as Sylvester-wave quasipolynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", parents=[common], help="print a Bernoulli/Eulerian polynomial")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--k", type=int)
    p.add_argument("--n", help="vector index, e.g. 1,0")
    p.add_argument("--d", help="higher-order parameters, e.g. 1,2,3")
    p.add_argument("--matrix", help="rows separated by ';', e.g. '1,2;1,0'")
    p.add_argument("--rho", help="rational rho value(s), comma separated")
    p.add_argument("--cap", type=int, help="print every member with total index <= CAP")

    p = sub.add_parser("scalar", parents=[common], help="restricted partition function")
    p.add_argument("--parts", required=True, help="parts, e.g. 1,2,3")
    p.add_argument("--s", help="evaluate at this s")

    p = sub.add_parser("vector", parents=[common], help="vector partition function")
    p.add_argument("--matrix", required=True, help="rows separated by ';', e.g. '1,2,0;1,0,1'")
    p.add_argument("--s", help="evaluate at this s, e.g. 3,5")
    p.add_argument("--alpha", help="chamber direction, e.g. '1, -1+1i'")
    p.add_argument("--limit", action="store_true", help="take the limit for alpha on P_m = 0")
    p.add_argument("--direction", help="perturbation direction for --limit (default all ones)")
    return parser


def main(argv=None):
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = CommandConfig.from_namespace(ns)
        if ns.command == "poly":
            return cmd_poly(ns, cfg)
        if ns.command == "scalar":
            return cmd_scalar(cfg)
        return cmd_vector(cfg)
    except (UsageError, MatrixError, AlphaError, ValueError, ZeroDivisionError) as exc:
        print(f"vecpart: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
