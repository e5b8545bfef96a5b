"""Command line front end.

Subcommands: jones, plethysm, qdim, twist, degrees, table, selfcheck.
Output is deterministic for a given parameter set, so results can be
cached content-addressed by the canonical parameter string plus the
package version; cache files are written atomically and corrupt entries
are recomputed with a warning.  Exit codes: 0 success, 2 usage error,
3 internal-consistency failure.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile
from multiprocessing import Pool

from . import __version__
from .jones import TorusKnotSpec, degree_report, jones_rosso, jones_t2b
from .laurent import LaurentError
from .plethysm2 import psi2_closed, psi2_schur_form, signed_dimension
from .schur3 import (generic_row_at_m2_one, psi_oracle, verify_lemma_LR,
                     verify_lemma_psi2_recurrence)
from .sl3rep import qdim_closed, qdim_weyl, twist_monomial, twist_weyl_check

__all__ = ["main"]

CACHE_ENV = "SL3JONES_CACHE"


# -- caching ----------------------------------------------------------


def _cache_dir(args) -> str | None:
    return getattr(args, "cache", None) or os.environ.get(CACHE_ENV) or None


def _cache_path(cdir: str, key: str) -> str:
    digest = hashlib.sha256(key.encode("utf-8")).hexdigest()
    return os.path.join(cdir, digest + ".json")


def _cache_lookup(cdir: str, key: str) -> str | None:
    path = _cache_path(cdir, key)
    if not os.path.exists(path):
        return None
    try:
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
        if data.get("key") != key or not isinstance(data.get("output"), str):
            raise ValueError("key mismatch")
        return data["output"]
    except (OSError, ValueError, KeyError):
        print(f"warning: ignoring corrupt cache entry {path}", file=sys.stderr)
        return None


def _cache_store(cdir: str, key: str, output: str) -> None:
    os.makedirs(cdir, exist_ok=True)
    path = _cache_path(cdir, key)
    fd, tmp = tempfile.mkstemp(dir=cdir, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as f:
            json.dump({"key": key, "output": output}, f)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _with_cache(args, key_parts: list[str], compute) -> str:
    key = "|".join([__version__] + [str(p) for p in key_parts])
    cdir = _cache_dir(args)
    if cdir:
        hit = _cache_lookup(cdir, key)
        if hit is not None:
            return hit
    output = compute()
    if cdir:
        _cache_store(cdir, key, output)
    return output


def _enforce_limit(args) -> None:
    limit = getattr(args, "limit", 100)
    for name in ("m1", "m2", "max"):
        v = getattr(args, name, None)
        if v is not None and v > limit:
            raise ValueError(
                f"--{name} {v} exceeds the configured limit {limit} "
                f"(raise it with --limit)")


def _emit(args, text: str) -> int:
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    return 0


# -- value computation -------------------------------------------------


def _compute_result(a: int, b: int, m1: int, m2: int, var: str):
    if a == 2:
        res = jones_t2b(b, (m1, m2))
    else:
        res = jones_rosso(TorusKnotSpec(a, b), (m1, m2))
    return res.mirrored() if var == "qinv" else res


def _jones_text(a, b, m1, m2, var, fmt) -> str:
    res = _compute_result(a, b, m1, m2, var)
    if fmt == "json":
        return json.dumps(res.to_json_dict(), separators=(",", ":"))
    return res.value.to_text()


def _plethysm_text(m1, m2, a, fmt) -> str:
    s = psi2_closed((m1, m2)) if a == 2 else psi_oracle((m1, m2), a)
    if fmt == "json":
        return json.dumps(s.to_json_dict(), separators=(",", ":"))
    return s.to_text()


def _degrees_text(a, b, m1, m2, var, fmt) -> str:
    rep = degree_report(_compute_result(a, b, m1, m2, var))
    if fmt == "json":
        return json.dumps(rep.to_json_dict(), separators=(",", ":"))
    d = rep.to_json_dict()
    lines = []
    for name in ("min_deg", "max_deg", "min_coeff", "max_coeff",
                 "min_coeff_exponents", "max_coeff_exponents",
                 "leading", "trailing"):
        v = d[name]
        if isinstance(v, list):
            lines.append(f"{name} {','.join(str(x) for x in v)}")
        else:
            lines.append(f"{name} {v}")
    return "\n".join(lines)


def _table_cell(cell) -> str:
    a, b, m1, m2, var, full = cell
    res = _compute_result(a, b, m1, m2, var)
    rep = degree_report(res)
    row = (f"{m1},{m2},{rep.min_deg},{rep.max_deg},{rep.min_coeff},"
           f"{rep.max_coeff},{res.value.term_count}")
    if full:
        row += f",{res.value.to_text()}"
    return row


def _table_text(a, b, mx, var, full, jobs) -> str:
    header = "m1,m2,min_deg,max_deg,min_coeff,max_coeff,term_count"
    if full:
        header += ",polynomial"
    cells = [(a, b, m1, m2, var, full)
             for m1 in range(mx + 1) for m2 in range(mx + 1)]
    if jobs > 1:
        with Pool(jobs) as pool:
            rows = pool.map(_table_cell, cells)
    else:
        rows = [_table_cell(c) for c in cells]
    return "\n".join([header] + rows) + "\n"


# -- subcommand handlers ------------------------------------------------


def _cmd_jones(args) -> int:
    text = _with_cache(
        args,
        ["jones", args.a, args.b, args.m1, args.m2, args.var, args.format],
        lambda: _jones_text(args.a, args.b, args.m1, args.m2, args.var,
                            args.format))
    return _emit(args, text)


def _cmd_plethysm(args) -> int:
    text = _with_cache(
        args,
        ["plethysm", args.a, args.m1, args.m2, args.format],
        lambda: _plethysm_text(args.m1, args.m2, args.a, args.format))
    return _emit(args, text)


def _cmd_qdim(args) -> int:
    value = qdim_closed((args.m1, args.m2))
    if args.format == "json":
        text = json.dumps(value.to_json_dict(), separators=(",", ":"))
    else:
        text = value.to_text()
    return _emit(args, text)


def _cmd_twist(args) -> int:
    value = twist_monomial((args.m1, args.m2), args.num, args.den)
    if args.format == "json":
        text = json.dumps(value.to_json_dict(), separators=(",", ":"))
    else:
        text = value.to_text()
    return _emit(args, text)


def _cmd_degrees(args) -> int:
    text = _with_cache(
        args,
        ["degrees", args.a, args.b, args.m1, args.m2, args.var, args.format],
        lambda: _degrees_text(args.a, args.b, args.m1, args.m2, args.var,
                              args.format))
    return _emit(args, text)


def _cmd_table(args) -> int:
    if args.max < 0:
        raise ValueError("--max must be nonnegative")
    if args.jobs < 1:
        raise ValueError("--jobs must be at least 1")
    text = _with_cache(
        args,
        ["table", args.a, args.b, args.max, args.var, args.full],
        lambda: _table_text(args.a, args.b, args.max, args.var, args.full,
                            args.jobs))
    return _emit(args, text)


def _selfcheck_properties(mx: int):
    rng2 = [(m1, m2) for m1 in range(mx + 1) for m2 in range(mx + 1)]

    def qdim_weyl_equivalence():
        return all(qdim_weyl(w) == qdim_closed(w) for w in rng2)

    def twist_pairing():
        return all(twist_weyl_check(w) for w in rng2)

    def plethysm_oracle_equivalence():
        small = [(m1, m2) for m1 in range(4) for m2 in range(4)]
        return all(psi2_closed(w) == psi_oracle(w, 2) for w in small)

    def plethysm_schur_form():
        pairs = [(m1, m2) for m1 in range(2 * mx + 1) for m2 in range(m1 + 1)]
        return all(psi2_schur_form(m1, m2) == psi2_closed((m1 - m2, m2))
                   for m1, m2 in pairs)

    def product_lemma_rows():
        return all(verify_lemma_LR(m1, m2)
                   for m1 in range(mx + 1) for m2 in range(m1 + 1))

    def plethysm_recurrence():
        return all(verify_lemma_psi2_recurrence(m1, m2)
                   for m1 in range(1, mx + 1) for m2 in range(m1))

    def signed_dimension_conservation():
        from .sl3rep import dimension
        small = [(m1, m2) for m1 in range(4) for m2 in range(4)]
        return all(signed_dimension(psi_oracle(w, a)) == dimension(w)
                   for w in small for a in (2, 3))

    def torus_route_equivalence():
        small = [(m1, m2) for m1 in range(3) for m2 in range(3)]
        return all(jones_rosso(TorusKnotSpec(2, b), w).value
                   == jones_t2b(b, w).value
                   for b in (1, 3) for w in small)

    def torus_symmetry():
        small = [(m1, m2) for m1 in range(2) for m2 in range(2)]
        return all(jones_rosso(TorusKnotSpec(3, 2), w).value
                   == jones_rosso(TorusKnotSpec(2, 3), w).value
                   for w in small)

    def unknot_normalization():
        if not all(jones_t2b(1, w).value == jones_t2b(1, w).value.one(1)
                   for w in rng2):
            return False
        return all(jones_t2b(3, w).value.eval_one() == 1 for w in rng2)

    return [
        ("qdim-weyl-equivalence", qdim_weyl_equivalence),
        ("twist-pairing-check", twist_pairing),
        ("plethysm-oracle-equivalence", plethysm_oracle_equivalence),
        ("plethysm-schur-form", plethysm_schur_form),
        ("product-lemma-rows", product_lemma_rows),
        ("plethysm-recurrence", plethysm_recurrence),
        ("signed-dimension-conservation", signed_dimension_conservation),
        ("torus-route-equivalence", torus_route_equivalence),
        ("torus-symmetry", torus_symmetry),
        ("unknot-normalization", unknot_normalization),
    ]


def _cmd_selfcheck(args) -> int:
    failures = 0
    for name, check in _selfcheck_properties(args.max):
        try:
            ok = check()
        except Exception as exc:  # a crash is a failure, not an abort
            print(f"FAIL {name} ({exc})")
            failures += 1
            continue
        print(("PASS" if ok else "FAIL") + f" {name}")
        failures += 0 if ok else 1
    # empirical note, recorded but never asserted: the generic two-box
    # product row evaluated at m2 = 1 agrees with the dedicated row
    probe = all(generic_row_at_m2_one(m1) for m1 in range(2, args.max + 2))
    print(f"note: generic product row at m2=1 agrees on range: {probe}")
    return 3 if failures else 0


# -- parser -------------------------------------------------------------


def _add_common(p, color=True, knot=False, var=False, fmt=True, cache=False):
    if knot:
        p.add_argument("--a", type=int, default=2,
                       help="torus strand count (default 2)")
        p.add_argument("--b", type=int, required=True,
                       help="torus winding count")
    if color:
        p.add_argument("--m1", type=int, required=True)
        p.add_argument("--m2", type=int, required=True)
    p.add_argument("--limit", type=int, default=100,
                   help="bound on m1, m2 and table ranges (default 100)")
    if var:
        p.add_argument("--var", choices=("q", "qinv"), default="q",
                       help="report in q or in 1/q (default q)")
    if fmt:
        p.add_argument("--format", choices=("text", "json"), default="text")
    if cache:
        p.add_argument("--cache", default=None,
                       help=f"cache directory (default ${CACHE_ENV})")
        p.add_argument("--out", default=None, help="write output to a file")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sl3jones",
        description="Exact sl3 colored invariants of torus knots T(2,b).")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("jones", help="colored invariant of one knot/color")
    _add_common(p, knot=True, var=True, cache=True)
    p.set_defaults(func=_cmd_jones)

    p = sub.add_parser("plethysm", help="signed second-plethysm expansion")
    p.add_argument("--a", type=int, default=2,
                   help="plethysm degree (2 uses the closed form)")
    _add_common(p, cache=True)
    p.set_defaults(func=_cmd_plethysm)

    p = sub.add_parser("qdim", help="quantum dimension of a weight")
    _add_common(p)
    p.set_defaults(func=_cmd_qdim)

    p = sub.add_parser("twist", help="twist power of a weight")
    _add_common(p)
    p.add_argument("--num", type=int, default=1)
    p.add_argument("--den", type=int, default=1)
    p.set_defaults(func=_cmd_twist)

    p = sub.add_parser("degrees", help="degree and coefficient extremes")
    _add_common(p, knot=True, var=True, cache=True)
    p.set_defaults(func=_cmd_degrees)

    p = sub.add_parser("table", help="CSV degree table over a color range")
    _add_common(p, color=False, knot=True, var=True, fmt=False, cache=True)
    p.add_argument("--max", type=int, required=True,
                   help="range bound: colors (m1, m2) with 0 <= mi <= max")
    p.add_argument("--full", action="store_true",
                   help="append the full polynomial column")
    p.add_argument("--jobs", type=int, default=1,
                   help="parallel workers (default 1, serial)")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("selfcheck", help="run the cross-formula checks")
    p.add_argument("--max", type=int, default=5,
                   help="weight range bound for the checks (default 5)")
    p.set_defaults(func=_cmd_selfcheck)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if hasattr(args, "limit"):
            _enforce_limit(args)
        return args.func(args)
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (LaurentError, ArithmeticError) as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
