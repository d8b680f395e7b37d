"""Command-line front end: manifold loading, series printing, verification.

Exit codes: 0 all checks pass, 1 a verification mismatch, 2 input or usage
error.  Output is byte-deterministic for identical inputs and flags.

Manifold files are JSON objects:

    {
      "name": "k3",
      "dim_c": 2,                       # or "dim_real" for a real manifold
      "hodge": [[1,0,1],[0,20,0],[1,0,1]],   # rows h[p][q]; or "betti": [...]
      "calabi_yau": true,               # derives hodgeB by Serre duality
      "hodgeB": [[...]],                # optional explicit B-table
      "pairing": [{"degree": 0, "matrix": [[...]]}, ...]   # optional
    }

The --manifold argument takes a path, or the name of one of the bundled
catalog manifolds (point, p1, elliptic, genus2, p2, k3, abelian, p1xp1).
Set SYMPROD_CATALOG to override the catalog directory.
"""

import argparse
import json
import os
import sys
from pathlib import Path

from . import fock, orbifold
from .orbifold import ManifoldData
from .series import SeriesDomainError, SeriesUsageError


class InputError(Exception):
    """Bad file, schema violation, or invalid kind/manifold combination."""


def catalog_dir():
    override = os.environ.get("SYMPROD_CATALOG")
    if override:
        return Path(override)
    return Path(__file__).parent / "catalog"


def catalog_names():
    return sorted(p.stem for p in catalog_dir().glob("*.json"))


def _resolve_manifold_path(name_or_path):
    path = Path(name_or_path)
    if path.is_file():
        return path
    candidate = catalog_dir() / (name_or_path + ".json")
    if candidate.is_file():
        return candidate
    raise InputError(
        "manifold %r: no such file and not a catalog name (%s)"
        % (name_or_path, ", ".join(catalog_names()))
    )


def load_manifold(path):
    """Parse and validate a manifold JSON file into ManifoldData."""
    path = Path(path)
    try:
        raw = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError("cannot read %s: %s" % (path, exc))
    if not isinstance(raw, dict):
        raise InputError("%s: manifold file must be a JSON object" % path)
    name = raw.get("name", path.stem)
    known = {"name", "dim_c", "dim_real", "betti", "hodge", "hodgeB",
             "calabi_yau", "pairing"}
    unknown = set(raw) - known
    if unknown:
        raise InputError("%s: unknown fields %s" % (path, sorted(unknown)))
    try:
        if "hodge" in raw:
            if "dim_c" not in raw:
                raise ValueError("a Hodge table needs dim_c")
            X = ManifoldData.from_hodge(
                name,
                raw["dim_c"],
                raw["hodge"],
                calabi_yau=raw.get("calabi_yau", False),
                hodge_b_rows=raw.get("hodgeB"),
                pairing=raw.get("pairing"),
            )
            if "betti" in raw:
                stated = {2 * d: b for d, b in enumerate(raw["betti"]) if b}
                if stated != X.betti.dims:
                    raise ValueError("stated Betti numbers disagree with "
                                     "the Hodge table")
            if "dim_real" in raw and raw["dim_real"] != 2 * raw["dim_c"]:
                raise ValueError("dim_real inconsistent with dim_c")
            return X
        if "betti" in raw:
            if raw.get("calabi_yau") or "hodgeB" in raw:
                raise ValueError("B-data needs a Hodge table")
            if "dim_real" not in raw:
                raise ValueError("a Betti vector needs dim_real")
            X = ManifoldData.from_betti(name, raw["dim_real"], raw["betti"])
            X.pairing = raw.get("pairing")
            return X
        raise ValueError("need one of 'betti' or 'hodge'")
    except ValueError as exc:
        raise InputError("%s: %s" % (path, exc))


def _load(name_or_path):
    return load_manifold(_resolve_manifold_path(name_or_path))


def _emit(line):
    sys.stdout.write(line + "\n")


def _emit_results(results):
    failed = 0
    for r in results:
        if r.status == "skip":
            _emit("SKIP %s (%s)" % (r.name, "; ".join(r.lines)))
            continue
        _emit("%s %s" % ("PASS" if r.status == "pass" else "FAIL", r.name))
        if r.status == "fail":
            failed += 1
            for line in r.lines:
                _emit("  " + line)
    ran = sum(1 for r in results if r.status != "skip")
    _emit("%d checks, %d failed" % (ran, failed))
    return failed


def _assert_integral(s, label):
    if not s.is_integral():
        raise AssertionError(
            "%s has non-integer coefficients: %s" % (label, s)
        )


def cmd_series(args):
    X = _load(args.manifold)
    kind = args.kind
    if kind not in orbifold.SERIES_KINDS:
        raise InputError(
            "unknown kind %r (choose from %s)"
            % (kind, ", ".join(orbifold.SERIES_KINDS))
        )
    reason = orbifold.applicability(kind, X)
    if reason is not None:
        raise InputError("kind %s not applicable to %s: %s"
                         % (kind, X.name, reason))
    order = args.order
    if order is None:
        order = orbifold.hodge_kind_order(kind, X, 8)
    if args.mode == "brute":
        b = orbifold.brute_series(kind, X, order)
        _assert_integral(b, "brute %s" % kind)
        _emit(str(b))
        return 0
    if args.mode == "closed":
        c = orbifold.closed_series(kind, X, order)
        _assert_integral(c, "closed %s" % kind)
        _emit(str(c))
        return 0
    b = orbifold.brute_series(kind, X, order)
    _assert_integral(b, "brute %s" % kind)
    c = orbifold.closed_series(kind, X, order)
    _assert_integral(c, "closed %s" % kind)
    _emit("brute:  %s" % b)
    _emit("closed: %s" % c)
    result = orbifold._compare("%s order %d" % (kind, order), b, c,
                               orbifold.kind_var(kind))
    if result.status == "pass":
        _emit("verdict: equal")
        return 0
    _emit("verdict: mismatch")
    for line in result.lines[:1]:
        _emit("  " + line)
    return 1


def cmd_fock_verify(args):
    X = _load(args.manifold)
    if X.dim_real % 4:
        raise InputError(
            "fock-verify needs dim_real divisible by 4; %s has dim_real %d"
            % (X.name, X.dim_real)
        )
    _emit("# fock-verify %s max-charge=%d" % (X.name, args.max_charge))
    results = fock.check_relations(X, args.max_charge)
    return 1 if _emit_results(results) else 0


def cmd_verify_all(args):
    X = _load(args.manifold)
    _emit("# verify-all %s order=%s"
          % (X.name, args.order if args.order is not None else "default"))
    results = orbifold.verify_all(X, order=8, fixed_order=args.order)
    return 1 if _emit_results(results) else 0


def cmd_catalog(args):
    if args.action == "list":
        for name in catalog_names():
            _emit(name)
        return 0
    raise InputError("unknown catalog action %r" % (args.action,))


def build_parser():
    parser = argparse.ArgumentParser(
        prog="symprod",
        description="Exact generating-function checks for symmetric products",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("series", help="print one generating series")
    p.add_argument("kind")
    p.add_argument("--manifold", required=True)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--mode", choices=("brute", "closed", "both"),
                   default="closed")
    p.set_defaults(fn=cmd_series)

    p = sub.add_parser("fock-verify",
                       help="check the Heisenberg relations on the Fock basis")
    p.add_argument("--manifold", required=True)
    p.add_argument("--max-charge", type=int, default=3)
    p.set_defaults(fn=cmd_fock_verify)

    p = sub.add_parser("verify-all",
                       help="run every applicable identity check")
    p.add_argument("--manifold", required=True)
    p.add_argument("--order", type=int, default=None)
    p.set_defaults(fn=cmd_verify_all)

    p = sub.add_parser("catalog", help="bundled manifold catalog")
    p.add_argument("action", choices=("list",))
    p.set_defaults(fn=cmd_catalog)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already uses exit code 2 for usage errors
        return exc.code if isinstance(exc.code, int) else 0
    try:
        return args.fn(args)
    except InputError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2
    except (SeriesUsageError, SeriesDomainError, ValueError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2
    except AssertionError as exc:
        sys.stderr.write("verification failure: %s\n" % exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
