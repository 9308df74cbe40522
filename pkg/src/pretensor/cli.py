"""Command-line front end: ``pretensor {info,gr,radical,pseudoring} --input FILE``.

Every run prints one JSON envelope.  Exit codes: 0 success, 2 parse or
validation failure, 3 non-split idempotents, 4 subcategory not closed under
the tensor product, 5 resource cap exceeded.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from typing import Any

from . import __version__
from .algebra import (
    NonSplit,
    NotFiniteDimensional,
    basify,
    cartan_matrix,
    idempotent_diagnostics,
    is_basic,
    validate_algebra,
)
from .io import ParseError, load_json, parse_algebra, parse_pseudoring, parse_subcategory
from .modules import orthogonal_idempotents
from .monoidal import NotClosed, cartan_pseudoring, grothendieck_pseudoring, semigroup_model
from .qlinalg import qstr
from .radical import (
    build_proj_model,
    build_proj_model_from_semigroup,
    category_radical,
    exactness_report,
    module_radical,
    quotient_model,
)
from .zplus import (
    NotNearring,
    TooLarge,
    ZPlusPseudoring,
    cell_decomposition,
    is_discrete_bruteforce,
    is_indecomposable_discrete,
    is_nearring,
    validate_pseudoring,
)

EXIT_OK, EXIT_PARSE, EXIT_NONSPLIT, EXIT_NOTCLOSED, EXIT_CAP = 0, 2, 3, 4, 5


class CapExceeded(Exception):
    pass


class Invalid(Exception):
    pass


def _threads() -> int:
    raw = os.environ.get("PRETENSOR_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise Invalid(f"PRETENSOR_THREADS must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise Invalid("PRETENSOR_THREADS must be a positive integer")
    return n


# ---------------------------------------------------------------------------
# pieces shared by the subcommands


def _discreteness(r: ZPlusPseudoring, max_basis: int) -> dict:
    out: dict[str, Any] = {}
    if r.m <= max_basis:
        bf = is_discrete_bruteforce(r, max_basis)
        out["bruteforce"] = {
            "discrete": bf.discrete,
            "ideals_checked": bf.ideals_checked,
            "witness_ideal": sorted(r.basis[i] for i in bf.ideal) if bf.ideal is not None else None,
            "witness_complement": sorted(r.basis[i] for i in bf.complement) if bf.complement is not None else None,
        }
    else:
        out["bruteforce"] = {"skipped": f"basis size {r.m} exceeds --max-basis {max_basis}"}
    if is_nearring(r).ok:
        out["cells"] = _cells(r)
    else:
        out["cells"] = {"skipped": "not a nearring"}
    verdicts = [v["discrete"] for v in (out["bruteforce"], out["cells"]) if "discrete" in v]
    if len(set(verdicts)) > 1:
        raise AssertionError("discreteness algorithms disagree")
    out["discrete"] = verdicts[0] if verdicts else None
    return out


def _cells(r: ZPlusPseudoring) -> dict:
    cd = cell_decomposition(r)
    pair = cd.asymmetric_pair
    return {
        "discrete": cd.discrete,
        "cells": cd.cell_names(r) if cd.discrete else None,
        "asymmetric_pair": {"leq": r.basis[pair[0]], "not_geq": r.basis[pair[1]]} if pair else None,
    }


def _algebra(data: Any, max_dim: int):
    parsed = parse_algebra(data)
    alg = parsed.algebra
    if alg.dim > max_dim:
        raise CapExceeded(f"algebra dimension {alg.dim} exceeds --max-dim {max_dim}")
    report = validate_algebra(alg)
    if not report.ok:
        raise Invalid(f"invalid algebra: {report.defect} at {report.witness}")
    return parsed


def _matrix(rows) -> list:
    return [[int(x) for x in row] for row in rows]


# ---------------------------------------------------------------------------
# subcommands


def cmd_info(data: Any, args) -> dict:
    parsed = _algebra(data, args.max_dim)
    alg = parsed.algebra
    rad = alg.radical.ideal
    basic = is_basic(alg)
    out: dict[str, Any] = {
        "dim": alg.dim,
        "valid": True,
        "radical_dim": rad.dim,
        "basic": basic,
        "cartan": _matrix(cartan_matrix(alg)),
    }
    if parsed.labels is not None:
        out["basis"] = list(parsed.labels)
    if not basic:
        out["basic_algebra_dim"] = basify(alg)[0].dim
    if args.idempotent:
        idems = orthogonal_idempotents(alg)
        try:
            picks = [int(x) for x in args.idempotent.split(",") if x.strip()]
        except ValueError:
            raise Invalid("--idempotent expects a comma-separated list of 1-based indices") from None
        if any(not 1 <= k <= len(idems) for k in picks) or len(set(picks)) != len(picks):
            raise Invalid(f"--idempotent indices must be distinct and within 1..{len(idems)}")
        e = [sum((idems[k - 1][i] for k in picks), 0) for i in range(alg.dim)]
        out["idempotent"] = {"indices": picks, "vector": [qstr(x) for x in e]}
        out["diagnostics"] = idempotent_diagnostics(alg, e).as_dict()
    return out


def _pseudoring_summary(r: ZPlusPseudoring, max_basis: int) -> dict:
    nr = is_nearring(r)
    disc = _discreteness(r, max_basis)
    return {
        "pseudoring": r.to_json(),
        "nearring": nr.ok,
        "discreteness": disc,
        "indecomposable_discrete": is_indecomposable_discrete(r) if nr.ok else None,
    }


def cmd_gr(data: Any, args) -> dict:
    alg = _algebra(data, args.max_dim).algebra
    if args.subcategory:
        gens, names = parse_subcategory(_read_json(args.subcategory), alg)
        sm = semigroup_model(alg, gens, names)
        out = _pseudoring_summary(sm.pseudoring, args.max_basis)
        out["pipeline"] = "semigroup"
        return out
    gr = grothendieck_pseudoring(alg)
    cp = cartan_pseudoring(alg)
    if gr != cp:
        raise AssertionError("generic and closed-form pseudorings differ")
    out = _pseudoring_summary(gr, args.max_basis)
    out["pipeline"] = "generic"
    out["matches_cartan_formula"] = True
    return out


def cmd_radical(data: Any, args) -> dict:
    alg = _algebra(data, args.max_dim).algebra
    if args.subcategory:
        gens, names = parse_subcategory(_read_json(args.subcategory), alg)
        pm = build_proj_model_from_semigroup(semigroup_model(alg, gens, names))
    else:
        pm = build_proj_model(alg)
    side = {"lr": "two_sided"}.get(args.side, args.side)
    cat = category_radical(pm)
    rad = module_radical(pm, side)
    out: dict[str, Any] = {
        "model": pm.summary(),
        "side": args.side,
        "category_radical_dims": cat.slice_dims(),
        "module_radical_dims": rad.slice_dims(),
        "module_radical_dim": rad.dim,
        "zero": rad.is_zero(),
    }
    sides = ("left",) if side == "left" else ("right",) if side == "right" else ("left", "right")
    q = quotient_model(pm, rad, sides=sides)
    out["quotient"] = {"endo_algebra_dim": q.E.dim, "endo_radical_dim": q.E.radical.ideal.dim}
    if side == "left":
        out["quotient"]["module_radical_dim"] = module_radical(q, "left").dim
    out["exactness"] = exactness_report(pm, args.max_basis).as_dict()
    return out


def cmd_pseudoring(data: Any, args) -> dict:
    r = parse_pseudoring(data)
    report = validate_pseudoring(r)
    if not report.ok:
        raise Invalid(f"invalid pseudoring: {report.defect} at {report.witness}")
    what = args.analysis
    if what == "nearring":
        nr = is_nearring(r)
        return {
            "nearring": nr.ok,
            "failing": r.basis[nr.failing] if nr.failing is not None else None,
            "witnesses": {r.basis[i]: [r.basis[j], r.basis[k]] for i, (j, k) in sorted(nr.witnesses.items())},
        }
    if what == "cells":
        if not is_nearring(r).ok:
            raise Invalid("cell decomposition needs a nearring")
        return _cells(r)
    if r.m > args.max_basis:
        raise CapExceeded(f"basis size {r.m} exceeds --max-basis {args.max_basis}")
    return _discreteness(r, args.max_basis)


COMMANDS = {"info": cmd_info, "gr": cmd_gr, "radical": cmd_radical, "pseudoring": cmd_pseudoring}


# ---------------------------------------------------------------------------
# plumbing


def _read_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return load_json(fh.read())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, help="JSON input file")
    common.add_argument("--format", choices=("json", "pretty"), default="json")
    common.add_argument("--max-dim", type=int, default=64, help="largest algebra dimension accepted")
    common.add_argument("--max-basis", type=int, default=15, help="largest basis for brute-force discreteness")
    common.add_argument("--timing", action="store_true", help="add wall-clock seconds to the envelope")
    p = argparse.ArgumentParser(prog="pretensor", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"pretensor {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    info = sub.add_parser("info", parents=[common], help="dimensions, radical, Cartan matrix")
    info.add_argument("--idempotent", help="comma-separated 1-based idempotent indices to sum")
    gr = sub.add_parser("gr", parents=[common], help="Grothendieck pseudoring of projective bimodules")
    gr.add_argument("--subcategory", help="JSON generator list for a tensor-closed subcategory")
    rad = sub.add_parser("radical", parents=[common], help="module radicals of the projective model")
    rad.add_argument("--side", choices=("left", "right", "lr"), default="left")
    rad.add_argument("--subcategory", help="JSON generator list for a tensor-closed subcategory")
    ps = sub.add_parser("pseudoring", parents=[common], help="combinatorics of a Z+-pseudoring")
    ps.add_argument("analysis", choices=("discreteness", "cells", "nearring"))
    return p


def _params(args) -> dict:
    skip = {"input", "format", "timing", "command"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None}


def _render(envelope: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(envelope, sort_keys=True, indent=2)
    lines = [f"pretensor {envelope['version']}  {envelope['command']}  {envelope['input_digest'][:19]}"]

    def walk(obj, prefix=""):
        if isinstance(obj, dict):
            for k in sorted(obj):
                walk(obj[k], f"{prefix}{k}.")
        else:
            lines.append(f"  {prefix[:-1]}: {json.dumps(obj)}")

    walk(envelope.get("result", envelope.get("error")))
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_PARSE
    envelope: dict[str, Any] = {"tool": "pretensor", "version": __version__, "command": args.command}
    start = time.perf_counter()
    code = EXIT_OK
    try:
        _threads()
        try:
            with open(args.input, "rb") as fh:
                raw = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {args.input}: {exc}") from exc
        envelope["input_digest"] = "sha256:" + hashlib.sha256(raw).hexdigest()
        envelope["params"] = _params(args)
        data = load_json(raw.decode("utf-8", errors="replace"))
        envelope["result"] = COMMANDS[args.command](data, args)
    except (ParseError, Invalid, NotNearring, IndexError) as exc:
        code, kind = EXIT_PARSE, type(exc).__name__
        envelope["error"] = {"type": kind, "message": str(exc)}
    except NonSplit as exc:
        code = EXIT_NONSPLIT
        envelope["error"] = {"type": "NonSplit", "message": str(exc)}
    except NotClosed as exc:
        code = EXIT_NOTCLOSED
        envelope["error"] = {"type": "NotClosed", "message": str(exc.args[0]) if exc.args else ""}
    except (TooLarge, CapExceeded, NotFiniteDimensional) as exc:
        code = EXIT_CAP
        envelope["error"] = {"type": type(exc).__name__, "message": str(exc)}
    except ValueError as exc:
        code = EXIT_PARSE
        envelope["error"] = {"type": type(exc).__name__, "message": str(exc)}
    envelope.setdefault("input_digest", None)
    envelope.setdefault("params", _params(args))
    if args.timing:
        envelope["timing_seconds"] = round(time.perf_counter() - start, 6)
    print(_render(envelope, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
