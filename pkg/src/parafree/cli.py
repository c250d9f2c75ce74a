"""Command-line surface: verify, family, search, classify, poly.

Output is JSON lines on stdout (one self-contained object per line),
diagnostics on stderr.  Exit codes: 0 success with a result, 1 success
with no result (no hits / not a half-relation), 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction
from typing import Optional, Sequence

from .exact import ExpWord, eval_word, format_rational, parse_rational
from .families import family_instance, family_n, instance_witness
from .freeness import SearchEffort, classify_tau
from .halfrel import (
    RelationKind,
    RelationWitness,
    build_relation,
    classify_signs,
    defect,
    poly_hr,
)
from .search import SearchQuery, SignMode, search_half_relations

WORKERS_ENV = "PARAFREE_WORKERS"


class InputError(Exception):
    pass


def _parse_seq(text: str) -> tuple[int, ...]:
    try:
        seq = tuple(int(part.strip()) for part in text.split(","))
    except ValueError:
        raise InputError(f"malformed integer sequence {text!r}") from None
    if not seq:
        raise InputError("empty sequence")
    return seq


def _parse_tau(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _parse_k_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise InputError(f"malformed k range {text!r} (expected 'lo..hi')")
    try:
        return range(int(lo), int(hi) + 1)
    except ValueError:
        raise InputError(f"malformed k range {text!r}") from None


def _word_json(word: ExpWord) -> dict:
    return {"start": word.start, "exponents": list(word.exponents)}


def _matrix_json(m) -> list[list[str]]:
    return [
        [format_rational(m.e11), format_rational(m.e12)],
        [format_rational(m.e21), format_rational(m.e22)],
    ]


def _witness_json(w: RelationWitness) -> dict:
    return {
        "tau": format_rational(w.tau),
        "word_tau": format_rational(w.word_tau),
        "lhs": _word_json(w.lhs),
        "rhs": _word_json(w.rhs),
        "kind": w.kind.value,
        "verified": w.verified,
    }


class Emitter:
    """JSON-lines by default; --table renders aligned key/value rows."""

    def __init__(self, table: bool) -> None:
        self.table = table
        self._rows: list[dict] = []

    def emit(self, record: dict) -> None:
        if self.table:
            self._rows.append(record)
        else:
            print(json.dumps(record, separators=(", ", ": ")))

    def flush(self) -> None:
        if not self.table or not self._rows:
            return
        flat = [_flatten(r) for r in self._rows]
        cols: list[str] = []
        for row in flat:
            for key in row:
                if key not in cols:
                    cols.append(key)
        widths = {c: max(len(c), *(len(str(r.get(c, ""))) for r in flat)) for c in cols}
        print("  ".join(c.ljust(widths[c]) for c in cols))
        for row in flat:
            print("  ".join(str(row.get(c, "")).ljust(widths[c]) for c in cols))


def _flatten(record: dict, prefix: str = "") -> dict:
    out = {}
    for key, value in record.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            out.update(_flatten(value, f"{name}."))
        else:
            out[name] = json.dumps(value) if isinstance(value, list) else value
    return out


def cmd_verify(args, emit: Emitter) -> int:
    tau = _parse_tau(args.tau)
    seq = _parse_seq(args.seq)
    d = defect(seq, tau)
    ok = d == 0
    kind = classify_signs(seq)
    result = {
        "defect": format_rational(d),
        "is_half_relation": ok,
        "kind": kind.value,
    }
    if ok and tau != 0 and kind is not RelationKind.TRIVIAL:
        witness = build_relation(seq, tau)
        result["lhs"] = _word_json(witness.lhs)
        result["rhs"] = _word_json(witness.rhs)
        result["matrix"] = _matrix_json(eval_word(witness.lhs, tau))
    emit.emit({
        "command": "verify",
        "inputs": {"tau": format_rational(tau), "seq": list(seq)},
        "result": result,
        "verified": ok,
    })
    return 0 if ok else 1


def cmd_family(args, emit: Emitter) -> int:
    name = args.name.lower()
    base = {"a": "A", "b": "B", "d": "D", "e": "E"}.get(name)
    if name == "c":
        base = {"general": "C_general", "even": "C_even", "quad": "C_quad"}[
            args.variant or "general"
        ]
    if base is None:
        raise InputError(f"unknown family {args.name!r}")
    sigma = None
    if args.sigma is not None:
        parts = _parse_seq(args.sigma)
        if len(parts) != 2:
            raise InputError("sigma must be two comma-separated values")
        sigma = parts
    if args.k is not None:
        ks: Sequence[int] = [args.k]
    elif args.k_range is not None:
        ks = _parse_k_range(args.k_range)
    else:
        raise InputError("one of --k or --k-range is required")
    emitted = False
    for k in ks:
        try:
            inst = family_instance(base, k, sigma=sigma, x=args.x)
        except ValueError as exc:
            if args.k is not None:
                raise InputError(str(exc)) from None
            continue  # skip excluded k inside an explicit range sweep
        witness = instance_witness(inst)
        result = {
            "tau": format_rational(inst.tau),
            "candidate": list(inst.candidate),
            "exceptional": inst.exceptional,
            "kind": inst.kind.value,
            "witness": _witness_json(witness),
        }
        if base == "B":
            result["n"] = family_n(inst.sigma, k)
        record = {
            "command": "family",
            "inputs": {"name": base, "k": k, "sigma": list(sigma) if sigma else None,
                       "x": inst.x},
            "result": result,
            "verified": witness.verified,
        }
        emit.emit(record)
        emitted = True
    return 0 if emitted else 1


_SIGN_MODES = {
    "nonzero": SignMode.NONZERO_ANY,
    "positive": SignMode.ALL_POSITIVE,
    "alternating": SignMode.ALTERNATING,
}


def cmd_search(args, emit: Emitter) -> int:
    tau = _parse_tau(args.tau)
    try:
        query = SearchQuery(
            tau,
            args.max_len,
            args.bound,
            _SIGN_MODES[args.signs],
            args.limit,
        )
    except ValueError as exc:
        raise InputError(str(exc)) from None
    started = time.monotonic()
    report = search_half_relations(query, workers=args.workers)
    elapsed = time.monotonic() - started
    inputs = {
        "tau": format_rational(tau),
        "max_len": args.max_len,
        "bound": args.bound,
        "signs": args.signs,
        "workers": args.workers,
    }
    for hit in report.hits:
        emit.emit({
            "command": "search",
            "inputs": inputs,
            "result": {"hit": list(hit)},
            "verified": True,
        })
    emit.emit({
        "command": "search",
        "inputs": inputs,
        "result": {
            "hit_count": len(report.hits),
            "exhausted": report.exhausted,
            "elapsed_s": round(elapsed, 3),
        },
        "verified": True,
    })
    return 0 if report.hits else 1


def cmd_classify(args, emit: Emitter) -> int:
    tau = _parse_tau(args.tau)
    effort = SearchEffort(max_len=args.max_len, bound=args.bound, workers=args.workers)
    cls = classify_tau(tau, effort)
    result = {
        "group_status": cls.group_status,
        "group_witness": _witness_json(cls.group_witness) if cls.group_witness else None,
        "semigroup_status": cls.semigroup_status,
        "semigroup_witness": (
            _witness_json(cls.semigroup_witness) if cls.semigroup_witness else None
        ),
        "effort": {"max_len": effort.max_len, "bound": effort.bound},
    }
    emit.emit({
        "command": "classify",
        "inputs": {"tau": format_rational(tau)},
        "result": result,
        "verified": cls.group_witness is not None or cls.semigroup_witness is not None,
    })
    return 0


def cmd_poly(args, emit: Emitter) -> int:
    seq = _parse_seq(args.seq)
    poly = poly_hr(seq)
    emit.emit({
        "command": "poly",
        "inputs": {"seq": list(seq)},
        "result": {
            "coefficients": list(poly.coeffs),
            "rendering": poly.render(),
        },
        "verified": True,
    })
    return 0


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parafree",
        description="Exact verification and discovery of non-freeness "
        "certificates for pairs of parabolic 2x2 matrices.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--table", action="store_true",
                        help="render aligned tables instead of JSON lines")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common],
                       help="check a candidate half-relation")
    p.add_argument("--tau", required=True)
    p.add_argument("--seq", required=True, help="comma-separated exponents")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("family", parents=[common], help="generate family instances")
    p.add_argument("--name", required=True, choices=["a", "b", "c", "d", "e"])
    p.add_argument("--k", type=int)
    p.add_argument("--k-range", dest="k_range", help="inclusive range lo..hi")
    p.add_argument("--sigma", help="two comma-separated values in {1,2,3} (family b)")
    p.add_argument("--variant", choices=["general", "even", "quad"],
                   help="family c variant (default general)")
    p.add_argument("--x", type=int, help="free trailing exponent (families c, e)")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("search", parents=[common], help="bounded exhaustive half-relation search")
    p.add_argument("--tau", required=True)
    p.add_argument("--max-len", dest="max_len", type=int, default=4)
    p.add_argument("--bound", type=int, default=8)
    p.add_argument("--signs", choices=sorted(_SIGN_MODES), default="nonzero")
    p.add_argument("--limit", type=int, default=1000)
    p.add_argument("--workers", type=int, default=_default_workers())
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("classify", parents=[common], help="classify a rational tau")
    p.add_argument("--tau", required=True)
    p.add_argument("--max-len", dest="max_len", type=int, default=4)
    p.add_argument("--bound", type=int, default=8)
    p.add_argument("--workers", type=int, default=_default_workers())
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("poly", parents=[common], help="print the factored defect polynomial")
    p.add_argument("--seq", required=True)
    p.set_defaults(func=cmd_poly)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    emit = Emitter(args.table)
    try:
        code = args.func(args, emit)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    emit.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
