"""Command-line front end: ``symqm poincare | states | verify``.

Exit codes: 0 success, 1 failed verification check, 2 invalid arguments,
3 method or size bound violated.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import os
import sys
import time
from dataclasses import dataclass, replace
from pathlib import Path

from . import __version__
from .grassmann import indices_of, render
from .liealg import build_su_basis
from .poincare import PoincarePolynomial, su_factored
from .scalars import format_gq

log = logging.getLogger("symqm")

METHODS = ("exterior", "cohomology", "weyl-ct", "closed", "unconstrained", "quadrature")
EXPENSIVE = ("exterior", "cohomology")
CACHE_ENV = "SYMQM_CACHE_DIR"
CLOSED_NOTE = "closed-form product formula, not an independent computation"


class BoundError(Exception):
    """Requested computation exceeds the configured size bound."""


@dataclass
class RunConfig:
    n: int
    method: str = "closed"
    fmt: str = "table"
    cache_dir: Path | None = None
    max_n_exterior: int = 4
    convention: str = "plus"
    verbosity: int = 0

    def check_bound(self, method: str | None = None):
        method = method or self.method
        if method in EXPENSIVE and self.n > self.max_n_exterior:
            raise BoundError(
                f"method {method!r} limited to N <= {self.max_n_exterior} (exterior algebra has 2^{self.n**2 - 1} monomials)"
            )


class ResultCache:
    """JSON files keyed by a hash of the request and the code version."""

    def __init__(self, root: Path | None):
        self.root = Path(root) if root else None

    def _path(self, params: dict) -> Path:
        blob = json.dumps({**params, "version": __version__}, sort_keys=True).encode()
        digest = hashlib.sha256(blob).hexdigest()[:20]
        return self.root / f"{params['method']}-su{params['n']}-{__version__}-{digest}.json"

    def get(self, params: dict):
        if self.root is None:
            return None
        path = self._path(params)
        if path.exists():
            log.debug("cache hit %s", path)
            return json.loads(path.read_text())
        return None

    def put(self, params: dict, value):
        if self.root is None:
            return
        self.root.mkdir(parents=True, exist_ok=True)
        self._path(params).write_text(json.dumps(value, sort_keys=True))


def compute_poincare(config: RunConfig) -> PoincarePolynomial:
    config.check_bound()
    method, n = config.method, config.n
    if method == "closed":
        from .weyl import poincare_closed_form

        return poincare_closed_form(n)
    if method == "unconstrained":
        from .weyl import unconstrained_poincare

        return unconstrained_poincare(n)
    if method == "weyl-ct":
        from .weyl import poincare_via_ct

        return poincare_via_ct(n, config.convention)
    if method == "quadrature":
        from .weyl import quadrature_check

        res = quadrature_check(n, convention=config.convention)
        if res.rounded is None:
            raise ArithmeticError(f"quadrature did not round cleanly (deviation {res.max_deviation:.2e})")
        return res.rounded
    cache = ResultCache(config.cache_dir)
    params = {"n": n, "method": method, "kind": "rational"}
    hit = cache.get(params)
    if hit is not None:
        return PoincarePolynomial(tuple(hit))
    basis = build_su_basis(n)
    if method == "exterior":
        from .vacuum import betti_via_singlets

        result = betti_via_singlets(basis)
    elif method == "cohomology":
        from .cohomology import betti_via_cohomology

        result = betti_via_cohomology(basis)
    else:
        raise ValueError(f"unknown method {method!r}")
    cache.put(params, list(result))
    return result


def dumps(report: dict) -> str:
    """Canonical machine form: sorted keys, compact separators, ASCII only."""
    return json.dumps(report, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def cmd_poincare(config: RunConfig) -> tuple[dict, int]:
    t0 = time.perf_counter()
    poly = compute_poincare(config)
    if config.method == "unconstrained":
        factored = f"(1+t)^{config.n**2 - 1}"
    elif config.method in ("weyl-ct", "quadrature") and config.convention == "paper-minus":
        factored = su_factored(config.n, "-")
    else:
        factored = su_factored(config.n)
    report = {
        "group": "su",
        "n": config.n,
        "method": config.method,
        "betti": list(poly),
        "factored": factored,
        "checks": [],
        "timing_ms": int((time.perf_counter() - t0) * 1000),
    }
    if config.method in ("weyl-ct", "quadrature"):
        report["convention"] = config.convention
    if config.method == "closed":
        report["note"] = CLOSED_NOTE
    return report, 0


def cmd_states(config: RunConfig, degree: int) -> tuple[dict, int]:
    from .vacuum import vacuum_states

    config.check_bound("exterior")
    t0 = time.perf_counter()
    basis = build_su_basis(config.n)
    if not 0 <= degree <= basis.dim:
        raise ValueError(f"degree must lie in 0..{basis.dim}")
    states = []
    for label, mv in vacuum_states(basis, degree):
        terms = [{"indices": indices_of(m), "coeff": format_gq(mv.terms[m])} for m in sorted(mv.terms)]
        states.append({"label": label, "terms": terms, "text": render(mv)})
    report = {
        "group": "su",
        "n": config.n,
        "method": "exterior",
        "degree": degree,
        "states": states,
        "factored": su_factored(config.n),
        "checks": [],
        "timing_ms": int((time.perf_counter() - t0) * 1000),
    }
    return report, 0


def cmd_verify(config: RunConfig) -> tuple[dict, int]:
    from .checks import run_all

    config.check_bound("exterior")
    t0 = time.perf_counter()
    # the two expensive oracles go through the result cache
    known = {
        "singlets": compute_poincare(replace(config, method="exterior")),
        "cohomology": compute_poincare(replace(config, method="cohomology")),
    }
    checks = run_all(config.n, known)
    report = {
        "group": "su",
        "n": config.n,
        "method": "verify",
        "betti": list(known["singlets"]),
        "factored": su_factored(config.n),
        "checks": [c.as_dict() for c in checks],
        "timing_ms": int((time.perf_counter() - t0) * 1000),
    }
    return report, 0 if all(c.passed for c in checks) else 1


def format_table(report: dict) -> str:
    lines = [f"SU({report['n']})  method={report['method']}  {report['factored']}"]
    if report.get("note"):
        lines.append(f"note: {report['note']}")
    if "states" in report:
        lines.append(f"degree {report['degree']}: {len(report['states'])} vacuum state(s)")
        for st in report["states"]:
            lines.append(f"  {st['label']}")
            lines.append(f"    {st['text']}")
    if report.get("betti"):
        lines.append(" k  b_k")
        for k, b in enumerate(report["betti"]):
            lines.append(f"{k:2d}  {b}")
    for c in report.get("checks", []):
        lines.append(f"[{c['status'].upper()}] {c['name']}: {c['detail']}")
    lines.append(f"time: {report['timing_ms']} ms")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, required=True, help="group parameter N of SU(N), N >= 2")
    common.add_argument("--format", dest="fmt", choices=("table", "json"), default="table")
    common.add_argument("--cache-dir", type=Path, default=None, help=f"result cache (default ${CACHE_ENV})")
    common.add_argument("--max-n-exterior", type=int, default=4)
    common.add_argument("--convention", choices=("plus", "paper-minus"), default="plus")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(prog="symqm", description="Vacuum states of SU(N) supersymmetric matrix quantum mechanics")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("poincare", parents=[common], help="Poincare polynomial by a chosen method")
    p.add_argument("--method", choices=METHODS, default="closed")
    s = sub.add_parser("states", parents=[common], help="vacuum basis in one fermion sector")
    s.add_argument("--degree", type=int, required=True)
    sub.add_parser("verify", parents=[common], help="run the invariant checks")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.n < 2:
        parser.error("--n must be at least 2")
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2), format="%(levelname)s %(message)s")
    cache_dir = args.cache_dir or (Path(os.environ[CACHE_ENV]) if os.environ.get(CACHE_ENV) else None)
    config = RunConfig(
        n=args.n,
        method=getattr(args, "method", "closed"),
        fmt=args.fmt,
        cache_dir=cache_dir,
        max_n_exterior=args.max_n_exterior,
        convention=args.convention,
        verbosity=args.verbose,
    )
    try:
        if args.command == "poincare":
            report, code = cmd_poincare(config)
        elif args.command == "states":
            report, code = cmd_states(config, args.degree)
        else:
            report, code = cmd_verify(config)
    except BoundError as exc:
        print(f"symqm: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"symqm: {exc}", file=sys.stderr)
        return 2
    print(dumps(report) if config.fmt == "json" else format_table(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
