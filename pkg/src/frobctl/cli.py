"""``frobctl`` command-line front end.

Exit codes: 0 success, 1 a verified identity failed, 2 usage error,
3 a resource cap was hit.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from dataclasses import dataclass, field

from . import charring, lspaths
from .cache import CharacterCache
from .charring import _check_prime
from .errors import ConfigurationError, DomainError, PreconditionError, ResourceError
from .filtration import contraction_multiplicities, signed_sum_multiplicity
from .rootdata import WEYL_ORDER_LIMIT, build_root_datum
from . import suites

log = logging.getLogger("frobctl")

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


def parse_weight(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated weight: {text!r}") from None


def parse_primes(text: str) -> tuple[int, ...]:
    return parse_weight(text)


@dataclass
class JobConfig:
    command: str
    type_label: str | None = None
    rank: int | None = None
    p: int | None = None
    r: int = 1
    s: int = 1
    lam: tuple[int, ...] | None = None
    mu: tuple[int, ...] | None = None
    max_coord: int | None = None
    min_coord: int | None = None
    primes: tuple[int, ...] = ()
    orbit_cap: int = WEYL_ORDER_LIMIT
    path_cap: int = lspaths.STREAM_CAP
    grid_cap: int = suites.GRID_CAP
    output_format: str = "json"
    cache_dir: str | None = None
    jobs: int = 1
    extra: dict = field(default_factory=dict)

    def validate(self) -> None:
        for name in ("orbit_cap", "path_cap", "grid_cap", "jobs"):
            if getattr(self, name) <= 0:
                raise ConfigurationError(f"--{name.replace('_', '-')} must be positive")
        if self.p is not None:
            _check_prime(self.p)
        for q in self.primes:
            _check_prime(q)
        if self.max_coord is not None and self.max_coord < 0 and self.command != "hatnabla":
            raise ConfigurationError("--max-coord must be non-negative")
        if self.type_label is not None:
            datum = build_root_datum(self.type_label, self.rank)
            if datum.weyl_order > self.orbit_cap:
                raise ResourceError(f"|W({datum.label})| = {datum.weyl_order} exceeds --orbit-cap {self.orbit_cap}")
            for w in (self.lam, self.mu):
                if w is not None and len(w) != datum.rank:
                    raise ConfigurationError(f"weight {w} does not have rank {datum.rank}")

    @property
    def datum(self):
        return build_root_datum(self.type_label, self.rank)


def _common(parser: argparse.ArgumentParser) -> None:
    g = parser.add_argument_group("common options")
    g.add_argument("--format", dest="output_format", choices=("json", "csv"), default="json")
    g.add_argument("--cache-dir", default=None, help="character cache directory (default: $FROBCTL_CACHE)")
    g.add_argument("--jobs", type=int, default=None, help="worker processes (default: available cores)")
    g.add_argument("--orbit-cap", type=int, default=WEYL_ORDER_LIMIT)
    g.add_argument("--path-cap", type=int, default=lspaths.STREAM_CAP)
    g.add_argument("--grid-cap", type=int, default=suites.GRID_CAP)
    g.add_argument("--report", default=None, help="write the full JSON report of a suite to this file")
    g.add_argument("-v", "--verbose", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="frobctl", description="Frobenius contraction of characters and related checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_, *, typ=True, p=True, lam=False, mu=False):
        sp = sub.add_parser(name, help=help_)
        if typ:
            sp.add_argument("--type", dest="type_label", required=True, help="root system, e.g. G2")
        if p:
            sp.add_argument("--p", type=int, required=True)
        if lam:
            sp.add_argument("--lambda", dest="lam", type=parse_weight, required=True)
        if mu:
            sp.add_argument("--mu", type=parse_weight, required=True)
        _common(sp)
        return sp

    add("contract", "good-filtration multiplicities of a contracted dual Weyl module", lam=True)
    add("signed-sum", "alternating Weyl-orbit sum for one (lambda, mu)", lam=True, mu=True)
    sp = add("ls-count", "count (p-1)rho-dominant LS paths ending at p*mu", lam=True, mu=True)
    sp.add_argument("--dump", default=None, help="write the path model of lambda as JSON")
    for name, help_ in (("agree", "four-way agreement grid"), ("adjoint", "adjunction identity grid")):
        sp = add(name, help_)
        sp.add_argument("--max-coord", type=int, required=True)
    add("bound", "weight bound for restricted simple modules")
    sp = add("hatnabla", "nonnegativity of induced G_rT characters after contraction")
    sp.add_argument("--r", type=int, default=2)
    sp.add_argument("--s", type=int, default=1)
    sp.add_argument("--min-coord", type=int, default=None)
    sp.add_argument("--max-coord", type=int, default=None)
    sp = add("oracle", "SL2 brute-force checks over F_p", typ=False, p=False)
    sp.add_argument("--p", dest="primes", type=parse_primes, default=(2, 3, 5))
    sp.add_argument("--max-n", type=int, default=20)
    sp.add_argument("--max-ab", type=int, default=12)
    sp = add("char", "dump a Weyl, Euler or Steinberg character", p=False)
    sp.add_argument("--kind", choices=("weyl", "euler", "steinberg"), default="weyl")
    sp.add_argument("--lambda", dest="lam", type=parse_weight, default=None)
    sp.add_argument("--p", type=int, default=None)
    sp.add_argument("--r", type=int, default=1)
    return parser


def _config(ns: argparse.Namespace) -> JobConfig:
    jobs = ns.jobs if ns.jobs is not None else suites.default_jobs()
    cfg = JobConfig(
        command=ns.command,
        type_label=getattr(ns, "type_label", None),
        p=getattr(ns, "p", None),
        r=getattr(ns, "r", 1),
        s=getattr(ns, "s", 1),
        lam=getattr(ns, "lam", None),
        mu=getattr(ns, "mu", None),
        max_coord=getattr(ns, "max_coord", None),
        min_coord=getattr(ns, "min_coord", None),
        primes=getattr(ns, "primes", ()),
        orbit_cap=ns.orbit_cap,
        path_cap=ns.path_cap,
        grid_cap=ns.grid_cap,
        output_format=ns.output_format,
        cache_dir=ns.cache_dir or os.environ.get("FROBCTL_CACHE") or None,
        jobs=jobs,
    )
    cfg.validate()
    return cfg


def _emit_rows(out, cfg: JobConfig, obj: dict, rows: list[tuple], header=("mu_coords", "mult")) -> None:
    if cfg.output_format == "json":
        out.write(json.dumps(obj, sort_keys=True) + "\n")
        return
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for coords, m in rows:
        writer.writerow([",".join(str(x) for x in coords), m])
    out.write(buf.getvalue())


def _finish_suite(out, ns, report: suites.SuiteReport) -> int:
    if ns.report:
        with open(ns.report, "w", encoding="utf-8") as fh:
            json.dump(report.to_json(), fh, sort_keys=True)
    for failure in report.failures[:20]:
        print(f"failure: {json.dumps(failure, sort_keys=True)}", file=sys.stderr)
    out.write(report.summary() + "\n")
    return EXIT_OK if report.ok else EXIT_FAILED


def _dispatch(cfg: JobConfig, ns: argparse.Namespace, out) -> int:
    cmd = cfg.command
    if cmd == "oracle":
        return _finish_suite(out, ns, suites.oracle_suite(cfg.primes or (2, 3, 5), ns.max_n, ns.max_ab))

    datum = cfg.datum
    if cmd == "contract":
        table = contraction_multiplicities(datum, cfg.p, cfg.lam)
        _emit_rows(out, cfg, table.to_json(), table.sorted_rows())
        return EXIT_OK
    if cmd in ("signed-sum", "ls-count"):
        if cmd == "signed-sum":
            value = signed_sum_multiplicity(datum, cfg.p, cfg.lam, cfg.mu)
        else:
            counts = lspaths.dominant_path_counts(datum, cfg.p, cfg.lam, cap=cfg.path_cap)
            value = counts.get(cfg.mu, 0)
            if ns.dump:
                paths = lspaths.generate_path_model(datum, cfg.lam, cap=cfg.path_cap)
                with open(ns.dump, "w", encoding="utf-8") as fh:
                    json.dump(lspaths.path_model_dump(paths), fh)
        obj = {"type": datum.label, "p": cfg.p, "lambda": list(cfg.lam), "mu": list(cfg.mu), "mult": value}
        _emit_rows(out, cfg, obj, [(cfg.mu, value)])
        return EXIT_OK
    if cmd == "agree":
        report = suites.agreement_suite(datum, cfg.p, cfg.max_coord, jobs=cfg.jobs, path_cap=cfg.path_cap, grid_cap=cfg.grid_cap)
        bad_paths = suites.path_soundness(report)
        for d in bad_paths:
            report.failures.append({"lambda": d["lambda"], "reason": "path model does not realize the character"})
        return _finish_suite(out, ns, report)
    if cmd == "adjoint":
        return _finish_suite(out, ns, suites.adjunction_suite(datum, cfg.p, cfg.max_coord, cfg.grid_cap))
    if cmd == "hatnabla":
        lo = cfg.min_coord if cfg.min_coord is not None else -2 * cfg.p
        hi = cfg.max_coord if cfg.max_coord is not None else 2 * cfg.p
        return _finish_suite(out, ns, suites.hatnabla_suite(datum, cfg.p, cfg.r, cfg.s, lo, hi, cfg.grid_cap))
    if cmd == "bound":
        from .filtration import semisimplicity_bound_report

        report = semisimplicity_bound_report(datum, cfg.p)
        rows = [(v[1], v[2]) for v in report.violations]
        _emit_rows(out, cfg, report.to_json(), rows, header=("mu_coords", "pairing"))
        return EXIT_OK if report.empty else EXIT_FAILED
    if cmd == "char":
        if ns.kind == "steinberg":
            if cfg.p is None:
                raise ConfigurationError("--p is required for --kind steinberg")
            ch = charring.steinberg_character(datum, cfg.p, cfg.r)
        else:
            if cfg.lam is None:
                raise ConfigurationError("--lambda is required")
            fn = charring.weyl_character if ns.kind == "weyl" else charring.euler_character
            ch = fn(datum, cfg.lam)
        _emit_rows(out, cfg, ch.to_json(), sorted(ch.items()), header=("weight_coords", "mult"))
        return EXIT_OK
    raise ConfigurationError(f"unknown command {cmd}")


def run(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING, format="%(name)s: %(message)s")
    try:
        cfg = _config(ns)
        if cfg.cache_dir:
            charring.use_disk_cache(CharacterCache(cfg.cache_dir))
        return _dispatch(cfg, ns, out)
    except ResourceError as exc:
        print(f"frobctl: resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ConfigurationError, PreconditionError, DomainError) as exc:
        print(f"frobctl: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        charring.use_disk_cache(None)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
