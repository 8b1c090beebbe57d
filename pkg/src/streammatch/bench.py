"""Experiment runner, diagnostics, report emission, and the CLI.

An experiment is (instance, algorithm, params, trials, base seed): trial i
shuffles the instance with ``base_seed + i``, runs the algorithm, computes
the exact maximum matching size for the ratio, and records sizes, memory
peak, recursion depth, runtime, and flags. Reports are reproducible from
the config alone; runtime fields are excluded from that guarantee.

CLI::

    streammatch run --algo bm-farg --instance konrad:2000 --trials 20 --seed 1
    streammatch gen --instance planted:64,0.1 --out inst.txt
    streammatch oracle inst.txt
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import math
import statistics
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .augmenters import AugmenterParams
from .core import Edge, Graph, Matching
from .exact import max_matching_bipartite, max_matching_general
from .generators import (
    gen_konrad_hard,
    gen_planted_bipartite,
    gen_random_general,
    load_edgelist,
    save_edgelist,
)
from .greedy import GreedyMatcher
from .pipelines import RunArtifacts, bipartite_pipeline, general_pipeline
from .stream import MemoryMeter, segment_of_fraction, shuffle

ALGOS = ("greedy", "bm-barg", "bm-farg", "gm")


@dataclass(frozen=True)
class ExperimentConfig:
    instance: str
    algo: str
    trials: int = 1
    base_seed: int = 0
    params: AugmenterParams = field(default_factory=AugmenterParams)
    budget: int | None = None
    diagnostics: bool = False

    def __post_init__(self):
        if self.algo not in ALGOS:
            raise ValueError(f"algo must be one of {ALGOS}, got {self.algo!r}")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")

    def to_dict(self) -> dict[str, Any]:
        d = dataclasses.asdict(self)
        d["params"] = dataclasses.asdict(self.params)
        return d

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "ExperimentConfig":
        d = dict(d)
        d["params"] = AugmenterParams(**d["params"])
        return cls(**d)


@dataclass
class TrialRecord:
    seed: int
    matching_size: int
    mu_exact: int
    ratio: float
    peak_edges: int
    recursion_depth: int
    runtime_ms: float
    flags: tuple[str, ...] = ()
    diagnostics: dict[str, Any] | None = None


@dataclass
class RunReport:
    config: ExperimentConfig
    trials: list[TrialRecord]
    aggregates: dict[str, float]

    def to_dict(self) -> dict[str, Any]:
        return {
            "config": self.config.to_dict(),
            "trials": [dataclasses.asdict(t) for t in self.trials],
            "aggregates": dict(self.aggregates),
        }


def build_instance(spec: str) -> Graph:
    """Parse ``konrad:<n> | planted:<n>,<p> | gnp:<n>,<p> | file:<path>``."""
    kind, _, arg = spec.partition(":")
    try:
        if kind == "konrad":
            return gen_konrad_hard(int(arg))
        if kind == "planted":
            n, p = arg.split(",")
            return gen_planted_bipartite(int(n), float(p), seed=0)
        if kind == "gnp":
            n, p = arg.split(",")
            return gen_random_general(int(n), float(p), seed=0)
        if kind == "file":
            return load_edgelist(arg)
    except ValueError as exc:
        raise ValueError(f"bad instance spec {spec!r}: {exc}") from None
    raise ValueError(f"unknown instance kind {kind!r} in {spec!r}")


def exact_size(g: Graph) -> int:
    if g.bipartition is not None:
        return len(max_matching_bipartite(g.edges, g.bipartition))
    return len(max_matching_general(g.edges))


_MU_CACHE: dict[str, int] = {}


def _mu_for(spec: str, g: Graph) -> int:
    if spec not in _MU_CACHE:
        _MU_CACHE[spec] = exact_size(g)
    return _MU_CACHE[spec]


def _run_greedy(stream, meter) -> tuple[Matching, RunArtifacts]:
    g = GreedyMatcher(meter)
    for e in stream.iterate(stream.remaining()):
        g.offer(e)
    m = g.matching
    flags = ("budget_exceeded",) if meter.budget_exceeded else ()
    art = RunArtifacts(
        m0_size=len(m),
        t_size=0,
        r_size=0,
        final_size=len(m),
        peak_edges=meter.stored_peak,
        recursion_depth=0,
        flags=flags,
        m0_edges=m.edge_set(),
    )
    return m, art


def run_trial(g: Graph, config: ExperimentConfig, seed: int) -> tuple[Matching, RunArtifacts, Any]:
    stream = shuffle(g, seed)
    meter = MemoryMeter(budget=config.budget)
    if config.algo == "greedy":
        matching, art = _run_greedy(stream, meter)
    elif config.algo in ("bm-barg", "bm-farg"):
        matching, art = bipartite_pipeline(
            stream, config.params, augmenter=config.algo.split("-")[1], meter=meter
        )
    else:
        matching, art = general_pipeline(stream, config.params, augmenter="farg", meter=meter)
    return matching, art, stream


def run_experiment(config: ExperimentConfig) -> RunReport:
    g = build_instance(config.instance)
    mu = _mu_for(config.instance, g)
    records = []
    for i in range(config.trials):
        seed = config.base_seed + i
        t0 = time.perf_counter()
        matching, art, stream = run_trial(g, config, seed)
        runtime_ms = (time.perf_counter() - t0) * 1e3
        size = len(matching)
        if not 0 <= size <= mu:
            raise AssertionError(f"matching size {size} outside [0, mu={mu}]")
        diag = None
        if config.diagnostics:
            diag = compute_diagnostics(g, config, art, stream)
        records.append(
            TrialRecord(
                seed=seed,
                matching_size=size,
                mu_exact=mu,
                ratio=size / mu if mu else 1.0,
                peak_edges=art.peak_edges,
                recursion_depth=art.recursion_depth,
                runtime_ms=runtime_ms,
                flags=art.flags,
                diagnostics=diag,
            )
        )
    ratios = [r.ratio for r in records]
    peaks = sorted(r.peak_edges for r in records)
    p95 = peaks[max(0, math.ceil(0.95 * len(peaks)) - 1)]
    aggregates = {
        "mean_ratio": statistics.fmean(ratios),
        "min_ratio": min(ratios),
        "p95_peak_edges": float(p95),
    }
    return RunReport(config=config, trials=records, aggregates=aggregates)


def compute_diagnostics(
    g: Graph, config: ExperimentConfig, art: RunArtifacts, stream
) -> dict[str, Any]:
    """Analysis-only quantities measured against one fixed exact matching.

    The optimal matching is oracle-computed and non-unique, so the derived
    fractions depend on that fixed choice. Wing-related counts use the
    final recursion level's components. For the general pipeline the
    bipartite-view lower bound mu(G') >= 2|M*1| - 2|M0| is evaluated
    against an exact matching of the remaining (post-prefix) stream, which
    is the form in which it is guaranteed.
    """
    if g.bipartition is not None:
        mstar = max_matching_bipartite(g.edges, g.bipartition)
    else:
        mstar = max_matching_general(g.edges)
    mu = len(mstar)
    m0 = art.m0_edges
    m0_verts = {v for e in m0 for v in e}
    m1_star = [e for e in mstar if e[0] in m0_verts or e[1] in m0_verts]
    m2_star = [e for e in mstar if not (e[0] in m0_verts or e[1] in m0_verts)]
    if len(m1_star) + len(m2_star) != mu:
        raise AssertionError("optimal matching not partitioned by incidence")
    if not len(m0) <= len(m1_star) <= 2 * len(m0):
        raise AssertionError("|M0| <= |M*1| <= 2|M0| violated")
    alpha = len(m1_star) / mu if mu else 0.0
    delta = len(m0) / len(m1_star) - 0.5 if m1_star else None
    diag: dict[str, Any] = {
        "alpha": alpha,
        "delta": delta,
        "m1_star": len(m1_star),
        "m2_star": len(m2_star),
    }
    cand = art.candidate
    if cand is not None:
        comp = cand.components
        v_p1 = {v for e in comp["p1"] for v in e}
        v_q1 = {v for e in comp["q1"] for v in e}
        diag["r_p"] = sum(1 for e in m2_star if e[0] in v_p1 or e[1] in v_p1)
        diag["r_q"] = sum(1 for e in m2_star if e[0] in v_q1 or e[1] in v_q1)
        m0_final = comp["m0"]
        a_mq = {e[0] for e in m0_final if e[1] in v_q1}
        b_mp = {e[1] for e in m0_final if e[0] in v_p1}
        diag["m_c_star"] = sum(1 for a, b in mstar if a in a_mq and b in b_mp)
    if config.algo == "gm":
        prefix = segment_of_fraction(stream.m, 0.0, config.params.prefix_frac)
        suffix_edges = stream.edges[prefix.hi :]
        mstar_suffix = max_matching_general(suffix_edges)
        m1s = sum(1 for e in mstar_suffix if e[0] in m0_verts or e[1] in m0_verts)
        g_prime = [
            e for e in suffix_edges if (e[0] in m0_verts) != (e[1] in m0_verts)
        ]
        mu_g_prime = len(max_matching_general(g_prime))
        diag["mu_g_prime"] = mu_g_prime
        diag["m1_star_suffix"] = m1s
        diag["reduction_bound_ok"] = mu_g_prime >= 2 * m1s - 2 * len(m0)
    return diag


def emit(report: RunReport, fmt: str = "json", path: str | Path | None = None) -> str:
    """Serialize a report; returns the text and writes it when given a path."""
    if fmt == "json":
        text = json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(
            [
                "seed",
                "matching_size",
                "mu_exact",
                "ratio",
                "peak_edges",
                "recursion_depth",
                "runtime_ms",
                "flags",
            ]
        )
        for t in report.trials:
            writer.writerow(
                [
                    t.seed,
                    t.matching_size,
                    t.mu_exact,
                    f"{t.ratio:.6f}",
                    t.peak_edges,
                    t.recursion_depth,
                    f"{t.runtime_ms:.3f}",
                    "|".join(t.flags),
                ]
            )
        text = buf.getvalue()
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def _params_from_args(args: argparse.Namespace, g: Graph) -> AugmenterParams:
    if args.preset == "paper":
        params = AugmenterParams.paper(g.n)
    else:
        params = AugmenterParams.practical()
    overrides = {}
    if args.tau is not None:
        overrides["tau"] = args.tau
    if args.threshold is not None:
        overrides["recursion_threshold_frac"] = args.threshold
    if args.depth is not None:
        overrides["max_recursion_depth"] = args.depth
    if args.prefix is not None:
        overrides["prefix_frac"] = args.prefix
    if overrides:
        overrides["preset"] = "custom"
        params = dataclasses.replace(params, **overrides)
    return params


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="streammatch",
        description="Random-order streaming matching experiments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run an experiment")
    run_p.add_argument("--algo", required=True, choices=ALGOS)
    run_p.add_argument("--instance", required=True, help="konrad:<n> | planted:<n>,<p> | gnp:<n>,<p> | file:<path>")
    run_p.add_argument("--trials", type=int, default=1)
    run_p.add_argument("--seed", type=int, default=0)
    run_p.add_argument("--preset", choices=("practical", "paper"), default="practical")
    run_p.add_argument("--tau", type=float)
    run_p.add_argument("--threshold", type=float)
    run_p.add_argument("--depth", type=int)
    run_p.add_argument("--prefix", type=float)
    run_p.add_argument("--budget", type=int)
    run_p.add_argument("--diagnostics", action="store_true")
    run_p.add_argument("--out", help="write the report here instead of stdout")
    run_p.add_argument("--format", choices=("json", "csv"), default="json")

    gen_p = sub.add_parser("gen", help="emit an instance as an edge-list file")
    gen_p.add_argument("--instance", required=True)
    gen_p.add_argument("--out", required=True)

    oracle_p = sub.add_parser("oracle", help="print the exact maximum matching size of a file")
    oracle_p.add_argument("path")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "run":
            g = build_instance(args.instance)
            config = ExperimentConfig(
                instance=args.instance,
                algo=args.algo,
                trials=args.trials,
                base_seed=args.seed,
                params=_params_from_args(args, g),
                budget=args.budget,
                diagnostics=args.diagnostics,
            )
            report = run_experiment(config)
            text = emit(report, fmt=args.format, path=args.out)
            if args.out is None:
                sys.stdout.write(text)
        elif args.command == "gen":
            save_edgelist(build_instance(args.instance), args.out)
        elif args.command == "oracle":
            print(exact_size(load_edgelist(args.path)))
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
