"""Synthetic graph generators: ER, BA, PLC, and a planted-partition model.

All generators are pure functions of (config, seed): the same inputs produce
bit-identical graphs.  The planted-partition model additionally emits its
blocks as ground-truth communities.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import IO

from .errors import GeneratorConfigError
from .graph import Graph

MODELS = ("er", "ba", "plc", "planted")


@dataclass(frozen=True)
class GeneratorConfig:
    """Parameters for one synthetic graph.

    model      one of "er", "ba", "plc", "planted"
    n          vertex count
    p          ER edge probability
    attachments   edges added per new vertex (BA / PLC)
    triangle_prob triadic-closure probability (PLC)
    communities   block count (planted); must divide n
    p_in / p_out  within-block / cross-block edge probability (planted)
    seed       64-bit RNG seed
    """

    model: str
    n: int
    seed: int
    p: float | None = None
    attachments: int | None = None
    triangle_prob: float | None = None
    communities: int | None = None
    p_in: float | None = None
    p_out: float | None = None


@dataclass(frozen=True)
class GeneratedGraph:
    graph: Graph
    communities: list[list[int]] | None  # ground truth (planted only)


def _check_prob(name: str, value: float | None) -> float:
    if value is None:
        raise GeneratorConfigError(f"{name} is required")
    if not 0.0 <= value <= 1.0:
        raise GeneratorConfigError(f"{name} must be in [0, 1], got {value}")
    return value


def generate(config: GeneratorConfig) -> GeneratedGraph:
    """Generate a graph per config; deterministic for a fixed seed."""
    if config.model not in MODELS:
        raise GeneratorConfigError(f"unknown model {config.model!r}")
    if config.n < 0:
        raise GeneratorConfigError("n must be nonnegative")
    rng = random.Random(config.seed)
    if config.model == "er":
        edges = _er_edges(config.n, _check_prob("p", config.p), rng)
        return GeneratedGraph(Graph.from_edges(edges, n=config.n), None)
    if config.model == "ba":
        edges = _ba_edges(config.n, _require_attach(config), rng)
        return GeneratedGraph(Graph.from_edges(edges, n=config.n), None)
    if config.model == "plc":
        q = _check_prob("triangle_prob", config.triangle_prob)
        edges = _plc_edges(config.n, _require_attach(config), q, rng)
        return GeneratedGraph(Graph.from_edges(edges, n=config.n), None)
    # planted partition
    c = config.communities
    if c is None or c < 1:
        raise GeneratorConfigError("communities must be a positive integer")
    if config.n % c != 0:
        raise GeneratorConfigError(f"communities={c} must divide n={config.n}")
    p_in = _check_prob("p_in", config.p_in)
    p_out = _check_prob("p_out", config.p_out)
    edges, blocks = _planted_edges(config.n, c, p_in, p_out, rng)
    return GeneratedGraph(Graph.from_edges(edges, n=config.n), blocks)


def _require_attach(config: GeneratorConfig) -> int:
    a = config.attachments
    if a is None or a < 1:
        raise GeneratorConfigError("attachments must be >= 1")
    if a >= config.n:
        raise GeneratorConfigError(
            f"attachments={a} must be smaller than n={config.n}"
        )
    return a


def _er_edges(n: int, p: float, rng: random.Random) -> list[tuple[int, int]]:
    """G(n, p) via geometric edge skipping; O(n + m) draws."""
    if p <= 0.0 or n < 2:
        return []
    if p >= 1.0:
        return [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = []
    log_q = math.log(1.0 - p)
    v, w = 1, -1
    while v < n:
        w += 1 + int(math.log(1.0 - rng.random()) / log_q)
        while w >= v and v < n:
            w -= v
            v += 1
        if v < n:
            edges.append((w, v))
    return edges


def _sample_distinct(pool: list[int], count: int, rng: random.Random) -> list[int]:
    """Draw `count` distinct values from a multiset by rejection."""
    chosen: list[int] = []
    seen: set[int] = set()
    while len(chosen) < count:
        x = pool[rng.randrange(len(pool))]
        if x not in seen:
            seen.add(x)
            chosen.append(x)
    return chosen


def _ba_edges(n: int, attach: int, rng: random.Random) -> list[tuple[int, int]]:
    """Preferential attachment via the repeated-endpoints multiset."""
    edges: list[tuple[int, int]] = []
    repeated: list[int] = []
    targets = list(range(attach))
    for source in range(attach, n):
        for t in targets:
            edges.append((t, source))
        repeated.extend(targets)
        repeated.extend([source] * attach)
        if source + 1 < n:
            targets = _sample_distinct(repeated, attach, rng)
    return edges


def _plc_edges(
    n: int, attach: int, triangle_prob: float, rng: random.Random
) -> list[tuple[int, int]]:
    """Preferential attachment with triadic closure.

    Each new vertex makes `attach` links; after the first, each further link
    closes a triangle with probability `triangle_prob` by attaching to a
    random neighbor of the previously chosen target, falling back to
    preferential attachment when no eligible neighbor exists.
    """
    edges: list[tuple[int, int]] = []
    adj: list[set[int]] = [set() for _ in range(n)]
    repeated: list[int] = []

    def link(a: int, b: int) -> None:
        edges.append((a, b) if a < b else (b, a))
        adj[a].add(b)
        adj[b].add(a)

    for source in range(attach, n):
        if not repeated:
            chosen = list(range(attach))
            for t in chosen:
                link(t, source)
        else:
            chosen = []
            prev: int | None = None
            while len(chosen) < attach:
                cand: int | None = None
                if prev is not None and rng.random() < triangle_prob:
                    options = sorted(
                        w for w in adj[prev] if w != source and w not in chosen
                    )
                    if options:
                        cand = options[rng.randrange(len(options))]
                if cand is None:
                    while True:
                        cand = repeated[rng.randrange(len(repeated))]
                        if cand not in chosen:
                            break
                chosen.append(cand)
                link(cand, source)
                prev = cand
        repeated.extend(chosen)
        repeated.extend([source] * attach)
    return edges


def _planted_edges(
    n: int, communities: int, p_in: float, p_out: float, rng: random.Random
) -> tuple[list[tuple[int, int]], list[list[int]]]:
    """Equal-size stochastic block model; blocks are contiguous id ranges."""
    size = n // communities
    block = [v // size for v in range(n)]
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            p = p_in if block[u] == block[v] else p_out
            if rng.random() < p:
                edges.append((u, v))
    blocks = [list(range(b * size, (b + 1) * size)) for b in range(communities)]
    return edges, blocks


def write_ground_truth(
    communities: list[list[int]], stream: IO[str], original_ids: list[int] | None = None
) -> None:
    """One community per line, space-separated original ids."""
    for comm in communities:
        ids = comm if original_ids is None else [original_ids[v] for v in comm]
        stream.write(" ".join(str(v) for v in ids) + "\n")
