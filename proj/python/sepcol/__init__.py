"""Exact colouring invariants of small multigraphs.

Thin wrapper over the compiled ``_sepcol`` module: graphs are
``Multigraph`` objects, structured results are plain dicts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Iterable

from ._sepcol import (
    InputError,
    Multigraph,
    __version__,
    construction_names,
    experiment_names,
    parse_graph,
)
from . import _sepcol

__all__ = [
    "Budget",
    "InputError",
    "Multigraph",
    "__version__",
    "build",
    "construction_names",
    "experiment",
    "experiment_names",
    "invariant",
    "ledger",
    "parse_graph",
    "read_graph",
    "verify",
]

KINDS = ("chi", "ch", "chi_a", "ch_ad", "ch_sep", "chi_conflict", "chi_dp")


@dataclass(frozen=True)
class Budget:
    nodes: int = 200_000_000
    instances: int = 50_000_000
    seconds: float = 0.0
    samples: int = 0
    seed: int = 1
    workers: int = 1


def read_graph(path: str) -> Multigraph:
    with open(path, encoding="utf-8") as f:
        return parse_graph(f.read())


def build(name: str) -> tuple[Multigraph, dict[str, Any]]:
    """Named construction: the graph and its metadata (including the
    published instance, when there is one)."""
    graph, meta = _sepcol.build(name)
    return graph, json.loads(meta)


def ledger(
    graph: Multigraph,
    kinds: Iterable[str] = (),
    *,
    budget: Budget = Budget(),
    planar: bool = False,
    exhaustion_only: bool = False,
) -> dict[str, Any]:
    """Bound ledger for the requested kinds (all kinds when empty)."""
    text = _sepcol.ledger_json(
        graph,
        list(kinds),
        planar,
        exhaustion_only,
        budget.nodes,
        budget.instances,
        budget.seconds,
        budget.samples,
        budget.seed,
        budget.workers,
    )
    return json.loads(text)


def invariant(graph: Multigraph, kind: str, **kwargs: Any) -> tuple[int, int]:
    """(lower, upper) for one invariant; equal when exact."""
    b = ledger(graph, [kind], **kwargs)["bounds"][kind]
    return b["lower"]["value"], b["upper"]["value"]


def verify(graph: Multigraph, instance: dict[str, Any] | str, nodes: int = 2**64 - 1) -> dict[str, Any]:
    """Re-solves an instance. ``status`` is ``unsat`` when confirmed."""
    text = instance if isinstance(instance, str) else json.dumps(instance)
    return json.loads(_sepcol.verify_json(graph, text, nodes))


@dataclass
class ExperimentResult:
    report: dict[str, Any]
    outcome: str
    table: str = field(repr=False)

    @property
    def passed(self) -> bool:
        return self.outcome == "pass"


def experiment(
    name: str,
    *,
    k: int = 2,
    nmax: int = 7,
    count: int = 1000,
    budget: Budget = Budget(),
) -> ExperimentResult:
    report, outcome, table = _sepcol.experiment_json(
        name,
        k,
        nmax,
        count,
        budget.samples,
        budget.nodes,
        budget.instances,
        budget.seconds,
        budget.seed,
        budget.workers,
    )
    return ExperimentResult(json.loads(report), outcome, table)
