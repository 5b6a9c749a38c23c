"""
Batch runs behind the management commands.

Patterns used:
- graphs come from a graph6 file or from seeded ``random_cubic`` draws;
  every graph keeps its input index and reports are assembled in that order
- per-graph work is single-threaded; ``jobs`` > 1 fans graphs out to a
  process pool
- reports are plain dicts shaped by the serializers and wrapped in the
  ``success_payload`` envelope before they are written
"""
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import networkx as nx
from django.conf import settings

from .exceptions import DominationError, EmptySource
from .graphs.cycles import INFINITE, girth, has_cycle_of_length
from .graphs.generators import random_cubic
from .graphs.graph6 import decode, encode, read_graph6_file
from .graphs.marked_graph import MarkedGraph
from .multigraph import build, long_edge_findings, matching_findings, simplicity_findings
from .paths import path_report
from .reductions.engine import reduce_fixpoint, replay, trace_to_payload
from .serializers import CampaignReportSerializer, ReduceRecordSerializer
from .solver import is_md_set, mdom_exact, verify_third_bound
from .utils import success_payload, write_csv, write_json
from .weights import graph_weight


logger = logging.getLogger(__name__)

# Cycle lengths named by the bound theorems; always reported in forbidden_hits.
WATCHED_LENGTHS = frozenset({4, 7, 8})

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_BUDGET = 2

CSV_FIELDS = [
    "index", "id", "n", "girth", "forbidden_hits", "gamma", "gamma_ratio",
    "bound_holds", "optimal", "budget_exceeded", "rechecked", "runtime_ms",
]


@dataclass(frozen=True)
class Filters:
    min_girth: int = 3
    forbidden: frozenset = frozenset()
    bipartite: bool = False
    cubic: bool = True

    def rejection(self, g: MarkedGraph):
        """Why ``g`` is filtered out, or None when it passes."""
        if self.cubic and not g.is_cubic():
            return "not cubic"
        if girth(g) < self.min_girth:
            return f"girth below {self.min_girth}"
        hits = sorted(k for k in self.forbidden if 3 <= k <= g.n and has_cycle_of_length(g, k))
        if hits:
            return f"contains a forbidden cycle of length {hits[0]}"
        if self.bipartite and not nx.is_bipartite(g.to_networkx()):
            return "not bipartite"
        return None


@dataclass(frozen=True)
class SourceGraph:
    index: int
    id: str
    graph: MarkedGraph


def load_source(input_path=None, gen: dict = None, filters: Filters = None) -> list:
    """
    Input graphs in a stable order.

    ``gen`` is a validated ``{"n", "count", "seed"}`` spec; graph i is
    ``random_cubic(n, seed + i)`` drawn under the girth and forbidden-length
    filters, so the corpus depends only on the spec.

    Raises:
        EmptySource: when neither source yields a graph.
    """
    filters = filters or Filters()
    graphs = []
    if input_path is not None:
        if not Path(input_path).is_file():
            raise EmptySource(input=str(input_path), reason="no such file")
        name = Path(input_path).name
        for i, g in enumerate(read_graph6_file(input_path)):
            graphs.append(SourceGraph(len(graphs), f"{name}:{i + 1}", g))
    if gen is not None:
        n, count, seed = gen["n"], gen["count"], gen.get("seed", 0)
        for i in range(count):
            g = random_cubic(n, seed + i, min_girth=filters.min_girth, forbidden=filters.forbidden)
            graphs.append(SourceGraph(len(graphs), f"gen-n{n}-s{seed + i}", g))
    if not graphs:
        raise EmptySource(input=str(input_path) if input_path else None, gen=gen)
    return graphs


def _init_worker():
    import django

    django.setup()


def _map(fn, tasks: list, jobs: int) -> list:
    """``map`` in input order, on a process pool when ``jobs`` > 1."""
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=jobs, initializer=_init_worker) as pool:
        return list(pool.map(fn, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CampaignTask:
    source: SourceGraph
    filters: Filters
    bound: Fraction
    budget: int = None
    timings: bool = False


def evaluate(task: CampaignTask) -> dict:
    """One campaign record, or ``{"index", "id", "filtered": reason}``."""
    source = task.source
    g = source.graph
    reason = task.filters.rejection(g)
    if reason is not None:
        logger.debug("Graph %s filtered out: %s", source.id, reason)
        return {"index": source.index, "id": source.id, "filtered": reason}
    started = time.perf_counter()
    verdict = verify_third_bound(g, budget=task.budget, bound=task.bound)
    elapsed = int((time.perf_counter() - started) * 1000)
    g_girth = girth(g)
    watched = WATCHED_LENGTHS | task.filters.forbidden
    record = {
        "index": source.index,
        "id": source.id,
        "n": g.n,
        "girth": None if g_girth == INFINITE else int(g_girth),
        "forbidden_hits": sorted(k for k in watched if 3 <= k <= g.n and has_cycle_of_length(g, k)),
        "gamma": verdict.gamma,
        "gamma_ratio": str(Fraction(verdict.gamma, g.n)),
        # an incumbent under the bound proves it even when the search was cut short
        "bound_holds": verdict.holds if verdict.optimal or verdict.holds else None,
        "optimal": verdict.optimal,
        "budget_exceeded": not verdict.optimal,
        "runtime_ms": elapsed if task.timings else None,
    }
    if record["bound_holds"] is not True:
        record["witness"] = sorted(verdict.witness)
    return record


@dataclass
class CampaignReport:
    records: list
    filtered: list = field(default_factory=list)
    bound: Fraction = Fraction(1, 3)

    @property
    def violations(self) -> list:
        return [r for r in self.records if r["bound_holds"] is False]

    @property
    def budget_flagged(self) -> list:
        return [r for r in self.records if r["budget_exceeded"]]

    @property
    def unconfirmed(self) -> list:
        return [r for r in self.records if r.get("rechecked") is False]

    @property
    def exit_code(self) -> int:
        if self.violations:
            return EXIT_VIOLATIONS
        if self.budget_flagged or self.unconfirmed:
            return EXIT_BUDGET
        return EXIT_OK

    @property
    def summary(self) -> dict:
        ratios = [Fraction(r["gamma"], r["n"]) for r in self.records]
        return {
            "count": len(self.records),
            "filtered": len(self.filtered),
            "violations": [r["id"] for r in self.violations],
            "budget_flagged": [r["id"] for r in self.budget_flagged],
            "unconfirmed": [r["id"] for r in self.unconfirmed],
            "max_gamma_ratio": str(max(ratios)) if ratios else None,
            "bound": str(self.bound),
            "exit_code": self.exit_code,
        }

    def to_dict(self) -> dict:
        return CampaignReportSerializer({"records": self.records, "summary": self.summary}).data


def run_campaign(sources: list, filters: Filters = None, bound=Fraction(1, 3), budget: int = None,
                 jobs: int = None, timings: bool = False) -> CampaignReport:
    """
    Exact gamma and bound verdict for every source graph passing ``filters``.

    Records keep input order whatever ``jobs`` is. A record whose solver ran
    out of budget is flagged, never dropped. Every violation is rechecked
    against a fresh uncached solve before it is reported; one that does not
    survive keeps ``rechecked=False`` and ``bound_holds=None``.
    """
    filters = filters or Filters()
    jobs = settings.DOMINATION_JOBS if jobs is None else jobs
    bound = Fraction(bound)
    tasks = [CampaignTask(source, filters, bound, budget, timings) for source in sources]
    results = _map(evaluate, tasks, jobs)
    records = [r for r in results if "filtered" not in r]
    filtered = [r for r in results if "filtered" in r]
    graphs = {source.index: source.graph for source in sources}
    for record in records:
        if record["bound_holds"] is not False:
            continue
        record["rechecked"] = recheck_violation(record, graphs[record["index"]], bound, budget)
        if not record["rechecked"]:
            logger.error("Violation reported for %s did not survive the recheck; flagging it", record["id"])
            record["bound_holds"] = None
    report = CampaignReport(records=records, filtered=filtered, bound=bound)
    for record in report.violations:
        logger.warning("Bound %s violated by %s: gamma=%d, n=%d", bound, record["id"],
                       record["gamma"], record["n"])
    logger.info("Campaign over %d graphs (%d filtered): %d violations, %d budget flags, %d unconfirmed",
                len(records), len(filtered), len(report.violations), len(report.budget_flagged),
                len(report.unconfirmed))
    return report


def recheck_violation(record: dict, g: MarkedGraph, bound=Fraction(1, 3), budget: int = None) -> bool:
    """
    The witness dominates ``g``, its size still exceeds ``bound * n``, and a
    fresh solve that skips the cache finds no smaller set.
    """
    witness = record.get("witness", ())
    if not (record["optimal"] and len(witness) == record["gamma"] and is_md_set(g, witness)
            and Fraction(record["gamma"]) > Fraction(bound) * g.n):
        return False
    fresh = mdom_exact(g, budget)
    return fresh.optimal and fresh.size == record["gamma"]


def write_campaign_report(report: CampaignReport, path) -> tuple:
    """Write ``<path>`` as JSON and the records as CSV next to it. Returns both paths."""
    path = Path(path)
    json_path = path if path.suffix == ".json" else path.with_suffix(".json")
    payload = success_payload("Campaign finished", data=report.to_dict())
    rows = [{**r, "forbidden_hits": ";".join(str(k) for k in r["forbidden_hits"])} for r in report.records]
    return write_json(json_path, payload), write_csv(json_path.with_suffix(".csv"), CSV_FIELDS, rows)


# ---------------------------------------------------------------------------
# reduce
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ReduceTask:
    source: SourceGraph
    order: tuple = None
    trace_dir: str = None
    strict: bool = False


def reduce_one(task: ReduceTask) -> dict:
    """
    Reduce one graph to its fixpoint and write its trace.

    When the residual is empty the lifted set D is checked against
    12|D| <= w(G).
    """
    source = task.source
    g = source.graph
    residual, trace = reduce_fixpoint(g, order=task.order, strict=task.strict)
    trace_path = None
    if task.trace_dir is not None:
        trace_path = Path(task.trace_dir) / f"{source.index:05d}.json"
        write_json(trace_path, success_payload(f"Reduction trace of {source.id}", data=trace_to_payload(trace)))
        trace_path = str(trace_path)
    certificate = None
    if residual.n == 0:
        lifted = replay(g, trace)
        weight = graph_weight(g).total
        certificate = {
            "dominating_set": sorted(lifted.vertices),
            "size": lifted.size,
            "weight": weight,
            "holds": is_md_set(g, lifted.vertices) and 12 * lifted.size <= weight,
        }
        if not certificate["holds"]:
            logger.warning("Certificate 12|D| <= w(G) failed on %s: |D|=%d, w=%d",
                           source.id, lifted.size, weight)
    return {
        "index": source.index,
        "id": source.id,
        "n": g.n,
        "steps": len(trace),
        "residual_n": residual.n,
        "residual_graph6": encode(residual) if residual.n else "",
        "emptied": residual.n == 0,
        "trace_path": trace_path,
        "certificate": certificate,
    }


def run_reduce(sources: list, order=None, trace_dir=None, strict: bool = False, jobs: int = None) -> list:
    """Reduction records in input order; a non-empty residual is reported, not an error."""
    jobs = settings.DOMINATION_JOBS if jobs is None else jobs
    order = None if order is None else tuple(order)
    tasks = [ReduceTask(source, order, None if trace_dir is None else str(trace_dir), strict)
             for source in sources]
    records = _map(reduce_one, tasks, jobs)
    logger.info("Reduced %d graphs; %d emptied", len(records), sum(r["emptied"] for r in records))
    return ReduceRecordSerializer(records, many=True).data


# ---------------------------------------------------------------------------
# analyze / solve
# ---------------------------------------------------------------------------

def analyze_graph(source: SourceGraph, dump_multigraph: bool = False, score_paths: bool = False,
                  discharge: bool = False, max_steps: int = None) -> dict:
    """Structural report of one graph; multigraph errors are reported inside the entry."""
    from .discharge import discharge_report

    g = source.graph
    g_girth = girth(g)
    entry = {
        "index": source.index,
        "id": source.id,
        "n": g.n,
        "girth": None if g_girth == INFINITE else int(g_girth),
        "weight": graph_weight(g).to_dict(),
    }
    if not (dump_multigraph or score_paths or discharge):
        return entry
    try:
        m = build(g)
    except DominationError as exc:
        entry["multigraph_error"] = {"code": exc.code, "message": exc.message, **exc.details}
        return entry
    if dump_multigraph:
        entry["multigraph"] = m.to_dict()
        entry["findings"] = {
            "simplicity": simplicity_findings(m),
            "matching": matching_findings(m),
            "long_edges": long_edge_findings(m),
        }
    if score_paths:
        entry["paths"] = path_report(m)
    if discharge:
        entry["discharge"] = discharge_report(m, max_steps=max_steps)
    return entry


def solve_graph6(text: str, budget: int = None) -> dict:
    g = decode(text)
    witness = mdom_exact(g, budget)
    return {"n": g.n, "graph6": encode(g), **witness.to_dict()}
