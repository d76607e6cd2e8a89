"""Exhaustive verification campaigns over small graphs.

Each campaign evaluates one graph at a time and returns a plain record; a
run maps the evaluator over a graph stream (builtin enumeration or graph6
files) and merges the records in input order, so the result does not depend
on the number of worker processes.
"""

from __future__ import annotations

import multiprocessing as mp
import time
from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, Iterator

from .canon import enumerate_up_to
from .detectors import is_class_member, iter_holes
from .divisibility import (
    certify_mnpd,
    certify_mnwd_bounded,
    coloring_via_divisibility,
    divisibility_bound,
    is_perfectly_divisible,
    is_perfectly_weight_divisible_bounded,
)
from .graph import MAX_ORDER, Graph, GraphError, anti_neighborhood, induced_subgraph, is_connected, members
from .graph6 import decode_graph6, encode_graph6, load_corpus
from .invariants import (
    chromatic_number,
    clique_number,
    diamond_trichotomy,
    is_k_colorable,
    is_locally_perfect,
    is_proper_coloring,
)
from .structure import (
    HOLDS,
    build_4k1_partition,
    classify_around_5hole,
    find_4k1_orientation,
    verify_5hole_claims,
    verify_no_far_antihole,
)

CONSISTENT = "consistent"
COUNTEREXAMPLE = "counterexample"
NOT_MEMBER = "not-member"

BUILTIN = "builtin"


class CampaignError(GraphError):
    pass


@dataclass(frozen=True)
class CampaignSpec:
    """``source`` is ``"builtin"`` or a graph6 path; ``append`` lists extra graph6
    files read after the main source.  Weighted checks run on graphs with at
    most ``weighted_max_n`` vertices."""

    name: str
    max_n: int = 8
    wmax: int = 2
    source: str = BUILTIN
    jobs: int = 1
    weighted_max_n: int = 7
    append: tuple[str, ...] = ()
    timing: bool = False

    def __post_init__(self):
        if self.name not in CAMPAIGNS:
            raise CampaignError(f"unknown campaign {self.name!r}")
        if not 0 <= self.max_n <= MAX_ORDER:
            raise CampaignError(f"max_n must be in 0..{MAX_ORDER}")
        if self.wmax < 1:
            raise CampaignError("wmax must be at least 1")
        if self.jobs < 1:
            raise CampaignError("jobs must be at least 1")

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "max_n": self.max_n,
            "wmax": self.wmax,
            "source": self.source,
            "weighted_max_n": self.weighted_max_n,
            "append": list(self.append),
        }


@dataclass
class CampaignReport:
    spec: CampaignSpec
    records: list[dict] = field(default_factory=list)
    wall_millis: float | None = None

    @property
    def counterexamples(self) -> list[dict]:
        return [r for r in self.records if r["verdict"] == COUNTEREXAMPLE]

    def summary(self) -> dict:
        members_ = sum(1 for r in self.records if r["member"])
        return {
            "campaign": self.spec.name,
            "spec": self.spec.as_dict(),
            "total": len(self.records),
            "members": members_,
            "consistent": sum(1 for r in self.records if r["verdict"] == CONSISTENT),
            "counterexamples": [r["index"] for r in self.counterexamples],
            "semi_weighted": CAMPAIGNS[self.spec.name].weighted,
            "wall_millis": self.wall_millis,
        }


# -- helpers --------------------------------------------------------------------

def _class_check(g: Graph, spec: str) -> tuple[bool, dict | None]:
    ok, w = is_class_member(g, spec)
    return ok, None if w is None else w.as_dict()


def _divisibility(g: Graph, spec: CampaignSpec, details: dict) -> dict | None:
    """Run PD (and bounded PWD when small enough); return a witness on failure."""
    pd = is_perfectly_divisible(g)
    details["divisible"] = pd.divisible
    if not pd:
        return {"kind": "not-divisible", "vertices": list(members(pd.failing_subgraph))}
    if g.n <= spec.weighted_max_n:
        pwd = is_perfectly_weight_divisible_bounded(g, spec.wmax)
        details["weight_divisible_bounded"] = pwd.divisible
        if not pwd:
            return {
                "kind": "not-weight-divisible",
                "vertices": list(members(pwd.failing_subgraph)),
                "weights": list(pwd.failing_weights),
            }
    return None


def _record(member: bool, witness: dict | None, details: dict, class_witness: dict | None = None) -> dict:
    if not member:
        verdict = NOT_MEMBER
    else:
        verdict = COUNTEREXAMPLE if witness is not None else CONSISTENT
    return {
        "member": member,
        "verdict": verdict,
        "witness": witness,
        "class_witness": class_witness,
        "details": details,
    }


def _divisibility_campaign(class_spec: str):
    def run(g: Graph, spec: CampaignSpec) -> dict:
        ok, cw = _class_check(g, class_spec)
        details: dict = {}
        witness = _divisibility(g, spec, details) if ok else None
        return _record(ok, witness, details, cw)

    return run


# -- evaluators -----------------------------------------------------------------

def _even_hole(g: Graph, spec: CampaignSpec) -> dict:
    # members are the even-hole-free graphs: all get the chi check, and the
    # bull-free ones also get the divisibility checks
    ok, cw = _class_check(g, "even-hole")
    details: dict = {}
    if not ok:
        return _record(False, None, details, cw)
    chi, omega = chromatic_number(g), clique_number(g)
    details["chi"], details["omega"] = chi, omega
    if chi > 2 * omega - 1:
        return _record(True, {"kind": "chi-above-2omega-1", "vertices": list(range(g.n))}, details)
    bull_free, _ = _class_check(g, "bull")
    details["bull_free"] = bull_free
    witness = _divisibility(g, spec, details) if bull_free else None
    return _record(True, witness, details)


def _four_k1(g: Graph, spec: CampaignSpec) -> dict:
    ok, cw = _class_check(g, "bull,4K1")
    details: dict = {}
    if not ok:
        return _record(False, None, details, cw)
    witness = _divisibility(g, spec, details)
    checked = shapes = 0
    all_hold = True
    first_violation = None
    for anchor in range(g.n):
        far = anti_neighborhood(g, anchor)
        sub = induced_subgraph(g, far)
        verts = members(far)
        for h in iter_holes(sub, 5, 5):
            hole = tuple(verts[i] for i in h)
            d = classify_around_5hole(g, hole)
            ledger = verify_5hole_claims(g, d, anchor)
            checked += 1
            if not ledger.all_hold and first_violation is None:
                all_hold = False
                name, entry = next(iter(ledger.violations.items()))
                first_violation = {"kind": f"claim:{name}", "vertices": list(entry.witness), "anchor": anchor, "hole": list(hole)}
            strict = all(e.status == HOLDS for e in ledger.entries.values())
            od = find_4k1_orientation(g, hole)
            if od is None:
                continue
            shapes += 1
            part, checks = build_4k1_partition(g, od, spec.wmax)
            if strict and not all(checks.values()) and first_violation is None:
                all_hold = False
                first_violation = {
                    "kind": "partition-recheck",
                    "vertices": list(members(part.B)),
                    "anchor": anchor,
                    "hole": list(od.hole),
                    "checks": checks,
                }
    details["ledger_checked"] = checked
    details["ledger_all_hold"] = all_hold
    details["partition_shapes"] = shapes
    if witness is None:
        witness = first_violation
    return _record(True, witness, details, cw)


def _tf_equivalence(g: Graph, spec: CampaignSpec) -> dict:
    details: dict = {}
    if clique_number(g) > 2:
        return _record(False, None, details, _class_check(g, "C3")[1])
    col3 = is_k_colorable(g, 3) is not None
    pd = is_perfectly_divisible(g).divisible
    details["three_colorable"], details["divisible"] = col3, pd
    values = [col3, pd]
    if g.n <= spec.weighted_max_n:
        pwd = is_perfectly_weight_divisible_bounded(g, spec.wmax).divisible
        details["weight_divisible_bounded"] = pwd
        values.append(pwd)
    if not pd:
        details["mnpd"] = certify_mnpd(g)
    witness = None
    if len(set(values)) > 1:
        witness = {"kind": "equivalence-broken", "vertices": list(range(g.n))}
    return _record(True, witness, details)


def _diamond_structure(g: Graph, spec: CampaignSpec) -> dict:
    ok, cw = _class_check(g, "bull,diamond")
    details: dict = {}
    if not ok or not is_connected(g):
        return _record(False, None, details, cw)
    branch = diamond_trichotomy(g)
    details["branch"] = branch
    witness = {"kind": "no-branch", "vertices": list(range(g.n))} if branch == "no-branch" else None
    return _record(True, witness, details)


def _diamond_mnpd(g: Graph, spec: CampaignSpec) -> dict:
    ok, cw = _class_check(g, "bull,diamond")
    details: dict = {}
    if not ok:
        return _record(False, None, details, cw)
    mnpd = certify_mnpd(g)
    details["mnpd"] = mnpd
    witness = None
    if mnpd and clique_number(g) >= 3:
        witness = {"kind": "mnpd-with-triangle", "vertices": list(range(g.n))}
    return _record(True, witness, details)


def _far_antihole(g: Graph, spec: CampaignSpec) -> dict:
    details: dict = {}
    if not is_connected(g):
        return _record(False, None, details)
    ok, cw = _class_check(g, "bull")
    if not ok or not is_locally_perfect(g):
        return _record(False, None, details, cw)
    entry = verify_no_far_antihole(g)
    details["status"] = entry.status
    witness = None
    if entry.status != HOLDS:
        witness = {"kind": "far-antihole", "vertices": list(entry.witness or ())}
    return _record(True, witness, details)


def _chi_binding(g: Graph, spec: CampaignSpec) -> dict:
    torch_ok, _ = _class_check(g, "bull,odd-torch")
    k1_ok, cw = _class_check(g, "bull,4K1")
    details: dict = {"classes": [c for c, ok in (("bull,odd-torch", torch_ok), ("bull,4K1", k1_ok)) if ok]}
    if not (torch_ok or k1_ok):
        return _record(False, None, details, cw)
    omega = clique_number(g)
    bound = divisibility_bound(omega)
    chi = chromatic_number(g)
    details.update(chi=chi, omega=omega, bound=bound)
    pd = is_perfectly_divisible(g)
    if not pd:
        return _record(True, {"kind": "not-divisible", "vertices": list(members(pd.failing_subgraph))}, details)
    col = coloring_via_divisibility(g)
    used = len(set(col))
    details["colors_used"] = used
    witness = None
    if chi > bound or used > bound or not is_proper_coloring(g, col):
        witness = {"kind": "chi-above-bound", "vertices": list(range(g.n)), "coloring": list(col)}
    return _record(True, witness, details)


def _torch_c3(g: Graph, spec: CampaignSpec) -> dict:
    ok, cw = _class_check(g, "odd-torch,C3")
    details: dict = {}
    if not ok:
        return _record(False, None, details, cw)
    col = is_k_colorable(g, 3)
    details["three_colorable"] = col is not None
    witness = None if col is not None else {"kind": "not-3-colorable", "vertices": list(range(g.n))}
    return _record(True, witness, details)


def _mnwd_search(g: Graph, spec: CampaignSpec) -> dict:
    ok, cw = _class_check(g, "bull")
    details: dict = {}
    if not ok:
        return _record(False, None, details, cw)
    if clique_number(g) < 3:
        return _record(False, None, details)
    mnpd = certify_mnpd(g)
    details["mnpd"] = mnpd
    mnwd = None
    if g.n <= spec.weighted_max_n:
        mnwd = certify_mnwd_bounded(g, spec.wmax)
        details["mnwd_bounded"] = mnwd
    witness = None
    if mnpd or mnwd:
        witness = {"kind": "minimal-non-divisible-with-triangle", "vertices": list(range(g.n))}
    return _record(True, witness, details)


_PXX = ("bull,P11,C4", "bull,P14,C5,C4", "bull,P17,C6,C5,C4")


def _pxx_classes(g: Graph, spec: CampaignSpec) -> dict:
    classes = [c for c in _PXX if is_class_member(g, c)[0]]
    details: dict = {"classes": classes}
    if not classes:
        _, cw = _class_check(g, _PXX[0])
        return _record(False, None, details, cw)
    pd = is_perfectly_divisible(g)
    details["divisible"] = pd.divisible
    witness = None if pd else {"kind": "not-divisible", "vertices": list(members(pd.failing_subgraph))}
    return _record(True, witness, details)


def _triangle_free(g: Graph) -> bool:
    return clique_number(g) <= 2


@dataclass(frozen=True)
class Campaign:
    name: str
    alias: str
    evaluate: Callable[[Graph, CampaignSpec], dict]
    default_max_n: int = 8
    weighted: bool = False
    # hereditary filter applied during builtin enumeration
    keep: Callable[[Graph], bool] | None = None
    enum_cap: int = 8


CAMPAIGNS: dict[str, Campaign] = {
    c.name: c
    for c in (
        Campaign("odd-torch", "C1", _divisibility_campaign("bull,odd-torch"), weighted=True),
        Campaign("even-hole", "C2", _even_hole, weighted=True),
        Campaign("4k1", "C3", _four_k1, weighted=True),
        Campaign("tf-equivalence", "C4", _tf_equivalence, weighted=True, keep=_triangle_free),
        Campaign("diamond-structure", "C5", _diamond_structure),
        Campaign("diamond-mnpd", "C6", _diamond_mnpd),
        Campaign("far-antihole", "C7", _far_antihole),
        Campaign("chi-binding", "C8", _chi_binding),
        Campaign("torch-c3", "C9", _torch_c3, default_max_n=9, keep=_triangle_free, enum_cap=9),
        Campaign("mnwd-search", "C10", _mnwd_search, weighted=True),
        Campaign("pxx-classes", "C11", _pxx_classes),
    )
}
_ALIASES = {c.alias.lower(): c.name for c in CAMPAIGNS.values()}


def resolve_campaign(name: str) -> str:
    key = name.strip()
    if key in CAMPAIGNS:
        return key
    if key.lower() in _ALIASES:
        return _ALIASES[key.lower()]
    raise CampaignError(f"unknown campaign {name!r}")


def default_spec(name: str, **overrides) -> CampaignSpec:
    name = resolve_campaign(name)
    return CampaignSpec(name, **{"max_n": CAMPAIGNS[name].default_max_n, **overrides})


# -- running --------------------------------------------------------------------

def evaluate(spec: CampaignSpec, g: Graph) -> dict:
    """Record for one graph, without index or timing."""
    return CAMPAIGNS[spec.name].evaluate(g, spec)


def iter_source(spec: CampaignSpec) -> Iterator[Graph]:
    camp = CAMPAIGNS[spec.name]
    if spec.source == BUILTIN:
        yield from enumerate_up_to(spec.max_n, keep=camp.keep, cap=max(8, camp.enum_cap))
    else:
        for g in load_corpus(spec.source):
            if g.n <= spec.max_n:
                yield g
    for extra in spec.append:
        yield from load_corpus(extra)


def _work(args: tuple[CampaignSpec, int, str]) -> dict:
    spec, index, g6 = args
    g = decode_graph6(g6)
    t0 = time.perf_counter()
    rec = evaluate(spec, g)
    millis = round((time.perf_counter() - t0) * 1000, 3) if spec.timing else None
    return {"index": index, "graph6": g6, "campaign": spec.name, **rec, "millis": millis}


def run_campaign(spec: CampaignSpec, graphs: Iterable[Graph] | None = None) -> CampaignReport:
    """Evaluate every graph of the source; records come back in input order."""
    t0 = time.perf_counter()
    if graphs is None:
        graphs = iter_source(spec)
    tasks = [(spec, i, encode_graph6(g)) for i, g in enumerate(graphs)]
    if spec.jobs == 1 or len(tasks) < 2:
        records = [_work(t) for t in tasks]
    else:
        ctx = mp.get_context("fork") if "fork" in mp.get_all_start_methods() else mp.get_context()
        chunk = max(1, len(tasks) // (spec.jobs * 16))
        with ctx.Pool(spec.jobs) as pool:
            records = list(pool.imap(_work, tasks, chunksize=chunk))
    wall = round((time.perf_counter() - t0) * 1000, 3) if spec.timing else None
    return CampaignReport(spec, records, wall)


def recheck_record(record: dict, spec: CampaignSpec) -> bool:
    """Re-derive a record's verdict from its graph6 string alone."""
    g = decode_graph6(record["graph6"])
    rec = evaluate(replace(spec, name=record["campaign"]), g)
    return rec["verdict"] == record["verdict"] and rec["witness"] == record["witness"]


__all__ = [
    "CampaignSpec", "CampaignReport", "Campaign", "CampaignError", "CAMPAIGNS",
    "CONSISTENT", "COUNTEREXAMPLE", "NOT_MEMBER", "BUILTIN",
    "resolve_campaign", "default_spec", "evaluate", "iter_source",
    "run_campaign", "recheck_record",
]
