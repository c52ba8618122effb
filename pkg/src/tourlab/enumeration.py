"""Canonical enumeration of small tournaments and the scanning harness.

Canonical form is the lexicographically least lower-triangle code over all
vertex permutations, found by exhaustive minimization (exact by brute force,
which is the point at desk scale). Generation is orderly: canonical parents
are extended by every in/out pattern of one new final vertex, and a child
survives iff it is its own canonical form. Deleting the last vertex of a
canonical code leaves a canonical prefix, so each class appears exactly once.

Scans walk that corpus, verify proved theorems instance-by-instance, and hunt
witnesses against open conjectures; results are SearchReports whose witnesses
re-validate from their serialized form on load.

Solvers are referenced through this module's namespace so a test can swap in
a corrupted solver and confirm the harness catches it.
"""

from __future__ import annotations

import itertools
import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional, Sequence

import numpy as np

from . import _kernels
from .core import (
    CapacityError,
    Deadline,
    Numbering,
    OrderedTournament,
    Tournament,
    backedge_graph,
    bits,
    complete_to,
    induce,
    is_transitive,
    reverse,
)
from .formats import parse_compact, emit_compact, tournament_code
from .solvers import chi_all_subsets, dom, graph_chi, graph_omega
from .structure import local_chromatic_number, max_diamond, ordered_contains

ENUM_CAP = 7

_PERMS: dict[int, np.ndarray] = {}
_LEVELS: dict[int, tuple[tuple[int, ...], ...]] = {0: ((),)}


def _perms(n: int) -> np.ndarray:
    got = _PERMS.get(n)
    if got is None:
        got = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
        _PERMS[n] = got
    return got


def _adj_matrix(t: Tournament) -> np.ndarray:
    adj = np.zeros((t.n, t.n), dtype=np.uint8)
    for v in range(t.n):
        for u in bits(t.out_sets[v]):
            adj[v, u] = 1
    return adj


@dataclass(frozen=True)
class CanonicalForm:
    """n plus the lex-least lower-triangle code; equal iff isomorphic (n <= 8)."""

    n: int
    code: int


def canonical_code(t: Tournament) -> int:
    if t.n > 8:
        raise CapacityError("exhaustive canonicalization capped at 8 vertices")
    if t.n < 2:
        return 0
    return int(_kernels.min_code(_adj_matrix(t), _perms(t.n)))


def canonical_form(t: Tournament) -> CanonicalForm:
    return CanonicalForm(t.n, canonical_code(t))


def is_canonical(t: Tournament) -> bool:
    return tournament_code(t) == canonical_code(t)


def _level(n: int) -> tuple[tuple[int, ...], ...]:
    got = _LEVELS.get(n)
    if got is not None:
        return got
    parents = _level(n - 1)
    kept: list[tuple[int, tuple[int, ...]]] = []
    newbit = 1 << (n - 1)
    for parent in parents:
        for pattern in range(1 << (n - 1)):
            out = list(parent)
            for v in range(n - 1):
                if not pattern >> v & 1:
                    out[v] |= newbit
            out.append(pattern)
            cand = Tournament(n, tuple(out))
            code = tournament_code(cand)
            if code == canonical_code(cand):
                kept.append((code, cand.out_sets))
    kept.sort()
    result = tuple(outs for _, outs in kept)
    _LEVELS[n] = result
    return result


def enumerate_all(n: int) -> Iterator[Tournament]:
    """One representative per isomorphism class, ascending canonical code."""
    if n > ENUM_CAP:
        raise CapacityError(f"enumeration capped at {ENUM_CAP} vertices")
    if n < 0:
        raise ValueError("n must be non-negative")
    for outs in _level(n):
        yield Tournament(n, outs)


def count_classes(n: int) -> int:
    return len(_level(n)) if n <= ENUM_CAP else 0


def write_corpus(path: str, n: int):
    """Corpus cache: one compact-format tournament per line, canonical order."""
    with open(path, "w") as fh:
        for t in enumerate_all(n):
            fh.write(emit_compact(t) + "\n")


def read_corpus(path: str) -> list[Tournament]:
    with open(path) as fh:
        return [parse_compact(line) for line in fh if line.strip()]


@dataclass
class SearchReport:
    """Self-describing scan result; serializes to JSON with sorted keys.

    Reports are deterministic for identical inputs except wall_time. The
    witness payload, when present, must re-validate against the scan's
    predicate on load; findings carry informational aggregates (frontier
    tables, recorded minima) that are not witnesses.
    """

    scan: str
    params: dict
    corpus: dict
    outcome: str
    witness: Optional[dict]
    findings: dict = field(default_factory=dict)
    counters: dict = field(default_factory=dict)
    wall_time: float = 0.0

    def to_json(self) -> str:
        payload = {
            "scan": self.scan,
            "params": self.params,
            "corpus": self.corpus,
            "outcome": self.outcome,
            "witness": self.witness,
            "findings": self.findings,
            "counters": self.counters,
            "wall_time": self.wall_time,
        }
        return json.dumps(payload, sort_keys=True, indent=2)

    @staticmethod
    def from_json(text: str, revalidate: bool = True) -> "SearchReport":
        raw = json.loads(text)
        report = SearchReport(
            scan=raw["scan"],
            params=raw["params"],
            corpus=raw["corpus"],
            outcome=raw["outcome"],
            witness=raw.get("witness"),
            findings=raw.get("findings", {}),
            counters=raw.get("counters", {}),
            wall_time=raw.get("wall_time", 0.0),
        )
        if revalidate:
            revalidate_witness(report)
        return report


_VALIDATORS: dict[str, Callable[[SearchReport], None]] = {}


def _validator(name: str):
    def deco(fn):
        _VALIDATORS[name] = fn
        return fn

    return deco


def revalidate_witness(report: SearchReport):
    """Re-check a loaded witness against its defining predicate; raise if stale."""
    if report.witness is None:
        return
    checker = _VALIDATORS.get(report.scan)
    if checker is None:
        raise ValueError(f"no witness validator registered for scan {report.scan!r}")
    checker(report)


def _map_corpus(fn, items: Sequence, threads: int):
    """Apply fn preserving corpus order; thread fan-out keeps the merge deterministic."""
    if threads <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _triangle_masks(t: Tournament) -> list[int]:
    tri = []
    for a in range(t.n):
        for b in bits(t.out_sets[a] >> a << a):
            for c in bits(t.out_sets[b] & t.in_set(a)):
                if c > a:
                    tri.append(1 << a | 1 << b | 1 << c)
    return tri


def _corpus_dict(n_max: int) -> dict:
    return {
        "description": "all tournaments up to isomorphism, canonical order",
        "n_max": n_max,
        "classes": {str(n): count_classes(n) for n in range(1, n_max + 1)},
    }


def scan_chi2(
    c: int,
    n_max: int,
    threads: int = 1,
    deadline: Optional[Deadline] = None,
) -> SearchReport:
    """Hunt a tournament with chi >= 2c whose every out-neighbourhood has chi < c.

    Exhausts the canonical corpus up to n_max; a find would refute the
    out-neighbourhood colouring conjecture at this c.
    """
    if n_max > ENUM_CAP:
        raise CapacityError(f"scan capped at {ENUM_CAP} vertices")
    start = time.monotonic()
    counters: dict[str, dict] = {}
    witness = None

    def examine(t: Tournament):
        if deadline is not None:
            deadline.check()
        tbl = chi_all_subsets(t)
        value = int(tbl[t.full_mask])
        if value < 2 * c:
            return None
        neigh = [int(tbl[t.out_sets[v]]) for v in range(t.n)]
        return (max(neigh, default=0) < c, value, neigh)

    for n in range(1, n_max + 1):
        qualifying = 0
        corpus = list(enumerate_all(n))
        for t, got in zip(corpus, _map_corpus(examine, corpus, threads)):
            if got is None:
                continue
            qualifying += 1
            bad, value, neigh = got
            if bad and witness is None:
                witness = {
                    "tournament": emit_compact(t),
                    "chi": value,
                    "out_neighbourhood_chis": neigh,
                }
        counters[str(n)] = {"classes": len(corpus), "chi_at_least_2c": qualifying}
        if witness is not None:
            break
    return SearchReport(
        scan="chi2",
        params={"c": c, "n_max": n_max},
        corpus=_corpus_dict(n_max),
        outcome="witness" if witness else "exhausted",
        witness=witness,
        counters={"per_n": counters},
        wall_time=time.monotonic() - start,
    )


@_validator("chi2")
def _check_chi2(report: SearchReport):
    c = report.params["c"]
    t = parse_compact(report.witness["tournament"])
    tbl = chi_all_subsets(t)
    if int(tbl[t.full_mask]) < 2 * c:
        raise ValueError("chi2 witness fails: chromatic number below 2c")
    if any(int(tbl[t.out_sets[v]]) >= c for v in range(t.n)):
        raise ValueError("chi2 witness fails: some out-neighbourhood reaches c")


def scan_tribip(
    d: int,
    n_max: int,
    threads: int = 1,
    deadline: Optional[Deadline] = None,
) -> SearchReport:
    """Hunt disjoint sets of chi >= d with no complete pair of triangles between them.

    For every canonical tournament and every disjoint (a, b) with both sides
    of chromatic number at least d, some cyclic triangle inside one side must
    be complete to one inside the other (in either orientation); a pair with
    no such triangles is a witness.
    """
    if n_max > ENUM_CAP:
        raise CapacityError(f"scan capped at {ENUM_CAP} vertices")
    start = time.monotonic()
    counters: dict[str, dict] = {}
    witness = None

    def examine(t: Tournament):
        if deadline is not None:
            deadline.check()
        tbl = chi_all_subsets(t)
        tris = _triangle_masks(t)
        pairs = 0
        for a in range(1, 1 << t.n):
            if int(tbl[a]) < d:
                continue
            rest = t.full_mask & ~a
            b = rest
            # iterate the nonempty submasks of the complement
            while b:
                if int(tbl[b]) >= d and (a & -a) < (b & -b):
                    pairs += 1
                    tri_a = [m for m in tris if not m & ~a]
                    tri_b = [m for m in tris if not m & ~b]
                    good = any(
                        complete_to(t, ta, tb) or complete_to(t, tb, ta)
                        for ta in tri_a
                        for tb in tri_b
                    )
                    if not good:
                        return pairs, (a, b)
                b = (b - 1) & rest
        return pairs, None

    for n in range(1, n_max + 1):
        pairs_seen = 0
        corpus = list(enumerate_all(n))
        for t, (pairs, bad) in zip(corpus, _map_corpus(examine, corpus, threads)):
            pairs_seen += pairs
            if bad and witness is None:
                witness = {
                    "tournament": emit_compact(t),
                    "a": bad[0],
                    "b": bad[1],
                }
        counters[str(n)] = {"classes": len(corpus), "qualifying_pairs": pairs_seen}
        if witness is not None:
            break
    return SearchReport(
        scan="tribip",
        params={"d": d, "n_max": n_max},
        corpus=_corpus_dict(n_max),
        outcome="witness" if witness else "exhausted",
        witness=witness,
        counters={"per_n": counters},
        wall_time=time.monotonic() - start,
    )


@_validator("tribip")
def _check_tribip(report: SearchReport):
    d = report.params["d"]
    t = parse_compact(report.witness["tournament"])
    a, b = report.witness["a"], report.witness["b"]
    if a & b:
        raise ValueError("tribip witness fails: sides intersect")
    tbl = chi_all_subsets(t)
    if int(tbl[a]) < d or int(tbl[b]) < d:
        raise ValueError("tribip witness fails: a side has chi below d")
    tris = _triangle_masks(t)
    tri_a = [m for m in tris if not m & ~a]
    tri_b = [m for m in tris if not m & ~b]
    if any(
        complete_to(t, ta, tb) or complete_to(t, tb, ta)
        for ta in tri_a
        for tb in tri_b
    ):
        raise ValueError("tribip witness fails: a complete triangle pair exists")


def scan_theorem_suite(
    n_max: int,
    threads: int = 1,
    deadline: Optional[Deadline] = None,
) -> SearchReport:
    """Assert proved theorems over the corpus; any violation is a bug certificate.

    Numbering-free checks (dom <= chi) run for all n <= n_max (cap 7); the
    per-numbering checks (backedge sandwich, diamond bound against twice the
    local chromatic number, dom <= local + 1) run for n <= 6.
    """
    if n_max > ENUM_CAP:
        raise CapacityError(f"scan capped at {ENUM_CAP} vertices")
    start = time.monotonic()
    counters: dict[str, dict] = {}
    witness = None

    def examine(t: Tournament):
        if deadline is not None:
            deadline.check()
        tbl = chi_all_subsets(t)
        chi_value = int(tbl[t.full_mask])
        dom_value = dom(t).value
        if dom_value > chi_value:
            return ("dom_le_chi", None, dom_value, chi_value), 0
        best = max_diamond(t)
        diamond_value = 0 if best is None else best.value
        numberings = 0
        if t.n <= 6:
            for perm in itertools.permutations(range(t.n)):
                numberings += 1
                ot = OrderedTournament(t, Numbering(perm))
                local = local_chromatic_number(ot, table=tbl)
                g = backedge_graph(ot)
                gchi = graph_chi(g)
                gomega = graph_omega(g)
                if not chi_value <= gchi <= gomega * max(chi_value, 1):
                    return ("backedge_sandwich", perm, (chi_value, gchi, gomega), None), numberings
                if diamond_value > 2 * local:
                    return ("diamond_le_2local", perm, diamond_value, local), numberings
                if dom_value > local + 1:
                    return ("dom_le_local_plus_1", perm, dom_value, local), numberings
        return None, numberings

    for n in range(1, n_max + 1):
        corpus = list(enumerate_all(n))
        numberings = 0
        for t, (bad, seen) in zip(corpus, _map_corpus(examine, corpus, threads)):
            numberings += seen
            if bad and witness is None:
                name, perm, lhs, rhs = bad
                witness = {
                    "theorem": name,
                    "tournament": emit_compact(t),
                    "numbering": list(perm) if perm is not None else None,
                    "lhs": lhs,
                    "rhs": rhs,
                }
        counters[str(n)] = {"classes": len(corpus), "numberings": numberings}
        if witness is not None:
            break
    return SearchReport(
        scan="theorem-suite",
        params={"n_max": n_max},
        corpus=_corpus_dict(n_max),
        outcome="witness" if witness else "exhausted",
        witness=witness,
        counters={"per_n": counters},
        wall_time=time.monotonic() - start,
    )


@_validator("theorem-suite")
def _check_theorem_suite(report: SearchReport):
    t = parse_compact(report.witness["tournament"])
    name = report.witness["theorem"]
    tbl = chi_all_subsets(t)
    chi_value = int(tbl[t.full_mask])
    dom_value = dom(t).value
    perm = report.witness["numbering"]
    if name == "dom_le_chi":
        if dom_value <= chi_value:
            raise ValueError("suite witness fails: dom <= chi holds after all")
        return
    ot = OrderedTournament(t, Numbering(tuple(perm)))
    local = local_chromatic_number(ot, table=tbl)
    if name == "backedge_sandwich":
        g = backedge_graph(ot)
        if chi_value <= graph_chi(g) <= graph_omega(g) * max(chi_value, 1):
            raise ValueError("suite witness fails: sandwich holds after all")
    elif name == "diamond_le_2local":
        best = max_diamond(t)
        value = 0 if best is None else best.value
        if value <= 2 * local:
            raise ValueError("suite witness fails: diamond bound holds after all")
    elif name == "dom_le_local_plus_1":
        if dom_value <= local + 1:
            raise ValueError("suite witness fails: dom bound holds after all")
    else:
        raise ValueError(f"unknown suite theorem {name!r}")


def scan_backdom(
    c: int,
    n_max: int,
    threads: int = 1,
    deadline: Optional[Deadline] = None,
) -> SearchReport:
    """Frontier of reverse subdomination against domination.

    For each tournament, records dom(t) and the largest domination number of
    a reversed induced subtournament; the findings table keeps, per dom
    value, the smallest such maximum with an example. A tournament with
    dom >= c whose maximum stays below c would witness against the reverse
    rebel belief at this c (proved impossible for c = 2).
    """
    if n_max > ENUM_CAP:
        raise CapacityError(f"scan capped at {ENUM_CAP} vertices")
    start = time.monotonic()
    counters: dict[str, dict] = {}
    frontier: dict[int, dict] = {}
    witness = None

    def examine(t: Tournament):
        if deadline is not None:
            deadline.check()
        d = dom(t).value
        best = 0
        for s in range(1, 1 << t.n):
            best = max(best, dom(reverse(induce(t, s).sub)).value)
        return d, best

    for n in range(1, n_max + 1):
        corpus = list(enumerate_all(n))
        for t, (d, best) in zip(corpus, _map_corpus(examine, corpus, threads)):
            row = frontier.get(d)
            if row is None or best < row["max_reverse_subdom"]:
                frontier[d] = {
                    "max_reverse_subdom": best,
                    "tournament": emit_compact(t),
                }
            if d >= c and best < c and witness is None:
                witness = {
                    "tournament": emit_compact(t),
                    "dom": d,
                    "max_reverse_subdom": best,
                }
        counters[str(n)] = {"classes": len(corpus)}
    return SearchReport(
        scan="backdom",
        params={"c": c, "n_max": n_max},
        corpus=_corpus_dict(n_max),
        outcome="witness" if witness else "exhausted",
        witness=witness,
        findings={"frontier": {str(d): frontier[d] for d in sorted(frontier)}},
        counters={"per_n": counters},
        wall_time=time.monotonic() - start,
    )


@_validator("backdom")
def _check_backdom(report: SearchReport):
    c = report.params["c"]
    t = parse_compact(report.witness["tournament"])
    if dom(t).value < c:
        raise ValueError("backdom witness fails: dom below c")
    best = 0
    for s in range(1, 1 << t.n):
        best = max(best, dom(reverse(induce(t, s).sub)).value)
    if best >= c:
        raise ValueError("backdom witness fails: reverse subdomination reaches c")


LEGEND_SAMPLE_SEED = 20240809
LEGEND_SAMPLES = 100000


def legend_frontier(
    h: Tournament,
    sigma: Numbering,
    n_max: int,
    threads: int = 1,
    deadline: Optional[Deadline] = None,
) -> SearchReport:
    """Largest domination number among ordered tournaments avoiding (h, sigma).

    h must be transitive (only transitive ordered tournaments are unavoidable
    at high domination). All numberings are tried for n <= 6; at n = 7 a
    fixed PCG64 sample of 10^5 numberings per class stands in, and the report
    flags that level as evidence-only. The frontier is asserted below
    |h| * 2^|h|.
    """
    if not is_transitive(h):
        raise ValueError("h must be transitive")
    if not isinstance(sigma, Numbering):
        sigma = Numbering(tuple(sigma))
    if len(sigma) != h.n:
        raise ValueError("sigma length differs from h")
    if n_max > ENUM_CAP:
        raise CapacityError(f"scan capped at {ENUM_CAP} vertices")
    start = time.monotonic()
    bound = h.n * (1 << h.n)
    oh = OrderedTournament(h, sigma)
    counters: dict[str, dict] = {}
    frontier = 0
    frontier_example = None
    witness = None

    def numberings_for(t: Tournament):
        if t.n <= 6:
            return itertools.permutations(range(t.n))
        rng = np.random.Generator(np.random.PCG64(LEGEND_SAMPLE_SEED))
        return (
            tuple(int(x) for x in rng.permutation(t.n)) for _ in range(LEGEND_SAMPLES)
        )

    def examine(t: Tournament):
        if deadline is not None:
            deadline.check()
        for perm in numberings_for(t):
            ot = OrderedTournament(t, Numbering(perm))
            if ordered_contains(ot, oh) is None:
                return dom(t).value, perm
        return None

    for n in range(1, n_max + 1):
        corpus = list(enumerate_all(n))
        avoiders = 0
        for t, got in zip(corpus, _map_corpus(examine, corpus, threads)):
            if got is None:
                continue
            avoiders += 1
            value, perm = got
            if value > frontier:
                frontier = value
                frontier_example = {
                    "tournament": emit_compact(t),
                    "numbering": list(perm),
                    "dom": value,
                }
            if value >= bound and witness is None:
                witness = {
                    "tournament": emit_compact(t),
                    "numbering": list(perm),
                    "dom": value,
                }
        counters[str(n)] = {
            "classes": len(corpus),
            "classes_with_avoiding_numbering": avoiders,
        }
    return SearchReport(
        scan="legends",
        params={
            "h": emit_compact(h),
            "sigma": list(sigma.perm),
            "n_max": n_max,
            "bound": bound,
            "n7_sampling": {"seed": LEGEND_SAMPLE_SEED, "samples": LEGEND_SAMPLES}
            if n_max >= 7
            else None,
        },
        corpus=_corpus_dict(n_max),
        outcome="witness" if witness else "exhausted",
        witness=witness,
        findings={"frontier": frontier, "example": frontier_example},
        counters={"per_n": counters},
        wall_time=time.monotonic() - start,
    )


@_validator("legends")
def _check_legends(report: SearchReport):
    h = parse_compact(report.params["h"])
    sigma = Numbering(tuple(report.params["sigma"]))
    t = parse_compact(report.witness["tournament"])
    nb = Numbering(tuple(report.witness["numbering"]))
    if ordered_contains(OrderedTournament(t, nb), OrderedTournament(h, sigma)) is not None:
        raise ValueError("legend witness fails: the pattern is contained after all")
    if dom(t).value < report.params["bound"]:
        raise ValueError("legend witness fails: domination below the bound")
