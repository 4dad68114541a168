"""Compatibility graphs and greedy clique search.

Candidate codes become nodes; two nodes are joined when their cross
correlation stays within the design threshold, so a set of mutually
compatible codes is exactly a clique.  The search is the degree-greedy
walk: select a highest-degree node (ties to the lowest index), restrict
the graph to its neighborhood, repeat.  The walk always lands on a maximal
clique; enumerating one walk per highest-degree start node yields the
candidate sets, and a guarded exact search exists to keep the greedy
answers honest in tests.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import groupby

from .codes import CodeParams, Dopr, PartialDopr
from .correlation import (
    crosscorr_edop,
    interset_crosscorr,
    johnson_bound,
    set_lambda_a,
    set_lambda_c,
)
from .edop import EdopMatrix, edop_full, edop_partial

__all__ = [
    "CodeGraph",
    "CliqueSet",
    "CliqueSetMatrix",
    "Family",
    "build_graph",
    "greedy_clique",
    "enumerate_cliques",
    "verify_maximality",
    "max_clique_exact",
    "make_clique_set",
    "clique_set_matrix",
    "select_family",
]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CodeGraph:
    """Symmetric compatibility graph over a fixed node order."""

    nodes: tuple
    neighbors: tuple[frozenset[int], ...]
    threshold: int

    def __post_init__(self) -> None:
        for v, nbrs in enumerate(self.neighbors):
            if v in nbrs:
                raise ValueError("self loops are not allowed")
            if any(v not in self.neighbors[u] for u in nbrs):
                raise ValueError("adjacency must be symmetric")

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        size = len(self.nodes)
        return tuple(
            tuple(1 if u in self.neighbors[v] else 0 for u in range(size))
            for v in range(size)
        )


def code_matrix(code: Dopr | PartialDopr | EdopMatrix) -> EdopMatrix:
    """Difference table of a complete or partial code."""
    if isinstance(code, EdopMatrix):
        return code
    if isinstance(code, PartialDopr):
        return edop_partial(code)
    return edop_full(code)


def build_graph(codes, threshold: int, *, block_by_first: bool = False) -> CodeGraph:
    """Join two codes when their cross correlation is at most ``threshold``.

    ``block_by_first`` computes the same graph while holding difference
    tables for only two first-element groups at a time, which bounds peak
    memory on large candidate pools.
    """
    nodes = tuple(codes)
    if threshold < 1:
        raise ValueError("threshold must be at least 1")
    size = len(nodes)
    nbrs: list[set[int]] = [set() for _ in range(size)]

    def _join(i: int, mi: EdopMatrix, j: int, mj: EdopMatrix) -> None:
        if crosscorr_edop(mi, mj).lambda_cxy <= threshold:
            nbrs[i].add(j)
            nbrs[j].add(i)

    if block_by_first:
        blocks = [
            list(group)
            for _, group in groupby(range(size), key=lambda i: nodes[i].dops[0])
        ]
        for a, block_a in enumerate(blocks):
            mats_a = {i: code_matrix(nodes[i]) for i in block_a}
            for i_pos, i in enumerate(block_a):
                for j in block_a[i_pos + 1 :]:
                    _join(i, mats_a[i], j, mats_a[j])
            for block_b in blocks[a + 1 :]:
                mats_b = {j: code_matrix(nodes[j]) for j in block_b}
                for i in block_a:
                    for j in block_b:
                        _join(i, mats_a[i], j, mats_b[j])
    else:
        mats = [code_matrix(c) for c in nodes]
        for i in range(size):
            for j in range(i + 1, size):
                _join(i, mats[i], j, mats[j])

    return CodeGraph(nodes, tuple(frozenset(s) for s in nbrs), threshold)


def greedy_clique(graph: CodeGraph, start: int | None = None) -> tuple[int, ...]:
    """Degree-greedy maximal clique, as node indices in selection order.

    Repeatedly selects a highest-degree node of the working graph (ties to
    the lowest index) and restricts to its neighborhood; a selection of
    degree zero ends the walk.  ``start`` forces the first selection.
    """
    if not graph.nodes:
        return ()
    if start is not None and not 0 <= start < len(graph.nodes):
        raise ValueError(f"start index {start} out of range")
    nbrs = graph.neighbors
    active = set(range(len(graph.nodes)))
    chosen: list[int] = []
    while active:
        if not chosen and start is not None:
            pick = start
        else:
            pick = min(active, key=lambda v: (-len(nbrs[v] & active), v))
        chosen.append(pick)
        active &= nbrs[pick]
    return tuple(chosen)


def enumerate_cliques(graph: CodeGraph) -> tuple[tuple[int, ...], ...]:
    """One greedy run per highest-degree start node, de-duplicated.

    Order follows the ascending start index, so the result is a
    deterministic function of the graph.
    """
    if not graph.nodes:
        return ()
    degrees = [len(n) for n in graph.neighbors]
    top = max(degrees)
    found: list[tuple[int, ...]] = []
    seen: set[frozenset[int]] = set()
    for v, d in enumerate(degrees):
        if d != top:
            continue
        clique = greedy_clique(graph, start=v)
        key = frozenset(clique)
        if key not in seen:
            seen.add(key)
            found.append(clique)
    return tuple(found)


def verify_maximality(members, candidates, threshold: int) -> bool:
    """Whether no outside candidate is compatible with every member.

    Membership is judged by the (dops, n) pair, so candidate pools of
    canonical codes compare cleanly against canonical members.
    """
    member_list = list(getattr(members, "codes", members))
    if not member_list:
        raise ValueError("maximality needs a non-empty set")
    keys = {(c.dops, c.n) for c in member_list}
    mats = [code_matrix(c) for c in member_list]
    for cand in candidates:
        if (cand.dops, cand.n) in keys:
            continue
        cm = code_matrix(cand)
        if all(crosscorr_edop(cm, m).lambda_cxy <= threshold for m in mats):
            return False
    return True


def max_clique_exact(graph: CodeGraph, size_cap: int) -> tuple[int, ...]:
    """Exact maximum clique up to ``size_cap``, for small instances only.

    Depth-first extension over index-ascending candidates; equivalent to
    enumerating all subsets up to the cap, with pruning.  Guarded to pools
    of at most 24 nodes unless the cap is at most 6.
    """
    size = len(graph.nodes)
    if size_cap < 1:
        raise ValueError("size cap must be at least 1")
    if size > 24 and size_cap > 6:
        raise ValueError(
            "exact search is guarded to pools of <= 24 nodes or caps of <= 6"
        )
    nbrs = graph.neighbors
    best: tuple[int, ...] = ()

    def grow(base: list[int], cand: list[int]) -> None:
        nonlocal best
        if len(base) > len(best):
            best = tuple(base)
        if len(base) == size_cap:
            return
        for idx, v in enumerate(cand):
            if len(base) + len(cand) - idx <= len(best):
                return
            grow(base + [v], [u for u in cand[idx + 1 :] if u in nbrs[v]])

    grow([], list(range(size)))
    return best


@dataclass(frozen=True)
class CliqueSet:
    """A verified set of mutually compatible complete codes."""

    codes: tuple[Dopr, ...]
    params: CodeParams
    bound: int
    verified_lambda_a: int
    verified_lambda_c: int


def make_clique_set(codes, params: CodeParams) -> CliqueSet:
    """Assemble and re-verify a clique of complete codes.

    Codes are sorted canonically.  Self correlations and pairwise cross
    correlations are recomputed and checked against the parameters; a
    singleton records a pairwise value of 0 since it has no pairs.  The
    cardinality bound is recorded, and enforced when the two correlation
    ceilings coincide (the regime the bound is stated for).
    """
    ordered = tuple(sorted(codes, key=lambda c: c.dops))
    if not ordered:
        raise ValueError("a clique set needs at least one code")
    for c in ordered:
        if c.n != params.n or c.weight != params.w:
            raise ValueError(f"code {c.dops} does not match {params}")
    lam_a = set_lambda_a(ordered)
    if lam_a > params.lambda_a:
        raise ValueError(
            f"set self correlation {lam_a} exceeds lambda_a={params.lambda_a}"
        )
    lam_c = set_lambda_c(ordered) if len(ordered) > 1 else 0
    if lam_c > params.lambda_c:
        raise ValueError(
            f"set cross correlation {lam_c} exceeds lambda_c={params.lambda_c}"
        )
    bound = johnson_bound(params.n, params.w, max(params.lambda_a, params.lambda_c))
    if params.lambda_a == params.lambda_c and len(ordered) > bound:
        raise RuntimeError(
            f"{len(ordered)} codes exceed the cardinality bound {bound}; "
            "this would contradict the bound and indicates a defect"
        )
    return CliqueSet(ordered, params, bound, lam_a, lam_c)


def _clique_key(clique: CliqueSet):
    return (
        clique.params.n,
        clique.params.w,
        tuple(c.dops for c in clique.codes),
    )


@dataclass(frozen=True)
class CliqueSetMatrix:
    """Pairwise inter-set correlations of candidate cliques.

    ``raw`` holds the inter-set peaks (the diagonal is the code weight,
    every set against itself); ``normalized`` marks acceptably separated
    pairs with 1 and zeroes the diagonal.
    """

    cliques: tuple[CliqueSet, ...]
    raw: tuple[tuple[int, ...], ...]
    normalized: tuple[tuple[int, ...], ...]
    threshold: int


def clique_set_matrix(cliques, lambda_c: int) -> CliqueSetMatrix:
    items = tuple(cliques)
    size = len(items)
    raw = [[0] * size for _ in range(size)]
    for i in range(size):
        raw[i][i] = interset_crosscorr(items[i], items[i])
        for j in range(i + 1, size):
            raw[i][j] = raw[j][i] = interset_crosscorr(items[i], items[j])
    threshold = lambda_c + 1
    normalized = tuple(
        tuple(
            1 if i != j and raw[i][j] <= threshold else 0 for j in range(size)
        )
        for i in range(size)
    )
    return CliqueSetMatrix(
        items, tuple(tuple(r) for r in raw), normalized, threshold
    )


@dataclass(frozen=True)
class Family:
    """The emitted collection of code sets, canonically ordered."""

    sets: tuple[CliqueSet, ...]
    interset_lambda: int


def select_family(cliques, lambda_c: int) -> Family:
    """Keep a greedy clique of candidate sets under the separation rule.

    Two sets are joined when their inter-set peak is at most lambda_c + 1,
    the floor forced between distinct maximal cliques; the degree-greedy
    walk over that graph picks the family.  Fewer than two surviving sets
    record an inter-set value of 0.
    """
    items = tuple(cliques)
    if not items:
        return Family((), 0)
    matrix = clique_set_matrix(items, lambda_c)
    neighbors = tuple(
        frozenset(j for j, flag in enumerate(row) if flag)
        for row in matrix.normalized
    )
    graph = CodeGraph(items, neighbors, matrix.threshold)
    chosen = sorted(greedy_clique(graph))
    sets = tuple(sorted((items[i] for i in chosen), key=_clique_key))
    if len(chosen) < 2:
        return Family(sets, 0)
    peak = max(
        matrix.raw[i][j] for i in chosen for j in chosen if i < j
    )
    return Family(sets, peak)
