"""Greedy construction of code families.

Codes are built one difference at a time.  Opening pairs that respect the
positional ranges and the self-correlation ceiling seed a pool; each stage
links compatible partial codes into a graph, harvests greedy cliques, and
grows every clique member by one more difference.  Once a single free
position remains, the closing difference is forced by the length, the
completed codes are re-checked and put in canonical rotation, and the
surviving sets compete for membership in the emitted family.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass

from .cliques import (
    CliqueSet,
    CodeGraph,
    Family,
    build_graph,
    enumerate_cliques,
    greedy_clique,
    make_clique_set,
    select_family,
)
from .codes import (
    CodeParams,
    Dopr,
    PartialDopr,
    last_difference_range,
    max_difference_at,
    standardize,
)
from .correlation import autocorr_edop, interset_crosscorr
from .edop import edop_full, edop_partial

__all__ = [
    "DesignConfig",
    "enumerate_first_pairs",
    "extend_clique_codes",
    "design_fixed",
    "design_multi",
]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class DesignConfig:
    """Knobs for one design run over one or more parameter tuples."""

    parameter_list: tuple[CodeParams, ...]
    max_sets: int | None = None
    deterministic_order: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "parameter_list", tuple(self.parameter_list))
        if not self.parameter_list:
            raise ValueError("parameter_list must not be empty")
        if not all(isinstance(p, CodeParams) for p in self.parameter_list):
            raise TypeError("parameter_list entries must be CodeParams")
        if self.max_sets is not None and self.max_sets < 1:
            raise ValueError("max_sets must be positive when given")


def enumerate_first_pairs(params: CodeParams) -> tuple[PartialDopr, ...]:
    """Opening difference pairs that can begin a conforming code.

    The two differences are distinct, each stays inside its positional
    range, and the pair on its own already meets the self-correlation
    ceiling.  Pairs are produced in lexicographic order.
    """
    if params.w < 3:
        raise ValueError("opening pairs need weight at least 3")
    n, w = params.n, params.w
    cap1 = max_difference_at(n, w, 1)
    cap2 = max_difference_at(n, w, 2)
    pairs: list[PartialDopr] = []
    for d1 in range(1, cap1 + 1):
        for d2 in range(1, cap2 + 1):
            if d1 == d2 or d1 + d2 > n - (w - 2):
                continue
            partial = PartialDopr((d1, d2), n, w)
            if autocorr_edop(edop_partial(partial)).lambda_ax <= params.lambda_a:
                pairs.append(partial)
    return tuple(pairs)


def extend_clique_codes(codes, params: CodeParams) -> tuple[PartialDopr, ...]:
    """One-difference extensions of every member of a partial-code clique.

    A new difference must stay inside its positional range, leave room for
    the positions still unfilled, and keep the partial self correlation
    within the ceiling.  Under a ceiling of 1 a difference equal to its
    predecessor can never survive, so it is skipped without scoring.
    """
    n, w = params.n, params.w
    out: list[PartialDopr] = []
    seen: set[tuple[int, ...]] = set()
    for code in codes:
        u = code.u
        if u + 1 >= w:
            raise ValueError("cannot extend past the last free position")
        total = sum(code.dops)
        cap = min(max_difference_at(n, w, u + 1), n - (w - u - 1) - total)
        for e in range(1, cap + 1):
            if params.lambda_a == 1 and e == code.dops[-1]:
                continue
            cand = PartialDopr(code.dops + (e,), n, w)
            if autocorr_edop(edop_partial(cand)).lambda_ax > params.lambda_a:
                continue
            if cand.dops not in seen:
                seen.add(cand.dops)
                out.append(cand)
    return tuple(out)


def _dedup_by_class(pool, n: int):
    """One representative per rotation class, first occurrence kept.

    The positional ranges prune most rotational duplicates from a pool but
    not all of them.  Duplicates are poison for the degree-greedy walk:
    copies of one class are mutually non-adjacent yet share all other
    neighbors, so they inflate the degrees of everything around them and
    steer the walk away from large cliques.  Applied where members are one
    difference short of complete, so the class is already determined.
    """
    kept = []
    seen: set[tuple[int, ...]] = set()
    for member in pool:
        closed = Dopr(member.dops + (n - sum(member.dops),), n)
        key = standardize(closed).dops
        if key not in seen:
            seen.add(key)
            kept.append(member)
    return tuple(kept)


def _capped(cliques, max_sets: int | None):
    """Keep the largest cliques, earliest-found first on ties."""
    if max_sets is None or len(cliques) <= max_sets:
        return cliques
    ranked = sorted(range(len(cliques)), key=lambda i: (-len(cliques[i]), i))
    keep = sorted(ranked[:max_sets])
    return tuple(cliques[i] for i in keep)


def _finalize_clique(members, params: CodeParams) -> CliqueSet | None:
    """Close, re-check, and canonicalize one clique of near-complete codes.

    A closing difference that lands outside the canonical last-position
    range is logged and the code is re-rotated into canonical form rather
    than thrown away; discarding it would leave the other emitted sets
    extendable by the discarded class.
    """
    n, w = params.n, params.w
    lo, hi = last_difference_range(n, w)
    completed: list = []
    seen: set[tuple[int, ...]] = set()
    for member in members:
        closing = n - sum(member.dops)
        if not lo <= closing <= hi:
            log.debug(
                "closing difference %d of %s is outside [%d, %d]; "
                "re-rotating instead of discarding",
                closing,
                member.dops,
                lo,
                hi,
            )
        code = Dopr(member.dops + (closing,), n)
        if autocorr_edop(edop_full(code)).lambda_ax > params.lambda_a:
            continue
        standard = standardize(code)
        if standard.dops not in seen:
            seen.add(standard.dops)
            completed.append(standard)
    if not completed:
        return None
    return make_clique_set(completed, params)


def design_fixed(
    params: CodeParams,
    max_sets: int | None = None,
    *,
    deterministic_order: bool = True,
) -> Family:
    """Design a family of code sets for a single parameter tuple.

    An empty family means the search found no conforming set for these
    parameters, not an error.  ``max_sets`` caps both the cliques carried
    forward at each stage and the sets finally emitted.
    """
    if max_sets is not None and max_sets < 1:
        raise ValueError("max_sets must be positive when given")
    if params.w < 3:
        raise ValueError("the designer needs weight at least 3")
    first = enumerate_first_pairs(params)

    candidates: list[CliqueSet] = []
    emitted: set[tuple] = set()
    pools = deque([first])
    while pools:
        pool = pools.popleft()
        if not pool:
            continue
        if deterministic_order:
            pool = tuple(sorted(pool, key=lambda c: c.dops))
        if pool[0].u == params.w - 1:
            pool = _dedup_by_class(pool, params.n)
        graph = build_graph(pool, params.lambda_c)
        for clique in _capped(enumerate_cliques(graph), max_sets):
            members = tuple(pool[i] for i in sorted(clique))
            if members[0].u < params.w - 1:
                pools.append(extend_clique_codes(members, params))
                continue
            done = _finalize_clique(members, params)
            if done is None:
                continue
            key = (done.params, tuple(c.dops for c in done.codes))
            if key not in emitted:
                emitted.add(key)
                candidates.append(done)
    family = select_family(candidates, params.lambda_c)
    return _truncate_family(family, max_sets)


def _truncate_family(family: Family, max_sets: int | None) -> Family:
    if max_sets is None or len(family.sets) <= max_sets:
        return family
    sets = family.sets[:max_sets]
    if len(sets) < 2:
        return Family(sets, 0)
    peak = max(
        interset_crosscorr(a, b)
        for i, a in enumerate(sets)
        for b in sets[i + 1 :]
    )
    return Family(sets, peak)


def design_multi(config: DesignConfig) -> Family:
    """Design across several parameter tuples and merge the survivors.

    A single-entry parameter list defers to the fixed-parameter pipeline.
    Otherwise every set designed for any tuple competes in one graph whose
    edges require the inter-set correlation to be at most the stricter of
    the two cross ceilings plus one; a greedy clique of that graph is the
    emitted family.
    """
    if len(config.parameter_list) == 1:
        return design_fixed(
            config.parameter_list[0],
            config.max_sets,
            deterministic_order=config.deterministic_order,
        )
    pool: list[CliqueSet] = []
    for params in config.parameter_list:
        fam = design_fixed(
            params,
            config.max_sets,
            deterministic_order=config.deterministic_order,
        )
        pool.extend(fam.sets)
    if not pool:
        return Family((), 0)

    size = len(pool)
    raw = [[0] * size for _ in range(size)]
    nbrs: list[set[int]] = [set() for _ in range(size)]
    for i in range(size):
        raw[i][i] = interset_crosscorr(pool[i], pool[i])
        for j in range(i + 1, size):
            raw[i][j] = raw[j][i] = interset_crosscorr(pool[i], pool[j])
            limit = min(pool[i].params.lambda_c, pool[j].params.lambda_c) + 1
            if raw[i][j] <= limit:
                nbrs[i].add(j)
                nbrs[j].add(i)
    floor = min(p.lambda_c for p in (s.params for s in pool)) + 1
    graph = CodeGraph(tuple(pool), tuple(frozenset(s) for s in nbrs), floor)
    chosen = sorted(greedy_clique(graph))
    sets = tuple(
        sorted(
            (pool[i] for i in chosen),
            key=lambda s: (
                s.params.n,
                s.params.w,
                tuple(c.dops for c in s.codes),
            ),
        )
    )
    if len(chosen) < 2:
        return _truncate_family(Family(sets, 0), config.max_sets)
    peak = max(raw[i][j] for i in chosen for j in chosen if i < j)
    return _truncate_family(Family(sets, peak), config.max_sets)
