"""The census engine: seed trapezoids, chop recursively, deduplicate.

For a reduced vector (lam; d1, ..., dk) every torus action arises from a
Hirzebruch trapezoid H_{a, b, 2l} (0 <= l < a/b) by k-1 corner chops of
sizes delta, d3, ..., dk, and two actions coincide exactly when their
final polygons are AGL(2,Z)-congruent.  The engine explores every
ordering of the size multiset and every feasible vertex, memoizing on
(canonical profile, remaining sizes), and reports one class per
canonical profile.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .blowup import (
    BlowupVector,
    BoundReport,
    DerivedParams,
    NonexistenceReport,
    bound_report,
    derived_params,
    format_vector,
    is_reduced,
    nonexistence_check,
)
from .canonical import CanonicalProfile, canonicalize, is_achiral
from .chop import ChopRecord, chop_corner, feasible_vertices
from .lattice import PlanePoint
from .polygon import DelzantPolygon, edge_profile, polygon_from_profile

# A provenance step inside the search: (pre-chop vertex coordinates, size).
_Step = tuple[PlanePoint, Fraction]


@dataclass(frozen=True)
class TrapezoidSeed:
    """H_{a, b, 2l}: vertices (0,0), (a+lb, 0), (a-lb, b), (0, b)."""

    ell: int
    polygon: DelzantPolygon


@dataclass(frozen=True)
class ActionClass:
    """One equivalence class of torus actions.

    canonical is the class identity; representative is the polygon
    rebuilt from it; provenance (seed_ell, chops) replays to a congruent
    polygon.  chiral marks classes whose mirror image is not congruent
    to them (the census counts such a mirror pair once).
    """

    canonical: CanonicalProfile
    representative: DelzantPolygon
    seed_ell: int
    chops: tuple[ChopRecord, ...]
    chiral: bool


@dataclass(frozen=True)
class CensusResult:
    vector: BlowupVector
    params: DerivedParams
    nonexistence: NonexistenceReport
    bound_report: BoundReport
    classes: tuple[ActionClass, ...]

    @property
    def count(self) -> int:
        return len(self.classes)

    @property
    def mirror_inclusive_count(self) -> int:
        """Classes counted with chiral mirror pairs split: 2 per chiral class."""
        return sum(1 if not c.chiral else 2 for c in self.classes)


def trapezoid_seeds(p: DerivedParams) -> tuple[TrapezoidSeed, ...]:
    """One seed per admissible l, ascending: 0 <= l < a/b."""
    seeds = []
    for ell in range(math.ceil(p.a / p.b)):
        lb = ell * p.b
        poly = DelzantPolygon(
            (
                (Fraction(0), Fraction(0)),
                (p.a + lb, Fraction(0)),
                (p.a - lb, p.b),
                (Fraction(0), p.b),
            )
        )
        seeds.append(TrapezoidSeed(ell, poly))
    return tuple(seeds)


def census_state_key(p: DelzantPolygon, remaining) -> tuple:
    """Memoization key: congruent polygons with equal size multisets left
    to chop generate identical class sets, because chopping commutes with
    AGL(2,Z)."""
    return (canonicalize(edge_profile(p)), tuple(sorted(remaining)))


def _next_sizes(remaining: tuple[Fraction, ...], single_order: bool) -> tuple[Fraction, ...]:
    if single_order:
        return remaining[:1]
    # distinct values only: equal sizes are indistinguishable
    return tuple(dict.fromkeys(remaining))


def _remove_one(remaining: tuple[Fraction, ...], size: Fraction) -> tuple[Fraction, ...]:
    i = remaining.index(size)
    return remaining[:i] + remaining[i + 1 :]


def _census_seed(
    vertices: tuple[PlanePoint, ...],
    sizes: tuple[Fraction, ...],
    single_order: bool,
) -> dict[CanonicalProfile, tuple[_Step, ...]]:
    """Explore one seed; return the lexicographically least provenance per class.

    Phase 1 computes, per memoized state, the set of canonical profiles
    completable from it.  Phase 2 walks moves in (vertex, size) order, so
    the first complete path reaching a class is its least provenance;
    branches whose reachable classes are all settled are pruned.
    Provenance cannot be memoized on congruence classes: congruent states
    have different concrete coordinates downstream.
    """
    seed = DelzantPolygon(vertices)
    memo: dict[tuple, frozenset[CanonicalProfile]] = {}

    def reachable(p: DelzantPolygon, remaining: tuple[Fraction, ...]) -> frozenset:
        if not remaining:
            return frozenset((canonicalize(edge_profile(p)),))
        key = (canonicalize(edge_profile(p)), remaining)
        hit = memo.get(key)
        if hit is not None:
            return hit
        out: set[CanonicalProfile] = set()
        for size in _next_sizes(remaining, single_order):
            rest = remaining[1:] if single_order else _remove_one(remaining, size)
            for j in feasible_vertices(p, size):
                out |= reachable(chop_corner(p, j, size), rest)
        result = frozenset(out)
        memo[key] = result
        return result

    found: dict[CanonicalProfile, tuple[_Step, ...]] = {}

    def walk(p: DelzantPolygon, remaining: tuple[Fraction, ...], prefix: tuple[_Step, ...]) -> None:
        if not remaining:
            found.setdefault(canonicalize(edge_profile(p)), prefix)
            return
        moves = []
        for size in _next_sizes(remaining, single_order):
            rest = remaining[1:] if single_order else _remove_one(remaining, size)
            for j in feasible_vertices(p, size):
                moves.append(((p.vertices[j], size), j, size, rest))
        moves.sort(key=lambda m: m[0])
        for step, j, size, rest in moves:
            child = chop_corner(p, j, size)
            # prune settled subtrees: any class below already has a
            # lex-smaller path; dead ends have empty reachable sets
            if reachable(child, rest) <= found.keys():
                continue
            walk(child, rest, prefix + (step,))

    remaining0 = sizes if single_order else tuple(sorted(sizes))
    reachable(seed, remaining0)
    walk(seed, remaining0, ())
    return found


def _as_records(seed: TrapezoidSeed, steps: tuple[_Step, ...]) -> tuple[ChopRecord, ...]:
    """Re-run the steps to recover vertex indices for the provenance records."""
    p = seed.polygon
    records = []
    for point, size in steps:
        j = p.vertices.index(point)
        records.append(ChopRecord(vertex_index=j, size=size, vertex=point))
        p = chop_corner(p, j, size)
    return tuple(records)


def run_census(
    v: BlowupVector, *, single_order: bool = False, jobs: int = 1
) -> CensusResult:
    """Enumerate the equivalence classes of torus actions for a reduced vector.

    single_order restricts the search to the written chop order
    delta, d3, ..., dk instead of all orderings of the multiset.  jobs > 1
    explores the trapezoid seeds in a process pool; results are merged in
    seed order, so every parallelism degree yields an identical result.
    """
    if not is_reduced(v):
        raise ValueError(f"run_census requires a reduced vector, got ({format_vector(v)})")
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    params = derived_params(v)
    nonexist = nonexistence_check(v)
    bound = bound_report(v)
    if nonexist.none_exist:
        return CensusResult(v, params, nonexist, bound, ())

    sizes = (params.delta,) + v.deltas[2:]
    seeds = trapezoid_seeds(params)
    args = [(s.polygon.vertices, sizes, single_order) for s in seeds]
    if jobs == 1 or len(seeds) == 1:
        per_seed = [_census_seed(*a) for a in args]
    else:
        with ProcessPoolExecutor(max_workers=min(jobs, len(seeds))) as pool:
            per_seed = list(pool.map(_census_seed, *zip(*args)))

    merged: dict[CanonicalProfile, tuple[TrapezoidSeed, tuple[_Step, ...]]] = {}
    for seed, found in zip(seeds, per_seed):
        for canon, steps in found.items():
            merged.setdefault(canon, (seed, steps))

    classes = []
    for canon in sorted(merged):
        seed, steps = merged[canon]
        classes.append(
            ActionClass(
                canonical=canon,
                representative=polygon_from_profile(canon),
                seed_ell=seed.ell,
                chops=_as_records(seed, steps),
                chiral=not is_achiral(canon),
            )
        )

    result = CensusResult(v, params, nonexist, bound, tuple(classes))
    _assert_postconditions(result)
    return result


def _assert_postconditions(result: CensusResult) -> None:
    v = result.vector
    expected_n = v.k + 3
    expected_area = (v.lam**2 - sum(d**2 for d in v.deltas)) / 2
    for c in result.classes:
        rep = c.representative
        assert rep.n == expected_n, f"class has {rep.n} edges, expected {expected_n}"
        assert rep.area == expected_area, f"class area {rep.area} != {expected_area}"
        assert sum(k for k, _ in rep.profile) == 12 - 3 * expected_n
        assert canonicalize(edge_profile(rep)) == c.canonical
    assert result.count <= result.bound_report.bound, "census exceeded the upper bound"
