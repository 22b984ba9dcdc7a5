"""Shared test helpers: vector sampling, Cremona scrambling, provenance
replay, and an independent blowdown oracle.

The blowdown oracle verifies census output from the opposite direction:
it peels exceptional (k = -1) edges off a polygon until a minimal model
remains, reconstructs the blowup vector from what it saw, and checks
that the vector reduces to the expected one.  It shares only the polygon
primitives with the engine, not the search.
"""

from __future__ import annotations

import random
from fractions import Fraction

from toricensus.blowup import BlowupVector, DerivedParams, is_reduced, reduce
from toricensus.canonical import canonicalize
from toricensus.census import ActionClass, trapezoid_seeds
from toricensus.chop import chop_corner
from toricensus.polygon import DelzantPolygon, edge_profile


def random_reduced_vector(rng: random.Random, k: int | None = None, max_den: int = 60) -> BlowupVector:
    """A random reduced vector with k in {3,4,5} and denominators <= max_den.

    Mixes two shapes: near-uniform numerators (frequent ties, including
    delta_1 = delta_2) and a budget split that can push delta_1 close to
    lambda (small b, several seeds).
    """
    while True:
        kk = k if k is not None else rng.choice((3, 4, 5))
        den = rng.randint(2, max_den)
        lam_num = rng.randint(den, 3 * den)
        if lam_num < 4 or rng.random() < 0.5:
            nums = sorted((rng.randint(1, lam_num // 2) for _ in range(kk)), reverse=True)
        else:
            n1 = rng.randint(1, lam_num - 2)
            n2 = rng.randint(1, min(n1, lam_num - n1 - 1))
            n3 = rng.randint(1, min(n2, lam_num - n1 - n2))
            nums = [n1, n2, n3] + sorted((rng.randint(1, n3) for _ in range(kk - 3)), reverse=True)
        v = BlowupVector(Fraction(lam_num, den), tuple(Fraction(t, den) for t in nums))
        if is_reduced(v):
            return v


def cremona_scramble(rng: random.Random, v: BlowupVector, steps: int = 4) -> BlowupVector:
    """A vector in the same Cremona orbit as v, generally not reduced.

    Each step applies the move to a random triple of deltas, skipping
    choices that would leave a non-positive entry; the deltas are
    shuffled at the end.
    """
    lam, ds = v.lam, list(v.deltas)
    for _ in range(steps):
        for _attempt in range(10):
            i, j, l = rng.sample(range(len(ds)), 3)
            new_lam = 2 * lam - ds[i] - ds[j] - ds[l]
            ni = lam - ds[j] - ds[l]
            nj = lam - ds[i] - ds[l]
            nl = lam - ds[i] - ds[j]
            if new_lam > 0 and ni > 0 and nj > 0 and nl > 0:
                lam, ds[i], ds[j], ds[l] = new_lam, ni, nj, nl
                break
    rng.shuffle(ds)
    return BlowupVector(lam, tuple(ds))


def replay_chops(cls: ActionClass, params: DerivedParams) -> DelzantPolygon:
    """Re-run the recorded provenance; returns the concrete chopped polygon."""
    seed = next(s for s in trapezoid_seeds(params) if s.ell == cls.seed_ell)
    p = seed.polygon
    for rec in cls.chops:
        assert p.vertices[rec.vertex_index] == rec.vertex, "provenance index does not match its vertex"
        p = chop_corner(p, rec.vertex_index, rec.size)
    return p


def unchop(p: DelzantPolygon, j: int) -> DelzantPolygon:
    """Inverse corner chop: remove edge j (k_j must be -1), extending the two
    neighboring edges to their intersection."""
    assert edge_profile(p)[j][0] == -1, "only a k = -1 edge can be blown down"
    eps = p.edge_sizes[j]
    vx, vy = p.vertices[j]
    din = p.edge_dirs[j - 1]
    w = (vx + eps * din[0], vy + eps * din[1])
    nx, ny = p.vertices[(j + 1) % p.n]
    dout = p.edge_dirs[(j + 1) % p.n]
    assert w == (nx - eps * dout[0], ny - eps * dout[1]), "blowdown corner mismatch"
    rot = p.vertices[j:] + p.vertices[:j]
    return DelzantPolygon((w,) + rot[2:])


def _minimal_model_vectors(p: DelzantPolygon, sizes: list[Fraction]):
    """Blowup vectors read off a minimal polygon plus the recorded chop sizes."""
    prof = edge_profile(p)
    if p.n == 3:
        lam = p.edge_sizes[0]
        assert all(s == lam for s in p.edge_sizes), "Delzant triangle must have equal edges"
        if len(sizes) >= 3:
            yield BlowupVector(lam, tuple(sizes))
        return
    # quadrilateral without a -1 edge: a Hirzebruch trapezoid H_{a,b,m}, m != 1
    ks = [k for k, _ in prof]
    m = max(ks)
    if m == 0:
        a, b = p.edge_sizes[0], p.edge_sizes[1]
    else:
        i = ks.index(m)
        b = prof[(i + 1) % 4][1]
        short = prof[(i + 2) % 4][1]
        if m % 2 == 1:
            # odd trapezoid: one more exceptional class hides in the ruling
            t = (m - 1) // 2
            if len(sizes) >= 2:
                yield BlowupVector(short + (t + 1) * b, (short + t * b, *sizes))
            return
        a = short + (m // 2) * b
    # a product form: converting to the plane consumes one chop of size eps
    for eps in dict.fromkeys(sizes):
        if eps < a and eps < b and len(sizes) >= 3:
            rest = list(sizes)
            rest.remove(eps)
            yield BlowupVector(a + b - eps, (a - eps, b - eps, *rest))


def blowdown_recovers(p: DelzantPolygon, target: BlowupVector) -> bool:
    """True iff some blowdown sequence expresses p as an iterated blowup whose
    class vector reduces exactly to target (which must be reduced)."""
    assert is_reduced(target)
    seen: set = set()

    def search(q: DelzantPolygon, sizes: list[Fraction]) -> bool:
        key = (canonicalize(edge_profile(q)), tuple(sorted(sizes)))
        if key in seen:
            return False
        seen.add(key)
        minus_one = [j for j, (k, _) in enumerate(edge_profile(q)) if k == -1]
        if q.n > 3:
            for j in minus_one:
                if search(unchop(q, j), sizes + [q.edge_sizes[j]]):
                    return True
        if q.n == 3 or (q.n == 4 and not minus_one):
            for cand in _minimal_model_vectors(q, sizes):
                try:
                    if reduce(cand) == target:
                        return True
                except Exception:
                    continue
        return False

    return search(p, [])
