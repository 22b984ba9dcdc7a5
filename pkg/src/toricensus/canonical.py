"""Canonical form of an edge profile under AGL(2,Z) congruence.

Two Delzant polygons are AGL(2,Z)-congruent exactly when their edge
profiles differ by a cyclic or anti-cyclic permutation, so the
lexicographic minimum over all rotations of the profile and of its
reversal is a complete invariant.  Pairs (k, a) compare k first, then a.
"""

from __future__ import annotations

from .polygon import DelzantPolygon, Profile, edge_profile

CanonicalProfile = Profile


def _min_rotation(entries: Profile) -> Profile:
    n = len(entries)
    doubled = entries + entries
    return min(doubled[i : i + n] for i in range(n))


def oriented_canonical(prof: Profile) -> Profile:
    """Lexicographic minimum over rotations only (orientation preserved)."""
    return _min_rotation(tuple(prof))


def canonicalize(prof: Profile) -> CanonicalProfile:
    """Lexicographic minimum over all rotations of prof and of reversed prof."""
    entries = tuple(prof)
    return min(_min_rotation(entries), _min_rotation(entries[::-1]))


def congruent(p: DelzantPolygon, q: DelzantPolygon) -> bool:
    """AGL(2,Z) congruence test via canonical profiles."""
    return canonicalize(edge_profile(p)) == canonicalize(edge_profile(q))


def is_achiral(prof: Profile) -> bool:
    """True when the profile's class contains its own mirror image."""
    entries = tuple(prof)
    return _min_rotation(entries) == _min_rotation(entries[::-1])
