"""Corner chopping: the momentum-polygon effect of an equivariant blowup.

Chopping a corner of size eps truncates the vertex by a triangle whose
legs have lattice size eps along the two incident edges.  It is feasible
only when both incident edges have size strictly greater than eps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lattice import PlanePoint, format_rational
from .polygon import DelzantPolygon, _fmt_point


class InfeasibleChopError(ValueError):
    """Requested chop violates the strict size rule."""


class ChopConsistencyError(RuntimeError):
    """A chop result does not satisfy the blowup bookkeeping."""


@dataclass(frozen=True)
class ChopRecord:
    """One chop: which vertex (by pre-chop index and coordinates) and its size."""

    vertex_index: int
    size: Fraction
    vertex: PlanePoint

    def __post_init__(self) -> None:
        if self.size <= 0:
            raise ValueError("chop size must be positive")


@dataclass(frozen=True)
class ChopDiagnostics:
    """Verified bookkeeping of a single chop (see chop_result_properties)."""

    vertex: PlanePoint
    size: Fraction
    new_edge_index: int
    edge_count_before: int
    edge_count_after: int
    area_delta: Fraction


def feasible_vertices(p: DelzantPolygon, eps: Fraction) -> tuple[int, ...]:
    """Vertex indices whose two incident edges both have size > eps (strict)."""
    if eps <= 0:
        raise ValueError("chop size must be positive")
    n = p.n
    return tuple(
        j for j in range(n) if p.edge_sizes[j - 1] > eps and p.edge_sizes[j] > eps
    )


def chop_corner(p: DelzantPolygon, v: int, eps: Fraction) -> DelzantPolygon:
    """Chop the corner at vertex index v by size eps.

    The vertex is replaced by its two displacements by eps along the
    emanating edges; the new edge has size eps, inward normal
    u_{v-1} + u_v, and self-intersection -1 (the exceptional sphere).
    """
    n = p.n
    v = v % n
    eps = Fraction(eps)
    for edge in (v - 1, v):
        if p.edge_sizes[edge] <= eps:
            raise InfeasibleChopError(
                f"vertex {_fmt_point(p.vertices[v])}: edge {edge % n} has size "
                f"{format_rational(p.edge_sizes[edge])} <= {format_rational(eps)}"
            )
    vx, vy = p.vertices[v]
    din = p.edge_dirs[v - 1]
    dout = p.edge_dirs[v]
    first = (vx - eps * din[0], vy - eps * din[1])
    second = (vx + eps * dout[0], vy + eps * dout[1])
    verts = p.vertices[:v] + (first, second) + p.vertices[v + 1 :]
    return DelzantPolygon(verts)


def chop_result_properties(p: DelzantPolygon, p_new: DelzantPolygon) -> ChopDiagnostics:
    """Verify that p_new is a single corner chop of p; report the bookkeeping.

    Asserts: one extra edge, area drop eps^2/2, new edge k = -1, both
    neighbors lose 1 from k and eps from size, every other (k_j, a_j)
    entry unchanged.
    """
    n = p.n
    if p_new.n != n + 1:
        raise ChopConsistencyError(f"edge count {p.n} -> {p_new.n}, expected +1")
    j = 0
    while j < n and p.vertices[j] == p_new.vertices[j]:
        j += 1
    if j >= n and p.vertices[0] != p_new.vertices[0]:
        raise ChopConsistencyError("vertex lists do not differ by one insertion")
    j %= n
    if p_new.vertices[j + 2 :] != p.vertices[j + 1 :]:
        raise ChopConsistencyError("vertex lists do not differ by one insertion")

    eps = p_new.edge_sizes[j]
    vx, vy = p.vertices[j]
    din, dout = p.edge_dirs[j - 1], p.edge_dirs[j]
    if p_new.vertices[j] != (vx - eps * din[0], vy - eps * din[1]) or p_new.vertices[
        (j + 1) % p_new.n
    ] != (vx + eps * dout[0], vy + eps * dout[1]):
        raise ChopConsistencyError("inserted vertices are not corner displacements")

    old, new = p.profile, p_new.profile
    m = p_new.n
    checks = [
        (new[j][0] == -1, "new edge must have k = -1"),
        (new[(j - 1) % m][0] == old[(j - 1) % n][0] - 1, "incoming neighbor k must drop by 1"),
        (new[(j + 1) % m][0] == old[j][0] - 1, "outgoing neighbor k must drop by 1"),
        (new[(j - 1) % m][1] == old[(j - 1) % n][1] - eps, "incoming neighbor must shrink by eps"),
        (new[(j + 1) % m][1] == old[j][1] - eps, "outgoing neighbor must shrink by eps"),
    ]
    for t in range(1, n - 1):
        checks.append(
            (new[(j + 1 + t) % m] == old[(j + t) % n], f"edge {(j + t) % n} must be untouched")
        )
    for ok, msg in checks:
        if not ok:
            raise ChopConsistencyError(msg)

    area_delta = p_new.area - p.area
    if area_delta != -eps * eps / 2:
        raise ChopConsistencyError(
            f"area delta {area_delta}, expected {-eps * eps / 2}"
        )
    return ChopDiagnostics(
        vertex=(vx, vy),
        size=eps,
        new_edge_index=j,
        edge_count_before=n,
        edge_count_after=m,
        area_delta=area_delta,
    )
