"""Delzant polygons and their edge profiles.

A Delzant polygon is a strictly convex rational polygon, oriented
counterclockwise, whose primitive inward edge normals u_j satisfy
det(u_j, u_{j+1}) = +1 at every vertex.  Each edge j carries the pair
(k_j, a_j): the self-intersection number k_j defined by
u_{j+1} + u_{j-1} = -k_j * u_j, and the lattice size a_j.  The cyclic
sequence of these pairs is the polygon's edge profile.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property

from .lattice import (
    AffineUnimodularMap,
    LatticeVector,
    PlanePoint,
    apply_map,
    format_rational,
    primitive_decompose,
)

ProfileEntry = tuple[int, Fraction]
Profile = tuple[ProfileEntry, ...]


class PolygonValidationError(ValueError):
    """Vertex list does not describe a Delzant polygon."""


class ProfileError(ValueError):
    """Entry sequence does not describe a Delzant polygon."""


def _fmt_point(p: PlanePoint) -> str:
    return f"({format_rational(p[0])}, {format_rational(p[1])})"


def _det(u: LatticeVector, v: LatticeVector) -> int:
    return u[0] * v[1] - u[1] * v[0]


def _angle_less(u: LatticeVector, v: LatticeVector) -> bool:
    """Strict counterclockwise order of directions, starting just above (1,0)."""
    hu = 0 if (u[1] > 0 or (u[1] == 0 and u[0] > 0)) else 1
    hv = 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1
    if hu != hv:
        return hu < hv
    return _det(u, v) > 0


class DelzantPolygon:
    """Immutable validated Delzant polygon.

    Construct via polygon_from_vertices / polygon_from_profile; the raw
    constructor accepts a vertex tuple and runs the full validation.
    Equality and hashing are on the embedded vertex tuple, not on the
    congruence class.
    """

    def __init__(self, vertices: tuple[PlanePoint, ...]):
        verts = tuple((Fraction(x), Fraction(y)) for x, y in vertices)
        n = len(verts)
        if n < 3:
            raise PolygonValidationError(f"need at least 3 vertices, got {n}")
        if len(set(verts)) != n:
            seen: set[PlanePoint] = set()
            for p in verts:
                if p in seen:
                    raise PolygonValidationError(f"repeated vertex {_fmt_point(p)}")
                seen.add(p)
        twice_area = sum(
            verts[j][0] * verts[(j + 1) % n][1] - verts[(j + 1) % n][0] * verts[j][1]
            for j in range(n)
        )
        if twice_area == 0:
            raise PolygonValidationError("degenerate vertex list (zero signed area)")
        if twice_area < 0:
            verts = verts[::-1]  # normalize to counterclockwise

        sizes: list[Fraction] = []
        dirs: list[LatticeVector] = []
        normals: list[LatticeVector] = []
        for j in range(n):
            p, q = verts[j], verts[(j + 1) % n]
            size, d = primitive_decompose((q[0] - p[0], q[1] - p[1]))
            sizes.append(size)
            dirs.append(d)
            normals.append((-d[1], d[0]))  # inward for CCW orientation

        for j in range(n):
            det = _det(normals[j], normals[(j + 1) % n])
            v = verts[(j + 1) % n]
            if det == 0:
                raise PolygonValidationError(f"collinear consecutive edges at vertex {_fmt_point(v)}")
            if det < 0:
                raise PolygonValidationError(f"reflex vertex {_fmt_point(v)} (polygon not convex)")
            if det != 1:
                raise PolygonValidationError(
                    f"non-unimodular vertex {_fmt_point(v)}: edge directions span det {det}"
                )

        # All turns are positive; a simple convex boundary wraps the normal
        # fan around exactly once.
        wraps = sum(
            1 for j in range(n) if not _angle_less(normals[j], normals[(j + 1) % n])
        )
        if wraps != 1:
            raise PolygonValidationError(f"edge normals wind {wraps} times (self-intersecting boundary)")

        closure = (
            sum(sizes[j] * dirs[j][0] for j in range(n)),
            sum(sizes[j] * dirs[j][1] for j in range(n)),
        )
        assert closure == (0, 0), "edge vectors of a closed vertex walk must cancel"

        self.vertices = verts
        self.edge_sizes = tuple(sizes)
        self.edge_dirs = tuple(dirs)
        self.inward_normals = tuple(normals)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def profile(self) -> Profile:
        n = self.n
        entries: list[ProfileEntry] = []
        for j in range(n):
            u = self.inward_normals[j]
            sx = self.inward_normals[(j + 1) % n][0] + self.inward_normals[j - 1][0]
            sy = self.inward_normals[(j + 1) % n][1] + self.inward_normals[j - 1][1]
            k = -sx // u[0] if u[0] != 0 else -sy // u[1]
            assert (sx, sy) == (-k * u[0], -k * u[1]), "u_{j+1} + u_{j-1} not a multiple of u_j"
            entries.append((k, self.edge_sizes[j]))
        return tuple(entries)

    @cached_property
    def area(self) -> Fraction:
        n = self.n
        twice = sum(
            self.vertices[j][0] * self.vertices[(j + 1) % n][1]
            - self.vertices[(j + 1) % n][0] * self.vertices[j][1]
            for j in range(n)
        )
        return Fraction(twice, 2)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DelzantPolygon) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        pts = ", ".join(_fmt_point(p) for p in self.vertices)
        return f"DelzantPolygon[{pts}]"


def polygon_from_vertices(points) -> DelzantPolygon:
    """Validate a vertex list (either orientation) into a DelzantPolygon."""
    return DelzantPolygon(tuple(points))


def edge_profile(p: DelzantPolygon) -> Profile:
    """The cyclic (k_j, a_j) sequence of the polygon's edges."""
    return p.profile


def polygon_area(p: DelzantPolygon) -> Fraction:
    """Exact shoelace area."""
    return p.area


def polygon_from_profile(prof) -> DelzantPolygon:
    """Rebuild a polygon realizing the given profile.

    Starts from the basis pair u_1 = (0,1), u_2 = (-1,0) and the origin, so
    the output is a fixed representative of the profile's congruence class.
    """
    entries: Profile = tuple((int(k), Fraction(a)) for k, a in prof)
    n = len(entries)
    if n < 3:
        raise ProfileError(f"need at least 3 entries, got {n}")
    for k, a in entries:
        if a <= 0:
            raise ProfileError(f"edge size {format_rational(a)} not positive")

    normals: list[LatticeVector] = [(0, 1), (-1, 0)]
    for j in range(1, n - 1):  # u_{j+1} = -k_j u_j - u_{j-1}, 0-indexed entries
        k = entries[j][0]
        u, w = normals[j], normals[j - 1]
        normals.append((-k * u[0] - w[0], -k * u[1] - w[1]))

    k_last, k_first = entries[n - 1][0], entries[0][0]
    u, w = normals[n - 1], normals[n - 2]
    if (-k_last * u[0] - w[0], -k_last * u[1] - w[1]) != normals[0]:
        raise ProfileError("monodromy failure: normal recursion does not close up")
    u, w = normals[0], normals[n - 1]
    if (-k_first * u[0] - w[0], -k_first * u[1] - w[1]) != normals[1]:
        raise ProfileError("monodromy failure: normal recursion does not return to the start")

    vertices: list[PlanePoint] = [(Fraction(0), Fraction(0))]
    for j in range(n - 1):
        ux, uy = normals[j]
        a = entries[j][1]
        x, y = vertices[-1]
        vertices.append((x + a * uy, y - a * ux))  # edge direction = rot(u, -90deg)
    ux, uy = normals[n - 1]
    a = entries[n - 1][1]
    if (vertices[-1][0] + a * uy, vertices[-1][1] - a * ux) != vertices[0]:
        raise ProfileError("closure failure: edge vectors do not sum to zero")

    poly = DelzantPolygon(tuple(vertices))
    return poly


def map_polygon(t: AffineUnimodularMap, p: DelzantPolygon) -> DelzantPolygon:
    """Image polygon under an affine unimodular map (revalidated)."""
    return DelzantPolygon(tuple(apply_map(t, v) for v in p.vertices))
