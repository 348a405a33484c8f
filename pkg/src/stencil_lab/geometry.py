"""Computational domains: containment predicates and boundary samplers.

Every shape provides a vectorized open-interior predicate ``contains``, a
parametric boundary description as a list of smooth pieces, and analytic
outward normals.  Boundary discretization marches each smooth piece at
arc-length spacing ~h and then thins points that fall closer than 0.9*h
to an already kept point (this only happens next to corners and cusps,
where adjacent pieces approach each other).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import ConfigurationError

__all__ = [
    "BoundaryPoint",
    "Domain",
    "Interval",
    "Disc",
    "Ball",
    "Annulus",
    "Triangle",
    "PacMan",
    "Nephroid",
    "PolarRose",
    "rotate2d",
    "rotation_matrix",
    "discretize_boundary",
    "outward_normal",
    "domain_from_spec",
]

GOLDEN_ANGLE = 2.0 * math.pi * (1.0 - 1.0 / ((1.0 + math.sqrt(5.0)) / 2.0))


def rotation_matrix(angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, -s], [s, c]])


def rotate2d(points, angle, about=(0.0, 0.0)):
    """Rotate (..., 2) points by ``angle`` around ``about``."""
    pts = np.asarray(points, dtype=float)
    about = np.asarray(about, dtype=float)
    return (pts - about) @ rotation_matrix(angle).T + about


@dataclass
class BoundaryPoint:
    """A boundary sample: position, outward unit normal, parameter value."""

    position: np.ndarray
    normal: np.ndarray
    arc_parameter: float
    piece: int = 0
    corner: bool = False


@dataclass
class _Piece:
    """Smooth parametric boundary segment in world coordinates."""

    t0: float
    t1: float
    position: Callable[[np.ndarray], np.ndarray]   # (n,) -> (n, 2)
    normal: Callable[[np.ndarray], np.ndarray]     # (n,) -> (n, 2) unit
    corner_start: bool = False


class Domain:
    """Base class; subclasses are small parameter records."""

    dimension: int = 2

    def contains(self, x) -> np.ndarray:
        """Open-interior predicate, vectorized over (..., d) inputs."""
        raise NotImplementedError

    def bounding_box(self) -> tuple[np.ndarray, np.ndarray]:
        raise NotImplementedError

    def diameter(self) -> float:
        lo, hi = self.bounding_box()
        return float(np.linalg.norm(hi - lo))

    def boundary_pieces(self) -> list[_Piece]:
        raise NotImplementedError

    def spec_string(self) -> str:
        raise NotImplementedError

    # -- helpers -----------------------------------------------------------

    def _check_dim(self, x):
        x = np.asarray(x, dtype=float)
        if x.shape[-1] != self.dimension:
            raise ValueError(
                f"point dimension {x.shape[-1]} != domain dimension {self.dimension}"
            )
        return x


# --------------------------------------------------------------------------
# 1D
# --------------------------------------------------------------------------

@dataclass
class Interval(Domain):
    a: float = 0.0
    b: float = 1.0

    def __post_init__(self):
        self.dimension = 1
        if not self.b > self.a:
            raise ConfigurationError("interval needs b > a")

    def contains(self, x):
        x = self._check_dim(x)
        return (x[..., 0] > self.a) & (x[..., 0] < self.b)

    def bounding_box(self):
        return np.array([self.a]), np.array([self.b])

    def diameter(self):
        return self.b - self.a

    def spec_string(self):
        return f"interval:{self.a:g},{self.b:g}"


# --------------------------------------------------------------------------
# smooth 2D shapes
# --------------------------------------------------------------------------

@dataclass
class Disc(Domain):
    center: tuple[float, float] = (0.5, 0.5)
    radius: float = 0.5

    def __post_init__(self):
        self.dimension = 2
        if self.radius <= 0:
            raise ConfigurationError("disc radius must be positive")

    def contains(self, x):
        x = self._check_dim(x)
        return np.linalg.norm(x - np.asarray(self.center), axis=-1) < self.radius

    def bounding_box(self):
        c = np.asarray(self.center)
        return c - self.radius, c + self.radius

    def diameter(self):
        return 2.0 * self.radius

    def boundary_pieces(self):
        c = np.asarray(self.center)
        r = self.radius

        def pos(t):
            t = np.atleast_1d(t)
            return c + r * np.stack([np.cos(t), np.sin(t)], axis=-1)

        def nrm(t):
            t = np.atleast_1d(t)
            return np.stack([np.cos(t), np.sin(t)], axis=-1)

        return [_Piece(0.0, 2.0 * math.pi, pos, nrm)]

    def spec_string(self):
        return f"disc:{self.center[0]:g},{self.center[1]:g},{self.radius:g}"


@dataclass
class Annulus(Domain):
    center: tuple[float, float] = (0.5, 0.5)
    r_inner: float = 0.1
    r_outer: float = 0.5

    def __post_init__(self):
        self.dimension = 2
        if not 0 < self.r_inner < self.r_outer:
            raise ConfigurationError("annulus needs 0 < r_inner < r_outer")

    def contains(self, x):
        x = self._check_dim(x)
        d = np.linalg.norm(x - np.asarray(self.center), axis=-1)
        return (d > self.r_inner) & (d < self.r_outer)

    def bounding_box(self):
        c = np.asarray(self.center)
        return c - self.r_outer, c + self.r_outer

    def diameter(self):
        return 2.0 * self.r_outer

    def boundary_pieces(self):
        c = np.asarray(self.center)

        def circle(radius, sign):
            def pos(t):
                t = np.atleast_1d(t)
                return c + radius * np.stack([np.cos(t), np.sin(t)], axis=-1)

            def nrm(t):
                t = np.atleast_1d(t)
                return sign * np.stack([np.cos(t), np.sin(t)], axis=-1)

            return _Piece(0.0, 2.0 * math.pi, pos, nrm)

        return [circle(self.r_outer, 1.0), circle(self.r_inner, -1.0)]

    def spec_string(self):
        return (f"annulus:{self.center[0]:g},{self.center[1]:g},"
                f"{self.r_inner:g},{self.r_outer:g}")


# --------------------------------------------------------------------------
# 3D ball
# --------------------------------------------------------------------------

@dataclass
class Ball(Domain):
    center: tuple[float, float, float] = (0.5, 0.5, 0.5)
    radius: float = 0.5

    def __post_init__(self):
        self.dimension = 3
        if self.radius <= 0:
            raise ConfigurationError("ball radius must be positive")

    def contains(self, x):
        x = self._check_dim(x)
        return np.linalg.norm(x - np.asarray(self.center), axis=-1) < self.radius

    def bounding_box(self):
        c = np.asarray(self.center)
        return c - self.radius, c + self.radius

    def diameter(self):
        return 2.0 * self.radius

    def spec_string(self):
        return (f"ball:{self.center[0]:g},{self.center[1]:g},"
                f"{self.center[2]:g},{self.radius:g}")


# --------------------------------------------------------------------------
# piecewise 2D shapes
# --------------------------------------------------------------------------

@dataclass
class Triangle(Domain):
    v1: tuple[float, float] = (0.0, 0.0)
    v2: tuple[float, float] = (1.0, 0.0)
    v3: tuple[float, float] = (0.0, 1.0)

    def __post_init__(self):
        self.dimension = 2
        v = self._vertices_ccw()
        area2 = _cross(v[1] - v[0], v[2] - v[0])
        if abs(area2) < 1e-14:
            raise ConfigurationError("triangle vertices are collinear")

    def _vertices_ccw(self):
        v = np.array([self.v1, self.v2, self.v3], dtype=float)
        if _cross(v[1] - v[0], v[2] - v[0]) < 0:
            v = v[::-1]
        return v

    def contains(self, x):
        x = self._check_dim(x)
        v = self._vertices_ccw()
        inside = np.ones(x.shape[:-1], dtype=bool)
        for i in range(3):
            e = v[(i + 1) % 3] - v[i]
            w = x - v[i]
            inside &= e[0] * w[..., 1] - e[1] * w[..., 0] > 0
        return inside

    def bounding_box(self):
        v = np.array([self.v1, self.v2, self.v3], dtype=float)
        return v.min(axis=0), v.max(axis=0)

    def diameter(self):
        v = np.array([self.v1, self.v2, self.v3], dtype=float)
        return max(np.linalg.norm(v[i] - v[j]) for i in range(3) for j in range(i))

    def boundary_pieces(self):
        v = self._vertices_ccw()
        pieces = []
        for i in range(3):
            a, b = v[i], v[(i + 1) % 3]
            length = float(np.linalg.norm(b - a))
            direction = (b - a) / length
            outward = np.array([direction[1], -direction[0]])

            def pos(t, a=a, direction=direction):
                t = np.atleast_1d(t)
                return a + t[:, None] * direction

            def nrm(t, outward=outward):
                t = np.atleast_1d(t)
                return np.broadcast_to(outward, (t.shape[0], 2)).copy()

            pieces.append(_Piece(0.0, length, pos, nrm, corner_start=True))
        return pieces

    def spec_string(self):
        flat = ",".join(f"{c:g}" for p in (self.v1, self.v2, self.v3) for c in p)
        return f"triangle:{flat}"


def _cross(u, v):
    return float(u[0] * v[1] - u[1] * v[0])


@dataclass
class PacMan(Domain):
    """Disc minus the axis-aligned square spanning its lower-right quadrant,
    rotated about the disc center."""

    center: tuple[float, float] = (0.5, 0.5)
    radius: float = 0.5
    rotation: float = math.pi / 4.0

    def __post_init__(self):
        self.dimension = 2
        if self.radius <= 0:
            raise ConfigurationError("pacman radius must be positive")

    def _to_base(self, x):
        return rotate2d(x, -self.rotation, about=self.center)

    def contains(self, x):
        x = self._check_dim(x)
        c = np.asarray(self.center)
        y = self._to_base(x)
        in_disc = np.linalg.norm(y - c, axis=-1) < self.radius
        in_square = (
            (y[..., 0] >= c[0]) & (y[..., 0] <= c[0] + self.radius)
            & (y[..., 1] >= c[1] - self.radius) & (y[..., 1] <= c[1])
        )
        return in_disc & ~in_square

    def bounding_box(self):
        c = np.asarray(self.center)
        return c - self.radius, c + self.radius

    def diameter(self):
        return 2.0 * self.radius

    def boundary_pieces(self):
        c = np.asarray(self.center)
        r = self.radius
        rot = self.rotation
        R = rotation_matrix(rot)

        def world(p):
            return rotate2d(p, rot, about=c)

        def arc_pos(t):
            t = np.atleast_1d(t)
            return world(c + r * np.stack([np.cos(t), np.sin(t)], axis=-1))

        def arc_nrm(t):
            t = np.atleast_1d(t)
            return np.stack([np.cos(t), np.sin(t)], axis=-1) @ R.T

        # vertical mouth edge from (cx, cy-r) up to the notch center
        def edge_a_pos(t):
            t = np.atleast_1d(t)
            p = np.stack([np.full_like(t, c[0]), c[1] - r + t], axis=-1)
            return world(p)

        def edge_a_nrm(t):
            t = np.atleast_1d(t)
            return np.broadcast_to(R @ np.array([1.0, 0.0]), (t.shape[0], 2)).copy()

        # horizontal mouth edge from the notch center to (cx+r, cy)
        def edge_b_pos(t):
            t = np.atleast_1d(t)
            p = np.stack([c[0] + t, np.full_like(t, c[1])], axis=-1)
            return world(p)

        def edge_b_nrm(t):
            t = np.atleast_1d(t)
            return np.broadcast_to(R @ np.array([0.0, -1.0]), (t.shape[0], 2)).copy()

        return [
            _Piece(0.0, 1.5 * math.pi, arc_pos, arc_nrm, corner_start=True),
            _Piece(0.0, r, edge_a_pos, edge_a_nrm, corner_start=True),
            _Piece(0.0, r, edge_b_pos, edge_b_nrm, corner_start=True),
        ]

    def spec_string(self):
        return (f"pacman:{self.center[0]:g},{self.center[1]:g},"
                f"{self.radius:g},{self.rotation:g}")


@dataclass
class Nephroid(Domain):
    """Two-cusped epicycloid x=a(3cos t - cos 3t), y=a(3sin t - sin 3t),
    a=1/8, rotated then translated."""

    rotation: float = math.pi / 4.0
    translation: tuple[float, float] = (0.5, 0.5)
    scale_a: float = 0.125

    def __post_init__(self):
        self.dimension = 2

    def _to_base(self, x):
        y = np.asarray(x, dtype=float) - np.asarray(self.translation)
        return y @ rotation_matrix(-self.rotation).T

    def contains(self, x):
        x = self._check_dim(x)
        y = self._to_base(x)
        a = self.scale_a
        q = y[..., 0] ** 2 + y[..., 1] ** 2 - 4.0 * a ** 2
        return q ** 3 - 108.0 * a ** 4 * y[..., 1] ** 2 < 0.0

    def bounding_box(self):
        pts = self._base_positions(np.linspace(0.0, 2.0 * math.pi, 4096))
        pts = pts @ rotation_matrix(self.rotation).T + np.asarray(self.translation)
        return pts.min(axis=0), pts.max(axis=0)

    def _base_positions(self, t):
        a = self.scale_a
        t = np.atleast_1d(t)
        return a * np.stack(
            [3.0 * np.cos(t) - np.cos(3.0 * t), 3.0 * np.sin(t) - np.sin(3.0 * t)],
            axis=-1,
        )

    def _base_tangent(self, t):
        a = self.scale_a
        t = np.atleast_1d(t)
        return 3.0 * a * np.stack(
            [np.sin(3.0 * t) - np.sin(t), np.cos(t) - np.cos(3.0 * t)], axis=-1
        )

    def boundary_pieces(self):
        R = rotation_matrix(self.rotation)
        shift = np.asarray(self.translation)

        def pos(t):
            return self._base_positions(t) @ R.T + shift

        def nrm(t):
            tan = self._base_tangent(t)
            n = np.stack([tan[..., 1], -tan[..., 0]], axis=-1)
            n /= np.linalg.norm(n, axis=-1, keepdims=True)
            return n @ R.T

        # cusps at t = 0 and t = pi split the curve into two smooth halves
        return [
            _Piece(0.0, math.pi, pos, nrm, corner_start=True),
            _Piece(math.pi, 2.0 * math.pi, pos, nrm, corner_start=True),
        ]

    def spec_string(self):
        return (f"nephroid:{self.rotation:g},"
                f"{self.translation[0]:g},{self.translation[1]:g}")


@dataclass
class PolarRose(Domain):
    """r(phi) = 0.25*|cos(1.5 phi)|**sin(3 phi), translated."""

    translation: tuple[float, float] = (0.5, 0.5)

    # parameter values where |cos(1.5 phi)| hits zero; the radius stays
    # continuous there but its derivative blows up, so pieces split here
    JUNCTIONS = (math.pi / 3.0, math.pi, 5.0 * math.pi / 3.0)

    def __post_init__(self):
        self.dimension = 2

    def radius_at(self, phi):
        phi = np.asarray(phi, dtype=float)
        c = np.abs(np.cos(1.5 * phi))
        s = np.sin(3.0 * phi)
        with np.errstate(divide="ignore", invalid="ignore"):
            r = 0.25 * np.exp(s * np.log(c))
        return np.where(c == 0.0, 0.25, r)

    def _radius_slope(self, phi):
        phi = np.asarray(phi, dtype=float)
        c = np.cos(1.5 * phi)
        with np.errstate(divide="ignore", invalid="ignore"):
            g = (3.0 * np.cos(3.0 * phi) * np.log(np.abs(c))
                 - 1.5 * np.sin(3.0 * phi) * np.tan(1.5 * phi))
        return self.radius_at(phi) * g

    def contains(self, x):
        x = self._check_dim(x)
        y = np.asarray(x, dtype=float) - np.asarray(self.translation)
        d = np.linalg.norm(y, axis=-1)
        phi = np.arctan2(y[..., 1], y[..., 0])
        return d < self.radius_at(phi)

    def bounding_box(self):
        phi = np.linspace(0.0, 2.0 * math.pi, 4096)
        r = self.radius_at(phi)
        pts = np.stack([r * np.cos(phi), r * np.sin(phi)], axis=-1)
        pts += np.asarray(self.translation)
        return pts.min(axis=0), pts.max(axis=0)

    def boundary_pieces(self):
        shift = np.asarray(self.translation)

        def pos(phi):
            phi = np.atleast_1d(phi)
            r = self.radius_at(phi)
            return shift + np.stack([r * np.cos(phi), r * np.sin(phi)], axis=-1)

        def nrm(phi):
            phi = np.atleast_1d(phi)
            r = self.radius_at(phi)
            rp = self._radius_slope(phi)
            tx = rp * np.cos(phi) - r * np.sin(phi)
            ty = rp * np.sin(phi) + r * np.cos(phi)
            n = np.stack([ty, -tx], axis=-1)
            n /= np.linalg.norm(n, axis=-1, keepdims=True)
            return n

        j = self.JUNCTIONS
        spans = [(j[0], j[1]), (j[1], j[2]), (j[2], j[0] + 2.0 * math.pi)]
        return [_Piece(t0, t1, pos, nrm, corner_start=True) for t0, t1 in spans]

    def spec_string(self):
        return f"polar_rose:{self.translation[0]:g},{self.translation[1]:g}"


# --------------------------------------------------------------------------
# boundary discretization
# --------------------------------------------------------------------------

def contains(domain: Domain, x):
    """Open-interior membership; vectorized over leading axes of x."""
    return domain.contains(x)


def _piece_table(piece: _Piece, h: float):
    """Dense parameter grid + cumulative arc length for one piece."""
    span = piece.t1 - piece.t0
    n_dense = 4096
    t = np.linspace(piece.t0, piece.t1, n_dense)
    pts = piece.position(t)
    seg = np.linalg.norm(np.diff(pts, axis=0), axis=1)
    cum = np.concatenate([[0.0], np.cumsum(seg)])
    total = float(cum[-1])
    # refine until the grid resolves h comfortably
    while total / (n_dense - 1) > h / 8.0 and n_dense < 2 ** 18:
        n_dense *= 4
        t = np.linspace(piece.t0, piece.t1, n_dense)
        pts = piece.position(t)
        seg = np.linalg.norm(np.diff(pts, axis=0), axis=1)
        cum = np.concatenate([[0.0], np.cumsum(seg)])
        total = float(cum[-1])
    return t, cum, total


def _sample_piece(piece: _Piece, h: float):
    """Arc-length-uniform parameters covering [t0, t1), including t0."""
    t, cum, total = _piece_table(piece, h)
    count = max(1, int(round(total / h)))
    targets = np.arange(count) * (total / count)
    return np.interp(targets, cum, t), total


def discretize_boundary(domain: Domain, h: float) -> list[BoundaryPoint]:
    """Sample the boundary at spacing ~h with outward normals.

    1D domains return their two endpoints.  2D boundaries are marched piece
    by piece at uniform arc length; samples closer than 0.9*h to a kept
    sample (possible only near corners) are dropped.  The 3D ball uses
    latitude bands with in-band spacing ~h.
    """
    if h <= 0:
        raise ConfigurationError("spacing h must be positive")
    if h > domain.diameter():
        raise ConfigurationError(
            f"spacing h={h} exceeds domain diameter {domain.diameter():.3g}"
        )
    if isinstance(domain, Interval):
        return [
            BoundaryPoint(np.array([domain.a]), np.array([-1.0]), 0.0, 0),
            BoundaryPoint(np.array([domain.b]), np.array([1.0]), 1.0, 0),
        ]
    if isinstance(domain, Ball):
        return _ball_boundary(domain, h)

    pieces = domain.boundary_pieces()
    samples: list[BoundaryPoint] = []
    for j, piece in enumerate(pieces):
        ts, _ = _sample_piece(piece, h)
        pos = piece.position(ts)
        nrm = piece.normal(ts)
        for k in range(len(ts)):
            corner = piece.corner_start and k == 0
            normal = nrm[k]
            if corner:
                # one-sided normal taken from the incoming (lower-parameter)
                # smooth piece, just before the corner
                prev = pieces[(j - 1) % len(pieces)]
                t_in = prev.t1 - 1e-9 * (prev.t1 - prev.t0)
                normal = prev.normal(np.array([t_in]))[0]
            samples.append(BoundaryPoint(pos[k], normal, float(ts[k]), j, corner))
    return _thin(samples, 0.9 * h)


def _thin(samples: list[BoundaryPoint], min_dist: float) -> list[BoundaryPoint]:
    kept: list[BoundaryPoint] = [s for s in samples if s.corner]
    if kept:
        kept_pos = [s.position for s in kept]
        for i, a in enumerate(kept_pos):
            for b in kept_pos[:i]:
                if np.linalg.norm(a - b) < min_dist:
                    raise ConfigurationError("corner points closer than 0.9h; reduce h")
    out = list(kept)
    pos = np.array([s.position for s in out]) if out else np.empty((0, 2))
    for s in samples:
        if s.corner:
            continue
        if len(out) and np.min(np.linalg.norm(pos - s.position, axis=1)) < min_dist:
            continue
        out.append(s)
        pos = np.vstack([pos, s.position[None, :]]) if len(pos) else s.position[None, :]
    return out


def _ball_boundary(domain: Ball, h: float) -> list[BoundaryPoint]:
    c = np.asarray(domain.center)
    r = domain.radius
    n_lat = max(2, int(round(math.pi * r / h)))
    out: list[BoundaryPoint] = []
    for j in range(n_lat + 1):
        theta = j * math.pi / n_lat
        ring_r = r * math.sin(theta)
        circumference = 2.0 * math.pi * ring_r
        if j == 0 or j == n_lat or circumference < 0.5 * h:
            p = c + np.array([0.0, 0.0, r * math.cos(theta)])
            out.append(BoundaryPoint(p, (p - c) / r, float(theta), j))
            continue
        count = max(1, int(round(circumference / h)))
        offset = j * GOLDEN_ANGLE
        for k in range(count):
            phi = offset + 2.0 * math.pi * k / count
            p = c + r * np.array(
                [math.sin(theta) * math.cos(phi),
                 math.sin(theta) * math.sin(phi),
                 math.cos(theta)]
            )
            out.append(BoundaryPoint(p, (p - c) / r, float(phi), j))
    return _thin_3d(out, 0.9 * h)


def _thin_3d(samples: list[BoundaryPoint], min_dist: float) -> list[BoundaryPoint]:
    # grid-hashed version of _thin (ball boundaries run to ~10^4 points)
    cell = min_dist
    grid: dict[tuple[int, ...], list[np.ndarray]] = {}
    out = []
    for s in samples:
        key = tuple(int(math.floor(v / cell)) for v in s.position)
        ok = True
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                for dz in (-1, 0, 1):
                    for q in grid.get((key[0] + dx, key[1] + dy, key[2] + dz), ()):
                        if np.linalg.norm(q - s.position) < min_dist:
                            ok = False
                            break
        if ok:
            out.append(s)
            grid.setdefault(key, []).append(s.position)
    return out


# --------------------------------------------------------------------------
# standalone normals
# --------------------------------------------------------------------------

def outward_normal(domain: Domain, x) -> np.ndarray:
    """Outward unit normal at a boundary position.

    Radially symmetric shapes are handled analytically; parametric shapes
    project onto the nearest boundary parameter and evaluate the piece
    normal there.
    """
    x = np.asarray(x, dtype=float)
    if isinstance(domain, Interval):
        mid = 0.5 * (domain.a + domain.b)
        return np.array([1.0 if x[0] > mid else -1.0])
    if isinstance(domain, (Disc, Ball)):
        v = x - np.asarray(domain.center)
        return v / np.linalg.norm(v)
    if isinstance(domain, Annulus):
        v = x - np.asarray(domain.center)
        d = np.linalg.norm(v)
        sign = 1.0 if abs(d - domain.r_outer) <= abs(d - domain.r_inner) else -1.0
        return sign * v / d
    pieces = domain.boundary_pieces()
    best = (np.inf, 0, 0.0)
    for j, piece in enumerate(pieces):
        t = np.linspace(piece.t0, piece.t1, 8192)
        d = np.linalg.norm(piece.position(t) - x, axis=1)
        k = int(np.argmin(d))
        if d[k] < best[0]:
            best = (float(d[k]), j, float(t[k]))
    _, j, t_star = best
    piece = pieces[j]
    # parabolic refinement of the nearest parameter
    span = (piece.t1 - piece.t0) / 8191
    for _ in range(40):
        ts = np.array([t_star - span, t_star, t_star + span])
        ts = np.clip(ts, piece.t0, piece.t1)
        d = np.linalg.norm(piece.position(ts) - x, axis=1)
        t_star = float(ts[np.argmin(d)])
        span *= 0.5
    return piece.normal(np.array([t_star]))[0]


# --------------------------------------------------------------------------
# config-string round trip
# --------------------------------------------------------------------------

_DEFAULTS = {
    "interval": lambda args: Interval(*(args or [0.0, 1.0])),
    "disc": lambda args: Disc(tuple(args[:2]), args[2]) if args else Disc(),
    "ball": lambda args: Ball(tuple(args[:3]), args[3]) if args else Ball(),
    "annulus": lambda args: Annulus(tuple(args[:2]), args[2], args[3]) if args else Annulus(),
    "triangle": lambda args: Triangle(tuple(args[0:2]), tuple(args[2:4]), tuple(args[4:6]))
    if args else Triangle(),
    "pacman": lambda args: PacMan(tuple(args[:2]), args[2], args[3]) if args else PacMan(),
    "nephroid": lambda args: Nephroid(args[0], tuple(args[1:3])) if args else Nephroid(),
    "polar_rose": lambda args: PolarRose(tuple(args[:2])) if args else PolarRose(),
}


def domain_from_spec(spec: str) -> Domain:
    """Build a domain from a config string like ``disc`` or ``disc:0.5,0.5,0.5``."""
    name, _, rest = spec.strip().partition(":")
    key = name.strip().lower().replace("-", "_")
    if key == "rose":
        key = "polar_rose"
    if key not in _DEFAULTS:
        raise ConfigurationError(
            f"unknown domain {name!r}; expected one of {sorted(_DEFAULTS)}"
        )
    args = [float(v) for v in rest.split(",") if v.strip()] if rest else []
    try:
        return _DEFAULTS[key](args)
    except (IndexError, TypeError) as exc:
        raise ConfigurationError(f"bad parameters for domain {name!r}: {spec!r}") from exc
