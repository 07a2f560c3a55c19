"""Piecewise straight/arc track geometry for the 2D lane-following simulator.

A track is a closed loop of primitives, each either a straight segment or a
constant-curvature arc (positive curvature bends left). Geometry queries are
closed-form per piece, so projection onto the centerline is exact up to
float rounding.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from pathlib import Path

from .errors import FormatError

TAU = 2.0 * math.pi
CLOSURE_TOL = 1e-9


def wrap_angle(a: float) -> float:
    """Wrap to (-pi, pi]."""
    m = math.remainder(a, TAU)
    if m <= -math.pi:
        m += TAU
    return m


@dataclass(frozen=True)
class Piece:
    length: float
    curvature: float = 0.0  # 1/m, 0 for straights, positive = left bend

    def __post_init__(self):
        if not self.length > 0:
            raise ValueError("piece length must be > 0")


@dataclass(frozen=True)
class Projection:
    """Foot of the nearest-point projection onto the centerline."""

    s: float               # arc length of the foot, in [0, track.length)
    point: tuple[float, float]
    tangent: float         # centerline heading at the foot, radians
    lateral_offset: float  # signed distance, positive = left of centerline
    curvature: float


class TrackSpec:
    """Closed-loop centerline plus road half width.

    The loop must be position-closed within 1e-9 m. The start pose anchors
    the whole curve; rigid transforms of a track are expressed by moving it.
    """

    def __init__(
        self,
        pieces: list[Piece] | tuple[Piece, ...],
        road_half_width: float,
        name: str = "track",
        start_pose: tuple[float, float, float] = (0.0, 0.0, 0.0),
    ):
        if road_half_width <= 0:
            raise ValueError("road_half_width must be > 0")
        if not pieces:
            raise ValueError("track needs at least one piece")
        self.pieces = tuple(pieces)
        self.road_half_width = float(road_half_width)
        self.name = name
        self.start_pose = (float(start_pose[0]), float(start_pose[1]), float(start_pose[2]))

        # Cumulative arc length and the pose at the start of each piece.
        self._s0 = [0.0]
        self._poses = [self.start_pose]
        x, y, h = self.start_pose
        for p in self.pieces:
            x, y, h = _advance(x, y, h, p)
            self._s0.append(self._s0[-1] + p.length)
            self._poses.append((x, y, h))
        self.length = self._s0[-1]

        ex, ey, _ = self._poses[-1]
        sx, sy, _ = self.start_pose
        gap = math.hypot(ex - sx, ey - sy)
        if gap > CLOSURE_TOL:
            raise ValueError(f"track is not closed: endpoint gap {gap:.3e} m")

    def pose_at(self, s: float) -> tuple[float, float, float]:
        """Centerline position and tangent heading at arc length s (wraps)."""
        s = s % self.length
        i = bisect_right(self._s0, s) - 1
        if i >= len(self.pieces):  # s == length after fmod edge
            i = len(self.pieces) - 1
        u = s - self._s0[i]
        x, y, h = self._poses[i]
        p = self.pieces[i]
        if p.curvature == 0.0:
            return x + u * math.cos(h), y + u * math.sin(h), h
        k = p.curvature
        phi = k * u
        cx = x - math.sin(h) / k
        cy = y + math.cos(h) / k
        return cx + math.sin(h + phi) / k, cy - math.cos(h + phi) / k, h + phi

    def curvature_at(self, s: float) -> float:
        s = s % self.length
        i = bisect_right(self._s0, s) - 1
        if i >= len(self.pieces):
            i = len(self.pieces) - 1
        return self.pieces[i].curvature

    def project(self, x: float, y: float) -> Projection:
        """Nearest centerline point; ties broken by smallest arc length."""
        best_d2 = math.inf
        best_s = 0.0
        for i, p in enumerate(self.pieces):
            x0, y0, h0 = self._poses[i]
            s0 = self._s0[i]
            if p.curvature == 0.0:
                tx, ty = math.cos(h0), math.sin(h0)
                u = (x - x0) * tx + (y - y0) * ty
                u = min(max(u, 0.0), p.length)
                qx, qy = x0 + u * tx, y0 + u * ty
                d2 = (x - qx) ** 2 + (y - qy) ** 2
                best_d2, best_s = _better(best_d2, best_s, d2, s0 + u)
            else:
                k = p.curvature
                cx = x0 - math.sin(h0) / k
                cy = y0 + math.cos(h0) / k
                psi = math.atan2(y - cy, x - cx)
                # Interior candidate: angle of the foot along the arc.
                if k > 0:
                    phi = (psi - h0 + math.pi / 2.0) % TAU
                    inside = phi <= k * p.length
                else:
                    phi = (psi - h0 - math.pi / 2.0) % TAU
                    if phi > 0.0:
                        phi -= TAU
                    inside = phi >= k * p.length
                if inside:
                    u = phi / k
                    qx = cx + math.sin(h0 + phi) / k
                    qy = cy - math.cos(h0 + phi) / k
                    d2 = (x - qx) ** 2 + (y - qy) ** 2
                    best_d2, best_s = _better(best_d2, best_s, d2, s0 + u)
                # Piece endpoints cover the wrapped-angle blind spot.
                for s_cand in (s0, s0 + p.length):
                    qx, qy, _ = self.pose_at(s_cand)
                    d2 = (x - qx) ** 2 + (y - qy) ** 2
                    best_d2, best_s = _better(best_d2, best_s, d2, s_cand % self.length)

        s = best_s % self.length
        qx, qy, th = self.pose_at(s)
        # Signed offset: positive on the left of the tangent direction.
        off = -(x - qx) * math.sin(th) + (y - qy) * math.cos(th)
        return Projection(s=s, point=(qx, qy), tangent=th, lateral_offset=off,
                          curvature=self.curvature_at(s))

    def mirror(self) -> "TrackSpec":
        """Left-right reflection: negate curvatures and reflect the anchor pose."""
        x0, y0, h0 = self.start_pose
        return TrackSpec(
            [Piece(p.length, -p.curvature) for p in self.pieces],
            self.road_half_width,
            name=self.name,
            start_pose=(x0, -y0, -h0),
        )

    def __eq__(self, other):
        return (
            isinstance(other, TrackSpec)
            and self.pieces == other.pieces
            and self.road_half_width == other.road_half_width
            and self.start_pose == other.start_pose
            and self.name == other.name
        )

    def __repr__(self):
        return (f"TrackSpec({self.name!r}, pieces={len(self.pieces)}, "
                f"length={self.length:.1f} m, half_width={self.road_half_width})")


def _advance(x: float, y: float, h: float, p: Piece) -> tuple[float, float, float]:
    if p.curvature == 0.0:
        return x + p.length * math.cos(h), y + p.length * math.sin(h), h
    k = p.curvature
    phi = k * p.length
    cx = x - math.sin(h) / k
    cy = y + math.cos(h) / k
    return cx + math.sin(h + phi) / k, cy - math.cos(h + phi) / k, h + phi


def _better(best_d2, best_s, d2, s):
    if d2 < best_d2 or (d2 == best_d2 and s < best_s):
        return d2, s
    return best_d2, best_s


# --- track file grammar -----------------------------------------------------
#
#   HALFWIDTH <meters>
#   STRAIGHT <length_m>
#   ARC <length_m> <curvature_per_m>
#
# One primitive per line, '#' starts a comment, blank lines ignored.
# HALFWIDTH must appear exactly once, before any primitive.

def load_track(path: str | Path) -> TrackSpec:
    path = Path(path)
    half_width = None
    pieces: list[Piece] = []
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        kw = fields[0].upper()
        try:
            if kw == "HALFWIDTH":
                if half_width is not None:
                    raise FormatError("duplicate HALFWIDTH", lineno)
                (half_width,) = (float(fields[1]),)
            elif kw == "STRAIGHT":
                if half_width is None:
                    raise FormatError("HALFWIDTH must come first", lineno)
                pieces.append(Piece(float(fields[1]), 0.0))
            elif kw == "ARC":
                if half_width is None:
                    raise FormatError("HALFWIDTH must come first", lineno)
                pieces.append(Piece(float(fields[1]), float(fields[2])))
            else:
                raise FormatError(f"unknown keyword {fields[0]!r}", lineno)
        except (IndexError, ValueError) as e:
            if isinstance(e, FormatError):
                raise
            raise FormatError(f"bad arguments for {kw}: {line!r}", lineno) from e
    if half_width is None:
        raise FormatError("missing HALFWIDTH header", 1)
    if not pieces:
        raise FormatError("track has no primitives", 1)
    try:
        return TrackSpec(pieces, half_width, name=path.stem)
    except ValueError as e:
        raise FormatError(str(e)) from e


def save_track(track: TrackSpec, path: str | Path) -> None:
    lines = [f"HALFWIDTH {track.road_half_width!r}"]
    for p in track.pieces:
        if p.curvature == 0.0:
            lines.append(f"STRAIGHT {p.length!r}")
        else:
            lines.append(f"ARC {p.length!r} {p.curvature!r}")
    Path(path).write_text("\n".join(lines) + "\n")


def default_track(road_half_width: float = 3.5) -> TrackSpec:
    """Rounded rectangle: three gentle corners (|k|=0.02) and one tight (0.05).

    Bounding box 160 x 150 m, total length ~547 m.
    """
    r_gentle = 1.0 / 0.02
    r_tight = 1.0 / 0.05
    quarter_gentle = (math.pi / 2.0) * r_gentle
    quarter_tight = (math.pi / 2.0) * r_tight
    w, h = 160.0, 150.0
    pieces = [
        Piece(w - r_tight - r_gentle),        # bottom, heading east
        Piece(quarter_gentle, 0.02),
        Piece(h - 2 * r_gentle),              # right side, heading north
        Piece(quarter_gentle, 0.02),
        Piece(w - 2 * r_gentle),              # top, heading west
        Piece(quarter_gentle, 0.02),
        Piece(h - r_gentle - r_tight),        # left side, heading south
        Piece(quarter_tight, 0.05),
    ]
    return TrackSpec(pieces, road_half_width, name="default")


def oval_track(straight: float = 400.0, curvature: float = 0.02,
               road_half_width: float = 3.5) -> TrackSpec:
    """Stadium loop with two long straights; handy for open-loop fixtures."""
    semi = math.pi / curvature
    pieces = [Piece(straight), Piece(semi, curvature), Piece(straight), Piece(semi, curvature)]
    return TrackSpec(pieces, road_half_width, name="oval")
