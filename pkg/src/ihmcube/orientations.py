"""Exact algebra of the 24 axis-aligned cube orientations.

Orientations are elements of the rotation group of the cube, stored as 3x3
signed-permutation matrices with determinant +1. Matrix columns are the
cube's body axes expressed in the hand frame H:

    x across the palm (thumb side positive)
    y from the wrist toward the fingertips
    z out of the palm

Face labels attach to body axes: R=+x, L=-x, F=+y, B=-y, U=+z, D=-z, so the
identity orientation has the U face up (palm normal) and the F face toward
the fingertips.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import reduce
from pathlib import Path

FACES = ("U", "D", "F", "B", "L", "R")

OPPOSITE = {"U": "D", "D": "U", "F": "B", "B": "F", "L": "R", "R": "L"}

_FACE_TO_VEC = {
    "U": (0, 0, 1),
    "D": (0, 0, -1),
    "F": (0, 1, 0),
    "B": (0, -1, 0),
    "R": (1, 0, 0),
    "L": (-1, 0, 0),
}
_VEC_TO_FACE = {v: f for f, v in _FACE_TO_VEC.items()}

AXES = ("x", "y", "z")


@dataclass(frozen=True)
class CubeOrientation:
    """One of the 24 axis-aligned orientations, as a row-major 3x3 matrix."""

    flat: tuple[int, int, int, int, int, int, int, int, int]

    def __post_init__(self):
        if len(self.flat) != 9 or any(v not in (-1, 0, 1) for v in self.flat):
            raise ValueError(f"entries must be nine values in {{-1,0,1}}, got {self.flat!r}")
        object.__setattr__(self, "flat", tuple(int(v) for v in self.flat))
        for i in range(3):
            row = self.flat[3 * i : 3 * i + 3]
            col = self.flat[i::3]
            if sum(abs(v) for v in row) != 1 or sum(abs(v) for v in col) != 1:
                raise ValueError(f"not a signed permutation matrix: {self.flat!r}")
        if self._det() != 1:
            raise ValueError(f"determinant must be +1 (got a reflection): {self.flat!r}")

    def _det(self) -> int:
        a, b, c, d, e, f, g, h, i = self.flat
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    @classmethod
    def identity(cls) -> "CubeOrientation":
        return cls((1, 0, 0, 0, 1, 0, 0, 0, 1))

    @classmethod
    def from_rows(cls, rows) -> "CubeOrientation":
        return cls(tuple(int(v) for row in rows for v in row))

    @property
    def rows(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(self.flat[3 * i : 3 * i + 3] for i in range(3))

    def apply(self, vec: tuple[int, int, int]) -> tuple[int, int, int]:
        """Map a body-frame direction into the hand frame."""
        return tuple(sum(self.flat[3 * i + k] * vec[k] for k in range(3)) for i in range(3))

    def to_text(self) -> str:
        """Canonical textual form: nine integers row-major, space-separated."""
        return " ".join(str(v) for v in self.flat)

    @classmethod
    def from_text(cls, text: str) -> "CubeOrientation":
        parts = text.split()
        if len(parts) != 9:
            raise ValueError(f"expected 9 integers, got {len(parts)}")
        return cls(tuple(int(p) for p in parts))

    def __repr__(self):
        return f"CubeOrientation({self.to_text()!r})"


def compose(a: CubeOrientation, b: CubeOrientation) -> CubeOrientation:
    """Matrix product a.b (apply b first, then a)."""
    ar, br = a.rows, b.rows
    return CubeOrientation.from_rows(
        [[sum(ar[i][k] * br[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
    )


def inverse(g: CubeOrientation) -> CubeOrientation:
    """Inverse rotation; for signed-permutation matrices this is the transpose."""
    return CubeOrientation.from_rows([[g.rows[j][i] for j in range(3)] for i in range(3)])


# Quarter-turn generators about the hand-frame axes, right-handed, +90 deg.
ROT_X90 = CubeOrientation((1, 0, 0, 0, 0, -1, 0, 1, 0))
ROT_Y90 = CubeOrientation((0, 0, 1, 0, 1, 0, -1, 0, 0))
ROT_Z90 = CubeOrientation((0, -1, 0, 1, 0, 0, 0, 0, 1))

_GENERATORS = {"x": ROT_X90, "y": ROT_Y90, "z": ROT_Z90}


@dataclass(frozen=True)
class AxisTurn:
    """A quarter-turn rotation about a hand-frame axis."""

    axis: str
    quarter_turns: int = 1

    def __post_init__(self):
        if self.axis not in AXES:
            raise ValueError(f"axis must be one of {AXES}, got {self.axis!r}")
        if self.quarter_turns not in (1, 2, 3):
            raise ValueError(f"quarter_turns must be 1..3, got {self.quarter_turns}")

    def rotation(self) -> CubeOrientation:
        gen = _GENERATORS[self.axis]
        return reduce(compose, [gen] * self.quarter_turns)


def apply_turn(g: CubeOrientation, turn: AxisTurn) -> CubeOrientation:
    """Rotate extrinsically: the turn axis is fixed in the hand frame."""
    return compose(turn.rotation(), g)


def enumerate_group() -> tuple[CubeOrientation, ...]:
    """All 24 orientations: closure of the quarter-turn generators.

    Canonical order is descending lexicographic on the flattened matrix,
    which puts the identity first.
    """
    seen = {CubeOrientation.identity()}
    frontier = list(seen)
    while frontier:
        nxt = []
        for g in frontier:
            for gen in _GENERATORS.values():
                h = compose(gen, g)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return tuple(sorted(seen, key=lambda g: g.flat, reverse=True))


@dataclass(frozen=True)
class FacePose:
    """Human-readable orientation: which face is up, which faces the fingertips."""

    up: str
    front: str

    def __post_init__(self):
        for label in (self.up, self.front):
            if label not in FACES:
                raise ValueError(f"unknown face label {label!r}, expected one of {FACES}")
        if self.front in (self.up, OPPOSITE[self.up]):
            raise ValueError(f"up={self.up} and front={self.front} are not orthogonal faces")

    def to_text(self, labels: dict[str, str] | None = None) -> str:
        up, front = self.up, self.front
        if labels:
            up, front = labels[up], labels[front]
        return f"up={up},front={front}"

    @classmethod
    def parse(cls, text: str, labels: dict[str, str] | None = None) -> "FacePose":
        """Accepts 'up=U,front=F' or the short 'U,F' form."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 2:
            raise ValueError(f"expected two face labels, got {text!r}")
        fields = []
        for part, key in zip(parts, ("up", "front")):
            if "=" in part:
                k, _, v = part.partition("=")
                if k.strip() != key:
                    raise ValueError(f"expected {key}=<label> in {text!r}")
                part = v.strip()
            fields.append(part)
        if labels:
            rev = {v: k for k, v in labels.items()}
            try:
                fields = [rev[f] for f in fields]
            except KeyError as exc:
                raise ValueError(f"label {exc.args[0]!r} not in label map") from None
        return cls(fields[0], fields[1])


def from_face_pose(pose: FacePose) -> CubeOrientation:
    n_up = _FACE_TO_VEC[pose.up]
    n_front = _FACE_TO_VEC[pose.front]
    row1 = _cross(n_front, n_up)
    return CubeOrientation.from_rows([row1, n_front, n_up])


def to_face_pose(g: CubeOrientation) -> FacePose:
    # Row k of the matrix is the body direction that maps onto hand axis k.
    return FacePose(up=_VEC_TO_FACE[g.rows[2]], front=_VEC_TO_FACE[g.rows[1]])


def _cross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def all_face_poses() -> tuple[FacePose, ...]:
    """The 24 valid (up, front) pairs, in canonical group order."""
    return tuple(to_face_pose(g) for g in enumerate_group())


def load_label_map(path: str | Path) -> dict[str, str]:
    """Load a face-label remapping, e.g. to the sticker letters of a real cube.

    The file is a JSON object mapping each of U D F B L R to a display label;
    labels must be unique.
    """
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(data, dict) or sorted(data) != sorted(FACES):
        raise ValueError(f"label map must define exactly the keys {FACES}")
    labels = {k: str(v) for k, v in data.items()}
    if len(set(labels.values())) != 6:
        raise ValueError("label map values must be unique")
    return labels
