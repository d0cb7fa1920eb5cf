"""Motion-primitive definitions and the primitive-library file format.

A primitive pairs a discrete effect on the cube (orientation turn and/or palm
position change) with the actuation data needed to execute it: hand air-mass
levels, a gravity spec for the wrist tilt, and a wiggle flag. Primitives are
pure data; the shipped defaults carry placeholder calibration values and are
flagged illustrative so they can never be exported to hardware silently.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Union

from .kinematics import GravitySpec
from .orientations import AxisTurn

AIR_MASS_CHANNELS = 16

STANDARD_PRIMITIVES = ("R", "S", "Tl", "Tr", "Tb")
ROTATION_PRIMITIVES = ("R", "S")
SHIFT_PRIMITIVES = ("Tl", "Tr", "Tb")


class LibraryFormatError(ValueError):
    """Raised when a library file does not match the schema."""


@dataclass(frozen=True, order=True)
class PalmCell:
    """Discrete object position on the palm: 3x3 lattice, (0, 0) at center."""

    col: int
    row: int

    def __post_init__(self):
        if self.col not in (-1, 0, 1) or self.row not in (-1, 0, 1):
            raise ValueError(f"cell coordinates must be in {{-1,0,1}}: {self}")


ALL_CELLS = tuple(PalmCell(c, r) for c in (-1, 0, 1) for r in (-1, 0, 1))


@dataclass(frozen=True)
class Offset:
    """Rigid displacement of the object across the palm lattice."""

    dcol: int
    drow: int

    def apply(self, cell: PalmCell) -> PalmCell:
        col, row = cell.col + self.dcol, cell.row + self.drow
        if col not in (-1, 0, 1) or row not in (-1, 0, 1):
            raise ValueError(f"offset ({self.dcol},{self.drow}) leaves the palm from {cell}")
        return PalmCell(col, row)


@dataclass(frozen=True)
class Funnel:
    """Constraint-determined endpoint: project one coordinate onto a target.

    Models sliding the object against fingers acting as a planar constraint;
    the endpoint depends on the constraint, not the start cell.
    """

    axis: str  # "col" or "row"
    target: int

    def __post_init__(self):
        if self.axis not in ("col", "row"):
            raise ValueError(f"funnel axis must be 'col' or 'row', got {self.axis!r}")
        if self.target not in (-1, 0, 1):
            raise ValueError(f"funnel target must be in {{-1,0,1}}, got {self.target}")

    def apply(self, cell: PalmCell) -> PalmCell:
        if self.axis == "col":
            return PalmCell(self.target, cell.row)
        return PalmCell(cell.col, self.target)


PositionEffect = Union[Offset, Funnel]


@dataclass(frozen=True)
class Primitive:
    name: str
    orientation_effect: AxisTurn | None
    position_effect: PositionEffect
    precondition: frozenset[PalmCell]
    air_mass: tuple[float, ...]
    gravity: GravitySpec
    wiggle: bool
    illustrative: bool = False

    def __post_init__(self):
        object.__setattr__(self, "precondition", frozenset(self.precondition))
        object.__setattr__(self, "air_mass", tuple(float(v) for v in self.air_mass))

    @property
    def is_rotation(self) -> bool:
        return self.orientation_effect is not None


@dataclass(frozen=True)
class PrimitiveLibrary:
    primitives: dict[str, Primitive]
    home_cell: PalmCell
    version: str

    def __iter__(self) -> Iterator[Primitive]:
        return iter(self.primitives.values())

    def __getitem__(self, name: str) -> Primitive:
        return self.primitives[name]

    def __contains__(self, name: str) -> bool:
        return name in self.primitives

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self.primitives)

    def has_illustrative(self) -> bool:
        return any(p.illustrative for p in self)


def validate_library(lib: PrimitiveLibrary) -> list[str]:
    """Check all library invariants; returns one message per violation."""
    violations = []
    for name in STANDARD_PRIMITIVES:
        if name not in lib.primitives:
            violations.append(f"missing standard primitive {name!r}")
    for name, prim in lib.primitives.items():
        if prim.name != name:
            violations.append(f"{name}: key does not match primitive name {prim.name!r}")
        if len(prim.air_mass) != AIR_MASS_CHANNELS:
            violations.append(
                f"{name}: air_mass must have {AIR_MASS_CHANNELS} entries, has {len(prim.air_mass)}"
            )
        if not prim.precondition:
            violations.append(f"{name}: precondition set is empty")
        if prim.is_rotation and not isinstance(prim.position_effect, Offset):
            violations.append(f"{name}: rotation primitives must use an offset position effect")
        if not prim.is_rotation and not isinstance(prim.position_effect, Funnel):
            violations.append(f"{name}: shift primitives must use a funnel position effect")

    # Restoration: running the three shift funnels in plan order from any cell
    # must land in every rotation primitive's precondition set.
    shifts = [lib.primitives[n] for n in SHIFT_PRIMITIVES if n in lib.primitives]
    rotations = [p for p in lib if p.is_rotation]
    if len(shifts) == len(SHIFT_PRIMITIVES) and all(
        isinstance(s.position_effect, Funnel) for s in shifts
    ):
        for start in ALL_CELLS:
            cell = start
            for s in shifts:
                cell = s.position_effect.apply(cell)
            for rot in rotations:
                if cell not in rot.precondition:
                    violations.append(
                        f"restoration: shifts from {start} end at {cell}, "
                        f"outside precondition of {rot.name}"
                    )
    return violations


# Placeholder actuation data. Real calibration values are hardware-specific
# and unpublished; these exist so traces have a well-defined shape and are
# flagged illustrative so the trace exporter refuses them by default.
_AIR_MASS_DEFAULTS = {
    "R": (80.0, 80.0, 40.0, 40.0, 20.0, 20.0, 20.0, 20.0,
          60.0, 60.0, 60.0, 60.0, 10.0, 10.0, 10.0, 10.0),
    "S": (20.0, 20.0, 80.0, 80.0, 40.0, 40.0, 40.0, 40.0,
          10.0, 10.0, 10.0, 10.0, 60.0, 60.0, 60.0, 60.0),
    "Tl": (50.0, 50.0, 50.0, 50.0, 30.0, 30.0, 30.0, 30.0,
           20.0, 20.0, 20.0, 20.0, 20.0, 20.0, 20.0, 20.0),
    "Tr": (30.0, 30.0, 30.0, 30.0, 50.0, 50.0, 50.0, 50.0,
           20.0, 20.0, 20.0, 20.0, 20.0, 20.0, 20.0, 20.0),
    "Tb": (40.0, 40.0, 40.0, 40.0, 40.0, 40.0, 40.0, 40.0,
           30.0, 30.0, 30.0, 30.0, 10.0, 10.0, 10.0, 10.0),
}

_GRAVITY_DEFAULTS = {
    "R": GravitySpec(0.0, 0.8, 0.8),
    "S": GravitySpec(0.8, 0.0, 0.8),
    "Tl": GravitySpec(-0.7, 0.0, 0.7),
    "Tr": GravitySpec(0.7, 0.0, 0.7),
    "Tb": GravitySpec(0.0, -0.7, 0.7),
}

HOME_CELL = PalmCell(0, 0)


def default_library() -> PrimitiveLibrary:
    """The five standard primitives: roll, spin, and the three shifts.

    Rotations act from the home cell and displace the cube one cell toward
    the fingers; shifts funnel the cube from anywhere, and composing them in
    plan order (Tl, Tr, Tb) restores the home cell.
    """
    all_cells = frozenset(ALL_CELLS)
    prims = [
        Primitive("R", AxisTurn("x", 1), Offset(0, 1), frozenset({HOME_CELL}),
                  _AIR_MASS_DEFAULTS["R"], _GRAVITY_DEFAULTS["R"],
                  wiggle=False, illustrative=True),
        Primitive("S", AxisTurn("z", 1), Offset(0, 1), frozenset({HOME_CELL}),
                  _AIR_MASS_DEFAULTS["S"], _GRAVITY_DEFAULTS["S"],
                  wiggle=False, illustrative=True),
        Primitive("Tl", None, Funnel("col", -1), all_cells,
                  _AIR_MASS_DEFAULTS["Tl"], _GRAVITY_DEFAULTS["Tl"],
                  wiggle=True, illustrative=True),
        Primitive("Tr", None, Funnel("col", 0), all_cells,
                  _AIR_MASS_DEFAULTS["Tr"], _GRAVITY_DEFAULTS["Tr"],
                  wiggle=True, illustrative=True),
        Primitive("Tb", None, Funnel("row", 0), all_cells,
                  _AIR_MASS_DEFAULTS["Tb"], _GRAVITY_DEFAULTS["Tb"],
                  wiggle=True, illustrative=True),
    ]
    return PrimitiveLibrary(
        primitives={p.name: p for p in prims},
        home_cell=HOME_CELL,
        version="default-0.1",
    )


# --- JSON serialization -----------------------------------------------------

def _require_keys(obj: dict, allowed: set[str], context: str, required: set[str] | None = None):
    unknown = set(obj) - allowed
    if unknown:
        raise LibraryFormatError(f"{context}: unknown keys {sorted(unknown)}")
    missing = (required if required is not None else allowed) - set(obj)
    if missing:
        raise LibraryFormatError(f"{context}: missing keys {sorted(missing)}")


def _cell_from_json(obj, context: str) -> PalmCell:
    if not isinstance(obj, dict):
        raise LibraryFormatError(f"{context}: cell must be an object")
    _require_keys(obj, {"col", "row"}, context)
    try:
        return PalmCell(int(obj["col"]), int(obj["row"]))
    except (TypeError, ValueError) as exc:
        raise LibraryFormatError(f"{context}: {exc}") from None


def _primitive_from_json(obj, index: int) -> Primitive:
    ctx = f"primitives[{index}]"
    if not isinstance(obj, dict):
        raise LibraryFormatError(f"{ctx}: must be an object")
    _require_keys(
        obj,
        {"name", "orientation_effect", "position_effect", "precondition",
         "air_mass", "gravity", "wiggle", "illustrative"},
        ctx,
        required={"name", "orientation_effect", "position_effect", "precondition",
                  "air_mass", "gravity", "wiggle"},
    )
    name = obj["name"]
    if not isinstance(name, str) or not name:
        raise LibraryFormatError(f"{ctx}: name must be a nonempty string")

    turn = obj["orientation_effect"]
    if turn is not None:
        if not isinstance(turn, dict):
            raise LibraryFormatError(f"{ctx}.orientation_effect: must be null or an object")
        _require_keys(turn, {"axis", "quarter_turns"}, f"{ctx}.orientation_effect")
        try:
            turn = AxisTurn(turn["axis"], int(turn["quarter_turns"]))
        except (TypeError, ValueError) as exc:
            raise LibraryFormatError(f"{ctx}.orientation_effect: {exc}") from None

    pe = obj["position_effect"]
    if not isinstance(pe, dict) or "kind" not in pe:
        raise LibraryFormatError(f"{ctx}.position_effect: must be an object with a 'kind'")
    try:
        if pe["kind"] == "offset":
            _require_keys(pe, {"kind", "dcol", "drow"}, f"{ctx}.position_effect")
            effect: PositionEffect = Offset(int(pe["dcol"]), int(pe["drow"]))
        elif pe["kind"] == "funnel":
            _require_keys(pe, {"kind", "axis", "target"}, f"{ctx}.position_effect")
            effect = Funnel(pe["axis"], int(pe["target"]))
        else:
            raise LibraryFormatError(
                f"{ctx}.position_effect: kind must be 'offset' or 'funnel', got {pe['kind']!r}"
            )
    except (TypeError, ValueError) as exc:
        if isinstance(exc, LibraryFormatError):
            raise
        raise LibraryFormatError(f"{ctx}.position_effect: {exc}") from None

    if not isinstance(obj["precondition"], list):
        raise LibraryFormatError(f"{ctx}.precondition: must be a list of cells")
    precond = frozenset(
        _cell_from_json(c, f"{ctx}.precondition[{i}]") for i, c in enumerate(obj["precondition"])
    )

    air = obj["air_mass"]
    if not isinstance(air, list) or not all(isinstance(v, (int, float)) for v in air):
        raise LibraryFormatError(f"{ctx}.air_mass: must be a list of numbers")

    grav = obj["gravity"]
    if not isinstance(grav, dict):
        raise LibraryFormatError(f"{ctx}.gravity: must be an object")
    _require_keys(grav, {"g_hat_x", "g_hat_y", "alpha"}, f"{ctx}.gravity")
    try:
        gravity = GravitySpec(float(grav["g_hat_x"]), float(grav["g_hat_y"]), float(grav["alpha"]))
    except (TypeError, ValueError) as exc:
        raise LibraryFormatError(f"{ctx}.gravity: {exc}") from None

    if not isinstance(obj["wiggle"], bool):
        raise LibraryFormatError(f"{ctx}.wiggle: must be a boolean")
    illustrative = obj.get("illustrative", False)
    if not isinstance(illustrative, bool):
        raise LibraryFormatError(f"{ctx}.illustrative: must be a boolean")

    return Primitive(name, turn, effect, precond, tuple(air), gravity,
                     wiggle=obj["wiggle"], illustrative=illustrative)


def library_from_json(data) -> PrimitiveLibrary:
    if not isinstance(data, dict):
        raise LibraryFormatError("library: top level must be an object")
    _require_keys(data, {"version", "home_cell", "primitives"}, "library")
    if not isinstance(data["version"], str):
        raise LibraryFormatError("library.version: must be a string")
    home = _cell_from_json(data["home_cell"], "library.home_cell")
    if not isinstance(data["primitives"], list):
        raise LibraryFormatError("library.primitives: must be a list")
    prims: dict[str, Primitive] = {}
    for i, obj in enumerate(data["primitives"]):
        p = _primitive_from_json(obj, i)
        if p.name in prims:
            raise LibraryFormatError(f"duplicate primitive name {p.name!r}")
        prims[p.name] = p
    return PrimitiveLibrary(primitives=prims, home_cell=home, version=data["version"])


def library_to_json(lib: PrimitiveLibrary) -> dict:
    def effect_json(pe: PositionEffect):
        if isinstance(pe, Offset):
            return {"kind": "offset", "dcol": pe.dcol, "drow": pe.drow}
        return {"kind": "funnel", "axis": pe.axis, "target": pe.target}

    return {
        "version": lib.version,
        "home_cell": {"col": lib.home_cell.col, "row": lib.home_cell.row},
        "primitives": [
            {
                "name": p.name,
                "orientation_effect": (
                    None if p.orientation_effect is None
                    else {"axis": p.orientation_effect.axis,
                          "quarter_turns": p.orientation_effect.quarter_turns}
                ),
                "position_effect": effect_json(p.position_effect),
                "precondition": [
                    {"col": c.col, "row": c.row} for c in sorted(p.precondition)
                ],
                "air_mass": list(p.air_mass),
                "gravity": {"g_hat_x": p.gravity.g_hat_x, "g_hat_y": p.gravity.g_hat_y,
                            "alpha": p.gravity.alpha},
                "wiggle": p.wiggle,
                "illustrative": p.illustrative,
            }
            for p in lib
        ],
    }


def load_library(path: str | Path) -> PrimitiveLibrary:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise LibraryFormatError(f"{path}: invalid JSON: {exc}") from None
    return library_from_json(data)


def save_library(lib: PrimitiveLibrary, path: str | Path) -> None:
    Path(path).write_text(
        json.dumps(library_to_json(lib), indent=2) + "\n", encoding="utf-8"
    )
