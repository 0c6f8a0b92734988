"""Finite incidence structures and the affine plane axioms.

Points and lines are dense integer ids.  A plane is loaded from a plain
document (``{"points": n, "lines": [[...], ...]}``), then checked against
the three affine axioms: unique joining line, unique parallel through an
external point, existence of a triangle.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Optional

from .errors import (
    MalformedDocument,
    MultipleJoins,
    NoJoin,
    NotEquivalence,
    NotVerified,
    SamePoint,
)

KNOWN_FIELDS = {"points", "lines"}


@dataclass(frozen=True)
class DirectionPartition:
    """Parallel classes of a plane's lines.

    class_of[line] is the class id; classes[c] lists the lines of class c,
    ordered so that class ids increase with the smallest line id they contain.
    """

    class_of: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]

    @property
    def num_classes(self) -> int:
        return len(self.classes)


@dataclass
class AxiomCheck:
    passed: bool
    witness: Optional[tuple] = None


@dataclass
class AxiomReport:
    """Per-axiom outcome with a counterexample witness on failure."""

    unique_join: AxiomCheck
    unique_parallel: AxiomCheck
    triangle: AxiomCheck

    @property
    def all_pass(self) -> bool:
        return (
            self.unique_join.passed
            and self.unique_parallel.passed
            and self.triangle.passed
        )

    def to_dict(self) -> dict:
        def one(check: AxiomCheck) -> dict:
            d: dict = {"passed": check.passed}
            if check.witness is not None:
                d["witness"] = list(check.witness)
            return d

        return {
            "unique_join": one(self.unique_join),
            "unique_parallel": one(self.unique_parallel),
            "triangle": one(self.triangle),
        }


class IncidencePlane:
    """A finite point/line incidence structure.

    Immutable after construction except for the axiom status set by
    ``verify_axioms`` and internally cached lookup tables.
    """

    def __init__(self, num_points: int, lines: list[frozenset[int]]):
        self.num_points = num_points
        self.lines: tuple[frozenset[int], ...] = tuple(lines)
        self.line_index: dict[frozenset[int], int] = {
            pts: i for i, pts in enumerate(self.lines)
        }
        through: list[list[int]] = [[] for _ in range(num_points)]
        for lid, pts in enumerate(self.lines):
            for p in pts:
                through[p].append(lid)
        self.lines_through: tuple[tuple[int, ...], ...] = tuple(
            tuple(ls) for ls in through
        )
        self.axiom_status: str = "unchecked"
        self.axiom_report: Optional[AxiomReport] = None
        self._partition: Optional[DirectionPartition] = None
        self._join: Optional[list[list[int]]] = None

    @property
    def num_lines(self) -> int:
        return len(self.lines)

    @property
    def verified(self) -> bool:
        return self.axiom_status == "verified"

    def require_verified(self) -> None:
        if not self.verified:
            raise NotVerified(
                "operation requires a plane that passed verify_axioms "
                f"(status: {self.axiom_status})"
            )

    def join_table(self) -> list[list[int]]:
        """joining-line lookup: join[p][q] = line id through p and q (p != q)."""
        self.require_verified()
        if self._join is None:
            n = self.num_points
            table = [[-1] * n for _ in range(n)]
            for lid, pts in enumerate(self.lines):
                members = sorted(pts)
                for i, p in enumerate(members):
                    for q in members[i + 1:]:
                        table[p][q] = lid
                        table[q][p] = lid
            self._join = table
        return self._join

    def to_document(self) -> dict:
        return {
            "points": self.num_points,
            "lines": [sorted(pts) for pts in self.lines],
        }


def load_plane(document: dict) -> IncidencePlane:
    """Parse an incidence document into an unchecked plane.

    Unknown top-level fields are tolerated with a warning; structural
    problems (bad indices, duplicate or empty lines) are rejected.
    """
    if not isinstance(document, dict):
        raise MalformedDocument("document must be a mapping")
    for key in document:
        if key not in KNOWN_FIELDS:
            warnings.warn(f"ignoring unknown field {key!r} in incidence document")
    if "points" not in document or "lines" not in document:
        raise MalformedDocument("document requires 'points' and 'lines' fields")
    num_points = document["points"]
    if not isinstance(num_points, int) or isinstance(num_points, bool) or num_points < 0:
        raise MalformedDocument("'points' must be a non-negative integer")
    raw_lines = document["lines"]
    if not isinstance(raw_lines, list):
        raise MalformedDocument("'lines' must be a list of point-index lists")

    lines: list[frozenset[int]] = []
    seen: set[frozenset[int]] = set()
    for i, raw in enumerate(raw_lines):
        if not isinstance(raw, list) or not raw:
            raise MalformedDocument(f"line {i} must be a non-empty list of points")
        for p in raw:
            if not isinstance(p, int) or isinstance(p, bool) or not 0 <= p < num_points:
                raise MalformedDocument(f"line {i} has invalid point index {p!r}")
        pts = frozenset(raw)
        if len(pts) != len(raw):
            raise MalformedDocument(f"line {i} repeats a point")
        if pts in seen:
            raise MalformedDocument(f"line {i} duplicates an earlier line")
        seen.add(pts)
        lines.append(pts)
    return IncidencePlane(num_points, lines)


def verify_axioms(plane: IncidencePlane) -> AxiomReport:
    """Check the three affine plane axioms exhaustively.

    Failures are report content (with a witness), never exceptions.
    Updates ``plane.axiom_status``.
    """
    n = plane.num_points

    unique_join = AxiomCheck(True)
    for p in range(n):
        for q in range(p + 1, n):
            joins = [lid for lid in plane.lines_through[p] if q in plane.lines[lid]]
            if len(joins) != 1:
                unique_join = AxiomCheck(False, (p, q, len(joins)))
                break
        if not unique_join.passed:
            break

    unique_parallel = AxiomCheck(True)
    for p in range(n):
        on_p = set(plane.lines_through[p])
        for lid, pts in enumerate(plane.lines):
            if p in pts:
                continue
            parallels = [m for m in on_p if plane.lines[m].isdisjoint(pts)]
            if len(parallels) != 1:
                unique_parallel = AxiomCheck(False, (p, lid, len(parallels)))
                break
        if not unique_parallel.passed:
            break

    triangle = AxiomCheck(False, ("no non-collinear point triple",))
    for p in range(n):
        for q in range(p + 1, n):
            for r in range(q + 1, n):
                if not any(
                    {p, q, r} <= pts for pts in plane.lines
                ):
                    triangle = AxiomCheck(True)
                    break
            if triangle.passed:
                break
        if triangle.passed:
            break

    report = AxiomReport(unique_join, unique_parallel, triangle)
    plane.axiom_status = "verified" if report.all_pass else "failed"
    plane.axiom_report = report
    return report


def line_through(plane: IncidencePlane, p: int, q: int) -> int:
    """The unique line joining two distinct points."""
    if p == q:
        raise SamePoint(f"line_through requires distinct points, got {p} twice")
    if plane.verified:
        return plane.join_table()[p][q]
    joins = [lid for lid in plane.lines_through[p] if q in plane.lines[lid]]
    if not joins:
        raise NoJoin(f"no line joins points {p} and {q}")
    if len(joins) > 1:
        raise MultipleJoins(f"points {p} and {q} lie on {len(joins)} common lines")
    return joins[0]


def parallel(plane: IncidencePlane, l: int, m: int) -> bool:
    """Two lines are parallel when they coincide or share no point."""
    return l == m or plane.lines[l].isdisjoint(plane.lines[m])


def parallel_through_point(plane: IncidencePlane, l: int, p: int) -> int:
    """The unique line through p parallel to l; l itself when p lies on it."""
    plane.require_verified()
    if p in plane.lines[l]:
        return l
    for m in plane.lines_through[p]:
        if plane.lines[m].isdisjoint(plane.lines[l]):
            return m
    raise NoJoin(f"no parallel to line {l} through point {p}")  # unreachable when verified


def parallel_partition(plane: IncidencePlane) -> DirectionPartition:
    """Split the lines into parallel classes.

    Built by union-find over the parallelism relation, then audited:
    every pair inside a class must itself be parallel.  The audit can
    only fail on structures that are not affine planes; it is kept as a
    guard because the operation is reachable from unverified planes in
    principle.
    """
    plane.require_verified()
    if plane._partition is not None:
        return plane._partition

    nl = plane.num_lines
    parent = list(range(nl))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for l in range(nl):
        for m in range(l + 1, nl):
            if plane.lines[l].isdisjoint(plane.lines[m]):
                union(l, m)

    groups: dict[int, list[int]] = {}
    for l in range(nl):
        groups.setdefault(find(l), []).append(l)
    classes = tuple(tuple(sorted(g)) for _, g in sorted(groups.items()))
    class_of = [0] * nl
    for cid, members in enumerate(classes):
        for l in members:
            class_of[l] = cid
        for i, l in enumerate(members):
            for m in members[i + 1:]:
                if not parallel(plane, l, m):
                    raise NotEquivalence(
                        f"lines {l} and {m} share a class but are not parallel"
                    )

    partition = DirectionPartition(tuple(class_of), classes)
    plane._partition = partition
    return partition
