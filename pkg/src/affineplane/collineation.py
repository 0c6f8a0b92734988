"""Point bijections of a plane: collineations, dilations, translations.

A map is stored as a tuple ``image`` with image[p] = image of point p.
Classification follows the chain general -> collineation (lines go to
lines) -> dilation (every joining line goes to a parallel one) ->
translation (no fixed point, or the identity).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .builder import DEFAULT_MAX_ORDER, intersect
from .errors import (
    NotDilation,
    NotTranslation,
    OrderTooLarge,
    SizeMismatch,
    TraceClassMismatch,
)
from .incidence import (
    IncidencePlane,
    line_through,
    parallel_partition,
    parallel_through_point,
)

DEFAULT_MAX_POINTS = 9  # collineation backtracking bound


@dataclass(frozen=True)
class ClassifiedMap:
    """A point bijection together with its strongest classification."""

    image: tuple[int, ...]
    kind: str  # general | collineation | dilation | translation
    fixed_points: frozenset[int]
    direction: Optional[int] = None

    @property
    def is_identity(self) -> bool:
        return all(i == p for p, i in enumerate(self.image))


def _check_size(plane: IncidencePlane, image) -> None:
    if len(image) != plane.num_points:
        raise SizeMismatch(
            f"map covers {len(image)} points, plane has {plane.num_points}"
        )


def fixed_points(image) -> frozenset[int]:
    return frozenset(p for p, q in enumerate(image) if p == q)


def is_collineation(plane: IncidencePlane, image) -> bool:
    plane.require_verified()
    _check_size(plane, image)
    return all(
        frozenset(image[p] for p in pts) in plane.line_index for pts in plane.lines
    )


def is_dilation(plane: IncidencePlane, image) -> bool:
    if not is_collineation(plane, image):
        return False
    join = plane.join_table()
    class_of = parallel_partition(plane).class_of
    n = plane.num_points
    for p in range(n):
        for q in range(p + 1, n):
            if class_of[join[p][q]] != class_of[join[image[p]][image[q]]]:
                return False
    return True


def is_translation(plane: IncidencePlane, image) -> bool:
    _check_size(plane, image)
    if all(i == p for p, i in enumerate(image)):
        return True
    return not fixed_points(image) and is_dilation(plane, image)


def trace(plane: IncidencePlane, f: ClassifiedMap, p: int) -> Optional[int]:
    """Line through p and its image; None when p is fixed."""
    if f.kind not in ("dilation", "translation"):
        raise NotDilation(f"trace requires a dilation, got kind {f.kind!r}")
    q = f.image[p]
    if q == p:
        return None
    return line_through(plane, p, q)


def direction(plane: IncidencePlane, f: ClassifiedMap) -> Optional[int]:
    """Parallel class containing every trace of a translation.

    None for the identity, whose direction is undefined.  Every point's
    trace is computed and compared, not just one: that all traces agree
    is itself a claim worth checking.
    """
    if f.kind != "translation":
        raise NotTranslation(f"direction requires a translation, got kind {f.kind!r}")
    if f.is_identity:
        return None
    class_of = parallel_partition(plane).class_of
    classes = {class_of[trace(plane, f, p)] for p in range(plane.num_points)}
    if len(classes) != 1:
        raise TraceClassMismatch(
            f"traces fall into {len(classes)} parallel classes"
        )
    return classes.pop()


def classify(plane: IncidencePlane, image) -> ClassifiedMap:
    """Classify a bijection as strongly as its properties allow."""
    _check_size(plane, image)
    image = tuple(image)
    fixed = fixed_points(image)
    if not is_collineation(plane, image):
        return ClassifiedMap(image, "general", fixed)
    if not is_dilation(plane, image):
        return ClassifiedMap(image, "collineation", fixed)
    if len(fixed) == plane.num_points:
        return ClassifiedMap(image, "translation", fixed)
    if fixed:
        return ClassifiedMap(image, "dilation", fixed)
    f = ClassifiedMap(image, "translation", fixed)
    return ClassifiedMap(image, "translation", fixed, direction(plane, f))


def identity_map(plane: IncidencePlane) -> ClassifiedMap:
    n = plane.num_points
    return ClassifiedMap(tuple(range(n)), "translation", frozenset(range(n)))


def enumerate_collineations(
    plane: IncidencePlane, max_points: int = DEFAULT_MAX_POINTS
) -> list[ClassifiedMap]:
    """All collineations, by backtracking over point images.

    A partial assignment is pruned as soon as the assigned images of any
    line stop fitting on a common line.  Exponential in the worst case;
    bounded by ``max_points``.
    """
    plane.require_verified()
    n = plane.num_points
    if n > max_points:
        raise OrderTooLarge(
            f"collineation search bounded to {max_points} points, plane has {n}"
        )
    join = plane.join_table()

    found: list[tuple[int, ...]] = []
    image: list[int] = [-1] * n
    used = [False] * n

    def consistent(p: int, b: int) -> bool:
        for lid in plane.lines_through[p]:
            imgs = [image[q] for q in plane.lines[lid] if q != p and image[q] != -1]
            if not imgs:
                continue
            if b in imgs:
                return False
            if len(imgs) == 1:
                continue
            target = plane.lines[join[imgs[0]][imgs[1]]]
            if b not in target or any(i not in target for i in imgs):
                return False
        return True

    def extend(p: int) -> None:
        if p == n:
            found.append(tuple(image))
            return
        for b in range(n):
            if used[b] or not consistent(p, b):
                continue
            image[p] = b
            used[b] = True
            extend(p + 1)
            image[p] = -1
            used[b] = False

    extend(0)
    results = [classify(plane, img) for img in sorted(found)]
    for f in results:
        assert f.kind != "general", "backtracking produced a non-collineation"
    return results


def enumerate_dilations(
    plane: IncidencePlane, max_order: int = DEFAULT_MAX_ORDER
) -> list[ClassifiedMap]:
    """All dilations, by two-point determination.

    A dilation is pinned down by the images of two distinct points A, B,
    which must span a line parallel to AB.  Every candidate image pair is
    extended pointwise by intersecting parallels and the result validated
    with is_dilation, so the construction cannot over-report.
    """
    plane.require_verified()
    order = len(plane.lines[0])
    if order > max_order:
        raise OrderTooLarge(
            f"dilation enumeration bounded to order {max_order}, plane has {order}"
        )
    n = plane.num_points
    join = plane.join_table()
    partition = parallel_partition(plane)
    a, b = 0, 1
    line_ab = join[a][b]
    on_ab = plane.lines[line_ab]
    off_ab = [c for c in range(n) if c not in on_ab]

    def extend_pair(base1: int, base2: int, img1: int, img2: int, c: int) -> Optional[int]:
        l1 = parallel_through_point(plane, join[base1][c], img1)
        l2 = parallel_through_point(plane, join[base2][c], img2)
        if l1 == l2:
            return None
        return intersect(plane, l1, l2)

    seen: set[tuple[int, ...]] = set()
    for m in partition.classes[partition.class_of[line_ab]]:
        for a2 in plane.lines[m]:
            for b2 in plane.lines[m]:
                if a2 == b2:
                    continue
                image = [-1] * n
                image[a], image[b] = a2, b2
                ok = True
                for c in off_ab:
                    c2 = extend_pair(a, b, a2, b2, c)
                    if c2 is None:
                        ok = False
                        break
                    image[c] = c2
                if not ok:
                    continue
                d = off_ab[0]
                for c in on_ab:
                    if c in (a, b):
                        continue
                    c2 = extend_pair(a, d, a2, image[d], c)
                    if c2 is None:
                        ok = False
                        break
                    image[c] = c2
                if not ok:
                    continue
                img = tuple(image)
                if img in seen or sorted(img) != list(range(n)):
                    continue
                if is_dilation(plane, img):
                    seen.add(img)
    return [classify(plane, img) for img in sorted(seen)]


def enumerate_translations(
    plane: IncidencePlane, max_order: int = DEFAULT_MAX_ORDER
) -> list[ClassifiedMap]:
    """Identity plus every fixed-point-free dilation, each with its direction."""
    out = [
        f
        for f in enumerate_dilations(plane, max_order)
        if f.kind == "translation"
    ]
    return out
