"""Walk through building and inspecting small affine planes.

Builds AG(2,3), checks the three axioms, and explores joining lines,
parallels and the partition of lines into parallel classes.
"""

from affineplane import (
    build_prime_plane,
    line_through,
    load_plane,
    parallel,
    parallel_partition,
    parallel_through_point,
    verify_axioms,
)

# AG(2,3): 9 points laid out as (x, y) -> id x*3 + y
plane = build_prime_plane(3)
print(f"AG(2,3): {plane.num_points} points, {plane.num_lines} lines")

report = verify_axioms(plane)
print(f"unique joining line:     {report.unique_join.passed}")
print(f"unique parallel:         {report.unique_parallel.passed}")
print(f"triangle exists:         {report.triangle.passed}")

# the line through (0,0) and (1,1), i.e. point ids 0 and 4
l = line_through(plane, 0, 4)
print(f"\nline through 0 and 4: {sorted(plane.lines[l])}")

# the unique parallel to it through (0,1) = point 1
m = parallel_through_point(plane, l, 1)
print(f"parallel through 1:   {sorted(plane.lines[m])}")
print(f"parallel(l, m) = {parallel(plane, l, m)}")

part = parallel_partition(plane)
print(f"\n{part.num_classes} parallel classes:")
for cid, members in enumerate(part.classes):
    print(f"  class {cid}: lines {list(members)}")

# the same plane can come from a plain incidence document
doc = {"points": 4, "lines": [[0, 1], [2, 3], [0, 2], [1, 3], [0, 3], [1, 2]]}
small = load_plane(doc)
print(f"\nloaded 4-point plane verifies: {verify_axioms(small).all_pass}")
