"""Enumerate dilations and translations and verify the group facts.

Shows the two enumeration routes agreeing on AG(2,3), the Cayley table
of the translation group, and the exhaustive checks: commutativity,
normality inside the dilations, and direction behaviour.
"""

from affineplane import (
    build_group,
    build_prime_plane,
    check_abelian,
    check_composition_direction,
    check_conjugation_direction,
    check_normal_in_dilations,
    enumerate_collineations,
    enumerate_dilations,
    generators,
)

plane = build_prime_plane(3)

collineations = enumerate_collineations(plane)
dilations = enumerate_dilations(plane)
translations = [f for f in dilations if f.kind == "translation"]
print(f"collineations: {len(collineations)}")
print(f"dilations:     {len(dilations)}")
print(f"translations:  {len(translations)}")

# the backtracking search and the two-point construction agree
filtered = {f.image for f in collineations if f.kind in ("dilation", "translation")}
assert filtered == {f.image for f in dilations}
print("two-point construction matches filtered collineations")

group = build_group(plane, translations)
print(f"\ntranslation group of order {group.order}, Cayley table:")
for row in group.cayley:
    print("  " + " ".join(f"{k}" for k in row))

print(f"\ngenerators (greedy): {generators(group)}")
print(f"abelian:                        {check_abelian(group).passed}")
print(f"normal in dilations:            {check_normal_in_dilations(group, dilations).passed}")
print(f"conjugation keeps direction:    {check_conjugation_direction(group, dilations).passed}")
print(f"composition keeps direction:    {check_composition_direction(group).passed}")

print("\ndirections (None = identity):")
for i, f in enumerate(group.elements):
    print(f"  element {i}: image {f.image}, direction {group.direction_of[i]}")
