import itertools

import pytest

from affineplane import (
    GroupSelfMap,
    add,
    build_group,
    check_ring_axioms,
    compose,
    enumerate_endomorphisms,
    enumerate_tp_endomorphisms,
    identity_map,
    inversion_endo,
    is_endomorphism,
    is_trace_preserving,
    negate,
    scalar_labeling,
    unit_endo,
    zero_endo,
)
from affineplane.errors import NotEndomorphism, OrderTooLarge


def brute_force_endomorphisms(g):
    """Oracle: filter every possible table by the homomorphism identity.

    Checks the defining identity directly against the Cayley table,
    independently of is_endomorphism and of the generator-image search.
    """
    n = g.order
    out = set()
    for table in itertools.product(range(n), repeat=n):
        if all(
            table[g.cayley[i][j]] == g.cayley[table[i]][table[j]]
            for i in range(n)
            for j in range(n)
        ):
            out.add(table)
    return out


class TestOperations:
    def test_add_zero_is_identity_of_addition(self, groups, endomorphisms):
        g = groups[2]
        zero = zero_endo(g)
        for alpha in endomorphisms[2]:
            assert add(g, alpha, zero).table == alpha.table

    def test_one_plus_one_is_zero_on_klein_group(self, groups):
        g = groups[2]
        assert add(g, unit_endo(g), unit_endo(g)).table == zero_endo(g).table

    def test_additive_inverse_cancels(self, groups, endomorphisms):
        for p in (2, 3):
            g = groups[p]
            for alpha in endomorphisms[p]:
                assert add(g, alpha, negate(g, alpha)).table == zero_endo(g).table

    def test_compose_with_unit(self, groups, endomorphisms):
        g = groups[3]
        for alpha in endomorphisms[3]:
            assert compose(g, alpha, unit_endo(g)).table == alpha.table

    def test_zero_absorbs(self, groups, endomorphisms):
        g = groups[3]
        for alpha in endomorphisms[3]:
            assert compose(g, zero_endo(g), alpha).table == zero_endo(g).table

    def test_inversion_is_an_involution(self, groups):
        for g in groups.values():
            phi = inversion_endo(g)
            assert compose(g, phi, phi).table == unit_endo(g).table

    def test_inversion_on_klein_group_is_unit(self, groups):
        g = groups[2]
        assert inversion_endo(g).table == unit_endo(g).table

    def test_inversion_maps_shift_to_opposite_shift(self, groups, p3):
        g = groups[3]
        shift = [0] * 9
        unshift = [0] * 9
        for x in range(3):
            for y in range(3):
                shift[x * 3 + y] = ((x + 1) % 3) * 3 + y
                unshift[x * 3 + y] = ((x + 2) % 3) * 3 + y
        i, j = g.index_of(tuple(shift)), g.index_of(tuple(unshift))
        assert inversion_endo(g).table[i] == j

    def test_negate_of_zero_and_unit(self, groups):
        g = groups[3]
        assert negate(g, zero_endo(g)).table == zero_endo(g).table
        assert negate(g, unit_endo(g)).table == inversion_endo(g).table

    def test_negate_is_inversion_composed_with_alpha(self, groups, endomorphisms):
        for p in (2, 3):
            g = groups[p]
            phi = inversion_endo(g)
            for alpha in endomorphisms[p]:
                assert negate(g, alpha).table == compose(g, phi, alpha).table

    def test_negate_requires_endomorphism(self, groups):
        g = groups[2]
        with pytest.raises(NotEndomorphism):
            negate(g, GroupSelfMap((0, 1, 1, 1)))


class TestIsEndomorphism:
    def test_unit_and_zero(self, groups):
        for g in groups.values():
            assert is_endomorphism(g, unit_endo(g))
            assert is_endomorphism(g, zero_endo(g))

    def test_collapsing_one_element_is_not(self, groups):
        # send exactly one non-identity element to the identity, fix the others
        assert not is_endomorphism(groups[2], GroupSelfMap((0, 0, 2, 3)))

    def test_nonzero_image_of_identity_is_not(self, groups):
        assert not is_endomorphism(groups[2], GroupSelfMap((1, 0, 3, 2)))


class TestEnumeration:
    def test_klein_group_matches_brute_force_oracle(self, groups, endomorphisms):
        brute = brute_force_endomorphisms(groups[2])
        assert len(brute) == 16
        assert {a.table for a in endomorphisms[2]} == brute

    def test_ag23_count_and_predicate(self, groups, endomorphisms):
        g = groups[3]
        assert len(endomorphisms[3]) == 81
        for alpha in endomorphisms[3]:
            assert alpha.table[0] == 0
            assert all(
                alpha.table[g.cayley[i][j]]
                == g.cayley[alpha.table[i]][alpha.table[j]]
                for i in range(g.order)
                for j in range(g.order)
            )

    def test_trivial_group_has_one_endomorphism(self, p2):
        g = build_group(p2, [identity_map(p2)])
        assert [a.table for a in enumerate_endomorphisms(g)] == [(0,)]

    def test_group_order_bound(self, groups):
        with pytest.raises(OrderTooLarge):
            enumerate_endomorphisms(groups[5], max_group=9)


class TestTracePreservation:
    def test_zero_and_unit_are_trace_preserving(self, planes, groups):
        for p in (2, 3, 5):
            assert is_trace_preserving(planes[p], groups[p], zero_endo(groups[p]))
            assert is_trace_preserving(planes[p], groups[p], unit_endo(groups[p]))

    def test_direction_swap_is_endomorphism_but_not_trace_preserving(
        self, p2, groups
    ):
        g = groups[2]
        swap = GroupSelfMap((0, 2, 1, 3))
        assert is_endomorphism(g, swap)
        assert g.direction_of[1] != g.direction_of[2]
        assert not is_trace_preserving(p2, g, swap)

    @pytest.mark.parametrize("p,count", [(2, 2), (3, 3), (5, 5)])
    def test_counts(self, tp_endomorphisms, p, count):
        assert len(tp_endomorphisms[p]) == count


class TestClosureLemmas:
    @pytest.mark.parametrize("p", [2, 3])
    def test_sums_and_composites_of_endomorphisms(self, groups, endomorphisms, p):
        g = groups[p]
        for alpha in endomorphisms[p]:
            for beta in endomorphisms[p]:
                assert is_endomorphism(g, add(g, alpha, beta))
                assert is_endomorphism(g, compose(g, alpha, beta))

    @pytest.mark.parametrize("p", [2, 3])
    def test_sums_and_composites_of_tp(self, planes, groups, tp_endomorphisms, p):
        plane, g = planes[p], groups[p]
        for alpha in tp_endomorphisms[p]:
            for beta in tp_endomorphisms[p]:
                assert is_trace_preserving(plane, g, add(g, alpha, beta))
                assert is_trace_preserving(plane, g, compose(g, alpha, beta))


class TestRingReport:
    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_all_axioms_pass(self, planes, groups, tp_endomorphisms, p):
        report = check_ring_axioms(planes[p], groups[p], tp_endomorphisms[p])
        assert report.all_pass
        for name in report.AXIOM_NAMES:
            assert report.axioms[name] == (True, None)

    @pytest.mark.parametrize("p", [2, 3])
    def test_tables_match_integers_mod_p(self, groups, tp_endomorphisms, p):
        g, tp = groups[p], tp_endomorphisms[p]
        labels = scalar_labeling(g, tp)
        assert sorted(labels) == list(range(p))
        for i in range(p):
            for j in range(p):
                s = add(g, tp[i], tp[j])
                m = compose(g, tp[i], tp[j])
                assert labels[[a.table for a in tp].index(s.table)] == (
                    labels[i] + labels[j]
                ) % p
                assert labels[[a.table for a in tp].index(m.table)] == (
                    labels[i] * labels[j]
                ) % p

    def test_unit_removed_fails_mul_identity_with_witness(
        self, planes, groups, tp_endomorphisms
    ):
        g = groups[3]
        unit = unit_endo(g)
        truncated = [a for a in tp_endomorphisms[3] if a.table != unit.table]
        report = check_ring_axioms(planes[3], g, truncated)
        passed, witness = report.axioms["mul_identity"]
        assert not passed
        assert witness is not None
        assert not report.all_pass
