import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from friezes import (
    FieldSpec,
    FirstRow,
    NotAFrieze,
    check_tame,
    dihedral_canonical,
    frieze_from_first_row,
    matrix_criterion,
    parse_frieze_json,
    render_frieze,
)
from friezes.frieze import dihedral_orbit_codes, frieze_to_json_dict

from helpers import field_by_q

F2 = FieldSpec(2)
F3 = FieldSpec(3)
F4 = FieldSpec(2, 2)
F5 = FieldSpec(5)


def row(spec, codes):
    return FirstRow.from_codes(spec, codes)


def test_criterion_published_rows():
    assert matrix_criterion(row(F2, (1, 1, 1, 0, 0)))[0]
    assert matrix_criterion(row(F3, (2, 1, 0, 1, 2)))[0]
    # the all-zero 6-cycle works over every field: M(0) has order 4 in SL2
    for spec in (F2, F3, F4, F5):
        assert matrix_criterion(row(spec, (0,) * 6))[0]
    # (1,1,1) closes at width 0 over any field
    for spec in (F2, F3, F4, F5):
        assert matrix_criterion(row(spec, (1, 1, 1)))[0]


def test_criterion_rejects_with_witness():
    ok, product = matrix_criterion(row(F3, (1, 1, 1, 1)))
    assert not ok
    assert product.codes == (2, 1, 2, 0)  # M(1)^4 over F_3, by hand


def test_f5_width2_catalog_rows_pass():
    for cycle in ((2, 1, 3, 1, 2), (4, 4, 4, 0, 0), (4, 2, 0, 2, 4), (1, 4, 4, 3, 0), (3, 3, 3, 3, 3)):
        assert matrix_criterion(row(F5, cycle))[0]


def test_frieze_from_first_row_published_width2():
    built = frieze_from_first_row(row(F2, (1, 1, 1, 0, 0)))
    assert built.width == 2
    assert [e.code for e in built.row(1)] == [1, 1, 1, 0, 0]
    assert [e.code for e in built.row(2)] == [0, 0, 1, 1, 1]
    assert all(e.code == 1 for e in built.row(0))
    assert all(e.code == 1 for e in built.row(3))
    assert all(e.code == 0 for e in built.row(-1))
    assert all(e.code == 0 for e in built.row(4))


def test_width_zero_frieze():
    built = frieze_from_first_row(row(F3, (1, 1, 1)))
    assert built.width == 0
    assert built.row_range == (-1, 2)
    assert [e.code for e in built.row(1)] == [1, 1, 1]


def test_rejection_is_a_value_not_an_exception():
    rejected = frieze_from_first_row(row(F3, (1, 1, 1, 1)))
    assert isinstance(rejected, NotAFrieze)
    assert rejected.product.codes == (2, 1, 2, 0)


def test_classic_width4_example_mod_5_and_7():
    # the classic positive-integer width-4 frieze reduced mod p; interior
    # rows below were computed by hand from the diagonal recursion over Z
    first = (4, 2, 1, 3, 2, 2, 1)
    rows_over_z = {
        2: (7, 1, 2, 5, 3, 1, 3),
        3: (3, 1, 3, 7, 1, 2, 5),
        4: (2, 1, 4, 2, 1, 3, 2),
    }
    for p in (5, 7):
        spec = FieldSpec(p)
        built = frieze_from_first_row(row(spec, tuple(c % p for c in first)))
        assert not isinstance(built, NotAFrieze)
        for r, values in rows_over_z.items():
            assert [e.code for e in built.row(r)] == [v % p for v in values]
        assert built.satisfies_unimodular_rule()
        assert built.satisfies_glide_reflection()
        assert built.is_periodic()


def test_acceptance_matches_criterion_exhaustively_q2():
    for n in range(3, 7):
        for codes in itertools.product(range(2), repeat=n):
            r = row(F2, codes)
            built = frieze_from_first_row(r)
            assert isinstance(built, NotAFrieze) != matrix_criterion(r)[0]


def test_glide_and_unimodular_on_all_small_friezes():
    for spec in (F2, F3):
        for n in (4, 5, 6):
            for codes in itertools.product(range(spec.q), repeat=n):
                r = row(spec, codes)
                built = frieze_from_first_row(r)
                if isinstance(built, NotAFrieze):
                    continue
                assert built.satisfies_unimodular_rule()
                assert built.satisfies_glide_reflection()
                assert built.is_periodic()


def test_tameness_char2_zero_rows():
    # width-1 friezes in characteristic 2 have the alternating (0, x) row
    for codes in ((0, 0, 0, 0), (0, 1, 0, 1), (1, 0, 1, 0)):
        built = frieze_from_first_row(row(F2, codes))
        assert not isinstance(built, NotAFrieze)
        report = check_tame(built)
        assert report.ok and report.witness is None
    for x in range(4):
        built = frieze_from_first_row(row(F4, (0, x, 0, x)))
        assert not isinstance(built, NotAFrieze)
        assert check_tame(built).ok


def test_tameness_zero_cycle_width3():
    built = frieze_from_first_row(row(F3, (0,) * 6))
    assert check_tame(built).ok
    assert check_tame(built, all_diamonds=True).ok


def test_tameness_no_zero_entries_is_vacuous():
    built = frieze_from_first_row(row(F5, (3, 3, 3, 3, 3)))
    assert all(e.code != 0 for r in range(1, 3) for e in built.row(r))
    assert check_tame(built).ok


def test_all_diamonds_debug_mode_small_sweep():
    # validates the zero-centre shortcut and the two forced border rows
    for spec in (F2, F3):
        for n in (4, 5, 6):
            for codes in itertools.product(range(spec.q), repeat=n):
                built = frieze_from_first_row(row(spec, codes))
                if isinstance(built, NotAFrieze):
                    continue
                assert check_tame(built, all_diamonds=True).ok


def test_dihedral_canonical_orbit_sizes():
    assert dihedral_canonical(row(F2, (1, 1, 1, 0, 0)))[1] == 5
    assert dihedral_canonical(row(F4, (2, 0, 3, 1, 1)))[1] == 10
    assert dihedral_canonical(row(F3, (0,) * 6))[1] == 1
    canon, size = dihedral_canonical(row(F3, (1, 0, 1, 0, 1, 0)))
    assert size == 2
    assert canon.codes == (0, 1, 0, 1, 0, 1)


def test_criterion_dihedral_invariance_exhaustive_q2():
    for n in (5, 6):
        for codes in itertools.product(range(2), repeat=n):
            r = row(F2, codes)
            value = matrix_criterion(r)[0]
            for variant in dihedral_orbit_codes(codes):
                assert matrix_criterion(row(F2, variant))[0] == value


@settings(deadline=None, max_examples=200)
@given(st.data())
def test_criterion_dihedral_invariance_random(data):
    spec = data.draw(st.sampled_from([F3, F4, F5, field_by_q(7)]))
    n = data.draw(st.integers(3, 8))
    codes = tuple(
        data.draw(st.lists(st.integers(0, spec.q - 1), min_size=n, max_size=n))
    )
    r = row(spec, codes)
    value = matrix_criterion(r)[0]
    rot = data.draw(st.integers(0, n - 1))
    rotated = codes[rot:] + codes[:rot]
    assert matrix_criterion(row(spec, rotated))[0] == value
    assert matrix_criterion(row(spec, codes[::-1]))[0] == value


def test_render_text_published_triangle():
    built = frieze_from_first_row(row(F2, (1, 1, 1, 0, 0)))
    assert render_frieze(built) == "1 1 1 1\n 1 1 1\n  0 0\n   1"


def test_render_width_zero_is_two_rows_of_ones():
    built = frieze_from_first_row(row(F3, (1, 1, 1)))
    assert render_frieze(built) == "1 1\n 1"


def test_render_json_round_trip():
    for spec, codes in ((F2, (1, 1, 1, 0, 0)), (F4, (2, 0, 3, 1, 1)), (F3, (0,) * 6)):
        built = frieze_from_first_row(row(spec, codes))
        text = render_frieze(built, "json")
        doc = json.loads(text)
        assert doc["field"] == spec.descriptor
        assert doc["first_row"] == list(codes)
        assert parse_frieze_json(text) == built


def test_parse_json_rejects_tampered_rows():
    built = frieze_from_first_row(row(F2, (1, 1, 1, 0, 0)))
    doc = frieze_to_json_dict(built)
    doc["rows"][2][0] ^= 1
    with pytest.raises(ValueError):
        parse_frieze_json(json.dumps(doc))


def test_first_row_needs_three_entries():
    with pytest.raises(ValueError):
        FirstRow.from_codes(F2, (1, 1))
