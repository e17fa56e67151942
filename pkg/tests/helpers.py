"""Shared fixtures-in-spirit for the test suite: the small fields everything
runs over, and the exhaustive field-axiom check reused by the acceptance
suite."""

from friezes import FieldSpec

PRIME_POWERS_LE_9 = (2, 3, 4, 5, 7, 8, 9)

_SPEC_ARGS = {
    2: (2, 1),
    3: (3, 1),
    4: (2, 2),
    5: (5, 1),
    7: (7, 1),
    8: (2, 3),
    9: (3, 2),
}

_CACHE: dict[int, FieldSpec] = {}


def field_by_q(q: int) -> FieldSpec:
    if q not in _CACHE:
        p, k = _SPEC_ARGS[q]
        _CACHE[q] = FieldSpec(p, k)
    return _CACHE[q]


def all_small_fields() -> list[FieldSpec]:
    return [field_by_q(q) for q in PRIME_POWERS_LE_9]


def assert_field_axioms(spec: FieldSpec):
    """Exhaustive field axioms over all pairs and triples of codes."""
    q = spec.q
    add, mul, neg, inv = spec.add_code, spec.mul_code, spec.neg_code, spec.inv_code
    codes = range(q)
    for a in codes:
        assert add(a, 0) == a
        assert mul(a, 1) == a
        assert mul(a, 0) == 0
        assert add(a, neg(a)) == 0
        if a:
            assert mul(a, inv(a)) == 1
        assert spec.pow_code(a, q) == a  # Frobenius: a^q = a
    for a in codes:
        for b in codes:
            assert add(a, b) == add(b, a)
            assert mul(a, b) == mul(b, a)
    for a in codes:
        for b in codes:
            for c in codes:
                assert add(add(a, b), c) == add(a, add(b, c))
                assert mul(mul(a, b), c) == mul(a, mul(b, c))
                assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
