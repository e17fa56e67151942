"""Configuration spaces of points on P^1(F_q), their PGL2 orbits, and the
two-way correspondence with tame friezes.

C_n is the set of n-tuples of points with no two cyclically consecutive
points equal.  For even n the sign class of a configuration is read off any
lift V_1..V_n to F_q^2: with D_i = det(V_i, V_{i+1}) and the antiperiodic
twist V_{n+1} = -V_1, the configuration is in the plus class when the
product of the odd-indexed D_i equals the product of the even-indexed ones,
and in the minus class when they differ by a sign.  The plus class is
exactly where an equal-determinant antiperiodic lift exists, which is what
the frieze correspondence needs.  In characteristic 2 the two classes
coincide.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence

from .errors import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    CriterionFails,
    NotLiftable,
    OddN,
    OddNWithSignFilter,
)
from .frieze import FirstRow, matrix_criterion
from .gf import FieldElement, FieldSpec, ProjPoint, pgl2_point_permutations


@dataclass(frozen=True)
class Configuration:
    """An n-tuple of points of P^1 with cyclically adjacent points distinct."""

    spec: FieldSpec
    points: tuple[ProjPoint, ...]

    def __post_init__(self):
        n = len(self.points)
        if n < 2:
            raise ValueError("a configuration needs at least 2 points")
        if any(p.spec != self.spec for p in self.points):
            raise ValueError("points from a different field")
        for i in range(n):
            if self.points[i] == self.points[(i + 1) % n]:
                raise ValueError(
                    f"cyclically consecutive points {i} and {(i + 1) % n} coincide"
                )

    @classmethod
    def from_indices(cls, spec: FieldSpec, indices: Sequence[int]) -> "Configuration":
        return cls(spec, tuple(ProjPoint.from_index(spec, i) for i in indices))

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(p.index for p in self.points)

    def labels(self) -> list[str]:
        """Serialized points: the element code of a for (a : 1), "inf" for (1 : 0).

        parse_points is the inverse.
        """
        return ["inf" if p.is_infinity else str(p.x) for p in self.points]

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.points) + ")"


class SignClass(Enum):
    PLUS = "plus"
    MINUS = "minus"
    OTHER = "other"


def parse_points(spec: FieldSpec, labels: Sequence[str]) -> Configuration:
    """Inverse of Configuration.labels, reading element codes or "inf"."""
    indices = []
    for lab in labels:
        lab = lab.strip()
        if lab == "inf":
            indices.append(spec.q)
        else:
            indices.append(spec.element(int(lab)).code)
    return Configuration.from_indices(spec, indices)


def _det_table(spec: FieldSpec) -> list[list[int]]:
    """det of the canonical lifts of each pair of points: (x : 1) -> (x, 1)
    and (1 : 0) -> (1, 0)."""
    q = spec.q
    sub, neg = spec.sub_code, spec.neg_code
    table = [[0] * (q + 1) for _ in range(q + 1)]
    for i in range(q):
        for j in range(q):
            table[i][j] = sub(i, j)
        table[i][q] = neg(1)
        table[q][i] = 1
    return table


def _sign_products(spec: FieldSpec, dets, tup: tuple[int, ...]) -> tuple[int, int]:
    """Products of odd- and even-indexed D_i (1-based), with the twist on D_n."""
    mul, neg = spec.mul_code, spec.neg_code
    n = len(tup)
    podd = peven = 1
    for i in range(n):
        d = dets[tup[i]][tup[(i + 1) % n]]
        if i == n - 1:
            d = neg(d)
        if i % 2 == 0:
            podd = mul(podd, d)
        else:
            peven = mul(peven, d)
    return podd, peven


def _check_budget(spec: FieldSpec, n: int, budget: int):
    space = (spec.q + 1) ** n
    if space > budget:
        raise BudgetExceeded(
            f"(q+1)^n = {space} configuration candidates exceed budget {budget}"
        )


def configuration_index_tuples(
    spec: FieldSpec,
    n: int,
    sign_filter: str = "all",
    budget: int = DEFAULT_BUDGET,
) -> Iterator[tuple[int, ...]]:
    """Stream the point-index tuples of C_n, optionally restricted to a sign
    class.  This is the allocation-light path used by the orbit and counting
    code; enumerate_configurations wraps it in Configuration objects."""
    if sign_filter not in ("all", "plus", "minus"):
        raise ValueError(f"unknown sign filter {sign_filter!r}")
    if sign_filter != "all" and n % 2:
        raise OddNWithSignFilter("sign classes only exist for even n")
    if n < 2:
        raise ValueError("configurations need n >= 2")
    _check_budget(spec, n, budget)
    q1 = spec.q + 1
    dets = _det_table(spec) if sign_filter != "all" else None
    neg = spec.neg_code

    def keep(tup: tuple[int, ...]) -> bool:
        if sign_filter == "all":
            return True
        podd, peven = _sign_products(spec, dets, tup)
        return podd == (peven if sign_filter == "plus" else neg(peven))

    def rec(tup: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        i = len(tup)
        if i == n:
            if keep(tup):
                yield tup
            return
        last = tup[-1]
        first = tup[0]
        for v in range(q1):
            if v == last or (i == n - 1 and v == first):
                continue
            yield from rec(tup + (v,))

    for v0 in range(q1):
        yield from rec((v0,))


def enumerate_configurations(
    spec: FieldSpec,
    n: int,
    sign_filter: str = "all",
    budget: int = DEFAULT_BUDGET,
) -> Iterator[Configuration]:
    """Stream C_n (or its plus/minus subspace for even n)."""
    for tup in configuration_index_tuples(spec, n, sign_filter, budget):
        yield Configuration.from_indices(spec, tup)


def sign_class(config: Configuration) -> SignClass:
    """Sign class of an even-length configuration, independent of the lift.

    In characteristic 2 the plus and minus conditions coincide and PLUS is
    returned for configurations satisfying them.
    """
    if config.n % 2:
        raise OddN("sign classes only exist for even n")
    spec = config.spec
    podd, peven = _sign_products(spec, _det_table(spec), config.indices)
    if podd == peven:
        return SignClass.PLUS
    if podd == spec.neg_code(peven):
        return SignClass.MINUS
    return SignClass.OTHER


@dataclass(frozen=True)
class OrbitSummary:
    """PGL2 orbit decomposition of a configuration space."""

    spec: FieldSpec
    n: int
    sign_filter: str
    count: int
    representatives: tuple[Configuration, ...]
    sizes: tuple[int, ...]

    def size_multiset(self) -> list[int]:
        return sorted(self.sizes)


def pgl2_orbit_count(
    spec: FieldSpec,
    n: int,
    sign_filter: str = "all",
    budget: int = DEFAULT_BUDGET,
) -> OrbitSummary:
    """Partition the configurations into PGL2 orbits by canonical-representative
    hashing: each tuple is mapped through every group element and the
    lexicographically smallest image is its orbit key."""
    perms = pgl2_point_permutations(spec)
    counter: Counter[tuple[int, ...]] = Counter()
    for tup in configuration_index_tuples(spec, n, sign_filter, budget):
        counter[min(tuple(perm[i] for i in tup) for perm in perms)] += 1
    reps = sorted(counter)
    return OrbitSummary(
        spec,
        n,
        sign_filter,
        len(reps),
        tuple(Configuration.from_indices(spec, rep) for rep in reps),
        tuple(counter[rep] for rep in reps),
    )


def orbit_summary_to_json_dict(summary: OrbitSummary) -> dict:
    """JSON form of an orbit decomposition, mirroring the enumeration schema;
    representatives are serialized point labels."""
    return {
        "field": summary.spec.descriptor,
        "n": summary.n,
        "sign": summary.sign_filter,
        "count": summary.count,
        "orbits": [
            {"rep": rep.labels(), "size": size}
            for rep, size in zip(summary.representatives, summary.sizes)
        ],
    }


@dataclass(frozen=True)
class Lift:
    """Vectors over F_q^2 lifting a configuration, with all consecutive
    determinants equal (antiperiodically: det(V_n, -V_1) included)."""

    spec: FieldSpec
    vectors: tuple[tuple[FieldElement, FieldElement], ...]
    det_value: FieldElement

    def consecutive_determinants(self) -> list[FieldElement]:
        spec = self.spec
        n = len(self.vectors)
        out = []
        for i in range(n):
            x1, y1 = self.vectors[i]
            if i < n - 1:
                x2, y2 = self.vectors[i + 1]
            else:
                x2, y2 = -self.vectors[0][0], -self.vectors[0][1]
            out.append(x1 * y2 - x2 * y1)
        return out


def _canonical_vector(spec: FieldSpec, point_index: int) -> tuple[int, int]:
    return (1, 0) if point_index == spec.q else (point_index, 1)


def lift_configuration(config: Configuration) -> Lift:
    """Equal-determinant antiperiodic lift of the configuration.

    Exists always for odd n; for even n exactly on the plus class.  The free
    scalar is fixed deterministically: the common determinant is chosen so
    the first rescaling factor is 1 (odd n needs no square root that way),
    and for even n the first factor is simply set to 1.
    """
    spec = config.spec
    n = config.n
    indices = config.indices
    mul, inv, neg = spec.mul_code, spec.inv_code, spec.neg_code
    raw = [_canonical_vector(spec, i) for i in indices]

    def det(u, v):
        return spec.sub_code(mul(u[0], v[1]), mul(v[0], u[1]))

    dets = [det(raw[i], raw[(i + 1) % n]) for i in range(n - 1)]
    dets.append(det(raw[n - 1], (neg(raw[0][0]), neg(raw[0][1]))))
    podd = peven = 1
    for i, d in enumerate(dets):
        if i % 2 == 0:
            podd = mul(podd, d)
        else:
            peven = mul(peven, d)
    if n % 2:
        c = mul(podd, inv(peven))
    else:
        if podd != peven:
            raise NotLiftable(
                "even-length configuration outside the plus class has no "
                "equal-determinant lift"
            )
        c = 1
    lam = [1] * n
    for i in range(n - 1):
        # det(lam_i V_i, lam_{i+1} V_{i+1}) = c
        lam[i + 1] = mul(mul(c, inv(dets[i])), inv(lam[i]))
    assert mul(mul(lam[n - 1], lam[0]), dets[n - 1]) == c
    vectors = tuple(
        (
            spec.element(mul(lam[i], raw[i][0])),
            spec.element(mul(lam[i], raw[i][1])),
        )
        for i in range(n)
    )
    lift = Lift(spec, vectors, spec.element(c))
    assert all(d == lift.det_value for d in lift.consecutive_determinants())
    return lift


@dataclass(frozen=True)
class FirstRowClass:
    """Even-length first rows modulo the rescaling (la_1, a_2/l, la_3, ...),
    represented by the lexicographically smallest member."""

    rep: FirstRow

    @classmethod
    def of(cls, row: FirstRow) -> "FirstRowClass":
        spec = row.spec
        codes = row.codes
        if len(codes) % 2:
            raise OddN("rescaling classes only exist for even n")
        best = min(cls._member_codes(spec, codes))
        return cls(FirstRow.from_codes(spec, best))

    @staticmethod
    def _member_codes(spec: FieldSpec, codes: tuple[int, ...]):
        mul, inv = spec.mul_code, spec.inv_code
        for lam in range(1, spec.q):
            li = inv(lam)
            yield tuple(
                mul(lam if i % 2 == 0 else li, c) for i, c in enumerate(codes)
            )

    def members(self) -> list[FirstRow]:
        spec = self.rep.spec
        return [
            FirstRow.from_codes(spec, codes)
            for codes in sorted(set(self._member_codes(spec, self.rep.codes)))
        ]

    def __contains__(self, row: FirstRow) -> bool:
        return row.codes in set(self._member_codes(row.spec, self.rep.codes))


def configuration_to_frieze(config: Configuration) -> FirstRow | FirstRowClass:
    """Coefficients a_i of the expansion V_i = a_i V_{i-1} - V_{i-2} over an
    equal-determinant lift, with V_0 = -V_n and V_{-1} = -V_{n-1}.

    For odd n the row is independent of the lift and is returned directly;
    for even n the row is only defined up to rescaling and the canonical
    class is returned.
    """
    lift = lift_configuration(config)
    spec = config.spec
    n = config.n
    vecs = list(lift.vectors)
    ext = [
        (-vecs[n - 2][0], -vecs[n - 2][1]),  # V_{-1}
        (-vecs[n - 1][0], -vecs[n - 1][1]),  # V_0
    ] + vecs
    c_inv = lift.det_value.inverse()
    codes = []
    for i in range(n):
        v_prev2, v_prev, v = ext[i], ext[i + 1], ext[i + 2]
        a = (v_prev2[0] * v[1] - v[0] * v_prev2[1]) * c_inv
        assert v[0] == a * v_prev[0] - v_prev2[0]
        assert v[1] == a * v_prev[1] - v_prev2[1]
        codes.append(a.code)
    row = FirstRow.from_codes(spec, codes)
    ok, _ = matrix_criterion(row)
    assert ok, "lift coefficients must satisfy the matrix criterion"
    if n % 2:
        return row
    return FirstRowClass.of(row)


def frieze_to_configuration(row: FirstRow) -> Configuration:
    """The configuration of the vector sequence V_i = a_i V_{i-1} - V_{i-2}
    seeded with V_{-1} = (-1, 0), V_0 = (0, 1), projected to P^1.

    The components of the V_i run along the first two diagonals of the
    frieze.  Requires the matrix criterion; the result is in C_n, and in the
    plus class when n is even.
    """
    ok, product = matrix_criterion(row)
    if not ok:
        raise CriterionFails(f"row {row} has product {product!r} != -Id")
    spec = row.spec
    one = spec.one
    prev2 = (-one, spec.zero)  # V_{-1}
    prev = (spec.zero, one)  # V_0
    vectors = []
    for a in row.elements:
        cur = (a * prev[0] - prev2[0], a * prev[1] - prev2[1])
        vectors.append(cur)
        prev2, prev = prev, cur
    assert vectors[-1] == (spec.zero, -one)  # V_n = -V_0, forced by -Id
    points = tuple(ProjPoint(x, y) for x, y in vectors)
    return Configuration(spec, points)


def orbit_of(config: Configuration) -> tuple[int, ...]:
    """Canonical representative (as point indices) of the PGL2 orbit."""
    perms = pgl2_point_permutations(config.spec)
    tup = config.indices
    return min(tuple(perm[i] for i in tup) for perm in perms)
