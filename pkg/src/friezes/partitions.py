"""Partitions of n cyclically ordered points into blocks with no two
consecutive points together: brute-force enumeration, the alternating-sum
closed form, and the change of basis into falling factorials that links the
partition numbers to the configuration counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import DEFAULT_BUDGET, NonIntegralResult
from .formulas import count_configurations
from .gf import FieldSpec
from .moduli import configuration_index_tuples


@dataclass(frozen=True)
class CyclicPartition:
    """A partition of the cycle 1..n with no block containing i and i+1 (mod n).

    Blocks are frozensets ordered by least element.
    """

    n: int
    blocks: tuple[frozenset[int], ...]

    @property
    def k(self) -> int:
        return len(self.blocks)

    def __str__(self):
        return " | ".join(
            "{" + ",".join(map(str, sorted(b))) + "}" for b in self.blocks
        )


def _rgs_walk(n: int, k: int | None) -> Iterator[list[int]]:
    """Restricted-growth strings of length n with b_i != b_{i-1} and
    b_n != b_1, optionally with exactly k blocks.  Prunes on the adjacency
    constraint and on block-count feasibility."""
    assignment = [0] * n

    def rec(i: int, used: int) -> Iterator[list[int]]:
        if i == n:
            if (k is None or used == k) and assignment[n - 1] != 0:
                yield assignment
            return
        if k is not None and used + (n - i) < k:
            return
        top = used if (k is None or used < k) else used - 1
        for b in range(top + 1):
            if b == assignment[i - 1]:
                continue
            if i == n - 1 and b == 0:
                continue
            assignment[i] = b
            yield from rec(i + 1, max(used, b + 1))

    if n >= 2:
        yield from rec(1, 1)


def enumerate_cyclic_partitions(n: int, k: int) -> Iterator[CyclicPartition]:
    """Every valid partition of the n-cycle into exactly k blocks, once each."""
    if n < 2 or not 1 <= k <= n:
        raise ValueError(f"need n >= 2 and 1 <= k <= n, got n={n}, k={k}")
    for assignment in _rgs_walk(n, k):
        blocks = [[] for _ in range(k)]
        for point, b in enumerate(assignment, start=1):
            blocks[b].append(point)
        yield CyclicPartition(n, tuple(frozenset(b) for b in blocks))


def count_cyclic_partitions(n: int, k: int) -> int:
    if n < 2 or not 1 <= k <= n:
        raise ValueError(f"need n >= 2 and 1 <= k <= n, got n={n}, k={k}")
    return sum(1 for _ in _rgs_walk(n, k))


def cyclic_partition_counts(n: int) -> list[int]:
    """Counts for every block count at once: entry k is the number of valid
    partitions of the n-cycle into k blocks (one walk, no per-k reruns)."""
    counts = [0] * (n + 1)
    for assignment in _rgs_walk(n, None):
        counts[max(assignment) + 1] += 1
    return counts


def a_kn_closed_form(k: int, n: int) -> int:
    """(-1)^k sum_{j=2}^{k} (-1)^j / (j!(k-j)!) * ((j-1)^n + (-1)^n (j-1)),
    evaluated as exact integers by multiplying through by k!."""
    if n < 2 or not 2 <= k <= n:
        raise ValueError(f"need n >= 2 and 2 <= k <= n, got n={n}, k={k}")
    total = 0
    sign_n = (-1) ** n
    for j in range(2, k + 1):
        term = math.comb(k, j) * ((j - 1) ** n + sign_n * (j - 1))
        total += term if j % 2 == 0 else -term
    total *= (-1) ** k
    quo, rem = divmod(total, math.factorial(k))
    if rem:
        raise NonIntegralResult(f"A({k},{n}): {total} not divisible by {k}!")
    return quo


@dataclass(frozen=True)
class FallingFactorialExpansion:
    """Coefficients B_0..B_n of a polynomial in the basis (q)_k = q(q-1)...(q-k+1)."""

    coefficients: tuple[Fraction, ...]

    def evaluate(self, q: int) -> Fraction:
        total = Fraction(0)
        falling = 1
        for k, b in enumerate(self.coefficients):
            if k > 0:
                falling *= q - (k - 1)
            total += b * falling
        return total


def falling_factorial_expand(values: Sequence) -> FallingFactorialExpansion:
    """Expansion of the degree <= n polynomial with the given values at
    q = 0..n: B_k = (-1)^k sum_j (-1)^j / (j!(k-j)!) P(j)."""
    vals = [Fraction(v) for v in values]
    n = len(vals) - 1
    coeffs = []
    for k in range(n + 1):
        total = Fraction(0)
        for j in range(k + 1):
            term = vals[j] / (math.factorial(j) * math.factorial(k - j))
            total += term if j % 2 == 0 else -term
        coeffs.append(total if k % 2 == 0 else -total)
    return FallingFactorialExpansion(tuple(coeffs))


def partition_identity_rhs(q: int, n: int, counts: Sequence[int] | None = None) -> int:
    """q(q+1) * sum_k A_{k,n} * (q-1)(q-2)...(q-k+2), with brute-force counts
    unless a precomputed row is supplied."""
    if counts is None:
        counts = cyclic_partition_counts(n)
    total = 0
    for k in range(2, n + 1):
        product = 1
        for j in range(1, k - 1):
            product *= q - j
        total += counts[k] * product
    return q * (q + 1) * total


@dataclass(frozen=True)
class PartitionIdentityReport:
    ok: bool
    configurations: int
    identity_rhs: int
    per_block_ok: bool


def verify_partition_identity(
    spec: FieldSpec, n: int, budget: int = DEFAULT_BUDGET
) -> PartitionIdentityReport:
    """Check c_n = q(q+1) sum_k A_{k,n} prod (q-j) at q = |F_q|, and cross-check
    by classifying every configuration by its point-equality pattern: the
    configurations whose pattern has k blocks must number A_{k,n} times the
    number of ordered choices of k distinct points of P^1."""
    q = spec.q
    counts = cyclic_partition_counts(n)
    rhs = partition_identity_rhs(q, n, counts)
    lhs = count_configurations(q, n)

    per_k = [0] * (n + 1)
    for tup in configuration_index_tuples(spec, n, "all", budget):
        seen: dict[int, int] = {}
        for v in tup:
            if v not in seen:
                seen[v] = len(seen)
        per_k[len(seen)] += 1
    per_block_ok = True
    for k in range(1, n + 1):
        ordered_choices = math.perm(q + 1, k)
        if per_k[k] != counts[k] * ordered_choices:
            per_block_ok = False
    return PartitionIdentityReport(
        ok=(lhs == rhs) and per_block_ok,
        configurations=lhs,
        identity_rhs=rhs,
        per_block_ok=per_block_ok,
    )
