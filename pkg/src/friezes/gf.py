"""Exact arithmetic in small finite fields GF(p^k), the projective line over
them, and 2x2 matrices.

Elements are identified by integer codes 0..q-1: the coefficient vector of
the element (constant term first) read as a base-p integer.  Code 0 is zero
and code 1 is one, so the code order is a stable element enumeration that
doubles as the serialization format.  Fields with at most TABLE_LIMIT
elements precompute full operation tables at construction; larger fields
reduce polynomials on the fly.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from .errors import (
    DescriptorError,
    NonPrimeCharacteristic,
    ReducibleModulus,
    SingularMatrix,
)

TABLE_LIMIT = 256


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _poly_rem(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial m, coefficients over F_p.

    Both polynomials are coefficient lists with the constant term first.
    """
    a = list(a)
    dm = len(m) - 1
    for d in range(len(a) - 1, dm - 1, -1):
        c = a[d]
        if c:
            a[d] = 0
            for i in range(dm):
                a[d - dm + i] = (a[d - dm + i] - c * m[i]) % p
    rem = a[:dm]
    while len(rem) < dm:
        rem.append(0)
    return rem


def _is_irreducible(m: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg(m)//2."""
    deg = len(m) - 1
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            divisor = list(low) + [1]
            if not any(_poly_rem(m, divisor, p)):
                return False
    return True


def _default_modulus(p: int, k: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree k over F_p.

    Candidates are compared by their coefficient tuples read from the x^(k-1)
    coefficient down to the constant one, so the choice is deterministic.
    For (p, k) = (2, 2) this picks x^2 + x + 1.
    """
    for high_to_low in itertools.product(range(p), repeat=k):
        mod = tuple(reversed(high_to_low)) + (1,)
        if _is_irreducible(mod, p):
            return mod
    raise AssertionError(f"no irreducible polynomial of degree {k} over F_{p}")


class FieldSpec:
    """The finite field GF(p^k) with a fixed element order and op tables.

    Immutable after construction; safe to share between threads.  All
    low-level arithmetic is exposed on integer codes (``add_code`` and
    friends); ``element`` wraps a code into a :class:`FieldElement`.
    """

    __slots__ = (
        "p",
        "k",
        "q",
        "modulus",
        "_digit_cache",
        "_add",
        "_sub",
        "_mul",
        "_neg",
        "_inv",
        "_pgl2",
        "_p1_perms",
    )

    def __init__(self, p: int, k: int = 1, modulus: Sequence[int] | None = None):
        if not _is_prime(p):
            raise NonPrimeCharacteristic(f"{p} is not prime")
        if k < 1:
            raise ValueError(f"extension degree must be >= 1, got {k}")
        self.p = p
        self.k = k
        self.q = p**k
        if k == 1:
            if modulus is not None:
                raise ValueError("prime fields take no modulus")
            self.modulus = None
        elif modulus is None:
            self.modulus = _default_modulus(p, k)
        else:
            mod = tuple(int(c) % p for c in modulus)
            if len(mod) != k + 1 or mod[-1] != 1:
                raise ValueError(
                    f"modulus must be monic of degree {k} (constant term first)"
                )
            if not _is_irreducible(mod, p):
                raise ReducibleModulus(
                    f"modulus {list(mod)} factors over F_{p}"
                )
            self.modulus = mod

        self._digit_cache = None
        self._add = self._sub = self._mul = self._neg = self._inv = None
        self._pgl2 = None
        self._p1_perms = None
        if self.q <= TABLE_LIMIT:
            self._build_tables()

    # -- identity ------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        return f"FieldSpec({self.descriptor!r})"

    @property
    def descriptor(self) -> str:
        """Canonical descriptor string: "p", "p^k" or "p^k:c0,c1,...,1"."""
        if self.k == 1:
            return str(self.p)
        base = f"{self.p}^{self.k}"
        if self.modulus == _default_modulus(self.p, self.k):
            return base
        return base + ":" + ",".join(str(c) for c in self.modulus)

    @property
    def char_is_2(self) -> bool:
        return self.p == 2

    # -- raw code arithmetic -------------------------------------------

    def _digits(self, code: int) -> tuple[int, ...]:
        if self._digit_cache is not None:
            return self._digit_cache[code]
        p = self.p
        out = []
        for _ in range(self.k):
            out.append(code % p)
            code //= p
        return tuple(out)

    def _fold(self, digits: Iterable[int]) -> int:
        code = 0
        for d in reversed(list(digits)):
            code = code * self.p + d
        return code

    def _add_raw(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        da, db = self._digits(a), self._digits(b)
        return self._fold((x + y) % self.p for x, y in zip(da, db))

    def _neg_raw(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        return self._fold((-x) % self.p for x in self._digits(a))

    def _mul_raw(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        return self._fold(_poly_rem(prod, self.modulus, self.p))

    def _pow_raw(self, a: int, e: int) -> int:
        result = 1
        base = a
        while e:
            if e & 1:
                result = self._mul_raw(result, base)
            base = self._mul_raw(base, base)
            e >>= 1
        return result

    def _build_tables(self):
        q, p = self.q, self.p
        if self.k > 1:
            self._digit_cache = [self._digits(c) for c in range(q)]
        self._add = [[self._add_raw(a, b) for b in range(q)] for a in range(q)]
        self._neg = [self._neg_raw(a) for a in range(q)]
        self._sub = [[self._add[a][self._neg[b]] for b in range(q)] for a in range(q)]
        self._mul = [[self._mul_raw(a, b) for b in range(q)] for a in range(q)]
        inv = [None] * q
        for a in range(1, q):
            inv[a] = self._pow_raw(a, q - 2)
        self._inv = inv

    # -- public code ops -----------------------------------------------

    def add_code(self, a: int, b: int) -> int:
        t = self._add
        return t[a][b] if t is not None else self._add_raw(a, b)

    def sub_code(self, a: int, b: int) -> int:
        t = self._sub
        return t[a][b] if t is not None else self._add_raw(a, self._neg_raw(b))

    def mul_code(self, a: int, b: int) -> int:
        t = self._mul
        return t[a][b] if t is not None else self._mul_raw(a, b)

    def neg_code(self, a: int) -> int:
        t = self._neg
        return t[a] if t is not None else self._neg_raw(a)

    def inv_code(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        t = self._inv
        return t[a] if t is not None else self._pow_raw(a, self.q - 2)

    def pow_code(self, a: int, e: int) -> int:
        if e < 0:
            a = self.inv_code(a)
            e = -e
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul_code(result, base)
            base = self.mul_code(base, base)
            e >>= 1
        return result

    # -- elements --------------------------------------------------------

    def element(self, value) -> "FieldElement":
        """Wrap a code (int) or a coefficient sequence into an element.

        For prime fields an int is reduced modulo p; for extensions it must
        already be a valid code in 0..q-1.
        """
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, int):
            if self.k == 1:
                return FieldElement(self, value % self.p)
            if not 0 <= value < self.q:
                raise ValueError(f"code {value} out of range for GF({self.q})")
            return FieldElement(self, value)
        digits = [int(c) % self.p for c in value]
        if len(digits) > self.k:
            raise ValueError("coefficient vector longer than the degree")
        digits += [0] * (self.k - len(digits))
        return FieldElement(self, self._fold(digits))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> list["FieldElement"]:
        """All q elements in code order: 0 first, then 1, then the rest."""
        return [FieldElement(self, c) for c in range(self.q)]

    def element_str(self, code: int) -> str:
        if self.k == 1:
            return str(code)
        digits = self._digits(code)
        terms = []
        for i in range(self.k - 1, -1, -1):
            d = digits[i]
            if d == 0:
                continue
            if i == 0:
                terms.append(str(d))
            elif i == 1:
                terms.append("a" if d == 1 else f"{d}a")
            else:
                terms.append(f"a^{i}" if d == 1 else f"{d}a^{i}")
        return "+".join(terms) if terms else "0"


class FieldElement:
    """An element of a FieldSpec; exact arithmetic through operator overloads."""

    __slots__ = ("spec", "code")

    def __init__(self, spec: FieldSpec, code: int):
        self.spec = spec
        self.code = code

    def _coerce(self, other):
        if isinstance(other, FieldElement) and other.spec == self.spec:
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.add_code(self.code, other.code))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.sub_code(self.code, other.code))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.mul_code(self.code, other.code))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(
            self.spec, self.spec.mul_code(self.code, self.spec.inv_code(other.code))
        )

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg_code(self.code))

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec.pow_code(self.code, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv_code(self.code))

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Coefficient vector over F_p, constant term first."""
        if self.spec.k == 1:
            return (self.code,)
        return self.spec._digits(self.code)

    def __bool__(self):
        return self.code != 0

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.code == other.code and self.spec == other.spec

    def __hash__(self):
        return hash((self.code, self.spec))

    def __str__(self):
        return self.spec.element_str(self.code)

    def __repr__(self):
        return f"GF({self.spec.q})({self})"


class ProjPoint:
    """A point of P^1(F_q), stored in normalized homogeneous coordinates.

    The normalization is (x : 1) when the point is affine and (1 : 0) for
    the point at infinity, so equality is plain coordinate comparison.
    Points are also indexed 0..q: index i < q is (element_i : 1), index q
    is (1 : 0).
    """

    __slots__ = ("spec", "x", "y")

    def __init__(self, x: FieldElement, y: FieldElement):
        if x.spec != y.spec:
            raise ValueError("coordinates from different fields")
        spec = x.spec
        if y.code != 0:
            xc = spec.mul_code(x.code, spec.inv_code(y.code))
            yc = 1
        elif x.code != 0:
            xc, yc = 1, 0
        else:
            raise ValueError("(0 : 0) is not a projective point")
        self.spec = spec
        self.x = xc
        self.y = yc

    @classmethod
    def _from_codes(cls, spec: FieldSpec, x: int, y: int) -> "ProjPoint":
        pt = object.__new__(cls)
        pt.spec = spec
        pt.x = x
        pt.y = y
        return pt

    @classmethod
    def from_index(cls, spec: FieldSpec, index: int) -> "ProjPoint":
        if not 0 <= index <= spec.q:
            raise ValueError(f"point index {index} out of range")
        if index == spec.q:
            return cls._from_codes(spec, 1, 0)
        return cls._from_codes(spec, index, 1)

    @property
    def index(self) -> int:
        return self.x if self.y == 1 else self.spec.q

    @property
    def is_infinity(self) -> bool:
        return self.y == 0

    def coords(self) -> tuple[FieldElement, FieldElement]:
        return FieldElement(self.spec, self.x), FieldElement(self.spec, self.y)

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return (self.x, self.y) == (other.x, other.y) and self.spec == other.spec

    def __hash__(self):
        return hash((self.x, self.y, self.spec))

    def __str__(self):
        return "inf" if self.y == 0 else self.spec.element_str(self.x)

    def __repr__(self):
        return f"ProjPoint({self})"


def p1_points(spec: FieldSpec) -> list[ProjPoint]:
    """The q + 1 points of P^1(F_q): (a : 1) in element order, then (1 : 0)."""
    pts = [ProjPoint._from_codes(spec, c, 1) for c in range(spec.q)]
    pts.append(ProjPoint._from_codes(spec, 1, 0))
    return pts


class Mat2:
    """A 2x2 matrix over a FieldSpec, row-major entries a, b, c, d."""

    __slots__ = ("spec", "a", "b", "c", "d")

    def __init__(self, a: FieldElement, b: FieldElement, c: FieldElement, d: FieldElement):
        spec = a.spec
        if not (b.spec == spec and c.spec == spec and d.spec == spec):
            raise ValueError("entries from different fields")
        self.spec = spec
        self.a, self.b, self.c, self.d = a.code, b.code, c.code, d.code

    @classmethod
    def from_codes(cls, spec: FieldSpec, codes: Sequence[int]) -> "Mat2":
        m = object.__new__(cls)
        m.spec = spec
        m.a, m.b, m.c, m.d = codes
        return m

    @classmethod
    def identity(cls, spec: FieldSpec) -> "Mat2":
        return cls.from_codes(spec, (1, 0, 0, 1))

    @classmethod
    def neg_identity(cls, spec: FieldSpec) -> "Mat2":
        n1 = spec.neg_code(1)
        return cls.from_codes(spec, (n1, 0, 0, n1))

    @property
    def codes(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    @property
    def entries(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.spec, c) for c in self.codes)

    def det(self) -> FieldElement:
        s = self.spec
        return FieldElement(
            s, s.sub_code(s.mul_code(self.a, self.d), s.mul_code(self.b, self.c))
        )

    def __matmul__(self, other: "Mat2") -> "Mat2":
        if not isinstance(other, Mat2):
            return NotImplemented
        if other.spec != self.spec:
            raise ValueError("matrices over different fields")
        s = self.spec
        mul, add = s.mul_code, s.add_code
        return Mat2.from_codes(
            s,
            (
                add(mul(self.a, other.a), mul(self.b, other.c)),
                add(mul(self.a, other.b), mul(self.b, other.d)),
                add(mul(self.c, other.a), mul(self.d, other.c)),
                add(mul(self.c, other.b), mul(self.d, other.d)),
            ),
        )

    def inverse(self) -> "Mat2":
        s = self.spec
        det = self.det().code
        if det == 0:
            raise SingularMatrix(f"matrix {self.codes} has determinant 0")
        di = s.inv_code(det)
        mul, neg = s.mul_code, s.neg_code
        return Mat2.from_codes(
            s,
            (
                mul(di, self.d),
                mul(di, neg(self.b)),
                mul(di, neg(self.c)),
                mul(di, self.a),
            ),
        )

    def act(self, pt: ProjPoint) -> ProjPoint:
        """Fractional-linear action on P^1: (x : y) -> (ax + by : cx + dy)."""
        if pt.spec != self.spec:
            raise ValueError("point over a different field")
        s = self.spec
        mul, add = s.mul_code, s.add_code
        nx = add(mul(self.a, pt.x), mul(self.b, pt.y))
        ny = add(mul(self.c, pt.x), mul(self.d, pt.y))
        if ny != 0:
            return ProjPoint._from_codes(s, mul(nx, s.inv_code(ny)), 1)
        if nx == 0:
            raise SingularMatrix(f"matrix {self.codes} kills a projective point")
        return ProjPoint._from_codes(s, 1, 0)

    def __eq__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return self.codes == other.codes and self.spec == other.spec

    def __hash__(self):
        return hash((self.codes, self.spec))

    def __repr__(self):
        e = [self.spec.element_str(c) for c in self.codes]
        return f"Mat2[[{e[0]}, {e[1]}], [{e[2]}, {e[3]}]]"


def mat2_mul(a: Mat2, b: Mat2) -> Mat2:
    return a @ b


def mat2_det(a: Mat2) -> FieldElement:
    return a.det()


def pgl2_elements(spec: FieldSpec) -> tuple[Mat2, ...]:
    """One invertible matrix per scalar class, q^3 - q in total.

    The representative of each class is scaled so its first nonzero entry
    (scanning a, b, c, d) is 1.  Generated in a deterministic order.
    """
    if spec._pgl2 is not None:
        return spec._pgl2
    q = spec.q
    mul = spec.mul_code
    reps = []
    # a = 1: det = d - bc != 0
    for b in range(q):
        for c in range(q):
            bc = mul(b, c)
            for d in range(q):
                if d != bc:
                    reps.append(Mat2.from_codes(spec, (1, b, c, d)))
    # a = 0, b = 1: det = -c != 0
    for c in range(1, q):
        for d in range(q):
            reps.append(Mat2.from_codes(spec, (0, 1, c, d)))
    assert len(reps) == q**3 - q
    spec._pgl2 = tuple(reps)
    return spec._pgl2


def pgl2_point_permutations(spec: FieldSpec) -> tuple[tuple[int, ...], ...]:
    """For each PGL2 representative, its action on P^1 as a permutation of
    point indices (aligned with the order of pgl2_elements)."""
    if spec._p1_perms is not None:
        return spec._p1_perms
    q = spec.q
    mul, add, inv = spec.mul_code, spec.add_code, spec.inv_code
    perms = []
    for m in pgl2_elements(spec):
        a, b, c, d = m.codes
        perm = []
        for x in range(q):
            nx = add(mul(a, x), b)
            ny = add(mul(c, x), d)
            perm.append(mul(nx, inv(ny)) if ny else q)
        # the point at infinity (1 : 0) maps to (a : c)
        perm.append(mul(a, inv(c)) if c else q)
        perms.append(tuple(perm))
    spec._p1_perms = tuple(perms)
    return spec._p1_perms


def parse_field_descriptor(text: str) -> FieldSpec:
    """Build a FieldSpec from a descriptor like "5", "2^2" or "2^2:1,1,1".

    The optional modulus suffix lists coefficients constant term first.
    """
    text = text.strip()
    body, _, mod_part = text.partition(":")
    modulus = None
    if mod_part:
        try:
            modulus = [int(c) for c in mod_part.split(",")]
        except ValueError as exc:
            raise DescriptorError(f"bad modulus in descriptor {text!r}") from exc
    base, caret, deg = body.partition("^")
    try:
        p = int(base)
        k = int(deg) if caret else 1
    except ValueError as exc:
        raise DescriptorError(f"bad field descriptor {text!r}") from exc
    if k < 1:
        raise DescriptorError(f"bad extension degree in {text!r}")
    if not _is_prime(p):
        raise DescriptorError(
            f"{p} is not prime; write prime-power fields as p^k (e.g. 2^2)"
        )
    if modulus is not None and k == 1:
        raise DescriptorError("prime fields take no modulus suffix")
    return FieldSpec(p, k, modulus)
