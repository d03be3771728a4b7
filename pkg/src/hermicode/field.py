"""Exact arithmetic in GF(q^2) = GF(p^(2k)) with its subfield GF(q).

Elements are encoded as integers: the coefficient vector (c_0, ..., c_{2k-1})
of the polynomial-basis representation c_0 + c_1 t + ... over GF(p) is read
as the base-p number sum(c_i * p**i).  In GF(4) the class of ``t`` is ``2``.
This integer code is the element "string" used by every export.

The modulus is the lexicographically smallest monic irreducible polynomial of
degree 2k over GF(p), comparing coefficients from the highest degree down.
This is *not* the Conway polynomial, so comparing element codes with another
computer algebra system requires a change of basis.

All arithmetic tables are built once per ``(p, k)`` and cached; a
``FieldContext`` is immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import product

import numpy as np

#: Largest supported field order p**(2k).  Dense 2D add/mul tables are kept.
MAX_ORDER = 1 << 10


class FieldError(ValueError):
    """Invalid field parameters or an illegal field operation."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, k)`` with ``q == p**k``; raise ``FieldError`` otherwise."""
    if q < 2:
        raise FieldError(f"q={q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, r = 0, q
    while r % p == 0:
        r //= p
        k += 1
    if r != 1:
        raise FieldError(f"q={q} is not a prime power")
    return p, k


# -- polynomials over GF(p) as little-endian coefficient lists ----------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod(a: list[int], b: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _trim(a)
    return a


def _is_irreducible(f: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(f)/2."""
    n = len(f) - 1
    for d in range(1, n // 2 + 1):
        for low in product(range(p), repeat=d):
            g = list(low) + [1]
            if not _polymod(f, g, p):
                return False
    return True


def _smallest_irreducible(p: int, n: int) -> tuple[int, ...]:
    # itertools.product varies the last slot fastest, so listing the
    # coefficients high-to-low gives lexicographic order from the top down.
    for high_to_low in product(range(p), repeat=n):
        f = list(reversed(high_to_low)) + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise FieldError(f"no irreducible polynomial of degree {n} over GF({p})")  # pragma: no cover


@dataclass(frozen=True, eq=False)
class FieldContext:
    """The field GF(p^(2k)) together with its subfield GF(q), q = p^k.

    Use :func:`make_field` rather than instantiating directly.
    """

    p: int
    k: int
    modulus: tuple[int, ...]
    add_table: list[list[int]] = field(repr=False)
    mul_table: list[list[int]] = field(repr=False)
    neg_table: list[int] = field(repr=False)
    inv_table: list[int] = field(repr=False)
    exp_table: list[int] = field(repr=False)
    log_table: list[int] = field(repr=False)

    @property
    def q(self) -> int:
        return self.p ** self.k

    @property
    def order(self) -> int:
        return self.p ** (2 * self.k)

    @property
    def degree(self) -> int:
        return 2 * self.k

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldContext):
            return NotImplemented
        return (self.p, self.k) == (other.p, other.k)

    def __hash__(self) -> int:
        return hash((self.p, self.k))

    def __repr__(self) -> str:
        return f"FieldContext(GF({self.order}), q={self.q}, modulus={self.modulus_str()})"

    def modulus_str(self) -> str:
        terms = []
        for i in range(len(self.modulus) - 1, -1, -1):
            c = self.modulus[i]
            if c == 0:
                continue
            mono = "1" if i == 0 else ("t" if i == 1 else f"t^{i}")
            terms.append(mono if c == 1 and i > 0 else (f"{c}*{mono}" if i > 0 else str(c)))
        return " + ".join(terms)

    # -- integer-code arithmetic (hot paths use the tables directly) --------

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(%d)" % self.order)
        return self.inv_table[a]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of 0")
            return 1 if e == 0 else 0
        n = self.order - 1
        return self.exp_table[(self.log_table[a] * e) % n]

    def frobenius(self, a: int) -> int:
        """a -> a^q, the involution of GF(q^2) fixing GF(q)."""
        return self.frob_table[a]

    def norm(self, a: int) -> int:
        return self.norm_table[a]

    def trace(self, a: int) -> int:
        return self.trace_table[a]

    def in_subfield(self, a: int) -> bool:
        return self.frob_table[a] == a

    @cached_property
    def frob_table(self) -> list[int]:
        return [self.pow(a, self.q) for a in range(self.order)]

    @cached_property
    def norm_table(self) -> list[int]:
        return [self.pow(a, self.q + 1) for a in range(self.order)]

    @cached_property
    def trace_table(self) -> list[int]:
        return [self.add_table[self.frob_table[a]][a] for a in range(self.order)]

    @cached_property
    def subfield(self) -> tuple[int, ...]:
        """Codes of the q elements of GF(q), ascending."""
        return tuple(a for a in range(self.order) if self.frob_table[a] == a)

    @cached_property
    def np_add(self) -> np.ndarray:
        return np.array(self.add_table, dtype=np.int32)

    @cached_property
    def np_mul(self) -> np.ndarray:
        return np.array(self.mul_table, dtype=np.int32)

    @cached_property
    def np_sub(self) -> np.ndarray:
        neg = np.array(self.neg_table, dtype=np.int64)
        return self.np_add[:, neg]

    @cached_property
    def np_inv(self) -> np.ndarray:
        return np.array(self.inv_table, dtype=np.int32)

    # -- element wrappers ----------------------------------------------------

    def __call__(self, value: int | str) -> FieldElement:
        return self.element(value)

    def element(self, value: int | str) -> FieldElement:
        code = int(value)
        if not 0 <= code < self.order:
            raise FieldError(f"{value!r} is not an element code of GF({self.order})")
        return FieldElement(self, code)

    def from_coeffs(self, coeffs: list[int] | tuple[int, ...]) -> FieldElement:
        if len(coeffs) > self.degree or any(not 0 <= c < self.p for c in coeffs):
            raise FieldError(f"bad coefficient vector {coeffs!r}")
        return FieldElement(self, sum(c * self.p ** i for i, c in enumerate(coeffs)))

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, a) for a in range(self.order)]

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def generator(self) -> FieldElement:
        """The primitive element used for the log tables."""
        return FieldElement(self, self.exp_table[1])

    def coeffs(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.degree):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)


@dataclass(frozen=True)
class FieldElement:
    """An element of a :class:`FieldContext`, wrapping its integer code."""

    ctx: FieldContext
    value: int

    def _check(self, other: object) -> int:
        if isinstance(other, FieldElement):
            if other.ctx != self.ctx:
                raise FieldError("operands belong to different fields")
            return other.value
        if isinstance(other, int) and other in (0, 1):
            return other
        raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")

    def __add__(self, other: object) -> FieldElement:
        return FieldElement(self.ctx, self.ctx.add(self.value, self._check(other)))

    __radd__ = __add__

    def __sub__(self, other: object) -> FieldElement:
        return FieldElement(self.ctx, self.ctx.sub(self.value, self._check(other)))

    def __rsub__(self, other: object) -> FieldElement:
        return FieldElement(self.ctx, self.ctx.sub(self._check(other), self.value))

    def __mul__(self, other: object) -> FieldElement:
        return FieldElement(self.ctx, self.ctx.mul(self.value, self._check(other)))

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> FieldElement:
        return FieldElement(self.ctx, self.ctx.mul(self.value, self.ctx.inv(self._check(other))))

    def __neg__(self) -> FieldElement:
        return FieldElement(self.ctx, self.ctx.neg(self.value))

    def __pow__(self, e: int) -> FieldElement:
        return FieldElement(self.ctx, self.ctx.pow(self.value, e))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return f"GF({self.ctx.order})({self.value})"

    def inv(self) -> FieldElement:
        return FieldElement(self.ctx, self.ctx.inv(self.value))

    def norm(self) -> FieldElement:
        return FieldElement(self.ctx, self.ctx.norm(self.value))

    def trace(self) -> FieldElement:
        return FieldElement(self.ctx, self.ctx.trace(self.value))

    def frobenius(self) -> FieldElement:
        return FieldElement(self.ctx, self.ctx.frobenius(self.value))

    def coeffs(self) -> tuple[int, ...]:
        return self.ctx.coeffs(self.value)


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return a.inv()


def power(a: FieldElement, e: int) -> FieldElement:
    return a ** e


def norm(a: FieldElement) -> FieldElement:
    """a^(q+1), which lies in GF(q)."""
    return a.norm()


def trace(a: FieldElement) -> FieldElement:
    """a^q + a, which lies in GF(q)."""
    return a.trace()


def _mul_raw(a: int, b: int, p: int, modulus: tuple[int, ...]) -> int:
    n = len(modulus) - 1
    da = [(a // p ** i) % p for i in range(n)]
    db = [(b // p ** i) % p for i in range(n)]
    prod = [0] * (2 * n - 1)
    for i, x in enumerate(da):
        if x:
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % p
    rem = _polymod(prod, list(modulus), p)
    return sum(c * p ** i for i, c in enumerate(rem))


@lru_cache(maxsize=None)
def make_field(p: int, k: int = 1) -> FieldContext:
    """Build GF(p^(2k)) with the canonical modulus; cached per ``(p, k)``.

    Raises ``FieldError`` for a non-prime ``p``, ``k < 1`` or an order beyond
    :data:`MAX_ORDER`.
    """
    if not is_prime(p):
        raise FieldError(f"p={p} is not prime")
    if k < 1:
        raise FieldError(f"k={k} must be positive")
    n = 2 * k
    order = p ** n
    if order > MAX_ORDER:
        raise FieldError(f"GF({p}^{n}) has {order} elements, above the limit {MAX_ORDER}")
    modulus = _smallest_irreducible(p, n)

    # Log tables from a primitive element found by search.
    exp_table: list[int] = []
    for g in range(2, order):
        exp_table = [1]
        x = g
        while x != 1:
            exp_table.append(x)
            x = _mul_raw(x, g, p, modulus)
        if len(exp_table) == order - 1:
            break
    log_table = [0] * order
    for i, x in enumerate(exp_table):
        log_table[x] = i

    digits = [[(a // p ** i) % p for i in range(n)] for a in range(order)]
    weights = [p ** i for i in range(n)]
    add_table = [
        [sum(((da[i] + db[i]) % p) * weights[i] for i in range(n)) for db in digits]
        for da in digits
    ]
    neg_table = [sum(((-d) % p) * weights[i] for i, d in enumerate(da)) for da in digits]
    cyc = order - 1
    mul_table = [[0] * order for _ in range(order)]
    for a in range(1, order):
        la = log_table[a]
        row = mul_table[a]
        for b in range(1, order):
            row[b] = exp_table[(la + log_table[b]) % cyc]
    inv_table = [0] + [exp_table[(-log_table[a]) % cyc] for a in range(1, order)]
    return FieldContext(
        p=p,
        k=k,
        modulus=modulus,
        add_table=add_table,
        mul_table=mul_table,
        neg_table=neg_table,
        inv_table=inv_table,
        exp_table=exp_table,
        log_table=log_table,
    )


def field_for_q(q: int) -> FieldContext:
    """GF(q^2) for a prime power ``q``."""
    p, k = prime_power(q)
    return make_field(p, k)
