"""Bivariate polynomials over GF(q^2) and Groebner bases for degrevlex, y > x.

Only one term order is supported: ``m1 < m2`` iff ``deg(m1) < deg(m2)``, or
the degrees agree and ``m1`` has the larger x-exponent.  Two algorithms are
provided:

* :func:`buchberger` for ideals given by generators (e.g. ``<H, F>``);
* :func:`vanishing_ideal`, the Buchberger-Moeller algorithm, for the ideal of
  a finite point set, which also yields the footprint directly.

Reduced Groebner bases are unique for a fixed order, so both return canonical
output: monic elements sorted by increasing leading monomial.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional, Sequence

from .field import FieldContext, FieldElement
from .semigroup import Monomial, w_weight

Terms = dict[Monomial, int]


def order_key(mono: tuple[int, int]) -> tuple[int, int]:
    """Sort key realising degrevlex with y > x."""
    return (mono[0] + mono[1], -mono[0])


def cmp_order(m1: Monomial, m2: Monomial) -> int:
    """-1, 0 or 1 as m1 is smaller than, equal to or larger than m2."""
    k1, k2 = order_key(m1), order_key(m2)
    return (k1 > k2) - (k1 < k2)


def _coerce(ctx: FieldContext, c: int | FieldElement) -> int:
    if isinstance(c, FieldElement):
        if c.ctx != ctx:
            raise ValueError("coefficient from a different field")
        return c.value
    return int(c)


class Polynomial:
    """A polynomial in GF(q^2)[x, y]; coefficients are element codes."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: FieldContext, terms: Optional[dict] = None):
        self.ctx = ctx
        self.terms: Terms = {}
        for mono, c in (terms or {}).items():
            c = _coerce(ctx, c)
            if c:
                self.terms[Monomial(*mono)] = c

    @classmethod
    def _raw(cls, ctx: FieldContext, terms: Terms) -> Polynomial:
        poly = cls.__new__(cls)
        poly.ctx = ctx
        poly.terms = terms
        return poly

    @classmethod
    def monomial(cls, ctx: FieldContext, r: int, s: int, coeff: int = 1) -> Polynomial:
        return cls(ctx, {Monomial(r, s): coeff})

    @classmethod
    def constant(cls, ctx: FieldContext, c: int) -> Polynomial:
        return cls(ctx, {Monomial(0, 0): c})

    @classmethod
    def hermitian(cls, ctx: FieldContext) -> Polynomial:
        """H = x^(q+1) - y^q - y."""
        q = ctx.q
        m1 = ctx.neg(1)
        return cls(ctx, {Monomial(q + 1, 0): 1, Monomial(0, q): m1, Monomial(0, 1): m1})

    # -- structure ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return max(self.terms, key=order_key)

    lm = leading_monomial

    def leading_coefficient(self) -> int:
        return self.terms[self.leading_monomial()]

    def x_degree(self) -> int:
        return max((mono.r for mono in self.terms), default=-1)

    def degree(self) -> int:
        return max((mono.degree for mono in self.terms), default=-1)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in descending order."""
        return sorted(self.terms.items(), key=lambda t: order_key(t[0]), reverse=True)

    def monic(self) -> Polynomial:
        if not self.terms:
            return self
        inv = self.ctx.inv(self.leading_coefficient())
        row = self.ctx.mul_table[inv]
        return Polynomial._raw(self.ctx, {mono: row[c] for mono, c in self.terms.items()})

    # -- arithmetic -------------------------------------------------------------

    def _check(self, other: Polynomial) -> None:
        if self.ctx != other.ctx:
            raise ValueError("polynomials over different fields")

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        add = self.ctx.add_table
        out = dict(self.terms)
        for mono, c in other.terms.items():
            v = add[out.get(mono, 0)][c]
            if v:
                out[mono] = v
            else:
                out.pop(mono, None)
        return Polynomial._raw(self.ctx, out)

    def __neg__(self) -> Polynomial:
        neg = self.ctx.neg_table
        return Polynomial._raw(self.ctx, {mono: neg[c] for mono, c in self.terms.items()})

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def scale(self, c: int | FieldElement) -> Polynomial:
        c = _coerce(self.ctx, c)
        if not c:
            return Polynomial._raw(self.ctx, {})
        row = self.ctx.mul_table[c]
        return Polynomial._raw(self.ctx, {mono: row[v] for mono, v in self.terms.items()})

    def shift(self, mono: Monomial) -> Polynomial:
        """Multiply by a monomial."""
        r, s = mono
        return Polynomial._raw(self.ctx, {Monomial(a + r, b + s): c for (a, b), c in self.terms.items()})

    def __mul__(self, other: Polynomial | int | FieldElement) -> Polynomial:
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        add, mul = self.ctx.add_table, self.ctx.mul_table
        out: Terms = {}
        for (a, b), c in self.terms.items():
            row = mul[c]
            for (r, s), d in other.terms.items():
                mono = Monomial(a + r, b + s)
                out[mono] = add[out.get(mono, 0)][row[d]]
        return Polynomial._raw(self.ctx, {mono: c for mono, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        out = Polynomial.constant(self.ctx, 1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def evaluate(self, x: int, y: int) -> int:
        ctx = self.ctx
        add, mul = ctx.add_table, ctx.mul_table
        acc = 0
        for (r, s), c in self.terms.items():
            acc = add[acc][mul[c][mul[ctx.pow(x, r)][ctx.pow(y, s)]]]
        return acc

    # -- text format -------------------------------------------------------------

    def to_text(self) -> str:
        """``"c*x^r*y^s + ..."`` in descending order, coefficients as codes."""
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            parts.append(str(c) if mono == (0, 0) else f"{c}*{mono}")
        return " + ".join(parts)

    __str__ = to_text

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r})"

    @classmethod
    def parse(cls, ctx: FieldContext, text: str) -> Polynomial:
        terms: Terms = {}
        add = ctx.add_table
        text = text.strip()
        if text == "0":
            return cls(ctx)
        for chunk in text.split("+"):
            head, _, rest = chunk.strip().partition("*")
            c = int(head)
            if not 0 <= c < ctx.order:
                raise ValueError(f"coefficient {c} out of range in {text!r}")
            mono = Monomial.parse(rest) if rest else Monomial(0, 0)
            terms[mono] = add[terms.get(mono, 0)][c]
        return cls(ctx, terms)


# -- reduction -------------------------------------------------------------------

def _reduce_terms(ctx: FieldContext, terms: Terms, basis: Sequence[Polynomial]) -> Terms:
    """Remainder of ``terms`` on division by monic ``basis`` elements."""
    add, mul, neg = ctx.add_table, ctx.mul_table, ctx.neg_table
    leads = [(g.leading_monomial(), g) for g in basis]
    f = dict(terms)
    rem: Terms = {}
    while f:
        lm = max(f, key=order_key)
        c = f.pop(lm)
        for (gr, gs), g in leads:
            if gr <= lm[0] and gs <= lm[1]:
                dr, ds = lm[0] - gr, lm[1] - gs
                row = mul[neg[c]]
                for (r, s), gc in g.terms.items():
                    if r == gr and s == gs:
                        continue
                    mono = Monomial(r + dr, s + ds)
                    v = add[f.get(mono, 0)][row[gc]]
                    if v:
                        f[mono] = v
                    else:
                        f.pop(mono, None)
                break
        else:
            rem[lm] = c
    return rem


def _spoly(ctx: FieldContext, f: Polynomial, g: Polynomial) -> Polynomial:
    lf, lg = f.leading_monomial(), g.leading_monomial()
    lcm = lf.lcm(lg)
    return f.shift(Monomial(lcm.r - lf.r, lcm.s - lf.s)) - g.shift(Monomial(lcm.r - lg.r, lcm.s - lg.s))


def _minimal_reduced(ctx: FieldContext, polys: list[Polynomial]) -> list[Polynomial]:
    polys = sorted((p.monic() for p in polys if p), key=lambda p: order_key(p.leading_monomial()))
    minimal: list[Polynomial] = []
    for p in polys:
        lm = p.leading_monomial()
        if not any(g.leading_monomial().divides(lm) for g in minimal):
            minimal.append(p)
    out = []
    for i, p in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        lm = p.leading_monomial()
        tail = {mono: c for mono, c in p.terms.items() if mono != lm}
        tail = _reduce_terms(ctx, tail, others)
        tail[lm] = 1
        out.append(Polynomial._raw(ctx, tail))
    return out


class GroebnerBasis:
    """A reduced Groebner basis; elements monic and sorted by leading monomial."""

    __slots__ = ("ctx", "polys", "_leads")

    def __init__(self, ctx: FieldContext, polys: Sequence[Polynomial]):
        self.ctx = ctx
        self.polys = tuple(sorted(polys, key=lambda p: order_key(p.leading_monomial())))
        self._leads = tuple(p.leading_monomial() for p in self.polys)

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.polys)

    def __len__(self) -> int:
        return len(self.polys)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.ctx == other.ctx and self.polys == other.polys

    def __repr__(self) -> str:
        return "GroebnerBasis([" + ", ".join(p.to_text() for p in self.polys) + "])"

    def leading_monomials(self) -> tuple[Monomial, ...]:
        return self._leads

    def contains_monomial(self, mono: Monomial) -> bool:
        return any(lm.divides(mono) for lm in self._leads)

    def is_unit(self) -> bool:
        return self._leads == (Monomial(0, 0),)

    def is_zero_dimensional(self) -> bool:
        return any(lm.s == 0 for lm in self._leads) and any(lm.r == 0 for lm in self._leads)

    def element_with_leading(self, mono: Monomial) -> Optional[Polynomial]:
        for lm, p in zip(self._leads, self.polys):
            if lm == mono:
                return p
        return None

    def normal_form(self, f: Polynomial) -> Polynomial:
        return Polynomial._raw(self.ctx, _reduce_terms(self.ctx, f.terms, self.polys))

    def footprint(self) -> Footprint:
        if not self.is_zero_dimensional():
            raise ValueError("ideal is not zero-dimensional; its footprint is infinite")
        a = min(lm.r for lm in self._leads if lm.s == 0)
        b = min(lm.s for lm in self._leads if lm.r == 0)
        monos = [
            Monomial(r, s)
            for r in range(a)
            for s in range(b)
            if not self.contains_monomial(Monomial(r, s))
        ]
        return Footprint(monos)

    def to_text(self) -> list[str]:
        return [p.to_text() for p in self.polys]


def monomial_in_initial(gb: GroebnerBasis, mono: Monomial) -> bool:
    return gb.contains_monomial(mono)


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    return gb.normal_form(f)


class Footprint:
    """The finite set of monomials outside an initial ideal, ascending order."""

    __slots__ = ("monomials", "_set")

    def __init__(self, monomials: Iterable[Monomial]):
        self.monomials = tuple(sorted(set(Monomial(*m) for m in monomials), key=order_key))
        self._set = frozenset(self.monomials)

    def __len__(self) -> int:
        return len(self.monomials)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.monomials)

    def __contains__(self, mono: object) -> bool:
        return mono in self._set

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Footprint):
            return self._set == other._set
        if isinstance(other, (set, frozenset)):
            return self._set == other
        return NotImplemented

    def __repr__(self) -> str:
        return "Footprint({" + ", ".join(str(m) for m in self.monomials) + "})"

    def is_division_closed(self) -> bool:
        return all(
            Monomial(r, s) in self._set
            for mono in self.monomials
            for r in range(mono.r + 1)
            for s in range(mono.s + 1)
        )

    def weights(self, q: int) -> list[int]:
        return sorted(w_weight(q, mono) for mono in self.monomials)

    def outer_corners(self) -> tuple[Monomial, ...]:
        """Minimal generators of the complementary monomial ideal."""
        if not self.monomials:
            return (Monomial(0, 0),)
        border = {Monomial(m.r + 1, m.s) for m in self.monomials}
        border |= {Monomial(m.r, m.s + 1) for m in self.monomials}
        return minimal_generators(b for b in border if b not in self._set)

    def as_text(self) -> list[str]:
        return [str(m) for m in self.monomials]


def staircase(generators: Iterable[Monomial]) -> Footprint:
    """Footprint of the monomial ideal with the given (zero-dimensional) generators."""
    gens = [Monomial(*g) for g in generators]
    a = min(g.r for g in gens if g.s == 0)
    b = min(g.s for g in gens if g.r == 0)
    return Footprint(
        Monomial(r, s)
        for r in range(a)
        for s in range(b)
        if not any(g.r <= r and g.s <= s for g in gens)
    )


def minimal_generators(generators: Iterable[Monomial]) -> tuple[Monomial, ...]:
    gens = sorted(set(Monomial(*g) for g in generators), key=order_key)
    out: list[Monomial] = []
    for g in gens:
        if not any(h.divides(g) for h in out):
            out.append(g)
    return tuple(sorted(out, key=order_key))


# -- Buchberger ------------------------------------------------------------------

def buchberger(gens: Sequence[Polynomial]) -> GroebnerBasis:
    """Reduced Groebner basis of ``<gens>`` (normal selection strategy).

    Pairs are processed by increasing lcm of leading monomials, ties broken by
    insertion order; pairs with coprime leading monomials are skipped.
    """
    gens = [g for g in gens if g]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    ctx = gens[0].ctx
    basis: list[Polynomial] = []
    for g in gens:
        h = Polynomial._raw(ctx, _reduce_terms(ctx, g.terms, basis)) if basis else g
        if h:
            basis.append(h.monic())
    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]
    while pairs:
        best = min(
            range(len(pairs)),
            key=lambda t: (order_key(basis[pairs[t][0]].leading_monomial().lcm(basis[pairs[t][1]].leading_monomial())), pairs[t][1], pairs[t][0]),
        )
        i, j = pairs.pop(best)
        li, lj = basis[i].leading_monomial(), basis[j].leading_monomial()
        if min(li.r, lj.r) == 0 and min(li.s, lj.s) == 0:
            continue
        s = _spoly(ctx, basis[i], basis[j])
        h = _reduce_terms(ctx, s.terms, basis)
        if h:
            new = Polynomial._raw(ctx, h).monic()
            if new.leading_monomial() == Monomial(0, 0):
                return GroebnerBasis(ctx, [Polynomial.constant(ctx, 1)])
            basis.append(new)
            k = len(basis) - 1
            pairs.extend((a, k) for a in range(k))
    return GroebnerBasis(ctx, _minimal_reduced(ctx, basis))


# -- Buchberger-Moeller ----------------------------------------------------------

def vanishing_ideal(
    ctx: FieldContext, points: Iterable[tuple[int, int]]
) -> tuple[GroebnerBasis, Footprint]:
    """Reduced Groebner basis and footprint of the ideal of a finite point set.

    Candidate monomials are visited in increasing order; the evaluation vector
    of each is reduced against those of the footprint found so far.  A
    vanishing combination gives a basis element whose tail lies on the
    footprint, so the result is reduced by construction.
    """
    pts = [(int(x), int(y)) for x, y in points]
    if len(set(pts)) != len(pts):
        raise ValueError("point set has duplicates")
    if not pts:
        return GroebnerBasis(ctx, [Polynomial.constant(ctx, 1)]), Footprint([])
    add, mul, neg, inv = ctx.add_table, ctx.mul_table, ctx.neg_table, ctx.inv_table
    n = len(pts)
    xpow = [[1] for _ in range(n)]
    ypow = [[1] for _ in range(n)]

    def evaluate(r: int, s: int) -> list[int]:
        out = []
        for i, (x, y) in enumerate(pts):
            xp, yp = xpow[i], ypow[i]
            while len(xp) <= r:
                xp.append(mul[xp[-1]][x])
            while len(yp) <= s:
                yp.append(mul[yp[-1]][y])
            out.append(mul[xp[r]][yp[s]])
        return out

    # rows[j] = (vector with a unit at pivot, pivot, combination over footprint monomials)
    rows: list[tuple[list[int], int, Terms]] = []
    foot: list[Monomial] = []
    gb: list[Polynomial] = []
    leads: list[Monomial] = []
    candidates = {Monomial(0, 0)}
    while candidates:
        t = min(candidates, key=order_key)
        candidates.discard(t)
        if any(lm.r <= t.r and lm.s <= t.s for lm in leads):
            continue
        v = evaluate(t.r, t.s)
        combo: Terms = {t: 1}
        for row, piv, rc in rows:
            c = v[piv]
            if c:
                f = mul[neg[c]]
                for i in range(piv, n):
                    if row[i]:
                        v[i] = add[v[i]][f[row[i]]]
                for mono, d in rc.items():
                    val = add[combo.get(mono, 0)][f[d]]
                    if val:
                        combo[mono] = val
                    else:
                        combo.pop(mono, None)
        piv = next((i for i, c in enumerate(v) if c), None)
        if piv is None:
            gb.append(Polynomial._raw(ctx, combo))
            leads.append(t)
            continue
        scale = mul[inv[v[piv]]]
        rows.append(([scale[c] for c in v], piv, {mono: scale[d] for mono, d in combo.items()}))
        foot.append(t)
        candidates.add(Monomial(t.r + 1, t.s))
        candidates.add(Monomial(t.r, t.s + 1))
    assert len(foot) == n
    return GroebnerBasis(ctx, gb), Footprint(foot)


def interpolating_generators(ctx: FieldContext, points: Iterable[tuple[int, int]]) -> list[Polynomial]:
    """Generators of the ideal of a point set built by Lagrange interpolation.

    With X the set of x-coordinates, f(x) = prod_{a in X} (x - a) and
    g = sum_a L_a(x) * prod_{(a, b) in D} (y - b), where L_a is the Lagrange
    basis on X, the ideal is <f, g> by the Chinese remainder theorem.
    """
    pts = [(int(x), int(y)) for x, y in points]
    fibers: dict[int, list[int]] = {}
    for x, y in pts:
        fibers.setdefault(x, []).append(y)
    neg = ctx.neg_table
    one = Polynomial.constant(ctx, 1)
    xvar = Polynomial.monomial(ctx, 1, 0)
    yvar = Polynomial.monomial(ctx, 0, 1)
    f = one
    for a in fibers:
        f = f * (xvar + Polynomial.constant(ctx, neg[a]))
    g = Polynomial(ctx)
    for a, ys in fibers.items():
        lag = one
        denom = 1
        for b in fibers:
            if b != a:
                lag = lag * (xvar + Polynomial.constant(ctx, neg[b]))
                denom = ctx.mul(denom, ctx.sub(a, b))
        lag = lag.scale(ctx.inv(denom))
        fiber = one
        for b in ys:
            fiber = fiber * (yvar + Polynomial.constant(ctx, neg[b]))
        g = g + lag * fiber
    return [f, g]
