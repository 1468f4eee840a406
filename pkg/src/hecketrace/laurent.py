"""
Exact Laurent polynomials in two variables ``q`` and ``a`` with integer
coefficients, and trace values whose denominators are powers of ``1 - q^2``.

Terms are keyed by the exponent pair ``(eq, ea)``. Coefficients are Python
ints, so they never overflow. Nothing in this module uses floating point.

Canonical text form
-------------------
Terms are listed by ascending ``a`` exponent, then ascending ``q`` exponent::

    1 - a^2
    -q^-1 + q^-1*a^2
    2*q^3*a^-1 - q

Grammar accepted by :func:`parse_laurent` (whitespace is ignored)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := INT | ('q'|'a') ['^' ['-'] INT]

so the fully explicit spelling ``-1*q^-1*a^2 + 1*q^-1`` is accepted too.
A :class:`TraceValue` prints as ``(<num>) / (1 - q^2)^<k>``, or as the bare
numerator when ``k == 0``.
"""

from __future__ import annotations

import re
from types import MappingProxyType
from typing import Iterable, Mapping, Union

from .errors import NotDivisible, ParseError

Monomial = tuple[int, int]  # (power of q, power of a)

__all__ = [
    "LaurentPoly", "TraceValue", "Monomial",
    "ZERO", "ONE", "Q", "A", "ONE_MINUS_Q2",
    "lp_add", "lp_mul", "lp_div_exact",
    "tv_add", "tv_mul", "tv_scale", "tv_canonicalize",
    "parse_laurent",
]


def _sort_key(m: Monomial) -> tuple[int, int]:
    return m[1], m[0]


class LaurentPoly:
    """An immutable element of Z[q, q^-1, a, a^-1]."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        if terms is None:
            self._terms: dict[Monomial, int] = {}
        else:
            self._terms = {m: int(c) for m, c in terms.items() if c}
        self._hash: int | None = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, int]) -> LaurentPoly:
        # caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, coeff: int = 1, q: int = 0, a: int = 0) -> LaurentPoly:
        return cls({(q, a): coeff})

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls({(0, 0): c})

    @classmethod
    def coerce(cls, x: Scalar) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return MappingProxyType(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def coefficient(self, q: int = 0, a: int = 0) -> int:
        return self._terms.get((q, a), 0)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self._terms.items(), key=lambda t: _sort_key(t[0]))

    def exponents(self, var: str) -> tuple[int, int]:
        """Return ``(min, max)`` exponent of ``var`` ('q' or 'a'); (0, 0) for zero."""
        if not self._terms:
            return 0, 0
        idx = 0 if var == "q" else 1
        vals = [m[idx] for m in self._terms]
        return min(vals), max(vals)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: Scalar) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for m, c in small.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Scalar) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other: Scalar) -> LaurentPoly:
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentPoly._raw({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[Monomial, int] = {}
        for (q1, a1), c1 in self._terms.items():
            for (q2, a2), c2 in other._terms.items():
                m = (q1 + q2, a1 + a2)
                out[m] = out.get(m, 0) + c1 * c2
        return LaurentPoly({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def shift(self, q: int = 0, a: int = 0) -> LaurentPoly:
        """Multiply by the monomial ``q^q * a^a``."""
        if not q and not a:
            return self
        return LaurentPoly._raw({(m[0] + q, m[1] + a): c for m, c in self._terms.items()})

    def __pow__(self, e: int) -> LaurentPoly:
        if e < 0:
            if len(self._terms) != 1:
                raise NotDivisible(f"{self} is not a unit")
            ((mq, ma), c), = self._terms.items()
            if c not in (1, -1):
                raise NotDivisible(f"{self} is not a unit")
            return LaurentPoly.monomial(c ** (-e), mq * e, ma * e)
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def div_exact(self, d: Scalar) -> LaurentPoly:
        return lp_div_exact(self, LaurentPoly.coerce(d))

    # -- comparison and display -------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, ((eq, ea), c) in enumerate(self.sorted_terms()):
            body = _format_term(abs(c), eq, ea)
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"


Scalar = Union[LaurentPoly, int]


def _format_var(name: str, e: int) -> str:
    return name if e == 1 else f"{name}^{e}"


def _format_term(c: int, eq: int, ea: int) -> str:
    factors = []
    if eq:
        factors.append(_format_var("q", eq))
    if ea:
        factors.append(_format_var("a", ea))
    if not factors:
        return str(c)
    mono = "*".join(factors)
    return mono if c == 1 else f"{c}*{mono}"


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
Q = LaurentPoly.monomial(1, q=1)
A = LaurentPoly.monomial(1, a=1)
ONE_MINUS_Q2 = LaurentPoly({(0, 0): 1, (2, 0): -1})


def lp_add(x: LaurentPoly, y: LaurentPoly) -> LaurentPoly:
    return x + y


def lp_mul(x: LaurentPoly, y: LaurentPoly) -> LaurentPoly:
    return x * y


def lp_div_exact(x: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """
    Return ``z`` with ``z * d == x``, or raise :class:`NotDivisible`.

    Long division on the lex order (a first, then q), which is a group order
    on exponent pairs. The quotient's exponents are confined to the box
    ``[min(x) - min(d), max(x) - max(d)]`` in each variable, which both
    bounds the work and detects non-divisibility.
    """
    if d.is_zero():
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    if x.is_zero():
        return ZERO
    dq_lo, dq_hi = d.exponents("q")
    da_lo, da_hi = d.exponents("a")
    xq_lo, xq_hi = x.exponents("q")
    xa_lo, xa_hi = x.exponents("a")
    q_lo, q_hi = xq_lo - dq_lo, xq_hi - dq_hi
    a_lo, a_hi = xa_lo - da_lo, xa_hi - da_hi
    if q_lo > q_hi or a_lo > a_hi:
        raise NotDivisible(f"{x} is not a multiple of {d}")

    d_terms = d._terms
    lead = max(d_terms, key=_sort_key)
    lead_c = d_terms[lead]
    rem = dict(x._terms)
    quot: dict[Monomial, int] = {}
    while rem:
        m = max(rem, key=_sort_key)
        c = rem[m]
        mq, ma = m[0] - lead[0], m[1] - lead[1]
        if not (q_lo <= mq <= q_hi and a_lo <= ma <= a_hi) or c % lead_c:
            raise NotDivisible(f"{x} is not a multiple of {d}")
        k = c // lead_c
        quot[(mq, ma)] = k
        for (eq, ea), dc in d_terms.items():
            key = (eq + mq, ea + ma)
            v = rem.get(key, 0) - k * dc
            if v:
                rem[key] = v
            else:
                rem.pop(key, None)
    return LaurentPoly._raw(quot)


def _div_one_minus_q2(x: LaurentPoly) -> LaurentPoly | None:
    """Quotient of ``x`` by ``1 - q^2`` if exact, else None."""
    # Per a-slice: c_e = r_e - r_{e-2}, so r_e = c_e + r_{e-2} from the bottom up.
    slices: dict[int, dict[int, int]] = {}
    for (eq, ea), c in x._terms.items():
        slices.setdefault(ea, {})[eq] = c
    out: dict[Monomial, int] = {}
    for ea, coeffs in slices.items():
        lo, hi = min(coeffs), max(coeffs)
        if hi - lo < 2:
            return None
        r: dict[int, int] = {}
        for e in range(lo, hi - 1):
            v = coeffs.get(e, 0) + r.get(e - 2, 0)
            if v:
                r[e] = v
        for e in (hi - 1, hi):
            if coeffs.get(e, 0) + r.get(e - 2, 0):
                return None
        for e, v in r.items():
            out[(e, ea)] = v
    return LaurentPoly._raw(out)


class TraceValue:
    """
    ``num / (1 - q^2)^k`` with ``num`` a LaurentPoly and ``k >= 0``.

    The constructor stores its arguments as given; arithmetic always returns
    canonical values (see :meth:`canonical`). Equality is equality in Q(q, a)
    regardless of canonical form.
    """

    __slots__ = ("num", "k")

    def __init__(self, num: Scalar, k: int = 0):
        if k < 0:
            raise ValueError("denominator exponent must be nonnegative")
        self.num = LaurentPoly.coerce(num)
        self.k = k

    @classmethod
    def of(cls, num: Scalar, k: int = 0) -> TraceValue:
        return cls(num, k).canonical()

    @property
    def denom_exp(self) -> int:
        return self.k

    def canonical(self) -> TraceValue:
        num, k = self.num, self.k
        if num.is_zero():
            return TraceValue(ZERO, 0)
        while k > 0:
            reduced = _div_one_minus_q2(num)
            if reduced is None:
                break
            num, k = reduced, k - 1
        if k == self.k:
            return self
        return TraceValue(num, k)

    def is_canonical(self) -> bool:
        if self.num.is_zero():
            return self.k == 0
        return self.k == 0 or _div_one_minus_q2(self.num) is None

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def _lift(self, k: int) -> LaurentPoly:
        """Numerator over the denominator ``(1 - q^2)^k``, ``k >= self.k``."""
        if k == self.k:
            return self.num
        return self.num * ONE_MINUS_Q2 ** (k - self.k)

    @staticmethod
    def _coerce(x: object) -> TraceValue | None:
        if isinstance(x, TraceValue):
            return x
        if isinstance(x, (LaurentPoly, int)):
            return TraceValue(x, 0)
        return None

    def __add__(self, other: object) -> TraceValue:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        k = max(self.k, o.k)
        return TraceValue(self._lift(k) + o._lift(k), k).canonical()

    __radd__ = __add__

    def __neg__(self) -> TraceValue:
        return TraceValue(-self.num, self.k)

    def __sub__(self, other: object) -> TraceValue:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> TraceValue:
        return (-self) + other

    def __mul__(self, other: object) -> TraceValue:
        if isinstance(other, (LaurentPoly, int)):
            return self.scale(other)
        if not isinstance(other, TraceValue):
            return NotImplemented
        return TraceValue(self.num * other.num, self.k + other.k).canonical()

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> TraceValue:
        c = LaurentPoly.coerce(c)
        if c.is_monomial() and abs(next(iter(c._terms.values()))) == 1:
            # multiplying by a unit keeps the form canonical
            if self.num.is_zero():
                return self
            ((mq, ma), s), = c._terms.items()
            num = self.num.shift(mq, ma)
            return TraceValue(num if s == 1 else -num, self.k)
        return TraceValue(self.num * c, self.k).canonical()

    def __pow__(self, e: int) -> TraceValue:
        if e < 0:
            raise ValueError("negative powers of trace values are not supported")
        return TraceValue(self.num ** e, self.k * e).canonical()

    @classmethod
    def sum(cls, values: Iterable[TraceValue]) -> TraceValue:
        """Sum over a common denominator, canonicalizing once."""
        values = list(values)
        if not values:
            return cls(ZERO, 0)
        k = max(v.k for v in values)
        num = ZERO
        for v in values:
            num = num + v._lift(k)
        return cls(num, k).canonical()

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.k == o.k:
            return self.num == o.num
        k = max(self.k, o.k)
        return self._lift(k) == o._lift(k)

    def __hash__(self) -> int:
        c = self.canonical()
        return hash((c.num, c.k))

    def __str__(self) -> str:
        if self.k == 0:
            return str(self.num)
        return f"({self.num}) / (1 - q^2)^{self.k}"

    def __repr__(self) -> str:
        return f"TraceValue({str(self)!r})"

    def to_json(self) -> dict:
        return {"num": str(self.num), "denomExp": self.k}

    @classmethod
    def from_json(cls, data: Mapping) -> TraceValue:
        return cls(parse_laurent(data["num"]), int(data["denomExp"]))


def tv_add(x: TraceValue, y: TraceValue) -> TraceValue:
    return x + y


def tv_mul(x: TraceValue, y: TraceValue) -> TraceValue:
    return x * y


def tv_scale(x: TraceValue, c: LaurentPoly) -> TraceValue:
    return x.scale(c)


def tv_canonicalize(x: TraceValue) -> TraceValue:
    return x.canonical()


_TOKEN = re.compile(r"\s*(?:(\d+)|([qa])|(\^)|(\*)|([+-]))")


def parse_laurent(text: str) -> LaurentPoly:
    """Parse the canonical (or fully explicit) text form of a LaurentPoly."""
    tokens: list[tuple[str, str]] = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character at {pos} in {text!r}")
        kind = ("int", "var", "^", "*", "sign")[m.lastindex - 1]
        tokens.append((kind, m.group(m.lastindex)))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    if not tokens:
        raise ParseError("empty polynomial text")

    i = 0

    def peek(kind: str) -> bool:
        return i < len(tokens) and tokens[i][0] == kind

    def take(kind: str) -> str:
        nonlocal i
        if not peek(kind):
            got = tokens[i][1] if i < len(tokens) else "end of input"
            raise ParseError(f"expected {kind}, got {got!r} in {text!r}")
        i += 1
        return tokens[i - 1][1]

    def factor() -> tuple[int, int, int]:
        if peek("int"):
            return int(take("int")), 0, 0
        var = take("var")
        e = 1
        if peek("^"):
            take("^")
            neg = peek("sign") and tokens[i][1] == "-"
            if peek("sign"):
                take("sign")
            e = int(take("int")) * (-1 if neg else 1)
        return (1, e, 0) if var == "q" else (1, 0, e)

    out = ZERO
    first = True
    while i < len(tokens):
        sign = 1
        if peek("sign"):
            sign = -1 if take("sign") == "-" else 1
        elif not first:
            raise ParseError(f"expected '+' or '-' in {text!r}")
        c, eq, ea = factor()
        while peek("*"):
            take("*")
            c2, q2, a2 = factor()
            c, eq, ea = c * c2, eq + q2, ea + a2
        out = out + LaurentPoly.monomial(sign * c, eq, ea)
        first = False
    return out
