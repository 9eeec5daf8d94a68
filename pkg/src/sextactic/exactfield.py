"""Exact arithmetic in K = Q(w, a) with w^2 + w + 1 = 0 and a^3 = 2.

Elements are stored as six integer numerators over one positive common
denominator, in the basis (1, w, a, w*a, a^2, w*a^2).  The tuple is always
fully reduced, so structural equality is field equality.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Callable, Iterable, Mapping

BASIS_NAMES = ("1", "w", "a", "w*a", "a^2", "w*a^2")


def _qw(p0: int, p1: int, q0: int, q1: int) -> tuple[int, int]:
    # (p0 + p1 w)(q0 + q1 w) with w^2 = -1 - w
    t = p1 * q1
    return p0 * q0 - t, p0 * q1 + p1 * q0 - t


def _normalize(n: tuple, d: int) -> tuple[tuple, int]:
    if d < 0:
        n = tuple(-c for c in n)
        d = -d
    g = math.gcd(*n, d)
    if g != 1:
        n = tuple(c // g for c in n)
        d //= g
    return n, d


def mul_raw(x: tuple, dx: int, y: tuple, dy: int) -> tuple[tuple, int]:
    """Product of two raw (numerators, denominator) pairs, normalized."""
    x0, x1, x2, x3, x4, x5 = x
    y0, y1, y2, y3, y4, y5 = y
    a, b = _qw(x0, x1, y0, y1)
    c, e = _qw(x2, x3, y4, y5)
    g, h = _qw(x4, x5, y2, y3)
    r0 = a + 2 * (c + g)
    r1 = b + 2 * (e + h)
    a, b = _qw(x0, x1, y2, y3)
    c, e = _qw(x2, x3, y0, y1)
    g, h = _qw(x4, x5, y4, y5)
    r2 = a + c + 2 * g
    r3 = b + e + 2 * h
    a, b = _qw(x0, x1, y4, y5)
    c, e = _qw(x2, x3, y2, y3)
    g, h = _qw(x4, x5, y0, y1)
    r4 = a + c + g
    r5 = b + e + h
    d = dx * dy
    gg = math.gcd(r0, r1, r2, r3, r4, r5, d)
    if gg != 1:
        return (r0 // gg, r1 // gg, r2 // gg, r3 // gg, r4 // gg, r5 // gg), d // gg
    return (r0, r1, r2, r3, r4, r5), d


class K:
    """An element of Q(w, cbrt 2).  Immutable and hashable."""

    __slots__ = ("n", "d")

    def __init__(self, value=0, _raw: tuple | None = None):
        if _raw is not None:
            self.n, self.d = _raw
            return
        if isinstance(value, K):
            self.n, self.d = value.n, value.d
            return
        if isinstance(value, int):
            self.n, self.d = (value, 0, 0, 0, 0, 0), 1
            return
        if isinstance(value, Fraction):
            self.n, self.d = (value.numerator, 0, 0, 0, 0, 0), value.denominator
            return
        if isinstance(value, (tuple, list)):
            if len(value) != 6:
                raise ValueError("a field element needs exactly 6 coordinates")
            fr = [Fraction(c) for c in value]
            d = math.lcm(*(c.denominator for c in fr))
            self.n, self.d = _normalize(tuple(int(c * d) for c in fr), d)
            return
        if isinstance(value, str):
            v = parse_scalar(value)
            self.n, self.d = v.n, v.d
            return
        raise TypeError(f"cannot build a field element from {type(value).__name__}")

    @classmethod
    def raw(cls, n: tuple, d: int) -> "K":
        return cls(_raw=(n, d))

    @classmethod
    def from_raw(cls, n: tuple, d: int) -> "K":
        """Build from unnormalized numerators and a nonzero denominator."""
        return cls(_raw=_normalize(tuple(n), d))

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.d) for c in self.n)

    def is_zero(self) -> bool:
        return not any(self.n)

    def __bool__(self) -> bool:
        return any(self.n)

    def is_rational(self) -> bool:
        n = self.n
        return not (n[1] or n[2] or n[3] or n[4] or n[5])

    def in_qw(self) -> bool:
        """True when the element lies in the subfield Q(w)."""
        n = self.n
        return not (n[2] or n[3] or n[4] or n[5])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.n[0], self.d)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, K):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        dx, dy = self.d, other.d
        if dx == dy:
            n = tuple(a + b for a, b in zip(self.n, other.n))
            return K(_raw=_normalize(n, dx))
        n = tuple(a * dy + b * dx for a, b in zip(self.n, other.n))
        return K(_raw=_normalize(n, dx * dy))

    __radd__ = __add__

    def __neg__(self):
        return K(_raw=(tuple(-a for a in self.n), self.d))

    def __sub__(self, other):
        if not isinstance(other, K):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, K):
            if isinstance(other, int):
                return K(_raw=_normalize(tuple(a * other for a in self.n), self.d))
            other = _coerce(other)
            if other is None:
                return NotImplemented
        return K(_raw=mul_raw(self.n, self.d, other.n, other.d))

    __rmul__ = __mul__

    def conj_w(self) -> "K":
        """Image under w -> w^2, fixing a."""
        n = self.n
        # (p + q w) -> (p - q) - q w
        return K(_raw=((n[0] - n[1], -n[1], n[2] - n[3], -n[3], n[4] - n[5], -n[5]), self.d))

    def inv(self) -> "K":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in K")
        # x^{-1} = conj(x) * (x conj(x))^{-1}, and x conj(x) = r0 + r1 a + r2 a^2 in Q(a)
        c = self.conj_w()
        m = self * c
        r0, _, r1, _, r2, _ = m.n
        dm = m.d
        # inverse in Q(a): (r0 + r1 a + r2 a^2)^{-1} via the norm form
        s0 = r0 * r0 - 2 * r1 * r2
        s1 = 2 * r2 * r2 - r0 * r1
        s2 = r1 * r1 - r0 * r2
        nrm = r0 ** 3 + 2 * r1 ** 3 + 4 * r2 ** 3 - 6 * r0 * r1 * r2
        # (r/dm)^{-1} = dm * (s0 + s1 a + s2 a^2) / nrm
        adj = K(_raw=_normalize((s0 * dm, 0, s1 * dm, 0, s2 * dm, 0), nrm))
        return c * adj

    def __truediv__(self, other):
        if not isinstance(other, K):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inv()

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # comparison -----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, K):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        return self.n == other.n and self.d == other.d

    def __hash__(self):
        return hash((self.n, self.d))

    def sort_key(self) -> tuple:
        """Deterministic total order (not compatible with arithmetic)."""
        return self.coords

    def __repr__(self):
        return f"K({str(self)!r})"

    def __str__(self):
        return format_scalar(self)


def _coerce(v) -> K | None:
    if isinstance(v, K):
        return v
    if isinstance(v, (int, Fraction)):
        return K(v)
    return None


ZERO = K(0)
ONE = K(1)
W = K((0, 1, 0, 0, 0, 0))
A = K((0, 0, 1, 0, 0, 0))


def basis_element(i: int) -> K:
    n = [0] * 6
    n[i] = 1
    return K(_raw=(tuple(n), 1))


def galois(x: K, w_power: int, a_twist: int) -> K:
    """Apply the automorphism w -> w^w_power, a -> w^a_twist * a."""
    wi = W if w_power % 3 == 1 else W * W
    ai = A * (W ** (a_twist % 3))
    c = x.coords
    return (K(c[0]) + K(c[1]) * wi) + (K(c[2]) + K(c[3]) * wi) * ai + (K(c[4]) + K(c[5]) * wi) * ai * ai


GALOIS_GROUP = tuple((wp, at) for wp in (1, 2) for at in (0, 1, 2))


def _fmt_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(x: K) -> str:
    parts = []
    for i, q in enumerate(x.coords):
        if q == 0:
            continue
        if i == 0:
            body = _fmt_fraction(abs(q))
        elif abs(q) == 1:
            body = BASIS_NAMES[i]
        else:
            body = f"{_fmt_fraction(abs(q))}*{BASIS_NAMES[i]}"
        parts.append(("-" if q < 0 else "+", body))
    if not parts:
        return "0"
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# parsing --------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", num))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


def parse_expression(text: str, atoms: Mapping[str, object], lift: Callable[[K], object]):
    """Recursive-descent parser for + - * / ^ and parentheses.

    ``atoms`` maps names to values supporting ring arithmetic with K
    operands; a purely scalar result is passed through ``lift``.  Division is
    only allowed by scalars.
    """
    toks = _tokenize(text)
    if not toks:
        raise ValueError("empty expression")
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def take():
        nonlocal pos
        t = toks[pos]
        pos += 1
        return t

    def expr():
        kind, val = peek()
        neg = False
        if kind == "op" and val in "+-":
            take()
            neg = val == "-"
        acc = term()
        if neg:
            acc = -acc
        while True:
            kind, val = peek()
            if kind == "op" and val in "+-":
                take()
                rhs = term()
                acc = acc + rhs if val == "+" else acc - rhs
            else:
                return acc

    def term():
        acc = power()
        while True:
            kind, val = peek()
            if kind == "op" and val == "*":
                take()
                acc = acc * power()
            elif kind == "op" and val == "/":
                take()
                rhs = power()
                if not isinstance(rhs, K):
                    raise ValueError("division is only supported by scalars")
                acc = acc * rhs.inv()
            elif kind in ("num", "name") or (kind == "op" and val == "("):
                acc = acc * power()  # implicit multiplication
            else:
                return acc

    def power():
        base = atom()
        kind, val = peek()
        if kind == "op" and val == "^":
            take()
            kind, val = take()
            if kind != "num":
                raise ValueError("exponent must be a non-negative integer")
            e = int(val)
            result = base
            if e == 0:
                return lift(ONE)
            for _ in range(e - 1):
                result = result * base
            return result
        return base

    def atom():
        if pos >= len(toks):
            raise ValueError("unexpected end of expression")
        kind, val = take()
        if kind == "num":
            return K(int(val))
        if kind == "name":
            if val == "w":
                return W
            if val == "a":
                return A
            if val in atoms:
                return atoms[val]
            raise ValueError(f"unknown symbol {val!r}")
        if val == "(":
            inner = expr()
            k, v = take() if pos < len(toks) else (None, None)
            if v != ")":
                raise ValueError("missing closing parenthesis")
            return inner
        if val == "-":
            return -atom()
        raise ValueError(f"unexpected token {val!r}")

    result = expr()
    if pos != len(toks):
        raise ValueError(f"trailing input near token {toks[pos][1]!r}")
    if isinstance(result, K):
        return lift(result)
    return result


def parse_scalar(text: str) -> K:
    """Parse e.g. ``3/2 + 1*w - 2*a^2``."""
    return parse_expression(text, {}, lambda v: v)


def random_element(rng, height: int = 9, density: float = 1.0) -> K:
    coords = []
    for _ in range(6):
        if rng.random() < density:
            coords.append(Fraction(rng.randint(-height, height), rng.randint(1, height)))
        else:
            coords.append(Fraction(0))
    return K(coords)


def lcm_denominator(values: Iterable[K]) -> int:
    return math.lcm(1, *(v.d for v in values))
