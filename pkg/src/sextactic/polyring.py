"""Homogeneous polynomials in K[x, y, z], projective points, linear changes,
resultants and univariate helpers over K."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .exactfield import ONE, ZERO, A, W, K, format_scalar, parse_expression, parse_scalar, GALOIS_GROUP, galois

VARS = ("x", "y", "z")
_VAR_INDEX = {"x": 0, "y": 1, "z": 2}


class DegreeError(ValueError):
    pass


class SingularMatrixError(ValueError):
    pass


@lru_cache(maxsize=None)
def monomials(k: int) -> tuple[tuple[int, int, int], ...]:
    """Monomials of degree k in grlex order, x > y > z (largest first)."""
    if k < 0:
        return ()
    return tuple((ex, ey, k - ex - ey) for ex in range(k, -1, -1) for ey in range(k - ex, -1, -1))


@lru_cache(maxsize=None)
def monomial_index(k: int) -> dict:
    return {m: i for i, m in enumerate(monomials(k))}


def dim_s(k: int) -> int:
    return (k + 1) * (k + 2) // 2 if k >= 0 else 0


def _var_index(var) -> int:
    if isinstance(var, int):
        return var
    return _VAR_INDEX[var]


def _scalar(c) -> K:
    return c if isinstance(c, K) else K(c)


class HomPoly:
    """Homogeneous polynomial with an explicit degree.

    ``terms`` maps exponent triples to nonzero field elements; the zero
    polynomial keeps its degree tag with an empty map.
    """

    __slots__ = ("degree", "terms", "_hash")

    def __init__(self, degree: int, terms=None, _trusted: bool = False):
        if degree < 0:
            raise DegreeError("negative degree")
        self.degree = degree
        self._hash = None
        if _trusted:
            self.terms = terms
            return
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != 3 or min(mono) < 0 or sum(mono) != degree:
                raise DegreeError(f"monomial {mono} is not of degree {degree}")
            c = _scalar(c)
            if c:
                clean[mono] = c
        self.terms = clean

    # constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, degree: int) -> "HomPoly":
        return cls(degree, {}, _trusted=True)

    @classmethod
    def constant(cls, c) -> "HomPoly":
        c = _scalar(c)
        return cls(0, {(0, 0, 0): c} if c else {}, _trusted=True)

    @classmethod
    def var(cls, name) -> "HomPoly":
        e = [0, 0, 0]
        e[_var_index(name)] = 1
        return cls(1, {tuple(e): ONE}, _trusted=True)

    @classmethod
    def parse(cls, text: str) -> "HomPoly":
        atoms = {v: cls.var(v) for v in VARS}
        return parse_expression(text, atoms, cls.constant)

    @classmethod
    def from_vector(cls, degree: int, vec: Sequence[K]) -> "HomPoly":
        return cls(degree, {m: c for m, c in zip(monomials(degree), vec) if c}, _trusted=True)

    def vector(self) -> list[K]:
        return [self.terms.get(m, ZERO) for m in monomials(self.degree)]

    # basic queries --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, mono) -> K:
        return self.terms.get(tuple(mono), ZERO)

    def sorted_terms(self) -> list[tuple[tuple[int, int, int], K]]:
        return sorted(self.terms.items(), key=lambda t: (-t[0][0], -t[0][1]))

    def leading_coefficient(self) -> K:
        if not self.terms:
            return ZERO
        return self.sorted_terms()[0][1]

    def __eq__(self, other):
        if isinstance(other, HomPoly):
            return self.degree == other.degree and self.terms == other.terms
        if isinstance(other, (int, Fraction, K)):
            return self == HomPoly.constant(other) if self.degree == 0 else (not self.terms and not _scalar(other))
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.degree, frozenset(self.terms.items())))
        return self._hash

    # arithmetic -----------------------------------------------------------

    def _lift(self, other) -> "HomPoly | None":
        if isinstance(other, HomPoly):
            return other
        if isinstance(other, (int, Fraction, K)):
            c = _scalar(other)
            if not c:
                return HomPoly.zero(self.degree)
            return HomPoly.constant(c)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if other.degree != self.degree:
            if not other.terms:
                return self
            if not self.terms:
                return other
            raise DegreeError(f"cannot add polynomials of degrees {self.degree} and {other.degree}")
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s = s + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return HomPoly(self.degree, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return HomPoly(self.degree, {m: -c for m, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "HomPoly":
        c = _scalar(c)
        if not c:
            return HomPoly.zero(self.degree)
        return HomPoly(self.degree, {m: v * c for m, v in self.terms.items()}, _trusted=True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, K)):
            return self.scale(other)
        if not isinstance(other, HomPoly):
            return NotImplemented
        out: dict = {}
        for (a0, a1, a2), c in self.terms.items():
            for (b0, b1, b2), e in other.terms.items():
                m = (a0 + b0, a1 + b1, a2 + b2)
                v = c * e
                s = out.get(m)
                out[m] = v if s is None else s + v
        return HomPoly(self.degree + other.degree, {m: v for m, v in out.items() if v}, _trusted=True)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, K)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = HomPoly.constant(ONE)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # calculus and evaluation ---------------------------------------------

    def partial(self, var) -> "HomPoly":
        i = _var_index(var)
        if self.degree == 0:
            return HomPoly.zero(0)
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                e = list(m)
                e[i] -= 1
                out[tuple(e)] = c * m[i]
        return HomPoly(self.degree - 1, out, _trusted=True)

    def gradient(self) -> tuple["HomPoly", "HomPoly", "HomPoly"]:
        return self.partial(0), self.partial(1), self.partial(2)

    def evaluate(self, point) -> K:
        coords = point.coords if isinstance(point, ProjPoint) else tuple(_scalar(c) for c in point)
        pw = [[ONE] for _ in range(3)]
        for i in range(3):
            for _ in range(self.degree):
                pw[i].append(pw[i][-1] * coords[i])
        total = ZERO
        for (a, b, c), v in self.terms.items():
            total = total + v * pw[0][a] * pw[1][b] * pw[2][c]
        return total

    def substitute(self, change: "LinearChange") -> "HomPoly":
        """The composition f(T v) for the linear change T."""
        if change.det().is_zero():
            raise SingularMatrixError("substitution by a singular matrix")
        return self.compose(change.linear_forms())

    def compose(self, forms: Sequence["HomPoly"]) -> "HomPoly":
        """f(L0, L1, L2) for linear forms L0, L1, L2."""
        pw = []
        for L in forms:
            row = [HomPoly.constant(ONE)]
            for _ in range(self.degree):
                row.append(row[-1] * L)
            pw.append(row)
        out = HomPoly.zero(self.degree)
        for (a, b, c), v in self.terms.items():
            out = out + (pw[0][a] * pw[1][b] * pw[2][c]).scale(v)
        return out

    # normalization --------------------------------------------------------

    def normalize(self) -> "HomPoly":
        """Divide by the grlex-leading coefficient (equality up to scalar)."""
        if not self.terms:
            return self
        return self.scale(self.leading_coefficient().inv())

    def proportional(self, other: "HomPoly") -> bool:
        return self.degree == other.degree and self.normalize() == other.normalize()

    def coefficients_in(self, var) -> list["HomPoly"]:
        """Coefficients of powers of ``var`` (ascending), as forms in the other variables."""
        i = _var_index(var)
        out = [dict() for _ in range(self.degree + 1)]
        for m, c in self.terms.items():
            e = list(m)
            k = e[i]
            e[i] = 0
            out[k][tuple(e)] = c
        return [HomPoly(self.degree - k, out[k], _trusted=True) for k in range(self.degree + 1)]

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.terms.values())

    def in_qw(self) -> bool:
        return all(c.in_qw() for c in self.terms.values())

    # printing -------------------------------------------------------------

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"HomPoly({self.degree}, {str(self)!r})"


def _fmt_mono(m) -> str:
    parts = []
    for name, e in zip(VARS, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(f: HomPoly) -> str:
    if not f.terms:
        return "0"
    pieces = []
    for m, c in f.sorted_terms():
        mono = _fmt_mono(m)
        if c.is_rational():
            q = c.as_fraction()
            sign = "-" if q < 0 else "+"
            q = abs(q)
            qs = str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
            if not mono:
                body = qs
            elif q == 1:
                body = mono
            else:
                body = f"{qs}*{mono}"
        else:
            sign = "+"
            cs = format_scalar(c)
            body = f"({cs})" if not mono else f"({cs})*{mono}"
        pieces.append((sign, body))
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


# points and linear changes ---------------------------------------------------


class ProjPoint:
    """Point of P^2(K), normalized so the first nonzero coordinate is 1."""

    __slots__ = ("coords",)

    def __init__(self, *coords):
        if len(coords) == 1:
            coords = tuple(coords[0])
        if len(coords) != 3:
            raise ValueError("a projective point needs 3 coordinates")
        cs = [_scalar(c) for c in coords]
        lead = next((c for c in cs if c), None)
        if lead is None:
            raise ValueError("(0:0:0) is not a projective point")
        if lead != ONE:
            inv = lead.inv()
            cs = [c * inv for c in cs]
        self.coords = tuple(cs)

    @classmethod
    def parse(cls, text: str) -> "ProjPoint":
        body = text.strip()
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        parts = body.split(":")
        if len(parts) != 3:
            raise ValueError(f"expected (a:b:c), got {text!r}")
        return cls(*(parse_scalar(p) for p in parts))

    def __eq__(self, other):
        return isinstance(other, ProjPoint) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def sort_key(self):
        return tuple(c.sort_key() for c in self.coords)

    def __str__(self):
        return "(" + " : ".join(format_scalar(c) for c in self.coords) + ")"

    def __repr__(self):
        return f"ProjPoint{str(self)}"

    def chart(self) -> int:
        """Index of the last nonzero coordinate (the affine chart used locally)."""
        return max(i for i, c in enumerate(self.coords) if c)


class LinearChange:
    """Invertible 3x3 matrix over K acting on column vectors."""

    __slots__ = ("m",)

    def __init__(self, rows, check: bool = True):
        self.m = tuple(tuple(_scalar(c) for c in row) for row in rows)
        if check and self.det().is_zero():
            raise SingularMatrixError("linear change with zero determinant")

    @classmethod
    def identity(cls) -> "LinearChange":
        return cls([[1, 0, 0], [0, 1, 0], [0, 0, 1]])

    @classmethod
    def diagonal(cls, a, b, c) -> "LinearChange":
        return cls([[a, 0, 0], [0, b, 0], [0, 0, c]])

    @classmethod
    def permutation(cls, perm: Sequence[int]) -> "LinearChange":
        """Matrix sending coordinate vector v to (v[perm[0]], v[perm[1]], v[perm[2]])."""
        rows = [[1 if j == perm[i] else 0 for j in range(3)] for i in range(3)]
        return cls(rows)

    def det(self) -> K:
        (a, b, c), (d, e, f), (g, h, i) = self.m
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    def __matmul__(self, other: "LinearChange") -> "LinearChange":
        rows = [[sum((self.m[i][k] * other.m[k][j] for k in range(3)), ZERO) for j in range(3)] for i in range(3)]
        return LinearChange(rows, check=False)

    def inverse(self) -> "LinearChange":
        dt = self.det()
        if dt.is_zero():
            raise SingularMatrixError("singular matrix")
        m = self.m
        inv = dt.inv()
        cof = [[None] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(3):
                r = [k for k in range(3) if k != i]
                c = [k for k in range(3) if k != j]
                minor = m[r[0]][c[0]] * m[r[1]][c[1]] - m[r[0]][c[1]] * m[r[1]][c[0]]
                cof[j][i] = minor * inv if (i + j) % 2 == 0 else -minor * inv
        return LinearChange(cof, check=False)

    def apply(self, p: ProjPoint) -> ProjPoint:
        v = p.coords
        return ProjPoint(*(sum((self.m[i][k] * v[k] for k in range(3)), ZERO) for i in range(3)))

    def linear_forms(self) -> tuple[HomPoly, HomPoly, HomPoly]:
        return tuple(
            HomPoly(1, {(1, 0, 0): r[0], (0, 1, 0): r[1], (0, 0, 1): r[2]}) for r in self.m
        )

    def __eq__(self, other):
        return isinstance(other, LinearChange) and self.m == other.m

    def __hash__(self):
        return hash(self.m)

    def __repr__(self):
        return "LinearChange(" + "; ".join(", ".join(format_scalar(c) for c in r) for r in self.m) + ")"


def act(f: HomPoly, t: LinearChange) -> HomPoly:
    """Action of a group element on polynomials: f o t^{-1}."""
    return f.substitute(t.inverse())


def det3(mat: Sequence[Sequence[HomPoly]]) -> HomPoly:
    """Determinant of a 3x3 matrix of forms by cofactor expansion."""
    perms = [((0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1), ((0, 2, 1), -1), ((2, 1, 0), -1), ((1, 0, 2), -1)]
    degs = {sum(mat[i][p[i]].degree for i in range(3)) for p, _ in perms}
    if len(degs) != 1:
        raise DegreeError(f"entries do not give a homogeneous determinant (degrees {sorted(degs)})")
    total = HomPoly.zero(degs.pop())
    for p, sgn in perms:
        term = mat[0][p[0]] * mat[1][p[1]] * mat[2][p[2]]
        total = total + term if sgn > 0 else total - term
    return total


def jacobian_det(f: HomPoly, g: HomPoly, h: HomPoly) -> HomPoly:
    return det3([f.gradient(), g.gradient(), h.gradient()])


# dense determinants over K --------------------------------------------------


def det_k(mat: list[list[K]]) -> K:
    """Determinant over K by Gaussian elimination."""
    m = [list(r) for r in mat]
    n = len(m)
    sign = ONE
    acc = ONE
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c]), None)
        if piv is None:
            return ZERO
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        p = m[c][c]
        acc = acc * p
        pinv = p.inv()
        for r in range(c + 1, n):
            if m[r][c]:
                fac = m[r][c] * pinv
                row_c = m[c]
                row_r = m[r]
                for j in range(c + 1, n):
                    if row_c[j]:
                        row_r[j] = row_r[j] - fac * row_c[j]
    return acc * sign


# univariate polynomials --------------------------------------------------------


class UPoly:
    """Univariate polynomial over K, coefficients in ascending order."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_scalar(v) for v in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.c = tuple(cs)

    @property
    def deg(self) -> int:
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def lc(self) -> K:
        return self.c[-1]

    def __eq__(self, other):
        return isinstance(other, UPoly) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __add__(self, o: "UPoly") -> "UPoly":
        n = max(len(self.c), len(o.c))
        return UPoly([(self.c[i] if i < len(self.c) else ZERO) + (o.c[i] if i < len(o.c) else ZERO) for i in range(n)])

    def __neg__(self):
        return UPoly([-v for v in self.c])

    def __sub__(self, o: "UPoly") -> "UPoly":
        return self + (-o)

    def __mul__(self, o):
        if isinstance(o, (int, Fraction, K)):
            o = _scalar(o)
            return UPoly([v * o for v in self.c])
        if not self.c or not o.c:
            return UPoly()
        out = [ZERO] * (len(self.c) + len(o.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return UPoly(out)

    __rmul__ = __mul__

    def monic(self) -> "UPoly":
        if not self.c:
            return self
        return self * self.lc().inv()

    def divmod(self, o: "UPoly") -> tuple["UPoly", "UPoly"]:
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.c)
        q = [ZERO] * max(len(r) - len(o.c) + 1, 0)
        inv = o.lc().inv()
        dv = len(o.c) - 1
        for k in range(len(r) - 1, dv - 1, -1):
            if r[k]:
                fac = r[k] * inv
                q[k - dv] = fac
                for j in range(dv + 1):
                    if o.c[j]:
                        r[k - dv + j] = r[k - dv + j] - fac * o.c[j]
        return UPoly(q), UPoly(r[:dv])

    def __mod__(self, o):
        return self.divmod(o)[1]

    def __floordiv__(self, o):
        return self.divmod(o)[0]

    def derivative(self) -> "UPoly":
        return UPoly([v * i for i, v in enumerate(self.c)][1:])

    def __call__(self, t) -> K:
        acc = ZERO
        for v in reversed(self.c):
            acc = acc * t + v
        return acc

    def compose_linear(self, a: K, b: K) -> "UPoly":
        """self(a*t + b)."""
        lin = UPoly([b, a])
        acc = UPoly()
        for v in reversed(self.c):
            acc = acc * lin + UPoly([v])
        return acc

    def is_rational(self) -> bool:
        return all(v.is_rational() for v in self.c)

    def __repr__(self):
        return "UPoly(" + ", ".join(format_scalar(v) for v in self.c) + ")"


def gcd_univariate(u: UPoly, v: UPoly) -> UPoly:
    """Monic gcd by the Euclidean algorithm over K."""
    if u.is_zero() and v.is_zero():
        raise ValueError("gcd of two zero polynomials")
    a, b = u, v
    while not b.is_zero():
        a, b = b, a % b
        if not b.is_zero():
            b = b.monic()
    return a.monic()


def squarefree_decomposition(u: UPoly) -> list[tuple[UPoly, int]]:
    """Yun's algorithm: u = lc * prod a_i^i with a_i squarefree and coprime."""
    if u.deg < 1:
        return []
    out = []
    du = u.derivative()
    a0 = gcd_univariate(u, du)
    b = u // a0
    c = du // a0
    d = c - b.derivative()
    i = 1
    while b.deg > 0:
        a = gcd_univariate(b, d)
        if a.deg > 0:
            out.append((a, i))
        b = b // a
        c = d // a
        d = c - b.derivative()
        i += 1
    return out


def squarefree_part(u: UPoly) -> UPoly:
    if u.deg < 1:
        return UPoly([ONE]) if not u.is_zero() else u
    return (u // gcd_univariate(u, u.derivative())).monic()


# roots in K ------------------------------------------------------------------

PRIMITIVE = A + W


def _conjugate(u: UPoly, sigma) -> UPoly:
    return UPoly([galois(v, *sigma) for v in u.c])


def norm_poly(u: UPoly) -> UPoly:
    """Product of the Galois conjugates of u, a polynomial over Q."""
    acc = UPoly([ONE])
    for sigma in GALOIS_GROUP:
        acc = acc * _conjugate(u, sigma)
    if not acc.is_rational():
        raise AssertionError("norm polynomial is not rational")
    return acc


def _factor_rational(u: UPoly) -> list[UPoly]:
    """Irreducible factors over Q of a rational polynomial (without multiplicity)."""
    import sympy

    t = sympy.Symbol("t")
    expr = sum(sympy.Rational(v.as_fraction().numerator, v.as_fraction().denominator) * t ** i for i, v in enumerate(u.c))
    _, facs = sympy.factor_list(sympy.Poly(expr, t, domain="QQ"))
    out = []
    for fac, _mult in facs:
        coeffs = fac.all_coeffs()[::-1]
        out.append(UPoly([K(Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1]))) for c in coeffs]).monic())
    return out


def _trager_roots(u: UPoly) -> list[K]:
    """Roots in K of a squarefree u via the norm of a shifted copy."""
    for s in range(0, 12):
        shift = PRIMITIVE * s
        v = u.compose_linear(ONE, -shift)  # v(t) = u(t - s*theta)
        n = norm_poly(v)
        if gcd_univariate(n, n.derivative()).deg > 0:
            continue
        roots = []
        for fac in _factor_rational(n):
            if fac.deg != 6:
                continue
            g = gcd_univariate(v, fac)
            if g.deg == 1:
                roots.append(-g.c[0] / g.c[1] - shift)
        return roots
    raise RuntimeError("no squarefree norm found for root extraction")


def roots_in_field(u: UPoly) -> list[K]:
    """All distinct roots of u lying in K (linear-factor extraction)."""
    if u.is_zero():
        raise ValueError("the zero polynomial has every element as a root")
    if u.deg < 1:
        return []
    sf = squarefree_part(u)
    if sf.deg == 1:
        return [-sf.c[0] / sf.c[1]]
    roots: list[K] = []
    if sf.is_rational():
        for fac in _factor_rational(sf):
            if fac.deg == 1:
                roots.append(-fac.c[0] / fac.c[1])
            elif fac.deg in (2, 3, 6):
                roots.extend(_trager_roots(fac))
    else:
        roots = _trager_roots(sf)
    assert all(u(r).is_zero() for r in roots)
    return sorted(set(roots), key=lambda r: r.sort_key())


# resultants -----------------------------------------------------------------


def sylvester_det(f: Sequence[K], g: Sequence[K]) -> K:
    """Sylvester determinant of coefficient lists given in descending powers.

    The formal degrees are len(f) - 1 and len(g) - 1; f-rows come first.
    """
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    if size == 0:
        return ONE
    rows = []
    for i in range(n):
        rows.append([ZERO] * i + list(f) + [ZERO] * (size - m - 1 - i))
    for i in range(m):
        rows.append([ZERO] * i + list(g) + [ZERO] * (size - n - 1 - i))
    return det_k(rows)


def _interpolate(xs: Sequence[K], ys: Sequence[K]) -> list[K]:
    """Coefficients (ascending) of the polynomial through the points (Newton form)."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [ZERO] * n
    # expand Newton form
    acc = [ONE]
    for j in range(n):
        for i, a in enumerate(acc):
            poly[i] = poly[i] + coef[j] * a
        # multiply acc by (t - xs[j])
        new = [ZERO] * (len(acc) + 1)
        for i, a in enumerate(acc):
            new[i + 1] = new[i + 1] + a
            new[i] = new[i] - a * xs[j]
        acc = new
    return poly


def resultant(f: HomPoly, g: HomPoly, var="z") -> HomPoly:
    """Sylvester resultant eliminating ``var``; a form of degree deg f * deg g.

    The formal degree in ``var`` is the total degree (the leading coefficient
    is the constant coefficient of var^deg).  Computed by evaluation at
    deg f * deg g + 1 points of the remaining chart and interpolation.
    """
    vi = _var_index(var)
    if f.degree < 1 or g.degree < 1:
        raise DegreeError("resultant needs positive degrees")
    others = [i for i in range(3) if i != vi]
    fc = f.coefficients_in(vi)[::-1]
    gc = g.coefficients_in(vi)[::-1]
    D = f.degree * g.degree
    xs = [K(i) for i in range(D + 1)]
    ys = []
    for t in xs:
        pt = [ZERO, ZERO, ZERO]
        pt[others[0]] = t
        pt[others[1]] = ONE
        ys.append(sylvester_det([c.evaluate(pt) for c in fc], [c.evaluate(pt) for c in gc]))
    coeffs = _interpolate(xs, ys)
    terms = {}
    for i, c in enumerate(coeffs):
        if c:
            e = [0, 0, 0]
            e[others[0]] = i
            e[others[1]] = D - i
            terms[tuple(e)] = c
    return HomPoly(D, terms, _trusted=True)


def dehomogenize_binary(form: HomPoly, pair=(0, 1)) -> tuple[UPoly, int]:
    """View a binary form in (u, v) as u -> t with v = 1.

    Returns the univariate polynomial and the multiplicity of the root v = 0
    (the root (1:0)), read off as the degree drop.
    """
    i, j = pair
    coeffs = [ZERO] * (form.degree + 1)
    for m, c in form.terms.items():
        if m[3 - i - j]:
            raise DegreeError("form involves the eliminated variable")
        coeffs[m[i]] = c
    u = UPoly(coeffs)
    return u, form.degree - u.deg if not u.is_zero() else form.degree


def multiplicity_pattern(form: HomPoly, pair=(0, 1)) -> list[int]:
    """Root multiplicities of a binary form over the algebraic closure."""
    u, inf_mult = dehomogenize_binary(form, pair)
    if u.is_zero():
        raise ValueError("zero form has no root pattern")
    pattern = []
    for a, mult in squarefree_decomposition(u):
        pattern.extend([mult] * a.deg)
    if inf_mult:
        pattern.append(inf_mult)
    return sorted(pattern, reverse=True)


# solving ----------------------------------------------------------------------


def seeded_changes():
    """Identity followed by a fixed sequence of unimodular rational changes."""
    yield LinearChange.identity()
    mats = [
        [[1, 0, 1], [0, 1, 1], [0, 0, 1]],
        [[1, 0, 2], [0, 1, -1], [0, 0, 1]],
        [[1, 0, 0], [0, 1, 0], [1, 2, 1]],
        [[1, 1, 3], [0, 1, 2], [0, 0, 1]],
        [[1, 0, -3], [1, 1, 5], [0, 0, 1]],
        [[2, 1, 1], [1, 1, 0], [1, 0, 2]],
        [[1, 3, 0], [0, 1, 0], [2, 5, 1]],
    ]
    for m in mats:
        yield LinearChange(m)


def intersection_points(f: HomPoly, g: HomPoly) -> list[ProjPoint]:
    """K-rational common zeros of two forms without a common factor."""
    for T in seeded_changes():
        F, G = f.substitute(T), g.substitute(T)
        if not F.evaluate((0, 0, 1)) and not G.evaluate((0, 0, 1)):
            continue
        R = resultant(F, G, 2)
        if R.is_zero():
            raise ValueError("the two curves share a common component")
        u, inf_mult = dehomogenize_binary(R, (0, 1))
        line_points = [(r, ONE) for r in roots_in_field(u)]
        if inf_mult:
            line_points.append((ONE, ZERO))
        found = set()
        for x0, y0 in line_points:
            h1 = UPoly([c.evaluate((x0, y0, 0)) for c in F.coefficients_in(2)])
            h2 = UPoly([c.evaluate((x0, y0, 0)) for c in G.coefficients_in(2)])
            if h1.is_zero() and h2.is_zero():
                raise ValueError("a whole line lies on both curves")
            g_ = h2 if h1.is_zero() else (h1 if h2.is_zero() else gcd_univariate(h1, h2))
            for z0 in roots_in_field(g_) if g_.deg > 0 else []:
                found.add(T.apply(ProjPoint(x0, y0, z0)))
        return sorted(found, key=lambda p: p.sort_key())
    raise RuntimeError("no admissible projection center found")


def common_zeros(polys: Sequence[HomPoly]) -> list[ProjPoint]:
    """K-rational common zeros of a list of forms, the first two coprime."""
    pts = intersection_points(polys[0], polys[1])
    return [p for p in pts if all(h.evaluate(p).is_zero() for h in polys[2:])]
