"""Exact sparse multivariate polynomial arithmetic over the Gaussian rationals.

A polynomial is a map from exponent tuples to coefficients ``a + b*i`` with
``a, b`` arbitrary-precision rationals.  Everything here is exact: there is no
floating-point mode anywhere in the package.  Besides ring arithmetic the
module provides formal differentiation, substitution/composition, order of
vanishing at the origin, maximal minors of polynomial matrices, multivariate
gcd, squarefree parts, and the text grammar used by the CLI:

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' uint)?
    base   := rational | 'i' | var | '(' expr ')'

Whitespace is insignificant.  Printing is canonical (graded-lexicographic,
highest degree first, ties by exponent tuple), so ``parse(print(p)) == p``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import DimensionMismatchError, ParseError, ValidationError

Mono = tuple[int, ...]


class _Infinity:
    """Order of vanishing of the zero polynomial; compares above every int."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return isinstance(other, _Infinity)

    def __hash__(self):
        return hash("submult.INF")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return isinstance(other, _Infinity)

    def __gt__(self, other):
        return not isinstance(other, _Infinity)

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __repr__(self):
        return "Infinity"


INF = _Infinity()


class GaussianRational:
    """Exact complex number a + b*i with rational a, b."""

    __slots__ = ("re", "im")

    def __init__(self, re: int | Fraction = 0, im: int | Fraction = 0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to GaussianRational")

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GaussianRational(other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __add__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussianRational.coerce(other))

    def __rsub__(self, other):
        return GaussianRational.coerce(other) + (-self)

    def __mul__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussianRational.coerce(other)
        norm = other.re * other.re + other.im * other.im
        if norm == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / norm,
            (self.im * other.re - self.re * other.im) / norm,
        )

    def __pow__(self, n: int):
        if n < 0:
            return GaussianRational(1) / self ** (-n)
        out = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def modulus_squared(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __repr__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*i"
        return f"({self.re} + {self.im}*i)" if self.im > 0 else f"({self.re} - {-self.im}*i)"


GR_ZERO = GaussianRational(0)
GR_ONE = GaussianRational(1)
GR_I = GaussianRational(0, 1)


def _grlex_key(mono: Mono) -> tuple:
    return (sum(mono), mono)


class Polynomial:
    """Immutable sparse polynomial in ``ring_dim`` variables.

    ``terms`` maps exponent tuples to nonzero GaussianRational coefficients.
    Instances must not be mutated after construction; every operation returns
    a fresh value, so shared instances are safe to use concurrently.
    """

    __slots__ = ("ring_dim", "terms")

    def __init__(self, ring_dim: int, terms: dict | None = None):
        if ring_dim < 0:
            raise ValueError("ring_dim must be non-negative")
        clean: dict[Mono, GaussianRational] = {}
        for mono, coeff in (terms or {}).items():
            coeff = GaussianRational.coerce(coeff)
            if not coeff:
                continue
            mono = tuple(mono)
            if len(mono) != ring_dim or any(e < 0 for e in mono):
                raise ValueError(f"bad exponent tuple {mono} for ring_dim={ring_dim}")
            clean[mono] = coeff
        object.__setattr__(self, "ring_dim", ring_dim)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, ring_dim: int) -> "Polynomial":
        return cls(ring_dim, {})

    @classmethod
    def constant(cls, ring_dim: int, value) -> "Polynomial":
        return cls(ring_dim, {(0,) * ring_dim: GaussianRational.coerce(value)})

    @classmethod
    def variable(cls, ring_dim: int, index: int) -> "Polynomial":
        if not 0 <= index < ring_dim:
            raise IndexError(f"variable index {index} out of range for ring_dim={ring_dim}")
        mono = tuple(1 if j == index else 0 for j in range(ring_dim))
        return cls(ring_dim, {mono: GR_ONE})

    @classmethod
    def monomial(cls, exponents: Mono, coeff=1) -> "Polynomial":
        return cls(len(exponents), {tuple(exponents): GaussianRational.coerce(coeff)})

    # -- predicates and projections ----------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> GaussianRational:
        return self.terms.get((0,) * self.ring_dim, GR_ZERO)

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def total_degree(self) -> int | _Infinity:
        if not self.terms:
            return INF
        return max(sum(m) for m in self.terms)

    def ord_vanish(self) -> int | _Infinity:
        """Minimal total degree among present monomials; INF for zero."""
        if not self.terms:
            return INF
        return min(sum(m) for m in self.terms)

    def degree_in(self, index: int) -> int:
        if not self.terms:
            return -1
        return max(m[index] for m in self.terms)

    # -- ring arithmetic ----------------------------------------------------

    def _check_dim(self, other: "Polynomial"):
        if self.ring_dim != other.ring_dim:
            raise DimensionMismatchError(
                f"ring dimension mismatch: {self.ring_dim} vs {other.ring_dim}"
            )

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring_dim == other.ring_dim and self.terms == other.terms

    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = Polynomial.constant(self.ring_dim, other)
        self._check_dim(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            acc = out.get(mono, GR_ZERO) + coeff
            if acc:
                out[mono] = acc
            else:
                out.pop(mono, None)
        return Polynomial(self.ring_dim, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring_dim, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = Polynomial.constant(self.ring_dim, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            c = GaussianRational.coerce(other)
            if not c:
                return Polynomial.zero(self.ring_dim)
            return Polynomial(self.ring_dim, {m: v * c for m, v in self.terms.items()})
        self._check_dim(other)
        out: dict[Mono, GaussianRational] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                acc = out.get(mono, GR_ZERO) + c1 * c2
                if acc:
                    out[mono] = acc
                else:
                    out.pop(mono, None)
        return Polynomial(self.ring_dim, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial exponent must be a non-negative integer")
        out = Polynomial.constant(self.ring_dim, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    # -- calculus and substitution ------------------------------------------

    def diff(self, index: int) -> "Polynomial":
        """Formal partial derivative with respect to variable ``index``."""
        if not 0 <= index < self.ring_dim:
            raise IndexError(f"variable index {index} out of range")
        out: dict[Mono, GaussianRational] = {}
        for mono, coeff in self.terms.items():
            e = mono[index]
            if e == 0:
                continue
            new = list(mono)
            new[index] = e - 1
            out[tuple(new)] = coeff * e
        return Polynomial(self.ring_dim, out)

    def gradient(self) -> tuple["Polynomial", ...]:
        return tuple(self.diff(i) for i in range(self.ring_dim))

    def subst(self, index: int, value) -> "Polynomial":
        """Exact substitution of ``value`` (scalar or same-ring polynomial)."""
        if not 0 <= index < self.ring_dim:
            raise IndexError(f"variable index {index} out of range")
        if isinstance(value, (int, Fraction, GaussianRational)):
            value = Polynomial.constant(self.ring_dim, value)
        self._check_dim(value)
        powers: dict[int, Polynomial] = {0: Polynomial.constant(self.ring_dim, 1)}

        def power(k: int) -> Polynomial:
            if k not in powers:
                powers[k] = power(k - 1) * value
            return powers[k]

        out = Polynomial.zero(self.ring_dim)
        for mono, coeff in self.terms.items():
            base = list(mono)
            k = base[index]
            base[index] = 0
            out = out + Polynomial(self.ring_dim, {tuple(base): coeff}) * power(k)
        return out

    def compose(self, args: Sequence["Polynomial"]) -> "Polynomial":
        """Evaluate at an n-tuple of polynomials living in a common ring."""
        if len(args) != self.ring_dim:
            raise DimensionMismatchError(
                f"expected {self.ring_dim} arguments, got {len(args)}"
            )
        if not args:
            return self
        out_dim = args[0].ring_dim
        for a in args:
            if a.ring_dim != out_dim:
                raise DimensionMismatchError("composition arguments live in different rings")
        powers: list[dict[int, Polynomial]] = [
            {0: Polynomial.constant(out_dim, 1)} for _ in args
        ]

        def power(i: int, k: int) -> Polynomial:
            cache = powers[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * args[i]
            return cache[k]

        out = Polynomial.zero(out_dim)
        for mono, coeff in self.terms.items():
            prod = Polynomial.constant(out_dim, coeff)
            for i, e in enumerate(mono):
                if e:
                    prod = prod * power(i, e)
            out = out + prod
        return out

    def lift(self, new_dim: int, var_map: Sequence[int] | None = None) -> "Polynomial":
        """Embed into a larger ring, sending variable i to ``var_map[i]``."""
        if var_map is None:
            var_map = range(self.ring_dim)
        out: dict[Mono, GaussianRational] = {}
        for mono, coeff in self.terms.items():
            new = [0] * new_dim
            for i, e in enumerate(mono):
                new[var_map[i]] += e
            out[tuple(new)] = coeff
        return Polynomial(new_dim, out)

    def conjugate_coeffs(self) -> "Polynomial":
        return Polynomial(self.ring_dim, {m: c.conjugate() for m, c in self.terms.items()})

    def sorted_terms(self) -> list[tuple[Mono, GaussianRational]]:
        """Terms in descending graded-lexicographic order (canonical)."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def leading(self) -> tuple[Mono, GaussianRational]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.sorted_terms()[0]

    def monic(self) -> "Polynomial":
        """Divide by the graded-lex leading coefficient."""
        if not self.terms:
            return self
        _, lc = self.leading()
        return self * (GR_ONE / lc)

    def __repr__(self):
        names = tuple(f"x{i}" for i in range(self.ring_dim))
        return f"Polynomial({format_poly(self, names)})"


def scalar_ratio(a: Polynomial, b: Polynomial) -> GaussianRational | None:
    """Return c with ``a == c*b`` for a nonzero constant c, else None."""
    if a.ring_dim != b.ring_dim:
        return None
    if a.is_zero() or b.is_zero():
        return None
    if set(a.terms) != set(b.terms):
        return None
    mono = next(iter(a.terms))
    c = a.terms[mono] / b.terms[mono]
    for m, coeff in a.terms.items():
        if coeff != c * b.terms[m]:
            return None
    return c


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

_OPS = set("+-*^()")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch in _OPS:
            tokens.append(("op", ch, pos))
            pos += 1
            continue
        if ch.isdigit():
            start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            tokens.append(("num", text[start:pos], start))
            continue
        if ch == "/":
            tokens.append(("op", "/", pos))
            pos += 1
            continue
        if ch.isalpha() or ch == "_":
            start = pos
            while pos < n and (text[pos].isalnum() or text[pos] == "_"):
                pos += 1
            tokens.append(("name", text[start:pos], start))
            continue
        raise ParseError(f"unexpected character {ch!r}", pos)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: Sequence[str]):
        if "i" in variables:
            raise ValidationError("'i' is reserved for the imaginary unit")
        self.tokens = _tokenize(text)
        self.pos = 0
        self.variables = list(variables)
        self.dim = len(variables)

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, value: str):
        kind, val, at = self.peek()
        if kind != "op" or val != value:
            raise ParseError(f"expected {value!r}, found {val or 'end of input'!r}", at)
        return self.advance()

    def parse(self) -> Polynomial:
        poly = self.expr()
        kind, val, at = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected trailing input {val!r}", at)
        return poly

    def expr(self) -> Polynomial:
        sign = 1
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.advance()
            sign = -1 if val == "-" else 1
        poly = self.term() * sign
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.advance()
                rhs = self.term()
                poly = poly + rhs if val == "+" else poly - rhs
            else:
                return poly

    def term(self) -> Polynomial:
        poly = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.advance()
                poly = poly * self.factor()
            else:
                return poly

    def factor(self) -> Polynomial:
        base = self.base()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.advance()
            kind, val, at = self.advance()
            if kind != "num":
                raise ParseError("exponent must be a non-negative integer", at)
            return base ** int(val)
        return base

    def base(self) -> Polynomial:
        kind, val, at = self.advance()
        if kind == "num":
            num = int(val)
            kind2, val2, _ = self.peek()
            if kind2 == "op" and val2 == "/":
                self.advance()
                kind3, val3, at3 = self.advance()
                if kind3 != "num":
                    raise ParseError("expected denominator", at3)
                if int(val3) == 0:
                    raise ParseError("zero denominator", at3)
                return Polynomial.constant(self.dim, Fraction(num, int(val3)))
            return Polynomial.constant(self.dim, num)
        if kind == "name":
            if val == "i":
                return Polynomial.constant(self.dim, GR_I)
            if val in self.variables:
                return Polynomial.variable(self.dim, self.variables.index(val))
            raise ParseError(f"unknown variable {val!r}", at)
        if kind == "op" and val == "(":
            poly = self.expr()
            self.expect(")")
            return poly
        raise ParseError(f"unexpected token {val or 'end of input'!r}", at)


def parse(text: str, variables: Sequence[str]) -> Polynomial:
    """Parse an expression over the named variables into canonical form."""
    return _Parser(text, variables).parse()


# ---------------------------------------------------------------------------
# printing
# ---------------------------------------------------------------------------


def _frac_str(q: Fraction) -> str:
    return str(q)


def _render_coeff(coeff: GaussianRational, has_vars: bool) -> tuple[int, str | None]:
    """Break a coefficient into (sign, text); text None means an implicit 1."""
    re, im = coeff.re, coeff.im
    if im == 0:
        sign = 1 if re > 0 else -1
        mag = abs(re)
        if mag == 1 and has_vars:
            return sign, None
        return sign, _frac_str(mag)
    if re == 0:
        sign = 1 if im > 0 else -1
        mag = abs(im)
        if mag == 1:
            return sign, "i"
        return sign, f"{_frac_str(mag)}*i"
    re_text = _frac_str(re)
    im_mag = abs(im)
    im_text = "i" if im_mag == 1 else f"{_frac_str(im_mag)}*i"
    joiner = " + " if im > 0 else " - "
    return 1, f"({re_text}{joiner}{im_text})"


def format_poly(poly: Polynomial, variables: Sequence[str]) -> str:
    """Canonical text form; inverse of :func:`parse` on canonical strings."""
    if len(variables) != poly.ring_dim:
        raise DimensionMismatchError("variable list does not match ring dimension")
    if poly.is_zero():
        return "0"
    pieces = []
    for mono, coeff in poly.sorted_terms():
        factors = []
        for name, e in zip(variables, mono):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        sign, text = _render_coeff(coeff, bool(factors))
        if text is not None:
            factors.insert(0, text)
        body = "*".join(factors) if factors else "1"
        pieces.append((sign, body))
    sign, body = pieces[0]
    out = ("-" if sign < 0 else "") + body
    for sign, body in pieces[1:]:
        out += (" - " if sign < 0 else " + ") + body
    return out


# ---------------------------------------------------------------------------
# matrices and minors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PolyMatrix:
    """Rectangular matrix of polynomials; rows are candidate allowable rows."""

    rows: tuple[tuple[Polynomial, ...], ...]

    def __post_init__(self):
        if not self.rows:
            raise ValidationError("matrix needs at least one row")
        width = len(self.rows[0])
        dim = self.rows[0][0].ring_dim if width else 0
        for row in self.rows:
            if len(row) != width:
                raise ValidationError("matrix rows have unequal lengths")
            for entry in row:
                if entry.ring_dim != dim:
                    raise DimensionMismatchError("matrix entries live in different rings")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])


def _is_lower_triangular(rows: Sequence[Sequence[Polynomial]]) -> bool:
    return all(rows[i][j].is_zero() for i in range(len(rows)) for j in range(i + 1, len(rows)))


def _is_upper_triangular(rows: Sequence[Sequence[Polynomial]]) -> bool:
    return all(rows[i][j].is_zero() for i in range(len(rows)) for j in range(i))


def det(rows: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Exact determinant; triangular matrices use the diagonal product."""
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ValidationError("determinant requires a non-empty square matrix")
    dim = rows[0][0].ring_dim
    if _is_lower_triangular(rows) or _is_upper_triangular(rows):
        out = Polynomial.constant(dim, 1)
        for i in range(n):
            out = out * rows[i][i]
        return out
    if n == 1:
        return rows[0][0]
    out = Polynomial.zero(dim)
    for i in range(n):
        if rows[i][0].is_zero():
            continue
        minor = [
            [rows[r][c] for c in range(1, n)]
            for r in range(n)
            if r != i
        ]
        term = rows[i][0] * det(minor)
        out = out + (term if i % 2 == 0 else -term)
    return out


def minor_dets(matrix: PolyMatrix) -> list[Polynomial]:
    """Determinants of all maximal square submatrices, in combination order."""
    n = matrix.ncols
    if matrix.nrows < n:
        raise ValidationError(
            f"need at least {n} rows for maximal minors, got {matrix.nrows}"
        )
    return [
        det([matrix.rows[i] for i in combo])
        for combo in itertools.combinations(range(matrix.nrows), n)
    ]


# ---------------------------------------------------------------------------
# division, gcd, squarefree part
# ---------------------------------------------------------------------------


def _mono_divides(a: Mono, b: Mono) -> bool:
    return all(x <= y for x, y in zip(a, b))


def exact_div(f: Polynomial, g: Polynomial) -> Polynomial | None:
    """Quotient f/g when the division is exact, else None."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    f._check_dim(g)
    quotient = Polynomial.zero(f.ring_dim)
    rest = f
    g_mono, g_coeff = g.leading()
    while not rest.is_zero():
        mono, coeff = rest.leading()
        if not _mono_divides(g_mono, mono):
            return None
        t = Polynomial(
            f.ring_dim,
            {tuple(a - b for a, b in zip(mono, g_mono)): coeff / g_coeff},
        )
        quotient = quotient + t
        rest = rest - t * g
    return quotient


def divides(g: Polynomial, f: Polynomial) -> bool:
    return exact_div(f, g) is not None


def _coeff_in(f: Polynomial, var: int, k: int) -> Polynomial:
    """Coefficient of x_var^k, as a polynomial with zero var-exponent."""
    out = {}
    for mono, coeff in f.terms.items():
        if mono[var] == k:
            new = list(mono)
            new[var] = 0
            out[tuple(new)] = coeff
    return Polynomial(f.ring_dim, out)


def _prem(f: Polynomial, g: Polynomial, var: int) -> Polynomial:
    """Pseudo-remainder of f by g with respect to one variable."""
    dg = g.degree_in(var)
    lc_g = _coeff_in(g, var, dg)
    r = f
    while not r.is_zero() and r.degree_in(var) >= dg:
        dr = r.degree_in(var)
        lc_r = _coeff_in(r, var, dr)
        shift = Polynomial.monomial(
            tuple(dr - dg if i == var else 0 for i in range(f.ring_dim))
        )
        r = lc_g * r - lc_r * shift * g
    return r


def _content(f: Polynomial, var: int) -> Polynomial:
    coeffs = [_coeff_in(f, var, k) for k in range(f.degree_in(var) + 1)]
    coeffs = [c for c in coeffs if not c.is_zero()]
    out = coeffs[0]
    for c in coeffs[1:]:
        out = poly_gcd(out, c)
        if out.is_constant():
            break
    return out


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Multivariate gcd over the Gaussian rationals, monic-normalized."""
    f._check_dim(g)
    if f.is_zero():
        return g.monic() if not g.is_zero() else g
    if g.is_zero():
        return f.monic()
    active = [
        v
        for v in range(f.ring_dim)
        if f.degree_in(v) > 0 or g.degree_in(v) > 0
    ]
    if not active:
        return Polynomial.constant(f.ring_dim, 1)
    var = active[-1]
    if f.degree_in(var) == 0 or g.degree_in(var) == 0:
        # One side is free of the main variable: gcd divides its content.
        free, other = (f, g) if f.degree_in(var) == 0 else (g, f)
        return poly_gcd(free, _content(other, var))
    cf, cg = _content(f, var), _content(g, var)
    fp = exact_div(f, cf)
    gp = exact_div(g, cg)
    assert fp is not None and gp is not None
    cont = poly_gcd(cf, cg)
    a, b = fp, gp
    if a.degree_in(var) < b.degree_in(var):
        a, b = b, a
    while not b.is_zero():
        r = _prem(a, b, var)
        if r.is_zero():
            a, b = b, r
            break
        rc = _content(r, var)
        rp = exact_div(r, rc)
        assert rp is not None
        a, b = b, rp
    if a.degree_in(var) == 0:
        return cont.monic()
    ac = _content(a, var)
    ap = exact_div(a, ac)
    assert ap is not None
    return (cont * ap).monic()


def squarefree_part(p: Polynomial) -> Polynomial:
    """Monic generator of the radical of the principal ideal (p)."""
    if p.is_zero():
        raise ValidationError("squarefree part of the zero polynomial is undefined")
    if p.is_constant():
        return Polynomial.constant(p.ring_dim, 1)
    g = p
    for i in range(p.ring_dim):
        d = p.diff(i)
        if d.is_zero():
            continue
        g = poly_gcd(g, d)
        if g.is_constant():
            break
    core = exact_div(p, g)
    assert core is not None, "gcd with derivatives must divide p"
    return core.monic()


def monomials_of_degree(ring_dim: int, degree: int) -> Iterator[Mono]:
    """All exponent tuples of the given total degree, lexicographic order."""

    def rec(prefix: list[int], remaining: int, slots: int) -> Iterator[Mono]:
        if slots == 1:
            yield tuple(prefix + [remaining])
            return
        for e in range(remaining, -1, -1):
            yield from rec(prefix + [e], remaining - e, slots - 1)

    if ring_dim == 0:
        if degree == 0:
            yield ()
        return
    yield from rec([], degree, ring_dim)
