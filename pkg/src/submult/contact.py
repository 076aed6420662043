"""Order-of-contact arithmetic for curves and families of curves.

Single curves are pulled back exactly as Hermitian polynomials in (zeta,
conj-zeta), so the vanishing order needs no genericity assumptions.  Curve
families carry an extra positive real parameter t; each pulled-back monomial
c * zeta^a * t^b is dominated on the disk |zeta| <= t by t^(a+b), and the
contact order of the family is the least total weight that survives exact
symbolic cancellation.  Exponents of t are exact rationals and may depend
affinely on one free symbol, which is fixed by balancing the two dominant
weight lines.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ConsistencyError, ValidationError
from .ideals import Ideal
from .kohn import SpecialDomain
from .poly import (
    GR_I,
    GR_ONE,
    GaussianRational,
    INF,
    Polynomial,
    _Infinity,
    format_poly,
    parse,
)


@dataclass(frozen=True)
class AmbientDomain:
    """Domain Re(last variable) + sum |h_j|^2, with h_j in all variables."""

    variables: tuple[str, ...]
    h: tuple[Polynomial, ...]

    def __post_init__(self):
        if len(self.variables) < 2:
            raise ValidationError("ambient domain needs at least two variables")
        for p in self.h:
            if p.ring_dim != len(self.variables):
                raise ValidationError("defining function lives in the wrong ring")

    @property
    def dim(self) -> int:
        return len(self.variables)

    @classmethod
    def from_strings(cls, h_strings, variables) -> "AmbientDomain":
        vs = tuple(variables)
        return cls(vs, tuple(parse(s, vs) for s in h_strings))

    @classmethod
    def from_special(cls, domain: SpecialDomain, last_name: str | None = None) -> "AmbientDomain":
        name = last_name or _fresh_name(domain.variables)
        vs = domain.variables + (name,)
        lifted = tuple(p.lift(len(vs)) for p in domain.h)
        return cls(vs, lifted)


def _fresh_name(taken: Sequence[str]) -> str:
    k = len(taken) + 1
    while f"z{k}" in taken:
        k += 1
    return f"z{k}"


@dataclass(frozen=True)
class CurveTerm:
    """One monomial c * zeta^a * t^b of a family component; b may be affine
    in the free exponent: b = t_exp + alpha_coeff * alpha."""

    coeff: GaussianRational
    zeta_exp: int
    t_exp: Fraction
    alpha_coeff: Fraction = Fraction(0)

    def __post_init__(self):
        if not self.coeff:
            raise ValidationError("curve terms must have nonzero coefficients")
        if self.zeta_exp < 0:
            raise ValidationError("zeta exponents must be non-negative")


@dataclass(frozen=True)
class CurveFamily:
    """Components of a family g_t as finite sums of CurveTerm."""

    components: tuple[tuple[CurveTerm, ...], ...]

    def __post_init__(self):
        n = len(self.components)
        if n < 2:
            raise ValidationError("family needs at least two components")
        # the moving base point may only sit in the last component
        for comp in self.components[:-1]:
            for term in comp:
                if term.zeta_exp == 0:
                    raise ValidationError(
                        "constant terms are only allowed in the last component"
                    )
        for term in self.components[-1]:
            if term.zeta_exp == 0 and term.alpha_coeff == 0 and term.t_exp <= 0:
                raise ValidationError(
                    "the moving base point must shrink with t"
                )
        # uniform lower bound on |g_t'(0)|: a t-independent linear term
        if not any(
            term.zeta_exp == 1 and term.t_exp == 0 and term.alpha_coeff == 0
            for comp in self.components
            for term in comp
        ):
            raise ValidationError(
                "some component needs a t-independent linear zeta term"
            )

    @property
    def has_free_exponent(self) -> bool:
        return any(
            term.alpha_coeff != 0 for comp in self.components for term in comp
        )

    def fix_exponent(self, alpha: Fraction) -> "CurveFamily":
        alpha = Fraction(alpha)
        fixed = tuple(
            tuple(
                CurveTerm(t.coeff, t.zeta_exp, t.t_exp + t.alpha_coeff * alpha)
                for t in comp
            )
            for comp in self.components
        )
        return CurveFamily(fixed)

    @classmethod
    def from_config(cls, component_lists) -> "CurveFamily":
        comps = []
        for entries in component_lists:
            terms = []
            for entry in entries:
                coeff = parse(str(entry["coeff"]), []).constant_term()
                tc, ta = _parse_exponent(entry.get("t_exp", 0))
                terms.append(CurveTerm(coeff, int(entry["zeta_exp"]), tc, ta))
            comps.append(tuple(terms))
        return cls(tuple(comps))


def _parse_exponent(value) -> tuple[Fraction, Fraction]:
    """Affine t-exponent: a rational, 'alpha', or e.g. '1/2 - 3*alpha'."""
    if isinstance(value, int):
        return Fraction(value), Fraction(0)
    if isinstance(value, Fraction):
        return value, Fraction(0)
    text = str(value).replace(" ", "")
    if not text:
        raise ValidationError("empty exponent")
    const, slope = Fraction(0), Fraction(0)
    chunk = ""
    pieces = []
    for ch in text:
        if ch in "+-" and chunk:
            pieces.append(chunk)
            chunk = ch
        else:
            chunk += ch
    pieces.append(chunk)
    for piece in pieces:
        sign = 1
        if piece.startswith("+"):
            piece = piece[1:]
        elif piece.startswith("-"):
            sign = -1
            piece = piece[1:]
        if piece.endswith("alpha"):
            head = piece[: -len("alpha")].rstrip("*")
            slope += sign * (Fraction(head) if head else Fraction(1))
        else:
            const += sign * Fraction(piece)
    return const, slope


# ---------------------------------------------------------------------------
# single curves: exact Hermitian pullback
# ---------------------------------------------------------------------------


def contact_curve(
    domain: AmbientDomain,
    curve: Sequence[Polynomial],
    base_point: Sequence[GaussianRational] | None = None,
) -> Fraction | _Infinity:
    """Vanishing order of the pulled-back boundary over that of the curve."""
    n = domain.dim
    curve = tuple(curve)
    if len(curve) != n:
        raise ValidationError("curve must have one component per variable")
    for c in curve:
        if c.ring_dim != 1:
            raise ValidationError("curve components must be univariate")
    base = tuple(
        GaussianRational.coerce(b) for b in (base_point or [c.constant_term() for c in curve])
    )
    if len(base) != n:
        raise ValidationError("base point must have one entry per variable")
    for c, b in zip(curve, base):
        if c.constant_term() != b:
            raise ValidationError("curve is not based at the given point")
    if all(c.is_constant() for c in curve):
        raise ValidationError("curve is constant")
    boundary = base[-1].re + sum(
        (h.compose(curve).constant_term().modulus_squared() for h in domain.h),
        Fraction(0),
    )
    if boundary != 0:
        raise ValidationError("base point is not on the boundary")
    nu_curve = min(
        (c - c.constant_term()).ord_vanish() for c in curve
    )
    # exact real-valued pullback as a polynomial in (zeta, conj zeta)
    last = curve[-1]
    total = (
        last.lift(2, [0]) + last.conjugate_coeffs().lift(2, [1])
    ) * Fraction(1, 2)
    for h in domain.h:
        f = h.compose(curve)
        total = total + f.lift(2, [0]) * f.conjugate_coeffs().lift(2, [1])
    nu_pull = total.ord_vanish()
    if nu_pull == INF:
        return INF
    return Fraction(nu_pull, nu_curve)


# ---------------------------------------------------------------------------
# families: weighted symbolic pullback
# ---------------------------------------------------------------------------

# series over the family algebra: (zeta_exp, t_exp, alpha_coeff) -> coefficient
_FamKey = tuple[int, Fraction, Fraction]


def _series_from_component(comp: Iterable[CurveTerm]) -> dict[_FamKey, GaussianRational]:
    out: dict[_FamKey, GaussianRational] = {}
    for term in comp:
        key = (term.zeta_exp, term.t_exp, term.alpha_coeff)
        acc = out.get(key, None)
        acc = term.coeff if acc is None else acc + term.coeff
        if acc:
            out[key] = acc
        else:
            out.pop(key, None)
    return out


def _series_mul(a: dict, b: dict) -> dict:
    out: dict[_FamKey, GaussianRational] = {}
    for (z1, t1, a1), c1 in a.items():
        for (z2, t2, a2), c2 in b.items():
            key = (z1 + z2, t1 + t2, a1 + a2)
            acc = out.get(key, None)
            prod = c1 * c2
            acc = prod if acc is None else acc + prod
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
    return out


def _series_pow(base: dict, e: int, cache: dict) -> dict:
    if e in cache:
        return cache[e]
    if e == 0:
        out = {(0, Fraction(0), Fraction(0)): GR_ONE}
    else:
        out = _series_mul(_series_pow(base, e - 1, cache), base)
    cache[e] = out
    return out


def _pullback_series(poly: Polynomial, family: CurveFamily) -> dict:
    comps = [_series_from_component(c) for c in family.components]
    caches = [dict() for _ in comps]
    out: dict[_FamKey, GaussianRational] = {}
    for mono, coeff in poly.terms.items():
        piece = {(0, Fraction(0), Fraction(0)): coeff}
        for i, e in enumerate(mono):
            if e:
                piece = _series_mul(piece, _series_pow(comps[i], e, caches[i]))
        for key, c in piece.items():
            acc = out.get(key, None)
            acc = c if acc is None else acc + c
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
    return out


@dataclass(frozen=True)
class ContactResult:
    eta: Fraction | _Infinity
    dominant_terms: tuple[str, ...]
    warnings: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "eta": "infinite" if self.eta == INF else str(self.eta),
            "dominant_terms": list(self.dominant_terms),
            "warnings": list(self.warnings),
            "epsilon_bound": None if self.eta == INF else str(epsilon_bound(self.eta)),
        }


def _weight_lines(domain: AmbientDomain, family: CurveFamily):
    """Candidate weight lines (const, slope, label, tie_warning) per source."""
    if len(family.components) != domain.dim:
        raise ValidationError("family must have one component per variable")
    lines = []
    for j, h in enumerate(domain.h):
        series = _pullback_series(h, family)
        if not series:
            continue
        weights = sorted(
            ((z + tc, ta, z, tc) for (z, tc, ta) in series),
            key=lambda w: (w[0], w[1]),
        )
        # squared modulus doubles every weight
        for const, slope, z, tc in weights:
            lines.append(
                (2 * const, 2 * slope, f"|h{j + 1}|^2: zeta^{z}*t^({tc})", j)
            )
    re_terms = []
    for (z, tc, ta), coeff in _pullback_series_component(family):
        if z >= 1 or coeff.re != 0:
            re_terms.append((Fraction(z) + tc, ta, z, tc))
    for const, slope, z, tc in sorted(re_terms, key=lambda w: (w[0], w[1])):
        lines.append((const, slope, f"Re part: zeta^{z}*t^({tc})", -1))
    return lines


def _pullback_series_component(family: CurveFamily):
    return sorted(
        _series_from_component(family.components[-1]).items(),
        key=lambda kv: (kv[0][0], kv[0][1], kv[0][2]),
    )


def contact_family(domain: AmbientDomain, family: CurveFamily) -> ContactResult:
    """Contact order of a family with a fixed (rational) exponent."""
    if family.has_free_exponent:
        raise ValidationError("fix the free exponent before measuring contact")
    lines = _weight_lines(domain, family)
    if not lines:
        return ContactResult(INF, (), ())
    eta = min(const for const, _, _, _ in lines)
    dominant = tuple(label for const, _, label, _ in lines if const == eta)
    warnings = []
    # flag possible cancellation: several distinct surviving monomials of one
    # squared source sharing its minimal weight
    by_source: dict[int, list[Fraction]] = {}
    for const, _, _, src in lines:
        by_source.setdefault(src, []).append(const)
    for src, weights in sorted(by_source.items()):
        low = min(weights)
        if weights.count(low) > 1:
            name = "Re part" if src == -1 else f"|h{src + 1}|^2"
            warnings.append(
                f"{name} has multiple monomials at its minimal weight {low}; "
                "possible cancellation not resolved"
            )
    if eta <= 0:
        raise ValidationError("family contact order must be positive")
    return ContactResult(eta, dominant, tuple(warnings))


def balance_exponent(domain: AmbientDomain, family: CurveFamily) -> Fraction:
    """The free exponent that equalizes the two dominant weight lines."""
    if not family.has_free_exponent:
        raise ValidationError("family has no free exponent to balance")
    lines = _weight_lines(domain, family)
    distinct = sorted({(const, slope) for const, slope, _, _ in lines})
    if len(distinct) != 2:
        raise ValidationError(
            f"expected exactly two dominant weight lines, found {len(distinct)}"
        )
    (c1, s1), (c2, s2) = distinct
    if s1 == s2:
        raise ValidationError("weight lines are parallel; nothing to balance")
    alpha = Fraction(c2 - c1, s1 - s2)
    if alpha <= 0:
        raise ValidationError("balancing exponent is not positive")
    return alpha


# ---------------------------------------------------------------------------
# sharp contact arithmetic
# ---------------------------------------------------------------------------


def sharp_T(m1: int, m2: int, lam: Fraction) -> Fraction:
    """Closed-form contact order of the tuned two-exponent family."""
    if m1 < 2 or m2 < 2:
        raise ValidationError("both exponents must be at least 2")
    lam = Fraction(lam)
    if not 0 < lam <= 1:
        raise ValidationError("the mixing parameter must lie in (0, 1]")
    return 2 * m1 + Fraction(2 * (1 - lam) * m1 * (m2 - 1), (m2 - 1) * lam + 1)


def sharp_T_limit(m1: int, m2: int) -> Fraction:
    """Limit of the closed form as the mixing parameter tends to zero."""
    if m1 < 2 or m2 < 2:
        raise ValidationError("both exponents must be at least 2")
    return Fraction(2 * m1 * m2)


def two_exponent_domain(m1: int, m2: int, p: int, q: int, variables=("z1", "z2", "z3")) -> AmbientDomain:
    """Domain Re(z3) + |z1^m1 - z3^p z2|^2 + |z2^m2|^2 + |z2 z3^q|^2."""
    vs = tuple(variables)
    z1, z2, z3 = (Polynomial.variable(3, i) for i in range(3))
    return AmbientDomain(vs, (z1 ** m1 - z3 ** p * z2, z2 ** m2, z2 * z3 ** q))


def two_exponent_family(m1: int, p: int) -> CurveFamily:
    """Family (zeta, zeta^m1 / (i t^alpha)^p, i t^alpha) with free alpha."""
    return CurveFamily(
        (
            (CurveTerm(GR_ONE, 1, Fraction(0)),),
            (CurveTerm(GR_I ** (-p), m1, Fraction(0), Fraction(-p)),),
            (CurveTerm(GR_I, 0, Fraction(0), Fraction(1)),),
        )
    )


def sharp_T_via_family(m1: int, m2: int, p: int, q: int) -> Fraction:
    """Contact of the tuned family, cross-checked against the closed form."""
    if p < 1 or q < p:
        raise ValidationError("need 1 <= p <= q so the mixing parameter is in (0, 1]")
    domain = two_exponent_domain(m1, m2, p, q)
    family = two_exponent_family(m1, p)
    alpha = balance_exponent(domain, family)
    result = contact_family(domain, family.fix_exponent(alpha))
    closed = sharp_T(m1, m2, Fraction(p, q))
    if result.eta != closed:
        raise ConsistencyError(
            f"symbolic contact {result.eta} disagrees with closed form {closed}"
        )
    return result.eta


def type_jump_domain(l: int | None = None, m: int | None = None, variables=("z1", "z2", "z3")) -> AmbientDomain:
    """Re(z3) + |z1^2 - z2 z3^l|^2 + |z2^2|^2 (+ |z1 z3^m|^2 when m given)."""
    vs = tuple(variables)
    z1, z2, z3 = (Polynomial.variable(3, i) for i in range(3))
    h = [z1 ** 2 - z2 * (z3 ** (l or 1)), z2 ** 2]
    if m is not None:
        h.append(z1 * z3 ** m)
    return AmbientDomain(vs, tuple(h))


def scaled_jump_family(l: int) -> CurveFamily:
    """Family (zeta, zeta^2 / (i t^alpha)^l, i t^alpha) with free alpha."""
    return CurveFamily(
        (
            (CurveTerm(GR_ONE, 1, Fraction(0)),),
            (CurveTerm(GR_I ** (-l), 2, Fraction(0), Fraction(-l)),),
            (CurveTerm(GR_I, 0, Fraction(0), Fraction(1)),),
        )
    )


def type_bound_check(t_base: Fraction, t_nearby: Fraction, dim: int) -> bool:
    """Nearby contact order against the sharp jump bound t0^(n-1)/2^(n-2)."""
    t_base, t_nearby = Fraction(t_base), Fraction(t_nearby)
    if t_base <= 0 or t_nearby <= 0:
        raise ValidationError("contact orders must be positive")
    if dim < 2:
        raise ValidationError("dimension must be at least 2")
    return t_nearby <= t_base ** (dim - 1) / Fraction(2) ** (dim - 2)


def epsilon_bound(eta: Fraction) -> Fraction:
    """Largest estimate exponent allowed by a family of this contact order."""
    eta = Fraction(eta)
    if eta <= 0:
        raise ValidationError("contact order must be positive")
    return 1 / eta


def ideal_contact_lower_bound(ideal: Ideal, exponent_bound: int = 6) -> Fraction | _Infinity:
    """Diagnostic lower bound for the contact order of an ideal.

    Searches monomial curves t -> (t^{a_1}, ..., t^{a_n}) with exponents up to
    the bound (zero meaning a vanishing component) and maximizes the ratio of
    pullback order to curve order.  Curves inside the zero set give an
    infinite result.  This is only a lower bound: curves with several terms or
    other coefficients are not searched.
    """
    n = ideal.ring_dim
    gens = ideal.generators
    if not gens:
        return INF
    best: Fraction | _Infinity = Fraction(0)
    exponents = range(exponent_bound + 1)
    for combo in _nonzero_tuples(n, exponents):
        nu_curve = min(a for a in combo if a)
        curve = [
            Polynomial.monomial((a,)) if a else Polynomial.zero(1) for a in combo
        ]
        orders = [g.compose(curve).ord_vanish() for g in gens]
        nu_pull = min(orders)
        if nu_pull == INF:
            return INF
        ratio = Fraction(nu_pull, nu_curve)
        if ratio > best:
            best = ratio
    return best


def _nonzero_tuples(n: int, values) -> Iterable[tuple[int, ...]]:
    import itertools

    for combo in itertools.product(values, repeat=n):
        if any(combo):
            yield combo
