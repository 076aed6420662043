"""Groebner-basis kernel and germ-at-origin ideal computations.

Global questions (membership, elimination) run over the polynomial ring with
Buchberger's algorithm.  Local questions at the origin (colength, germ
membership, root orders, radicals) are answered through truncation: the
quotient dimensions of I + m^N are scanned until two consecutive values
agree, which forces m^N into the germ ideal and makes every germ decision a
finite Groebner computation.  Ideals whose colength never stabilizes within
the cap produce flagged reports rather than exceptions.
"""

from __future__ import annotations

import heapq
import itertools
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import ConservativeFallbackWarning, ValidationError
from .poly import (
    INF,
    GR_ONE,
    GaussianRational,
    Mono,
    Polynomial,
    _Infinity,
    _mono_divides,
    monomials_of_degree,
    squarefree_part,
)

DEFAULT_TRUNCATION_CAP = 64
DEFAULT_ROOT_CAP = 32


@dataclass(frozen=True)
class MonomialOrder:
    """Total monomial order: lex or graded-reverse-lex, with a variable permutation."""

    kind: str
    perm: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex"):
            raise ValidationError(f"unknown monomial order kind {self.kind!r}")
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValidationError("perm must be a permutation of variable indices")

    @classmethod
    def grevlex(cls, ring_dim: int, perm: Sequence[int] | None = None) -> "MonomialOrder":
        return cls("grevlex", tuple(perm) if perm else tuple(range(ring_dim)))

    @classmethod
    def lex(cls, ring_dim: int, perm: Sequence[int] | None = None) -> "MonomialOrder":
        return cls("lex", tuple(perm) if perm else tuple(range(ring_dim)))

    @classmethod
    def elimination(cls, ring_dim: int, keep: int) -> "MonomialOrder":
        """Lex order making the kept variable smallest, for elimination."""
        others = tuple(i for i in range(ring_dim) if i != keep)
        return cls.lex(ring_dim, others + (keep,))

    def key(self, mono: Mono) -> tuple:
        permuted = tuple(mono[i] for i in self.perm)
        if self.kind == "lex":
            return permuted
        return (sum(mono), tuple(-e for e in reversed(permuted)))


def leading_mono(p: Polynomial, order: MonomialOrder) -> Mono:
    if p.is_zero():
        raise ValueError("zero polynomial has no leading monomial")
    return max(p.terms, key=order.key)


def order_monic(p: Polynomial, order: MonomialOrder) -> Polynomial:
    if p.is_zero():
        return p
    return p * (GR_ONE / p.terms[leading_mono(p, order)])


def normal_form(f: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    """Remainder of f on division by the list, leading terms first."""
    if f.is_zero() or not basis:
        return f
    leads = [(leading_mono(g, order), g) for g in basis if not g.is_zero()]
    key = order.key
    work = dict(f.terms)
    remainder: dict[Mono, GaussianRational] = {}
    while work:
        mono = max(work, key=key)
        coeff = work.pop(mono)
        for gm, g in leads:
            if _mono_divides(gm, mono):
                scale = coeff / g.terms[gm]
                shift = tuple(a - b for a, b in zip(mono, gm))
                for m2, c2 in g.terms.items():
                    if m2 == gm:
                        continue
                    mm = tuple(a + b for a, b in zip(m2, shift))
                    acc = work.get(mm, None)
                    acc = -scale * c2 if acc is None else acc - scale * c2
                    if acc:
                        work[mm] = acc
                    else:
                        work.pop(mm, None)
                break
        else:
            remainder[mono] = coeff
    return Polynomial(f.ring_dim, remainder)


def _spoly(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    fm = leading_mono(f, order)
    gm = leading_mono(g, order)
    lcm = tuple(max(a, b) for a, b in zip(fm, gm))
    tf = Polynomial(f.ring_dim, {tuple(l - a for l, a in zip(lcm, fm)): GR_ONE / f.terms[fm]})
    tg = Polynomial(g.ring_dim, {tuple(l - b for l, b in zip(lcm, gm)): GR_ONE / g.terms[gm]})
    return tf * f - tg * g


def _interreduce(polys: list[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    monos = [p for p in polys if not p.is_zero() and p.is_monomial()]
    rest = [p for p in polys if not p.is_zero() and not p.is_monomial()]
    # monomials only reduce one another by divisibility, lower degree first
    monos.sort(key=lambda p: sum(next(iter(p.terms))))
    kept_monos: list[Polynomial] = []
    kept_leads: list[Mono] = []
    for p in monos:
        mono = next(iter(p.terms))
        if not any(_mono_divides(lead, mono) for lead in kept_leads):
            kept_monos.append(p)
            kept_leads.append(mono)
    basis = kept_monos + rest
    changed = True
    while changed:
        changed = False
        for i in range(len(kept_monos), len(basis)):
            others = basis[:i] + basis[i + 1 :]
            r = normal_form(basis[i], others, order)
            if r != basis[i]:
                changed = True
                if r.is_zero():
                    basis = others
                    break
                basis = others + [r]
                break
        if changed:
            kept_monos = [p for p in basis if p.is_monomial()]
            basis = kept_monos + [p for p in basis if not p.is_monomial()]
    return [order_monic(p, order) for p in basis]


def _reduced_basis(G: list[Polynomial], order: MonomialOrder) -> tuple[Polynomial, ...]:
    # minimalize, then tail-reduce
    leads = [leading_mono(g, order) for g in G]
    keep = []
    for i in range(len(G)):
        dominated = False
        for j in range(len(G)):
            if j == i or not _mono_divides(leads[j], leads[i]):
                continue
            if leads[j] == leads[i] and j > i:
                continue  # tie between equal leads: earlier entry survives
            dominated = True
            break
        if not dominated:
            keep.append(i)
    minimal = [G[i] for i in keep]
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        reduced.append(order_monic(normal_form(g, others, order), order))
    reduced = [g for g in reduced if not g.is_zero()]
    reduced.sort(key=lambda g: order.key(leading_mono(g, order)))
    return tuple(reduced)


def _groebner_raw(gens: Sequence[Polynomial], order: MonomialOrder) -> tuple[Polynomial, ...]:
    basis = _interreduce([g for g in gens if not g.is_zero()], order)
    if not basis:
        return ()
    leads = [leading_mono(g, order) for g in basis]

    def coprime(i: int, j: int) -> bool:
        return all(a == 0 or b == 0 for a, b in zip(leads[i], leads[j]))

    def skip(i: int, j: int) -> bool:
        # S-polynomials of two monomials vanish identically.
        if basis[i].is_monomial() and basis[j].is_monomial():
            return True
        return coprime(i, j)

    heap: list[tuple[tuple, int, int]] = []
    for i, j in itertools.combinations(range(len(basis)), 2):
        if not skip(i, j):
            lcm = tuple(max(a, b) for a, b in zip(leads[i], leads[j]))
            heapq.heappush(heap, (order.key(lcm), i, j))
    while heap:
        _, i, j = heapq.heappop(heap)
        r = normal_form(_spoly(basis[i], basis[j], order), basis, order)
        if r.is_zero():
            continue
        r = order_monic(r, order)
        basis.append(r)
        leads.append(leading_mono(r, order))
        k = len(basis) - 1
        for i2 in range(k):
            if not skip(i2, k):
                lcm = tuple(max(a, b) for a, b in zip(leads[i2], leads[k]))
                heapq.heappush(heap, (order.key(lcm), i2, k))
    return _reduced_basis(basis, order)


class Ideal:
    """Generator list plus a cache of reduced Groebner bases per order.

    The cache is the only mutable state; concurrent fills race benignly
    because regeneration is deterministic and values are identical.
    """

    __slots__ = ("ring_dim", "generators", "_cache")

    def __init__(self, ring_dim: int, generators: Iterable[Polynomial]):
        gens = []
        for g in generators:
            if g.ring_dim != ring_dim:
                raise ValidationError("generator lives in the wrong ring")
            if not g.is_zero():
                gens.append(g)
        object.__setattr__(self, "ring_dim", ring_dim)
        object.__setattr__(self, "generators", tuple(gens))
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("Ideal is immutable apart from its basis cache")

    @classmethod
    def from_strings(cls, strings: Sequence[str], variables: Sequence[str]) -> "Ideal":
        from .poly import parse

        return cls(len(variables), [parse(s, variables) for s in strings])

    def default_order(self) -> MonomialOrder:
        return MonomialOrder.grevlex(self.ring_dim)

    def groebner(self, order: MonomialOrder | None = None) -> tuple[Polynomial, ...]:
        order = order or self.default_order()
        cached = self._cache.get(order)
        if cached is None:
            cached = _groebner_raw(self.generators, order)
            self._cache[order] = cached
        return cached


def groebner(ideal: Ideal, order: MonomialOrder | None = None) -> tuple[Polynomial, ...]:
    """Reduced Groebner basis, deterministic for fixed input and order."""
    return ideal.groebner(order)


def member(f: Polynomial, ideal: Ideal, order: MonomialOrder | None = None) -> bool:
    """Membership in the polynomial ideal (normal form vanishes)."""
    if f.ring_dim != ideal.ring_dim:
        raise ValidationError("polynomial lives in the wrong ring")
    basis = ideal.groebner(order)
    return normal_form(f, basis, order or ideal.default_order()).is_zero()


def truncated(ideal: Ideal, degree: int) -> Ideal:
    """The ideal plus all monomials of the given total degree."""
    extra = [Polynomial.monomial(m) for m in monomials_of_degree(ideal.ring_dim, degree)]
    return Ideal(ideal.ring_dim, list(ideal.generators) + extra)


def truncated_basis(
    ideal: Ideal, degree: int, order: MonomialOrder | None = None
) -> tuple[Polynomial, ...]:
    """Reduced basis of I + m^degree.

    Each degree-n monomial is congruent mod I to its normal form, so the
    monomial block is pre-reduced against the basis of I before running the
    completion; this keeps the generator count near the staircase size.
    """
    order = order or ideal.default_order()
    base = ideal.groebner(order)
    extra: list[Polynomial] = []
    seen: set[frozenset] = set()
    for mono in monomials_of_degree(ideal.ring_dim, degree):
        reduced = normal_form(Polynomial.monomial(mono), base, order)
        if reduced.is_zero():
            continue
        key = frozenset(reduced.terms.items())
        if key not in seen:
            seen.add(key)
            extra.append(reduced)
    if not extra:
        return base
    return _groebner_raw(list(base) + extra, order)


def _standard_monomial_count(
    basis: Sequence[Polynomial], ring_dim: int, bound: int, order: MonomialOrder
) -> int:
    # leads at or above the bound cannot divide any monomial counted below it
    leads = [lm for lm in (leading_mono(g, order) for g in basis) if sum(lm) < bound]
    count = 0
    for d in range(bound):
        for mono in monomials_of_degree(ring_dim, d):
            if not any(_mono_divides(lm, mono) for lm in leads):
                count += 1
    return count


@dataclass(frozen=True)
class GermReport:
    """Colength of the germ ideal at the origin, via truncation stabilization."""

    colength: int | _Infinity
    stabilization_degree: int | None
    m_primary: bool
    capped: bool
    basis: tuple[Polynomial, ...] | None = field(default=None, repr=False)
    order: MonomialOrder | None = field(default=None, repr=False)

    def to_dict(self) -> dict:
        return {
            "colength": "infinite" if self.colength == INF else self.colength,
            "stabilization_degree": self.stabilization_degree,
            "m_primary": self.m_primary,
            "capped": self.capped,
        }


def germ_colength(ideal: Ideal, cap: int = DEFAULT_TRUNCATION_CAP) -> GermReport:
    """Scan dim R/(I + m^N) for N = 1.. until two consecutive values agree.

    Agreement at (N, N+1) pins the colength: the quotient of consecutive
    truncations is then annihilated by the maximal ideal, so the degree-N
    truncation already contains m^N inside the germ ideal.
    """
    if cap < 2:
        raise ValidationError("truncation cap must be at least 2")
    order = ideal.default_order()
    prev: int | None = None
    prev_basis: tuple[Polynomial, ...] = ()
    for n in range(1, cap + 1):
        basis = truncated_basis(ideal, n, order)
        d = _standard_monomial_count(basis, ideal.ring_dim, n, order)
        if prev is not None and d == prev:
            return GermReport(
                colength=d,
                stabilization_degree=n - 1,
                m_primary=True,
                capped=False,
                basis=prev_basis,
                order=order,
            )
        prev = d
        prev_basis = basis
    return GermReport(
        colength=INF,
        stabilization_degree=None,
        m_primary=False,
        capped=True,
        basis=None,
        order=order,
    )


def germ_member(f: Polynomial, ideal: Ideal, report: GermReport) -> bool:
    """Membership in the germ ideal at the origin.

    Certified in both directions once the colength has stabilized; for
    non-m-primary reports the answer falls back to global membership, which
    can only under-approximate the germ ideal.
    """
    if report.m_primary:
        basis = report.basis
        order = report.order or ideal.default_order()
        if basis is None:
            basis = truncated_basis(ideal, report.stabilization_degree, order)
        return normal_form(f, basis, order).is_zero()
    warnings.warn(
        "germ membership not certified (colength did not stabilize); "
        "falling back to conservative global membership",
        ConservativeFallbackWarning,
        stacklevel=2,
    )
    return member(f, ideal)


def root_order(
    f: Polynomial,
    ideal: Ideal,
    s_max: int = DEFAULT_ROOT_CAP,
    report: GermReport | None = None,
) -> int | None:
    """Minimal s <= s_max with f^s in the germ ideal, else None."""
    if s_max < 1:
        raise ValidationError("root-order cap must be at least 1")
    if report is None:
        report = germ_colength(ideal)
    power = f
    for s in range(1, s_max + 1):
        if germ_member(power, ideal, report):
            return s
        if s < s_max:
            power = power * f
    return None


def _global_root_order(f: Polynomial, ideal: Ideal, s_max: int) -> int | None:
    power = f
    for s in range(1, s_max + 1):
        if member(power, ideal):
            return s
        if s < s_max:
            power = power * f
    return None


def is_germ_unit(ideal: Ideal) -> bool:
    """True iff the germ ideal at the origin is the whole local ring."""
    if not ideal.generators:
        return False
    basis = truncated_basis(ideal, 1)
    return len(basis) == 1 and basis[0].is_constant()


def canonical_generators(
    polys: Iterable[Polynomial], order: MonomialOrder | None = None
) -> tuple[Polynomial, ...]:
    """Monic, de-duplicated, canonically sorted generator list."""
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        return ()
    order = order or MonomialOrder.grevlex(polys[0].ring_dim)
    seen = {}
    for p in polys:
        q = order_monic(p, order)
        key = frozenset(q.terms.items())
        seen.setdefault(key, q)
    out = list(seen.values())
    out.sort(key=lambda p: (order.key(leading_mono(p, order)), sorted(p.terms)))
    return tuple(out)


@dataclass(frozen=True)
class RadicalOutcome:
    """Result of one radical stage: new generators plus root-order bookkeeping."""

    generators: tuple[Polynomial, ...]
    method: str  # principal | m-primary | partial | none
    root_orders: tuple[tuple[Polynomial, int | None], ...]
    stalled: bool
    max_root_order: int
    report: GermReport | None = None


def radical_step(
    ideal: Ideal,
    candidates: Sequence[Polynomial] = (),
    root_cap: int = DEFAULT_ROOT_CAP,
    truncation_cap: int = DEFAULT_TRUNCATION_CAP,
) -> RadicalOutcome:
    """One radical stage, by a three-way strategy.

    Principal ideals take squarefree parts.  Ideals whose colength
    stabilizes have radical equal to the maximal ideal, with per-variable
    root orders recorded.  Otherwise the ideal is enriched by any candidate
    with a bounded global root order; no qualifying candidate is a stall,
    which is reported as data rather than raised.
    """
    n = ideal.ring_dim
    basis = ideal.groebner()
    if not basis:
        return RadicalOutcome((), "none", (), True, 0, None)
    if is_germ_unit(ideal):
        one = Polynomial.constant(n, 1)
        return RadicalOutcome((one,), "none", (), False, 0, None)
    if len(basis) == 1:
        p = basis[0]
        q = squarefree_part(p)
        s = _principal_root_order(p, q, root_cap)
        if s is None:
            return RadicalOutcome(
                ideal.generators, "none", ((q, None),), True, 0, None
            )
        return RadicalOutcome(
            canonical_generators([q]), "principal", ((q, s),), False, s, None
        )
    report = germ_colength(ideal, truncation_cap)
    if report.m_primary:
        gens = tuple(Polynomial.variable(n, i) for i in range(n))
        orders = []
        for g in gens:
            orders.append((g, root_order(g, ideal, root_cap, report)))
        found = [s for _, s in orders if s is not None]
        return RadicalOutcome(
            gens, "m-primary", tuple(orders), False, max(found, default=0), report
        )
    pool = list(candidates)
    for g in ideal.generators:
        pool.append(squarefree_part(g))
    for i in range(n):
        pool.append(Polynomial.variable(n, i))
    adjoin: list[tuple[Polynomial, int]] = []
    seen: set[frozenset] = set()
    for f in pool:
        if f.is_zero() or f.is_constant():
            continue
        key = frozenset(order_monic(f, ideal.default_order()).terms.items())
        if key in seen:
            continue
        seen.add(key)
        if member(f, ideal):
            continue
        s = _global_root_order(f, ideal, root_cap)
        if s is not None:
            adjoin.append((f, s))
    if not adjoin:
        return RadicalOutcome(ideal.generators, "none", (), True, 0, report)
    gens = canonical_generators(list(ideal.generators) + [f for f, _ in adjoin])
    return RadicalOutcome(
        gens,
        "partial",
        tuple(adjoin),
        False,
        max(s for _, s in adjoin),
        report,
    )


def _principal_root_order(p: Polynomial, q: Polynomial, cap: int) -> int | None:
    from .poly import divides

    power = q
    for s in range(1, cap + 1):
        if divides(p, power):
            return s
        if s < cap:
            power = power * q
    return None


def eliminant(ideal: Ideal, var_index: int) -> Polynomial | None:
    """Monic generator of the intersection with one coordinate subring."""
    if not 0 <= var_index < ideal.ring_dim:
        raise ValidationError("variable index out of range")
    if not ideal.generators:
        return None
    order = MonomialOrder.elimination(ideal.ring_dim, var_index)
    basis = ideal.groebner(order)
    hits = [
        g
        for g in basis
        if all(i == var_index or g.degree_in(i) == 0 for i in range(ideal.ring_dim))
    ]
    if not hits:
        return None
    hits.sort(key=lambda g: g.degree_in(var_index))
    return hits[0].monic()
