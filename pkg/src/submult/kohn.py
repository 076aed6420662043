"""Multiplier-ideal iteration for special domains.

A special domain is cut out by Re(z_{n+1}) + sum |h_j(z)|^2 with the h_j
holomorphic and vanishing at the origin; after the standard reduction the
whole iteration happens in the n-variable ring.  Each step takes maximal
minors of the accumulated gradient rows, closes the resulting ideal under
the appropriate radical, and appends the gradients of the new generators as
fresh rows.  The run terminates with a unit, a stall, or a step cap, and the
full step-by-step record is kept for serialization.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass

from .errors import CapExceededError, ConsistencyError, ValidationError
from .ideals import (
    DEFAULT_ROOT_CAP,
    DEFAULT_TRUNCATION_CAP,
    Ideal,
    MonomialOrder,
    RadicalOutcome,
    _standard_monomial_count,
    canonical_generators,
    germ_colength,
    is_germ_unit,
    normal_form,
    radical_step,
    root_order,
    truncated_basis,
)
from .poly import INF, Polynomial, PolyMatrix, _Infinity, det, format_poly, minor_dets, parse, scalar_ratio

DEFAULT_MAX_STEPS = 16
DEFAULT_ROW_CAP = 12
_HARD_MINOR_LIMIT = 200_000


@dataclass(frozen=True)
class SpecialDomain:
    """Reduced data of a domain Re(z_{n+1}) + sum |h_j|^2 near the origin."""

    variables: tuple[str, ...]
    h: tuple[Polynomial, ...]
    label: str = ""

    def __post_init__(self):
        if not self.variables:
            raise ValidationError("domain needs at least one variable")
        if not self.h:
            raise ValidationError("domain needs at least one defining function")
        for p in self.h:
            if p.ring_dim != len(self.variables):
                raise ValidationError("defining function lives in the wrong ring")
            if p.is_zero() or p.ord_vanish() < 1:
                raise ValidationError("defining functions must vanish at the origin")

    @property
    def n(self) -> int:
        return len(self.variables)

    @classmethod
    def from_strings(
        cls, h_strings, variables, label: str = ""
    ) -> "SpecialDomain":
        vs = tuple(variables)
        return cls(vs, tuple(parse(s, vs) for s in h_strings), label)

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "variables": list(self.variables),
            "h": [format_poly(p, self.variables) for p in self.h],
        }


@dataclass(frozen=True)
class KohnOptions:
    radical_mode: str = "full"  # full | none
    max_steps: int = DEFAULT_MAX_STEPS
    truncation_cap: int = DEFAULT_TRUNCATION_CAP
    root_cap: int = DEFAULT_ROOT_CAP
    row_cap: int = DEFAULT_ROW_CAP

    def __post_init__(self):
        if self.radical_mode not in ("full", "none"):
            raise ValidationError("radical_mode must be 'full' or 'none'")


@dataclass(frozen=True)
class KohnState:
    """Allowable rows plus the current minor ideal, between steps."""

    rows: PolyMatrix
    multipliers: Ideal
    step_index: int


@dataclass(frozen=True)
class KohnStepRecord:
    J_gens: tuple[Polynomial, ...]
    radical_method: str
    root_orders: tuple[tuple[Polynomial, int | None], ...]
    I_gens: tuple[Polynomial, ...]

    def to_dict(self, variables) -> dict:
        return {
            "J_gens": [format_poly(g, variables) for g in self.J_gens],
            "radical_method": self.radical_method,
            "root_orders": {
                format_poly(g, variables): s for g, s in self.root_orders
            },
            "I_gens": [format_poly(g, variables) for g in self.I_gens],
        }


@dataclass(frozen=True)
class KohnTrace:
    domain: SpecialDomain
    steps: tuple[KohnStepRecord, ...]
    status: str  # unit_reached | stalled | step_cap
    max_root_order: int

    def final_generators(self) -> tuple[Polynomial, ...]:
        return self.steps[-1].I_gens if self.steps else ()

    def to_dict(self) -> dict:
        return {
            "domain": self.domain.to_dict(),
            "steps": [s.to_dict(self.domain.variables) for s in self.steps],
            "status": self.status,
            "max_root_order": self.max_root_order,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"


def _row_is_scalar_multiple(a, b) -> bool:
    ratio = None
    saw_nonzero = False
    for p, q in zip(a, b):
        if p.is_zero() != q.is_zero():
            return False
        if p.is_zero():
            continue
        saw_nonzero = True
        r = scalar_ratio(p, q)
        if r is None:
            return False
        if ratio is None:
            ratio = r
        elif r != ratio:
            return False
    return saw_nonzero


def init_state(domain: SpecialDomain) -> KohnState:
    """Gradient rows of the h_j plus the ideal of their maximal minors."""
    rows = PolyMatrix(tuple(h.gradient() for h in domain.h))
    n = domain.n
    if rows.nrows >= n:
        gens = canonical_generators(minor_dets(rows))
    else:
        gens = ()  # too few rows for any maximal minor
    return KohnState(rows, Ideal(n, gens), 0)


def _enumerate_minors(
    rows: list[tuple[Polynomial, ...]], new_from: int, row_cap: int, n: int
) -> list[Polynomial]:
    total = len(rows)
    if total < n:
        return []
    full = math.comb(total, n)
    if total <= row_cap:
        if full > _HARD_MINOR_LIMIT:
            raise CapExceededError(
                f"{full} row subsets exceed the hard minor limit", cap="row_cap"
            )
        combos = itertools.combinations(range(total), n)
    else:
        # Past the row cap, only subsets touching a new row are enumerated;
        # minors of old rows already sit inside the current multiplier ideal.
        budget = full - math.comb(min(new_from, total), n)
        if budget > _HARD_MINOR_LIMIT:
            raise CapExceededError(
                f"{budget} row subsets exceed the hard minor limit", cap="row_cap"
            )
        combos = (
            c
            for c in itertools.combinations(range(total), n)
            if any(i >= new_from for i in c)
        )
    return [det([rows[i] for i in combo]) for combo in combos]


def step(state: KohnState, options: KohnOptions = KohnOptions()) -> tuple[KohnState, KohnStepRecord]:
    """One iteration: radical of the minor ideal, then new gradient rows."""
    J = state.multipliers
    n = J.ring_dim
    if is_germ_unit(J):
        one = Polynomial.constant(n, 1)
        record = KohnStepRecord(J.generators, "none", (), (one,))
        return KohnState(state.rows, Ideal(n, (one,)), state.step_index + 1), record
    if options.radical_mode == "none":
        outcome = RadicalOutcome(
            canonical_generators(J.generators), "none", (), False, 0, None
        )
    else:
        outcome = radical_step(
            J, root_cap=options.root_cap, truncation_cap=options.truncation_cap
        )
    record = KohnStepRecord(J.generators, outcome.method, outcome.root_orders, outcome.generators)
    rows = list(state.rows.rows)
    new_from = len(rows)
    for g in outcome.generators:
        grad = g.gradient()
        if all(p.is_zero() for p in grad):
            continue
        if any(_row_is_scalar_multiple(grad, r) for r in rows):
            continue
        rows.append(grad)
    minors = _enumerate_minors(rows, new_from, options.row_cap, n)
    next_gens = canonical_generators(list(outcome.generators) + minors)
    next_state = KohnState(
        PolyMatrix(tuple(rows)), Ideal(n, next_gens), state.step_index + 1
    )
    return next_state, record


def run(domain: SpecialDomain, options: KohnOptions = KohnOptions()) -> KohnTrace:
    """Iterate until a unit is reached, the ideal stops growing, or the cap."""
    state = init_state(domain)
    n = domain.n
    order = MonomialOrder.grevlex(n)
    steps: list[KohnStepRecord] = []
    max_root = 0
    status = "step_cap"
    prev_dim: int | None = None
    prev_basis: tuple[Polynomial, ...] | None = None
    for _ in range(options.max_steps):
        J = state.multipliers
        if is_germ_unit(J):
            one = Polynomial.constant(n, 1)
            steps.append(KohnStepRecord(J.generators, "none", (), (one,)))
            status = "unit_reached"
            break
        state, record = step(state, options)
        steps.append(record)
        if options.radical_mode == "full":
            for _, s in record.root_orders:
                if s is not None:
                    max_root = max(max_root, s)
        # Stall detection: the germ ideal stopped growing if the truncated
        # colength is unchanged and no new generator is novel.
        current = Ideal(n, record.I_gens)
        basis = truncated_basis(current, options.truncation_cap, order)
        dim = _standard_monomial_count(basis, n, options.truncation_cap, order)
        if prev_basis is not None and prev_dim == dim:
            novel = any(
                not normal_form(g, prev_basis, order).is_zero()
                for g in record.I_gens
            )
            if not novel:
                status = "stalled"
                break
        prev_dim = dim
        prev_basis = basis
    return KohnTrace(domain, tuple(steps), status, max_root)


@dataclass(frozen=True)
class FiniteTypeReport:
    """Agreement of the three algebraic finite-type conditions."""

    colength: int | _Infinity
    stabilization_degree: int | None
    radical_is_m: bool
    verdict: bool
    capped: bool

    def to_dict(self) -> dict:
        return {
            "colength": "infinite" if self.colength == INF else self.colength,
            "stabilization_degree": self.stabilization_degree,
            "radical_is_m": self.radical_is_m,
            "verdict": self.verdict,
            "capped": self.capped,
        }


def check_finite_type(
    domain: SpecialDomain,
    truncation_cap: int = DEFAULT_TRUNCATION_CAP,
    root_cap: int = DEFAULT_ROOT_CAP,
) -> FiniteTypeReport:
    """Check finite colength, radical equal to m, and point variety together."""
    ideal = Ideal(domain.n, domain.h)
    report = germ_colength(ideal, truncation_cap)
    variables = [Polynomial.variable(domain.n, i) for i in range(domain.n)]
    if report.m_primary:
        orders = [root_order(v, ideal, root_cap, report) for v in variables]
    else:
        from .ideals import _global_root_order

        orders = [_global_root_order(v, ideal, root_cap) for v in variables]
    radical_is_m = all(s is not None for s in orders)
    capped = report.capped or (report.m_primary and not radical_is_m)
    verdict = report.m_primary and radical_is_m
    if not capped and radical_is_m != report.m_primary:
        raise ConsistencyError(
            "finite-type conditions disagree without hitting any cap"
        )
    return FiniteTypeReport(
        colength=report.colength,
        stabilization_degree=report.stabilization_degree,
        radical_is_m=radical_is_m,
        verdict=verdict,
        capped=capped,
    )


def curve_annihilation_check(trace: KohnTrace, curve) -> bool:
    """Does every generator of the stabilized ideal vanish along the curve?

    The curve is an n-tuple of one-variable polynomials through the origin;
    it must lie inside the common zero set of the defining functions.
    """
    domain = trace.domain
    curve = tuple(curve)
    if len(curve) != domain.n:
        raise ValidationError("curve must have one component per variable")
    for c in curve:
        if c.ring_dim != 1:
            raise ValidationError("curve components must be univariate")
        if c.constant_term():
            raise ValidationError("curve must pass through the origin")
    if all(c.is_constant() for c in curve):
        raise ValidationError("curve must be nonconstant")
    for h in domain.h:
        if not h.compose(curve).is_zero():
            raise ValidationError("curve does not lie inside the zero set")
    return all(g.compose(curve).is_zero() for g in trace.final_generators())
