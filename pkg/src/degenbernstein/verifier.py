"""Registry of identities for degenerate Bernstein polynomials and an exact checker.

Each :class:`IdentitySpec` enumerates parameter tuples and builds both sides
of an identity.  The builders take ``(params, x, lam, interpretation)`` and
work on any ring, so the same code yields the symbolic verdict (``x = X``,
``lam = LAM``) and the numeric spot checks (rational ``x`` and ``lam``).

Statements whose free variable ``k`` collides with a summation index are
registered under several interpretations; none of them is preferred.
"""

from __future__ import annotations

import json
import random
import zlib
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Iterator, Optional

from .algebra import LAM, X, as_bipoly
from .bernstein import (
    bernstein,
    bernstein_genfun_coeff,
    connection_stirling_bernoulli,
    falling_expansion,
    oplus_complement,
    ratio_multiplier,
    shifted_degen_factorial,
    three_term_check,
    weighted_sum,
    weighted_sum_closed_form,
)
from .combinatorics import (
    degen_binom,
    degen_falling_factorial,
    degen_stirling2,
    falling_factorial,
    forward_difference_at_zero,
    stirling2_from_series,
)
from .errors import InterpretationError, UnknownIdentityError, VerificationInconsistency

PASS = "PASS"
FAIL = "FAIL"

SPOT_CHECKS = 5

Params = dict
Builder = Callable[[Params, object, object, Optional[str]], object]


@dataclass(frozen=True)
class IdentitySpec:
    id: str
    title: str
    cases: Callable[[int, Optional[str]], Iterator[Params]]
    lhs: Builder
    rhs: Builder
    interpretations: tuple = ()
    # numeric-only identities draw their own sample points inside the builders
    numeric: bool = False

    @property
    def ambiguous(self) -> bool:
        return bool(self.interpretations)


@dataclass(frozen=True)
class Failure:
    params: dict
    difference: str

    def to_dict(self) -> dict:
        return {"params": dict(self.params), "difference": self.difference}


@dataclass(frozen=True)
class VerifyReport:
    id: str
    interpretation: Optional[str]
    checked: int
    status: str
    first_failure: Optional[Failure] = None
    spot_checked: int = field(default=0, compare=False)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "interpretation": self.interpretation,
            "checked": self.checked,
            "status": self.status,
            "first_failure": None if self.first_failure is None else self.first_failure.to_dict(),
        }


def reports_to_json(reports) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2) + "\n"


REPORT_SCHEMA = {
    "type": "object",
    "required": ["id", "interpretation", "checked", "status", "first_failure"],
    "additionalProperties": False,
    "properties": {
        "id": {"type": "string"},
        "interpretation": {"type": ["string", "null"]},
        "checked": {"type": "integer", "minimum": 0},
        "status": {"enum": [PASS, FAIL]},
        "first_failure": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["params", "difference"],
                    "additionalProperties": False,
                    "properties": {
                        "params": {"type": "object", "additionalProperties": {"type": "integer"}},
                        "difference": {"type": "string"},
                    },
                },
            ]
        },
    },
}


# parameter enumerations; n ascending, then k (or i) ascending


def _kn(n_min=0, k_lo=lambda n: 0, k_hi=lambda n: n):
    def cases(n_max, _interp=None):
        for n in range(n_min, n_max + 1):
            for k in range(k_lo(n), k_hi(n) + 1):
                yield {"n": n, "k": k}

    return cases


def _n_only(n_max, _interp=None):
    for n in range(n_max + 1):
        yield {"n": n}


def _in_cases(fixed_i=None):
    """(n, i) with 1 <= i <= n, plus a free shift k in 0..n for ``k:=free``."""

    def cases(n_max, interp=None):
        for n in range(1, n_max + 1):
            irange = [fixed_i] if fixed_i is not None else range(1, n + 1)
            for i in irange:
                if i > n:
                    continue
                if interp == "k:=free":
                    for k in range(n + 1):
                        yield {"n": n, "i": i, "k": k}
                else:
                    yield {"n": n, "i": i}

    return cases


# builders


def _shift_for(p, interp):
    if interp == "k:=i":
        return p["i"]
    if interp == "k:=0":
        return 0
    if interp == "k:=free":
        return p["k"]
    raise InterpretationError(f"no shift for interpretation {interp!r}")


def _weighted_lhs(p, x, lam, interp):
    # both sides are multiplied through by (x (+) (1-x))^(n-i)
    n, i = p["n"], p["i"]
    if interp == "corrected":
        return weighted_sum_closed_form(i, n, x, lam)
    return shifted_degen_factorial(i, _shift_for(p, interp), x, lam) * oplus_complement(n - i, x, lam)


def _weighted_rhs(p, x, lam, interp):
    return weighted_sum(p["i"], p["n"], x, lam)


def _stirling_expansion_lhs(p, x, lam, interp):
    n, i = p["n"], p["i"]
    y = x - _shift_for(p, interp) * lam
    total = 0
    for l in range(i + 1):
        total = total + falling_factorial(y, l) * degen_stirling2(i, l, lam)
    return total * oplus_complement(n - i, x, lam)


def _ratio_lhs(p, x, lam, interp):
    # k * den * B_{k,n} == (n-k+1) * top * B_{k-1,n}, denominators cleared
    n, k = p["n"], p["k"]
    _, den = ratio_multiplier(k, n, x, lam, interp)
    return den * bernstein(k, n, x, lam)


def _ratio_rhs(p, x, lam, interp):
    n, k = p["n"], p["k"]
    num, _ = ratio_multiplier(k, n, x, lam, interp)
    return num * bernstein(k - 1, n, x, lam)


def _triangle_entry(p, x, lam, interp):
    # Thm 2.5 with B_{k,m} = 0 outside 0 <= k <= m
    n, k = p["n"], p["k"]
    left = bernstein(k, n - 1, x, lam) if k <= n - 1 else 0
    right = bernstein(k - 1, n - 1, x, lam) if k >= 1 else 0
    return (1 - x - (n - k - 1) * lam) * left + (x - (k - 1) * lam) * right


def _vandermonde_point(p):
    seed = zlib.crc32(f"eq_6:{p['n']}:{p['trial']}".encode())
    rng = random.Random(seed)
    return tuple(_random_rational(rng) for _ in range(3))


def _vandermonde_lhs(p, x, lam, interp):
    xv, yv, lv = _vandermonde_point(p)
    n = p["n"]
    return sum(
        (degen_binom(yv, m, lv) * degen_binom(xv, n - m, lv) for m in range(n + 1)), Fraction(0)
    )


def _vandermonde_rhs(p, x, lam, interp):
    xv, yv, lv = _vandermonde_point(p)
    return degen_binom(xv + yv, p["n"], lv)


def _vandermonde_cases(n_max, _interp=None):
    for n in range(n_max + 1):
        for trial in range(SPOT_CHECKS):
            yield {"n": n, "trial": trial}


SHIFT_INTERPRETATIONS = ("k:=i", "k:=0", "k:=free")

REGISTRY: dict[str, IdentitySpec] = {}


def register(spec: IdentitySpec) -> IdentitySpec:
    if spec.id in REGISTRY:
        raise ValueError(f"duplicate identity id {spec.id!r}")
    REGISTRY[spec.id] = spec
    return spec


register(IdentitySpec(
    "eq_6", "degenerate Vandermonde convolution at random rational (x, y, lambda)",
    _vandermonde_cases, _vandermonde_lhs, _vandermonde_rhs, numeric=True,
))
register(IdentitySpec(
    "eq_8", "(x (+)_lam (1-x))^n = (1)_{n,lam}",
    _n_only,
    lambda p, x, lam, _: oplus_complement(p["n"], x, lam),
    lambda p, x, lam, _: degen_falling_factorial(1, p["n"], lam) * (0 * x + 1),
))
register(IdentitySpec(
    "eq_28", "Delta^k (0)_{n,lam} / k! equals the series-extracted S_{2,lam}(n,k)",
    _kn(),
    lambda p, x, lam, _: forward_difference_at_zero(p["n"], p["k"], lam) / factorial(p["k"]),
    lambda p, x, lam, _: stirling2_from_series(p["n"], p["k"], lam),
))
register(IdentitySpec(
    "thm_2_1", "generating-function coefficients equal the defining product",
    _kn(),
    lambda p, x, lam, _: bernstein_genfun_coeff(p["k"], p["n"], lam, x),
    lambda p, x, lam, _: bernstein(p["k"], p["n"], x, lam),
))
register(IdentitySpec(
    "thm_2_2", "B_{n-k,n}(x|lam) = B_{k,n}(1-x|lam)",
    _kn(),
    lambda p, x, lam, _: bernstein(p["n"] - p["k"], p["n"], x, lam),
    lambda p, x, lam, _: bernstein(p["k"], p["n"], 1 - x, lam),
))
register(IdentitySpec(
    "thm_2_3", "(n-k) B_{k,n} + (k+1) B_{k+1,n} = (1 + lam(1-n)) B_{k,n-1}",
    _kn(n_min=1, k_hi=lambda n: n - 1),
    lambda p, x, lam, _: three_term_check(p["k"], p["n"], x, lam),
    lambda p, x, lam, _: 0 * x,
))
register(IdentitySpec(
    "eq_15", "(n-k)/n B_{k,n} + (k+1)/n B_{k+1,n} = (1 + lam(1-n)) B_{k,n-1}",
    _kn(n_min=1, k_hi=lambda n: n - 1),
    lambda p, x, lam, _: (
        (p["n"] - p["k"]) * bernstein(p["k"], p["n"], x, lam)
        + (p["k"] + 1) * bernstein(p["k"] + 1, p["n"], x, lam)
    ) / p["n"],
    lambda p, x, lam, _: (1 + lam * (1 - p["n"])) * bernstein(p["k"], p["n"] - 1, x, lam),
))
register(IdentitySpec(
    "thm_2_4", "ratio B_{k,n} / B_{k-1,n}, denominators cleared",
    _kn(n_min=1, k_lo=lambda n: 1),
    _ratio_lhs, _ratio_rhs, interpretations=("printed", "corrected"),
))
register(IdentitySpec(
    "thm_2_5", "two-term recurrence from degree n-1 to n",
    _kn(n_min=1),
    _triangle_entry,
    lambda p, x, lam, _: bernstein(p["k"], p["n"], x, lam),
))
register(IdentitySpec(
    "thm_2_6", "(x - k lam)_{i,lam} (x (+) (1-x))^{n-i} = sum_k C(k,i)/C(n,i) B_{k,n}",
    _in_cases(), _weighted_lhs, _weighted_rhs,
    interpretations=SHIFT_INTERPRETATIONS + ("corrected",),
))
register(IdentitySpec(
    "remark_2", "(x - k lam)(x (+) (1-x))^{n-1} = sum_k (k/n) B_{k,n}",
    _in_cases(fixed_i=1), _weighted_lhs, _weighted_rhs,
    interpretations=SHIFT_INTERPRETATIONS + ("corrected",),
))
register(IdentitySpec(
    "thm_2_7", "B_{k,n} via degenerate Stirling and higher-order degenerate Bernoulli",
    _kn(),
    lambda p, x, lam, _: connection_stirling_bernoulli(p["k"], p["n"], lam, x),
    lambda p, x, lam, _: bernstein(p["k"], p["n"], x, lam),
))
register(IdentitySpec(
    "cor_2_8", "B_{k,n} via Delta^k (0)_{m,lam}/k! and higher-order degenerate Bernoulli",
    _kn(),
    lambda p, x, lam, _: connection_stirling_bernoulli(p["k"], p["n"], lam, x, via="difference"),
    lambda p, x, lam, _: bernstein(p["k"], p["n"], x, lam),
))
register(IdentitySpec(
    "thm_2_9", "(x)_{n,lam} = sum_k (x)_k S_{2,lam}(n,k)",
    _n_only,
    lambda p, x, lam, _: degen_falling_factorial(x, p["n"], lam),
    lambda p, x, lam, _: falling_expansion(p["n"], x, lam),
))
register(IdentitySpec(
    "eq_31", "(x - k lam)_{i,lam} = sum_l (x - k lam)_l S_{2,lam}(i,l) for every k",
    lambda n_max, _=None: (
        {"i": i, "k": k} for i in range(n_max + 1) for k in range(n_max + 1)
    ),
    lambda p, x, lam, _: shifted_degen_factorial(p["i"], p["k"], x, lam),
    lambda p, x, lam, _: falling_expansion(p["i"], x - p["k"] * lam, lam),
))
register(IdentitySpec(
    "thm_2_10", "sum_l (x - k lam)_l S_{2,lam}(i,l) (x (+) (1-x))^{n-i} = sum_k C(k,i)/C(n,i) B_{k,n}",
    _in_cases(), _stirling_expansion_lhs, _weighted_rhs,
    interpretations=SHIFT_INTERPRETATIONS,
))


def _natural_key(identity_id: str):
    parts = identity_id.split("_")
    return tuple((0, int(s), "") if s.isdigit() else (1, 0, s) for s in parts)


def registered_ids() -> list[str]:
    return sorted(REGISTRY, key=_natural_key)


def get_spec(identity_id: str) -> IdentitySpec:
    try:
        return REGISTRY[identity_id]
    except KeyError:
        raise UnknownIdentityError(f"unknown identity {identity_id!r}") from None


def _random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-24, 24), rng.randint(1, 12))


def _spot_check(spec, params, interp, rng) -> int:
    for _ in range(SPOT_CHECKS):
        xv, lv = _random_rational(rng), _random_rational(rng)
        lhs = spec.lhs(params, xv, lv, interp)
        rhs = spec.rhs(params, xv, lv, interp)
        if Fraction(lhs) != Fraction(rhs):
            raise VerificationInconsistency(
                f"{spec.id} {interp} {params}: symbolic PASS but "
                f"lhs={lhs} != rhs={rhs} at x={xv}, lambda={lv}"
            )
    return SPOT_CHECKS


def verify(identity_id: str, n_max: int, interpretation: Optional[str] = None,
           spot_check: bool = True) -> VerifyReport:
    """Check one identity exhaustively over its parameter range up to ``n_max``.

    Every case is compared by exact canonical-polynomial equality.  The first
    failing case in iteration order (n, then k or i, ascending) is kept as
    the counterexample.  When every case passes, each is also evaluated at
    random rational points through the numeric path as a cross-check.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    spec = get_spec(identity_id)
    if spec.ambiguous:
        if interpretation is None:
            raise InterpretationError(
                f"{identity_id} needs an interpretation: {', '.join(spec.interpretations)}"
            )
        if interpretation not in spec.interpretations:
            raise InterpretationError(
                f"{interpretation!r} is not registered for {identity_id}; "
                f"choose from {', '.join(spec.interpretations)}"
            )
    elif interpretation is not None:
        raise InterpretationError(f"{identity_id} takes no interpretation")

    checked = 0
    failure = None
    passed = []
    for params in spec.cases(n_max, interpretation):
        checked += 1
        diff = as_bipoly(spec.lhs(params, X, LAM, interpretation) - spec.rhs(params, X, LAM, interpretation))
        if diff.is_zero():
            passed.append(params)
        elif failure is None:
            failure = Failure(dict(params), diff.to_text())

    status = PASS if failure is None and checked > 0 else FAIL
    spots = 0
    if status == PASS and spot_check and not spec.numeric:
        rng = random.Random(zlib.crc32(f"{identity_id}:{interpretation}".encode()))
        for params in passed:
            spots += _spot_check(spec, params, interpretation, rng)
    return VerifyReport(identity_id, interpretation, checked, status, failure, spots)


def verify_each(identity_id: str, n_max: int, spot_check: bool = True) -> list[VerifyReport]:
    """Run one id; ambiguous ids are run once per registered interpretation."""
    spec = get_spec(identity_id)
    interps = spec.interpretations or (None,)
    return [verify(identity_id, n_max, interp, spot_check) for interp in interps]


def verify_all(n_max: int, spot_check: bool = True) -> list[VerifyReport]:
    reports = []
    for identity_id in registered_ids():
        reports.extend(verify_each(identity_id, n_max, spot_check))
    return reports


__all__ = [
    "FAIL",
    "PASS",
    "REGISTRY",
    "REPORT_SCHEMA",
    "Failure",
    "IdentitySpec",
    "VerifyReport",
    "get_spec",
    "registered_ids",
    "reports_to_json",
    "verify",
    "verify_all",
    "verify_each",
]
