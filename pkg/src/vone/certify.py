"""Existence certificates for v1 self maps of cofibers of virtual G-sets.

A candidate self map of Sigma^V C(X) is certified in three steps after
the parameters (p, n, t, c_X, k, c_V) are derived and the numerical
hypotheses checked:

  1. the restriction of the transfer class to the trivial group is an
     image-of-J element of order exactly p^t (im-J valuation bookkeeping);
  2. the Adams multiplier of theta^ell(V) supplies the divisibility that
     kills the transfer obstruction, and theta^ell(V) - 1 is fixed by
     multiplication with X p-locally;
  3. the Toda-bracket contribution vanishes, either identically or
     because its coefficient 2^(k-n) is even.

Nothing homotopy-theoretic is constructed; the certificate records the
exact arithmetic that the existence argument consumes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .burnside import VirtualGSet, cardinality
from .exactmath import euler_phi, prime_power, pvaluation
from .groups import GroupModel
from .jtheory import (
    AdamsBottReport,
    default_ell,
    imj_valuation,
    verify_adams_bott,
    verify_bott_fixed_mod_X,
)
from .powerop import EtaClass, sq1_int
from .repring import VirtualRep, is_fixed_point_free, standard_rep

__all__ = [
    "SelfMapParameters",
    "HypothesisVerdict",
    "StepOne",
    "StepTwo",
    "StepThree",
    "Certificate",
    "EnumerationRow",
    "QuaternionRow",
    "standardize_rep",
    "derive_parameters",
    "check_hypotheses",
    "certify_self_map",
    "enumerate_5_1",
    "enumerate_quaternion",
]


@dataclass(frozen=True)
class SelfMapParameters:
    """p^t c_X is the virtual cardinality of X; the complex dimension of
    V is p^k c_V (p-1) for odd p and 2^(k-1) c_V at p = 2."""

    p: int
    n: int
    t: int
    c_x: Fraction
    k: int
    c_v: int
    ell: int

    def __post_init__(self):
        if min(self.n, self.t, self.k) < 0:
            raise ValueError("parameters n, t, k must be >= 0")
        cx = Fraction(self.c_x)
        if cx.numerator % self.p == 0 or cx.denominator % self.p == 0:
            raise ValueError("c_X must be a p-local unit")
        if self.c_v % self.p == 0:
            raise ValueError("c_V must be prime to p")
        object.__setattr__(self, "c_x", cx)


@dataclass(frozen=True)
class HypothesisVerdict:
    passed: bool
    clause: str


@dataclass(frozen=True)
class StepOne:
    """Order of the underlying image-of-J class: p^(k+1-t) times a
    generator of order p^(valuation) in degree 4s-1."""

    degree: int
    s: int
    valuation: int
    expected: int
    claimed_order: int
    transfer_exponent: int
    passed: bool
    detail: str


@dataclass(frozen=True)
class StepTwo:
    report: AdamsBottReport | None
    fixedness: bool | None
    passed: bool
    detail: str


@dataclass(frozen=True)
class StepThree:
    sq1: EtaClass | None
    nonzero: bool
    coefficient_exponent: int | None
    passed: bool
    detail: str


@dataclass(frozen=True)
class Certificate:
    group: GroupModel
    X: VirtualGSet
    V: VirtualRep
    ell: int | None
    multiplicity: int | None
    parameters: SelfMapParameters | None
    hypothesis: HypothesisVerdict | None
    step1: StepOne | None
    step2: StepTwo | None
    step3: StepThree | None
    verdict: str  # "certified" | "hypothesis-failed" | "step-failed"
    warnings: tuple


def _group_prime(G: GroupModel) -> tuple[int, int]:
    """(p, n) with |G| = p^n; quaternion groups count as p = 2."""
    pp = prime_power(G.order)
    if pp is None:
        raise ValueError(f"group order {G.order} is not a prime power")
    p, n = pp
    if G.descriptor.kind == "dicyclic" and p != 2:
        raise ValueError("dicyclic groups must be quaternion (order a power of 2)")
    return p, n


def standardize_rep(V: VirtualRep) -> int:
    """Multiplicity of the standard fixed point free representation
    (W for cyclic groups, H for quaternion) that V matches p-locally."""
    if not V.is_honest():
        raise ValueError("standardization applies to honest representations")
    G = V.group
    if not is_fixed_point_free(V):
        raise ValueError("V is not fixed point free")
    if G.descriptor.kind == "cyclic":
        phi = euler_phi(G.order)
    else:
        phi = euler_phi(2 * G.descriptor.m)
    dim = V.dim()
    if dim % phi:
        raise ValueError(f"dimension {dim} is not a multiple of {phi}")
    return dim // phi


def derive_parameters(
    G: GroupModel,
    X: VirtualGSet,
    V: VirtualRep,
    p: int | None = None,
    ell: int | None = None,
) -> SelfMapParameters:
    """Read t, c_X off the virtual cardinality of X and k, c_V off the
    dimension of V."""
    gp, n = _group_prime(G)
    if p is not None and p != gp:
        raise ValueError(f"group {G.descriptor.name} is not a {p}-group")
    p = gp
    card = cardinality(X, p)
    dim = V.dim()
    if dim < 1:
        raise ValueError("V must have positive dimension")
    if p == 2:
        k = pvaluation(dim, 2) + 1
        c_v = dim >> (k - 1)
    else:
        k = pvaluation(dim, p)
        rest = dim // p**k
        if rest % (p - 1):
            raise ValueError(f"dimension {dim} is not p^k*c*(p-1) shaped at p={p}")
        c_v = rest // (p - 1)
    if ell is None:
        ell = default_ell(p)
    return SelfMapParameters(p, n, card.t, card.c, k, c_v, ell)


def check_hypotheses(params: SelfMapParameters) -> HypothesisVerdict:
    """k >= 3 gate at p = 2, then either k+1 >= n+t or the k > n escape
    reserved for (p, t) = (2, 1)."""
    p, n, t, k = params.p, params.n, params.t, params.k
    if p == 2 and k < 3:
        return HypothesisVerdict(False, f"p = 2 requires k >= 3, got k = {k}")
    if (p, t) == (2, 1) and k > n:
        return HypothesisVerdict(True, f"k = {k} > n = {n} with (p, t) = (2, 1)")
    if k + 1 >= n + t:
        return HypothesisVerdict(True, f"k+1 = {k + 1} >= n+t = {n + t}")
    return HypothesisVerdict(
        False, f"k+1 = {k + 1} < n+t = {n + t} and the (p, t) = (2, 1) escape is off"
    )


def _run_step1(params: SelfMapParameters, dim: int) -> StepOne:
    p, t, k = params.p, params.t, params.k
    degree = 2 * dim - 1
    if dim % 2:
        return StepOne(
            degree, 0, -1, k + 1, p**t, k + 1 - params.n - t, False,
            f"degree {degree} is not 4s-1; no image-of-J order to cite",
        )
    s = dim // 2
    v = imj_valuation(s, p).valuation
    ok = v == k + 1 and k + 1 - t >= 0
    if k + 1 - t >= 0:
        order = max(0, v - (k + 1 - t))
        detail = (
            f"generator order p^{v} in degree {degree}; "
            f"p^{k + 1 - t} * j has order p^{order}"
        )
    else:
        detail = f"negative power p^{k + 1 - t} of the generator"
    return StepOne(degree, s, v, k + 1, p**t, k + 1 - params.n - t, ok, detail)


def _run_step2(
    G: GroupModel,
    X: VirtualGSet,
    V_std: VirtualRep,
    params: SelfMapParameters,
    warnings: list,
) -> StepTwo:
    p, n, k, ell = params.p, params.n, params.k, params.ell
    try:
        report = verify_adams_bott(V_std, ell, p=p, n=n, k=k)
    except (ValueError, ArithmeticError) as exc:
        return StepTwo(None, None, False, f"Adams multiplier check failed: {exc}")
    if report.valuation != k + 1 - n:
        warnings.append(
            f"Adams multiplier valuation {report.valuation} differs from the "
            f"expected {k + 1 - n} at ell = {ell}"
        )
    divisible = report.valuation <= k + 1 - n
    if G.descriptor.kind == "cyclic":
        fixedness = verify_bott_fixed_mod_X(V_std, X, ell)
        detail = "theta - 1 generates enough divisibility and is X-fixed p-locally"
        passed = divisible and fixedness
        if not fixedness:
            detail = "theta - 1 is not in the X-multiple ideal p-locally"
    else:
        fixedness = None
        detail = "X-fixedness check runs over cyclic groups only; skipped"
        passed = divisible
    if not divisible:
        detail = (
            f"multiplier valuation {report.valuation} exceeds k+1-n = {k + 1 - n}; "
            "the required power of p is not in the image"
        )
    return StepTwo(report, fixedness, passed, detail)


def _run_step3(params: SelfMapParameters, warnings: list) -> StepThree:
    p, n, t, k = params.p, params.n, params.t, params.k
    card = params.c_x * Fraction(p) ** t
    sq1 = sq1_int(int(card)) if card.denominator == 1 else None
    if p == 2 and t == 0 and params.c_x.denominator == 1 and int(params.c_x) % 4 == 3 and k + 1 == n:
        warnings.append(
            "parameter region p = 2, t = 0, c = 3 mod 4, k+1 = n: the Sq1 class "
            "of the cardinality is eta while the bracket table reports 0"
        )
    if (p, t) == (2, 1):
        passed = k > n
        detail = (
            f"bracket contribution 2^{k - n} * tr(eta * j); "
            + ("even coefficient kills it" if passed else "odd coefficient survives")
        )
        return StepThree(sq1, True, k - n, passed, detail)
    return StepThree(sq1, False, None, True, "bracket contribution is 0")


def certify_self_map(
    G: GroupModel, X: VirtualGSet, V: VirtualRep, ell: int | None = None
) -> Certificate:
    """Assemble the full certificate; failures are structured verdicts,
    never exceptions."""
    warnings: list = []
    try:
        p, n = _group_prime(G)
        mult = standardize_rep(V)
        params = derive_parameters(G, X, V, ell=ell)
    except (ValueError, ArithmeticError) as exc:
        warnings.append(str(exc))
        return Certificate(
            G, X, V, ell, None, None, None, None, None, None,
            "step-failed", tuple(warnings),
        )
    hyp = check_hypotheses(params)
    if G.descriptor.kind == "cyclic":
        V_std = mult * standard_rep(G, "W")
    else:
        V_std = mult * standard_rep(G, "H")
    step1 = _run_step1(params, V.dim())
    step2 = _run_step2(G, X, V_std, params, warnings)
    step3 = _run_step3(params, warnings)
    if not hyp.passed:
        verdict = "hypothesis-failed"
    elif step1.passed and step2.passed and step3.passed:
        verdict = "certified"
        assert step1.transfer_exponent >= 0
    else:
        verdict = "step-failed"
    return Certificate(
        G, X, V, params.ell, mult, params, hyp, step1, step2, step3,
        verdict, tuple(warnings),
    )


@dataclass(frozen=True)
class EnumerationRow:
    """One (s, i, d) cell: X = p^s [G/C_{p^i}] against the p^d-th Bott
    power, judged by both the direct inequality and the derived
    parameters."""

    s: int
    i: int
    d: int
    t: int
    k: int
    verdict: bool
    thm1: bool
    thm511: bool
    consistent: bool


def enumerate_5_1(
    p: int, n: int, mode: str = "thm1", s_max: int = 3, d_max: int = 4
) -> tuple[EnumerationRow, ...]:
    """Sweep s, i, d; the mode picks which verdict column is primary."""
    if mode not in ("thm1", "thm511"):
        raise ValueError(f"unknown mode {mode!r}")
    if p < 2 or n < 1:
        raise ValueError("need a prime p and n >= 1")
    rows = []
    for s in range(s_max + 1):
        for i in range(n + 1):
            for d in range(d_max + 1):
                t = s + n - i
                k = d + n if p == 2 else d + n - 1
                if p == 2:
                    direct = d >= max(1, 3 - n, s + n - i - 1)
                else:
                    direct = d >= s + n - i - 1
                params = SelfMapParameters(p, n, t, Fraction(1), k, 1, default_ell(p))
                derived = check_hypotheses(params).passed
                verdict = derived if mode == "thm1" else direct
                rows.append(
                    EnumerationRow(
                        s, i, d, t, k, verdict, derived, direct, derived == direct
                    )
                )
    return tuple(rows)


@dataclass(frozen=True)
class QuaternionRow:
    """Cardinality class 2^t c: the 2^max(2,t)-th multiple of the
    faithful 2-dimensional family is the certified suspension."""

    t: int
    exponent: int
    multiplicity: int
    parameters: SelfMapParameters
    hypothesis: HypothesisVerdict


def enumerate_quaternion(n: int, t_max: int = 6) -> tuple[QuaternionRow, ...]:
    """Quaternion sweep: for each t the exponent max(2, t) and the
    derived parameters with verdicts."""
    if n < 3:
        raise ValueError("quaternion groups need n >= 3")
    if t_max < 0:
        raise ValueError("t_max must be >= 0")
    rows = []
    for t in range(t_max + 1):
        e = max(2, t)
        # dim of 2^e * Ind(H) = 2^e * 2^(n-2), so k = e + n - 1
        k = e + n - 1
        params = SelfMapParameters(2, n, t, Fraction(1), k, 1, default_ell(2))
        rows.append(QuaternionRow(t, e, 2**e, params, check_hypotheses(params)))
    return tuple(rows)
