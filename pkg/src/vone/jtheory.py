"""p-primary image-of-J orders and multiplicative Bott classes.

The cannibalistic class theta^ell(V) multiplies eigenvalues z of each group
element through 1 + z + ... + z^(ell-1). For a fixed point free
representation with rational characters the class collapses to
1 + lambda*[regular] with lambda = (ell^dim - 1)/|G|, and the p-adic
valuation of lambda is the quantity the self-map certificates consume.
Everything is exact: integer representation rings, cyclotomic character
values, Bernoulli denominators for the image-of-J oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .burnside import VirtualGSet
from .exactmath import (
    CyclotomicElement,
    IntMatrix,
    bernoulli,
    factorize,
    kernel_basis,
    p_local_in_image,
    prime_power,
    pvaluation,
)
from .repring import (
    VirtualRep,
    character_table,
    eigenvalue_multiplicities,
    from_class_function,
    has_rational_characters,
    is_fixed_point_free,
    linearize,
)

__all__ = [
    "ImJOrder",
    "AdamsBottReport",
    "imj_valuation",
    "imj_order_oracle",
    "default_ell",
    "theta",
    "verify_adams_bott",
    "verify_bott_fixed_mod_X",
]


@dataclass(frozen=True)
class ImJOrder:
    """p-primary order of the image of J in degree 4s-1."""

    degree: int
    p: int
    valuation: int
    order: int | None = None


def imj_valuation(s: int, p: int) -> ImJOrder:
    """v_p of the image-of-J order in degree 4s-1 (Adams):
    p odd: 1 + v_p(2s) when (p-1) | 2s, else 0; p = 2: v_2(4s) + 1."""
    if s < 1:
        raise ValueError("degree parameter s must be >= 1")
    if p == 2:
        v = pvaluation(4 * s, 2) + 1
    elif (2 * s) % (p - 1) == 0:
        v = 1 + pvaluation(2 * s, p)
    else:
        v = 0
    return ImJOrder(4 * s - 1, p, v)


def imj_order_oracle(s: int, bound: int = 50) -> int:
    """Full image-of-J order in degree 4s-1: the denominator of B_{2s}/4s."""
    if s < 1:
        raise ValueError("degree parameter s must be >= 1")
    if s > bound:
        raise ValueError(f"oracle bound {bound} exceeded")
    return (bernoulli(2 * s) / (4 * s)).denominator


def default_ell(p: int) -> int:
    """Adams-operation generator: 3 for p = 2, else the least primitive
    root mod p^2."""
    if p == 2:
        return 3
    m = p * p
    phi = p * (p - 1)
    prime_divs = list(factorize(phi))
    for g in range(2, m):
        if gcd(g, p) != 1:
            continue
        if all(pow(g, phi // q, m) != 1 for q in prime_divs):
            return g
    raise AssertionError("every prime square has a primitive root")


def _q_line(G, a: int, ell: int) -> VirtualRep:
    # theta of the line L^a: 1 + L^a + ... + L^(a(ell-1))
    m = G.order
    vec = [0] * m
    for t in range(ell):
        vec[a * t % m] += 1
    return VirtualRep(G, vec)


def theta(ell: int, V: VirtualRep) -> VirtualRep:
    """Multiplicative Bott class: eigenvalue z of g on V contributes the
    factor 1 + z + ... + z^(ell-1) to the character at g."""
    if ell < 1:
        raise ValueError("theta needs ell >= 1")
    if not V.is_honest():
        raise ValueError("theta is defined on honest representations")
    G = V.group
    if V.is_cyclic_side():
        # group equal multiplicities so high powers run on one base product
        by_count: dict[int, list[int]] = {}
        for a, c in enumerate(V.coeffs):
            if c:
                by_count.setdefault(c, []).append(a)
        out = VirtualRep.trivial(G)
        for c, exps in by_count.items():
            base = VirtualRep.trivial(G)
            for a in exps:
                base = base * _q_line(G, a, ell)
            out = out * base**c
        return out
    table = character_table(G)
    values = []
    for r in table.reps:
        k = G.element_order(r)
        mults = eigenvalue_multiplicities(V, r)
        val = CyclotomicElement.one()
        for j, nj in enumerate(mults):
            if nj:
                fac = CyclotomicElement.from_exponents(
                    k, ((j * t % k, 1) for t in range(ell))
                )
                val = val * fac**nj
        values.append(val)
    return from_class_function(G, values)


@dataclass(frozen=True)
class AdamsBottReport:
    """theta^ell(V) - 1 = lambda * [regular], with the p-valuation of
    lambda compared against the expected k+1-n."""

    V: VirtualRep
    ell: int
    p: int
    n: int
    k: int
    theta: VirtualRep
    lam: int
    valuation: int
    d: Fraction
    matches: bool


def _check_bott_dimension(dim: int, p: int, k: int) -> int:
    """Multiplier c with dim = p^k c (p-1) (p odd) or 2^(k-1) c (p = 2),
    c prime to p; raises when no such c exists."""
    if p == 2:
        denom = 2 ** (k - 1)
    else:
        denom = p**k * (p - 1)
    if denom <= 0 or dim <= 0 or dim % denom:
        raise ValueError(f"dimension {dim} is not p^k*c*(p-1) shaped for p={p}, k={k}")
    c = dim // denom
    if c % p == 0:
        raise ValueError(f"dimension {dim} gives c = {c} divisible by p = {p}")
    return c


def verify_adams_bott(V: VirtualRep, ell: int, p: int, n: int, k: int) -> AdamsBottReport:
    """Check that theta^ell(V) - 1 is the expected multiple of the regular
    representation and report the p-valuation of the multiplier."""
    G = V.group
    if G.descriptor.kind == "cyclic":
        if G.order != p**n:
            raise ValueError(f"group order {G.order} is not {p}^{n}")
    else:
        if p != 2 or G.order != 2**n:
            raise ValueError("dicyclic verification needs p = 2 and |G| = 2^n")
    if gcd(ell, p) != 1:
        raise ValueError("ell must be prime to p")
    if not is_fixed_point_free(V):
        raise ValueError("V must be fixed point free")
    if not has_rational_characters(V):
        raise ValueError("V must have rational characters")
    dim = V.dim()
    _check_bott_dimension(dim, p, k)
    th = theta(ell, V)
    reg = VirtualRep.regular(G)
    lam_frac = Fraction(ell**dim - 1, G.order)
    diff = th - VirtualRep.trivial(G)
    if tuple(lam_frac * c for c in reg.coeffs) != tuple(
        Fraction(c) for c in diff.coeffs
    ):
        raise ArithmeticError("theta(V) - 1 is not the expected regular multiple")
    assert lam_frac.denominator == 1
    lam = int(lam_frac)
    v = pvaluation(lam, p)
    d = Fraction(lam) * Fraction(p) ** (n - k - 1)
    return AdamsBottReport(V, ell, p, n, k, th, lam, v, d, v == k + 1 - n)


def verify_bott_fixed_mod_X(V: VirtualRep, X: VirtualGSet, ell: int) -> bool:
    """Whether theta^ell(V) - 1 lies in the ideal generated by the
    permutation character of X p-locally, and kills its annihilator."""
    G = V.group
    if X.group is not G:
        raise ValueError("V and X live over different groups")
    pp = prime_power(G.order)
    if G.descriptor.kind != "cyclic" or pp is None:
        raise ValueError("the fixedness check runs over cyclic p-groups")
    p = pp[0]
    if not is_fixed_point_free(V) or not has_rational_characters(V):
        raise ValueError("V must be fixed point free with rational characters")
    m = G.order
    diff = theta(ell, V) - VirtualRep.trivial(G)
    w = list(linearize(X).coeffs)
    scale = 1
    for c in w:
        if isinstance(c, Fraction):
            scale = scale * c.denominator // gcd(scale, c.denominator)
    w = [int(c * scale) for c in w]  # p-local unit rescale; same ideal
    M = IntMatrix([[w[(a - b) % m] for b in range(m)] for a in range(m)])
    if not p_local_in_image(M, diff.coeffs, p):
        return False
    zero = VirtualRep.zero(G)
    for vec in kernel_basis(M):
        if diff * VirtualRep(G, vec) != zero:
            return False
    return True
