"""Exact arithmetic substrate: rationals, cyclotomic numbers, integer
matrices with Smith normal form, and Bernoulli numbers.

Rationals are `fractions.Fraction` throughout and integers are Python ints,
so every computation in this package is exact. An element of Q(zeta_N) is a
coefficient vector over the power basis 1, zeta, ..., zeta^(phi(N)-1),
reduced modulo the N-th cyclotomic polynomial. Nothing here touches
floating point.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import cache
from math import comb, gcd, lcm
from typing import Iterable, Sequence

# Exact rational scalar type used across the package.
Rational = Fraction

__all__ = [
    "Rational",
    "factorize",
    "is_prime",
    "prime_power",
    "euler_phi",
    "divisors",
    "unit_group_generators",
    "pvaluation",
    "cyclotomic_poly",
    "CyclotomicElement",
    "cyc_mul",
    "galois_apply",
    "bernoulli",
    "IntMatrix",
    "smith_normal_form",
    "kernel_basis",
    "solve_int_columns",
    "invert_unimodular",
    "p_local_in_image",
    "cokernel_data",
]


# ---------------------------------------------------------------------------
# number theory scraps


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 by trial division."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, k) with n = p**k and k >= 1, or None."""
    if n < 2:
        return None
    f = factorize(n)
    if len(f) != 1:
        return None
    [(p, k)] = f.items()
    return p, k


@cache
def euler_phi(n: int) -> int:
    phi = n
    for p in factorize(n):
        phi -= phi // p
    return phi


def divisors(n: int) -> list[int]:
    """Positive divisors of n, sorted increasingly."""
    if n < 1:
        raise ValueError("divisors expects a positive integer")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@cache
def unit_group_generators(m: int) -> tuple[int, ...]:
    """Greedy generating set of the multiplicative group (Z/m)^x."""
    if m < 1:
        raise ValueError("modulus must be >= 1")
    if m <= 2:
        return ()
    gens: list[int] = []
    have = {1}
    for u in range(2, m):
        if gcd(u, m) == 1 and u not in have:
            gens.append(u)
            have = {1}
            work = [1]
            while work:
                x = work.pop()
                for g in gens:
                    y = x * g % m
                    if y not in have:
                        have.add(y)
                        work.append(y)
    return tuple(gens)


def pvaluation(x: int | Fraction, p: int) -> int:
    """p-adic valuation of a nonzero integer or rational."""
    if p < 2:
        raise ValueError("valuation needs p >= 2")
    if isinstance(x, Fraction):
        if x == 0:
            raise ValueError("valuation of zero is undefined")
        return pvaluation(x.numerator, p) - pvaluation(x.denominator, p)
    x = int(x)
    if x == 0:
        raise ValueError("valuation of zero is undefined")
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


# ---------------------------------------------------------------------------
# integer polynomials (coefficient tuples, constant term first)


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_div_exact(num: Sequence[int], den: Sequence[int]) -> list[int]:
    # den must be monic and divide num exactly
    num = list(num)
    dd = len(den) - 1
    q = [0] * (len(num) - dd)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + dd]
        q[i] = c
        if c:
            for j in range(dd + 1):
                num[i + j] -= c * den[j]
    if any(num[:dd]):
        raise ArithmeticError("inexact polynomial division")
    return q


@cache
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, constant term first.

    Computed by dividing x^n - 1 by the product of Phi_d over proper
    divisors d of n; monic of degree phi(n).
    """
    if n < 1:
        raise ValueError("cyclotomic_poly expects n >= 1")
    if n == 1:
        return (-1, 1)
    num = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        num = _poly_div_exact(num, cyclotomic_poly(d))
    return tuple(num)


@cache
def _zeta_powers(n: int) -> tuple[tuple[int, ...], ...]:
    """x^k mod Phi_n for 0 <= k < n, as integer vectors of length phi(n)."""
    phi = euler_phi(n)
    mod = cyclotomic_poly(n)
    rows = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        top = cur[phi - 1]
        cur = [(cur[i - 1] if i else 0) - top * mod[i] for i in range(phi)]
    return tuple(rows)


def _reduce_mod_phi(vals: list, n: int) -> list:
    phi = euler_phi(n)
    mod = cyclotomic_poly(n)
    for d in range(len(vals) - 1, phi - 1, -1):
        c = vals[d]
        if c:
            vals[d] = 0
            off = d - phi
            for i in range(phi):
                vals[off + i] -= c * mod[i]
    vals = vals[:phi]
    while len(vals) < phi:
        vals.append(0)
    return vals


class CyclotomicElement:
    """An element of Q(zeta_N) in the power basis modulo Phi_N.

    The conductor N is part of the value; mixed-conductor arithmetic
    promotes both operands to the least common multiple. Rationals embed
    at any conductor as constant vectors, and the representation over the
    power basis is unique, so equality and rationality tests are exact.
    """

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs: Iterable):
        if conductor < 1:
            raise ValueError("conductor must be >= 1")
        vec = [Fraction(c) for c in coeffs]
        phi = euler_phi(conductor)
        if len(vec) > phi:
            raise ValueError("coefficient vector longer than phi(N)")
        vec.extend([Fraction(0)] * (phi - len(vec)))
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", tuple(vec))

    def __setattr__(self, *a):
        raise AttributeError("CyclotomicElement is immutable")

    # -- constructors

    @classmethod
    def from_rational(cls, q, conductor: int = 1) -> "CyclotomicElement":
        vec = [Fraction(q)]
        return cls(conductor, vec)

    @classmethod
    def zeta(cls, conductor: int, power: int = 1) -> "CyclotomicElement":
        row = _zeta_powers(conductor)[power % conductor]
        return cls(conductor, row)

    @classmethod
    def from_exponents(cls, conductor: int, pairs) -> "CyclotomicElement":
        """Sum of coeff * zeta^exponent over (exponent, coeff) pairs."""
        table = _zeta_powers(conductor)
        phi = euler_phi(conductor)
        acc = [Fraction(0)] * phi
        for e, c in pairs:
            if c:
                row = table[e % conductor]
                for i in range(phi):
                    if row[i]:
                        acc[i] += c * row[i]
        return cls(conductor, acc)

    @classmethod
    def zero(cls, conductor: int = 1) -> "CyclotomicElement":
        return cls(conductor, ())

    @classmethod
    def one(cls, conductor: int = 1) -> "CyclotomicElement":
        return cls.from_rational(1, conductor)

    # -- conductor bookkeeping

    def in_conductor(self, m: int) -> "CyclotomicElement":
        """Rewrite over Q(zeta_m); requires conductor | m."""
        n = self.conductor
        if m == n:
            return self
        if m % n:
            raise ValueError("can only promote to a multiple of the conductor")
        step = m // n
        table = _zeta_powers(m)
        phi = euler_phi(m)
        acc = [Fraction(0)] * phi
        for k, c in enumerate(self.coeffs):
            if c:
                row = table[(k * step) % m]
                for i in range(phi):
                    if row[i]:
                        acc[i] += c * row[i]
        return CyclotomicElement(m, acc)

    @staticmethod
    def _pair(a, b):
        if not isinstance(b, CyclotomicElement):
            b = CyclotomicElement.from_rational(b, a.conductor)
        m = lcm(a.conductor, b.conductor)
        return a.in_conductor(m), b.in_conductor(m)

    # -- ring operations

    def __add__(self, other):
        if not isinstance(other, (CyclotomicElement, int, Fraction)):
            return NotImplemented
        a, b = self._pair(self, other)
        return CyclotomicElement(a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement(self.conductor, [-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, (CyclotomicElement, int, Fraction)):
            return NotImplemented
        return self + (-other if isinstance(other, CyclotomicElement) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CyclotomicElement(self.conductor, [c * q for c in self.coeffs])
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        a, b = self._pair(self, other)
        n = a.conductor
        av, bv = a.coeffs, b.coeffs
        if all(c.denominator == 1 for c in av) and all(c.denominator == 1 for c in bv):
            # integer fast path; reduction stays integral since Phi is monic
            prod = _poly_mul([c.numerator for c in av], [c.numerator for c in bv])
            red = _reduce_mod_phi(prod, n)
            return CyclotomicElement(n, red)
        prod2 = [Fraction(0)] * (2 * len(av) - 1)
        for i, x in enumerate(av):
            if x:
                for j, y in enumerate(bv):
                    if y:
                        prod2[i + j] += x * y
        return CyclotomicElement(n, _reduce_mod_phi(prod2, n))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not supported")
        out = CyclotomicElement.one(self.conductor)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        a, b = self._pair(self, other)
        return a.coeffs == b.coeffs

    __hash__ = None  # promotion-based equality; not usable as dict keys

    # -- structure

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational value")
        return self.coeffs[0]

    def galois(self, e: int) -> "CyclotomicElement":
        """Apply the automorphism zeta -> zeta^e; needs gcd(e, N) = 1."""
        n = self.conductor
        e %= n
        if gcd(e, n) != 1:
            raise ValueError(f"{e} is not a unit modulo {n}")
        table = _zeta_powers(n)
        phi = euler_phi(n)
        acc = [Fraction(0)] * phi
        for k, c in enumerate(self.coeffs):
            if c:
                row = table[(e * k) % n]
                for i in range(phi):
                    if row[i]:
                        acc[i] += c * row[i]
        return CyclotomicElement(n, acc)

    def conjugate(self) -> "CyclotomicElement":
        if self.conductor <= 2:
            return self
        return self.galois(self.conductor - 1)

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                z = f"z{self.conductor}" + (f"^{k}" if k > 1 else "")
                terms.append(z if c == 1 else f"{c}*{z}")
        return " + ".join(terms) if terms else "0"


def cyc_mul(a: CyclotomicElement, b: CyclotomicElement) -> CyclotomicElement:
    """Product in the smallest common cyclotomic field."""
    return a * b


def galois_apply(a: CyclotomicElement, e: int) -> CyclotomicElement:
    return a.galois(e)


# ---------------------------------------------------------------------------
# Bernoulli numbers

# Convention B_1 = -1/2, so B_2 = 1/6, B_4 = -1/30, ...  The cache is grown
# under a lock so concurrent readers are safe.
_bern_lock = threading.Lock()
_bern: list[Fraction] = [Fraction(1), Fraction(-1, 2)]


def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number B_n via the defining recurrence."""
    if n < 0:
        raise ValueError("bernoulli expects n >= 0")
    with _bern_lock:
        while len(_bern) <= n:
            m = len(_bern)
            acc = Fraction(0)
            for k in range(m):
                if _bern[k]:
                    acc += comb(m + 1, k) * _bern[k]
            _bern.append(-acc / (m + 1))
        return _bern[n]


# ---------------------------------------------------------------------------
# integer matrices and Smith normal form


class IntMatrix:
    """Immutable integer matrix."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        if not rows:
            raise ValueError("IntMatrix needs at least one row")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        if width == 0:
            raise ValueError("IntMatrix needs at least one column")
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, *a):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> "IntMatrix":
        cols = [list(c) for c in columns]
        return cls([[cols[j][i] for j in range(len(cols))] for i in range(len(cols[0]))])

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self.entries))

    def __mul__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        bt = list(zip(*other.entries))
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in bt] for row in self.entries]
        )

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.entries]})"

    def diag(self) -> list[int]:
        return [self.entries[i][i] for i in range(min(self.rows, self.cols))]

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        m = [list(r) for r in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k]:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]


def smith_normal_form(mat: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (D, U, V) with U*mat*V = D, U and V unimodular, and D diagonal
    with nonnegative entries d1 | d2 | ...

    Elementary row and column operations only; pivots are chosen by minimal
    absolute value, which keeps intermediate entries tame at the sizes used
    here.
    """
    r, c = mat.rows, mat.cols
    a = [list(row) for row in mat.entries]
    u = [[int(i == j) for j in range(r)] for i in range(r)]
    v = [[int(i == j) for j in range(c)] for i in range(c)]

    def row_addmul(i, j, q):
        ai, aj = a[i], a[j]
        for x in range(c):
            ai[x] += q * aj[x]
        ui, uj = u[i], u[j]
        for x in range(r):
            ui[x] += q * uj[x]

    def col_addmul(i, j, q):
        for row in a:
            row[i] += q * row[j]
        for row in v:
            row[i] += q * row[j]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def col_swap(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def row_negate(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    m = min(r, c)
    for t in range(m):
        best = None
        for i in range(t, r):
            for j in range(t, c):
                mag = abs(a[i][j])
                if mag and (best is None or mag < best[0]):
                    best = (mag, i, j)
        if best is None:
            break
        _, pi, pj = best
        if pi != t:
            row_swap(t, pi)
        if pj != t:
            col_swap(t, pj)
        while True:
            if a[t][t] < 0:
                row_negate(t)
            dirty = False
            for i in range(r):
                if i == t or a[i][t] == 0:
                    continue
                q, rem = divmod(a[i][t], a[t][t])
                row_addmul(i, t, -q)
                if rem:
                    row_swap(i, t)
                    dirty = True
                    break
            if dirty:
                continue
            for j in range(c):
                if j == t or a[t][j] == 0:
                    continue
                q, rem = divmod(a[t][j], a[t][t])
                col_addmul(j, t, -q)
                if rem:
                    col_swap(j, t)
                    dirty = True
                    break
            if dirty:
                continue
            # pivot row and column are clear; enforce divisibility
            bad = None
            for i in range(t + 1, r):
                ai = a[i]
                for j in range(t + 1, c):
                    if ai[j] % a[t][t]:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_addmul(t, bad, 1)
    return IntMatrix(a), IntMatrix(u), IntMatrix(v)


def _snf_rank(d: IntMatrix) -> int:
    return sum(1 for x in d.diag() if x)


def kernel_basis(mat: IntMatrix) -> list[tuple[int, ...]]:
    """Basis of the integer kernel lattice {x : mat*x = 0}.

    Columns of V beyond the rank of the Smith form give a saturated basis.
    """
    d, _, v = smith_normal_form(mat)
    rank = _snf_rank(d)
    return [v.column(j) for j in range(rank, mat.cols)]


def solve_int_columns(b: IntMatrix, target: IntMatrix) -> IntMatrix | None:
    """Solve b * Y = target over the integers; None if unsolvable."""
    if b.rows != target.rows:
        raise ValueError("shape mismatch")
    d, u, v = smith_normal_form(b)
    rank = _snf_rank(d)
    ut = u * target
    z = [[0] * target.cols for _ in range(b.cols)]
    for i in range(b.rows):
        di = d.entries[i][i] if i < min(b.rows, b.cols) else 0
        for j in range(target.cols):
            val = ut.entries[i][j]
            if i < rank:
                q, rem = divmod(val, di)
                if rem:
                    return None
                z[i][j] = q
            elif val:
                return None
    return v * IntMatrix(z)


def invert_unimodular(m: IntMatrix) -> IntMatrix:
    """Exact inverse of a unimodular integer matrix."""
    inv = solve_int_columns(m, IntMatrix.identity(m.rows))
    if inv is None:
        raise ArithmeticError("matrix is not unimodular")
    return inv


def p_local_in_image(mat: IntMatrix, vec: Sequence, p: int) -> bool:
    """Whether vec lies in the Z_(p)-span of the columns of mat.

    vec may have Fraction entries whose denominators are prime to p.
    """
    d, u, _ = smith_normal_form(mat)
    rank = _snf_rank(d)
    y = [sum(Fraction(u.entries[i][j]) * Fraction(vec[j]) for j in range(mat.rows))
         for i in range(mat.rows)]
    for i in range(mat.rows):
        if i < rank:
            if y[i] == 0:
                continue
            if pvaluation(y[i], p) < pvaluation(d.entries[i][i], p):
                return False
        elif y[i] != 0:
            return False
    return True


def cokernel_data(
    mat: IntMatrix, with_generators: bool = True
) -> tuple[int, tuple[int, ...], tuple[tuple[int, ...], ...] | None]:
    """Invariant factors of Z^rows / column-span(mat).

    Returns (free_rank, factors > 1 in divisibility order, generators).
    Generators are ambient coordinate vectors: one per listed factor, then
    one per free summand.
    """
    d, u, _ = smith_normal_form(mat)
    diag = d.diag()
    rank = sum(1 for x in diag if x)
    factors = tuple(x for x in diag if x > 1)
    free_rank = mat.rows - rank
    gens = None
    if with_generators:
        uinv = invert_unimodular(u)
        cols = []
        for i, x in enumerate(diag):
            if x > 1:
                cols.append(uinv.column(i))
        for i in range(mat.rows):
            di = diag[i] if i < len(diag) else 0
            if di == 0:
                cols.append(uinv.column(i))
        gens = tuple(cols)
    return free_rank, factors, gens
