"""Exact arithmetic layer: cyclotomics, Smith form, Bernoulli numbers.

Oracles here are deliberately independent of the implementation: cyclotomic
polynomials are cross-checked by the product formula, Smith invariants by
gcds of minors, Bernoulli denominators by the von Staudt-Clausen theorem.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import comb, gcd, prod

import pytest

from vone.exactmath import (
    CyclotomicElement,
    IntMatrix,
    bernoulli,
    cokernel_data,
    cyclotomic_poly,
    divisors,
    euler_phi,
    factorize,
    invert_unimodular,
    is_prime,
    kernel_basis,
    p_local_in_image,
    prime_power,
    pvaluation,
    smith_normal_form,
    solve_int_columns,
    unit_group_generators,
)


# ---------------------------------------------------------------------------
# number theory helpers


def test_factorize_small() -> None:
    assert factorize(1) == {}
    assert factorize(12) == {2: 2, 3: 1}
    assert factorize(125) == {5: 3}
    assert factorize(97) == {97: 1}


def test_prime_predicates() -> None:
    primes = [p for p in range(2, 60) if is_prime(p)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
    assert prime_power(16) == (2, 4)
    assert prime_power(27) == (3, 3)
    assert prime_power(12) is None
    assert prime_power(1) is None


def test_euler_phi_by_counting() -> None:
    for n in range(1, 80):
        assert euler_phi(n) == sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def test_divisors() -> None:
    assert divisors(1) == [1]
    assert divisors(28) == [1, 2, 4, 7, 14, 28]
    assert divisors(64) == [1, 2, 4, 8, 16, 32, 64]


def test_pvaluation() -> None:
    assert pvaluation(24, 2) == 3
    assert pvaluation(24, 3) == 1
    assert pvaluation(Fraction(9, 8), 2) == -3
    assert pvaluation(Fraction(9, 8), 3) == 2
    with pytest.raises(ValueError):
        pvaluation(0, 2)


# ---------------------------------------------------------------------------
# cyclotomic polynomials


def test_cyclotomic_known_values() -> None:
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(3) == (1, 1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_poly(9) == (1, 0, 0, 1, 0, 0, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)


def test_cyclotomic_product_formula() -> None:
    # prod over d | n of Phi_d(x) must equal x^n - 1
    for n in (1, 2, 6, 8, 12, 20, 24, 36, 48, 60, 64):
        acc = [1]
        for d in divisors(n):
            phi_d = cyclotomic_poly(d)
            nxt = [0] * (len(acc) + len(phi_d) - 1)
            for i, a in enumerate(acc):
                for j, b in enumerate(phi_d):
                    nxt[i + j] += a * b
            acc = nxt
        expect = [-1] + [0] * (n - 1) + [1]
        assert acc == expect


def test_cyclotomic_degree() -> None:
    for n in range(1, 40):
        assert len(cyclotomic_poly(n)) == euler_phi(n) + 1


# ---------------------------------------------------------------------------
# cyclotomic field elements


def test_zeta_order() -> None:
    for n in (3, 4, 5, 8, 12):
        z = CyclotomicElement.zeta(n)
        assert z ** n == 1
        for k in range(1, n):
            assert z ** k != 1


def test_roots_of_unity_sum_to_zero() -> None:
    for n in (2, 3, 4, 6, 8, 9, 12):
        total = CyclotomicElement.zero(n)
        for k in range(n):
            total = total + CyclotomicElement.zeta(n, k)
        assert total == 0


def test_cube_root_norm() -> None:
    z = CyclotomicElement.zeta(3)
    # (1 + z)(1 + z^2) = 1 + z + z^2 + 1 = 1
    assert (1 + z) * (1 + CyclotomicElement.zeta(3, 2)) == 1


def test_mixed_conductor_arithmetic() -> None:
    i = CyclotomicElement.zeta(4)
    z3 = CyclotomicElement.zeta(3)
    w = i * z3
    assert w ** 12 == 1
    assert w ** 6 != 1
    assert w == CyclotomicElement.zeta(12, 7)  # zeta12^3 * zeta12^4


def test_zeta8_squares_to_i() -> None:
    z8 = CyclotomicElement.zeta(8)
    assert z8 * z8 == CyclotomicElement.zeta(4)
    assert z8 ** 4 == -1


def test_galois_action() -> None:
    z5 = CyclotomicElement.zeta(5)
    a = 1 + 2 * z5 + 3 * z5 ** 2
    g2 = a.galois(2)
    assert g2 == 1 + 2 * z5 ** 2 + 3 * z5 ** 4
    # composition: sigma_2 . sigma_3 = sigma_6 = sigma_1
    assert a.galois(2).galois(3) == a
    with pytest.raises(ValueError):
        z5.galois(5)


def test_galois_fixes_rationals_and_norm() -> None:
    rng = random.Random(11)
    for _ in range(20):
        n = rng.choice([3, 4, 5, 7, 8, 9, 12])
        coeffs = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(euler_phi(n))]
        a = CyclotomicElement(n, coeffs)
        norm = CyclotomicElement.one(n)
        for e in range(1, n):
            if gcd(e, n) == 1:
                norm = norm * a.galois(e)
        assert norm.is_rational()


def test_conjugate_real_combination() -> None:
    z = CyclotomicElement.zeta(8)
    real_part = z + z.conjugate()
    assert real_part.galois(3) == -(real_part)  # zeta8 + zeta8^-1 maps to zeta8^3 + zeta8^5
    assert (real_part * real_part).is_rational()
    assert (real_part * real_part).rational_value() == 2


def test_rational_detection() -> None:
    z = CyclotomicElement.zeta(6)
    assert (z + z.galois(5)) == 1  # zeta6 + zeta6^-1 = 1
    assert not z.is_rational()
    assert CyclotomicElement.from_rational(Fraction(7, 3), 12).rational_value() == Fraction(7, 3)


# ---------------------------------------------------------------------------
# Bernoulli numbers


def test_bernoulli_table() -> None:
    table = {
        0: Fraction(1),
        1: Fraction(-1, 2),
        2: Fraction(1, 6),
        4: Fraction(-1, 30),
        6: Fraction(1, 42),
        8: Fraction(-1, 30),
        10: Fraction(5, 66),
        12: Fraction(-691, 2730),
    }
    for n, val in table.items():
        assert bernoulli(n) == val
    for n in (3, 5, 7, 9, 11):
        assert bernoulli(n) == 0


def test_bernoulli_von_staudt_clausen() -> None:
    # denominator of B_2s is the product of primes q with (q - 1) | 2s
    for s in range(1, 31):
        m = 2 * s
        den = prod(q for q in range(2, m + 2) if is_prime(q) and m % (q - 1) == 0)
        assert bernoulli(m).denominator == den


# ---------------------------------------------------------------------------
# Smith normal form


def _check_snf(m: IntMatrix) -> IntMatrix:
    d, u, v = smith_normal_form(m)
    assert u * m * v == d
    assert abs(u.det()) == 1
    assert abs(v.det()) == 1
    diag = d.diag()
    for i in range(d.rows):
        for j in range(d.cols):
            if i != j:
                assert d.entries[i][j] == 0
    assert all(x >= 0 for x in diag)
    for a, b in zip(diag, diag[1:]):
        if a == 0:
            assert b == 0
        elif b:
            assert b % a == 0
    return d


def test_snf_known() -> None:
    d = _check_snf(IntMatrix([[2, 0], [0, 3]]))
    assert d.diag() == [1, 6]
    d = _check_snf(IntMatrix([[2, 4, 4], [-6, 6, 12], [10, 4, 16]]))
    assert d.diag() == [2, 2, 156]
    d = _check_snf(IntMatrix([[0, 0], [0, 0]]))
    assert d.diag() == [0, 0]


def _minors_gcd(m: IntMatrix, k: int) -> int:
    from itertools import combinations

    g = 0
    for rows in combinations(range(m.rows), k):
        for cols in combinations(range(m.cols), k):
            sub = IntMatrix([[m.entries[i][j] for j in cols] for i in rows])
            g = gcd(g, sub.det())
    return g


def test_snf_matches_minor_gcds() -> None:
    rng = random.Random(7)
    for _ in range(12):
        r = rng.randint(1, 4)
        c = rng.randint(1, 4)
        m = IntMatrix([[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)])
        d = _check_snf(m)
        diag = d.diag()
        running = 1
        for k in range(1, min(r, c) + 1):
            gk = _minors_gcd(m, k)
            expect = running * diag[k - 1]
            assert gk == expect  # d_k = gcd(k-minors) / gcd((k-1)-minors)
            running = gk
            if gk == 0:
                break


def test_kernel_basis() -> None:
    m = IntMatrix([[1, 2, 3], [2, 4, 6]])
    basis = kernel_basis(m)
    assert len(basis) == 2
    for vec in basis:
        assert all(
            sum(m.entries[i][j] * vec[j] for j in range(3)) == 0 for i in range(2)
        )
    # saturation: the kernel of [2 4] is generated by (2, -1), not (4, -2)
    basis2 = kernel_basis(IntMatrix([[2, 4]]))
    assert len(basis2) == 1
    assert abs(basis2[0][0] * 1 - basis2[0][1] * -2) in (0, 4)
    assert gcd(*basis2[0]) == 1


def test_solve_int_columns() -> None:
    b = IntMatrix([[2, 0], [0, 3]])
    sol = solve_int_columns(b, IntMatrix([[4], [9]]))
    assert sol is not None
    assert b * sol == IntMatrix([[4], [9]])
    assert solve_int_columns(b, IntMatrix([[1], [0]])) is None
    # inconsistent system
    assert solve_int_columns(IntMatrix([[1], [1]]), IntMatrix([[0], [1]])) is None


def test_invert_unimodular() -> None:
    m = IntMatrix([[2, 1], [1, 1]])
    inv = invert_unimodular(m)
    assert m * inv == IntMatrix.identity(2)
    with pytest.raises(ArithmeticError):
        invert_unimodular(IntMatrix([[2, 0], [0, 1]]))


def test_p_local_membership() -> None:
    m = IntMatrix([[2, 0], [0, 3]])
    # (1, 0) is in the 3-local but not the 2-local span
    assert p_local_in_image(m, [1, 0], 3)
    assert not p_local_in_image(m, [1, 0], 2)
    assert p_local_in_image(m, [Fraction(2, 5), 3], 2)
    # off the column span entirely
    tall = IntMatrix([[1], [0]])
    assert not p_local_in_image(tall, [0, 1], 2)
    assert p_local_in_image(tall, [7, 0], 2)


def test_cokernel_data() -> None:
    free, factors, gens = cokernel_data(IntMatrix([[2, 0], [0, 3]]))
    assert (free, factors) == (0, (6,))
    assert gens is not None and len(gens) == 1

    free, factors, gens = cokernel_data(IntMatrix([[2, 0], [0, 0]]))
    assert (free, factors) == (1, (2,))
    assert gens is not None and len(gens) == 2

    free, factors, _ = cokernel_data(IntMatrix([[1, 0], [0, 1]]))
    assert (free, factors) == (0, ())


def test_cokernel_generators_generate() -> None:
    # Z^2 / <(2,0),(0,4)> = Z/2 + Z/4; generator orders must divide out
    m = IntMatrix([[2, 0], [0, 4]])
    free, factors, gens = cokernel_data(m)
    assert free == 0
    assert factors == (2, 4)
    assert gens is not None
    for order, g in zip(factors, gens):
        scaled = IntMatrix([[order * x] for x in g])
        assert solve_int_columns(m, scaled) is not None


def test_bareiss_det_matches_cofactor() -> None:
    rng = random.Random(3)

    def cofactor_det(rows: list[list[int]]) -> int:
        n = len(rows)
        if n == 1:
            return rows[0][0]
        total = 0
        for j in range(n):
            sub = [r[:j] + r[j + 1 :] for r in rows[1:]]
            total += (-1) ** j * rows[0][j] * cofactor_det(sub)
        return total

    for _ in range(15):
        n = rng.randint(1, 4)
        rows = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
        assert IntMatrix(rows).det() == cofactor_det(rows)


def test_binomial_sum_identity_for_bernoulli() -> None:
    # sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1 (defining recurrence)
    for m in range(1, 20):
        total = sum(comb(m + 1, k) * bernoulli(k) for k in range(m + 1))
        assert total == 0


def test_unit_group_generators() -> None:
    from math import gcd

    for m in (1, 2, 3, 4, 8, 9, 12, 16, 27, 100):
        gens = unit_group_generators(m)
        assert all(gcd(u, m) == 1 for u in gens)
        have = {1 % m}
        frontier = [1 % m]
        while frontier:
            x = frontier.pop()
            for u in gens:
                y = x * u % m
                if y not in have:
                    have.add(y)
                    frontier.append(y)
        units = {u for u in range(m) if gcd(u, m) == 1} or {0}
        assert have == units
