"""The representation ring RU(G): virtual characters with exact cyclotomic
values, Adams operations, linearization from the Burnside ring, and the
annihilator/quotient presentations of principal ideals.

Cyclic groups use the concrete form Z[L]/(L^m - 1): a virtual representation
is a coefficient vector indexed by the exponent of L, and multiplication is
cyclic convolution. Dicyclic groups work over the irreducible basis with
cached structure constants from the exact character table. Coefficients may
be p-local rationals under the same flag discipline as virtual G-sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .burnside import VirtualGSet, bmul, marks, orbit
from .exactmath import (
    CyclotomicElement,
    IntMatrix,
    cokernel_data,
    kernel_basis,
    prime_power,
)
from .groups import GroupModel

__all__ = [
    "CharacterTable",
    "VirtualRep",
    "GammaOrbitBasis",
    "AbelianPresentation",
    "IdealStructure",
    "character_table",
    "from_class_function",
    "standard_rep",
    "adams",
    "linearize",
    "is_fixed_point_free",
    "has_rational_characters",
    "fixed_space_dim",
    "eigenvalue_multiplicities",
    "gamma_orbit_basis",
    "gamma_fixed_check",
    "annihilator_and_quotient",
]


class CharacterTable:
    """Irreducible characters as exact cyclotomic class functions."""

    def __init__(self, group: GroupModel):
        self.group = group
        self.classes = group.element_conjugacy_classes()
        self.sizes = tuple(len(c) for c in self.classes)
        self.reps = tuple(c[0] for c in self.classes)
        class_of = {}
        for k, cls in enumerate(self.classes):
            for g in cls:
                class_of[g] = k
        self.class_of_element = tuple(class_of[g] for g in range(group.order))
        if group.descriptor.kind == "cyclic":
            m = group.order
            self.rows = tuple(
                tuple(CyclotomicElement.zeta(m, a * b % m) for b in range(m))
                for a in range(m)
            )
            self.dims = (1,) * m
            self.names = tuple(_line_name(a) for a in range(m))
        else:
            self.rows, self.dims, self.names = _dicyclic_table(group, self)
        self._mul_cache: dict[tuple[int, int], tuple] = {}
        self._power_maps: dict[int, tuple] = {}

    def value(self, row: int, g: int) -> CyclotomicElement:
        return self.rows[row][self.class_of_element[g]]

    def decompose(self, values, p_local: int | None = None) -> tuple:
        """Inner products against each irreducible; errors if not a virtual
        character (or not p-locally integral under the flag)."""
        n = self.group.order
        out = []
        for row in self.rows:
            acc = CyclotomicElement.zero(1)
            for size, val, chi in zip(self.sizes, values, row):
                acc = acc + val * chi.conjugate() * size
            if not acc.is_rational():
                raise ArithmeticError("class function is not rational over the irreducibles")
            q = acc.rational_value() / n
            out.append(q)
        return tuple(out)

    def product_coeffs(self, i: int, j: int) -> tuple:
        """chi_i * chi_j in the irreducible basis (cached)."""
        key = (i, j) if i <= j else (j, i)
        if key not in self._mul_cache:
            vals = [a * b for a, b in zip(self.rows[key[0]], self.rows[key[1]])]
            coeffs = self.decompose(vals)
            assert all(c.denominator == 1 for c in coeffs)
            self._mul_cache[key] = tuple(int(c) for c in coeffs)
        return self._mul_cache[key]

    def power_class_map(self, ell: int) -> tuple:
        """Class index of r^ell for each class representative r."""
        if ell not in self._power_maps:
            g = self.group
            self._power_maps[ell] = tuple(
                self.class_of_element[g.power(r, ell)] for r in self.reps
            )
        return self._power_maps[ell]


def _line_name(a: int) -> str:
    if a == 0:
        return "1"
    if a == 1:
        return "L"
    return f"L^{a}"


def _dicyclic_table(group: GroupModel, table: CharacterTable):
    m = group.descriptor.m
    two_m = 2 * m
    reps = table.reps
    rows = []
    names = []
    dims = []

    def one_dim(s: int, t: CyclotomicElement):
        vals = []
        for r in reps:
            if r < two_m:
                vals.append(CyclotomicElement.from_rational(s**r))
            else:
                vals.append(t * s ** (r - two_m))
        return tuple(vals)

    one = CyclotomicElement.one()
    if m % 2 == 0:
        combos = [(1, one), (1, -one), (-1, one), (-1, -one)]
    else:
        i4 = CyclotomicElement.zeta(4)
        combos = [(1, one), (1, -one), (-1, i4), (-1, -i4)]
    for idx, (s, t) in enumerate(combos):
        rows.append(one_dim(s, t))
        names.append("1" if idx == 0 else f"u{idx}")
        dims.append(1)
    for h in range(1, m):
        vals = []
        for r in reps:
            if r < two_m:
                vals.append(
                    CyclotomicElement.zeta(two_m, h * r % two_m)
                    + CyclotomicElement.zeta(two_m, -h * r % two_m)
                )
            else:
                vals.append(CyclotomicElement.zero(1))
        rows.append(tuple(vals))
        names.append(f"rho{h}")
        dims.append(2)
    return tuple(rows), tuple(dims), tuple(names)


_table_cache: dict[int, CharacterTable] = {}


def character_table(G: GroupModel) -> CharacterTable:
    key = id(G)
    if key not in _table_cache:
        _table_cache[key] = CharacterTable(G)
    return _table_cache[key]


def _normalize(value, p_local):
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value)
        if p_local is None:
            raise ValueError("non-integer coefficient on an integral representation")
        if value.denominator % p_local == 0:
            raise ValueError(f"denominator not prime to {p_local}")
        return value
    return int(value)


class VirtualRep:
    """Element of RU(G).

    Cyclic: coefficient k is the multiplicity of L^k. Dicyclic: coefficient
    k is the multiplicity of the k-th irreducible character.
    """

    __slots__ = ("group", "coeffs", "p_local", "_values")

    def __init__(self, group: GroupModel, coeffs, p_local: int | None = None):
        vec = [Fraction(c) for c in coeffs]
        want = group.order if group.descriptor.kind == "cyclic" else group.descriptor.m + 3
        if len(vec) != want:
            raise ValueError("coefficient count does not match the character basis")
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "coeffs", tuple(_normalize(c, p_local) for c in vec))
        object.__setattr__(self, "p_local", p_local)
        object.__setattr__(self, "_values", None)

    def __setattr__(self, *a):
        raise AttributeError("VirtualRep is immutable")

    # -- constructors

    @classmethod
    def zero(cls, group: GroupModel, p_local: int | None = None) -> "VirtualRep":
        want = group.order if group.descriptor.kind == "cyclic" else group.descriptor.m + 3
        return cls(group, [0] * want, p_local)

    @classmethod
    def trivial(cls, group: GroupModel) -> "VirtualRep":
        z = cls.zero(group)
        vec = list(z.coeffs)
        vec[0] = 1
        return cls(group, vec)

    @classmethod
    def line(cls, group: GroupModel, a: int) -> "VirtualRep":
        if group.descriptor.kind != "cyclic":
            raise ValueError("line characters L^a require a cyclic group")
        m = group.order
        vec = [0] * m
        vec[a % m] = 1
        return cls(group, vec)

    @classmethod
    def irreducible(cls, group: GroupModel, index: int) -> "VirtualRep":
        z = cls.zero(group)
        vec = list(z.coeffs)
        vec[index] = 1
        return cls(group, vec)

    @classmethod
    def regular(cls, group: GroupModel) -> "VirtualRep":
        if group.descriptor.kind == "cyclic":
            return cls(group, [1] * group.order)
        table = character_table(group)
        return cls(group, table.dims)

    # -- structure

    def is_cyclic_side(self) -> bool:
        return self.group.descriptor.kind == "cyclic"

    def is_honest(self) -> bool:
        return all(isinstance(c, int) and c >= 0 for c in self.coeffs)

    def dim(self):
        if self.is_cyclic_side():
            return sum(self.coeffs)
        dims = character_table(self.group).dims
        return sum(c * d for c, d in zip(self.coeffs, dims))

    def character(self, g: int) -> CyclotomicElement:
        if self.is_cyclic_side():
            m = self.group.order
            acc: dict[int, Fraction] = {}
            for a, c in enumerate(self.coeffs):
                if c:
                    e = a * g % m
                    acc[e] = acc.get(e, 0) + c
            return CyclotomicElement.from_exponents(m, acc.items())
        table = character_table(self.group)
        out = CyclotomicElement.zero(1)
        for c, row in zip(self.coeffs, table.rows):
            if c:
                out = out + c * row[table.class_of_element[g]]
        return out

    def class_values(self) -> tuple:
        """Character value at each element conjugacy class, in class order."""
        if self._values is None:
            table = character_table(self.group)
            object.__setattr__(
                self, "_values", tuple(self.character(r) for r in table.reps)
            )
        return self._values

    # -- ring operations

    def _merge_flag(self, other: "VirtualRep") -> int | None:
        if self.p_local is not None and other.p_local is not None:
            if self.p_local != other.p_local:
                raise ValueError("mixed p-local primes")
        return self.p_local if self.p_local is not None else other.p_local

    def __add__(self, other):
        if isinstance(other, int):
            other = other * VirtualRep.trivial(self.group)
        if not isinstance(other, VirtualRep):
            return NotImplemented
        if other.group is not self.group:
            raise ValueError("different groups")
        return VirtualRep(
            self.group,
            [a + b for a, b in zip(self.coeffs, other.coeffs)],
            self._merge_flag(other),
        )

    __radd__ = __add__

    def __neg__(self):
        return VirtualRep(self.group, [-c for c in self.coeffs], self.p_local)

    def __sub__(self, other):
        if isinstance(other, int):
            other = other * VirtualRep.trivial(self.group)
        if not isinstance(other, VirtualRep):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            flag = self.p_local
            if isinstance(other, Fraction) and other.denominator != 1 and flag is None:
                raise ValueError("rational scaling requires a p-local representation")
            return VirtualRep(self.group, [c * other for c in self.coeffs], flag)
        if not isinstance(other, VirtualRep):
            return NotImplemented
        if other.group is not self.group:
            raise ValueError("different groups")
        flag = self._merge_flag(other)
        if self.is_cyclic_side():
            m = self.group.order
            a, b = self.coeffs, other.coeffs
            out = [0] * m
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        if y:
                            out[(i + j) % m] += x * y
            return VirtualRep(self.group, out, flag)
        table = character_table(self.group)
        n = len(self.coeffs)
        out2 = [Fraction(0)] * n
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    if y:
                        prod = table.product_coeffs(i, j)
                        for k in range(n):
                            if prod[k]:
                                out2[k] += x * y * prod[k]
        return VirtualRep(self.group, out2, flag)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not defined here")
        out = VirtualRep.trivial(self.group)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __eq__(self, other):
        if not isinstance(other, VirtualRep):
            return NotImplemented
        return (
            self.group.descriptor == other.group.descriptor
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.group.descriptor, self.coeffs))

    def __repr__(self):
        if self.is_cyclic_side():
            names = [_line_name(a) for a in range(self.group.order)]
        else:
            names = list(character_table(self.group).names)
        terms = []
        for name, c in zip(names, self.coeffs):
            if c == 0:
                continue
            if c == 1:
                terms.append(name)
            elif c == -1:
                terms.append(f"-{name}")
            else:
                terms.append(f"{c}*{name}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += t if t.startswith("-") else "+" + t
        return out


def from_class_function(G: GroupModel, values, p_local: int | None = None) -> VirtualRep:
    """Expand an exact class function over the irreducible basis."""
    table = character_table(G)
    coeffs = table.decompose(values, p_local)
    return VirtualRep(G, coeffs, p_local)


def standard_rep(G: GroupModel, name: str, power: int = 1, param: int | None = None) -> VirtualRep:
    """Named representations: L (cyclic line), W (cyclic fixed point free
    rational), H (dicyclic fixed point free rational), taut (dicyclic
    2-dimensional), regular, reduced_regular."""
    kind = G.descriptor.kind
    if name == "L":
        return VirtualRep.line(G, power)
    if name == "regular":
        return VirtualRep.regular(G)
    if name == "reduced_regular":
        return VirtualRep.regular(G) - VirtualRep.trivial(G)
    if name == "W":
        if kind != "cyclic":
            raise ValueError("W is defined over cyclic groups")
        m = G.order
        if param is not None and param != m:
            raise ValueError(f"W_{param} does not live over C{m}")
        vec = [1 if gcd(a, m) == 1 else 0 for a in range(m)]
        return VirtualRep(G, vec)
    if name in ("H", "taut"):
        if kind != "dicyclic":
            raise ValueError(f"{name} is defined over dicyclic groups")
        m = G.descriptor.m
        if param is not None and param != m:
            raise ValueError(f"H_{param} does not live over {G.descriptor.name}")
        table = character_table(G)
        vec = [0] * (m + 3)
        if name == "taut":
            vec[4] = 1  # rho_1
            return VirtualRep(G, vec)
        for h in range(1, m):
            if gcd(h, 2 * m) == 1:
                vec[3 + h] = 1
        return VirtualRep(G, vec)
    raise ValueError(f"unknown representation name {name!r}")


def adams(ell: int, V: VirtualRep) -> VirtualRep:
    """Adams operation: the class function g -> character(g^ell)."""
    if ell < 0:
        raise ValueError("Adams index must be >= 0")
    G = V.group
    if V.is_cyclic_side():
        m = G.order
        out = [0] * m
        for a, c in enumerate(V.coeffs):
            if c:
                out[a * ell % m] += c
        return VirtualRep(G, out, V.p_local)
    table = character_table(G)
    pcm = table.power_class_map(ell)
    vals = V.class_values()
    return from_class_function(G, [vals[pcm[k]] for k in range(len(pcm))], V.p_local)


def linearize(X: VirtualGSet) -> VirtualRep:
    """Permutation representation C[X]: character at g is the mark of X
    at the cyclic subgroup generated by g."""
    G = X.group
    if G.descriptor.kind == "cyclic":
        m = G.order
        classes = G.subgroup_classes()
        out = [Fraction(0)] * m
        for cls, c in zip(classes, X.coeffs):
            if c:
                for a in range(0, m, cls.order):
                    out[a] += c
        return VirtualRep(G, out, X.p_local)
    mk = marks(X)
    table = character_table(G)
    vals = [
        CyclotomicElement.from_rational(mk[G.cyclic_class_of(r)]) for r in table.reps
    ]
    return from_class_function(G, vals, X.p_local)


def fixed_space_dim(V: VirtualRep, g: int):
    """Dimension of the subspace of V fixed by g (averaging over <g>)."""
    G = V.group
    k = G.element_order(g)
    acc = CyclotomicElement.zero(1)
    x = 0
    for _ in range(k):
        acc = acc + V.character(x)
        x = G.mul(x, g)
    q = acc.rational_value() / k
    return q


def eigenvalue_multiplicities(V: VirtualRep, g: int) -> tuple:
    """Multiplicity of zeta_k^j (j = 0..k-1) as an eigenvalue of g on V,
    where k is the order of g. Requires an honest representation."""
    if not V.is_honest():
        raise ValueError("eigenvalues need an honest representation")
    G = V.group
    k = G.element_order(g)
    vals = []
    x = 0
    for _ in range(k):
        vals.append(V.character(x))
        x = G.mul(x, g)
    out = []
    for j in range(k):
        acc = CyclotomicElement.zero(1)
        for b in range(k):
            acc = acc + vals[b] * CyclotomicElement.zeta(k, (-j * b) % k)
        q = acc.rational_value() / k
        if q.denominator != 1 or q < 0:
            raise ArithmeticError("non-integral eigenvalue multiplicity")
        out.append(int(q))
    return tuple(out)


def is_fixed_point_free(V: VirtualRep) -> bool:
    """No nontrivial element fixes a vector; the unit sphere is free."""
    if not V.is_honest():
        raise ValueError("fixed point freeness is a property of honest representations")
    G = V.group
    if V.is_cyclic_side():
        m = G.order
        return all(gcd(a, m) == 1 for a, c in enumerate(V.coeffs) if c)
    for cls in G.element_conjugacy_classes():
        r = cls[0]
        if r == 0:
            continue
        if fixed_space_dim(V, r) != 0:
            return False
    return True


def has_rational_characters(V: VirtualRep) -> bool:
    if V.is_cyclic_side():
        m = V.group.order
        level: dict[int, object] = {}
        for a, c in enumerate(V.coeffs):
            d = gcd(a, m)
            if d in level and level[d] != c:
                return False
            level.setdefault(d, c)
        return True
    return all(v.is_rational() for v in V.class_values())


@dataclass(frozen=True)
class GammaOrbitBasis:
    """Galois orbit sums in RU(C_{p^n}): gamma_i sums the characters L^k
    with gcd(k, p^n) = p^i; these span the Galois-fixed subring."""

    group: GroupModel
    p: int
    n: int
    orbits: tuple
    gammas: tuple


def gamma_orbit_basis(G: GroupModel) -> GammaOrbitBasis:
    pp = prime_power(G.order)
    if G.descriptor.kind != "cyclic" or pp is None:
        raise ValueError("orbit basis requires a nontrivial cyclic p-group")
    p, n = pp
    m = G.order
    orbits = []
    gammas = []
    for i in range(n + 1):
        orb = tuple(k for k in range(m) if gcd(k, m) == p**i)
        vec = [0] * m
        for k in orb:
            vec[k] = 1
        orbits.append(orb)
        gammas.append(VirtualRep(G, vec))
    return GammaOrbitBasis(G, p, n, tuple(orbits), tuple(gammas))


def gamma_fixed_check(V: VirtualRep):
    """Whether V is fixed by the full Galois action; if so, also return its
    coordinates in the orbit-sum basis (index i = 0..n)."""
    basis = gamma_orbit_basis(V.group)
    coords = []
    for orb in basis.orbits:
        vals = {V.coeffs[k] for k in orb}
        if len(vals) != 1:
            return False, None
        coords.append(vals.pop())
    return True, tuple(coords)


# ---------------------------------------------------------------------------
# principal ideal presentations


@dataclass(frozen=True)
class AbelianPresentation:
    """An abelian group: free rank, invariant factors > 1, and generator
    vectors in the ambient basis (one per factor, then one per free rank)."""

    free_rank: int
    factors: tuple
    generators: tuple

    def invariant_factors(self) -> tuple:
        return self.factors


@dataclass(frozen=True)
class IdealStructure:
    side: str
    annihilator: AbelianPresentation
    quotient: AbelianPresentation
    annihilator_fixed: AbelianPresentation | None = None
    quotient_fixed: AbelianPresentation | None = None


def _ann_presentation(M: IntMatrix) -> AbelianPresentation:
    basis = kernel_basis(M)
    return AbelianPresentation(len(basis), (), tuple(basis))


def _quot_presentation(M: IntMatrix) -> AbelianPresentation:
    free, factors, gens = cokernel_data(M)
    return AbelianPresentation(free, factors, gens)


def annihilator_and_quotient(X: VirtualGSet, side: str = "A") -> IdealStructure:
    """Presentations of Ann(X) = ker(X * -) and R/XR for R = A(G) or RU(G).

    X must have integer coefficients. For side RU the Galois-fixed
    sub-presentations are computed inside the fixed subring: the orbit sums
    gamma_i are a basis of RU^Galois, the permutation character of X lives
    there, and multiplication by it restricts; Ann and quotient of that
    restricted map match the side-A answers. (The Galois fixed points of the
    module RU/XR itself can be strictly smaller: passing to fixed points is
    not exact, so the subring is where the comparison with A(G) lives.)
    """
    G = X.group
    if G.descriptor.kind != "cyclic" or prime_power(G.order) is None:
        raise ValueError("ideal presentations are computed over cyclic p-groups")
    if X.p_local is not None or any(not isinstance(c, int) for c in X.coeffs):
        raise ValueError("X must have integer coefficients")
    if side == "A":
        r = len(G.subgroup_classes())
        cols = [bmul(X, orbit(G, j)).coeffs for j in range(r)]
        M = IntMatrix.from_columns(cols)
        return IdealStructure("A", _ann_presentation(M), _quot_presentation(M))
    if side != "RU":
        raise ValueError("side must be 'A' or 'RU'")
    m = G.order
    lin = linearize(X)
    w = lin.coeffs
    M = IntMatrix([[w[(a - b) % m] for b in range(m)] for a in range(m)])
    ann = _ann_presentation(M)
    quot = _quot_presentation(M)
    basis = gamma_orbit_basis(G)
    cols = []
    for gam in basis.gammas:
        ok, coords = gamma_fixed_check(lin * gam)
        assert ok, "the fixed subring is closed under multiplication"
        cols.append(coords)
    MG = IntMatrix.from_columns(cols)

    def ambient(vec):
        out = [0] * m
        for c, gam in zip(vec, basis.gammas):
            for a in range(m):
                out[a] += c * gam.coeffs[a]
        return tuple(out)

    ann_basis = kernel_basis(MG)
    ann_fixed = AbelianPresentation(
        len(ann_basis), (), tuple(ambient(v) for v in ann_basis)
    )
    free, factors, gens = cokernel_data(MG)
    quot_fixed = AbelianPresentation(
        free, factors, tuple(ambient(v) for v in gens or ())
    )
    return IdealStructure("RU", ann, quot, ann_fixed, quot_fixed)
