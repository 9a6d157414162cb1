"""Comultiplication, counit, and antipode on the group-algebra realization.

The comultiplication is group-like on x-monomials and is given on the
square-root generators by the twisted formula
delta(z_l) = ((1/n) sum q^(-ij) x_l^i (x) x_{l+1}^j) (z_l (x) z_l),
extended multiplicatively along a canonical adjacent-transposition word for
each basis permutation.  Well-definedness of that extension is not assumed;
it is covered by the relation-preservation checks in the axiom report.

The counit is the group-algebra counit (one on every basis element); the
comultiplication above leaves it no other choice, which the axiom checks
confirm.  The antipode inverts x-monomials and fixes the square-root
generators, extended anti-homomorphically along the same canonical words.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache

from .algebra import (
    AlgebraElement,
    basis_element,
    character_combination,
    s_element,
    x_element,
    x_monomial,
    y_element,
    z_element,
)
from .cyclotomic import CycNumber, zeta_power
from .partitions import SymFormalSum
from .wreath import CapExceededError, elements, group_order, mul_index

DEFAULT_TENSOR_CAP = 100


class TensorElement:
    """A sparse element of the tensor square of the group algebra."""

    __slots__ = ("n", "m", "terms")

    def __init__(self, n: int, m: int, terms=None):
        order = group_order(n, m)
        clean: dict[tuple[int, int], CycNumber] = {}
        for (i, j), coeff in (terms or {}).items():
            if not (0 <= i < order and 0 <= j < order):
                raise ValueError(f"tensor index ({i}, {j}) out of range")
            if not coeff.is_zero():
                clean[(i, j)] = coeff
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "terms", clean)

    @staticmethod
    def _make(n: int, m: int, terms: dict) -> "TensorElement":
        self = object.__new__(TensorElement)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "terms", terms)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("TensorElement is immutable")

    @classmethod
    def zero(cls, n: int, m: int) -> "TensorElement":
        return cls._make(n, m, {})

    @classmethod
    def unit(cls, n: int, m: int) -> "TensorElement":
        return cls._make(n, m, {(0, 0): CycNumber.one(2 * n)})

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "TensorElement"):
        if self.n != other.n or self.m != other.m:
            raise ValueError("tensor parameter mismatch")

    def __add__(self, other: "TensorElement") -> "TensorElement":
        self._check(other)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            cur = terms.get(key)
            s = c if cur is None else cur + c
            if s.is_zero():
                terms.pop(key, None)
            else:
                terms[key] = s
        return TensorElement._make(self.n, self.m, terms)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + other.scale(-1)

    def scale(self, factor) -> "TensorElement":
        if not isinstance(factor, CycNumber):
            factor = CycNumber.from_rational(2 * self.n, Fraction(factor))
        if factor.is_zero():
            return TensorElement.zero(self.n, self.m)
        return TensorElement._make(
            self.n, self.m, {k: c * factor for k, c in self.terms.items()}
        )

    def __mul__(self, other: "TensorElement") -> "TensorElement":
        # componentwise convolution in both tensor legs
        self._check(other)
        n, m = self.n, self.m
        acc: dict[tuple[int, int], CycNumber] = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                key = (mul_index(n, m, i1, i2), mul_index(n, m, j1, j2))
                c = a * b
                cur = acc.get(key)
                acc[key] = c if cur is None else cur + c
        return TensorElement._make(
            n, m, {k: v for k, v in acc.items() if not v.is_zero()}
        )

    def flip(self) -> "TensorElement":
        return TensorElement._make(
            self.n, self.m, {(j, i): c for (i, j), c in self.terms.items()}
        )

    def __eq__(self, other):
        return (
            isinstance(other, TensorElement)
            and self.n == other.n
            and self.m == other.m
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, self.m, frozenset(self.terms.items())))

    def __repr__(self):
        return f"TensorElement(n={self.n}, m={self.m}, {len(self.terms)} terms)"


def tensor(a: AlgebraElement, b: AlgebraElement) -> TensorElement:
    """The elementary tensor of two algebra elements."""
    a._check(b)
    terms = {}
    for i, ca in a.terms.items():
        for j, cb in b.terms.items():
            terms[(i, j)] = ca * cb
    return TensorElement._make(a.n, a.m, terms)


def _diagonal(a: AlgebraElement) -> TensorElement:
    """Apply the group-like comultiplication to an element supported on
    x-monomials."""
    return TensorElement._make(a.n, a.m, {(i, i): c for i, c in a.terms.items()})


@lru_cache(maxsize=None)
def _delta_z(n: int, m: int, l: int) -> TensorElement:
    """The defining comultiplication of the square-root generator."""
    order = 2 * n
    prefactor = TensorElement.zero(n, m)
    norm = CycNumber.from_rational(order, Fraction(1, n))
    for i in range(n):
        for j in range(n):
            xi = [0] * m
            xi[l - 1] = i
            xj = [0] * m
            xj[l] = j
            term = tensor(x_monomial(n, m, xi), x_monomial(n, m, xj))
            prefactor = prefactor + term.scale(zeta_power(order, -2 * i * j) * norm)
    z = z_element(n, m, l)
    return prefactor * tensor(z, z)


@lru_cache(maxsize=None)
def _delta_s(n: int, m: int, l: int) -> TensorElement:
    """delta(s_l) = delta(y_l) delta(z_l); y_l is a combination of x-monomials,
    so its comultiplication is diagonal."""
    return _diagonal(y_element(n, m, l)) * _delta_z(n, m, l)


def _perm_word(images: tuple[int, ...]) -> tuple[int, ...]:
    """A canonical adjacent-transposition word for a permutation.

    Bubble sort the one-line form; the reversed swap sequence gives 1-based
    subscripts w so that the basis element equals s_{w[0]} * s_{w[1]} * ...
    """
    work = list(images)
    swaps = []
    changed = True
    while changed:
        changed = False
        for i in range(len(work) - 1):
            if work[i] > work[i + 1]:
                work[i], work[i + 1] = work[i + 1], work[i]
                swaps.append(i + 1)
                changed = True
    return tuple(reversed(swaps))


@lru_cache(maxsize=None)
def _delta_basis(n: int, m: int, index: int) -> TensorElement:
    """Comultiplication of a single group basis element."""
    u = elements(n, m)[index]
    result = _diagonal(x_monomial(n, m, u.twists))
    for l in _perm_word(u.perm.images):
        result = result * _delta_s(n, m, l)
    return result


def delta(a: AlgebraElement) -> TensorElement:
    """Comultiplication, extended linearly over the group basis."""
    result = TensorElement.zero(a.n, a.m)
    for ix, c in a.terms.items():
        result = result + _delta_basis(a.n, a.m, ix).scale(c)
    return result


def counit(a: AlgebraElement) -> CycNumber:
    """The counit: one on every group basis element, extended linearly."""
    total = CycNumber.zero(2 * a.n)
    for c in a.terms.values():
        total = total + c
    return total


@lru_cache(maxsize=None)
def _antipode_s(n: int, m: int, l: int) -> AlgebraElement:
    """The antipode of s_l: fixes z_l and reverses the factors,
    S(s_l) = z_l * sum over lam of zeta^(-lam_l lam_{l+1}) Lambda_(-lam).

    Negating the character representatives changes the integer products in
    the exponents, so for n >= 3 this differs from s_l itself.
    """
    order = 2 * n

    def weight(lam):
        neg_l = (-lam[l - 1]) % n
        neg_next = (-lam[l]) % n
        return zeta_power(order, -neg_l * neg_next)

    return z_element(n, m, l) * character_combination(n, m, weight)


@lru_cache(maxsize=None)
def _antipode_basis(n: int, m: int, index: int) -> AlgebraElement:
    """Antipode of one basis element: reversed word of s-antipodes times the
    inverted x-monomial."""
    u = elements(n, m)[index]
    result = x_monomial(n, m, tuple((-t) % n for t in u.twists))
    for l in _perm_word(u.perm.images):
        result = _antipode_s(n, m, l) * result
    return result


def antipode(a: AlgebraElement) -> AlgebraElement:
    """The antipode: x-monomials map to their inverses, square-root
    generators are fixed, extended anti-homomorphically along the canonical
    word of each basis element."""
    result = AlgebraElement.zero(a.n, a.m)
    for ix, c in a.terms.items():
        result = result + _antipode_basis(a.n, a.m, ix).scale(c)
    return result


# -- axiom verification -------------------------------------------------------


def _delta_first_leg(t: TensorElement) -> dict:
    out: dict[tuple[int, int, int], CycNumber] = {}
    for (i, j), c in t.terms.items():
        for (p, q), d in _delta_basis(t.n, t.m, i).terms.items():
            key = (p, q, j)
            add = c * d
            cur = out.get(key)
            s = add if cur is None else cur + add
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
    return out


def _delta_second_leg(t: TensorElement) -> dict:
    out: dict[tuple[int, int, int], CycNumber] = {}
    for (i, j), c in t.terms.items():
        for (p, q), d in _delta_basis(t.n, t.m, j).terms.items():
            key = (i, p, q)
            add = c * d
            cur = out.get(key)
            s = add if cur is None else cur + add
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
    return out


def coassociativity_holds(u: AlgebraElement) -> bool:
    d = delta(u)
    return _delta_first_leg(d) == _delta_second_leg(d)


def counit_axiom_holds(u: AlgebraElement) -> bool:
    d = delta(u)
    n, m = u.n, u.m
    left = AlgebraElement.zero(n, m)
    right = AlgebraElement.zero(n, m)
    for (i, j), c in d.terms.items():
        left = left + basis_element(n, m, j).scale(c)  # epsilon on the first leg
        right = right + basis_element(n, m, i).scale(c)
    return left == u and right == u


def antipode_axiom_holds(u: AlgebraElement) -> bool:
    d = delta(u)
    n, m = u.n, u.m
    target = AlgebraElement.one(n, m).scale(counit(u))
    left = AlgebraElement.zero(n, m)
    right = AlgebraElement.zero(n, m)
    for (i, j), c in d.terms.items():
        left = left + (antipode(basis_element(n, m, i)) * basis_element(n, m, j)).scale(c)
        right = right + (basis_element(n, m, i) * antipode(basis_element(n, m, j))).scale(c)
    return left == target and right == target


def _generators(n: int, m: int) -> list[tuple[str, AlgebraElement]]:
    gens = [(f"x_{i}", x_element(n, m, i)) for i in range(1, m + 1)]
    gens += [(f"z_{l}", z_element(n, m, l)) for l in range(1, m)]
    gens += [(f"s_{l}", s_element(n, m, l)) for l in range(1, m)]
    return gens


def _delta_relation_pairs(n: int, m: int) -> list[tuple[str, TensorElement, TensorElement]]:
    """Comultiplication applied to both sides of every defining relation,
    computed multiplicatively from the generator images."""
    dx = {i: _diagonal(x_element(n, m, i)) for i in range(1, m + 1)}
    dz = {l: _delta_z(n, m, l) for l in range(1, m)}
    unit = TensorElement.unit(n, m)

    def sigma(l: int, i: int) -> int:
        if i == l:
            return l + 1
        if i == l + 1:
            return l
        return i

    pairs = []
    for i in dx:
        power = unit
        for _ in range(n):
            power = power * dx[i]
        pairs.append((f"delta(x_{i}^n) = delta(1)", power, unit))
    for i in dx:
        for j in dx:
            if i < j:
                pairs.append(
                    (f"delta(x_{i} x_{j}) = delta(x_{j} x_{i})", dx[i] * dx[j], dx[j] * dx[i])
                )
    for l in dz:
        for i in dx:
            pairs.append(
                (
                    f"delta(z_{l} x_{i}) = delta(x_{sigma(l, i)} z_{l})",
                    dz[l] * dx[i],
                    dx[sigma(l, i)] * dz[l],
                )
            )
    for l in dz:
        for k in dz:
            if k >= l + 2:
                pairs.append(
                    (f"delta commutes z_{l}, z_{k}", dz[l] * dz[k], dz[k] * dz[l])
                )
    for l in dz:
        if l + 1 in dz:
            pairs.append(
                (
                    f"delta braid z_{l}, z_{l + 1}",
                    dz[l] * dz[l + 1] * dz[l],
                    dz[l + 1] * dz[l] * dz[l + 1],
                )
            )
    order = 2 * n
    for l in dz:
        rhs = TensorElement.zero(n, m)
        norm = CycNumber.from_rational(order, Fraction(1, n))
        for a in range(n):
            for b in range(n):
                xa = [0] * m
                xa[l - 1] = a
                xb = [0] * m
                xb[l] = b
                mono = x_monomial(n, m, xa) * x_monomial(n, m, xb)
                rhs = rhs + _diagonal(mono).scale(zeta_power(order, -2 * a * b) * norm)
        pairs.append((f"delta(z_{l}^2) = delta(sum)", dz[l] * dz[l], rhs))
    return pairs


def hopf_axiom_report(n: int, m: int, cap: int = DEFAULT_TENSOR_CAP) -> dict:
    """Verify every coalgebra and antipode axiom on the generators.

    Includes the relation-preservation suite (well-definedness of the
    multiplicative extension), multiplicativity spot checks on fixed
    pseudo-random sparse elements, and the non-cocommutativity witnesses.
    """
    order = group_order(n, m)
    if order > cap:
        raise CapExceededError(
            f"group order {order} exceeds tensor-square cap {cap}"
        )

    report: dict = {"n": n, "m": m, "axioms": {}}
    gens = _generators(n, m)

    coassoc = {name: coassociativity_holds(u) for name, u in gens}
    report["axioms"]["coassociativity"] = (
        "pass" if all(coassoc.values()) else {"status": "fail", "detail": coassoc}
    )

    counit_ok = {name: counit_axiom_holds(u) for name, u in gens}
    report["axioms"]["counit"] = (
        "pass" if all(counit_ok.values()) else {"status": "fail", "detail": counit_ok}
    )

    antipode_ok = {name: antipode_axiom_holds(u) for name, u in gens}
    report["axioms"]["antipode"] = (
        "pass" if all(antipode_ok.values()) else {"status": "fail", "detail": antipode_ok}
    )

    failures = [name for name, lhs, rhs in _delta_relation_pairs(n, m) if lhs != rhs]
    report["axioms"]["delta_preserves_relations"] = (
        "pass" if not failures else {"status": "fail", "detail": failures}
    )

    rng = random.Random(20240 + 100 * n + m)
    mult_ok = True
    for _ in range(3):
        a = _fixed_sparse(n, m, rng)
        b = _fixed_sparse(n, m, rng)
        if delta(a * b) != delta(a) * delta(b):
            mult_ok = False
            break
    report["axioms"]["delta_multiplicative"] = "pass" if mult_ok else "fail"

    report["non_cocommutativity"] = cocommutativity_witness(n, m, cap=cap)
    report["all_pass"] = all(v == "pass" for v in report["axioms"].values()) and all(
        entry["status"] == "noncocommutative"
        for key, entry in report["non_cocommutativity"].items()
        if key.startswith("z_")
    )
    return report


def _fixed_sparse(n: int, m: int, rng: random.Random, size: int = 3) -> AlgebraElement:
    """A deterministic sparse element driven by the caller's seeded RNG."""
    order = group_order(n, m)
    terms: dict[int, CycNumber] = {}
    for _ in range(size):
        ix = rng.randrange(order)
        coeff = zeta_power(2 * n, rng.randrange(2 * n)) * CycNumber.from_rational(
            2 * n, Fraction(rng.randint(-3, 3), rng.randint(1, 4))
        )
        cur = terms.get(ix)
        terms[ix] = coeff if cur is None else cur + coeff
    return AlgebraElement(n, m, terms)


def cocommutativity_witness(n: int, m: int, cap: int = DEFAULT_TENSOR_CAP) -> dict:
    """Report that delta(z_l) differs from its flip, with one nonzero
    coordinate as witness, and that the x generators are symmetric."""
    order = group_order(n, m)
    if order > cap:
        raise CapExceededError(f"group order {order} exceeds tensor-square cap {cap}")
    out: dict = {}
    for l in range(1, m):
        d = delta(z_element(n, m, l))
        diff = d - d.flip()
        if diff.is_zero():
            out[f"z_{l}"] = {"status": "cocommutative"}
        else:
            key = min(diff.terms)
            out[f"z_{l}"] = {
                "status": "noncocommutative",
                "witness": {
                    "pair": list(key),
                    "coefficient": diff.terms[key].to_json(),
                },
            }
    x_symmetric = all(
        delta(x_element(n, m, i)) == delta(x_element(n, m, i)).flip()
        for i in range(1, m + 1)
    )
    out["x_generators"] = "symmetric" if x_symmetric else "asymmetric"
    return out


def quotient_to_sym(a: AlgebraElement) -> SymFormalSum:
    """Project onto the symmetric group algebra by forgetting twists.

    The projection kills x_i - 1, so every x-monomial maps to the identity
    permutation.  Raises ValueError if a projected coefficient is not
    rational (such a value cannot be represented in a rational formal sum).
    """
    elems = elements(a.n, a.m)
    acc: dict = {}
    for ix, c in a.terms.items():
        perm = elems[ix].perm
        cur = acc.get(perm)
        acc[perm] = c if cur is None else cur + c
    terms = {}
    for perm, c in acc.items():
        if not c.is_zero():
            terms[perm] = c.rational()
    return SymFormalSum(a.m, terms)
