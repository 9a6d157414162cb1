"""The group algebra of the generalised symmetric group.

This algebra carries the generalised Kac-Paljutkin structure: the twist
generators x_i, the transposition basis elements s_l, the character
idempotents Lambda_lambda of the abelian subalgebra, and the square roots
z_l = y_l^(-1) s_l reconstructed from the diagonal units y_l.  Every
defining relation of the abstract presentation is then verified by exact
convolution rather than imposed.

Scalars live in Q(zeta_2n); elements are sparse maps from dense group
indices to scalars.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product

from .cyclotomic import CycNumber, zeta_power
from .wreath import (
    CapExceededError,
    Perm,
    WreathElement,
    element_index,
    generator_b,
    group_order,
    mul_index,
    mul_row,
)

DEFAULT_RELATION_CAP = 10000
DEFAULT_RANK_CAP = 2000


class AlgebraElement:
    """A sparse element of the group algebra over Q(zeta_2n)."""

    __slots__ = ("n", "m", "terms")

    def __init__(self, n: int, m: int, terms=None):
        order = group_order(n, m)
        clean: dict[int, CycNumber] = {}
        for index, coeff in (terms or {}).items():
            if not 0 <= index < order:
                raise ValueError(f"group index {index} out of range for (n={n}, m={m})")
            if coeff.order != 2 * n:
                raise ValueError(f"coefficient order {coeff.order} != {2 * n}")
            if not coeff.is_zero():
                clean[index] = coeff
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "terms", clean)

    @staticmethod
    def _make(n: int, m: int, terms: dict[int, CycNumber]) -> "AlgebraElement":
        self = object.__new__(AlgebraElement)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "terms", terms)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n: int, m: int) -> "AlgebraElement":
        return cls._make(n, m, {})

    @classmethod
    def one(cls, n: int, m: int) -> "AlgebraElement":
        return cls._make(n, m, {0: CycNumber.one(2 * n)})

    @classmethod
    def basis(cls, element: WreathElement) -> "AlgebraElement":
        return cls._make(
            element.n, element.m, {element_index(element): CycNumber.one(2 * element.n)}
        )

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, index: int) -> CycNumber:
        return self.terms.get(index, CycNumber.zero(2 * self.n))

    def support(self) -> list[int]:
        return sorted(self.terms)

    def _check(self, other: "AlgebraElement"):
        if self.n != other.n or self.m != other.m:
            raise ValueError("algebra parameter mismatch")

    # -- linear operations ---------------------------------------------------

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        terms = dict(self.terms)
        for ix, c in other.terms.items():
            cur = terms.get(ix)
            s = c if cur is None else cur + c
            if s.is_zero():
                terms.pop(ix, None)
            else:
                terms[ix] = s
        return AlgebraElement._make(self.n, self.m, terms)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement._make(self.n, self.m, {ix: -c for ix, c in self.terms.items()})

    def scale(self, factor) -> "AlgebraElement":
        if not isinstance(factor, CycNumber):
            factor = CycNumber.from_rational(2 * self.n, Fraction(factor))
        if factor.is_zero():
            return AlgebraElement.zero(self.n, self.m)
        return AlgebraElement._make(
            self.n, self.m, {ix: c * factor for ix, c in self.terms.items()}
        )

    # -- multiplicative operations -------------------------------------------

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        n, m = self.n, self.m
        acc: dict[int, CycNumber] = {}
        for i, a in self.terms.items():
            for j, b in other.terms.items():
                k = mul_index(n, m, i, j)
                c = a * b
                cur = acc.get(k)
                acc[k] = c if cur is None else cur + c
        return AlgebraElement._make(n, m, {k: v for k, v in acc.items() if not v.is_zero()})

    def __pow__(self, exponent: int) -> "AlgebraElement":
        if exponent < 0:
            raise ValueError("negative powers are not supported on algebra elements")
        result = AlgebraElement.one(self.n, self.m)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraElement)
            and self.n == other.n
            and self.m == other.m
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, self.m, frozenset(self.terms.items())))

    def __repr__(self):
        head = ", ".join(f"{ix}: {c!r}" for ix, c in sorted(self.terms.items())[:4])
        more = "" if len(self.terms) <= 4 else f", ... ({len(self.terms)} terms)"
        return f"AlgebraElement(n={self.n}, m={self.m}, {{{head}{more}}})"

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "terms": [
                {"index": ix, "coeff": self.terms[ix].to_json()} for ix in sorted(self.terms)
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "AlgebraElement":
        terms = {item["index"]: CycNumber.from_json(item["coeff"]) for item in data["terms"]}
        return cls(data["n"], data["m"], terms)


# -- distinguished elements -------------------------------------------------


def x_element(n: int, m: int, i: int) -> AlgebraElement:
    """The twist generator at slot i (1-based) as a basis element."""
    if not 1 <= i <= m:
        raise ValueError(f"x index {i} out of range 1..{m}")
    return x_monomial(n, m, tuple(1 if j == i - 1 else 0 for j in range(m)))


def x_monomial(n: int, m: int, exponents) -> AlgebraElement:
    """The product of x generators with the given exponent vector."""
    exponents = tuple(e % n for e in exponents)
    if len(exponents) != m:
        raise ValueError("exponent vector length must be m")
    # x-monomials carry the identity permutation, whose Lehmer rank is 0,
    # so their index is just the mixed-radix twist value.
    index = 0
    for e in reversed(exponents):
        index = index * n + e
    return AlgebraElement._make(n, m, {index: CycNumber.one(2 * n)})


@lru_cache(maxsize=None)
def lambda_idempotent(n: int, m: int, lam: tuple[int, ...]) -> AlgebraElement:
    """The character idempotent of the abelian subalgebra for character lam.

    Averages all x-monomials against the character q^(lam . i); the family
    over all lam forms a complete set of orthogonal idempotents.
    """
    if len(lam) != m or any(not 0 <= v < n for v in lam):
        raise ValueError(f"character {lam} not in Z_{n}^{m}")
    order = 2 * n
    norm = CycNumber.from_rational(order, Fraction(1, n**m))
    terms: dict[int, CycNumber] = {}
    for exps in product(range(n), repeat=m):
        dot = sum(a * b for a, b in zip(lam, exps))
        index = 0
        for e in reversed(exps):
            index = index * n + e
        terms[index] = zeta_power(order, 2 * dot) * norm
    return AlgebraElement._make(n, m, terms)


def character_combination(n: int, m: int, weight) -> AlgebraElement:
    """Sum of weight(lam) * Lambda_lam over all characters lam.

    weight maps a character tuple to a CycNumber; this is the generic way to
    build elements that are diagonal on the character idempotent basis.
    """
    acc: dict[int, CycNumber] = {}
    for lam in product(range(n), repeat=m):
        w = weight(lam)
        if w.is_zero():
            continue
        for ix, c in lambda_idempotent(n, m, lam).terms.items():
            add = c * w
            cur = acc.get(ix)
            acc[ix] = add if cur is None else cur + add
    return AlgebraElement._make(n, m, {k: v for k, v in acc.items() if not v.is_zero()})


def _check_transposition_index(m: int, l: int):
    if not 1 <= l <= m - 1:
        raise ValueError(f"index {l} out of range 1..{m - 1}")


@lru_cache(maxsize=None)
def y_element(n: int, m: int, l: int) -> AlgebraElement:
    """The unit of order 2n acting on the character idempotents by
    zeta^(-lam_l * lam_{l+1})."""
    _check_transposition_index(m, l)
    order = 2 * n
    return character_combination(
        n, m, lambda lam: zeta_power(order, -lam[l - 1] * lam[l])
    )


@lru_cache(maxsize=None)
def y_inverse_element(n: int, m: int, l: int) -> AlgebraElement:
    """Inverse of y_element, by inverting each diagonal eigenvalue."""
    _check_transposition_index(m, l)
    order = 2 * n
    return character_combination(
        n, m, lambda lam: zeta_power(order, lam[l - 1] * lam[l])
    )


@lru_cache(maxsize=None)
def s_element(n: int, m: int, l: int) -> AlgebraElement:
    """The transposition generator as a group basis element."""
    return AlgebraElement.basis(generator_b(n, m, l))


@lru_cache(maxsize=None)
def z_element(n: int, m: int, l: int) -> AlgebraElement:
    """The square-root generator, reconstructed as y_l^(-1) s_l."""
    return y_inverse_element(n, m, l) * s_element(n, m, l)


def z_square_rhs(n: int, m: int, l: int) -> AlgebraElement:
    """(1/n) sum over i,j in 0..n-1 of q^(-ij) x_l^i x_{l+1}^j.

    The exact value of z_l^2; the sum starts at zero, which is the only
    range consistent with z_l^2 = y_l^(-2).
    """
    order = 2 * n
    norm = CycNumber.from_rational(order, Fraction(1, n))
    acc = AlgebraElement.zero(n, m)
    for i in range(n):
        for j in range(n):
            exps = [0] * m
            exps[l - 1] = i
            exps[l] = j
            acc = acc + x_monomial(n, m, exps).scale(zeta_power(order, -2 * i * j) * norm)
    return acc


def permute_character(lam: tuple[int, ...], perm: Perm) -> tuple[int, ...]:
    """The character composed with a slot permutation (entry j moves to sigma(j))."""
    return tuple(lam[perm(j)] for j in range(len(lam)))


# -- relation verification ----------------------------------------------------


def _difference_head(lhs: AlgebraElement, rhs: AlgebraElement):
    diff = lhs - rhs
    if diff.is_zero():
        return None
    head = min(diff.terms)
    return {"index": head, "coeff": diff.terms[head].to_json()}


def verify_defining_relations(n: int, m: int, cap: int = DEFAULT_RELATION_CAP) -> dict:
    """Exactly check every defining relation on the reconstructed generators.

    Returns a JSON-ready report mapping each relation family to pass/fail,
    with the head term of the first nonzero difference as counterexample.
    """
    order = group_order(n, m)
    if order > cap:
        raise CapExceededError(
            f"group order {order} exceeds relation-suite cap {cap}"
        )
    one = AlgebraElement.one(n, m)
    xs = {i: x_element(n, m, i) for i in range(1, m + 1)}
    ys = {l: y_element(n, m, l) for l in range(1, m)}
    zs = {l: z_element(n, m, l) for l in range(1, m)}
    ss = {l: s_element(n, m, l) for l in range(1, m)}

    def sigma(l: int, i: int) -> int:
        if i == l:
            return l + 1
        if i == l + 1:
            return l
        return i

    checks: dict[str, list] = {}

    checks["x_power"] = [
        (f"x_{i}^{n} = 1", xs[i] ** n, one) for i in range(1, m + 1)
    ]
    checks["x_commute"] = [
        (f"x_{i} x_{j} = x_{j} x_{i}", xs[i] * xs[j], xs[j] * xs[i])
        for i in range(1, m + 1)
        for j in range(i + 1, m + 1)
    ]
    checks["zx"] = [
        (f"z_{l} x_{i} = x_{sigma(l, i)} z_{l}", zs[l] * xs[i], xs[sigma(l, i)] * zs[l])
        for l in range(1, m)
        for i in range(1, m + 1)
    ]
    checks["z_commute"] = [
        (f"z_{l} z_{k} = z_{k} z_{l}", zs[l] * zs[k], zs[k] * zs[l])
        for l in range(1, m)
        for k in range(l + 2, m)
    ]
    checks["z_braid"] = [
        (
            f"z_{l} z_{l + 1} z_{l} = z_{l + 1} z_{l} z_{l + 1}",
            zs[l] * zs[l + 1] * zs[l],
            zs[l + 1] * zs[l] * zs[l + 1],
        )
        for l in range(1, m - 1)
    ]
    checks["z_square"] = [
        (f"z_{l}^2 = (1/n) sum q^(-ij) x_{l}^i x_{l + 1}^j", zs[l] * zs[l], z_square_rhs(n, m, l))
        for l in range(1, m)
    ]
    checks["z_square_y"] = [
        (f"z_{l}^2 = y_{l}^(-2)", zs[l] * zs[l], y_inverse_element(n, m, l) ** 2)
        for l in range(1, m)
    ]
    checks["z_lambda"] = [
        (
            f"z_{l} Lambda_{lam} = Lambda_{permute_character(lam, generator_b(n, m, l).perm)} z_{l}",
            zs[l] * lambda_idempotent(n, m, lam),
            lambda_idempotent(n, m, permute_character(lam, generator_b(n, m, l).perm)) * zs[l],
        )
        for l in range(1, m)
        for lam in product(range(n), repeat=m)
    ]
    checks["s_square"] = [
        (f"s_{l}^2 = 1", ss[l] * ss[l], one) for l in range(1, m)
    ]
    checks["s_commute"] = [
        (f"s_{l} s_{k} = s_{k} s_{l}", ss[l] * ss[k], ss[k] * ss[l])
        for l in range(1, m)
        for k in range(l + 2, m)
    ]
    checks["s_braid"] = [
        (
            f"s_{l} s_{l + 1} s_{l} = s_{l + 1} s_{l} s_{l + 1}",
            ss[l] * ss[l + 1] * ss[l],
            ss[l + 1] * ss[l] * ss[l + 1],
        )
        for l in range(1, m - 1)
    ]
    checks["sx"] = [
        (f"s_{l} x_{i} = x_{sigma(l, i)} s_{l}", ss[l] * xs[i], xs[sigma(l, i)] * ss[l])
        for l in range(1, m)
        for i in range(1, m + 1)
    ]
    checks["s_from_y_z"] = [
        (f"s_{l} = y_{l} z_{l}", ss[l], ys[l] * zs[l]) for l in range(1, m)
    ]

    report: dict = {"n": n, "m": m, "relations": {}}
    for family, items in checks.items():
        entry: dict = {"status": "pass"}
        for name, lhs, rhs in items:
            head = _difference_head(lhs, rhs)
            if head is not None:
                entry = {"status": "fail", "counterexample": {"relation": name, "difference_head": head}}
                break
        report["relations"][family] = entry

    # y_l must have multiplicative order exactly 2n.
    y_entry: dict = {"status": "pass"}
    for l in range(1, m):
        power = one
        for k in range(1, 2 * n + 1):
            power = power * ys[l]
            if k < 2 * n and power == one:
                y_entry = {
                    "status": "fail",
                    "counterexample": {"relation": f"y_{l}^{k} = 1 with {k} < {2 * n}"},
                }
                break
        else:
            if power != one:
                y_entry = {
                    "status": "fail",
                    "counterexample": {"relation": f"y_{l}^{2 * n} != 1"},
                }
        if y_entry["status"] == "fail":
            break
    report["relations"]["y_order"] = y_entry

    report["notes"] = [
        "the z_l^2 relation is checked with the index range starting at 0; "
        "a range starting at 1 is inconsistent with z_l^2 = y_l^(-2)"
    ]
    report["all_pass"] = all(e["status"] == "pass" for e in report["relations"].values())
    return report


# -- exact linear algebra -----------------------------------------------------


class CycMatrix:
    """A dense rectangular matrix over Q(zeta)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries):
        entries = [list(row) for row in entries]
        if len(entries) != rows or any(len(row) != cols for row in entries):
            raise ValueError("entries do not match the declared shape")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("CycMatrix is immutable")

    @classmethod
    def from_columns(cls, nrows: int, columns, order: int) -> "CycMatrix":
        cols = list(columns)
        zero = CycNumber.zero(order)
        entries = [[zero] * len(cols) for _ in range(nrows)]
        for c, col in enumerate(cols):
            for r, value in col.items():
                entries[r][c] = value
        return cls(nrows, len(cols), entries)

    def rank(self) -> int:
        return rank(self)


def rank(matrix: CycMatrix) -> int:
    """Exact rank by Gaussian elimination, pivoting on the first nonzero
    entry in column order."""
    work = [list(row) for row in matrix.entries]
    nrows, ncols = matrix.rows, matrix.cols
    pivot_row = 0
    for col in range(ncols):
        pivot = next(
            (r for r in range(pivot_row, nrows) if not work[r][col].is_zero()), None
        )
        if pivot is None:
            continue
        work[pivot_row], work[pivot] = work[pivot], work[pivot_row]
        inv = work[pivot_row][col].inverse()
        work[pivot_row] = [v * inv for v in work[pivot_row]]
        for r in range(nrows):
            if r != pivot_row:
                factor = work[r][col]
                if not factor.is_zero():
                    work[r] = [
                        a - factor * b for a, b in zip(work[r], work[pivot_row])
                    ]
        pivot_row += 1
        if pivot_row == nrows:
            break
    return pivot_row


def _sparse_rank(vectors) -> int:
    """Rank of an iterable of sparse {position: CycNumber} vectors.

    Incremental echelon: each new vector is reduced against the pivots in
    insertion order (each pivot row is already clean at all earlier pivot
    positions), then normalised on its first nonzero position.
    """
    pivots: list[tuple[int, dict[int, CycNumber]]] = []
    for vec in vectors:
        vec = {p: c for p, c in vec.items() if not c.is_zero()}
        for pos, row in pivots:
            c = vec.get(pos)
            if c is None:
                continue
            for p2, r2 in row.items():
                cur = vec.get(p2)
                s = -(c * r2) if cur is None else cur - c * r2
                if s.is_zero():
                    vec.pop(p2, None)
                else:
                    vec[p2] = s
        if not vec:
            continue
        lead = min(vec)
        inv = vec[lead].inverse()
        pivots.append((lead, {p: c * inv for p, c in vec.items()}))
    return len(pivots)


def _require_rank_cap(n: int, m: int, cap: int, what: str):
    order = group_order(n, m)
    if order > cap:
        raise CapExceededError(f"group order {order} exceeds {what} cap {cap}")
    return order


def left_ideal_dimension(e: AlgebraElement, cap: int = DEFAULT_RANK_CAP) -> int:
    """Dimension of the left ideal generated by e: rank of {g * e : g in G}."""
    n, m = e.n, e.m
    order = _require_rank_cap(n, m, cap, "rank-check")

    def columns():
        for g in range(order):
            row = mul_row(n, m, g)
            yield {row[h]: c for h, c in e.terms.items()}

    return _sparse_rank(columns())


def sandwich_dimension(e: AlgebraElement, f: AlgebraElement, cap: int = DEFAULT_RANK_CAP) -> int:
    """Rank of the span of {e * g * f : g in G}.

    For idempotents of a split semisimple algebra this is 1 exactly when e
    is primitive and f generates an isomorphic simple module, and 0 exactly
    when the modules are non-isomorphic.
    """
    e._check(f)
    n, m = e.n, e.m
    order = _require_rank_cap(n, m, cap, "rank-check")
    # The scalar products do not depend on the sandwiched basis element, so
    # hoist them out of the per-g loop; each column is then pure accumulation.
    by_i = [
        (i, [(j, a * b) for j, b in f.terms.items()]) for i, a in e.terms.items()
    ]

    def columns():
        for g in range(order):
            acc: dict[int, CycNumber] = {}
            for i, jabs in by_i:
                row = mul_row(n, m, mul_row(n, m, i)[g])
                for j, ab in jabs:
                    k = row[j]
                    cur = acc.get(k)
                    acc[k] = ab if cur is None else cur + ab
            yield acc

    return _sparse_rank(columns())


def basis_element(n: int, m: int, index: int) -> AlgebraElement:
    return AlgebraElement._make(n, m, {index: CycNumber.one(2 * n)})
