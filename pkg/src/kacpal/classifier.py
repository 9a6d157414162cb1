"""Classification of the irreducible representations by labelled partitions.

A labelled partition assigns one (possibly empty) partition to each of the
n twist characters, with sizes summing to m.  Each produces a primitive
idempotent: the character idempotent of its non-decreasing character vector
times the embedded Young symmetrizers of its blocks.  Counting and
dimension formulas are cross-checked three ways (closed formula, hook
lengths, exact rank of the generated left ideal).
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from functools import reduce
from itertools import product
from math import factorial

from .algebra import (
    DEFAULT_RANK_CAP,
    AlgebraElement,
    CapExceededError,
    lambda_idempotent,
    left_ideal_dimension,
    sandwich_dimension,
)
from .cyclotomic import CycNumber
from .partitions import (
    Partition,
    Perm,
    SymFormalSum,
    hook_length,
    partition_count,
    partitions_of,
    row_consecutive_tableau,
    standard_tableaux_count,
    young_symmetrizer,
)
from .wreath import WreathElement, conjugacy_class_count, element_index, group_order


class LabelledPartition:
    """A map from the n labels to partitions whose sizes sum to m."""

    __slots__ = ("n", "blocks")

    def __init__(self, n: int, blocks):
        blocks = tuple(blocks)
        if len(blocks) != n:
            raise ValueError(f"expected {n} blocks, got {len(blocks)}")
        if not all(isinstance(b, Partition) for b in blocks):
            raise ValueError("blocks must be Partitions")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "blocks", blocks)

    def __setattr__(self, name, value):
        raise AttributeError("LabelledPartition is immutable")

    @property
    def m(self) -> int:
        return sum(b.size for b in self.blocks)

    @property
    def block_sizes(self) -> tuple[int, ...]:
        return tuple(b.size for b in self.blocks)

    def spec_string(self) -> str:
        """Compact form like '0:3,2,2;2:1,1,1' (empty labels omitted)."""
        pieces = []
        for label, block in enumerate(self.blocks):
            if block.size:
                pieces.append(f"{label}:" + ",".join(str(p) for p in block))
        return ";".join(pieces)

    @classmethod
    def parse(cls, n: int, m: int, text: str) -> "LabelledPartition":
        """Parse a spec string, validating labels and the total size."""
        blocks = [Partition() for _ in range(n)]
        text = text.strip()
        if text:
            for piece in text.split(";"):
                if ":" not in piece:
                    raise ValueError(f"malformed labelled-partition entry: {piece!r}")
                label_text, parts_text = piece.split(":", 1)
                label = int(label_text)
                if not 0 <= label < n:
                    raise ValueError(f"label {label} out of range 0..{n - 1}")
                if blocks[label].size:
                    raise ValueError(f"label {label} given twice")
                blocks[label] = Partition(int(p) for p in parts_text.split(",") if p)
        beta = cls(n, blocks)
        if beta.m != m:
            raise ValueError(f"block sizes sum to {beta.m}, expected {m}")
        return beta

    def __eq__(self, other):
        return (
            isinstance(other, LabelledPartition)
            and self.n == other.n
            and self.blocks == other.blocks
        )

    def __hash__(self):
        return hash((self.n, self.blocks))

    def __repr__(self):
        return f"LabelledPartition({self.n}, {[list(b) for b in self.blocks]})"

    def to_json(self) -> list[list[int]]:
        return [b.to_json() for b in self.blocks]


def _compositions(n: int, m: int):
    """All n-tuples of non-negative integers summing to m, lexicographically."""
    if n == 1:
        yield (m,)
        return
    for first in range(m + 1):
        for rest in _compositions(n - 1, m - first):
            yield (first,) + rest


def enumerate_labelled_partitions(n: int, m: int) -> list[LabelledPartition]:
    """All labelled partitions, ordered lexicographically by block sizes and
    reverse-lexicographically within each block."""
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    out = []
    for comp in _compositions(n, m):
        for blocks in product(*(partitions_of(size) for size in comp)):
            out.append(LabelledPartition(n, blocks))
    return out


def count_formula(n: int, m: int) -> int:
    """Sum over compositions of m into n parts of the partition-count product."""
    return sum(
        reduce(lambda acc, size: acc * partition_count(size), comp, 1)
        for comp in _compositions(n, m)
    )


def lambda_from_beta(beta: LabelledPartition) -> tuple[int, ...]:
    """The non-decreasing character vector with block_sizes[i] entries equal to i."""
    lam = []
    for label, size in enumerate(beta.block_sizes):
        lam.extend([label] * size)
    return tuple(lam)


def iota_embed(beta: LabelledPartition, label: int, s: SymFormalSum) -> AlgebraElement:
    """Embed a formal sum over the label's block slots into the group algebra.

    Permutations act on the contiguous slot range of the block (offset by
    the sizes of the earlier blocks); twists stay zero.
    """
    sizes = beta.block_sizes
    if not 0 <= label < beta.n:
        raise ValueError(f"label {label} out of range")
    size = sizes[label]
    if s.m != size:
        raise ValueError(f"formal sum over S_{s.m} does not fit block of size {size}")
    offset = sum(sizes[:label])
    n, m = beta.n, beta.m
    terms = {}
    for perm, coeff in s.terms.items():
        images = list(range(m))
        for a in range(size):
            images[offset + a] = offset + perm(a)
        index = element_index(WreathElement(n, (0,) * m, Perm(images)))
        terms[index] = CycNumber.from_rational(2 * n, coeff)
    return AlgebraElement(n, m, terms)


def idempotent_from_beta(beta: LabelledPartition) -> AlgebraElement:
    """The classification idempotent: character idempotent times the embedded
    row-consecutive Young symmetrizers of the blocks."""
    result = lambda_idempotent(beta.n, beta.m, lambda_from_beta(beta))
    for label, block in enumerate(beta.blocks):
        if block.size == 0:
            continue
        symmetrizer = young_symmetrizer(row_consecutive_tableau(block))
        result = result * iota_embed(beta, label, symmetrizer)
    return result


def irrep_dimension(beta: LabelledPartition) -> int:
    """Closed-form dimension: multinomial of block sizes times the product of
    standard-tableau counts."""
    dim = factorial(beta.m)
    for block in beta.blocks:
        dim //= factorial(block.size)
        dim *= standard_tableaux_count(block)
    return dim


def dimension_by_hooks(beta: LabelledPartition) -> int:
    """m! divided by the product of all hook lengths over all blocks."""
    denom = 1
    for block in beta.blocks:
        for r in range(len(block)):
            for c in range(block[r]):
                denom *= hook_length(block, r, c)
    dim, rem = divmod(factorial(beta.m), denom)
    assert rem == 0
    return dim


@dataclass(frozen=True)
class IrrepRecord:
    """One classified irreducible with its three dimension computations."""

    beta: LabelledPartition
    lam: tuple[int, ...]
    idempotent: AlgebraElement
    dim_formula: int
    dim_hook: int
    dim_rank: int | None = None

    def __post_init__(self):
        if self.dim_formula != self.dim_hook:
            raise ValueError(
                f"dimension formulas disagree for {self.beta!r}: "
                f"{self.dim_formula} != {self.dim_hook}"
            )
        if self.dim_rank is not None and self.dim_rank != self.dim_formula:
            raise ValueError(
                f"rank dimension disagrees for {self.beta!r}: "
                f"{self.dim_rank} != {self.dim_formula}"
            )


@dataclass(frozen=True)
class IrrepTable:
    n: int
    m: int
    records: tuple[IrrepRecord, ...]
    checks: dict

    def to_json(self, include_idempotents: bool = False) -> dict:
        irreps = []
        for rec in self.records:
            entry = {
                "beta": rec.beta.spec_string(),
                "blocks": rec.beta.to_json(),
                "lambda": list(rec.lam),
                "dimension": rec.dim_formula,
                "dim_formula": rec.dim_formula,
                "dim_hook": rec.dim_hook,
                "dim_rank": rec.dim_rank,
            }
            if include_idempotents:
                entry["idempotent"] = rec.idempotent.to_json()
            irreps.append(entry)
        return {"n": self.n, "m": self.m, "irreps": irreps, "checks": self.checks}

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["beta_spec", "lambda", "dim_formula", "dim_hook", "dim_rank"])
        for rec in self.records:
            writer.writerow(
                [
                    rec.beta.spec_string(),
                    " ".join(str(v) for v in rec.lam),
                    rec.dim_formula,
                    rec.dim_hook,
                    "" if rec.dim_rank is None else rec.dim_rank,
                ]
            )
        return buf.getvalue()


def irrep_table(
    n: int,
    m: int,
    *,
    check_idempotency: bool = False,
    check_ranks: bool = False,
    check_orthogonality: bool = False,
    check_conjugacy: bool = False,
    rank_cap: int = DEFAULT_RANK_CAP,
    conjugacy_cap: int = 10000,
) -> IrrepTable:
    """Build the full table of irreducibles with optional exact cross-checks.

    The summary always reports the count against the closed counting formula
    and the sum of squared dimensions against the algebra dimension.
    """
    order = group_order(n, m)
    if check_ranks or check_orthogonality:
        if order > rank_cap:
            raise CapExceededError(
                f"group order {order} exceeds rank-check cap {rank_cap}"
            )

    betas = enumerate_labelled_partitions(n, m)
    records = []
    for beta in betas:
        e = idempotent_from_beta(beta)
        dim_rank = left_ideal_dimension(e, cap=rank_cap) if check_ranks else None
        records.append(
            IrrepRecord(
                beta=beta,
                lam=lambda_from_beta(beta),
                idempotent=e,
                dim_formula=irrep_dimension(beta),
                dim_hook=dimension_by_hooks(beta),
                dim_rank=dim_rank,
            )
        )

    checks: dict = {}
    checks["count_formula"] = "pass" if len(records) == count_formula(n, m) else "fail"
    checks["sum_dim_sq"] = (
        "pass" if sum(r.dim_formula**2 for r in records) == order else "fail"
    )

    if check_idempotency:
        ok = all(
            not r.idempotent.is_zero() and r.idempotent * r.idempotent == r.idempotent
            for r in records
        )
        checks["idempotency"] = "pass" if ok else "fail"

    if check_ranks:
        checks["rank_agreement"] = (
            "pass" if all(r.dim_rank == r.dim_formula for r in records) else "fail"
        )

    if check_orthogonality:
        ok = True
        for i, ri in enumerate(records):
            for j, rj in enumerate(records):
                expected = 1 if i == j else 0
                if sandwich_dimension(ri.idempotent, rj.idempotent, cap=rank_cap) != expected:
                    ok = False
                    break
            if not ok:
                break
        checks["orthogonality"] = "pass" if ok else "fail"

    if check_conjugacy:
        classes = conjugacy_class_count(n, m, cap=conjugacy_cap)
        checks["conjugacy_count"] = "pass" if classes == len(records) else "fail"
        checks["conjugacy_classes"] = classes

    return IrrepTable(n=n, m=m, records=tuple(records), checks=checks)
