"""Representation theory of S_d: partitions, hook-length dimensions,
Murnaghan-Nakayama characters, the Kostka multiplicities of the
distinct-tuple permutation modules, and their assembled table.

The module P_r spanned by ordered r-tuples of distinct letters is induced
from the trivial character of the subgroup fixing the tuple; its weight as a
Young permutation module is (d-r, 1^r), so the multiplicity of the Specht
module S_mu in P_r is the Kostka number for shape mu and that weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd, lcm

from .errors import InternalInconsistencyError, InvalidDegreeError

MAX_DEGREE = 10

Partition = tuple[int, ...]


def partitions(d: int) -> list[Partition]:
    """All partitions of d in reverse-lexicographic order, (d) first."""
    if not 1 <= d <= MAX_DEGREE:
        raise InvalidDegreeError(f"partitions supported for 1 <= d <= {MAX_DEGREE}")
    return _partitions(d)


@lru_cache(maxsize=None)
def _partitions(d: int) -> list[Partition]:
    out: list[Partition] = []

    def gen(n: int, maxpart: int, prefix: tuple):
        if n == 0:
            out.append(prefix)
            return
        for k in range(min(n, maxpart), 0, -1):
            gen(n - k, k, prefix + (k,))

    gen(d, d, ())
    return out


def check_partition(mu) -> Partition:
    mu = tuple(mu)
    if not mu or any(a <= 0 for a in mu):
        raise InvalidDegreeError(f"{mu!r} is not a partition")
    if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
        raise InvalidDegreeError(f"{mu!r} is not weakly decreasing")
    return mu


def hook_dimension(mu) -> int:
    """Dimension of the irreducible S_d-module for shape mu (hook lengths)."""
    mu = check_partition(mu)
    d = sum(mu)
    prod = 1
    for i, row in enumerate(mu):
        for j in range(row):
            prod *= row - j + sum(1 for later in mu[i + 1 :] if later > j)
    return factorial(d) // prod


def kostka_hook(mu, r: int) -> int:
    """Multiplicity of shape mu inside the span of ordered r-tuples of
    distinct letters: semistandard fillings of mu with (d-r) ones and the
    single values 2, ..., r+1, rows weakly and columns strictly increasing.

    Counted by direct backtracking so the combinatorial rule stays visible.
    """
    mu = check_partition(mu)
    d = sum(mu)
    if not 2 <= r <= d:
        raise InvalidDegreeError("need 2 <= r <= d")
    remaining = [0] * (r + 2)  # remaining[v] = copies of value v still to place
    remaining[1] = d - r
    for v in range(2, r + 2):
        remaining[v] = 1

    cells = [(i, j) for i, row in enumerate(mu) for j in range(row)]
    filling: dict[tuple[int, int], int] = {}

    def backtrack(idx: int) -> int:
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = max(lo, filling[(i, j - 1)])  # weakly increasing rows
        if i > 0:
            lo = max(lo, filling[(i - 1, j)] + 1)  # strictly increasing columns
        total = 0
        for v in range(lo, r + 2):
            if remaining[v] == 0:
                continue
            remaining[v] -= 1
            filling[(i, j)] = v
            total += backtrack(idx + 1)
            remaining[v] += 1
        return total

    return backtrack(0)


# ---------------------------------------------------------------------------
# Murnaghan-Nakayama characters
# ---------------------------------------------------------------------------


def _beta_set(mu: Partition) -> tuple[int, ...]:
    k = len(mu)
    return tuple(sorted(mu[i] + (k - 1 - i) for i in range(k)))


def _partition_from_beta(beta: tuple[int, ...]) -> Partition:
    k = len(beta)
    parts = tuple(
        sorted((b - i for i, b in enumerate(sorted(beta))), reverse=True)
    )
    return tuple(p for p in parts if p > 0)


def _strip_removals(mu: Partition, t: int):
    """All ways to remove a border strip of length t: (sign, smaller shape)."""
    beta = _beta_set(mu)
    beta_set = set(beta)
    for b in beta:
        if b >= t and (b - t) not in beta_set:
            height = sum(1 for c in beta if b - t < c < b)
            new_beta = tuple(sorted(beta_set - {b} | {b - t}))
            yield (-1) ** height, _partition_from_beta(new_beta)


@lru_cache(maxsize=None)
def _mn(mu: Partition, parts: tuple[int, ...]) -> int:
    if not parts:
        return 1
    t, rest = parts[0], parts[1:]
    total = 0
    for sign, smaller in _strip_removals(mu, t):
        total += sign * _mn(smaller, rest)
    return total


def mn_character(mu, cycle_type) -> int:
    """Character value of shape mu on the class of the given cycle type,
    by recursive border-strip removal."""
    mu = check_partition(mu)
    sigma = check_partition(cycle_type)
    if sum(mu) != sum(sigma):
        raise InvalidDegreeError("shape and cycle type must partition the same d")
    return _mn(mu, sigma)


def conjugacy_class_size(cycle_type) -> int:
    """Size of the S_d conjugacy class with the given cycle type."""
    sigma = check_partition(cycle_type)
    d = sum(sigma)
    denom = 1
    for part in set(sigma):
        k = sigma.count(part)
        denom *= part**k * factorial(k)
    return factorial(d) // denom


def cycle_type_power(sigma, k: int) -> Partition:
    """Cycle type of the k-th power: each ell-cycle splits into gcd(ell, k)
    cycles of length ell / gcd(ell, k)."""
    sigma = check_partition(sigma)
    parts: list[int] = []
    for ell in sigma:
        g = gcd(ell, k)
        parts.extend([ell // g] * g)
    return tuple(sorted(parts, reverse=True))


def cycle_type_order(sigma) -> int:
    sigma = check_partition(sigma)
    return lcm(*sigma)


# ---------------------------------------------------------------------------
# assembled table
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ReprTable:
    """Per-partition data for S_d.

    mult[mu] holds the multiplicities of mu in P_r for r = 2..d (in order);
    character[mu] is the character vector over conjugacy classes indexed by
    `classes` (same reverse-lex partition order as `parts`).
    """

    d: int
    parts: tuple[Partition, ...]
    dims: dict[Partition, int]
    mult: dict[Partition, tuple[int, ...]]
    character: dict[Partition, tuple[int, ...]]

    @property
    def classes(self) -> tuple[Partition, ...]:
        return self.parts

    def multiplicity(self, mu: Partition, r: int) -> int:
        return self.mult[tuple(mu)][r - 2]


def repr_table(d: int) -> ReprTable:
    """Dimensions, tuple-module multiplicities and characters for S_d,
    cross-checked against the regular-representation identities."""
    if not 2 <= d <= MAX_DEGREE:
        raise InvalidDegreeError(f"repr_table supported for 2 <= d <= {MAX_DEGREE}")
    parts = tuple(partitions(d))
    dims = {mu: hook_dimension(mu) for mu in parts}
    mult = {
        mu: tuple(kostka_hook(mu, r) for r in range(2, d + 1)) for mu in parts
    }
    character = {
        mu: tuple(mn_character(mu, c) for c in parts) for mu in parts
    }

    if sum(dim * dim for dim in dims.values()) != factorial(d):
        raise InternalInconsistencyError("sum of dim^2 != d!")
    for mu in parts:
        if mult[mu][d - 2] != dims[mu] or (d >= 3 and mult[mu][d - 3] != dims[mu]):
            raise InternalInconsistencyError(
                "top tuple-module multiplicities must equal the dimension"
            )
    for r in range(2, d + 1):
        total = sum(mult[mu][r - 2] * dims[mu] for mu in parts)
        if total != factorial(d) // factorial(d - r):
            raise InternalInconsistencyError(
                f"P_{r} dimension mismatch: {total}"
            )
    return ReprTable(d=d, parts=parts, dims=dims, mult=mult, character=character)


def fixed_dim(mu, sigma) -> int:
    """Dimension of the subspace fixed by the cyclic group generated by an
    element of cycle type sigma: average of the character over its powers."""
    mu = check_partition(mu)
    sigma = check_partition(sigma)
    order = cycle_type_order(sigma)
    total = sum(
        mn_character(mu, cycle_type_power(sigma, k)) for k in range(order)
    )
    dim = Fraction(total, order)
    if dim.denominator != 1 or dim < 0:
        raise InternalInconsistencyError(
            f"fixed subspace dimension {dim} is not a nonnegative integer"
        )
    return int(dim)


def render_repr_table(table: ReprTable) -> str:
    """One row per partition: shape, dim, multiplicities in P_2..P_d, then
    the character vector over cycle types."""
    lines = []
    header = (
        "partition dim "
        + " ".join(f"m_r{r}" for r in range(2, table.d + 1))
        + " | chi on "
        + " ".join(_fmt_partition(c) for c in table.classes)
    )
    lines.append(header)
    for mu in table.parts:
        lines.append(
            f"{_fmt_partition(mu)} {table.dims[mu]} "
            + " ".join(str(v) for v in table.mult[mu])
            + " | "
            + " ".join(str(v) for v in table.character[mu])
        )
    return "\n".join(lines)


def _fmt_partition(mu: Partition) -> str:
    return "(" + ",".join(str(x) for x in mu) + ")"
