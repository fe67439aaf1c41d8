"""Generator tables, code verification, brute-force distance, entropies.

A code is described by an ordered list of Pauli strings claimed to
generate its stabilizer group.  Verification covers the three generator
conditions: independence (symplectic rank over Z_p), mutual commutation,
and distance (exhaustive scan over weighted errors).  Distance semantics:

* k = 0: the distance is the smallest weight of a nonzero element of
  the projective stabilizer group itself, i.e. of any error commuting
  with every generator;
* k > 0: errors inside the projective group are degenerate and do not
  count; the distance is the smallest weight of an error commuting with
  every generator that lies outside the group (a nontrivial logical).

Scans partition cleanly by weight class and are deterministic: errors
are visited in the lexicographic order of :func:`~amecodes.pauli.enumerate_errors`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import linalg
from .errors import DomainError, ResourceBudgetError
from .fields import Field
from .pauli import PauliString, error_count

DEFAULT_DISTANCE_BUDGET = 10**9

QMDS = "QMDS"
SUBOPTIMAL_QMDS = "suboptimal-QMDS"
BELOW_BOUND = "below-bound"


@dataclass(frozen=True)
class CodeParams:
    """The tuple [[n, k, d]]_q, validated against the quantum Singleton bound."""

    n: int
    k: int
    d: int
    q: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"n must be >= 1, got {self.n}")
        if not 0 <= self.k <= self.n:
            raise DomainError(f"k must lie in [0, n], got k={self.k}, n={self.n}")
        if self.d < 1:
            raise DomainError(f"d must be >= 1, got {self.d}")
        if self.n - self.k < 2 * (self.d - 1):
            raise DomainError(
                f"[[{self.n},{self.k},{self.d}]]_{self.q} violates the quantum "
                f"Singleton bound n-k >= 2(d-1)"
            )

    def label(self) -> str:
        return f"[[{self.n},{self.k},{self.d}]]_{self.q}"


def classify_singleton(params: CodeParams) -> str:
    """QMDS / suboptimal-QMDS / below-bound per the Singleton-bound gap.

    QMDS codes meet n-k = 2(d-1) exactly; when n and k have different
    parity the bound cannot be met and the best possible gap is one,
    which classifies as suboptimal-QMDS.
    """
    gap = params.n - params.k - 2 * (params.d - 1)
    if gap == 0:
        return QMDS
    if gap == 1 and (params.n - params.k) % 2 == 1:
        return SUBOPTIMAL_QMDS
    return BELOW_BOUND


@dataclass(frozen=True)
class GeneratorTable:
    """An ordered generator list claiming to define an [[n,k,d]]_q code.

    The expected generator count is m*(n-k) (m = 1 for prime q); k is
    recovered from the count.  ``claimed`` carries the parameters stated
    by the source, if any.
    """

    field: Field
    n: int
    gens: tuple[PauliString, ...]
    claimed: CodeParams | None = None

    def __post_init__(self):
        for g in self.gens:
            if g.field != self.field or g.n != self.n:
                raise DomainError("all generators must share the table's field and length")
        m = self.field.m
        if len(self.gens) % m or not 0 < len(self.gens) <= m * self.n:
            raise DomainError(
                f"generator count {len(self.gens)} is not m*(n-k) for m={m}, n={self.n}"
            )
        if self.claimed is not None:
            expect = m * (self.n - self.claimed.k)
            if len(self.gens) != expect:
                raise DomainError(
                    f"{self.claimed.label()} needs {expect} generators, got {len(self.gens)}"
                )

    @property
    def k(self) -> int:
        return self.n - len(self.gens) // self.field.m

    def symplectic_matrix(self) -> np.ndarray:
        """Rows are generator coefficient vectors over Z_p (phases dropped)."""
        return np.array([g.symplectic() for g in self.gens], dtype=np.int64)

    def params(self, d: int | None = None) -> CodeParams:
        if d is None:
            if self.claimed is None:
                raise DomainError("no claimed distance; pass d explicitly")
            d = self.claimed.d
        return CodeParams(self.n, self.k, d, self.field.q)

    def relabel(self, claimed: CodeParams | None) -> "GeneratorTable":
        return GeneratorTable(self.field, self.n, self.gens, claimed)


def check_commutation(table: GeneratorTable) -> tuple[int, int] | None:
    """None when all generator pairs commute, else the first failing pair
    as 0-based row indices."""
    gens = table.gens
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if gens[i].commutation_exp(gens[j]) != 0:
                return (i, j)
    return None


def check_independence(table: GeneratorTable) -> np.ndarray | None:
    """None when the generators are independent, else a dependency witness.

    The witness is a nonzero coefficient vector c over Z_p with
    sum_i c_i * row_i = 0 in the symplectic representation.
    """
    mat = table.symplectic_matrix()
    p = table.field.p
    if linalg.rank(mat, p) == len(table.gens):
        return None
    kernel = linalg.nullspace(mat.T, p)
    # nullspace of the transpose gives left-kernel rows, i.e. row combinations
    return kernel[0] if len(kernel) else None


# -- distance ----------------------------------------------------------------


def _commutation_map(table: GeneratorTable) -> np.ndarray:
    """Matrix A with commutation_exp(E, g_j) = E.symplectic() @ A[:, j] mod p.

    Per site, tr(b*c - a*d) is the bilinear trace form on coefficient
    vectors; gram is its matrix on the {1, alpha, ...} basis.
    """
    f = table.field
    m, n, p = f.m, table.n, f.p
    a = np.zeros((2 * m * n, len(table.gens)), dtype=np.int64)
    gram = f.gram
    for j, g in enumerate(table.gens):
        for s, (c, d) in enumerate(g.sites):
            base = 2 * m * s
            c_vec = f.coeff_matrix[c]
            d_vec = f.coeff_matrix[d]
            a[base : base + m, j] = (-(gram @ d_vec)) % p
            a[base + m : base + 2 * m, j] = (gram @ c_vec) % p
    return a


def _site_pair_vectors(field: Field) -> np.ndarray:
    """((q^2)-1, 2m) coefficient blocks of all nonzero (a, b) site pairs,
    in the lexicographic (a, b) index order used by enumerate_errors."""
    q, m = field.q, field.m
    out = np.zeros((q * q - 1, 2 * m), dtype=np.int64)
    row = 0
    for a in range(q):
        for b in range(q):
            if a == 0 and b == 0:
                continue
            out[row, :m] = field.coeff_matrix[a]
            out[row, m:] = field.coeff_matrix[b]
            row += 1
    return out


def find_min_undetectable(
    table: GeneratorTable, d_max: int, budget: int = DEFAULT_DISTANCE_BUDGET
) -> tuple[int, PauliString] | None:
    """First (by weight, then lexicographic order) undetectable error.

    Returns (weight, error) or None when nothing undetectable exists at
    weight <= d_max.  Raises ResourceBudgetError before starting a
    weight class that would push the commutation-test count past the
    budget.
    """
    f = table.field
    p, m, n, q = f.p, f.m, table.n, f.q
    a_map = _commutation_map(table)
    pair_vecs = _site_pair_vectors(f)
    k = table.k
    if k > 0:
        red, pivots = linalg.rref(table.symplectic_matrix(), p)
    tests_done = 0
    for w in range(1, min(d_max, n) + 1):
        tests_done += error_count(f, n, w) * len(table.gens)
        if tests_done > budget:
            raise ResourceBudgetError(
                f"distance scan at weight {w} needs {tests_done} commutation tests "
                f"(budget {budget})"
            )
        n_pairs = q * q - 1
        for sites in itertools.combinations(range(n), w):
            # per-site syndrome contributions, then a broadcast sum over
            # the w-fold cartesian product (lexicographic flat order)
            parts = []
            for s in sites:
                block = a_map[2 * m * s : 2 * m * (s + 1), :]
                parts.append((pair_vecs @ block) % p)
            total = parts[0].reshape((n_pairs,) + (1,) * (w - 1) + (-1,))
            for t in range(1, w):
                shape = (1,) * t + (n_pairs,) + (1,) * (w - 1 - t) + (-1,)
                total = total + parts[t].reshape(shape)
            flat = (total.reshape(-1, total.shape[-1]) % p).astype(np.int8)
            zero_rows = np.nonzero(~flat.any(axis=1))[0]
            for idx in zero_rows:
                combo = []
                rem = int(idx)
                for _ in range(w):
                    combo.append(rem % n_pairs)
                    rem //= n_pairs
                combo.reverse()
                err_vec = np.zeros(2 * m * n, dtype=np.int64)
                for s, pair_idx in zip(sites, combo):
                    err_vec[2 * m * s : 2 * m * (s + 1)] = pair_vecs[pair_idx]
                if k > 0 and not np.any(linalg.reduce_against(err_vec, red, pivots, p)):
                    continue  # a stabilizer element: degenerate, not a logical
                return w, PauliString.from_symplectic(f, err_vec, n)
    return None


def compute_distance(
    table: GeneratorTable, d_max: int, budget: int = DEFAULT_DISTANCE_BUDGET
) -> int | None:
    """Brute-force code distance, or None when it exceeds d_max.

    Requires a table that already passes commutation and independence.
    Deterministic regardless of how the scan is partitioned.
    """
    hit = find_min_undetectable(table, d_max, budget)
    return hit[0] if hit else None


# -- subsystem entropies and the AME check -------------------------------------


def subsystem_entropy(table: GeneratorTable, sites: Iterable[int]) -> float:
    """Entropy (bits) of the reduced state of a stabilizer state on ``sites``.

    Only meaningful for k = 0 tables.  Computed from symplectic rank:
    with S_A the projective stabilizer elements supported inside the
    subset, S = (|A| - log_q |S_A|) * log2(q).  Scales to n = 14, no
    dense vectors involved.
    """
    if table.k != 0:
        raise DomainError("subsystem entropy is defined for k = 0 tables only")
    subset = sorted(set(sites))
    if not subset:
        raise DomainError("subset must be nonempty")
    if not all(0 <= s < table.n for s in subset):
        raise DomainError(f"sites out of range for n={table.n}")
    f = table.field
    m, p = f.m, f.p
    mat = table.symplectic_matrix()
    complement = [s for s in range(table.n) if s not in subset]
    cols = [2 * m * s + t for s in complement for t in range(2 * m)]
    if cols:
        outside_rank = linalg.rank(mat[:, cols], p)
    else:
        outside_rank = 0
    dim_inside = len(table.gens) - outside_rank  # log_p |S_A|
    return (len(subset) - dim_inside / m) * math.log2(f.q)


def is_ame(table: GeneratorTable, budget: int = DEFAULT_DISTANCE_BUDGET) -> bool:
    """True when the k = 0 table has distance floor(n/2) + 1.

    Cross-checkable against subsystem_entropy over balanced subsets.
    """
    if table.k != 0:
        raise DomainError("the AME check applies to k = 0 tables")
    target = table.n // 2 + 1
    return compute_distance(table, target, budget) == target
