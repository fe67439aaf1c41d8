"""Canonicalization into the reduction-friendly form and child-code extraction.

A reduction-friendly table carries a fixed staircase on its left block:
site j (1-based, j = 1..B) is held by a group of 2m adjacent rows near
the bottom, the Z-type rows Z_{alpha^k} above the X-type rows
X_{alpha^k}, and every other row shows the identity there.  With
B = min(floor(n/2), N/(2m)) for an N-generator table, row indices
(0-based) are

    Z_{alpha^k} on site j  ->  row  extra + 2m*(B - j) + k
    X_{alpha^k} on site j  ->  row  extra + 2m*(B - j) + m + k

where extra = N - 2m*B rows (present exactly when n is odd for a full
stabilizer table) sit at the top with all-identity left blocks.  A child
code follows by deleting the last 2m rows and the first column, turning
[[n,k,d]]_q into [[n-1,k+1,d-1]]_q; iterating yields the whole family.

Canonicalization performs only legal row operations (replacing a row by
a product of powers of rows with an invertible coefficient matrix, plus
permutations), so the generated projective group never changes; the
output drops phase exponents, which group-level comparisons ignore.
The elimination is sequential per column by nature; canonicalize many
tables in parallel from the caller if needed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .codes import (DEFAULT_DISTANCE_BUDGET, CodeParams, GeneratorTable,
                    check_commutation, check_independence, compute_distance)
from .errors import DomainError, ReductionError
from .pauli import PauliString

EVEN = "even"
ODD = "odd"


@dataclass(frozen=True)
class ReductionFriendlyForm:
    """A generator table whose left block carries the extraction staircase."""

    table: GeneratorTable
    block_width: int
    layout: str  # EVEN, or ODD when extra all-identity-left rows exist

    @property
    def extra_rows(self) -> int:
        return len(self.table.gens) - 2 * self.table.field.m * self.block_width

    def validate(self) -> None:
        """Check the left block bit-exactly against the staircase pattern."""
        t = self.table
        f = t.field
        m = f.m
        expected = _pattern_matrix(f, len(t.gens), t.n, self.block_width)
        actual = t.symplectic_matrix()[:, : 2 * m * self.block_width]
        if not np.array_equal(actual, expected):
            raise DomainError("left block does not match the reduction-friendly pattern")
        if (self.layout == ODD) != (self.extra_rows > 0):
            raise DomainError(f"layout tag {self.layout} inconsistent with row count")


def block_width(table: GeneratorTable) -> int:
    return min(table.n // 2, len(table.gens) // (2 * table.field.m))


def _pattern_matrix(field, n_rows: int, n_sites: int, width: int) -> np.ndarray:
    """Left-block target: the staircase in symplectic coefficients."""
    m = field.m
    extra = n_rows - 2 * m * width
    out = np.zeros((n_rows, 2 * m * width), dtype=np.int64)
    for j in range(1, width + 1):
        base_row = extra + 2 * m * (width - j)
        col = 2 * m * (j - 1)
        for k in range(m):
            alpha_k = field.pow(field.alpha_index, k)
            out[base_row + k, col + m : col + 2 * m] = field.coeff_matrix[alpha_k]
            out[base_row + m + k, col : col + m] = field.coeff_matrix[alpha_k]
    return out


def _target_block(field) -> np.ndarray:
    """Per-site target restrictions, rows ordered Z_{alpha^k} then X_{alpha^k}."""
    m = field.m
    t = np.zeros((2 * m, 2 * m), dtype=np.int64)
    for k in range(m):
        alpha_k = field.pow(field.alpha_index, k)
        t[k, m:] = field.coeff_matrix[alpha_k]
        t[m + k, :m] = field.coeff_matrix[alpha_k]
    return t


def _greedy_pivots(mat: np.ndarray, rows: list[int], cols: slice, p: int, need: int) -> list[int]:
    """Lowest-index subset of ``rows`` whose restrictions to ``cols`` span Z_p^need."""
    chosen: list[int] = []
    stack = np.zeros((0, need), dtype=np.int64)
    for r in rows:
        v = mat[r, cols]
        if not np.any(v):
            continue
        trial = np.vstack([stack, v])
        if linalg.rank(trial, p) > len(chosen):
            chosen.append(r)
            stack = trial
            if len(chosen) == need:
                return chosen
    raise ReductionError(
        "no independent pivot on this site: fewer than the required "
        f"{need} generators act there independently (distance <= 1)"
    )


def find_pivot_rows(table: GeneratorTable, site: int) -> list[int]:
    """The 2m lowest-index rows spanning the single-site symplectic space
    at ``site`` (0-based).  Deterministic; raises ReductionError when the
    restrictions are span-deficient."""
    if not 0 <= site < table.n:
        raise DomainError(f"site {site} out of range for n={table.n}")
    f = table.field
    m = f.m
    mat = table.symplectic_matrix()
    cols = slice(2 * m * site, 2 * m * (site + 1))
    return _greedy_pivots(mat, list(range(len(table.gens))), cols, f.p, 2 * m)


def to_reduction_friendly(table: GeneratorTable) -> ReductionFriendlyForm:
    """Bring a table to the reduction-friendly form by legal row operations.

    The input must pass commutation and independence and have the
    generator count of a full (k=0) stabilizer table, or more generally
    of a table already shaped like an extracted child (N a multiple of
    2m down to 2m).  Already-canonical tables come back unchanged.
    """
    pair = check_commutation(table)
    if pair is not None:
        raise DomainError(f"generators {pair[0]} and {pair[1]} do not commute")
    if check_independence(table) is not None:
        raise DomainError("generators are dependent")
    f = table.field
    p, m = f.p, f.m
    n = table.n
    mat = table.symplectic_matrix().copy()
    n_rows = len(table.gens)
    width = block_width(table)
    if width < 1:
        raise DomainError("table too small to canonicalize (needs at least 2m generators)")
    extra = n_rows - 2 * m * width
    target = _target_block(f)
    target_inv = linalg.inv(target, p)

    position: dict[int, np.ndarray] = {}
    active = list(range(n_rows))
    fixed_rows: list[np.ndarray] = []
    for j in range(width):
        cols = slice(2 * m * j, 2 * m * (j + 1))
        sel = _greedy_pivots(mat, active, cols, p, 2 * m)
        basis_change = (target @ linalg.inv(mat[sel][:, cols], p)) % p
        new_rows = (basis_change @ mat[sel]) % p
        # clear this site from every other row, fixed rows included;
        # the new pivots are zero on all earlier sites, so nothing regresses
        for r in active:
            if r in sel:
                continue
            coeffs = (mat[r, cols] @ target_inv) % p
            if np.any(coeffs):
                mat[r] = (mat[r] - coeffs @ new_rows) % p
        for row in fixed_rows:
            coeffs = (row[cols] @ target_inv) % p
            if np.any(coeffs):
                row[:] = (row - coeffs @ new_rows) % p
        base = extra + 2 * m * (width - 1 - j)
        for t in range(2 * m):
            position[base + t] = new_rows[t]
            fixed_rows.append(new_rows[t])
        active = [r for r in active if r not in sel]

    for slot, r in enumerate(active):  # leftover rows: identity left blocks
        position[slot] = mat[r]

    out_mat = np.vstack([position[i] for i in range(n_rows)])
    if not linalg.same_row_span(out_mat, table.symplectic_matrix(), p):
        raise AssertionError("row operations changed the generated group")  # pragma: no cover
    gens = tuple(PauliString.from_symplectic(f, out_mat[i], n) for i in range(n_rows))
    out = GeneratorTable(f, n, gens, table.claimed)
    form = ReductionFriendlyForm(out, width, ODD if extra else EVEN)
    form.validate()
    return form


def child_code(form: ReductionFriendlyForm) -> GeneratorTable:
    """Drop the last 2m rows and the first column: [[n-1, k+1, d-1]]_q.

    Raises DomainError when no step remains (either no rows would be
    left or the child's claimed distance would drop below 2).
    """
    form.validate()
    t = form.table
    m = t.field.m
    if len(t.gens) <= 2 * m or form.block_width < 1:
        raise DomainError("no reduction steps remaining for this table")
    claimed = None
    if t.claimed is not None:
        if t.claimed.d - 1 < 2:
            raise DomainError(
                f"child of {t.claimed.label()} would have distance {t.claimed.d - 1}; "
                "the family stops at distance 2"
            )
        claimed = CodeParams(t.n - 1, t.claimed.k + 1, t.claimed.d - 1, t.field.q)
    gens = tuple(
        PauliString(t.field, g.sites[1:], 0) for g in t.gens[: len(t.gens) - 2 * m]
    )
    return GeneratorTable(t.field, t.n - 1, gens, claimed)


def derive_family(
    table: GeneratorTable,
    verify: bool = True,
    budget: int = DEFAULT_DISTANCE_BUDGET,
) -> list[tuple[CodeParams, GeneratorTable]]:
    """Canonicalize and extract the full child family.

    Returns [(params, table)] starting with the canonicalized input and
    continuing while the child distance stays >= 2, i.e. children
    k+1 .. floor(n0/2)-1 for a parent AME table.  When ``verify`` is on,
    every member is checked: commutation, independence, and brute-force
    distance equal to the parameter formula (within ``budget``).
    """
    form = to_reduction_friendly(table)
    if table.claimed is not None:
        params = table.claimed
    else:
        n0 = form.table.n + form.table.k  # parent AME size for the formula
        params = CodeParams(
            form.table.n, form.table.k, n0 // 2 + 1 - form.table.k, table.field.q
        )
        form = ReductionFriendlyForm(form.table.relabel(params), form.block_width, form.layout)
    out = [(params, form.table)]
    while params.d - 1 >= 2 and len(form.table.gens) > 2 * table.field.m:
        child = child_code(form)
        params = child.claimed
        extra = len(child.gens) - 2 * table.field.m * block_width(child)
        form = ReductionFriendlyForm(child, block_width(child), ODD if extra else EVEN)
        out.append((params, child))
    if verify:
        for params, t in out:
            pair = check_commutation(t)
            if pair is not None:  # pragma: no cover - construction guarantees
                raise AssertionError(f"family member {params.label()} fails commutation {pair}")
            if check_independence(t) is not None:  # pragma: no cover
                raise AssertionError(f"family member {params.label()} is dependent")
            d = compute_distance(t, params.d, budget)
            if d != params.d:
                raise AssertionError(
                    f"family member {params.label()} has distance {d}, expected {params.d}"
                )
    return out
