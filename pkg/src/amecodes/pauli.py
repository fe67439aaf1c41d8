"""Generalized Pauli strings over Z_p and GF(p^m) in symplectic form.

A string is a per-site pair of field elements (a, b) standing for the
site operator X_a Z_b, together with a global phase exponent t, the
whole operator being omega**t * prod_i X_{a_i} Z_{b_i} for
omega = exp(2*pi*i/p).  Each site is stored X-part before Z-part;
phases created by reordering accumulate in the exponent, which makes
multiplication associative and exactly trackable.  Group-level
comparisons elsewhere in the package are projective (phases ignored).

Site token grammar, shared with the stabilizer-table file format:
``i`` is the identity, ``x<e>``, ``z<e>`` and ``x<e>z<e>`` carry the
element index ``<e>`` in decimal (for prime q the index equals the
exponent, so ``x1`` is X and ``z2`` is Z squared).  Parsing is
case-insensitive; emission is lowercase.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import DomainError, FieldMismatchError, ResourceBudgetError
from .fields import Field, FieldElement

APPLY_DIM_LIMIT = 2**20

_TOKEN_RE = re.compile(r"^(?:i|(?:x(\d+))?(?:z(\d+))?)$")


@dataclass(frozen=True)
class PauliString:
    """An n-site generalized Pauli operator in symplectic representation.

    ``sites`` holds per-site element-index pairs (x_part, z_part);
    ``phase_exp`` is the exponent of omega = exp(2*pi*i/p).
    """

    field: Field
    sites: tuple[tuple[int, int], ...]
    phase_exp: int = 0

    def __post_init__(self):
        q = self.field.q
        for a, b in self.sites:
            if not (0 <= a < q and 0 <= b < q):
                raise DomainError(f"site pair ({a},{b}) out of range for q={q}")
        object.__setattr__(self, "phase_exp", self.phase_exp % self.field.p)

    # -- constructors -----------------------------------------------------

    @classmethod
    def identity(cls, field: Field, n: int) -> "PauliString":
        return cls(field, ((0, 0),) * n)

    @classmethod
    def single(cls, field: Field, n: int, site: int, x: int = 0, z: int = 0) -> "PauliString":
        sites = [(0, 0)] * n
        sites[site] = (x, z)
        return cls(field, tuple(sites))

    @classmethod
    def from_tokens(cls, field: Field, tokens: Sequence[str], phase_exp: int = 0) -> "PauliString":
        return cls(field, tuple(parse_site_token(t, field.q) for t in tokens), phase_exp)

    # -- basics ------------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.sites)

    def weight(self) -> int:
        """Number of sites acting non-trivially."""
        return sum(1 for a, b in self.sites if a or b)

    @property
    def is_identity(self) -> bool:
        return self.weight() == 0

    def site_elements(self) -> list[tuple[FieldElement, FieldElement]]:
        return [(self.field.element(a), self.field.element(b)) for a, b in self.sites]

    def _check_peer(self, other: "PauliString") -> None:
        if not isinstance(other, PauliString):
            raise FieldMismatchError(f"expected PauliString, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatchError("operands live over different fields")
        if other.n != self.n:
            raise FieldMismatchError(f"length mismatch: {self.n} vs {other.n}")

    # -- group operations ------------------------------------------------------

    def __mul__(self, other: "PauliString") -> "PauliString":
        """Operator product, with the reordering phase tracked exactly.

        Site-wise, (X_a Z_b)(X_c Z_d) = omega**tr(b*c) X_(a+c) Z_(b+d).
        """
        self._check_peer(other)
        f = self.field
        phase = self.phase_exp + other.phase_exp
        sites = []
        for (a, b), (c, d) in zip(self.sites, other.sites):
            phase += f.trace_mul(b, c)
            sites.append((f.add(a, c), f.add(b, d)))
        return PauliString(f, tuple(sites), phase % f.p)

    def pow(self, s: int) -> "PauliString":
        """s-fold product with itself; s must be a non-negative integer."""
        if s < 0:
            raise DomainError("negative powers are not defined here; use p-1-th powers")
        out = PauliString.identity(self.field, self.n)
        for _ in range(s):
            out = out * self
        return out

    def commutation_exp(self, other: "PauliString") -> int:
        """The s in self*other = omega**s other*self; zero iff they commute."""
        self._check_peer(other)
        f = self.field
        s = 0
        for (a, b), (c, d) in zip(self.sites, other.sites):
            s += f.trace_mul(b, c) - f.trace_mul(a, d)
        return s % f.p

    def symplectic(self) -> np.ndarray:
        """Coefficient vector over Z_p, per-site blocks [x coeffs | z coeffs]."""
        f = self.field
        out = np.zeros(2 * f.m * self.n, dtype=np.int64)
        for i, (a, b) in enumerate(self.sites):
            base = 2 * f.m * i
            out[base : base + f.m] = f.coeff_matrix[a]
            out[base + f.m : base + 2 * f.m] = f.coeff_matrix[b]
        return out

    @classmethod
    def from_symplectic(cls, field: Field, vec: Sequence[int], n: int, phase_exp: int = 0) -> "PauliString":
        v = np.asarray(vec, dtype=np.int64) % field.p
        m = field.m
        sites = []
        for i in range(n):
            base = 2 * m * i
            a = field.index_of_coeffs(v[base : base + m])
            b = field.index_of_coeffs(v[base + m : base + 2 * m])
            sites.append((a, b))
        return cls(field, tuple(sites), phase_exp)

    # -- text form ---------------------------------------------------------------

    def to_tokens(self) -> list[str]:
        return [emit_site_token(a, b) for a, b in self.sites]

    def __str__(self) -> str:
        return " ".join(self.to_tokens())


def parse_site_token(token: str, q: int) -> tuple[int, int]:
    """Parse one site token into an (x_index, z_index) pair."""
    m = _TOKEN_RE.match(token.strip().lower())
    if not m or (m.group(0) != "i" and m.group(1) is None and m.group(2) is None):
        raise DomainError(f"bad site token {token!r}")
    if m.group(0) == "i":
        return (0, 0)
    a = int(m.group(1)) if m.group(1) is not None else 0
    b = int(m.group(2)) if m.group(2) is not None else 0
    if a >= q or b >= q:
        raise DomainError(f"site token {token!r} has element index >= q={q}")
    return (a, b)


def emit_site_token(a: int, b: int) -> str:
    if a == 0 and b == 0:
        return "i"
    if b == 0:
        return f"x{a}"
    if a == 0:
        return f"z{b}"
    return f"x{a}z{b}"


def enumerate_errors(field: Field, n: int, weight: int) -> Iterator[PauliString]:
    """All phase-free strings of exactly the given weight, each once.

    Deterministic lexicographic order over (site subset, element pairs),
    so scans are reproducible and resumable; the count is
    C(n, weight) * (q**2 - 1)**weight.
    """
    if weight < 0 or weight > n:
        raise DomainError(f"weight {weight} out of range for n={n}")
    if weight == 0:
        yield PauliString.identity(field, n)
        return
    q = field.q
    pairs = [(a, b) for a in range(q) for b in range(q) if a or b]
    for sites in itertools.combinations(range(n), weight):
        for assignment in itertools.product(pairs, repeat=weight):
            full = [(0, 0)] * n
            for s, ab in zip(sites, assignment):
                full[s] = ab
            yield PauliString(field, tuple(full))


def error_count(field: Field, n: int, weight: int) -> int:
    return math.comb(n, weight) * (field.q**2 - 1) ** weight


@dataclass(frozen=True)
class StateVector:
    """A dense state on n q-dimensional sites.

    Amplitudes are indexed by base-q digit strings, site 0 most
    significant; digit values are element indices of the field.
    """

    field: Field
    n: int
    amplitudes: np.ndarray
    normalized: bool = True

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        object.__setattr__(self, "amplitudes", amps)
        if amps.shape != (self.field.q**self.n,):
            raise DomainError(
                f"state needs q**n = {self.field.q**self.n} amplitudes, got {amps.shape}"
            )
        if self.normalized and abs(np.linalg.norm(amps) - 1.0) > 1e-10:
            raise DomainError("state flagged normalized but has |norm - 1| > 1e-10")

    def inner(self, other: "StateVector") -> complex:
        return complex(np.vdot(self.amplitudes, other.amplitudes))


def _digit_table(q: int, n: int) -> np.ndarray:
    """(n, q**n) array of base-q digits of every index, site 0 first."""
    idx = np.arange(q**n)
    digits = np.empty((n, q**n), dtype=np.int64)
    for site in range(n - 1, -1, -1):
        digits[site] = idx % q
        idx = idx // q
    return digits


def dense_action(op: PauliString, hermitian_lift: bool = False) -> tuple[np.ndarray, np.ndarray]:
    """Permutation and per-source phase factor of the operator.

    Returns (perm, factor) with (U v)[perm[j]] = factor[j] * v[j].
    With ``hermitian_lift`` (p = 2 only) an extra i**tr(a*b) per site
    makes the operator order-2, which the eigenspace projector needs.
    """
    f = op.field
    q, n, p = f.q, op.n, f.p
    dim = q**n
    if dim > APPLY_DIM_LIMIT:
        raise ResourceBudgetError(f"dense action needs {dim} amplitudes (> {APPLY_DIM_LIMIT})")
    digits = _digit_table(q, n)
    new_digits = np.empty_like(digits)
    phase = np.zeros(dim, dtype=np.int64)
    for site, (a, b) in enumerate(op.sites):
        phase += f.trmul_table[b][digits[site]]
        new_digits[site] = f.add_table[a][digits[site]]
    perm = np.zeros(dim, dtype=np.int64)
    for site in range(n):
        perm = perm * q + new_digits[site]
    omega = np.exp(2j * np.pi / p)
    factor = omega ** (phase % p) * omega**op.phase_exp
    if hermitian_lift:
        if p == 2:
            y = sum(f.trace_mul(a, b) for a, b in op.sites)
            factor = factor * (1j) ** y
        # odd p: X_a Z_b already has order p, nothing to lift
    return perm, factor


def apply(op: PauliString, state: StateVector) -> StateVector:
    """Exact dense action of the operator, global phase included."""
    if op.field != state.field or op.n != state.n:
        raise FieldMismatchError("operator and state shapes differ")
    perm, factor = dense_action(op)
    out = np.zeros_like(state.amplitudes)
    out[perm] = factor * state.amplitudes
    return StateVector(state.field, state.n, out, normalized=state.normalized)
