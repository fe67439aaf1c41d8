"""Independent mini-oracles for the test suite.

Everything here is deliberately written from scratch against the
definitions, without touching the package's tables or symplectic
machinery, so expected values stay independent of the code paths they
check: naive polynomial arithmetic over Z_p[x]/(modulus), dense Pauli
matrices built by Kronecker products, and exhaustive searches.
"""

from __future__ import annotations

import itertools

import numpy as np


# -- polynomial arithmetic over Z_p[x]/(modulus), coefficients low degree first


def poly_mul_mod(a, b, modulus, p):
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            prod[i + j] = (prod[i + j] + ai * bj) % p
    deg = len(modulus) - 1
    # reduce: modulus is monic, low-first
    while len(prod) > deg:
        lead = prod.pop()
        if lead:
            for t in range(deg):
                prod[len(prod) - deg + t] = (prod[len(prod) - deg + t] - lead * modulus[t]) % p
    while len(prod) < deg:
        prod.append(0)
    return prod


def poly_add(a, b, p):
    return [(x + y) % p for x, y in zip(a, b)]


def poly_pow(a, s, modulus, p):
    out = [1] + [0] * (len(modulus) - 2)
    for _ in range(s):
        out = poly_mul_mod(out, a, modulus, p)
    return out


def poly_trace(a, modulus, p, m):
    """x + x^p + ... + x^(p^(m-1)) evaluated by repeated powering."""
    acc = [0] * (len(modulus) - 1)
    term = list(a)
    for _ in range(m):
        acc = poly_add(acc, term, p)
        term = poly_pow(term, p, modulus, p)
    assert all(c == 0 for c in acc[1:]), "trace must land in the prime subfield"
    return acc[0]


# -- dense single-site Pauli matrices and Kronecker products ------------------


def dense_pauli(field, sites, phase_exp=0):
    """Matrix of omega**phase_exp * prod X_a Z_b built by Kronecker products,
    using only the field's add/trace-of-product scalar functions."""
    q, p = field.q, field.p
    omega = np.exp(2j * np.pi / p)
    total = np.array([[omega**phase_exp]])
    for a, b in sites:
        x_mat = np.zeros((q, q), dtype=complex)
        for j in range(q):
            x_mat[field.add(j, a), j] = 1.0
        z_mat = np.diag([omega ** field.trace_mul(b, j) for j in range(q)])
        total = np.kron(total, x_mat @ z_mat)
    return total


# -- exhaustive searches -----------------------------------------------------


def exhaustive_inverse(x, q):
    """Multiplicative inverse in Z_q by scanning (prime q)."""
    for y in range(1, q):
        if (x * y) % q == 1:
            return y
    raise AssertionError(f"no inverse for {x} mod {q}")


def exhaustive_dual_basis(field, basis_idx):
    """All m-tuples scanned for trace-orthonormality against the basis."""
    m = field.m
    hits = []
    for cand in itertools.product(range(field.q), repeat=m):
        if all(
            field.trace_mul(bi, cj) == (1 if i == j else 0)
            for i, bi in enumerate(basis_idx)
            for j, cj in enumerate(cand)
        ):
            hits.append(cand)
    return hits


def projective_group(table):
    """All products of generator powers as a set of phase-free site tuples."""
    p = table.field.p
    gens = table.gens
    seen = set()
    for powers in itertools.product(range(p), repeat=len(gens)):
        el = None
        for s, g in zip(powers, gens):
            part = g.pow(s)
            el = part if el is None else el * part
        seen.add(el.sites)
    return seen


def min_group_weight(table):
    """Smallest weight of a nonzero element of the projective group."""
    weights = [
        sum(1 for a, b in sites if a or b)
        for sites in projective_group(table)
    ]
    return min(w for w in weights if w > 0)
