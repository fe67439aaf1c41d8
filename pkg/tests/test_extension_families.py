"""End-to-end family extraction over extension fields beyond GF(9).

GF(4) and GF(8) have characteristic 2, so the trace of 1 vanishes in
GF(4) and single-site X and Z commute there; these tables make sure the
staircase construction, distance scans and the dense oracle all hold up
in that regime.
"""

import itertools
import math

import numpy as np
import pytest

from amecodes import linalg
from amecodes.codes import (GeneratorTable, check_commutation, check_independence,
                            compute_distance, is_ame, subsystem_entropy)
from amecodes.fields import GF
from amecodes.oracle import dense_distance, expand_stabilizer, reduced_entropy
from amecodes.pauli import PauliString
from amecodes.reduction import derive_family, to_reduction_friendly


def table(q, n, rows):
    f = GF(q)
    return GeneratorTable(f, n, tuple(PauliString.from_tokens(f, r.split()) for r in rows))


@pytest.fixture
def ame44():
    # stabilizers of sum_{i,j in GF(4)} |i, j, i+j, i+alpha*j>:
    # X_a X_b X_(a+b) X_(a+alpha b) over an (a,b) basis, and the Z rows
    # solving c+e+f = 0, d+e+alpha*f = 0
    return table(4, 4, [
        "z1 z1 z1 i",
        "z2 z2 z2 i",
        "z1 z2 i z1",
        "z2 z3 i z2",
        "x1 i x1 x1",
        "x2 i x2 x2",
        "i x1 x1 x2",
        "i x2 x2 x3",
    ])


def test_ame44_verifies_as_ame(ame44):
    assert check_commutation(ame44) is None
    assert check_independence(ame44) is None
    assert compute_distance(ame44, 3) == 3
    assert is_ame(ame44)
    for size in (1, 2):
        for subset in itertools.combinations(range(4), size):
            assert subsystem_entropy(ame44, subset) == pytest.approx(size * 2.0)


def test_ame44_canonicalizes_and_extracts_children(ame44):
    form = to_reduction_friendly(ame44)
    form.validate()
    assert form.layout == "even" and form.block_width == 2
    assert linalg.same_row_span(
        form.table.symplectic_matrix(), ame44.symplectic_matrix(), 2
    )
    fam = derive_family(ame44)
    assert [p.label() for p, _ in fam] == ["[[4,0,3]]_4", "[[3,1,2]]_4"]
    child = fam[1][1]
    assert len(child.gens) == 4  # 2m fewer rows, one site fewer
    assert compute_distance(child, 2) == 2


def test_ame44_dense_cross_check(ame44):
    cw = expand_stabilizer(ame44)  # 256 amplitudes, inside the dense budget
    assert cw.K == 1
    assert dense_distance(cw, 4) == 3
    assert reduced_entropy(cw.words[0], [0, 3]) == pytest.approx(4.0, abs=1e-9)
    child = derive_family(ame44)[1][1]
    cw_child = expand_stabilizer(child)
    assert cw_child.K == 4
    assert dense_distance(cw_child, 3) == 2


def test_gf8_bell_pair_family():
    # [[2,0,2]]_8 needs mn = 6 generators; the staircase has 2m = 6 rows
    bell8 = table(8, 2, [
        "z1 z1", "z2 z2", "z3 z3",
        "x1 x1", "x2 x2", "x3 x3",
    ])
    assert check_commutation(bell8) is None
    assert check_independence(bell8) is None
    assert compute_distance(bell8, 2) == 2
    assert is_ame(bell8)
    assert subsystem_entropy(bell8, [0]) == pytest.approx(math.log2(8))
    form = to_reduction_friendly(bell8)
    form.validate()
    assert form.block_width == 1 and form.extra_rows == 0
    # site 0 staircase: Z_1, Z_alpha, Z_alpha^2 then X_1, X_alpha, X_alpha^2
    assert [str(g).split()[0] for g in form.table.gens] == \
        ["z1", "z2", "z3", "x1", "x2", "x3"]
    fam = derive_family(bell8)
    assert len(fam) == 1  # next child would have distance 1


def test_gf4_commuting_single_site_xz_is_handled():
    # in GF(4), X and Z commute on a single site (trace of 1 vanishes),
    # so {X x1, Z z1} on one site is a commuting independent pair
    f4 = GF(4)
    t = GeneratorTable(f4, 1, (
        PauliString.from_tokens(f4, ["x1"]),
        PauliString.from_tokens(f4, ["z1"]),
    ))
    assert check_commutation(t) is None
    assert check_independence(t) is None
    assert t.k == 0
    assert compute_distance(t, 1) == 1  # the group itself has weight-1 rows
