import itertools
import math

import numpy as np
import pytest

from amecodes import stabtab
from amecodes.codes import GeneratorTable, compute_distance
from amecodes.errors import DomainError, PhaseConsistencyError, ResourceBudgetError
from amecodes.fields import GF
from amecodes.oracle import (CodewordSet, ame_projection_codewords, dense_distance,
                             expand_stabilizer, knill_laflamme_check,
                             reduced_density_matrix, reduced_entropy,
                             stabilizing_paulis)
from amecodes.pauli import PauliString, StateVector

LOG2_3 = math.log2(3)


def ame43_state():
    f3 = GF(3)
    amps = np.zeros(81, dtype=complex)
    for i in range(3):
        for j in range(3):
            idx = ((i * 3 + j) * 3 + (i + j) % 3) * 3 + (i + 2 * j) % 3
            amps[idx] = 1 / 3
    return StateVector(f3, 4, amps)


def qecc312_words():
    f3 = GF(3)
    words = []
    for i in range(3):
        w = np.zeros(27, dtype=complex)
        for j in range(3):
            w[(j * 3 + (i + j) % 3) * 3 + (i + 2 * j) % 3] = 1 / math.sqrt(3)
        words.append(StateVector(f3, 3, w))
    return CodewordSet(f3, 3, tuple(words))


AME_4_3 = """code n=4 q=3 k=0 d=3
g1: i z1 z1 z2
g2: i x1 x1 x2
g3: z1 i z1 z1
g4: x1 i x1 x1
"""


def same_span(a: CodewordSet, b: CodewordSet) -> bool:
    if a.K != b.K:
        return False
    overlaps = np.array(
        [[wb.inner(wa) for wa in a.words] for wb in b.words]
    )
    return np.allclose(np.linalg.svd(overlaps, compute_uv=False), 1.0, atol=1e-9)


# -- expansion ------------------------------------------------------------------


def test_expand_bell_pair():
    t = stabtab.parse("code n=2 q=2 k=0 d=2\ng1: z1 z1\ng2: x1 x1\n")
    cw = expand_stabilizer(t)
    assert cw.K == 1
    target = np.array([1, 0, 0, 1], dtype=complex) / math.sqrt(2)
    overlap = np.vdot(target, cw.words[0].amplitudes)
    assert abs(abs(overlap) - 1) < 1e-10


def test_expand_ame43_matches_explicit_state():
    cw = expand_stabilizer(stabtab.parse(AME_4_3))
    overlap = cw.words[0].inner(ame43_state())
    assert abs(abs(overlap) - 1) < 1e-9


def test_expand_child_code_spans_projection_codewords():
    t = stabtab.parse("code n=3 q=3 k=1 d=2\ng1: z1 z1 z2\ng2: x1 x1 x2\n")
    cw = expand_stabilizer(t)
    assert cw.K == 3
    assert same_span(cw, qecc312_words())


def test_expand_rejects_inconsistent_phases():
    # -ZZ and XX stabilize nothing together with +ZZ's partner sign flipped:
    # g1 = ZZ with phase 1 (i.e. -ZZ), g2 = XX; the joint +1 eigenspace of
    # {-ZZ, XX} is the odd-parity Bell pair, so this SUCCEEDS; instead use
    # {ZZ, -ZZ} dependence... dependence is rejected earlier, so force a
    # genuinely empty eigenspace with {-II}
    f2 = GF(2)
    minus_identity = PauliString(f2, ((0, 0), (0, 0)), phase_exp=1)
    t = GeneratorTable(f2, 2, (minus_identity,))
    with pytest.raises((PhaseConsistencyError, DomainError)):
        expand_stabilizer(t)


def test_expand_budget():
    t = stabtab.parse(
        "code n=13 q=2 k=0\n" + "\n".join(
            f"g{i+1}: " + " ".join("z1" if j == i else "i" for j in range(13))
            for i in range(13)
        ) + "\n"
    )
    with pytest.raises(ResourceBudgetError):
        expand_stabilizer(t)


def test_signed_generator_moves_the_eigenspace():
    f2 = GF(2)
    plus = expand_stabilizer(GeneratorTable(f2, 2, (
        PauliString.from_tokens(f2, ["z1", "z1"]),
        PauliString.from_tokens(f2, ["x1", "x1"]),
    )))
    minus = expand_stabilizer(GeneratorTable(f2, 2, (
        PauliString.from_tokens(f2, ["z1", "z1"], phase_exp=1),
        PauliString.from_tokens(f2, ["x1", "x1"]),
    )))
    assert abs(plus.words[0].inner(minus.words[0])) < 1e-10


# -- projection codewords --------------------------------------------------------


def test_projection_codewords_reproduce_explicit_words():
    cw = ame_projection_codewords(ame43_state(), 1)
    ref = qecc312_words()
    for got, want in zip(cw.words, ref.words):
        overlap = got.inner(want)
        assert abs(abs(overlap) - 1) < 1e-10


def test_projection_of_bell_state():
    f2 = GF(2)
    bell = StateVector(f2, 2, np.array([1, 0, 0, 1], dtype=complex) / math.sqrt(2))
    cw = ame_projection_codewords(bell, 1)
    assert cw.K == 2
    assert np.allclose(cw.words[0].amplitudes, [1, 0])
    assert np.allclose(cw.words[1].amplitudes, [0, 1])


def test_projection_unsupported_symbol():
    f2 = GF(2)
    product = StateVector(f2, 2, np.array([1, 0, 0, 0], dtype=complex))
    with pytest.raises(DomainError, match="not supported on message symbol"):
        ame_projection_codewords(product, 1)


# -- Knill-Laflamme ----------------------------------------------------------------


def test_kl_pass_and_fail_with_weight_two_witness():
    cw = qecc312_words()
    assert knill_laflamme_check(cw, 2) is None
    witness = knill_laflamme_check(cw, 3)
    assert witness is not None and witness.weight() == 2
    assert dense_distance(cw, 3) == 2


def test_kl_single_codeword_is_scalar_by_construction():
    t = stabtab.parse(AME_4_3)
    cw = expand_stabilizer(t)
    assert knill_laflamme_check(cw, 3) is None
    # the k=0 content lives in dense_distance: stabilizer weight
    assert dense_distance(cw, 4) == 3


def test_dense_distance_matches_symplectic_on_small_tables():
    sources = [
        "code n=2 q=2 k=0 d=2\ng1: z1 z1\ng2: x1 x1\n",
        "code n=3 q=2 k=0 d=2\ng1: i z1 z1\ng2: z1 i z1\ng3: x1 x1 x1\n",
        AME_4_3,
        "code n=3 q=3 k=1 d=2\ng1: z1 z1 z2\ng2: x1 x1 x2\n",
        "code n=4 q=2 k=2 d=2\ng1: z1 x1 z1 z1\ng2: x1 z1 x1z1 x1z1\n",
    ]
    for src in sources:
        t = stabtab.parse(src)
        cw = expand_stabilizer(t)
        sym = compute_distance(t, t.n)
        assert dense_distance(cw, t.n) == sym


# -- entropies -------------------------------------------------------------------------


def test_reduced_entropy_examples():
    psi = ame43_state()
    assert reduced_entropy(psi, [0]) == pytest.approx(LOG2_3, abs=1e-9)
    for pair in itertools.combinations(range(4), 2):
        assert reduced_entropy(psi, pair) == pytest.approx(2 * LOG2_3, abs=1e-9)
    assert reduced_entropy(psi, range(4)) == pytest.approx(0.0, abs=1e-12)
    rho = reduced_density_matrix(psi, [1])
    assert np.allclose(rho, np.eye(3) / 3, atol=1e-10)


def test_reduced_entropy_agrees_with_symplectic_rank_method():
    from amecodes.catalog import load_catalog, load_table
    from amecodes.codes import subsystem_entropy
    for entry in load_catalog():
        if entry.file is None or entry.k != 0 or entry.q ** entry.n > 4096:
            continue
        t = load_table(entry.id)
        cw = expand_stabilizer(t)
        for size in range(1, t.n):
            for subset in itertools.combinations(range(t.n), size):
                dense = reduced_entropy(cw.words[0], subset)
                rank = subsystem_entropy(t, subset)
                assert dense == pytest.approx(rank, abs=1e-9), (entry.id, subset)


def test_projection_codewords_pass_kl_at_family_parameters():
    # projecting m message sites off a verified AME state leaves a code
    # passing the scalar condition at d = floor(n/2) + 1 - m
    from amecodes.catalog import load_table
    for eid in ("ame_4_3", "ame_5_2", "ame_6_2"):
        t = load_table(eid)
        cw = expand_stabilizer(t)
        state = cw.words[0]
        for msg in (1, 2):
            d = t.n // 2 + 1 - msg
            if d < 2:
                continue
            words = ame_projection_codewords(state, msg)
            assert knill_laflamme_check(words, d) is None, (eid, msg)


# -- stabilizing_paulis (the derivation oracle) ----------------------------------------


def test_stabilizing_paulis_recovers_ame43_group():
    psi = ame43_state()
    plus_one = [op for op, lam in stabilizing_paulis(psi) if abs(lam - 1) < 1e-9]
    assert len(plus_one) == 81  # 3^4 stabilizer elements of a 4-qutrit state
    table_rows = {g.sites for g in stabtab.parse(AME_4_3).gens}
    assert table_rows <= {op.sites for op in plus_one}


def test_codeword_set_validates_orthonormality():
    f2 = GF(2)
    w = StateVector(f2, 1, np.array([1, 0], dtype=complex))
    with pytest.raises(DomainError, match="not orthonormal"):
        CodewordSet(f2, 1, (w, w))
