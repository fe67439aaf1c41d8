"""Regression pins for the source figures that fail verification.

These tables are typed in exactly as the source prints them.  The
assertions freeze what is actually true of them, so any future change
to the verification stack that silently "fixes" them will show up here.
The shipped catalog carries corrected derived tables instead; see
test_catalog and the derivation notes in the catalog index.
"""

from amecodes import stabtab
from amecodes.codes import check_commutation, check_independence, compute_distance, find_min_undetectable

PRINTED_AME_5_2 = """code n=5 q=2 k=0
g1: i i x1 x1 x1
g2: i z1 z1 i z1
g3: i x1 z1 i x1z1
g4: z1 i z1 z1 i
g5: x1 i z1 x1z1 i
"""

PRINTED_4_1_2_2 = """code n=4 q=2 k=1
g1: i x1 x1 x1
g2: z1 z1 i z1
g3: x1 z1 i x1z1
"""

# row g2 site 2 as printed (x2z2); the parent-consistent entry is x2z6
PRINTED_4_2_2_9 = """code n=4 q=9 k=2
modulus: 1,1,2
g1: z1 x1z5 z5 x5z1
g2: z2 x2z2 z6 x6z2
g3: x1 z1 x5 z5
g4: x2 z2 x6 z6
"""


def test_printed_five_qubit_parent_has_distance_two():
    t = stabtab.parse(PRINTED_AME_5_2)
    assert check_commutation(t) is None
    assert check_independence(t) is None
    w, err = find_min_undetectable(t, 3)
    assert w == 2
    # the witness is exactly g4*g5 (projectively): Y on site 1, X on site 4
    assert err.sites == ((1, 1), (0, 0), (0, 0), (1, 0), (0, 0))
    prod = t.gens[3] * t.gens[4]
    assert prod.sites == err.sites
    assert compute_distance(t, 3) == 2  # labeled 3 in the source


def test_printed_child_4_1_2_has_distance_one():
    t = stabtab.parse(PRINTED_4_1_2_2)
    assert check_commutation(t) is None
    assert check_independence(t) is None
    w, err = find_min_undetectable(t, 2)
    assert w == 1
    assert err.sites == ((0, 0), (0, 0), (1, 0), (0, 0))  # X on site 3
    assert compute_distance(t, 2) == 1  # labeled 2 in the source


def test_printed_gf9_child_fails_commutation():
    t = stabtab.parse(PRINTED_4_2_2_9)
    pair = check_commutation(t)
    assert pair == (0, 1)  # g1 vs the typo'd g2
    # flipping the single entry x2z2 -> x2z6 repairs it
    fixed = stabtab.parse(PRINTED_4_2_2_9.replace("x2z2", "x2z6"))
    assert check_commutation(fixed) is None
    assert compute_distance(fixed, 2) == 2
