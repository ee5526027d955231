"""Shared fixtures: two worked circuits and the seeded random corpus."""

import pytest

from nestcirc import family_bfs_oracle, family_closed_form, random_pnc, validate_circuit

# 19-position circuit whose two repeated vertices nest perfectly:
# v2 reappears at position 12 and v6 at position 10, one inside the other.
NESTED2_TOKENS = "v0 v1 v2 v3 v4 v5 v6 v7 v8 v9 v6 v11 v2 v13 v14 v15 v16 v17 v0".split()

# 19-position circuit that is a hexagon with a 4-cycle petal hanging off
# three of its corners (v1, v7, v13).  The three sub-circuits are disjoint,
# so the circuit is not perfectly nested.
PETALS_TOKENS = "v0 v1 v2 v3 v4 v1 v6 v7 v8 v9 v10 v7 v12 v13 v14 v15 v16 v13 v0".split()

CORPUS_SIZE = 200
MAX_M = 8
MAX_LINK = 8


def corpus_params() -> list[tuple[int, int]]:
    """(seed, internal-vertex count) pairs covering m = 0..8 evenly."""
    return [(seed, seed % (MAX_M + 1)) for seed in range(CORPUS_SIZE)]


@pytest.fixture
def nested2():
    return validate_circuit(NESTED2_TOKENS)


@pytest.fixture
def petals():
    return validate_circuit(PETALS_TOKENS)


@pytest.fixture(scope="session")
def corpus():
    return [random_pnc(seed, m, MAX_LINK) for seed, m in corpus_params()]


@pytest.fixture(scope="session")
def corpus_families(corpus):
    """Each corpus PNC with its closed-form and brute-force families."""
    return [(p, family_closed_form(p), family_bfs_oracle(p.circuit)) for p in corpus]
