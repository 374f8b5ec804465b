import numpy as np
import pytest

from bnspect import LinearBn, WeightedDag


@pytest.fixture
def chain_bn():
    """v1 -> v2 with beta = 2 and unit noise."""
    return LinearBn(WeightedDag(["v1", "v2"], {(0, 1): 2.0}), [1.0, 1.0])


@pytest.fixture
def collider_bn():
    """v1 -> v3 <- v2, all weights and noise scales 1."""
    dag = WeightedDag(["v1", "v2", "v3"], {(0, 2): 1.0, (1, 2): 1.0})
    return LinearBn(dag, [1.0, 1.0, 1.0])


@pytest.fixture
def chain3_dag():
    """v1 -> v2 -> v3."""
    return WeightedDag(["v1", "v2", "v3"], {(0, 1): 1.0, (1, 2): 1.0})


def has_odd_cycle_bruteforce(adjacency: np.ndarray) -> bool:
    """Oracle: exhaustive DFS over simple cycles, true iff some cycle is odd.

    Independent of the BFS 2-coloring under test. Exponential, so callers
    keep graphs small.
    """
    n = adjacency.shape[0]

    def dfs(start, current, visited, length):
        for nxt in np.flatnonzero(adjacency[current]):
            if nxt == start and length >= 3 and length % 2 == 1:
                return True
            if nxt > start and nxt not in visited:
                visited.add(nxt)
                if dfs(start, nxt, visited, length + 1):
                    return True
                visited.remove(nxt)
        return False

    return any(dfs(s, s, {s}, 1) for s in range(n))
