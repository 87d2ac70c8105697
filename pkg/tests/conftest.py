import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from mcturan.constructions import k5_star, perturbed_construction
from mcturan.graph import build_colored_graph
from mcturan.solver import random_greedy_instance, solve_exact

K5_CLASSES = [(0, 1, 2, 3, 4), (0, 2, 4, 1, 3)]
# three classes through the triangle 0-1-2, one edge each
TRIANGLE_WITNESS_CLASSES = [(0, 1, 5, 6, 7), (1, 2, 8, 9, 10), (2, 0, 11, 12, 13)]


@pytest.fixture
def k5():
    return build_colored_graph(5, K5_CLASSES)


@pytest.fixture
def c5():
    return build_colored_graph(5, [(0, 1, 2, 3, 4)])


@pytest.fixture
def empty5():
    return build_colored_graph(5, [])


@pytest.fixture
def witness14():
    return build_colored_graph(14, TRIANGLE_WITNESS_CLASSES)


@pytest.fixture
def perturbed10():
    return perturbed_construction(10)


def build_corpus(size=1000, seed=20240601):
    """Valid multicolored-triangle-free instances with 5 <= n <= 12.

    Solver witnesses for n = 5..8, the tightness examples, and seeded random
    greedy packings (some truncated) for the rest.
    """
    rng = random.Random(seed)
    corpus = [solve_exact(n).witness for n in range(5, 9)]
    corpus += [build_colored_graph(5, K5_CLASSES), build_colored_graph(5, [(0, 1, 2, 3, 4)]),
               k5_star(1), k5_star(2), perturbed_construction(10)]
    while len(corpus) < size:
        n = rng.randint(5, 12)
        cap = rng.choice([None, None, rng.randint(1, 6)])
        corpus.append(random_greedy_instance(n, rng, cap))
    return corpus


# filled by the acceptance suite, printed after the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
