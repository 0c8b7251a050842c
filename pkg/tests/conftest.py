import pytest

from rtgraph import graph as G

# regular connected graphs used by the identity suites
CORPUS = {
    "K2": G.complete(2),
    "K3": G.complete(3),
    "C4": G.cycle(4),
    "C5": G.cycle(5),
    "K4": G.complete(4),
    "K33": G.complete_bipartite(3, 3),
    "Petersen": G.petersen(),
    "Q3": G.hypercube(3),
}

ACCEPTANCE_LINES = []


@pytest.fixture(params=sorted(CORPUS), ids=sorted(CORPUS))
def corpus_graph(request):
    return request.param, CORPUS[request.param]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
