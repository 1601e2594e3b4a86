import traceback

from graphtrials import Assertion, Kind, build_certificate, judge, verify
from graphtrials.graph import Graph
from graphtrials.oracle import oracle_check
from graphtrials.pipeline import KIND_STYLES
from graphtrials.trial import extract_mental_model

c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
c5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
k4 = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
p3 = Graph.from_edges(3, [(0, 1), (1, 2)])
two_tri = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
k5 = Graph.from_edges(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])

cases = [
    (c4, Assertion(Kind.CONNECTED)),
    (two_tri, Assertion(Kind.NOT_CONNECTED)),
    (p3, Assertion(Kind.NOT_K_CONNECTED, k=2)),
    (k4, Assertion(Kind.K_CONNECTED_SPARSE, k=2)),
    (c5, Assertion(Kind.HAMILTONIAN_CYCLE)),
    (c5, Assertion(Kind.LENGTH_K_CYCLE, k=5)),
    (c5, Assertion(Kind.NOT_BIPARTITE)),
    (c5, Assertion(Kind.K_COLORABLE, k=3)),
    (k4, Assertion(Kind.COMPLETE)),
    (c4, Assertion(Kind.NOT_COMPLETE)),
    (k4, Assertion(Kind.CLIQUE, k=3)),
    (c4, Assertion(Kind.INDEPENDENT_SET, k=2)),
    (c4, Assertion(Kind.DOMINATING_SET, k=2)),
    (p3, Assertion(Kind.DISTANCE_EQUALS, k=2, u=0, v=2)),
    (p3, Assertion(Kind.DIAMETER_GREATER, k=1)),
    (k4, Assertion(Kind.STACK_LEQ, k=2)),
    (c4, Assertion(Kind.QUEUE_LEQ, k=1)),
]

fails = 0
for g, a in cases:
    for style in KIND_STYLES[a.kind]:
        label = f"{a.kind.value:20s} {style:8s}"
        try:
            assert oracle_check(g, a), "oracle rejects"
            cert = build_certificate(g, a, style=style)
            bad = verify(cert)
            assert not bad, f"verify: {bad}"
            verdict = judge(cert, extract_mental_model(cert))
            assert verdict.convinced, f"judge: {verdict.reasons}"
            assert verdict.complexity_class, "no complexity class"
            print(f"OK   {label} obs={verdict.observations}")
        except Exception as exc:
            fails += 1
            print(f"FAIL {label} {exc}")
            traceback.print_exc()
print("failures:", fails)
