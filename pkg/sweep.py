import random
import sys

from graphtrials import Assertion, Kind, build_certificate, judge, verify
from graphtrials.errors import NoEvidenceError
from graphtrials.graph import Graph
from graphtrials.oracle import oracle_check
from graphtrials.assertions import K_KINDS
from graphtrials.pipeline import KIND_STYLES
from graphtrials.trial import extract_mental_model

rng = random.Random(7)
PER_KIND = int(sys.argv[1]) if len(sys.argv) > 1 else 40


def random_graph(rng, max_n):
    n = rng.randint(1, max_n)
    p = rng.choice([0.15, 0.3, 0.5, 0.8])
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


fails = 0
for kind in Kind:
    max_n = 8 if kind in (Kind.STACK_LEQ, Kind.QUEUE_LEQ) else 10
    for trial in range(PER_KIND):
        g = random_graph(rng, max_n)
        k = rng.randint(1, max(1, g.n)) if kind in K_KINDS else None
        u = v = None
        if kind == Kind.DISTANCE_EQUALS:
            u, v = rng.sample(range(g.n), 2) if g.n >= 2 else (0, 0)
            if g.n < 2:
                continue
        try:
            a = Assertion(kind, k=k, u=u, v=v)
        except ValueError:
            continue
        truth = oracle_check(g, a)
        for style in KIND_STYLES[kind]:
            try:
                cert = build_certificate(g, a, style=style)
            except NoEvidenceError:
                if truth:
                    fails += 1
                    print(f"FAIL {kind.value} {style} n={g.n} "
                          f"k={k} u={u} v={v}: oracle true, no evidence")
                    print(" edges:", g.sorted_edges())
                continue
            except Exception as exc:
                fails += 1
                print(f"FAIL {kind.value} {style} n={g.n} k={k}: {type(exc).__name__}: {exc}")
                print(" edges:", g.sorted_edges())
                continue
            if not truth:
                fails += 1
                print(f"FAIL {kind.value} {style} n={g.n} k={k}: "
                      f"built evidence but oracle false")
                print(" edges:", g.sorted_edges())
                continue
            bad = verify(cert)
            if bad:
                fails += 1
                print(f"FAIL {kind.value} {style} n={g.n} k={k}: verify {bad}")
                print(" edges:", g.sorted_edges())
                continue
            verdict = judge(cert, extract_mental_model(cert))
            if not verdict.convinced:
                fails += 1
                print(f"FAIL {kind.value} {style} n={g.n} k={k}: "
                      f"judge {verdict.reasons}")
                print(" edges:", g.sorted_edges())
print("failures:", fails)
