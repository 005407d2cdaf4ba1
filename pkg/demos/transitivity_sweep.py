"""Check that mutation of complete TF-orders is transitive on every sweep algebra."""

import time

from nakatau.mutation import mutation_graph
from nakatau.sweep import sweep_algebras

start = time.perf_counter()
algebras = sweep_algebras()
largest = None
for A in algebras:
    G = mutation_graph(A)
    assert G.is_strongly_connected(), A
    size = G.graph.number_of_nodes()
    if largest is None or size > largest[1]:
        largest = (A, size)
elapsed = time.perf_counter() - start
print(f"{len(algebras)} algebras, all strongly connected ({elapsed:.1f}s)")
print(f"largest graph: {largest[0]!r} with {largest[1]} TF-orders")
