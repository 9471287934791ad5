"""
Two cliques from a finite field
===============================

Disconnected character degree graphs have two complete components, and the
smaller one cannot be too big. Semilinear groups over GF(q^n) hit the boundary.
"""

from cdg import degree_set_to_graph, field_construction_degrees, search_field_certificate
from cdg.graph import connected_components
from cdg.rules import satisfies_palfy_inequality

# The degree set for q=2, n=32: divisors of 32 together with 2^32 - 1.
d = field_construction_degrees(2, 32)
print(d.degrees)

# Label each prime with a vertex and read off the graph.
g, label = degree_set_to_graph(d)
for comp in connected_components(g):
    print(sorted(p for p, v in label.items() if v in comp))

# The Fermat primes form one clique and 2 sits alone, so this is K1 + K5.

# Which pairs (a, b) with a <= b are allowed at all? b >= 2^a - 1.
for a in range(1, 4):
    print(a, [b for b in range(a, 8) if satisfies_palfy_inequality(a, b)])

# For each allowed pair, look for a field whose degree set gives exactly K_a + K_b.
for a, b in [(1, 1), (1, 5), (2, 3), (2, 4), (3, 3)]:
    cert = search_field_certificate(a, b)
    print((a, b), None if cert is None else (cert.q, cert.n))

# (3, 3) comes back empty: it breaks the inequality, so no solvable group has it.

# Another field does the same job for K2 + K4.
h, lab = degree_set_to_graph(field_construction_degrees(2, 35))
print([sorted(p for p, v in lab.items() if v in c) for c in connected_components(h)])
