"""
Perfect matchings and the four matching problems
================================================

A walk through the data model and the brute-force solvers: build small
two-colored graphs, enumerate their perfect matchings, and ask the four
questions this package answers (exact matching, top-k matching, parity
matching, bounded parity matching).
"""

from exactmatch import (
    BLUE,
    RED,
    ColoredGraph,
    EmInstance,
    TkpmInstance,
    WeightedGraph,
    brute_bcpm,
    brute_cpm,
    brute_em,
    brute_tkpm,
    enumerate_perfect_matchings,
    red_count,
    validate,
)

# A 4-cycle with one red edge. Edges are (u, v, color) triples with u < v;
# the edge id is its position in the tuple.
c4 = ColoredGraph(4, (
    (0, 1, RED),
    (1, 2, BLUE),
    (2, 3, BLUE),
    (0, 3, BLUE),
))
print("validate:", validate(c4))   # None means well formed

# Every perfect matching, in canonical order. The 4-cycle has exactly two:
# the "even" pair of opposite edges and the "odd" pair.
for matching in enumerate_perfect_matchings(c4):
    print("perfect matching", matching, "with", red_count(c4, matching), "red edge(s)")

# Exact matching: is there a perfect matching with exactly k red edges?
# k = 1 picks the matching through the red edge, k = 2 is impossible.
print("em k=0:", brute_em(EmInstance(c4, 0)))
print("em k=1:", brute_em(EmInstance(c4, 1)))
print("em k=2:", brute_em(EmInstance(c4, 2)))

# Parity matching only constrains the red count mod 2, so k = 3 is
# satisfied by the matching with a single red edge.
print("cpm k=3:", brute_cpm(EmInstance(c4, 3)))

# The bounded variant also requires red count <= k. Three disjoint red
# edges force red count 3 in any perfect matching: parity alone says yes
# for k = 1, the bound says no.
three_red = ColoredGraph(6, ((0, 1, RED), (2, 3, RED), (4, 5, RED)))
print("cpm on three red edges, k=1:", brute_cpm(EmInstance(three_red, 1)))
print("bcpm on three red edges, k=1:", brute_bcpm(EmInstance(three_red, 1)))

# Top-k matching works on weighted graphs: among perfect matchings,
# maximize the sum of the k heaviest edges.
weighted = WeightedGraph(4, (
    (0, 1, 3),
    (1, 2, 0),
    (2, 3, 2),
    (0, 3, 0),
))
for k in range(3):
    print(f"tkpm k={k}:", brute_tkpm(TkpmInstance(weighted, k)))
