"""
A randomized algebraic decider for bipartite graphs
===================================================

On bipartite graphs, exact matching reduces to asking whether one
coefficient of a determinant is nonzero. Random edge weights make the
coefficient survive cancellation with probability at least 1/2 on yes
instances, so a handful of trials drives the one-sided error down fast.
"""

from exactmatch import (
    BLUE,
    RED,
    ColoredGraph,
    EmInstance,
    algebraic_em_decide,
    brute_em,
    cpm_via_em,
    find_bipartition,
    gen_instance,
    GenSpec,
    sample_isolation_weights,
    symbolic_determinant,
)

# Two-coloring a 4-cycle: sides alternate, so the graph is bipartite.
c4 = ColoredGraph(4, ((0, 1, RED), (1, 2, BLUE), (2, 3, BLUE), (0, 3, BLUE)))
bp = find_bipartition(c4)
print("sides:", bp.sides, "left:", bp.left, "right:", bp.right)

# The symbolic determinant in the red-marker variable y: the coefficient
# of y^j collects (signed) powers of two from perfect matchings with j red
# edges. Here both matchings are visible: one blue-blue, one through red.
weights = sample_isolation_weights(len(c4.edges), 0)
det = symbolic_determinant(c4, bp, weights)
print("weights:", weights)
print("determinant coefficients by red count:",
      [det.coeff(j) for j in range(3)])

# Cancellation is the failure mode the random weights guard against: with
# equal weights on an all-blue 4-cycle, the two matchings have opposite
# sign and identical weight, and the determinant collapses to zero even
# though perfect matchings exist. A zero never certifies "no".
all_blue = ColoredGraph(4, ((0, 1, BLUE), (1, 2, BLUE), (2, 3, BLUE), (0, 3, BLUE)))
flat = symbolic_determinant(all_blue, find_bipartition(all_blue), (1, 1, 1, 1))
print("all-blue C4 with flat weights, determinant:", flat.coeffs or (0,))

# The full decider: yes answers are certified, no answers carry an error
# bound of 2^-trials. The transcript shows each trial's draw and outcome.
decision = algebraic_em_decide(EmInstance(c4, 1), trials=8, seed=4)
print("decide k=1:", decision.answer, "after", decision.trials_run, "trial(s)")
decision = algebraic_em_decide(EmInstance(c4, 2), trials=8, seed=4)
print("decide k=2:", decision.answer, "error bound", decision.error_bound)

# Measuring the per-trial detection rate on generated yes instances: the
# 1/2 guarantee is very pessimistic in practice.
hits = 0
yes_total = 0
for seed in range(300):
    inst = gen_instance(GenSpec(n=6, extra_edges=4, seed=seed, bipartite=True))
    if brute_em(inst) is None:
        continue
    yes_total += 1
    hits += algebraic_em_decide(inst, trials=1, seed=seed).answer
print(f"single-trial detection: {hits}/{yes_total} = {hits / yes_total:.3f}")

# Parity matching rides on top: one exact matching query per red count of
# the right parity, with a union-bound error when the decider is random.
parity = cpm_via_em(EmInstance(c4, 3),
                    em_decider=lambda i: algebraic_em_decide(i, trials=8, seed=1))
print("cpm k=3:", parity.answer, "queries:", parity.queries)
