"""
Randomized verification
=======================

Draw random polygons, count disjoint pairs, and run the separation and
four-point checks. Each trial has its own seed stream derived from
(seed, n, trial), so reruns are byte-identical.
"""

# %%
import json

from sidedisks import harness, run_lemma

rep = harness(3, 12, 200, seed=1)
print(json.dumps(rep.to_dict()["totals"], indent=2))
for name, r in rep.oracles.items():
    print(f"{name:10s} checks={r.trials:6d} failures={r.failures} worst={r.worst_residual:.2e}")

# %%
# Nesting check: sample the smaller disk inside the unit disk and verify
# containment in the larger one.
print(run_lemma("1", trials=20, seed=3, samples=5000).to_dict())
