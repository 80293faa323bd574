"""
The Calkin-Wilf tree as a Moebius forest
========================================

L = (1 1; 0 1) and R = (1 0; 1 1) act on the positive reals as
q -> q + 1 and q -> q/(q + 1). Started from 1 they list every positive
rational exactly once.
"""

from moebius_forest import CALKIN_WILF, ExtendedRational, enumerate_tree, find_root

# first four levels, breadth first
for v, word in enumerate_tree(CALKIN_WILF, ExtendedRational(1), 3):
    print(f"{word or '(root)':>6}  {v}")

# climbing back up is the Euclidean algorithm: the runs of the path word
# are the partial quotients of the continued fraction
r = find_root(CALKIN_WILF, ExtendedRational(355, 113))
print("355/113 =", r.word, "from root", r.root)
print("runs:", r.word.runs())
