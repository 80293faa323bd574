"""
Roots of interior trees
=======================

In the quadrant every tree of a left-right forest has a root. Points deep
in a tree are made by pushing a random point down a random word; find_root
then recovers both the word and the starting root. The pair used has no
translation generator.
"""

import random
from fractions import Fraction

from moebius_forest import ForestConfig, GaussianRational, Matrix, descend, find_root

cfg = ForestConfig(Matrix(3, 1, 2, 1), Matrix(1, 0, 3, 1))
rng = random.Random(0)
for _ in range(6):
    start = GaussianRational(Fraction(rng.randint(1, 40), rng.randint(1, 40)),
                             Fraction(rng.randint(1, 40), rng.randint(1, 40)))
    top = find_root(cfg, start).root
    word = "".join(rng.choice("LR") for _ in range(rng.randint(1, 6)))
    z = descend(cfg, top, word)
    r = find_root(cfg, z)
    assert (r.root, r.word) == (top, word)
    print(f"{str(z):>34}  <- {r.word:<7} root {r.root}")
