"""The numeric side: canonical blocks, scrambling, and verdict replay.

A pencil with known block structure is assembled, hidden behind a random
congruence, and handed to the numeric analyzer, which must recover the
type, the corank, and the characteristic numbers.  The same machinery
replays symbolic verdicts at random points via cross_check.
Run with: python3 demos/04_block_pencils_and_replay.py
"""

import random
from fractions import Fraction

from liepencil import (
    JordanBlock,
    KroneckerBlock,
    assemble,
    congruence,
    cross_check,
    pencil_type,
)
from liepencil import corpus

blocks = [
    JordanBlock(Fraction(-2), 2),
    JordanBlock(Fraction(1, 3), 1),
    KroneckerBlock(2),
]
pencil = assemble(blocks)
print(f"assembled {len(blocks)} blocks into a {pencil.size}x{pencil.size} pencil")

# hide the block structure behind a random unimodular congruence
rng = random.Random(4)
p = [[1 if i == j else 0 for j in range(pencil.size)] for i in range(pencil.size)]
for _ in range(20):
    i, j = rng.randrange(pencil.size), rng.randrange(pencil.size)
    if i != j:
        c = rng.choice((-1, 1))
        p[i] = [a + c * b for a, b in zip(p[i], p[j])]
scrambled = congruence(pencil, p)

report = pencil_type(scrambled)
print("verdict         :", report.verdict)
print("rank / corank   :", report.rank, "/", report.corank)
print("p0(t)           :", report.p0_text())
print("char numbers    :", {str(r): m for r, m in report.char_numbers})
print("method          :", report.method)
# The A-part carries J(-2) and J(1/3), so the rank of A + tB drops at
# t = 2 and t = -1/3; the Kronecker block contributes the corank.

print()
print("replaying a symbolic verdict numerically:")
alg = corpus.entry("heisenberg3").load()
check = cross_check(alg, trials=5, seed=7)
print("symbolic:", check.symbolic.verdict)
for k, trial in enumerate(check.trials, start=1):
    print(f"  trial {k}: {trial.report.verdict}"
          f" ({'agree' if trial.agrees else 'DISAGREE'})")
print("all routes agree" if check.ok and not check.disagreements() else "routes disagree")
