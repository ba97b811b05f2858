"""Classify the bundled seven-dimensional nilpotent families.

Twelve families ship with the package together with their published
types.  Eleven reproduce; the fifth is a documented erratum (its printed
bracket table is not a Lie algebra, and no single-coefficient repair has
the published type).  This script runs the comparison through the library
API; `liepencil table` does the same from the command line.
Run with: python3 demos/03_reference_table.py
"""

from liepencil import classify, validate
from liepencil import corpus

matches = 0
rows = []
for entry in corpus.families():
    alg = entry.load()
    if not validate(alg).ok:
        alg = entry.load_variant()
        label = entry.name + "*"
    else:
        label = entry.name
    rep = classify(alg)
    ok = rep.verdict.value == entry.expected
    matches += ok
    rows.append((label, rep, entry, ok))

for label, rep, entry, ok in rows:
    mark = "ok" if ok else "MISMATCH"
    print(f"{label:<6} index {rep.index}  p0 = {str(rep.p0):<22} "
          f"{rep.verdict.value:<10} expected {entry.expected:<10} {mark}")

print()
print(f"{matches} of {len(rows)} families match the published table")

print()
print("The mismatching family, in both transcriptions:")
entry = corpus.entry("L5a")
print(" ", entry.note)
