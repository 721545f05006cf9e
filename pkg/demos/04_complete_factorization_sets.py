"""Complete sets of factorizations, and what they say about fibrations.

For a matrix B and a factor count n, the pipeline produces factorizations
of B into n conjugates of U containing a representative of every class
under Hurwitz moves.  Each such class is the monodromy datum of a
relatively minimal strict Lefschetz elliptic fibration over the disk with
n singular fibers and total monodromy B, so the emitted set touches every
topological type (possibly more than once).
"""

import json

from hurwitzfact import (
    I2,
    U,
    complete_family,
    enumerate_matrix_factorizations,
    materialize,
    parse_matrix,
    parse_word,
    to_core,
)

# The identity admits no six-factor factorization (the unique projective
# candidate lifts to -I), but -I does: the classic six-cusp fibration.
for matrix, n in ((-I2, 6), (I2, 6), (I2, 12), (U, 1)):
    found = enumerate_matrix_factorizations(matrix, n)
    print(f"B = {matrix}  n = {n}: {len(found.results)} tuple(s)")
    for lifted in found.results:
        print("   words:   ", ",".join(str(w) for w in lifted.words))
        print("   matrices:", "  ".join(str(m) for m in lifted.matrices))

# Behind the scenes: a finite family description covers every n at once.
target = to_core(parse_word("b"))
family = complete_family(parse_word("b"))
print("\nfamily description for target b:")
print(json.dumps(family.describe(), indent=1))
print("materialized at n = 2:", [str(f) for f in materialize(family, 2)])
print("materialized at n = 8:", [str(f) for f in materialize(family, 8)])

# A hyperbolic example.  Seven factors produce one projective candidate
# whose lift multiplies to -B (the sign filter reports emptiness); six
# more factors absorb the sign.
m = parse_matrix("2 3; 1 2")
for n in (7, 13):
    found = enumerate_matrix_factorizations(m, n)
    print(f"\nB = {m}  n = {n}: {len(found.results)} tuple(s) "
          f"({found.candidates} candidate(s) before the sign filter)")
    for lifted in found.results:
        print("   ", ",".join(str(w) for w in lifted.words))
