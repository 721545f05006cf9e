"""Exact SL(2,Z) arithmetic and the bridge to words.

Every integer matrix of determinant 1 is a word in S = [[0,-1],[1,0]] and
U = [[1,1],[0,1]]; running Euclid on the first column finds one such word.
Projecting to PSL(2,Z) sends S to w and U to wb.  Conjugates of wb lift
back uniquely once the trace is pinned to 2.
"""

from hurwitzfact import (
    SL2Matrix,
    U,
    decompose_su,
    format_su,
    lift_factorization,
    parse_matrix,
    parse_word,
    project,
    su_product,
)

m = parse_matrix("2 3; 1 2")
word = decompose_su(m)
print("matrix       ", m)
print("as S,U word  ", format_su(word))
print("re-multiplied", su_product(word))

# Entries stay exact no matter how large: hyperbolic powers explode.
h = SL2Matrix(2, 1, 1, 1) ** 90
print("\n(2 1; 1 1)^90 has", len(str(h.a)), "digit top-left entry")
print("round trip still exact:", su_product(decompose_su(h)) == h)

# Projection to the modular group; both signs land on the same word.
print("\npi(2 3; 1 2) =", project(m))
print("pi(-(2 3; 1 2)) =", project(-m))

# A conjugate of wb in the group of words, lifted to its trace-2 matrix.
q = parse_word("wbw")
g = q * parse_word("wb") * q.inverse()
(lift,) = lift_factorization([g])
print("\nconjugate", g, "lifts to", lift, "with trace", lift.trace)
print("projection agrees:", project(lift) == g, "| lift of wb is U:", lift_factorization([parse_word('wb')]) == (U,))
