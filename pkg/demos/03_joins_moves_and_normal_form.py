"""Hurwitz moves and the canonical shape of a factorization.

Entries are conjugates of bwb: the three shorts wB, bwb, Bw, or Q^-1 bwb Q
for a conjugator Q starting with w.  Adjacent entries "join well" when
their product is at least as long as each of them; a right move at i
replaces (g, h) by (h, h^-1 g h) without changing the product.

Normalization drives any factorization to a well-jointed prefix plus a
run of trailing (wB, bwb) pairs, recording every move it made.
"""

import itertools

from hurwitzfact import (
    Factorization,
    SHORTS,
    apply_moves,
    excess,
    joins_well,
    move_right,
    normalize,
    orbit,
    parse_word,
    recognize,
)

S0, S1, S2 = SHORTS

print("join table over the shorts (rows act first):")
for g in SHORTS:
    row = ["well" if joins_well(g, h) else "BAD " for h in SHORTS]
    print(f"  {g}: ", "  ".join(row))

print("\na right move cycles the badly joining short pairs:")
fac = Factorization([S0, S1])
for _ in range(3):
    print("  ", fac)
    fac = move_right(fac, 1)

long5 = recognize(parse_word("wbwbw"))
fac = Factorization([long5, S1, S0, S1])
print("\nstarting tuple:", fac, " product:", fac.product, " excess:", excess(fac))
form = normalize(fac)
print("canonical     :", form.realized(), " pairs:", form.pairs)
print("moves         :", " ".join(f"{k}{i}" for k, i in form.moves))
print("replay agrees :", apply_moves(fac, form.moves) == form.realized())

print("\nbounded orbits double-check completeness at desk scale:")
seed = Factorization([S1, S2])
states, truncated = orbit(seed, max_len=9, max_nodes=10**4)
print(f"orbit of {seed}: {sorted(str(f) for f in states)} truncated={truncated}")
