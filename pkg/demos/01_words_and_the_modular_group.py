"""Words in the modular group.

PSL(2,Z) is the free product of a two-element and a three-element cyclic
group: <w, b | w^2 = b^3 = 1>.  Every element has exactly one reduced
spelling over the letters w, b, B (= b^2), which is what the Word type
stores.  This script walks through the arithmetic.
"""

from hurwitzfact import parse_word, reduce_letters, swap_exponents, to_core, from_core

# Any letter soup folds to its normal form.
print("ww      ->", reduce_letters("ww"))
print("bbb     ->", reduce_letters("bbb"))
print("wbbwB   ->", reduce_letters("wbbwB"))

# Multiplication cancels at the juncture; two meeting powers of b merge.
x, y = parse_word("wB"), parse_word("Bw")
print(f"{x} * {y}  =", x * y)          # the merge case: B.B = b
print(f"{x} * bwb =", x * parse_word("bwb"))  # deep cancellation down to b

# Inverses reverse the word and swap b with B.
z = parse_word("wbwB")
print(f"({z})^-1 =", z.inverse(), " product:", z * z.inverse())

# The exponent-swap automorphism fixes w and exchanges b with B.
print("swap(wb) =", swap_exponents(parse_word("wb")))

# Composing the swap with conjugation by b carries the class of wb (the
# projected Dehn twist) onto the class of bwb, and back.
u = parse_word("wb")
print("to_core(wb)  =", to_core(u))
print("round trip    ", from_core(to_core(parse_word("wBwbw"))))
