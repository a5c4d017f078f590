# GF(2^m) tables, cyclotomic cosets and minimal polynomials.
#
# Every cyclic code here is described by the exponents j where its generator
# polynomial vanishes at alpha^j. Those sets are unions of cyclotomic cosets,
# and each coset contributes one minimal polynomial to g(x).

from cyclrc import BinaryPolynomial, cyclotomic_cosets, make_field, minimal_polynomial

f = make_field(4)
print("primitive polynomial:", f.primitive_poly)
print("alpha^0 .. alpha^14 as 4-bit patterns:")
print([format(a, "04b") for a in f.exp_table])

# alpha^4 = alpha + 1 under x^4 + x + 1
assert f.alpha_pow(4) == 0b0011

# the five cosets of 15
for c in cyclotomic_cosets(15):
    mp = minimal_polynomial(f, c.representative)
    print(f"coset {c.members!s:16}  minimal polynomial {mp}")

# their product is x^15 - 1
prod = BinaryPolynomial(1)
for c in cyclotomic_cosets(15):
    prod = prod * minimal_polynomial(f, c.representative)
print("product:", prod)
