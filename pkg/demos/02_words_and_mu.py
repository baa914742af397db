"""Tensor, symmetric and pair words; the antisymmetrised mu maps; the
shuffle-killing lemma, exhaustively on small degree patterns.

Run as:  python3 demos/02_words_and_mu.py
"""

import itertools

from pregerst import (
    SHIFT1, SHIFT2,
    Element, Gen, GeneratorRegistry, Sym, Tensor,
    element_to_text, embed_sym_into_pair, mu, normalize,
    parse_element, shuffle_product, sym_word,
)

reg = GeneratorRegistry()
a = Gen(reg.declare("a", 2))   # deg 1, odd
b = Gen(reg.declare("b", 2))
c = Gen(reg.declare("c", 3))   # deg 2, even

print("Elements are exact rational combinations of words, always kept in a")
print("canonical normalized form:")
raw = parse_element("2/4 * S(T(c), T(a)) + 1/2 * S(T(a), T(c))", reg)
print("  raw:       2/4 * S(T(c),T(a)) + 1/2 * S(T(a),T(c))")
print("  normalized:", element_to_text(normalize(raw, SHIFT2)))

print("\nA symmetric word with a repeated factor of odd shifted degree dies:")
sign, word = sym_word([Tensor((c,)), Tensor((c,))], SHIFT2)  # deg'(c) = 1
print("  S(T(c),T(c)) ->", word)

print("\nmu_2 is one minus the signed transposition; both a and b have odd deg:")
print("  mu_2(a (x) b) =", element_to_text(mu(2, Tensor((a, b)), SHIFT1)))

print("\nThe shuffle product sums signed interleavings:")
sh = shuffle_product(Tensor((a,)), Tensor((b,)), SHIFT1)
print("  a sh b =", element_to_text(sh))
print("  mu_2 of it =", element_to_text(mu(2, sh, SHIFT1)), "  (mu kills shuffles)")

print("\nExhaustive check of the lemma for p+q <= 4, degrees in {0,1,2}:")
count = 0
for total in range(2, 5):
    for pattern in itertools.product((0, 1, 2), repeat=total):
        r = GeneratorRegistry()
        atoms = [Gen(r.declare("x%d" % i, d + 1)) for i, d in enumerate(pattern)]
        for p in range(1, total):
            sh = shuffle_product(Tensor(tuple(atoms[:p])), Tensor(tuple(atoms[p:])), SHIFT1)
            assert mu(total, sh, SHIFT1).is_zero()
            count += 1
print("  %d shuffle words annihilated, zero defects" % count)

print("\nA symmetric word embeds into pair words, one term per head choice:")
sign, w = sym_word([Tensor((a,)), Tensor((b,)), Tensor((c,))], SHIFT2)
emb = embed_sym_into_pair(w, SHIFT2)
print("  embed(%s) =" % element_to_text(Element.single(w, sign)))
for line in element_to_text(emb).split(" + "):
    print("    ", line)
