# Words of F2, the 2n base pieces and the witness that F2 splits into n copies of itself.
from banach_tarski import build_21gen, classify_base, enumerate_reduced, f2_paradox_witness, gamma, parse, validate
from banach_tarski.paradox import F2Universe, mutate
from banach_tarski.partition import verify_base_pairing

n = 3

# letters: s, S = sigma and its inverse; t, T = tau and its inverse
w = parse("s t S") * parse("s T")
print("product:", w, " inverse:", ~w, " length:", len(w))
print("reduced words up to length 4:", sum(1 for _ in enumerate_reduced(4)))

for i in range(n):
    print(f"gamma_{i} =", gamma(n, i))

for text in ["", "s", "S", "S S", "t s", "S t", "T"]:
    print(f"{text or 'e':>5} lies in", classify_base(n, parse(text)))

rep = verify_base_pairing(n, 7)
print("gamma_i(B_i) = F2 - A_i over", rep.words_checked, "words:", "ok" if rep.passed else rep.violations[:3])

# a partition whose pieces are also stable under a chosen stabiliser word
p = build_21gen(n, parse("t s"))
print("partition for omega = t s:", p.describe())
print("e and omega share a piece:", p.classify(parse("")), p.classify(parse("t s")))

wit = f2_paradox_witness(n)
print("witness pieces:", [q.ref for q in wit.all_pieces()])
print(validate(wit, F2Universe(6)).to_dict()["pass"])

# a broken witness is caught
bad = validate(mutate(wit, "swap_movers"), F2Universe(6))
print("swapped movers:", bad.violation_count, "violations, e.g.", bad.violations[0])
