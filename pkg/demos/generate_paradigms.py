#!/usr/bin/env python3
"""Generate surface forms from a root plus suffix ids, and show that
analysis inverts generation.
"""
from mapumorph import GenerationError, analyse, default_lexicon, generate

lexicon = default_lexicon()

print("=" * 60)
print("A small indicative paradigm of küpa- 'come'")
print("=" * 60)
for seq, label in [
    (["IND1SG.n"], "1sg"),
    (["IND.y", "P3.ng"], "3"),
    (["IND.y", "P1.i", "PL.un"], "1pl"),
    (["CA.l", "IND1SG.n"], "1sg causative ('I brought')"),
    (["HAB.ke", "RI.fu", "IND1SG.n"], "1sg habitual + ruptured implicature"),
]:
    word = generate("küpa", "IV", seq, lexicon)
    print(f"  {label:38} {word}")

print()
print("=" * 60)
print("Verbalised non-verb roots")
print("=" * 60)
la = lexicon.roots[("la", "adjective")]
print("  la 'dead' + causative         ", generate(la, "IV", ["CA.m"], lexicon))
firku = lexicon.roots[("firkü", "adjective")]
print("  firkü 'cool' + CA+PASS+HAB+3  ",
      generate(firku, "IV", ["CA.m", "PASS.nge", "HAB.ke", "IND.y", "P3.ng"],
               lexicon))

print()
print("=" * 60)
print("Validation runs before realization")
print("=" * 60)
try:
    generate("monge", "IV", [], lexicon)
except GenerationError as err:
    print(f"  monge- with no suffixes: {err}")
try:
    generate("elu", "TV", ["CA.m", "IND1SG.n"], lexicon)
except GenerationError as err:
    print(f"  causative on a transitive root: {err}")
try:
    generate("kansa", "IV", ["CA.m", "IND1SG.n"], lexicon)
except GenerationError as err:
    print(f"  m-causative on a loan root: {err}")

print()
print("=" * 60)
print("Round trip: analyse(generate(x)) contains x")
print("=" * 60)
cases = [
    ("monge", "IV", ["CA.l", "HAB.ke", "AGR.fi", "IND.y", "P1.i", "PL.un"]),
    ("anel", "TV", ["TR.tu", "NEG.la", "AGR.e", "IND.y", "P1.i", "DL.u",
                    "A1t2.0"]),
]
for form, context, seq in cases:
    word = generate(form, context, seq, lexicon)
    hit = any(a.matches(form, context, seq) for a in analyse(word, lexicon))
    print(f"  {form}+{len(seq)} suffixes -> {word:24} recovered: {hit}")
