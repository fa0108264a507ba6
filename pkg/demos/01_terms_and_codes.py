"""A tour of the term representation and its binary code.

Every lambda term here is nameless: a variable is a de Bruijn index
counting enclosing binders, an abstraction wraps a body, an application
pairs two terms.  The binary code spells a term as a bit string
(abstraction 00, application 01, index i as i ones then a zero) and the
size of a term is simply the length of that string.
"""

from blc import Abs, App, Index, decode, encode, max_free_index, parse_text, render, size

# Build the identity function \x.x two ways: from constructors, and by
# parsing the compact text form ("\" binds, indices are numbers).
identity = Abs(Index(1))
assert identity == parse_text("\\1")

print("identity:", render(identity))
print("  code:", encode(identity))
print("  size:", size(identity))
print()

# Some classics.  Application is written out with parentheses; indices
# above the number of enclosing binders are free.
for label, text in [
    ("K (drops its second argument)", "\\\\2"),
    ("self-application", "\\(1 1)"),
    ("S combinator", "\\\\\\((3 1) (2 1))"),
    ("an open term, index 2 is free", "\\(1 2)"),
]:
    term = parse_text(text)
    print(label)
    print("  text:", render(term))
    print("  code:", encode(term), "(%d bits)" % size(term))
    print("  free indices up to:", max_free_index(term))
    print()

# decode() inverts encode() exactly and rejects anything that is not a
# complete code.
bits = encode(parse_text("\\\\(2 1)"))
back = decode(bits)
print("round trip:", bits, "->", render(back))

for broken in ["0010x", "0010" + "0", "01"]:
    try:
        decode(broken)
    except ValueError as exc:
        print("rejected %r: %s" % (broken, exc))
