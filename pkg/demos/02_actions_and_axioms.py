"""Torus actions as documents: parsing, axiom checking, specialization.

An action document binds each generator to its image under sigma(t).  The
axiom checker proves, symbolically, that sigma(s) o sigma(t) = sigma(st)
and sigma(1) = id; anything failing either axiom is not a group action, and
the checker pins the first offending coefficient.
"""

from falin import check_axioms, laurent_str, parse, render, specialize

GOOD = """rank 2
action
z1 -> t1*z1
z2 -> t2*z2 + (t2 - t1^2)*z1^2
end
"""

BAD = """rank 1
action
z1 -> t1*z1 + 1
end
"""

action = parse(GOOD).to_action()
print("document:")
print(render(action))

verdict = check_axioms(action)
print("axioms hold?", verdict.ok)

# Specializing at a torus point evaluates every coefficient exactly.
print()
print("sigma(2,3):")
print(render(specialize(action, [2, 3])))
print("sigma(1,1) is the identity:")
print(render(specialize(action, [1, 1])))

# The affine family z1 -> t1*z1 + 1 is not an action: composing two group
# elements picks up an extra t1 that sigma(st) does not have.
broken = parse(BAD).to_action()
verdict = check_axioms(broken)
names = lambda k: f"t{k}" if k <= broken.rank else f"s{k - broken.rank}"
print("broken family verdict:", verdict.ok)
print("  axiom:   ", verdict.axiom)
print("  image:   z%d, word %r" % (verdict.image, verdict.word))
print("  got      ", laurent_str(verdict.got, names))
print("  expected ", laurent_str(verdict.expected, names))
