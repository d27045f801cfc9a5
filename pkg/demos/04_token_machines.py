"""Token-by-token generators and decidable support membership.

A token machine emits one token per step using at most a declared number
of random bits, so support membership of any string is decidable: walk
the string and enumerate the bit assignments of each step.  A brute-force
enumeration of the bounded-length support double-checks the decider.
"""

import numpy as np

from limitgen import MACHINES, mop_decide, support_bruteforce, token_machine_generator
from limitgen.mop import domain_to_string, iterative_bit_discovery

for name, machine in sorted(MACHINES.items()):
    print(f"machine {name}: tokens {machine.tokens}, "
          f"{machine.bit_bound} random bit(s) per step")
    print(f"  support up to length 3: {sorted(support_bruteforce(machine, 3))}")
    for s in ("a", "b", "ab", "ba"):
        verdict = mop_decide(machine, s)
        tail = ""
        if verdict.answer:
            bits = ";".join("".join(map(str, step)) or "-"
                            for step in verdict.witness)
            tail = f"  (witness bits {bits})"
        print(f"  '{s}' in support? {'Yes' if verdict.answer else 'No'}{tail}")
    print()

print("When a machine does not declare its per-step bit budget, the bound")
print("can be discovered by trying k = 0, 1, 2, ... until every k-bit")
print("assignment lets the step halt:")
print(f"  det-a needs   {iterative_bit_discovery(MACHINES['det-a'].step)} bits")
print(f"  coin-ab needs {iterative_bit_discovery(MACHINES['coin-ab'].step)} bit")

print()
print("Any token machine doubles as a domain-level generator through the")
print("length-then-lexicographic bijection between strings and integers:")
gen = token_machine_generator(MACHINES["uniform-len2"])
rng = np.random.default_rng(0)
draws = sorted({gen.sample(rng) for _ in range(200)})
pretty = {x: domain_to_string(("a", "b"), x) for x in draws}
print(f"  sampled domain elements {draws} = strings {list(pretty.values())}")
