"""Tour of the fixture catalog: languages, oracles, and ground truth.

Each fixture is an indexed family of decidable languages over the
positive integers, with an analytic subset oracle, usually a tell-tale
oracle, and metadata naming its target language.
"""

from limitgen import FIXTURES, distinguishing_set, make_fixture, project

print("fixture            languages  target  identifiable  trivial-gen")
for name in sorted(FIXTURES):
    coll = make_fixture(name)
    meta = coll.meta
    size = coll.size if coll.size is not None else "inf"
    print(f"{name:<18} {size!s:>9}  {meta.target_index:>6}"
          f"  {str(meta.known_identifiable):>12}"
          f"  {str(meta.known_trivial_for_generation):>11}")

print()
print("Projections are membership vectors on the domain prefix x_1..x_m.")
evens = make_fixture("evens")
for i in (1, 2, 3):
    print(f"  evens L_{i}[8] = {project(evens, i, 8).bits}")

print()
print("The subset oracle answers inclusion queries the algorithms need:")
print(f"  mult4 <= evens?   {evens.subset(3, 2)}")
print(f"  evens <= mult4?   {evens.subset(2, 3)}")

print()
print("A distinguishing set holds, for each earlier non-superset language,")
print("the smallest target member it misses; once those examples arrive,")
print("the target is critical and stays critical.")
for name in ("evens", "finlang", "littlestone"):
    coll = make_fixture(name)
    dset = distinguishing_set(coll)
    print(f"  {name:<12} target L_{dset.target_index}:"
          f" elements {dset.elements or '(none needed)'} with n0 = {dset.n0}")

print()
print("The binary-tree fixture shatters arbitrarily deep trees yet is")
print("identifiable: all its path languages are finite.")
lit = make_fixture("littlestone")
for i in range(1, 7):
    print(f"  L_{i} = {set(lit.language(i).elements) or '{}'}")
