"""
Hydrogen-like fine structure as an entanglement chain
=====================================================

The level with principal quantum number n splits into 2n - 1 total
angular momentum eigenspaces, each a coupling branch of some orbital l
with the electron spin.  Their Schmidt strings form a strict
majorization chain, with the j -> infinity limiting string sitting
exactly between the last plus branch and the first minus branch.
"""

from subent import (
    hydrogen_level,
    hydrogen_chain_expected,
    limiting_string,
    sort_chain,
    measures,
)

# One level: n = 3 carries V_1/2 (l=0), V_3/2 and Vt_1/2 (l=1), V_5/2
# and Vt_3/2 (l=2).  Dimensions sum to 2 n^2 = 18.
level = hydrogen_level(3)
print("entries of the n=3 level:")
for e in level.entries:
    print(f"  {e.label:<7} l={e.l}  dim={e.dim}  string={e.string.probs}")

# Sorting by majorization recovers the chain least -> most entangled.
# S_0 is the common limit of both branch families.
items = [(e.label, e.string) for e in level.entries]
items.append(("S_0", limiting_string()))
chain = sort_chain(items)
print("\nchain:", " < ".join(chain.labels))
print("matches expected order:",
      chain.labels == hydrogen_chain_expected(3))

# The same order holds at every level; measures grow along the chain.
print("\nper-level chains with information entropies:")
for n in range(1, 7):
    level = hydrogen_level(n)
    strings = {e.label: e.string for e in level.entries}
    strings["S_0"] = limiting_string()
    chain = sort_chain(list(strings.items()))
    cells = [
        f"{label}({measures(strings[label]).e_i:.3f})"
        for label in chain.labels
    ]
    print(f"  n={n}: " + " < ".join(cells))
