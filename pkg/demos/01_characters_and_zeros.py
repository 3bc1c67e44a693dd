"""Characters mod 11 and the shipped zero data.

The nine nonprincipal characters are labeled chi_j by chi_j(2) = zeta_10^j
(2 is the least primitive root).  chi_5 is the quadratic character; the
others pair up under conjugation, j <-> 10 - j.  The lowest zero ordinate of
the whole family, gamma ~ 1.23119 on chi_7, drives everything interesting
about the mod-11 race.
"""

import numpy as np

from race_density import CharacterTable, character_value, partition_characters
from race_density.density import load_tables

table = CharacterTable(11)
print(f"primitive root g = {table.primitive_root}")
print(f"chi_7(8) = {character_value(table, 7, 8):.6f}  (a tenth root of unity)")

reals, half = partition_characters(table)
print(f"real characters: {[l.index for l in reals]}, pair representatives: {[l.index for l in half]}")

tab, consts = load_tables(11, 2500.0)
merged = np.sort(np.concatenate([tab.ordinates(j) for j in range(1, 10)]))
print(f"\n{len(merged)} positive ordinates below 2500 across all characters")
print(f"lowest: {merged[0]:.6f} (on chi_7), runner-up: {merged[1]:.6f}")

alphas = 2.0 / np.sqrt(0.25 + merged[:4] ** 2)
print(f"oscillation amplitudes alpha for the four lowest zeros: {np.round(alphas, 5)}")

print("\nanalytic constants  -b1~(0, chi_j)  (sum over both signs of 1/(1/4+gamma^2)):")
for j in range(1, 6):
    print(f"  chi_{j}: {consts.neg_b1_zero(j, table):.12f}" + ("  (one-sided)" if j == 5 else ""))
print(f"quarter sum of squared amplitudes: {consts.total():.6f}")
