"""How the three certified radii respond to the run parameters.

E1 shrinks super-exponentially as the lattice spacing eps decreases, E2
polynomially (degree ~ e_c) as the lattice cap C grows, and E3 quadratically
in the tail coefficient b1_hat(T) as the product truncation height rises.
The desk profile sits where all three are comfortably below the 1e-3 target.
"""

import math

from race_density.density import LatticeEngine, load_tables
from race_density.errbounds import PAPER_E2_ROWS, bound_E1, bound_E2, tail_bound_params
from race_density.zerodata import alpha_sequence

tab, consts = load_tables(11, 2500.0)
tails = tail_bound_params(alpha_sequence(tab, consts), 2.0 * math.pi)
print(f"tail bound: P(X_i >= w) <= exp(-{tails.a_coeff}(w - {tails.b_shift})^2) for w >= 2pi")
print(f"  built from k0 = {tails.k_index}, tail of squares <= {tails.tail_sq:.4f}\n")

print("eps    E1(eps)")
for eps in (0.5, 0.35, 0.25, 0.2, 0.15):
    print(f"{eps:.2f}   {bound_E1(eps, tails):.3e}")

print("\nC      4*B2(a=2)      4*B2(a=10)")
for c in (50.0, 100.0, 200.0):
    e2a = bound_E2(2, 0.2, c, PAPER_E2_ROWS[2], tab)
    e2b = bound_E2(10, 0.2, c, PAPER_E2_ROWS[10], tab)
    print(f"{c:5.0f}  {e2a:.3e}     {e2b:.3e}")

print("\nT      b1_hat(T)     E3(a=2, eps=0.2, C=100)")
for t in (1400.0, 1900.0, 2500.0):
    eng = LatticeEngine(tab, consts, 0.2, 100.0, t)
    _, e3, _, _ = eng.compute_S_and_E3(2)
    print(f"{t:5.0f}  {eng.b1_hat:.3e}    {e3:.3e}")
