"""Golden CPMG N = 20 filter curve, tau = 100 us, tau_pi = 0.

Evaluated directly from the complex sum with numpy, independent of the C++
implementation. Writes tests/data/filter_n20_golden.csv.
"""
import numpy as np

N, TAU = 20, 1e-4
w = np.logspace(3, 8, 200)
delta = (np.arange(1, N + 1) - 0.5) / N
j = np.arange(1, N + 1)
s = 1 + (-1) ** (N + 1) * np.exp(1j * w * TAU)
s = s + 2 * ((-1.0) ** j * np.exp(1j * np.outer(w, delta) * TAU)).sum(axis=1)
g = np.abs(s) ** 2 / (w * TAU) ** 2

with open("tests/data/filter_n20_golden.csv", "w") as f:
    f.write("# CPMG N=20, tau=1e-4 s, tau_pi=0; generated by tests/oracles/filter_golden.py\n")
    f.write("omega_rad_s,g_N\n")
    for a, b in zip(w, g):
        f.write(f"{a:.17g},{b:.17g}\n")
