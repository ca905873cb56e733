"""Reference values for special functions, cQED and decoherence channels.

Uses scipy/mpmath and plain formulas written independently of the C++ code.
"""
import mpmath as mp
import numpy as np
import scipy.special as sp
from scipy.optimize import brentq

H = 6.62607015e-34
HBAR = H / (2 * np.pi)
KB = 1.380649e-23
E = 1.602176634e-19


def ecs(c_ff):
    return E**2 / (2 * c_ff * 1e-15 * H) / 1e9


def main():
    mp.mp.dps = 30
    for x in (1e-3, 0.75, 1.0, 2.0, 2.5, 10.0, 50.0):
        print(f"K0({x}) = {mp.besselk(0, x)}  scaled = {mp.besselk(0, x) * mp.e**x}")

    # dispersive couplings from the measured pull
    w01, w12, wc0, wc, chi = 4.68, 5.46, 8.2175, 8.219, 0.892
    chi01 = (wc0 - wc) * 1e3
    chi12 = 2 * (chi01 - chi)
    g01 = np.sqrt(chi01 * (w01 - wc0) * 1e3)
    g12 = np.sqrt(chi12 * (w12 - wc0) * 1e3)
    print("g01, g12 [MHz] =", g01, g12)
    c01 = 73.0**2 / ((w01 - wc0) * 1e3)
    c12 = 115.0**2 / ((w12 - wc0) * 1e3)
    print("2 chi from (73, 115) MHz =", 2 * (c01 - c12 / 2))

    # Purcell, cyclic reading of kappa
    print("T1 Purcell [s] =", 1 / (1.3e6 * 73.0**2 / ((w01 - 8.219) * 1e3) ** 2))

    # thermal photons
    f = 8.219e9
    nbar = 1 / np.expm1(H * f / (KB * 0.05))
    k, c = 1.3e6, 0.892e6
    print("nbar(50 mK) =", nbar, " T_phi [s] =", 1 / (k**2 / (k**2 + 4 * c**2) * 4 * c**2 / k * nbar))

    def svv(t):
        x = H * f / (KB * t)
        return 4 * KB * t * 50 * x / np.expm1(x)

    stages = [(300, 1e-7), (4, 1e-5), (0.7, 1e-4), (0.1, 3.56e-3), (0.01, 1.0)]
    target = sum(w * svv(t) for t, w in stages)
    print("T_eff of the default chain [K] =", brentq(lambda t: svv(t) - target, 1e-3, 300, xtol=1e-15))

    # quasiparticles, alpha = 0.41 set, angular units
    alpha, ej = 0.41, 85.0
    r = ecs(78) / (ej * (1 - 2 * alpha))
    ml, ms = r**0.25 / (2 * np.sqrt(2)), r**0.5 / 4
    a_sum = (2 * ml**2 * ej + ms**2 * alpha * ej) * 2 * np.pi * 1e9
    gap = 200e-6 * E / H / 1e9
    xqp = 0.6 / (2 * 4.9e6)

    def rate(t, x=xqp, w=4.68):
        kt = KB * t / H / 1e9
        z = w / kt
        neq = (8 / np.pi) * x * np.sqrt(2 * gap / w)
        eq = (16 / np.pi) * np.exp(-gap / kt) * sp.k0e(z / 2) * (1 + np.exp(-z))
        return a_sum * (neq + eq)

    print("matrix elements =", ml, ms)
    for t in (0.01, 0.15):
        print(f"T1_qp({t} K) [s] =", 1 / rate(t))

    # flux noise
    wir = 2 * np.pi / 2.45
    print("Ramsey/echo ratio =", np.sqrt(np.log(1 / (wir * 1e-6)) / np.log(2)))

    # decay envelope 1/e time, exponential shape
    t1, g = 90e-6, 1 / 160e-6
    print("1/e time [s] =", 1 / (1 / (2 * t1) + g))
    # gaussian shape: t^2 g^2 + t/(2 T1) - 1 = 0
    print("1/e time gaussian [s] =", (-1 / (2 * t1) + np.sqrt(1 / (4 * t1**2) + 4 * g**2)) / (2 * g**2))


if __name__ == "__main__":
    main()
