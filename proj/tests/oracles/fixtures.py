"""Synthetic CSV fixtures for the CLI fit commands.

Forward models are written out here with numpy, independent of the C++
library. Each file records its generator parameters in a header comment.
Run from the repository root.
"""
import numpy as np
import scipy.special as sp

H = 6.62607015e-34
HBAR = H / (2 * np.pi)
KB = 1.380649e-23
E = 1.602176634e-19
PHI0_AMP = 1.8e-6


def ecs(c_ff):
    return E**2 / (2 * c_ff * 1e-15 * H) / 1e9


ALPHA, EJ, CS = 0.41, 85.0, 78.0
E_CS = ecs(CS)
R = E_CS / (EJ * (1 - 2 * ALPHA))
GAP = np.sqrt(4 * E_CS * EJ * (1 - 2 * ALPHA)) + (8 * ALPHA - 1) / (4 * (1 - 2 * ALPHA)) * E_CS
SLOPE = 2 * np.sqrt(2) * np.pi * ALPHA * EJ * R**0.25


def omega01(f):
    eps = SLOPE * (f - 0.5)
    return GAP + 2 * eps**2 / GAP


def domega01_df(f):
    eps = SLOPE * (f - 0.5)
    return 4 * eps * SLOPE / GAP


def t1_qp(t, x_qp, w=4.68):
    ml, ms = R**0.25 / (2 * np.sqrt(2)), R**0.5 / 4
    a_sum = (2 * ml**2 * EJ + ms**2 * ALPHA * EJ) * 2 * np.pi * 1e9
    delta = 200e-6 * E / H / 1e9
    kt = KB * t / H / 1e9
    z = w / kt
    neq = (8 / np.pi) * x_qp * np.sqrt(2 * delta / w)
    eq = (16 / np.pi) * np.exp(-delta / kt) * sp.k0e(z / 2) * (1 + np.exp(-z))
    return 1 / (a_sum * (neq + eq))


def write(path, header, columns, rows):
    with open(path, "w") as f:
        for line in header:
            f.write(f"# {line}\n")
        f.write(",".join(columns) + "\n")
        for row in rows:
            f.write(",".join(f"{v:.17g}" for v in row) + "\n")


def main():
    rng = np.random.default_rng(20190401)

    f = np.linspace(0.49, 0.51, 21)
    y = omega01(f) + rng.normal(0, 1e-3, f.size)
    write("tests/data/spectrum.csv",
          [f"omega01(f), alpha={ALPHA}, E_J={EJ} GHz, C_S={CS} fF", "gaussian noise sigma 1 MHz, seed 20190401",
           f"anharmonicity {(8 * ALPHA - 1) / (4 * (1 - 2 * ALPHA)) * E_CS:.12f} GHz"],
          ["flux_phi0", "freq_GHz"], zip(f, y))

    t = np.array([0.01, 0.05, 0.1, 0.15, 0.2])
    t1 = t1_qp(t, 6e-8) * (1 + rng.normal(0, 0.02, t.size))
    write("tests/data/t1_vs_temperature.csv",
          ["quasiparticle T1(T), x_qp=6e-8, omega01=4.68 GHz, Delta0=200 ueV", "2% relative noise"],
          ["temp_K", "t1_s"], zip(t, t1))

    write("tests/data/t1_device.csv", ["T1 values quoted for the device: 83 us at 10 mK, 26 us at 150 mK"],
          ["temp_K", "t1_s"], [(0.01, 83e-6), (0.15, 26e-6)])

    ts = np.linspace(0, 300e-6, 61)
    sig = 0.8 * np.exp(-ts / 180e-6) * np.exp(-(1.25e4 * ts) ** 2) + 0.1 + rng.normal(0, 0.005, ts.size)
    write("tests/data/envelope.csv",
          ["gaussian echo envelope, T1=90 us, Gamma_phi=1.25e4 1/s, amplitude 0.8, offset 0.1",
           "additive noise sigma 0.005"], ["time_s", "signal"], zip(ts, sig))

    ff = np.linspace(0.49, 0.51, 41)
    ge = np.sqrt(np.log(2)) * PHI0_AMP * np.abs(2 * np.pi * 1e9 * domega01_df(ff))
    ge = ge * (1 + rng.normal(0, 0.01, ff.size))
    write("tests/data/fluxnoise.csv",
          ["echo dephasing Gamma_E(f), A_Phi=(1.8 uPhi0)^2, t=1 us", "1% relative noise"],
          ["flux_phi0", "gamma_e_per_s"], zip(ff, ge))

    td = np.linspace(0, 400e-6, 41)
    dec = 0.9 * np.exp(-td / 90e-6) + 0.05 + rng.normal(0, 0.005, td.size)
    write("tests/data/decay.csv", ["energy relaxation trace, T1=90 us, amplitude 0.9, offset 0.05",
                                   "additive noise sigma 0.005"], ["time_s", "signal"], zip(td, dec))


if __name__ == "__main__":
    main()
