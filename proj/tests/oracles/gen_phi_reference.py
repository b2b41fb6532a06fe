"""Writes tests/data/phi_reference.inc: Phi(z) on 1601 points over [-8, 8].

Each value is an mpmath quadrature of the standard normal density over
(-inf, z] at 40 digits; no erf/erfc involved.
"""
import pathlib

import mpmath as mp

mp.mp.dps = 40


def density(t):
    return mp.exp(-t * t / 2) / mp.sqrt(2 * mp.pi)


def phi(z):
    if z <= 0:
        return mp.quad(density, [-mp.inf, z])
    return mp.mpf(1) / 2 + mp.quad(density, [0, z])


def main():
    out = pathlib.Path(__file__).resolve().parents[1] / "data" / "phi_reference.inc"
    lines = ["// Generated by tests/oracles/gen_phi_reference.py. Do not edit."]
    for i in range(1601):
        z = mp.mpf(i - 800) / 100
        lines.append("{%s, %s}," % (mp.nstr(z, 6), mp.nstr(phi(z), 25)))
    out.write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
