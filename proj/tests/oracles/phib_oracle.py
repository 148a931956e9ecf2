#!/usr/bin/env python3
# Independent mpmath evaluation of the defining integral of phi_b.
# The contour is the real axis indented by a semicircle of radius r0 above 0.
import sys
import mpmath as mp

mp.mp.dps = 40


def log_phib(z, b):
    z = mp.mpc(z)
    b = mp.mpf(b)
    r0 = min(b, 1 / b) / 4

    def f(w):
        return mp.exp(-2j * z * w) / (mp.sinh(w * b) * mp.sinh(w / b) * w)

    left = mp.quad(f, [-mp.inf, -40, -10, -1, -r0])
    right = mp.quad(f, [r0, 1, 10, 40, mp.inf])

    def arc(th):
        w = r0 * mp.exp(1j * th)
        return f(w) * 1j * w

    semi = -mp.quad(arc, [0, mp.pi / 2, mp.pi])
    return (left + semi + right) / 4


def phib(z, b):
    return mp.exp(log_phib(z, b))


if __name__ == "__main__":
    pts = [(0, 0.7), (0.3, 0.8), (0.2 + 0.3j, 0.7), (-0.4 - 0.5j, 0.65),
           (1.1 + 0.2j, 0.9), (-1.5 + 0.6j, 0.75)]
    for z, b in pts:
        v = phib(z, b)
        print(f"z={z} b={b} phi={mp.nstr(v.real, 20)} {mp.nstr(v.imag, 20)}")
    sys.exit(0)
