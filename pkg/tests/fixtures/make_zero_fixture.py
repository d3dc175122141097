"""Regenerate ``zeros_mpmath.json`` with mpmath only (no package code).

Z(t) = exp(i theta(t)) L(1/2 + it, chi) is real for the real characters mod 3
and mod 4 (root number 1); sign changes on a fine grid are polished with
``mpmath.findroot`` at 30 digits.
"""

import json
from pathlib import Path

import mpmath as mp

mp.mp.dps = 30

CHARS = {
    "chi4": (4, [0, 1, 0, -1], 1),
    "chi3": (3, [0, 1, -1], 1),
}


def hardy(q, table, parity):
    def z(t):
        s = mp.mpf("0.5") + 1j * t
        th = t / 2 * mp.log(q / mp.pi) + mp.im(mp.loggamma((mp.mpf("0.5") + parity + 1j * t) / 2))
        return mp.re(mp.exp(1j * th) * mp.dirichlet(s, table))
    return z


def zeros(q, table, parity, height=20, step=0.05):
    z = hardy(q, table, parity)
    out, t, prev = [], mp.mpf(step), None
    prev = z(t)
    while t < height:
        t2 = t + step
        cur = z(t2)
        if prev * cur < 0:
            out.append(mp.findroot(z, (t, t2), solver="anderson"))
        t, prev = t2, cur
    return out


if __name__ == "__main__":
    data = {}
    for name, (q, table, parity) in CHARS.items():
        data[name] = {"q": q, "values": table, "zeros": [mp.nstr(g, 20) for g in zeros(q, table, parity)]}
    path = Path(__file__).with_name("zeros_mpmath.json")
    path.write_text(json.dumps(data, indent=2) + "\n")
    print(json.dumps(data, indent=2))
