#!/usr/bin/env python3
"""Writes fixtures/*.json from the tables below.

Table conventions:
  seq(lo, [c0, c1, ...])        1-D coefficients for k = lo, lo+1, ...
  grid(x1lo, x2lo, rows)        2-D array; columns run over x1 left to right,
                                rows over x2 with the top row holding the largest x2.
  Symbols are built from monomials z(k) = e^{-i k.xi}.
"""
import json
import os
import sys
from fractions import Fraction as F

OUT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "fixtures")


class P:
    def __init__(self, terms=None):
        self.t = {k: v for k, v in (terms or {}).items() if v != 0}

    def __add__(self, o):
        r = dict(self.t)
        for k, v in o.t.items():
            r[k] = r.get(k, 0) + v
        return P(r)

    def __sub__(self, o):
        return self + o * -1

    def __mul__(self, o):
        if not isinstance(o, P):
            return P({k: v * o for k, v in self.t.items()})
        r = {}
        for ka, va in self.t.items():
            for kb, vb in o.t.items():
                k = tuple(x + y for x, y in zip(ka, kb))
                r[k] = r.get(k, 0) + va * vb
        return P(r)

    __rmul__ = __mul__

    def __pow__(self, n):
        r = one(len(next(iter(self.t))))
        for _ in range(n):
            r = r * self
        return r


def z(*k):
    return P({tuple(k): F(1)})


def one(d):
    return z(*([0] * d))


def seq(lo, cs):
    return P({(lo + i,): F(c) for i, c in enumerate(cs)})


def grid(x1lo, x2lo, rows):
    top = x2lo + len(rows) - 1
    t = {}
    for r, row in enumerate(rows):
        for c, v in enumerate(row):
            t[(x1lo + c, top - r)] = F(v)
    return P(t)


def laurent(p, d):
    return {"dim": d, "terms": [{"k": list(k), "v": str(F(v))} for k, v in sorted(p.t.items()) if v != 0]}


def bank(name, source, M, a, hp, claimed=None):
    d = len(M)
    return {
        "dilation": M,
        "lowpass": laurent(a, d),
        "highpass": [{"scale_sq": str(F(s)), "base": laurent(b, d), "sign": e} for (s, b, e) in hp],
        "meta": {"name": name, "source": source, "claimed_vmo": claimed},
    }


def lowpass(name, source, M, a):
    d = len(M)
    return {"dilation": M, "lowpass": laurent(a, d), "meta": {"name": name, "source": source, "claimed_vmo": None}}


def fx(s):
    return F(s)


Q = [[1, 1], [1, -1]]
S3 = [[1, -2], [2, -1]]
D2 = [[2, 0], [0, 2]]
two = [[2]]

haar = seq(0, ["1/2", "1/2"])
intro_qt_a = seq(-2, ["-1/16", "1/4", "5/8", "1/4", "-1/16"])
a21 = seq(-3, ["5/29", "5/29", "-1/58", "-1/58", "5/29", "5/29", "5/29", "5/29"])
aI4 = seq(-3, ["-1/32", 0, "9/32", "1/2", "9/32", 0, "-1/32"])
a23 = grid(-1, -1, [[0, "1/8", 0], ["1/8", "1/2", "1/8"], [0, "1/8", 0]])
a24 = grid(-1, -1, [[0, "1/9", "1/9"], ["1/9", "1/3", "1/9"], ["1/9", "1/9", 0]])
a42 = grid(-1, -1, [["-1/16", "1/8", "-1/16"], ["1/8", "3/4", "1/8"], ["-1/16", "1/8", "-1/16"]])
a43_rows = [[0, 0, "-1/16", 0, 0], [0, "1/16", "1/8", "1/16", 0], ["-1/16", "1/8", "1/2", "1/8", "-1/16"],
            [0, "1/16", "1/8", "1/16", 0], [0, 0, "-1/16", 0, 0]]
a43 = grid(-2, -2, a43_rows)
a44_rows = [[0, 0, "-1/64", "-1/32", "-1/64"], [0, "-1/32", "5/32", "5/32", "-1/32"],
            ["-1/64", "5/32", "11/32", "5/32", "-1/64"], ["-1/32", "5/32", "5/32", "-1/32", 0],
            ["-1/64", "-1/32", "-1/64", 0, 0]]
a44 = grid(-2, -2, a44_rows)


def two_tap(lo, hi):
    return z(hi) - z(lo)


fixtures = {}

fixtures["haar"] = lowpass("haar", "Haar low-pass filter", two, haar)
fixtures["aI4"] = lowpass("aI4", "4-point interpolatory low-pass filter", two, aI4)
fixtures["intro_qt_lowpass"] = lowpass("intro_qt_lowpass", "5-tap low-pass of the two-filter quasi-tight bank", two, intro_qt_a)
fixtures["ex2_1_lowpass"] = lowpass("ex2_1_lowpass", "8-tap low-pass with negative taps, tight condition holds", two, a21)
fixtures["ex2_3_lowpass"] = lowpass("ex2_3_lowpass", "quincunx 5-point low-pass", Q, a23)
fixtures["ex2_4_lowpass"] = lowpass("ex2_4_lowpass", "sqrt(3) dilation low-pass", S3, a24)
fixtures["ex4_2_lowpass"] = lowpass("ex4_2_lowpass", "quincunx 3x3 low-pass", Q, a42)
fixtures["ex4_3_lowpass"] = lowpass("ex4_3_lowpass", "quincunx 13-point low-pass", Q, a43)
fixtures["ex4_4_lowpass"] = lowpass("ex4_4_lowpass", "2I dilation 5x5 low-pass", D2, a44)

fixtures["intro_qt"] = bank(
    "intro_qt", "two-filter quasi-tight bank with signs (-1, 1)", two, intro_qt_a,
    [(1, seq(-2, ["-1/16", "1/4", "-3/8", "1/4", "-1/16"]), -1),
     ("1/8", seq(0, [-1, 2, -1]), 1)])

s5 = F(20, 841)       # (2 sqrt5 / 29)^2
s301 = F(301, 3364)   # (sqrt301 / 58)^2
s10 = F(90, 3364)     # (3 sqrt10 / 58)^2
s25 = F(25, 841)      # (5/29)^2
fixtures["ex2_1"] = bank(
    "ex2_1", "directional tight bank, 13 two-tap filters", two, a21,
    [(s5, two_tap(0, 1), 1), (s5, two_tap(0, 2), 1), (s5, two_tap(-1, 1), 1), (s301, two_tap(-1, 0), 1),
     (s5, two_tap(-1, 2), 1), (s10, two_tap(-2, 1), 1), (s10, two_tap(-2, 2), 1), (s10, two_tap(-1, 3), 1),
     (s10, two_tap(-1, 4), 1), (s25, two_tap(-2, 3), 1), (s25, two_tap(-2, 4), 1), (s25, two_tap(-3, 3), 1),
     (s25, two_tap(-3, 4), 1)])

fixtures["ex2_2"] = bank(
    "ex2_2", "directional quasi-tight bank for aI4", two, aI4,
    [("9/64", two_tap(0, 1), 1), ("9/64", two_tap(-1, 0), 1), ("63/1024", two_tap(-1, 1), 1),
     ("1/1024", two_tap(-3, 3), 1), ("1/64", two_tap(-1, 2), -1), ("1/64", two_tap(-2, 1), -1),
     ("9/512", two_tap(-1, 3), -1)])


def tap2(p, q):
    return z(*q) - z(*p)


fixtures["ex2_3"] = bank(
    "ex2_3", "directional tight quincunx bank", Q, a23,
    [("1/16", grid(0, 0, [[-1, 1]]), 1), ("1/16", grid(0, -1, [[-1, 1]]), 1),
     ("1/16", grid(1, -1, [[-1], [1]]), 1), ("1/16", grid(1, 0, [[-1], [1]]), 1),
     ("1/64", grid(-1, 0, [[-1, 0, 1]]), 1), ("1/64", grid(0, -1, [[-1], [0], [1]]), 1),
     ("2/64", grid(0, -1, [[0, -1], [1, 0]]), 1), ("2/64", grid(0, 0, [[-1, 0], [0, 1]]), 1)])

t3, t2, t1 = F(3, 81), F(2, 81), F(1, 81)
fixtures["ex2_4"] = bank(
    "ex2_4", "directional tight bank for the sqrt(3) dilation", S3, a24,
    [(t3, grid(0, 0, [[-1, 1]]), 1), (t3, grid(1, 1, [[-1, 1]]), 1),
     (t3, grid(1, -1, [[-1], [1]]), 1), (t3, grid(1, 1, [[-1], [1]]), 1),
     (t2, grid(1, 0, [[-1], [1]]), 1), (t2, grid(0, 1, [[-1, 1]]), 1),
     (t3, grid(1, 0, [[0, -1], [1, 0]]), 1), (t3, grid(0, 0, [[0, -1], [1, 0]]), 1),
     (t2, grid(1, 1, [[0, -1], [1, 0]]), 1), (t1, grid(1, 1, [[-1, 0, 1]]), 1),
     (t1, grid(1, 1, [[-1], [0], [1]]), 1), (t1, grid(1, -1, [[-1, 0], [0, 1]]), 1),
     (t1, grid(1, 0, [[-1, 0], [0, 1]]), 1), (t1, grid(0, -2, [[0, -1], [0, 0], [1, 0]]), 1),
     (t1, grid(0, -1, [[0, -1], [0, 0], [1, 0]]), 1), (t1, grid(1, 0, [[0, 0, -1], [1, 0, 0]]), 1),
     (t1, grid(1, 1, [[0, 0, -1], [1, 0, 0]]), 1), (t1, grid(-1, -1, [[0, 0, -1], [0, 0, 0], [1, 0, 0]]), 1)])

# 1-D symbols: x = e^{-i xi} is z(1), e^{i xi} is z(-1)
x = z(1)
d2 = (one(1) - x) ** 2
fixtures["ex4_1"] = bank(
    "ex4_1", "differencing quasi-tight bank for aI4 with two vanishing moments", two, aI4,
    [("2/1024", d2 * (one(1) - z(-3)), 1), ("2/1024", d2 * (z(1) - z(-2)), 1),
     ("1/256", d2 * (one(1) - z(-2)), 1), ("1/1024", d2 * (z(-3) - z(1)), 1),
     ("3/16", d2, 1), ("3/16", d2 * z(1), 1),
     ("42/1024", (one(1) - x) ** 3, -1), ("42/1024", (one(1) - x) ** 3 * z(-1), -1),
     ("3/256", d2 * (z(1) - z(-1)), -1)],
    claimed=[3, 3, 3, 3, 2, 2, 3, 3, 3])

# 2-D: z1 = e^{-i xi1} = z(1,0), z2 = z(0,1)
I = one(2)
z1, z2 = z(1, 0), z(0, 1)
n1, n2 = I - z1, I - z2
e21 = z(-1, 1)  # e^{-i(xi2 - xi1)}
b1_42 = n2 ** 2 * F(1, 2) - n1 * n2 * (I - e21) * F(1, 256)
b2_42 = n2 ** 2 * F(1, 2) - n1 ** 2 * (z(0, 2) - I - e21 * 16) * F(1, 512)
b3_42 = n1 ** 2 * F(129, 256) + n1 * n2 * (z1 - I * 2 + z(1, -2)) * F(1, 256)
b4_42 = n2 ** 2 * F(1, 2) + n1 * n2 * (I - e21) * F(1, 256)
b5_42 = n2 ** 2 * F(1, 2) + n1 ** 2 * (z(0, 2) - I - e21 * 16) * F(1, 512)
b6_42 = n1 ** 2 * F(127, 256) - n1 * n2 * (z1 - I * 2 + z(1, -2)) * F(1, 256)
b7_42 = n1 ** 2 * z1
fixtures["ex4_2"] = bank(
    "ex4_2", "quincunx quasi-tight bank with two vanishing moments", Q, a42,
    [(2, b1_42, 1), (2, b2_42, 1), (2, b3_42, 1), (2, b4_42, -1), (2, b5_42, -1), (2, b6_42, -1),
     ("1/64", b7_42, -1)])

ep = z(-1, -1)  # e^{i(xi1+xi2)}
fixtures["ex4_3"] = bank(
    "ex4_3", "quincunx differencing quasi-tight bank, 19 filters", Q, a43,
    [("1/256", (I - z(0, -2)) * n2 ** 2, 1), ("6/64", n2 ** 2, 1), ("2/64", z1 * n2 ** 2, 1),
     ("9/256", (I - e21) * n1 * n2, 1), ("9/256", (z1 - z(0, -1)) * n1 * n2, 1),
     ("3/256", (I - z(0, 2)) * n1 ** 2, 1), ("1/256", (I - z(-2, 0)) * n1 ** 2, 1),
     ("6/64", n1 ** 2, 1), ("2/64", z1 * n1 ** 2, 1),
     ("2/256", n1 * n2 ** 2, -1), ("2/256", (I - ep) * n2 ** 2, -1), ("2/256", (I - e21) * n2 ** 2, -1),
     ("10/1024", (z1 - z(-1, 0)) * n2 ** 2, -1), ("2/256", (z(2, 0) - z1) * n2 ** 2, -1),
     ("2/256", (I - ep) * n1 ** 2, -1), ("1/16", n1 * n2, -1), ("1/16", z1 * n1 * n2, -1),
     ("2/256", (I - e21) * n1 ** 2, -1), ("26/1024", (z(1, 2) - z1) * n1 ** 2, -1)])

b3_43_rows = [r[:] for r in a43_rows]
b3_43_rows[2][2] = "-1/2"
fixtures["ex4_3_three"] = bank(
    "ex4_3_three", "quincunx quasi-tight bank with three filters", Q, a43,
    [("2/64", grid(0, -1, [[0, -1, 0], [-1, 4, -1], [0, -1, 0]]), 1),
     ("6/64", grid(0, -1, [[0, -1, 0], [1, 0, 1], [0, -1, 0]]), 1),
     (1, grid(-2, -2, b3_43_rows), -1)],
    claimed=[2, 2, 4])

b5_44_rows = [r[:] for r in a44_rows]
b5_44_rows[2][2] = "-21/32"
fixtures["ex4_4"] = bank(
    "ex4_4", "2I dilation quasi-tight bank with two vanishing moments", D2, a44,
    [(1, grid(0, 0, [["1/16", 0, "-5/16"], [0, "1/2", 0], ["-5/16", 0, "1/16"]]), 1),
     (1, grid(-2, 0, [[0, 0, "-5/16", 0, "1/16"], [0, 0, "1/2", 0, 0], ["1/16", 0, "-5/16", 0, 0]]), 1),
     (1, grid(0, -2, [[0, 0, "1/16"], [0, 0, 0], ["-5/16", "1/2", "-5/16"], [0, 0, 0], ["1/16", 0, 0]]), 1),
     (1, grid(-2, -2, [[0, 0, "1/16", 0, 0], [0] * 5, [0, 0, "-3/16", 0, "1/16"], [0] * 5, ["1/16", 0, 0, 0, 0]]), -1),
     (1, grid(-2, -2, b5_44_rows), -1)],
    claimed=[2, 2, 2, 2, 4])


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else OUT
    os.makedirs(out, exist_ok=True)
    for name, doc in fixtures.items():
        with open(os.path.join(out, name + ".json"), "w") as f:
            json.dump(doc, f, indent=1)
            f.write("\n")
    print(f"wrote {len(fixtures)} fixtures to {out}")


if __name__ == "__main__":
    main()
