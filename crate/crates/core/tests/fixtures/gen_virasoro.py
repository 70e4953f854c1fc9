"""Regenerates virasoro_m{1..4}.json with plain Python fractions.

Run from this directory: python3 gen_virasoro.py
"""
import json
from fractions import Fraction


def h(m, r, s):
    return Fraction((r * (m + 3) - s * (m + 2)) ** 2 - 1, 4 * (m + 2) * (m + 3))


def canon(m, r, s):
    return min((r, s), (m + 2 - r, m + 3 - s))


def fmt(x):
    return f"{x.numerator}/{x.denominator}"


def tau(m, r, s):
    e = r if m % 2 == 0 else s
    return 1 if e % 2 == 1 else -1


def sigma(m, r, s):
    for (a, b) in [(r, s), (m + 2 - r, m + 3 - s)]:
        if m % 2 == 0 and a == 1:
            return 1 if b % 2 == 1 else -1
        if m % 2 == 1 and b == 1:
            return 1 if a % 2 == 1 else -1
    return None


def fuse(m, a, b):
    (r, s), (rr, ss) = a, b
    big_i = min(r, rr, m + 2 - r, m + 2 - rr)
    big_j = min(s, ss, m + 3 - s, m + 3 - ss)
    out = set()
    for i in range(1, big_i + 1):
        for j in range(1, big_j + 1):
            out.add(canon(m, abs(r - rr) + 2 * i - 1, abs(s - ss) + 2 * j - 1))
    return sorted(out)


for m in range(1, 5):
    labels = sorted({canon(m, r, s) for r in range(1, m + 2) for s in range(1, m + 3)})
    c = 1 - Fraction(6, (m + 2) * (m + 3))
    doc = {
        "m": m,
        "central_charge": fmt(c),
        "labels": [
            {"r": r, "s": s, "weight": fmt(h(m, r, s)), "tau": tau(m, r, s), "sigma": sigma(m, r, s)}
            for (r, s) in labels
        ],
        "fusion": [
            {"left": [a[0], a[1]], "right": [b[0], b[1]], "product": [list(p) for p in fuse(m, a, b)]}
            for a in labels
            for b in labels
        ],
    }
    with open(f"virasoro_m{m}.json", "w") as f:
        json.dump(doc, f, indent=1)
        f.write("\n")
