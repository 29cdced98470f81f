#!/usr/bin/env python3
"""Regenerates data/real_forms.json.

Entries are keyed by (ambient type, inner/outer, dim K) and cover the simple
types up to rank 8. Classical labels follow the usual matrix-group names; the
exceptional ones use Cartan's EI..EIX, FI, FII and G.
"""
import json
import sys


def c2(x):
    return x * (x - 1) // 2


def sp(x):
    return x * (2 * x + 1)


def entries():
    out = []

    def add(t, inner, dim, label):
        out.append({"type": t, "inner": inner, "dim_K": dim, "label": label})

    for n in range(1, 9):  # A_n, real forms of sl(n+1)
        N = n + 1
        for q in range(0, N // 2 + 1):
            p = N - q
            add(f"A{n}", True, p * p + q * q - 1, f"SU({N})" if q == 0 else f"U({p},{q})")
        if n >= 2:
            add(f"A{n}", False, c2(N), f"GL_{N}(R)")
            if N % 2 == 0:
                add(f"A{n}", False, sp(N // 2), f"GL_{N // 2}(H)")
    for n in range(2, 9):  # B_n, so(2n+1)
        N = 2 * n + 1
        for q in range(0, n + 1):
            p = N - q
            add(f"B{n}", True, c2(p) + c2(q), f"SO({N})" if q == 0 else f"SO({p},{q})")
    for n in range(2, 9):  # C_n, sp(2n)
        for q in range(0, n // 2 + 1):
            p = n - q
            add(f"C{n}", True, sp(p) + sp(q), f"Sp({n})" if q == 0 else f"Sp({p},{q})")
        add(f"C{n}", True, n * n, f"Sp({2 * n},R)")
    for n in range(4, 9):  # D_n, so(2n)
        N = 2 * n
        inner = {}
        outer = {}
        for q in range(0, n + 1):
            p = N - q
            label = f"SO({N})" if q == 0 else f"SO({p},{q})"
            (inner if q % 2 == 0 else outer).setdefault(c2(p) + c2(q), []).append(label)
        inner.setdefault(n * n, []).append(f"SO*({N})")
        for dims, flag in ((inner, True), (outer, False)):
            for dim, labels in dims.items():
                # In D4 triality identifies SO(6,2) with SO*(8).
                add(f"D{n}", flag, dim, "=".join(labels))
    for t, inner, dim, label in [
        ("E6", True, 38, "EII"), ("E6", True, 46, "EIII"), ("E6", True, 78, "E6 (compact)"),
        ("E6", False, 36, "EI"), ("E6", False, 52, "EIV"),
        ("E7", True, 63, "EV"), ("E7", True, 69, "EVI"), ("E7", True, 79, "EVII"), ("E7", True, 133, "E7 (compact)"),
        ("E8", True, 120, "EVIII"), ("E8", True, 136, "EIX"), ("E8", True, 248, "E8 (compact)"),
        ("F4", True, 24, "FI"), ("F4", True, 36, "FII"), ("F4", True, 52, "F4 (compact)"),
        ("G2", True, 6, "G"), ("G2", True, 14, "G2 (compact)"),
    ]:
        add(t, inner, dim, label)
    return out


def main():
    data = entries()
    keys = [(e["type"], e["inner"], e["dim_K"]) for e in data]
    if len(keys) != len(set(keys)):
        sys.exit("duplicate real-form key")
    text = "[\n" + ",\n".join("  " + json.dumps(e) for e in data) + "\n]\n"
    if "@" in text:
        sys.exit("'@' is reserved by the build")
    path = sys.argv[1] if len(sys.argv) > 1 else "data/real_forms.json"
    with open(path, "w") as f:
        f.write(text)


if __name__ == "__main__":
    main()
