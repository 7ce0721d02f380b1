#!/usr/bin/env python3
"""Independent reference values for the C++ test suite.

Nothing here shares code or algorithm with the library:
  * the type of a jet matrix comes from minimal t-orders of minors of a polynomial lift
    (invariant orders over the power-series ring, then capped), not from a normal form;
  * determinant-locus counts come from the distribution of products a*d in the jet ring;
  * kernel dimensions come from a plain Gaussian elimination on the coefficient map
    written out by multiplying against basis vectors.

Run with --json to dump every value as one JSON document.
"""

from __future__ import annotations

import argparse
import itertools
import json
from collections import Counter
from fractions import Fraction


# ---- polynomials over F_p as coefficient tuples, lowest degree first -------------------------

def poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def poly_sub(a, b, p):
    n = max(len(a), len(b))
    return [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]


def poly_add(a, b, p):
    n = max(len(a), len(b))
    return [((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)]


def order(poly):
    for i, c in enumerate(poly):
        if c:
            return i
    return None  # zero polynomial


def det_poly(M, p):
    n = len(M)
    if n == 1:
        return M[0][0]
    total = [0]
    for c in range(n):
        sub = [row[:c] + row[c + 1:] for row in M[1:]]
        term = poly_mul(M[0][c], det_poly(sub, p), p)
        total = poly_add(total, term, p) if c % 2 == 0 else poly_sub(total, term, p)
    return total


def type_by_minors(M, m, p):
    """Invariant t-orders of a lift over F_p[[t]], capped at m+1; returns (units, parts)."""
    a, b = len(M), len(M[0])
    deltas = [0]
    for k in range(1, min(a, b) + 1):
        best = None
        for rows in itertools.combinations(range(a), k):
            for cols in itertools.combinations(range(b), k):
                o = order(det_poly([[M[r][c] for c in cols] for r in rows], p))
                if o is not None and (best is None or o < best):
                    best = o
        deltas.append(best)
    orders = []
    for k in range(1, len(deltas)):
        if deltas[k] is None:
            orders.append(m + 1)
        else:
            orders.append(min(deltas[k] - deltas[k - 1], m + 1))
    units = sum(1 for o in orders if o == 0)
    return units, tuple(sorted(o for o in orders if o > 0))


def all_matrices(a, b, m, p):
    entries = list(itertools.product(range(p), repeat=m + 1))
    for cells in itertools.product(entries, repeat=a * b):
        yield [[list(cells[i * b + j]) for j in range(b)] for i in range(a)]


def type_histogram(a, b, m, p):
    hist = Counter()
    for M in all_matrices(a, b, m, p):
        _, parts = type_by_minors(M, m, p)
        hist["(" + ",".join(map(str, parts)) + f")@{m + 1}"] += 1
    return dict(sorted(hist.items()))


def minor_locus_count(a, b, m, p, s):
    count = 0
    for M in all_matrices(a, b, m, p):
        ok = True
        for rows in itertools.combinations(range(a), s):
            for cols in itertools.combinations(range(b), s):
                d = det_poly([[M[r][c] for c in cols] for r in rows], p)
                if any(d[: m + 1]):
                    ok = False
                    break
            if not ok:
                break
        count += ok
    return count


def det2_locus_count(m, p):
    """#{2x2 over F_p[t]/(t^{m+1}) with ad = bc} = sum_X N(X)^2, N(X) = #{(a,d): ad = X}."""
    jets = list(itertools.product(range(p), repeat=m + 1))
    products = Counter()
    for x in jets:
        for y in jets:
            products[tuple(poly_mul(list(x), list(y), p)[: m + 1])] += 1
    return sum(n * n for n in products.values())


def kernel_dim(M, m, p):
    """dim_F_p of {v in (F_p[t]/t^{m+1})^b : M v = 0} by elimination on the F_p-linear map."""
    a, b = len(M), len(M[0])
    cols = []
    for j in range(b):
        for k in range(m + 1):
            image = []
            for i in range(a):
                prod = poly_mul(M[i][j], [0] * k + [1], p)[: m + 1]
                image.extend(prod + [0] * (m + 1 - len(prod)))
            cols.append(image)
    rows = [list(r) for r in zip(*cols)]
    rank = 0
    ncols = len(cols)
    for c in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][c] % p), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][c], p - 2, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][c]:
                f = rows[r][c]
                rows[r] = [(x - f * y) % p for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return ncols - rank


# ---- partition formulas --------------------------------------------------------------------

def partitions(length, cap):
    return itertools.combinations_with_replacement(range(1, cap + 1), length)


def r_of(lam, i):
    return sum(1 for x in lam if x == i)


def theta_sing_bound(g, m):
    best = None
    for l in range(2, g):
        for lam in partitions(l, m + 1):
            if sum(lam) < m + 1:
                continue
            v = (m + 1) * (g - 1) - (sum(lam) - m - 1) - (l - r_of(lam, lam[-1]))
            best = v if best is None else max(best, v)
    return best


def lct_by_vertices(g, d, r, l):
    # The covering region has exactly one vertex per coordinate axis.
    return min(Fraction((g - d + l - i) * (l - i + 1), l - r - i + 1) for i in range(1, l - r + 1))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--json", action="store_true")
    ap.add_argument("--check", metavar="FROZEN", help="compare against a frozen JSON dump; exit 1 on drift")
    args = ap.parse_args()

    out = {
        "types_1x1_m1_p2": type_histogram(1, 1, 1, 2),
        "types_2x2_m1_p2": type_histogram(2, 2, 1, 2),
        "types_2x2_m2_p2": type_histogram(2, 2, 2, 2),
        "types_2x2_m1_p3": type_histogram(2, 2, 1, 3),
        "types_3x2_m1_p2": type_histogram(3, 2, 1, 2),
        "locus_2x3_m1_p2": {s: minor_locus_count(2, 3, 1, 2, s) for s in (1, 2)},
        "det2_locus": {f"m={m},p={p}": det2_locus_count(m, p) for p in (2, 3, 5) for m in (0, 1, 2)},
        "kernel_samples": {
            "[[t,1],[0,t]] m=2 p=2": kernel_dim([[[0, 1], [1]], [[0], [0, 1]]], 2, 2),
            "[[t],[t^2]] m=2 p=3": kernel_dim([[[0, 1]], [[0, 0, 1]]], 2, 3),
            "[[1+t, t],[t, 1+t],[0,t^2]] m=3 p=5": kernel_dim([[[1, 1], [0, 1]], [[0, 1], [1, 1]], [[0], [0, 0, 1]]], 3, 5),
        },
        "theta_sing_bound": {f"g={g},m={m}": theta_sing_bound(g, m) for g in (3, 4, 5, 6) for m in (1, 2, 3, 4, 5, 6)},
        "lct": {f"{g},{d},{r},{l}": str(lct_by_vertices(g, d, r, l))
                for (g, d, r, l) in [(4, 3, 1, 2), (5, 2, 0, 1), (6, 3, 1, 3), (7, 4, 2, 4), (12, 5, 1, 6), (9, 8, 0, 4)]},
    }
    out = json.loads(json.dumps(out))  # normalize integer keys to strings
    if args.check:
        with open(args.check) as fh:
            frozen = json.load(fh)
        if frozen != out:
            drift = sorted(k for k in set(frozen) | set(out) if frozen.get(k) != out.get(k))
            print("oracle drift in:", ", ".join(drift))
            raise SystemExit(1)
        print(f"{len(out)} oracle tables match")
    elif args.json:
        print(json.dumps(out, indent=1, sort_keys=True))
    else:
        for k, v in out.items():
            print(k, v)


if __name__ == "__main__":
    main()
