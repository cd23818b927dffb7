"""Writes su21.json: sl(3) with the Cartan involution of su(2,1).

k = s(gl2 + gl1) is spanned by H1, H2, E12, E21; p by E13, E31, E23, E32.
The form is the trace form tr(XY); it is unimodular on p. The Weyl group
S3 acts on (H1, H2) by permuting diagonal entries.
"""
import itertools
import json
import sys
from fractions import Fraction


def unit(i, j):
    m = [[Fraction(0)] * 3 for _ in range(3)]
    m[i][j] = Fraction(1)
    return m


def diag(a, b, c):
    m = [[Fraction(0)] * 3 for _ in range(3)]
    m[0][0], m[1][1], m[2][2] = Fraction(a), Fraction(b), Fraction(c)
    return m


def mul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)] for i in range(3)]


def sub(a, b):
    return [[a[i][j] - b[i][j] for j in range(3)] for i in range(3)]


BASIS = [
    ("H1", "compact", diag(1, -1, 0)),
    ("H2", "compact", diag(0, 1, -1)),
    ("E12", "compact", unit(0, 1)),
    ("E21", "compact", unit(1, 0)),
    ("E13", "noncompact", unit(0, 2)),
    ("E31", "noncompact", unit(2, 0)),
    ("E23", "noncompact", unit(1, 2)),
    ("E32", "noncompact", unit(2, 1)),
]


def coordinates(m):
    """Coefficients of a traceless matrix in BASIS."""
    c = [Fraction(0)] * len(BASIS)
    c[0] = m[0][0]
    c[1] = m[0][0] + m[1][1]
    for k, (i, j) in zip(range(2, 8), [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)]):
        c[k] = m[i][j]
    return c


def text(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def weyl_matrices():
    # sigma permutes the diagonal; column j holds the image of H_j.
    hs = [(1, -1, 0), (0, 1, -1)]
    out = []
    for perm in itertools.permutations(range(3)):
        cols = []
        for h in hs:
            image = [0, 0, 0]
            for k in range(3):
                image[perm[k]] = h[k]
            # image = a*H1 + b*H2 with a = image[0], b = image[0] + image[1]
            cols.append((image[0], image[0] + image[1]))
        out.append([[text(Fraction(cols[j][i])) for j in range(2)] for i in range(2)])
    return out


def main():
    structure = []
    for i in range(len(BASIS)):
        for j in range(i + 1, len(BASIS)):
            a, b = BASIS[i][2], BASIS[j][2]
            c = coordinates(sub(mul(a, b), mul(b, a)))
            terms = [[k, [text(v)]] for k, v in enumerate(c) if v != 0]
            if terms:
                structure.append([i, j, terms])
    form = [[[text(sum(mul(a[2], b[2])[k][k] for k in range(3)))] for b in BASIS] for a in BASIS]
    family = {
        "basis": [{"label": l, "type": t} for l, t, _ in BASIS],
        "structure": structure,
        "n": 0,
        "form": form,
        "cartan": {"n_minus": [3, 5, 7], "h": [0, 1], "n_plus": [2, 4, 6], "t": [0, 1], "a": []},
        "weyl": weyl_matrices(),
    }
    out = sys.argv[1] if len(sys.argv) > 1 else "su21.json"
    with open(out, "w") as f:
        json.dump(family, f, indent=1)
        f.write("\n")


if __name__ == "__main__":
    main()
