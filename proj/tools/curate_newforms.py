#!/usr/bin/env python3
"""Regenerate data/newforms.tsv from PARI/GP (requires cypari2).

For every newform of weight 2 and trivial character at the requested levels
this writes the Hecke eigenvalues a_l for every prime l <= 31. Coefficients of irrational
forms are expressed in the power basis of the root theta of the Hecke field
polynomial reported by PARI. A rational form is tagged with a Weierstrass
model when one of the curves in KNOWN_CURVES has the same a_l at every good
prime up to 31 and the model has the right conductor.

Usage: tools/curate_newforms.py [levels...] > data/newforms.tsv
"""

import sys

import cypari2

pari = cypari2.Pari()
pari.allocatemem(2 * 10**9, silent=True)

PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]

KNOWN_CURVES = {
    "14a1": [1, 0, 1, 4, -6],
    "54a1": [1, -1, 0, 12, 8],
    "54b1": [1, -1, 1, 1, -1],
    "98a1": [1, 1, 0, -25, -111],
    "882g1": [1, -1, 1, 1, 39],
    "882f1": [1, -1, 1, 64, -13597],
    "2646bc1": [1, -1, 1, 1, -3],
    "2646q1": [1, -1, 1, 64, 809],
}

# Curves without a Cremona label at hand, found as quadratic twists of small
# models with discriminant supported on {2, 3, 7}. Matched forms keep their
# generated label.
UNLABELLED_CURVES = [
    [1, -1, 1, 10354, -499971],
    [1, -1, 1, 211, 1397],
    [1, -1, 1, 64, 123],
]


def curve_aps(ainvs):
    e = pari.ellinit(ainvs)
    cond = int(pari.ellglobalred(e)[0])
    return cond, {p: int(pari.ellap(e, p)) for p in PRIMES}


def coords(c, deg):
    """Power-basis coordinates of a PARI polmod in y (or a rational)."""
    c = pari.lift(c)
    return [str(pari.polcoef(c, j, "y")) for j in range(deg)]


def emit(level):
    mf = pari.mfinit([level, 2], 0)
    basis = pari.mfeigenbasis(mf)
    fields = pari.mffields(mf)
    known = {lab: curve_aps(a) for lab, a in KNOWN_CURVES.items()}
    nr = ni = 0
    for form, pol in zip(basis, fields):
        deg = int(pari.poldegree(pol))
        co = pari.mfcoefs(form, PRIMES[-1])
        table = ";".join(
            "%d:%s" % (p, ",".join(coords(co[p], deg))) for p in PRIMES
        )
        if deg == 1:
            aps = {p: int(co[p]) for p in PRIMES}
            label, curve = None, "-"
            for lab, (cond, eaps) in known.items():
                if cond == level and all(
                    eaps[p] == aps[p] for p in PRIMES if level % p
                ):
                    label = lab
                    curve = "E=" + ",".join(str(x) for x in KNOWN_CURVES[lab])
            if label is None:
                for a in UNLABELLED_CURVES:
                    cond, eaps = curve_aps(a)
                    if cond == level and all(eaps[p] == aps[p] for p in PRIMES if level % p):
                        curve = "E=" + ",".join(str(x) for x in a)
                nr += 1
                label = "%d-r%d" % (level, nr)
            print("\t".join([str(level), label, "1", "-", table, curve]))
        else:
            ni += 1
            mp = ",".join(str(pari.polcoef(pol, j, "y")) for j in range(deg, -1, -1))
            print("\t".join([str(level), "%d-i%d" % (level, ni), str(deg), mp, table, "-"]))


def main():
    levels = [int(x) for x in sys.argv[1:]] or [14, 54, 98, 882, 2646]
    print("# level\tlabel\tdegree\tminpoly\tcoefficients\tcurve")
    print("# minpoly: leading coefficient first; coefficients: l:c0,c1,... in the power basis")
    for n in levels:
        emit(n)


if __name__ == "__main__":
    main()
