#!/usr/bin/env python3
"""Export link-census records from the LinkInfo tables to the plink CSV format.

Requires the `database_knotinfo` package (pip install database_knotinfo) and
sympy. Each output row is `name,components,pd,homfly,variant`; the homfly
column is written in plink's canonical polynomial text so that the C++
cross-check can compare strings directly.

Example (the bundled census file):

    python3 tools/export_linkinfo.py --components 4 --max-crossings 11 \
        > data/linkinfo_4comp_le11.csv
"""

import argparse
import csv
import sys

import sympy
from database_knotinfo import link_list

V, Z = sympy.symbols("v z")


def monomial(c, a, b):
    factors = []
    if a != 0:
        factors.append("v" if a == 1 else f"v^{a}")
    if b != 0:
        factors.append("z" if b == 1 else f"z^{b}")
    mag = abs(c)
    if not factors:
        return str(mag)
    body = "*".join(factors)
    return body if mag == 1 else f"{mag}*{body}"


def canonical(text):
    expr = sympy.sympify(text.strip().rstrip("}"), locals={"v": V, "z": Z})
    expr = sympy.expand(expr)
    terms = {}
    for term in sympy.Add.make_args(expr):
        coeff, rest = term.as_coeff_Mul()
        powers = rest.as_powers_dict()
        a = int(powers.get(V, 0))
        b = int(powers.get(Z, 0))
        for sym in powers:
            if sym not in (V, Z) and sym != 1:
                raise ValueError(f"unexpected factor {sym} in {text!r}")
        terms[(b, a)] = terms.get((b, a), 0) + int(coeff)
    out = []
    for (b, a) in sorted(terms):
        c = terms[(b, a)]
        if c == 0:
            continue
        piece = monomial(c, a, b)
        if not out:
            out.append(piece if c > 0 else "-" + piece)
        else:
            out.append(("+ " if c > 0 else "- ") + piece)
    return " ".join(out) if out else "0"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--components", type=int, action="append",
                    help="keep only links with this many components (repeatable)")
    ap.add_argument("--max-crossings", type=int, default=11)
    ap.add_argument("--names", nargs="*", help="keep only these base names")
    args = ap.parse_args()

    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["name", "components", "pd", "homfly", "variant"])
    for row in link_list(proper_links=True)[1:]:
        n = int(row["components"])
        if args.components and n not in args.components:
            continue
        if int(row["crossing_number"]) > args.max_crossings:
            continue
        if args.names and row["name"].split("{")[0] not in args.names:
            continue
        pd = row["pd_notation_math"].replace(" ", "")
        writer.writerow([row["name"], n, pd, canonical(row["homflypt_polynomial"]), ""])


if __name__ == "__main__":
    main()
