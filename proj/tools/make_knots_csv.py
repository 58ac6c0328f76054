#!/usr/bin/env python3
"""Build data/knots.csv from the KnotInfo table.

Reads the KnotInfo export (via the ``database_knotinfo`` package, or a
pipe-delimited CSV passed with --knotinfo-csv), keeps the non-alternating
11-crossing knots, and merges the hand-maintained columns from
data/knots_supplement.csv (slicing-number ranges and definiteness signs that
KnotInfo does not carry).
"""

import argparse
import csv
import json
import re
import sys
from pathlib import Path

COLUMNS = ["name", "crossings", "pd", "signature", "arf", "g4", "u_lo", "u_hi",
           "us_lo", "us_hi", "c4_lo", "c4_hi", "crosscap_hi", "slice",
           "determinant", "definiteness"]


def knotinfo_rows(path):
    if path:
        csv.field_size_limit(sys.maxsize)
        with open(path, newline="") as fh:
            yield from csv.DictReader(fh, delimiter="|")
        return
    from database_knotinfo import link_list
    rows = link_list()
    yield from rows[1:]  # row 0 holds the column descriptions


def interval(text):
    text = text.strip()
    if not text:
        return None
    m = re.fullmatch(r"\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]", text)
    if m:
        return int(m.group(1)), int(m.group(2))
    return int(text), int(text)


def render_pd(text):
    quads = json.loads(text)
    return "PD[" + ", ".join("X[" + ",".join(str(e) for e in q) + "]" for q in quads) + "]"


def natural_key(name):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", name)]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--knotinfo-csv", help="pipe-delimited KnotInfo export")
    ap.add_argument("--supplement", default=Path(__file__).resolve().parent.parent / "data" / "knots_supplement.csv")
    ap.add_argument("--out", default="-")
    args = ap.parse_args()

    with open(args.supplement, newline="") as fh:
        supplement = {row["name"]: row for row in csv.DictReader(fh)}

    out_rows = []
    for row in knotinfo_rows(args.knotinfo_csv):
        if not row["name"].startswith("11n_"):
            continue
        name = row["name"].replace("_", "")
        g4 = int(row["smooth_four_genus"])
        u = interval(row["unknotting_number"])
        crosscap = interval(row["crosscap_number"])
        extra = supplement.get(name, {})
        out_rows.append({
            "name": name,
            "crossings": row["crossing_number"],
            "pd": render_pd(row["pd_notation"]),
            "signature": row["signature"],
            "arf": row["arf_invariant"],
            "g4": g4,
            "u_lo": u[0],
            "u_hi": u[1],
            "us_lo": extra.get("us_lo", ""),
            "us_hi": extra.get("us_hi", ""),
            "c4_lo": "",
            "c4_hi": "",
            "crosscap_hi": crosscap[1] if crosscap else "",
            "slice": "true" if g4 == 0 else "false",
            "determinant": row["determinant"],
            "definiteness": extra.get("definiteness", ""),
        })
    out_rows.sort(key=lambda r: natural_key(r["name"]))

    fh = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    writer = csv.DictWriter(fh, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(out_rows)
    if fh is not sys.stdout:
        fh.close()
    print(f"wrote {len(out_rows)} knots", file=sys.stderr)


if __name__ == "__main__":
    main()
