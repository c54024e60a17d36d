"""
Writing and checking a catalog file
===================================

Catalogs are plain text, one identity per line.  This builds a small one,
saves it, reloads it and verifies every entry in worker processes.
"""

import tempfile
from pathlib import Path

from invbinom import Catalog, Family, SeriesSpec, load_catalog, make_identity, save_catalog, verify_all
from invbinom.formulas import family_form

third = SeriesSpec(Family.B4N, 1, point="1/3")

entries = [
    # family_form writes the general closed form out at the chosen point
    make_identity("third", 'weight 1 at x = 1/3: "y = sqrt(145)-12"', third, family_form(third)),
    make_identity("arcsin-half", 'arcsin squared: "2 arcsin(1/2)^2"',
                  SeriesSpec(Family.ARCSIN2_ORACLE, 2, point="1/2"), "pi^2/18"),
    # deliberately wrong in the 20th digit
    make_identity("arcsin-half-off", 'arcsin squared, perturbed: "pi^2/18"',
                  SeriesSpec(Family.ARCSIN2_ORACLE, 2, point="1/2"), "pi^2/18+1/10^20"),
]

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "mine.txt"
    save_catalog(Catalog(entries), path)
    print(path.read_text())
    catalog = load_catalog(path)

for r in verify_all(catalog, 30, jobs=2):
    print(f"{r.status:5s} {r.id:16s} diff {r.abs_diff.to_decimal(3)}")
