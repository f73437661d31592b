"""Print closed-form ocd polynomials for each named family and check them against the engines."""
import argparse

from ocdpoly.engine import ocd_polynomial_bruteforce, ocd_polynomial_fast
from ocdpoly.families import Complete, CompleteBipartite, Cycle, Empty, Path, Star, build, family_polynomial

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("--max-n", type=int, default=10)
args = parser.parse_args()

rows = []
for n in range(1, args.max_n + 1):
    fams = [Complete(n), Empty(n), Path(n), Star(n - 1) if n > 1 else None,
            Cycle(n) if n >= 3 else None, CompleteBipartite(n // 2, n - n // 2) if n >= 2 else None]
    for f in filter(None, fams):
        closed = family_polynomial(f)
        g = build(f)
        oracle = ocd_polynomial_bruteforce(g)[0] if g.n <= 16 else ocd_polynomial_fast(g)[0]
        rows.append((f.label, closed.min_degree(), closed.evaluate(1), closed == oracle, closed.to_text()))

w = max(len(r[0]) for r in rows)
print(f"{'family':<{w}}  min  total     ok  polynomial")
for label, lo, total, ok, text in rows:
    print(f"{label:<{w}}  {lo:>3}  {total:>8}  {'yes' if ok else 'NO':>4}  {text}")
