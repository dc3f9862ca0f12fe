"""Smallest nontrivial modules via the Weyl dimension formula.

Enumerates every dominant weight of B_r / D_r whose irreducible module has
dimension at most n = 2r or 2r+1, reproducing the census that backs the
smallest-module table: generically only the vector module survives, with
the familiar low-rank exceptions (B2 spin, D3 spins, D4 triality).
"""

from liepq import dimension_bound, enumerate_up_to_dim, root_system

for n in range(4, 11):
    kind = "B" if n % 2 else "D"
    rank = n // 2
    if rank < 2:
        continue
    rs = root_system(kind, rank)
    table = enumerate_up_to_dim(rs, n)
    label = f"{kind}{rank} = so({n},C)"
    print(f"{label:>14}, bound {n:>2}: ", end="")
    print(", ".join(f"dim {d} at {w}" for w, d in table))
    if rs.flag:
        print(f"{'':>14}  NOTE: {rs.flag}")
print()

print("dimension bound dim G + m(so(p,q)) for a few signatures:")
for (p, q) in [(3, 2), (4, 1), (2, 2), (4, 4), (5, 3)]:
    b = dimension_bound(p, q)
    print(f"  so({p},{q}): dim G = {b.dim_group:>2}, m = {b.smallest_module}, "
          f"total = {b.total}")
