"""Tour of the deformed bracket on so(p,q) (+) R^{p,q}.

Builds the one-parameter family [.,.]_c, shows that c = 0 gives the
semidirect product with an abelian ideal while c != 0 gives a simple
algebra whose Killing form matches so(p+1,q) or so(p,q+1), and displays
the explicit block-matrix embedding that realizes the isomorphism.
"""

from liepq import (
    deformed_algebra,
    embedding_iso,
    inertia_of_diagonalizable_form,
    ipq_c,
    rat,
    so_pq_algebra,
)

P, Q = 2, 1

print(f"so({P},{Q}) has dimension {so_pq_algebra(P, Q).dim}")
print()

for c in ("0", "1", "-1", "1/2", "-2"):
    dalg = deformed_algebra(P, Q, rat(c))
    gram = dalg.algebra.killing_form().gram
    inertia = inertia_of_diagonalizable_form(gram)
    semisimple = dalg.algebra.is_semisimple()
    print(f"c = {c:>4}:  dim = {dalg.dim}, semisimple = {semisimple}, "
          f"Killing inertia = {inertia}")
print()

# For c != 0 the family lands in so(R^{n+1}, I_{p,q}(c)); the signature of
# I_{p,q}(c) decides between so(p+1,q) and so(p,q+1).
for c in ("1", "-1"):
    form = ipq_c(P, Q, rat(c))
    print(f"I_{{{P},{Q}}}({c}) has inertia {inertia_of_diagonalizable_form(form)}")
print()

emb = embedding_iso(P, Q, rat(1))
print("images of the three so(2,1) generators and the three vector directions")
print("inside so(R^4, I_{2,1}(1)):")
for idx, image in enumerate(emb.images):
    kind = "so" if idx < 3 else "vec"
    rows = " | ".join(
        " ".join(f"{str(x):>3}" for x in image.row_list(i)) for i in range(4)
    )
    print(f"  basis {idx} ({kind}):  {rows}")
