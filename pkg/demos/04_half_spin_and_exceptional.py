"""Half-spin modules of so(4,4) and the exceptional small-module isomorphisms.

Real 16x16 gamma matrices realize Cl(4,4); the bivector embedding splits the
spinor module into two 8-dimensional chiral halves, each irreducible with a
unique symmetric invariant form.  The exceptional isomorphisms onto so(3,1),
so(3,2) and so(3,3) are produced by solving for the invariant form on the
appropriate carrier and certified by exact bracket comparison.
"""

from liepq import (
    SO31_SL2C,
    SO32_SP4R,
    SO33_SL4R,
    exceptional_iso,
    half_spin_reps,
    inertia_of_diagonalizable_form,
    invariant_skew_forms,
    invariant_symmetric_forms,
    is_irreducible,
)

hs = half_spin_reps(4, 4)
print("Cl(4,4): 8 gammas of size 16, first four squaring to +1, last four to -1")
print(f"chirality element squares to identity: "
      f"{(hs.chirality @ hs.chirality).trace() == 16}")
print(f"chiral split: {hs.plus_space.dim} + {hs.minus_space.dim}")
for label, half in (("C+", hs.c_plus), ("C-", hs.c_minus)):
    verdict = is_irreducible(half)
    sym = len(invariant_symmetric_forms(half))
    skew = len(invariant_skew_forms(half))
    print(f"  {label}: {verdict.status}, symmetric forms {sym}, skew forms {skew}")
print()

for name in (SO31_SL2C, SO32_SP4R, SO33_SL4R):
    iso = exceptional_iso(name)
    inertia = inertia_of_diagonalizable_form(iso.carrier_form)
    print(f"{name}: small algebra dim {iso.small_algebra.dim}, "
          f"carrier dim {iso.carrier.module_dim}, "
          f"carrier form inertia {inertia}, normalization scale {iso.scale}")
print()
print("each intertwiner is a certified bracket-preserving bijection onto the")
print("frozen-basis so(p,q); see tests/test_so_pq.py for the full certificate.")
