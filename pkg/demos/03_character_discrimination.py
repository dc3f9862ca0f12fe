"""The boost-character test that pins the normal module down to R^{3,1}.

The trace identity chi_{wedge^2 V}(g) = (chi_V(g)^2 - chi_V(g^2))/2 is
evaluated exactly at the rational boost g(lambda), lambda = mu^2, against
the adjoint character of so(3,1).  It holds identically for V = R^{3,1}
and fails for the realified C^2 at every mu != 1.
"""

from liepq import boost_element, character_discrimination_test, rat

print("the boost with lambda = 4 acting on R^{3,1}:")
for row in boost_element(rat(4)).matrix_on_v.to_rows():
    print("   ", " ".join(f"{str(x):>5}" for x in row))
print()

print(f"{'mu':>5} {'lambda':>7} {'chi_adj':>8} {'wedge(R31)':>11} "
      f"{'wedge(C2)':>10} {'residual R31':>13} {'residual C2':>12}")
for mu in ("3/2", "2", "3", "5", "7/2"):
    r = character_discrimination_test(rat(mu))
    print(f"{str(r.mu):>5} {str(r.lam):>7} {str(r.chi_adjoint):>8} "
          f"{str(r.wedge_standard):>11} {str(r.wedge_complex):>10} "
          f"{str(r.residual_standard):>13} {str(r.residual_complex):>12}")

print()
print("residual is exactly 0 only on the R^{3,1} side: the normal bundle")
print("module cannot be the realified C^2.")
