import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liepq.errors import ContractError, NotStableError
from liepq.exact_linalg import Matrix, Subspace, mat_mul, rat, rref
from liepq.ratpoly import char_poly, rational_roots
from liepq.rep_theory import (
    Representation,
    adjoint_action,
    adjoint_rep,
    boost_element,
    character_discrimination_test,
    complex_structure_endomorphism,
    constrained_form_uniqueness,
    cyclic_submodule,
    direct_sum,
    dual_rep,
    hom_space,
    hom_space_dense,
    invariant_skew_forms,
    invariant_symmetric_forms,
    is_irreducible,
    restrict,
    wedge_action,
    wedge_square_rep,
)
from liepq.so_pq import (
    SO31_SL2C,
    embedding_iso,
    exceptional_iso,
    sl2c_compact_form_vectors,
    so_of_form,
    so_pq_algebra,
    standard_rep,
)
from liepq.lie_core import LieAlgebra, orthogonal_complement


def std_and_friends(p, q):
    algebra = so_pq_algebra(p, q)
    std = Representation(algebra, p + q, list(algebra.basis))
    return algebra, std


def test_representation_validation():
    for (p, q) in [(2, 1), (3, 1), (2, 2)]:
        algebra, std = std_and_friends(p, q)
        std.validate()
        wedge_square_rep(std).validate()
        adjoint_rep(algebra).validate()
        dual_rep(std).validate()


def test_validation_catches_garbage():
    algebra, std = std_and_friends(2, 1)
    broken = Representation(algebra, 3, [std.actions[0], std.actions[1], std.actions[1]])
    with pytest.raises(ContractError):
        broken.validate()


def test_hom_contains_identity():
    algebra, std = std_and_friends(2, 1)
    homs = hom_space(std, std)
    assert len(homs) >= 1
    rows = [list(h.entries) for h in homs]
    rows.append(list(Matrix.identity(3).entries))
    assert len(rref(rows)[0]) == len(homs)


@pytest.mark.parametrize(
    "pq,expected",
    [((2, 1), 1), ((3, 2), 1), ((4, 1), 1), ((3, 3), 1), ((3, 1), 2), ((2, 2), 2)],
)
def test_hom_wedge_adjoint_dimensions(pq, expected):
    algebra, std = std_and_friends(*pq)
    homs = hom_space(wedge_square_rep(std), adjoint_rep(algebra))
    assert len(homs) == expected


def test_hom_dense_cross_check_22():
    algebra, std = std_and_friends(2, 2)
    wedge = wedge_square_rep(std)
    adj = adjoint_rep(algebra)
    fast = hom_space(wedge, adj)
    dense = hom_space_dense(wedge, adj)
    assert [h.entries for h in fast] == [h.entries for h in dense]


def test_hom_intertwines_exactly():
    algebra, std = std_and_friends(3, 1)
    wedge = wedge_square_rep(std)
    adj = adjoint_rep(algebra)
    for phi in hom_space(wedge, adj):
        for x in range(algebra.dim):
            assert phi @ wedge.actions[x] == adj.actions[x] @ phi


def test_hom_algebra_mismatch():
    _, std21 = std_and_friends(2, 1)
    _, std31 = std_and_friends(3, 1)
    with pytest.raises(ContractError):
        hom_space(std21, std31)


@pytest.mark.parametrize("pq", [(2, 1), (3, 1), (3, 2), (2, 2)])
def test_t_c_lies_in_hom_span(pq):
    from liepq.so_pq import t_c

    algebra, std = std_and_friends(*pq)
    homs = hom_space(wedge_square_rep(std), adjoint_rep(algebra))
    rows = [list(h.entries) for h in homs]
    rank_before = len(rref([r[:] for r in rows])[0])
    rows.append(list(t_c(*pq, 1).entries))
    assert len(rref(rows)[0]) == rank_before


def test_form_hom_duality():
    for (p, q) in [(2, 1), (3, 1), (2, 2)]:
        algebra, std = std_and_friends(p, q)
        for rep in (std, wedge_square_rep(std)):
            sym = len(invariant_symmetric_forms(rep))
            skew = len(invariant_skew_forms(rep))
            assert sym + skew == len(hom_space(rep, dual_rep(rep)))


def test_schur_consistency_complex_type():
    iso = exceptional_iso(SO31_SL2C)
    cvec = iso.small_modules[0]
    assert is_irreducible(cvec).status == "IRREDUCIBLE"
    endos = hom_space(cvec, cvec)
    ident = Matrix.identity(4)
    for e in endos:
        roots = rational_roots(char_poly(e))
        if roots:
            # a rational eigenvalue forces a scalar: kernel of (e - r) is
            # invariant, so it must be everything
            assert any(e == ident.scale(r) for r in roots)


def test_cyclic_submodule_cases():
    rep = standard_rep(2, 1)
    assert cyclic_submodule(rep, [0, 0, 0]).dim == 0
    assert cyclic_submodule(rep, [1, 0, 0]).dim == 3
    assert cyclic_submodule(rep, [rat("1/2"), rat(5), rat(-3)]).dim == 3


def test_is_irreducible_standard_31():
    verdict = is_irreducible(standard_rep(3, 1))
    assert verdict.status == "IRREDUCIBLE" and verdict.endo_dim == 1


def test_is_irreducible_11_abelian_path():
    verdict = is_irreducible(standard_rep(1, 1))
    assert verdict.status == "REDUCIBLE"
    assert verdict.witness.dim == 1
    assert verdict.witness.contains([1, 1]) or verdict.witness.contains([1, -1])


def test_is_irreducible_rejects_zero_module():
    algebra, std = std_and_friends(2, 1)
    with pytest.raises(ContractError):
        is_irreducible(Representation(algebra, 0, [Matrix.zeros(0, 0)] * 3))


def test_direct_sum_is_reducible():
    algebra, std = std_and_friends(2, 1)
    double = direct_sum(std, std)
    double.validate()
    assert double.module_dim == 6
    verdict = is_irreducible(double)
    assert verdict.status == "REDUCIBLE"
    assert 0 < verdict.witness.dim < 6


def test_direct_sum_mixed_reducible():
    algebra = so_pq_algebra(2, 2)
    std = Representation(algebra, 4, list(algebra.basis))
    both = direct_sum(std, adjoint_rep(algebra))
    assert both.module_dim == 10
    assert is_irreducible(both).status == "REDUCIBLE"


def test_restrict_full_is_identity_change():
    algebra, std = std_and_friends(2, 1)
    full = restrict(std, Subspace.full(3))
    assert [a.entries for a in full.actions] == [a.entries for a in std.actions]


def test_restrict_requires_invariance():
    algebra, std = std_and_friends(2, 1)
    with pytest.raises(ContractError):
        restrict(std, Subspace.from_vectors(3, [[1, 0, 0]]))


def test_beta_complement_restricts_to_standard_module():
    # complement of embedded so(2,1) inside so(R^4, I_{2,1}(1)) is R^{2,1}
    emb = embedding_iso(2, 1, 1)
    target = so_of_form(emb.target_form)
    coord = target.coordinatizer()
    vectors = [coord.express(im) for im in emb.images[:3]]
    sub = Subspace.from_vectors(6, vectors)
    complement = orthogonal_complement(target.trace_form(), sub)
    assert complement.dim == 3
    h_alg = LieAlgebra.from_matrices(emb.images[:3], validate=False)
    actions = [target.ad_matrix(v) for v in vectors]
    module = restrict(Representation(h_alg, 6, actions), complement)
    std = standard_rep(2, 1)
    # compare against the standard module over a shared abstract algebra
    shared = Representation(h_alg, 3, list(so_pq_algebra(2, 1).basis))
    homs = hom_space(module, shared)
    assert len(homs) == 1
    assert len(rref(homs[0].to_rows())[1]) == 3  # the intertwiner is invertible


def test_wedge_action_identity():
    assert wedge_action(Matrix.identity(4)) == Matrix.identity(6)


@given(st.lists(st.integers(min_value=-4, max_value=4), min_size=16, max_size=16))
@settings(max_examples=40)
def test_wedge_action_trace_identity(entries):
    g = Matrix(4, 4, [rat(x) for x in entries])
    if len(rref(g.to_rows())[1]) < 4:
        return
    lhs = wedge_action(g).trace()
    rhs = (g.trace() * g.trace() - mat_mul(g, g).trace()) / 2
    assert lhs == rhs


def test_wedge_action_multiplicative():
    g = Matrix.from_rows([[1, 2, 0, 0], [0, 1, 0, 0], [0, 0, 1, 3], [0, 0, -1, 1]])
    h = Matrix.from_rows([[2, 0, 1, 0], [0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 1]])
    assert wedge_action(mat_mul(g, h)) == mat_mul(wedge_action(g), wedge_action(h))


def test_boost_element():
    b = boost_element(rat(4))
    assert mat_mul(b.matrix_on_v, b.matrix_on_v) == boost_element(rat(16)).matrix_on_v
    with pytest.raises(ContractError):
        boost_element(rat(-1))


def test_adjoint_action_boost_rational():
    algebra = so_pq_algebra(3, 1)
    g = boost_element(rat(4)).matrix_on_v
    ad_g = adjoint_action(g, algebra)
    assert ad_g.rows == 6
    # group action: Ad(g)Ad(g) = Ad(g^2)
    g2 = boost_element(rat(16)).matrix_on_v
    assert mat_mul(ad_g, ad_g) == adjoint_action(g2, algebra)


def test_adjoint_action_not_stable():
    algebra = so_pq_algebra(3, 0)
    g = Matrix.diagonal([1, 2, 1])
    with pytest.raises(NotStableError):
        adjoint_action(g, algebra)


@pytest.mark.parametrize("mu", ["3/2", "2", "3", "5"])
def test_character_discrimination(mu):
    report = character_discrimination_test(rat(mu))
    assert report.residual_standard == 0
    assert report.residual_complex != 0


def test_character_test_rejects_mu_one():
    with pytest.raises(ContractError):
        character_discrimination_test(1)


def test_complex_structure_on_sl2c_adjoint():
    iso = exceptional_iso(SO31_SL2C)
    adjoint = adjoint_rep(iso.small_algebra)
    j = complex_structure_endomorphism(adjoint)
    assert mat_mul(j, j) == Matrix.identity(6).scale(-1)
    # multiplication by i in the frozen basis (H,E,F,iH,iE,iF) swaps halves
    expected = Matrix.zeros(6, 6)
    for k in range(3):
        expected.entries[(k + 3) * 6 + k] = rat(1)
        expected.entries[k * 6 + (k + 3)] = rat(-1)
    assert j == expected or j == expected.scale(-1)


def test_constrained_form_uniqueness():
    iso = exceptional_iso(SO31_SL2C)
    adjoint = adjoint_rep(iso.small_algebra)
    forms = invariant_symmetric_forms(adjoint)
    assert len(forms) == 2
    compact = Subspace.from_vectors(6, sl2c_compact_form_vectors())
    verdict = constrained_form_uniqueness(adjoint, compact)
    assert verdict.solution_dim == 1
    assert verdict.killing_ratio not in (None, 0)
    # K-hat = K(., J.) violates the constraint: find a su(2) pair with
    # nonzero K-hat pairing within the complementary direction
    j = complex_structure_endomorphism(adjoint)
    kill = iso.small_algebra.killing_form()
    rows = compact.basis_rows()
    from liepq.rep_theory import _matvec_list

    khat_on_mixed = [
        kill.evaluate(x, _matvec_list(j, _matvec_list(j, y))) for x in rows for y in rows
    ]
    assert any(v != 0 for v in khat_on_mixed)  # K itself is nonzero on su(2)


def test_constrained_form_rejects_non_compact():
    iso = exceptional_iso(SO31_SL2C)
    adjoint = adjoint_rep(iso.small_algebra)
    boosty = Subspace.from_vectors(6, [[1, 0, 0, 0, 0, 0]])
    with pytest.raises(ContractError):
        constrained_form_uniqueness(adjoint, boosty)


def test_direct_sum_dims_add():
    algebra, std = std_and_friends(2, 1)
    adj = adjoint_rep(algebra)
    total = direct_sum(std, adj)
    assert total.module_dim == std.module_dim + adj.module_dim
