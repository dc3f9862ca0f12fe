import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liepq.errors import ContractError, NotClosedError, NotStableError
from liepq.exact_linalg import (
    Matrix,
    Subspace,
    inertia_of_diagonalizable_form,
    mat_mul,
    rat,
)
from liepq.lie_core import (
    LieAlgebra,
    bracket,
    centralizer,
    is_maximal_subalgebra,
    is_semisimple,
    is_subalgebra,
    killing_form,
    orthogonal_complement,
    structure_tensor,
    subalgebra_closure,
    theta_involution,
    trace_form,
)
from liepq.rep_theory import adjoint_rep, is_irreducible
from liepq.so_pq import deformed_algebra, so_pq_algebra

from conftest import unit_matrix

coeff3 = st.lists(st.integers(min_value=-5, max_value=5), min_size=6, max_size=6)


def test_bracket_rotation_basis(so3_rotations):
    # [L1, L2] = L3 in the classic basis
    assert bracket(so3_rotations, [1, 0, 0], [0, 1, 0]) == [rat(0), rat(0), rat(1)]


def test_bracket_antisymmetry_and_zero(so3_rotations):
    x = [rat(2), rat(-1), rat(3)]
    assert bracket(so3_rotations, x, x) == [rat(0)] * 3
    assert bracket(so3_rotations, x, [0, 0, 0]) == [rat(0)] * 3


def test_structure_tensor_abelian_diagonal():
    basis = [Matrix.diagonal([1, 0]), Matrix.diagonal([0, 1])]
    algebra = LieAlgebra.from_matrices(basis)
    assert structure_tensor(algebra) == {}
    assert algebra.is_abelian()


def test_structure_tensor_so21_frozen_values(so21):
    # hand-computed commutators of the frozen basis (rotation b0, boosts b1, b2):
    # [b0,b1] = -b2, [b0,b2] = b1, [b1,b2] = b0
    tensor = structure_tensor(so21)
    assert tensor == {
        (0, 1): {2: rat(-1)},
        (0, 2): {1: rat(1)},
        (1, 2): {0: rat(1)},
    }


def test_not_closed_pair_in_gl2():
    with pytest.raises(NotClosedError):
        LieAlgebra.from_matrices([unit_matrix(0, 1, 2), unit_matrix(1, 0, 2)])


def test_killing_abelian_is_zero():
    algebra = LieAlgebra.from_matrices([Matrix.diagonal([1, 0]), Matrix.diagonal([0, 1])])
    assert killing_form(algebra).gram.is_zero()


def test_killing_so3_negative_definite(so3_rotations):
    gram = killing_form(so3_rotations).gram
    assert inertia_of_diagonalizable_form(gram) == (0, 3, 0)


def test_killing_is_n_minus_2_times_trace_form():
    for (p, q) in [(2, 1), (3, 1), (2, 2), (5, 0)]:
        algebra = so_pq_algebra(p, q)
        n = p + q
        assert killing_form(algebra).gram == trace_form(algebra).gram.scale(n - 2)


def test_trace_form_so3(so3_rotations):
    assert trace_form(so3_rotations).gram == Matrix.identity(3).scale(-2)


def test_theta_identity_on_compact(so3_rotations):
    assert theta_involution(so3_rotations) == Matrix.identity(3)


def test_theta_so21_fixes_rotation_negates_boosts(so21):
    assert theta_involution(so21) == Matrix.diagonal([1, -1, -1])


def test_theta_squares_to_identity(so31):
    theta = theta_involution(so31)
    assert mat_mul(theta, theta) == Matrix.identity(so31.dim)


def test_theta_is_automorphism(so31):
    theta = theta_involution(so31)
    d = so31.dim
    for i in range(d):
        for j in range(i + 1, d):
            lhs = so31.bracket_coeffs(theta.column_list(i), theta.column_list(j))
            rhs = [rat(0)] * d
            for k, v in so31.structure_entry(i, j).items():
                for r in range(d):
                    rhs[r] += v * theta[r, k]
            assert lhs == rhs


def test_theta_not_stable():
    nil = LieAlgebra.from_matrices([unit_matrix(0, 1, 2)])
    with pytest.raises(NotStableError):
        theta_involution(nil)


def test_is_semisimple(so31):
    assert is_semisimple(so31)
    assert not is_semisimple(so_pq_algebra(1, 1))
    assert not is_semisimple(deformed_algebra(2, 1, 0).algebra)


def test_centralizer_of_whole_simple_algebra(so3_rotations):
    assert centralizer(so3_rotations, Subspace.full(3)).dim == 0


def test_centralizer_of_abelian_is_everything():
    algebra = LieAlgebra.from_matrices([Matrix.diagonal([1, 0]), Matrix.diagonal([0, 1])])
    got = centralizer(algebra, Subspace.from_vectors(2, [[1, 0]]))
    assert got == Subspace.full(2)


def test_centralizer_of_embedded_so_pq_is_trivial():
    for (p, q, c) in [(2, 1, 1), (3, 1, -1), (2, 2, 2)]:
        dalg = deformed_algebra(p, q, rat(c))
        assert centralizer(dalg.algebra, dalg.so_block_subspace()).dim == 0


def test_closure_trivial_cases(so3_rotations):
    full = Subspace.full(3)
    assert subalgebra_closure(so3_rotations, full) == full
    assert subalgebra_closure(so3_rotations, Subspace.zero(3)).dim == 0


def test_closure_two_rotations_generate(so3_rotations):
    gens = Subspace.from_vectors(3, [[1, 0, 0], [0, 1, 0]])
    assert subalgebra_closure(so3_rotations, gens) == Subspace.full(3)


def test_closure_monotone_idempotent(so22):
    small = Subspace.from_vectors(6, [[1, 0, 0, 0, 0, 0]])
    bigger = Subspace.from_vectors(6, [[1, 0, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0]])
    c_small = subalgebra_closure(so22, small)
    c_big = subalgebra_closure(so22, bigger)
    assert c_big.contains_subspace(c_small)
    assert subalgebra_closure(so22, c_small) == c_small


def test_cartan_line_is_maximal_in_so3(so3_rotations):
    maximal, witness = is_maximal_subalgebra(
        so3_rotations, Subspace.from_vectors(3, [[1, 0, 0]])
    )
    assert maximal and witness is None


def test_embedded_so21_maximal_in_deformed():
    dalg = deformed_algebra(2, 1, 1)
    maximal, witness = is_maximal_subalgebra(dalg.algebra, dalg.so_block_subspace())
    assert maximal and witness is None


def test_ideal_of_so22_not_maximal(so22):
    verdict = is_irreducible(adjoint_rep(so22))
    assert verdict.status == "REDUCIBLE"
    ideal = verdict.witness
    assert ideal.dim == 3
    assert is_subalgebra(so22, ideal)
    maximal, witness = is_maximal_subalgebra(so22, ideal)
    assert not maximal
    assert witness is not None
    assert ideal.dim < witness.dim < so22.dim
    assert witness.contains_subspace(ideal)


def test_maximality_contract_errors(so21):
    not_subalgebra = Subspace.from_vectors(3, [[0, 1, 0]])  # single boost: ok, 1-dim is closed
    with pytest.raises(ContractError):
        is_maximal_subalgebra(so21, Subspace.full(3))  # not proper
    crooked = Subspace.from_vectors(6, [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0]])
    so31 = so_pq_algebra(3, 1)
    if not is_subalgebra(so31, crooked):
        with pytest.raises(ContractError):
            is_maximal_subalgebra(so31, crooked)


def test_maximal_implies_centralizer_inside(so21):
    for (p, q, c) in [(2, 1, 1), (2, 2, -1)]:
        dalg = deformed_algebra(p, q, rat(c))
        sub = dalg.so_block_subspace()
        maximal, _ = is_maximal_subalgebra(dalg.algebra, sub)
        assert maximal
        cent = centralizer(dalg.algebra, sub)
        assert all(sub.contains(row) for row in cent.basis_rows())


def test_orthogonal_complement_trivial(so31):
    beta = trace_form(so31)
    assert orthogonal_complement(beta, Subspace.full(6)).dim == 0
    assert orthogonal_complement(beta, Subspace.zero(6)) == Subspace.full(6)


def test_beta_complement_of_so21_in_so31(so31):
    coord = so31.coordinatizer()
    # so(2,1) stabilizes the positive coordinate e_2 inside R^{3,1}, so its
    # (+,+,-) coordinates map to indices (0, 1, 3)
    place = {0: 0, 1: 1, 2: 3}
    embedded = []
    for b in so_pq_algebra(2, 1).basis:
        big = Matrix.zeros(4, 4)
        for i in range(3):
            for j in range(3):
                big.entries[place[i] * 4 + place[j]] = b[i, j]
        embedded.append(coord.express(big))
    assert all(v is not None for v in embedded)
    sub = Subspace.from_vectors(6, embedded)
    complement = orthogonal_complement(trace_form(so31), sub)
    assert complement.dim == 3


@given(coeff3, coeff3, coeff3)
@settings(max_examples=40, deadline=None)
def test_jacobi_on_random_vectors(x, y, z):
    algebra = so_pq_algebra(2, 2)
    xyz = bracket(algebra, bracket(algebra, x, y), z)
    yzx = bracket(algebra, bracket(algebra, y, z), x)
    zxy = bracket(algebra, bracket(algebra, z, x), y)
    assert [a + b + c for a, b, c in zip(xyz, yzx, zxy)] == [rat(0)] * 6


def test_killing_ad_invariance(so31):
    gram = killing_form(so31)
    d = so31.dim
    for i in range(d):
        ei = [rat(0)] * d
        ei[i] = rat(1)
        for j in range(d):
            ej = [rat(0)] * d
            ej[j] = rat(1)
            for k in range(d):
                ek = [rat(0)] * d
                ek[k] = rat(1)
                lhs = gram.evaluate(so31.bracket_coeffs(ei, ej), ek)
                rhs = -gram.evaluate(ej, so31.bracket_coeffs(ei, ek))
                assert lhs == rhs


def test_trace_form_associative(so21):
    beta = trace_form(so21)
    d = so21.dim
    units = [[rat(1) if r == i else rat(0) for r in range(d)] for i in range(d)]
    for x in units:
        for y in units:
            for z in units:
                assert beta.evaluate(so21.bracket_coeffs(x, y), z) == beta.evaluate(
                    x, so21.bracket_coeffs(y, z)
                )


def test_json_round_trip(so21):
    data = so21.to_json_dict()
    again = LieAlgebra.from_json_dict(data)
    assert again.structure == so21.structure
    assert again.to_json() == so21.to_json()


def test_json_abstract_round_trip():
    dalg = deformed_algebra(2, 1, rat("1/2"))
    data = dalg.algebra.to_json_dict()
    again = LieAlgebra.from_json_dict(data)
    assert again.structure == dalg.algebra.structure


def test_dim_zero_algebra():
    empty = LieAlgebra.from_structure(0, [])
    assert empty.dim == 0
    assert killing_form(empty).gram.rows == 0
    matrix_empty = LieAlgebra.from_matrices([])
    assert trace_form(matrix_empty).gram.rows == 0
