"""Command-line surface: constructions, verification suites, irrep tables.

Exit codes: 0 pass, 1 verification failure, 2 usage/domain error.
Reports are canonical JSON (sorted keys, checks ordered by name and
parameters) so two runs differ only in elapsed_ms.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from . import __version__
from .errors import ContractError, LiepqError, UnknownSmallestModuleError
from .exact_linalg import (
    Matrix,
    Subspace,
    inertia_of_diagonalizable_form,
    rat,
    rational_sqrt,
    rref,
)
from .lie_core import (
    LieAlgebra,
    canonical_json,
    centralizer,
    is_maximal_subalgebra,
    orthogonal_complement,
)
from .rep_theory import (
    Representation,
    adjoint_rep,
    character_discrimination_test,
    constrained_form_uniqueness,
    hom_space,
    hom_space_dense,
    invariant_skew_forms,
    invariant_symmetric_forms,
    is_irreducible,
    restrict,
    wedge_square_rep,
)
from .so_pq import (
    SO31_SL2C,
    SO32_SP4R,
    SO33_SL4R,
    Signature,
    deformed_algebra,
    dimension_bound,
    embedding_iso,
    exceptional_iso,
    half_spin_reps,
    ipq,
    ipq_c,
    sl2c_compact_form_vectors,
    so_of_form,
    so_pq_algebra,
    sqrt_conjugation,
    standard_rep,
    t_c,
)
from .weyl_enum import (
    enumerate_up_to_dim,
    no_simple_complex_algebra_of_dim,
    root_system,
)

SMALL_EXCLUSION_REASON = (
    "so(2,1) x so(2,1) exclusion: the maximality and deformed-bracket "
    "statements require p, q >= 1 and n = p + q >= 3"
)


# -- individual checks --------------------------------------------------
# Every check takes primitive parameters and returns a result dict with
# at least {"status": "pass" | "fail" | "skipped"}.


def _pass(**extra):
    out = {"status": "pass"}
    out.update(extra)
    return out


def _fail(**extra):
    out = {"status": "fail"}
    out.update(extra)
    return out


def _skip(reason):
    return {"status": "skipped", "reason": reason}


def _matrix_payload(m: Matrix):
    return [[str(x) for x in m.row_list(i)] for i in range(m.rows)]


def _subspace_payload(s: Subspace):
    return [[str(x) for x in row] for row in s.basis_rows()]


def check_defining_property(p, q):
    algebra = so_pq_algebra(p, q)
    form = ipq(p, q)
    for b in algebra.basis:
        if not (b.transpose() @ form + form @ b).is_zero():
            return _fail(witness=_matrix_payload(b))
    return _pass(dim=algebra.dim)


def check_theta_automorphism(p, q):
    algebra = so_pq_algebra(p, q)
    theta = algebra.theta_involution()
    d = algebra.dim
    if theta @ theta != Matrix.identity(d):
        return _fail(reason="theta^2 != id")
    for i in range(d):
        ti = theta.column_list(i)
        for j in range(i + 1, d):
            tj = theta.column_list(j)
            lhs = algebra.bracket_coeffs(ti, tj)
            rhs_entry = algebra.structure_entry(i, j)
            rhs = [rat(0)] * d
            for k, v in rhs_entry.items():
                for r in range(d):
                    rhs[r] += v * theta[r, k]
            if lhs != rhs:
                return _fail(reason=f"theta not an automorphism on pair ({i},{j})")
    return _pass()


def check_killing_vs_trace(p, q):
    algebra = so_pq_algebra(p, q)
    n = p + q
    killing = algebra.killing_form().gram
    trace = algebra.trace_form().gram
    if killing != trace.scale(n - 2):
        return _fail(reason="K != (n-2).Tr")
    return _pass(constant=str(n - 2))


def check_standard_form_unique(p, q):
    rep = standard_rep(p, q)
    forms = invariant_symmetric_forms(rep)
    if len(forms) != 1:
        return _fail(reason=f"expected dim 1, got {len(forms)}")
    lead = next(x for x in forms[0].entries if x)
    if forms[0] != ipq(p, q).scale(lead):
        return _fail(reason="form is not a multiple of I_{p,q}")
    return _pass()


def check_hom_wedge_adjoint(p, q):
    n = p + q
    algebra = so_pq_algebra(p, q)
    std = Representation(algebra, n, list(algebra.basis))
    wedge = wedge_square_rep(std)
    adjoint = adjoint_rep(algebra)
    homs = hom_space(wedge, adjoint)
    expected = 2 if n == 4 else 1
    detail = {"dim": len(homs), "expected": expected}
    m = algebra.dim
    if m * m <= 256:
        dense = hom_space_dense(wedge, adjoint)
        if [h.entries for h in dense] != [h.entries for h in homs]:
            return _fail(reason="dense cross-check disagrees", **detail)
        detail["dense_checked"] = True
    tc = t_c(p, q, 1)
    rows = [list(h.entries) for h in homs]
    before = len(rref([r[:] for r in rows])[0])
    rows.append(list(tc.entries))
    after = len(rref(rows)[0])
    if after != before:
        return _fail(reason="t_c(1) is not in the Hom span", **detail)
    if len(homs) != expected:
        return _fail(**detail)
    return _pass(**detail)


def check_smallest_module_enum(p, q):
    n = p + q
    if n < 4:
        return _skip("complexified so(3,C) has rank 1; table starts at rank 2")
    if n == 4:
        return _skip("D2 is not simple (so(2,2) degeneracy); enumeration not claimed")
    if n % 2:
        rs = root_system("B", n // 2)
    else:
        rs = root_system("D", n // 2)
    table = enumerate_up_to_dim(rs, n)
    dims = sorted(d for _, d in table)
    expected = {
        5: [4, 5],
        6: [4, 4, 6],
        7: [7],
        8: [8, 8, 8],
    }.get(n, [n])
    if dims != expected:
        return _fail(found=dims, expected=expected)
    return _pass(found=dims)


def check_deformed_jacobi(p, q, c):
    n = p + q
    if n < 3:
        return _skip(SMALL_EXCLUSION_REASON)
    deformed_algebra(p, q, rat(c))  # constructor validates Jacobi exactly
    return _pass(dim=n * (n + 1) // 2)


def check_deformed_radical(p, q, c):
    n = p + q
    if n < 3:
        return _skip(SMALL_EXCLUSION_REASON)
    dalg = deformed_algebra(p, q, rat(c))
    semisimple = dalg.algebra.is_semisimple()
    expected = rat(c) != 0
    if semisimple != expected:
        return _fail(found=semisimple, expected=expected)
    return _pass(semisimple=semisimple)


def check_tc_equivariance(p, q, c):
    n = p + q
    if n < 3:
        return _skip(SMALL_EXCLUSION_REASON)
    algebra = so_pq_algebra(p, q)
    std = Representation(algebra, n, list(algebra.basis))
    wedge = wedge_square_rep(std)
    adjoint = adjoint_rep(algebra)
    tc = t_c(p, q, rat(c))
    for x in range(algebra.dim):
        if tc @ wedge.actions[x] != adjoint.actions[x] @ tc:
            return _fail(reason=f"T_c not equivariant at basis index {x}")
    return _pass()


def check_tc_iso_rank(p, q, c):
    n = p + q
    if n < 3:
        return _skip(SMALL_EXCLUSION_REASON)
    tc = t_c(p, q, rat(c))
    reduced, pivots = rref(tc.to_rows())
    expected = n * (n - 1) // 2 if rat(c) != 0 else 0
    if len(pivots) != expected:
        return _fail(found=len(pivots), expected=expected)
    return _pass(rank=len(pivots))


def check_embedding(p, q, c):
    n = p + q
    c = rat(c)
    if n < 3:
        return _skip(SMALL_EXCLUSION_REASON)
    if c == 0:
        return _skip("embedding_iso requires c != 0 (c = 0 is the semidirect product)")
    dalg = deformed_algebra(p, q, c)
    emb = embedding_iso(p, q, c)
    form = emb.target_form
    for im in emb.images:
        if not (im.transpose() @ form + form @ im).is_zero():
            return _fail(reason="image leaves so(R^{n+1}, I_{p,q}(c))")
    d = dalg.dim
    for i in range(d):
        for j in range(i + 1, d):
            lhs = emb.images[i] @ emb.images[j] - emb.images[j] @ emb.images[i]
            rhs = Matrix.zeros(n + 1, n + 1)
            for k, v in dalg.algebra.structure_entry(i, j).items():
                rhs = rhs + emb.images[k].scale(v)
            if lhs != rhs:
                return _fail(reason=f"bracket not intertwined on pair ({i},{j})")
    rows = [list(im.entries) for im in emb.images]
    if len(rref(rows)[1]) != d:
        return _fail(reason="embedding is not injective")
    return _pass(dim=d)


def check_target_inertia(p, q, c):
    n = p + q
    c = rat(c)
    if n < 3:
        return _skip(SMALL_EXCLUSION_REASON)
    if c == 0:
        return _skip("I_{p,q}(c) needs c != 0")
    found = inertia_of_diagonalizable_form(ipq_c(p, q, c))
    expected = (p + 1, q, 0) if c > 0 else (p, q + 1, 0)
    if found != expected:
        return _fail(found=list(found), expected=list(expected))
    return _pass(inertia=list(found))


def check_sqrt_conjugation(p, q, c):
    n = p + q
    c = rat(c)
    if n < 3:
        return _skip(SMALL_EXCLUSION_REASON)
    if c == 0:
        return _skip("needs c != 0")
    if rational_sqrt(abs(c)) is None:
        return _skip("|c| is not a perfect rational square; certified via inertia instead")
    s = sqrt_conjugation(p, q, c)
    sinv = Matrix.diagonal([1 / s[i, i] for i in range(n + 1)])
    target = ipq(p + 1, q) if c > 0 else ipq(p, q + 1)
    emb = embedding_iso(p, q, c)
    for im in emb.images:
        conj = s @ im @ sinv
        if not (conj.transpose() @ target + target @ conj).is_zero():
            return _fail(reason="sqrt conjugation left the classical so(p',q')")
    return _pass()


def check_maximality(p, q, c):
    n = p + q
    if n < 3:
        return _skip(SMALL_EXCLUSION_REASON)
    dalg = deformed_algebra(p, q, rat(c))
    maximal, witness = is_maximal_subalgebra(dalg.algebra, dalg.so_block_subspace())
    if not maximal:
        return _fail(witness=_subspace_payload(witness))
    return _pass()


def check_centralizer(p, q, c):
    n = p + q
    if n < 3:
        return _skip(SMALL_EXCLUSION_REASON)
    dalg = deformed_algebra(p, q, rat(c))
    cent = centralizer(dalg.algebra, dalg.so_block_subspace())
    if cent.dim != 0:
        return _fail(witness=_subspace_payload(cent))
    return _pass()


def check_killing_blocks(p, q, c):
    """Killing form of the deformed algebra restricted to blocks: zero on
    the mixed block, a1 x Killing(so(p,q)) on the so block, a2 x <.,.>_{p,q}
    on the vector block, with a1, a2 nonzero."""
    n = p + q
    c = rat(c)
    if n < 3:
        return _skip(SMALL_EXCLUSION_REASON)
    if c == 0:
        return _skip("block proportionality with nonzero constants needs c != 0")
    dalg = deformed_algebra(p, q, c)
    gram = dalg.algebra.killing_form().gram
    so = so_pq_algebra(p, q)
    m = so.dim
    k_so = so.killing_form().gram
    for i in range(m):
        for j in range(m, m + n):
            if gram[i, j] != 0:
                return _fail(reason="mixed block is not zero")
    a1 = None
    for i in range(m):
        for j in range(m):
            lhs, rhs = gram[i, j], k_so[i, j]
            if rhs == 0:
                if lhs != 0:
                    return _fail(reason="so block not proportional to Killing(so(p,q))")
                continue
            ratio = lhs / rhs
            if a1 is None:
                a1 = ratio
            elif a1 != ratio:
                return _fail(reason="so block proportionality constant not unique")
    eta = ipq(p, q)
    a2 = None
    for i in range(n):
        for j in range(n):
            lhs, rhs = gram[m + i, m + j], eta[i, j]
            if rhs == 0:
                if lhs != 0:
                    return _fail(reason="vector block not proportional to <.,.>_{p,q}")
                continue
            ratio = lhs / rhs
            if a2 is None:
                a2 = ratio
            elif a2 != ratio:
                return _fail(reason="vector block proportionality constant not unique")
    if not a1 or not a2:
        return _fail(reason="a proportionality constant vanished")
    return _pass(a1=str(a1), a2=str(a2))


def check_complement_irreducible(p, q, c):
    """The trace-form orthogonal complement of the embedded so(p,q) inside
    so(R^{n+1}, I_{p,q}(c)) is n-dimensional, invariant and irreducible."""
    n = p + q
    c = rat(c)
    if n < 3:
        return _skip(SMALL_EXCLUSION_REASON)
    if c == 0:
        return _skip("the matrix-side pipeline needs c != 0")
    emb = embedding_iso(p, q, c)
    target = so_of_form(emb.target_form)
    coord = target.coordinatizer()
    m = n * (n - 1) // 2
    embedded = [coord.express(im) for im in emb.images[:m]]
    if any(v is None for v in embedded):
        return _fail(reason="embedded so(p,q) not inside so_of_form basis span")
    subalg = Subspace.from_vectors(target.dim, embedded)
    beta = target.trace_form()
    complement = orthogonal_complement(beta, subalg)
    if complement.dim != n:
        return _fail(reason=f"complement has dim {complement.dim}, expected {n}")
    h_alg = LieAlgebra.from_matrices(emb.images[:m], validate=False)
    actions = [target.ad_matrix(v) for v in embedded]
    try:
        module = restrict(Representation(h_alg, target.dim, actions), complement)
    except ContractError:
        return _fail(reason="complement is not invariant")
    verdict = is_irreducible(module)
    if verdict.status != "IRREDUCIBLE":
        return _fail(reason=f"verdict {verdict.status}", endo_dim=verdict.endo_dim)
    return _pass(dim=complement.dim)


def check_character_identity(p, q, mu):
    if (p, q) != (3, 1):
        return _skip("the boost character test is specific to so(3,1)")
    report = character_discrimination_test(rat(mu))
    if report.residual_standard != 0:
        return _fail(reason="identity fails for V = R^{3,1}")
    if report.residual_complex == 0:
        return _fail(reason="identity unexpectedly holds for V = C^2 realified")
    return _pass(
        residual_standard=str(report.residual_standard),
        residual_complex=str(report.residual_complex),
    )


def check_half_spin(p, q):
    if (p, q) != (4, 4):
        return _skip("half-spin construction exists only at signature (4,4)")
    hs = half_spin_reps(4, 4)
    eta = ipq(4, 4)
    ident = Matrix.identity(16)
    for i in range(8):
        for j in range(8):
            anti = hs.gammas[i] @ hs.gammas[j] + hs.gammas[j] @ hs.gammas[i]
            if anti != ident.scale(2 * eta[i, j]):
                return _fail(reason=f"Clifford relation fails at ({i},{j})")
    if hs.chirality @ hs.chirality != ident:
        return _fail(reason="chirality does not square to the identity")
    for a in hs.spinor_rep.actions:
        if not (hs.chirality @ a - a @ hs.chirality).is_zero():
            return _fail(reason="chirality does not commute with the embedded algebra")
    if hs.plus_space.dim != 8 or hs.minus_space.dim != 8:
        return _fail(reason="chiral split is not 8 + 8")
    for half in (hs.c_plus, hs.c_minus):
        half.validate()
        verdict = is_irreducible(half)
        if verdict.status != "IRREDUCIBLE":
            return _fail(reason=f"half-spin verdict {verdict.status}")
        if len(invariant_symmetric_forms(half)) != 1:
            return _fail(reason="half-spin symmetric form space is not 1-dimensional")
        if len(invariant_skew_forms(half)) != 0:
            return _fail(reason="half-spin skew form space is not trivial")
    return _pass()


def check_exceptional_iso(p, q):
    name = {(3, 1): SO31_SL2C, (3, 2): SO32_SP4R, (3, 3): SO33_SL4R}.get((p, q))
    if name is None:
        return _skip("no exceptional small-module isomorphism at this signature")
    iso = exceptional_iso(name)
    d = iso.small_algebra.dim
    if len(rref(iso.iso_coeffs.to_rows())[1]) != d or d != iso.target.dim:
        return _fail(reason="intertwiner is not bijective")
    m = iso.iso_coeffs
    for i in range(d):
        xi = m.column_list(i)
        for j in range(i + 1, d):
            xj = m.column_list(j)
            rhs = iso.target.bracket_coeffs(xi, xj)
            lhs = [rat(0)] * d
            for k, v in iso.small_algebra.structure_entry(i, j).items():
                for r in range(d):
                    lhs[r] += v * m[r, k]
            if lhs != rhs:
                return _fail(reason=f"brackets disagree on pair ({i},{j})")
    return _pass(iso=name, scale=str(iso.scale))


def check_su2_collapse(p, q):
    if (p, q) != (3, 1):
        return _skip("the su(2)-perpendicularity collapse lives on so(3,1)")
    iso = exceptional_iso(SO31_SL2C)
    adjoint = adjoint_rep(iso.small_algebra)
    forms = invariant_symmetric_forms(adjoint)
    if len(forms) != 2:
        return _fail(reason=f"adjoint form space has dim {len(forms)}, expected 2")
    compact = Subspace.from_vectors(6, sl2c_compact_form_vectors())
    verdict = constrained_form_uniqueness(adjoint, compact)
    if verdict.solution_dim != 1:
        return _fail(reason=f"constrained space has dim {verdict.solution_dim}")
    if verdict.killing_ratio is None or verdict.killing_ratio == 0:
        return _fail(reason="surviving form is not a nonzero multiple of the Killing form")
    return _pass(killing_ratio=str(verdict.killing_ratio))


def check_dimension_bound(p, q):
    try:
        bound = dimension_bound(p, q)
    except UnknownSmallestModuleError as exc:
        return _skip(str(exc))
    n = p + q
    expected_m = 3 if (p, q) == (2, 2) else n
    if bound.smallest_module != expected_m:
        return _fail(found=bound.smallest_module, expected=expected_m)
    if bound.dim_group != n * (n - 1) // 2 or bound.total != bound.dim_group + bound.smallest_module:
        return _fail(reason="bound arithmetic is inconsistent")
    return _pass(dim_group=bound.dim_group, m=bound.smallest_module, total=bound.total)


def check_simple_dim_scan(p, q):
    expectations = {
        5: [],
        18: [],
        10: ["B2", "C2"],
        36: ["B4", "C4"],
    }
    for d, expected in expectations.items():
        absent, candidates = no_simple_complex_algebra_of_dim(d)
        labels = sorted(f"{t}{r}" for t, r, _ in candidates if r is not None)
        labels += sorted(t for t, r, _ in candidates if r is None)
        if labels != expected or absent != (not expected):
            return _fail(dimension=d, found=labels, expected=expected)
    return _pass()


CHECKS = {
    "defining_property": (check_defining_property, False),
    "theta_automorphism": (check_theta_automorphism, False),
    "killing_vs_trace": (check_killing_vs_trace, False),
    "standard_form_unique": (check_standard_form_unique, False),
    "hom_wedge_adjoint": (check_hom_wedge_adjoint, False),
    "smallest_module_enum": (check_smallest_module_enum, False),
    "deformed_jacobi": (check_deformed_jacobi, True),
    "deformed_radical": (check_deformed_radical, True),
    "tc_equivariance": (check_tc_equivariance, True),
    "tc_iso_rank": (check_tc_iso_rank, True),
    "embedding_iso": (check_embedding, True),
    "target_inertia": (check_target_inertia, True),
    "sqrt_conjugation": (check_sqrt_conjugation, True),
    "maximality": (check_maximality, True),
    "centralizer_trivial": (check_centralizer, True),
    "killing_blocks": (check_killing_blocks, True),
    "complement_irreducible": (check_complement_irreducible, True),
}

SECTION2_CHECKS = {
    "character_identity": (check_character_identity, "mu"),
    "half_spin": (check_half_spin, None),
    "exceptional_iso": (check_exceptional_iso, None),
    "su2_perp_collapse": (check_su2_collapse, None),
    "dimension_bound": (check_dimension_bound, None),
    "simple_dim_scan": (check_simple_dim_scan, None),
}

APPENDIX_SIGNATURE_CHECKS = [
    "defining_property",
    "theta_automorphism",
    "killing_vs_trace",
    "standard_form_unique",
    "hom_wedge_adjoint",
    "smallest_module_enum",
]

APPENDIX_C_CHECKS = [
    "deformed_jacobi",
    "deformed_radical",
    "tc_equivariance",
    "tc_iso_rank",
    "embedding_iso",
    "target_inertia",
    "sqrt_conjugation",
    "maximality",
    "centralizer_trivial",
    "killing_blocks",
    "complement_irreducible",
]

DEFAULT_C_LIST = ["-2", "-1", "-1/2", "0", "1/2", "1", "2"]
DEFAULT_MU_LIST = ["3/2", "2", "3"]


def build_suite(suite, p, q, c_list, mu_list):
    jobs = []
    if suite in ("appendix", "all"):
        for name in APPENDIX_SIGNATURE_CHECKS:
            jobs.append((name, {"p": p, "q": q}))
        for c in c_list:
            for name in APPENDIX_C_CHECKS:
                jobs.append((name, {"p": p, "q": q, "c": c}))
    if suite in ("section2", "all"):
        for mu in mu_list:
            jobs.append(("character_identity", {"p": p, "q": q, "mu": mu}))
        for name in ("half_spin", "exceptional_iso", "su2_perp_collapse",
                     "dimension_bound", "simple_dim_scan"):
            jobs.append((name, {"p": p, "q": q}))
    return jobs


def run_check(name, params):
    if name in CHECKS:
        fn, takes_c = CHECKS[name]
        args = (params["p"], params["q"], params["c"]) if takes_c else (params["p"], params["q"])
    else:
        fn, extra = SECTION2_CHECKS[name]
        args = (params["p"], params["q"], params["mu"]) if extra == "mu" else (params["p"], params["q"])
    start = time.perf_counter()
    try:
        result = fn(*args)
    except LiepqError as exc:
        result = _fail(reason=f"{type(exc).__name__}: {exc}")
    result["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
    return name, params, result


def _run_job(job):
    return run_check(*job)


def run_suite(suite, p, q, c_list, mu_list):
    jobs = build_suite(suite, p, q, c_list, mu_list)
    workers = int(os.environ.get("LIEPQ_THREADS", "1") or "1")
    if workers > 1 and len(jobs) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_job, jobs))
    else:
        results = [run_check(name, params) for name, params in jobs]
    checks = []
    for name, params, result in results:
        entry = {"name": name, "params": params}
        entry.update(result)
        checks.append(entry)
    checks.sort(key=lambda e: (e["name"], canonical_json(e["params"])))
    overall = "pass" if all(c["status"] != "fail" for c in checks) else "fail"
    return {
        "schema": "liepq-report/1",
        "tool_version": __version__,
        "parameters": {
            "suite": suite,
            "p": p,
            "q": q,
            "c_list": list(c_list),
            "mu_list": list(mu_list),
        },
        "checks": checks,
        "overall": overall,
    }


# -- argument handling --------------------------------------------------


def _rat_list(text):
    items = [t.strip() for t in text.split(",") if t.strip()]
    for t in items:
        rat(t)  # validates syntax; floats are rejected
    return items


def build_parser():
    parser = argparse.ArgumentParser(
        prog="liepq",
        description="Exact certificates for so(p,q) constructions and their "
        "representation-theoretic facts.",
    )
    parser.add_argument("--version", action="version", version=f"liepq {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser("construct", help="emit a (deformed) algebra as JSON")
    construct.add_argument("--p", type=int, required=True)
    construct.add_argument("--q", type=int, required=True)
    construct.add_argument("--c", type=str, default=None, help="rational 'a/b', nonzero optional")
    construct.add_argument("--format", choices=("json", "human"), default="json")

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("--suite", choices=("appendix", "section2", "all"), required=True)
    verify.add_argument("--p", type=int, required=True)
    verify.add_argument("--q", type=int, required=True)
    verify.add_argument("--c-list", type=str, default=",".join(DEFAULT_C_LIST))
    verify.add_argument("--mu-list", type=str, default=",".join(DEFAULT_MU_LIST))
    verify.add_argument("--format", choices=("json", "tsv", "human"), default="json")

    irreps = sub.add_parser("irreps", help="dominant weights up to a dimension bound")
    irreps.add_argument("--type", choices=("B", "D"), required=True)
    irreps.add_argument("--rank", type=int, required=True)
    irreps.add_argument("--max-dim", type=int, required=True)
    irreps.add_argument("--format", choices=("tsv", "json", "human"), default="tsv")

    bound = sub.add_parser("bound", help="dim G, m(so(p,q)) and their sum")
    bound.add_argument("--p", type=int, required=True)
    bound.add_argument("--q", type=int, required=True)
    bound.add_argument("--format", choices=("human", "json", "tsv"), default="human")
    return parser


def cmd_construct(args) -> int:
    signature = Signature(args.p, args.q)
    if args.c is not None:
        c = rat(args.c)
        if c == 0:
            raise ContractError("--c must be nonzero; omit it for plain so(p,q)")
        payload = deformed_algebra(args.p, args.q, c).to_json_dict()
    else:
        if signature.n < 2:
            raise ContractError("so(p,q) needs p + q >= 2")
        payload = so_pq_algebra(args.p, args.q).to_json_dict()
    if args.format == "human":
        kind = "deformed so(p,q) (+) R^{p,q}" if args.c is not None else "so(p,q)"
        print(f"{kind} with (p, q) = ({args.p}, {args.q}); dim = {payload['dim']}")
    else:
        print(canonical_json(payload))
    return 0


def cmd_verify(args) -> int:
    Signature(args.p, args.q)
    c_list = _rat_list(getattr(args, "c_list"))
    mu_list = _rat_list(getattr(args, "mu_list"))
    report = run_suite(args.suite, args.p, args.q, c_list, mu_list)
    if args.format == "human":
        for check in report["checks"]:
            line = f"[{check['status']:>7}] {check['name']} {canonical_json(check['params'])}"
            if check["status"] == "skipped":
                line += f"  ({check['reason']})"
            print(line)
        print(f"overall: {report['overall']}")
    elif args.format == "tsv":
        for check in report["checks"]:
            print(
                "\t".join(
                    [
                        check["name"],
                        canonical_json(check["params"]),
                        check["status"],
                        check.get("reason", ""),
                    ]
                )
            )
        print(f"# overall\t{report['overall']}")
    else:
        print(canonical_json(report))
    return 0 if report["overall"] == "pass" else 1


def cmd_irreps(args) -> int:
    rs = root_system(args.type, args.rank)
    if args.max_dim < 1:
        raise ContractError("--max-dim must be at least 1")
    table = enumerate_up_to_dim(rs, args.max_dim)
    rows = [
        (args.type, args.rank, " ".join(str(c) for c in weight.coords), dim)
        for weight, dim in table
    ]
    if args.format == "json":
        payload = {
            "type": args.type,
            "rank": args.rank,
            "max_dim": args.max_dim,
            "flag": rs.flag,
            "rows": [
                {"weight": row[2], "dim": row[3]} for row in rows
            ],
        }
        print(canonical_json(payload))
    elif args.format == "human":
        if rs.flag:
            print(f"NOTE: {rs.flag}")
        for row in rows:
            print(f"{row[0]}{row[1]}  weight ({row[2]})  dim {row[3]}")
        print(f"{len(rows)} weight(s) with dim <= {args.max_dim}")
    else:
        if rs.flag:
            print(f"# NOTE: {rs.flag}")
        for row in rows:
            print("\t".join(str(x) for x in row))
    return 0


def cmd_bound(args) -> int:
    bound = dimension_bound(args.p, args.q)
    note = None
    if (args.p, args.q) == (2, 2):
        note = "m(so(2,2)) = 3 via the so(2,1) factor acting on R^{2,1}"
    if args.format == "json":
        payload = {
            "p": args.p,
            "q": args.q,
            "dim_group": bound.dim_group,
            "m": bound.smallest_module,
            "total": bound.total,
        }
        if note:
            payload["note"] = note
        print(canonical_json(payload))
    elif args.format == "tsv":
        print(f"{args.p}\t{args.q}\t{bound.dim_group}\t{bound.smallest_module}\t{bound.total}")
        if note:
            print(f"# NOTE: {note}")
    else:
        print(
            f"dim G = {bound.dim_group}, m(so({args.p},{args.q})) = "
            f"{bound.smallest_module}, dim G + m = {bound.total}"
        )
        if note:
            print(f"NOTE: {note}")
    return 0


def _merge_list_flags(argv):
    """Join '--c-list -2,-1' into '--c-list=-2,-1' so leading minus signs in
    rational lists are not mistaken for option strings."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--c-list", "--mu-list") and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_merge_list_flags(list(argv)))
    handlers = {
        "construct": cmd_construct,
        "verify": cmd_verify,
        "irreps": cmd_irreps,
        "bound": cmd_bound,
    }
    try:
        return handlers[args.command](args)
    except (LiepqError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
