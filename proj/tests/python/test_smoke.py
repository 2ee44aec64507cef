"""End-to-end smoke tests of the python bindings.

The C++ test suite carries the numerical weight; these exercise the numpy
boundary and one representative call into each module: verdicts, rigidity,
algebras, constructions, normal forms, steering, problem files, errors and
seeded determinism.
"""

import json

import numpy as np
import pytest

import zuslab as zl


def test_catalog_and_zus_verdicts():
    bell = zl.catalog.bell()
    mix = zl.catalog.mix()
    s1 = zl.catalog.s1()

    bell_verdict = zl.is_common_zus(zl.LambdaMap(bell), s1)
    assert bell_verdict.passed
    assert bell_verdict.worst_overlap < 1e-12

    mix_verdict = zl.is_common_zus(zl.LambdaMap(mix), s1)
    assert not mix_verdict.passed
    per_pvm = {v.pvm_name: v for v in mix_verdict.per_pvm}
    assert per_pvm["Z"].passed
    assert not per_pvm["X"].passed
    assert per_pvm["X"].worst_overlap == pytest.approx(1.0, abs=1e-12)


def test_lambda_map_numpy_boundary():
    bell = zl.catalog.bell()
    lam = zl.LambdaMap(bell)

    # Λ(I) = ρ_B, and the Bell conditionals of Z are the basis projections / 2.
    rho_b = lam.apply(np.eye(2, dtype=complex))
    assert np.allclose(rho_b, lam.rho_b)
    assert np.allclose(rho_b, np.eye(2) / 2)

    cond = zl.conditional_operators(lam, zl.catalog.z_basis())
    assert cond.labels == ["0", "1"]
    assert np.allclose(cond.operators[0], np.diag([0.5, 0.0]))
    assert np.allclose(cond.operators[1], np.diag([0.0, 0.5]))
    assert zl.normalized_overlap(cond.operators[0], cond.operators[1]) < 1e-12

    rho_a = zl.partial_trace(bell.rho, 2, 2, zl.Subsystem.B)
    assert np.allclose(rho_a, np.eye(2) / 2)


def test_rigidity_on_bell():
    report = zl.verify_rigidity(zl.catalog.bell(), zl.catalog.s1())
    assert report.hypotheses_hold()
    assert not report.theorem_violation
    assert report.conclusions.kraus_rank == 1
    assert report.conclusions.purity == pytest.approx(1.0, abs=1e-12)
    assert report.conclusions.is_max_entangled
    assert report.conclusions.schmidt == pytest.approx([0.5, 0.5], abs=1e-12)


def test_algebra_operations():
    s1 = zl.catalog.s1()
    generators = [p for pvm in s1.pvms for p in pvm.projections]
    alg = zl.generate_algebra(generators, 2)
    assert alg.dim == 4  # Z and X projections generate all of M_2

    full = zl.full_algebra(3)
    assert zl.commutant(full).dim == 1
    assert zl.center(full).dim == 1

    ws = zl.make_structure([(2, 2), (1, 1)], np.eye(5, dtype=complex))
    alg5 = zl.algebra_from_structure(ws)
    assert alg5.dim == 5  # 2^2 + 1^2
    redone = zl.wedderburn_decompose(alg5)
    assert sorted((b.n, b.m) for b in redone.blocks) == [(1, 1), (2, 2)]
    assert zl.wedderburn_defect(alg5, redone) < 1e-9


def test_multiplicative_domain_of_pinching():
    # The diagonal pinching on M_2, recorded from a python callable; its
    # multiplicative domain is exactly the diagonal algebra.
    pinch = zl.MatrixMap.sample(2, lambda x: np.diag(np.diag(x)).astype(complex))
    md = zl.md_algebra(pinch)
    assert md.dim == 2
    assert zl.md_member(pinch, np.diag([1.0 + 0j, 2.0]))
    assert not zl.md_member(pinch, np.array([[0, 1], [1, 0]], dtype=complex))


def test_proper_subalgebra_construction():
    ws = zl.make_structure([(2, 2)], np.eye(4, dtype=complex))
    recipe = zl.ProperSubalgebraRecipe(ws)
    state = zl.proper_subalgebra_zus(recipe)

    assert zl.purity(state) == pytest.approx(1.0, abs=1e-12)
    report = zl.a_zus_check(zl.LambdaMap(state), zl.algebra_from_structure(ws))
    assert report.is_azus
    # Zero-uncertainty for the whole subalgebra, yet not maximally entangled.
    assert zl.maximally_mixed_defect(state) > 0.1
    assert np.allclose(zl.reduced_a(state), zl.proper_subalgebra_rho_a(recipe))


def test_full_algebra_normal_form():
    sigma = zl.random_density(3, 2, zl.Prng(11))
    state = zl.larger_memory_zus(2, sigma)
    form = zl.full_algebra_form(zl.LambdaMap(state))

    assert form.defect < 1e-8
    assert np.allclose(form.t @ form.t.conj().T, np.eye(form.t.shape[0]))
    # σ comes back compressed to its support (rank 2 here), spectrum intact.
    got = np.sort(np.linalg.eigvalsh(form.sigma))
    want = np.sort(np.linalg.eigvalsh(sigma))[-form.sigma.shape[0]:]
    assert form.sigma.shape == (2, 2)
    assert np.allclose(got, want, atol=1e-8)


def test_normal_form_blocks():
    state = zl.catalog.bell()
    nf = zl.compute_normal_form(zl.LambdaMap(state), zl.full_algebra(2))
    assert len(nf.blocks) == 1
    assert nf.blocks[0].n == 2
    assert nf.blocks[0].k == 1
    assert nf.reconstruction_defect < 1e-9
    assert nf.block_structure_defect < 1e-9


def test_steering_decoder():
    asm = zl.make_assemblage(zl.catalog.qutrit_phi3(), zl.catalog.qutrit_family())
    assert zl.check_assemblage(asm).ok()
    assert zl.perfect_steering_check(asm).passed

    dec = zl.bob_decoder(asm, "P")
    ranks = [round(p.trace().real) for p in dec.pvm.projections]
    assert ranks == [2, 1]
    assert dec.decoding_defect < 1e-9


def test_problem_file_round_trip(tmp_path):
    p = zl.ProblemFile()
    p.state = zl.catalog.mix()
    p.families = [("S1", zl.catalog.s1()), ("S2", zl.catalog.s2())]
    p.seed = 424242
    p.metadata = json.dumps({"note": "smoke"})

    path = str(tmp_path / "problem.json")
    zl.save_problem(p, path)
    q = zl.load_problem(path)

    assert q.version == zl.SCHEMA_VERSION
    assert q.seed == 424242
    assert json.loads(q.metadata) == {"note": "smoke"}
    assert [name for name, _ in q.families] == ["S1", "S2"]
    assert np.allclose(q.state.rho, p.state.rho)
    found = q.find_family("S1")
    assert found is not None and len(found) == 2
    assert q.find_family("nope") is None


def test_error_types():
    with pytest.raises(zl.ValidationError):
        zl.BipartiteState(np.eye(4, dtype=complex), 2, 2)  # trace 4
    with pytest.raises(zl.SchemaError):
        zl.load_problem("/nonexistent/zuslab.json")
    assert issubclass(zl.DimensionError, zl.Error)
    assert issubclass(zl.ValidationError, zl.Error)


def test_seeded_determinism():
    u1 = zl.haar_unitary(4, zl.Prng(99))
    u2 = zl.haar_unitary(4, zl.Prng(99))
    assert np.array_equal(u1, u2)
    assert np.allclose(u1 @ u1.conj().T, np.eye(4), atol=1e-12)

    ws = zl.make_structure([(2, 2)], np.eye(4, dtype=complex))
    pvms1 = zl.sample_pvms_in_algebra(ws, 4, zl.DEFAULT_SEED)
    pvms2 = zl.sample_pvms_in_algebra(ws, 4, zl.DEFAULT_SEED)
    assert len(pvms1) == 4
    for a, b in zip(pvms1, pvms2):
        for pa, pb in zip(a.projections, b.projections):
            assert np.array_equal(pa, pb)
