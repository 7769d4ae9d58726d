import json
import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

import frameness as fr


def dense_collective_ops(n_qubits):
    """Independent dense construction of Jx, Jy, Jz from Pauli kron products."""
    paulis = {
        "x": np.array([[0, 1], [1, 0]], dtype=complex) / 2,
        "y": np.array([[0, -1j], [1j, 0]], dtype=complex) / 2,
        "z": np.array([[1, 0], [0, -1]], dtype=complex) / 2,
    }
    out = {}
    dim = 2**n_qubits
    for axis, half in paulis.items():
        total = np.zeros((dim, dim), dtype=complex)
        for site in range(n_qubits):
            op = np.eye(1, dtype=complex)
            for k in range(n_qubits):
                op = np.kron(op, half if k == site else np.eye(2))
            total += op
        out[axis] = total
    return out


def test_z2_rep_is_valid():
    report = fr.validate_finite_rep(fr.z2_phase_flip_rep())
    assert report.ok


def test_broken_associativity_is_reported_with_a_triple():
    table = [[0, 1, 2], [1, 2, 0], [2, 0, 2]]  # tampered Z3 table
    rep = fr.FiniteGroupRep(table, [np.eye(2, dtype=complex)] * 3)
    report = fr.validate_finite_rep(rep)
    assoc = [i for i in report.issues if i.kind == "associativity"]
    assert assoc and "g" in assoc[0].detail


def test_non_unitary_element_is_flagged():
    rep = fr.FiniteGroupRep([[0, 1], [1, 0]], [np.eye(2), np.diag([1.0, 2.0])])
    report = fr.validate_finite_rep(rep)
    assert any(i.kind == "unitarity" for i in report.issues)


def test_homomorphism_violation_is_flagged():
    rep = fr.FiniteGroupRep([[0, 1], [1, 0]], [np.eye(2), np.diag([1.0, 1j])])
    report = fr.validate_finite_rep(rep)
    assert any(i.kind == "homomorphism" for i in report.issues)


def test_group_order_cap():
    with pytest.raises(fr.ResourceLimitError):
        fr.FiniteGroupRep(np.zeros((65, 65), dtype=int), [np.eye(2)] * 65)


def test_from_unitaries_requires_closure():
    theta = 0.3
    rot = np.array([[math.cos(theta), -math.sin(theta)], [math.sin(theta), math.cos(theta)]])
    with pytest.raises(fr.RepresentationError):
        fr.finite_group_from_unitaries([np.eye(2), rot])


def test_quaternion_rep_is_a_nonabelian_order_8_group():
    rep = fr.quaternion_rep()
    assert rep.order == 8
    assert fr.validate_finite_rep(rep).ok
    assert any(rep.table[i, j] != rep.table[j, i] for i in range(8) for j in range(8))


def test_cyclic_phase_rep_is_valid():
    rep = fr.cyclic_phase_rep([0, 1, 2, 3], 4)
    assert fr.validate_finite_rep(rep).ok


def test_charge_sector_projectors():
    qubit = fr.ChargeGrading([0, 1])
    p0, p1 = qubit.sector_projectors()
    assert_allclose(p0, np.diag([1.0, 0.0]))
    assert_allclose(p1, np.diag([0.0, 1.0]))

    rank2 = fr.ChargeGrading([0, 1, 1])
    projs = rank2.sector_projectors()
    assert np.trace(projs[1]) == pytest.approx(2.0)

    for projs, grading in ((projs, rank2),):
        total = sum(projs)
        assert_allclose(total, np.eye(grading.dim))
        for p in projs:
            assert_allclose(p @ p, p, atol=1e-15)


@pytest.mark.parametrize("n_qubits", [2, 3, 4])
def test_hamming_grading_ranks_match_counting(n_qubits):
    grading = fr.hamming_weight_grading(n_qubits)
    projs = grading.sector_projectors()
    # counting oracle over basis strings
    counts = [sum(1 for b in range(2**n_qubits) if bin(b).count("1") == w)
              for w in range(n_qubits + 1)]
    assert [int(round(np.trace(p).real)) for p in projs] == counts
    assert counts == [math.comb(n_qubits, w) for w in range(n_qubits + 1)]


def test_multiplicity_dimension_closed_form():
    # independent evaluation of the closed form
    def oracle(n, j):
        return math.comb(n, n // 2 - j) * (2 * j + 1) // (n // 2 + j + 1)

    assert fr.multiplicity_dimension(4, 1) == oracle(4, 1) == 3
    assert fr.multiplicity_dimension(2, 1) == oracle(2, 1) == 1
    for n in (2, 4, 6, 8):
        assert fr.multiplicity_dimension(n, n // 2) == 1
    with pytest.raises(ValueError):
        fr.multiplicity_dimension(4, 3)
    with pytest.raises(ValueError):
        fr.multiplicity_dimension(3, 1)


def test_symmetric_subspace_dimension():
    assert fr.symmetric_subspace_dimension(4, 2) == 5
    assert fr.symmetric_subspace_dimension(1, 7) == 7
    assert fr.symmetric_subspace_dimension(2, 3) == 6


def test_collective_rep_caps():
    with pytest.raises(ValueError):
        fr.build_collective_spin_rep(3)
    with pytest.raises(fr.ResourceLimitError):
        fr.build_collective_spin_rep(14)


def test_two_qubit_schur_sectors():
    rep = fr.build_collective_spin_rep(2)
    assert [(s.j, s.multiplicity) for s in rep.sectors] == [(1, 1), (0, 1)]
    # j = 0 sector is spanned by the singlet
    singlet = np.zeros(4)
    singlet[1], singlet[2] = 1 / math.sqrt(2), -1 / math.sqrt(2)
    col = rep.basis[:, rep.sector(0).start]
    assert abs(np.dot(col, singlet)) == pytest.approx(1.0, abs=1e-10)


def test_four_qubit_multiplicities_match_numeric_eigenspaces():
    rep = fr.build_collective_spin_rep(4)
    assert {s.j: s.multiplicity for s in rep.sectors} == {0: 2, 1: 3, 2: 1}
    # independent oracle: count dense J^2 eigenvalues j(j+1)
    ops = dense_collective_ops(4)
    j2 = ops["x"] @ ops["x"] + ops["y"] @ ops["y"] + ops["z"] @ ops["z"]
    evals = np.round(np.linalg.eigvalsh(j2), 6)
    for j in (0, 1, 2):
        count = int((evals == j * (j + 1)).sum())
        assert count == (2 * j + 1) * fr.multiplicity_dimension(4, j)


@pytest.mark.parametrize("n_qubits", [2, 4, 6])
def test_schur_basis_is_orthonormal_and_complete(n_qubits):
    rep = fr.build_collective_spin_rep(n_qubits)
    dim = 2**n_qubits
    assert sum((2 * s.j + 1) * s.multiplicity for s in rep.sectors) == dim
    gram = rep.basis.T @ rep.basis
    assert np.abs(gram - np.eye(dim)).max() < 1e-8


@pytest.mark.parametrize("n_qubits", [2, 4])
def test_schur_vectors_are_joint_eigenvectors(n_qubits):
    rep = fr.build_collective_spin_rep(n_qubits)
    ops = dense_collective_ops(n_qubits)
    j2 = ops["x"] @ ops["x"] + ops["y"] @ ops["y"] + ops["z"] @ ops["z"]
    jz = ops["z"]
    for k, (j, m, _alpha) in enumerate(rep.labels):
        v = rep.basis[:, k]
        assert np.abs(j2 @ v - j * (j + 1) * v).max() < 1e-8
        assert np.abs(jz @ v - m * v).max() < 1e-8


def test_lowering_operator_ladder_consistency():
    rep = fr.build_collective_spin_rep(4)
    jm = rep.jm.toarray()
    index = {label: k for k, label in enumerate(rep.labels)}
    for (j, m, alpha), k in index.items():
        if m == -j:
            continue
        lowered = jm @ rep.basis[:, k]
        target = math.sqrt(j * (j + 1) - m * (m - 1)) * rep.basis[:, index[(j, m - 1, alpha)]]
        assert np.abs(lowered - target).max() < 1e-8


def test_collective_rotations_preserve_sectors():
    rep = fr.build_collective_spin_rep(4)
    rng = np.random.default_rng(11)
    u = rep.rotation(rng.uniform(-2, 2, size=3))
    for s in rep.sectors:
        cols = rep.basis[:, s.start:s.stop]
        proj = cols @ cols.T
        rotated = u @ cols.astype(complex)
        assert np.abs(proj @ rotated - rotated).max() < 1e-8


def test_rep_json_round_trips():
    rep = fr.z2_phase_flip_rep()
    back = fr.finite_rep_from_json(json.loads(json.dumps(fr.finite_rep_to_json(rep))))
    assert back.order == 2
    assert fr.validate_finite_rep(back).ok

    grading = fr.ChargeGrading([0, 1, 1, 2])
    back_g = fr.charge_grading_from_json(json.loads(json.dumps(fr.charge_grading_to_json(grading))))
    assert list(back_g.charges) == [0, 1, 1, 2]

    with pytest.raises(fr.RepresentationError):
        fr.charge_grading_from_json({"dim": 5, "charges": [0, 1]})
    with pytest.raises(fr.RepresentationError):
        fr.ChargeGrading([0, -1])
