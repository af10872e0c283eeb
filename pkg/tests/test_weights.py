import random
import warnings

import pytest
from hypothesis import given

from conftest import non_qs_cy_systems, qs_systems, self_dual_systems
from qsdisc.circuits import enumerate_circuit_normals
from qsdisc.errors import NotSurjective, SpanFailure, ZeroWeight
from qsdisc.exact import IntMatrix, dot, kernel_basis
from qsdisc.random_systems import random_qs_system
from qsdisc.weights import (
    WeightSystem,
    is_calabi_yau,
    is_quasi_symmetric,
    is_self_dual,
    partition_lines,
    ray_data,
    reduce_to_image,
    restrict_to_circuit,
    validate,
)


def W(*weights):
    return WeightSystem.from_weights(weights)


def test_validate():
    ws = validate([[1, 1, -1, -1]])
    assert (ws.k, ws.n) == (1, 4)
    with pytest.raises(NotSurjective) as exc:
        validate([[2, -2]])
    assert exc.value.factors == [2]
    with pytest.raises(ZeroWeight) as exc:
        validate([[1, 0], [0, 0]])
    assert exc.value.column == 2


def test_validate_rank_deficient_is_not_surjective():
    with pytest.raises(NotSurjective):
        validate([[1, -1], [1, -1]])


def test_reduce_to_image():
    ws, B = reduce_to_image([[2, -2]])
    assert ws.Q.rows == ((1, -1),) and B.rows == ((2,),)

    ws, B = reduce_to_image([[1, 1, -1, -1]])
    assert ws.Q.rows == ((1, 1, -1, -1),) and B == IntMatrix.identity(1)

    raw = [[2, 0, -2], [0, 2, -2]]
    ws, B = reduce_to_image(raw)
    assert ws.Q.rows == ((1, 0, -1), (0, 1, -1))
    assert B @ ws.Q == IntMatrix.from_rows(raw)

    with pytest.raises(ValueError):
        reduce_to_image([[0, 0]])


def test_reduce_to_image_skewed_lattice():
    raw = [[1, 1, -2], [1, -1, 0]]  # image has index 2 in Z^2
    ws, B = reduce_to_image(raw)
    assert B @ ws.Q == IntMatrix.from_rows(raw)
    assert abs(B[0, 0] * B[1, 1] - B[0, 1] * B[1, 0]) == 2


def test_partition_lines():
    (g,) = partition_lines(W((1,), (1,), (-1,), (-1,)))
    assert g.direction == (1,) and g.lengths == (1, 1, -1, -1)

    assert len(partition_lines(W((1, 0), (-1, 0), (0, 1), (0, -1)))) == 2

    x, y = partition_lines(W((2, 0), (-1, 0), (-1, 0), (0, 1), (0, -1)))
    assert x.direction == (1, 0) and x.lengths == (2, -1, -1) and x.members == (0, 1, 2)
    assert y.direction == (0, 1) and y.lengths == (1, -1)


@given(qs_systems)
def test_partition_reassembles(ws):
    groups = partition_lines(ws)
    assert sorted(j for g in groups for j in g.members) == list(range(ws.n))
    for g in groups:
        for j, nj in zip(g.members, g.lengths):
            assert ws.weights[j] == tuple(nj * x for x in g.direction)
    total = tuple(sum(g.line_sum[i] for g in groups) for i in range(ws.k))
    assert total == ws.total()


def test_calabi_yau():
    assert is_calabi_yau(W((1,), (1,), (-1,), (-1,)))
    assert is_calabi_yau(W((1,), (1,), (1,), (-3,)))
    assert not is_calabi_yau(W((1,), (1,)))


def test_quasi_symmetric():
    assert is_quasi_symmetric(W((1,), (-2,), (1,)))
    v = is_quasi_symmetric(W((1, 0), (0, 1), (1, 1), (-2, -2)))
    assert not v and v.witness == (1, 0)
    assert is_quasi_symmetric(W((1, 0), (-1, 0), (0, 1), (0, -1)))


def test_self_dual():
    assert is_self_dual(W((1,), (-1,), (2,), (-2,)))
    assert not is_self_dual(W((1,), (-2,), (1,)))
    assert is_self_dual(W((1,), (1,), (-1,), (-1,)))
    assert not is_self_dual(W((1,), (1,), (-1,), (-1,), (2,), (-1,), (-1,)))


@given(qs_systems)
def test_qs_implies_cy(ws):
    assert is_quasi_symmetric(ws) and is_calabi_yau(ws)


@given(non_qs_cy_systems)
def test_non_qs_generator(ws):
    assert is_calabi_yau(ws) and not is_quasi_symmetric(ws)


def test_rank_one_cy_iff_qs():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 6)
        w = [rng.choice([-3, -2, -1, 1, 2, 3]) for _ in range(n)]
        try:
            ws = validate([w])
        except ValueError:
            continue
        assert is_calabi_yau(ws) == bool(is_quasi_symmetric(ws))


@given(self_dual_systems)
def test_self_dual_implies_qs(ws):
    assert is_self_dual(ws) and is_quasi_symmetric(ws)


def test_ray_data_conifold():
    rd = ray_data(W((1,), (1,), (-1,), (-1,)))
    assert rd.rays.shape == (3, 4)
    assert rd.cy_witness is not None
    assert all(dot(rd.cy_witness, w) == 1 for w in rd.rays.columns())
    assert not rd.warnings


def test_ray_data_not_cy():
    rd = ray_data(W((1,), (1,)))
    assert rd.cy_witness is None and rd.rays.shape == (1, 2)


def test_ray_data_a1():
    rd = ray_data(W((1,), (-2,), (1,)))
    rays = rd.rays.columns()
    assert rd.rays.shape == (2, 3) and len(set(rays)) == 3
    assert all(dot(rd.cy_witness, w) == 1 for w in rays)


def test_ray_data_warns_on_repeated_rays():
    with pytest.warns(UserWarning, match="not pairwise distinct"):
        rd = ray_data(W((2, 0), (-1, 0), (-1, 0), (0, 1), (0, -1)))
    assert rd.warnings


@given(qs_systems)
def test_ray_data_relations(ws):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        rd = ray_data(ws)
    assert (ws.Q @ rd.rays.T).is_zero()
    assert rd.rays.T == kernel_basis(ws.Q)
    assert all(dot(rd.cy_witness, w) == 1 for w in rd.rays.columns())


def test_restrict_to_circuit():
    ws = W((1, 0), (-1, 0), (0, 1), (0, -1))
    assert restrict_to_circuit(ws, (1, 0)).Q.rows == ((1, -1),)
    ws = W((2, 0), (-1, 0), (-1, 0), (0, 1), (0, -1))
    assert restrict_to_circuit(ws, (1, 0)).Q.rows == ((2, -1, -1),)
    ws = W((1,), (-2,), (1,))
    assert restrict_to_circuit(ws, (1,)).Q.rows == ((1, -2, 1),)


def test_restrict_span_failure():
    ws = W((1, 0), (-1, 0), (0, 1), (0, -1))
    with pytest.raises(SpanFailure):
        restrict_to_circuit(ws, (1, 1))


@given(qs_systems)
def test_circuit_restrictions_stay_quasi_symmetric(ws):
    for l in enumerate_circuit_normals(ws):
        sub = restrict_to_circuit(ws, l)
        assert sub.k == 1 and is_quasi_symmetric(sub)
        # exactly one linear relation among the restricted weights
        assert kernel_basis(sub.Q).ncols == sub.n - 1


def test_generators_are_reproducible():
    a = random_qs_system(random.Random(3))
    b = random_qs_system(random.Random(3))
    assert a == b
