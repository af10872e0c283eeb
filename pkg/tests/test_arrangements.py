from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import non_qs_cy_systems, qs_systems, rngs, self_dual_systems
from oracles import half_vertex_max, zonotope_endpoint_sums, zonotope_support_brute
from qsdisc.arrangements import (
    EQUAL_AFTER_SHIFT,
    Arrangement,
    HyperplaneFamily,
    Offset,
    compare_arrangements,
    discriminant_arrangement,
    hls_arrangement,
    hls_facet_normals,
    hls_offset,
    lattice_lengths,
    log_br,
    shift_vector,
    support_eta,
)
from qsdisc.circuits import circuit_constant, enumerate_circuit_normals
from qsdisc.errors import NotQuasiSymmetric
from qsdisc.exact import LogReal, dot, log_of_rational, log_sum
from qsdisc.weights import WeightSystem, is_self_dual

F = Fraction
LOG2 = log_of_rational(2)


def W(*weights):
    return WeightSystem.from_weights(weights)


CONIFOLD = W((1,), (1,), (-1,), (-1,))
A1 = W((1,), (-2,), (1,))
SELF_DUAL = W((1,), (-1,), (2,), (-2,))
AXES = W((1, 0), (-1, 0), (0, 1), (0, -1))
RANK2 = W((2, 0), (-1, 0), (-1, 0), (0, 1), (0, -1))


def test_log_br():
    assert log_br(1) == Offset(0)
    assert log_br(-1) == Offset(F(1, 2))
    assert log_br(F(1, 4)) == Offset(0, LOG2.scale(2))
    assert log_br(-27) == Offset(F(1, 2), log_of_rational(F(1, 27)))
    with pytest.raises(ValueError):
        log_br(0)


def test_offset_reduced_mod_one():
    assert Offset(F(3, 2)) == Offset(F(-1, 2)) == Offset(F(1, 2))
    assert -Offset(F(1, 3), LOG2) == Offset(F(2, 3), -LOG2)


def test_family_canonical_sign():
    f = HyperplaneFamily.canonical((-1, 2), Offset(F(1, 3), LOG2))
    assert f.normal == (1, -2) and f.offset == Offset(F(2, 3), -LOG2)
    assert HyperplaneFamily.canonical((0, 1), Offset(0)).normal == (0, 1)
    with pytest.raises(ValueError):
        HyperplaneFamily.canonical((2, 4), Offset(0))


def test_arrangement_dedup():
    f = HyperplaneFamily((1, 0), Offset(F(1, 2)))
    g = HyperplaneFamily((0, 1), Offset(0))
    arr = Arrangement.of([f, g, HyperplaneFamily((1, 0), Offset(F(-1, 2)))])
    assert arr.families == (g, f)


def test_discriminant_examples():
    assert discriminant_arrangement(CONIFOLD).families == (HyperplaneFamily((1,), Offset(0)),)
    assert discriminant_arrangement(A1).families == (
        HyperplaneFamily((1,), Offset(0, LOG2.scale(2))),
    )
    half = Offset(F(1, 2))
    assert discriminant_arrangement(AXES).families == (
        HyperplaneFamily((0, 1), half),
        HyperplaneFamily((1, 0), half),
    )


def test_discriminant_needs_qs():
    with pytest.raises(NotQuasiSymmetric):
        discriminant_arrangement(W((1, 0), (0, 1), (1, 1), (-2, -2)))


def test_support_eta_examples():
    assert support_eta(A1, (1,)) == 2
    assert support_eta(CONIFOLD, (1,)) == 2
    assert support_eta(RANK2, (0, 0)) == 0


@given(st.one_of(qs_systems, non_qs_cy_systems).filter(lambda ws: ws.n <= 12), rngs)
def test_support_eta_brute_force(ws, rng):
    pts = zonotope_endpoint_sums(ws.weights)
    for _ in range(5):
        l = [rng.randint(-4, 4) for _ in range(ws.k)]
        assert support_eta(ws, l) == zonotope_support_brute(ws.weights, l, pts)


@given(qs_systems.filter(lambda ws: ws.n <= 12), rngs)
def test_half_zonotope_saturates_the_bound(ws, rng):
    pts = zonotope_endpoint_sums(ws.weights)
    for _ in range(20):
        l = [rng.randint(-4, 4) for _ in range(ws.k)]
        eta = support_eta(ws, l)
        assert half_vertex_max(ws.weights, l, pts) == F(eta, 2)
        # centrally symmetric: the opposite bound is saturated too
        assert half_vertex_max(ws.weights, [-x for x in l], pts) == F(eta, 2)


def test_hls_normals_examples():
    assert hls_facet_normals(A1) == [(1,)]
    assert hls_facet_normals(AXES) == [(0, 1), (1, 0)]
    assert hls_facet_normals(RANK2) == [(0, 1), (1, 0)]


@given(qs_systems)
def test_normal_sets_agree(ws):
    assert hls_facet_normals(ws) == enumerate_circuit_normals(ws)


def test_hls_offset_examples():
    assert hls_offset(A1, (1,)) == 1
    assert hls_offset(SELF_DUAL, (1,)) == F(3, 2)
    assert hls_offset(RANK2, (1, 0)) == 1


@given(qs_systems)
def test_hls_offsets_are_half_eta(ws):
    for l in hls_facet_normals(ws):
        c = hls_offset(ws, l)
        assert (2 * c).denominator == 1
        assert c == F(support_eta(ws, l), 2)


def test_hls_arrangement_examples():
    assert hls_arrangement(A1).families == (HyperplaneFamily((1,), Offset(0)),)
    assert hls_arrangement(SELF_DUAL).families == (HyperplaneFamily((1,), Offset(F(1, 2))),)
    assert hls_arrangement(CONIFOLD).families == (HyperplaneFamily((1,), Offset(0)),)
    assert all(f.offset.imag.is_zero() for f in hls_arrangement(RANK2).families)


def test_shift_examples():
    assert shift_vector(CONIFOLD).is_zero()
    assert shift_vector(A1).coords == (LOG2.scale(2),)
    assert shift_vector(SELF_DUAL).is_zero()
    z = shift_vector(RANK2)
    assert z.pair((1, 0)) == LOG2.scale(-2)


@given(qs_systems)
def test_real_and_imaginary_correspondence(ws):
    lengths = lattice_lengths(ws)
    for l in enumerate_circuit_normals(ws):
        c = circuit_constant(ws, l)
        assert (c > 0) == (hls_offset(ws, l).denominator == 1)
        rhs = log_sum(log_of_rational(abs(n)).scale(dot(l, w)) for n, w in zip(lengths, ws.weights))
        assert log_of_rational(abs(c)) == rhs


@given(self_dual_systems)
def test_self_dual_is_real(ws):
    assert is_self_dual(ws)
    assert all(f.offset.imag.is_zero() for f in discriminant_arrangement(ws).families)
    assert shift_vector(ws).is_zero()


def test_compare_examples():
    rep = compare_arrangements(A1)
    assert rep.verdict == EQUAL_AFTER_SHIFT and rep.shift.coords == (LOG2.scale(2),)

    rep = compare_arrangements(CONIFOLD)
    assert rep.verdict == EQUAL_AFTER_SHIFT and rep.shift.is_zero()
    assert discriminant_arrangement(CONIFOLD) == hls_arrangement(CONIFOLD)

    rep = compare_arrangements(RANK2)
    assert rep.verdict == EQUAL_AFTER_SHIFT
    x, y = sorted(rep.matches, key=lambda m: m.normal, reverse=True)
    assert x.normal == (1, 0) and x.circuit_constant == 4 and x.hls_offset == 1
    assert x.discriminant == Offset(0, LOG2.scale(-2))
    assert rep.shift.pair((1, 0)) == LOG2.scale(-2)
    assert y.normal == (0, 1) and y.circuit_constant == -1 and y.hls_offset == F(1, 2)
    assert y.discriminant.real == F(1, 2) == y.hls_shifted.real


@given(qs_systems)
def test_compare_random(ws):
    rep = compare_arrangements(ws)
    assert rep.verdict == EQUAL_AFTER_SHIFT and rep.counterexample is None


def test_shifted_hls_reproduces_discriminant():
    for ws in (CONIFOLD, A1, SELF_DUAL, AXES, RANK2):
        z = shift_vector(ws)
        moved = Arrangement.of(
            HyperplaneFamily(f.normal, f.offset.shifted(z.pair(f.normal)))
            for f in hls_arrangement(ws).families
        )
        assert moved == discriminant_arrangement(ws)
