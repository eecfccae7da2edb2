# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.
#
# Copyright(C) 2026 dissipator_lab developers


import numpy as np
import pytest
from numpy.testing import assert_, assert_allclose, assert_equal

import dissipator_lab.fock_algebra as fa

pmp = pytest.mark.parametrize


@pmp("nlev", (2, 3, 5, 16))
def test_ladder_entries(nlev):
    cfg = fa.TruncationConfig(nlev)
    a = fa.make_annihilation(cfg)
    ad = fa.make_creation(cfg)
    assert_equal(a.shape, (nlev, nlev))
    for n in range(1, nlev):
        assert_allclose(a[n-1, n], np.sqrt(n), rtol=0, atol=1e-15)
    assert_equal(np.count_nonzero(a), nlev-1)
    assert_allclose(ad, a.conj().T, rtol=0, atol=0)
    # a^dag annihilates the top level
    assert_allclose(ad[:, nlev-1], 0)


@pmp("nlev", (2, 4, 8))
def test_truncated_commutator(nlev):
    cfg = fa.TruncationConfig(nlev)
    a = fa.make_annihilation(cfg)
    ad = fa.make_creation(cfg)
    ref = np.diag([1.]*(nlev-1) + [-(nlev-1.)])
    assert_allclose(a @ ad - ad @ a, ref, atol=1e-14)
    assert_allclose(fa.number_operator(cfg), np.diag(np.arange(nlev)),
                    atol=1e-14)


def test_ladder_n2():
    a = fa.make_annihilation(2)
    assert_allclose(a, [[0, 1], [0, 0]])
    assert_allclose(fa.make_creation(2) @ a, np.diag([0, 1]))


def test_pauli():
    s1, s2, s3 = (fa.pauli(k) for k in (1, 2, 3))
    assert_allclose(s1 @ s2 - s2 @ s1, 2j*s3, atol=1e-15)
    for s in (s1, s2, s3):
        assert_allclose(s @ s, np.eye(2), atol=1e-15)
        assert_allclose(s, s.conj().T)
    assert_allclose(s3, np.diag([1, -1]))
    for k in (0, 4, 'x', None):
        with pytest.raises(ValueError):
            fa.pauli(k)


def test_tensor_layout():
    cfg = fa.TruncationConfig(3)
    field = np.arange(9.).reshape(3, 3)
    spin = np.array([[1., 2.], [3., 4.]])
    res = fa.tensor(field, spin, cfg)
    assert_equal(res.shape, (6, 6))
    for n in range(3):
        for m in range(3):
            assert_allclose(fa.field_block(res, n, m), field[n, m]*spin)
    with pytest.raises(ValueError):
        fa.tensor(np.eye(4), spin, cfg)
    with pytest.raises(ValueError):
        fa.tensor(field, np.eye(3))


def test_tensor_examples():
    cfg = fa.TruncationConfig(2)
    res = fa.tensor(fa.make_annihilation(cfg), np.eye(2))
    ref = np.zeros((4, 4))
    ref[0, 2] = ref[1, 3] = 1.
    assert_allclose(res, ref)
    assert_allclose(fa.tensor(np.eye(2), fa.pauli(3)), np.diag([1, -1, 1, -1]))


@pmp("nlev", (2, 3, 6))
def test_lifted_operators_commute(nlev):
    cfg = fa.TruncationConfig(nlev)
    fields = (fa.make_annihilation(cfg), fa.make_creation(cfg),
              fa.number_operator(cfg))
    for f in fields:
        lf = fa.lift_field(f)
        for k in (1, 2, 3):
            ls = fa.lift_spin(fa.pauli(k), cfg)
            assert_allclose(lf @ ls - ls @ lf, 0, atol=1e-14)


@pmp("nlev", (2, 5))
def test_tensor_multiplicative(nlev):
    rng = np.random.default_rng(42)
    f1, f2 = (rng.standard_normal((2, nlev, nlev))
              + 1j*rng.standard_normal((2, nlev, nlev)))
    s1, s2 = rng.standard_normal((2, 2, 2)) + 1j*rng.standard_normal((2, 2, 2))
    assert_allclose(fa.tensor(f1 @ f2, s1 @ s2),
                    fa.tensor(f1, s1) @ fa.tensor(f2, s2), atol=1e-12)
    assert_allclose(fa.tensor(f1, s1).conj().T,
                    fa.tensor(f1.conj().T, s1.conj().T), atol=0)


def test_system_operators():
    ops = fa.system_operators(4)
    assert_(ops is fa.system_operators(fa.TruncationConfig(4)))
    assert_equal(ops.dim, 8)
    assert_allclose(ops.number, ops.a_dag @ ops.a, atol=1e-14)
    assert_allclose(ops.anti_number, ops.a @ ops.a_dag, atol=1e-14)
    assert_allclose(ops.sigma[2], fa.lift_spin(fa.pauli(3), 4))
    assert_allclose(ops.a, fa.lift_field(fa.make_annihilation(4)))
    with pytest.raises(ValueError):
        ops.a[0, 0] = 1.


def test_basis_states():
    cfg = fa.TruncationConfig(3)
    v = fa.basis_state(cfg, 1, '+')
    assert_equal(np.flatnonzero(v), [2])
    assert_equal(np.flatnonzero(fa.basis_state(cfg, 2, -1)), [5])
    p = fa.basis_projector(cfg, 0)
    assert_allclose(p @ p, p)
    assert_allclose(np.trace(p), 1.)
    assert_allclose(fa.field_block(p, 0, 0), np.diag([1, 0]))
    for bad in ((3, 1), (-1, 1), (0, 0)):
        with pytest.raises(ValueError):
            fa.basis_state(cfg, *bad)


@pmp("nlev", (1, 0, 2.5))
def test_invalid_truncation(nlev):
    with pytest.raises(ValueError):
        fa.TruncationConfig(nlev)
