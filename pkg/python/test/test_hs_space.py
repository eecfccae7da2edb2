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

import dissipator_lab.hs_space as hs
from dissipator_lab.fock_algebra import TruncationConfig, basis_projector

pmp = pytest.mark.parametrize


def _l2error(a, b):
    return np.sqrt(np.sum(np.abs(a-b)**2)/np.sum(np.abs(a)**2))


@pmp("dim", (1, 2, 3, 8))
def test_basis_orthonormal(dim):
    basis = hs.HermitianBasis(dim)
    elems = basis.elements()
    assert_equal(elems.shape, (dim**2, dim, dim))
    gram = np.einsum('aij,bji->ab', elems, elems)
    assert_allclose(gram.imag, 0, atol=1e-14)
    assert_allclose(gram.real, np.eye(dim**2), atol=1e-14)
    for e in elems:
        assert_(hs.is_hermitian(e))
    assert_allclose(elems[0], np.eye(dim)/np.sqrt(dim), atol=1e-15)


def test_basis_2x2():
    basis = hs.HermitianBasis(2)
    ref = [np.eye(2)/np.sqrt(2), np.diag([1, -1])/np.sqrt(2),
           np.array([[0, 1], [1, 0]])/np.sqrt(2),
           np.array([[0, 1j], [-1j, 0]])/np.sqrt(2)]
    for b, r in zip(basis, ref):
        assert_allclose(b, r, atol=1e-15)
    assert_allclose(basis.vectorize(np.eye(2)), [np.sqrt(2), 0, 0, 0],
                    atol=1e-15)


@pmp("dim", (2, 5, 12))
def test_vectorize_isometry(dim):
    rng = np.random.default_rng(42)
    basis = hs.HermitianBasis(dim)
    r1 = hs.random_hermitian(dim, rng_seed=rng)
    r2 = hs.random_hermitian(dim, scale=10., rng_seed=rng)
    v1, v2 = basis.vectorize(r1), basis.vectorize(r2)
    scale = hs.hs_norm(r1)*hs.hs_norm(r2)
    assert_allclose(v1 @ v2, hs.hs_inner(r1, r2), rtol=0, atol=1e-13*scale)
    assert_allclose(np.linalg.norm(v1), hs.hs_norm(r1), rtol=1e-12)
    assert_(_l2error(r1, basis.devectorize(v1)) < 1e-14)
    # batched and single calls agree
    both = basis.vectorize(np.array([r1, r2]))
    assert_(_l2error(v2, both[1]) < 1e-14)
    assert_(basis == hs.standard_hermitian_basis(dim))
    assert_(_l2error(v2, hs.vectorize(hs.devectorize(v2, basis), basis))
            < 1e-14)


@pmp("dim", (2, 4, 8, 16))
def test_basis_reconstruction(dim):
    rng = np.random.default_rng(42)
    basis = hs.HermitianBasis(dim)
    rhos = np.array([hs.random_hermitian(dim, scale=s, rng_seed=rng)
                     for s in rng.uniform(0.1, 10., 100)])
    coords = basis.vectorize(rhos)
    assert_equal(coords.shape, (100, dim**2))
    assert_(np.isrealobj(coords))
    back = basis.devectorize(coords)
    for r, b in zip(rhos, back):
        assert_(_l2error(r, b) < 1e-13)
    assert_allclose(np.linalg.norm(coords, axis=1),
                    [hs.hs_norm(r) for r in rhos], rtol=1e-12)


def test_inner_product_examples():
    p0 = basis_projector(TruncationConfig(2), 0)
    p1 = basis_projector(TruncationConfig(2), 1)
    assert_equal(hs.hs_inner(p0, p1), 0.)
    assert_allclose(hs.hs_inner(np.eye(4), np.eye(4)), 4.)
    assert_allclose(hs.hs_norm(np.eye(4)), 2.)
    with pytest.raises(ValueError):
        hs.hs_inner(np.eye(2), np.eye(3))


def test_inner_product_symmetric():
    rng = np.random.default_rng(42)
    r1 = hs.random_hermitian(6, rng_seed=rng)
    r2 = hs.random_hermitian(6, rng_seed=rng)
    assert_allclose(hs.hs_inner(r1, r2), hs.hs_inner(r2, r1), rtol=0,
                    atol=1e-13*hs.hs_norm(r1)*hs.hs_norm(r2))
    assert_(hs.hs_inner(r1, r1) > 0)


@pmp("nlev", (2, 3, 7))
def test_norm_blocks(nlev):
    rng = np.random.default_rng(42)
    rho = hs.random_hermitian(2*nlev, scale=0.1, rng_seed=rng)
    assert_allclose(hs.hs_norm_blocks(rho, nlev), hs.hs_norm(rho), rtol=1e-13)
    with pytest.raises(ValueError):
        hs.hs_norm_blocks(rho, nlev+1)


def test_hermiticity_helpers():
    m = np.array([[1., 1j], [-1j, 2.]])
    assert_(hs.is_hermitian(m))
    assert_allclose(hs.as_hermitian(m), m)
    bad = np.array([[0., 1.], [0., 0.]])
    assert_(not hs.is_hermitian(bad))
    assert_allclose(hs.hermiticity_residual(bad), 1.)
    assert_allclose(hs.symmetrize(bad), [[0, .5], [.5, 0]])
    with pytest.raises(ValueError):
        hs.as_hermitian(bad)
    with pytest.raises(ValueError):
        hs.as_hermitian(np.ones((2, 3)))
    assert_(not hs.is_hermitian(np.ones(3)))


def test_random_states():
    rho = hs.random_density(6, 3)
    assert_allclose(np.trace(rho).real, 1., rtol=1e-14)
    assert_(np.linalg.eigvalsh(rho)[0] > 0)
    assert_allclose(hs.random_density(6, 3), rho, rtol=0, atol=0)
    h = hs.random_hermitian(5, rng_seed=7)
    assert_allclose(h, h.conj().T, rtol=0, atol=0)


def test_matrix_json():
    m = np.array([[1., 0.1+0.2j], [0.1-0.2j, -3.]])
    obj = hs.matrix_to_json(m)
    assert_equal(obj[0][1], [0.1, 0.2])
    assert_allclose(hs.matrix_from_json(obj), m, rtol=0, atol=0)
    with pytest.raises(ValueError):
        hs.matrix_from_json([[1., 2.]])


def test_basis_errors():
    basis = hs.HermitianBasis(3)
    with pytest.raises(ValueError):
        basis.vectorize(np.eye(2))
    with pytest.raises(ValueError):
        basis.devectorize(np.zeros(8))
    with pytest.raises(IndexError):
        basis.element(9)
    with pytest.raises(ValueError):
        hs.HermitianBasis(0)
