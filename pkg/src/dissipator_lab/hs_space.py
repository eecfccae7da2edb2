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


"""The real Hilbert space HS of Hermitian d x d matrices.

HS carries the inner product <rho1, rho2> = tr(rho1 rho2). Complex arrays are
only the storage format; coordinates with respect to a `HermitianBasis` are
real, so superoperators become real matrices and symmetry becomes a plain
transpose test.

All functions accept a leading batch axis where this is natural
(``rho.shape == (..., d, d)``).
"""

import numpy as np

from .fock_algebra import field_block

__all__ = ['HermitianBasis', 'standard_hermitian_basis', 'hs_inner', 'hs_norm',
           'hs_norm_blocks', 'vectorize', 'devectorize', 'as_hermitian',
           'symmetrize', 'hermiticity_residual', 'is_hermitian',
           'random_hermitian', 'random_density', 'matrix_to_json',
           'matrix_from_json']


def _check_square(m, name='matrix'):
    if m.ndim < 2 or m.shape[-1] != m.shape[-2]:
        raise ValueError("{} must be square, got shape {}".format(name, m.shape))


def symmetrize(m):
    """Orthogonal projection (M + M^dag)/2 onto the Hermitian matrices."""
    m = np.asarray(m)
    return 0.5*(m + np.conj(np.swapaxes(m, -1, -2)))


def hermiticity_residual(m):
    """max |M - M^dag|, the absolute Hermiticity residual."""
    m = np.asarray(m)
    if m.size == 0:
        return 0.
    return float(np.max(np.abs(m - np.conj(np.swapaxes(m, -1, -2)))))


def is_hermitian(m, rtol=1e-12):
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    scale = np.max(np.abs(m)) if m.size else 0.
    return hermiticity_residual(m) <= rtol*scale


def as_hermitian(m, rtol=1e-12):
    """Construct a HermitianPoint.

    The residual |M - M^dag|_max must not exceed ``rtol*|M|_max``; the
    returned matrix is the symmetrized copy (M + M^dag)/2.
    """
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("expected a square matrix, got shape {}".format(m.shape))
    if not is_hermitian(m, rtol):
        raise ValueError("matrix is not Hermitian (residual {:.3e})".format(
            hermiticity_residual(m)))
    return symmetrize(m)


def hs_inner(rho1, rho2):
    """tr(rho1 rho2); real and symmetric for Hermitian arguments."""
    rho1 = np.asarray(rho1)
    rho2 = np.asarray(rho2)
    _check_square(rho1)
    if rho1.shape[-2:] != rho2.shape[-2:]:
        raise ValueError("dimension mismatch: {} vs {}".format(
            rho1.shape[-2:], rho2.shape[-2:]))
    res = np.einsum('...ij,...ji->...', rho1, rho2).real
    return float(res) if res.ndim == 0 else res


def hs_norm(rho):
    """Hilbert-Schmidt norm, i.e. the Frobenius norm."""
    rho = np.asarray(rho)
    _check_square(rho)
    res = np.sqrt(np.sum(np.abs(rho)**2, axis=(-2, -1)))
    return float(res) if res.ndim == 0 else res


def hs_norm_blocks(rho, n_levels):
    """HS norm assembled from the 2x2 spin blocks rho_{n,n'}.

    sqrt(sum_{n,n'} tr(rho_{n,n'} rho_{n',n})); for Hermitian rho the block
    rho_{n',n} is the adjoint of rho_{n,n'}.
    """
    rho = np.asarray(rho)
    if rho.shape != (2*n_levels, 2*n_levels):
        raise ValueError("expected shape {}, got {}".format(
            (2*n_levels, 2*n_levels), rho.shape))
    total = 0.
    for n in range(n_levels):
        for m in range(n_levels):
            total += np.trace(field_block(rho, n, m) @ field_block(rho, m, n)).real
    return float(np.sqrt(max(total, 0.)))


def _diagonal_frame(dim):
    # Gram-Schmidt over the diagonal subspace, starting from (1,...,1)/sqrt(d)
    start = np.eye(dim)
    start = np.concatenate([np.ones((dim, 1)), start[:, :dim-1]], axis=1)
    q, r = np.linalg.qr(start)
    q *= np.sign(np.diag(r))
    return q


class HermitianBasis:
    """Orthonormal basis of the d^2-dimensional real space of Hermitian
    d x d matrices.

    The ordering is: I/sqrt(d), the remaining d-1 diagonal elements
    (Gram-Schmidt continuation of I/sqrt(d) over the diagonal units), the
    symmetric combinations (E_ij + E_ji)/sqrt(2) for i < j, and the
    antisymmetric combinations i(E_ij - E_ji)/sqrt(2) for i < j (row-major
    order of the upper triangle).

    The basis is stored in factored form, so vectorization is O(d^2) and no
    d^2 x d x d array is needed unless `elements` is called.
    """

    def __init__(self, dim):
        if int(dim) != dim or dim < 1:
            raise ValueError("dimension must be a positive integer")
        self._dim = int(dim)
        self._diag = _diagonal_frame(self._dim)
        self._iu = np.triu_indices(self._dim, 1)
        self._npair = len(self._iu[0])

    @property
    def dim(self):
        """Matrix dimension d."""
        return self._dim

    @property
    def size(self):
        """Number of basis elements, d^2."""
        return self._dim**2

    def __len__(self):
        return self.size

    def __eq__(self, other):
        return isinstance(other, HermitianBasis) and other.dim == self.dim

    def __hash__(self):
        return hash((HermitianBasis, self._dim))

    def __repr__(self):
        return "HermitianBasis({})".format(self._dim)

    def vectorize(self, rho):
        rho = np.asarray(rho)
        if rho.shape[-2:] != (self._dim, self._dim):
            raise ValueError("expected matrices of shape {}, got {}".format(
                (self._dim, self._dim), rho.shape))
        diag = np.diagonal(rho, axis1=-2, axis2=-1).real @ self._diag
        off = rho[..., self._iu[0], self._iu[1]]
        return np.concatenate(
            [diag, np.sqrt(2.)*off.real, np.sqrt(2.)*off.imag], axis=-1)

    def devectorize(self, coords):
        coords = np.asarray(coords, dtype=np.float64)
        if coords.shape[-1] != self.size:
            raise ValueError("expected {} coordinates, got {}".format(
                self.size, coords.shape[-1]))
        d, npair = self._dim, self._npair
        res = np.zeros(coords.shape[:-1]+(d, d), dtype=np.complex128)
        idx = np.arange(d)
        res[..., idx, idx] = coords[..., :d] @ self._diag.T
        z = (coords[..., d:d+npair] + 1j*coords[..., d+npair:])/np.sqrt(2.)
        res[..., self._iu[0], self._iu[1]] = z
        res[..., self._iu[1], self._iu[0]] = np.conj(z)
        return res

    def element(self, alpha):
        if not 0 <= alpha < self.size:
            raise IndexError("basis index {} out of range".format(alpha))
        e = np.zeros(self.size)
        e[alpha] = 1.
        return self.devectorize(e)

    __getitem__ = element

    def __iter__(self):
        for alpha in range(self.size):
            yield self.element(alpha)

    def elements(self):
        """All basis elements as an array of shape (d^2, d, d)."""
        return self.devectorize(np.eye(self.size))


def standard_hermitian_basis(dim):
    return HermitianBasis(dim)


def vectorize(rho, basis):
    return basis.vectorize(rho)


def devectorize(coords, basis):
    return basis.devectorize(coords)


def random_hermitian(dim, scale=1., rng_seed=None):
    """G + G^dag with centered complex Gaussian G of deviation scale/sqrt(2).

    ``rng_seed`` may be an integer seed or a `numpy.random.Generator`.
    """
    rng = np.random.default_rng(rng_seed)
    sd = scale/np.sqrt(2.)
    g = rng.normal(0., sd, (dim, dim)) + 1j*rng.normal(0., sd, (dim, dim))
    return g + g.conj().T


def random_density(dim, rng_seed=None):
    """Full-support density matrix G G^dag / tr(G G^dag)."""
    rng = np.random.default_rng(rng_seed)
    while True:
        g = rng.normal(size=(dim, dim)) + 1j*rng.normal(size=(dim, dim))
        rho = g @ g.conj().T
        tr = np.trace(rho).real
        if tr > 0:
            return symmetrize(rho/tr)


def matrix_to_json(m):
    """Row-major nested list of [re, im] pairs."""
    m = np.asarray(m)
    return [[[float(z.real), float(z.imag)] for z in row] for row in m]


def matrix_from_json(obj):
    arr = np.asarray(obj, dtype=np.float64)
    if arr.ndim != 3 or arr.shape[-1] != 2:
        raise ValueError("expected nested [re, im] pairs")
    return arr[..., 0] + 1j*arr[..., 1]
