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


"""The dissipation superoperators D and Delta.

    Delta rho = a rho a^dag - 1/2 a^dag a rho - 1/2 rho a^dag a
    D rho     = Delta rho + a^dag rho a - 1/2 a a^dag rho - 1/2 rho a a^dag

D is Delta plus its mirror image under the interchange of a and a^dag. All
products are formed from the truncated matrices, so both maps are exact
finite-dimensional Lindblad generators and cyclic-trace identities hold
without truncation error.
"""

import enum
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from ._util import NumericalFailure, resolve_nthreads
from .fock_algebra import TruncationConfig, system_operators
from .hs_space import HermitianBasis, as_hermitian, hs_inner, symmetrize

logger = logging.getLogger(__name__)

__all__ = ['DissipatorKind', 'SuperOperatorMatrix', 'Spectrum',
           'apply_dissipator', 'apply_mirrored_delta', 'hs_adjoint',
           'quadratic_form', 'trace_form', 'eigenbasis_form',
           'eigenbasis_terms',
           'superoperator_matrix', 'dissipator_spectrum', 'spectrum_of',
           'kernel_basis', 'kernel_projection', 'DENSE_LIMIT']

# largest d^2 for which dense superoperator matrices are built
DENSE_LIMIT = 20000


class DissipatorKind(enum.Enum):
    FULL_D = 'full'
    DELTA_ONLY = 'delta'

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError("unknown dissipator {!r}; use 'full' or 'delta'"
                             .format(value))


def _operators(rho, ops):
    rho = np.asarray(rho)
    if rho.ndim < 2 or rho.shape[-1] != rho.shape[-2]:
        raise ValueError("expected square matrices, got shape {}".format(rho.shape))
    if ops is None:
        d = rho.shape[-1]
        if d % 2:
            raise ValueError("system dimension must be even, got {}".format(d))
        ops = system_operators(TruncationConfig(d//2))
    elif rho.shape[-1] != ops.dim:
        raise ValueError("dimension mismatch: matrix {} vs operators {}".format(
            rho.shape[-1], ops.dim))
    return rho, ops


def _delta(rho, ops):
    return (ops.a @ rho @ ops.a_dag
            - 0.5*(ops.number @ rho + rho @ ops.number))


def _mirrored_delta(rho, ops):
    return (ops.a_dag @ rho @ ops.a
            - 0.5*(ops.anti_number @ rho + rho @ ops.anti_number))


def apply_mirrored_delta(rho, ops=None):
    """Delta with a and a^dag interchanged."""
    rho, ops = _operators(rho, ops)
    return symmetrize(_mirrored_delta(rho, ops))


def apply_dissipator(kind, rho, ops=None, hermitize=True):
    """Evaluate D rho or Delta rho by direct matrix arithmetic.

    Parameters
    ----------
    kind : DissipatorKind or str
    rho : numpy.ndarray((..., d, d))
        Hermitian matrix or stack of matrices
    ops : SystemOperators, optional
        lifted operators; derived from the dimension of `rho` if omitted
    hermitize : bool
        if True (default), the result is projected onto the Hermitian
        matrices to remove roundoff asymmetry

    Returns
    -------
    numpy.ndarray((..., d, d), dtype=numpy.complex128)
    """
    kind = DissipatorKind.parse(kind)
    rho, ops = _operators(rho, ops)
    res = _delta(rho, ops)
    if kind is DissipatorKind.FULL_D:
        res = res + _mirrored_delta(rho, ops)
    return symmetrize(res) if hermitize else res


def hs_adjoint(kind, sigma, ops=None):
    """HS adjoint L^dag with <sigma, L rho> = <L^dag sigma, rho>.

    D is its own adjoint; Delta^dag sigma = a^dag sigma a - 1/2{a^dag a, sigma}.
    """
    kind = DissipatorKind.parse(kind)
    sigma, ops = _operators(sigma, ops)
    if kind is DissipatorKind.FULL_D:
        return apply_dissipator(kind, sigma, ops)
    res = (ops.a_dag @ sigma @ ops.a
           - 0.5*(ops.number @ sigma + sigma @ ops.number))
    return symmetrize(res)


def quadratic_form(kind, rho, ops=None):
    """<rho, L rho>_HS."""
    return hs_inner(rho, apply_dissipator(kind, rho, ops))


def trace_form(kind, rho, ops=None):
    """The quadratic form after cyclic rearrangement of the trace.

    tr(2 rho a rho a^dag - a^dag a rho^2 - a a^dag rho^2) for D and
    tr(rho a rho a^dag - a^dag a rho^2) for Delta.
    """
    kind = DissipatorKind.parse(kind)
    rho, ops = _operators(rho, ops)
    rho2 = rho @ rho
    hop = np.trace(rho @ ops.a @ rho @ ops.a_dag).real
    if kind is DissipatorKind.FULL_D:
        return float(2*hop - np.trace(ops.number @ rho2).real
                     - np.trace(ops.anti_number @ rho2).real)
    return float(hop - np.trace(ops.number @ rho2).real)


def eigenbasis_terms(kind, rho, ops=None):
    """Closed form of the quadratic form and the sum of its absolute terms.

    The second value is the natural scale for comparing the closed form
    against a directly computed quadratic form.
    """
    kind = DissipatorKind.parse(kind)
    rho, ops = _operators(as_hermitian(rho), ops)
    try:
        w, v = np.linalg.eigh(rho)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure("eigensolver failed: {}".format(exc))
    amat = np.abs(v.conj().T @ ops.a @ v)**2
    ri = w[:, None]
    rk = w[None, :]
    if kind is DissipatorKind.FULL_D:
        terms = -amat*(ri-rk)**2
        return float(np.sum(terms)), float(np.sum(np.abs(terms)))
    terms = amat*(ri*rk - rk**2)
    scale = np.sum(amat*(np.abs(ri*rk) + rk**2))
    return float(np.sum(terms)), float(scale)


def eigenbasis_form(kind, rho, ops=None):
    """Closed form of the quadratic form in the eigenbasis of rho.

    With rho = sum_i rho_i e_i e_i^dag and a_ik = <e_i, a e_k>:

    - D:     -sum_{i,k} |a_ik|^2 (rho_i - rho_k)^2
    - Delta:  sum_{i,k} |a_ik|^2 (rho_i rho_k - rho_k^2)

    Both sums are invariant under rotations inside degenerate eigenspaces,
    so no tie-breaking is applied (eigenvalues come out ascending).
    """
    return eigenbasis_terms(kind, rho, ops)[0]


@dataclass(frozen=True)
class SuperOperatorMatrix:
    """Real matrix M with M[alpha, beta] = <B_alpha, L(B_beta)>_HS."""
    matrix: np.ndarray
    basis: HermitianBasis

    def apply(self, rho):
        return self.basis.devectorize(
            np.einsum('ab,...b->...a', self.matrix, self.basis.vectorize(rho)))

    def transpose_residual(self):
        """max |M - M^T| relative to max |M|."""
        scale = np.max(np.abs(self.matrix))
        if scale == 0:
            return 0.
        return float(np.max(np.abs(self.matrix - self.matrix.T))/scale)

    def symmetric_part(self):
        return 0.5*(self.matrix + self.matrix.T)


def _callable_for(op, basis):
    if callable(op):
        return op
    kind = DissipatorKind.parse(op)
    if basis.dim % 2:
        raise ValueError("dissipators need an even system dimension")
    ops = system_operators(TruncationConfig(basis.dim//2))
    return lambda rho: apply_dissipator(kind, rho, ops)


def superoperator_matrix(op, basis, nthreads=1, chunksize=256):
    """Dense matrix of a linear map on Hermitian matrices.

    Parameters
    ----------
    op : DissipatorKind, str or callable
        either a dissipator kind or a callable mapping a stack of Hermitian
        matrices of shape (k, d, d) to a stack of the same shape
    basis : HermitianBasis
    nthreads : int
        number of threads used for the (independent) columns;
        0 means all available cores
    chunksize : int
        number of columns evaluated per batch

    Returns
    -------
    SuperOperatorMatrix
    """
    if basis.size > DENSE_LIMIT:
        raise ValueError(
            "d^2 = {} exceeds the dense limit {}; use matrix-free application"
            .format(basis.size, DENSE_LIMIT))
    func = _callable_for(op, basis)
    n = basis.size
    starts = list(range(0, n, chunksize))
    res = np.empty((n, n), dtype=np.float64)

    def work(start):
        stop = min(start+chunksize, n)
        unit = np.zeros((stop-start, n))
        unit[np.arange(stop-start), np.arange(start, stop)] = 1.
        res[:, start:stop] = basis.vectorize(func(basis.devectorize(unit))).T

    nthreads = resolve_nthreads(nthreads)
    logger.debug('building %ix%i superoperator matrix in %i chunk(s)',
                 n, n, len(starts))
    if nthreads == 1 or len(starts) == 1:
        for start in starts:
            work(start)
    else:
        with ThreadPoolExecutor(max_workers=nthreads) as ex:
            list(ex.map(work, starts))
    return SuperOperatorMatrix(res, basis)


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues of a superoperator matrix.

    ``eigenvalues`` are sorted ascending by real part (then imaginary part),
    ``symmetrized`` holds the ascending eigenvalues of (M + M^T)/2.
    ``spectral_gap`` is -max{Re lambda : Re lambda < -zero_tol}, i.e. the
    distance from zero to the nonzero part of the spectrum.
    """
    eigenvalues: np.ndarray
    symmetrized: np.ndarray
    spectral_gap: float
    max_real: float
    zero_tol: float

    def zero_count(self, atol=None):
        atol = self.zero_tol if atol is None else atol
        return int(np.sum(np.abs(self.eigenvalues) <= atol))


def spectrum_of(supermat, rtol=1e-8):
    m = supermat.matrix if isinstance(supermat, SuperOperatorMatrix) else supermat
    try:
        if np.array_equal(m, m.T):
            eigs = scipy.linalg.eigvalsh(m).astype(np.complex128)
        else:
            eigs = scipy.linalg.eigvals(m)
        sym = scipy.linalg.eigvalsh(0.5*(m + m.T))
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise NumericalFailure("eigensolver failed: {}".format(exc))
    eigs = eigs[np.lexsort((eigs.imag, eigs.real))]
    scale = np.max(np.abs(eigs)) if eigs.size else 0.
    zero_tol = rtol*scale
    neg = eigs.real[eigs.real < -zero_tol]
    gap = float(-np.max(neg)) if neg.size else 0.
    return Spectrum(eigenvalues=eigs, symmetrized=np.sort(sym),
                    spectral_gap=gap, max_real=float(np.max(eigs.real)),
                    zero_tol=float(zero_tol))


def dissipator_spectrum(kind, basis, nthreads=1, supermat=None):
    """Spectrum of the superoperator matrix of D or Delta.

    A precomputed ``supermat`` of the same kind may be passed in.
    """
    kind = DissipatorKind.parse(kind)
    if supermat is None:
        supermat = superoperator_matrix(kind, basis, nthreads=nthreads)
    if kind is DissipatorKind.FULL_D:
        # D is symmetric; use the symmetric part to get exactly real output
        supermat = SuperOperatorMatrix(supermat.symmetric_part(), basis)
    return spectrum_of(supermat)


def kernel_basis(kind, basis, tol=1e-8, nthreads=1, supermat=None):
    """Orthonormal basis of the numerical null space.

    Singular values below ``tol*sigma_max`` are treated as zero.

    Returns
    -------
    numpy.ndarray((k, d^2))
        rows are orthonormal coordinate vectors (HSVectors)
    """
    if not 0 < tol < 1:
        raise ValueError("tol must lie in (0, 1), got {}".format(tol))
    if supermat is None:
        supermat = superoperator_matrix(kind, basis, nthreads=nthreads)
    try:
        _, s, vh = scipy.linalg.svd(supermat.matrix)
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise NumericalFailure("SVD failed: {}".format(exc))
    null = s < tol*s[0]
    logger.debug('numerical kernel dimension %i (tol=%g)', int(np.sum(null)), tol)
    return vh[null].copy()


def kernel_projection(rho, kernel, basis):
    """Orthogonal HS projection of rho onto the span of the kernel rows."""
    v = basis.vectorize(rho)
    return basis.devectorize(kernel.T @ (kernel @ v))
