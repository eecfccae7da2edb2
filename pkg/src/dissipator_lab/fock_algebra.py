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


"""Truncated ladder operators, Pauli matrices and field-spin products.

Conventions
-----------
The field is truncated to the Fock states |0>, ..., |N-1>. Composite
operators (a^dag a, a a^dag, and every product appearing inside the
dissipators) are always formed as products of the truncated N x N matrices;
the infinite-dimensional products are never truncated. In particular
a^dag |N-1> = 0 and [a, a^dag] = diag(1, ..., 1, -(N-1)).

System operators act on F (x) C^2 with the basis index (n, s) laid out
n-major: index 2*n for s_+ and 2*n+1 for s_-. The 2x2 spin blocks
rho_{n,n'} are therefore contiguous.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = ['TruncationConfig', 'SystemOperators', 'make_annihilation',
           'make_creation', 'number_operator', 'pauli', 'tensor',
           'lift_field', 'lift_spin', 'system_operators', 'basis_state',
           'basis_projector', 'field_block', 'spin_index']


@dataclass(frozen=True)
class TruncationConfig:
    """Number of retained Fock levels N; the system dimension is 2*N."""
    n_levels: int = 16

    def __post_init__(self):
        if int(self.n_levels) != self.n_levels or self.n_levels < 2:
            raise ValueError(
                "n_levels must be an integer >= 2, got {}".format(self.n_levels))

    @property
    def dim(self):
        return 2*self.n_levels


def _as_config(cfg):
    if isinstance(cfg, TruncationConfig):
        return cfg
    return TruncationConfig(cfg)


def _frozen(arr):
    arr.setflags(write=False)
    return arr


def make_annihilation(cfg):
    """Return a with a|n> = sqrt(n)|n-1>, i.e. (a)_{n-1,n} = sqrt(n)."""
    cfg = _as_config(cfg)
    diag = np.sqrt(np.arange(1, cfg.n_levels, dtype=np.float64))
    return np.diag(diag, 1).astype(np.complex128)


def make_creation(cfg):
    """Conjugate transpose of `make_annihilation`; a^dag|N-1> = 0."""
    return make_annihilation(cfg).conj().T.copy()


def number_operator(cfg):
    cfg = _as_config(cfg)
    return make_creation(cfg) @ make_annihilation(cfg)


_PAULI = {
    1: np.array([[0., 1.], [1., 0.]], dtype=np.complex128),
    2: np.array([[0., -1j], [1j, 0.]], dtype=np.complex128),
    3: np.array([[1., 0.], [0., -1.]], dtype=np.complex128),
}


def pauli(k):
    """Pauli matrix sigma_k for k in {1, 2, 3}; sigma_3 = diag(+1, -1)."""
    try:
        return _PAULI[k].copy()
    except (KeyError, TypeError):
        raise ValueError("Pauli index must be 1, 2 or 3, got {!r}".format(k))


def tensor(field, spin, cfg=None):
    """Field (x) spin product in n-major ordering.

    Parameters
    ----------
    field : numpy.ndarray((N, N))
    spin : numpy.ndarray((2, 2))
    cfg : TruncationConfig, optional
        if given, the field dimension is checked against it

    Returns
    -------
    numpy.ndarray((2*N, 2*N), dtype=numpy.complex128)
    """
    field = np.asarray(field)
    spin = np.asarray(spin)
    if field.ndim != 2 or field.shape[0] != field.shape[1]:
        raise ValueError("field operator must be a square matrix")
    if spin.shape != (2, 2):
        raise ValueError("spin matrix must be 2x2, got shape {}".format(spin.shape))
    if cfg is not None and field.shape[0] != _as_config(cfg).n_levels:
        raise ValueError("field operator has dimension {}, expected {}".format(
            field.shape[0], _as_config(cfg).n_levels))
    return np.kron(field, spin).astype(np.complex128)


def lift_field(field):
    return tensor(field, np.eye(2))


def lift_spin(spin, cfg):
    return tensor(np.eye(_as_config(cfg).n_levels), spin)


@dataclass(frozen=True)
class SystemOperators:
    """Lifted operators of one truncation, built once and shared read-only.

    ``number`` is a^dag a (x) I, ``anti_number`` is a a^dag (x) I, and
    ``sigma[k-1]`` is I (x) sigma_k.
    """
    cfg: TruncationConfig
    a: np.ndarray
    a_dag: np.ndarray
    number: np.ndarray
    anti_number: np.ndarray
    sigma: tuple
    identity: np.ndarray

    @property
    def dim(self):
        return self.cfg.dim


@lru_cache(maxsize=16)
def _system_operators(n_levels):
    cfg = TruncationConfig(n_levels)
    a = make_annihilation(cfg)
    ad = make_creation(cfg)
    return SystemOperators(
        cfg=cfg,
        a=_frozen(lift_field(a)),
        a_dag=_frozen(lift_field(ad)),
        number=_frozen(lift_field(ad @ a)),
        anti_number=_frozen(lift_field(a @ ad)),
        sigma=tuple(_frozen(lift_spin(pauli(k), cfg)) for k in (1, 2, 3)),
        identity=_frozen(np.eye(cfg.dim, dtype=np.complex128)))


def system_operators(cfg):
    """Cached `SystemOperators` for a truncation (config or level count)."""
    return _system_operators(_as_config(cfg).n_levels)


def spin_index(s):
    """Offset of the spin state inside a field block: 0 for s_+, 1 for s_-."""
    if s in (1, '+'):
        return 0
    if s in (-1, '-'):
        return 1
    raise ValueError("spin label must be +1/'+' or -1/'-', got {!r}".format(s))


def basis_state(cfg, n, s=1):
    """The basis vector |n, s_pm>."""
    cfg = _as_config(cfg)
    if not 0 <= n < cfg.n_levels:
        raise ValueError("Fock level {} outside 0..{}".format(n, cfg.n_levels-1))
    res = np.zeros(cfg.dim, dtype=np.complex128)
    res[2*n+spin_index(s)] = 1.
    return res


def basis_projector(cfg, n, s=1):
    """The rank-one projector |n, s_pm><n, s_pm|."""
    v = basis_state(cfg, n, s)
    return np.outer(v, v.conj())


def field_block(rho, n, m):
    """The 2x2 spin block rho_{n,m} = <n|rho|m>."""
    rho = np.asarray(rho)
    return rho[2*n:2*n+2, 2*m:2*m+2]
