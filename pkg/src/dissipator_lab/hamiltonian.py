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


"""Hamiltonian H(t), pumping profiles and the Liouvillian A(t).

    H(t) = omega_c a^dag a + 1/2 omega_a sigma_3 + p [sigma_1 (a + a^dag) + A^e(t)]
    A(t) rho = -i [H(t), rho] + gamma L rho,   L in {D, Delta}

The pumping A^e(t) enters multiplied by p, as part of V(t). Scale the drive
amplitude accordingly.
"""

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .dissipators import DissipatorKind, apply_dissipator, superoperator_matrix
from .fock_algebra import TruncationConfig, system_operators
from .hs_space import as_hermitian, symmetrize

__all__ = ['PhysicalParams', 'PumpingKind', 'PumpingProfile', 'LiouvillianSpec',
           'build_hamiltonian', 'static_hamiltonian', 'commutator_action',
           'liouvillian_apply', 'commutator_superoperator', 'liouvillian_matrix']


@dataclass(frozen=True)
class PhysicalParams:
    """Model constants.

    The constructor accepts any finite values with omega_c, omega_a and
    gamma nonnegative, so that individual terms can be switched off in
    experiments. `check_physical` enforces the strict model invariants
    omega_c > 0, omega_a > 0, gamma > 0.
    """
    omega_c: float = 1.
    omega_a: float = 1.
    p: float = 0.
    gamma: float = 1.

    def __post_init__(self):
        for name in ('omega_c', 'omega_a', 'p', 'gamma'):
            val = getattr(self, name)
            if not math.isfinite(val):
                raise ValueError("{} must be finite, got {}".format(name, val))
        for name in ('omega_c', 'omega_a', 'gamma'):
            if getattr(self, name) < 0:
                raise ValueError("{} must be nonnegative".format(name))

    def check_physical(self):
        for name in ('omega_c', 'omega_a', 'gamma'):
            if not getattr(self, name) > 0:
                raise ValueError("{} must be positive, got {}".format(
                    name, getattr(self, name)))
        return self


class PumpingKind(enum.Enum):
    NONE = 'none'
    CAVITY = 'cavity'
    ATOM = 'atom'
    SCALAR = 'scalar'
    CUSTOM = 'custom'


@dataclass(frozen=True)
class PumpingProfile:
    """The pumping term A^e(t).

    - CAVITY: E cos(omega_d t) (a + a^dag) (x) I
    - ATOM:   E cos(omega_d t) I (x) sigma_1
    - SCALAR: E cos(omega_d t) Identity (commutes with everything)
    - CUSTOM: ``callback(t)`` returning a Hermitian d x d matrix; the
      callback must be re-entrant
    """
    kind: PumpingKind = PumpingKind.NONE
    amplitude: float = 0.
    frequency: float = 0.
    callback: Optional[Callable[[float], np.ndarray]] = field(
        default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'kind', PumpingKind(self.kind))
        if self.kind is PumpingKind.CUSTOM and self.callback is None:
            raise ValueError("custom pumping needs a callback")
        if not (math.isfinite(self.amplitude) and math.isfinite(self.frequency)):
            raise ValueError("drive amplitude and frequency must be finite")

    @property
    def is_autonomous(self):
        return self.kind is PumpingKind.NONE

    def evaluate(self, ops, t):
        """A^e(t) as a d x d matrix, or None if there is no pumping."""
        kind = self.kind
        if kind is PumpingKind.NONE:
            return None
        if kind is PumpingKind.CUSTOM:
            res = np.asarray(self.callback(t))
            if res.shape != (ops.dim, ops.dim):
                raise ValueError("custom pumping has shape {}, expected {}".format(
                    res.shape, (ops.dim, ops.dim)))
            return as_hermitian(res)
        env = self.amplitude*math.cos(self.frequency*t)
        if kind is PumpingKind.CAVITY:
            return env*(ops.a + ops.a_dag)
        if kind is PumpingKind.ATOM:
            return env*ops.sigma[0]
        return env*ops.identity


@dataclass(frozen=True)
class LiouvillianSpec:
    params: PhysicalParams = PhysicalParams()
    pumping: PumpingProfile = PumpingProfile()
    dissipator: DissipatorKind = DissipatorKind.FULL_D
    truncation: TruncationConfig = TruncationConfig()

    def __post_init__(self):
        object.__setattr__(self, 'dissipator',
                           DissipatorKind.parse(self.dissipator))

    @property
    def dim(self):
        return self.truncation.dim

    @property
    def operators(self):
        return system_operators(self.truncation)


def static_hamiltonian(spec):
    """H_0 + p sigma_1 (a + a^dag), the part of H(t) without pumping."""
    ops = spec.operators
    prm = spec.params
    return (prm.omega_c*ops.number + 0.5*prm.omega_a*ops.sigma[2]
            + prm.p*((ops.a + ops.a_dag) @ ops.sigma[0]))


def build_hamiltonian(spec, t=0.):
    """H(t) as a Hermitian d x d matrix."""
    res = static_hamiltonian(spec)
    pump = spec.pumping.evaluate(spec.operators, t)
    if pump is not None:
        res = res + spec.params.p*pump
    return as_hermitian(res)


def commutator_action(ham, rho):
    """-i [H, rho]."""
    ham = np.asarray(ham)
    rho = np.asarray(rho)
    if ham.shape[-2:] != rho.shape[-2:]:
        raise ValueError("dimension mismatch: H {} vs rho {}".format(
            ham.shape, rho.shape))
    return symmetrize(-1j*(ham @ rho - rho @ ham))


def liouvillian_apply(spec, t, rho):
    """A(t) rho = -i [H(t), rho] + gamma L rho."""
    rho = np.asarray(rho)
    if rho.shape[-2:] != (spec.dim, spec.dim):
        raise ValueError("expected matrices of size {}, got shape {}".format(
            spec.dim, rho.shape))
    res = commutator_action(build_hamiltonian(spec, t), rho)
    if spec.params.gamma != 0:
        res = res + spec.params.gamma*apply_dissipator(
            spec.dissipator, rho, spec.operators)
    return res


def commutator_superoperator(ham, basis, nthreads=1):
    """Matrix of -i[H, .]; antisymmetric in an orthonormal Hermitian basis."""
    return superoperator_matrix(lambda rho: commutator_action(ham, rho),
                                basis, nthreads=nthreads)


def liouvillian_matrix(spec, t, basis, nthreads=1):
    return superoperator_matrix(lambda rho: liouvillian_apply(spec, t, rho),
                                basis, nthreads=nthreads)
