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


"""Time integration of rho' = A(t) rho with conservation diagnostics.

Two methods are available: classical fixed-step RK4, and stepping with the
exact propagator exp(h M_A) (autonomous generators only). States are
re-symmetrized after every step; the trace is never renormalized, so trace
drift stays visible in the diagnostics.
"""

import enum
import logging
import math
from dataclasses import dataclass, fields

import numpy as np
import scipy.linalg

from ._util import ConfigurationError, NumericalFailure
from .dissipators import DissipatorKind, SuperOperatorMatrix
from .fock_algebra import TruncationConfig, system_operators
from .hamiltonian import liouvillian_apply, liouvillian_matrix, static_hamiltonian
from .hs_space import (HermitianBasis, as_hermitian, hermiticity_residual,
                       hs_inner, hs_norm, symmetrize)

logger = logging.getLogger(__name__)

__all__ = ['Method', 'IntegratorConfig', 'ObservableRecord', 'Trajectory',
           'observables', 'evolve', 'exact_propagator', 'norm_growth_rate',
           'analytic_norm_growth_rate', 'steady_state_projection', 'rk4_step']

# a step whose Hermiticity residual exceeds this is rejected
INSTABILITY_RESIDUAL = 1e-6


class Method(enum.Enum):
    RK4 = 'rk4'
    EXPM = 'expm'


@dataclass(frozen=True)
class IntegratorConfig:
    method: Method = Method.RK4
    step: float = 1e-3
    t_start: float = 0.
    t_end: float = 10.
    record_every: int = 1

    def __post_init__(self):
        object.__setattr__(self, 'method', Method(self.method))
        if not self.step > 0:
            raise ValueError("step must be positive, got {}".format(self.step))
        if not self.t_end > self.t_start:
            raise ValueError("t_end must exceed t_start")
        if int(self.record_every) != self.record_every or self.record_every < 1:
            raise ValueError("record_every must be a positive integer")

    def n_steps(self):
        span = self.t_end - self.t_start
        ratio = span/self.step
        nint = round(ratio)
        if nint >= 1 and abs(ratio-nint) <= 1e-9*ratio:
            return int(nint)
        return int(math.ceil(ratio))


@dataclass(frozen=True)
class ObservableRecord:
    trace: float
    purity: float
    hs_norm: float
    photon_number: float
    inversion: float
    min_eigenvalue: float


OBSERVABLE_NAMES = tuple(f.name for f in fields(ObservableRecord))


def observables(rho, ops=None):
    """Standard readouts of a Hermitian state."""
    rho = np.asarray(rho)
    if ops is None:
        ops = system_operators(TruncationConfig(rho.shape[-1]//2))
    try:
        evals = np.linalg.eigvalsh(symmetrize(rho))
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure("eigensolver failed: {}".format(exc))
    return ObservableRecord(
        trace=float(np.trace(rho).real),
        purity=hs_inner(rho, rho),
        hs_norm=hs_norm(rho),
        photon_number=hs_inner(ops.number, rho),
        inversion=hs_inner(ops.sigma[2], rho),
        min_eigenvalue=float(evals[0]))


@dataclass(frozen=True)
class Trajectory:
    """Recorded states with their observables."""
    times: np.ndarray
    states: np.ndarray
    records: tuple

    def __len__(self):
        return len(self.times)

    def observable(self, name):
        if name not in OBSERVABLE_NAMES:
            raise KeyError("unknown observable {!r}".format(name))
        return np.array([getattr(r, name) for r in self.records])

    def hs_norm_increments(self):
        return np.diff(self.observable('hs_norm'))

    def max_hermiticity_residual(self):
        return max(hermiticity_residual(s) for s in self.states)


class _Generator:
    # A(t) rho = G rho + rho G^dag + gamma (a rho a^dag [+ a^dag rho a]),
    # G = -i H - gamma/2 (a^dag a [+ a a^dag])
    def __init__(self, spec):
        ops = spec.operators
        gam = spec.params.gamma
        self._ops = ops
        self._spec = spec
        self._full = spec.dissipator is DissipatorKind.FULL_D
        self._gamma = gam
        loss = ops.number + ops.anti_number if self._full else ops.number
        self._g0 = -1j*static_hamiltonian(spec) - 0.5*gam*loss
        self._pumped = not spec.pumping.is_autonomous

    def __call__(self, t, rho):
        g = self._g0
        if self._pumped:
            pump = self._spec.pumping.evaluate(self._ops, t)
            g = g - 1j*self._spec.params.p*pump
        ops = self._ops
        res = g @ rho + rho @ g.conj().T
        if self._gamma != 0:
            jump = ops.a @ rho @ ops.a_dag
            if self._full:
                jump = jump + ops.a_dag @ rho @ ops.a
            res = res + self._gamma*jump
        return res


def rk4_step(fun, t, rho, h):
    k1 = fun(t, rho)
    k2 = fun(t + 0.5*h, rho + 0.5*h*k1)
    k3 = fun(t + 0.5*h, rho + 0.5*h*k2)
    k4 = fun(t + h, rho + h*k3)
    return rho + (h/6.)*(k1 + 2*k2 + 2*k3 + k4)


def _require_autonomous(spec):
    if not spec.pumping.is_autonomous:
        raise ConfigurationError(
            "the exact propagator needs a time-independent generator "
            "(pumping 'none')")


def exact_propagator(spec, t, basis=None, nthreads=1):
    """exp(t M_A) in the Hermitian basis (scaling and squaring)."""
    _require_autonomous(spec)
    if basis is None:
        basis = HermitianBasis(spec.dim)
    gen = liouvillian_matrix(spec, 0., basis, nthreads=nthreads)
    return SuperOperatorMatrix(scipy.linalg.expm(t*gen.matrix), basis)


def evolve(spec, rho0, cfg=IntegratorConfig()):
    """Integrate the master equation from ``rho0``.

    Parameters
    ----------
    spec : LiouvillianSpec
    rho0 : numpy.ndarray((d, d))
        Hermitian initial state
    cfg : IntegratorConfig

    Returns
    -------
    Trajectory

    Raises
    ------
    ConfigurationError
        if the exact propagator is requested for a time-dependent generator
    NumericalFailure
        if a step produces a Hermiticity residual above 1e-6; the exception
        carries ``suggested_step = step/2``
    """
    rho = as_hermitian(rho0)
    if rho.shape != (spec.dim, spec.dim):
        raise ValueError("initial state has shape {}, expected {}".format(
            rho.shape, (spec.dim, spec.dim)))
    nsteps = cfg.n_steps()
    h = (cfg.t_end - cfg.t_start)/nsteps
    ops = spec.operators
    logger.debug('%s integration: %i steps of %g, N=%i, dissipator=%s',
                 cfg.method.value, nsteps, h, spec.truncation.n_levels,
                 spec.dissipator.value)

    if cfg.method is Method.EXPM:
        prop = exact_propagator(spec, h)

        def advance(t, state):
            return prop.apply(state)
    else:
        gen = _Generator(spec)

        def advance(t, state):
            return rk4_step(gen, t, state, h)

    times, states, records = [cfg.t_start], [rho], [observables(rho, ops)]
    for i in range(1, nsteps+1):
        t = cfg.t_start + (i-1)*h
        rho = advance(t, rho)
        res = hermiticity_residual(rho)
        if not (res <= INSTABILITY_RESIDUAL and np.all(np.isfinite(rho))):
            raise NumericalFailure(
                "integration unstable at t={:.6g} (Hermiticity residual {:.3e});"
                " retry with step {:.6g}".format(t+h, res, h/2),
                suggested_step=h/2)
        rho = symmetrize(rho)
        if i % cfg.record_every == 0 or i == nsteps:
            times.append(cfg.t_start + i*h)
            states.append(rho)
            records.append(observables(rho, ops))
    return Trajectory(times=np.array(times), states=np.array(states),
                      records=tuple(records))


def norm_growth_rate(spec, rho0, h=1e-5):
    """Central difference of d/dt |rho|^2_HS at t=0 via exp(+-h M_A)."""
    _require_autonomous(spec)
    basis = HermitianBasis(spec.dim)
    gen = liouvillian_matrix(spec, 0., basis).matrix
    v0 = basis.vectorize(as_hermitian(rho0))
    fwd = scipy.linalg.expm(h*gen) @ v0
    bwd = scipy.linalg.expm(-h*gen) @ v0
    return float((fwd @ fwd - bwd @ bwd)/(2*h))


def analytic_norm_growth_rate(spec, rho0, t=0.):
    """2 <rho, A(t) rho>; the Hamiltonian part contributes nothing."""
    rho0 = as_hermitian(rho0)
    return 2*hs_inner(rho0, liouvillian_apply(spec, t, rho0))


def steady_state_projection(rho0, n_levels):
    """HS projection of rho0 onto ker D = span{I_F (x) S}.

    Equals (1/N) I_F (x) tr_F(rho0).
    """
    rho0 = np.asarray(rho0)
    if rho0.shape != (2*n_levels, 2*n_levels):
        raise ValueError("expected shape {}, got {}".format(
            (2*n_levels, 2*n_levels), rho0.shape))
    spin = np.einsum('nanb->ab', rho0.reshape(n_levels, 2, n_levels, 2))
    return np.kron(np.eye(n_levels), spin)/n_levels
