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


"""Executable certification of the algebraic properties of D and Delta.

Every check returns a `PropertyReport`. A report passes iff its
``max_violation`` does not exceed its ``threshold``. Checks draw their
samples from ``numpy.random.default_rng([seed, n_levels, stream])``, so a
check gives bit-identical results whether it runs alone or inside
`run_full_certification`, sequentially or in a thread pool.

Witnesses are stored as plain dicts::

    {"quantity": <name>, "dissipator": "full"|"delta",
     "inputs": [<matrix>, ...], "value": <float>}

with matrices in the row-major [re, im] layout of `matrix_to_json`;
`reverify_witness` recomputes ``value`` from ``inputs``.
"""

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from ._util import NumericalFailure, close, resolve_nthreads
from .dissipators import (DissipatorKind, apply_dissipator, eigenbasis_terms,
                          kernel_basis, quadratic_form, superoperator_matrix,
                          trace_form)
from .fock_algebra import (TruncationConfig, basis_projector, system_operators)
from .hamiltonian import (LiouvillianSpec, PhysicalParams, PumpingKind,
                          PumpingProfile, build_hamiltonian, commutator_action)
from .hs_space import (HermitianBasis, hs_inner, hs_norm, hs_norm_blocks,
                       matrix_from_json, matrix_to_json)

logger = logging.getLogger(__name__)

__all__ = ['PropertyReport', 'PaddedSupportSpec', 'check_symmetry_D',
           'check_nonpositivity_D', 'check_closed_form_identity',
           'check_trace_form_identity', 'check_delta_witnesses',
           'check_kernel_and_injectivity', 'check_kernel_tolerance_stability',
           'check_trace_annihilation', 'check_hs_norm_blocks',
           'run_full_certification', 'all_passed', 'reverify_witness',
           'reverify_report', 'evaluate_witness', 'delta_witness_values',
           'DEFAULT_LEVELS']

DEFAULT_LEVELS = (2, 4, 8, 16)
SAMPLE_SCALES = (0.1, 1., 10.)
# samples evaluated per dissipator application
_BATCH = 64
# largest d^2 for which the symmetry check also builds the dense matrix
_MATRIX_CHECK_LIMIT = 4096

FULL = DissipatorKind.FULL_D
DELTA = DissipatorKind.DELTA_ONLY


@dataclass(frozen=True)
class PropertyReport:
    property_id: str
    n_levels: int
    n_samples: int
    max_violation: float
    threshold: float
    seed: int
    witnesses: tuple = ()
    details: dict = field(default_factory=dict, compare=False)

    @property
    def passed(self):
        return self.max_violation <= self.threshold

    @property
    def verdict(self):
        return 'pass' if self.passed else 'fail'

    def to_dict(self):
        return {
            'property_id': self.property_id,
            'n': self.n_samples,
            'max_violation': float(self.max_violation),
            'threshold': float(self.threshold),
            'verdict': self.verdict,
            'witnesses': list(self.witnesses),
            'seed': int(self.seed),
            'truncation': {'n_levels': int(self.n_levels),
                           'dim': 2*int(self.n_levels)},
            'details': self.details,
        }

    @classmethod
    def from_dict(cls, obj):
        res = cls(property_id=obj['property_id'],
                  n_levels=obj['truncation']['n_levels'],
                  n_samples=obj['n'],
                  max_violation=obj['max_violation'],
                  threshold=obj['threshold'],
                  seed=obj['seed'],
                  witnesses=tuple(obj.get('witnesses', ())),
                  details=dict(obj.get('details', {})))
        if res.verdict != obj['verdict']:
            raise ValueError("inconsistent verdict for {}".format(res.property_id))
        return res


@dataclass(frozen=True)
class PaddedSupportSpec:
    """Hermitian matrices supported on Fock levels 0..max_level (both spins)."""
    max_level: int

    def __post_init__(self):
        if int(self.max_level) != self.max_level or self.max_level < 0:
            raise ValueError("max_level must be a nonnegative integer")

    def validate(self, cfg):
        if self.max_level > cfg.n_levels - 2:
            raise ValueError(
                "padded support up to level {} leaves no empty top level in a "
                "truncation with N={}".format(self.max_level, cfg.n_levels))
        return self

    def embed(self, cfg):
        """Orthonormal basis of the padded subspace, shape (m^2, d, d)."""
        self.validate(cfg)
        m = 2*(self.max_level+1)
        sub = HermitianBasis(m).elements()
        res = np.zeros((sub.shape[0], cfg.dim, cfg.dim), dtype=np.complex128)
        res[:, :m, :m] = sub
        return res


def _cfg(cfg):
    return cfg if isinstance(cfg, TruncationConfig) else TruncationConfig(cfg)


def _rng(seed, cfg, stream):
    return np.random.default_rng([int(seed), cfg.n_levels, stream])


def _hermitian_samples(rng, dim, nsamples):
    scales = np.array(SAMPLE_SCALES)[np.arange(nsamples) % len(SAMPLE_SCALES)]
    sd = (scales/np.sqrt(2.))[:, None, None]
    g = sd*(rng.normal(size=(nsamples, dim, dim))
            + 1j*rng.normal(size=(nsamples, dim, dim)))
    return g + np.conj(np.swapaxes(g, -1, -2))


def _witness(quantity, kind, inputs, value, **extra):
    res = {'quantity': quantity,
           'dissipator': DissipatorKind.parse(kind).value,
           'inputs': [matrix_to_json(m) for m in inputs],
           'value': float(value)}
    res.update(extra)
    return res


def _symmetry_residual(kind, r1, r2, ops):
    lhs = hs_inner(r1, apply_dissipator(kind, r2, ops))
    rhs = hs_inner(apply_dissipator(kind, r1, ops), r2)
    scale = hs_norm(r1)*hs_norm(r2)
    return np.abs(lhs-rhs)/np.where(scale > 0, scale, 1.)


def _normalized_form(kind, rho, ops):
    nrm2 = hs_norm(rho)**2
    return hs_inner(rho, apply_dissipator(kind, rho, ops))/np.where(nrm2 > 0, nrm2, 1.)


def _closed_form_deviation(kind, rho, ops):
    direct = hs_inner(rho, apply_dissipator(kind, rho, ops))
    closed, scale = eigenbasis_terms(kind, rho, ops)
    return abs(direct-closed)/max(scale, np.finfo(np.float64).tiny)


def _trace_form_deviation(kind, rho, ops):
    direct = hs_inner(rho, apply_dissipator(kind, rho, ops))
    nrm2 = hs_norm(rho)**2
    return abs(direct-trace_form(kind, rho, ops))/max(nrm2, np.finfo(np.float64).tiny)


def _trace_ratio(kind, rho, ops):
    nrm = hs_norm(rho)
    tr = np.trace(apply_dissipator(kind, rho, ops), axis1=-2, axis2=-1).real
    return np.abs(tr)/np.where(nrm > 0, nrm, 1.)


def _commutator_trace_ratio(ham, rho):
    nrm = hs_norm(ham)*hs_norm(rho)
    tr = np.trace(commutator_action(ham, rho), axis1=-2, axis2=-1).real
    return np.abs(tr)/np.where(nrm > 0, nrm, 1.)


_EVALUATORS = {
    'symmetry_residual': lambda k, x, ops: _symmetry_residual(k, x[0], x[1], ops),
    'normalized_form': lambda k, x, ops: _normalized_form(k, x[0], ops),
    'closed_form_deviation': lambda k, x, ops: _closed_form_deviation(k, x[0], ops),
    'trace_form_deviation': lambda k, x, ops: _trace_form_deviation(k, x[0], ops),
    'inner_product': lambda k, x, ops: hs_inner(x[0], apply_dissipator(k, x[1], ops)),
    'quadratic_form': lambda k, x, ops: quadratic_form(k, x[0], ops),
    'image_norm': lambda k, x, ops: hs_norm(apply_dissipator(k, x[0], ops)),
    'trace_ratio': lambda k, x, ops: _trace_ratio(k, x[0], ops),
    'commutator_trace_ratio': lambda k, x, ops: _commutator_trace_ratio(x[0], x[1]),
    'block_norm_deviation': lambda k, x, ops: abs(
        hs_norm_blocks(x[0], ops.cfg.n_levels) - hs_norm(x[0]))/hs_norm(x[0]),
}


def evaluate_witness(witness):
    """Recompute the quantity stored in a witness."""
    try:
        func = _EVALUATORS[witness['quantity']]
    except KeyError:
        raise ValueError("unknown witness quantity {!r}".format(witness.get('quantity')))
    inputs = [matrix_from_json(m) for m in witness['inputs']]
    ops = system_operators(TruncationConfig(inputs[0].shape[-1]//2))
    return float(func(DissipatorKind.parse(witness['dissipator']), inputs, ops))


def reverify_witness(witness, atol=1e-12, rtol=1e-9):
    return close(evaluate_witness(witness), witness['value'], atol=atol, rtol=rtol)


def reverify_report(report):
    """True iff every witness of a report (or its dict form) re-verifies."""
    if isinstance(report, dict):
        report = PropertyReport.from_dict(report)
    return all(reverify_witness(w) for w in report.witnesses)


def check_symmetry_D(cfg, n_samples=1000, seed=0, nthreads=1):
    """Bilinear symmetry <rho1, D rho2> = <D rho1, rho2> on random pairs.

    The residual is normalized by |rho1| |rho2|. For d^2 <= 4096 the
    transpose residual of the dense superoperator matrix is included.
    """
    cfg = _cfg(cfg)
    ops = system_operators(cfg)
    rng = _rng(seed, cfg, 0)
    r1 = _hermitian_samples(rng, cfg.dim, n_samples)
    r2 = _hermitian_samples(rng, cfg.dim, n_samples)
    res = _symmetry_residual(FULL, r1, r2, ops)
    worst = int(np.argmax(res))
    p0, p1 = basis_projector(cfg, 0), basis_projector(cfg, 1)
    details = {
        'projector_pair': [hs_inner(p0, apply_dissipator(FULL, p1, ops)),
                           hs_inner(apply_dissipator(FULL, p0, ops), p1)],
    }
    violation = float(res[worst])
    if cfg.dim**2 <= _MATRIX_CHECK_LIMIT:
        tres = superoperator_matrix(
            FULL, HermitianBasis(cfg.dim), nthreads=nthreads).transpose_residual()
        details['transpose_residual'] = tres
        violation = max(violation, tres)
    return PropertyReport(
        'symmetry_D', cfg.n_levels, n_samples, violation, 1e-10, seed,
        witnesses=(_witness('symmetry_residual', FULL, (r1[worst], r2[worst]),
                            res[worst]),),
        details=details)


def _two_level_family(cfg):
    """Diagonal states on two Fock levels, one stack of 12 per level pair."""
    spins = (np.diag([1., 0.]), np.diag([0., 1.]), np.eye(2))
    weights = ((1., 0.), (2., 1.), (1., -1.), (1., 2.))
    for i in range(cfg.n_levels):
        for j in range(i+1, cfg.n_levels):
            res = []
            for spin in spins:
                for wi, wj in weights:
                    fmat = np.zeros((cfg.n_levels, cfg.n_levels))
                    fmat[i, i], fmat[j, j] = wi, wj
                    res.append(np.kron(fmat, spin))
            yield np.array(res, dtype=np.complex128)


def check_nonpositivity_D(cfg, n_samples=1000, seed=0):
    """<rho, D rho> <= 1e-12 |rho|^2 on random Hermitian samples and on all
    diagonal states occupying two Fock levels."""
    cfg = _cfg(cfg)
    ops = system_operators(cfg)
    rng = _rng(seed, cfg, 1)
    samples = _hermitian_samples(rng, cfg.dim, n_samples)
    batches = itertools.chain(
        (samples[k:k+_BATCH] for k in range(0, n_samples, _BATCH)),
        _two_level_family(cfg))
    count, worst, worst_rho, lowest = 0, -np.inf, None, np.inf
    for batch in batches:
        forms = _normalized_form(FULL, batch, ops)
        k = int(np.argmax(forms))
        if forms[k] > worst:
            worst, worst_rho = float(forms[k]), batch[k]
        lowest = min(lowest, float(np.min(forms)))
        count += len(batch)
    return PropertyReport(
        'nonpositivity_D', cfg.n_levels, count, max(worst, 0.), 1e-12, seed,
        witnesses=(_witness('normalized_form', FULL, (worst_rho,), worst),),
        details={'max_normalized_form': worst,
                 'min_normalized_form': lowest})


def check_closed_form_identity(cfg, n_samples=500, seed=0, kind=FULL):
    """Direct quadratic form against the eigenbasis closed form.

    For D the closed form is -sum |a_ik|^2 (rho_i - rho_k)^2, for Delta it is
    sum |a_ik|^2 (rho_i rho_k - rho_k^2). Deviations are measured relative to
    the sum of the absolute values of the terms.
    """
    cfg = _cfg(cfg)
    kind = DissipatorKind.parse(kind)
    ops = system_operators(cfg)
    rng = _rng(seed, cfg, 2 if kind is FULL else 3)
    samples = _hermitian_samples(rng, cfg.dim, n_samples)
    dev = np.array([_closed_form_deviation(kind, rho, ops) for rho in samples])
    worst = int(np.argmax(dev))
    return PropertyReport(
        'closed_form_identity_' + kind.value, cfg.n_levels, n_samples,
        float(dev[worst]), 1e-8, seed,
        witnesses=(_witness('closed_form_deviation', kind, (samples[worst],),
                            dev[worst]),))


def check_trace_form_identity(cfg, n_samples=200, seed=0, kind=FULL):
    """<rho, L rho> against its cyclically rearranged trace expression."""
    cfg = _cfg(cfg)
    kind = DissipatorKind.parse(kind)
    ops = system_operators(cfg)
    rng = _rng(seed, cfg, 4 if kind is FULL else 5)
    samples = _hermitian_samples(rng, cfg.dim, n_samples)
    dev = np.array([_trace_form_deviation(kind, rho, ops) for rho in samples])
    worst = int(np.argmax(dev))
    return PropertyReport(
        'trace_form_identity_' + kind.value, cfg.n_levels, n_samples,
        float(dev[worst]), 1e-10, seed,
        witnesses=(_witness('trace_form_deviation', kind, (samples[worst],),
                            dev[worst]),))


def delta_witness_values(cfg):
    """The fixed counterexamples for Delta and their values under D.

    Returns a dict of (measured, expected) pairs and the states used.
    """
    cfg = _cfg(cfg)
    ops = system_operators(cfg)
    p0, p1 = basis_projector(cfg, 0), basis_projector(cfg, 1)
    pos = 2*p0 + p1
    return {
        'states': {'rho1': p0, 'rho2': p1, 'positivity_state': pos},
        'delta_asymmetry': (
            (hs_inner(p0, apply_dissipator(DELTA, p1, ops)),
             hs_inner(apply_dissipator(DELTA, p0, ops), p1)), (1., 0.)),
        'delta_positivity': (quadratic_form(DELTA, pos, ops), 1.),
        'full_symmetry': (
            (hs_inner(p0, apply_dissipator(FULL, p1, ops)),
             hs_inner(apply_dissipator(FULL, p0, ops), p1)), (1., 1.)),
        # a^dag|1> is cut off when N=2
        'full_form': (quadratic_form(FULL, pos, ops),
                      -3. if cfg.n_levels >= 3 else -1.),
    }


def check_delta_witnesses(cfg, seed=0):
    """Delta is neither symmetric nor nonpositive; D is on the same inputs."""
    cfg = _cfg(cfg)
    vals = delta_witness_values(cfg)
    st = vals['states']
    dev = []
    for key in ('delta_asymmetry', 'delta_positivity', 'full_symmetry', 'full_form'):
        got, want = vals[key]
        dev.append(float(np.max(np.abs(np.subtract(got, want)))))
    witnesses = (
        _witness('inner_product', DELTA, (st['rho1'], st['rho2']),
                 vals['delta_asymmetry'][0][0], expected=1.),
        _witness('inner_product', DELTA, (st['rho2'], st['rho1']),
                 hs_inner(st['rho2'], apply_dissipator(DELTA, st['rho1'])),
                 expected=0.),
        _witness('quadratic_form', DELTA, (st['positivity_state'],),
                 vals['delta_positivity'][0], expected=1.),
        _witness('quadratic_form', FULL, (st['positivity_state'],),
                 vals['full_form'][0], expected=vals['full_form'][1]),
    )
    details = {key: {'measured': np.atleast_1d(vals[key][0]).astype(float).tolist(),
                     'expected': np.atleast_1d(vals[key][1]).astype(float).tolist()}
               for key in ('delta_asymmetry', 'delta_positivity',
                           'full_symmetry', 'full_form')}
    return PropertyReport('delta_witnesses', cfg.n_levels, len(witnesses),
                          max(dev), 1e-12, seed, witnesses=witnesses,
                          details=details)


def _expected_kernel(cfg, basis):
    ops = system_operators(cfg)
    mats = np.array([ops.identity] + list(ops.sigma))
    return basis.vectorize(mats)/np.sqrt(cfg.dim)


def _restricted_singular_values(cfg, pad, ops):
    embedded = pad.embed(cfg)
    basis = HermitianBasis(cfg.dim)
    images = basis.vectorize(apply_dissipator(FULL, embedded, ops))
    try:
        return scipy.linalg.svd(images.T, compute_uv=False)
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise NumericalFailure("SVD failed: {}".format(exc))


def check_kernel_and_injectivity(cfg, pad=None, tol=1e-8, nthreads=1, seed=0):
    """Kernel of D and injectivity of D on the padded-support subspace.

    (a) the numerical kernel of the D matrix must be spanned by
    I_F (x) {I, sigma_1, sigma_2, sigma_3}; (b) the restriction of D to
    Hermitian matrices supported on levels 0..M, M <= N-2, must have a
    smallest singular value above ``tol`` times its largest one.
    """
    cfg = _cfg(cfg)
    pad = PaddedSupportSpec(cfg.n_levels-2) if pad is None else pad
    pad.validate(cfg)
    ops = system_operators(cfg)
    basis = HermitianBasis(cfg.dim)
    supermat = superoperator_matrix(FULL, basis, nthreads=nthreads)
    kern = kernel_basis(FULL, basis, tol=tol, supermat=supermat)
    expected = _expected_kernel(cfg, basis)
    kdim = kern.shape[0]
    if kdim == expected.shape[0]:
        span_res = float(np.max(np.abs(kern.T @ kern - expected.T @ expected)))
    else:
        span_res = 1.
    sz = basis.vectorize(ops.sigma[2])
    membership = float(np.max(np.abs(kern.T @ (kern @ sz) - sz))) if kdim else 1.
    sv = _restricted_singular_values(cfg, pad, ops)
    sigma_min, sigma_max = float(sv[-1]), float(sv[0])
    injective = sigma_min > tol*sigma_max
    violation = max(span_res, membership, 0. if kdim == 4 else 1.,
                    0. if injective else 1.)
    logger.debug('N=%i: kernel dim %i, restricted sigma_min %g',
                 cfg.n_levels, kdim, sigma_min)
    return PropertyReport(
        'kernel_injectivity', cfg.n_levels, 1, violation, 1e-8, seed,
        witnesses=(_witness('image_norm', FULL, (ops.sigma[2],),
                            hs_norm(apply_dissipator(FULL, ops.sigma[2], ops))),),
        details={'kernel_dim': kdim, 'span_residual': span_res,
                 'sigma3_membership_residual': membership,
                 'padded_max_level': pad.max_level,
                 'restricted_sigma_min': sigma_min,
                 'restricted_sigma_max': sigma_max, 'tol': tol})


def check_kernel_tolerance_stability(cfg, pad=None,
                                     tols=(1e-10, 1e-9, 1e-8, 1e-7, 1e-6),
                                     nthreads=1, seed=0):
    """Kernel dimension and the singular-value split are stable in tol.

    For every tol the kernel dimension must be 4, the restricted map must be
    injective, and the smallest singular value above the cut (the gap of D)
    may vary by at most 20%.
    """
    cfg = _cfg(cfg)
    pad = PaddedSupportSpec(cfg.n_levels-2) if pad is None else pad
    pad.validate(cfg)
    ops = system_operators(cfg)
    basis = HermitianBasis(cfg.dim)
    try:
        sfull = scipy.linalg.svd(
            superoperator_matrix(FULL, basis, nthreads=nthreads).matrix,
            compute_uv=False)
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise NumericalFailure("SVD failed: {}".format(exc))
    srest = _restricted_singular_values(cfg, pad, ops)
    dims, gaps, injective = [], [], []
    for tol in tols:
        cut = tol*sfull[0]
        dims.append(int(np.sum(sfull < cut)))
        gaps.append(float(np.min(sfull[sfull >= cut])))
        injective.append(bool(srest[-1] > tol*srest[0]))
    spread = max(gaps)/min(gaps) - 1.
    violation = spread if (all(dm == 4 for dm in dims) and all(injective)) else 1.
    return PropertyReport(
        'kernel_tolerance_stability', cfg.n_levels, len(tols), violation, 0.2,
        seed, details={'tols': list(tols), 'kernel_dims': dims,
                       'smallest_nonzero_singular_values': gaps,
                       'restricted_injective': injective,
                       'restricted_sigma_min': float(srest[-1])})


def check_trace_annihilation(cfg, n_samples=200, seed=0, spec=None):
    """tr(D rho), tr(Delta rho) and tr(-i[H(t), rho]) vanish.

    The dissipator traces are normalized by |rho|, the commutator trace by
    |H| |rho|. H(t) is evaluated at random times of a driven model.
    """
    cfg = _cfg(cfg)
    ops = system_operators(cfg)
    if spec is None:
        spec = LiouvillianSpec(
            params=PhysicalParams(omega_c=1., omega_a=0.9, p=0.2, gamma=1.),
            pumping=PumpingProfile(PumpingKind.CAVITY, amplitude=0.5,
                                   frequency=1.1),
            truncation=cfg)
    rng = _rng(seed, cfg, 6)
    samples = _hermitian_samples(rng, cfg.dim, n_samples)
    times = rng.uniform(0., 20., n_samples)
    witnesses, worst_vals = [], []
    for kind in (FULL, DELTA):
        ratio = _trace_ratio(kind, samples, ops)
        i = int(np.argmax(ratio))
        worst_vals.append(float(ratio[i]))
        witnesses.append(_witness('trace_ratio', kind, (samples[i],), ratio[i]))
    hams = np.array([build_hamiltonian(spec, t) for t in times])
    ratio = _commutator_trace_ratio(hams, samples)
    i = int(np.argmax(ratio))
    worst_vals.append(float(ratio[i]))
    witnesses.append(_witness('commutator_trace_ratio', FULL,
                              (hams[i], samples[i]), ratio[i], time=float(times[i])))
    return PropertyReport(
        'trace_annihilation', cfg.n_levels, n_samples, max(worst_vals), 1e-12,
        seed, witnesses=tuple(witnesses),
        details={'dissipator_D': worst_vals[0], 'dissipator_delta': worst_vals[1],
                 'commutator': worst_vals[2]})


def check_hs_norm_blocks(cfg, n_samples=100, seed=0):
    """The HS norm equals its spin-block decomposition."""
    cfg = _cfg(cfg)
    rng = _rng(seed, cfg, 7)
    samples = _hermitian_samples(rng, cfg.dim, n_samples)
    full = hs_norm(samples)
    blocks = np.array([hs_norm_blocks(rho, cfg.n_levels) for rho in samples])
    dev = np.abs(blocks-full)/full
    worst = int(np.argmax(dev))
    return PropertyReport(
        'hs_norm_blocks', cfg.n_levels, n_samples, float(dev[worst]), 1e-12, seed,
        witnesses=(_witness('block_norm_deviation', FULL, (samples[worst],),
                            dev[worst]),))


def _tasks(n_levels, seed, n_samples):
    scale = {} if n_samples is None else {'n_samples': n_samples}
    res = []
    for n in n_levels:
        cfg = TruncationConfig(n)
        res += [
            (check_symmetry_D, cfg, dict(seed=seed, **scale)),
            (check_nonpositivity_D, cfg, dict(seed=seed, **scale)),
            (check_closed_form_identity, cfg, dict(seed=seed, kind=FULL, **scale)),
            (check_closed_form_identity, cfg, dict(seed=seed, kind=DELTA, **scale)),
            (check_trace_form_identity, cfg, dict(seed=seed, kind=FULL, **scale)),
            (check_trace_form_identity, cfg, dict(seed=seed, kind=DELTA, **scale)),
            (check_delta_witnesses, cfg, dict(seed=seed)),
            (check_kernel_and_injectivity, cfg, dict(seed=seed)),
            (check_kernel_tolerance_stability, cfg, dict(seed=seed)),
            (check_trace_annihilation, cfg, dict(seed=seed, **scale)),
            (check_hs_norm_blocks, cfg, dict(seed=seed, **scale)),
        ]
    return res


def run_full_certification(n_levels=DEFAULT_LEVELS, seed=0, nthreads=1,
                           n_samples=None):
    """Run every check for every truncation.

    Parameters
    ----------
    n_levels : sequence of int
    seed : int
    nthreads : int
        checks run concurrently on this many threads; 0 means all cores
    n_samples : int, optional
        overrides the per-check default sample counts

    Returns
    -------
    list of PropertyReport, in a fixed order independent of ``nthreads``
    """
    tasks = _tasks(n_levels, seed, n_samples)
    nthreads = resolve_nthreads(nthreads)
    logger.debug('running %i checks on %i thread(s)', len(tasks), nthreads)

    def run(task):
        func, cfg, kwargs = task
        rep = func(cfg, **kwargs)
        logger.debug('%s N=%i: %s (%.3e / %.1e)', rep.property_id,
                     rep.n_levels, rep.verdict, rep.max_violation, rep.threshold)
        return rep

    if nthreads == 1:
        return [run(task) for task in tasks]
    with ThreadPoolExecutor(max_workers=nthreads) as ex:
        return list(ex.map(run, tasks))


def all_passed(reports):
    return all(rep.passed for rep in reports)
