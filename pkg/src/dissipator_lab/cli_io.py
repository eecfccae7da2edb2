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


"""Command line interface.

    dissipator-lab [--config FILE] [-v] verify   --n-levels 2,4,8,16 --seed 0 --out report.json
    dissipator-lab [--config FILE] [-v] spectrum --n-levels 8 --dissipator full --out eigs.csv --summary summary.json
    dissipator-lab [--config FILE] [-v] evolve   --n-levels 8 ... --out traj.csv
    dissipator-lab [--config FILE] [-v] witness  --n-levels 4 --out witness.json

The optional config file is a flat JSON object whose keys are the long
option names with dashes replaced by underscores. Values given on the
command line override values from the file.

Exit codes: 0 success / all properties pass, 1 a property failed,
2 invalid configuration, 3 numerical failure.
"""

import argparse
import json
import logging
import os
import sys
import tempfile
from dataclasses import asdict, dataclass, fields

import numpy as np

from . import __version__
from ._util import ConfigurationError, NumericalFailure
from .dissipators import (DENSE_LIMIT, DissipatorKind, apply_dissipator,
                          dissipator_spectrum, kernel_basis,
                          superoperator_matrix)
from .evolution import OBSERVABLE_NAMES, IntegratorConfig, Method, evolve
from .fock_algebra import TruncationConfig, basis_projector
from .hamiltonian import (LiouvillianSpec, PhysicalParams, PumpingKind,
                          PumpingProfile)
from .hs_space import HermitianBasis, hs_inner, matrix_to_json, random_density
from .verification import (DEFAULT_LEVELS, all_passed, check_delta_witnesses,
                           delta_witness_values, run_full_certification)

logger = logging.getLogger(__name__)

__all__ = ['RunConfig', 'load_config', 'build_parser', 'cmd_verify',
           'cmd_spectrum', 'cmd_evolve', 'cmd_witness', 'main',
           'EXIT_OK', 'EXIT_FAILED', 'EXIT_CONFIG', 'EXIT_NUMERICAL']

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3

COMMANDS = ('verify', 'spectrum', 'evolve', 'witness')


@dataclass(frozen=True)
class RunConfig:
    """All settings of one CLI invocation, after merging file and flags."""
    command: str
    n_levels: tuple = None
    seed: int = 0
    samples: int = None
    nthreads: int = 0
    out: str = None
    summary: str = None
    metadata: str = None
    dissipator: str = 'full'
    omega_c: float = 1.
    omega_a: float = 1.
    p: float = 0.
    gamma: float = 1.
    pumping: str = 'none'
    drive_amp: float = 0.
    drive_freq: float = 0.
    initial: str = 'vacuum'
    method: str = 'rk4'
    t_start: float = 0.
    t_end: float = 10.
    step: float = 1e-3
    record_every: int = 1
    dump_times: tuple = ()
    dump_out: str = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ConfigurationError("unknown command {!r}".format(self.command))
        levels = self.n_levels
        if levels is None:
            levels = DEFAULT_LEVELS if self.command == 'verify' else (8,)
        object.__setattr__(self, 'n_levels', _parse_levels(levels))
        object.__setattr__(self, 'dump_times', _parse_floats(self.dump_times))
        if self.command != 'verify' and len(self.n_levels) != 1:
            raise ConfigurationError(
                "{} takes a single --n-levels value".format(self.command))
        for name, low in (('seed', 0), ('nthreads', 0), ('record_every', 1),
                          ('samples', 1)):
            val = getattr(self, name)
            if val is None and name == 'samples':
                continue
            if not isinstance(val, int) or isinstance(val, bool) or val < low:
                raise ConfigurationError("{} must be an integer >= {}".format(name, low))
        if self.dump_times and self.dump_out is None:
            raise ConfigurationError("--dump-times needs --dump-out")
        try:
            DissipatorKind.parse(self.dissipator)
            PumpingKind(self.pumping)
            Method(self.method)
            if self.command == 'evolve':
                self.physical_params().check_physical()
            if self.needs_dense_matrix():
                for n in self.n_levels:
                    if TruncationConfig(n).dim**2 > DENSE_LIMIT:
                        raise ConfigurationError(
                            "N={} exceeds the dense superoperator limit "
                            "needed by {}".format(n, self.command))
        except (TypeError, ValueError) as exc:
            raise ConfigurationError(str(exc))

    def needs_dense_matrix(self):
        return (self.command in ('verify', 'spectrum')
                or (self.command == 'evolve' and self.method == 'expm'))

    def truncation(self):
        return TruncationConfig(self.n_levels[0])

    def physical_params(self):
        return PhysicalParams(omega_c=float(self.omega_c),
                              omega_a=float(self.omega_a),
                              p=float(self.p), gamma=float(self.gamma))

    def liouvillian_spec(self):
        return LiouvillianSpec(
            params=self.physical_params(),
            pumping=PumpingProfile(PumpingKind(self.pumping),
                                   amplitude=float(self.drive_amp),
                                   frequency=float(self.drive_freq)),
            dissipator=self.dissipator,
            truncation=self.truncation())

    def integrator(self):
        return IntegratorConfig(method=Method(self.method), step=float(self.step),
                                t_start=float(self.t_start),
                                t_end=float(self.t_end),
                                record_every=int(self.record_every))


_FIELDS = frozenset(f.name for f in fields(RunConfig)) - {'command'}


def _parse_levels(value):
    if isinstance(value, str):
        value = [v for v in value.split(',') if v.strip()]
    elif isinstance(value, int):
        value = [value]
    try:
        res = tuple(int(v) for v in value)
    except (TypeError, ValueError):
        raise ConfigurationError("invalid --n-levels {!r}".format(value))
    if not res:
        raise ConfigurationError("--n-levels must not be empty")
    for n in res:
        if n < 2:
            raise ConfigurationError("truncation needs at least 2 levels, got {}".format(n))
    return res


def _parse_floats(value):
    if isinstance(value, str):
        value = [v for v in value.split(',') if v.strip()]
    try:
        return tuple(float(v) for v in value)
    except (TypeError, ValueError):
        raise ConfigurationError("invalid list of times {!r}".format(value))


def load_config(path):
    """Read a flat JSON config file into a dict of RunConfig fields."""
    try:
        with open(path) as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigurationError("cannot read config file {}: {}".format(path, exc))
    if not isinstance(data, dict):
        raise ConfigurationError("config file must contain a JSON object")
    unknown = sorted(set(data) - _FIELDS)
    if unknown:
        raise ConfigurationError("unknown config keys: {}".format(', '.join(unknown)))
    return data


def parse_initial_state(spec, cfg):
    """vacuum | fock:<n>[:+|-] | random:<seed>"""
    kind, _, arg = spec.partition(':')
    try:
        if kind == 'vacuum' and not arg:
            return basis_projector(cfg, 0, -1)
        if kind == 'fock':
            level, _, spin = arg.partition(':')
            return basis_projector(cfg, int(level), spin or '+')
        if kind == 'random':
            return random_density(cfg.dim, int(arg))
    except ValueError as exc:
        raise ConfigurationError("invalid initial state {!r}: {}".format(spec, exc))
    raise ConfigurationError(
        "initial state must be vacuum, fock:<n>[:+|-] or random:<seed>, got {!r}"
        .format(spec))


def _fmt(x):
    return format(float(x), '.17g')


def write_atomic(path, text):
    """Write ``text`` to ``path`` via a temporary file and os.replace."""
    dirname = os.path.dirname(os.path.abspath(path))
    try:
        fd, tmp = tempfile.mkstemp(dir=dirname, prefix='.tmp-',
                                   suffix=os.path.basename(path))
    except OSError as exc:
        raise ConfigurationError("cannot write {}: {}".format(path, exc))
    try:
        with os.fdopen(fd, 'w', newline='') as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise
    logger.info('wrote %s', path)


def write_json(path, obj):
    write_atomic(path, json.dumps(obj, indent=2) + '\n')


def write_csv(path, header, rows):
    lines = [','.join(header)]
    lines += [','.join(_fmt(x) for x in row) for row in rows]
    write_atomic(path, '\n'.join(lines) + '\n')


def _require(cfg, *names):
    for name in names:
        if getattr(cfg, name) is None:
            raise ConfigurationError("{} needs --{}".format(
                cfg.command, name.replace('_', '-')))


def cmd_verify(cfg):
    _require(cfg, 'out')
    reports = run_full_certification(cfg.n_levels, seed=cfg.seed,
                                     nthreads=cfg.nthreads,
                                     n_samples=cfg.samples)
    ok = all_passed(reports)
    for rep in reports:
        print('{:<32} N={:<3} {:<4} {:.3e} (threshold {:.1e})'.format(
            rep.property_id, rep.n_levels, rep.verdict, rep.max_violation,
            rep.threshold))
    write_json(cfg.out, {
        'version': __version__,
        'seed': cfg.seed,
        'n_levels': list(cfg.n_levels),
        'verdict': 'pass' if ok else 'fail',
        'reports': [rep.to_dict() for rep in reports],
    })
    return EXIT_OK if ok else EXIT_FAILED


def cmd_spectrum(cfg):
    _require(cfg, 'out')
    trunc = cfg.truncation()
    kind = DissipatorKind.parse(cfg.dissipator)
    basis = HermitianBasis(trunc.dim)
    supermat = superoperator_matrix(kind, basis, nthreads=cfg.nthreads)
    spec = dissipator_spectrum(kind, basis, supermat=supermat)
    kern = kernel_basis(kind, basis, supermat=supermat)
    write_csv(cfg.out, ('re', 'im'),
              ((z.real, z.imag) for z in spec.eigenvalues))
    if cfg.summary is not None:
        write_json(cfg.summary, {
            'n_levels': trunc.n_levels,
            'dim': trunc.dim,
            'dissipator': kind.value,
            'n_eigenvalues': int(spec.eigenvalues.size),
            'spectral_gap': spec.spectral_gap,
            'max_real_part': spec.max_real,
            'zero_eigenvalues': spec.zero_count(),
            'kernel_dim': int(kern.shape[0]),
            'kernel_tol': 1e-8,
            'transpose_residual': supermat.transpose_residual(),
        })
    print('gap {} kernel dimension {}'.format(_fmt(spec.spectral_gap),
                                              kern.shape[0]))
    return EXIT_OK


def _dump_states(traj, times):
    res = []
    for t in times:
        i = int(np.argmin(np.abs(traj.times - t)))
        res.append({'t_requested': t, 't': float(traj.times[i]),
                    'rho': matrix_to_json(traj.states[i])})
    return {'states': res}


def cmd_evolve(cfg):
    _require(cfg, 'out')
    try:
        spec = cfg.liouvillian_spec()
        integ = cfg.integrator()
    except ValueError as exc:
        raise ConfigurationError(str(exc))
    rho0 = parse_initial_state(cfg.initial, spec.truncation)
    traj = evolve(spec, rho0, integ)
    write_csv(cfg.out, ('t',) + OBSERVABLE_NAMES,
              ((t,) + tuple(getattr(rec, name) for name in OBSERVABLE_NAMES)
               for t, rec in zip(traj.times, traj.records)))
    meta = asdict(cfg)
    meta.pop('command')
    meta['n_levels'] = cfg.n_levels[0]
    meta['dump_times'] = list(cfg.dump_times)
    meta.update(version=__version__, dim=spec.dim, n_steps=integ.n_steps(),
                effective_step=(integ.t_end-integ.t_start)/integ.n_steps(),
                n_records=len(traj))
    write_json(cfg.metadata or cfg.out + '.meta.json', meta)
    if cfg.dump_times:
        write_json(cfg.dump_out, _dump_states(traj, cfg.dump_times))
    last = traj.records[-1]
    print('t={} trace={} purity={}'.format(_fmt(traj.times[-1]),
                                           _fmt(last.trace), _fmt(last.purity)))
    return EXIT_OK


def cmd_witness(cfg):
    _require(cfg, 'out')
    trunc = cfg.truncation()
    vals = delta_witness_values(trunc)
    rep = check_delta_witnesses(trunc, seed=cfg.seed)
    st = vals['states']
    r1, r2, pos = st['rho1'], st['rho2'], st['positivity_state']
    delta = DissipatorKind.DELTA_ONLY
    d_r1, d_r2 = apply_dissipator(delta, r1), apply_dissipator(delta, r2)
    d_pos = apply_dissipator(delta, pos)
    full_pos = apply_dissipator(DissipatorKind.FULL_D, pos)
    write_json(cfg.out, {
        'n_levels': trunc.n_levels,
        'asymmetry': {
            'rho1': matrix_to_json(r1), 'rho2': matrix_to_json(r2),
            'delta_rho1': matrix_to_json(d_r1), 'delta_rho2': matrix_to_json(d_r2),
            'rho1_delta_rho2': hs_inner(r1, d_r2),
            'delta_rho1_rho2': hs_inner(d_r1, r2),
        },
        'positivity': {
            'rho': matrix_to_json(pos), 'delta_rho': matrix_to_json(d_pos),
            'value': hs_inner(pos, d_pos),
            'full_d_rho': matrix_to_json(full_pos),
            'full_value': hs_inner(pos, full_pos),
        },
        'report': rep.to_dict(),
    })
    print('asymmetry ({}, {}), positivity {}'.format(
        _fmt(hs_inner(r1, d_r2)), _fmt(hs_inner(d_r1, r2)),
        _fmt(hs_inner(pos, d_pos))))
    return EXIT_OK if rep.passed else EXIT_FAILED


_HANDLERS = {'verify': cmd_verify, 'spectrum': cmd_spectrum,
             'evolve': cmd_evolve, 'witness': cmd_witness}


def build_parser():
    parser = argparse.ArgumentParser(
        prog='dissipator-lab',
        description='Certify and integrate the damped driven '
                    'Jaynes-Cummings dissipators.')
    parser.add_argument('--version', action='version', version=__version__)
    parser.add_argument('--config', help='flat JSON file with option defaults')
    parser.add_argument('-v', '--verbose', action='store_true')
    sub = parser.add_subparsers(dest='command', required=True)
    # SUPPRESS keeps unset flags out of the namespace, so file values survive
    common = argparse.ArgumentParser(add_help=False,
                                     argument_default=argparse.SUPPRESS)
    common.add_argument('--n-levels', help='truncation level(s), comma separated')
    common.add_argument('--seed', type=int)
    common.add_argument('--nthreads', type=int, help='0 means all cores')
    common.add_argument('--out')

    p = sub.add_parser('verify', parents=[common],
                       argument_default=argparse.SUPPRESS,
                       help='run the certification suite')
    p.add_argument('--samples', type=int, help='override sample counts')

    p = sub.add_parser('spectrum', parents=[common],
                       argument_default=argparse.SUPPRESS,
                       help='eigenvalues of D or Delta')
    p.add_argument('--dissipator', choices=('full', 'delta'))
    p.add_argument('--summary')

    p = sub.add_parser('evolve', parents=[common],
                       argument_default=argparse.SUPPRESS,
                       help='integrate the master equation')
    for name in ('omega-c', 'omega-a', 'p', 'gamma', 'drive-amp',
                 'drive-freq', 't-start', 't-end', 'step'):
        p.add_argument('--' + name, type=float)
    p.add_argument('--pumping', choices=('none', 'cavity', 'atom', 'scalar'))
    p.add_argument('--dissipator', choices=('full', 'delta'))
    p.add_argument('--initial', help='vacuum | fock:<n>[:+|-] | random:<seed>')
    p.add_argument('--method', choices=('rk4', 'expm'))
    p.add_argument('--record-every', type=int)
    p.add_argument('--metadata', help='metadata JSON (default: <out>.meta.json)')
    p.add_argument('--dump-times', help='comma separated times')
    p.add_argument('--dump-out')

    p = sub.add_parser('witness', parents=[common],
                       argument_default=argparse.SUPPRESS,
                       help='the Delta counterexamples in detail')
    return parser


def make_config(args):
    values = {} if args.config is None else load_config(args.config)
    flags = {k: v for k, v in vars(args).items()
             if k not in ('config', 'verbose', 'command')}
    values.update(flags)
    return RunConfig(command=args.command, **values)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s')
    try:
        cfg = make_config(args)
        return _HANDLERS[cfg.command](cfg)
    except ValueError as exc:
        logger.error('%s', exc)
        return EXIT_CONFIG
    except NumericalFailure as exc:
        if exc.suggested_step is not None:
            logger.error('%s (suggested step %g)', exc, exc.suggested_step)
        else:
            logger.error('%s', exc)
        return EXIT_NUMERICAL
    except OSError as exc:
        logger.error('%s', exc)
        return EXIT_CONFIG


if __name__ == '__main__':
    sys.exit(main())
