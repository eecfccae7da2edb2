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


import json

import numpy as np
import pytest
from numpy.testing import assert_, assert_allclose, assert_equal

import dissipator_lab.verification as ver
from dissipator_lab.fock_algebra import TruncationConfig, basis_projector
from dissipator_lab.hs_space import matrix_to_json, random_hermitian

pmp = pytest.mark.parametrize


def _roundtrip(rep):
    return json.loads(json.dumps(rep.to_dict()))


def test_report_schema():
    rep = ver.PropertyReport('dummy', 4, 10, 1e-13, 1e-12, 7,
                             details={'x': 1.})
    assert_(rep.passed)
    assert_equal(rep.verdict, 'pass')
    d = _roundtrip(rep)
    assert_equal(sorted(d), sorted(['property_id', 'n', 'max_violation',
                                    'threshold', 'verdict', 'witnesses',
                                    'seed', 'truncation', 'details']))
    assert_equal(d['truncation'], {'n_levels': 4, 'dim': 8})
    assert_(ver.PropertyReport.from_dict(d) == rep)
    bad = ver.PropertyReport('dummy', 4, 10, 2e-12, 1e-12, 7)
    assert_equal(bad.verdict, 'fail')
    d['verdict'] = 'fail'
    with pytest.raises(ValueError):
        ver.PropertyReport.from_dict(d)


def test_padded_support_spec():
    cfg = TruncationConfig(8)
    assert_equal(ver.PaddedSupportSpec(6).embed(cfg).shape, (196, 16, 16))
    with pytest.raises(ValueError):
        ver.PaddedSupportSpec(7).validate(cfg)
    with pytest.raises(ValueError):
        ver.PaddedSupportSpec(-1)
    with pytest.raises(ValueError):
        ver.check_kernel_and_injectivity(cfg, pad=ver.PaddedSupportSpec(7))


@pmp("nlev", (2, 4, 8, 16))
def test_symmetry(nlev):
    rep = ver.check_symmetry_D(nlev, n_samples=1000, seed=3)
    assert_(rep.passed, rep.max_violation)
    assert_equal(rep.threshold, 1e-10)
    assert_allclose(rep.details['projector_pair'], [1., 1.], atol=1e-14)
    assert_('transpose_residual' in rep.details)
    assert_(all(ver.reverify_witness(w) for w in rep.witnesses))


def test_symmetry_residual_edge_cases():
    cfg = TruncationConfig(3)
    rho = random_hermitian(6, rng_seed=42)
    zero = np.zeros((6, 6))
    wit = {'quantity': 'symmetry_residual', 'dissipator': 'full',
           'inputs': [matrix_to_json(zero), matrix_to_json(rho)], 'value': 0.}
    assert_equal(ver.evaluate_witness(wit), 0.)
    # Delta fails the same test on the projector pair
    wit = {'quantity': 'symmetry_residual', 'dissipator': 'delta',
           'inputs': [matrix_to_json(basis_projector(cfg, 0)),
                      matrix_to_json(basis_projector(cfg, 1))], 'value': 1.}
    assert_allclose(ver.evaluate_witness(wit), 1., atol=1e-14)
    with pytest.raises(ValueError):
        ver.evaluate_witness(dict(wit, quantity='bogus'))


@pmp("nlev", (2, 3, 8))
def test_nonpositivity(nlev):
    rep = ver.check_nonpositivity_D(nlev, n_samples=300)
    assert_(rep.passed, rep.max_violation)
    assert_(rep.details['max_normalized_form'] <= 1e-12)
    assert_(rep.details['min_normalized_form'] < 0)
    npairs = nlev*(nlev-1)//2
    assert_equal(rep.n_samples, 300 + 12*npairs)


def test_two_level_family_batches():
    fam = ver._two_level_family(TruncationConfig(64))
    assert_equal(next(fam).shape, (12, 128, 128))
    batches = list(ver._two_level_family(TruncationConfig(5)))
    assert_equal(len(batches), 10)
    for b in batches:
        assert_equal(b.shape, (12, 10, 10))
        assert_allclose(b, np.conj(np.swapaxes(b, -1, -2)), atol=0)


@pmp("kind", ('full', 'delta'))
@pmp("nlev", (2, 5, 8))
def test_closed_form_identity(kind, nlev):
    rep = ver.check_closed_form_identity(nlev, n_samples=500, kind=kind)
    assert_(rep.passed, rep.max_violation)
    assert_equal(rep.property_id, 'closed_form_identity_' + kind)
    rep = ver.check_trace_form_identity(nlev, n_samples=100, kind=kind)
    assert_(rep.passed, rep.max_violation)


@pmp("nlev", (2, 3, 4, 8, 16))
def test_delta_witnesses(nlev):
    rep = ver.check_delta_witnesses(TruncationConfig(nlev))
    assert_(rep.passed, rep.max_violation)
    assert_allclose(rep.details['delta_asymmetry']['measured'], [1., 0.],
                    atol=1e-12)
    assert_allclose(rep.details['delta_positivity']['measured'], [1.],
                    atol=1e-12)
    assert_allclose(rep.details['full_symmetry']['measured'], [1., 1.],
                    atol=1e-12)
    expected = -3. if nlev >= 3 else -1.
    assert_allclose(rep.details['full_form']['measured'], [expected],
                    atol=1e-12)
    for w in rep.witnesses:
        assert_allclose(w['value'], w['expected'], atol=1e-12)
    assert_(ver.reverify_report(_roundtrip(rep)))


@pmp("nlev", (2, 3, 4, 6, 8, 9, 10, 11, 12))
def test_kernel_and_injectivity(nlev):
    rep = ver.check_kernel_and_injectivity(nlev)
    assert_(rep.passed, rep.details)
    assert_equal(rep.details['kernel_dim'], 4)
    assert_equal(rep.details['padded_max_level'], nlev-2)
    assert_(rep.details['restricted_sigma_min'] > 0)
    assert_allclose(rep.witnesses[0]['value'], 0., atol=1e-12)


def test_injectivity_n8():
    rep = ver.check_kernel_and_injectivity(8, pad=ver.PaddedSupportSpec(6),
                                           nthreads=2)
    assert_(rep.passed)
    assert_(rep.details['restricted_sigma_min'] > 0.01)


@pmp("nlev", (2, 4, 6))
def test_kernel_tolerance_stability(nlev):
    rep = ver.check_kernel_tolerance_stability(nlev)
    assert_(rep.passed, rep.details)
    assert_equal(rep.details['kernel_dims'], [4]*5)
    assert_(all(rep.details['restricted_injective']))


@pmp("nlev", (2, 4, 8))
def test_trace_annihilation(nlev):
    rep = ver.check_trace_annihilation(nlev, n_samples=100)
    assert_(rep.passed, rep.details)
    assert_equal(len(rep.witnesses), 3)
    assert_(all(ver.reverify_witness(w) for w in rep.witnesses))


@pmp("nlev", (2, 5))
def test_hs_norm_blocks(nlev):
    rep = ver.check_hs_norm_blocks(nlev, n_samples=50)
    assert_(rep.passed, rep.max_violation)


def test_reproducibility():
    r1 = ver.check_symmetry_D(4, n_samples=50, seed=11)
    r2 = ver.check_symmetry_D(4, n_samples=50, seed=11)
    r3 = ver.check_symmetry_D(4, n_samples=50, seed=12)
    assert_equal(json.dumps(r1.to_dict()), json.dumps(r2.to_dict()))
    assert_(r1.witnesses[0]['inputs'] != r3.witnesses[0]['inputs'])


def test_witness_tampering():
    rep = ver.check_nonpositivity_D(3, n_samples=30)
    d = _roundtrip(rep)
    assert_(ver.reverify_report(d))
    d['witnesses'][0]['value'] += 1e-3
    assert_(not ver.reverify_report(d))


def test_full_certification():
    seq = ver.run_full_certification((2, 3), seed=5, nthreads=1, n_samples=20)
    par = ver.run_full_certification((2, 3), seed=5, nthreads=3, n_samples=20)
    assert_equal(len(seq), 22)
    assert_equal([json.dumps(r.to_dict()) for r in seq],
                 [json.dumps(r.to_dict()) for r in par])
    assert_(ver.all_passed(seq))
    assert_equal([r.n_levels for r in seq], [2]*11 + [3]*11)
    ids = [r.property_id for r in seq[:11]]
    assert_equal(len(set(ids)), 11)
