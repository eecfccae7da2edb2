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

# Integrates the damped driven Jaynes-Cummings master equation with D and
# with Delta and plots the recorded observables.

import dissipator_lab.evolution as ev
from dissipator_lab.fock_algebra import TruncationConfig, basis_projector
from dissipator_lab.hamiltonian import (LiouvillianSpec, PhysicalParams,
                                        PumpingProfile)
import numpy as np
import matplotlib.pyplot as plt
from time import time

nlev = 10
params = PhysicalParams(omega_c=1., omega_a=0.9, p=0.2, gamma=0.3)
pump = PumpingProfile('cavity', amplitude=0.5, frequency=1.)
rho0 = basis_projector(TruncationConfig(nlev), 1)
cfg = ev.IntegratorConfig(step=2e-3, t_end=30., record_every=25)

trajs = {}
for kind in ('full', 'delta'):
    spec = LiouvillianSpec(params=params, pumping=pump, dissipator=kind,
                           truncation=TruncationConfig(nlev))
    t0 = time()
    trajs[kind] = ev.evolve(spec, rho0, cfg)
    print("{}: {} steps in {:.2f}s, final trace {:.12f}".format(
        kind, cfg.n_steps(), time()-t0, trajs[kind].records[-1].trace))

# pure D-dissipation ends in the HS projection onto its kernel
spec = LiouvillianSpec(params=PhysicalParams(0., 0., 0., 1.),
                       truncation=TruncationConfig(nlev))
final = ev.evolve(spec, rho0, ev.IntegratorConfig(method='expm', step=1.,
                                                  t_end=80.)).states[-1]
target = ev.steady_state_projection(rho0, nlev)
print("distance to steady state: {:.3e}".format(
    np.linalg.norm(final-target)))

names = ('photon_number', 'inversion', 'purity', 'hs_norm')
for i, name in enumerate(names):
    plt.subplot(2, 2, i+1)
    for kind, traj in trajs.items():
        plt.plot(traj.times, traj.observable(name), label=kind)
    plt.title(name)
    plt.legend()
plt.show()
