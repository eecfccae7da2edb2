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

# Runs the certification suite on a few truncations and prints the verdicts.
# The same reports are produced by "dissipator-lab verify".

import dissipator_lab.verification as ver
from dissipator_lab.fock_algebra import TruncationConfig
from time import time


t0 = time()
reports = ver.run_full_certification(n_levels=(2, 4, 8), seed=42, nthreads=0)
print("certification time: {:.2f}s".format(time()-t0))

for rep in reports:
    print("{:<32} N={:<3} {:<4} {:.3e} <= {:.1e}".format(
        rep.property_id, rep.n_levels, rep.verdict, rep.max_violation,
        rep.threshold))
print("overall:", "pass" if ver.all_passed(reports) else "fail")

# the counterexamples for Delta, and the same states under D
for nlev in (2, 3, 8):
    vals = ver.delta_witness_values(TruncationConfig(nlev))
    print("N={}: <P0, Delta P1> = {:.3f}, <Delta P0, P1> = {:.3f}, "
          "<rho, Delta rho> = {:.3f}, <rho, D rho> = {:.3f}".format(
              nlev, *vals['delta_asymmetry'][0], vals['delta_positivity'][0],
              vals['full_form'][0]))

# smallest singular value of D on matrices supported on levels 0..N-2
for nlev in (4, 8, 12):
    rep = ver.check_kernel_and_injectivity(nlev, nthreads=0)
    print("N={:<3} kernel dimension {}, restricted sigma_min {:.4f}".format(
        nlev, rep.details['kernel_dim'], rep.details['restricted_sigma_min']))
