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


"""Numerical laboratory for the dissipation operators of the damped driven
Jaynes-Cummings model.

The package is organised in the following modules:

- ``fock_algebra``: truncated ladder operators, Pauli matrices and the
  field-spin tensor product
- ``hs_space``: the real Hilbert space of Hermitian matrices with the
  Hilbert-Schmidt inner product
- ``dissipators``: the dissipators D and Delta, their adjoints, quadratic
  forms, spectra and kernels
- ``hamiltonian``: H(t), pumping profiles and the full Liouvillian
- ``evolution``: time integration of the master equation
- ``verification``: executable certification of the algebraic properties
- ``cli_io``: command line interface and file output
"""

from ._util import ConfigurationError, NumericalFailure

__version__ = '0.1.0'

__all__ = ['ConfigurationError', 'NumericalFailure', '__version__']
