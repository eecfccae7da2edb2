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


import logging
import os

logger = logging.getLogger(__name__)

THREADS_ENV = 'DISSIPATOR_LAB_THREADS'

# hybrid comparison used throughout: |x-y| <= atol + rtol*max(|x|, |y|)
ATOL = 1e-12
RTOL = 1e-10


class ConfigurationError(ValueError):
    """Raised for invalid run configurations (CLI exit code 2)."""


class NumericalFailure(RuntimeError):
    """Raised when an eigensolver fails or an integration becomes unstable
    (CLI exit code 3)."""

    def __init__(self, message, suggested_step=None):
        super().__init__(message)
        self.suggested_step = suggested_step


def close(x, y, atol=ATOL, rtol=RTOL):
    return abs(x-y) <= atol + rtol*max(abs(x), abs(y))


def resolve_nthreads(nthreads=1):
    """Translate the ``nthreads`` convention into a worker count.

    ``nthreads=0`` means "all available cores". The result is capped by the
    environment variable ``DISSIPATOR_LAB_THREADS`` if it is set.
    """
    if nthreads < 0:
        raise ValueError("nthreads must be nonnegative")
    res = nthreads if nthreads > 0 else (os.cpu_count() or 1)
    cap = os.environ.get(THREADS_ENV)
    if cap:
        try:
            cap = int(cap)
        except ValueError:
            raise ConfigurationError(
                "{} must be a positive integer, got {!r}".format(THREADS_ENV, cap))
        if cap < 1:
            raise ConfigurationError(
                "{} must be a positive integer, got {}".format(THREADS_ENV, cap))
        res = min(res, cap)
    logger.debug('using %i thread(s)', res)
    return res
