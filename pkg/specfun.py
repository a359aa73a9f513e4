#    specfun.py -- Sine integral and the Sinc indefinite integration basis
#
#    This file is part of sincvide.
#
#    sincvide is free software; you can redistribute it and/or modify
#    it under the terms of the GNU General Public License as published by
#    the Free Software Foundation; either version 2 of the License, or
#    (at your option) any later version.
#
#    sincvide is distributed in the hope that it will be useful,
#    but WITHOUT ANY WARRANTY; without even the implied warranty of
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#    GNU General Public License for more details.
#
#    You should have received a copy of the GNU General Public License
#    along with sincvide; if not, write to the Free Software
#    Foundation, Inc., 51 Franklin St, Fifth Floor, Boston, MA  02110-1301  USA
#

r"""Sine integral and the Sinc indefinite integration basis.

.. math::

    \mathrm{Si}(x) = \int_0^x \frac{\sin \tau}{\tau}\,d\tau

For :math:`|x| \le 4` the Maclaurin series is summed directly. Beyond that

.. math::

    \mathrm{Si}(x) = \frac{\pi}{2} - f(x)\cos x - g(x)\sin x

where the auxiliary functions come from the continued fraction of
:math:`E_1(ix)`, evaluated with the modified Lentz algorithm.
"""

__all__ = [
    'si',
    'basis_j',
]

import numpy as np

from .errors import DomainError

SERIES_LIMIT = 4.0

_SERIES_TOL = 1e-17
_CF_TOL = 4 * np.finfo(float).eps
_CF_MAXITER = 500
_TINY = 1e-300


def _si_series(x):
    # sum_k (-1)^k x^(2k+1) / ((2k+1) (2k+1)!)
    x2 = x * x
    term = x.copy()
    total = x.copy()
    k = 0
    while True:
        term = -term * x2 / ((2 * k + 2) * (2 * k + 3))
        k += 1
        contribution = term / (2 * k + 1)
        total += contribution
        if np.all(np.abs(contribution) <= _SERIES_TOL * np.abs(total)):
            return total


def _auxiliary(x):
    """Return the auxiliary functions f(x), g(x) for x > SERIES_LIMIT."""
    b = 1.0 + 1j * x
    c = np.full(x.shape, 1.0 / _TINY, dtype=complex)
    d = 1.0 / b
    h = d.copy()
    active = np.ones(x.shape, dtype=bool)
    for i in range(2, _CF_MAXITER):
        a = -float((i - 1) ** 2)
        b = b + 2.0
        d[active] = 1.0 / (a * d[active] + b[active])
        c[active] = b[active] + a / c[active]
        delta = c[active] * d[active]
        h[active] *= delta
        done = np.abs(delta - 1.0) < _CF_TOL
        idx = np.flatnonzero(active)
        active[idx[done]] = False
        if not active.any():
            break
    return -h.imag, h.real


def si(x):
    """Sine integral Si(x).

    Accepts scalars or arrays; returns a float for scalar input.

    :raises DomainError: if any argument is NaN
    """
    scalar = np.ndim(x) == 0
    x = np.asarray(x, dtype=float)
    if np.isnan(x).any():
        raise DomainError('si', float('nan'))
    ax = np.abs(x).ravel()
    out = np.empty_like(ax)
    small = ax <= SERIES_LIMIT
    infinite = np.isinf(ax)
    large = ~small & ~infinite
    if small.any():
        out[small] = _si_series(ax[small])
    if large.any():
        t = ax[large]
        f, g = _auxiliary(t)
        out[large] = np.pi / 2 - f * np.cos(t) - g * np.sin(t)
    out[infinite] = np.pi / 2
    out = np.copysign(out, x.ravel()).reshape(x.shape)
    if scalar:
        return float(out)
    return out


def basis_j(j, h, xi):
    """The basis function J(j, h)(xi) = h (1/2 + Si(pi (xi/h - j)) / pi).

    ``xi`` may be +-inf, giving the limits h and 0.

    :raises DomainError: if h is not positive
    """
    if not h > 0:
        raise DomainError('basis_j', h)
    with np.errstate(invalid='ignore'):
        arg = np.pi * (np.asarray(xi, dtype=float) / h - np.asarray(j))
    value = h * (0.5 + si(arg) / np.pi)
    return value
