#    errors.py -- Error classes
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


class SincError(Exception):
    """Base class for errors raised by sincvide.

    Subclasses set ``_fmt``, which is interpolated with the instance
    attributes to produce the message.
    """

    _fmt = "Unknown sincvide error"

    def __str__(self):
        try:
            return self._fmt % self.__dict__
        except (KeyError, TypeError, ValueError):
            return self._fmt


class DomainError(SincError):

    _fmt = "%(function)s is not defined at %(value)r"

    def __init__(self, function, value):
        self.function = function
        self.value = value


class InvalidParameter(SincError):

    _fmt = "Invalid value %(value)r for %(name)s: %(reason)s"

    def __init__(self, name, value, reason):
        self.name = name
        self.value = value
        self.reason = reason


class ShapeMismatch(SincError):

    _fmt = "Shapes %(left)s and %(right)s do not match for %(operation)s"

    def __init__(self, operation, left, right):
        self.operation = operation
        self.left = left
        self.right = right


class SingularMatrix(SincError):

    _fmt = "Matrix is singular to working precision (pivot %(pivot)g)"

    def __init__(self, pivot):
        self.pivot = pivot


class EvaluationError(SincError):
    """A user supplied function returned a non-finite value."""

    _fmt = "%(what)s is not finite at index %(index)s"

    def __init__(self, what, index):
        self.what = what
        self.index = index


class SolverFailed(SincError):

    _fmt = "Unable to solve the Sinc-Nystrom system for N=%(N)d: %(reason)s"

    def __init__(self, N, reason):
        self.N = N
        self.reason = reason


class UnknownCase(SincError):

    _fmt = "No benchmark case named %(name)r"

    def __init__(self, name):
        self.name = name


class UsageError(SincError):

    _fmt = "%(message)s"

    def __init__(self, message):
        self.message = message


class ConfigSyntaxError(SincError):
    """There is a syntax error in a configuration file."""

    _fmt = 'Unable to parse configuration file %(path)s: %(error)s'

    def __init__(self, path, error):
        self.path = path
        self.error = error
