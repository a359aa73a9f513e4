#    __init__.py -- SE/DE-Sinc-Nystrom solvers for Volterra
#                   integro-differential equations
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

"""solve linear Volterra integro-differential equations with Sinc methods."""

from .info import (  # noqa: F401
    sincvide_version as version_info,
)


def load_tests(loader, basic_tests, pattern):
    basic_tests.addTest(
        loader.loadTestsFromNames([__name__ + '.tests']))
    return basic_tests
