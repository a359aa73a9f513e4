#    __init__.py -- Testsuite for sincvide
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

import doctest
import os
import shutil
import tempfile
import unittest

import numpy as np
from scipy.integrate import quad


def load_tests(loader, basic_tests, pattern):
    testmod_names = [
            'blackbox',
            'test_benchmarks',
            'test_config',
            'test_convergence',
            'test_errors',
            'test_indefinite',
            'test_linalg',
            'test_loading',
            'test_solver',
            'test_specfun',
            'test_transform',
            ]
    basic_tests.addTest(loader.loadTestsFromNames(
        ["{}.{}".format(__name__, i) for i in testmod_names]))

    package = __name__.rsplit('.', 1)[0]
    doctest_mod_names = [
             'benchmarks',
             'config',
             ]
    for mod in doctest_mod_names:
        basic_tests.addTest(
            doctest.DocTestSuite(package + '.' + mod))
    return basic_tests


def integrate(f, a, b):
    """Adaptive Gauss-Kronrod oracle for int_a^b f."""
    value, _ = quad(f, a, b, epsabs=1e-14, epsrel=1e-14, limit=500)
    return value


def bisect(f, target, lo, hi, iterations=200):
    """Solve f(x) = target for increasing f on [lo, hi]."""
    for _ in range(iterations):
        mid = (lo + hi) / 2
        if f(mid) < target:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


class SincTestCase(unittest.TestCase):

    def assertAllClose(self, actual, desired, rtol=1e-12, atol=0.0):
        np.testing.assert_allclose(actual, desired, rtol=rtol, atol=atol)


class TestCaseInTempDir(SincTestCase):
    """A test case that runs in a fresh temporary directory."""

    def setUp(self):
        super().setUp()
        self.test_dir = tempfile.mkdtemp(prefix='sincvide-test-')
        self.addCleanup(shutil.rmtree, self.test_dir)
        cwd = os.getcwd()
        os.chdir(self.test_dir)
        self.addCleanup(os.chdir, cwd)

    def build_tree_contents(self, contents):
        for path, text in contents:
            with open(path, 'w') as f:
                f.write(text)
