#    test_loading.py -- Tests for test collection
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

import unittest

tests_package = __name__.rsplit('.', 1)[0]


def _flatten(suite):
    for test in suite:
        if isinstance(test, unittest.TestSuite):
            yield from _flatten(test)
        else:
            yield test


class LoadTestsTests(unittest.TestCase):

    def load(self, name):
        return list(_flatten(unittest.TestLoader().loadTestsFromName(name)))

    def test_plain_loader(self):
        tests = self.load(tests_package)
        failed = [test.id() for test in tests
                  if test.id().startswith('unittest.loader.')]
        self.assertEqual([], failed)
        modules = {test.id().rsplit('.', 2)[0] for test in tests}
        for name in ('test_specfun', 'test_solver', 'blackbox.test_solve'):
            self.assertIn(tests_package + '.' + name, modules)

    def test_package_hook(self):
        package = tests_package.rsplit('.', 1)[0]
        ids = [test.id() for test in self.load(package)]
        self.assertTrue(
            any(i.startswith(tests_package + '.test_linalg.') for i in ids))
