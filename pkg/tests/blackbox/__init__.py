#    __init__.py -- blackbox test suite for sincvide.
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

from contextlib import redirect_stderr, redirect_stdout
import io
import json

from ... import cmds
from .. import TestCaseInTempDir


def load_tests(loader, basic_tests, pattern):
    testmod_names = [
        'test_converge',
        'test_indefinite',
        'test_list',
        'test_solve',
    ]
    basic_tests.addTest(loader.loadTestsFromNames(
        ["{}.{}".format(__name__, i) for i in testmod_names]))
    return basic_tests


class ExternalBase(TestCaseInTempDir):

    def run_sincvide(self, args, retcode=0):
        """Run the command line with args, returning (out, err)."""
        if isinstance(args, str):
            args = args.split()
        out = io.StringIO()
        err = io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            actual = cmds.main(args)
        self.assertEqual(
            retcode, actual,
            'unexpected exit code for %r: %s' % (args, err.getvalue()))
        return out.getvalue(), err.getvalue()

    def run_sincvide_json(self, args, retcode=0):
        out, err = self.run_sincvide(args, retcode)
        return json.loads(out)
