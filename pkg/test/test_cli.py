import io
import json
import os
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from unittest import mock

from fano.claims import CLAIMS
from fano.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class TestGroupCommand(unittest.TestCase):

    def test_prints_the_order(self):
        code, out, _ = run('group', '--order')
        self.assertEqual(0, code)
        self.assertEqual('order: 9720', out.strip())

    def test_lists_the_orbit(self):
        code, out, _ = run('group', '--orbit')
        self.assertEqual(0, code)
        self.assertIn('30 lines', out)
        self.assertIn('e4 - w^2 e5', out)


class TestFormCommand(unittest.TestCase):

    def test_prints_fibre_data(self):
        code, out, _ = run('form', '--eval', 'x4 - x5', '--pair', 'x4 - (w^2)*x5')
        self.assertEqual(0, code)
        self.assertIn('in lattice of forms: yes', out)
        self.assertIn('F.E45^1 = 4', out)
        self.assertIn('F.C = 4', out)
        self.assertIn('genus: 7', out)
        self.assertIn(': 3', out.splitlines()[-1])

    def test_rejects_bad_forms(self):
        code, _, err = run('form', '--eval', 'x1*x2')
        self.assertEqual(2, code)
        self.assertIn('position 2', err)

    def test_rejects_forms_outside_the_lattice(self):
        code, _, err = run('form', '--eval', 'x1')
        self.assertEqual(2, code)
        self.assertIn('error', err)


class TestLatticeCommand(unittest.TestCase):

    def test_prints_omega(self):
        code, out, _ = run('lattice', '--candidate', 'L0')
        self.assertEqual(0, code)
        self.assertIn('det: 9', out)
        self.assertIn('integral: yes', out)

    def test_rejects_unknown_candidate(self):
        code, _, err = run('lattice', '--candidate', 'L7')
        self.assertEqual(2, code)
        self.assertIn('L7', err)


class TestVerifyCommand(unittest.TestCase):

    def test_writes_json(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'arith.json')
            code, out, _ = run('verify', '--suite', 'arith', '--json', path)
            with open(path, encoding='utf-8') as f:
                document = json.load(f)
        self.assertEqual(0, code)
        self.assertEqual('arith', document['suite'])
        self.assertEqual(len(CLAIMS['arith']), len(document['reports']))
        self.assertIn('0 failed', out)

    def test_exit_code_for_failed_claims(self):
        with mock.patch.dict(CLAIMS['arith']['arith.alpha_cubed'], {'expected': '2'}):
            code, out, _ = run('verify', '--suite', 'arith')
        self.assertEqual(1, code)
        self.assertIn('FAIL arith.alpha_cubed', out)

    def test_reports_unwritable_destination(self):
        with tempfile.TemporaryDirectory() as directory:
            code, _, err = run('verify', '--suite', 'arith', '--json', os.path.join(directory, 'missing', 'out.json'))
        self.assertEqual(2, code)
        self.assertIn('error', err)

    def test_rejects_unknown_suite(self):
        code, _, err = run('verify', '--suite', 'k3')
        self.assertEqual(2, code)
        self.assertIn('k3', err)


class TestUsage(unittest.TestCase):

    def test_requires_a_command(self):
        code, _, _ = run()
        self.assertEqual(2, code)

    def test_help_exits_cleanly(self):
        code, out, _ = run('--help')
        self.assertEqual(0, code)
        self.assertIn('verify', out)


if __name__ == '__main__':
    unittest.main()
