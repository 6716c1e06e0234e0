import argparse
import unittest

from cli_app.main import EXIT_OK, EXIT_USAGE, build_parser, main, parse_k_range


class TestParseKRangeUnit(unittest.TestCase):

    def test_ranges(self):
        self.assertEqual(parse_k_range('0-3'), (0, 1, 2, 3))
        self.assertEqual(parse_k_range('1,2,4'), (1, 2, 4))
        self.assertEqual(parse_k_range('5'), (5,))
        self.assertEqual(parse_k_range(''), ())
        self.assertEqual(parse_k_range('4-2'), ())

    def test_invalid(self):
        with self.assertRaises(argparse.ArgumentTypeError):
            parse_k_range('a-b')


class TestParserUnit(unittest.TestCase):

    def test_verbs(self):
        parser = build_parser()
        args = parser.parse_args(['run', '--config', 'flat.toml', '--seed', '3', '--quiet'])
        self.assertEqual((args.verb, args.seed, args.quiet), ('run', 3, True))

        args = parser.parse_args(['sweep', '--config', 'sweep.toml', '--jobs', '4'])
        self.assertEqual(args.jobs, 4)

        args = parser.parse_args(['verify', 'mms'])
        self.assertEqual(args.suite, 'mms')
        self.assertIsNone(args.config)

        args = parser.parse_args(['spectrum', '--k', '1-3', '--eps', '0', '1e-4'])
        self.assertEqual(args.k, (1, 2, 3))
        self.assertEqual(args.eps, [0.0, 1e-4])

    def test_usage_errors_exit_2(self):
        self.assertEqual(main(['launch']), EXIT_USAGE)
        self.assertEqual(main(['run']), EXIT_USAGE)
        self.assertEqual(main([]), EXIT_USAGE)

    def test_help_exits_0(self):
        self.assertEqual(main(['--help']), EXIT_OK)
