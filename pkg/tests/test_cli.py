# SPDX-FileCopyrightText: (c) 2021 Artёm IG <github.com/rtmigo>
# SPDX-License-Identifier: MIT


import json
import unittest
from pathlib import Path
from tempfile import TemporaryDirectory

from click.testing import CliRunner

from ietforge import ietforge_cli
from ietforge._cli import Globals, PRECISION_CAP_ENVNAME, _diagnosed
from ietforge._common import SpecSemanticError
from ietforge.d_families import rotation
from ietforge.e_specfile import parse_spec
from tests.common import ALPHA, load_schema, oracle_of, schema_errors

ROTATION_SPEC = """
alpha = sqrt(2)/4
iet { perm=[2,1]; lengths=["1-a","a"]; }
"""

IDENTITY_SPEC = 'iet { perm=[1]; lengths=["1"]; }'

SMALL = ['--depth', '100', '--max-pieces', '100', '--max-steps', '100']


# noinspection PyTypeChecker
class Test(unittest.TestCase):

    def setUp(self) -> None:
        self._temp_dir_obj = TemporaryDirectory()
        self.temp_dir = Path(self._temp_dir_obj.name)

    def tearDown(self) -> None:
        self._temp_dir_obj.cleanup()

    def write_spec(self, name: str, text: str) -> str:
        path = self.temp_dir / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    def invoke(self, args, **kwargs):
        return CliRunner().invoke(ietforge_cli, args, **kwargs)

    def invoke_json(self, args, **kwargs):
        result = self.invoke(args, **kwargs)
        self.assertEqual(result.exit_code, 0, result.output)
        return json.loads(result.output)

    def test_version(self):
        result = self.invoke(['--version'])
        self.assertEqual(result.exit_code, 0)
        self.assertIn("ietforge v", result.output)

    def test_family(self):
        data = self.invoke_json(['family', 'twisted_reversal', '--m', '4',
                                 '--alpha', 'sqrt(2)/6'])
        self.assertEqual(data["iet"]["m"], 4)
        self.assertTrue(data["family_witness"]["verified"])
        self.assertIsNone(data["family_witness"]["power_of_detected"])

    def test_family_word_is_optional(self):
        a = self.invoke(['family', 'family', 'rotation', '--alpha',
                         'sqrt(2)/4'])
        b = self.invoke(['family', 'rotation', '--alpha', 'sqrt(2)/4'])
        self.assertEqual(a.exit_code, 0)
        self.assertEqual(a.output, b.output)

    def test_short_family_names(self):
        data = self.invoke_json(['analyze', 'family', 'thm14', '--m', '5',
                                 '--alpha', 'sqrt(2)/10', *SMALL])
        self.assertEqual(data["iet"]["m"], 5)
        self.assertTrue(data["family_witness"]["verified"])
        full = self.invoke_json(['analyze', 'family', 'twisted_reversal',
                                 '--m', '5', '--alpha', 'sqrt(2)/10',
                                 *SMALL])
        self.assertEqual(data["iet"], full["iet"])

        data = self.invoke_json(['family', 'thm15', '--n', '6', '--sigma',
                                 'cycle', '--alpha', 'sqrt(2)/4'])
        self.assertEqual(data["iet"]["m"], 12)
        self.assertTrue(data["family_witness"]["verified"])

        for name in ('n2_rescaled', 'n2-rescaled'):
            data = self.invoke_json(['family', name, '--alpha', 'sqrt(2)/4'])
            with self.subTest(name=name):
                self.assertEqual(data["iet"]["perm"], [4, 3, 2, 1])

    def test_analyze_to_files(self):
        out = self.temp_dir / "report.json"
        svg = self.temp_dir / "graph.svg"
        result = self.invoke(['analyze', 'family', 'half_block_swap',
                              '--alpha', 'sqrt(2)/4', *SMALL,
                              '--birkhoff-steps', '200',
                              '--out', str(out), '--svg', str(svg)])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(result.output, '')
        data = json.loads(out.read_text(encoding="utf-8"))
        self.assertEqual(schema_errors(data, load_schema()), [])
        self.assertEqual(data["birkhoff"]["steps"], 200)
        self.assertIn("<svg", svg.read_text(encoding="utf-8"))
        # nothing but the two outputs is left behind
        self.assertEqual(sorted(p.name for p in self.temp_dir.iterdir()),
                         ["graph.svg", "report.json"])

    def test_analyze_spec(self):
        spec = self.write_spec("rot.iet", ROTATION_SPEC)
        data = self.invoke_json(['analyze', '--spec', spec, *SMALL])
        self.assertEqual(data["verdict"]["minimality"], "minimal-certified")
        self.assertIsNone(data["family_witness"])
        self.assertEqual(data["provenance"]["source"], {"spec": spec})

    def test_precision_cap_envvar(self):
        data = self.invoke_json(['analyze', 'rotation', '--alpha',
                                 'sqrt(2)/4', *SMALL],
                                env={PRECISION_CAP_ENVNAME: '32'})
        self.assertEqual(data["provenance"]["budgets"]["precision_cap"], 32)
        data = self.invoke_json(['--precision-cap', '48', 'analyze',
                                 'rotation', '--alpha', 'sqrt(2)/4',
                                 *SMALL])
        self.assertEqual(data["provenance"]["budgets"]["precision_cap"], 48)

    def test_orbit(self):
        data = self.invoke_json(['orbit', 'rotation', '--alpha', 'sqrt(2)/4',
                                 '--from', '0', '--steps', '3'])
        self.assertEqual(data["orbit"]["position"], str(3 * ALPHA - 1))
        self.assertEqual(sum(data["orbit"]["counts"]), 3)
        back = self.invoke_json(['orbit', 'rotation', '--alpha', 'sqrt(2)/4',
                                 '--from', '3*a - 1', '--steps', '-3'])
        self.assertEqual(back["orbit"]["position"], "0")

    def test_induce(self):
        data = self.invoke_json(['induce', 'block_swap', '--n', '3',
                                 '--sigma', 'cycle', '--alpha', 'sqrt(2)/4',
                                 '--base', '0,1'])
        section = data["first_return"]
        self.assertEqual({b["time"] for b in section["branches"]}, {3})
        self.assertEqual(section["swept"], "3")
        self.assertIsNotNone(section["rotation_angle"])

    def test_induce_without_return(self):
        result = self.invoke(['induce', 'rotation', '--alpha', 'sqrt(2)/4',
                              '--base', '0,1/2', '--budget', '1'])
        self.assertEqual(result.exit_code, 1)
        self.assertIn("error[no-return]", result.output)

    def test_birkhoff(self):
        data = self.invoke_json(['birkhoff', 'twisted_reversal', '--m', '4',
                                 '--alpha', 'sqrt(2)/6', '--steps', '500',
                                 '--cells', '0,1/2;1/2,1'])
        self.assertEqual(sum(data["birkhoff"]["counts"]), 500)
        self.assertEqual(data["birkhoff"]["cells"],
                         [["0", "1/2"], ["1/2", "1"]])

    def test_compose(self):
        s = self.write_spec("s.iet", ROTATION_SPEC)
        t = self.write_spec("t.iet", IDENTITY_SPEC)
        data = self.invoke_json(['compose', s, t])
        self.assertEqual(parse_spec(data["spec"]).iet,
                         rotation(oracle_of("sqrt(2)/4")))

    def test_compose_mixed_universes(self):
        s = self.write_spec("s.iet", ROTATION_SPEC)
        t = self.write_spec("t.iet", 'alpha = sqrt(3)/5\n'
                                     'iet { perm=[2,1]; '
                                     'lengths=["1-a","a"]; }')
        result = self.invoke(['compose', s, t])
        self.assertEqual(result.exit_code, 1)
        self.assertIn("error[mixed-irrationals]", result.output)

    def test_idoc(self):
        data = self.invoke_json(['idoc', 'half_block_swap', '--alpha',
                                 'sqrt(2)/4', '--depth', '50'])
        self.assertEqual(data["idoc"]["status"], "fail")
        self.assertEqual(data["idoc"]["witness"]["kind"], "collision")

    def test_invariants(self):
        data = self.invoke_json(['invariants', 'block_swap', '--n', '3',
                                 '--sigma', 'reversal', '--alpha',
                                 'sqrt(2)/4'])
        self.assertEqual(data["invariants"]["union"]["measure"], "2")

    def test_render(self):
        svg = self.temp_dir / "t.svg"
        result = self.invoke(['render', 'rotation', '--alpha', 'sqrt(2)/4',
                              '--svg', str(svg)])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(svg.read_text(encoding="utf-8").count(
            'stroke-width="2"'), 2)
        stdout = self.invoke(['render', 'rotation', '--alpha', 'sqrt(2)/4'])
        self.assertEqual(stdout.output, svg.read_text(encoding="utf-8"))


class TestExitCodes(unittest.TestCase):

    def invoke(self, args):
        return CliRunner().invoke(ietforge_cli, args)

    def test_empty_spec(self):
        with TemporaryDirectory() as tds:
            spec = Path(tds) / "empty.iet"
            spec.write_text("", encoding="utf-8")
            result = self.invoke(['analyze', '--spec', str(spec)])
        self.assertEqual(result.exit_code, 2)
        self.assertIn("error[syntax-error]", result.output)

    def test_semantic_errors(self):
        for args in (['family', 'baker', '--alpha', 'sqrt(2)/4'],
                     ['family', 'rotation', '--alpha', '1/3'],
                     ['family', 'twisted_reversal', '--alpha', 'sqrt(2)/8'],
                     ['family']):
            result = self.invoke(args)
            with self.subTest(args=args):
                self.assertEqual(result.exit_code, 2)
                self.assertIn("error[semantic-error]", result.output)

    def test_empty_permutation(self):
        with TemporaryDirectory() as tds:
            spec = Path(tds) / "empty_perm.iet"
            spec.write_text("iet { perm=[]; lengths=[]; }", encoding="utf-8")
            result = self.invoke(['analyze', '--spec', str(spec)])
        self.assertEqual(result.exit_code, 2)
        self.assertIn("error[semantic-error]", result.output)

    def test_alpha_twice(self):
        with TemporaryDirectory() as tds:
            spec = Path(tds) / "fam.iet"
            spec.write_text("alpha = sqrt(2)/4\nfamily rotation { }",
                            encoding="utf-8")
            result = self.invoke(['family', '--spec', str(spec),
                                  '--alpha', 'sqrt(3)/5'])
            self.assertEqual(result.exit_code, 2)
            plain = Path(tds) / "rot.iet"
            plain.write_text(ROTATION_SPEC, encoding="utf-8")
            result = self.invoke(['analyze', '--spec', str(plain),
                                  '--alpha', 'sqrt(3)/5'])
            self.assertEqual(result.exit_code, 2)

    def test_rational_alpha_needs_permission(self):
        result = self.invoke(['family', 'rotation', '--alpha', '1/3',
                              '--allow-rational'])
        self.assertEqual(result.exit_code, 0, result.output)

    def test_tool_error(self):
        result = self.invoke(['family', 'twisted_reversal', '--m', '3',
                              '--alpha', 'sqrt(2)/8'])
        self.assertEqual(result.exit_code, 1)
        self.assertIn("error[parameter-out-of-range]", result.output)


class TestShellErrors(unittest.TestCase):

    def test_shell_reports_and_goes_on(self):
        @_diagnosed
        def failing():
            raise SpecSemanticError("no such family")

        saved = Globals.in_shell
        Globals.in_shell = True
        try:
            self.assertIsNone(failing())
        finally:
            Globals.in_shell = saved
        with self.assertRaises(SystemExit) as ctx:
            failing()
        self.assertEqual(ctx.exception.code, 2)


if __name__ == "__main__":
    unittest.main()
