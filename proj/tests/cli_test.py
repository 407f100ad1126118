"""Command-line front end: output formats, JSON shapes and exit codes."""

import csv
import json
import math
import subprocess
import sys
import tempfile
import unittest
from pathlib import Path

BINARY = sys.argv.pop(1) if len(sys.argv) > 1 else "build/tools/bathent"


def run(*args):
    return subprocess.run([BINARY, *map(str, args)], capture_output=True, text=True)


def comb_bath(alpha=0.2):
    modes = []
    for k in range(1, 201):
        w = 0.01 * k
        modes.append({"omega": w, "weight": alpha * 0.01 / (w * w), "nbar": 0.0})
    return {"type": "modes", "modes": modes}


class CliTest(unittest.TestCase):
    def setUp(self):
        self.dir = tempfile.TemporaryDirectory()
        self.tmp = Path(self.dir.name)

    def tearDown(self):
        self.dir.cleanup()

    def write_json(self, name, obj):
        path = self.tmp / name
        path.write_text(obj if isinstance(obj, str) else json.dumps(obj))
        return path

    def test_scan_plane_csv(self):
        out = self.tmp / "surface.csv"
        r = run("scan-plane", "--spectrum", "0,1,0,1", "--f-max", 3, "--phi-max", 3, "--n", 13, "--out", out)
        self.assertEqual(r.returncode, 0, r.stderr)
        with out.open() as fh:
            rows = list(csv.reader(fh))
        self.assertEqual(rows[0], ["f", "phi", "lambda0", "negativity"])
        self.assertEqual(len(rows), 1 + 13 * 13)
        self.assertEqual(rows[1][:2], ["0", "0"])
        self.assertLess(abs(float(rows[1][2])), 1e-12)
        # f-major order, shortest round-trip decimals
        self.assertEqual(rows[2][:2], ["0", "0.25"])
        self.assertEqual(rows[14][:2], ["0.25", "0"])
        point = {(float(r[0]), float(r[1])): float(r[2]) for r in rows[1:]}
        self.assertAlmostEqual(point[(3.0, 3.0)], -4.9354554087525374e-5, delta=1e-12)
        for r in rows[1:]:
            self.assertEqual(repr(float(r[2])), repr(float(repr(float(r[2])))))

    def test_scan_plane_thread_count_does_not_change_output(self):
        args = ["scan-plane", "--spectrum", "0,1,0,1.3", "--n", 21]
        serial = run(*args, "--threads", 1)
        parallel = run(*args, "--threads", 4)
        self.assertEqual(serial.returncode, 0, serial.stderr)
        self.assertEqual(serial.stdout, parallel.stdout)

    def test_scan_plane_qubit_qutrit(self):
        r = run("scan-plane", "--spectrum", "0,1,0,1,2", "--f-max", 0.1, "--phi-max", 0.1, "--n", 3)
        self.assertEqual(r.returncode, 0, r.stderr)
        rows = list(csv.reader(r.stdout.splitlines()))
        middle = [row for row in rows[1:] if row[:2] == ["0.05", "0.05"]]
        self.assertAlmostEqual(float(middle[0][2]), -0.01474879848661375, delta=1e-12)

    def test_trajectory_csv(self):
        bath = self.write_json("bath.json", {"type": "modes", "modes": [{"omega": 1.0, "weight": 1.0}]})
        out = self.tmp / "traj.csv"
        r = run("trajectory", "--bath", bath, "--spectrum", "0,1,0,1", "--t-max", math.pi, "--n", 5, "--out", out)
        self.assertEqual(r.returncode, 0, r.stderr)
        rows = list(csv.reader(out.read_text().splitlines()))
        self.assertEqual(rows[0], ["t", "f", "phi", "lambda0", "negativity"])
        self.assertEqual(len(rows), 6)
        self.assertEqual(rows[1][:3], ["0", "0", "0"])
        self.assertAlmostEqual(float(rows[-1][1]), 2.0, delta=1e-14)
        self.assertAlmostEqual(float(rows[-1][2]), math.pi, delta=1e-14)

    def test_cavity_constants_json(self):
        r = run("cavity", "--d", 1e-8, "--T", 0.1, "--material", "aluminum", "--constants")
        self.assertEqual(r.returncode, 0, r.stderr)
        c = json.loads(r.stdout)
        self.assertAlmostEqual(c["zeta"] / 1.8e-15, 1.0, delta=0.05)
        self.assertAlmostEqual(c["tau"] / 3.8e-11, 1.0, delta=0.02)
        self.assertAlmostEqual(c["x_max"] / 8.8e5, 1.0, delta=0.02)

    def test_cavity_kernel_csv(self):
        out = self.tmp / "cavity.csv"
        r = run("cavity", "--d", 1e-8, "--T", 0.1, "--out", out, "--n", 50)
        self.assertEqual(r.returncode, 0, r.stderr)
        rows = list(csv.reader(out.read_text().splitlines()))
        self.assertEqual(rows[0], ["t", "f", "phi"])
        self.assertEqual(len(rows), 51)
        self.assertAlmostEqual(float(rows[-1][1]) / 0.0014, 1.0, delta=0.1)

    def test_septime_results(self):
        comb = self.write_json("comb.json", comb_bath())
        r = run("septime", "--bath", comb, "--spectrum", "0,1,0,1.3", "--t-max", 50)
        self.assertEqual(r.returncode, 0, r.stderr)
        res = json.loads(r.stdout)
        self.assertEqual(res["result"], "time")
        self.assertAlmostEqual(res["t_star"], 4.554162719, delta=1e-4 * 4.55)

        r = run("septime", "--bath", comb, "--spectrum", "0,1,0,1", "--t-max", 50)
        self.assertEqual(json.loads(r.stdout), {"result": "never", "t_star": None})

        cav = self.write_json("cav.json", {"type": "continuum", "cavity": {"d": 1e-8, "T": 0.1}})
        r = run("septime", "--bath", cav, "--spectrum", "0,1,0,1.1", "--t-max", 1e-9)
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(json.loads(r.stdout), {"result": "not_reached", "t_star": None})

    def test_invalid_config_exit_code(self):
        bad_bath = self.write_json("bad.json", {"type": "modes", "modes": [{"omega": -1, "weight": 1}]})
        broken = self.write_json("broken.json", "{not json")
        cases = [
            ["scan-plane", "--spectrum", "0,1,x,1"],
            ["scan-plane", "--spectrum", "0,1"],
            ["scan-plane"],
            ["scan-plane", "--spectrum", "0,1,0,1", "--n", 0],
            ["trajectory", "--bath", bad_bath, "--spectrum", "0,1,0,1", "--t-max", 1],
            ["trajectory", "--bath", broken, "--spectrum", "0,1,0,1", "--t-max", 1],
            ["septime", "--bath", self.tmp / "missing.json", "--spectrum", "0,1,0,1", "--t-max", 1],
            ["cavity", "--material", "gold", "--constants"],
            ["cavity", "--T", -1, "--constants"],
            ["no-such-command"],
        ]
        for args in cases:
            with self.subTest(args=args):
                r = run(*args)
                self.assertEqual(r.returncode, 2, r.stderr)
                self.assertTrue(r.stderr.strip())

    def test_numerical_failure_exit_code(self):
        gauss = self.write_json(
            "gauss.json",
            {"type": "continuum", "x_max": 1e6, "tau": 1.0, "cutoff": "gaussian", "coth_approx": True},
        )
        r = run("trajectory", "--bath", gauss, "--spectrum", "0,1,0,1.3", "--t-max", 1e3, "--n", 3)
        self.assertEqual(r.returncode, 3, r.stderr)

    def test_help_exits_zero(self):
        self.assertEqual(run("--help").returncode, 0)


if __name__ == "__main__":
    unittest.main()
