#!/usr/bin/env python3
"""Smoke test for the chirality_py extension module.

Builds the cdylib if needed, imports it, and exercises each binding once.
Run from the repository root:  python3 python/smoke_test.py
"""

import json
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def build_module(tmp: Path) -> Path:
    lib = ROOT / "target" / "release" / "libchirality_py.so"
    if not lib.exists():
        subprocess.run(
            ["cargo", "build", "--release", "-p", "chirality-py"],
            cwd=ROOT,
            check=True,
        )
    target = tmp / "chirality_py.so"
    shutil.copy2(lib, target)
    return target


def t123_jet():
    zeros4 = [[[["0"] * 4 for _ in range(4)] for _ in range(4)] for _ in range(4)]
    t = [[["0"] * 4 for _ in range(4)] for _ in range(4)]
    for (i, j, k), sign in {
        (0, 1, 2): 1, (1, 2, 0): 1, (2, 0, 1): 1,
        (0, 2, 1): -1, (2, 1, 0): -1, (1, 0, 2): -1,
    }.items():
        t[i][j][k] = str(sign)
    return {
        "n": 4,
        "V": ["0"] * 4,
        "gradV": [["0"] * 4 for _ in range(4)],
        "T": t,
        "gradT": zeros4,
        "riem_g": zeros4,
        "lapRg": "0",
    }


def main():
    tmp = Path(tempfile.mkdtemp(prefix="chirality_py_"))
    build_module(tmp)
    sys.path.insert(0, str(tmp))
    import chirality_py as cp

    # identity suites: every check passes
    checks = cp.verify(seed=11, trials=2, exact=True)
    assert checks, "no checks ran"
    bad = [(s, n) for s, n, ok in checks if not ok]
    assert not bad, f"failing identities: {bad}"
    print(f"verify: {len(checks)} checks pass")

    # densities of the constant-torsion jet: a2 total is 9/8 (pi^-2 units)
    jet = t123_jet()
    rep = json.loads(cp.density(json.dumps(jet), "dstar"))
    assert rep["totals"]["a0"] == "1/4", rep["totals"]
    assert rep["totals"]["a2"] == "9/8", rep["totals"]
    print(f"density: totals {rep['totals']}")

    # chirality ratio of the trivial rank-2 twist
    twist = {
        "m": 2,
        "gamma_diag": [1, -1],
        "Phi": [[[0, 0], [0, 0]], [[0, 0], [0, 0]]],
        "gradPhi": [[[[0, 0], [0, 0]], [[0, 0], [0, 0]]] for _ in range(4)],
        "Omega": [[[[[0, 0], [0, 0]], [[0, 0], [0, 0]]] for _ in range(4)] for _ in range(4)],
    }
    ratio = cp.chirality_ratio(json.dumps(twist))
    assert ratio is None, f"tr(gamma)=0 should give None, got {ratio}"
    twist["gamma_diag"] = [1, 1]
    ratio = cp.chirality_ratio(json.dumps(twist))
    assert ratio == "-1", ratio
    print(f"chirality_ratio: {ratio}")

    # torus integral identities for single-mode fields
    ints = cp.torus_integrals([0, 0, 0, 1], [0, 1, 0, 0])
    for name, (lhs, rhs) in ints.items():
        scale = max(1.0, abs(lhs), abs(rhs))
        assert abs(lhs - rhs) / scale < 1e-9, f"{name}: {lhs} vs {rhs}"
    print(f"torus_integrals: {len(ints)} identities hold")

    # cheap heat-trace fit (coarse times keep the lattice tiny)
    fit = cp.heat_torus(t123=1.0, cutoff=1, times=[0.5, 0.7, 1.0, 1.4, 2.0])
    assert fit["k_eff"] >= 8
    assert abs(fit["a_hat"][0] - fit["a_analytic"][0]) / fit["a_analytic"][0] < 0.1
    print(f"heat_torus: a_hat = {fit['a_hat']}")

    # sphere benchmark hits both targets
    fit = cp.sphere()
    assert fit["rel_errors"][0] < 1e-5, fit
    assert fit["rel_errors"][1] < 1e-3, fit
    print(f"sphere: a_hat = {fit['a_hat']}")

    print("smoke test: all good")


if __name__ == "__main__":
    main()
