#!/usr/bin/env python3
"""Smoke test for the Python extension.

Builds nothing itself: it locates the cdylib produced by
`cargo build -p bullmwss-py` (debug or release), copies it next to a temp
directory under the import name `_bullmwss`, and exercises the main types
and operations end to end.
"""

import shutil
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def load_module():
    candidates = [
        REPO / "target" / profile / name
        for profile in ("release", "debug")
        for name in ("lib_bullmwss.so", "_bullmwss.so", "lib_bullmwss.dylib")
    ]
    built = next((c for c in candidates if c.exists()), None)
    if built is None:
        sys.exit("cdylib not found; run `cargo build -p bullmwss-py` first")
    stage = Path(tempfile.mkdtemp(prefix="bullmwss_py_"))
    shutil.copy2(built, stage / "_bullmwss.so")
    sys.path.insert(0, str(stage))
    import _bullmwss

    return _bullmwss


def main():
    m = load_module()

    # A C5: unit optimum 2, weighted optimum follows the weights.
    c5 = m.Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    weight, picked = c5.solve("p7bull")
    assert weight == 2 and len(picked) == 2, (weight, picked)
    weight, picked = c5.solve("s123bull", weights=[7, 1, 1, 6, 1])
    assert weight == 13, weight
    assert m.verify_solution(c5, [7, 1, 1, 6, 1], picked, weight)

    # Class recognition with witnesses. A path has no degree-3 vertex, so it
    # avoids the subdivided claw and sits in the s123bull class.
    p7 = m.Graph(7, [(i, i + 1) for i in range(6)])
    witness = p7.class_witness("p7bull")
    assert witness is not None and witness[0] == "p7", witness
    assert p7.in_class("s123bull") is True

    # The fixture: in class, and solver matches the oracle.
    fix, c, d = m.fixture()
    assert fix.n == 13 and fix.in_class("p7bull"), (fix, c, d)
    w_solve, set_solve = fix.solve("p7bull")
    w_oracle, _ = fix.oracle()
    assert w_solve == w_oracle == 6, (w_solve, w_oracle)

    # Twin expansion keeps the class and scales the optimum.
    doubled = m.twin_expand(c5, 2)
    assert doubled.n == 10 and doubled.in_class("p7bull")
    weight, _ = doubled.solve("p7bull")
    assert weight == 4, weight
    assert doubled.homogeneous_set() is not None
    assert c5.homogeneous_set() is None  # C5 is prime

    # Ring blowup contains a seven-hole and no five-hole.
    ring = m.c7_blowup([2, 1, 1, 1, 1, 1, 1])
    assert ring.find_hole(7) is not None
    assert ring.find_hole(5) is None

    # Random generation + solve vs oracle on both classes.
    for cls in ("p7bull", "s123bull"):
        g = m.random_in_class(16, 0.3, cls, seed=11)
        assert g.in_class(cls)
        ws = [((v * 37) % 19) + 1 for v in range(g.n)]
        w_solve, picked = g.solve(cls, weights=ws)
        w_oracle, _ = g.oracle(weights=ws)
        assert w_solve == w_oracle, (cls, w_solve, w_oracle)
        assert m.verify_solution(g, ws, picked, w_solve)

    # Text format round trip.
    text = ring.to_text()
    g2, w2 = m.Graph.from_text(text)
    assert g2.n == ring.n and g2.edges() == ring.edges() and all(x == 1 for x in w2)

    print("smoke test passed")


if __name__ == "__main__":
    main()
