"""Smoke test for the pygridbraid extension.

Build and copy the module next to this file, then run it:

    cargo build -p gridbraid-py --features extension-module --release
    cp target/release/libpygridbraid.so python/pygridbraid.so
    python3 python/smoke.py
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import pygridbraid as gb


def main():
    u = gb.Grid.unknot()
    assert u.size == 2 and u.components() == 1
    assert u.invariants() == (-1, 0, -1)

    # Stabilizing changes the grid but not the topological class.
    s = u.apply("SX NE 0")
    assert s.size == 3
    verdict, script = gb.equivalent(u, s, "K")
    assert verdict == "YES", verdict
    assert u.apply_script(script) == s

    # Round trip through a braid word is verbatim.
    w = gb.Braid(3, [-2, 1, 2])
    back = w.to_grid().to_braid()
    assert back.letters == w.letters and back.strands == 3

    assert gb.Braid(3, [1, 2, 1]).equals(gb.Braid(3, [2, 1, 2]))
    assert not gb.Braid(2, [1]).equals(gb.Braid(2, [-1]))

    try:
        gb.Grid([0, 0], [1, 1])
    except ValueError:
        pass
    else:
        raise AssertionError("invalid grid accepted")

    ok, report = gb.run_suite("roundtrip", trials=20, seed=1)
    assert ok, report
    print("smoke ok")


if __name__ == "__main__":
    main()
