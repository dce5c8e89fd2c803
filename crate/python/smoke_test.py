"""Smoke test for the mwsplit_py extension.

Build the module first, e.g.

    cargo build --release -p mwsplit-py --features extension-module
    cp target/release/libmwsplit_py.so python/mwsplit_py.so
"""

import json
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import mwsplit_py as m


def main():
    print("mwsplit_py", m.version())

    assert m.even_tableaux(2, 4) == [[], [2, 2]]
    assert m.even_tableaux(3, 6, twisted=True) == []
    assert len(m.tableaux(3, 6)) == 20

    d = json.loads(m.decompose(2, 4))
    kinds = sorted((s["kind"], s["weight"]) for s in d["summands"])
    assert kinds == [("eta_cone", 1), ("eta_cone", 2), ("unit", 0), ("unit", 4)], kinds

    f = json.loads(m.flag_motive(3))
    assert f["witt_weights"] == [0, 3]
    assert m.e_flag_dims(4) == [1, 0, 0, 2, 0, 0, 1]

    table = json.loads(m.chow_witt_basis(2, 4, twisted=True))
    assert [e["gw"] for e in table["degrees"]][2] == [[1, 1], [2]]

    passed, report = m.run_verify("flag", max_n=5)
    assert passed, report

    try:
        m.tableaux(5, 3)
    except ValueError as e:
        print("rejected Gr(5,3):", e)
    else:
        raise AssertionError("Gr(5,3) accepted")

    print("ok")


if __name__ == "__main__":
    main()
