import json
import subprocess
import sys

import pytest

from hecke_bn.cli import main
from hecke_bn.laurent import Laurent2
from hecke_bn.signed_perm import from_word


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cells_json_schema(capsys):
    code, out, _ = run(capsys, "cells", "--n", "3", "--order", "asymptotic", "--side", "left", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert set(data) == {"n", "order", "side", "cells"}
    assert data["n"] == 3 and data["order"] == "asymptotic" and data["side"] == "left"
    assert len(data["cells"]) == 20
    assert {"type": "1.1|1", "elements": ["s2 t", "s1 s2 t", "s2 s1 s2 t"]} in data["cells"]
    # elements round-trip through the word parser and cover W_3 once
    elems = [from_word(w, 3) for c in data["cells"] for w in c["elements"]]
    assert len(set(elems)) == 48


def test_cells_two_sided_rank2(capsys):
    code, out, _ = run(capsys, "cells", "--n", "2", "--side", "two", "--format", "json")
    data = json.loads(out)
    assert code == 0 and sum(len(c["elements"]) for c in data["cells"]) == 8
    assert len(data["cells"]) == 5


def test_cells_weighted_has_no_types(capsys):
    code, out, _ = run(capsys, "cells", "--n", "3", "--order", "weighted:1,1", "--format", "json")
    data = json.loads(out)
    assert all(c["type"] is None for c in data["cells"])
    sets = [set(c["elements"]) for c in data["cells"]]
    assert {"s2 s1 s2", "s1 s2 t s1 s2", "s2 t s1 s2"} in sets


def test_cellmod(capsys):
    code, out, _ = run(capsys, "cellmod", "--n", "3", "--cell-of", "s2 t",
                       "--basis", "s2 t,s1 s2 t,s2 s1 s2 t", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["basis"] == ["s2 t", "s1 s2 t", "s2 s1 s2 t"]
    t = data["matrices"]["t"]
    assert Laurent2.parse(t[0][2]) == Laurent2.parse("V^1*v^-2 + V^-1*v^2")
    assert data["matrices"]["s1"][1][0] == "V^0*v^0"


def test_cellmod_errors(capsys):
    assert run(capsys, "cellmod", "--n", "3", "--cell-of", "s9")[0] == 2
    assert run(capsys, "cellmod", "--n", "3", "--cell-of", "s2 t", "--basis", "s2 t,t")[0] == 2


def test_specht(capsys):
    code, out, _ = run(capsys, "specht", "--n", "3", "--lambda", "1|2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["g"][0] == ["V^0*v^0", "-V^0*v^-1", "0"]
    code, out, _ = run(capsys, "specht", "--n", "3", "--lambda", "3|-", "--emit", "matrices", "--format", "json")
    assert json.loads(out)["matrices"] == {"t": [["V^1*v^0"]], "s1": [["V^0*v^1"]], "s2": [["V^0*v^1"]]}
    assert run(capsys, "specht", "--n", "3", "--lambda", "1|1")[0] == 2
    assert run(capsys, "specht", "--n", "3", "--lambda", "x")[0] == 2


def test_rs(capsys):
    code, out, _ = run(capsys, "rs", "--n", "3", "--word", "s2 t", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["shape"] == "1.1|1" and data["window"] == "[-1,3,2]"


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--n", "3", "--suite", "counterexample")
    assert code == 0 and "not a unit" in out
    code, out, _ = run(capsys, "verify", "--n", "2", "--suite", "thm3", "--format", "json")
    assert code == 0 and json.loads(out)["pass"] is True


def test_verify_failure_exit_code(capsys, monkeypatch):
    from hecke_bn import cli
    from hecke_bn.verify import SuiteReport

    def broken(name, n, cache_dir=None):
        rep = SuiteReport(name, n)
        rep.add("deliberate", False, "counterexample x")
        return [rep]

    monkeypatch.setattr(cli, "run_suite", broken)
    code, out, _ = run(capsys, "verify", "--n", "2", "--suite", "thm3")
    assert code == 1 and "first failure: deliberate (counterexample x)" in out


@pytest.mark.parametrize("argv,code", [
    (["cells", "--n", "6"], 3),
    (["verify", "--n", "4"], 3),
    (["verify", "--n", "5", "--deep"], 3),
    (["cells", "--n", "3", "--order", "lex"], 2),
    (["cells", "--n", "0"], 2),
    (["nope"], 2),
    (["cells"], 2),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_deterministic_text_output(capsys):
    first = run(capsys, "cells", "--n", "3")[1]
    assert run(capsys, "cells", "--n", "3")[1] == first


def test_module_entry_point(tmp_path):
    res = subprocess.run([sys.executable, "-m", "hecke_bn", "rs", "--n", "2", "--word", "t",
                          "--cache", str(tmp_path)], capture_output=True, text=True)
    assert res.returncode == 0 and "shape = 1|1" in res.stdout
