"""Smoke runs of the experiment scripts with small parameters."""
import importlib.util
import sys
from pathlib import Path

import pytest

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


def load(name):
    spec = importlib.util.spec_from_file_location(f"_script_{name}", SCRIPTS / f"{name}.py")
    mod = importlib.util.module_from_spec(spec)
    sys.modules[f"_script_{name}"] = mod
    spec.loader.exec_module(mod)
    return mod


@pytest.mark.parametrize("name, argv, needle", [
    ("corpus_sweep", ["--size", "8", "--chain-degree", "6", "--tor-max", "4"], "problems: none"),
    ("gss_report", ["--max-n", "8"], "k[t^2, t^3] with |t| = 4"),
    ("ck5_products", ["--max-arity", "6", "--audit-total", "8", "--audit-arity", "4"], "m_5  -> (deabcdeab)^v"),
    ("hh_table", ["poly2", "--max-degree", "3", "--char", "2", "--oracle"], "[2, 2, 2, 2]  oracle agrees"),
])
def test_script_runs(name, argv, needle, capsys):
    assert load(name).main(argv) == 0
    assert needle in capsys.readouterr().out
