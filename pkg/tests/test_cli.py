from __future__ import annotations

import json
from pathlib import Path

import pytest
from hypothesis import given
from jinja2 import Environment

from clifford_engine.app import AlgebraSession
from clifford_engine.cli.config import CliConfig
from clifford_engine.cli.main import main
from clifford_engine.domain import ConfigurationError, EngineKind, OutputFormat
from clifford_engine.engine.fast import diagonal_product
from clifford_engine.rendering.environment import get_template_environment
from clifford_engine.rendering.formatters import TABLE_TEMPLATE
from clifford_engine.structure.generators import random_multivector
from tests.strategies import seeds

EUCLID2_TABLE = (
    "*\t1\te1\te2\te1e2\n"
    "1\t1\te1\te2\te1e2\n"
    "e1\te1\t1\te1e2\te2\n"
    "e2\te2\t-e1e2\t1\t-e1\n"
    "e1e2\te1e2\t-e2\te1\t-1\n"
)

NULL2_TABLE_JSON = (
    '{"header": ["1", "e1", "e2", "e1e2"], "rows": ['
    '[{"1": "1"}, {"e1": "1"}, {"e2": "1"}, {"e1e2": "1"}], '
    '[{"e1": "1"}, {}, {"e1e2": "1"}, {}], '
    '[{"e2": "1"}, {"e1e2": "-1"}, {}, {}], '
    '[{"e1e2": "1"}, {}, {}, {}]]}\n'
)

GOLDEN_CASES = [
    (["--signature", "2,0,0", "--eval", "e2*e1"], "-e1e2\n"),
    (["--signature", "2,0,0", "--eval", "e2*e1", "--format", "json"], '{"blades": {"e1e2": "-1"}}\n'),
    (["--signature", "0,1,0", "--eval", "e1*e1"], "-1\n"),
    (["--preset", "cga2", "--eval", "up(0,0)"], "n0\n"),
    (["--preset", "cga2", "--eval", "up(1,0)"], "e1 + n0 + 1/2 ni\n"),
    (
        ["--preset", "cga2", "--eval", "up(1,0)", "--format", "json"],
        '{"blades": {"e1": "1", "n0": "1", "ni": "1/2"}}\n',
    ),
    (["--preset", "cga2", "--eval", "n0*ni + ni*n0"], "-2\n"),
    (["--preset", "cga3", "--eval", "up(1,2,2) * up(1,2,2)"], "0\n"),
    (["--signature", "2,0,0", "--eval", "e1*e2 + 1"], "1 + e1e2\n"),
    (["--signature", "3,0,0", "--eval", "e1 ^ e2 ^ e3"], "e1e2e3\n"),
    (["--signature", "2,0,0", "--eval", "e1 ^ e1"], "0\n"),
    (["--signature", "2,0,0", "--eval", "rev(e1*e2)"], "-e1e2\n"),
    (["--signature", "3,0,0", "--eval", "invol(1 + e1 + e1e2 + e1e2e3)"], "1 - e1 + e1e2 - e1e2e3\n"),
    (["--signature", "3,0,0", "--eval", "conj(1 + e1 + e1e2 + e1e2e3)"], "1 - e1 - e1e2 + e1e2e3\n"),
    (["--signature", "3,0,0", "--eval", "grade(1 + 2 e1 + 3 e1e2, 1)"], "2 e1\n"),
    (["--signature", "3,0,0", "--eval", "even(1 + e1 + e1e2 + e1e2e3)"], "1 + e1e2\n"),
    (["--signature", "3,0,0", "--eval", "odd(1 + e1 + e1e2 + e1e2e3)"], "e1 + e1e2e3\n"),
    (["--signature", "2,0,0", "--eval", "inv(2 e1)"], "1/2 e1\n"),
    (["--signature", "2,0,0", "--engine", "oracle", "--eval", "e1 | (e1 ^ e2)"], "e2\n"),
    (["--signature", "2,0,0", "--eval", "sp(e1 + e2, e1 - 3/2 e2)"], "-1/2\n"),
    (["--preset", "complex", "--eval", "(1 + 2 e1) * (3 - e1)"], "5 + 5 e1\n"),
    (["--preset", "quaternion", "--eval", "e1*e2*e1"], "e2\n"),
    (["--preset", "pga3", "--eval", "e4*e4"], "0\n"),
    (["--signature", "2,0,0", "--format", "json", "--eval", "3/2 e1e2 - 1"], '{"blades": {"1": "-1", "e1e2": "3/2"}}\n'),
    (["--signature", "2,0,0", "--eval=-e1*e2"], "-e1e2\n"),
    (["--signature", "2,0,0", "--eval", "1", "--eval", "e1"], "1\ne1\n"),
    (["--preset", "euclid2", "--table"], EUCLID2_TABLE),
    (["--signature", "0,0,2", "--table", "--format", "json"], NULL2_TABLE_JSON),
]

ERROR_CASES = [
    (
        ["--signature", "1,1,0", "--eval", "inv(e1 + e2)"],
        "error: e1 + e2 is not invertible: x*rev(x) = 0 is not a nonzero scalar\n",
    ),
    (
        ["--signature", "2,0,0", "--eval", "e1 + * e2"],
        "error: unexpected token '*' at position 5; expected one of: (, -, identifier, number\n",
    ),
    (
        ["--signature", "2,0,0", "--eval", "e3"],
        "error: unknown basis token 'e3' at position 0 in algebra G(2,0,0)\n",
    ),
    (
        ["--preset", "cga9", "--eval", "1"],
        "error: unknown preset 'cga9'; valid presets: complex, quaternion, cga2, cga3, pga3, euclid2, euclid3\n",
    ),
    (
        ["--signature", "2,0,0", "--eval", "grade(e1)"],
        "error: grade() at position 0 takes 2 argument(s), got 1\n",
    ),
    (
        ["--preset", "cga2", "--engine", "fast", "--eval", "n0"],
        "error: fast engine requested for non-diagonal metric of cga2\n",
    ),
    (
        ["--signature", "2,0,0", "--eval", "up(1,2)"],
        "error: up() at position 0 needs a conformal algebra; G(2,0,0) is not one\n",
    ),
]


@pytest.mark.parametrize(("argv", "expected"), GOLDEN_CASES)
def test_golden_output(argv, expected, capsys):
    assert main(argv) == 0
    captured = capsys.readouterr()
    assert captured.out == expected
    assert captured.err == ""


@pytest.mark.parametrize(("argv", "expected"), ERROR_CASES)
def test_user_errors_exit_with_one(argv, expected, capsys):
    assert main(argv) == 1
    captured = capsys.readouterr()
    assert captured.out == ""
    assert captured.err == expected


def test_nothing_to_do(capsys):
    assert main(["--signature", "2,0,0"]) == 1
    assert capsys.readouterr().err.startswith("error: nothing to do")


def test_algebra_source_is_required(capsys):
    assert main(["--eval", "1"]) == 1
    assert "--signature" in capsys.readouterr().err


def test_metric_file(tmp_path: Path, capsys):
    path = tmp_path / "skew.json"
    path.write_text(json.dumps({"dim": 2, "matrix": [["2", "1"], ["1", "1"]]}))
    assert main(["--metric", str(path), "--eval", "e2*e1"]) == 0
    assert capsys.readouterr().out == "2 - e1e2\n"


def test_oracle_engine_squares_the_full_blade_at_maximum_dimension(capsys):
    blade = "".join(f"e{axis}" for axis in range(1, 64))
    assert main(["--signature", "63,0,0", "--engine", "oracle", "--eval", f"{blade} * {blade}"]) == 0
    captured = capsys.readouterr()
    assert captured.out == "-1\n"
    assert captured.err == ""


def test_engine_disagreement_exits_with_two(monkeypatch, capsys):
    def negated_product(form, a, b, *, table=None):
        return -diagonal_product(form, a, b, table=table)

    monkeypatch.setattr("clifford_engine.engine.dispatch.diagonal_product", negated_product)
    assert main(["--signature", "2,0,0", "--eval", "inv(2 e1)"]) == 2
    captured = capsys.readouterr()
    assert captured.out == ""
    assert captured.err == "internal error: x*inv(x) = -1 under the rewriting engine, expected 1\n"


class TestEnvironment:
    def test_format_default_comes_from_the_environment(self, monkeypatch, capsys):
        monkeypatch.setenv("CLIFFORD_FORMAT", "json")
        assert main(["--signature", "1,0,0", "--eval", "e1"]) == 0
        assert capsys.readouterr().out == '{"blades": {"e1": "1"}}\n'

    def test_flags_override_the_environment(self, monkeypatch, capsys):
        monkeypatch.setenv("CLIFFORD_FORMAT", "json")
        assert main(["--signature", "1,0,0", "--eval", "e1", "--format", "human"]) == 0
        assert capsys.readouterr().out == "e1\n"

    def test_invalid_engine_variable(self, monkeypatch, capsys):
        monkeypatch.setenv("CLIFFORD_ENGINE", "gpu")
        assert main(["--signature", "1,0,0", "--eval", "e1"]) == 1
        assert capsys.readouterr().err.startswith("error: CLIFFORD_ENGINE must be")

    def test_config_from_env(self, monkeypatch):
        monkeypatch.setenv("CLIFFORD_ENGINE", "oracle")
        monkeypatch.setenv("CLIFFORD_LOG_LEVEL", "debug")
        config = CliConfig.from_env()
        assert config.engine == EngineKind.ORACLE
        assert config.output == OutputFormat.HUMAN
        assert config.log_level == 10

    def test_invalid_log_level(self, monkeypatch):
        monkeypatch.setenv("CLIFFORD_LOG_LEVEL", "chatty")
        with pytest.raises(ConfigurationError):
            CliConfig.from_env()


ENGINE_INVARIANT_EXPRESSIONS = [
    "(1 + e1) * (e2 - 1/2 e1e3) * e3",
    "rev(e1e2e3 + 2 e2) * inv(3 e2)",
    "(e1 + e2) | (e1 ^ e3 + e2e3)",
    "sp(1 + e1 + e2e3, e3 - e2e3)",
]


@pytest.mark.parametrize("signature", ["3,0,0", "1,1,1", "0,2,1"])
@pytest.mark.parametrize("source", ENGINE_INVARIANT_EXPRESSIONS)
def test_engines_agree(signature, source):
    oracle = AlgebraSession.from_signature(signature, engine=EngineKind.ORACLE)
    fast = AlgebraSession.from_signature(signature, engine=EngineKind.FAST)
    assert oracle.render(source) == fast.render(source)


@pytest.mark.parametrize("preset", ["cga2", "euclid3", "pga3"])
@given(seed=seeds)
def test_printed_values_parse_back(preset, seed):
    session = AlgebraSession.from_preset(preset)
    algebra = session.algebra
    value = random_multivector(seed, algebra.dim, algebra.form, 3, product=algebra.product)
    assert session.evaluate(value.to_text(algebra.labels)) == value


def test_session_requires_exactly_one_source():
    with pytest.raises(ConfigurationError):
        AlgebraSession.from_options(signature="2,0,0", preset="cga2")


class TestTemplateEnvironment:
    def test_only_jinja_defaults_are_global(self):
        assert get_template_environment().globals.keys() == Environment().globals.keys()

    def test_table_template_loads_from_the_package(self):
        assert get_template_environment().get_template(TABLE_TEMPLATE).name == TABLE_TEMPLATE
