import json
import random
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from knappstein import cli
from knappstein.cli import ANALYSES, ProblemSpec, main, parse_problem, run, serialize_problem
from knappstein.errors import DecompositionViolation, ParseError, ValidationError
from knappstein.lfactor import SatakeValue
from knappstein.maximal_cases import CompSeriesInput, Origin, SiegelFamily, SiegelInput, VanishingIndex
from knappstein.rootdata import CartanSpec
from knappstein.torus_char import CharGroup

from conftest import random_character

PROBLEMS = Path(__file__).resolve().parent.parent / "problems"


def load(name):
    return parse_problem((PROBLEMS / name).read_text())


def test_sp4_fixture():
    spec = load("sp4.toml")
    assert spec.group == CartanSpec("C", 2)
    assert spec.char_group == CharGroup(0, (2, 2, 8))
    assert parse_problem(serialize_problem(spec)) == spec
    result = run(spec, oracle=True)
    assert result["rgroup"]["r_order"] == 4
    assert result["rgroup"]["keys_predicted_r_order"] == 4
    assert result["elliptic"]["arthur_elliptic"] is True
    assert all(c["passed"] for c in result["invariant_ledger"])


def test_so6_fixture():
    result = run(load("so6_herb.toml"), oracle=True)
    r = result["rgroup"]
    assert r["r_order"] == 4 and r["r_pure_sign_changes"] and r["component_count"] == 4
    e = result["elliptic"]
    assert e["arthur_elliptic"] is False and e["herb_induced"] is False
    assert e["a_R"] == []
    spaces = {tuple(f["element"]): f["basis"] for f in e["fixed_spaces"]}
    assert spaces[(-1, -2, 3)] == [[0, 0, 1]]
    assert spaces[(-1, 2, -3)] == [[0, 1, 0]]
    assert spaces[(1, -2, -3)] == [[1, 0, 0]]


def test_trivial_c3_fixture():
    result = run(load("c3_trivial.toml"))
    assert result["rgroup"]["r_order"] == 1
    assert result["rgroup"]["component_count"] == 1


def test_lfactor_and_tables_fixtures():
    gl = run(load("gl3_lfactor.toml"))["l_factors"]
    assert gl["standard"]["pole_order_at_zero"] == 2
    assert [t["pole_order_at_zero"] for t in gl["tate"]] == [1, 1, 0]
    tables = run(load("siegel_sp6.toml"))
    assert tables["siegel"] == {
        "reducible_at_zero": True,
        "adjoint_pieces": ["rho_n", "wedge2_rho_n"],
        "wedge2_l_trivial": True,
    }
    assert tables["complementary"]["complementary_interval"] == ["0", "1"]


def test_report_field_order_is_fixed():
    keys = list(run(load("siegel_sp6.toml")).keys())
    assert keys == ["tool", "version", "problem", "complementary", "siegel", "invariant_ledger"]
    keys = list(run(load("sp4.toml")).keys())
    assert keys == ["tool", "version", "problem", "rgroup", "elliptic", "commalg", "invariant_ledger"]


def _random_spec(rng: random.Random) -> ProblemSpec:
    family = rng.choice("ACD")
    rank = rng.randint(1 if family != "D" else 2, 4)
    spec = CartanSpec(family, rank)
    group = CharGroup(rng.randint(0, 2), tuple(rng.choice([2, 3, 4, 8]) for _ in range(rng.randint(0, 3))))
    if group.free_rank == 0 and not group.torsion_orders:
        group = CharGroup(0, (2,))
    chi = random_character(rng, spec.ambient_dim, group)
    analyses = {a for a in ANALYSES if rng.random() < 0.4}
    if analyses & {"elliptic", "commalg"}:
        analyses.add("rgroup")
    satake = comp = siegel = z = None
    if "lfactor" in analyses:
        satake = tuple(
            SatakeValue.ramified() if rng.random() < 0.2 else SatakeValue.unramified(rng.randrange(12), rng.randint(1, 12))
            for _ in range(rng.randint(0, 4))
        )
    if "complementary" in analyses:
        comp = rng.choice(
            [
                CompSeriesInput(True, True, VanishingIndex.I1, False),
                CompSeriesInput(True, True, VanishingIndex.I2, False),
                CompSeriesInput(True, True, VanishingIndex.NONE, True),
                CompSeriesInput(True, False, VanishingIndex.NONE, False),
            ]
        )
    if "siegel" in analyses:
        n = rng.randint(1, 6)
        origin = Origin.SP_N_MINUS_1 if n % 2 else rng.choice([Origin.SO_N_PLUS_1, Origin.SO_N_STAR])
        siegel = SiegelInput(rng.choice(list(SiegelFamily)), n, True, origin)
    if rng.random() < 0.2:
        z = tuple(tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(spec.ambient_dim)) for _ in range(rng.randint(0, 2)))
    return ProblemSpec(spec, chi, tuple(a for a in ANALYSES if a in analyses), satake, comp, siegel, z)


def test_round_trip_generated_specs():
    rng = random.Random(31337)
    for _ in range(200):
        spec = _random_spec(rng)
        text = serialize_problem(spec)
        assert parse_problem(text) == spec, text


def test_unknown_family_rejected():
    text = (PROBLEMS / "sp4.toml").read_text().replace('family = "C"', 'family = "E"')
    with pytest.raises(ValidationError) as info:
        parse_problem(text)
    assert info.value.key == "group.family" and info.value.line == 3


def test_siegel_without_block_rejected():
    text = (PROBLEMS / "sp4.toml").read_text().replace('"commalg"]', '"commalg", "siegel"]')
    with pytest.raises(ValidationError) as info:
        parse_problem(text)
    assert "siegel" in str(info.value)


@pytest.mark.parametrize(
    "old,new",
    [
        ("rank = 2", "rank = 2\ncolour = 1"),
        ('analyses = ["rgroup", "elliptic", "commalg"]', 'analyses = ["elliptic"]'),
        ("torsion = [1, 0, 0]", "torsion = [1, 0, 9]"),
        ("torsion = [1, 0, 0]", "torsion = [1, 0]"),
        ("rank = 2", "rank = 0"),
    ],
)
def test_validation_errors(old, new):
    text = (PROBLEMS / "sp4.toml").read_text().replace(old, new)
    with pytest.raises(ValidationError):
        parse_problem(text)


def test_parse_error_has_line():
    with pytest.raises(ParseError) as info:
        parse_problem("[group]\nfamily = \n")
    assert info.value.exit_code == 2 and info.value.line == 2


def _write(tmp_path, text):
    p = tmp_path / "p.toml"
    p.write_text(text)
    return str(p)


def test_exit_codes(tmp_path, capsys):
    sp4 = (PROBLEMS / "sp4.toml").read_text()
    assert main(["--input", str(PROBLEMS / "sp4.toml")]) == 0
    assert main(["--input", _write(tmp_path, "[group\n")]) == 2
    assert main(["--input", _write(tmp_path, sp4.replace('"C"', '"E"'))]) == 3
    b2 = sp4.replace('family = "C"', 'family = "B"')
    assert main(["--input", _write(tmp_path, b2)]) == 5
    assert main(["--input", str(PROBLEMS / "sp4.toml"), "--max-rank", "1"]) == 5
    capsys.readouterr()


def test_invariant_violation_exits_four(monkeypatch, capsys):
    def broken(*args, **kwargs):
        raise DecompositionViolation("order product fails", forensic={"w_sigma": 4})

    monkeypatch.setattr(cli, "knapp_stein", broken)
    assert main(["--input", str(PROBLEMS / "sp4.toml")]) == 4
    out, err = capsys.readouterr()
    assert out == ""
    assert json.loads(err)["forensic"] == {"w_sigma": 4}


def test_oracle_mismatch_exits_four(monkeypatch, capsys):
    monkeypatch.setattr(
        cli, "brute_force_rgroup",
        lambda spec, chi: {"w_sigma": set(), "delta_prime": set(), "w_prime": set(), "r_group": set()},
    )
    assert main(["--input", str(PROBLEMS / "sp4.toml"), "--oracle"]) == 4
    out, err = capsys.readouterr()
    assert out == "" and "oracle" in err


def test_reruns_are_byte_identical():
    outputs = [
        subprocess.run(
            [sys.executable, "-m", "knappstein", "--input", str(PROBLEMS / "so6_herb.toml"), "--oracle"],
            capture_output=True, check=True,
        ).stdout
        for _ in range(2)
    ]
    assert outputs[0] == outputs[1]
    report = json.loads(outputs[0])
    for key in ("w_sigma_order", "delta_prime", "w_prime_order", "r_group", "component_count", "multiplicities"):
        assert key in report["rgroup"]
    assert {c["check"] for c in report["invariant_ledger"]} >= {"oracle_r_group", "order_product"}


def test_verbose_summary(capsys):
    assert main(["--input", str(PROBLEMS / "so6_herb.toml"), "--verbose"]) == 0
    out, err = capsys.readouterr()
    assert json.loads(out)["rgroup"]["r_order"] == 4
    assert "|R| = 4" in err
