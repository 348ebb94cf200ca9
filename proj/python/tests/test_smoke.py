from pathlib import Path

import pytest

import caseframe

ROOT = Path(__file__).resolve().parents[2]
REFERENCE = ROOT / "lexicons" / "reference.cfl"


def frame(name: str) -> str:
    return (ROOT / "frames" / name / "input.avm").read_text(encoding="utf-8")


@pytest.fixture(scope="module")
def lex():
    return caseframe.Lexicon.load(REFERENCE)


def test_senses(lex):
    assert len(lex.senses) == 17
    assert "SENSE-EAT1" in lex.senses


def test_resolve_demet_pasta(lex):
    (reading,) = lex.resolve(frame("ye-eat-demet-pasta"))
    assert reading.sense == "SENSE-EAT1"
    assert reading.rank == 1
    assert reading.tree["features"]["SEMANTICS"]["features"]["PRED"]["value"] == "to eat"
    assert reading.avm == lex.format(reading.avm)


def test_ranked_readings(lex):
    readings = lex.resolve(frame("gec-see-off"))
    assert [r.sense for r in readings] == ["SENSE-SEE-OFF", "SENSE-PASS"]
    assert [r.rank for r in readings] == [1, 2]


def test_no_reading(lex):
    assert lex.resolve(frame("sas-two-objects")) == []


def test_generate(lex):
    (reading,) = lex.generate('[semantics PRED: "get mentally deranged"]')
    assert '"kafa"' in reading.avm


def test_explain(lex):
    records = lex.explain(frame("ye-eat-demet-pasta"), "SENSE-GET-MENTALLY-DERANGED")
    failed = {r["name"]: r["failure"] for r in records if not r["accepted"]}
    assert failed["DIR-OBJ-LEX-KAFA"] == 'clash at ARGUMENTS.DIR-OBJ.HEAD.LEX: "pasta" vs "kafa"'
    with pytest.raises(KeyError):
        lex.explain(frame("ye-eat-demet-pasta"), "SENSE-NONE")


def test_errors(lex):
    with pytest.raises(ValueError, match="unterminated"):
        lex.resolve('[VERB: [STEM: "ye"]')
    with pytest.raises(ValueError, match="unknown constraint"):
        caseframe.Lexicon.load(ROOT / "tests" / "data" / "corrupt" / "unknown-constraint.cfl")
    with pytest.raises(ValueError, match="too deeply"):
        lex.resolve(frame("tut-feel-like-doing"), depth=1)


def test_dsl_round_trip(lex):
    text = lex.dsl()
    assert caseframe.Lexicon.from_source(text).dsl() == text


def test_cli():
    code, out, err = caseframe.run_cli(["--lexicon", str(REFERENCE), "validate"])
    assert (code, out, err) == (0, "0 diagnostics\n", "")
