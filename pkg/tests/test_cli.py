import json
import pathlib

import pytest

from defreg.cli import (
    EXIT_BUDGET,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_STRICT,
    CyclicRelations,
    DuplicateId,
    NonSquarefree,
    ParseError,
    RunConfig,
    UnknownVariable,
    _parse_field,
    main,
    parse_graph_file,
    parse_monomial,
    parse_poset_doc,
    run,
)

DATA = pathlib.Path(__file__).parent / "data"

SKEW = dict(mode="monomial", variables="x,y,z,w", gens="x*z, x*w, y*z, y*w")


def test_parse_monomial():
    gens = parse_monomial(("x", "y", "z"), " x*y ,y * z ")
    assert gens == [("x", "y"), ("y", "z")]
    with pytest.raises(NonSquarefree):
        parse_monomial(("x", "y"), "x*x")
    with pytest.raises(UnknownVariable):
        parse_monomial(("x", "y"), "x*q")
    with pytest.raises(ParseError):
        parse_monomial(("x", "y"), "x*, y")
    with pytest.raises(ParseError):
        parse_monomial(("x", "y"), "")


def test_parse_graph_file():
    g = parse_graph_file("format: 1\n# comment\nn 3\n1 2\n2 3\n")
    assert g.n == 3
    assert g.edges == frozenset({(1, 2), (2, 3)})
    # the format line is optional
    assert parse_graph_file("n 2\n1 2\n").n == 2
    with pytest.raises(ParseError):
        parse_graph_file("")
    with pytest.raises(ParseError):
        parse_graph_file("format: 2\nn 2\n1 2\n")
    with pytest.raises(ParseError):
        parse_graph_file("n two\n")
    with pytest.raises(ParseError):
        parse_graph_file("n 0\n")
    with pytest.raises(ParseError):
        parse_graph_file("n 3\n1 2 3\n")
    with pytest.raises(ParseError):
        parse_graph_file("n 3\n2 1\n")
    with pytest.raises(ParseError):
        parse_graph_file("n 3\n1 4\n")


def test_parse_poset_doc():
    poset = parse_poset_doc((DATA / "abstract7.json").read_text())
    assert len(poset) == 7
    assert poset.ring.nvars == 6
    # relations are given as covers; the closure is taken automatically
    assert poset.leq("p_7", "p_1")
    assert poset.maximal_ids() == ("p_1", "p_2", "p_3")


def test_parse_poset_doc_errors():
    with pytest.raises(ParseError):
        parse_poset_doc("not json")
    with pytest.raises(ParseError):
        parse_poset_doc("[]")
    with pytest.raises(ParseError):
        parse_poset_doc('{"format": 2, "elements": [{"id": "a", "dim": 0}]}')
    with pytest.raises(ParseError):
        parse_poset_doc('{"format": 1, "elements": []}')
    with pytest.raises(ParseError):
        parse_poset_doc('{"format": 1, "elements": [{"id": "", "dim": 0}]}')
    with pytest.raises(DuplicateId):
        parse_poset_doc(
            '{"format": 1, "elements":'
            ' [{"id": "a", "dim": 0}, {"id": "a", "dim": 1}]}'
        )
    with pytest.raises(ParseError):
        parse_poset_doc('{"format": 1, "elements": [{"id": "a", "dim": -1}]}')
    with pytest.raises(ParseError):
        parse_poset_doc(
            '{"format": 1, "elements": [{"id": "a", "dim": 0, "cm": "yes"}]}'
        )
    with pytest.raises(ParseError):
        parse_poset_doc(
            '{"format": 1,'
            ' "elements": [{"id": "a", "dim": 0}],'
            ' "relations": [["a", "ghost"]]}'
        )
    with pytest.raises(CyclicRelations):
        parse_poset_doc(
            '{"format": 1,'
            ' "elements": [{"id": "a", "dim": 0}, {"id": "b", "dim": 1}],'
            ' "relations": [["a", "b"], ["b", "a"]]}'
        )
    # nvars makes height + dim checkable
    with pytest.raises(ParseError):
        parse_poset_doc(
            '{"format": 1, "nvars": 3,'
            ' "elements": [{"id": "a", "dim": 1, "height": 1}]}'
        )


def test_parse_field():
    assert _parse_field("rational").is_rationals
    assert _parse_field("gf:5").characteristic == 5
    with pytest.raises(ValueError):
        _parse_field("gf:4")
    with pytest.raises(ValueError):
        _parse_field("gf:x")
    with pytest.raises(ValueError):
        _parse_field("real")


def test_run_ok():
    code, text = run(RunConfig(**SKEW))
    assert code == EXIT_OK
    assert text.startswith("format: 1\n")
    assert "reg K^2 <= 2 (cap 2)" in text
    assert "S_1 = {p_3}" in text
    assert text.endswith("\n")


def test_run_parse_failures():
    code, text = run(RunConfig(mode="monomial", variables="x,y", gens=None))
    assert code == EXIT_PARSE
    assert text.startswith("error:")
    code, _ = run(RunConfig(mode="monomial", variables="x,y", gens="x*q"))
    assert code == EXIT_PARSE
    code, _ = run(RunConfig(mode="graph", edges_path="/no/such/file"))
    assert code == EXIT_PARSE
    code, _ = run(RunConfig(mode="nonsense"))
    assert code == EXIT_PARSE


def test_run_budget_failures():
    code, text = run(RunConfig(max_poset=2, **SKEW))
    assert code == EXIT_BUDGET
    assert "budget" in text
    code, text = run(RunConfig(max_faces=2, **SKEW))
    assert code == EXIT_BUDGET
    assert "budget" in text


def test_run_strict_mode(tmp_path):
    heightless = tmp_path / "p.json"
    heightless.write_text(
        '{"format": 1, "elements": [{"id": "a", "dim": 1}]}'
    )
    cfg = RunConfig(mode="poset", poset_path=str(heightless), strict=True)
    code, text = run(cfg)
    assert code == EXIT_STRICT
    assert "certified: no" in text
    assert "(iii) not checkable" in text
    # same input without --strict reports the same text but exits cleanly
    relaxed = RunConfig(mode="poset", poset_path=str(heightless))
    assert run(relaxed) == (EXIT_OK, text)


def test_text_report_sections():
    cfg = RunConfig(
        hasse=True, witnesses=True, filtration=True, check=True, **SKEW
    )
    code, text = run(cfg)
    assert code == EXIT_OK
    assert "ring: 4 variables (x, y, z, w)" in text
    assert "covers:" in text
    assert "  p_3 < p_1" in text
    assert "conditions: (i) verified-structural; (ii) pass; (iii) pass" in text
    assert "certified: yes" in text
    assert "notes:" in text
    assert "witnesses = {p_1, p_2}" in text
    assert "layer 0: p_1^1 + p_2^1" in text
    assert "layer 1: (empty)" in text
    assert "mt level: 1" in text


def test_json_report():
    code, text = run(RunConfig(json_output=True, **SKEW))
    assert code == EXIT_OK
    doc = json.loads(text)
    assert doc["format"] == 1
    assert doc["mode"] == "monomial"
    assert doc["field"] == "rational"
    assert doc["ring"] == {"nvars": 4}
    assert [e["id"] for e in doc["poset"]["elements"]] == ["p_1", "p_2", "p_3"]
    assert doc["poset"]["covers"] == [["p_3", "p_1"], ["p_3", "p_2"]]
    assert {"id": "p_3", "degree": 0, "value": 1} in doc["multiplicities"]
    assert doc["bounds"][0] == {
        "j": 0, "S": [], "bound": "-inf", "cap": 0, "certified": True
    }
    assert doc["bounds"][2]["bound"] == 2
    assert doc["conditions"] == {
        "i": "verified-structural", "ii": True, "iii": True
    }
    assert doc["mt_level"] == 1
    assert doc["mt_capped"] is False
    assert doc["assumptions"] == []
    assert "witnesses" not in doc
    assert "filtration" not in doc


def test_json_optional_sections():
    cfg = RunConfig(
        json_output=True, witnesses=True, filtration=True, check=True, **SKEW
    )
    _, text = run(cfg)
    doc = json.loads(text)
    assert doc["witnesses"][2] == {"j": 2, "members": ["p_1", "p_2"]}
    assert doc["filtration"][1]["layers"][1]["summands"] == [
        {"id": "p_3", "exponent": 1}
    ]
    assert isinstance(doc["conditions"]["notes"], list)


def test_graph_mode_from_fixture():
    cfg = RunConfig(mode="graph", edges_path=str(DATA / "path5.edges"))
    code, text = run(cfg)
    assert code == EXIT_OK
    assert "poset size: 17" in text
    assert "mode: graph" in text
    assert "ring: 10 variables" in text
    assert "limit acyclicity" in text


def test_poset_mode_from_fixture():
    cfg = RunConfig(mode="poset", poset_path=str(DATA / "abstract7.json"))
    code, text = run(cfg)
    assert code == EXIT_OK
    assert "reg K^2 <= 2 (cap 2)" in text
    assert "S_3 = {p_1, p_3, p_5}" in text


def test_runs_are_byte_identical():
    for cfg in (
        RunConfig(**SKEW),
        RunConfig(json_output=True, filtration=True, witnesses=True, **SKEW),
        RunConfig(mode="graph", edges_path=str(DATA / "path5.edges")),
        RunConfig(mode="poset", poset_path=str(DATA / "abstract7.json")),
    ):
        assert run(cfg) == run(cfg)


def test_main_entry_point(capsys):
    code = main(
        ["--mode", "monomial", "--vars", "x,y,z", "--gens", "x*y, x*z"]
    )
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert "reg K^1 <= 1 (cap 1)" in out
    assert "reg K^2 <= 2 (cap 2)" in out


def test_main_json_flag(capsys):
    code = main(
        ["--mode", "monomial", "--vars", "x,y", "--gens", "x*y", "--json"]
    )
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert json.loads(out)["mode"] == "monomial"


def test_main_rejects_bad_field(capsys):
    code = main(["--mode", "monomial", "--vars", "x", "--gens", "x",
                 "--field", "gf:6"])
    out = capsys.readouterr().out
    assert code == EXIT_PARSE
    assert out.startswith("error:")


def test_main_field_choice_changes_label(capsys):
    args = ["--mode", "monomial", "--vars", "x,y", "--gens", "x*y",
            "--field", "gf:3"]
    code = main(args)
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert "field: gf(3)" in out
