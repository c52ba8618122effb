import importlib.resources
import io
import json

import jsonschema
import pytest

from tourlab import (
    Numbering,
    OrderedTournament,
    SearchReport,
    chi,
    cyclic_triangle,
    dom,
    formats,
    local_chromatic_number,
    natural_numbering,
    numbering_clique,
    s_t,
    strong_chromatic_number,
    transitive_tournament,
)
from tourlab.cli import main

SCHEMA = json.loads(
    importlib.resources.files("tourlab").joinpath("report_schema.json").read_text()
)


@pytest.fixture
def run(monkeypatch, capsys):
    def go(argv, stdin_text=""):
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin_text))
        code = main(argv)
        out = capsys.readouterr()
        return code, out.out, out.err

    return go


def _data(stdout, kind):
    env = json.loads(stdout)
    jsonschema.validate(env, SCHEMA)
    assert env["kind"] == kind
    return env["data"]


def test_gen_c3_golden(run):
    code, out, _ = run(["gen", "c3"])
    assert code == 0
    assert out == formats.emit_tmt(cyclic_triangle())


def test_gen_json_envelope(run):
    code, out, _ = run(["gen", "transitive", "--n", "4", "--json", "--output", "/dev/null"])
    assert code == 0
    data = _data(out, "gen")
    assert data == {"n": 4, "compact": formats.emit_compact(transitive_tournament(4))}


def test_gen_uk_meta(run):
    code, out, _ = run(["gen", "u_k", "--k", "2", "--witnesses", "2", "--json", "--output", "/dev/null"])
    assert code == 0
    data = _data(out, "gen")
    assert data["matching"] == "1-3 4-5 2-6"


def test_gen_crossing_and_majority(run):
    code, out, _ = run(["gen", "crossing", "--pairs", "1-4 2-5"])
    assert code == 0
    t = formats.parse_tmt(out)
    assert t.n == 2
    code, out, _ = run(["gen", "majority", "--orderings", "0,1,2", "--k", "1"])
    assert code == 0
    assert formats.parse_tmt(out) == transitive_tournament(3)


def test_gen_random_deterministic(run):
    _, a, _ = run(["gen", "random", "--n", "6", "--seed", "3"])
    _, b, _ = run(["gen", "random", "--n", "6", "--seed", "3"])
    _, c, _ = run(["gen", "random", "--n", "6", "--seed", "4"])
    assert a == b != c


def test_pipe_matches_library_composition(run):
    _, piped, _ = run(["gen", "s_t", "--t", "2"])
    t = s_t(2)
    assert piped == formats.emit_tmt(t)
    code, out, _ = run(["solve", "chi", "--json"], stdin_text=piped)
    assert code == 0
    got = chi(t)
    data = _data(out, "solve")
    assert data["value"] == got.value
    assert data["classes"] == [[v for v in range(t.n) if c >> v & 1] for c in got.classes]


def test_solve_human_and_json_agree(run):
    tmt = formats.emit_tmt(s_t(2))
    _, human, _ = run(["solve", "chi"], stdin_text=tmt)
    code, machine, _ = run(["solve", "chi", "--json"], stdin_text=tmt)
    value = int(human.splitlines()[0].split("=")[1])
    assert value == _data(machine, "solve")["value"]
    _, human, _ = run(["solve", "dom"], stdin_text=tmt)
    code, machine, _ = run(["solve", "dom", "--json"], stdin_text=tmt)
    assert int(human.splitlines()[0].split("=")[1]) == _data(machine, "solve")["value"]


def test_solve_edom_subset(run):
    tmt = formats.emit_tmt(cyclic_triangle())
    code, out, _ = run(["solve", "edom", "--a", "0,1", "--json"], stdin_text=tmt)
    assert code == 0
    assert _data(out, "solve")["value"] == 1


def test_solve_chi_law_from_file(run, tmp_path):
    law = tmp_path / "law.json"
    law.write_text(json.dumps({"members": [[0, 1, 2]]}))
    tmt = formats.emit_tmt(cyclic_triangle())
    code, out, _ = run(["solve", "chi-law", "--law", str(law), "--json"], stdin_text=tmt)
    assert code == 0
    assert _data(out, "solve")["value"] >= 1


def test_solve_subdom_reports_exactness(run):
    tmt = formats.emit_tmt(s_t(2))
    code, out, _ = run(["solve", "subdom", "--json"], stdin_text=tmt)
    assert code == 0
    data = _data(out, "solve")
    assert data["exact"] is True and data["value"] == 2


def test_analyze_numbering_matches_library(run):
    t = s_t(2)
    tmt = formats.emit_tmt(t)
    code, out, _ = run(["analyze", "numbering", "--order", "2,0,1", "--json"], stdin_text=tmt)
    assert code == 0
    data = _data(out, "analyze")
    ot = OrderedTournament(t, Numbering((2, 0, 1)))
    assert data["local"] == local_chromatic_number(ot)
    assert data["strong"] == strong_chromatic_number(ot)
    assert data["clique"] == numbering_clique(ot)
    _, human, _ = run(["analyze", "numbering", "--order", "2,0,1"], stdin_text=tmt)
    assert int(human.splitlines()[0].split("=")[1]) == data["local"]


def test_analyze_diamonds_none(run):
    tmt = formats.emit_tmt(cyclic_triangle())
    code, out, _ = run(["analyze", "diamonds", "--json"], stdin_text=tmt)
    assert code == 0
    assert _data(out, "analyze")["diamond"] is None
    _, human, _ = run(["analyze", "diamonds"], stdin_text=tmt)
    assert human.strip() == "no diamond"


def test_analyze_pairs_and_poset(run):
    tmt = formats.emit_tmt(cyclic_triangle())
    code, out, _ = run(["analyze", "pairs", "--json"], stdin_text=tmt)
    assert code == 0
    assert _data(out, "analyze")["exact"] is True
    code, out, _ = run(["analyze", "poset", "--json"], stdin_text=tmt)
    assert code == 0
    assert _data(out, "analyze") == {"what": "poset", "is_poset": True, "order": [0, 2, 1]}
    code, out, _ = run(["analyze", "poset", "--order", "0,1,2", "--json"], stdin_text=tmt)
    assert _data(out, "analyze")["is_poset"] is False


def test_numbering_commands(run):
    tmt = formats.emit_tmt(cyclic_triangle())
    code, out, _ = run(["numbering", "min-local", "--json"], stdin_text=tmt)
    assert code == 0
    data = _data(out, "numbering")
    assert data["local"] == 1 and data["mode"] == "exact"
    code, out, _ = run(["numbering", "diamond-free", "--c", "0", "--json"], stdin_text=tmt)
    assert code == 0
    assert _data(out, "numbering")["result"] == "numbering"


def test_scan_exhausted_exits_zero(run):
    code, out, _ = run(["scan", "theorem-suite", "--nmax", "5", "--json"])
    assert code == 0
    data = _data(out, "scan")
    assert data["outcome"] == "exhausted"


def test_scan_witness_exits_one_and_report_revalidates(run, tmp_path):
    out_path = tmp_path / "report.json"
    code, out, _ = run(["scan", "tribip", "--nmax", "6", "--out", str(out_path), "--json"])
    assert code == 1
    data = _data(out, "scan")
    assert data["outcome"] == "witness"
    report = SearchReport.from_json(out_path.read_text(), revalidate=True)
    assert report.witness == data["witness"]


def test_scan_human_mode_prints_witness(run):
    code, out, _ = run(["scan", "tribip", "--nmax", "6"])
    assert code == 1
    lines = out.strip().splitlines()
    assert lines[0] == "tribip: witness"
    assert json.loads(lines[1])["tournament"] == "6:0050"


def test_scan_legends(run):
    code, out, _ = run(["scan", "legends", "--h-n", "2", "--nmax", "4", "--json"])
    assert code == 0
    data = _data(out, "scan")
    assert data["outcome"] == "exhausted" and data["findings"]["frontier"] == 1


def test_enum_deterministic_bytes(run, tmp_path):
    p1, p2 = tmp_path / "a", tmp_path / "b"
    assert run(["enum", "--n", "5", "--output", str(p1)])[0] == 0
    assert run(["enum", "--n", "5", "--output", str(p2)])[0] == 0
    assert p1.read_bytes() == p2.read_bytes()
    assert len(p1.read_text().splitlines()) == 12
    code, out, _ = run(["enum", "--n", "4", "--json"])
    data = _data(out, "enum")
    assert data["count"] == 4


def test_exit_codes(run, tmp_path):
    code, _, err = run(["solve", "chi"], stdin_text="not a tournament\n")
    assert code == 2 and "error:" in err
    code, _, err = run(["solve", "chi"], stdin_text="65\n")
    assert code == 3
    code, _, err = run(["enum", "--n", "9"])
    assert code == 3
    code, _, _ = run(["gen", "nonsense"])
    assert code == 2
    code, _, err = run(["analyze", "numbering", "--order", "0,0,1"],
                       stdin_text=formats.emit_tmt(cyclic_triangle()))
    assert code == 2
    code, _, err = run(["gen", "paley", "--q", "6"])
    assert code == 2


def test_deadline_flag_exits_three(run):
    tmt = formats.emit_tmt(s_t(4))
    code, _, err = run(["solve", "chi", "--deadline-seconds", "-1"], stdin_text=tmt)
    assert code == 3 and "error:" in err


def test_help_exits_zero(run):
    code, out, _ = run(["--help"])
    assert code == 0
