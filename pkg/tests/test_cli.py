import json

import pytest

from ncquad.cli import main, parse_quadratic_expression, resolve_z_spec
from ncquad.exactlin import qq
from ncquad.families import commutative_presentation, word_vector
from ncquad.qalg import QuadraticPresentation

COMM_FILE = "presentations/comm4.json"
SKLY_FILE = "presentations/sklyanin_a.json"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_expression_parser():
    names = ("x0", "x1", "x2", "x3")
    vec = parse_quadratic_expression("x0*x3-x1*x2", names)
    assert vec == word_vector(4, {(0, 3): 1, (1, 2): -1})
    vec = parse_quadratic_expression("1/2*x0*x0 + (x1 - x2)*x3", names)
    assert vec == word_vector(4, {(0, 0): qq(1, 2), (1, 3): 1, (2, 3): -1})
    with pytest.raises(ValueError):
        parse_quadratic_expression("x0", names)
    with pytest.raises(ValueError):
        parse_quadratic_expression("x0*x1*x2", names)
    with pytest.raises(ValueError):
        parse_quadratic_expression("y0*y1", names)


def test_resolve_central_index():
    p = QuadraticPresentation.load(open(SKLY_FILE).read())
    lift, table = resolve_z_spec("1", p)
    assert len(lift) == 16
    with pytest.raises(ValueError):
        resolve_z_spec("7", p, table)


def test_hilbert_command(capsys):
    code, out = run(capsys, "hilbert", SKLY_FILE, "--degree", "5", "--json")
    assert code == 0
    assert json.loads(out)["dims"] == [1, 4, 10, 20, 35, 56]


def test_dual_roundtrip(capsys):
    code, out = run(capsys, "dual", COMM_FILE, "--json")
    assert code == 0
    dual = QuadraticPresentation.from_json_dict(json.loads(out))
    assert len(dual.relations) == 10


def test_center_command(capsys):
    code, out = run(capsys, "center", SKLY_FILE, "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["dimension"] == 2
    assert len(payload["basis"]) == 2


def test_smooth_command_spec_example(capsys):
    code, out = run(capsys, "smooth", COMM_FILE, "--z", "x0*x3-x1*x2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["smooth"] is True
    assert payload["ruling_count"] == 2


def test_smooth_roundtrips_as_json(capsys):
    code, out = run(capsys, "smooth", COMM_FILE, "--z", "x0*x0+x1*x1+x2*x2", "--json")
    payload = json.loads(out)
    assert json.loads(json.dumps(payload, sort_keys=True)) == payload
    assert payload["ruling_count"] == 1 and payload["smooth"] is False


def test_clifford_command(capsys):
    code, out = run(capsys, "clifford", COMM_FILE, "--z", "x0*x3-x1*x2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["dim"] == 8
    assert len(payload["structure"]) == 8


def test_noncentral_z_exit_code(capsys):
    code, _ = run(capsys, "smooth", SKLY_FILE, "--z", "x0*x0")
    assert code == 1


def test_parse_error_exit_code(capsys):
    code, _ = run(capsys, "smooth", COMM_FILE, "--z", "x0*x9")
    assert code == 2
    code, _ = run(capsys, "hilbert", "no-such-file.json")
    assert code == 2


def test_k0_suite(capsys):
    code, out = run(capsys, "k0", "suite", "--json")
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_k0_table_and_fat(capsys):
    code, out = run(capsys, "k0", "table", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["euler"][0] == [1, 1, 1, 1]
    code, out = run(capsys, "k0", "fat", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["class"] == [0, 1, -1, 3]
    assert payload["self_intersection"] == -2
    assert payload["h0"] == 3


def test_sklyanin_singular_spec_example(capsys):
    code, out = run(capsys, "sklyanin", "--curve", "5,-5", "--tau", "-4,6",
                    "singular", "--json")
    assert code == 0
    assert json.loads(out)["distinct"] == 4


def test_sklyanin_label_and_ruling(capsys):
    from ncquad.exactlin import qq_str
    from ncquad.skly import Curve

    code, out = run(capsys, "sklyanin", "--curve", "5,-5", "--tau", "-4,6",
                    "label", "--z", "-4,-6", "--json")
    assert code == 0
    assert json.loads(out)["singular"] is True

    curve = Curve(5, -5, tau=(-4, 6))
    z = curve.mul(3, curve.tau)

    def fmt(p):
        return "%s,%s" % (qq_str(p.x), qq_str(p.y))

    def line_through(s, p):
        return "%s:%s" % (fmt(p), fmt(curve.add(s, curve.neg(p))))

    tau = curve.tau
    l1 = line_through(z, tau)
    l2 = line_through(z, curve.mul(4, tau))
    l3 = line_through(curve.partner(z), curve.mul(-2, tau))
    base = ["sklyanin", "--curve", "5,-5", "--tau", "-4,6",
            "ruling", "--z", fmt(z)]
    code, out = run(capsys, *base, "--line", l1, "--line", l2, "--json")
    assert code == 0 and json.loads(out)["same_ruling"] is True
    code, out = run(capsys, *base, "--line", l1, "--line", l3, "--json")
    assert code == 0 and json.loads(out)["same_ruling"] is False
    # a line that misses the member is a validation error
    off = "%s:%s" % (fmt(curve.mul(2, tau)), fmt(curve.mul(4, tau)))
    code, _ = run(capsys, *base, "--line", l1, "--line", off)
    assert code == 2


def test_mf_verify_commands(capsys):
    phi = "[[[1,0,0,0],[0,1,0,0]],[[0,0,1,0],[0,0,0,1]]]"
    psi = "[[[0,0,0,1],[0,-1,0,0]],[[0,0,-1,0],[1,0,0,0]]]"
    code, out = run(capsys, "mf-verify", COMM_FILE, "--z", "x0*x3-x1*x2",
                    "--phi", phi, "--psi", psi, "--json")
    assert code == 0
    assert json.loads(out)["ok"] is True
    bad_psi = "[[[0,0,0,1],[0,1,0,0]],[[0,0,-1,0],[1,0,0,0]]]"
    code, out = run(capsys, "mf-verify", COMM_FILE, "--z", "x0*x3-x1*x2",
                    "--phi", phi, "--psi", bad_psi, "--json")
    assert code == 1
    payload = json.loads(out)
    assert payload["ok"] is False and "witness" in payload


def test_pencil_command(capsys):
    code, out = run(capsys, "pencil", SKLY_FILE, "--omega1", "0", "--omega2", "1",
                    "--samples", "42", "--degree-bound", "16", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["distinct_root_count"] == 4
    assert payload["mode"] in ("polynomial", "rational")


def test_human_output_lines(capsys):
    code, out = run(capsys, "smooth", COMM_FILE, "--z", "x0*x3-x1*x2")
    assert code == 0
    assert "smooth: True" in out
    assert "ruling_count: 2" in out
