import pytest

from amle import config as C
from amle.errors import ConfigError


def write(tmp_path, text):
    f = tmp_path / "c.toml"
    f.write_text(text)
    return f


def test_defaults_reproduce_study_cells():
    cfg = C.defaults_for("estimator_study")
    assert cfg.theta == C.VASICEK_TABLE2 and cfg.R == 200 and cfg.grid.cells()[0][0] == 500
    w = C.defaults_for("wald_study")
    assert w.R == 500 and w.grid.schedule == "n^-1/6" and w.theta == C.WALD_THETA


def test_load_merges_sections(tmp_path):
    cfg = C.load(write(tmp_path, 'kind = "estimator_study"\nmodel = "cir"\ntheta = [0.892, 0.09, 0.1817]\n'
                                 'R = 10\n[grid]\nn = [1000]\n'))
    assert cfg.model == "cir" and cfg.R == 10
    assert cfg.grid.n == (1000,) and cfg.grid.J == (1, 2)


def test_parse_delta():
    assert C.parse_delta("1/12") == pytest.approx(1 / 12)
    assert C.parse_delta(0.25) == 0.25
    assert C.parse_delta("2", bounded=False) == 2.0
    for bad in ("1", "x", "1/0", -0.1):
        with pytest.raises(ConfigError):
            C.parse_delta(bad)


def test_schedule_cells():
    g = C.Grid(n=(500, 1000), delta=(), schedule="n^-1/2")
    cells = g.cells()
    assert cells[0][2] == pytest.approx(500 ** -0.5)
    assert round(cells[0][2], 4) == 0.0447


@pytest.mark.parametrize("text,msg", [
    ("bogus = 1\n", "unknown key"),
    ("[grid]\nfoo = 1\n", "unknown key"),
    ('kind = "nope"\n', "kind"),
    ('model = "heston"\n', "unknown model"),
    ("theta = [1.0, 2.0]\n", "theta has 2"),
    ("R = 0\n", "R must be"),
    ("seed = -1\n", "seed"),
    ('[grid]\nschedule = "weekly"\n', "schedule"),
    ("[grid]\nJ = [7]\n", "J entries"),
    ('[grid]\ndelta = ["3/2"]\n', "delta"),
    ('[wald]\ninfo = "x"\n', "wald.info"),
    ("not toml =\n", "c.toml"),
])
def test_validation_errors(tmp_path, text, msg):
    with pytest.raises(ConfigError, match=msg):
        C.load(write(tmp_path, text))


def test_missing_file(tmp_path):
    with pytest.raises(ConfigError, match="cannot read"):
        C.load(tmp_path / "missing.toml")


def test_exact_wald_needs_vasicek():
    with pytest.raises(ConfigError):
        C.defaults_for("wald_study").replace(model="cir", theta=C.CIR_TABLE3)
