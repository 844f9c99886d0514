import shutil
from fractions import Fraction

import pytest

from germinv.cli import console_main

from conftest import corpus_path


def run(capsys, *argv):
    code = console_main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def machine_dict(out):
    lines = out.splitlines()
    assert lines and lines[0].startswith("schema="), "schema line must come first"
    return dict(line.split("=", 1) for line in lines)


@pytest.fixture
def tmp_corpus(tmp_path):
    def copy(name):
        dst = tmp_path / f"{name}.germ"
        shutil.copy(corpus_path(name), dst)
        return str(dst)
    return copy


# -- single-invariant commands ---------------------------------------------------

def test_mu_image_on_a_stable_germ(capsys):
    code, out, _ = run(capsys, "mu-image", corpus_path("crosscap"),
                       "--no-cache", "--format", "machine")
    assert code == 0
    assert out == ("schema=germinv.mu-image.v1\n"
                   "mu_image=0\n"
                   "samuel_profile=0,0,0\n"
                   "stability=stable\n"
                   "warnings=0\n")


def test_image_lists_multigerm_factors(capsys):
    code, out, _ = run(capsys, "image", corpus_path("twoplane"),
                       "--no-cache", "--format", "machine")
    d = machine_dict(out)
    assert code == 0
    assert d["provenance"] == "eliminated"
    assert d["g"] == "y2*y3"
    assert {d["factor_1"], d["factor_2"]} == {"y2", "y3"}


def test_ft_command(capsys):
    code, out, _ = run(capsys, "ft", corpus_path("s1"),
                       "--no-cache", "--format", "machine")
    d = machine_dict(out)
    assert code == 0
    assert d["ft_codim"] == "1" and d["ft_dim"] == "1"
    assert "gen_1" in d


def test_ae_codim_and_its_gate(capsys):
    code, out, _ = run(capsys, "ae-codim", corpus_path("crosscap"),
                       "--no-cache", "--format", "machine")
    assert code == 0 and machine_dict(out)["ae_codim"] == "0"
    code, _, err = run(capsys, "ae-codim", corpus_path("exam1"),
                       "--no-cache", "--format", "machine")
    assert code == 1 and "is_stable_unfolding" in err


def test_lc_check(capsys):
    code, out, _ = run(capsys, "lc-check", corpus_path("s1"),
                       "--no-cache", "--format", "machine")
    d = machine_dict(out)
    assert code == 0
    assert d["lc_substitution"] == "true"
    assert d["lc_dim"] == "5" == d["lc_dim_expected"]


def test_milnor_command(capsys):
    code, out, _ = run(capsys, "milnor", "x^4 + y^2", "--vars", "x,y",
                       "--format", "machine")
    assert code == 0 and machine_dict(out)["milnor"] == "3"
    code, out, _ = run(capsys, "milnor", "x^2*y^2", "--vars", "x,y",
                       "--format", "machine")
    assert code == 0 and machine_dict(out)["milnor"] == "infinite"


# -- the full report ---------------------------------------------------------------

def test_report_machine_keys_and_values(capsys, tmp_corpus):
    code, out, _ = run(capsys, "report", tmp_corpus("s1"),
                       "--s0", "1/3", "--format", "machine")
    assert code == 0
    d = machine_dict(out)
    assert d["mu_image"] == "1" == d["mu_image_oracle"]
    assert d["oracle_s0"] == "1/3"
    assert d["ft_codim"] == "1" and d["ft_dim"] == "1"
    assert d["mu_br"] == "1"
    assert d["cm_flag"] == "true"
    assert d["stability"] == "unstable"
    assert d["ae_codim"] == "1"
    assert d["samuel_profile"] == "1,2,3"
    assert d["route_disagreement"] == "false"
    assert d["warnings"] == "0"
    assert "lc_dim" not in d          # only present under --with-lc


def test_report_with_lc_adds_the_dimension(capsys, tmp_corpus):
    code, out, _ = run(capsys, "report", tmp_corpus("s1"),
                       "--with-lc", "--format", "machine")
    assert code == 0 and machine_dict(out)["lc_dim"] == "5"


def test_report_human_format(capsys, tmp_corpus):
    code, out, _ = run(capsys, "report", tmp_corpus("crosscap"))
    assert code == 0
    assert "stability" in out and "stable" in out
    assert "=" not in out.splitlines()[0]   # aligned table, not key=value


def test_report_same_seed_is_byte_identical(capsys, tmp_corpus):
    path = tmp_corpus("s1")
    argv = ("report", path, "--seed", "7", "--format", "machine")
    code1, out1, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2


def test_seed_moves_the_sample_point(capsys, tmp_corpus):
    path = tmp_corpus("s1")
    values = {}
    for seed in ("1", "2"):
        code, out, _ = run(capsys, "report", path, "--seed", seed,
                           "--format", "machine")
        assert code == 0
        d = machine_dict(out)
        assert d["mu_image_oracle"] == "1"
        values[seed] = Fraction(d["oracle_s0"])
    assert values["1"] != values["2"] and all(v != 0 for v in values.values())


def test_route_disagreement_exits_3(capsys, tmp_corpus, monkeypatch):
    # force the slice oracle to lie; the report must flag it and exit 3
    import germinv.invariants as inv
    real = inv.slice_milnor_total

    def lying_oracle(G, s0=None, seed=None):
        r = real(G, s0=s0, seed=seed)
        return inv.SliceResult(r.total + 41, r.s0, r.raw, r.baseline, r.rejected)

    monkeypatch.setattr(inv, "slice_milnor_total", lying_oracle)
    code, out, _ = run(capsys, "report", tmp_corpus("s1"),
                       "--format", "machine")
    assert code == 3
    d = machine_dict(out)
    assert d["route_disagreement"] == "true"
    assert d["mu_image_oracle"] == "42" and d["mu_image"] == "1"
    assert int(d["warnings"]) >= 1 and "does not match" in out


# -- error and limit handling ------------------------------------------------------

def test_nonfinite_germ_exits_1(capsys):
    code, _, err = run(capsys, "mu-image", corpus_path("nonfinite"),
                       "--no-cache")
    assert code == 1
    assert "elimination ideal not principal" in err


def test_missing_file_exits_1(capsys, tmp_path):
    code, _, err = run(capsys, "report", str(tmp_path / "absent.germ"))
    assert code == 1 and "cannot read" in err


def test_bad_s0_exits_1(capsys, tmp_corpus):
    path = tmp_corpus("s1")
    code, _, err = run(capsys, "report", path, "--s0", "lots")
    assert code == 1 and "--s0 must be a rational" in err
    code, _, err = run(capsys, "report", path, "--s0", "0")
    assert code == 1 and "nonzero" in err


def test_pair_budget_exits_2(capsys, tmp_path, tmp_corpus):
    limits = tmp_path / "limits.txt"
    limits.write_text("max-pairs 1\n")
    code, _, err = run(capsys, "report", tmp_corpus("s1"), "--no-cache",
                       "--limits", str(limits))
    assert code == 2 and "pair budget" in err


def test_unknown_limit_key_exits_1(capsys, tmp_path, tmp_corpus):
    limits = tmp_path / "limits.txt"
    limits.write_text("pairs 1\n")
    code, _, err = run(capsys, "report", tmp_corpus("s1"),
                       "--limits", str(limits))
    assert code == 1 and "unknown limit" in err


# -- the image-equation cache ------------------------------------------------------

def test_cache_sidecar_round_trip(capsys, tmp_path, tmp_corpus):
    path = tmp_corpus("s1")
    code, out1, _ = run(capsys, "ft", path, "--format", "machine")
    assert code == 0
    sidecar = tmp_path / "s1.germ.gcache"
    text = sidecar.read_text()
    assert text.startswith("germinv.gcache.v1\nkey=")
    assert "factor=" in text
    code, out2, _ = run(capsys, "ft", path, "--format", "machine")
    assert code == 0 and out2 == out1


def test_stale_cache_is_recomputed(capsys, tmp_path, tmp_corpus):
    path = tmp_corpus("s1")
    sidecar = tmp_path / "s1.germ.gcache"
    run(capsys, "ft", path, "--format", "machine")
    good = sidecar.read_text()
    sidecar.write_text(good.replace("key=", "key=dead"))
    code, out, _ = run(capsys, "ft", path, "--format", "machine")
    assert code == 0 and machine_dict(out)["ft_codim"] == "1"
    assert sidecar.read_text() == good    # rewritten with the right key


def test_no_cache_leaves_no_sidecar(capsys, tmp_path, tmp_corpus):
    path = tmp_corpus("crosscap")
    run(capsys, "mu-br", path, "--no-cache", "--format", "machine")
    assert not (tmp_path / "crosscap.germ.gcache").exists()
