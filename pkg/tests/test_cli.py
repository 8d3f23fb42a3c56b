import pytest

from twisted_gpt.cli import cli_main


def run(capsys, *argv):
    code = cli_main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def gab_keys(tmp_path, capsys):
    pub, sec = tmp_path / "pk", tmp_path / "sk"
    code, _, _ = run(capsys, "--seed", 5, "keygen", "--family", "gab", "--n", 12, "--k", 4,
                     "--lam", 2, "--s", 1, "--pub", pub, "--sec", sec)
    assert code == 0
    return pub, sec


def test_pipeline(tmp_path, capsys, gab_keys):
    pub, sec = gab_keys
    msg, ct, dec = tmp_path / "m", tmp_path / "c", tmp_path / "d"
    assert run(capsys, "--seed", 6, "encrypt", "--pub", pub, "--message", msg, "--random-message", "--out", ct)[0] == 0
    assert run(capsys, "decrypt", "--sec", sec, "--ciphertext", ct, "--out", dec)[0] == 0
    assert dec.read_text() == msg.read_text()
    # an explicit message file is accepted as well
    assert run(capsys, "encrypt", "--pub", pub, "--message", msg, "--out", ct)[0] == 0
    assert run(capsys, "decrypt", "--sec", sec, "--ciphertext", ct, "--out", dec)[0] == 0
    assert dec.read_text() == msg.read_text()


def test_determinism(tmp_path, capsys, gab_keys):
    pub, sec = gab_keys
    pub2, sec2 = tmp_path / "pk2", tmp_path / "sk2"
    run(capsys, "--seed", 5, "keygen", "--family", "gab", "--n", 12, "--k", 4, "--lam", 2, "--s", 1,
        "--pub", pub2, "--sec", sec2)
    assert pub.read_bytes() == pub2.read_bytes() and sec.read_bytes() == sec2.read_bytes()
    outs = []
    for name in ("c1", "c2"):
        run(capsys, "--seed", 9, "encrypt", "--pub", pub, "--message", tmp_path / "m", "--random-message",
            "--out", tmp_path / name)
        outs.append((tmp_path / name).read_bytes())
    assert outs[0] == outs[1]
    transcripts = [run(capsys, "--seed", 3, "attack", "overbeck", pub)[1] for _ in range(2)]
    assert transcripts[0] == transcripts[1]


def test_profile_and_distinguish(capsys, gab_keys):
    pub, sec = gab_keys
    code, out, _ = run(capsys, "qsum-profile", pub)
    assert code == 0 and out.splitlines()[0] == "i=0 dim=4 inc=4"
    code, out, _ = run(capsys, "qsum-profile", sec)
    assert out.strip().endswith("class=gabidulin_like")
    code, out, _ = run(capsys, "distinguish", sec)
    assert code == 0 and out.startswith("class=gabidulin_like critical_i=7 dualdim=1 moore=true")


def test_attacks(tmp_path, capsys, gab_keys):
    pub, _ = gab_keys
    code, out, _ = run(capsys, "attack", "overbeck", pub)
    assert code == 0 and "success=true" in out
    tpub, tsec = tmp_path / "tpk", tmp_path / "tsk"
    assert run(capsys, "--seed", 1, "keygen", "--family", "twisted", "--n", 8, "--k", 3, "--ell", 1,
               "--pub", tpub, "--sec", tsec)[0] == 0
    code, out, err = run(capsys, "attack", "overbeck", tpub)
    assert code == 3 and "dualdim=2" in err and len(err.strip().splitlines()) == 1
    code, out, err = run(capsys, "attack", "exhaustive", tpub, "--budget", 5)
    assert code == 3 and "budget exceeded" in err
    code, out, _ = run(capsys, "distinguish", tpub)
    assert out.startswith("class=twisted_like(1)")


def test_twisted_decrypt(tmp_path, capsys):
    pub, sec = tmp_path / "pk", tmp_path / "sk"
    run(capsys, "--seed", 2, "keygen", "--family", "twisted", "--n", 6, "--k", 3, "--ell", 1, "--lam", 1,
        "--pub", pub, "--sec", sec)
    run(capsys, "encrypt", "--pub", pub, "--message", tmp_path / "m", "--random-message", "--out", tmp_path / "c")
    assert run(capsys, "decrypt", "--sec", sec, "--ciphertext", tmp_path / "c", "--out", tmp_path / "d")[0] == 0
    assert (tmp_path / "d").read_text() == (tmp_path / "m").read_text()
    code, _, err = run(capsys, "--guard", 2, "decrypt", "--sec", sec, "--ciphertext", tmp_path / "c")
    assert code == 3 and err.startswith("failure:")


def test_params(capsys):
    code, out, _ = run(capsys, "params", "table", "--paper")
    assert code == 0 and "3.28 KB" in out and "1123.43 KB" in out
    code, out, _ = run(capsys, "params", "table")
    assert len(out.splitlines()) == 2
    code, out, _ = run(capsys, "params", "table", "--row", "system=loidreau,q=2,k=32,n=50,m=50")
    assert "3.60 KB" in out
    code, out, _ = run(capsys, "params", "search", "--n", "26", "--k", "18", "--ell", "2",
                       "--max-key", 4000, "--min-bits", 200, "--lam", 6)
    assert code == 0 and "Twisted GPT" in out and "3.28 KB" in out


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0 and out.count("ok=true") == 4


def test_exit_codes(tmp_path, capsys):
    assert run(capsys)[0] == 1
    assert run(capsys, "frobnicate")[0] == 1
    assert run(capsys, "keygen", "--n", 5)[0] == 1
    code, _, err = run(capsys, "keygen", "--n", 5, "--k", 9, "--pub", tmp_path / "a", "--sec", tmp_path / "b")
    assert code == 2 and err.startswith("validation:")
    code, _, err = run(capsys, "keygen", "--family", "twisted", "--n", 9, "--k", 3, "--pub", tmp_path / "a",
                       "--sec", tmp_path / "b")
    assert code == 2 and "Delta" in err
    bad = tmp_path / "bad"
    bad.write_text("GPTPUB\nnonsense\n")
    assert run(capsys, "attack", "overbeck", bad)[0] == 2
    assert run(capsys, "qsum-profile", tmp_path / "missing")[0] == 2
