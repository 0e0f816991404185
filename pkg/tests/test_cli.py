import json
from pathlib import Path

import numpy as np

from scsi_listdec.cli import main
from scsi_listdec.scsi_codec import pack_symbols, unpack_symbols

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_design_rs(capsys, tmp_path):
    rc, out, _ = run(capsys, "design", "--q", 256, "--n", 255, "--p", 0.3, "--eps", 1e-4,
                     "--crc-bits", 12, "--json", tmp_path / "d.json")
    assert rc == 0
    assert "code: (255,88)" in out and "unique decoding: (255,45)" in out
    rec = json.loads((tmp_path / "d.json").read_text())
    assert rec["k"] == 88 and rec["rate_no_crc"]["num"] == 167


def test_design_rm(capsys):
    rc, out, _ = run(capsys, "design", "--q", 2, "--n", 1024, "--p", 0.3, "--eps", 1e-4)
    assert rc == 0 and "(1024,56)" in out and "d_min: 256" in out


def test_design_usage_and_infeasible(capsys):
    rc, _, err = run(capsys, "design", "--eps", 1.5)
    assert rc == 1 and "eps" in err
    assert run(capsys, "design", "--q", 256, "--n", 255, "--p", 0.999, "--eps", 1e-4)[0] == 2
    assert run(capsys, "design", "--bogus")[0] == 1
    assert run(capsys)[0] == 1


def test_encode_golden_and_zero(capsys, tmp_path):
    out = tmp_path / "m.bin"
    rc, text, _ = run(capsys, "encode", "--m", 4, "--n", 15, "--k", 11,
                      "--input", GOLDEN / "rs15_11_input.bin", "--output", out)
    assert rc == 0 and "payload bits: 28" in text
    assert out.read_bytes() == (GOLDEN / "rs15_11_message.bin").read_bytes()
    zero = tmp_path / "z.bin"
    zero.write_bytes(bytes(8))
    assert run(capsys, "encode", "--m", 4, "--n", 15, "--k", 11, "--input", zero, "--output", out)[0] == 0
    assert out.read_bytes()[-4:] == bytes(4)


def test_encode_truncated_input(capsys, tmp_path):
    short = tmp_path / "s.bin"
    short.write_bytes(bytes(5))
    rc, _, err = run(capsys, "encode", "--m", 4, "--n", 15, "--k", 11, "--input", short,
                     "--output", tmp_path / "o.bin")
    assert rc == 1 and "expected 60 bits" in err and "got 40 bits" in err


def test_encode_decode_round_trips(capsys, tmp_path):
    rng = np.random.default_rng(9)
    x = rng.integers(0, 16, 15)
    (tmp_path / "x.bin").write_bytes(pack_symbols(x, 4))
    assert run(capsys, "encode", "--m", 4, "--n", 15, "--k", 2, "--input", tmp_path / "x.bin",
               "--output", tmp_path / "m.bin")[0] == 0

    def decode(y, *extra):
        (tmp_path / "y.bin").write_bytes(pack_symbols(y, 4))
        return run(capsys, "decode", "--input", tmp_path / "m.bin", "--side-info", tmp_path / "y.bin",
                   "--output", tmp_path / "xh.bin", *extra)

    assert decode(x)[0] == 0
    assert unpack_symbols((tmp_path / "xh.bin").read_bytes(), 15, 4).tolist() == x.tolist()
    (tmp_path / "xh.bin").unlink()

    y = x.copy()
    y[:8] ^= 5
    rc, out, _ = decode(y, "--progressive")
    assert rc == 0 and "Recovered" in out

    (tmp_path / "xh.bin").unlink()
    rc, out, _ = decode(x ^ 1, "--tau", 3)
    assert rc == 3 and ("NoCandidate" in out or "NoCrcMatch" in out)
    assert not (tmp_path / "xh.bin").exists()

    (tmp_path / "m.bin").write_bytes(b"junk")
    assert decode(x)[0] == 1


def test_simulate_determinism_and_config(capsys, tmp_path):
    cfg = tmp_path / "sim.cfg"
    cfg.write_text("# smoke run\nm = 4\nn = 15\nk = 3\np = 0.3\ntrials = 30\nseed = 4\n")
    outs = []
    for i in range(2):
        rc, out, _ = run(capsys, "simulate", "--config", cfg, "--output", tmp_path / f"r{i}.txt",
                         "--json", tmp_path / f"r{i}.json")
        assert rc == 0
        outs.append(out)
    assert outs[0] == outs[1]
    assert (tmp_path / "r0.txt").read_bytes() == (tmp_path / "r1.txt").read_bytes()
    assert (tmp_path / "r0.json").read_bytes() == (tmp_path / "r1.json").read_bytes()
    assert json.loads((tmp_path / "r0.json").read_text())["trials"] == 30
    # command-line flags override the config file
    rc, out, _ = run(capsys, "simulate", "--config", cfg, "--trials", 5)
    assert "trials: 5\n" in out


def test_config_rejects_extras(capsys, tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("q = 256\n")
    rc, _, err = run(capsys, "simulate", "--config", cfg)
    assert rc == 1 and "'q'" in err
    cfg.write_text("no equals sign\n")
    assert run(capsys, "paper-tables", "--config", cfg)[0] == 1
    assert run(capsys, "encode", "--seed", 3)[0] == 1


def test_crc_bits_must_match_generator(capsys, tmp_path):
    rc, _, err = run(capsys, "simulate", "--m", 4, "--n", 15, "--k", 3, "--p", 0.2, "--crc-bits", 8)
    assert rc == 1 and "disagrees" in err


def test_tables_command(capsys, tmp_path):
    rc, out, _ = run(capsys, "paper-tables", "--json", tmp_path / "t.json")
    assert rc == 0
    assert out.count("DOCUMENTED-DISCREPANCY") == 2  # the cell plus the summary line
    assert "MISMATCH" not in out
    rows = json.loads((tmp_path / "t.json").read_text())
    statuses = [c["status"] for r in rows for c in r["cells"].values()]
    assert statuses.count("DOCUMENTED-DISCREPANCY") == 1
    rs = next(r for r in rows if r["example"].startswith("RS"))
    assert rs["cells"]["rate+CRC"]["published"] == "0.702"
    for col in ("T_eps", "code", "rate", "unique rate"):
        assert rs["cells"][col]["status"] == "MATCH"
