from __future__ import annotations

import random

import pytest

from gapstego import parse_key, parse_stream, serialize_key, KeyFile, validate_generators
from gapstego.cli import main
from gapstego.selftest import run_selftest


def write_key(tmp_path, gens, mode="telescopic", seed=0, salt_pair=None, name="k.key"):
    path = tmp_path / name
    path.write_text(serialize_key(KeyFile(validate_generators(gens), mode, seed, salt_pair)))
    return path


@pytest.fixture
def viable_key(tmp_path):
    # (37, 38) is coprime, viable mod 16, and lcm(37,38) > F = 1331
    return write_key(tmp_path, (37, 38), mode="appendix-c", salt_pair=(0, 1))


class TestKeygen:
    def test_writes_valid_key_and_summary(self, tmp_path, capsys):
        out = tmp_path / "a.key"
        assert main(["keygen", "--seed", "1", "--out", str(out)]) == 0
        line = capsys.readouterr().out.strip()
        assert line.startswith("generators=")
        for field in ("frobenius=", "genus=", "symmetric=", "telescopic=", "seed=1"):
            assert field in line
        key = parse_key(out.read_text())
        assert key.seed == 1
        assert key.mode == "telescopic"

    def test_deterministic_files(self, tmp_path):
        a, b = tmp_path / "a.key", tmp_path / "b.key"
        assert main(["keygen", "--seed", "9", "--out", str(a)]) == 0
        assert main(["keygen", "--seed", "9", "--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_appendix_c_mode(self, tmp_path):
        out = tmp_path / "c.key"
        assert main(["keygen", "--mode", "appendix-c", "--seed", "3", "--out", str(out)]) == 0
        key = parse_key(out.read_text())
        assert len(key.generators) == 5
        assert 500 <= key.generators[0] <= 1000

    def test_n_elements_1_is_usage_error(self, tmp_path, capsys):
        rc = main(["keygen", "--n-elements", "1", "--out", str(tmp_path / "x.key")])
        assert rc == 2
        assert "error:" in capsys.readouterr().err

    def test_entropy_seed_recorded(self, tmp_path):
        out = tmp_path / "e.key"
        assert main(["keygen", "--out", str(out), "--n-elements", "2"]) == 0
        key = parse_key(out.read_text())
        assert 0 <= key.seed < 2**64


class TestInspect:
    def test_4_6_9_report(self, tmp_path, capsys):
        key = write_key(tmp_path, (4, 6, 9))
        assert main(["inspect", "--key", str(key)]) == 0
        out = capsys.readouterr().out
        lines = dict(
            ln.split(" ", 1) for ln in out.strip().splitlines() if " " in ln
        )
        assert lines["multiplicity"] == "4"
        assert lines["frobenius"] == "11"
        assert lines["genus"] == "6"
        assert lines["gap_density"] == "1/2"
        assert lines["symmetric"] == "true"
        assert lines["telescopic"] == "true"
        assert lines["minimal_generators"] == "4,6,9"
        assert lines["apery"] == "0,9,6,15"
        assert lines["wilf"].startswith("holds (18 >= 12)")
        assert lines["davison"].startswith("holds")

    def test_5_7_report(self, tmp_path, capsys):
        key = write_key(tmp_path, (5, 7))
        assert main(["inspect", "--key", str(key)]) == 0
        out = capsys.readouterr().out
        assert "frobenius 23" in out
        assert "genus 12" in out
        assert "symmetric true" in out
        # 2 minimal generators, so no davison line
        assert "davison" not in out

    def test_apery_truncation(self, tmp_path, capsys):
        key = write_key(tmp_path, (101, 102), mode="appendix-c")
        assert main(["inspect", "--key", str(key)]) == 0
        out = capsys.readouterr().out
        apery_line = next(ln for ln in out.splitlines() if ln.startswith("apery"))
        assert "(+37 more)" in apery_line
        assert len(apery_line.split(" ")[1].split(",")) == 64

    def test_corrupt_key(self, tmp_path, capsys):
        bad = tmp_path / "bad.key"
        bad.write_text("not a key\n")
        assert main(["inspect", "--key", str(bad)]) == 2
        assert "error:" in capsys.readouterr().err

    def test_missing_file(self, tmp_path):
        assert main(["inspect", "--key", str(tmp_path / "nope.key")]) == 2


class TestEncodeDecode:
    def round_trip(self, tmp_path, key_path, payload, salt=False, seed="5"):
        src = tmp_path / "payload.bin"
        src.write_bytes(payload)
        stream = tmp_path / "stream.txt"
        out = tmp_path / "out.bin"
        encode = ["encode", "--key", str(key_path), "--in", str(src), "--out", str(stream), "--seed", seed]
        if salt:
            encode.append("--salt")
        assert main(encode) == 0
        assert main(["decode", "--key", str(key_path), "--in", str(stream), "--out", str(out), "--verify"]) == 0
        return stream, out.read_bytes()

    def test_seven_bytes_fourteen_values(self, tmp_path, viable_key):
        stream, recovered = self.round_trip(tmp_path, viable_key, b"BONJOUR")
        assert recovered == b"BONJOUR"
        values = parse_stream(stream.read_text())
        assert len(values.values) == 14
        assert not values.salted

    def test_empty_payload(self, tmp_path, viable_key):
        stream, recovered = self.round_trip(tmp_path, viable_key, b"")
        assert recovered == b""
        assert stream.read_text() == ""

    def test_binary_payload_salted(self, tmp_path, viable_key):
        payload = bytes(random.Random(2).randbytes(257))
        stream, recovered = self.round_trip(tmp_path, viable_key, payload, salt=True)
        assert recovered == payload
        parsed = parse_stream(stream.read_text())
        assert parsed.salted
        assert parsed.salt_period == 37 * 38

    def test_encode_deterministic(self, tmp_path, viable_key):
        s1, _ = self.round_trip(tmp_path, viable_key, b"hello")
        first = s1.read_text()
        s2, _ = self.round_trip(tmp_path, viable_key, b"hello")
        assert s2.read_text() == first

    def test_unviable_key_refused(self, tmp_path, capsys):
        key = write_key(tmp_path, (5, 7))  # class 5 mod 16 is empty
        src = tmp_path / "p.bin"
        src.write_bytes(b"x")
        rc = main(["encode", "--key", str(key), "--in", str(src), "--out", str(tmp_path / "s.txt")])
        assert rc == 2
        assert "class 5" in capsys.readouterr().err

    def test_verify_flags_member_value(self, tmp_path, viable_key, capsys):
        stream = tmp_path / "stream.txt"
        src = tmp_path / "p.bin"
        src.write_bytes(b"hi")
        assert main(["encode", "--key", str(viable_key), "--in", str(src), "--out", str(stream), "--seed", "1"]) == 0
        values = parse_stream(stream.read_text()).values
        tampered = values + (37 + 38, 2 * 37 + 38)  # both members, so both flagged
        stream.write_text("".join(f"{v}\n" for v in tampered))
        rc = main(["decode", "--key", str(viable_key), "--in", str(stream), "--out", str(tmp_path / "o.bin"), "--verify"])
        assert rc == 3
        err = capsys.readouterr().err
        assert "positions" in err
        assert f"{len(values)},{len(values) + 1}" in err

    def test_odd_stream_is_input_error(self, tmp_path, viable_key, capsys):
        stream = tmp_path / "odd.txt"
        stream.write_text("1\n2\n3\n")
        rc = main(["decode", "--key", str(viable_key), "--in", str(stream), "--out", str(tmp_path / "o.bin")])
        assert rc == 2
        assert "odd" in capsys.readouterr().err


class TestAnalyze:
    def test_report_lines(self, tmp_path, viable_key):
        src = tmp_path / "p.bin"
        src.write_bytes(random.Random(0).randbytes(200))
        stream = tmp_path / "s.txt"
        assert main(["encode", "--key", str(viable_key), "--in", str(src), "--out", str(stream), "--seed", "8"]) == 0
        assert main(["analyze", "--in", str(stream), "--key", str(viable_key)]) == 0

    def test_report_contents(self, tmp_path, viable_key, capsys):
        stream = tmp_path / "s.txt"
        stream.write_text("".join(f"{v % 16}\n" for v in range(160)))
        assert main(["analyze", "--in", str(stream)]) == 0
        out = capsys.readouterr().out
        assert "n_values 160" in out
        assert "chi_square 0.0000" in out
        assert "reject_uniformity false" in out
        assert "gap_density" not in out

    def test_short_stream_rejected(self, tmp_path, capsys):
        stream = tmp_path / "s.txt"
        stream.write_text("1\n2\n")
        assert main(["analyze", "--in", str(stream)]) == 2
        assert "error:" in capsys.readouterr().err


class TestSelftest:
    def test_cli_passes(self, capsys):
        assert main(["selftest", "--seed", "0"]) == 0
        out = capsys.readouterr().out
        assert "selftest passed" in out
        assert out.count("ok ") == 7

    def test_deterministic_output(self, capsys):
        main(["selftest", "--seed", "42"])
        first = capsys.readouterr().out
        main(["selftest", "--seed", "42"])
        assert capsys.readouterr().out == first

    def test_injected_fault_names_suite(self, monkeypatch):
        import gapstego.formulas as formulas_mod

        monkeypatch.setattr(formulas_mod, "sylvester", lambda a, b: 0)
        lines = []
        assert run_selftest(seed=0, echo=lines.append) is False
        assert any("FAIL sylvester-cross-check" in ln for ln in lines)
        assert any("--seed 0" in ln for ln in lines)
