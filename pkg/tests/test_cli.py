import json

import pytest

from relaylat.cli import LATENCY_HEADER, MAP_HEADER, SWEEP_HEADER, main

FIG4_FLAGS = ["--h0", "1", "--h1", "2", "--h2", "1",
              "--p-db", "10", "--pr-db", "22.04119982655925"]


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_latency_preset_fig4_json(capsys):
    code, out, _ = run(capsys, ["latency", "--preset", "fig4", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["snrs"]["snr_p2p"] == 10.0
    assert doc["snrs"]["snr_df1"] == 40.0
    assert 5400.0 <= doc["schemes"]["P2P"]["latency"] <= 6600.0
    assert 3960.0 <= doc["schemes"]["DF"]["latency"] <= 4840.0
    n_p2p = doc["schemes"]["P2P"]["latency"]
    n_df = doc["schemes"]["DF"]["latency"]
    assert (n_p2p - n_df) / n_p2p > 0.25
    assert doc["best"] == "DF"
    assert doc["high_snr"]["rate_condition_df"] is True


def test_latency_explicit_flags_match_preset(capsys):
    _, out1, _ = run(capsys, ["latency", "--preset", "fig4", "--format", "json"])
    _, out2, _ = run(capsys, ["latency", *FIG4_FLAGS,
                              "--b-bits", "10000", "--epsilon", "1e-3",
                              "--format", "json"])
    a, b = json.loads(out1), json.loads(out2)
    # powers agree to dB round-trip precision, latencies to float noise
    assert a["schemes"]["DF"]["latency"] == pytest.approx(
        b["schemes"]["DF"]["latency"], rel=1e-9
    )


def test_latency_text_output(capsys):
    code, out, _ = run(capsys, ["latency", "--preset", "fig4"])
    assert code == 0
    assert "best: DF" in out
    assert "ordering: DF<AF<P2P" in out


def test_latency_csv_header(capsys):
    code, out, _ = run(capsys, ["latency", "--preset", "fig4", "--format", "csv"])
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == LATENCY_HEADER
    assert len(lines) == 4
    assert lines[1].startswith("P2P,")


def test_latency_dead_relay_reports_infeasible(capsys):
    code, out, _ = run(capsys, ["latency", "--preset", "fig4", "--h1", "0",
                                "--h0", "1", "--h2", "1", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["schemes"]["DF"] is None
    assert doc["schemes"]["AF"] is None
    assert doc["best"] == "P2P"
    assert doc["schemes"]["P2P"]["latency"] > 0


def test_latency_integer_blocks(capsys):
    _, out, _ = run(capsys, ["latency", "--preset", "fig4", "--format", "json"])
    _, out_int, _ = run(capsys, ["latency", "--preset", "fig4",
                                 "--integer-blocks", "--format", "json"])
    a, b = json.loads(out), json.loads(out_int)
    for scheme in ("P2P", "DF", "AF"):
        cont = a["schemes"][scheme]["latency"]
        ceil = b["schemes"][scheme]["latency_ceil"]
        assert ceil is not None
        assert ceil >= cont


def test_sweep_header_and_order(capsys):
    code, out, _ = run(capsys, [
        "sweep", "--preset", "fig4", "--b-bits", "1000",
        "--sweep-var", "epsilon",
        "--values", "1e-3,1e-1,1e-5,1e-2,1e-4,1e-6",
    ])
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == SWEEP_HEADER
    assert len(lines) == 7
    values = [float(line.split(",")[1]) for line in lines[1:]]
    assert values == sorted(values)
    # DF stays the best scheme on this channel at every reliability level
    assert all(line.split(",")[-1] == "DF" for line in lines[1:])
    for line in lines[1:]:
        cols = line.split(",")
        assert float(cols[3]) <= float(cols[2])  # n_df <= n_p2p
        assert float(cols[3]) <= float(cols[4])  # n_df <= n_af


def test_sweep_deterministic_bytes(capsys):
    argv = ["sweep", "--preset", "fig4", "--sweep-var", "payload",
            "--log-range", "100", "10000", "5", "--epsilon", "1e-3"]
    _, out1, _ = run(capsys, argv)
    _, out2, _ = run(capsys, argv)
    assert out1 == out2


def test_sweep_single_value_single_row(capsys):
    code, out, _ = run(capsys, ["sweep", "--preset", "fig4",
                                "--sweep-var", "payload", "--values", "500"])
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 2


def test_sweep_row_reproduced_by_latency(capsys):
    _, sweep_out, _ = run(capsys, ["sweep", "--preset", "fig4",
                                   "--sweep-var", "payload", "--values", "2000"])
    row = sweep_out.strip().split("\n")[1].split(",")
    _, lat_out, _ = run(capsys, ["latency", "--preset", "fig4",
                                 "--b-bits", "2000", "--format", "csv"])
    lat_rows = {line.split(",")[0]: line.split(",")
                for line in lat_out.strip().split("\n")[1:]}
    assert row[2] == lat_rows["P2P"][1]
    assert row[3] == lat_rows["DF"][1]
    assert row[4] == lat_rows["AF"][1]


def test_sweep_json_format(capsys):
    code, out, _ = run(capsys, ["sweep", "--preset", "fig4", "--sweep-var",
                                "payload", "--values", "100,200",
                                "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert len(doc) == 2
    assert doc[0]["sweep_var"] == "payload"
    assert doc[0]["best"] == "DF"


def test_relay_map_header_and_singular(capsys):
    code, out, _ = run(capsys, [
        "relay-map", "--p-db", "20", "--pr-db", "23.010299956639813",
        "--b-bits", "1000", "--epsilon", "1e-3",
        "--x-min", "-0.5", "--x-max", "0.5", "--nx", "5",
        "--y-min", "-0.25", "--y-max", "0.25", "--ny", "3",
    ])
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == MAP_HEADER
    assert len(lines) == 1 + 15
    singular = [line for line in lines[1:] if "singular" in line]
    assert len(singular) == 1  # the cell at the source (0, 0)
    x, y = (float(v) for v in singular[0].split(",")[:2])
    assert (x, y) == (0.0, 0.0)


def test_relay_map_far_relay_prefers_p2p(capsys):
    code, out, _ = run(capsys, [
        "relay-map", "--p-db", "20", "--pr-db", "23.010299956639813",
        "--b-bits", "1000", "--epsilon", "1e-3",
        "--x-min", "-6", "--x-max", "-4", "--nx", "2",
        "--y-min", "3", "--y-max", "5", "--ny", "2",
    ])
    assert code == 0
    for line in out.strip().split("\n")[1:]:
        assert line.split(",")[6] == "P2P"


def test_relay_map_json_and_determinism(capsys):
    argv = ["relay-map", "--preset", "fig2", "--nx", "4", "--ny", "3",
            "--x-min", "0.1", "--x-max", "0.9", "--y-min", "0.1",
            "--y-max", "0.5", "--format", "json"]
    code, out1, _ = run(capsys, argv)
    assert code == 0
    _, out2, _ = run(capsys, argv + ["--jobs", "1"])
    assert out1 == out2  # thread count does not change the result
    rows = json.loads(out1)
    assert len(rows) == 12
    assert {"x", "y", "n_p2p", "ordering", "best",
            "rate_df_gt_p2p"} <= set(rows[0])


def test_relay_map_rejects_direct_gains(capsys):
    code, _, err = run(capsys, ["relay-map", "--preset", "fig2", "--h0", "1"])
    assert code == 2
    assert "usage error" in err


def test_validate_deterministic_json(capsys):
    argv = ["validate", "--preset", "fig4", "--b-bits", "100",
            "--scheme", "df", "--trials", "100000", "--seed", "42"]
    code, out1, _ = run(capsys, argv)
    assert code == 0
    _, out2, _ = run(capsys, argv + ["--jobs", "8"])
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["trials"] == 100000
    assert doc["within_target"] is True
    assert doc["union_bound"] <= 1e-3 * (1 + 1e-12)
    assert "budget-limit" in doc["note"]


def test_validate_af_scheme(capsys):
    code, out, _ = run(capsys, ["validate", "--preset", "fig4", "--b-bits",
                                "100", "--scheme", "af", "--trials", "50000",
                                "--seed", "7"])
    assert code == 0
    doc = json.loads(out)
    assert doc["scheme"] == "AF"
    assert "n3" in doc["plan"]


def test_validate_zero_trials_usage_error(capsys):
    code, _, err = run(capsys, ["validate", "--preset", "fig4",
                                "--scheme", "df", "--trials", "0"])
    assert code == 2
    assert "trials" in err


def test_check_props_json(capsys):
    code, out, _ = run(capsys, ["check-props", "--preset", "fig4",
                                "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["df_latency_condition"] is False
    assert doc["rate_condition_df"] is True
    assert doc["snrs"]["snr_df2"] == 160.0


def test_check_props_text(capsys):
    code, out, _ = run(capsys, ["check-props", "--preset", "fig4"])
    assert code == 0
    assert "DF latency condition: false" in out
    assert "DF rate condition: true" in out


def test_exit_code_usage_missing_channel(capsys):
    code, _, err = run(capsys, ["latency", "--b-bits", "100",
                                "--epsilon", "1e-3"])
    assert code == 2


def test_exit_code_usage_conflicting_channel(capsys):
    code, _, err = run(capsys, ["latency", "--preset", "fig4",
                                "--h0", "1", "--relay-x", "0.5"])
    assert code == 2
    assert "not both" in err


def test_exit_code_domain_error(capsys):
    code, _, err = run(capsys, ["latency", "--preset", "fig4",
                                "--epsilon", "2.0"])
    assert code == 3
    assert "domain error" in err


def test_exit_code_infeasible(capsys):
    code, _, err = run(capsys, ["latency", "--h0", "0", "--h1", "0",
                                "--h2", "1", "--p-db", "10", "--pr-db", "10",
                                "--b-bits", "100", "--epsilon", "1e-3"])
    assert code == 4
    assert "infeasible" in err


def test_config_file_defaults_and_flag_override(tmp_path, capsys):
    cfg = tmp_path / "point.json"
    cfg.write_text(json.dumps({
        "preset": "fig4", "b_bits": 2000.0, "epsilon": 1e-4,
    }))
    code, out, _ = run(capsys, ["latency", "--config", str(cfg),
                                "--format", "json"])
    assert code == 0
    assert json.loads(out)["workload"] == {"bits": 2000.0, "epsilon": 1e-4}
    # explicit flag wins over the file
    code, out, _ = run(capsys, ["latency", "--config", str(cfg),
                                "--b-bits", "500", "--format", "json"])
    assert json.loads(out)["workload"]["bits"] == 500.0


def test_config_file_unknown_key(tmp_path, capsys):
    cfg = tmp_path / "bad.json"
    cfg.write_text(json.dumps({"no_such_flag": 1}))
    code, _, err = run(capsys, ["latency", "--config", str(cfg)])
    assert code == 2
    assert "no_such_flag" in err


def test_output_file(tmp_path, capsys):
    target = tmp_path / "rows.csv"
    code, out, _ = run(capsys, ["sweep", "--preset", "fig4", "--sweep-var",
                                "payload", "--values", "100",
                                "--output", str(target)])
    assert code == 0
    assert out == ""
    content = target.read_text().strip().split("\n")
    assert content[0] == SWEEP_HEADER


def test_help_exits_zero(capsys):
    code, out, _ = run(capsys, ["--help"])
    assert code == 0
    assert "relay" in out
