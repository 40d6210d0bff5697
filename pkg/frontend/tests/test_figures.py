"""Figure package tests: every figure id renders from tables produced by
the ranking CLI (its external interface), deterministically."""

import json
import subprocess
import sys

import pytest

from rankplots import FIGURE_IDS, FigureSpec, SchemaError, build_figure, render

PETERSEN = "\n".join(
    [f"o{i} o{(i + 1) % 5}" for i in range(5)]
    + [f"o{i} i{i}" for i in range(5)]
    + [f"i{i} i{(i + 2) % 5}" for i in range(5)]) + "\n"


def _run_cli(args):
    proc = subprocess.run([sys.executable, "-m", "cyclerank.cli", *args],
                          capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    return proc


@pytest.fixture(scope="session")
def tables_dir(tmp_path_factory):
    """CSV corpus from one toy reproduce run of the ranking CLI."""
    root = tmp_path_factory.mktemp("corpus")
    data = root / "data"
    data.mkdir()
    (data / "toynet.edges").write_text(PETERSEN, encoding="utf-8")
    reference = root / "ref.json"
    reference.write_text(json.dumps({
        "networks": {"toynet": {"network_stats": {"n": 10, "m": 15}}}}),
        encoding="utf-8")
    out = root / "out"
    _run_cli(["reproduce", "--data-dir", str(data), "--networks", "toynet",
              "--reference", str(reference), "--runs", "20",
              "--realizations", "2", "--fractions", "0.2,0.3,0.4",
              "--cost-fractions", "0.2,0.4", "--beta-mults", "1.0,1.5,2.0",
              "--out", str(out), "--seed", "3"])
    return out / "toynet"


FIGURE_INPUTS = {
    "kendall_heatmap": ("tau_matrix.csv",),
    "individuation": ("score_frequencies.csv", "individuation.csv"),
    "sir_vs_c": ("sir.csv",),
    "sir_vs_beta": ("sir_beta.csv",),
    "dispersion": ("dispersion.csv",),
    "cost": ("cost.csv",),
}


@pytest.mark.parametrize("figure_id", FIGURE_IDS)
def test_every_figure_renders(figure_id, tables_dir, tmp_path):
    inputs = tuple(str(tables_dir / name) for name in FIGURE_INPUTS[figure_id])
    out = tmp_path / f"{figure_id}.png"
    info = render(FigureSpec(figure_id=figure_id, inputs=inputs,
                             output=str(out)))
    assert out.is_file() and out.stat().st_size > 0
    assert info["output"] == str(out)
    assert info["methods"]


def test_kendall_diagonal_reads_one(tables_dir, tmp_path):
    spec = FigureSpec(figure_id="kendall_heatmap",
                      inputs=(str(tables_dir / "tau_matrix.csv"),),
                      output=str(tmp_path / "heat.png"))
    info = render(spec)
    assert len(info["diagonal"]) == 6
    assert all(float(text) == 1.0 for text in info["diagonal"])


def test_rendering_is_deterministic(tables_dir, tmp_path):
    blobs = []
    for name in ("a.png", "b.png"):
        out = tmp_path / name
        render(FigureSpec(figure_id="cost",
                          inputs=(str(tables_dir / "cost.csv"),),
                          output=str(out)))
        blobs.append(out.read_bytes())
    assert blobs[0] == blobs[1]


def test_missing_column_is_named(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("# meta\nmethod,c\ndc,0.01\n", encoding="utf-8")
    with pytest.raises(SchemaError, match="R_mean"):
        build_figure(FigureSpec(figure_id="sir_vs_c", inputs=(str(bad),),
                                output=str(tmp_path / "x.png")))


def test_unknown_figure_id():
    with pytest.raises(ValueError, match="unknown figure id"):
        build_figure(FigureSpec(figure_id="nope", inputs=("x.csv",),
                                output="y.png"))


def test_cli_round_trip(tables_dir, tmp_path):
    out = tmp_path / "fig.png"
    proc = subprocess.run(
        [sys.executable, "-m", "rankplots.cli", "--figure", "sir_vs_c",
         "--in", str(tables_dir / "sir.csv"), "--out", str(out)],
        capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert out.is_file()

    proc_bad = subprocess.run(
        [sys.executable, "-m", "rankplots.cli", "--figure", "cost",
         "--in", str(tmp_path / "missing.csv"), "--out", str(out)],
        capture_output=True, text=True)
    assert proc_bad.returncode == 1
    assert "error:" in proc_bad.stderr
