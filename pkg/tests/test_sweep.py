import numpy as np
import pytest

from adtt.codec import compress_image
from adtt.metrics import sr_sim, ssim
from adtt.pgm import read_pgm, write_pgm
from adtt.sweep import (
    EXACT_FAST_BASELINE,
    H264_BASELINE,
    CorpusError,
    ExperimentRecord,
    SweepConfig,
    report_complexity,
    run_sweep,
)

from conftest import mean_curve


@pytest.fixture()
def small_corpus(tmp_path):
    root = tmp_path / "corpus"
    root.mkdir()
    rng = np.random.default_rng(61)
    for name in ("a", "b"):
        image = rng.integers(0, 256, size=(24, 32), dtype=np.uint8)
        write_pgm(root / f"{name}.pgm", image)
    return root


def test_record_cardinality_and_order(small_corpus, tmp_path):
    config = SweepConfig(
        corpus_dir=small_corpus, r_min=1, r_max=3, output=tmp_path / "out.csv"
    )
    records = run_sweep(config)
    assert len(records) == 2 * 2 * 3
    keys = [(rec.image_id, rec.kernel_id, rec.r) for rec in records]
    assert keys == sorted(keys)
    assert {rec.kernel_id for rec in records} == {"exact_dtt", "proposed"}


def test_records_match_single_shot_pipeline(small_corpus, tmp_path):
    config = SweepConfig(
        corpus_dir=small_corpus, r_min=2, r_max=2, kernels=("proposed",),
        output=tmp_path / "out.csv",
    )
    (rec_a, rec_b) = run_sweep(config)
    image = read_pgm(small_corpus / "a.pgm")
    recon = compress_image(image, "proposed", r=2)
    assert rec_a.ssim == ssim(image, recon)
    assert rec_a.srsim == sr_sim(image, recon)
    assert rec_a.image_id == "a" and rec_b.image_id == "b"


def test_output_files_are_byte_identical_across_runs(small_corpus, tmp_path):
    blobs = []
    for run in range(2):
        out = tmp_path / f"run{run}.csv"
        config = SweepConfig(corpus_dir=small_corpus, r_min=1, r_max=4, output=out)
        run_sweep(config)
        blobs.append((out.read_bytes(), config.summary_path.read_bytes()))
    assert blobs[0] == blobs[1]


def test_parallel_run_matches_sequential(small_corpus, tmp_path):
    seq = run_sweep(
        SweepConfig(corpus_dir=small_corpus, r_min=1, r_max=3, output=tmp_path / "s.csv")
    )
    par = run_sweep(
        SweepConfig(
            corpus_dir=small_corpus, r_min=1, r_max=3, output=tmp_path / "p.csv",
            workers=4,
        )
    )
    assert seq == par


def test_record_csv_format(small_corpus, tmp_path):
    out = tmp_path / "fmt.csv"
    run_sweep(SweepConfig(corpus_dir=small_corpus, r_min=1, r_max=1, output=out))
    lines = out.read_text().splitlines()
    assert lines[0] == "image,kernel,r,ssim,srsim"
    assert len(lines) == 1 + 4
    first = lines[1].split(",")
    assert first[:3] == ["a", "exact_dtt", "1"]
    float(first[3]), float(first[4])


def test_summary_means_match_records(small_corpus, tmp_path):
    out = tmp_path / "sum.csv"
    config = SweepConfig(corpus_dir=small_corpus, r_min=1, r_max=3, output=out)
    records = run_sweep(config)
    summary_lines = config.summary_path.read_text().splitlines()
    assert summary_lines[0] == "kernel,r,ssim,srsim"
    assert len(summary_lines) == 1 + 2 * 3
    for line in summary_lines[1:]:
        kernel_id, r, s_mean, v_mean = line.split(",")
        group = [rec for rec in records if rec.kernel_id == kernel_id and rec.r == int(r)]
        assert len(group) == 2
        assert s_mean == f"{np.mean([rec.ssim for rec in group]):.6g}"
        assert v_mean == f"{np.mean([rec.srsim for rec in group]):.6g}"


def test_summary_path_default_and_override(tmp_path):
    config = SweepConfig(corpus_dir=tmp_path, output=tmp_path / "runs.csv")
    assert config.summary_path == tmp_path / "runs_summary.csv"
    config = SweepConfig(
        corpus_dir=tmp_path, output=tmp_path / "runs.csv", summary=tmp_path / "m.csv"
    )
    assert config.summary_path == tmp_path / "m.csv"


def test_config_validation():
    with pytest.raises(ValueError):
        SweepConfig(corpus_dir=".", r_min=0)
    with pytest.raises(ValueError):
        SweepConfig(corpus_dir=".", r_min=9, r_max=8)
    with pytest.raises(ValueError):
        SweepConfig(corpus_dir=".", r_max=65)
    with pytest.raises(ValueError):
        SweepConfig(corpus_dir=".", kernels=())
    with pytest.raises(ValueError):
        SweepConfig(corpus_dir=".", kernels=("dct",))
    with pytest.raises(ValueError):
        SweepConfig(corpus_dir=".", workers=0)


def test_missing_corpus_directory(tmp_path):
    config = SweepConfig(corpus_dir=tmp_path / "nope", output=tmp_path / "o.csv")
    with pytest.raises(CorpusError, match="not found"):
        run_sweep(config)


def test_empty_corpus_directory(tmp_path):
    empty = tmp_path / "empty"
    empty.mkdir()
    config = SweepConfig(corpus_dir=empty, output=tmp_path / "o.csv")
    with pytest.raises(CorpusError, match="no PGM images"):
        run_sweep(config)


def test_unreadable_images_are_listed(small_corpus, tmp_path):
    (small_corpus / "bad1.pgm").write_bytes(b"P5\n9 9\n255\n123")
    (small_corpus / "bad2.pgm").write_bytes(b"JUNK")
    config = SweepConfig(corpus_dir=small_corpus, output=tmp_path / "o.csv")
    with pytest.raises(CorpusError) as err:
        run_sweep(config)
    assert "bad1.pgm" in str(err.value)
    assert "bad2.pgm" in str(err.value)


def test_corpus_curves_improve_with_more_coefficients(sweep_results):
    records, _, _ = sweep_results
    for kernel in ("exact_dtt", "proposed"):
        for field in ("ssim", "srsim"):
            curve = mean_curve(records, kernel, field)
            assert curve[45] > curve[1], (kernel, field)


def test_record_type_is_hashable_value_object():
    rec = ExperimentRecord("x", "proposed", 3, 0.5, 0.6)
    assert rec == ExperimentRecord("x", "proposed", 3, 0.5, 0.6)
    assert len({rec, rec}) == 1


def test_baseline_constants():
    assert EXACT_FAST_BASELINE.additions == 44
    assert EXACT_FAST_BASELINE.shifts == 29
    assert H264_BASELINE.additions == 32
    assert H264_BASELINE.shifts == 14


def test_complexity_report_text():
    text = report_complexity()
    for needle in (
        "proposed forward",
        "proposed inverse",
        "exact dtt fast",
        "h264 integer",
        "54.5%",
        "34.1%",
        "37.5%",
        "9.4%",
        "42.9%",
    ):
        assert needle in text, needle


def test_complexity_report_csv():
    text = report_complexity(fmt="csv")
    lines = text.splitlines()
    assert lines[0] == "quantity,value"
    table = dict(line.split(",") for line in lines[1:])
    assert table["proposed_forward_additions"] == "20"
    assert table["proposed_inverse_additions"] == "29"
    assert table["proposed_inverse_shifts"] == "8"
    assert table["forward_additions_vs_exact_dtt_fast"] == "54.5%"
    assert table["inverse_shifts_vs_h264"] == "42.9%"


def test_complexity_report_rejects_unknown_format():
    with pytest.raises(ValueError):
        report_complexity(fmt="json")
