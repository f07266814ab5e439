import subprocess
import sys

import pytest

from mtqe.features import read_features
from mtqe.grading import Grade
from mtqe.ngram import load_lm

from conftest import run_cli, run_toy_pipeline, write_toy_dataset


@pytest.fixture
def small_data(tmp_path):
    return write_toy_dataset(tmp_path, n_pairs=20, seed=1)


def _write_lines(path, lines):
    path.write_text("".join(line + "\n" for line in lines), encoding="utf-8")


class TestBuildLm:
    def test_success_writes_model_and_prints_stats(self, tmp_path, small_data, capsys):
        out = tmp_path / "src.lm"
        code = run_cli("build-lm", "--corpus", small_data["src"], "--side", "source",
                       "--out", out)
        assert code == 0
        assert out.exists()
        assert load_lm(out).order == 3
        assert "sentences=20" in capsys.readouterr().out

    def test_missing_file_names_path(self, tmp_path, capsys):
        code = run_cli("build-lm", "--corpus", tmp_path / "absent.txt",
                       "--side", "source", "--out", tmp_path / "x.lm")
        assert code == 2
        assert "absent.txt" in capsys.readouterr().err

    def test_order_out_of_range(self, tmp_path, small_data, capsys):
        code = run_cli("build-lm", "--corpus", small_data["src"], "--side", "source",
                       "--order", "7", "--out", tmp_path / "x.lm")
        assert code == 2
        assert "1..5" in capsys.readouterr().err


class TestExtract:
    def _models(self, tmp_path, data):
        paths = {
            "src_lm": tmp_path / "src.lm",
            "tgt_lm": tmp_path / "tgt.lm",
            "lexicon": tmp_path / "lex.tsv",
        }
        assert run_cli("build-lm", "--corpus", data["src"], "--side", "source",
                       "--out", paths["src_lm"]) == 0
        assert run_cli("build-lm", "--corpus", data["tgt"], "--side", "target",
                       "--out", paths["tgt_lm"]) == 0
        assert run_cli("build-lexicon", "--pairs-src", data["src"],
                       "--pairs-tgt", data["tgt"], "--out", paths["lexicon"]) == 0
        return paths

    def test_unlabeled_and_labeled_extraction(self, tmp_path, small_data):
        models = self._models(tmp_path, small_data)
        plain = tmp_path / "plain.csv"
        labeled = tmp_path / "labeled.csv"
        base = ["extract", "--pairs-src", small_data["src"], "--pairs-tgt", small_data["tgt"],
                "--src-lm", models["src_lm"], "--tgt-lm", models["tgt_lm"],
                "--lexicon", models["lexicon"]]
        assert run_cli(*base, "--out", plain) == 0
        assert plain.read_text(encoding="utf-8").splitlines()[0].endswith(",f16")
        assert run_cli(*base, "--judgments", small_data["judgments"], "--out", labeled) == 0
        rows = read_features(labeled)
        assert len(rows) == 20
        assert all(isinstance(g, Grade) for _, _, g in rows)

    def test_incomplete_judgments(self, tmp_path, small_data, capsys):
        models = self._models(tmp_path, small_data)
        judgments = small_data["judgments"].read_text(encoding="utf-8").splitlines()
        _write_lines(tmp_path / "short.tsv", judgments[:-1])
        code = run_cli("extract", "--pairs-src", small_data["src"], "--pairs-tgt",
                       small_data["tgt"], "--src-lm", models["src_lm"],
                       "--tgt-lm", models["tgt_lm"], "--lexicon", models["lexicon"],
                       "--judgments", tmp_path / "short.tsv", "--out", tmp_path / "f.csv")
        assert code == 2
        assert "cover" in capsys.readouterr().err


class TestTrainPredictEvaluate:
    def test_end_to_end(self, tmp_path):
        data_dir = tmp_path / "data"
        out_dir = tmp_path / "out"
        data_dir.mkdir()
        out_dir.mkdir()
        paths, codes = run_toy_pipeline(data_dir, out_dir, n_pairs=40, seed=2)
        assert codes == [0] * 7
        predictions = paths["predictions"].read_text(encoding="utf-8").splitlines()
        assert predictions[0] == "id,grade"
        assert len(predictions) == 41
        report = paths["report"].read_text(encoding="utf-8").splitlines()
        assert report[0] == "grade,human_count,predicted_count"
        assert report[5] == "same,total,percentage"

    def test_training_requires_labels(self, tmp_path, small_data, capsys):
        models = TestExtract()._models(tmp_path, small_data)
        plain = tmp_path / "plain.csv"
        assert run_cli("extract", "--pairs-src", small_data["src"], "--pairs-tgt",
                       small_data["tgt"], "--src-lm", models["src_lm"],
                       "--tgt-lm", models["tgt_lm"], "--lexicon", models["lexicon"],
                       "--out", plain) == 0
        assert run_cli("train", "--features", plain, "--out", tmp_path / "nb.model") == 2
        assert "labeled" in capsys.readouterr().err

    def test_single_class_model_predicts_that_class(self, tmp_path, small_data):
        models = TestExtract()._models(tmp_path, small_data)
        labeled = tmp_path / "labeled.csv"
        assert run_cli("extract", "--pairs-src", small_data["src"], "--pairs-tgt",
                       small_data["tgt"], "--src-lm", models["src_lm"],
                       "--tgt-lm", models["tgt_lm"], "--lexicon", models["lexicon"],
                       "--judgments", small_data["judgments"], "--out", labeled) == 0
        # Rewrite every grade to Good: a degenerate one-class training file.
        lines = labeled.read_text(encoding="utf-8").splitlines()
        forced = [lines[0]] + [",".join(l.split(",")[:-1] + ["Good"]) for l in lines[1:]]
        one_class = tmp_path / "one.csv"
        _write_lines(one_class, forced)
        model_path = tmp_path / "nb.model"
        predictions = tmp_path / "pred.csv"
        assert run_cli("train", "--features", one_class, "--out", model_path) == 0
        assert run_cli("predict", "--model", model_path, "--features", labeled,
                       "--out", predictions) == 0
        rows = predictions.read_text(encoding="utf-8").splitlines()[1:]
        assert all(row.endswith(",Good") for row in rows)

    def test_evaluate_id_mismatch(self, tmp_path, capsys):
        _write_lines(tmp_path / "a.csv", ["id,grade", "0,Good", "1,Poor"])
        _write_lines(tmp_path / "b.csv", ["id,grade", "0,Good"])
        code = run_cli("evaluate", "--human", tmp_path / "a.csv",
                       "--predicted", tmp_path / "b.csv", "--out", tmp_path / "r.csv")
        assert code == 2

    def test_evaluate_published_fixture(self, tmp_path):
        human = ["id,grade"] + [f"{i},Poor" for i in range(1300)]
        predicted = ["id,grade"] + [
            f"{i},{'Poor' if i < 756 else 'Good'}" for i in range(1300)
        ]
        _write_lines(tmp_path / "human.csv", human)
        _write_lines(tmp_path / "pred.csv", predicted)
        out = tmp_path / "report.csv"
        assert run_cli("evaluate", "--human", tmp_path / "human.csv",
                       "--predicted", tmp_path / "pred.csv", "--out", out) == 0
        assert out.read_text(encoding="utf-8").splitlines()[-1] == "756,1300,58.15"


class TestDeterminism:
    def test_repeated_runs_are_byte_identical(self, tmp_path):
        results = []
        for name in ("one", "two"):
            data_dir = tmp_path / f"data-{name}"
            out_dir = tmp_path / f"out-{name}"
            data_dir.mkdir()
            out_dir.mkdir()
            paths, codes = run_toy_pipeline(data_dir, out_dir, n_pairs=30, seed=3)
            assert codes == [0] * 7
            results.append({k: p.read_bytes() for k, p in paths.items()})
        assert results[0] == results[1]


class TestEntryPoint:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "mtqe", "--help"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert "build-lm" in proc.stdout
