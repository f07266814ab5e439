import random

import pytest

from mtqe.cli import main as cli_main
from mtqe.corpus import ParallelCorpus, SentencePair

EN_WORDS = [
    "the", "a", "boy", "girl", "house", "river", "runs", "walks", "sees",
    "small", "big", "red", "blue", "dog", "cat", "tree", "road", "bird",
    "sings", "water", "sun", "moon", "old", "new", "man", "woman", "child",
    "reads", "book", "fast", "slow", "happy", "green", "tall", "eats",
    "bread", "milk", "night", "day", "song",
]

HI_WORDS = [
    "लड़का", "लड़की", "घर", "नदी", "दौड़ता", "चलता", "देखता", "छोटा", "बड़ा",
    "लाल", "नीला", "कुत्ता", "बिल्ली", "पेड़", "सड़क", "चिड़िया", "गाती",
    "पानी", "सूरज", "चाँद", "पुराना", "नया", "आदमी", "औरत", "बच्चा",
    "पढ़ता", "किताब", "तेज़", "धीमा", "खुश", "हरा", "लंबा", "खाता",
    "रोटी", "दूध", "रात", "दिन", "गीत", "वह", "है",
]

# (share of pairs, source-length range, judgment-sum range); the judgment
# sums land in the four grade bands, so sentence length predicts the grade.
TOY_BANDS = [
    (0.20, (3, 5), (3, 10)),
    (0.35, (7, 9), (11, 20)),
    (0.25, (11, 13), (21, 30)),
    (0.20, (15, 18), (31, 40)),
]


def make_corpus(source_sentences, target_sentences):
    """Build a ParallelCorpus from already-tokenized sentences."""
    pairs = tuple(
        SentencePair(i, tuple(s), tuple(t))
        for i, (s, t) in enumerate(zip(source_sentences, target_sentences))
    )
    return ParallelCorpus(pairs)


def _spread_params(total, rng):
    # Ten cells, each 0..4, summing exactly to total.
    base, extra = divmod(total, 10)
    params = [base + 1] * extra + [base] * (10 - extra)
    rng.shuffle(params)
    return params


def write_toy_dataset(directory, n_pairs=200, seed=0):
    """Write src.txt, tgt.txt, and judgments.tsv for a synthetic corpus.

    Quality correlates with sentence length, so a classifier trained on the
    extracted features can recover the grades.
    """
    rng = random.Random(seed)
    allocation = []
    for band, (share, lengths, sums) in enumerate(TOY_BANDS):
        count = round(share * n_pairs)
        if band == len(TOY_BANDS) - 1:
            count = n_pairs - len(allocation)
        allocation.extend([(lengths, sums)] * count)
    rng.shuffle(allocation)

    src_lines = []
    tgt_lines = []
    judgment_rows = []
    for i, (lengths, sums) in enumerate(allocation):
        n_src = rng.randint(*lengths)
        source = rng.choices(EN_WORDS, k=n_src) + ["."]
        n_tgt = max(1, n_src + rng.randint(-1, 1))
        target = rng.choices(HI_WORDS, k=n_tgt) + ["।"]
        src_lines.append(" ".join(source))
        tgt_lines.append(" ".join(target))
        params = _spread_params(rng.randint(*sums), rng)
        judgment_rows.append("\t".join([str(i)] + [str(p) for p in params]))

    paths = {
        "src": directory / "src.txt",
        "tgt": directory / "tgt.txt",
        "judgments": directory / "judgments.tsv",
    }
    paths["src"].write_text("\n".join(src_lines) + "\n", encoding="utf-8")
    paths["tgt"].write_text("\n".join(tgt_lines) + "\n", encoding="utf-8")
    header = "\t".join(["id"] + [f"p{i}" for i in range(1, 11)])
    paths["judgments"].write_text(
        "\n".join([header] + judgment_rows) + "\n", encoding="utf-8"
    )
    return paths


def run_cli(*argv):
    """Invoke the CLI in-process, returning its exit code."""
    try:
        return cli_main([str(a) for a in argv])
    except SystemExit as exc:  # argparse usage errors
        return exc.code if isinstance(exc.code, int) else 2


def run_toy_pipeline(data_dir, out_dir, n_pairs=200, seed=0):
    """Drive every CLI stage on a toy dataset; returns (paths, exit codes)."""
    data = write_toy_dataset(data_dir, n_pairs=n_pairs, seed=seed)
    out = {
        "src_lm": out_dir / "src.lm",
        "tgt_lm": out_dir / "tgt.lm",
        "lexicon": out_dir / "lexicon.tsv",
        "features": out_dir / "features.csv",
        "model": out_dir / "nb.model",
        "predictions": out_dir / "predictions.csv",
        "report": out_dir / "report.csv",
    }
    codes = [
        run_cli("build-lm", "--corpus", data["src"], "--side", "source",
                "--order", "3", "--out", out["src_lm"]),
        run_cli("build-lm", "--corpus", data["tgt"], "--side", "target",
                "--order", "3", "--out", out["tgt_lm"]),
        run_cli("build-lexicon", "--pairs-src", data["src"], "--pairs-tgt",
                data["tgt"], "--out", out["lexicon"]),
        run_cli("extract", "--pairs-src", data["src"], "--pairs-tgt", data["tgt"],
                "--src-lm", out["src_lm"], "--tgt-lm", out["tgt_lm"],
                "--lexicon", out["lexicon"], "--judgments", data["judgments"],
                "--out", out["features"]),
        run_cli("train", "--features", out["features"], "--out", out["model"]),
        run_cli("predict", "--model", out["model"], "--features", out["features"],
                "--out", out["predictions"]),
        run_cli("evaluate", "--human", out["features"], "--predicted",
                out["predictions"], "--out", out["report"]),
    ]
    return {**data, **out}, codes


@pytest.fixture
def toy_models(tmp_path):
    """Small trained models and a lexicon for feature tests."""
    from mtqe.lexicon import build_lexicon
    from mtqe.ngram import train_lm

    rng = random.Random(11)
    src_sents = [rng.choices(EN_WORDS[:20], k=rng.randint(2, 8)) + ["."] for _ in range(30)]
    tgt_sents = [rng.choices(HI_WORDS[:20], k=rng.randint(2, 8)) + ["।"] for _ in range(30)]
    corpus = make_corpus(src_sents, tgt_sents)
    return {
        "corpus": corpus,
        "src_lm": train_lm(src_sents, 3),
        "tgt_lm": train_lm(tgt_sents, 3),
        "lexicon": build_lexicon(corpus, 0.2),
    }
