"""Tiny-scale fine-tune + export, validated by the primary pipeline package."""

from pathlib import Path

import pytest

from sentimix_adapter import (
    CheckpointUnavailableError,
    config_with_overrides,
    export_predictions,
    finetune,
    read_manifest,
)
from sentimix_adapter.finetune import AdapterError

from .conftest import TINY_EVAL, TINY_TRAIN


def run_family(family, base_dir, tmp_path):
    config = config_with_overrides(
        family,
        epochs=1,
        batch_size=8,
        max_length=64,
        base_checkpoint=str(base_dir),
    )
    checkpoint = finetune(config, TINY_TRAIN, tmp_path / f"{family}-ckpt")
    manifest = read_manifest(checkpoint)
    for key, value in config.manifest_dict().items():
        assert manifest[key] == value, key
    assert manifest["trained_steps"] == 10  # 80 examples / batch 8, 1 epoch
    out = export_predictions(checkpoint, TINY_EVAL, f"{family}-tiny", tmp_path / f"{family}.tsv")
    return out


@pytest.mark.parametrize("family_fixture", ["tiny_bert_base", "tiny_albert_base", "tiny_xlnet_base"])
def test_finetune_and_export_passes_primary_validation(family_fixture, tmp_path, request):
    base_dir = request.getfixturevalue(family_fixture)
    family = family_fixture.split("_")[1]
    out = run_family(family, base_dir, tmp_path)

    # The primary package is the validation authority for the exported file.
    from sentimix import parse_conll, read_predictions, validate_against

    pset = read_predictions(out.read_text(encoding="utf-8"))
    corpus = parse_conll(TINY_EVAL.read_text(encoding="utf-8"))
    validate_against(pset, corpus)
    assert pset.model_id == f"{family}-tiny"
    assert len(pset) == len(corpus)


def test_exported_file_ensembles_with_nb_baseline(tiny_bert_base, tmp_path, capsys):
    out = run_family("bert", tiny_bert_base, tmp_path)

    from sentimix.cli import main

    code = main([
        "pipeline",
        "--train-corpus", str(TINY_TRAIN),
        "--corpus", str(TINY_EVAL),
        "--backend", "nb-word=word:1-2",
        "--predictions", str(out),
        "--out-dir", str(tmp_path / "pipeline"),
    ])
    capsys.readouterr()
    assert code == 0
    report = (tmp_path / "pipeline" / "report.json").read_text(encoding="utf-8")
    assert '"ensemble(bert-tiny,nb-word)"' in report


def test_multifit_is_checkpoint_unavailable(tmp_path):
    config = config_with_overrides("multifit", epochs=1)
    with pytest.raises(CheckpointUnavailableError, match="multifit"):
        finetune(config, TINY_TRAIN, tmp_path / "ckpt")


def test_unreachable_checkpoint_maps_to_checkpoint_unavailable(tmp_path):
    config = config_with_overrides("bert", epochs=1, base_checkpoint=str(tmp_path / "missing"))
    with pytest.raises(CheckpointUnavailableError, match="missing"):
        finetune(config, TINY_TRAIN, tmp_path / "ckpt")


def test_unlabeled_corpus_rejected(tiny_bert_base, tmp_path):
    unlabeled = tmp_path / "unlabeled.conll"
    unlabeled.write_text("meta\tu1\nword\tEng\n\n", encoding="utf-8")
    config = config_with_overrides("bert", epochs=1, base_checkpoint=str(tiny_bert_base))
    with pytest.raises(AdapterError, match="labeled"):
        finetune(config, unlabeled, tmp_path / "ckpt")


def test_export_requires_a_checkpoint(tmp_path):
    with pytest.raises(AdapterError, match="cannot load"):
        export_predictions(tmp_path / "nothing", TINY_EVAL, "x", tmp_path / "out.tsv")
