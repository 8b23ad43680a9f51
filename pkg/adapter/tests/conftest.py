import os
from pathlib import Path

os.environ.setdefault("HF_HUB_OFFLINE", "1")
os.environ.setdefault("TRANSFORMERS_OFFLINE", "1")
os.environ.setdefault("HF_HUB_DISABLE_PROGRESS_BARS", "1")
os.environ.setdefault("TRANSFORMERS_VERBOSITY", "error")

import pytest

DATA_DIR = Path(__file__).parent / "data"
TINY_TRAIN = DATA_DIR / "tiny_train.conll"
TINY_EVAL = DATA_DIR / "tiny_eval.conll"


def _corpus_texts():
    from sentimix_adapter.corpus import read_corpus

    texts = [e.text for e in read_corpus(TINY_TRAIN)]
    texts += [e.text for e in read_corpus(TINY_EVAL)]
    return texts


@pytest.fixture(scope="session", autouse=True)
def _quiet_transformers():
    from transformers.utils import logging as hf_logging

    hf_logging.set_verbosity_error()
    hf_logging.disable_progress_bar()


@pytest.fixture(scope="session")
def tiny_bert_base(tmp_path_factory):
    """A miniature randomly-initialized BERT base with a corpus-derived vocab."""
    from transformers import BertConfig, BertModel, BertTokenizerFast

    out = tmp_path_factory.mktemp("bert-base")
    words = sorted({w for text in _corpus_texts() for w in text.lower().split()})
    vocab = ["[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]", *words]
    (out / "vocab.txt").write_text("\n".join(vocab) + "\n", encoding="utf-8")
    tokenizer = BertTokenizerFast(vocab_file=str(out / "vocab.txt"), do_lower_case=True)
    config = BertConfig(
        vocab_size=len(vocab),
        hidden_size=32,
        num_hidden_layers=2,
        num_attention_heads=2,
        intermediate_size=64,
        max_position_embeddings=128,
    )
    BertModel(config).save_pretrained(out)
    tokenizer.save_pretrained(out)
    return out


@pytest.fixture(scope="session")
def tiny_sentencepiece_model(tmp_path_factory):
    import sentencepiece as spm

    out = tmp_path_factory.mktemp("spm")
    (out / "text.txt").write_text("\n".join(_corpus_texts()), encoding="utf-8")
    spm.SentencePieceTrainer.train(
        input=str(out / "text.txt"),
        model_prefix=str(out / "sp"),
        vocab_size=400,
        hard_vocab_limit=False,
        pad_id=0,
        unk_id=1,
        bos_id=2,
        eos_id=3,
        user_defined_symbols=["[CLS]", "[SEP]", "[MASK]", "<cls>", "<sep>", "<mask>"],
    )
    return out / "sp.model"


@pytest.fixture(scope="session")
def tiny_albert_base(tmp_path_factory, tiny_sentencepiece_model):
    import sentencepiece as spm
    from transformers import AlbertConfig, AlbertModel, AlbertTokenizer

    out = tmp_path_factory.mktemp("albert-base")
    vocab_size = spm.SentencePieceProcessor(model_file=str(tiny_sentencepiece_model)).get_piece_size()
    tokenizer = AlbertTokenizer(vocab_file=str(tiny_sentencepiece_model))
    config = AlbertConfig(
        vocab_size=vocab_size,
        embedding_size=16,
        hidden_size=32,
        num_hidden_layers=2,
        num_attention_heads=2,
        intermediate_size=64,
        max_position_embeddings=128,
    )
    AlbertModel(config).save_pretrained(out)
    tokenizer.save_pretrained(out)
    return out


@pytest.fixture(scope="session")
def tiny_xlnet_base(tmp_path_factory, tiny_sentencepiece_model):
    import sentencepiece as spm
    from transformers import XLNetConfig, XLNetModel, XLNetTokenizer

    out = tmp_path_factory.mktemp("xlnet-base")
    vocab_size = spm.SentencePieceProcessor(model_file=str(tiny_sentencepiece_model)).get_piece_size()
    tokenizer = XLNetTokenizer(vocab_file=str(tiny_sentencepiece_model))
    config = XLNetConfig(vocab_size=vocab_size, d_model=32, n_layer=2, n_head=2, d_inner=64)
    XLNetModel(config).save_pretrained(out)
    tokenizer.save_pretrained(out)
    return out
