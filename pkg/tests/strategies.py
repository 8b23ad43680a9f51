"""Hypothesis strategies shared across the property tests."""

from hypothesis import strategies as st

from sentimix import (
    Corpus,
    LanguageTag,
    PredictionSet,
    ProbabilityVector,
    SentimentLabel,
    Token,
    Tweet,
)

surfaces = st.text(
    alphabet=st.characters(blacklist_characters="\t\n", blacklist_categories=("Cs",)),
    min_size=1,
    max_size=10,
)

tokens = st.builds(Token, surface=surfaces, lang=st.sampled_from(list(LanguageTag)))

labels = st.none() | st.sampled_from(list(SentimentLabel))


@st.composite
def corpora(draw, min_tweets=0, max_tweets=8):
    rows = draw(
        st.lists(
            st.tuples(st.lists(tokens, min_size=1, max_size=6), labels),
            min_size=min_tweets,
            max_size=max_tweets,
        )
    )
    suffixes = draw(st.lists(surfaces, min_size=len(rows), max_size=len(rows)))
    tweets = tuple(
        Tweet(uid=f"u{i}-{suffix}", tokens=tuple(toks), gold=gold)
        for i, ((toks, gold), suffix) in enumerate(zip(rows, suffixes))
    )
    return Corpus(tweets=tweets)


@st.composite
def probability_vectors(draw):
    raw = draw(
        st.lists(
            st.floats(min_value=0.0, max_value=1.0, allow_nan=False),
            min_size=3,
            max_size=3,
        ).filter(lambda xs: sum(xs) > 1e-6)
    )
    total = sum(raw)
    return ProbabilityVector(raw[0] / total, raw[1] / total, raw[2] / total)


@st.composite
def prediction_sets(draw, min_rows=0, max_rows=12, model_id=None):
    vectors = draw(st.lists(probability_vectors(), min_size=min_rows, max_size=max_rows))
    if model_id is None:
        model_id = draw(
            st.text(
                alphabet=st.characters(blacklist_characters="\t\n", blacklist_categories=("Cs",)),
                min_size=1,
                max_size=8,
            )
        )
    return PredictionSet(model_id, [(f"u{i}", v) for i, v in enumerate(vectors)])
