import pytest

from stylemeter import (
    Corpus,
    IntensityScale,
    Level,
    NaiveBayesClassifier,
    RegressionJudge,
    RewardConfig,
    RewardEngine,
    fit,
    readability_scale,
    sentiment_scale,
    tokenize,
)
from stylemeter.embeddings import parse_embeddings
from stylemeter.judges import CLASSIFICATION, REGRESSION
from stylemeter.synthetic import (
    gradient_corpora,
    gradient_embeddings_text,
    sentiment_corpora,
    sentiment_embeddings_text,
)


@pytest.fixture(scope="session")
def toy_scale():
    return IntensityScale(levels=(Level(1, "negative"), Level(2, "positive")))


@pytest.fixture(scope="session")
def toy_corpora():
    return [
        Corpus(level=1, documents=(tokenize("good food"),)),
        Corpus(level=2, documents=(tokenize("bad food"),)),
    ]


@pytest.fixture(scope="session")
def toy_model(toy_corpora, toy_scale):
    return fit(toy_corpora, toy_scale)


@pytest.fixture(scope="session")
def toy_classifier(toy_corpora):
    return NaiveBayesClassifier.train(toy_corpora)


@pytest.fixture(scope="session")
def ab_table():
    return parse_embeddings("a 1 0\nb 0 1\n")


@pytest.fixture(scope="session")
def abc_table():
    # c is a unit vector at cosine 0.5 to both a and b
    return parse_embeddings("a 1 0 0\nb 0 1 0\nc 0.5 0.5 0.7071067811865476\n")


@pytest.fixture(scope="session")
def grad_scale():
    return IntensityScale(levels=tuple(Level(i, f"grade {i}") for i in (1, 2, 3, 4)))


@pytest.fixture(scope="session")
def grad_corpora():
    return gradient_corpora(k=4, docs_per_level=30, seed=0)


@pytest.fixture(scope="session")
def grad_model(grad_corpora, grad_scale):
    return fit(grad_corpora, grad_scale)


@pytest.fixture(scope="session")
def grad_classifier(grad_corpora):
    return NaiveBayesClassifier.train(grad_corpora)


@pytest.fixture(scope="session")
def grad_table():
    return parse_embeddings(gradient_embeddings_text())


@pytest.fixture(scope="session")
def grad_engine(grad_scale, grad_model, grad_classifier, grad_table):
    return RewardEngine(
        style="sentiment",
        scale=grad_scale,
        pivots=grad_model,
        judge=grad_classifier,
        embeddings=grad_table,
        config=RewardConfig(mode=CLASSIFICATION),
    )


@pytest.fixture(scope="session")
def read_engine(grad_model, grad_table):
    # regression-mode engine: reading-ease judge over the same pivot model
    scale = readability_scale()
    return RewardEngine(
        style="readability",
        scale=scale,
        pivots=grad_model,
        judge=RegressionJudge(scale),
        embeddings=grad_table,
        config=RewardConfig(mode=REGRESSION),
    )


@pytest.fixture(scope="session")
def sent_corpora():
    return sentiment_corpora()


@pytest.fixture(scope="session")
def sent_model(sent_corpora):
    return fit(sent_corpora, sentiment_scale())


@pytest.fixture(scope="session")
def sent_classifier(sent_corpora):
    return NaiveBayesClassifier.train(sent_corpora)


@pytest.fixture(scope="session")
def sent_table():
    return parse_embeddings(sentiment_embeddings_text())


@pytest.fixture(scope="session")
def sent_engine(sent_model, sent_classifier, sent_table):
    return RewardEngine(
        style="sentiment",
        scale=sentiment_scale(),
        pivots=sent_model,
        judge=sent_classifier,
        embeddings=sent_table,
        config=RewardConfig(mode=CLASSIFICATION),
    )
