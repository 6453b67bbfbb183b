import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stylemeter.errors import EmptyCorpusError, EmptyDocumentError, SingleLevelError
from stylemeter.judges import (
    CLASSIFICATION,
    REGRESSION,
    NaiveBayesClassifier,
    classify,
    judge_regression,
    train_classifier,
)
from stylemeter.pivots import Corpus
from stylemeter.readability import fre_score
from stylemeter.scales import readability_scale
from stylemeter.text import tokenize


def test_regression_judge_worked_example():
    verdict = judge_regression(
        tokenize("The scientist did careful tests to get correct results."),
        readability_scale(),
    )
    assert verdict.mode == REGRESSION
    assert verdict.value == pytest.approx(66.10, abs=0.5)
    assert verdict.predicted_level == 2


def test_regression_judge_monosyllables_clamp():
    doc = tokenize("The cat sat on mat.")  # 5 words, 1 sentence, 5 syllables
    verdict = judge_regression(doc, readability_scale())
    assert verdict.value == pytest.approx(206.835 - 1.015 * 5 - 84.6, rel=1e-12)
    assert verdict.predicted_level == 1  # above the top band clamps to easiest


def test_regression_judge_empty_doc():
    with pytest.raises(EmptyDocumentError):
        judge_regression(tokenize(""), readability_scale())


def test_regression_value_equals_fre_exactly():
    doc = tokenize("Some words to score here.")
    assert judge_regression(doc, readability_scale()).value == fre_score(doc)


def test_nb_hand_arithmetic(toy_classifier):
    # priors 1/2; P(good|1) = 2/5, P(good|2) = 1/5 -> posterior 2/3 vs 1/3
    verdict = classify(tokenize("good"), toy_classifier)
    assert verdict.mode == CLASSIFICATION
    assert verdict.distribution[0] == pytest.approx(2 / 3, abs=1e-9)
    assert verdict.distribution[1] == pytest.approx(1 / 3, abs=1e-9)
    assert verdict.predicted_level == 1
    assert verdict.probability(1) == pytest.approx(2 / 3, abs=1e-9)


def test_nb_two_token_doc(toy_classifier):
    # P(1 | good good) = 0.4^2 / (0.4^2 + 0.2^2) = 0.8
    verdict = classify(tokenize("good good"), toy_classifier)
    assert verdict.distribution[0] == pytest.approx(0.8, abs=1e-9)
    assert verdict.predicted_level == 1


def test_nb_symmetric_word_uniform(toy_classifier):
    verdict = classify(tokenize("food"), toy_classifier)
    assert verdict.distribution[0] == pytest.approx(0.5, abs=1e-12)
    assert verdict.predicted_level == 1  # tie breaks to the lower level


def test_nb_oov_falls_back_to_priors(toy_classifier):
    verdict = classify(tokenize("zzz qqq"), toy_classifier)
    assert verdict.distribution == pytest.approx((0.5, 0.5))


def test_nb_empty_doc_falls_back_to_priors(toy_classifier):
    verdict = classify(tokenize(""), toy_classifier)
    assert verdict.distribution == pytest.approx((0.5, 0.5))


def test_nb_training_set_docs_classified_correctly(toy_corpora, toy_classifier):
    for corpus in toy_corpora:
        for doc in corpus.documents:
            assert classify(doc, toy_classifier).predicted_level == corpus.level


def test_training_is_deterministic(toy_corpora):
    assert train_classifier(toy_corpora) == train_classifier(toy_corpora)


def test_label_permutation_equivariance(toy_corpora):
    clf = train_classifier(toy_corpora)
    swapped = train_classifier(
        [
            Corpus(level=1, documents=toy_corpora[1].documents),
            Corpus(level=2, documents=toy_corpora[0].documents),
        ]
    )
    doc = tokenize("good food")
    direct = classify(doc, clf).distribution
    mirrored = classify(doc, swapped).distribution
    assert direct[0] == pytest.approx(mirrored[1], abs=1e-12)
    assert direct[1] == pytest.approx(mirrored[0], abs=1e-12)


def test_unbalanced_priors():
    corpora = [
        Corpus(1, (tokenize("alpha"), tokenize("beta"), tokenize("gamma"))),
        Corpus(2, (tokenize("delta"),)),
    ]
    clf = train_classifier(corpora)
    verdict = classify(tokenize("zzz"), clf)  # OOV -> priors
    assert verdict.distribution[0] == pytest.approx(0.75, abs=1e-12)


def test_train_rejects_empty_or_single():
    with pytest.raises(SingleLevelError):
        train_classifier([Corpus(1, (tokenize("x"),))])
    with pytest.raises(EmptyCorpusError):
        train_classifier([Corpus(1, ()), Corpus(2, (tokenize("x"),))])


def test_classifier_round_trip(grad_classifier):
    again = NaiveBayesClassifier.from_bytes(grad_classifier.to_bytes())
    assert again == grad_classifier
    doc = tokenize("the report was big and help team bad.")
    assert classify(doc, again) == classify(doc, grad_classifier)


@settings(max_examples=50, deadline=None)
@given(
    st.lists(
        st.sampled_from(["good", "bad", "food", "zzz", "great", "awful"]),
        min_size=0,
        max_size=10,
    )
)
def test_posterior_normalization(toy_classifier, tokens):
    verdict = classify(tokenize(" ".join(tokens)), toy_classifier)
    assert sum(verdict.distribution) == pytest.approx(1.0, abs=1e-9)
    assert all(p >= 0 for p in verdict.distribution)
    assert verdict.predicted_level in (1, 2)


def test_posterior_normalization_gradient(grad_classifier, grad_corpora):
    for corpus in grad_corpora:
        for doc in corpus.documents[:5]:
            post = grad_classifier.posterior(doc)
            assert float(np.sum(post)) == pytest.approx(1.0, abs=1e-9)
