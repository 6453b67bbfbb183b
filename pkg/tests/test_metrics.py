from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from stylemeter.errors import EmptyGeneratedError, EvaluationPairError
from stylemeter.metrics import evaluate, h_re, lcs_length, rouge_l, star_delta
from stylemeter.rewards import classification_reward, lexicon_reward
from stylemeter.text import tokenize


def subsequences_lcs(xs, ys):
    """Exhaustive oracle: enumerate every subsequence of xs, keep the longest
    one that is also a subsequence of ys."""
    def is_subsequence(needle, haystack):
        it = iter(haystack)
        return all(tok in it for tok in needle)

    best = 0
    for mask in range(1 << len(xs)):
        candidate = tuple(x for i, x in enumerate(xs) if mask >> i & 1)
        if len(candidate) > best and is_subsequence(candidate, ys):
            best = len(candidate)
    return best


def test_lcs_matches_exhaustive_small():
    alphabet = ("a", "b")
    sequences = [
        seq for n in range(0, 5) for seq in product(alphabet, repeat=n)
    ]
    for xs in sequences:
        for ys in sequences:
            assert lcs_length(xs, ys) == subsequences_lcs(xs, ys), (xs, ys)


def test_rouge_identical_is_hundred():
    doc = tokenize("word for word the same text.")
    assert rouge_l(doc, doc) == 100.0


def test_rouge_worked_example():
    source = tokenize("The scientist did careful tests to get correct results.")
    generated = tokenize("The scientist did careful experiments to obtain precise results.")
    assert rouge_l(source, generated) == pytest.approx(66.67, abs=0.01)


def test_rouge_hand_case():
    assert rouge_l(tokenize("a b c d"), tokenize("a c d e")) == pytest.approx(75.0)


def test_rouge_disjoint_is_zero():
    assert rouge_l(tokenize("one two"), tokenize("three four")) == 0.0


def test_rouge_empty_generated():
    with pytest.raises(EmptyGeneratedError):
        rouge_l(tokenize("a"), tokenize(""))


def test_rouge_empty_source_is_zero():
    assert rouge_l(tokenize(""), tokenize("a b")) == 0.0


@given(
    st.lists(st.sampled_from("abc"), min_size=1, max_size=12),
    st.lists(st.sampled_from("abc"), min_size=1, max_size=12),
)
def test_rouge_bounds(xs, ys):
    value = rouge_l(tokenize(" ".join(xs)), tokenize(" ".join(ys)))
    assert 0.0 <= value <= 100.0
    if set(xs) & set(ys):
        assert value > 0.0


def test_star_delta_basics():
    assert star_delta(4, 5) == 1
    assert star_delta(3, 3) == 0
    assert star_delta(1, 5) == 4


def test_star_delta_from_band_mapped_level():
    from stylemeter.readability import level_of
    from stylemeter.scales import readability_scale

    predicted = level_of(47.42, readability_scale())
    assert predicted == 3
    assert star_delta(predicted, 4) == 1


@given(st.integers(1, 9), st.integers(1, 9), st.integers(1, 9))
def test_star_delta_triangle_inequality(a, b, c):
    assert star_delta(a, c) <= star_delta(a, b) + star_delta(b, c)


def test_h_re_composition(grad_engine, grad_corpora):
    doc = grad_corpora[2].documents[0]
    value = h_re(doc, 3, model=grad_engine.pivots, judge=grad_engine.judge,
                 cfg=grad_engine.config)
    r_sent = classification_reward(grad_engine.judge.judge(doc), 3)
    r_lex = lexicon_reward(doc, 3, grad_engine.pivots, grad_engine.config.temperature)
    assert value == pytest.approx(0.5 * r_sent + 0.5 * r_lex, abs=1e-15)
    assert 0.0 <= value <= 1.0


def test_evaluate_single_pair(grad_engine, grad_corpora):
    source = grad_corpora[0].documents[0]
    generated = grad_corpora[1].documents[0]
    report = evaluate([(source, generated, 2)], grad_engine)
    row = report.per_level[2]
    verdict = grad_engine.judge.judge(generated)
    assert row.n == 1
    assert row.star == float(verdict.predicted_level)
    assert row.rouge_l == pytest.approx(rouge_l(source, generated))
    assert row.h_re == pytest.approx(
        h_re(generated, 2, model=grad_engine.pivots, judge=grad_engine.judge,
             cfg=grad_engine.config)
    )
    assert report.confusion.sum() == 1


def test_evaluate_duplicate_pairs_mean_unchanged(grad_engine, grad_corpora):
    source = grad_corpora[0].documents[0]
    generated = grad_corpora[1].documents[0]
    single = evaluate([(source, generated, 2)], grad_engine)
    double = evaluate([(source, generated, 2)] * 2, grad_engine)
    assert double.per_level[2].n == 2
    assert double.per_level[2].rouge_l == pytest.approx(single.per_level[2].rouge_l)
    assert double.per_level[2].h_re == pytest.approx(single.per_level[2].h_re)
    assert double.per_level[2].star == pytest.approx(single.per_level[2].star)


def test_evaluate_confusion_hand_tally(grad_engine, grad_corpora):
    pairs = []
    for target in (1, 2, 3, 4):
        source = grad_corpora[0].documents[1]
        generated = grad_corpora[target - 1].documents[2]
        pairs.append((source, generated, target))
    report = evaluate(pairs, grad_engine)
    # every generated text comes from the target level's own training corpus,
    # so the judge should land on the diagonal
    for i in range(4):
        assert report.confusion[i, i] == 1
    assert report.confusion.sum() == 4
    # row sums equal per-level n
    for i, level in enumerate(report.levels):
        assert report.confusion[i].sum() == report.per_level[level].n


def test_evaluate_macro_average_is_mean_of_level_means(grad_engine, grad_corpora):
    pairs = []
    for target in (1, 2):
        for j in range(3):
            pairs.append(
                (grad_corpora[0].documents[j], grad_corpora[target - 1].documents[j + 3], target)
            )
    report = evaluate(pairs, grad_engine)
    rows = [report.per_level[level] for level in sorted(report.per_level)]
    assert report.averages["rouge_l"] == pytest.approx(
        sum(r.rouge_l for r in rows) / len(rows)
    )
    assert report.averages["h_re"] == pytest.approx(sum(r.h_re for r in rows) / len(rows))


def test_evaluate_permutation_invariant(grad_engine, grad_corpora):
    pairs = [
        (grad_corpora[0].documents[i], grad_corpora[1].documents[i], 2) for i in range(4)
    ] + [
        (grad_corpora[0].documents[i], grad_corpora[2].documents[i], 3) for i in range(4)
    ]
    forward = evaluate(pairs, grad_engine)
    backward = evaluate(list(reversed(pairs)), grad_engine)
    assert forward.averages == pytest.approx(backward.averages)
    assert (forward.confusion == backward.confusion).all()


def test_evaluate_regression_mode_fills_fre(read_engine):
    pairs = [("The team found the big report.", "The team found the big report.", 1)]
    report = evaluate(pairs, read_engine)
    row = report.per_level[1]
    assert row.fre is not None
    assert row.fre_delta == pytest.approx(abs(row.fre - 90.0))
    assert "fre_delta" in report.averages


def test_evaluate_error_carries_pair_index(grad_engine, grad_corpora):
    source = grad_corpora[0].documents[0]
    pairs = [(source, source, 2), (source, "", 2)]
    with pytest.raises(EvaluationPairError) as err:
        evaluate(pairs, grad_engine)
    assert err.value.index == 1


def test_evaluate_rejects_empty_input(grad_engine):
    with pytest.raises(EvaluationPairError):
        evaluate([], grad_engine)


def test_report_renderings(grad_engine, grad_corpora):
    pairs = [(grad_corpora[0].documents[0], grad_corpora[1].documents[0], 2)]
    report = evaluate(pairs, grad_engine)
    table = report.table()
    assert "STAR" in table and "RG-L" in table and "avg" in table
    csv = report.confusion_csv()
    assert csv.splitlines()[0] == "target\\predicted,1,2,3,4"
    kinds = [record["kind"] for record in report.records()]
    assert kinds.count("level") == len(report.per_level)
    assert "average" in kinds and "confusion" in kinds
