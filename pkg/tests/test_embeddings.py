import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stylemeter.embeddings import (
    OOV_HASH,
    OOV_ZERO,
    EmbeddingTable,
    embed,
    load_embeddings,
    parse_embeddings,
)
from stylemeter.errors import EmptyFileError, InconsistentDimError, MalformedLineError
from stylemeter.text import tokenize


def test_orthonormal_fixture():
    table = parse_embeddings("a 1 0\nb 0 1")
    assert table.dim == 2
    assert np.allclose(table.vector("a"), [1, 0])
    assert np.allclose(table.vector("b"), [0, 1])


def test_normalization_on_load():
    table = parse_embeddings("a 3 4")
    assert table.vector("a") == pytest.approx([0.6, 0.8])


def test_inconsistent_dim():
    with pytest.raises(InconsistentDimError):
        parse_embeddings("a 1 0\nb 0 1 0")


def test_malformed_float_carries_line_number():
    with pytest.raises(MalformedLineError) as err:
        parse_embeddings("a 1 0\nb x y")
    assert err.value.line_no == 2


def test_token_without_values():
    with pytest.raises(MalformedLineError):
        parse_embeddings("lonely")


def test_zero_vector_rejected():
    with pytest.raises(MalformedLineError):
        parse_embeddings("a 0 0")


def test_empty_file():
    with pytest.raises(EmptyFileError):
        parse_embeddings("")
    with pytest.raises(EmptyFileError):
        parse_embeddings("\n\n")


def test_duplicate_token_last_wins():
    table = parse_embeddings("a 1 0\na 0 1")
    assert np.allclose(table.vector("a"), [0, 1])


def test_load_from_file(tmp_path):
    path = tmp_path / "vectors.txt"
    path.write_text("a 1 0\nb 0 1\n", encoding="utf-8")
    table = load_embeddings(path)
    assert table.dim == 2
    assert "a" in table and "missing" not in table


def test_embed_order(tmp_path):
    table = parse_embeddings("a 1 0\nb 0 1")
    vectors = embed(tokenize("b a b"), table)
    assert np.allclose(vectors[0], [0, 1])
    assert np.allclose(vectors[1], [1, 0])
    assert np.allclose(vectors[2], [0, 1])


def test_oov_zero_policy():
    table = parse_embeddings("a 1 0", oov_policy=OOV_ZERO)
    assert not table.vector("missing").any()


def test_oov_hash_policy_deterministic():
    table = parse_embeddings("a 1 0 0 0", oov_policy=OOV_HASH)
    first = table.vector("missing")
    second = table.vector("missing")
    other_table = parse_embeddings("b 0 1 0 0", oov_policy=OOV_HASH)
    assert np.linalg.norm(first) == pytest.approx(1.0, abs=1e-6)
    assert np.array_equal(first, second)
    assert np.array_equal(first, other_table.vector("missing"))
    assert not np.array_equal(first, table.vector("other"))


def test_bad_oov_policy():
    with pytest.raises(ValueError):
        parse_embeddings("a 1 0", oov_policy="bogus")


@settings(max_examples=50, deadline=None)
@given(
    st.lists(
        st.lists(
            st.floats(min_value=-100, max_value=100, allow_nan=False),
            min_size=3,
            max_size=3,
        ).filter(lambda v: any(abs(x) > 1e-6 for x in v)),
        min_size=1,
        max_size=6,
    )
)
def test_all_loaded_vectors_unit_norm(rows):
    text = "\n".join(f"w{i} " + " ".join(repr(x) for x in row) for i, row in enumerate(rows))
    table = parse_embeddings(text)
    for i in range(len(rows)):
        norm = np.linalg.norm(table.vector(f"w{i}"))
        assert norm == pytest.approx(1.0, abs=1e-6)
    # unit vectors keep every pairwise dot product inside [-1, 1]
    for i in range(len(rows)):
        for j in range(len(rows)):
            dot = float(table.vector(f"w{i}") @ table.vector(f"w{j}"))
            assert -1.0 - 1e-9 <= dot <= 1.0 + 1e-9


def test_table_is_frozen():
    table = parse_embeddings("a 1 0")
    with pytest.raises(AttributeError):
        table.dim = 5
    assert isinstance(table, EmbeddingTable)
