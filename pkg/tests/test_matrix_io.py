import json

import numpy as np
import pytest
from numpy.testing import assert_array_equal

from errors import MatrixFormatError, NotHermitian, NotPositiveDefinite
from harness.generators import gen_pd
from harness.matrix_io import parse_matrix, read_hermitian_pd, read_matrix, write_matrix


def write_document(path, document):
    path.write_text(json.dumps(document), encoding="utf-8")
    return str(path)


def test_parse_real_and_complex():
    m = parse_matrix({"n": 2, "re": [[2, 1], [1, 2]]})
    assert_array_equal(m, np.array([[2, 1], [1, 2]], dtype=complex))

    m = parse_matrix({"n": 2, "re": [[2, 0], [0, 2]], "im": [[0, 1], [-1, 0]]})
    assert m[0, 1] == 1j and m[1, 0] == -1j


@pytest.mark.parametrize("document", [
    [[1, 2], [3, 4]],
    {"re": [[1]]},
    {"n": 0, "re": []},
    {"n": True, "re": [[1]]},
    {"n": 2, "re": [[1, 2]]},
    {"n": 2, "re": [[1, 2], [3]]},
    {"n": 1, "re": [["x"]]},
])
def test_malformed_documents(document):
    with pytest.raises(MatrixFormatError):
        parse_matrix(document)


def test_invalid_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(MatrixFormatError):
        read_matrix(str(path))


def test_missing_file(tmp_path):
    with pytest.raises(OSError):
        read_matrix(str(tmp_path / "absent.json"))


def test_read_hermitian_pd_rejects_bad_matrices(tmp_path):
    asymmetric = write_document(tmp_path / "a.json", {"n": 2, "re": [[1, 2], [0, 1]]})
    with pytest.raises(NotHermitian):
        read_hermitian_pd(asymmetric)

    indefinite = write_document(tmp_path / "b.json", {"n": 2, "re": [[1, 0], [0, -1]]})
    with pytest.raises(NotPositiveDefinite):
        read_hermitian_pd(indefinite)


def test_write_then_read_is_exact(tmp_path, rng):
    m = gen_pd(5, 1e6, rng).base
    path = str(tmp_path / "m.json")
    write_matrix(path, m)
    assert_array_equal(read_matrix(path), m)
    assert read_hermitian_pd(path).n == 5
