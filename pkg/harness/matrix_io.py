"""
Matrix JSON files: {"n": <int>, "re": [[...]], "im": [[...]]}, row-major, "im" optional.
"""

import json
import logging

import numpy as np

from errors import MatrixFormatError
from means.hermitian_core import ComplexMatrix, HermitianPD, as_complex_matrix

logger = logging.getLogger(__name__)


def _grid(document: dict, key: str, n: int) -> np.ndarray:
    rows = document[key]
    if not isinstance(rows, list) or len(rows) != n or any(
        not isinstance(row, list) or len(row) != n for row in rows
    ):
        raise MatrixFormatError(f'"{key}" must be a {n}x{n} array of numbers')
    try:
        return np.array(rows, dtype=np.float64)
    except (TypeError, ValueError) as e:
        raise MatrixFormatError(f'"{key}" holds a non-numeric entry: {e}') from e


def parse_matrix(document) -> ComplexMatrix:
    if not isinstance(document, dict) or "n" not in document or "re" not in document:
        raise MatrixFormatError('matrix document needs "n" and "re"')
    n = document["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise MatrixFormatError(f'"n" must be a positive integer, got {n!r}')
    real = _grid(document, "re", n)
    imag = _grid(document, "im", n) if "im" in document else np.zeros((n, n))
    return as_complex_matrix(real + 1j * imag)


def read_matrix(path: str) -> ComplexMatrix:
    with open(path, "r", encoding="utf-8") as f:
        try:
            document = json.load(f)
        except json.JSONDecodeError as e:
            raise MatrixFormatError(f"{path}: invalid JSON: {e}") from e
    matrix = parse_matrix(document)
    logger.debug(f"Read {matrix.shape[0]}x{matrix.shape[0]} matrix from {path}")
    return matrix


def read_hermitian_pd(path: str) -> HermitianPD:
    """Read a matrix and reject it unless it is Hermitian positive definite."""
    return HermitianPD.from_matrix(read_matrix(path))


def matrix_document(m: ComplexMatrix) -> dict:
    m = np.asarray(m, dtype=np.complex128)
    return {
        "n": int(m.shape[0]),
        "re": m.real.tolist(),
        "im": m.imag.tolist(),
    }


def write_matrix(path: str, m: ComplexMatrix) -> None:
    # json writes floats with repr, which reproduces every double exactly
    with open(path, "w", encoding="utf-8") as f:
        json.dump(matrix_document(m), f)
        f.write("\n")
    logger.debug(f"Wrote matrix to {path}")
