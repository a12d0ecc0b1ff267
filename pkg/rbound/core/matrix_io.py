"""
JSON document readers for matrices and generators.

Matrix format: {"rows": n, "cols": n, "re": [[...]], "im": [[...]]} with
row-major nested arrays. "im" may be omitted for real matrices.
"""
import json
import logging
import numbers
from typing import Any

import numpy as np

from .exception import InputFormatError, NonFiniteError
from .matrix import ComplexMatrix

logger = logging.getLogger(__name__)


class DocumentReader:
    """Main subclass for the document readers.

    Not meant to be used directly rather used as a base class for polymorphic
    behavior. A subclass supplies the raw text; this class parses it once and
    hands out matrices from the parsed document.
    """

    def __init__(self):
        """Initialize the object."""
        self._document: Any = None
        self._loaded: bool = False

    def source(self) -> str:
        """Return the name of the source being read."""
        return "unk_source"

    def read_text(self) -> str:
        """Return the raw text of the document."""
        raise NotImplementedError

    @property
    def document(self) -> Any:
        """Return the parsed JSON document."""
        if not self._loaded:
            text = self.read_text()
            try:
                self._document = json.loads(text)
            except json.JSONDecodeError as err:
                raise InputFormatError(
                    f"Malformed JSON at line {err.lineno} column {err.colno}",
                    source=self.source(), field="-") from err
            self._loaded = True
        return self._document

    def matrix(self, field: str | None = None) -> ComplexMatrix:
        """Return the matrix stored in the document (or under 'field')."""
        doc = self.document
        if field is not None:
            if not isinstance(doc, dict) or field not in doc:
                raise InputFormatError("Missing matrix field",
                                       source=self.source(), field=field)
            doc = doc[field]
        return matrix_from_json(doc, source=self.source(),
                                field=field or "matrix")

# end of class DocumentReader


class BufferReader(DocumentReader):
    """Support reader operations on an in-memory JSON string."""

    def __init__(self, buffer: str, name: str = "buffer"):
        """Initialize the object."""
        super().__init__()
        self._buffer = buffer
        self._name = name

    def read_text(self) -> str:
        """Return the buffer."""
        return self._buffer

    def source(self) -> str:
        """For a buffer reader, the name given at construction."""
        return self._name

# end of class BufferReader


class FileReader(DocumentReader):
    """Class to encapsulate the reading of a JSON document from a file."""

    def __init__(self, filename: str):
        """Initialize the object."""
        super().__init__()
        self._filename = filename

    def read_text(self) -> str:
        """Read the whole file."""
        try:
            with open(self._filename, encoding="utf-8") as stream:
                return stream.read()
        except OSError as err:
            logger.error("Could not open the file: %s", self._filename)
            raise InputFormatError(f"Could not open the file ({err.strerror})",
                                   source=self._filename, field="-") from err

    def source(self) -> str:
        """Return the string name of the file being read."""
        return self._filename

# end of class FileReader


def matrix_from_json(obj: Any, source: str = "unk_source",
                     field: str = "matrix") -> ComplexMatrix:
    """Return the ComplexMatrix described by a parsed matrix document."""
    if not isinstance(obj, dict):
        raise InputFormatError("Expected a matrix object", source, field)
    rows = _positive_int(obj, "rows", source, field)
    cols = _positive_int(obj, "cols", source, field)
    if "re" not in obj:
        raise InputFormatError("Missing 're'", source, f"{field}.re")
    real = _grid(obj["re"], rows, cols, source, f"{field}.re")
    imag = _grid(obj["im"], rows, cols, source, f"{field}.im") \
        if "im" in obj else np.zeros((rows, cols))
    try:
        return ComplexMatrix(real + 1j * imag)
    except NonFiniteError as err:
        raise InputFormatError("Non-finite matrix entry", source,
                               field) from err


def matrix_to_json(matrix: ComplexMatrix) -> dict:
    """Return the matrix document of 'matrix'."""
    data = matrix.array
    return {"rows": matrix.rows, "cols": matrix.cols,
            "re": data.real.tolist(), "im": data.imag.tolist()}


def _positive_int(obj: dict, key: str, source: str, field: str) -> int:
    value = obj.get(key)
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise InputFormatError(f"'{key}' must be a positive integer",
                               source, f"{field}.{key}")
    return value


def _grid(values: Any, rows: int, cols: int, source: str,
          field: str) -> np.ndarray:
    if not isinstance(values, list) or len(values) != rows:
        raise InputFormatError(f"Expected {rows} rows", source, field)
    for index, row in enumerate(values):
        if not isinstance(row, list) or len(row) != cols:
            raise InputFormatError(f"Expected {cols} columns",
                                   source, f"{field}[{index}]")
        for entry in row:
            if isinstance(entry, bool) or \
               not isinstance(entry, numbers.Real):
                raise InputFormatError(f"Non-numeric entry {entry!r}",
                                       source, f"{field}[{index}]")
    return np.array(values, dtype=np.float64)
