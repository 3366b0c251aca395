"""Text formats: Cayley-table ring files and witness matrix files.

Cayley file::

    # the ideal {0, 2} of Z4
    size 2
    labels 0 2
    add
    0 1
    1 0
    mul
    0 0
    0 0
    star
    0 1

Witness matrix file: a ``modulus m`` header followed by one row of entries
per line, row-major.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

import numpy as np

from .errors import ParseError

DATA_PREFIX = "data:"


def resolve(path):
    """Plain paths are used as given; ``data:<name>`` refers to bundled files."""
    path = str(path)
    if path.startswith(DATA_PREFIX):
        return resources.files("rickart") / "data" / path[len(DATA_PREFIX):]
    return Path(path)


def _lines(text):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if line.strip():
            yield lineno, raw, line.split()


def _ints(lineno, raw, tokens):
    out = []
    for tok in tokens:
        try:
            out.append(int(tok))
        except ValueError:
            raise ParseError(f"expected integer, got {tok!r}", lineno, raw.find(tok) + 1) from None
    return out


def parse_cayley(text):
    """Return ``(add, mul, star, labels)`` from Cayley-file text."""
    lines = list(_lines(text))
    size = None
    labels = None
    tables = {}
    i = 0
    while i < len(lines):
        lineno, raw, tokens = lines[i]
        key = tokens[0]
        if key == "size":
            if len(tokens) != 2:
                raise ParseError("size takes one integer", lineno, 1)
            size = _ints(lineno, raw, tokens[1:])[0]
            if size < 1:
                raise ParseError("size must be positive", lineno, raw.find(tokens[1]) + 1)
            i += 1
        elif key == "labels":
            labels = tokens[1:]
            i += 1
        elif key in ("add", "mul", "star"):
            if size is None:
                raise ParseError(f"{key} table before size", lineno, 1)
            nrows = 1 if key == "star" else size
            rows = []
            for lineno2, raw2, tokens2 in lines[i + 1:i + 1 + nrows]:
                row = _ints(lineno2, raw2, tokens2)
                if len(row) != size:
                    raise ParseError(f"{key} row needs {size} entries, got {len(row)}", lineno2, 1)
                rows.append(row)
            if len(rows) != nrows:
                raise ParseError(f"{key} table needs {nrows} rows", lineno, 1)
            tables[key] = rows[0] if key == "star" else rows
            i += 1 + nrows
        else:
            raise ParseError(f"unknown section {key!r}", lineno, raw.find(key) + 1)
    for key in ("add", "mul", "star"):
        if key not in tables:
            raise ParseError(f"missing {key} table", max(1, len(text.splitlines())), 1)
    if labels is not None and len(labels) != size:
        raise ParseError(f"labels needs {size} entries", 1, 1)
    return tables["add"], tables["mul"], tables["star"], labels


def load_cayley(path):
    from .constructions import CayleyStructure

    add, mul, star, labels = parse_cayley(resolve(path).read_text())
    return CayleyStructure(add, mul, star, labels)


def dump_cayley(R):
    """Cayley-file text for a tabled ring (round-trips through ``parse_cayley``)."""
    R.require_tabled()
    out = [f"# {R.name}", f"size {R.size}", "labels " + " ".join(R.label(c).replace(" ", "") for c in range(R.size))]
    for key, tab in (("add", R.add_table), ("mul", R.mul_table)):
        out.append(key)
        out.extend(" ".join(map(str, row)) for row in tab.tolist())
    out.append("star")
    out.append(" ".join(map(str, R.star_map.tolist())))
    return "\n".join(out) + "\n"


def parse_witness_matrix(text):
    """Return ``(modulus, entries)`` with entries a square int array."""
    lines = list(_lines(text))
    if not lines or lines[0][2][0] != "modulus" or len(lines[0][2]) != 2:
        where = lines[0][0] if lines else 1
        raise ParseError("witness file must start with 'modulus <m>'", where, 1)
    modulus = _ints(lines[0][0], lines[0][1], lines[0][2][1:])[0]
    rows = [_ints(lineno, raw, tokens) for lineno, raw, tokens in lines[1:]]
    k = len(rows)
    for (lineno, _, _), row in zip(lines[1:], rows):
        if len(row) != k:
            raise ParseError(f"matrix row needs {k} entries, got {len(row)}", lineno, 1)
    return modulus, np.asarray(rows, dtype=np.int64) % modulus


def load_witness_matrix(path):
    return parse_witness_matrix(resolve(path).read_text())
