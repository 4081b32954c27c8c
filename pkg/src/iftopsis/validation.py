"""Coercion of caller-supplied arrays into IFV matrices.

The estimator accepts decision matrices in three equivalent layouts and
normalizes them all to tuples of IFV rows:

* nested sequences of IFV instances or (mu, nu) pairs,
* a numeric array of shape (n, m, 2),
* a flat numeric array of shape (n, 2 m) with interleaved mu/nu columns.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import DomainError
from .values import IFV, make_ifv

IfvMatrix = tuple[tuple[IFV, ...], ...]


def _rows_from_nested(X) -> IfvMatrix | None:
    # already-structured input: rows of IFVs or of (mu, nu) pairs
    try:
        rows = list(X)
    except TypeError:
        return None
    if not rows:
        raise DomainError("decision matrix is empty")
    if isinstance(rows[0], IFV):
        raise DomainError("expected rows of IFVs, got a flat IFV sequence")
    out = []
    for i, row in enumerate(rows):
        try:
            cells = list(row)
        except TypeError:
            return None
        converted = []
        for j, cell in enumerate(cells):
            if isinstance(cell, IFV):
                converted.append(cell)
            elif isinstance(cell, Sequence) and not isinstance(cell, str) and len(cell) == 2:
                converted.append(make_ifv(float(cell[0]), float(cell[1])))
            else:
                return None
        out.append(tuple(converted))
    return tuple(out)


def as_ifv_matrix(X) -> IfvMatrix:
    """Coerce X to a rectangular matrix of IFVs.

    Raises DomainError (a ValueError) when the shape is unusable or any
    entry fails the membership constraint.
    """
    nested = _rows_from_nested(X)
    if nested is not None:
        widths = {len(r) for r in nested}
        if len(widths) != 1:
            raise DomainError(f"ragged decision matrix: row lengths {sorted(widths)}")
        return nested

    arr = np.asarray(X, dtype=float)
    if arr.ndim == 3 and arr.shape[2] == 2:
        pairs = arr
    elif arr.ndim == 2 and arr.shape[1] % 2 == 0 and arr.shape[1] > 0:
        pairs = arr.reshape(arr.shape[0], arr.shape[1] // 2, 2)
    else:
        raise DomainError(
            f"cannot interpret shape {arr.shape} as an IFV matrix; "
            "expected (n, m, 2) or (n, 2m)"
        )
    if pairs.shape[0] == 0 or pairs.shape[1] == 0:
        raise DomainError("decision matrix is empty")
    return tuple(
        tuple(make_ifv(float(mu), float(nu)) for mu, nu in row) for row in pairs
    )


def as_weight_vector(weights, m: int) -> tuple[float, ...] | tuple[IFV, ...]:
    """Coerce scalar or IFV weights to a tuple of length m.

    Scalars stay floats; pairs and IFVs become IFVs.  Length and value
    validation is left to the problem constructor.
    """
    items = list(weights)
    if len(items) != m:
        raise DomainError(f"{len(items)} weights for {m} attributes")
    if all(isinstance(w, IFV) for w in items):
        return tuple(items)
    if all(np.ndim(w) == 0 for w in items):
        return tuple(float(w) for w in items)
    return tuple(
        w if isinstance(w, IFV) else make_ifv(float(w[0]), float(w[1]))
        for w in items
    )
