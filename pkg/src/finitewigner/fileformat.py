"""Lossless JSON containers and CSV tables.

Every file is one JSON object::

    {"format": "finitewigner.<kind>/1", "n": N, ..., "data": [...]}

Complex entries are ``[re, im]`` pairs and every number is written with 17
significant digits, so parsing a written file reproduces the array
bit for bit. Sign patterns are stored as ``+``/``-`` strings in canonical
slot order (lexicographic pair representatives, then ``(N/2, N/2)`` for even
``N``), and the order itself is recorded under ``sign_order``.
"""

import io
import json

import numpy as np

from .kernels import SignPattern, sign_slots

__all__ = [
    "FormatError", "MATRIX", "KERNEL", "XI", "WIGNER", "PHASE_POINTS", "REPORT",
    "dumps", "loads", "dump", "load", "complex_to_nested", "nested_to_complex",
    "wigner_csv", "read_wigner_csv", "read_wigner_file",
]

MATRIX = "finitewigner.matrix/1"
KERNEL = "finitewigner.kernel/1"
XI = "finitewigner.xi/1"
WIGNER = "finitewigner.wigner/1"
PHASE_POINTS = "finitewigner.phase-points/1"
REPORT = "finitewigner.report/1"

SIGN_ORDER_RULE = (
    "one sign per conjugate-pair representative (q0, p0) < (N-q0, N-p0), "
    "lexicographic; self-conjugate point (N/2, N/2) last for even N"
)


class FormatError(ValueError):
    pass


def _num(x):
    return f"{float(x):.16e}"


def _check_finite(arr):
    if not np.all(np.isfinite(arr)):
        raise FormatError("non-finite value cannot be serialized")


def _encode_real(arr):
    if arr.ndim == 0:
        return _num(arr)
    if arr.ndim == 1:
        return "[" + ", ".join(["%.16e"] * arr.size) % tuple(arr.tolist()) + "]"
    return "[" + ",\n ".join(_encode_real(row) for row in arr) + "]"


def _encode_complex(arr):
    if arr.ndim == 0:
        return "[%.16e, %.16e]" % (arr.real, arr.imag)
    if arr.ndim == 1:
        pairs = np.empty((arr.size, 2))
        pairs[:, 0], pairs[:, 1] = arr.real, arr.imag
        fmt = "[" + ", ".join(["[%.16e, %.16e]"] * arr.size) + "]"
        return fmt % tuple(pairs.ravel().tolist())
    return "[" + ",\n ".join(_encode_complex(row) for row in arr) + "]"


def complex_to_nested(arr):
    """JSON text for a complex array with ``[re, im]`` leaves."""
    arr = np.asarray(arr, dtype=np.complex128)
    _check_finite(arr)
    return _encode_complex(arr)


def nested_to_complex(data):
    arr = np.asarray(data, dtype=float)
    if arr.shape[-1:] != (2,):
        raise FormatError("complex data must end in [re, im] pairs")
    out = np.empty(arr.shape[:-1], dtype=np.complex128)
    out.real, out.imag = arr[..., 0], arr[..., 1]
    return out


def dumps(kind, n, data, *, signs=None, real=False, **meta):
    """Serialize `data` into a container of the given `kind`.

    Extra keyword metadata must be JSON-serializable.
    """
    header = {"format": kind, "n": int(n)}
    if signs is not None:
        header["signs"] = signs.to_string()
        header["sign_order_rule"] = SIGN_ORDER_RULE
        if signs.n <= 32:
            header["sign_order"] = [list(s) for s in sign_slots(signs.n)]
    header.update(meta)
    head = json.dumps(header)[:-1]
    arr = np.asarray(data)
    if real:
        arr = np.asarray(arr, dtype=float)
        _check_finite(arr)
        body = _encode_real(arr)
    else:
        body = complex_to_nested(arr)
    return f'{head}, "real": {json.dumps(bool(real))}, "data": {body}}}\n'


def loads(text, kind=None):
    """Parse a container; returns ``(header, array)``."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not a valid container: {exc}") from None
    if not isinstance(obj, dict) or "format" not in obj or "data" not in obj:
        raise FormatError("missing 'format' or 'data' field")
    if kind is not None and obj["format"] != kind:
        raise FormatError(f"expected format {kind!r}, found {obj['format']!r}")
    data = obj.pop("data")
    arr = np.asarray(data, dtype=float) if obj.get("real") else nested_to_complex(data)
    if "signs" in obj:
        obj["signs"] = SignPattern.from_string(obj["n"], obj["signs"])
    return obj, arr


def dump(path, *args, **kwargs):
    text = dumps(*args, **kwargs)
    with open(path, "w") as fh:
        fh.write(text)


def load(path, kind=None):
    with open(path) as fh:
        return loads(fh.read(), kind)


def wigner_csv(values, signs=None):
    """Real table as CSV, rows ``q`` and columns ``p``."""
    values = np.asarray(values, dtype=float)
    buf = io.StringIO()
    tag = f"# {WIGNER} n={values.shape[0]}"
    if signs is not None:
        tag += f" signs={signs.to_string() or '<none>'}"
    buf.write(tag + "\n")
    for row in values:
        buf.write(",".join(["%.16e"] * row.size) % tuple(row.tolist()) + "\n")
    return buf.getvalue()


def read_wigner_csv(text):
    rows = [line for line in text.splitlines() if line.strip() and not line.startswith("#")]
    try:
        values = np.array([[float(x) for x in r.split(",")] for r in rows])
    except ValueError as exc:
        raise FormatError(f"malformed CSV: {exc}") from None
    if values.ndim != 2 or values.shape[0] != values.shape[1]:
        raise FormatError(f"Wigner table must be square, got shape {values.shape}")
    return values


def read_wigner_file(path):
    """Real Wigner table from either a JSON container or CSV."""
    with open(path) as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        header, arr = loads(text, WIGNER)
        if np.iscomplexobj(arr):
            if np.abs(arr.imag).max() > 0:
                raise FormatError("Wigner file holds a complex table")
            arr = arr.real
        return arr
    return read_wigner_csv(text)
