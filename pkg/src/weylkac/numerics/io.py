"""CSV and JSON serialization of sampled functions, kernels and reports."""

import csv
import json
from pathlib import Path

import numpy as np

from .grid import Grid2D, GridFunction2D, OperatorKernel, WaveFunction1D


class InputError(ValueError):
    """A file that does not parse as one of the supported formats."""


def _flat(obj):
    if isinstance(obj, GridFunction2D):
        return "grid2d", obj.grid.n, obj.grid.extent, obj.values.ravel()
    if isinstance(obj, WaveFunction1D):
        return "wave1d", obj.n, obj.extent, obj.values
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _build(kind, n, extent, values):
    try:
        if kind == "grid2d":
            return GridFunction2D(Grid2D(n, extent), values.reshape(n, n))
        if kind == "wave1d":
            return WaveFunction1D(n, extent, values)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    raise InputError(f"unknown kind {kind!r}")


def write_csv(obj, path):
    kind, n, extent, values = _flat(obj)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["n", "extent", "kind"])
        w.writerow([n, repr(float(extent)), kind])
        w.writerow(["index", "re", "im"])
        for i, v in enumerate(values):
            w.writerow([i, repr(float(v.real)), repr(float(v.imag))])


def read_csv(path):
    try:
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
        n, extent = int(rows[1][0]), float(rows[1][1])
        kind = rows[1][2] if len(rows[1]) > 2 else ("grid2d" if len(rows) - 3 == n * n else "wave1d")
        body = rows[3:]
        values = np.zeros(len(body), dtype=complex)
        for row in body:
            values[int(row[0])] = complex(float(row[1]), float(row[2]))
    except (OSError, IndexError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from exc
    return _build(kind, n, extent, values)


def write_json(obj, path):
    kind, n, extent, values = _flat(obj)
    doc = {
        "kind": kind,
        "n": n,
        "extent": float(extent),
        "re": [float(v) for v in values.real],
        "im": [float(v) for v in values.imag],
    }
    Path(path).write_text(json.dumps(doc, sort_keys=True))


def read_json(path):
    try:
        doc = json.loads(Path(path).read_text())
        values = np.asarray(doc["re"], dtype=float) + 1j * np.asarray(doc["im"], dtype=float)
        return _build(doc["kind"], int(doc["n"]), float(doc["extent"]), values)
    except (OSError, KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"{path}: {exc}") from exc


def read_function(path):
    path = Path(path)
    return read_json(path) if path.suffix == ".json" else read_csv(path)


def write_function(obj, path):
    path = Path(path)
    (write_json if path.suffix == ".json" else write_csv)(obj, path)


def write_kernel(k, path):
    with open(path, "w", newline="") as fh:
        fh.write(f"# n={k.n} extent={float(k.extent)!r} nu={float(k.nu)!r}\n")
        w = csv.writer(fh)
        for row in k.values:
            w.writerow([repr(complex(v)) for v in row])


def read_kernel(path):
    try:
        with open(path, newline="") as fh:
            meta = dict(item.split("=") for item in fh.readline().lstrip("#").split())
            rows = [[complex(c) for c in row] for row in csv.reader(fh) if row]
        n = int(meta["n"])
        k = OperatorKernel(n, float(meta["extent"]), np.array(rows, dtype=complex), float(meta["nu"]))
    except (OSError, KeyError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from exc
    return k


def record(check, value, tolerance, passed=None, **extra):
    """Residual report entry ``{check, value, tolerance, pass}``."""
    value = float(value)
    ok = bool(value <= tolerance) if passed is None else bool(passed)
    return {"check": check, "value": value, "tolerance": tolerance, "pass": ok, **extra}


def dump_report(doc, path=None):
    text = json.dumps(doc, indent=2, sort_keys=True, default=_jsonable) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text


def _jsonable(obj):
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, np.bool_):
        return bool(obj)
    return str(obj)
