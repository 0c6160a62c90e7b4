"""Reading and writing code files.

Text format, one ``key: value`` per line, ``#`` starts a comment::

    # Z8Z4 code
    p: 2
    s: 3
    r: 2
    alpha: 4
    beta: 3
    H: 2 2        # optional, invariant factors of the R-block group
    K: 3          # optional, invariant factors of the Rbar-block group
    rows:
    7 6 5 4 | 1 2 3
    6 4 0 2 | 2 0 1

Rows follow ``rows:`` up to the end of the file.  The ``|`` separator is
optional but, when present, must sit after exactly ``alpha`` entries.
Entries are reduced mod p^s (first ``alpha``) or mod p^r (last ``beta``),
so negative numbers are accepted.

The structured variant is a JSON object with the same fields, groups
nested as ``{"groups": {"H": [...], "K": [...]}}``.  ``load_code_file``
accepts either.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .code import MixedCode, format_mixed_matrix
from .group import GroupSpec
from .ring import ChainRingSpec

__all__ = ["CodeFile", "CodeFileError", "parse_code_file", "load_code_file", "dump_code_file"]


class CodeFileError(ValueError):
    def __init__(self, message: str, line: int | None = None, field: str | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field '{field}'")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)
        self.line = line
        self.field = field


@dataclass(frozen=True)
class CodeFile:
    code: MixedCode
    H: GroupSpec | None = None
    K: GroupSpec | None = None

    @property
    def groups(self) -> tuple[GroupSpec, GroupSpec]:
        if self.H is None or self.K is None:
            raise CodeFileError("groups H and K are required for this command", field="H")
        return self.H, self.K


_INT_FIELDS = ("p", "s", "r", "alpha", "beta")


def _int(value: str, line: int, field: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise CodeFileError(f"expected an integer, got {value!r}", line, field) from None


def _build(fields: dict, rows, groups: dict, lines: dict) -> CodeFile:
    for key in _INT_FIELDS:
        if key not in fields:
            raise CodeFileError("missing required field", field=key)
    try:
        spec = ChainRingSpec(fields["p"], fields["s"], fields["r"])
    except ValueError as exc:
        raise CodeFileError(str(exc), lines.get("p"), "p") from None
    alpha, beta = fields["alpha"], fields["beta"]
    if alpha < 0 or beta < 0:
        raise CodeFileError("block lengths must be nonnegative", lines.get("alpha"), "alpha")
    for lineno, row in rows:
        if len(row) != alpha + beta:
            raise CodeFileError(
                f"row has {len(row)} entries, expected alpha + beta = {alpha + beta}",
                lineno,
                "rows",
            )
    code = MixedCode(spec, alpha, beta, [r for _, r in rows])
    H = K = None
    if groups:
        if set(groups) != {"H", "K"}:
            raise CodeFileError("groups need both H and K", field="H" if "H" not in groups else "K")
        try:
            H, K = GroupSpec(tuple(groups["H"])), GroupSpec(tuple(groups["K"]))
        except ValueError as exc:
            raise CodeFileError(str(exc), lines.get("H"), "H") from None
        if H.order != alpha:
            raise CodeFileError(f"|H| = {H.order} but alpha = {alpha}", lines.get("H"), "H")
        if K.order != beta:
            raise CodeFileError(f"|K| = {K.order} but beta = {beta}", lines.get("K"), "K")
    return CodeFile(code, H, K)


def _parse_json(text: str) -> CodeFile:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CodeFileError(exc.msg, exc.lineno) from None
    if not isinstance(obj, dict):
        raise CodeFileError("expected a JSON object")
    fields = {}
    for key in _INT_FIELDS:
        if key in obj:
            if not isinstance(obj[key], int):
                raise CodeFileError("expected an integer", field=key)
            fields[key] = obj[key]
    raw_rows = obj.get("rows", [])
    if not isinstance(raw_rows, list) or not all(
        isinstance(r, list) and all(isinstance(x, int) for x in r) for r in raw_rows
    ):
        raise CodeFileError("rows must be a list of integer lists", field="rows")
    groups = obj.get("groups") or {}
    return _build(fields, [(None, r) for r in raw_rows], groups, {})


def parse_code_file(text: str) -> CodeFile:
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    fields: dict[str, int] = {}
    groups: dict[str, list[int]] = {}
    lines: dict[str, int] = {}
    rows: list[tuple[int, list[int]]] = []
    in_rows = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if in_rows:
            rows.append((lineno, _parse_row(line, lineno, fields.get("alpha"))))
            continue
        if ":" not in line:
            raise CodeFileError(f"expected 'key: value', got {line!r}", lineno)
        key, value = (part.strip() for part in line.split(":", 1))
        if key in lines:
            raise CodeFileError("duplicate field", lineno, key)
        lines[key] = lineno
        if key in _INT_FIELDS:
            fields[key] = _int(value, lineno, key)
        elif key in ("H", "K"):
            groups[key] = [_int(v, lineno, key) for v in value.split()]
        elif key == "rows":
            if value:
                raise CodeFileError("rows start on the line after 'rows:'", lineno, "rows")
            in_rows = True
        else:
            raise CodeFileError("unknown field", lineno, key)
    return _build(fields, rows, groups, lines)


def _parse_row(line: str, lineno: int, alpha: int | None) -> list[int]:
    tokens = line.replace("|", " | ").split()
    if "|" in tokens:
        if tokens.count("|") > 1:
            raise CodeFileError("more than one '|' separator", lineno, "rows")
        if alpha is not None and tokens.index("|") != alpha:
            raise CodeFileError(f"'|' must follow exactly alpha = {alpha} entries", lineno, "rows")
        tokens.remove("|")
    return [_int(t, lineno, "rows") for t in tokens]


def load_code_file(path) -> CodeFile:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise CodeFileError(f"cannot read {path}: {exc.strerror}") from None
    return parse_code_file(text)


def dump_code_file(
    code: MixedCode,
    H: GroupSpec | None = None,
    K: GroupSpec | None = None,
    fmt: str = "text",
    rows: np.ndarray | None = None,
    comment: str | None = None,
) -> str:
    """Serialise ``code`` (by its standard rows unless ``rows`` is given)."""
    spec = code.spec
    rows = code.standard_rows if rows is None else rows
    if fmt == "structured":
        obj = {
            "p": spec.p, "s": spec.s, "r": spec.r,
            "alpha": code.alpha, "beta": code.beta,
            "rows": [[int(x) for x in row] for row in rows],
        }
        if H is not None and K is not None:
            obj["groups"] = {"H": list(H.invariant_factors), "K": list(K.invariant_factors)}
        return json.dumps(obj)
    out = [f"# {comment}"] if comment else []
    out += [f"p: {spec.p}", f"s: {spec.s}", f"r: {spec.r}", f"alpha: {code.alpha}", f"beta: {code.beta}"]
    if H is not None and K is not None:
        out += [
            "H: " + " ".join(map(str, H.invariant_factors)),
            "K: " + " ".join(map(str, K.invariant_factors)),
        ]
    out.append("rows:")
    body = format_mixed_matrix(rows, code.alpha)
    if body:
        out.append(body)
    return "\n".join(out) + "\n"
