"""
Instance file codec.

Format (UTF-8 text, whitespace tolerant, '#' starts a comment anywhere):

    # name P3                 optional one-word label
    4 20                      <n> <W>
    6 9                       <w_i> <v_i>, n lines
    5 11
    9 13
    7 15
    # optimum 35              optional known optimum

Directives are whole-line comments in exactly these forms; any other
comment text is ignored. Reals are written with repr() so
parse(serialize(inst)) restores every field bit for bit.
"""

import math
from pathlib import Path
from typing import Optional

import pandas as pd

from knapsack_ca.exceptions import InstanceParseError, InvalidInstanceError
from knapsack_ca.knapsack.problem import Instance
from knapsack_ca.logger import setup_logger
from knapsack_ca.validations.validate_inputs import validate_items

logger = setup_logger("knapsack.io")

_DIRECTIVES = ("optimum", "name")


def _format_real(x: float) -> str:
    if float(x).is_integer() and abs(x) < 1e15:
        return str(int(x))
    return repr(float(x))


def _parse_real(token: str, what: str, line: int, source: Optional[str]) -> float:
    try:
        x = float(token)
    except ValueError:
        raise InstanceParseError(f"{what} is not a number: {token!r}", line=line, source=source) from None
    if not math.isfinite(x):
        raise InstanceParseError(f"{what} must be finite, got {token!r}", line=line, source=source)
    return x


def _directive(comment: str) -> Optional[tuple[str, str]]:
    """
    (keyword, value) of the directive a whole-line comment holds, if any.

    Only '# name <label>' and '# optimum <finite number>' qualify, keyword in
    lower case and exactly one value token; any other text is a plain comment.
    """
    tokens = comment.split()
    if len(tokens) != 2 or tokens[0] not in _DIRECTIVES:
        return None
    if tokens[0] == "optimum":
        try:
            if not math.isfinite(float(tokens[1])):
                return None
        except ValueError:
            return None
    return tokens[0], tokens[1]


def parse_instance(text: bytes | str, source: Optional[str] = None) -> Instance:
    """
    Parse an instance from its text form.

    `source` (a path or label) is only used to prefix error messages.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise InstanceParseError(f"instance file is not UTF-8: {e}", source=source) from e

    header: Optional[tuple[int, int, float]] = None
    items: list[tuple[int, float, float]] = []
    optimum: Optional[float] = None
    name: Optional[str] = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        content, _, comment = raw.partition("#")
        tokens = content.split()
        if not tokens:
            directive = _directive(comment)
            if directive is None:
                continue
            key, value = directive
            if key == "optimum":
                optimum = float(value)
            else:
                name = value
            continue

        if header is None:
            if len(tokens) != 2:
                raise InstanceParseError("header must be '<n> <W>'", line=lineno, source=source)
            try:
                n = int(tokens[0])
            except ValueError:
                raise InstanceParseError(f"item count is not an integer: {tokens[0]!r}",
                                         line=lineno, source=source) from None
            if n < 1:
                raise InstanceParseError(f"item count must be positive, got {n}", line=lineno, source=source)
            capacity = _parse_real(tokens[1], "capacity", lineno, source)
            if capacity <= 0:
                raise InstanceParseError(f"capacity must be positive, got {tokens[1]}", line=lineno, source=source)
            header = (lineno, n, capacity)
            continue

        if len(tokens) != 2:
            raise InstanceParseError("item line must be '<w_i> <v_i>'", line=lineno, source=source)
        if len(items) == header[1]:
            raise InstanceParseError(f"more item lines than the declared n={header[1]}", line=lineno, source=source)
        items.append((lineno,
                      _parse_real(tokens[0], "weight", lineno, source),
                      _parse_real(tokens[1], "value", lineno, source)))

    if header is None:
        raise InstanceParseError("missing '<n> <W>' header (empty instance file)", line=1, source=source)

    header_line, n, capacity = header
    if len(items) != n:
        last_line = items[-1][0] if items else header_line
        raise InstanceParseError(f"header declares n={n} items but {len(items)} item lines follow",
                                 line=last_line, source=source)

    df = pd.DataFrame(items, columns=["line", "weight", "value"]).astype(
        {"line": "int64", "weight": "float64", "value": "float64"}
    )
    df = validate_items(df, source=source)

    try:
        inst = Instance(df["weight"].to_numpy(), df["value"].to_numpy(), capacity, optimum, name)
    except InvalidInstanceError as e:
        raise InstanceParseError(str(e), source=source) from e

    logger.debug(f"Parsed instance {inst!r}")
    return inst


def serialize_instance(inst: Instance) -> str:
    lines = []
    if inst.name and len(inst.name.split()) != 1:
        raise ValueError(f"instance name must be one word to be stored in a file, got {inst.name!r}")
    if inst.name:
        lines.append(f"# name {inst.name}")
    lines.append(f"{inst.n} {_format_real(inst.capacity)}")
    for w, v in zip(inst.weights, inst.values):
        lines.append(f"{_format_real(w)} {_format_real(v)}")
    if inst.known_optimum is not None:
        lines.append(f"# optimum {_format_real(inst.known_optimum)}")
    return "\n".join(lines) + "\n"


def read_instance(path: str | Path) -> Instance:
    """Read an instance file; the file stem names the instance unless the file sets one."""
    path = Path(path)
    logger.info(f"Reading instance from {path}")
    try:
        data = path.read_bytes()
    except OSError as e:
        raise InstanceParseError(f"cannot read instance file: {e.strerror or e}", source=str(path)) from e

    inst = parse_instance(data, source=str(path))
    if inst.name is None:
        inst = Instance(inst.weights, inst.values, inst.capacity, inst.known_optimum, path.stem)
    logger.info(f"Loaded {inst!r}")
    return inst


def write_instance(inst: Instance, path: str | Path) -> None:
    path = Path(path)
    logger.info(f"Writing {inst!r} to {path}")
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(serialize_instance(inst))
