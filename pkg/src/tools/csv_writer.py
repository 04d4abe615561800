import csv
import io
import math
import sys
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence, Union

MISSING = "NA"

Target = Union[str, Path, None]


def format_value(value: Any) -> str:
    """Ints verbatim, floats at full round-trip precision, None as NA."""
    if value is None:
        return MISSING
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return repr(value)
    return str(value)


def render_csv(
    header: Sequence[str],
    rows: Iterable[Sequence[Any]],
    comments: Optional[Sequence[str]] = None,
    footer: Optional[Sequence[Any]] = None,
) -> str:
    buffer = io.StringIO()
    for line in comments or ():
        buffer.write(f"# {line}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_value(v) for v in row])
    if footer is not None:
        writer.writerow([format_value(v) for v in footer])
    return buffer.getvalue()


def write_csv(target: Target, text: str) -> None:
    """Write to ``target``; ``None`` or ``-`` means stdout."""
    if target is None or str(target) == "-":
        sys.stdout.write(text)
        return
    path = Path(target)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
