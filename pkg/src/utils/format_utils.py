# src/utils/format_utils.py
import csv
import io
from fractions import Fraction
from pathlib import Path
from typing import Any, List, Sequence, Union


def render_decimal(value: Fraction, places: int = 3, truncate: bool = False) -> str:
    """
    Round half up (or truncate) to a fixed number of decimals, as the
    published tables print ratios (6/11 -> 0.545). Display only; comparisons
    use the fraction.
    """
    value = Fraction(value)
    sign = '-' if value < 0 else ''
    value = abs(value)
    scale = 10 ** places
    if truncate:
        scaled = value.numerator * scale // value.denominator
    else:
        scaled = (value.numerator * scale * 2 + value.denominator) // (2 * value.denominator)
    whole, frac = divmod(scaled, scale)
    if places == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{places}d}"


def render_fraction(value: Fraction) -> str:
    """Exact 'num/den' form; 1 prints as 1/1."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def format_csv(header: Sequence[str], rows: List[Sequence[Any]]) -> str:
    """CSV text with LF line endings and no trailing whitespace."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def format_table(header: Sequence[str], rows: List[Sequence[Any]]) -> str:
    """Right-aligned text table, one space-padded column per field."""
    cells = [[str(h) for h in header]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = []
    for index, row in enumerate(cells):
        lines.append("  ".join(cell.rjust(width) for cell, width in zip(row, widths)).rstrip())
        if index == 0:
            lines.append("  ".join('-' * width for width in widths))
    return "\n".join(lines) + "\n"


def format_rows(header: Sequence[str], rows: List[Sequence[Any]], fmt: str = 'csv') -> str:
    if fmt == 'table':
        return format_table(header, rows)
    if fmt == 'csv':
        return format_csv(header, rows)
    raise ValueError(f"Unknown output format {fmt!r}")


def write_text(path: Union[str, Path], text: str) -> Path:
    """Write UTF-8 text with LF line endings on every platform."""
    path = Path(path)
    with open(path, 'w', encoding='utf-8', newline='\n') as handle:
        handle.write(text)
    return path
