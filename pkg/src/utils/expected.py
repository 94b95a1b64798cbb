# src/utils/expected.py
import csv
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Union

from core.exceptions import WienerError

DEFAULT_FIXTURE = Path(__file__).resolve().parent.parent / 'data' / 'expected_tables.csv'


@dataclass(frozen=True)
class ExpectedRow:
    """Published values for one graph: order, Wiener index, m and R_m."""
    source: str
    selector: str
    order: int
    wiener: int
    m: int
    ratio: Fraction
    ratio_display: str


def load_expected(path: Optional[Union[str, Path]] = None) -> List[ExpectedRow]:
    """
    Read the expected-values fixture.

    Raises:
        FileNotFoundError: if the fixture is missing
        WienerError: on a malformed row
    """
    path = Path(path) if path else DEFAULT_FIXTURE
    if not path.exists():
        raise FileNotFoundError(f"Expected-values fixture not found: {path}")
    rows = []
    with open(path, 'r', encoding='utf-8', newline='') as handle:
        for number, record in enumerate(csv.DictReader(handle), start=2):
            try:
                rows.append(ExpectedRow(
                    source=record['source'],
                    selector=record['selector'],
                    order=int(record['order']),
                    wiener=int(record['wiener']),
                    m=int(record['m']),
                    ratio=Fraction(int(record['ratio_num']), int(record['ratio_den'])),
                    ratio_display=record['ratio_display'],
                ))
            except (KeyError, TypeError, ValueError) as e:
                raise WienerError(f"{path}:{number}: malformed fixture row ({e})")
    return rows


def expected_by_selector(rows: List[ExpectedRow]) -> Dict[str, ExpectedRow]:
    return {row.selector: row for row in rows}
