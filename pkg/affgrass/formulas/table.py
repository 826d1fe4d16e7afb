"""Initial dual weights of affine Grassmann codes in the large-ℓ' regime."""

from __future__ import annotations

from typing import Literal, Sequence

import pandas as pd

from affgrass.formulas.duality import dual_initial_value, recursive_initial_values

TABLE_Q: tuple[int, ...] = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17)
TABLE_ROWS = 27

# d⊥_s for s = 1..27 (rows) and q in TABLE_Q (columns), as published
PUBLISHED_TABLE: tuple[tuple[int, ...], ...] = (
    (4, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3),
    (6, 5, 4, 4, 4, 4, 4, 4, 4, 4, 4),
    (7, 6, 6, 5, 5, 5, 5, 5, 5, 5, 5),
    (8, 7, 7, 7, 6, 6, 6, 6, 6, 6, 6),
    (10, 8, 8, 8, 7, 7, 7, 7, 7, 7, 7),
    (11, 9, 9, 9, 9, 8, 8, 8, 8, 8, 8),
    (12, 11, 10, 10, 10, 10, 9, 9, 9, 9, 9),
    (13, 12, 11, 11, 11, 11, 11, 10, 10, 10, 10),
    (14, 13, 12, 12, 12, 12, 12, 11, 11, 11, 11),
    (15, 14, 13, 13, 13, 13, 13, 13, 12, 12, 12),
    (16, 15, 14, 14, 14, 14, 14, 14, 13, 13, 13),
    (18, 16, 15, 15, 15, 15, 15, 15, 15, 14, 14),
    (19, 17, 16, 16, 16, 16, 16, 16, 16, 15, 15),
    (20, 18, 18, 17, 17, 17, 17, 17, 17, 16, 16),
    (21, 19, 19, 18, 18, 18, 18, 18, 18, 18, 17),
    (22, 20, 20, 19, 19, 19, 19, 19, 19, 19, 19),
    (23, 21, 21, 20, 20, 20, 20, 20, 20, 20, 20),
    (24, 22, 22, 21, 21, 21, 21, 21, 21, 21, 21),
    (25, 23, 23, 22, 22, 22, 22, 22, 22, 22, 22),
    (26, 24, 24, 23, 23, 23, 23, 23, 23, 23, 23),
    (27, 25, 25, 24, 24, 24, 24, 24, 24, 24, 24),
    (28, 26, 26, 25, 25, 25, 25, 25, 25, 25, 25),
    (29, 27, 27, 27, 26, 26, 26, 26, 26, 26, 26),
    (30, 29, 28, 28, 27, 27, 27, 27, 27, 27, 27),
    (31, 30, 29, 29, 28, 28, 28, 28, 28, 28, 28),
    (32, 31, 30, 30, 29, 29, 29, 29, 29, 29, 29),
    (34, 32, 31, 31, 30, 30, 30, 30, 30, 30, 30),
)


def table1(
    q_list: Sequence[int] = TABLE_Q,
    s_max: int = TABLE_ROWS,
    method: Literal["formula", "recursive"] = "formula",
) -> pd.DataFrame:
    """Rows s = 1..s_max, one column per q."""
    columns = {}
    for q in q_list:
        if method == "recursive":
            columns[q] = recursive_initial_values(q, s_max)
        else:
            columns[q] = [dual_initial_value(q, s) for s in range(1, s_max + 1)]
    frame = pd.DataFrame(columns, index=pd.RangeIndex(1, s_max + 1, name="s"))
    frame.columns.name = "q"
    return frame


def published_table() -> pd.DataFrame:
    frame = pd.DataFrame(
        list(PUBLISHED_TABLE),
        columns=list(TABLE_Q),
        index=pd.RangeIndex(1, TABLE_ROWS + 1, name="s"),
    )
    frame.columns.name = "q"
    return frame


def table_mismatches(frame: pd.DataFrame) -> list[tuple[int, int, int, int]]:
    """(s, q, computed, published) for every differing cell both tables hold."""
    reference = published_table()
    out = []
    for q in frame.columns:
        if q not in reference.columns:
            continue
        for s in frame.index:
            if s not in reference.index:
                continue
            computed, published = int(frame.at[s, q]), int(reference.at[s, q])
            if computed != published:
                out.append((int(s), int(q), computed, published))
    return out


def table_csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(lineterminator="\n")
