from __future__ import annotations

from typing import Iterator, Sequence

from affgrass.grassmann.params import CodeParams, code_params

VERIFY_FIELDS: tuple[int, ...] = (2, 3, 4, 5, 7, 8, 9)
VERIFY_MAX_LENGTH = 2 ** 12


def parameter_grid(
    fields: Sequence[int] = VERIFY_FIELDS,
    max_length: int = VERIFY_MAX_LENGTH,
    max_side: int = 12,
) -> Iterator[CodeParams]:
    """Every (q, ℓ, ℓ', h) with 1 ≤ h ≤ ℓ ≤ ℓ' and q^δ ≤ max_length."""
    for q in fields:
        for l in range(1, max_side + 1):
            if q ** (l * l) > max_length:
                break
            for lp in range(l, max_side + 1):
                if q ** (l * lp) > max_length:
                    break
                for h in range(1, l + 1):
                    yield code_params(q, l, lp, h)


def acceptance_params() -> list[CodeParams]:
    return [code_params(*p) for p in ((2, 1, 2, 1), (3, 1, 2, 1), (2, 1, 3, 1), (2, 2, 2, 1), (2, 2, 3, 2))]
