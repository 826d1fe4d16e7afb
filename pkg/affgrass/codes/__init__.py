from affgrass.codes.construct import build_code, dual_code, evaluation_matrix
from affgrass.codes.linalg import null_space, rank, rref, row_spaces_equal
from affgrass.codes.linear import (
    LinearCode,
    Subcode,
    codewords_of,
    encode,
    hamming_weight,
    support_weight,
)
from affgrass.codes.records import CodeRecord, from_record, load_code, store_code, to_record

__all__ = [
    "CodeRecord",
    "LinearCode",
    "Subcode",
    "build_code",
    "codewords_of",
    "dual_code",
    "encode",
    "evaluation_matrix",
    "from_record",
    "hamming_weight",
    "load_code",
    "null_space",
    "rank",
    "rref",
    "row_spaces_equal",
    "store_code",
    "support_weight",
    "to_record",
]
