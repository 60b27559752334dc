"""
Constants for the block-IP toolkit
File format headers and default values
"""


# File format headers (first line of every document)
class FileHeaders:
    MATRIX = "# blockip-matrix v1"
    INSTANCE = "# blockip-instance v1"
    VECTORS = "# blockip-vectors v1"
    BASIS = "# blockip-basis v1"
    RESULT = "# blockip-result v1"


# Infinite bound tokens in instance files
class BoundTokens:
    NEG_INF = "-inf"
    POS_INF = "+inf"


# Default Values
class Defaults:
    LOG_LEVEL = "INFO"
    # int64 headroom used by overflow-checked dense products
    INT64_SAFE_BOUND = 2**62
