"""32-bit literal word codec used on the register interface

Layout: bits [31:8] reserved (zero), bits [7:1] local variable id, bit [0]
flag. For clause loads the flag means "negated"; for decisions and reported
implications it is the assigned value. Word 0 is the universal sentinel
(clause terminator, drained implication queue).
"""

from src.cnf.formula import Literal, var_of

MAX_WORD_VAR = 0x7F
_RESERVED_MASK = 0xFFFFFF00


def _check_var(var: int) -> None:
    if not 1 <= var <= MAX_WORD_VAR:
        raise ValueError(f"Local variable {var} does not fit a literal word (1..{MAX_WORD_VAR})")


def _split(word: int):
    if word & _RESERVED_MASK:
        raise ValueError(f"Literal word 0x{word:08x} has reserved bits set")
    var = (word >> 1) & MAX_WORD_VAR
    _check_var(var)
    return var, word & 1


def encode_load_word(literal: Literal) -> int:
    var = var_of(literal)
    _check_var(var)
    return (var << 1) | (1 if literal < 0 else 0)


def decode_load_word(word: int) -> Literal:
    var, negated = _split(word)
    return -var if negated else var


def encode_value_word(literal: Literal) -> int:
    """Encode a decision/implication: bit 0 is the value given to the variable."""
    var = var_of(literal)
    _check_var(var)
    return (var << 1) | (1 if literal > 0 else 0)


def decode_value_word(word: int) -> Literal:
    var, value = _split(word)
    return var if value else -var
