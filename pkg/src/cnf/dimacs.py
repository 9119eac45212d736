"""DIMACS CNF reader and writer

Reads ``c`` comments, one ``p cnf <vars> <clauses>`` header and
zero-terminated clauses (which may span lines or share a line). The SATLIB
``%`` end marker stops parsing. Declared clause counts are advisory: a
mismatch is logged as a warning and the parsed content wins.
"""

import io
import logging
from typing import Iterable, List, Optional, TextIO, Union

from src.cnf.formula import Formula, var_of

logger = logging.getLogger(__name__)


class DimacsParseError(ValueError):
    """Raised for malformed DIMACS input."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


def _parse_header(tokens: List[str], line_number: int):
    if len(tokens) != 4 or tokens[1] != 'cnf':
        raise DimacsParseError(f"malformed header {' '.join(tokens)!r}", line_number)
    try:
        num_vars, num_clauses = int(tokens[2]), int(tokens[3])
    except ValueError:
        raise DimacsParseError(f"non-integer header counts {' '.join(tokens)!r}", line_number)
    if num_vars < 0 or num_clauses < 0:
        raise DimacsParseError("header counts must be non-negative", line_number)
    return num_vars, num_clauses


def parse_dimacs(text: Union[str, TextIO, Iterable[str]]) -> Formula:
    """Parse DIMACS CNF text into a preprocessed Formula.

    Args:
        text: The whole file as a string, or any iterable of lines

    Returns:
        Formula with clauses in file order, duplicate literals removed,
        tautologies dropped and empty clauses folded into ``trivially_unsat``

    Raises:
        DimacsParseError: Missing/malformed header, bad tokens, or a variable
            index above the declared variable count
    """
    lines = io.StringIO(text) if isinstance(text, str) else text

    header = None
    raw_clauses: List[List[int]] = []
    current: List[int] = []
    last_line = 0

    for line_number, line in enumerate(lines, start=1):
        last_line = line_number
        stripped = line.strip()
        if not stripped or stripped.startswith('c'):
            continue
        if stripped.startswith('%'):
            break
        tokens = stripped.split()
        if tokens[0] == 'p':
            if header is not None:
                raise DimacsParseError("duplicate header", line_number)
            header = _parse_header(tokens, line_number)
            continue
        if header is None:
            raise DimacsParseError("clause data before 'p cnf' header", line_number)

        num_vars = header[0]
        for token in tokens:
            try:
                lit = int(token)
            except ValueError:
                raise DimacsParseError(f"invalid literal {token!r}", line_number)
            if lit == 0:
                raw_clauses.append(current)
                current = []
                continue
            if var_of(lit) > num_vars:
                raise DimacsParseError(
                    f"variable {var_of(lit)} exceeds declared count {num_vars}", line_number
                )
            current.append(lit)

    if header is None:
        raise DimacsParseError("missing 'p cnf' header")

    if current:
        logger.warning(f"Unterminated final clause at line {last_line}; accepting it")
        raw_clauses.append(current)

    num_vars, declared_clauses = header
    if declared_clauses != len(raw_clauses):
        logger.warning(
            f"Header declares {declared_clauses} clauses but {len(raw_clauses)} were found"
        )

    formula = Formula.from_clauses(raw_clauses, num_vars=num_vars)
    for note in formula.notes:
        logger.warning(f"Preprocessing: {note}")
    logger.debug(
        f"Parsed DIMACS: {formula.num_vars} vars, {formula.num_clauses} clauses"
        f"{' (trivially UNSAT)' if formula.trivially_unsat else ''}"
    )
    return formula


def write_dimacs(formula: Formula, comments: Iterable[str] = ()) -> str:
    """Serialize a formula to DIMACS text.

    A trivially-UNSAT formula gets a bare ``0`` line (the empty clause) so that
    parsing the output restores the flag.
    """
    out = [f"c {comment}\n" for comment in comments]
    num_clauses = formula.num_clauses + (1 if formula.trivially_unsat else 0)
    out.append(f"p cnf {formula.num_vars} {num_clauses}\n")
    for clause in formula.clauses:
        out.append(' '.join(str(lit) for lit in clause) + ' 0\n')
    if formula.trivially_unsat:
        out.append('0\n')
    return ''.join(out)


def read_dimacs_file(path: str) -> Formula:
    """Read and parse a DIMACS file from disk."""
    with open(path, 'r', encoding='utf-8') as f:
        return parse_dimacs(f)


def write_dimacs_file(formula: Formula, path: str, comments: Iterable[str] = ()) -> None:
    with open(path, 'w', encoding='utf-8') as f:
        f.write(write_dimacs(formula, comments))
