"""
Exact matrix rank over the rationals and over prime fields GF(p).

Matrices are numpy arrays: Fraction objects for the rationals, int64
residues for GF(p). Columns are the vectors of a family.
"""

from fractions import Fraction
from typing import Optional, Sequence

import numpy as np
from sympy import isprime

from config import GF_PRIME_LIMIT
from models.errors import InvalidFieldError, InvalidInstanceError


def parse_field(field: str) -> Optional[int]:
    """
    None for the rationals, the prime p for GF(p).

    Examples:
        parse_field("q") -> None
        parse_field("gf:7") -> 7
    """
    if field == "q":
        return None
    prefix, _, digits = field.partition(":")
    if prefix != "gf" or not digits.isdigit():
        raise InvalidFieldError(field=field)
    p = int(digits)
    if p >= GF_PRIME_LIMIT or not isprime(p):
        raise InvalidFieldError(field=field)
    return p


def _residue(x: Fraction, p: int) -> int:
    if x.denominator % p == 0:
        raise InvalidInstanceError(kind="vector family", reason=f"denominator {x.denominator} vanishes mod {p}")
    return x.numerator * pow(x.denominator, -1, p) % p


def rank_rational(columns: Sequence[Sequence[Fraction]]) -> int:
    """Rank of the matrix with the given columns, by Fraction elimination"""
    if not columns or not columns[0]:
        return 0
    matrix = np.array([[Fraction(x) for x in column] for column in columns], dtype=object).T.copy()
    rows, cols = matrix.shape
    rank = 0
    for c in range(cols):
        pivot = next((r for r in range(rank, rows) if matrix[r, c] != 0), None)
        if pivot is None:
            continue
        if pivot != rank:
            matrix[[rank, pivot]] = matrix[[pivot, rank]]
        matrix[rank] = matrix[rank] / matrix[rank, c]
        for r in range(rank + 1, rows):
            if matrix[r, c] != 0:
                matrix[r] = matrix[r] - matrix[r, c] * matrix[rank]
        rank += 1
        if rank == rows:
            break
    return rank


def rank_mod_p(columns: Sequence[Sequence[Fraction]], p: int) -> int:
    """Rank over GF(p); entries are reduced mod p first"""
    if not columns or not columns[0]:
        return 0
    matrix = np.array([[_residue(Fraction(x), p) for x in column] for column in columns], dtype=np.int64).T.copy()
    rows, cols = matrix.shape
    rank = 0
    for c in range(cols):
        nonzero = np.nonzero(matrix[rank:, c])[0]
        if nonzero.size == 0:
            continue
        pivot = rank + int(nonzero[0])
        if pivot != rank:
            matrix[[rank, pivot]] = matrix[[pivot, rank]]
        inverse = pow(int(matrix[rank, c]), -1, p)
        matrix[rank] = matrix[rank] * inverse % p
        for r in range(rank + 1, rows):
            factor = int(matrix[r, c])
            if factor:
                matrix[r] = (matrix[r] - factor * matrix[rank]) % p
        rank += 1
        if rank == rows:
            break
    return rank


def matrix_rank(columns: Sequence[Sequence[Fraction]], prime: Optional[int] = None) -> int:
    """Dispatch on the field: None for the rationals"""
    if prime is None:
        return rank_rational(columns)
    return rank_mod_p(columns, prime)
