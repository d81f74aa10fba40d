from fractions import Fraction
from typing import Iterator, List, Tuple

from matchgames.errors import InputError


def content_lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    """Yield ``(line_number, tokens)`` for every non-blank line, with ``#`` comments stripped."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise InputError(f"line {lineno}: expected an integer, got {token!r}")


def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_rational(token: str, lineno: int = 0) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"line {lineno}: expected a rational num/den, got {token!r}")


def short_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
