"""Complete first returns, return words, and recurrence gaps.

Computed from a finite buffer, so later returns may be unseen; reports
carry the occurrence count and buffer length so callers can tell
"exactly two returns" from "two returns so far".
"""

from dataclasses import dataclass

from wordlab import closure
from wordlab.errors import InsufficientOccurrencesError


@dataclass(frozen=True)
class ReturnReport:
    target: bytes
    positions: tuple
    complete_returns: tuple  # sorted
    return_words: tuple  # sorted
    max_gap: object  # int, or None with < 2 occurrences
    buffer_length: int

    @property
    def occurrence_count(self) -> int:
        return len(self.positions)


def occurrence_positions(buf, v) -> list:
    v = closure._as_bytes(v)
    return closure.occurrences(v, buf.data)


def _positions_or_raise(buf, v):
    v = closure._as_bytes(v)
    positions = closure.occurrences(v, buf.data)
    if len(positions) < 2:
        raise InsufficientOccurrencesError(v, len(positions))
    return v, positions


def complete_first_returns(buf, v) -> list:
    """For consecutive occurrences i < i' of v, the factor
    data[i : i'+|v|]; deduplicated, sorted."""
    v, positions = _positions_or_raise(buf, v)
    out = {
        buf.data[i : j + len(v)] for i, j in zip(positions, positions[1:])
    }
    return sorted(out)


def return_words(buf, v) -> list:
    """Complete first returns with the trailing copy of v removed."""
    v, positions = _positions_or_raise(buf, v)
    out = {buf.data[i:j] for i, j in zip(positions, positions[1:])}
    return sorted(out)


def max_gap(buf, v) -> int:
    """Largest distance between consecutive occurrences of v; the
    window after the last occurrence is deliberately excluded."""
    _, positions = _positions_or_raise(buf, v)
    return max(j - i for i, j in zip(positions, positions[1:]))


def report(buf, v) -> ReturnReport:
    v = closure._as_bytes(v)
    positions = closure.occurrences(v, buf.data)
    if len(positions) < 2:
        return ReturnReport(
            target=v,
            positions=tuple(positions),
            complete_returns=(),
            return_words=(),
            max_gap=None,
            buffer_length=len(buf.data),
        )
    returns = sorted({buf.data[i : j + len(v)] for i, j in zip(positions, positions[1:])})
    words = sorted({buf.data[i:j] for i, j in zip(positions, positions[1:])})
    return ReturnReport(
        target=v,
        positions=tuple(positions),
        complete_returns=tuple(returns),
        return_words=tuple(words),
        max_gap=max(j - i for i, j in zip(positions, positions[1:])),
        buffer_length=len(buf.data),
    )
