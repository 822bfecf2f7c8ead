"""Core domain types: symbol alphabets, selection modes, and selections."""

import enum
import string
from dataclasses import dataclass

from .errors import InvalidSelection, PermutationLengthMismatch


class Mode(enum.Enum):
    """The four selection families."""

    LIST = "list"
    ARRANGEMENT = "arrangement"
    COMBINATION = "combination"
    PERMUTATION = "permutation"

    def admits(self, indices: tuple[int, ...]) -> bool:
        """True when an index tuple is a canonical member of this family.

        Lists admit everything, arrangements and permutations need pairwise
        distinct indices, combinations need strictly increasing ones.  The
        extra permutation constraint (length equal to alphabet size) involves
        the alphabet, so it is enforced where both are in hand.
        """
        if self is Mode.LIST:
            return True
        if self is Mode.COMBINATION:
            return all(a < b for a, b in zip(indices, indices[1:]))
        return len(set(indices)) == len(indices)


class Alphabet:
    """An ordered sequence of distinct symbols.

    Ordering is by position only; the spelling of a symbol never matters.
    """

    __slots__ = ("symbols",)

    def __init__(self, symbols):
        self.symbols = tuple(str(s) for s in symbols)
        if any(not s for s in self.symbols):
            raise ValueError("alphabet symbols must be non-empty")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("alphabet symbols must be distinct")

    @classmethod
    def default(cls, n: int) -> "Alphabet":
        """a, b, c, ... for n up to 26; synthetic x0, x1, ... beyond that."""
        if n < 0:
            raise ValueError("alphabet size must be nonnegative")
        if n <= 26:
            return cls(string.ascii_lowercase[:n])
        return cls(f"x{i}" for i in range(n))

    @property
    def n(self) -> int:
        return len(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __getitem__(self, i: int) -> str:
        return self.symbols[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __repr__(self) -> str:
        return f"Alphabet({list(self.symbols)!r})"

    def word(self, indices) -> str:
        """Concatenated symbol text for an index sequence, e.g. (0, 1) -> 'ab'."""
        return "".join(self.symbols[i] for i in indices)

    def parse_word(self, text: str) -> tuple[int, ...]:
        """Inverse of word(): turn selection text back into alphabet indices.

        Accepts comma-separated symbols always, and plain concatenation when
        every symbol is a single character.  Empty text is the empty selection.
        """
        if text == "":
            return ()
        if "," in text:
            parts = text.split(",")
        elif all(len(s) == 1 for s in self.symbols):
            parts = list(text)
        else:
            parts = [text]
        positions = {s: i for i, s in enumerate(self.symbols)}
        indices = []
        for part in parts:
            if part not in positions:
                raise InvalidSelection(
                    f"invalid selection: {part!r} is not an alphabet symbol"
                    " (separate multi-character symbols with commas)"
                )
            indices.append(positions[part])
        return tuple(indices)


@dataclass(frozen=True, order=True)
class Selection:
    """One member of a family: a tuple of alphabet indices plus its mode.

    Comparison is lexicographic on the index tuple, which within a single
    family is exactly the enumeration order.
    """

    indices: tuple[int, ...]
    mode: Mode

    @property
    def p(self) -> int:
        return len(self.indices)

    def word(self, alphabet: Alphabet) -> str:
        return alphabet.word(self.indices)


def check_selection(selection: Selection, alphabet: Alphabet) -> None:
    """Raise unless the selection satisfies its mode's invariants over the alphabet."""
    n = len(alphabet)
    if selection.mode is Mode.PERMUTATION and selection.p != n:
        raise PermutationLengthMismatch(
            f"permutation over {n} symbols must have length {n},"
            f" got {selection.p}"
        )
    for i in selection.indices:
        if not 0 <= i < n:
            raise InvalidSelection(
                f"invalid selection: index {i} outside the alphabet range 0..{n - 1}"
            )
    if not selection.mode.admits(selection.indices):
        constraint = (
            "strictly increasing"
            if selection.mode is Mode.COMBINATION
            else "pairwise distinct"
        )
        raise InvalidSelection(
            f"invalid selection: {selection.mode.value} indices must be {constraint}"
        )
