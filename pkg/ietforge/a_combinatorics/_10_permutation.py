# SPDX-FileCopyrightText: (c) 2021 Artёm IG <github.com/rtmigo>
# SPDX-License-Identifier: MIT


from typing import Iterator, List, Sequence, Tuple

from ietforge._common import SpecSemanticError
from ietforge.a_utils.scanner import TokenStream


class Permutation:
    """Bijection of {1..m} in one-line notation: `images[i-1] = pi(i)`.

    Indices are 1-based everywhere in the public interface.
    """

    __slots__ = ["images"]

    def __init__(self, images: Sequence[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise SpecSemanticError(
                f"{list(images)} is not a bijection of 1..{len(images)}")
        self.images: Tuple[int, ...] = images

    @classmethod
    def identity(cls, m: int) -> 'Permutation':
        return cls(range(1, m + 1))

    @classmethod
    def reversal(cls, m: int) -> 'Permutation':
        return cls(range(m, 0, -1))

    @classmethod
    def shift_cycle(cls, m: int) -> 'Permutation':
        """(2 3 ... m 1)"""
        return cls([i % m + 1 for i in range(1, m + 1)])

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __len__(self) -> int:
        return len(self.images)

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def inverse(self) -> 'Permutation':
        result = [0] * self.size
        for i, image in enumerate(self.images, start=1):
            result[image - 1] = i
        return Permutation(result)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __str__(self) -> str:
        return "[" + ",".join(str(i) for i in self.images) + "]"

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"


def read_permutation(stream: TokenStream) -> Permutation:
    opening = stream.expect("[", "'['")
    images: List[int] = []
    if not stream.peek("]"):
        while True:
            tok = stream.expect("NUMBER", "an index")
            if not tok.text.isdigit():
                stream.fail("an integer index")
            images.append(int(tok.text))
            if not stream.accept(","):
                break
    stream.expect("]", "']'")
    if not images:
        raise SpecSemanticError(
            f"{opening.line}:{opening.col}: empty permutation")
    return Permutation(images)


def parse_permutation(text: str) -> Permutation:
    """Parses the one-line image notation `[3,2,4,1]`."""
    stream = TokenStream(text)
    result = read_permutation(stream)
    stream.expect("END", "end of the permutation")
    return result


def is_irreducible(pi: Permutation) -> bool:
    """True when no prefix {1..k} with k < m is mapped onto itself."""
    highest = 0
    for k in range(1, pi.size):
        highest = max(highest, pi(k))
        if highest == k:
            return False
    return True


def cycle_decomposition(sigma: Permutation) -> List[Tuple[int, ...]]:
    """Disjoint cycles covering {1..n}, fixed points included. Every cycle
    starts with its minimal element; cycles are sorted by that element."""
    seen = [False] * (sigma.size + 1)
    cycles: List[Tuple[int, ...]] = []
    for start in range(1, sigma.size + 1):
        if seen[start]:
            continue
        cycle = []
        i = start
        while not seen[i]:
            seen[i] = True
            cycle.append(i)
            i = sigma(i)
        cycles.append(tuple(cycle))
    return cycles


def is_n_cycle(sigma: Permutation) -> bool:
    return len(cycle_decomposition(sigma)) == 1


def cycle_length_of(sigma: Permutation, i: int) -> int:
    for cycle in cycle_decomposition(sigma):
        if i in cycle:
            return len(cycle)
    raise ValueError(i)
