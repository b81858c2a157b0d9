"""Partitions, hooks, beta-sets, and the abacus for cores and quotients.

Partitions are kept in one canonical form: a weakly decreasing tuple of
positive parts.  The ascending block notation used to write down candidate
partitions, e.g. ``(1^7, 2)`` for ``(2,1,1,1,1,1,1,1)``, exists only at the
:class:`AscendingSpec` boundary and is normalized on conversion.

Core extraction uses the abacus model: the beta-set of a partition is laid
out on ``p`` runners, beads slide down their runner as far as gravity allows
(each slide removes one rim hook of length ``p``), and the packed
configuration is read back as a partition.  The result is independent of the
chosen beta-set length; the companion quotient uses a length divisible by
``p`` so the runner order is well defined.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator


class NonMonotoneSpec(ValueError):
    """An ascending block spec is malformed (decreasing values, bad counts)."""


class LengthTooSmall(ValueError):
    """A beta-set length smaller than the number of parts was requested."""


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integer parts."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(int(a) for a in self.parts))
        previous = None
        for a in self.parts:
            if a < 1:
                raise ValueError(f"parts must be positive, got {a}")
            if previous is not None and a > previous:
                raise ValueError(f"parts must be weakly decreasing, got {self.parts}")
            previous = a

    @cached_property
    def size(self) -> int:
        return sum(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram."""
        parts = self.parts
        if not parts:
            return self
        out = []
        rows = len(parts)
        for col in range(1, parts[0] + 1):
            while rows > 0 and parts[rows - 1] < col:
                rows -= 1
            out.append(rows)
        return _trusted(tuple(out))

    def is_self_conjugate(self) -> bool:
        return self.parts == self.conjugate().parts

    def hook_lengths(self) -> list[int]:
        """Hook length of every cell (arm + leg + 1), row-major."""
        conj = self.conjugate().parts
        hooks = []
        for i, row in enumerate(self.parts):
            for j in range(row):
                hooks.append(row - j + conj[j] - i - 1)
        return hooks

    def beta_set(self, length: int) -> tuple[int, ...]:
        """First-column hook lengths of the partition padded to ``length`` rows.

        Returns the strictly decreasing sequence ``parts[i] + length - 1 - i``
        with the partition padded by zeros.
        """
        if length < len(self.parts):
            raise LengthTooSmall(
                f"beta-set length {length} < {len(self.parts)} parts"
            )
        padded = self.parts + (0,) * (length - len(self.parts))
        return tuple(padded[i] + (length - 1 - i) for i in range(length))

    def p_core(self, p: int, *, length: int | None = None) -> "Partition":
        """Partition left after removing every rim hook of length ``p``.

        Computed by sliding abacus beads down their runners until packed.
        Any ``length`` >= number of parts gives the same core; the default is
        the smallest multiple of ``p`` that fits.
        """
        if p < 2:
            raise ValueError(f"core requires p >= 2, got {p}")
        if length is None:
            length = -(-len(self.parts) // p) * p
        beads = self.beta_set(length)
        runners = [0] * p
        for beta in beads:
            runners[beta % p] += 1
        packed = sorted(
            (i + p * j for i, count in enumerate(runners) for j in range(count)),
            reverse=True,
        )
        parts = tuple(
            beta - (length - 1 - i) for i, beta in enumerate(packed)
        )
        return _trusted(tuple(a for a in parts if a > 0))

    def p_quotient(self, p: int) -> tuple["Partition", ...]:
        """The ``p`` runner partitions encoding the removed ``p``-hooks.

        Uses a beta-set length divisible by ``p``; the total size of the
        components is (size - core size) / p.
        """
        if p < 2:
            raise ValueError(f"quotient requires p >= 2, got {p}")
        length = -(-len(self.parts) // p) * p
        beads = self.beta_set(length)
        rows: list[list[int]] = [[] for _ in range(p)]
        for beta in beads:
            rows[beta % p].append(beta // p)
        components = []
        for runner in rows:
            runner.sort(reverse=True)
            count = len(runner)
            parts = tuple(
                row - (count - 1 - i) for i, row in enumerate(runner)
            )
            components.append(_trusted(tuple(a for a in parts if a > 0)))
        return tuple(components)

    def to_literal(self) -> str:
        """Descending literal, e.g. '[2,1,1]'; '[]' for the empty partition."""
        return "[" + ",".join(str(a) for a in self.parts) + "]"

    @classmethod
    def from_literal(cls, text: str) -> "Partition":
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"partition literal must look like [a,b,...]: {text!r}")
        inner = body[1:-1].strip()
        if not inner:
            return cls(())
        return cls(tuple(int(tok) for tok in inner.split(",")))


def _trusted(parts: tuple[int, ...]) -> Partition:
    # Fast path for internally generated sequences already in canonical form.
    obj = object.__new__(Partition)
    object.__setattr__(obj, "parts", parts)
    return obj


EMPTY = Partition(())


@dataclass(frozen=True)
class AscendingSpec:
    """A partition written as ascending (value, multiplicity) blocks.

    Mirrors the notation ``(1^k, a, b)`` with weakly increasing part values.
    A zero multiplicity is tolerated only for a leading 1-block, because the
    candidate shapes degenerate to zero ones at boundary parameters; any
    other zero or a decreasing value sequence raises :class:`NonMonotoneSpec`.
    """

    blocks: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "blocks", tuple((int(v), int(m)) for v, m in self.blocks)
        )
        if not self.blocks:
            raise NonMonotoneSpec("spec needs at least one block")
        previous = None
        for index, (value, mult) in enumerate(self.blocks):
            if value < 1:
                raise NonMonotoneSpec(f"block value must be >= 1, got {value}")
            if mult < 0 or (mult == 0 and not (index == 0 and value == 1)):
                raise NonMonotoneSpec(
                    f"multiplicity {mult} invalid for block {value} at index {index}"
                )
            if previous is not None and value < previous:
                raise NonMonotoneSpec(
                    f"block values must be weakly increasing, got {self.blocks}"
                )
            previous = value

    @property
    def total(self) -> int:
        return sum(v * m for v, m in self.blocks)

    def to_partition(self) -> Partition:
        expanded: list[int] = []
        for value, mult in self.blocks:
            expanded.extend([value] * mult)
        expanded.reverse()
        return Partition(tuple(expanded))

    def __str__(self) -> str:
        rendered = []
        for value, mult in self.blocks:
            rendered.append(f"{value}^{mult}" if mult != 1 else f"{value}")
        return "(" + ",".join(rendered) + ")"

    @classmethod
    def parse(cls, text: str) -> "AscendingSpec":
        body = text.strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise ValueError(f"ascending spec must look like (1^k,a,b): {text!r}")
        inner = body[1:-1].strip()
        if not inner:
            raise NonMonotoneSpec("spec needs at least one block")
        blocks = []
        for token in inner.split(","):
            token = token.strip()
            if "^" in token:
                value_text, mult_text = token.split("^", 1)
                blocks.append((int(value_text), int(mult_text)))
            else:
                blocks.append((int(token), 1))
        return cls(tuple(blocks))


def from_ascending_spec(spec: AscendingSpec) -> Partition:
    """Canonical descending partition with the spec's multiset of parts."""
    return spec.to_partition()


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of n, in lexicographically decreasing part order."""
    for parts in _partition_tuples(n):
        yield _trusted(parts)


def _partition_tuples(n: int) -> Iterator[tuple[int, ...]]:
    if n < 0:
        raise ValueError(f"cannot partition {n}")
    if n == 0:
        yield ()
        return
    current = (n,)
    yield current
    while True:
        i = len(current) - 1
        while i >= 0 and current[i] == 1:
            i -= 1
        if i < 0:
            return
        freed = len(current) - i
        current = current[:i] + (current[i] - 1,)
        while freed > 0:
            chunk = min(current[-1], freed)
            current = current + (chunk,)
            freed -= chunk
        yield current


def partition_count(n: int) -> int:
    """Number of partitions of n by the pentagonal-number recurrence."""
    return partition_counts(n)[n]


def partition_counts(limit: int) -> list[int]:
    """p(0..limit) via the pentagonal-number recurrence."""
    counts = [1] + [0] * limit
    for m in range(1, limit + 1):
        total = 0
        k = 1
        while True:
            pent1 = k * (3 * k - 1) // 2
            pent2 = k * (3 * k + 1) // 2
            if pent1 > m:
                break
            sign = -1 if k % 2 == 0 else 1
            total += sign * counts[m - pent1]
            if pent2 <= m:
                total += sign * counts[m - pent2]
            k += 1
        counts[m] = total
    return counts


def parse_partition_text(text: str) -> Partition:
    """Accepts '[3,1]' descending literals or '(1^2,3)' ascending specs."""
    stripped = text.strip()
    if stripped.startswith("("):
        return AscendingSpec.parse(stripped).to_partition()
    return Partition.from_literal(stripped)


def random_partition(rng, n: int) -> Partition:
    """A partition of n sampled by cutting random chunks; test utility."""
    remaining = n
    parts = []
    while remaining > 0:
        piece = rng.randint(1, remaining)
        parts.append(piece)
        remaining -= piece
    parts.sort(reverse=True)
    return Partition(tuple(parts))
