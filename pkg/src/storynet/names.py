"""Human-curated name registry: names, their variant sets and char/place types.

Variants are single tokens matched case-sensitively. Variant strings are
globally disjoint across the registry so every token resolves to at most one
name; multi-word names ("Hagen von Tronege") are modelled as separate names
whose co-occurrence produces a strong edge.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field

__all__ = ["NameType", "NameEntry", "NameRegistry", "RegistryError"]


class NameType(enum.Enum):
    CHARACTER = "char"
    PLACE = "place"


class RegistryError(Exception):
    """Registry operation rejected.

    `reason` is "conflict" (variant already owned; `name_id` cites the owner)
    or "not-found" (unknown name id).
    """

    def __init__(self, reason: str, message: str, name_id: str | None = None):
        super().__init__(message)
        self.reason = reason
        self.name_id = name_id


@dataclass
class NameEntry:
    name_id: str
    ntype: NameType
    variants: list[str]

    @property
    def main_variant(self) -> str:
        return self.variants[0]


_ID_PATTERN = re.compile(r"^n(\d+)$")


@dataclass
class NameRegistry:
    entries: list[NameEntry] = field(default_factory=list)
    _by_id: dict[str, NameEntry] = field(default_factory=dict, compare=False, repr=False)
    _owner: dict[str, str] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        self._reindex()

    def _reindex(self) -> None:
        by_id: dict[str, NameEntry] = {}
        owner: dict[str, str] = {}
        for entry in self.entries:
            if not entry.variants:
                raise RegistryError("invariant", f"name {entry.name_id!r} has no variants")
            if entry.name_id in by_id:
                raise RegistryError("invariant", f"duplicate name id {entry.name_id!r}")
            by_id[entry.name_id] = entry
            for variant in entry.variants:
                if not variant:
                    raise RegistryError("invariant", f"name {entry.name_id!r} has an empty variant")
                if variant in owner:
                    raise RegistryError(
                        "invariant",
                        f"variant {variant!r} appears in both {owner[variant]!r} and {entry.name_id!r}",
                        name_id=owner[variant],
                    )
                owner[variant] = entry.name_id
        self._by_id = by_id
        self._owner = owner

    def __len__(self) -> int:
        return len(self.entries)

    def entry(self, name_id: str) -> NameEntry:
        try:
            return self._by_id[name_id]
        except KeyError:
            raise RegistryError("not-found", f"unknown name id {name_id!r}") from None

    def owner_of(self, variant: str) -> str | None:
        """Name id owning `variant`, or None if unassigned."""
        return self._owner.get(variant)

    def _next_id(self) -> str:
        highest = 0
        for name_id in self._by_id:
            match = _ID_PATTERN.match(name_id)
            if match:
                highest = max(highest, int(match.group(1)))
        return f"n{highest + 1}"

    def _check_free(self, variant: str) -> None:
        if not variant:
            raise RegistryError("conflict", "variant must be non-empty")
        owner = self._owner.get(variant)
        if owner is not None:
            raise RegistryError(
                "conflict",
                f"variant {variant!r} already belongs to {self._by_id[owner].main_variant!r} ({owner})",
                name_id=owner,
            )

    def add_name(self, main_variant: str, ntype: NameType) -> str:
        """Create a new name whose variant set starts as [main_variant].

        Returns the new name id. Raises RegistryError("conflict") if the
        variant string is already owned by any name.
        """
        self._check_free(main_variant)
        name_id = self._next_id()
        entry = NameEntry(name_id, ntype, [main_variant])
        self.entries.append(entry)
        self._by_id[name_id] = entry
        self._owner[main_variant] = name_id
        return name_id

    def add_variant(self, name_id: str, variant: str) -> None:
        """Append a variant to an existing name; the main variant is unchanged."""
        entry = self.entry(name_id)
        self._check_free(variant)
        entry.variants.append(variant)
        self._owner[variant] = name_id

    def remove_name(self, name_id: str) -> None:
        """Remove a name and free all of its variants."""
        entry = self.entry(name_id)
        self.entries.remove(entry)
        del self._by_id[name_id]
        for variant in entry.variants:
            del self._owner[variant]
