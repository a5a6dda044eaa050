"""Type algebra shared by the checker, the VC generator and the encoders.

Code types are the C-side types (bounded machine integers and char
pointers); logic types add the unbounded mathematical integer and the
propositional type of predicates.  Two internal kinds, `heap` and `alloc`,
only show up as binder types in generated axioms and havoc quantifiers.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Type:
    kind: str  # char | int | size_t | integer | boolean | ptr | void | heap | alloc

    def __str__(self) -> str:
        return {"ptr": "char *", "size_t": "size_t"}.get(self.kind, self.kind)

    @property
    def is_code(self) -> bool:
        return self.kind in ("char", "int", "size_t", "ptr", "void")

    @property
    def is_int(self) -> bool:
        return self.kind in ("char", "int", "size_t", "integer")

    @property
    def is_bounded_int(self) -> bool:
        return self.kind in ("char", "int", "size_t")

    def bounds(self) -> tuple[int, int]:
        """Inclusive value range of a bounded machine-integer type."""
        return _BOUNDS[self.kind]


CHAR = Type("char")
INT = Type("int")
SIZE_T = Type("size_t")
INTEGER = Type("integer")
BOOLEAN = Type("boolean")
CHAR_PTR = Type("ptr")
VOID = Type("void")
HEAP = Type("heap")
ALLOC = Type("alloc")

_BOUNDS = {
    "char": (-128, 127),
    "int": (-(2**31), 2**31 - 1),
    "size_t": (0, 2**64 - 1),
}

# Name -> type for the surface syntax; `integer` is logic-only, the rest are
# code types usable in both worlds.
NAMED_TYPES = {
    "char": CHAR,
    "int": INT,
    "size_t": SIZE_T,
    "integer": INTEGER,
    "void": VOID,
}
