"""Shipped algebra fixtures.

``order4`` and ``order8`` are the Boolean Wajsberg algebras of orders 4 and 8,
``order9`` the product of two 3-element chains; ``product:N`` builds
``{0,1}^N`` on demand.
"""

from __future__ import annotations

from importlib import resources

from ..algebra import WajsbergAlgebra, product_wajsberg
from ..errors import FuzzIdealError
from ..textio import parse_algebra

NAMES = ("order4", "order8", "order9", "order9_printed")


def fixture_text(name: str) -> str:
    if name not in NAMES:
        raise FuzzIdealError(f"unknown fixture {name!r}; known: {', '.join(NAMES)}")
    return resources.files(__package__).joinpath(f"{name}.wal").read_text(encoding="utf-8")


def load_fixture(name: str) -> WajsbergAlgebra:
    if name.startswith("product:"):
        try:
            n = int(name.partition(":")[2])
        except ValueError:
            raise FuzzIdealError(f"bad product fixture {name!r}") from None
        return product_wajsberg(n)
    return parse_algebra(fixture_text(name))
