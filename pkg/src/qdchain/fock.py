"""Fock-layer bases: occupation vectors with a fixed total excitation count.

The hopping Hamiltonian conserves the total excitation number, so the
chain dynamics is block-diagonal over layers and each layer gets its own
independent basis.  States are kept in decreasing lexicographic order so
that the sender's encoded state (m, 0, ..., 0) sits at index 0 and the
target state (0, ..., 0, m) at the last index.

Bases are immutable after construction; concurrent reads are safe.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

Occupation = tuple[int, ...]


@dataclass(frozen=True)
class FockLayerBasis:
    """Ordered basis of occupation vectors (m_1, ..., m_sites) with sum = layer.

    ``cap`` bounds every per-site occupation (d - 1 for root-of-unity
    deformations); ``None`` means unbounded.  An empty basis is a valid
    result (the layer is unreachable under the cap) and signals that
    callers must reject states encoded in this layer.
    """

    sites: int
    layer: int
    cap: int | None
    states: tuple[Occupation, ...]
    index: dict[Occupation, int] = field(repr=False)

    def __len__(self) -> int:
        return len(self.states)

    def index_of(self, v: Occupation) -> int | None:
        """Position of ``v`` in the canonical order, or None if outside the basis."""
        v = tuple(v)
        if len(v) != self.sites:
            raise ValueError(f"occupation vector has {len(v)} entries, basis has {self.sites} sites")
        return self.index.get(v)


def build_layer(sites: int, layer: int, cap: int | None = None) -> FockLayerBasis:
    """Enumerate the complete layer basis in decreasing lexicographic order.

    Without a cap the basis size is the stars-and-bars count
    C(layer + sites - 1, layer).
    """
    if sites < 2:
        raise ValueError(f"need at least 2 sites, got {sites}")
    if layer < 0:
        raise ValueError(f"layer must be >= 0, got {layer}")
    if cap is not None and cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")

    states: list[Occupation] = []

    def fill(prefix: Occupation, remaining: int, slots: int) -> None:
        if slots == 1:
            if cap is None or remaining <= cap:
                states.append(prefix + (remaining,))
            return
        top = remaining if cap is None else min(remaining, cap)
        for k in range(top, -1, -1):
            fill(prefix + (k,), remaining - k, slots - 1)

    fill((), layer, sites)
    if cap is None:
        assert len(states) == comb(layer + sites - 1, layer)
    return FockLayerBasis(
        sites=sites,
        layer=layer,
        cap=cap,
        states=tuple(states),
        index={v: i for i, v in enumerate(states)},
    )
