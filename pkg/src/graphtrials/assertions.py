"""Assertion kinds, their parameters, and perceptual-complexity classes."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Kind(str, Enum):
    CONNECTED = "connected"
    NOT_CONNECTED = "not_connected"
    NOT_K_CONNECTED = "not_k_connected"
    K_CONNECTED_SPARSE = "k_connected_sparse"
    HAMILTONIAN_CYCLE = "hamiltonian_cycle"
    LENGTH_K_CYCLE = "length_k_cycle"
    NOT_BIPARTITE = "not_bipartite"
    K_COLORABLE = "k_colorable"
    COMPLETE = "complete"
    NOT_COMPLETE = "not_complete"
    CLIQUE = "clique"
    INDEPENDENT_SET = "independent_set"
    DOMINATING_SET = "dominating_set"
    DISTANCE_EQUALS = "distance_equals"
    DIAMETER_GREATER = "diameter_greater"
    STACK_LEQ = "stack_leq"
    QUEUE_LEQ = "queue_leq"


K_KINDS = {
    Kind.NOT_K_CONNECTED,
    Kind.K_CONNECTED_SPARSE,
    Kind.LENGTH_K_CYCLE,
    Kind.K_COLORABLE,
    Kind.CLIQUE,
    Kind.INDEPENDENT_SET,
    Kind.DOMINATING_SET,
    Kind.DISTANCE_EQUALS,
    Kind.DIAMETER_GREATER,
    Kind.STACK_LEQ,
    Kind.QUEUE_LEQ,
}

UV_KINDS = {Kind.DISTANCE_EQUALS}

# Symbolic class of observations the judge performs per assertion kind.
PERCEPTUAL_COMPLEXITY = {
    Kind.CONNECTED: "O(n)",
    Kind.NOT_CONNECTED: "O(1)",
    Kind.NOT_K_CONNECTED: "O(k)",
    Kind.K_CONNECTED_SPARSE: "O(kn)",
    Kind.HAMILTONIAN_CYCLE: "O(1)",
    Kind.LENGTH_K_CYCLE: "O(k)",
    Kind.NOT_BIPARTITE: "O(1)",
    Kind.K_COLORABLE: "O(k)",
    Kind.COMPLETE: "O(1)",
    Kind.NOT_COMPLETE: "O(1)",
    Kind.CLIQUE: "O(k)",
    Kind.INDEPENDENT_SET: "O(k)",
    Kind.DOMINATING_SET: "O(n)",
    Kind.DISTANCE_EQUALS: "O(k)",
    Kind.DIAMETER_GREATER: "O(k)",
    Kind.STACK_LEQ: "O(n+m)",
    Kind.QUEUE_LEQ: "O(n+m)",
}


@dataclass(frozen=True)
class Assertion:
    """A boolean predicate over graphs, with optional integer parameters."""

    kind: Kind
    k: int | None = None
    u: int | None = None
    v: int | None = None

    def __post_init__(self):
        if self.kind in K_KINDS:
            if self.k is None or self.k < 1:
                raise ValueError(f"{self.kind.value} requires k >= 1")
        elif self.k is not None:
            raise ValueError(f"{self.kind.value} takes no k parameter")
        if self.kind in UV_KINDS:
            if self.u is None or self.v is None or self.u < 0 or self.v < 0:
                raise ValueError(f"{self.kind.value} requires vertices u, v")
        elif self.u is not None or self.v is not None:
            raise ValueError(f"{self.kind.value} takes no u/v parameters")

    def validate_for(self, n: int):
        """Range checks that need the graph size."""
        if self.kind in UV_KINDS and (self.u >= n or self.v >= n):
            raise ValueError("assertion vertices must be < n")

    def to_json(self) -> dict:
        d = {"kind": self.kind.value}
        if self.k is not None:
            d["k"] = self.k
        if self.u is not None:
            d["u"] = self.u
            d["v"] = self.v
        return d

    @staticmethod
    def from_json(d: dict) -> "Assertion":
        return Assertion(
            Kind(d["kind"]), k=d.get("k"), u=d.get("u"), v=d.get("v")
        )

    def describe(self) -> str:
        s = self.kind.value
        if self.k is not None:
            s += f"(k={self.k})"
        if self.u is not None:
            s += f"(u={self.u}, v={self.v})"
        return s
