"""The extremal family U(n,k;f;r,s;t,w) built on a 2-cycle, and the G1-G6 presets."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .hypergraph import Hypergraph


class FamilyError(ValueError):
    """Infeasible family parameters; ``constraint`` names the violated condition."""

    def __init__(self, message: str, constraint: str):
        super().__init__(message)
        self.constraint = constraint


class InfeasibleCase(FamilyError):
    pass


@dataclass(frozen=True)
class FamilyParams:
    k: int
    m: int
    f: int = 0
    r: int = 0
    s: int = 0
    t: int = 0
    w: int = 0

    def __post_init__(self):
        k = self.k
        checks = [
            (k >= 3, "k >= 3"),
            (self.f in (0, 1), "f <= 1"),
            (0 <= self.r <= k - 2, "r <= k-2"),
            (0 <= self.s <= k - 2, "s <= k-2"),
            (self.t >= 0, "t >= 0"),
            (0 <= self.w <= k - 2, "w <= k-2"),
            (self.m >= 2, "m >= 2"),
        ]
        for ok, name in checks:
            if not ok:
                raise FamilyError(f"family parameters {self} violate {name}", name)
        if self.p < 0:
            raise FamilyError(f"edge budget exhausted: {self.p} pendant edges left at v1", "p >= 0")

    @property
    def n(self) -> int:
        return (self.k - 1) * self.m

    @property
    def z(self) -> int:
        return self.f + self.r + self.s + self.t * (self.k - 1) + self.w + 1

    @property
    def p(self) -> int:
        """Pendant edges attached at v1 in the last step."""
        k = self.k
        return (self.m - self.f - self.r - self.s - self.t - self.t * (k - 1)
                - self.w - math.ceil(self.w / (k - 1)) - 2)

    def as_tuple(self) -> tuple[int, ...]:
        return (self.k, self.m, self.f, self.r, self.s, self.t, self.w)


@dataclass(frozen=True)
class Family:
    params: FamilyParams
    graph: Hypergraph
    v1: int
    v2: int
    edge_roles: tuple[str, ...]  # per edge index of ``graph``

    def edges_with_role(self, role: str) -> list[int]:
        return [j for j, r in enumerate(self.edge_roles) if r == role]

    def roles_dict(self) -> dict:
        return {"v1": self.v1, "v2": self.v2, "edges": list(self.edge_roles),
                "params": dict(zip("kmfrstw", self.params.as_tuple()))}

    def to_dict(self) -> dict:
        return {**self.graph.to_dict(), "roles": self.roles_dict()}


def build_family(params: FamilyParams) -> Family:
    k = params.k
    nxt = 0

    def fresh(count):
        nonlocal nxt
        out = list(range(nxt, nxt + count))
        nxt += count
        return out

    v1, v2 = fresh(2)
    inner1, inner2 = fresh(k - 2), fresh(k - 2)
    built: list[tuple[list[int], str]] = [([v1, v2] + inner1, "e1"), ([v1, v2] + inner2, "e2")]

    def pendant(at, role):
        built.append(([at] + fresh(k - 1), role))

    if params.f:
        pendant(v2, "f")
    for v in inner1[: params.r]:
        pendant(v, "r")
    for v in inner2[: params.s]:
        pendant(v, "s")
    for _ in range(params.t):
        arm = fresh(k - 1)
        built.append(([v1] + arm, "t"))
        for v in arm:
            pendant(v, "t_pendant")
    if params.w >= 1:
        arm = fresh(k - 1)
        built.append(([v1] + arm, "w"))
        for v in arm[: params.w]:
            pendant(v, "w_pendant")
    for _ in range(params.p):
        pendant(v1, "p")

    assert nxt == params.n and len(built) == params.m
    g = Hypergraph.from_edges((e for e, _ in built), k, params.n)
    role_of = {tuple(sorted(e)): role for e, role in built}
    return Family(params, g, v1, v2, tuple(role_of[e] for e in g.edges))


PRESETS = ("G1", "G2", "G3", "G4", "G5", "G6")


def g6_split(k: int, z: int) -> tuple[int, int]:
    """(t, w) for the last case: t = floor((z-2k+2)/(k-1)), w the remainder."""
    t = (z - 2 * k + 2) // (k - 1)
    return t, z - 2 * k + 2 - t * (k - 1)


def preset(name: str, k: int, m: int, z: int) -> FamilyParams:
    """Parameter tuple of the named extremal case; raises if (k, m, z) is outside its range."""
    if k < 3:
        raise InfeasibleCase(f"k={k}: the extremal cases need k >= 3", "k >= 3")
    if name == "G1":
        ok, params = m == z + 1 and z >= 1, (0, 0, z - 1, 0, 0)
        rng = "m = z+1"
    elif name == "G2":
        ok, params = z == 1 and m >= z + 2, (0, 0, 0, 0, 0)
        rng = "z = 1, m >= z+2"
    elif name == "G3":
        ok, params = z == 2 and m >= z + 2, (1, 0, 0, 0, 0)
        rng = "z = 2, m >= z+2"
    elif name == "G4":
        ok, params = 3 <= z <= k and m >= z + 2, (1, z - 2, 0, 0, 0)
        rng = "3 <= z <= k, m >= z+2"
    elif name == "G5":
        ok, params = k + 1 <= z <= 2 * k - 2 and m >= z + 2, (1, k - 2, z - k, 0, 0)
        rng = "k+1 <= z <= 2k-2, m >= z+2"
    elif name == "G6":
        upper = m - 2 - math.ceil((m - 2 * k) / (k - 1))
        ok = m >= z + 2 and 2 * k - 1 <= z <= upper
        params = (1, k - 2, k - 2, *g6_split(k, z)) if ok else None
        rng = "m >= z+2, 2k-1 <= z <= m-2-ceil((m-2k)/(k-1))"
    else:
        raise ValueError(f"unknown preset {name!r}")
    if not ok:
        raise InfeasibleCase(f"{name} needs {rng}; got k={k}, m={m}, z={z}", rng)
    try:
        return FamilyParams(k, m, *params)
    except FamilyError as exc:
        raise InfeasibleCase(f"{name} at k={k}, m={m}, z={z}: {exc}", exc.constraint) from None


def case_for(k: int, m: int, z: int) -> str:
    """Name of the case whose range contains (k, m, z)."""
    for name in PRESETS:
        try:
            preset(name, k, m, z)
        except InfeasibleCase:
            continue
        return name
    raise InfeasibleCase(f"no extremal case covers k={k}, m={m}, z={z}", "case range")
