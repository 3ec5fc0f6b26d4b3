"""Connected components of the solution moduli, by braid-move orbits.

A monodromy tuple (sigma, sigma_1, ..., sigma_g, tau) multiplies out (left to
right) to the standard n-cycle; the middles are transpositions, the ends are
involutions, and the fixed points of the ends total 2g+2.  Classes under
simultaneous conjugation are represented by canonical keys: fixing the product
to the standard cycle cuts the conjugation down to the cycle's centralizer, so
a class is the lexicographic minimum over the n cyclic conjugates.

Components of the split moduli are orbits of the keys under the adjacent swap
and the two turn moves; the nonsplit moduli add the flip, which reverses the
tuple while rewriting each entry in the letters before it.
"""
from __future__ import annotations

from dataclasses import dataclass

from .geometry import Partition, RamSpec
from .perms import (
    Perm,
    all_transpositions,
    compose,
    compose_all,
    conjugate,
    count_involutions,
    cycle_type,
    fixed_points,
    identity,
    inverse,
    involutions,
    is_involution,
    is_transposition,
    standard_cycle,
)

VARIANT_SPLIT = "split"
VARIANT_NONSPLIT = "nonsplit"
VARIANTS = (VARIANT_SPLIT, VARIANT_NONSPLIT)

#: Flattened canonical form: the g+2 component words concatenated.
CanonicalKey = tuple[int, ...]

#: Enumeration work cap for fail-fast sizing (involutions * transpositions^g).
SIZE_LIMIT = 5_000_000


class ResourceLimit(RuntimeError):
    """Raised when an enumeration would exceed the sizing cap."""


@dataclass(frozen=True)
class MonodromyTuple:
    """(sigma, middles..., tau) with product equal to the standard n-cycle."""

    sigma: Perm
    middles: tuple[Perm, ...]
    tau: Perm

    @property
    def n(self) -> int:
        return len(self.sigma)

    @property
    def genus(self) -> int:
        return len(self.middles)

    @property
    def components(self) -> tuple[Perm, ...]:
        return (self.sigma, *self.middles, self.tau)

    @classmethod
    def from_components(cls, comps: tuple[Perm, ...]) -> MonodromyTuple:
        return cls(comps[0], comps[1:-1], comps[-1])

    def validate(self) -> None:
        n = self.n
        if compose_all(self.components, n) != standard_cycle(n):
            raise ValueError("components do not multiply to the standard cycle")
        if not is_involution(self.sigma) or not is_involution(self.tau):
            raise ValueError("ends must be involutions")
        if any(not is_transposition(m) for m in self.middles):
            raise ValueError("middles must be transpositions")
        if fixed_points(self.sigma) + fixed_points(self.tau) != 2 * self.genus + 2:
            raise ValueError("fixed points of the ends must total 2g + 2")


def canonical_key(comps: tuple[Perm, ...]) -> CanonicalKey:
    """Lexicographic minimum of the flattened tuple over conjugation by
    powers of the standard cycle (the centralizer of the fixed product)."""
    return _key_over_cycle(comps, standard_cycle(len(comps[0])))


def _key_over_cycle(comps: tuple[Perm, ...], cycle: Perm) -> CanonicalKey:
    n = len(comps[0])
    best: CanonicalKey | None = None
    rho = identity(n)
    for _ in range(n):
        flat = tuple(x for comp in comps for x in conjugate(comp, rho))
        if best is None or flat < best:
            best = flat
        rho = compose(rho, cycle)
    assert best is not None
    return best


def key_to_tuple(key: CanonicalKey, n: int) -> MonodromyTuple:
    comps = tuple(key[i : i + n] for i in range(0, len(key), n))
    return MonodromyTuple.from_components(comps)


def _feasible(g: int, n: int) -> bool:
    # fix(sigma) + fix(tau) = 2g+2 with each fix count <= n and congruent
    # to n mod 2.
    return any(
        f1 % 2 == n % 2 and (2 * g + 2 - f1) % 2 == n % 2 and 0 <= 2 * g + 2 - f1 <= n
        for f1 in range(0, n + 1)
    )


def enumerate_m(g: int, n: int) -> set[CanonicalKey]:
    """Canonical keys of all monodromy tuples for the given genus and order.

    Every simultaneous-conjugation class contains tuples whose product is
    exactly the standard cycle, and those form a single orbit under the
    cycle's centralizer, so distinct keys are distinct classes.  Infeasible
    parameters yield the empty set.
    """
    return enumerate_m_with_cycle(g, n, standard_cycle(n))


def enumerate_m_with_cycle(g: int, n: int, base_cycle: Perm) -> set[CanonicalKey]:
    """As :func:`enumerate_m` but normalising the product to an arbitrary
    n-cycle; the count must not depend on the choice."""
    if g < 0 or n < 1:
        raise ValueError("need g >= 0 and n >= 1")
    if cycle_type(base_cycle) != (n,):
        raise ValueError("base cycle must be an n-cycle")
    if not _feasible(g, n):
        return set()
    work = count_involutions(n) * (n * (n - 1) // 2) ** g
    if work > SIZE_LIMIT:
        raise ResourceLimit(
            f"enumeration size ~{work} tuples exceeds the cap of {SIZE_LIMIT}"
        )
    transpositions = all_transpositions(n)
    keys: set[CanonicalKey] = set()
    target_fix = 2 * g + 2

    def scan(prefix: Perm, chosen: list[Perm], sigma: Perm, sigma_fix: int) -> None:
        if len(chosen) == g:
            # tau is forced: prefix * tau = base_cycle.
            tau = compose(inverse(prefix), base_cycle)
            if not is_involution(tau):
                return
            if sigma_fix + fixed_points(tau) != target_fix:
                return
            keys.add(_key_over_cycle((sigma, *chosen, tau), base_cycle))
            return
        for t in transpositions:
            scan(compose(prefix, t), chosen + [t], sigma, sigma_fix)

    for sigma in involutions(n):
        fix = fixed_points(sigma)
        if fix > target_fix:
            continue
        scan(sigma, [], sigma, fix)
    return keys


# -- braid moves --------------------------------------------------------------------

Move = str | tuple[str, int]


def applicable_moves(g: int, variant: str) -> list[Move]:
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    moves: list[Move] = [("swap", i) for i in range(1, g)]
    if g >= 1:
        moves += ["left_turn", "right_turn"]
    if variant == VARIANT_NONSPLIT:
        moves.append("flip")
    return moves


def apply_move(t: MonodromyTuple, move: Move) -> MonodromyTuple:
    """One braid move; the result is re-validated, so the exact product and
    the type constraints are guaranteed, not assumed."""
    if isinstance(move, str) and move.startswith("swap_"):
        move = ("swap", int(move.split("_", 1)[1]))
    g = t.genus
    if isinstance(move, tuple):
        name, i = move
        if name != "swap":
            raise ValueError(f"unknown move {move!r}")
        if not 1 <= i < g:
            raise ValueError(f"swap index {i} needs 1 <= i < g = {g}")
        m = list(t.middles)
        a, b = m[i - 1], m[i]
        m[i - 1] = compose(compose(a, b), inverse(a))
        m[i] = a
        out = MonodromyTuple(t.sigma, tuple(m), t.tau)
    elif move == "left_turn":
        if g < 1:
            raise ValueError("left_turn needs g >= 1")
        sigma, s1 = t.sigma, t.middles[0]
        # [s1, sigma] = s1 sigma s1^-1 sigma^-1, left to right.
        comm = compose_all([s1, sigma, inverse(s1), inverse(sigma)], t.n)
        new_sigma = compose(sigma, comm)
        new_s1 = compose_all([sigma, s1, inverse(sigma)], t.n)
        out = MonodromyTuple(new_sigma, (new_s1, *t.middles[1:]), t.tau)
    elif move == "right_turn":
        if g < 1:
            raise ValueError("right_turn needs g >= 1")
        sg, tau = t.middles[-1], t.tau
        new_sg = compose_all([inverse(tau), sg, tau], t.n)
        comm = compose_all([inverse(tau), inverse(sg), tau, sg], t.n)
        new_tau = compose(comm, tau)
        out = MonodromyTuple(t.sigma, (*t.middles[:-1], new_sg), new_tau)
    elif move == "flip":
        comps = t.components
        prefixes = [identity(t.n)]
        for comp in comps[:-1]:
            prefixes.append(compose(prefixes[-1], comp))
        flipped = tuple(
            compose_all([prefixes[i], comps[i], inverse(prefixes[i])], t.n)
            for i in range(len(comps) - 1, 0, -1)
        ) + (comps[0],)
        out = MonodromyTuple.from_components(flipped)
    else:
        raise ValueError(f"unknown move {move!r}")
    out.validate()
    return out


# -- orbit counting --------------------------------------------------------------------


@dataclass(frozen=True)
class OrbitCertificate:
    """Component count with one canonical representative per orbit."""

    g: int
    n: int
    variant: str
    m_count: int
    component_count: int
    representatives: tuple[CanonicalKey, ...]
    orbit_sizes: tuple[int, ...]

    def __post_init__(self):
        if sum(self.orbit_sizes) != self.m_count:
            raise AssertionError("orbit sizes do not sum to the class count")


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def component_count(g: int, n: int, variant: str) -> OrbitCertificate:
    """Count orbits of the applicable moves on the canonical keys.

    The moves commute with simultaneous conjugation, so applying each move to
    one representative per key gives the full relation; union-find computes
    its symmetric-transitive closure.
    """
    keys = sorted(enumerate_m(g, n))
    index = {key: i for i, key in enumerate(keys)}
    uf = _UnionFind(len(keys))
    moves = applicable_moves(g, variant)
    for key, i in index.items():
        t = key_to_tuple(key, n)
        for move in moves:
            j = index[canonical_key(apply_move(t, move).components)]
            uf.union(i, j)
    orbits: dict[int, list[CanonicalKey]] = {}
    for key, i in index.items():
        orbits.setdefault(uf.find(i), []).append(key)
    reps = sorted(min(members) for members in orbits.values())
    sizes = tuple(
        len(members)
        for members in sorted(orbits.values(), key=min)
    )
    return OrbitCertificate(g, n, variant, len(keys), len(orbits), tuple(reps), sizes)


def tuple_ramspec(t: MonodromyTuple) -> RamSpec:
    """The ramification specification read off a monodromy tuple: the cycle
    types of the ends are the marked profiles, each middle contributes a
    single simple branch point."""
    t.validate()
    members: list[Partition] = [cycle_type(t.sigma)]
    members.extend(cycle_type(m) for m in t.middles)
    members.append(cycle_type(t.tau))
    return RamSpec(t.n, tuple(members), (cycle_type(t.sigma), cycle_type(t.tau)))
