"""Finite groups with concrete backends: permutations, integer matrices, and
coset-table regular representations.

Elements are plain hashable values with a total order, so sets and sorted
output are canonical:

* permutations  -- tuples of images on {0..n-1}
* matrices      -- tuples of integer row tuples (square, determinant +-1)
* coset indices -- ints, multiplied through a completed coset table
"""

from __future__ import annotations

from fractions import Fraction

DEFAULT_CAP = 1_000_000


class GroupError(Exception):
    pass


class CapExceeded(GroupError):
    """Closure grew past the cap; the group is larger than cap or infinite."""

    def __init__(self, cap, reached):
        super().__init__(f"closure exceeded cap {cap} (reached {reached})")
        self.cap = cap
        self.reached = reached


class MixedBackends(GroupError):
    pass


class ElementNotInGroup(GroupError):
    pass


# -- permutation backend ----------------------------------------------------


def perm_identity(n: int) -> tuple:
    return tuple(range(n))


def perm_mul(a: tuple, b: tuple) -> tuple:
    """(a*b)(i) = a(b(i)): apply b first, then a."""
    return tuple(a[b[i]] for i in range(len(a)))


def perm_inv(a: tuple) -> tuple:
    out = [0] * len(a)
    for i, ai in enumerate(a):
        out[ai] = i
    return tuple(out)


def perm_from_cycles(n: int, cycles) -> tuple:
    img = list(range(n))
    for cyc in cycles:
        for i, x in enumerate(cyc):
            img[x] = cyc[(i + 1) % len(cyc)]
    return tuple(img)


def perm_cycle_name(p: tuple) -> str:
    """Cycle notation on 1-based points, e.g. (12)(34); fixed points omitted.

    Whitespace-free so the string can serve as a quandle-v1 name token;
    points >= 10 are comma separated.
    """
    n = len(p)
    seen = [False] * n
    parts = []
    for i in range(n):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)
            j = p[j]
        sep = "," if n >= 10 else ""
        parts.append("(" + sep.join(str(x) for x in cyc) + ")")
    return "".join(parts) if parts else "e"


# -- integer matrix backend ---------------------------------------------------


def mat_identity(n: int) -> tuple:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def mat_mul(a: tuple, b: tuple) -> tuple:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def mat_inv(a: tuple) -> tuple:
    """Exact inverse of an integer matrix; it must be integral (det +-1)."""
    n = len(a)
    work = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if work[r][col]), None)
        if piv is None:
            raise GroupError("matrix is singular")
        work[col], work[piv] = work[piv], work[col]
        f = work[col][col]
        work[col] = [x / f for x in work[col]]
        for r in range(n):
            if r != col and work[r][col]:
                g = work[r][col]
                work[r] = [x - g * y for x, y in zip(work[r], work[col])]
    inv = []
    for i in range(n):
        row = work[i][n:]
        if any(x.denominator != 1 for x in row):
            raise GroupError("matrix inverse is not integral")
        inv.append(tuple(int(x) for x in row))
    return tuple(inv)


# -- backend dispatch ---------------------------------------------------------


def _backend_of(g):
    if isinstance(g, tuple) and g and isinstance(g[0], tuple):
        return ("matrix", len(g))
    if isinstance(g, tuple):
        return ("perm", len(g))
    if isinstance(g, int):
        return ("coset", None)
    raise MixedBackends(f"unsupported element value {g!r}")


_OPS = {
    "perm": (perm_identity, perm_mul, perm_inv),
    "matrix": (mat_identity, mat_mul, mat_inv),
}


class FiniteGroup:
    """A finite group: identity, generators, multiply/invert oracles, and a
    lazily computed element list (BFS closure from the identity)."""

    def __init__(self, identity, generators, mul, inv, cap=DEFAULT_CAP,
                 elements=None, name=None):
        self.identity = identity
        self.generators = list(generators)
        self._mul = mul
        self._inv = inv
        self.cap = cap
        self.name = name
        self._elements = list(elements) if elements is not None else None
        self._index = None

    def mul(self, a, b):
        return self._mul(a, b)

    def inv(self, a):
        return self._inv(a)

    @property
    def elements(self) -> list:
        if self._elements is None:
            self._elements = self._close()
        return self._elements

    def order(self) -> int:
        return len(self.elements)

    def index(self, g) -> int:
        if self._index is None:
            self._index = {x: i for i, x in enumerate(self.elements)}
        try:
            return self._index[g]
        except KeyError:
            raise ElementNotInGroup(f"{g!r} is not an enumerated element") from None

    def __contains__(self, g):
        if self._index is None:
            self._index = {x: i for i, x in enumerate(self.elements)}
        return g in self._index

    def _close(self) -> list:
        # BFS from the identity, right-multiplying by the generators in input
        # order followed by any generator inverses not already generators.
        alphabet = list(self.generators)
        gen_set = set(alphabet)
        for g in self.generators:
            gi = self._inv(g)
            if gi not in gen_set:
                alphabet.append(gi)
                gen_set.add(gi)
        seen = {self.identity}
        out = [self.identity]
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in alphabet:
                    y = self._mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        out.append(y)
                        nxt.append(y)
                        if len(out) > self.cap:
                            raise CapExceeded(self.cap, len(out))
            frontier = nxt
        return out

    # -- structural queries ---------------------------------------------------

    def conjugacy_class(self, g) -> list:
        """{x g x^-1 : x in G}, canonically ordered."""
        if g not in self:
            raise ElementNotInGroup(f"{g!r} not in group")
        out = {self._mul(self._mul(x, g), self._inv(x)) for x in self.elements}
        return sorted(out)

    def is_central(self, g) -> bool:
        """True iff g commutes with every generator (hence with all of G)."""
        if g not in self:
            raise ElementNotInGroup(f"{g!r} not in group")
        return all(self._mul(g, h) == self._mul(h, g) for h in self.generators)

    def element_order(self, g) -> int:
        if g not in self:
            raise ElementNotInGroup(f"{g!r} not in group")
        k = 1
        x = g
        while x != self.identity:
            x = self._mul(x, g)
            k += 1
        return k


def closure_from_generators(gens, cap=DEFAULT_CAP, name=None) -> FiniteGroup:
    """Breadth-first closure of a nonempty generator list sharing a backend."""
    if not gens:
        raise ValueError("need at least one generator")
    kinds = {_backend_of(g) for g in gens}
    if len(kinds) != 1:
        raise MixedBackends(f"generators mix backends: {sorted(kinds)}")
    kind, size = kinds.pop()
    if kind == "coset":
        raise MixedBackends("coset elements need a coset table; "
                            "use group_from_coset_table")
    ident, mul, inv = _OPS[kind]
    G = FiniteGroup(ident(size), list(gens), mul, inv, cap=cap, name=name)
    G.elements  # force the closure (and the cap check) eagerly
    return G
