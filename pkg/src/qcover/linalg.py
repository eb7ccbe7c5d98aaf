"""Exact linear algebra kernels: sparse elimination over Q and GF(p), and
integer Smith normal form.

No floating point anywhere.  Rows are sparse integer dicts {column: coeff};
elimination over Q is fraction-free (each update multiplies through by the
pivot and strips the integer content), so intermediate values stay integers.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _strip(row: dict) -> dict:
    """Drop zeros and divide through by the content of an integer row."""
    row = {c: v for c, v in row.items() if v}
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        row = {c: v // g for c, v in row.items()}
    return row


class Echelon:
    """Incremental row echelon form of a sparse matrix over Q or GF(p).

    Rows are fed one at a time; each is reduced against the pivots seen so
    far and, if nonzero, becomes a new pivot row.  A pivot row may contain
    later pivot columns (no back-elimination), so reduction eliminates
    pivot columns in insertion order -- every elimination can only introduce
    strictly younger pivots, which bounds the loop.
    """

    def __init__(self, ncols: int, p: int | None = None):
        if p is not None and p < 2:
            raise ValueError("modulus must be >= 2")
        self.ncols = ncols
        self.p = p
        self.pivot_of_col: dict[int, int] = {}  # pivot col -> index into rows
        self.rows: list[tuple[int, dict]] = []  # (pivot col, row) insertion order

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, row: dict) -> dict:
        """Return `row` reduced against all current pivot rows.

        Over Q the result is an integer row scaled by a positive rational,
        which is all that rank, membership and residue extraction need.
        """
        p = self.p
        if p is None:
            row = _strip(row)
        else:
            row = {c: v % p for c, v in row.items() if v % p}
        while True:
            hit = None
            for c in row:
                t = self.pivot_of_col.get(c)
                if t is not None and (hit is None or t < hit):
                    hit = t
            if hit is None:
                return row
            pc, prow = self.rows[hit]
            if p is None:
                a, b = row[pc], prow[pc]
                new = {c: b * v for c, v in row.items()}
                for c, v in prow.items():
                    new[c] = new.get(c, 0) - a * v
                row = _strip(new)
            else:
                f = (row[pc] * pow(prow[pc], -1, p)) % p
                new = dict(row)
                for c, v in prow.items():
                    new[c] = (new.get(c, 0) - f * v) % p
                row = {c: v for c, v in new.items() if v}

    def add(self, row: dict) -> bool:
        """Insert a row; True if it increased the rank."""
        row = self.reduce(row)
        if not row:
            return False
        # Deterministic pivot: smallest |value|, ties by column.  Unit pivots
        # keep the integer updates small.
        if self.p is None:
            pc = min(row, key=lambda c: (abs(row[c]), c))
            if row[pc] < 0:
                row = {c: -v for c, v in row.items()}
        else:
            pc = min(row, key=lambda c: (row[c] != 1, c))
            inv = pow(row[pc], -1, self.p)
            row = {c: (v * inv) % self.p for c, v in row.items()}
        self.pivot_of_col[pc] = len(self.rows)
        self.rows.append((pc, row))
        return True

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)

    def nullspace_basis(self) -> list[list]:
        """Deterministic kernel basis, one vector per free column.

        Vectors are integer lists (content 1, first nonzero entry positive)
        over Q, or lists of residues over GF(p).  Back-substitution walks the
        pivot rows in reverse insertion order: a row inserted at time t was
        reduced against all older pivots, so its non-pivot support involves
        only younger pivots (already solved) and free columns.
        """
        free = [c for c in range(self.ncols) if c not in self.pivot_of_col]
        basis = []
        for f in free:
            if self.p is None:
                v: dict[int, Fraction | int] = {f: Fraction(1)}
            else:
                v = {f: 1}
            for pc, row in reversed(self.rows):
                s = 0
                for c, coeff in row.items():
                    if c != pc and c in v:
                        s += coeff * v[c]
                if s:
                    if self.p is None:
                        v[pc] = Fraction(-s, row[pc])
                    else:
                        v[pc] = (-s) % self.p  # pivot normalized to 1
            basis.append(self._to_vector(v))
        return basis

    def _to_vector(self, v: dict) -> list:
        if self.p is not None:
            return [v.get(c, 0) % self.p for c in range(self.ncols)]
        den = 1
        for x in v.values():
            den = den * x.denominator // gcd(den, x.denominator)
        ints = {c: int(x * den) for c, x in v.items()}
        return vector_normalize([ints.get(c, 0) for c in range(self.ncols)])


def vector_normalize(vec: list[int]) -> list[int]:
    """Scale an integer vector to content 1 with first nonzero entry > 0."""
    g = 0
    lead = 0
    for x in vec:
        if x and not lead:
            lead = 1 if x > 0 else -1
        g = gcd(g, x)
    if g == 0:
        return vec
    g *= lead
    return [x // g for x in vec]


def nullspace(rows, ncols: int, p: int | None = None) -> tuple[int, list[list]]:
    """Rank and kernel basis of a sparse system given as an iterable of rows."""
    ech = Echelon(ncols, p)
    for row in rows:
        ech.add(row)
    return ech.rank, ech.nullspace_basis()


# ---------------------------------------------------------------------------
# Smith normal form


def identity_matrix(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def mat_mul(A: list[list[int]], B: list[list[int]]) -> list[list[int]]:
    if not A or not B:
        return []
    n = len(B)
    assert all(len(r) == n for r in A)
    cols = len(B[0])
    return [[sum(r[k] * B[k][j] for k in range(n)) for j in range(cols)] for r in A]


def smith_normal_form(A: list[list[int]]):
    """Diagonalize an integer matrix by unimodular row/column operations.

    Returns (D, U, V) with U*A*V == D (checked), U and V unimodular, and the
    diagonal of D a divisibility chain d1 | d2 | ... followed by zeros.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    for r in A:
        if len(r) != n:
            raise ValueError("ragged matrix")
    D = [[int(x) for x in r] for r in A]
    U = identity_matrix(m)
    V = identity_matrix(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def addmul_row(dst, src, q):
        Dd, Ds = D[dst], D[src]
        for c in range(n):
            Dd[c] += q * Ds[c]
        Ud, Us = U[dst], U[src]
        for c in range(m):
            Ud[c] += q * Us[c]

    def addmul_col(dst, src, q):
        for row in D:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    def negate_row(i):
        D[i] = [-x for x in D[i]]
        U[i] = [-x for x in U[i]]

    k = 0
    while k < min(m, n):
        # Smallest nonzero |entry| in the trailing submatrix becomes the pivot.
        pivot = None
        for i in range(k, m):
            for j in range(k, n):
                x = D[i][j]
                if x and (pivot is None or abs(x) < abs(D[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(k, pivot[0])
        swap_cols(k, pivot[1])
        while True:
            if D[k][k] < 0:
                negate_row(k)
            # Euclid down the column, then along the row; a nonzero remainder
            # becomes the new (smaller) pivot, so this loop terminates.
            dirty = False
            for i in range(k + 1, m):
                if D[i][k]:
                    q = D[i][k] // D[k][k]
                    addmul_row(i, k, -q)
                    if D[i][k]:
                        swap_rows(i, k)
                        dirty = True
            if dirty:
                continue
            for j in range(k + 1, n):
                if D[k][j]:
                    q = D[k][j] // D[k][k]
                    addmul_col(j, k, -q)
                    if D[k][j]:
                        swap_cols(j, k)
                        dirty = True
            if dirty:
                continue
            # Enforce the divisibility chain before moving on.
            d = D[k][k]
            fix = None
            for i in range(k + 1, m):
                for j in range(k + 1, n):
                    if D[i][j] % d:
                        fix = i
                        break
                if fix is not None:
                    break
            if fix is None:
                break
            addmul_row(k, fix, 1)
        k += 1

    if mat_mul(mat_mul(U, A), V) != D:
        raise AssertionError("smith normal form verification failed")
    return D, U, V


def abelian_invariants(rel_rows: list[list[int]], ngens: int) -> tuple[int, list[int]]:
    """Invariants of Z^ngens modulo the lattice spanned by rel_rows.

    Returns (free_rank, torsion) where torsion lists invariant factors >= 2
    in divisibility order.
    """
    if not rel_rows:
        return ngens, []
    for r in rel_rows:
        if len(r) != ngens:
            raise ValueError("relator row length mismatch")
    D, _, _ = smith_normal_form(rel_rows)
    diag = [D[i][i] for i in range(min(len(D), ngens))]
    rank = sum(1 for d in diag if d)
    torsion = [d for d in diag if d > 1]
    return ngens - rank, torsion
