"""Z2-graded linear algebra over a parameter ring.

Vectors are plain lists of scalars over a :class:`SuperBasis` whose basis
elements carry parities (0 = even, 1 = odd).  Maps are stored as matrices
in the column convention: ``f(e_j) = sum_i A[i][j] e_i``.  Elements of the
two- and three-fold tensor powers of the space are dense coefficient grids
(:class:`Tensor2`, :class:`Tensor3`), optionally constrained to a fixed
total parity.

The graded flip ``tau`` and the graded cyclic rotation ``xi`` implement

    tau(x (x) y)       = (-1)^{|x||y|} y (x) x
    xi(x (x) y (x) z)  = (-1)^{|x|(|y|+|z|)} y (x) z (x) x

so that ``xi`` is (1 (x) tau) o (tau (x) 1) and ``xi^3`` is the identity.
"""

from __future__ import annotations

from .errors import DimensionMismatchError, ParityError
from .scalar import ParamRing

EVEN = 0
ODD = 1


def koszul_sign(p, q):
    """(-1)**(p*q) for parities p, q."""
    return -1 if (p * q) % 2 else 1


class SuperBasis:
    """An ordered homogeneous basis: labels plus parities."""

    def __init__(self, parities, labels=None):
        parities = tuple(int(p) for p in parities)
        if any(p not in (0, 1) for p in parities):
            raise ParityError("parities must be 0 or 1, got %r" % (parities,))
        if labels is None:
            labels = tuple("e%d" % (i + 1) for i in range(len(parities)))
        else:
            labels = tuple(labels)
            if len(labels) != len(parities):
                raise DimensionMismatchError(
                    "%d labels for %d parities" % (len(labels), len(parities)))
            if len(set(labels)) != len(labels):
                raise ParityError("duplicate basis labels in %r" % (labels,))
        self.parities = parities
        self.labels = labels
        self.dim = len(parities)

    def parity(self, i):
        return self.parities[i]

    def __eq__(self, other):
        if not isinstance(other, SuperBasis):
            return NotImplemented
        return self.parities == other.parities and self.labels == other.labels

    def __hash__(self):
        return hash((self.parities, self.labels))

    def __repr__(self):
        marks = ["%s%s" % (l, "~" if p else "") for l, p in zip(self.labels, self.parities)]
        return "SuperBasis(%s)" % ", ".join(marks)


def _check_same_basis(a, b):
    if a != b:
        raise DimensionMismatchError("bases differ: %r vs %r" % (a, b))


class EvenMap:
    """A parity-preserving linear map in the column convention.

    ``matrix[i][j]`` is the coefficient of the i-th target basis vector in
    the image of the j-th source basis vector.  Any nonzero entry linking
    basis vectors of different parity raises :class:`ParityError`.
    """

    def __init__(self, ring, src, dst, matrix):
        if len(matrix) != dst.dim or any(len(row) != src.dim for row in matrix):
            raise DimensionMismatchError(
                "matrix shape does not match bases (%d x %d expected)"
                % (dst.dim, src.dim))
        self.ring = ring
        self.src = src
        self.dst = dst
        self.matrix = [[ring.lift(v) for v in row] for row in matrix]
        for i in range(dst.dim):
            for j in range(src.dim):
                if self.matrix[i][j] and dst.parity(i) != src.parity(j):
                    raise ParityError(
                        "entry (%s <- %s) of an even map is nonzero but "
                        "changes parity" % (dst.labels[i], src.labels[j]))

    @classmethod
    def identity(cls, ring, basis):
        n = basis.dim
        return cls(ring, basis, basis,
                   [[ring.one() if i == j else ring.zero() for j in range(n)]
                    for i in range(n)])

    @classmethod
    def diagonal(cls, ring, basis, values):
        n = basis.dim
        if len(values) != n:
            raise DimensionMismatchError("%d diagonal values for dim %d"
                                         % (len(values), n))
        return cls(ring, basis, basis,
                   [[ring.lift(values[i]) if i == j else ring.zero()
                     for j in range(n)] for i in range(n)])

    def column(self, j):
        return [self.matrix[i][j] for i in range(self.dst.dim)]

    def apply(self, vec):
        if len(vec) != self.src.dim:
            raise DimensionMismatchError("vector length %d, expected %d"
                                         % (len(vec), self.src.dim))
        out = []
        for i in range(self.dst.dim):
            total = self.ring.zero()
            for j, v in enumerate(vec):
                if v:
                    total = total + self.matrix[i][j] * v
            out.append(total)
        return out

    def compose(self, other):
        """self after other."""
        if other.dst != self.src:
            raise DimensionMismatchError("composition bases do not match")
        n, m, k = self.dst.dim, other.src.dim, self.src.dim
        matrix = []
        for i in range(n):
            row = []
            for j in range(m):
                total = self.ring.zero()
                for t in range(k):
                    if self.matrix[i][t] and other.matrix[t][j]:
                        total = total + self.matrix[i][t] * other.matrix[t][j]
                row.append(total)
            matrix.append(row)
        return EvenMap(self.ring, other.src, self.dst, matrix)

    def power(self, n):
        if self.src != self.dst:
            raise DimensionMismatchError("only endomorphisms have powers")
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = EvenMap.identity(self.ring, self.src)
        for _ in range(n):
            result = self.compose(result)
        return result

    def transpose(self):
        matrix = [[self.matrix[i][j] for i in range(self.dst.dim)]
                  for j in range(self.src.dim)]
        return EvenMap(self.ring, self.dst, self.src, matrix)

    def is_identity(self):
        if self.src != self.dst:
            return False
        for i in range(self.dst.dim):
            for j in range(self.src.dim):
                want = 1 if i == j else 0
                if not self.matrix[i][j] == want:
                    return False
        return True

    def __eq__(self, other):
        if not isinstance(other, EvenMap):
            return NotImplemented
        return (self.ring == other.ring and self.src == other.src
                and self.dst == other.dst and self.matrix == other.matrix)

    def __repr__(self):
        rows = "; ".join(
            " ".join(str(v) for v in row) for row in self.matrix)
        return "EvenMap[%s]" % rows


class _TensorBase:
    def _check_compat(self, other):
        if not isinstance(other, type(self)):
            raise TypeError("cannot combine %s with %r" % (type(self).__name__, other))
        _check_same_basis(self.basis, other.basis)
        if self.ring != other.ring:
            raise DimensionMismatchError("tensors over different rings")

    def __sub__(self, other):
        return self + (-other)

    def is_zero(self):
        return all(not v for _, v in self._flat())

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return (self.basis == other.basis and self.ring == other.ring
                and (self - other).is_zero())

    __hash__ = None


class Tensor2(_TensorBase):
    """An element of V (x) V as a dense coefficient grid.

    If *parity* is given, every nonzero entry ``(i, j)`` must satisfy
    ``p_i + p_j = parity (mod 2)``.
    """

    def __init__(self, ring, basis, entries=None, parity=None):
        n = basis.dim
        self.ring = ring
        self.basis = basis
        self.parity = parity
        if entries is None:
            self.entries = [[ring.zero() for _ in range(n)] for _ in range(n)]
        else:
            if len(entries) != n or any(len(row) != n for row in entries):
                raise DimensionMismatchError("Tensor2 grid must be %d x %d" % (n, n))
            self.entries = [[ring.lift(v) for v in row] for row in entries]
        if parity is not None:
            for i, j, v in self.items():
                if (basis.parity(i) + basis.parity(j)) % 2 != parity % 2:
                    raise ParityError(
                        "entry %s(x)%s has parity %d, expected %d"
                        % (basis.labels[i], basis.labels[j],
                           (basis.parity(i) + basis.parity(j)) % 2, parity % 2))

    @classmethod
    def from_dict(cls, ring, basis, data, parity=None):
        t = cls(ring, basis, parity=None)
        for (i, j), v in data.items():
            t.entries[i][j] = t.entries[i][j] + ring.lift(v)
        return cls(ring, basis, t.entries, parity=parity)

    def _flat(self):
        for i, row in enumerate(self.entries):
            for j, v in enumerate(row):
                yield (i, j), v

    def items(self):
        """Nonzero entries as (i, j, value)."""
        for (i, j), v in self._flat():
            if v:
                yield i, j, v

    def __add__(self, other):
        self._check_compat(other)
        parity = self.parity if self.parity == other.parity else None
        n = self.basis.dim
        return Tensor2(self.ring, self.basis,
                       [[self.entries[i][j] + other.entries[i][j]
                         for j in range(n)] for i in range(n)], parity)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        c = self.ring.lift(c)
        n = self.basis.dim
        return Tensor2(self.ring, self.basis,
                       [[c * self.entries[i][j] for j in range(n)]
                        for i in range(n)], self.parity)

    def apply(self, f, slot):
        """Apply an even map to one tensor slot (0 or 1)."""
        _check_same_basis(f.src, self.basis)
        out = Tensor2(f.ring, f.dst, parity=self.parity)
        for i, j, v in self.items():
            if slot == 0:
                for u in range(f.dst.dim):
                    if f.matrix[u][i]:
                        out.entries[u][j] = out.entries[u][j] + f.matrix[u][i] * v
            elif slot == 1:
                for u in range(f.dst.dim):
                    if f.matrix[u][j]:
                        out.entries[i][u] = out.entries[i][u] + f.matrix[u][j] * v
            else:
                raise ValueError("Tensor2 slots are 0 and 1")
        return out

    def apply_all(self, f):
        return self.apply(f, 0).apply(f, 1)

    def __repr__(self):
        parts = ["%s(x)%s: %s" % (self.basis.labels[i], self.basis.labels[j], v)
                 for i, j, v in self.items()]
        return "Tensor2{%s}" % ", ".join(parts)


class Tensor3(_TensorBase):
    """An element of V (x) V (x) V as a dense coefficient grid."""

    def __init__(self, ring, basis, entries=None, parity=None):
        n = basis.dim
        self.ring = ring
        self.basis = basis
        self.parity = parity
        if entries is None:
            self.entries = [[[ring.zero() for _ in range(n)] for _ in range(n)]
                            for _ in range(n)]
        else:
            self.entries = [[[ring.lift(v) for v in row] for row in plane]
                            for plane in entries]
            if (len(self.entries) != n
                    or any(len(plane) != n for plane in self.entries)
                    or any(len(row) != n for plane in self.entries for row in plane)):
                raise DimensionMismatchError("Tensor3 grid must be %d^3" % n)
        if parity is not None:
            for i, j, k, v in self.items():
                p = (basis.parity(i) + basis.parity(j) + basis.parity(k)) % 2
                if p != parity % 2:
                    raise ParityError(
                        "entry %s(x)%s(x)%s has parity %d, expected %d"
                        % (basis.labels[i], basis.labels[j], basis.labels[k],
                           p, parity % 2))

    def _flat(self):
        for i, plane in enumerate(self.entries):
            for j, row in enumerate(plane):
                for k, v in enumerate(row):
                    yield (i, j, k), v

    def items(self):
        for (i, j, k), v in self._flat():
            if v:
                yield i, j, k, v

    def __add__(self, other):
        self._check_compat(other)
        parity = self.parity if self.parity == other.parity else None
        out = Tensor3(self.ring, self.basis, parity=parity)
        for (i, j, k), v in self._flat():
            out.entries[i][j][k] = v + other.entries[i][j][k]
        return out

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        c = self.ring.lift(c)
        out = Tensor3(self.ring, self.basis, parity=self.parity)
        for i, j, k, v in self.items():
            out.entries[i][j][k] = c * v
        return out

    def apply(self, f, slot):
        """Apply an even map to one tensor slot (0, 1 or 2)."""
        _check_same_basis(f.src, self.basis)
        if slot not in (0, 1, 2):
            raise ValueError("Tensor3 slots are 0, 1 and 2")
        out = Tensor3(f.ring, f.dst, parity=self.parity)
        for i, j, k, v in self.items():
            idx = [i, j, k]
            a = idx[slot]
            for u in range(f.dst.dim):
                if f.matrix[u][a]:
                    idx[slot] = u
                    x, y, z = idx
                    out.entries[x][y][z] = out.entries[x][y][z] + f.matrix[u][a] * v
        return out

    def apply_all(self, f):
        return self.apply(f, 0).apply(f, 1).apply(f, 2)

    def __repr__(self):
        parts = ["%s(x)%s(x)%s: %s"
                 % (self.basis.labels[i], self.basis.labels[j],
                    self.basis.labels[k], v)
                 for i, j, k, v in self.items()]
        return "Tensor3{%s}" % ", ".join(parts)


def tau(t):
    """Graded flip on a Tensor2."""
    basis = t.basis
    out = Tensor2(t.ring, basis, parity=t.parity)
    for i, j, v in t.items():
        s = koszul_sign(basis.parity(i), basis.parity(j))
        out.entries[j][i] = out.entries[j][i] + (v if s == 1 else -v)
    return out


def xi(t):
    """Graded cyclic rotation on a Tensor3 (first slot moves to the back)."""
    basis = t.basis
    out = Tensor3(t.ring, basis, parity=t.parity)
    for i, j, k, v in t.items():
        s = koszul_sign(basis.parity(i), basis.parity(j) + basis.parity(k))
        out.entries[j][k][i] = out.entries[j][k][i] + (v if s == 1 else -v)
    return out


def cyclic_sum(t):
    """t + xi(t) + xi(xi(t)) for a Tensor3."""
    first = xi(t)
    return t + first + xi(first)
