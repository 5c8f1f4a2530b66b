"""Integer-matrix homology: Smith normal form, plumbing graphs, cobordism kernels.

All first-homology computations in the artifact reduce to cokernels of integer
matrices.  Smith normal form is implemented from scratch with a pinned pivot
rule (smallest nonzero absolute value, row-major tie-break, row-then-column
elimination) so the transform matrices are reproducible across runs.

Cobordisms built from 2-handle attachments are presented by a framed-link
block structure: a symmetric linking matrix for the incoming boundary and a
bordered extension for the handles.  The coefficient kernel
K(W) = ker(H^2(W, dW) -> H^2(W)) is computed as the cokernel of the
restriction H^1(W) -> H^1(dW), using Hom(-, Z) lattices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .slopes import NcfExpansion, UnimodularMatrix, neg_continued_fraction


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    data: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise ValueError("ragged matrix data")

    @staticmethod
    def from_rows(rows) -> "IntMatrix":
        data = tuple(tuple(int(x) for x in row) for row in rows)
        nrows = len(data)
        ncols = len(data[0]) if data else 0
        return IntMatrix(nrows, ncols, data)

    @staticmethod
    def zeros(rows: int, cols: int) -> "IntMatrix":
        return IntMatrix(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.data[ij[0]][ij[1]]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, tuple(zip(*self.data)) if self.data else tuple(() for _ in range(self.cols)))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        ot = other.transpose()
        data = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in ot.data) for row in self.data
        )
        return IntMatrix(self.rows, other.cols, data)

    def hcat(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return IntMatrix.from_rows([list(a) + list(b) for a, b in zip(self.data, other.data)]) if self.rows else IntMatrix(0, self.cols + other.cols, ())

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.data[i][j] == self.data[j][i] for i in range(self.rows) for j in range(i)
        )

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.data[i][i] for i in range(min(self.rows, self.cols)))


def matrix_det(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [list(row) for row in m.data]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (d, u, v) with u @ m @ v == d diagonal, divisibility chain, u, v unimodular.

    Pivot rule: smallest nonzero absolute value in the remaining submatrix,
    lowest (row, col) on ties; rows are cleared before columns.  Divisibility
    is enforced at every step, so the diagonal comes out chained.
    """
    a = [list(row) for row in m.data]
    nr, nc = m.rows, m.cols
    u = [list(row) for row in IntMatrix.identity(nr).data]
    v = [list(row) for row in IntMatrix.identity(nc).data]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, f):
        a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, f):
        for row in a:
            row[dst] += f * row[src]
        for row in v:
            row[dst] += f * row[src]

    def pick_pivot(t):
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        return best

    t = 0
    while t < min(nr, nc):
        pos = pick_pivot(t)
        if pos is None:
            break
        if pos[0] != t:
            swap_rows(t, pos[0])
        if pos[1] != t:
            swap_cols(t, pos[1])
        while True:
            # rows first: clear the pivot column
            dirty = False
            for i in range(nr):
                if i != t and a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    add_row(t, i, -q)
                    if a[i][t] != 0:
                        dirty = True
            if dirty:
                pos = pick_pivot(t)
                if pos[0] != t:
                    swap_rows(t, pos[0])
                if pos[1] != t:
                    swap_cols(t, pos[1])
                continue
            for j in range(nc):
                if j != t and a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    add_col(t, j, -q)
                    if a[t][j] != 0:
                        dirty = True
            if dirty:
                pos = pick_pivot(t)
                if pos[0] != t:
                    swap_rows(t, pos[0])
                if pos[1] != t:
                    swap_cols(t, pos[1])
                continue
            # pivot must divide the rest of the submatrix for the chain
            offender = None
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if a[i][j] % a[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(offender, t, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1

    return IntMatrix.from_rows(a) if a else IntMatrix(0, nc, ()), (
        IntMatrix.from_rows(u) if u else IntMatrix(0, 0, ())
    ), IntMatrix.from_rows(v) if v else IntMatrix(0, 0, ())


def matrix_rank(m: IntMatrix) -> int:
    d, _, _ = smith_normal_form(m)
    return sum(1 for x in d.diagonal() if x != 0)


@dataclass(frozen=True)
class AbelianGroupSpec:
    """Finitely generated abelian group: free rank plus a torsion chain."""

    rank: int
    torsion: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rank < 0:
            raise ValueError("negative rank")
        for i, t in enumerate(self.torsion):
            if t < 2:
                raise ValueError("torsion coefficients must be >= 2")
            if i and t % self.torsion[i - 1] != 0:
                raise ValueError("torsion coefficients must form a divisibility chain")

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


TRIVIAL_GROUP = AbelianGroupSpec(0, ())


def cokernel(m: IntMatrix) -> AbelianGroupSpec:
    """Z^rows / (column span of m)."""
    d, _, _ = smith_normal_form(m)
    diag = d.diagonal()
    rank_m = sum(1 for x in diag if x != 0)
    torsion = tuple(x for x in diag if x > 1)
    return AbelianGroupSpec(m.rows - rank_m, torsion)


def hom_lattice(m: IntMatrix) -> IntMatrix:
    """Basis (as rows) of Hom(coker m, Z) = { x : x . m == 0 }.

    Deterministic: rows are the trailing rows of the SNF row transform.
    """
    d, u, _ = smith_normal_form(m)
    rank_m = sum(1 for x in d.diagonal() if x != 0)
    return IntMatrix.from_rows([u.data[i] for i in range(rank_m, m.rows)]) if rank_m < m.rows else IntMatrix(0, m.rows, ())


def solve_in_lattice(target: tuple[int, ...], basis: IntMatrix) -> tuple[int, ...]:
    """Integer coefficients c with c . basis == target; raises if none exist."""
    if len(target) != basis.cols:
        raise ValueError("length mismatch")
    d, u, v = smith_normal_form(basis)
    # c . B = t  <=>  (c u^-1) d = t v, written y d = t v with c = y u
    tv = [sum(target[i] * v.data[i][j] for i in range(basis.cols)) for j in range(basis.cols)]
    y = []
    for i in range(basis.rows):
        di = d.data[i][i] if i < min(basis.rows, basis.cols) else 0
        ti = tv[i] if i < basis.cols else 0
        if di == 0:
            if ti != 0:
                raise ValueError("target not in lattice")
            y.append(0)
        else:
            if ti % di != 0:
                raise ValueError("target not in integral lattice")
            y.append(ti // di)
    for i in range(basis.rows, basis.cols):
        if tv[i] != 0:
            raise ValueError("target not in lattice")
    c = [sum(y[i] * u.data[i][j] for i in range(basis.rows)) for j in range(basis.rows)]
    return tuple(c)


# ---------------------------------------------------------------------------
# Plumbing graphs


class PlumbingError(ValueError):
    pass


@dataclass(frozen=True)
class PlumbingGraph:
    """Framed-link plumbing description: vertices with rational framings, edges."""

    vertices: tuple[tuple[str, Fraction], ...]
    edges: tuple[tuple[str, str], ...]

    def __post_init__(self) -> None:
        names = [name for name, _ in self.vertices]
        if len(set(names)) != len(names):
            raise PlumbingError("duplicate vertex names")
        known = set(names)
        for a, b in self.edges:
            if a not in known or b not in known:
                raise PlumbingError(f"edge ({a}, {b}) references unknown vertex")
            if a == b:
                raise PlumbingError("loop edges are not supported")

    def is_tree(self) -> bool:
        if len(self.edges) != len(self.vertices) - 1:
            return False
        parent = {name: name for name, _ in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.edges:
            ra, rb = find(a), find(b)
            if ra == rb:
                return False
            parent[ra] = rb
        return True


def expand_rational_framings(g: PlumbingGraph) -> PlumbingGraph:
    """Replace every rational-framed vertex by its negative continued fraction chain."""
    vertices: list[tuple[str, Fraction]] = []
    edges = list(g.edges)
    for name, framing in g.vertices:
        if framing.denominator == 1:
            vertices.append((name, framing))
            continue
        if framing > 0:
            raise PlumbingError(f"positive rational framing {framing} on {name} is not supported")
        try:
            chain = neg_continued_fraction(framing.numerator, framing.denominator)
        except ValueError as exc:
            raise PlumbingError(f"framing {framing} on {name} has no valid expansion") from exc
        vertices.append((name, Fraction(chain.coefficients[0])))
        prev = name
        for idx, a in enumerate(chain.coefficients[1:], start=1):
            child = f"{name}.{idx}"
            vertices.append((child, Fraction(a)))
            edges.append((prev, child))
            prev = child
    return PlumbingGraph(tuple(vertices), tuple(edges))


def linking_matrix(g: PlumbingGraph) -> IntMatrix:
    """Symmetric linking matrix: framings on the diagonal, one per edge off it."""
    for name, framing in g.vertices:
        if framing.denominator != 1:
            raise PlumbingError(f"vertex {name} has rational framing {framing}; expand first")
    index = {name: i for i, (name, _) in enumerate(g.vertices)}
    n = len(g.vertices)
    rows = [[0] * n for _ in range(n)]
    for i, (_, framing) in enumerate(g.vertices):
        rows[i][i] = int(framing)
    for a, b in g.edges:
        rows[index[a]][index[b]] += 1
        rows[index[b]][index[a]] += 1
    return IntMatrix.from_rows(rows)


def h1_of_surgery(g: PlumbingGraph) -> AbelianGroupSpec:
    return cokernel(linking_matrix(expand_rational_framings(g)))


def h1_torus_bundle(a: UnimodularMatrix) -> AbelianGroupSpec:
    """H_1 of the mapping torus of a: Z from the base circle plus coker(a - I)."""
    if a.det != 1:
        raise ValueError("monodromy must have determinant 1")
    m = IntMatrix.from_rows([[a.a - 1, a.b], [a.c, a.d - 1]])
    fiber_part = cokernel(m)
    return AbelianGroupSpec(1 + fiber_part.rank, fiber_part.torsion)


def brieskorn_graph(n: int) -> PlumbingGraph:
    """Star-shaped plumbing of the n-th manifold in the family: framings 0, 2, -3, -(6n-1)/n."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return PlumbingGraph(
        (
            ("f", Fraction(0)),
            ("v1", Fraction(2)),
            ("v2", Fraction(-3)),
            ("v3", Fraction(-(6 * n - 1), n)),
        ),
        (("f", "v1"), ("f", "v2"), ("f", "v3")),
    )


def trefoil_zero_graph() -> PlumbingGraph:
    """Single 0-framed component; the linking-matrix shadow of 0-surgery on the trefoil."""
    return PlumbingGraph((("trefoil", Fraction(0)),), ())


def parse_plumbing(text: str) -> PlumbingGraph:
    vertices: list[tuple[str, Fraction]] = []
    edges: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "vertex" and len(parts) == 3:
            try:
                framing = Fraction(parts[2])
            except (ValueError, ZeroDivisionError) as exc:
                raise PlumbingError(f"line {lineno}: bad framing {parts[2]!r}") from exc
            vertices.append((parts[1], framing))
        elif parts[0] == "edge" and len(parts) == 3:
            edges.append((parts[1], parts[2]))
        else:
            raise PlumbingError(f"line {lineno}: expected 'vertex <name> <p/q>' or 'edge <a> <b>'")
    return PlumbingGraph(tuple(vertices), tuple(edges))


def format_plumbing(g: PlumbingGraph) -> str:
    lines = [f"vertex {name} {framing}" for name, framing in g.vertices]
    lines += [f"edge {a} {b}" for a, b in g.edges]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Cobordisms from 2-handle attachments


class CobordismError(ValueError):
    pass


@dataclass(frozen=True)
class SurgeryCobordism:
    """2-handle cobordism over a framed-link presentation of its incoming boundary.

    ``base`` is the symmetric linking matrix presenting H_1 of the incoming
    manifold; ``base_to_handle`` holds the linkings of handle attaching
    circles with the base components; ``handles`` is symmetric with the handle
    framings on the diagonal.  The outgoing boundary is presented by the full
    block matrix.
    """

    base: IntMatrix
    base_to_handle: IntMatrix
    handles: IntMatrix

    def __post_init__(self) -> None:
        if not self.base.is_symmetric():
            raise CobordismError("base linking matrix must be symmetric")
        if not self.handles.is_symmetric():
            raise CobordismError("handle linking matrix must be symmetric")
        if self.base_to_handle.rows != self.base.rows or self.base_to_handle.cols != self.handles.rows:
            raise CobordismError("linking block has wrong shape")

    @property
    def base_size(self) -> int:
        return self.base.rows

    @property
    def handle_count(self) -> int:
        return self.handles.rows

    def full_matrix(self) -> IntMatrix:
        top = self.base.hcat(self.base_to_handle)
        bottom = self.base_to_handle.transpose().hcat(self.handles)
        return IntMatrix.from_rows(list(top.data) + list(bottom.data))

    def wall_presentation(self) -> IntMatrix:
        """Presentation of H_1 of the cobordism on the base meridians."""
        return self.base.hcat(self.base_to_handle)

    def incoming_h1(self) -> AbelianGroupSpec:
        return cokernel(self.base)

    def outgoing_h1(self) -> AbelianGroupSpec:
        return cokernel(self.full_matrix())


def _restriction_matrix(w: SurgeryCobordism) -> IntMatrix:
    """Matrix of H^1(W) -> H^1(incoming) + H^1(outgoing) in the Hom-lattice bases."""
    hom_w = hom_lattice(w.wall_presentation())
    hom_in = hom_lattice(w.base)
    hom_out = hom_lattice(w.full_matrix())
    cols = []
    for row in hom_w.data:
        c_in = solve_in_lattice(row, hom_in)
        c_out = solve_in_lattice(tuple(row) + (0,) * w.handle_count, hom_out)
        cols.append(list(c_in) + list(c_out))
    n_target = hom_in.rows + hom_out.rows
    rows = [[cols[j][i] for j in range(len(cols))] for i in range(n_target)]
    return IntMatrix(n_target, len(cols), tuple(tuple(r) for r in rows))


def cobordism_kernel(w: SurgeryCobordism) -> AbelianGroupSpec:
    """K(W): the coefficient-kernel group H^1(dW) / im H^1(W)."""
    return cokernel(_restriction_matrix(w))


def compose_cobordisms(w0: SurgeryCobordism, w1: SurgeryCobordism) -> SurgeryCobordism:
    if w1.base.data != w0.full_matrix().data:
        raise CobordismError("cobordisms are not composable: middle presentations differ")
    m0 = w0.base_size
    upper = w0.base_to_handle.hcat(IntMatrix.from_rows([row for row in w1.base_to_handle.data[:m0]]) if m0 else IntMatrix(0, w1.handle_count, ()))
    cross = IntMatrix.from_rows([row for row in w1.base_to_handle.data[m0:]]) if w0.handle_count else IntMatrix(0, w1.handle_count, ())
    handles = IntMatrix.from_rows(
        [list(a) + list(b) for a, b in zip(w0.handles.data, cross.data)]
        + [list(b) + list(a) for b, a in zip(cross.transpose().data, w1.handles.data)]
    ) if w0.handle_count + w1.handle_count else IntMatrix(0, 0, ())
    return SurgeryCobordism(w0.base, upper, handles)


def ksequence_rank_check(w0: SurgeryCobordism, w1: SurgeryCobordism, delta_rank: int) -> bool:
    """Rank bookkeeping of the kernel exact sequence for a composite cobordism.

    Checks rank K(W) == rank K(w0) + rank K(w1) - rank(image of H^1 of the
    middle manifold) - delta_rank; delta_rank is the rank of the image of the
    Mayer-Vietoris connecting map, zero whenever that map is trivial.
    """
    w = compose_cobordisms(w0, w1)
    k_total = cobordism_kernel(w).rank
    r0 = _restriction_matrix(w0)
    r1 = _restriction_matrix(w1)
    k0 = cokernel(r0).rank
    k1 = cokernel(r1).rank

    hom_mid = hom_lattice(w0.full_matrix())
    k_mid = hom_mid.rows
    hom_out0 = hom_mid
    hom_in0 = hom_lattice(w0.base)
    hom_in1 = hom_lattice(w1.base)
    # middle classes land in the outgoing summand of w0 and the incoming one of w1
    j_cols = []
    for v in hom_mid.data:
        c_out0 = solve_in_lattice(v, hom_out0)
        c_in1 = solve_in_lattice(v, hom_in1)
        col = [0] * hom_in0.rows + list(c_out0) + list(c_in1) + [0] * (r1.rows - hom_in1.rows)
        j_cols.append(col)
    total_rows = r0.rows + r1.rows
    j = IntMatrix.from_rows([[j_cols[c][r] for c in range(k_mid)] for r in range(total_rows)]) if k_mid else IntMatrix(total_rows, 0, tuple(() for _ in range(total_rows)))
    block = IntMatrix.from_rows(
        [list(row) + [0] * r1.cols for row in r0.data] + [[0] * r0.cols + list(row) for row in r1.data]
    ) if total_rows else IntMatrix(0, r0.cols + r1.cols, ())
    image_rank = matrix_rank(j.hcat(block)) - matrix_rank(block)
    return k_total == k0 + k1 - image_rank - delta_rank


# Built-in cobordisms of the surgery construction.  The incoming manifold of
# the one-parameter family is presented by a single 0-framed component; the
# fiber-framed knot links it once, and the torsion-reducing circle is
# nullhomologous with framing -1.


def cobordism_v(n: int) -> SurgeryCobordism:
    """One 2-handle along the fiber knot with framing -n: from the bundle to the n-th sphere."""
    return SurgeryCobordism(
        IntMatrix.from_rows([[0]]),
        IntMatrix.from_rows([[1]]),
        IntMatrix.from_rows([[-n]]),
    )


def cobordism_w_inf() -> SurgeryCobordism:
    """One 2-handle along the nullhomologous torsion circle: the bundle to itself."""
    return SurgeryCobordism(
        IntMatrix.from_rows([[0]]),
        IntMatrix.from_rows([[0]]),
        IntMatrix.from_rows([[-1]]),
    )


def cobordism_v_after_w_inf(n: int) -> SurgeryCobordism:
    """The fiber-knot handle attached to the outgoing copy of the bundle inside the composite."""
    return SurgeryCobordism(
        IntMatrix.from_rows([[0, 0], [0, -1]]),
        IntMatrix.from_rows([[1], [1]]),
        IntMatrix.from_rows([[-(n + 1)]]),
    )


def cobordism_w(n: int) -> SurgeryCobordism:
    """Torsion-circle handle between consecutive homology spheres (n+1 down to n)."""
    return SurgeryCobordism(
        IntMatrix.from_rows([[0, 1], [1, -(n + 1)]]),
        IntMatrix.from_rows([[0], [1]]),
        IntMatrix.from_rows([[-1]]),
    )


def cobordism_z(n: int) -> SurgeryCobordism:
    """Composite cobordism from the bundle to the n-th sphere (torsion circle then fiber knot)."""
    return compose_cobordisms(cobordism_w_inf(), cobordism_v_after_w_inf(n))


def trivial_cobordism() -> SurgeryCobordism:
    empty = IntMatrix(0, 0, ())
    return SurgeryCobordism(empty, empty, empty)
