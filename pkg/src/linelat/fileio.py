"""Text formats: graphs, oriented graphs, tessellation faces, matrices, CSV.

Graph format: first line "n m", then m lines "u v" with 0-based ids, u < v,
sorted lexicographically.  Oriented graphs add a third column per edge, "0"
when the first listed endpoint is the foot e- and "1" otherwise.  Comment
lines start with '#'.  Tessellation balls append "faces F" and F lines of k
vertex ids.  All numeric formatting is locale-independent ('.' decimal).
"""
from __future__ import annotations

import json

import numpy as np

from .errors import ParseError
from .graphs import Graph, OrientedGraph


def _fmt(x: float) -> str:
    return format(float(x), ".12g")


def graph_to_text(g: Graph, comments: list[str] | None = None) -> str:
    order = sorted(range(g.m), key=lambda i: g.edges[i])
    lines = [f"{g.n} {g.m}"]
    lines += [f"{g.edges[i][0]} {g.edges[i][1]}" for i in order]
    lines += [f"# {c}" for c in (comments or [])]
    return "\n".join(lines) + "\n"


def oriented_to_text(og: OrientedGraph, comments: list[str] | None = None) -> str:
    g = og.base
    order = sorted(range(g.m), key=lambda i: g.edges[i])
    lines = [f"{g.n} {g.m}"]
    for i in order:
        u, v = g.edges[i]
        flag = 0 if og.heads[i] == v else 1
        lines.append(f"{u} {v} {flag}")
    lines += [f"# {c}" for c in (comments or [])]
    return "\n".join(lines) + "\n"


def ball_to_text(ball) -> str:
    """Graph format plus the face section of a TessellationBall."""
    lines = [graph_to_text(ball.graph).rstrip("\n")]
    lines.append(f"faces {len(ball.faces)}")
    lines += [" ".join(str(v) for v in f) for f in ball.faces]
    return "\n".join(lines) + "\n"


def _content_lines(text: str) -> list[str]:
    return [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.lstrip().startswith("#")
    ]


def graph_from_text(text: str):
    """Parse the graph format; returns Graph, OrientedGraph, or
    (Graph, faces) depending on the columns and sections present."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty graph file")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(f"bad header line: {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise ParseError(f"bad header line: {lines[0]!r}") from exc
    if len(lines) < 1 + m:
        raise ParseError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    flags = []
    for ln in lines[1 : 1 + m]:
        parts = ln.split()
        if len(parts) not in (2, 3):
            raise ParseError(f"bad edge line: {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ParseError(f"bad edge line: {ln!r}") from exc
        if u >= v:
            raise ParseError(f"edge line not in u < v form: {ln!r}")
        edges.append((u, v))
        if len(parts) == 3:
            if parts[2] not in ("0", "1"):
                raise ParseError(f"bad orientation flag: {ln!r}")
            flags.append(int(parts[2]))
    if flags and len(flags) != m:
        raise ParseError("orientation column present on only some edges")
    try:
        g = Graph(n, edges)
    except Exception as exc:
        raise ParseError(str(exc)) from exc

    rest = lines[1 + m :]
    if rest:
        fh = rest[0].split()
        if len(fh) != 2 or fh[0] != "faces":
            raise ParseError(f"unexpected trailing line: {rest[0]!r}")
        nf = int(fh[1])
        if len(rest) != 1 + nf:
            raise ParseError(f"expected {nf} face lines, found {len(rest) - 1}")
        faces = tuple(tuple(int(x) for x in ln.split()) for ln in rest[1:])
        for f in faces:
            for v in f:
                if not 0 <= v < n:
                    raise ParseError(f"face vertex {v} out of range")
        if flags:
            raise ParseError("faces section not supported for oriented graphs")
        return g, faces
    if flags:
        heads = tuple(
            e[1] if f == 0 else e[0] for e, f in zip(g.edges, flags)
        )
        return OrientedGraph(g, heads)
    return g


def write_graph(path, obj, comments=None) -> None:
    if isinstance(obj, OrientedGraph):
        text = oriented_to_text(obj, comments)
    elif isinstance(obj, Graph):
        text = graph_to_text(obj, comments)
    else:  # TessellationBall
        text = ball_to_text(obj)
    with open(path, "w", encoding="ascii") as fh:
        fh.write(text)


def read_graph(path):
    with open(path, encoding="ascii") as fh:
        return graph_from_text(fh.read())


def matrix_to_text(msm) -> str:
    """Coordinate format: "dim nnz" then "i j v" lines, upper triangle only."""
    lines = [f"{msm.dim} {msm.nnz}"]
    for i, j, v in zip(msm.rows, msm.cols, msm.vals):
        val = str(int(v)) if float(v).is_integer() else _fmt(v)
        lines.append(f"{i} {j} {val}")
    return "\n".join(lines) + "\n"


def matrix_from_text(text: str):
    from .operators import SparseSymMatrix

    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty matrix file")
    dim, nnz = (int(x) for x in lines[0].split())
    if len(lines) != 1 + nnz:
        raise ParseError(f"expected {nnz} entries, found {len(lines) - 1}")
    rows, cols, vals = [], [], []
    for ln in lines[1:]:
        i, j, v = ln.split()
        rows.append(int(i))
        cols.append(int(j))
        vals.append(float(v))
    vals_arr = np.array(vals)
    if np.all(vals_arr == np.round(vals_arr)):
        vals_arr = vals_arr.astype(np.int64)
    return SparseSymMatrix(dim, rows, cols, vals_arr)


def spectrum_to_csv(eigenvalues) -> str:
    lines = ["index,eigenvalue"]
    lines += [f"{i},{_fmt(ev)}" for i, ev in enumerate(eigenvalues)]
    return "\n".join(lines) + "\n"


def dos_to_csv(hist) -> str:
    lines = ["bin_center,count,fraction"]
    lines += [
        f"{_fmt(c)},{int(cnt)},{_fmt(fr)}" for c, cnt, fr in hist.bins
    ]
    return "\n".join(lines) + "\n"


def bands_to_csv(bs) -> str:
    nbands = bs.bands.shape[1]
    header = "k_index,k_frac1,k_frac2," + ",".join(
        f"E_{j + 1}" for j in range(nbands)
    )
    lines = [header]
    for i, (k, row) in enumerate(zip(bs.kpoints, bs.bands)):
        vals = ",".join(_fmt(e) for e in row)
        lines.append(f"{i},{_fmt(k[0])},{_fmt(k[1])},{vals}")
    return "\n".join(lines) + "\n"


def state_to_text(state) -> str:
    """Edge-amplitude export with a header naming the flavor and cycle."""
    lines = [
        f"# flavor {state.flavor} cycle " + " ".join(str(v) for v in state.cycle)
    ]
    vec = state.vector()
    for e in sorted(state.signs):
        lines.append(f"{e} {_fmt(vec[e])}")
    return "\n".join(lines) + "\n"


def write_json(path, payload: dict) -> None:
    with open(path, "w", encoding="ascii") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
