"""Shared graph builders and enumeration helpers for the test suite."""

from __future__ import annotations

import contextlib
import io
import sys
from itertools import combinations
from typing import Iterator

from cographkit import Graph


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, list(combinations(range(n), 2)))


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices, by edge-subset bitmask order."""
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])


def clique_with_pendant_path(k: int) -> Graph:
    """Complete graph on 0..k-1 plus the pendant path (k-1)-k-(k+1)."""
    edges = list(combinations(range(k), 2)) + [(k - 1, k), (k, k + 1)]
    return Graph(k + 2, edges)


def run_cli(argv: list[str], stdin: str = "") -> tuple[int, str, str]:
    """Invoke the CLI in-process; returns (exit_code, stdout, stderr)."""
    from cographkit.cli import main

    out, err = io.StringIO(), io.StringIO()
    old_stdin = sys.stdin
    sys.stdin = io.StringIO(stdin)
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = main(argv)
    finally:
        sys.stdin = old_stdin
    return code, out.getvalue(), err.getvalue()
