"""Shared, cached test subjects."""

from __future__ import annotations

from functools import cache

from omcat.fixtures import efm8_program, efm8_table, figure1_program, u1_2_line_program
from omcat.om_construct import random_program


def suite_shape(k: int) -> tuple[int, int]:
    """(n, d) for the k-th program of the random suite: n in 3..7, d in 1..3."""
    return 3 + k % 5, 1 + (k // 5) % 3


@cache
def random_suite(count: int = 50) -> tuple:
    out = []
    for k in range(count):
        n, d = suite_shape(k)
        out.append(random_program(n, d, seed=k))
    return tuple(out)


@cache
def figure1():
    return figure1_program()


@cache
def u12():
    return u1_2_line_program()


@cache
def efm8():
    return efm8_program()


@cache
def efm8_mu():
    return efm8_table()


def named_programs() -> dict:
    return {"u1_2_line": u12(), "figure1": figure1(), "efm8": efm8()}
