"""Registry of one-line acceptance verdicts, printed in the terminal summary."""

from __future__ import annotations

LINES: dict[int, str] = {}


def report(k: int, ok: bool, detail: str) -> bool:
    line = f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    LINES[k] = line
    print(line)
    return ok
