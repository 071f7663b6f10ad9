"""Upper bounds n[z, q; 6] <= 4q^2 - 4 given by H_{q,p}, and the reference
table of best known bounds as static reference data."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from importlib import resources
from typing import Iterable

from .construction import InvalidQError, check_q, verify_construction

CSV_HEADER = ("q", "z", "r", "girth", "order", "verified", "source")
SOURCE = "H_{q,p}"


@dataclass(frozen=True)
class BoundRow:
    q: int
    z: int
    r: int
    girth: int
    upper_bound: int


def bound_for(q: int, force: bool = False) -> BoundRow:
    """Arc degree and order bound for prime power q, straight from the
    closed forms: z = q/4 for even q, (q-1)/4 when (q-3)/2 is odd,
    (q-3)/4 otherwise (integer parts)."""
    check_q(q, force)
    if q % 2 == 0:
        z = q // 4
    elif ((q - 3) // 2) % 2 == 1:
        z = (q - 1) // 4
    else:
        z = (q - 3) // 4
    return BoundRow(q, z, q, 6, 4 * q * q - 4)


def table_rows(
    q_list: Iterable[int], verify: bool = False, force: bool = False, workers: int = 1
) -> list[tuple[str, ...]]:
    """One row per q in CSV_HEADER order.  Invalid q values give an error
    row instead of raising."""
    rows = []
    for q in q_list:
        try:
            b = bound_for(q, force)
        except (InvalidQError, ValueError) as exc:
            rows.append((str(q), "", "", "", "", "error", str(exc)))
            continue
        verified = ""
        if verify:
            ok = verify_construction(q, force=force, workers=workers).claims_pass
            verified = "pass" if ok else "fail"
        rows.append((str(b.q), str(b.z), str(b.r), str(b.girth), str(b.upper_bound), verified, SOURCE))
    return rows


def render_table(rows: list[tuple[str, ...]], fmt: str = "csv") -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        w.writerows(rows)
        return buf.getvalue()
    if fmt == "text":
        table = [CSV_HEADER, *rows]
        widths = [max(len(r[i]) for r in table) for i in range(len(CSV_HEADER))]
        return "".join(
            "  ".join(cell.rjust(wd) for cell, wd in zip(r, widths)).rstrip() + "\n" for r in table
        )
    raise ValueError(f"unknown table format {fmt!r}")


def emit_table(
    q_list: Iterable[int], verify: bool = False, fmt: str = "csv", force: bool = False, workers: int = 1
) -> str:
    return render_table(table_rows(q_list, verify, force, workers), fmt)


def reference_table() -> list[dict[str, object]]:
    """The reference table of best known bounds (lower bounds are reference data only)."""
    text = resources.files(__package__).joinpath("data/table1.csv").read_text()
    out = []
    for rec in csv.DictReader(io.StringIO(text)):
        row: dict[str, object] = dict(rec)
        for key in ("arcs", "edges", "girth", "lower_bound", "exact", "upper_bound"):
            row[key] = int(rec[key]) if rec[key] else None
        row["starred"] = rec["starred"] == "true"
        out.append(row)
    return out
