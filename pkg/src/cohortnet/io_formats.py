"""File formats: ingestion of roster/edge/adjacency tables and all exports.

Everything here is a pure bytes/str transform; callers own the file
handles. Output is UTF-8 with LF line endings and deterministically
ordered, so identical inputs always produce byte-identical files. Input
tolerates CRLF. All parse errors carry a 1-based line locator.
"""

from __future__ import annotations

import csv
import io
import json
import xml.etree.ElementTree as ET
from collections.abc import Iterable, Mapping, Sequence
from enum import Enum

from .centrality import CentralityScores, Measure
from .community import ModularityCurve, Partition
from .errors import (
    BadHeader,
    DataError,
    DuplicateId,
    InvalidGender,
    InvalidId,
    InvalidMark,
    MissingMark,
    NonBinaryEntry,
    NonSquareMatrix,
    SelfLoopEntry,
    UnassignedNode,
    UnknownNodeInPartition,
)
from .intervention import AssignmentPlan, GroupProfile, Role
from .model import Cohort, FriendshipNetwork, Gender, Student, make_cohort
from .stats import DistributionSummary, GroupComparison

# Cluster colors, indexed by cluster id modulo the palette size. The first
# entries follow the usual sociogram conventions for this kind of figure.
PALETTE = (
    "green", "pink", "red", "lightgreen", "brown", "grey", "black",
    "yellow", "cyan", "orange", "purple", "blue", "magenta", "gold", "navy",
)

MARK_COLUMN_PREFIX = "mark_"


class GraphFormat(str, Enum):
    DOT = "dot"
    GRAPHML = "graphml"


def _text(data: bytes | str) -> str:
    return data.decode("utf-8") if isinstance(data, bytes) else data


def _rows(data: bytes | str) -> list[tuple[int, list[str]]]:
    """CSV rows with their 1-based line numbers; blank lines are skipped."""
    reader = csv.reader(_text(data).splitlines())
    return [(i, row) for i, row in enumerate(reader, start=1) if row]


def _parse_id(cell: str, line: int) -> int:
    try:
        value = int(cell)
    except ValueError:
        raise InvalidId(f"id {cell!r} is not an integer", line=line) from None
    if value < 0:
        raise InvalidId(f"id {value} must be non-negative", line=line)
    return value


# -- roster -------------------------------------------------------------------

def parse_roster(data: bytes | str) -> list[Student]:
    """Parse `id,gender,mark_<semester>...` rows into students."""
    rows = _rows(data)
    if not rows:
        raise BadHeader("empty roster file", line=1)
    header_line, header = rows[0]
    if len(header) < 2 or header[0] != "id" or header[1] != "gender":
        raise BadHeader(
            f"expected header starting with 'id,gender', got {','.join(header)!r}",
            line=header_line,
        )
    semesters = []
    for col in header[2:]:
        if not col.startswith(MARK_COLUMN_PREFIX) or col == MARK_COLUMN_PREFIX:
            raise BadHeader(f"mark column {col!r} must look like 'mark_<semester>'",
                            line=header_line)
        semesters.append(col[len(MARK_COLUMN_PREFIX):])
    if len(set(semesters)) != len(semesters):
        raise BadHeader("duplicate mark column", line=header_line)

    students: list[Student] = []
    seen: set[int] = set()
    for line, row in rows[1:]:
        if len(row) != len(header):
            raise DataError(
                f"expected {len(header)} fields, got {len(row)}", line=line
            )
        sid = _parse_id(row[0], line)
        if sid in seen:
            raise DuplicateId(f"duplicate student id {sid}", line=line)
        seen.add(sid)
        try:
            gender = Gender(row[1])
        except ValueError:
            raise InvalidGender(
                f"gender {row[1]!r} is not one of M, F, U", line=line
            ) from None
        marks: dict[str, float] = {}
        for semester, cell in zip(semesters, row[2:]):
            if cell == "":
                continue
            try:
                mark = float(cell)
            except ValueError:
                raise InvalidMark(f"mark {cell!r} is not a number", line=line) from None
            if not 0.0 <= mark <= 100.0:
                raise InvalidMark(f"mark {mark!r} outside [0, 100]", line=line)
            marks[semester] = mark
        students.append(Student(id=sid, gender=gender, marks=marks))
    return students


def export_roster(students: Sequence[Student]) -> bytes:
    semesters = sorted({sem for s in students for sem in s.marks})
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["id", "gender"] + [MARK_COLUMN_PREFIX + s for s in semesters])
    for student in sorted(students, key=lambda s: s.id):
        row = [str(student.id), student.gender.value]
        row += [
            repr(student.marks[sem]) if sem in student.marks else ""
            for sem in semesters
        ]
        writer.writerow(row)
    return buf.getvalue().encode("utf-8")


# -- edge list ----------------------------------------------------------------

def parse_edges(data: bytes | str) -> list[tuple[int, int]]:
    """Parse `source,target` rows into a directed nomination list."""
    rows = _rows(data)
    if not rows:
        raise BadHeader("empty edge file", line=1)
    header_line, header = rows[0]
    if header != ["source", "target"]:
        raise BadHeader(
            f"expected header 'source,target', got {','.join(header)!r}",
            line=header_line,
        )
    edges = []
    for line, row in rows[1:]:
        if len(row) != 2:
            raise DataError(f"expected 2 fields, got {len(row)}", line=line)
        src = _parse_id(row[0], line)
        tgt = _parse_id(row[1], line)
        if src == tgt:
            raise SelfLoopEntry(f"self-nomination ({src}, {tgt})", line=line)
        edges.append((src, tgt))
    return edges


def export_edges(net: FriendshipNetwork) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["source", "target"])
    for src, tgt in sorted(net.edges):
        writer.writerow([str(src), str(tgt)])
    return buf.getvalue().encode("utf-8")


# -- adjacency matrix ---------------------------------------------------------

def parse_adjacency(data: bytes | str) -> list[tuple[int, int]]:
    """Parse a square 0/1 matrix; entry (r, c) = 1 yields the edge (r, c)."""
    rows = _rows(data)
    if not rows:
        raise BadHeader("empty adjacency file", line=1)
    header_line, header = rows[0]
    if len(header) < 2:
        raise BadHeader("adjacency header needs at least one id column", line=header_line)
    ids = [_parse_id(cell, header_line) for cell in header[1:]]
    if len(set(ids)) != len(ids):
        raise BadHeader("duplicate id in adjacency header", line=header_line)
    n = len(ids)
    body = rows[1:]
    if len(body) != n:
        raise NonSquareMatrix(
            f"{n} id columns but {len(body)} data rows", line=body[-1][0] if body else header_line
        )
    edges = []
    for pos, (line, row) in enumerate(body):
        if len(row) != n + 1:
            raise NonSquareMatrix(f"expected {n + 1} fields, got {len(row)}", line=line)
        row_id = _parse_id(row[0], line)
        if row_id != ids[pos]:
            raise BadHeader(
                f"row label {row_id} does not match header order (expected {ids[pos]})",
                line=line,
            )
        for col, cell in enumerate(row[1:]):
            if cell not in ("0", "1"):
                raise NonBinaryEntry(
                    f"column {col + 2}: entry {cell!r} is not 0 or 1", line=line
                )
            if cell == "1":
                if ids[col] == row_id:
                    raise SelfLoopEntry(f"diagonal entry for id {row_id} is 1", line=line)
                edges.append((row_id, ids[col]))
    return edges


def export_adjacency(net: FriendshipNetwork) -> bytes:
    ids = sorted(net.nodes)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([""] + [str(i) for i in ids])
    for src in ids:
        out = net.out_adjacency[src]
        writer.writerow([str(src)] + ["1" if tgt in out else "0" for tgt in ids])
    return buf.getvalue().encode("utf-8")


# -- cohort container ---------------------------------------------------------

def save_cohort(cohort: Cohort) -> bytes:
    doc = {
        "label": cohort.network.label,
        "students": [
            {
                "id": s.id,
                "gender": s.gender.value,
                "marks": {sem: s.marks[sem] for sem in sorted(s.marks)},
            }
            for s in sorted(cohort.students, key=lambda s: s.id)
        ],
        "edges": [list(e) for e in sorted(cohort.network.edges)],
    }
    return (json.dumps(doc, indent=2, sort_keys=True) + "\n").encode("utf-8")


def load_cohort(data: bytes | str) -> Cohort:
    try:
        doc = json.loads(_text(data))
    except json.JSONDecodeError as exc:
        raise DataError(f"cohort file is not valid JSON: {exc}") from None
    try:
        label = doc["label"]
        students = [
            Student(id=int(s["id"]), gender=Gender(s["gender"]),
                    marks={str(k): float(v) for k, v in s.get("marks", {}).items()})
            for s in doc["students"]
        ]
        edges = [(int(s), int(t)) for s, t in doc["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise DataError(f"cohort file has an unexpected shape: {exc}") from None
    return make_cohort(students, edges, label)


# -- graph export -------------------------------------------------------------

def _node_width(mark: float) -> float:
    return 0.2 + 0.8 * (mark / 100.0)


def check_coverage(
    net: FriendshipNetwork,
    partition: Partition | None,
    marks: Mapping[int, float] | None,
) -> None:
    if partition is not None:
        extra = set(partition.assignment) - set(net.nodes)
        if extra:
            raise UnknownNodeInPartition(
                f"partition mentions unknown node(s) {sorted(extra)}"
            )
        missing = set(net.nodes) - set(partition.assignment)
        if missing:
            raise UnassignedNode(f"partition misses node(s) {sorted(missing)}")
    if marks is not None:
        unmarked = set(net.nodes) - set(marks)
        if unmarked:
            raise MissingMark(f"no mark for node(s) {sorted(unmarked)}")


_DOT_SHAPES = {Gender.MALE: "circle", Gender.FEMALE: "square", Gender.UNSPECIFIED: "ellipse"}


def export_graph(
    net: FriendshipNetwork,
    fmt: GraphFormat,
    *,
    genders: Mapping[int, Gender] | None = None,
    marks: Mapping[int, float] | None = None,
    partition: Partition | None = None,
) -> bytes:
    """Serialize the directed graph with sociogram styling/attributes.

    DOT encodes gender as node shape (circle = male, square = female),
    mark as node width 0.2 + 0.8 * mark/100, and cluster as fill color
    from the fixed palette. GraphML carries the same attributes as typed
    node properties and leaves styling to the renderer.
    """
    check_coverage(net, partition, marks)
    if fmt is GraphFormat.DOT:
        return _export_dot(net, genders, marks, partition)
    return _export_graphml(net, genders, marks, partition)


def _export_dot(net, genders, marks, partition) -> bytes:
    lines = [f'digraph "{net.label}" {{']
    for v in sorted(net.nodes):
        attrs = []
        if genders is not None and v in genders:
            attrs.append(f"shape={_DOT_SHAPES[genders[v]]}")
        if marks is not None:
            attrs.append(f"width={_node_width(marks[v]):.2f}")
            attrs.append("fixedsize=true")
        if partition is not None:
            color = PALETTE[partition.assignment[v] % len(PALETTE)]
            attrs.append("style=filled")
            attrs.append(f"fillcolor={color}")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {v}{suffix};")
    for src, tgt in sorted(net.edges):
        lines.append(f"  {src} -> {tgt};")
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def _export_graphml(net, genders, marks, partition) -> bytes:
    root = ET.Element("graphml", xmlns="http://graphml.graphdrawing.org/xmlns")
    keys = []
    if genders is not None:
        keys.append(("d_gender", "gender", "string"))
    if marks is not None:
        keys.append(("d_mark", "mark", "double"))
    if partition is not None:
        keys.append(("d_cluster", "cluster", "int"))
    for key_id, name, typ in keys:
        ET.SubElement(
            root, "key", id=key_id, attrib={"for": "node"},
            **{"attr.name": name, "attr.type": typ},
        )
    graph = ET.SubElement(root, "graph", id=net.label, edgedefault="directed")
    for v in sorted(net.nodes):
        node = ET.SubElement(graph, "node", id=str(v))
        if genders is not None and v in genders:
            ET.SubElement(node, "data", key="d_gender").text = genders[v].value
        if marks is not None:
            ET.SubElement(node, "data", key="d_mark").text = repr(float(marks[v]))
        if partition is not None:
            ET.SubElement(node, "data", key="d_cluster").text = str(partition.assignment[v])
    for src, tgt in sorted(net.edges):
        ET.SubElement(graph, "edge", source=str(src), target=str(tgt))
    ET.indent(root)
    return ET.tostring(root, encoding="UTF-8", xml_declaration=True) + b"\n"


# -- analysis artifacts -------------------------------------------------------

def _num(x: float) -> str:
    return repr(float(x))


def scores_csv(scores: CentralityScores) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if scores.measure is Measure.DEGREE:
        assert scores.in_scores is not None and scores.out_scores is not None
        writer.writerow(["node", "in_degree", "out_degree", "total"])
        for v in sorted(scores.scores):
            writer.writerow(
                [str(v), str(int(scores.in_scores[v])), str(int(scores.out_scores[v])),
                 str(int(scores.scores[v]))]
            )
    else:
        writer.writerow(["node", "score"])
        for v in sorted(scores.scores):
            writer.writerow([str(v), _num(scores.scores[v])])
    return buf.getvalue().encode("utf-8")


def representatives_csv(ranked: Sequence[int], scores: Mapping[int, float]) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["rank", "node", "score"])
    for rank, node in enumerate(ranked, start=1):
        writer.writerow([str(rank), str(node), _num(scores[node])])
    return buf.getvalue().encode("utf-8")


def partition_csv(p: Partition) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["node", "cluster"])
    for node in sorted(p.assignment):
        writer.writerow([str(node), str(p.assignment[node])])
    return buf.getvalue().encode("utf-8")


def parse_partition_csv(data: bytes | str) -> Partition:
    """Read a node,cluster table; cluster labels are renumbered densely."""
    rows = _rows(data)
    if not rows:
        raise BadHeader("empty partition file", line=1)
    header_line, header = rows[0]
    if header != ["node", "cluster"]:
        raise BadHeader(
            f"expected header 'node,cluster', got {','.join(header)!r}", line=header_line
        )
    raw: dict[int, int] = {}
    for line, row in rows[1:]:
        if len(row) != 2:
            raise DataError(f"expected 2 fields, got {len(row)}", line=line)
        node = _parse_id(row[0], line)
        if node in raw:
            raise DuplicateId(f"node {node} assigned twice", line=line)
        raw[node] = _parse_id(row[1], line)
    if not raw:
        raise DataError("partition file has no assignments")
    dense = {cid: i for i, cid in enumerate(sorted(set(raw.values())))}
    return Partition(assignment={v: dense[c] for v, c in raw.items()}, k=len(dense))


def curve_csv(curve: ModularityCurve) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["k", "Q"])
    for k, q in curve.points:
        writer.writerow([str(k), _num(q)])
    return buf.getvalue().encode("utf-8")


def clusters_csv(perfs: Iterable) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["cluster", "size", "mean_mark", "class"])
    for c in perfs:
        writer.writerow([str(c.cluster), str(len(c.members)), _num(c.mean_mark), c.perf.value])
    return buf.getvalue().encode("utf-8")


def plan_csv(plan: AssignmentPlan) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["student", "group", "role"])
    table = []
    for g in plan.groups:
        table.extend((m, g.index, g.roles[m].value) for m in g.members)
    for student, group, role in sorted(table):
        writer.writerow([str(student), str(group), role])
    return buf.getvalue().encode("utf-8")


def plan_report(
    plan: AssignmentPlan, profiles: Sequence[GroupProfile], semester: str
) -> str:
    total = sum(len(g.members) for g in plan.groups)
    lines = [f"assignment plan: {len(plan.groups)} groups, {total} students"]
    by_index = {p.index: p for p in profiles}
    for g in plan.groups:
        p = by_index[g.index]
        flag = ", overflow" if g.overflow else ""
        lines.append(
            f"group {g.index} (anchor cluster {g.anchor_cluster}, "
            f"{g.anchor_perf.value}{flag}): size {p.size}, "
            f"mean {semester} mark {p.mean_mark:.1f}, "
            f"{p.high_origin} high-origin, {p.dispersed} dispersed"
        )
        preserved = [m for m in g.members if g.roles[m] is Role.PRESERVED]
        dispersed = [m for m in g.members if g.roles[m] is Role.DISPERSED]
        lines.append("  preserved: " + (" ".join(map(str, preserved)) or "-"))
        lines.append("  dispersed: " + (" ".join(map(str, dispersed)) or "-"))
    if plan.notes:
        lines.append("notes:")
        lines.extend(f"  - {note}" for note in plan.notes)
    return "\n".join(lines) + "\n"


def summary_csv(s: DistributionSummary) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "mean", "median", "min", "max", "stddev", "skewness", "shape"])
    writer.writerow([
        str(s.n), _num(s.mean), _num(s.median), _num(s.minimum), _num(s.maximum),
        _num(s.stddev) if s.stddev is not None else "",
        _num(s.skew) if s.skew is not None else "",
        s.shape.value if s.shape is not None else "",
    ])
    return buf.getvalue().encode("utf-8")


def histogram_csv(s: DistributionSummary) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["bin_lower", "count"])
    for lower, count in s.histogram:
        writer.writerow([_num(lower), str(count)])
    return buf.getvalue().encode("utf-8")


def _summary_block(title: str, s: DistributionSummary) -> list[str]:
    lines = [
        f"{title}: n={s.n}, mean={s.mean:.2f}, median={s.median:.2f}, "
        f"min={s.minimum:.1f}, max={s.maximum:.1f}"
    ]
    if s.stddev is not None:
        lines.append(f"  stddev={s.stddev:.2f}")
    if s.skew is not None and s.shape is not None:
        lines.append(f"  skewness={s.skew:.3f} ({s.shape.value})")
    return lines


def report_text(
    summary_a: DistributionSummary,
    label_a: str,
    comparison: GroupComparison | None = None,
    label_b: str | None = None,
) -> str:
    lines = _summary_block(label_a, summary_a)
    if comparison is not None and label_b is not None:
        lines += _summary_block(label_b, comparison.summary_b)
        lines.append(
            f"mean difference ({label_a} - {label_b}): {comparison.mean_difference:+.3f}"
        )
    return "\n".join(lines) + "\n"
