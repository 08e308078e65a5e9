import csv
import io
import json
import logging
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Union

from pydantic import BaseModel, ValidationError

from qf.core.errors import ParseError
from qf.quandles.quandle import FiniteQuandle, QuandleHom, validate_quandle

logger = logging.getLogger(__name__)


class QuandleTableModel(BaseModel):
    name: Optional[str] = None
    labels: List[str]
    table: List[List[str]]


def table_to_model(Q: FiniteQuandle) -> QuandleTableModel:
    rows = [[Q.labels[j] for j in row] for row in Q.table.tolist()]
    return QuandleTableModel(name=Q.name, labels=list(Q.labels), table=rows)


def table_to_json(Q: FiniteQuandle) -> str:
    return json.dumps(table_to_model(Q).model_dump(), sort_keys=True, indent=2)


def _from_labels(labels: List[str], rows: List[List[str]], name: Optional[str]) -> FiniteQuandle:
    pos = {l: i for i, l in enumerate(labels)}
    if len(rows) != len(labels):
        raise ParseError(f"expected {len(labels)} rows, got {len(rows)}")
    table = []
    for r, row in enumerate(rows):
        if len(row) != len(labels):
            raise ParseError(f"row {labels[r]} has {len(row)} entries, expected {len(labels)}", witness=(labels[r],))
        try:
            table.append([pos[x.strip()] for x in row])
        except KeyError as e:
            raise ParseError(f"row {labels[r]} names unknown element {e.args[0]!r}", witness=(labels[r], e.args[0]))
    return validate_quandle(table, labels, name)


def table_from_json(text: Union[str, dict]) -> FiniteQuandle:
    try:
        data = json.loads(text) if isinstance(text, str) else text
        model = QuandleTableModel.model_validate(data)
    except (json.JSONDecodeError, ValidationError) as e:
        raise ParseError(f"invalid quandle JSON: {e}")
    return _from_labels(model.labels, model.table, model.name)


def table_to_csv(Q: FiniteQuandle) -> str:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["*"] + list(Q.labels))
    for i, row in enumerate(Q.table.tolist()):
        w.writerow([Q.labels[i]] + [Q.labels[j] for j in row])
    return out.getvalue()


def table_from_csv(text: str, name: Optional[str] = None) -> FiniteQuandle:
    rows = [r for r in csv.reader(io.StringIO(text)) if r]
    if not rows:
        raise ParseError("empty quandle table")
    header = [c.strip() for c in rows[0][1:]]
    body = rows[1:]
    row_labels = [r[0].strip() for r in body]
    if row_labels != header:
        raise ParseError("row labels must repeat the header labels in the same order")
    return _from_labels(header, [r[1:] for r in body], name)


def write_table(Q: FiniteQuandle, path: Union[str, Path]) -> None:
    path = Path(path)
    text = table_to_json(Q) + "\n" if path.suffix.lower() == ".json" else table_to_csv(Q)
    path.write_text(text, encoding="utf-8")
    logger.info("wrote %s to %s", Q.describe(), path)


def read_table(path: Union[str, Path]) -> FiniteQuandle:
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".json":
        return table_from_json(text)
    return table_from_csv(text, name=path.stem)


class ExtensionMapsModel(BaseModel):
    """Projection E -> X and a set-theoretic section X -> E, both by label."""

    total: Optional[str] = None
    base: Optional[str] = None
    projection: Dict[str, str]
    section: Dict[str, str]


def section_of(projection: QuandleHom) -> tuple:
    """First preimage of every base element; requires a surjective projection."""
    first: Dict[int, int] = {}
    for i, x in enumerate(projection.mapping):
        first.setdefault(int(x), i)
    missing = [projection.target.labels[x] for x in range(len(projection.target)) if x not in first]
    if missing:
        raise ValueError(f"projection is not onto; nothing maps to {missing[0]}")
    return tuple(first[x] for x in range(len(projection.target)))


def extension_maps(projection: QuandleHom, section: Optional[Sequence[int]] = None) -> ExtensionMapsModel:
    E, X = projection.source, projection.target
    sec = tuple(section) if section is not None else section_of(projection)
    if len(sec) != len(X) or any(projection.mapping[s] != x for x, s in enumerate(sec)):
        raise ValueError("section must pick one element in the fiber over every base element")
    return ExtensionMapsModel(
        total=E.name,
        base=X.name,
        projection=projection.as_dict(),
        section={X.labels[x]: E.labels[s] for x, s in enumerate(sec)},
    )


def maps_path(table_path: Union[str, Path]) -> Path:
    path = Path(table_path)
    return path.with_name(path.stem + ".maps.json")


def write_extension_maps(maps: ExtensionMapsModel, path: Union[str, Path]) -> None:
    path = Path(path)
    path.write_text(json.dumps(maps.model_dump(), sort_keys=True, indent=2) + "\n", encoding="utf-8")
    logger.info("wrote projection and section of %s to %s", maps.total, path)


def read_extension_maps(path: Union[str, Path]) -> ExtensionMapsModel:
    try:
        return ExtensionMapsModel.model_validate(json.loads(Path(path).read_text(encoding="utf-8")))
    except (json.JSONDecodeError, ValidationError) as e:
        raise ParseError(f"invalid extension maps JSON: {e}")
